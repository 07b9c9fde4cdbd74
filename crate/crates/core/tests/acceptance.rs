//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;
use wofc::betti::BettiDiagram;
use wofc::covers::{well_ordered_order, SearchStrategy};
use wofc::forest::{cover_certificates, lcm_lattice, top_betti_from_leaf, top_betti_recursive_with};
use wofc::graphs::{
    bouquet_decomposition, bouquets_from_wofc, is_strongly_disjoint, strongly_disjoint_designation,
    wofc_from_bouquets,
};
use wofc::lyubeznik::{barile_witnesses, boundary_matrices, d_squared_vanishes};
use wofc::oracle::{boundary_squares_to_zero, taylor_lower, AbstractComplex};
use wofc::parse::parse_graph;
use wofc::{
    betti_oracle, find_well_ordered_covers, is_well_ordered, lyubeznik_complex, minimal_facet_covers,
    multigraded_betti, regularity_lower_bounds, BettiTable, BitSet, Caps, GeneratorOrder, SimplicialComplex,
};

use common::{complex, forest_corpus, random_complexes, random_graphs, tree};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn caps() -> Caps {
    Caps::default()
}

struct ForestRun {
    instances: Vec<(SimplicialComplex, BettiTable, BettiTable)>,
    elapsed: Duration,
}

/// Forest corpus with both tables, computed once and shared.
fn forest_run() -> &'static ForestRun {
    static RUN: OnceLock<ForestRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let instances = forest_corpus()
            .into_iter()
            .map(|cx| {
                let ours = multigraded_betti(&cx, &caps()).expect("corpus holds forests");
                let oracle = betti_oracle(&cx, &caps()).expect("within caps");
                (cx, ours, oracle)
            })
            .collect();
        ForestRun {
            instances,
            elapsed: start.elapsed(),
        }
    })
}

fn complex_corpus() -> &'static Vec<(SimplicialComplex, BettiTable)> {
    static CORPUS: OnceLock<Vec<(SimplicialComplex, BettiTable)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        random_complexes(300)
            .into_iter()
            .map(|cx| {
                let t = betti_oracle(&cx, &caps()).expect("within caps");
                (cx, t)
            })
            .collect()
    })
}

fn golden_example() -> Outcome {
    let start = Instant::now();
    let g = tree();
    let table = multigraded_betti(&g, &caps()).map_err(|e| e.to_string())?;
    let diagram = BettiDiagram::from_table(&table);
    let expected = [
        "      |  0  1  2  3",
        "-------------------",
        "Total |  1  4  4  1",
        "-------------------",
        "    0 |  1 -- -- --",
        "    1 | -- -- -- --",
        "    2 | --  4  3 --",
        "    3 | -- --  1  1",
    ]
    .map(|l| format!("{l}\n"))
    .concat();
    let rendered = diagram.render();
    ensure!(rendered == expected, "diagram differs:\n{rendered}");
    ensure!(diagram.totals() == vec![1, 4, 4, 1], "totals {:?}", diagram.totals());
    for (i, j, v) in [(1, 3, 4), (2, 4, 3), (2, 5, 1), (3, 6, 1)] {
        ensure!(diagram.get(i, j) == v, "b_{i},{j} = {}", diagram.get(i, j));
    }
    let expected: BTreeSet<(String, usize)> = [
        ("x1x2x3", 1),
        ("x1x3x4", 1),
        ("x3x4x5", 1),
        ("x3x5x6", 1),
        ("x3x4x5x6", 2),
        ("x1x3x4x5", 2),
        ("x1x2x3x5x6", 2),
        ("x1x2x3x4", 2),
        ("x1x2x3x4x5x6", 3),
    ]
    .into_iter()
    .map(|(m, i)| (m.to_string(), i))
    .collect();
    let found: BTreeSet<(String, usize)> = table
        .iter()
        .map(|(m, i, rank)| {
            assert_eq!(rank, 1);
            (g.monomial(m), i)
        })
        .collect();
    ensure!(found == expected, "multidegrees {found:?}");
    let again = BettiDiagram::from_table(&multigraded_betti(&tree(), &caps()).unwrap()).render();
    ensure!(again == rendered, "rendering is not stable");
    let json_a = serde_json::to_string(&table.to_json(&g)).unwrap();
    let json_b = serde_json::to_string(&multigraded_betti(&g, &caps()).unwrap().to_json(&g)).unwrap();
    ensure!(json_a == json_b, "JSON is not stable");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("diagram and 9 multidegrees reproduced in {elapsed:.1?}"))
}

fn triangle_example() -> Outcome {
    let start = Instant::now();
    let t = complex("x y\ny z\nx z\n");
    let oracle = betti_oracle(&t, &caps()).map_err(|e| e.to_string())?;
    ensure!(oracle.get(t.vertices(), 2) == 2, "b_2,xyz = {}", oracle.get(t.vertices(), 2));
    let covers = find_well_ordered_covers(&t, 20).map_err(|e| e.to_string())?;
    ensure!(
        covers.iter().any(|c| c.cardinality == 2),
        "no cover of cardinality 2: {covers:?}"
    );
    let certs = cover_certificates(&t, 20).map_err(|e| e.to_string())?;
    for c in &certs {
        ensure!(
            oracle.get(c.degree, c.cardinality) >= 1,
            "certificate at {} index {} not confirmed",
            t.monomial(c.degree),
            c.cardinality
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "b_2,xyz = 2, cover of cardinality 2 found, {} certificates confirmed in {elapsed:.1?}",
        certs.len()
    ))
}

fn lyubeznik_example() -> Outcome {
    let g = tree();
    let order = GeneratorOrder::identity(4);
    let lambda = lyubeznik_complex(&g, &order, 16).map_err(|e| e.to_string())?;
    let expected = vec![BitSet::from_indices([0, 1, 2]), BitSet::from_indices([0, 2, 3])];
    ensure!(lambda.facets() == expected.as_slice(), "facets {:?}", lambda.facets());
    ensure!(!lambda.contains(BitSet::from_indices([1, 3])), "{{F2,F4}} accepted");
    let witnesses = barile_witnesses(&g, &order, 16).map_err(|e| e.to_string())?;
    let w = witnesses
        .iter()
        .find(|w| w.face == expected[0])
        .ok_or("{F1,F2,F3} is not a witness")?;
    ensure!(w.index == 3 && w.multidegree == g.vertices(), "witness {w:?}");
    let oracle = betti_oracle(&g, &caps()).unwrap();
    ensure!(oracle.get(g.vertices(), 3) >= 1, "oracle disagrees");
    Ok("facets {F1,F2,F3}, {F1,F3,F4}; {F2,F4} rejected; b_3,6 certified".into())
}

fn oracle_equivalence() -> Outcome {
    let run = forest_run();
    for (cx, ours, oracle) in &run.instances {
        ensure!(ours == oracle, "mismatch on {cx:?}: {ours:?} vs {oracle:?}");
    }
    ensure!(run.elapsed < Duration::from_secs(300), "took {:?}", run.elapsed);
    let exhaustive = run.instances.len() - 500;
    Ok(format!(
        "{} forests ({exhaustive} exhaustive + 500 random) agree in {:.1?}",
        run.instances.len(),
        run.elapsed
    ))
}

fn recursion_consistency() -> Outcome {
    let mut runs = 0;
    for (cx, ours, _) in &forest_run().instances {
        let expected = match ours.indices_at(cx.vertices()).as_slice() {
            [] => None,
            [i] => Some(*i),
            more => return Err(format!("several indices {more:?} on {cx:?}")),
        };
        if cx.is_connected() {
            for leaf in cx.leaves() {
                let got = top_betti_from_leaf(cx, &caps(), leaf).map_err(|e| e.to_string())?;
                ensure!(got == expected, "leaf {leaf} of {cx:?}: {got:?} vs {expected:?}");
                runs += 1;
            }
        } else {
            for r in 0..cx.num_facets() {
                let got = top_betti_recursive_with(cx, &caps(), |_, leaves| leaves[r % leaves.len()])
                    .map_err(|e| e.to_string())?;
                ensure!(got == expected, "rotation {r} of {cx:?}: {got:?} vs {expected:?}");
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} recursion runs over every leaf choice agree"))
}

fn forest_laws() -> Outcome {
    let mut checked = 0;
    for (cx, _, oracle) in &forest_run().instances {
        for (m, i, rank) in oracle.iter() {
            ensure!(rank == 1, "rank {rank} at ({i}, {}) on {cx:?}", cx.monomial(m));
            ensure!(oracle.indices_at(m).len() == 1, "several indices at {} on {cx:?}", cx.monomial(m));
        }
        for m in lcm_lattice(cx, 20).unwrap() {
            let sub = cx.subcollection(cx.induced_facets(m));
            let mut sizes = BTreeSet::new();
            for cover in minimal_facet_covers(&sub, 20).unwrap() {
                for perm in cover.iter().permutations(cover.len()) {
                    if is_well_ordered(&sub, &perm).unwrap().is_well_ordered() {
                        sizes.insert(perm.len());
                    }
                }
            }
            ensure!(sizes.len() <= 1, "cardinalities {sizes:?} at {} on {cx:?}", cx.monomial(m));
            checked += 1;
        }
    }
    Ok(format!("0/1 law holds; {checked} induced subcollections have one cover cardinality"))
}

fn sufficiency() -> Outcome {
    let mut certificates = 0;
    let mut forests = 0;
    for (cx, oracle) in complex_corpus() {
        if cx.is_forest(20).unwrap().is_forest() {
            forests += 1;
        }
        for c in cover_certificates(cx, 20).unwrap() {
            ensure!(
                oracle.get(c.degree, c.cardinality) >= 1,
                "certificate ({}, {}) refuted on {cx:?}",
                c.cardinality,
                cx.monomial(c.degree)
            );
            certificates += 1;
        }
    }
    Ok(format!(
        "{certificates} certificates on 300 complexes ({forests} forests) confirmed, 0 violations"
    ))
}

fn bound_dominance() -> Outcome {
    let mut strict = 0;
    for (cx, _) in complex_corpus() {
        let b = regularity_lower_bounds(cx, &caps()).unwrap();
        ensure!(
            b.wofc_bound >= b.induced_matching_bound,
            "{} < {} on {cx:?}",
            b.wofc_bound,
            b.induced_matching_bound
        );
        if b.wofc_bound > b.induced_matching_bound {
            strict += 1;
        }
    }
    let b = regularity_lower_bounds(&tree(), &caps()).unwrap();
    ensure!(
        (b.wofc_bound, b.induced_matching_bound) == (3, 2),
        "tree bounds {} and {}",
        b.wofc_bound,
        b.induced_matching_bound
    );
    Ok(format!("dominance on 300 complexes ({strict} strict); tree gives 3 > 2"))
}

fn graph_round_trip() -> Outcome {
    let mut covers_checked = 0;
    let mut well_ordered = 0;
    for g in random_graphs(300, 8) {
        ensure!(g.num_edges() <= 8, "too many edges");
        for cover in minimal_facet_covers(g.as_complex(), 20).unwrap() {
            covers_checked += 1;
            let mut set = bouquet_decomposition(&g, cover).map_err(|e| e.to_string())?;
            let designation = strongly_disjoint_designation(&g, &set);
            let order = well_ordered_order(g.as_complex(), cover, SearchStrategy::Auto);
            ensure!(
                designation.is_some() == order.is_some(),
                "equivalence fails on {g:?} with cover {cover:?}"
            );
            let (Some(designation), Some(order)) = (designation, order) else {
                continue;
            };
            well_ordered += 1;
            set.designated = Some(designation);
            let seq = wofc_from_bouquets(&g, &set).map_err(|e| e.to_string())?;
            ensure!(seq.iter().copied().collect::<BitSet>() == cover, "edge set changed");
            let back = bouquets_from_wofc(&g, &seq).map_err(|e| e.to_string())?;
            ensure!(back.edge_set() == set.edge_set(), "round trip changed edges on {g:?}");

            let from_order = bouquets_from_wofc(&g, &order).map_err(|e| e.to_string())?;
            let designated = from_order.designated.clone().ok_or("no designation")?;
            ensure!(
                is_strongly_disjoint(&g, &from_order, &designated).unwrap(),
                "not strongly disjoint on {g:?}"
            );
            ensure!(from_order.edge_set() == cover, "edge set changed");
            let seq = wofc_from_bouquets(&g, &from_order).map_err(|e| e.to_string())?;
            ensure!(is_well_ordered(g.as_complex(), &seq).unwrap().is_well_ordered(), "not well ordered");
        }
    }
    let path = parse_graph("a b\nb c\nc d\n").unwrap().graph;
    ensure!(
        find_well_ordered_covers(path.as_complex(), 20).unwrap().is_empty(),
        "the path a-b-c-d admits a well ordered edge cover"
    );
    Ok(format!(
        "300 graphs, {covers_checked} minimal edge covers, {well_ordered} converted both ways; path has none"
    ))
}

fn chain_conditions() -> Outcome {
    let mut lyubeznik = 0;
    let mut taylor = 0;
    let instances = forest_run()
        .instances
        .iter()
        .map(|(cx, _, _)| cx)
        .chain(complex_corpus().iter().map(|(cx, _)| cx));
    for cx in instances {
        let order = GeneratorOrder::identity(cx.num_facets());
        let lambda = lyubeznik_complex(cx, &order, 16).unwrap();
        ensure!(d_squared_vanishes(&boundary_matrices(&lambda)), "d∘d ≠ 0 on {cx:?}");
        lyubeznik += 1;
        let full = AbstractComplex::from_maximal_faces(&[cx.all_facets()]);
        ensure!(boundary_squares_to_zero(&full), "∂∂ ≠ 0 on the Taylor simplex of {cx:?}");
        for m in lcm_lattice(cx, 20).unwrap() {
            ensure!(boundary_squares_to_zero(&taylor_lower(cx, m)), "∂∂ ≠ 0 on {cx:?}");
            taylor += 1;
        }
    }
    Ok(format!("d∘d = 0 on {lyubeznik} Lyubeznik complexes, ∂∂ = 0 on {taylor} lower Taylor complexes"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden worked example", golden_example),
        ("triangle example", triangle_example),
        ("Lyubeznik example", lyubeznik_example),
        ("oracle equivalence on forests", oracle_equivalence),
        ("recursion consistency", recursion_consistency),
        ("forest laws", forest_laws),
        ("sufficiency on arbitrary complexes", sufficiency),
        ("bound dominance", bound_dominance),
        ("graph round trip", graph_round_trip),
        ("symbolic chain conditions", chain_conditions),
    ];
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail}", n + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", n + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
