//! One function per verb. Each builds the text and JSON forms of its result.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};
use wofc::covers::{well_ordered_order, OrderFailure, SearchStrategy, WellOrderedCheck};
use wofc::forest::cover_certificates;
use wofc::graphs::{bouquet_decomposition, bouquets_from_wofc, strongly_disjoint_designation, wofc_from_bouquets, BouquetSet};
use wofc::lyubeznik::barile_witnesses;
use wofc::*;

use crate::Failure;

pub struct Report {
    pub text: String,
    pub json: Value,
    /// `compare` disagreed with the oracle.
    pub mismatch: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            mismatch: false,
        }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("values serialize"));
        } else if self.text.ends_with('\n') {
            print!("{}", self.text);
        } else {
            println!("{}", self.text);
        }
    }
}

/// 1-based facet numbers, space separated.
fn numbers(indices: impl IntoIterator<Item = usize>) -> String {
    indices
        .into_iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn braces(set: FacetSet) -> String {
    format!("{{{}}}", numbers(set.iter()).replace(' ', ","))
}

/// Converts 1-based facet numbers from the command line.
fn zero_based(given: &[usize], count: usize, what: &str) -> Result<Vec<usize>, Failure> {
    given
        .iter()
        .map(|&k| {
            if (1..=count).contains(&k) {
                Ok(k - 1)
            } else {
                Err(Failure::Input(format!("{what} {k} is out of range 1..={count}")))
            }
        })
        .collect()
}

fn shifted(i: usize, conv: Convention) -> usize {
    match conv {
        Convention::Quotient => i,
        Convention::Ideal => i - 1,
    }
}

fn degree_json(cx: &SimplicialComplex, m: VertexSet) -> Value {
    json!(cx.vertex_names(m))
}

fn not_a_forest(leafless: &[usize]) -> Failure {
    Failure::Input(format!(
        "not a simplicial forest: facets {} form a subcollection without a leaf; `wofc oracle` handles any complex",
        numbers(leafless.iter().copied())
    ))
}

fn table_report(cx: &SimplicialComplex, table: &BettiTable, conv: Convention) -> Report {
    let diagram = BettiDiagram::from_table(table);
    let shown = table.to_convention(conv);
    let mut text = diagram.render();
    let (pd, reg) = table.pd_reg();
    writeln!(text, "\npd {pd}, reg {reg}").unwrap();
    let of = match conv {
        Convention::Quotient => "S/I",
        Convention::Ideal => "I",
    };
    writeln!(text, "multigraded Betti numbers of {of}:").unwrap();
    for (m, i, rank) in shown.iter() {
        writeln!(text, "  b_{i} {} = {rank}", cx.monomial(m)).unwrap();
    }
    let json = serde_json::to_value(shown.to_json(cx)).expect("tables serialize");
    Report::new(text, json)
}

pub fn betti(cx: &SimplicialComplex, caps: &Caps, conv: Convention) -> Result<Report, Failure> {
    if let ForestCheck::NotForest { leafless } = cx.is_forest(caps.facets)? {
        return Err(not_a_forest(&leafless));
    }
    Ok(table_report(cx, &multigraded_betti(cx, caps)?, conv))
}

pub fn oracle(cx: &SimplicialComplex, caps: &Caps, conv: Convention) -> Result<Report, Failure> {
    Ok(table_report(cx, &betti_oracle(cx, caps)?, conv))
}

pub fn compare(cx: &SimplicialComplex, caps: &Caps, conv: Convention) -> Result<Report, Failure> {
    let check = cx.is_forest(caps.facets)?;
    let oracle = betti_oracle(cx, caps)?;
    let mut text = String::new();
    if check.is_forest() {
        let table = multigraded_betti(cx, caps)?;
        let mut keys: Vec<(VertexSet, usize)> = table.iter().chain(oracle.iter()).map(|(m, i, _)| (m, i)).collect();
        keys.sort_by(|a, b| a.0.cmp_graded(b.0).then(a.1.cmp(&b.1)));
        keys.dedup();
        let mut mismatches = Vec::new();
        for (m, i) in keys {
            let (f, o) = (table.get(m, i), oracle.get(m, i));
            if f != o {
                writeln!(text, "  b_{} {}: forest formula {f}, oracle {o}", shifted(i, conv), cx.monomial(m)).unwrap();
                mismatches.push(json!({ "degree": degree_json(cx, m), "i": shifted(i, conv), "forest": f, "oracle": o }));
            }
        }
        let n = oracle.num_multidegrees();
        let plural = if n == 1 { "multidegree" } else { "multidegrees" };
        let head = if mismatches.is_empty() {
            format!("MATCH ({n} {plural})\n")
        } else {
            format!("MISMATCH ({} of {n} {plural} differ)\n", mismatches.len())
        };
        text.insert_str(0, &head);
        let mismatch = !mismatches.is_empty();
        let json = json!({
            "forest": true,
            "match": !mismatch,
            "multidegrees": n,
            "mismatches": mismatches,
        });
        return Ok(Report { text, json, mismatch });
    }

    let ForestCheck::NotForest { leafless } = check else { unreachable!() };
    writeln!(
        text,
        "not a forest (facets {} have no leaf); checking cover certificates against the oracle",
        numbers(leafless.iter().copied())
    )
    .unwrap();
    let certs = cover_certificates(cx, caps.facets)?;
    let mut count: BTreeMap<(VertexSet, usize), u64> = BTreeMap::new();
    let mut cert_json = Vec::new();
    let mut failed = 0;
    for c in &certs {
        let rank = oracle.get(c.degree, c.cardinality);
        let ok = rank > 0;
        failed += usize::from(!ok);
        *count.entry((c.degree, c.cardinality)).or_default() += 1;
        writeln!(
            text,
            "  b_{} {} from cover {}: {}",
            shifted(c.cardinality, conv),
            cx.monomial(c.degree),
            numbers(c.sequence.iter().copied()),
            if ok { format!("confirmed, oracle rank {rank}") } else { "NOT confirmed".to_string() }
        )
        .unwrap();
        cert_json.push(json!({
            "degree": degree_json(cx, c.degree),
            "i": shifted(c.cardinality, conv),
            "sequence": c.sequence,
            "confirmed": ok,
        }));
    }
    let mut extra = Vec::new();
    for (m, i, rank) in oracle.iter() {
        let certified = count.get(&(m, i)).copied().unwrap_or(0);
        if rank > certified {
            extra.push((m, i, rank, certified));
        }
    }
    if !extra.is_empty() {
        writeln!(text, "oracle entries beyond the certificates (expected for non-forests):").unwrap();
        for &(m, i, rank, certified) in &extra {
            writeln!(text, "  b_{} {}: oracle rank {rank}, {certified} certificate(s)", shifted(i, conv), cx.monomial(m)).unwrap();
        }
    }
    let head = if failed == 0 {
        format!("CONFIRMED ({} certificates)\n", certs.len())
    } else {
        format!("MISMATCH ({failed} of {} certificates unconfirmed)\n", certs.len())
    };
    text.insert_str(0, &head);
    let json = json!({
        "forest": false,
        "leafless": leafless,
        "match": failed == 0,
        "certificates": cert_json,
        "uncertified": extra
            .iter()
            .map(|&(m, i, rank, certified)| json!({
                "degree": degree_json(cx, m),
                "i": shifted(i, conv),
                "oracle": rank,
                "certificates": certified,
            }))
            .collect::<Vec<_>>(),
    });
    Ok(Report {
        text,
        json,
        mismatch: failed > 0,
    })
}

pub fn is_forest(cx: &SimplicialComplex, caps: &Caps) -> Result<Report, Failure> {
    Ok(match cx.is_forest(caps.facets)? {
        ForestCheck::Forest => {
            let leaves = cx.leaves();
            Report::new(
                format!("forest\nleaves: {}\n", numbers(leaves.iter().copied())),
                json!({ "forest": true, "leaves": leaves }),
            )
        }
        ForestCheck::NotForest { leafless } => Report::new(
            format!(
                "not a forest\nfacets {} form a subcollection without a leaf\n",
                numbers(leafless.iter().copied())
            ),
            json!({ "forest": false, "leafless": leafless }),
        ),
    })
}

pub fn covers(cx: &SimplicialComplex, caps: &Caps) -> Result<Report, Failure> {
    let all = minimal_facet_covers(cx, caps.facets)?;
    let mut text = format!("{} minimal facet covers\n", all.len());
    let mut rows = Vec::new();
    for cover in all {
        let order = well_ordered_order(cx, cover, SearchStrategy::Auto);
        let verdict = match &order {
            Some(seq) => format!("well ordered as {}", numbers(seq.iter().copied())),
            None => "no well ordered ordering".to_string(),
        };
        writeln!(text, "  {}: {verdict}", braces(cover)).unwrap();
        rows.push(json!({ "cover": cover.to_vec(), "well_ordered": order }));
    }
    Ok(Report::new(text, json!({ "covers": rows })))
}

fn failure_text(why: OrderFailure, cx: &SimplicialComplex) -> String {
    match why {
        OrderFailure::NotCovering { uncovered } => format!("does not cover {}", cx.vertex_names(uncovered).join(" ")),
        OrderFailure::NotMinimal { redundant } => format!("not minimal, facet {} is redundant", redundant + 1),
        OrderFailure::NoWitness { facet } => format!("facet {} has no witness position", facet + 1),
    }
}

fn certificate_text(text: &mut String, cert: &wofc::covers::WellOrderedCertificate) {
    for (h, pos) in &cert.witnesses {
        writeln!(text, "    facet {} witnessed at position {}", h + 1, pos + 1).unwrap();
    }
}

pub fn wofc(cx: &SimplicialComplex, sequence: Option<&[usize]>, caps: &Caps) -> Result<Report, Failure> {
    if let Some(given) = sequence {
        let seq = zero_based(given, cx.num_facets(), "facet")?;
        return Ok(match is_well_ordered(cx, &seq)? {
            WellOrderedCheck::WellOrdered(cert) => {
                let mut text = format!("well ordered facet cover: {}\n", numbers(seq.iter().copied()));
                certificate_text(&mut text, &cert);
                Report::new(text, json!({ "well_ordered": true, "certificate": cert }))
            }
            WellOrderedCheck::Fails(why) => {
                let reason = failure_text(why, cx);
                Report::new(
                    format!("not a well ordered facet cover: {reason}\n"),
                    json!({ "well_ordered": false, "reason": reason }),
                )
            }
        });
    }
    let found = find_well_ordered_covers(cx, caps.facets)?;
    if found.is_empty() {
        return Ok(Report::new("no well ordered facet cover\n".into(), json!([])));
    }
    let mut text = String::new();
    let mut certs = Vec::new();
    for cover in found {
        let WellOrderedCheck::WellOrdered(cert) = is_well_ordered(cx, &cover.sequence)? else {
            unreachable!("search results are well ordered")
        };
        writeln!(text, "cardinality {}: {}", cover.cardinality, numbers(cover.sequence.iter().copied())).unwrap();
        certificate_text(&mut text, &cert);
        certs.push(cert);
    }
    Ok(Report::new(text, json!(certs)))
}

pub fn lyubeznik(cx: &SimplicialComplex, order: Option<&[usize]>, caps: &Caps) -> Result<Report, Failure> {
    let order = match order {
        Some(given) => GeneratorOrder::new(zero_based(given, cx.num_facets(), "facet")?)?,
        None => GeneratorOrder::identity(cx.num_facets()),
    };
    let lambda = lyubeznik_complex(cx, &order, caps.lyubeznik_generators)?;
    let chain: Vec<String> = order.sequence().iter().map(|&g| cx.monomial(cx.facets()[g])).collect();
    let mut text = format!("order: {}\n", chain.join(" < "));
    writeln!(text, "{} faces", lambda.faces().len()).unwrap();
    let top = lambda.faces().iter().map(|f| f.len()).max().unwrap_or(0);
    for size in 1..=top {
        let row: Vec<String> = lambda.faces().iter().filter(|f| f.len() == size).map(|&f| braces(f)).collect();
        writeln!(text, "  {}", row.join(" ")).unwrap();
    }
    writeln!(text, "facets:").unwrap();
    for &f in lambda.facets() {
        writeln!(text, "  {} lcm {}", braces(f), cx.monomial(lambda.lcm(f))).unwrap();
    }
    let witnesses = barile_witnesses(cx, &order, caps.lyubeznik_generators)?;
    if !witnesses.is_empty() {
        writeln!(text, "nonzero Betti numbers certified by facets:").unwrap();
        for w in witnesses {
            writeln!(text, "  {}: b_{} {}", braces(w.face), w.index, cx.monomial(w.multidegree)).unwrap();
        }
    }
    Ok(Report::new(text, lambda.to_json()))
}

pub fn localize(cx: &SimplicialComplex, facet: usize) -> Result<Report, Failure> {
    let f = zero_based(&[facet], cx.num_facets(), "facet")?[0];
    Ok(match cx.localize(f)? {
        Localized::UnitIdeal => Report::new(
            "# unit ideal\n".into(),
            json!({ "unit_ideal": true, "facets": [] }),
        ),
        Localized::Complex(loc) => {
            let facets: Vec<Vec<String>> = loc.facets().iter().map(|&g| cx.vertex_names(g)).collect();
            let mut text = String::new();
            if facets.is_empty() {
                text.push_str("# zero ideal\n");
            }
            for g in &facets {
                writeln!(text, "{}", g.join(" ")).unwrap();
            }
            Report::new(text, json!({ "unit_ideal": false, "facets": facets }))
        }
    })
}

pub fn bounds(cx: &SimplicialComplex, caps: &Caps) -> Result<Report, Failure> {
    let b = regularity_lower_bounds(cx, caps)?;
    let w = &b.wofc_witness;
    let text = format!(
        "wofc bound: {} (cover {} of {})\ninduced matching bound: {} (facets {})\n",
        b.wofc_bound,
        numbers(w.sequence.iter().copied()),
        cx.monomial(w.degree),
        b.induced_matching_bound,
        numbers(b.matching.iter().copied()),
    );
    let json = json!({
        "wofc_bound": b.wofc_bound,
        "wofc_witness": {
            "degree": degree_json(cx, w.degree),
            "cardinality": w.cardinality,
            "sequence": w.sequence,
        },
        "induced_matching_bound": b.induced_matching_bound,
        "matching": b.matching,
    });
    Ok(Report::new(text, json))
}

fn bouquet_text(g: &Graph, set: &BouquetSet) -> String {
    let names = g.names();
    set.bouquets
        .iter()
        .map(|b| {
            let leaves: Vec<&str> = b.leaves.iter().map(|&v| names[v].as_str()).collect();
            format!("{}{{{}}}", names[b.root], leaves.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn edges_text(g: &Graph, edges: &[usize]) -> String {
    edges.iter().map(|&e| g.edge_names(e).join("-")).collect::<Vec<_>>().join(", ")
}

pub fn graph_bouquets(g: &Graph, sequence: Option<&[usize]>, caps: &Caps) -> Result<Report, Failure> {
    let all: Vec<usize> = (0..g.num_edges()).collect();
    let numbered: Vec<String> = all.iter().map(|&e| format!("{} {}", e + 1, g.edge_names(e).join("-"))).collect();
    let mut text = format!("edges: {}\n", numbered.join(", "));
    if let Some(given) = sequence {
        let seq = zero_based(given, g.num_edges(), "edge")?;
        let set = bouquets_from_wofc(g, &seq)?;
        writeln!(text, "bouquets: {}", bouquet_text(g, &set)).unwrap();
        writeln!(text, "designated: {}", edges_text(g, set.designated.as_deref().unwrap_or_default())).unwrap();
        return Ok(Report::new(text, set.to_json(g)));
    }
    let mut rows = Vec::new();
    for cover in minimal_facet_covers(g.as_complex(), caps.facets)? {
        let mut set = bouquet_decomposition(g, cover)?;
        set.designated = strongly_disjoint_designation(g, &set);
        let sequence = match &set.designated {
            Some(_) => Some(wofc_from_bouquets(g, &set)?),
            None => None,
        };
        write!(text, "cover {}: {}", numbers(cover.iter()), bouquet_text(g, &set)).unwrap();
        match (&set.designated, &sequence) {
            (Some(d), Some(seq)) => writeln!(
                text,
                "; designated {}; well ordered edge cover {}",
                edges_text(g, d),
                numbers(seq.iter().copied())
            ),
            _ => writeln!(text, "; not strongly disjoint"),
        }
        .unwrap();
        let mut row = set.to_json(g);
        row["cover"] = json!(cover.to_vec());
        row["sequence"] = json!(sequence);
        rows.push(row);
    }
    Ok(Report::new(text, json!({ "covers": rows })))
}
