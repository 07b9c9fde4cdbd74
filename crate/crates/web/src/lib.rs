//! Browser bindings. Every export takes the complex as text (one facet per
//! line) and returns a JSON string; errors come back as a thrown string.
//! The `*_json` functions hold the logic and run natively in tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use wofc::forest::cover_certificates;
use wofc::lyubeznik::barile_witnesses;
use wofc::*;

fn parse(text: &str) -> Result<(SimplicialComplex, Vec<String>), String> {
    let parsed = parse_complex(text).map_err(|e| e.to_string())?;
    Ok((parsed.complex, parsed.warnings))
}

fn monomials(cx: &SimplicialComplex, set: FacetSet) -> Vec<String> {
    set.iter().map(|g| cx.monomial(cx.facets()[g])).collect()
}

/// Betti diagram and multigraded entries. Forests use the cover formula,
/// anything else the homology oracle.
pub fn betti_diagram_json(text: &str) -> Result<String, String> {
    let (cx, warnings) = parse(text)?;
    let caps = Caps::default();
    let forest = cx.is_forest(caps.facets).map_err(|e| e.to_string())?.is_forest();
    let table = if forest {
        multigraded_betti(&cx, &caps)
    } else {
        betti_oracle(&cx, &caps)
    }
    .map_err(|e| e.to_string())?;
    let (pd, reg) = table.pd_reg();
    let entries: Vec<Value> = table
        .iter()
        .map(|(m, i, rank)| json!({ "degree": cx.monomial(m), "i": i, "rank": rank }))
        .collect();
    Ok(json!({
        "forest": forest,
        "method": if forest { "well ordered facet covers" } else { "simplicial homology" },
        "diagram": BettiDiagram::from_table(&table).render(),
        "pd": pd,
        "reg": reg,
        "entries": entries,
        "warnings": warnings,
    })
    .to_string())
}

/// Lyubeznik complex under `order`, given as 1-based facet numbers
/// separated by commas or spaces; empty means file order.
pub fn lyubeznik_json(text: &str, order: &str) -> Result<String, String> {
    let (cx, warnings) = parse(text)?;
    let numbers: Vec<usize> = order
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad facet number {t:?}")))
        .collect::<Result<_, _>>()?;
    let order = if numbers.is_empty() {
        GeneratorOrder::identity(cx.num_facets())
    } else {
        let zero: Vec<usize> = numbers.iter().map(|&k| k.wrapping_sub(1)).collect();
        GeneratorOrder::new(zero).map_err(|e| e.to_string())?
    };
    let cap = Caps::default().lyubeznik_generators;
    let lambda = lyubeznik_complex(&cx, &order, cap).map_err(|e| e.to_string())?;
    let witnesses = barile_witnesses(&cx, &order, cap).map_err(|e| e.to_string())?;
    let chain: Vec<String> = order.sequence().iter().map(|&g| cx.monomial(cx.facets()[g])).collect();
    let facets: Vec<Value> = lambda
        .facets()
        .iter()
        .map(|&f| json!({ "generators": monomials(&cx, f), "lcm": cx.monomial(lambda.lcm(f)) }))
        .collect();
    let witnesses: Vec<Value> = witnesses
        .iter()
        .map(|w| json!({ "generators": monomials(&cx, w.face), "i": w.index, "degree": cx.monomial(w.multidegree) }))
        .collect();
    Ok(json!({
        "order": chain,
        "faces": lambda.faces().len(),
        "facets": facets,
        "witnesses": witnesses,
        "warnings": warnings,
    })
    .to_string())
}

/// Every well ordered facet cover found on an induced subcollection, as
/// a certificate for one nonzero Betti number.
pub fn well_ordered_covers_json(text: &str) -> Result<String, String> {
    let (cx, warnings) = parse(text)?;
    let caps = Caps::default();
    let certs = cover_certificates(&cx, caps.facets).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = certs
        .iter()
        .map(|c| {
            json!({
                "degree": cx.monomial(c.degree),
                "i": c.cardinality,
                "sequence": c.sequence.iter().map(|&g| cx.monomial(cx.facets()[g])).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({ "certificates": rows, "warnings": warnings }).to_string())
}

#[wasm_bindgen(js_name = bettiDiagram)]
pub fn betti_diagram(text: &str) -> Result<String, JsError> {
    betti_diagram_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = lyubeznik)]
pub fn lyubeznik(text: &str, order: &str) -> Result<String, JsError> {
    lyubeznik_json(text, order).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = wellOrderedCovers)]
pub fn well_ordered_covers(text: &str) -> Result<String, JsError> {
    well_ordered_covers_json(text).map_err(|e| JsError::new(&e))
}
