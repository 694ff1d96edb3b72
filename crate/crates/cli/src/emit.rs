//! Text and JSON renderings of matrices, automorphisms and words.

use std::str::FromStr;

use crystbraid_core::free::FreeAuto;
use crystbraid_core::{LaurentPoly, PolyMatrix};
use serde_json::{json, Map, Number, Value};

/// `[{"c": int, "e": {"var": exp}}]`, terms in canonical order, zero exponents omitted.
pub fn poly_json(p: &LaurentPoly) -> Value {
    let names = p.vars().names();
    let terms = p
        .terms()
        .map(|(exps, c)| {
            let mut e = Map::new();
            for (name, &x) in names.iter().zip(exps) {
                if x != 0 {
                    e.insert(name.clone(), json!(x));
                }
            }
            let c = Number::from_str(&c.to_string()).expect("integer literal");
            json!({ "c": c, "e": e })
        })
        .collect();
    Value::Array(terms)
}

pub fn matrix_json(m: &PolyMatrix) -> Value {
    let rows: Vec<Value> = (0..m.dim()).map(|r| Value::Array(m.row(r).iter().map(poly_json).collect())).collect();
    json!({ "dim": m.dim(), "basis": m.basis().as_slice(), "rows": rows })
}

/// `diag(a, b, c)` for diagonal matrices, otherwise a basis line and one
/// bracketed row per basis vector.
pub fn matrix_text(m: &PolyMatrix) -> String {
    if m.is_diagonal() {
        let d: Vec<String> = m.diagonal_entries().iter().map(|p| p.to_string()).collect();
        return format!("diag({})", d.join(", "));
    }
    let mut out = format!("basis: {}", m.basis().join(" "));
    for r in 0..m.dim() {
        let row: Vec<String> = m.row(r).iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("\n[{}]", row.join(", ")));
    }
    out
}

pub fn auto_text(a: &FreeAuto) -> String {
    a.describe().join("\n")
}

pub fn auto_json(a: &FreeAuto) -> Value {
    let images: Vec<Value> = a
        .basis()
        .names()
        .iter()
        .zip(a.images())
        .map(|(g, w)| json!({ "generator": g, "image": w.to_string() }))
        .collect();
    json!({ "basis": a.basis().names(), "images": images })
}
