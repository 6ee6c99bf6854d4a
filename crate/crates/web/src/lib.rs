//! Browser bindings for the `cubewalk` demo page. Each export returns a JSON
//! string; big integers are decimal strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cubewalk::centralizer::{bratteli, expand_td, BasisElement};
use cubewalk::genfun::{egf_coefficients, poincare_series};
use cubewalk::partitions::enumerate_partitions;
use cubewalk::spectral::walk_count_cube_closed;
use cubewalk::{json as enc, Error, GroupElement, Limits};

/// Caps for the page: small enough to stay responsive in a browser tab.
pub const LIMITS: Limits = Limits { max_n: 12, budget: 20_000 };

/// Largest n for the determinant-based Poincare series.
pub const SERIES_MAX_N: u32 = 5;

fn text(e: Error) -> String {
    e.to_string()
}

pub fn bratteli_levels(n: u32, k_max: u32) -> Result<String, String> {
    if k_max > 40 {
        return Err("k_max is limited to 40 here".into());
    }
    let levels = bratteli(n, k_max, &LIMITS).map_err(text)?;
    Ok(json!({ "n": n, "levels": levels.iter().map(enc::bratteli_level).collect::<Vec<_>>() }).to_string())
}

pub fn series(n: u32, a: &str, max_power: usize) -> Result<String, String> {
    let g: GroupElement = a.parse().map_err(text)?;
    if g.dim() != n {
        return Err(format!("label {a} has {} coordinates, expected {n}", g.dim()));
    }
    if max_power > 60 {
        return Err("at most 60 coefficients here".into());
    }
    if n > SERIES_MAX_N {
        return Err(format!("n is limited to {SERIES_MAX_N} here"));
    }
    let h = g.hamming_weight();
    let s = poincare_series(n, &g, &Limits { max_n: SERIES_MAX_N, ..LIMITS }).map_err(text)?;
    let poincare = s.coefficients(max_power);
    let egf = egf_coefficients(n, h, max_power).map_err(text)?;
    let closed = (0..=max_power as u32).map(|k| walk_count_cube_closed(n, h, k)).collect::<Result<Vec<_>, _>>().map_err(text)?;
    let eigen: Vec<i64> = (0..=n as i64).map(|j| n as i64 - 2 * j).collect();
    Ok(json!({
        "n": n,
        "a": g.to_string(),
        "raw": enc::rational_function(&s.raw, eigen.iter().copied()),
        "reduced": enc::rational_function(&s.reduced, eigen.iter().copied()),
        "reduced_text": s.reduced.to_string(),
        "poincare": enc::bigints(&poincare),
        "egf": enc::bigints(&egf),
        "closed": enc::bigints(&closed),
        "agree": poincare == egf && egf == closed,
    })
    .to_string())
}

fn element(e: &BasisElement) -> Value {
    json!(e.compact().unwrap_or_else(|| e.to_string()))
}

pub fn diagrams(k: usize, n: u32, even_only: bool) -> Result<String, String> {
    GroupElement::zero(n).map_err(text)?;
    if k > 4 {
        return Err("k is limited to 4 here".into());
    }
    let mut total = 0usize;
    let mut list = Vec::new();
    for d in enumerate_partitions(k, 2 * k, even_only) {
        let summands: Vec<Value> = match expand_td(&d, n) {
            Ok(iter) => iter.map(|e| element(&e)).collect(),
            Err(Error::TooManyBlocks { .. }) => Vec::new(),
            Err(e) => return Err(text(e)),
        };
        total += summands.len();
        if total as u64 > LIMITS.budget {
            return Err(text(Error::BudgetExceeded { required: total as u128, budget: LIMITS.budget }));
        }
        list.push(json!({
            "labels": d.labels(),
            "rgs": d.to_string(),
            "blocks": d.blocks(),
            "summands": summands,
        }));
    }
    Ok(json!({ "k": k, "n": n, "even_only": even_only, "diagrams": list, "total_summands": total }).to_string())
}

#[wasm_bindgen(js_name = bratteliJson)]
pub fn bratteli_json(n: u32, k_max: u32) -> Result<String, JsValue> {
    bratteli_levels(n, k_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = seriesJson)]
pub fn series_json(n: u32, a: &str, max_power: usize) -> Result<String, JsValue> {
    series(n, a, max_power).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = diagramsJson)]
pub fn diagrams_json(k: usize, n: u32, even_only: bool) -> Result<String, JsValue> {
    diagrams(k, n, even_only).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn bratteli_levels_n3() {
        let v = parse(bratteli_levels(3, 6));
        assert_eq!(v["levels"][6]["sum_of_squares"], "132861");
        assert_eq!(v["levels"][3]["vertices"][3]["vertex"], "111");
        assert!(bratteli_levels(13, 2).is_err());
    }

    #[test]
    fn series_routes_agree() {
        let v = parse(series(3, "110", 8));
        assert_eq!(v["agree"], true);
        assert_eq!(v["poincare"][8], "1640");
        assert!(series(3, "11", 4).is_err());
        assert!(series(3, "1x1", 4).is_err());
        assert!(series(6, "000000", 4).is_err());
    }

    #[test]
    fn diagram_expansions() {
        let v = parse(diagrams(2, 3, true));
        assert_eq!(v["total_summands"], 21);
        assert_eq!(v["diagrams"][0]["summands"], json!(["E_11^11", "E_22^22", "E_33^33"]));
        let v = parse(diagrams(1, 1, false));
        assert_eq!(v["diagrams"].as_array().unwrap().len(), 2);
        assert!(diagrams(5, 3, true).is_err());
    }
}
