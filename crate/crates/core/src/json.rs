//! JSON encodings. Big integers are always decimal strings.

use serde_json::{json, Value};

use crate::centralizer::{BasisElement, BratteliLevel};
use crate::partitions::SetPartition;
use crate::{BigInt, IntPolynomial, RationalFunction};

pub fn bigint(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn bigints<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(xs.into_iter().map(bigint).collect())
}

/// Coefficients from the constant term upwards.
pub fn polynomial(p: &IntPolynomial) -> Value {
    bigints(p.coeffs())
}

/// `{"num", "den", "den_factors"}`, where `den_factors` lists
/// `[lambda, multiplicity]` for the factors `1 - lambda t` among `candidates`.
pub fn rational_function(f: &RationalFunction, candidates: impl IntoIterator<Item = i64>) -> Value {
    let factors: Vec<Value> = f.den_factors(candidates).into_iter().map(|(l, m)| json!([l, m])).collect();
    json!({
        "num": polynomial(f.num()),
        "den": polynomial(f.den()),
        "den_factors": factors,
    })
}

pub fn basis_element(e: &BasisElement) -> Value {
    json!({ "alpha": e.alpha(), "beta": e.beta() })
}

pub fn set_partition(d: &SetPartition) -> Value {
    json!({ "rgs": d.to_string(), "blocks": d.blocks() })
}

pub fn bratteli_level(level: &BratteliLevel) -> Value {
    let vertices: Vec<Value> = level
        .display_order()
        .into_iter()
        .map(|(a, m)| json!({ "vertex": a.to_string(), "multiplicity": bigint(m) }))
        .collect();
    json!({
        "level": level.level,
        "vertices": vertices,
        "sum_of_squares": bigint(&level.sum_of_squares()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::bratteli;
    use crate::Limits;

    #[test]
    fn rational_function_shape() {
        let f = RationalFunction::new(IntPolynomial::one(), IntPolynomial::from_i64s(&[1, 0, -1])).unwrap();
        let v = rational_function(&f, [1, -1]);
        assert_eq!(v.to_string(), r#"{"den":["1","0","-1"],"den_factors":[[1,1],[-1,1]],"num":["1"]}"#);
    }

    #[test]
    fn big_values_survive() {
        let x: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = bigint(&x);
        let back: BigInt = v.as_str().unwrap().parse().unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn bratteli_round_trip() {
        let levels = bratteli(3, 2, &Limits::default()).unwrap();
        let v = bratteli_level(&levels[2]);
        assert_eq!(v["sum_of_squares"], "21");
        assert_eq!(v["vertices"][1]["vertex"], "110");
        let text = v.to_string();
        let again: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(again.to_string(), text);
    }
}
