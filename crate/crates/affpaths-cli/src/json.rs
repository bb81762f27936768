//! Stable JSON forms of polynomials and series.
//!
//! Exponents are rationals written as `"p/q"` (or `"p"`), coefficients are
//! decimal strings so that arbitrarily large values survive a round trip.

use affpaths::qalgebra::{LaurentPoly, QSeries, Rational};
use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"exp": e.to_string(), "coeff": c.to_string()}))
        .collect();
    json!({"terms": terms, "text": p.to_string()})
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("polynomial needs a \"terms\" array"))?;
    let mut p = LaurentPoly::zero();
    for t in terms {
        let e = rational_field(t, "exp")?;
        let c = bigint_field(t, "coeff")?;
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn series_to_json(s: &QSeries) -> Value {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    json!({
        "min_exp": s.min_exp().to_string(),
        "order": s.order(),
        "coeffs": coeffs,
        "text": s.to_string(),
    })
}

pub fn series_from_json(v: &Value) -> Result<QSeries> {
    let min_exp = rational_field(v, "min_exp")?;
    let order = v
        .get("order")
        .and_then(Value::as_i64)
        .ok_or_else(|| anyhow!("series needs an integer \"order\""))?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("series needs a \"coeffs\" array"))?
        .iter()
        .map(parse_bigint)
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::from_coeffs(min_exp, order, coeffs)?)
}

fn rational_field(v: &Value, key: &str) -> Result<Rational> {
    let s = v
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("missing string field {key:?}"))?;
    s.parse::<Rational>()
        .map_err(|e| anyhow!("bad rational {s:?} in {key:?}: {e}"))
}

fn bigint_field(v: &Value, key: &str) -> Result<BigInt> {
    parse_bigint(v.get(key).ok_or_else(|| anyhow!("missing field {key:?}"))?)
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.parse().with_context(|| format!("bad integer {s:?}")),
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap_or_default())),
        _ => bail!("expected an integer, got {v}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use affpaths::qalgebra::{inv_pochhammer_series, rat};

    #[test]
    fn poly_round_trip() {
        let mut p = LaurentPoly::from_coeffs(-2, &[3, 0, -1, 7]);
        p.add_term(rat(5, 3), BigInt::from(10).pow(30));
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json(&v).unwrap(), p);
        let text = serde_json::to_string(&v).unwrap();
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(poly_from_json(&back).unwrap(), p);
        assert_eq!(poly_from_json(&poly_to_json(&LaurentPoly::zero())).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn series_round_trip() {
        let s = inv_pochhammer_series(2, 9).unwrap().shift(&rat(-1, 4));
        assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_malformed() {
        assert!(poly_from_json(&json!({"terms": [{"exp": "1/0", "coeff": "1"}]})).is_err());
        assert!(poly_from_json(&json!({"terms": [{"exp": "1", "coeff": "x"}]})).is_err());
        assert!(series_from_json(&json!({"min_exp": "0", "order": 3, "coeffs": ["1"]})).is_err());
    }

    proptest::proptest! {
        #[test]
        fn arbitrary_polys_round_trip(
            terms in proptest::collection::vec((-40i64..40, 1i64..7, -1000i64..1000), 0..12),
        ) {
            let mut p = LaurentPoly::zero();
            for (num, den, c) in terms {
                p.add_term(rat(num, den), BigInt::from(c));
            }
            let text = serde_json::to_string(&poly_to_json(&p)).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            proptest::prop_assert_eq!(poly_from_json(&back).unwrap(), p);
        }

        #[test]
        fn arbitrary_series_round_trip(
            num in -9i64..9, den in 1i64..5, order in -2i64..10,
            coeffs in proptest::collection::vec(-50i64..50, 0..14),
        ) {
            let min = rat(num, den);
            let mut p = LaurentPoly::zero();
            for (k, c) in coeffs.iter().enumerate() {
                p.add_term(&min + rat(k as i64, 1), BigInt::from(*c));
            }
            if let Ok(s) = QSeries::from_poly(&p, order) {
                proptest::prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s);
            }
        }
    }
}
