//! JSON documents: `{"field": "<spec>", "lines": [[c, c, c], ...]}` and the
//! same with `"points"`. Coefficients are strings in the field's scalar
//! syntax (plain JSON integers are accepted on input).

use serde_json::{json, Value};

use super::{Arrangement, PointConfig};
use crate::error::{Error, Result};
use crate::field::{AnyField, ExactField};
use crate::geom::{parse_triple, Triple};

fn coeff_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}

fn read_triples(field: &AnyField, v: &Value, key: &str) -> Result<Vec<Triple<<AnyField as ExactField>::Elem>>> {
    let arr = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing '{key}' array")))?;
    arr.iter()
        .map(|t| {
            let items = t.as_array().ok_or_else(|| Error::Parse("expected a coordinate triple".into()))?;
            let texts = items.iter().map(coeff_text).collect::<Result<Vec<_>>>()?;
            parse_triple(field, &texts)
        })
        .collect()
}

fn read_field(v: &Value) -> Result<AnyField> {
    let spec = v
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("missing 'field'".into()))?;
    AnyField::parse(spec)
}

pub fn arrangement_from_json(v: &Value) -> Result<Arrangement<AnyField>> {
    let field = read_field(v)?;
    let ts = read_triples(&field, v, "lines")?;
    Ok(Arrangement::from_triples(field, ts)?.0)
}

pub fn points_from_json(v: &Value) -> Result<PointConfig<AnyField>> {
    let field = read_field(v)?;
    let ts = read_triples(&field, v, "points")?;
    Ok(PointConfig::from_triples(field, ts)?.0)
}

/// Serializes in insertion order (which carries the labels); use
/// [`Arrangement::canonical`] first for the canonical order.
pub fn arrangement_to_json<F: ExactField>(a: &Arrangement<F>) -> Value {
    json!({ "field": a.field().spec().to_string(), "lines": a.to_strings() })
}

pub fn points_to_json<F: ExactField>(p: &PointConfig<F>) -> Value {
    json!({ "field": p.field().spec().to_string(), "points": p.to_strings() })
}

/// Full canonical text of an arrangement: field and sorted lines.
pub fn canonical_text<F: ExactField>(a: &Arrangement<F>) -> String {
    let mut s = a.field().spec().to_string();
    for l in a.sorted() {
        let [x, y, z] = crate::geom::format_triple(a.field(), l.coords());
        s.push('\n');
        s.push_str(&x);
        s.push(' ');
        s.push_str(&y);
        s.push(' ');
        s.push_str(&z);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = AnyField::parse("Q[x]/(x^2+x+1)").unwrap();
        let w = k.generator().unwrap();
        let (o, z) = (k.one(), k.zero());
        let ts = vec![[k.neg(&w), z.clone(), o.clone()], [k.neg(&o), o.clone(), z.clone()]];
        let (a, _) = Arrangement::from_triples(k, ts).unwrap();
        let v = arrangement_to_json(&a);
        assert_eq!(v["field"], "Q[x]/(x^2+x+1)");
        let b = arrangement_from_json(&v).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn integer_coefficients_accepted() {
        let v: Value = serde_json::from_str(r#"{"field":"GF(3)","points":[[1,2,0],["0","1","1"]]}"#).unwrap();
        let p = points_from_json(&v).unwrap();
        assert_eq!(p.len(), 2);
        assert!(arrangement_from_json(&v).is_err());
    }
}
