//! JSON descriptions of algebras.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::algebra::AlgebraSC;
use super::construct::{albert_algebra, direct_sum, division_algebra, make_hermitian, make_jspin, make_spin_factor};
use crate::composition::Field;
use crate::error::{AlbertError, Result};
use crate::exact::{Rational, VectorQ};

/// `{"kind": "hermitian|jspin|direct_sum|custom|…", "params": …, "sc": …}`.
///
/// Recognised kinds and their params:
/// - `hermitian`: `{"field": "R|C|H|O", "n": 3}`
/// - `jspin`: `{"n": 4}`, or `{"form": ["1", "-1"]}` for a diagonal form
/// - `albert`: none
/// - `division`: `{"field": "O"}` (the algebra with its own product)
/// - `direct_sum`: `{"parts": [spec, …]}`
/// - `custom`: explicit `sc[i][j][k]` as exact strings, optional `"name"`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub kind: String,
    #[serde(default)]
    pub params: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sc: Option<Vec<Vec<VectorQ>>>,
}

impl AlgebraSpec {
    pub fn hermitian(field: Field, n: usize) -> Self {
        Self { kind: "hermitian".into(), params: serde_json::json!({"field": field.symbol(), "n": n}), sc: None }
    }

    pub fn jspin(n: usize) -> Self {
        Self { kind: "jspin".into(), params: serde_json::json!({ "n": n }), sc: None }
    }

    pub fn build(&self) -> Result<AlgebraSC> {
        let p = &self.params;
        match self.kind.as_str() {
            "hermitian" => {
                let field: Field = str_param(p, "field")?.parse()?;
                make_hermitian(field, usize_param(p, "n")?)
            }
            "jspin" => match p.get("form") {
                Some(f) => {
                    let form: Vec<Rational> = serde_json::from_value(f.clone())?;
                    make_spin_factor(&form)
                }
                None => make_jspin(usize_param(p, "n")?),
            },
            "albert" => Ok(albert_algebra()),
            "division" => Ok(division_algebra(str_param(p, "field")?.parse()?)),
            "direct_sum" => {
                let parts: Vec<AlgebraSpec> = serde_json::from_value(
                    p.get("parts").cloned().ok_or_else(|| AlbertError::Parse("direct_sum needs params.parts".into()))?,
                )?;
                let built = parts.iter().map(AlgebraSpec::build).collect::<Result<Vec<_>>>()?;
                direct_sum(&built)
            }
            "custom" => {
                let sc = self.sc.as_ref().ok_or_else(|| AlbertError::Parse("custom algebra needs \"sc\"".into()))?;
                let name = p.get("name").and_then(Value::as_str).unwrap_or("custom");
                AlgebraSC::from_sc(name, sc)
            }
            other => Err(AlbertError::Parse(format!("unknown algebra kind {other:?}"))),
        }
    }
}

fn str_param<'a>(p: &'a Value, key: &str) -> Result<&'a str> {
    p.get(key).and_then(Value::as_str).ok_or_else(|| AlbertError::Parse(format!("missing string parameter {key:?}")))
}

fn usize_param(p: &Value, key: &str) -> Result<usize> {
    p.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| AlbertError::Parse(format!("missing integer parameter {key:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_build() {
        let s: AlgebraSpec = serde_json::from_str(r#"{"kind":"hermitian","params":{"field":"O","n":3}}"#).unwrap();
        assert_eq!(s.build().unwrap().dim(), 27);
        let d: AlgebraSpec = serde_json::from_str(
            r#"{"kind":"direct_sum","params":{"parts":[{"kind":"jspin","params":{"n":2}},{"kind":"hermitian","params":{"field":"R","n":1}}]}}"#,
        )
        .unwrap();
        assert_eq!(d.build().unwrap().dim(), 4);
        let c: AlgebraSpec = serde_json::from_str(r#"{"kind":"custom","sc":[[["1"]]]}"#).unwrap();
        assert_eq!(c.build().unwrap().dim(), 1);
        let bad: AlgebraSpec = serde_json::from_str(r#"{"kind":"nope"}"#).unwrap();
        assert!(bad.build().is_err());
    }
}
