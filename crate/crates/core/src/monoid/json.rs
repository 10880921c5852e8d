//! JSON form of a monoid:
//! `{"size": N, "identity": i, "table": [[...], ...], "letters": {"a": j, ...}}`,
//! optionally with `"accept": [...]`.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use super::{Elem, FiniteMonoid, MonoidHom};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidDocument {
    pub monoid: FiniteMonoid,
    /// Present when the document carries `"letters"`.
    pub hom: Option<MonoidHom>,
    pub accept: Option<Vec<Elem>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    letters: Option<Map<String, Value>>,
    #[serde(default)]
    accept: Option<Vec<usize>>,
}

pub fn parse_monoid_json(input: &str) -> Result<MonoidDocument> {
    let raw: Raw =
        serde_json::from_str(input).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    if raw.size != raw.table.len() {
        return Err(Error::InvalidMonoid(format!(
            "size {} but the table has {} rows",
            raw.size,
            raw.table.len()
        )));
    }
    let monoid = FiniteMonoid::new(raw.identity, raw.table)?;
    let hom = match raw.letters {
        None => None,
        Some(letters) => {
            let mut chars = Vec::with_capacity(letters.len());
            let mut images = Vec::with_capacity(letters.len());
            for (key, value) in &letters {
                let mut it = key.chars();
                let c = match (it.next(), it.next()) {
                    (Some(c), None) => c,
                    _ => {
                        return Err(Error::InvalidMonoid(format!(
                            "letter key `{key}` is not a single character"
                        )))
                    }
                };
                let image = value
                    .as_u64()
                    .and_then(|v| Elem::try_from(v).ok())
                    .ok_or_else(|| {
                        Error::InvalidMonoid(format!("image of `{key}` is not an element index"))
                    })?;
                chars.push(c);
                images.push(image);
            }
            Some(MonoidHom::new(
                monoid.clone(),
                Alphabet::new(chars)?,
                images,
            )?)
        }
    };
    let accept = match raw.accept {
        None => None,
        Some(acc) => {
            let mut out = Vec::with_capacity(acc.len());
            for x in acc {
                if x >= monoid.size() {
                    return Err(Error::InvalidMonoid(format!(
                        "accepting element {x} outside 0..{}",
                        monoid.size()
                    )));
                }
                out.push(x as Elem);
            }
            Some(out)
        }
    };
    Ok(MonoidDocument {
        monoid,
        hom,
        accept,
    })
}

pub fn monoid_to_json(
    monoid: &FiniteMonoid,
    hom: Option<&MonoidHom>,
    accept: Option<&[Elem]>,
) -> Value {
    let mut obj = Map::new();
    obj.insert("size".into(), json!(monoid.size()));
    obj.insert("identity".into(), json!(monoid.identity()));
    obj.insert("table".into(), json!(monoid.table_rows()));
    if let Some(h) = hom {
        let letters: Map<String, Value> = h
            .alphabet()
            .letters()
            .iter()
            .zip(h.letter_images())
            .map(|(c, &x)| (c.to_string(), json!(x)))
            .collect();
        obj.insert("letters".into(), Value::Object(letters));
    }
    if let Some(acc) = accept {
        obj.insert("accept".into(), json!(acc));
    }
    Value::Object(obj)
}
