//! `{"p11": i, "p22": j, "p12": [[x, y], ...]}` with `p12` sorted.

use serde::Deserialize;
use serde_json::{json, Value};

use super::{SchutzElement, SchutzProduct};
use crate::error::{Error, Result};
use crate::monoid::Elem;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    p11: Elem,
    p22: Elem,
    p12: Vec<(Elem, Elem)>,
}

/// Parses an element of `product`, validating every index.
pub fn parse_schutz_element_json(input: &str, product: &SchutzProduct) -> Result<SchutzElement> {
    let raw: Raw =
        serde_json::from_str(input).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    product.element(raw.p11, raw.p22, &raw.p12)
}

pub fn schutz_element_to_json(e: &SchutzElement, product: &SchutzProduct) -> Value {
    let pairs: Vec<[Elem; 2]> = product.pairs(e).into_iter().map(|(x, y)| [x, y]).collect();
    json!({ "p11": e.p11, "p22": e.p22, "p12": pairs })
}
