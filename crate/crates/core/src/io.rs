//! Facet-list serialization: JSON and one-facet-per-line text.

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetList {
    pub d: usize,
    pub dim: isize,
    pub facets: Vec<Vec<String>>,
}

impl From<&PureComplex> for FacetList {
    fn from(k: &PureComplex) -> Self {
        FacetList {
            d: k.ambient_d(),
            dim: k.dim().unwrap_or(-1),
            facets: k
                .facets()
                .iter()
                .map(|f| f.labels().map(|l| l.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<FacetList> for PureComplex {
    type Error = Error;

    fn try_from(list: FacetList) -> Result<Self> {
        let facets = list
            .facets
            .iter()
            .map(|labels| labels.join(" ").parse::<Face>())
            .collect::<Result<Vec<_>>>()?;
        let k = PureComplex::new(list.d, facets)?;
        if let Some(dim) = k.dim() {
            if dim != list.dim {
                return Err(Error::Parse(format!("declared dim {} but facets have dim {dim}", list.dim)));
            }
        }
        Ok(k)
    }
}

pub fn to_json(k: &PureComplex) -> String {
    serde_json::to_string(&FacetList::from(k)).expect("facet list serializes")
}

pub fn from_json(s: &str) -> Result<PureComplex> {
    PureComplex::try_from(serde_json::from_str::<FacetList>(s)?)
}

/// One facet per line, labels separated by spaces, lines in canonical order.
pub fn to_text(k: &PureComplex) -> String {
    let mut out = String::new();
    for f in k.facets() {
        let line: Vec<String> = f.labels().map(|l| l.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Facets in file order. Each line is a label list or an `xy`-word; `#`
/// starts a comment.
pub fn parse_text_facets(s: &str) -> Result<Vec<Face>> {
    s.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

/// Parses text into a complex; `d` defaults to the largest coordinate seen.
pub fn from_text(s: &str, d: Option<usize>) -> Result<PureComplex> {
    let facets = parse_text_facets(s)?;
    let d = d.unwrap_or_else(|| facets.iter().map(|f| f.max_coord()).max().unwrap_or(1).max(1));
    PureComplex::new(d, facets)
}

/// Reads either format; JSON is recognised by a leading `{`.
pub fn read_complex(s: &str, d: Option<usize>) -> Result<(PureComplex, Vec<Face>)> {
    if s.trim_start().starts_with('{') {
        let list: FacetList = serde_json::from_str(s)?;
        let order = list
            .facets
            .iter()
            .map(|labels| labels.join(" ").parse::<Face>())
            .collect::<Result<Vec<_>>>()?;
        let k = PureComplex::try_from(list)?;
        Ok((k, order))
    } else {
        let order = parse_text_facets(s)?;
        let k = from_text(s, d)?;
        Ok((k, order))
    }
}
