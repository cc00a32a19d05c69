use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{SubsetIndex, ZeonElement, MAX_GENERATORS};
use crate::error::ZeonError;

/// One term of the JSON element form. `I` is a strictly increasing list of
/// 1-based generator indices; the empty list is the scalar term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRepr {
    #[serde(rename = "I")]
    pub index: Vec<usize>,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// JSON form: `{"n": 3, "terms": [{"I": [1,2], "re": -3.0, "im": 0.0}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementRepr {
    pub n: usize,
    pub terms: Vec<TermRepr>,
}

impl From<ZeonElement> for ElementRepr {
    fn from(u: ZeonElement) -> Self {
        ElementRepr::from(&u)
    }
}

impl From<&ZeonElement> for ElementRepr {
    fn from(u: &ZeonElement) -> Self {
        ElementRepr {
            n: u.n(),
            terms: u
                .terms()
                .map(|(i, c)| TermRepr {
                    index: i.generators().collect(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementRepr> for ZeonElement {
    type Error = ZeonError;

    fn try_from(repr: ElementRepr) -> Result<Self, ZeonError> {
        if repr.n > MAX_GENERATORS {
            return Err(ZeonError::Parse(format!(
                "n = {} exceeds {MAX_GENERATORS}",
                repr.n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.index.windows(2).any(|w| w[0] >= w[1]) {
                return Err(ZeonError::Parse(format!(
                    "index list {:?} is not strictly increasing",
                    t.index
                )));
            }
            if let Some(&bad) = t.index.iter().find(|&&g| g == 0 || g > repr.n) {
                return Err(ZeonError::Parse(format!(
                    "generator {bad} outside 1..={}",
                    repr.n
                )));
            }
            let index = SubsetIndex::from_generators(&t.index);
            if !seen.insert(index) {
                return Err(ZeonError::Parse(format!(
                    "duplicate term for blade {index}"
                )));
            }
            terms.push((index, Complex64::new(t.re, t.im)));
        }
        ZeonElement::from_terms(repr.n, terms).map_err(|e| ZeonError::Parse(e.to_string()))
    }
}

impl Serialize for ZeonElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZeonElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        ZeonElement::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_form() {
        let text = r#"{"n": 3, "terms": [{"I": [], "re": 5.0, "im": 0.0}, {"I": [1,2,3], "re": -4.0, "im": 0.0}]}"#;
        let u: ZeonElement = serde_json::from_str(text).unwrap();
        assert_eq!(u.to_string(), "5 - 4*z[1,2,3]");
        let back = serde_json::to_string(&u).unwrap();
        let again: ZeonElement = serde_json::from_str(&back).unwrap();
        assert_eq!(u, again);
    }

    #[test]
    fn rejects_bad_indices() {
        for bad in [
            r#"{"n": 2, "terms": [{"I": [2,1], "re": 1.0, "im": 0.0}]}"#,
            r#"{"n": 2, "terms": [{"I": [3], "re": 1.0, "im": 0.0}]}"#,
            r#"{"n": 2, "terms": [{"I": [0], "re": 1.0, "im": 0.0}]}"#,
            r#"{"n": 2, "terms": [{"I": [1], "re": 1.0}, {"I": [1], "re": 2.0}]}"#,
            r#"{"n": 64, "terms": []}"#,
            r#"{"n": 2, "terms": [], "extra": 1}"#,
        ] {
            assert!(serde_json::from_str::<ZeonElement>(bad).is_err(), "{bad}");
        }
    }
}
