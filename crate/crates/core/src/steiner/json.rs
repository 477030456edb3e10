//! `{"basis": [[key, ...], ...], "d": {key: {key: int}}}`

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::AugDirComplex;
use crate::cells::GenKey;
use crate::error::{Error, Result};
use crate::polygraph::Chain;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdcJson {
    basis: Vec<Vec<String>>,
    #[serde(default)]
    d: BTreeMap<String, BTreeMap<String, i64>>,
}

impl AugDirComplex {
    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = AdcJson {
            basis: self
                .bases()
                .iter()
                .map(|l| l.iter().map(GenKey::to_json_key).collect())
                .collect(),
            d: self
                .keys()
                .filter(|k| k.dim() > 0)
                .map(|k| {
                    let d = self.diff_of(k).expect("basis element");
                    (
                        k.to_json_key(),
                        d.iter().map(|(x, v)| (x.to_json_key(), v)).collect(),
                    )
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("complex serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AdcJson = serde_json::from_str(text)?;
        let mut dims: HashMap<&str, usize> = HashMap::new();
        for (d, level) in doc.basis.iter().enumerate() {
            for k in level {
                if dims.insert(k, d).is_some() {
                    return Err(Error::Json(format!("key {k:?} listed twice")));
                }
            }
        }
        let key_of = |text: &str| GenKey::from_json_key(text, |n| dims.get(n).copied());
        let bases = doc
            .basis
            .iter()
            .map(|l| l.iter().map(|k| key_of(k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut diff = HashMap::new();
        for (k, terms) in &doc.d {
            let key = key_of(k)?;
            if key.dim() == 0 {
                return Err(Error::Json(format!("0-dimensional {k} has a differential")));
            }
            let mut c = Chain::zero(key.dim() - 1);
            for (x, v) in terms {
                let xk = key_of(x)?;
                if xk.dim() + 1 != key.dim() {
                    return Err(Error::Json(format!("d{k} mentions {x} of dimension {}", xk.dim())));
                }
                c.add_term(xk, *v);
            }
            diff.insert(key, c);
        }
        AugDirComplex::new(bases, diff)
    }
}
