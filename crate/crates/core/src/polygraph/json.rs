//! `{"dims": [[key, ...], ...], "boundaries": {key: {"src": expr, "tgt": expr}}}`

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::Polygraph;
use crate::cells::{parse_with, print, GenKey};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygraphJson {
    dims: Vec<Vec<String>>,
    #[serde(default)]
    boundaries: BTreeMap<String, BoundaryJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryJson {
    src: String,
    tgt: String,
}

impl Polygraph {
    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = PolygraphJson {
            dims: self
                .levels()
                .iter()
                .map(|l| l.iter().map(GenKey::to_json_key).collect())
                .collect(),
            boundaries: self
                .keys()
                .filter_map(|k| {
                    self.boundary_of(k).map(|(s, t)| {
                        (
                            k.to_json_key(),
                            BoundaryJson {
                                src: print(s),
                                tgt: print(t),
                            },
                        )
                    })
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("polygraph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("polygraph serializes")
    }

    /// Reads the JSON form. Boundary cells are parsed but not validated; see
    /// [`crate::polygraph::validate`].
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PolygraphJson = serde_json::from_str(text)?;
        let mut name_dims: HashMap<String, usize> = HashMap::new();
        for (d, level) in doc.dims.iter().enumerate() {
            for k in level {
                if name_dims.insert(k.clone(), d).is_some() {
                    return Err(Error::Json(format!("key {k:?} listed twice")));
                }
            }
        }
        let key_of = |text: &str| GenKey::from_json_key(text, |n| name_dims.get(n).copied());
        let levels = doc
            .dims
            .iter()
            .map(|l| l.iter().map(|k| key_of(k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut resolve = |name: &str| {
            name_dims
                .get(name)
                .map(|d| GenKey::named(name, *d))
        };
        let mut boundaries = HashMap::new();
        for (k, b) in &doc.boundaries {
            let key = key_of(k)?;
            let src = parse_with(&b.src, &mut resolve)?;
            let tgt = parse_with(&b.tgt, &mut resolve)?;
            boundaries.insert(key, (src, tgt));
        }
        Polygraph::from_parts(levels, boundaries)
    }
}
