use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GradedPoset, Poset, PosetError};

/// Serialized form of a poset. Graded posets fill in `rank`, `bottom` and
/// `top`; plain posets omit them. Fields are declared in key order so the
/// emitted JSON has sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    pub covers: Vec<[String; 2]>,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
}

impl Poset {
    pub fn to_json_value(&self) -> PosetJson {
        PosetJson {
            bottom: None,
            covers: self
                .covers()
                .iter()
                .map(|&(i, j)| [self.label(i).to_string(), self.label(j).to_string()])
                .collect(),
            elements: self.labels().to_vec(),
            rank: None,
            top: None,
        }
    }

    pub fn from_json_value(j: &PosetJson) -> Result<Poset, PosetError> {
        let covers: Vec<(&str, &str)> = j
            .covers
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let elements: Vec<&str> = j.elements.iter().map(String::as_str).collect();
        Poset::new(&elements, &covers)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Poset, PosetError> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| PosetError::Json(e.to_string()))?;
        Poset::from_json_value(&j)
    }
}

impl GradedPoset {
    pub fn to_json_value(&self) -> PosetJson {
        let mut j = self.poset().to_json_value();
        j.bottom = Some(self.label(self.bottom()).to_string());
        j.top = Some(self.label(self.top()).to_string());
        j.rank = Some(
            (0..self.len())
                .map(|i| (self.label(i).to_string(), self.rank_of(i)))
                .collect(),
        );
        j
    }

    /// Rebuilds from serialized form; any stored rank, bottom or top must
    /// agree with what the covers determine.
    pub fn from_json_value(j: &PosetJson) -> Result<GradedPoset, PosetError> {
        let covers: Vec<(&str, &str)> = j
            .covers
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let elements: Vec<&str> = j.elements.iter().map(String::as_str).collect();
        let g = GradedPoset::build(&elements, &covers)?;
        if let Some(b) = &j.bottom {
            if b != g.label(g.bottom()) {
                return Err(PosetError::RankMismatch(format!("bottom `{b}`")));
            }
        }
        if let Some(t) = &j.top {
            if t != g.label(g.top()) {
                return Err(PosetError::RankMismatch(format!("top `{t}`")));
            }
        }
        if let Some(rank) = &j.rank {
            if rank.len() != g.len() {
                return Err(PosetError::RankMismatch("rank map size".into()));
            }
            for i in 0..g.len() {
                if rank.get(g.label(i)) != Some(&g.rank_of(i)) {
                    return Err(PosetError::RankMismatch(format!("rank of `{}`", g.label(i))));
                }
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<GradedPoset, PosetError> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| PosetError::Json(e.to_string()))?;
        GradedPoset::from_json_value(&j)
    }
}
