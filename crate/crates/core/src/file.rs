//! JSON game files.
//!
//! ```json
//! {"n": 6, "kind": "weighted", "weights": [50, 50, 50, 24, 23, 1], "quota": 102}
//! {"n": 5, "kind": "mwc", "mwc": [[1, 2, 3, 4], [1, 4, 5]]}
//! {"n": 4, "kind": "winning", "winning": [[1, 2], [1, 2, 3]]}
//! {"n": 6, "kind": "apex", "apex": 1}
//! {"n": 8, "kind": "majority", "quota": 5}
//! ```
//!
//! Player ids are 1-based. Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::game::{validate, Representation, SimpleGame, ValidationOptions, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    Mwc,
    Winning,
    Weighted,
    Apex,
    Majority,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub n: usize,
    pub kind: GameKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mwc: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winning: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quota: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apex: Option<usize>,
}

impl GameFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    fn missing(&self, field: &str) -> Error {
        let kind = serde_json::to_string(&self.kind).unwrap_or_default();
        Error::Parse(format!("field `{field}` is required for kind {kind}"))
    }

    fn stray(&self) -> Result<()> {
        let allowed: &[&str] = match self.kind {
            GameKind::Mwc => &["mwc"],
            GameKind::Winning => &["winning"],
            GameKind::Weighted => &["weights", "quota"],
            GameKind::Apex => &["apex"],
            GameKind::Majority => &["quota"],
        };
        let present = [
            ("mwc", self.mwc.is_some()),
            ("winning", self.winning.is_some()),
            ("weights", self.weights.is_some()),
            ("quota", self.quota.is_some()),
            ("apex", self.apex.is_some()),
        ];
        for (name, set) in present {
            if set && !allowed.contains(&name) {
                return Err(Error::Parse(format!(
                    "field `{name}` does not apply to this kind"
                )));
            }
        }
        Ok(())
    }

    fn coalitions(&self, field: &str, lists: &[Vec<usize>]) -> Result<Vec<Coalition>> {
        lists
            .iter()
            .enumerate()
            .map(|(i, ids)| {
                if let Some(&bad) = ids.iter().find(|&&id| id == 0 || id > self.n) {
                    return Err(Error::Parse(format!(
                        "`{field}[{i}]`: player id {bad} out of range 1..={}",
                        self.n
                    )));
                }
                Coalition::from_ids(ids.iter().copied())
            })
            .collect()
    }

    /// The described representation, with ids range-checked.
    pub fn representation(&self) -> Result<Representation> {
        if self.n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers(self.n));
        }
        self.stray()?;
        Ok(match self.kind {
            GameKind::Mwc => {
                let lists = self.mwc.as_ref().ok_or_else(|| self.missing("mwc"))?;
                Representation::MinimalWinning(self.coalitions("mwc", lists)?)
            }
            GameKind::Winning => {
                let lists = self
                    .winning
                    .as_ref()
                    .ok_or_else(|| self.missing("winning"))?;
                let mut list = self.coalitions("winning", lists)?;
                list.sort();
                list.dedup();
                Representation::ExplicitWinning(list)
            }
            GameKind::Weighted => Representation::Weighted {
                weights: self
                    .weights
                    .clone()
                    .ok_or_else(|| self.missing("weights"))?,
                quota: self.quota.ok_or_else(|| self.missing("quota"))?,
            },
            GameKind::Apex => {
                let a = self.apex.ok_or_else(|| self.missing("apex"))?;
                if a == 0 || a > self.n {
                    return Err(Error::Parse(format!(
                        "`apex`: player id {a} out of range 1..={}",
                        self.n
                    )));
                }
                Representation::Apex(PlayerId::new(a)?)
            }
            GameKind::Majority => {
                Representation::Majority(self.quota.ok_or_else(|| self.missing("quota"))? as usize)
            }
        })
    }

    pub fn validate(&self, opts: ValidationOptions) -> Result<ValidationReport> {
        Ok(validate(self.n, &self.representation()?, opts))
    }

    pub fn into_game(self, opts: ValidationOptions) -> Result<SimpleGame> {
        let repr = self.representation()?;
        SimpleGame::with_options(self.n, repr, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_every_kind() {
        let texts = [
            r#"{"n": 6, "kind": "weighted", "weights": [50, 50, 50, 24, 23, 1], "quota": 102}"#,
            r#"{"n": 5, "kind": "mwc", "mwc": [[1, 2, 3, 4], [1, 4, 5]]}"#,
            r#"{"n": 3, "kind": "winning", "winning": [[1, 2], [1, 2, 3]]}"#,
            r#"{"n": 6, "kind": "apex", "apex": 1}"#,
            r#"{"n": 8, "kind": "majority", "quota": 5}"#,
        ];
        for t in texts {
            let f = GameFile::parse(t).unwrap();
            assert!(
                f.validate(ValidationOptions::default()).unwrap().is_valid(),
                "{t}"
            );
            assert!(f.into_game(ValidationOptions::default()).is_ok());
        }
    }

    #[test]
    fn rejects_unknown_and_misplaced_fields() {
        assert!(GameFile::parse(r#"{"n": 3, "kind": "apex", "apex": 1, "extra": 2}"#).is_err());
        let f = GameFile::parse(r#"{"n": 3, "kind": "apex", "apex": 1, "quota": 2}"#).unwrap();
        assert!(f.representation().is_err());
        let f = GameFile::parse(r#"{"n": 3, "kind": "mwc"}"#).unwrap();
        assert!(matches!(f.representation(), Err(Error::Parse(m)) if m.contains("`mwc`")));
        assert!(GameFile::parse(r#"{"n": 3, "kind": "other"}"#).is_err());
    }

    #[test]
    fn reports_out_of_range_ids_by_field() {
        let f = GameFile::parse(r#"{"n": 3, "kind": "mwc", "mwc": [[1], [2, 4]]}"#).unwrap();
        let err = f.representation().unwrap_err().to_string();
        assert!(err.contains("mwc[1]") && err.contains('4'), "{err}");
    }

    #[test]
    fn nested_mwc_fails_validation() {
        let f = GameFile::parse(r#"{"n": 3, "kind": "mwc", "mwc": [[1, 2], [1, 2, 3]]}"#).unwrap();
        let report = f.validate(ValidationOptions::default()).unwrap();
        assert!(!report.is_valid());
        assert!(report.to_string().contains("antichain"));
    }

    #[test]
    fn weak_majority_needs_override() {
        let f = GameFile::parse(r#"{"n": 8, "kind": "majority", "quota": 4}"#).unwrap();
        assert!(!f.validate(ValidationOptions::default()).unwrap().is_valid());
        assert!(f
            .validate(ValidationOptions {
                allow_weak_quota: true
            })
            .unwrap()
            .is_valid());
    }
}
