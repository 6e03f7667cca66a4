//! Named-point serialization of spaces.
//!
//! Two input forms are accepted:
//!
//! * JSON: `{"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}`
//! * inline: `a,b | -; a; *`, where `-` is the empty set, `*` the whole space, and an
//!   open set is written either as concatenated one-letter names (`ab`) or with `+`
//!   between names (`p1+p2`).
//!
//! Point names are sorted lexicographically to fix the binding to indices `0..n`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mask::{default_point_name, SubsetMask};
use crate::space::{FiniteSpace, SpaceError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("JSON parse error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("inline parse error at column {column}: {message}")]
    Inline { column: usize, message: String },
    #[error("point `{0}` is listed twice")]
    DuplicatePoint(String),
    #[error("open set mentions unknown point `{0}`")]
    UnknownPoint(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A validated space together with its point names (index order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSpace {
    pub name: Option<String>,
    pub names: Vec<String>,
    pub space: FiniteSpace,
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn from_inline(text: &str) -> Result<Self, DocumentError> {
        let err = |column: usize, message: &str| DocumentError::Inline {
            column,
            message: message.to_string(),
        };
        let Some((points_part, opens_part)) = text.split_once('|') else {
            return Err(err(1, "expected `points | opens`"));
        };
        let points: Vec<String> = points_part
            .split(',')
            .map(|p| p.trim().to_string())
            .collect();
        if let Some(pos) = points.iter().position(|p| p.is_empty()) {
            let column = 1 + points_part
                .split(',')
                .take(pos)
                .map(|p| p.len() + 1)
                .sum::<usize>();
            return Err(err(column, "empty point name"));
        }
        let single_letters = points.iter().all(|p| p.chars().count() == 1);
        let mut opens = Vec::new();
        let mut offset = points_part.len() + 2;
        for raw in opens_part.split(';') {
            let column = offset + (raw.len() - raw.trim_start().len());
            offset += raw.len() + 1;
            let token = raw.trim();
            if token.is_empty() {
                if opens_part.trim().is_empty() {
                    break;
                }
                return Err(err(column, "empty open-set token (use `-` for φ)"));
            }
            let set: Vec<String> = match token {
                "-" => vec![],
                "*" => points.clone(),
                t if t.contains('+') => t.split('+').map(|p| p.trim().to_string()).collect(),
                t if single_letters => t.chars().map(|c| c.to_string()).collect(),
                t => vec![t.to_string()],
            };
            if let Some(bad) = set.iter().find(|p| !points.contains(p)) {
                return Err(err(column, &format!("unknown point `{bad}`")));
            }
            opens.push(set);
        }
        Ok(Self {
            name: None,
            points,
            opens,
        })
    }

    /// JSON if the text starts with `{`, inline otherwise.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_inline(text.trim())
        }
    }

    /// Binds names to indices and validates the topology.
    pub fn bind(&self) -> Result<NamedSpace, DocumentError> {
        let mut names = self.points.clone();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(DocumentError::DuplicatePoint(w[0].clone()));
        }
        if names.is_empty() {
            return Err(SpaceError::EmptyGroundSet.into());
        }
        if names.len() > crate::mask::MAX_POINTS {
            return Err(SpaceError::GroundSetTooLarge {
                n: names.len(),
                max: crate::mask::MAX_POINTS,
            }
            .into());
        }
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let n = names.len();
        let mut opens = Vec::with_capacity(self.opens.len());
        for set in &self.opens {
            let mut pts = Vec::with_capacity(set.len());
            for p in set {
                let i = index
                    .get(p.as_str())
                    .ok_or_else(|| DocumentError::UnknownPoint(p.clone()))?;
                pts.push(*i);
            }
            opens.push(SubsetMask::from_points(n, pts));
        }
        let space = FiniteSpace::new(n, opens)?;
        Ok(NamedSpace {
            name: self.name.clone(),
            names,
            space,
        })
    }

    /// Document for a space with the default point names `a, b, c, ...`.
    pub fn from_space(space: &FiniteSpace) -> Self {
        let names: Vec<String> = (0..space.n()).map(default_point_name).collect();
        Self::from_named(&names, space)
    }

    pub fn from_named(names: &[String], space: &FiniteSpace) -> Self {
        Self {
            name: None,
            points: names.to_vec(),
            opens: space
                .opens()
                .iter()
                .map(|u| u.points().map(|p| names[p].clone()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn to_inline(&self) -> String {
        let single = self.points.iter().all(|p| p.chars().count() == 1);
        let opens: Vec<String> = self
            .opens
            .iter()
            .map(|set| {
                if set.is_empty() {
                    "-".to_string()
                } else if set.len() == self.points.len() {
                    "*".to_string()
                } else if single {
                    set.concat()
                } else {
                    set.join("+")
                }
            })
            .collect();
        format!("{} | {}", self.points.join(","), opens.join("; "))
    }
}

impl NamedSpace {
    pub fn unnamed(space: FiniteSpace) -> Self {
        Self {
            name: None,
            names: (0..space.n()).map(default_point_name).collect(),
            space,
        }
    }

    pub fn document(&self) -> SpaceDocument {
        let mut doc = SpaceDocument::from_named(&self.names, &self.space);
        doc.name = self.name.clone();
        doc
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|p| p == name)
    }

    /// Parses a set written as `-`, `*`, concatenated one-letter names, or names
    /// separated by `+` or `,`.
    pub fn parse_set(&self, text: &str) -> Result<SubsetMask, DocumentError> {
        let n = self.space.n();
        let t = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if t == "-" || t.is_empty() || t == "φ" {
            return Ok(SubsetMask::empty(n));
        }
        if t == "*" || t == "X" && self.point("X").is_none() {
            return Ok(SubsetMask::full(n));
        }
        let single = self.names.iter().all(|p| p.chars().count() == 1);
        let parts: Vec<String> = if t.contains(['+', ',']) {
            t.split(['+', ',']).map(|p| p.trim().to_string()).collect()
        } else if single {
            t.chars().map(|c| c.to_string()).collect()
        } else {
            vec![t.to_string()]
        };
        let mut pts = Vec::new();
        for p in parts {
            pts.push(self.point(&p).ok_or(DocumentError::UnknownPoint(p))?);
        }
        Ok(SubsetMask::from_points(n, pts))
    }

    pub fn format_set(&self, a: SubsetMask) -> String {
        if a.is_empty() {
            return "φ".to_string();
        }
        let names: Vec<&str> = a.points().map(|p| self.names[p].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}
