//! Named example spaces shipped with the crate.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::document::{NamedSpace, SpaceDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fixture {
    Tau1,
    Tau2,
    Sigma,
    Sigma1,
    Sigma2,
    Eta1,
    /// The four-point space {φ, X, {a}, {b}, {a,b}, {a,b,c}}.
    TauExample,
}

impl Fixture {
    pub const ALL: [Fixture; 7] = [
        Fixture::Tau1,
        Fixture::Tau2,
        Fixture::Sigma,
        Fixture::Sigma1,
        Fixture::Sigma2,
        Fixture::Eta1,
        Fixture::TauExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Tau1 => "tau1",
            Fixture::Tau2 => "tau2",
            Fixture::Sigma => "sigma",
            Fixture::Sigma1 => "sigma1",
            Fixture::Sigma2 => "sigma2",
            Fixture::Eta1 => "eta1",
            Fixture::TauExample => "tau-example",
        }
    }

    /// Pretty name in the usual `(X, τ)` notation.
    pub fn label(self) -> &'static str {
        match self {
            Fixture::Tau1 => "(X,τ1)",
            Fixture::Tau2 => "(X,τ2)",
            Fixture::Sigma => "(Y,σ)",
            Fixture::Sigma1 => "(X,σ1)",
            Fixture::Sigma2 => "(Y,σ2)",
            Fixture::Eta1 => "(Z,η1)",
            Fixture::TauExample => "(X,τ)",
        }
    }

    pub fn json(self) -> &'static str {
        match self {
            Fixture::Tau1 => include_str!("../../fixtures/tau1.json"),
            Fixture::Tau2 => include_str!("../../fixtures/tau2.json"),
            Fixture::Sigma => include_str!("../../fixtures/sigma.json"),
            Fixture::Sigma1 => include_str!("../../fixtures/sigma1.json"),
            Fixture::Sigma2 => include_str!("../../fixtures/sigma2.json"),
            Fixture::Eta1 => include_str!("../../fixtures/eta1.json"),
            Fixture::TauExample => include_str!("../../fixtures/tau-example.json"),
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn space(self) -> &'static NamedSpace {
        static CACHE: OnceLock<Vec<NamedSpace>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            Fixture::ALL
                .iter()
                .map(|f| {
                    SpaceDocument::from_json(f.json())
                        .and_then(|d| d.bind())
                        .unwrap_or_else(|e| panic!("fixture {} is invalid: {e}", f.name()))
                })
                .collect()
        });
        &all[self as usize]
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A fixture, or the subspace of a fixture on the named points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureRef {
    Space(Fixture),
    Subspace(Fixture, &'static str),
}

impl FixtureRef {
    pub fn label(self) -> String {
        match self {
            FixtureRef::Space(f) => f.label().to_string(),
            FixtureRef::Subspace(f, pts) => format!("{} restricted to {pts}", f.label()),
        }
    }

    pub fn key(self) -> String {
        match self {
            FixtureRef::Space(f) => f.name().to_string(),
            FixtureRef::Subspace(f, pts) => format!("{}|{pts}", f.name()),
        }
    }

    pub fn resolve(self) -> NamedSpace {
        match self {
            FixtureRef::Space(f) => f.space().clone(),
            FixtureRef::Subspace(f, pts) => {
                let base = f.space();
                let y = base
                    .parse_set(pts)
                    .unwrap_or_else(|e| panic!("bad subspace {pts} of {}: {e}", f.name()));
                let space = base
                    .space
                    .subspace(y)
                    .unwrap_or_else(|e| panic!("bad subspace {pts} of {}: {e}", f.name()));
                NamedSpace {
                    name: Some(self.key()),
                    names: y.points().map(|p| base.names[p].clone()).collect(),
                    space,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        for f in Fixture::ALL {
            let s = f.space();
            assert_eq!(s.name.as_deref(), Some(f.name()));
            assert_eq!(Fixture::from_name(f.name()), Some(f));
        }
        assert_eq!(Fixture::Eta1.space().space.n(), 6);
        assert_eq!(Fixture::Tau2.space().space.opens().len(), 9);
    }

    #[test]
    fn subspace_fixture() {
        let s = FixtureRef::Subspace(Fixture::Sigma, "ac").resolve();
        assert_eq!(s.names, vec!["a", "c"]);
        assert_eq!(
            s.space.opens().iter().map(|u| u.bits()).collect::<Vec<_>>(),
            [0, 1, 3]
        );
    }
}
