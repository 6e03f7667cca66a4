//! The small predicate language claims are written in.

use std::fmt;

use crate::axioms::AxiomId;
use crate::classes::{Polarity, SetClass, SpaceAnalysis};
use crate::document::NamedSpace;
use crate::maps::PointMap;
use crate::mask::full_bits;

/// A family of subsets of the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Class(SetClass, Polarity),
    /// Sets `A` such that every closed `F ⊆ A` lies inside the class interior of `A`.
    ClosedSubsetsInInterior(SetClass),
}

impl Family {
    pub(crate) fn contains(self, s: &SpaceAnalysis, a: u32) -> bool {
        match self {
            Family::Class(c, p) => s.member(a, c, p),
            Family::ClosedSubsetsInInterior(c) => {
                let full = full_bits(s.n());
                let interior = !s.closure_table(c)[(full & !a) as usize] & full;
                let mut f = a;
                loop {
                    if s.member(f, SetClass::Open, Polarity::Closed) && f & !interior != 0 {
                        return false;
                    }
                    if f == 0 {
                        return true;
                    }
                    f = (f - 1) & a;
                }
            }
        }
    }

    /// Classes whose families are worth printing when a claim on this family fails.
    fn classes(self) -> Vec<(SetClass, Polarity)> {
        match self {
            Family::Class(c, p) => vec![(c, p)],
            Family::ClosedSubsetsInInterior(c) => {
                vec![(c, Polarity::Open), (SetClass::Open, Polarity::Closed)]
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Class(c, p) => f.write_str(&c.label(*p)),
            Family::ClosedSubsetsInInterior(c) => write!(
                f,
                "{{A : F ⊆ {}-int(A) for every closed F ⊆ A}}",
                c.label(Polarity::Open).trim_end_matches("-open")
            ),
        }
    }
}

/// A statement about one point `x` of the space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointProp {
    /// `{x}` belongs to the family.
    Singleton(Family),
    /// `X \ {x}` belongs to the family.
    Cosingleton(Family),
    /// The class kernel of `x` is not the whole space.
    KernelProper(SetClass),
    /// Some class-closed set other than `X` contains `x`.
    InProperClosed(SetClass),
    AnyOf(Vec<PointProp>),
}

impl PointProp {
    fn holds(&self, s: &SpaceAnalysis, x: usize) -> bool {
        let full = full_bits(s.n());
        match self {
            PointProp::Singleton(fam) => fam.contains(s, 1 << x),
            PointProp::Cosingleton(fam) => fam.contains(s, full & !(1 << x)),
            PointProp::KernelProper(c) => s.open_meet_table(*c)[1 << x] != full,
            PointProp::InProperClosed(c) => {
                (0..full).any(|a| a >> x & 1 == 1 && s.member(a, *c, Polarity::Closed))
            }
            PointProp::AnyOf(ps) => ps.iter().any(|p| p.holds(s, x)),
        }
    }

    fn families(&self, out: &mut Vec<(SetClass, Polarity)>) {
        match self {
            PointProp::Singleton(f) | PointProp::Cosingleton(f) => out.extend(f.classes()),
            PointProp::KernelProper(c) => out.push((*c, Polarity::Open)),
            PointProp::InProperClosed(c) => out.push((*c, Polarity::Closed)),
            PointProp::AnyOf(ps) => ps.iter().for_each(|p| p.families(out)),
        }
    }
}

impl fmt::Display for PointProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointProp::Singleton(fam) => write!(f, "{{x}} is {fam}"),
            PointProp::Cosingleton(fam) => write!(f, "X∖{{x}} is {fam}"),
            PointProp::KernelProper(c) => {
                write!(
                    f,
                    "{}-ker(x) ≠ X",
                    c.label(Polarity::Open).trim_end_matches("-open")
                )
            }
            PointProp::InProperClosed(c) => {
                write!(f, "x lies in a proper {} set", c.label(Polarity::Closed))
            }
            PointProp::AnyOf(ps) => {
                let parts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" or "))
            }
        }
    }
}

/// A statement about a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prop {
    Axiom(AxiomId),
    Not(Box<Prop>),
    All(Vec<Prop>),
    /// A set given by point names belongs to a class. Only meaningful on named spaces.
    Member {
        set: &'static str,
        class: SetClass,
        polarity: Polarity,
    },
    FamilyEq(Family, Family),
    FamilySubset(Family, Family),
    EveryPoint(PointProp),
    /// For every member `A` of `member`, `class_closure(A) ∖ A` contains no nonempty
    /// member of `forbidden`.
    ResidueAvoids {
        member: Family,
        closure: SetClass,
        forbidden: Family,
    },
}

/// Failure to evaluate a prop, e.g. a fixture set naming an unknown point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError(pub String);

impl Prop {
    pub fn eval(&self, s: &SpaceAnalysis, names: Option<&NamedSpace>) -> Result<bool, EvalError> {
        let n = s.n();
        let all = 0..1u32 << n;
        Ok(match self {
            Prop::Axiom(id) => id.holds(s),
            Prop::Not(p) => !p.eval(s, names)?,
            Prop::All(ps) => {
                for p in ps {
                    if !p.eval(s, names)? {
                        return Ok(false);
                    }
                }
                true
            }
            Prop::Member {
                set,
                class,
                polarity,
            } => {
                let named =
                    names.ok_or_else(|| EvalError(format!("set {set} needs named points")))?;
                let a = named
                    .parse_set(set)
                    .map_err(|e| EvalError(format!("set {set}: {e}")))?;
                s.is_in_class(a, *class, *polarity)
                    .map_err(|e| EvalError(e.to_string()))?
            }
            Prop::FamilyEq(a, b) => all
                .into_iter()
                .all(|x| a.contains(s, x) == b.contains(s, x)),
            Prop::FamilySubset(a, b) => all
                .into_iter()
                .all(|x| !a.contains(s, x) || b.contains(s, x)),
            Prop::EveryPoint(p) => (0..n).all(|x| p.holds(s, x)),
            Prop::ResidueAvoids {
                member,
                closure,
                forbidden,
            } => {
                let cl = s.closure_table(*closure);
                all.into_iter().filter(|&a| member.contains(s, a)).all(|a| {
                    let residue = cl[a as usize] & !a;
                    let mut f = residue;
                    while f != 0 {
                        if forbidden.contains(s, f) {
                            return false;
                        }
                        f = (f - 1) & residue;
                    }
                    true
                })
            }
        })
    }

    /// Classes this prop depends on, for failure dumps.
    pub fn families(&self) -> Vec<(SetClass, Polarity)> {
        let mut out = Vec::new();
        self.collect_families(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_families(&self, out: &mut Vec<(SetClass, Polarity)>) {
        match self {
            Prop::Axiom(AxiomId::Template(_, c)) => {
                out.push((*c, Polarity::Open));
                out.push((*c, Polarity::Closed));
            }
            Prop::Axiom(AxiomId::Bespoke(b)) => {
                use crate::axioms::Bespoke::*;
                let cs: &[SetClass] = match b {
                    THalf => &[SetClass::G, SetClass::Open],
                    HStarTHalf => &[SetClass::GHStar, SetClass::HStar],
                    HStarTb => &[SetClass::HStarG, SetClass::Open],
                    HStarTd => &[SetClass::HStarG, SetClass::G],
                    AlphaSpace => &[SetClass::Alpha, SetClass::Open],
                };
                out.extend(cs.iter().map(|&c| (c, Polarity::Closed)));
            }
            Prop::Not(p) => p.collect_families(out),
            Prop::All(ps) => ps.iter().for_each(|p| p.collect_families(out)),
            Prop::Member {
                class, polarity, ..
            } => out.push((*class, *polarity)),
            Prop::FamilyEq(a, b) | Prop::FamilySubset(a, b) => {
                out.extend(a.classes());
                out.extend(b.classes());
            }
            Prop::EveryPoint(p) => p.families(out),
            Prop::ResidueAvoids {
                member,
                closure,
                forbidden,
            } => {
                out.extend(member.classes());
                out.push((*closure, Polarity::Closed));
                out.extend(forbidden.classes());
            }
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Axiom(id) => f.write_str(&id.label()),
            Prop::Not(p) => match **p {
                Prop::All(_) => write!(f, "¬({p})"),
                _ => write!(f, "¬{p}"),
            },
            Prop::All(ps) => {
                let parts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                f.write_str(&parts.join(" ∧ "))
            }
            Prop::Member {
                set,
                class,
                polarity,
            } => write!(f, "{{{set}}} is {}", class.label(*polarity)),
            Prop::FamilyEq(a, b) => write!(f, "{a} = {b}"),
            Prop::FamilySubset(a, b) => write!(f, "{a} ⊆ {b}"),
            Prop::EveryPoint(p) => write!(f, "∀x: {p}"),
            Prop::ResidueAvoids {
                member,
                closure,
                forbidden,
            } => write!(
                f,
                "{member} A ⇒ {}-cl(A)∖A has no nonempty {forbidden} subset",
                closure.label(Polarity::Closed).trim_end_matches("-closed")
            ),
        }
    }
}

/// A statement about a point map, possibly through the spaces induced by the H*-open
/// families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapProp {
    Homeomorphism,
    PreHStarClosed,
    PreHStarOpen,
    HStarIrresolute,
    /// The inverse of a bijection is H*-irresolute.
    InverseHStarIrresolute,
    InducedClosed,
    InducedOpen,
    InducedContinuous,
    Source(AxiomId),
    Target(AxiomId),
}

impl MapProp {
    pub fn needs_induced(self) -> bool {
        matches!(
            self,
            MapProp::InducedClosed | MapProp::InducedOpen | MapProp::InducedContinuous
        )
    }

    /// `induced` is the same map between the induced spaces, when both are topologies.
    pub(crate) fn holds(self, f: &PointMap<'_>, induced: Option<&PointMap<'_>>) -> Option<bool> {
        Some(match self {
            MapProp::Homeomorphism => f.is_homeomorphism(),
            MapProp::PreHStarClosed => f.is_pre_hstar_closed(),
            MapProp::PreHStarOpen => f.is_pre_hstar_open(),
            MapProp::HStarIrresolute => f.is_hstar_irresolute(),
            MapProp::InverseHStarIrresolute => {
                if !f.is_bijective() {
                    return Some(false);
                }
                let inv = crate::maps::inverse(f.assignment());
                PointMap::new(f.target(), f.source(), &inv)
                    .expect("inverse of a bijection is a map")
                    .is_hstar_irresolute()
            }
            MapProp::InducedClosed => induced?.is_closed_map(),
            MapProp::InducedOpen => induced?.is_open_map(),
            MapProp::InducedContinuous => induced?.is_continuous(),
            MapProp::Source(a) => a.holds(f.source()),
            MapProp::Target(a) => a.holds(f.target()),
        })
    }
}

impl fmt::Display for MapProp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapProp::Homeomorphism => f.write_str("f is a homeomorphism"),
            MapProp::PreHStarClosed => f.write_str("f is pre H*-closed"),
            MapProp::PreHStarOpen => f.write_str("f is pre H*-open"),
            MapProp::HStarIrresolute => f.write_str("f is H*-irresolute"),
            MapProp::InverseHStarIrresolute => f.write_str("f⁻¹ is H*-irresolute"),
            MapProp::InducedClosed => f.write_str("f: (X,τ^H*) → (Y,σ^H*) is closed"),
            MapProp::InducedOpen => f.write_str("f: (X,τ^H*) → (Y,σ^H*) is open"),
            MapProp::InducedContinuous => f.write_str("f: (X,τ^H*) → (Y,σ^H*) is continuous"),
            MapProp::Source(a) => write!(f, "X is {}", a.label()),
            MapProp::Target(a) => write!(f, "Y is {}", a.label()),
        }
    }
}
