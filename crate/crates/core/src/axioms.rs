//! Separation axioms, as class-parameterized templates plus a few bespoke axioms that
//! compare whole class families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::classes::{Polarity, SetClass, SpaceAnalysis};
use crate::mask::full_bits;

/// Separation templates, each instantiated with a set class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Template {
    C0,
    C1,
    WeaklyC0,
    R0,
    WeaklyR0,
    T0,
    T1,
}

impl Template {
    pub const ALL: [Template; 7] = [
        Template::C0,
        Template::C1,
        Template::WeaklyC0,
        Template::R0,
        Template::WeaklyR0,
        Template::T0,
        Template::T1,
    ];

    fn stem(self) -> &'static str {
        match self {
            Template::C0 | Template::WeaklyC0 => "c0",
            Template::C1 => "c1",
            Template::R0 | Template::WeaklyR0 => "r0",
            Template::T0 => "t0",
            Template::T1 => "t1",
        }
    }

    fn is_weak(self) -> bool {
        matches!(self, Template::WeaklyC0 | Template::WeaklyR0)
    }
}

/// Axioms defined by comparing class families rather than separating points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bespoke {
    /// Every g-closed set is closed.
    THalf,
    /// Every gH*-closed set is H*-closed.
    HStarTHalf,
    /// Every H*g-closed set is closed.
    HStarTb,
    /// Every H*g-closed set is g-closed.
    HStarTd,
    /// Every α-open set is open.
    AlphaSpace,
}

impl Bespoke {
    pub const ALL: [Bespoke; 5] = [
        Bespoke::THalf,
        Bespoke::HStarTHalf,
        Bespoke::HStarTb,
        Bespoke::HStarTd,
        Bespoke::AlphaSpace,
    ];

    fn name(self) -> &'static str {
        match self {
            Bespoke::THalf => "t-half",
            Bespoke::HStarTHalf => "h*-t-half",
            Bespoke::HStarTb => "h*-tb",
            Bespoke::HStarTd => "h*-td",
            Bespoke::AlphaSpace => "alpha-space",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Template(Template, SetClass),
    Bespoke(Bespoke),
}

impl AxiomId {
    pub const fn of(template: Template, class: SetClass) -> Self {
        AxiomId::Template(template, class)
    }

    /// Machine name such as `sc*-c0`, `weakly-semi-r0`, `h*-tb`.
    pub fn name(self) -> String {
        match self {
            AxiomId::Bespoke(b) => b.name().to_string(),
            AxiomId::Template(Template::WeaklyC0, SetClass::Open) => "w-c0".to_string(),
            AxiomId::Template(t, SetClass::W) => format!("{}@w", template_key(t)),
            AxiomId::Template(t, c) => {
                let weak = if t.is_weak() { "weakly-" } else { "" };
                let prefix = match c {
                    SetClass::Open => String::new(),
                    other => format!("{}-", other.name()),
                };
                format!("{weak}{prefix}{}", t.stem())
            }
        }
    }

    /// Conventional notation such as `weakly SC*-R0` or `H*-T½`.
    pub fn label(self) -> String {
        match self {
            AxiomId::Bespoke(Bespoke::THalf) => "T½".into(),
            AxiomId::Bespoke(Bespoke::HStarTHalf) => "H*-T½".into(),
            AxiomId::Bespoke(Bespoke::HStarTb) => "H*-Tb".into(),
            AxiomId::Bespoke(Bespoke::HStarTd) => "H*-Td".into(),
            AxiomId::Bespoke(Bespoke::AlphaSpace) => "α-space".into(),
            AxiomId::Template(Template::WeaklyC0, SetClass::Open) => "w-C0".into(),
            AxiomId::Template(t, c) => {
                let weak = if t.is_weak() { "weakly " } else { "" };
                let stem = t.stem().to_ascii_uppercase();
                let prefix = match c {
                    SetClass::Open => String::new(),
                    other => {
                        let l = other.label(Polarity::Open);
                        format!("{}-", l.trim_end_matches("-open"))
                    }
                };
                format!("{weak}{prefix}{stem}")
            }
        }
    }

    /// Every axiom instance that carries a name in the literature this crate follows.
    pub fn named() -> Vec<AxiomId> {
        use SetClass::*;
        use Template::*;
        vec![
            AxiomId::of(C0, Open),
            AxiomId::of(C1, Open),
            AxiomId::of(C0, Semi),
            AxiomId::of(C1, Semi),
            AxiomId::of(C0, Alpha),
            AxiomId::of(WeaklyC0, Open),
            AxiomId::of(WeaklyC0, Semi),
            AxiomId::of(WeaklyC0, Pre),
            AxiomId::of(R0, Open),
            AxiomId::of(R0, Semi),
            AxiomId::of(WeaklyR0, Open),
            AxiomId::of(WeaklyR0, Semi),
            AxiomId::of(WeaklyR0, Pre),
            AxiomId::of(C0, SCStar),
            AxiomId::of(C1, SCStar),
            AxiomId::of(WeaklyC0, SCStar),
            AxiomId::of(WeaklyR0, SCStar),
            AxiomId::of(T0, Open),
            AxiomId::of(T1, Open),
            AxiomId::of(T0, Semi),
            AxiomId::of(T1, Semi),
            AxiomId::of(T1, HStar),
            AxiomId::Bespoke(Bespoke::THalf),
            AxiomId::Bespoke(Bespoke::HStarTHalf),
            AxiomId::Bespoke(Bespoke::HStarTb),
            AxiomId::Bespoke(Bespoke::HStarTd),
            AxiomId::Bespoke(Bespoke::AlphaSpace),
        ]
    }

    /// Decides the axiom on a space.
    pub fn holds(self, s: &SpaceAnalysis) -> bool {
        match self {
            AxiomId::Template(t, c) => match t {
                Template::C0 => class_c0(s, c),
                Template::C1 => class_c1(s, c),
                Template::WeaklyC0 => weakly_class_c0(s, c),
                Template::R0 => class_r0(s, c),
                Template::WeaklyR0 => weakly_class_r0(s, c),
                Template::T0 => class_t0(s, c),
                Template::T1 => class_t1(s, c),
            },
            AxiomId::Bespoke(b) => bespoke_axiom(s, b),
        }
    }
}

fn template_key(t: Template) -> &'static str {
    match t {
        Template::WeaklyC0 => "weakly-c0",
        Template::WeaklyR0 => "weakly-r0",
        other => other.stem(),
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomParseError {
    #[error("unknown axiom name `{0}`")]
    UnknownAxiomName(String),
    #[error("axiom `{0}` needs a class with open/closed polarity")]
    RawClass(String),
}

impl FromStr for AxiomId {
    type Err = AxiomParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let unknown = || AxiomParseError::UnknownAxiomName(s.to_string());
        for b in Bespoke::ALL {
            if key == b.name() {
                return Ok(AxiomId::Bespoke(b));
            }
        }
        match key.as_str() {
            "t1/2" | "t½" | "thalf" => return Ok(AxiomId::Bespoke(Bespoke::THalf)),
            "h*-t1/2" | "h*-t½" => return Ok(AxiomId::Bespoke(Bespoke::HStarTHalf)),
            "w-c0" | "weakly-c0" => return Ok(AxiomId::of(Template::WeaklyC0, SetClass::Open)),
            _ => {}
        }
        let (template_part, class_part) = match key.split_once('@') {
            Some((t, c)) => (t.to_string(), c.to_string()),
            None => {
                let (weak, rest) = match key.strip_prefix("weakly-") {
                    Some(r) => ("weakly-", r),
                    None => ("", key.as_str()),
                };
                match rest.rsplit_once('-') {
                    Some((c, t)) => (format!("{weak}{t}"), c.to_string()),
                    None => (format!("{weak}{rest}"), String::new()),
                }
            }
        };
        let template = match template_part.as_str() {
            "c0" => Template::C0,
            "c1" => Template::C1,
            "weakly-c0" => Template::WeaklyC0,
            "r0" => Template::R0,
            "weakly-r0" => Template::WeaklyR0,
            "t0" => Template::T0,
            "t1" => Template::T1,
            _ => return Err(unknown()),
        };
        let class: SetClass = class_part.parse().map_err(|_| unknown())?;
        if !class.is_complement_symmetric() {
            return Err(AxiomParseError::RawClass(s.to_string()));
        }
        Ok(AxiomId::of(template, class))
    }
}

impl Serialize for AxiomId {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomId {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Distinct values of `class_closure(G)` over the class-open sets `G`.
fn closures_of_open_sets(s: &SpaceAnalysis, c: SetClass) -> Vec<u32> {
    let cl = s.closure_table(c);
    let mut out: Vec<u32> = (0..cl.len() as u32)
        .filter(|&g| s.member(g, c, Polarity::Open))
        .map(|g| cl[g as usize])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

/// Some class-open `G` has a class closure containing exactly one of `x`, `y`, for all
/// `x ≠ y`.
pub fn class_c0(s: &SpaceAnalysis, c: SetClass) -> bool {
    let cls = closures_of_open_sets(s, c);
    pairs(s.n()).all(|(x, y)| cls.iter().any(|&v| (v >> x ^ v >> y) & 1 == 1))
}

/// For all `x ≠ y` there are class-open `G`, `H` whose class closures separate `x` and
/// `y` in both directions.
pub fn class_c1(s: &SpaceAnalysis, c: SetClass) -> bool {
    let cls = closures_of_open_sets(s, c);
    let has = |p: usize, q: usize| cls.iter().any(|&v| v >> p & 1 == 1 && v >> q & 1 == 0);
    pairs(s.n()).all(|(x, y)| has(x, y) && has(y, x))
}

/// The class kernels of all points have empty intersection.
pub fn weakly_class_c0(s: &SpaceAnalysis, c: SetClass) -> bool {
    let ker = s.open_meet_table(c);
    (0..s.n()).fold(full_bits(s.n()), |acc, x| acc & ker[1 << x]) == 0
}

/// `class_closure({x}) ⊆ G` whenever `x ∈ G` and `G` is class-open.
pub fn class_r0(s: &SpaceAnalysis, c: SetClass) -> bool {
    let cl = s.closure_table(c);
    (0..1u32 << s.n())
        .filter(|&g| s.member(g, c, Polarity::Open))
        .all(|g| {
            (0..s.n())
                .filter(|&x| g >> x & 1 == 1)
                .all(|x| cl[1 << x] & !g == 0)
        })
}

/// The class closures of all singletons have empty intersection.
pub fn weakly_class_r0(s: &SpaceAnalysis, c: SetClass) -> bool {
    let cl = s.closure_table(c);
    (0..s.n()).fold(full_bits(s.n()), |acc, x| acc & cl[1 << x]) == 0
}

/// Some class-open set contains exactly one of `x`, `y`, for all `x ≠ y`.
pub fn class_t0(s: &SpaceAnalysis, c: SetClass) -> bool {
    let ker = s.open_meet_table(c);
    pairs(s.n()).all(|(x, y)| ker[1 << x] >> y & 1 == 0 || ker[1 << y] >> x & 1 == 0)
}

/// For every ordered pair `x ≠ y`, some class-open set contains `x` but not `y`.
pub fn class_t1(s: &SpaceAnalysis, c: SetClass) -> bool {
    let ker = s.open_meet_table(c);
    pairs(s.n()).all(|(x, y)| ker[1 << x] >> y & 1 == 0 && ker[1 << y] >> x & 1 == 0)
}

/// Every `(sub, Closed)` member is a `(sup, Closed)` member.
fn closed_family_within(s: &SpaceAnalysis, sub: SetClass, sup: SetClass) -> bool {
    (0..1u32 << s.n())
        .all(|a| !s.member(a, sub, Polarity::Closed) || s.member(a, sup, Polarity::Closed))
}

pub fn bespoke_axiom(s: &SpaceAnalysis, id: Bespoke) -> bool {
    match id {
        Bespoke::THalf => closed_family_within(s, SetClass::G, SetClass::Open),
        Bespoke::HStarTHalf => closed_family_within(s, SetClass::GHStar, SetClass::HStar),
        Bespoke::HStarTb => closed_family_within(s, SetClass::HStarG, SetClass::Open),
        Bespoke::HStarTd => closed_family_within(s, SetClass::HStarG, SetClass::G),
        Bespoke::AlphaSpace => closed_family_within(s, SetClass::Alpha, SetClass::Open),
    }
}

/// Evaluated axioms of one space, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomTable {
    pub entries: Vec<(AxiomId, bool)>,
}

impl AxiomTable {
    pub fn get(&self, id: AxiomId) -> Option<bool> {
        self.entries.iter().find(|(a, _)| *a == id).map(|&(_, v)| v)
    }
}

/// Every named axiom followed by any extra instances not already listed.
pub fn axiom_table(s: &SpaceAnalysis, extra: &[AxiomId]) -> AxiomTable {
    let mut ids = AxiomId::named();
    for &e in extra {
        if !ids.contains(&e) {
            ids.push(e);
        }
    }
    AxiomTable {
        entries: ids.into_iter().map(|id| (id, id.holds(s))).collect(),
    }
}

/// Every template with every symmetric class, then the bespoke axioms.
pub fn all_axioms() -> Vec<AxiomId> {
    let mut v: Vec<AxiomId> = Template::ALL
        .into_iter()
        .flat_map(|t| SetClass::symmetric().map(move |c| AxiomId::of(t, c)))
        .collect();
    v.extend(Bespoke::ALL.map(AxiomId::Bespoke));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask;
    use crate::space::FiniteSpace;

    fn space(n: usize, opens: &[&str]) -> SpaceAnalysis {
        let m = |s: &str| SubsetMask::from_points(n, s.bytes().map(|b| (b - b'a') as usize));
        SpaceAnalysis::new(FiniteSpace::new(n, opens.iter().map(|s| m(s))).unwrap())
    }

    #[test]
    fn names_parse_back() {
        for id in all_axioms() {
            let name = id.name();
            assert_eq!(name.parse::<AxiomId>().unwrap(), id, "{name}");
        }
    }

    #[test]
    fn conventional_names() {
        use SetClass::*;
        use Template::*;
        assert_eq!(AxiomId::of(C0, SCStar).name(), "sc*-c0");
        assert_eq!(AxiomId::of(WeaklyC0, SCStar).name(), "weakly-sc*-c0");
        assert_eq!(AxiomId::of(WeaklyR0, Pre).label(), "weakly pre-R0");
        assert_eq!(AxiomId::of(T1, HStar).label(), "H*-T1");
        assert_eq!(AxiomId::of(C0, Alpha).label(), "α-C0");
        assert_eq!(AxiomId::of(WeaklyC0, Open).label(), "w-C0");
        assert_eq!("c1".parse::<AxiomId>().unwrap(), AxiomId::of(C1, Open));
        assert_eq!("t1".parse::<AxiomId>().unwrap(), AxiomId::of(T1, Open));
        assert_eq!("c0@w".parse::<AxiomId>().unwrap(), AxiomId::of(C0, W));
        assert!(matches!(
            "bogus".parse::<AxiomId>(),
            Err(AxiomParseError::UnknownAxiomName(_))
        ));
        assert!(matches!(
            "c-set-c0".parse::<AxiomId>(),
            Err(AxiomParseError::RawClass(_))
        ));
    }

    #[test]
    fn one_point_space() {
        let s = SpaceAnalysis::new(FiniteSpace::indiscrete(1));
        for c in SetClass::symmetric() {
            for t in [
                Template::C0,
                Template::C1,
                Template::R0,
                Template::T0,
                Template::T1,
            ] {
                assert!(AxiomId::of(t, c).holds(&s), "{t:?} {c}");
            }
            // The single kernel and the single closure are both the whole point.
            assert!(!weakly_class_c0(&s, c));
            assert!(!weakly_class_r0(&s, c));
        }
    }

    #[test]
    fn discrete_satisfies_everything() {
        for n in 2..=4 {
            let s = SpaceAnalysis::new(FiniteSpace::discrete(n));
            for id in all_axioms() {
                assert!(id.holds(&s), "{id} on discrete {n}");
            }
        }
    }

    #[test]
    fn indiscrete_behaviour() {
        let s = SpaceAnalysis::new(FiniteSpace::indiscrete(3));
        assert!(!class_c0(&s, SetClass::Open));
        assert!(class_r0(&s, SetClass::Open));
        assert!(!weakly_class_c0(&s, SetClass::Open));
        assert!(!weakly_class_r0(&s, SetClass::Open));
    }

    #[test]
    fn sigma1_is_not_r0() {
        let s = space(4, &["", "abcd", "a", "b", "ab"]);
        assert!(!class_r0(&s, SetClass::Open));
    }

    #[test]
    fn discrete_two_points_r0() {
        let s = SpaceAnalysis::new(FiniteSpace::discrete(2));
        for c in SetClass::symmetric() {
            assert!(class_r0(&s, c));
        }
    }

    #[test]
    fn table_order_is_stable() {
        let s = space(3, &["", "abc", "a"]);
        let t1 = axiom_table(&s, &[]);
        let t2 = axiom_table(&s, &[AxiomId::of(Template::C0, SetClass::W)]);
        assert_eq!(t1.entries[..], t2.entries[..t1.entries.len()]);
        assert_eq!(t2.entries.len(), t1.entries.len() + 1);
        assert_eq!(t1.entries.len(), AxiomId::named().len());
    }
}
