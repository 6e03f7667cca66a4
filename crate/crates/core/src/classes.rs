//! Generalized open/closed set classes and their closure and kernel operators.
//!
//! Every class is decided for all `2^n` subsets at once. A class that is defined by
//! "`op(A) ⊆ U` whenever `A ⊆ U` and `U` is in some test family" reduces to comparing
//! `op(A)` with the intersection of the test-family supersets of `A`, and that
//! intersection is computed for every `A` by one top-down pass over the subset lattice.
//! Classes are computed lazily in dependency order and cached per space.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mask::{full_bits, SubsetMask};
use crate::space::{FiniteSpace, SpaceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SetClass {
    Open,
    Semi,
    Pre,
    Alpha,
    CStar,
    AlphaStar,
    CSet,
    W,
    H,
    HCg,
    HStar,
    G,
    GHStar,
    HStarG,
    SCStar,
    AlphaCg,
    GAlpha,
    AlphaG,
}

impl SetClass {
    pub const ALL: [SetClass; 18] = [
        SetClass::Open,
        SetClass::Semi,
        SetClass::Pre,
        SetClass::Alpha,
        SetClass::CStar,
        SetClass::AlphaStar,
        SetClass::CSet,
        SetClass::W,
        SetClass::H,
        SetClass::HCg,
        SetClass::HStar,
        SetClass::G,
        SetClass::GHStar,
        SetClass::HStarG,
        SetClass::SCStar,
        SetClass::AlphaCg,
        SetClass::GAlpha,
        SetClass::AlphaG,
    ];

    /// Classes with an open/closed polarity (all except α*-sets and C-sets).
    pub fn symmetric() -> impl Iterator<Item = SetClass> {
        Self::ALL
            .into_iter()
            .filter(|c| c.is_complement_symmetric())
    }

    pub fn is_complement_symmetric(self) -> bool {
        !matches!(self, SetClass::AlphaStar | SetClass::CSet)
    }

    /// Short machine name, also accepted by [`FromStr`].
    pub fn name(self) -> &'static str {
        match self {
            SetClass::Open => "open",
            SetClass::Semi => "semi",
            SetClass::Pre => "pre",
            SetClass::Alpha => "alpha",
            SetClass::CStar => "c*",
            SetClass::AlphaStar => "alpha*",
            SetClass::CSet => "c-set",
            SetClass::W => "w",
            SetClass::H => "h",
            SetClass::HCg => "hcg",
            SetClass::HStar => "h*",
            SetClass::G => "g",
            SetClass::GHStar => "gh*",
            SetClass::HStarG => "h*g",
            SetClass::SCStar => "sc*",
            SetClass::AlphaCg => "alphacg",
            SetClass::GAlpha => "galpha",
            SetClass::AlphaG => "alphag",
        }
    }

    /// Conventional notation, e.g. `α-open`, `H*g-closed`.
    pub fn label(self, polarity: Polarity) -> String {
        let stem = match self {
            SetClass::Open => "",
            SetClass::Semi => "semi",
            SetClass::Pre => "pre",
            SetClass::Alpha => "α",
            SetClass::CStar => "c*",
            SetClass::AlphaStar => return "α*-set".to_string(),
            SetClass::CSet => return "C-set".to_string(),
            SetClass::W => "w",
            SetClass::H => "h",
            SetClass::HCg => "hCg",
            SetClass::HStar => "H*",
            SetClass::G => "g",
            SetClass::GHStar => "gH*",
            SetClass::HStarG => "H*g",
            SetClass::SCStar => "SC*",
            SetClass::AlphaCg => "αCg",
            SetClass::GAlpha => "gα",
            SetClass::AlphaG => "αg",
        };
        let pol = match polarity {
            Polarity::Open => "open",
            Polarity::Closed => "closed",
            Polarity::Raw => "",
        };
        if stem.is_empty() {
            pol.to_string()
        } else {
            format!("{stem}-{pol}")
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown set class `{0}`")]
pub struct UnknownClass(pub String);

impl FromStr for SetClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let class = match key.as_str() {
            "open" | "" => SetClass::Open,
            "semi" => SetClass::Semi,
            "pre" => SetClass::Pre,
            "alpha" | "α" | "feebly" => SetClass::Alpha,
            "c*" | "cstar" => SetClass::CStar,
            "alpha*" | "α*" | "alpha-star" => SetClass::AlphaStar,
            "c-set" | "cset" => SetClass::CSet,
            "w" => SetClass::W,
            "h" => SetClass::H,
            "hcg" => SetClass::HCg,
            "h*" | "hstar" => SetClass::HStar,
            "g" => SetClass::G,
            "gh*" | "ghstar" => SetClass::GHStar,
            "h*g" | "hstarg" => SetClass::HStarG,
            "sc*" | "scstar" => SetClass::SCStar,
            "alphacg" | "αcg" => SetClass::AlphaCg,
            "galpha" | "gα" => SetClass::GAlpha,
            "alphag" | "αg" => SetClass::AlphaG,
            _ => return Err(UnknownClass(s.to_string())),
        };
        Ok(class)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Open,
    Closed,
    /// Plain set predicate, used by α*-sets and C-sets.
    Raw,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Open => "open",
            Polarity::Closed => "closed",
            Polarity::Raw => "raw",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("class {class} cannot be queried with polarity {polarity}")]
    PolarityMismatch { class: SetClass, polarity: Polarity },
    #[error("mask of width {found} given for a space of {expected} points")]
    WidthMismatch { expected: usize, found: usize },
    #[error("point {point} outside a space of {n} points")]
    PointOutOfRange { point: usize, n: usize },
}

/// Options that change how classes are decided.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassConfig {
    /// Test H*g-closedness only against open sets strictly containing `A`.
    pub strict_hstarg: bool,
}

/// The members of one class in one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFamily {
    pub space: FiniteSpace,
    pub class: SetClass,
    pub polarity: Polarity,
    pub members: Vec<SubsetMask>,
}

/// Result of trying to read a class-open family as a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedSpace {
    Topology(FiniteSpace),
    NotATopology(SpaceError),
}

impl InducedSpace {
    pub fn topology(&self) -> Option<&FiniteSpace> {
        match self {
            InducedSpace::Topology(s) => Some(s),
            InducedSpace::NotATopology(_) => None,
        }
    }
}

const CLASSES: usize = SetClass::ALL.len();

/// A space together with lazily computed class tables.
///
/// Tables are built on first use and shared afterwards; the struct is `Sync`, so one
/// analysis can serve concurrent readers.
pub struct SpaceAnalysis {
    space: FiniteSpace,
    config: ClassConfig,
    open: Vec<bool>,
    interior: Vec<u32>,
    closure: Vec<u32>,
    /// Closed-membership for symmetric classes, plain membership for the raw ones.
    members: [OnceLock<Vec<bool>>; CLASSES],
    closures: [OnceLock<Vec<u32>>; CLASSES],
    open_meets: [OnceLock<Vec<u32>>; CLASSES],
}

impl fmt::Debug for SpaceAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpaceAnalysis")
            .field("space", &self.space)
            .field("config", &self.config)
            .finish_non_exhaustive()
    }
}

impl SpaceAnalysis {
    pub fn new(space: FiniteSpace) -> Self {
        Self::with_config(space, ClassConfig::default())
    }

    pub fn with_config(space: FiniteSpace, config: ClassConfig) -> Self {
        let open = space.open_table();
        let interior = space.interior_table();
        let closure = space.closure_table();
        Self {
            space,
            config,
            open,
            interior,
            closure,
            members: std::array::from_fn(|_| OnceLock::new()),
            closures: std::array::from_fn(|_| OnceLock::new()),
            open_meets: std::array::from_fn(|_| OnceLock::new()),
        }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn config(&self) -> ClassConfig {
        self.config
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    fn full(&self) -> u32 {
        full_bits(self.n())
    }

    fn mask(&self, bits: u32) -> SubsetMask {
        SubsetMask::truncated(self.n(), bits)
    }

    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        self.mask(self.interior[a.index()])
    }

    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        self.mask(self.closure[a.index()])
    }

    fn check_width(&self, a: SubsetMask) -> Result<(), ClassError> {
        if a.width() != self.n() {
            return Err(ClassError::WidthMismatch {
                expected: self.n(),
                found: a.width(),
            });
        }
        Ok(())
    }

    fn check_polarity(class: SetClass, polarity: Polarity) -> Result<(), ClassError> {
        if class.is_complement_symmetric() == (polarity == Polarity::Raw) {
            return Err(ClassError::PolarityMismatch { class, polarity });
        }
        Ok(())
    }

    fn check_symmetric(class: SetClass) -> Result<(), ClassError> {
        if !class.is_complement_symmetric() {
            return Err(ClassError::PolarityMismatch {
                class,
                polarity: Polarity::Closed,
            });
        }
        Ok(())
    }

    pub fn is_in_class(
        &self,
        a: SubsetMask,
        class: SetClass,
        polarity: Polarity,
    ) -> Result<bool, ClassError> {
        Self::check_polarity(class, polarity)?;
        self.check_width(a)?;
        Ok(self.member(a.bits(), class, polarity))
    }

    /// Unchecked membership by raw bits; the polarity must already match the class.
    pub(crate) fn member(&self, bits: u32, class: SetClass, polarity: Polarity) -> bool {
        let t = self.table(class);
        match polarity {
            Polarity::Closed | Polarity::Raw => t[bits as usize],
            Polarity::Open => t[(!bits & self.full()) as usize],
        }
    }

    pub fn class_family(
        &self,
        class: SetClass,
        polarity: Polarity,
    ) -> Result<ClassFamily, ClassError> {
        Self::check_polarity(class, polarity)?;
        Ok(ClassFamily {
            space: self.space.clone(),
            class,
            polarity,
            members: self.members_of(class, polarity),
        })
    }

    /// Sorted members of a class; the polarity must already match the class.
    pub(crate) fn members_of(&self, class: SetClass, polarity: Polarity) -> Vec<SubsetMask> {
        SubsetMask::all(self.n())
            .filter(|a| self.member(a.bits(), class, polarity))
            .collect()
    }

    /// Intersection of every class-closed superset of `a`.
    pub fn class_closure(&self, a: SubsetMask, class: SetClass) -> Result<SubsetMask, ClassError> {
        Self::check_symmetric(class)?;
        self.check_width(a)?;
        Ok(self.mask(self.closure_table(class)[a.index()]))
    }

    /// Union of every class-open subset of `a`.
    pub fn class_interior(&self, a: SubsetMask, class: SetClass) -> Result<SubsetMask, ClassError> {
        Self::check_symmetric(class)?;
        self.check_width(a)?;
        let cl = self.closure_table(class)[a.complement().index()];
        Ok(self.mask(!cl))
    }

    /// Intersection of every class-open set containing `point`.
    pub fn class_kernel(&self, point: usize, class: SetClass) -> Result<SubsetMask, ClassError> {
        Self::check_symmetric(class)?;
        if point >= self.n() {
            return Err(ClassError::PointOutOfRange { point, n: self.n() });
        }
        Ok(self.mask(self.open_meet_table(class)[1 << point]))
    }

    /// The class-open family, validated as a topology if it is one.
    pub fn induced_space(&self, class: SetClass) -> Result<InducedSpace, ClassError> {
        Self::check_symmetric(class)?;
        let opens = self.members_of(class, Polarity::Open);
        Ok(match FiniteSpace::new(self.n(), opens) {
            Ok(s) => InducedSpace::Topology(s),
            Err(e) => InducedSpace::NotATopology(e),
        })
    }

    /// `class_closure` for every subset, indexed by mask bits.
    pub(crate) fn closure_table(&self, class: SetClass) -> &[u32] {
        debug_assert!(class.is_complement_symmetric());
        self.closures[class.slot()]
            .get_or_init(|| superset_meet(self.table(class), self.n(), false))
    }

    /// Intersection of class-open supersets for every subset, indexed by mask bits.
    pub(crate) fn open_meet_table(&self, class: SetClass) -> &[u32] {
        debug_assert!(class.is_complement_symmetric());
        self.open_meets[class.slot()]
            .get_or_init(|| superset_meet(&self.open_members(class), self.n(), false))
    }

    fn open_members(&self, class: SetClass) -> Vec<bool> {
        let t = self.table(class);
        let full = self.full() as usize;
        (0..t.len()).map(|a| t[full & !a]).collect()
    }

    fn table(&self, class: SetClass) -> &[bool] {
        self.members[class.slot()].get_or_init(|| self.compute(class))
    }

    /// Closed-membership table of a class with an open-set definition.
    fn closed_from_open(&self, open: impl Fn(usize) -> bool) -> Vec<bool> {
        let full = self.full() as usize;
        (0..=full).map(|a| open(full & !a)).collect()
    }

    /// `{A : op(A) ⊆ U for every U in test with A ⊆ U}`.
    fn generalized_closed(&self, op: &[u32], test: &[bool], strict: bool) -> Vec<bool> {
        let meet = superset_meet(test, self.n(), strict);
        op.iter().zip(&meet).map(|(&o, &m)| o & !m == 0).collect()
    }

    fn compute(&self, class: SetClass) -> Vec<bool> {
        let int = &self.interior;
        let cl = &self.closure;
        let sub = |a: usize, b: u32| a as u32 & !b == 0;
        match class {
            SetClass::Open => self.closed_from_open(|a| self.open[a]),
            SetClass::Semi => self.closed_from_open(|a| sub(a, cl[int[a] as usize])),
            SetClass::Pre => self.closed_from_open(|a| sub(a, int[cl[a] as usize])),
            SetClass::Alpha => self.closed_from_open(|a| sub(a, int[cl[int[a] as usize] as usize])),
            SetClass::CStar => self.closed_from_open(|a| {
                int[cl[a] as usize] & !(a as u32) == 0 && sub(a, cl[int[a] as usize])
            }),
            SetClass::AlphaStar => (0..int.len())
                .map(|a| int[cl[int[a] as usize] as usize] == int[a])
                .collect(),
            SetClass::CSet => self.c_sets(),
            SetClass::W => {
                let test = self.open_members(SetClass::Semi);
                self.generalized_closed(cl, &test, false)
            }
            SetClass::H => {
                let test = self.open_members(SetClass::W);
                self.generalized_closed(self.closure_table(SetClass::Semi), &test, false)
            }
            SetClass::HCg => {
                let test = self.table(SetClass::CSet);
                self.generalized_closed(self.closure_table(SetClass::H), test, false)
            }
            SetClass::HStar => {
                let test = self.open_members(SetClass::HCg);
                self.generalized_closed(self.closure_table(SetClass::H), &test, false)
            }
            SetClass::G => self.generalized_closed(cl, &self.open, false),
            SetClass::GHStar => {
                let test = self.open_members(SetClass::HStar);
                self.generalized_closed(self.closure_table(SetClass::HStar), &test, false)
            }
            SetClass::HStarG => self.generalized_closed(
                self.closure_table(SetClass::HStar),
                &self.open,
                self.config.strict_hstarg,
            ),
            SetClass::SCStar => {
                let test = self.open_members(SetClass::CStar);
                self.generalized_closed(self.closure_table(SetClass::Semi), &test, false)
            }
            SetClass::AlphaCg => {
                let test = self.table(SetClass::CSet);
                self.generalized_closed(self.closure_table(SetClass::Alpha), test, false)
            }
            SetClass::GAlpha => {
                let test = self.open_members(SetClass::Alpha);
                self.generalized_closed(self.closure_table(SetClass::Alpha), &test, false)
            }
            SetClass::AlphaG => {
                self.generalized_closed(self.closure_table(SetClass::Alpha), &self.open, false)
            }
        }
    }

    /// `A` is a C-set iff some α*-set `V ⊇ A` meets the smallest open superset `K` of `A`
    /// exactly in `A`, i.e. `V` lies in the interval `[A, A ∪ (X \ K)]`.
    fn c_sets(&self) -> Vec<bool> {
        let stars = self.table(SetClass::AlphaStar);
        let kernel = superset_meet(&self.open, self.n(), false);
        let full = self.full();
        (0..=full)
            .map(|a| {
                let free = full & !kernel[a as usize];
                let mut s = free;
                loop {
                    if stars[(a | s) as usize] {
                        return true;
                    }
                    if s == 0 {
                        return false;
                    }
                    s = (s - 1) & free;
                }
            })
            .collect()
    }
}

/// For every `A`, the intersection of all members `M ⊇ A` (or `M ⊋ A` when `strict`);
/// the empty intersection is the whole space.
fn superset_meet(member: &[bool], n: usize, strict: bool) -> Vec<u32> {
    let full = full_bits(n);
    let len = member.len();
    debug_assert_eq!(len, 1 << n);
    let mut meet = vec![full; len];
    let mut above = vec![full; len];
    for a in (0..len).rev() {
        let mut acc = full;
        let mut rest = full & !(a as u32);
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            acc &= meet[a | low as usize];
            rest &= rest - 1;
        }
        above[a] = acc;
        meet[a] = if member[a] { a as u32 } else { acc };
    }
    if strict {
        above
    } else {
        meet
    }
}

/// One-shot membership test on a bare space with the default configuration.
pub fn is_in_class(
    space: &FiniteSpace,
    a: SubsetMask,
    class: SetClass,
    polarity: Polarity,
) -> Result<bool, ClassError> {
    SpaceAnalysis::new(space.clone()).is_in_class(a, class, polarity)
}

pub fn class_family(
    space: &FiniteSpace,
    class: SetClass,
    polarity: Polarity,
) -> Result<ClassFamily, ClassError> {
    SpaceAnalysis::new(space.clone()).class_family(class, polarity)
}

pub fn class_closure(
    space: &FiniteSpace,
    a: SubsetMask,
    class: SetClass,
) -> Result<SubsetMask, ClassError> {
    SpaceAnalysis::new(space.clone()).class_closure(a, class)
}

pub fn class_kernel(
    space: &FiniteSpace,
    point: usize,
    class: SetClass,
) -> Result<SubsetMask, ClassError> {
    SpaceAnalysis::new(space.clone()).class_kernel(point, class)
}

pub fn induced_space(space: &FiniteSpace, class: SetClass) -> Result<InducedSpace, ClassError> {
    SpaceAnalysis::new(space.clone()).induced_space(class)
}
