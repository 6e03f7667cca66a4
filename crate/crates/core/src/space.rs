//! Finite topological spaces: validation, interior, closure and subspaces.

use std::fmt;

use thiserror::Error;

use crate::mask::{SubsetMask, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("ground set must have at least one point")]
    EmptyGroundSet,
    #[error("ground set of {n} points exceeds the limit of {max}")]
    GroundSetTooLarge { n: usize, max: usize },
    #[error("mask of width {found} given for a ground set of {expected} points")]
    WidthMismatch { expected: usize, found: usize },
    #[error("family is missing the empty set or the whole space")]
    MissingEmptyOrFull,
    #[error("family is not closed under union: {0} ∪ {1} is missing")]
    NotClosedUnderUnion(SubsetMask, SubsetMask),
    #[error("family is not closed under intersection: {0} ∩ {1} is missing")]
    NotClosedUnderIntersection(SubsetMask, SubsetMask),
    #[error("subspace on the empty set")]
    EmptySubspace,
}

/// A topology on `{0, .., n-1}`, stored as its sorted, duplicate-free list of open sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<SubsetMask>,
}

impl FiniteSpace {
    /// Validates `opens` as a topology on `n` points and normalizes it.
    pub fn new(n: usize, opens: impl IntoIterator<Item = SubsetMask>) -> Result<Self, SpaceError> {
        check_size(n)?;
        let mut opens: Vec<SubsetMask> = opens.into_iter().collect();
        if let Some(bad) = opens.iter().find(|m| m.width() != n) {
            return Err(SpaceError::WidthMismatch {
                expected: n,
                found: bad.width(),
            });
        }
        opens.sort_unstable();
        opens.dedup();
        validate(n, &opens)?;
        Ok(Self { n, opens })
    }

    /// Builds a space from raw bit patterns.
    pub fn from_bits(n: usize, opens: &[u32]) -> Result<Self, SpaceError> {
        check_size(n)?;
        let mut masks = Vec::with_capacity(opens.len());
        for &bits in opens {
            match SubsetMask::new(n, bits) {
                Some(m) => masks.push(m),
                None => {
                    let found = 32 - bits.leading_zeros() as usize;
                    return Err(SpaceError::WidthMismatch { expected: n, found });
                }
            }
        }
        Self::new(n, masks)
    }

    /// Skips validation; callers guarantee `opens` is sorted, deduplicated and a topology.
    pub(crate) fn from_normalized_unchecked(n: usize, opens: Vec<SubsetMask>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        Self { n, opens }
    }

    pub fn discrete(n: usize) -> Self {
        let opens = SubsetMask::all(n).collect();
        Self::from_normalized_unchecked(n, opens)
    }

    pub fn indiscrete(n: usize) -> Self {
        let opens = if n == 0 {
            vec![]
        } else {
            vec![SubsetMask::empty(n), SubsetMask::full(n)]
        };
        Self::from_normalized_unchecked(n, opens)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    pub fn closeds(&self) -> Vec<SubsetMask> {
        let mut c: Vec<SubsetMask> = self.opens.iter().map(|u| u.complement()).collect();
        c.sort_unstable();
        c
    }

    pub fn empty(&self) -> SubsetMask {
        SubsetMask::empty(self.n)
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    pub fn is_closed(&self, a: SubsetMask) -> bool {
        self.is_open(a.complement())
    }

    /// Union of all open sets contained in `a`.
    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        self.opens
            .iter()
            .filter(|u| u.is_subset(a))
            .fold(self.empty(), |acc, &u| acc.union(u))
    }

    /// Intersection of all closed sets containing `a`.
    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        self.opens
            .iter()
            .map(|u| u.complement())
            .filter(|f| a.is_subset(*f))
            .fold(self.full(), |acc, f| acc.intersection(f))
    }

    /// Smallest open set containing `point`.
    pub fn neighborhood(&self, point: usize) -> SubsetMask {
        self.opens
            .iter()
            .filter(|u| u.contains(point))
            .fold(self.full(), |acc, &u| acc.intersection(u))
    }

    /// The relative topology on `y`, re-indexed so the points of `y` become `0..|y|`
    /// in increasing order.
    pub fn subspace(&self, y: SubsetMask) -> Result<FiniteSpace, SpaceError> {
        if y.width() != self.n {
            return Err(SpaceError::WidthMismatch {
                expected: self.n,
                found: y.width(),
            });
        }
        if y.is_empty() {
            return Err(SpaceError::EmptySubspace);
        }
        let m = y.len();
        let mut opens: Vec<SubsetMask> = self
            .opens
            .iter()
            .map(|u| SubsetMask::truncated(m, compress(u.intersection(y).bits(), y.bits())))
            .collect();
        opens.sort_unstable();
        opens.dedup();
        Ok(Self::from_normalized_unchecked(m, opens))
    }

    /// Membership table indexed by mask bits.
    pub fn open_table(&self) -> Vec<bool> {
        let mut t = vec![false; 1 << self.n];
        for u in &self.opens {
            t[u.index()] = true;
        }
        t
    }

    /// `int(A)` for every `A`, indexed by mask bits.
    pub fn interior_table(&self) -> Vec<u32> {
        let open = self.open_table();
        let mut int = vec![0u32; 1 << self.n];
        for a in 1..int.len() {
            int[a] = if open[a] {
                a as u32
            } else {
                let mut acc = 0;
                let mut rest = a;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    acc |= int[a & !low];
                    rest &= rest - 1;
                }
                acc
            };
        }
        int
    }

    /// `cl(A)` for every `A`, indexed by mask bits.
    pub fn closure_table(&self) -> Vec<u32> {
        let int = self.interior_table();
        let full = int.len() - 1;
        (0..int.len())
            .map(|a| !int[full & !a] & full as u32)
            .collect()
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace(n={}, {:?})", self.n, self.opens)
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .opens
            .iter()
            .map(|u| {
                if u.is_full() {
                    "X".to_string()
                } else {
                    u.to_string()
                }
            })
            .collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

fn check_size(n: usize) -> Result<(), SpaceError> {
    if n == 0 {
        return Err(SpaceError::EmptyGroundSet);
    }
    if n > MAX_POINTS {
        return Err(SpaceError::GroundSetTooLarge { n, max: MAX_POINTS });
    }
    Ok(())
}

fn validate(n: usize, opens: &[SubsetMask]) -> Result<(), SpaceError> {
    let empty = SubsetMask::empty(n);
    let full = SubsetMask::full(n);
    if opens.first() != Some(&empty) || opens.last() != Some(&full) {
        return Err(SpaceError::MissingEmptyOrFull);
    }
    if is_topology(n, opens) {
        return Ok(());
    }
    let member = |m: SubsetMask| opens.binary_search(&m).is_ok();
    for (i, &u) in opens.iter().enumerate() {
        for &v in &opens[i + 1..] {
            if !member(u.union(v)) {
                return Err(SpaceError::NotClosedUnderUnion(u, v));
            }
            if !member(u.intersection(v)) {
                return Err(SpaceError::NotClosedUnderIntersection(u, v));
            }
        }
    }
    unreachable!("family failed the neighborhood test but every pair is closed")
}

/// A family containing φ and X is a topology iff it is exactly the family of sets that
/// contain the minimal neighborhood of each of their points. Runs in O(n·2^n).
fn is_topology(n: usize, opens: &[SubsetMask]) -> bool {
    let full = SubsetMask::full(n).bits();
    let mut nbhd = vec![full; n];
    for u in opens {
        for p in u.points() {
            nbhd[p] &= u.bits();
        }
    }
    let mut expected = 0usize;
    for bits in 0..=full {
        let up_closed = SubsetMask::truncated(n, bits)
            .points()
            .all(|p| nbhd[p] & !bits == 0);
        if up_closed {
            expected += 1;
            if opens
                .binary_search(&SubsetMask::truncated(n, bits))
                .is_err()
            {
                return false;
            }
        }
    }
    expected == opens.len()
}

/// Packs the bits of `value` selected by `select` into the low positions.
pub(crate) fn compress(value: u32, select: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    let mut rest = select;
    while rest != 0 {
        let p = rest.trailing_zeros();
        if value >> p & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
        rest &= rest - 1;
    }
    out
}
