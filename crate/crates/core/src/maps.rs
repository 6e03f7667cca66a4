//! Point maps between finite spaces and the morphism properties defined on them.

use thiserror::Error;

use crate::classes::{Polarity, SetClass, SpaceAnalysis};
use crate::mask::{full_bits, SubsetMask};
use crate::space::FiniteSpace;

/// Largest domain or codomain accepted by [`enumerate_maps`].
pub const MAX_MAP_POINTS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("assignment has {found} entries for a source of {expected} points")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment sends a point to {value}, outside a target of {n} points")]
    TargetOutOfRange { value: usize, n: usize },
    #[error("map enumeration is limited to {max} points, got {n}")]
    DomainTooLarge { n: usize, max: usize },
}

/// A function from the points of `source` to the points of `target`.
#[derive(Debug, Clone, Copy)]
pub struct PointMap<'a> {
    source: &'a SpaceAnalysis,
    target: &'a SpaceAnalysis,
    assignment: &'a [usize],
}

impl<'a> PointMap<'a> {
    pub fn new(
        source: &'a SpaceAnalysis,
        target: &'a SpaceAnalysis,
        assignment: &'a [usize],
    ) -> Result<Self, MapError> {
        if assignment.len() != source.n() {
            return Err(MapError::AssignmentLength {
                expected: source.n(),
                found: assignment.len(),
            });
        }
        if let Some(&value) = assignment.iter().find(|&&v| v >= target.n()) {
            return Err(MapError::TargetOutOfRange {
                value,
                n: target.n(),
            });
        }
        Ok(Self {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &'a SpaceAnalysis {
        self.source
    }

    pub fn target(&self) -> &'a SpaceAnalysis {
        self.target
    }

    pub fn assignment(&self) -> &'a [usize] {
        self.assignment
    }

    pub fn image(&self, a: SubsetMask) -> SubsetMask {
        SubsetMask::truncated(self.target.n(), self.image_bits(a.bits()))
    }

    pub fn preimage(&self, b: SubsetMask) -> SubsetMask {
        SubsetMask::truncated(self.source.n(), self.preimage_bits(b.bits()))
    }

    fn image_bits(&self, a: u32) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(i, _)| a >> i & 1 == 1)
            .fold(0, |acc, (_, &t)| acc | 1 << t)
    }

    fn preimage_bits(&self, b: u32) -> u32 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &t)| b >> t & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.n() == self.target.n()
            && self.image_bits(full_bits(self.source.n())) == full_bits(self.target.n())
    }

    /// Preimages of `(class, polarity)` members of the target are members in the source.
    fn pulls_back(&self, class: SetClass, polarity: Polarity) -> bool {
        (0..1u32 << self.target.n())
            .filter(|&b| self.target.member(b, class, polarity))
            .all(|b| self.source.member(self.preimage_bits(b), class, polarity))
    }

    /// Images of `(class, polarity)` members of the source are members in the target.
    fn pushes_forward(&self, class: SetClass, polarity: Polarity) -> bool {
        (0..1u32 << self.source.n())
            .filter(|&a| self.source.member(a, class, polarity))
            .all(|a| self.target.member(self.image_bits(a), class, polarity))
    }

    pub fn is_continuous(&self) -> bool {
        self.pulls_back(SetClass::Open, Polarity::Open)
    }

    pub fn is_open_map(&self) -> bool {
        self.pushes_forward(SetClass::Open, Polarity::Open)
    }

    pub fn is_closed_map(&self) -> bool {
        self.pushes_forward(SetClass::Open, Polarity::Closed)
    }

    /// Continuous open bijection.
    pub fn is_homeomorphism(&self) -> bool {
        self.is_bijective() && self.is_continuous() && self.is_open_map()
    }

    /// Images of H*-closed sets are H*-closed.
    pub fn is_pre_hstar_closed(&self) -> bool {
        self.pushes_forward(SetClass::HStar, Polarity::Closed)
    }

    /// Images of H*-open sets are H*-open.
    pub fn is_pre_hstar_open(&self) -> bool {
        self.pushes_forward(SetClass::HStar, Polarity::Open)
    }

    /// Preimages of H*-closed sets are H*-closed.
    pub fn is_hstar_irresolute(&self) -> bool {
        self.pulls_back(SetClass::HStar, Polarity::Closed)
    }
}

/// All maps (or bijections) between two spaces, assignments in lexicographic order.
pub fn enumerate_maps(
    source: &FiniteSpace,
    target: &FiniteSpace,
    bijective_only: bool,
) -> Result<MapAssignments, MapError> {
    for n in [source.n(), target.n()] {
        if n > MAX_MAP_POINTS {
            return Err(MapError::DomainTooLarge {
                n,
                max: MAX_MAP_POINTS,
            });
        }
    }
    Ok(MapAssignments {
        domain: source.n(),
        codomain: target.n(),
        bijective_only,
        current: Some(vec![0; source.n()]),
    })
}

/// Iterator over assignment vectors produced by [`enumerate_maps`].
#[derive(Debug, Clone)]
pub struct MapAssignments {
    domain: usize,
    codomain: usize,
    bijective_only: bool,
    current: Option<Vec<usize>>,
}

impl Iterator for MapAssignments {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.bijective_only && self.domain != self.codomain {
            return None;
        }
        loop {
            let cur = self.current.as_mut()?;
            let out = cur.clone();
            // Advance like an odometer, least significant digit last.
            let mut i = self.domain;
            loop {
                if i == 0 {
                    self.current = None;
                    break;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.codomain {
                    break;
                }
                cur[i] = 0;
            }
            if !self.bijective_only || is_permutation(&out) {
                return Some(out);
            }
        }
    }
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = 0u32;
    for &x in v {
        if seen >> x & 1 == 1 {
            return false;
        }
        seen |= 1 << x;
    }
    true
}

/// Inverse of a bijective assignment.
pub fn inverse(assignment: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; assignment.len()];
    for (i, &t) in assignment.iter().enumerate() {
        inv[t] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, pts: &str) -> SubsetMask {
        SubsetMask::from_points(n, pts.bytes().map(|b| (b - b'a') as usize))
    }

    fn space(n: usize, opens: &[&str]) -> SpaceAnalysis {
        SpaceAnalysis::new(FiniteSpace::new(n, opens.iter().map(|s| m(n, s))).unwrap())
    }

    fn tau2() -> SpaceAnalysis {
        space(4, &["", "abcd", "a", "b", "c", "ab", "ac", "bc", "abc"])
    }

    #[test]
    fn identity_properties() {
        let s = tau2();
        let id = [0, 1, 2, 3];
        let f = PointMap::new(&s, &s, &id).unwrap();
        assert_eq!(f.image(m(4, "ab")), m(4, "ab"));
        assert!(f.is_continuous() && f.is_open_map() && f.is_closed_map());
        assert!(f.is_homeomorphism());
        assert!(f.is_pre_hstar_closed() && f.is_hstar_irresolute());
    }

    #[test]
    fn constant_map_image() {
        let s = tau2();
        let t = SpaceAnalysis::new(FiniteSpace::indiscrete(3));
        let c = [1, 1, 1, 1];
        let f = PointMap::new(&s, &t, &c).unwrap();
        assert_eq!(f.image(m(4, "ad")), m(3, "b"));
        assert_eq!(f.image(m(4, "")), m(3, ""));
        assert!(f.is_continuous());
    }

    #[test]
    fn swap_preimage() {
        let s = tau2();
        let swap = [1, 0, 2, 3];
        let f = PointMap::new(&s, &s, &swap).unwrap();
        assert_eq!(f.preimage(m(4, "ad")), m(4, "bd"));
    }

    #[test]
    fn swap_on_sigma1_is_homeomorphism() {
        let s = space(4, &["", "abcd", "a", "b", "ab"]);
        let swap = [1, 0, 2, 3];
        assert!(PointMap::new(&s, &s, &swap).unwrap().is_homeomorphism());
        let other = [2, 1, 0, 3];
        assert!(!PointMap::new(&s, &s, &other).unwrap().is_homeomorphism());
    }

    #[test]
    fn rejects_bad_assignments() {
        let s = tau2();
        assert!(matches!(
            PointMap::new(&s, &s, &[0, 1]),
            Err(MapError::AssignmentLength { .. })
        ));
        assert!(matches!(
            PointMap::new(&s, &s, &[0, 1, 2, 7]),
            Err(MapError::TargetOutOfRange { value: 7, .. })
        ));
    }

    #[test]
    fn map_counts() {
        let d2 = FiniteSpace::discrete(2);
        let d3 = FiniteSpace::discrete(3);
        let d4 = FiniteSpace::discrete(4);
        assert_eq!(enumerate_maps(&d2, &d2, true).unwrap().count(), 2);
        assert_eq!(enumerate_maps(&d3, &d2, false).unwrap().count(), 8);
        assert_eq!(enumerate_maps(&d4, &d4, true).unwrap().count(), 24);
        assert_eq!(enumerate_maps(&d3, &d2, true).unwrap().count(), 0);
        assert!(matches!(
            enumerate_maps(&FiniteSpace::discrete(6), &d2, false),
            Err(MapError::DomainTooLarge { n: 6, max: 5 })
        ));
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let d2 = FiniteSpace::discrete(2);
        let all: Vec<Vec<usize>> = enumerate_maps(&d2, &d2, false).unwrap().collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn inverse_of_cycle() {
        assert_eq!(inverse(&[1, 2, 0]), vec![2, 0, 1]);
    }
}
