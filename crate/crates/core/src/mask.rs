//! Subsets of a small ground set `{0, .., n-1}` packed into a machine word.

use std::fmt;

/// Largest supported ground set.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set `{0, .., n-1}`; point `i` is present iff bit `i` is set.
///
/// Masks compare and order by their bits first, so a sorted `Vec<SubsetMask>` of a
/// single width is in numeric order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u32,
    n: u8,
}

impl SubsetMask {
    /// Builds a mask, rejecting bits at or above position `n`.
    pub fn new(n: usize, bits: u32) -> Option<Self> {
        if n == 0 || n > MAX_POINTS || bits & !full_bits(n) != 0 {
            return None;
        }
        Some(Self { bits, n: n as u8 })
    }

    /// Builds a mask, silently dropping bits above `n`.
    pub fn truncated(n: usize, bits: u32) -> Self {
        assert!(
            (1..=MAX_POINTS).contains(&n),
            "ground set size {n} out of range"
        );
        Self {
            bits: bits & full_bits(n),
            n: n as u8,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::truncated(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::truncated(n, u32::MAX)
    }

    pub fn singleton(n: usize, point: usize) -> Self {
        assert!(point < n, "point {point} outside ground set of size {n}");
        Self::truncated(n, 1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Self {
        let mut bits = 0u32;
        for p in points {
            assert!(p < n, "point {p} outside ground set of size {n}");
            bits |= 1 << p;
        }
        Self::truncated(n, bits)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn width(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn index(self) -> usize {
        self.bits as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_bits(self.width())
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.width() && self.bits >> point & 1 == 1
    }

    #[inline]
    pub fn complement(self) -> Self {
        Self {
            bits: !self.bits & full_bits(self.width()),
            n: self.n,
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn with(self, point: usize) -> Self {
        assert!(point < self.width());
        Self {
            bits: self.bits | 1 << point,
            n: self.n,
        }
    }

    pub fn without(self, point: usize) -> Self {
        Self {
            bits: self.bits & !(1u32 << point),
            n: self.n,
        }
    }

    pub fn points(self) -> Points {
        Points { rest: self.bits }
    }

    /// Every subset of an `n`-point ground set, in numeric order.
    pub fn all(n: usize) -> impl DoubleEndedIterator<Item = SubsetMask> + ExactSizeIterator {
        assert!((1..=MAX_POINTS).contains(&n));
        (0..1u32 << n).map(move |bits| SubsetMask { bits, n: n as u8 })
    }

    /// Renders the mask with the default point names `a, b, c, ...`.
    pub fn display_default(self) -> String {
        if self.is_empty() {
            return "φ".to_string();
        }
        let names: Vec<String> = self.points().map(default_point_name).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_default())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_default())
    }
}

/// Iterator over the points of a mask in increasing order.
#[derive(Clone)]
pub struct Points {
    rest: u32,
}

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let p = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.rest.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

#[inline]
pub(crate) fn full_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `a`, `b`, ..., `z`, then `p26`, `p27`, ...
pub fn default_point_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_bits_above_width() {
        assert!(SubsetMask::new(3, 0b1000).is_none());
        assert!(SubsetMask::new(3, 0b111).is_some());
        assert!(SubsetMask::new(0, 0).is_none());
        assert!(SubsetMask::new(17, 0).is_none());
    }

    #[test]
    fn full_width_sixteen() {
        let x = SubsetMask::full(16);
        assert_eq!(x.bits(), 0xffff);
        assert_eq!(x.complement(), SubsetMask::empty(16));
    }

    #[test]
    fn display_uses_letters() {
        let a = SubsetMask::from_points(4, [0, 2]);
        assert_eq!(a.to_string(), "{a,c}");
        assert_eq!(SubsetMask::empty(4).to_string(), "φ");
    }

    proptest! {
        #[test]
        fn complement_is_involutive(n in 1usize..=16, raw in any::<u32>()) {
            let a = SubsetMask::truncated(n, raw);
            prop_assert_eq!(a.complement().complement(), a);
            prop_assert_eq!(a.complement().bits() & !full_bits(n), 0);
            prop_assert!(a.intersection(a.complement()).is_empty());
            prop_assert!(a.union(a.complement()).is_full());
        }

        #[test]
        fn points_round_trip(n in 1usize..=16, raw in any::<u32>()) {
            let a = SubsetMask::truncated(n, raw);
            prop_assert_eq!(SubsetMask::from_points(n, a.points()), a);
            prop_assert_eq!(a.points().count(), a.len());
        }
    }
}
