//! Exhaustive enumeration of labeled topologies on small ground sets.
//!
//! A family of subsets of an `n`-point set (`n ≤ 6`) fits in one `u64`: bit `s` is set
//! iff the subset with bits `s` belongs to the family. The search walks the subsets
//! `1 .. 2^n - 2` in numeric order and branches on each one not already forced into the
//! family, rejecting an inclusion as soon as its union/intersection closure would pull in
//! a subset that an earlier branch excluded. Every topology is reached exactly once.

use crate::mask::SubsetMask;
use crate::space::{FiniteSpace, SpaceError};

/// Largest ground set accepted by the enumerator.
pub const MAX_ENUM_POINTS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    family: u64,
    excluded: u64,
    next: u32,
}

enum Step {
    Leaf(u64),
    Branch {
        exclude: Node,
        include: Option<Node>,
    },
}

/// A disjoint slice of the search space. Enumerating every partition returned by
/// [`partitions`] in order yields the same sequence as [`enumerate_topologies`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    root: Node,
}

impl Partition {
    pub fn iter(&self) -> Topologies {
        Topologies {
            n: self.n,
            stack: vec![self.root],
        }
    }
}

impl IntoIterator for Partition {
    type Item = FiniteSpace;
    type IntoIter = Topologies;

    fn into_iter(self) -> Topologies {
        self.iter()
    }
}

/// Depth-first iterator over labeled topologies.
#[derive(Debug, Clone)]
pub struct Topologies {
    n: usize,
    stack: Vec<Node>,
}

impl Iterator for Topologies {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        self.next_family().map(|fam| family_to_space(self.n, fam))
    }
}

impl Topologies {
    /// Next family as a raw `u64` bit table, skipping the conversion to a space.
    pub fn next_family(&mut self) -> Option<u64> {
        while let Some(node) = self.stack.pop() {
            match step(self.n, node) {
                Step::Leaf(fam) => return Some(fam),
                Step::Branch { exclude, include } => {
                    if let Some(inc) = include {
                        self.stack.push(inc);
                    }
                    self.stack.push(exclude);
                }
            }
        }
        None
    }
}

fn check_n(n: usize) -> Result<(), SpaceError> {
    if n == 0 {
        return Err(SpaceError::EmptyGroundSet);
    }
    if n > MAX_ENUM_POINTS {
        return Err(SpaceError::GroundSetTooLarge {
            n,
            max: MAX_ENUM_POINTS,
        });
    }
    Ok(())
}

fn root(n: usize) -> Node {
    let full = (1u32 << n) - 1;
    Node {
        family: 1 | 1u64 << full,
        excluded: 0,
        next: 1,
    }
}

/// Every labeled topology on `n` points, exactly once, in a fixed order (the indiscrete
/// space first).
pub fn enumerate_topologies(n: usize) -> Result<Topologies, SpaceError> {
    check_n(n)?;
    Ok(Topologies {
        n,
        stack: vec![root(n)],
    })
}

/// Splits the search tree after `depth` branching decisions.
pub fn partitions(n: usize, depth: usize) -> Result<Vec<Partition>, SpaceError> {
    check_n(n)?;
    let mut out = Vec::new();
    split(n, root(n), depth, &mut out);
    Ok(out)
}

fn split(n: usize, node: Node, depth: usize, out: &mut Vec<Partition>) {
    if depth == 0 {
        out.push(Partition { n, root: node });
        return;
    }
    match step(n, node) {
        Step::Leaf(_) => out.push(Partition { n, root: node }),
        Step::Branch { exclude, include } => {
            split(n, exclude, depth - 1, out);
            if let Some(inc) = include {
                split(n, inc, depth - 1, out);
            }
        }
    }
}

/// Number of labeled topologies on `n` points.
pub fn count_topologies(n: usize) -> Result<u64, SpaceError> {
    let mut it = enumerate_topologies(n)?;
    let mut count = 0;
    while it.next_family().is_some() {
        count += 1;
    }
    Ok(count)
}

fn step(n: usize, node: Node) -> Step {
    let full = (1u32 << n) - 1;
    let mut next = node.next;
    while next < full && node.family >> next & 1 == 1 {
        next += 1;
    }
    if next >= full {
        return Step::Leaf(node.family);
    }
    let bit = 1u64 << next;
    let exclude = Node {
        family: node.family,
        excluded: node.excluded | bit,
        next: next + 1,
    };
    let closed = close_with(node.family, next);
    let include = (closed & node.excluded == 0).then_some(Node {
        family: closed,
        excluded: node.excluded,
        next: next + 1,
    });
    Step::Branch { exclude, include }
}

/// Smallest union/intersection-closed family containing `family` (already closed) and
/// the subset `s`.
fn close_with(family: u64, s: u32) -> u64 {
    let mut fam = family | 1u64 << s;
    let mut work = vec![s];
    while let Some(t) = work.pop() {
        let mut rest = fam;
        while rest != 0 {
            let m = rest.trailing_zeros();
            rest &= rest - 1;
            for c in [t | m, t & m] {
                if fam >> c & 1 == 0 {
                    fam |= 1u64 << c;
                    work.push(c);
                }
            }
        }
    }
    fam
}

fn family_to_space(n: usize, family: u64) -> FiniteSpace {
    let mut opens = Vec::with_capacity(family.count_ones() as usize);
    let mut rest = family;
    while rest != 0 {
        opens.push(SubsetMask::truncated(n, rest.trailing_zeros()));
        rest &= rest - 1;
    }
    FiniteSpace::from_normalized_unchecked(n, opens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_topologies(1).unwrap(), 1);
        assert_eq!(count_topologies(2).unwrap(), 4);
        assert_eq!(count_topologies(3).unwrap(), 29);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            enumerate_topologies(7),
            Err(SpaceError::GroundSetTooLarge { n: 7, max: 6 })
        ));
        assert!(enumerate_topologies(0).is_err());
    }

    #[test]
    fn first_space_is_indiscrete() {
        let first = enumerate_topologies(3).unwrap().next().unwrap();
        assert_eq!(first, FiniteSpace::indiscrete(3));
    }

    #[test]
    fn yielded_spaces_validate() {
        for s in enumerate_topologies(3).unwrap() {
            let rebuilt = FiniteSpace::new(s.n(), s.opens().iter().copied()).unwrap();
            assert_eq!(rebuilt, s);
        }
    }

    #[test]
    fn partitions_concatenate_to_full_sequence() {
        let full: Vec<FiniteSpace> = enumerate_topologies(4).unwrap().collect();
        for depth in [0, 1, 3, 7, 40] {
            let joined: Vec<FiniteSpace> = partitions(4, depth)
                .unwrap()
                .into_iter()
                .flat_map(|p| p.into_iter())
                .collect();
            assert_eq!(joined, full, "depth {depth}");
        }
    }

    #[test]
    fn close_with_adds_union_and_intersection() {
        // {φ, ab, abc} on 3 points, adding {bc} forces {b}.
        let fam = 1u64 | 1 << 0b011 | 1 << 0b111;
        let closed = close_with(fam, 0b110);
        assert_eq!(closed, fam | 1 << 0b110 | 1 << 0b010);
    }
}
