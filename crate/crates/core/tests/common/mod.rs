//! Brute-force reference implementations used to check the library.
//!
//! Everything here works straight from the textbook definitions over explicit
//! lists of sets and shares no code with the library's table-driven kernels.

#![allow(dead_code)]

pub mod laws;
pub mod transfer;

use std::collections::BTreeSet;

pub type Set = u32;

pub fn full(n: usize) -> Set {
    (1u32 << n) - 1
}

pub fn subsets(n: usize) -> impl Iterator<Item = Set> {
    0..1u32 << n
}

pub fn subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

/// Every family of subsets of an `n`-point set that contains φ and X and is closed under
/// pairwise union and intersection, found by testing all 2^(2^n - 2) candidate families.
pub fn naive_topologies(n: usize) -> Vec<Vec<Set>> {
    assert!(n <= 4, "naive family oracle is only feasible for n ≤ 4");
    let x = full(n);
    let inner: Vec<Set> = (1..x).collect();
    let mut out = Vec::new();
    for choice in 0u64..1u64 << inner.len() {
        let mut fam = vec![0, x];
        for (i, &s) in inner.iter().enumerate() {
            if choice >> i & 1 == 1 {
                fam.push(s);
            }
        }
        let set: BTreeSet<Set> = fam.iter().copied().collect();
        let closed = fam.iter().all(|&u| {
            fam.iter()
                .all(|&v| set.contains(&(u | v)) && set.contains(&(u & v)))
        });
        if closed {
            out.push(set.into_iter().collect());
        }
    }
    out
}

/// Number of preorders (reflexive, transitive relations) on `n` points; these are in
/// bijection with labeled topologies.
pub fn count_preorders(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut count = 0;
    for choice in 0u64..1u64 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = choice >> k & 1 == 1;
        }
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !rel[i][j] || (0..n).all(|k| !rel[j][k] || rel[i][k])));
        if transitive {
            count += 1;
        }
    }
    count
}

/// A topology given as an explicit list of open sets, queried by brute force.
#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub opens: Vec<Set>,
    pub strict_hstarg: bool,
}

impl Naive {
    pub fn new(n: usize, opens: &[Set]) -> Self {
        Self {
            n,
            opens: opens.to_vec(),
            strict_hstarg: false,
        }
    }

    pub fn x(&self) -> Set {
        full(self.n)
    }

    pub fn comp(&self, a: Set) -> Set {
        !a & self.x()
    }

    pub fn is_open(&self, a: Set) -> bool {
        self.opens.contains(&a)
    }

    pub fn int(&self, a: Set) -> Set {
        self.opens
            .iter()
            .filter(|&&u| subset(u, a))
            .fold(0, |acc, &u| acc | u)
    }

    pub fn cl(&self, a: Set) -> Set {
        self.opens
            .iter()
            .map(|&u| self.comp(u))
            .filter(|&f| subset(a, f))
            .fold(self.x(), |acc, f| acc & f)
    }

    /// Intersection of all members of `closed` containing `a`.
    pub fn closure_in(&self, closed: &[Set], a: Set) -> Set {
        closed
            .iter()
            .filter(|&&f| subset(a, f))
            .fold(self.x(), |acc, &f| acc & f)
    }

    fn family(&self, pred: impl Fn(Set) -> bool) -> Vec<Set> {
        subsets(self.n).filter(|&a| pred(a)).collect()
    }

    fn complements(&self, fam: &[Set]) -> Vec<Set> {
        let mut v: Vec<Set> = fam.iter().map(|&a| self.comp(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn semi_open(&self) -> Vec<Set> {
        self.family(|a| subset(a, self.cl(self.int(a))))
    }

    pub fn pre_open(&self) -> Vec<Set> {
        self.family(|a| subset(a, self.int(self.cl(a))))
    }

    pub fn alpha_open(&self) -> Vec<Set> {
        self.family(|a| subset(a, self.int(self.cl(self.int(a)))))
    }

    pub fn cstar_open(&self) -> Vec<Set> {
        self.family(|a| subset(self.int(self.cl(a)), a) && subset(a, self.cl(self.int(a))))
    }

    pub fn alpha_star_sets(&self) -> Vec<Set> {
        self.family(|a| self.int(self.cl(self.int(a))) == self.int(a))
    }

    /// Every U ∩ V with U open and V an α*-set.
    pub fn c_sets(&self) -> Vec<Set> {
        let stars = self.alpha_star_sets();
        let mut out: BTreeSet<Set> = BTreeSet::new();
        for &u in &self.opens {
            for &v in &stars {
                out.insert(u & v);
            }
        }
        out.into_iter().collect()
    }

    /// `{A : op(A) ⊆ U for every U in test with A ⊆ U}` (or `A ⊊ U` when strict).
    pub fn generalized_closed(
        &self,
        op: impl Fn(Set) -> Set,
        test: &[Set],
        strict: bool,
    ) -> Vec<Set> {
        self.family(|a| {
            test.iter()
                .filter(|&&u| subset(a, u) && (!strict || u != a))
                .all(|&u| subset(op(a), u))
        })
    }

    pub fn semi_closed(&self) -> Vec<Set> {
        self.complements(&self.semi_open())
    }

    pub fn alpha_closed(&self) -> Vec<Set> {
        self.complements(&self.alpha_open())
    }

    pub fn closed(&self) -> Vec<Set> {
        self.complements(&self.opens)
    }

    pub fn w_closed(&self) -> Vec<Set> {
        self.generalized_closed(|a| self.cl(a), &self.semi_open(), false)
    }

    pub fn h_closed(&self) -> Vec<Set> {
        let sc = self.semi_closed();
        let w_open = self.complements(&self.w_closed());
        self.generalized_closed(|a| self.closure_in(&sc, a), &w_open, false)
    }

    pub fn hcg_closed(&self) -> Vec<Set> {
        let hc = self.h_closed();
        self.generalized_closed(|a| self.closure_in(&hc, a), &self.c_sets(), false)
    }

    pub fn hstar_closed(&self) -> Vec<Set> {
        let hc = self.h_closed();
        let hcg_open = self.complements(&self.hcg_closed());
        self.generalized_closed(|a| self.closure_in(&hc, a), &hcg_open, false)
    }

    pub fn g_closed(&self) -> Vec<Set> {
        self.generalized_closed(|a| self.cl(a), &self.opens, false)
    }

    pub fn ghstar_closed(&self) -> Vec<Set> {
        let hs = self.hstar_closed();
        let hs_open = self.complements(&hs);
        self.generalized_closed(|a| self.closure_in(&hs, a), &hs_open, false)
    }

    pub fn hstarg_closed(&self) -> Vec<Set> {
        let hs = self.hstar_closed();
        self.generalized_closed(|a| self.closure_in(&hs, a), &self.opens, self.strict_hstarg)
    }

    pub fn scstar_closed(&self) -> Vec<Set> {
        let sc = self.semi_closed();
        self.generalized_closed(|a| self.closure_in(&sc, a), &self.cstar_open(), false)
    }

    pub fn alphacg_closed(&self) -> Vec<Set> {
        let ac = self.alpha_closed();
        self.generalized_closed(|a| self.closure_in(&ac, a), &self.c_sets(), false)
    }

    pub fn galpha_closed(&self) -> Vec<Set> {
        let ac = self.alpha_closed();
        self.generalized_closed(|a| self.closure_in(&ac, a), &self.alpha_open(), false)
    }

    pub fn alphag_closed(&self) -> Vec<Set> {
        let ac = self.alpha_closed();
        self.generalized_closed(|a| self.closure_in(&ac, a), &self.opens, false)
    }

    /// Closed family for a class named by its short tag.
    pub fn closed_family(&self, tag: &str) -> Vec<Set> {
        match tag {
            "open" => self.closed(),
            "semi" => self.semi_closed(),
            "pre" => self.complements(&self.pre_open()),
            "alpha" => self.alpha_closed(),
            "c*" => self.complements(&self.cstar_open()),
            "w" => self.w_closed(),
            "h" => self.h_closed(),
            "hcg" => self.hcg_closed(),
            "h*" => self.hstar_closed(),
            "g" => self.g_closed(),
            "gh*" => self.ghstar_closed(),
            "h*g" => self.hstarg_closed(),
            "sc*" => self.scstar_closed(),
            "alphacg" => self.alphacg_closed(),
            "galpha" => self.galpha_closed(),
            "alphag" => self.alphag_closed(),
            other => panic!("unknown tag {other}"),
        }
    }

    pub fn open_family(&self, tag: &str) -> Vec<Set> {
        self.complements(&self.closed_family(tag))
    }
}

pub const CLASS_TAGS: [&str; 16] = [
    "open", "semi", "pre", "alpha", "c*", "w", "h", "hcg", "h*", "g", "gh*", "h*g", "sc*",
    "alphacg", "galpha", "alphag",
];

/// Parses `"a,ab,abc"`-style letter lists into sets.
pub fn sets(spec: &str) -> Vec<Set> {
    spec.split(',')
        .map(|t| {
            let t = t.trim();
            if t == "-" {
                0
            } else {
                t.bytes().fold(0, |acc, b| acc | 1 << (b - b'a'))
            }
        })
        .collect()
}
