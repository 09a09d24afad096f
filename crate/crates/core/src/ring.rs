//! Fusion rings: labels, duality and structure constants.
//!
//! Labels are 0-based internally; label 0 is the unit. Files and reports use
//! 1-based labels.

use serde::Serialize;

use crate::error::{FusionError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    dual: Vec<usize>,
    n: Vec<u32>,
    names: Vec<String>,
}

impl FusionRing {
    /// Builds a ring from the dual permutation and the full `rank³` table of
    /// structure constants, indexed `n[(i * rank + j) * rank + k] = N_{i,j}^k`.
    /// Only shapes are checked; the axioms are left to [`ring_verify`].
    pub fn new(rank: usize, dual: Vec<usize>, n: Vec<u32>) -> Result<Self> {
        if rank == 0 {
            return Err(FusionError::BadRing("rank must be positive".into()));
        }
        if dual.len() != rank || dual.iter().any(|&d| d >= rank) {
            return Err(FusionError::BadRing("dual map must send labels to labels".into()));
        }
        if n.len() != rank * rank * rank {
            return Err(FusionError::BadRing(format!("expected {} structure constants, got {}", rank * rank * rank, n.len())));
        }
        let names = (1..=rank).map(|i| i.to_string()).collect();
        Ok(FusionRing { rank, dual, n, names })
    }

    /// Builds a ring from sparse entries `(i, j, k, N_{i,j}^k)`.
    pub fn from_entries(rank: usize, dual: Vec<usize>, entries: &[(usize, usize, usize, u32)]) -> Result<Self> {
        let mut n = vec![0; rank * rank * rank];
        for &(i, j, k, c) in entries {
            if i >= rank || j >= rank || k >= rank {
                return Err(FusionError::BadLabel(i.max(j).max(k) + 1));
            }
            n[(i * rank + j) * rank + k] = c;
        }
        FusionRing::new(rank, dual, n)
    }

    /// Builds a ring from a product rule returning the summands of `i ⊗ j`.
    pub fn from_rule(rank: usize, dual: Vec<usize>, rule: impl Fn(usize, usize) -> Vec<usize>) -> Result<Self> {
        let mut n = vec![0; rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                for k in rule(i, j) {
                    n[(i * rank + j) * rank + k] += 1;
                }
            }
        }
        FusionRing::new(rank, dual, n)
    }

    pub fn with_names(mut self, names: &[&str]) -> Self {
        assert_eq!(names.len(), self.rank);
        self.names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Replaces the display names; they must be nonempty and free of
    /// whitespace.
    pub fn renamed(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.rank || names.iter().any(|n| n.is_empty() || n.chars().any(char::is_whitespace)) {
            return Err(FusionError::BadRing("one name per label, without whitespace".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[(i * self.rank + j) * self.rank + k]
    }

    #[inline]
    pub fn fuses(&self, i: usize, j: usize, k: usize) -> bool {
        self.n(i, j, k) > 0
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.n.iter().all(|&c| c <= 1)
    }

    /// Labels `k` with `N_{i,j}^k > 0`, ascending.
    pub fn products(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.rank).filter(|&k| self.fuses(i, j, k)).collect()
    }

    /// Admissible triples `(a, b, c)` with `N_{a,b}^c > 0`, lexicographic.
    pub fn vertices(&self) -> Vec<[usize; 3]> {
        let r = self.rank;
        let mut out = Vec::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    if self.fuses(a, b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Nonzero structure constants `(i, j, k, N)`, lexicographic.
    pub fn entries(&self) -> Vec<(usize, usize, usize, u32)> {
        let r = self.rank;
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let c = self.n(i, j, k);
                    if c > 0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    pub fn check_label(&self, a: usize) -> Result<()> {
        if a < self.rank {
            Ok(())
        } else {
            Err(FusionError::BadLabel(a + 1))
        }
    }

    /// Left-regular matrix of `a`: entry `(b, c)` is `N_{a,b}^c`.
    pub fn fusion_matrix(&self, a: usize) -> Result<Vec<Vec<u32>>> {
        self.check_label(a)?;
        Ok((0..self.rank).map(|b| (0..self.rank).map(|c| self.n(a, b, c)).collect()).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RingAxiom {
    UnitSelfDual,
    DualInvolution,
    LeftUnit,
    RightUnit,
    Duality,
    Associativity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingViolation {
    pub axiom: RingAxiom,
    /// 1-based labels involved.
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub ok: bool,
    pub multiplicity_free: bool,
    pub violations: Vec<RingViolation>,
}

pub fn ring_verify(ring: &FusionRing) -> RingReport {
    let r = ring.rank;
    let mut v = Vec::new();
    let mut push = |axiom, idx: &[usize]| v.push(RingViolation { axiom, indices: idx.iter().map(|x| x + 1).collect() });
    if ring.dual(0) != 0 {
        push(RingAxiom::UnitSelfDual, &[0]);
    }
    for a in 0..r {
        if ring.dual(ring.dual(a)) != a {
            push(RingAxiom::DualInvolution, &[a]);
        }
    }
    for j in 0..r {
        for k in 0..r {
            let delta = u32::from(j == k);
            if ring.n(0, j, k) != delta {
                push(RingAxiom::LeftUnit, &[j, k]);
            }
            if ring.n(j, 0, k) != delta {
                push(RingAxiom::RightUnit, &[j, k]);
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            if ring.n(i, j, 0) != u32::from(j == ring.dual(i)) {
                push(RingAxiom::Duality, &[i, j]);
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let lhs: u32 = (0..r).map(|m| ring.n(i, j, m) * ring.n(m, k, l)).sum();
                    let rhs: u32 = (0..r).map(|n| ring.n(j, k, n) * ring.n(i, n, l)).sum();
                    if lhs != rhs {
                        push(RingAxiom::Associativity, &[i, j, k, l]);
                    }
                }
            }
        }
    }
    RingReport { ok: v.is_empty(), multiplicity_free: ring.is_multiplicity_free(), violations: v }
}
