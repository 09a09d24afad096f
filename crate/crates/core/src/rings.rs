//! A few standard fusion rings.

use crate::ring::FusionRing;

pub fn trivial() -> FusionRing {
    FusionRing::from_rule(1, vec![0], |_, _| vec![0]).unwrap()
}

/// The group ring of ℤ/n.
pub fn cyclic(n: usize) -> FusionRing {
    assert!(n > 0);
    let dual = (0..n).map(|g| (n - g) % n).collect();
    FusionRing::from_rule(n, dual, |a, b| vec![(a + b) % n]).unwrap()
}

/// Labels 1, τ with τ ⊗ τ = 1 ⊕ τ.
pub fn fibonacci() -> FusionRing {
    FusionRing::from_rule(2, vec![0, 1], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![x],
        _ => vec![0, 1],
    })
    .unwrap()
    .with_names(&["1", "τ"])
}

/// Labels 1, σ, ψ.
pub fn ising() -> FusionRing {
    FusionRing::from_rule(3, vec![0, 1, 2], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![x],
        (1, 1) => vec![0, 2],
        (1, 2) | (2, 1) => vec![1],
        _ => vec![0],
    })
    .unwrap()
    .with_names(&["1", "σ", "ψ"])
}

/// Representation ring of S₃: trivial, sign, standard.
pub fn rep_s3() -> FusionRing {
    FusionRing::from_rule(3, vec![0, 1, 2], |a, b| match (a, b) {
        (0, x) | (x, 0) => vec![x],
        (1, 1) => vec![0],
        (1, 2) | (2, 1) => vec![2],
        _ => vec![0, 1, 2],
    })
    .unwrap()
    .with_names(&["1", "sgn", "std"])
}

/// The Haagerup ring: labels 1, α, α*, ρ, αρ, α*ρ with α of order three,
/// ρ ⊗ α = α*ρ and ρ ⊗ ρ = 1 ⊕ ρ ⊕ αρ ⊕ α*ρ.
pub fn h3() -> FusionRing {
    // g ↦ α^g for labels 0..3, g ↦ α^g ρ for labels 3..6
    let split = |x: usize| (x % 3, x >= 3);
    let group = |g: usize| g % 3;
    let rho = |g: usize| 3 + g % 3;
    FusionRing::from_rule(6, vec![0, 2, 1, 3, 4, 5], |a, b| {
        let ((g, ra), (h, rb)) = (split(a), split(b));
        match (ra, rb) {
            (false, false) => vec![group(g + h)],
            (false, true) => vec![rho(g + h)],
            (true, false) => vec![rho(g + 3 - h)],
            (true, true) => {
                let mut v = vec![group(g + 3 - h), 3, 4, 5];
                v.sort();
                v
            }
        }
    })
    .unwrap()
    .with_names(&["1", "α", "α*", "ρ", "αρ", "α*ρ"])
}
