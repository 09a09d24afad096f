//! Fusion ring automorphisms and their action on systems.

use crate::error::{FusionError, Result};
use crate::ring::FusionRing;
use crate::system::FusionSystem;

pub const MAX_SEARCH_RANK: usize = 10;

/// `N_{σi,σj}^{σk} = N_{ij}^k` for all labels.
pub fn is_automorphism(ring: &FusionRing, sigma: &[usize]) -> bool {
    let r = ring.rank();
    if sigma.len() != r {
        return false;
    }
    let mut seen = vec![false; r];
    for &x in sigma {
        if x >= r || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| ring.n(sigma[i], sigma[j], sigma[k]) == ring.n(i, j, k))))
}

/// All automorphisms in lexicographic order, identity first. Exhaustive
/// backtracking over permutations fixing the unit.
pub fn find_ring_automorphisms(ring: &FusionRing) -> Result<Vec<Vec<usize>>> {
    let r = ring.rank();
    if r > MAX_SEARCH_RANK {
        return Err(FusionError::RankTooLarge { rank: r, max: MAX_SEARCH_RANK });
    }
    let mut out = Vec::new();
    let mut sigma = vec![0usize];
    let mut used = vec![false; r];
    used[0] = true;
    extend(ring, &mut sigma, &mut used, &mut out);
    Ok(out)
}

fn extend(ring: &FusionRing, sigma: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    let r = ring.rank();
    let t = sigma.len();
    if t == r {
        out.push(sigma.clone());
        return;
    }
    for x in 0..r {
        if used[x] {
            continue;
        }
        sigma.push(x);
        let consistent =
            (0..=t).all(|i| (0..=t).all(|j| (0..=t).all(|k| !(i == t || j == t || k == t) || ring.n(sigma[i], sigma[j], sigma[k]) == ring.n(i, j, k))));
        if consistent {
            used[x] = true;
            extend(ring, sigma, used, out);
            used[x] = false;
        }
        sigma.pop();
    }
}

/// The relabelled system `F' = F ∘ σ`, `P' = P ∘ σ`, `R' = R ∘ σ`.
pub fn apply_automorphism(sys: &FusionSystem, sigma: &[usize]) -> Result<FusionSystem> {
    if !is_automorphism(sys.ring(), sigma) {
        return Err(FusionError::NotAnAutomorphism);
    }
    let f = sys.f_symbols().keys().map(|k| (*k, sys.f_symbols()[&k.map(|x| sigma[x])].clone())).collect();
    let p = (0..sys.rank()).map(|a| sys.p(a).clone()).collect::<Vec<_>>();
    let p = (0..sys.rank()).map(|a| p[sigma[a]].clone()).collect();
    let r = sys.r_symbols().map(|r| r.keys().map(|k| (*k, r[&k.map(|x| sigma[x])].clone())).collect());
    FusionSystem::new(sys.ring().clone(), sys.field().clone(), f, p, r)
}
