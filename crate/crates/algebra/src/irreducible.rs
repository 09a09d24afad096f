//! Irreducibility over the rationals.
//!
//! Mod-p factorization patterns restrict the possible degrees of a rational
//! factor. Whatever survives is settled by searching conjugation-closed sets
//! of certified complex roots whose product has integral coefficients, with
//! every candidate factor confirmed by exact division.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::ball::ComplexBall;
use crate::error::{AlgebraError, Result};
use crate::modp;
use crate::poly::RatPoly;
use crate::roots::{isolate_roots, IsolatedRoot};

const PRIMES: usize = 24;
const MAX_ORBITS: usize = 26;

/// Degrees `d` with `0 < d < n` that a rational factor might have.
pub fn possible_factor_degrees(f: &RatPoly) -> Vec<usize> {
    let n = f.degree();
    let ints = f.to_primitive_integer();
    let mut allowed = vec![true; n + 1];
    for p in modp::small_primes(PRIMES) {
        if let Some(degs) = modp::factor_degrees(&ints, p) {
            let s = modp::subset_sums(&degs);
            for d in 0..=n {
                allowed[d] &= s[d];
            }
        }
    }
    (1..n).filter(|&d| allowed[d]).collect()
}

/// `Ok(())` if `f` is irreducible over Q, `Err(Reducible)` with a witness
/// factor otherwise.
pub fn check_irreducible(f: &RatPoly) -> Result<()> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPoly);
    }
    let n = f.degree();
    if n == 0 {
        return Err(AlgebraError::ConstantPoly(f.clone()));
    }
    if n == 1 {
        return Ok(());
    }
    let g = f.gcd(&f.derivative());
    if g.degree() > 0 {
        return Err(AlgebraError::Reducible { poly: f.clone(), factor: g });
    }
    let allowed = possible_factor_degrees(f);
    let allowed: Vec<usize> = allowed.into_iter().filter(|&d| 2 * d <= n).collect();
    if allowed.is_empty() {
        return Ok(());
    }
    match search_factor(f, &allowed)? {
        Some(factor) => Err(AlgebraError::Reducible { poly: f.clone(), factor }),
        None => Ok(()),
    }
}

fn search_factor(f: &RatPoly, allowed: &[usize]) -> Result<Option<RatPoly>> {
    let n = f.degree();
    let roots = isolate_roots(f, 128)?;
    // conjugation orbits: a real root, or a root with positive imaginary part and its conjugate
    let orbits: Vec<Vec<IsolatedRoot>> = {
        let mut v = Vec::new();
        for r in &roots {
            if r.real {
                v.push(vec![r.clone()]);
            } else if r.im.is_positive() {
                let mut c = r.clone();
                c.im = c.im.neg();
                v.push(vec![r.clone(), c]);
            }
        }
        v
    };
    if orbits.len() > MAX_ORBITS {
        return Err(AlgebraError::IrreducibilityUndecided { degree: n });
    }
    let ints = f.to_primitive_integer();
    let lead = BigRational::from_integer(ints[n].clone());
    let lead_f = lead.to_f64().unwrap_or(f64::MAX);
    let traces: Vec<f64> = orbits.iter().map(|o| o.iter().map(|r| r.to_f64().0).sum()).collect();
    let mut allowed_mask = vec![false; n + 1];
    for &d in allowed {
        allowed_mask[d] = true;
    }
    let max_deg = *allowed.iter().max().unwrap();
    let mut chosen = Vec::new();
    let mut found = None;
    search(&orbits, &traces, 0, 0, 0.0, max_deg, &allowed_mask, lead_f, &mut chosen, &mut |sel: &[usize]| {
        let cand = candidate_factor(f, &orbits, sel, &lead);
        if let Some(g) = cand {
            found = Some(g);
            true
        } else {
            false
        }
    });
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search(
    orbits: &[Vec<IsolatedRoot>],
    traces: &[f64],
    start: usize,
    deg: usize,
    trace: f64,
    max_deg: usize,
    allowed: &[bool],
    lead: f64,
    chosen: &mut Vec<usize>,
    test: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if deg > 0 && allowed[deg] {
        let t = trace * lead;
        if (t - t.round()).abs() < 1e-6 * t.abs().max(1.0) && test(chosen) {
            return true;
        }
    }
    for i in start..orbits.len() {
        let d = deg + orbits[i].len();
        if d > max_deg {
            continue;
        }
        chosen.push(i);
        if search(orbits, traces, i + 1, d, trace + traces[i], max_deg, allowed, lead, chosen, test) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Form `lead * prod (x - r)` in ball arithmetic; if every coefficient ball
/// contains exactly one integer, test the resulting polynomial by division.
fn candidate_factor(f: &RatPoly, orbits: &[Vec<IsolatedRoot>], sel: &[usize], lead: &BigRational) -> Option<RatPoly> {
    let prec = 160;
    let mut coeffs = vec![ComplexBall::from_rational(lead, prec)];
    for &i in sel {
        for r in &orbits[i] {
            let b = r.ball();
            let mut next = vec![ComplexBall::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c, prec);
                next[k] = next[k].sub(&c.mul(&b, prec), prec);
            }
            coeffs = next;
        }
    }
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        if !c.im.contains_zero() {
            return None;
        }
        let lo = c.re.lower().to_rational();
        let hi = c.re.upper().to_rational();
        let k = lo.ceil();
        if k > hi || (&k + BigRational::one()) <= hi {
            return None;
        }
        ints.push(k);
    }
    let g = RatPoly::new(ints).monic();
    let (_, r) = f.div_rem(&g).ok()?;
    r.is_zero().then_some(g)
}
