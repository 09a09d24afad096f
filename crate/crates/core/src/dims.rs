//! Quantum dimensions of a pivotal system and certified Frobenius–Perron
//! dimensions of a fusion ring.

use fsys_algebra::{BigRational, Dyadic, FieldElement, QMatrix, RatPoly, RealBall};
use num_traits::{One, Signed, Zero};

use crate::error::{FusionError, Result};
use crate::ring::FusionRing;
use crate::system::{fkey_name, FusionSystem};

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumDims {
    /// `d_a = P_a / F(a*, a, a*, a*, 1, 1)`.
    pub left: Vec<FieldElement>,
    pub spherical: bool,
}

pub fn quantum_dimensions(sys: &FusionSystem) -> Result<QuantumDims> {
    let ring = sys.ring();
    let mut left = Vec::with_capacity(sys.rank());
    for a in 0..sys.rank() {
        let ad = ring.dual(a);
        let key = [ad, a, ad, ad, 0, 0];
        let f = sys.f(&key).ok_or_else(|| FusionError::MissingSymbol(fkey_name(&key)))?;
        if f.is_zero() {
            return Err(FusionError::ZeroDenominator(fkey_name(&key)));
        }
        left.push(sys.p(a).checked_div(f)?);
    }
    let spherical = (0..sys.rank()).all(|a| left[a] == left[ring.dual(a)]);
    Ok(QuantumDims { left, spherical })
}

/// Spherical dimensions, or `NotSpherical`.
pub fn spherical_dimensions(sys: &FusionSystem) -> Result<Vec<FieldElement>> {
    let q = quantum_dimensions(sys)?;
    if q.spherical {
        Ok(q.left)
    } else {
        Err(FusionError::NotSpherical)
    }
}

#[derive(Clone, Debug)]
pub struct FpDims {
    pub per_object: Vec<RealBall>,
    /// `Σ d_a²`, squared once more when requested.
    pub total: RealBall,
    pub squared: bool,
    pub minpoly_check: Option<(RatPoly, RealBall)>,
}

const MAX_REFINEMENTS: usize = 64;

/// Frobenius–Perron dimensions as certified balls of radius below `2^-prec`.
///
/// The FP vector is the Perron vector of `Σ_a N_a`; Newton refinement runs in
/// exact rational arithmetic and Collatz–Wielandt quotients bound each `d_a`.
pub fn fpdim(ring: &FusionRing, prec: u32, candidate: Option<&RatPoly>, square: bool) -> Result<FpDims> {
    let r = ring.rank();
    let mats: Vec<Vec<Vec<u32>>> = (0..r).map(|a| ring.fusion_matrix(a)).collect::<Result<_>>()?;
    let mut t = vec![vec![0u64; r]; r];
    for m in &mats {
        for b in 0..r {
            for c in 0..r {
                t[b][c] += m[b][c] as u64;
            }
        }
    }
    if t.iter().flatten().any(|&x| x == 0) {
        return Err(FusionError::BadRing("regular fusion matrix is not positive".into()));
    }
    let work = prec + 32;
    let mut v = power_iteration(&t);
    let mut per_object = Vec::new();
    let target = Dyadic::pow2(-(prec as i64));
    for _ in 0..MAX_REFINEMENTS {
        per_object = mats.iter().map(|m| collatz_wielandt(m, &v, work)).collect();
        if per_object.iter().all(|b| b.rad() < &target) {
            break;
        }
        v = newton_step(&t, &v, work);
    }
    if per_object.iter().any(|b| b.rad() >= &target) {
        return Err(fsys_algebra::AlgebraError::PrecisionTooLow { bits: prec }.into());
    }
    let mut total = RealBall::zero();
    for d in &per_object {
        total = total.add(&d.sqr(work), work);
    }
    if square {
        total = total.sqr(work);
    }
    let minpoly_check = candidate.map(|p| (p.clone(), total.eval_poly(p, work)));
    Ok(FpDims { per_object, total, squared: square, minpoly_check })
}

fn power_iteration(t: &[Vec<u64>]) -> Vec<BigRational> {
    let r = t.len();
    let mut v = vec![1.0f64; r];
    for _ in 0..200 {
        let mut w: Vec<f64> = (0..r).map(|i| (0..r).map(|j| t[i][j] as f64 * v[j]).sum()).collect();
        let s = w[0];
        w.iter_mut().for_each(|x| *x /= s);
        let done = w.iter().zip(&v).all(|(a, b)| (a - b).abs() < 1e-15 * a.abs());
        v = w;
        if done {
            break;
        }
    }
    v.iter().map(|&x| BigRational::from_float(x).unwrap_or_else(BigRational::one)).collect()
}

fn round(q: &BigRational, bits: u32) -> BigRational {
    Dyadic::from_rational(q, bits).0.to_rational()
}

/// One Newton step on `T v = λ v` with the normalization `v_0 = 1`.
fn newton_step(t: &[Vec<u64>], v: &[BigRational], bits: u32) -> Vec<BigRational> {
    let r = t.len();
    let tv: Vec<BigRational> = (0..r).map(|i| (0..r).map(|j| &v[j] * BigRational::from_integer(t[i][j].into())).sum()).collect();
    let lambda = &tv[0] / &v[0];
    // unknowns: δv_1..δv_{r-1}, δλ
    let mut a = QMatrix::zeros(r, r);
    let mut rhs = Vec::with_capacity(r);
    for i in 0..r {
        for j in 1..r {
            let mut x = BigRational::from_integer(t[i][j].into());
            if i == j {
                x -= &lambda;
            }
            a.set(i, j - 1, x);
        }
        a.set(i, r - 1, -v[i].clone());
        rhs.push(&lambda * &v[i] - &tv[i]);
    }
    match a.solve(&rhs) {
        Some(d) => {
            let mut out = v.to_vec();
            for j in 1..r {
                out[j] = round(&(&v[j] + &d[j - 1]), bits);
            }
            out
        }
        None => v.to_vec(),
    }
}

/// `[min_i (N v)_i / v_i, max_i (N v)_i / v_i]` encloses the Perron root of a
/// nonnegative `N` when `v > 0`.
fn collatz_wielandt(m: &[Vec<u32>], v: &[BigRational], bits: u32) -> RealBall {
    let r = m.len();
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for i in 0..r {
        if !v[i].is_positive() {
            return RealBall::new(Dyadic::zero(), Dyadic::pow2(64));
        }
        let s: BigRational = (0..r).filter(|&j| m[i][j] != 0).map(|j| &v[j] * BigRational::from_integer(m[i][j].into())).sum();
        let q = s / &v[i];
        if lo.as_ref().is_none_or(|l| &q < l) {
            lo = Some(q.clone());
        }
        if hi.as_ref().is_none_or(|h| &q > h) {
            hi = Some(q);
        }
    }
    let (lo, hi) = (lo.unwrap_or_else(BigRational::zero), hi.unwrap_or_else(BigRational::zero));
    let (lm, le) = Dyadic::from_rational(&lo, bits);
    let (hm, he) = Dyadic::from_rational(&hi, bits);
    RealBall::from_interval(&lm.sub(&le), &hm.add(&he))
}

/// Midpoint of a ball as `f64`, for display.
pub fn ball_f64(b: &RealBall) -> f64 {
    b.mid().to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings;
    use fsys_algebra::rational::ratio;

    #[test]
    fn pointed_rings_have_unit_dimensions() {
        let d = fpdim(&rings::cyclic(2), 64, None, false).unwrap();
        for b in &d.per_object {
            assert!(b.contains(&ratio(1, 1)));
        }
        assert!(d.total.contains(&ratio(2, 1)));
    }

    #[test]
    fn fibonacci_dimension_is_golden() {
        let d = fpdim(&rings::fibonacci(), 100, Some(&RatPoly::from_ints(&[-1, -1, 1])), false).unwrap();
        assert!(d.per_object[1].brackets_root_of(&RatPoly::from_ints(&[-1, -1, 1])));
        assert!(d.per_object[1].rad() < &Dyadic::pow2(-100));
    }

    #[test]
    fn ising_sigma_is_root_two() {
        let d = fpdim(&rings::ising(), 80, None, false).unwrap();
        assert!(d.per_object[1].brackets_root_of(&RatPoly::from_ints(&[-2, 0, 1])));
        assert!(d.per_object[2].contains(&ratio(1, 1)));
        assert!(d.total.contains(&ratio(4, 1)));
    }
}
