//! Certified isolation of all complex roots of a squarefree rational polynomial.
//!
//! Approximations come from the Aberth–Ehrlich iteration (first in `f64`, then
//! in multiprecision). Each approximation `z` is certified by the disk of
//! radius `n |p(z)| / |p'(z)|`, which always contains a root; pairwise disjoint
//! disks therefore isolate all `n` roots. Real roots get disks centred on the
//! real axis and non-real roots come in exactly conjugate pairs, so realness is
//! certified as well.

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::ball::{ComplexBall, RealBall};
use crate::dyadic::Dyadic;
use crate::error::{AlgebraError, Result};
use crate::mpc::{horner as horner_mp, Mpc};
use crate::poly::RatPoly;

/// Precision at which the canonical root order is fixed.
pub const REFERENCE_PRECISION: u32 = 128;

const MAX_ATTEMPTS: usize = 7;

#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub re: Dyadic,
    pub im: Dyadic,
    pub rad: Dyadic,
    pub real: bool,
}

impl IsolatedRoot {
    pub fn ball(&self) -> ComplexBall {
        if self.real {
            ComplexBall::real(RealBall::new(self.re.clone(), self.rad.clone()))
        } else {
            ComplexBall::from_disk(self.re.clone(), self.im.clone(), self.rad.clone())
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    fn disjoint(&self, o: &IsolatedRoot) -> bool {
        let dx = self.re.sub(&o.re);
        let dy = self.im.sub(&o.im);
        let r = self.rad.add(&o.rad);
        dx.mul(&dx).add(&dy.mul(&dy)) > r.mul(&r)
    }

    fn canonical_cmp(&self, o: &IsolatedRoot) -> Ordering {
        self.re.cmp(&o.re).then_with(|| self.im.cmp(&o.im))
    }
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &RatPoly) -> RatPoly {
    if p.degree() == 0 {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).expect("gcd is nonzero").0.monic()
}

fn to_f64_coeffs(p: &RatPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner_f64(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

fn initial_guesses(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n].abs();
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let a = c[n - k].abs() / lead;
        if a > 0.0 {
            bound = bound.max(a.powf(1.0 / k as f64));
        }
    }
    let r = if bound > 0.0 { bound } else { 1.0 };
    (0..n).map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect()
}

/// Floating-point approximations of all roots (no guarantees).
pub fn approximate_roots(p: &RatPoly) -> Vec<Complex64> {
    let n = p.degree();
    if n == 0 {
        return Vec::new();
    }
    let c = to_f64_coeffs(p);
    if c.iter().any(|x| !x.is_finite()) {
        let mut unit = vec![0.0; n + 1];
        unit[0] = -1.0;
        unit[n] = 1.0;
        return initial_guesses(&unit);
    }
    let mut z = initial_guesses(&c);
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let (v, d) = horner_f64(&c, z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / d;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.is_finite() {
                continue;
            }
            z[i] -= w;
            worst = worst.max(w.norm() / z[i].norm().max(1.0));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Multiprecision Aberth iterations until the corrections drop below the
/// working precision.
fn aberth_mp(p: &RatPoly, z: &mut [Mpc], w: u32) {
    let n = z.len();
    let c: Vec<Mpc> = p.coeffs().iter().map(|q| Mpc { re: Dyadic::from_rational(q, w).0, im: Dyadic::zero() }).collect();
    let one = Mpc { re: Dyadic::from_int(1), im: Dyadic::zero() };
    let mut previous = i64::MAX;
    for _ in 0..400 {
        // largest step relative to the size of its root, as a power of two
        let mut worst = i64::MIN;
        for i in 0..n {
            let (v, d) = horner_mp(&c, &z[i], w);
            if v.is_zero() {
                continue;
            }
            let Some(ratio) = v.div(&d, w) else {
                worst = i64::MAX;
                continue;
            };
            let mut s = Mpc::zero();
            for j in 0..n {
                if j != i {
                    if let Some(t) = one.div(&z[i].sub(&z[j], w), w) {
                        s = s.add(&t, w);
                    }
                }
            }
            let den = one.sub(&ratio.mul(&s, w), w);
            let Some(step) = ratio.div(&den, w) else {
                worst = i64::MAX;
                continue;
            };
            z[i] = z[i].sub(&step, w);
            worst = worst.max(step.magnitude() - z[i].magnitude().max(0));
        }
        if worst < -(w as i64) + 12 {
            break;
        }
        // rounding noise: steps stopped shrinking although they are already tiny
        if worst < -(w as i64) / 2 && worst >= previous - 1 {
            break;
        }
        previous = worst;
    }
}

/// Snap near-real approximations onto the real axis and make non-real ones
/// exact conjugate pairs. Returns `None` if the pairing is inconsistent.
fn symmetrize(z: &[Mpc], w: u32) -> Option<Vec<(Dyadic, Dyadic, bool)>> {
    let n = z.len();
    let tol = |m: &Mpc| m.magnitude().max(0) - (w as i64) / 2;
    let mut out: Vec<Option<(Dyadic, Dyadic, bool)>> = vec![None; n];
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, m) in z.iter().enumerate() {
        if m.im.is_zero() || m.im.magnitude() < tol(m) {
            out[i] = Some((m.re.clone(), Dyadic::zero(), true));
        } else if m.im.is_positive() {
            upper.push(i);
        } else {
            lower.push(i);
        }
    }
    if upper.len() != lower.len() {
        return None;
    }
    let mut used = vec![false; lower.len()];
    for &i in &upper {
        let target = Mpc { re: z[i].re.clone(), im: z[i].im.neg() };
        let mut best: Option<(usize, Dyadic)> = None;
        for (k, &j) in lower.iter().enumerate() {
            if used[k] {
                continue;
            }
            let d = target.sub(&z[j], w).norm_sqr(w);
            if best.as_ref().is_none_or(|(_, b)| d < *b) {
                best = Some((k, d));
            }
        }
        let (k, _) = best?;
        used[k] = true;
        let j = lower[k];
        let re = z[i].re.add(&z[j].re).mul_2exp(-1).rounded(w);
        let im = z[i].im.sub(&z[j].im).mul_2exp(-1).rounded(w);
        out[i] = Some((re.clone(), im.clone(), false));
        out[j] = Some((re, im.neg(), false));
    }
    out.into_iter().collect()
}

fn certify(p: &RatPoly, centers: &[(Dyadic, Dyadic, bool)], w: u32) -> Option<Vec<IsolatedRoot>> {
    let n = p.degree();
    let dp = p.derivative();
    let nd = Dyadic::from_int(n as i64);
    let mut roots = Vec::with_capacity(n);
    for (re, im, real) in centers {
        let z = ComplexBall::new(RealBall::exact(re.clone()), RealBall::exact(im.clone()));
        let v = z.eval_poly(p, w);
        let d = z.eval_poly(&dp, w);
        let lo = d.abs_lower(w);
        if !lo.is_positive() {
            return None;
        }
        let rad = nd.mul(&v.abs_upper(w)).div_up(&lo, 40).round_up(40);
        roots.push(IsolatedRoot { re: re.clone(), im: im.clone(), rad, real: *real });
    }
    for i in 0..n {
        for j in i + 1..n {
            if !roots[i].disjoint(&roots[j]) {
                return None;
            }
        }
    }
    Some(roots)
}

fn isolate_from(p: &RatPoly, start: Vec<Mpc>, prec: u32) -> Result<Vec<IsolatedRoot>> {
    let mut z = start;
    let mut w = prec + 32;
    for _ in 0..MAX_ATTEMPTS {
        aberth_mp(p, &mut z, w);
        if let Some(c) = symmetrize(&z, w) {
            if let Some(r) = certify(p, &c, w) {
                return Ok(r);
            }
        }
        w *= 2;
    }
    Err(AlgebraError::PrecisionTooLow { bits: prec })
}

fn linear_root(p: &RatPoly, prec: u32) -> IsolatedRoot {
    let r: BigRational = -p.coeff(0) / p.coeff(1);
    let ball = RealBall::from_rational(&r, prec.max(REFERENCE_PRECISION) + 32);
    IsolatedRoot { re: ball.mid().clone(), im: Dyadic::zero(), rad: ball.rad().clone(), real: true }
}

/// Isolate all roots of a squarefree polynomial. The returned list is in
/// canonical order: lexicographic on (real part, imaginary part) of the disk
/// centres computed at [`REFERENCE_PRECISION`]. Radii are at most about
/// `2^-prec` relative to the root size.
pub fn isolate_roots(p: &RatPoly, prec: u32) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPoly);
    }
    match p.degree() {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![linear_root(p, prec)]),
        _ => {}
    }
    let start: Vec<Mpc> = approximate_roots(p).into_iter().map(Mpc::from_c64).collect();
    let mut reference = isolate_from(p, start, REFERENCE_PRECISION)?;
    reference.sort_by(|a, b| a.canonical_cmp(b));
    if prec <= REFERENCE_PRECISION {
        return Ok(reference);
    }
    refine(p, &reference, prec)
}

/// Re-isolate the roots at a higher precision while keeping the order of `reference`.
pub fn refine(p: &RatPoly, reference: &[IsolatedRoot], prec: u32) -> Result<Vec<IsolatedRoot>> {
    let start: Vec<Mpc> = reference.iter().map(|r| Mpc { re: r.re.clone(), im: r.im.clone() }).collect();
    let fine = isolate_from(p, start, prec)?;
    let mut out = Vec::with_capacity(fine.len());
    for r in reference {
        let hits: Vec<&IsolatedRoot> = fine.iter().filter(|f| !f.disjoint(r)).collect();
        let [f] = hits.as_slice() else {
            return Err(AlgebraError::PrecisionTooLow { bits: prec });
        };
        let ok = reference.iter().filter(|q| !q.disjoint(f)).count() == 1;
        if !ok || f.real != r.real {
            return Err(AlgebraError::PrecisionTooLow { bits: prec });
        }
        out.push((*f).clone());
    }
    Ok(out)
}

/// Number of real roots among isolated roots.
pub fn count_real(roots: &[IsolatedRoot]) -> usize {
    roots.iter().filter(|r| r.real).count()
}
