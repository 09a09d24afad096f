//! Midpoint–radius ball arithmetic over the reals and (rectangular) complex
//! numbers. Every operation returns a ball that contains all possible results
//! for inputs drawn from the argument balls.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::dyadic::Dyadic;
use crate::poly::RatPoly;

const RAD_BITS: u32 = 30;

#[derive(Clone)]
pub struct RealBall {
    mid: Dyadic,
    rad: Dyadic,
}

impl RealBall {
    pub fn exact(mid: Dyadic) -> Self {
        RealBall { mid, rad: Dyadic::zero() }
    }

    pub fn new(mid: Dyadic, rad: Dyadic) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        RealBall { mid, rad: rad.round_up(RAD_BITS) }
    }

    pub fn zero() -> Self {
        Self::exact(Dyadic::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(Dyadic::from_int(n))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let (m, e) = Dyadic::from_rational(q, prec);
        RealBall::new(m, e)
    }

    /// Ball enclosing the closed interval `[lo, hi]`.
    pub fn from_interval(lo: &Dyadic, hi: &Dyadic) -> Self {
        assert!(lo <= hi);
        let mid = lo.add(hi).mul_2exp(-1);
        let rad = hi.sub(&mid);
        RealBall::new(mid, rad)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad)
    }

    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        (self.mid.to_rational() - q).abs() <= self.rad.to_rational()
    }

    pub fn is_positive(&self) -> bool {
        self.lower().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper().is_negative()
    }

    pub fn overlaps(&self, o: &RealBall) -> bool {
        self.mid.sub(&o.mid).abs() <= self.rad.add(&o.rad)
    }

    /// Upper bound of `|x|` over the ball.
    pub fn abs_upper(&self) -> Dyadic {
        self.mid.abs().add(&self.rad)
    }

    /// Lower bound of `|x|` over the ball (zero if the ball contains zero).
    pub fn abs_lower(&self) -> Dyadic {
        let l = self.mid.abs().sub(&self.rad);
        if l.is_negative() {
            Dyadic::zero()
        } else {
            l
        }
    }

    fn finish(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (m, e) = mid.round(prec);
        RealBall::new(m, rad.add(&e))
    }

    pub fn add(&self, o: &RealBall, prec: u32) -> Self {
        Self::finish(self.mid.add(&o.mid), self.rad.add(&o.rad), prec)
    }

    pub fn sub(&self, o: &RealBall, prec: u32) -> Self {
        Self::finish(self.mid.sub(&o.mid), self.rad.add(&o.rad), prec)
    }

    pub fn neg(&self) -> Self {
        RealBall { mid: self.mid.neg(), rad: self.rad.clone() }
    }

    pub fn mul(&self, o: &RealBall, prec: u32) -> Self {
        let rad = self.mid.abs().mul(&o.rad).add(&o.mid.abs().mul(&self.rad)).add(&self.rad.mul(&o.rad));
        Self::finish(self.mid.mul(&o.mid), rad, prec)
    }

    pub fn sqr(&self, prec: u32) -> Self {
        self.mul(self, prec)
    }

    /// `None` if the ball contains zero.
    pub fn inv(&self, prec: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let m = self.mid.abs();
        let (q, e) = Dyadic::from_int(1).div(&self.mid, prec);
        // |1/x - 1/m| <= r / (|m| (|m| - r))
        let denom = m.mul(&m.sub(&self.rad));
        let spread = if self.rad.is_zero() { Dyadic::zero() } else { self.rad.div_up(&denom, 40) };
        Some(RealBall::new(q, spread.add(&e)))
    }

    pub fn div(&self, o: &RealBall, prec: u32) -> Option<Self> {
        Some(self.mul(&o.inv(prec + 8)?, prec))
    }

    pub fn pow(&self, e: u32, prec: u32) -> Self {
        let mut acc = RealBall::from_int(1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            base = base.sqr(prec);
            e >>= 1;
        }
        acc
    }

    /// Enclosure of the non-negative square root; `None` if the ball reaches
    /// below zero.
    pub fn sqrt(&self, prec: u32) -> Option<Self> {
        let lo = self.lower();
        if lo.is_negative() {
            return None;
        }
        Some(RealBall::from_interval(&lo.sqrt_down(prec), &self.upper().sqrt_up(prec)))
    }

    /// Evaluate a rational polynomial on the ball.
    pub fn eval_poly(&self, p: &RatPoly, prec: u32) -> Self {
        let mut acc = RealBall::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self, prec).add(&RealBall::from_rational(c, prec), prec);
        }
        acc
    }

    /// True when `p` takes strictly opposite signs at the two endpoints, which
    /// certifies a real root of `p` inside the ball. Endpoints are evaluated exactly.
    pub fn brackets_root_of(&self, p: &RatPoly) -> bool {
        let lo = p.eval(&self.lower().to_rational());
        let hi = p.eval(&self.upper().to_rational());
        (lo.is_negative() && hi.is_positive()) || (lo.is_positive() && hi.is_negative())
    }
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e} +/- {:.2e}]", self.mid.to_f64(), self.rad.to_f64())
    }
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn real(re: RealBall) -> Self {
        ComplexBall { re, im: RealBall::zero() }
    }

    pub fn zero() -> Self {
        Self::real(RealBall::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(RealBall::from_int(n))
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::real(RealBall::from_rational(q, prec))
    }

    /// Disk of radius `r` around `(x, y)`, enclosed in a square.
    pub fn from_disk(x: Dyadic, y: Dyadic, r: Dyadic) -> Self {
        ComplexBall { re: RealBall::new(x, r.clone()), im: RealBall::new(y, r) }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, o: &ComplexBall) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    /// Largest of the two component radii.
    pub fn rad(&self) -> Dyadic {
        self.re.rad().max(self.im.rad()).clone()
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad().to_f64()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    pub fn add(&self, o: &ComplexBall, prec: u32) -> Self {
        ComplexBall { re: self.re.add(&o.re, prec), im: self.im.add(&o.im, prec) }
    }

    pub fn sub(&self, o: &ComplexBall, prec: u32) -> Self {
        ComplexBall { re: self.re.sub(&o.re, prec), im: self.im.sub(&o.im, prec) }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        ComplexBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &ComplexBall, prec: u32) -> Self {
        let re = self.re.mul(&o.re, prec).sub(&self.im.mul(&o.im, prec), prec);
        let im = self.re.mul(&o.im, prec).add(&self.im.mul(&o.re, prec), prec);
        ComplexBall { re, im }
    }

    pub fn mul_real(&self, r: &RealBall, prec: u32) -> Self {
        ComplexBall { re: self.re.mul(r, prec), im: self.im.mul(r, prec) }
    }

    pub fn abs_sqr(&self, prec: u32) -> RealBall {
        self.re.sqr(prec).add(&self.im.sqr(prec), prec)
    }

    /// Upper bound of the modulus.
    pub fn abs_upper(&self, prec: u32) -> Dyadic {
        let a = self.re.abs_upper();
        let b = self.im.abs_upper();
        a.mul(&a).add(&b.mul(&b)).sqrt_up(prec)
    }

    /// Lower bound of the modulus.
    pub fn abs_lower(&self, prec: u32) -> Dyadic {
        let a = self.re.abs_lower();
        let b = self.im.abs_lower();
        a.mul(&a).add(&b.mul(&b)).sqrt_down(prec)
    }

    pub fn inv(&self, prec: u32) -> Option<Self> {
        let n = self.abs_sqr(prec + 16).inv(prec + 8)?;
        Some(self.conj().mul_real(&n, prec))
    }

    pub fn div(&self, o: &ComplexBall, prec: u32) -> Option<Self> {
        Some(self.mul(&o.inv(prec + 8)?, prec))
    }

    pub fn pow(&self, e: u32, prec: u32) -> Self {
        let mut acc = ComplexBall::from_int(1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            base = base.mul(&base, prec);
            e >>= 1;
        }
        acc
    }

    pub fn eval_poly(&self, p: &RatPoly, prec: u32) -> Self {
        let mut acc = ComplexBall::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self, prec).add(&ComplexBall::from_rational(c, prec), prec);
        }
        acc
    }

    /// Evaluate a polynomial given by rational coefficients (lowest first).
    pub fn eval_coeffs(&self, coeffs: &[BigRational], prec: u32) -> Self {
        let mut acc = ComplexBall::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self, prec);
            if !c.is_zero() {
                acc = acc.add(&ComplexBall::from_rational(c, prec), prec);
            }
        }
        acc
    }
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}*im", self.re, self.im)
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
