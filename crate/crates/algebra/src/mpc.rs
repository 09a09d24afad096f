//! Approximate multiprecision complex numbers: every operation rounds to a
//! caller-supplied number of significant bits and tracks no error.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::dyadic::Dyadic;

#[derive(Clone, Debug)]
pub struct Mpc {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl Mpc {
    pub fn from_c64(z: Complex64) -> Self {
        let f = |x: f64| if x.is_finite() { Dyadic::from_f64(x) } else { Dyadic::from_int(1) };
        Mpc { re: f(z.re), im: f(z.im) }
    }
    pub fn add(&self, o: &Mpc, w: u32) -> Mpc {
        Mpc { re: self.re.add(&o.re).rounded(w), im: self.im.add(&o.im).rounded(w) }
    }
    pub fn sub(&self, o: &Mpc, w: u32) -> Mpc {
        Mpc { re: self.re.sub(&o.re).rounded(w), im: self.im.sub(&o.im).rounded(w) }
    }
    pub fn mul(&self, o: &Mpc, w: u32) -> Mpc {
        Mpc { re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)).rounded(w), im: self.re.mul(&o.im).add(&self.im.mul(&o.re)).rounded(w) }
    }
    pub fn norm_sqr(&self, w: u32) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im)).rounded(w)
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn div(&self, o: &Mpc, w: u32) -> Option<Mpc> {
        let n = o.norm_sqr(w + 8);
        if n.is_zero() {
            return None;
        }
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im));
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im));
        Some(Mpc { re: re.div(&n, w).0, im: im.div(&n, w).0 })
    }
    pub fn magnitude(&self) -> i64 {
        self.re.magnitude().max(self.im.magnitude())
    }
}

pub fn horner(c: &[Mpc], z: &Mpc, w: u32) -> (Mpc, Mpc) {
    let zero = Mpc { re: Dyadic::zero(), im: Dyadic::zero() };
    let mut v = zero.clone();
    let mut d = zero;
    for a in c.iter().rev() {
        d = d.mul(z, w).add(&v, w);
        v = v.mul(z, w).add(a, w);
    }
    (v, d)
}

impl Mpc {
    pub fn zero() -> Self {
        Mpc { re: Dyadic::zero(), im: Dyadic::zero() }
    }

    pub fn one() -> Self {
        Mpc { re: Dyadic::from_int(1), im: Dyadic::zero() }
    }

    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        Mpc { re, im }
    }

    pub fn from_rational(q: &BigRational, w: u32) -> Self {
        Mpc { re: Dyadic::from_rational(q, w).0, im: Dyadic::zero() }
    }

    pub fn conj(&self) -> Mpc {
        Mpc { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Mpc {
        Mpc { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn pow(&self, e: u32, w: u32) -> Mpc {
        let mut acc = Mpc::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b, w);
            }
            b = b.mul(&b, w);
            e >>= 1;
        }
        acc
    }

    /// A `q`-th root of `self` (principal branch from `f64`, then Newton).
    pub fn root(&self, q: u32, w: u32) -> Mpc {
        if self.is_zero() {
            return Mpc::zero();
        }
        // rescale to avoid f64 overflow in the starting guess
        let m = self.magnitude();
        let shift = m.div_euclid(q as i64) * q as i64;
        let scaled = Mpc { re: self.re.mul_2exp(-shift), im: self.im.mul_2exp(-shift) };
        let mut z = Mpc::from_c64(scaled.to_c64().powf(1.0 / q as f64));
        z = Mpc { re: z.re.mul_2exp(shift / q as i64), im: z.im.mul_2exp(shift / q as i64) };
        let qd = Mpc { re: Dyadic::from_int(q as i64), im: Dyadic::zero() };
        for _ in 0..(2 * (w as f64).log2() as usize + 10) {
            let zq1 = z.pow(q - 1, w);
            let f = zq1.mul(&z, w).sub(self, w);
            let Some(step) = f.div(&qd.mul(&zq1, w), w) else { break };
            z = z.sub(&step, w);
            if step.is_zero() || step.magnitude() < z.magnitude() - w as i64 + 4 {
                break;
            }
        }
        z
    }

    /// `exp(2πi k / q)` to `w` bits.
    pub fn root_of_unity(k: u32, q: u32, w: u32) -> Mpc {
        let t = 2.0 * std::f64::consts::PI * k as f64 / q as f64;
        let mut z = Mpc::from_c64(Complex64::new(t.cos(), t.sin()));
        let qd = Mpc { re: Dyadic::from_int(q as i64), im: Dyadic::zero() };
        for _ in 0..(2 * (w as f64).log2() as usize + 10) {
            let zq1 = z.pow(q - 1, w);
            let f = zq1.mul(&z, w).sub(&Mpc::one(), w);
            let Some(step) = f.div(&qd.mul(&zq1, w), w) else { break };
            z = z.sub(&step, w);
        }
        z
    }
}
