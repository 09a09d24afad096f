//! Binary floating point numbers `m * 2^e` with arbitrary-precision mantissa.
//! Arithmetic is exact except where a precision is passed explicitly; the
//! rounding helpers return a bound on the error they introduce.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

fn bits(x: &BigInt) -> i64 {
    x.bits() as i64
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn new(man: BigInt, exp: i64) -> Self {
        Dyadic { man, exp }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { man: BigInt::from(n), exp: 0 }
    }

    pub fn pow2(e: i64) -> Self {
        Dyadic { man: BigInt::one(), exp: e }
    }

    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite f64");
        if x == 0.0 {
            return Self::zero();
        }
        let b = x.to_bits();
        let sign = if b >> 63 == 1 { -1 } else { 1 };
        let e = ((b >> 52) & 0x7ff) as i64;
        let frac = b & ((1u64 << 52) - 1);
        let (m, ex) = if e == 0 { (frac, -1074) } else { (frac | (1u64 << 52), e - 1075) };
        Dyadic { man: BigInt::from(m) * sign, exp: ex }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    /// Exponent of the most significant bit plus one (0 for zero).
    pub fn magnitude(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 4
        } else {
            bits(&self.man) + self.exp
        }
    }

    pub fn mul_2exp(&self, k: i64) -> Self {
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        match self.exp.cmp(&o.exp) {
            Ordering::Equal => Dyadic { man: &self.man + &o.man, exp: self.exp },
            Ordering::Greater => Dyadic { man: (&self.man << (self.exp - o.exp) as usize) + &o.man, exp: o.exp },
            Ordering::Less => Dyadic { man: &self.man + (&o.man << (o.exp - self.exp) as usize), exp: self.exp },
        }
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn mul(&self, o: &Dyadic) -> Dyadic {
        Dyadic { man: &self.man * &o.man, exp: self.exp + o.exp }
    }

    /// Truncate to `prec` significant bits. Returns the rounded value and an
    /// upper bound for the absolute error.
    pub fn round(&self, prec: u32) -> (Dyadic, Dyadic) {
        let b = bits(&self.man);
        if b <= prec as i64 {
            return (self.clone(), Dyadic::zero());
        }
        let shift = b - prec as i64;
        let mag = self.man.magnitude() >> shift as usize;
        let man = BigInt::from_biguint(self.man.sign(), mag);
        (Dyadic { man, exp: self.exp + shift }, Dyadic::pow2(self.exp + shift))
    }

    pub fn rounded(&self, prec: u32) -> Dyadic {
        self.round(prec).0
    }

    /// Round the magnitude up to `prec` bits (used for radii; result >= |self|).
    pub fn round_up(&self, prec: u32) -> Dyadic {
        let a = self.abs();
        let b = bits(&a.man);
        if b <= prec as i64 {
            return a;
        }
        let shift = b - prec as i64;
        let man = (&a.man >> shift as usize) + 1;
        Dyadic { man, exp: a.exp + shift }
    }

    /// Approximation of `q` with about `prec` significant bits and its error bound.
    pub fn from_rational(q: &BigRational, prec: u32) -> (Dyadic, Dyadic) {
        if q.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        if q.denom().is_one() {
            let d = Dyadic { man: q.numer().clone(), exp: 0 };
            return d.round(prec);
        }
        let k = prec as i64 + bits(q.denom()) - bits(q.numer()) + 1;
        let (num, den) = if k >= 0 { (q.numer() << k as usize, q.denom().clone()) } else { (q.numer().clone(), q.denom() << (-k) as usize) };
        let man = num / den; // truncates toward zero
        (Dyadic { man, exp: -k }, Dyadic::pow2(-k))
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as usize)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = bits(&self.man);
        let (m, e) = if b > 62 {
            let s = b - 62;
            ((&self.man >> s as usize).to_i64().unwrap(), self.exp + s)
        } else {
            (self.man.to_i64().unwrap(), self.exp)
        };
        let mut x = m as f64;
        let mut e = e.clamp(-2200, 2200);
        while e != 0 {
            let step = e.clamp(-500, 500);
            x *= 2f64.powi(step as i32);
            e -= step;
        }
        x
    }

    /// `self / o` truncated to about `prec` bits, with error bound.
    pub fn div(&self, o: &Dyadic, prec: u32) -> (Dyadic, Dyadic) {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        let k = prec as i64 + bits(&o.man) - bits(&self.man) + 2;
        let (num, den) = if k >= 0 { (&self.man << k as usize, o.man.clone()) } else { (self.man.clone(), &o.man << (-k) as usize) };
        let man = num / den;
        let exp = self.exp - o.exp - k;
        (Dyadic { man, exp }, Dyadic::pow2(exp))
    }

    /// Upper bound for `|self| / |o|`.
    pub fn div_up(&self, o: &Dyadic, prec: u32) -> Dyadic {
        let (q, e) = self.abs().div(&o.abs(), prec);
        q.add(&e)
    }

    fn sqrt_parts(&self, prec: u32) -> (BigInt, i64, bool) {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        let mut man = self.man.clone();
        let mut exp = self.exp;
        let want = 2 * prec as i64 + 4;
        let b = bits(&man);
        if b < want {
            let s = want - b;
            man <<= s as usize;
            exp -= s;
        }
        if exp % 2 != 0 {
            man <<= 1;
            exp -= 1;
        }
        let r = man.sqrt();
        let exact = &r * &r == man;
        (r, exp / 2, exact)
    }

    pub fn sqrt_down(&self, prec: u32) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (r, e, _) = self.sqrt_parts(prec);
        Dyadic { man: r, exp: e }
    }

    pub fn sqrt_up(&self, prec: u32) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (r, e, exact) = self.sqrt_parts(prec);
        let man = if exact { r } else { r + 1 };
        Dyadic { man, exp: e }
    }

    pub fn sign(&self) -> Sign {
        self.man.sign()
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let d = self.sub(o);
        match d.man.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
