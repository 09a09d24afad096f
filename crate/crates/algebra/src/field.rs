//! Algebraic number fields `Q(α) = Q[x]/(f)` and their elements.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::irreducible::check_irreducible;
use crate::poly::RatPoly;
use crate::qmat::{IncrementalSpan, Insertion, QMatrix};
use crate::roots::{isolate_roots, IsolatedRoot, REFERENCE_PRECISION};

struct FieldData {
    poly: RatPoly,
    var: String,
    // x^(n+k) mod poly for k = 0..n-1
    reduction: Vec<Vec<BigRational>>,
    roots: OnceLock<Vec<IsolatedRoot>>,
    trace_dual: OnceLock<Vec<Vec<BigRational>>>,
}

/// A number field given by a monic irreducible defining polynomial. Cloning
/// is cheap; two fields are equal when their defining polynomials agree.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// Checks irreducibility and normalizes `p` to be monic.
    pub fn new(p: &RatPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(AlgebraError::ZeroPoly);
        }
        if p.degree() == 0 {
            return Err(AlgebraError::ConstantPoly(p.clone()));
        }
        let m = p.monic();
        check_irreducible(&m)?;
        Ok(Self::new_unchecked(&m))
    }

    /// Skips the irreducibility test. The caller vouches for it.
    pub fn new_unchecked(p: &RatPoly) -> Self {
        Self::build(p.monic(), "a".to_string())
    }

    fn build(poly: RatPoly, var: String) -> Self {
        let n = poly.degree();
        assert!(n >= 1, "defining polynomial must be nonconstant");
        let mut reduction = Vec::with_capacity(n);
        // x^n = -sum c_i x^i
        let mut cur: Vec<BigRational> = poly.coeffs()[..n].iter().map(|c| -c).collect();
        for _ in 0..n {
            reduction.push(cur.clone());
            // multiply by x
            let top = cur[n - 1].clone();
            let mut next = vec![BigRational::zero(); n];
            next[1..n].clone_from_slice(&cur[..(n - 1)]);
            if !top.is_zero() {
                for (x, r) in next.iter_mut().zip(&reduction[0]) {
                    *x += &top * r;
                }
            }
            cur = next;
        }
        NumberField(Arc::new(FieldData { poly, var, reduction, roots: OnceLock::new(), trace_dual: OnceLock::new() }))
    }

    /// The same field with a different variable name for display.
    pub fn with_var(&self, var: &str) -> Self {
        Self::build(self.0.poly.clone(), var.to_string())
    }

    pub fn rationals() -> Self {
        Self::new_unchecked(&RatPoly::x())
    }

    /// `Q(ξ_n)` defined by the `n`-th cyclotomic polynomial.
    pub fn cyclotomic(n: usize) -> Self {
        Self::new_unchecked(&cyclotomic_polynomial(n)).with_var(&format!("z{n}"))
    }

    pub fn defining_poly(&self) -> &RatPoly {
        &self.0.poly
    }

    pub fn degree(&self) -> usize {
        self.0.poly.degree()
    }

    pub fn var(&self) -> &str {
        &self.0.var
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn same(&self, o: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.0.poly == o.0.poly
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coeffs: vec![BigRational::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    /// The class of `x`. In a degree-1 field this is the rational root.
    pub fn generator(&self) -> FieldElement {
        self.from_poly(&RatPoly::x())
    }

    pub fn from_poly(&self, p: &RatPoly) -> FieldElement {
        let r = if p.coeffs().len() > self.degree() { p.rem(&self.0.poly).expect("nonzero modulus") } else { p.clone() };
        self.reduce(r.coeffs().to_vec())
    }

    /// Element with the given coordinates in the power basis.
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> Result<FieldElement> {
        if coeffs.len() != self.degree() {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(FieldElement { field: self.clone(), coeffs })
    }

    // `v` has length at most `2n - 1`
    fn reduce(&self, mut v: Vec<BigRational>) -> FieldElement {
        let n = self.degree();
        if v.len() > n {
            for k in (0..v.len() - n).rev() {
                let c = std::mem::take(&mut v[n + k]);
                if !c.is_zero() {
                    for (x, r) in v.iter_mut().zip(&self.0.reduction[k]) {
                        *x += &c * r;
                    }
                }
            }
        }
        v.resize(n, BigRational::zero());
        FieldElement { field: self.clone(), coeffs: v }
    }

    /// Certified roots of the defining polynomial at the reference precision,
    /// in canonical order.
    pub fn reference_roots(&self) -> Result<&[IsolatedRoot]> {
        if let Some(r) = self.0.roots.get() {
            return Ok(r);
        }
        let r = isolate_roots(&self.0.poly, REFERENCE_PRECISION)?;
        Ok(self.0.roots.get_or_init(|| r))
    }

    /// Traces of `α^k` for `k < count`, via Newton's identities.
    pub fn power_traces(&self, count: usize) -> Vec<BigRational> {
        let n = self.degree();
        let c = self.0.poly.coeffs();
        let mut p = vec![BigRational::from_integer(n.into())];
        for k in 1..count {
            let mut s = BigRational::zero();
            for i in 1..=k.min(n) {
                if i == k {
                    s += BigRational::from_integer(k.into()) * &c[n - k];
                } else {
                    s += &c[n - i] * &p[k - i];
                }
            }
            p.push(-s);
        }
        p
    }

    /// Dual basis of the power basis under the trace form: element `j` has
    /// coordinates `β_j` with `Tr(α^i β_j) = δ_ij`.
    pub fn trace_dual_basis(&self) -> &[Vec<BigRational>] {
        self.0.trace_dual.get_or_init(|| {
            let n = self.degree();
            let t = self.power_traces(2 * n);
            let gram = QMatrix::from_rows((0..n).map(|i| (0..n).map(|j| t[i + j].clone()).collect()).collect());
            let inv = gram.inverse().expect("trace form of a separable extension is nondegenerate");
            (0..n).map(|j| (0..n).map(|i| inv.get(i, j).clone()).collect()).collect()
        })
    }
}

impl PartialEq for NumberField {
    fn eq(&self, o: &Self) -> bool {
        self.same(o)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.0.poly.display_with(&self.0.var))
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]/({})", self.0.var, self.0.poly.display_with(&self.0.var))
    }
}

/// `n`-th cyclotomic polynomial, by exact division of `x^n - 1`.
pub fn cyclotomic_polynomial(n: usize) -> RatPoly {
    assert!(n >= 1);
    let mut p = RatPoly::binomial(n, BigRational::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_rem(&cyclotomic_polynomial(d)).expect("nonzero").0;
        }
    }
    p
}

#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    fn check(&self, o: &FieldElement) -> Result<()> {
        if self.field.same(&o.field) {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_sub(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(FieldElement { field: self.field.clone(), coeffs })
    }

    pub fn checked_mul(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(self.field.from_rational(&self.coeffs[0] * &o.coeffs[0]));
        }
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(self.field.reduce(prod))
    }

    pub fn checked_div(&self, o: &FieldElement) -> Result<FieldElement> {
        self.check(o)?;
        self.checked_mul(&o.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(self.field.from_rational(q.recip()));
        }
        let (g, s, _) = self.to_poly().xgcd(self.field.defining_poly());
        debug_assert!(g.degree() == 0);
        Ok(self.field.from_poly(&s.scale(&g.coeff(0).recip())))
    }

    pub fn scale(&self, q: &BigRational) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Integer powers; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `self` on the power basis (column `j` is
    /// `self * α^j`).
    pub fn mul_matrix(&self) -> QMatrix {
        let n = self.coeffs.len();
        let mut m = QMatrix::zeros(n, n);
        let mut col = self.clone();
        let a = self.field.generator();
        for j in 0..n {
            for i in 0..n {
                m.set(i, j, col.coeffs[i].clone());
            }
            col = &col * &a;
        }
        m
    }

    /// Exact trace to Q.
    pub fn trace(&self) -> BigRational {
        let t = self.field.power_traces(self.coeffs.len());
        self.coeffs.iter().zip(&t).map(|(c, t)| c * t).sum()
    }

    pub fn norm(&self) -> BigRational {
        self.mul_matrix().determinant()
    }

    /// Monic polynomial of least degree with `self` as a root.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let n = self.coeffs.len();
        let mut span = IncrementalSpan::new(n);
        let mut pw = self.field.one();
        loop {
            match span.insert(&pw.coeffs) {
                Insertion::Independent => pw = &pw * self,
                Insertion::Dependent(c) => {
                    let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
                    coeffs.push(BigRational::one());
                    return RatPoly::new(coeffs);
                }
            }
        }
    }

    pub fn display(&self) -> String {
        self.to_poly().display_with(self.field.var())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.field.same(&o.field) && self.coeffs == o.coeffs
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$checked(o).expect(concat!("field ", stringify!($m)))
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Field homomorphism `K -> L` determined by the image of the generator of `K`.
#[derive(Clone, Debug)]
pub struct FieldMorphism {
    source: NumberField,
    image_of_generator: FieldElement,
}

impl FieldMorphism {
    /// Fails with `FieldMismatch` unless the image is a root of the source's
    /// defining polynomial.
    pub fn new(source: &NumberField, image_of_generator: FieldElement) -> Result<Self> {
        let m = FieldMorphism { source: source.clone(), image_of_generator };
        let check = m.eval_poly(source.defining_poly());
        if !check.is_zero() {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(m)
    }

    pub fn source(&self) -> &NumberField {
        &self.source
    }

    pub fn target(&self) -> &NumberField {
        self.image_of_generator.field()
    }

    pub fn image_of_generator(&self) -> &FieldElement {
        &self.image_of_generator
    }

    fn eval_poly(&self, p: &RatPoly) -> FieldElement {
        let t = self.target();
        let mut acc = t.zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * &self.image_of_generator) + &t.from_rational(c.clone());
        }
        acc
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        if !x.field().same(&self.source) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(self.eval_poly(&x.to_poly()))
    }
}
