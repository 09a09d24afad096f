//! Roots of polynomials inside a number field, field isomorphism, and
//! adjoining radicals.
//!
//! An element `x` of `K` is determined by its images `σ_k(x)` under all complex
//! embeddings: its power-basis coordinates are `c_i = Σ_k σ_k(β_i) σ_k(x)`
//! where `β` is the trace-dual basis. Candidates for `σ_k(x)` are enumerated
//! (conjugate embeddings are tied together), rounded to the simplest nearby
//! rationals and then checked exactly, so every returned root is exact.

use num_rational::BigRational;

use crate::dyadic::Dyadic;
use crate::embedding::nf_embeddings;
use crate::error::{AlgebraError, Result};
use crate::field::{FieldElement, FieldMorphism, NumberField};
use crate::mpc::{horner, Mpc};
use crate::poly::RatPoly;
use crate::qmat::{IncrementalSpan, Insertion};
use crate::rational::simplest_rational_in;
use crate::roots::isolate_roots;

const COMBINATION_LIMIT: u128 = 1 << 20;
const PRECISIONS: [u32; 2] = [256, 1024];

enum Slot {
    Real,
    Upper,
    Lower,
}

struct Frame {
    w: u32,
    slots: Vec<Slot>,
    // σ_k(β_i) for each embedding k and dual basis index i
    dual_images: Vec<Vec<Mpc>>,
    roots: Vec<Mpc>,
}

fn frame(k: &NumberField, w: u32) -> Result<Frame> {
    let embs = nf_embeddings(k, w)?;
    let dual = k.trace_dual_basis();
    let mut slots = Vec::with_capacity(embs.len());
    let mut roots = Vec::with_capacity(embs.len());
    for e in &embs {
        let r = e.root();
        slots.push(if r.real {
            Slot::Real
        } else if r.im.is_positive() {
            Slot::Upper
        } else {
            Slot::Lower
        });
        roots.push(Mpc::new(r.re.clone(), r.im.clone()));
    }
    let dual_images = roots
        .iter()
        .map(|z| {
            dual.iter()
                .map(|b| {
                    let c: Vec<Mpc> = b.iter().map(|q| Mpc::from_rational(q, w)).collect();
                    horner(&c, z, w).0
                })
                .collect()
        })
        .collect();
    Ok(Frame { w, slots, dual_images, roots })
}

impl Frame {
    fn image(&self, x: &FieldElement, k: usize) -> Mpc {
        let c: Vec<Mpc> = x.coeffs().iter().map(|q| Mpc::from_rational(q, self.w)).collect();
        horner(&c, &self.roots[k], self.w).0
    }

    /// Enumerate assignments of candidate images to embeddings and return every
    /// field element that passes `accept`. `cands[k]` is only read for real and
    /// upper embeddings.
    fn search(&self, field: &NumberField, cands: &[Vec<Mpc>], accept: &dyn Fn(&FieldElement) -> bool) -> Result<Vec<FieldElement>> {
        let n = self.slots.len();
        let w = self.w;
        let tiny = -(w as i64) / 2;
        // contributions[rep][choice][i]
        let mut reps = Vec::new();
        let mut contributions: Vec<Vec<Vec<Dyadic>>> = Vec::new();
        for k in 0..n {
            let per_choice: Vec<Vec<Dyadic>> = match self.slots[k] {
                Slot::Lower => continue,
                Slot::Real => cands[k]
                    .iter()
                    .filter(|c| c.im.magnitude() < tiny + c.re.magnitude().max(0))
                    .map(|c| self.dual_images[k].iter().map(|b| b.re.mul(&c.re).rounded(w)).collect())
                    .collect(),
                Slot::Upper => cands[k].iter().map(|c| self.dual_images[k].iter().map(|b| b.mul(c, w).re.mul_2exp(1)).collect()).collect(),
            };
            reps.push(k);
            contributions.push(per_choice);
        }
        let total: u128 = contributions.iter().map(|c| c.len() as u128).product();
        if total > COMBINATION_LIMIT {
            return Err(AlgebraError::SearchLimit { combinations: total });
        }
        let mut found: Vec<FieldElement> = Vec::new();
        if total == 0 {
            return Ok(found);
        }
        let mut idx = vec![0usize; reps.len()];
        let eps = Dyadic::pow2(-(w as i64) / 2);
        loop {
            let mut coords = Vec::with_capacity(n);
            for i in 0..n {
                let mut s = Dyadic::zero();
                for (r, &c) in idx.iter().enumerate() {
                    s = s.add(&contributions[r][c][i]);
                }
                let tol = eps.mul(&s.abs().max(Dyadic::from_int(1)));
                let lo = s.sub(&tol).to_rational();
                let hi = s.add(&tol).to_rational();
                coords.push(simplest_rational_in(&lo, &hi));
            }
            let x = field.from_coeffs(coords)?;
            if accept(&x) && !found.contains(&x) {
                found.push(x);
            }
            // advance the mixed-radix counter
            let mut r = 0;
            loop {
                if r == idx.len() {
                    return Ok(found);
                }
                idx[r] += 1;
                if idx[r] < contributions[r].len() {
                    break;
                }
                idx[r] = 0;
                r += 1;
            }
        }
    }
}

/// All `x` in the field with `x^q = v`.
pub fn nth_roots(v: &FieldElement, q: u32) -> Result<Vec<FieldElement>> {
    assert!(q >= 1);
    if q == 1 {
        return Ok(vec![v.clone()]);
    }
    let k = v.field();
    if v.is_zero() {
        return Ok(vec![k.zero()]);
    }
    let accept = |x: &FieldElement| x.pow(q as i64).is_ok_and(|y| y == *v);
    let mut found = Vec::new();
    for w in PRECISIONS {
        let fr = frame(k, w)?;
        let cands: Vec<Vec<Mpc>> = (0..k.degree())
            .map(|e| {
                let principal = fr.image(v, e).root(q, w);
                (0..q).map(|j| principal.mul(&Mpc::root_of_unity(j, q, w), w)).collect()
            })
            .collect();
        found = fr.search(k, &cands, &accept)?;
        if !found.is_empty() {
            break;
        }
    }
    Ok(found)
}

/// A `q`-th root of `v` in its field, or `NoRoot`.
pub fn nth_root(v: &FieldElement, q: u32) -> Result<FieldElement> {
    if let Some(r) = v.to_rational().and_then(|r| rational_nth_root(&r, q)) {
        return Ok(v.field().from_rational(r));
    }
    nth_roots(v, q)?.into_iter().next().ok_or(AlgebraError::NoRoot { q })
}

fn rational_nth_root(r: &BigRational, q: u32) -> Option<BigRational> {
    use num_traits::Signed;
    if r.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let n = r.numer().nth_root(q);
    let d = r.denom().nth_root(q);
    let c = BigRational::new(n, d);
    let c = if r.is_negative() { -c.abs() } else { c };
    (num_traits::pow(c.clone(), q as usize) == *r).then_some(c)
}

/// All roots in `k` of a rational polynomial.
pub fn roots_in_field(p: &RatPoly, k: &NumberField) -> Result<Vec<FieldElement>> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPoly);
    }
    let sq = crate::roots::squarefree_part(p);
    if sq.degree() == 0 {
        return Ok(Vec::new());
    }
    let accept = |x: &FieldElement| eval_at(&sq, x).is_zero();
    let mut found = Vec::new();
    for w in PRECISIONS {
        let fr = frame(k, w)?;
        let prs: Vec<Mpc> = isolate_roots(&sq, w)?.into_iter().map(|r| Mpc::new(r.re, r.im)).collect();
        let cands: Vec<Vec<Mpc>> = (0..k.degree()).map(|_| prs.clone()).collect();
        found = fr.search(k, &cands, &accept)?;
        if found.len() == sq.degree() {
            break;
        }
    }
    Ok(found)
}

fn eval_at(p: &RatPoly, x: &FieldElement) -> FieldElement {
    let k = x.field();
    let mut acc = k.zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * x) + &k.from_rational(c.clone());
    }
    acc
}

/// Whether two number fields are isomorphic: equal degree and the defining
/// polynomial of one has a root in the other.
pub fn is_isomorphic(a: &NumberField, b: &NumberField) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    if a.defining_poly() == b.defining_poly() {
        return Ok(true);
    }
    Ok(!roots_in_field(b.defining_poly(), a)?.is_empty())
}

/// An explicit isomorphism `a -> b` if one exists.
pub fn isomorphism(a: &NumberField, b: &NumberField) -> Result<Option<FieldMorphism>> {
    if a.degree() != b.degree() {
        return Ok(None);
    }
    match roots_in_field(a.defining_poly(), b)?.into_iter().next() {
        Some(r) => Ok(Some(FieldMorphism::new(a, r)?)),
        None => Ok(None),
    }
}

/// `K(r)` with `r^q = v`, presented as an absolute field.
#[derive(Clone, Debug)]
pub struct RadicalExtension {
    pub field: NumberField,
    pub embedding: FieldMorphism,
    pub root: FieldElement,
}

/// Adjoin a `q`-th root of `v`. Composite `q` is handled one prime at a time;
/// a step is skipped when the root already exists.
pub fn extend_by_radical(v: &FieldElement, q: u32) -> Result<RadicalExtension> {
    if v.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    let k = v.field().clone();
    let mut ext = RadicalExtension { field: k.clone(), embedding: FieldMorphism::new(&k, k.generator())?, root: v.clone() };
    // invariant: ext.root^(remaining) = image of v
    let mut remaining = q;
    let mut p = 2;
    while remaining > 1 {
        while !remaining.is_multiple_of(p) {
            p += 1;
        }
        let step = prime_radical(&ext.root, p)?;
        let compose = |x: &FieldElement| step.embedding.apply(x);
        ext = RadicalExtension { field: step.field.clone(), embedding: FieldMorphism::new(&k, compose(ext.embedding.image_of_generator())?)?, root: step.root };
        remaining /= p;
    }
    Ok(ext)
}

fn prime_radical(v: &FieldElement, q: u32) -> Result<RadicalExtension> {
    let k = v.field().clone();
    if let Ok(r) = nth_root(v, q) {
        return Ok(RadicalExtension { field: k.clone(), embedding: FieldMorphism::new(&k, k.generator())?, root: r });
    }
    // x^q - v is irreducible over K because q is prime and v is not a q-th power.
    let n = k.degree();
    let dim = n * q as usize;
    let q = q as usize;
    let tower_mul = |a: &[FieldElement], b: &[FieldElement]| -> Vec<FieldElement> {
        let mut out = vec![k.zero(); q];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                if i + j >= q {
                    out[i + j - q] = &out[i + j - q] + &(&t * v);
                } else {
                    out[i + j] = &out[i + j] + &t;
                }
            }
        }
        out
    };
    let flat = |a: &[FieldElement]| -> Vec<BigRational> { a.iter().flat_map(|x| x.coeffs().to_vec()).collect() };
    let theta = {
        let mut t = vec![k.zero(); q];
        t[0] = k.generator();
        t
    };
    let r = {
        let mut t = vec![k.zero(); q];
        t[1] = k.one();
        t
    };
    for c in [0i64, 1, -1, 2, -2, 3, -3, 5, 7, 11] {
        let eta: Vec<FieldElement> = r.iter().zip(&theta).map(|(a, b)| a + &b.scale(&BigRational::from_integer(c.into()))).collect();
        let mut span = IncrementalSpan::new(dim);
        let mut pw = {
            let mut t = vec![k.zero(); q];
            t[0] = k.one();
            t
        };
        let mut minpoly = None;
        for _ in 0..=dim {
            match span.insert(&flat(&pw)) {
                Insertion::Independent => pw = tower_mul(&pw, &eta),
                Insertion::Dependent(coef) => {
                    if coef.len() == dim {
                        let mut cs: Vec<BigRational> = coef.into_iter().map(|x| -x).collect();
                        cs.push(BigRational::from_integer(1.into()));
                        minpoly = Some(RatPoly::new(cs));
                    }
                    break;
                }
            }
        }
        let Some(mp) = minpoly else { continue };
        let l = NumberField::new_unchecked(&mp);
        let coords = |t: &[FieldElement]| {
            let mut c = span.express(&flat(t)).expect("η generates the tower");
            c.truncate(dim);
            l.from_coeffs(c)
        };
        let theta_l = coords(&theta)?;
        let r_l = coords(&r)?;
        let embedding = FieldMorphism::new(&k, theta_l)?;
        debug_assert!(r_l.pow(q as i64)? == embedding.apply(v)?);
        return Ok(RadicalExtension { field: l, embedding, root: r_l });
    }
    unreachable!("a primitive element r + cθ exists for all but finitely many c")
}
