//! Subfields of a number field generated by a set of elements.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::{FieldElement, FieldMorphism, NumberField};
use crate::qmat::IncrementalSpan;

/// A subfield `Q(γ)` of a host field, stored as an abstract field together
/// with the inclusion into the host.
#[derive(Clone, Debug)]
pub struct Subfield {
    field: NumberField,
    inclusion: FieldMorphism,
    // host coordinates of γ^0 .. γ^(d-1)
    span: IncrementalSpan,
}

impl Subfield {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn host(&self) -> &NumberField {
        self.inclusion.target()
    }

    pub fn inclusion(&self) -> &FieldMorphism {
        &self.inclusion
    }

    /// The primitive element `γ` as an element of the host.
    pub fn generator_in_host(&self) -> &FieldElement {
        self.inclusion.image_of_generator()
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn to_host(&self, x: &FieldElement) -> Result<FieldElement> {
        self.inclusion.apply(x)
    }

    /// Rewrite a host element in the subfield, or `NotInSubfield`.
    pub fn from_host(&self, x: &FieldElement) -> Result<FieldElement> {
        if !x.field().same(self.host()) {
            return Err(AlgebraError::FieldMismatch);
        }
        let c = self.span.express(x.coeffs()).ok_or(AlgebraError::NotInSubfield)?;
        self.field.from_coeffs(c)
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.field().same(self.host()) && self.span.contains(x.coeffs())
    }

    /// Same subfield of the same host (mutual containment of generators).
    pub fn same_as(&self, o: &Subfield) -> bool {
        self.host().same(o.host()) && self.degree() == o.degree() && self.contains(o.generator_in_host()) && o.contains(self.generator_in_host())
    }
}

/// Dimension over Q of the algebra generated by `gens`, i.e. the degree of
/// the subfield they generate.
fn generated_dimension(host: &NumberField, gens: &[FieldElement]) -> usize {
    let mut span = IncrementalSpan::new(host.degree());
    let mut basis = vec![host.one()];
    span.insert(host.one().coeffs());
    let mut i = 0;
    while i < basis.len() {
        for g in gens {
            let p = &basis[i] * g;
            if let crate::qmat::Insertion::Independent = span.insert(p.coeffs()) {
                basis.push(p);
            }
        }
        i += 1;
    }
    span.rank()
}

fn from_primitive(host: &NumberField, gamma: FieldElement) -> Subfield {
    let mp = gamma.minimal_polynomial();
    let d = mp.degree();
    let field = NumberField::new_unchecked(&mp);
    let mut span = IncrementalSpan::new(host.degree());
    let mut pw = host.one();
    for _ in 0..d {
        span.insert(pw.coeffs());
        pw = &pw * &gamma;
    }
    let inclusion = FieldMorphism::new(&field, gamma).expect("γ is a root of its minimal polynomial");
    Subfield { field, inclusion, span }
}

/// The smallest subfield of `host` containing `gens`, and each generator
/// rewritten in it. The primitive element is tried as each single generator
/// first, then as small random integer combinations.
pub fn subfield_generated(host: &NumberField, gens: &[FieldElement]) -> Result<(Subfield, Vec<FieldElement>)> {
    if gens.iter().any(|g| !g.field().same(host)) {
        return Err(AlgebraError::FieldMismatch);
    }
    let nontrivial: Vec<FieldElement> = gens.iter().filter(|g| !g.is_rational()).cloned().collect();
    let target = generated_dimension(host, &nontrivial);
    let mut candidates: Vec<FieldElement> = Vec::new();
    if target == 1 {
        candidates.push(host.zero());
    } else {
        candidates.extend(nontrivial.iter().cloned());
        if nontrivial.len() > 1 {
            let sum = nontrivial.iter().skip(1).fold(nontrivial[0].clone(), |a, b| &a + b);
            candidates.push(sum);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut attempt = 0;
    let sub = loop {
        let gamma = if attempt < candidates.len() {
            candidates[attempt].clone()
        } else {
            let mut acc = host.zero();
            for g in &nontrivial {
                let c: i64 = rng.gen_range(-4..=4);
                if c != 0 {
                    acc = &acc + &g.scale(&BigRational::from_integer(c.into()));
                }
            }
            acc
        };
        attempt += 1;
        if gamma.minimal_polynomial().degree() == target {
            break from_primitive(host, gamma);
        }
        assert!(attempt < 10_000, "primitive element search did not terminate");
    };
    let rewritten = gens.iter().map(|g| sub.from_host(g)).collect::<Result<Vec<_>>>()?;
    Ok((sub, rewritten))
}

/// The subfield generated by a single element.
pub fn subfield_of(x: &FieldElement) -> Subfield {
    if x.is_rational() {
        return from_primitive(x.field(), x.field().zero());
    }
    from_primitive(x.field(), x.clone())
}

/// Rational numbers are always in any subfield.
pub fn rational_subfield(host: &NumberField) -> Subfield {
    from_primitive(host, host.zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;

    fn quartic() -> NumberField {
        NumberField::new(&RatPoly::from_ints(&[1, -1, -1, -1, 1])).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let k = quartic();
        let (s, g) = subfield_generated(&k, &[]).unwrap();
        assert_eq!(s.degree(), 1);
        assert!(g.is_empty());
        let (s, g) = subfield_generated(&k, &[k.from_int(7)]).unwrap();
        assert_eq!(s.degree(), 1);
        assert_eq!(s.to_host(&g[0]).unwrap(), k.from_int(7));
        let (s, _) = subfield_generated(&k, &[k.generator()]).unwrap();
        assert_eq!(s.degree(), 4);
    }

    #[test]
    fn quadratic_subfield() {
        let k = quartic();
        let a = k.generator();
        let x = &a + &a.inv().unwrap();
        let (s, g) = subfield_generated(&k, std::slice::from_ref(&x)).unwrap();
        assert_eq!(s.degree(), 2);
        assert_eq!(s.to_host(&g[0]).unwrap(), x);
        assert_eq!(s.from_host(&a), Err(AlgebraError::NotInSubfield));
        assert!(s.same_as(&subfield_of(&(&x * &x))) || subfield_of(&(&x * &x)).degree() == 1);
    }

    #[test]
    fn two_generators() {
        // Q(i, sqrt 2) inside Q(ξ8)
        let k = NumberField::cyclotomic(8);
        let z = k.generator();
        let i = z.pow(2).unwrap();
        let s2 = &z + &z.pow(7).unwrap();
        let (s, g) = subfield_generated(&k, &[i.clone(), s2.clone()]).unwrap();
        assert_eq!(s.degree(), 4);
        assert_eq!(s.to_host(&g[0]).unwrap(), i);
        assert_eq!(s.to_host(&g[1]).unwrap(), s2);
        let (t, _) = subfield_generated(&k, std::slice::from_ref(&s2)).unwrap();
        assert_eq!(t.degree(), 2);
        assert!(!t.same_as(&s));
    }
}
