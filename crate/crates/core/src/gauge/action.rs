use std::collections::BTreeMap;

use fsys_algebra::{BigRational, FieldElement, NumberField};
use rand::Rng;

use crate::error::{FusionError, Result};
use crate::ring::FusionRing;
use crate::system::FusionSystem;

/// Values `g_{a,b}^c` on every fusion vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeAssignment {
    pub values: BTreeMap<[usize; 3], FieldElement>,
}

fn vname(v: &[usize; 3]) -> String {
    format!("{},{},{}", v[0] + 1, v[1] + 1, v[2] + 1)
}

impl GaugeAssignment {
    pub fn identity(ring: &FusionRing, field: &NumberField) -> Self {
        GaugeAssignment { values: ring.vertices().into_iter().map(|v| (v, field.one())).collect() }
    }

    pub fn get(&self, v: &[usize; 3]) -> Result<&FieldElement> {
        self.values.get(v).ok_or_else(|| FusionError::IncompleteAssignment(vname(v)))
    }

    /// Pointwise inverse.
    pub fn inverse(&self) -> Result<Self> {
        let values = self.values.iter().map(|(k, v)| v.inv().map(|x| (*k, x)).map_err(|_| FusionError::ZeroGaugeValue(vname(k)))).collect::<Result<_>>()?;
        Ok(GaugeAssignment { values })
    }

    fn check(&self, ring: &FusionRing, field: &NumberField) -> Result<()> {
        for v in ring.vertices() {
            let x = self.get(&v)?;
            if !x.field().same(field) {
                return Err(FusionError::DegreeMismatch);
            }
            if x.is_zero() {
                return Err(FusionError::ZeroGaugeValue(vname(&v)));
            }
        }
        Ok(())
    }
}

/// A random gauge with small integer coefficients in the field basis.
pub fn random_gauge<R: Rng>(ring: &FusionRing, field: &NumberField, rng: &mut R) -> GaugeAssignment {
    let values = ring
        .vertices()
        .into_iter()
        .map(|v| {
            let x = loop {
                let coeffs = (0..field.degree()).map(|_| BigRational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
                let x = field.from_coeffs(coeffs).expect("length matches degree");
                if !x.is_zero() {
                    break x;
                }
            };
            (v, x)
        })
        .collect();
    GaugeAssignment { values }
}

/// The gauge-transformed system.
pub fn apply_gauge(sys: &FusionSystem, g: &GaugeAssignment) -> Result<FusionSystem> {
    let ring = sys.ring();
    g.check(ring, sys.field())?;
    let gv = |a: usize, b: usize, c: usize| g.get(&[a, b, c]).cloned();
    let mut f = BTreeMap::new();
    for (&[i, j, k, l, m, n], v) in sys.f_symbols() {
        let num = &gv(i, j, m)? * &gv(m, k, l)?;
        let den = &gv(i, n, l)? * &gv(j, k, n)?;
        f.insert([i, j, k, l, m, n], &(v * &num) * &den.inv()?);
    }
    let p = (0..sys.rank())
        .map(|a| {
            let ad = ring.dual(a);
            let num = &gv(ad, a, 0)? * &gv(0, ad, ad)?;
            let den = &gv(ad, 0, ad)? * &gv(a, ad, 0)?;
            Ok(&(sys.p(a) * &num) * &den.inv()?)
        })
        .collect::<Result<Vec<_>>>()?;
    let r = match sys.r_symbols() {
        Some(r) => Some(r.iter().map(|(&[i, j, k], v)| Ok(([i, j, k], &(v * &gv(i, j, k)?) * &gv(j, i, k)?.inv()?))).collect::<Result<BTreeMap<_, _>>>()?),
        None => None,
    };
    FusionSystem::new(ring.clone(), sys.field().clone(), f, p, r)
}
