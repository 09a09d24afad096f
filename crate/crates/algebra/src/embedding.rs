//! Complex embeddings of number fields and certified evaluation of elements.

use num_complex::Complex64;

use crate::ball::{ComplexBall, RealBall};
use crate::error::{AlgebraError, Result};
use crate::field::{FieldElement, NumberField};
use crate::roots::{refine, IsolatedRoot, REFERENCE_PRECISION};

/// The embedding `α ↦ r` where `r` is the root with index `root_index` in the
/// canonical root order of the defining polynomial.
#[derive(Clone, Debug)]
pub struct ComplexEmbedding {
    field: NumberField,
    root_index: usize,
    precision_bits: u32,
    root: IsolatedRoot,
}

impl ComplexEmbedding {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn root_value(&self) -> ComplexBall {
        self.root.ball()
    }

    pub fn root(&self) -> &IsolatedRoot {
        &self.root
    }

    pub fn is_real(&self) -> bool {
        self.root.real
    }

    pub fn with_precision(&self, bits: u32) -> Result<ComplexEmbedding> {
        embedding(&self.field, self.root_index, bits)
    }

    /// Certified enclosure of the image of `a`.
    pub fn evaluate(&self, a: &FieldElement) -> Result<ComplexBall> {
        fe_evaluate(a, self)
    }
}

fn roots_at(field: &NumberField, bits: u32) -> Result<Vec<IsolatedRoot>> {
    if bits < 16 {
        return Err(AlgebraError::PrecisionTooLow { bits });
    }
    let reference = field.reference_roots()?;
    if bits <= REFERENCE_PRECISION || field.degree() == 1 {
        if field.degree() == 1 {
            return crate::roots::isolate_roots(field.defining_poly(), bits);
        }
        return Ok(reference.to_vec());
    }
    refine(field.defining_poly(), reference, bits)
}

/// All `degree` embeddings in canonical order.
pub fn nf_embeddings(field: &NumberField, precision_bits: u32) -> Result<Vec<ComplexEmbedding>> {
    let roots = roots_at(field, precision_bits)?;
    Ok(roots.into_iter().enumerate().map(|(i, root)| ComplexEmbedding { field: field.clone(), root_index: i, precision_bits, root }).collect())
}

pub fn embedding(field: &NumberField, root_index: usize, precision_bits: u32) -> Result<ComplexEmbedding> {
    let mut all = nf_embeddings(field, precision_bits)?;
    if root_index >= all.len() {
        return Err(AlgebraError::Parse(format!("root index {root_index} out of range for a degree-{} field", field.degree())));
    }
    Ok(all.swap_remove(root_index))
}

/// The embedding whose root is closest to `target`.
pub fn nearest_embedding(field: &NumberField, target: Complex64, precision_bits: u32) -> Result<ComplexEmbedding> {
    let all = nf_embeddings(field, precision_bits)?;
    let best = all
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let da = (Complex64::new(a.root.to_f64().0, a.root.to_f64().1) - target).norm();
            let db = (Complex64::new(b.root.to_f64().0, b.root.to_f64().1) - target).norm();
            da.total_cmp(&db)
        })
        .map(|(i, _)| i)
        .expect("fields have at least one embedding");
    Ok(all[best].clone())
}

/// Horner evaluation in ball arithmetic; the result contains the exact image.
pub fn fe_evaluate(a: &FieldElement, e: &ComplexEmbedding) -> Result<ComplexBall> {
    if !a.field().same(&e.field) {
        return Err(AlgebraError::FieldMismatch);
    }
    let prec = e.precision_bits + 16;
    let r = e.root_value();
    let mut acc = ComplexBall::zero();
    for c in a.coeffs().iter().rev() {
        acc = acc.mul(&r, prec).add(&ComplexBall::from_rational(c, prec), prec);
    }
    if e.is_real() {
        acc.im = RealBall::zero();
    }
    Ok(acc)
}
