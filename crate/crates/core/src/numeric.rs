//! Symbols evaluated under a complex embedding of their field.

use std::collections::BTreeMap;

use fsys_algebra::{AlgebraError, ComplexBall, ComplexEmbedding, FieldElement};

use crate::error::Result;
use crate::system::{FKey, FusionSystem, RKey};

#[derive(Clone, Debug)]
pub struct NumericSymbols {
    pub f: BTreeMap<FKey, ComplexBall>,
    pub p: Vec<ComplexBall>,
    pub r: Option<BTreeMap<RKey, ComplexBall>>,
}

impl NumericSymbols {
    /// Largest radius over all balls, as `f64`.
    pub fn max_radius(&self) -> f64 {
        let all = self.f.values().chain(self.p.iter()).chain(self.r.iter().flat_map(|r| r.values()));
        all.map(|b| b.rad_f64()).fold(0.0, f64::max)
    }
}

pub fn evaluate(x: &FieldElement, e: &ComplexEmbedding) -> Result<ComplexBall> {
    if !x.field().same(e.field()) {
        return Err(AlgebraError::FieldMismatch.into());
    }
    Ok(e.evaluate(x)?)
}

pub fn numeric_symbols(sys: &FusionSystem, e: &ComplexEmbedding, precision_bits: u32) -> Result<NumericSymbols> {
    if !sys.field().same(e.field()) {
        return Err(AlgebraError::FieldMismatch.into());
    }
    let e = if e.precision_bits() == precision_bits { e.clone() } else { e.with_precision(precision_bits)? };
    let f = sys.f_symbols().iter().map(|(k, v)| Ok((*k, e.evaluate(v)?))).collect::<Result<_>>()?;
    let p = sys.p_symbols().iter().map(|v| Ok(e.evaluate(v)?)).collect::<Result<_>>()?;
    let r = match sys.r_symbols() {
        Some(r) => Some(r.iter().map(|(k, v)| Ok((*k, e.evaluate(v)?))).collect::<Result<_>>()?),
        None => None,
    };
    Ok(NumericSymbols { f, p, r })
}
