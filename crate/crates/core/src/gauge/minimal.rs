use std::collections::BTreeMap;

use fsys_algebra::{subfield_generated, FieldElement, NumberField, Subfield};

use super::gsb::{compute_gsb, to_i64, GaugeSplitBasis};
use super::symbols::{evaluate_word, Symbol};
use crate::error::Result;
use crate::system::FusionSystem;

#[derive(Clone, Debug)]
pub struct MinimalFieldResult {
    pub field: NumberField,
    pub generator_in_host: FieldElement,
    /// `Φ(ι)` for each invariant word, rewritten in `field`.
    pub invariant_values: Vec<FieldElement>,
    pub subfield: Subfield,
}

/// The field generated by the values of the invariant words.
pub fn minimal_field(sys: &FusionSystem) -> Result<MinimalFieldResult> {
    minimal_field_with(sys, &compute_gsb(sys)?)
}

pub fn minimal_field_with(sys: &FusionSystem, gsb: &GaugeSplitBasis) -> Result<MinimalFieldResult> {
    let values = gsb.i.iter().map(|w| evaluate_word(sys, &gsb.index, w)).collect::<Result<Vec<_>>>()?;
    let (subfield, invariant_values) = subfield_generated(sys.field(), &values)?;
    Ok(MinimalFieldResult { field: subfield.field().clone(), generator_in_host: subfield.generator_in_host().clone(), invariant_values, subfield })
}

/// The system in the gauge where every `D`-word equals 1, written over the
/// minimal field. Braiding data is not carried over.
pub fn regauge_minimal(sys: &FusionSystem) -> Result<FusionSystem> {
    let gsb = compute_gsb(sys)?;
    let min = minimal_field_with(sys, &gsb)?;
    regauge_with(sys, &gsb, &min)
}

/// Symbol `k` (a nonzero one) is `Π_t B_t^{V[t][k]}` over the basis
/// `B = D ⊕ I`; with `D ≡ 1` only the invariant factors remain.
pub fn regauge_with(sys: &FusionSystem, gsb: &GaugeSplitBasis, min: &MinimalFieldResult) -> Result<FusionSystem> {
    let field = &min.field;
    let n = gsb.exponents.columns.len();
    let mut values: Vec<FieldElement> = vec![field.zero(); gsb.index.len()];
    for (k, &pos) in gsb.exponents.columns.iter().enumerate() {
        let mut acc = field.one();
        for t in gsb.rank..n {
            let e = to_i64(gsb.smith.v.get(t, k))?;
            if e != 0 {
                acc = &acc * &min.invariant_values[t - gsb.rank].pow(e)?;
            }
        }
        values[pos] = acc;
    }
    let mut f = BTreeMap::new();
    let mut p = vec![field.one(); sys.rank()];
    for (s, v) in gsb.index.symbols.iter().zip(values) {
        match s {
            Symbol::F(k) => {
                f.insert(*k, v);
            }
            Symbol::P(a) => p[*a] = v,
        }
    }
    FusionSystem::new(sys.ring().clone(), field.clone(), f, p, None)
}
