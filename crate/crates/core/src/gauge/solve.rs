use fsys_algebra::{extend_by_radical, nth_root, AlgebraError, FieldElement, FieldMorphism, NumberField};
use num_traits::{One, ToPrimitive};

use super::action::{apply_gauge, GaugeAssignment};
use super::gsb::{to_i64, GaugeSplitBasis};
use super::symbols::evaluate_word;
use crate::error::{FusionError, Result};
use crate::system::FusionSystem;

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Adjoin missing radicals instead of failing with `RootNotInField`.
    pub extend_field: bool,
}

#[derive(Clone, Debug)]
pub struct GaugeSolution {
    pub gauge: GaugeAssignment,
    /// Field of the gauge values; larger than the system's field only when
    /// radicals were adjoined.
    pub field: NumberField,
    pub inclusion: Option<FieldMorphism>,
}

impl GaugeSolution {
    /// The system carried into the solution field, ready for `apply_gauge`.
    pub fn lift(&self, sys: &FusionSystem) -> Result<FusionSystem> {
        match &self.inclusion {
            None => Ok(sys.clone()),
            Some(h) => sys.map_values(&self.field, |x| Ok(h.apply(x)?)),
        }
    }
}

/// A gauge under which the `D`-words take the values `targets`.
///
/// With `z = Uᵀ ↑ g`, the factor picked up by `D_t` is `z_t^{s_t}`; so
/// `z_t` is an `s_t`-th root of `targets_t / Φ(D_t)` and `g = (U⁻¹)ᵀ ↑ z`.
pub fn solve_gauge_for_targets(sys: &FusionSystem, gsb: &GaugeSplitBasis, targets: &[FieldElement], opts: SolveOptions) -> Result<GaugeSolution> {
    if targets.len() != gsb.d.len() {
        return Err(FusionError::TargetCount { expected: gsb.d.len(), got: targets.len() });
    }
    if let Some(t) = targets.iter().position(|x| x.is_zero()) {
        return Err(FusionError::ZeroTarget(t + 1));
    }
    let mut field = sys.field().clone();
    let mut inclusion: Option<FieldMorphism> = None;
    let mut ratios = Vec::with_capacity(targets.len());
    for (t, w) in targets.iter().zip(&gsb.d) {
        ratios.push(t.checked_div(&evaluate_word(sys, &gsb.index, w)?)?);
    }
    let mut z: Vec<FieldElement> = Vec::with_capacity(gsb.rank);
    for t in 0..gsb.rank {
        let s = gsb.smith.s.get(t, t);
        let q = s.to_u32().ok_or(FusionError::ExponentOverflow)?;
        let x = match &inclusion {
            Some(h) => h.apply(&ratios[t])?,
            None => ratios[t].clone(),
        };
        let root = if s.is_one() {
            x
        } else {
            match nth_root(&x, q) {
                Ok(r) => r,
                Err(AlgebraError::NoRoot { .. }) if opts.extend_field => {
                    let ext = extend_by_radical(&x, q)?;
                    z = z.iter().map(|v| ext.embedding.apply(v)).collect::<std::result::Result<_, _>>()?;
                    inclusion = Some(match inclusion {
                        Some(h) => FieldMorphism::new(sys.field(), ext.embedding.apply(h.image_of_generator())?)?,
                        None => ext.embedding.clone(),
                    });
                    field = ext.field.clone();
                    ext.root
                }
                Err(AlgebraError::NoRoot { .. }) => {
                    let ext = extend_by_radical(&x, q)?;
                    return Err(FusionError::RootNotInField { poly: ext.root.minimal_polynomial(), value: x.display(), q });
                }
                Err(e) => return Err(e.into()),
            }
        };
        z.push(root);
    }
    let h = gsb.exponents.vars.len();
    let mut gauge = GaugeAssignment { values: Default::default() };
    for (j, v) in gsb.exponents.vars.iter().enumerate() {
        let mut g = field.one();
        for (t, zt) in z.iter().enumerate() {
            let e = to_i64(gsb.smith.u_inv.get(t, j))?;
            if e != 0 {
                g = &g * &zt.pow(e)?;
            }
        }
        gauge.values.insert(*v, g);
    }
    debug_assert_eq!(gauge.values.len(), h);
    let sol = GaugeSolution { gauge, field, inclusion };
    let moved = apply_gauge(&sol.lift(sys)?, &sol.gauge)?;
    for (w, t) in gsb.d.iter().zip(targets) {
        let target = match &sol.inclusion {
            Some(h) => h.apply(t)?,
            None => t.clone(),
        };
        if evaluate_word(&moved, &gsb.index, w)? != target {
            return Err(FusionError::GaugeCheckFailed);
        }
    }
    Ok(sol)
}
