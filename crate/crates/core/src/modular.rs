//! S-matrix and twists of a ribbon system.

use fsys_algebra::FieldElement;

use crate::dims::spherical_dimensions;
use crate::error::{FusionError, Result};
use crate::linalg::{self, FieldMatrix};
use crate::system::FusionSystem;

#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    pub s: FieldMatrix,
    pub t: Vec<FieldElement>,
    pub symmetric: bool,
    pub modular: bool,
}

fn r_or_zero(sys: &FusionSystem, key: [usize; 3]) -> FieldElement {
    sys.r(&key).cloned().unwrap_or_else(|| sys.field().zero())
}

/// `S_ab = d_a d_b Σ_c [F^a_{a,b*,b}]⁻¹_{(1),(c)} R^{b*,a}_c R^{a,b*}_c [F^a_{a,b*,b}]_{(c),(1)}`.
pub fn smatrix(sys: &FusionSystem) -> Result<FieldMatrix> {
    if !sys.is_braided() {
        return Err(FusionError::NotBraided);
    }
    let d = spherical_dimensions(sys)?;
    let ring = sys.ring();
    let r = sys.rank();
    let mut s = vec![vec![sys.field().zero(); r]; r];
    for a in 0..r {
        for b in 0..r {
            let bd = ring.dual(b);
            let block = sys.block([a, bd, b, a]);
            let inv = block.inverse().ok_or_else(|| FusionError::SingularFBlock(format!("{},{},{},{}", a + 1, bd + 1, b + 1, a + 1)))?;
            let n1 = block.ns.iter().position(|&n| n == 0).expect("unit lies in b* ⊗ b");
            let mut acc = sys.field().zero();
            for (mi, &c) in block.ms.iter().enumerate() {
                let term = &(&(&inv[n1][mi] * &r_or_zero(sys, [bd, a, c])) * &r_or_zero(sys, [a, bd, c])) * &block.entries[mi][n1];
                acc = &acc + &term;
            }
            s[a][b] = &(&d[a] * &d[b]) * &acc;
        }
    }
    Ok(s)
}

/// `θ_a = d_a⁻¹ Σ_c d_c R^{a,a}_c`.
pub fn twists(sys: &FusionSystem) -> Result<Vec<FieldElement>> {
    if !sys.is_braided() {
        return Err(FusionError::NotBraided);
    }
    let d = spherical_dimensions(sys)?;
    let ring = sys.ring();
    (0..sys.rank())
        .map(|a| {
            let sum = ring.products(a, a).into_iter().fold(sys.field().zero(), |acc, c| &acc + &(&d[c] * &r_or_zero(sys, [a, a, c])));
            Ok(sum.checked_div(&d[a])?)
        })
        .collect()
}

pub fn modular_data(sys: &FusionSystem) -> Result<ModularData> {
    let s = smatrix(sys)?;
    let t = twists(sys)?;
    let r = s.len();
    let symmetric = (0..r).all(|a| (0..r).all(|b| s[a][b] == s[b][a]));
    let modular = linalg::invert(&s).is_some();
    Ok(ModularData { s, t, symmetric, modular })
}
