//! Exact pentagon and hexagon checks.
//!
//! Pentagon, for all admissible outer labels:
//! `F(f,c,d,e,g,l)·F(a,b,l,e,f,k) = Σ_h F(a,b,c,g,f,h)·F(a,h,d,e,g,k)·F(b,c,d,k,h,l)`.
//!
//! Hexagon, with `R` and again with `R⁻¹(x,y,z) = 1/R(y,x,z)`:
//! `R(c,a,e)·F(a,c,b,d,e,g)·R(c,b,g) = Σ_f F(c,a,b,d,e,f)·R(c,f,d)·F(a,b,c,d,f,g)`.

use std::collections::BTreeSet;

use fsys_algebra::FieldElement;
use rayon::prelude::*;

use crate::error::{FusionError, Result};
use crate::system::{FKey, FusionSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationReport {
    pub ok: bool,
    pub checked: usize,
    pub violations: usize,
    /// Lowest violating label tuple.
    pub first_violation: Option<Vec<usize>>,
    /// F-keys taking part in every violated equation.
    pub suspects: Vec<FKey>,
}

struct Outcome {
    checked: usize,
    bad: Vec<(Vec<usize>, BTreeSet<FKey>)>,
}

fn merge(parts: Vec<Outcome>) -> EquationReport {
    let checked = parts.iter().map(|o| o.checked).sum();
    let mut bad: Vec<(Vec<usize>, BTreeSet<FKey>)> = parts.into_iter().flat_map(|o| o.bad).collect();
    bad.sort_by(|x, y| x.0.cmp(&y.0));
    let suspects =
        bad.iter().map(|b| b.1.clone()).reduce(|acc, s| acc.intersection(&s).cloned().collect()).map(|s| s.into_iter().collect()).unwrap_or_default();
    EquationReport { ok: bad.is_empty(), checked, violations: bad.len(), first_violation: bad.first().map(|b| b.0.clone()), suspects }
}

pub fn verify_pentagon(sys: &FusionSystem) -> EquationReport {
    let r = sys.rank();
    let ring = sys.ring();
    let parts: Vec<Outcome> = (0..r)
        .into_par_iter()
        .map(|a| {
            let mut out = Outcome { checked: 0, bad: Vec::new() };
            let zero = sys.field().zero();
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        for f in ring.products(a, b) {
                            for g in ring.products(f, c) {
                                for e in ring.products(g, d) {
                                    for l in ring.products(c, d) {
                                        for k in ring.products(b, l) {
                                            if !ring.fuses(a, k, e) {
                                                continue;
                                            }
                                            out.checked += 1;
                                            let k1 = [f, c, d, e, g, l];
                                            let k2 = [a, b, l, e, f, k];
                                            let lhs = &sys.f_or_zero(&k1) * &sys.f_or_zero(&k2);
                                            let mut rhs = zero.clone();
                                            let mut keys: BTreeSet<FKey> = [k1, k2].into_iter().filter(|k| sys.f(k).is_some()).collect();
                                            for h in ring.products(b, c) {
                                                let t = [[a, b, c, g, f, h], [a, h, d, e, g, k], [b, c, d, k, h, l]];
                                                let vals: Vec<FieldElement> = t.iter().map(|k| sys.f_or_zero(k)).collect();
                                                keys.extend(t.iter().filter(|k| sys.f(k).is_some()));
                                                if vals.iter().any(|v| v.is_zero()) {
                                                    continue;
                                                }
                                                rhs = &rhs + &(&(&vals[0] * &vals[1]) * &vals[2]);
                                            }
                                            if lhs != rhs {
                                                out.bad.push((vec![a, b, c, d, e, f, g, k, l], keys));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    merge(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HexagonKind {
    Braiding,
    InverseBraiding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonReport {
    pub ok: bool,
    pub braiding: EquationReport,
    pub inverse_braiding: EquationReport,
}

pub fn verify_hexagon(sys: &FusionSystem) -> Result<HexagonReport> {
    if !sys.is_braided() {
        return Err(FusionError::NotBraided);
    }
    let braiding = hexagon(sys, HexagonKind::Braiding);
    let inverse_braiding = hexagon(sys, HexagonKind::InverseBraiding);
    Ok(HexagonReport { ok: braiding.ok && inverse_braiding.ok, braiding, inverse_braiding })
}

fn hexagon(sys: &FusionSystem, kind: HexagonKind) -> EquationReport {
    let r = sys.rank();
    let ring = sys.ring();
    let rv = |x: usize, y: usize, z: usize| -> Option<FieldElement> {
        match kind {
            HexagonKind::Braiding => sys.r(&[x, y, z]).cloned(),
            HexagonKind::InverseBraiding => sys.r(&[y, x, z]).and_then(|v| v.inv().ok()),
        }
    };
    let parts: Vec<Outcome> = (0..r)
        .into_par_iter()
        .map(|a| {
            let mut out = Outcome { checked: 0, bad: Vec::new() };
            let zero = sys.field().zero();
            for b in 0..r {
                for c in 0..r {
                    for e in ring.products(a, c) {
                        for d in ring.products(e, b) {
                            for g in ring.products(c, b) {
                                if !ring.fuses(a, g, d) {
                                    continue;
                                }
                                out.checked += 1;
                                let fl = [a, c, b, d, e, g];
                                let mut keys: BTreeSet<FKey> = BTreeSet::from([fl]);
                                let lhs = match (rv(c, a, e), rv(c, b, g)) {
                                    (Some(x), Some(y)) => &(&x * &sys.f_or_zero(&fl)) * &y,
                                    _ => zero.clone(),
                                };
                                let mut rhs = zero.clone();
                                for f in ring.products(a, b) {
                                    let (k1, k2) = ([c, a, b, d, e, f], [a, b, c, d, f, g]);
                                    keys.extend([k1, k2].into_iter().filter(|k| sys.f(k).is_some()));
                                    if let Some(x) = rv(c, f, d) {
                                        rhs = &rhs + &(&(&sys.f_or_zero(&k1) * &x) * &sys.f_or_zero(&k2));
                                    }
                                }
                                if lhs != rhs {
                                    out.bad.push((vec![a, b, c, d, e, g], keys));
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    merge(parts)
}
