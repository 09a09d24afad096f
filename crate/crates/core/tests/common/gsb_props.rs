//! The defining properties of a gauge-split basis, checked on a system.

use fsys::gauge::{apply_gauge, evaluate_word, random_gauge, solve_gauge_for_targets, word_decompose, FormalWord, GaugeSplitBasis, SolveOptions};
use fsys::{FusionError, FusionSystem};
use fsys_algebra::{BigRational, FieldElement, NumberField};
use rand::Rng;

pub fn random_nonzero<R: Rng>(field: &NumberField, rng: &mut R) -> FieldElement {
    loop {
        let c = (0..field.degree()).map(|_| BigRational::from_integer(rng.gen_range(-3i64..=3).into())).collect();
        let x = field.from_coeffs(c).unwrap();
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_word<R: Rng>(len: usize, rng: &mut R) -> FormalWord {
    FormalWord { exponents: (0..len).map(|_| rng.gen_range(-3i64..=3)).collect() }
}

pub struct Counts {
    pub gauges: usize,
    pub targets: usize,
    pub words: usize,
}

/// Checks evaluability, invariance of `I` under random gauges, solvability
/// of random `D`-targets, and unique decomposition of random words.
pub fn check_gsb<R: Rng>(sys: &FusionSystem, gsb: &GaugeSplitBasis, counts: Counts, rng: &mut R) -> Result<(), String> {
    let index = &gsb.index;
    if !gsb.is_consistent() {
        return Err("structural check failed".into());
    }
    if gsb.basis_len() != index.len() || gsb.d.len() != gsb.rank || gsb.rank > gsb.exponents.vars.len() {
        return Err("basis sizes".into());
    }
    if !gsb.a.is_unimodular() {
        return Err("A is not unimodular".into());
    }
    // (1) every basis word evaluates
    let mut i_values = Vec::new();
    for w in &gsb.i {
        i_values.push(evaluate_word(sys, index, w).map_err(|e| format!("I-word: {e}"))?);
    }
    for w in &gsb.d {
        evaluate_word(sys, index, w).map_err(|e| format!("D-word: {e}"))?;
    }
    // (2) invariant words do not move
    for _ in 0..counts.gauges {
        let g = random_gauge(sys.ring(), sys.field(), rng);
        let moved = apply_gauge(sys, &g).map_err(|e| e.to_string())?;
        for (w, v) in gsb.i.iter().zip(&i_values) {
            if evaluate_word(&moved, index, w).map_err(|e| e.to_string())? != *v {
                return Err(format!("I-word {} moved", w.display(index)));
            }
        }
    }
    // (3) dependent words reach any target
    for _ in 0..counts.targets {
        let targets: Vec<FieldElement> = (0..gsb.d.len()).map(|_| random_nonzero(sys.field(), rng)).collect();
        match solve_gauge_for_targets(sys, gsb, &targets, SolveOptions::default()) {
            Ok(sol) => {
                let moved = apply_gauge(&sol.lift(sys).unwrap(), &sol.gauge).map_err(|e| e.to_string())?;
                for (w, t) in gsb.d.iter().zip(&targets) {
                    let t = match &sol.inclusion {
                        Some(h) => h.apply(t).unwrap(),
                        None => t.clone(),
                    };
                    if evaluate_word(&moved, index, w).unwrap() != t {
                        return Err("target missed".into());
                    }
                }
                for (w, v) in gsb.i.iter().zip(&i_values) {
                    let v = match &sol.inclusion {
                        Some(h) => h.apply(v).unwrap(),
                        None => v.clone(),
                    };
                    if evaluate_word(&moved, index, w).unwrap() != v {
                        return Err("solving moved an invariant".into());
                    }
                }
            }
            Err(FusionError::RootNotInField { .. }) => {}
            Err(e) => return Err(format!("solve: {e}")),
        }
    }
    // (4) unique decomposition
    for _ in 0..counts.words {
        let w = random_word(index.len(), rng);
        let dec = word_decompose(gsb, &w).map_err(|e| e.to_string())?;
        if gsb.recompose(&dec) != w {
            return Err(format!("recompose failed for {:?}", w.exponents));
        }
    }
    Ok(())
}
