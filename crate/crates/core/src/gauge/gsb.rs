use fsys_algebra::{smith_normal_form, smith_normal_form_seeded, BigInt, IntMatrix, SmithDecomposition};
use num_traits::{ToPrimitive, Zero};

use super::exponents::{build_exponent_matrix, GaugeExponentMatrix};
use super::symbols::{enumerate_symbols, FormalWord, SymbolIndex};
use crate::error::{FusionError, Result};
use crate::system::FusionSystem;

/// A gauge-split basis: gauge-dependent words `D` and invariant words `I`
/// such that every word factors uniquely over `D ⊕ I`.
///
/// With `M = U·S·V`, `D` is the first `rank` columns of `V⁻¹`, `I` the
/// remaining (kernel) columns followed by the zero-valued symbols. In the
/// symbol order "nonzero then zero", `A = (V⁻¹)ᵀ ⊕ 1` has the basis words as
/// rows.
#[derive(Clone, Debug)]
pub struct GaugeSplitBasis {
    pub index: SymbolIndex,
    pub exponents: GaugeExponentMatrix,
    pub smith: SmithDecomposition,
    pub rank: usize,
    pub d: Vec<FormalWord>,
    pub i: Vec<FormalWord>,
    pub a: IntMatrix,
    pub a_inv: IntMatrix,
    /// Symbol position of each row/column of `A`.
    pub k_order: Vec<usize>,
}

pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or(FusionError::ExponentOverflow)
}

pub fn compute_gsb(sys: &FusionSystem) -> Result<GaugeSplitBasis> {
    assemble(sys, None)
}

/// A GSB from the Smith form of `M·W` for a seeded random unimodular `W`.
pub fn compute_gsb_seeded(sys: &FusionSystem, seed: u64) -> Result<GaugeSplitBasis> {
    assemble(sys, Some(seed))
}

fn assemble(sys: &FusionSystem, seed: Option<u64>) -> Result<GaugeSplitBasis> {
    let index = enumerate_symbols(sys);
    let exponents = build_exponent_matrix(sys.ring(), &index);
    let smith = match seed {
        None => smith_normal_form(&exponents.m),
        Some(s) => smith_normal_form_seeded(&exponents.m, s),
    };
    let rank = smith.rank();
    let k_order = index.k_order();
    let n = exponents.columns.len();
    let nz = index.len() - n;
    let word = |col: Vec<BigInt>| -> Result<FormalWord> {
        let mut w = FormalWord::empty(index.len());
        for (t, x) in col.iter().enumerate() {
            w.exponents[exponents.columns[t]] = to_i64(x)?;
        }
        Ok(w)
    };
    let d = (0..rank).map(|t| word(smith.v_inv.column(t))).collect::<Result<Vec<_>>>()?;
    let mut i = (rank..n).map(|t| word(smith.v_inv.column(t))).collect::<Result<Vec<_>>>()?;
    i.extend(k_order[n..].iter().map(|&p| FormalWord::unit(index.len(), p)));
    let a = smith.v_inv.transpose().direct_sum(&IntMatrix::identity(nz));
    let a_inv = smith.v.transpose().direct_sum(&IntMatrix::identity(nz));
    Ok(GaugeSplitBasis { index, exponents, smith, rank, d, i, a, a_inv, k_order })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordDecomposition {
    /// Exponents over `I`.
    pub a: Vec<i64>,
    /// Exponents over `D`.
    pub b: Vec<i64>,
}

/// The unique exponents with `w = Π D_t^{b_t} · Π I_t^{a_t}`, read off
/// `p · A⁻¹`.
pub fn word_decompose(gsb: &GaugeSplitBasis, w: &FormalWord) -> Result<WordDecomposition> {
    if let Some(i) = (gsb.index.len()..w.len()).find(|&i| w.exponents[i] != 0) {
        return Err(FusionError::UndefinedSymbol(i + 1));
    }
    let p: Vec<BigInt> = gsb.k_order.iter().map(|&i| BigInt::from(w.exponents.get(i).copied().unwrap_or(0))).collect();
    let x = gsb.a_inv.left_mul_vec(&p).iter().map(to_i64).collect::<Result<Vec<_>>>()?;
    Ok(WordDecomposition { b: x[..gsb.rank].to_vec(), a: x[gsb.rank..].to_vec() })
}

impl GaugeSplitBasis {
    pub fn basis_len(&self) -> usize {
        self.d.len() + self.i.len()
    }

    /// `Π D_t^{b_t} · Π I_t^{a_t}`.
    pub fn recompose(&self, dec: &WordDecomposition) -> FormalWord {
        let mut w = FormalWord::empty(self.index.len());
        for (word, &e) in self.d.iter().zip(&dec.b).chain(self.i.iter().zip(&dec.a)) {
            if e != 0 {
                w = w.mul(&word.pow(e));
            }
        }
        w
    }

    /// Structural checks: sizes, `A·A⁻¹ = 1`, invariant words in the kernel,
    /// and no negative exponents on zero symbols.
    pub fn is_consistent(&self) -> bool {
        let len = self.index.len();
        let sizes = self.basis_len() == len && self.d.len() == self.rank;
        let inverse = self.a.mul(&self.a_inv) == IntMatrix::identity(len);
        let kernel = self.i.iter().all(|w| self.exponents.restricted_factor(w).iter().all(|x| x.is_zero()));
        let evaluable = self.d.iter().chain(&self.i).all(|w| (0..len).all(|k| !self.index.zero_mask[k] || w.exponents[k] >= 0));
        sizes && inverse && kernel && evaluable
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariance {
    pub de_jure: bool,
    pub de_facto: bool,
}

impl GaugeExponentMatrix {
    /// De jure: the formal gauge monomial cancels. De facto: the value does
    /// not move under any gauge, either because it is identically zero or
    /// because the factor over the nonzero symbols cancels.
    pub fn invariance(&self, index: &SymbolIndex, w: &FormalWord) -> Result<Invariance> {
        if let Some(i) = (index.len()..w.len()).find(|&i| w.exponents[i] != 0) {
            return Err(FusionError::UndefinedSymbol(i + 1));
        }
        let mut vanishes = false;
        for (k, &e) in w.exponents.iter().enumerate() {
            if index.zero_mask[k] && e != 0 {
                if e < 0 {
                    return Err(FusionError::ZeroToNegativePower(index.symbols[k].to_string()));
                }
                vanishes = true;
            }
        }
        let de_jure = self.word_factor(w).iter().all(|x| x.is_zero());
        let de_facto = vanishes || self.restricted_factor(w).iter().all(|x| x.is_zero());
        Ok(Invariance { de_jure, de_facto })
    }
}

pub fn invariance_check(sys: &FusionSystem, w: &FormalWord) -> Result<Invariance> {
    let index = enumerate_symbols(sys);
    build_exponent_matrix(sys.ring(), &index).invariance(&index, w)
}
