use fsys_algebra::{BigInt, IntMatrix};
use num_traits::Zero;

use super::symbols::{FormalWord, Symbol, SymbolIndex};
use crate::ring::FusionRing;

/// The gauge factor of a symbol as `(vertex, exponent)` terms, before
/// cancellation: F-symbols pick up `g_{ijm} g_{mkl} / (g_{inl} g_{jkn})`,
/// P-symbols `g_{a*,a,1} g_{1,a*,a*} / (g_{a*,1,a*} g_{a,a*,1})`.
pub fn gauge_factor(ring: &FusionRing, s: &Symbol) -> [([usize; 3], i64); 4] {
    match *s {
        Symbol::F([i, j, k, l, m, n]) => [([i, j, m], 1), ([m, k, l], 1), ([i, n, l], -1), ([j, k, n], -1)],
        Symbol::P(a) => {
            let ad = ring.dual(a);
            [([ad, a, 0], 1), ([0, ad, ad], 1), ([ad, 0, ad], -1), ([a, ad, 0], -1)]
        }
    }
}

/// The integer matrix of net gauge exponents: rows are gauge variables (the
/// fusion vertices, lexicographic), columns are symbols.
#[derive(Clone, Debug)]
pub struct GaugeExponentMatrix {
    pub vars: Vec<[usize; 3]>,
    /// Symbol positions (into the index) of the columns of `m`: the nonzero
    /// symbols in index order.
    pub columns: Vec<usize>,
    /// Columns over nonzero symbols.
    pub m: IntMatrix,
    /// Columns over every symbol, in index order.
    pub full: IntMatrix,
}

pub fn build_exponent_matrix(ring: &FusionRing, index: &SymbolIndex) -> GaugeExponentMatrix {
    let vars = ring.vertices();
    let r = ring.rank();
    let mut slot = vec![usize::MAX; r * r * r];
    for (t, v) in vars.iter().enumerate() {
        slot[(v[0] * r + v[1]) * r + v[2]] = t;
    }
    let mut full = IntMatrix::zeros(vars.len(), index.len());
    for (c, s) in index.symbols.iter().enumerate() {
        let mut col = vec![0i64; vars.len()];
        for (v, e) in gauge_factor(ring, s) {
            col[slot[(v[0] * r + v[1]) * r + v[2]]] += e;
        }
        for (row, e) in col.into_iter().enumerate() {
            if e != 0 {
                full.set(row, c, BigInt::from(e));
            }
        }
    }
    let columns: Vec<usize> = (0..index.len()).filter(|&i| !index.zero_mask[i]).collect();
    let mut m = IntMatrix::zeros(vars.len(), columns.len());
    for (jj, &j) in columns.iter().enumerate() {
        for i in 0..vars.len() {
            let x = full.get(i, j);
            if !x.is_zero() {
                m.set(i, jj, x.clone());
            }
        }
    }
    GaugeExponentMatrix { vars, columns, m, full }
}

impl GaugeExponentMatrix {
    /// Net exponent of every gauge variable in the gauge factor of `w`.
    pub fn word_factor(&self, w: &FormalWord) -> Vec<BigInt> {
        let p: Vec<BigInt> = (0..self.full.cols()).map(|i| BigInt::from(w.exponents.get(i).copied().unwrap_or(0))).collect();
        self.full.mul_vec(&p)
    }

    /// `M · p` with `p` restricted to the nonzero symbols.
    pub fn restricted_factor(&self, w: &FormalWord) -> Vec<BigInt> {
        let p: Vec<BigInt> = self.columns.iter().map(|&i| BigInt::from(w.exponents.get(i).copied().unwrap_or(0))).collect();
        self.m.mul_vec(&p)
    }
}
