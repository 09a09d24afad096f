//! Dense matrices over Q and an incremental echelon basis.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (i, &c) in piv.iter().enumerate() {
            x[c] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = self.rows;
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return BigRational::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det *= &pv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &pv;
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Echelon basis that grows one vector at a time and reports the first
/// linear dependency among the inserted vectors.
#[derive(Clone, Debug, Default)]
pub struct IncrementalSpan {
    dim: usize,
    inserted: usize,
    // (reduced vector with leading 1 at pivot, pivot, combination of inserted vectors)
    basis: Vec<(Vec<BigRational>, usize, Vec<BigRational>)>,
}

pub enum Insertion {
    Independent,
    /// `v = sum_i coeffs[i] * inserted_i`
    Dependent(Vec<BigRational>),
}

impl IncrementalSpan {
    pub fn new(dim: usize) -> Self {
        IncrementalSpan { dim, inserted: 0, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut comb = vec![BigRational::zero(); self.inserted];
        for (b, p, bc) in &self.basis {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (wi, bi) in w.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *wi -= &f * bi;
                }
            }
            for (ci, bci) in comb.iter_mut().zip(bc) {
                if !bci.is_zero() {
                    *ci += &f * bci;
                }
            }
        }
        (w, comb)
    }

    /// Coefficients expressing `v` in the inserted vectors, if it is in their span.
    pub fn express(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let (w, comb) = self.reduce(v);
        w.iter().all(|x| x.is_zero()).then_some(comb)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Dependent vectors are not added to the basis but still count as
    /// inserted (with index `inserted()` at the time of the call).
    pub fn insert(&mut self, v: &[BigRational]) -> Insertion {
        let (mut w, comb) = self.reduce(v);
        let idx = self.inserted;
        self.inserted += 1;
        for (_, _, bc) in self.basis.iter_mut() {
            bc.push(BigRational::zero());
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return Insertion::Dependent(comb);
        };
        // w = v - sum comb_i * inserted_i
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        let mut bc: Vec<BigRational> = comb.into_iter().map(|c| -c * &inv).collect();
        bc.push(inv);
        debug_assert_eq!(bc.len(), idx + 1);
        // keep reduced form so later reductions only touch the new pivot once
        for (b, _, obc) in self.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (bi, wi) in b.iter_mut().zip(&w) {
                if !wi.is_zero() {
                    *bi -= &f * wi;
                }
            }
            for (oi, ni) in obc.iter_mut().zip(&bc) {
                if !ni.is_zero() {
                    *oi -= &f * ni;
                }
            }
        }
        self.basis.push((w, p, bc));
        Insertion::Independent
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }
}
