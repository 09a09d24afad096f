//! Integer matrices, Smith normal form with explicit unimodular transforms,
//! integer kernels and rational one-sided inverses.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::qmat::QMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        r.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        r
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += x * a;
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()).collect()
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, o: &IntMatrix) -> IntMatrix {
        let mut r = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                r.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                r.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        r
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let mut r = Self::zeros(self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                r.set(i, jj, self.get(i, j).clone());
            }
        }
        r
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_rows((0..self.rows).map(|i| self.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row_dst += f * row_src
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * f;
            if !v.is_zero() {
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    // col_dst += f * col_src
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * f;
            if !v.is_zero() {
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `m = U · S · V` with `U`, `V` unimodular and `S` in Smith form. The inverses
/// of `U` and `V` are tracked alongside.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `S`, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).take_while(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Elimination state: `left · m · right = work`, with `left_inv`, `right_inv`
/// maintained so that `U = left_inv`, `V = right_inv`.
struct Elim {
    work: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl Elim {
    fn new(work: IntMatrix) -> Self {
        let (r, c) = (work.rows, work.cols);
        Elim { work, left: IntMatrix::identity(r), left_inv: IntMatrix::identity(r), right: IntMatrix::identity(c), right_inv: IntMatrix::identity(c) }
    }
    // The same state for the transposed matrix: row operations become column
    // operations.
    fn transposed(self) -> Self {
        Elim {
            work: self.work.transpose(),
            left: self.right.transpose(),
            left_inv: self.right_inv.transpose(),
            right: self.left.transpose(),
            right_inv: self.left_inv.transpose(),
        }
    }
    // (row_a, row_b) ← T · (row_a, row_b) with T = [[p, q], [r, s]], det T = 1.
    fn row_mix(&mut self, a: usize, b: usize, t: [BigInt; 4]) {
        let [p, q, r, s] = t;
        for m in [&mut self.work, &mut self.left] {
            for j in 0..m.cols {
                let (x, y) = (m.get(a, j).clone(), m.get(b, j).clone());
                m.set(a, j, &p * &x + &q * &y);
                m.set(b, j, &r * &x + &s * &y);
            }
        }
        let m = &mut self.left_inv;
        for i in 0..m.rows {
            let (x, y) = (m.get(i, a).clone(), m.get(i, b).clone());
            m.set(i, a, &s * &x - &r * &y);
            m.set(i, b, &p * &y - &q * &x);
        }
    }
    fn row_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.work.add_row(dst, src, f);
        self.left.add_row(dst, src, f);
        self.left_inv.add_col(src, dst, &-f);
    }
    fn col_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.work.add_col(dst, src, f);
        self.right.add_col(dst, src, f);
        self.right_inv.add_row(src, dst, &-f);
    }
    fn row_swap(&mut self, a: usize, b: usize) {
        self.work.swap_rows(a, b);
        self.left.swap_rows(a, b);
        self.left_inv.swap_cols(a, b);
    }
    fn col_swap(&mut self, a: usize, b: usize) {
        self.work.swap_cols(a, b);
        self.right.swap_cols(a, b);
        self.right_inv.swap_rows(a, b);
    }
    fn row_negate(&mut self, r: usize) {
        self.work.negate_row(r);
        self.left.negate_row(r);
        // inverse of a sign flip is itself, applied on the column side
        for i in 0..self.left_inv.rows {
            let v = -self.left_inv.get(i, r);
            self.left_inv.set(i, r, v);
        }
    }
}

/// Smith normal form with the deterministic pivot rule: the nonzero entry of
/// least absolute value in the remaining block, ties broken by row-major
/// position.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    snf_impl(m.clone(), IntMatrix::identity(m.cols), IntMatrix::identity(m.cols))
}

/// Smith normal form of `m · W` for a seeded random unimodular `W`, reported
/// as a decomposition of `m` itself. Different seeds give different `V`.
pub fn smith_normal_form_seeded(m: &IntMatrix, seed: u64) -> SmithDecomposition {
    let (w, w_inv) = random_unimodular(m.cols, seed);
    snf_impl(m.mul(&w), w, w_inv)
}

/// A random signed permutation matrix and its inverse.
pub fn random_unimodular(n: usize, seed: u64) -> (IntMatrix, IntMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut w = IntMatrix::zeros(n, n);
    let mut w_inv = IntMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        let s = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        w.set(i, j, s.clone());
        w_inv.set(j, i, s);
    }
    (w, w_inv)
}

// Computes the SNF of `m0 = m · pre_inv`, where `pre` is unimodular with inverse
// `pre_inv`, and returns the decomposition of `m` (i.e. `V` absorbs `pre_inv`).
fn snf_impl(m0: IntMatrix, pre_inv: IntMatrix, pre: IntMatrix) -> SmithDecomposition {
    let cap = 2 * hadamard_bits(&m0) + 64;
    let e = match eliminate(Elim::new(m0.clone()), cap) {
        Some(e) => e,
        None => hermite_alternation(Elim::new(m0)),
    };
    // left · m0 · right = S  ⇒  m = left⁻¹ · S · right⁻¹ · W⁻¹
    let v = e.right_inv.mul(&pre);
    let v_inv = pre_inv.mul(&e.right);
    SmithDecomposition { u: e.left_inv, s: e.work, v, u_inv: e.left, v_inv }
}

// log2 of the product of row norms, rounded up.
fn hadamard_bits(m: &IntMatrix) -> u64 {
    (0..m.rows)
        .map(|i| {
            let n2: BigInt = m.row(i).iter().map(|x| x * x).sum();
            n2.bits().div_ceil(2)
        })
        .sum()
}

fn max_bits(m: &IntMatrix) -> u64 {
    m.data.iter().map(|x| x.bits()).max().unwrap_or(0)
}

// Pivoted elimination. Gives up once an entry outgrows `cap` bits.
fn eliminate(mut e: Elim, cap: u64) -> Option<Elim> {
    let (r, c) = (e.work.rows, e.work.cols);
    let n = r.min(c);
    let mut t = 0;
    while t < n {
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = e.work.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < e.work.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        e.row_swap(t, pi);
        e.col_swap(t, pj);
        loop {
            if max_bits(&e.work) > cap {
                return None;
            }
            let mut done = true;
            for i in t + 1..r {
                if e.work.get(i, t).is_zero() {
                    continue;
                }
                let q = nearest_quotient(e.work.get(i, t), e.work.get(t, t));
                e.row_add(i, t, &-q);
                if !e.work.get(i, t).is_zero() {
                    e.row_swap(t, i);
                    done = false;
                }
            }
            for j in t + 1..c {
                if e.work.get(t, j).is_zero() {
                    continue;
                }
                let q = nearest_quotient(e.work.get(t, j), e.work.get(t, t));
                e.col_add(j, t, &-q);
                if !e.work.get(t, j).is_zero() {
                    e.col_swap(t, j);
                    done = false;
                }
            }
            if !done {
                continue;
            }
            let p = e.work.get(t, t).clone();
            let bad = (t + 1..r).flat_map(|i| (t + 1..c).map(move |j| (i, j))).find(|&(i, j)| !(e.work.get(i, j) % &p).is_zero());
            match bad {
                Some((i, _)) => e.row_add(t, i, &BigInt::one()),
                None => break,
            }
        }
        if e.work.get(t, t).is_negative() {
            e.row_negate(t);
        }
        t += 1;
    }
    Some(e)
}

fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if (&r + &r).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

// Alternating row and column Hermite reduction until diagonal, then the
// gcd/lcm repair of the divisibility chain. Entries stay polynomially bounded.
fn hermite_alternation(mut e: Elim) -> Elim {
    loop {
        hermite_rows(&mut e);
        if e.work.is_diagonal() {
            break;
        }
        e = e.transposed();
        hermite_rows(&mut e);
        e = e.transposed();
        if e.work.is_diagonal() {
            break;
        }
    }
    let rank = (0..e.work.rows.min(e.work.cols)).take_while(|&i| !e.work.get(i, i).is_zero()).count();
    for i in 0..rank {
        for j in i + 1..rank {
            let (di, dj) = (e.work.get(i, i).clone(), e.work.get(j, j).clone());
            if (&dj % &di).is_zero() {
                continue;
            }
            let ext = di.extended_gcd(&dj);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let (ai, aj) = (&di / &g, &dj / &g);
            e.row_mix(i, j, [s.clone(), t.clone(), -aj.clone(), ai.clone()]);
            let mut f = e.transposed();
            f.row_mix(i, j, [BigInt::one(), BigInt::one(), -(&t * &aj), &s * &ai]);
            e = f.transposed();
        }
    }
    for i in 0..rank {
        if e.work.get(i, i).is_negative() {
            e.row_negate(i);
        }
    }
    e
}

// Row Hermite form by inserting one row at a time into a fully reduced echelon
// basis.
fn hermite_rows(e: &mut Elim) {
    let (r, c) = (e.work.rows, e.work.cols);
    let mut piv: Vec<usize> = Vec::new();
    for k in 0..r {
        let t = piv.len();
        e.row_swap(t, k);
        for p in 0..piv.len() {
            let j = piv[p];
            if (0..j).any(|jj| !e.work.get(t, jj).is_zero()) {
                break;
            }
            if e.work.get(t, j).is_zero() {
                continue;
            }
            let (a, b) = (e.work.get(p, j).clone(), e.work.get(t, j).clone());
            if (&b % &a).is_zero() {
                e.row_add(t, p, &-(&b / &a));
            } else {
                let ext = a.extended_gcd(&b);
                let (g, s, u) = (ext.gcd, ext.x, ext.y);
                e.row_mix(p, t, [s, u, -(&b / &g), &a / &g]);
            }
        }
        let Some(j0) = (0..c).find(|&j| !e.work.get(t, j).is_zero()) else { continue };
        if e.work.get(t, j0).is_negative() {
            e.row_negate(t);
        }
        let pos = piv.partition_point(|&j| j < j0);
        for q in (pos..t).rev() {
            e.row_swap(q, q + 1);
        }
        piv.insert(pos, j0);
        for p in 0..piv.len() {
            let j = piv[p];
            if e.work.get(p, j).is_negative() {
                e.row_negate(p);
            }
            let a = e.work.get(p, j).clone();
            for i in 0..p {
                let q = e.work.get(i, j).div_floor(&a);
                if !q.is_zero() {
                    e.row_add(i, p, &-q);
                }
            }
        }
    }
}

/// Integer bases from `V⁻¹`: the last columns span the kernel of `m`, the
/// first `rank` columns complete them to a unimodular basis.
pub fn int_kernel_cokernel(m: &IntMatrix) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let snf = smith_normal_form(m);
    kernel_cokernel_from(&snf)
}

pub fn kernel_cokernel_from(snf: &SmithDecomposition) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rank = snf.rank();
    let c = snf.v_inv.cols;
    let cok = (0..rank).map(|j| snf.v_inv.column(j)).collect();
    let ker = (rank..c).map(|j| snf.v_inv.column(j)).collect();
    (ker, cok)
}

/// Rational `n × h` matrix `c̃` with `c̃ · c = 1`, for `c` of full column rank.
pub fn int_left_inverse(c: &IntMatrix) -> Result<QMatrix> {
    let (h, n) = (c.rows, c.cols);
    let snf = smith_normal_form(c);
    if snf.rank() != n {
        return Err(AlgebraError::RankDeficient);
    }
    // c = U S V  ⇒  c̃ = V⁻¹ S⁺ U⁻¹ with S⁺ the n × h diagonal of reciprocals
    let mut s_plus = QMatrix::zeros(n, h);
    for i in 0..n {
        s_plus.set(i, i, BigRational::from_integer(snf.s.get(i, i).clone()).recip());
    }
    Ok(snf.v_inv.to_qmatrix().mul(&s_plus).mul(&snf.u_inv.to_qmatrix()))
}
