//! Floating-point oracles, independent of the exact code paths: brute-force
//! pentagon and hexagon residuals, a Levenberg–Marquardt solver, and
//! recognition of floats as small algebraic numbers.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fsys::ring::FusionRing;
use fsys::FKey;

fn n(ring: &FusionRing, i: usize, j: usize, k: usize) -> bool {
    ring.n(i, j, k) > 0
}

fn verts(ring: &FusionRing) -> Vec<[usize; 3]> {
    let r = ring.rank();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                if n(ring, a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Every admissible F-key, found by scanning all `r^6` tuples.
pub fn brute_f_keys(ring: &FusionRing) -> Vec<FKey> {
    let r = ring.rank();
    let mut out = Vec::new();
    for t in 0..r.pow(6) {
        let mut x = t;
        let mut k = [0usize; 6];
        for s in (0..6).rev() {
            k[s] = x % r;
            x /= r;
        }
        let [i, j, kk, l, m, nn] = k;
        if n(ring, i, j, m) && n(ring, m, kk, l) && n(ring, j, kk, nn) && n(ring, i, nn, l) {
            out.push(k);
        }
    }
    out
}

/// `(tuple, |lhs - rhs|)` for every pentagon instance, tuples
/// `[a,b,c,d,e,f,g,k,l]` in lexicographic order.
pub fn pentagon_residuals(ring: &FusionRing, f: &BTreeMap<FKey, C64>) -> Vec<([usize; 9], f64)> {
    let r = ring.rank();
    let get = |k: [usize; 6]| f.get(&k).copied().unwrap_or(C64::new(0.0, 0.0));
    let mut out = Vec::new();
    for t in 0..r.pow(9) {
        let mut x = t;
        let mut v = [0usize; 9];
        for s in (0..9).rev() {
            v[s] = x % r;
            x /= r;
        }
        let [a, b, c, d, e, ff, g, k, l] = v;
        if !(n(ring, a, b, ff) && n(ring, ff, c, g) && n(ring, g, d, e) && n(ring, c, d, l) && n(ring, b, l, k) && n(ring, a, k, e)) {
            continue;
        }
        let lhs = get([ff, c, d, e, g, l]) * get([a, b, l, e, ff, k]);
        let rhs: C64 = (0..r).map(|h| get([a, b, c, g, ff, h]) * get([a, h, d, e, g, k]) * get([b, c, d, k, h, l])).sum();
        out.push((v, (lhs - rhs).norm()));
    }
    out
}

/// Residuals of both hexagon families, tuples `[a,b,c,d,e,g]`.
pub fn hexagon_residuals(ring: &FusionRing, f: &BTreeMap<FKey, C64>, rs: &BTreeMap<[usize; 3], C64>) -> Vec<([usize; 6], f64)> {
    let r = ring.rank();
    let zero = C64::new(0.0, 0.0);
    let fv = |k: [usize; 6]| f.get(&k).copied().unwrap_or(zero);
    let mut out = Vec::new();
    for inverse in [false, true] {
        let rv = |x: usize, y: usize, z: usize| -> C64 {
            if inverse {
                rs.get(&[y, x, z]).map_or(zero, |v| 1.0 / v)
            } else {
                rs.get(&[x, y, z]).copied().unwrap_or(zero)
            }
        };
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        for e in 0..r {
                            for g in 0..r {
                                if !(n(ring, a, c, e) && n(ring, e, b, d) && n(ring, c, b, g) && n(ring, a, g, d)) {
                                    continue;
                                }
                                let lhs = rv(c, a, e) * fv([a, c, b, d, e, g]) * rv(c, b, g);
                                let rhs: C64 = (0..r).map(|ff| fv([c, a, b, d, e, ff]) * rv(c, ff, d) * fv([a, b, c, d, ff, g])).sum();
                                out.push(([a, b, c, d, e, g], (lhs - rhs).norm()));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in 0..n {
            if row != col {
                let factor = a[row][col] / a[col][col];
                if factor != 0.0 {
                    for k in col..n {
                        a[row][k] -= factor * a[col][k];
                    }
                    b[row] -= factor * b[col];
                }
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Levenberg–Marquardt from `x0`; returns the final point and residual norm.
pub fn levenberg_marquardt(res: &dyn Fn(&[f64]) -> Vec<f64>, x0: Vec<f64>, iters: usize) -> (Vec<f64>, f64) {
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut x = x0;
    let mut r = res(&x);
    let mut lambda = 1e-3;
    for _ in 0..iters {
        let cur = norm(&r);
        if cur < 1e-14 {
            break;
        }
        let n = x.len();
        let m = r.len();
        let mut jac = vec![vec![0.0; n]; m];
        for j in 0..n {
            let h = 1e-7 * x[j].abs().max(1.0);
            let mut xp = x.clone();
            xp[j] += h;
            let rp = res(&xp);
            for i in 0..m {
                jac[i][j] = (rp[i] - r[i]) / h;
            }
        }
        let mut jtj = vec![vec![0.0; n]; n];
        let mut jtr = vec![0.0; n];
        for i in 0..m {
            for a in 0..n {
                if jac[i][a] == 0.0 {
                    continue;
                }
                jtr[a] -= jac[i][a] * r[i];
                for b in 0..n {
                    jtj[a][b] += jac[i][a] * jac[i][b];
                }
            }
        }
        let mut improved = false;
        for _ in 0..20 {
            let mut a = jtj.clone();
            for (k, row) in a.iter_mut().enumerate() {
                row[k] += lambda * (1.0 + jtj[k][k]);
            }
            if let Some(d) = solve_dense(a, jtr.clone()) {
                let xn: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + b).collect();
                let rn = res(&xn);
                if norm(&rn) < cur {
                    x = xn;
                    r = rn;
                    lambda = (lambda / 10.0).max(1e-15);
                    improved = true;
                    break;
                }
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    let fin = norm(&r);
    (x, fin)
}

fn rank_f64(rows: &[Vec<f64>]) -> usize {
    let mut m: Vec<Vec<f64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c].abs() > 1e-9) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank {
                let f = m[i][c] / m[rank][c];
                for k in c..cols {
                    m[i][k] -= f * m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Gauge exponents of an F-key over the fusion vertices, written out from the
/// transformation rule.
pub fn gauge_column(ring: &FusionRing, key: &FKey) -> Vec<f64> {
    let verts = verts(ring);
    let mut col = vec![0.0; verts.len()];
    let [i, j, k, l, m, nn] = *key;
    for (v, e) in [([i, j, m], 1.0), ([m, k, l], 1.0), ([i, nn, l], -1.0), ([j, k, nn], -1.0)] {
        let pos = verts.iter().position(|x| *x == v).unwrap();
        col[pos] += e;
    }
    col
}

/// A maximal set of keys whose gauge factors are independent, taken from
/// `candidates` in order. These can be set to 1 by a gauge over ℂ. With
/// `normalized`, only gauges trivial on vertices `(1,a,a)` and `(a,1,a)` are
/// used, so F-symbols with a unit among the first three labels stay put.
pub fn gauge_fixable(ring: &FusionRing, candidates: &[FKey], normalized: bool) -> Vec<FKey> {
    let vs = verts(ring);
    let mut chosen: Vec<FKey> = Vec::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for k in candidates {
        let mut col = gauge_column(ring, k);
        if normalized {
            for (c, v) in col.iter_mut().zip(&vs) {
                if v[0] == 0 || v[1] == 0 {
                    *c = 0.0;
                }
            }
        }
        rows.push(col);
        if rank_f64(&rows) == rows.len() {
            chosen.push(*k);
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Real pentagon solutions with the `fixed` keys held at their values.
/// Returns one solution per converged random start.
pub fn solve_pentagon_real(ring: &FusionRing, fixed: &BTreeMap<FKey, f64>, starts: usize, seed: u64) -> Vec<BTreeMap<FKey, f64>> {
    let keys = brute_f_keys(ring);
    let free: Vec<FKey> = keys.iter().copied().filter(|k| !fixed.contains_key(k)).collect();
    let assemble = |x: &[f64]| -> BTreeMap<FKey, C64> {
        let mut f: BTreeMap<FKey, C64> = fixed.iter().map(|(k, v)| (*k, C64::new(*v, 0.0))).collect();
        for (k, v) in free.iter().zip(x) {
            f.insert(*k, C64::new(*v, 0.0));
        }
        f
    };
    let res = |x: &[f64]| -> Vec<f64> {
        let f = assemble(x);
        let mut out: Vec<f64> = Vec::new();
        let r = ring.rank();
        let get = |k: [usize; 6]| f.get(&k).map_or(0.0, |c| c.re);
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        for ff in 0..r {
                            for g in 0..r {
                                for e in 0..r {
                                    for l in 0..r {
                                        for k in 0..r {
                                            if !(n(ring, a, b, ff)
                                                && n(ring, ff, c, g)
                                                && n(ring, g, d, e)
                                                && n(ring, c, d, l)
                                                && n(ring, b, l, k)
                                                && n(ring, a, k, e))
                                            {
                                                continue;
                                            }
                                            let lhs = get([ff, c, d, e, g, l]) * get([a, b, l, e, ff, k]);
                                            let rhs: f64 = (0..r).map(|h| get([a, b, c, g, ff, h]) * get([a, h, d, e, g, k]) * get([b, c, d, k, h, l])).sum();
                                            out.push(lhs - rhs);
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
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sols = Vec::new();
    for _ in 0..starts {
        let x0: Vec<f64> = free.iter().map(|_| rng.gen_range(-1.5..1.5)).collect();
        let (x, err) = levenberg_marquardt(&res, x0, 400);
        if err < 1e-11 {
            let mut out: BTreeMap<FKey, f64> = fixed.clone();
            for (k, v) in free.iter().zip(&x) {
                out.insert(*k, *v);
            }
            sols.push(out);
        }
    }
    sols
}

/// Complex R-values solving both hexagon families for fixed F.
pub fn solve_hexagon(
    ring: &FusionRing,
    f: &BTreeMap<FKey, C64>,
    fixed: &BTreeMap<[usize; 3], C64>,
    starts: usize,
    seed: u64,
) -> Vec<BTreeMap<[usize; 3], C64>> {
    let free: Vec<[usize; 3]> = verts(ring).into_iter().filter(|v| !fixed.contains_key(v)).collect();
    let assemble = |x: &[f64]| -> BTreeMap<[usize; 3], C64> {
        let mut rs = fixed.clone();
        for (t, v) in free.iter().enumerate() {
            rs.insert(*v, C64::new(x[2 * t], x[2 * t + 1]));
        }
        rs
    };
    let res = |x: &[f64]| -> Vec<f64> {
        let rs = assemble(x);
        let r = ring.rank();
        let zero = C64::new(0.0, 0.0);
        let fv = |k: [usize; 6]| f.get(&k).copied().unwrap_or(zero);
        let mut out = Vec::new();
        for inverse in [false, true] {
            let rv = |a: usize, b: usize, c: usize| -> C64 {
                if inverse {
                    rs.get(&[b, a, c]).map_or(zero, |v| 1.0 / v)
                } else {
                    rs.get(&[a, b, c]).copied().unwrap_or(zero)
                }
            };
            for a in 0..r {
                for b in 0..r {
                    for c in 0..r {
                        for d in 0..r {
                            for e in 0..r {
                                for g in 0..r {
                                    if !(n(ring, a, c, e) && n(ring, e, b, d) && n(ring, c, b, g) && n(ring, a, g, d)) {
                                        continue;
                                    }
                                    let lhs = rv(c, a, e) * fv([a, c, b, d, e, g]) * rv(c, b, g);
                                    let rhs: C64 = (0..r).map(|ff| fv([c, a, b, d, e, ff]) * rv(c, ff, d) * fv([a, b, c, d, ff, g])).sum();
                                    let z = lhs - rhs;
                                    out.push(z.re);
                                    out.push(z.im);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sols = Vec::new();
    for _ in 0..starts {
        let x0: Vec<f64> = (0..2 * free.len()).map(|_| rng.gen_range(-1.2..1.2)).collect();
        let (x, err) = levenberg_marquardt(&res, x0, 400);
        if err < 1e-11 {
            sols.push(assemble(&x));
        }
    }
    sols
}

/// `(a, b, c)` with `x ≈ (a + b√d) / c`, small coefficients, `c > 0`.
pub fn recognize_quadratic(x: f64, d: i64) -> Option<(i64, i64, i64)> {
    let s = (d as f64).sqrt();
    for c in 1..=12i64 {
        for b in -24..=24i64 {
            let a = (x * c as f64 - b as f64 * s).round();
            if (a.abs() as i64) <= 200 && ((a + b as f64 * s) / c as f64 - x).abs() < 1e-9 {
                return Some((a as i64, b, c));
            }
        }
    }
    None
}

/// `k` with `z ≈ e^{2πik/n}`.
pub fn root_of_unity_index(z: C64, n: u32) -> Option<u32> {
    (0..n).find(|&k| (C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64) - z).norm() < 1e-9)
}
