//! Reference data for the center of the Haagerup H3 category.

use std::f64::consts::PI;

use fsys_algebra::{nearest_embedding, FieldElement, NumberField, RatPoly};
use num_complex::Complex64;

/// `ℚ(d)` with `d² = 3d + 1`, so `d = (3 + √13)/2`.
pub fn qd() -> NumberField {
    NumberField::new(&RatPoly::from_ints(&[-1, -3, 1])).unwrap().with_var("d")
}

/// Object dimensions `1, 3d+1, (3d+2)×4, 3d×6`.
pub fn center_dims(k: &NumberField) -> Vec<FieldElement> {
    let d = k.generator();
    let lin = |a: i64, b: i64| &d.scale(&fsys_algebra::rational::rat(a)) + &k.from_int(b);
    let mut v = vec![k.one(), lin(3, 1)];
    v.extend((0..4).map(|_| lin(3, 2)));
    v.extend((0..6).map(|_| lin(3, 0)));
    v
}

pub fn parse_matrix(text: &str) -> Result<Vec<Vec<u32>>, String> {
    let rows: Vec<Vec<u32>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|t| t.parse::<u32>().map_err(|e| format!("{t:?}: {e}"))).collect())
        .collect::<Result<_, _>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err("matrix is not square".into());
    }
    Ok(rows)
}

/// The fourth fusion matrix: shape, unit row, self-duality, and the exact
/// eigenvector equation `Σ_c N_{4,b}^c d_c = d_4 d_b`.
pub fn check_mt4(text: &str) -> Result<(), String> {
    let m = parse_matrix(text)?;
    if m.len() != 12 {
        return Err(format!("rank {}", m.len()));
    }
    if (0..12).any(|c| m[0][c] != u32::from(c == 3)) {
        return Err("unit row is not e_4".into());
    }
    for b in 0..12 {
        for c in 0..12 {
            if m[b][c] != m[c][b] {
                return Err(format!("not symmetric at ({},{})", b + 1, c + 1));
            }
        }
    }
    let k = qd();
    let dims = center_dims(&k);
    for b in 0..12 {
        let mut lhs = k.zero();
        for c in 0..12 {
            lhs = &lhs + &dims[c].scale(&fsys_algebra::rational::rat(m[b][c] as i64));
        }
        if lhs != &dims[3] * &dims[b] {
            return Err(format!("row {} is not an eigenvector equation", b + 1));
        }
    }
    // global dimension: the square of dim H3 = 9d + 6
    let total = dims.iter().fold(k.zero(), |acc, x| &acc + &(x * x));
    let h3 = &k.generator().scale(&fsys_algebra::rational::rat(9)) + &k.from_int(6);
    if total != &h3 * &h3 || total.minimal_polynomial() != RatPoly::from_ints(&[13689, -1287, 1]) {
        return Err(format!("global dimension {}", total.display()));
    }
    Ok(())
}

/// T-diagonal as `(n, k)` pairs meaning `exp(2πik/n)`.
pub const T_DIAGONAL: [(i64, i64); 12] = [(1, 0), (1, 0), (1, 0), (1, 0), (3, -1), (3, 1), (13, -2), (13, -6), (13, 2), (13, -5), (13, 6), (13, 5)];

/// `ξ_n^k` inside `ℚ(ξ_39)` for `n | 39`.
fn xi39_power(k39: &NumberField, n: i64, k: i64) -> FieldElement {
    k39.generator().pow(k * (39 / n)).unwrap()
}

/// Exact orders and ball evaluation of the T-diagonal under `ξ_39 ↦ e^{2πi/39}`.
pub fn check_t_diagonal(tol: f64) -> Result<f64, String> {
    let k39 = NumberField::cyclotomic(39);
    let e = nearest_embedding(&k39, Complex64::from_polar(1.0, 2.0 * PI / 39.0), 128).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (pos, &(n, k)) in T_DIAGONAL.iter().enumerate() {
        let t = xi39_power(&k39, n, k);
        if !t.pow(n).unwrap().is_one() {
            return Err(format!("entry {} is not an {n}th root of unity", pos + 1));
        }
        if n > 1 && t.is_one() {
            return Err(format!("entry {} is trivial", pos + 1));
        }
        let ball = e.evaluate(&t).map_err(|e| e.to_string())?;
        let want = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
        let (re, im) = ball.to_f64();
        let err = (Complex64::new(re, im) - want).norm() + ball.rad_f64();
        worst = worst.max(err);
    }
    if worst > tol {
        return Err(format!("embedding error {worst:e}"));
    }
    Ok(worst)
}

/// The printed `ξ_39` expression for `d` is exactly a root of `x² − 3x − 1`
/// and evaluates to `(3 + √13)/2`.
pub fn check_d_in_xi39(tol: f64) -> Result<f64, String> {
    let k39 = NumberField::cyclotomic(39);
    let x = |e: i64| k39.generator().pow(e).unwrap();
    let terms = [(23, -1), (17, -1), (14, -1), (12, 1), (10, -1), (9, 1), (4, -1), (3, 1), (1, -1)];
    let d = terms.iter().fold(k39.from_int(2), |acc, &(e, c)| &acc + &x(e).scale(&fsys_algebra::rational::rat(c)));
    if d.minimal_polynomial() != RatPoly::from_ints(&[-1, -3, 1]) {
        return Err(format!("minimal polynomial {}", d.minimal_polynomial()));
    }
    let e = nearest_embedding(&k39, Complex64::from_polar(1.0, 2.0 * PI / 39.0), 128).map_err(|e| e.to_string())?;
    let ball = e.evaluate(&d).map_err(|e| e.to_string())?;
    let (re, im) = ball.to_f64();
    let err = (re - (3.0 + 13f64.sqrt()) / 2.0).abs() + im.abs() + ball.rad_f64();
    if err > tol {
        return Err(format!("numeric error {err:e}"));
    }
    Ok(err)
}
