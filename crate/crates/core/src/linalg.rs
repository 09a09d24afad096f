//! Dense linear algebra over a number field.

use fsys_algebra::FieldElement;

pub type FieldMatrix = Vec<Vec<FieldElement>>;

/// Exact inverse by Gauss–Jordan elimination, `None` if singular.
pub fn invert(m: &FieldMatrix) -> Option<FieldMatrix> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let k = m[0][0].field().clone();
    let mut a: FieldMatrix = m.clone();
    let mut inv: FieldMatrix = (0..n).map(|i| (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].inv().ok()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] = &a[r][j] - &t;
                let t = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - &t;
            }
        }
    }
    Some(inv)
}

pub fn mul(a: &FieldMatrix, b: &FieldMatrix) -> FieldMatrix {
    let k = a[0][0].field().clone();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = k.zero();
                    for t in 0..inner {
                        if !row[t].is_zero() && !b[t][j].is_zero() {
                            acc = &acc + &(&row[t] * &b[t][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn is_identity(m: &FieldMatrix) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}
