//! Dense polynomials over a prime field `F_p` (with `p < 2^31`) and
//! distinct-degree factorization, used to bound the degrees of rational factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut r = vec![0; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        r[i] = (x + p - y) % p;
    }
    trim(r)
}

fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(r)
}

fn rem(a: &Poly, m: &Poly, p: u64) -> Poly {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let li = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        if c != 0 {
            for k in 0..=dm {
                let idx = top - dm + k;
                r[idx] = (r[idx] + p - c * m[k] % p) % p;
            }
        }
        r = trim(r);
        if r.len() > top {
            r.pop();
        }
    }
    r
}

fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = inv_mod(l, p);
        for c in a.iter_mut() {
            *c = *c * li % p;
        }
    }
    a
}

fn div_exact(a: &Poly, m: &Poly, p: u64) -> Poly {
    let dm = m.len() - 1;
    let li = inv_mod(m[dm], p);
    let mut r = a.clone();
    let mut q = vec![0; a.len().saturating_sub(dm)];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        q[top - dm] = c;
        for k in 0..=dm {
            let idx = top - dm + k;
            r[idx] = (r[idx] + p - c * m[k] % p) % p;
        }
        r.pop();
        r = trim(r);
    }
    trim(q)
}

fn powmod_poly(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut r: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

fn derivative(a: &Poly, p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

/// Reduce integer coefficients mod `p`.
pub fn reduce(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(coeffs.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Degrees of the irreducible factors of `f` mod `p`, or `None` if `p` divides
/// the leading coefficient or `f` is not squarefree mod `p`.
pub fn factor_degrees(coeffs: &[BigInt], p: u64) -> Option<Vec<usize>> {
    let n = coeffs.len() - 1;
    if (&coeffs[n] % BigInt::from(p)).is_zero() {
        return None;
    }
    let mut f = reduce(coeffs, p);
    if gcd(&f, &derivative(&f, p), p).len() > 1 {
        return None;
    }
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let mut degs = Vec::new();
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            degs.push(f.len() - 1);
            break;
        }
        h = powmod_poly(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        let k = g.len() - 1;
        if k > 0 {
            for _ in 0..k / d {
                degs.push(d);
            }
            f = div_exact(&f, &g, p);
            h = rem(&h, &f, p);
        }
    }
    degs.sort_unstable();
    Some(degs)
}

/// All degrees achievable as sums of sub-multisets of `degs`.
pub fn subset_sums(degs: &[usize]) -> Vec<bool> {
    let total: usize = degs.iter().sum();
    let mut can = vec![false; total + 1];
    can[0] = true;
    for &d in degs {
        for s in (d..=total).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

pub fn small_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 3u64;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
            out.push(c);
        }
        c += 2;
    }
    out
}
