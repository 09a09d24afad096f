//! Shared helpers for integration tests: fields, oracle-built fixture systems
//! and fixture file access.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod gsb_props;
pub mod oracle;
pub mod zh3;

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_complex::Complex64 as C64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fsys::io::{load, save, SystemFile};
use fsys::ring::FusionRing;
use fsys::{rings, FKey, FusionSystem, RKey};
use fsys_algebra::{FieldElement, NumberField, RatPoly};

use oracle::*;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load_fixture(name: &str) -> FusionSystem {
    load(&read_fixture(name)).unwrap().system.unwrap()
}

/// ℚ(φ) with φ² = φ + 1.
pub fn qphi() -> NumberField {
    NumberField::new(&RatPoly::from_ints(&[-1, -1, 1])).unwrap().with_var("phi")
}

pub fn cyclo(n: usize) -> NumberField {
    NumberField::cyclotomic(n)
}

/// `(a + b√5)/c` in ℚ(φ), using √5 = 2φ − 1.
fn from_sqrt5(field: &NumberField, (a, b, c): (i64, i64, i64)) -> FieldElement {
    let phi = field.generator();
    let s5 = &(&phi + &phi) - &field.one();
    let num = &field.from_int(a) + &(&field.from_int(b) * &s5);
    num.checked_div(&field.from_int(c)).unwrap()
}

/// Frobenius–Perron dimensions by power iteration on the sum of fusion matrices.
pub fn fp_dims_f64(ring: &FusionRing) -> Vec<f64> {
    let r = ring.rank();
    let mut v = vec![1.0; r];
    for _ in 0..2000 {
        let mut w = vec![0.0; r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    w[c] += ring.n(a, b, c) as f64 * v[b];
                }
            }
        }
        let s = w[0];
        v = w.iter().map(|x| x / s).collect();
    }
    v
}

/// Solves the pentagon numerically in the gauge where every F-symbol with a
/// unit among its first three labels is 1 and a maximal independent set of
/// the rest is 1, then recognizes the values exactly. Pivotal values are
/// chosen so that the dimensions are the Frobenius–Perron ones.
fn oracle_system(ring: &FusionRing, field: &NumberField, pick: impl Fn(&BTreeMap<FKey, f64>) -> bool, recognize: impl Fn(f64) -> FieldElement) -> FusionSystem {
    let keys = brute_f_keys(ring);
    let mut fixed: BTreeMap<FKey, f64> = keys.iter().copied().filter(|k| k[..3].contains(&0)).map(|k| (k, 1.0)).collect();
    let rest: Vec<FKey> = keys.iter().copied().filter(|k| !k[..3].contains(&0)).collect();
    for k in gauge_fixable(ring, &rest, true) {
        fixed.insert(k, 1.0);
    }
    let sols = solve_pentagon_real(ring, &fixed, 16, 7);
    let sol = sols.into_iter().find(|s| pick(s)).expect("oracle found no admissible solution");
    let f: BTreeMap<FKey, FieldElement> = sol.iter().map(|(k, v)| (*k, recognize(*v))).collect();
    let d = fp_dims_f64(ring);
    let p = (0..ring.rank())
        .map(|a| {
            let s = ring.dual(a);
            recognize(d[a] * sol[&[s, a, s, s, 0, 0]])
        })
        .collect();
    FusionSystem::new(ring.clone(), field.clone(), f, p, None).unwrap()
}

/// Fibonacci over ℚ(φ), in the unitary branch.
pub fn fibonacci_pivotal() -> FusionSystem {
    let field = qphi();
    let fld = field.clone();
    oracle_system(
        &rings::fibonacci(),
        &field,
        |s| s[&[1, 1, 1, 1, 0, 0]] > 0.0,
        move |x| from_sqrt5(&fld, recognize_quadratic(x, 5).unwrap_or_else(|| panic!("unrecognized {x}"))),
    )
}

/// The Fibonacci symbols as complex numbers.
pub fn numeric_f(sys: &FusionSystem, eval: impl Fn(&FieldElement) -> C64) -> BTreeMap<FKey, C64> {
    sys.f_symbols().iter().map(|(k, v)| (*k, eval(v))).collect()
}

/// Fibonacci over ℚ(ξ₅) with a braiding; φ ↦ 1 + ξ + ξ⁴ and
/// `R(τ,τ,1) = e^{−4πi/5}`.
pub fn fibonacci_braided() -> FusionSystem {
    let base = fibonacci_pivotal();
    let field = cyclo(5);
    let xi = field.generator();
    let phi_img = &(&field.one() + &xi) + &xi.pow(4).unwrap();
    let incl = fsys_algebra::FieldMorphism::new(base.field(), phi_img).unwrap();
    let sys = base.map_values(&field, |x| Ok(incl.apply(x)?)).unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let eval = |x: &FieldElement| -> C64 {
        let c = base_coeffs(x);
        C64::new(c.0 + c.1 * phi, 0.0)
    };
    let fnum = numeric_f(&base, eval);
    let ring = sys.ring().clone();
    let fixed: BTreeMap<RKey, C64> = ring.vertices().into_iter().filter(|v| v[0] == 0 || v[1] == 0).map(|v| (v, C64::new(1.0, 0.0))).collect();
    let sols = solve_hexagon(&ring, &fnum, &fixed, 24, 3);
    let sol = sols.into_iter().find(|s| s[&[1, 1, 0]].im < 0.0).expect("no hexagon solution");
    // e^{πik/5} = (−ξ³)^k for ξ = e^{2πi/5}
    let minus_xi3 = -&xi.pow(3).unwrap();
    let r: BTreeMap<RKey, FieldElement> =
        sol.iter().map(|(k, z)| (*k, minus_xi3.pow(root_of_unity_index(*z, 10).expect("not a root of unity") as i64).unwrap())).collect();
    FusionSystem::new(ring, field, sys.f_symbols().clone(), sys.p_symbols().to_vec(), Some(r)).unwrap()
}

fn base_coeffs(x: &FieldElement) -> (f64, f64) {
    use num_traits::ToPrimitive;
    let c = x.coeffs();
    let g = |i: usize| c.get(i).map_or(0.0, |q| q.to_f64().unwrap());
    (g(0), g(1))
}

/// Rep(S₃) over ℚ; the standard-standard-standard block has a zero entry.
pub fn rep_s3() -> FusionSystem {
    let q = NumberField::rationals();
    let fld = q.clone();
    oracle_system(
        &rings::rep_s3(),
        &q,
        |s| s[&[2, 1, 2, 0, 2, 2]] > 0.0,
        move |x| {
            let (a, b, c) = recognize_quadratic(x, 2).unwrap_or_else(|| panic!("unrecognized {x}"));
            assert_eq!(b, 0, "irrational value {x}");
            fld.from_rational(num_rational::BigRational::new(a.into(), c.into()))
        },
    )
}

/// Vec(ℤ/n) with F given by `omega(a, b, c)` and spherical pivotal values.
pub fn pointed(n: usize, field: &NumberField, omega: impl Fn(usize, usize, usize) -> FieldElement, r: Option<BTreeMap<RKey, FieldElement>>) -> FusionSystem {
    let ring = rings::cyclic(n);
    let mut f = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                f.insert([a, b, c, (a + b + c) % n, (a + b) % n, (b + c) % n], omega(a, b, c));
            }
        }
    }
    let p = (0..n).map(|a| omega((n - a) % n, a, (n - a) % n)).collect();
    FusionSystem::new(ring, field.clone(), f, p, r).unwrap()
}

pub fn z2(nontrivial: bool) -> FusionSystem {
    let q = NumberField::rationals();
    let qq = q.clone();
    pointed(2, &q, move |a, b, c| qq.from_int(if nontrivial && a == 1 && b == 1 && c == 1 { -1 } else { 1 }), None)
}

/// Semion: nontrivial Vec(ℤ₂) with `R(2,2,1) = sign·i` over ℚ(i).
pub fn semion(sign: i64) -> FusionSystem {
    let k = cyclo(4);
    let kk = k.clone();
    let mut r = BTreeMap::new();
    for a in 0..2 {
        for b in 0..2 {
            let v = if a == 1 && b == 1 { k.generator().scale(&num_rational::BigRational::from_integer(sign.into())) } else { k.one() };
            r.insert([a, b, (a + b) % 2], v);
        }
    }
    pointed(2, &k, move |a, b, c| kk.from_int(if a == 1 && b == 1 && c == 1 { -1 } else { 1 }), Some(r))
}

/// Trivial Vec(ℤ₂) with the symmetric braiding R ≡ 1.
pub fn z2_symmetric() -> FusionSystem {
    let q = NumberField::rationals();
    let r = rings::cyclic(2).vertices().into_iter().map(|v| (v, q.one())).collect();
    let qq = q.clone();
    pointed(2, &q, move |_, _, _| qq.one(), Some(r))
}

/// Vec(ℤ₃) twisted by the cocycle class `p` over ℚ(ξ₃).
pub fn z3(p: usize) -> FusionSystem {
    let k = cyclo(3);
    let kk = k.clone();
    pointed(
        3,
        &k,
        move |a, b, c| {
            let carry = usize::from(b + c >= 3);
            kk.generator().pow(((p * a * carry) % 3) as i64).unwrap()
        },
        None,
    )
}

/// Every fixture with its file name.
pub fn all_fixtures() -> Vec<(&'static str, FusionSystem)> {
    vec![
        ("trivial.fsys", FusionSystem::all_ones(&rings::trivial(), &NumberField::rationals(), false).unwrap()),
        ("z2.fsys", z2(false)),
        ("z2_twisted.fsys", z2(true)),
        ("z2_symmetric.fsys", z2_symmetric()),
        ("semion.fsys", semion(1)),
        ("z3_0.fsys", z3(0)),
        ("z3_1.fsys", z3(1)),
        ("z3_2.fsys", z3(2)),
        ("fibonacci.fsys", fibonacci_pivotal()),
        ("fibonacci_braided.fsys", fibonacci_braided()),
        ("rep_s3.fsys", rep_s3()),
    ]
}

/// The embedding stored with a fixture: the generator goes to the golden
/// ratio for ℚ(φ) and to `e^{2πi/n}` for cyclotomic fields.
pub fn preferred_embedding(sys: &FusionSystem) -> Option<usize> {
    let field = sys.field();
    if field.degree() == 1 {
        return None;
    }
    let target = if field.same(&qphi()) {
        C64::new((1.0 + 5f64.sqrt()) / 2.0, 0.0)
    } else {
        let n = [3usize, 4, 5].into_iter().find(|&n| field.same(&cyclo(n))).expect("unexpected fixture field");
        C64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
    };
    Some(fsys_algebra::nearest_embedding(field, target, 64).unwrap().root_index())
}

/// Canonical text for a fixture.
pub fn fixture_text(name: &str, sys: &FusionSystem) -> String {
    let mut file = SystemFile::from_system(sys.clone()).with_name(name.trim_end_matches(".fsys"));
    file.embedding = preferred_embedding(sys);
    save(&file)
}

/// Numeric value of the generator under the fixture's preferred embedding.
pub fn generator_value(field: &NumberField) -> C64 {
    if field.degree() == 1 {
        C64::new(0.0, 0.0)
    } else if field.same(&qphi()) {
        C64::new((1.0 + 5f64.sqrt()) / 2.0, 0.0)
    } else {
        let n = [3usize, 4, 5].into_iter().find(|&n| field.same(&cyclo(n))).expect("unexpected field");
        C64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
    }
}

/// Horner evaluation of a field element at a numeric generator.
pub fn to_c64(x: &FieldElement, gen: C64) -> C64 {
    use num_traits::ToPrimitive;
    x.coeffs().iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * gen + c.to_f64().unwrap())
}

pub fn numeric_system(sys: &FusionSystem) -> (BTreeMap<FKey, C64>, Option<BTreeMap<RKey, C64>>) {
    let g = generator_value(sys.field());
    let f = sys.f_symbols().iter().map(|(k, v)| (*k, to_c64(v, g))).collect();
    let r = sys.r_symbols().map(|r| r.iter().map(|(k, v)| (*k, to_c64(v, g))).collect());
    (f, r)
}

/// The system with one F-symbol replaced.
pub fn with_f(sys: &FusionSystem, key: FKey, value: FieldElement) -> fsys::Result<FusionSystem> {
    let mut f = sys.f_symbols().clone();
    f.insert(key, value);
    FusionSystem::new(sys.ring().clone(), sys.field().clone(), f, sys.p_symbols().to_vec(), sys.r_symbols().cloned())
}

/// The system with one R-symbol replaced.
pub fn with_r(sys: &FusionSystem, key: RKey, value: FieldElement) -> fsys::Result<FusionSystem> {
    let mut r = sys.r_symbols().cloned().unwrap_or_default();
    r.insert(key, value);
    FusionSystem::new(sys.ring().clone(), sys.field().clone(), sys.f_symbols().clone(), sys.p_symbols().to_vec(), Some(r))
}

/// Dump text in the dictionary style, entries shuffled.
pub fn to_dump(sys: &FusionSystem, layout: fsys::io::KeyLayout, seed: u64) -> String {
    let var = "_a";
    let v = |x: &fsys_algebra::FieldElement| {
        let p = x.to_poly();
        if p.is_zero() {
            "0".to_string()
        } else {
            p.display_with(var).replace('/', "//")
        }
    };
    let mut lines = Vec::new();
    for (&[i, j, k, l, m, n], x) in sys.f_symbols() {
        let (s4, s7) = match layout {
            fsys::io::KeyLayout::MFirst => (m, n),
            fsys::io::KeyLayout::NFirst => (n, m),
        };
        lines.push(format!("  [{}, {}, {}, {}, {}, 1, 1, {}, 1, 1] => {}", i + 1, j + 1, k + 1, l + 1, s4 + 1, s7 + 1, v(x)));
    }
    if let Some(r) = sys.r_symbols() {
        for (&[i, j, k], x) in r {
            lines.push(format!("  [{}, {}, {}, 1, 1] => {}", i + 1, j + 1, k + 1, v(x)));
        }
    }
    for (a, x) in sys.p_symbols().iter().enumerate() {
        lines.push(format!("  [{}] => {}", a + 1, v(x)));
    }
    lines.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    format!("Dict{{Vector{{Int64}}, AbsSimpleNumFieldElem}} with {} entries:\n{}\n", lines.len(), lines.join("\n"))
}

/// Stems of the checked-in system fixtures.
pub const fn all_fixture_names() -> [&'static str; 11] {
    ["trivial", "z2", "z2_twisted", "z2_symmetric", "semion", "z3_0", "z3_1", "z3_2", "fibonacci", "fibonacci_braided", "rep_s3"]
}
