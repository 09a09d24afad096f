mod common;

use common::gsb_props::{check_gsb, Counts};
use common::oracle::gauge_column;
use common::*;
use fsys::automorphism::{apply_automorphism, find_ring_automorphisms};
use fsys::dims::quantum_dimensions;
use fsys::gauge::*;
use fsys::verify::verify_pentagon;
use fsys::{FusionError, FusionSystem};
use fsys_algebra::{is_isomorphic, BigInt, NumberField, RatPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(sys: &FusionSystem, parts: &[(Symbol, i64)]) -> FormalWord {
    FormalWord::from_symbols(&enumerate_symbols(sys), parts).unwrap()
}

/// 1-based key, as in symbol names.
fn f(k: [usize; 6]) -> Symbol {
    Symbol::F(k.map(|x| x - 1))
}

#[test]
fn trivial_category_basis() {
    let sys = load_fixture("trivial.fsys");
    let gsb = compute_gsb(&sys).unwrap();
    assert_eq!(gsb.index.symbols, vec![Symbol::F([0; 6]), Symbol::P(0)]);
    assert_eq!(gsb.exponents.m.rows(), 1);
    assert!(gsb.exponents.m.row(0).iter().all(|x| *x == BigInt::from(0)));
    assert!(gsb.d.is_empty());
    assert_eq!(gsb.i.len(), 2);
    assert!(minimal_field(&sys).unwrap().field.degree() == 1);
}

#[test]
fn exponent_matrix_matches_expansion() {
    for (name, sys) in all_fixtures() {
        let index = enumerate_symbols(&sys);
        let m = build_exponent_matrix(sys.ring(), &index);
        assert_eq!(m.vars, sys.ring().vertices());
        for (c, &pos) in m.columns.iter().enumerate() {
            let col: Vec<i64> = (0..m.vars.len()).map(|r| i64::try_from(m.m.get(r, c)).unwrap()).collect();
            match index.symbols[pos] {
                Symbol::F(k) => {
                    let oracle: Vec<i64> = gauge_column(sys.ring(), &k).iter().map(|x| *x as i64).collect();
                    assert_eq!(col, oracle, "{name} {k:?}");
                }
                Symbol::P(_) => {}
            }
            // a constant gauge fixes everything
            assert_eq!(col.iter().sum::<i64>(), 0, "{name}");
        }
    }
}

#[test]
fn zero_symbols_are_masked_and_last() {
    let sys = rep_s3();
    let index = enumerate_symbols(&sys);
    let zeros: Vec<Symbol> = (0..index.len()).filter(|&i| index.zero_mask[i]).map(|i| index.symbols[i]).collect();
    assert_eq!(zeros, vec![Symbol::F([2; 6])]);
    let order = index.k_order();
    assert_eq!(index.symbols[*order.last().unwrap()], Symbol::F([2; 6]));
    let gsb = compute_gsb(&sys).unwrap();
    assert_eq!(gsb.exponents.m.cols(), index.len() - 1);
    assert_eq!(*gsb.i.last().unwrap(), FormalWord::unit(index.len(), index.position(&Symbol::F([2; 6])).unwrap()));
}

#[test]
fn gsb_properties_hold_on_every_fixture() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, sys) in all_fixtures() {
        let gsb = compute_gsb(&sys).unwrap();
        check_gsb(&sys, &gsb, Counts { gauges: 10, targets: 4, words: 30 }, &mut rng).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(gsb.rank, gsb.smith.rank());
    }
}

#[test]
fn seeded_bases_are_also_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for sys in [fibonacci_pivotal(), z3(1), rep_s3()] {
        let base = compute_gsb(&sys).unwrap();
        let mut differs = false;
        for seed in [1, 2, 3] {
            let gsb = compute_gsb_seeded(&sys, seed).unwrap();
            check_gsb(&sys, &gsb, Counts { gauges: 3, targets: 2, words: 20 }, &mut rng).unwrap();
            differs |= gsb.i != base.i || gsb.d != base.d;
        }
        assert!(differs);
    }
}

#[test]
fn evaluation_errors() {
    let sys = rep_s3();
    let index = enumerate_symbols(&sys);
    assert!(evaluate_word(&sys, &index, &FormalWord::empty(index.len())).unwrap().is_one());
    let z = index.position(&Symbol::F([2; 6])).unwrap();
    let inv = FormalWord::unit(index.len(), z).pow(-1);
    assert!(matches!(evaluate_word(&sys, &index, &inv), Err(FusionError::ZeroToNegativePower(_))));
    assert!(matches!(invariance_check(&sys, &inv), Err(FusionError::ZeroToNegativePower(_))));
    let long = FormalWord::unit(index.len() + 1, index.len());
    assert!(matches!(evaluate_word(&sys, &index, &long), Err(FusionError::UndefinedSymbol(_))));
}

#[test]
fn fibonacci_invariant_words_from_the_worked_example() {
    let sys = fibonacci_pivotal();
    let phi = sys.field().generator();
    let d1 = (f([1, 1, 2, 2, 1, 2]), 1);
    let d2 = (f([2, 1, 1, 2, 2, 1]), 1);
    let invariant = vec![
        word(&sys, &[(f([1, 1, 1, 1, 1, 1]), 1)]),
        word(&sys, &[(f([1, 2, 1, 2, 2, 2]), 1)]),
        word(&sys, &[(Symbol::P(0), 1)]),
        word(&sys, &[(f([1, 1, 2, 2, 1, 2]), 1), (f([1, 2, 2, 1, 2, 1]), 1)]),
        word(&sys, &[(f([2, 1, 1, 2, 2, 1]), 1), (f([2, 2, 1, 1, 1, 2]), 1)]),
        word(&sys, &[(f([2, 1, 2, 1, 2, 2]), 1), (f([1, 1, 2, 2, 1, 2]), -1), (f([2, 1, 1, 2, 2, 1]), -1)]),
        word(&sys, &[d1, d2, (f([2, 2, 2, 2, 1, 1]), 1)]),
        word(&sys, &[(Symbol::P(1), 1), d1, d2]),
    ];
    for w in &invariant {
        let inv = invariance_check(&sys, w).unwrap();
        assert!(inv.de_facto && inv.de_jure, "{}", w.display(&enumerate_symbols(&sys)));
    }
    for w in [word(&sys, &[d1]), word(&sys, &[d2])] {
        assert_eq!(invariance_check(&sys, &w).unwrap(), Invariance { de_jure: false, de_facto: false });
    }
    let target = word(&sys, &[d1, d2, (f([2, 2, 2, 2, 1, 1]), 1)]);
    let index = enumerate_symbols(&sys);
    assert_eq!(evaluate_word(&sys, &index, &target).unwrap(), phi.inv().unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..5 {
        let moved = apply_gauge(&sys, &random_gauge(sys.ring(), sys.field(), &mut rng)).unwrap();
        assert_eq!(evaluate_word(&moved, &index, &target).unwrap(), phi.inv().unwrap());
    }
    let gsb = compute_gsb(&sys).unwrap();
    let dec = word_decompose(&gsb, &target).unwrap();
    assert!(dec.b.iter().all(|&b| b == 0));
    assert_eq!(gsb.recompose(&dec), target);
    for (t, w) in gsb.i.iter().enumerate() {
        let dec = word_decompose(&gsb, w).unwrap();
        let unit: Vec<i64> = (0..gsb.i.len()).map(|s| i64::from(s == t)).collect();
        assert_eq!(dec.a, unit);
    }
}

#[test]
fn de_facto_without_de_jure_needs_a_zero() {
    let sys = rep_s3();
    let index = enumerate_symbols(&sys);
    let dependent = index.symbols.iter().find(|s| !invariance_check(&sys, &word(&sys, &[(**s, 1)])).unwrap().de_facto).copied().unwrap();
    let w = word(&sys, &[(Symbol::F([2; 6]), 1), (dependent, 1)]);
    assert_eq!(invariance_check(&sys, &w).unwrap(), Invariance { de_jure: false, de_facto: true });
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (_, s) in all_fixtures() {
        let idx = enumerate_symbols(&s);
        for _ in 0..30 {
            let w = common::gsb_props::random_word(idx.len(), &mut rng);
            let w = FormalWord { exponents: w.exponents.iter().zip(&idx.zero_mask).map(|(e, z)| if *z { e.abs() } else { *e }).collect() };
            let inv = invariance_check(&s, &w).unwrap();
            assert!(!inv.de_jure || inv.de_facto);
        }
    }
}

#[test]
fn gauge_round_trip_and_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (name, sys) in all_fixtures() {
        assert_eq!(apply_gauge(&sys, &GaugeAssignment::identity(sys.ring(), sys.field())).unwrap(), sys, "{name}");
        let g = random_gauge(sys.ring(), sys.field(), &mut rng);
        let moved = apply_gauge(&sys, &g).unwrap();
        assert!(verify_pentagon(&moved).ok, "{name}");
        assert_eq!(quantum_dimensions(&moved).unwrap(), quantum_dimensions(&sys).unwrap(), "{name}");
        if sys.is_braided() {
            assert!(fsys::verify::verify_hexagon(&moved).unwrap().ok, "{name}");
        }
        assert_eq!(apply_gauge(&moved, &g.inverse().unwrap()).unwrap(), sys, "{name}");
    }
}

#[test]
fn gauge_assignment_errors() {
    let sys = fibonacci_pivotal();
    let mut g = GaugeAssignment::identity(sys.ring(), sys.field());
    g.values.remove(&[1, 1, 1]);
    assert!(matches!(apply_gauge(&sys, &g), Err(FusionError::IncompleteAssignment(_))));
    let mut g = GaugeAssignment::identity(sys.ring(), sys.field());
    g.values.insert([1, 1, 0], sys.field().zero());
    assert!(matches!(apply_gauge(&sys, &g), Err(FusionError::ZeroGaugeValue(_))));
    assert!(matches!(g.inverse(), Err(FusionError::ZeroGaugeValue(_))));
    let q = NumberField::rationals();
    let g = GaugeAssignment::identity(sys.ring(), &q);
    assert!(matches!(apply_gauge(&sys, &g), Err(FusionError::DegreeMismatch)));
}

#[test]
fn solving_for_current_values_and_for_ones() {
    let sys = fibonacci_pivotal();
    let gsb = compute_gsb(&sys).unwrap();
    let current: Vec<_> = gsb.d.iter().map(|w| evaluate_word(&sys, &gsb.index, w).unwrap()).collect();
    let sol = solve_gauge_for_targets(&sys, &gsb, &current, SolveOptions::default()).unwrap();
    assert_eq!(apply_gauge(&sys, &sol.gauge).unwrap(), sys);
    let ones = vec![sys.field().one(); gsb.d.len()];
    let sol = solve_gauge_for_targets(&sys, &gsb, &ones, SolveOptions::default()).unwrap();
    let moved = apply_gauge(&sys, &sol.gauge).unwrap();
    assert!(gsb.d.iter().all(|w| evaluate_word(&moved, &gsb.index, w).unwrap().is_one()));
    assert!(matches!(solve_gauge_for_targets(&sys, &gsb, &ones[1..], SolveOptions::default()), Err(FusionError::TargetCount { .. })));
    let mut zero = ones.clone();
    zero[0] = sys.field().zero();
    assert!(matches!(solve_gauge_for_targets(&sys, &gsb, &zero, SolveOptions::default()), Err(FusionError::ZeroTarget(1))));
}

/// A basis whose first dependent word is squared, so reaching a target
/// needs a square root.
fn squared_basis(sys: &FusionSystem) -> GaugeSplitBasis {
    let mut gsb = compute_gsb(sys).unwrap();
    gsb.d[0] = gsb.d[0].pow(2);
    let s = gsb.smith.s.get(0, 0).clone();
    gsb.smith.s.set(0, 0, s * 2);
    gsb
}

#[test]
fn missing_radical_is_reported_or_adjoined() {
    let sys = z2(true);
    let gsb = squared_basis(&sys);
    let q = sys.field();
    let mut targets = vec![q.one(); gsb.d.len()];
    targets[0] = q.from_int(3);
    match solve_gauge_for_targets(&sys, &gsb, &targets, SolveOptions::default()) {
        Err(FusionError::RootNotInField { poly, q: 2, .. }) => assert_eq!(poly, RatPoly::from_ints(&[-3, 0, 1])),
        other => panic!("{other:?}"),
    }
    let sol = solve_gauge_for_targets(&sys, &gsb, &targets, SolveOptions { extend_field: true }).unwrap();
    assert_eq!(sol.field.degree(), 2);
    let moved = apply_gauge(&sol.lift(&sys).unwrap(), &sol.gauge).unwrap();
    assert_eq!(evaluate_word(&moved, &gsb.index, &gsb.d[0]).unwrap(), sol.field.from_int(3));
    // a square target needs no extension
    targets[0] = q.from_int(4);
    let sol = solve_gauge_for_targets(&sys, &gsb, &targets, SolveOptions::default()).unwrap();
    assert!(sol.inclusion.is_none());
}

#[test]
fn minimal_fields_of_fixtures() {
    let cases: [(&str, &[i64]); 8] = [
        ("z2.fsys", &[0, 1]),
        ("z2_twisted.fsys", &[0, 1]),
        ("z3_0.fsys", &[0, 1]),
        ("z3_1.fsys", &[1, 1, 1]),
        ("z3_2.fsys", &[1, 1, 1]),
        ("fibonacci.fsys", &[-1, -1, 1]),
        ("fibonacci_braided.fsys", &[-1, -1, 1]),
        ("rep_s3.fsys", &[0, 1]),
    ];
    for (name, poly) in cases {
        let sys = load_fixture(name);
        let min = minimal_field(&sys).unwrap();
        let expected = NumberField::new(&RatPoly::from_ints(poly)).unwrap();
        assert!(is_isomorphic(&min.field, &expected).unwrap(), "{name}: {}", min.field.defining_poly());
    }
}

#[test]
fn regauge_lands_in_the_minimal_field() {
    for (name, sys) in all_fixtures() {
        let gsb = compute_gsb(&sys).unwrap();
        let min = minimal_field_with(&sys, &gsb).unwrap();
        let out = regauge_with(&sys, &gsb, &min).unwrap();
        assert!(out.field().same(&min.field), "{name}");
        assert!(verify_pentagon(&out).ok, "{name}");
        assert!(!out.is_braided());
        let out_gsb = compute_gsb(&out).unwrap();
        assert_eq!(out_gsb.index, gsb.index, "{name}");
        for (w, v) in gsb.i.iter().zip(&min.invariant_values) {
            assert_eq!(evaluate_word(&out, &out_gsb.index, w).unwrap(), *v, "{name}");
        }
        for w in &gsb.d {
            assert!(evaluate_word(&out, &out_gsb.index, w).unwrap().is_one(), "{name}");
        }
        let embed = |x: &fsys_algebra::FieldElement| min.subfield.to_host(x).unwrap();
        let dims = quantum_dimensions(&out).unwrap().left;
        let host_dims = quantum_dimensions(&sys).unwrap().left;
        assert_eq!(dims.iter().map(embed).collect::<Vec<_>>(), host_dims, "{name}");
    }
}

#[test]
fn twisted_z2_regauges_to_signs() {
    let out = regauge_minimal(&z2(true)).unwrap();
    assert_eq!(out.field().degree(), 1);
    let one = out.field().one();
    assert!(out.f_symbols().values().all(|v| *v == one || *v == -&one));
}

#[test]
fn minimal_field_is_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for sys in [fibonacci_pivotal(), z3(1), rep_s3()] {
        let base = minimal_field(&sys).unwrap().field;
        let other = minimal_field_with(&sys, &compute_gsb_seeded(&sys, 77).unwrap()).unwrap().field;
        assert!(is_isomorphic(&base, &other).unwrap());
        for sigma in find_ring_automorphisms(sys.ring()).unwrap() {
            let moved = apply_automorphism(&sys, &sigma).unwrap();
            assert!(is_isomorphic(&base, &minimal_field(&moved).unwrap().field).unwrap());
        }
        for _ in 0..3 {
            let moved = apply_gauge(&sys, &random_gauge(sys.ring(), sys.field(), &mut rng)).unwrap();
            assert!(is_isomorphic(&base, &minimal_field(&moved).unwrap().field).unwrap());
        }
    }
}

#[test]
fn fixtures_without_pentagon_still_get_a_basis() {
    let sys = fibonacci_pivotal();
    let sys = with_f(&sys, [1, 1, 1, 1, 1, 1], sys.field().from_int(5)).unwrap();
    assert!(!verify_pentagon(&sys).ok);
    let gsb = compute_gsb(&sys).unwrap();
    assert!(gsb.is_consistent());
}
