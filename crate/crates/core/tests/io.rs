mod common;

use common::*;
use fsys::io::{import_dump, load, load_ring, parse_dump, save, save_ring, KeyLayout, SystemFile};
use fsys::verify::verify_pentagon;
use fsys::{rings, FusionError};
use fsys_algebra::{NumberField, RatPoly};

#[test]
fn fixture_files_round_trip_byte_for_byte() {
    for (name, _) in all_fixtures() {
        let text = read_fixture(name);
        assert_eq!(save(&load(&text).unwrap()), text, "{name}");
    }
    let ring = read_fixture("h3.ring");
    let file = load(&ring).unwrap();
    assert!(file.system.is_none());
    assert_eq!(save(&file), ring);
}

#[test]
fn fibonacci_file_loads_and_verifies() {
    let file = load(&read_fixture("fibonacci.fsys")).unwrap();
    assert_eq!(file.name.as_deref(), Some("fibonacci"));
    assert_eq!(file.embedding, Some(1));
    assert!(verify_pentagon(file.require_system().unwrap()).ok);
}

const TRIVIAL_HEAD: &str = "fsys 1\nrank 1\ndual 1\nfusion\n1 1 1 1\nend\nfield 0/1 1/1\nvar a\n";

#[test]
fn inadmissible_key_is_rejected() {
    let text = format!("{TRIVIAL_HEAD}F\n1,1,1,1,2,1,1,1,1,1 : 1/1\nend\nP\n1 : 1/1\nend\n");
    assert!(matches!(load(&text), Err(FusionError::InadmissibleKey(_))), "{:?}", load(&text));
}

#[test]
fn loader_errors() {
    let ok = format!("{TRIVIAL_HEAD}F\n1,1,1,1,1,1,1,1,1,1 : 1/1\nend\nP\n1 : 1/1\nend\n");
    assert!(load(&ok).is_ok());
    let cases: Vec<(String, &str)> = vec![
        (ok.replace("fsys 1", "fsys 2"), "version"),
        (ok.replace("1,1,1,1,1,1,1,1,1,1 : 1/1", "1,1,1,1,1,1,1,1,1,1 : 1/1 2/1"), "coefficient count"),
        (ok.replace("1,1,1,1,1,1,1,1,1,1 : 1/1", "1,1,1,1,1,1,1,1,1,1 : 1/0"), "zero denominator"),
        (ok.replace("1,1,1,1,1,1,1,1,1,1 : 1/1\n", ""), "missing symbol"),
        (ok.replace("1,1,1,1,1,1,1,1,1,1", "1,1,1,1,1,2,1,1,1,1"), "multiplicity slot"),
        (ok.replace("1 : 1/1\nend\n", "1 : 0/1\nend\n"), "zero pivotal"),
        (ok.replace("rank 1", "rank 300"), "rank bound"),
        (ok.replace("end\nP", "P"), "unterminated block"),
        (ok.replace("field 0/1 1/1", "field 0/1 2/1"), "non-monic"),
        (ok.replace("dual 1", "dual 2"), "bad dual"),
        (ok.replace("rank 1\n", ""), "no rank"),
        (String::new(), "empty"),
    ];
    for (text, what) in cases {
        assert!(load(&text).is_err(), "{what} accepted");
    }
}

#[test]
fn ring_files() {
    let text = save_ring(&rings::fibonacci(), Some("fib"));
    assert_eq!(load_ring(&text).unwrap(), rings::fibonacci());
    assert!(load_ring(&text.replace("2 2 2 1", "2 2 2 2")).is_ok_and(|r| !r.is_multiplicity_free()));
}

#[test]
fn metadata_is_kept() {
    let sys = z2(true);
    let file = SystemFile::from_system(sys).with_name("twisted z2").with_source("hand  built\ntable");
    let back = load(&save(&file)).unwrap();
    assert_eq!(back.name.as_deref(), Some("twisted z2"));
    assert_eq!(back.source.as_deref(), Some("hand built table"));
}

#[test]
fn dumps_import_in_either_layout() {
    for sys in [fibonacci_braided(), rep_s3(), z3(1)] {
        for layout in [KeyLayout::MFirst, KeyLayout::NFirst] {
            let text = to_dump(&sys, layout, 1);
            let (back, found) = import_dump(&text, sys.ring(), sys.field()).unwrap();
            assert_eq!(back, sys);
            assert_eq!(found, layout);
        }
    }
}

#[test]
fn toy_dump_parses_exactly() {
    let k = cyclo(5);
    let text = "  [2, 2, 2, 1, 1] => -1//3*_a^3 + 2\n  [1, 1, 1, 1, 1, 1, 1, 1, 1, 1] => 1\n  [2] => _a^4 - _a\n";
    let e = parse_dump(text, &k).unwrap();
    let a = k.generator();
    assert_eq!(e.r, vec![([2, 2, 2, 1, 1], &k.from_int(2) - &a.pow(3).unwrap().scale(&fsys_algebra::rational::ratio(1, 3)))]);
    assert_eq!(e.f, vec![([1; 10], k.one())]);
    assert_eq!(e.p, vec![(2, &a.pow(4).unwrap() - &a)]);
}

#[test]
fn center_excerpt_parses() {
    // keys and coefficients do not depend on the defining polynomial, so a
    // stand-in field of degree 48 is enough here
    let field = NumberField::new_unchecked(&RatPoly::from_ints(&{
        let mut c = vec![0i64; 49];
        c[0] = 1;
        c[48] = 1;
        c
    }));
    let e = parse_dump(&read_fixture("zh3_excerpt.dump"), &field).unwrap();
    assert_eq!(e.f.len(), 3);
    assert_eq!(e.f[0].0, [4, 12, 9, 5, 7, 1, 1, 6, 1, 1]);
    let c = e.f[0].1.coeffs();
    assert_eq!(c[47], fsys_algebra::rational::ratio(611786, 765375));
    assert_eq!(c[0], fsys_algebra::rational::ratio(-3134042, 331662));
    assert_eq!(e.p.len(), 12);
    assert!(e.p.iter().all(|(_, v)| v.is_one()));
    let mut labels: Vec<usize> = e.p.iter().map(|(a, _)| *a).collect();
    labels.sort();
    assert_eq!(labels, (1..=12).collect::<Vec<_>>());
}

#[test]
fn dump_errors() {
    let q = NumberField::rationals();
    assert!(matches!(parse_dump("[1] => 611786//0", &q), Err(FusionError::ValueParse { .. })));
    assert!(matches!(parse_dump("[1] => 2*_a^99999999999", &q), Err(FusionError::ValueParse { .. })));
    assert!(matches!(parse_dump("[1, 2] => 1", &q), Err(FusionError::Parse { .. })));
    assert!(matches!(parse_dump("[0] => 1", &q), Err(FusionError::Parse { .. })));
    assert!(matches!(parse_dump("1 => 1", &q), Err(FusionError::Parse { .. })));
    // truncated printout
    assert!(parse_dump("[7, 3, 4, 1, 1] => -10068//86125*_a^47 - 1234//17225*_a^46 + 341//86125*_", &q).is_err());
    let ring = rings::cyclic(2);
    let bad = "[1,1,1,1,1,1,1,1,1,1] => 1\n[1,1,2,2,1,1,1,2,1,1] => 1\n[1,2,1,2,2,1,1,2,1,1] => 1\n[1,2,2,1,2,1,1,1,1,1] => 1\n\
               [2,1,1,2,2,1,1,1,1,1] => 1\n[2,1,2,1,2,1,1,2,1,1] => 1\n[2,2,1,1,1,1,1,2,1,1] => 1\n[2,2,2,2,1,1,1,1,1,1] => 2\n[1] => 1\n[2] => 1\n";
    assert!(matches!(import_dump(bad, &ring, &q), Err(FusionError::LayoutAmbiguous)));
    let three = bad.replace("[2] => 1", "[3] => 1");
    assert!(matches!(import_dump(&three, &ring, &q), Err(FusionError::BadLabel(3))));
    let multi = bad.replace("[1,1,1,1,1,1,1,1,1,1]", "[1,1,1,1,1,2,1,1,1,1]");
    assert!(matches!(import_dump(&multi, &ring, &q), Err(FusionError::NotMultiplicityFree)));
}
