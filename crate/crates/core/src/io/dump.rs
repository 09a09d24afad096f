//! Importer for dictionary-style dumps, one entry per line:
//!
//! ```text
//! [4, 12, 9, 5, 7, 1, 1, 6, 1, 1] => 611786//765375*_a^47 - 3134042//331662
//! [7, 3, 4, 1, 1] => -10068//86125*_a^47 + 1
//! [3] => 1
//! ```
//!
//! Ten-entry keys are F-symbols, five-entry keys R-symbols and one-entry keys
//! P-symbols. Other lines are ignored.

use std::collections::BTreeMap;

use fsys_algebra::{FieldElement, NumberField, RatPoly};

use crate::error::{FusionError, Result};
use crate::ring::FusionRing;
use crate::system::{FKey, FusionSystem, RKey};
use crate::verify::verify_pentagon;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DumpEntries {
    pub f: Vec<([usize; 10], FieldElement)>,
    pub r: Vec<([usize; 5], FieldElement)>,
    pub p: Vec<(usize, FieldElement)>,
}

/// Which key slots carry the intermediate labels `m` and `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyLayout {
    /// `(i,j,k,l,m,·,·,n,·,·)`
    MFirst,
    /// `(i,j,k,l,n,·,·,m,·,·)`
    NFirst,
}

impl KeyLayout {
    fn key(self, t: &[usize; 10]) -> FKey {
        match self {
            KeyLayout::MFirst => [t[0], t[1], t[2], t[3], t[4], t[7]],
            KeyLayout::NFirst => [t[0], t[1], t[2], t[3], t[7], t[4]],
        }
    }
}

fn parse_value(text: &str, field: &NumberField) -> Result<FieldElement> {
    let bad = |reason: String| FusionError::ValueParse { text: text.to_string(), reason };
    let huge_exponent = text.split('^').skip(1).any(|t| t.trim_start().chars().take_while(char::is_ascii_digit).count() > 6);
    if huge_exponent {
        return Err(bad("exponent too large".into()));
    }
    let (poly, _) = RatPoly::parse(text).map_err(|e| bad(e.to_string()))?;
    Ok(field.from_poly(&poly))
}

/// Parses the entries of a dump with values in `field`. Keys stay 1-based.
pub fn parse_dump(text: &str, field: &NumberField) -> Result<DumpEntries> {
    let mut out = DumpEntries::default();
    for (ln, line) in text.lines().enumerate() {
        let Some((lhs, rhs)) = line.split_once("=>") else { continue };
        let lhs = lhs.trim();
        let inner = lhs
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| FusionError::Parse { line: ln + 1, msg: "key must be a bracketed list".into() })?;
        let key = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| FusionError::Parse { line: ln + 1, msg: format!("bad key {lhs}") })?;
        if key.contains(&0) {
            return Err(FusionError::Parse { line: ln + 1, msg: "labels are 1-based".into() });
        }
        let value = parse_value(rhs.trim(), field)?;
        match key.len() {
            10 => out.f.push((key.try_into().unwrap(), value)),
            5 => out.r.push((key.try_into().unwrap(), value)),
            1 => out.p.push((key[0], value)),
            n => return Err(FusionError::Parse { line: ln + 1, msg: format!("unexpected key length {n}") }),
        }
    }
    Ok(out)
}

fn build(entries: &DumpEntries, ring: &FusionRing, field: &NumberField, layout: KeyLayout) -> Result<FusionSystem> {
    let r = ring.rank();
    let label = |x: usize| if x <= r { Ok(x - 1) } else { Err(FusionError::BadLabel(x)) };
    let mut f: BTreeMap<FKey, FieldElement> = BTreeMap::new();
    for (k, v) in &entries.f {
        if [5, 6, 8, 9].iter().any(|&s| k[s] != 1) {
            return Err(FusionError::NotMultiplicityFree);
        }
        let t: [usize; 10] = k.iter().map(|&x| label(x)).collect::<Result<Vec<_>>>()?.try_into().expect("ten labels");
        f.insert(layout.key(&t), v.clone());
    }
    let mut p = vec![None; r];
    for (a, v) in &entries.p {
        p[label(*a)?] = Some(v.clone());
    }
    let p = p.into_iter().enumerate().map(|(a, v)| v.ok_or_else(|| FusionError::MissingSymbol(format!("P{}", a + 1)))).collect::<Result<_>>()?;
    let rs = if entries.r.is_empty() {
        None
    } else {
        let mut m: BTreeMap<RKey, FieldElement> = BTreeMap::new();
        for (k, v) in &entries.r {
            if k[3] != 1 || k[4] != 1 {
                return Err(FusionError::NotMultiplicityFree);
            }
            m.insert([label(k[0])?, label(k[1])?, label(k[2])?], v.clone());
        }
        Some(m)
    };
    FusionSystem::new(ring.clone(), field.clone(), f, p, rs)
}

/// Builds and verifies a system from a dump, trying both placements of the
/// intermediate labels and keeping the first whose pentagon report passes.
pub fn import_dump(text: &str, ring: &FusionRing, field: &NumberField) -> Result<(FusionSystem, KeyLayout)> {
    let entries = parse_dump(text, field)?;
    let mut first_err = None;
    for layout in [KeyLayout::MFirst, KeyLayout::NFirst] {
        match build(&entries, ring, field, layout) {
            Ok(sys) if verify_pentagon(&sys).ok => return Ok((sys, layout)),
            Ok(_) => {}
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match first_err {
        Some(e @ (FusionError::ValueParse { .. } | FusionError::NotMultiplicityFree | FusionError::BadLabel(_))) => Err(e),
        _ => Err(FusionError::LayoutAmbiguous),
    }
}
