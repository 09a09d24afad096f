//! Line-based exact format. A file is a sequence of directives:
//!
//! ```text
//! fsys 1
//! name fibonacci
//! rank 2
//! dual 1 2
//! fusion
//! 1 1 1 1
//! ...
//! end
//! field -1/1 -1/1 1/1
//! var a
//! F
//! 1,1,1,1,1,1,1,1,1,1 : 1/1 0/1
//! end
//! P
//! 1 : 1/1 0/1
//! end
//! ```
//!
//! Labels are 1-based. F-keys are `(i,j,k,l,m,1,1,n,1,1)`, R-keys
//! `(i,j,k,1,1)`. Field coefficients run from the constant term up.

use std::collections::BTreeMap;
use std::fmt::Write;

use fsys_algebra::rational::{format_rational, parse_rational};
use fsys_algebra::{BigRational, FieldElement, NumberField, RatPoly};

use crate::error::{FusionError, Result};
use crate::ring::FusionRing;
use crate::system::{fkey_name, is_admissible, FKey, FusionSystem, RKey};

const VERSION: u32 = 1;
/// Upper bound on the rank accepted from files.
const MAX_RANK: usize = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct SystemFile {
    pub name: Option<String>,
    pub source: Option<String>,
    pub ring: FusionRing,
    pub system: Option<FusionSystem>,
    /// Canonical index of the complex embedding used for numeric output.
    pub embedding: Option<usize>,
}

impl SystemFile {
    pub fn ring_only(ring: FusionRing) -> Self {
        SystemFile { name: None, source: None, ring, system: None, embedding: None }
    }

    pub fn from_system(sys: FusionSystem) -> Self {
        SystemFile { name: None, source: None, ring: sys.ring().clone(), system: Some(sys), embedding: None }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_source(mut self, source: &str) -> Self {
        self.source = Some(source.to_string());
        self
    }

    /// The system, or a parse error naming what is missing.
    pub fn require_system(&self) -> Result<&FusionSystem> {
        self.system.as_ref().ok_or(FusionError::RingOnly)
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn write_coeffs(out: &mut String, x: &FieldElement) {
    let parts: Vec<String> = x.coeffs().iter().map(format_rational).collect();
    out.push_str(&parts.join(" "));
}

pub fn save(file: &SystemFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "fsys {VERSION}");
    if let Some(n) = &file.name {
        let _ = writeln!(out, "name {}", one_line(n));
    }
    if let Some(s) = &file.source {
        let _ = writeln!(out, "source {}", one_line(s));
    }
    let ring = &file.ring;
    let r = ring.rank();
    let _ = writeln!(out, "rank {r}");
    let default_names: Vec<String> = (1..=r).map(|i| i.to_string()).collect();
    if ring.names() != default_names.as_slice() {
        let _ = writeln!(out, "names {}", ring.names().join(" "));
    }
    let _ = writeln!(out, "dual {}", ring.duals().iter().map(|d| (d + 1).to_string()).collect::<Vec<_>>().join(" "));
    out.push_str("fusion\n");
    for (i, j, k, c) in ring.entries() {
        let _ = writeln!(out, "{} {} {} {}", i + 1, j + 1, k + 1, c);
    }
    out.push_str("end\n");
    if let Some(sys) = &file.system {
        let field = sys.field();
        let poly: Vec<String> = field.defining_poly().coeffs().iter().map(format_rational).collect();
        let _ = writeln!(out, "field {}", poly.join(" "));
        let _ = writeln!(out, "var {}", field.var());
        if let Some(e) = file.embedding {
            let _ = writeln!(out, "embedding {e}");
        }
        out.push_str("F\n");
        for (&[i, j, k, l, m, n], v) in sys.f_symbols() {
            let _ = write!(out, "{},{},{},{},{},1,1,{},1,1 : ", i + 1, j + 1, k + 1, l + 1, m + 1, n + 1);
            write_coeffs(&mut out, v);
            out.push('\n');
        }
        out.push_str("end\nP\n");
        for (a, v) in sys.p_symbols().iter().enumerate() {
            let _ = write!(out, "{} : ", a + 1);
            write_coeffs(&mut out, v);
            out.push('\n');
        }
        out.push_str("end\n");
        if let Some(rs) = sys.r_symbols() {
            out.push_str("R\n");
            for (&[i, j, k], v) in rs {
                let _ = write!(out, "{},{},{},1,1 : ", i + 1, j + 1, k + 1);
                write_coeffs(&mut out, v);
                out.push('\n');
            }
            out.push_str("end\n");
        }
    }
    out
}

pub fn save_ring(ring: &FusionRing, name: Option<&str>) -> String {
    let mut f = SystemFile::ring_only(ring.clone());
    f.name = name.map(str::to_string);
    save(&f)
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#')).collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let x = self.items.get(self.pos).copied();
        self.pos += 1;
        x
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(0, |x| x.0)
    }
}

fn perr(line: usize, msg: impl Into<String>) -> FusionError {
    FusionError::Parse { line, msg: msg.into() }
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| perr(line, format!("expected a nonnegative integer, found {s:?}")))
}

fn parse_label(line: usize, s: &str, rank: usize) -> Result<usize> {
    let x = parse_usize(line, s)?;
    if x == 0 || x > rank {
        return Err(perr(line, format!("label {x} outside 1..={rank}")));
    }
    Ok(x - 1)
}

fn parse_coeffs(line: usize, s: &str, field: &NumberField) -> Result<FieldElement> {
    let coeffs = s.split_whitespace().map(|t| parse_rational(t).map_err(|e| perr(line, e.to_string()))).collect::<Result<Vec<BigRational>>>()?;
    if coeffs.len() != field.degree() {
        return Err(FusionError::DegreeMismatch);
    }
    Ok(field.from_coeffs(coeffs)?)
}

/// Splits `key : coeffs` and parses the comma-separated key.
fn parse_entry(line: usize, s: &str, rank: usize, len: usize) -> Result<(Vec<usize>, &str)> {
    let (k, v) = s.split_once(':').ok_or_else(|| perr(line, "expected `key : coefficients`"))?;
    let parts: Vec<&str> = k.split(',').map(str::trim).collect();
    if parts.len() != len {
        return Err(perr(line, format!("key must have {len} entries")));
    }
    let raw = parts.iter().map(|p| parse_usize(line, p)).collect::<Result<Vec<_>>>()?;
    if raw.contains(&0) {
        return Err(perr(line, "labels start at 1"));
    }
    if raw.iter().any(|&x| x > rank) {
        // a label the ring does not have makes the key inadmissible
        let shown: Vec<String> = raw.iter().map(|x| x.to_string()).collect();
        return Err(FusionError::InadmissibleKey(format!("[{}]", shown.join(","))));
    }
    Ok((raw.into_iter().map(|x| x - 1).collect(), v))
}

fn multiplicity_slots(line: usize, key: &[usize], slots: &[usize]) -> Result<()> {
    if slots.iter().any(|&s| key[s] != 0) {
        return Err(perr(line, "multiplicity indices must be 1"));
    }
    Ok(())
}

pub fn load(text: &str) -> Result<SystemFile> {
    let mut lines = Lines::new(text);
    let (l0, head) = lines.next().ok_or_else(|| perr(0, "empty file"))?;
    match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["fsys", v] if *v == VERSION.to_string() => {}
        _ => return Err(perr(l0, format!("expected header `fsys {VERSION}`"))),
    }
    let mut name = None;
    let mut source = None;
    let mut rank: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut dual: Option<Vec<usize>> = None;
    let mut ring: Option<FusionRing> = None;
    let mut field: Option<NumberField> = None;
    let mut embedding = None;
    let mut f: Option<BTreeMap<FKey, FieldElement>> = None;
    let mut p: Option<Vec<Option<FieldElement>>> = None;
    let mut r: Option<BTreeMap<RKey, FieldElement>> = None;

    while let Some((ln, line)) = lines.next() {
        let (word, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(a, b)| (a, b.trim()));
        let need_rank = || rank.ok_or_else(|| perr(ln, "`rank` must come first"));
        let need_ring = |ring: &Option<FusionRing>| ring.clone().ok_or_else(|| perr(ln, "`fusion` block must come before symbols"));
        let need_field = |field: &Option<NumberField>| field.clone().ok_or_else(|| perr(ln, "`field` must come before symbols"));
        match word {
            "name" => name = Some(rest.to_string()),
            "source" => source = Some(rest.to_string()),
            "rank" => {
                let x = parse_usize(ln, rest)?;
                if x == 0 || x > MAX_RANK {
                    return Err(perr(ln, format!("rank must be in 1..={MAX_RANK}")));
                }
                rank = Some(x);
            }
            "names" => names = Some(rest.split_whitespace().map(str::to_string).collect()),
            "dual" => {
                let rk = need_rank()?;
                let d = rest.split_whitespace().map(|s| parse_label(ln, s, rk)).collect::<Result<Vec<_>>>()?;
                if d.len() != rk {
                    return Err(perr(ln, "dual needs one label per object"));
                }
                dual = Some(d);
            }
            "fusion" => {
                let rk = need_rank()?;
                let d = dual.clone().ok_or_else(|| perr(ln, "`dual` must come before `fusion`"))?;
                let mut entries = Vec::new();
                loop {
                    let (el, e) = lines.next().ok_or_else(|| perr(lines.last_line(), "unterminated fusion block"))?;
                    if e == "end" {
                        break;
                    }
                    let t: Vec<&str> = e.split_whitespace().collect();
                    if t.len() != 4 {
                        return Err(perr(el, "fusion entries are `i j k count`"));
                    }
                    let c: u32 = t[3].parse().map_err(|_| perr(el, "bad multiplicity"))?;
                    entries.push((parse_label(el, t[0], rk)?, parse_label(el, t[1], rk)?, parse_label(el, t[2], rk)?, c));
                }
                let mut rg = FusionRing::from_entries(rk, d, &entries)?;
                if let Some(n) = names.take() {
                    rg = rg.renamed(n).map_err(|e| perr(ln, e.to_string()))?;
                }
                ring = Some(rg);
            }
            "field" => {
                let coeffs = rest.split_whitespace().map(|t| parse_rational(t).map_err(|e| perr(ln, e.to_string()))).collect::<Result<Vec<_>>>()?;
                let poly = RatPoly::new(coeffs);
                if !poly.is_monic() {
                    return Err(perr(ln, "defining polynomial must be monic"));
                }
                field = Some(NumberField::new(&poly).map_err(|e| perr(ln, e.to_string()))?);
            }
            "var" => {
                let fl = need_field(&field)?;
                if rest.is_empty() || !rest.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(perr(ln, "variable names are alphanumeric"));
                }
                field = Some(fl.with_var(rest));
            }
            "embedding" => embedding = Some(parse_usize(ln, rest)?),
            "F" => {
                let rg = need_ring(&ring)?;
                let fl = need_field(&field)?;
                let mut map = BTreeMap::new();
                loop {
                    let (el, e) = lines.next().ok_or_else(|| perr(lines.last_line(), "unterminated F block"))?;
                    if e == "end" {
                        break;
                    }
                    let (k, v) = parse_entry(el, e, rg.rank(), 10)?;
                    multiplicity_slots(el, &k, &[5, 6, 8, 9])?;
                    let key = [k[0], k[1], k[2], k[3], k[4], k[7]];
                    if !is_admissible(&rg, &key) {
                        return Err(FusionError::InadmissibleKey(fkey_name(&key)));
                    }
                    if map.insert(key, parse_coeffs(el, v, &fl)?).is_some() {
                        return Err(perr(el, "duplicate key"));
                    }
                }
                f = Some(map);
            }
            "P" => {
                let rg = need_ring(&ring)?;
                let fl = need_field(&field)?;
                let mut vals = vec![None; rg.rank()];
                loop {
                    let (el, e) = lines.next().ok_or_else(|| perr(lines.last_line(), "unterminated P block"))?;
                    if e == "end" {
                        break;
                    }
                    let (k, v) = parse_entry(el, e, rg.rank(), 1)?;
                    if vals[k[0]].replace(parse_coeffs(el, v, &fl)?).is_some() {
                        return Err(perr(el, "duplicate key"));
                    }
                }
                p = Some(vals);
            }
            "R" => {
                let rg = need_ring(&ring)?;
                let fl = need_field(&field)?;
                let mut map = BTreeMap::new();
                loop {
                    let (el, e) = lines.next().ok_or_else(|| perr(lines.last_line(), "unterminated R block"))?;
                    if e == "end" {
                        break;
                    }
                    let (k, v) = parse_entry(el, e, rg.rank(), 5)?;
                    multiplicity_slots(el, &k, &[3, 4])?;
                    let key = [k[0], k[1], k[2]];
                    if !rg.fuses(key[0], key[1], key[2]) {
                        return Err(FusionError::InadmissibleKey(crate::system::rkey_name(&key)));
                    }
                    if map.insert(key, parse_coeffs(el, v, &fl)?).is_some() {
                        return Err(perr(el, "duplicate key"));
                    }
                }
                r = Some(map);
            }
            _ => return Err(perr(ln, format!("unknown directive {word:?}"))),
        }
    }
    let ring = ring.ok_or_else(|| perr(lines.last_line(), "missing fusion block"))?;
    let system = match (field, f, p) {
        (_, None, None) if r.is_none() => None,
        (Some(field), Some(f), Some(p)) => {
            let p = p.into_iter().enumerate().map(|(a, v)| v.ok_or_else(|| FusionError::MissingSymbol(format!("P{}", a + 1)))).collect::<Result<Vec<_>>>()?;
            Some(FusionSystem::new(ring.clone(), field, f, p, r)?)
        }
        (None, _, _) => return Err(perr(lines.last_line(), "symbols without a field")),
        (_, None, _) => return Err(perr(lines.last_line(), "missing F block")),
        (_, _, None) => return Err(perr(lines.last_line(), "missing P block")),
    };
    Ok(SystemFile { name, source, ring, system, embedding })
}

pub fn load_ring(text: &str) -> Result<FusionRing> {
    Ok(load(text)?.ring)
}
