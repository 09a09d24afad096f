//! Multiplicity-free fusion systems: F-, P- and optional R-symbols over a
//! number field, stored sparsely on admissible keys.

use std::collections::BTreeMap;

use fsys_algebra::{FieldElement, NumberField};

use crate::error::{FusionError, Result};
use crate::linalg::{self, FieldMatrix};
use crate::ring::FusionRing;

/// `(i, j, k, l, m, n)`: the F-symbol with `m` in `i ⊗ j` and `n` in `j ⊗ k`.
pub type FKey = [usize; 6];
/// `(i, j, k)`: the R-symbol of the vertex `i ⊗ j → k`.
pub type RKey = [usize; 3];

pub fn is_admissible(ring: &FusionRing, key: &FKey) -> bool {
    let [i, j, k, l, m, n] = *key;
    let r = ring.rank();
    key.iter().all(|&x| x < r) && ring.fuses(i, j, m) && ring.fuses(m, k, l) && ring.fuses(j, k, n) && ring.fuses(i, n, l)
}

/// All admissible F-keys in lexicographic order.
pub fn f_keys(ring: &FusionRing) -> Vec<FKey> {
    let r = ring.rank();
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    for m in 0..r {
                        if !ring.fuses(i, j, m) || !ring.fuses(m, k, l) {
                            continue;
                        }
                        for n in 0..r {
                            if ring.fuses(j, k, n) && ring.fuses(i, n, l) {
                                out.push([i, j, k, l, m, n]);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn r_keys(ring: &FusionRing) -> Vec<RKey> {
    ring.vertices()
}

/// 1-based display of an F-key.
pub fn fkey_name(key: &FKey) -> String {
    format!("F{}", key.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(","))
}

pub fn rkey_name(key: &RKey) -> String {
    format!("R{}", key.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(","))
}

/// A square block `[F^l_{i,j,k}]`: rows indexed by `m`, columns by `n`.
#[derive(Clone, Debug)]
pub struct FBlock {
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    pub entries: FieldMatrix,
}

impl FBlock {
    pub fn inverse(&self) -> Option<FieldMatrix> {
        if self.ms.len() != self.ns.len() {
            return None;
        }
        linalg::invert(&self.entries)
    }
}

#[derive(Clone, Debug)]
pub struct FusionSystem {
    ring: FusionRing,
    field: NumberField,
    f: BTreeMap<FKey, FieldElement>,
    p: Vec<FieldElement>,
    r: Option<BTreeMap<RKey, FieldElement>>,
}

impl PartialEq for FusionSystem {
    fn eq(&self, o: &Self) -> bool {
        self.ring == o.ring && self.field == o.field && self.f == o.f && self.p == o.p && self.r == o.r
    }
}

impl FusionSystem {
    /// Validates keys, fields, pivotal values and the invertibility of every
    /// F-block.
    pub fn new(
        ring: FusionRing,
        field: NumberField,
        f: BTreeMap<FKey, FieldElement>,
        p: Vec<FieldElement>,
        r: Option<BTreeMap<RKey, FieldElement>>,
    ) -> Result<Self> {
        let sys = FusionSystem::from_parts(ring, field, f, p, r);
        sys.validate()?;
        Ok(sys)
    }

    pub(crate) fn from_parts(
        ring: FusionRing,
        field: NumberField,
        f: BTreeMap<FKey, FieldElement>,
        p: Vec<FieldElement>,
        r: Option<BTreeMap<RKey, FieldElement>>,
    ) -> Self {
        FusionSystem { ring, field, f, p, r }
    }

    fn validate(&self) -> Result<()> {
        let ring = &self.ring;
        if !ring.is_multiplicity_free() {
            return Err(FusionError::NotMultiplicityFree);
        }
        let in_field = |x: &FieldElement| if x.field().same(&self.field) { Ok(()) } else { Err(FusionError::DegreeMismatch) };
        for (key, v) in &self.f {
            if !is_admissible(ring, key) {
                return Err(FusionError::InadmissibleKey(fkey_name(key)));
            }
            in_field(v)?;
        }
        for key in f_keys(ring) {
            if !self.f.contains_key(&key) {
                return Err(FusionError::MissingSymbol(fkey_name(&key)));
            }
        }
        if self.p.len() != ring.rank() {
            return Err(FusionError::MissingSymbol(format!("P{}", self.p.len() + 1)));
        }
        for (a, v) in self.p.iter().enumerate() {
            in_field(v)?;
            if v.is_zero() {
                return Err(FusionError::ZeroPivotal(a + 1));
            }
        }
        if let Some(r) = &self.r {
            for (key, v) in r {
                if key.iter().any(|&x| x >= ring.rank()) || !ring.fuses(key[0], key[1], key[2]) {
                    return Err(FusionError::InadmissibleKey(rkey_name(key)));
                }
                in_field(v)?;
            }
            for key in r_keys(ring) {
                if !r.contains_key(&key) {
                    return Err(FusionError::MissingSymbol(rkey_name(&key)));
                }
            }
        }
        for b in self.block_labels() {
            if self.block(b).inverse().is_none() {
                return Err(FusionError::SingularFBlock(format!("{},{},{},{}", b[0] + 1, b[1] + 1, b[2] + 1, b[3] + 1)));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn f(&self, key: &FKey) -> Option<&FieldElement> {
        self.f.get(key)
    }

    /// The F-symbol at `key`, zero when the key is not admissible.
    pub fn f_or_zero(&self, key: &FKey) -> FieldElement {
        self.f.get(key).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn f_symbols(&self) -> &BTreeMap<FKey, FieldElement> {
        &self.f
    }

    pub fn p(&self, a: usize) -> &FieldElement {
        &self.p[a]
    }

    pub fn p_symbols(&self) -> &[FieldElement] {
        &self.p
    }

    pub fn r(&self, key: &RKey) -> Option<&FieldElement> {
        self.r.as_ref().and_then(|r| r.get(key))
    }

    pub fn r_symbols(&self) -> Option<&BTreeMap<RKey, FieldElement>> {
        self.r.as_ref()
    }

    pub fn is_braided(&self) -> bool {
        self.r.is_some()
    }

    pub fn without_braiding(&self) -> FusionSystem {
        FusionSystem { r: None, ..self.clone() }
    }

    /// `(i, j, k, l)` for every nonempty block, lexicographic.
    pub fn block_labels(&self) -> Vec<[usize; 4]> {
        let mut out: Vec<[usize; 4]> = self.f.keys().map(|k| [k[0], k[1], k[2], k[3]]).collect();
        out.dedup();
        out
    }

    pub fn block(&self, b: [usize; 4]) -> FBlock {
        let [i, j, k, l] = b;
        let ring = &self.ring;
        let ms: Vec<usize> = (0..ring.rank()).filter(|&m| ring.fuses(i, j, m) && ring.fuses(m, k, l)).collect();
        let ns: Vec<usize> = (0..ring.rank()).filter(|&n| ring.fuses(j, k, n) && ring.fuses(i, n, l)).collect();
        let entries = ms.iter().map(|&m| ns.iter().map(|&n| self.f_or_zero(&[i, j, k, l, m, n])).collect()).collect();
        FBlock { ms, ns, entries }
    }

    /// Applies `g` to every symbol value, landing in `field`.
    pub fn map_values(&self, field: &NumberField, g: impl Fn(&FieldElement) -> Result<FieldElement>) -> Result<FusionSystem> {
        let f = self.f.iter().map(|(k, v)| Ok((*k, g(v)?))).collect::<Result<_>>()?;
        let p = self.p.iter().map(&g).collect::<Result<_>>()?;
        let r = match &self.r {
            Some(r) => Some(r.iter().map(|(k, v)| Ok((*k, g(v)?))).collect::<Result<_>>()?),
            None => None,
        };
        Ok(FusionSystem { ring: self.ring.clone(), field: field.clone(), f, p, r })
    }

    /// Every F-symbol set to `1` and `P ≡ 1`: the trivial cocycle on a
    /// pointed ring.
    pub fn all_ones(ring: &FusionRing, field: &NumberField, braided: bool) -> Result<FusionSystem> {
        let f = f_keys(ring).into_iter().map(|k| (k, field.one())).collect();
        let p = vec![field.one(); ring.rank()];
        let r = braided.then(|| r_keys(ring).into_iter().map(|k| (k, field.one())).collect());
        FusionSystem::new(ring.clone(), field.clone(), f, p, r)
    }
}
