use std::fmt;

use fsys_algebra::FieldElement;

use crate::error::{FusionError, Result};
use crate::system::{f_keys, FKey, FusionSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    F(FKey),
    P(usize),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::F(k) => write!(f, "F({})", k.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")),
            Symbol::P(a) => write!(f, "P({})", a + 1),
        }
    }
}

/// Formal F-symbols in lexicographic key order followed by the P-symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolIndex {
    pub symbols: Vec<Symbol>,
    pub zero_mask: Vec<bool>,
}

impl SymbolIndex {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn f_count(&self) -> usize {
        self.symbols.iter().filter(|s| matches!(s, Symbol::F(_))).count()
    }

    pub fn position(&self, s: &Symbol) -> Option<usize> {
        self.symbols.iter().position(|x| x == s)
    }

    /// Positions with nonzero values followed by the zero ones.
    pub fn k_order(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.len()).filter(|&i| !self.zero_mask[i]).collect();
        out.extend((0..self.len()).filter(|&i| self.zero_mask[i]));
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.zero_mask.iter().filter(|z| !**z).count()
    }

    pub fn value(&self, sys: &FusionSystem, i: usize) -> FieldElement {
        match self.symbols[i] {
            Symbol::F(k) => sys.f_or_zero(&k),
            Symbol::P(a) => sys.p(a).clone(),
        }
    }
}

pub fn enumerate_symbols(sys: &FusionSystem) -> SymbolIndex {
    let mut symbols: Vec<Symbol> = f_keys(sys.ring()).into_iter().map(Symbol::F).collect();
    symbols.extend((0..sys.rank()).map(Symbol::P));
    let zero_mask = symbols
        .iter()
        .map(|s| match s {
            Symbol::F(k) => sys.f(k).is_none_or(|v| v.is_zero()),
            Symbol::P(_) => false,
        })
        .collect();
    SymbolIndex { symbols, zero_mask }
}

/// A monomial in the formal symbols, as an exponent vector over a
/// [`SymbolIndex`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalWord {
    pub exponents: Vec<i64>,
}

impl FormalWord {
    pub fn empty(len: usize) -> Self {
        FormalWord { exponents: vec![0; len] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = Self::empty(len);
        w.exponents[i] = 1;
        w
    }

    pub fn from_symbols(index: &SymbolIndex, parts: &[(Symbol, i64)]) -> Result<Self> {
        let mut w = Self::empty(index.len());
        for (s, e) in parts {
            let i = index.position(s).ok_or_else(|| FusionError::MissingSymbol(s.to_string()))?;
            w.exponents[i] += e;
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &FormalWord) -> FormalWord {
        let n = self.len().max(o.len());
        let e = (0..n).map(|i| self.exponents.get(i).copied().unwrap_or(0) + o.exponents.get(i).copied().unwrap_or(0)).collect();
        FormalWord { exponents: e }
    }

    pub fn pow(&self, k: i64) -> FormalWord {
        FormalWord { exponents: self.exponents.iter().map(|e| e * k).collect() }
    }

    pub fn display(&self, index: &SymbolIndex) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let name = index.symbols.get(i).map_or_else(|| format!("?{}", i + 1), |s| s.to_string());
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// `Φ(w)`: the product of symbol values raised to the word's exponents.
pub fn evaluate_word(sys: &FusionSystem, index: &SymbolIndex, w: &FormalWord) -> Result<FieldElement> {
    if let Some(i) = (index.len()..w.len()).find(|&i| w.exponents[i] != 0) {
        return Err(FusionError::UndefinedSymbol(i + 1));
    }
    let mut acc = sys.field().one();
    let mut zero = false;
    for (i, &e) in w.exponents.iter().enumerate().take(index.len()) {
        if e == 0 {
            continue;
        }
        let v = index.value(sys, i);
        if v.is_zero() {
            if e < 0 {
                return Err(FusionError::ZeroToNegativePower(index.symbols[i].to_string()));
            }
            zero = true;
            continue;
        }
        acc = &acc * &v.pow(e)?;
    }
    Ok(if zero { sys.field().zero() } else { acc })
}
