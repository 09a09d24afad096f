//! Gauge action, gauge-split bases and minimal-field regauging.

mod action;
mod exponents;
mod gsb;
mod minimal;
mod solve;
mod symbols;

pub use action::{apply_gauge, random_gauge, GaugeAssignment};
pub use exponents::{build_exponent_matrix, gauge_factor, GaugeExponentMatrix};
pub use gsb::{compute_gsb, compute_gsb_seeded, invariance_check, word_decompose, GaugeSplitBasis, Invariance, WordDecomposition};
pub use minimal::{minimal_field, minimal_field_with, regauge_minimal, regauge_with, MinimalFieldResult};
pub use solve::{solve_gauge_for_targets, GaugeSolution, SolveOptions};
pub use symbols::{enumerate_symbols, evaluate_word, FormalWord, Symbol, SymbolIndex};
