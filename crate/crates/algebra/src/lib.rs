//! Exact arithmetic for fusion-category computations: rationals, polynomials,
//! number fields with subfields and certified complex embeddings, and integer
//! matrices with Smith normal form.

#![allow(clippy::needless_range_loop)]

pub mod ball;
pub mod dyadic;
pub mod embedding;
pub mod error;
pub mod field;
pub mod field_roots;
pub mod intmat;
pub mod irreducible;
pub mod modp;
pub mod mpc;
pub mod poly;
pub mod qmat;
pub mod rational;
pub mod roots;
pub mod subfield;

pub use ball::{ComplexBall, RealBall};
pub use dyadic::Dyadic;
pub use embedding::{embedding, fe_evaluate, nearest_embedding, nf_embeddings, ComplexEmbedding};
pub use error::{AlgebraError, Result};
pub use field::{cyclotomic_polynomial, FieldElement, FieldMorphism, NumberField};
pub use field_roots::{extend_by_radical, is_isomorphic, nth_root, nth_roots, roots_in_field, RadicalExtension};
pub use intmat::{int_kernel_cokernel, int_left_inverse, smith_normal_form, smith_normal_form_seeded, IntMatrix, SmithDecomposition};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::RatPoly;
pub use qmat::QMatrix;
pub use subfield::{subfield_generated, Subfield};
