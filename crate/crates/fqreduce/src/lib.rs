//! Polynomial factorization over prime fields F_q, together with the
//! problems it reduces to and from: Factor Degree, the Frobenius minimal
//! polynomial, the Carlitz characteristic polynomial, and Moore/Vandermonde
//! determinant zero tests. Each reduction can be driven either by the
//! reference factorization engine or by a factorization-free computation,
//! so the equivalences are machine-checkable.

pub mod bench;
pub mod bm;
pub mod carlitz;
pub mod cyclotomic;
pub mod error;
pub mod factor;
pub mod factorization;
pub mod field;
pub mod frobenius;
pub mod intmath;
pub mod linalg;
pub mod minpoly;
pub mod modctx;
pub mod moore;
pub mod poly;
pub mod reductions;
pub mod rng;
pub mod sqfree;
pub mod text;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use field::{Felt, PrimeField};
pub use modctx::{ComposeStrategy, ModCtx};
pub use poly::Poly;
pub use rng::Rng;
