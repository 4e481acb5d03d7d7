//! Exact rational arithmetic and univariate polynomial algebra over Q.

mod factor;
pub(crate) mod modp;
mod poly;
pub mod rational;

pub use factor::{expand_factorization, factor_over_q};
pub(crate) use factor::{certified_squarefree, factor_squarefree};
pub use poly::{
    discriminant, poly_gcd, poly_xgcd, resultant, squarefree_decomposition, squarefree_part,
    Polynomial,
};
pub use rational::Rational;
