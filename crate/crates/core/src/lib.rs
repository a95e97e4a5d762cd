//! Bigrassmannian permutations, Schubert calculus and presentations of
//! Schubert ideals.

pub mod coxgen;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod presentation;
pub mod symfunc;
pub mod symgroup;

pub use error::{Error, Result};
pub use symfunc::{Partition, SchurVector};
pub use symgroup::Permutation;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/essential.md")]
    mod essential {}
    #[doc = include_str!("../../../book/src/schur.md")]
    mod schur {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
