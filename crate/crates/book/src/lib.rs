//! Compiles every Rust listing in `book/src` as a doc-test, one module per
//! chapter so a failure names its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
pub mod exact_linear_algebra {}
#[doc = include_str!("../../../book/src/lie-algebras.md")]
pub mod lie_algebras {}
#[doc = include_str!("../../../book/src/derivations.md")]
pub mod derivations {}
#[doc = include_str!("../../../book/src/catalog.md")]
pub mod catalog {}
#[doc = include_str!("../../../book/src/e6.md")]
pub mod e6 {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
