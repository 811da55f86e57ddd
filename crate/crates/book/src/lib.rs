//! The guide in `book/` is an mdbook, which cannot run listings that depend on
//! a crate. Each chapter is pulled in here as the docs of an empty module, so
//! `cargo test` runs every listing as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/reals.md")]
pub mod reals {}
#[doc = include_str!("../../../book/src/subject.md")]
pub mod subject {}
#[doc = include_str!("../../../book/src/pseudo.md")]
pub mod pseudo {}
#[doc = include_str!("../../../book/src/pastar.md")]
pub mod pastar {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
