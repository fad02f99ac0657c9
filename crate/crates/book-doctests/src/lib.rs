//! Runs every Rust snippet of the guide in `book/src` as a doc-test, so the guide cannot
//! drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}
#[doc = include_str!("../../../book/src/clifford.md")]
pub mod clifford {}
#[doc = include_str!("../../../book/src/exterior.md")]
pub mod exterior {}
#[doc = include_str!("../../../book/src/isometries.md")]
pub mod isometries {}
#[doc = include_str!("../../../book/src/modular.md")]
pub mod modular {}
#[doc = include_str!("../../../book/src/reports.md")]
pub mod reports {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
