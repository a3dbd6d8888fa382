//! Runs the guide's code blocks as doc-tests, keeping book and library in
//! sync: `cargo test -p book-tests --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs-and-cycles.md")]
pub mod graphs_and_cycles {}

#[doc = include_str!("../../../book/src/functionals.md")]
pub mod functionals {}

#[doc = include_str!("../../../book/src/elimination.md")]
pub mod elimination {}

#[doc = include_str!("../../../book/src/planarization.md")]
pub mod planarization {}

#[doc = include_str!("../../../book/src/embeddings.md")]
pub mod embeddings {}

#[doc = include_str!("../../../book/src/reinsertion.md")]
pub mod reinsertion {}

#[doc = include_str!("../../../book/src/layout.md")]
pub mod layout {}

#[doc = include_str!("../../../book/src/io-and-cli.md")]
pub mod io_and_cli {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
