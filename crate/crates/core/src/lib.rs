//! Exact feasibility certificates for antipodal spherical designs, real
//! equiangular tight frames and Levenstein-equality line packings, with
//! numerical verification of explicit point sets.
//!
//! The `examples/` directory is the guided tour:
//!
//! - `exact_arithmetic`: rationals and quadratic surds ([`arith`])
//! - `gegenbauer_expansion`: normalized Gegenbauer polynomials and annihilators ([`gegenbauer`])
//! - `strongly_regular`: SRG spectra and Krein conditions ([`srg`])
//! - `size_bounds`: design size bounds and coherence bounds ([`bounds`])
//! - `etf_feasibility`: the ETF condition pipeline ([`etf`])
//! - `levenstein_sizes`: admissible Levenstein-equality sizes ([`leven`])
//! - `design_profile`: strength, angle sets and classification ([`pointset`])
//! - `annihilator_identities`: `D_k` matrix identities on the icosahedron
//! - `e8_derived_code`: E8 roots to the 63-line packing in `R^7` ([`constructions`])
//! - `cli_reports`: JSON/CSV reports and point-set files ([`cli`])
//!
//! ```text
//! cargo run --release --example e8_derived_code
//! ```

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod etf;
pub mod gegenbauer;
pub mod leven;
pub mod pointset;
pub mod report;
pub mod srg;

pub use error::{Error, Result};
