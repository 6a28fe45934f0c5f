//! Exact representation theory of the quantum Borel double, the small quantum
//! group and quantum SL2 at odd roots of unity.
//!
//! Every scalar lives in the cyclotomic field `Q(zeta_N)` and every check is an
//! exact equality. The crate is organised bottom-up:
//!
//! * [`cyclofield`]: scalars, quantum integers, Chebyshev polynomials
//! * [`exactlin`]: matrices, kernels, minimal polynomials
//! * [`presentations`]: PBW normal forms and symbolic identities
//! * [`repfactory`]: explicit module families and their shadows
//! * [`homlab`]: intertwiners, indecomposability, exact sequences
//! * [`classify`]: colorings, quiver gluing, counts
//! * [`sl2kit`]: 2x2 toolkit for shadows and gluing
//! * [`cli`]: the `skeinrep` command line driver

pub mod classify;
pub mod cli;
pub mod cyclofield;
pub mod exactlin;
pub mod homlab;
pub mod presentations;
pub mod repfactory;
pub mod report;
pub mod selftest;
pub mod sl2kit;

mod error;

pub use cyclofield::{CycScalar, CycloField, Poly, RootOrder};
pub use error::{Error, Result};
pub use exactlin::Mat;
