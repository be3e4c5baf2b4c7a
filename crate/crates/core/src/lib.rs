//! Exact computation of the Catlin multitype at the origin of a sum-of-squares
//! hypersurface `2 Re(w) + Σ |f_k(z)|² = 0`, working directly on the ideal
//! `(f_1, …, f_N)`.
//!
//! The crate is split by concern:
//!
//! * [`polyring`]: Gaussian-rational polynomials, substitutions, exact linear solving.
//! * [`weights`]: weights, weighted lengths, lexicographic order, multitypes.
//! * [`rowreduce`]: Jacobian row reduction producing weighted-homogeneous changes of variables.
//! * [`kolar`]: the ideal-level driver producing a [`kolar::MultitypeReport`].
//! * [`sos_oracle`]: the same computation over real-valued mixed polynomials, Levi
//!   matrices and determinants, used to cross-check the ideal driver.
//! * [`cli`]: text input format and text/JSON report emission.
//!
//! ```
//! use sos_multitype::{cli, kolar};
//!
//! let spec = cli::parse_input("vars: z1 z2 z3\ngens:\nz1 - z2 + z3^2\nz1^2 - z2^2\n").unwrap();
//! let report = kolar::run(&spec.generators, &spec.config).unwrap();
//! assert_eq!(report.multitype.to_string(), "(2, 6, 6)");
//! ```

pub mod cli;
pub mod error;
pub mod kolar;
pub mod polyring;
pub mod rowreduce;
pub mod sos_oracle;
pub mod weights;

pub use error::{Error, Result};
