//! Exact linear algebra around nilpotent endomorphisms, sl(2)-triples and
//! vector bundles on the projective line.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere in the library.
//!
//! * [`matrix`], [`subspace`], [`poly`], [`rat`]: scalar, matrix, polynomial
//!   and subspace arithmetic.
//! * [`nilpotent`]: kernel/image filtrations, Jordan chains, orbit curves and
//!   complementary flags.
//! * [`sl2`]: sl(2)-triples, irreducible representations, weight bookkeeping
//!   and the Veronese normal bundle weights.
//! * [`lie`]: structure analysis of matrix Lie algebras.
//! * [`laurent`], [`bundle`]: Laurent transition matrices, splitting types
//!   and Birkhoff factorization of bundles on the projective line.
//! * [`format`]: JSON file formats shared with the command-line tool.
//!
//! ```
//! use nilsplit::bundle::{birkhoff_factorize, splitting_type};
//! use nilsplit::laurent::{LaurentMatrix, LaurentPoly};
//!
//! let z = |e| LaurentPoly::z_pow(e);
//! let t = LaurentMatrix::from_rows(vec![
//!     vec![z(1), LaurentPoly::one()],
//!     vec![LaurentPoly::zero(), z(-1)],
//! ])?;
//! assert_eq!(splitting_type(&t)?.exponents(), &[1, -1]);
//! let f = birkhoff_factorize(&t)?;
//! assert_eq!(f.product(), t);
//! # Ok::<(), nilsplit::Error>(())
//! ```

pub mod bundle;
pub mod check;
pub mod error;
pub mod format;
pub mod laurent;
pub mod lie;
pub mod matrix;
pub mod nilpotent;
pub mod poly;
pub mod rat;
pub mod sl2;
pub mod subspace;

pub use check::Check;
pub use error::{Error, Result};
pub use matrix::{QMatrix, QVector};
pub use rat::Rat;
pub use subspace::{Direction, Flag, Subspace};
