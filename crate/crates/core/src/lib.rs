//! Exact symmetric-function algebra built around skewing operators.
//!
//! The crate realizes skewing operators `f^⊥` through noncommutative symmetric
//! functions: a free algebra `U` on letters `u_1..u_N`, a quotient by one of three
//! word congruences, and functionals `F_γ` obtained by pairing with elements of
//! the dual space of words. On top of that it provides
//!
//! * the algebra `Sym` in the `m`, `e`, `h`, `p`, `s` bases with the Hall inner
//!   product and generic and closed-form skewing ([`symfun`]),
//! * RSK insertion and column reading words ([`tableaux`]),
//! * Littlewood–Richardson coefficients by three independent routes ([`lr`]),
//! * chromatic quasisymmetric functions of natural unit interval orders and
//!   verifiers for their `e_k^⊥` and `p_k^⊥` recurrences ([`chromatic`]).
//!
//! All arithmetic is exact; scalars are polynomials in `q` over the rationals.
//!
//! ```
//! use skewsym::chromatic::{h_expansion, verify_e_recurrence};
//! use skewsym::poset::{DegVariant, Nuio};
//! use skewsym::{IntVector, Partition, QPoly};
//!
//! # fn main() -> skewsym::Result<()> {
//! let p = Nuio::from_hessenberg(&[2, 3, 4, 5, 5])?;
//! let beta = IntVector::new(vec![1, 1, 2, 1, 1]);
//! let x = h_expansion(&p, &beta)?;
//! assert_eq!(x.coeff(&Partition::new(vec![3, 2, 1])?), QPoly::q_pow(3));
//!
//! let report = verify_e_recurrence(&p, &beta, 2, &Partition::new(vec![3, 1])?, DegVariant::B)?;
//! assert!(report.holds);
//! # Ok(())
//! # }
//! ```

pub mod chromatic;
pub mod congruence;
pub mod error;
pub mod foundation;
pub mod freealg;
pub mod lr;
pub mod poset;
pub mod symfun;
pub mod tableaux;

pub use error::{Error, Result};
pub use foundation::{Composition, IntVector, Partition, QPoly, Rational, Word};
pub use num_bigint::BigInt;
