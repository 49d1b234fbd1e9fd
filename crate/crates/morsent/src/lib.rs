//! Shannon information entropies of the bound states of the Morse oscillator.
//!
//! The crate builds the eigenstates of `V(x) = D e^{-αx}(e^{-αx} - 2)`,
//! transforms them to momentum space in closed form, integrates the
//! position and momentum entropies `S = -∫ ρ ln ρ` adaptively, and checks
//! the entropic uncertainty bound `S_x + S_p >= 1 + ln π`.
//!
//! ```
//! use morsent::{entropy, morse::MorseParams, quad::QuadConfig};
//!
//! let well = MorseParams::new(1.0).unwrap();
//! let ground = well.eigenstate(0).unwrap();
//! let r = entropy::bbm_check(&well, &ground, &QuadConfig::default()).unwrap();
//! assert!(r.margin > 0.0);
//! ```

// `!(a < b)` is used deliberately so NaN lands on the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod entropy;
pub mod error;
pub mod golden;
pub mod momentum;
pub mod morse;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
