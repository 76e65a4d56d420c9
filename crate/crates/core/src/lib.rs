//! Spectral analysis of Boolean functions and classical simulation of the
//! Deutsch-Jozsa circuit.
//!
//! The Deutsch-Jozsa output amplitudes of an oracle `f` are exactly its
//! normalized Walsh spectrum, `psi_f(p) = W_f(p) / 2^n`. A bent function has
//! `|W_f(p)| = 2^(n/2)` for every `p`, so its measurement distribution is
//! flat. This crate computes the spectrum three different ways and checks
//! they agree:
//!
//! * [`walsh::fwht`] / [`walsh::walsh_naive`]: integer Walsh transform,
//! * [`djsim::amplitudes_direct`]: the amplitude sum evaluated literally,
//! * [`djsim::simulate_circuit`] / [`djsim::simulate_with_ancilla`]: a
//!   statevector run of `H^n`, oracle, `H^n`.
//!
//! Classical simulation costs `O(n 2^n)` time and memory. Nothing here
//! reproduces the single-query quantum advantage.
//!
//! Inputs are encoded little-endian: `x = sum_j x_j 2^j`, `x_0` the least
//! significant bit.

pub mod boolfn;
pub mod cli;
pub mod djsim;
mod error;
pub mod spectra;
pub mod walsh;

pub use boolfn::{AnfPolynomial, BitVector, ShuffleSearch, TruthTable, MAX_ARITY};
pub use djsim::{Amplitudes, MeasurementHistogram, STATEVECTOR_MAX_ARITY};
pub use error::{Error, Result};
pub use spectra::{BarFormat, SpectrumReport, SpectrumRow};
pub use walsh::{Classification, WalshSpectrum};
