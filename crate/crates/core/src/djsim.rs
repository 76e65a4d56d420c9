//! Classical simulation of the Deutsch-Jozsa output state.
//!
//! The output amplitude for outcome `p` is
//! `psi_f(p) = 2^-n sum_x (-1)^(f(x) XOR p.x)`, which is the Walsh
//! coefficient scaled by `2^-n`. Four routes compute it:
//!
//! | route                      | cost       |
//! |----------------------------|------------|
//! | [`amplitudes_direct`]      | `O(4^n)`   |
//! | [`amplitudes_from_walsh`]  | `O(2^n)`   |
//! | [`simulate_circuit`]       | `O(n 2^n)` |
//! | [`simulate_with_ancilla`]  | `O(n 2^n)` |
//!
//! Amplitudes are real: a `+-1` phase oracle between two Hadamard layers
//! never produces an imaginary part.

use std::f64::consts::FRAC_1_SQRT_2;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::boolfn::{parity, TruthTable};
use crate::error::{Error, Result};
use crate::walsh::WalshSpectrum;

/// Largest input register simulated as a statevector (`8 * 2^20` bytes).
/// The ancilla route uses one more qubit.
pub const STATEVECTOR_MAX_ARITY: u32 = 20;

/// Real output amplitudes `psi_f(p)`, indexed by `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Amplitudes {
    n: u32,
    amps: Vec<f64>,
}

impl Amplitudes {
    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn amps(&self) -> &[f64] {
        &self.amps
    }

    pub fn probabilities(&self) -> Vec<f64> {
        probabilities(self)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    /// Largest entry-wise absolute difference. Panics on arity mismatch.
    pub fn max_abs_diff(&self, other: &Amplitudes) -> f64 {
        assert_eq!(self.n, other.n, "arity mismatch");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Counts per outcome over repeated simulated runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementHistogram {
    pub n: u32,
    pub counts: Vec<u64>,
    pub shots: u64,
}

impl MeasurementHistogram {
    /// Pearson statistic against `probs`. Bins with zero probability are
    /// skipped unless they were hit, which makes the statistic infinite.
    pub fn chi_square(&self, probs: &[f64]) -> f64 {
        assert_eq!(probs.len(), self.counts.len(), "bin count mismatch");
        let shots = self.shots as f64;
        self.counts
            .iter()
            .zip(probs)
            .map(|(&obs, &p)| {
                let expected = p * shots;
                if expected > 0.0 {
                    (obs as f64 - expected).powi(2) / expected
                } else if obs > 0 {
                    f64::INFINITY
                } else {
                    0.0
                }
            })
            .sum()
    }
}

fn check_statevector_arity(n: u32) -> Result<()> {
    if n > STATEVECTOR_MAX_ARITY {
        return Err(Error::ArityOutOfRange {
            n,
            max: STATEVECTOR_MAX_ARITY,
        });
    }
    Ok(())
}

/// Evaluates the amplitude sum term by term in floating point.
pub fn amplitudes_direct(table: &TruthTable) -> Amplitudes {
    let len = table.len();
    let scale = 1.0 / len as f64;
    let values: Vec<bool> = table.iter().collect();
    let amps = (0..len as u32)
        .map(|p| {
            let sum: f64 = values
                .iter()
                .zip(0u32..)
                .map(|(&f, x)| if f ^ parity(p & x) { -1.0 } else { 1.0 })
                .sum();
            sum * scale
        })
        .collect();
    Amplitudes {
        n: table.arity(),
        amps,
    }
}

/// `psi_f(p) = W_f(p) / 2^n`.
pub fn amplitudes_from_walsh(spectrum: &WalshSpectrum) -> Amplitudes {
    let scale = 1.0 / (1u64 << spectrum.arity()) as f64;
    Amplitudes {
        n: spectrum.arity(),
        amps: spectrum
            .coeffs()
            .iter()
            .map(|&c| f64::from(c) * scale)
            .collect(),
    }
}

/// Applies a Hadamard gate to `qubit` of a real statevector.
fn hadamard(state: &mut [f64], qubit: u32) {
    let stride = 1usize << qubit;
    for block in state.chunks_exact_mut(2 * stride) {
        let (lo, hi) = block.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            let (s, d) = (*a + *b, *a - *b);
            *a = s * FRAC_1_SQRT_2;
            *b = d * FRAC_1_SQRT_2;
        }
    }
}

/// Runs `|0^n>`, `H^n`, phase oracle `|x> -> (-1)^f(x) |x>`, `H^n` on an
/// `n`-qubit statevector.
pub fn simulate_circuit(table: &TruthTable) -> Result<Amplitudes> {
    let n = table.arity();
    check_statevector_arity(n)?;
    let mut state = vec![0.0; table.len()];
    state[0] = 1.0;
    for q in 0..n {
        hadamard(&mut state, q);
    }
    for (x, amp) in state.iter_mut().enumerate() {
        if table.get(x) {
            *amp = -*amp;
        }
    }
    for q in 0..n {
        hadamard(&mut state, q);
    }
    Ok(Amplitudes { n, amps: state })
}

/// The `(n+1)`-qubit textbook form: the ancilla (qubit `n`) starts in `|1>`,
/// the oracle flips it when `f(x) = 1`, and Hadamards act on every qubit.
///
/// Phase kickback leaves the ancilla in `|1>` at the end, so the input
/// register's amplitudes are read from the ancilla-one half of the state.
pub fn simulate_with_ancilla(table: &TruthTable) -> Result<Amplitudes> {
    let n = table.arity();
    check_statevector_arity(n)?;
    let len = table.len();
    let ancilla = len;
    let mut state = vec![0.0; 2 * len];
    state[ancilla] = 1.0;
    for q in 0..=n {
        hadamard(&mut state, q);
    }
    for x in (0..len).filter(|&x| table.get(x)) {
        state.swap(x, x | ancilla);
    }
    for q in 0..=n {
        hadamard(&mut state, q);
    }
    let (off, on) = state.split_at(len);
    let leaked: f64 = off.iter().map(|a| a * a).sum();
    if leaked > 1e-20 {
        return Err(Error::Invariant(format!(
            "ancilla not disentangled, residual weight {leaked:e}"
        )));
    }
    Ok(Amplitudes {
        n,
        amps: on.to_vec(),
    })
}

/// Born-rule probabilities `psi(p)^2`.
pub fn probabilities(amplitudes: &Amplitudes) -> Vec<f64> {
    amplitudes.amps.iter().map(|a| a * a).collect()
}

/// Draws `shots` outcomes by inverse-CDF lookup (binary search per shot).
pub fn sample_measurements<R: Rng + ?Sized>(
    amplitudes: &Amplitudes,
    shots: u64,
    rng: &mut R,
) -> MeasurementHistogram {
    let probs = probabilities(amplitudes);
    let mut counts = vec![0u64; probs.len()];
    if shots > 0 {
        let cdf: Vec<f64> = probs
            .iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        let total = *cdf.last().unwrap();
        let last_live = probs.iter().rposition(|&p| p > 0.0).unwrap_or(0);
        for _ in 0..shots {
            let u = rng.random::<f64>() * total;
            let idx = cdf.partition_point(|&c| c <= u).min(last_live);
            counts[idx] += 1;
        }
    }
    MeasurementHistogram {
        n: amplitudes.n,
        counts,
        shots,
    }
}
