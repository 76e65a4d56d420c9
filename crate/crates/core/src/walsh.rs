//! Walsh transform `W_f(p) = sum_x (-1)^(f(x) XOR p.x)` and the spectral
//! classification built on it.

use serde::{Deserialize, Serialize};

use crate::boolfn::{parity, BitVector, TruthTable};
use crate::error::{Error, Result};

/// Signed Walsh coefficients of an `n`-bit function, indexed by `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalshSpectrum {
    n: u32,
    coeffs: Vec<i32>,
}

impl WalshSpectrum {
    /// Wraps raw coefficients. Each one must lie in `[-2^n, 2^n]` with the
    /// parity of `2^n`, as every Walsh coefficient does.
    pub fn from_coeffs(n: u32, coeffs: Vec<i32>) -> Result<Self> {
        crate::boolfn::check_arity(n)?;
        let len = 1usize << n;
        if coeffs.len() != len {
            return Err(Error::Parse(format!(
                "spectrum has {} coefficients, expected {len}",
                coeffs.len()
            )));
        }
        let full = len as i64;
        if let Some(bad) = coeffs
            .iter()
            .map(|&c| i64::from(c))
            .find(|c| c.abs() > full || (c - full) % 2 != 0)
        {
            return Err(Error::Invariant(format!(
                "{bad} is not a possible Walsh coefficient for n = {n}"
            )));
        }
        Ok(Self { n, coeffs })
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i32> {
        self.coeffs
    }

    /// Sum of squared coefficients; `4^n` for every Boolean function.
    pub fn energy(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|&c| (i64::from(c) * i64::from(c)) as u64)
            .sum()
    }

    pub fn max_abs(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Flat magnitude `2^(n/2)` at every `p`. Never true for odd `n`.
    pub fn is_bent(&self) -> bool {
        if self.n % 2 == 1 {
            return false;
        }
        let flat = 1u32 << (self.n / 2);
        self.coeffs.iter().all(|c| c.unsigned_abs() == flat)
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }
}

/// Literal double sum over `p` and `x`; `O(4^n)`. Reference for [`fwht`].
pub fn walsh_naive(table: &TruthTable) -> WalshSpectrum {
    let len = table.len();
    let values: Vec<u32> = table.iter().map(u32::from).collect();
    let coeffs = (0..len as u32)
        .map(|p| {
            let odd: u32 = values
                .iter()
                .zip(0u32..)
                .map(|(&f, x)| f ^ u32::from(parity(p & x)))
                .sum();
            len as i32 - 2 * odd as i32
        })
        .collect();
    WalshSpectrum {
        n: table.arity(),
        coeffs,
    }
}

/// Fast Walsh-Hadamard transform: `n` in-place butterfly stages over the
/// sign vector `(-1)^f(x)`, `O(n 2^n)`.
pub fn fwht(table: &TruthTable) -> WalshSpectrum {
    let mut coeffs: Vec<i32> = table.iter().map(|b| if b { -1 } else { 1 }).collect();
    butterfly(&mut coeffs);
    WalshSpectrum {
        n: table.arity(),
        coeffs,
    }
}

/// Unnormalized in-place Hadamard butterfly. `data.len()` must be a power
/// of two.
pub fn butterfly(data: &mut [i32]) {
    debug_assert!(data.len().is_power_of_two());
    let mut half = 1;
    while half < data.len() {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        half *= 2;
    }
}

/// Spectral summary of a Boolean function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_constant: bool,
    pub is_balanced: bool,
    pub is_linear: bool,
    pub is_affine: bool,
    pub is_bent: bool,
    /// Mask `k` of `f = k.x XOR c`, when affine.
    pub affine_k: Option<u32>,
    pub affine_c: Option<bool>,
    /// Hamming distance to the nearest affine function.
    pub nonlinearity: u64,
}

impl Classification {
    pub fn affine_mask(&self, n: u32) -> Option<BitVector> {
        self.affine_k.and_then(|k| BitVector::new(n, k).ok())
    }
}

/// Reads constant/balanced/affine/bent flags off the spectrum.
///
/// An affine `k.x XOR c` has the single nonzero coefficient
/// `W(k) = (-1)^c 2^n`, so both `k` and `c` come from that entry.
pub fn classify(spectrum: &WalshSpectrum) -> Classification {
    let n = spectrum.n;
    let full = 1u32 << n;
    let coeffs = &spectrum.coeffs;

    let mut peaks = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.unsigned_abs() == full);
    let affine = match (peaks.next(), peaks.next()) {
        (Some((k, &c)), None) => Some((k as u32, c < 0)),
        _ => None,
    };

    Classification {
        is_constant: coeffs[0].unsigned_abs() == full,
        is_balanced: coeffs[0] == 0,
        is_linear: matches!(affine, Some((_, false))),
        is_affine: affine.is_some(),
        is_bent: spectrum.is_bent(),
        affine_k: affine.map(|(k, _)| k),
        affine_c: affine.map(|(_, c)| c),
        nonlinearity: (u64::from(full) - u64::from(spectrum.max_abs())) / 2,
    }
}

/// Dual of a bent function: `(-1)^dual(p) = W_f(p) / 2^(n/2)`.
pub fn dual_bent(spectrum: &WalshSpectrum) -> Result<TruthTable> {
    if !spectrum.is_bent() {
        return Err(Error::NotBent);
    }
    TruthTable::from_fn(spectrum.n, |p| spectrum.coeffs[p as usize] < 0)
}
