//! Boolean functions as bit-packed truth tables.
//!
//! Entry `x` of a table holds `f(x)`, where the input bit string is read as
//! the integer `x = sum_j x_j 2^j` (`x_0` is the least significant bit).
//! Tables are packed 64 entries per `u64` word, entry `x` in bit `x % 64` of
//! word `x / 64`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::walsh;

/// Hard arity cap. 2^24 signed 32-bit Walsh coefficients take 64 MiB.
pub const MAX_ARITY: u32 = 24;

/// Masks selecting the positions in a word whose index has bit `j` clear.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

pub(crate) fn check_arity(n: u32) -> Result<()> {
    if (1..=MAX_ARITY).contains(&n) {
        Ok(())
    } else {
        Err(Error::ArityOutOfRange { n, max: MAX_ARITY })
    }
}

fn check_bent_arity(n: u32) -> Result<()> {
    check_arity(n)?;
    if n % 2 == 1 {
        return Err(Error::OddArity(n));
    }
    Ok(())
}

#[inline]
pub(crate) fn parity(v: u32) -> bool {
    v.count_ones() & 1 == 1
}

/// Compacts bits 0, 2, 4, ... of `z` into the low bits of the result.
fn gather_even(z: u32) -> u32 {
    let mut z = z & 0x5555_5555;
    z = (z | (z >> 1)) & 0x3333_3333;
    z = (z | (z >> 2)) & 0x0f0f_0f0f;
    z = (z | (z >> 4)) & 0x00ff_00ff;
    (z | (z >> 8)) & 0x0000_ffff
}

fn word_count(n: u32) -> usize {
    ((1usize << n) / 64).max(1)
}

fn tail_mask(n: u32) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// An `n`-bit string, used for inputs `x`, masks `k` and outcomes `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVector {
    n: u32,
    value: u32,
}

impl BitVector {
    pub fn new(n: u32, value: u32) -> Result<Self> {
        check_arity(n)?;
        if u64::from(value) >= 1u64 << n {
            return Err(Error::ValueOutOfRange {
                value: value.into(),
                n,
            });
        }
        Ok(Self { n, value })
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Bit `j` of the string.
    pub fn bit(&self, j: u32) -> bool {
        j < self.n && (self.value >> j) & 1 == 1
    }
}

/// Inner product over GF(2): the XOR of `k_j AND x_j` over all positions.
pub fn dot(k: BitVector, x: BitVector) -> Result<bool> {
    if k.n != x.n {
        return Err(Error::ArityMismatch {
            expected: k.n,
            found: x.n,
        });
    }
    Ok(parity(k.value & x.value))
}

/// Truth table of a function `{0,1}^n -> {0,1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    /// The all-zero table.
    pub fn zeros(n: u32) -> Result<Self> {
        check_arity(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        for x in 0..(1u32 << n) {
            if f(x) {
                t.set(x as usize, true);
            }
        }
        Ok(t)
    }

    /// Builds a table from its entries; the length must be a power of two.
    pub fn from_bools(values: &[bool]) -> Result<Self> {
        let len = values.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Parse(format!(
                "table length {len} is not a power of two >= 2"
            )));
        }
        let n = len.trailing_zeros();
        let mut t = Self::zeros(n)?;
        for (x, _) in values.iter().enumerate().filter(|(_, &v)| v) {
            t.set(x, true);
        }
        Ok(t)
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `f(x)` for a raw index. Panics if `x >= 2^n`.
    #[inline]
    pub fn get(&self, x: usize) -> bool {
        assert!(x < self.len(), "index {x} out of range for n = {}", self.n);
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, x: usize, value: bool) {
        assert!(x < self.len(), "index {x} out of range for n = {}", self.n);
        let bit = 1u64 << (x & 63);
        if value {
            self.words[x >> 6] |= bit;
        } else {
            self.words[x >> 6] &= !bit;
        }
    }

    pub fn eval(&self, x: BitVector) -> Result<bool> {
        if x.n != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: x.n,
            });
        }
        Ok(self.get(x.value as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |x| self.get(x))
    }

    /// Hamming weight: the number of inputs mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == 1u64 << (self.n - 1)
    }

    /// `1 XOR f`.
    pub fn complement(&self) -> Self {
        let mask = tail_mask(self.n);
        Self {
            n: self.n,
            words: self.words.iter().map(|w| !w & mask).collect(),
        }
    }

    /// Runs the Walsh bent test on this table.
    pub fn is_bent(&self) -> bool {
        walsh::fwht(self).is_bent()
    }

    /// The function `c` everywhere.
    pub fn constant(n: u32, c: bool) -> Result<Self> {
        let t = Self::zeros(n)?;
        Ok(if c { t.complement() } else { t })
    }

    /// `f(x) = k.x XOR c`.
    pub fn affine(n: u32, k: BitVector, c: bool) -> Result<Self> {
        if k.n != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: k.n,
            });
        }
        Self::from_fn(n, |x| parity(k.value & x) ^ c)
    }

    /// `f(x) = (x_0 AND x_1) XOR (x_2 AND x_3) XOR ...`, bent for every even `n`.
    pub fn inner_product_bent(n: u32) -> Result<Self> {
        check_bent_arity(n)?;
        // Bits 2i and 2i+1 both set iff bit 2i of (x & x >> 1) is set.
        let even = 0x5555_5555u32;
        Self::from_fn(n, |x| parity(x & (x >> 1) & even))
    }

    /// Maiorana-McFarland bent function on `n = 2 * half` bits:
    /// `f(x, y) = x . pi(y) XOR g(y)`.
    ///
    /// The input is split interleaved: `x_i` is input bit `2i` and `y_i` is
    /// input bit `2i + 1`, so the identity permutation with `g = 0` gives
    /// [`TruthTable::inner_product_bent`].
    pub fn maiorana_mcfarland(half: u32, pi: &[u32], g: &TruthTable) -> Result<Self> {
        check_bent_arity(2 * half)?;
        if g.n != half {
            return Err(Error::ArityMismatch {
                expected: half,
                found: g.n,
            });
        }
        let size = 1usize << half;
        let mut seen = vec![false; size];
        if pi.len() != size {
            return Err(Error::NotBijective(size));
        }
        for &v in pi {
            match seen.get_mut(v as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::NotBijective(size)),
            }
        }
        Self::from_fn(2 * half, |z| {
            let (x, y) = (gather_even(z), gather_even(z >> 1));
            parity(x & pi[y as usize]) ^ g.get(y as usize)
        })
    }

    /// A Maiorana-McFarland instance with uniformly random `pi` and `g`.
    pub fn random_maiorana_mcfarland<R: Rng + ?Sized>(half: u32, rng: &mut R) -> Result<Self> {
        check_bent_arity(2 * half)?;
        let mut pi: Vec<u32> = (0..1u32 << half).collect();
        pi.shuffle(rng);
        let g = Self::random(half, rng)?;
        Self::maiorana_mcfarland(half, &pi, &g)
    }

    /// Every entry an independent fair coin flip.
    pub fn random<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<Self> {
        let mut t = Self::zeros(n)?;
        let mask = tail_mask(n);
        for w in &mut t.words {
            *w = rng.random::<u64>() & mask;
        }
        Ok(t)
    }

    /// Rejection search for a bent function by shuffling entries.
    ///
    /// Starts from a table of weight `2^(n-1) - 2^(n/2-1)` (the lighter of the
    /// two weights a bent function can have), applies a fresh uniform
    /// permutation to its entries on every iteration and stops at the first
    /// table that passes the bent test.
    pub fn shuffle_search_bent<R: Rng + ?Sized>(
        n: u32,
        rng: &mut R,
        max_iters: u64,
    ) -> Result<ShuffleSearch> {
        check_bent_arity(n)?;
        if max_iters == 0 {
            return Err(Error::ZeroIterations);
        }
        let len = 1usize << n;
        let weight = (len >> 1) - (1usize << (n / 2 - 1));
        let mut entries: Vec<bool> = (0..len).map(|x| x < weight).collect();
        for iteration in 1..=max_iters {
            entries.shuffle(rng);
            let candidate = Self::from_bools(&entries)?;
            if candidate.is_bent() {
                return Ok(ShuffleSearch::Found {
                    table: candidate,
                    iterations: iteration,
                });
            }
        }
        Ok(ShuffleSearch::NotFound {
            iterations: max_iters,
        })
    }

    /// Binary text form: character `i` is `f(i)`.
    pub fn to_binary_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Hex text form, four entries per nibble with the earliest index in the
    /// most significant bit. `None` for `n < 2`.
    pub fn to_hex_string(&self) -> Option<String> {
        if self.n < 2 {
            return None;
        }
        let digits = (0..self.len() / 4).map(|i| {
            let nibble = (0..4).fold(0u32, |acc, j| (acc << 1) | u32::from(self.get(4 * i + j)));
            char::from_digit(nibble, 16).unwrap()
        });
        Some(digits.collect())
    }

    pub fn from_binary_str(s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in binary table"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bools(&values)
    }

    pub fn from_hex_str(s: &str) -> Result<Self> {
        let mut values = Vec::with_capacity(4 * s.len());
        for ch in s.chars() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("unexpected character {ch:?} in hex table")))?;
            values.extend((0..4).rev().map(|j| (nibble >> j) & 1 == 1));
        }
        Self::from_bools(&values)
    }

    /// Parses either text form, or the JSON form `{"n": .., "tt": ".."}`.
    ///
    /// Without a known arity, a string made only of `0`/`1` whose length is a
    /// power of two is read as binary, anything else as hex. Passing `n`
    /// settles the ambiguity.
    pub fn parse(s: &str, n: Option<u32>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            let json: TableJson =
                serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            if let Some(n) = n {
                if n != json.n {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: json.n,
                    });
                }
            }
            return Self::parse(&json.tt, Some(json.n));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty table".into()));
        }
        let table = match n {
            Some(n) => {
                check_arity(n)?;
                let len = 1usize << n;
                if s.len() == len {
                    Self::from_binary_str(s)?
                } else if len >= 4 && s.len() == len / 4 {
                    Self::from_hex_str(s)?
                } else {
                    return Err(Error::Parse(format!(
                        "length {} matches neither binary ({len}) nor hex ({}) for n = {n}",
                        s.len(),
                        len / 4
                    )));
                }
            }
            None => {
                let binary = s.len().is_power_of_two() && s.bytes().all(|b| b == b'0' || b == b'1');
                if binary {
                    Self::from_binary_str(s)?
                } else {
                    Self::from_hex_str(s)?
                }
            }
        };
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableJson {
            n: self.n,
            tt: self.to_binary_string(),
        })
        .expect("table json")
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary_string())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruthTable")
            .field("n", &self.n)
            .field(
                "tt",
                &self
                    .to_hex_string()
                    .unwrap_or_else(|| self.to_binary_string()),
            )
            .finish()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    n: u32,
    tt: String,
}

/// Outcome of [`TruthTable::shuffle_search_bent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShuffleSearch {
    Found { table: TruthTable, iterations: u64 },
    NotFound { iterations: u64 },
}

impl ShuffleSearch {
    pub fn iterations(&self) -> u64 {
        match self {
            Self::Found { iterations, .. } | Self::NotFound { iterations } => *iterations,
        }
    }

    pub fn table(self) -> Option<TruthTable> {
        match self {
            Self::Found { table, .. } => Some(table),
            Self::NotFound { .. } => None,
        }
    }
}

/// In-place binary Moebius transform. It is an involution, so the same
/// routine maps truth tables to ANF coefficients and back.
fn moebius(n: u32, words: &mut [u64]) {
    for j in 0..n.min(6) {
        let shift = 1u32 << j;
        for w in words.iter_mut() {
            *w ^= (*w & LOW_HALF[j as usize]) << shift;
        }
    }
    for j in 6..n {
        let stride = 1usize << (j - 6);
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// Algebraic normal form: `f = XOR over m of a_m * prod_{j in m} x_j`.
///
/// Coefficient `a_m` is stored at index `m`, using the same packing as
/// [`TruthTable`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    coeffs: TruthTable,
}

impl AnfPolynomial {
    pub fn from_table(table: &TruthTable) -> Self {
        let mut coeffs = table.clone();
        moebius(coeffs.n, &mut coeffs.words);
        Self { coeffs }
    }

    pub fn to_table(&self) -> TruthTable {
        let mut table = self.coeffs.clone();
        moebius(table.n, &mut table.words);
        table
    }

    pub fn from_monomials(n: u32, monomials: &[u32]) -> Result<Self> {
        let mut coeffs = TruthTable::zeros(n)?;
        for &m in monomials {
            if u64::from(m) >= 1u64 << n {
                return Err(Error::ValueOutOfRange { value: m.into(), n });
            }
            let x = m as usize;
            coeffs.set(x, !coeffs.get(x));
        }
        Ok(Self { coeffs })
    }

    pub fn arity(&self) -> u32 {
        self.coeffs.n
    }

    pub fn coefficient(&self, monomial: u32) -> bool {
        self.coeffs.get(monomial as usize)
    }

    /// Monomial masks with a nonzero coefficient, ascending.
    pub fn monomials(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &w) in self.coeffs.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push((i * 64) as u32 + w.trailing_zeros());
                w &= w - 1;
            }
        }
        out
    }

    /// Largest monomial size; 0 for constant functions.
    pub fn degree(&self) -> u32 {
        self.monomials()
            .into_iter()
            .map(u32::count_ones)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomials = self.monomials();
        if monomials.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = monomials
            .iter()
            .map(|&m| {
                if m == 0 {
                    return "1".to_string();
                }
                (0..32)
                    .filter(|j| (m >> j) & 1 == 1)
                    .map(|j| format!("x{j}"))
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AnfPolynomial(n = {}, {})", self.arity(), self)
    }
}
