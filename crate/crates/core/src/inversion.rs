//! s-inversion sequences and their ascent/descent statistics.
//!
//! A sequence `e` lives under a bound sequence `s` of positive integers:
//! `0 <= e_i < s_i` for `i` in `1..=n`. Statistics are taken on the padded
//! view `e_0 = e_{n+1} = 0` with `s_0 = s_{n+1} = 1`: position `i` in
//! `0..=n` is an ascent when `e_i / s_i < e_{i+1} / s_{i+1}` and a descent
//! when the ratio strictly drops. Ratio comparisons are exact
//! (cross-multiplication); no floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A bound sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SSequence {
    entries: Vec<u64>,
}

impl SSequence {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("bound sequence must have length at least 1"));
        }
        if entries.contains(&0) {
            return Err(Error::invalid("bound sequence entries must be positive"));
        }
        Ok(SSequence { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `1`-based access matching the padded convention (`s_0 = s_{n+1} = 1`).
    pub fn padded(&self, i: usize) -> u64 {
        if i == 0 || i == self.entries.len() + 1 {
            1
        } else {
            self.entries[i - 1]
        }
    }

    /// `prod s_i` as an exact integer.
    pub fn product(&self) -> BigInt {
        self.entries.iter().map(|&s| BigInt::from(s)).product()
    }

    /// `prod s_i` if it fits in a `u64`.
    pub fn product_u64(&self) -> Option<u64> {
        self.entries
            .iter()
            .try_fold(1u64, |acc, &s| acc.checked_mul(s))
    }

    /// The bound `(2, 3, ..., n)` whose restricted sequences biject with
    /// derangements of `n` elements. Requires `n >= 2`.
    pub fn derangement_bound(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("derangement bound needs n >= 2"));
        }
        SSequence::new((2..=n as u64).collect())
    }

    /// The bound `(r, 2r, ..., nr)` for colored permutations.
    pub fn colored_bound(n: usize, r: u64) -> Result<Self> {
        if n == 0 || r == 0 {
            return Err(Error::invalid("colored bound needs n >= 1 and r >= 1"));
        }
        SSequence::new((1..=n as u64).map(|i| i * r).collect())
    }

    /// The constant bound `(r, ..., r)` of length `n`.
    pub fn constant_bound(n: usize, r: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("constant bound needs n >= 1"));
        }
        SSequence::new(vec![r; n])
    }
}

impl FromStr for SSequence {
    type Err = Error;

    /// Parses a comma-separated decimal string, e.g. `"2,3,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad bound entry {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SSequence::new(entries)
    }
}

impl fmt::Display for SSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// An inversion sequence together with the bound it lives under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSequence {
    entries: Vec<u64>,
    bound: SSequence,
}

/// Exact comparison of `a/b` and `c/d` with positive denominators.
#[inline]
fn ratio_cmp(a: u64, b: u64, c: u64, d: u64) -> std::cmp::Ordering {
    (a as u128 * d as u128).cmp(&(c as u128 * b as u128))
}

impl InversionSequence {
    pub fn new(entries: Vec<u64>, bound: SSequence) -> Result<Self> {
        if entries.len() != bound.len() {
            return Err(Error::invalid(format!(
                "sequence length {} does not match bound length {}",
                entries.len(),
                bound.len()
            )));
        }
        for (i, (&e, &s)) in entries.iter().zip(bound.entries()).enumerate() {
            if e >= s {
                return Err(Error::invalid(format!(
                    "entry e_{} = {e} is out of range for bound {s}",
                    i + 1
                )));
            }
        }
        Ok(InversionSequence { entries, bound })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn bound(&self) -> &SSequence {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Padded entry access: `e_0 = e_{n+1} = 0`.
    pub fn padded(&self, i: usize) -> u64 {
        if i == 0 || i == self.entries.len() + 1 {
            0
        } else {
            self.entries[i - 1]
        }
    }

    /// Indices `i` in `0..=n` with `e_i/s_i < e_{i+1}/s_{i+1}`.
    pub fn ascent_set(&self) -> Vec<usize> {
        let n = self.len();
        (0..=n)
            .filter(|&i| {
                ratio_cmp(
                    self.padded(i),
                    self.bound.padded(i),
                    self.padded(i + 1),
                    self.bound.padded(i + 1),
                ) == std::cmp::Ordering::Less
            })
            .collect()
    }

    /// Indices `i` in `0..=n` with `e_i/s_i > e_{i+1}/s_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        let n = self.len();
        (0..=n)
            .filter(|&i| {
                ratio_cmp(
                    self.padded(i),
                    self.bound.padded(i),
                    self.padded(i + 1),
                    self.bound.padded(i + 1),
                ) == std::cmp::Ordering::Greater
            })
            .collect()
    }

    pub fn ascents(&self) -> usize {
        self.ascent_set().len()
    }

    pub fn descents(&self) -> usize {
        self.descent_set().len()
    }

    /// True iff no padded position has a ratio tie, i.e. the sequence counts
    /// toward the derangement polynomial of its bound.
    pub fn is_restricted(&self) -> bool {
        self.first_tie().is_none()
    }

    /// The smallest padded index with a ratio tie, if any.
    pub fn first_tie(&self) -> Option<usize> {
        let n = self.len();
        (0..=n).find(|&i| {
            ratio_cmp(
                self.padded(i),
                self.bound.padded(i),
                self.padded(i + 1),
                self.bound.padded(i + 1),
            ) == std::cmp::Ordering::Equal
        })
    }

    /// The involution `e_i -> -e_i mod s_i`, which swaps ascents and descents.
    pub fn complement(&self) -> InversionSequence {
        let entries = self
            .entries
            .iter()
            .zip(self.bound.entries())
            .map(|(&e, &s)| if e == 0 { 0 } else { s - e })
            .collect();
        InversionSequence {
            entries,
            bound: self.bound.clone(),
        }
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Visits every sequence under `s` in lexicographic order, passing the raw
/// entries. Used by the polynomial builders to avoid per-item allocation.
fn for_each_sequence(s: &SSequence, mut f: impl FnMut(&[u64])) {
    let n = s.len();
    let mut e = vec![0u64; n];
    loop {
        f(&e);
        // Odometer increment from the right.
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            e[i] += 1;
            if e[i] < s.entries()[i] {
                break;
            }
            e[i] = 0;
        }
    }
}

fn statistics(s: &SSequence, e: &[u64]) -> (usize, usize) {
    let n = e.len();
    let mut asc = 0;
    let mut des = 0;
    for i in 0..=n {
        let (a, b) = if i == 0 { (0, 1) } else { (e[i - 1], s.entries()[i - 1]) };
        let (c, d) = if i == n { (0, 1) } else { (e[i], s.entries()[i]) };
        match ratio_cmp(a, b, c, d) {
            std::cmp::Ordering::Less => asc += 1,
            std::cmp::Ordering::Greater => des += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    (asc, des)
}

/// All inversion sequences under `s`, lexicographically.
pub fn enumerate_all(s: &SSequence) -> Vec<InversionSequence> {
    let mut out = Vec::new();
    for_each_sequence(s, |e| {
        out.push(InversionSequence {
            entries: e.to_vec(),
            bound: s.clone(),
        });
    });
    out
}

/// The ascent polynomial over all sequences under `s`. Its value at 1 is
/// `prod s_i`.
pub fn s_eulerian(s: &SSequence) -> IntPolynomial {
    let mut hist = vec![BigInt::from(0); s.len() + 2];
    for_each_sequence(s, |e| {
        let (asc, _) = statistics(s, e);
        hist[asc] += 1;
    });
    IntPolynomial::new(hist)
}

/// The descent polynomial over all sequences under `s`; equals the ascent
/// polynomial via the complement involution.
pub fn s_eulerian_descents(s: &SSequence) -> IntPolynomial {
    let mut hist = vec![BigInt::from(0); s.len() + 2];
    for_each_sequence(s, |e| {
        let (_, des) = statistics(s, e);
        hist[des] += 1;
    });
    IntPolynomial::new(hist)
}

/// Depth-first enumeration of the restricted sequences (no padded ratio tie
/// anywhere), pruning at the first tie rather than filtering afterwards.
fn for_each_restricted(s: &SSequence, mut f: impl FnMut(&[u64], usize, usize)) {
    let n = s.len();
    let bounds = s.entries();
    let mut e = vec![0u64; n];
    // dfs over positions; asc/des track the padded prefix comparisons
    // 0..pos (comparison i uses entries e_i, e_{i+1}).
    fn dfs(
        pos: usize,
        asc: usize,
        des: usize,
        e: &mut Vec<u64>,
        bounds: &[u64],
        f: &mut impl FnMut(&[u64], usize, usize),
    ) {
        let n = bounds.len();
        if pos == n {
            // Final comparison at padded index n: tie iff e_n = 0.
            let last = e[n - 1];
            if last != 0 {
                f(e, asc, des + 1);
            }
            return;
        }
        let (prev_num, prev_den) = if pos == 0 {
            (0u64, 1u64)
        } else {
            (e[pos - 1], bounds[pos - 1])
        };
        for v in 0..bounds[pos] {
            let ord = ratio_cmp(prev_num, prev_den, v, bounds[pos]);
            match ord {
                std::cmp::Ordering::Equal => continue,
                std::cmp::Ordering::Less => {
                    e[pos] = v;
                    dfs(pos + 1, asc + 1, des, e, bounds, f);
                }
                std::cmp::Ordering::Greater => {
                    e[pos] = v;
                    dfs(pos + 1, asc, des + 1, e, bounds, f);
                }
            }
        }
    }
    dfs(0, 0, 0, &mut e, bounds, &mut f);
}

/// All restricted sequences under `s` (no padded ratio ties), in
/// lexicographic order.
pub fn enumerate_restricted(s: &SSequence) -> Vec<InversionSequence> {
    let mut out = Vec::new();
    for_each_restricted(s, |e, _, _| {
        out.push(InversionSequence {
            entries: e.to_vec(),
            bound: s.clone(),
        });
    });
    out
}

/// The derangement polynomial of `s` by direct enumeration of the restricted
/// sequences: the ascent polynomial, which equals the descent polynomial.
pub fn s_derangement_enum(s: &SSequence) -> IntPolynomial {
    let mut hist = vec![BigInt::from(0); s.len() + 2];
    for_each_restricted(s, |_, asc, _| {
        hist[asc] += 1;
    });
    IntPolynomial::new(hist)
}

/// Same statistic taken over descents, for the equidistribution checks.
pub fn s_derangement_enum_descents(s: &SSequence) -> IntPolynomial {
    let mut hist = vec![BigInt::from(0); s.len() + 2];
    for_each_restricted(s, |_, _, des| {
        hist[des] += 1;
    });
    IntPolynomial::new(hist)
}

/// The column polynomials refining the derangement polynomial: entry `k`
/// sums `z^asc` over sequences with no ratio tie before the last position
/// and last entry exactly `k`. Computed by the level-by-level recursion, not
/// by enumeration.
///
/// Level 1 is `(0, z, z, ..., z)`; level `n` entry `k` is assembled from
/// level `n-1` with a threshold `t = ceil(k * s_{n-1} / s_n)`: entries below
/// `t` enter multiplied by `z` (an ascent into the last position), entry `t`
/// enters unchanged unless `s_n` divides `k * s_{n-1}` (a forbidden tie),
/// and entries above `t` enter unchanged. Out-of-range thresholds simply
/// truncate.
pub fn derangement_columns(s: &SSequence) -> Vec<IntPolynomial> {
    let bounds = s.entries();
    let z = IntPolynomial::z();
    let mut level: Vec<IntPolynomial> = (0..bounds[0])
        .map(|k| if k == 0 { IntPolynomial::zero() } else { z.clone() })
        .collect();
    for w in 1..bounds.len() {
        let s_prev = bounds[w - 1];
        let s_cur = bounds[w];
        // Prefix sums of the previous level for the two weighted ranges.
        let mut prefix = Vec::with_capacity(level.len() + 1);
        prefix.push(IntPolynomial::zero());
        for p in &level {
            let last = prefix.last().expect("nonempty");
            prefix.push(last + p);
        }
        let total = prefix.last().expect("nonempty").clone();
        let next: Vec<IntPolynomial> = (0..s_cur)
            .map(|k| {
                let product = k as u128 * s_prev as u128;
                let t = product.div_ceil(s_cur as u128) as u64;
                let t_clamped = t.min(s_prev) as usize;
                let below = &prefix[t_clamped];
                let mut acc = &z * below;
                if t < s_prev {
                    let tied = product.is_multiple_of(s_cur as u128);
                    let from = if tied { t as usize + 1 } else { t as usize };
                    if from < level.len() {
                        acc = &acc + &(&total - &prefix[from]);
                    }
                }
                acc
            })
            .collect();
        level = next;
    }
    level
}

/// The derangement polynomial of `s` via the column recursion: the sum of
/// the column polynomials over last entries `1..s_n`.
pub fn s_derangement_recursive(s: &SSequence) -> IntPolynomial {
    let columns = derangement_columns(s);
    let mut acc = IntPolynomial::zero();
    for p in columns.iter().skip(1) {
        acc = &acc + p;
    }
    acc
}

/// The interlacing certificate: the column polynomials in order of last
/// entry. Consecutive members interlace, which certifies real-rootedness of
/// their sum.
pub fn interlacing_certificate(s: &SSequence) -> Vec<IntPolynomial> {
    derangement_columns(s)
}
