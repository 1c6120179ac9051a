//! Colored permutations: descent and excedance statistics, derangements,
//! the inversion-sequence encoding, and the bad-letter insertion bijection.
//!
//! A colored permutation on `n` letters with `r` colors is a pair of a
//! permutation and a color vector with entries in `0..r`. Statistics pad
//! the word with the letter `n + 1` in color 0: position `i` in `1..=n` is
//! a descent when the color drops, or the colors tie and the letter drops.
//! An excedance is a position with `p(i) > i`, or a fixed point of nonzero
//! color; a derangement is a word with no fixed point of color 0.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::caps::DEFAULT_COLORED_CAP;
use crate::error::{Error, Result};
use crate::inversion::{InversionSequence, SSequence};
use crate::perm::{all_permutations, Permutation};
use crate::poly::IntPolynomial;

/// A permutation of `1..=n` with a color in `0..modulus` on each position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPermutation {
    perm: Permutation,
    colors: Vec<u64>,
    modulus: u64,
}

impl ColoredPermutation {
    pub fn new(perm: Permutation, colors: Vec<u64>, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::invalid("the color modulus must be positive"));
        }
        if colors.len() != perm.len() {
            return Err(Error::invalid(format!(
                "{} colors for {} letters",
                colors.len(),
                perm.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= modulus) {
            return Err(Error::invalid(format!(
                "color {c} is out of range for modulus {modulus}"
            )));
        }
        Ok(ColoredPermutation {
            perm,
            colors,
            modulus,
        })
    }

    /// Parses words like `"2^2 1^1 3^0"`.
    pub fn parse(text: &str, modulus: u64) -> Result<Self> {
        let mut values = Vec::new();
        let mut colors = Vec::new();
        for token in text.split_whitespace() {
            let (v, c) = token
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("token {token:?} is not letter^color")))?;
            values.push(
                v.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad letter {v:?}: {e}")))?,
            );
            colors.push(
                c.parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad color {c:?}: {e}")))?,
            );
        }
        ColoredPermutation::new(Permutation::new(values)?, colors, modulus)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Letter and color at a 1-based position, with the padded end
    /// `(n + 1, 0)` at position `n + 1`.
    fn at(&self, i: usize) -> (usize, u64) {
        if i == self.len() + 1 {
            (self.len() + 1, 0)
        } else {
            (self.perm.values()[i - 1], self.colors[i - 1])
        }
    }

    /// Positions `i` in `1..=n` where the color drops, or ties while the
    /// letter drops, against position `i + 1` (padded).
    pub fn descents(&self) -> usize {
        (1..=self.len())
            .filter(|&i| {
                let (v, c) = self.at(i);
                let (vn, cn) = self.at(i + 1);
                c > cn || (c == cn && v > vn)
            })
            .count()
    }

    /// Positions with `p(i) > i`, plus fixed points of nonzero color.
    pub fn excedances(&self) -> usize {
        (1..=self.len())
            .filter(|&i| {
                let (v, c) = self.at(i);
                v > i || (v == i && c > 0)
            })
            .count()
    }

    /// True when no position is a fixed point of color 0.
    pub fn is_derangement(&self) -> bool {
        (1..=self.len()).all(|i| {
            let (v, c) = self.at(i);
            v != i || c > 0
        })
    }

    /// The letters that can be removed by the insertion bijection: letters
    /// whose position and predecessor position both hold right-to-left
    /// minima (the empty prefix counts, with color 0) and whose colors agree.
    pub fn bad_numbers(&self) -> Vec<usize> {
        let n = self.len();
        let values = self.perm.values();
        // rl_min[j]: the letter at 1-based position j+1 is below everything
        // to its right.
        let mut rl_min = vec![false; n + 1];
        rl_min[0] = true;
        let mut best = usize::MAX;
        for j in (1..=n).rev() {
            rl_min[j] = values[j - 1] < best;
            best = best.min(values[j - 1]);
        }
        let mut bad: Vec<usize> = (1..=n)
            .filter(|&j| {
                if !(rl_min[j] && rl_min[j - 1]) {
                    return false;
                }
                let color = self.colors[j - 1];
                let prev_color = if j == 1 { 0 } else { self.colors[j - 2] };
                color == prev_color
            })
            .map(|j| values[j - 1])
            .collect();
        bad.sort_unstable();
        bad
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&v, &c)) in self.perm.values().iter().zip(&self.colors).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}^{c}")?;
        }
        Ok(())
    }
}

fn check_colored_cap(n: usize, r: u64) -> Result<()> {
    let mut states = BigInt::one();
    for k in 1..=n as u64 {
        states *= BigInt::from(k) * BigInt::from(r);
    }
    match states <= BigInt::from(DEFAULT_COLORED_CAP) {
        true => Ok(()),
        false => Err(Error::TooLarge {
            what: "colored permutation enumeration",
            size: states.to_string(),
            cap: DEFAULT_COLORED_CAP,
        }),
    }
}

/// All colored permutations on `n` letters with `r` colors, under the
/// enumeration cap.
pub fn all_colored(n: usize, r: u64) -> Result<Vec<ColoredPermutation>> {
    if r == 0 {
        return Err(Error::invalid("the color modulus must be positive"));
    }
    check_colored_cap(n, r)?;
    let mut out = Vec::new();
    for perm in all_permutations(n)? {
        let mut colors = vec![0u64; n];
        loop {
            out.push(ColoredPermutation {
                perm: perm.clone(),
                colors: colors.clone(),
                modulus: r,
            });
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                colors[i] += 1;
                if colors[i] < r {
                    break;
                }
                colors[i] = 0;
            }
            if colors.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// The descent polynomial over all colored permutations.
pub fn colored_eulerian(n: usize, r: u64) -> Result<IntPolynomial> {
    let mut hist = vec![BigInt::from(0); n + 1];
    for cp in all_colored(n, r)? {
        hist[cp.descents()] += 1;
    }
    Ok(IntPolynomial::new(hist))
}

/// The excedance polynomial over the colored derangements.
pub fn colored_derangement_poly(n: usize, r: u64) -> Result<IntPolynomial> {
    let mut hist = vec![BigInt::from(0); n + 1];
    for cp in all_colored(n, r)? {
        if cp.is_derangement() {
            hist[cp.excedances()] += 1;
        }
    }
    Ok(IntPolynomial::new(hist))
}

/// The descent polynomial over the colored permutations with no bad letters.
pub fn bad_free_descent_poly(n: usize, r: u64) -> Result<IntPolynomial> {
    let mut hist = vec![BigInt::from(0); n + 1];
    for cp in all_colored(n, r)? {
        if cp.bad_numbers().is_empty() {
            hist[cp.descents()] += 1;
        }
    }
    Ok(IntPolynomial::new(hist))
}

/// The colored derangement polynomial as the alternating binomial sum of
/// the colored descent polynomials.
pub fn colored_derangement_alternating(n: usize, r: u64) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::zero();
    let mut binom = BigInt::one();
    for k in 0..=n {
        // binom holds C(n, k).
        let a = if k == 0 {
            IntPolynomial::one()
        } else {
            colored_eulerian(k, r)?
        };
        let sign = if (n - k).is_multiple_of(2) { 1 } else { -1 };
        acc = &acc + &a.scaled(&(&binom * BigInt::from(sign)));
        binom = &binom * BigInt::from((n - k) as u64) / BigInt::from((k + 1) as u64);
    }
    Ok(acc)
}

/// Encodes a colored permutation as an inversion sequence under the bound
/// `(r, 2r, ..., nr)`: entry `k` is `k` times the color at position
/// `n - k + 1` plus the number of smaller letters to that position's right.
/// Descents of the word become ascents of the sequence.
pub fn psi(cp: &ColoredPermutation) -> Result<InversionSequence> {
    let n = cp.len();
    let bound = SSequence::colored_bound(n, cp.modulus())?;
    let values = cp.perm().values();
    let entries: Vec<u64> = (1..=n)
        .map(|k| {
            let i = n - k + 1;
            let inversions = (i + 1..=n)
                .filter(|&j| values[j - 1] < values[i - 1])
                .count() as u64;
            k as u64 * cp.colors()[i - 1] + inversions
        })
        .collect();
    InversionSequence::new(entries, bound)
}

/// Decodes an inversion sequence under a bound `(r, 2r, ..., nr)` back to a
/// colored permutation.
pub fn psi_inverse(e: &InversionSequence) -> Result<ColoredPermutation> {
    let n = e.len();
    let r = e.bound().entries()[0];
    let expected = SSequence::colored_bound(n, r)?;
    if e.bound() != &expected {
        return Err(Error::invalid(format!(
            "bound {} is not of the form (r, 2r, ..., nr)",
            e.bound()
        )));
    }
    let mut colors = vec![0u64; n];
    let mut code = vec![0usize; n];
    for i in 1..=n {
        let k = (n - i + 1) as u64;
        let entry = e.entries()[n - i];
        colors[i - 1] = entry / k;
        code[i - 1] = (entry % k) as usize;
    }
    // Rebuild the letters from the inversion code, left to right.
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut values = Vec::with_capacity(n);
    for &t in &code {
        values.push(remaining.remove(t));
    }
    ColoredPermutation::new(Permutation::new(values)?, colors, r)
}

/// Removes the bad letters and relabels the rest by rank, keeping colors.
/// Returns the reduced word and the sorted bad letters.
pub fn delete_bad(cp: &ColoredPermutation) -> (ColoredPermutation, Vec<usize>) {
    let bad = cp.bad_numbers();
    let keep_letters: Vec<usize> = (1..=cp.len()).filter(|v| !bad.contains(v)).collect();
    let rank = |v: usize| keep_letters.iter().position(|&k| k == v).expect("kept") + 1;
    let mut values = Vec::new();
    let mut colors = Vec::new();
    for (pos, &v) in cp.perm().values().iter().enumerate() {
        if !bad.contains(&v) {
            values.push(rank(v));
            colors.push(cp.colors()[pos]);
        }
    }
    let reduced = ColoredPermutation::new(
        Permutation::new(values).expect("rank relabeling preserves distinctness"),
        colors,
        cp.modulus(),
    )
    .expect("colors are unchanged");
    (reduced, bad)
}

/// Inverse of `delete_bad`: relabels `reduced` into the letters outside
/// `bad` and inserts the bad letters in increasing order. The letter 1 goes
/// to the front in color 0; a later letter `i` goes after the rightmost
/// right-to-left minimum below `i`, copying that letter's color.
pub fn insert_bad(
    reduced: &ColoredPermutation,
    bad: &[usize],
    n: usize,
) -> Result<ColoredPermutation> {
    if bad.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("bad letters must be strictly increasing"));
    }
    if bad.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::invalid("bad letter out of range"));
    }
    if reduced.len() + bad.len() != n {
        return Err(Error::invalid(format!(
            "{} letters plus {} insertions do not fill {n} positions",
            reduced.len(),
            bad.len()
        )));
    }
    let keep_letters: Vec<usize> = (1..=n).filter(|v| !bad.contains(v)).collect();
    let mut word: Vec<(usize, u64)> = reduced
        .perm()
        .values()
        .iter()
        .zip(reduced.colors())
        .map(|(&v, &c)| (keep_letters[v - 1], c))
        .collect();
    for &i in bad {
        if i == 1 {
            word.insert(0, (1, 0));
            continue;
        }
        // Rightmost right-to-left minimum holding a letter below i.
        let mut target = None;
        let mut best = usize::MAX;
        for j in (0..word.len()).rev() {
            let (v, _) = word[j];
            if v < best {
                best = v;
                if v < i && target.is_none() {
                    target = Some(j);
                }
            }
        }
        // Some letter below i is present, and the smallest is such a minimum.
        let j = target.expect("a smaller letter is always present");
        let color = word[j].1;
        word.insert(j + 1, (i, color));
    }
    let values = word.iter().map(|&(v, _)| v).collect();
    let colors = word.iter().map(|&(_, c)| c).collect();
    ColoredPermutation::new(Permutation::new(values)?, colors, reduced.modulus())
}
