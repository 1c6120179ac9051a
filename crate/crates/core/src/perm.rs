//! Permutations, descent and excedance statistics, derangements, and the
//! cycle bijection between restricted inversion sequences and derangements.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::caps::DEFAULT_PERMUTATION_CAP;
use crate::error::{Error, Result};
use crate::inversion::{InversionSequence, SSequence};
use crate::poly::IntPolynomial;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::invalid(format!("letter {v} is out of range")));
            }
            if seen[v - 1] {
                return Err(Error::invalid(format!("letter {v} repeats")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of the 1-based letter `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// Number of positions `i < n` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Number of positions with `p(i) > i`.
    pub fn excedances(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// The smallest fixed point, if any.
    pub fn fixed_point(&self) -> Option<usize> {
        self.values
            .iter()
            .enumerate()
            .find(|&(i, &v)| v == i + 1)
            .map(|(i, _)| i + 1)
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_point().is_none()
    }

    /// Cycle decomposition; each cycle starts at its smallest letter and the
    /// cycles are sorted by those minima.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.values[x - 1];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl std::fmt::Display for Permutation {
    /// One-line word for single-digit letters, comma-separated otherwise.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.values.len() < 10 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.values.iter().join(","))
        }
    }
}

fn check_permutation_cap(n: usize) -> Result<()> {
    if n <= DEFAULT_PERMUTATION_CAP {
        return Ok(());
    }
    let size = if n <= 20 {
        (1..=n as u64)
            .map(BigInt::from)
            .product::<BigInt>()
            .to_string()
    } else {
        format!("{n}!")
    };
    let cap: u64 = (1..=DEFAULT_PERMUTATION_CAP as u64).product();
    Err(Error::TooLarge {
        what: "permutation enumeration",
        size,
        cap,
    })
}

/// All permutations of `1..=n` in lexicographic order, under the
/// enumeration cap.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    check_permutation_cap(n)?;
    if n == 0 {
        return Ok(vec![Permutation { values: vec![] }]);
    }
    Ok((1..=n)
        .permutations(n)
        .map(|values| Permutation { values })
        .collect())
}

/// All derangements of `1..=n`, under the enumeration cap.
pub fn all_derangements(n: usize) -> Result<Vec<Permutation>> {
    Ok(all_permutations(n)?
        .into_iter()
        .filter(Permutation::is_derangement)
        .collect())
}

/// The descent polynomial over all permutations of `1..=n`.
pub fn eulerian_poly(n: usize) -> Result<IntPolynomial> {
    check_permutation_cap(n)?;
    let mut hist = vec![BigInt::from(0); n.max(1)];
    for p in all_permutations(n)? {
        hist[p.descents()] += 1;
    }
    Ok(IntPolynomial::new(hist))
}

/// The excedance polynomial over all derangements of `1..=n`.
pub fn derangement_poly(n: usize) -> Result<IntPolynomial> {
    check_permutation_cap(n)?;
    let mut hist = vec![BigInt::from(0); n + 1];
    for p in all_derangements(n)? {
        hist[p.excedances()] += 1;
    }
    Ok(IntPolynomial::new(hist))
}

/// Sends a restricted inversion sequence under the bound `(2, 3, ..., n)` to
/// a derangement of `n` letters, turning descents into excedances.
///
/// The padded entries `e_n, ..., e_0` are read from the right. A zero entry
/// closes the open cycle and, except at position 0, opens a new one at the
/// smallest unused letter; an entry `e > 0` appends the `e`-th smallest
/// unused letter to the open cycle.
pub fn inversion_to_derangement(e: &InversionSequence) -> Result<Permutation> {
    let n = e.len() + 1;
    let expected = SSequence::derangement_bound(n)?;
    if e.bound() != &expected {
        return Err(Error::invalid(format!(
            "bound {} is not the derangement bound {expected}",
            e.bound()
        )));
    }
    if let Some(position) = e.first_tie() {
        return Err(Error::NotRestricted { position });
    }
    let mut available: Vec<usize> = (1..=n).collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for i in (0..=n).rev() {
        let entry = e.padded(i);
        if entry == 0 {
            if !current.is_empty() {
                cycles.push(std::mem::take(&mut current));
            }
            if i > 0 {
                current.push(available.remove(0));
            }
        } else {
            current.push(available.remove(entry as usize - 1));
        }
    }
    debug_assert!(current.is_empty() && available.is_empty());
    let mut values = vec![0usize; n];
    for cycle in &cycles {
        for k in 0..cycle.len() {
            values[cycle[k] - 1] = cycle[(k + 1) % cycle.len()];
        }
    }
    Permutation::new(values)
}

/// Inverse of the cycle map: rotate each cycle to its smallest letter, sort
/// the cycles by those minima, and read the entries back off.
pub fn derangement_to_inversion(p: &Permutation) -> Result<InversionSequence> {
    let n = p.len();
    if n < 2 {
        return Err(Error::invalid("derangements need at least two letters"));
    }
    if let Some(value) = p.fixed_point() {
        return Err(Error::HasFixedPoint { value });
    }
    let mut available: Vec<usize> = (1..=n).collect();
    let mut by_position = vec![0u64; n + 1];
    let mut i = n;
    for cycle in p.cycles() {
        for (k, &letter) in cycle.iter().enumerate() {
            let rank = available
                .iter()
                .position(|&a| a == letter)
                .expect("each letter is consumed once");
            by_position[i] = if k == 0 {
                debug_assert_eq!(rank, 0, "cycle opens at the smallest unused letter");
                0
            } else {
                rank as u64 + 1
            };
            available.remove(rank);
            i -= 1;
        }
    }
    debug_assert_eq!(i, 0);
    debug_assert_eq!(by_position[n], 0);
    let entries: Vec<u64> = (1..n).map(|j| by_position[j]).collect();
    InversionSequence::new(entries, SSequence::derangement_bound(n)?)
}

/// Words `w_0 ... w_n` over `{0, ..., r-1}` with `w_0 = w_n = 0` and all
/// adjacent letters distinct.
pub fn smirnoff_words(n: usize, r: u64) -> Vec<Vec<u64>> {
    if r == 0 {
        return Vec::new();
    }
    if n == 0 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    let mut w = vec![0u64; n + 1];
    fn dfs(pos: usize, n: usize, r: u64, w: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos == n {
            if w[n - 1] != 0 {
                out.push(w.clone());
            }
            return;
        }
        for letter in 0..r {
            if letter != w[pos - 1] {
                w[pos] = letter;
                dfs(pos + 1, n, r, w, out);
            }
        }
    }
    dfs(1, n, r, &mut w, &mut out);
    out
}

/// Number of adjacent drops `w_i > w_(i+1)` in a word.
pub fn word_descents(word: &[u64]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// The descent polynomial over all Smirnoff words of length `n + 1` with
/// `r` letters.
pub fn smirnoff_descent_poly(n: usize, r: u64) -> IntPolynomial {
    let mut hist = vec![BigInt::from(0); n + 1];
    for word in smirnoff_words(n, r) {
        hist[word_descents(&word)] += 1;
    }
    IntPolynomial::new(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversion::{enumerate_restricted, s_derangement_enum};
    use std::collections::BTreeSet;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    fn perm(values: &[usize]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn statistics() {
        let p = perm(&[3, 4, 5, 2, 1]);
        assert_eq!(p.descents(), 2);
        assert_eq!(p.excedances(), 3);
        assert!(p.is_derangement());
        assert_eq!(p.cycles(), vec![vec![1, 3, 5], vec![2, 4]]);
        assert_eq!(perm(&[1, 3, 2]).fixed_point(), Some(1));
        assert!(Permutation::identity(0).is_derangement());
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(eulerian_poly(0).unwrap(), poly(&[1]));
        assert_eq!(eulerian_poly(1).unwrap(), poly(&[1]));
        assert_eq!(eulerian_poly(2).unwrap(), poly(&[1, 1]));
        assert_eq!(eulerian_poly(3).unwrap(), poly(&[1, 4, 1]));
        assert_eq!(eulerian_poly(4).unwrap(), poly(&[1, 11, 11, 1]));
    }

    #[test]
    fn derangement_polynomials() {
        assert_eq!(derangement_poly(2).unwrap(), poly(&[0, 1]));
        assert_eq!(derangement_poly(3).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(derangement_poly(4).unwrap(), poly(&[0, 1, 7, 1]));
        // Values at 1 are the subfactorials.
        let subfactorials = [1i64, 0, 1, 2, 9, 44, 265];
        for (n, &expected) in subfactorials.iter().enumerate() {
            assert_eq!(
                derangement_poly(n).unwrap().eval_at_one(),
                BigInt::from(expected)
            );
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            derangement_poly(10),
            Err(Error::TooLarge { cap: 362_880, .. })
        ));
        assert!(all_permutations(12).is_err());
    }

    #[test]
    fn worked_bijection_example() {
        let bound = SSequence::derangement_bound(5).unwrap();
        let e = InversionSequence::new(vec![1, 0, 3, 2], bound).unwrap();
        assert_eq!(e.descents(), 3);
        let p = inversion_to_derangement(&e).unwrap();
        assert_eq!(p.values(), &[3, 4, 5, 2, 1]);
        assert_eq!(p.excedances(), 3);
        assert_eq!(derangement_to_inversion(&p).unwrap(), e);
    }

    #[test]
    fn bijection_round_trips_exhaustively() {
        for n in 2..=6usize {
            let bound = SSequence::derangement_bound(n).unwrap();
            let restricted = enumerate_restricted(&bound);
            let mut images = BTreeSet::new();
            for e in &restricted {
                let p = inversion_to_derangement(e).unwrap();
                assert!(p.is_derangement());
                assert_eq!(p.excedances(), e.descents(), "statistic mismatch for {e}");
                assert_eq!(&derangement_to_inversion(&p).unwrap(), e);
                images.insert(p.values().to_vec());
            }
            let derangements = all_derangements(n).unwrap();
            assert_eq!(images.len(), derangements.len());
            for d in &derangements {
                let e = derangement_to_inversion(d).unwrap();
                assert!(e.is_restricted());
                assert_eq!(&inversion_to_derangement(&e).unwrap(), d);
            }
        }
    }

    #[test]
    fn derangement_polynomial_matches_restricted_sequences() {
        for n in 2..=6usize {
            let bound = SSequence::derangement_bound(n).unwrap();
            assert_eq!(s_derangement_enum(&bound), derangement_poly(n).unwrap());
        }
    }

    #[test]
    fn bijection_rejects_bad_inputs() {
        let bound = SSequence::derangement_bound(3).unwrap();
        let tied = InversionSequence::new(vec![0, 1], bound.clone()).unwrap();
        assert!(matches!(
            inversion_to_derangement(&tied),
            Err(Error::NotRestricted { position: 0 })
        ));
        let wrong_bound = SSequence::new(vec![3, 3]).unwrap();
        let e = InversionSequence::new(vec![1, 2], wrong_bound).unwrap();
        assert!(inversion_to_derangement(&e).is_err());
        assert!(matches!(
            derangement_to_inversion(&perm(&[1, 3, 2])),
            Err(Error::HasFixedPoint { value: 1 })
        ));
    }

    #[test]
    fn smirnoff_examples() {
        assert!(smirnoff_words(3, 2).is_empty());
        let words = smirnoff_words(3, 3);
        assert_eq!(words, vec![vec![0, 1, 2, 0], vec![0, 2, 1, 0]]);
        assert_eq!(smirnoff_descent_poly(3, 3), poly(&[0, 1, 1]));
        assert_eq!(smirnoff_descent_poly(0, 2), poly(&[1]));
        assert_eq!(smirnoff_descent_poly(1, 4), IntPolynomial::zero());
        assert_eq!(smirnoff_descent_poly(2, 2), poly(&[0, 1]));
    }

    #[test]
    fn smirnoff_matches_constant_bound_derangements() {
        for n in 1..=4usize {
            for r in 2..=4u64 {
                let bound = SSequence::constant_bound(n, r).unwrap();
                assert_eq!(
                    smirnoff_descent_poly(n + 1, r),
                    s_derangement_enum(&bound),
                    "n = {n}, r = {r}"
                );
            }
        }
    }
}
