//! Naturally labeled partial orders on at most 64 elements.
//!
//! Elements are `1..=n`, and every order relation `a < b` must also drop in
//! the integer labels (`a < b` as numbers). Relations are stored as closure
//! bitmasks, so cover queries, filter enumeration, and linear extensions
//! all reduce to word operations.

use serde::Deserialize;

use crate::error::{Error, Result};

/// A partial order, closed under transitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// `below[i]`: elements strictly below `i` (0-based masks).
    below: Vec<u64>,
    /// `above[i]`: elements strictly above `i`.
    above: Vec<u64>,
}

#[derive(Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from 1-based relation pairs `(a, b)` meaning `a < b`;
    /// each pair must rise in the labels.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::invalid("posets are limited to 64 elements"));
        }
        let mut below = vec![0u64; n];
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("relation ({a}, {b}) is out of range")));
            }
            if a >= b {
                return Err(Error::invalid(format!(
                    "relation ({a}, {b}) violates the natural labeling"
                )));
            }
            below[b - 1] |= 1 << (a - 1);
        }
        // Transitive closure; ascending label order suffices because
        // relations only rise.
        for b in 0..n {
            let mut acc = below[b];
            let mut rest = below[b];
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc |= below[a];
            }
            below[b] = acc;
        }
        let mut above = vec![0u64; n];
        for (b, &mask) in below.iter().enumerate() {
            let mut rest = mask;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                above[a] |= 1 << b;
            }
        }
        Ok(Poset { n, below, above })
    }

    /// Parses `{"n": 3, "covers": [[1, 2], [1, 3]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PosetJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Poset::new(raw.n, &raw.covers)
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Self {
        let relations: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::new(n, &relations).expect("chain relations rise")
    }

    /// The antichain on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Poset::new(n, &[]).expect("no relations")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict order test on 1-based elements.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[b - 1] & (1 << (a - 1)) != 0
    }

    /// Elements strictly below the 1-based `b`, as a 0-based mask.
    pub fn below_mask(&self, b: usize) -> u64 {
        self.below[b - 1]
    }

    /// Elements strictly above the 1-based `a`, as a 0-based mask.
    pub fn above_mask(&self, a: usize) -> u64 {
        self.above[a - 1]
    }

    /// The covering pairs (transitive reduction), 1-based and sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 1..=self.n {
            let mut rest = self.below[b - 1];
            while rest != 0 {
                let a = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                if self.above[a - 1] & self.below[b - 1] == 0 {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// 1-based minimal elements.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.below[i - 1] == 0).collect()
    }

    /// The unique minimum, when there is exactly one minimal element.
    pub fn unique_minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    /// The induced subposet with the 1-based `element` removed and the
    /// remaining labels compacted.
    pub fn delete(&self, element: usize) -> Poset {
        let keep: Vec<usize> = (1..=self.n).filter(|&i| i != element).collect();
        let rank = |v: usize| keep.iter().position(|&k| k == v).expect("kept") + 1;
        let mut relations = Vec::new();
        for &b in &keep {
            for &a in &keep {
                if a < b && self.less(a, b) {
                    relations.push((rank(a), rank(b)));
                }
            }
        }
        Poset::new(self.n - 1, &relations).expect("induced relations rise")
    }

    /// All linear extensions as 1-based element sequences, lexicographically.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.n);
        self.extend_linear(0u64, &mut current, &mut out);
        out
    }

    fn extend_linear(&self, placed: u64, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == self.n {
            out.push(current.clone());
            return;
        }
        for i in 0..self.n {
            let bit = 1u64 << i;
            if placed & bit == 0 && self.below[i] & !placed == 0 {
                current.push(i + 1);
                self.extend_linear(placed | bit, current, out);
                current.pop();
            }
        }
    }

    /// All up-closed subsets as 0-based masks, sorted.
    pub fn filters(&self) -> Vec<u64> {
        let mut filters = vec![0u64];
        for i in (0..self.n).rev() {
            let mut next = Vec::with_capacity(filters.len() * 2);
            for &f in &filters {
                next.push(f);
                if self.above[i] & !f == 0 {
                    next.push(f | (1 << i));
                }
            }
            filters = next;
        }
        filters.sort_unstable();
        filters
    }

    /// Longest-chain heights: entry `i` is the edge length of the longest
    /// chain ending at element `i + 1`.
    pub fn heights(&self) -> Vec<usize> {
        let mut rho = vec![0usize; self.n];
        for b in 0..self.n {
            let mut rest = self.below[b];
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                rho[b] = rho[b].max(rho[a] + 1);
            }
        }
        rho
    }

    /// True when every cover raises the longest-chain height by exactly one.
    pub fn is_ranked(&self) -> bool {
        self.rank_sequence().is_ok()
    }

    /// The rank bounds `height + 1` per element, or the witness cover that
    /// breaks rankedness.
    pub fn rank_sequence(&self) -> Result<Vec<u64>> {
        let rho = self.heights();
        for (a, b) in self.covers() {
            if rho[b - 1] != rho[a - 1] + 1 {
                return Err(Error::NotRanked {
                    element: b,
                    low: rho[a - 1] + 1,
                    high: rho[b - 1],
                });
            }
        }
        Ok(rho.into_iter().map(|r| r as u64 + 1).collect())
    }
}

/// Index of the pair `(i, j)`, `i < j`, in the triangular bit layout.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// One naturally labeled representative of every isomorphism class of
/// posets on `n` elements, for small `n`.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Poset>> {
    if n == 0 || n > 6 {
        return Err(Error::invalid(
            "the non-isomorphic corpus is built for 1 to 6 elements",
        ));
    }
    let pairs = n * (n - 1) / 2;
    let mut representatives = Vec::new();

    // Permutations of 0..n for canonical relabeling.
    let perms: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        heap_permutations(&mut items, n, &mut out);
        out
    };

    'candidate: for mask in 0u64..(1 << pairs) {
        let has = |i: usize, j: usize| mask & (1 << pair_index(i, j)) != 0;
        // Transitivity over rising triples.
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if has(i, j) && has(j, k) && !has(i, k) {
                        continue 'candidate;
                    }
                }
            }
        }
        // Canonical form: the smallest mask over relabelings that keep all
        // relations rising.
        let mut canonical = mask;
        'perm: for sigma in &perms {
            let mut image = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    if has(i, j) {
                        let (a, b) = (sigma[i], sigma[j]);
                        if a > b {
                            continue 'perm;
                        }
                        image |= 1 << pair_index(a, b);
                    }
                }
            }
            canonical = canonical.min(image);
        }
        if canonical != mask {
            continue;
        }
        let mut relations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if has(i, j) {
                    relations.push((i + 1, j + 1));
                }
            }
        }
        representatives.push(Poset::new(n, &relations)?);
    }
    Ok(representatives)
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> Poset {
        Poset::new(3, &[(1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert!(Poset::new(3, &[(2, 1)]).is_err());
        assert!(Poset::new(3, &[(1, 4)]).is_err());
        assert!(Poset::new(3, &[(0, 2)]).is_err());
        assert!(Poset::new(65, &[]).is_err());
        assert!(Poset::new(0, &[]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::from_json(r#"{"n": 3, "covers": [[1, 2], [1, 3]]}"#).unwrap();
        assert_eq!(p, v_poset());
        assert!(Poset::from_json(r#"{"n": 2, "covers": [[2, 1]]}"#).is_err());
        assert!(Poset::from_json("not json").is_err());
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::new(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert!(p.less(1, 3));
        assert!(p.less(1, 4));
        assert!(!p.less(2, 1));
        // The redundant (1, 3) disappears from the reduction.
        assert_eq!(p.covers(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn extensions_of_simple_posets() {
        assert_eq!(Poset::chain(4).linear_extensions().len(), 1);
        assert_eq!(Poset::antichain(4).linear_extensions().len(), 24);
        let exts = v_poset().linear_extensions();
        assert_eq!(exts, vec![vec![1, 2, 3], vec![1, 3, 2]]);
    }

    #[test]
    fn filters_of_the_v_poset() {
        let p = v_poset();
        // Up-closed sets: {}, {2}, {3}, {2,3}, {1,2,3}.
        assert_eq!(p.filters(), vec![0b000, 0b010, 0b100, 0b110, 0b111]);
        assert_eq!(Poset::antichain(3).filters().len(), 8);
        assert_eq!(Poset::chain(3).filters().len(), 4);
    }

    #[test]
    fn minima_and_deletion() {
        let p = v_poset();
        assert_eq!(p.minimal_elements(), vec![1]);
        assert_eq!(p.unique_minimum(), Some(1));
        assert_eq!(p.delete(1), Poset::antichain(2));
        assert_eq!(Poset::chain(3).delete(1), Poset::chain(2));
        assert_eq!(Poset::antichain(2).unique_minimum(), None);
    }

    #[test]
    fn ranks() {
        assert_eq!(Poset::chain(3).rank_sequence().unwrap(), vec![1, 2, 3]);
        assert_eq!(v_poset().rank_sequence().unwrap(), vec![1, 2, 2]);
        assert_eq!(Poset::antichain(3).rank_sequence().unwrap(), vec![1, 1, 1]);
        // 1 < 2 < 4 and 3 < 4: the cover (3, 4) jumps two levels.
        let p = Poset::new(4, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        assert!(!p.is_ranked());
        assert!(matches!(
            p.rank_sequence(),
            Err(Error::NotRanked {
                element: 4,
                low: 1,
                high: 2
            })
        ));
    }

    #[test]
    fn heights_use_longest_chains() {
        let p = Poset::new(4, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        assert_eq!(p.heights(), vec![0, 1, 0, 2]);
    }

    #[test]
    fn nonisomorphic_counts() {
        let expected = [1usize, 2, 5, 16, 63];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let posets = enumerate_nonisomorphic(n).unwrap();
            assert_eq!(posets.len(), count, "n = {n}");
            // Representatives really are canonical: pairwise distinct.
            for (x, a) in posets.iter().enumerate() {
                for b in posets.iter().skip(x + 1) {
                    assert_ne!(a, b);
                }
            }
        }
        assert!(enumerate_nonisomorphic(0).is_err());
        assert!(enumerate_nonisomorphic(7).is_err());
    }
}
