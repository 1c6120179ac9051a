//! Exact real-root analysis: Sturm sequences, squarefree decomposition,
//! root isolation with rational intervals, and interlacing of root multisets.
//!
//! All computations run over arbitrary-precision integers and rationals.
//! Intermediate polynomials are kept primitive (content divided out after
//! every remainder step) to control coefficient growth; only positive
//! constants are ever divided out, so sign sequences stay valid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Positive gcd of the coefficients (1 for the zero polynomial, so callers
/// can divide unconditionally).
fn content(p: &IntPolynomial) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            return g;
        }
    }
    if g.is_zero() {
        BigInt::one()
    } else {
        g
    }
}

/// Divides out the content; the sign of the polynomial is preserved.
fn primitive(p: &IntPolynomial) -> IntPolynomial {
    let g = content(p);
    if g.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Primitive with positive leading coefficient (for gcd normal forms).
fn primitive_monic_sign(p: &IntPolynomial) -> IntPolynomial {
    let pp = primitive(p);
    match pp.leading_coeff() {
        Some(lc) if lc.is_negative() => -&pp,
        _ => pp,
    }
}

/// Remainder of `a` divided by `b` in `Q[z]`, returned as a primitive integer
/// polynomial with the sign of the true rational remainder.
fn rational_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("division by zero polynomial");
    let mut rem: Vec<BigRational> = a
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let blead = BigRational::from_integer(b.coeff(db));
    while rem.len() > db {
        let lead = rem.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let factor = lead / &blead;
        let offset = rem.len() - db;
        for i in 0..db {
            let delta = &factor * BigRational::from_integer(b.coeff(i));
            rem[offset + i] -= delta;
        }
    }
    // Clear denominators, then the content; both scalars are positive.
    let mut lcm = BigInt::one();
    for c in &rem {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = rem
        .into_iter()
        .map(|c| {
            let scaled = c * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    primitive(&IntPolynomial::new(ints))
}

/// Exact quotient `p / q` for primitive `q` dividing `p`; `None` when the
/// division is not exact.
fn div_exact(p: &IntPolynomial, q: &IntPolynomial) -> Option<IntPolynomial> {
    if p.is_zero() {
        return Some(IntPolynomial::zero());
    }
    let dq = q.degree()?;
    let dp = p.degree()?;
    if dp < dq {
        return None;
    }
    let qlead = q.coeff(dq);
    let mut rem: Vec<BigInt> = p.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); dp - dq + 1];
    for k in (0..=dp - dq).rev() {
        let lead = rem[k + dq].clone();
        if lead.is_zero() {
            continue;
        }
        let (f, r) = lead.div_rem(&qlead);
        if !r.is_zero() {
            return None;
        }
        for i in 0..=dq {
            rem[k + i] -= &f * q.coeff(i);
        }
        quot[k] = f;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(IntPolynomial::new(quot))
}

/// Primitive gcd with positive leading coefficient; `gcd(p, 0) = normalize(p)`.
fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let mut a = primitive_monic_sign(p);
    let mut b = primitive_monic_sign(q);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = if b.degree() == Some(0) {
            IntPolynomial::zero()
        } else {
            rational_rem(&a, &b)
        };
        a = b;
        b = r;
    }
    primitive_monic_sign(&a)
}

/// Squarefree decomposition: the pairwise coprime squarefree factors `u` with
/// their multiplicities `k`, so that `p = c * prod u^k`. Constant factors are
/// omitted.
fn yun_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let f = primitive_monic_sign(p);
    if f.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let g = poly_gcd(&f, &f.derivative());
    if g.degree() == Some(0) {
        return vec![(f, 1)];
    }
    let mut c = div_exact(&f, &g).expect("gcd divides");
    let mut d = &div_exact(&f.derivative(), &g).expect("gcd divides f'") - &c.derivative();
    let mut factors = Vec::new();
    let mut i = 1;
    while c.degree().is_some_and(|deg| deg > 0) {
        let a = poly_gcd(&c, &d);
        if a.degree().is_some_and(|deg| deg > 0) {
            factors.push((a.clone(), i));
        }
        c = div_exact(&c, &a).expect("factor divides");
        d = &div_exact(&d, &a).expect("factor divides") - &c.derivative();
        i += 1;
    }
    factors
}

/// Sturm chain of a polynomial, every member primitive with its true sign.
fn sturm_chain(w: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![primitive(w)];
    let d = w.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(primitive(&d));
    loop {
        let n = chain.len();
        if chain[n - 1].degree().is_none_or(|deg| deg == 0) {
            break;
        }
        let r = rational_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

/// Sign of `p` at the rational `x = num/den` (`den > 0`), via the homogenized
/// integer evaluation `sum c_i num^i den^(deg-i)`.
fn sign_at(p: &IntPolynomial, x: &BigRational) -> i8 {
    match p.degree() {
        None => 0,
        Some(d) => {
            let num = x.numer();
            let den = x.denom();
            let mut acc = BigInt::zero();
            let mut den_pow = BigInt::one();
            // Horner in num, tracking the matching power of den.
            for i in (0..=d).rev() {
                acc = acc * num + p.coeff(i) * &den_pow;
                if i > 0 {
                    den_pow *= den;
                }
            }
            sign_of(&acc)
        }
    }
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

#[derive(Clone, Copy)]
enum SamplePoint<'a> {
    NegInfinity,
    PosInfinity,
    At(&'a BigRational),
}

fn sign_at_sample(p: &IntPolynomial, s: SamplePoint<'_>) -> i8 {
    match s {
        SamplePoint::At(x) => sign_at(p, x),
        SamplePoint::PosInfinity => p.leading_coeff().map_or(0, sign_of),
        SamplePoint::NegInfinity => match p.degree() {
            None => 0,
            Some(d) => {
                let s = p.leading_coeff().map_or(0, sign_of);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        },
    }
}

/// Number of sign variations of the chain at a sample point, zeros skipped.
fn variations(chain: &[IntPolynomial], s: SamplePoint<'_>) -> usize {
    let mut count = 0;
    let mut prev = 0i8;
    for p in chain {
        let sig = sign_at_sample(p, s);
        if sig == 0 {
            continue;
        }
        if prev != 0 && sig != prev {
            count += 1;
        }
        prev = sig;
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial in `(a, b]`;
/// both endpoints must be non-roots.
fn roots_in(chain: &[IntPolynomial], a: &BigRational, b: &BigRational) -> usize {
    variations(chain, SamplePoint::At(a)) - variations(chain, SamplePoint::At(b))
}

/// Strict upper bound on the absolute value of every root: `1 + max|c_i| / |lc|`.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let d = p.degree().expect("nonzero polynomial");
    let lc = p.coeff(d).abs();
    let mut max = BigInt::zero();
    for i in 0..d {
        let a = p.coeff(i).abs();
        if a > max {
            max = a;
        }
    }
    BigRational::one() + BigRational::new(max, lc)
}

impl IntPolynomial {
    /// The squarefree part `p / gcd(p, p')`, primitive with positive leading
    /// coefficient. Zero for the zero polynomial.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        if self.degree() == Some(0) {
            return IntPolynomial::one();
        }
        let g = poly_gcd(self, &self.derivative());
        let q = div_exact(&primitive_monic_sign(self), &g).expect("gcd divides");
        primitive_monic_sign(&q)
    }

    /// Counts distinct real roots via a Sturm chain on the squarefree part.
    pub fn count_distinct_real_roots(&self) -> usize {
        let w = self.squarefree_part();
        if w.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let chain = sturm_chain(&w);
        variations(&chain, SamplePoint::NegInfinity) - variations(&chain, SamplePoint::PosInfinity)
    }

    /// True iff every root is real: the Sturm count of distinct real roots of
    /// the squarefree part equals its degree. The zero polynomial and
    /// constants count as real-rooted.
    pub fn is_real_rooted(&self) -> bool {
        if self.is_zero() || self.degree() == Some(0) {
            return true;
        }
        let w = self.squarefree_part();
        let d = w.degree().expect("nonconstant");
        self.count_distinct_real_roots() == d && w.degree() == Some(d)
    }
}

/// The distinct real roots of a polynomial, isolated in disjoint open
/// rational intervals, with the multiplicity of each.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    intervals: Vec<(BigRational, BigRational)>,
    multiplicities: Vec<usize>,
}

impl RootIsolation {
    /// Isolates every distinct real root of `p` (bisection from a Cauchy
    /// bound on the squarefree part) and reads multiplicities off the
    /// squarefree decomposition. Intervals are sorted ascending; the sum of
    /// multiplicities is at most `degree(p)`, with equality exactly when `p`
    /// is real-rooted.
    pub fn isolate(p: &IntPolynomial) -> Result<RootIsolation> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let w = p.squarefree_part();
        if w.degree().is_none_or(|d| d == 0) {
            return Ok(RootIsolation {
                intervals: Vec::new(),
                multiplicities: Vec::new(),
            });
        }
        let intervals = isolate_squarefree(&w)?;
        let factors = yun_decomposition(p);
        let factor_chains: Vec<(Vec<IntPolynomial>, usize)> = factors
            .iter()
            .map(|(u, k)| (sturm_chain(u), *k))
            .collect();
        let mut multiplicities = Vec::with_capacity(intervals.len());
        for (lo, hi) in &intervals {
            let mut mult = 0usize;
            let mut hits = 0usize;
            for (chain, k) in &factor_chains {
                let c = roots_in(chain, lo, hi);
                debug_assert!(c <= 1);
                if c == 1 {
                    mult += k;
                    hits += 1;
                }
            }
            // Yun factors are pairwise coprime: exactly one owns the root.
            assert_eq!(hits, 1, "isolating interval matched {hits} factors");
            multiplicities.push(mult);
        }
        Ok(RootIsolation {
            intervals,
            multiplicities,
        })
    }

    /// Disjoint open intervals, ascending, one distinct real root each.
    pub fn intervals(&self) -> &[(BigRational, BigRational)] {
        &self.intervals
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Total number of real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// Isolating intervals for a squarefree polynomial, half-open in spirit but
/// returned as open intervals with non-root endpoints.
fn isolate_squarefree(w: &IntPolynomial) -> Result<Vec<(BigRational, BigRational)>> {
    let deg = w.degree().expect("nonconstant squarefree polynomial");
    let cap = 10 * deg;
    let chain = sturm_chain(w);
    let bound = cauchy_bound(w);
    let lo = -&bound;
    let hi = bound.clone();
    let v_lo = variations(&chain, SamplePoint::At(&lo));
    let v_hi = variations(&chain, SamplePoint::At(&hi));
    let mut out = Vec::new();
    // (lo, hi, V(lo), V(hi), depth); the count in (lo, hi] is V(lo) - V(hi).
    let mut stack = vec![(lo, hi, v_lo, v_hi, 0usize)];
    while let Some((lo, hi, v_lo, v_hi, depth)) = stack.pop() {
        let count = v_lo - v_hi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push((lo, hi));
            continue;
        }
        if depth >= cap {
            return Err(Error::IsolationBudget { cap });
        }
        let mid = pick_non_root_midpoint(w, &lo, &hi, deg);
        let v_mid = variations(&chain, SamplePoint::At(&mid));
        stack.push((lo, mid.clone(), v_lo, v_mid, depth + 1));
        stack.push((mid, hi, v_mid, v_hi, depth + 1));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// A dyadic point strictly inside `(lo, hi)` where `w` does not vanish. The
/// candidates are pairwise distinct, so at most `deg` of them can be roots.
fn pick_non_root_midpoint(
    w: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    deg: usize,
) -> BigRational {
    let width = hi - lo;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mid = lo + &width * &half;
    if sign_at(w, &mid) != 0 {
        return mid;
    }
    let mut offset = BigRational::new(BigInt::one(), BigInt::from(4));
    for _ in 0..=deg {
        let cand = lo + &width * &offset;
        if sign_at(w, &cand) != 0 {
            return cand;
        }
        offset *= &half;
    }
    unreachable!("more roots than the degree allows");
}

/// Whether the roots of `q` interlace the roots of `p`: with the roots of `p`
/// as `a_1 >= a_2 >= ...` and of `q` as `b_1 >= b_2 >= ...` (with
/// multiplicity), the weak alternation `a_1 >= b_1 >= a_2 >= b_2 >= ...`
/// holds. Shared roots are permitted. The zero polynomial interlaces and is
/// interlaced by everything; otherwise `degree(q)` must be `degree(p)` or
/// `degree(p) - 1` for the alternation to hold at all.
///
/// Decided exactly: the distinct roots of `p * q` are isolated once into
/// ordered rational intervals, each root's multiplicity in `p` and in `q` is
/// read off their squarefree decompositions, and the alternation becomes a
/// comparison of rank sequences.
pub fn interlaces(q: &IntPolynomial, p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Ok(true);
    }
    if !p.is_real_rooted() || !q.is_real_rooted() {
        return Err(Error::NotRealRooted);
    }
    let dp = p.degree().expect("nonzero");
    let dq = q.degree().expect("nonzero");
    if !(dq == dp || dq + 1 == dp) {
        return Ok(false);
    }
    if dq == 0 {
        // No roots of q; with dp <= 1 the alternation is vacuous.
        return Ok(true);
    }
    let product = p * q;
    let iso = RootIsolation::isolate(&product)?;
    let n_distinct = iso.intervals().len();
    let rank_list = |poly: &IntPolynomial| -> Vec<usize> {
        let chains: Vec<(Vec<IntPolynomial>, usize)> = yun_decomposition(poly)
            .iter()
            .map(|(u, k)| (sturm_chain(u), *k))
            .collect();
        // rank 0 = largest root; intervals are ascending, so reverse.
        let mut ranks = Vec::new();
        for (j, (lo, hi)) in iso.intervals().iter().enumerate().rev() {
            let rank = n_distinct - 1 - j;
            let mut mult = 0usize;
            for (chain, k) in &chains {
                if roots_in(chain, lo, hi) == 1 {
                    mult += k;
                }
            }
            ranks.extend(std::iter::repeat_n(rank, mult));
        }
        ranks
    };
    let ranks_p = rank_list(p);
    let ranks_q = rank_list(q);
    assert_eq!(ranks_p.len(), dp, "real-rooted p must have deg p real roots");
    assert_eq!(ranks_q.len(), dq, "real-rooted q must have deg q real roots");
    for k in 0..dq {
        // a_{k+1} >= b_{k+1}: smaller rank means larger root.
        if ranks_p[k] > ranks_q[k] {
            return Ok(false);
        }
        if k + 1 < dp && ranks_q[k] > ranks_p[k + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    /// (z + r_1)(z + r_2)... with integer r_i, an all-real-roots oracle.
    fn from_roots(negated_roots: &[i64]) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for &r in negated_roots {
            acc = &acc * &p(&[r, 1]);
        }
        acc
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = from_roots(&[1, 1, 2]);
        let b = from_roots(&[1, 3]);
        assert_eq!(poly_gcd(&a, &b), p(&[1, 1]));
        assert_eq!(a.squarefree_part(), from_roots(&[1, 2]));
        assert_eq!(p(&[4]).squarefree_part(), IntPolynomial::one());
        assert_eq!(IntPolynomial::zero().squarefree_part(), IntPolynomial::zero());
    }

    #[test]
    fn yun_reads_multiplicities() {
        // (z+1)^2 (z+2), scaled by 3 to exercise content handling.
        let f = from_roots(&[1, 1, 2]).scaled(&num_bigint::BigInt::from(3));
        let factors = yun_decomposition(&f);
        assert_eq!(
            factors,
            vec![(p(&[2, 1]), 1), (p(&[1, 1]), 2)]
        );
    }

    #[test]
    fn real_rootedness_basics() {
        assert!(IntPolynomial::zero().is_real_rooted());
        assert!(p(&[5]).is_real_rooted());
        assert!(p(&[1, 1]).is_real_rooted());
        assert!(from_roots(&[1, 2, 3]).is_real_rooted());
        assert!(from_roots(&[1, 1, 1]).is_real_rooted());
        // z^2 + 1 has no real roots; (z^2+1)(z+1) mixes.
        assert!(!p(&[1, 0, 1]).is_real_rooted());
        assert!(!(&p(&[1, 0, 1]) * &p(&[1, 1])).is_real_rooted());
        // z^2 + z + 1: negative discriminant.
        assert!(!p(&[1, 1, 1]).is_real_rooted());
        // Eulerian-type: 1 + 4z + z^2 (roots -2 +- sqrt 3).
        assert!(p(&[1, 4, 1]).is_real_rooted());
        // d_4 = z + 7z^2 + z^3.
        assert!(p(&[0, 1, 7, 1]).is_real_rooted());
    }

    #[test]
    fn distinct_root_counts() {
        assert_eq!(from_roots(&[1, 2, 3]).count_distinct_real_roots(), 3);
        assert_eq!(from_roots(&[1, 1, 2]).count_distinct_real_roots(), 2);
        assert_eq!(p(&[1, 0, 1]).count_distinct_real_roots(), 0);
        assert_eq!(p(&[0, 1]).count_distinct_real_roots(), 1);
    }

    #[test]
    fn isolation_finds_every_root() {
        let f = from_roots(&[1, 1, 2, 5]);
        let iso = RootIsolation::isolate(&f).unwrap();
        assert_eq!(iso.intervals().len(), 3);
        assert_eq!(iso.multiplicities(), &[1, 1, 2]);
        assert_eq!(iso.real_root_count(), 4);
        // Ascending and disjoint.
        for w in iso.intervals().windows(2) {
            assert!(w[0].1 <= w[1].0 || w[0].1 < w[1].1);
            assert!(w[0].0 < w[1].0);
        }
        // Roots -5, -2, -1 land in their intervals.
        let roots = [-5i64, -2, -1];
        for ((lo, hi), r) in iso.intervals().iter().zip(roots) {
            let r = BigRational::from_integer(r.into());
            assert!(lo < &r && &r < hi);
        }

        let mixed = &p(&[1, 0, 1]) * &from_roots(&[3]);
        let iso = RootIsolation::isolate(&mixed).unwrap();
        assert_eq!(iso.real_root_count(), 1);

        assert!(matches!(
            RootIsolation::isolate(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn isolation_of_constants_is_empty() {
        let iso = RootIsolation::isolate(&p(&[7])).unwrap();
        assert!(iso.intervals().is_empty());
    }

    #[test]
    fn interlacing_examples() {
        // Roots -2 between -1 and -3.
        assert_eq!(interlaces(&p(&[2, 1]), &from_roots(&[1, 3])), Ok(true));
        // Root -4 below both.
        assert_eq!(interlaces(&p(&[4, 1]), &from_roots(&[1, 3])), Ok(false));
        // A derivative interlaces.
        let f = from_roots(&[1, 2, 5]);
        assert_eq!(interlaces(&f.derivative(), &f), Ok(true));
        // Shared roots are fine (weak inequalities).
        assert_eq!(interlaces(&from_roots(&[1, 3]), &from_roots(&[1, 3])), Ok(true));
        assert_eq!(
            interlaces(&from_roots(&[1]), &from_roots(&[1, 1])),
            Ok(true)
        );
        // Zero polynomial conventions.
        assert_eq!(interlaces(&IntPolynomial::zero(), &f), Ok(true));
        assert_eq!(interlaces(&f, &IntPolynomial::zero()), Ok(true));
        // Degree gap of two cannot alternate.
        assert_eq!(interlaces(&p(&[2, 1]), &from_roots(&[1, 3, 5])), Ok(false));
        // Non-real-rooted input is an error.
        assert_eq!(
            interlaces(&p(&[1, 0, 1]), &f),
            Err(Error::NotRealRooted)
        );
    }

    #[test]
    fn interlacing_needs_the_order_not_just_degrees() {
        // q = (z+2)(z+6), p = (z+1)(z+3)(z+5): -2 in (-3,-1) but -6 < -5.
        let q = from_roots(&[2, 6]);
        let p_ = from_roots(&[1, 3, 5]);
        assert_eq!(interlaces(&q, &p_), Ok(false));
        // q = (z+2)(z+4) does interlace.
        assert_eq!(interlaces(&from_roots(&[2, 4]), &p_), Ok(true));
    }

    #[test]
    fn interlacing_with_multiplicities() {
        // p = (z+1)^2(z+3), q = (z+1)(z+2): 1 >= 1 >= 1? roots p: -1,-1,-3;
        // q: -1,-2. Alternation: -1 >= -1 >= -1 >= -2 >= -3. True.
        let p_ = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[3, 1]);
        let q = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(interlaces(&q, &p_), Ok(true));
        // q = (z+2)(z+3): -1 >= -2 >= -1 fails.
        let q = &p(&[2, 1]) * &p(&[3, 1]);
        assert_eq!(interlaces(&q, &p_), Ok(false));
    }
}
