//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and the coefficient-level property checks used throughout
//! the crate.
//!
//! Conventions: coefficients are stored by exponent with trailing zeros
//! trimmed, so the zero polynomial is the empty list. The zero polynomial is
//! symmetric for every declared degree, unimodal, and log-concave.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients indexed by exponent, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn monomial(exponent: usize, coefficient: BigInt) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coefficient;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Multiplies by `z^k`.
    pub fn shifted_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Exact division by `z^k`; panics if any lower coefficient is nonzero.
    pub fn shifted_down(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(
            self.coeffs.iter().take(k).all(|c| c.is_zero()),
            "polynomial is not divisible by z^{k}"
        );
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The reversal `z^d * p(1/z)`. Requires `degree(p) <= d`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(
            self.degree().is_none_or(|deg| deg <= d),
            "cannot reverse a degree-{:?} polynomial with respect to degree {d}",
            self.degree()
        );
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `(1+z)^k`.
    pub fn one_plus_z_pow(k: usize) -> Self {
        // Pascal row, exact.
        let mut row = vec![BigInt::one()];
        for _ in 0..k {
            let mut next = vec![BigInt::zero(); row.len() + 1];
            for (i, c) in row.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            row = next;
        }
        IntPolynomial { coeffs: row }
    }

    /// True iff `p_k = p_{d-k}` for `0 <= k <= d` and every coefficient
    /// beyond `d` vanishes. The zero polynomial is symmetric for every `d`.
    pub fn is_symmetric(&self, d: usize) -> bool {
        if self.coeffs.len() > d + 1 {
            return false;
        }
        (0..=d / 2).all(|k| self.coeff(k) == self.coeff(d - k))
    }

    /// True iff the coefficients rise weakly and then fall weakly over
    /// indices `0..=degree`. Zero polynomial: true.
    pub fn is_unimodal(&self) -> bool {
        let n = self.coeffs.len();
        if n == 0 {
            return true;
        }
        let mut i = 0;
        while i + 1 < n && self.coeffs[i] <= self.coeffs[i + 1] {
            i += 1;
        }
        while i + 1 < n && self.coeffs[i] >= self.coeffs[i + 1] {
            i += 1;
        }
        i + 1 == n
    }

    /// True iff `p_k^2 >= p_{k-1} * p_{k+1}` for every interior index of the
    /// coefficient list. Zero polynomial: true.
    pub fn is_log_concave(&self) -> bool {
        let n = self.coeffs.len();
        (1..n.saturating_sub(1)).all(|k| {
            &self.coeffs[k] * &self.coeffs[k] >= &self.coeffs[k - 1] * &self.coeffs[k + 1]
        })
    }

    /// Expands a polynomial symmetric with respect to `d` in the basis
    /// `z^i (1+z)^{d-2i}`, `0 <= i <= d/2`.
    pub fn gamma_vector(&self, d: usize) -> Result<GammaVector> {
        if !self.is_symmetric(d) {
            return Err(Error::NotSymmetric { degree: d });
        }
        let mut remainder = self.clone();
        let mut entries = Vec::with_capacity(d / 2 + 1);
        for i in 0..=d / 2 {
            let g = remainder.coeff(i);
            if !g.is_zero() {
                let term = Self::one_plus_z_pow(d - 2 * i).shifted_up(i).scaled(&g);
                remainder = &remainder - &term;
            }
            entries.push(g);
        }
        // The basis is triangular in the lower half, so a symmetric input
        // must be consumed completely.
        assert!(remainder.is_zero(), "gamma expansion left a remainder");
        Ok(GammaVector {
            entries,
            declared_degree: d,
        })
    }

    /// The unique pair `(a, b)` with `p = a + z*b`, `a` symmetric with
    /// respect to `d` and `b` symmetric with respect to `d - 1`. Either part
    /// may have negative coefficients.
    pub fn symmetric_decomposition(&self, d: usize) -> Result<(IntPolynomial, IntPolynomial)> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeTooHigh {
                    declared: d,
                    actual: deg,
                });
            }
        }
        // From p = a + z*b with the two symmetries: z^{d+1} p(1/z) = z(a + b),
        // so a = (p - z * rev_d(p)) / (1 - z), and b = (p - a) / z.
        let numerator = self - &self.reversed(d).shifted_up(1);
        let a = div_exact_one_minus_z(&numerator);
        let b = (self - &a).shifted_down(1);
        debug_assert!(a.is_symmetric(d));
        debug_assert!(d == 0 || b.is_symmetric(d - 1));
        Ok((a, b))
    }

    /// Renders coefficients as a plain JSON-style list, e.g. `[0, 1, 7, 1]`.
    pub fn coeff_list_string(&self) -> String {
        let inner = self
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        format!("[{inner}]")
    }
}

/// Exact division by `1 - z`; panics if the division is not exact
/// (equivalently if `p(1) != 0`).
fn div_exact_one_minus_z(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    // (1 - z) q = p  =>  q_i = p_i + q_{i-1}.
    let d = p.coeffs.len() - 1;
    let mut q = Vec::with_capacity(d);
    let mut carry = BigInt::zero();
    for i in 0..d {
        carry += &p.coeffs[i];
        q.push(carry.clone());
    }
    assert!(
        carry == -&p.coeffs[d],
        "polynomial is not divisible by 1 - z"
    );
    IntPolynomial::new(q)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Coefficients serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so round-trips stay exact.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            if let Some(v) = c.to_i64() {
                seq.serialize_element(&v)?;
            } else if let Some(v) = c.to_u64() {
                seq.serialize_element(&v)?;
            } else {
                seq.serialize_element(&c.to_string())?;
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of integers (numbers or decimal strings)")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                #[derive(Deserialize)]
                #[serde(untagged)]
                enum Coeff {
                    Small(i64),
                    Big(u64),
                    Text(String),
                }
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    let value = match c {
                        Coeff::Small(v) => BigInt::from(v),
                        Coeff::Big(v) => BigInt::from(v),
                        Coeff::Text(s) => s
                            .parse::<BigInt>()
                            .map_err(|e| de::Error::custom(format!("bad coefficient {s:?}: {e}")))?,
                    };
                    coeffs.push(value);
                }
                Ok(IntPolynomial::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

/// The coefficients of a symmetric polynomial in the basis
/// `z^i (1+z)^{d-2i}`, together with the degree the expansion was taken
/// against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    entries: Vec<BigInt>,
    declared_degree: usize,
}

impl GammaVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn declared_degree(&self) -> usize {
        self.declared_degree
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|g| !g.is_negative())
    }

    /// Reassembles `sum_i gamma_i z^i (1+z)^{d-2i}`.
    pub fn to_polynomial(&self) -> IntPolynomial {
        let d = self.declared_degree;
        let mut acc = IntPolynomial::zero();
        for (i, g) in self.entries.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let term = IntPolynomial::one_plus_z_pow(d - 2 * i)
                .shifted_up(i)
                .scaled(g);
            acc = &acc + &term;
        }
        acc
    }
}
