//! Abstract simplicial complexes on at most 64 labeled vertices.
//!
//! Faces are vertex subsets stored as bitmasks; a complex is the downward
//! closure of its generating faces and always contains the empty face.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A simplicial complex: all faces, closed under taking subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<u64>,
}

/// `(1 - z)^k` with integer coefficients.
fn one_minus_z_pow(k: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::from(0); k + 1];
    let mut c = BigInt::one();
    for (j, slot) in coeffs.iter_mut().enumerate() {
        *slot = if j % 2 == 0 { c.clone() } else { -c.clone() };
        c = &c * BigInt::from((k - j) as u64) / BigInt::from((j + 1) as u64);
    }
    IntPolynomial::new(coeffs)
}

impl SimplicialComplex {
    /// The downward closure of the generating faces. With no generators
    /// this is the complex whose only face is empty.
    pub fn from_faces(vertex_count: usize, generators: &[u64]) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::invalid("complexes are limited to 64 vertices"));
        }
        let valid = if vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << vertex_count) - 1
        };
        let mut faces = BTreeSet::new();
        faces.insert(0u64);
        for &gen in generators {
            if gen & !valid != 0 {
                return Err(Error::invalid("face uses a vertex outside the label range"));
            }
            let mut sub = gen;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & gen;
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces: faces.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Every face, empty face included, in ascending mask order.
    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Faces with no one-vertex extension in the complex.
    pub fn facets(&self) -> Vec<u64> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                (0..self.vertex_count)
                    .all(|v| f & (1 << v) != 0 || !self.contains(f | (1 << v)))
            })
            .collect()
    }

    /// One more than the dimension: the largest face cardinality.
    pub fn dim_plus_one(&self) -> usize {
        self.faces
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Face counts by cardinality, from the empty face up.
    pub fn face_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.dim_plus_one() + 1];
        for f in &self.faces {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets
            .iter()
            .all(|f| f.count_ones() == facets[0].count_ones())
    }

    /// The h-polynomial `sum_i f_(i-1) z^i (1 - z)^(N - i)` with `N` the
    /// facet cardinality; requires a pure complex.
    pub fn h_polynomial(&self) -> Result<IntPolynomial> {
        let facets = self.facets();
        let min = facets.iter().map(|f| f.count_ones()).min().expect("nonempty");
        let max = facets.iter().map(|f| f.count_ones()).max().expect("nonempty");
        if min != max {
            return Err(Error::NotPure {
                low: min as usize - 1,
                high: max as usize - 1,
            });
        }
        let counts = self.face_counts();
        let n = self.dim_plus_one();
        let mut h = IntPolynomial::zero();
        for (i, &count) in counts.iter().enumerate() {
            let term = IntPolynomial::monomial(i, BigInt::from(count)) * one_minus_z_pow(n - i);
            h = &h + &term;
        }
        Ok(h)
    }

    /// The link of a face: all faces disjoint from it whose union with it
    /// is again a face. Shares this complex's vertex labels.
    pub fn link(&self, face: u64) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex);
        }
        let faces: Vec<u64> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| f & face == 0 && self.contains(f | face))
            .collect();
        Ok(SimplicialComplex {
            vertex_count: self.vertex_count,
            faces,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn closure_and_counts() {
        let k = SimplicialComplex::from_faces(3, &[0b111]).unwrap();
        assert_eq!(k.faces().len(), 8);
        assert_eq!(k.face_counts(), vec![1, 3, 3, 1]);
        assert_eq!(k.facets(), vec![0b111]);
        assert!(k.contains(0b101));
        assert!(k.is_pure());
        assert!(SimplicialComplex::from_faces(2, &[0b100]).is_err());
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::from_faces(4, &[]).unwrap();
        assert_eq!(k.faces(), &[0]);
        assert_eq!(k.dim_plus_one(), 0);
        assert_eq!(k.h_polynomial().unwrap(), poly(&[1]));
    }

    #[test]
    fn h_polynomial_examples() {
        // Any full simplex has h = 1.
        for size in 1..=4usize {
            let full = (1u64 << size) - 1;
            let k = SimplicialComplex::from_faces(size, &[full]).unwrap();
            assert_eq!(k.h_polynomial().unwrap(), poly(&[1]));
        }
        // Two triangles glued along an edge.
        let square = SimplicialComplex::from_faces(4, &[0b0111, 0b1110]).unwrap();
        assert_eq!(square.face_counts(), vec![1, 4, 5, 2]);
        assert_eq!(square.h_polynomial().unwrap(), poly(&[1, 1]));
        // The hollow triangle.
        let cycle = SimplicialComplex::from_faces(3, &[0b011, 0b101, 0b110]).unwrap();
        assert_eq!(cycle.h_polynomial().unwrap(), poly(&[1, 1, 1]));
        // Two isolated vertices.
        let pair = SimplicialComplex::from_faces(2, &[0b01, 0b10]).unwrap();
        assert_eq!(pair.h_polynomial().unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn impure_complexes_are_rejected() {
        let k = SimplicialComplex::from_faces(3, &[0b011, 0b100]).unwrap();
        assert!(!k.is_pure());
        assert!(matches!(
            k.h_polynomial(),
            Err(Error::NotPure { low: 0, high: 1 })
        ));
    }

    #[test]
    fn links() {
        let square = SimplicialComplex::from_faces(4, &[0b0111, 0b1110]).unwrap();
        // The link of an interior edge is the two opposite vertices.
        let link = square.link(0b0110).unwrap();
        assert_eq!(link.faces(), &[0, 0b0001, 0b1000]);
        assert_eq!(link.h_polynomial().unwrap(), poly(&[1, 1]));
        // The link of a boundary vertex is a path.
        let link = square.link(0b0010).unwrap();
        assert_eq!(link.h_polynomial().unwrap(), poly(&[1, 1]));
        // The link of the empty face is the complex itself.
        assert_eq!(square.link(0).unwrap(), square);
        assert!(matches!(
            square.link(0b1001),
            Err(Error::FaceNotInComplex)
        ));
    }
}
