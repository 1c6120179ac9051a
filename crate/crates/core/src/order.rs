//! Weighted order polytopes of naturally labeled posets.
//!
//! For a poset on `n` elements and a positive weight `s_i` per element, the
//! polytope consists of the points with `0 <= x_i / s_i <= 1` whose ratios
//! `x_i / s_i` rise along the order. Its vertices are the weighted
//! indicator vectors of the filters, and the chains of filters triangulate
//! it. The h* polynomial is computed two independent ways: from dilate
//! lattice point counts, and from the triangulation by summing local h*
//! polynomials of faces against h-polynomials of their links.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::caps::DEFAULT_DILATE_CAP;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::inversion::SSequence;
use crate::poly::IntPolynomial;
use crate::poset::Poset;
use crate::simplex::{LatticeSimplex, PointEnumerator};

/// A poset with a positive integer weight on each element.
#[derive(Clone, Debug)]
pub struct OrderPolytope {
    poset: Poset,
    s: SSequence,
}

impl OrderPolytope {
    pub fn new(poset: Poset, s: SSequence) -> Result<Self> {
        if poset.n() != s.len() {
            return Err(Error::invalid(format!(
                "{} weights for {} elements",
                s.len(),
                poset.n()
            )));
        }
        Ok(OrderPolytope { poset, s })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn weights(&self) -> &SSequence {
        &self.s
    }

    fn dilate_guardrail(&self, t: u64) -> Result<()> {
        let mut states = BigInt::one();
        for &si in self.s.entries() {
            states *= BigInt::from(t) * BigInt::from(si) + 1;
        }
        if states > BigInt::from(DEFAULT_DILATE_CAP) {
            return Err(Error::TooLarge {
                what: "dilate enumeration",
                size: states.to_string(),
                cap: DEFAULT_DILATE_CAP,
            });
        }
        Ok(())
    }

    /// Number of lattice points in the `t`-th dilate, by depth-first search
    /// in label order with the ratio lower bounds from the predecessors.
    pub fn count_dilate_points(&self, t: u64) -> Result<u64> {
        self.dilate_guardrail(t)?;
        let n = self.poset.n();
        let s = self.s.entries();
        let mut xs = vec![0u64; n];
        fn dfs(i: usize, t: u64, poset: &Poset, s: &[u64], xs: &mut Vec<u64>) -> u64 {
            if i == poset.n() {
                return 1;
            }
            let mut lower = 0u64;
            let mut rest = poset.below_mask(i + 1);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                // x_i / s_i >= x_j / s_j, so x_i >= ceil(x_j s_i / s_j).
                let num = xs[j] as u128 * s[i] as u128;
                let bound = num.div_ceil(s[j] as u128) as u64;
                lower = lower.max(bound);
            }
            let mut count = 0u64;
            for x in lower..=t * s[i] {
                xs[i] = x;
                count += dfs(i + 1, t, poset, s, xs);
            }
            xs[i] = 0;
            count
        }
        Ok(dfs(0, t, &self.poset, s, &mut xs))
    }

    /// The same count by scanning the whole bounding box; a slow oracle for
    /// the search above.
    pub fn count_dilate_points_naive(&self, t: u64) -> Result<u64> {
        self.dilate_guardrail(t)?;
        let n = self.poset.n();
        let s = self.s.entries();
        let mut xs = vec![0u64; n];
        let mut count = 0u64;
        'outer: loop {
            let ok = (1..=n).all(|b| {
                let mut rest = self.poset.below_mask(b);
                while rest != 0 {
                    let a = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if xs[a] as u128 * s[b - 1] as u128 > xs[b - 1] as u128 * s[a] as u128 {
                        return false;
                    }
                }
                true
            });
            if ok {
                count += 1;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                if xs[i] < t * s[i] {
                    xs[i] += 1;
                    break;
                }
                xs[i] = 0;
            }
        }
        Ok(count)
    }

    /// The h* polynomial from the dilate counts `L(0), ..., L(n)` by the
    /// alternating binomial transform.
    pub fn ehrhart_hstar(&self) -> Result<IntPolynomial> {
        let n = self.poset.n();
        self.dilate_guardrail(n as u64)?;
        let counts: Vec<BigInt> = (0..=n as u64)
            .map(|t| self.count_dilate_points(t).map(BigInt::from))
            .collect::<Result<_>>()?;
        // Binomials C(n + 1, j).
        let mut binom = vec![BigInt::one()];
        for j in 0..n {
            let next = &binom[j] * BigInt::from((n + 1 - j) as u64) / BigInt::from((j + 1) as u64);
            binom.push(next);
        }
        let coeffs: Vec<BigInt> = (0..=n)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..=i.min(n) {
                    let term = &binom[j] * &counts[i - j];
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                debug_assert!(acc >= BigInt::zero(), "h* coefficients are counts");
                acc
            })
            .collect();
        Ok(IntPolynomial::new(coeffs))
    }

    /// The weighted indicator vertex of a filter (0-based element mask).
    pub fn vertex_for_filter(&self, filter: u64) -> Result<Vec<i64>> {
        self.s
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &si)| {
                if filter & (1 << i) != 0 {
                    i64::try_from(si)
                        .map_err(|_| Error::invalid(format!("weight {si} overflows a coordinate")))
                } else {
                    Ok(0)
                }
            })
            .collect()
    }

    /// The triangulation by chains of filters: one vertex per filter, one
    /// facet per linear extension.
    pub fn canonical_triangulation(&self) -> Result<Triangulation> {
        let filters = self.poset.filters();
        if filters.len() > 64 {
            return Err(Error::TooLarge {
                what: "filter triangulation",
                size: filters.len().to_string(),
                cap: 64,
            });
        }
        let index_of = |mask: u64| filters.binary_search(&mask).expect("filter is enumerated");
        let mut generators = Vec::new();
        for extension in self.poset.linear_extensions() {
            let mut filter = 0u64;
            let mut face = 1u64 << index_of(0);
            for &element in extension.iter().rev() {
                filter |= 1 << (element - 1);
                face |= 1 << index_of(filter);
            }
            generators.push(face);
        }
        let complex = SimplicialComplex::from_faces(filters.len(), &generators)?;
        let vertices = filters
            .iter()
            .map(|&f| self.vertex_for_filter(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Triangulation {
            vertices,
            filters,
            complex,
        })
    }

    /// The h* polynomial assembled from the triangulation: over every face
    /// (the empty one included), the local h* of the face times the
    /// h-polynomial of its link.
    pub fn betke_mcmullen_hstar(&self) -> Result<IntPolynomial> {
        let tri = self.canonical_triangulation()?;
        let enumerator = PointEnumerator::new();
        let mut total = IntPolynomial::zero();
        for &face in tri.complex().faces() {
            let local = if face == 0 {
                IntPolynomial::one()
            } else {
                enumerator.local_hstar(&tri.face_simplex(face)?)?
            };
            if local.is_zero() {
                continue;
            }
            let link_h = tri.complex().link(face)?.h_polynomial()?;
            total = &total + &(local * link_h);
        }
        Ok(total)
    }
}

/// Hibi's criterion: a lattice polytope is reflexive up to unimodular
/// transformation exactly when its h* polynomial is symmetric with respect
/// to the polytope's dimension.
pub fn is_reflexive(hstar: &IntPolynomial, dimension: usize) -> bool {
    hstar.is_symmetric(dimension)
}

/// One face of the canonical triangulation with its box polynomial and the
/// distributional flags recorded for it.
#[derive(Clone, Debug)]
pub struct BoxReportRow {
    /// Vertex mask of the face in the triangulation complex.
    pub face: u64,
    /// The face's local h* polynomial.
    pub local: IntPolynomial,
    pub unimodal: bool,
    pub real_rooted: bool,
}

/// Per-face table of box polynomials over a canonical triangulation.
#[derive(Clone, Debug)]
pub struct BoxReport {
    pub rows: Vec<BoxReportRow>,
}

impl BoxReport {
    /// True when every face's box polynomial is unimodal and real-rooted.
    pub fn passes(&self) -> bool {
        self.rows.iter().all(|row| row.unimodal && row.real_rooted)
    }

    /// The first failing row, if any.
    pub fn first_failure(&self) -> Option<&BoxReportRow> {
        self.rows.iter().find(|row| !row.unimodal || !row.real_rooted)
    }
}

impl OrderPolytope {
    /// Tabulates the box polynomial of every face of the canonical
    /// triangulation (the empty face included) with unimodality and
    /// real-rootedness flags.
    pub fn box_unimodality_report(&self) -> Result<BoxReport> {
        let tri = self.canonical_triangulation()?;
        let enumerator = PointEnumerator::new();
        let mut rows = Vec::new();
        for &face in tri.complex().faces() {
            let local = if face == 0 {
                IntPolynomial::one()
            } else {
                enumerator.local_hstar(&tri.face_simplex(face)?)?
            };
            let unimodal = local.is_unimodal();
            let real_rooted = local.is_real_rooted();
            rows.push(BoxReportRow {
                face,
                local,
                unimodal,
                real_rooted,
            });
        }
        Ok(BoxReport { rows })
    }
}

/// The chain-of-filters triangulation of an order polytope.
#[derive(Clone, Debug)]
pub struct Triangulation {
    vertices: Vec<Vec<i64>>,
    filters: Vec<u64>,
    complex: SimplicialComplex,
}

impl Triangulation {
    /// Vertex coordinates, indexed like the complex's vertex labels.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// The filter (0-based element mask) behind each vertex.
    pub fn filters(&self) -> &[u64] {
        &self.filters
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The geometric simplex spanned by a nonempty face of the complex.
    pub fn face_simplex(&self, face: u64) -> Result<LatticeSimplex> {
        if face == 0 {
            return Err(Error::invalid("the empty face spans no simplex"));
        }
        let mut vertices = Vec::new();
        let mut rest = face;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            vertices.push(self.vertices[v].clone());
        }
        LatticeSimplex::new(vertices)
    }
}
