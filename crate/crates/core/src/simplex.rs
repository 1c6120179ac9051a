//! Lattice simplices and the lattice points of their fundamental
//! parallelepipeds.
//!
//! A simplex on vertices `v_0..v_m` in `Z^n` is encoded by the matrix `W`
//! whose columns are the lifted vertices `(v_i, 1)`. The half-open
//! parallelepiped `{W t : t in [0,1)^(m+1)}` meets `Z^(n+1)` in finitely
//! many points; counting them by last coordinate (height) gives the h*
//! polynomial, and counting only the points with every multiplier `t_i`
//! nonzero gives the local h* polynomial.
//!
//! The default enumeration diagonalizes `W` by unimodular operations and
//! walks the coset representatives of the point lattice modulo the vertex
//! lattice, so its work is proportional to the normalized volume. A slower
//! bounding-box scan is kept as an independent cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::caps::DEFAULT_VOLUME_CAP;
use crate::error::{Error, Result};
use crate::inversion::{InversionSequence, SSequence};
use crate::linalg::{self, Mat};
use crate::poly::IntPolynomial;

/// A simplex with integer vertices, possibly of lower dimension than its
/// ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSimplex {
    vertices: Vec<Vec<i64>>,
}

impl LatticeSimplex {
    /// Builds a simplex after checking that the vertices are affinely
    /// independent.
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("a simplex needs at least one vertex"));
        }
        let ambient = vertices[0].len();
        if vertices.iter().any(|v| v.len() != ambient) {
            return Err(Error::invalid("vertices have mixed ambient dimensions"));
        }
        if vertices.len() > ambient + 1 {
            return Err(Error::AffinelyDependent);
        }
        let simplex = LatticeSimplex { vertices };
        if linalg::diagonalize(&simplex.lifted_matrix()).is_none() {
            return Err(Error::AffinelyDependent);
        }
        Ok(simplex)
    }

    /// The lecture hall simplex of the bound `s`: vertex `i` has its first
    /// `i` coordinates zero and then `s_(i+1), ..., s_n`.
    pub fn lecture_hall(s: &SSequence) -> Result<Self> {
        let n = s.len();
        let entries: Vec<i64> = s
            .entries()
            .iter()
            .map(|&v| {
                i64::try_from(v)
                    .map_err(|_| Error::invalid(format!("bound entry {v} overflows a vertex coordinate")))
            })
            .collect::<Result<_>>()?;
        let vertices = (0..=n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i..].copy_from_slice(&entries[i..]);
                v
            })
            .collect();
        LatticeSimplex::new(vertices)
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Dimension of the ambient lattice.
    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Dimension of the simplex itself (one less than the vertex count).
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The sub-simplex on a strictly increasing list of vertex indices.
    pub fn face(&self, indices: &[usize]) -> Result<LatticeSimplex> {
        if indices.is_empty() {
            return Err(Error::invalid("a face needs at least one vertex index"));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("face indices must be strictly increasing"));
        }
        if *indices.last().expect("nonempty") >= self.vertices.len() {
            return Err(Error::invalid("face index out of range"));
        }
        let vertices = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        LatticeSimplex::new(vertices)
    }

    /// Normalized volume with respect to the lattice spanned inside the
    /// simplex's affine hull; equals the number of half-open parallelepiped
    /// points.
    pub fn normalized_volume(&self) -> BigInt {
        let diag = linalg::diagonalize(&self.lifted_matrix()).expect("validated at construction");
        diag.diagonal.iter().product()
    }

    /// Columns are the vertices lifted to height one.
    fn lifted_matrix(&self) -> Mat {
        let n = self.ambient_dim();
        let mut w = vec![Vec::with_capacity(self.vertices.len()); n + 1];
        for v in &self.vertices {
            for (k, &x) in v.iter().enumerate() {
                w[k].push(BigInt::from(x));
            }
            w[n].push(BigInt::one());
        }
        w
    }
}

/// A lattice point of the fundamental parallelepiped, with its height and
/// its exact multiplier vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelepipedPoint {
    coordinates: Vec<BigInt>,
    height: usize,
    lambda: Vec<BigRational>,
}

impl ParallelepipedPoint {
    /// Coordinates in the ambient lattice (the lift coordinate excluded).
    pub fn coordinates(&self) -> &[BigInt] {
        &self.coordinates
    }

    /// Last coordinate of the lifted point.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Multipliers `t_i in [0,1)` with `sum t_i (v_i, 1)` equal to the point.
    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    /// True when every multiplier is nonzero, i.e. the point lies in the
    /// open parallelepiped.
    pub fn is_interior(&self) -> bool {
        self.lambda.iter().all(|t| !t.is_zero())
    }
}

/// Which enumeration backend to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Coset walk over a diagonalization; work proportional to the volume.
    Quotient,
    /// Scan of the integer bounding box with an exact membership test.
    BoxScan,
}

/// Enumerates parallelepiped points and height histograms under a volume
/// guardrail.
#[derive(Clone, Debug)]
pub struct PointEnumerator {
    volume_cap: u64,
    strategy: Strategy,
}

impl Default for PointEnumerator {
    fn default() -> Self {
        PointEnumerator {
            volume_cap: DEFAULT_VOLUME_CAP,
            strategy: Strategy::Quotient,
        }
    }
}

struct Prepared {
    w: Mat,
    diagonal: Vec<BigInt>,
    q: Mat,
    volume: BigInt,
    lcm: BigInt,
}

fn prepare(simplex: &LatticeSimplex) -> Prepared {
    let w = simplex.lifted_matrix();
    let diag = linalg::diagonalize(&w).expect("validated at construction");
    let volume: BigInt = diag.diagonal.iter().product();
    let lcm = diag
        .diagonal
        .iter()
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    Prepared {
        w,
        diagonal: diag.diagonal,
        q: diag.q,
        volume,
        lcm,
    }
}

impl PointEnumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_volume_cap(mut self, cap: u64) -> Self {
        self.volume_cap = cap;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    /// The h* polynomial: heights of all half-open parallelepiped points.
    pub fn hstar(&self, simplex: &LatticeSimplex) -> Result<IntPolynomial> {
        Ok(self.hstar_pair(simplex)?.0)
    }

    /// The local h* polynomial: heights of the open parallelepiped points.
    pub fn local_hstar(&self, simplex: &LatticeSimplex) -> Result<IntPolynomial> {
        Ok(self.hstar_pair(simplex)?.1)
    }

    /// Both polynomials from a single sweep.
    pub fn hstar_pair(&self, simplex: &LatticeSimplex) -> Result<(IntPolynomial, IntPolynomial)> {
        let (closed, open) = match self.strategy {
            Strategy::Quotient => {
                let prep = prepare(simplex);
                self.check_volume(&prep.volume)?;
                quotient_histograms(&prep)
            }
            Strategy::BoxScan => {
                let mut closed = vec![0u64; simplex.dim() + 2];
                let mut open = vec![0u64; simplex.dim() + 2];
                for p in self.box_scan_points(simplex)? {
                    closed[p.height()] += 1;
                    if p.is_interior() {
                        open[p.height()] += 1;
                    }
                }
                (closed, open)
            }
        };
        let to_poly = |hist: Vec<u64>| {
            IntPolynomial::new(hist.into_iter().map(BigInt::from).collect::<Vec<_>>())
        };
        Ok((to_poly(closed), to_poly(open)))
    }

    /// All lattice points of the half-open parallelepiped, sorted by height
    /// and then by coordinates.
    pub fn half_open_points(&self, simplex: &LatticeSimplex) -> Result<Vec<ParallelepipedPoint>> {
        let mut points = match self.strategy {
            Strategy::Quotient => {
                let prep = prepare(simplex);
                self.check_volume(&prep.volume)?;
                quotient_points(&prep)
            }
            Strategy::BoxScan => self.box_scan_points(simplex)?,
        };
        points.sort_by(|a, b| {
            a.height
                .cmp(&b.height)
                .then_with(|| a.coordinates.cmp(&b.coordinates))
        });
        Ok(points)
    }

    /// The lattice points of the open parallelepiped, in the same order.
    pub fn open_points(&self, simplex: &LatticeSimplex) -> Result<Vec<ParallelepipedPoint>> {
        Ok(self
            .half_open_points(simplex)?
            .into_iter()
            .filter(ParallelepipedPoint::is_interior)
            .collect())
    }

    fn check_volume(&self, volume: &BigInt) -> Result<()> {
        match volume.to_u64() {
            Some(v) if v <= self.volume_cap => Ok(()),
            _ => Err(Error::VolumeTooLarge {
                volume: volume.to_string(),
                cap: self.volume_cap,
            }),
        }
    }

    /// Box scan: iterate every lattice point of the parallelepiped's
    /// bounding box and keep those whose multiplier vector lies in `[0,1)`.
    fn box_scan_points(&self, simplex: &LatticeSimplex) -> Result<Vec<ParallelepipedPoint>> {
        let w = simplex.lifted_matrix();
        let rows = w.len();
        let cols = simplex.vertices.len();

        // Membership: t = (gram_inv_num x) / g, requiring W t = x back.
        let gram = linalg::mat_mul(&linalg::transpose(&w), &w);
        let g = linalg::determinant(&gram);
        debug_assert!(g.is_positive());
        let gram_inv = linalg::rational_inverse(&gram).expect("positive definite");
        let wt = linalg::transpose(&w);
        let solver: Mat = (0..cols)
            .map(|i| {
                (0..rows)
                    .map(|k| {
                        let entry: BigRational = (0..cols)
                            .map(|j| &gram_inv[i][j] * BigRational::from(wt[j][k].clone()))
                            .sum();
                        let scaled = entry * BigRational::from(g.clone());
                        debug_assert!(scaled.is_integer());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();

        // Bounding box of the closed parallelepiped, coordinate by coordinate.
        let mut lo = Vec::with_capacity(rows);
        let mut hi = Vec::with_capacity(rows);
        for row in &w {
            let l: BigInt = row.iter().filter(|x| x.is_negative()).cloned().sum();
            let h: BigInt = row.iter().filter(|x| x.is_positive()).cloned().sum();
            let l = l.to_i64().ok_or_else(|| Error::invalid("bounding box overflows i64"))?;
            let h = h.to_i64().ok_or_else(|| Error::invalid("bounding box overflows i64"))?;
            lo.push(l);
            hi.push(h);
        }
        let mut cells = BigInt::one();
        for k in 0..rows {
            cells *= BigInt::from(hi[k] - lo[k] + 1);
        }
        match cells.to_u64() {
            Some(c) if c <= self.volume_cap => {}
            _ => {
                return Err(Error::TooLarge {
                    what: "box scan",
                    size: cells.to_string(),
                    cap: self.volume_cap,
                })
            }
        }

        let mut points = Vec::new();
        let mut x = lo.clone();
        'outer: loop {
            let xv: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            let tnum = linalg::mat_vec(&solver, &xv);
            let inside = tnum.iter().all(|t| !t.is_negative() && t < &g);
            if inside {
                let back = linalg::mat_vec(&w, &tnum);
                let consistent = back
                    .iter()
                    .zip(&xv)
                    .all(|(b, xi)| b == &(xi * &g));
                if consistent {
                    let height = x[rows - 1] as usize;
                    let lambda = tnum
                        .iter()
                        .map(|t| BigRational::new(t.clone(), g.clone()))
                        .collect();
                    points.push(ParallelepipedPoint {
                        coordinates: xv[..rows - 1].to_vec(),
                        height,
                        lambda,
                    });
                }
            }
            // Odometer over the box.
            let mut k = rows;
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                if x[k] < hi[k] {
                    x[k] += 1;
                    break;
                }
                x[k] = lo[k];
            }
        }
        Ok(points)
    }
}

/// Height histograms (all points, interior points) from the coset walk.
///
/// Cosets of the vertex lattice inside the point lattice are indexed by
/// `c` with `0 <= c_j < D_j`; the multiplier numerators of the
/// representative are `(Q c')_i mod L` where `c'_j = c_j L / D_j`. Heights
/// are `sum_i t_i`, so only the numerators are needed.
fn quotient_histograms(prep: &Prepared) -> (Vec<u64>, Vec<u64>) {
    let m1 = prep.diagonal.len();
    let mut closed = vec![0u64; m1 + 1];
    let mut open = vec![0u64; m1 + 1];

    let small_bound = BigInt::from(1u64 << 40);
    let fits_small = m1 <= 64
        && prep.lcm <= small_bound
        && prep
            .q
            .iter()
            .flatten()
            .all(|e| e.magnitude() <= small_bound.magnitude());

    if fits_small {
        let l = prep.lcm.to_i128().expect("checked");
        let d: Vec<u64> = prep
            .diagonal
            .iter()
            .map(|x| x.to_u64().expect("divides the lcm"))
            .collect();
        // inc[j][i]: change of numerator i when coset digit j steps by one.
        let inc: Vec<Vec<i128>> = (0..m1)
            .map(|j| {
                let step = l / d[j] as i128;
                (0..m1)
                    .map(|i| prep.q[i][j].to_i128().expect("checked") * step)
                    .collect()
            })
            .collect();
        let mut c = vec![0u64; m1];
        let mut munum = vec![0i128; m1];
        loop {
            let mut height_num = 0i128;
            let mut interior = true;
            for &v in &munum {
                let t = v.rem_euclid(l);
                height_num += t;
                interior &= t != 0;
            }
            debug_assert_eq!(height_num % l, 0);
            let h = (height_num / l) as usize;
            closed[h] += 1;
            if interior {
                open[h] += 1;
            }
            let mut j = m1;
            loop {
                if j == 0 {
                    return (closed, open);
                }
                j -= 1;
                c[j] += 1;
                if c[j] < d[j] {
                    for i in 0..m1 {
                        munum[i] += inc[j][i];
                    }
                    break;
                }
                c[j] = 0;
                for i in 0..m1 {
                    munum[i] -= (d[j] - 1) as i128 * inc[j][i];
                }
            }
        }
    }

    // Exact fallback for volumes or transforms beyond the fast-path bounds.
    let inc: Vec<Vec<BigInt>> = (0..m1)
        .map(|j| {
            let step = &prep.lcm / &prep.diagonal[j];
            (0..m1).map(|i| &prep.q[i][j] * &step).collect()
        })
        .collect();
    let d = &prep.diagonal;
    let mut c = vec![BigInt::zero(); m1];
    let mut munum = vec![BigInt::zero(); m1];
    loop {
        let mut height_num = BigInt::zero();
        let mut interior = true;
        for v in &munum {
            let t = v.mod_floor(&prep.lcm);
            interior &= !t.is_zero();
            height_num += t;
        }
        let (h, rem) = height_num.div_rem(&prep.lcm);
        debug_assert!(rem.is_zero());
        let h = h.to_usize().expect("height is at most the dimension");
        closed[h] += 1;
        if interior {
            open[h] += 1;
        }
        let mut j = m1;
        loop {
            if j == 0 {
                return (closed, open);
            }
            j -= 1;
            c[j] += 1;
            if c[j] < d[j] {
                for i in 0..m1 {
                    munum[i] += &inc[j][i];
                }
                break;
            }
            c[j] = BigInt::zero();
            for i in 0..m1 {
                let delta = (&d[j] - 1) * &inc[j][i];
                munum[i] -= delta;
            }
        }
    }
}

/// Materializes the half-open points from the coset walk.
fn quotient_points(prep: &Prepared) -> Vec<ParallelepipedPoint> {
    let m1 = prep.diagonal.len();
    let rows = prep.w.len();
    let steps: Vec<BigInt> = prep.diagonal.iter().map(|d| &prep.lcm / d).collect();
    let mut points = Vec::new();
    let mut c = vec![BigInt::zero(); m1];
    loop {
        let lambda_num: Vec<BigInt> = (0..m1)
            .map(|i| {
                let num: BigInt = (0..m1).map(|j| &prep.q[i][j] * &c[j] * &steps[j]).sum();
                num.mod_floor(&prep.lcm)
            })
            .collect();
        let coords: Vec<BigInt> = (0..rows - 1)
            .map(|k| {
                let num: BigInt = (0..m1).map(|i| &prep.w[k][i] * &lambda_num[i]).sum();
                let (x, rem) = num.div_rem(&prep.lcm);
                debug_assert!(rem.is_zero());
                x
            })
            .collect();
        let height_num: BigInt = lambda_num.iter().sum();
        let (height, rem) = height_num.div_rem(&prep.lcm);
        debug_assert!(rem.is_zero());
        let lambda = lambda_num
            .iter()
            .map(|t| BigRational::new(t.clone(), prep.lcm.clone()))
            .collect();
        points.push(ParallelepipedPoint {
            coordinates: coords,
            height: height.to_usize().expect("height is at most the dimension"),
            lambda,
        });
        let mut j = m1;
        loop {
            if j == 0 {
                return points;
            }
            j -= 1;
            c[j] += 1;
            if c[j] < prep.diagonal[j] {
                break;
            }
            c[j] = BigInt::zero();
        }
    }
}

/// Reduces a parallelepiped point of the lecture hall simplex of `s` to an
/// inversion sequence: entry `i` is the coordinate `x_i` modulo `s_i`.
pub fn rem_map(point: &ParallelepipedPoint, s: &SSequence) -> Result<InversionSequence> {
    if point.coordinates().len() != s.len() {
        return Err(Error::invalid(
            "point dimension does not match the bound length",
        ));
    }
    let entries = point
        .coordinates()
        .iter()
        .zip(s.entries())
        .map(|(x, &m)| {
            x.mod_floor(&BigInt::from(m))
                .to_u64()
                .expect("reduced value fits")
        })
        .collect();
    InversionSequence::new(entries, s.clone())
}

/// The bound sequence attached to a face of the lecture hall simplex of
/// `s`: for consecutive retained vertex indices `a < b`, the gcd of
/// `s_(a+1), ..., s_b`. A single retained vertex has no attached bound.
pub fn face_mu(s: &SSequence, indices: &[usize]) -> Result<SSequence> {
    if indices.is_empty() {
        return Err(Error::invalid("a face needs at least one vertex index"));
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("face indices must be strictly increasing"));
    }
    if *indices.last().expect("nonempty") > s.len() {
        return Err(Error::invalid("face index out of range"));
    }
    if indices.len() == 1 {
        return Err(Error::SingleVertex);
    }
    let entries = s.entries();
    let mus = indices
        .windows(2)
        .map(|w| {
            entries[w[0]..w[1]]
                .iter()
                .fold(0u64, |acc, &v| acc.gcd(&v))
        })
        .collect();
    SSequence::new(mus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversion::{s_derangement_enum, s_eulerian};
    use std::collections::BTreeSet;

    fn simplex(vertices: &[&[i64]]) -> LatticeSimplex {
        LatticeSimplex::new(vertices.iter().map(|v| v.to_vec()).collect()).unwrap()
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    fn s(entries: &[u64]) -> SSequence {
        SSequence::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(LatticeSimplex::new(vec![]).is_err());
        assert!(matches!(
            LatticeSimplex::new(vec![vec![0, 0], vec![1, 0], vec![2, 0]]),
            Err(Error::AffinelyDependent)
        ));
        assert!(matches!(
            LatticeSimplex::new(vec![vec![0], vec![1], vec![2]]),
            Err(Error::AffinelyDependent)
        ));
        assert!(LatticeSimplex::new(vec![vec![5, 7]]).is_ok());
    }

    #[test]
    fn unit_simplex_has_trivial_hstar() {
        let t = simplex(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.normalized_volume(), BigInt::one());
        let en = PointEnumerator::new();
        let (h, l) = en.hstar_pair(&t).unwrap();
        assert_eq!(h, poly(&[1]));
        assert_eq!(l, IntPolynomial::zero());
    }

    #[test]
    fn segment_of_length_two() {
        let seg = simplex(&[&[0], &[2]]);
        assert_eq!(seg.normalized_volume(), BigInt::from(2));
        let en = PointEnumerator::new();
        let (h, l) = en.hstar_pair(&seg).unwrap();
        assert_eq!(h, poly(&[1, 1]));
        assert_eq!(l, poly(&[0, 1]));
        let points = en.half_open_points(&seg).unwrap();
        assert_eq!(points.len(), 2);
        assert_eq!(points[0].coordinates(), &[BigInt::zero()]);
        assert_eq!(points[0].height(), 0);
        assert!(!points[0].is_interior());
        assert_eq!(points[1].coordinates(), &[BigInt::one()]);
        assert_eq!(points[1].height(), 1);
        assert!(points[1].is_interior());
    }

    #[test]
    fn dilated_triangle() {
        let t = simplex(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(t.normalized_volume(), BigInt::from(4));
        let en = PointEnumerator::new();
        let (h, l) = en.hstar_pair(&t).unwrap();
        assert_eq!(h, poly(&[1, 3]));
        assert_eq!(l, IntPolynomial::zero());
    }

    #[test]
    fn single_vertex() {
        let v = simplex(&[&[3, 4, 5]]);
        assert_eq!(v.normalized_volume(), BigInt::one());
        let en = PointEnumerator::new();
        let (h, l) = en.hstar_pair(&v).unwrap();
        assert_eq!(h, poly(&[1]));
        assert_eq!(l, IntPolynomial::zero());
    }

    #[test]
    fn lecture_hall_statistics() {
        let bound = s(&[2, 3]);
        let lhs = LatticeSimplex::lecture_hall(&bound).unwrap();
        assert_eq!(lhs.vertices(), &[vec![2, 3], vec![0, 3], vec![0, 0]]);
        assert_eq!(lhs.normalized_volume(), BigInt::from(6));
        let en = PointEnumerator::new();
        let (h, l) = en.hstar_pair(&lhs).unwrap();
        assert_eq!(h, s_eulerian(&bound));
        assert_eq!(l, s_derangement_enum(&bound));
    }

    #[test]
    fn half_open_points_are_distinct_and_count_the_volume() {
        for bound in [s(&[2, 3]), s(&[3, 3, 2]), s(&[4, 1, 3])] {
            let lhs = LatticeSimplex::lecture_hall(&bound).unwrap();
            let en = PointEnumerator::new();
            let points = en.half_open_points(&lhs).unwrap();
            let seen: BTreeSet<Vec<BigInt>> =
                points.iter().map(|p| p.coordinates().to_vec()).collect();
            assert_eq!(BigInt::from(seen.len()), lhs.normalized_volume());
            assert_eq!(BigInt::from(points.len()), lhs.normalized_volume());
            // Multiplier heights match the recorded heights.
            for p in &points {
                let total: BigRational = p.lambda().iter().sum();
                assert_eq!(total, BigRational::from(BigInt::from(p.height())));
            }
        }
    }

    #[test]
    fn rem_map_bijects_onto_inversion_sequences() {
        let bound = s(&[2, 3, 4]);
        let lhs = LatticeSimplex::lecture_hall(&bound).unwrap();
        let en = PointEnumerator::new();
        let points = en.half_open_points(&lhs).unwrap();
        let mut images = BTreeSet::new();
        for p in &points {
            let e = rem_map(p, &bound).unwrap();
            // Height equals the descent count of the image.
            assert_eq!(p.height(), e.descents());
            images.insert(e.entries().to_vec());
        }
        assert_eq!(BigInt::from(images.len()), bound.product());
    }

    #[test]
    fn box_scan_agrees_with_quotient() {
        let cases = vec![
            simplex(&[&[0], &[2]]),
            simplex(&[&[0, 0], &[2, 0], &[0, 2]]),
            simplex(&[&[1, 1], &[3, 2], &[2, 4]]),
            LatticeSimplex::lecture_hall(&s(&[2, 3])).unwrap(),
            LatticeSimplex::lecture_hall(&s(&[3, 2, 2])).unwrap(),
            // A lower-dimensional simplex in the plane.
            simplex(&[&[0, 0], &[2, 2]]),
        ];
        for sx in cases {
            let quotient = PointEnumerator::new();
            let boxscan = PointEnumerator::new().with_strategy(Strategy::BoxScan);
            assert_eq!(
                quotient.hstar_pair(&sx).unwrap(),
                boxscan.hstar_pair(&sx).unwrap()
            );
            assert_eq!(
                quotient.half_open_points(&sx).unwrap(),
                boxscan.half_open_points(&sx).unwrap()
            );
        }
    }

    #[test]
    fn face_local_hstar_examples() {
        let bound = s(&[2, 3]);
        let lhs = LatticeSimplex::lecture_hall(&bound).unwrap();
        let en = PointEnumerator::new();

        // Keeping vertices 0 and 1 attaches gcd(s_1) = 2.
        let face = lhs.face(&[0, 1]).unwrap();
        assert_eq!(face_mu(&bound, &[0, 1]).unwrap(), s(&[2]));
        assert_eq!(en.local_hstar(&face).unwrap(), poly(&[0, 1]));

        // Keeping vertices 1 and 2 attaches gcd(s_2) = 3.
        let face = lhs.face(&[1, 2]).unwrap();
        assert_eq!(face_mu(&bound, &[1, 2]).unwrap(), s(&[3]));
        assert_eq!(en.local_hstar(&face).unwrap(), poly(&[0, 2]));

        // Keeping the endpoints attaches gcd(2, 3) = 1.
        let face = lhs.face(&[0, 2]).unwrap();
        assert_eq!(face_mu(&bound, &[0, 2]).unwrap(), s(&[1]));
        assertions_face_matches(&en, &face, &s(&[1]));

        assert!(matches!(face_mu(&bound, &[1]), Err(Error::SingleVertex)));
        assert!(face_mu(&bound, &[1, 0]).is_err());
        assert!(face_mu(&bound, &[0, 9]).is_err());
    }

    fn assertions_face_matches(en: &PointEnumerator, face: &LatticeSimplex, mu: &SSequence) {
        assert_eq!(en.local_hstar(face).unwrap(), s_derangement_enum(mu));
    }

    #[test]
    fn volume_cap_is_enforced() {
        let lhs = LatticeSimplex::lecture_hall(&s(&[4, 4, 4])).unwrap();
        let en = PointEnumerator::new().with_volume_cap(10);
        assert!(matches!(
            en.hstar(&lhs),
            Err(Error::VolumeTooLarge { cap: 10, .. })
        ));
    }

    #[test]
    fn hstar_at_one_is_the_volume() {
        for bound in [s(&[2, 3]), s(&[3, 1, 4]), s(&[2, 2, 2, 2])] {
            let lhs = LatticeSimplex::lecture_hall(&bound).unwrap();
            let h = PointEnumerator::new().hstar(&lhs).unwrap();
            assert_eq!(h.eval_at_one(), lhs.normalized_volume());
        }
    }
}
