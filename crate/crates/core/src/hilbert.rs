//! Finite-dimensional subspace algebra over the complex numbers.
//!
//! A closed subspace is represented by its orthogonal projector. The
//! projectors of a fixed dimension form an orthomodular (and, from dimension
//! 2 on, non-distributive) lattice under [`Projector::ortho`],
//! [`Projector::meet`], [`Projector::join`] and [`Projector::leq`].
//!
//! All comparisons use the maximum absolute entry-wise deviation. Rank
//! decisions use pivoted Gram-Schmidt and treat residuals
//! `<= eps * sqrt(dim)` as zero.

use nalgebra::{Complex, DMatrix, DVector};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type C64 = Complex<f64>;

/// Default tolerance for all entry-wise comparisons.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum HilbertError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not Hermitian (max |P - P^dagger| = {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("matrix is not idempotent (max |P^2 - P| = {defect:e})")]
    NotIdempotent { defect: f64 },
    #[error("state vector is zero")]
    ZeroState,
    #[error("state vector is not normalized (norm {norm})")]
    NonUnitState { norm: f64 },
    #[error("dimension must be positive")]
    ZeroDimension,
}

/// Maximum absolute entry of `a - b`. Shapes must agree.
pub fn max_abs_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn max_abs_diff_vec(a: &DVector<C64>, b: &DVector<C64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn rank_threshold(dim: usize, eps: f64) -> f64 {
    eps * (dim as f64).sqrt()
}

/// Orthogonal projector onto a closed subspace of `C^dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Projector {
    matrix: DMatrix<C64>,
    rank: usize,
}

impl Projector {
    pub fn zero(dim: usize) -> Self {
        Projector {
            matrix: DMatrix::zeros(dim, dim),
            rank: 0,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Projector {
            matrix: DMatrix::identity(dim, dim),
            rank: dim,
        }
    }

    /// Projector onto the span of `vectors`, each of length `dim`.
    ///
    /// Directions whose Gram-Schmidt residual is at most `eps * sqrt(dim)` are
    /// dropped, so linearly dependent input is fine.
    pub fn from_span(vectors: &[DVector<C64>], dim: usize, eps: f64) -> Result<Self, HilbertError> {
        if dim == 0 {
            return Err(HilbertError::ZeroDimension);
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(HilbertError::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Projector::zero(dim));
        }
        let stacked = DMatrix::from_columns(vectors);
        Ok(Self::from_column_space(&stacked, eps))
    }

    /// Projector onto the column space of `m`.
    fn from_column_space(m: &DMatrix<C64>, eps: f64) -> Self {
        let dim = m.nrows();
        let columns: Vec<DVector<C64>> = m.column_iter().map(|c| c.into_owned()).collect();
        let basis = orthonormalize(columns, rank_threshold(dim, eps), dim);
        if basis.is_empty() {
            return Projector::zero(dim);
        }
        Self::from_orthonormal_basis(&DMatrix::from_columns(&basis))
    }

    /// `B B^dagger` for a matrix `B` with orthonormal columns.
    fn from_orthonormal_basis(basis: &DMatrix<C64>) -> Self {
        let dim = basis.nrows();
        if basis.ncols() == 0 {
            return Projector::zero(dim);
        }
        let mut matrix = basis * basis.adjoint();
        symmetrize(&mut matrix);
        Projector {
            matrix,
            rank: basis.ncols(),
        }
    }

    /// Validates a matrix as a projector.
    ///
    /// The Hermitian check runs on the raw matrix; the matrix is then
    /// symmetrized to `(P + P^dagger) / 2` before the idempotency check.
    pub fn from_matrix(matrix: DMatrix<C64>, eps: f64) -> Result<Self, HilbertError> {
        let (rows, cols) = matrix.shape();
        if rows != cols {
            return Err(HilbertError::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(HilbertError::ZeroDimension);
        }
        let herm = max_abs_diff(&matrix, &matrix.adjoint());
        if herm > eps {
            return Err(HilbertError::NotHermitian { defect: herm });
        }
        let p = Self::from_matrix_unchecked(matrix);
        let idem = p.idempotency_defect();
        if idem > eps {
            return Err(HilbertError::NotIdempotent { defect: idem });
        }
        Ok(p)
    }

    /// Wraps a square matrix without validation, after Hermitian
    /// symmetrization. The rank is the rounded trace.
    ///
    /// Used to hold possibly corrupted data that is checked later by
    /// [`crate::model::validate_model`].
    pub fn from_matrix_unchecked(mut matrix: DMatrix<C64>) -> Self {
        assert!(matrix.is_square(), "projector matrix must be square");
        symmetrize(&mut matrix);
        let trace = matrix.trace().re;
        let rank = trace.round().clamp(0.0, matrix.nrows() as f64) as usize;
        Projector { matrix, rank }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn hermiticity_defect(&self) -> f64 {
        max_abs_diff(&self.matrix, &self.matrix.adjoint())
    }

    pub fn idempotency_defect(&self) -> f64 {
        max_abs_diff(&(&self.matrix * &self.matrix), &self.matrix)
    }

    /// Distance of the trace from the cached rank.
    pub fn trace_defect(&self) -> f64 {
        (self.matrix.trace().re - self.rank as f64).abs()
    }

    /// Orthonormal basis of the range, as columns.
    pub fn basis(&self) -> DMatrix<C64> {
        let dim = self.dim();
        let columns: Vec<DVector<C64>> = self.matrix.column_iter().map(|c| c.into_owned()).collect();
        // the largest residual of a projector column never drops below
        // 1/sqrt(dim) before the rank is exhausted
        let basis = orthonormalize(columns, 0.5 / (dim as f64).sqrt(), self.rank);
        if basis.is_empty() {
            return DMatrix::zeros(dim, 0);
        }
        DMatrix::from_columns(&basis)
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.matrix.iter().all(|x| x.norm() <= eps)
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        max_abs_diff(&self.matrix, &DMatrix::identity(self.dim(), self.dim())) <= eps
    }

    /// Orthocomplement `I - P`.
    pub fn ortho(&self) -> Projector {
        let dim = self.dim();
        let mut matrix = DMatrix::identity(dim, dim) - &self.matrix;
        symmetrize(&mut matrix);
        Projector {
            matrix,
            rank: dim - self.rank,
        }
    }

    /// Projector onto `range(P) ∩ range(Q)`.
    ///
    /// With orthonormal bases `B_P`, `B_Q`, the intersection is `B_P x` for
    /// every `(x, y)` in the null space of `S = [B_P | -B_Q]`, which is
    /// the orthocomplement of the range of `S^dagger`.
    pub fn meet(&self, other: &Projector, eps: f64) -> Projector {
        assert_eq!(self.dim(), other.dim(), "meet of projectors of different dimension");
        let dim = self.dim();
        if self.rank == 0 || other.rank == 0 {
            return Projector::zero(dim);
        }
        let bp = self.basis();
        let bq = other.basis();
        let (rp, rq) = (bp.ncols(), bq.ncols());
        let n = rp + rq;
        let mut stacked = DMatrix::<C64>::zeros(dim, n);
        stacked.view_mut((0, 0), (dim, rp)).copy_from(&bp);
        stacked.view_mut((0, rp), (dim, rq)).copy_from(&(-&bq));
        // null(S) is the orthocomplement of range(S^dagger) in C^n
        let threshold = rank_threshold(dim, eps);
        let rows: Vec<DVector<C64>> = stacked.adjoint().column_iter().map(|c| c.into_owned()).collect();
        let row_space = orthonormalize(rows, threshold, n);
        let directions: Vec<DVector<C64>> = complement(&row_space, n)
            .iter()
            .map(|z| &bp * z.rows(0, rp))
            .collect();
        if directions.is_empty() {
            return Projector::zero(dim);
        }
        Self::from_column_space(&DMatrix::from_columns(&directions), eps)
    }

    /// Projector onto the span of `range(P) ∪ range(Q)`.
    pub fn join(&self, other: &Projector, eps: f64) -> Projector {
        assert_eq!(self.dim(), other.dim(), "join of projectors of different dimension");
        let bp = self.basis();
        let bq = other.basis();
        let mut columns: Vec<DVector<C64>> = bp.column_iter().map(|c| c.into_owned()).collect();
        columns.extend(bq.column_iter().map(|c| c.into_owned()));
        if columns.is_empty() {
            return Projector::zero(self.dim());
        }
        Self::from_column_space(&DMatrix::from_columns(&columns), eps)
    }

    /// Range inclusion: `max |QP - P| <= eps`.
    pub fn leq(&self, other: &Projector, eps: f64) -> bool {
        assert_eq!(self.dim(), other.dim(), "comparing projectors of different dimension");
        max_abs_diff(&(&other.matrix * &self.matrix), &self.matrix) <= eps
    }

    pub fn max_deviation(&self, other: &Projector) -> f64 {
        max_abs_diff(&self.matrix, &other.matrix)
    }

    pub fn approx_eq(&self, other: &Projector, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_deviation(other) <= tol
    }

    pub fn apply(&self, v: &DVector<C64>) -> DVector<C64> {
        &self.matrix * v
    }

    /// Whether `P v = v` within `eps`.
    pub fn contains(&self, v: &DVector<C64>, eps: f64) -> bool {
        max_abs_diff_vec(&self.apply(v), v) <= eps
    }

    /// Whether `P v = 0` within `eps`.
    pub fn annihilates(&self, v: &DVector<C64>, eps: f64) -> bool {
        self.apply(v).iter().all(|x| x.norm() <= eps)
    }

    /// `<v, P v>`, the real part clamped to `[0, 1]` for unit `v`.
    pub fn expectation(&self, v: &DVector<C64>) -> f64 {
        v.dotc(&self.apply(v)).re.clamp(0.0, 1.0)
    }
}

/// Rank-revealing Gram-Schmidt: repeatedly takes the column with the largest
/// residual, stopping once that residual is at most `threshold` or `limit`
/// vectors are found. Each new vector is orthogonalized twice.
fn orthonormalize(mut residual: Vec<DVector<C64>>, threshold: f64, limit: usize) -> Vec<DVector<C64>> {
    let mut basis: Vec<DVector<C64>> = Vec::new();
    while basis.len() < limit {
        let Some((k, norm)) = residual
            .iter()
            .map(|v| v.norm())
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            break;
        };
        if norm <= threshold {
            break;
        }
        let mut q = residual.swap_remove(k);
        for b in &basis {
            let c = b.dotc(&q);
            q -= b * c;
        }
        let norm = q.norm();
        if norm <= threshold {
            break;
        }
        q.unscale_mut(norm);
        for v in residual.iter_mut() {
            let c = q.dotc(v);
            *v -= &q * c;
        }
        basis.push(q);
    }
    basis
}

/// Orthonormal basis of the orthocomplement of `span(basis)` in `C^n`,
/// taken from the unit vectors with the span projected out.
fn complement(basis: &[DVector<C64>], n: usize) -> Vec<DVector<C64>> {
    let units = (0..n)
        .map(|j| {
            let mut e = DVector::<C64>::zeros(n);
            e[j] = C64::new(1.0, 0.0);
            for b in basis {
                let c = b.dotc(&e);
                e -= b * c;
            }
            e
        })
        .collect();
    // some unit vector keeps a residual of at least 1/sqrt(n) at each step
    orthonormalize(units, 0.5 / (n as f64).sqrt(), n - basis.len())
}

fn symmetrize(m: &mut DMatrix<C64>) {
    let adj = m.adjoint();
    *m += adj;
    *m *= C64::new(0.5, 0.0);
}

/// A unit vector standing for a pure state (a ray; global phase is
/// irrelevant to every operation).
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: DVector<C64>,
}

impl StateVector {
    /// Accepts a vector whose norm is within `eps` of 1.
    pub fn new(amplitudes: DVector<C64>, eps: f64) -> Result<Self, HilbertError> {
        let norm = amplitudes.norm();
        if amplitudes.is_empty() {
            return Err(HilbertError::ZeroDimension);
        }
        if norm == 0.0 {
            return Err(HilbertError::ZeroState);
        }
        if (norm - 1.0).abs() > eps {
            return Err(HilbertError::NonUnitState { norm });
        }
        Ok(StateVector { amplitudes })
    }

    /// Rescales to unit norm.
    pub fn normalize(amplitudes: DVector<C64>) -> Result<Self, HilbertError> {
        if amplitudes.is_empty() {
            return Err(HilbertError::ZeroDimension);
        }
        let norm = amplitudes.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(HilbertError::ZeroState);
        }
        Ok(StateVector {
            amplitudes: amplitudes.unscale(norm),
        })
    }

    /// Wraps a vector without any norm check.
    pub fn from_amplitudes_unchecked(amplitudes: DVector<C64>) -> Self {
        StateVector { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// Rank-1 projector onto the ray.
    pub fn ray(&self) -> Projector {
        let basis = DMatrix::from_columns(&[self.amplitudes.unscale(self.norm())]);
        Projector::from_orthonormal_basis(&basis)
    }
}

/// Dense row-major complex matrix in `[re, im]` pairs.
pub type MatrixDoc = Vec<Vec<[f64; 2]>>;

pub fn vector_to_doc(v: &DVector<C64>) -> Vec<[f64; 2]> {
    v.iter().map(|c| [c.re, c.im]).collect()
}

pub fn vector_from_doc(doc: &[[f64; 2]]) -> DVector<C64> {
    DVector::from_iterator(doc.len(), doc.iter().map(|[re, im]| C64::new(*re, *im)))
}

pub fn matrix_to_doc(m: &DMatrix<C64>) -> MatrixDoc {
    m.row_iter()
        .map(|row| row.iter().map(|c| [c.re, c.im]).collect())
        .collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<DMatrix<C64>, HilbertError> {
    let rows = doc.len();
    let cols = doc.first().map_or(0, Vec::len);
    if let Some(bad) = doc.iter().find(|r| r.len() != cols) {
        return Err(HilbertError::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    Ok(DMatrix::from_row_iterator(
        rows,
        cols,
        doc.iter().flatten().map(|[re, im]| C64::new(*re, *im)),
    ))
}

#[derive(Serialize, Deserialize)]
struct ProjectorDoc {
    dim: usize,
    rank: usize,
    matrix: MatrixDoc,
}

impl Serialize for Projector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ProjectorDoc {
            dim: self.dim(),
            rank: self.rank,
            matrix: matrix_to_doc(&self.matrix),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Projector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = ProjectorDoc::deserialize(d)?;
        let m = matrix_from_doc(&doc.matrix).map_err(D::Error::custom)?;
        if m.nrows() != doc.dim {
            return Err(D::Error::custom(HilbertError::DimensionMismatch {
                expected: doc.dim,
                found: m.nrows(),
            }));
        }
        let p = Projector::from_matrix(m, DEFAULT_EPS).map_err(D::Error::custom)?;
        if p.rank != doc.rank {
            return Err(D::Error::custom(format!(
                "declared rank {} does not match trace rank {}",
                doc.rank, p.rank
            )));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = DEFAULT_EPS;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn vec2(a: f64, b: f64) -> DVector<C64> {
        DVector::from_vec(vec![c(a), c(b)])
    }

    fn real_matrix(rows: &[&[f64]]) -> DMatrix<C64> {
        let n = rows.len();
        DMatrix::from_row_iterator(n, n, rows.iter().flat_map(|r| r.iter().map(|x| c(*x))))
    }

    fn pz() -> Projector {
        Projector::from_span(&[vec2(1.0, 0.0)], 2, EPS).unwrap()
    }

    fn px() -> Projector {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Projector::from_span(&[vec2(s, s)], 2, EPS).unwrap()
    }

    #[test]
    fn complex_subspaces_survive_decomposition() {
        // regression: an SVD-based basis was wrong for some complex lines in C^2
        let mut rng = crate::sampling::seeded(31);
        for dim in 2..=4 {
            for rank in 0..=dim {
                for _ in 0..30 {
                    let p = crate::sampling::random_projector(dim, rank, &mut rng, EPS);
                    assert_eq!(p.rank(), rank);
                    assert!(p.idempotency_defect() < 1e-12);
                    let b = p.basis();
                    assert!(max_abs_diff(&(&b * b.adjoint()), p.matrix()) < 1e-12);
                    assert!(p.join(&p, EPS).approx_eq(&p, 1e-12));
                    assert!(p.meet(&p, EPS).approx_eq(&p, 1e-12));
                    assert!(p.ortho().ortho().approx_eq(&p, 1e-15));
                }
            }
        }
    }

    #[test]
    fn span_of_basis_vector() {
        let p = pz();
        assert_eq!(p.rank(), 1);
        assert!(max_abs_diff(p.matrix(), &real_matrix(&[&[1.0, 0.0], &[0.0, 0.0]])) <= EPS);
    }

    #[test]
    fn span_of_diagonal_is_outer_product() {
        let p = px();
        assert_eq!(p.rank(), 1);
        assert!(max_abs_diff(p.matrix(), &real_matrix(&[&[0.5, 0.5], &[0.5, 0.5]])) <= EPS);
    }

    #[test]
    fn empty_span_is_zero() {
        let p = Projector::from_span(&[], 2, EPS).unwrap();
        assert_eq!(p.rank(), 0);
        assert!(p.is_zero(0.0));
    }

    #[test]
    fn dependent_span_drops_directions() {
        let p = Projector::from_span(&[vec2(1.0, 1.0), vec2(2.0, 2.0)], 2, EPS).unwrap();
        assert_eq!(p.rank(), 1);
        assert!(p.approx_eq(&px(), EPS));
    }

    #[test]
    fn span_dimension_mismatch() {
        let v = DVector::from_vec(vec![c(1.0)]);
        assert_eq!(
            Projector::from_span(&[v], 2, EPS).unwrap_err(),
            HilbertError::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn matrix_validation() {
        let ok = Projector::from_matrix(real_matrix(&[&[0.5, 0.5], &[0.5, 0.5]]), EPS).unwrap();
        assert_eq!(ok.rank(), 1);
        assert!(matches!(
            Projector::from_matrix(real_matrix(&[&[1.0, 1.0], &[0.0, 0.0]]), EPS),
            Err(HilbertError::NotHermitian { .. })
        ));
        assert!(matches!(
            Projector::from_matrix(real_matrix(&[&[0.5, 0.0], &[0.0, 0.0]]), EPS),
            Err(HilbertError::NotIdempotent { .. })
        ));
        let rect = DMatrix::<C64>::zeros(2, 3);
        assert!(matches!(
            Projector::from_matrix(rect, EPS),
            Err(HilbertError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn ortho_examples() {
        assert!(Projector::zero(3).ortho().is_identity(0.0));
        let o = px().ortho();
        assert_eq!(o.rank(), 1);
        assert!(max_abs_diff(o.matrix(), &real_matrix(&[&[0.5, -0.5], &[-0.5, 0.5]])) <= EPS);
        assert!(px().ortho().ortho().approx_eq(&px(), EPS));
    }

    #[test]
    fn meet_examples() {
        let (z, x) = (pz(), px());
        assert!(z.meet(&z, EPS).approx_eq(&z, EPS));
        assert!(z.meet(&x, EPS).is_zero(EPS));
        assert!(z.meet(&Projector::identity(2), EPS).approx_eq(&z, EPS));
    }

    #[test]
    fn join_examples() {
        let (z, x) = (pz(), px());
        assert!(z.join(&x, EPS).is_identity(EPS));
        assert!(z.join(&Projector::zero(2), EPS).approx_eq(&z, EPS));
        assert!(x.join(&x.ortho(), EPS).is_identity(EPS));
    }

    #[test]
    fn leq_examples() {
        let (z, x) = (pz(), px());
        assert!(Projector::zero(2).leq(&x, EPS));
        assert!(!z.leq(&x, EPS));
        assert!(z.meet(&x, EPS).leq(&z, EPS));
        assert!(z.leq(&Projector::identity(2), EPS));
    }

    #[test]
    fn meet_of_planes_in_three_dimensions() {
        let e = |i: usize| {
            let mut v = DVector::<C64>::zeros(3);
            v[i] = c(1.0);
            v
        };
        let xy = Projector::from_span(&[e(0), e(1)], 3, EPS).unwrap();
        let yz = Projector::from_span(&[e(1), e(2)], 3, EPS).unwrap();
        let y = Projector::from_span(&[e(1)], 3, EPS).unwrap();
        let m = xy.meet(&yz, EPS);
        assert_eq!(m.rank(), 1);
        assert!(m.approx_eq(&y, EPS));
        assert!(xy.join(&yz, EPS).is_identity(EPS));
    }

    #[test]
    fn distributivity_fails_on_qubit() {
        let (z, x) = (pz(), px());
        let lhs = z.meet(&x.join(&x.ortho(), EPS), EPS);
        let rhs = z.meet(&x, EPS).join(&z.meet(&x.ortho(), EPS), EPS);
        assert!(lhs.approx_eq(&z, EPS));
        assert!(rhs.is_zero(EPS));
    }

    #[test]
    fn state_vectors() {
        assert_eq!(
            StateVector::new(vec2(0.0, 0.0), EPS).unwrap_err(),
            HilbertError::ZeroState
        );
        assert!(matches!(
            StateVector::new(vec2(1.0, 1.0), EPS),
            Err(HilbertError::NonUnitState { .. })
        ));
        let s = StateVector::normalize(vec2(1.0, 1.0)).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!(s.ray().approx_eq(&px(), EPS));
        assert!((px().expectation(s.amplitudes()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn projector_json_round_trip() {
        let p = px();
        let text = serde_json::to_string(&p).unwrap();
        let back: Projector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
