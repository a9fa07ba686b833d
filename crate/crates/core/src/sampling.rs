//! Seeded random generation of states, projectors and formulas.
//!
//! Every function takes the generator explicitly so that a single seeded
//! generator can drive a whole run.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::formula::{Atom, AssertiveFormula, Connective, RadicalFormula};
use crate::hilbert::{Projector, StateVector, C64};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn gaussian_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DVector<C64> {
    DVector::from_fn(dim, |_, _| gaussian(rng))
}

/// Uniformly distributed unit vector (normalized standard complex Gaussian).
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> StateVector {
    loop {
        if let Ok(s) = StateVector::normalize(gaussian_vector(dim, rng)) {
            return s;
        }
    }
}

/// Random unit vector inside `range(p)`, or `None` when `p` is zero.
pub fn random_state_in<R: Rng + ?Sized>(p: &Projector, rng: &mut R) -> Option<StateVector> {
    if p.rank() == 0 {
        return None;
    }
    let basis = p.basis();
    let coeffs = gaussian_vector(basis.ncols(), rng);
    StateVector::normalize(basis * coeffs).ok()
}

/// Projector onto the span of `rank` Gaussian vectors.
pub fn random_projector<R: Rng + ?Sized>(dim: usize, rank: usize, rng: &mut R, eps: f64) -> Projector {
    assert!(rank <= dim);
    let vectors: Vec<DVector<C64>> = (0..rank).map(|_| gaussian_vector(dim, rng)).collect();
    Projector::from_span(&vectors, dim, eps).expect("dimensions agree")
}

/// Random projector of uniformly chosen rank in `0..=dim`.
pub fn random_projector_any_rank<R: Rng + ?Sized>(dim: usize, rng: &mut R, eps: f64) -> Projector {
    let rank = rng.random_range(0..=dim);
    random_projector(dim, rank, rng, eps)
}

/// Random complex matrix with Gaussian entries.
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<C64> {
    DMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Random quantum formula (connectives `N`, `K`, `AQ` over `|- atom`) of
/// pragmatic depth at most `max_depth`.
pub fn random_quantum_formula<R: Rng + ?Sized>(
    atoms: &[Atom],
    max_depth: usize,
    rng: &mut R,
) -> AssertiveFormula {
    assert!(!atoms.is_empty(), "need at least one atom");
    if max_depth == 0 || rng.random_bool(0.25) {
        let a = &atoms[rng.random_range(0..atoms.len())];
        return AssertiveFormula::Assert(RadicalFormula::Atom(a.clone()));
    }
    match rng.random_range(0..3) {
        0 => AssertiveFormula::not(random_quantum_formula(atoms, max_depth - 1, rng)),
        1 => AssertiveFormula::and(
            random_quantum_formula(atoms, max_depth - 1, rng),
            random_quantum_formula(atoms, max_depth - 1, rng),
        ),
        _ => AssertiveFormula::quantum_or(
            random_quantum_formula(atoms, max_depth - 1, rng),
            random_quantum_formula(atoms, max_depth - 1, rng),
        ),
    }
}

/// Random radical formula of depth at most `max_depth`.
pub fn random_radical<R: Rng + ?Sized>(atoms: &[Atom], max_depth: usize, rng: &mut R) -> RadicalFormula {
    assert!(!atoms.is_empty(), "need at least one atom");
    if max_depth == 0 || rng.random_bool(0.25) {
        return RadicalFormula::Atom(atoms[rng.random_range(0..atoms.len())].clone());
    }
    let d = max_depth - 1;
    match rng.random_range(0..5) {
        0 => RadicalFormula::not(random_radical(atoms, d, rng)),
        1 => RadicalFormula::and(random_radical(atoms, d, rng), random_radical(atoms, d, rng)),
        2 => RadicalFormula::or(random_radical(atoms, d, rng), random_radical(atoms, d, rng)),
        3 => RadicalFormula::implies(random_radical(atoms, d, rng), random_radical(atoms, d, rng)),
        _ => RadicalFormula::iff(random_radical(atoms, d, rng), random_radical(atoms, d, rng)),
    }
}

/// Random assertive formula over every connective, with molecular radicals
/// at the leaves. Total depth (pragmatic plus radical) is at most
/// `max_depth`.
pub fn random_assertive<R: Rng + ?Sized>(atoms: &[Atom], max_depth: usize, rng: &mut R) -> AssertiveFormula {
    if max_depth == 0 || rng.random_bool(0.25) {
        return AssertiveFormula::Assert(random_radical(atoms, max_depth, rng));
    }
    let d = max_depth - 1;
    const BINARY: [Connective; 5] = [
        Connective::And,
        Connective::Or,
        Connective::Implies,
        Connective::Iff,
        Connective::QuantumOr,
    ];
    match rng.random_range(0..6) {
        0 => AssertiveFormula::not(random_assertive(atoms, d, rng)),
        i => AssertiveFormula::binary(
            BINARY[i - 1],
            random_assertive(atoms, d, rng),
            random_assertive(atoms, d, rng),
        ),
    }
}
