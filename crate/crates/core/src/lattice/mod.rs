//! The quotient of quantum assertive formulas by equal pragmatic extension.
//!
//! Formulas over `N`, `K`, `AQ` and `|- atom` are enumerated level by level.
//! Each level only combines class witnesses, so the work grows with the
//! number of classes rather than the number of formulas. The discovered
//! classes are then closed under the three operations, ordered, and turned
//! into tables.

mod export;
pub mod fixtures;
mod tables;

use serde::{Deserialize, Serialize};

use crate::formula::{AssertiveFormula, Atom};
use crate::hilbert::Projector;
use crate::model::Model;

pub use export::{export_lattice, import_lattice, ExportError, ExportFormat};
pub use tables::{
    find_distributivity_violation, verify_orthomodular, verify_ortholattice, LatticeTables, LawReport,
    TableError,
};

/// Upper bound on the number of classes before closure gives up.
pub const MAX_CLASSES: usize = 2048;

/// Classes merge when their projectors differ by at most this many eps.
pub const MERGE_FACTOR: f64 = 10.0;

#[derive(Debug, thiserror::Error)]
pub enum LatticeError {
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("no atoms given")]
    NoAtoms,
    #[error("atom `{0}` is not mapped to a property in the model")]
    UnknownAtom(String),
    #[error("closure exceeded {0} classes")]
    TooManyClasses(usize),
}

/// One class: its id, canonical formula and projector. Closure elements
/// that no enumerated formula reached are marked `synthesized`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Element {
    pub id: usize,
    #[serde(with = "formula_text")]
    pub formula: AssertiveFormula,
    pub synthesized: bool,
    pub projector: Projector,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientLattice {
    pub eps: f64,
    pub elements: Vec<Element>,
    #[serde(flatten)]
    pub tables: LatticeTables,
    /// Every formula placed in each class, indexed by class id. Not part of
    /// the exported document.
    #[serde(skip)]
    pub members: Vec<Vec<AssertiveFormula>>,
}

impl QuotientLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn merge_tolerance(&self) -> f64 {
        MERGE_FACTOR * self.eps
    }

    /// Class whose projector matches `p`, if any.
    pub fn class_of(&self, p: &Projector) -> Option<usize> {
        let tol = self.merge_tolerance();
        self.elements.iter().position(|e| e.projector.approx_eq(p, tol))
    }
}

mod formula_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::formula::{parse_assertive, AssertiveFormula};

    pub fn serialize<S: Serializer>(f: &AssertiveFormula, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(f)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<AssertiveFormula, D::Error> {
        let text = String::deserialize(d)?;
        parse_assertive(&text).map_err(serde::de::Error::custom)
    }
}

struct Class {
    projector: Projector,
    witness: AssertiveFormula,
    // level at which the class was first reached; None for closure elements
    level: Option<usize>,
    members: Vec<AssertiveFormula>,
}

struct Builder {
    classes: Vec<Class>,
    tol: f64,
    eps: f64,
}

impl Builder {
    fn find(&self, p: &Projector) -> Option<usize> {
        self.classes.iter().position(|c| c.projector.approx_eq(p, self.tol))
    }

    fn insert(&mut self, formula: AssertiveFormula, projector: Projector, level: Option<usize>) -> bool {
        match self.find(&projector) {
            Some(i) => {
                self.classes[i].members.push(formula);
                false
            }
            None => {
                self.classes.push(Class {
                    projector,
                    witness: formula.clone(),
                    level,
                    members: vec![formula],
                });
                true
            }
        }
    }

    fn enumerate(&mut self, depth: usize) {
        for level in 1..=depth {
            let n = self.classes.len();
            let fresh = |c: &Class| c.level == Some(level - 1);
            let mut candidates = Vec::new();
            for i in 0..n {
                let ci = &self.classes[i];
                if fresh(ci) {
                    candidates.push((AssertiveFormula::not(ci.witness.clone()), ci.projector.ortho()));
                }
                for j in 0..n {
                    let cj = &self.classes[j];
                    if !fresh(ci) && !fresh(cj) {
                        continue;
                    }
                    candidates.push((
                        AssertiveFormula::and(ci.witness.clone(), cj.witness.clone()),
                        ci.projector.meet(&cj.projector, self.eps),
                    ));
                    candidates.push((
                        AssertiveFormula::quantum_or(ci.witness.clone(), cj.witness.clone()),
                        ci.projector.join(&cj.projector, self.eps),
                    ));
                }
            }
            for (f, p) in candidates {
                self.insert(f, p, Some(level));
            }
        }
    }

    /// Adds whatever the operations produce from known classes until nothing
    /// new appears. Only pairs touching a class added in the previous round
    /// are recomputed.
    fn close(&mut self) -> Result<(), LatticeError> {
        let mut done = 0;
        loop {
            let n = self.classes.len();
            if n == done {
                return Ok(());
            }
            let mut candidates = Vec::new();
            for i in 0..n {
                let ci = &self.classes[i];
                let ri = canonical(&ci.members);
                if i >= done {
                    candidates.push((AssertiveFormula::not(ri.clone()), ci.projector.ortho()));
                }
                for j in 0..n {
                    if i < done && j < done {
                        continue;
                    }
                    let cj = &self.classes[j];
                    let rj = canonical(&cj.members);
                    candidates.push((
                        AssertiveFormula::and(ri.clone(), rj.clone()),
                        ci.projector.meet(&cj.projector, self.eps),
                    ));
                    candidates.push((
                        AssertiveFormula::quantum_or(ri.clone(), rj),
                        ci.projector.join(&cj.projector, self.eps),
                    ));
                }
            }
            done = n;
            for (f, p) in candidates {
                // closure formulas only name new classes; existing classes
                // keep their enumerated members
                if self.find(&p).is_none() {
                    self.insert(f, p, None);
                    if self.classes.len() > MAX_CLASSES {
                        return Err(LatticeError::TooManyClasses(MAX_CLASSES));
                    }
                }
            }
        }
    }
}

/// Shortest printed formula, ties broken lexicographically.
fn canonical(members: &[AssertiveFormula]) -> AssertiveFormula {
    members
        .iter()
        .map(|f| (f.to_string(), f))
        .min_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .map(|(_, f)| f.clone())
        .expect("classes are never empty")
}

/// Enumerates quantum formulas over `atoms` with connective nesting at most
/// `depth`, groups them by extension and closes the result under the
/// operations.
pub fn generate_quotient(model: &Model, atoms: &[Atom], depth: usize) -> Result<QuotientLattice, LatticeError> {
    if depth < 1 {
        return Err(LatticeError::ZeroDepth);
    }
    if atoms.is_empty() {
        return Err(LatticeError::NoAtoms);
    }
    let mut builder = Builder {
        classes: Vec::new(),
        tol: MERGE_FACTOR * model.eps,
        eps: model.eps,
    };
    for atom in atoms {
        let p = model
            .atom_property(atom)
            .ok_or_else(|| LatticeError::UnknownAtom(atom.to_string()))?;
        let f = AssertiveFormula::Assert(crate::formula::RadicalFormula::Atom(atom.clone()));
        builder.insert(f, p.clone(), Some(0));
    }
    builder.enumerate(depth);
    builder.close()?;
    Ok(assemble(builder, model.eps))
}

fn assemble(builder: Builder, eps: f64) -> QuotientLattice {
    let tol = builder.tol;
    let mut classes: Vec<(String, Class)> = builder
        .classes
        .into_iter()
        .map(|c| (canonical(&c.members).to_string(), c))
        .collect();
    classes.sort_by(|(a, ca), (b, cb)| {
        ca.projector
            .rank()
            .cmp(&cb.projector.rank())
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.cmp(b))
    });
    let n = classes.len();
    let projectors: Vec<&Projector> = classes.iter().map(|(_, c)| &c.projector).collect();
    let find = |p: &Projector| {
        projectors
            .iter()
            .position(|q| q.approx_eq(p, tol))
            .expect("classes are closed under the operations")
    };
    let mut order = vec![vec![false; n]; n];
    let mut neg = vec![0; n];
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for i in 0..n {
        neg[i] = find(&projectors[i].ortho());
        for j in 0..n {
            order[i][j] = projectors[i].leq(projectors[j], tol);
            meet[i][j] = find(&projectors[i].meet(projectors[j], eps));
            join[i][j] = find(&projectors[i].join(projectors[j], eps));
        }
    }
    // x K N x and x AQ N x are always present after closure
    let dim = projectors[0].dim();
    let bottom = find(&Projector::zero(dim));
    let top = find(&Projector::identity(dim));

    let mut elements = Vec::with_capacity(n);
    let mut members = Vec::with_capacity(n);
    for (id, (_, class)) in classes.into_iter().enumerate() {
        elements.push(Element {
            id,
            formula: canonical(&class.members),
            synthesized: class.level.is_none(),
            projector: class.projector,
        });
        members.push(class.members);
    }
    QuotientLattice {
        eps,
        elements,
        tables: LatticeTables {
            order,
            neg,
            meet,
            join,
            bottom,
            top,
        },
        members,
    }
}

/// Checks that class ids map injectively to projectors, that the order is
/// subspace inclusion, and that the tables agree with `ortho`, `meet` and
/// `join`.
pub fn verify_isomorphism(lattice: &QuotientLattice) -> LawReport {
    const LAW: &str = "isomorphism";
    let tol = lattice.merge_tolerance();
    let eps = lattice.eps;
    let t = &lattice.tables;
    let p = |i: usize| &lattice.elements[i].projector;
    let n = lattice.len();
    for i in 0..n {
        for j in i + 1..n {
            if p(i).approx_eq(p(j), tol) {
                return LawReport::fails(LAW, vec![i, j], "two classes share a projector");
            }
        }
    }
    for i in 0..n {
        if !p(t.neg[i]).approx_eq(&p(i).ortho(), tol) {
            return LawReport::fails(LAW, vec![i], "negation table disagrees with ortho");
        }
        for j in 0..n {
            if t.order[i][j] != p(i).leq(p(j), tol) {
                return LawReport::fails(LAW, vec![i, j], "order disagrees with subspace inclusion");
            }
            if !p(t.meet[i][j]).approx_eq(&p(i).meet(p(j), eps), tol) {
                return LawReport::fails(LAW, vec![i, j], "K table disagrees with meet");
            }
            if !p(t.join[i][j]).approx_eq(&p(i).join(p(j), eps), tol) {
                return LawReport::fails(LAW, vec![i, j], "AQ table disagrees with join");
            }
        }
    }
    LawReport::holds(LAW)
}
