//! Truth and justification.
//!
//! Truth is the partial assignment of a pure state: an atom is true when its
//! property has probability 1, false when it has probability 0, and has no
//! truth value otherwise. Justification is total: a quantum assertive
//! formula is justified in a state exactly when the state lies in the
//! formula's pragmatic extension, a subspace computed from the atoms'
//! properties with orthocomplement (`N`) and meet (`K`).

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::formula::{AssertiveFormula, Atom, FragmentReport, RadicalFormula};
use crate::hilbert::{Projector, StateVector};
use crate::model::{validate_model, Model};
use crate::report::ValidationReport;
use crate::sampling::random_state;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TruthValue3 {
    True,
    False,
    /// No truth value in this state; not a third truth value.
    Undefined,
}

impl TruthValue3 {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue3::True
        } else {
            TruthValue3::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            TruthValue3::True => Some(true),
            TruthValue3::False => Some(false),
            TruthValue3::Undefined => None,
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::True => "True",
            TruthValue3::False => "False",
            TruthValue3::Undefined => "Undefined",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JustificationValue {
    /// Justified.
    J,
    /// Unjustified.
    U,
}

impl fmt::Display for JustificationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JustificationValue::J => "J",
            JustificationValue::U => "U",
        })
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("`{formula}` is not a quantum formula ({})", describe(.report))]
    NonQuantumFormula { formula: String, report: FragmentReport },
}

fn describe(report: &FragmentReport) -> String {
    report
        .violations
        .iter()
        .map(|v| format!("{} at {:?}", v.reason, v.path))
        .collect::<Vec<_>>()
        .join("; ")
}

fn state<'m>(model: &'m Model, name: &str) -> Result<&'m StateVector, EvalError> {
    model
        .state(name)
        .ok_or_else(|| EvalError::UnknownState(name.to_string()))
}

fn property<'m>(model: &'m Model, name: &str) -> Result<&'m Projector, EvalError> {
    model
        .property(name)
        .ok_or_else(|| EvalError::UnknownProperty(name.to_string()))
}

fn atom_property<'m>(model: &'m Model, atom: &Atom) -> Result<&'m Projector, EvalError> {
    model
        .atom_property(atom)
        .ok_or_else(|| EvalError::UnknownAtom(atom.to_string()))
}

/// Born probability `<psi, P psi>`, clamped to `[0, 1]`.
pub fn born_probability(model: &Model, state_name: &str, property_name: &str) -> Result<f64, EvalError> {
    let s = state(model, state_name)?;
    let p = property(model, property_name)?;
    Ok(p.expectation(s.amplitudes()))
}

/// Classification by probability: within `eps` of 1 is true, within `eps`
/// of 0 is false.
pub fn classify_probability(probability: f64, eps: f64) -> TruthValue3 {
    if (probability - 1.0).abs() <= eps {
        TruthValue3::True
    } else if probability <= eps {
        TruthValue3::False
    } else {
        TruthValue3::Undefined
    }
}

/// Classification by the vector test: `P psi = psi` is true, `P psi = 0`
/// is false.
pub fn classify_vector(p: &Projector, s: &StateVector, eps: f64) -> TruthValue3 {
    if p.contains(s.amplitudes(), eps) {
        TruthValue3::True
    } else if p.annihilates(s.amplitudes(), eps) {
        TruthValue3::False
    } else {
        TruthValue3::Undefined
    }
}

pub fn classify_at(p: &Projector, s: &StateVector, eps: f64) -> TruthValue3 {
    classify_probability(p.expectation(s.amplitudes()), eps)
}

pub fn classify_property(model: &Model, state_name: &str, property_name: &str) -> Result<TruthValue3, EvalError> {
    let s = state(model, state_name)?;
    let p = property(model, property_name)?;
    Ok(classify_at(p, s, model.eps))
}

/// Truth value of a radical in a declared state.
pub fn sigma(model: &Model, state_name: &str, radical: &RadicalFormula) -> Result<TruthValue3, EvalError> {
    sigma_at(model, state(model, state_name)?, radical)
}

/// Truth value of a radical in an arbitrary state: undefined as soon as any
/// atom is undefined, otherwise the classical value.
pub fn sigma_at(model: &Model, s: &StateVector, radical: &RadicalFormula) -> Result<TruthValue3, EvalError> {
    let mut values = BTreeMap::new();
    for atom in radical.atoms() {
        let v = classify_at(atom_property(model, atom)?, s, model.eps);
        match v.as_bool() {
            Some(b) => {
                values.insert(atom.clone(), b);
            }
            None => return Ok(TruthValue3::Undefined),
        }
    }
    Ok(TruthValue3::from_bool(classical(radical, &values)))
}

fn classical(r: &RadicalFormula, values: &BTreeMap<Atom, bool>) -> bool {
    match r {
        RadicalFormula::Atom(a) => values[a],
        RadicalFormula::Not(x) => !classical(x, values),
        RadicalFormula::And(l, r) => classical(l, values) && classical(r, values),
        RadicalFormula::Or(l, r) => classical(l, values) || classical(r, values),
        RadicalFormula::Implies(l, r) => !classical(l, values) || classical(r, values),
        RadicalFormula::Iff(l, r) => classical(l, values) == classical(r, values),
    }
}

fn require_quantum(f: &AssertiveFormula) -> Result<(), EvalError> {
    let report = f.quantum_fragment_check();
    if report.is_quantum {
        Ok(())
    } else {
        Err(EvalError::NonQuantumFormula {
            formula: f.to_string(),
            report,
        })
    }
}

/// The subspace of states in which `formula` is justified.
///
/// `AQ` is expanded to `N((N l) K (N r))` first, so only orthocomplement and
/// meet are used.
pub fn pragmatic_extension(model: &Model, formula: &AssertiveFormula) -> Result<Projector, EvalError> {
    require_quantum(formula)?;
    extension_of(model, &formula.desugar())
}

fn extension_of(model: &Model, f: &AssertiveFormula) -> Result<Projector, EvalError> {
    match f {
        AssertiveFormula::Assert(RadicalFormula::Atom(a)) => Ok(atom_property(model, a)?.clone()),
        AssertiveFormula::Not(d) => Ok(extension_of(model, d)?.ortho()),
        AssertiveFormula::And(l, r) => {
            let (l, r) = (extension_of(model, l)?, extension_of(model, r)?);
            Ok(l.meet(&r, model.eps))
        }
        _ => unreachable!("fragment checked and desugared"),
    }
}

pub fn justify(model: &Model, state_name: &str, formula: &AssertiveFormula) -> Result<JustificationValue, EvalError> {
    let s = state(model, state_name)?;
    justify_at(model, s, formula)
}

pub fn justify_at(model: &Model, s: &StateVector, formula: &AssertiveFormula) -> Result<JustificationValue, EvalError> {
    let ext = pragmatic_extension(model, formula)?;
    Ok(justify_in(&ext, s, model.eps))
}

/// `J` iff `P psi = psi` within `eps`.
pub fn justify_in(extension: &Projector, s: &StateVector, eps: f64) -> JustificationValue {
    if extension.contains(s.amplitudes(), eps) {
        JustificationValue::J
    } else {
        JustificationValue::U
    }
}

/// Whether every state justifying `lhs` also justifies `rhs`, decided by
/// inclusion of pragmatic extensions.
pub fn precedes(model: &Model, lhs: &AssertiveFormula, rhs: &AssertiveFormula) -> Result<bool, EvalError> {
    let a = pragmatic_extension(model, lhs)?;
    let b = pragmatic_extension(model, rhs)?;
    Ok(a.leq(&b, model.eps))
}

/// Checks that justification of an elementary assertion entails truth of its
/// radical, over all declared states and `samples` random states.
///
/// An invalid model is refused: its validation report is returned unchanged.
pub fn check_cc<R: Rng + ?Sized>(model: &Model, samples: usize, rng: &mut R) -> ValidationReport {
    let validation = validate_model(model);
    if !validation.ok() {
        return validation;
    }
    let mut report = validation;
    let atoms: Vec<&Atom> = model.atom_names();
    let declared = model.states.iter().map(|(n, s)| (n.clone(), s.clone()));
    let sampled = (0..samples).map(|i| (format!("random #{i}"), random_state(model.dim, rng)));
    for (label, s) in declared.chain(sampled) {
        for atom in &atoms {
            let p = model.atom_property(atom).expect("validated model");
            if justify_in(p, &s, model.eps) == JustificationValue::J {
                let truth = sigma_at(model, &s, &RadicalFormula::Atom((*atom).clone()))
                    .expect("validated model");
                if truth != TruthValue3::True {
                    report.error(
                        "cc-counterexample",
                        format!("state {label}: |- {atom} is justified but {atom} is {truth}"),
                    );
                }
            }
        }
    }
    report
}

/// A broader truth assignment over (state, atom) pairs, such as one coming
/// from a modal value-state interpretation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overlay {
    pub assignments: BTreeMap<(String, String), bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlayAssignment {
    pub state: String,
    pub atom: String,
    pub value: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverlayDocument {
    pub assignments: Vec<OverlayAssignment>,
}

#[derive(Debug, thiserror::Error)]
pub enum OverlayError {
    #[error("overlay schema violation: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("conflicting overlay values for state `{state}`, atom `{atom}`")]
    Conflict { state: String, atom: String },
}

impl Overlay {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, state: &str, atom: &str, value: bool) -> Self {
        self.assignments.insert((state.to_string(), atom.to_string()), value);
        self
    }

    pub fn from_document(doc: &OverlayDocument) -> Result<Self, OverlayError> {
        let mut overlay = Overlay::new();
        for a in &doc.assignments {
            let key = (a.state.clone(), a.atom.clone());
            if let Some(prev) = overlay.assignments.insert(key, a.value) {
                if prev != a.value {
                    return Err(OverlayError::Conflict {
                        state: a.state.clone(),
                        atom: a.atom.clone(),
                    });
                }
            }
        }
        Ok(overlay)
    }

    pub fn parse(text: &str) -> Result<Self, OverlayError> {
        let doc: OverlayDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }
}

/// The overlay must agree with the partial assignment wherever the latter is
/// defined; it may assign freely where the latter is undefined.
pub fn validate_overlay(model: &Model, overlay: &Overlay) -> ValidationReport {
    let mut report = ValidationReport::new();
    for ((state_name, atom_name), &value) in &overlay.assignments {
        let Some(s) = model.state(state_name) else {
            report.error("unknown-state", format!("overlay names unknown state `{state_name}`"));
            continue;
        };
        let Some(p) = Atom::new(atom_name.clone()).ok().and_then(|a| model.atom_property(&a)) else {
            report.error("unknown-atom", format!("overlay names unknown atom `{atom_name}`"));
            continue;
        };
        if let Some(quantum) = classify_at(p, s, model.eps).as_bool() {
            if quantum != value {
                report.error(
                    "contradicts-quantum-assignment",
                    format!(
                        "state `{state_name}`, atom `{atom_name}`: overlay says {value}, quantum assignment says {quantum}"
                    ),
                );
            }
        }
    }
    report
}
