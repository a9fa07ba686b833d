//! Physical models: dimension, named pure states, named properties and the
//! bijective interpretation of atoms as properties.
//!
//! Model documents are JSON:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "eps": 1e-9,
//!   "states": { "z+": [[1, 0], [0, 0]] },
//!   "properties": { "Ez": { "span": [[[1, 0], [0, 0]]] } },
//!   "atoms": { "az": "Ez" }
//! }
//! ```
//!
//! Complex numbers are `[re, im]` pairs; matrices (`{"matrix": ...}`) are
//! row-major. `eps` defaults to [`DEFAULT_EPS`]. States within
//! [`NORMALIZE_TOL`] of unit norm are rescaled on load unless the document
//! sets `"normalize": false`, in which case they must be unit within `eps`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::formula::Atom;
use crate::hilbert::{
    matrix_from_doc, matrix_to_doc, vector_from_doc, vector_to_doc, HilbertError, MatrixDoc,
    Projector, StateVector, C64, DEFAULT_EPS,
};
use crate::report::ValidationReport;

/// States whose norm is within this distance of 1 are rescaled on load.
pub const NORMALIZE_TOL: f64 = 1e-4;

const QUBIT_ZX: &str = include_str!("../models/qubit-zx.json");

/// Bundled models by name: the qubit reference model, two lines spanning a
/// plane in `C^3`, and two overlapping planes in `C^4`.
pub const BUILTIN_MODELS: [(&str, &str); 3] = [
    ("qubit-zx", QUBIT_ZX),
    ("qutrit-ab", include_str!("../models/qutrit-ab.json")),
    ("ququart-pq", include_str!("../models/ququart-pq.json")),
];

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("cannot read model: {0}")]
    Io(#[from] std::io::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("state `{state}` is the zero vector")]
    ZeroState { state: String },
    #[error("state `{state}` has norm {norm}, not 1")]
    NonUnitState { state: String, norm: f64 },
    #[error("{what} has dimension {found}, model dimension is {expected}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("property `{property}`: {source}")]
    InvalidProperty {
        property: String,
        #[source]
        source: HilbertError,
    },
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
    #[error("atom `{atom}` maps to unknown property `{property}`")]
    UnknownProperty { atom: String, property: String },
    #[error("atom map is not bijective: {0}")]
    NonBijectiveAtomMap(String),
    #[error("model is invalid: {code}: {message}")]
    Invalid { code: String, message: String },
}

impl ModelError {
    pub fn code(&self) -> &str {
        match self {
            ModelError::Io(_) => "io",
            ModelError::Schema(_) => "schema",
            ModelError::ZeroDimension => "zero-dimension",
            ModelError::ZeroState { .. } => "zero-state",
            ModelError::NonUnitState { .. } => "non-unit-state",
            ModelError::DimensionMismatch { .. } => "dimension-mismatch",
            ModelError::InvalidProperty { source, .. } => match source {
                HilbertError::NotHermitian { .. } => "not-hermitian",
                HilbertError::NotIdempotent { .. } => "not-idempotent",
                HilbertError::DimensionMismatch { .. } | HilbertError::NotSquare { .. } => {
                    "dimension-mismatch"
                }
                _ => "invalid-property",
            },
            ModelError::InvalidAtomName(_) => "invalid-atom-name",
            ModelError::UnknownProperty { .. } => "unknown-property",
            ModelError::NonBijectiveAtomMap(_) => "non-bijective-atom-map",
            ModelError::Invalid { code, .. } => code,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalize: Option<bool>,
    pub states: BTreeMap<String, Vec<[f64; 2]>>,
    pub properties: BTreeMap<String, PropertyDocument>,
    pub atoms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum PropertyDocument {
    Span(Vec<Vec<[f64; 2]>>),
    Matrix(MatrixDoc),
}

/// A validated physical model.
#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    pub dim: usize,
    pub eps: f64,
    pub states: BTreeMap<String, StateVector>,
    pub properties: BTreeMap<String, Projector>,
    /// The interpretation of atoms as property names.
    pub atoms: BTreeMap<Atom, String>,
}

impl Model {
    /// The bundled two-dimensional reference model: states `z+ z- x+ x-`,
    /// properties `Ez` (onto `z+`) and `Ex` (onto `x+`), atoms `az -> Ez`
    /// and `ax -> Ex`.
    pub fn qubit_zx() -> Model {
        load_model(QUBIT_ZX).expect("bundled qubit-zx model is valid")
    }

    /// A bundled model, looked up by name with or without `.json`.
    pub fn builtin(name: &str) -> Option<Model> {
        let name = name.strip_suffix(".json").unwrap_or(name);
        BUILTIN_MODELS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(n, text)| load_model(text).unwrap_or_else(|e| panic!("bundled model {n} is invalid: {e}")))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Model, ModelError> {
        let text = std::fs::read_to_string(path)?;
        load_model(&text)
    }

    pub fn state(&self, name: &str) -> Option<&StateVector> {
        self.states.get(name)
    }

    pub fn property(&self, name: &str) -> Option<&Projector> {
        self.properties.get(name)
    }

    /// The property interpreting `atom`.
    pub fn atom_property(&self, atom: &Atom) -> Option<&Projector> {
        self.atoms.get(atom).and_then(|p| self.properties.get(p))
    }

    pub fn atom_names(&self) -> Vec<&Atom> {
        self.atoms.keys().collect()
    }

    pub fn to_document(&self) -> ModelDocument {
        ModelDocument {
            dim: self.dim,
            eps: Some(self.eps),
            normalize: None,
            states: self
                .states
                .iter()
                .map(|(k, v)| (k.clone(), vector_to_doc(v.amplitudes())))
                .collect(),
            properties: self
                .properties
                .iter()
                .map(|(k, p)| (k.clone(), PropertyDocument::Matrix(matrix_to_doc(p.matrix()))))
                .collect(),
            atoms: self
                .atoms
                .iter()
                .map(|(a, p)| (a.to_string(), p.clone()))
                .collect(),
        }
    }
}

/// Parses and validates a JSON model document.
pub fn load_model(text: &str) -> Result<Model, ModelError> {
    let doc: ModelDocument =
        serde_json::from_str(text).map_err(|e| ModelError::Schema(e.to_string()))?;
    load_model_document(&doc)
}

pub fn load_model_document(doc: &ModelDocument) -> Result<Model, ModelError> {
    let dim = doc.dim;
    if dim == 0 {
        return Err(ModelError::ZeroDimension);
    }
    let eps = doc.eps.unwrap_or(DEFAULT_EPS);
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(ModelError::Schema(format!("eps must be a non-negative number, got {eps}")));
    }
    let normalize = doc.normalize.unwrap_or(true);

    let mut states = BTreeMap::new();
    for (name, amps) in &doc.states {
        check_dim(&format!("state `{name}`"), dim, amps.len())?;
        let v = vector_from_doc(amps);
        let norm = v.norm();
        if norm <= eps {
            return Err(ModelError::ZeroState { state: name.clone() });
        }
        let state = if normalize && (norm - 1.0).abs() <= NORMALIZE_TOL {
            StateVector::normalize(v).expect("nonzero")
        } else {
            StateVector::new(v, eps).map_err(|_| ModelError::NonUnitState {
                state: name.clone(),
                norm,
            })?
        };
        states.insert(name.clone(), state);
    }

    let mut properties = BTreeMap::new();
    for (name, prop) in &doc.properties {
        let invalid = |source| ModelError::InvalidProperty {
            property: name.clone(),
            source,
        };
        let projector = match prop {
            PropertyDocument::Span(vectors) => {
                for v in vectors {
                    check_dim(&format!("spanning vector of `{name}`"), dim, v.len())?;
                }
                let vectors: Vec<DVector<C64>> = vectors.iter().map(|v| vector_from_doc(v)).collect();
                Projector::from_span(&vectors, dim, eps).map_err(invalid)?
            }
            PropertyDocument::Matrix(rows) => {
                let m = matrix_from_doc(rows).map_err(invalid)?;
                check_dim(&format!("matrix of `{name}`"), dim, m.nrows())?;
                check_dim(&format!("matrix of `{name}`"), dim, m.ncols())?;
                Projector::from_matrix(m, eps).map_err(invalid)?
            }
        };
        properties.insert(name.clone(), projector);
    }

    let mut atoms = BTreeMap::new();
    for (atom, property) in &doc.atoms {
        let a = Atom::new(atom.clone()).map_err(|_| ModelError::InvalidAtomName(atom.clone()))?;
        if !properties.contains_key(property) {
            return Err(ModelError::UnknownProperty {
                atom: atom.clone(),
                property: property.clone(),
            });
        }
        atoms.insert(a, property.clone());
    }
    check_bijective(&atoms, &properties).map_err(ModelError::NonBijectiveAtomMap)?;

    let model = Model {
        dim,
        eps,
        states,
        properties,
        atoms,
    };
    let report = validate_model(&model);
    if let Some(first) = report.errors().next() {
        return Err(ModelError::Invalid {
            code: first.code.clone(),
            message: first.message.clone(),
        });
    }
    Ok(model)
}

fn check_dim(what: &str, expected: usize, found: usize) -> Result<(), ModelError> {
    if expected == found {
        Ok(())
    } else {
        Err(ModelError::DimensionMismatch {
            what: what.to_string(),
            expected,
            found,
        })
    }
}

fn check_bijective(
    atoms: &BTreeMap<Atom, String>,
    properties: &BTreeMap<String, Projector>,
) -> Result<(), String> {
    let mut seen: BTreeMap<&str, &Atom> = BTreeMap::new();
    for (atom, prop) in atoms {
        if let Some(other) = seen.insert(prop, atom) {
            return Err(format!("atoms `{other}` and `{atom}` both map to `{prop}`"));
        }
    }
    let unmapped: BTreeSet<&str> = properties
        .keys()
        .map(String::as_str)
        .filter(|p| !seen.contains_key(p))
        .collect();
    if let Some(p) = unmapped.first() {
        return Err(format!("property `{p}` is not the image of any atom"));
    }
    Ok(())
}

/// Re-checks every model invariant without mutating the model.
pub fn validate_model(model: &Model) -> ValidationReport {
    let mut report = ValidationReport::new();
    let eps = model.eps;
    if model.dim == 0 {
        report.error("zero-dimension", "dimension must be positive");
    }
    if eps.is_nan() || eps < 0.0 {
        report.error("invalid-tolerance", format!("eps = {eps} is not a non-negative number"));
    } else if eps == 0.0 {
        report.warning(
            "degenerate-tolerance",
            "eps = 0 makes every comparison exact; rounding error will be reported as failure",
        );
    }

    for (name, state) in &model.states {
        if state.dim() != model.dim {
            report.error(
                "dimension-mismatch",
                format!("state `{name}` has dimension {}, expected {}", state.dim(), model.dim),
            );
            continue;
        }
        let norm = state.norm();
        if norm == 0.0 {
            report.error("zero-state", format!("state `{name}` is the zero vector"));
        } else if (norm - 1.0).abs() > eps {
            report.error("non-unit-state", format!("state `{name}` has norm {norm}"));
        }
    }

    for (name, p) in &model.properties {
        if p.dim() != model.dim {
            report.error(
                "dimension-mismatch",
                format!("property `{name}` has dimension {}, expected {}", p.dim(), model.dim),
            );
            continue;
        }
        let herm = p.hermiticity_defect();
        if herm > eps {
            report.error("not-hermitian", format!("property `{name}`: max |P - P^dagger| = {herm:e}"));
        }
        let idem = p.idempotency_defect();
        if idem > eps {
            report.error("not-idempotent", format!("property `{name}`: max |P^2 - P| = {idem:e}"));
        }
        let trace = p.trace_defect();
        if trace > eps * model.dim as f64 {
            report.error(
                "rank-mismatch",
                format!("property `{name}`: trace differs from rank {} by {trace:e}", p.rank()),
            );
        }
    }

    for (atom, prop) in &model.atoms {
        if !model.properties.contains_key(prop) {
            report.error(
                "unknown-property",
                format!("atom `{atom}` maps to unknown property `{prop}`"),
            );
        }
    }
    if let Err(msg) = check_bijective(&model.atoms, &model.properties) {
        report.error("non-bijective-atom-map", msg);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_load() {
        for (name, _) in BUILTIN_MODELS {
            let m = Model::builtin(name).unwrap();
            assert!(validate_model(&m).findings().is_empty(), "{name}");
        }
        assert_eq!(Model::builtin("qutrit-ab.json").unwrap().dim, 3);
        assert_eq!(Model::builtin("ququart-pq").unwrap().dim, 4);
        assert!(Model::builtin("nope").is_none());
    }
    use nalgebra::DMatrix;

    const S: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn approx(v: &DVector<C64>, expected: &[f64]) -> bool {
        v.iter()
            .zip(expected)
            .all(|(a, b)| (a.re - b).abs() < 1e-12 && a.im.abs() < 1e-12)
    }

    #[test]
    fn bundled_qubit_zx() {
        let m = Model::qubit_zx();
        assert_eq!(m.dim, 2);
        assert_eq!(m.eps, DEFAULT_EPS);
        let states: Vec<_> = m.states.keys().map(String::as_str).collect();
        assert_eq!(states, ["x+", "x-", "z+", "z-"]);
        assert!(approx(m.states["z+"].amplitudes(), &[1.0, 0.0]));
        assert!(approx(m.states["z-"].amplitudes(), &[0.0, 1.0]));
        assert!(approx(m.states["x+"].amplitudes(), &[S, S]));
        assert!(approx(m.states["x-"].amplitudes(), &[S, -S]));
        let props: Vec<_> = m.properties.keys().map(String::as_str).collect();
        assert_eq!(props, ["Ex", "Ez"]);
        assert!(m.properties["Ez"].approx_eq(&m.states["z+"].ray(), 1e-12));
        assert!(m.properties["Ex"].approx_eq(&m.states["x+"].ray(), 1e-12));
        assert_eq!(m.atoms[&Atom::new("az").unwrap()], "Ez");
        assert_eq!(m.atoms[&Atom::new("ax").unwrap()], "Ex");
        assert!(validate_model(&m).ok());
    }

    fn doc(atoms: &str, states: &str) -> String {
        format!(
            r#"{{"dim": 2,
                "states": {{{states}}},
                "properties": {{"Ez": {{"span": [[[1,0],[0,0]]]}},
                                "Ex": {{"matrix": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]}}}},
                "atoms": {{{atoms}}}}}"#
        )
    }

    #[test]
    fn two_atoms_on_one_property() {
        let text = doc(r#""az": "Ez", "bz": "Ez""#, r#""z+": [[1,0],[0,0]]"#);
        let err = load_model(&text).unwrap_err();
        assert_eq!(err.code(), "non-bijective-atom-map");
    }

    #[test]
    fn unmapped_property_is_not_bijective() {
        let text = doc(r#""az": "Ez""#, r#""z+": [[1,0],[0,0]]"#);
        assert_eq!(load_model(&text).unwrap_err().code(), "non-bijective-atom-map");
    }

    #[test]
    fn unknown_property() {
        let text = doc(r#""az": "Ez", "ax": "Ex", "ay": "Ey""#, r#""z+": [[1,0],[0,0]]"#);
        assert_eq!(load_model(&text).unwrap_err().code(), "unknown-property");
    }

    #[test]
    fn zero_state() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""o": [[0,0],[0,0]]"#);
        assert_eq!(load_model(&text).unwrap_err().code(), "zero-state");
    }

    #[test]
    fn hand_typed_decimals_are_normalized() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""x+": [[0.7071,0],[0.7071,0]]"#);
        let m = load_model(&text).unwrap();
        assert!((m.states["x+"].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn far_from_unit_is_rejected() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""s": [[1,0],[1,0]]"#);
        assert_eq!(load_model(&text).unwrap_err().code(), "non-unit-state");
    }

    #[test]
    fn normalization_off_requires_unit_within_eps() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""x+": [[0.7071,0],[0.7071,0]]"#)
            .replacen("\"dim\": 2", "\"dim\": 2, \"normalize\": false", 1);
        assert_eq!(load_model(&text).unwrap_err().code(), "non-unit-state");
    }

    #[test]
    fn dimension_mismatch() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""s": [[1,0],[0,0],[0,0]]"#);
        assert_eq!(load_model(&text).unwrap_err().code(), "dimension-mismatch");
    }

    #[test]
    fn non_hermitian_matrix() {
        let text = doc(r#""az": "Ez", "ax": "Ex""#, r#""z+": [[1,0],[0,0]]"#)
            .replace("[[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]", "[[[0.5,0],[0.5,0]],[[0.4,0],[0.5,0]]]");
        assert_eq!(load_model(&text).unwrap_err().code(), "not-hermitian");
    }

    #[test]
    fn schema_violation() {
        assert_eq!(load_model("{\"dim\": 2}").unwrap_err().code(), "schema");
        assert_eq!(load_model("not json").unwrap_err().code(), "schema");
        let extra = doc(r#""az": "Ez", "ax": "Ex""#, "").replacen("\"dim\": 2", "\"dim\": 2, \"bogus\": 1", 1);
        assert_eq!(load_model(&extra).unwrap_err().code(), "schema");
    }

    #[test]
    fn invalid_atom_name() {
        let text = doc(r#""Az": "Ez", "ax": "Ex""#, "");
        assert_eq!(load_model(&text).unwrap_err().code(), "invalid-atom-name");
    }

    #[test]
    fn validate_flags_non_idempotent_property() {
        let mut m = Model::qubit_zx();
        let bad = DMatrix::from_row_slice(
            2,
            2,
            &[C64::new(1.0 - 1e-3, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        );
        let bad = Projector::from_matrix_unchecked(bad);
        assert!((bad.idempotency_defect() - 1e-3).abs() < 1e-5);
        m.properties.insert("Ez".into(), bad);
        let report = validate_model(&m);
        assert!(!report.ok());
        assert!(report.has_code("not-idempotent"));
    }

    #[test]
    fn zero_eps_is_a_warning() {
        let mut m = Model::qubit_zx();
        m.eps = 0.0;
        m.states.retain(|k, _| k.starts_with('z'));
        let exact = |a, b, c, d| {
            Projector::from_matrix_unchecked(DMatrix::from_row_slice(
                2,
                2,
                &[C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0), C64::new(d, 0.0)],
            ))
        };
        m.properties.insert("Ez".into(), exact(1.0, 0.0, 0.0, 0.0));
        m.properties.insert("Ex".into(), exact(0.5, 0.5, 0.5, 0.5));
        let report = validate_model(&m);
        assert!(report.ok(), "{report}");
        assert!(report.has_code("degenerate-tolerance"));
    }

    #[test]
    fn load_is_deterministic_and_round_trips() {
        let a = Model::qubit_zx();
        let b = Model::qubit_zx();
        assert_eq!(a, b);
        let again = load_model_document(&a.to_document()).unwrap();
        for (name, p) in &a.properties {
            assert!(p.approx_eq(&again.properties[name], 1e-15));
        }
    }
}
