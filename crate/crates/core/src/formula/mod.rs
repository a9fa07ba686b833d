//! Formulas of the pragmatic language: radical (truth-bearing) formulas and
//! assertive (justification-bearing) formulas, their concrete syntax, and the
//! quantum fragment check.
//!
//! Surface syntax is plain ASCII. Radical connectives are `~ & | -> <->`,
//! the assertion sign is `|-`, and the pragmatic connectives are the
//! upper-case keywords `N K A C E AQ`.

mod display;
mod parser;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use parser::{parse_assertive, parse_radical, ParseError};

/// Name of a propositional letter, matching `[a-z][a-z0-9_]*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Atom(String);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid atom name `{0}`: expected [a-z][a-z0-9_]*")]
pub struct InvalidAtom(pub String);

impl Atom {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidAtom> {
        let name = name.into();
        if Self::is_valid(&name) {
            Ok(Atom(name))
        } else {
            Err(InvalidAtom(name))
        }
    }

    pub fn is_valid(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_lowercase() => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Atom {
    type Error = InvalidAtom;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Atom::new(value)
    }
}

impl From<Atom> for String {
    fn from(atom: Atom) -> Self {
        atom.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A radical formula, built from atoms with the classical connectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RadicalFormula {
    Atom(Atom),
    Not(Box<RadicalFormula>),
    And(Box<RadicalFormula>, Box<RadicalFormula>),
    Or(Box<RadicalFormula>, Box<RadicalFormula>),
    Implies(Box<RadicalFormula>, Box<RadicalFormula>),
    Iff(Box<RadicalFormula>, Box<RadicalFormula>),
}

impl RadicalFormula {
    /// Builds an atomic radical.
    ///
    /// Panics if `name` is not a valid atom name; use [`Atom::new`] for
    /// untrusted input.
    pub fn atom(name: &str) -> Self {
        RadicalFormula::Atom(Atom::new(name).expect("invalid atom name"))
    }

    // named after the connective, alongside `and`, `or`, ...
    #[allow(clippy::should_implement_trait)]
    pub fn not(r: RadicalFormula) -> Self {
        RadicalFormula::Not(Box::new(r))
    }

    pub fn and(l: RadicalFormula, r: RadicalFormula) -> Self {
        RadicalFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: RadicalFormula, r: RadicalFormula) -> Self {
        RadicalFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: RadicalFormula, r: RadicalFormula) -> Self {
        RadicalFormula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: RadicalFormula, r: RadicalFormula) -> Self {
        RadicalFormula::Iff(Box::new(l), Box::new(r))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, RadicalFormula::Atom(_))
    }

    /// Atoms in order of first occurrence, without duplicates.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            RadicalFormula::Atom(a) => {
                if !out.contains(&a) {
                    out.push(a);
                }
            }
            RadicalFormula::Not(r) => r.collect_atoms(out),
            RadicalFormula::And(l, r)
            | RadicalFormula::Or(l, r)
            | RadicalFormula::Implies(l, r)
            | RadicalFormula::Iff(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            RadicalFormula::Atom(_) => 0,
            RadicalFormula::Not(r) => 1 + r.depth(),
            RadicalFormula::And(l, r)
            | RadicalFormula::Or(l, r)
            | RadicalFormula::Implies(l, r)
            | RadicalFormula::Iff(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

/// Pragmatic connectives of assertive formulas.
///
/// `QuantumOr` is the derived connective `AQ`, defined by
/// `d1 AQ d2 = N((N d1) K (N d2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    /// `N`
    Not,
    /// `K`
    And,
    /// `A`
    Or,
    /// `C`
    Implies,
    /// `E`
    Iff,
    /// `AQ`
    QuantumOr,
}

impl Connective {
    pub fn keyword(self) -> &'static str {
        match self {
            Connective::Not => "N",
            Connective::And => "K",
            Connective::Or => "A",
            Connective::Implies => "C",
            Connective::Iff => "E",
            Connective::QuantumOr => "AQ",
        }
    }

    /// Connectives admitted above the leaves of a quantum formula.
    pub fn is_quantum(self) -> bool {
        matches!(
            self,
            Connective::Not | Connective::And | Connective::QuantumOr
        )
    }
}

/// An assertive formula. Every leaf is an elementary assertion `|- r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AssertiveFormula {
    Assert(RadicalFormula),
    /// `N`
    Not(Box<AssertiveFormula>),
    /// `K`
    And(Box<AssertiveFormula>, Box<AssertiveFormula>),
    /// `A`
    Or(Box<AssertiveFormula>, Box<AssertiveFormula>),
    /// `C`
    Implies(Box<AssertiveFormula>, Box<AssertiveFormula>),
    /// `E`
    Iff(Box<AssertiveFormula>, Box<AssertiveFormula>),
    /// `AQ`
    QuantumOr(Box<AssertiveFormula>, Box<AssertiveFormula>),
}

impl AssertiveFormula {
    pub fn assert(r: RadicalFormula) -> Self {
        AssertiveFormula::Assert(r)
    }

    /// `|- name` for an atomic radical. Panics on an invalid atom name.
    pub fn assert_atom(name: &str) -> Self {
        AssertiveFormula::Assert(RadicalFormula::atom(name))
    }

    // named after the connective, alongside `and`, `or`, ...
    #[allow(clippy::should_implement_trait)]
    pub fn not(d: AssertiveFormula) -> Self {
        AssertiveFormula::Not(Box::new(d))
    }

    pub fn and(l: AssertiveFormula, r: AssertiveFormula) -> Self {
        AssertiveFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: AssertiveFormula, r: AssertiveFormula) -> Self {
        AssertiveFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: AssertiveFormula, r: AssertiveFormula) -> Self {
        AssertiveFormula::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: AssertiveFormula, r: AssertiveFormula) -> Self {
        AssertiveFormula::Iff(Box::new(l), Box::new(r))
    }

    pub fn quantum_or(l: AssertiveFormula, r: AssertiveFormula) -> Self {
        AssertiveFormula::QuantumOr(Box::new(l), Box::new(r))
    }

    /// Builds a binary node for `conn`. Panics if `conn` is `Not`.
    pub fn binary(conn: Connective, l: AssertiveFormula, r: AssertiveFormula) -> Self {
        let (l, r) = (Box::new(l), Box::new(r));
        match conn {
            Connective::Not => panic!("N is unary"),
            Connective::And => AssertiveFormula::And(l, r),
            Connective::Or => AssertiveFormula::Or(l, r),
            Connective::Implies => AssertiveFormula::Implies(l, r),
            Connective::Iff => AssertiveFormula::Iff(l, r),
            Connective::QuantumOr => AssertiveFormula::QuantumOr(l, r),
        }
    }

    /// Top-level connective, or `None` for an elementary assertion.
    pub fn connective(&self) -> Option<Connective> {
        Some(match self {
            AssertiveFormula::Assert(_) => return None,
            AssertiveFormula::Not(_) => Connective::Not,
            AssertiveFormula::And(..) => Connective::And,
            AssertiveFormula::Or(..) => Connective::Or,
            AssertiveFormula::Implies(..) => Connective::Implies,
            AssertiveFormula::Iff(..) => Connective::Iff,
            AssertiveFormula::QuantumOr(..) => Connective::QuantumOr,
        })
    }

    pub fn children(&self) -> Vec<&AssertiveFormula> {
        match self {
            AssertiveFormula::Assert(_) => vec![],
            AssertiveFormula::Not(d) => vec![d],
            AssertiveFormula::And(l, r)
            | AssertiveFormula::Or(l, r)
            | AssertiveFormula::Implies(l, r)
            | AssertiveFormula::Iff(l, r)
            | AssertiveFormula::QuantumOr(l, r) => vec![l, r],
        }
    }

    /// Nesting depth of pragmatic connectives; elementary assertions have
    /// depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .into_iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    /// Rewrites every `AQ` node to `N((N l) K (N r))`, recursively.
    pub fn desugar(&self) -> AssertiveFormula {
        use AssertiveFormula as F;
        match self {
            F::Assert(r) => F::Assert(r.clone()),
            F::Not(d) => F::not(d.desugar()),
            F::And(l, r) => F::and(l.desugar(), r.desugar()),
            F::Or(l, r) => F::or(l.desugar(), r.desugar()),
            F::Implies(l, r) => F::implies(l.desugar(), r.desugar()),
            F::Iff(l, r) => F::iff(l.desugar(), r.desugar()),
            F::QuantumOr(l, r) => F::not(F::and(F::not(l.desugar()), F::not(r.desugar()))),
        }
    }

    pub fn contains_quantum_or(&self) -> bool {
        matches!(self, AssertiveFormula::QuantumOr(..))
            || self.children().into_iter().any(|c| c.contains_quantum_or())
    }

    /// Checks the quantum fragment restrictions: atomic radicals only, and
    /// no connectives other than `|-`, `N`, `K` and the derived `AQ`.
    pub fn quantum_fragment_check(&self) -> FragmentReport {
        let mut violations = Vec::new();
        let mut path = Vec::new();
        self.collect_violations(&mut path, &mut violations);
        FragmentReport {
            is_quantum: violations.is_empty(),
            violations,
        }
    }

    fn collect_violations(&self, path: &mut Vec<usize>, out: &mut Vec<Violation>) {
        match self {
            AssertiveFormula::Assert(r) => {
                if !r.is_atomic() {
                    out.push(Violation {
                        path: path.clone(),
                        reason: ViolationReason::MolecularRadical,
                    });
                }
            }
            _ => {
                let conn = self.connective().expect("non-leaf");
                if !conn.is_quantum() {
                    out.push(Violation {
                        path: path.clone(),
                        reason: ViolationReason::ForbiddenConnective(conn),
                    });
                }
                for (i, child) in self.children().into_iter().enumerate() {
                    path.push(i);
                    child.collect_violations(path, out);
                    path.pop();
                }
            }
        }
    }

    /// Atoms of all elementary assertions, in order of first occurrence.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out: Vec<&Atom> = Vec::new();
        self.visit_leaves(&mut |r| {
            for a in r.atoms() {
                if !out.contains(&a) {
                    out.push(a);
                }
            }
        });
        out
    }

    fn visit_leaves<'a>(&'a self, f: &mut impl FnMut(&'a RadicalFormula)) {
        match self {
            AssertiveFormula::Assert(r) => f(r),
            _ => {
                for c in self.children() {
                    c.visit_leaves(f);
                }
            }
        }
    }
}

/// Either stratum, for code that prints formulas generically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Radical(RadicalFormula),
    Assertive(AssertiveFormula),
}

impl From<RadicalFormula> for Formula {
    fn from(r: RadicalFormula) -> Self {
        Formula::Radical(r)
    }
}

impl From<AssertiveFormula> for Formula {
    fn from(a: AssertiveFormula) -> Self {
        Formula::Assertive(a)
    }
}

/// Canonical fully-parenthesized text of a formula.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationReason {
    /// An assertion wraps a non-atomic radical.
    MolecularRadical,
    /// A pragmatic connective outside `N`, `K`, `AQ`.
    ForbiddenConnective(Connective),
}

impl ViolationReason {
    pub fn code(&self) -> &'static str {
        match self {
            ViolationReason::MolecularRadical => "molecular-radical",
            ViolationReason::ForbiddenConnective(_) => "forbidden-connective",
        }
    }
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationReason::MolecularRadical => f.write_str("molecular-radical"),
            ViolationReason::ForbiddenConnective(c) => {
                write!(f, "forbidden-connective ({})", c.keyword())
            }
        }
    }
}

/// A fragment violation. `path` lists child indices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<usize>,
    pub reason: ViolationReason,
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Violation", 3)?;
        st.serialize_field("path", &self.path)?;
        st.serialize_field("reason", self.reason.code())?;
        let conn = match self.reason {
            ViolationReason::ForbiddenConnective(c) => Some(c.keyword()),
            ViolationReason::MolecularRadical => None,
        };
        st.serialize_field("connective", &conn)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FragmentReport {
    pub is_quantum: bool,
    pub violations: Vec<Violation>,
}

pub fn quantum_fragment_check(f: &AssertiveFormula) -> FragmentReport {
    f.quantum_fragment_check()
}

pub fn desugar(f: &AssertiveFormula) -> AssertiveFormula {
    f.desugar()
}
