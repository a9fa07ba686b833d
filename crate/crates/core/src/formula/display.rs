use std::fmt;

use super::{AssertiveFormula, Formula, RadicalFormula};

impl fmt::Display for RadicalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalFormula::Atom(a) => write!(f, "{a}"),
            RadicalFormula::Not(r) => write!(f, "(~{r})"),
            RadicalFormula::And(l, r) => write!(f, "({l} & {r})"),
            RadicalFormula::Or(l, r) => write!(f, "({l} | {r})"),
            RadicalFormula::Implies(l, r) => write!(f, "({l} -> {r})"),
            RadicalFormula::Iff(l, r) => write!(f, "({l} <-> {r})"),
        }
    }
}

impl fmt::Display for AssertiveFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssertiveFormula::Assert(r) => write!(f, "(|- {r})"),
            AssertiveFormula::Not(d) => write!(f, "N({d})"),
            AssertiveFormula::And(l, r)
            | AssertiveFormula::Or(l, r)
            | AssertiveFormula::Implies(l, r)
            | AssertiveFormula::Iff(l, r)
            | AssertiveFormula::QuantumOr(l, r) => {
                let kw = self.connective().expect("binary node").keyword();
                write!(f, "({l} {kw} {r})")
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Radical(r) => r.fmt(f),
            Formula::Assertive(a) => a.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{print_formula, AssertiveFormula as F, RadicalFormula as R};

    #[test]
    fn elementary() {
        assert_eq!(print_formula(&F::assert_atom("p").into()), "(|- p)");
    }

    #[test]
    fn negation() {
        assert_eq!(F::not(F::assert_atom("p")).to_string(), "N((|- p))");
    }

    #[test]
    fn quantum_or() {
        let f = F::quantum_or(F::assert_atom("p"), F::assert_atom("q"));
        assert_eq!(f.to_string(), "((|- p) AQ (|- q))");
    }

    #[test]
    fn radicals() {
        let r = R::iff(
            R::not(R::atom("p")),
            R::implies(R::atom("q"), R::or(R::atom("r"), R::atom("s"))),
        );
        assert_eq!(r.to_string(), "((~p) <-> (q -> (r | s)))");
        assert_eq!(print_formula(&R::atom("p").into()), "p");
        assert_eq!(
            F::assert(R::and(R::atom("p"), R::atom("q"))).to_string(),
            "(|- (p & q))"
        );
    }
}
