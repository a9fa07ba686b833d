use std::fmt::Write as _;
use std::str::FromStr;

use super::QuotientLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Structured,
}

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error("unknown export format `{0}` (expected dot or structured)")]
    UnknownFormat(String),
    #[error("malformed lattice document: {0}")]
    Document(#[from] serde_json::Error),
}

impl FromStr for ExportFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "structured" | "json" => Ok(ExportFormat::Structured),
            other => Err(ExportError::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_lattice(lattice: &QuotientLattice, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(lattice),
        ExportFormat::Structured => serde_json::to_string_pretty(lattice).expect("lattice serializes"),
    }
}

/// Reads back a structured export.
pub fn import_lattice(text: &str) -> Result<QuotientLattice, ExportError> {
    Ok(serde_json::from_str(text)?)
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram: one node per class, one edge per covering pair, nodes of
/// equal height on the same rank with the bottom lowest.
fn to_dot(lattice: &QuotientLattice) -> String {
    let t = &lattice.tables;
    let heights = t.heights();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for e in &lattice.elements {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", e.id, escape(&e.formula.to_string()));
    }
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let nodes: Vec<String> = (0..t.len())
            .filter(|&i| heights[i] == h)
            .map(|i| format!("n{i};"))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
    }
    for (a, b) in t.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::generate_quotient;
    use super::*;
    use crate::formula::Atom;
    use crate::model::Model;

    fn lattice(names: &[&str], depth: usize) -> QuotientLattice {
        let atoms: Vec<Atom> = names.iter().map(|n| Atom::new(*n).unwrap()).collect();
        generate_quotient(&Model::qubit_zx(), &atoms, depth).unwrap()
    }

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn mo2_dot() {
        let dot = export_lattice(&lattice(&["az", "ax"], 3), ExportFormat::Dot);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 6);
        assert_eq!(edges(&dot), 8);
        assert!(dot.contains("{ rank=same; n0; }"));
        assert!(dot.contains("{ rank=same; n1; n2; n3; n4; }"));
        assert!(dot.contains("n0 [label=\"((|- ax) K (|- az))\"]"));
    }

    #[test]
    fn boolean_dot_is_a_diamond() {
        let dot = export_lattice(&lattice(&["az"], 2), ExportFormat::Dot);
        assert_eq!(edges(&dot), 4);
    }

    #[test]
    fn structured_round_trip() {
        let l = lattice(&["az", "ax"], 3);
        let text = export_lattice(&l, ExportFormat::Structured);
        let back = import_lattice(&text).unwrap();
        assert_eq!(back.tables, l.tables);
        assert_eq!(back.elements, l.elements);
        let json: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["eps", "elements", "order", "neg", "meet", "join", "bottom", "top"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn unknown_format() {
        assert!(matches!(
            "svg".parse::<ExportFormat>(),
            Err(ExportError::UnknownFormat(f)) if f == "svg"
        ));
    }
}
