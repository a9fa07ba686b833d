//! Finite lattices given by tables, and the laws checked on them.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Order relation and operation tables over elements `0..len`.
///
/// `order[i][j]` means `i <= j`. `neg`, `meet` and `join` hold element
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeTables {
    pub order: Vec<Vec<bool>>,
    pub neg: Vec<usize>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("tables have inconsistent sizes")]
    Shape,
    #[error("elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("no {0} element")]
    NoBound(&'static str),
}

impl LatticeTables {
    pub fn len(&self) -> usize {
        self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neg.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    /// Derives meet, join and bounds from an order relation, by brute force
    /// search for greatest lower and least upper bounds.
    pub fn from_order(order: Vec<Vec<bool>>, neg: Vec<usize>) -> Result<Self, TableError> {
        let n = order.len();
        if neg.len() != n || order.iter().any(|r| r.len() != n) || neg.iter().any(|&x| x >= n) {
            return Err(TableError::Shape);
        }
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let candidates: Vec<usize> = (0..n)
                .filter(|&c| {
                    if lower {
                        order[c][a] && order[c][b]
                    } else {
                        order[a][c] && order[b][c]
                    }
                })
                .collect();
            candidates.iter().copied().find(|&c| {
                candidates
                    .iter()
                    .all(|&d| if lower { order[d][c] } else { order[c][d] })
            })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, true).ok_or(TableError::NotALattice(a, b, "meet"))?;
                join[a][b] = bound(a, b, false).ok_or(TableError::NotALattice(a, b, "join"))?;
            }
        }
        let bottom = (0..n)
            .find(|&x| (0..n).all(|y| order[x][y]))
            .ok_or(TableError::NoBound("bottom"))?;
        let top = (0..n)
            .find(|&x| (0..n).all(|y| order[y][x]))
            .ok_or(TableError::NoBound("top"))?;
        Ok(LatticeTables {
            order,
            neg,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.order[a][b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let covers = self.covers();
        let n = self.len();
        let mut height = vec![0usize; n];
        // at most n relaxation rounds on a finite poset
        for _ in 0..n {
            let mut changed = false;
            for &(a, b) in &covers {
                if height[b] < height[a] + 1 {
                    height[b] = height[a] + 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        height
    }
}

/// Result of checking one law; a failing law carries the offending elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl LawReport {
    pub fn holds(law: &str) -> Self {
        LawReport {
            law: law.to_string(),
            holds: true,
            counterexample: None,
            detail: None,
        }
    }

    pub fn fails(law: &str, counterexample: Vec<usize>, detail: impl Into<String>) -> Self {
        LawReport {
            law: law.to_string(),
            holds: false,
            counterexample: Some(counterexample),
            detail: Some(detail.into()),
        }
    }

    fn from_search(law: &str, found: Option<(Vec<usize>, String)>) -> Self {
        match found {
            None => LawReport::holds(law),
            Some((ce, detail)) => LawReport::fails(law, ce, detail),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            write!(f, "{}: holds", self.law)
        } else {
            write!(f, "{}: FAILS", self.law)?;
            if let Some(ce) = &self.counterexample {
                write!(f, " at {ce:?}")?;
            }
            if let Some(d) = &self.detail {
                write!(f, " ({d})")?;
            }
            Ok(())
        }
    }
}

fn search1(n: usize, mut bad: impl FnMut(usize) -> Option<String>) -> Option<(Vec<usize>, String)> {
    (0..n).find_map(|a| bad(a).map(|d| (vec![a], d)))
}

fn search2(n: usize, mut bad: impl FnMut(usize, usize) -> Option<String>) -> Option<(Vec<usize>, String)> {
    for a in 0..n {
        for b in 0..n {
            if let Some(d) = bad(a, b) {
                return Some((vec![a, b], d));
            }
        }
    }
    None
}

fn search3(
    n: usize,
    mut bad: impl FnMut(usize, usize, usize) -> Option<String>,
) -> Option<(Vec<usize>, String)> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if let Some(d) = bad(a, b, c) {
                    return Some((vec![a, b, c], d));
                }
            }
        }
    }
    None
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(msg())
    }
}

/// Checks the ortholattice axioms on the tables, one report per law.
pub fn verify_ortholattice(t: &LatticeTables) -> Vec<LawReport> {
    let n = t.len();
    let (le, neg, meet, join) = (&t.order, &t.neg, &t.meet, &t.join);
    let mut reports = Vec::new();

    reports.push(LawReport::from_search(
        "reflexivity",
        search1(n, |a| check(le[a][a], || format!("not {a} <= {a}"))),
    ));
    reports.push(LawReport::from_search(
        "antisymmetry",
        search2(n, |a, b| {
            check(!(a != b && le[a][b] && le[b][a]), || format!("{a} <= {b} <= {a}"))
        }),
    ));
    reports.push(LawReport::from_search(
        "transitivity",
        search3(n, |a, b, c| {
            check(!(le[a][b] && le[b][c]) || le[a][c], || format!("{a} <= {b} <= {c} but not {a} <= {c}"))
        }),
    ));
    reports.push(LawReport::from_search(
        "bounds",
        search1(n, |a| {
            check(le[t.bottom][a] && le[a][t.top], || format!("{a} is not between bottom and top"))
        }),
    ));
    reports.push(LawReport::from_search(
        "order-agrees-with-meet-and-join",
        search2(n, |a, b| {
            check(
                le[a][b] == (meet[a][b] == a) && le[a][b] == (join[a][b] == b),
                || format!("a <= b is {}, meet = {}, join = {}", le[a][b], meet[a][b], join[a][b]),
            )
        }),
    ));
    reports.push(LawReport::from_search(
        "commutativity",
        search2(n, |a, b| {
            check(meet[a][b] == meet[b][a] && join[a][b] == join[b][a], || "operands do not commute".into())
        }),
    ));
    reports.push(LawReport::from_search(
        "associativity",
        search3(n, |a, b, c| {
            check(
                meet[meet[a][b]][c] == meet[a][meet[b][c]] && join[join[a][b]][c] == join[a][join[b][c]],
                || "regrouping changes the result".into(),
            )
        }),
    ));
    reports.push(LawReport::from_search(
        "absorption",
        search2(n, |a, b| {
            check(meet[a][join[a][b]] == a && join[a][meet[a][b]] == a, || {
                format!("a K (a AQ b) = {}, a AQ (a K b) = {}", meet[a][join[a][b]], join[a][meet[a][b]])
            })
        }),
    ));
    reports.push(LawReport::from_search(
        "involution",
        search1(n, |a| check(neg[neg[a]] == a, || format!("N N {a} = {}", neg[neg[a]]))),
    ));
    reports.push(LawReport::from_search(
        "order-reversal",
        search2(n, |a, b| {
            check(!le[a][b] || le[neg[b]][neg[a]], || format!("{a} <= {b} but not N {b} <= N {a}"))
        }),
    ));
    reports.push(LawReport::from_search(
        "de-morgan",
        search2(n, |a, b| {
            check(
                neg[meet[a][b]] == join[neg[a]][neg[b]] && neg[join[a][b]] == meet[neg[a]][neg[b]],
                || "negation does not exchange meet and join".into(),
            )
        }),
    ));
    reports.push(LawReport::from_search(
        "complement",
        search1(n, |a| {
            check(meet[a][neg[a]] == t.bottom && join[a][neg[a]] == t.top, || {
                format!("a K N a = {}, a AQ N a = {}", meet[a][neg[a]], join[a][neg[a]])
            })
        }),
    ));
    reports
}

/// `a <= b` implies `b = a AQ (N a K b)`.
pub fn verify_orthomodular(t: &LatticeTables) -> LawReport {
    let (le, neg, meet, join) = (&t.order, &t.neg, &t.meet, &t.join);
    LawReport::from_search(
        "orthomodularity",
        search2(t.len(), |a, b| {
            let rebuilt = join[a][meet[neg[a]][b]];
            check(!le[a][b] || rebuilt == b, || format!("{a} <= {b} but a AQ (N a K b) = {rebuilt}"))
        }),
    )
}

/// First triple `(a, b, c)` in index order with
/// `a K (b AQ c) != (a K b) AQ (a K c)`.
pub fn find_distributivity_violation(t: &LatticeTables) -> Option<(usize, usize, usize)> {
    let (meet, join) = (&t.meet, &t.join);
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}
