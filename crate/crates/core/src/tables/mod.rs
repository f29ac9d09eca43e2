//! Finite groups and IP loops as Cayley tables.
//!
//! Element `0` is always the identity. Validators never error on bad tables;
//! they report which axiom failed together with a witness tuple.

mod action;
mod generators;

pub use action::GroupAction;

use crate::error::{Error, Result};
use crate::report::{Check, Report, Witness};

/// An unvalidated square multiplication table with element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Self {
        Self { labels, table }
    }

    /// A table with numeric labels `0..n`.
    pub fn unlabeled(table: Vec<Vec<usize>>) -> Self {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self { labels, table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    fn shape_check(&self, prefix: &str) -> Check {
        let n = self.order();
        let id = format!("{prefix}-closure");
        if self.labels.len() != n {
            return Check::fail(
                id,
                "",
                Witness::Note { detail: format!("{} labels for {n} rows", self.labels.len()) },
            );
        }
        if n == 0 {
            return Check::fail(id, "", Witness::Note { detail: "empty table".into() });
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return Check::fail(id, "", Witness::Note { detail: format!("row {i} has {} entries", row.len()) });
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Check::fail(
                    id,
                    "",
                    Witness::Elements { elements: vec![i, j], detail: format!("product {} out of range", row[j]) },
                );
            }
        }
        Check::pass(id, "")
    }

    fn identity_check(&self, prefix: &str) -> Check {
        let t = &self.table;
        let id = format!("{prefix}-identity");
        match (0..self.order()).find(|&x| t[0][x] != x || t[x][0] != x) {
            None => Check::pass(id, ""),
            Some(x) => Check::fail(
                id,
                "",
                Witness::Elements { elements: vec![0, x], detail: "element 0 is not a two-sided identity".into() },
            ),
        }
    }

    fn associativity_check(&self, id: &str) -> Check {
        let t = &self.table;
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = t[a][b];
                for c in 0..n {
                    if t[ab][c] != t[a][t[b][c]] {
                        return Check::fail(
                            id,
                            "",
                            Witness::Elements {
                                elements: vec![a, b, c],
                                detail: format!("(ab)c = {} but a(bc) = {}", t[ab][c], t[a][t[b][c]]),
                            },
                        );
                    }
                }
            }
        }
        Check::pass(id, "")
    }

    /// Left and right inverses of every element, if the table is a loop.
    fn one_sided_inverses(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let n = self.order();
        let left = (0..n).map(|x| (0..n).find(|&y| self.table[y][x] == 0)).collect();
        let right = (0..n).map(|x| (0..n).find(|&y| self.table[x][y] == 0)).collect();
        (left, right)
    }
}

/// Checks closure, identity, inverses and associativity exhaustively.
pub fn validate_group(t: &CayleyTable) -> Report {
    let mut report = Report::new("group table");
    let shape = t.shape_check("GRP");
    let shaped = shape.passed();
    report.push(shape);
    if !shaped {
        return report;
    }
    report.push(t.identity_check("GRP"));
    let (left, right) = t.one_sided_inverses();
    let bad = (0..t.order()).find(|&x| left[x].is_none() || left[x] != right[x]);
    report.push(match bad {
        None => Check::pass("GRP-inverse", ""),
        Some(x) => Check::fail(
            "GRP-inverse",
            "",
            Witness::Elements { elements: vec![x], detail: "no two-sided inverse".into() },
        ),
    });
    report.push(t.associativity_check("GRP-assoc"));
    report
}

/// Checks the loop axioms and the inverse property; Moufang and associativity are informational.
pub fn validate_ip_loop(t: &CayleyTable) -> Report {
    let mut report = Report::new("loop table");
    let shape = t.shape_check("LOOP");
    let shaped = shape.passed();
    report.push(shape);
    if !shaped {
        return report;
    }
    let n = t.order();
    let tb = &t.table;

    let mut latin = Check::pass("LOOP-quasigroup", "");
    'outer: for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            if std::mem::replace(&mut row_seen[tb[i][j]], true) {
                latin = Check::fail(
                    "LOOP-quasigroup",
                    "",
                    Witness::Elements { elements: vec![i], detail: "row is not a permutation".into() },
                );
                break 'outer;
            }
            if std::mem::replace(&mut col_seen[tb[j][i]], true) {
                latin = Check::fail(
                    "LOOP-quasigroup",
                    "",
                    Witness::Elements { elements: vec![i], detail: "column is not a permutation".into() },
                );
                break 'outer;
            }
        }
    }
    let is_latin = latin.passed();
    report.push(latin);
    let identity = t.identity_check("LOOP");
    let has_identity = identity.passed();
    report.push(identity);
    if !(is_latin && has_identity) {
        return report;
    }

    let (left, right) = t.one_sided_inverses();
    let left: Vec<usize> = left.into_iter().map(|x| x.expect("latin square with identity")).collect();
    let right: Vec<usize> = right.into_iter().map(|x| x.expect("latin square with identity")).collect();
    report.push(match (0..n).find(|&x| left[x] != right[x]) {
        None => Check::pass("LOOP-inverse", ""),
        Some(x) => Check::fail(
            "LOOP-inverse",
            "",
            Witness::Elements { elements: vec![x], detail: "left and right inverses differ".into() },
        ),
    });

    let mut ip_left = Check::pass("LOOP-IP-left", "");
    let mut ip_right = Check::pass("LOOP-IP-right", "");
    'ip: for x in 0..n {
        for y in 0..n {
            if ip_left.passed() && tb[left[x]][tb[x][y]] != y {
                ip_left = Check::fail(
                    "LOOP-IP-left",
                    "",
                    Witness::Elements { elements: vec![x, y], detail: "x⁻¹(xy) ≠ y".into() },
                );
            }
            if ip_right.passed() && tb[tb[y][x]][right[x]] != y {
                ip_right = Check::fail(
                    "LOOP-IP-right",
                    "",
                    Witness::Elements { elements: vec![x, y], detail: "(yx)x⁻¹ ≠ y".into() },
                );
            }
            if !ip_left.passed() && !ip_right.passed() {
                break 'ip;
            }
        }
    }
    report.push(ip_left);
    report.push(ip_right);

    let mut moufang = Check::pass("LOOP-moufang", "");
    'm: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if tb[z][tb[x][tb[z][y]]] != tb[tb[tb[z][x]][z]][y] {
                    moufang = Check::fail(
                        "LOOP-moufang",
                        "",
                        Witness::Elements { elements: vec![x, y, z], detail: "z(x(zy)) ≠ ((zx)z)y".into() },
                    );
                    break 'm;
                }
            }
        }
    }
    report.push(moufang.informational());
    report.push(t.associativity_check("LOOP-assoc").informational());
    report
}

/// A validated finite group. Element `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: CayleyTable,
    inverse: Vec<usize>,
}

impl TryFrom<CayleyTable> for GroupTable {
    type Error = Error;

    fn try_from(table: CayleyTable) -> Result<Self> {
        let report = validate_group(&table);
        if let Some(bad) = report.required_failures().next() {
            return Err(Error::InvalidTable(format!("{} fails: {:?}", bad.id, bad.witness)));
        }
        let n = table.order();
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table.table[x][y] == 0).expect("validated group"))
            .collect();
        Ok(Self { table, inverse })
    }
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `p q p⁻¹` without bounds reporting.
    pub fn conj(&self, p: usize, q: usize) -> usize {
        self.mul(self.mul(p, q), self.inv(p))
    }

    /// `p q p⁻¹`, rejecting out-of-range indices.
    pub fn conjugate(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.order();
        for x in [p, q] {
            if x >= n {
                return Err(Error::IndexError { what: "group element", index: x, size: n });
            }
        }
        Ok(self.conj(p, q))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.table.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn cayley(&self) -> &CayleyTable {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

/// A validated IP loop (every group is one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopTable {
    table: CayleyTable,
    inverse: Vec<usize>,
}

impl TryFrom<CayleyTable> for LoopTable {
    type Error = Error;

    fn try_from(table: CayleyTable) -> Result<Self> {
        let report = validate_ip_loop(&table);
        if let Some(bad) = report.required_failures().next() {
            return Err(Error::InvalidLoop(format!("{} fails: {:?}", bad.id, bad.witness)));
        }
        let n = table.order();
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table.table[x][y] == 0).expect("validated loop"))
            .collect();
        Ok(Self { table, inverse })
    }
}

impl From<&GroupTable> for LoopTable {
    fn from(g: &GroupTable) -> Self {
        Self { table: g.table.clone(), inverse: g.inverse.clone() }
    }
}

impl LoopTable {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.table.labels[a]
    }

    pub fn cayley(&self) -> &CayleyTable {
        &self.table
    }

    /// The loop viewed as a group, if it is associative.
    pub fn as_group(&self) -> Option<GroupTable> {
        GroupTable::try_from(self.table.clone()).ok()
    }
}
