use std::fmt;

use exactla::Matrix;

/// One violated axiom together with the offending basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
}

/// Ordered list of violations; empty means every check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, indices: Vec<usize>) {
        self.violations.push(Violation {
            axiom: axiom.into(),
            indices,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    /// Records every entry (i, j) where `lhs` and `rhs` differ.
    pub fn check_eq(&mut self, axiom: &str, lhs: &Matrix, rhs: &Matrix) -> bool {
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            self.push(
                format!("{axiom}:shape"),
                vec![lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()],
            );
            return false;
        }
        if lhs == rhs {
            return true;
        }
        for i in 0..lhs.rows() {
            for j in 0..lhs.cols() {
                if lhs.get(i, j) != rhs.get(i, j) {
                    self.push(axiom, vec![i, j]);
                }
            }
        }
        false
    }

    /// Names of violated axioms, deduplicated, in first-seen order.
    pub fn axioms(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom) {
                out.push(v.axiom.clone());
            }
        }
        out
    }

    pub fn mentions(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
            writeln!(f, "{} ({})", v.axiom, idx.join(","))?;
        }
        Ok(())
    }
}
