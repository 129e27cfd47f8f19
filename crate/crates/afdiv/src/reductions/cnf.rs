//! CNF formulas over signed 1-based variable indices, plus a DIMACS reader.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("literal {0} references a variable outside 1..={1}")]
    LiteralOutOfRange(i32, usize),
    #[error("literal 0 is not allowed inside a clause")]
    ZeroLiteral,
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("malformed DIMACS input at line {0}")]
    MalformedLine(usize),
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("quantifier blocks must be one `a` line followed by one `e` line")]
    BadPrefix,
    #[error("variable {0} appears in both quantifier blocks")]
    OverlappingBlocks(u32),
    #[error("matrix variable {0} is not quantified")]
    UnquantifiedVariable(u32),
}

/// A CNF formula; clause literals are signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, FormulaError> {
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(FormulaError::EmptyClause(ci + 1));
            }
            for &lit in clause {
                if lit == 0 {
                    return Err(FormulaError::ZeroLiteral);
                }
                if lit.unsigned_abs() as usize > n_vars {
                    return Err(FormulaError::LiteralOutOfRange(lit, n_vars));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// True iff every clause has exactly three literal occurrences.
    pub fn is_three_cnf(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 3)
    }

    /// Evaluates the formula under an assignment given as a bit mask
    /// (bit `v-1` set means variable `v` is true).
    pub fn eval(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let v = lit.unsigned_abs() as u64 - 1;
                (assignment >> v & 1 == 1) == (lit > 0)
            })
        })
    }
}

/// Reads a DIMACS CNF file: `c` comments, a `p cnf <vars> <clauses>`
/// header, then whitespace-separated 0-terminated clauses.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, FormulaError> {
    let mut n_vars: Option<usize> = None;
    let mut declared_clauses = 0usize;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf") {
            if n_vars.is_some() {
                return Err(FormulaError::MalformedLine(idx + 1));
            }
            let mut parts = rest.split_ascii_whitespace();
            let nv = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(FormulaError::MalformedLine(idx + 1))?;
            let nc = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(FormulaError::MalformedLine(idx + 1))?;
            if parts.next().is_some() {
                return Err(FormulaError::MalformedLine(idx + 1));
            }
            n_vars = Some(nv);
            declared_clauses = nc;
            continue;
        }
        if n_vars.is_none() {
            return Err(FormulaError::MissingHeader);
        }
        for tok in line.split_ascii_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| FormulaError::MalformedLine(idx + 1))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let n_vars = n_vars.ok_or(FormulaError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared_clauses {
        return Err(FormulaError::MalformedLine(0));
    }
    CnfFormula::new(n_vars, clauses)
}

pub fn to_dimacs(cnf: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.n_vars(), cnf.n_clauses());
    for clause in cnf.clauses() {
        for lit in clause {
            out.push_str(&format!("{lit} "));
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let cnf = parse_dimacs("c test\np cnf 3 2\n1 -2 3 0\n-1 2 0\n").unwrap();
        assert_eq!(cnf.n_vars(), 3);
        assert_eq!(cnf.n_clauses(), 2);
        assert_eq!(cnf.clauses()[0], vec![1, -2, 3]);
    }

    #[test]
    fn eval_assignment() {
        let cnf = CnfFormula::new(2, vec![vec![1], vec![-2]]).unwrap();
        assert!(cnf.eval(0b01));
        assert!(!cnf.eval(0b11));
        assert!(!cnf.eval(0b00));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_dimacs("1 2 0\n").unwrap_err(), FormulaError::MissingHeader);
        assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![]]).is_err());
    }

    #[test]
    fn clause_count_checked() {
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
    }
}
