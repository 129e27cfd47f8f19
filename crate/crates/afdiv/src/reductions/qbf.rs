//! Two-level quantified Boolean formulas `forall Y exists Z . matrix`.

use super::cnf::{parse_dimacs, CnfFormula, FormulaError};

/// A 2-QBF with a universal block `Y`, an existential block `Z`, and a CNF
/// matrix over `Y ∪ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qbf2Formula {
    forall_vars: Vec<u32>,
    exists_vars: Vec<u32>,
    matrix: CnfFormula,
}

impl Qbf2Formula {
    pub fn new(
        forall_vars: Vec<u32>,
        exists_vars: Vec<u32>,
        matrix: CnfFormula,
    ) -> Result<Self, FormulaError> {
        for y in &forall_vars {
            if exists_vars.contains(y) {
                return Err(FormulaError::OverlappingBlocks(*y));
            }
        }
        for clause in matrix.clauses() {
            for &lit in clause {
                let v = lit.unsigned_abs();
                if !forall_vars.contains(&v) && !exists_vars.contains(&v) {
                    return Err(FormulaError::UnquantifiedVariable(v));
                }
            }
        }
        Ok(Qbf2Formula {
            forall_vars,
            exists_vars,
            matrix,
        })
    }

    pub fn forall_vars(&self) -> &[u32] {
        &self.forall_vars
    }

    pub fn exists_vars(&self) -> &[u32] {
        &self.exists_vars
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    /// All quantified variables, universal block first.
    pub fn all_vars(&self) -> Vec<u32> {
        let mut vars = self.forall_vars.clone();
        vars.extend(&self.exists_vars);
        vars
    }
}

/// Reads a QDIMACS file with a two-level prefix: an optional `a` line
/// followed by an optional `e` line. Deeper alternations are rejected.
pub fn parse_qdimacs(text: &str) -> Result<Qbf2Formula, FormulaError> {
    let mut forall_vars: Vec<u32> = Vec::new();
    let mut exists_vars: Vec<u32> = Vec::new();
    let mut matrix_lines = String::new();
    let mut seen_a = false;
    let mut seen_e = false;
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.starts_with("a ") || trimmed == "a" {
            if seen_a || seen_e {
                return Err(FormulaError::BadPrefix);
            }
            seen_a = true;
            parse_block(trimmed, &mut forall_vars)?;
        } else if trimmed.starts_with("e ") || trimmed == "e" {
            if seen_e {
                return Err(FormulaError::BadPrefix);
            }
            seen_e = true;
            parse_block(trimmed, &mut exists_vars)?;
        } else {
            matrix_lines.push_str(line);
            matrix_lines.push('\n');
        }
    }
    let matrix = parse_dimacs(&matrix_lines)?;
    Qbf2Formula::new(forall_vars, exists_vars, matrix)
}

fn parse_block(line: &str, vars: &mut Vec<u32>) -> Result<(), FormulaError> {
    let mut terminated = false;
    for tok in line[1..].split_ascii_whitespace() {
        let v: i64 = tok.parse().map_err(|_| FormulaError::BadPrefix)?;
        if v == 0 {
            terminated = true;
            break;
        }
        if v < 0 {
            return Err(FormulaError::BadPrefix);
        }
        vars.push(v as u32);
    }
    if !terminated {
        return Err(FormulaError::BadPrefix);
    }
    Ok(())
}

pub fn to_qdimacs(qbf: &Qbf2Formula) -> String {
    let mut out = format!(
        "p cnf {} {}\n",
        qbf.matrix().n_vars(),
        qbf.matrix().n_clauses()
    );
    if !qbf.forall_vars().is_empty() {
        out.push('a');
        for v in qbf.forall_vars() {
            out.push_str(&format!(" {v}"));
        }
        out.push_str(" 0\n");
    }
    if !qbf.exists_vars().is_empty() {
        out.push('e');
        for v in qbf.exists_vars() {
            out.push_str(&format!(" {v}"));
        }
        out.push_str(" 0\n");
    }
    for clause in qbf.matrix().clauses() {
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
    fn parse_two_level() {
        let q = parse_qdimacs("p cnf 2 1\na 1 0\ne 2 0\n1 2 0\n").unwrap();
        assert_eq!(q.forall_vars(), &[1]);
        assert_eq!(q.exists_vars(), &[2]);
        assert_eq!(q.matrix().n_clauses(), 1);
    }

    #[test]
    fn header_position_is_flexible() {
        // The QDIMACS prefix sits between the header and the clauses.
        let q = parse_qdimacs("c c\np cnf 1 1\ne 1 0\n1 0\n").unwrap();
        assert!(q.forall_vars().is_empty());
        assert_eq!(q.exists_vars(), &[1]);
    }

    #[test]
    fn deeper_prefixes_rejected() {
        assert_eq!(
            parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 0\n").unwrap_err(),
            FormulaError::BadPrefix
        );
    }

    #[test]
    fn unquantified_matrix_var_rejected() {
        assert_eq!(
            parse_qdimacs("p cnf 2 1\na 1 0\n1 2 0\n").unwrap_err(),
            FormulaError::UnquantifiedVariable(2)
        );
    }

    #[test]
    fn roundtrip() {
        let q = parse_qdimacs("p cnf 3 2\na 1 2 0\ne 3 0\n1 -3 0\n-2 3 0\n").unwrap();
        let q2 = parse_qdimacs(&to_qdimacs(&q)).unwrap();
        assert_eq!(q, q2);
    }
}
