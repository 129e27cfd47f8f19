//! Reading and writing frameworks in the ICCMA (`p af`) and APX formats.
//!
//! Both parsers are strict: trailing garbage, undeclared arguments, and
//! malformed facts are errors rather than warnings, so broken corpus files
//! fail loudly.

use thiserror::Error;

use crate::af::{AfBuilder, AfError, ArgumentationFramework};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `p af <n>` header")]
    MissingHeader,
    #[error("argument id {0} out of range")]
    IdOutOfRange(usize),
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("malformed fact at line {0}")]
    MalformedFact(usize),
    #[error("attack endpoint `{0}` is not a declared argument")]
    UndeclaredArgument(String),
    #[error("argument `{0}` declared twice")]
    DuplicateArgument(String),
    #[error("invalid argument name `{0}`")]
    InvalidName(String),
    #[error("framework must have at least one argument")]
    EmptyFramework,
}

impl From<AfError> for ParseError {
    fn from(e: AfError) -> Self {
        match e {
            AfError::EmptyFramework => ParseError::EmptyFramework,
            AfError::DuplicateArgument(n) => ParseError::DuplicateArgument(n),
            AfError::InvalidName(n) => ParseError::InvalidName(n),
            AfError::IdOutOfRange(i) => ParseError::IdOutOfRange(i),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AfFormat {
    Iccma,
    Apx,
}

impl AfFormat {
    /// Picks a format from a file extension, defaulting to ICCMA.
    pub fn from_path(path: &std::path::Path) -> AfFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("apx") => AfFormat::Apx,
            _ => AfFormat::Iccma,
        }
    }
}

pub fn parse(text: &str, format: AfFormat) -> Result<ArgumentationFramework, ParseError> {
    match format {
        AfFormat::Iccma => parse_iccma(text),
        AfFormat::Apx => parse_apx(text),
    }
}

/// Parses the ICCMA competition format: comment lines starting with `#`,
/// a header `p af <n>`, then one `<i> <j>` attack per line with 1-based ids.
pub fn parse_iccma(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut lines = text.lines().enumerate();
    let mut n_args: Option<usize> = None;
    for (idx, line) in lines.by_ref() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        if parts.next() != Some("p") || parts.next() != Some("af") {
            return Err(ParseError::MissingHeader);
        }
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::MalformedLine(idx + 1))?;
        if parts.next().is_some() {
            return Err(ParseError::MalformedLine(idx + 1));
        }
        if n == 0 {
            return Err(ParseError::EmptyFramework);
        }
        n_args = Some(n);
        break;
    }
    let n = n_args.ok_or(ParseError::MissingHeader)?;
    let mut builder = AfBuilder::with_numbered_args(n);
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        let from: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::MalformedLine(idx + 1))?;
        let to: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::MalformedLine(idx + 1))?;
        if parts.next().is_some() {
            return Err(ParseError::MalformedLine(idx + 1));
        }
        if from == 0 || from > n {
            return Err(ParseError::IdOutOfRange(from));
        }
        if to == 0 || to > n {
            return Err(ParseError::IdOutOfRange(to));
        }
        builder.add_attack(from - 1, to - 1)?;
    }
    Ok(builder.build()?)
}

/// Parses the APX fact format: `arg(<name>).` and `att(<a>,<b>).` facts,
/// separated by whitespace or newlines. Every attack endpoint must be
/// declared by an `arg` fact first.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder = AfBuilder::new();
    let mut line = 1usize;
    let mut pos = 0usize;
    while pos < text.len() {
        let rest = &text[pos..];
        let ws_len = rest.len() - rest.trim_start().len();
        line += rest[..ws_len].matches('\n').count();
        pos += ws_len;
        if pos >= text.len() {
            break;
        }
        let rest = &text[pos..];
        let end = rest.find('.').ok_or(ParseError::MalformedFact(line))?;
        let fact_text = &rest[..end];
        let fact_line = line;
        line += fact_text.matches('\n').count();
        pos += end + 1;
        let fact = fact_text.trim();
        if let Some(name) = fact.strip_prefix("arg(").and_then(|f| f.strip_suffix(')')) {
            builder.add_arg(name.trim())?;
        } else if let Some(body) = fact.strip_prefix("att(").and_then(|f| f.strip_suffix(')')) {
            let (a, b) = body
                .split_once(',')
                .ok_or(ParseError::MalformedFact(fact_line))?;
            let from = builder
                .id_of(a.trim())
                .ok_or_else(|| ParseError::UndeclaredArgument(a.trim().to_string()))?;
            let to = builder
                .id_of(b.trim())
                .ok_or_else(|| ParseError::UndeclaredArgument(b.trim().to_string()))?;
            builder.add_attack(from, to)?;
        } else {
            return Err(ParseError::MalformedFact(fact_line));
        }
    }
    Ok(builder.build()?)
}

/// Serializes a framework; attacks are emitted in ascending `(source,
/// target)` id order, so `parse(serialize(F))` reproduces `F` exactly.
pub fn serialize(af: &ArgumentationFramework, format: AfFormat) -> String {
    let mut pairs: Vec<(usize, usize)> = af.attack_pairs().collect();
    pairs.sort_unstable();
    let mut out = String::new();
    match format {
        AfFormat::Iccma => {
            out.push_str(&format!("p af {}\n", af.n_args()));
            for (from, to) in pairs {
                out.push_str(&format!("{} {}\n", from + 1, to + 1));
            }
        }
        AfFormat::Apx => {
            for id in 0..af.n_args() {
                out.push_str(&format!("arg({}).\n", af.name(id)));
            }
            for (from, to) in pairs {
                out.push_str(&format!("att({},{}).\n", af.name(from), af.name(to)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iccma_basic() {
        let af = parse_iccma("p af 3\n1 2\n2 3\n").unwrap();
        assert_eq!(af.n_args(), 3);
        assert_eq!(af.attack_count(), 2);
        assert!(af.attacks(0, 1) && af.attacks(1, 2));
        assert_eq!(af.name(0), "1");
    }

    #[test]
    fn iccma_self_attack_and_comments() {
        let af = parse_iccma("# generated\np af 1\n1 1\n").unwrap();
        assert_eq!(af.n_args(), 1);
        assert!(af.self_attackers().contains(0));
    }

    #[test]
    fn iccma_id_out_of_range() {
        assert_eq!(
            parse_iccma("p af 2\n1 3\n").unwrap_err(),
            ParseError::IdOutOfRange(3)
        );
    }

    #[test]
    fn iccma_missing_header() {
        assert_eq!(parse_iccma("1 2\n").unwrap_err(), ParseError::MissingHeader);
        assert_eq!(parse_iccma("").unwrap_err(), ParseError::MissingHeader);
    }

    #[test]
    fn iccma_trailing_garbage_rejected() {
        assert!(matches!(
            parse_iccma("p af 2\n1 2 junk\n"),
            Err(ParseError::MalformedLine(2))
        ));
    }

    #[test]
    fn iccma_duplicate_attacks_counted() {
        let af = parse_iccma("p af 2\n1 2\n1 2\n").unwrap();
        assert_eq!(af.attack_count(), 1);
        assert_eq!(af.duplicate_attack_count(), 1);
    }

    #[test]
    fn apx_basic() {
        let af = parse_apx("arg(a). arg(b). att(a,b).").unwrap();
        assert_eq!(af.n_args(), 2);
        assert_eq!(af.name(0), "a");
        assert!(af.attacks(0, 1));
    }

    #[test]
    fn apx_single_arg() {
        let af = parse_apx("arg(a).").unwrap();
        assert_eq!(af.n_args(), 1);
        assert_eq!(af.attack_count(), 0);
    }

    #[test]
    fn apx_undeclared_argument() {
        assert_eq!(
            parse_apx("att(a,b).").unwrap_err(),
            ParseError::UndeclaredArgument("a".into())
        );
    }

    #[test]
    fn apx_duplicate_declaration() {
        assert_eq!(
            parse_apx("arg(a). arg(a).").unwrap_err(),
            ParseError::DuplicateArgument("a".into())
        );
    }

    #[test]
    fn apx_malformed() {
        assert!(matches!(
            parse_apx("arg(a). nonsense(b)."),
            Err(ParseError::MalformedFact(1))
        ));
        // A missing period garbles the fact; the exact error depends on
        // where the scan trips, but it must be rejected.
        assert!(parse_apx("arg(a)\natt(a,a).").is_err());
    }

    #[test]
    fn serialize_iccma_fixed() {
        let mut b = AfBuilder::with_numbered_args(2);
        b.add_attack(0, 1).unwrap();
        let af = b.build().unwrap();
        assert_eq!(serialize(&af, AfFormat::Iccma), "p af 2\n1 2\n");
    }

    #[test]
    fn serialize_apx_fixed() {
        let b = AfBuilder::with_numbered_args(1);
        let af = b.build().unwrap();
        assert_eq!(serialize(&af, AfFormat::Apx), "arg(1).\n");
    }
}
