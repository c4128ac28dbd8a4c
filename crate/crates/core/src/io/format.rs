//! ```text
//! semiring <name>
//! elements <k>
//! zero <i>
//! one <j>
//! add
//! <k rows of k indices>
//! mul
//! <k rows of k indices>
//! end
//!
//! semimodule <name> over <semiring>
//! elements <m>
//! zero <i>
//! add
//! <m rows of m indices>
//! act
//! <k rows of m indices; row r, column x is r·x>
//! end
//! ```
//!
//! `#` starts a comment; blank lines are ignored. A semimodule may only name
//! a semiring declared earlier in the same file.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::error::AlgebraError;
use crate::harness::Catalog;
use crate::semimodule::{validate_semimodule, Semimodule, SemimoduleTables};
use crate::semiring::{validate_semiring, Semiring, SemiringTables};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// Well-formed tables that fail validation; `line` is the block header.
    #[error("line {line}: `{block}`: {source}")]
    Invalid { line: usize, block: String, source: AlgebraError },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Structure {
    Semiring(Arc<Semiring>),
    Semimodule(Arc<Semimodule>),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Semiring(r) => r.name(),
            Structure::Semimodule(m) => m.name(),
        }
    }
}

/// The blocks of a file, in file order.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub blocks: Vec<Structure>,
}

impl Document {
    pub fn semirings(&self) -> Vec<Arc<Semiring>> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Structure::Semiring(r) => Some(Arc::clone(r)),
                Structure::Semimodule(_) => None,
            })
            .collect()
    }

    pub fn semimodules(&self) -> Vec<Arc<Semimodule>> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Structure::Semimodule(m) => Some(Arc::clone(m)),
                Structure::Semiring(_) => None,
            })
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&Structure> {
        self.blocks.iter().find(|b| b.name() == name)
    }

    pub fn catalog(&self) -> Catalog {
        Catalog::from_structures(self.semirings(), self.semimodules())
    }
}

/// Line number and tokens of each non-blank, comment-stripped line.
type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: TokenLines<'a> =
            Box::new(text.lines().enumerate().filter_map(|(i, raw)| {
                let body = raw.split('#').next().unwrap_or("");
                let tokens: Vec<&str> = body.split_whitespace().collect();
                (!tokens.is_empty()).then_some((i + 1, tokens))
            }));
        Self { inner: it.peekable(), last: 0 }
    }

    fn next(&mut self, wanted: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        match self.inner.next() {
            Some((line, tokens)) => {
                self.last = line;
                Ok((line, tokens))
            }
            None => Err(syntax(self.last.max(1), format!("unexpected end of input, expected {wanted}"))),
        }
    }

    /// `<keyword>` alone on a line.
    fn keyword(&mut self, keyword: &str) -> Result<usize, ParseError> {
        let (line, tokens) = self.next(&format!("`{keyword}`"))?;
        if tokens != [keyword] {
            return Err(syntax(line, format!("expected `{keyword}`, found `{}`", tokens.join(" "))));
        }
        Ok(line)
    }

    /// `<keyword> <n>`.
    fn number(&mut self, keyword: &str) -> Result<(usize, usize), ParseError> {
        let (line, tokens) = self.next(&format!("`{keyword} <n>`"))?;
        match tokens.as_slice() {
            [k, v] if *k == keyword => Ok((line, index(line, v)?)),
            _ => Err(syntax(line, format!("expected `{keyword} <n>`, found `{}`", tokens.join(" ")))),
        }
    }

    /// `rows` lines of `cols` indices, each below `bound`.
    fn table(&mut self, label: &str, rows: usize, cols: usize, bound: usize) -> Result<Vec<Vec<usize>>, ParseError> {
        let mut out = Vec::new();
        for r in 0..rows {
            let (line, tokens) = self.next(&format!("row {r} of `{label}`"))?;
            if tokens.len() != cols {
                return Err(syntax(
                    line,
                    format!("row {r} of `{label}` has {} entries, expected {cols}", tokens.len()),
                ));
            }
            let row = tokens
                .iter()
                .map(|t| {
                    let v = index(line, t)?;
                    if v >= bound {
                        return Err(syntax(line, format!("entry {v} outside 0..{bound}")));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(row);
        }
        Ok(out)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

fn index(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("`{token}` is not a non-negative integer")))
}

fn check_point(line: usize, what: &str, v: usize, size: usize) -> Result<(), ParseError> {
    if v >= size {
        return Err(syntax(line, format!("{what} {v} outside 0..{size}")));
    }
    Ok(())
}

fn elements(lines: &mut Lines<'_>) -> Result<usize, ParseError> {
    let (line, k) = lines.number("elements")?;
    if k == 0 {
        return Err(syntax(line, "a structure needs at least one element"));
    }
    Ok(k)
}

fn semiring_block(lines: &mut Lines<'_>, line: usize, name: &str) -> Result<Semiring, ParseError> {
    let size = elements(lines)?;
    let (l, zero) = lines.number("zero")?;
    check_point(l, "zero", zero, size)?;
    let (l, one) = lines.number("one")?;
    check_point(l, "one", one, size)?;
    lines.keyword("add")?;
    let add = lines.table("add", size, size, size)?;
    lines.keyword("mul")?;
    let mul = lines.table("mul", size, size, size)?;
    lines.keyword("end")?;
    let tables = SemiringTables { size, zero, one, add, mul };
    validate_semiring(name, &tables).map_err(|source| ParseError::Invalid {
        line,
        block: name.to_string(),
        source,
    })
}

fn semimodule_block(
    lines: &mut Lines<'_>,
    line: usize,
    name: &str,
    base: Arc<Semiring>,
) -> Result<Semimodule, ParseError> {
    let size = elements(lines)?;
    let (l, zero) = lines.number("zero")?;
    check_point(l, "zero", zero, size)?;
    lines.keyword("add")?;
    let add = lines.table("add", size, size, size)?;
    lines.keyword("act")?;
    let act = lines.table("act", base.size(), size, size)?;
    lines.keyword("end")?;
    let tables = SemimoduleTables { size, zero, add, act };
    validate_semimodule(name, base, &tables).map_err(|source| ParseError::Invalid {
        line,
        block: name.to_string(),
        source,
    })
}

/// Parses and validates every block.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut lines = Lines::new(text);
    let mut doc = Document::default();
    let mut names = HashSet::new();
    while lines.inner.peek().is_some() {
        let (line, tokens) = lines.next("a block")?;
        let block = match tokens.as_slice() {
            ["semiring", name] => {
                Structure::Semiring(Arc::new(semiring_block(&mut lines, line, name)?))
            }
            ["semimodule", name, "over", base] => {
                let base = doc
                    .semirings()
                    .into_iter()
                    .find(|r| r.name() == *base)
                    .ok_or_else(|| syntax(line, format!("semiring `{base}` is not declared above")))?;
                Structure::Semimodule(Arc::new(semimodule_block(&mut lines, line, name, base)?))
            }
            _ => {
                return Err(syntax(
                    line,
                    format!(
                        "expected `semiring <name>` or `semimodule <name> over <semiring>`, found `{}`",
                        tokens.join(" ")
                    ),
                ))
            }
        };
        if !names.insert(block.name().to_string()) {
            return Err(syntax(line, format!("`{}` is declared twice", block.name())));
        }
        doc.blocks.push(block);
    }
    Ok(doc)
}

fn write_table(out: &mut String, rows: impl Iterator<Item = Vec<usize>>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

fn write_semiring(out: &mut String, r: &Semiring) {
    let t = r.tables();
    let _ = writeln!(out, "semiring {}", r.name());
    let _ = writeln!(out, "elements {}", t.size);
    let _ = writeln!(out, "zero {}", t.zero);
    let _ = writeln!(out, "one {}", t.one);
    out.push_str("add\n");
    write_table(out, t.add.into_iter());
    out.push_str("mul\n");
    write_table(out, t.mul.into_iter());
    out.push_str("end\n");
}

fn write_semimodule(out: &mut String, m: &Semimodule) {
    let t = m.tables();
    let _ = writeln!(out, "semimodule {} over {}", m.name(), m.base().name());
    let _ = writeln!(out, "elements {}", t.size);
    let _ = writeln!(out, "zero {}", t.zero);
    out.push_str("add\n");
    write_table(out, t.add.into_iter());
    out.push_str("act\n");
    write_table(out, t.act.into_iter());
    out.push_str("end\n");
}

/// Canonical form: blocks in order, no comments, one blank line between blocks.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    for (i, block) in doc.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match block {
            Structure::Semiring(r) => write_semiring(&mut out, r),
            Structure::Semimodule(m) => write_semimodule(&mut out, m),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Axiom;

    const B_AND_C3: &str = "\
# the Boolean semiring
semiring B
elements 2
zero 0
one 1
add
0 1
1 1
mul
0 0
0 1
end

semimodule C3 over B   # 0 < a < 1
elements 3
zero 0
add
0 1 2
1 1 2
2 2 2
act
0 0 0
0 1 2
end
";

    #[test]
    fn parses_and_round_trips() {
        let doc = parse(B_AND_C3).unwrap();
        assert_eq!(doc.blocks.len(), 2);
        let text = serialize(&doc);
        assert!(!text.contains('#'));
        assert_eq!(serialize(&parse(&text).unwrap()), text);
        let Some(Structure::Semimodule(c3)) = doc.get("C3") else { panic!() };
        assert_eq!(c3.subsemimodules().len(), 4);
    }

    #[test]
    fn undeclared_semiring_is_a_syntax_error() {
        let text = "semimodule M over R\nelements 1\nzero 0\nadd\n0\nact\n0\nend\n";
        assert_eq!(parse(text).unwrap_err().line(), 1);
        assert!(matches!(parse(text), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn axiom_violation_names_the_block() {
        let text = B_AND_C3.replace("act\n0 0 0\n", "act\n0 1 0\n");
        match parse(&text) {
            Err(ParseError::Invalid { line, block, source }) => {
                assert_eq!(line, 14);
                assert_eq!(block, "C3");
                assert_eq!(
                    source,
                    AlgebraError::AxiomViolation { axiom: Axiom::ZeroScalarKills, witness: vec![1] }
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn positioned_errors() {
        let short_row = B_AND_C3.replace("0 1\n1 1\nmul", "0 1\n1\nmul");
        assert_eq!(parse(&short_row).unwrap_err().line(), 8);
        let out_of_range = B_AND_C3.replacen("0 1\n1 1", "0 1\n1 7", 1);
        assert_eq!(parse(&out_of_range).unwrap_err().line(), 8);
        let truncated = &B_AND_C3[..B_AND_C3.find("mul").unwrap()];
        assert!(matches!(parse(truncated), Err(ParseError::Syntax { line: 8, .. })));
        let twice = format!("{B_AND_C3}\n{}", &B_AND_C3[..B_AND_C3.find("semimodule").unwrap()]);
        assert!(parse(&twice).unwrap_err().to_string().contains("declared twice"));
        assert!(parse("").unwrap().blocks.is_empty());
    }
}
