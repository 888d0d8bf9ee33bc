//! Text formats for semiring tables, matrices and decompositions.
//!
//! Tables:
//!
//! ```text
//! size 2
//! zero 0
//! one 1
//! add
//! 0 1
//! 1 1
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! Matrices:
//!
//! ```text
//! semiring powerset:2
//! n 2
//! {1} {2}
//! {2} {1}
//! ```
//!
//! Blank lines and everything after `#` are ignored. A `table:<path>`
//! descriptor inside a matrix file is resolved against the directory of that
//! file; the path is kept verbatim as the semiring name so that output
//! written next to the input reads back unchanged.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use antiring::semiring::FiniteTables;
use antiring::squarezero::SquareZeroDecomposition;
use antiring::{Matrix, Semiring};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown semiring descriptor `{0}`")]
    Descriptor(String),
    #[error(transparent)]
    Core(#[from] antiring::Error),
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Significant lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

/// Splits on whitespace, keeping `{...}` groups together.
pub fn tokens(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in line.chars() {
        match c {
            '{' => {
                depth += 1;
                cur.push(c);
            }
            '}' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn keyword<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    last: usize,
) -> Result<(usize, Option<&'a str>)> {
    let (line, text) = it
        .next()
        .ok_or_else(|| syntax(last + 1, format!("expected `{key}`")))?;
    let mut parts = text.splitn(2, char::is_whitespace);
    if parts.next() != Some(key) {
        return Err(syntax(line, format!("expected `{key}`, found `{text}`")));
    }
    Ok((line, parts.next().map(str::trim)))
}

fn number<T: std::str::FromStr>(line: usize, key: &str, arg: Option<&str>) -> Result<T> {
    arg.and_then(|a| a.parse().ok())
        .ok_or_else(|| syntax(line, format!("`{key}` needs a nonnegative integer")))
}

fn table_rows<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    k: usize,
    last: usize,
) -> Result<(usize, Vec<Vec<usize>>)> {
    let (mut line, arg) = keyword(it, key, last)?;
    if arg.is_some() {
        return Err(syntax(line, format!("`{key}` takes no arguments")));
    }
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let (l, text) = it
            .next()
            .ok_or_else(|| syntax(line + 1, format!("`{key}` needs {k} rows, got {r}")))?;
        line = l;
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| syntax(l, "table entries are nonnegative indices"))?;
        if row.len() != k {
            return Err(syntax(l, format!("expected {k} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    Ok((line, rows))
}

pub fn parse_tables(text: &str) -> Result<FiniteTables> {
    let mut it = lines(text);
    let (l1, arg) = keyword(&mut it, "size", 0)?;
    let k: usize = number(l1, "size", arg)?;
    let (l2, arg) = keyword(&mut it, "zero", l1)?;
    let zero = number(l2, "zero", arg)?;
    let (l3, arg) = keyword(&mut it, "one", l2)?;
    let one = number(l3, "one", arg)?;
    let (l4, add) = table_rows(&mut it, "add", k, l3)?;
    let (l5, mul) = table_rows(&mut it, "mul", k, l4)?;
    if let Some((l, text)) = it.next() {
        return Err(syntax(l.max(l5), format!("unexpected `{text}` after tables")));
    }
    Ok(FiniteTables::new(add, mul, zero, one)?)
}

pub fn write_tables(t: &FiniteTables) -> String {
    let mut out = format!("size {}\nzero {}\none {}\n", t.size(), t.zero(), t.one());
    for (key, rows) in [("add", t.add_table()), ("mul", t.mul_table())] {
        out.push_str(key);
        out.push('\n');
        for row in rows {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Parses `boolean`, `chain:<q>`, `powerset:<m>`, `naturals`, `tropical` or
/// `table:<path>`, reading table files relative to `base`.
pub fn parse_semiring(desc: &str, base: &Path) -> Result<Semiring> {
    let bad = || FormatError::Descriptor(desc.to_string());
    let (kind, arg) = match desc.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (desc, None),
    };
    match (kind, arg) {
        ("boolean", None) => Ok(Semiring::Boolean),
        ("naturals", None) => Ok(Semiring::Naturals),
        ("tropical", None) => Ok(Semiring::Tropical),
        ("chain", Some(q)) => Ok(Semiring::chain(q.parse().map_err(|_| bad())?)?),
        ("powerset", Some(m)) => Ok(Semiring::powerset(m.parse().map_err(|_| bad())?)?),
        ("table", Some(path)) if !path.is_empty() => {
            let tables = parse_tables(&read_file(&base.join(path))?)?;
            Ok(Semiring::table(path, tables)?)
        }
        _ => Err(bad()),
    }
}

fn parse_matrix_lines<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    base: &Path,
    last: usize,
) -> Result<(usize, Matrix)> {
    let (l1, desc) = keyword(it, "semiring", last)?;
    let desc = desc.ok_or_else(|| syntax(l1, "`semiring` needs a descriptor"))?;
    let s = parse_semiring(desc, base)?;
    let (l2, arg) = keyword(it, "n", l1)?;
    let n: usize = number(l2, "n", arg)?;
    if n == 0 {
        return Err(syntax(l2, "dimension must be positive"));
    }
    let mut line = l2;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (l, text) = it
            .next()
            .ok_or_else(|| syntax(line + 1, format!("expected {n} rows, got {r}")))?;
        line = l;
        let cells = tokens(text);
        if cells.len() != n {
            return Err(syntax(l, format!("expected {n} entries, found {}", cells.len())));
        }
        let row = cells
            .iter()
            .map(|c| s.parse_value(c))
            .collect::<antiring::Result<Vec<_>>>()
            .map_err(|e| syntax(l, e.to_string()))?;
        rows.push(row);
    }
    Ok((line, Matrix::from_rows(&s, rows)?))
}

pub fn parse_matrix(text: &str, base: &Path) -> Result<Matrix> {
    let mut it = lines(text);
    let (last, m) = parse_matrix_lines(&mut it, base, 0)?;
    if let Some((l, extra)) = it.next() {
        return Err(syntax(l.max(last), format!("unexpected `{extra}` after the matrix")));
    }
    Ok(m)
}

/// Reads a matrix file, resolving table paths against its directory.
pub fn read_matrix(path: &Path) -> Result<Matrix> {
    let base = path.parent().unwrap_or(Path::new("."));
    parse_matrix(&read_file(path)?, base)
}

pub fn write_matrix(m: &Matrix) -> String {
    format!("semiring {}\nn {}\n{m}", m.semiring(), m.n())
}

/// `summands <r>`, the summands, and a check line recomputed from them.
pub fn write_decomposition(source: &Matrix, d: &SquareZeroDecomposition) -> String {
    let (sum, squares) = verify_decomposition(source, d.summands());
    let mut out = format!("summands {}\n", d.len());
    for b in d.summands() {
        out.push_str(&write_matrix(b));
    }
    let verdict = |ok: bool| if ok { "ok" } else { "failed" };
    let _ = writeln!(out, "check sum={} squares={}", verdict(sum), verdict(squares));
    out
}

/// Whether the summands add up to `source`, and whether each squares to 0.
pub fn verify_decomposition(source: &Matrix, summands: &[Matrix]) -> (bool, bool) {
    let mut total = Matrix::zeros(source.semiring(), source.n()).expect("source is a valid matrix");
    let mut squares = true;
    for b in summands {
        match (total.add(b), b.mul(b)) {
            (Ok(t), Ok(sq)) => {
                total = t;
                squares &= sq.is_zero();
            }
            _ => return (false, false),
        }
    }
    (total == *source, squares)
}

/// Reads back the output of [`write_decomposition`].
pub fn parse_decomposition(text: &str, base: &Path) -> Result<Vec<Matrix>> {
    let mut it = lines(text).peekable();
    let (l, arg) = keyword(&mut it, "summands", 0)?;
    let r: usize = number(l, "summands", arg)?;
    let mut last = l;
    let mut out = Vec::with_capacity(r);
    for _ in 0..r {
        let (l, m) = parse_matrix_lines(&mut it, base, last)?;
        last = l;
        out.push(m);
    }
    let (l, check) = keyword(&mut it, "check", last)?;
    if check != Some("sum=ok squares=ok") {
        return Err(syntax(l, "decomposition check did not pass"));
    }
    Ok(out)
}
