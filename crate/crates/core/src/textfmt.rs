//! Line-oriented text format for rings and groups.
//!
//! ```text
//! # Z/4
//! ring Z4 4
//! zero 0
//! one 1
//! add
//! 0 1 2 3
//! ...
//! mul
//! ...
//! ```
//!
//! Groups use `group <name> <order>`, `identity <i>` and a `mul` table. `#`
//! starts a comment; indices are 0-based.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;

/// Either structure a file can hold.
#[derive(Debug, Clone)]
pub enum Structure {
    Ring(FiniteRing),
    Group(FiniteGroup),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Line number and the tokens before any comment.
type TokenLine<'a> = (usize, Vec<&'a str>);

struct Lines<'a> {
    inner: std::vec::IntoIter<TokenLine<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<TokenLine<'a>> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect()))
            .filter(|(_, toks): &TokenLine| !toks.is_empty())
            .collect();
        Lines { inner: lines.into_iter(), last_line: text.lines().count().max(1) }
    }

    fn next(&mut self, what: &str) -> Result<TokenLine<'a>> {
        self.inner
            .next()
            .ok_or_else(|| parse_err(self.last_line, format!("unexpected end of input, expected {what}")))
    }

    fn keyword(&mut self, key: &str, args: usize) -> Result<TokenLine<'a>> {
        let (line, toks) = self.next(key)?;
        if toks[0] != key {
            return Err(parse_err(line, format!("expected `{key}`, found `{}`", toks[0])));
        }
        if toks.len() != args + 1 {
            return Err(parse_err(line, format!("`{key}` takes {args} argument(s)")));
        }
        Ok((line, toks))
    }

    fn table(&mut self, key: &str, order: usize) -> Result<Vec<usize>> {
        self.keyword(key, 0)?;
        let mut out = Vec::with_capacity(order * order);
        for _ in 0..order {
            let (line, toks) = self.next(&format!("{key} row"))?;
            if toks.len() != order {
                return Err(parse_err(line, format!("{key} row has {} entries, expected {order}", toks.len())));
            }
            for t in toks {
                out.push(index(line, t, order)?);
            }
        }
        Ok(out)
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            Some((line, toks)) => Err(parse_err(line, format!("trailing content `{}`", toks.join(" ")))),
            None => Ok(()),
        }
    }
}

fn index(line: usize, tok: &str, order: usize) -> Result<usize> {
    let v: usize = tok.parse().map_err(|_| parse_err(line, format!("`{tok}` is not an index")))?;
    if v >= order {
        return Err(parse_err(line, format!("index {v} out of range for order {order}")));
    }
    Ok(v)
}

fn header<'a>(toks: &[&'a str], line: usize) -> Result<(&'a str, usize)> {
    if toks.len() != 3 {
        return Err(parse_err(line, "header must be `<kind> <name> <order>`"));
    }
    let order: usize = toks[2]
        .parse()
        .ok()
        .filter(|&n| n > 0 && n <= crate::ring::MAX_ORDER)
        .ok_or_else(|| parse_err(line, format!("bad order `{}`", toks[2])))?;
    Ok((toks[1], order))
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    let mut lines = Lines::new(text);
    let (line, toks) = lines.next("header")?;
    match toks[0] {
        "ring" => {
            let (name, order) = header(&toks, line)?;
            let (l, t) = lines.keyword("zero", 1)?;
            let zero = index(l, t[1], order)?;
            let (l, t) = lines.keyword("one", 1)?;
            let one = index(l, t[1], order)?;
            let add = lines.table("add", order)?;
            let mul = lines.table("mul", order)?;
            lines.finish()?;
            Ok(Structure::Ring(FiniteRing::new(name, order, &add, &mul, zero, one)?))
        }
        "group" => {
            let (name, order) = header(&toks, line)?;
            let (l, t) = lines.keyword("identity", 1)?;
            let identity = index(l, t[1], order)?;
            let mul = lines.table("mul", order)?;
            lines.finish()?;
            Ok(Structure::Group(FiniteGroup::new(name, order, &mul, identity)?))
        }
        other => Err(parse_err(line, format!("expected `ring` or `group` header, found `{other}`"))),
    }
}

pub fn parse_ring(text: &str) -> Result<FiniteRing> {
    match parse_structure(text)? {
        Structure::Ring(r) => Ok(r),
        Structure::Group(_) => Err(parse_err(1, "expected a ring file, found a group")),
    }
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    match parse_structure(text)? {
        Structure::Group(g) => Ok(g),
        Structure::Ring(_) => Err(parse_err(1, "expected a group file, found a ring")),
    }
}

pub fn parse_ring_file(path: impl AsRef<Path>) -> Result<FiniteRing> {
    parse_ring(&std::fs::read_to_string(path)?)
}

pub fn parse_group_file(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_group(&std::fs::read_to_string(path)?)
}

fn write_table(out: &mut String, order: usize, table: &[usize]) {
    for row in table.chunks(order) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

fn file_name(name: &str) -> String {
    let cleaned: String = name.chars().filter(|c| !c.is_whitespace() && *c != '#').collect();
    if cleaned.is_empty() {
        "unnamed".into()
    } else {
        cleaned
    }
}

pub fn emit_ring(r: &FiniteRing) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring {} {}", file_name(r.name()), r.order());
    let _ = writeln!(out, "zero {}", r.zero());
    let _ = writeln!(out, "one {}", r.one());
    out.push_str("add\n");
    write_table(&mut out, r.order(), &r.add_table());
    out.push_str("mul\n");
    write_table(&mut out, r.order(), &r.mul_table());
    out
}

pub fn emit_group(g: &FiniteGroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {} {}", file_name(g.name()), g.order());
    let _ = writeln!(out, "identity {}", g.identity());
    out.push_str("mul\n");
    write_table(&mut out, g.order(), &g.mul_table());
    out
}
