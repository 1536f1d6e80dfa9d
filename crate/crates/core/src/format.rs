//! Plain-text file formats.
//!
//! Coloring (`HRC1`):
//! ```text
//! HRC1
//! r <r> n <n> k <k> m <assigned>
//! <v1> ... <vr> <color>      (m lines, colex order)
//! ```
//! Design (`DES1`):
//! ```text
//! DES1
//! v <v> b <block size> m <blocks>
//! <v1> ... <vb>              (m lines, colex order)
//! ```
//! Lines end in LF. Parsing is strict: no blank lines, no extra tokens.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::combinatorics::{rank_unchecked, validate_subset};
use crate::designs::Design;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    writeln!(s, "HRC1").unwrap();
    writeln!(
        s,
        "r {} n {} k {} m {}",
        c.r(),
        c.n(),
        c.k(),
        c.assigned_count()
    )
    .unwrap();
    for (edge, color) in c.assigned_edges() {
        for v in &edge {
            write!(s, "{v} ").unwrap();
        }
        writeln!(s, "{color}").unwrap();
    }
    s
}

pub fn write_design(d: &Design) -> String {
    let mut s = String::new();
    writeln!(s, "DES1").unwrap();
    writeln!(s, "v {} b {} m {}", d.v(), d.block_size(), d.blocks().len()).unwrap();
    for b in d.blocks() {
        let parts: Vec<String> = b.iter().map(u32::to_string).collect();
        writeln!(s, "{}", parts.join(" ")).unwrap();
    }
    s
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Split<'a, char>>,
    trailing_newline: bool,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        if text.contains('\r') {
            let line = text[..text.find('\r').unwrap()].matches('\n').count() + 1;
            return err(line, "carriage return; lines must end in LF");
        }
        let trailing_newline = text.ends_with('\n');
        let body = text.strip_suffix('\n').unwrap_or(text);
        Ok(Lines {
            inner: body.split('\n').enumerate(),
            trailing_newline,
        })
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        match self.inner.next() {
            Some((i, l)) => Ok((i + 1, l)),
            None => err(0, format!("unexpected end of file, expected {what}")),
        }
    }

    fn finish(mut self) -> Result<(), ParseError> {
        if let Some((i, _)) = self.inner.next() {
            return err(i + 1, "unexpected extra line");
        }
        if !self.trailing_newline {
            return err(0, "missing final newline");
        }
        Ok(())
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>, ParseError> {
    if text.is_empty() {
        return err(line, "empty line");
    }
    text.split(' ')
        .map(|t| match t.parse::<u64>() {
            Ok(x) if t == x.to_string() => Ok(x),
            _ => err(line, format!("bad integer {t:?}")),
        })
        .collect()
}

/// Parse `key value key value ...` with exactly the given keys.
fn header(line: usize, text: &str, keys: &[&str]) -> Result<Vec<u64>, ParseError> {
    let toks: Vec<&str> = text.split(' ').collect();
    if toks.len() != 2 * keys.len() {
        return err(
            line,
            format!(
                "expected header `{}`",
                keys.iter()
                    .map(|k| format!("{k} <int>"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
        );
    }
    keys.iter()
        .enumerate()
        .map(|(i, key)| {
            if toks[2 * i] != *key {
                return err(
                    line,
                    format!("expected key {key:?}, found {:?}", toks[2 * i]),
                );
            }
            numbers(line, toks[2 * i + 1]).map(|v| v[0])
        })
        .collect()
}

fn to_u32(line: usize, vals: &[u64]) -> Result<Vec<u32>, ParseError> {
    vals.iter()
        .map(|&x| u32::try_from(x).or_else(|_| err(line, format!("vertex {x} too large"))))
        .collect()
}

pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = Lines::new(text)?;
    let (ln, magic) = lines.next_line("HRC1")?;
    if magic != "HRC1" {
        return err(ln, format!("expected magic HRC1, found {magic:?}"));
    }
    let (ln, head) = lines.next_line("header")?;
    let h = header(ln, head, &["r", "n", "k", "m"])?;
    let (r, n, k, m) = (h[0] as usize, h[1] as usize, h[2], h[3]);
    if r < 2 || n < r {
        return err(ln, format!("need 2 <= r <= n, got r = {r}, n = {n}"));
    }
    let k = u16::try_from(k)
        .ok()
        .filter(|&k| (1..u16::MAX).contains(&k))
        .map_or_else(|| err(ln, format!("k = {k} out of range")), Ok)?;
    let mut c = Coloring::unassigned(r, n, k).or_else(|e| err(ln, e.to_string()))?;
    if m > c.edge_count() {
        return err(
            ln,
            format!("m = {m} exceeds C({n},{r}) = {}", c.edge_count()),
        );
    }
    let mut prev: Option<u64> = None;
    for _ in 0..m {
        let (ln, body) = lines.next_line("edge line")?;
        let vals = numbers(ln, body)?;
        if vals.len() != r + 1 {
            return err(
                ln,
                format!("expected {} integers, found {}", r + 1, vals.len()),
            );
        }
        let edge = to_u32(ln, &vals[..r])?;
        validate_subset(&edge, n).or_else(|e| err(ln, e.to_string()))?;
        let rank = rank_unchecked(&edge);
        if prev.is_some_and(|p| rank <= p) {
            return err(ln, "edges not in strictly increasing colex order");
        }
        prev = Some(rank);
        let color = vals[r];
        if color >= u64::from(k) {
            return err(ln, format!("color {color} out of range for k = {k}"));
        }
        c.set_rank(rank, color as u16)
            .or_else(|e| err(ln, e.to_string()))?;
    }
    lines.finish()?;
    Ok(c)
}

pub fn parse_design(text: &str) -> Result<Design, ParseError> {
    let mut lines = Lines::new(text)?;
    let (ln, magic) = lines.next_line("DES1")?;
    if magic != "DES1" {
        return err(ln, format!("expected magic DES1, found {magic:?}"));
    }
    let (ln, head) = lines.next_line("header")?;
    let h = header(ln, head, &["v", "b", "m"])?;
    let (v, b, m) = (h[0] as usize, h[1] as usize, h[2]);
    if b < 1 || b > v {
        return err(ln, format!("need 1 <= b <= v, got b = {b}, v = {v}"));
    }
    let mut blocks = Vec::new();
    let mut prev: Option<u64> = None;
    for _ in 0..m {
        let (ln, body) = lines.next_line("block line")?;
        let vals = numbers(ln, body)?;
        if vals.len() != b {
            return err(ln, format!("expected {b} integers, found {}", vals.len()));
        }
        let block = to_u32(ln, &vals)?;
        validate_subset(&block, v).or_else(|e| err(ln, e.to_string()))?;
        let rank = rank_unchecked(&block);
        if prev.is_some_and(|p| rank <= p) {
            return err(ln, "blocks not in strictly increasing colex order");
        }
        prev = Some(rank);
        blocks.push(block);
    }
    lines.finish()?;
    Design::new(v, b, blocks).or_else(|e| err(2, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sum_mod;
    use proptest::prelude::*;

    #[test]
    fn exact_bytes() {
        let c = Coloring::from_fn(3, 4, 2, |t| u16::from(t[2] == 3)).unwrap();
        let text = write_coloring(&c);
        assert_eq!(
            text,
            "HRC1\nr 3 n 4 k 2 m 4\n0 1 2 0\n0 1 3 1\n0 2 3 1\n1 2 3 1\n"
        );
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn partial_colorings_round_trip() {
        let mut c = Coloring::unassigned(3, 5, 3).unwrap();
        c.set(&[0, 2, 4], 2).unwrap();
        let text = write_coloring(&c);
        assert_eq!(text, "HRC1\nr 3 n 5 k 3 m 1\n0 2 4 2\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn design_bytes() {
        let d = Design::cyclic(7, &[0, 1, 3]).unwrap();
        let text = write_design(&d);
        assert!(text.starts_with("DES1\nv 7 b 3 m 7\n0 1 3\n"));
        assert_eq!(parse_design(&text).unwrap(), d);
    }

    fn line_of(text: &str) -> usize {
        parse_coloring(text).unwrap_err().line
    }

    #[test]
    fn strict_errors_carry_lines() {
        assert_eq!(line_of("HRC2\n"), 1);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2\n"), 2);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 2\n0 1 2 0\n0 1 2 1\n"), 4);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 1\n0 1 2 2\n"), 3);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 1\n0 2 1 0\n"), 3);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 1\n0 1 2 0\n\n"), 4);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 1\n0  1 2 0\n"), 3);
        assert_eq!(line_of("HRC1\nr 3 n 4 k 2 m 1\n0 1 02 0\n"), 3);
        assert_eq!(line_of("HRC1\r\nr 3 n 4 k 2 m 0\n"), 1);
        assert!(parse_coloring("HRC1\nr 3 n 4 k 2 m 0").is_err());
        assert!(parse_coloring("HRC1\nr 3 n 4 k 2 m 1\n").is_err());
    }

    proptest! {
        #[test]
        fn coloring_round_trip(n in 3usize..9, m in 1u16..6, mask in any::<u64>()) {
            let mut c = sum_mod(n, m).unwrap();
            for rank in 0..c.edge_count() {
                if mask >> (rank % 64) & 1 == 1 {
                    c.set_rank(rank, crate::coloring::UNASSIGNED).unwrap();
                }
            }
            let text = write_coloring(&c);
            prop_assert_eq!(parse_coloring(&text).unwrap(), c.clone());
            prop_assert_eq!(write_coloring(&parse_coloring(&text).unwrap()), text);
        }

        #[test]
        fn design_round_trip(v in 4usize..12, base in proptest::collection::btree_set(0u32..4, 2..4)) {
            let base: Vec<u32> = base.into_iter().collect();
            if let Ok(d) = Design::cyclic(v, &base) {
                let text = write_design(&d);
                prop_assert_eq!(parse_design(&text).unwrap(), d);
            }
        }
    }
}
