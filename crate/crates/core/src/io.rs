//! Text formats for codes and designs.
//!
//! Code: `q n k`, then `k` generator rows. Rows are digit strings when `q <= 9`
//! and space-separated integers otherwise.
//!
//! Design: `v k b`, then `b` lines of ascending 0-based points, lines in
//! lexicographic order.

use std::fmt::Write;

use crate::code::LinearCode;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

fn header<const N: usize>(line: Option<&str>, what: &str) -> Result<[usize; N]> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing {what} header")))?;
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header token {t:?}"))))
        .collect::<Result<_>>()?;
    nums.try_into().map_err(|_| Error::Parse(format!("{what} header needs {N} numbers: {line:?}")))
}

fn content_lines(s: &str) -> impl Iterator<Item = &str> {
    s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_code(c: &LinearCode) -> String {
    let mut out = format!("{} {} {}\n", c.q(), c.n(), c.k());
    let g = c.generator();
    for r in 0..g.rows() {
        let row = g.row(r);
        if c.q() <= 9 {
            out.extend(row.iter().map(|&x| char::from(b'0' + x)));
        } else {
            let toks: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&toks.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn parse_code(s: &str) -> Result<LinearCode> {
    let mut lines = content_lines(s);
    let [q, n, k] = header::<3>(lines.next(), "code")?;
    let field = Field::new(q as u64)?;
    let mut rows = Vec::with_capacity(k);
    for line in lines {
        let row: Vec<Elem> = if line.contains(char::is_whitespace) || q > 9 {
            line.split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))).and_then(|x| field.check(x)))
                .collect::<Result<_>>()?
        } else {
            line.chars()
                .map(|ch| ch.to_digit(10).ok_or_else(|| Error::Parse(format!("bad digit {ch:?}"))).and_then(|x| field.check(x)))
                .collect::<Result<_>>()?
        };
        if row.len() != n {
            return Err(Error::Parse(format!("row of length {} in a length-{n} code", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse(format!("expected {k} rows, found {}", rows.len())));
    }
    let code = LinearCode::from_vecs(&field, &rows)?;
    if code.k() != k {
        return Err(Error::Parse(format!("rows have rank {}, header says {k}", code.k())));
    }
    Ok(code)
}

pub fn write_design(d: &Design) -> String {
    let mut out = format!("{} {} {}\n", d.v(), d.k(), d.b());
    for b in d.blocks() {
        let toks: Vec<String> = b.iter().map(u32::to_string).collect();
        writeln!(out, "{}", toks.join(" ")).unwrap();
    }
    out
}

pub fn parse_design(s: &str) -> Result<Design> {
    let mut lines = content_lines(s);
    let [v, k, b] = header::<3>(lines.next(), "design")?;
    let blocks: Vec<Vec<u32>> = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    if blocks.len() != b {
        return Err(Error::Parse(format!("expected {b} blocks, found {}", blocks.len())));
    }
    let d = Design::new(v, blocks)?;
    if d.k() != k {
        return Err(Error::Parse(format!("blocks have size {}, header says {k}", d.k())));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip() {
        let text = "2 7 4\n1000110\n0100011\n0010111\n0001101\n";
        let c = parse_code(text).unwrap();
        assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
        let f = Field::new(11).unwrap();
        let c = LinearCode::from_vecs(&f, &[vec![1, 10, 3], vec![0, 1, 7]]).unwrap();
        let s = write_code(&c);
        assert!(s.starts_with("11 3 2\n1 0 "));
        assert_eq!(write_code(&parse_code(&s).unwrap()), s);
    }

    #[test]
    fn code_parse_errors() {
        assert!(parse_code("2 3 1\n102\n").is_err());
        assert!(parse_code("2 3 2\n110\n").is_err());
        assert!(parse_code("2 3 2\n110\n110\n").is_err());
        assert!(parse_code("6 3 1\n110\n").is_err());
    }

    #[test]
    fn design_round_trip() {
        let text = "4 2 3\n0 1\n0 2\n1 3\n";
        let d = parse_design(text).unwrap();
        assert_eq!(write_design(&d), text);
        assert!(parse_design("4 2 2\n0 1\n").is_err());
        assert!(parse_design("4 3 1\n0 1\n").is_err());
    }
}
