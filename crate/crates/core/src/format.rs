//! Line-oriented text format for a ring together with one module.
//!
//! ```text
//! # Z/2 ⊕ Z/4 over Z/4
//! ring.orders 4
//! ring.mul 0 0 -> 1
//! ring.one 1
//! module.orders 2 4
//! module.act 0 -> 1 0 0 1
//! ```
//!
//! `ring.mul i j` gives the coordinates of `g_i g_j`; `module.act g` gives the
//! action of ring generator `g` as a row-major matrix whose row `j` is `u_j g`.
//! Omitted products are zero.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{ModRef, Module};
use crate::ring::{build_ring, Ring, RingSpec};

/// Generator orders and action matrices, collected before the ring is known.
type ModuleSpec = (Vec<u32>, Vec<Vec<Vec<i64>>>);

#[derive(Clone, Debug)]
pub struct Parsed {
    pub ring: Arc<Ring>,
    pub module: ModRef,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn int(line: usize, t: &Token<'_>) -> Result<i64> {
    t.text.parse().map_err(|_| {
        err(
            line,
            t.column,
            format!("expected an integer, found `{}`", t.text),
        )
    })
}

fn index(line: usize, t: &Token<'_>, bound: usize, what: &str) -> Result<usize> {
    let v = int(line, t)?;
    if v < 0 || v as usize >= bound {
        return Err(err(
            line,
            t.column,
            format!("{what} index {v} out of range"),
        ));
    }
    Ok(v as usize)
}

fn expect_arrow(line: usize, toks: &[Token<'_>], at: usize, end_column: usize) -> Result<()> {
    match toks.get(at) {
        Some(t) if t.text == "->" => Ok(()),
        Some(t) => Err(err(
            line,
            t.column,
            format!("expected `->`, found `{}`", t.text),
        )),
        None => Err(err(line, end_column, "expected `->`")),
    }
}

fn values(line: usize, toks: &[Token<'_>], want: usize, end_column: usize) -> Result<Vec<i64>> {
    if toks.len() != want {
        let column = toks.get(want).map_or(end_column, |t| t.column);
        return Err(err(
            line,
            column,
            format!("expected {want} values, found {}", toks.len()),
        ));
    }
    toks.iter().map(|t| int(line, t)).collect()
}

fn positive_orders(line: usize, toks: &[Token<'_>]) -> Result<Vec<u32>> {
    toks.iter()
        .map(|t| match int(line, t)? {
            v if v >= 1 && v <= u32::MAX as i64 => Ok(v as u32),
            v => Err(err(line, t.column, format!("order {v} must be positive"))),
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Parsed> {
    let mut ring: Option<RingSpec> = None;
    let mut module: Option<ModuleSpec> = None;
    let mut ring_built: Option<Arc<Ring>> = None;
    let mut saw_one = false;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(head) = toks.first() else { continue };
        let end = content.chars().count() + 1;
        let rest = &toks[1..];
        match head.text {
            "ring.orders" => {
                if ring.is_some() {
                    return Err(err(line, head.column, "ring.orders given twice"));
                }
                if rest.is_empty() {
                    return Err(err(line, end, "ring.orders needs at least one order"));
                }
                ring = Some(RingSpec::zeroed(positive_orders(line, rest)?));
            }
            "ring.mul" | "ring.one" => {
                let Some(spec) = ring.as_mut() else {
                    return Err(err(line, head.column, "ring.orders must come first"));
                };
                if ring_built.is_some() {
                    return Err(err(line, head.column, "ring data after module data"));
                }
                let k = spec.orders.len();
                if head.text == "ring.one" {
                    spec.unity = values(line, rest, k, end)?;
                    saw_one = true;
                } else {
                    let i = index(
                        line,
                        rest.first()
                            .ok_or_else(|| err(line, end, "missing index"))?,
                        k,
                        "generator",
                    )?;
                    let j = index(
                        line,
                        rest.get(1).ok_or_else(|| err(line, end, "missing index"))?,
                        k,
                        "generator",
                    )?;
                    expect_arrow(line, rest, 2, end)?;
                    spec.structure[i][j] = values(line, &rest[3..], k, end)?;
                }
            }
            "module.orders" => {
                let Some(spec) = ring.as_ref() else {
                    return Err(err(line, head.column, "ring.orders must come first"));
                };
                if !saw_one {
                    return Err(err(line, head.column, "ring.one must precede module data"));
                }
                if module.is_some() {
                    return Err(err(line, head.column, "module.orders given twice"));
                }
                let r = build_ring(spec)?;
                let orders = positive_orders(line, rest)?;
                let k = orders.len();
                let act = vec![vec![vec![0; k]; k]; r.generator_count()];
                ring_built = Some(Arc::new(r));
                module = Some((orders, act));
            }
            "module.act" => {
                let (Some((orders, act)), Some(r)) = (module.as_mut(), ring_built.as_ref()) else {
                    return Err(err(line, head.column, "module.orders must come first"));
                };
                let g = index(
                    line,
                    rest.first()
                        .ok_or_else(|| err(line, end, "missing generator"))?,
                    r.generator_count(),
                    "ring generator",
                )?;
                expect_arrow(line, rest, 1, end)?;
                let k = orders.len();
                let flat = values(line, &rest[2..], k * k, end)?;
                act[g] = flat.chunks(k.max(1)).map(|c| c.to_vec()).take(k).collect();
            }
            other => {
                return Err(err(
                    line,
                    head.column,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    let (Some(ring), Some((orders, act))) = (ring_built, module) else {
        return Err(err(last_line.max(1), 1, "missing ring or module section"));
    };
    let m = Module::new(ring.clone(), orders, act)?;
    Ok(Parsed {
        ring,
        module: Arc::new(m),
    })
}

/// Serialize a module and its ring; `parse` reads it back.
pub fn write(m: &ModRef) -> String {
    let r = m.ring();
    let mut s = String::new();
    let list = |v: &[u32]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(s, "ring.orders {}", list(r.orders())).unwrap();
    for (i, row) in r.structure().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.iter().any(|&x| x != 0) {
                writeln!(s, "ring.mul {i} {j} -> {}", list(c)).unwrap();
            }
        }
    }
    writeln!(s, "ring.one {}", list(r.unity_coords())).unwrap();
    writeln!(s, "module.orders {}", list(m.orders())).unwrap();
    for (g, mat) in m.action().iter().enumerate() {
        let flat: Vec<u32> = mat.iter().flatten().copied().collect();
        writeln!(s, "module.act {g} -> {}", list(&flat)).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    const Z2_Z4: &str = "# Z/2 + Z/4 over Z/4\nring.orders 4\nring.mul 0 0 -> 1\nring.one 1\nmodule.orders 2 4\nmodule.act 0 -> 1 0 0 1\n";

    #[test]
    fn parses_and_round_trips() {
        let p = parse(Z2_Z4).unwrap();
        assert_eq!(p.module.size(), 8);
        let again = parse(&write(&p.module)).unwrap();
        assert!(are_isomorphic(&p.module, &again.module));
    }

    #[test]
    fn reports_positions() {
        let bad = Z2_Z4.replace("module.act 0 -> 1 0 0 1", "module.act 0 -> 1 0 x 1");
        match parse(&bad) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (6, 21)),
            other => panic!("{other:?}"),
        }
        match parse("ring.orders 4\nring.mul 0 0 1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 14)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("frobnicate\n"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn validation_errors_pass_through() {
        let bad = Z2_Z4.replace("module.orders 2 4", "module.orders 3 4");
        assert!(!matches!(parse(&bad), Ok(_) | Err(Error::Parse { .. })));
    }
}
