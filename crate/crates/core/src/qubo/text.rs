//! Line formats.
//!
//! ```text
//! c comment
//! p qubo <n> <lines>        p ising <n> <lines>
//! o <offset>                o <offset>
//! <i> <j> <value>           h <i> <value>
//!                           J <i> <j> <value>
//! ```
//!
//! Indices are 0-based. In a QUBO line `i i v` adds `v x_i` and `i j v` adds
//! `v x_i x_j`. `<lines>` counts the coefficient lines (not `o`). Values are
//! integers, fractions `p/q` or decimals.

use std::fmt::Write;

use num_traits::Zero;

use crate::algebra::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

use super::model::{IsingModel, QuboModel};

pub fn write_qubo(q: &QuboModel) -> String {
    let coeffs: Vec<_> = q.coefficients().collect();
    let mut out = format!("p qubo {} {}\n", q.num_vars(), coeffs.len());
    if !q.offset().is_zero() {
        writeln!(out, "o {}", format_rational(q.offset())).unwrap();
    }
    for (i, j, v) in coeffs {
        writeln!(out, "{i} {j} {}", format_rational(&v)).unwrap();
    }
    out
}

pub fn write_ising(m: &IsingModel) -> String {
    let fields: Vec<(usize, &Rational)> = m.fields().iter().enumerate().filter(|h| !h.1.is_zero()).collect();
    let count = fields.len() + m.couplings().count();
    let mut out = format!("p ising {} {count}\n", m.num_spins());
    if !m.offset().is_zero() {
        writeln!(out, "o {}", format_rational(m.offset())).unwrap();
    }
    for (i, h) in fields {
        writeln!(out, "h {i} {}", format_rational(h)).unwrap();
    }
    for (i, j, v) in m.couplings() {
        writeln!(out, "J {i} {j} {}", format_rational(v)).unwrap();
    }
    out
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    fields: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, field: usize, msg: impl Into<String>) -> Error {
        let col = self
            .fields
            .get(field)
            .and_then(|f| self.text.find(f))
            .map_or(1, |c| c + 1);
        Error::parse(self.no, col, msg)
    }

    fn index(&self, k: usize, n: usize) -> Result<usize> {
        let i: usize = self.fields[k]
            .parse()
            .map_err(|_| self.err(k, format!("bad index {:?}", self.fields[k])))?;
        if i >= n {
            return Err(self.err(k, format!("index {i} out of range for {n} variables")));
        }
        Ok(i)
    }

    fn value(&self, k: usize) -> Result<Rational> {
        parse_rational(self.fields[k]).ok_or_else(|| self.err(k, format!("bad number {:?}", self.fields[k])))
    }

    fn arity(&self, k: usize, shape: &str) -> Result<()> {
        if self.fields.len() == k {
            Ok(())
        } else {
            Err(self.err(0, format!("expected `{shape}`")))
        }
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, t)| {
        let fields: Vec<&str> = t.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(f) if *f == "c" || f.starts_with('#') => None,
            Some(_) => Some(Line { no: i + 1, text: t, fields }),
        }
    })
}

fn header(line: &Line, kind: &str) -> Result<(usize, usize)> {
    if line.fields.len() != 4 || line.fields[0] != "p" || line.fields[1] != kind {
        return Err(line.err(0, format!("expected `p {kind} <n> <lines>`")));
    }
    let n = line.fields[2].parse().map_err(|_| line.err(2, "bad variable count"))?;
    let m = line.fields[3].parse().map_err(|_| line.err(3, "bad line count"))?;
    Ok((n, m))
}

fn check_count(declared: usize, found: usize) -> Result<()> {
    if declared == found {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "problem line declares {declared} coefficient lines, found {found}"
        )))
    }
}

pub fn parse_qubo(text: &str) -> Result<QuboModel> {
    let mut it = lines(text);
    let first = it.next().ok_or_else(|| Error::parse(1, 1, "missing problem line"))?;
    let (n, declared) = header(&first, "qubo")?;
    let mut q = QuboModel::new(n);
    let mut found = 0;
    for line in it {
        if line.fields[0] == "o" {
            line.arity(2, "o <offset>")?;
            q.add_offset(&line.value(1)?);
            continue;
        }
        line.arity(3, "<i> <j> <value>")?;
        let i = line.index(0, n)?;
        let j = line.index(1, n)?;
        q.add_coefficient(i, j, line.value(2)?)?;
        found += 1;
    }
    check_count(declared, found)?;
    Ok(q)
}

pub fn parse_ising(text: &str) -> Result<IsingModel> {
    let mut it = lines(text);
    let first = it.next().ok_or_else(|| Error::parse(1, 1, "missing problem line"))?;
    let (n, declared) = header(&first, "ising")?;
    let mut m = IsingModel::new(n);
    let mut found = 0;
    for line in it {
        match line.fields[0] {
            "o" => {
                line.arity(2, "o <offset>")?;
                m.add_offset(&line.value(1)?);
            }
            "h" => {
                line.arity(3, "h <i> <value>")?;
                let i = line.index(1, n)?;
                m.add_field(i, &line.value(2)?)?;
                found += 1;
            }
            "J" => {
                line.arity(4, "J <i> <j> <value>")?;
                let i = line.index(1, n)?;
                let j = line.index(2, n)?;
                if i == j {
                    return Err(line.err(2, "self-coupling"));
                }
                m.add_coupling(i, j, line.value(3)?)?;
                found += 1;
            }
            other => return Err(line.err(0, format!("unknown line kind {other:?}"))),
        }
    }
    check_count(declared, found)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::super::model::tests::{arb_ising, arb_qubo};
    use super::*;
    use crate::algebra::{ratio, rational};
    use proptest::prelude::*;

    #[test]
    fn reads_a_small_file() {
        let q = parse_qubo("c demo\np qubo 3 3\no -1/2\n0 0 2\n0 2 -3\n2 2 0.25\n").unwrap();
        assert_eq!(q.offset(), &ratio(-1, 2));
        assert_eq!(q.entry(0, 2), ratio(-3, 2));
        assert_eq!(q.energy(&[1, 0, 1]).unwrap(), ratio(-1, 2) + rational(2) - rational(3) + ratio(1, 4));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_qubo("p qubo 2 1\n0 5 1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_qubo("p qubo 2 2\n0 1 1\n"), Err(Error::Validation(_))));
        assert!(matches!(parse_ising("p ising 2 1\nJ 1 1 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ising("p ising 2 1\nx 1 1 3\n"), Err(Error::Parse { .. })));
        assert!(parse_qubo("").is_err());
    }

    proptest! {
        #[test]
        fn qubo_round_trip(q in arb_qubo(8)) {
            let text = write_qubo(&q);
            let back = parse_qubo(&text).unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(write_qubo(&back), text);
        }

        #[test]
        fn ising_round_trip(m in arb_ising(8)) {
            let text = write_ising(&m);
            let back = parse_ising(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(write_ising(&back), text);
        }
    }
}
