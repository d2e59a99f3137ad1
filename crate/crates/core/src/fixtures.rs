//! Symbolic signature tables shipped with the crate.
//!
//! Each table lists Knapp-Stein pairs as `{labels; -c} <-> {labels*; +c}`
//! with entries written as sums of Dynkin labels. Evaluating a table at
//! concrete labels yields a multiset of `(M-labels, 2c)` that must equal the
//! computed multiplet. See `fixtures/tables.txt` for the grammar.

use crate::error::{Error, Result};
use crate::roots::{DynkinLabels, Rank};
use crate::signature::{m_rho, swap_halves};

pub const TABLES: &str = include_str!("../fixtures/tables.txt");

/// Sum of Dynkin labels over a union of intervals; empty means `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term(Vec<(usize, usize)>);

impl Term {
    pub fn eval(&self, labels: &DynkinLabels) -> u64 {
        self.0
            .iter()
            .map(|&(j, k)| (j..=k).map(|i| labels.get(i)).sum::<u64>())
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    Rho,
    Term(Term),
}

/// Signed rational combination of atoms; coefficients stored doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(Vec<(i64, Atom)>);

impl Weight {
    /// Returns `2c`.
    pub fn eval_doubled(&self, labels: &DynkinLabels) -> i64 {
        // sum of coef2 * (2 * atom) = 4c
        let four_c: i64 = self
            .0
            .iter()
            .map(|(coef2, atom)| {
                let twice_atom = match atom {
                    Atom::Rho => m_rho(labels),
                    Atom::Term(t) => 2 * t.eval(labels) as i64,
                };
                coef2 * twice_atom
            })
            .sum();
        debug_assert_eq!(four_c % 2, 0, "weights are half-integers");
        four_c / 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    Pair,
    Singlet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub name: String,
    pub kind: RowKind,
    pub labels: Vec<Term>,
    pub weight: Weight,
    /// Weight as originally printed, when it differs from `weight`.
    pub printed: Option<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: String,
    pub rank: Rank,
    pub zeros: Vec<usize>,
    pub rows: Vec<Row>,
}

/// One evaluated ER: M-labels and doubled `c`.
pub type Entry = (Vec<u64>, i64);

impl Table {
    /// Number of ERs the table describes.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| match r.kind {
                RowKind::Pair => 2,
                RowKind::Singlet => 1,
            })
            .sum()
    }

    /// Sorted multiset of signatures at `labels`.
    pub fn evaluate(&self, labels: &DynkinLabels) -> Vec<Entry> {
        self.evaluate_with(labels, false)
    }

    /// Like [`Table::evaluate`] but with the originally printed weights.
    pub fn evaluate_printed(&self, labels: &DynkinLabels) -> Vec<Entry> {
        self.evaluate_with(labels, true)
    }

    pub fn has_errata(&self) -> bool {
        self.rows.iter().any(|r| r.printed.is_some())
    }

    fn evaluate_with(&self, labels: &DynkinLabels, printed: bool) -> Vec<Entry> {
        let mut out = Vec::with_capacity(self.size());
        for row in &self.rows {
            let m: Vec<u64> = row.labels.iter().map(|t| t.eval(labels)).collect();
            let w = match (&row.printed, printed) {
                (Some(p), true) => p,
                _ => &row.weight,
            };
            let two_c = w.eval_doubled(labels);
            match row.kind {
                RowKind::Pair => {
                    out.push((swap_halves(&m), two_c));
                    out.push((m, -two_c));
                }
                RowKind::Singlet => out.push((m, two_c)),
            }
        }
        out.sort();
        out
    }
}

pub fn tables() -> Vec<Table> {
    parse(TABLES).expect("embedded tables parse")
}

pub fn table(name: &str) -> Option<Table> {
    tables().into_iter().find(|t| t.name == name)
}

/// Table under construction: name, rank, zeros, rows.
type Pending = Option<(String, Option<u32>, Option<Vec<usize>>, Vec<Row>)>;

pub fn parse(src: &str) -> Result<Vec<Table>> {
    let mut out: Vec<Table> = Vec::new();
    let mut pending: Pending = None;

    fn finish(out: &mut Vec<Table>, pending: Pending, line: usize) -> Result<()> {
        if let Some((name, n, zeros, rows)) = pending {
            let err = |msg: &str| Error::Fixture {
                line,
                msg: format!("[{name}]: {msg}"),
            };
            let n = n.ok_or_else(|| err("missing n"))?;
            let zeros = zeros.ok_or_else(|| err("missing zeros"))?;
            let rank = Rank::new(n)?;
            let width = 2 * rank.n() - 2;
            if let Some(r) = rows.iter().find(|r| r.labels.len() != width) {
                return Err(err(&format!("row {} needs {width} labels", r.name)));
            }
            out.push(Table {
                name,
                rank,
                zeros,
                rows,
            });
        }
        Ok(())
    }

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Fixture { line, msg };
        if let Some(name) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            finish(&mut out, pending.take(), line)?;
            pending = Some((name.trim().to_string(), None, None, Vec::new()));
            continue;
        }
        let Some((_, n, zeros, rows)) = pending.as_mut() else {
            return Err(err("entry outside a table block".into()));
        };
        if let Some(v) = text.strip_prefix("n =") {
            *n = Some(v.trim().parse().map_err(|e| err(format!("bad n: {e}")))?);
        } else if let Some(v) = text.strip_prefix("zeros =") {
            *zeros = Some(
                v.split_whitespace()
                    .map(|z| z.parse().map_err(|e| err(format!("bad zero {z:?}: {e}"))))
                    .collect::<Result<_>>()?,
            );
        } else {
            rows.push(parse_row(text).map_err(err)?);
        }
    }
    finish(&mut out, pending, src.lines().count())?;
    Ok(out)
}

fn parse_row(text: &str) -> std::result::Result<Row, String> {
    let (name, kind, rest) = match (text.find(':'), text.find('!')) {
        (Some(i), _) => (&text[..i], RowKind::Pair, &text[i + 1..]),
        (None, Some(i)) => (&text[..i], RowKind::Singlet, &text[i + 1..]),
        _ => return Err(format!("row {text:?} has neither ':' nor '!'")),
    };
    let mut parts = rest.split(';');
    let labels = parts
        .next()
        .unwrap_or("")
        .split_whitespace()
        .map(parse_term)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let weight = parse_weight(parts.next().ok_or("missing weight")?)?;
    let printed = match parts.next() {
        None => None,
        Some(p) => Some(parse_weight(
            p.trim()
                .strip_prefix("printed")
                .ok_or_else(|| format!("unexpected trailer {p:?}"))?,
        )?),
    };
    if parts.next().is_some() {
        return Err("too many ';' fields".into());
    }
    Ok(Row {
        name: name.trim().to_string(),
        kind,
        labels,
        weight,
        printed,
    })
}

fn parse_term(tok: &str) -> std::result::Result<Term, String> {
    if tok == "0" {
        return Ok(Term(Vec::new()));
    }
    let body = tok
        .strip_prefix('m')
        .ok_or_else(|| format!("label term {tok:?} must start with 'm'"))?;
    body.split(',')
        .map(|g| {
            let d: Vec<usize> = g
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| format!("bad group {g:?} in {tok:?}"))?;
            match d[..] {
                [j] => Ok((j, j)),
                [j, k] if j < k => Ok((j, k)),
                _ => Err(format!("bad group {g:?} in {tok:?}")),
            }
        })
        .collect::<std::result::Result<_, _>>()
        .map(Term)
}

fn parse_weight(text: &str) -> std::result::Result<Weight, String> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut zero = false;
    for tok in text.split_whitespace() {
        match tok {
            "0" => zero = true,
            "+" => sign = 1,
            "-" => sign = -1,
            _ => {
                let split = tok
                    .find(['m', 'r'])
                    .ok_or_else(|| format!("bad weight term {tok:?}"))?;
                let (coef, atom) = tok.split_at(split);
                let coef2 = match coef {
                    "" => 2,
                    c => match c.split_once('/') {
                        Some((p, "2")) => p.parse::<i64>().map_err(|e| e.to_string())?,
                        Some(_) => return Err(format!("bad coefficient {c:?}")),
                        None => 2 * c.parse::<i64>().map_err(|e| e.to_string())?,
                    },
                };
                let atom = if atom == "rho" {
                    Atom::Rho
                } else {
                    Atom::Term(parse_term(atom)?)
                };
                terms.push((sign * coef2, atom));
                sign = 1;
            }
        }
    }
    if terms.is_empty() && !zero {
        return Err(format!("empty weight {text:?}"));
    }
    Ok(Weight(terms))
}
