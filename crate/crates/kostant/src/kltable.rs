//! Plain-text export and import of Kazhdan-Lusztig tables.
//!
//! One line per nonzero `P_{x,w}`: `x w : c_0 c_1 …`, where `x` and `w` are in
//! one-line notation and `c_i` is the coefficient of `q^i`. Lines are ordered
//! by `w`, then `x`, lexicographically, so export is deterministic and
//! `export(import(text)) == text` for any exported text.

use std::fmt::Write as _;

use kostant_core::kl::KlTable;
use kostant_core::Permutation;

use crate::{CliError, CliResult};

pub fn export(table: &KlTable) -> String {
    let mut out = String::new();
    for (x, w, coeffs) in table.entries() {
        write!(out, "{x} {w} :").expect("writing to a String");
        for c in coeffs {
            write!(out, " {c}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn import(text: &str) -> CliResult<KlTable> {
    let mut entries = Vec::new();
    let mut n = None;
    for (number, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |why: &str| CliError::Format {
            line: number + 1,
            message: why.to_string(),
        };
        let (pair, coeffs) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let mut perms = pair.split_whitespace();
        let (Some(x), Some(w), None) = (perms.next(), perms.next(), perms.next()) else {
            return Err(bad("expected two permutations before ':'"));
        };
        let x: Permutation = x.parse().map_err(|e| bad(&format!("{e}")))?;
        let w: Permutation = w.parse().map_err(|e| bad(&format!("{e}")))?;
        let coeffs = coeffs
            .split_whitespace()
            .map(|c| {
                c.parse::<i64>()
                    .map_err(|_| bad("coefficient is not an integer"))
            })
            .collect::<CliResult<Vec<_>>>()?;
        if *n.get_or_insert(x.n()) != x.n() {
            return Err(bad("permutations of different sizes"));
        }
        entries.push((x, w, coeffs));
    }
    let n = n.ok_or(CliError::Format {
        line: 0,
        message: "empty table".to_string(),
    })?;
    Ok(KlTable::from_entries(n, entries)?)
}
