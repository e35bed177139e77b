//! Positivity scans for conjectured properties. Findings are data: a
//! violation is recorded with its witness and never turned into an error.

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{partition_tuples, skew_triples};
use crate::cumulants::{llt_cumulant, macdonald_cumulant, Normalization};
use crate::error::{Error, Result};
use crate::input::tuple_json;
use crate::special::blasiak_conjecture_check;
use crate::symfunc::SymExpansion;
use crate::verify::all_colored_tuples;

pub const CONJECTURES: [&str; 3] = ["llt-schur-pos", "mac-schur-pos", "blasiak-aux"];

pub fn default_max_size(conjecture: &str) -> usize {
    match conjecture {
        "mac-schur-pos" => 5,
        _ => 6,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub instance: String,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub conjecture: String,
    pub max_size: usize,
    pub instances: usize,
    pub violations: Vec<Violation>,
}

fn negative_witness(f: &SymExpansion) -> Option<String> {
    for (lam, c) in f.iter() {
        if let Some((qe, te, v)) = c.negative_term() {
            return Some(format!("[s_{lam}] = {c}; coefficient {v} on q^{qe} t^{te}"));
        }
    }
    None
}

fn collect(conjecture: &str, max_size: usize, found: Vec<Option<Violation>>) -> ScanReport {
    ScanReport {
        conjecture: conjecture.to_string(),
        max_size,
        instances: found.len(),
        violations: found.into_iter().flatten().collect(),
    }
}

/// Enumerates instances up to `max_size` and reports every negative Schur
/// coefficient (or, for the three-shape identity, every mismatch).
pub fn scan(conjecture: &str, max_size: usize) -> Result<ScanReport> {
    let found: Vec<Option<Violation>> = match conjecture {
        "llt-schur-pos" => all_colored_tuples(max_size)
            .into_par_iter()
            .map(|t| {
                let instance = tuple_json(&t).to_string();
                let witness = match llt_cumulant(&t, Normalization::MinShift).and_then(|k| k.to_schur()) {
                    Ok(s) => negative_witness(&s),
                    Err(e) => Some(format!("error: {e}")),
                };
                witness.map(|w| Violation { instance, witness: w })
            })
            .collect(),
        "mac-schur-pos" => partition_tuples(max_size, 3)
            .into_par_iter()
            .map(|ls| {
                let instance = serde_json::to_string(&ls).expect("partitions serialize");
                let witness = match macdonald_cumulant(&ls) {
                    Ok(s) => negative_witness(&s),
                    Err(e) => Some(format!("error: {e}")),
                };
                witness.map(|w| Violation { instance, witness: w })
            })
            .collect(),
        "blasiak-aux" => skew_triples(max_size)
            .into_par_iter()
            .flat_map_iter(|t| [(1, 2), (1, 3), (2, 3)].map(|(i, j)| (t.clone(), i, j)))
            .map(|(t, i, j)| {
                let instance = format!("{} pair ({i},{j})", tuple_json(&t));
                let witness = match blasiak_conjecture_check(&t, i, j) {
                    Ok(r) if r.holds => None,
                    Ok(r) => Some(format!(
                        "lhs: {}\nrhs: {}",
                        r.lhs.to_string().replace('\n', "; "),
                        r.rhs.to_string().replace('\n', "; ")
                    )),
                    Err(e) => Some(format!("error: {e}")),
                };
                witness.map(|w| Violation { instance, witness: w })
            })
            .collect(),
        _ => return Err(Error::InvalidInput(format!("unknown conjecture {conjecture:?}"))),
    };
    Ok(collect(conjecture, max_size, found))
}
