//! Exhaustive and seeded-random verification of the identities the library
//! implements. Each identity names an instance corpus and two routes to the
//! same value; a report passes when both routes render identically.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{
    colored_tuples, colorings, multigraphs, partition_tuples, random_llt_graph, random_multigraph, rng, skew_triples,
    skew_tuples, vertical_tuples,
};
use crate::cumulants::{llt_cumulant, mac_decomposition_rhs, macdonald_cumulant_qsym, mask_partitions, mobius_weight, Normalization};
use crate::error::{Error, Result};
use crate::graphpoly::tutte_triple;
use crate::input::{graph_json, multigraph_json, tuple_json};
use crate::llt::{llt, macdonald};
use crate::lltgraphs::{
    connected_expansion_grouped, connected_expansion_literal, fundamental_cumulant_expansion, graph_cumulant,
    graph_from_tuple, llt_of_graph, monomial_positive_expansion, sum_monomial_terms, verify_arrow_relations,
    verify_partition_product, verify_resolution_sums, LLTGraph,
};
use crate::ring::QTPoly;
use crate::shapes::{partitions, ColoredTuple, Partition};
use crate::special::{
    blasiak_expansion, hny_block_schur, lollipop_cumulant_schur, melting_lollipop, single_cell_sides, InducedLLTs,
    VerticalTable,
};
use crate::symfunc::{QSymExpansion, SBasis, SymExpansion};

pub const IDENTITIES: [&str; 12] = [
    "hhl-decomp",
    "mac-cumu-decomp",
    "cumulant-connected",
    "tutte-triple",
    "monomial-positivity",
    "fundamental-expansion",
    "e-positivity",
    "lollipop",
    "singcell",
    "blasiak",
    "arrow-relations",
    "hooks",
];

/// Size budget used when none is given.
pub fn default_max_size(identity: &str) -> usize {
    match identity {
        "hhl-decomp" | "mac-cumu-decomp" | "singcell" => 5,
        "tutte-triple" => 4,
        "e-positivity" => 7,
        _ => 6,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed_ms: f64,
}

struct Check {
    instance: String,
    lhs: String,
    rhs: String,
    elapsed_ms: f64,
}

fn timed<F: FnOnce() -> Result<(String, String)>>(instance: String, f: F) -> Check {
    let t0 = Instant::now();
    let (lhs, rhs) = match f() {
        Ok(x) => x,
        Err(e) => (String::new(), format!("error: {e}")),
    };
    Check { instance, lhs, rhs, elapsed_ms: t0.elapsed().as_secs_f64() * 1000.0 }
}

type Group = Box<dyn FnOnce() -> Vec<Check> + Send>;

fn single<F>(instance: String, f: F) -> Group
where
    F: FnOnce() -> Result<(String, String)> + Send + 'static,
{
    Box::new(move || vec![timed(instance, f)])
}

fn pair<A: ToString, B: ToString>(a: A, b: B) -> (String, String) {
    (a.to_string(), b.to_string())
}

fn run(identity: &str, groups: Vec<Group>) -> Vec<VerificationReport> {
    let checks: Vec<Vec<Check>> = groups.into_par_iter().map(|g| g()).collect();
    checks
        .into_iter()
        .flatten()
        .map(|c| VerificationReport {
            identity: identity.to_string(),
            pass: c.lhs == c.rhs,
            instance: c.instance,
            lhs: c.lhs,
            rhs: c.rhs,
            elapsed_ms: c.elapsed_ms,
        })
        .collect()
}

/// Runs every instance of `identity` up to `max_size`; reports come back in
/// generation order, smaller instances first.
pub fn verify(identity: &str, max_size: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let groups = match identity {
        "hhl-decomp" => hhl_groups(max_size),
        "mac-cumu-decomp" => mac_cumu_groups(max_size),
        "cumulant-connected" => connected_groups(max_size, seed),
        "tutte-triple" => tutte_groups(max_size, seed),
        "monomial-positivity" => monomial_groups(max_size, seed),
        "fundamental-expansion" => fundamental_groups(max_size),
        "e-positivity" => e_positivity_groups(max_size),
        "lollipop" => lollipop_groups(max_size),
        "singcell" => singcell_groups(max_size),
        "blasiak" => blasiak_groups(max_size),
        "arrow-relations" => arrow_groups(max_size, seed),
        "hooks" => hook_groups(max_size, seed),
        _ => return Err(Error::InvalidInput(format!("unknown identity {identity:?}"))),
    };
    Ok(run(identity, groups))
}

pub fn all_colored_tuples(max_size: usize) -> Vec<ColoredTuple> {
    colored_tuples(&skew_tuples(max_size, max_size), max_size)
}

/// Random colored LLT graphs with at most `max_vertices` vertices and five
/// double edges.
pub fn random_graphs(count: usize, max_vertices: usize, seed: u64) -> Vec<LLTGraph> {
    let mut r = rng(seed);
    (0..count).map(|_| random_llt_graph(&mut r, max_vertices, 5)).collect()
}

fn e1_power(n: usize) -> SymExpansion {
    let mut e = SymExpansion::zero(SBasis::Elementary, n);
    e.add_term(Partition::from_unsorted(vec![1; n]), &QTPoly::one());
    e.to_schur()
}

fn hhl_groups(max_size: usize) -> Vec<Group> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for lam in partitions(n) {
            let l = lam.clone();
            out.push(single(format!("{lam} transpose"), move || {
                let a = macdonald(&l)?;
                let b = macdonald(&l.transpose())?.swap_qt()?;
                Ok(pair(a, b))
            }));
            let l = lam.clone();
            out.push(single(format!("{lam} at q=t=1"), move || {
                let a = macdonald(&l)?.map_coeffs(|c| QTPoly::constant(c.at_one()));
                Ok(pair(a, e1_power(l.size())))
            }));
        }
    }
    out
}

fn lambdas_json(ls: &[Partition]) -> String {
    serde_json::to_string(ls).expect("partitions serialize")
}

fn mac_cumu_groups(max_size: usize) -> Vec<Group> {
    partition_tuples(max_size, 3)
        .into_iter()
        .map(|ls| {
            single(lambdas_json(&ls), move || Ok(pair(macdonald_cumulant_qsym(&ls)?, mac_decomposition_rhs(&ls)?)))
        })
        .collect()
}

fn connected_check(g: &LLTGraph) -> Result<(String, String)> {
    let lhs = graph_cumulant(g)?.substitute_q(&(&QTPoly::q() + &QTPoly::one()))?;
    let rhs = connected_expansion_grouped(g)?;
    let mut rhs_s = rhs.to_string();
    if g.ed.len() <= 8 && connected_expansion_literal(g)? != rhs {
        rhs_s.push_str("\n(subset-by-subset sum differs)");
    }
    Ok((lhs.to_string(), rhs_s))
}

fn tuple_and_graph_groups(
    max_size: usize,
    seed: u64,
    check: fn(&LLTGraph) -> Result<(String, String)>,
) -> Vec<Group> {
    let mut out: Vec<Group> = all_colored_tuples(max_size)
        .into_iter()
        .map(|t| single(tuple_json(&t).to_string(), move || check(&graph_from_tuple(&t))))
        .collect();
    for g in random_graphs(100, max_size, seed) {
        out.push(single(graph_json(&g).to_string(), move || check(&g)));
    }
    out
}

fn connected_groups(max_size: usize, seed: u64) -> Vec<Group> {
    tuple_and_graph_groups(max_size, seed, connected_check)
}

fn monomial_check(g: &LLTGraph) -> Result<(String, String)> {
    let terms = monomial_positive_expansion(g);
    let kappa = graph_cumulant(g)?;
    let mut rhs = sum_monomial_terms(g, &terms).to_string();
    if let Some(t) = terms.iter().find(|t| !t.inversion.has_nonnegative_coeffs()) {
        rhs.push_str(&format!("\n(negative inversion polynomial {} for E = {:b})", t.inversion, t.e));
    }
    if let Some((k, c)) = kappa.negative_witness() {
        rhs.push_str(&format!("\n(negative coefficient {c} on {k})"));
    }
    Ok((kappa.to_string(), rhs))
}

fn monomial_groups(max_size: usize, seed: u64) -> Vec<Group> {
    tuple_and_graph_groups(max_size, seed, monomial_check)
}

fn tutte_groups(max_vertices: usize, seed: u64) -> Vec<Group> {
    let mut graphs = multigraphs(max_vertices, 6);
    let mut r = rng(seed);
    graphs.extend((0..200).map(|_| random_multigraph(&mut r, max_vertices + 1, 8)));
    graphs
        .into_iter()
        .map(|g| {
            single(multigraph_json(&g).to_string(), move || {
                let (inv, tu, k) = tutte_triple(&g)?;
                Ok((format!("{inv} | {inv}"), format!("{tu} | {k}")))
            })
        })
        .collect()
}

fn fundamental_groups(max_size: usize) -> Vec<Group> {
    all_colored_tuples(max_size)
        .into_iter()
        .map(|t| {
            single(tuple_json(&t).to_string(), move || {
                let kappa = llt_cumulant(&t, Normalization::Plain)?.to_fundamental();
                Ok(pair(kappa, fundamental_cumulant_expansion(&t)))
            })
        })
        .collect()
}

/// `e_lambda e_mu = e_(lambda u mu)`.
fn e_product(a: &SymExpansion, b: &SymExpansion) -> SymExpansion {
    let mut out = SymExpansion::zero(SBasis::Elementary, a.degree + b.degree);
    for (la, ca) in a.iter() {
        for (lb, cb) in b.iter() {
            out.add_term(Partition::from_unsorted([la.parts(), lb.parts()].concat()), &(ca * cb));
        }
    }
    out
}

/// `llt(nu_S)(q + 1)` in elementary functions for every nonempty set `S` of
/// shapes, from fillings.
fn shifted_subtuple_values(t: &ColoredTuple) -> Result<Vec<SymExpansion>> {
    let q1 = &QTPoly::q() + &QTPoly::one();
    let l = t.len();
    let mut out = vec![SymExpansion::zero(SBasis::Elementary, 0)];
    for m in 1u32..1 << l {
        let shapes = (0..l).filter(|i| m >> i & 1 == 1).map(|i| t.shapes()[i].clone()).collect();
        let f = llt(&ColoredTuple::uncolored(shapes)).substitute_q(&q1)?;
        out.push(f.to_schur()?.to_elementary());
    }
    Ok(out)
}

/// `q^(1-r) sum_pi mu(pi) prod_B llt(nu_B)(q + 1)`, the shifted cumulant
/// assembled from shifted moments.
fn shifted_cumulant(values: &[SymExpansion], colors: &[usize]) -> SymExpansion {
    let r = colors.iter().copied().max().unwrap_or(0);
    let shape_mask = |color_mask: u32| -> usize {
        colors.iter().enumerate().filter(|(_, &c)| color_mask >> (c - 1) & 1 == 1).map(|(i, _)| 1usize << i).sum()
    };
    let degree = values.last().map(|v| v.degree).unwrap_or(0);
    let mut sum = SymExpansion::zero(SBasis::Elementary, degree);
    for blocks in mask_partitions((1u32 << r) - 1) {
        let prod = blocks[1..]
            .iter()
            .fold(values[shape_mask(blocks[0])].clone(), |acc, &b| e_product(&acc, &values[shape_mask(b)]));
        sum = sum.add(&prod.scale(&QTPoly::constant(mobius_weight(blocks.len()))));
    }
    sum.shift_q(1 - r as i32)
}

fn e_positivity_groups(max_size: usize) -> Vec<Group> {
    vertical_tuples(max_size)
        .into_iter()
        .map(|t| {
            Box::new(move || {
                let table = VerticalTable::new(&t);
                let values = shifted_subtuple_values(&t);
                colorings(t.len(), 1, 3)
                    .into_iter()
                    .map(|c| {
                        let instance = tuple_json(&t.with_colors(c.clone()).expect("onto")).to_string();
                        timed(instance, || {
                            let table = table.as_ref().map_err(Clone::clone)?;
                            let values = values.as_ref().map_err(Clone::clone)?;
                            Ok(pair(shifted_cumulant(values, &c), table.cumulant_for(&c)?))
                        })
                    })
                    .collect()
            }) as Group
        })
        .collect()
}

fn lollipop_groups(max_size: usize) -> Vec<Group> {
    let mut out = Vec::new();
    for total in 1..=max_size {
        for m in 1..=total {
            let n = total - m;
            for k in 0..m {
                out.push(Box::new(move || lollipop_checks(m, n, k)) as Group);
            }
        }
    }
    out
}

fn lollipop_checks(m: usize, n: usize, k: usize) -> Vec<Check> {
    let name = format!("{{\"m\":{m},\"n\":{n},\"k\":{k}}}");
    let g = match melting_lollipop(m, n, k) {
        Ok(g) => g,
        Err(e) => return vec![timed(name, || Err(e))],
    };
    let induced = match InducedLLTs::new(&g) {
        Ok(x) => x,
        Err(e) => return vec![timed(name, || Err(e))],
    };
    let mut out = Vec::new();
    for c in colorings(m + n, 1, m + n) {
        let colors = serde_json::to_string(&c).expect("colors serialize");
        out.push(timed(format!("{name} colors {colors} block product"), || {
            Ok(pair(induced.block_product(&c).to_schur()?, hny_block_schur(&g, &c)))
        }));
        out.push(timed(format!("{name} colors {colors} cumulant"), || {
            Ok(pair(induced.cumulant(&c)?.to_schur()?, lollipop_cumulant_schur(&g, &c)?))
        }));
    }
    out
}

fn singcell_groups(max_r: usize) -> Vec<Group> {
    (1..=max_r)
        .map(|r| {
            single(format!("r={r}"), move || {
                let s = single_cell_sides(r)?;
                Ok((format!("{}\n--\n{}", s.plain, s.cospin), format!("{}\n--\n{}", s.parking, s.parking)))
            })
        })
        .collect()
}

fn blasiak_groups(max_size: usize) -> Vec<Group> {
    skew_triples(max_size)
        .into_iter()
        .map(|t| single(tuple_json(&t).to_string(), move || Ok(pair(blasiak_expansion(&t)?, llt(&t).to_schur()?))))
        .collect()
}

fn arrow_groups(max_vertices: usize, seed: u64) -> Vec<Group> {
    random_graphs(100, max_vertices, seed)
        .into_iter()
        .map(|g| {
            single(graph_json(&g).to_string(), move || {
                let target = llt_of_graph(&g);
                let mut rhs = target.to_string();
                if !verify_arrow_relations(&g) {
                    rhs.push_str("\n(a local transform changes LLT)");
                }
                if !verify_resolution_sums(&g) {
                    rhs.push_str("\n(a resolution subset sum differs)");
                }
                for blocks in mask_partitions((1u32 << g.num_colors()) - 1) {
                    if !verify_partition_product(&g, &blocks) {
                        rhs.push_str(&format!("\n(block product differs for {blocks:?})"));
                    }
                }
                Ok((target.to_string(), rhs))
            })
        })
        .collect()
}

fn hook_pair(f: &QSymExpansion) -> Result<(String, String)> {
    let from_f: Vec<String> = f.hook_coefficients().iter().map(|(k, c)| format!("{k}: {c}")).collect();
    let full: Vec<String> = f.to_schur()?.hook_rows().iter().map(|(k, c)| format!("{k}: {c}")).collect();
    Ok((from_f.join("\n"), full.join("\n")))
}

/// Hook rows read from fundamental expansions against full Schur expansions,
/// over the symmetric functions produced by the other identities' corpora.
/// Tuple cumulants use the fillings-based fundamental expansion. Vertical
/// strips go one box further, as in `e-positivity`. Random graphs
/// whose cumulant is only quasisymmetric are left out.
fn hook_groups(max_size: usize, seed: u64) -> Vec<Group> {
    let mut out: Vec<Group> = Vec::new();
    for n in 1..=max_size.min(5) {
        for lam in partitions(n) {
            out.push(single(format!("macdonald {lam}"), move || hook_pair(&macdonald(&lam)?.to_monomialq())));
        }
    }
    for ls in partition_tuples(max_size.min(5), 3) {
        out.push(single(format!("macdonald cumulant {}", lambdas_json(&ls)), move || {
            hook_pair(&macdonald_cumulant_qsym(&ls)?)
        }));
    }
    for t in all_colored_tuples(max_size) {
        out.push(single(format!("cumulant {}", tuple_json(&t)), move || {
            let from_f: Vec<String> = fundamental_cumulant_expansion(&t)
                .hook_coefficients()
                .iter()
                .map(|(k, c)| format!("{k}: {c}"))
                .collect();
            let full: Vec<String> = llt_cumulant(&t, Normalization::Plain)?
                .to_schur()?
                .hook_rows()
                .iter()
                .map(|(k, c)| format!("{k}: {c}"))
                .collect();
            Ok((from_f.join("\n"), full.join("\n")))
        }));
    }
    for g in random_graphs(100, max_size, seed) {
        out.push(Box::new(move || {
            let instance = format!("graph cumulant {}", graph_json(&g));
            match graph_cumulant(&g) {
                Ok(k) if matches!(k.to_schur(), Err(Error::NotSymmetric { .. })) => vec![],
                Ok(k) => vec![timed(instance, || hook_pair(&k))],
                Err(e) => vec![timed(instance, || Err(e))],
            }
        }));
    }
    for t in vertical_tuples(max_size + 1) {
        out.push(single(format!("vertical llt {}", tuple_json(&t)), move || hook_pair(&llt(&t))));
    }
    for total in 1..=max_size {
        for m in 1..=total {
            for k in 0..m {
                out.push(single(format!("lollipop {{\"m\":{m},\"n\":{},\"k\":{k}}}", total - m), move || {
                    let g = melting_lollipop(m, total - m, k)?;
                    hook_pair(&InducedLLTs::new(&g)?.cumulant(&(1..=g.num_vertices()).collect::<Vec<_>>())?)
                }));
            }
        }
    }
    for r in 1..=max_size.min(5) {
        out.push(single(format!("single cells r={r}"), move || hook_pair(&single_cell_sides(r)?.parking)));
    }
    for t in skew_triples(max_size) {
        out.push(single(format!("triple {}", tuple_json(&t)), move || hook_pair(&llt(&t))));
    }
    out
}
