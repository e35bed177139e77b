//! LLT graphs: vertices joined by strict (type I), weak (type II) and
//! `q`-weighted double edges, and their coloring generating functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::cumulants::{llt_cumulant, Normalization, SubsetFamily};
use crate::error::{Error, Result};
use crate::graphpoly::{inversion_poly, Multigraph};
use crate::ring::QTPoly;
use crate::shapes::ColoredTuple;
use crate::symfunc::{Composition, QBasis, QSymExpansion};
use crate::tableaux::{visit_fillings, CellTable, Fill};

/// Edges are ordered pairs of vertex indices. A coloring `g` satisfies a type
/// I edge `(u, v)` when `g(u) > g(v)` and a type II edge when `g(u) >= g(v)`;
/// a double edge `(u, v)` weighs `q` when `g(u) > g(v)` and 1 otherwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LLTGraph {
    pub labels: Vec<i64>,
    pub e1: Vec<(usize, usize)>,
    pub e2: Vec<(usize, usize)>,
    pub ed: Vec<(usize, usize)>,
    /// Color of each vertex, in `1..=r`.
    pub colors: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    TypeI,
    TypeII,
    Double,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Type I edge: `G - e - G[e -> reversed type II]`.
    Pi1,
    /// Double edge: `q (G - e) + (1 - q) G[e -> reversed type II]`.
    PiD,
    /// Double edge: `G[e -> reversed type II] + q G[e -> type I]`.
    PiPrime,
    /// Double edge: `G - e + (q - 1) G[e -> type I]`.
    PiDoublePrime,
    /// Non-edge: `G[+ type I] + G[+ reversed type II]`.
    PiTriplePrime,
}

impl std::str::FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pi1" => Rule::Pi1,
            "pid" => Rule::PiD,
            "pi_prime" => Rule::PiPrime,
            "pi_doubleprime" => Rule::PiDoublePrime,
            "pi_tripleprime" => Rule::PiTriplePrime,
            _ => return Err(Error::InvalidInput(format!("unknown rule {s}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    Sharp,
    Tilde,
    Hat,
}

/// Formal `Z[q]`-combination of graphs.
pub type Combination = Vec<(QTPoly, LLTGraph)>;

impl LLTGraph {
    pub fn new(
        labels: Vec<i64>,
        e1: Vec<(usize, usize)>,
        e2: Vec<(usize, usize)>,
        ed: Vec<(usize, usize)>,
        colors: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = labels.len();
        let colors = colors.unwrap_or_else(|| vec![1; n]);
        if colors.len() != n {
            return Err(Error::InvalidInput("one color per vertex".into()));
        }
        for &(a, b) in e1.iter().chain(&e2).chain(&ed) {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) refers to a missing vertex")));
            }
        }
        let g = LLTGraph { labels, e1, e2, ed, colors };
        g.check_coloring()?;
        Ok(g)
    }

    fn check_coloring(&self) -> Result<()> {
        let r = self.num_colors();
        if !(1..=r).all(|c| self.colors.contains(&c)) {
            return Err(Error::InvalidInput("coloring is not surjective".into()));
        }
        for &(a, b) in self.e1.iter().chain(&self.e2) {
            if self.colors[a] != self.colors[b] {
                return Err(Error::InvalidInput(format!(
                    "type I/II edge ({},{}) joins different colors",
                    self.labels[a], self.labels[b]
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn with_colors(&self, colors: Vec<usize>) -> Result<Self> {
        LLTGraph::new(self.labels.clone(), self.e1.clone(), self.e2.clone(), self.ed.clone(), Some(colors))
    }

    pub fn index_of(&self, label: i64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Induced subgraph on the vertices whose color lies in the bitmask
    /// (bit `i` is color `i + 1`), recolored preserving order.
    pub fn restrict_colors(&self, mask: u32) -> LLTGraph {
        let keep: Vec<bool> = self.colors.iter().map(|&c| mask >> (c - 1) & 1 == 1).collect();
        let wanted: Vec<usize> = (1..=self.num_colors()).filter(|c| mask >> (c - 1) & 1 == 1).collect();
        let mut index = vec![usize::MAX; self.len()];
        let mut labels = Vec::new();
        let mut colors = Vec::new();
        for v in 0..self.len() {
            if keep[v] {
                index[v] = labels.len();
                labels.push(self.labels[v]);
                colors.push(wanted.iter().position(|&c| c == self.colors[v]).unwrap() + 1);
            }
        }
        let sub = |es: &[(usize, usize)]| -> Vec<(usize, usize)> {
            es.iter().filter(|&&(a, b)| keep[a] && keep[b]).map(|&(a, b)| (index[a], index[b])).collect()
        };
        LLTGraph { labels, e1: sub(&self.e1), e2: sub(&self.e2), ed: sub(&self.ed), colors }
    }

    fn edges_mut(&mut self, kind: EdgeKind) -> &mut Vec<(usize, usize)> {
        match kind {
            EdgeKind::TypeI => &mut self.e1,
            EdgeKind::TypeII => &mut self.e2,
            EdgeKind::Double => &mut self.ed,
        }
    }

    fn without(&self, kind: EdgeKind, e: (usize, usize)) -> Result<LLTGraph> {
        let mut g = self.clone();
        let list = g.edges_mut(kind);
        let pos = list
            .iter()
            .position(|&x| x == e)
            .ok_or_else(|| Error::WrongEdgeType(format!("({},{}) is not a {kind:?} edge", e.0, e.1)))?;
        list.remove(pos);
        Ok(g)
    }

    fn with_edge(&self, kind: EdgeKind, e: (usize, usize)) -> LLTGraph {
        let mut g = self.clone();
        g.edges_mut(kind).push(e);
        g
    }

    /// The edge multigraph on colors `1..=r`; same-color edges become loops.
    pub fn quotient_by_colors(&self) -> Multigraph {
        let edges: Vec<(usize, usize)> = self
            .e1
            .iter()
            .chain(&self.e2)
            .chain(&self.ed)
            .map(|&(a, b)| (self.colors[a], self.colors[b]))
            .collect();
        Multigraph::new(self.num_colors(), &edges).expect("colors in range")
    }

    pub fn f_connected(&self) -> bool {
        self.quotient_by_colors().is_connected()
    }

    pub fn kind_of(&self, e: (usize, usize)) -> Option<EdgeKind> {
        if self.e1.contains(&e) {
            Some(EdgeKind::TypeI)
        } else if self.e2.contains(&e) {
            Some(EdgeKind::TypeII)
        } else if self.ed.contains(&e) {
            Some(EdgeKind::Double)
        } else {
            None
        }
    }
}

impl fmt::Display for LLTGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.labels;
        let edges = |es: &[(usize, usize)]| -> String {
            let v: Vec<String> = es.iter().map(|&(a, b)| format!("[{},{}]", l[a], l[b])).collect();
            format!("[{}]", v.join(","))
        };
        let verts: Vec<String> = l.iter().map(|x| x.to_string()).collect();
        let colors: Vec<String> = l.iter().zip(&self.colors).map(|(x, c)| format!("\"{x}\":{c}")).collect();
        write!(
            f,
            "{{\"vertices\":[{}],\"e1\":{},\"e2\":{},\"ed\":{},\"colors\":{{{}}}}}",
            verts.join(","),
            edges(&self.e1),
            edges(&self.e2),
            edges(&self.ed),
            colors.join(",")
        )
    }
}

impl fmt::Debug for LLTGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Vertices are the cells labelled by shifted content; type I edges go from
/// a cell to the cell below it, type II edges to the cell on its left, and
/// double edges from each cell to every cell it attacks.
pub fn graph_from_tuple(tuple: &ColoredTuple) -> LLTGraph {
    let t = CellTable::new(tuple);
    let e1 = (0..t.len()).filter_map(|i| t.below[i].map(|b| (i, b))).collect();
    let e2 = (0..t.len()).filter_map(|i| t.left[i].map(|l| (i, l))).collect();
    let ed = t.attack_pairs();
    let colors = t.cells.iter().map(|c| tuple.color_of(c)).collect();
    LLTGraph { labels: t.shifted.clone(), e1, e2, ed, colors }
}

#[derive(Clone, Copy)]
enum Bound {
    Gt,
    Ge,
    Lt,
    Le,
}

/// Calls `visit(values, descending)` for every coloring `V -> {1..k}` onto
/// an initial segment that satisfies all type I and type II edges, where
/// `descending` has bit `i` set when double edge `i` is descending.
pub fn visit_packed_colorings<F: FnMut(&[u32], u64)>(g: &LLTGraph, mut visit: F) {
    let n = g.len();
    assert!(g.ed.len() <= 64);
    let mut checks: Vec<Vec<(usize, Bound)>> = vec![Vec::new(); n];
    let mut impossible = false;
    let mut add = |a: usize, b: usize, strict: bool| {
        // constraint value(a) > value(b) (or >=)
        if a == b {
            if strict {
                impossible = true;
            }
            return;
        }
        if a > b {
            checks[a].push((b, if strict { Bound::Gt } else { Bound::Ge }));
        } else {
            checks[b].push((a, if strict { Bound::Lt } else { Bound::Le }));
        }
    };
    for &(a, b) in &g.e1 {
        add(a, b, true);
    }
    for &(a, b) in &g.e2 {
        add(a, b, false);
    }
    if impossible {
        return;
    }
    if n == 0 {
        visit(&[], 0);
        return;
    }
    let mut values = vec![0u32; n];
    let mut counts = vec![0u32; n + 2];
    fn rec<F: FnMut(&[u32], u64)>(
        v: usize,
        g: &LLTGraph,
        checks: &[Vec<(usize, Bound)>],
        values: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        top: u32,
        visit: &mut F,
    ) {
        let n = values.len();
        if v == n {
            let mut desc = 0u64;
            for (i, &(a, b)) in g.ed.iter().enumerate() {
                if values[a] > values[b] {
                    desc |= 1 << i;
                }
            }
            visit(values, desc);
            return;
        }
        let mut lo = 1u32;
        let mut hi = n as u32;
        for &(w, bound) in &checks[v] {
            let x = values[w];
            match bound {
                Bound::Gt => lo = lo.max(x + 1),
                Bound::Ge => lo = lo.max(x),
                Bound::Lt => hi = hi.min(x.saturating_sub(1)),
                Bound::Le => hi = hi.min(x),
            }
        }
        let remaining = (n - v - 1) as u32;
        for x in lo..=hi {
            let new_top = top.max(x);
            let used_below = (1..new_top).filter(|&w| counts[w as usize] > 0 || w == x).count() as u32;
            let missing = new_top - 1 - used_below;
            if missing > remaining {
                continue;
            }
            values[v] = x;
            counts[x as usize] += 1;
            rec(v + 1, g, checks, values, counts, new_top, visit);
            counts[x as usize] -= 1;
        }
    }
    rec(0, g, &checks, &mut values, &mut counts, 0, &mut visit);
}

fn content_of(values: &[u32]) -> Vec<usize> {
    let top = values.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; top];
    for &v in values {
        c[v as usize - 1] += 1;
    }
    c
}

/// Monomial coefficients grouped by the set of descending double edges.
fn grouped_colorings(g: &LLTGraph) -> HashMap<u64, HashMap<Vec<usize>, i64>> {
    let mut out: HashMap<u64, HashMap<Vec<usize>, i64>> = HashMap::new();
    visit_packed_colorings(g, |vals, desc| {
        *out.entry(desc).or_default().entry(content_of(vals)).or_default() += 1;
    });
    out
}

fn expansion_from<I: IntoIterator<Item = (Vec<usize>, QTPoly)>>(degree: usize, terms: I) -> QSymExpansion {
    let mut out = QSymExpansion::zero(QBasis::MonomialQ, degree);
    for (k, c) in terms {
        out.add_term(Composition::new(k).expect("positive parts"), &c);
    }
    out
}

/// `sum_g prod_edges phi_g(edge) x^g` in the monomial basis.
pub fn llt_of_graph(g: &LLTGraph) -> QSymExpansion {
    let mut tally: HashMap<Vec<usize>, Vec<i64>> = HashMap::new();
    visit_packed_colorings(g, |vals, desc| {
        let e = desc.count_ones() as usize;
        let v = tally.entry(content_of(vals)).or_default();
        if v.len() <= e {
            v.resize(e + 1, 0);
        }
        v[e] += 1;
    });
    expansion_from(
        g.len(),
        tally
            .into_iter()
            .map(|(k, v)| (k, QTPoly::from_q_coeffs(v.into_iter().enumerate().map(|(e, c)| (e as i32, c))))),
    )
}

pub fn combination_llt(c: &Combination) -> Option<QSymExpansion> {
    let mut it = c.iter();
    let (c0, g0) = it.next()?;
    let mut acc = llt_of_graph(g0).scale(c0);
    for (c, g) in it {
        acc = acc.add(&llt_of_graph(g).scale(c));
    }
    Some(acc)
}

pub fn local_transform(g: &LLTGraph, edge: (usize, usize), rule: Rule) -> Result<Combination> {
    let (u, v) = edge;
    let q = QTPoly::q();
    let one = QTPoly::one();
    Ok(match rule {
        Rule::Pi1 => {
            let rest = g.without(EdgeKind::TypeI, edge)?;
            let rev = rest.with_edge(EdgeKind::TypeII, (v, u));
            vec![(one.clone(), rest), (-one, rev)]
        }
        Rule::PiD => {
            let rest = g.without(EdgeKind::Double, edge)?;
            let rev = rest.with_edge(EdgeKind::TypeII, (v, u));
            vec![(q.clone(), rest), (&one - &q, rev)]
        }
        Rule::PiPrime => {
            let rest = g.without(EdgeKind::Double, edge)?;
            let rev = rest.with_edge(EdgeKind::TypeII, (v, u));
            let strict = rest.with_edge(EdgeKind::TypeI, edge);
            vec![(one, rev), (q, strict)]
        }
        Rule::PiDoublePrime => {
            let rest = g.without(EdgeKind::Double, edge)?;
            let strict = rest.with_edge(EdgeKind::TypeI, edge);
            vec![(one, rest), (QTPoly::q_minus_one(), strict)]
        }
        Rule::PiTriplePrime => {
            if g.kind_of(edge).is_some() || g.kind_of((v, u)).is_some() {
                return Err(Error::WrongEdgeType(format!("({u},{v}) is already an edge")));
            }
            if g.colors[u] != g.colors[v] {
                // Type I/II edges must stay within a color; drop the coloring.
                let plain = g.with_colors(vec![1; g.len()])?;
                return local_transform(&plain, edge, rule);
            }
            vec![(one.clone(), g.with_edge(EdgeKind::TypeI, edge)), (one, g.with_edge(EdgeKind::TypeII, (v, u)))]
        }
    })
}

/// Applies `rule` to every type I and double edge (the full map into graphs
/// with type II edges only).
pub fn pi_all(g: &LLTGraph) -> Combination {
    let mut combo: Combination = vec![(QTPoly::one(), g.clone())];
    loop {
        let mut next = Vec::new();
        let mut changed = false;
        for (c, h) in combo {
            if let Some(&e) = h.e1.first() {
                changed = true;
                for (c2, h2) in local_transform(&h, e, Rule::Pi1).expect("type I edge") {
                    next.push((&c * &c2, h2));
                }
            } else if let Some(&e) = h.ed.first() {
                changed = true;
                for (c2, h2) in local_transform(&h, e, Rule::PiD).expect("double edge") {
                    next.push((&c * &c2, h2));
                }
            } else {
                next.push((c, h));
            }
        }
        combo = next;
        if !changed {
            return combo;
        }
    }
}

/// `E` is a bitmask over `g.ed`.
pub fn resolve(g: &LLTGraph, e: u64, variant: Resolution) -> LLTGraph {
    let mut out = g.clone();
    out.ed.clear();
    for (i, &(a, b)) in g.ed.iter().enumerate() {
        if e >> i & 1 == 1 {
            out.e1.push((a, b));
        } else if variant != Resolution::Sharp {
            out.e2.push((b, a));
        }
    }
    if variant == Resolution::Hat {
        out.e2.clear();
    }
    out
}

/// Color quotient of `G^E`.
fn quotient_mask(g: &LLTGraph, e: u64) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = g.e1.iter().chain(&g.e2).map(|&(a, b)| (g.colors[a], g.colors[b])).collect();
    for (i, &(a, b)) in g.ed.iter().enumerate() {
        if e >> i & 1 == 1 {
            edges.push((g.colors[a], g.colors[b]));
        }
    }
    Multigraph::new(g.num_colors(), &edges).expect("colors in range")
}

/// Multigraph on colors with one edge per double edge in `E`. Type I edges of
/// `G` join equal colors and would only add loops, which the cumulant does
/// not see.
pub fn resolved_quotient(g: &LLTGraph, e: u64) -> Multigraph {
    let edges: Vec<(usize, usize)> = g
        .ed
        .iter()
        .enumerate()
        .filter(|(i, _)| e >> i & 1 == 1)
        .map(|(_, &(a, b))| (g.colors[a], g.colors[b]))
        .collect();
    Multigraph::new(g.num_colors(), &edges).expect("colors in range")
}

fn connected_mask(g: &LLTGraph, e: u64) -> bool {
    quotient_mask(g, e).is_connected()
}

pub fn graph_family(g: &LLTGraph) -> Result<SubsetFamily<QSymExpansion>> {
    SubsetFamily::from_mask_fn((1..=g.num_colors()).collect(), |m| Ok(llt_of_graph(&g.restrict_colors(m))))
}

pub fn graph_cumulant(g: &LLTGraph) -> Result<QSymExpansion> {
    graph_family(g)?.cumulant_all()
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = Some(mask);
    std::iter::from_fn(move || {
        let s = sub?;
        sub = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

/// `sum over E with G^E f-connected of q^(|E|-r+1) LLT(G^E)`, one subset at a time.
pub fn connected_expansion_literal(g: &LLTGraph) -> Result<QSymExpansion> {
    let r = g.num_colors() as i64;
    let full = if g.ed.is_empty() { 0 } else { u64::MAX >> (64 - g.ed.len()) };
    let terms = subsets(full)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&e| connected_mask(g, e))
        .map(|e| {
            let exp = e.count_ones() as i64 - r + 1;
            if exp < 0 {
                return Err(Error::NegativeExponent(format!("E = {e:b}")));
            }
            Ok(llt_of_graph(&resolve(g, e, Resolution::Sharp)).shift_q(exp as i32))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.iter().fold(QSymExpansion::zero(QBasis::MonomialQ, g.len()), |a, t| a.add(t)))
}

/// Same sum, grouped by coloring: a coloring contributes to `LLT(G^E)` exactly
/// when every edge of `E` descends under it.
pub fn connected_expansion_grouped(g: &LLTGraph) -> Result<QSymExpansion> {
    let r = g.num_colors() as i32;
    let mut weights: HashMap<u64, Vec<i64>> = HashMap::new();
    let mut tally: BTreeMap<Vec<usize>, QTPoly> = BTreeMap::new();
    let mut negative = None;
    for (desc, contents) in grouped_colorings(g) {
        let w = weights.entry(desc).or_insert_with(|| {
            let mut v = vec![0i64; desc.count_ones() as usize + 1];
            for e in subsets(desc) {
                if connected_mask(g, e) {
                    let k = e.count_ones() as i32 - r + 1;
                    if k < 0 {
                        negative = Some(e);
                    } else {
                        v[k as usize] += 1;
                    }
                }
            }
            v
        });
        let poly = QTPoly::from_q_coeffs(w.iter().enumerate().map(|(e, &c)| (e as i32, c)));
        for (k, n) in contents {
            *tally.entry(k).or_default() += &poly.scale(n);
        }
    }
    if let Some(e) = negative {
        return Err(Error::NegativeExponent(format!("E = {e:b}")));
    }
    Ok(expansion_from(g.len(), tally))
}

/// Both sides of the connected expansion, evaluated at `q + 1`.
pub fn verify_connected_expansion(g: &LLTGraph) -> Result<bool> {
    let lhs = graph_cumulant(g)?.substitute_q(&(&QTPoly::q() + &QTPoly::one()))?;
    let rhs = connected_expansion_grouped(g)?;
    if g.ed.len() <= 8 && connected_expansion_literal(g)? != rhs {
        return Ok(false);
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug)]
pub struct MonomialTerm {
    /// Bitmask over the double edges of the source graph.
    pub e: u64,
    /// Inversion polynomial of the color quotient of the edges in `E`.
    pub inversion: QTPoly,
    pub graph: LLTGraph,
    /// `LLT` of the tilde resolution; free of `q`.
    pub llt: QSymExpansion,
}

/// The decomposition `kappa = sum_E I(hat G^E / f) LLT(tilde G^E)`. Each
/// coloring belongs to `LLT(tilde G^E)` for exactly one `E`, its set of
/// descending double edges.
pub fn monomial_positive_expansion(g: &LLTGraph) -> Vec<MonomialTerm> {
    let mut groups: Vec<(u64, HashMap<Vec<usize>, i64>)> = grouped_colorings(g).into_iter().collect();
    groups.sort_by_key(|(e, _)| *e);
    groups
        .into_par_iter()
        .map(|(e, contents)| {
            MonomialTerm {
                e,
                inversion: inversion_poly(&resolved_quotient(g, e)),
                graph: resolve(g, e, Resolution::Tilde),
                llt: expansion_from(g.len(), contents.into_iter().map(|(k, n)| (k, QTPoly::constant(n)))),
            }
        })
        .collect()
}

pub fn sum_monomial_terms(g: &LLTGraph, terms: &[MonomialTerm]) -> QSymExpansion {
    terms
        .iter()
        .fold(QSymExpansion::zero(QBasis::MonomialQ, g.len()), |a, t| a.add(&t.llt.scale(&t.inversion)))
}

/// The monomial-positive decomposition reproduces the cumulant, every
/// inversion polynomial has nonnegative coefficients, and for small graphs
/// each grouped `LLT(tilde G^E)` matches a direct computation.
pub fn verify_monomial_positive(g: &LLTGraph) -> Result<bool> {
    let terms = monomial_positive_expansion(g);
    let kappa = graph_cumulant(g)?;
    if sum_monomial_terms(g, &terms) != kappa {
        return Ok(false);
    }
    if terms.iter().any(|t| !t.inversion.has_nonnegative_coeffs()) {
        return Ok(false);
    }
    if g.ed.len() <= 6 {
        let full = if g.ed.is_empty() { 0 } else { u64::MAX >> (64 - g.ed.len()) };
        for e in subsets(full) {
            let direct = llt_of_graph(&resolve(g, e, Resolution::Tilde));
            let grouped = terms.iter().find(|t| t.e == e).map(|t| t.llt.clone());
            match grouped {
                Some(x) if x == direct => {}
                None if direct.is_zero() => {}
                _ => return Ok(false),
            }
        }
    }
    let positive = kappa.iter().all(|(_, c)| c.has_nonnegative_coeffs());
    Ok(positive)
}

/// `kappa = sum_T I(hat G^(E_T) / f) F_Des(T)` over standard fillings `T` of
/// the tuple, where `E_T` is the set of double edges inverted by `T`. Fillings
/// whose inverted edges do not connect the colors contribute nothing.
pub fn fundamental_cumulant_expansion(tuple: &ColoredTuple) -> QSymExpansion {
    let table = CellTable::new(tuple);
    let g = graph_from_tuple(tuple);
    let n = table.len();
    let mut weights: HashMap<u64, Option<QTPoly>> = HashMap::new();
    let mut tally: BTreeMap<Vec<usize>, QTPoly> = BTreeMap::new();
    let mut pos = vec![0i64; n + 1];
    visit_fillings(&table, Fill::Standard, |t, _| {
        let e = g
            .ed
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| t[a] > t[b])
            .fold(0u64, |m, (i, _)| m | 1 << i);
        let w = weights.entry(e).or_insert_with(|| {
            let quot = resolved_quotient(&g, e);
            quot.is_connected().then(|| inversion_poly(&quot))
        });
        let Some(w) = w else { return };
        for (i, &v) in t.iter().enumerate() {
            pos[v as usize] = table.shifted[i];
        }
        let des: Vec<usize> = (1..n).filter(|&i| pos[i + 1] < pos[i]).collect();
        *tally.entry(Composition::from_subset(n, &des).parts().to_vec()).or_default() += &*w;
    });
    let mut out = QSymExpansion::zero(QBasis::Fundamental, n);
    for (k, c) in tally {
        out.add_term(Composition::new(k).expect("nonzero parts"), &c);
    }
    out
}

/// The fundamental expansion against the cumulant of the tuple's LLT family.
pub fn verify_fundamental_cumulant(tuple: &ColoredTuple) -> Result<bool> {
    let kappa = llt_cumulant(tuple, Normalization::Plain)?;
    Ok(fundamental_cumulant_expansion(tuple).to_monomialq() == kappa)
}

/// Hook Schur coefficients of the cumulant read off the fundamental expansion,
/// checked against the full Schur expansion.
pub fn verify_cumulant_hooks(tuple: &ColoredTuple) -> Result<bool> {
    let from_f = fundamental_cumulant_expansion(tuple).hook_coefficients();
    let full = llt_cumulant(tuple, Normalization::Plain)?.to_schur()?.hook_rows();
    Ok(from_f == full)
}

/// `LLT(G) = sum_E q^|E| LLT(tilde G^E) = sum_E (q-1)^|E| LLT(G^E)`.
pub fn verify_resolution_sums(g: &LLTGraph) -> bool {
    let full = if g.ed.is_empty() { 0 } else { u64::MAX >> (64 - g.ed.len()) };
    let target = llt_of_graph(g);
    let mut a = QSymExpansion::zero(QBasis::MonomialQ, g.len());
    let mut b = a.clone();
    for e in subsets(full) {
        let k = e.count_ones();
        a = a.add(&llt_of_graph(&resolve(g, e, Resolution::Tilde)).shift_q(k as i32));
        b = b.add(&llt_of_graph(&resolve(g, e, Resolution::Sharp)).scale(&QTPoly::q_minus_one().pow(k)));
    }
    a == target && b == target
}

/// `prod_B LLT(G|V_B) = sum_E LLT(tilde G^E) prod_B q^|E_B|` for the set
/// partition of colors given by block masks.
pub fn verify_partition_product(g: &LLTGraph, blocks: &[u32]) -> bool {
    let lhs = blocks[1..]
        .iter()
        .fold(llt_of_graph(&g.restrict_colors(blocks[0])), |acc, &b| acc.mul(&llt_of_graph(&g.restrict_colors(b))));
    let same_block: u64 = g
        .ed
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| {
            blocks.iter().any(|&m| m >> (g.colors[a] - 1) & 1 == 1 && m >> (g.colors[b] - 1) & 1 == 1)
        })
        .fold(0, |m, (i, _)| m | 1 << i);
    let full = if g.ed.is_empty() { 0 } else { u64::MAX >> (64 - g.ed.len()) };
    let mut rhs = QSymExpansion::zero(QBasis::MonomialQ, g.len());
    for e in subsets(full) {
        rhs = rhs.add(&llt_of_graph(&resolve(g, e, Resolution::Tilde)).shift_q((e & same_block).count_ones() as i32));
    }
    lhs == rhs
}

/// Every local rule preserves `LLT` on every applicable edge of `g`.
pub fn verify_arrow_relations(g: &LLTGraph) -> bool {
    let target = llt_of_graph(g);
    let same = |c: Combination| combination_llt(&c).is_some_and(|x| x == target);
    for &e in &g.e1 {
        if !same(local_transform(g, e, Rule::Pi1).unwrap()) {
            return false;
        }
    }
    for &e in &g.ed {
        for rule in [Rule::PiD, Rule::PiPrime, Rule::PiDoublePrime] {
            if !same(local_transform(g, e, rule).unwrap()) {
                return false;
            }
        }
    }
    for u in 0..g.len() {
        for v in 0..g.len() {
            if u != v && g.kind_of((u, v)).is_none() && g.kind_of((v, u)).is_none() {
                let plain = g.with_colors(vec![1; g.len()]).unwrap();
                if !combination_llt(&local_transform(&plain, (u, v), Rule::PiTriplePrime).unwrap())
                    .is_some_and(|x| x == target)
                {
                    return false;
                }
            }
        }
    }
    combination_llt(&pi_all(g)).is_some_and(|x| x == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::llt::llt;
    use crate::shapes::{Partition, SkewShape};

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(Partition::new(o.to_vec()).unwrap(), Partition::new(i.to_vec()).unwrap()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn graph(n: usize, e1: &[(usize, usize)], e2: &[(usize, usize)], ed: &[(usize, usize)]) -> LLTGraph {
        LLTGraph::new((0..n as i64).collect(), e1.to_vec(), e2.to_vec(), ed.to_vec(), None).unwrap()
    }

    #[test]
    fn fundamental_cumulant_small() {
        let shapes = vec![sk(&[2], &[]), sk(&[1, 1], &[]), sk(&[2, 1], &[1])];
        for colors in [vec![1, 2, 3], vec![1, 2, 2], vec![1, 1, 2], vec![1, 2, 1]] {
            let nu = ColoredTuple::new(shapes.clone(), colors).unwrap();
            assert!(verify_fundamental_cumulant(&nu).unwrap(), "{nu}");
            assert!(verify_cumulant_hooks(&nu).unwrap(), "{nu}");
        }
    }

    #[test]
    fn small_graphs() {
        let one = graph(1, &[], &[], &[]);
        assert_eq!(llt_of_graph(&one), QSymExpansion::monomial(comp(&[1]), &QTPoly::one()));
        let d = graph(2, &[], &[], &[(0, 1)]);
        let f = llt_of_graph(&d);
        assert_eq!(f.coeff(&comp(&[2])), QTPoly::one());
        assert_eq!(f.coeff(&comp(&[1, 1])), "1 + q".parse().unwrap());
        let s = graph(2, &[(0, 1)], &[], &[]);
        assert_eq!(llt_of_graph(&s), QSymExpansion::monomial(comp(&[1, 1]), &QTPoly::one()));
    }

    #[test]
    fn tuple_graphs_match_llt() {
        let tuples = vec![
            ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]),
            ColoredTuple::uncolored(vec![sk(&[3, 2], &[1]), sk(&[1, 1], &[])]),
            ColoredTuple::new(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])], vec![1, 2, 1]).unwrap(),
        ];
        for t in tuples {
            let g = graph_from_tuple(&t);
            assert_eq!(llt_of_graph(&g), llt(&t), "{t}");
        }
    }

    #[test]
    fn figure_graph() {
        let t = ColoredTuple::uncolored(vec![sk(&[3, 2], &[1]), sk(&[1, 1], &[])]);
        let g = graph_from_tuple(&t);
        let mut labels = g.labels.clone();
        labels.sort_unstable();
        assert_eq!(labels, vec![-2, -1, 0, 1, 2, 4]);
        let mut pairs: Vec<(i64, i64)> = g.ed.iter().map(|&(a, b)| (g.labels[a], g.labels[b])).collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![(-2, -1), (-1, 0), (0, 1), (1, 2)]);
    }

    #[test]
    fn transforms_preserve_llt() {
        let g = graph(3, &[(0, 1)], &[(1, 2)], &[(0, 2)]);
        assert!(verify_arrow_relations(&g));
        let d = graph(2, &[], &[], &[(0, 1)]);
        let c = local_transform(&d, (0, 1), Rule::PiD).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(combination_llt(&c).unwrap(), llt_of_graph(&d));
        assert!(matches!(local_transform(&d, (0, 1), Rule::Pi1), Err(Error::WrongEdgeType(_))));
        assert!(verify_resolution_sums(&g));
    }

    #[test]
    fn cumulants_of_graphs() {
        let d = graph(2, &[], &[], &[(0, 1)]).with_colors(vec![1, 2]).unwrap();
        assert_eq!(graph_cumulant(&d).unwrap(), QSymExpansion::monomial(comp(&[1, 1]), &QTPoly::one()));
        assert!(verify_connected_expansion(&d).unwrap());
        assert!(verify_monomial_positive(&d).unwrap());
        let t = ColoredTuple::new(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])], vec![1, 2, 1]).unwrap();
        let g = graph_from_tuple(&t);
        let plain = crate::cumulants::llt_cumulant(&t, crate::cumulants::Normalization::Plain).unwrap();
        assert_eq!(graph_cumulant(&g).unwrap(), plain);
        assert!(verify_connected_expansion(&g).unwrap());
        let terms = monomial_positive_expansion(&g);
        assert_eq!(sum_monomial_terms(&g, &terms), graph_cumulant(&g).unwrap());
        assert!(verify_monomial_positive(&g).unwrap());
        assert!(verify_partition_product(&g, &[1, 2]));
    }

    #[test]
    fn connectivity() {
        let g = graph(3, &[], &[], &[(0, 1)]).with_colors(vec![1, 2, 3]).unwrap();
        assert!(!g.f_connected());
        assert!(graph(3, &[], &[], &[]).f_connected());
    }
}
