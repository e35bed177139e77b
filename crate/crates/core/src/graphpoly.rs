//! Multigraphs with loops, the Tutte polynomial and the inversion polynomial
//! of rooted spanning trees.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cumulants::SubsetFamily;
use crate::error::{Error, Result};
use crate::ring::QTPoly;

/// Multigraph on vertices `1..=n`; edges are unordered, repeats encode
/// multiplicity and `(i, i)` is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) outside 1..={n}")));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(Multigraph { n, edges: out })
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn loops(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Number of edges with both endpoints in the vertex mask (bit `i` is
    /// vertex `i + 1`).
    pub fn edges_within(&self, mask: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| mask >> (a - 1) & 1 == 1 && mask >> (b - 1) & 1 == 1)
            .count()
    }

    /// Distinct non-loop edges.
    pub fn simple_edges(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.edges.iter().copied().filter(|(a, b)| a != b).collect();
        v.dedup();
        v
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a - 1, b - 1);
        }
        uf.components == 1 || self.n == 0
    }

    pub fn add_loop(&self, v: usize) -> Multigraph {
        let mut g = self.clone();
        g.edges.push((v, v));
        g.edges.sort_unstable();
        g
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "{{\"n\":{},\"edges\":[{}]}}", self.n, e.join(","))
    }
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }
}

/// Polynomial in `x` and `y` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct XYPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl XYPoly {
    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn eval(&self, x: &QTPoly, y: &QTPoly) -> QTPoly {
        self.terms
            .iter()
            .map(|(&(i, j), c)| &(&x.pow(i) * &y.pow(j)) * &QTPoly::constant(c.clone()))
            .sum()
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `sum_H (x-1)^(c(H)-1) (y-1)^(|H|-|V|+c(H))` over all edge subsets `H`.
pub fn tutte(g: &Multigraph) -> XYPoly {
    let m = g.num_edges();
    let mut counts: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for bits in 0u64..1 << m {
        let mut uf = UnionFind::new(g.n);
        let mut size = 0;
        for (k, &(a, b)) in g.edges.iter().enumerate() {
            if bits >> k & 1 == 1 {
                size += 1;
                uf.union(a - 1, b - 1);
            }
        }
        let c = uf.components;
        let key = ((c - 1) as u32, (size + c - g.n) as u32);
        *counts.entry(key).or_insert_with(BigInt::zero) += 1;
    }
    let mut out = XYPoly::default();
    for ((a, b), n) in counts {
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                out.add_term(i, j, &n * binomial(a, i) * binomial(b, j) * sign);
            }
        }
    }
    out
}

/// Spanning trees of the simple graph underlying `g`, as edge lists.
pub fn spanning_trees(g: &Multigraph) -> Vec<Vec<(usize, usize)>> {
    let edges = g.simple_edges();
    let mut out = Vec::new();
    fn rec(
        i: usize,
        edges: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        uf: &UnionFind,
        need: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == need {
            out.push(chosen.clone());
            return;
        }
        if edges.len() - i < need - chosen.len() {
            return;
        }
        let (a, b) = edges[i];
        let mut with = uf.clone();
        if with.union(a - 1, b - 1) {
            chosen.push((a, b));
            rec(i + 1, edges, chosen, &with, need, out);
            chosen.pop();
        }
        rec(i + 1, edges, chosen, uf, need, out);
    }
    if g.n == 0 {
        return out;
    }
    rec(0, &edges, &mut Vec::new(), &UnionFind::new(g.n), g.n - 1, &mut out);
    out
}

/// Parent array (index = vertex) of a tree rooted at vertex 1.
fn parents(n: usize, tree: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in tree {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![0; n + 1];
    let mut stack = vec![1];
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    parent
}

/// Weighted count of `kappa`-inversions of a spanning tree rooted at 1.
pub fn kappa(g: &Multigraph, tree: &[(usize, usize)]) -> usize {
    let n = g.n;
    let parent = parents(n, tree);
    let is_ancestor = |i: usize, j: usize| {
        let mut v = j;
        while v != 1 {
            v = parent[v];
            if v == i {
                return true;
            }
        }
        false
    };
    let mut total = 0;
    for i in 2..=n {
        for j in 2..i {
            if is_ancestor(i, j) {
                total += g.multiplicity(parent[i], j);
            }
        }
    }
    total
}

/// `q^loops * sum_T q^kappa(T) prod_{ij in T} [e_ij]_q` over spanning trees of
/// the underlying simple graph, rooted at vertex 1.
pub fn inversion_poly(g: &Multigraph) -> QTPoly {
    let total: QTPoly = spanning_trees(g)
        .iter()
        .map(|t| {
            let w: QTPoly = t.iter().map(|&(a, b)| QTPoly::q_integer(g.multiplicity(a, b) as u32)).product();
            w.shift_q(kappa(g, t) as i32)
        })
        .sum();
    total.shift_q(g.loops() as i32)
}

/// The cumulant of the family `B -> q^(e_B)` over all vertices.
pub fn edge_cumulant(g: &Multigraph) -> Result<QTPoly> {
    let family = SubsetFamily::from_mask_fn((1..=g.n).collect(), |m| Ok(QTPoly::q_pow(g.edges_within(m) as i32)))?;
    family.cumulant_all()
}

/// The three values `(I_G(q), Tu_G(1,q), cumulant)`.
pub fn tutte_triple(g: &Multigraph) -> Result<(QTPoly, QTPoly, QTPoly)> {
    let inv = inversion_poly(g);
    let tu = tutte(g).eval(&QTPoly::one(), &QTPoly::q());
    let k = edge_cumulant(g)?;
    Ok((inv, tu, k))
}

pub fn verify_tutte_cumulant(g: &Multigraph) -> Result<bool> {
    let (a, b, c) = tutte_triple(g)?;
    Ok(a == b && b == c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, e).unwrap()
    }

    #[test]
    fn tutte_examples() {
        let path = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(tutte(&path).to_string(), "x^2");
        assert_eq!(tutte(&g(1, &[(1, 1)])).to_string(), "y");
        let k3 = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(tutte(&k3).to_string(), "x^2 + x + y");
        assert_eq!(tutte(&k3).eval(&QTPoly::one(), &QTPoly::q()).to_string(), "q + 2");
    }

    #[test]
    fn inversion_examples() {
        assert!(inversion_poly(&g(2, &[(1, 2)])).is_one());
        assert_eq!(inversion_poly(&g(2, &[(1, 2), (1, 2)])).to_string(), "q + 1");
        assert_eq!(inversion_poly(&g(3, &[(1, 2), (2, 3), (1, 3)])).to_string(), "q + 2");
        assert!(inversion_poly(&g(4, &[(1, 2), (3, 4)])).is_zero());
    }

    #[test]
    fn triple_on_small_graphs() {
        for e in [
            vec![(1, 2)],
            vec![(1, 2), (1, 2), (2, 3), (1, 1)],
            vec![(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)],
            vec![(1, 2), (3, 4)],
        ] {
            let n = e.iter().map(|&(a, b)| a.max(b)).max().unwrap();
            let gr = g(n, &e);
            let (a, b, c) = tutte_triple(&gr).unwrap();
            assert_eq!(a, b, "{gr}");
            assert_eq!(b, c, "{gr}");
        }
    }

    #[test]
    fn loop_multiplies_by_q() {
        let gr = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(inversion_poly(&gr.add_loop(2)), inversion_poly(&gr).shift_q(1));
    }
}
