//! Instance generators for exhaustive and seeded-random checks.
//!
//! Skew shapes are taken connected and translated so that their lowest row
//! is row 1 and their leftmost column is column 1. Colorings are listed up to
//! renaming of colors, as restricted growth strings.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphpoly::Multigraph;
use crate::lltgraphs::LLTGraph;
use crate::shapes::{partitions, ColoredTuple, Partition, SkewShape};
use crate::special::{schroder_paths, schroder_to_tuple};

fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Connected skew shapes with `n` cells touching row 1 and column 1.
pub fn connected_skew_shapes(n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for outer in partitions_in_box(n, n) {
        let total: usize = outer.iter().sum();
        if total < n {
            continue;
        }
        let rows = outer.len();
        for inner in partitions_in_box(rows, n) {
            if inner.iter().zip(&outer).any(|(a, b)| a > b) {
                continue;
            }
            if total - inner.iter().sum::<usize>() != n {
                continue;
            }
            let (Ok(o), Ok(i)) = (Partition::new(outer.clone()), Partition::new(inner.clone())) else {
                continue;
            };
            let Ok(s) = SkewShape::new(o, i) else { continue };
            let cells = s.cells();
            let touches_col1 = cells.iter().any(|c| c.0 == 1);
            let touches_row1 = cells.iter().any(|c| c.1 == 1);
            let top = cells.iter().map(|c| c.1).max().unwrap_or(0) as usize;
            if touches_col1 && touches_row1 && top == rows && s.is_connected() {
                out.push(s);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Ordered tuples of connected skew shapes with `1 <= total <= max_size` and
/// at most `max_shapes` shapes, all colored 1.
pub fn skew_tuples(max_size: usize, max_shapes: usize) -> Vec<ColoredTuple> {
    let shapes: Vec<Vec<SkewShape>> = (0..=max_size).map(connected_skew_shapes).collect();
    let mut out = Vec::new();
    fn go(
        left: usize,
        max_shapes: usize,
        shapes: &[Vec<SkewShape>],
        cur: &mut Vec<SkewShape>,
        out: &mut Vec<ColoredTuple>,
    ) {
        if !cur.is_empty() {
            out.push(ColoredTuple::uncolored(cur.clone()));
        }
        if cur.len() == max_shapes {
            return;
        }
        for s in 1..=left {
            for sh in &shapes[s] {
                cur.push(sh.clone());
                go(left - s, max_shapes, shapes, cur, out);
                cur.pop();
            }
        }
    }
    go(max_size, max_shapes, &shapes, &mut Vec::new(), &mut out);
    out
}

/// Tuples of exactly three connected skew shapes with total size at most
/// `max_size`.
pub fn skew_triples(max_size: usize) -> Vec<ColoredTuple> {
    skew_tuples(max_size, 3).into_iter().filter(|t| t.len() == 3).collect()
}

/// Restricted growth strings of length `len` using between `min_r` and
/// `max_r` colors, as colorings onto `1..=r`.
pub fn colorings(len: usize, min_r: usize, max_r: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, max_r: usize, cur: &mut Vec<usize>, top: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(top + 1).min(max_r) {
            cur.push(c);
            go(len, max_r, cur, top.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_r, &mut Vec::new(), 0, &mut out);
    out.retain(|c| {
        let r = c.iter().copied().max().unwrap_or(0);
        r >= min_r
    });
    out
}

/// Every coloring of every tuple, up to renaming colors.
pub fn colored_tuples(tuples: &[ColoredTuple], max_r: usize) -> Vec<ColoredTuple> {
    let mut out = Vec::new();
    for t in tuples {
        for c in colorings(t.len(), 1, max_r) {
            out.push(t.with_colors(c).expect("restricted growth strings are onto"));
        }
    }
    out
}

/// One vertical-strip tuple per Schröder path of each size up to `max_size`.
pub fn vertical_tuples(max_size: usize) -> Vec<ColoredTuple> {
    (1..=max_size)
        .flat_map(schroder_paths)
        .map(|p| schroder_to_tuple(&p).expect("every path is realised"))
        .collect()
}

/// Ordered tuples of `1..=max_r` nonempty partitions with total size at most
/// `max_total`.
pub fn partition_tuples(max_total: usize, max_r: usize) -> Vec<Vec<Partition>> {
    let by_size: Vec<Vec<Partition>> = (0..=max_total).map(partitions).collect();
    let mut out = Vec::new();
    fn go(
        left: usize,
        max_r: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_r {
            return;
        }
        for s in 1..=left {
            for p in &by_size[s] {
                cur.push(p.clone());
                go(left - s, max_r, by_size, cur, out);
                cur.pop();
            }
        }
    }
    go(max_total, max_r, &by_size, &mut Vec::new(), &mut out);
    out
}

/// Multigraphs on `1..=n` for `1 <= n <= max_vertices` with at most
/// `max_edges` edges, loops allowed, one per multiset of edges.
pub fn multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect();
        fn go(
            n: usize,
            start: usize,
            left: usize,
            pairs: &[(usize, usize)],
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Multigraph>,
        ) {
            out.push(Multigraph::new(n, cur).expect("vertices in range"));
            if left == 0 {
                return;
            }
            for i in start..pairs.len() {
                cur.push(pairs[i]);
                go(n, i, left - 1, pairs, cur, out);
                cur.pop();
            }
        }
        go(n, 0, max_edges, &pairs, &mut Vec::new(), &mut out);
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random multigraph on `n` vertices with up to `max_edges` edges.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> Multigraph {
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    Multigraph::new(n, &edges).expect("vertices in range")
}

/// A random colored LLT graph with at most `max_vertices` vertices and at most
/// `max_double` double edges. Type I and type II edges join equal colors.
pub fn random_llt_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_double: usize) -> LLTGraph {
    let n = rng.gen_range(1..=max_vertices);
    let r = rng.gen_range(1..=n.min(4));
    let mut colors: Vec<usize> = (1..=r).collect();
    while colors.len() < n {
        colors.push(rng.gen_range(1..=r));
    }
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        colors.swap(i, j);
    }
    let mut used = std::collections::HashSet::new();
    let mut e1 = Vec::new();
    let mut e2 = Vec::new();
    let mut ed = Vec::new();
    let nd = rng.gen_range(0..=max_double);
    let mut tries = 0;
    while ed.len() < nd && tries < 100 && n > 1 {
        tries += 1;
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && used.insert((a.min(b), a.max(b))) {
            ed.push((a, b));
        }
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b || colors[a] != colors[b] || !used.insert((a.min(b), a.max(b))) {
            continue;
        }
        if rng.gen_bool(0.5) {
            e1.push((a, b));
        } else {
            e2.push((a, b));
        }
    }
    let labels = (0..n as i64).collect();
    LLTGraph::new(labels, e1, e2, ed, Some(colors)).expect("valid by construction")
}
