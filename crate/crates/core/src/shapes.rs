//! Partitions, skew shapes and colored tuples of skew shapes.
//!
//! French convention throughout: row 1 is the bottom row, cell `(x, y)` sits
//! in column `x` and row `y`, and its content is `x - y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `self` dominates `other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Sum of parts, i.e. the union of the columns.
    pub fn merge(parts: &[&Partition]) -> Partition {
        let len = parts.iter().map(|p| p.len()).max().unwrap_or(0);
        Partition((0..len).map(|i| parts.iter().map(|p| p.part(i)).sum()).collect())
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), ...`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    /// Position of the shape in the tuple, 0-based.
    pub shape: usize,
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.x - self.y
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidInput(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        if y < 1 || x < 1 {
            return false;
        }
        let r = (y - 1) as usize;
        (x as usize) > self.inner.part(r) && (x as usize) <= self.outer.part(r)
    }

    /// Cells as `(x, y)`, row by row from the bottom, left to right.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for r in 0..self.outer.len() {
            for x in self.inner.part(r) + 1..=self.outer.part(r) {
                out.push((x as i64, r as i64 + 1));
            }
        }
        out
    }

    /// Connected and free of 2x2 blocks.
    pub fn is_ribbon(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        if cells
            .iter()
            .any(|&(x, y)| self.contains(x + 1, y) && self.contains(x, y + 1) && self.contains(x + 1, y + 1))
        {
            return false;
        }
        self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            let (x, y) = cells[i];
            for (j, &(a, b)) in cells.iter().enumerate() {
                if !seen[j] && (a - x).abs() + (b - y).abs() == 1 {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == cells.len()
    }

    /// Shape of the form `(1^(n+k)) / (1^k)`.
    pub fn is_vertical_strip(&self) -> bool {
        self.outer.parts().iter().all(|&p| p == 1) && self.inner.parts().iter().all(|&p| p == 1)
    }

    /// `(1^(n+k)) / (1^k)`
    pub fn vertical_strip(n: usize, k: usize) -> Self {
        SkewShape {
            outer: Partition(vec![1; n + k]),
            inner: Partition(vec![1; k]),
        }
    }

    /// The skew shape with exactly the given cells, if they form one.
    pub fn from_cells(cells: &[(i64, i64)]) -> Result<Self> {
        let top = cells.iter().map(|c| c.1).max().unwrap_or(0);
        let mut rows: Vec<(usize, usize)> = Vec::new();
        for y in 1..=top {
            let xs: Vec<i64> = cells.iter().filter(|c| c.1 == y).map(|c| c.0).collect();
            if xs.is_empty() {
                rows.push((0, 0));
                continue;
            }
            let lo = *xs.iter().min().unwrap();
            let hi = *xs.iter().max().unwrap();
            if lo < 1 || (hi - lo + 1) as usize != xs.len() {
                return Err(Error::InvalidInput("cells do not form a skew shape".into()));
            }
            rows.push((lo as usize - 1, hi as usize));
        }
        // Empty rows take the width of the row below so that both boundaries stay monotone.
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let n = rows.len();
        for i in 0..n {
            let (a, b) = rows[i];
            if a == 0 && b == 0 {
                let fill = (i + 1..n).map(|j| rows[j].1).max().unwrap_or(0);
                outer.push(fill);
                inner.push(fill);
            } else {
                outer.push(b);
                inner.push(a);
            }
        }
        let outer = Partition::new(outer)?;
        let inner = Partition::new(inner)?;
        let s = SkewShape::new(outer, inner)?;
        let mut a = s.cells();
        let mut b = cells.to_vec();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::InvalidInput("cells do not form a skew shape".into()));
        }
        Ok(s)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tuple of skew shapes with a surjective coloring onto `1..=r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTuple {
    shapes: Vec<SkewShape>,
    colors: Vec<usize>,
}

impl ColoredTuple {
    pub fn new(shapes: Vec<SkewShape>, colors: Vec<usize>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::InvalidInput("empty tuple".into()));
        }
        if shapes.len() != colors.len() {
            return Err(Error::InvalidInput(format!(
                "{} shapes but {} colors",
                shapes.len(),
                colors.len()
            )));
        }
        let r = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) || (1..=r).any(|c| !colors.contains(&c)) {
            return Err(Error::InvalidInput(format!("coloring {colors:?} is not onto 1..{r}")));
        }
        Ok(ColoredTuple { shapes, colors })
    }

    /// Every shape gets color 1.
    pub fn uncolored(shapes: Vec<SkewShape>) -> Self {
        let n = shapes.len();
        ColoredTuple { shapes, colors: vec![1; n] }
    }

    /// Shape `i` gets color `i + 1`.
    pub fn bijective(shapes: Vec<SkewShape>) -> Self {
        let n = shapes.len();
        ColoredTuple { shapes, colors: (1..=n).collect() }
    }

    pub fn shapes(&self) -> &[SkewShape] {
        &self.shapes
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn with_colors(&self, colors: Vec<usize>) -> Result<Self> {
        ColoredTuple::new(self.shapes.clone(), colors)
    }

    /// Number of shapes.
    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.shapes.iter().map(|s| s.size()).sum()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, s) in self.shapes.iter().enumerate() {
            for (x, y) in s.cells() {
                out.push(Cell { shape: i, x, y });
            }
        }
        out
    }

    pub fn contains(&self, c: &Cell) -> bool {
        c.shape < self.len() && self.shapes[c.shape].contains(c.x, c.y)
    }

    pub fn color_of(&self, c: &Cell) -> usize {
        self.colors[c.shape]
    }

    pub fn shifted_content(&self, c: &Cell) -> i64 {
        self.len() as i64 * c.content() + c.shape as i64
    }

    pub fn attacks(&self, a: &Cell, b: &Cell) -> bool {
        let d = self.shifted_content(b) - self.shifted_content(a);
        0 < d && d < self.len() as i64
    }

    /// Cells lying directly above another cell of the same shape.
    pub fn des_cells(&self) -> Vec<Cell> {
        self.cells()
            .into_iter()
            .filter(|c| self.shapes[c.shape].contains(c.x, c.y - 1))
            .collect()
    }

    pub fn a_stat(&self) -> usize {
        let cells = self.cells();
        self.des_cells()
            .iter()
            .map(|d| {
                cells
                    .iter()
                    .filter(|c| c.content() == d.content() && self.shifted_content(c) > self.shifted_content(d))
                    .count()
            })
            .sum()
    }

    /// For each descent cell, the number of cells of its own shape whose
    /// content is at most its content (the cell itself included).
    pub fn maj_stat(&self) -> usize {
        let cells = self.cells();
        self.des_cells()
            .iter()
            .map(|d| {
                cells
                    .iter()
                    .filter(|c| c.shape == d.shape && c.content() <= d.content())
                    .count()
            })
            .sum()
    }

    pub fn is_ribbon_tuple(&self) -> Result<()> {
        for (i, s) in self.shapes.iter().enumerate() {
            if !s.is_ribbon() {
                return Err(Error::NotRibbon(i + 1));
            }
        }
        Ok(())
    }

    pub fn is_vertical_strip_tuple(&self) -> Result<()> {
        for (i, s) in self.shapes.iter().enumerate() {
            if !s.is_vertical_strip() {
                return Err(Error::NotVerticalStrip(i + 1));
            }
        }
        Ok(())
    }

    /// Sub-tuple of the shapes carrying the given colors, recolored onto
    /// `1..=|colors|` preserving the relative order of colors.
    pub fn restrict(&self, colors: &[usize]) -> Result<ColoredTuple> {
        let mut wanted: Vec<usize> = colors.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        let mut shapes = Vec::new();
        let mut out_colors = Vec::new();
        for (s, &c) in self.shapes.iter().zip(&self.colors) {
            if let Ok(pos) = wanted.binary_search(&c) {
                shapes.push(s.clone());
                out_colors.push(pos + 1);
            }
        }
        if shapes.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        ColoredTuple::new(shapes, out_colors).map_err(|_| Error::EmptyRestriction)
    }

    /// Restriction to a bitmask of colors (bit `i` is color `i + 1`).
    pub fn restrict_mask(&self, mask: u32) -> Result<ColoredTuple> {
        let colors: Vec<usize> = (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        self.restrict(&colors)
    }
}

impl fmt::Display for ColoredTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shapes.iter().map(|s| s.to_string()).collect();
        let c: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] colors [{}]", s.join(", "), c.join(","))
    }
}

impl fmt::Debug for ColoredTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ribbon read from its bottom-right cell, `true` meaning the next cell
/// is above and `false` that it is to the left, anchored so that the
/// bottom-right cell has content 0.
pub fn ribbon_from_steps(steps: &[bool]) -> SkewShape {
    let lefts = steps.iter().filter(|&&u| !u).count() as i64;
    let x0 = lefts + 1;
    let mut cells = vec![(x0, x0)];
    let (mut x, mut y) = (x0, x0);
    for &up in steps {
        if up {
            y += 1;
        } else {
            x -= 1;
        }
        cells.push((x, y));
    }
    SkewShape::from_cells(&cells).expect("a ribbon is a skew shape")
}

/// All ribbons of size `k` anchored at content 0.
pub fn anchored_ribbons(k: usize) -> Vec<SkewShape> {
    assert!(k >= 1);
    (0..1u64 << (k - 1))
        .map(|bits| {
            let steps: Vec<bool> = (0..k - 1).map(|i| bits >> i & 1 == 1).collect();
            ribbon_from_steps(&steps)
        })
        .collect()
}

/// The tuples indexing the Macdonald expansion of `lambda`: shape `j` runs
/// over anchored ribbons of size `lambda'_j`.
pub fn ribbon_tuples_for(lambda: &Partition) -> Vec<Vec<SkewShape>> {
    let cols = lambda.transpose();
    let mut out: Vec<Vec<SkewShape>> = vec![Vec::new()];
    for &h in cols.parts() {
        let ribbons = anchored_ribbons(h);
        let mut next = Vec::with_capacity(out.len() * ribbons.len());
        for prefix in &out {
            for r in &ribbons {
                let mut v = prefix.clone();
                v.push(r.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Merged partition and the canonical coloring of its columns: columns of all
/// the inputs sorted by height descending, ties by color ascending.
pub fn canonical_coloring(lambdas: &[Partition]) -> (Partition, Vec<usize>) {
    let mut cols: Vec<(usize, usize)> = Vec::new();
    for (i, l) in lambdas.iter().enumerate() {
        for &h in l.transpose().parts() {
            cols.push((h, i + 1));
        }
    }
    cols.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let refs: Vec<&Partition> = lambdas.iter().collect();
    (Partition::merge(&refs), cols.into_iter().map(|c| c.1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(4)[0], p(&[4]));
        assert_eq!(partitions(4)[4], p(&[1, 1, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn attack_examples() {
        let t = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        let c = t.cells();
        assert!(t.attacks(&c[0], &c[1]));
        assert!(!t.attacks(&c[1], &c[0]));
    }

    #[test]
    fn attack_pairs_of_the_two_shape_figure() {
        let t = ColoredTuple::uncolored(vec![sk(&[3, 2], &[1]), sk(&[1, 1], &[])]);
        let cells = t.cells();
        let mut labels: Vec<(i64, i64)> = Vec::new();
        for a in &cells {
            for b in &cells {
                if t.attacks(a, b) {
                    labels.push((t.shifted_content(a), t.shifted_content(b)));
                }
            }
        }
        labels.sort();
        // a=-2, x=-1, b=0, y=1, c=2
        assert_eq!(labels, vec![(-2, -1), (-1, 0), (0, 1), (1, 2)]);
    }

    #[test]
    fn statistics_examples() {
        let strip = ColoredTuple::uncolored(vec![sk(&[3], &[])]);
        assert_eq!((strip.a_stat(), strip.maj_stat()), (0, 0));
        let domino = ColoredTuple::uncolored(vec![ribbon_from_steps(&[true])]);
        assert_eq!(domino.des_cells().len(), 1);
        assert_eq!(domino.a_stat(), 0);
        assert_eq!(domino.maj_stat(), 1);
        let two = ColoredTuple::uncolored(vec![ribbon_from_steps(&[true]), ribbon_from_steps(&[true])]);
        assert_eq!(two.a_stat(), 1);
    }

    #[test]
    fn ribbon_anchoring() {
        for k in 1..=5 {
            for r in anchored_ribbons(k) {
                assert!(r.is_ribbon());
                assert_eq!(r.size(), k);
                let cells = r.cells();
                let bottom = cells.iter().map(|c| c.1).min().unwrap();
                let right = cells.iter().filter(|c| c.1 == bottom).map(|c| c.0).max().unwrap();
                assert_eq!(right - bottom, 0);
            }
        }
        assert_eq!(ribbon_tuples_for(&p(&[1])).len(), 1);
        assert_eq!(ribbon_tuples_for(&p(&[1, 1])).len(), 2);
        assert_eq!(ribbon_tuples_for(&p(&[2, 2])).len(), 4);
        for n in 1..=8 {
            for l in partitions(n) {
                let expect: usize = l.transpose().parts().iter().map(|&h| 1 << (h - 1)).product();
                assert_eq!(ribbon_tuples_for(&l).len(), expect);
            }
        }
    }

    #[test]
    fn canonical_coloring_examples() {
        assert_eq!(canonical_coloring(&[p(&[1]), p(&[1])]), (p(&[2]), vec![1, 2]));
        assert_eq!(canonical_coloring(&[p(&[2, 1]), p(&[1, 1])]), (p(&[3, 2]), vec![1, 2, 1]));
        assert_eq!(canonical_coloring(&[p(&[3, 1])]), (p(&[3, 1]), vec![1, 1, 1]));
    }

    #[test]
    fn restriction_examples() {
        let t = ColoredTuple::new(
            vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])],
            vec![1, 2, 1],
        )
        .unwrap();
        let r1 = t.restrict(&[1]).unwrap();
        assert_eq!(r1.shapes(), &[sk(&[2, 2], &[1]), sk(&[1, 1], &[])]);
        assert_eq!(r1.colors(), &[1, 1]);
        let r2 = t.restrict(&[2]).unwrap();
        assert_eq!(r2.shapes(), &[sk(&[2], &[])]);
        assert_eq!(t.restrict(&[1, 2]).unwrap(), t);
        let b = ColoredTuple::bijective(t.shapes().to_vec());
        assert_eq!(b.restrict(&[1, 3]).unwrap().colors(), &[1, 2]);
    }

    #[test]
    fn cells_round_trip_through_from_cells() {
        let s = sk(&[3, 3, 1], &[2, 1]);
        assert_eq!(SkewShape::from_cells(&s.cells()).unwrap().cells(), s.cells());
        assert!(SkewShape::from_cells(&[(1, 1), (3, 1)]).is_err());
    }
}
