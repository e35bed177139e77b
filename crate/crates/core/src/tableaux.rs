//! Semistandard and standard fillings of colored tuples.
//!
//! Cells are visited in increasing shifted content. In that order the cell to
//! the left and the cell above are always filled before the current one, so a
//! partial filling only ever needs a lower bound from the left and an upper
//! bound from above.

use std::borrow::Borrow;
use std::collections::BTreeSet;

use crate::cumulants::SetPartition;
use crate::error::{Error, Result};
use crate::shapes::{Cell, ColoredTuple};

/// Cells of a tuple sorted by shifted content, with neighbour and attack
/// indices precomputed.
#[derive(Clone, Debug)]
pub struct CellTable {
    pub tuple: ColoredTuple,
    pub cells: Vec<Cell>,
    pub shifted: Vec<i64>,
    pub left: Vec<Option<usize>>,
    pub above: Vec<Option<usize>>,
    pub below: Vec<Option<usize>>,
    /// `attackers[j]`: indices `i < j` such that cell `i` attacks cell `j`.
    pub attackers: Vec<Vec<usize>>,
    depth_below: Vec<u32>,
    height_above: Vec<u32>,
}

impl CellTable {
    pub fn new(tuple: &ColoredTuple) -> Self {
        let mut cells = tuple.cells();
        cells.sort_by_key(|c| tuple.shifted_content(c));
        let shifted: Vec<i64> = cells.iter().map(|c| tuple.shifted_content(c)).collect();
        let find = |shape: usize, x: i64, y: i64| {
            cells.iter().position(|c| c.shape == shape && c.x == x && c.y == y)
        };
        let left: Vec<Option<usize>> = cells.iter().map(|c| find(c.shape, c.x - 1, c.y)).collect();
        let above: Vec<Option<usize>> = cells.iter().map(|c| find(c.shape, c.x, c.y + 1)).collect();
        let below: Vec<Option<usize>> = cells.iter().map(|c| find(c.shape, c.x, c.y - 1)).collect();
        let l = tuple.len() as i64;
        let attackers = (0..cells.len())
            .map(|j| (0..j).filter(|&i| shifted[j] - shifted[i] > 0 && shifted[j] - shifted[i] < l).collect())
            .collect();
        let mut depth_below = vec![0u32; cells.len()];
        let mut height_above = vec![0u32; cells.len()];
        for i in 0..cells.len() {
            let mut k = i;
            while let Some(b) = below[k] {
                depth_below[i] += 1;
                k = b;
            }
            let mut k = i;
            while let Some(a) = above[k] {
                height_above[i] += 1;
                k = a;
            }
        }
        CellTable {
            tuple: tuple.clone(),
            cells,
            shifted,
            left,
            above,
            below,
            attackers,
            depth_below,
            height_above,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Ordered attacking pairs `(i, j)` of table indices.
    pub fn attack_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, a) in self.attackers.iter().enumerate() {
            for &i in a {
                out.push((i, j));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fill {
    /// Entries in `1..=max`.
    UpTo(u32),
    /// Entries form exactly `{1, ..., k}` for some `k`.
    Packed,
    /// A bijection onto `1..=n`.
    Standard,
}

/// Depth-first search over fillings, yielding entries aligned with the table
/// order together with the inversion count.
pub struct FillingSearch<T: Borrow<CellTable>> {
    table: T,
    fill: Fill,
    max: u32,
    entries: Vec<u32>,
    inv_prefix: Vec<u32>,
    counts: Vec<u32>,
    pos: usize,
    done: bool,
    at_leaf: bool,
}

impl<T: Borrow<CellTable>> FillingSearch<T> {
    pub fn new(table: T, fill: Fill) -> Self {
        let n = table.borrow().len();
        let max = match fill {
            Fill::UpTo(m) => m,
            Fill::Packed | Fill::Standard => n as u32,
        };
        FillingSearch {
            table,
            fill,
            max,
            entries: vec![0; n],
            inv_prefix: vec![0; n + 1],
            counts: vec![0; max as usize + 2],
            pos: 0,
            done: false,
            at_leaf: false,
        }
    }

    fn bounds(&self, k: usize) -> (u32, u32) {
        let t = self.table.borrow();
        let mut lo = 1 + t.depth_below[k];
        if let Some(l) = t.left[k] {
            lo = lo.max(self.entries[l]);
        }
        let mut hi = self.max.saturating_sub(t.height_above[k]);
        if let Some(a) = t.above[k] {
            hi = hi.min(self.entries[a] - 1);
        }
        (lo, hi)
    }

    fn admissible(&self, k: usize, v: u32) -> bool {
        match self.fill {
            Fill::UpTo(_) => true,
            Fill::Standard => self.counts[v as usize] == 0,
            Fill::Packed => {
                // After placing v, the gaps below the largest value used must
                // still be fillable by the remaining cells.
                let remaining = (self.table.borrow().len() - k - 1) as u32;
                let mut top = v;
                let mut missing = 0;
                for w in 1..=self.max {
                    if self.counts[w as usize] > 0 {
                        top = top.max(w);
                    }
                }
                for w in 1..top {
                    if self.counts[w as usize] == 0 && w != v {
                        missing += 1;
                    }
                }
                missing <= remaining
            }
        }
    }

    fn place(&mut self, k: usize, v: u32) {
        self.entries[k] = v;
        self.counts[v as usize] += 1;
        let extra = self.table.borrow().attackers[k].iter().filter(|&&i| self.entries[i] > v).count() as u32;
        self.inv_prefix[k + 1] = self.inv_prefix[k] + extra;
    }

    fn unplace(&mut self, k: usize) {
        let v = self.entries[k];
        self.counts[v as usize] -= 1;
    }

    fn complete(&self) -> bool {
        match self.fill {
            Fill::Packed => {
                let top = (1..=self.max).rev().find(|&w| self.counts[w as usize] > 0).unwrap_or(0);
                (1..=top).all(|w| self.counts[w as usize] > 0)
            }
            _ => true,
        }
    }

    /// Advance to the next complete filling. Returns `false` when exhausted.
    pub fn advance(&mut self) -> bool {
        let n = self.table.borrow().len();
        if self.done {
            return false;
        }
        if n == 0 {
            self.done = true;
            return true;
        }
        if self.at_leaf {
            self.at_leaf = false;
            self.pos = n - 1;
            self.unplace(self.pos);
        }
        loop {
            let k = self.pos;
            let (lo, hi) = self.bounds(k);
            let start = if self.entries[k] == 0 { lo } else { self.entries[k] + 1 };
            let mut placed = false;
            let mut v = start.max(lo);
            while v <= hi {
                if self.admissible(k, v) {
                    self.place(k, v);
                    placed = true;
                    break;
                }
                v += 1;
            }
            if placed {
                if k + 1 == n {
                    if self.complete() {
                        self.at_leaf = true;
                        return true;
                    }
                    self.unplace(k);
                    continue;
                }
                self.pos += 1;
                self.entries[self.pos] = 0;
            } else {
                self.entries[k] = 0;
                if k == 0 {
                    self.done = true;
                    return false;
                }
                self.pos -= 1;
                self.unplace(self.pos);
            }
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn inv(&self) -> u32 {
        self.inv_prefix[self.table.borrow().len()]
    }
}

/// Calls `visit(entries, inv)` on every filling.
pub fn visit_fillings<F: FnMut(&[u32], u32)>(table: &CellTable, fill: Fill, mut visit: F) {
    let mut s = FillingSearch::new(table, fill);
    while s.advance() {
        visit(s.entries(), s.inv());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub tuple: ColoredTuple,
    /// Cells in increasing shifted content.
    pub cells: Vec<Cell>,
    pub entries: Vec<u32>,
}

pub struct TableauIter {
    search: Option<FillingSearch<CellTable>>,
}

impl Iterator for TableauIter {
    type Item = Tableau;
    fn next(&mut self) -> Option<Tableau> {
        let s = self.search.as_mut()?;
        if s.advance() {
            let table = s.table.borrow();
            Some(Tableau {
                tuple: table.tuple.clone(),
                cells: table.cells.clone(),
                entries: s.entries().to_vec(),
            })
        } else {
            self.search = None;
            None
        }
    }
}

fn tableau_iter(tuple: &ColoredTuple, fill: Fill) -> TableauIter {
    TableauIter { search: Some(FillingSearch::new(CellTable::new(tuple), fill)) }
}

/// Every semistandard filling with entries at most `max_entry`.
pub fn enumerate_ssyt(tuple: &ColoredTuple, max_entry: u32) -> TableauIter {
    tableau_iter(tuple, Fill::UpTo(max_entry))
}

/// Semistandard fillings whose set of entries is `{1, ..., k}`.
pub fn enumerate_packed(tuple: &ColoredTuple) -> TableauIter {
    tableau_iter(tuple, Fill::Packed)
}

pub fn enumerate_syt(tuple: &ColoredTuple) -> TableauIter {
    tableau_iter(tuple, Fill::Standard)
}

impl Tableau {
    pub fn from_entries(tuple: &ColoredTuple, assign: &[(Cell, u32)]) -> Result<Tableau> {
        let table = CellTable::new(tuple);
        let mut entries = vec![0; table.len()];
        for (c, v) in assign {
            let i = table
                .cells
                .iter()
                .position(|d| d == c)
                .ok_or_else(|| Error::InvalidInput(format!("{c:?} is not a cell")))?;
            entries[i] = *v;
        }
        if entries.contains(&0) {
            return Err(Error::InvalidInput("unfilled cell".into()));
        }
        let t = Tableau { tuple: tuple.clone(), cells: table.cells, entries };
        if !t.is_semistandard() {
            return Err(Error::InvalidInput("filling is not semistandard".into()));
        }
        Ok(t)
    }

    pub fn entry(&self, c: &Cell) -> Option<u32> {
        self.cells.iter().position(|d| d == c).map(|i| self.entries[i])
    }

    fn entry_at(&self, shape: usize, x: i64, y: i64) -> Option<u32> {
        self.entry(&Cell { shape, x, y })
    }

    pub fn is_semistandard(&self) -> bool {
        self.cells.iter().zip(&self.entries).all(|(c, &v)| {
            let left_ok = self.entry_at(c.shape, c.x - 1, c.y).is_none_or(|l| l <= v);
            let below_ok = self.entry_at(c.shape, c.x, c.y - 1).is_none_or(|b| b < v);
            left_ok && below_ok && v > 0
        })
    }

    pub fn is_standard(&self) -> bool {
        let set: BTreeSet<u32> = self.entries.iter().copied().collect();
        set.len() == self.entries.len() && set.iter().copied().eq(1..=self.entries.len() as u32)
    }

    /// Inversions as pairs `(i, j)` of positions in `cells`: `i` attacks `j`
    /// and carries the larger entry.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.cells.len() {
            for j in 0..self.cells.len() {
                if self.tuple.attacks(&self.cells[i], &self.cells[j]) && self.entries[i] > self.entries[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn inv(&self) -> usize {
        self.inversions().len()
    }

    /// Inversions with both cells in the same block of `pi`, a set partition
    /// of the colors.
    pub fn inv_blocks(&self, pi: &SetPartition) -> usize {
        self.inversions()
            .into_iter()
            .filter(|&(i, j)| {
                pi.block_of(self.tuple.color_of(&self.cells[i]) - 1)
                    == pi.block_of(self.tuple.color_of(&self.cells[j]) - 1)
            })
            .count()
    }

    /// Inversions `(a, b)` such that `(b above, a)` is an inversion as well
    /// (automatically when `b` has no cell above it) and the row of `a` is at
    /// most the row of `b`.
    pub fn inv_cospin(&self) -> usize {
        let inv: BTreeSet<(usize, usize)> = self.inversions().into_iter().collect();
        inv.iter()
            .filter(|&&(a, b)| {
                let cb = self.cells[b];
                let up = self.cells.iter().position(|d| d.shape == cb.shape && d.x == cb.x && d.y == cb.y + 1);
                let second = match up {
                    None => true,
                    Some(u) => inv.contains(&(u, a)),
                };
                second && self.cells[a].y <= cb.y
            })
            .count()
    }

    /// Positions `i` in `1..n` where `i + 1` sits at a smaller shifted content
    /// than `i`.
    pub fn des_set(&self) -> Result<BTreeSet<usize>> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let n = self.entries.len();
        let mut pos = vec![0i64; n + 1];
        for (c, &v) in self.cells.iter().zip(&self.entries) {
            pos[v as usize] = self.tuple.shifted_content(c);
        }
        Ok((1..n).filter(|&i| pos[i + 1] < pos[i]).collect())
    }

    /// Multiplicities of entries `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.entries.iter().copied().max().unwrap_or(0) as usize;
        let mut v = vec![0; max];
        for &e in &self.entries {
            v[e as usize - 1] += 1;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, SkewShape};

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(Partition::new(o.to_vec()).unwrap(), Partition::new(i.to_vec()).unwrap()).unwrap()
    }

    fn paper_tuple() -> ColoredTuple {
        ColoredTuple::bijective(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])])
    }

    #[test]
    fn ssyt_counts() {
        let col = ColoredTuple::uncolored(vec![sk(&[1, 1], &[])]);
        assert_eq!(enumerate_ssyt(&col, 2).count(), 1);
        let row = ColoredTuple::uncolored(vec![sk(&[2], &[])]);
        assert_eq!(enumerate_ssyt(&row, 2).count(), 3);
        let two = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        assert_eq!(enumerate_ssyt(&two, 2).count(), 4);
        // SSYT of shape (2,1) with entries at most 3: 8
        let hook = ColoredTuple::uncolored(vec![sk(&[2, 1], &[])]);
        assert_eq!(enumerate_ssyt(&hook, 3).count(), 8);
        assert!(enumerate_ssyt(&hook, 3).all(|t| t.is_semistandard()));
    }

    #[test]
    fn packed_and_standard() {
        let two = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        // (1,1), (1,2), (2,1)
        assert_eq!(enumerate_packed(&two).count(), 3);
        assert_eq!(enumerate_syt(&two).count(), 2);
        let s = ColoredTuple::uncolored(vec![sk(&[3, 2], &[])]);
        assert_eq!(enumerate_syt(&s).count(), 5);
    }

    #[test]
    fn inversion_examples() {
        let two = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        let mut invs: Vec<(Vec<u32>, usize)> = enumerate_syt(&two).map(|t| (t.entries.clone(), t.inv())).collect();
        invs.sort();
        assert_eq!(invs, vec![(vec![1, 2], 0), (vec![2, 1], 1)]);
        let two = ColoredTuple::bijective(two.shapes().to_vec());
        let split = SetPartition::from_blocks(2, &[vec![0], vec![1]]);
        assert!(enumerate_ssyt(&two, 2).all(|t| t.inv_blocks(&split) == 0));
        let whole = SetPartition::from_blocks(2, &[vec![0, 1]]);
        assert!(enumerate_ssyt(&two, 2).all(|t| t.inv_blocks(&whole) == t.inv()));
        let single = ColoredTuple::uncolored(vec![sk(&[3, 2], &[1])]);
        assert!(enumerate_ssyt(&single, 3).all(|t| t.inv() == 0 && t.inv_cospin() == 0));
    }

    #[test]
    fn incremental_inv_matches_direct() {
        let t = paper_tuple();
        let table = CellTable::new(&t);
        let mut s = FillingSearch::new(&table, Fill::UpTo(3));
        let mut count = 0;
        while s.advance() {
            let tab = Tableau { tuple: t.clone(), cells: table.cells.clone(), entries: s.entries().to_vec() };
            assert_eq!(tab.inv() as u32, s.inv());
            count += 1;
        }
        assert!(count > 0);
    }

    #[test]
    fn cospin_difference_is_constant() {
        let two = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        assert!(enumerate_ssyt(&two, 2).all(|t| t.inv() == t.inv_cospin()));
        let t = paper_tuple();
        let diffs: BTreeSet<usize> = enumerate_ssyt(&t, 4).map(|x| x.inv() - x.inv_cospin()).collect();
        assert_eq!(diffs.len(), 1);
        let min_inv = enumerate_ssyt(&t, 6).map(|x| x.inv()).min().unwrap();
        assert_eq!(*diffs.iter().next().unwrap(), min_inv);
    }

    #[test]
    fn descent_examples() {
        let one = ColoredTuple::uncolored(vec![sk(&[1], &[])]);
        assert!(enumerate_syt(&one).next().unwrap().des_set().unwrap().is_empty());
        let two = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        for t in enumerate_syt(&two) {
            // the c̃ = 1 cell is the second shape
            let second = t.entry(&Cell { shape: 1, x: 1, y: 1 }).unwrap();
            let expect: BTreeSet<usize> = if second == 1 { [1].into() } else { BTreeSet::new() };
            assert_eq!(t.des_set().unwrap(), expect);
        }
        let hook = ColoredTuple::uncolored(vec![sk(&[2, 1], &[])]);
        let t = Tableau::from_entries(
            &hook,
            &[
                (Cell { shape: 0, x: 1, y: 1 }, 1),
                (Cell { shape: 0, x: 2, y: 1 }, 2),
                (Cell { shape: 0, x: 1, y: 2 }, 3),
            ],
        )
        .unwrap();
        assert_eq!(t.des_set().unwrap(), [2].into());
        let not_std = enumerate_ssyt(&hook, 2).next().unwrap();
        assert!(matches!(not_std.des_set(), Err(Error::NotStandard)));
    }
}
