//! Set partitions, q-partial cumulants and their inverse.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphpoly::Multigraph;
use crate::llt::{llt, llt_cospin, llt_mac, llt_min_shifted, macdonald_qsym};
use crate::ring::QTPoly;
use crate::shapes::{canonical_coloring, ribbon_tuples_for, ColoredTuple, Partition};
use crate::symfunc::{QSymExpansion, SymExpansion};

/// A set partition of a finite ground set, blocks sorted internally and
/// ordered by their smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Partition of `0..n` with the given blocks.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Self {
        let mut b: Vec<Vec<usize>> = blocks
            .iter()
            .map(|v| {
                let mut v = v.clone();
                v.sort_unstable();
                v
            })
            .filter(|v| !v.is_empty())
            .collect();
        b.sort();
        let mut all: Vec<usize> = b.iter().flatten().copied().collect();
        all.sort_unstable();
        debug_assert_eq!(all, (0..n).collect::<Vec<_>>());
        SetPartition { ground: (0..n).collect(), blocks: b }
    }

    /// Partition of an arbitrary ground set.
    pub fn with_ground(ground: &[usize], blocks: &[Vec<usize>]) -> Self {
        let mut b: Vec<Vec<usize>> = blocks
            .iter()
            .map(|v| {
                let mut v = v.clone();
                v.sort_unstable();
                v
            })
            .filter(|v| !v.is_empty())
            .collect();
        b.sort();
        let mut g = ground.to_vec();
        g.sort_unstable();
        SetPartition { ground: g, blocks: b }
    }

    fn from_rgs(ground: &[usize], rgs: &[usize]) -> Self {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(ground[i]);
        }
        SetPartition { ground: ground.to_vec(), blocks }
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    /// Blocks as bitmasks over the ground elements themselves.
    pub fn masks(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.iter().fold(0u32, |m, &x| m | 1 << x)).collect()
    }

    /// `(-1)^(k-1) (k-1)!` for `k` blocks.
    pub fn mobius_weight(&self) -> BigInt {
        mobius_weight(self.len())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let e: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", e.join(","))
            })
            .collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn mobius_weight(blocks: usize) -> BigInt {
    let mut w = BigInt::from(1);
    for i in 1..blocks {
        w *= -(i as i64);
    }
    w
}

/// All set partitions of `ground`, in restricted-growth-string order.
pub fn set_partitions(ground: &[usize]) -> Vec<SetPartition> {
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, ground: &[usize], out: &mut Vec<SetPartition>) {
        if i == ground.len() {
            out.push(SetPartition::from_rgs(ground, rgs));
            return;
        }
        let limit = if i == 0 { 0 } else { max + 1 };
        for b in 0..=limit {
            rgs.push(b);
            rec(i + 1, max.max(b), rgs, ground, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if ground.is_empty() {
        out.push(SetPartition { ground: Vec::new(), blocks: Vec::new() });
        return out;
    }
    rec(0, 0, &mut Vec::new(), ground, &mut out);
    out
}

/// Set partitions of the bits of `mask`, each given as its list of block masks.
pub fn mask_partitions(mask: u32) -> Vec<Vec<u32>> {
    let ground: Vec<usize> = (0..32).filter(|i| mask >> i & 1 == 1).collect();
    set_partitions(&ground).iter().map(|p| p.masks()).collect()
}

/// Values a cumulant can be taken of.
pub trait CumulantValue: Clone + Send + Sync + PartialEq + fmt::Debug {
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &QTPoly) -> Self;
    fn div_q_minus_one(&self, k: u32) -> Result<Self>;
}

impl CumulantValue for QTPoly {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &QTPoly) -> Self {
        self * c
    }
    fn div_q_minus_one(&self, k: u32) -> Result<Self> {
        self.divide_by_q_minus_one_pow(k)
    }
}

impl CumulantValue for QSymExpansion {
    fn plus(&self, other: &Self) -> Self {
        self.to_monomialq().add(&other.to_monomialq())
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &QTPoly) -> Self {
        self.scale(c)
    }
    fn div_q_minus_one(&self, k: u32) -> Result<Self> {
        self.divide_by_q_minus_one_pow(k)
    }
}

/// A value for every nonempty subset of a labelled ground set. Subsets are
/// stored as bitmasks over positions in `ground`.
#[derive(Clone, Debug)]
pub struct SubsetFamily<V> {
    ground: Vec<usize>,
    values: HashMap<u32, V>,
}

impl<V: CumulantValue> SubsetFamily<V> {
    pub fn from_mask_fn<F>(ground: Vec<usize>, f: F) -> Result<Self>
    where
        F: Fn(u32) -> Result<V> + Sync,
    {
        assert!(ground.len() < 32);
        let full = (1u32 << ground.len()) - 1;
        let values = (1..=full)
            .into_par_iter()
            .map(|m| f(m).map(|v| (m, v)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        Ok(SubsetFamily { ground, values })
    }

    /// Builds the family from a function on subsets of labels.
    pub fn from_fn<F>(ground: Vec<usize>, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Result<V> + Sync,
    {
        let g = ground.clone();
        Self::from_mask_fn(ground, |m| f(&labels_of(&g, m)))
    }

    pub fn from_values(ground: Vec<usize>, values: HashMap<u32, V>) -> Result<Self> {
        let full = (1u32 << ground.len()) - 1;
        if (1..=full).any(|m| !values.contains_key(&m)) {
            return Err(Error::InvalidInput("family is not defined on every nonempty subset".into()));
        }
        Ok(SubsetFamily { ground, values })
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.ground.len()) - 1
    }

    pub fn mask_of(&self, subset: &[usize]) -> Result<u32> {
        subset.iter().try_fold(0u32, |m, x| {
            self.ground
                .iter()
                .position(|g| g == x)
                .map(|i| m | 1 << i)
                .ok_or_else(|| Error::InvalidInput(format!("{x} is not in the ground set")))
        })
    }

    pub fn get_mask(&self, mask: u32) -> &V {
        &self.values[&mask]
    }

    pub fn get(&self, subset: &[usize]) -> Result<&V> {
        Ok(self.get_mask(self.mask_of(subset)?))
    }

    /// `(q-1)^(1-|I|) sum_pi mu(pi) prod_B u_B` for the subset `I` given as a mask.
    pub fn cumulant_mask(&self, mask: u32) -> Result<V> {
        if mask == 0 {
            return Err(Error::InvalidInput("empty index set".into()));
        }
        let k = mask.count_ones();
        if k == 1 {
            return Ok(self.get_mask(mask).clone());
        }
        let terms: Vec<V> = mask_partitions(mask)
            .into_par_iter()
            .map(|blocks| {
                let prod = blocks[1..].iter().fold(self.get_mask(blocks[0]).clone(), |acc, b| acc.times(self.get_mask(*b)));
                prod.scaled(&QTPoly::constant(mobius_weight(blocks.len())))
            })
            .collect();
        let sum = terms[1..].iter().fold(terms[0].clone(), |acc, t| acc.plus(t));
        sum.div_q_minus_one(k - 1)
    }

    /// `(-1)^(|I|-1) sum_pi mu(pi) prod_B u_B`, the cumulant of a family of
    /// `q`-free values evaluated at `q = 0`.
    pub fn cumulant_at_q_zero(&self, mask: u32) -> Result<V> {
        let k = mask.count_ones();
        let terms: Vec<V> = mask_partitions(mask)
            .into_iter()
            .map(|blocks| {
                let prod = blocks[1..].iter().fold(self.get_mask(blocks[0]).clone(), |acc, b| acc.times(self.get_mask(*b)));
                prod.scaled(&QTPoly::constant(mobius_weight(blocks.len())))
            })
            .collect();
        let sum = terms[1..].iter().fold(terms[0].clone(), |acc, t| acc.plus(t));
        let sign = if k % 2 == 1 { 1 } else { -1 };
        Ok(sum.scaled(&QTPoly::constant(sign)))
    }

    pub fn cumulant(&self, subset: &[usize]) -> Result<V> {
        self.cumulant_mask(self.mask_of(subset)?)
    }

    pub fn cumulant_all(&self) -> Result<V> {
        self.cumulant_mask(self.full_mask())
    }

    /// `u^G_B = q^(e_B(G)) u_B`, with ground labels read as vertices of `g`.
    pub fn twisted(&self, g: &Multigraph) -> SubsetFamily<V> {
        let values = self
            .values
            .iter()
            .map(|(&m, v)| {
                let vm = labels_of(&self.ground, m).iter().fold(0u32, |acc, &x| acc | 1 << (x - 1));
                (m, v.scaled(&QTPoly::q_pow(g.edges_within(vm) as i32)))
            })
            .collect();
        SubsetFamily { ground: self.ground.clone(), values }
    }
}

fn labels_of(ground: &[usize], mask: u32) -> Vec<usize> {
    ground.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &g)| g).collect()
}

pub fn q_partial_cumulant<V: CumulantValue>(family: &SubsetFamily<V>, subset: &[usize]) -> Result<V> {
    family.cumulant(subset)
}

/// Inverse of the cumulant map: `u_I = sum_pi (q-1)^(|I|-|pi|) prod_B kappa_B`.
pub fn moments_from_cumulants<V: CumulantValue>(kappas: &SubsetFamily<V>) -> SubsetFamily<V> {
    let values = (1..=kappas.full_mask())
        .into_par_iter()
        .map(|mask| {
            let k = mask.count_ones() as usize;
            let terms: Vec<V> = mask_partitions(mask)
                .into_iter()
                .map(|blocks| {
                    let prod = blocks[1..]
                        .iter()
                        .fold(kappas.get_mask(blocks[0]).clone(), |acc, b| acc.times(kappas.get_mask(*b)));
                    prod.scaled(&QTPoly::q_minus_one().pow((k - blocks.len()) as u32))
                })
                .collect();
            (mask, terms[1..].iter().fold(terms[0].clone(), |acc, t| acc.plus(t)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    SubsetFamily { ground: kappas.ground.clone(), values }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    Plain,
    Cospin,
    /// `llt` over its lowest power of `q`, without the set-statistic cross-check.
    MinShift,
    Mac,
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Normalization::Plain),
            "cospin" => Ok(Normalization::Cospin),
            "min-shift" => Ok(Normalization::MinShift),
            "mac" => Ok(Normalization::Mac),
            _ => Err(Error::InvalidInput(format!("unknown normalization {s}"))),
        }
    }
}

pub fn llt_variant(tuple: &ColoredTuple, norm: Normalization) -> Result<QSymExpansion> {
    match norm {
        Normalization::Plain => Ok(llt(tuple)),
        Normalization::Cospin => llt_cospin(tuple),
        Normalization::MinShift => Ok(llt_min_shifted(tuple)),
        Normalization::Mac => llt_mac(tuple),
    }
}

/// The family `B -> LLT((nu, f)^B)` over the colors `1..=r`.
pub fn llt_family(tuple: &ColoredTuple, norm: Normalization) -> Result<SubsetFamily<QSymExpansion>> {
    if norm == Normalization::Mac {
        tuple.is_ribbon_tuple()?;
    }
    SubsetFamily::from_mask_fn((1..=tuple.num_colors()).collect(), |m| {
        llt_variant(&tuple.restrict_mask(m)?, norm)
    })
}

pub fn llt_cumulant(tuple: &ColoredTuple, norm: Normalization) -> Result<QSymExpansion> {
    llt_family(tuple, norm)?.cumulant_all()
}

/// The family `B -> H_(lambda^B)` with `lambda^B` the sum of the parts of the
/// `lambda^i`, `i` in `B`.
pub fn macdonald_family(lambdas: &[Partition]) -> Result<SubsetFamily<QSymExpansion>> {
    if lambdas.iter().any(|l| l.is_empty()) {
        return Err(Error::InvalidInput("empty partition".into()));
    }
    SubsetFamily::from_fn((1..=lambdas.len()).collect(), |b| {
        let parts: Vec<&Partition> = b.iter().map(|&i| &lambdas[i - 1]).collect();
        macdonald_qsym(&Partition::merge(&parts))
    })
}

pub fn macdonald_cumulant_qsym(lambdas: &[Partition]) -> Result<QSymExpansion> {
    macdonald_family(lambdas)?.cumulant_all()
}

pub fn macdonald_cumulant(lambdas: &[Partition]) -> Result<SymExpansion> {
    macdonald_cumulant_qsym(lambdas)?.to_schur()
}

/// Right-hand side of the decomposition of a Macdonald cumulant into
/// Macdonald-normalized LLT cumulants of canonically colored ribbon tuples.
pub fn mac_decomposition_rhs(lambdas: &[Partition]) -> Result<QSymExpansion> {
    let (lambda, colors) = canonical_coloring(lambdas);
    let terms = ribbon_tuples_for(&lambda)
        .into_par_iter()
        .map(|shapes| {
            let nu = ColoredTuple::new(shapes, colors.clone())?;
            let k = llt_cumulant(&nu, Normalization::Mac)?;
            Ok(k.map_coeffs(|c| c.shift_t(nu.maj_stat() as u32)))
        })
        .collect::<Result<Vec<QSymExpansion>>>()?;
    Ok(terms.iter().fold(QSymExpansion::zero(crate::symfunc::QBasis::MonomialQ, lambda.size()), |a, t| a.add(t)))
}

pub fn verify_mac_decomposition(lambdas: &[Partition]) -> Result<bool> {
    Ok(macdonald_cumulant_qsym(lambdas)? == mac_decomposition_rhs(lambdas)?)
}

/// Whether `e_B` counts the edges inside `B` of some multigraph on the ground
/// set: `e_B` dominates the loops and is pairwise additive.
pub fn is_graph_family(e: &SubsetFamily<QTPoly>) -> bool {
    let val = |m: u32| e.get_mask(m).to_i64_if_constant();
    let n = e.ground().len();
    let single: Vec<Option<i64>> = (0..n).map(|i| val(1 << i)).collect();
    for m in 1..=e.full_mask() {
        let Some(em) = val(m) else { return false };
        let bits: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
        let loops: i64 = bits.iter().map(|&i| single[i].unwrap_or(0)).sum();
        if em < loops {
            return false;
        }
        if bits.len() >= 2 {
            let mut pairs = 0;
            for (x, &i) in bits.iter().enumerate() {
                for &j in &bits[x + 1..] {
                    pairs += val(1 << i | 1 << j).unwrap_or(0);
                }
            }
            if em != pairs - (bits.len() as i64 - 2) * loops {
                return false;
            }
        }
    }
    true
}

/// The two integer families `B -> min inv((nu,f)^B)` and `B -> a((nu,f)^B)`
/// both come from multigraphs, and the second is dominated by the first.
pub fn verify_normalization_graphs(tuple: &ColoredTuple) -> Result<bool> {
    let min_inv = SubsetFamily::from_mask_fn((1..=tuple.num_colors()).collect(), |m| {
        let f = llt(&tuple.restrict_mask(m)?);
        Ok(QTPoly::constant(f.min_q_exp().unwrap_or(0)))
    })?;
    let a = SubsetFamily::from_mask_fn((1..=tuple.num_colors()).collect(), |m| {
        Ok(QTPoly::constant(tuple.restrict_mask(m)?.a_stat() as i64))
    })?;
    let dominated = (1..=a.full_mask()).all(|m| a.get_mask(m).to_i64_if_constant() <= min_inv.get_mask(m).to_i64_if_constant());
    Ok(is_graph_family(&min_inv) && is_graph_family(&a) && dominated)
}

/// The set partitions `sigma_k` and multigraphs `G_k` of the inductive
/// decomposition of a twisted cumulant. Vertex `b + 1` of `G_k` is block `b`
/// of `sigma_k`. Edges among `I` are taken in lexicographic order.
pub fn g_twisted_cumulant_decompose(g: &Multigraph, subset: &[usize]) -> Vec<(SetPartition, Multigraph)> {
    let mut inside: Vec<usize> = subset.to_vec();
    inside.sort_unstable();
    inside.dedup();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| a != b && inside.contains(&a) && inside.contains(&b))
        .collect();
    let mut out = Vec::new();
    for (i, &(m, n)) in edges.iter().enumerate() {
        let mut blocks = vec![vec![m, n]];
        blocks.extend(inside.iter().filter(|&&k| k != m && k != n).map(|&k| vec![k]));
        let sigma = SetPartition::with_ground(&inside, &blocks);
        let vertex = |x: usize| sigma.block_of(x).unwrap() + 1;
        let mut gk = Vec::new();
        for (j, &(a, b)) in edges[..=i].iter().enumerate() {
            let merged = (a == m && b == n) || (a == n && b == m);
            if merged {
                if j < i {
                    gk.push((vertex(m), vertex(m)));
                }
            } else {
                gk.push((vertex(a), vertex(b)));
            }
        }
        out.push((sigma.clone(), Multigraph::new(sigma.len(), &gk).expect("vertices in range")));
    }
    out
}

/// Evaluates both sides of the decomposition on a family indexed by the
/// vertices of `g`.
pub fn verify_g_twisted<V: CumulantValue>(family: &SubsetFamily<V>, g: &Multigraph, subset: &[usize]) -> Result<bool> {
    let lhs = family.twisted(g).cumulant(subset)?;
    let loops = g.edges().iter().filter(|&&(a, b)| a == b && subset.contains(&a)).count();
    let mut rhs = family.cumulant(subset)?;
    for (sigma, gk) in g_twisted_cumulant_decompose(g, subset) {
        let blocks = sigma.blocks().to_vec();
        let sub = SubsetFamily::from_mask_fn((1..=blocks.len()).collect(), |m| {
            let union: Vec<usize> = (0..blocks.len()).filter(|b| m >> b & 1 == 1).flat_map(|b| blocks[b].clone()).collect();
            Ok(family.get(&union)?.scaled(&QTPoly::q_pow(gk.edges_within(m) as i32)))
        })?;
        rhs = rhs.plus(&sub.cumulant_all()?);
    }
    Ok(lhs == rhs.scaled(&QTPoly::q_pow(loops as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::SkewShape;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    fn poly(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_and_mobius() {
        assert_eq!(set_partitions(&[0]).len(), 1);
        assert_eq!(set_partitions(&[0, 1, 2]).len(), 5);
        assert_eq!(set_partitions(&[0, 1, 2, 3, 4]).len(), 52);
        let s: BigInt = set_partitions(&[0, 1, 2]).iter().map(|p| p.mobius_weight()).sum();
        assert_eq!(s, BigInt::from(0));
    }

    #[test]
    fn small_cumulants() {
        let g = Multigraph::new(2, &[(1, 2)]).unwrap();
        let fam = SubsetFamily::from_mask_fn(vec![1, 2], |m| Ok(QTPoly::q_pow(g.edges_within(m) as i32))).unwrap();
        assert!(fam.cumulant(&[1, 2]).unwrap().is_one());
        assert_eq!(fam.cumulant(&[1]).unwrap(), QTPoly::one());
        let bad = SubsetFamily::from_mask_fn(vec![1, 2], |m| Ok(if m == 3 { poly("2") } else { QTPoly::one() })).unwrap();
        assert!(matches!(bad.cumulant_all(), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn two_box_cumulant() {
        let nu = ColoredTuple::bijective(vec![sk(&[1], &[]), sk(&[1], &[])]);
        let k = llt_cumulant(&nu, Normalization::Cospin).unwrap().to_schur().unwrap();
        assert_eq!(k, SymExpansion::schur(p(&[1, 1]), &QTPoly::one()));
        let one = ColoredTuple::uncolored(vec![sk(&[2, 1], &[]), sk(&[1], &[])]);
        assert_eq!(llt_cumulant(&one, Normalization::Plain).unwrap(), llt(&one));
    }

    #[test]
    fn worked_example_two_colors() {
        let nu = ColoredTuple::new(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])], vec![1, 2, 1]).unwrap();
        let k = llt_cumulant(&nu, Normalization::Cospin).unwrap().to_schur().unwrap();
        let expect = [
            (&[2, 2, 1, 1, 1][..], "q^3 + q^2"),
            (&[2, 2, 2, 1], "q^2 + q"),
            (&[3, 1, 1, 1, 1], "q^3 + q^2"),
            (&[3, 2, 1, 1], "2*q^2 + 2*q"),
            (&[3, 2, 2], "2*q + 1"),
            (&[3, 3, 1], "q + 1"),
            (&[4, 1, 1, 1], "q^2 + q"),
            (&[4, 2, 1], "q + 1"),
        ];
        assert_eq!(k.len(), expect.len(), "{k}");
        for (l, c) in expect {
            assert_eq!(k.coeff(&p(l)), poly(c), "{l:?}");
        }
    }

    #[test]
    fn macdonald_cumulants_small() {
        let k = macdonald_cumulant(&[p(&[1]), p(&[1])]).unwrap();
        assert_eq!(k, SymExpansion::schur(p(&[1, 1]), &QTPoly::one()));
        assert!(verify_mac_decomposition(&[p(&[1]), p(&[1])]).unwrap());
        assert!(verify_mac_decomposition(&[p(&[2]), p(&[1])]).unwrap());
        assert!(verify_mac_decomposition(&[p(&[1]), p(&[1, 1])]).unwrap());
    }

    fn random_family(rng: &mut ChaCha8Rng, n: usize) -> SubsetFamily<QTPoly> {
        let vals: HashMap<u32, QTPoly> = (1..1u32 << n)
            .map(|m| {
                let c: Vec<(i32, i64)> = (0..3).map(|e| (e, rng.gen_range(-3..=3))).collect();
                (m, QTPoly::from_q_coeffs(c))
            })
            .collect();
        SubsetFamily::from_values((1..=n).collect(), vals).unwrap()
    }

    #[test]
    fn moment_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4 {
            let kappas = random_family(&mut rng, n);
            let u = moments_from_cumulants(&kappas);
            for m in 1..1u32 << n {
                assert_eq!(&u.cumulant_mask(m).unwrap(), kappas.get_mask(m));
            }
        }
    }

    #[test]
    fn twisted_decomposition() {
        let g = Multigraph::edgeless(3);
        assert!(g_twisted_cumulant_decompose(&g, &[1, 2, 3]).is_empty());
        let g = Multigraph::new(2, &[(1, 2)]).unwrap();
        let d = g_twisted_cumulant_decompose(&g, &[1, 2]);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0.blocks(), &[vec![1, 2]]);
        assert_eq!(d[0].1.num_edges(), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let u = random_family(&mut rng, 3);
            let ne = rng.gen_range(0..=4);
            let edges: Vec<(usize, usize)> = (0..ne).map(|_| (rng.gen_range(1..=3), rng.gen_range(1..=3))).collect();
            let g = Multigraph::new(3, &edges).unwrap();
            // A random family is rarely divisible, so the check runs on moments of random cumulants.
            let fam = moments_from_cumulants(&u);
            assert!(verify_g_twisted(&fam, &g, &[1, 2, 3]).unwrap(), "{g}");
        }
    }

    #[test]
    fn graph_families_for_normalizations() {
        let nu = ColoredTuple::new(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])], vec![1, 2, 3]).unwrap();
        assert!(verify_normalization_graphs(&nu).unwrap());
    }

    /// `x^a (+) x^b = C(a+b, a) x^(a+b)`, truncated in degree.
    fn binomial_product(a: &[i128], b: &[i128]) -> Vec<i128> {
        let n = a.len();
        let mut out = vec![0i128; n];
        for i in 0..n {
            for j in 0..n - i {
                let mut c = 1i128;
                for k in 0..i {
                    c = c * (i + j - k) as i128 / (k + 1) as i128;
                }
                out[i + j] += c * a[i] * b[j];
            }
        }
        out
    }

    fn ordinary_product(a: &[i128], b: &[i128]) -> Vec<i128> {
        let n = a.len();
        let mut out = vec![0i128; n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    type Series = HashMap<u32, Vec<i128>>;

    /// Product of two multilinear series in `t_1..t_r` over the toy algebra.
    fn series_mul(a: &Series, b: &Series, op: fn(&[i128], &[i128]) -> Vec<i128>, deg: usize) -> Series {
        let mut out: Series = HashMap::new();
        for (&ma, va) in a {
            for (&mb, vb) in b {
                if ma & mb != 0 {
                    continue;
                }
                let e = out.entry(ma | mb).or_insert_with(|| vec![0; deg]);
                for (x, y) in e.iter_mut().zip(op(va, vb)) {
                    *x += y;
                }
            }
        }
        out
    }

    #[test]
    fn conditional_cumulant_at_q_zero() {
        // Degrees stay below the truncation, so the toy algebra is exact.
        let deg = 16;
        let pad = |v: &[i128]| {
            let mut w = v.to_vec();
            w.resize(deg, 0);
            w
        };
        let xs: Vec<Vec<i128>> = vec![pad(&[0, 1, 2]), pad(&[1, 0, 1]), pad(&[2, 1, 0, 1])];
        for r in 1..=3usize {
            // Conditional cumulant from log(exp(sum t_i X_i)).
            let y: Series = (0..r).map(|i| (1u32 << i, xs[i].clone())).collect();
            let mut unit = vec![0i128; deg];
            unit[0] = 1;
            let mut exp: Series = HashMap::from([(0u32, unit.clone())]);
            let mut power: Series = HashMap::from([(0u32, unit)]);
            let mut fact = 1i128;
            for n in 1..=r {
                power = series_mul(&power, &y, binomial_product, deg);
                fact *= n as i128;
                for (m, v) in &power {
                    let e = exp.entry(*m).or_insert_with(|| vec![0; deg]);
                    for (x, c) in e.iter_mut().zip(v) {
                        assert_eq!(c % fact, 0);
                        *x += c / fact;
                    }
                }
            }
            let a: Series = exp.into_iter().filter(|(m, _)| *m != 0).collect();
            let mut log: Series = HashMap::new();
            let mut power = a.clone();
            for n in 1..=r {
                if n > 1 {
                    power = series_mul(&power, &a, ordinary_product, deg);
                }
                let sign = if n % 2 == 1 { 1 } else { -1 };
                for (m, v) in &power {
                    let e = log.entry(*m).or_insert_with(|| vec![0; deg]);
                    for (x, c) in e.iter_mut().zip(v) {
                        assert_eq!(c % n as i128, 0);
                        *x += sign * c / n as i128;
                    }
                }
            }
            let full = (1u32 << r) - 1;
            let classical = log.get(&full).cloned().unwrap_or_else(|| vec![0; deg]);

            // The q-partial cumulant of u_B = (+)_{b in B} X_b evaluated at q = 0,
            // the t variable standing in for the algebra generator.
            let to_poly = |v: &[i128]| {
                let mut p = QTPoly::zero();
                for (e, c) in v.iter().enumerate() {
                    p.add_term(0, e as u32, BigInt::from(*c));
                }
                p
            };
            let fam = SubsetFamily::from_mask_fn((1..=r).collect(), |m| {
                let mut acc = {
                    let mut u = vec![0i128; deg];
                    u[0] = 1;
                    u
                };
                for i in 0..r {
                    if m >> i & 1 == 1 {
                        acc = binomial_product(&acc, &xs[i]);
                    }
                }
                Ok(to_poly(&acc))
            })
            .unwrap();
            let at_zero = fam.cumulant_at_q_zero(full).unwrap();
            let sign = if (r - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(at_zero, to_poly(&classical).scale(sign), "r = {r}");
        }
    }
}
