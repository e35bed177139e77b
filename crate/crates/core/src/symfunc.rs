//! Quasisymmetric and symmetric functions of a fixed degree, stored as
//! coefficient maps over a declared basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::ring::QTPoly;
use crate::shapes::{partitions, Partition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    /// Drops zero parts.
    pub fn flatten(parts: &[usize]) -> Self {
        Composition(parts.iter().copied().filter(|&p| p > 0).collect())
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

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// Partial sums `a1, a1+a2, ...` excluding the total.
    pub fn subset(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::subset`] for a subset of `1..n`.
    pub fn from_subset(n: usize, subset: &[usize]) -> Self {
        let mut s: Vec<usize> = subset.to_vec();
        s.sort_unstable();
        let mut out = Vec::new();
        let mut prev = 0;
        for &x in &s {
            out.push(x - prev);
            prev = x;
        }
        if n > prev {
            out.push(n - prev);
        }
        Composition(out)
    }

    /// The hook `(k, 1^(n-k))`.
    pub fn hook(n: usize, k: usize) -> Self {
        let mut v = vec![k];
        v.extend(std::iter::repeat_n(1, n - k));
        Composition(v)
    }

    /// All compositions refining this one.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = compositions(p);
            let mut next = Vec::new();
            for prefix in &out {
                for c in &pieces {
                    let mut v: Vec<usize> = prefix.clone();
                    v.extend_from_slice(&c.0);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(Composition).collect()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All compositions of `n`.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    (0..1u64 << (n - 1))
        .map(|bits| {
            let subset: Vec<usize> = (1..n).filter(|i| bits >> (i - 1) & 1 == 1).collect();
            Composition::from_subset(n, &subset)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBasis {
    MonomialQ,
    Fundamental,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SBasis {
    MonomialS,
    Schur,
    Elementary,
}

/// A homogeneous linear combination of basis elements indexed by `K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expansion<K: Ord, B> {
    pub basis: B,
    pub degree: usize,
    coeffs: BTreeMap<K, QTPoly>,
}

pub type QSymExpansion = Expansion<Composition, QBasis>;
pub type SymExpansion = Expansion<Partition, SBasis>;

impl<K: Ord + Clone, B: Copy + PartialEq + fmt::Debug> Expansion<K, B> {
    pub fn zero(basis: B, degree: usize) -> Self {
        Expansion { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, key: K, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, key: &K) -> QTPoly {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &QTPoly)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        assert!(
            self.degree == other.degree || self.is_zero() || other.is_zero(),
            "degree mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        out.degree = if self.is_zero() { other.degree } else { self.degree };
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QTPoly::constant(-1)))
    }

    pub fn scale(&self, c: &QTPoly) -> Self {
        self.map_coeffs(|p| p * c)
    }

    pub fn shift_q(&self, delta: i32) -> Self {
        self.map_coeffs(|p| p.shift_q(delta))
    }

    pub fn map_coeffs<F: Fn(&QTPoly) -> QTPoly>(&self, f: F) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<F: Fn(&QTPoly) -> Result<QTPoly>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero(self.basis, self.degree);
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn substitute_q(&self, image: &QTPoly) -> Result<Self> {
        self.try_map_coeffs(|c| c.substitute_q(image))
    }

    pub fn swap_qt(&self) -> Result<Self> {
        self.try_map_coeffs(|c| c.swap_qt())
    }

    pub fn divide_by_q_minus_one_pow(&self, k: u32) -> Result<Self> {
        self.try_map_coeffs(|c| c.divide_by_q_minus_one_pow(k))
    }

    /// Smallest power of `q` over all coefficients.
    pub fn min_q_exp(&self) -> Option<i32> {
        self.coeffs.values().filter_map(|c| c.min_q_exp()).min()
    }

    /// First coefficient with a negative integer coefficient.
    pub fn negative_witness(&self) -> Option<(K, QTPoly)> {
        self.coeffs
            .iter()
            .find(|(_, c)| !c.has_nonnegative_coeffs())
            .map(|(k, c)| (k.clone(), c.clone()))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }
}

/// One `key: polynomial` line per term, keys in decreasing lexicographic order.
impl<K: Ord + fmt::Display, B> fmt::Display for Expansion<K, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let lines: Vec<String> = self.coeffs.iter().rev().map(|(k, c)| format!("{k}: {c}")).collect();
        f.write_str(&lines.join("\n"))
    }
}

impl<K: Ord + fmt::Display, B: fmt::Debug> fmt::Debug for Expansion<K, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[deg {}]{{", self.basis, self.degree)?;
        for (k, c) in self.coeffs.iter().rev() {
            write!(f, " {k}: {c};")?;
        }
        write!(f, " }}")
    }
}

impl QSymExpansion {
    pub fn monomial(alpha: Composition, c: &QTPoly) -> Self {
        let mut e = Self::zero(QBasis::MonomialQ, alpha.size());
        e.add_term(alpha, c);
        e
    }

    pub fn fundamental(alpha: Composition, c: &QTPoly) -> Self {
        let mut e = Self::zero(QBasis::Fundamental, alpha.size());
        e.add_term(alpha, c);
        e
    }

    /// The constant 1, of degree 0.
    pub fn one() -> Self {
        Self::monomial(Composition(Vec::new()), &QTPoly::one())
    }

    pub fn to_monomialq(&self) -> QSymExpansion {
        match self.basis {
            QBasis::MonomialQ => self.clone(),
            QBasis::Fundamental => fundamental_to_monomialq(self),
        }
    }

    pub fn to_fundamental(&self) -> QSymExpansion {
        match self.basis {
            QBasis::Fundamental => self.clone(),
            QBasis::MonomialQ => monomialq_to_fundamental(self),
        }
    }

    /// Product in the monomial basis: the coefficient of `M_gamma` is a sum
    /// over splittings of `gamma` into two weak compositions.
    pub fn mul(&self, other: &QSymExpansion) -> QSymExpansion {
        let a = self.to_monomialq();
        let b = other.to_monomialq();
        let n = a.degree + b.degree;
        let mut out = QSymExpansion::zero(QBasis::MonomialQ, n);
        if a.is_zero() || b.is_zero() {
            return out;
        }
        for gamma in compositions(n) {
            let mut acc = QTPoly::zero();
            let mut left = vec![0usize; gamma.len()];
            split_rec(&gamma.0, 0, &mut left, &mut |l: &[usize]| {
                let ca = a.coeffs.get(&Composition::flatten(l));
                if ca.is_none() {
                    return;
                }
                let r: Vec<usize> = gamma.0.iter().zip(l).map(|(g, x)| g - x).collect();
                if let Some(cb) = b.coeffs.get(&Composition::flatten(&r)) {
                    acc += ca.unwrap() * cb;
                }
            });
            out.add_term(gamma, &acc);
        }
        out
    }

    /// Coefficient of `s_(k,1^(n-k))` for `k = 1..=n`, read off the
    /// fundamental coefficients of hook compositions.
    pub fn hook_coefficients(&self) -> BTreeMap<usize, QTPoly> {
        let f = self.to_fundamental();
        (1..=f.degree).map(|k| (k, f.coeff(&Composition::hook(f.degree, k)))).collect()
    }

    pub fn to_schur(&self) -> Result<SymExpansion> {
        monomialq_to_schur(&self.to_monomialq())
    }
}

fn split_rec<F: FnMut(&[usize])>(gamma: &[usize], i: usize, left: &mut Vec<usize>, f: &mut F) {
    if i == gamma.len() {
        f(left);
        return;
    }
    for x in 0..=gamma[i] {
        left[i] = x;
        split_rec(gamma, i + 1, left, f);
    }
}

pub fn fundamental_to_monomialq(f: &QSymExpansion) -> QSymExpansion {
    assert_eq!(f.basis, QBasis::Fundamental);
    let mut out = QSymExpansion::zero(QBasis::MonomialQ, f.degree);
    for (alpha, c) in &f.coeffs {
        for beta in alpha.refinements() {
            out.add_term(beta, c);
        }
    }
    out
}

pub fn monomialq_to_fundamental(m: &QSymExpansion) -> QSymExpansion {
    assert_eq!(m.basis, QBasis::MonomialQ);
    let mut out = QSymExpansion::zero(QBasis::Fundamental, m.degree);
    for (alpha, c) in &m.coeffs {
        for beta in alpha.refinements() {
            let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
            out.add_term(beta, &c.scale(sign));
        }
    }
    out
}

pub fn subset_of_composition(alpha: &Composition) -> Vec<usize> {
    alpha.subset()
}

static KOSTKA: Lazy<RwLock<HashMap<(Partition, Partition), u64>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = KOSTKA.read().get(&key) {
        return v;
    }
    let v = kostka_uncached(lambda, mu.parts());
    KOSTKA.write().insert(key, v);
    v
}

fn kostka_uncached(lambda: &Partition, mu: &[usize]) -> u64 {
    if mu.is_empty() {
        return u64::from(lambda.is_empty());
    }
    if !lambda.dominates(&Partition::from_unsorted(mu.to_vec())) {
        return 0;
    }
    // Remove a horizontal strip holding the largest entry.
    let k = *mu.last().unwrap();
    let rest = &mu[..mu.len() - 1];
    let mut total = 0;
    let l = lambda.parts();
    let mut rho = l.to_vec();
    fn rec(i: usize, left: usize, l: &[usize], rho: &mut Vec<usize>, rest: &[usize], total: &mut u64) {
        if i == l.len() {
            if left == 0 {
                let p = Partition::from_unsorted(rho.clone());
                let r = Partition::from_unsorted(rest.to_vec());
                *total += kostka(&p, &r);
            }
            return;
        }
        let floor = if i + 1 < l.len() { l[i + 1] } else { 0 };
        let most = (l[i] - floor).min(left);
        for take in 0..=most {
            rho[i] = l[i] - take;
            rec(i + 1, left - take, l, rho, rest, total);
        }
        rho[i] = l[i];
    }
    rec(0, k, l, &mut rho, rest, &mut total);
    total
}

/// Symmetry check and change of basis `M -> s`.
pub fn monomialq_to_schur(f: &QSymExpansion) -> Result<SymExpansion> {
    let f = f.to_monomialq();
    let n = f.degree;
    for (alpha, c) in &f.coeffs {
        let lam = Composition::from(&alpha.sorted());
        let d = f.coeff(&lam);
        if &d != c {
            return Err(Error::NotSymmetric {
                first: alpha.to_string(),
                first_coeff: c.to_string(),
                second: lam.to_string(),
                second_coeff: d.to_string(),
            });
        }
    }
    let mut m = SymExpansion::zero(SBasis::MonomialS, n);
    for lam in partitions(n) {
        m.add_term(lam.clone(), &f.coeff(&Composition::from(&lam)));
    }
    Ok(monomial_to_schur(&m))
}

/// Solves `d_lambda = sum_mu c_mu K_{mu lambda}` from the top of the lexicographic order down.
pub fn monomial_to_schur(m: &SymExpansion) -> SymExpansion {
    assert_eq!(m.basis, SBasis::MonomialS);
    let n = m.degree;
    let parts = partitions(n);
    let mut out = SymExpansion::zero(SBasis::Schur, n);
    for (i, lam) in parts.iter().enumerate() {
        let mut c = m.coeff(lam);
        for mu in &parts[..i] {
            let k = kostka(mu, lam);
            if k != 0 {
                c -= &out.coeff(mu).scale(BigInt::from(k));
            }
        }
        out.add_term(lam.clone(), &c);
    }
    out
}

pub fn schur_to_monomial(s: &SymExpansion) -> SymExpansion {
    assert_eq!(s.basis, SBasis::Schur);
    let mut out = SymExpansion::zero(SBasis::MonomialS, s.degree);
    for (mu, c) in &s.coeffs {
        for lam in partitions(s.degree) {
            let k = kostka(mu, &lam);
            if k != 0 {
                out.add_term(lam, &c.scale(BigInt::from(k)));
            }
        }
    }
    out
}

pub fn schur_to_elementary(s: &SymExpansion) -> SymExpansion {
    assert_eq!(s.basis, SBasis::Schur);
    let n = s.degree;
    let mut parts = partitions(n);
    parts.reverse();
    let mut out = SymExpansion::zero(SBasis::Elementary, n);
    for (i, lam) in parts.iter().enumerate() {
        let mut a = s.coeff(&lam.transpose());
        for mu in &parts[..i] {
            let k = kostka(lam, mu);
            if k != 0 {
                a -= &out.coeff(mu).scale(BigInt::from(k));
            }
        }
        out.add_term(lam.clone(), &a);
    }
    out
}

pub fn elementary_to_schur(e: &SymExpansion) -> SymExpansion {
    assert_eq!(e.basis, SBasis::Elementary);
    let mut out = SymExpansion::zero(SBasis::Schur, e.degree);
    for (mu, a) in &e.coeffs {
        for nu in partitions(e.degree) {
            let k = kostka(&nu.transpose(), mu);
            if k != 0 {
                out.add_term(nu, &a.scale(BigInt::from(k)));
            }
        }
    }
    out
}

impl SymExpansion {
    pub fn schur(lam: Partition, c: &QTPoly) -> Self {
        let mut e = Self::zero(SBasis::Schur, lam.size());
        e.add_term(lam, c);
        e
    }

    pub fn to_schur(&self) -> SymExpansion {
        match self.basis {
            SBasis::Schur => self.clone(),
            SBasis::MonomialS => monomial_to_schur(self),
            SBasis::Elementary => elementary_to_schur(self),
        }
    }

    pub fn to_elementary(&self) -> SymExpansion {
        match self.basis {
            SBasis::Elementary => self.clone(),
            _ => schur_to_elementary(&self.to_schur()),
        }
    }

    pub fn to_monomial(&self) -> SymExpansion {
        match self.basis {
            SBasis::MonomialS => self.clone(),
            _ => schur_to_monomial(&self.to_schur()),
        }
    }

    /// The same function in the quasisymmetric monomial basis.
    pub fn to_monomialq(&self) -> QSymExpansion {
        let m = self.to_monomial();
        let mut out = QSymExpansion::zero(QBasis::MonomialQ, m.degree);
        for alpha in compositions(m.degree) {
            out.add_term(alpha.clone(), &m.coeff(&alpha.sorted()));
        }
        out
    }

    pub fn to_fundamental(&self) -> QSymExpansion {
        self.to_monomialq().to_fundamental()
    }

    /// Hook rows `[s_(k,1^(n-k))]` of the Schur expansion.
    pub fn hook_rows(&self) -> BTreeMap<usize, QTPoly> {
        let s = self.to_schur();
        (1..=s.degree)
            .map(|k| {
                let mut v = vec![k];
                v.extend(std::iter::repeat_n(1, s.degree - k));
                (k, s.coeff(&Partition::from_unsorted(v)))
            })
            .collect()
    }
}

/// `[s_(k,1^(n-k))] f` for `f` in fundamentals.
pub fn hook_coefficients(f: &QSymExpansion) -> BTreeMap<usize, QTPoly> {
    f.hook_coefficients()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    #[test]
    fn subsets_and_compositions() {
        assert_eq!(comp(&[2, 1, 3]).subset(), vec![2, 3]);
        assert_eq!(Composition::from_subset(6, &[2, 3]), comp(&[2, 1, 3]));
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(comp(&[2, 1]).refinements().len(), 2);
    }

    #[test]
    fn fundamental_to_monomial_examples() {
        let f1 = QSymExpansion::fundamental(comp(&[1]), &QTPoly::one());
        assert_eq!(fundamental_to_monomialq(&f1), QSymExpansion::monomial(comp(&[1]), &QTPoly::one()));
        let f2 = fundamental_to_monomialq(&QSymExpansion::fundamental(comp(&[2]), &QTPoly::one()));
        assert_eq!(f2.coeff(&comp(&[2])), QTPoly::one());
        assert_eq!(f2.coeff(&comp(&[1, 1])), QTPoly::one());
        let f11 = fundamental_to_monomialq(&QSymExpansion::fundamental(comp(&[1, 1]), &QTPoly::one()));
        assert_eq!(f11, QSymExpansion::monomial(comp(&[1, 1]), &QTPoly::one()));
        assert_eq!(monomialq_to_fundamental(&f2), QSymExpansion::fundamental(comp(&[2]), &QTPoly::one()));
    }

    #[test]
    fn kostka_examples() {
        for n in 1..=6 {
            for l in partitions(n) {
                assert_eq!(kostka(&l, &l), 1);
                assert_eq!(kostka(&part(&[n]), &l), 1);
            }
        }
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])), 2);
        assert_eq!(kostka(&part(&[2, 2]), &part(&[3, 1])), 0);
        assert_eq!(kostka(&part(&[3, 2, 1]), &part(&[1, 1, 1, 1, 1, 1])), 16);
    }

    #[test]
    fn monomial_to_schur_examples() {
        let s1 = monomialq_to_schur(&QSymExpansion::monomial(comp(&[1]), &QTPoly::one())).unwrap();
        assert_eq!(s1, SymExpansion::schur(part(&[1]), &QTPoly::one()));
        let mut f = QSymExpansion::monomial(comp(&[2]), &QTPoly::one());
        f.add_term(comp(&[1, 1]), &poly("1 + q"));
        let s = monomialq_to_schur(&f).unwrap();
        assert_eq!(s.coeff(&part(&[2])), QTPoly::one());
        assert_eq!(s.coeff(&part(&[1, 1])), poly("q"));
        let mut g = QSymExpansion::monomial(comp(&[2, 1]), &QTPoly::one());
        g.add_term(comp(&[1, 2]), &poly("2"));
        assert!(matches!(monomialq_to_schur(&g), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn elementary_examples() {
        let e = schur_to_elementary(&SymExpansion::schur(part(&[1, 1, 1]), &QTPoly::one()));
        assert_eq!(e, {
            let mut x = SymExpansion::zero(SBasis::Elementary, 3);
            x.add_term(part(&[3]), &QTPoly::one());
            x
        });
        let e2 = schur_to_elementary(&SymExpansion::schur(part(&[2]), &QTPoly::one()));
        assert_eq!(e2.coeff(&part(&[1, 1])), QTPoly::one());
        assert_eq!(e2.coeff(&part(&[2])), poly("-1"));
        let mut e21 = SymExpansion::zero(SBasis::Elementary, 3);
        e21.add_term(part(&[2, 1]), &QTPoly::one());
        assert_eq!(schur_to_elementary(&elementary_to_schur(&e21)), e21);
    }

    #[test]
    fn hooks_of_s21() {
        let mut f = QSymExpansion::zero(QBasis::Fundamental, 3);
        f.add_term(comp(&[1, 2]), &QTPoly::one());
        f.add_term(comp(&[2, 1]), &QTPoly::one());
        let h = f.hook_coefficients();
        assert_eq!(h[&2], QTPoly::one());
        assert!(h[&1].is_zero() && h[&3].is_zero());
        assert_eq!(f.to_schur().unwrap(), SymExpansion::schur(part(&[2, 1]), &QTPoly::one()));
        let fn_ = QSymExpansion::fundamental(comp(&[4]), &QTPoly::one());
        let h = fn_.hook_coefficients();
        assert_eq!(h[&4], QTPoly::one());
        assert!(h[&1].is_zero());
    }

    #[test]
    fn product_of_single_boxes() {
        let m1 = QSymExpansion::monomial(comp(&[1]), &QTPoly::one());
        let sq = m1.mul(&m1);
        assert_eq!(sq.coeff(&comp(&[2])), QTPoly::one());
        assert_eq!(sq.coeff(&comp(&[1, 1])), poly("2"));
        let s = sq.to_schur().unwrap();
        assert_eq!(s.coeff(&part(&[2])), QTPoly::one());
        assert_eq!(s.coeff(&part(&[1, 1])), QTPoly::one());
        // M_(1) M_(2) = M_(3) + M_(1,2) + M_(2,1)
        let p = m1.mul(&QSymExpansion::monomial(comp(&[2]), &QTPoly::one()));
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&comp(&[3])), QTPoly::one());
        assert_eq!(p.coeff(&comp(&[1, 2])), QTPoly::one());
        assert_eq!(p.coeff(&comp(&[2, 1])), QTPoly::one());
    }

    #[test]
    fn rendering() {
        let mut s = SymExpansion::zero(SBasis::Schur, 2);
        s.add_term(part(&[1, 1]), &poly("q"));
        s.add_term(part(&[2]), &QTPoly::one());
        assert_eq!(s.to_string(), "(2): 1\n(1,1): q");
    }
}
