//! Integer polynomials in `q` and `t`, Laurent in `q`.
//!
//! Terms are kept in a `BTreeMap` keyed by `(q exponent, t exponent)`, so two
//! equal polynomials always have identical term maps and render identically.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct QTPoly {
    terms: BTreeMap<(i32, u32), BigInt>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, q_exp: i32, t_exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(q_exp, t_exp, c.into());
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn t_pow(e: u32) -> Self {
        Self::monomial(1, 0, e)
    }

    /// `q - 1`
    pub fn q_minus_one() -> Self {
        let mut p = Self::q();
        p.add_term(0, 0, BigInt::from(-1));
        p
    }

    /// Builds a polynomial in `q` alone from `(exponent, coefficient)` pairs.
    pub fn from_q_coeffs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, 0, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, q_exp: i32, t_exp: u32) -> BigInt {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, q_exp: i32, t_exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((q_exp, t_exp)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn min_q_exp(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn max_q_exp(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn max_t_exp(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    /// No negative powers of `q`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k.0 >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First term with a negative coefficient, if any.
    pub fn negative_term(&self) -> Option<(i32, u32, BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(&(a, b), c)| (a, b, c.clone()))
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * &c)).collect(),
        }
    }

    /// Multiply by `q^delta`.
    pub fn shift_q(&self, delta: i32) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + delta, b), c.clone())).collect(),
        }
    }

    /// Multiply by `t^delta`.
    pub fn shift_t(&self, delta: u32) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a, b + delta), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replace `q` by `image`. Negative powers of `q` are only allowed when
    /// `image` is a monomial.
    pub fn substitute_q(&self, image: &QTPoly) -> Result<QTPoly> {
        let monomial = image.terms.len() == 1
            && image.terms.iter().next().is_some_and(|(_, c)| c.abs().is_one());
        let mut by_q: BTreeMap<i32, QTPoly> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            by_q.entry(a).or_default().add_term(0, b, c.clone());
        }
        let mut out = QTPoly::zero();
        let mut pos_cache: Vec<QTPoly> = vec![QTPoly::one()];
        for (a, coeff) in by_q {
            let power = if a >= 0 {
                while pos_cache.len() <= a as usize {
                    let next = pos_cache.last().unwrap() * image;
                    pos_cache.push(next);
                }
                pos_cache[a as usize].clone()
            } else {
                if !monomial {
                    return Err(Error::NegativeExponentSubstitution(a));
                }
                let (&(ia, ib), ic) = image.terms.iter().next().unwrap();
                if ib != 0 {
                    return Err(Error::NegativeExponentSubstitution(a));
                }
                // (c q^e)^a with c = ±1
                let sign = if ic.is_negative() && a % 2 != 0 { -1 } else { 1 };
                QTPoly::monomial(sign, ia * a, 0)
            };
            out += &coeff * &power;
        }
        Ok(out)
    }

    /// Exchange the roles of `q` and `t`; requires no negative `q` powers.
    pub fn swap_qt(&self) -> Result<QTPoly> {
        let mut out = QTPoly::zero();
        for (&(a, b), c) in &self.terms {
            if a < 0 {
                return Err(Error::NegativeExponent(format!("cannot swap q^{a} into t")));
            }
            out.add_term(b as i32, a as u32, c.clone());
        }
        Ok(out)
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Specialize `t = 1`.
    pub fn at_t_one(&self) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(a, _), c) in &self.terms {
            out.add_term(a, 0, c.clone());
        }
        out
    }

    /// Specialize `q` to an integer; requires no negative `q` powers unless
    /// the value is `±1`.
    pub fn at_q(&self, value: i64) -> Result<QTPoly> {
        self.substitute_q(&QTPoly::constant(value))
    }

    /// Exact quotient `self / divisor`, treating `q` as the main variable and
    /// polynomials in `t` as scalars.
    pub fn exact_divide(&self, divisor: &QTPoly) -> Result<QTPoly> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(QTPoly::zero());
        }
        let nq = self.min_q_exp().unwrap();
        let dq = divisor.min_q_exp().unwrap();
        let mut num = to_dense(self, nq);
        let den = to_dense(divisor, dq);
        let dd = den.len() - 1;
        if num.len() < den.len() {
            return Err(not_divisible(self, divisor));
        }
        let mut quot: Vec<TPoly> = vec![Vec::new(); num.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &num[i + dd];
            if tpoly_is_zero(top) {
                continue;
            }
            let c = tpoly_div_exact(top, &den[dd]).ok_or_else(|| not_divisible(self, divisor))?;
            for (j, dj) in den.iter().enumerate() {
                let prod = tpoly_mul(&c, dj);
                tpoly_sub_assign(&mut num[i + j], &prod);
            }
            quot[i] = c;
        }
        if num.iter().any(|p| !tpoly_is_zero(p)) {
            return Err(not_divisible(self, divisor));
        }
        Ok(from_dense(&quot, nq - dq))
    }

    /// Exact division by `(q - 1)^k` via repeated synthetic division.
    pub fn divide_by_q_minus_one_pow(&self, k: u32) -> Result<QTPoly> {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.divide_by_q_minus_one()?;
        }
        Ok(cur)
    }

    fn divide_by_q_minus_one(&self) -> Result<QTPoly> {
        if self.is_zero() {
            return Ok(QTPoly::zero());
        }
        let mut by_t: BTreeMap<u32, BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            by_t.entry(b).or_default().insert(a, c.clone());
        }
        let mut out = QTPoly::zero();
        for (b, row) in by_t {
            let lo = *row.keys().next().unwrap();
            let hi = *row.keys().next_back().unwrap();
            // p = (q - 1) s  =>  s_{e-1} = p_e + s_e, scanning from the top.
            let mut carry = BigInt::zero();
            for e in (lo..=hi).rev() {
                carry += row.get(&e).cloned().unwrap_or_default();
                if e > lo {
                    out.add_term(e - 1, b, carry.clone());
                }
            }
            if !carry.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "{self} is not divisible by q - 1"
                )));
            }
        }
        Ok(out)
    }

    /// `1 + q + ... + q^(n-1)`
    pub fn q_integer(n: u32) -> QTPoly {
        QTPoly::from_q_coeffs((0..n as i32).map(|e| (e, 1)))
    }

    /// Coefficient list in `q` for a `t`-free polynomial, lowest power first,
    /// together with that lowest power.
    pub fn q_coefficients(&self) -> (i32, Vec<BigInt>) {
        let lo = self.min_q_exp().unwrap_or(0);
        let hi = self.max_q_exp().unwrap_or(-1);
        let mut v = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (&(a, _), c) in &self.terms {
            v[(a - lo) as usize] += c;
        }
        (lo, v)
    }

    pub fn to_i64_if_constant(&self) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return c.to_i64();
            }
        }
        None
    }
}

type TPoly = Vec<BigInt>;

fn not_divisible(a: &QTPoly, b: &QTPoly) -> Error {
    Error::NotDivisible(format!("{a} is not divisible by {b}"))
}

fn to_dense(p: &QTPoly, base: i32) -> Vec<TPoly> {
    let top = p.max_q_exp().unwrap();
    let mut v: Vec<TPoly> = vec![Vec::new(); (top - base + 1) as usize];
    for (&(a, b), c) in &p.terms {
        let row = &mut v[(a - base) as usize];
        if row.len() <= b as usize {
            row.resize(b as usize + 1, BigInt::zero());
        }
        row[b as usize] += c;
    }
    v
}

fn from_dense(v: &[TPoly], base: i32) -> QTPoly {
    let mut out = QTPoly::zero();
    for (i, row) in v.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.add_term(base + i as i32, j as u32, c.clone());
        }
    }
    out
}

fn tpoly_is_zero(p: &TPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn tpoly_trim(p: &mut TPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn tpoly_mul(a: &TPoly, b: &TPoly) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    tpoly_trim(&mut out);
    out
}

fn tpoly_sub_assign(a: &mut TPoly, b: &TPoly) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i] -= y;
    }
    tpoly_trim(a);
}

fn tpoly_div_exact(a: &TPoly, b: &TPoly) -> Option<TPoly> {
    let mut a = a.clone();
    let mut b = b.clone();
    tpoly_trim(&mut a);
    tpoly_trim(&mut b);
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let top = a[i + db].clone();
        if top.is_zero() {
            continue;
        }
        if !(&top % &lead).is_zero() {
            return None;
        }
        let c = &top / &lead;
        for (j, bj) in b.iter().enumerate() {
            a[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    if a.iter().any(|c| !c.is_zero()) {
        return None;
    }
    tpoly_trim(&mut q);
    Some(q)
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::constant(c)
    }
}

impl From<BigInt> for QTPoly {
    fn from(c: BigInt) -> Self {
        QTPoly::constant(c)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl SubAssign<&QTPoly> for QTPoly {
    fn sub_assign(&mut self, rhs: &QTPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, -c);
        }
    }
}

impl AddAssign for QTPoly {
    fn add_assign(&mut self, rhs: QTPoly) {
        *self += &rhs;
    }
}

impl SubAssign for QTPoly {
    fn sub_assign(&mut self, rhs: QTPoly) {
        *self -= &rhs;
    }
}

impl Mul<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&QTPoly> for QTPoly {
    fn mul_assign(&mut self, rhs: &QTPoly) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $assign:tt) => {
        impl $tr<&QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(mut self, rhs: &QTPoly) -> QTPoly {
                self $assign rhs;
                self
            }
        }
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(mut self, rhs: QTPoly) -> QTPoly {
                self $assign &rhs;
                self
            }
        }
        impl $tr<QTPoly> for &QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                let mut out = self.clone();
                out $assign &rhs;
                out
            }
        }
    };
}

forward_binop!(Add, add, +=);
forward_binop!(Sub, sub, -=);
forward_binop!(Mul, mul, *=);

impl Add<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> Self {
        let mut acc = QTPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for QTPoly {
    fn product<I: Iterator<Item = QTPoly>>(iter: I) -> Self {
        let mut acc = QTPoly::one();
        for p in iter {
            acc *= &p;
        }
        acc
    }
}

fn write_monomial(out: &mut String, q_exp: i32, t_exp: u32) {
    let mut parts = Vec::new();
    match q_exp {
        0 => {}
        1 => parts.push("q".to_string()),
        e => parts.push(format!("q^{e}")),
    }
    match t_exp {
        0 => {}
        1 => parts.push("t".to_string()),
        e => parts.push(format!("t^{e}")),
    }
    out.push_str(&parts.join("*"));
}

/// Terms are printed in decreasing `(q, t)` order, e.g. `3*q^2*t + 5 - q^-1`.
impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let bare = a == 0 && b == 0;
            if bare {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                write_monomial(&mut s, a, b);
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}

impl FromStr for QTPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QTPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QTPoly> {
        let mut acc = self.power()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<QTPoly> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let e = self.signed_int()?;
            if e >= 0 {
                return Ok(base.pow(e as u32));
            }
            if base.len() == 1 {
                let (a, b, c) = base.terms().next().unwrap();
                if b == 0 && c.is_one() {
                    return Ok(QTPoly::q_pow(a * e));
                }
            }
            return Err(self.error("negative exponent on a non-invertible base"));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i32> {
        let neg = if let Some(b'-') = self.peek() {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.digits()?;
        let n: i32 = n.to_i32().ok_or_else(|| self.error("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<QTPoly> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QTPoly::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(QTPoly::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QTPoly::constant(self.digits()?)),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    #[test]
    fn exact_divide_examples() {
        assert_eq!(p("q^2 - 1").exact_divide(&p("q - 1")).unwrap(), p("q + 1"));
        assert_eq!(
            p("q^3 - q^2 - q + 1").exact_divide(&p("(q-1)^2")).unwrap(),
            p("q + 1")
        );
        // (q-1)(q+1)^2 has only a single factor q - 1
        assert!(p("q^3 + q^2 - q - 1").exact_divide(&p("(q-1)^2")).is_err());
        assert_eq!(
            p("q^3 + q^2 - q - 1").exact_divide(&p("q-1")).unwrap(),
            p("(q + 1)^2")
        );
        assert!(matches!(
            p("q^2 + 1").exact_divide(&p("q - 1")),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn divide_with_t_coefficients() {
        let a = p("(q*t + 2)*(q^2 - t*q + 3*t^2)");
        assert_eq!(a.exact_divide(&p("q*t + 2")).unwrap(), p("q^2 - t*q + 3*t^2"));
        assert!(p("q + t").exact_divide(&p("2*q + 1")).is_err());
        assert_eq!(p("q^-2 - q^-1").exact_divide(&p("q - 1")).unwrap(), p("-q^-2"));
    }

    #[test]
    fn synthetic_division_matches_long_division() {
        let a = p("(q-1)^3*(t*q^2 + 5*q^-1 - 7)");
        assert_eq!(
            a.divide_by_q_minus_one_pow(3).unwrap(),
            a.exact_divide(&p("(q-1)^3")).unwrap()
        );
        assert!(p("q^2 + 1").divide_by_q_minus_one_pow(1).is_err());
    }

    #[test]
    fn q_integers() {
        assert!(QTPoly::q_integer(0).is_zero());
        assert_eq!(QTPoly::q_integer(1), QTPoly::one());
        assert_eq!(QTPoly::q_integer(3), p("1 + q + q^2"));
    }

    #[test]
    fn shifts_and_substitution() {
        assert_eq!(p("q^2 + q").shift_q(-1), p("q + 1"));
        assert_eq!(p("q^2").substitute_q(&p("q+1")).unwrap(), p("q^2 + 2*q + 1"));
        let f = p("3*q^3 - q + 5");
        let g = f.substitute_q(&p("q+1")).unwrap().substitute_q(&p("q-1")).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.substitute_q(&QTPoly::q()).unwrap(), f);
        assert!(matches!(
            p("q^-1").substitute_q(&p("q+1")),
            Err(Error::NegativeExponentSubstitution(-1))
        ));
        assert_eq!(p("q^-2 + t").substitute_q(&p("-q")).unwrap(), p("q^-2 + t"));
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(p("5 - q^-1 + 3*t*q^2").to_string(), "3*q^2*t + 5 - q^-1");
        assert_eq!(p("2 + q").to_string(), "q + 2");
        assert_eq!(p("-q + t^3").to_string(), "-q + t^3");
        assert_eq!(QTPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        for s in ["3*q^2*t + 5 - q^-1", "q^3 + q^2", "-2*q*t^2 + t - 7"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "q + * 2".parse::<QTPoly>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!("(q+1)^-1".parse::<QTPoly>().is_err());
        assert!("q x".parse::<QTPoly>().is_err());
    }

    #[test]
    fn swap_and_specialize() {
        let a = p("q^2*t + 3*t^2");
        assert_eq!(a.swap_qt().unwrap(), p("t^2*q + 3*q^2"));
        assert_eq!(a.at_one(), BigInt::from(4));
        assert_eq!(p("q*t + q").at_t_one(), p("2*q"));
    }
}
