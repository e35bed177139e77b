//! LLT polynomials in three normalizations and the modified Macdonald
//! polynomial built from ribbon tuples.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::QTPoly;
use crate::shapes::{ribbon_tuples_for, ColoredTuple, Partition};
use crate::symfunc::{Composition, QBasis, QSymExpansion, SymExpansion};
use crate::tableaux::{visit_fillings, CellTable, Fill};

type Tally = HashMap<Vec<usize>, Vec<i64>>;

fn bump(tally: &mut Tally, key: Vec<usize>, exp: usize) {
    let v = tally.entry(key).or_default();
    if v.len() <= exp {
        v.resize(exp + 1, 0);
    }
    v[exp] += 1;
}

fn collect(tally: Tally, basis: QBasis, degree: usize) -> QSymExpansion {
    let mut out = QSymExpansion::zero(basis, degree);
    for (k, v) in tally {
        let c = QTPoly::from_q_coeffs(v.into_iter().enumerate().map(|(e, c)| (e as i32, c)));
        out.add_term(Composition::new(k).expect("nonzero parts"), &c);
    }
    out
}

fn packed_content(entries: &[u32]) -> Vec<usize> {
    let top = entries.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; top];
    for &e in entries {
        c[e as usize - 1] += 1;
    }
    c
}

/// `sum_T q^inv(T) x^T` in the monomial quasisymmetric basis. The coefficient
/// of `M_alpha` counts fillings whose entries are exactly `1..=len(alpha)`.
pub fn llt(tuple: &ColoredTuple) -> QSymExpansion {
    let table = CellTable::new(tuple);
    let mut tally = Tally::new();
    visit_fillings(&table, Fill::Packed, |e, inv| bump(&mut tally, packed_content(e), inv as usize));
    collect(tally, QBasis::MonomialQ, tuple.size())
}

/// Same function from standard fillings, `sum_T q^inv(T) F_Des(T)`.
pub fn llt_fundamental(tuple: &ColoredTuple) -> QSymExpansion {
    let table = CellTable::new(tuple);
    let n = table.len();
    let mut tally = Tally::new();
    let mut pos = vec![0i64; n + 1];
    visit_fillings(&table, Fill::Standard, |e, inv| {
        for (i, &v) in e.iter().enumerate() {
            pos[v as usize] = table.shifted[i];
        }
        let des: Vec<usize> = (1..n).filter(|&i| pos[i + 1] < pos[i]).collect();
        bump(&mut tally, Composition::from_subset(n, &des).parts().to_vec(), inv as usize);
    });
    collect(tally, QBasis::Fundamental, n)
}

/// Direct count of cospin inversions on a filling given in table order.
fn cospin_count(table: &CellTable, attack: &[Vec<bool>], e: &[u32]) -> usize {
    let mut count = 0;
    for (b, atk) in table.attackers.iter().enumerate() {
        for &a in atk {
            if e[a] <= e[b] || table.cells[a].y > table.cells[b].y {
                continue;
            }
            let ok = match table.above[b] {
                None => true,
                Some(u) => attack[u][a] && e[u] > e[a],
            };
            if ok {
                count += 1;
            }
        }
    }
    count
}

fn llt_cospin_direct(tuple: &ColoredTuple) -> QSymExpansion {
    let table = CellTable::new(tuple);
    let n = table.len();
    let mut attack = vec![vec![false; n]; n];
    for (i, j) in table.attack_pairs() {
        attack[i][j] = true;
    }
    let mut tally = Tally::new();
    visit_fillings(&table, Fill::Packed, |e, _| {
        bump(&mut tally, packed_content(e), cospin_count(&table, &attack, e))
    });
    collect(tally, QBasis::MonomialQ, n)
}

/// `llt` divided by its lowest power of `q`.
pub fn llt_min_shifted(tuple: &ColoredTuple) -> QSymExpansion {
    let plain = llt(tuple);
    plain.shift_q(-plain.min_q_exp().unwrap_or(0))
}

/// `sum_T q^inv_cospin(T) x^T`, computed directly and as `llt_min_shifted`.
/// The two must agree; some skew tuples such as `((2),(2,2)/(1))` break this.
pub fn llt_cospin(tuple: &ColoredTuple) -> Result<QSymExpansion> {
    let direct = llt_cospin_direct(tuple);
    let shifted = llt_min_shifted(tuple);
    if direct != shifted {
        return Err(Error::CospinMismatch(tuple.to_string()));
    }
    Ok(direct)
}

/// `q^(-a(nu)) llt(nu)` for ribbon tuples.
pub fn llt_mac(tuple: &ColoredTuple) -> Result<QSymExpansion> {
    tuple.is_ribbon_tuple()?;
    Ok(llt(tuple).shift_q(-(tuple.a_stat() as i32)))
}

/// The modified Macdonald polynomial in monomial quasisymmetric form.
pub fn macdonald_qsym(lambda: &Partition) -> Result<QSymExpansion> {
    if lambda.is_empty() {
        return Err(Error::InvalidInput("empty partition".into()));
    }
    let terms: Vec<QSymExpansion> = ribbon_tuples_for(lambda)
        .into_par_iter()
        .map(|shapes| {
            let nu = ColoredTuple::uncolored(shapes);
            llt_mac(&nu).map(|f| f.map_coeffs(|c| c.shift_t(nu.maj_stat() as u32)))
        })
        .collect::<Result<_>>()?;
    let mut out = QSymExpansion::zero(QBasis::MonomialQ, lambda.size());
    for t in &terms {
        out = out.add(t);
    }
    Ok(out)
}

/// The modified Macdonald polynomial in the Schur basis.
pub fn macdonald(lambda: &Partition) -> Result<SymExpansion> {
    macdonald_qsym(lambda)?.to_schur()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions, SkewShape};
    use crate::symfunc::SBasis;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sk(o: &[usize], i: &[usize]) -> SkewShape {
        SkewShape::new(p(o), p(i)).unwrap()
    }

    fn poly(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_boxes() {
        let nu = ColoredTuple::uncolored(vec![sk(&[1], &[]), sk(&[1], &[])]);
        let f = llt(&nu);
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&comp(&[2])), QTPoly::one());
        assert_eq!(f.coeff(&comp(&[1, 1])), poly("1 + q"));
        assert_eq!(llt_cospin(&nu).unwrap(), f);
        assert_eq!(llt_fundamental(&nu).to_monomialq(), f);
    }

    #[test]
    fn single_shape_is_skew_schur() {
        let nu = ColoredTuple::uncolored(vec![sk(&[2, 1], &[])]);
        let s = llt(&nu).to_schur().unwrap();
        assert_eq!(s, SymExpansion::schur(p(&[2, 1]), &QTPoly::one()));
        let nu = ColoredTuple::uncolored(vec![sk(&[2, 1], &[1])]);
        let s = llt(&nu).to_schur().unwrap();
        assert_eq!(s.coeff(&p(&[2])), QTPoly::one());
        assert_eq!(s.coeff(&p(&[1, 1])), QTPoly::one());
    }

    #[test]
    fn fundamental_route_matches() {
        let nu = ColoredTuple::uncolored(vec![sk(&[2, 2], &[1]), sk(&[2], &[]), sk(&[1, 1], &[])]);
        assert_eq!(llt_fundamental(&nu).to_monomialq(), llt(&nu));
        llt_cospin(&nu).unwrap();
    }

    #[test]
    fn cospin_statistic_is_not_always_a_shift() {
        let nu = ColoredTuple::uncolored(vec![sk(&[2], &[]), sk(&[2, 2], &[1])]);
        assert!(matches!(llt_cospin(&nu), Err(Error::CospinMismatch(_))));
        assert_eq!(llt_min_shifted(&nu).min_q_exp(), Some(0));
    }

    #[test]
    fn at_q_one_is_product() {
        let a = llt(&ColoredTuple::uncolored(vec![sk(&[2], &[])]));
        let b = llt(&ColoredTuple::uncolored(vec![sk(&[1, 1], &[])]));
        let nu = llt(&ColoredTuple::uncolored(vec![sk(&[2], &[]), sk(&[1, 1], &[])]));
        let one = nu.substitute_q(&QTPoly::one()).unwrap();
        assert_eq!(one, a.mul(&b));
    }

    #[test]
    fn mac_normalization() {
        let nu = ColoredTuple::uncolored(vec![sk(&[1, 1], &[]), sk(&[1, 1], &[])]);
        assert_eq!(nu.a_stat(), 1);
        assert_eq!(llt_mac(&nu).unwrap(), llt(&nu).shift_q(-1));
        let bad = ColoredTuple::uncolored(vec![sk(&[2, 2], &[])]);
        assert!(matches!(llt_mac(&bad), Err(Error::NotRibbon(1))));
    }

    #[test]
    fn small_macdonald() {
        assert_eq!(macdonald(&p(&[1])).unwrap(), SymExpansion::schur(p(&[1]), &QTPoly::one()));
        let h2 = macdonald(&p(&[2])).unwrap();
        assert_eq!(h2.coeff(&p(&[2])), QTPoly::one());
        assert_eq!(h2.coeff(&p(&[1, 1])), poly("q"));
        let h11 = macdonald(&p(&[1, 1])).unwrap();
        assert_eq!(h11.coeff(&p(&[2])), QTPoly::one());
        assert_eq!(h11.coeff(&p(&[1, 1])), poly("t"));
        let h21 = macdonald(&p(&[2, 1])).unwrap();
        assert_eq!(h21.coeff(&p(&[2, 1])), poly("q + t"));
        assert_eq!(h21.coeff(&p(&[1, 1, 1])), poly("q*t"));
    }

    #[test]
    fn macdonald_transpose_symmetry() {
        for n in 1..=4 {
            for l in partitions(n) {
                let a = macdonald(&l).unwrap();
                let b = macdonald(&l.transpose()).unwrap().swap_qt().unwrap();
                assert_eq!(a, b, "{l}");
                assert_eq!(a.basis, SBasis::Schur);
            }
        }
    }
}

