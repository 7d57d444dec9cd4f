//! Exact sparse multivariate polynomials over the rationals, the trinomial
//! relations attached to defining data, homogeneity checks, and the
//! reduced Groebner basis certificate for the Type 1 relation ideal.
//!
//! Monomial order: pure lexicographic with the variables ordered
//! T_{11} > T_{12} > ... > T_{r n_r} > S_1 > ... > S_m. This order makes
//! the block monomial T_i^{l_i} the leading term of every pair relation
//! g_{ir} with i < r, which the certificate relies on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{GradingMap, Int};
use crate::ringdata::{AValues, C1Data, DataVariant, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrinomialError {
    #[error("certificate applies to Type 1 data only")]
    NotType1,
    #[error("CertificateFailed: S-polynomial of pair ({0}, {1}) does not reduce to zero")]
    CertificateFailed(usize, usize),
    #[error("CertificateFailed: basis is not reduced at pair ({0}, {1})")]
    NotReduced(usize, usize),
}

/// Exponent vector with the zero entries omitted. Keys are flat variable
/// indices; values are positive.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Monomial {
    exps: BTreeMap<usize, u64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_pairs(pairs: &[(usize, u64)]) -> Self {
        let mut exps = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn var(v: usize) -> Self {
        Self::from_pairs(&[(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: usize) -> u64 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().all(|(v, e)| other.exponent(*v) >= *e)
    }

    /// other / self, defined when self divides other.
    pub fn quotient_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps.clone();
        for (&v, &e) in &self.exps {
            let q = exps.get_mut(&v).unwrap();
            *q -= e;
            if *q == 0 {
                exps.remove(&v);
            }
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let cur = exps.entry(v).or_insert(0);
            *cur = (*cur).max(e);
        }
        Monomial { exps }
    }

    /// Dense exponent vector over `nvars` variables, as big integers.
    pub fn dense_exponents(&self, nvars: usize) -> Vec<Int> {
        let mut out = vec![Int::zero(); nvars];
        for (&v, &e) in &self.exps {
            out[v] = Int::from(e);
        }
        out
    }
}

impl Ord for Monomial {
    /// Lexicographic: the variable with the smallest flat index is the
    /// biggest, and a higher exponent there wins.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((&va, &ea)), Some((&vb, &eb))) => {
                    if va != vb {
                        // the smaller index owns a positive exponent only on
                        // one side, which makes that side lex-larger
                        return if va < vb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with nonzero rational coefficients on canonical
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Self {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca * c);
        }
        out
    }

    /// Leading term in the lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Remainder of multivariate division by an ordered list of divisors,
    /// taking the leftmost divisor whose leading monomial divides.
    pub fn reduce(&self, basis: &[SparsePoly]) -> SparsePoly {
        let mut rem = SparsePoly::zero();
        let mut cur = self.clone();
        'outer: while let Some((lm, lc)) = cur.leading().map(|(m, c)| (m.clone(), c.clone())) {
            for g in basis {
                if let Some((gm, gc)) = g.leading() {
                    if let Some(q) = gm.quotient_into(&lm) {
                        let factor = &lc / gc;
                        cur = cur.sub(&g.mul_term(&q, &factor));
                        continue 'outer;
                    }
                }
            }
            rem.add_term(lm.clone(), lc.clone());
            let mut stripped = cur;
            stripped.terms.remove(&lm);
            cur = stripped;
        }
        rem
    }
}

/// S-polynomial of two nonzero polynomials in the lexicographic order.
pub fn s_polynomial(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let (fm, fc) = f.leading().expect("s_polynomial of zero");
    let (gm, gc) = g.leading().expect("s_polynomial of zero");
    let l = fm.lcm(gm);
    let qa = fm.quotient_into(&l).unwrap();
    let qb = gm.quotient_into(&l).unwrap();
    f.mul_term(&qa, &(Rat::one() / fc))
        .sub(&g.mul_term(&qb, &(Rat::one() / gc)))
}

/// Display names for the variables of a defining datum.
#[derive(Clone, Debug)]
pub struct VarTable {
    block_sizes: Vec<usize>,
    m: usize,
    single_index: bool,
}

impl VarTable {
    pub fn new(data: &C1Data) -> Self {
        let block_sizes = data.block_sizes();
        let single_index = block_sizes.iter().all(|&n| n == 1) && data.m() == 0;
        VarTable {
            block_sizes,
            m: data.m(),
            single_index,
        }
    }

    pub fn var_count(&self) -> usize {
        self.block_sizes.iter().sum::<usize>() + self.m
    }

    /// Display name of a flat variable index: block variables first, then
    /// the free variables. Blocks are displayed 1-based in block order.
    pub fn name(&self, flat: usize) -> String {
        let n: usize = self.block_sizes.iter().sum();
        if flat >= n {
            return format!("S{}", flat - n + 1);
        }
        let mut rest = flat;
        for (pos, &size) in self.block_sizes.iter().enumerate() {
            if rest < size {
                let (i, j) = (pos + 1, rest + 1);
                return if self.single_index {
                    format!("T{i}")
                } else if i <= 9 && j <= 9 {
                    format!("T{i}{j}")
                } else {
                    format!("T{i}_{j}")
                };
            }
            rest -= size;
        }
        unreachable!("flat index out of range")
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.exponents()
            .map(|(v, e)| {
                if e == 1 {
                    self.name(v)
                } else {
                    format!("{}^{}", self.name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text form: terms in descending lexicographic order with
    /// explicit signs, unit coefficients omitted.
    pub fn render_poly(&self, p: &SparsePoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in p.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&self.render_monomial(m));
            } else {
                out.push_str(&format!("{}*{}", abs, self.render_monomial(m)));
            }
        }
        out
    }
}

/// A relation of the defining ideal: two or three terms, indexed as the
/// blocks are (from 1 for Type 1, from 0 for Type 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialRelation {
    pub poly: SparsePoly,
    pub index: usize,
}

/// The block monomial T_i^{l_i} of the block at `pos`.
fn block_monomial(data: &C1Data, pos: usize) -> Monomial {
    let pairs: Vec<(usize, u64)> = data.exponents()[pos]
        .iter()
        .enumerate()
        .map(|(j, &l)| (data.var_index(pos, j), l))
        .collect();
    Monomial::from_pairs(&pairs)
}

fn det2(a: &[Rat; 2], b: &[Rat; 2]) -> Rat {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// The defining relations. Type 1 yields r-1 relations
/// g_i = T_i^{l_i} - T_{i+1}^{l_{i+1}} - (a_{i+1} - a_i); Type 2 yields
/// r-1 relations whose coefficients are the signed 2x2 minors of three
/// consecutive coefficient columns.
pub fn build_relations(data: &C1Data) -> Vec<TrinomialRelation> {
    let mut out = Vec::new();
    match (data.variant(), data.a()) {
        (DataVariant::Type1, AValues::List(a)) => {
            for pos in 0..data.blocks().saturating_sub(1) {
                let mut poly = SparsePoly::zero();
                poly.add_term(block_monomial(data, pos), Rat::one());
                poly.add_term(block_monomial(data, pos + 1), -Rat::one());
                poly.add_term(Monomial::one(), -(&a[pos + 1] - &a[pos]));
                out.push(TrinomialRelation {
                    poly,
                    index: pos + 1,
                });
            }
        }
        (DataVariant::Type2, AValues::Matrix(cols)) => {
            for pos in 0..data.blocks().saturating_sub(2) {
                let (c0, c1, c2) = (&cols[pos], &cols[pos + 1], &cols[pos + 2]);
                let mut poly = SparsePoly::zero();
                poly.add_term(block_monomial(data, pos), det2(c1, c2));
                poly.add_term(block_monomial(data, pos + 1), -det2(c0, c2));
                poly.add_term(block_monomial(data, pos + 2), det2(c0, c1));
                out.push(TrinomialRelation { poly, index: pos });
            }
        }
        _ => unreachable!("validated data has matching coefficient shape"),
    }
    out
}

/// All terms of the relation share one degree under the grading; the
/// constant term, when present, pins that common degree to zero.
pub fn homogeneity_check(rel: &TrinomialRelation, grading: &GradingMap) -> bool {
    let nvars = grading.source_rank();
    let mut common = None;
    for (m, _) in rel.poly.terms() {
        let deg = grading.eval(&m.dense_exponents(nvars));
        match &common {
            None => common = Some(deg),
            Some(d) => {
                if *d != deg {
                    return false;
                }
            }
        }
    }
    true
}

/// The pair relation g_{ij} = T_i^{l_i} - T_j^{l_j} + a_i - a_j of a
/// Type 1 datum (1-based block indices).
pub fn pair_relation(data: &C1Data, i: usize, j: usize) -> SparsePoly {
    let AValues::List(a) = data.a() else {
        panic!("pair_relation needs Type 1 data");
    };
    let mut poly = SparsePoly::zero();
    poly.add_term(block_monomial(data, i - 1), Rat::one());
    poly.add_term(block_monomial(data, j - 1), -Rat::one());
    poly.add_term(Monomial::one(), &a[i - 1] - &a[j - 1]);
    poly
}

/// Certify that G = {g_{1r}, ..., g_{r-1,r}} is a reduced Groebner basis
/// of the relation ideal in the lexicographic order: the difference
/// identity among pair relations, reduction of every S-polynomial to
/// zero, and reducedness of the basis.
pub fn groebner_certificate(data: &C1Data) -> Result<bool, TrinomialError> {
    if data.variant() != DataVariant::Type1 {
        return Err(TrinomialError::NotType1);
    }
    let r = data.r();
    if r < 2 {
        return Ok(true);
    }
    let basis: Vec<SparsePoly> = (1..r).map(|i| pair_relation(data, i, r)).collect();
    // difference identity g_{ij} = g_{ik} - g_{jk} on all triples
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                if i == j || j == k || i == k {
                    continue;
                }
                let lhs = pair_relation(data, i, j);
                let rhs = pair_relation(data, i, k).sub(&pair_relation(data, j, k));
                if lhs != rhs {
                    return Err(TrinomialError::CertificateFailed(i, j));
                }
            }
        }
    }
    // every S-polynomial reduces to zero
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !s.reduce(&basis).is_zero() {
                return Err(TrinomialError::CertificateFailed(i + 1, j + 1));
            }
        }
    }
    // reduced: monic leading coefficients and no term of one element
    // divisible by the leading monomial of another
    for (i, g) in basis.iter().enumerate() {
        let (_, lc) = g.leading().expect("nonzero basis element");
        if !lc.is_one() {
            return Err(TrinomialError::NotReduced(i + 1, i + 1));
        }
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (hm, _) = h.leading().unwrap();
            for (m, _) in g.terms() {
                if hm.divides(m) {
                    return Err(TrinomialError::NotReduced(i + 1, j + 1));
                }
            }
        }
    }
    Ok(true)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents()
            .map(|(v, e)| {
                if e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringdata::fixtures::{duval_a, e6, sl2};
    use crate::ringdata::{rat_int, GradingLevel};

    fn mono(pairs: &[(usize, u64)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    #[test]
    fn lex_order_is_lexicographic() {
        // x0 > x1^5, x0^2 > x0, 1 smallest
        assert!(mono(&[(0, 1)]) > mono(&[(1, 5)]));
        assert!(mono(&[(0, 2)]) > mono(&[(0, 1)]));
        assert!(mono(&[(2, 1)]) > Monomial::one());
        assert!(mono(&[(0, 1), (1, 1)]) > mono(&[(0, 1)]));
    }

    #[test]
    fn sl2_relation() {
        let data = sl2();
        let rels = build_relations(&data);
        assert_eq!(rels.len(), 1);
        let names = VarTable::new(&data);
        assert_eq!(names.render_poly(&rels[0].poly), "T11*T12 - T21*T22 - 1");
    }

    #[test]
    fn e6_relation() {
        let data = e6();
        let rels = build_relations(&data);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].index, 0);
        let names = VarTable::new(&data);
        assert_eq!(names.render_poly(&rels[0].poly), "T1^3 + T2^3 + T3^2");
    }

    #[test]
    fn dq_relation_at_q4() {
        let data = C1Data::new(
            DataVariant::Type2,
            vec![vec![2], vec![2], vec![2]],
            0,
            duval_a(),
            None,
        )
        .unwrap();
        let rels = build_relations(&data);
        let names = VarTable::new(&data);
        assert_eq!(names.render_poly(&rels[0].poly), "T1^2 + T2^2 + T3^2");
    }

    /// Direct first-row expansion of the 3x3 determinant with monomial top
    /// row, used as an independent oracle for the Type 2 coefficient law.
    fn type2_det_oracle(cols: &[[Rat; 2]; 3], monos: [Monomial; 3]) -> SparsePoly {
        let [m0, m1, m2] = monos;
        let mut p = SparsePoly::zero();
        p.add_term(m0, &cols[1][0] * &cols[2][1] - &cols[1][1] * &cols[2][0]);
        p.add_term(m1, -(&cols[0][0] * &cols[2][1] - &cols[0][1] * &cols[2][0]));
        p.add_term(m2, &cols[0][0] * &cols[1][1] - &cols[0][1] * &cols[1][0]);
        p
    }

    #[test]
    fn type2_coefficients_match_det_expansion() {
        // a deterministic batch of coefficient matrices with independent columns
        let samples: Vec<[[i64; 2]; 3]> = vec![
            [[0, 1], [-1, -1], [1, 0]],
            [[1, 0], [1, 1], [0, 1]],
            [[2, 1], [1, 3], [-1, 2]],
            [[1, -2], [3, 1], [2, 5]],
            [[-1, 4], [2, -3], [5, 1]],
        ];
        for cols in samples {
            let a: Vec<[Rat; 2]> = cols
                .iter()
                .map(|c| [rat_int(c[0]), rat_int(c[1])])
                .collect();
            let data = C1Data::new(
                DataVariant::Type2,
                vec![vec![2], vec![3], vec![1, 1]],
                0,
                AValues::Matrix(a.clone()),
                None,
            )
            .unwrap();
            let rels = build_relations(&data);
            assert_eq!(rels.len(), 1);
            let m0 = mono(&[(0, 2)]);
            let m1 = mono(&[(1, 3)]);
            let m2 = mono(&[(2, 1), (3, 1)]);
            let expect = type2_det_oracle(
                &[a[0].clone(), a[1].clone(), a[2].clone()],
                [m0, m1, m2],
            );
            assert_eq!(rels[0].poly, expect);
        }
    }

    #[test]
    fn homogeneity_of_relations() {
        for data in [sl2(), e6()] {
            let (_, q0) = data.grading(GradingLevel::K0).unwrap();
            for rel in build_relations(&data) {
                assert!(homogeneity_check(&rel, &q0));
            }
            if data.d().is_some() {
                let (_, qk) = data.grading(GradingLevel::K).unwrap();
                for rel in build_relations(&data) {
                    assert!(homogeneity_check(&rel, &qk));
                }
            }
        }
    }

    #[test]
    fn inhomogeneous_poly_detected() {
        let data = sl2();
        let (_, q0) = data.grading(GradingLevel::K0).unwrap();
        let mut poly = SparsePoly::zero();
        poly.add_term(mono(&[(0, 1)]), Rat::one());
        poly.add_term(mono(&[(2, 1)]), -Rat::one());
        let rel = TrinomialRelation { poly, index: 1 };
        assert!(!homogeneity_check(&rel, &q0));
    }

    #[test]
    fn groebner_certificate_sl2() {
        assert!(groebner_certificate(&sl2()).unwrap());
    }

    #[test]
    fn groebner_certificate_r3() {
        let data = C1Data::new(
            DataVariant::Type1,
            vec![vec![2], vec![3], vec![1, 1]],
            0,
            AValues::List(vec![rat_int(0), rat_int(1), rat_int(2)]),
            None,
        )
        .unwrap();
        assert!(groebner_certificate(&data).unwrap());
    }

    #[test]
    fn groebner_vacuous_for_single_relation() {
        let data = C1Data::new(
            DataVariant::Type1,
            vec![vec![2], vec![3]],
            0,
            AValues::List(vec![rat_int(0), rat_int(1)]),
            None,
        )
        .unwrap();
        assert!(groebner_certificate(&data).unwrap());
        assert_eq!(groebner_certificate(&e6()), Err(TrinomialError::NotType1));
    }

    #[test]
    fn s_polynomial_identity_from_pair_relations() {
        // S(g_ir, g_jr) = g_ir (T_r^{l_r} + a_r - a_j) - g_jr (T_r^{l_r} + a_r - a_i)
        let data = C1Data::new(
            DataVariant::Type1,
            vec![vec![2, 1], vec![3], vec![2]],
            1,
            AValues::List(vec![rat_int(0), rat_int(2), rat_int(5)]),
            None,
        )
        .unwrap();
        let AValues::List(a) = data.a().clone() else {
            unreachable!()
        };
        let r = data.r();
        for i in 1..r {
            for j in i + 1..r {
                let gi = pair_relation(&data, i, r);
                let gj = pair_relation(&data, j, r);
                let s = s_polynomial(&gi, &gj);
                let tr = SparsePoly::monomial(block_monomial(&data, r - 1), Rat::one());
                let alpha_jr = &a[r - 1] - &a[j - 1];
                let alpha_ir = &a[r - 1] - &a[i - 1];
                let rhs = gi
                    .mul(&tr.add(&SparsePoly::constant(alpha_jr)))
                    .sub(&gj.mul(&tr.add(&SparsePoly::constant(alpha_ir))));
                assert_eq!(s, rhs);
            }
        }
    }

    #[test]
    fn reduce_is_a_remainder() {
        let data = sl2();
        let g = build_relations(&data).remove(0).poly;
        // g reduces to zero against itself
        assert!(g.reduce(&[g.clone()]).is_zero());
        // a constant is already reduced
        let c = SparsePoly::constant(rat_int(7));
        assert_eq!(c.reduce(&[g]), c);
    }
}
