//! Exact integer linear algebra: Smith normal form, cokernels of lattice
//! maps, primitive vectors and saturations.
//!
//! Everything here works over arbitrary-precision integers. Normal form
//! intermediates can blow up even on small inputs, so no fixed-width type
//! appears anywhere in this module. All values are immutable after
//! construction and all operations are pure functions.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("input vectors are linearly dependent")]
    DependentVectors,
    #[error("empty input")]
    EmptyInput,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// Dense matrix with exact integer entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self, LatticeError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LatticeError::ShapeMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for literals in tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
        .expect("literal rows must be rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, x.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack requires equal column count");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
                match swap {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = Int::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Int>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..self.cols {
            let pivot = (row..self.rows).find(|&i| !a[i][col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap(row, p);
            for i in 0..self.rows {
                if i != row && !a[i][col].is_zero() {
                    let (pa, pb) = (a[row][col].clone(), a[i][col].clone());
                    for j in 0..self.cols {
                        a[i][j] = &a[i][j] * &pa - &a[row][j] * &pb;
                    }
                    // keep entries from exploding
                    let g = gcd_slice(&a[i]);
                    if g > Int::one() {
                        for x in a[i].iter_mut() {
                            *x = &*x / &g;
                        }
                    }
                }
            }
            row += 1;
            rank += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }
}

fn gcd_slice(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// gcd of the entries, always nonnegative.
pub fn gcd_vec(v: &[Int]) -> Int {
    gcd_slice(v)
}

/// Divide a nonzero vector by the gcd of its entries, keeping direction.
pub fn primitive(v: &[Int]) -> Result<Vec<Int>, LatticeError> {
    let g = gcd_slice(v);
    if g.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn is_primitive(v: &[Int]) -> bool {
    gcd_slice(v).is_one()
}

/// Smith normal form `U * M * V = D` with unimodular `U`, `V` and a
/// diagonal divisibility chain, plus the inverses of both transforms.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct SnfState {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.a.cols {
            self.a.data.swap(i * self.a.cols + j, k * self.a.cols + j);
        }
        for j in 0..self.u.cols {
            self.u.data.swap(i * self.u.cols + j, k * self.u.cols + j);
        }
        for r in 0..self.u_inv.rows {
            self.u_inv.data.swap(r * self.u_inv.cols + i, r * self.u_inv.cols + k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.a.rows {
            self.a.data.swap(i * self.a.cols + j, i * self.a.cols + k);
        }
        for i in 0..self.v.rows {
            self.v.data.swap(i * self.v.cols + j, i * self.v.cols + k);
        }
        for c in 0..self.v_inv.cols {
            self.v_inv.data.swap(j * self.v_inv.cols + c, k * self.v_inv.cols + c);
        }
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.a.cols {
            let v = self.a.get(i, j) - q * self.a.get(k, j);
            self.a.set(i, j, v);
        }
        for j in 0..self.u.cols {
            let v = self.u.get(i, j) - q * self.u.get(k, j);
            self.u.set(i, j, v);
        }
        // (E_{i,k}(-q))^{-1} = E_{i,k}(q): column k of u_inv += q * column i
        for r in 0..self.u_inv.rows {
            let v = self.u_inv.get(r, k) + q * self.u_inv.get(r, i);
            self.u_inv.set(r, k, v);
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.a.rows {
            let v = self.a.get(i, j) - q * self.a.get(i, k);
            self.a.set(i, j, v);
        }
        for i in 0..self.v.rows {
            let v = self.v.get(i, j) - q * self.v.get(i, k);
            self.v.set(i, j, v);
        }
        // inverse acts on rows of v_inv: row k += q * row j
        for c in 0..self.v_inv.cols {
            let v = self.v_inv.get(k, c) + q * self.v_inv.get(j, c);
            self.v_inv.set(k, c, v);
        }
    }

    /// col_j += col_k
    fn col_add(&mut self, j: usize, k: usize) {
        let minus_one = -Int::one();
        self.col_sub(j, k, &minus_one);
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols {
            let v = -self.a.get(i, j);
            self.a.set(i, j, v);
        }
        for j in 0..self.u.cols {
            let v = -self.u.get(i, j);
            self.u.set(i, j, v);
        }
        for r in 0..self.u_inv.rows {
            let v = -self.u_inv.get(r, i);
            self.u_inv.set(r, i, v);
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.get(i, j);
                if !x.is_zero() {
                    match &best {
                        Some((bi, bj)) if self.a.get(*bi, *bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
        }
        best
    }

    fn diagonalize(&mut self) -> usize {
        let min = self.a.rows.min(self.a.cols);
        let mut rank = 0;
        for t in 0..min {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.a.rows {
                    if !self.a.get(i, t).is_zero() {
                        let q = self.a.get(i, t) / self.a.get(t, t);
                        self.row_sub(i, t, &q);
                        if !self.a.get(i, t).is_zero() {
                            // remainder became the smaller pivot
                            self.swap_rows(t, i);
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.a.cols {
                    if !self.a.get(t, j).is_zero() {
                        let q = self.a.get(t, j) / self.a.get(t, t);
                        self.col_sub(j, t, &q);
                        if !self.a.get(t, j).is_zero() {
                            self.swap_cols(t, j);
                            clean = false;
                        }
                    }
                }
                let col_done = (t + 1..self.a.rows).all(|i| self.a.get(i, t).is_zero());
                let row_done = (t + 1..self.a.cols).all(|j| self.a.get(t, j).is_zero());
                if clean && col_done && row_done {
                    break;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Smith normal form over the integers. Total on every rectangular matrix;
/// an empty matrix diagonalizes trivially.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut st = SnfState {
        a: m.clone(),
        u: IntMatrix::identity(m.rows),
        u_inv: IntMatrix::identity(m.rows),
        v: IntMatrix::identity(m.cols),
        v_inv: IntMatrix::identity(m.cols),
    };
    let mut rank = st.diagonalize();
    // enforce the divisibility chain d_1 | d_2 | ...
    loop {
        let mut fixed = true;
        for i in 0..rank {
            for j in i + 1..rank {
                let di = st.a.get(i, i).clone();
                let dj = st.a.get(j, j).clone();
                if !dj.mod_floor(&di).is_zero() {
                    st.col_add(i, j);
                    rank = st.diagonalize();
                    fixed = false;
                    break;
                }
            }
            if !fixed {
                break;
            }
        }
        if fixed {
            break;
        }
    }
    for i in 0..rank {
        if st.a.get(i, i).sign() == Sign::Minus {
            st.negate_row(i);
        }
    }
    debug_assert_eq!(st.u.mul(m).mul(&st.v), st.a, "U*M*V must equal D");
    Snf {
        u: st.u,
        d: st.a,
        v: st.v,
        u_inv: st.u_inv,
        v_inv: st.v_inv,
        rank,
    }
}

/// Finitely generated abelian group in invariant-factor form.
///
/// Canonical: every listed factor exceeds 1 and divides the next, so group
/// equality is structural equality. Quotients by unit factors are dropped
/// and zero factors fold into the free rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<Int>) -> Self {
        debug_assert!(invariant_factors.iter().all(|f| *f > Int::one()));
        debug_assert!(invariant_factors
            .windows(2)
            .all(|w| w[1].mod_floor(&w[0]).is_zero()));
        FgAbelianGroup {
            free_rank,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for q in &self.invariant_factors {
            parts.push(format!("Z/{q}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of an [`FgAbelianGroup`]: free coordinates followed by torsion
/// residues, one per invariant factor, each reduced modulo its factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub free: Vec<Int>,
    pub torsion: Vec<Int>,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(Int::to_string).collect();
        if self.torsion.is_empty() {
            write!(f, "({})", free.join(", "))
        } else {
            let tor: Vec<String> = self.torsion.iter().map(Int::to_string).collect();
            write!(f, "({}; {})", free.join(", "), tor.join(", "))
        }
    }
}

/// A surjection of a free lattice onto an [`FgAbelianGroup`], recorded by
/// the images of the standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingMap {
    target: FgAbelianGroup,
    degrees: Vec<GroupElement>,
}

impl GradingMap {
    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn source_rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, j: usize) -> &GroupElement {
        &self.degrees[j]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn zero_element(&self) -> GroupElement {
        GroupElement {
            free: vec![Int::zero(); self.target.free_rank],
            torsion: vec![Int::zero(); self.target.invariant_factors.len()],
        }
    }

    fn reduce(&self, mut e: GroupElement) -> GroupElement {
        for (t, f) in e.torsion.iter_mut().zip(&self.target.invariant_factors) {
            *t = t.mod_floor(f);
        }
        e
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect();
        self.reduce(GroupElement { free, torsion })
    }

    pub fn scale(&self, c: &Int, a: &GroupElement) -> GroupElement {
        let free = a.free.iter().map(|x| c * x).collect();
        let torsion = a.torsion.iter().map(|x| c * x).collect();
        self.reduce(GroupElement { free, torsion })
    }

    /// Image of an exponent vector: the weighted sum of basis degrees.
    pub fn eval(&self, exponents: &[Int]) -> GroupElement {
        assert_eq!(exponents.len(), self.degrees.len());
        let mut acc = self.zero_element();
        for (c, d) in exponents.iter().zip(&self.degrees) {
            if !c.is_zero() {
                acc = self.add(&acc, &self.scale(c, d));
            }
        }
        acc
    }

    /// Free parts of the basis degrees as a (free rank) x (source rank) matrix.
    pub fn free_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.target.free_rank, self.degrees.len());
        for (j, d) in self.degrees.iter().enumerate() {
            for (i, x) in d.free.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// The degrees of the given subset of basis vectors generate the target.
    pub fn subset_generates(&self, keep: &[usize]) -> bool {
        // stack the kept degrees against a presentation of the relations:
        // the subgroup they generate is everything iff appending them to the
        // relation lattice yields the full standard lattice.
        let k = self.target.free_rank + self.target.invariant_factors.len();
        if k == 0 {
            return true;
        }
        let mut cols: Vec<Vec<Int>> = Vec::new();
        for &j in keep {
            let d = &self.degrees[j];
            let mut col = d.free.clone();
            col.extend(d.torsion.iter().cloned());
            cols.push(col);
        }
        for (i, f) in self.target.invariant_factors.iter().enumerate() {
            let mut col = vec![Int::zero(); k];
            col[self.target.free_rank + i] = f.clone();
            cols.push(col);
        }
        let mut m = IntMatrix::zeros(k, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        let snf = smith_normal_form(&m);
        snf.rank == k && snf.diagonal().iter().all(Int::is_one)
    }
}

/// Cokernel of an integer matrix: the quotient of the standard lattice on
/// the rows by the column span, in invariant-factor form, together with the
/// induced projection on standard basis vectors.
pub fn cokernel(m: &IntMatrix) -> (FgAbelianGroup, GradingMap) {
    let snf = smith_normal_form(m);
    let torsion_rows: Vec<usize> = (0..snf.rank)
        .filter(|&i| snf.d.get(i, i) > &Int::one())
        .collect();
    let factors: Vec<Int> = torsion_rows.iter().map(|&i| snf.d.get(i, i).clone()).collect();
    let free_rows: Vec<usize> = (snf.rank..m.rows()).collect();
    let group = FgAbelianGroup::new(free_rows.len(), factors.clone());
    let degrees = (0..m.rows())
        .map(|j| {
            let w = snf.u.col(j);
            GroupElement {
                free: free_rows.iter().map(|&i| w[i].clone()).collect(),
                torsion: torsion_rows
                    .iter()
                    .zip(&factors)
                    .map(|(&i, f)| w[i].mod_floor(f))
                    .collect(),
            }
        })
        .collect();
    (
        group.clone(),
        GradingMap {
            target: group,
            degrees,
        },
    )
}

/// A lattice basis of `span_Q(vs) ∩ Z^d` for linearly independent `vs`.
pub fn saturation_basis(vs: &[Vec<Int>]) -> Result<Vec<Vec<Int>>, LatticeError> {
    if vs.is_empty() {
        return Err(LatticeError::EmptyInput);
    }
    let d = vs[0].len();
    if vs.iter().any(|v| v.len() != d) {
        return Err(LatticeError::ShapeMismatch("mixed vector lengths".into()));
    }
    let k = vs.len();
    let mut b = IntMatrix::zeros(d, k);
    for (j, v) in vs.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            b.set(i, j, x.clone());
        }
    }
    let snf = smith_normal_form(&b);
    if snf.rank != k {
        return Err(LatticeError::DependentVectors);
    }
    // span(B) ∩ Z^d = U^{-1} (Z e_1 + ... + Z e_k)
    Ok((0..k).map(|j| snf.u_inv.col(j)).collect())
}

/// A particular integer solution of `M y = rhs`, if one exists.
pub fn solve_integer(m: &IntMatrix, rhs: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(m.rows(), rhs.len(), "solve shape mismatch");
    let snf = smith_normal_form(m);
    let t = snf.u.mul_vec(rhs);
    let mut z = vec![Int::zero(); m.cols()];
    for (i, ti) in t.iter().enumerate() {
        if i < snf.rank {
            let d = snf.d.get(i, i);
            let (q, r) = ti.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !ti.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&z))
}

/// Basis of the integer kernel `{x : M x = 0}`; always a saturated lattice.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols()).map(|j| snf.v.col(j)).collect()
}

/// Membership of `x` in the lattice spanned by `basis`.
pub fn lattice_contains(basis: &[Vec<Int>], x: &[Int]) -> bool {
    if basis.is_empty() {
        return x.iter().all(Int::is_zero);
    }
    let d = basis[0].len();
    let mut m = IntMatrix::zeros(d, basis.len());
    for (j, v) in basis.iter().enumerate() {
        for (i, e) in v.iter().enumerate() {
            m.set(i, j, e.clone());
        }
    }
    solve_integer(&m, x).is_some()
}

/// Equality of the lattices spanned by two generating sets.
pub fn lattices_equal(b1: &[Vec<Int>], b2: &[Vec<Int>]) -> bool {
    b1.iter().all(|v| lattice_contains(b2, v)) && b2.iter().all(|v| lattice_contains(b1, v))
}

/// Row-style Hermite normal form of the lattice spanned by `rows`:
/// a canonical basis (positive pivots, entries above each pivot reduced).
pub fn hnf_rows(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut work: Vec<Vec<Int>> = rows.to_vec();
    let mut out: Vec<Vec<Int>> = Vec::new();
    let mut col = 0;
    while col < cols && !work.is_empty() {
        // reduce all rows against each other in this column
        loop {
            let mut nonzero: Vec<usize> = (0..work.len())
                .filter(|&i| !work[i][col].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&i| work[i][col].abs());
            let (pi, rest) = (nonzero[0], &nonzero[1..]);
            let pivot_row = work[pi].clone();
            for &i in rest {
                let q = work[i][col].div_floor(&pivot_row[col]);
                for j in 0..cols {
                    let v = &work[i][j] - &q * &pivot_row[j];
                    work[i][j] = v;
                }
            }
        }
        if let Some(pi) = (0..work.len()).find(|&i| !work[i][col].is_zero()) {
            let mut pivot = work.remove(pi);
            if pivot[col].sign() == Sign::Minus {
                for x in pivot.iter_mut() {
                    *x = -&*x;
                }
            }
            out.push(pivot);
        }
        col += 1;
    }
    // reduce entries above pivots
    for i in (0..out.len()).rev() {
        let pcol = out[i].iter().position(|x| !x.is_zero()).unwrap();
        for k in 0..i {
            let q = out[k][pcol].div_floor(&out[i][pcol]);
            if !q.is_zero() {
                for j in 0..out[0].len() {
                    let v = &out[k][j] - &q * &out[i][j];
                    out[k][j] = v;
                }
            }
        }
    }
    out
}

/// Canonical basis of the rational subspace spanned by `vs` (independent):
/// the Hermite form of the saturated lattice.
pub fn canonical_subspace_basis(vs: &[Vec<Int>]) -> Result<Vec<Vec<Int>>, LatticeError> {
    Ok(hnf_rows(&saturation_basis(vs)?))
}
