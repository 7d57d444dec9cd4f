//! Defining data of a complexity-one graded trinomial algebra and the
//! checks that come with it: validation, the two gradings, dimension,
//! factoriality and primality criteria, and almost-freeness.
//!
//! The data consists of a variant (Type 1 or Type 2), exponent blocks
//! `l_i`, a count `m` of free variables, coefficients `A`, and optionally
//! an integral matrix `d` whose rows extend the exponent matrix `P_0` to
//! the stack matrix `P`. Type 1 blocks are indexed 1..r, Type 2 blocks
//! 0..r; coefficients are kept rational so that every check is decidable
//! by exact arithmetic.

use num::{BigRational, Integer, One, Zero};
use thiserror::Error;

use crate::lattice::{
    cokernel, gcd_vec, is_primitive, smith_normal_form, FgAbelianGroup, GradingMap, Int,
    IntMatrix,
};

pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("DuplicateAValues: Type 1 coefficients must be pairwise different (positions {0} and {1})")]
    DuplicateAValues(usize, usize),
    #[error("DependentAColumns: Type 2 coefficient columns {0} and {1} are linearly dependent")]
    DependentAColumns(usize, usize),
    #[error("NonpositiveExponent: exponent l[{block}][{index}] must be a positive integer")]
    NonpositiveExponent { block: usize, index: usize },
    #[error("NonprimitiveColumn: column {0} of the stack matrix is zero or not primitive")]
    NonprimitiveColumn(usize),
    #[error("DuplicateColumn: columns {0} and {1} of the stack matrix coincide")]
    DuplicateColumn(usize, usize),
    #[error("RankDeficientP: the columns of the stack matrix do not span the full row space")]
    RankDeficientP,
    #[error("BadSRange: d has {s} rows, admissible range is 1..={max}")]
    BadSRange { s: usize, max: usize },
    #[error("BadShape: {0}")]
    BadShape(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("MissingD: this operation needs the stack matrix rows d")]
    MissingD,
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("Type2Unsupported: the variable primality criterion is stated for Type 1 only")]
    Type2Unsupported,
    #[error("BadIndex: {0}")]
    BadIndex(String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DataVariant {
    Type1,
    Type2,
}

/// Coefficients `A`: a list of pairwise different rationals for Type 1, a
/// 2-row matrix with pairwise independent columns for Type 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AValues {
    List(Vec<Rat>),
    Matrix(Vec<[Rat; 2]>),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GradingLevel {
    K0,
    K,
}

/// Validated defining data. Constructing a value through [`C1Data::new`]
/// runs every invariant check, so holders may assume the data is sound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Data {
    variant: DataVariant,
    exponents: Vec<Vec<u64>>,
    m: usize,
    a: AValues,
    d: Option<IntMatrix>,
}

impl C1Data {
    pub fn new(
        variant: DataVariant,
        exponents: Vec<Vec<u64>>,
        m: usize,
        a: AValues,
        d: Option<IntMatrix>,
    ) -> Result<Self, ValidationError> {
        let data = C1Data {
            variant,
            exponents,
            m,
            a,
            d,
        };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<(), ValidationError> {
        if self.exponents.is_empty() {
            return Err(ValidationError::BadShape("no exponent blocks".into()));
        }
        for (i, block) in self.exponents.iter().enumerate() {
            if block.is_empty() {
                return Err(ValidationError::BadShape(format!("block {i} is empty")));
            }
            for (j, &l) in block.iter().enumerate() {
                if l == 0 {
                    return Err(ValidationError::NonpositiveExponent { block: i, index: j });
                }
            }
        }
        match (&self.variant, &self.a) {
            (DataVariant::Type1, AValues::List(list)) => {
                if list.len() != self.blocks() {
                    return Err(ValidationError::BadShape(format!(
                        "Type 1 needs {} coefficients, got {}",
                        self.blocks(),
                        list.len()
                    )));
                }
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        if list[i] == list[j] {
                            return Err(ValidationError::DuplicateAValues(i, j));
                        }
                    }
                }
            }
            (DataVariant::Type2, AValues::Matrix(cols)) => {
                if self.blocks() < 2 {
                    return Err(ValidationError::BadShape(
                        "Type 2 needs at least two exponent blocks".into(),
                    ));
                }
                if cols.len() != self.blocks() {
                    return Err(ValidationError::BadShape(format!(
                        "Type 2 needs {} coefficient columns, got {}",
                        self.blocks(),
                        cols.len()
                    )));
                }
                for i in 0..cols.len() {
                    for j in i + 1..cols.len() {
                        let det = &cols[i][0] * &cols[j][1] - &cols[i][1] * &cols[j][0];
                        if det.is_zero() {
                            return Err(ValidationError::DependentAColumns(i, j));
                        }
                    }
                }
            }
            _ => {
                return Err(ValidationError::BadShape(
                    "coefficient shape does not match the variant".into(),
                ));
            }
        }
        if let Some(d) = &self.d {
            let max_s = self.n() + self.m - self.r();
            if d.rows() == 0 || d.rows() > max_s {
                return Err(ValidationError::BadSRange {
                    s: d.rows(),
                    max: max_s,
                });
            }
            if d.cols() != self.n() + self.m {
                return Err(ValidationError::BadShape(format!(
                    "d must have {} columns, got {}",
                    self.n() + self.m,
                    d.cols()
                )));
            }
            let p = self.stack_matrix_unchecked(d);
            for j in 0..p.cols() {
                if !is_primitive(&p.col(j)) {
                    return Err(ValidationError::NonprimitiveColumn(j));
                }
            }
            for j in 0..p.cols() {
                for k in j + 1..p.cols() {
                    if p.col(j) == p.col(k) {
                        return Err(ValidationError::DuplicateColumn(j, k));
                    }
                }
            }
            if p.rank() != self.r() + d.rows() {
                return Err(ValidationError::RankDeficientP);
            }
        }
        Ok(())
    }

    pub fn variant(&self) -> DataVariant {
        self.variant
    }

    /// First block index: 1 for Type 1, 0 for Type 2.
    pub fn iota(&self) -> usize {
        match self.variant {
            DataVariant::Type1 => 1,
            DataVariant::Type2 => 0,
        }
    }

    /// Number of exponent blocks.
    pub fn blocks(&self) -> usize {
        self.exponents.len()
    }

    /// The index bound r: blocks run from iota to r inclusive.
    pub fn r(&self) -> usize {
        match self.variant {
            DataVariant::Type1 => self.blocks(),
            DataVariant::Type2 => self.blocks() - 1,
        }
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.exponents.iter().map(Vec::len).collect()
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.exponents.iter().map(Vec::len).sum()
    }

    pub fn a(&self) -> &AValues {
        &self.a
    }

    pub fn d(&self) -> Option<&IntMatrix> {
        self.d.as_ref()
    }

    pub fn s(&self) -> usize {
        self.d.as_ref().map_or(0, IntMatrix::rows)
    }

    /// Total number of variables n + m.
    pub fn var_count(&self) -> usize {
        self.n() + self.m
    }

    /// Flat variable index of T_{block_pos, j} (both zero-based positions).
    pub fn var_index(&self, block_pos: usize, j: usize) -> usize {
        self.exponents[..block_pos].iter().map(Vec::len).sum::<usize>() + j
    }

    /// Flat variable index of S_k (zero-based).
    pub fn s_var_index(&self, k: usize) -> usize {
        self.n() + k
    }

    /// The exponent matrix: block rows of `l_i` padded with zero columns;
    /// Type 2 stacks `-l_0` in every row in front.
    pub fn build_p0(&self) -> IntMatrix {
        let r = self.r();
        let mut p0 = IntMatrix::zeros(r, self.n() + self.m);
        match self.variant {
            DataVariant::Type1 => {
                let mut col = 0;
                for (pos, block) in self.exponents.iter().enumerate() {
                    for &l in block {
                        p0.set(pos, col, Int::from(l));
                        col += 1;
                    }
                }
            }
            DataVariant::Type2 => {
                let n0 = self.exponents[0].len();
                for (j, &l) in self.exponents[0].iter().enumerate() {
                    for row in 0..r {
                        p0.set(row, j, -Int::from(l));
                    }
                }
                let mut col = n0;
                for (pos, block) in self.exponents.iter().enumerate().skip(1) {
                    for &l in block {
                        p0.set(pos - 1, col, Int::from(l));
                        col += 1;
                    }
                }
            }
        }
        p0
    }

    fn stack_matrix_unchecked(&self, d: &IntMatrix) -> IntMatrix {
        self.build_p0().vstack(d)
    }

    /// The stack matrix P = [P_0; d]; present only when d is.
    pub fn p_matrix(&self) -> Option<IntMatrix> {
        self.d.as_ref().map(|d| self.stack_matrix_unchecked(d))
    }

    /// Krull dimension of the graded algebra: n + m - r + 1.
    pub fn dimension(&self) -> usize {
        self.n() + self.m - self.r() + 1
    }

    /// Grading group and variable degrees at the requested level: the
    /// cokernel of the transposed exponent matrix (K0) or stack matrix (K).
    pub fn grading(&self, level: GradingLevel) -> Result<(FgAbelianGroup, GradingMap), RingError> {
        let m = match level {
            GradingLevel::K0 => self.build_p0(),
            GradingLevel::K => self.p_matrix().ok_or(RingError::MissingD)?,
        };
        Ok(cokernel(&m.transpose()))
    }

    /// gcd of each exponent block, in block order.
    pub fn block_gcds(&self) -> Vec<Int> {
        self.exponents
            .iter()
            .map(|block| gcd_vec(&block.iter().map(|&l| Int::from(l)).collect::<Vec<_>>()))
            .collect()
    }

    /// Factoriality of the graded algebra under the standard hypotheses
    /// (r >= 2, every n_i * l_ij > 1). The gcd verdict and the independent
    /// torsion computation are both reported.
    pub fn is_factorial(&self) -> Result<FactorialityCertificate, RingError> {
        if self.r() < 2 {
            return Err(RingError::HypothesisViolated(format!(
                "criterion needs r >= 2, got r = {}",
                self.r()
            )));
        }
        for (pos, block) in self.exponents.iter().enumerate() {
            if block.len() == 1 && block[0] == 1 {
                return Err(RingError::HypothesisViolated(format!(
                    "criterion needs n_i * l_ij > 1 for every block; block {} is a single variable with exponent 1 (eliminate it first)",
                    pos + self.iota()
                )));
            }
        }
        let gcds = self.block_gcds();
        let (verdict, reason) = match self.variant {
            DataVariant::Type1 => {
                let bad: Vec<usize> = gcds
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| !g.is_one())
                    .map(|(i, _)| i + 1)
                    .collect();
                if bad.is_empty() {
                    (true, "every block gcd equals 1".to_string())
                } else {
                    (
                        false,
                        format!("block gcds at positions {bad:?} differ from 1"),
                    )
                }
            }
            DataVariant::Type2 => {
                let mut bad = None;
                'outer: for i in 0..gcds.len() {
                    for j in i + 1..gcds.len() {
                        if !gcds[i].gcd(&gcds[j]).is_one() {
                            bad = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match bad {
                    None => (true, "block gcds are pairwise coprime".to_string()),
                    Some((i, j)) => (
                        false,
                        format!(
                            "block gcds l_{i} = {} and l_{j} = {} are not coprime",
                            gcds[i], gcds[j]
                        ),
                    ),
                }
            }
        };
        let (k0, _) = self.grading(GradingLevel::K0)?;
        Ok(FactorialityCertificate {
            verdict,
            per_block_gcds: gcds,
            torsion_free: k0.is_torsion_free(),
            reason,
        })
    }

    /// Primality of the variable T_{ij} in the Type 1 algebra: every block
    /// other than `block` must have gcd 1. Indices are the 1-based block
    /// index and 1-based position inside the block.
    pub fn variable_is_prime(&self, block: usize, index: usize) -> Result<bool, RingError> {
        if self.variant != DataVariant::Type1 {
            return Err(RingError::Type2Unsupported);
        }
        if block == 0 || block > self.blocks() {
            return Err(RingError::BadIndex(format!("block {block} out of range")));
        }
        if index == 0 || index > self.exponents[block - 1].len() {
            return Err(RingError::BadIndex(format!(
                "index {index} out of range in block {block}"
            )));
        }
        let gcds = self.block_gcds();
        Ok(gcds
            .iter()
            .enumerate()
            .all(|(pos, g)| pos == block - 1 || g.is_one()))
    }

    /// Almost-freeness of the K-grading: dropping any one variable leaves
    /// degrees that still generate K. Checked column by column by testing
    /// that the remaining standard basis vectors together with the rows of
    /// P span the full lattice.
    pub fn is_almost_free(&self) -> Result<bool, RingError> {
        let p = self.p_matrix().ok_or(RingError::MissingD)?;
        let nm = self.var_count();
        let pt = p.transpose();
        for c in 0..nm {
            let mut cols: Vec<Vec<Int>> = Vec::new();
            for j in 0..nm {
                if j != c {
                    let mut e = vec![Int::zero(); nm];
                    e[j] = Int::one();
                    cols.push(e);
                }
            }
            for j in 0..pt.cols() {
                cols.push(pt.col(j));
            }
            let mut m = IntMatrix::zeros(nm, cols.len());
            for (j, col) in cols.iter().enumerate() {
                for (i, x) in col.iter().enumerate() {
                    m.set(i, j, x.clone());
                }
            }
            let snf = smith_normal_form(&m);
            if snf.rank != nm || !snf.diagonal().iter().all(Int::is_one) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Outcome of the factoriality check: the gcd verdict, the witnesses, and
/// the independently computed torsion-freeness of the K0 grading group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialityCertificate {
    pub verdict: bool,
    pub per_block_gcds: Vec<Int>,
    pub torsion_free: bool,
    pub reason: String,
}

/// Rational parsed from an integer or a "p/q" literal.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
