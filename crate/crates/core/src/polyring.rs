//! Exact polynomials in the entries `x_{ij}` of a `k × n` matrix of
//! indeterminates.
//!
//! Every polynomial handled here is multilinear in the columns: a monomial
//! uses each column at most once, so it is stored as the vector of row
//! indices per column (`0` when the column is absent).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::combinat::Permutation;
use crate::error::{Error, Result};

type RowVec = SmallVec<[u8; 16]>;

/// A squarefree monomial `∏_j x_{rows[j], j}` over the columns `j` with
/// `rows[j] != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    rows: RowVec,
}

impl Monomial {
    /// `rows[j - 1]` is the row used by column `j`, or 0.
    pub fn new(rows: &[usize]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|&r| {
                u8::try_from(r)
                    .map_err(|_| Error::InvalidParameters(format!("row index {r} too large")))
            })
            .collect::<Result<RowVec>>()?;
        Ok(Self { rows })
    }

    pub fn one(n: usize) -> Self {
        Self {
            rows: smallvec::smallvec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row used by column `j` (1-indexed), if any.
    pub fn row_of(&self, j: usize) -> Option<usize> {
        match self.rows[j - 1] {
            0 => None,
            a => Some(a as usize),
        }
    }

    pub fn rows(&self) -> Vec<usize> {
        self.rows.iter().map(|&a| a as usize).collect()
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().filter(|&&a| a != 0).count()
    }

    /// Columns (1-indexed, ascending) whose variable lies in row `a`.
    pub fn columns_in_row(&self, a: usize) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.rows[j - 1] as usize == a)
            .collect()
    }

    /// Product of two monomials on disjoint column sets.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        let mut rows = self.rows.clone();
        for (j, (a, &b)) in rows.iter_mut().zip(&other.rows).enumerate() {
            if b != 0 {
                if *a != 0 {
                    return Err(Error::ColumnCollision(j + 1));
                }
                *a = b;
            }
        }
        Ok(Self { rows })
    }

    /// Substitutes `x_{a,j} ↦ x_{a,w(j)}`.
    pub fn permute_columns(&self, w: &Permutation) -> Self {
        let mut rows: RowVec = smallvec::smallvec![0; self.n()];
        for j in 1..=self.n() {
            rows[w.apply(j) - 1] = self.rows[j - 1];
        }
        Self { rows }
    }

    /// Position of `x_{a,j}` in the variable order
    /// `x_{1,1} > ... > x_{1,n} > x_{2,n} > ... > x_{2,1} > x_{3,1} > ...`
    /// (smaller rank = larger variable).
    fn variable_rank(a: usize, j: usize, n: usize) -> usize {
        let within = if a == 2 { n - j } else { j - 1 };
        (a - 1) * n + within
    }
}

/// Lexicographic comparison under the variable order above, row 2 running
/// right to left and every other row left to right.
pub fn term_compare(m1: &Monomial, m2: &Monomial) -> Ordering {
    let n = m1.n().max(m2.n());
    let get = |m: &Monomial, j: usize| m.rows.get(j - 1).copied().unwrap_or(0) as usize;
    let mut best: Option<(usize, Ordering)> = None;
    for j in 1..=n {
        let (a, b) = (get(m1, j), get(m2, j));
        if a == b {
            continue;
        }
        // the variables x_{a,j} (in m1 only) and x_{b,j} (in m2 only)
        if a != 0 {
            let rank = Monomial::variable_rank(a, j, n);
            if best.is_none_or(|(r, _)| rank < r) {
                best = Some((rank, Ordering::Greater));
            }
        }
        if b != 0 {
            let rank = Monomial::variable_rank(b, j, n);
            if best.is_none_or(|(r, _)| rank < r) {
                best = Some((rank, Ordering::Less));
            }
        }
    }
    best.map_or(Ordering::Equal, |(_, o)| o)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        term_compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in 1..=self.n() {
            if let Some(a) = self.row_of(j) {
                if !first {
                    f.write_str("*")?;
                }
                write!(f, "x{a}_{j}")?;
                first = false;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Row set `I` and column set `J` of a minor `M_I^J`, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch {
                expected: rows.len(),
                found: cols.len(),
            });
        }
        rows.sort_unstable();
        cols.sort_unstable();
        let distinct = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && v.first() != Some(&0);
        if !distinct(&rows) || !distinct(&cols) {
            return Err(Error::InvalidParameters(
                "minor rows and columns must be distinct positive indices".into(),
            ));
        }
        Ok(Self { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// A polynomial with integer coefficients in `x_{ij}`, `i ∈ [k]`, `j ∈ [n]`.
#[derive(Clone, Debug)]
pub struct MatrixPolynomial {
    n: usize,
    k: usize,
    terms: HashMap<Monomial, BigInt>,
}

impl PartialEq for MatrixPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for MatrixPolynomial {}

impl MatrixPolynomial {
    pub fn zero(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize, k: usize) -> Self {
        Self::monomial(Monomial::one(n), BigInt::one(), k)
    }

    pub fn monomial(m: Monomial, coeff: BigInt, k: usize) -> Self {
        let mut p = Self::zero(m.n(), k);
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// Builds a polynomial from terms, merging repeats and dropping zeros.
    pub fn from_terms(
        n: usize,
        k: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n, k);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
            if let Some(bad) = m.rows.iter().find(|&&a| a as usize > k) {
                return Err(Error::InvalidParameters(format!(
                    "row {bad} exceeds k = {k}"
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Same polynomial viewed in a universe with `k` rows.
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted by [`term_compare`], largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| term_compare(b.0, a.0));
        v
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.k = self.k.max(other.k);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: &BigInt) -> Result<()> {
        self.check_compatible(other)?;
        self.k = self.k.max(other.k);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * factor);
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n, self.k);
        }
        Self {
            n: self.n,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Product of polynomials; monomials with a shared column are an error.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.k.max(other.k));
        out.terms.reserve(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Substitutes `x_{a,j} ↦ x_{a,w(j)}`.
    pub fn permute_columns(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        Ok(Self {
            n: self.n,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute_columns(w), c.clone()))
                .collect(),
        })
    }

    /// Maximal monomial under [`term_compare`] and its coefficient.
    pub fn leading_term(&self) -> Result<(Monomial, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| term_compare(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    /// Exact value at an integer matrix with at least `k` rows and exactly
    /// `n` columns.
    pub fn evaluate(&self, matrix: &[Vec<i64>]) -> Result<BigInt> {
        if matrix.len() < self.k {
            return Err(Error::SizeMismatch {
                expected: self.k,
                found: matrix.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|row| row.len() != self.n) {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: row.len(),
            });
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (j, &a) in m.rows.iter().enumerate() {
                if a != 0 {
                    let row = matrix.get(a as usize - 1).ok_or(Error::SizeMismatch {
                        expected: a as usize,
                        found: matrix.len(),
                    })?;
                    value *= row[j];
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Whether every monomial uses every column exactly once.
    pub fn is_multihomogeneous_full(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == self.n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: PolynomialJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "polynomial JSON",
            detail: e.to_string(),
        })?;
        parsed.try_into()
    }
}

/// Wire form: `{"n":N,"k":K,"terms":[{"rows":[...],"coeff":"<decimal>"}]}`,
/// terms sorted largest first under the term order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub k: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub rows: Vec<usize>,
    pub coeff: String,
}

impl From<&MatrixPolynomial> for PolynomialJson {
    fn from(p: &MatrixPolynomial) -> Self {
        Self {
            n: p.n,
            k: p.k,
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    rows: m.rows(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for MatrixPolynomial {
    type Error = Error;

    fn try_from(json: PolynomialJson) -> Result<Self> {
        let terms = json
            .terms
            .into_iter()
            .map(|t| {
                if t.rows.len() != json.n {
                    return Err(Error::SizeMismatch {
                        expected: json.n,
                        found: t.rows.len(),
                    });
                }
                let coeff: BigInt = t.coeff.parse().map_err(|_| Error::Parse {
                    what: "coefficient",
                    detail: t.coeff.clone(),
                })?;
                Ok((Monomial::new(&t.rows)?, coeff))
            })
            .collect::<Result<Vec<_>>>()?;
        MatrixPolynomial::from_terms(json.n, json.k, terms)
    }
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Calls `visit(perm, sign)` for every permutation of `0..m`.
pub(crate) fn for_each_permutation(m: usize, mut visit: impl FnMut(&[usize], i32)) {
    fn rec(
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        inversions: usize,
        visit: &mut dyn FnMut(&[usize], i32),
    ) {
        let m = used.len();
        if perm.len() == m {
            visit(perm, if inversions.is_multiple_of(2) { 1 } else { -1 });
            return;
        }
        let mut smaller_unused = 0;
        for v in 0..m {
            if used[v] {
                continue;
            }
            // v precedes every larger unused value: those are not inversions,
            // the smaller unused ones placed later are.
            used[v] = true;
            perm.push(v);
            rec(perm, used, inversions + smaller_unused, visit);
            perm.pop();
            used[v] = false;
            smaller_unused += 1;
        }
    }
    rec(
        &mut Vec::with_capacity(m),
        &mut vec![false; m],
        0,
        &mut visit,
    );
}

/// Leibniz expansion of `M_I^J` in a `k × n` universe.
pub fn minor(spec: &MinorSpec, n: usize, k: usize) -> Result<MatrixPolynomial> {
    if spec.rows.last().is_some_and(|&a| a > k) {
        return Err(Error::InvalidParameters(format!(
            "minor rows exceed k = {k}"
        )));
    }
    if spec.cols.last().is_some_and(|&j| j > n) {
        return Err(Error::InvalidParameters(format!(
            "minor columns exceed n = {n}"
        )));
    }
    let m = spec.size();
    let mut p = MatrixPolynomial::zero(n, k);
    p.terms.reserve((1..=m).product());
    let mut rows: RowVec = smallvec::smallvec![0; n];
    for_each_permutation(m, |perm, sign| {
        for (t, &s) in perm.iter().enumerate() {
            rows[spec.cols[t] - 1] = spec.rows[s] as u8;
        }
        p.terms
            .insert(Monomial { rows: rows.clone() }, BigInt::from(sign));
    });
    Ok(p)
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let m = matrix.len();
    if m == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for col in 0..m {
        let Some(pivot) = (col..m).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            sign = -sign;
        }
        for i in col + 1..m {
            for j in col + 1..m {
                let v = (&a[i][j] * &a[col][col] - &a[i][col] * &a[col][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Numeric value of `M_I^J` at an integer matrix.
pub fn numeric_minor(matrix: &[Vec<i64>], spec: &MinorSpec) -> BigInt {
    let sub: Vec<Vec<BigInt>> = spec
        .rows
        .iter()
        .map(|&a| {
            spec.cols
                .iter()
                .map(|&j| BigInt::from(matrix[a - 1][j - 1]))
                .collect()
        })
        .collect();
    determinant(&sub)
}

/// Uniform integer matrix with entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}
