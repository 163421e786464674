//! The `Gr(n, 2n)` side: the embedding `Φ(M) = [M_0 | M]`, translation
//! between Plücker coordinates and matrix minors, and expansion of the
//! Grassmann–Cayley expression `(⋀_{i<d} v_S ∩ v_{E∪(π_i+n)}) ∧ v_{E∪(π_d+n)}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{count_inversions, parity_sign, FlamingoContext, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::polyring::{determinant, minor, MatrixPolynomial, MinorSpec};
use crate::tableaux::JellyfishTableau;

/// `[M_0 | M]` with `M_0 = diag(1, −1, 1, …)`.
pub fn phi(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    if let Some(row) = m.iter().find(|row| row.len() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            found: row.len(),
        });
    }
    Ok(m.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut out = vec![0; 2 * n];
            out[i] = if i % 2 == 0 { 1 } else { -1 };
            out[n..].copy_from_slice(row);
            out
        })
        .collect())
}

/// `K = ([n] ∖ I) ∪ (J + n)`, sorted.
pub fn delta_index_set(i_set: &[usize], j_set: &[usize], n: usize) -> Result<Vec<usize>> {
    let spec = MinorSpec::new(i_set.to_vec(), j_set.to_vec())?;
    if spec.rows.last().is_some_and(|&a| a > n) || spec.cols.last().is_some_and(|&j| j > n) {
        return Err(Error::InvalidParameters(format!(
            "minor indices exceed n = {n}"
        )));
    }
    Ok((1..=n)
        .filter(|a| !spec.rows.contains(a))
        .chain(spec.cols.iter().map(|j| j + n))
        .collect())
}

/// Result of rewriting `Δ_K(Φ(M))` as `sign · M_I^J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTranslation {
    pub sign: i32,
    pub minor: MinorSpec,
    /// Whether `sign` equals `(−1)^{|I|}`.
    pub agrees_with_size_parity: bool,
}

/// Laplace expansion of `Δ_K(Φ(M))` along the unit columns `K ∩ [n]`.
pub fn delta_to_minor(k_set: &[usize], n: usize) -> Result<MinorTranslation> {
    let mut k: Vec<usize> = k_set.to_vec();
    k.sort_unstable();
    k.dedup();
    if k.len() != n
        || k_set.len() != n
        || k.first() == Some(&0)
        || k.last().is_some_and(|&x| x > 2 * n)
    {
        return Err(Error::InvalidParameters(format!(
            "expected {n} distinct indices in 1..={}",
            2 * n
        )));
    }
    let unit: Vec<usize> = k.iter().copied().filter(|&x| x <= n).collect();
    let rows: Vec<usize> = (1..=n).filter(|a| !unit.contains(a)).collect();
    let cols: Vec<usize> = k.iter().filter(|&&x| x > n).map(|x| x - n).collect();
    // diagonal entries of M_0 and the displacement of each unit column
    let mut exponent = unit.iter().filter(|&&u| u % 2 == 0).count();
    for &u in &unit {
        exponent += rows.iter().filter(|&&i| i < u).count();
    }
    let sign = parity_sign(exponent);
    let minor = MinorSpec::new(rows, cols)?;
    let agrees_with_size_parity = sign == parity_sign(minor.size());
    Ok(MinorTranslation {
        sign,
        minor,
        agrees_with_size_parity,
    })
}

/// One summand of an [`Extensor`]: `coeff · ∏ Δ_F · v_{indices}` with the
/// wedge taken in the stored order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensorTerm {
    pub coeff: BigInt,
    pub indices: Vec<usize>,
    pub factors: Vec<Vec<usize>>,
}

/// A signed sum of wedges `v_{j_1} ∧ … ∧ v_{j_b}` of vectors in `V = ℂ^n`,
/// each carrying accumulated Plücker factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extensor {
    pub n: usize,
    pub terms: Vec<ExtensorTerm>,
}

impl Extensor {
    pub fn scalar(n: usize) -> Self {
        Self {
            n,
            terms: vec![ExtensorTerm {
                coeff: BigInt::one(),
                indices: Vec::new(),
                factors: Vec::new(),
            }],
        }
    }

    /// `v_J` with `J` in ascending order.
    pub fn basis(n: usize, indices: &[usize]) -> Self {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        Self {
            n,
            terms: vec![ExtensorTerm {
                coeff: BigInt::one(),
                indices,
                factors: Vec::new(),
            }],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exterior degree, if all terms share one.
    pub fn degree(&self) -> Option<usize> {
        let first = self.terms.first()?.indices.len();
        self.terms
            .iter()
            .all(|t| t.indices.len() == first)
            .then_some(first)
    }

    /// Numeric value of a top-degree (or scalar) extensor at the columns of
    /// an `n × 2n` integer matrix.
    pub fn evaluate_top(&self, v: &[Vec<i64>]) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for t in &self.terms {
            if !t.indices.is_empty() && t.indices.len() != self.n {
                return Err(Error::DegreeMismatch(format!(
                    "term of degree {} is neither scalar nor top",
                    t.indices.len()
                )));
            }
            let mut value = t.coeff.clone();
            for f in &t.factors {
                value *= column_determinant(v, f);
            }
            if !t.indices.is_empty() {
                value *= column_determinant(v, &t.indices);
            }
            total += value;
        }
        Ok(total)
    }
}

/// Sign sorting `word` into ascending order, or `None` on a repeat.
fn sort_sign(word: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((parity_sign(count_inversions(word)), sorted))
}

/// `det(v_{c_1}, …, v_{c_n})` for the columns `c` of `v`, in the given order.
fn column_determinant(v: &[Vec<i64>], cols: &[usize]) -> BigInt {
    let m: Vec<Vec<BigInt>> = v
        .iter()
        .map(|row| cols.iter().map(|&c| BigInt::from(row[c - 1])).collect())
        .collect();
    determinant(&m)
}

/// Calls `visit` with every `b`-subset of `0..len` in lexicographic order.
fn for_each_subset(len: usize, b: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        start: usize,
        len: usize,
        b: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == b {
            visit(cur);
            return;
        }
        for p in start..=len - (b - cur.len()) {
            cur.push(p);
            rec(p + 1, len, b, cur, visit);
            cur.pop();
        }
    }
    if b <= len {
        rec(0, len, b, &mut Vec::with_capacity(b), visit);
    }
}

/// The meet `x ∩ y`: for `y` of degree `n − b`, move every `b`-subset of
/// each term of `x` into a determinant with `y`.
pub fn cap(x: &Extensor, y: &Extensor) -> Result<Extensor> {
    if x.n != y.n {
        return Err(Error::SizeMismatch {
            expected: x.n,
            found: y.n,
        });
    }
    let n = x.n;
    let mut out = Extensor {
        n,
        terms: Vec::new(),
    };
    for tx in &x.terms {
        for ty in &y.terms {
            if ty.indices.len() > n {
                return Err(Error::DegreeMismatch(format!(
                    "degree {} exceeds n = {n}",
                    ty.indices.len()
                )));
            }
            let b = n - ty.indices.len();
            if tx.indices.len() < b {
                return Err(Error::DegreeMismatch(format!(
                    "cannot move {b} vectors out of a degree-{} extensor",
                    tx.indices.len()
                )));
            }
            let len = tx.indices.len();
            for_each_subset(len, b, &mut |moved| {
                let kept: Vec<usize> = (0..len).filter(|p| !moved.contains(p)).collect();
                let position_word: Vec<usize> = moved.iter().chain(&kept).copied().collect();
                let det_word: Vec<usize> = moved
                    .iter()
                    .map(|&p| tx.indices[p])
                    .chain(ty.indices.iter().copied())
                    .collect();
                let Some((det_sign, factor)) = sort_sign(&det_word) else {
                    return;
                };
                let sign = parity_sign(count_inversions(&position_word)) * det_sign;
                let mut factors = tx.factors.clone();
                factors.extend(ty.factors.iter().cloned());
                factors.push(factor);
                out.terms.push(ExtensorTerm {
                    coeff: &tx.coeff * &ty.coeff * sign,
                    indices: kept.iter().map(|&p| tx.indices[p]).collect(),
                    factors,
                });
            });
        }
    }
    Ok(out)
}

/// The join `x ∧ y`, dropping terms with a repeated vector.
pub fn wedge(x: &Extensor, y: &Extensor) -> Result<Extensor> {
    if x.n != y.n {
        return Err(Error::SizeMismatch {
            expected: x.n,
            found: y.n,
        });
    }
    let mut out = Extensor {
        n: x.n,
        terms: Vec::new(),
    };
    for tx in &x.terms {
        for ty in &y.terms {
            if tx.indices.iter().any(|i| ty.indices.contains(i)) {
                continue;
            }
            if tx.indices.len() + ty.indices.len() > x.n {
                return Err(Error::DegreeMismatch(format!(
                    "wedge of degree {} exceeds n = {}",
                    tx.indices.len() + ty.indices.len(),
                    x.n
                )));
            }
            let mut factors = tx.factors.clone();
            factors.extend(ty.factors.iter().cloned());
            out.terms.push(ExtensorTerm {
                coeff: &tx.coeff * &ty.coeff,
                indices: tx.indices.iter().chain(&ty.indices).copied().collect(),
                factors,
            });
        }
    }
    Ok(out)
}

/// A signed sum of products of Plücker coordinates `Δ_K` on `Gr(n, 2n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlueckerExpression {
    pub n: usize,
    pub terms: Vec<(BigInt, Vec<Vec<usize>>)>,
}

impl PlueckerExpression {
    /// Reads off a top-degree extensor, turning each term's wedge into one
    /// more Plücker factor; terms are kept in order and not merged.
    pub fn from_top_extensor(e: &Extensor) -> Result<Self> {
        let mut terms = Vec::with_capacity(e.terms.len());
        for t in &e.terms {
            let mut factors = t.factors.clone();
            let mut coeff = t.coeff.clone();
            match t.indices.len() {
                0 => {}
                len if len == e.n => {
                    let Some((sign, sorted)) = sort_sign(&t.indices) else {
                        continue;
                    };
                    coeff *= sign;
                    factors.push(sorted);
                }
                len => {
                    return Err(Error::DegreeMismatch(format!(
                        "extensor term of degree {len} is not top degree {}",
                        e.n
                    )))
                }
            }
            if !coeff.is_zero() {
                terms.push((coeff, factors));
            }
        }
        Ok(Self { n: e.n, terms })
    }

    /// Sorts factors, merges equal monomials and drops zeros.
    pub fn canonicalize(&self) -> Self {
        let mut merged: BTreeMap<Vec<Vec<usize>>, BigInt> = BTreeMap::new();
        for (c, factors) in &self.terms {
            let mut key = factors.clone();
            key.sort();
            *merged.entry(key).or_default() += c;
        }
        Self {
            n: self.n,
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(f, c)| (c, f))
                .collect(),
        }
    }

    /// Numeric value at the columns of an `n × 2n` matrix.
    pub fn evaluate(&self, v: &[Vec<i64>]) -> BigInt {
        self.terms
            .iter()
            .map(|(c, factors)| {
                factors
                    .iter()
                    .fold(c.clone(), |acc, f| acc * column_determinant(v, f))
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// The Grassmann–Cayley expression of `π` with terms in expansion order.
pub fn gc_jellyfish_raw(pi: &OrderedSetPartition, r: usize) -> Result<PlueckerExpression> {
    let ctx = FlamingoContext::new(pi, r)?;
    let n = ctx.n;
    let s: Vec<usize> = ctx.tentacle_rows().collect();
    let e: Vec<usize> = ctx.lower_rows().collect();
    let outer = |i: usize| -> Vec<usize> {
        e.iter()
            .copied()
            .chain(pi.block(i).iter().map(|x| x + n))
            .collect()
    };
    let v_s = Extensor::basis(n, &s);
    let mut acc = Extensor::scalar(n);
    for i in 0..ctx.d - 1 {
        let meet = cap(&v_s, &Extensor::basis(n, &outer(i)))?;
        acc = wedge(&acc, &meet)?;
    }
    acc = wedge(&acc, &Extensor::basis(n, &outer(ctx.d - 1)))?;
    PlueckerExpression::from_top_extensor(&acc)
}

/// `[π]'_r`, canonicalized.
pub fn gc_jellyfish(pi: &OrderedSetPartition, r: usize) -> Result<PlueckerExpression> {
    Ok(gc_jellyfish_raw(pi, r)?.canonicalize())
}

/// `Φ^*`: substitutes `Δ_K ↦ ε M_I^J` and expands in the `x_{ij}`.
pub fn phi_star(e: &PlueckerExpression) -> Result<MatrixPolynomial> {
    let n = e.n;
    let mut total = MatrixPolynomial::zero(n, n);
    for (c, factors) in &e.terms {
        let mut prod = MatrixPolynomial::one(n, n);
        let mut coeff = c.clone();
        for f in factors {
            let t = delta_to_minor(f, n)?;
            coeff *= t.sign;
            prod = prod.mul(&minor(&t.minor, n, n)?)?;
        }
        total.add_assign_scaled(&prod, &coeff)?;
    }
    Ok(total)
}

/// Outcome of comparing two polynomials up to sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignMatch {
    Plus,
    Minus,
    NotProportional,
}

impl SignMatch {
    pub fn as_sign(self) -> Option<i32> {
        match self {
            SignMatch::Plus => Some(1),
            SignMatch::Minus => Some(-1),
            SignMatch::NotProportional => None,
        }
    }
}

pub fn compare_up_to_sign(p: &MatrixPolynomial, q: &MatrixPolynomial) -> SignMatch {
    if p == q {
        SignMatch::Plus
    } else if *p == q.neg() {
        SignMatch::Minus
    } else {
        SignMatch::NotProportional
    }
}

/// `(−1)^{inv(word(T̂)) + ½ Σ_i ν_i (ν − |π_i|)}` for the top-justified
/// tableau `T̂`.
pub fn predicted_global_sign(pi: &OrderedSetPartition, r: usize) -> Result<i32> {
    let t = JellyfishTableau::top_justified(pi, r)?;
    let ctx = t.context();
    let twice: usize = ctx
        .nu_i
        .iter()
        .zip(pi.block_sizes())
        .map(|(&nu_i, size)| nu_i * (ctx.nu - size))
        .sum();
    assert!(twice.is_multiple_of(2), "half-integer exponent");
    Ok(parity_sign(t.inversion_number() + twice / 2))
}

/// Pairs the raw expansion terms with the tableau terms in reverse order and
/// returns the common sign relating them, if every pair agrees up to it.
pub fn reverse_order_sign(pi: &OrderedSetPartition, r: usize) -> Result<Option<i32>> {
    let raw = gc_jellyfish_raw(pi, r)?;
    let mut tableau_terms = crate::invariants::signed_minor_products(pi, r)?;
    if raw.terms.len() != tableau_terms.len() {
        return Ok(None);
    }
    tableau_terms.reverse();
    let mut global = None;
    for ((c, factors), (sign, specs)) in raw.terms.iter().zip(&tableau_terms) {
        let mut eps = c.clone();
        let mut minors = Vec::with_capacity(factors.len());
        for f in factors {
            let t = delta_to_minor(f, pi.n())?;
            eps *= t.sign;
            minors.push(t.minor);
        }
        minors.sort_by(|a, b| a.cols.cmp(&b.cols));
        let mut expected = specs.clone();
        expected.sort_by(|a, b| a.cols.cmp(&b.cols));
        if minors != expected {
            return Ok(None);
        }
        let ratio = if eps == BigInt::from(*sign) {
            1
        } else if eps == BigInt::from(-*sign) {
            -1
        } else {
            return Ok(None);
        };
        if *global.get_or_insert(ratio) != ratio {
            return Ok(None);
        }
    }
    Ok(global)
}
