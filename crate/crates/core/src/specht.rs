//! Flamingo Specht modules `S^{(d^r, 1^{n−rd})}` inside the polynomial ring:
//! spanning sets, exact rank, membership and the hook basis.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinat::{enumerate_set_partitions, OrderedSetPartition};
use crate::error::{Error, Result};
use crate::invariants::jellyfish_invariant;
use crate::polyring::{minor, term_compare, MatrixPolynomial, MinorSpec, Monomial};

/// `λ = (d^r, 1^{n−rd})` together with its transpose `μ = (ν, r^{d−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpechtShape {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl SpechtShape {
    pub fn flamingo(n: usize, d: usize, r: usize) -> Result<Self> {
        if d == 0 || r == 0 || r * d > n {
            return Err(Error::InvalidParameters(format!(
                "no flamingo shape for n={n}, d={d}, r={r}"
            )));
        }
        let mut lambda = vec![d; r];
        lambda.extend(std::iter::repeat_n(1, n - r * d));
        let nu = n - (d - 1) * r;
        let mut mu = vec![nu];
        mu.extend(std::iter::repeat_n(r, d - 1));
        Ok(Self {
            n,
            d,
            r,
            lambda,
            mu,
        })
    }

    /// Recognizes `λ` as a flamingo shape.
    pub fn from_lambda(lambda: &[usize]) -> Result<Self> {
        let unsupported = || Error::UnsupportedShape(format!("{lambda:?}"));
        let (&d, _) = lambda.split_first().ok_or_else(unsupported)?;
        if d == 0 || lambda.contains(&0) {
            return Err(unsupported());
        }
        let n: usize = lambda.iter().sum();
        if d == 1 {
            return Self::flamingo(n, 1, 1);
        }
        let r = lambda.iter().take_while(|&&x| x == d).count();
        if lambda[r..].iter().any(|&x| x != 1) {
            return Err(unsupported());
        }
        Self::flamingo(n, d, r)
    }

    pub fn nu(&self) -> usize {
        self.mu[0]
    }
}

impl fmt::Display for SpechtShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn dimension_of(lambda: &[usize]) -> BigUint {
    let n: usize = lambda.iter().sum();
    let mut conj = vec![0usize; lambda.first().copied().unwrap_or(0)];
    for &row in lambda {
        for c in conj.iter_mut().take(row) {
            *c += 1;
        }
    }
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            hooks *= BigUint::from((row - j - 1) + (col - i - 1) + 1);
        }
    }
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    factorial / hooks
}

pub fn dimension(shape: &SpechtShape) -> BigUint {
    dimension_of(&shape.lambda)
}

/// Column-set tuples `(J_1, …, J_d)` of sizes `μ`, one per unordered choice
/// within each size class.
fn column_set_tuples(shape: &SpechtShape) -> Vec<Vec<Vec<usize>>> {
    let (n, d, r, nu) = (shape.n, shape.d, shape.r, shape.nu());
    let mut out = Vec::new();
    if nu == r {
        for pi in enumerate_set_partitions(n, d, r).expect("valid flamingo parameters") {
            out.push(pi.blocks().to_vec());
        }
        return out;
    }
    // J_1 of size ν, the remaining n − ν elements cut into (d − 1) r-sets
    let all: Vec<usize> = (1..=n).collect();
    for_each_combination(&all, nu, &mut |first| {
        let rest: Vec<usize> = all.iter().copied().filter(|x| !first.contains(x)).collect();
        if d == 1 {
            out.push(vec![first.to_vec()]);
            return;
        }
        let relabeled = enumerate_set_partitions(rest.len(), d - 1, r).expect("valid sizes");
        for pi in relabeled {
            if pi.blocks().iter().any(|b| b.len() != r) {
                continue;
            }
            let mut tuple = vec![first.to_vec()];
            tuple.extend(
                pi.blocks()
                    .iter()
                    .map(|b| b.iter().map(|&x| rest[x - 1]).collect()),
            );
            out.push(tuple);
        }
    });
    out
}

fn for_each_combination(items: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, visit);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), visit);
}

/// Products `M_{[ν]}^{J_1} ∏_{i≥2} M_{[r]}^{J_i}` of top-justified minors.
pub fn spanning_set(shape: &SpechtShape) -> Result<Vec<MatrixPolynomial>> {
    let (n, r, nu) = (shape.n, shape.r, shape.nu());
    column_set_tuples(shape)
        .into_iter()
        .map(|tuple| {
            let mut prod = MatrixPolynomial::one(n, nu);
            for (i, cols) in tuple.into_iter().enumerate() {
                let rows: Vec<usize> = (1..=if i == 0 { nu } else { r }).collect();
                prod = prod.mul(&minor(&MinorSpec::new(rows, cols)?, n, nu)?)?;
            }
            Ok(prod)
        })
        .collect()
}

type SparseRow = Vec<(Monomial, BigInt)>;

/// Terms sorted largest first under the term order.
fn to_row(p: &MatrixPolynomial) -> SparseRow {
    p.sorted_terms()
        .into_iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

/// `a·x − b·y` for rows sorted largest first, divided by its content.
fn combine(x: &SparseRow, a: &BigInt, y: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ord = match (x.get(i), y.get(j)) {
            (Some(s), Some(t)) => term_compare(&s.0, &t.0),
            (Some(_), None) => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Less,
        };
        match ord {
            std::cmp::Ordering::Greater => {
                out.push((x[i].0.clone(), a * &x[i].1));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((y[j].0.clone(), -(b * &y[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a * &x[i].1 - b * &y[j].1;
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    let g = out.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
    if g > BigInt::one() {
        for (_, c) in &mut out {
            *c /= &g;
        }
    }
    out
}

/// Row-echelon basis over `ℚ` with integer rows, built incrementally; each
/// stored row has a distinct leading monomial.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: HashMap<Monomial, SparseRow>,
    pivots: Vec<Monomial>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` until its leading monomial is not a pivot; empty means
    /// it lies in the span.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, c)) = row.first() {
            let Some(basis_row) = self.rows.get(lead) else {
                break;
            };
            let b = &basis_row[0].1;
            let g = b.gcd(c);
            let (fa, fb) = (b / &g, c / &g);
            row = combine(&row, &fa, basis_row, &fb);
        }
        if row.first().is_some_and(|(_, c)| c.is_negative()) {
            for (_, c) in &mut row {
                *c = -c.clone();
            }
        }
        row
    }

    /// Adds `p`; returns whether the rank grew.
    pub fn insert(&mut self, p: &MatrixPolynomial) -> bool {
        let row = self.reduce(to_row(p));
        match row.first() {
            None => false,
            Some((lead, _)) => {
                self.pivots.push(lead.clone());
                self.rows.insert(lead.clone(), row);
                true
            }
        }
    }

    pub fn contains(&self, p: &MatrixPolynomial) -> bool {
        self.reduce(to_row(p)).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[Monomial] {
        &self.pivots
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
    /// Leading monomials of the echelon rows, in insertion order.
    #[serde(skip)]
    pub pivots: Vec<Monomial>,
}

/// Rank over `ℚ` of the coefficient matrix of `polys`.
pub fn exact_rank(polys: &[MatrixPolynomial]) -> RankProfile {
    let mut columns = std::collections::HashSet::new();
    let mut echelon = Echelon::new();
    for p in polys {
        columns.extend(p.terms().map(|(m, _)| m.clone()));
        echelon.insert(p);
    }
    RankProfile {
        rows: polys.len(),
        columns: columns.len(),
        rank: echelon.rank(),
        pivots: echelon.pivots,
    }
}

/// Whether the leading monomials of `polys` are pairwise distinct (which
/// forces linear independence).
pub fn distinct_leading_monomials(polys: &[MatrixPolynomial]) -> Result<bool> {
    let mut seen = std::collections::HashSet::new();
    for p in polys {
        if !seen.insert(p.leading_monomial()?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An echelon basis of the spanning set of a shape, for repeated membership
/// queries.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    pub shape: SpechtShape,
    pub generators: usize,
    echelon: Echelon,
}

impl SpechtModule {
    pub fn new(shape: SpechtShape) -> Result<Self> {
        let gens = spanning_set(&shape)?;
        let mut echelon = Echelon::new();
        for g in &gens {
            echelon.insert(g);
        }
        Ok(Self {
            shape,
            generators: gens.len(),
            echelon,
        })
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, p: &MatrixPolynomial) -> bool {
        self.echelon.contains(p)
    }
}

pub fn membership_test(p: &MatrixPolynomial, shape: &SpechtShape) -> Result<bool> {
    Ok(SpechtModule::new(shape.clone())?.contains(p))
}

/// Interval partitions `π_i = [p_i, p_{i+1} − 1]` for `{1} ∪ P`, `P ⊆ {2..n}`
/// of size `d − 1`, in lexicographic order of `P`.
pub fn hook_family(n: usize, d: usize) -> Result<Vec<OrderedSetPartition>> {
    if d == 0 || d > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    let starts: Vec<usize> = (2..=n).collect();
    let mut out = Vec::new();
    for_each_combination(&starts, d - 1, &mut |p| {
        let mut cuts = vec![1];
        cuts.extend_from_slice(p);
        cuts.push(n + 1);
        let blocks = cuts.windows(2).map(|w| (w[0]..w[1]).collect()).collect();
        out.push(OrderedSetPartition::new(n, blocks).expect("intervals partition [n]"));
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookReport {
    pub n: usize,
    pub d: usize,
    pub family_size: usize,
    pub rank: usize,
    pub dimension: String,
    pub all_in_module: bool,
}

impl HookReport {
    pub fn holds(&self) -> bool {
        self.family_size.to_string() == self.dimension
            && self.rank == self.family_size
            && self.all_in_module
    }
}

/// Rank and membership of `{[π]_1 : π ∈ hook_family(n, d)}`.
pub fn verify_hook_basis(n: usize, d: usize) -> Result<HookReport> {
    let family = hook_family(n, d)?;
    let invariants = family
        .iter()
        .map(|pi| jellyfish_invariant(pi, 1))
        .collect::<Result<Vec<_>>>()?;
    let module = SpechtModule::new(SpechtShape::flamingo(n, d, 1)?)?;
    Ok(HookReport {
        n,
        d,
        family_size: family.len(),
        rank: exact_rank(&invariants).rank,
        dimension: dimension(&module.shape).to_string(),
        all_in_module: invariants.iter().all(|p| module.contains(p)),
    })
}
