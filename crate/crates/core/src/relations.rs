//! Linear relations among jellyfish invariants: the `(2^r + 1)`-term
//! recurrence, the `r = 1` three-term relation and crossing resolution, and
//! the independence harness for nearly noncrossing families.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{
    enumerate_noncrossing, enumerate_set_partitions, transposition_distance_to_noncrossing,
    OrderedSetPartition,
};
use crate::error::{Error, Result};
use crate::invariants::jellyfish_invariant;
use crate::polyring::MatrixPolynomial;
use crate::specht::exact_rank;

/// Left side `(prefix | A∪B | C)` and signed right-hand terms
/// `(prefix | A∪S | B∪(C∖S))`, `S ⊆ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub lhs: OrderedSetPartition,
    pub rhs: Vec<(i32, OrderedSetPartition)>,
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out
}

/// Subsets of `c` ordered by size, then lexicographically by position.
fn subsets_by_size(c: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << c.len())
        .map(|mask| {
            (0..c.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| c[i])
                .collect()
        })
        .collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

pub fn recurrence_terms(
    prefix: &[Vec<usize>],
    a: &[usize],
    b: &[usize],
    c: &[usize],
    r: usize,
) -> Result<Recurrence> {
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return Err(Error::Constraint("A, B and C must be nonempty".into()));
    }
    if c.len() != r {
        return Err(Error::Constraint(format!("|C| = {} but r = {r}", c.len())));
    }
    let n = prefix.iter().map(Vec::len).sum::<usize>() + a.len() + b.len() + c.len();
    let with_tail = |x: Vec<usize>, y: Vec<usize>| -> Result<OrderedSetPartition> {
        let mut blocks = prefix.to_vec();
        blocks.push(x);
        blocks.push(y);
        OrderedSetPartition::new(n, blocks).map_err(|e| Error::Constraint(e.to_string()))
    };
    let lhs = with_tail(union(a, b), c.to_vec())?;
    let rhs = subsets_by_size(c)
        .into_iter()
        .map(|s| {
            let rest: Vec<usize> = c.iter().copied().filter(|x| !s.contains(x)).collect();
            let sign = if s.len() % 2 == 0 { 1 } else { -1 };
            Ok((sign, with_tail(union(a, &s), union(b, &rest))?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Recurrence { lhs, rhs })
}

/// `Σ c_i [π_i]_r` for signed or integer-weighted partitions.
pub fn signed_sum<'a>(
    terms: impl IntoIterator<Item = (BigInt, &'a OrderedSetPartition)>,
    n: usize,
    r: usize,
) -> Result<MatrixPolynomial> {
    let mut total = MatrixPolynomial::zero(n, n);
    for (c, pi) in terms {
        total.add_assign_scaled(&jellyfish_invariant(pi, r)?, &c)?;
    }
    Ok(total)
}

pub fn verify_recurrence(
    prefix: &[Vec<usize>],
    a: &[usize],
    b: &[usize],
    c: &[usize],
    r: usize,
) -> Result<bool> {
    let rec = recurrence_terms(prefix, a, b, c, r)?;
    let n = rec.lhs.n();
    let rhs = signed_sum(rec.rhs.iter().map(|(s, pi)| (BigInt::from(*s), pi)), n, r)?;
    Ok(jellyfish_invariant(&rec.lhs, r)? == rhs)
}

/// `[A∪B|C]_1 + [A∪C|B]_1 + [B∪C|A]_1 = 0` for `|C| = 1`.
pub fn verify_three_term(a: &[usize], b: &[usize], c: &[usize]) -> Result<bool> {
    if c.len() != 1 {
        return Err(Error::Constraint(format!(
            "|C| = {} but must be 1",
            c.len()
        )));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::Constraint("A and B must be nonempty".into()));
    }
    let n = a.len() + b.len() + 1;
    let make = |x: Vec<usize>, y: &[usize]| {
        OrderedSetPartition::new(n, vec![x, y.to_vec()])
            .map_err(|e| Error::Constraint(e.to_string()))
    };
    let parts = [
        make(union(a, b), c)?,
        make(union(a, c), b)?,
        make(union(b, c), a)?,
    ];
    let total = signed_sum(parts.iter().map(|pi| (BigInt::from(1), pi)), n, 1)?;
    Ok(total.is_zero())
}

/// Number of crossing block pairs.
pub fn crossing_measure(pi: &OrderedSetPartition) -> usize {
    pi.crossing_pairs().len()
}

/// A rewriting `[π]_1 = Σ c · [π']_1`.
pub type Resolution = Vec<(BigInt, OrderedSetPartition)>;

/// Moves `c` out of block `from` using the three-term relation:
/// `[…X…Y…] = […X∪Y∖c…c…] + […X∪c…Y∖c…]` with `Y = π_from ∋ c`,
/// `X = π_to`, positions kept.
fn move_element(pi: &OrderedSetPartition, from: usize, to: usize, c: usize) -> Resolution {
    let blocks = pi.blocks();
    let y_rest: Vec<usize> = blocks[from].iter().copied().filter(|&x| x != c).collect();
    let build = |at_to: Vec<usize>, at_from: Vec<usize>| {
        let mut bs = blocks.to_vec();
        bs[to] = at_to;
        bs[from] = at_from;
        OrderedSetPartition::new(pi.n(), bs).expect("blocks still partition [n]")
    };
    vec![
        (BigInt::from(1), build(union(&blocks[to], &y_rest), vec![c])),
        (BigInt::from(1), build(union(&blocks[to], &[c]), y_rest)),
    ]
}

/// All single moves between two crossing blocks, the pair of the first
/// crossing quadruple first and its elements first within each block.
fn candidate_moves(pi: &OrderedSetPartition) -> Vec<Resolution> {
    let quad = pi.first_crossing_quadruple().unwrap_or([0; 4]);
    let mut pairs = pi.crossing_pairs();
    let lead = (pi.block_of(quad[0]), pi.block_of(quad[1]));
    if let (Some(x), Some(y)) = lead {
        let key = (x.min(y), x.max(y));
        pairs.retain(|&p| p != key);
        pairs.insert(0, (y, x));
    }
    let mut out = Vec::new();
    for (i, j) in pairs {
        for (from, to) in [(i, j), (j, i)] {
            let block = pi.block(from);
            if block.len() < 2 {
                continue;
            }
            let mut order: Vec<usize> =
                quad.iter().copied().filter(|e| block.contains(e)).collect();
            order.extend(block.iter().copied().filter(|e| !quad.contains(e)));
            out.extend(order.into_iter().map(|c| move_element(pi, from, to, c)));
        }
    }
    out
}

fn normalize(terms: Resolution) -> Resolution {
    let mut merged: BTreeMap<String, (BigInt, OrderedSetPartition)> = BTreeMap::new();
    for (c, q) in terms {
        merged
            .entry(q.to_string())
            .or_insert_with(|| (BigInt::from(0), q))
            .0 += c;
    }
    merged
        .into_values()
        .filter(|(c, _)| *c != BigInt::from(0))
        .collect()
}

fn decreases(res: &Resolution, measure: usize) -> bool {
    res.iter().all(|(_, q)| crossing_measure(q) < measure)
}

fn crossing_key(pi: &OrderedSetPartition) -> (usize, usize) {
    (crossing_measure(pi), pi.crossing_quadruples())
}

/// First single move whose terms all have a smaller `(pairs, quadruples)` key.
fn first_decreasing_move(pi: &OrderedSetPartition) -> Result<Resolution> {
    let key = crossing_key(pi);
    if key.0 == 0 {
        return Err(Error::NoCrossing(pi.to_string()));
    }
    candidate_moves(pi)
        .into_iter()
        .find(|res| res.iter().all(|(_, q)| crossing_key(q) < key))
        .ok_or_else(|| Error::Constraint(format!("no crossing-decreasing move for {pi}")))
}

/// Two distinct rewritings of `[π]_1` over partitions with fewer crossing
/// pairs. Single moves are tried first; a move that leaves some term with
/// as many crossings is completed by fully resolving those terms.
pub fn resolve_crossing_r1(pi: &OrderedSetPartition) -> Result<(Resolution, Resolution)> {
    let measure = crossing_measure(pi);
    if measure == 0 {
        return Err(Error::NoCrossing(pi.to_string()));
    }
    let moves = candidate_moves(pi);
    let mut found: Vec<Resolution> = Vec::new();
    let push = |res: Resolution, found: &mut Vec<Resolution>| {
        let res = normalize(res);
        if !res.is_empty() && !found.contains(&res) {
            found.push(res);
        }
    };
    for res in moves.iter().filter(|res| decreases(res, measure)) {
        push(res.clone(), &mut found);
    }
    for res in moves.iter().filter(|res| !decreases(res, measure)) {
        if found.len() >= 2 {
            break;
        }
        let mut completed = Vec::new();
        for (c, q) in res {
            if crossing_measure(q) < measure {
                completed.push((c.clone(), q.clone()));
            } else {
                completed.extend(resolve_fully_r1(q)?.into_iter().map(|(e, p)| (c * e, p)));
            }
        }
        push(completed, &mut found);
    }
    if found.len() < 2 {
        return Err(Error::Constraint(format!(
            "found {} crossing-decreasing rewriting(s) of {pi}",
            found.len()
        )));
    }
    let second = found.swap_remove(1);
    Ok((found.swap_remove(0), second))
}

/// Repeatedly applies the first crossing-decreasing move until every
/// partition is noncrossing; coefficients are merged per ordered partition.
pub fn resolve_fully_r1(pi: &OrderedSetPartition) -> Result<Resolution> {
    let mut done = Vec::new();
    let mut pending = vec![(BigInt::from(1), pi.clone())];
    while let Some((c, q)) = pending.pop() {
        if q.is_noncrossing() {
            done.push((c, q));
            continue;
        }
        pending.extend(
            first_decreasing_move(&q)?
                .into_iter()
                .map(|(s, p)| (&c * s, p)),
        );
    }
    Ok(normalize(done))
}

/// Checks both resolutions of `π` against `[π]_1`.
pub fn verify_resolution(pi: &OrderedSetPartition) -> Result<bool> {
    let (first, second) = resolve_crossing_r1(pi)?;
    let target = jellyfish_invariant(pi, 1)?;
    for res in [first, second] {
        let sum = signed_sum(res.iter().map(|(s, q)| (s.clone(), q)), pi.n(), 1)?;
        if sum != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions of `[n]` into `d` blocks of size at least `r` that are at most
/// `r − 3` adjacent transpositions from noncrossing, blocks ordered by minima.
pub fn conjecture_family(n: usize, d: usize, r: usize) -> Result<Vec<OrderedSetPartition>> {
    if r < 3 {
        return Err(Error::InvalidParameters(format!(
            "requires r >= 3, got {r}"
        )));
    }
    Ok(enumerate_set_partitions(n, d, r)?
        .into_iter()
        .filter(|pi| transposition_distance_to_noncrossing(pi, r - 3))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub family_size: usize,
    pub noncrossing: usize,
    pub rank: usize,
}

impl ConjectureReport {
    pub fn independent(&self) -> bool {
        self.rank == self.family_size
    }
}

pub fn verify_conjecture(n: usize, d: usize, r: usize) -> Result<ConjectureReport> {
    let family = conjecture_family(n, d, r)?;
    let invariants = family
        .iter()
        .map(|pi| jellyfish_invariant(pi, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport {
        n,
        d,
        r,
        family_size: family.len(),
        noncrossing: enumerate_noncrossing(n, d, r)?.len(),
        rank: exact_rank(&invariants).rank,
    })
}

/// The distinct (as unordered partitions) rotations of `π`.
pub fn rotation_orbit(pi: &OrderedSetPartition) -> Vec<OrderedSetPartition> {
    let mut orbit = vec![pi.clone()];
    let mut canon = vec![pi.canonical()];
    let mut next = pi.rotate();
    while !canon.contains(&next.canonical()) {
        canon.push(next.canonical());
        orbit.push(next.clone());
        next = next.rotate();
    }
    orbit
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub orbit: usize,
    pub rank: usize,
}

pub fn orbit_rank(pi: &OrderedSetPartition, r: usize) -> Result<OrbitReport> {
    let orbit = rotation_orbit(pi);
    let invariants = orbit
        .iter()
        .map(|q| jellyfish_invariant(q, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitReport {
        orbit: orbit.len(),
        rank: exact_rank(&invariants).rank,
    })
}
