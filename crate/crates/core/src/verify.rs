//! Batch verification over every small instance. Each check returns a
//! [`CheckReport`]; instances run in parallel on the current rayon pool and
//! results are reported in input order.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{
    enumerate_noncrossing, enumerate_ordered_partitions, enumerate_set_partitions,
    OrderedSetPartition, Permutation,
};
use crate::diagrams::{build_tensor_diagram, TensorDiagram, Vertex};
use crate::error::Result;
use crate::grassmann::{
    compare_up_to_sign, delta_to_minor, gc_jellyfish, phi, phi_star, reverse_order_sign,
};
use crate::invariants::{
    jellyfish_invariant, signed_minor_products, verify_equivariance, verify_reflection,
    verify_rotation,
};
use crate::polyring::{determinant, numeric_minor, random_matrix, MinorSpec};
use crate::relations::{
    conjecture_family, orbit_rank, verify_recurrence, verify_three_term, OrbitReport,
};
use crate::specht::{
    dimension, distinct_leading_monomials, exact_rank, verify_hook_basis, SpechtModule, SpechtShape,
};
use crate::tableaux::{enumerate_tableaux, FilledTableau, JellyfishTableau};

const KEPT_FAILURES: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: u32,
    pub title: String,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }

    fn absorb(&mut self, other: Outcome) {
        self.cases += other.cases;
        self.failed += other.failed;
        let room = KEPT_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Tally of one sweep.
#[derive(Clone, Debug, Default)]
struct Outcome {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn single(ok: bool, label: impl FnOnce() -> String) -> Self {
        Self {
            cases: 1,
            failed: usize::from(!ok),
            failures: if ok { Vec::new() } else { vec![label()] },
        }
    }
}

fn sweep<T, F, L>(items: &[T], check: F, label: L) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Result<bool> + Sync,
    L: Fn(&T) -> String + Sync,
{
    let results: Vec<Option<String>> = items
        .par_iter()
        .map(|item| match check(item) {
            Ok(true) => None,
            Ok(false) => Some(label(item)),
            Err(e) => Some(format!("{}: {e}", label(item))),
        })
        .collect();
    let mut out = Outcome {
        cases: items.len(),
        ..Outcome::default()
    };
    for failure in results.into_iter().flatten() {
        out.failed += 1;
        if out.failures.len() < KEPT_FAILURES {
            out.failures.push(failure);
        }
    }
    out
}

fn timed(id: u32, title: &str, body: impl FnOnce(&mut CheckReport)) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport {
        id,
        title: title.to_string(),
        ..CheckReport::default()
    };
    body(&mut report);
    report.seconds = start.elapsed().as_secs_f64();
    report
}

fn part(s: &str) -> OrderedSetPartition {
    s.parse().expect("literal partition")
}

fn spec(rows: &[usize], cols: &[usize]) -> MinorSpec {
    MinorSpec::new(rows.to_vec(), cols.to_vec()).expect("literal minor")
}

/// `(n, d, r, π)` for every ordered partition in `OP(n, d, r)`.
fn ordered_instances(
    n_range: std::ops::RangeInclusive<usize>,
    rs: &[usize],
) -> Vec<(usize, OrderedSetPartition)> {
    let mut out = Vec::new();
    for n in n_range {
        for &r in rs {
            for d in 1..=n / r {
                out.extend(
                    enumerate_ordered_partitions(n, d, r)
                        .expect("valid sizes")
                        .into_iter()
                        .map(|pi| (r, pi)),
                );
            }
        }
    }
    out
}

fn product_expansion(
    n: usize,
    terms: &[(i32, Vec<MinorSpec>)],
) -> Result<crate::polyring::MatrixPolynomial> {
    let mut total = crate::polyring::MatrixPolynomial::zero(n, n);
    for (sign, factors) in terms {
        let mut prod = crate::polyring::MatrixPolynomial::one(n, n);
        for f in factors {
            prod = prod.mul(&crate::polyring::minor(f, n, n)?)?;
        }
        total.add_assign_scaled(&prod, &BigInt::from(*sign))?;
    }
    Ok(total)
}

/// Tableaux, inversions and the six-term expansion of `(2 3 6 10|5 7 8 9|1 4)`.
pub fn running_example() -> CheckReport {
    timed(1, "running example, r = 2", |rep| {
        let pi = part("2 3 6 10|5 7 8 9|1 4");
        let ok = (|| -> Result<bool> {
            let ts = enumerate_tableaux(&pi, 2)?;
            let invs: Vec<usize> = ts.iter().map(JellyfishTableau::inversion_number).collect();
            let (a, b, c) = ([2, 3, 6, 10], [5, 7, 8, 9], [1, 4]);
            let displayed: Vec<(i32, Vec<MinorSpec>)> = [
                (1, [1, 2, 3, 4], [1, 2, 5, 6]),
                (-1, [1, 2, 3, 5], [1, 2, 4, 6]),
                (1, [1, 2, 3, 6], [1, 2, 4, 5]),
                (1, [1, 2, 4, 5], [1, 2, 3, 6]),
                (-1, [1, 2, 4, 6], [1, 2, 3, 5]),
                (1, [1, 2, 5, 6], [1, 2, 3, 4]),
            ]
            .into_iter()
            .map(|(s, ra, rb)| (s, vec![spec(&ra, &a), spec(&rb, &b), spec(&[1, 2], &c)]))
            .collect();
            Ok(ts.len() == 6
                && invs == [8, 7, 6, 8, 7, 8]
                && signed_minor_products(&pi, 2)? == displayed
                && jellyfish_invariant(&pi, 2)? == product_expansion(10, &displayed)?
                && jellyfish_invariant(&pi, 3)?.is_zero())
        })();
        rep.absorb(Outcome::single(matches!(ok, Ok(true)), || {
            format!("{pi} r=2: {ok:?}")
        }));
    })
}

/// The three tableaux of `(2 3 6 7 12|1 8 10|4 5 9 11)` for `r = 3`.
pub fn three_row_example() -> CheckReport {
    timed(2, "three-row example, r = 3", |rep| {
        let pi = part("2 3 6 7 12|1 8 10|4 5 9 11");
        let ok =
            (|| -> Result<bool> {
                let ts = enumerate_tableaux(&pi, 3)?;
                let signs: Vec<i32> = ts.iter().map(JellyfishTableau::sign).collect();
                let (a, b, c) = ([2, 3, 6, 7, 12], [1, 8, 10], [4, 5, 9, 11]);
                let displayed: Vec<(i32, Vec<MinorSpec>)> = [
                    (-1, [1, 2, 3, 4, 5], [1, 2, 3, 6]),
                    (1, [1, 2, 3, 4, 6], [1, 2, 3, 5]),
                    (-1, [1, 2, 3, 5, 6], [1, 2, 3, 4]),
                ]
                .into_iter()
                .map(|(s, ra, rc)| (s, vec![spec(&ra, &a), spec(&[1, 2, 3], &b), spec(&rc, &c)]))
                .collect();
                Ok(ts.len() == 3
                    && signs == [-1, 1, -1]
                    && signed_minor_products(&pi, 3)? == displayed)
            })();
        rep.absorb(Outcome::single(matches!(ok, Ok(true)), || {
            format!("{pi} r=3: {ok:?}")
        }));
    })
}

/// The 140 tableaux of the running example for `r = 1` and four of their signs.
pub fn running_example_r1() -> CheckReport {
    timed(3, "running example, r = 1", |rep| {
        let pi = part("2 3 6 10|5 7 8 9|1 4");
        let ok = (|| -> Result<bool> {
            let ts = enumerate_tableaux(&pi, 1)?;
            let shown = [
                (vec![1, 2, 2, 2, 1, 1, 3], 12),
                (vec![2, 1, 2, 2, 1, 1, 3], 13),
                (vec![2, 2, 3, 1, 2, 1, 1], 12),
                (vec![3, 2, 1, 2, 1, 1, 2], 9),
            ];
            let all_shown = shown.iter().all(|(seq, inv)| {
                ts.iter()
                    .find(|t| t.tentacles() == seq.as_slice())
                    .is_some_and(|t| t.inversion_number() == *inv)
            });
            Ok(ts.len() == 140 && all_shown)
        })();
        rep.absorb(Outcome::single(matches!(ok, Ok(true)), || {
            format!("{pi} r=1: {ok:?}")
        }));
    })
}

/// `Φ^*` of the Grassmann–Cayley expansion is `±[π]_r` for all of
/// `OP(n, d, r)`, plus the reversed term order of the running example.
pub fn grassmann_cayley(n_max: usize) -> CheckReport {
    timed(4, "Grassmann-Cayley equivalence", |rep| {
        let items = ordered_instances(1..=n_max, &[1, 2, 3]);
        rep.absorb(sweep(
            &items,
            |(r, pi)| {
                let gc = phi_star(&gc_jellyfish(pi, *r)?)?;
                Ok(compare_up_to_sign(&gc, &jellyfish_invariant(pi, *r)?)
                    .as_sign()
                    .is_some())
            },
            |(r, pi)| format!("{pi} r={r}"),
        ));
        let pi = part("2 3 6 10|5 7 8 9|1 4");
        let rev = reverse_order_sign(&pi, 2);
        rep.absorb(Outcome::single(matches!(rev, Ok(Some(_))), || {
            format!("reverse order {pi}: {rev:?}")
        }));
    })
}

type RecurrenceCase = (Vec<Vec<usize>>, Vec<usize>, Vec<usize>, Vec<usize>, usize);

/// All `(prefix, A, B, C)` with `|C| = r` and at least `A, B` besides `C`.
pub fn recurrence_instances(n_max: usize, r_max: usize) -> Vec<RecurrenceCase> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for r in 1..=r_max.min(n - 2) {
            for c in combinations(&(1..=n).collect::<Vec<_>>(), r) {
                let rest: Vec<usize> = (1..=n).filter(|x| !c.contains(x)).collect();
                let m = rest.len();
                for k in 2..=m {
                    for op in enumerate_ordered_partitions(m, k, 1).expect("valid sizes") {
                        let mut blocks: Vec<Vec<usize>> = op
                            .blocks()
                            .iter()
                            .map(|b| b.iter().map(|&e| rest[e - 1]).collect())
                            .collect();
                        let b = blocks.pop().expect("k >= 2");
                        let a = blocks.pop().expect("k >= 2");
                        out.push((blocks, a, b, c.clone(), r));
                    }
                }
            }
        }
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            go(items, k, i + 1, current, out);
            current.pop();
        }
    }
    go(items, k, 0, &mut current, &mut out);
    out
}

/// Every labelled split of `[n]` into nonempty `A`, `B` and a singleton `C`.
pub fn three_term_instances(n_max: usize) -> Vec<(Vec<usize>, Vec<usize>, usize)> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for c in 1..=n {
            let rest: Vec<usize> = (1..=n).filter(|&x| x != c).collect();
            for mask in 1u32..(1 << rest.len()) - 1 {
                let (a, b): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&x| {
                    let i = rest.iter().position(|&y| y == x).expect("member");
                    mask & (1 << i) != 0
                });
                out.push((a, b, c));
            }
        }
    }
    out
}

pub fn recurrence(n_max: usize, three_term_n_max: usize) -> CheckReport {
    timed(5, "recurrence and three-term relation", |rep| {
        let items = recurrence_instances(n_max, 3);
        rep.absorb(sweep(
            &items,
            |(prefix, a, b, c, r)| verify_recurrence(prefix, a, b, c, *r),
            |(prefix, a, b, c, r)| format!("prefix={prefix:?} A={a:?} B={b:?} C={c:?} r={r}"),
        ));
        let triples = three_term_instances(three_term_n_max);
        rep.notes.push(format!(
            "{} recurrence instances, {} three-term splits",
            items.len(),
            triples.len()
        ));
        rep.absorb(sweep(
            &triples,
            |(a, b, c)| verify_three_term(a, b, &[*c]),
            |(a, b, c)| format!("A={a:?} B={b:?} C=[{c}]"),
        ));
    })
}

/// Rank of the spanning set against the hook-length formula, and membership
/// of every `[π]_r`, `π ∈ OP(n, d, r)`.
pub fn specht_membership(n_max: usize) -> CheckReport {
    timed(6, "Specht membership", |rep| {
        for n in 1..=n_max {
            for r in 1..=n {
                for d in 1..=n / r {
                    let module = SpechtShape::flamingo(n, d, r).and_then(SpechtModule::new);
                    let Ok(module) = module else {
                        rep.absorb(Outcome::single(false, || {
                            format!("n={n} d={d} r={r}: {module:?}")
                        }));
                        continue;
                    };
                    let dim = dimension(&module.shape);
                    rep.absorb(Outcome::single(
                        BigInt::from(module.rank()) == dim.into(),
                        || format!("{} rank {} vs dimension", module.shape, module.rank()),
                    ));
                    let items = enumerate_ordered_partitions(n, d, r).expect("valid sizes");
                    rep.absorb(sweep(
                        &items,
                        |pi| Ok(module.contains(&jellyfish_invariant(pi, r)?)),
                        |pi| format!("{pi} r={r}"),
                    ));
                }
            }
        }
    })
}

/// `s_i`, `c_n` and `w_0` identities for all of `OP(n, d, r)`.
pub fn equivariance(n_max: usize) -> CheckReport {
    timed(7, "equivariance", |rep| {
        let rs: Vec<usize> = (1..=n_max).collect();
        let items = ordered_instances(1..=n_max, &rs);
        rep.absorb(sweep(
            &items,
            |(r, pi)| {
                let n = pi.n();
                for i in 1..n {
                    if !verify_equivariance(&Permutation::simple_transposition(n, i)?, pi, *r)? {
                        return Ok(false);
                    }
                }
                Ok(verify_rotation(pi, *r)? && verify_reflection(pi, *r)?)
            },
            |(r, pi)| format!("{pi} r={r}"),
        ));
    })
}

/// Full rank and distinct leading monomials over `NC(n, d, r)`, `r ≥ 2`.
pub fn independence(n_max: usize) -> CheckReport {
    timed(8, "noncrossing independence", |rep| {
        let mut families = Vec::new();
        for n in 2..=n_max {
            for r in 2..=n {
                for d in 1..=n / r {
                    families.push((n, d, r));
                }
            }
        }
        rep.absorb(sweep(
            &families,
            |&(n, d, r)| {
                let invs = enumerate_noncrossing(n, d, r)?
                    .iter()
                    .map(|pi| jellyfish_invariant(pi, r))
                    .collect::<Result<Vec<_>>>()?;
                Ok(exact_rank(&invs).rank == invs.len() && distinct_leading_monomials(&invs)?)
            },
            |(n, d, r)| format!("NC({n},{d},{r})"),
        ));
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Interval partitions form a basis of the hook module.
pub fn hook_basis(n_max: usize) -> CheckReport {
    timed(9, "hook basis", |rep| {
        let items: Vec<(usize, usize)> = (1..=n_max)
            .flat_map(|n| (1..=n).map(move |d| (n, d)))
            .collect();
        rep.absorb(sweep(
            &items,
            |&(n, d)| {
                let report = verify_hook_basis(n, d)?;
                Ok(report.holds() && report.family_size == binomial(n - 1, d - 1))
            },
            |(n, d)| format!("n={n} d={d}"),
        ));
    })
}

/// The rotation orbit of `(1 2 3 5|4 6)` for `r = 2`.
pub fn rotation_orbit_example() -> CheckReport {
    timed(10, "rotation orbit rank", |rep| {
        let report = orbit_rank(&part("1 2 3 5|4 6"), 2);
        rep.absorb(Outcome::single(
            matches!(report, Ok(OrbitReport { orbit: 6, rank: 5 })),
            || format!("{report:?}"),
        ));
    })
}

/// `r = 3` families are the noncrossing ones and independent; one `r = 4`
/// family past the noncrossing set is independent.
pub fn conjecture(n_max: usize) -> CheckReport {
    timed(11, "nearly noncrossing independence", |rep| {
        let mut cases: Vec<(usize, usize, usize)> = Vec::new();
        for n in 3..=n_max {
            for d in 1..=n / 3 {
                cases.push((n, d, 3));
            }
        }
        if n_max >= 8 {
            cases.push((8, 2, 4));
        }
        let reports: Vec<_> = cases
            .par_iter()
            .map(|&(n, d, r)| -> Result<(usize, usize, bool)> {
                let family = conjecture_family(n, d, r)?;
                let nc = enumerate_noncrossing(n, d, r)?;
                let invs = family
                    .iter()
                    .map(|pi| jellyfish_invariant(pi, r))
                    .collect::<Result<Vec<_>>>()?;
                let shape_ok = r != 3 || family == nc;
                Ok((family.len(), exact_rank(&invs).rank, shape_ok))
            })
            .collect();
        for ((n, d, r), result) in cases.iter().zip(reports) {
            let ok = matches!(result, Ok((size, rank, true)) if size == rank);
            if *r == 4 {
                if let Ok((size, rank, _)) = &result {
                    rep.notes
                        .push(format!("n={n} d={d} r={r}: |S|={size} rank={rank}"));
                }
            }
            rep.absorb(Outcome::single(ok, || {
                format!("n={n} d={d} r={r}: {result:?}")
            }));
        }
    })
}

/// Weight sums, boundary degrees and acyclic unclasping for every
/// diagram with `n ≤ n_max`.
pub fn diagrams(n_max: usize) -> CheckReport {
    timed(12, "tensor diagram validation", |rep| {
        let rs: Vec<usize> = (1..=n_max).collect();
        for n in 1..=n_max {
            let items = ordered_instances(n..=n, &rs);
            rep.absorb(sweep(
                &items,
                |(r, pi)| {
                    let diagram = build_tensor_diagram(pi, *r)?;
                    Ok(diagram.validate().is_empty()
                        && diagram.unclasping_is_acyclic()
                        && boundary_profile_ok(&diagram, pi, *r))
                },
                |(r, pi)| format!("{pi} r={r}"),
            ));
        }
    })
}

/// Boundary `i ≤ r` unused, `S` meets every `u`, `E` every `w`, and each
/// `j + n` exactly one `w`.
fn boundary_profile_ok(diagram: &TensorDiagram, pi: &OrderedSetPartition, r: usize) -> bool {
    let (n, d) = (pi.n(), pi.num_blocks());
    let nu = n - (d - 1) * r;
    (1..=2 * n).all(|i| {
        let expected = match i {
            _ if i <= r => 0,
            _ if i <= nu => d - 1,
            _ if i <= n => d,
            _ => 1,
        };
        diagram.degree(Vertex::Boundary(i)) == expected
    })
}

/// `Δ_K(Φ(M)) = ε M_I^J` on random integer matrices.
fn delta_to_minor_random(cases: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Outcome::default();
    for _ in 0..cases {
        let n = rng.gen_range(1..=8);
        let m = random_matrix(&mut rng, n, n, 9);
        let mut pool: Vec<usize> = (1..=2 * n).collect();
        for i in (1..pool.len()).rev() {
            pool.swap(i, rng.gen_range(0..=i));
        }
        let mut k = pool[..n].to_vec();
        k.sort_unstable();
        let ok = (|| -> Result<bool> {
            let v = phi(&m)?;
            let sub: Vec<Vec<BigInt>> = v
                .iter()
                .map(|row| k.iter().map(|&c| BigInt::from(row[c - 1])).collect())
                .collect();
            let t = delta_to_minor(&k, n)?;
            Ok(determinant(&sub) == numeric_minor(&m, &t.minor) * t.sign)
        })();
        let single = Outcome::single(matches!(ok, Ok(true)), || format!("n={n} K={k:?}"));
        out.cases += 1;
        out.failed += single.failed;
        if out.failures.len() < KEPT_FAILURES {
            out.failures.extend(single.failures);
        }
    }
    out
}

/// Every tableau of every set partition, under every block permutation.
fn column_swap_lemma(n_max: usize) -> Outcome {
    let mut items = Vec::new();
    for n in 1..=n_max {
        for r in 1..=n {
            for d in 1..=n / r {
                items.extend(
                    enumerate_set_partitions(n, d, r)
                        .expect("valid sizes")
                        .into_iter()
                        .map(|pi| (r, pi)),
                );
            }
        }
    }
    sweep(
        &items,
        |(r, pi)| {
            let sigmas = Permutation::all(pi.num_blocks());
            for t in enumerate_tableaux(pi, *r)? {
                for sigma in &sigmas {
                    let moved = t.permute_columns(sigma)?;
                    if t.sign() != sigma.sign().pow(*r as u32) * moved.sign() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
        |(r, pi)| format!("column swap {pi} r={r}"),
    )
}

/// Sign constancy over every rearrangement within columns of every tableau.
fn row_column_swap_lemma(n_max: usize) -> Outcome {
    let mut items = Vec::new();
    for n in 1..=n_max {
        for r in 1..=n {
            for d in 1..=n / r {
                items.extend(
                    enumerate_set_partitions(n, d, r)
                        .expect("valid sizes")
                        .into_iter()
                        .map(|pi| (r, pi)),
                );
            }
        }
    }
    sweep(
        &items,
        |(r, pi)| {
            let perms: Vec<Vec<Permutation>> = pi
                .blocks()
                .iter()
                .map(|b| Permutation::all(b.len()))
                .collect();
            for t in enumerate_tableaux(pi, *r)? {
                let filled = t.filled();
                if !column_orbit_constant(&filled, &perms, t.sign())? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
        |(r, pi)| format!("row/column swap {pi} r={r}"),
    )
}

fn column_orbit_constant(t: &FilledTableau, perms: &[Vec<Permutation>], sign: i32) -> Result<bool> {
    let columns: Vec<Vec<usize>> = (1..=perms.len()).map(|c| t.column_entries(c)).collect();
    let mut digits = vec![0usize; perms.len()];
    loop {
        let mut u = t.clone();
        for (c, (&digit, entries)) in digits.iter().zip(&columns).enumerate() {
            let w = &perms[c][digit];
            let rearranged: Vec<usize> = (1..=entries.len())
                .map(|i| entries[w.apply(i) - 1])
                .collect();
            u = u.with_column_entries(c + 1, &rearranged)?;
        }
        if u.column_permuted_sign() != sign {
            return Ok(false);
        }
        let mut c = 0;
        loop {
            if c == digits.len() {
                return Ok(true);
            }
            digits[c] += 1;
            if digits[c] < perms[c].len() {
                break;
            }
            digits[c] = 0;
            c += 1;
        }
    }
}

pub fn sign_properties(n_max: usize, cases: usize, seed: u64) -> CheckReport {
    timed(13, "minor translation and sign lemmas", |rep| {
        rep.absorb(delta_to_minor_random(cases, seed));
        rep.absorb(column_swap_lemma(n_max));
        rep.absorb(row_column_swap_lemma(n_max));
    })
}

/// Size bounds for [`run_suite`]; [`Limits::capped`] lowers every bound to
/// at most `n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub grassmann_cayley: usize,
    pub recurrence: usize,
    pub three_term: usize,
    pub specht: usize,
    pub equivariance: usize,
    pub independence: usize,
    pub hook: usize,
    pub conjecture: usize,
    pub diagrams: usize,
    pub signs: usize,
    pub random_cases: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            grassmann_cayley: 7,
            recurrence: 7,
            three_term: 6,
            specht: 7,
            equivariance: 6,
            independence: 8,
            hook: 8,
            conjecture: 8,
            diagrams: 8,
            signs: 8,
            random_cases: 500,
        }
    }
}

impl Limits {
    pub fn capped(n_max: usize) -> Self {
        let d = Self::default();
        Self {
            grassmann_cayley: d.grassmann_cayley.min(n_max),
            recurrence: d.recurrence.min(n_max),
            three_term: d.three_term.min(n_max),
            specht: d.specht.min(n_max),
            equivariance: d.equivariance.min(n_max),
            independence: d.independence.min(n_max),
            hook: d.hook.min(n_max),
            conjecture: d.conjecture.min(n_max),
            diagrams: d.diagrams.min(n_max),
            signs: d.signs.min(n_max),
            random_cases: d.random_cases,
        }
    }
}

/// Runs all checks in order, handing each report to `progress` as it
/// finishes.
pub fn run_suite(
    limits: Limits,
    seed: u64,
    mut progress: impl FnMut(&CheckReport),
) -> Vec<CheckReport> {
    let steps: Vec<Box<dyn FnOnce() -> CheckReport>> = vec![
        Box::new(running_example),
        Box::new(three_row_example),
        Box::new(running_example_r1),
        Box::new(move || grassmann_cayley(limits.grassmann_cayley)),
        Box::new(move || recurrence(limits.recurrence, limits.three_term)),
        Box::new(move || specht_membership(limits.specht)),
        Box::new(move || equivariance(limits.equivariance)),
        Box::new(move || independence(limits.independence)),
        Box::new(move || hook_basis(limits.hook)),
        Box::new(rotation_orbit_example),
        Box::new(move || conjecture(limits.conjecture)),
        Box::new(move || diagrams(limits.diagrams)),
        Box::new(move || sign_properties(limits.signs, limits.random_cases, seed)),
    ];
    steps
        .into_iter()
        .map(|step| {
            let report = step();
            progress(&report);
            report
        })
        .collect()
}
