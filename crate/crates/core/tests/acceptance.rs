//! Acceptance suite: one line per criterion with its runtime limit.
//! Run with `cargo test -p flamingo --test acceptance`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flamingo::combinat::{enumerate_noncrossing, OrderedSetPartition, Permutation};
use flamingo::diagrams::{build_tensor_diagram, Vertex};
use flamingo::grassmann::{
    compare_up_to_sign, delta_to_minor, gc_jellyfish, phi_star, reverse_order_sign,
};
use flamingo::invariants::{jellyfish_invariant, signed_minor_products};
use flamingo::polyring::{minor, MatrixPolynomial, MinorSpec};
use flamingo::relations::{
    conjecture_family, rotation_orbit, verify_recurrence, verify_three_term,
};
use flamingo::specht::{
    dimension, distinct_leading_monomials, exact_rank, hook_family, SpechtModule, SpechtShape,
};
use flamingo::tableaux::{enumerate_tableaux, JellyfishTableau};
use flamingo::verify::recurrence_instances;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(s: &str) -> OrderedSetPartition {
    s.parse().expect("literal partition")
}

// ---------- oracles ----------

/// Set partitions of `[n]` into exactly `d` blocks of size at least `r`,
/// by restricted growth strings.
fn set_partitions(n: usize, d: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(
        e: usize,
        n: usize,
        d: usize,
        r: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if e > n {
            if blocks.len() == d && blocks.iter().all(|b| b.len() >= r) {
                out.push(blocks.clone());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(e);
            go(e + 1, n, d, r, blocks, out);
            blocks[i].pop();
        }
        if blocks.len() < d {
            blocks.push(vec![e]);
            go(e + 1, n, d, r, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, r, &mut Vec::new(), &mut out);
    out
}

fn orders(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in orders(k - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, k - 1);
            out.push(v);
        }
    }
    out
}

/// Every ordered partition of `[n]` into `d` blocks of size at least `r`.
fn ordered_partitions(n: usize, d: usize, r: usize) -> Vec<OrderedSetPartition> {
    let perms = orders(d);
    set_partitions(n, d, r)
        .into_iter()
        .flat_map(|blocks| {
            perms
                .iter()
                .map(|o| {
                    OrderedSetPartition::new(n, o.iter().map(|&i| blocks[i].clone()).collect())
                        .expect("valid")
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn crosses(blocks: &[Vec<usize>]) -> bool {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut label = vec![0; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &e in b {
            label[e] = i;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for e in c + 1..=n {
                    if label[a] == label[c] && label[b] == label[e] && label[a] != label[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn canonical_key(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    v.sort();
    v
}

fn count_inversions(word: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

fn parity(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Standard Young tableaux of shape `λ` by corner removal.
fn syt(shape: &[usize], memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
    if shape.iter().all(|&x| x == 0) {
        return 1;
    }
    if let Some(&v) = memo.get(shape) {
        return v;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        if shape[i] > 0 && shape.get(i + 1).is_none_or(|&next| next < shape[i]) {
            let mut smaller = shape.to_vec();
            smaller[i] -= 1;
            total += syt(&smaller, memo);
        }
    }
    memo.insert(shape.to_vec(), total);
    total
}

fn flamingo_lambda(n: usize, d: usize, r: usize) -> Vec<usize> {
    let mut lambda = vec![d; r];
    lambda.extend(std::iter::repeat_n(1, n - r * d));
    lambda
}

/// Bareiss determinant over `i128`.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if m[p][p] == 0 {
            match (p + 1..k).find(|&i| m[i][p] != 0) {
                Some(i) => {
                    m.swap(p, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            }
        }
        prev = m[p][p];
    }
    sign * m[k - 1][k - 1]
}

fn numeric_minor(m: &[Vec<i64>], spec: &MinorSpec) -> i128 {
    det(spec
        .rows
        .iter()
        .map(|&a| {
            spec.cols
                .iter()
                .map(|&j| i128::from(m[a - 1][j - 1]))
                .collect()
        })
        .collect())
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((c % &p) + &p) % &p;
    r.to_u64().expect("reduced below p")
}

/// Rank over `Z/p` by dense elimination; never exceeds the rational rank.
fn modp_rank(polys: &[MatrixPolynomial]) -> usize {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::new();
    for p in polys {
        let mut row = Vec::new();
        for (m, c) in p.terms() {
            let next = index.len();
            let col = *index.entry(m.rows()).or_insert(next);
            row.push((col, reduce(c)));
        }
        rows.push(row);
    }
    let width = index.len();
    let mut dense: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|row| {
            let mut v = vec![0; width];
            for (c, x) in row {
                v[c] = x;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..dense.len()).find(|&i| dense[i][col] != 0) else {
            continue;
        };
        dense.swap(rank, piv);
        let inv = powmod(dense[rank][col], PRIME - 2);
        for i in rank + 1..dense.len() {
            if dense[i][col] == 0 {
                continue;
            }
            let f = mulmod(dense[i][col], inv);
            for j in col..width {
                let sub = mulmod(f, dense[rank][j]);
                dense[i][j] = (dense[i][j] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
        if rank == dense.len() {
            break;
        }
    }
    rank
}

/// Terms keyed by row vector.
fn term_map(p: &MatrixPolynomial) -> HashMap<Vec<usize>, BigInt> {
    p.terms().map(|(m, c)| (m.rows(), c.clone())).collect()
}

/// `x_{a,j} ↦ x_{a,w(j)}` on a term map; `w` is one-line, 1-based.
fn act(w: &[usize], terms: &HashMap<Vec<usize>, BigInt>) -> HashMap<Vec<usize>, BigInt> {
    terms
        .iter()
        .map(|(rows, c)| {
            let mut moved = vec![0; rows.len()];
            for (j, &a) in rows.iter().enumerate() {
                moved[w[j] - 1] = a;
            }
            (moved, c.clone())
        })
        .collect()
}

fn scaled(terms: &HashMap<Vec<usize>, BigInt>, s: i32) -> HashMap<Vec<usize>, BigInt> {
    terms.iter().map(|(k, c)| (k.clone(), c * s)).collect()
}

fn act_on_partition(w: &[usize], pi: &OrderedSetPartition) -> OrderedSetPartition {
    let blocks = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&e| w[e - 1]).collect())
        .collect();
    OrderedSetPartition::new(pi.n(), blocks).expect("relabelled partition")
}

fn one_line_sign(w: &[usize]) -> i32 {
    parity(count_inversions(w))
}

fn expansion(n: usize, terms: &[(i32, Vec<MinorSpec>)]) -> MatrixPolynomial {
    let mut total = MatrixPolynomial::zero(n, n);
    for (sign, factors) in terms {
        let mut prod = MatrixPolynomial::one(n, n);
        for f in factors {
            prod = prod.mul(&minor(f, n, n).unwrap()).unwrap();
        }
        total
            .add_assign_scaled(&prod, &BigInt::from(*sign))
            .unwrap();
    }
    total
}

fn spec(rows: &[usize], cols: &[usize]) -> MinorSpec {
    MinorSpec::new(rows.to_vec(), cols.to_vec()).unwrap()
}

/// Numeric oracle: `[π]_r(M)` against the signed sum of products of
/// determinants of the given minors.
fn numeric_agrees(
    p: &MatrixPolynomial,
    terms: &[(i32, Vec<MinorSpec>)],
    rows: usize,
    n: usize,
    seed: u64,
) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..4).all(|_| {
        let m = random_matrix(&mut rng, rows, n, 5);
        let expected: BigInt = terms
            .iter()
            .map(|(s, fs)| {
                BigInt::from(*s)
                    * fs.iter()
                        .map(|f| BigInt::from(numeric_minor(&m, f)))
                        .product::<BigInt>()
            })
            .sum();
        p.evaluate(&m).unwrap() == expected
    })
}

// ---------- criteria ----------

fn c1_running_example() -> Check {
    let pi = part("2 3 6 10|5 7 8 9|1 4");
    let ts = enumerate_tableaux(&pi, 2).map_err(|e| e.to_string())?;
    ensure(ts.len() == 6, || format!("|J_2| = {}", ts.len()))?;
    let invs: Vec<usize> = ts
        .iter()
        .map(|t| count_inversions(&t.reading_word()))
        .collect();
    ensure(invs == [8, 7, 6, 8, 7, 8], || {
        format!("inversions {invs:?}")
    })?;
    ensure(
        ts.iter()
            .map(JellyfishTableau::inversion_number)
            .eq(invs.iter().copied()),
        || "inv mismatch".into(),
    )?;
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
    ensure(signed_minor_products(&pi, 2).unwrap() == displayed, || {
        "term-for-term expansion differs".into()
    })?;
    let inv = jellyfish_invariant(&pi, 2).unwrap();
    ensure(inv == expansion(10, &displayed), || {
        "polynomial differs from expansion".into()
    })?;
    ensure(numeric_agrees(&inv, &displayed, 6, 10, 11), || {
        "numeric evaluation differs".into()
    })?;
    ensure(jellyfish_invariant(&pi, 3).unwrap().is_zero(), || {
        "[pi]_3 nonzero".into()
    })?;
    Ok(format!(
        "6 tableaux, inversions {invs:?}, {} terms, [pi]_3 = 0",
        inv.num_terms()
    ))
}

fn c2_three_row() -> Check {
    let pi = part("2 3 6 7 12|1 8 10|4 5 9 11");
    let ts = enumerate_tableaux(&pi, 3).map_err(|e| e.to_string())?;
    let invs: Vec<usize> = ts
        .iter()
        .map(|t| count_inversions(&t.reading_word()))
        .collect();
    ensure(invs == [9, 8, 9], || format!("inversions {invs:?}"))?;
    let signs: Vec<i32> = ts.iter().map(JellyfishTableau::sign).collect();
    ensure(signs == [-1, 1, -1], || format!("signs {signs:?}"))?;
    let (a, b, c) = ([2, 3, 6, 7, 12], [1, 8, 10], [4, 5, 9, 11]);
    let displayed: Vec<(i32, Vec<MinorSpec>)> = [
        (-1, [1, 2, 3, 4, 5], [1, 2, 3, 6]),
        (1, [1, 2, 3, 4, 6], [1, 2, 3, 5]),
        (-1, [1, 2, 3, 5, 6], [1, 2, 3, 4]),
    ]
    .into_iter()
    .map(|(s, ra, rc)| (s, vec![spec(&ra, &a), spec(&[1, 2, 3], &b), spec(&rc, &c)]))
    .collect();
    ensure(signed_minor_products(&pi, 3).unwrap() == displayed, || {
        "minor products differ".into()
    })?;
    let inv = jellyfish_invariant(&pi, 3).unwrap();
    ensure(inv == expansion(12, &displayed), || {
        "polynomial differs".into()
    })?;
    ensure(numeric_agrees(&inv, &displayed, 6, 12, 12), || {
        "numeric evaluation differs".into()
    })?;
    Ok("3 tableaux, signs (-1)^9, (-1)^8, (-1)^9".into())
}

fn c3_running_example_r1() -> Check {
    let pi = part("2 3 6 10|5 7 8 9|1 4");
    let ts = enumerate_tableaux(&pi, 1).map_err(|e| e.to_string())?;
    // tentacle multiset: column i repeated |π_i| − 1 times
    let counts: Vec<usize> = pi.blocks().iter().map(|b| b.len() - 1).collect();
    let total: usize = counts.iter().sum();
    let fact = |k: usize| (1..=k).product::<usize>();
    let multinomial = fact(total) / counts.iter().map(|&k| fact(k)).product::<usize>();
    ensure(multinomial == 140 && ts.len() == 140, || {
        format!("{} tableaux, multinomial {multinomial}", ts.len())
    })?;
    let shown = [
        (vec![1, 2, 2, 2, 1, 1, 3], 12),
        (vec![2, 1, 2, 2, 1, 1, 3], 13),
        (vec![2, 2, 3, 1, 2, 1, 1], 12),
        (vec![3, 2, 1, 2, 1, 1, 2], 9),
    ];
    for (seq, inv) in shown {
        let t = ts
            .iter()
            .find(|t| t.tentacles() == seq.as_slice())
            .ok_or_else(|| format!("tableau {seq:?} missing"))?;
        let own = count_inversions(&t.reading_word());
        ensure(own == inv && t.sign() == parity(inv), || {
            format!("{seq:?}: inv {own}, sign {}", t.sign())
        })?;
    }
    Ok("140 tableaux; displayed signs (-1)^12, (-1)^13, (-1)^12, (-1)^9".into())
}

fn c4_grassmann_cayley() -> Check {
    let mut cases = 0;
    let mut signs = [0usize; 2];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 1..=7 {
        for r in 1..=3 {
            for d in 1..=n / r {
                for pi in ordered_partitions(n, d, r) {
                    let gc = gc_jellyfish(&pi, r).map_err(|e| format!("{pi}: {e}"))?;
                    let inv = jellyfish_invariant(&pi, r).unwrap();
                    let sign = compare_up_to_sign(&phi_star(&gc).unwrap(), &inv)
                        .as_sign()
                        .ok_or_else(|| format!("{pi} r={r}: not proportional"))?;
                    signs[usize::from(sign < 0)] += 1;
                    if cases % 97 == 0 {
                        // evaluate the bracket expression at [M_0 | M] directly
                        let m = random_matrix(&mut rng, n, n, 4);
                        let v: Vec<Vec<i64>> = (0..n)
                            .map(|i| {
                                let mut row: Vec<i64> = (0..n)
                                    .map(|j| if i == j { i64::from(parity(i)) } else { 0 })
                                    .collect();
                                row.extend_from_slice(&m[i]);
                                row
                            })
                            .collect();
                        let lhs = gc.evaluate(&v);
                        ensure(lhs == inv.evaluate(&m).unwrap() * sign, || {
                            format!("{pi} r={r}: numeric bracket evaluation differs")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
    }
    // Σ_{n≤7} |OP(n, d, r)| over r = 1, 2, 3
    let expected: usize = (1..=7)
        .flat_map(|n| (1..=3).flat_map(move |r| (1..=n / r).map(move |d| (n, d, r))))
        .map(|(n, d, r)| set_partitions(n, d, r).len() * (1..=d).product::<usize>())
        .sum();
    ensure(cases == expected, || {
        format!("{cases} cases, expected {expected}")
    })?;
    let pi = part("2 3 6 10|5 7 8 9|1 4");
    let rev = reverse_order_sign(&pi, 2).map_err(|e| e.to_string())?;
    ensure(rev.is_some(), || {
        "cap expansion is not the reversed tableau expansion".into()
    })?;
    Ok(format!(
        "{cases} partitions proportional ({} with +1, {} with -1); reversed order matches with sign {:+}",
        signs[0],
        signs[1],
        rev.unwrap()
    ))
}

fn c5_recurrence() -> Check {
    let mut cases = 0;
    for n in 3..=7 {
        for r in 1..=3usize.min(n - 2) {
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize != r {
                    continue;
                }
                let c: Vec<usize> = (1..=n).filter(|x| mask & (1 << (x - 1)) != 0).collect();
                let rest: Vec<usize> = (1..=n).filter(|x| !c.contains(x)).collect();
                for k in 2..=rest.len() {
                    // surjections rest → {0..k}
                    let total = k.pow(rest.len() as u32);
                    for code in 0..total {
                        let mut blocks = vec![Vec::new(); k];
                        let mut x = code;
                        for &e in &rest {
                            blocks[x % k].push(e);
                            x /= k;
                        }
                        if blocks.iter().any(Vec::is_empty) {
                            continue;
                        }
                        let b = blocks.pop().unwrap();
                        let a = blocks.pop().unwrap();
                        let ok =
                            verify_recurrence(&blocks, &a, &b, &c, r).map_err(|e| e.to_string())?;
                        ensure(ok, || {
                            format!("prefix={blocks:?} A={a:?} B={b:?} C={c:?} r={r}")
                        })?;
                        cases += 1;
                    }
                }
            }
        }
    }
    let listed = recurrence_instances(7, 3).len();
    ensure(cases == listed, || {
        format!("{cases} instances here, {listed} listed by the library")
    })?;
    let mut splits = 0;
    for n in 3..=6 {
        for c in 1..=n {
            let rest: Vec<usize> = (1..=n).filter(|&x| x != c).collect();
            for mask in 1u32..(1 << rest.len()) - 1 {
                let a: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &x)| x)
                    .collect();
                let b: Vec<usize> = rest.iter().copied().filter(|x| !a.contains(x)).collect();
                ensure(verify_three_term(&a, &b, &[c]).unwrap(), || {
                    format!("A={a:?} B={b:?} C=[{c}]")
                })?;
                splits += 1;
            }
        }
    }
    Ok(format!(
        "{cases} recurrence instances, {splits} three-term splits"
    ))
}

fn c6_specht() -> Check {
    let mut memo = HashMap::new();
    let mut members = 0;
    let mut shapes = 0;
    for n in 1..=7 {
        for r in 1..=n {
            for d in 1..=n / r {
                let module = SpechtModule::new(SpechtShape::flamingo(n, d, r).unwrap()).unwrap();
                let dim = syt(&flamingo_lambda(n, d, r), &mut memo);
                ensure(module.rank() as u128 == dim, || {
                    format!("{}: rank {} vs {dim}", module.shape, module.rank())
                })?;
                ensure(dimension(&module.shape) == dim.into(), || {
                    format!("{}: hook length formula", module.shape)
                })?;
                shapes += 1;
                for pi in ordered_partitions(n, d, r) {
                    let p = jellyfish_invariant(&pi, r).unwrap();
                    ensure(module.contains(&p), || {
                        format!("{pi} r={r} not in {}", module.shape)
                    })?;
                    members += 1;
                }
            }
        }
    }
    Ok(format!(
        "{shapes} shapes at full rank, {members} invariants inside"
    ))
}

fn c7_equivariance() -> Check {
    let mut cases = 0;
    for n in 1..=6usize {
        let rotation: Vec<usize> = (1..=n).map(|j| j % n + 1).collect();
        let reversal: Vec<usize> = (1..=n).rev().collect();
        let rot_sign = parity(n - 1);
        let rev_sign = parity(n * (n - 1) / 2);
        ensure(
            one_line_sign(&rotation) == rot_sign && one_line_sign(&reversal) == rev_sign,
            || format!("n={n}: permutation signs"),
        )?;
        let mut perms: Vec<(Vec<usize>, i32)> = (1..n)
            .map(|i| {
                let mut s: Vec<usize> = (1..=n).collect();
                s.swap(i - 1, i);
                (s, -1)
            })
            .collect();
        perms.push((rotation, rot_sign));
        perms.push((reversal, rev_sign));
        for r in 1..=n {
            for d in 1..=n / r {
                for pi in ordered_partitions(n, d, r) {
                    let base = term_map(&jellyfish_invariant(&pi, r).unwrap());
                    for (w, s) in &perms {
                        let moved =
                            term_map(&jellyfish_invariant(&act_on_partition(w, &pi), r).unwrap());
                        ensure(act(w, &base) == scaled(&moved, *s), || {
                            format!("{pi} r={r} w={w:?}")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} partitions under every s_i, c_n and w_0"))
}

fn nc_family(n: usize, d: usize, r: usize) -> Vec<Vec<Vec<usize>>> {
    set_partitions(n, d, r)
        .into_iter()
        .filter(|b| !crosses(b))
        .collect()
}

fn c8_independence() -> Check {
    let mut families = 0;
    let mut largest = 0;
    for n in 2..=8 {
        for r in 2..=n {
            for d in 1..=n / r {
                let brute: BTreeSet<Vec<Vec<usize>>> = nc_family(n, d, r).into_iter().collect();
                let listed = enumerate_noncrossing(n, d, r).unwrap();
                let keys: BTreeSet<Vec<Vec<usize>>> =
                    listed.iter().map(|p| canonical_key(p.blocks())).collect();
                ensure(keys == brute, || {
                    format!("NC({n},{d},{r}) enumeration differs")
                })?;
                let invs: Vec<MatrixPolynomial> = listed
                    .iter()
                    .map(|p| jellyfish_invariant(p, r).unwrap())
                    .collect();
                let size = invs.len();
                ensure(exact_rank(&invs).rank == size, || {
                    format!("NC({n},{d},{r}): exact rank below {size}")
                })?;
                ensure(modp_rank(&invs) == size, || {
                    format!("NC({n},{d},{r}): mod-p rank below {size}")
                })?;
                ensure(distinct_leading_monomials(&invs).unwrap(), || {
                    format!("NC({n},{d},{r}): leading monomials")
                })?;
                let leads: HashSet<Vec<usize>> = invs
                    .iter()
                    .map(|p| p.leading_monomial().unwrap().rows())
                    .collect();
                ensure(leads.len() == size, || {
                    format!("NC({n},{d},{r}): repeated leading monomial")
                })?;
                families += 1;
                largest = largest.max(size);
            }
        }
    }
    Ok(format!(
        "{families} families independent, largest of size {largest}"
    ))
}

fn c9_hook() -> Check {
    let mut memo = HashMap::new();
    let mut cases = 0;
    for n in 1..=8 {
        for d in 1..=n {
            let family = hook_family(n, d).unwrap();
            let size = binomial(n - 1, d - 1);
            ensure(family.len() == size, || {
                format!("n={n} d={d}: {} members", family.len())
            })?;
            ensure(
                syt(&flamingo_lambda(n, d, 1), &mut memo) == size as u128,
                || format!("n={n} d={d}: dimension"),
            )?;
            let invs: Vec<MatrixPolynomial> = family
                .iter()
                .map(|p| jellyfish_invariant(p, 1).unwrap())
                .collect();
            ensure(
                exact_rank(&invs).rank == size && modp_rank(&invs) == size,
                || format!("n={n} d={d}: rank"),
            )?;
            let module = SpechtModule::new(SpechtShape::flamingo(n, d, 1).unwrap()).unwrap();
            ensure(invs.iter().all(|p| module.contains(p)), || {
                format!("n={n} d={d}: membership")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} hook shapes with bases of size C(n-1,d-1)"))
}

fn c10_orbit() -> Check {
    let orbit = rotation_orbit(&part("1 2 3 5|4 6"));
    let keys: HashSet<Vec<Vec<usize>>> = orbit.iter().map(|p| canonical_key(p.blocks())).collect();
    ensure(orbit.len() == 6 && keys.len() == 6, || {
        format!("orbit of size {}", orbit.len())
    })?;
    let invs: Vec<MatrixPolynomial> = orbit
        .iter()
        .map(|p| jellyfish_invariant(p, 2).unwrap())
        .collect();
    let (rank, modp) = (exact_rank(&invs).rank, modp_rank(&invs));
    ensure(rank == 5 && modp == 5, || {
        format!("rank {rank}, mod-p rank {modp}")
    })?;
    Ok("orbit=6 rank=5".into())
}

/// Within `k ≤ 1` adjacent transpositions of a noncrossing partition.
fn near_noncrossing(blocks: &[Vec<usize>], n: usize) -> bool {
    if !crosses(blocks) {
        return true;
    }
    (1..n).any(|i| {
        let moved: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&e| match e {
                        _ if e == i => i + 1,
                        _ if e == i + 1 => i,
                        _ => e,
                    })
                    .collect()
            })
            .collect();
        !crosses(&moved)
    })
}

fn c11_conjecture() -> Check {
    let mut families = 0;
    for n in 3..=8 {
        for d in 1..=n / 3 {
            let fam = conjecture_family(n, d, 3).unwrap();
            let keys: BTreeSet<Vec<Vec<usize>>> =
                fam.iter().map(|p| canonical_key(p.blocks())).collect();
            let brute: BTreeSet<Vec<Vec<usize>>> = nc_family(n, d, 3).into_iter().collect();
            ensure(keys == brute, || {
                format!("r=3 n={n} d={d}: family is not NC")
            })?;
            let invs: Vec<MatrixPolynomial> = fam
                .iter()
                .map(|p| jellyfish_invariant(p, 3).unwrap())
                .collect();
            ensure(exact_rank(&invs).rank == invs.len(), || {
                format!("r=3 n={n} d={d}: dependent")
            })?;
            families += 1;
        }
    }
    let fam = conjecture_family(8, 2, 4).unwrap();
    let keys: BTreeSet<Vec<Vec<usize>>> = fam.iter().map(|p| canonical_key(p.blocks())).collect();
    let brute: BTreeSet<Vec<Vec<usize>>> = set_partitions(8, 2, 4)
        .into_iter()
        .filter(|b| near_noncrossing(b, 8))
        .collect();
    ensure(keys == brute, || {
        "r=4 family differs from brute force".into()
    })?;
    let nc = nc_family(8, 2, 4).len();
    ensure(fam.len() > nc, || "r=4 family has nothing beyond NC".into())?;
    let invs: Vec<MatrixPolynomial> = fam
        .iter()
        .map(|p| jellyfish_invariant(p, 4).unwrap())
        .collect();
    let (rank, modp) = (exact_rank(&invs).rank, modp_rank(&invs));
    ensure(rank == fam.len() && modp == rank, || {
        format!("r=4 n=8 d=2: |S|={} rank={rank}", fam.len())
    })?;
    Ok(format!(
        "{families} r=3 families equal NC and independent; r=4 n=8 d=2: |S|={} rank={rank}",
        fam.len()
    ))
}

fn c12_diagrams() -> Check {
    let mut cases = 0;
    for n in 1..=8 {
        for r in 1..=n {
            for d in 1..=n / r {
                let nu = n - (d - 1) * r;
                for pi in ordered_partitions(n, d, r) {
                    let w = build_tensor_diagram(&pi, r).unwrap();
                    ensure(w.validate().is_empty(), || {
                        format!("{pi} r={r}: {:?}", w.validate())
                    })?;
                    let mut sums: HashMap<Vertex, usize> = HashMap::new();
                    let mut degree = vec![0usize; 2 * n + 1];
                    for e in &w.edges {
                        ensure(e.a.is_black() != e.b.is_black() && e.weight >= 1, || {
                            format!("{pi}: edge {e:?}")
                        })?;
                        for v in [e.a, e.b] {
                            match v {
                                Vertex::Boundary(i) => degree[i] += 1,
                                _ => *sums.entry(v).or_default() += e.weight,
                            }
                        }
                    }
                    ensure(
                        sums.len() == 3 * d - 2 && sums.values().all(|&s| s == n),
                        || format!("{pi} r={r}: interior sums {sums:?}"),
                    )?;
                    for (i, &deg) in degree.iter().enumerate().skip(1) {
                        let expected = match i {
                            _ if i <= r => 0,
                            _ if i <= nu => d - 1,
                            _ if i <= n => d,
                            _ => 1,
                        };
                        ensure(deg == expected, || {
                            format!("{pi} r={r}: boundary {i} has degree {deg}")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} diagrams"))
}

fn c13_signs() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for case in 0..500 {
        let n = rng.gen_range(1..=8);
        let m = random_matrix(&mut rng, n, n, 9);
        let mut k: Vec<usize> = (1..=2 * n).collect();
        for i in (1..k.len()).rev() {
            k.swap(i, rng.gen_range(0..=i));
        }
        k.truncate(n);
        k.sort_unstable();
        // columns of [M_0 | M], M_0 = diag(1, −1, 1, …)
        let column = |c: usize, i: usize| -> i128 {
            if c <= n {
                if c == i + 1 {
                    i128::from(parity(i))
                } else {
                    0
                }
            } else {
                i128::from(m[i][c - n - 1])
            }
        };
        let lhs = det((0..n)
            .map(|i| k.iter().map(|&c| column(c, i)).collect())
            .collect());
        let t = delta_to_minor(&k, n).unwrap();
        ensure(
            lhs == i128::from(t.sign) * numeric_minor(&m, &t.minor),
            || format!("case {case}: n={n} K={k:?}"),
        )?;
    }
    let mut colswap = 0usize;
    let mut rearranged = 0usize;
    for n in 1..=8 {
        for r in 1..=n {
            for d in 1..=n / r {
                let sigmas: Vec<Vec<usize>> = orders(d);
                for blocks in set_partitions(n, d, r) {
                    let pi = OrderedSetPartition::new(n, blocks).unwrap();
                    for t in enumerate_tableaux(&pi, r).unwrap() {
                        let sign = parity(count_inversions(&t.reading_word()));
                        for s in &sigmas {
                            let sigma =
                                Permutation::new(s.iter().map(|&i| i + 1).collect()).unwrap();
                            let moved = t.permute_columns(&sigma).unwrap();
                            let expected = one_line_sign(sigma.images()).pow(r as u32)
                                * parity(count_inversions(&moved.reading_word()));
                            ensure(sign == expected, || {
                                format!("column swap {pi} r={r} sigma={s:?}")
                            })?;
                            colswap += 1;
                        }
                        rearranged +=
                            column_orbit_check(&t, sign).map_err(|e| format!("{pi} r={r}: {e}"))?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "500 random minors; {colswap} block permutations; {rearranged} column rearrangements"
    ))
}

/// Every rearrangement of entries within columns keeps the sign, with
/// inversions inside a column ignored.
fn column_orbit_check(t: &JellyfishTableau, sign: i32) -> Result<usize, String> {
    let cells = t.filled().cells().to_vec();
    let width = cells.first().map_or(0, Vec::len);
    let positions: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            (0..cells.len())
                .filter(|&row| cells[row][c].is_some())
                .collect()
        })
        .collect();
    let entries: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            positions[c]
                .iter()
                .map(|&row| cells[row][c].unwrap())
                .collect()
        })
        .collect();
    let perms: Vec<Vec<Vec<usize>>> = entries.iter().map(|e| orders(e.len())).collect();
    let mut digits = vec![0usize; width];
    let mut count = 0;
    loop {
        let mut grid = cells.clone();
        for c in 0..width {
            for (slot, &row) in positions[c].iter().enumerate() {
                grid[row][c] = Some(entries[c][perms[c][digits[c]][slot]]);
            }
        }
        let located: Vec<(usize, usize)> = grid
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, e)| e.map(|e| (e, c)))
            })
            .collect();
        let mut inv = 0;
        for i in 0..located.len() {
            for j in i + 1..located.len() {
                if located[i].1 != located[j].1 && located[i].0 > located[j].0 {
                    inv += 1;
                }
            }
        }
        if parity(inv) != sign {
            return Err(format!("rearrangement {digits:?} changes the sign"));
        }
        count += 1;
        let mut c = 0;
        loop {
            if c == width {
                return Ok(count);
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

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, u64, fn() -> Check)> = vec![
        (
            1,
            "running example tableaux and expansion (r=2)",
            1,
            c1_running_example,
        ),
        (2, "three-row example (r=3)", 1, c2_three_row),
        (
            3,
            "running example tableaux (r=1)",
            1,
            c3_running_example_r1,
        ),
        (
            4,
            "Grassmann-Cayley equivalence, n<=7",
            300,
            c4_grassmann_cayley,
        ),
        (
            5,
            "recurrence n<=7 and three-term relation n<=6",
            600,
            c5_recurrence,
        ),
        (6, "Specht membership and dimension, n<=7", 600, c6_specht),
        (
            7,
            "equivariance under s_i, c_n, w_0, n<=6",
            120,
            c7_equivariance,
        ),
        (
            8,
            "noncrossing independence, r>=2, n<=8",
            600,
            c8_independence,
        ),
        (9, "hook basis, n<=8", 300, c9_hook),
        (10, "rotation orbit of (1 2 3 5|4 6)", 1, c10_orbit),
        (11, "nearly noncrossing families", 900, c11_conjecture),
        (12, "tensor diagram validation, n<=8", 60, c12_diagrams),
        (13, "minor translation and sign lemmas", 300, c13_signs),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(format!(
                "panic: {:?}",
                e.downcast_ref::<String>()
                    .map(String::as_str)
                    .or(e.downcast_ref::<&str>().copied())
            ))
        });
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit);
        let passed = result.is_ok() && within;
        if !passed {
            failures += 1;
        }
        let detail = match &result {
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        println!(
            "criterion {id:>2} {} {title} [{:.2}s, limit {limit}s{}] {detail}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if within { "" } else { ", EXCEEDED" }
        );
    }
    println!("acceptance: {} of 13 criteria passed", 13 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
