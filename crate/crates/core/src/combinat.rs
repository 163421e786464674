//! Ordered and unordered set partitions of `[n]`, permutations, and the
//! actions of the symmetric group on partitions.
//!
//! Everything here is 1-indexed, matching the text format
//! `2 3 6 10|5 7 8 9|1 4`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of inversions of a word: pairs `i < j` (by position) with
/// `word[i] > word[j]`.
pub fn count_inversions(word: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in word.iter().enumerate() {
        count += word[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

/// `(-1)^k` as an `i32`.
pub fn parity_sign(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidParameters(format!(
                    "{images:?} is not a permutation of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// `s_i`, swapping `i` and `i + 1`.
    pub fn simple_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidParameters(format!(
                "s_{i} is undefined in S_{n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    /// The long cycle `c_n = n 1 2 ... (n-1)`.
    pub fn long_cycle(n: usize) -> Self {
        let images = (1..=n).map(|j| if j == 1 { n } else { j - 1 }).collect();
        Self { images }
    }

    /// The longest element `w_0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Self {
            images: (1..=n).rev().collect(),
        }
    }

    /// All permutations of `[n]` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..current.len())
                .rev()
                .find(|&i| current[i - 1] < current[i])
            else {
                break;
            };
            let j = (i..current.len())
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .expect("a larger element exists to the right");
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (j, &v) in self.images.iter().enumerate() {
            images[v - 1] = j + 1;
        }
        Self { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&j| self.apply(j)).collect(),
        })
    }

    pub fn inversions(&self) -> usize {
        count_inversions(&self.images)
    }

    pub fn sign(&self) -> i32 {
        parity_sign(self.inversions())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() < 10 { "" } else { " " };
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3 1 2`, `3,1,2`, or (for n < 10) the compact `312`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |detail: String| Error::Parse {
            what: "permutation",
            detail,
        };
        let images: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| parse_err(format!("{t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|v| v as usize)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(images)
    }
}

/// An ordered set partition `(π_1 | ... | π_d)` of `[n]`.
///
/// Blocks keep their order; elements inside a block are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut seen = vec![false; n + 1];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &e in &block {
                if e == 0 || e > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} outside [{n}]"
                    )));
                }
                if seen[e] {
                    return Err(Error::InvalidPartition(format!("element {e} repeated")));
                }
                seen[e] = true;
            }
            block.sort_unstable();
            sorted_blocks.push(block);
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(Error::InvalidPartition(format!(
                "element {missing} missing"
            )));
        }
        Ok(Self {
            n,
            blocks: sorted_blocks,
        })
    }

    /// Builds a partition whose ground set size is the number of elements.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Index of the block containing `e`.
    pub fn block_of(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&e).is_ok())
    }

    /// The underlying unordered partition, blocks ordered by their minima.
    pub fn canonical(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { n: self.n, blocks }
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_pairs().is_empty()
    }

    /// Pairs of block indices `(i, j)`, `i < j`, whose blocks cross.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let d = self.num_blocks();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if blocks_cross(&self.blocks[i], &self.blocks[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Lexicographically smallest `a < b < c < e` with `a, c` in one block
    /// and `b, e` in another.
    pub fn first_crossing_quadruple(&self) -> Option<[usize; 4]> {
        let label = self.labels();
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                if label[a] == label[b] {
                    continue;
                }
                for c in b + 1..=n {
                    if label[c] != label[a] {
                        continue;
                    }
                    for e in c + 1..=n {
                        if label[e] == label[b] {
                            return Some([a, b, c, e]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Number of quadruples `a < b < c < e` with `a, c` and `b, e` in two
    /// distinct blocks.
    pub fn crossing_quadruples(&self) -> usize {
        let label = self.labels();
        let n = self.n;
        let mut count = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if label[a] == label[b] {
                    continue;
                }
                for c in b + 1..=n {
                    if label[c] != label[a] {
                        continue;
                    }
                    count += (c + 1..=n).filter(|&e| label[e] == label[b]).count();
                }
            }
        }
        count
    }

    /// `label[e]` is the block index of `e` (index 0 unused).
    fn labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &e in block {
                label[e] = i;
            }
        }
        label
    }

    /// `w · π = (w·π_1 | ... | w·π_d)`.
    pub fn act_elements(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: w.n(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&e| w.apply(e)).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self { n: self.n, blocks })
    }

    /// Rotation by the long cycle `c_n`.
    pub fn rotate(&self) -> Self {
        self.act_elements(&Permutation::long_cycle(self.n))
            .expect("sizes agree")
    }

    /// Reflection `j ↦ n + 1 - j`.
    pub fn reflect(&self) -> Self {
        self.act_elements(&Permutation::longest(self.n))
            .expect("sizes agree")
    }

    /// `σ(π)_i = π_{σ^{-1}(i)}`.
    pub fn permute_blocks(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.num_blocks() {
            return Err(Error::SizeMismatch {
                expected: self.num_blocks(),
                found: sigma.n(),
            });
        }
        let inv = sigma.inverse();
        let blocks = (1..=sigma.n())
            .map(|i| self.blocks[inv.apply(i) - 1].clone())
            .collect();
        Ok(Self { n: self.n, blocks })
    }
}

/// Two disjoint sorted sets cross iff, merged in order, their labels form
/// at least four alternating runs.
pub fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let from_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(from_a) {
            runs += 1;
            if runs >= 4 {
                return true;
            }
            last = Some(from_a);
        }
    }
    false
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (k, e) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    /// Parses `2 3 6 10|5 7 8 9|1 4`; surrounding parentheses are allowed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let blocks = s
            .split('|')
            .map(|part| {
                part.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>().map_err(|e| Error::Parse {
                            what: "partition",
                            detail: format!("{t:?}: {e}"),
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(blocks)
    }
}

/// Bookkeeping quantities attached to `π ∈ OP(n, d, r)`: the number of rows
/// `ν = n - (d-1) r`, the tentacle counts `ν_i = |π_i| - r`, the tentacle
/// rows `S = [r+1, ν]` and the rows below them `E = [ν+1, n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlamingoContext {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub nu: usize,
    pub nu_i: Vec<usize>,
}

impl FlamingoContext {
    /// Fails with `BlockTooSmall` unless every block has size at least `r`.
    pub fn new(pi: &OrderedSetPartition, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameters("r must be positive".into()));
        }
        let mut nu_i = Vec::with_capacity(pi.num_blocks());
        for (block, size) in pi.block_sizes().into_iter().enumerate() {
            if size < r {
                return Err(Error::BlockTooSmall {
                    block: block + 1,
                    size,
                    r,
                });
            }
            nu_i.push(size - r);
        }
        let d = pi.num_blocks();
        let nu = r + nu_i.iter().sum::<usize>();
        debug_assert_eq!(nu + (d - 1) * r, pi.n());
        Ok(Self {
            n: pi.n(),
            d,
            r,
            nu,
            nu_i,
        })
    }

    /// Row count `n - (d-1) r` for a partition of `[n]` into `d` blocks; may be
    /// used even when the partition is not `r`-admissible.
    pub fn row_count(n: usize, d: usize, r: usize) -> usize {
        n.saturating_sub((d.saturating_sub(1)) * r)
    }

    pub fn tentacle_rows(&self) -> std::ops::RangeInclusive<usize> {
        self.r + 1..=self.nu
    }

    pub fn lower_rows(&self) -> std::ops::RangeInclusive<usize> {
        self.nu + 1..=self.n
    }
}

fn check_params(n: usize, d: usize, r: usize) -> Result<()> {
    if n == 0 || d == 0 || r == 0 || n < r * d {
        return Err(Error::InvalidParameters(format!(
            "need n >= r d with n, d, r >= 1 (got n={n}, d={d}, r={r})"
        )));
    }
    Ok(())
}

/// Unordered set partitions of `[n]` into `d` blocks of size `>= r`, each
/// with blocks ordered by minimum.
///
/// Generated by restricted growth strings in lexicographic order: element
/// `e` joins an existing block or opens the next one.
pub fn enumerate_set_partitions(n: usize, d: usize, r: usize) -> Result<Vec<OrderedSetPartition>> {
    check_params(n, d, r)?;
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(d);
    grow(1, n, d, r, &mut blocks, &mut out);
    Ok(out)
}

fn grow(
    e: usize,
    n: usize,
    d: usize,
    r: usize,
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<OrderedSetPartition>,
) {
    let remaining = n + 1 - e;
    let deficit: usize = blocks
        .iter()
        .map(|b| r.saturating_sub(b.len()))
        .sum::<usize>()
        + r * (d - blocks.len());
    if deficit > remaining {
        return;
    }
    if e > n {
        if blocks.len() == d {
            out.push(OrderedSetPartition {
                n,
                blocks: blocks.clone(),
            });
        }
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].push(e);
        grow(e + 1, n, d, r, blocks, out);
        blocks[i].pop();
    }
    if blocks.len() < d {
        blocks.push(vec![e]);
        grow(e + 1, n, d, r, blocks, out);
        blocks.pop();
    }
}

/// All of `OP(n, d, r)`: for each unordered partition (in the order of
/// [`enumerate_set_partitions`]) every block order, permutations of the
/// blocks taken in lexicographic order.
pub fn enumerate_ordered_partitions(
    n: usize,
    d: usize,
    r: usize,
) -> Result<Vec<OrderedSetPartition>> {
    let base = enumerate_set_partitions(n, d, r)?;
    let perms = Permutation::all(d);
    let mut out = Vec::with_capacity(base.len() * perms.len());
    for pi in &base {
        for sigma in &perms {
            // one-line images give the block order directly
            let blocks = sigma
                .images()
                .iter()
                .map(|&i| pi.blocks[i - 1].clone())
                .collect();
            out.push(OrderedSetPartition { n, blocks });
        }
    }
    Ok(out)
}

/// `NC(n, d, r)`, one canonical representative per unordered partition.
pub fn enumerate_noncrossing(n: usize, d: usize, r: usize) -> Result<Vec<OrderedSetPartition>> {
    Ok(enumerate_set_partitions(n, d, r)?
        .into_iter()
        .filter(OrderedSetPartition::is_noncrossing)
        .collect())
}

/// Whether at most `k` adjacent transpositions `s_i` (acting on elements)
/// take the unordered partition underlying `π` to a noncrossing one.
pub fn transposition_distance_to_noncrossing(pi: &OrderedSetPartition, k: usize) -> bool {
    transposition_distance(pi, k).is_some()
}

/// Minimal number of adjacent transpositions needed, if it is at most `k`.
pub fn transposition_distance(pi: &OrderedSetPartition, k: usize) -> Option<usize> {
    let n = pi.n();
    let start = pi.canonical();
    let gens: Vec<Permutation> = (1..n)
        .map(|i| Permutation::simple_transposition(n, i).expect("1 <= i < n"))
        .collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((p, dist)) = queue.pop_front() {
        if p.is_noncrossing() {
            return Some(dist);
        }
        if dist == k {
            continue;
        }
        for s in &gens {
            let next = p.act_elements(s).expect("sizes agree").canonical();
            if seen.insert(next.clone()) {
                queue.push_back((next, dist + 1));
            }
        }
    }
    None
}
