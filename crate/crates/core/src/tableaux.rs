//! Jellyfish tableaux: `d` columns, the first `r` rows full and every lower
//! row holding a single entry, column `i` filled by the sorted block `π_i`.

use std::fmt;

use crate::combinat::{
    count_inversions, parity_sign, FlamingoContext, OrderedSetPartition, Permutation,
};
use crate::error::{Error, Result};
use crate::polyring::{minor, MatrixPolynomial, MinorSpec};

/// One element of `𝒥_r(π)`, stored as the column chosen by each tentacle
/// row `r+1..=ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JellyfishTableau {
    context: FlamingoContext,
    partition: OrderedSetPartition,
    tentacles: Vec<usize>,
}

impl JellyfishTableau {
    /// `tentacles[t]` is the (1-indexed) column of row `r + 1 + t`.
    pub fn from_tentacles(
        pi: &OrderedSetPartition,
        r: usize,
        tentacles: Vec<usize>,
    ) -> Result<Self> {
        let context = FlamingoContext::new(pi, r)?;
        if tentacles.len() != context.nu - r {
            return Err(Error::SizeMismatch {
                expected: context.nu - r,
                found: tentacles.len(),
            });
        }
        let mut counts = vec![0; context.d];
        for &c in &tentacles {
            if c == 0 || c > context.d {
                return Err(Error::InvalidParameters(format!(
                    "column {c} out of range 1..={}",
                    context.d
                )));
            }
            counts[c - 1] += 1;
        }
        if counts != context.nu_i {
            return Err(Error::Constraint(format!(
                "tentacle counts {counts:?} differ from block excesses {:?}",
                context.nu_i
            )));
        }
        Ok(Self {
            context,
            partition: pi.clone(),
            tentacles,
        })
    }

    /// The tableau filling each column's tentacles before the next column's.
    pub fn top_justified(pi: &OrderedSetPartition, r: usize) -> Result<Self> {
        let context = FlamingoContext::new(pi, r)?;
        let tentacles = context
            .nu_i
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
            .collect();
        Self::from_tentacles(pi, r, tentacles)
    }

    pub fn context(&self) -> &FlamingoContext {
        &self.context
    }

    pub fn partition(&self) -> &OrderedSetPartition {
        &self.partition
    }

    pub fn tentacles(&self) -> &[usize] {
        &self.tentacles
    }

    /// `R_i(T)`: the rows occupied by column `i`, ascending.
    pub fn column_rows(&self, i: usize) -> Vec<usize> {
        let r = self.context.r;
        (1..=r)
            .chain(
                self.tentacles
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c == i)
                    .map(|(t, _)| r + 1 + t),
            )
            .collect()
    }

    pub fn filled(&self) -> FilledTableau {
        let FlamingoContext { nu, d, .. } = self.context;
        let mut cells = vec![vec![None; d]; nu];
        for i in 1..=d {
            for (&row, &entry) in self.column_rows(i).iter().zip(self.partition.block(i - 1)) {
                cells[row - 1][i - 1] = Some(entry);
            }
        }
        FilledTableau { cells }
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.filled().reading_word()
    }

    pub fn inversion_number(&self) -> usize {
        count_inversions(&self.reading_word())
    }

    pub fn sign(&self) -> i32 {
        parity_sign(self.inversion_number())
    }

    /// `J(T) = ∏_i M_{R_i(T)}^{π_i}` in the `ν × n` universe.
    pub fn minor_product(&self) -> Result<MatrixPolynomial> {
        let (n, k) = (self.context.n, self.context.nu);
        let mut product = MatrixPolynomial::one(n, k);
        for (i, spec) in self.minor_specs()?.iter().enumerate() {
            let factor = minor(spec, n, k)?;
            product = if i == 0 {
                factor
            } else {
                product.mul(&factor)?
            };
        }
        Ok(product)
    }

    /// The factors `(R_i(T), π_i)` of `J(T)`.
    pub fn minor_specs(&self) -> Result<Vec<MinorSpec>> {
        (1..=self.context.d)
            .map(|i| MinorSpec::new(self.column_rows(i), self.partition.block(i - 1).to_vec()))
            .collect()
    }

    /// The tableau of `σ(π)` obtained by moving column `i` to `σ(i)`.
    pub fn permute_columns(&self, sigma: &Permutation) -> Result<Self> {
        let pi = self.partition.permute_blocks(sigma)?;
        let tentacles = self.tentacles.iter().map(|&c| sigma.apply(c)).collect();
        Self::from_tentacles(&pi, self.context.r, tentacles)
    }
}

impl fmt::Display for JellyfishTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.filled().fmt(f)
    }
}

/// All of `𝒥_r(π)`, ordered lexicographically by tentacle column sequence.
pub fn enumerate_tableaux(pi: &OrderedSetPartition, r: usize) -> Result<Vec<JellyfishTableau>> {
    let context = FlamingoContext::new(pi, r)?;
    let mut out = Vec::new();
    let mut remaining = context.nu_i.clone();
    let mut seq = Vec::with_capacity(context.nu - r);
    fill(&mut remaining, &mut seq, context.nu - r, &mut |s| {
        out.push(JellyfishTableau {
            context: context.clone(),
            partition: pi.clone(),
            tentacles: s.to_vec(),
        })
    });
    Ok(out)
}

fn fill(remaining: &mut [usize], seq: &mut Vec<usize>, len: usize, emit: &mut dyn FnMut(&[usize])) {
    if seq.len() == len {
        emit(seq);
        return;
    }
    for c in 0..remaining.len() {
        if remaining[c] > 0 {
            remaining[c] -= 1;
            seq.push(c + 1);
            fill(remaining, seq, len, emit);
            seq.pop();
            remaining[c] += 1;
        }
    }
}

/// A grid of optional entries, used for tableaux whose columns need not be
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilledTableau {
    cells: Vec<Vec<Option<usize>>>,
}

impl FilledTableau {
    pub fn new(cells: Vec<Vec<Option<usize>>>) -> Self {
        Self { cells }
    }

    pub fn cells(&self) -> &[Vec<Option<usize>>] {
        &self.cells
    }

    pub fn column_entries(&self, col: usize) -> Vec<usize> {
        self.cells.iter().filter_map(|row| row[col - 1]).collect()
    }

    /// Rearranges the entries of column `col` (top to bottom) to `entries`,
    /// keeping the occupied cells.
    pub fn with_column_entries(&self, col: usize, entries: &[usize]) -> Result<Self> {
        let occupied = self
            .cells
            .iter()
            .filter(|row| row[col - 1].is_some())
            .count();
        if occupied != entries.len() {
            return Err(Error::SizeMismatch {
                expected: occupied,
                found: entries.len(),
            });
        }
        let mut cells = self.cells.clone();
        let mut it = entries.iter();
        for row in &mut cells {
            if row[col - 1].is_some() {
                row[col - 1] = it.next().copied();
            }
        }
        Ok(Self { cells })
    }

    /// Nonempty entries, left to right and top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.cells.iter().flatten().flatten().copied().collect()
    }

    /// `(-1)` to the number of reading-word inversions between entries of
    /// different columns.
    pub fn column_permuted_sign(&self) -> i32 {
        let located: Vec<(usize, usize)> = self
            .cells
            .iter()
            .flat_map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, e)| e.map(|e| (e, c)))
            })
            .collect();
        let mut count = 0;
        for (a, &(x, cx)) in located.iter().enumerate() {
            for &(y, cy) in &located[a + 1..] {
                if cx != cy && x > y {
                    count += 1;
                }
            }
        }
        parity_sign(count)
    }
}

impl fmt::Display for FilledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.cells {
            let line: Vec<String> = row
                .iter()
                .map(|e| e.map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", line.join("\t"))?;
        }
        Ok(())
    }
}

/// `(ν − r)! / ∏ ν_i!`, the size of `𝒥_r(π)`.
pub fn tableau_count(context: &FlamingoContext) -> u128 {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    // running product of binomials C(placed + c, c)
    for &c in &context.nu_i {
        for t in 1..=c as u128 {
            placed += 1;
            total = total * placed / t;
        }
    }
    total
}
