//! The jellyfish invariant `[π]_r` and how the symmetric group, rotation,
//! reflection and block reordering act on it.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::combinat::{OrderedSetPartition, Permutation};
use crate::error::{Error, Result};
use crate::polyring::{MatrixPolynomial, MinorSpec};
use crate::tableaux::enumerate_tableaux;

/// `[π]_r = Σ_T sgn(T) J(T)`, or zero when some block is smaller than `r`.
pub fn jellyfish_invariant(pi: &OrderedSetPartition, r: usize) -> Result<MatrixPolynomial> {
    let tableaux = match enumerate_tableaux(pi, r) {
        Ok(ts) => ts,
        Err(Error::BlockTooSmall { .. }) => return Ok(MatrixPolynomial::zero(pi.n(), pi.n())),
        Err(e) => return Err(e),
    };
    let k = tableaux[0].context().nu;
    let mut total = MatrixPolynomial::zero(pi.n(), k);
    for t in &tableaux {
        total.add_assign_scaled(&t.minor_product()?, &BigInt::from(t.sign()))?;
    }
    Ok(total)
}

/// `[π]_r` as a list of signed minor products, one per tableau, in
/// enumeration order.
pub fn signed_minor_products(
    pi: &OrderedSetPartition,
    r: usize,
) -> Result<Vec<(i32, Vec<MinorSpec>)>> {
    match enumerate_tableaux(pi, r) {
        Ok(ts) => ts
            .iter()
            .map(|t| Ok((t.sign(), t.minor_specs()?)))
            .collect(),
        Err(Error::BlockTooSmall { .. }) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Substitutes `x_{a,j} ↦ x_{a,w(j)}`.
pub fn act_on_polynomial(w: &Permutation, p: &MatrixPolynomial) -> Result<MatrixPolynomial> {
    p.permute_columns(w)
}

/// Checks `w · [π]_r = sgn(w) [w · π]_r`.
pub fn verify_equivariance(w: &Permutation, pi: &OrderedSetPartition, r: usize) -> Result<bool> {
    let lhs = act_on_polynomial(w, &jellyfish_invariant(pi, r)?)?;
    let rhs = jellyfish_invariant(&pi.act_elements(w)?, r)?;
    Ok(lhs == rhs.scale(&BigInt::from(w.sign())))
}

/// Checks `c_n · [π]_r = (−1)^{n−1} [rot(π)]_r`.
pub fn verify_rotation(pi: &OrderedSetPartition, r: usize) -> Result<bool> {
    let n = pi.n();
    let lhs = act_on_polynomial(&Permutation::long_cycle(n), &jellyfish_invariant(pi, r)?)?;
    let rhs = jellyfish_invariant(&pi.rotate(), r)?;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Ok(lhs == rhs.scale(&BigInt::from(sign)))
}

/// Checks `w_0 · [π]_r = (−1)^{C(n,2)} [refl(π)]_r`.
pub fn verify_reflection(pi: &OrderedSetPartition, r: usize) -> Result<bool> {
    let n = pi.n();
    let lhs = act_on_polynomial(&Permutation::longest(n), &jellyfish_invariant(pi, r)?)?;
    let rhs = jellyfish_invariant(&pi.reflect(), r)?;
    let sign = if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(lhs == rhs.scale(&BigInt::from(sign)))
}

/// Checks `[π]_r = sgn(σ)^r [σ(π)]_r`.
pub fn verify_block_reorder(
    sigma: &Permutation,
    pi: &OrderedSetPartition,
    r: usize,
) -> Result<bool> {
    let lhs = jellyfish_invariant(pi, r)?;
    let rhs = jellyfish_invariant(&pi.permute_blocks(sigma)?, r)?;
    Ok(lhs == rhs.scale(&BigInt::from(sigma.sign().pow(r as u32))))
}

/// Write-once memo of invariants keyed by partition text and `r`.
#[derive(Debug, Default)]
pub struct InvariantCache {
    map: RwLock<HashMap<(String, usize), Arc<MatrixPolynomial>>>,
}

impl InvariantCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, pi: &OrderedSetPartition, r: usize) -> Result<Arc<MatrixPolynomial>> {
        let key = (pi.to_string(), r);
        if let Some(p) = self.map.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(p));
        }
        let computed = Arc::new(jellyfish_invariant(pi, r)?);
        let mut map = self.map.write().expect("cache lock");
        Ok(Arc::clone(map.entry(key).or_insert(computed)))
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
