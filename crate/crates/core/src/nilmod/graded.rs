use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Subspace;
use crate::partition::Partition;
use crate::poles::{minimal_blocks, pole_decomposition, pole_from_tableau, pole_tableau, Pole};
use crate::tableau::LrTableau;

use super::embedding::Embedding;
use super::module::NilModule;

/// A graded pole with named generators `g^ℓ`, one per block length.
#[derive(Clone, Debug)]
pub struct GradedPole<S> {
    pub embedding: Embedding<S>,
    pub lengths: Vec<u32>,
    pub offsets: Vec<usize>,
    /// Degree of each block generator.
    pub degrees: Vec<i64>,
    /// The generator `a` of the subspace.
    pub generator: Vec<S>,
}

impl<S: Scalar> GradedPole<S> {
    pub fn block(&self, len: u32) -> Option<usize> {
        self.lengths.iter().position(|&l| l == len)
    }

    /// Basis index of `T^k g^len`.
    pub fn basis_index(&self, len: u32, k: u32) -> Option<usize> {
        let b = self.block(len)?;
        (k < len).then(|| self.offsets[b] + k as usize)
    }

    pub fn dim(&self) -> usize {
        self.embedding.dim()
    }
}

/// Graded realization of a pole tableau with `t` columns:
/// `B = ⊕ P^{β_i}[(t-i+1) - β_i + shift]`, `a = Σ T^{β_i-(t-i+1)} g^{β_i}`.
pub fn graded_pole<S: Scalar>(tableau: &LrTableau, shift: i64) -> Result<GradedPole<S>> {
    pole_from_tableau(tableau)?;
    let t = tableau.columns().len();
    let mut lengths = Vec::with_capacity(t);
    let mut degrees = Vec::with_capacity(t);
    let mut powers = Vec::with_capacity(t);
    for (i, c) in tableau.columns().iter().enumerate() {
        let entry = (t - i) as u32;
        if c.entries != [entry] || c.total < entry {
            return Err(Error::Precondition(format!("column {} of {tableau} does not hold entry {entry}", i + 1)));
        }
        lengths.push(c.total);
        degrees.push(entry as i64 - c.total as i64 + shift);
        powers.push(c.total - entry);
    }
    let blocks: Vec<(u32, i64)> = lengths.iter().copied().zip(degrees.iter().copied()).collect();
    let ambient = NilModule::from_blocks(&blocks);
    let offsets = block_offsets(&lengths);
    let mut a = vec![S::zero(); ambient.dim()];
    for (b, &p) in powers.iter().enumerate() {
        a[offsets[b] + p as usize] = S::one();
    }
    let embedding = Embedding::generated(ambient, vec![a.clone()]);
    Ok(GradedPole { embedding, lengths, offsets, degrees, generator: a })
}

fn block_offsets(lengths: &[u32]) -> Vec<usize> {
    lengths
        .iter()
        .scan(0usize, |acc, &l| {
            let o = *acc;
            *acc += l as usize;
            Some(o)
        })
        .collect()
}

/// Realization of a pole. On an ambient containing the minimal blocks the
/// generator is `Σ T^d g^m` over the minimal blocks, the rest being empty pickets;
/// otherwise the pole tableau must be a horizontal strip.
pub fn realize_pole<S: Scalar>(p: &Pole) -> Result<Embedding<S>> {
    let blocks = minimal_blocks(p.layers());
    let mut rest: Vec<u32> = p.ambient().parts().to_vec();
    let fits = blocks.iter().all(|b| match rest.iter().position(|&x| x == b.0) {
        Some(i) => {
            rest.remove(i);
            true
        }
        None => false,
    });
    if !fits {
        let t = pole_tableau(p)?;
        if !t.is_horizontal_strip() {
            return Err(Error::Precondition(format!(
                "no construction for the pole {:?} on {}",
                p.layers(),
                p.ambient()
            )));
        }
        return Ok(graded_pole(&t, 0)?.embedding);
    }
    let lengths: Vec<u32> = blocks.iter().map(|b| b.0).collect();
    let graded: Vec<(u32, i64)> = blocks.iter().map(|&(m, d)| (m, -(d as i64))).collect();
    let ambient = NilModule::from_blocks(&graded);
    let offsets = block_offsets(&lengths);
    let mut a = vec![S::zero(); ambient.dim()];
    for (b, &(_, d)) in blocks.iter().enumerate() {
        a[offsets[b] + d as usize] = S::one();
    }
    let mut e = Embedding::generated(ambient, vec![a]);
    for n in rest {
        e = e.direct_sum(&empty_picket(n));
    }
    Ok(e)
}

/// `P^n_0`, graded with the generator in degree 0.
pub fn empty_picket<S: Scalar>(n: u32) -> Embedding<S> {
    Embedding::zero(NilModule::from_blocks(&[(n, 0)]))
}

/// The zero module.
pub fn zero_embedding<S: Scalar>() -> Embedding<S> {
    Embedding::zero(NilModule::from_blocks(&[]))
}

/// Direct sum of graded extended poles whose tableau is `t`.
pub fn realize_tableau<S: Scalar>(t: &LrTableau) -> Result<Embedding<S>> {
    let mut out = zero_embedding();
    for part in pole_decomposition(t)? {
        if let Some(p) = &part.pole {
            out = out.direct_sum(&graded_pole(&pole_tableau(p)?, 0)?.embedding);
        }
        for &n in &part.empty_pickets {
            out = out.direct_sum(&empty_picket(n));
        }
    }
    if &out.tableau() != t {
        return Err(Error::InvariantViolation(format!("realization of {t} has tableau {}", out.tableau())));
    }
    Ok(out)
}

/// The submodule generated by `gens` inside `N_β`, with the generators given
/// as (block index, power of T) monomial sums.
pub fn monomial_embedding<S: Scalar>(beta: &Partition, gens: &[&[(usize, u32)]]) -> Embedding<S> {
    let ambient = NilModule::canonical(beta);
    let offsets = block_offsets(beta.parts());
    let vectors = gens
        .iter()
        .map(|g| {
            let mut v = vec![S::zero(); ambient.dim()];
            for &(b, k) in g.iter() {
                v[offsets[b] + k as usize] = v[offsets[b] + k as usize].clone() + S::one();
            }
            v
        })
        .collect();
    Embedding::generated(ambient, vectors)
}

/// Is the embedding's subspace spanned by homogeneous vectors?
pub fn is_graded_subspace<S: Scalar>(e: &Embedding<S>) -> bool {
    let Some(deg) = e.ambient().grading() else { return false };
    let n = e.dim();
    let mut degrees: Vec<i64> = deg.to_vec();
    degrees.sort_unstable();
    degrees.dedup();
    let parts = degrees.iter().flat_map(|&d| {
        e.sub()
            .basis()
            .iter()
            .map(move |v| (0..n).map(|i| if deg[i] == d { v[i].clone() } else { S::zero() }).collect::<Vec<S>>())
    });
    let homogeneous = Subspace::span(n, parts);
    homogeneous == *e.sub()
}
