use crate::error::Result;
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::partition::Partition;

use super::embedding::Embedding;
use super::module::NilModule;

/// Dimension of the space of maps `g: B1 -> B2` with `g T1 = T2 g` and `g(A1) ⊆ A2`.
pub fn hom_dim<S: Scalar>(e1: &Embedding<S>, e2: &Embedding<S>) -> usize {
    let (n1, n2) = (e1.dim(), e2.dim());
    let unknowns = n1 * n2;
    if unknowns == 0 {
        return 0;
    }
    let var = |i: usize, j: usize| i * n1 + j;
    let (t1, t2) = (e1.ambient().t(), e2.ambient().t());
    let mut rows: Vec<Vec<S>> = Vec::new();
    // (g T1 - T2 g)[i][j] = 0
    for i in 0..n2 {
        for j in 0..n1 {
            let mut eq = vec![S::zero(); unknowns];
            for k in 0..n1 {
                if !t1[(k, j)].is_zero() {
                    eq[var(i, k)] = eq[var(i, k)].clone() + t1[(k, j)].clone();
                }
            }
            for k in 0..n2 {
                if !t2[(i, k)].is_zero() {
                    eq[var(k, j)] = eq[var(k, j)].clone() - t2[(i, k)].clone();
                }
            }
            if eq.iter().any(|x| !x.is_zero()) {
                rows.push(eq);
            }
        }
    }
    // every functional vanishing on A2 vanishes on g(A1)
    let annihilator = if e2.sub().dim() == 0 {
        (0..n2).map(|i| crate::linalg::unit(n2, i)).collect()
    } else {
        Matrix::from_rows(e2.sub().basis().to_vec()).kernel()
    };
    for nu in &annihilator {
        for a in e1.sub().basis() {
            let mut eq = vec![S::zero(); unknowns];
            for (i, x) in nu.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in a.iter().enumerate() {
                    if !y.is_zero() {
                        eq[var(i, j)] = x.clone() * y.clone();
                    }
                }
            }
            rows.push(eq);
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    unknowns - Matrix::from_rows(rows).rank()
}

/// `P_i^l = (soc^i P^l ⊂ P^l)`.
pub fn picket<S: Scalar>(i: u32, l: u32) -> Embedding<S> {
    let b = NilModule::canonical(&Partition::new(vec![l]).expect("one part"));
    let sub = b.kernel_power(i.min(l));
    Embedding::new(b, sub).expect("kernels of powers are invariant")
}

/// The picket `P^n_m` with the subspace `T^{n-m} B`.
pub fn picket_embedding<S: Scalar>(n: u32, m: u32) -> Embedding<S> {
    picket(m, n)
}

/// `profile[i][l-1] = hom_dim(E, P_i^l)` for `0 <= i <= max_i`, `1 <= l <= max_l`.
pub fn picket_hom_profile<S: Scalar>(e: &Embedding<S>, max_i: u32, max_l: u32) -> Vec<Vec<usize>> {
    (0..=max_i).map(|i| (1..=max_l).map(|l| hom_dim(e, &picket(i, l))).collect()).collect()
}

/// `Σ_j min(γ_j, l)`, the hom dimension predicted by a tableau.
pub fn predicted_picket_hom(gamma_i: &Partition, l: u32) -> usize {
    gamma_i.parts().iter().map(|&g| g.min(l) as usize).sum()
}

/// Entrywise comparison of picket profiles over a common range.
pub fn picket_dominance_test<S: Scalar>(e1: &Embedding<S>, e2: &Embedding<S>) -> Result<bool> {
    let max_i = e1.sub_type().largest().max(e2.sub_type().largest());
    let max_l = e1.ambient_type().largest().max(e2.ambient_type().largest());
    let (p1, p2) = (picket_hom_profile(e1, max_i, max_l), picket_hom_profile(e2, max_i, max_l));
    Ok(p1.iter().flatten().zip(p2.iter().flatten()).all(|(a, b)| a <= b))
}

/// Hom dimension between two plain modules (zero subspaces).
pub fn module_hom_dim<S: Scalar>(b1: &NilModule<S>, b2: &NilModule<S>) -> usize {
    hom_dim(&Embedding::zero(b1.clone()), &Embedding::zero(b2.clone()))
}
