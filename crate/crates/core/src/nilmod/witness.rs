use serde::Serialize;

use crate::boxmove::BoxMove;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::poles::{box_move_pole_partition, PolePartition};
use crate::tableau::LrTableau;

use super::embedding::Embedding;
use super::graded::{graded_pole, realize_tableau, GradedPole};
use super::module::NilModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub checks: Vec<Check>,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }

    fn push(&mut self, name: &'static str, passed: bool) {
        self.checks.push(Check { name, passed });
    }
}

/// `0 -> X̃ -> Y -> Z̃ -> 0` for a box move, with `Y` of tableau Γ and
/// `X̃ ⊕ Z̃` of tableau Γ̃. The untouched part is added to `X̃` and `Y`.
#[derive(Clone, Debug)]
pub struct WitnessSequence<S> {
    pub partition: PolePartition,
    pub xt: Embedding<S>,
    pub y: Embedding<S>,
    pub zt: Embedding<S>,
    pub iota: Matrix<S>,
    pub pi: Matrix<S>,
    pub report: WitnessReport,
}

fn missing(what: &str) -> Error {
    Error::InvariantViolation(format!("witness: missing generator {what}"))
}

fn index<S: Scalar>(p: &GradedPole<S>, len: u32, k: u32, name: &str) -> Result<usize> {
    p.basis_index(len, k).ok_or_else(|| missing(&format!("T^{k} g^{len} of {name}")))
}

/// Nonzero entries connect basis vectors of equal degree.
pub fn is_degree_zero<S: Scalar>(m: &Matrix<S>, source: Option<&[i64]>, target: Option<&[i64]>) -> bool {
    let (Some(src), Some(tgt)) = (source, target) else { return false };
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)].is_zero() || tgt[i] == src[j]))
}

pub fn witness_sequence<S: Scalar>(g: &LrTableau, gt: &LrTableau, mv: &BoxMove) -> Result<WitnessSequence<S>> {
    let partition = box_move_pole_partition(g, gt, mv)?;
    let BoxMove { u, v, r, s, .. } = *mv;
    let shift = (v - u) as i64;
    let x = graded_pole::<S>(&partition.u_pole, shift)?;
    let z = graded_pole::<S>(&partition.v_pole, 0)?;
    let xt = graded_pole::<S>(&partition.u_pole_moved, shift)?;
    let zt = graded_pole::<S>(&partition.v_pole_moved, 0)?;
    let (nx, nz, nxt, nzt) = (x.dim(), z.dim(), xt.dim(), zt.dim());
    let ny = nx + nz;

    let y_amb = x.embedding.ambient().direct_sum(z.embedding.ambient());
    let mut y1 = x.generator.clone();
    y1.resize(ny, S::zero());
    y1[nx + index(&z, s, s - u, "Z")?] = S::one();
    let mut y2 = vec![S::zero(); nx];
    y2.extend(z.generator.iter().cloned());
    let y = Embedding::generated(y_amb, vec![y1, y2]);

    let mut iota = Matrix::zeros(ny, nxt);
    for (b, &len) in xt.lengths.iter().enumerate() {
        for k in 0..len {
            let col = xt.offsets[b] + k as usize;
            if len == s {
                iota[(index(&x, r, k + r - s, "X")?, col)] = S::one();
                iota[(nx + index(&z, s, k, "Z")?, col)] = S::one();
            } else {
                iota[(index(&x, len, k, "X")?, col)] = S::one();
            }
        }
    }
    let mut pi = Matrix::zeros(nzt, ny);
    for (b, &len) in x.lengths.iter().enumerate() {
        if len == r {
            for k in 0..len {
                pi[(index(&zt, r, k, "Z̃")?, x.offsets[b] + k as usize)] = -S::one();
            }
        }
    }
    for (b, &len) in z.lengths.iter().enumerate() {
        for k in 0..len {
            let col = nx + z.offsets[b] + k as usize;
            if len == s {
                pi[(index(&zt, r, k + r - s, "Z̃")?, col)] = S::one();
            } else {
                pi[(index(&zt, len, k, "Z̃")?, col)] = S::one();
            }
        }
    }

    // the untouched part U goes onto both X̃ and Y
    let common = realize_tableau::<S>(&partition.common)?;
    let nu = common.dim();
    let xt_full = xt.embedding.direct_sum(&common);
    let y_full = y.direct_sum(&common);
    let iota = Matrix::block_diag(&[&iota, &Matrix::identity(nu)]);
    let pi = Matrix::block_diag(&[&pi, &Matrix::zeros(0, nu)]);
    let zt = zt.embedding;

    let report = verify(g, gt, &xt_full, &y_full, &zt, &iota, &pi);
    if !report.ok() {
        return Err(Error::InvariantViolation(format!("witness checks failed: {}", report.failures().join(", "))));
    }
    Ok(WitnessSequence { partition, xt: xt_full, y: y_full, zt, iota, pi, report })
}

fn commutes<S: Scalar>(m: &Matrix<S>, src: &NilModule<S>, tgt: &NilModule<S>) -> bool {
    (m * src.t()) == (tgt.t() * m)
}

/// Exactness on ambient spaces and subspaces, gradings, and both tableaux.
pub fn verify<S: Scalar>(
    g: &LrTableau,
    gt: &LrTableau,
    xt: &Embedding<S>,
    y: &Embedding<S>,
    zt: &Embedding<S>,
    iota: &Matrix<S>,
    pi: &Matrix<S>,
) -> WitnessReport {
    let mut rep = WitnessReport::default();
    let shapes_ok = iota.rows() == y.dim() && iota.cols() == xt.dim() && pi.rows() == zt.dim() && pi.cols() == y.dim();
    rep.push("map dimensions", shapes_ok);
    if !shapes_ok {
        return rep;
    }
    rep.push("iota commutes with T", commutes(iota, xt.ambient(), y.ambient()));
    rep.push("pi commutes with T", commutes(pi, y.ambient(), zt.ambient()));
    let rank_iota = iota.rank();
    let rank_pi = pi.rank();
    rep.push("iota injective", rank_iota == xt.dim());
    rep.push("pi surjective", rank_pi == zt.dim());
    rep.push("pi iota = 0", (pi * iota).is_zero());
    rep.push("ker pi = im iota", rank_pi + rank_iota == y.dim());
    let iota_sub = xt.sub().image(iota);
    let pi_sub = y.sub().image(pi);
    rep.push("iota maps subspaces", y.sub().contains_subspace(&iota_sub));
    rep.push("pi maps subspaces", zt.sub().contains_subspace(&pi_sub));
    rep.push("subspace sequence exact", pi_sub == *zt.sub() && y.sub().dim() == xt.sub().dim() + zt.sub().dim());
    rep.push("iota degree 0", is_degree_zero(iota, xt.ambient().grading(), y.ambient().grading()));
    rep.push("pi degree 0", is_degree_zero(pi, y.ambient().grading(), zt.ambient().grading()));
    rep.push("tableau of Y", &y.tableau() == g);
    rep.push("tableau of X̃ ⊕ Z̃", &xt.direct_sum(zt).tableau() == gt);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxmove::find_box_move;
    use crate::tableau::Column;
    use crate::{F2, F3};

    fn strip(cols: &[(u32, u32)]) -> LrTableau {
        LrTableau::from_column_multiset(
            cols.iter().map(|&(l, e)| if e == 0 { Column::empty(l) } else { Column::new(l, l - 1, vec![e]) }).collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_pole_witness() {
        let g = strip(&[(9, 3), (9, 4), (7, 2), (5, 3), (3, 2), (1, 1), (1, 1)]);
        let gt = strip(&[(9, 3), (9, 4), (7, 3), (5, 2), (3, 2), (1, 1), (1, 1)]);
        let mv = find_box_move(&g, &gt).unwrap();
        let w = witness_sequence::<F2>(&g, &gt, &mv).unwrap();
        assert!(w.report.ok());
        let w3 = witness_sequence::<F3>(&g, &gt, &mv).unwrap();
        assert_eq!(w3.report.checks.len(), w.report.checks.len());
    }

    #[test]
    fn one_pole_witness() {
        let g = strip(&[(5, 1), (2, 2), (1, 1)]);
        let gt = strip(&[(5, 2), (2, 1), (1, 1)]);
        let mv = find_box_move(&g, &gt).unwrap();
        let w = witness_sequence::<F3>(&g, &gt, &mv).unwrap();
        assert_eq!(w.y.tableau(), g);
        assert_eq!(w.xt.direct_sum(&w.zt).tableau(), gt);
    }

    #[test]
    fn wrong_move_is_rejected() {
        let g = strip(&[(5, 1), (2, 2), (1, 1)]);
        let mv = BoxMove { u: 1, v: 2, r: 5, s: 1, column_u: 0, column_v: 2 };
        assert!(witness_sequence::<F2>(&g, &g, &mv).is_err());
    }
}
