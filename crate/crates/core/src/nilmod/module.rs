use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{unit, Matrix, Subspace};
use crate::partition::Partition;

/// A vector space with a nilpotent operator `T`, optionally graded.
#[derive(Clone, Debug, PartialEq)]
pub struct NilModule<S> {
    t: Matrix<S>,
    grading: Option<Vec<i64>>,
}

/// Jordan type of a nilpotent matrix.
pub fn jordan_type<S: Scalar>(t: &Matrix<S>) -> Result<Partition> {
    if !t.is_square() {
        return Err(Error::Dimension(format!("{}x{} operator", t.rows(), t.cols())));
    }
    let n = t.rows();
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        power = &power * t;
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    let dual: Vec<u32> = ranks.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
    Ok(Partition::new(dual)?.transpose())
}

impl<S: Scalar> NilModule<S> {
    pub fn new(t: Matrix<S>) -> Result<Self> {
        jordan_type(&t)?;
        Ok(NilModule { t, grading: None })
    }

    /// Requires `T` to raise degrees by one.
    pub fn with_grading(self, grading: Vec<i64>) -> Result<Self> {
        if grading.len() != self.dim() {
            return Err(Error::Dimension(format!("{} degrees for dimension {}", grading.len(), self.dim())));
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.t[(i, j)].is_zero() && grading[i] != grading[j] + 1 {
                    return Err(Error::Precondition(format!("T is not homogeneous of degree 1 at ({i},{j})")));
                }
            }
        }
        Ok(NilModule { grading: Some(grading), ..self })
    }

    /// `N_β`: Jordan blocks largest first, `T e_k = e_{k+1}` inside a block.
    pub fn canonical(beta: &Partition) -> Self {
        Self::from_blocks(&beta.parts().iter().map(|&l| (l, 0)).collect::<Vec<_>>())
    }

    /// Blocks `(length, degree of the generator)` in the given order.
    pub fn from_blocks(blocks: &[(u32, i64)]) -> Self {
        let n: usize = blocks.iter().map(|b| b.0 as usize).sum();
        let mut t = Matrix::zeros(n, n);
        let mut grading = Vec::with_capacity(n);
        let mut off = 0;
        for &(len, deg) in blocks {
            for k in 0..len as usize {
                if k + 1 < len as usize {
                    t[(off + k + 1, off + k)] = S::one();
                }
                grading.push(deg + k as i64);
            }
            off += len as usize;
        }
        NilModule { t, grading: Some(grading) }
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn t(&self) -> &Matrix<S> {
        &self.t
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn forget_grading(mut self) -> Self {
        self.grading = None;
        self
    }

    pub fn jordan_type(&self) -> Partition {
        jordan_type(&self.t).expect("checked on construction")
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.t.apply(v)
    }

    /// `T^k` applied to a subspace.
    pub fn power_of(&self, w: &Subspace<S>, k: u32) -> Subspace<S> {
        let mut w = w.clone();
        for _ in 0..k {
            if w.dim() == 0 {
                break;
            }
            w = w.image(&self.t);
        }
        w
    }

    /// `T^k B`.
    pub fn power_image(&self, k: u32) -> Subspace<S> {
        self.power_of(&Subspace::full(self.dim()), k)
    }

    /// `ker T^k`.
    pub fn kernel_power(&self, k: u32) -> Subspace<S> {
        Subspace::span(self.dim(), self.t.pow(k).kernel())
    }

    /// Smallest invariant subspace containing `gens`.
    pub fn closure<I: IntoIterator<Item = Vec<S>>>(&self, gens: I) -> Subspace<S> {
        let mut all = Vec::new();
        for g in gens {
            let mut v = g;
            while v.iter().any(|x| !x.is_zero()) {
                let next = self.apply(&v);
                all.push(v);
                v = next;
            }
        }
        Subspace::span(self.dim(), all)
    }

    pub fn is_invariant(&self, w: &Subspace<S>) -> bool {
        w.basis().iter().all(|v| w.contains(&self.apply(v)))
    }

    /// Jordan type of `T` restricted to an invariant subspace.
    pub fn restriction_type(&self, w: &Subspace<S>) -> Partition {
        let mut dims = vec![w.dim()];
        let mut cur = w.clone();
        while cur.dim() > 0 {
            cur = cur.image(&self.t);
            dims.push(cur.dim());
        }
        let dual: Vec<u32> = dims.windows(2).map(|d| (d[0] - d[1]) as u32).collect();
        Partition::new(dual).expect("rank drops of a nilpotent operator decrease").transpose()
    }

    /// Jordan type of the operator induced on `B / w`, using the unit vectors
    /// off the echelon pivots of `w` as a complement.
    pub fn quotient_type(&self, w: &Subspace<S>) -> Result<Partition> {
        if !self.is_invariant(w) {
            return Err(Error::NotInvariant);
        }
        let free = w.free_coordinates();
        let mut q = Matrix::zeros(free.len(), free.len());
        for (j, &f) in free.iter().enumerate() {
            let image = w.reduce(&self.apply(&unit(self.dim(), f)));
            for (i, &g) in free.iter().enumerate() {
                q[(i, j)] = image[g].clone();
            }
        }
        jordan_type(&q)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let t = Matrix::block_diag(&[&self.t, &other.t]);
        let grading = match (&self.grading, &other.grading) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        NilModule { t, grading }
    }

    /// Adds `d` to every degree.
    pub fn shift(&self, d: i64) -> Self {
        NilModule { t: self.t.clone(), grading: self.grading.as_ref().map(|g| g.iter().map(|x| x + d).collect()) }
    }

    /// Conjugate `S T S^{-1}`; the grading is dropped.
    pub fn conjugate(&self, s: &Matrix<S>, s_inv: &Matrix<S>) -> Self {
        NilModule { t: &(s * &self.t) * s_inv, grading: None }
    }
}
