use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Subspace;
use crate::partition::Partition;
use crate::tableau::LrTableau;

use super::module::NilModule;

/// An invariant subspace `A` of a nilpotent module `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding<S> {
    ambient: NilModule<S>,
    sub: Subspace<S>,
}

impl<S: Scalar> Embedding<S> {
    pub fn new(ambient: NilModule<S>, sub: Subspace<S>) -> Result<Self> {
        if sub.ambient_dim() != ambient.dim() {
            return Err(Error::Dimension(format!(
                "subspace of {} in a module of dimension {}",
                sub.ambient_dim(),
                ambient.dim()
            )));
        }
        if !ambient.is_invariant(&sub) {
            return Err(Error::NotInvariant);
        }
        Ok(Embedding { ambient, sub })
    }

    /// `A` spanned by the given vectors, which must already be closed under `T`.
    pub fn from_span(ambient: NilModule<S>, span: Vec<Vec<S>>) -> Result<Self> {
        if span.iter().any(|v| v.len() != ambient.dim()) {
            return Err(Error::Dimension("spanning vector of the wrong length".into()));
        }
        let sub = Subspace::span(ambient.dim(), span);
        Self::new(ambient, sub)
    }

    /// `A` generated as a submodule by `gens`.
    pub fn generated(ambient: NilModule<S>, gens: Vec<Vec<S>>) -> Self {
        let sub = ambient.closure(gens);
        Embedding { ambient, sub }
    }

    pub fn zero(ambient: NilModule<S>) -> Self {
        let sub = Subspace::zero(ambient.dim());
        Embedding { ambient, sub }
    }

    pub fn ambient(&self) -> &NilModule<S> {
        &self.ambient
    }

    pub fn sub(&self) -> &Subspace<S> {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    /// Type of `A`.
    pub fn sub_type(&self) -> Partition {
        self.ambient.restriction_type(&self.sub)
    }

    /// Type of `B`.
    pub fn ambient_type(&self) -> Partition {
        self.ambient.jordan_type()
    }

    /// Type of `B/A`.
    pub fn quotient_type(&self) -> Partition {
        self.ambient.quotient_type(&self.sub).expect("A is invariant")
    }

    /// `T^i A`.
    pub fn power_sub(&self, i: u32) -> Subspace<S> {
        self.ambient.power_of(&self.sub, i)
    }

    /// The chain of types of `B / T^i A`, `i = 0..=α_1`.
    pub fn tableau(&self) -> LrTableau {
        let s = self.sub_type().largest();
        let chain =
            (0..=s).map(|i| self.ambient.quotient_type(&self.power_sub(i)).expect("T^i A is invariant")).collect();
        LrTableau::from_chain(chain).expect("the tableau of an embedding is an LR-tableau")
    }

    /// Boxes with entry `l` in row `r >= 1`, by subspace dimensions.
    pub fn mu_entries(&self, l: u32, r: u32) -> usize {
        assert!(l >= 1 && r >= 1, "entries and rows start at 1");
        let a_prev = self.power_sub(l - 1);
        let a_next = self.power_sub(l);
        let layer = |k: u32| {
            let tb = self.ambient.power_image(k);
            a_prev.sum(&tb).dim() - a_next.sum(&tb).dim()
        };
        layer(r) - layer(r - 1)
    }

    /// `dim(A ∩ T^r B ∩ ker T^s)`.
    pub fn invariant_intersection_dim(&self, r: u32, s: u32) -> usize {
        self.sub.intersection(&self.ambient.power_image(r)).intersection(&self.ambient.kernel_power(s)).dim()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n1 = self.dim();
        let n = n1 + other.dim();
        let pad = |v: &Vec<S>, front: bool| {
            let mut out = vec![S::zero(); n];
            let off = if front { 0 } else { n1 };
            for (i, x) in v.iter().enumerate() {
                out[off + i] = x.clone();
            }
            out
        };
        let sub = Subspace::span(
            n,
            self.sub.basis().iter().map(|v| pad(v, true)).chain(other.sub.basis().iter().map(|v| pad(v, false))),
        );
        Embedding { ambient: self.ambient.direct_sum(&other.ambient), sub }
    }

    pub fn shift(&self, d: i64) -> Self {
        Embedding { ambient: self.ambient.shift(d), sub: self.sub.clone() }
    }

    pub fn forget_grading(&self) -> Self {
        Embedding { ambient: self.ambient.clone().forget_grading(), sub: self.sub.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit;
    use crate::{partition, F2};

    #[test]
    fn zero_subspace_gives_constant_chain() {
        let e = Embedding::<F2>::zero(NilModule::canonical(&partition![3, 1]));
        assert_eq!(e.tableau(), LrTableau::empty(partition![3, 1]));
        assert_eq!(e.mu_entries(1, 1), 0);
    }

    #[test]
    fn socle_of_one_block() {
        let b = NilModule::<F2>::canonical(&partition![3]);
        let e = Embedding::generated(b, vec![unit(3, 2)]);
        assert_eq!(e.sub_type(), partition![1]);
        assert_eq!(e.quotient_type(), partition![2]);
        assert_eq!(e.tableau().chain(), &[partition![2], partition![3]]);
        assert_eq!(e.mu_entries(1, 3), 1);
        assert_eq!(e.invariant_intersection_dim(2, 1), 1);
        assert_eq!(e.invariant_intersection_dim(0, 3), e.sub().dim());
    }

    #[test]
    fn rejects_non_invariant_span() {
        let b = NilModule::<F2>::canonical(&partition![2]);
        assert!(matches!(Embedding::from_span(b, vec![unit(2, 0)]), Err(Error::NotInvariant)));
    }
}
