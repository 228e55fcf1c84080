//! Integer partitions, stored as weakly decreasing column lengths.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; any increase is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.get(0)
    }

    pub fn transpose(&self) -> Partition {
        let n = self.largest();
        Partition((1..=n).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Natural (dominance) order via partial sums of the transposes.
    pub fn natural_leq(&self, other: &Partition) -> bool {
        let (a, b) = (self.transpose(), other.transpose());
        let n = a.len().max(b.len());
        let (mut sa, mut sb) = (0, 0);
        for j in 0..n {
            sa += a.get(j);
            sb += b.get(j);
            if sa > sb {
                return false;
            }
        }
        true
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// The first `r` rows: every part capped at `r`.
    pub fn restrict(&self, r: u32) -> Partition {
        Partition::from_unsorted(self.0.iter().map(|&p| p.min(r)).collect())
    }

    /// Columnwise containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Comparison in the natural order; `None` when incomparable.
pub fn natural_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    match (a.natural_leq(b), b.natural_leq(a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::new(vec![$($x),+]).expect("invalid partition literal") };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(partition![3, 2].transpose(), partition![2, 2, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(partition![4, 3, 3, 2, 1].transpose(), partition![5, 4, 3, 1]);
    }

    #[test]
    fn natural_order_examples() {
        let p = partition![3, 3, 2, 1, 1];
        let q = partition![3, 2, 2, 2, 1];
        assert!(p.natural_leq(&q));
        assert!(p.natural_leq(&p));
        assert!(!q.natural_leq(&p));
    }

    #[test]
    fn union_examples() {
        assert_eq!(partition![3, 1].union(&partition![2]), partition![3, 2, 1]);
        assert_eq!(partition![3, 1].union(&Partition::empty()), partition![3, 1]);
        assert_eq!(partition![4, 3, 3].union(&partition![3, 1]), partition![4, 3, 3, 3, 1]);
    }

    #[test]
    fn restrict_examples() {
        let p = partition![4, 3, 1];
        assert_eq!(p.restrict(2), partition![2, 2, 1]);
        assert_eq!(p.restrict(0), Partition::empty());
        assert_eq!(p.restrict(p.largest()), p);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), partition![2, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn json_is_a_plain_array() {
        let p = partition![4, 3, 3, 2, 1];
        assert_eq!(serde_json::to_string(&p).unwrap(), "[4,3,3,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
