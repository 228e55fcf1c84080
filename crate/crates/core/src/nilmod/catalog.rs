use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::rref;
use crate::partition::Partition;
use crate::poles::Pole;
use crate::Rational;

use super::embedding::Embedding;
use super::graded::{empty_picket, monomial_embedding, realize_pole};
use super::hom::hom_dim;

#[derive(Clone, Debug)]
pub struct CatalogEntry<S> {
    pub name: String,
    pub object: Embedding<S>,
}

impl<S> CatalogEntry<S> {
    pub fn new(name: impl Into<String>, object: Embedding<S>) -> Self {
        CatalogEntry { name: name.into(), object }
    }
}

pub fn pole_name(layers: &[u32]) -> String {
    let l: Vec<String> = layers.iter().map(|x| x.to_string()).collect();
    format!("P({})", l.join(","))
}

/// The two-generator object in `N_(4,2)`: `A` generated by `T x + y` and `T y`.
/// Its tableau is checked against `[(2),(3,1),(3,2),(4,2)]`.
pub fn x_object<S: Scalar>() -> Result<Embedding<S>> {
    let beta = Partition::new(vec![4, 2])?;
    let e = monomial_embedding(&beta, &[&[(0, 1), (1, 0)], &[(1, 1)]]);
    let expected: Vec<Partition> =
        [vec![2], vec![3, 1], vec![3, 2], vec![4, 2]].into_iter().map(Partition::new).collect::<Result<_>>()?;
    if e.tableau().chain() != expected.as_slice() {
        return Err(Error::InvariantViolation(format!("X has tableau {:?}", e.tableau().chain())));
    }
    Ok(e)
}

/// Empty pickets `P^n_0` and minimal poles `P(S)`, `S ⊆ {0..h-1}` nonempty.
pub fn pole_catalog<S: Scalar>(height: u32) -> Vec<CatalogEntry<S>> {
    let mut out: Vec<CatalogEntry<S>> =
        (1..=height).map(|n| CatalogEntry::new(format!("P^{n}_0"), empty_picket(n))).collect();
    let mut sets: Vec<Vec<u32>> =
        (1u32..1 << height).map(|mask| (0..height).filter(|b| mask & (1 << b) != 0).collect()).collect();
    sets.sort_by(|a, b| a.last().cmp(&b.last()).then(a.cmp(b)));
    for layers in sets {
        let pole = Pole::minimal(layers.clone()).expect("nonempty increasing layers");
        out.push(CatalogEntry::new(pole_name(&layers), realize_pole(&pole).expect("minimal poles are realizable")));
    }
    out
}

/// The 20 indecomposables with `T^4 = 0`: 4 empty pickets, 15 poles and X.
pub fn s4_catalog<S: Scalar>() -> Vec<CatalogEntry<S>> {
    let mut out = pole_catalog(4);
    out.push(CatalogEntry::new("X", x_object().expect("X is well formed")));
    out
}

/// The catalog used for fingerprints of modules of the given height.
pub fn default_catalog<S: Scalar>(height: u32) -> Vec<CatalogEntry<S>> {
    if height <= 4 {
        s4_catalog()
    } else {
        let mut out = pole_catalog(height);
        out.push(CatalogEntry::new("X", x_object().expect("X is well formed")));
        out
    }
}

/// `fingerprint[i] = hom_dim(catalog[i], e)`.
pub fn iso_fingerprint<S: Scalar>(e: &Embedding<S>, catalog: &[CatalogEntry<S>]) -> Vec<usize> {
    catalog.iter().map(|c| hom_dim(&c.object, e)).collect()
}

/// `H[i][j] = hom_dim(catalog[i], catalog[j])`.
pub fn catalog_hom_matrix<S: Scalar>(catalog: &[CatalogEntry<S>]) -> Vec<Vec<usize>> {
    catalog.iter().map(|a| catalog.iter().map(|b| hom_dim(&a.object, &b.object)).collect()).collect()
}

/// Solves `H m = fingerprint(e)` over the rationals.
pub fn catalog_multiplicities<S: Scalar>(e: &Embedding<S>, catalog: &[CatalogEntry<S>]) -> Result<Vec<Rational>> {
    solve_multiplicities(&catalog_hom_matrix(catalog), &iso_fingerprint(e, catalog))
}

pub fn solve_multiplicities(h: &[Vec<usize>], f: &[usize]) -> Result<Vec<Rational>> {
    let n = h.len();
    let q = |x: usize| Rational::from_integer((x as u64).into());
    let mut rows: Vec<Vec<Rational>> =
        h.iter().zip(f).map(|(row, &fi)| row.iter().map(|&x| q(x)).chain([q(fi)]).collect()).collect();
    let pivots = rref(&mut rows);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Precondition("the catalog hom matrix is singular".into()));
    }
    Ok(rows.into_iter().map(|r| r[n].clone()).collect())
}
