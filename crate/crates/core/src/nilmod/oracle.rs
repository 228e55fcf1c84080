//! Brute-force census of invariant subspaces of a given LR shape.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Subspace;
use crate::tableau::{enumerate, LrTableau, Shape};

use super::catalog::{default_catalog, iso_fingerprint, CatalogEntry};
use super::embedding::Embedding;
use super::module::NilModule;

type ClassMap<F> = BTreeMap<Vec<usize>, (usize, Embedding<F>)>;

pub const DEFAULT_GUARD: u128 = 1 << 22;
const CHUNK: u128 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleOrder {
    Sequential,
    /// Visits tuple `(multiplier * i + offset) mod N`.
    Strided {
        multiplier: u128,
        offset: u128,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub guard: u128,
    pub order: TupleOrder,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { guard: DEFAULT_GUARD, order: TupleOrder::Sequential }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "F: FiniteField")]
pub struct ClassCensus<F> {
    pub fingerprint: Vec<usize>,
    pub submodules: usize,
    pub representative: Embedding<F>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "F: FiniteField")]
pub struct TableauCensus<F> {
    pub tableau: LrTableau,
    pub submodules: usize,
    pub classes: Vec<ClassCensus<F>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(bound = "F: FiniteField")]
pub struct Census<F> {
    pub shape: Shape,
    pub p: u32,
    pub tuples: u128,
    pub submodules: usize,
    pub catalog: Vec<String>,
    pub tableaux: Vec<TableauCensus<F>>,
    pub warnings: Vec<String>,
}

/// `p^(|β| · ℓ(α))`, or `None` on overflow.
pub fn tuple_count(shape: &Shape, p: u32) -> Option<u128> {
    let exp = shape.beta().weight().checked_mul(shape.alpha().len() as u32)?;
    (p as u128).checked_pow(exp)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn key<F: FiniteField>(s: &Subspace<F>) -> Vec<u8> {
    s.basis().iter().flat_map(|v| v.iter().map(|x| x.residue() as u8)).collect()
}

/// All invariant subspaces `A ⊆ N_β` of type `α` with cotype `γ`, found by
/// closing every `ℓ(α)`-tuple of vectors. Sorted by RREF key.
pub fn submodules_of_shape<F: FiniteField>(shape: &Shape, opts: &OracleOptions) -> Result<(u128, Vec<Subspace<F>>)> {
    let ambient = NilModule::<F>::canonical(shape.beta());
    let n = ambient.dim();
    let k = shape.alpha().len();
    let p = F::ORDER as u128;
    let count = tuple_count(shape, F::ORDER).unwrap_or(u128::MAX);
    if count > opts.guard {
        return Err(Error::GuardExceeded { count, limit: opts.guard });
    }
    let (mult, off) = match opts.order {
        TupleOrder::Sequential => (1, 0),
        TupleOrder::Strided { multiplier, offset } => {
            if gcd(multiplier % count, count) != 1 {
                return Err(Error::Precondition(format!("multiplier {multiplier} is not a unit mod {count}")));
            }
            (multiplier % count, offset % count)
        }
    };
    let target = shape.alpha().weight() as usize;
    let elements: Vec<F> = F::elements().collect();
    let chunks = count.div_ceil(CHUNK);
    let found: HashMap<Vec<u8>, Subspace<F>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = HashMap::new();
            for i in c * CHUNK..((c + 1) * CHUNK).min(count) {
                let mut idx = (mult * i + off) % count;
                let gens: Vec<Vec<F>> = (0..k)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let d = (idx % p) as usize;
                                idx /= p;
                                elements[d]
                            })
                            .collect()
                    })
                    .collect();
                let w = ambient.closure(gens);
                if w.dim() == target {
                    local.entry(key(&w)).or_insert(w);
                }
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    let sorted: BTreeMap<Vec<u8>, Subspace<F>> = found.into_iter().collect();
    let subs = sorted
        .into_values()
        .filter(|w| &ambient.restriction_type(w) == shape.alpha())
        .filter(|w| ambient.quotient_type(w).ok().as_ref() == Some(shape.gamma()))
        .collect();
    Ok((count, subs))
}

/// Census with fingerprints taken against the default catalog for `β_1`.
pub fn enumerate_submodules_oracle<F: FiniteField>(shape: &Shape, opts: &OracleOptions) -> Result<Census<F>> {
    census_with_catalog(shape, opts, &default_catalog(shape.beta().largest()))
}

pub fn census_with_catalog<F: FiniteField>(
    shape: &Shape,
    opts: &OracleOptions,
    catalog: &[CatalogEntry<F>],
) -> Result<Census<F>> {
    let (tuples, subs) = submodules_of_shape::<F>(shape, opts)?;
    let ambient = NilModule::<F>::canonical(shape.beta());
    let tableaux = enumerate(shape);
    let labelled: Vec<(usize, Vec<usize>, Embedding<F>)> = subs
        .into_par_iter()
        .map(|w| {
            let e = Embedding::new(ambient.clone(), w)?;
            let t = e.tableau();
            let pos = tableaux
                .iter()
                .position(|x| x == &t)
                .ok_or_else(|| Error::InvariantViolation(format!("submodule with unlisted tableau {t}")))?;
            Ok((pos, iso_fingerprint(&e, catalog), e))
        })
        .collect::<Result<_>>()?;
    let submodules = labelled.len();
    let mut per: Vec<ClassMap<F>> = vec![BTreeMap::new(); tableaux.len()];
    for (pos, fp, e) in labelled {
        per[pos].entry(fp).and_modify(|c| c.0 += 1).or_insert((1, e));
    }
    let mut owners: BTreeMap<&Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, m) in per.iter().enumerate() {
        for fp in m.keys() {
            owners.entry(fp).or_default().push(i);
        }
    }
    let mut warnings = Vec::new();
    for (fp, ts) in owners.iter().filter(|(_, ts)| ts.len() > 1) {
        let names: Vec<String> = ts.iter().map(|&i| tableaux[i].to_string()).collect();
        let msg = format!("fingerprint collision: {fp:?} occurs under tableaux {}", names.join(" and "));
        log::warn!("{msg}");
        warnings.push(msg);
    }
    let tableaux = tableaux
        .into_iter()
        .zip(per)
        .map(|(tableau, m)| {
            let classes: Vec<ClassCensus<F>> = m
                .into_iter()
                .map(|(fingerprint, (submodules, representative))| ClassCensus {
                    fingerprint,
                    submodules,
                    representative,
                })
                .collect();
            TableauCensus { tableau, submodules: classes.iter().map(|c| c.submodules).sum(), classes }
        })
        .collect();
    Ok(Census {
        shape: shape.clone(),
        p: F::ORDER,
        tuples,
        submodules,
        catalog: catalog.iter().map(|c| c.name.clone()).collect(),
        tableaux,
        warnings,
    })
}
