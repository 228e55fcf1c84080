use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::Matrix;
use crate::partition::Partition;

use super::embedding::Embedding;
use super::module::NilModule;
use super::witness::WitnessSequence;

/// Wire form of an invariant subspace: `{"p", "beta", "T", "A_span", "grading"?}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub p: u32,
    pub beta: Partition,
    #[serde(rename = "T")]
    pub t: Vec<Vec<i64>>,
    #[serde(rename = "A_span")]
    pub a_span: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

pub fn matrix_residues<F: FiniteField>(m: &Matrix<F>) -> Vec<Vec<i64>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| x.residue() as i64).collect()).collect()
}

fn reduce<F: FiniteField>(v: &[i64]) -> Vec<F> {
    let p = F::ORDER as i64;
    v.iter().map(|&x| F::from_residue(x.rem_euclid(p) as u32)).collect()
}

impl EmbeddingJson {
    pub fn from_embedding<F: FiniteField>(e: &Embedding<F>) -> Self {
        EmbeddingJson {
            p: F::ORDER,
            beta: e.ambient_type(),
            t: matrix_residues(e.ambient().t()),
            a_span: e.sub().basis().iter().map(|v| v.iter().map(|x| x.residue() as i64).collect()).collect(),
            grading: e.ambient().grading().map(|g| g.to_vec()),
        }
    }

    pub fn into_embedding<F: FiniteField>(self) -> Result<Embedding<F>> {
        if self.p != F::ORDER {
            return Err(Error::FieldMismatch { expected: F::ORDER, found: self.p });
        }
        let n = self.beta.weight() as usize;
        if self.t.len() != n || self.t.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("T must be {n}x{n}")));
        }
        if let Some(v) = self.a_span.iter().find(|v| v.len() != n) {
            return Err(Error::Dimension(format!("span vector of length {} in dimension {n}", v.len())));
        }
        let t = Matrix::from_rows(self.t.iter().map(|r| reduce::<F>(r)).collect());
        let mut ambient = NilModule::new(t)?;
        if ambient.jordan_type() != self.beta {
            return Err(Error::Precondition(format!("T has Jordan type {}, not {}", ambient.jordan_type(), self.beta)));
        }
        if let Some(g) = self.grading {
            ambient = ambient.with_grading(g)?;
        }
        Embedding::from_span(ambient, self.a_span.iter().map(|v| reduce::<F>(v)).collect())
    }
}

impl<F: FiniteField> Serialize for Embedding<F> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        EmbeddingJson::from_embedding(self).serialize(s)
    }
}

impl<'de, F: FiniteField> Deserialize<'de> for Embedding<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        EmbeddingJson::deserialize(d)?.into_embedding().map_err(D::Error::custom)
    }
}

impl<F: FiniteField> Serialize for WitnessSequence<F> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Check<'a> {
            name: &'a str,
            passed: bool,
        }
        #[derive(Serialize)]
        #[serde(bound = "F: FiniteField")]
        struct Wire<'a, F> {
            #[serde(rename = "Xt")]
            xt: &'a Embedding<F>,
            #[serde(rename = "Y")]
            y: &'a Embedding<F>,
            #[serde(rename = "Zt")]
            zt: &'a Embedding<F>,
            iota: Vec<Vec<i64>>,
            pi: Vec<Vec<i64>>,
            checks: Vec<Check<'a>>,
            ok: bool,
        }
        Wire {
            xt: &self.xt,
            y: &self.y,
            zt: &self.zt,
            iota: matrix_residues(&self.iota),
            pi: matrix_residues(&self.pi),
            checks: self.report.checks.iter().map(|c| Check { name: c.name, passed: c.passed }).collect(),
            ok: self.report.ok(),
        }
        .serialize(s)
    }
}
