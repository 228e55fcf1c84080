//! Named objects for the three small LR shapes used throughout the tests.

use crate::error::Result;
use crate::field::Scalar;
use crate::partition::Partition;
use crate::poles::Pole;
use crate::tableau::Shape;

use super::catalog::x_object;
use super::embedding::Embedding;
use super::graded::{monomial_embedding, realize_pole, zero_embedding};
use super::hom::picket_embedding;

#[derive(Clone, Debug)]
pub struct NamedObject<S> {
    pub name: &'static str,
    pub object: Embedding<S>,
}

fn sum<S: Scalar>(parts: &[Embedding<S>]) -> Embedding<S> {
    parts.iter().fold(zero_embedding(), |acc, p| acc.direct_sum(p))
}

fn pole<S: Scalar>(layers: &[u32]) -> Embedding<S> {
    realize_pole(&Pole::minimal(layers.to_vec()).expect("valid layers")).expect("minimal poles are realizable")
}

fn p<S: Scalar>(n: u32, m: u32) -> Embedding<S> {
    picket_embedding(n, m)
}

fn shape(a: &[u32], b: &[u32], g: &[u32]) -> Shape {
    let part = |x: &[u32]| Partition::new(x.to_vec()).expect("valid partition");
    Shape::new(part(a), part(b), part(g)).expect("valid shape")
}

/// `((3,1),(4,3,1),(3,1))`: two objects.
pub fn gallery_small<S: Scalar>() -> (Shape, Vec<NamedObject<S>>) {
    let objects = vec![
        NamedObject { name: "M1", object: sum(&[p(4, 3), p(3, 0), p(1, 1)]) },
        NamedObject { name: "M2", object: sum(&[p(4, 1), p(3, 3), p(1, 0)]) },
    ];
    (shape(&[3, 1], &[4, 3, 1], &[3, 1]), objects)
}

/// `((3,1),(4,3,2,1),(3,2,1))`: five objects.
pub fn gallery_staircase<S: Scalar>() -> Result<(Shape, Vec<NamedObject<S>>)> {
    let objects = vec![
        NamedObject { name: "M1", object: sum(&[p(4, 3), p(3, 0), p(2, 0), p(1, 1)]) },
        NamedObject { name: "M12", object: sum(&[pole(&[0, 2, 3]), p(3, 0), p(2, 1)]) },
        NamedObject { name: "M2", object: sum(&[x_object()?, p(3, 0), p(1, 0)]) },
        NamedObject { name: "M23", object: sum(&[pole(&[0, 1, 3]), p(3, 1), p(1, 0)]) },
        NamedObject { name: "M3", object: sum(&[p(4, 1), p(3, 3), p(2, 0), p(1, 0)]) },
    ];
    Ok((shape(&[3, 1], &[4, 3, 2, 1], &[3, 2, 1]), objects))
}

/// `((4,2),(6,4,2),(4,2))`: five objects, two of them given by generators in `N_(6,4,2)`.
pub fn gallery_even<S: Scalar>() -> (Shape, Vec<NamedObject<S>>) {
    let beta = Partition::new(vec![6, 4, 2]).expect("valid partition");
    // block 0 = x (length 6), block 1 = z (length 4), block 2 = y (length 2)
    let m12 = monomial_embedding(&beta, &[&[(0, 2), (2, 0)], &[(2, 1), (1, 2)]]);
    let m23 = monomial_embedding(&beta, &[&[(1, 1), (0, 2), (2, 0)], &[(1, 2)]]);
    let objects = vec![
        NamedObject { name: "M1", object: sum(&[p(6, 4), p(4, 0), p(2, 2)]) },
        NamedObject { name: "M12", object: m12 },
        NamedObject { name: "M123", object: sum(&[pole(&[0, 1, 4, 5]), p(4, 2)]) },
        NamedObject { name: "M23", object: m23 },
        NamedObject { name: "M3", object: sum(&[p(6, 2), p(4, 4), p(2, 0)]) },
    ];
    (shape(&[4, 2], &[6, 4, 2], &[4, 2]), objects)
}
