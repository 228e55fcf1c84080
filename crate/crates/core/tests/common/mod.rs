#![allow(dead_code)]

use lrlab_core::{Column, LrTableau, Partition, Shape};

pub fn part(x: &[u32]) -> Partition {
    Partition::new(x.to_vec()).unwrap()
}

pub fn shape(a: &[u32], b: &[u32], g: &[u32]) -> Shape {
    Shape::new(part(a), part(b), part(g)).unwrap()
}

/// A horizontal-strip tableau from `(column length, entry)` pairs, entry 0 meaning empty.
pub fn strip(cols: &[(u32, u32)]) -> LrTableau {
    LrTableau::from_column_multiset(
        cols.iter().map(|&(l, e)| if e == 0 { Column::empty(l) } else { Column::new(l, l - 1, vec![e]) }).collect(),
    )
    .unwrap()
}

pub fn word(s: &Shape, w: &[u32]) -> LrTableau {
    LrTableau::from_word(s.clone(), w).unwrap()
}

pub fn horizontal_strips_up_to(n: u32) -> Vec<Shape> {
    (0..=n).flat_map(Shape::horizontal_strips).collect()
}

pub fn is_vertical_strip(b: &Partition, g: &Partition) -> bool {
    let (bt, gt) = (b.transpose(), g.transpose());
    (0..bt.len()).all(|i| bt.get(i) <= gt.get(i) + 1)
}

pub fn double_strips_up_to(n: u32) -> Vec<Shape> {
    (0..=n)
        .flat_map(|k| {
            Shape::all_with_beta_weight(k, |b, g| {
                (0..b.len()).all(|i| b.get(i) <= g.get(i) + 1) && is_vertical_strip(b, g)
            })
        })
        .collect()
}
