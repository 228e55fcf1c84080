//! Littlewood-Richardson tableaux of a shape (α, β, γ).
//!
//! Diagrams are drawn with one column per part of β; `row` counts from the
//! top, starting at 1. A tableau fills the cells of β outside γ.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct Shape {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
}

#[derive(Deserialize)]
struct RawShape {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
}

impl TryFrom<RawShape> for Shape {
    type Error = Error;
    fn try_from(r: RawShape) -> Result<Self> {
        Shape::new(r.alpha, r.beta, r.gamma)
    }
}

impl Shape {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Result<Self> {
        if beta.weight() != alpha.weight() + gamma.weight() {
            return Err(Error::InvalidShape(format!("|{beta}| != |{alpha}| + |{gamma}|")));
        }
        if !gamma.is_contained_in(&beta) {
            return Err(Error::InvalidShape(format!("{gamma} is not contained in {beta}")));
        }
        Ok(Shape { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    /// At most one box added per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.beta.len()).all(|i| self.beta.get(i) <= self.gamma.get(i) + 1)
    }

    /// At most one box added per row.
    pub fn is_vertical_strip(&self) -> bool {
        let (bt, gt) = (self.beta.transpose(), self.gamma.transpose());
        (0..bt.len()).all(|i| bt.get(i) <= gt.get(i) + 1)
    }

    /// Every shape with `|β| = n`, subject to a filter on (β, γ).
    pub fn all_with_beta_weight(n: u32, keep: impl Fn(&Partition, &Partition) -> bool) -> Vec<Shape> {
        let mut out = Vec::new();
        for beta in Partition::all_of(n) {
            for gamma in sub_partitions(&beta) {
                if !keep(&beta, &gamma) {
                    continue;
                }
                for alpha in Partition::all_of(n - gamma.weight()) {
                    out.push(Shape { alpha, beta: beta.clone(), gamma: gamma.clone() });
                }
            }
        }
        out
    }

    /// Shapes with `|β| = n` whose skew diagram is a horizontal strip.
    pub fn horizontal_strips(n: u32) -> Vec<Shape> {
        Self::all_with_beta_weight(n, |b, g| (0..b.len()).all(|i| b.get(i) <= g.get(i) + 1))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions contained columnwise in `beta`.
pub fn sub_partitions(beta: &Partition) -> Vec<Partition> {
    fn rec(beta: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == beta.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        for g in 0..=beta[i].min(max) {
            cur.push(g);
            rec(beta, i + 1, g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(beta.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// One column of the diagram: `base` cells of γ, then `entries` top-down.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Column {
    pub total: u32,
    pub base: u32,
    pub entries: Vec<u32>,
}

impl Column {
    pub fn new(total: u32, base: u32, entries: Vec<u32>) -> Self {
        Column { total, base, entries }
    }

    pub fn empty(total: u32) -> Self {
        Column { total, base: total, entries: Vec::new() }
    }

    /// Row of the `k`-th entry, counted from the top.
    pub fn row_of(&self, k: usize) -> u32 {
        self.base + k as u32 + 1
    }

    /// Entry in `row`, if that cell belongs to the skew part.
    pub fn at_row(&self, row: u32) -> Option<u32> {
        (row > self.base && row <= self.total).then(|| self.entries[(row - self.base - 1) as usize])
    }

    fn sort_key(&self) -> (Reverse<u32>, Reverse<u32>, &[u32]) {
        (Reverse(self.total), Reverse(self.base), &self.entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    Structure(String),
    Content { value: u32, expected: u32, found: u32 },
    RowWeak { row: u32, column: usize },
    ColumnStrict { column: usize, row: u32 },
    Lattice { column: usize, value: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(s) => write!(f, "structure: {s}"),
            Violation::Content { value, expected, found } => {
                write!(f, "content: entry {value} occurs {found} times, expected {expected}")
            }
            Violation::RowWeak { row, column } => {
                write!(f, "row-weak: row {row} decreases entering column {column}")
            }
            Violation::ColumnStrict { column, row } => {
                write!(f, "column-strict: column {column} does not increase below row {row}")
            }
            Violation::Lattice { column, value } => {
                write!(f, "lattice: from column {column} on, more entries {value} than {}", value - 1)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// Checks the LR conditions on index-aligned columns. Columns are numbered from 1 in reports.
pub fn validate(shape: &Shape, columns: &[Column]) -> ValidationReport {
    let mut violations = Vec::new();
    let beta = shape.beta();
    let gamma = shape.gamma();
    if columns.len() != beta.len() {
        violations.push(Violation::Structure(format!("{} columns for β = {beta}", columns.len())));
        return ValidationReport { violations };
    }
    for (j, c) in columns.iter().enumerate() {
        if c.total != beta.get(j) || c.base != gamma.get(j) || c.entries.len() as u32 + c.base != c.total {
            violations.push(Violation::Structure(format!("column {} does not match the shape", j + 1)));
        }
        if c.entries.contains(&0) {
            violations.push(Violation::Structure(format!("column {} has a zero entry", j + 1)));
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }

    let alpha_t = shape.alpha().transpose();
    let s = columns.iter().flat_map(|c| c.entries.iter().copied()).max().unwrap_or(0).max(alpha_t.len() as u32);
    let mut counts = vec![0u32; s as usize + 1];
    for c in columns {
        for &e in &c.entries {
            counts[e as usize] += 1;
        }
    }
    for v in 1..=s {
        let expected = alpha_t.get(v as usize - 1);
        if counts[v as usize] != expected {
            violations.push(Violation::Content { value: v, expected, found: counts[v as usize] });
        }
    }

    for (j, c) in columns.iter().enumerate() {
        for w in c.entries.windows(2).enumerate() {
            let (k, pair) = w;
            if pair[0] >= pair[1] {
                violations.push(Violation::ColumnStrict { column: j + 1, row: c.row_of(k) });
            }
        }
        if j > 0 {
            let left = &columns[j - 1];
            for (k, &e) in c.entries.iter().enumerate() {
                let row = c.row_of(k);
                if let Some(l) = left.at_row(row) {
                    if l > e {
                        violations.push(Violation::RowWeak { row, column: j + 1 });
                    }
                }
            }
        }
    }

    // suffix counts over columns c, c+1, ...
    let mut suffix = vec![0u32; s as usize + 1];
    for (j, c) in columns.iter().enumerate().rev() {
        for &e in &c.entries {
            suffix[e as usize] += 1;
        }
        for v in 2..=s {
            if suffix[v as usize - 1] < suffix[v as usize] {
                violations.push(Violation::Lattice { column: j + 1, value: v });
            }
        }
    }
    ValidationReport { violations }
}

/// An LR-tableau. Columns are authoritative; the chain is derived.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LrTableau {
    shape: Shape,
    columns: Vec<Column>,
    chain: Vec<Partition>,
}

impl LrTableau {
    /// Index-aligned columns for the given shape.
    pub fn from_columns(shape: Shape, columns: Vec<Column>) -> Result<Self> {
        let report = validate(&shape, &columns);
        if !report.ok() {
            return Err(Error::InvalidTableau(report.to_string()));
        }
        let chain = derive_chain(&shape, &columns)?;
        Ok(LrTableau { shape, columns, chain })
    }

    /// Sorts an arbitrary collection of columns canonically and reads the shape off them.
    pub fn from_column_multiset(mut columns: Vec<Column>) -> Result<Self> {
        columns.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let beta = Partition::new(columns.iter().map(|c| c.total).collect())?;
        let gamma = Partition::new(columns.iter().map(|c| c.base).collect())
            .map_err(|_| Error::InvalidTableau("column bases do not form a partition".into()))?;
        let s = columns.iter().flat_map(|c| c.entries.iter().copied()).max().unwrap_or(0);
        let mut alpha_t = vec![0u32; s as usize];
        for c in &columns {
            for &e in &c.entries {
                if e == 0 {
                    return Err(Error::InvalidTableau("zero entry".into()));
                }
                alpha_t[e as usize - 1] += 1;
            }
        }
        let alpha_t = Partition::new(alpha_t)
            .map_err(|_| Error::InvalidTableau("entry counts are not weakly decreasing".into()))?;
        let shape = Shape::new(alpha_t.transpose(), beta, gamma)?;
        Self::from_columns(shape, columns)
    }

    pub fn empty(beta: Partition) -> Self {
        let columns = beta.parts().iter().map(|&t| Column::empty(t)).collect();
        let shape = Shape { alpha: Partition::empty(), beta: beta.clone(), gamma: beta.clone() };
        LrTableau { shape, columns, chain: vec![beta] }
    }

    /// Builds the tableau from `[γ^(0), …, γ^(s)]`. Trailing repetitions are dropped.
    pub fn from_chain(mut chain: Vec<Partition>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidTableau("empty chain".into()));
        }
        while chain.len() > 1 && chain[chain.len() - 1] == chain[chain.len() - 2] {
            chain.pop();
        }
        for w in chain.windows(2) {
            if !w[0].is_contained_in(&w[1]) || w[0] == w[1] {
                return Err(Error::InvalidTableau(format!("{} does not strictly grow to {}", w[0], w[1])));
            }
        }
        let gamma = chain[0].clone();
        let beta = chain[chain.len() - 1].clone();
        let alpha_t: Vec<u32> = chain.windows(2).map(|w| w[1].weight() - w[0].weight()).collect();
        let alpha_t = Partition::new(alpha_t)
            .map_err(|_| Error::InvalidTableau("chain step sizes are not weakly decreasing".into()))?;
        let shape = Shape::new(alpha_t.transpose(), beta.clone(), gamma.clone())?;
        let columns = (0..beta.len())
            .map(|j| {
                let mut entries = Vec::new();
                for (i, w) in chain.windows(2).enumerate() {
                    for _ in w[0].get(j)..w[1].get(j) {
                        entries.push(i as u32 + 1);
                    }
                }
                Column::new(beta.get(j), gamma.get(j), entries)
            })
            .collect();
        Self::from_columns(shape, columns)
    }

    /// Places a reading word into the skew cells (columns left to right, each bottom-up).
    pub fn from_word(shape: Shape, word: &[u32]) -> Result<Self> {
        if word.len() as u32 != shape.alpha().weight() {
            return Err(Error::InvalidTableau(format!(
                "word of length {} for {} skew cells",
                word.len(),
                shape.alpha().weight()
            )));
        }
        let mut rest = word;
        let mut columns = Vec::with_capacity(shape.beta().len());
        for j in 0..shape.beta().len() {
            let (total, base) = (shape.beta().get(j), shape.gamma().get(j));
            let (mine, tail) = rest.split_at((total - base) as usize);
            rest = tail;
            columns.push(Column::new(total, base, mine.iter().rev().copied().collect()));
        }
        Self::from_columns(shape, columns)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn to_chain(&self) -> Vec<Partition> {
        self.chain.clone()
    }

    /// `γ^(i)`, constant past the end.
    pub fn chain_at(&self, i: usize) -> &Partition {
        &self.chain[i.min(self.chain.len() - 1)]
    }

    /// Largest entry, `s = α_1`.
    pub fn max_entry(&self) -> u32 {
        self.shape.alpha().largest()
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.columns.iter().flat_map(|c| c.entries.iter().rev().copied()).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.shape, &self.columns)
    }

    pub fn is_horizontal_strip(&self) -> bool {
        self.shape.is_horizontal_strip()
    }

    /// Number of entries `value` in `row`.
    pub fn entries_in_row(&self, value: u32, row: u32) -> usize {
        self.columns.iter().filter(|c| c.at_row(row) == Some(value)).count()
    }

    pub fn dominance_leq(&self, other: &LrTableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(self.chain.iter().zip(&other.chain).all(|(a, b)| a.natural_leq(b)))
    }

    /// Text picture: `.` for cells of γ, digits for entries, one line per row.
    pub fn render(&self) -> String {
        let height = self.shape.beta().largest();
        let mut out = String::new();
        for row in 1..=height {
            let line: Vec<String> = self
                .columns
                .iter()
                .filter(|c| c.total >= row)
                .map(|c| match c.at_row(row) {
                    Some(e) => e.to_string(),
                    None => ".".to_string(),
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn derive_chain(shape: &Shape, columns: &[Column]) -> Result<Vec<Partition>> {
    let s = shape.alpha().largest();
    (0..=s)
        .map(|i| {
            let parts = columns.iter().map(|c| c.base + c.entries.iter().filter(|&&e| e <= i).count() as u32).collect();
            Partition::new(parts).map_err(|e| Error::InvalidTableau(format!("chain step {i}: {e}")))
        })
        .collect()
}

impl fmt::Display for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.reading_word().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", w.join(","))
    }
}

impl fmt::Debug for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LrTableau{} {:?}", self.shape, self.chain)
    }
}

/// All LR-tableaux of `shape`, in lexicographic order of reading words.
pub fn enumerate(shape: &Shape) -> Vec<LrTableau> {
    let alpha_t: Vec<u32> = shape.alpha().transpose().parts().to_vec();
    let beta = shape.beta();
    let gamma = shape.gamma();
    let ncols = beta.len();
    let mut grid: Vec<Vec<u32>> = (0..ncols).map(|j| vec![0; (beta.get(j) - gamma.get(j)) as usize]).collect();
    // cells in reading order: (column, offset within the column's entries)
    let mut cells = Vec::new();
    for (j, col) in grid.iter().enumerate() {
        for k in (0..col.len()).rev() {
            cells.push((j, k));
        }
    }
    let mut st = Search {
        alpha_t: &alpha_t,
        beta,
        gamma,
        cells: &cells,
        grid: &mut grid,
        counts: vec![0; alpha_t.len() + 1],
        out: Vec::new(),
    };
    st.fill(0);
    let words = st.out;
    words
        .into_iter()
        .map(|w| LrTableau::from_word(shape.clone(), &w).expect("search only yields valid fillings"))
        .collect()
}

struct Search<'a> {
    alpha_t: &'a [u32],
    beta: &'a Partition,
    gamma: &'a Partition,
    cells: &'a [(usize, usize)],
    grid: &'a mut Vec<Vec<u32>>,
    counts: Vec<u32>,
    out: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn lattice_prefix_ok(&self) -> bool {
        (2..=self.alpha_t.len())
            .all(|l| self.alpha_t[l - 2] - self.counts[l - 1] >= self.alpha_t[l - 1] - self.counts[l])
    }

    fn fill(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.out.push(self.cells.iter().map(|&(j, k)| self.grid[j][k]).collect());
            return;
        }
        let (j, k) = self.cells[idx];
        let new_column = idx == 0 || self.cells[idx - 1].0 != j;
        if new_column && !self.lattice_prefix_ok() {
            return;
        }
        let row = self.gamma.get(j) + k as u32 + 1;
        let below = self.grid[j].get(k + 1).copied();
        let left = if j > 0 && row > self.gamma.get(j - 1) && row <= self.beta.get(j - 1) {
            Some(self.grid[j - 1][(row - self.gamma.get(j - 1) - 1) as usize])
        } else {
            None
        };
        let lo = left.unwrap_or(1).max(1);
        let hi = below.map_or(self.alpha_t.len() as u32, |b| (b - 1).min(self.alpha_t.len() as u32));
        for v in lo..=hi {
            if self.counts[v as usize] >= self.alpha_t[v as usize - 1] {
                continue;
            }
            self.grid[j][k] = v;
            self.counts[v as usize] += 1;
            self.fill(idx + 1);
            self.counts[v as usize] -= 1;
        }
        self.grid[j][k] = 0;
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<Partition>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<Vec<u32>>,
}

impl Serialize for LrTableau {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        TableauJson {
            alpha: self.shape.alpha.clone(),
            beta: self.shape.beta.clone(),
            gamma: self.shape.gamma.clone(),
            chain: Some(self.chain.clone()),
            word: Some(self.reading_word()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LrTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        LrTableau::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<TableauJson> for LrTableau {
    type Error = Error;
    fn try_from(raw: TableauJson) -> Result<Self> {
        let shape = Shape::new(raw.alpha, raw.beta, raw.gamma)?;
        let t = if let Some(chain) = raw.chain {
            LrTableau::from_chain(chain)?
        } else if let Some(word) = raw.word {
            LrTableau::from_word(shape.clone(), &word)?
        } else {
            let mut all = enumerate(&shape);
            if all.len() != 1 {
                return Err(Error::InvalidTableau(format!(
                    "shape {shape} has {} tableaux; give a chain or a word",
                    all.len()
                )));
            }
            all.pop().expect("one tableau")
        };
        if t.shape != shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn shape(a: Partition, b: Partition, g: Partition) -> Shape {
        Shape::new(a, b, g).unwrap()
    }

    fn running() -> Shape {
        shape(partition![3, 2], partition![4, 3, 3, 2, 1], partition![3, 2, 2, 1])
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(&running()).len(), 2);
        assert_eq!(enumerate(&shape(partition![3, 1], partition![4, 3, 2, 1], partition![3, 2, 1])).len(), 3);
        assert_eq!(enumerate(&shape(partition![4, 2], partition![6, 4, 2], partition![4, 2])).len(), 3);
        assert_eq!(enumerate(&shape(partition![3, 1], partition![4, 3, 1], partition![3, 1])).len(), 2);
        let b = partition![3, 1];
        let e = enumerate(&shape(Partition::empty(), b.clone(), b.clone()));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].chain(), &[b]);
    }

    #[test]
    fn running_example_chains() {
        let all = enumerate(&running());
        let chains: Vec<Vec<Partition>> = all.iter().map(|t| t.to_chain()).collect();
        let first = vec![
            partition![3, 2, 2, 1],
            partition![3, 3, 2, 1, 1],
            partition![4, 3, 2, 2, 1],
            partition![4, 3, 3, 2, 1],
        ];
        let second = vec![
            partition![3, 2, 2, 1],
            partition![3, 2, 2, 2, 1],
            partition![3, 3, 3, 2, 1],
            partition![4, 3, 3, 2, 1],
        ];
        assert!(chains.contains(&first));
        assert!(chains.contains(&second));
        let t1 = LrTableau::from_chain(first).unwrap();
        let t2 = LrTableau::from_chain(second).unwrap();
        assert!(t1.dominance_leq(&t2).unwrap());
        assert!(!t2.dominance_leq(&t1).unwrap());
        assert!(t1.dominance_leq(&t1).unwrap());
    }

    #[test]
    fn column_strict_violation_is_reported() {
        let s = shape(partition![1, 1], partition![2], Partition::empty());
        let bad = vec![Column::new(2, 0, vec![1, 1])];
        let r = validate(&s, &bad);
        assert_eq!(r.violations, vec![Violation::ColumnStrict { column: 1, row: 1 }]);
        assert!(enumerate(&s).is_empty());
    }

    #[test]
    fn empty_region_is_valid() {
        let t = LrTableau::empty(partition![4, 2]);
        assert!(t.validate().ok());
        assert!(t.reading_word().is_empty());
    }

    #[test]
    fn strips() {
        let r = running();
        assert!(r.is_horizontal_strip());
        assert!(!r.is_vertical_strip());
        let alg = shape(partition![3, 2, 1], partition![6, 5, 4, 3, 2, 1], partition![5, 4, 3, 2, 1]);
        assert!(alg.is_horizontal_strip() && alg.is_vertical_strip());
        let b = partition![2, 2];
        let flat = shape(Partition::empty(), b.clone(), b);
        assert!(flat.is_horizontal_strip() && flat.is_vertical_strip());
    }

    #[test]
    fn words_round_trip() {
        let alg = shape(partition![3, 2, 1], partition![6, 5, 4, 3, 2, 1], partition![5, 4, 3, 2, 1]);
        for w in [[1, 3, 2, 2, 1, 1], [2, 3, 2, 1, 1, 1]] {
            let t = LrTableau::from_word(alg.clone(), &w).unwrap();
            assert_eq!(t.reading_word(), w);
        }
        assert!(LrTableau::from_word(alg.clone(), &[1, 1, 1, 2, 2, 3]).is_err());
        assert!(LrTableau::from_word(alg, &[1, 1]).is_err());
    }

    #[test]
    fn lattice_is_checked_on_column_suffixes() {
        let s = shape(partition![2], partition![2, 2], partition![1, 1]);
        let cols = vec![Column::new(2, 1, vec![1]), Column::new(2, 1, vec![2])];
        let r = validate(&s, &cols);
        assert_eq!(r.violations, vec![Violation::Lattice { column: 2, value: 2 }]);
        assert!(enumerate(&s).is_empty());
        let s = shape(partition![2], partition![2, 1], partition![1]);
        assert_eq!(enumerate(&s)[0].reading_word(), vec![2, 1]);
    }

    #[test]
    fn json_round_trip() {
        for t in enumerate(&running()) {
            let js = serde_json::to_string(&t).unwrap();
            let back: LrTableau = serde_json::from_str(&js).unwrap();
            assert_eq!(back, t);
        }
        let only_shape = r#"{"alpha":[3,1],"beta":[4,3,1],"gamma":[3,1]}"#;
        assert!(serde_json::from_str::<LrTableau>(only_shape).is_err());
    }
}
