//! Pickets, poles and extended poles, their tableaux, and the splitting of
//! horizontal-strip tableaux into pole tableaux.

use serde::{Deserialize, Serialize};

use crate::boxmove::{apply_move, find_box_move, BoxMove};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{Column, LrTableau};

/// `P^n_m`: a subspace of dimension `m` in one Jordan block of size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Picket {
    pub n: u32,
    pub m: u32,
}

impl Picket {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m > n {
            return Err(Error::Precondition(format!("no picket P^{n}_{m}")));
        }
        Ok(Picket { n, m })
    }

    pub fn tableau(&self) -> LrTableau {
        picket_tableau(self)
    }
}

/// Cyclic subspace with generator in radical layers `x_1 < … < x_k`, inside `N_ambient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPole")]
pub struct Pole {
    layers: Vec<u32>,
    ambient: Partition,
}

#[derive(Deserialize)]
struct RawPole {
    layers: Vec<u32>,
    ambient: Option<Partition>,
}

impl TryFrom<RawPole> for Pole {
    type Error = Error;
    fn try_from(r: RawPole) -> Result<Self> {
        match r.ambient {
            Some(a) => Pole::new(r.layers, a),
            None => Pole::minimal(r.layers),
        }
    }
}

impl Pole {
    pub fn new(layers: Vec<u32>, ambient: Partition) -> Result<Self> {
        if layers.is_empty() || layers.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(format!("layers {layers:?} must be nonempty and strictly increasing")));
        }
        let top = layers[layers.len() - 1] + 1;
        if ambient.largest() < top {
            return Err(Error::AmbientTooSmall { ambient: ambient.parts().to_vec(), row: top });
        }
        Ok(Pole { layers, ambient })
    }

    /// The pole on the smallest ambient module.
    pub fn minimal(layers: Vec<u32>) -> Result<Self> {
        let blocks = minimal_blocks(&layers);
        let ambient = Partition::from_unsorted(blocks.iter().map(|b| b.0).collect());
        Pole::new(layers, ambient)
    }

    pub fn layers(&self) -> &[u32] {
        &self.layers
    }

    pub fn ambient(&self) -> &Partition {
        &self.ambient
    }

    pub fn tableau(&self) -> Result<LrTableau> {
        pole_tableau(self)
    }
}

/// Blocks `(length, shift)` of the minimal pole: the generator is `Σ T^shift g^length`.
/// Layers forming a run of consecutive integers share one block.
pub fn minimal_blocks(layers: &[u32]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut i0 = 0;
    while i0 < layers.len() {
        let d = layers[i0] - i0 as u32;
        let mut i1 = i0 + 1;
        while i1 < layers.len() && layers[i1] - i1 as u32 == d {
            i1 += 1;
        }
        out.push((layers[i1 - 1] + 1, d));
        i0 = i1;
    }
    out.reverse();
    out
}

/// A pole plus empty pickets, or only empty pickets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtendedPole {
    pub pole: Option<Pole>,
    pub empty_pickets: Vec<u32>,
}

impl ExtendedPole {
    pub fn tableau(&self) -> Result<LrTableau> {
        let mut t = match &self.pole {
            Some(p) => pole_tableau(p)?,
            None => LrTableau::empty(Partition::empty()),
        };
        for &n in &self.empty_pickets {
            t = tableau_union(&t, &LrTableau::empty(Partition::new(vec![n])?));
        }
        Ok(t)
    }
}

pub fn picket_tableau(p: &Picket) -> LrTableau {
    let column = Column::new(p.n, p.n - p.m, (1..=p.m).collect());
    LrTableau::from_column_multiset(vec![column]).expect("a picket column is a valid tableau")
}

/// Entry `i` sits in row `x_i + 1`.
pub fn pole_tableau(p: &Pole) -> Result<LrTableau> {
    let beta_t = p.ambient.transpose();
    let k = p.layers.len();
    let mut chain = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut cols: Vec<u32> = beta_t.parts().to_vec();
        for &x in &p.layers[i..] {
            let r = x as usize;
            if r >= cols.len() || cols[r] == 0 {
                return Err(Error::AmbientTooSmall { ambient: p.ambient.parts().to_vec(), row: x + 1 });
            }
            cols[r] -= 1;
        }
        let t = Partition::new(cols)
            .map_err(|_| Error::Precondition(format!("layers {:?} do not fit the ambient {}", p.layers, p.ambient)))?;
        chain.push(t.transpose());
    }
    let t = LrTableau::from_chain(chain)?;
    if t.shape().beta() != &p.ambient {
        return Err(Error::Precondition(format!("layers {:?} do not fit the ambient {}", p.layers, p.ambient)));
    }
    Ok(t)
}

/// Chainwise union; the shorter chain is padded with its last partition.
pub fn tableau_union(a: &LrTableau, b: &LrTableau) -> LrTableau {
    let s = a.chain().len().max(b.chain().len());
    let chain = (0..s).map(|i| a.chain_at(i).union(b.chain_at(i))).collect();
    LrTableau::from_chain(chain).expect("the union of LR-tableaux is an LR-tableau")
}

pub fn tableau_union_all<'a>(parts: impl IntoIterator<Item = &'a LrTableau>) -> LrTableau {
    parts.into_iter().fold(LrTableau::empty(Partition::empty()), |acc, t| tableau_union(&acc, t))
}

type Slot = (u32, Option<u32>);

fn slots(t: &LrTableau) -> Vec<Slot> {
    t.columns().iter().map(|c| (c.total, c.entries.first().copied())).collect()
}

fn from_slots(slots: &[Slot]) -> Result<LrTableau> {
    let cols = slots
        .iter()
        .map(|&(len, e)| match e {
            Some(e) => Column::new(len, len - 1, vec![e]),
            None => Column::empty(len),
        })
        .collect();
    LrTableau::from_column_multiset(cols)
}

/// Greedy scan: first column with the largest entry, then the first column
/// to the right holding each smaller entry in turn.
fn greedy_scan(slots: &[Slot]) -> Result<Vec<usize>> {
    let top =
        slots.iter().filter_map(|s| s.1).max().ok_or_else(|| Error::Precondition("tableau has no entries".into()))?;
    let mut sel = vec![slots.iter().position(|s| s.1 == Some(top)).expect("max exists")];
    for i in (1..top).rev() {
        let last = *sel.last().expect("nonempty");
        let next = (last + 1..slots.len())
            .find(|&q| slots[q].1 == Some(i))
            .ok_or_else(|| Error::InvariantViolation(format!("no entry {i} right of column {}", last + 1)))?;
        sel.push(next);
    }
    Ok(sel)
}

/// Splits off one pole tableau; the remaining columns form the second tableau.
pub fn split_off_pole(t: &LrTableau) -> Result<(LrTableau, LrTableau)> {
    if !t.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip("split_off_pole"));
    }
    let all = slots(t);
    let sel = greedy_scan(&all)?;
    let taken: Vec<Slot> = sel.iter().map(|&i| all[i]).collect();
    let rest: Vec<Slot> = (0..all.len()).filter(|i| !sel.contains(i)).map(|i| all[i]).collect();
    let (ext, rest) = (from_slots(&taken)?, from_slots(&rest)?);
    if &tableau_union(&ext, &rest) != t {
        return Err(Error::InvariantViolation(format!("split of {t} does not reassemble")));
    }
    Ok((ext, rest))
}

/// Reads the pole off a tableau with one entry per column and entries 1..k.
pub fn pole_from_tableau(t: &LrTableau) -> Result<Pole> {
    let k = t.max_entry() as usize;
    let mut rows = vec![0u32; k];
    if !t.is_horizontal_strip() || t.columns().len() != k {
        return Err(Error::Precondition(format!("{t} is not the tableau of a pole")));
    }
    for c in t.columns() {
        match c.entries.as_slice() {
            [e] if rows[*e as usize - 1] == 0 => rows[*e as usize - 1] = c.total,
            _ => return Err(Error::Precondition(format!("{t} is not the tableau of a pole"))),
        }
    }
    Pole::new(rows.iter().map(|r| r - 1).collect(), t.shape().beta().clone())
}

/// Poles and empty pickets whose tableaux unite to `t`.
pub fn pole_decomposition(t: &LrTableau) -> Result<Vec<ExtendedPole>> {
    if !t.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip("pole_decomposition"));
    }
    let mut out = Vec::new();
    let mut cur = t.clone();
    while cur.max_entry() > 0 {
        let (ext, rest) = split_off_pole(&cur)?;
        out.push(ExtendedPole { pole: Some(pole_from_tableau(&ext)?), empty_pickets: Vec::new() });
        cur = rest;
    }
    for c in cur.columns() {
        out.push(ExtendedPole { pole: None, empty_pickets: vec![c.total] });
    }
    Ok(out)
}

/// The five tableaux attached to a box move: `u_pole` (Γ′) holds the column
/// with `u`, `v_pole` (Γ″) the one with `v`, `common` (Γ‴) is untouched, and
/// the `_moved` parts (Γ̃′, Γ̃″) are their images after the move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolePartition {
    pub mv: BoxMove,
    pub u_pole: LrTableau,
    pub v_pole: LrTableau,
    pub common: LrTableau,
    pub u_pole_moved: LrTableau,
    pub v_pole_moved: LrTableau,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tag {
    Plain,
    U,
    MovedV,
}

pub fn box_move_pole_partition(g: &LrTableau, gt: &LrTableau, mv: &BoxMove) -> Result<PolePartition> {
    if g.shape() != gt.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !g.is_horizontal_strip() {
        return Err(Error::NotHorizontalStrip("box_move_pole_partition"));
    }
    if &apply_move(g, mv)? != gt {
        return Err(Error::Precondition(format!("{mv} does not turn {g} into {gt}")));
    }
    let BoxMove { u, v, r, s, .. } = *mv;

    // Γ with the column (s, v) lengthened to (r, v), re-sorted
    let mut hat = slots(g);
    hat[mv.column_v] = (r, Some(v));
    hat.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| entry_key(a.1).cmp(&entry_key(b.1))));
    let mut cols: Vec<(Slot, Tag)> = hat.into_iter().map(|x| (x, Tag::Plain)).collect();
    let iu = cols.iter().position(|c| c.0 == (r, Some(u))).expect("column of u");
    cols[iu].1 = Tag::U;
    let iv = cols.iter().position(|c| c.0 == (r, Some(v))).expect("column of v");
    cols[iv].1 = Tag::MovedV;

    let mut common: Vec<Slot> = Vec::new();
    let mut u_part: Option<Vec<(Slot, Tag)>> = None;
    let mut v_part: Option<Vec<(Slot, Tag)>> = None;
    while let Some(top) = cols.iter().filter_map(|c| c.0 .1).max() {
        let mut sel = vec![cols.iter().position(|c| c.0 .1 == Some(top)).expect("max exists")];
        for i in (1..top).rev() {
            let last = *sel.last().expect("nonempty");
            let jump = cols[last].1 != Tag::Plain || sel.iter().any(|&p| cols[p].1 != Tag::Plain);
            let next = if jump {
                (last + 1..cols.len()).find(|&q| cols[q].0 .1 == Some(i) && cols[q].0 .0 < s)
            } else {
                (last + 1..cols.len()).find(|&q| cols[q].0 .1 == Some(i))
            };
            let next = next.ok_or_else(|| Error::InvariantViolation(format!("scan for entry {i} failed")))?;
            sel.push(next);
        }
        let picked: Vec<(Slot, Tag)> = sel.iter().map(|&p| cols[p]).collect();
        let has = |tag| picked.iter().any(|c| c.1 == tag);
        match (has(Tag::U), has(Tag::MovedV)) {
            (true, true) => return Err(Error::InvariantViolation("one pole holds both moved columns".into())),
            (true, false) => u_part = Some(picked),
            (false, true) => v_part = Some(picked),
            (false, false) => common.extend(picked.iter().map(|c| c.0)),
        }
        sel.sort_unstable();
        for p in sel.into_iter().rev() {
            cols.remove(p);
        }
    }
    common.extend(cols.iter().map(|c| c.0));

    let u_part = u_part.ok_or_else(|| Error::InvariantViolation("no pole holds the column of u".into()))?;
    let v_part = v_part.ok_or_else(|| Error::InvariantViolation("no pole holds the column of v".into()))?;
    let plain = |part: &[(Slot, Tag)]| part.iter().map(|c| c.0).collect::<Vec<_>>();
    let relabel = |part: &[(Slot, Tag)], tag: Tag, to: Slot| {
        part.iter().map(|c| if c.1 == tag { to } else { c.0 }).collect::<Vec<_>>()
    };
    let out = PolePartition {
        mv: *mv,
        u_pole: from_slots(&plain(&u_part))?,
        u_pole_moved: from_slots(&relabel(&u_part, Tag::U, (s, Some(u))))?,
        v_pole_moved: from_slots(&plain(&v_part))?,
        v_pole: from_slots(&relabel(&v_part, Tag::MovedV, (s, Some(v))))?,
        common: from_slots(&common)?,
    };
    check_pole_partition(g, gt, &out)?;
    Ok(out)
}

fn entry_key(e: Option<u32>) -> u32 {
    e.unwrap_or(0)
}

fn is_pole_tableau(t: &LrTableau) -> bool {
    pole_from_tableau(t).is_ok()
}

/// Slots of `a` not in `b`, as a sorted list.
fn slot_difference(a: &LrTableau, b: &LrTableau) -> Vec<Slot> {
    let mut rest = slots(b);
    let mut out = Vec::new();
    for x in slots(a) {
        match rest.iter().position(|y| *y == x) {
            Some(p) => {
                rest.swap_remove(p);
            }
            None => out.push(x),
        }
    }
    out
}

fn check_one_column(before: &LrTableau, after: &LrTableau, from: Slot, to: Slot, r: u32, s: u32) -> bool {
    let between = |t: &LrTableau| t.columns().iter().any(|c| c.total > s && c.total < r);
    slot_difference(before, after) == [from]
        && slot_difference(after, before) == [to]
        && !between(before)
        && !between(after)
}

/// Properties (1) to (5) plus the reassembly of both tableaux.
pub fn check_pole_partition(g: &LrTableau, gt: &LrTableau, p: &PolePartition) -> Result<()> {
    let BoxMove { u, v, r, s, .. } = p.mv;
    let fail = |what: &str| Err(Error::InvariantViolation(format!("pole partition: {what}")));
    for (name, t) in [("Γ′", &p.u_pole), ("Γ″", &p.v_pole), ("Γ̃′", &p.u_pole_moved), ("Γ̃″", &p.v_pole_moved)]
    {
        if !is_pole_tableau(t) {
            return fail(&format!("{name} = {t} is not a pole tableau"));
        }
    }
    if !p.common.is_horizontal_strip() || !p.common.validate().ok() {
        return fail("Γ‴ is not a horizontal strip");
    }
    if !check_one_column(&p.u_pole, &p.u_pole_moved, (r, Some(u)), (s, Some(u)), r, s) {
        return fail("Γ′ and Γ̃′ do not differ in exactly the column of u");
    }
    if !check_one_column(&p.v_pole, &p.v_pole_moved, (s, Some(v)), (r, Some(v)), r, s) {
        return fail("Γ″ and Γ̃″ do not differ in exactly the column of v");
    }
    let lower = tableau_union(&p.u_pole, &p.v_pole);
    let upper = tableau_union(&p.u_pole_moved, &p.v_pole_moved);
    match find_box_move(&lower, &upper) {
        Some(m) if (m.u, m.v, m.r, m.s) == (u, v, r, s) => {}
        _ => return fail("Γ′ ∪ Γ″ and Γ̃′ ∪ Γ̃″ are not one box move apart"),
    }
    if &tableau_union(&lower, &p.common) != g || &tableau_union(&upper, &p.common) != gt {
        return fail("the parts do not reassemble the two tableaux");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxmove::find_box_move;
    use crate::partition;

    fn strip(cols: &[(u32, u32)]) -> LrTableau {
        from_slots(&cols.iter().map(|&(l, e)| (l, if e == 0 { None } else { Some(e) })).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn picket_tableaux() {
        let t = picket_tableau(&Picket::new(5, 2).unwrap());
        assert_eq!(t.columns(), &[Column::new(5, 3, vec![1, 2])]);
        assert_eq!(t.chain(), &[partition![3], partition![4], partition![5]]);
        let e = picket_tableau(&Picket::new(4, 0).unwrap());
        assert_eq!(e, LrTableau::empty(partition![4]));
        let full = picket_tableau(&Picket::new(3, 3).unwrap());
        assert_eq!(full.columns()[0].entries, vec![1, 2, 3]);
        assert_eq!(full.columns()[0].base, 0);
    }

    #[test]
    fn pole_example_chain() {
        let p = Pole::new(vec![0, 2, 3, 6], partition![7, 4, 1]).unwrap();
        let t = pole_tableau(&p).unwrap();
        assert_eq!(
            t.chain(),
            &[partition![6, 2], partition![6, 2, 1], partition![6, 3, 1], partition![6, 4, 1], partition![7, 4, 1]]
        );
        assert_eq!(Pole::minimal(vec![0, 2, 3, 6]).unwrap(), p);
        assert!(split_off_pole(&t).is_err());
        let q = Pole::new(vec![0, 2, 5], partition![6, 3, 1]).unwrap();
        let tq = pole_tableau(&q).unwrap();
        assert_eq!(split_off_pole(&tq).unwrap().0, tq);
        assert_eq!(pole_from_tableau(&tq).unwrap(), q);
    }

    #[test]
    fn pickets_are_poles() {
        for m in 1..=5 {
            for l in 1..=m {
                let pole = Pole::new((m - l..m).collect(), partition![m]).unwrap();
                assert_eq!(pole_tableau(&pole).unwrap(), picket_tableau(&Picket::new(m, l).unwrap()));
            }
        }
    }

    #[test]
    fn small_pole_rows() {
        let p = Pole::new(vec![0, 1, 3], partition![4, 2]).unwrap();
        assert_eq!(Pole::minimal(vec![0, 1, 3]).unwrap(), p);
        let t = pole_tableau(&p).unwrap();
        assert_eq!(t.entries_in_row(1, 1), 1);
        assert_eq!(t.entries_in_row(2, 2), 1);
        assert_eq!(t.entries_in_row(3, 4), 1);
        assert!(pole_tableau(&Pole::new(vec![0, 4], partition![7]).unwrap()).is_err());
        assert!(matches!(Pole::new(vec![5], partition![3]), Err(Error::AmbientTooSmall { .. })));
    }

    fn two_pole_example() -> (LrTableau, LrTableau) {
        let g = strip(&[(9, 3), (9, 4), (7, 2), (5, 3), (3, 2), (1, 1), (1, 1)]);
        let gt = strip(&[(9, 3), (9, 4), (7, 3), (5, 2), (3, 2), (1, 1), (1, 1)]);
        (g, gt)
    }

    #[test]
    fn two_pole_partition() {
        let (g, gt) = two_pole_example();
        let mv = find_box_move(&g, &gt).unwrap();
        assert_eq!((mv.u, mv.v, mv.r, mv.s), (2, 3, 7, 5));
        let p = box_move_pole_partition(&g, &gt, &mv).unwrap();
        assert_eq!(p.u_pole, strip(&[(9, 3), (7, 2), (1, 1)]));
        assert_eq!(p.v_pole, strip(&[(9, 4), (5, 3), (3, 2), (1, 1)]));
        assert_eq!(p.u_pole_moved, strip(&[(9, 3), (5, 2), (1, 1)]));
        assert_eq!(p.v_pole_moved, strip(&[(9, 4), (7, 3), (3, 2), (1, 1)]));
        assert_eq!(p.common.columns().len(), 0);
        assert_eq!(tableau_union(&p.u_pole, &p.v_pole), g);

        let layers = |t: &LrTableau| pole_from_tableau(t).unwrap().layers().to_vec();
        assert_eq!(layers(&p.u_pole), vec![0, 6, 8]);
        assert_eq!(layers(&p.v_pole), vec![0, 2, 4, 8]);
        assert_eq!(layers(&p.u_pole_moved), vec![0, 4, 8]);
        assert_eq!(layers(&p.v_pole_moved), vec![0, 2, 6, 8]);
    }

    #[test]
    fn two_pole_decomposition() {
        let (g, gt) = two_pole_example();
        let (ext, rest) = split_off_pole(&g).unwrap();
        assert_eq!(ext, strip(&[(9, 4), (5, 3), (3, 2), (1, 1)]));
        assert_eq!(tableau_union(&ext, &rest), g);
        let layers: Vec<Vec<u32>> =
            pole_decomposition(&g).unwrap().iter().map(|e| e.pole.as_ref().unwrap().layers().to_vec()).collect();
        assert_eq!(layers, vec![vec![0, 2, 4, 8], vec![0, 6, 8]]);
        for t in [&g, &gt] {
            let parts: Vec<LrTableau> = pole_decomposition(t).unwrap().iter().map(|e| e.tableau().unwrap()).collect();
            assert_eq!(&tableau_union_all(&parts), t);
        }
    }

    #[test]
    fn one_pole_partition() {
        let g = strip(&[(5, 1), (2, 2), (1, 1)]);
        let gt = strip(&[(5, 2), (2, 1), (1, 1)]);
        let mv = find_box_move(&g, &gt).unwrap();
        let p = box_move_pole_partition(&g, &gt, &mv).unwrap();
        assert_eq!(p.u_pole, strip(&[(5, 1)]));
        assert_eq!(p.v_pole, strip(&[(2, 2), (1, 1)]));
        assert_eq!(p.u_pole_moved, strip(&[(2, 1)]));
        assert_eq!(p.v_pole_moved, strip(&[(5, 2), (1, 1)]));
        assert!(p.common.columns().is_empty());
    }

    #[test]
    fn untouched_columns_land_in_common() {
        let g = strip(&[(6, 0), (4, 1), (3, 2), (2, 1), (1, 0)]);
        let gt = strip(&[(6, 0), (4, 2), (3, 1), (2, 1), (1, 0)]);
        let mv = find_box_move(&g, &gt).unwrap();
        let p = box_move_pole_partition(&g, &gt, &mv).unwrap();
        assert_eq!(p.common, strip(&[(6, 0), (1, 0)]));
    }

    #[test]
    fn split_edge_cases() {
        let single = strip(&[(3, 1)]);
        let (ext, rest) = split_off_pole(&single).unwrap();
        assert_eq!(ext, single);
        assert!(rest.columns().is_empty());
        assert!(split_off_pole(&LrTableau::empty(partition![2, 1])).is_err());
        let d = pole_decomposition(&LrTableau::empty(partition![2, 1])).unwrap();
        assert!(d.iter().all(|e| e.pole.is_none()));
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn json_forms() {
        let p: Pole = serde_json::from_str(r#"{"layers":[0,2,3,6],"ambient":[7,4,1]}"#).unwrap();
        assert_eq!(p.ambient(), &partition![7, 4, 1]);
        assert!(serde_json::from_str::<Pole>(r#"{"layers":[2,1]}"#).is_err());
        let k: Picket = serde_json::from_str(r#"{"n":5,"m":2}"#).unwrap();
        assert_eq!(k, Picket::new(5, 2).unwrap());
    }
}
