//! Box moves on horizontal strips, the orders they generate, and the
//! step-by-step conversion of a dominance relation into box moves.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{Column, LrTableau};

/// Exchange of the entry `u` in row `r` with the entry `v` in row `s`, where `u < v` and `r > s`.
/// Column indices refer to the source tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxMove {
    pub u: u32,
    pub v: u32,
    pub r: u32,
    pub s: u32,
    pub column_u: usize,
    pub column_v: usize,
}

impl fmt::Display for BoxMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{} <-> {}@{}", self.u, self.r, self.v, self.s)
    }
}

fn require_horizontal(t: &LrTableau, what: &'static str) -> Result<()> {
    if t.is_horizontal_strip() {
        Ok(())
    } else {
        Err(Error::NotHorizontalStrip(what))
    }
}

/// Each column of a horizontal strip as (length, entry).
fn slots(t: &LrTableau) -> Vec<(u32, Option<u32>)> {
    t.columns().iter().map(|c| (c.total, c.entries.first().copied())).collect()
}

fn column(total: u32, entry: Option<u32>) -> Column {
    match entry {
        Some(e) => Column::new(total, total - 1, vec![e]),
        None => Column::empty(total),
    }
}

/// Performs the move and re-sorts the columns.
pub fn apply_move(t: &LrTableau, mv: &BoxMove) -> Result<LrTableau> {
    require_horizontal(t, "apply_move")?;
    let cols = slots(t);
    let ok = |i: usize, len: u32, e: u32| cols.get(i) == Some(&(len, Some(e)));
    if mv.u >= mv.v || mv.r <= mv.s || !ok(mv.column_u, mv.r, mv.u) || !ok(mv.column_v, mv.s, mv.v) {
        return Err(Error::Precondition(format!("{mv} is not a box move of {t}")));
    }
    let mut out: Vec<Column> = t.columns().to_vec();
    out[mv.column_u] = column(mv.r, Some(mv.v));
    out[mv.column_v] = column(mv.s, Some(mv.u));
    let moved = LrTableau::from_column_multiset(out)?;
    if moved.shape() != t.shape() {
        return Err(Error::ShapeMismatch);
    }
    Ok(moved)
}

/// All tableaux reachable by one box move, without repetitions.
pub fn box_successors(t: &LrTableau) -> Result<Vec<(LrTableau, BoxMove)>> {
    require_horizontal(t, "box_successors")?;
    let cols = slots(t);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, &(r, eu)) in cols.iter().enumerate() {
        let Some(u) = eu else { continue };
        for (j, &(s, ev)) in cols.iter().enumerate() {
            let Some(v) = ev else { continue };
            if u >= v || r <= s {
                continue;
            }
            let mv = BoxMove { u, v, r, s, column_u: i, column_v: j };
            if let Ok(next) = apply_move(t, &mv) {
                if seen.insert(next.clone()) {
                    out.push((next, mv));
                }
            }
        }
    }
    Ok(out)
}

/// The single move turning `a` into `b`, if there is one.
pub fn find_box_move(a: &LrTableau, b: &LrTableau) -> Option<BoxMove> {
    if a.shape() != b.shape() || !a.is_horizontal_strip() {
        return None;
    }
    let (sa, sb) = (slots(a), slots(b));
    let mut only_a: Vec<(u32, Option<u32>)> = Vec::new();
    let mut rest_b = sb.clone();
    for x in &sa {
        if let Some(p) = rest_b.iter().position(|y| y == x) {
            rest_b.swap_remove(p);
        } else {
            only_a.push(*x);
        }
    }
    if only_a.len() != 2 || rest_b.len() != 2 {
        return None;
    }
    only_a.sort_by_key(|x| std::cmp::Reverse(x.0));
    let [(r, Some(u)), (s, Some(v))] = [only_a[0], only_a[1]] else { return None };
    if r <= s || u >= v {
        return None;
    }
    rest_b.sort_by_key(|x| std::cmp::Reverse(x.0));
    if rest_b != [(r, Some(v)), (s, Some(u))] {
        return None;
    }
    let column_u = sa.iter().position(|x| *x == (r, Some(u)))?;
    let column_v = sa.iter().position(|x| *x == (s, Some(v)))?;
    Some(BoxMove { u, v, r, s, column_u, column_v })
}

/// Whether `b` is reachable from `a` by box moves.
pub fn box_leq(a: &LrTableau, b: &LrTableau) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch);
    }
    require_horizontal(a, "box_leq")?;
    let mut seen = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(t) = queue.pop_front() {
        if &t == b {
            return Ok(true);
        }
        for (next, _) in box_successors(&t)? {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Dom,
    Box,
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dom" => Ok(Relation::Dom),
            "box" => Ok(Relation::Box),
            other => Err(Error::UnknownRelation(other.to_string())),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Dom => "dom",
            Relation::Box => "box",
        })
    }
}

/// `m[i][j]` is true iff `tableaux[i] ≤ tableaux[j]` in the chosen order.
pub fn relation_matrix(tableaux: &[LrTableau], relation: Relation) -> Result<Vec<Vec<bool>>> {
    if let Some(first) = tableaux.first() {
        if tableaux.iter().any(|t| t.shape() != first.shape()) {
            return Err(Error::ShapeMismatch);
        }
    }
    match relation {
        Relation::Dom => tableaux.iter().map(|a| tableaux.iter().map(|b| a.dominance_leq(b)).collect()).collect(),
        Relation::Box => box_reachability(tableaux),
    }
}

/// Box reachability between all pairs, sharing one successor cache.
pub fn box_reachability(tableaux: &[LrTableau]) -> Result<Vec<Vec<bool>>> {
    let index: HashMap<&LrTableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut succ: HashMap<LrTableau, Vec<LrTableau>> = HashMap::new();
    let mut out = vec![vec![false; tableaux.len()]; tableaux.len()];
    for (i, start) in tableaux.iter().enumerate() {
        require_horizontal(start, "box_reachability")?;
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(t) = queue.pop_front() {
            if let Some(&j) = index.get(&t) {
                out[i][j] = true;
            }
            if !succ.contains_key(&t) {
                let next = box_successors(&t)?.into_iter().map(|(n, _)| n).collect();
                succ.insert(t.clone(), next);
            }
            for n in &succ[&t] {
                if seen.insert(n.clone()) {
                    queue.push_back(n.clone());
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub relation: Relation,
    pub nodes: Vec<LrTableau>,
    pub edges: Vec<(usize, usize)>,
}

/// Transitive reduction of the order on the given tableaux.
pub fn hasse(tableaux: &[LrTableau], relation: Relation) -> Result<HasseDiagram> {
    let le = relation_matrix(tableaux, relation)?;
    let n = tableaux.len();
    let lt = |i: usize, j: usize| i != j && le[i][j];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                edges.push((i, j));
            }
        }
    }
    Ok(HasseDiagram { relation, nodes: tableaux.to_vec(), edges })
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n  rankdir=BT;\n", self.relation);
        for (i, t) in self.nodes.iter().enumerate() {
            let w: Vec<String> = t.reading_word().iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", w.join(",")));
        }
        for (i, j) in &self.edges {
            out.push_str(&format!("  n{i} -> n{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn check_strips(a: &LrTableau, b: &LrTableau) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !a.shape().is_horizontal_strip() || !a.shape().is_vertical_strip() {
        return Err(Error::Precondition(format!("{} is not both a horizontal and a vertical strip", a.shape())));
    }
    Ok(())
}

/// One step of the dominance-to-box algorithm on reading words.
///
/// `pick_l` optionally chooses position `l` (1-based); by default the smallest admissible one.
/// The result `Γ̂` satisfies `Γ ≤dom Γ̂` and differs from `gt` by one box move.
pub fn dom_to_box_step(g: &LrTableau, gt: &LrTableau, pick_l: Option<usize>) -> Result<LrTableau> {
    check_strips(g, gt)?;
    if g == gt || !g.dominance_leq(gt)? {
        return Err(Error::Precondition(format!("{g} is not strictly below {gt} in dominance")));
    }
    let w = g.reading_word();
    let wt = gt.reading_word();
    let k = (0..w.len()).find(|&i| w[i] != wt[i]).expect("distinct tableaux have distinct words");
    let x = w[k];
    let m = (k + 1..wt.len())
        .find(|&i| wt[i] == x)
        .ok_or_else(|| Error::InvariantViolation(format!("no later position holds {x} in {gt}")))?;
    let y = wt[k..m].iter().copied().filter(|&e| e > x).min().ok_or_else(|| {
        Error::InvariantViolation(format!("no entry above {x} between positions {} and {}", k + 1, m + 1))
    })?;
    let l = match pick_l {
        None => (k..m).find(|&i| wt[i] == y).expect("y occurs in range"),
        Some(p) => {
            let l = p.checked_sub(1).ok_or_else(|| Error::Precondition("positions start at 1".into()))?;
            if l < k || l >= m || wt[l] != y {
                return Err(Error::Precondition(format!(
                    "position {p} is not admissible (need {} <= l < {} with entry {y})",
                    k + 1,
                    m + 1
                )));
            }
            l
        }
    };
    let mut hat = wt.clone();
    hat[l] = x;
    hat[m] = y;
    let hat = LrTableau::from_word(g.shape().clone(), &hat)
        .map_err(|e| Error::InvariantViolation(format!("step produced an invalid tableau: {e}")))?;
    if !g.dominance_leq(&hat)? {
        return Err(Error::InvariantViolation(format!("{g} is not below {hat}")));
    }
    if find_box_move(&hat, gt).is_none() {
        return Err(Error::InvariantViolation(format!("{hat} is not one box move below {gt}")));
    }
    Ok(hat)
}

/// Box-move chain `Γ = Λ0 < Λ1 < … < Λn = Γ̃`, built downward from `Γ̃`.
pub fn dom_to_box_chain(g: &LrTableau, gt: &LrTableau) -> Result<Vec<LrTableau>> {
    dom_to_box_chain_with(g, gt, None)
}

/// As [`dom_to_box_chain`], with an optional choice of `l` for the first step only.
pub fn dom_to_box_chain_with(g: &LrTableau, gt: &LrTableau, first_pick: Option<usize>) -> Result<Vec<LrTableau>> {
    check_strips(g, gt)?;
    if !g.dominance_leq(gt)? {
        return Err(Error::Precondition(format!("{g} is not below {gt} in dominance")));
    }
    let mut descent = vec![gt.clone()];
    let mut pick = first_pick;
    while descent.last() != Some(g) {
        let cur = descent.last().expect("nonempty");
        let hat = dom_to_box_step(g, cur, pick.take())?;
        if descent.contains(&hat) {
            return Err(Error::InvariantViolation(format!("descent revisits {hat}")));
        }
        descent.push(hat);
    }
    descent.reverse();
    for w in descent.windows(2) {
        if !w[0].validate().ok() || !g.dominance_leq(&w[0])? || !w[0].dominance_leq(&w[1])? {
            return Err(Error::InvariantViolation(format!("chain link {} -> {} fails", w[0], w[1])));
        }
        if find_box_move(&w[0], &w[1]).is_none() {
            return Err(Error::InvariantViolation(format!("{} -> {} is not a box move", w[0], w[1])));
        }
    }
    Ok(descent)
}
