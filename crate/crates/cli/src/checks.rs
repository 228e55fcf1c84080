//! Fixed worked examples with known answers.

use serde_json::json;

use lrlab_core::boxmove::{box_leq, dom_to_box_step, find_box_move};
use lrlab_core::nilmod::gallery::{gallery_even, gallery_small, gallery_staircase, NamedObject};
use lrlab_core::nilmod::oracle::{enumerate_submodules_oracle, Census, OracleOptions};
use lrlab_core::nilmod::{default_catalog, graded_pole, iso_fingerprint, realize_pole, witness_sequence, x_object};
use lrlab_core::poles::{box_move_pole_partition, pole_from_tableau, pole_tableau, Pole};
use lrlab_core::{enumerate, Column, FiniteField, LrTableau, Partition, Shape, F2, F3};

use crate::Report;

type Check = Result<(), String>;
type CheckFn = fn() -> Check;

fn part(x: &[u32]) -> Partition {
    Partition::new(x.to_vec()).expect("valid partition")
}

fn shape(a: &[u32], b: &[u32], g: &[u32]) -> Shape {
    Shape::new(part(a), part(b), part(g)).expect("valid shape")
}

fn strip(cols: &[(u32, u32)]) -> LrTableau {
    LrTableau::from_column_multiset(
        cols.iter().map(|&(l, e)| if e == 0 { Column::empty(l) } else { Column::new(l, l - 1, vec![e]) }).collect(),
    )
    .expect("valid strip tableau")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn counts() -> Check {
    expect("((3,2),(4,3,3,2,1),(3,2,2,1))", enumerate(&shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1])).len(), 2)?;
    expect("((3,1),(4,3,2,1),(3,2,1))", enumerate(&shape(&[3, 1], &[4, 3, 2, 1], &[3, 2, 1])).len(), 3)?;
    expect("((4,2),(6,4,2),(4,2))", enumerate(&shape(&[4, 2], &[6, 4, 2], &[4, 2])).len(), 3)?;
    expect("((3,1),(4,3,1),(3,1))", enumerate(&shape(&[3, 1], &[4, 3, 1], &[3, 1])).len(), 2)
}

fn running_chain() -> Check {
    let all = enumerate(&shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1]));
    let want = vec![part(&[3, 2, 2, 1]), part(&[3, 3, 2, 1, 1]), part(&[4, 3, 2, 2, 1]), part(&[4, 3, 3, 2, 1])];
    expect("first chain", all[0].to_chain(), want)
}

fn strips() -> Check {
    let a = shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1]);
    expect("running shape strips", (a.is_horizontal_strip(), a.is_vertical_strip()), (true, false))?;
    let b = shape(&[3, 2, 1], &[6, 5, 4, 3, 2, 1], &[5, 4, 3, 2, 1]);
    expect("staircase strips", (b.is_horizontal_strip(), b.is_vertical_strip()), (true, true))
}

fn step() -> Check {
    let s = shape(&[3, 2, 1], &[6, 5, 4, 3, 2, 1], &[5, 4, 3, 2, 1]);
    let g = LrTableau::from_word(s.clone(), &[1, 3, 2, 2, 1, 1]).map_err(e2s)?;
    let gt = LrTableau::from_word(s, &[2, 3, 2, 1, 1, 1]).map_err(e2s)?;
    expect("l=3", dom_to_box_step(&g, &gt, Some(3)).map_err(e2s)?.reading_word(), vec![2, 3, 1, 2, 1, 1])?;
    expect("l=1", dom_to_box_step(&g, &gt, Some(1)).map_err(e2s)?, g)
}

fn figure_pair() -> Check {
    let s = shape(&[3, 2], &[5, 4, 3, 2, 1], &[4, 3, 2, 1]);
    let g = LrTableau::from_word(s.clone(), &[2, 1, 3, 2, 1]).map_err(e2s)?;
    let gt = LrTableau::from_word(s, &[3, 2, 2, 1, 1]).map_err(e2s)?;
    expect("box comparable", box_leq(&g, &gt).map_err(e2s)?, true)
}

fn pole_chain<F: FiniteField>() -> Check {
    let p = Pole::minimal(vec![0, 2, 3, 6]).map_err(e2s)?;
    let want = vec![part(&[6, 2]), part(&[6, 2, 1]), part(&[6, 3, 1]), part(&[6, 4, 1]), part(&[7, 4, 1])];
    expect("symbolic", pole_tableau(&p).map_err(e2s)?.to_chain(), want.clone())?;
    let e = realize_pole::<F>(&p).map_err(e2s)?;
    expect(&format!("over F{}", F::ORDER), e.tableau().to_chain(), want)
}

fn graded() -> Check {
    let t = pole_tableau(&Pole::minimal(vec![0, 2, 5]).map_err(e2s)?).map_err(e2s)?;
    let g = graded_pole::<F2>(&t, 0).map_err(e2s)?;
    let mut blocks: Vec<(u32, i64)> = g.lengths.iter().copied().zip(g.degrees.iter().copied()).collect();
    blocks.sort();
    expect("blocks", blocks, vec![(1, 0), (3, -1), (6, -3)])?;
    let support: Vec<usize> = [(1, 0), (3, 1), (6, 3)].iter().filter_map(|&(l, k)| g.basis_index(l, k)).collect();
    let nonzero: Vec<usize> =
        g.generator.iter().enumerate().filter(|(_, x)| x.residue() != 0).map(|(i, _)| i).collect();
    let mut support = support;
    support.sort();
    expect("generator support", nonzero, support)?;
    expect("tableau", g.embedding.tableau(), t)
}

fn two_pole() -> (LrTableau, LrTableau) {
    (
        strip(&[(9, 3), (9, 4), (7, 2), (5, 3), (3, 2), (1, 1), (1, 1)]),
        strip(&[(9, 3), (9, 4), (7, 3), (5, 2), (3, 2), (1, 1), (1, 1)]),
    )
}

fn one_pole() -> (LrTableau, LrTableau) {
    (strip(&[(5, 1), (2, 2), (1, 1)]), strip(&[(5, 2), (2, 1), (1, 1)]))
}

fn two_pole_partition() -> Check {
    let (g, gt) = two_pole();
    let mv = find_box_move(&g, &gt).ok_or("not a box move")?;
    let p = box_move_pole_partition(&g, &gt, &mv).map_err(e2s)?;
    let layers = |t: &LrTableau| pole_from_tableau(t).map(|p| p.layers().to_vec()).map_err(e2s);
    expect("Γ′", layers(&p.u_pole)?, vec![0, 6, 8])?;
    expect("Γ″", layers(&p.v_pole)?, vec![0, 2, 4, 8])?;
    expect("Γ̃′", layers(&p.u_pole_moved)?, vec![0, 4, 8])?;
    expect("Γ̃″", layers(&p.v_pole_moved)?, vec![0, 2, 6, 8])
}

fn one_pole_partition() -> Check {
    let (g, gt) = one_pole();
    let mv = find_box_move(&g, &gt).ok_or("not a box move")?;
    let p = box_move_pole_partition(&g, &gt, &mv).map_err(e2s)?;
    expect("Γ′", p.u_pole, strip(&[(5, 1)]))?;
    expect("Γ″", p.v_pole, strip(&[(2, 2), (1, 1)]))
}

fn witness<F: FiniteField>(pair: (LrTableau, LrTableau)) -> Check {
    let (g, gt) = pair;
    let mv = find_box_move(&g, &gt).ok_or("not a box move")?;
    let w = witness_sequence::<F>(&g, &gt, &mv).map_err(e2s)?;
    expect("failed checks", w.report.failures(), vec![])
}

fn x_chain() -> Check {
    x_object::<F3>().map(|_| ()).map_err(e2s)
}

fn census<F: FiniteField>(s: &Shape, guard: u128) -> Result<Census<F>, String> {
    enumerate_submodules_oracle::<F>(s, &OracleOptions { guard, ..Default::default() }).map_err(e2s)
}

fn locate(c: &Census<F2>, objs: &[NamedObject<F2>], height: u32) -> Result<Vec<(usize, usize)>, String> {
    let cat = default_catalog::<F2>(height);
    objs.iter()
        .map(|o| {
            let t = o.object.tableau();
            let fp = iso_fingerprint(&o.object, &cat);
            let ti = c.tableaux.iter().position(|x| x.tableau == t).ok_or(format!("{}: tableau missing", o.name))?;
            let ci = c.tableaux[ti]
                .classes
                .iter()
                .position(|x| x.fingerprint == fp)
                .ok_or(format!("{}: class missing", o.name))?;
            Ok((ti, ci))
        })
        .collect()
}

fn census_small() -> Check {
    let (s, objs) = gallery_small::<F2>();
    let c = census::<F2>(&s, 1 << 22)?;
    expect("classes per tableau", c.tableaux.iter().map(|t| t.classes.len()).collect::<Vec<_>>(), vec![1, 1])?;
    let at = locate(&c, &objs, 4)?;
    expect("M1 and M2 on distinct tableaux", at[0].0 != at[1].0, true)
}

fn census_staircase() -> Check {
    let (s, objs) = gallery_staircase::<F2>().map_err(e2s)?;
    let c = census::<F2>(&s, 1 << 22)?;
    let at = locate(&c, &objs, 4)?;
    expect("classes", c.tableaux.iter().map(|t| t.classes.len()).sum::<usize>(), 5)?;
    expect("distribution", [at[0].0, at[2].0, at[4].0].map(|i| c.tableaux[i].classes.len()), [2, 2, 1])?;
    let rep = |i: usize| &c.tableaux[at[i].0].classes[at[i].1].representative;
    expect("M12 intersection", rep(1).invariant_intersection_dim(2, 1), 1)?;
    expect("M3 intersection", rep(4).invariant_intersection_dim(2, 1), 2)
}

fn census_even() -> Check {
    let (s, objs) = gallery_even::<F2>();
    let c = census::<F2>(&s, u128::MAX)?;
    let at = locate(&c, &objs, 6)?;
    expect("M1, M12, M123 share a tableau", (at[0].0 == at[1].0, at[0].0 == at[2].0), (true, true))?;
    expect("distribution", [at[0].0, at[3].0, at[4].0].map(|i| c.tableaux[i].classes.len()), [3, 1, 1])
}

pub fn run_all(slow: bool) -> Report {
    let mut checks: Vec<(&str, CheckFn)> = vec![
        ("enumeration counts", counts),
        ("chain of the first running tableau", running_chain),
        ("strip predicates", strips),
        ("dom to box step", step),
        ("box-comparable pair", figure_pair),
        ("pole P(0,2,3,6) over F2", pole_chain::<F2>),
        ("pole P(0,2,3,6) over F3", pole_chain::<F3>),
        ("graded pole P(0,2,5)", graded),
        ("two-pole partition", two_pole_partition),
        ("one-pole partition", one_pole_partition),
        ("two-pole witness over F2", || witness::<F2>(two_pole())),
        ("two-pole witness over F3", || witness::<F3>(two_pole())),
        ("one-pole witness over F2", || witness::<F2>(one_pole())),
        ("one-pole witness over F3", || witness::<F3>(one_pole())),
        ("tableau of X", x_chain),
        ("census ((3,1),(4,3,1),(3,1))", census_small),
        ("census ((3,1),(4,3,2,1),(3,2,1))", census_staircase),
    ];
    if slow {
        checks.push(("census ((4,2),(6,4,2),(4,2))", census_even));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, f) in checks {
        let r = f();
        ok &= r.is_ok();
        match &r {
            Ok(()) => text += &format!("PASS  {name}\n"),
            Err(m) => text += &format!("FAIL  {name}: {m}\n"),
        }
        rows.push(json!({ "name": name, "passed": r.is_ok(), "detail": r.err() }));
    }
    let failed = rows.iter().filter(|r| r["passed"] == false).count();
    Report { json: json!({ "checks": rows, "failed": failed }), text, dot: None, ok }
}
