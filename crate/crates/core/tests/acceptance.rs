//! One test per acceptance criterion; each prints a single PASS/FAIL line.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use common::*;
use lrlab_core::boxmove::{
    box_reachability, box_successors, dom_to_box_chain, dom_to_box_step, find_box_move, relation_matrix, Relation,
};
use lrlab_core::nilmod::gallery::{gallery_even, gallery_small, gallery_staircase, NamedObject};
use lrlab_core::nilmod::oracle::{submodules_of_shape, Census, OracleOptions};
use lrlab_core::nilmod::{
    default_catalog, enumerate_submodules_oracle, graded_pole, hom_dim, iso_fingerprint, picket, picket_dominance_test,
    predicted_picket_hom, realize_pole, realize_tableau, witness_sequence, CatalogEntry, Embedding, NilModule,
};
use lrlab_core::poles::{pole_tableau, tableau_union, Pole};
use lrlab_core::{enumerate, FiniteField, LrTableau, Scalar, F2, F3};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion(n: u32, name: &str, f: impl FnOnce() -> Result<(), String>) {
    let outcome = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(e) => Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    };
    // written to the raw handle so the line survives output capture
    let line = match &outcome {
        Ok(()) => format!("criterion {n:>2} {name} ... PASS\n"),
        Err(msg) => format!("criterion {n:>2} {name} ... FAIL: {msg}\n"),
    };
    let _ = std::io::stdout().lock().write_all(line.as_bytes());
    if let Err(msg) = outcome {
        panic!("criterion {n} failed: {msg}");
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_01_enumeration_counts() {
    criterion(1, "enumeration counts", || {
        for (s, n) in [
            (shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1]), 2),
            (shape(&[3, 1], &[4, 3, 2, 1], &[3, 2, 1]), 3),
            (shape(&[4, 2], &[6, 4, 2], &[4, 2]), 3),
            (shape(&[3, 1], &[4, 3, 1], &[3, 1]), 2),
        ] {
            let got = enumerate(&s).len();
            ensure(got == n, || format!("{s}: {got} tableaux, expected {n}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_02_running_chain() {
    criterion(2, "chain of the first running tableau", || {
        let all = enumerate(&shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1]));
        let expected =
            vec![part(&[3, 2, 2, 1]), part(&[3, 3, 2, 1, 1]), part(&[4, 3, 2, 2, 1]), part(&[4, 3, 3, 2, 1])];
        ensure(all.iter().any(|t| t.chain() == expected.as_slice()), || {
            format!("chains: {:?}", all.iter().map(|t| t.to_chain()).collect::<Vec<_>>())
        })?;
        ensure(all[0].chain() == expected.as_slice(), || format!("first chain {:?}", all[0].chain()))
    });
}

#[test]
fn criterion_03_strip_predicates() {
    criterion(3, "strip predicates", || {
        let a = shape(&[3, 2], &[4, 3, 3, 2, 1], &[3, 2, 2, 1]);
        ensure(a.is_horizontal_strip() && !a.is_vertical_strip(), || format!("{a}"))?;
        let b = shape(&[3, 2, 1], &[6, 5, 4, 3, 2, 1], &[5, 4, 3, 2, 1]);
        ensure(b.is_horizontal_strip() && b.is_vertical_strip(), || format!("{b}"))
    });
}

#[test]
fn criterion_04_dom_to_box_step() {
    criterion(4, "dom_to_box_step worked example", || {
        let s = shape(&[3, 2, 1], &[6, 5, 4, 3, 2, 1], &[5, 4, 3, 2, 1]);
        let g = word(&s, &[1, 3, 2, 2, 1, 1]);
        let gt = word(&s, &[2, 3, 2, 1, 1, 1]);
        let three = dom_to_box_step(&g, &gt, Some(3)).map_err(|e| e.to_string())?;
        ensure(three.reading_word() == [2, 3, 1, 2, 1, 1], || format!("l=3 gave {three}"))?;
        let one = dom_to_box_step(&g, &gt, Some(1)).map_err(|e| e.to_string())?;
        ensure(one == g, || format!("l=1 gave {one}"))
    });
}

#[test]
fn criterion_05_box_and_dominance() {
    criterion(5, "box moves versus dominance", || {
        for s in horizontal_strips_up_to(12) {
            for t in enumerate(&s) {
                for (u, mv) in box_successors(&t).map_err(|e| e.to_string())? {
                    let up = t.dominance_leq(&u).map_err(|e| e.to_string())?;
                    ensure(up && u != t, || format!("{s}: move {mv} from {t} to {u} does not increase dominance"))?;
                }
            }
        }
        for s in double_strips_up_to(14) {
            let all = enumerate(&s);
            let dom = relation_matrix(&all, Relation::Dom).map_err(|e| e.to_string())?;
            let bx = box_reachability(&all).map_err(|e| e.to_string())?;
            ensure(dom == bx, || format!("{s}: box reachability differs from dominance"))?;
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    if !dom[i][j] {
                        continue;
                    }
                    let chain = dom_to_box_chain(a, b).map_err(|e| format!("{s}: {a} -> {b}: {e}"))?;
                    ensure(chain.first() == Some(a) && chain.last() == Some(b), || format!("{s}: chain endpoints"))?;
                    for w in chain.windows(2) {
                        ensure(find_box_move(&w[0], &w[1]).is_some(), || {
                            format!("{s}: {} -> {} is not a box move", w[0], w[1])
                        })?;
                    }
                }
            }
        }
        Ok(())
    });
}

fn pole_chain_check<F: FiniteField>(p: &Pole, expected: &[lrlab_core::Partition]) -> Result<(), String> {
    let e: Embedding<F> = realize_pole(p).map_err(|e| e.to_string())?;
    ensure(e.tableau().chain() == expected, || format!("over F{}: {:?}", F::ORDER, e.tableau().chain()))?;
    for (i, q) in expected[..expected.len() - 1].iter().enumerate() {
        let got = e.ambient().quotient_type(&e.power_sub(i as u32)).map_err(|e| e.to_string())?;
        ensure(&got == q, || format!("over F{}: B/T^{i}A has type {got}", F::ORDER))?;
    }
    Ok(())
}

#[test]
fn criterion_06_pole_chain() {
    criterion(6, "pole P(0,2,3,6)", || {
        let expected = [part(&[6, 2]), part(&[6, 2, 1]), part(&[6, 3, 1]), part(&[6, 4, 1]), part(&[7, 4, 1])];
        let p = Pole::minimal(vec![0, 2, 3, 6]).map_err(|e| e.to_string())?;
        let symbolic = pole_tableau(&p).map_err(|e| e.to_string())?;
        ensure(symbolic.chain() == expected, || format!("symbolic chain {:?}", symbolic.chain()))?;
        pole_chain_check::<F2>(&p, &expected)?;
        pole_chain_check::<F3>(&p, &expected)
    });
}

#[test]
fn criterion_07_graded_pole() {
    criterion(7, "graded pole P(0,2,5)", || {
        let p = Pole::minimal(vec![0, 2, 5]).map_err(|e| e.to_string())?;
        let t = pole_tableau(&p).map_err(|e| e.to_string())?;
        let g = graded_pole::<F3>(&t, 0).map_err(|e| e.to_string())?;
        let mut blocks: Vec<(u32, i64)> = g.lengths.iter().copied().zip(g.degrees.iter().copied()).collect();
        blocks.sort();
        ensure(blocks == [(1, 0), (3, -1), (6, -3)], || format!("blocks {blocks:?}"))?;
        let mut a = vec![F3::from_residue(0); g.dim()];
        for (len, k) in [(1, 0), (3, 1), (6, 3)] {
            a[g.basis_index(len, k).unwrap()] = F3::from_residue(1);
        }
        ensure(g.generator == a, || format!("generator {:?}", g.generator))?;
        let grading = g.embedding.ambient().grading().ok_or("ungraded")?;
        for (len, deg) in [(1, 0i64), (3, -1), (6, -3)] {
            for k in 0..len {
                ensure(grading[g.basis_index(len, k).unwrap()] == deg + k as i64, || {
                    format!("degree of T^{k} g^{len}")
                })?;
            }
        }
        ensure(g.embedding.tableau() == t, || format!("tableau {}", g.embedding.tableau()))
    });
}

fn round_trip<S: Scalar>(t: &LrTableau) -> Result<(), String> {
    let e: Embedding<S> = realize_tableau(t).map_err(|e| format!("{t}: {e}"))?;
    ensure(&e.tableau() == t, || format!("{t} realizes as {}", e.tableau()))
}

#[test]
fn criterion_08_realize_round_trip() {
    criterion(8, "realize/tableau round trip", || {
        for s in horizontal_strips_up_to(12) {
            for t in enumerate(&s) {
                round_trip::<F2>(&t)?;
                round_trip::<F3>(&t)?;
            }
        }
        Ok(())
    });
}

fn witness_check<F: FiniteField>(g: &LrTableau, gt: &LrTableau) -> Result<(), String> {
    let mv = find_box_move(g, gt).ok_or_else(|| format!("{g} -> {gt} is not a box move"))?;
    let w = witness_sequence::<F>(g, gt, &mv).map_err(|e| format!("{g} -> {gt} over F{}: {e}", F::ORDER))?;
    ensure(w.report.ok(), || format!("{g} -> {gt}: {:?}", w.report.failures()))?;
    ensure(&w.y.tableau() == g && &w.xt.direct_sum(&w.zt).tableau() == gt, || format!("{g} -> {gt}: tableaux"))
}

#[test]
fn criterion_09_witness_sequences() {
    criterion(9, "witness sequences", || {
        let examples = [
            (
                strip(&[(9, 3), (9, 4), (7, 2), (5, 3), (3, 2), (1, 1), (1, 1)]),
                strip(&[(9, 3), (9, 4), (7, 3), (5, 2), (3, 2), (1, 1), (1, 1)]),
            ),
            (strip(&[(5, 1), (2, 2), (1, 1)]), strip(&[(5, 2), (2, 1), (1, 1)])),
        ];
        for (g, gt) in &examples {
            witness_check::<F2>(g, gt)?;
            witness_check::<F3>(g, gt)?;
        }
        for s in horizontal_strips_up_to(12) {
            for t in enumerate(&s) {
                for (u, _) in box_successors(&t).map_err(|e| e.to_string())? {
                    witness_check::<F2>(&t, &u)?;
                    witness_check::<F3>(&t, &u)?;
                }
            }
        }
        Ok(())
    });
}

fn census<F: FiniteField>(objs: &(lrlab_core::Shape, Vec<NamedObject<F>>)) -> Result<Census<F>, String> {
    enumerate_submodules_oracle::<F>(&objs.0, &OracleOptions::default()).map_err(|e| e.to_string())
}

/// Locates each named object among the census classes; returns (tableau index, class index).
fn locate<F: FiniteField>(
    c: &Census<F>,
    objs: &[NamedObject<F>],
    cat: &[CatalogEntry<F>],
) -> Result<Vec<(usize, usize)>, String> {
    objs.iter()
        .map(|o| {
            let t = o.object.tableau();
            let fp = iso_fingerprint(&o.object, cat);
            let ti = c
                .tableaux
                .iter()
                .position(|x| x.tableau == t)
                .ok_or_else(|| format!("{}: tableau {t} missing", o.name))?;
            let ci = c.tableaux[ti]
                .classes
                .iter()
                .position(|x| x.fingerprint == fp)
                .ok_or_else(|| format!("{}: class missing", o.name))?;
            Ok((ti, ci))
        })
        .collect()
}

#[test]
fn criterion_10_oracle_census() {
    criterion(10, "oracle census over F2", || {
        let small = gallery_small::<F2>();
        let cat = default_catalog::<F2>(4);
        let c = census(&small)?;
        let counts: Vec<usize> = c.tableaux.iter().map(|t| t.classes.len()).collect();
        ensure(counts == [1, 1], || format!("class counts {counts:?}"))?;
        let at = locate(&c, &small.1, &cat)?;
        ensure(at[0].0 != at[1].0, || "M1 and M2 share a tableau".into())?;

        let stair = gallery_staircase::<F2>().map_err(|e| e.to_string())?;
        let c = census(&stair)?;
        let total: usize = c.tableaux.iter().map(|t| t.classes.len()).sum();
        ensure(total == 5, || format!("{total} classes"))?;
        let at = locate(&c, &stair.1, &cat)?;
        let mut distinct = at.clone();
        distinct.sort();
        distinct.dedup();
        ensure(distinct.len() == 5, || "named objects collapse".into())?;
        // M1, M2, M3 sit on the three distinct tableaux
        let (g1, g2, g3) = (at[0].0, at[2].0, at[4].0);
        let dist = [g1, g2, g3].map(|i| c.tableaux[i].classes.len());
        ensure(dist == [2, 2, 1], || format!("distribution {dist:?}"))?;
        ensure(c.warnings.is_empty(), || format!("{:?}", c.warnings))
    });
}

#[test]
fn criterion_11_invariant_intersections() {
    criterion(11, "invariant intersection dimensions", || {
        let stair = gallery_staircase::<F2>().map_err(|e| e.to_string())?;
        let c = census(&stair)?;
        let cat = default_catalog::<F2>(4);
        let at = locate(&c, &stair.1, &cat)?;
        for (idx, want) in [(1usize, 1usize), (4, 2)] {
            let (ti, ci) = at[idx];
            let rep = &c.tableaux[ti].classes[ci].representative;
            let got = rep.invariant_intersection_dim(2, 1);
            ensure(got == want, || format!("{}: dim {got}, expected {want}", stair.1[idx].name))?;
        }
        Ok(())
    });
}

fn oracle_embeddings(s: &lrlab_core::Shape) -> Result<Vec<Embedding<F2>>, String> {
    let (_, subs) = submodules_of_shape::<F2>(s, &OracleOptions::default()).map_err(|e| e.to_string())?;
    let b = NilModule::<F2>::canonical(s.beta());
    subs.into_iter().map(|w| Embedding::new(b.clone(), w).map_err(|e| e.to_string())).collect()
}

fn item10_shapes() -> Vec<lrlab_core::Shape> {
    vec![shape(&[3, 1], &[4, 3, 1], &[3, 1]), shape(&[3, 1], &[4, 3, 2, 1], &[3, 2, 1])]
}

#[test]
fn criterion_12_hom_identities() {
    criterion(12, "picket hom identities", || {
        for s in item10_shapes() {
            let all = oracle_embeddings(&s)?;
            let mut reps: Vec<(LrTableau, Embedding<F2>)> = Vec::new();
            for e in &all {
                let t = e.tableau();
                for i in 0..=4u32 {
                    for l in 1..=4u32 {
                        let got = hom_dim(e, &picket::<F2>(i, l));
                        let want = predicted_picket_hom(t.chain_at(i as usize), l);
                        ensure(got == want, || format!("{s}: hom(E, P_{i}^{l}) = {got}, predicted {want}"))?;
                    }
                }
                if !reps.iter().any(|(x, _)| x == &t) {
                    reps.push((t, e.clone()));
                }
            }
            for (ta, a) in &reps {
                for (tb, b) in &reps {
                    let dom = tb.dominance_leq(ta).map_err(|e| e.to_string())?;
                    let pk = picket_dominance_test(b, a).map_err(|e| e.to_string())?;
                    ensure(dom == pk, || format!("{s}: {tb} vs {ta}: dominance {dom}, picket test {pk}"))?;
                }
            }
        }
        Ok(())
    });
}

fn mu_agrees<S: Scalar>(e: &Embedding<S>) -> Result<(), String> {
    let t = e.tableau();
    for l in 1..=t.max_entry().max(1) {
        for r in 1..=e.ambient_type().largest() {
            let (m, d) = (e.mu_entries(l, r), t.entries_in_row(l, r));
            ensure(m == d, || format!("{t}: mu({l},{r}) = {m}, direct count {d}"))?;
        }
    }
    Ok(())
}

fn random_pole_sum(rng: &mut StdRng) -> Embedding<F2> {
    let mut e = lrlab_core::nilmod::zero_embedding::<F2>();
    for _ in 0..rng.gen_range(1..=3) {
        let layers: Vec<u32> = loop {
            let l: Vec<u32> = (0..6).filter(|_| rng.gen_bool(0.4)).collect();
            if !l.is_empty() {
                break l;
            }
        };
        e = e.direct_sum(&realize_pole(&Pole::minimal(layers).unwrap()).unwrap());
    }
    if rng.gen_bool(0.5) {
        e = e.direct_sum(&lrlab_core::nilmod::empty_picket(rng.gen_range(1..=4)));
    }
    e
}

#[test]
fn criterion_13_mu_formula() {
    criterion(13, "mu formula", || {
        for s in item10_shapes() {
            for e in oracle_embeddings(&s)? {
                mu_agrees(&e)?;
            }
        }
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..100 {
            mu_agrees(&random_pole_sum(&mut rng))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_14_union_law() {
    criterion(14, "union law", || {
        let pool: Vec<LrTableau> = horizontal_strips_up_to(7).iter().flat_map(enumerate).collect();
        let mut rng = StdRng::seed_from_u64(14);
        for _ in 0..200 {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &pool[rng.gen_range(0..pool.len())];
            let ea: Embedding<F2> = realize_tableau(a).map_err(|e| e.to_string())?;
            let eb: Embedding<F2> = realize_tableau(b).map_err(|e| e.to_string())?;
            let got = ea.direct_sum(&eb).tableau();
            let want = tableau_union(a, b);
            ensure(got == want, || format!("{a} + {b}: {got} vs {want}"))?;
        }
        Ok(())
    });
}

#[test]
#[ignore = "slow: brute-force census over 2^24 generator pairs"]
fn criterion_15_even_census() {
    criterion(15, "oracle census for ((4,2),(6,4,2),(4,2))", || {
        let even = gallery_even::<F2>();
        let opts = OracleOptions { guard: 1 << 25, ..Default::default() };
        let c = enumerate_submodules_oracle::<F2>(&even.0, &opts).map_err(|e| e.to_string())?;
        let cat = default_catalog::<F2>(6);
        let at = locate(&c, &even.1, &cat)?;
        let name = |i: usize| even.1[i].name;
        for (i, (ti, ci)) in at.iter().enumerate() {
            println!("  {} -> tableau {} class {}", name(i), c.tableaux[*ti].tableau, ci);
        }
        for t in &c.tableaux {
            println!("  tableau {}: {} submodules in {} classes", t.tableau, t.submodules, t.classes.len());
        }
        // M1, M12, M123 share one tableau; M23 and M3 each sit alone on the other two
        let (m1, m12, m123, m23, m3) = (at[0], at[1], at[2], at[3], at[4]);
        ensure(m1.0 == m12.0 && m1.0 == m123.0, || "M1 / M12 / M123 tableau".into())?;
        ensure(m1.1 != m12.1 && m1.1 != m123.1 && m12.1 != m123.1, || "M1 / M12 / M123 classes".into())?;
        ensure(m23.0 != m1.0 && m3.0 != m1.0 && m23.0 != m3.0, || "three tableaux".into())?;
        let dist = [m1.0, m23.0, m3.0].map(|i| c.tableaux[i].classes.len());
        ensure(dist == [3, 1, 1], || format!("distribution {dist:?}"))?;
        ensure(c.warnings.is_empty(), || format!("{:?}", c.warnings))
    });
}
