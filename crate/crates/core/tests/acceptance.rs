//! Acceptance criteria 1 to 13. Each test prints one line
//! `criterion NN: PASS|FAIL <detail> (<elapsed> of <limit>)` and fails if the
//! criterion does not hold or runs past its time limit.

use std::time::{Duration, Instant};

use matchgame::construct::{
    cartesian_product, comb, complete, complete_bipartite, cycle, gadget_h, g_k, k_minus_pm, path,
    paw, rk2_c6, split_extremal, twin_cliques, clique_pendant, cubic_tree,
};
use matchgame::corpus::{connected_cubic, exhaustive};
use matchgame::game::{solve_naive, Mode, Player, Solver, SolverConfig};
use matchgame::graph::Graph;
use matchgame::matching::matching_number;
use matchgame::play::play;
use matchgame::strategies::{self, Exact, MaxMinDegree, MaxPath, MinComb, MinGk, MinPath, MinSplit, Strategy};
use matchgame::verify::{run_check_spec, VerifyOptions};

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

fn criterion(no: u32, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let timing = format!("({:.2?} of {:?})", elapsed, limit);
    match &result {
        Ok(detail) if elapsed <= limit => println!("criterion {no:02}: PASS {detail} {timing}"),
        Ok(detail) => println!("criterion {no:02}: FAIL over time limit; {detail} {timing}"),
        Err(why) => println!("criterion {no:02}: FAIL {why} {timing}"),
    }
    if let Err(why) = result {
        panic!("criterion {no:02} failed: {why}");
    }
    assert!(elapsed <= limit, "criterion {no:02} took {elapsed:?}, limit {limit:?}");
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn solver(mode: Mode) -> Solver {
    Solver::new(SolverConfig::with_mode(mode))
}

fn values(s: &Solver, g: &Graph) -> Result<(usize, usize), String> {
    s.values(g).map_err(|e| e.to_string())
}

fn verify_all(checks: &[&str], corpus: &str) -> Result<String, String> {
    let opts = VerifyOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..Default::default()
    };
    let mut lines = Vec::new();
    for id in checks {
        let r = run_check_spec(id, Some(corpus), &opts).map_err(|e| e.to_string())?;
        if let Some(v) = r.violations().next() {
            return Err(format!("{id}: {} on {} ({}): expected {}, got {}", r.summary(), v.graph6, v.label, v.expected, v.actual));
        }
        lines.push(format!("{id} {}", r.summary()));
    }
    Ok(lines.join("; "))
}

#[test]
fn criterion_01_cycle_values() {
    criterion(1, SECOND, || {
        let v = values(&solver(Mode::Subset), &cycle(6).unwrap())?;
        ensure(v == (2, 3), || format!("C6 gave {v:?}"))?;
        Ok("Max(C6)=2 Min(C6)=3".into())
    });
}

#[test]
fn criterion_02_path_table() {
    criterion(2, MINUTE, || {
        let s = solver(Mode::Iso);
        for n in 1..=28 {
            let max = s.value(&path(n).unwrap(), Player::Max).map_err(|e| e.to_string())?;
            ensure(3 * (n / 7) <= max && max <= 3 * n.div_ceil(7), || format!("Max(P{n})={max}"))?;
            if n % 7 == 0 {
                ensure(max == 3 * (n / 7), || format!("Max(P{n})={max}, want {}", 3 * (n / 7)))?;
            }
        }
        Ok("n=1..28 within 3floor(n/7)..3ceil(n/7); Max(P_7k)=3k".into())
    });
}

#[test]
fn criterion_03_exhaustive_sweep() {
    criterion(3, 10 * MINUTE, || {
        verify_all(
            &["diff_le_one", "trivial_bounds", "lower_two_thirds", "upper_mu", "monotone_delete", "delete_drop_le2"],
            "exhaustive:1..7",
        )
    });
}

#[test]
fn criterion_04_oracle_equivalence() {
    criterion(4, 10 * MINUTE, || {
        let (subset, iso) = (solver(Mode::Subset), solver(Mode::Iso));
        let mut count = 0;
        for n in 0..=7 {
            for g in exhaustive(n) {
                for p in [Player::Max, Player::Min] {
                    let a = subset.solve(&g, p).map_err(|e| e.to_string())?;
                    let b = iso.solve(&g, p).map_err(|e| e.to_string())?;
                    let c = solve_naive(&g, p);
                    ensure(a == b && a.value == c, || format!("{g}: subset {a:?} iso {b:?} naive {c}"))?;
                }
                count += 1;
            }
        }
        Ok(format!("{count} classes, both players, zero mismatches"))
    });
}

#[test]
fn criterion_05_realizability() {
    criterion(5, MINUTE, || {
        let s = solver(Mode::Subset);
        let cases = [
            ("clique_pendant(2)", clique_pendant(2).unwrap(), (2, 1)),
            ("K_minusPM(1)", k_minus_pm(1).unwrap(), (2, 3)),
            ("twin_cliques(2)", twin_cliques(2).unwrap(), (3, 4)),
            ("K4", complete(4).unwrap(), (2, 2)),
            ("K6", complete(6).unwrap(), (3, 3)),
            ("K8", complete(8).unwrap(), (4, 4)),
        ];
        for (name, g, want) in cases {
            let got = values(&s, &g)?;
            ensure(got == want, || format!("{name}: {got:?}, want {want:?}"))?;
        }
        Ok("all six pairs exact".into())
    });
}

#[test]
fn criterion_06_deletion_sharpness() {
    criterion(6, MINUTE, || {
        let s = solver(Mode::Subset);
        let one = rk2_c6(1).unwrap();
        let two = rk2_c6(2).unwrap();
        let max_one = s.value(&one, Player::Max).map_err(|e| e.to_string())?;
        let max_c6 = s.value(&one.delete_vertex(0).unwrap(), Player::Max).map_err(|e| e.to_string())?;
        ensure((max_one, max_c6) == (4, 2), || format!("Max(K2+C6)={max_one}, after deletion {max_c6}"))?;
        let min_two = s.value(&two, Player::Min).map_err(|e| e.to_string())?;
        let min_less = s.value(&two.delete_vertex(0).unwrap(), Player::Min).map_err(|e| e.to_string())?;
        ensure((min_two, min_less) == (5, 3), || format!("Min(2K2+C6)={min_two}, after deletion {min_less}"))?;
        Ok("Max 4->2, Min 5->3".into())
    });
}

#[test]
fn criterion_07_forced_perfect_matchings() {
    criterion(7, 5 * MINUTE, || {
        let s = solver(Mode::Subset);
        let k11 = complete_bipartite(1, 1).unwrap();
        let k22 = complete_bipartite(2, 2).unwrap();
        let products = [
            ("K11xP2", cartesian_product(&k11, &path(2).unwrap()).unwrap()),
            ("K11xP3", cartesian_product(&k11, &path(3).unwrap()).unwrap()),
            ("K22xK2", cartesian_product(&k22, &complete(2).unwrap()).unwrap()),
        ];
        for (name, g) in products {
            let half = g.vertex_count() / 2;
            let (max, min) = values(&s, &g)?;
            let alpha = matching_number(&g);
            ensure(max == half && min == half && alpha == half, || {
                format!("{name}: Max={max} Min={min} alpha'={alpha}, want {half}")
            })?;
        }
        let pp = cartesian_product(&paw(), &path(3).unwrap()).unwrap();
        let (max, min) = values(&s, &pp)?;
        ensure(max < 6 && min < 6, || format!("paw x P3: Max={max} Min={min}"))?;
        Ok(format!("three products perfect; paw x P3 Max={max} Min={min}"))
    });
}

#[test]
fn criterion_08_split_extremal() {
    criterion(8, 15 * MINUTE, || {
        let s = solver(Mode::Subset);
        for n in 6..=8 {
            let g = split_extremal(n, 1).unwrap();
            let max = s.value(&g, Player::Max).map_err(|e| e.to_string())?;
            let alpha = matching_number(&g);
            let edges = g.edge_count();
            ensure(edges == 3 + 3 * (n - 3) && alpha == 3 && max == 2, || {
                format!("split_extremal({n},1): |E|={edges} alpha'={alpha} Max={max}")
            })?;
        }
        let swept = verify_all(&["edge_extremal_k1"], "exhaustive:6..7")?;
        Ok(format!("n=6,7,8 extremal; {swept}"))
    });
}

#[test]
fn criterion_09_forests() {
    criterion(9, 15 * MINUTE, || {
        verify_all(
            &["forest_three_quarters", "forest_min_le_max", "star_addition", "optimal_move_transfer"],
            "family:trees:1..10;random:forest:500:14",
        )
    });
}

#[test]
fn criterion_10_comb_sharpness() {
    criterion(10, 5 * MINUTE, || {
        let s = solver(Mode::Iso);
        for (k, want) in [(1, 3), (2, 6)] {
            let g = comb(k).unwrap();
            let max = s.value(&g, Player::Max).map_err(|e| e.to_string())?;
            // exactly three eighths of the vertex count
            ensure(max == want && 8 * max == 3 * g.vertex_count(), || format!("Max(comb({k}))={max}"))?;
        }
        Ok("Max(comb(1))=3 Max(comb(2))=6".into())
    });
}

#[test]
fn criterion_11_gadget_h() {
    criterion(11, 10 * MINUTE, || {
        let v = values(&solver(Mode::Subset), &gadget_h())?;
        ensure(v == (6, 6), || format!("gadget_H gave {v:?}"))?;
        Ok("Max=Min=6".into())
    });
}

fn final_size(g: &Graph, first: Player, max: &mut dyn Strategy, min: &mut dyn Strategy) -> Result<usize, String> {
    play(g, first, max, min).map(|t| t.final_size).map_err(|e| e.to_string())
}

#[test]
fn criterion_12_strategy_guarantees() {
    criterion(12, 10 * MINUTE, || {
        let both = [Player::Max, Player::Min];
        for n in 6..=9 {
            let g = split_extremal(n, 1).unwrap();
            for first in both {
                let f = final_size(&g, first, &mut Exact::default(), &mut MinSplit::default())?;
                ensure(f <= 2, || format!("min_split on split_extremal({n},1), {first} first: {f}"))?;
            }
        }
        let mut cubic = 0;
        for n in (4..=12).step_by(2) {
            for g in connected_cubic(n) {
                for first in both {
                    let f = final_size(&g, first, &mut MaxMinDegree, &mut Exact::default())?;
                    ensure(9 * f + 2 >= 3 * n, || format!("max_mindeg on {g} ({first} first): {f}"))?;
                }
                cubic += 1;
            }
        }
        for (n, bound) in [(7, 3), (14, 6)] {
            let g = path(n).unwrap();
            for first in both {
                let lo = final_size(&g, first, &mut Exact::new(Mode::Iso), &mut MinPath)?;
                let hi = final_size(&g, first, &mut MaxPath, &mut Exact::new(Mode::Iso))?;
                ensure(lo <= bound && hi >= bound, || format!("P{n}, {first} first: min_path {lo}, max_path {hi}"))?;
            }
        }
        for (k, bound) in [(1, 3), (2, 6)] {
            let g = comb(k).unwrap();
            for first in both {
                let f = final_size(&g, first, &mut Exact::new(Mode::Iso), &mut MinComb::default())?;
                ensure(f <= bound, || format!("min_comb on comb({k}), {first} first: {f}"))?;
            }
        }
        Ok(format!("split n=6..9, {cubic} cubic graphs, paths 7 and 14, combs 1 and 2"))
    });
}

#[test]
fn criterion_13_gk_bound() {
    criterion(13, 10 * MINUTE, || {
        let mut worst = Vec::new();
        for (k, bound) in [(0usize, 6usize), (1, 13)] {
            let g = g_k(k).unwrap();
            let mut suite: Vec<Box<dyn Strategy + Send>> = vec![
                strategies::by_name("greedy_first", 0).unwrap(),
                strategies::by_name("max_mindeg", 0).unwrap(),
                strategies::by_name("max_greedy_matching", 0).unwrap(),
            ];
            suite.extend((0..20).map(|seed| strategies::by_name("random", seed).unwrap()));
            let mut top = 0;
            for max in suite.iter_mut() {
                for first in [Player::Max, Player::Min] {
                    let f = final_size(&g, first, max.as_mut(), &mut MinGk::default())?;
                    ensure(f <= bound, || format!("G_{k}: {} ({first} first) reached {f}", max.name()))?;
                    top = top.max(f);
                }
            }
            worst.push(format!("G_{k} worst {top} <= {bound}"));
        }
        for k in 1..=3 {
            let alpha = matching_number(&cubic_tree(k).unwrap());
            ensure(alpha < 1 << k, || format!("alpha'(T_{k})={alpha}"))?;
        }
        Ok(format!("{}; alpha'(T_k) <= 2^k-1 for k=1..3", worst.join(", ")))
    });
}
