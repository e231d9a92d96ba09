//! Solver and strategy properties over random graphs and the small corpus.

use matchgame::construct::{comb, g_k, gadget_h, split_extremal};
use matchgame::corpus::{exhaustive, random_forests, random_gnp};
use matchgame::game::{solve_naive, Mode, Player, Solver, SolverConfig};
use matchgame::graph::{Edge, Graph};
use matchgame::matching::{matching_number, min_maximal_size};
use matchgame::play::play;
use matchgame::strategies::{by_name, Exact, RandomMove, Strategy as _};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flags| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if flags[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn cfg(mode: Mode, prune: bool, threads: usize) -> Solver {
    Solver::new(SolverConfig { mode, prune, threads, ..Default::default() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modes_pruning_and_threads_agree(g in arb_graph(9)) {
        for p in [Player::Max, Player::Min] {
            let reference = cfg(Mode::Subset, false, 1).solve(&g, p).unwrap();
            prop_assert_eq!(&cfg(Mode::Iso, false, 1).solve(&g, p).unwrap(), &reference);
            prop_assert_eq!(&cfg(Mode::Subset, true, 1).solve(&g, p).unwrap(), &reference);
            prop_assert_eq!(&cfg(Mode::Iso, true, 3).solve(&g, p).unwrap(), &reference);
            prop_assert_eq!(&cfg(Mode::Subset, false, 4).solve(&g, p).unwrap(), &reference);
        }
    }

    #[test]
    fn naive_agrees(g in arb_graph(7)) {
        let s = cfg(Mode::Subset, false, 1);
        for p in [Player::Max, Player::Min] {
            prop_assert_eq!(s.value(&g, p).unwrap(), solve_naive(&g, p));
        }
    }

    #[test]
    fn value_between_mu_and_alpha(g in arb_graph(10)) {
        let (max, min) = cfg(Mode::Iso, false, 1).values(&g).unwrap();
        let (mu, alpha) = (min_maximal_size(&g), matching_number(&g));
        prop_assert!(mu <= min && min <= alpha);
        prop_assert!(mu <= max && max <= alpha);
    }

    /// Max's value is the best over moves of one plus Min's value on the
    /// residual; Min's value dually.
    #[test]
    fn one_move_recurrence(g in arb_graph(9)) {
        let s = cfg(Mode::Iso, false, 1);
        let (max, min) = s.values(&g).unwrap();
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let after: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| s.values(&g.residual(e).unwrap()).unwrap())
            .collect();
        prop_assert!(after.iter().all(|&(rmax, _)| min <= 1 + rmax));
        prop_assert!(after.iter().all(|&(_, rmin)| max >= 1 + rmin));
        prop_assert!(after.iter().any(|&(rmax, _)| min == 1 + rmax));
        prop_assert!(after.iter().any(|&(_, rmin)| max == 1 + rmin));
    }

    #[test]
    fn relabeling_preserves_values(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        let s = cfg(Mode::Subset, false, 1);
        prop_assert_eq!(s.values(&g).unwrap(), s.values(&h).unwrap());
    }
}

#[test]
fn exact_play_reproduces_values_on_small_corpus() {
    let s = cfg(Mode::Subset, false, 1);
    for n in 0..=7 {
        for g in exhaustive(n) {
            for p in [Player::Max, Player::Min] {
                let t = play(&g, p, &mut Exact::default(), &mut Exact::default()).unwrap();
                assert_eq!(t.final_size, s.value(&g, p).unwrap(), "{g} {p}");
            }
        }
    }
}

#[test]
fn results_are_deterministic() {
    for g in random_gnp(20, 10, 5) {
        let a = cfg(Mode::Iso, true, 4).solve(&g, Player::Max).unwrap();
        let b = cfg(Mode::Iso, true, 4).solve(&g, Player::Max).unwrap();
        assert_eq!(a, b);
    }
}

/// Strategies against random opponents on graphs in their domains; every
/// move must be legal and every game must end in a maximal matching.
#[test]
fn strategies_always_move_legally() {
    let general: Vec<Graph> = random_gnp(60, 9, 11)
        .into_iter()
        .chain(exhaustive(6).into_iter().step_by(7))
        .collect();
    let forests = random_forests(60, 14, 12);
    let linear: Vec<Graph> = forests.iter().filter(|f| f.is_linear_forest()).cloned().collect();
    let splits: Vec<Graph> = (6..=9).map(|n| split_extremal(n, 1).unwrap())
        .chain(general.iter().filter(|g| matchgame::strategies::split_partition(g).is_some()).cloned())
        .collect();
    let domains: Vec<(&str, Vec<Graph>)> = vec![
        ("greedy_first", general.clone()),
        ("max_greedy_matching", general.clone()),
        ("min_small_maximal", general.clone()),
        ("max_mindeg", general.clone()),
        ("exact", general.iter().take(20).cloned().collect()),
        ("min_split", splits),
        ("max_forest", forests.clone()),
        ("min_path", linear.clone()),
        ("max_path", linear),
        ("min_comb", vec![comb(1).unwrap(), comb(2).unwrap()]),
        ("min_gk", vec![gadget_h(), g_k(1).unwrap()]),
    ];
    let mut games = 0;
    let mut seed = 0;
    while games < 10_000 {
        for (name, graphs) in &domains {
            for g in graphs {
                seed += 1;
                let mut s = by_name(name, seed).unwrap();
                let mut r = RandomMove::new(seed);
                let is_min = name.starts_with("min_");
                for first in [Player::Max, Player::Min] {
                    let t = if is_min {
                        play(g, first, &mut r, s.as_mut())
                    } else {
                        play(g, first, s.as_mut(), &mut r)
                    }
                    .unwrap_or_else(|e| panic!("{name} on {g}: {e}"));
                    let m = matchgame::matching::Matching::new(g, t.moves.iter().map(|m| m.edge).collect()).unwrap();
                    assert!(matchgame::matching::is_maximal(g, &m).unwrap());
                    games += 1;
                }
            }
        }
    }
}

#[test]
fn exact_strategy_returns_least_optimal_move() {
    let g = matchgame::construct::path(4).unwrap();
    let mut e = Exact::default();
    e.reset(&g, Player::Max, Player::Max).unwrap();
    let state = matchgame::play::GameState::new(&g, Player::Max);
    assert_eq!(e.choose(&state).unwrap(), Edge::new(0, 1));
}
