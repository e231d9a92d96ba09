//! Named checks of value bounds and identities, run over a corpus.
//!
//! Each check looks at one instance at a time and either passes, fails with
//! the expected and observed quantities, or does not apply (for example a
//! forest-only check on a graph with a cycle). Records are sorted by graph6
//! and label, so the report does not depend on the number of worker threads.
//! All inequalities with fractions are compared in integers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::canon::canonical_certificate;
use crate::construct::{disjoint_union, gadget_h, split_atom, star};
use crate::corpus::{self, CorpusError, Instance};
use crate::game::{Mode, Player, SolveError, Solver, SolverConfig};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::matching::{covering_max_matching, matching_number, min_maximal_size, compatible_witness, Witness};
use crate::play::play;
use crate::strategies::{self, MinGk, Strategy};

pub struct CheckInfo {
    pub id: &'static str,
    pub default_corpus: &'static str,
    pub about: &'static str,
}

const EXHAUSTIVE: &str = "exhaustive:1..7";
const FORESTS: &str = "family:trees:1..10;random:forest:500:14";

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo { id: "diff_le_one", default_corpus: EXHAUSTIVE, about: "|Max - Min| <= 1" },
    CheckInfo { id: "monotone_delete", default_corpus: EXHAUSTIVE, about: "deleting a vertex never raises either value" },
    CheckInfo { id: "delete_drop_le2", default_corpus: EXHAUSTIVE, about: "deleting a vertex lowers either value by at most 2" },
    CheckInfo { id: "trivial_bounds", default_corpus: EXHAUSTIVE, about: "mu <= Min, Max <= alpha'" },
    CheckInfo { id: "lower_two_thirds", default_corpus: EXHAUSTIVE, about: "3 Max >= 2 alpha'" },
    CheckInfo { id: "upper_mu", default_corpus: EXHAUSTIVE, about: "Max - 1 <= Min and 2 Min <= 3 mu" },
    CheckInfo {
        id: "compatible_matching_equality",
        default_corpus: "exhaustive:1..7;graph:complete_bipartite:1,1*path:2;graph:complete_bipartite:1,1*path:3;graph:complete_bipartite:2,2*complete:2",
        about: "a compatible maximum matching forces Max = Min = alpha'",
    },
    CheckInfo {
        id: "split_ceiling",
        default_corpus: "exhaustive:1..7;family:split_extremal:6..9:1",
        about: "split graphs: 3 Max <= 2|T| rounded up, T the smallest clique side",
    },
    CheckInfo {
        id: "edge_extremal_k1",
        default_corpus: "exhaustive:6..7;family:split_extremal:6..8:1",
        about: "alpha' = 3 and Max = 2 imply |E| <= 3 + 3(n - 3), attained by split_extremal(n,1)",
    },
    CheckInfo { id: "matching_lemmas", default_corpus: EXHAUSTIVE, about: "large matching, near-perfect edge extension, every vertex matchable" },
    CheckInfo { id: "forest_three_quarters", default_corpus: FORESTS, about: "forests: 4 Max >= 3 alpha'" },
    CheckInfo { id: "forest_min_le_max", default_corpus: FORESTS, about: "forests: Min <= Max" },
    CheckInfo { id: "star_addition", default_corpus: FORESTS, about: "forests: adding a star component adds exactly 1 to both values" },
    CheckInfo { id: "optimal_move_transfer", default_corpus: FORESTS, about: "forests: optimal first moves stay optimal after adding a star" },
    CheckInfo { id: "path_values", default_corpus: "family:path:1..28", about: "3 floor(n/7) <= Max(P_n) <= 3 ceil(n/7)" },
    CheckInfo {
        id: "regular_lower",
        default_corpus: "family:cubic:4..12;family:cycle:3..14;family:complete:2..8",
        about: "connected r-regular: (4r - 3) Max >= rn - 2",
    },
    CheckInfo {
        id: "realizable_pairs",
        default_corpus: "family:clique_pendant:2..4;family:K_minusPM:1..2;family:twin_cliques:2..3;graph:complete:4;graph:complete:6;graph:complete:8",
        about: "named graphs realize their (Max, Min) pairs",
    },
    CheckInfo { id: "isolated_edge_drop_two", default_corpus: "family:rK2_C6:1..2", about: "deleting an isolated-edge endpoint can drop a value by exactly 2" },
    CheckInfo {
        id: "krr_product_pm",
        default_corpus: "graph:complete_bipartite:1,1*path:2;graph:complete_bipartite:1,1*path:3;graph:complete_bipartite:2,2*complete:2",
        about: "Max = Min = alpha' = n/2",
    },
    CheckInfo { id: "paw_product_no_pm", default_corpus: "graph:paw*path:3", about: "Max < n/2 and Min < n/2" },
    CheckInfo {
        id: "gk_strategy_bound",
        default_corpus: "family:G_k:0..1;family:cubic_tree:1..3",
        about: "min_gk holds baseline Max players to 7*2^k - 1 on G_k; alpha'(T_k) <= 2^k - 1",
    },
    CheckInfo { id: "gadget_H_values", default_corpus: "graph:gadget_H", about: "Max = Min = 6 on gadget_H" },
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}; available: {}", check_ids().join(", "))]
    UnknownCheck(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub label: String,
    pub graph6: String,
    pub expected: String,
    pub actual: String,
    pub applicable: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub check: String,
    pub instances: usize,
    pub applicable: usize,
    pub records: Vec<Record>,
    #[serde(skip)]
    pub runtime: Duration,
    /// Noun for the instance count in the summary line.
    #[serde(skip)]
    pub unit: &'static str,
}

impl Report {
    pub fn violations(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn summary(&self) -> String {
        let v = self.violations().count();
        let scope = if self.applicable == self.instances {
            format!("{} {}", self.instances, self.unit)
        } else {
            format!("{} {}, {} applicable", self.instances, self.unit, self.applicable)
        };
        if v == 0 {
            format!("pass ({scope})")
        } else {
            format!("FAIL ({v} violations; {scope})")
        }
    }

    /// One JSON object per record.
    pub fn json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub jobs: usize,
    pub seed: u64,
    pub mode: Mode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            seed: 0,
            mode: Mode::Iso,
        }
    }
}

struct Outcome {
    applicable: bool,
    pass: bool,
    expected: String,
    actual: String,
}

fn judge(pass: bool, expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
    Outcome {
        applicable: true,
        pass,
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn not_applicable(why: &str) -> Outcome {
    Outcome {
        applicable: false,
        pass: true,
        expected: "-".into(),
        actual: format!("not applicable: {why}"),
    }
}

type CheckResult = Result<Outcome, String>;

impl From<SolveError> for String {
    fn from(e: SolveError) -> String {
        e.to_string()
    }
}

struct Ctx {
    solver: Solver,
    seed: u64,
}

impl Ctx {
    fn max(&self, g: &Graph) -> Result<usize, SolveError> {
        self.solver.value(g, Player::Max)
    }
    fn both(&self, g: &Graph) -> Result<(usize, usize), SolveError> {
        self.solver.values(g)
    }
}

/// `(name, params)` from an instance label such as `clique_pendant:2`.
fn label_atom(label: &str) -> Option<(&str, Vec<usize>)> {
    split_atom(label).ok()
}

fn deletions(g: &Graph) -> impl Iterator<Item = (usize, Graph)> + '_ {
    (0..g.vertex_count()).map(|v| (v, g.delete_vertex(v).expect("vertex in range")))
}

fn diff_le_one(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    Ok(judge(max.abs_diff(min) <= 1, "|Max-Min| <= 1", format!("Max={max} Min={min}")))
}

fn monotone_delete(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    for (v, h) in deletions(g) {
        let (hmax, hmin) = ctx.both(&h)?;
        if hmax > max || hmin > min {
            return Ok(judge(
                false,
                format!("Max(G-v) <= {max}, Min(G-v) <= {min}"),
                format!("v={v}: Max(G-v)={hmax} Min(G-v)={hmin}"),
            ));
        }
    }
    Ok(judge(true, "no deletion raises a value", format!("Max={max} Min={min}")))
}

fn delete_drop_le2(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    for (v, h) in deletions(g) {
        let (hmax, hmin) = ctx.both(&h)?;
        if hmax + 2 < max || hmin + 2 < min {
            return Ok(judge(
                false,
                format!("Max(G-v) >= {}, Min(G-v) >= {}", max.saturating_sub(2), min.saturating_sub(2)),
                format!("v={v}: Max(G-v)={hmax} Min(G-v)={hmin}"),
            ));
        }
    }
    Ok(judge(true, "no deletion drops a value by more than 2", format!("Max={max} Min={min}")))
}

fn trivial_bounds(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    let (mu, alpha) = (min_maximal_size(g), matching_number(g));
    let ok = mu <= min && mu <= max && max <= alpha && min <= alpha;
    Ok(judge(
        ok,
        format!("{mu} <= Max,Min <= {alpha}"),
        format!("Max={max} Min={min}"),
    ))
}

fn lower_two_thirds(ctx: &Ctx, g: &Graph) -> CheckResult {
    let max = ctx.max(g)?;
    let alpha = matching_number(g);
    Ok(judge(3 * max >= 2 * alpha, format!("3*Max >= 2*{alpha}"), format!("Max={max}")))
}

fn upper_mu(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    let mu = min_maximal_size(g);
    Ok(judge(
        max <= min + 1 && 2 * min <= 3 * mu,
        format!("Max-1 <= Min, 2*Min <= 3*{mu}"),
        format!("Max={max} Min={min}"),
    ))
}

fn compatible_matching_equality(ctx: &Ctx, g: &Graph) -> CheckResult {
    match compatible_witness(g) {
        Witness::Absent => Ok(not_applicable("no compatible maximum matching")),
        Witness::Inconclusive => Err("witness enumeration cap reached".into()),
        Witness::Found(m) => {
            let (max, min) = ctx.both(g)?;
            let alpha = m.size();
            Ok(judge(
                max == alpha && min == alpha,
                format!("Max=Min={alpha}"),
                format!("Max={max} Min={min}"),
            ))
        }
    }
}

/// Size of the smallest clique side over all split partitions of `g`.
fn smallest_clique_side(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    if n > 20 {
        return strategies::split_partition(g).map(|p| p.clique.count_ones() as usize);
    }
    let all = g.vertex_mask();
    (0u64..1 << n)
        .filter(|&t| {
            strategies::SplitPartition {
                clique: t,
                independent: all & !t,
            }
            .is_valid(g)
        })
        .map(|t| t.count_ones() as usize)
        .min()
}

fn split_ceiling(ctx: &Ctx, g: &Graph) -> CheckResult {
    let Some(t) = smallest_clique_side(g) else {
        return Ok(not_applicable("not a split graph"));
    };
    let max = ctx.max(g)?;
    let ceiling = (2 * t).div_ceil(3);
    Ok(judge(max <= ceiling, format!("Max <= {ceiling} (|T|={t})"), format!("Max={max}")))
}

fn edge_extremal_k1(ctx: &Ctx, inst: &Instance) -> CheckResult {
    let g = &inst.graph;
    let n = g.vertex_count();
    let bound = 3 * n.saturating_sub(2);
    let alpha = matching_number(g);
    if let Some(("split_extremal", [_, 1])) = label_atom(&inst.label).as_ref().map(|(a, p)| (*a, p.as_slice())) {
        let max = ctx.max(g)?;
        return Ok(judge(
            alpha == 3 && max == 2 && g.edge_count() == bound,
            format!("alpha'=3 Max=2 |E|={bound}"),
            format!("alpha'={alpha} Max={max} |E|={}", g.edge_count()),
        ));
    }
    if n < 6 || alpha != 3 {
        return Ok(not_applicable("needs n >= 6 and alpha' = 3"));
    }
    let max = ctx.max(g)?;
    if max != 2 {
        return Ok(not_applicable("Max != 2"));
    }
    Ok(judge(
        g.edge_count() <= bound,
        format!("|E| <= {bound}"),
        format!("|E|={}", g.edge_count()),
    ))
}

fn matching_lemmas(_: &Ctx, g: &Graph) -> CheckResult {
    let n = g.vertex_count();
    let alpha = matching_number(g);
    let delta = g.min_degree();
    if alpha < (n / 2).min(delta) {
        return Ok(judge(false, format!("alpha' >= min({}, {delta})", n / 2), format!("alpha'={alpha}")));
    }
    if n >= 2 && delta > n / 2 {
        for e in g.edges() {
            let rest = matching_number(&g.residual(e).expect("edge"));
            if rest + 1 < n / 2 {
                return Ok(judge(
                    false,
                    format!("edge {e} in a matching of size {}", n / 2),
                    format!("best through {e} is {}", rest + 1),
                ));
            }
        }
    }
    for v in 0..n {
        if g.degree(v) > 0 {
            match covering_max_matching(g, v) {
                Ok(m) if m.size() == alpha && m.covers(v) => {}
                _ => {
                    return Ok(judge(false, format!("vertex {v} covered by a maximum matching"), "no such matching"))
                }
            }
        }
    }
    Ok(judge(true, "all three lemmas", format!("alpha'={alpha} delta={delta}")))
}

fn forest_only(g: &Graph) -> Option<Outcome> {
    (!g.is_forest()).then(|| not_applicable("not a forest"))
}

fn forest_three_quarters(ctx: &Ctx, g: &Graph) -> CheckResult {
    if let Some(o) = forest_only(g) {
        return Ok(o);
    }
    let max = ctx.max(g)?;
    let alpha = matching_number(g);
    Ok(judge(4 * max >= 3 * alpha, format!("4*Max >= 3*{alpha}"), format!("Max={max}")))
}

fn forest_min_le_max(ctx: &Ctx, g: &Graph) -> CheckResult {
    if let Some(o) = forest_only(g) {
        return Ok(o);
    }
    let (max, min) = ctx.both(g)?;
    Ok(judge(min <= max, "Min <= Max", format!("Max={max} Min={min}")))
}

fn with_star(g: &Graph, t: usize) -> Result<Option<Graph>, String> {
    if g.vertex_count() + t + 1 > crate::graph::MAX_VERTICES {
        return Ok(None);
    }
    let s = star(t).map_err(|e| e.to_string())?;
    disjoint_union(g, &s).map(Some).map_err(|e| e.to_string())
}

fn star_addition(ctx: &Ctx, g: &Graph) -> CheckResult {
    if let Some(o) = forest_only(g) {
        return Ok(o);
    }
    let (max, min) = ctx.both(g)?;
    for t in 1..=3 {
        let Some(h) = with_star(g, t)? else {
            return Ok(not_applicable("too many vertices"));
        };
        let (hmax, hmin) = ctx.both(&h)?;
        if hmax != max + 1 || hmin != min + 1 {
            return Ok(judge(
                false,
                format!("t={t}: Max={} Min={}", max + 1, min + 1),
                format!("t={t}: Max={hmax} Min={hmin}"),
            ));
        }
    }
    Ok(judge(true, "both values +1 for t=1,2,3", format!("Max={max} Min={min}")))
}

fn optimal_move_transfer(ctx: &Ctx, g: &Graph) -> CheckResult {
    if let Some(o) = forest_only(g) {
        return Ok(o);
    }
    for first in [Player::Max, Player::Min] {
        let base = ctx.solver.solve(g, first)?;
        for t in 1..=3 {
            let Some(h) = with_star(g, t)? else {
                return Ok(not_applicable("too many vertices"));
            };
            let grown = ctx.solver.solve(&h, first)?;
            if let Some(e) = base.optimal_moves.iter().find(|e| !grown.optimal_moves.contains(e)) {
                return Ok(judge(
                    false,
                    format!("{first} first, t={t}: {e} optimal"),
                    format!("{e} not optimal with the star"),
                ));
            }
        }
    }
    Ok(judge(true, "optimal first moves transfer for t=1,2,3", "ok"))
}

fn path_values(ctx: &Ctx, g: &Graph) -> CheckResult {
    let n = g.vertex_count();
    if !(g.is_connected() && g.is_linear_forest()) {
        return Ok(not_applicable("not a path"));
    }
    let max = ctx.max(g)?;
    let (lo, hi) = (3 * (n / 7), 3 * n.div_ceil(7));
    Ok(judge(lo <= max && max <= hi, format!("{lo} <= Max <= {hi}"), format!("Max={max}")))
}

fn regular_lower(ctx: &Ctx, g: &Graph) -> CheckResult {
    let n = g.vertex_count();
    let r = match g.regular_degree() {
        Some(r) if r >= 1 && g.is_connected() => r,
        _ => return Ok(not_applicable("not connected and regular")),
    };
    let max = ctx.max(g)?;
    Ok(judge(
        (4 * r - 3) * max + 2 >= r * n,
        format!("{}*Max >= {}", 4 * r - 3, (r * n).saturating_sub(2)),
        format!("Max={max} r={r}"),
    ))
}

fn realizable_pairs(ctx: &Ctx, inst: &Instance) -> CheckResult {
    let expected = match label_atom(&inst.label) {
        Some(("clique_pendant", p)) if p.len() == 1 => (p[0], p[0] - 1),
        Some(("K_minusPM", p)) if p.len() == 1 => (2 * p[0], 2 * p[0] + 1),
        Some(("twin_cliques", p)) if p.len() == 1 => (2 * p[0] - 1, 2 * p[0]),
        Some(("complete", p)) if p.len() == 1 && p[0] % 2 == 0 => (p[0] / 2, p[0] / 2),
        _ => return Ok(not_applicable("no known pair for this label")),
    };
    let (max, min) = ctx.both(&inst.graph)?;
    Ok(judge(
        (max, min) == expected,
        format!("({}, {})", expected.0, expected.1),
        format!("({max}, {min})"),
    ))
}

fn isolated_edge_drop_two(ctx: &Ctx, inst: &Instance) -> CheckResult {
    let (player, r) = match label_atom(&inst.label) {
        Some(("rK2_C6", p)) if p == [1] => (Player::Max, 1),
        Some(("rK2_C6", p)) if p == [2] => (Player::Min, 2),
        _ => return Ok(not_applicable("only rK2_C6:1 and rK2_C6:2")),
    };
    let g = &inst.graph;
    // vertex 0 ends one of the r isolated edges
    debug_assert!(r >= 1 && g.degree(0) == 1);
    let whole = ctx.solver.value(g, player)?;
    let less = ctx.solver.value(&g.delete_vertex(0).map_err(|e| e.to_string())?, player)?;
    Ok(judge(
        less + 2 == whole,
        format!("{player}(G-v) = {player}(G) - 2"),
        format!("{player}(G)={whole} {player}(G-v)={less}"),
    ))
}

fn krr_product_pm(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    let alpha = matching_number(g);
    let half = g.vertex_count() / 2;
    Ok(judge(
        g.vertex_count().is_multiple_of(2) && max == half && min == half && alpha == half,
        format!("Max=Min=alpha'={half}"),
        format!("Max={max} Min={min} alpha'={alpha}"),
    ))
}

fn paw_product_no_pm(ctx: &Ctx, g: &Graph) -> CheckResult {
    let (max, min) = ctx.both(g)?;
    let half = g.vertex_count() / 2;
    Ok(judge(
        max < half && min < half,
        format!("Max < {half} and Min < {half}"),
        format!("Max={max} Min={min}"),
    ))
}

/// Max players used against the `G_k` strategy.
fn baseline_max_suite(n: usize, seed: u64) -> Vec<Box<dyn Strategy + Send>> {
    let mut suite: Vec<Box<dyn Strategy + Send>> = vec![
        Box::new(strategies::GreedyFirst),
        Box::new(strategies::MaxMinDegree),
        Box::new(strategies::MaxGreedyMatching),
    ];
    suite.extend((0..20).map(|i| Box::new(strategies::RandomMove::new(seed + i)) as Box<dyn Strategy + Send>));
    if n <= 16 {
        suite.push(Box::new(strategies::Exact::default()));
    }
    suite
}

fn gk_strategy_bound(ctx: &Ctx, inst: &Instance) -> CheckResult {
    let g = &inst.graph;
    if let Some(("cubic_tree", p)) = label_atom(&inst.label) {
        let k = p[0];
        let alpha = matching_number(g);
        let bound = (1usize << k) - 1;
        return Ok(judge(alpha <= bound, format!("alpha'(T_{k}) <= {bound}"), format!("alpha'={alpha}")));
    }
    let k = match (0..=1).find(|&k| g.vertex_count() == 18 * (1 << k) - 2) {
        Some(k) if canonical_certificate(g) == canonical_certificate(&crate::construct::g_k(k).unwrap()) => k,
        _ => return Ok(not_applicable("not G_0 or G_1")),
    };
    let bound = 7 * (1usize << k) - 1;
    let mut worst = (0, String::new());
    for mut max in baseline_max_suite(g.vertex_count(), ctx.seed) {
        for first in [Player::Max, Player::Min] {
            let t = play(g, first, max.as_mut(), &mut MinGk::default()).map_err(|e| e.to_string())?;
            if t.final_size >= worst.0 {
                worst = (t.final_size, format!("{} vs min_gk, {first} first", max.name()));
            }
        }
    }
    Ok(judge(
        worst.0 <= bound,
        format!("final <= {bound}"),
        format!("worst final {} ({})", worst.0, worst.1),
    ))
}

fn gadget_h_values(ctx: &Ctx, g: &Graph) -> CheckResult {
    if canonical_certificate(g) != canonical_certificate(&gadget_h()) {
        return Ok(not_applicable("not gadget_H"));
    }
    let (max, min) = ctx.both(g)?;
    Ok(judge((max, min) == (6, 6), "Max=6 Min=6", format!("Max={max} Min={min}")))
}

fn run_one(id: &str, ctx: &Ctx, inst: &Instance) -> CheckResult {
    let g = &inst.graph;
    match id {
        "diff_le_one" => diff_le_one(ctx, g),
        "monotone_delete" => monotone_delete(ctx, g),
        "delete_drop_le2" => delete_drop_le2(ctx, g),
        "trivial_bounds" => trivial_bounds(ctx, g),
        "lower_two_thirds" => lower_two_thirds(ctx, g),
        "upper_mu" => upper_mu(ctx, g),
        "compatible_matching_equality" => compatible_matching_equality(ctx, g),
        "split_ceiling" => split_ceiling(ctx, g),
        "edge_extremal_k1" => edge_extremal_k1(ctx, inst),
        "matching_lemmas" => matching_lemmas(ctx, g),
        "forest_three_quarters" => forest_three_quarters(ctx, g),
        "forest_min_le_max" => forest_min_le_max(ctx, g),
        "star_addition" => star_addition(ctx, g),
        "optimal_move_transfer" => optimal_move_transfer(ctx, g),
        "path_values" => path_values(ctx, g),
        "regular_lower" => regular_lower(ctx, g),
        "realizable_pairs" => realizable_pairs(ctx, inst),
        "isolated_edge_drop_two" => isolated_edge_drop_two(ctx, inst),
        "krr_product_pm" => krr_product_pm(ctx, g),
        "paw_product_no_pm" => paw_product_no_pm(ctx, g),
        "gk_strategy_bound" => gk_strategy_bound(ctx, inst),
        "gadget_H_values" => gadget_h_values(ctx, g),
        _ => unreachable!("ids are validated before running"),
    }
}

/// Runs check `id` over `instances`.
pub fn run_check(id: &str, instances: &[Instance], opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let info = check_info(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    let start = Instant::now();
    let ctx = Ctx {
        solver: Solver::new(SolverConfig::with_mode(opts.mode)),
        seed: opts.seed,
    };
    let next = AtomicUsize::new(0);
    let records = Mutex::new(Vec::with_capacity(instances.len()));
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(inst) = instances.get(i) else { break };
        let outcome = run_one(info.id, &ctx, inst).unwrap_or_else(|err| Outcome {
            applicable: true,
            pass: false,
            expected: "check completes".into(),
            actual: format!("error: {err}"),
        });
        let rec = Record {
            check: info.id.to_string(),
            label: inst.label.clone(),
            graph6: emit_graph6(&inst.graph),
            expected: outcome.expected,
            actual: outcome.actual,
            applicable: outcome.applicable,
            pass: outcome.pass,
        };
        records.lock().unwrap().push(rec);
    };
    let jobs = opts.jobs.max(1).min(instances.len().max(1));
    if jobs == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(work);
            }
        });
    }
    let mut records = records.into_inner().unwrap();
    records.sort_by(|a, b| (&a.graph6, &a.label).cmp(&(&b.graph6, &b.label)));
    Ok(Report {
        check: info.id.to_string(),
        instances: instances.len(),
        applicable: records.iter().filter(|r| r.applicable).count(),
        records,
        runtime: start.elapsed(),
        unit: "instances",
    })
}

/// Runs check `id` over a corpus spec, or the check's default corpus.
pub fn run_check_spec(id: &str, corpus_spec: Option<&str>, opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let info = check_info(id).ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    let spec = corpus_spec.unwrap_or(info.default_corpus);
    let corpora = corpus::parse_corpora(spec, opts.seed)?;
    let mut instances = Vec::new();
    for c in &corpora {
        instances.extend(c.instances()?);
    }
    let mut report = run_check(id, &instances, opts)?;
    if corpora.iter().all(|c| c.is_classes()) {
        report.unit = "classes";
    }
    Ok(report)
}

/// Re-runs check `id` on a single graph6 witness and reports whether it
/// still fails.
pub fn reproduces(id: &str, graph6: &str, opts: &VerifyOptions) -> Result<bool, VerifyError> {
    let g = crate::graph6::parse_graph6(graph6).map_err(|e| {
        VerifyError::Corpus(CorpusError::Spec {
            spec: graph6.to_string(),
            reason: e.to_string(),
        })
    })?;
    let inst = Instance {
        label: "witness".into(),
        graph: g,
    };
    Ok(!run_check(id, &[inst], opts)?.passed())
}
