//! Minimum integer k-covers by branch-and-bound, an exhaustive oracle, and
//! the restricted standard-line integer program.

mod brute;
mod restricted;

pub use brute::brute_force_cover;
pub use restricted::{solve_restricted_ip, RestrictedIp};

use num_traits::Zero;
use serde::Serialize;

use crate::constructions::{
    block_cover, cover_k1_general, cover_k2_general, cover_k3_general, kcover_2d,
};
use crate::cover::IntegerCover;
use crate::error::{Error, Result};
use crate::grid::{CandidateSet, GridShape};
use crate::lp::{solve_program, CoveringProgram};
use crate::rational::{ceil_to_u64, int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_limit: u64,
    /// Look only for covers of at most this size; a hint, never trusted.
    pub initial_upper_bound: Option<u64>,
    pub use_lp_bound: bool,
}

impl SearchConfig {
    /// Residual LP bounds on in the plane, off in higher dimension.
    pub fn for_shape(shape: GridShape) -> Self {
        SearchConfig {
            node_limit: 10_000_000,
            initial_upper_bound: None,
            use_lp_bound: shape.d() <= 2,
        }
    }

    pub fn with_node_limit(mut self, node_limit: u64) -> Self {
        self.node_limit = node_limit.max(1);
        self
    }

    pub fn with_lp_bound(mut self, on: bool) -> Self {
        self.use_lp_bound = on;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub optimum: u64,
    pub proven: bool,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
    pub cover: IntegerCover,
}

/// Smallest k-cover produced by any applicable construction. `k` copies of
/// the `x_1 = i` family always work, so this never fails.
pub fn best_construction(shape: GridShape, k: u32) -> IntegerCover {
    let (n, d) = (shape.n(), shape.d());
    let mut options = Vec::new();
    let mut repeated = IntegerCover::new(shape, k);
    for h in cover_k1_general(shape).multiplicities().keys() {
        repeated.add(h.clone(), k).expect("same shape");
    }
    options.push(repeated);
    if k == 1 {
        options.push(cover_k1_general(shape));
    }
    if k == 2 {
        options.push(cover_k2_general(shape));
    }
    if k == 3 {
        if let Ok(c) = cover_k3_general(shape) {
            options.push(c);
        }
    }
    if d == 2 && (1..=4).contains(&k) && n >= 2 {
        if let Ok(c) = kcover_2d(n, k) {
            options.push(c);
        }
    }
    if let Ok(c) = block_cover(shape, k) {
        options.push(c);
    }
    options
        .into_iter()
        .map(|c| c.with_k(k))
        .min_by_key(|c| c.cardinality())
        .expect("at least one construction")
}

struct Search<'a> {
    lines: &'a [Vec<usize>],
    through: Vec<Vec<usize>>,
    /// Unmet demand per point; negative once over-covered.
    residual: Vec<i32>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Only covers of size `< bound` are of interest.
    bound: u64,
    nodes: u64,
    node_limit: u64,
    use_lp: bool,
    aborted: bool,
}

impl Search<'_> {
    fn cheap_bound(&self) -> u64 {
        let total: u64 = self.residual.iter().map(|&r| r.max(0) as u64).sum();
        if total == 0 {
            return 0;
        }
        let top = self.residual.iter().copied().max().unwrap_or(0).max(0) as u64;
        let cap = self
            .lines
            .iter()
            .enumerate()
            .filter(|(j, _)| !self.forbidden[*j])
            .map(|(_, pts)| pts.iter().filter(|&&p| self.residual[p] > 0).count() as u64)
            .max()
            .unwrap_or(0);
        if cap == 0 {
            return u64::MAX;
        }
        top.max(total.div_ceil(cap))
    }

    /// Ceiling of the residual covering LP over lines still allowed, or
    /// `u64::MAX` when some deficient point has no allowed line.
    fn lp_bound(&self) -> u64 {
        let rows: Vec<usize> = (0..self.residual.len())
            .filter(|&p| self.residual[p] > 0)
            .collect();
        if rows.is_empty() {
            return 0;
        }
        let mut row_of = vec![usize::MAX; self.residual.len()];
        for (i, &p) in rows.iter().enumerate() {
            row_of[p] = i;
        }
        let columns: Vec<Vec<(usize, i64)>> = self
            .lines
            .iter()
            .enumerate()
            .filter(|(j, _)| !self.forbidden[*j])
            .map(|(_, pts)| {
                pts.iter()
                    .filter(|&&p| row_of[p] != usize::MAX)
                    .map(|&p| (row_of[p], 1))
                    .collect::<Vec<_>>()
            })
            .filter(|c| !c.is_empty())
            .collect();
        let program = CoveringProgram {
            rows: rows.len(),
            costs: vec![int(1); columns.len()],
            columns,
            demand: rows.iter().map(|&p| int(self.residual[p].into())).collect(),
        };
        match solve_program(&program) {
            Ok(sol) => ceil_to_u64(&sol.objective),
            Err(_) => u64::MAX,
        }
    }

    fn apply(&mut self, j: usize, delta: i32) {
        for &p in &self.lines[j] {
            self.residual[p] += delta;
        }
    }

    fn run(&mut self) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.aborted = true;
            return;
        }
        let count = self.chosen.len() as u64;
        // pick the point with the largest residual demand, lowest index first
        let mut pick = None;
        let mut top = 0;
        for (p, &r) in self.residual.iter().enumerate() {
            if r > top {
                top = r;
                pick = Some(p);
            }
        }
        let Some(p) = pick else {
            if count < self.bound {
                self.bound = count;
                self.best = Some(self.chosen.clone());
            }
            return;
        };
        let cheap = self.cheap_bound();
        if cheap == u64::MAX || count + cheap >= self.bound {
            return;
        }
        if self.use_lp {
            let lp = self.lp_bound();
            if lp == u64::MAX || count + lp >= self.bound {
                return;
            }
        }
        let options: Vec<usize> = self.through[p]
            .iter()
            .copied()
            .filter(|&j| !self.forbidden[j])
            .collect();
        let mut banned = Vec::new();
        for j in options {
            self.chosen.push(j);
            self.apply(j, -1);
            self.run();
            self.apply(j, 1);
            self.chosen.pop();
            if self.aborted {
                break;
            }
            self.forbidden[j] = true;
            banned.push(j);
        }
        for j in banned {
            self.forbidden[j] = false;
        }
    }
}

/// `f(n, d, k)`: the minimum number of hyperplanes (with multiplicity)
/// covering every point of `T_d(n)` at least `k` times.
///
/// Depth-first branch-and-bound over the dominance-pruned candidate set.
/// At each node the point with the largest unmet demand is selected and the
/// hyperplanes through it are tried in canonical order; the `i`-th branch
/// forbids hyperplanes `1..i` for the rest of its subtree, so each multiset
/// is reached once. The incumbent starts at the best known construction.
pub fn f_int(shape: GridShape, k: u32, config: SearchConfig) -> Result<SearchResult> {
    if k == 0 {
        return Err(Error::Unsupported("k must be positive".into()));
    }
    let candidates = CandidateSet::build(shape, true);
    let seed = best_construction(shape, k);
    let mut nodes = 0;
    if let Some(hint) = config.initial_upper_bound {
        if hint < seed.cardinality() {
            let found = search(
                &candidates,
                k,
                hint + 1,
                config.node_limit,
                config.use_lp_bound,
            );
            nodes += found.nodes;
            match found.best {
                Some(cover) => {
                    return finish(&candidates, shape, k, cover, nodes, found.completed, config)
                }
                None if !found.completed => {
                    return Ok(SearchResult {
                        optimum: seed.cardinality(),
                        proven: false,
                        nodes_explored: nodes,
                        cover: seed,
                    })
                }
                None => {}
            }
        }
    }
    let found = search(
        &candidates,
        k,
        seed.cardinality(),
        config.node_limit.saturating_sub(nodes).max(1),
        config.use_lp_bound,
    );
    nodes += found.nodes;
    match found.best {
        Some(cover) => finish(&candidates, shape, k, cover, nodes, found.completed, config),
        None => Ok(SearchResult {
            optimum: seed.cardinality(),
            proven: found.completed,
            nodes_explored: nodes,
            cover: seed,
        }),
    }
}

fn finish(
    candidates: &CandidateSet,
    shape: GridShape,
    k: u32,
    chosen: Vec<usize>,
    nodes: u64,
    completed: bool,
    config: SearchConfig,
) -> Result<SearchResult> {
    let cover = to_cover(candidates, shape, k, &chosen);
    if completed || nodes >= config.node_limit {
        return Ok(SearchResult {
            optimum: cover.cardinality(),
            proven: completed,
            nodes_explored: nodes,
            cover,
        });
    }
    // found below the hint, keep improving from there
    let rest = search(
        candidates,
        k,
        cover.cardinality(),
        config.node_limit - nodes,
        config.use_lp_bound,
    );
    let total = nodes + rest.nodes;
    let cover = match rest.best {
        Some(better) => to_cover(candidates, shape, k, &better),
        None => cover,
    };
    Ok(SearchResult {
        optimum: cover.cardinality(),
        proven: rest.completed,
        nodes_explored: total,
        cover,
    })
}

fn to_cover(candidates: &CandidateSet, shape: GridShape, k: u32, chosen: &[usize]) -> IntegerCover {
    let mut cover = IntegerCover::new(shape, k);
    for &j in chosen {
        cover
            .add(candidates.hyperplanes()[j].clone(), 1)
            .expect("candidate of this shape");
    }
    cover
}

struct Outcome {
    best: Option<Vec<usize>>,
    nodes: u64,
    completed: bool,
}

fn search(candidates: &CandidateSet, k: u32, bound: u64, node_limit: u64, use_lp: bool) -> Outcome {
    let mut s = Search {
        lines: candidates.incidences(),
        through: candidates.point_to_candidates(),
        residual: vec![k as i32; candidates.grid().len()],
        forbidden: vec![false; candidates.len()],
        chosen: Vec::new(),
        best: None,
        bound,
        nodes: 0,
        node_limit,
        use_lp,
        aborted: false,
    };
    s.run();
    Outcome {
        best: s.best,
        nodes: s.nodes.min(node_limit),
        completed: !s.aborted,
    }
}

/// `⌈k · f*(n, d)⌉`, the LP lower bound on `f(n, d, k)`.
pub fn lp_lower_bound(shape: GridShape, k: u32) -> Result<u64> {
    let sol = crate::lp::f_star(shape)?;
    let scaled = sol.optimum * int(i64::from(k));
    debug_assert!(!scaled.is_zero());
    Ok(ceil_to_u64(&scaled))
}
