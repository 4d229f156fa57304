use std::collections::HashMap;

use crate::cover::IntegerCover;
use crate::error::{Error, Result};
use crate::grid::{enumerate_candidate_hyperplanes, Grid, GridShape};

const STATE_CAP: usize = 5_000_000;

/// Exhaustive minimum k-cover, independent of the branch-and-bound solver.
///
/// Memoised recursion over vectors of unmet demand: the first deficient
/// point must lie on some hyperplane of any cover, so
/// `g(s) = 1 + min_{H ∋ p} g(s - H)`. Uses the unpruned candidate set.
/// Returns `None` when the minimum exceeds `max_cardinality`.
pub fn brute_force_cover(
    shape: GridShape,
    k: u32,
    max_cardinality: u64,
) -> Result<Option<IntegerCover>> {
    if k > u32::from(u8::MAX) {
        return Err(Error::SearchTooLarge(format!(
            "k = {k} too large for exhaustive search"
        )));
    }
    let grid = Grid::new(shape);
    let lines = enumerate_candidate_hyperplanes(shape, false);
    let incidence: Vec<Vec<usize>> = lines.iter().map(|h| grid.incidence(h)).collect();
    let mut through = vec![Vec::new(); grid.len()];
    for (j, pts) in incidence.iter().enumerate() {
        for &p in pts {
            through[p].push(j);
        }
    }
    let mut dp = Dp {
        incidence: &incidence,
        through: &through,
        memo: HashMap::new(),
    };
    let start = vec![k as u8; grid.len()];
    let best = dp.solve(&start)?;
    if u64::from(best) > max_cardinality {
        return Ok(None);
    }
    let mut cover = IntegerCover::new(shape, k);
    let mut state = start;
    while let Some(&(_, Some(j))) = dp.memo.get(&state) {
        cover.add(lines[j].clone(), 1)?;
        state = dp.step(&state, j);
    }
    Ok(Some(cover))
}

struct Dp<'a> {
    incidence: &'a [Vec<usize>],
    through: &'a [Vec<usize>],
    memo: HashMap<Vec<u8>, (u32, Option<usize>)>,
}

impl Dp<'_> {
    fn step(&self, state: &[u8], j: usize) -> Vec<u8> {
        let mut next = state.to_vec();
        for &p in &self.incidence[j] {
            next[p] = next[p].saturating_sub(1);
        }
        next
    }

    fn solve(&mut self, state: &[u8]) -> Result<u32> {
        if let Some(&(v, _)) = self.memo.get(state) {
            return Ok(v);
        }
        let Some(p) = state.iter().position(|&r| r > 0) else {
            self.memo.insert(state.to_vec(), (0, None));
            return Ok(0);
        };
        if self.memo.len() >= STATE_CAP {
            return Err(Error::SearchTooLarge(format!(
                "more than {STATE_CAP} demand states"
            )));
        }
        let mut best = (u32::MAX, None);
        for &j in &self.through[p] {
            let next = self.step(state, j);
            let v = self.solve(&next)? + 1;
            if v < best.0 {
                best = (v, Some(j));
            }
        }
        self.memo.insert(state.to_vec(), best);
        Ok(best.0)
    }
}
