use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{solve_program, CoveringProgram};
use crate::rational::{int, Rational};

/// Optimal solution of the restricted standard-line program: nonnegative
/// integers `α_i, β_i, γ_i` (`1 <= i <= k-1`) minimising their sum subject to
/// `α_r + β_s + γ_t >= n` whenever `r + s + t = 2k - 2`, `0 <= r, s, t <= k-1`,
/// where an index of zero contributes nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedIp {
    pub n: u32,
    pub k: u32,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
}

impl RestrictedIp {
    pub fn optimum(&self) -> i64 {
        self.alpha.iter().chain(&self.beta).chain(&self.gamma).sum()
    }
}

/// Rows of the program as lists of variable indices; variable `3(i-1) + f`
/// is family `f` (α, β, γ) at index `i`.
fn constraint_rows(k: u32) -> Vec<Vec<usize>> {
    let len = (k - 1) as usize;
    let top = 2 * len;
    let mut rows = Vec::new();
    for r in 0..=len {
        for s in 0..=len {
            let Some(t) = top.checked_sub(r + s) else {
                continue;
            };
            if t > len {
                continue;
            }
            let row: Vec<usize> = [r, s, t]
                .iter()
                .enumerate()
                .filter(|(_, &i)| i > 0)
                .map(|(f, &i)| 3 * (i - 1) + f)
                .collect();
            rows.push(row);
        }
    }
    rows
}

struct Bnb {
    rows: Vec<Vec<usize>>,
    vars: usize,
    n: i64,
    best: Option<Vec<i64>>,
    best_value: i64,
}

impl Bnb {
    fn relax(&self, lower: &[i64], upper: &[Option<i64>]) -> Option<(Rational, Vec<Rational>)> {
        let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.vars];
        let mut demand = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                columns[v].push((i, 1));
            }
            demand.push(int(self.n));
        }
        let mut next = self.rows.len();
        for v in 0..self.vars {
            if lower[v] > 0 {
                columns[v].push((next, 1));
                demand.push(int(lower[v]));
                next += 1;
            }
            if let Some(u) = upper[v] {
                columns[v].push((next, -1));
                demand.push(int(-u));
                next += 1;
            }
        }
        let program = CoveringProgram {
            rows: next,
            costs: vec![int(1); self.vars],
            columns,
            demand,
        };
        solve_program(&program)
            .ok()
            .map(|s| (s.objective, s.primal))
    }

    fn run(&mut self, lower: &mut Vec<i64>, upper: &mut Vec<Option<i64>>) {
        let Some((value, x)) = self.relax(lower, upper) else {
            return;
        };
        let bound = value.ceil().to_integer().to_i64().expect("small objective");
        if bound >= self.best_value {
            return;
        }
        let Some(v) = x.iter().position(|xi| !xi.is_integer()) else {
            self.best_value = bound;
            self.best = Some(
                x.iter()
                    .map(|xi| xi.to_integer().to_i64().unwrap())
                    .collect(),
            );
            return;
        };
        let floor = x[v].floor().to_integer().to_i64().unwrap();
        let saved = (lower[v], upper[v]);
        lower[v] = floor + 1;
        self.run(lower, upper);
        lower[v] = saved.0;
        upper[v] = Some(floor);
        self.run(lower, upper);
        upper[v] = saved.1;
    }
}

/// Solves the restricted program exactly by LP-based branch-and-bound.
pub fn solve_restricted_ip(n: u32, k: u32) -> Result<RestrictedIp> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "restricted program needs k >= 2, got {k}"
        )));
    }
    let len = (k - 1) as usize;
    let vars = 3 * len;
    // every row has at least two nonzero indices, so ceil(n/2) everywhere is feasible
    let half = (i64::from(n) + 1) / 2;
    let mut bnb = Bnb {
        rows: constraint_rows(k),
        vars,
        n: i64::from(n),
        best: None,
        best_value: half * vars as i64 + 1,
    };
    bnb.run(&mut vec![0; vars], &mut vec![None; vars]);
    let x = bnb.best.unwrap_or_else(|| vec![half; vars]);
    debug_assert!(x.iter().all(|v| !v.is_negative()));
    let pick = |f: usize| (0..len).map(|i| x[3 * i + f]).collect::<Vec<_>>();
    let ip = RestrictedIp {
        n,
        k,
        alpha: pick(0),
        beta: pick(1),
        gamma: pick(2),
    };
    crate::lp::check_restricted_constraints(&ip.alpha, &ip.beta, &ip.gamma, n, k)?;
    Ok(ip)
}
