//! Revised dual simplex over exact rationals for programs of the form
//! `min c·x  s.t.  A x >= b,  x >= 0` with `c >= 0`.
//!
//! Surplus variables give an initial basis that is dual feasible whatever
//! the sign of `b`, so no phase one is needed. Bland's smallest-index rule
//! is applied to both the leaving row and the entering column.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub(crate) struct CoveringProgram {
    pub rows: usize,
    /// Sparse columns: `(row, coefficient)`.
    pub columns: Vec<Vec<(usize, i64)>>,
    pub costs: Vec<Rational>,
    pub demand: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub(crate) struct SimplexSolution {
    pub objective: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per row; nonnegative, with `y·A_j <= c_j`.
    pub dual: Vec<Rational>,
    #[allow(dead_code)]
    pub pivots: usize,
}

fn axpy(acc: &mut Rational, x: &Rational, coeff: i64) {
    match coeff {
        1 => *acc += x,
        -1 => *acc -= x,
        c => *acc += x * Rational::from_integer(c.into()),
    }
}

pub(crate) fn solve(program: &CoveringProgram) -> Result<SimplexSolution> {
    let m = program.rows;
    let nc = program.columns.len();
    let total = nc + m;
    debug_assert!(program.costs.iter().all(|c| !c.is_negative()));

    // basis[i] = variable basic in row i; surplus of row i is variable nc + i.
    let mut basis: Vec<usize> = (nc..total).collect();
    let mut position: Vec<Option<usize>> = vec![None; total];
    for (i, &v) in basis.iter().enumerate() {
        position[v] = Some(i);
    }
    let mut binv: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); m];
            row[i] = -Rational::one();
            row
        })
        .collect();
    let mut x_b: Vec<Rational> = program.demand.iter().map(|b| -b.clone()).collect();
    let mut reduced: Vec<Rational> = program
        .costs
        .iter()
        .cloned()
        .chain(std::iter::repeat_with(Rational::zero).take(m))
        .collect();
    let mut pivots = 0usize;

    loop {
        let leaving_row = (0..m)
            .filter(|&i| x_b[i].is_negative())
            .min_by_key(|&i| basis[i]);
        let Some(r) = leaving_row else { break };

        // Row r of B^-1 A for every variable.
        let rho = &binv[r];
        let mut alpha: Vec<Rational> = Vec::with_capacity(total);
        for col in &program.columns {
            let mut acc = Rational::zero();
            for &(i, a) in col {
                if !rho[i].is_zero() {
                    axpy(&mut acc, &rho[i], a);
                }
            }
            alpha.push(acc);
        }
        alpha.extend(rho.iter().map(|v| -v.clone()));

        let mut entering: Option<(usize, Rational)> = None;
        for j in 0..total {
            if position[j].is_some() || !alpha[j].is_negative() {
                continue;
            }
            let ratio = &reduced[j] / -&alpha[j];
            match &entering {
                Some((_, best)) if ratio >= *best => {}
                _ => entering = Some((j, ratio)),
            }
        }
        let Some((q, _)) = entering else {
            return Err(Error::Infeasible);
        };

        // Entering column u = B^-1 a_q.
        let u: Vec<Rational> = if q < nc {
            binv.iter()
                .map(|row| {
                    let mut acc = Rational::zero();
                    for &(i, a) in &program.columns[q] {
                        if !row[i].is_zero() {
                            axpy(&mut acc, &row[i], a);
                        }
                    }
                    acc
                })
                .collect()
        } else {
            binv.iter().map(|row| -row[q - nc].clone()).collect()
        };

        let pivot = u[r].clone();
        let pivot_row: Vec<Rational> = binv[r].iter().map(|v| v / &pivot).collect();
        let theta = &x_b[r] / &pivot;
        for i in 0..m {
            if i == r || u[i].is_zero() {
                continue;
            }
            let f = &u[i];
            for (dst, src) in binv[i].iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst -= f * src;
                }
            }
            x_b[i] -= f * &theta;
        }
        binv[r] = pivot_row;
        x_b[r] = theta;

        let step = &reduced[q] / &alpha[q];
        if !step.is_zero() {
            for j in 0..total {
                if !alpha[j].is_zero() {
                    let delta = &step * &alpha[j];
                    reduced[j] -= delta;
                }
            }
        }
        reduced[q] = Rational::zero();

        let leaving = basis[r];
        position[leaving] = None;
        position[q] = Some(r);
        basis[r] = q;
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); nc];
    for (i, &v) in basis.iter().enumerate() {
        if v < nc {
            primal[v] = x_b[i].clone();
        }
    }
    let dual: Vec<Rational> = reduced[nc..].to_vec();
    let objective = primal.iter().zip(&program.costs).map(|(x, c)| x * c).sum();
    Ok(SimplexSolution {
        objective,
        primal,
        dual,
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ones(k: usize) -> Vec<Rational> {
        vec![int(1); k]
    }

    #[test]
    fn triangle_vertex_cover_relaxation() {
        // rows = 3 points, columns = 3 lines each covering two points
        let program = CoveringProgram {
            rows: 3,
            columns: vec![
                vec![(0, 1), (1, 1)],
                vec![(1, 1), (2, 1)],
                vec![(0, 1), (2, 1)],
            ],
            costs: ones(3),
            demand: ones(3),
        };
        let sol = solve(&program).unwrap();
        assert_eq!(sol.objective, frac(3, 2));
        assert_eq!(sol.dual.iter().sum::<Rational>(), frac(3, 2));
        assert!(sol.dual.iter().all(|y| !y.is_negative()));
    }

    #[test]
    fn negative_demands_and_bounds() {
        // min x0 + x1 s.t. x0 + x1 >= 5, -x0 >= -2, x1 >= 1
        let program = CoveringProgram {
            rows: 3,
            columns: vec![vec![(0, 1), (1, -1)], vec![(0, 1), (2, 1)]],
            costs: ones(2),
            demand: vec![int(5), int(-2), int(1)],
        };
        let sol = solve(&program).unwrap();
        assert_eq!(sol.objective, int(5));
        assert!(sol.primal[0] <= int(2));
        assert!(sol.primal[1] >= int(1));
        let dual_obj: Rational = sol
            .dual
            .iter()
            .zip(&program.demand)
            .map(|(y, b)| y * b)
            .sum();
        assert_eq!(dual_obj, int(5));
    }

    #[test]
    fn infeasible_row_detected() {
        let program = CoveringProgram {
            rows: 2,
            columns: vec![vec![(0, 1)]],
            costs: ones(1),
            demand: ones(2),
        };
        assert!(matches!(solve(&program), Err(Error::Infeasible)));
    }

    #[test]
    fn zero_demand_is_free() {
        let program = CoveringProgram {
            rows: 2,
            columns: vec![vec![(0, 1), (1, 1)]],
            costs: ones(1),
            demand: vec![int(0), int(0)],
        };
        let sol = solve(&program).unwrap();
        assert_eq!(sol.objective, int(0));
        assert_eq!(sol.pivots, 0);
    }
}
