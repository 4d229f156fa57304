//! Exact fractional covering LP for `T_d(n)` and its point-mass dual.

mod simplex;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub(crate) use simplex::{solve as solve_program, CoveringProgram};

use crate::cover::{FractionalCover, MassCertificate};
use crate::error::{Error, Result};
use crate::grid::{CandidateSet, GridPoint, GridShape, Hyperplane};
use crate::rational::{self, int, Rational};

/// Covering LP: one column per candidate hyperplane, one row per point.
#[derive(Clone, Debug)]
pub struct CoverLp {
    shape: GridShape,
    points: Vec<GridPoint>,
    candidates: Vec<Hyperplane>,
    incidence: Vec<Vec<usize>>,
    demand: Vec<Rational>,
}

impl CoverLp {
    pub fn from_candidates(candidates: &CandidateSet) -> Self {
        CoverLp {
            shape: candidates.shape(),
            points: candidates.grid().points().to_vec(),
            candidates: candidates.hyperplanes().to_vec(),
            incidence: candidates.incidences().to_vec(),
            demand: vec![int(1); candidates.grid().len()],
        }
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn candidates(&self) -> &[Hyperplane] {
        &self.candidates
    }

    /// Row indices (points) of column `j`.
    pub fn column(&self, j: usize) -> &[usize] {
        &self.incidence[j]
    }

    pub fn demand(&self) -> &[Rational] {
        &self.demand
    }

    /// Replaces the uniform unit demand.
    pub fn with_demand(mut self, demand: Vec<Rational>) -> Result<Self> {
        if demand.len() != self.points.len() {
            return Err(Error::DimensionMismatch {
                expected: self.points.len(),
                found: demand.len(),
            });
        }
        self.demand = demand;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.points.len()
    }

    pub fn columns(&self) -> usize {
        self.candidates.len()
    }

    /// True iff `p` lies on candidate `j`.
    pub fn incidence(&self, p: usize, j: usize) -> bool {
        self.incidence[j].binary_search(&p).is_ok()
    }
}

pub fn build_cover_lp(shape: GridShape, prune: bool) -> CoverLp {
    CoverLp::from_candidates(&CandidateSet::build(shape, prune))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LpSolution {
    #[serde(serialize_with = "text")]
    pub optimum: Rational,
    pub primal: FractionalCover,
    pub dual: MassCertificate,
    pub status: LpStatus,
}

fn text<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    rational::serde_text::serialize(value, s)
}

/// Solves the LP exactly. The returned primal and dual certify each other:
/// the primal objective equals the dual objective `Σ demand(p)·mass(p)`.
pub fn solve_lp(lp: &CoverLp) -> Result<LpSolution> {
    let program = CoveringProgram {
        rows: lp.rows(),
        columns: lp
            .incidence
            .iter()
            .map(|pts| pts.iter().map(|&p| (p, 1)).collect())
            .collect(),
        costs: vec![int(1); lp.columns()],
        demand: lp.demand.clone(),
    };
    let sol = solve_program(&program)?;
    let mut primal = FractionalCover::new(lp.shape);
    for (h, w) in lp.candidates.iter().zip(&sol.primal) {
        primal.add(h.clone(), w.clone())?;
    }
    let mut dual = MassCertificate::new(lp.shape);
    for (p, y) in lp.points.iter().zip(&sol.dual) {
        dual.set(p.clone(), y.clone())?;
    }
    let dual_objective: Rational = sol.dual.iter().zip(&lp.demand).map(|(y, b)| y * b).sum();
    debug_assert_eq!(primal.total_weight(), sol.objective);
    debug_assert_eq!(dual_objective, sol.objective);
    Ok(LpSolution {
        optimum: sol.objective,
        primal,
        dual,
        status: LpStatus::Optimal,
    })
}

/// `f*(n, d)`: build with dominance pruning, then solve.
pub fn f_star(shape: GridShape) -> Result<LpSolution> {
    solve_lp(&build_cover_lp(shape, true))
}

/// Value of `v_i` with the index-zero entry fixed at zero.
fn entry(v: &[i64], i: usize) -> i64 {
    if i == 0 {
        0
    } else {
        v[i - 1]
    }
}

/// Checks `α_r + β_s + γ_t >= n` for every `r + s + t = 2k - 2` with
/// `0 <= r, s, t <= k - 1`, index zero standing for a line of multiplicity
/// `k` or more (absent, so contributing zero).
pub(crate) fn check_restricted_constraints(
    alpha: &[i64],
    beta: &[i64],
    gamma: &[i64],
    n: u32,
    k: u32,
) -> Result<()> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "restricted program needs k >= 2, got {k}"
        )));
    }
    let len = (k - 1) as usize;
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if v.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
        if let Some(x) = v.iter().find(|&&x| x < 0) {
            return Err(Error::ConstraintViolated(format!(
                "{name} has negative entry {x}"
            )));
        }
    }
    let top = 2 * len;
    for r in 0..=len {
        for s in 0..=len {
            let Some(t) = top.checked_sub(r + s) else {
                continue;
            };
            if t > len {
                continue;
            }
            let lhs = entry(alpha, r) + entry(beta, s) + entry(gamma, t);
            if lhs < i64::from(n) {
                return Err(Error::ConstraintViolated(format!(
                    "alpha_{r} + beta_{s} + gamma_{t} = {lhs} < {n}"
                )));
            }
        }
    }
    Ok(())
}

/// Scales an integer solution of the restricted standard-line program on
/// `T_2(n)` down to a fractional cover of `T_2(k)`: the line `x = k-1-i`
/// gets `α_i / n`, `y = k-1-i` gets `β_i / n` and `x + y = i` gets `γ_i / n`.
/// The result is checked point by point against the covering constraints.
pub fn scaled_dual_from_ip(
    alpha: &[i64],
    beta: &[i64],
    gamma: &[i64],
    n: u32,
    k: u32,
) -> Result<FractionalCover> {
    check_restricted_constraints(alpha, beta, gamma, n, k)?;
    let shape = GridShape::new(k, 2)?;
    let scale = Rational::new(One::one(), n.into());
    let mut cover = FractionalCover::new(shape);
    for i in 1..k {
        let idx = (i - 1) as usize;
        let w = |v: &[i64]| Rational::from_integer(v[idx].into()) * &scale;
        cover.add(Hyperplane::axis(2, 0, k - 1 - i), w(alpha))?;
        cover.add(Hyperplane::axis(2, 1, k - 1 - i), w(beta))?;
        cover.add(Hyperplane::diagonal(2, i), w(gamma))?;
    }
    for p in crate::grid::enumerate_points(shape) {
        let got = cover.weight_at(&p);
        if got < Rational::one() {
            return Err(Error::ConstraintViolated(format!(
                "point {p} of T_2({k}) covered with weight {got} < 1"
            )));
        }
    }
    Ok(cover)
}

/// Complementary slackness between the primal cover and dual masses of a
/// unit-demand solution: positive-weight columns carry mass exactly one and
/// positive-mass points are covered exactly once.
pub fn complementary_slackness_holds(lp: &CoverLp, sol: &LpSolution) -> bool {
    let columns_tight = lp
        .candidates
        .iter()
        .all(|h| sol.primal.weight(h).is_zero() || sol.dual.mass_on(h) == Rational::one());
    let rows_tight = sol
        .dual
        .masses()
        .iter()
        .all(|(p, m)| !m.is_positive() || sol.primal.weight_at(p) == Rational::one());
    columns_tight && rows_tight
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn shape(n: u32, d: u32) -> GridShape {
        GridShape::new(n, d).unwrap()
    }

    #[test]
    fn lp_dimensions() {
        let lp = build_cover_lp(shape(2, 2), true);
        assert_eq!((lp.rows(), lp.columns()), (3, 3));
        let lp = build_cover_lp(shape(4, 2), true);
        assert_eq!(lp.rows(), 10);
        // lines through >= 2 points of T_2(4), counted independently
        let pts = crate::grid::enumerate_points(shape(4, 2));
        let mut lines = std::collections::BTreeSet::new();
        for a in &pts {
            for b in &pts {
                if a < b {
                    let (p, q) = (a.coords(), b.coords());
                    let u = i64::from(q[1]) - i64::from(p[1]);
                    let v = i64::from(p[0]) - i64::from(q[0]);
                    let c = u * i64::from(p[0]) + v * i64::from(p[1]);
                    lines.insert(crate::grid::normalize_hyperplane(&[u, v], c).unwrap());
                }
            }
        }
        assert_eq!(lp.columns(), lines.len());
        for p in 0..lp.rows() {
            for j in 0..lp.columns() {
                assert_eq!(
                    lp.incidence(p, j),
                    lp.candidates()[j].contains(&lp.points()[p])
                );
            }
        }
    }

    #[test]
    fn cover_333_planes_are_columns() {
        let lp = build_cover_lp(shape(3, 3), true);
        assert_eq!(lp.rows(), 10);
        for h in crate::constructions::cover_333().weights().keys() {
            assert!(lp.candidates().contains(h), "{h}");
        }
    }

    #[test]
    fn small_optima() {
        let sol = f_star(shape(2, 2)).unwrap();
        assert_eq!(sol.optimum, frac(3, 2));
        assert_eq!(sol.primal.total_weight(), sol.optimum);
        assert_eq!(sol.dual.total_mass(), sol.optimum);
        assert_eq!(f_star(shape(2, 3)).unwrap().optimum, frac(4, 3));
        assert_eq!(f_star(shape(1, 3)).unwrap().optimum, int(1));
    }

    #[test]
    fn scaled_dual_examples() {
        let c = scaled_dual_from_ip(&[2], &[2], &[2], 4, 2).unwrap();
        assert_eq!(c.total_weight(), frac(3, 2));
        assert!(matches!(
            scaled_dual_from_ip(&[0], &[0], &[0], 4, 2),
            Err(Error::ConstraintViolated(_))
        ));
        let c = scaled_dual_from_ip(&[3, 3], &[3, 3], &[3, 3], 4, 3).unwrap();
        assert_eq!(c.total_weight(), frac(18, 4));
        assert!(c.total_weight() >= frac(9, 4));
        assert!(scaled_dual_from_ip(&[3], &[3, 3], &[3, 3], 4, 3).is_err());
    }

    #[test]
    fn json_shape() {
        let sol = f_star(shape(2, 2)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&sol).unwrap();
        assert_eq!(v["optimum"], "3/2");
        assert_eq!(v["status"], "optimal");
        assert!(v["primal"]["weights"].is_array());
        assert!(v["dual"]["masses"].is_array());
    }
}
