use std::collections::BTreeSet;

use itertools::Itertools;

use super::{hyperplane_through, normalize_hyperplane, Grid, GridPoint, GridShape, Hyperplane};

/// Finite candidate hyperplanes for a grid together with their incidence.
///
/// Every hyperplane spanned by `d` affinely independent grid points is
/// included; any point lying on none of them (only possible for `n = 1`)
/// receives the fallback `x_1 = p_1`. Rotating an arbitrary hyperplane about
/// the affine hull of its grid points until it meets another grid point only
/// enlarges its covered set, so every hyperplane is dominated by a member.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    grid: Grid,
    hyperplanes: Vec<Hyperplane>,
    incidence: Vec<Vec<usize>>,
}

impl CandidateSet {
    pub fn build(shape: GridShape, prune_dominated: bool) -> Self {
        Self::from_grid(Grid::new(shape), prune_dominated)
    }

    pub fn from_grid(grid: Grid, prune_dominated: bool) -> Self {
        let spanned = spanned_hyperplanes(grid.points(), grid.shape().dim());
        let mut set: BTreeSet<Hyperplane> = spanned;
        let mut covered = vec![false; grid.len()];
        for h in &set {
            for i in grid.incidence(h) {
                covered[i] = true;
            }
        }
        for (i, p) in grid.points().iter().enumerate() {
            if !covered[i] {
                let fallback = Hyperplane::axis(p.dim(), 0, p.coords()[0]);
                for j in grid.incidence(&fallback) {
                    covered[j] = true;
                }
                set.insert(fallback);
            }
        }
        let mut hyperplanes: Vec<Hyperplane> = set.into_iter().collect();
        let mut incidence: Vec<Vec<usize>> =
            hyperplanes.iter().map(|h| grid.incidence(h)).collect();
        if prune_dominated {
            let keep = undominated(&incidence, grid.len());
            let mut k = keep.iter();
            hyperplanes.retain(|_| *k.next().unwrap());
            let mut k = keep.iter();
            incidence.retain(|_| *k.next().unwrap());
        }
        CandidateSet {
            grid,
            hyperplanes,
            incidence,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn shape(&self) -> GridShape {
        self.grid.shape()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Point indices on candidate `i`.
    pub fn incidence(&self, i: usize) -> &[usize] {
        &self.incidence[i]
    }

    pub fn incidences(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// For each point, the candidate indices through it (ascending).
    pub fn point_to_candidates(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.grid.len()];
        for (h, pts) in self.incidence.iter().enumerate() {
            for &p in pts {
                out[p].push(h);
            }
        }
        out
    }

    pub fn position(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.binary_search(h).ok()
    }
}

/// Candidate hyperplanes of `shape` in canonical order.
pub fn enumerate_candidate_hyperplanes(shape: GridShape, prune_dominated: bool) -> Vec<Hyperplane> {
    CandidateSet::build(shape, prune_dominated).hyperplanes
}

fn spanned_hyperplanes(points: &[GridPoint], d: usize) -> BTreeSet<Hyperplane> {
    let mut out = BTreeSet::new();
    if points.len() < d {
        return out;
    }
    if d == 2 {
        for (p, q) in points.iter().tuple_combinations() {
            let (px, py) = (i64::from(p.coords()[0]), i64::from(p.coords()[1]));
            let (qx, qy) = (i64::from(q.coords()[0]), i64::from(q.coords()[1]));
            let (a, b) = (qy - py, px - qx);
            out.insert(normalize_hyperplane(&[a, b], a * px + b * py).expect("distinct points"));
        }
        return out;
    }
    for subset in points.iter().combinations(d) {
        if let Ok(Some(h)) = hyperplane_through(&subset) {
            out.insert(h);
        }
    }
    out
}

/// `keep[i]` is false iff the covered set of `i` is a strict subset of
/// another candidate's covered set.
fn undominated(incidence: &[Vec<usize>], points: usize) -> Vec<bool> {
    let words = points.div_ceil(64);
    let bits: Vec<Vec<u64>> = incidence
        .iter()
        .map(|pts| {
            let mut b = vec![0u64; words];
            for &p in pts {
                b[p / 64] |= 1 << (p % 64);
            }
            b
        })
        .collect();
    (0..incidence.len())
        .map(|i| {
            !(0..incidence.len()).any(|j| {
                incidence[j].len() > incidence[i].len()
                    && bits[i].iter().zip(&bits[j]).all(|(a, b)| a & !b == 0)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{covered_points, enumerate_points, standard_hyperplanes};

    fn shape(n: u32, d: u32) -> GridShape {
        GridShape::new(n, d).unwrap()
    }

    /// Every line through two distinct points of a planar grid, by brute force.
    fn brute_lines(n: u32) -> BTreeSet<Hyperplane> {
        let pts = enumerate_points(shape(n, 2));
        let mut out = BTreeSet::new();
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                if i == j {
                    continue;
                }
                let (p, q) = (pts[i].coords(), pts[j].coords());
                let a = i64::from(q[1]) - i64::from(p[1]);
                let b = i64::from(p[0]) - i64::from(q[0]);
                let c = a * i64::from(p[0]) + b * i64::from(p[1]);
                out.insert(normalize_hyperplane(&[a, b], c).unwrap());
            }
        }
        out
    }

    #[test]
    fn two_by_two_triangle_has_three_lines() {
        let c = enumerate_candidate_hyperplanes(shape(2, 2), true);
        assert_eq!(c.len(), 3);
        for h in &c {
            assert_eq!(covered_points(h, shape(2, 2)).unwrap().len(), 2);
        }
    }

    #[test]
    fn single_point_fallback() {
        let c = enumerate_candidate_hyperplanes(shape(1, 2), true);
        assert_eq!(c, vec![Hyperplane::axis(2, 0, 0)]);
        let c = enumerate_candidate_hyperplanes(shape(1, 4), false);
        assert_eq!(c, vec![Hyperplane::axis(4, 0, 0)]);
    }

    #[test]
    fn unpruned_planar_matches_pair_oracle() {
        for n in 2..=6 {
            let got: BTreeSet<Hyperplane> = enumerate_candidate_hyperplanes(shape(n, 2), false)
                .into_iter()
                .collect();
            assert_eq!(got, brute_lines(n), "n={n}");
        }
        assert_eq!(brute_lines(3).len(), 9);
    }

    #[test]
    fn candidates_are_sorted_and_cover_everything() {
        for (n, d) in [
            (1, 1),
            (4, 1),
            (3, 2),
            (5, 2),
            (2, 3),
            (3, 3),
            (4, 3),
            (2, 4),
            (3, 4),
        ] {
            let set = CandidateSet::build(shape(n, d), true);
            assert!(set.hyperplanes().windows(2).all(|w| w[0] < w[1]));
            let through = set.point_to_candidates();
            assert!(through.iter().all(|t| !t.is_empty()), "n={n} d={d}");
        }
    }

    #[test]
    fn pruned_set_has_no_strictly_dominated_member() {
        for (n, d) in [(3, 2), (4, 2), (3, 3), (2, 4)] {
            let set = CandidateSet::build(shape(n, d), true);
            let sets: Vec<BTreeSet<usize>> = set
                .incidences()
                .iter()
                .map(|v| v.iter().copied().collect())
                .collect();
            for a in &sets {
                for b in &sets {
                    assert!(!(a.len() < b.len() && a.is_subset(b)));
                }
            }
        }
    }

    #[test]
    fn dominance_soundness_against_spanned_lines() {
        for n in 2..=6 {
            let s = shape(n, 2);
            let pruned = CandidateSet::build(s, true);
            let covers: Vec<BTreeSet<usize>> = pruned
                .incidences()
                .iter()
                .map(|v| v.iter().copied().collect())
                .collect();
            for h in brute_lines(n) {
                let mine: BTreeSet<usize> = pruned.grid().incidence(&h).into_iter().collect();
                assert!(covers.iter().any(|c| mine.is_subset(c)), "{h}");
            }
        }
    }

    #[test]
    fn every_pair_of_points_is_on_a_candidate() {
        for (n, d) in [(3, 2), (5, 2), (3, 3), (2, 5)] {
            let set = CandidateSet::build(shape(n, d), false);
            let k = set.grid().len();
            for a in 0..k {
                for b in (a + 1)..k {
                    assert!(set
                        .incidences()
                        .iter()
                        .any(|pts| pts.contains(&a) && pts.contains(&b)));
                }
            }
        }
    }

    #[test]
    fn standard_hyperplanes_are_candidates_when_grid_is_large() {
        for (n, d) in [(3, 2), (4, 2), (4, 3), (5, 3), (5, 4)] {
            let set = CandidateSet::build(shape(n, d), false);
            for s in standard_hyperplanes(shape(n, d)) {
                // x_i = n - 1 meets the grid in a single corner point only
                let spans = covered_points(&s.hyperplane, shape(n, d)).unwrap().len() >= 2;
                assert_eq!(
                    set.position(&s.hyperplane).is_some(),
                    spans,
                    "{} in T_{d}({n})",
                    s.hyperplane
                );
            }
        }
    }
}
