//! Lattice points of the triangular grid `T_d(n)` and the hyperplanes that
//! cover them.

mod candidates;
mod hyperplane;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use candidates::{enumerate_candidate_hyperplanes, CandidateSet};
pub use hyperplane::{
    hyperplane_through, normalize_hyperplane, standard_hyperplanes, Direction, Hyperplane,
    StandardHyperplane,
};

/// `n` points along each edge, dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct GridShape {
    n: u32,
    d: u32,
}

#[derive(Deserialize)]
struct RawShape {
    n: u32,
    d: u32,
}

impl TryFrom<RawShape> for GridShape {
    type Error = Error;

    fn try_from(raw: RawShape) -> Result<Self> {
        GridShape::new(raw.n, raw.d)
    }
}

impl GridShape {
    pub fn new(n: u32, d: u32) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidShape { n, d });
        }
        Ok(GridShape { n, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d as usize
    }

    /// `binomial(n - 1 + d, d)`.
    pub fn point_count(&self) -> u64 {
        let top = u64::from(self.n) - 1 + u64::from(self.d);
        let mut acc: u64 = 1;
        for i in 0..u64::from(self.d) {
            acc = acc * (top - i) / (i + 1);
        }
        acc
    }

    pub fn contains(&self, p: &GridPoint) -> bool {
        p.dim() == self.dim() && p.coord_sum() < u64::from(self.n)
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}({})", self.d, self.n)
    }
}

/// A lattice point with nonnegative coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridPoint(Vec<u32>);

impl GridPoint {
    pub fn new(coords: Vec<u32>) -> Self {
        GridPoint(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coord_sum(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }
}

impl From<Vec<u32>> for GridPoint {
    fn from(coords: Vec<u32>) -> Self {
        GridPoint(coords)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All points of `T_d(n)` in lexicographic order.
pub fn enumerate_points(shape: GridShape) -> Vec<GridPoint> {
    fn fill(prefix: &mut Vec<u32>, remaining: usize, budget: u32, out: &mut Vec<GridPoint>) {
        if remaining == 0 {
            out.push(GridPoint(prefix.clone()));
            return;
        }
        for x in 0..=budget {
            prefix.push(x);
            fill(prefix, remaining - 1, budget - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(shape.point_count() as usize);
    fill(
        &mut Vec::with_capacity(shape.dim()),
        shape.dim(),
        shape.n - 1,
        &mut out,
    );
    out
}

/// True iff `p` lies on `h`.
pub fn incident(h: &Hyperplane, p: &GridPoint) -> Result<bool> {
    if h.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: p.dim(),
        });
    }
    Ok(h.contains(p))
}

/// The grid points lying on `h`.
pub fn covered_points(h: &Hyperplane, shape: GridShape) -> Result<BTreeSet<GridPoint>> {
    if h.dim() != shape.dim() {
        return Err(Error::DimensionMismatch {
            expected: shape.dim(),
            found: h.dim(),
        });
    }
    Ok(enumerate_points(shape)
        .into_iter()
        .filter(|p| h.contains(p))
        .collect())
}

/// Enumerated grid with a point index, shared by the solvers.
#[derive(Clone, Debug)]
pub struct Grid {
    shape: GridShape,
    points: Vec<GridPoint>,
    index: HashMap<GridPoint, usize>,
}

impl Grid {
    pub fn new(shape: GridShape) -> Self {
        let points = enumerate_points(shape);
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Grid {
            shape,
            points,
            index,
        }
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &GridPoint) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the points on `h`, ascending.
    pub fn incidence(&self, h: &Hyperplane) -> Vec<usize> {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| h.contains(p))
            .map(|(i, _)| i)
            .collect()
    }
}
