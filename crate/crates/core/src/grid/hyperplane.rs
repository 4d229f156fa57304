use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{GridPoint, GridShape};
use crate::error::{Error, Result};

/// Affine hyperplane `coeffs · x = offset` in canonical form: the integer
/// entries have gcd 1 and the first nonzero coefficient is positive, so
/// structural equality coincides with geometric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHyperplane")]
pub struct Hyperplane {
    coeffs: Vec<i64>,
    offset: i64,
}

#[derive(Deserialize)]
struct RawHyperplane {
    coeffs: Vec<i64>,
    offset: i64,
}

impl TryFrom<RawHyperplane> for Hyperplane {
    type Error = Error;

    fn try_from(raw: RawHyperplane) -> Result<Self> {
        normalize_hyperplane(&raw.coeffs, raw.offset)
    }
}

/// Canonical representative of `raw_coeffs · x = raw_offset`.
pub fn normalize_hyperplane(raw_coeffs: &[i64], raw_offset: i64) -> Result<Hyperplane> {
    let coeffs: Vec<BigInt> = raw_coeffs.iter().map(|&c| BigInt::from(c)).collect();
    normalize_big(&coeffs, &BigInt::from(raw_offset))
}

fn normalize_big(coeffs: &[BigInt], offset: &BigInt) -> Result<Hyperplane> {
    let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
        return Err(Error::DegenerateHyperplane);
    };
    let mut g = coeffs.iter().fold(offset.abs(), |g, c| g.gcd(c));
    if lead.is_negative() {
        g = -g;
    }
    let fit = |v: &BigInt| (v / &g).to_i64().ok_or(Error::CoefficientOverflow);
    Ok(Hyperplane {
        coeffs: coeffs.iter().map(fit).collect::<Result<_>>()?,
        offset: fit(offset)?,
    })
}

impl Hyperplane {
    /// `x_axis = value` (axis is zero-based).
    pub fn axis(d: usize, axis: usize, value: u32) -> Self {
        let mut coeffs = vec![0; d];
        coeffs[axis] = 1;
        Hyperplane {
            coeffs,
            offset: i64::from(value),
        }
    }

    /// `x_1 + ... + x_d = value`.
    pub fn diagonal(d: usize, value: u32) -> Self {
        Hyperplane {
            coeffs: vec![1; d],
            offset: i64::from(value),
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Dimension-unchecked incidence; callers guarantee matching dimensions.
    pub fn contains(&self, p: &GridPoint) -> bool {
        let dot: i128 = self
            .coeffs
            .iter()
            .zip(p.coords())
            .map(|(&a, &x)| i128::from(a) * i128::from(x))
            .sum();
        dot == i128::from(self.offset)
    }

    /// Direction and index `c` when this is a standard hyperplane of `shape`.
    pub fn standard_kind(&self, shape: GridShape) -> Option<(Direction, u32)> {
        if self.dim() != shape.dim() || self.offset < 0 || self.offset >= i64::from(shape.n()) {
            return None;
        }
        let value = self.offset as u32;
        let ones = self.coeffs.iter().filter(|&&c| c == 1).count();
        let zeros = self.coeffs.iter().filter(|&&c| c == 0).count();
        if ones == 1 && zeros + 1 == self.dim() {
            let axis = self.coeffs.iter().position(|&c| c == 1).unwrap();
            Some((Direction::Axis(axis), value))
        } else if ones == self.dim() {
            Some((Direction::Diagonal, shape.n() - 1 - value))
        } else {
            None
        }
    }

    pub fn is_standard(&self, shape: GridShape) -> bool {
        self.standard_kind(shape).is_some()
    }

    pub fn is_bounding(&self, shape: GridShape) -> bool {
        matches!(self.standard_kind(shape), Some((_, 0)))
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}x{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}x{}", i + 1)?;
            }
            first = false;
        }
        write!(f, "={}", self.offset)
    }
}

/// Hyperplane through `points`, or `None` when they are affinely dependent.
/// Exactly `d` points of dimension `d` are expected.
pub fn hyperplane_through(points: &[&GridPoint]) -> Result<Option<Hyperplane>> {
    let Some(base) = points.first() else {
        return Ok(None);
    };
    let d = base.dim();
    if points.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: points.len(),
        });
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        });
    }
    let rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(&a, &b)| BigInt::from(i64::from(a) - i64::from(b)))
                .collect()
        })
        .collect();
    // Generalized cross product: normal_j = (-1)^j det(rows without column j).
    let mut normal = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let det = bareiss_determinant(minor);
        normal.push(if skip % 2 == 0 { det } else { -det });
    }
    if normal.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let offset: BigInt = normal
        .iter()
        .zip(base.coords())
        .map(|(a, &x)| a * BigInt::from(x))
        .sum();
    normalize_big(&normal, &offset).map(Some)
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    if size == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[size - 1][size - 1]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// Zero-based coordinate axis: hyperplanes `x_i = c`.
    Axis(usize),
    /// Hyperplanes `x_1 + ... + x_d = n - 1 - c`.
    Diagonal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardHyperplane {
    pub hyperplane: Hyperplane,
    pub direction: Direction,
    pub c: u32,
    pub bounding: bool,
}

impl StandardHyperplane {
    pub fn new(shape: GridShape, direction: Direction, c: u32) -> Self {
        let hyperplane = match direction {
            Direction::Axis(i) => Hyperplane::axis(shape.dim(), i, c),
            Direction::Diagonal => Hyperplane::diagonal(shape.dim(), shape.n() - 1 - c),
        };
        StandardHyperplane {
            hyperplane,
            direction,
            c,
            bounding: c == 0,
        }
    }
}

/// The `(d + 1) n` standard hyperplanes, by direction then `c`.
pub fn standard_hyperplanes(shape: GridShape) -> Vec<StandardHyperplane> {
    let directions = (0..shape.dim())
        .map(Direction::Axis)
        .chain(std::iter::once(Direction::Diagonal));
    directions
        .flat_map(|dir| (0..shape.n()).map(move |c| StandardHyperplane::new(shape, dir, c)))
        .collect()
}
