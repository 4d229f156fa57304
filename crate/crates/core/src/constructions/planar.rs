//! Planar (`d = 2`) fractional covers, hexagonal mass certificates and
//! integer k-covers.

use crate::constructions::{add_standard_range, all_directions, lifted_plan};
use crate::cover::{FractionalCover, IntegerCover, MassCertificate};
use crate::error::{Error, Result};
use crate::grid::{enumerate_points, Direction, GridPoint, GridShape, Hyperplane};
use crate::rational::{frac, int, Rational};

fn planar(n: u32) -> Result<GridShape> {
    GridShape::new(n, 2)
}

/// Exact `f*(n, 2)` by the residue of `n` modulo 3.
pub fn f_star_closed_form_2d(n: u32) -> Rational {
    assert!(n >= 1, "n must be positive");
    let j = i64::from((n - 1) / 3);
    match n % 3 {
        1 => int(2 * j + 1),
        2 => int(2 * j + 1) + frac(2 * j + 1, 3 * j + 2),
        _ => int(2 * j + 2) + frac(j + 1, 3 * j + 4),
    }
}

/// Weighted standard-line cover whose total weight is `f*(n, 2)`: the three
/// lines with index `i` (`x = i`, `y = i`, `x + y = n - 1 - i`) share one
/// weight that decreases linearly in `i`.
pub fn fractional_cover_2d(n: u32) -> Result<FractionalCover> {
    let shape = planar(n)?;
    let mut cover = FractionalCover::new(shape);
    if n == 1 {
        cover.add(Hyperplane::axis(2, 0, 0), int(1))?;
        return Ok(cover);
    }
    let j = i64::from((n - 1) / 3);
    // (lines per direction, weight numerator base, denominator)
    let (count, top, denom) = match n % 3 {
        1 => (2 * j, 2 * j, 3 * j),
        2 => (2 * j + 1, 2 * j + 1, 3 * j + 2),
        _ => (2 * j + 2, 2 * j + 2, 3 * j + 4),
    };
    for i in 0..count {
        let w = frac(top - i, denom);
        let c = i as u32;
        cover.add(Hyperplane::axis(2, 0, c), w.clone())?;
        cover.add(Hyperplane::axis(2, 1, c), w.clone())?;
        cover.add(Hyperplane::diagonal(2, n - 1 - c), w)?;
    }
    Ok(cover)
}

/// Axis-parallel hexagon `x ∈ [x0, x1]`, `y ∈ [y0, y1]`, `x + y ∈ [s0, s1]`.
/// `short` lists which of the six sides are the short ones.
struct Hexagon {
    x: (i64, i64),
    y: (i64, i64),
    s: (i64, i64),
    short: [Side; 3],
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    XLow,
    XHigh,
    YLow,
    YHigh,
    SLow,
    SHigh,
}

enum OnHexagon {
    Off,
    Short,
    LongInterior,
}

impl Hexagon {
    fn classify(&self, p: &GridPoint) -> OnHexagon {
        let (x, y) = (i64::from(p.coords()[0]), i64::from(p.coords()[1]));
        let s = x + y;
        let inside = self.x.0 <= x
            && x <= self.x.1
            && self.y.0 <= y
            && y <= self.y.1
            && self.s.0 <= s
            && s <= self.s.1;
        if !inside {
            return OnHexagon::Off;
        }
        let on = |side: Side| match side {
            Side::XLow => x == self.x.0,
            Side::XHigh => x == self.x.1,
            Side::YLow => y == self.y.0,
            Side::YHigh => y == self.y.1,
            Side::SLow => s == self.s.0,
            Side::SHigh => s == self.s.1,
        };
        let all = [
            Side::XLow,
            Side::XHigh,
            Side::YLow,
            Side::YHigh,
            Side::SLow,
            Side::SHigh,
        ];
        if self.short.iter().any(|&side| on(side)) {
            OnHexagon::Short
        } else if all.iter().any(|&side| on(side)) {
            OnHexagon::LongInterior
        } else {
            OnHexagon::Off
        }
    }
}

/// Point masses on nested hexagons (and a central triangle when `n` is not
/// `1 mod 3`) whose total equals `f*(n, 2)` and under which no line carries
/// more than unit mass.
pub fn mass_certificate_2d(n: u32) -> Result<MassCertificate> {
    let shape = planar(n)?;
    let mut cert = MassCertificate::new(shape);
    let points = enumerate_points(shape);
    let j = i64::from((n - 1) / 3);
    let at = |x: i64, y: i64| GridPoint::new(vec![x as u32, y as u32]);
    match (n % 3, j) {
        (1, 0) => cert.set(at(0, 0), int(1))?,
        (1, _) => {
            for i in 1..=j {
                let hex = Hexagon {
                    x: (j - i, j + i),
                    y: (j - i, j + i),
                    s: (2 * j - i, 2 * j + i),
                    short: [Side::XLow, Side::YLow, Side::SLow],
                };
                for p in &points {
                    if !matches!(hex.classify(p), OnHexagon::Off) {
                        cert.set(p.clone(), frac(i, j * (j + 1)))?;
                    }
                }
            }
        }
        (2, 0) => {
            for p in points {
                cert.set(p, frac(1, 2))?;
            }
        }
        (2, _) => {
            let denom = (j + 1) * (3 * j + 2);
            for i in 1..=j {
                let hex = Hexagon {
                    x: (j - i, j + i + 1),
                    y: (j - i, j + i + 1),
                    s: (2 * j - i, 2 * j + i + 1),
                    short: [Side::XHigh, Side::YHigh, Side::SLow],
                };
                let short = if i == j { 2 * j + 1 } else { 3 * i + 2 };
                for p in &points {
                    match hex.classify(p) {
                        OnHexagon::Short => cert.set(p.clone(), frac(short, denom))?,
                        OnHexagon::LongInterior => cert.set(p.clone(), frac(3 * i + 1, denom))?,
                        OnHexagon::Off => {}
                    }
                }
            }
            for (x, y) in [(j, j), (j + 1, j), (j, j + 1)] {
                cert.set(at(x, y), frac(2, denom))?;
            }
        }
        (_, 0) => {
            for p in points {
                let corner = p.coords().iter().any(|&c| c == n - 1) || p.coord_sum() == 0;
                cert.set(p, if corner { frac(1, 4) } else { frac(1, 2) })?;
            }
        }
        (_, _) => {
            let denom = (j + 1) * (3 * j + 4);
            for i in 1..=j {
                let hex = Hexagon {
                    x: (j - i, j + i + 2),
                    y: (j - i, j + i + 2),
                    s: (2 * j - i, 2 * j + i + 2),
                    short: [Side::XHigh, Side::YHigh, Side::SLow],
                };
                let short = if i == j { j + 1 } else { 3 * i + 4 };
                for p in &points {
                    match hex.classify(p) {
                        OnHexagon::Short => cert.set(p.clone(), frac(short, denom))?,
                        OnHexagon::LongInterior => cert.set(p.clone(), frac(3 * i + 2, denom))?,
                        OnHexagon::Off => {}
                    }
                }
            }
            for (x, y) in [(j, j), (j + 2, j), (j, j + 2)] {
                cert.set(at(x, y), frac(4, denom))?;
            }
            for (x, y) in [(j + 1, j), (j, j + 1), (j + 1, j + 1)] {
                cert.set(at(x, y), frac(2, denom))?;
            }
        }
    }
    Ok(cert)
}

/// `f(n, 2, k)` for `k <= 4`: `n`, `ceil(3n/2)`, `ceil(9n/4)`, `3n`.
pub fn kcover_2d_cardinality(n: u32, k: u32) -> Result<u64> {
    let n = u64::from(n);
    match k {
        1 => Ok(n),
        2 => Ok((3 * n).div_ceil(2)),
        3 => Ok((9 * n).div_ceil(4)),
        4 => Ok(3 * n),
        _ => Err(Error::Unsupported(format!("k = {k} outside 1..=4"))),
    }
}

/// Optimal standard-line k-cover of `T_2(n)` for `1 <= k <= 4`.
pub fn kcover_2d(n: u32, k: u32) -> Result<IntegerCover> {
    if !(1..=4).contains(&k) {
        return Err(Error::Unsupported(format!("k = {k} outside 1..=4")));
    }
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "kcover_2d needs n >= 2, got {n}"
        )));
    }
    let shape = planar(n)?;
    let mut cover = IntegerCover::new(shape, k);
    let xy = [Direction::Axis(0), Direction::Axis(1)];
    let diag = [Direction::Diagonal];
    match k {
        1 => add_standard_range(&mut cover, &[Direction::Axis(0)], 0..n, 1),
        2 if n.is_multiple_of(2) => {
            add_standard_range(&mut cover, &all_directions(shape), 0..n / 2, 1)
        }
        2 => {
            add_standard_range(&mut cover, &xy, 0..(n - 1) / 2 + 1, 1);
            add_standard_range(&mut cover, &diag, 0..(n - 3) / 2 + 1, 1);
        }
        3 => {
            let a = (n - 2) / 4;
            add_standard_range(&mut cover, &xy, 0..a + 1, 2);
            add_standard_range(&mut cover, &xy, a + 1..(n - 1) / 2 + 1, 1);
            let b = n / 4;
            add_standard_range(&mut cover, &diag, 0..b, 2);
            let top = if n % 4 == 1 { n / 2 + 1 } else { n / 2 };
            add_standard_range(&mut cover, &diag, b..top, 1);
        }
        _ => {
            let a = (n - 1) / 3;
            let all = all_directions(shape);
            add_standard_range(&mut cover, &all, 0..a + 1, 2);
            add_standard_range(&mut cover, &all, a + 1..(2 * n / 3).max(a + 1), 1);
        }
    }
    Ok(cover)
}

/// k-cover of `T_2(n)` obtained by lifting the optimal fractional cover of
/// `T_2(k)`: blocks of `ceil(n / M)` consecutive standard lines per
/// direction, block `u` with multiplicity `k - j - u`.
pub fn lifted_cover_2d(n: u32, k: u32) -> Result<IntegerCover> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "lifted cover needs k >= 2, got {k}"
        )));
    }
    let plan = lifted_plan(k);
    if !plan.fits(n) {
        return Err(Error::GridTooSmall {
            n,
            needed: min_fitting(&plan),
        });
    }
    let shape = planar(n)?;
    let mut cover = IntegerCover::new(shape, k);
    let width = plan.width(n);
    let all = all_directions(shape);
    for block in 1..=plan.blocks {
        let range = (block - 1) * width..block * width;
        add_standard_range(&mut cover, &all, range, plan.multiplicity(block));
    }
    Ok(cover)
}

pub(crate) fn min_fitting(plan: &crate::constructions::BlockPlan) -> u32 {
    (1..).find(|&n| plan.fits(n)).expect("some n fits")
}
