use crate::constructions::planar::{lifted_cover_2d, min_fitting};
use crate::constructions::{add_standard_range, all_directions, block_plan};
use crate::cover::{FractionalCover, IntegerCover};
use crate::error::{Error, Result};
use crate::grid::{normalize_hyperplane, Direction, GridShape, Hyperplane};
use crate::rational::{frac, int};

/// `x_1 = i` for `i < n`.
pub fn cover_k1_general(shape: GridShape) -> IntegerCover {
    let mut cover = IntegerCover::new(shape, 1);
    add_standard_range(&mut cover, &[Direction::Axis(0)], 0..shape.n(), 1);
    cover
}

/// 2-cover of cardinality `n + ceil(n / d)`. With
/// `n + ceil(n/d) = q(d+1) + r`, the first `r` axes get `q + 1` hyperplanes,
/// the remaining axes and the diagonal get `q`.
pub fn cover_k2_general(shape: GridShape) -> IntegerCover {
    let (n, d) = (shape.n(), shape.d());
    let total = n + n.div_ceil(d);
    let (q, r) = (total / (d + 1), total % (d + 1));
    let mut cover = IntegerCover::new(shape, 2);
    for axis in 0..d {
        let count = if axis < r { q + 1 } else { q };
        add_standard_range(&mut cover, &[Direction::Axis(axis as usize)], 0..count, 1);
    }
    add_standard_range(&mut cover, &[Direction::Diagonal], 0..q, 1);
    cover
}

/// 3-cover with `ceil(n / (d - 1))` hyperplanes in each of the `d + 1`
/// standard directions; requires `d >= 3`.
pub fn cover_k3_general(shape: GridShape) -> Result<IntegerCover> {
    if shape.d() < 3 {
        return Err(Error::Unsupported(format!(
            "three-fold general cover needs d >= 3, got {}",
            shape.d()
        )));
    }
    let width = shape.n().div_ceil(shape.d() - 1);
    let mut cover = IntegerCover::new(shape, 3);
    add_standard_range(&mut cover, &all_directions(shape), 0..width, 1);
    Ok(cover)
}

/// Block k-cover with slope `C_{d,k}`. In the plane (k >= 2) this is the
/// lifted fractional cover; otherwise the hyperplanes of each direction are
/// grouped into blocks of `ceil(n / M)` consecutive standard hyperplanes with
/// multiplicities decreasing by one per block.
pub fn block_cover(shape: GridShape, k: u32) -> Result<IntegerCover> {
    if k == 0 {
        return Err(Error::Unsupported("k must be positive".into()));
    }
    if shape.d() == 2 && k >= 2 {
        return lifted_cover_2d(shape.n(), k);
    }
    let (_, _, plan) = block_plan(shape.d(), k);
    if !plan.fits(shape.n()) {
        return Err(Error::GridTooSmall {
            n: shape.n(),
            needed: min_fitting(&plan),
        });
    }
    let width = plan.width(shape.n());
    let all = all_directions(shape);
    let mut cover = IntegerCover::new(shape, k);
    for block in 1..=plan.blocks {
        add_standard_range(
            &mut cover,
            &all,
            (block - 1) * width..block * width,
            plan.multiplicity(block),
        );
    }
    Ok(cover)
}

/// The `d + 1` bounding hyperplanes of `T_d(2)`, each with weight `1/d`.
pub fn simplex_fractional_cover(d: u32) -> Result<FractionalCover> {
    let shape = GridShape::new(2, d)?;
    let mut cover = FractionalCover::new(shape);
    let w = frac(1, i64::from(d));
    for axis in 0..shape.dim() {
        cover.add(Hyperplane::axis(shape.dim(), axis, 0), w.clone())?;
    }
    cover.add(Hyperplane::diagonal(shape.dim(), 1), w)?;
    Ok(cover)
}

/// Seven-plane fractional cover of `T_3(3)` with total weight `11/6`.
pub fn cover_333() -> FractionalCover {
    let shape = GridShape::new(3, 3).expect("valid shape");
    let mut cover = FractionalCover::new(shape);
    let third = frac(1, 3);
    let sixth = frac(1, 6);
    for axis in 0..3 {
        cover
            .add(Hyperplane::axis(3, axis, 0), third.clone())
            .unwrap();
    }
    cover.add(Hyperplane::diagonal(3, 2), third).unwrap();
    for coeffs in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
        let h = normalize_hyperplane(&coeffs, 1).unwrap();
        cover.add(h, sixth.clone()).unwrap();
    }
    debug_assert_eq!(cover.total_weight(), int(11) * frac(1, 6));
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridPoint;
    use crate::rational::Rational;

    fn shape(n: u32, d: u32) -> GridShape {
        GridShape::new(n, d).unwrap()
    }

    #[test]
    fn k1_examples() {
        assert_eq!(cover_k1_general(shape(7, 3)).cardinality(), 7);
        let c = cover_k1_general(shape(1, 4));
        assert_eq!(c.cardinality(), 1);
        assert_eq!(c.multiplicity(&Hyperplane::axis(4, 0, 0)), 1);
        assert_eq!(cover_k1_general(shape(3, 2)).cardinality(), 3);
    }

    #[test]
    fn k2_examples() {
        let c = cover_k2_general(shape(6, 3));
        assert_eq!(c.cardinality(), 8);
        for axis in 0..3 {
            for v in 0..2 {
                assert_eq!(c.multiplicity(&Hyperplane::axis(3, axis, v)), 1);
            }
        }
        assert_eq!(c.multiplicity(&Hyperplane::diagonal(3, 5)), 1);
        assert_eq!(c.multiplicity(&Hyperplane::diagonal(3, 4)), 1);
        assert_eq!(cover_k2_general(shape(2, 2)).cardinality(), 3);
        assert_eq!(cover_k2_general(shape(5, 5)).cardinality(), 6);
    }

    #[test]
    fn k3_examples() {
        assert_eq!(cover_k3_general(shape(4, 3)).unwrap().cardinality(), 8);
        assert_eq!(cover_k3_general(shape(2, 3)).unwrap().cardinality(), 4);
        assert_eq!(cover_k3_general(shape(9, 4)).unwrap().cardinality(), 15);
        assert!(cover_k3_general(shape(4, 2)).is_err());
    }

    #[test]
    fn block_examples() {
        assert_eq!(block_cover(shape(9, 2), 4).unwrap().cardinality(), 27);
        let c = block_cover(shape(12, 3), 2).unwrap();
        assert_eq!(c.cardinality(), 16);
        assert!(c.multiplicities().values().all(|&m| m == 1));
        assert_eq!(block_cover(shape(10, 2), 2).unwrap().cardinality(), 15);
        assert!(matches!(
            block_cover(shape(2, 3), 5),
            Err(Error::GridTooSmall { .. })
        ));
    }

    #[test]
    fn simplex_covers() {
        let c = simplex_fractional_cover(3).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.total_weight(), frac(4, 3));
        let c = simplex_fractional_cover(1).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.total_weight(), int(2));
        assert_eq!(
            simplex_fractional_cover(2).unwrap().total_weight(),
            frac(3, 2)
        );
    }

    #[test]
    fn cover_333_weights() {
        let c = cover_333();
        assert_eq!(c.len(), 7);
        assert_eq!(c.total_weight(), frac(11, 6));
        assert_eq!(c.weight_at(&GridPoint::new(vec![0, 0, 0])), int(1));
        let p = GridPoint::new(vec![1, 1, 0]);
        assert_eq!(c.weight_at(&p), int(1));
        let contributions: Vec<Rational> = c
            .weights()
            .iter()
            .filter(|(h, _)| h.contains(&p))
            .map(|(_, w)| w.clone())
            .collect();
        assert_eq!(contributions.len(), 4);
    }
}
