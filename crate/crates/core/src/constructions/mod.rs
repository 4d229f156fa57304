//! Closed-form covers, point masses and slope constants.
//!
//! Every object produced here is an ordinary [`FractionalCover`],
//! [`IntegerCover`] or [`MassCertificate`] and can be checked with the
//! `verify` module; nothing in this module checks its own output.
//!
//! [`FractionalCover`]: crate::cover::FractionalCover
//! [`IntegerCover`]: crate::cover::IntegerCover
//! [`MassCertificate`]: crate::cover::MassCertificate

mod general;
mod planar;
mod slope;

pub use general::{
    block_cover, cover_333, cover_k1_general, cover_k2_general, cover_k3_general,
    simplex_fractional_cover,
};
pub use planar::{
    f_star_closed_form_2d, fractional_cover_2d, kcover_2d, kcover_2d_cardinality, lifted_cover_2d,
    mass_certificate_2d,
};
pub use slope::{block_plan, lifted_plan, slope_constant, BlockPlan, SlopeConstant};

use crate::cover::IntegerCover;
use crate::grid::{Direction, GridShape, StandardHyperplane};

/// Adds the standard hyperplanes with index `c` in `range` for every
/// direction, each with multiplicity `multiplicity`.
pub(crate) fn add_standard_range(
    cover: &mut IntegerCover,
    directions: &[Direction],
    range: std::ops::Range<u32>,
    multiplicity: u32,
) {
    let shape: GridShape = cover.shape();
    for &dir in directions {
        for c in range.clone() {
            let h = StandardHyperplane::new(shape, dir, c).hyperplane;
            cover.add(h, multiplicity).expect("dimension matches shape");
        }
    }
}

pub(crate) fn all_directions(shape: GridShape) -> Vec<Direction> {
    (0..shape.dim())
        .map(Direction::Axis)
        .chain(std::iter::once(Direction::Diagonal))
        .collect()
}
