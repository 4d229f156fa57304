use std::io::Write;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::constructions::{f_star_closed_form_2d, slope_constant};
use crate::error::{Error, Result};
use crate::grid::GridShape;
use crate::rational::{self, frac, int, Rational};
use crate::search::{f_int, SearchConfig};

/// One measured value of `f(n, d, k)` against a predicted slope. The
/// residual `value - slope * n` is data; nothing about its size is asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub value: u64,
    pub proven: bool,
    #[serde(rename = "slope", serialize_with = "rational::serde_text::serialize")]
    pub predicted_slope: Rational,
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub residual: Rational,
}

fn rows(
    d: u32,
    k: u32,
    ns: RangeInclusive<u32>,
    slope: Rational,
    node_limit: u64,
) -> Result<Vec<ConjectureRow>> {
    ns.map(|n| {
        let shape = GridShape::new(n, d)?;
        let config = SearchConfig::for_shape(shape).with_node_limit(node_limit);
        let res = f_int(shape, k, config)?;
        let residual = int(res.optimum as i64) - &slope * int(n.into());
        Ok(ConjectureRow {
            n,
            d,
            k,
            value: res.optimum,
            proven: res.proven,
            predicted_slope: slope.clone(),
            residual,
        })
    })
    .collect()
}

/// `f(n, 2, k)` against the slope `f*(k, 2)`.
pub fn check_duality_conjecture(
    k: u32,
    ns: RangeInclusive<u32>,
    node_limit: u64,
) -> Result<Vec<ConjectureRow>> {
    rows(2, k, ns, f_star_closed_form_2d(k), node_limit)
}

/// Predicted slope in dimension three: `(k+1)/2` for odd `k`,
/// `k(k+2) / (2(k+1))` for even `k`.
pub fn d3_slope(k: u32) -> Rational {
    let k = i64::from(k);
    if k % 2 == 1 {
        frac(k + 1, 2)
    } else {
        frac(k * (k + 2), 2 * (k + 1))
    }
}

/// `f(n, 3, k)` against [`d3_slope`].
pub fn check_d3_conjecture(
    k: u32,
    ns: RangeInclusive<u32>,
    node_limit: u64,
) -> Result<Vec<ConjectureRow>> {
    rows(3, k, ns, d3_slope(k), node_limit)
}

/// `f(n, d, k)` against the block-cover slope `C_{d,k}`.
pub fn check_mega_conjecture(
    d: u32,
    k: u32,
    ns: RangeInclusive<u32>,
    node_limit: u64,
) -> Result<Vec<ConjectureRow>> {
    rows(d, k, ns, slope_constant(d, k).value, node_limit)
}

/// Smallest and largest residual, if any rows exist.
pub fn residual_range(rows: &[ConjectureRow]) -> Option<(Rational, Rational)> {
    let min = rows.iter().map(|r| &r.residual).min()?.clone();
    let max = rows.iter().map(|r| &r.residual).max()?.clone();
    Some((min, max))
}

/// Writes rows as CSV with header `n,d,k,value,proven,slope,residual`.
pub fn write_csv<W: Write>(rows: &[ConjectureRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record(["n", "d", "k", "value", "proven", "slope", "residual"])
            .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Unsupported(e.to_string()))?;
    Ok(())
}
