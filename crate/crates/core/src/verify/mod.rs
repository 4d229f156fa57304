//! Solver-free validation of covers and mass certificates, and the
//! conjecture sweeps.

mod sweep;

pub use sweep::{
    check_d3_conjecture, check_duality_conjecture, check_mega_conjecture, d3_slope, residual_range,
    write_csv, ConjectureRow,
};

use num_traits::One;
use serde::Serialize;

use crate::cover::{FractionalCover, IntegerCover, MassCertificate};
use crate::grid::{
    enumerate_candidate_hyperplanes, enumerate_points, Direction, GridPoint, Hyperplane,
};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub point: GridPoint,
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub achieved: Rational,
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub required: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeaviestHyperplane {
    pub hyperplane: Hyperplane,
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub mass: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_hyperplane: Option<HeaviestHyperplane>,
    /// Total mass of a valid certificate: a lower bound on `f*`.
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "optional_text"
    )]
    pub certified_bound: Option<Rational>,
}

fn optional_text<S: serde::Serializer>(
    value: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => rational::serde_text::serialize(v, s),
        None => s.serialize_none(),
    }
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        VerificationReport {
            valid: violations.is_empty(),
            violations,
            worst_hyperplane: None,
            certified_bound: None,
        }
    }
}

/// Every point must lie on hyperplanes of total multiplicity at least `k`.
pub fn verify_cover(cover: &IntegerCover, k: u32) -> VerificationReport {
    if k == 0 {
        return VerificationReport::from_violations(Vec::new());
    }
    if let Some(min) = min_standard_coverage(cover) {
        if min >= u64::from(k) {
            return VerificationReport::from_violations(Vec::new());
        }
    }
    let required = Rational::from_integer(k.into());
    let violations = enumerate_points(cover.shape())
        .into_iter()
        .filter_map(|p| {
            let got = cover.coverage(&p);
            (got < u64::from(k)).then(|| Violation {
                achieved: Rational::from_integer(got.into()),
                required: required.clone(),
                point: p,
            })
        })
        .collect();
    VerificationReport::from_violations(violations)
}

/// Least coverage over all grid points when every hyperplane of the cover is
/// standard, without enumerating points. With `a_i(v)` the multiplicity of
/// `x_i = v` and `b(s)` that of `x_1 + ... + x_d = s`, the answer is
/// `min_s [ min_{x_1+...+x_d = s} sum_i a_i(x_i) ] + b(s)`, a knapsack-style
/// recursion over the coordinates.
pub fn min_standard_coverage(cover: &IntegerCover) -> Option<u64> {
    let shape = cover.shape();
    let (n, dim) = (shape.n() as usize, shape.dim());
    let mut axis = vec![vec![0u64; n]; dim];
    let mut diagonal = vec![0u64; n];
    for (h, &m) in cover.multiplicities() {
        match h.standard_kind(shape)? {
            (Direction::Axis(i), c) => axis[i][c as usize] += u64::from(m),
            (Direction::Diagonal, c) => diagonal[n - 1 - c as usize] += u64::from(m),
        }
    }
    // best[s]: least axis coverage over prefixes of coordinates summing to s
    let mut best = vec![u64::MAX; n];
    best[0] = 0;
    for a in &axis {
        let mut next = vec![u64::MAX; n];
        for (s, &b) in best.iter().enumerate() {
            if b == u64::MAX {
                continue;
            }
            for (x, &ax) in a.iter().enumerate().take(n - s) {
                next[s + x] = next[s + x].min(b + ax);
            }
        }
        best = next;
    }
    best.iter().zip(&diagonal).map(|(b, d)| b + d).min()
}

/// Every point must carry incident weight at least one.
pub fn verify_fractional_cover(cover: &FractionalCover) -> VerificationReport {
    let violations = enumerate_points(cover.shape())
        .into_iter()
        .filter_map(|p| {
            let got = cover.weight_at(&p);
            (got < Rational::one()).then(|| Violation {
                achieved: got,
                required: Rational::one(),
                point: p,
            })
        })
        .collect();
    VerificationReport::from_violations(violations)
}

/// A certificate is valid when no hyperplane carries mass above one. Only
/// hyperplanes spanned by grid points need checking: any other hyperplane
/// can be rotated onto more grid points, which only adds mass. In the plane
/// the lines through two support points suffice; in general the full
/// unpruned candidate set is checked.
pub fn verify_mass_certificate(cert: &MassCertificate) -> VerificationReport {
    let shape = cert.shape();
    let mut violations = Vec::new();
    for (p, m) in cert.masses() {
        if *m > Rational::one() {
            violations.push(Violation {
                point: p.clone(),
                achieved: m.clone(),
                required: Rational::one(),
            });
        }
    }
    let hyperplanes: Vec<Hyperplane> = if shape.d() == 2 {
        support_lines(cert)
    } else {
        enumerate_candidate_hyperplanes(shape, false)
    };
    let mut worst: Option<HeaviestHyperplane> = None;
    for h in hyperplanes {
        let mass = cert.mass_on(&h);
        if mass > Rational::one() {
            let witness = cert.masses().keys().find(|p| h.contains(p)).cloned();
            violations.push(Violation {
                point: witness.expect("positive mass has support"),
                achieved: mass.clone(),
                required: Rational::one(),
            });
        }
        if worst.as_ref().is_none_or(|w| mass > w.mass) {
            worst = Some(HeaviestHyperplane {
                hyperplane: h,
                mass,
            });
        }
    }
    let valid = violations.is_empty();
    VerificationReport {
        valid,
        violations,
        worst_hyperplane: worst,
        certified_bound: valid.then(|| cert.total_mass()),
    }
}

fn support_lines(cert: &MassCertificate) -> Vec<Hyperplane> {
    let support: Vec<&GridPoint> = cert.masses().keys().collect();
    let mut lines = std::collections::BTreeSet::new();
    for (i, a) in support.iter().enumerate() {
        for b in &support[i + 1..] {
            if let Ok(Some(h)) = crate::grid::hyperplane_through(&[a, b]) {
                lines.insert(h);
            }
        }
    }
    lines.into_iter().collect()
}
