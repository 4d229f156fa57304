//! Weighted covers, integer k-covers and point-mass certificates.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridPoint, GridShape, Hyperplane};
use crate::rational::{self, Rational};

fn check_hyperplane(shape: GridShape, h: &Hyperplane) -> Result<()> {
    if h.dim() != shape.dim() {
        return Err(Error::DimensionMismatch {
            expected: shape.dim(),
            found: h.dim(),
        });
    }
    Ok(())
}

/// Nonnegative rational weights on hyperplanes; zero weights are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "FractionalCoverJson", try_from = "FractionalCoverJson")]
pub struct FractionalCover {
    shape: GridShape,
    weights: BTreeMap<Hyperplane, Rational>,
}

impl FractionalCover {
    pub fn new(shape: GridShape) -> Self {
        FractionalCover {
            shape,
            weights: BTreeMap::new(),
        }
    }

    /// Adds `weight` to `h` (accumulating if already present).
    pub fn add(&mut self, h: Hyperplane, weight: Rational) -> Result<()> {
        check_hyperplane(self.shape, &h)?;
        if weight.is_negative() {
            return Err(Error::NegativeValue(weight.to_string()));
        }
        if weight.is_zero() {
            return Ok(());
        }
        *self.weights.entry(h).or_insert_with(Rational::zero) += weight;
        Ok(())
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn weights(&self) -> &BTreeMap<Hyperplane, Rational> {
        &self.weights
    }

    pub fn weight(&self, h: &Hyperplane) -> Rational {
        self.weights.get(h).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.values().sum()
    }

    /// Total weight of the hyperplanes through `p`.
    pub fn weight_at(&self, p: &GridPoint) -> Rational {
        self.weights
            .iter()
            .filter(|(h, _)| h.contains(p))
            .map(|(_, w)| w)
            .sum()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Every weight multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        let mut out = FractionalCover::new(self.shape);
        for (h, w) in &self.weights {
            out.add(h.clone(), w * factor)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    hyperplane: Hyperplane,
    #[serde(with = "rational::serde_text")]
    weight: Rational,
}

#[derive(Serialize, Deserialize)]
struct FractionalCoverJson {
    shape: GridShape,
    weights: Vec<WeightEntry>,
}

impl From<FractionalCover> for FractionalCoverJson {
    fn from(c: FractionalCover) -> Self {
        FractionalCoverJson {
            shape: c.shape,
            weights: c
                .weights
                .into_iter()
                .map(|(hyperplane, weight)| WeightEntry { hyperplane, weight })
                .collect(),
        }
    }
}

impl TryFrom<FractionalCoverJson> for FractionalCover {
    type Error = Error;

    fn try_from(j: FractionalCoverJson) -> Result<Self> {
        let mut c = FractionalCover::new(j.shape);
        for e in j.weights {
            c.add(e.hyperplane, e.weight)?;
        }
        Ok(c)
    }
}

/// A multiset of hyperplanes intended to cover every point `k` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "IntegerCoverJson", try_from = "IntegerCoverJson")]
pub struct IntegerCover {
    shape: GridShape,
    k: u32,
    multiplicities: BTreeMap<Hyperplane, u32>,
}

impl IntegerCover {
    pub fn new(shape: GridShape, k: u32) -> Self {
        IntegerCover {
            shape,
            k,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, h: Hyperplane, multiplicity: u32) -> Result<()> {
        check_hyperplane(self.shape, &h)?;
        if multiplicity > 0 {
            *self.multiplicities.entry(h).or_insert(0) += multiplicity;
        }
        Ok(())
    }

    /// Removes one copy of `h`; returns false if it was absent.
    pub fn remove_one(&mut self, h: &Hyperplane) -> bool {
        match self.multiplicities.get_mut(h) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.multiplicities.remove(h);
                true
            }
            None => false,
        }
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn multiplicities(&self) -> &BTreeMap<Hyperplane, u32> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, h: &Hyperplane) -> u32 {
        self.multiplicities.get(h).copied().unwrap_or(0)
    }

    /// Number of hyperplanes counted with multiplicity.
    pub fn cardinality(&self) -> u64 {
        self.multiplicities.values().map(|&m| u64::from(m)).sum()
    }

    pub fn coverage(&self, p: &GridPoint) -> u64 {
        self.multiplicities
            .iter()
            .filter(|(h, _)| h.contains(p))
            .map(|(_, &m)| u64::from(m))
            .sum()
    }

    /// True iff some hyperplane in the cover is not standard.
    pub fn uses_nonstandard(&self) -> bool {
        self.multiplicities
            .keys()
            .any(|h| !h.is_standard(self.shape))
    }
}

#[derive(Serialize, Deserialize)]
struct MultiplicityEntry {
    hyperplane: Hyperplane,
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
struct IntegerCoverJson {
    shape: GridShape,
    #[serde(default = "default_k")]
    k: u32,
    multiplicities: Vec<MultiplicityEntry>,
}

fn default_k() -> u32 {
    1
}

impl From<IntegerCover> for IntegerCoverJson {
    fn from(c: IntegerCover) -> Self {
        IntegerCoverJson {
            shape: c.shape,
            k: c.k,
            multiplicities: c
                .multiplicities
                .into_iter()
                .map(|(hyperplane, multiplicity)| MultiplicityEntry {
                    hyperplane,
                    multiplicity,
                })
                .collect(),
        }
    }
}

impl TryFrom<IntegerCoverJson> for IntegerCover {
    type Error = Error;

    fn try_from(j: IntegerCoverJson) -> Result<Self> {
        let mut c = IntegerCover::new(j.shape, j.k);
        for e in j.multiplicities {
            c.add(e.hyperplane, e.multiplicity)?;
        }
        Ok(c)
    }
}

/// Nonnegative masses on grid points. Valid when no hyperplane carries more
/// than unit mass, in which case the total mass bounds `f*` from below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MassCertificateJson", try_from = "MassCertificateJson")]
pub struct MassCertificate {
    shape: GridShape,
    masses: BTreeMap<GridPoint, Rational>,
}

impl MassCertificate {
    pub fn new(shape: GridShape) -> Self {
        MassCertificate {
            shape,
            masses: BTreeMap::new(),
        }
    }

    /// Sets the mass of `p`; zero removes it.
    pub fn set(&mut self, p: GridPoint, mass: Rational) -> Result<()> {
        if !self.shape.contains(&p) {
            return Err(Error::PointOutsideGrid(p.coords().to_vec()));
        }
        if mass.is_negative() {
            return Err(Error::NegativeValue(mass.to_string()));
        }
        if mass.is_zero() {
            self.masses.remove(&p);
        } else {
            self.masses.insert(p, mass);
        }
        Ok(())
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn masses(&self) -> &BTreeMap<GridPoint, Rational> {
        &self.masses
    }

    pub fn mass(&self, p: &GridPoint) -> Rational {
        self.masses.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_mass(&self) -> Rational {
        self.masses.values().sum()
    }

    /// Mass carried by the points of `h`.
    pub fn mass_on(&self, h: &Hyperplane) -> Rational {
        self.masses
            .iter()
            .filter(|(p, _)| h.contains(p))
            .map(|(_, m)| m)
            .sum()
    }

    pub fn support_len(&self) -> usize {
        self.masses.len()
    }
}

#[derive(Serialize, Deserialize)]
struct MassEntry {
    point: GridPoint,
    #[serde(with = "rational::serde_text")]
    mass: Rational,
}

#[derive(Serialize, Deserialize)]
struct MassCertificateJson {
    shape: GridShape,
    masses: Vec<MassEntry>,
}

impl From<MassCertificate> for MassCertificateJson {
    fn from(c: MassCertificate) -> Self {
        MassCertificateJson {
            shape: c.shape,
            masses: c
                .masses
                .into_iter()
                .map(|(point, mass)| MassEntry { point, mass })
                .collect(),
        }
    }
}

impl TryFrom<MassCertificateJson> for MassCertificate {
    type Error = Error;

    fn try_from(j: MassCertificateJson) -> Result<Self> {
        let mut c = MassCertificate::new(j.shape);
        for e in j.masses {
            let old = c.mass(&e.point);
            c.set(e.point, old + e.mass)?;
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn shape(n: u32, d: u32) -> GridShape {
        GridShape::new(n, d).unwrap()
    }

    #[test]
    fn fractional_cover_accumulates_and_drops_zero() {
        let mut c = FractionalCover::new(shape(3, 2));
        c.add(Hyperplane::axis(2, 0, 0), frac(1, 2)).unwrap();
        c.add(Hyperplane::axis(2, 0, 0), frac(1, 4)).unwrap();
        c.add(Hyperplane::axis(2, 1, 0), int(0)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.total_weight(), frac(3, 4));
        assert!(c.add(Hyperplane::axis(2, 1, 0), frac(-1, 2)).is_err());
        assert!(c.add(Hyperplane::axis(3, 1, 0), frac(1, 2)).is_err());
    }

    #[test]
    fn fractional_cover_json() {
        let mut c = FractionalCover::new(shape(2, 2));
        c.add(Hyperplane::axis(2, 0, 0), frac(1, 2)).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"shape":{"n":2,"d":2},"weights":[{"hyperplane":{"coeffs":[1,0],"offset":0},"weight":"1/2"}]}"#
        );
        let back: FractionalCover = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"shape":{"n":2,"d":2},"weights":[{"hyperplane":{"coeffs":[1,0],"offset":0},"weight":"-1/2"}]}"#;
        assert!(serde_json::from_str::<FractionalCover>(bad).is_err());
    }

    #[test]
    fn integer_cover_counts() {
        let mut c = IntegerCover::new(shape(3, 2), 2);
        c.add(Hyperplane::axis(2, 0, 0), 2).unwrap();
        c.add(Hyperplane::diagonal(2, 2), 1).unwrap();
        assert_eq!(c.cardinality(), 3);
        assert_eq!(c.coverage(&GridPoint::new(vec![0, 2])), 3);
        assert_eq!(c.coverage(&GridPoint::new(vec![1, 0])), 0);
        assert!(!c.uses_nonstandard());
        c.add(normalize(&[1, -1], 0), 1).unwrap();
        assert!(c.uses_nonstandard());
        let back: IntegerCover = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        assert!(c.remove_one(&Hyperplane::axis(2, 0, 0)));
        assert_eq!(c.multiplicity(&Hyperplane::axis(2, 0, 0)), 1);
    }

    fn normalize(c: &[i64], o: i64) -> Hyperplane {
        crate::grid::normalize_hyperplane(c, o).unwrap()
    }

    #[test]
    fn mass_certificate_rules() {
        let mut m = MassCertificate::new(shape(2, 2));
        m.set(GridPoint::new(vec![0, 0]), frac(1, 2)).unwrap();
        m.set(GridPoint::new(vec![1, 0]), frac(1, 2)).unwrap();
        assert!(m.set(GridPoint::new(vec![1, 1]), frac(1, 2)).is_err());
        assert!(m.set(GridPoint::new(vec![0, 1]), frac(-1, 2)).is_err());
        assert_eq!(m.total_mass(), int(1));
        assert_eq!(m.mass_on(&Hyperplane::axis(2, 1, 0)), int(1));
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains(r#"{"point":[0,0],"mass":"1/2"}"#));
        let back: MassCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }
}
