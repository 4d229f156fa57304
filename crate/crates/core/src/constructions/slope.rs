use serde::Serialize;

use crate::rational::{frac, Rational};

/// Leading coefficient `C_{d,k}` of the block construction together with
/// the parameters that define it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeConstant {
    pub d: u32,
    pub k: u32,
    #[serde(with = "crate::rational::serde_text")]
    pub value: Rational,
    pub q: u32,
    pub r: u32,
    pub plan: BlockPlan,
}

/// `blocks` consecutive runs of `ceil(n / modulus)` standard hyperplanes per
/// direction; block `j` (1-based) carries multiplicity `blocks + 1 - j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPlan {
    pub blocks: u32,
    pub modulus: u32,
}

impl BlockPlan {
    pub fn width(&self, n: u32) -> u32 {
        n.div_ceil(self.modulus)
    }

    /// True when every block index stays below `n`.
    pub fn fits(&self, n: u32) -> bool {
        u64::from(self.blocks) * u64::from(self.width(n)) <= u64::from(n)
    }

    pub fn multiplicity(&self, block: u32) -> u32 {
        self.blocks + 1 - block
    }

    /// Sum of block multiplicities, i.e. lines per direction per unit width.
    pub fn multiplicity_sum(&self) -> u64 {
        u64::from(self.blocks) * u64::from(self.blocks + 1) / 2
    }
}

/// Block parameters for `(d, k)` by the parity of `d`.
pub fn block_plan(d: u32, k: u32) -> (u32, u32, BlockPlan) {
    assert!(d >= 1 && k >= 1);
    if d % 2 == 1 {
        let half = d.div_ceil(2);
        let q = (k - 1) / half;
        let r = k - half * q;
        let modulus = (d + 1) * (q + 2) / 2 - (r - 1);
        (
            q,
            r,
            BlockPlan {
                blocks: q + 1,
                modulus,
            },
        )
    } else {
        let q = (k - 1) / (d + 1);
        let r = k - (d + 1) * q;
        if r <= d / 2 + 1 {
            let modulus = (d + 1) * (q + 1) - (r - 1);
            (
                q,
                r,
                BlockPlan {
                    blocks: 2 * q + 1,
                    modulus,
                },
            )
        } else {
            let modulus = (d + 1) * (q + 1) + (d + 2 - r);
            (
                q,
                r,
                BlockPlan {
                    blocks: 2 * q + 2,
                    modulus,
                },
            )
        }
    }
}

/// Planar lifting parameters for `k >= 2`: `N = k - j - 1` blocks with
/// modulus `M = 2k - 3j - 2`, where `j = floor((k - 1) / 3)`.
pub fn lifted_plan(k: u32) -> BlockPlan {
    assert!(k >= 2);
    let j = (k - 1) / 3;
    BlockPlan {
        blocks: k - j - 1,
        modulus: 2 * k - 3 * j - 2,
    }
}

/// `C_{d,k}`, evaluated from its closed form for the parity case.
pub fn slope_constant(d: u32, k: u32) -> SlopeConstant {
    let (q, r, plan) = block_plan(d, k);
    let (q_i, r_i, d_i) = (i64::from(q), i64::from(r), i64::from(d));
    let value = if d % 2 == 1 {
        let m = (d_i + 1) * (q_i + 2) / 2 - (r_i - 1);
        frac(q_i + 1, 1) * (frac(1, 1) + frac(r_i - 1, m))
    } else if r <= d / 2 + 1 {
        let m = (d_i + 1) * (q_i + 1) - (r_i - 1);
        frac(2 * q_i + 1, 1) * (frac(1, 1) + frac(r_i - 1, m))
    } else {
        let m = (d_i + 1) * (q_i + 1) + (d_i + 2 - r_i);
        frac(2 * q_i + 3, 1) * (frac(1, 1) - frac(d_i + 2 - r_i, m))
    };
    SlopeConstant {
        d,
        k,
        value,
        q,
        r,
        plan,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn slope_examples() {
        assert_eq!(slope_constant(2, 3).value, frac(9, 4));
        assert_eq!(slope_constant(3, 3).value, int(2));
        assert_eq!(slope_constant(3, 2).value, frac(4, 3));
        // 1 + (k-1)/(d-k+2) at d=4, k=3
        assert_eq!(slope_constant(4, 3).value, frac(5, 3));
        assert_eq!(slope_constant(2, 4).value, int(3));
    }

    #[test]
    fn value_matches_block_density() {
        // C = (d + 1) * sum(multiplicities) / M for every case
        for d in 1..=8 {
            for k in 1..=12 {
                let s = slope_constant(d, k);
                let density = frac(
                    i64::from(d + 1) * s.plan.multiplicity_sum() as i64,
                    i64::from(s.plan.modulus),
                );
                assert_eq!(s.value, density, "d={d} k={k}");
                assert!(s.r >= 1);
            }
        }
    }

    #[test]
    fn lifted_plan_parameters() {
        assert_eq!(
            lifted_plan(4),
            BlockPlan {
                blocks: 2,
                modulus: 3
            }
        );
        assert_eq!(
            lifted_plan(2),
            BlockPlan {
                blocks: 1,
                modulus: 2
            }
        );
        assert_eq!(
            lifted_plan(5),
            BlockPlan {
                blocks: 3,
                modulus: 5
            }
        );
    }

    #[test]
    fn plan_fit_threshold() {
        let p = BlockPlan {
            blocks: 2,
            modulus: 3,
        };
        assert!(p.fits(12));
        assert!(p.fits(4));
        assert!(p.fits(5));
        assert!(p.fits(2));
        assert!(!p.fits(1));
        let wide = BlockPlan {
            blocks: 3,
            modulus: 4,
        };
        assert!(!wide.fits(5)); // width 2, three blocks need indices up to 5
    }
}
