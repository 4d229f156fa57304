use num_traits::{One, Zero};
use proptest::prelude::*;

use tricover::constructions::{
    f_star_closed_form_2d, fractional_cover_2d, kcover_2d, kcover_2d_cardinality,
    mass_certificate_2d, simplex_fractional_cover,
};
use tricover::grid::{enumerate_points, GridShape};
use tricover::lp::{build_cover_lp, f_star, solve_lp};
use tricover::rational::{int, Rational};
use tricover::search::{f_int, lp_lower_bound, SearchConfig};
use tricover::verify::{verify_cover, verify_fractional_cover, verify_mass_certificate};

fn shape(n: u32, d: u32) -> GridShape {
    GridShape::new(n, d).unwrap()
}

#[test]
fn planar_pairs_match_closed_form() {
    for n in 1..=40 {
        let cover = fractional_cover_2d(n).unwrap();
        let cert = mass_certificate_2d(n).unwrap();
        let want = f_star_closed_form_2d(n);
        assert_eq!(cover.total_weight(), want, "n={n}");
        assert_eq!(cert.total_mass(), want, "n={n}");
        assert!(verify_fractional_cover(&cover).valid, "n={n}");
        let report = verify_mass_certificate(&cert);
        assert!(report.valid, "n={n}");
        assert_eq!(report.certified_bound, Some(want));
    }
}

#[test]
fn masses_vanish_on_overcovered_points() {
    for n in 1..=40 {
        let cover = fractional_cover_2d(n).unwrap();
        let cert = mass_certificate_2d(n).unwrap();
        for (p, m) in cert.masses() {
            assert!(
                m.is_zero() || cover.weight_at(p) == Rational::one(),
                "n={n} p={p}"
            );
        }
    }
}

#[test]
fn planar_kcovers_at_scale() {
    for n in 2..=40 {
        for k in 1..=4 {
            let c = kcover_2d(n, k).unwrap();
            assert_eq!(c.cardinality(), kcover_2d_cardinality(n, k).unwrap());
            assert!(verify_cover(&c, k).valid, "n={n} k={k}");
        }
    }
}

#[test]
fn weak_duality_between_constructions_and_lp() {
    for n in 1..=8 {
        let lp = f_star(shape(n, 2)).unwrap();
        assert!(
            mass_certificate_2d(n).unwrap().total_mass()
                <= fractional_cover_2d(n).unwrap().total_weight()
        );
        assert!(lp.dual.total_mass() <= fractional_cover_2d(n).unwrap().total_weight());
        assert!(mass_certificate_2d(n).unwrap().total_mass() <= lp.primal.total_weight());
    }
    let lp = f_star(shape(2, 3)).unwrap();
    assert_eq!(
        lp.optimum,
        simplex_fractional_cover(3).unwrap().total_weight()
    );
}

#[test]
fn pruning_does_not_change_optima() {
    for (n, d) in [(3, 2), (5, 2), (2, 3), (3, 3), (2, 4)] {
        let a = solve_lp(&build_cover_lp(shape(n, d), true))
            .unwrap()
            .optimum;
        let b = solve_lp(&build_cover_lp(shape(n, d), false))
            .unwrap()
            .optimum;
        assert_eq!(a, b, "n={n} d={d}");
    }
}

#[test]
fn lp_solves_are_deterministic() {
    let a = f_star(shape(6, 2)).unwrap();
    let b = f_star(shape(6, 2)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn integer_optima_sandwich_and_monotonicity() {
    let mut table = std::collections::BTreeMap::new();
    for d in 1..=3 {
        for n in 1..=4 {
            for k in 1..=3 {
                let s = shape(n, d);
                let res = f_int(s, k, SearchConfig::for_shape(s)).unwrap();
                assert!(res.proven);
                assert!(
                    lp_lower_bound(s, k).unwrap() <= res.optimum,
                    "n={n} d={d} k={k}"
                );
                if d == 2 && n >= 2 {
                    assert!(res.optimum <= kcover_2d_cardinality(n, k).unwrap());
                }
                table.insert((n, d, k), res.optimum);
            }
        }
    }
    for (&(n, d, k), &v) in &table {
        if let Some(&up) = table.get(&(n, d + 1, k)) {
            assert!(up <= v, "d-monotone at n={n} d={d} k={k}");
        }
        if let Some(&more) = table.get(&(n, d, k + 1)) {
            assert!(v <= more, "k-monotone at n={n} d={d} k={k}");
        }
    }
}

#[test]
fn k_times_fractional_bounds_planar_optima() {
    for n in 2..=5 {
        let fs = f_star(shape(n, 2)).unwrap().optimum;
        for k in 1..=4 {
            let s = shape(n, 2);
            let v = f_int(s, k, SearchConfig::for_shape(s)).unwrap().optimum;
            assert!(int(v as i64) >= &fs * int(k.into()), "n={n} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scaled_planar_cover_stays_valid(n in 1u32..30, num in 1i64..4, den in 1i64..4) {
        let cover = fractional_cover_2d(n).unwrap();
        let factor = Rational::new(num.into(), den.into());
        let scaled = cover.scaled(&factor).unwrap();
        prop_assert_eq!(verify_fractional_cover(&scaled).valid, factor >= Rational::one());
    }

    #[test]
    fn removing_a_line_breaks_a_tight_kcover(n in 2u32..25, k in 1u32..5) {
        let mut c = kcover_2d(n, k).unwrap();
        let shape = c.shape();
        let first = c.multiplicities().keys().next().unwrap().clone();
        prop_assert!(c.remove_one(&first));
        // some point on the removed line was covered exactly k times unless
        // every point there had slack
        let tight = enumerate_points(shape)
            .iter()
            .filter(|p| first.contains(p))
            .any(|p| c.coverage(p) < u64::from(k));
        prop_assert_eq!(verify_cover(&c, k).valid, !tight);
    }
}
