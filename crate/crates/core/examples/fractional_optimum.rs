// Exact fractional optima with primal cover and dual point masses.

use tricover::constructions::f_star_closed_form_2d;
use tricover::grid::GridShape;
use tricover::lp::{build_cover_lp, complementary_slackness_holds, f_star, solve_lp};
use tricover::rational::Rational;

pub fn run() -> Vec<(u32, u32, Rational)> {
    let mut table = Vec::new();
    for n in 1..=8 {
        let sol = f_star(GridShape::new(n, 2).unwrap()).unwrap();
        assert_eq!(sol.optimum, f_star_closed_form_2d(n));
        println!(
            "f*({n},2) = {:>6}   primal lines {:>2}, dual support {:>2}",
            sol.optimum.to_string(),
            sol.primal.len(),
            sol.dual.support_len()
        );
        table.push((n, 2, sol.optimum));
    }
    for d in 1..=4 {
        let sol = f_star(GridShape::new(2, d).unwrap()).unwrap();
        println!("f*(2,{d}) = {}", sol.optimum);
        table.push((2, d, sol.optimum));
    }
    let lp = build_cover_lp(GridShape::new(3, 3).unwrap(), true);
    let sol = solve_lp(&lp).unwrap();
    println!(
        "f*(3,3) = {} over {} candidate planes; slackness {}",
        sol.optimum,
        lp.columns(),
        complementary_slackness_holds(&lp, &sol)
    );
    table.push((3, 3, sol.optimum));
    table
}

fn main() {
    run();
}
