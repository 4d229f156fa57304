// Block k-covers in every dimension and their slope constants.

use tricover::constructions::{block_cover, block_plan, slope_constant};
use tricover::grid::GridShape;
use tricover::rational::int;
use tricover::verify::verify_cover;

pub fn run() -> usize {
    let mut checked = 0;
    for (d, k) in [(2, 3), (2, 5), (3, 2), (3, 4), (4, 3), (5, 6)] {
        let c = slope_constant(d, k);
        let (_, _, plan) = block_plan(d, k);
        let n = 40;
        let cover = block_cover(GridShape::new(n, d).unwrap(), k).unwrap();
        let valid = verify_cover(&cover, k).valid;
        let residual = int(cover.cardinality() as i64) - &c.value * int(n.into());
        println!(
            "d={d} k={k}: C = {:>5}  M = {:>2}  |cover| = {:>3}  residual {:>5}  valid {valid}",
            c.value.to_string(),
            plan.modulus,
            cover.cardinality(),
            residual.to_string()
        );
        assert!(valid);
        checked += 1;
    }
    checked
}

fn main() {
    run();
}
