// Exact minimum k-covers by branch-and-bound, cross-checked by the
// exhaustive oracle on small grids.

use tricover::grid::GridShape;
use tricover::search::{brute_force_cover, f_int, lp_lower_bound, SearchConfig};

pub fn run() -> Vec<(u32, u32, u32, u64)> {
    let mut rows = Vec::new();
    for (n, d, k) in [(4, 2, 3), (5, 2, 1), (3, 2, 2), (4, 3, 2), (2, 2, 4)] {
        let shape = GridShape::new(n, d).unwrap();
        let res = f_int(shape, k, SearchConfig::for_shape(shape)).unwrap();
        let lower = lp_lower_bound(shape, k).unwrap();
        println!(
            "f({n},{d},{k}) = {:>2}  proven {}  nodes {:>5}  LP bound {lower}",
            res.optimum, res.proven, res.nodes_explored
        );
        if shape.point_count() <= 10 {
            let oracle = brute_force_cover(shape, k, res.optimum).unwrap().unwrap();
            assert_eq!(oracle.cardinality(), res.optimum);
        }
        rows.push((n, d, k, res.optimum));
    }
    rows
}

fn main() {
    run();
}
