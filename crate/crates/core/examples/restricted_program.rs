// The standard-line integer program and its scaling to a fractional cover
// of the small grid.

use tricover::constructions::f_star_closed_form_2d;
use tricover::lp::scaled_dual_from_ip;
use tricover::rational::int;
use tricover::search::solve_restricted_ip;

pub fn run() -> usize {
    let mut rows = 0;
    for k in 2..=5 {
        for n in [6, 12, 24] {
            let ip = solve_restricted_ip(n, k).unwrap();
            let scaled = scaled_dual_from_ip(&ip.alpha, &ip.beta, &ip.gamma, n, k).unwrap();
            let floor = f_star_closed_form_2d(k) * int(n.into());
            println!(
                "k={k} n={n:>2}: optimum {:>3} >= {:>6}   scaled weight {}",
                ip.optimum(),
                floor.to_string(),
                scaled.total_weight()
            );
            assert!(int(ip.optimum()) >= floor);
            rows += 1;
        }
    }
    rows
}

fn main() {
    run();
}
