// Measured f(n,d,k) against predicted slopes, written as CSV.

use tricover::verify::{check_d3_conjecture, check_duality_conjecture, residual_range, write_csv};

pub fn run() -> String {
    let mut rows = check_duality_conjecture(3, 2..=6, 1_000_000).unwrap();
    rows.extend(check_d3_conjecture(2, 2..=4, 1_000_000).unwrap());
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    print!("{text}");
    if let Some((lo, hi)) = residual_range(&rows) {
        println!("residuals in [{lo}, {hi}]");
    }
    text
}

fn main() {
    run();
}
