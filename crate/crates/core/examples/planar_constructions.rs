// The closed-form planar covers and hexagon mass certificates, checked
// against each other and against the verifier.

use tricover::constructions::{
    f_star_closed_form_2d, fractional_cover_2d, kcover_2d, kcover_2d_cardinality,
    mass_certificate_2d,
};
use tricover::verify::{verify_cover, verify_fractional_cover, verify_mass_certificate};

pub fn run() -> bool {
    let mut ok = true;
    for n in [4, 10, 11, 12] {
        let cover = fractional_cover_2d(n).unwrap();
        let cert = mass_certificate_2d(n).unwrap();
        let upper = verify_fractional_cover(&cover);
        let lower = verify_mass_certificate(&cert);
        println!(
            "n={n:>2}: cover weight {} (valid {}), mass {} (valid {}), closed form {}",
            cover.total_weight(),
            upper.valid,
            cert.total_mass(),
            lower.valid,
            f_star_closed_form_2d(n)
        );
        ok &= upper.valid && lower.valid && cover.total_weight() == cert.total_mass();
    }
    for k in 1..=4 {
        let cover = kcover_2d(9, k).unwrap();
        let valid = verify_cover(&cover, k).valid;
        println!(
            "{k}-cover of T_2(9): {} lines, valid {valid}",
            cover.cardinality()
        );
        ok &= valid && cover.cardinality() == kcover_2d_cardinality(9, k).unwrap();
    }
    ok
}

fn main() {
    assert!(run());
}
