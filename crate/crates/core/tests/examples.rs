// Runs every example under test so they cannot rot.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(grid_geometry);
example!(fractional_optimum);
example!(planar_constructions);
example!(block_covers);
example!(integer_search);
example!(restricted_program);
example!(conjecture_sweep);
example!(artifact_roundtrip);

use tricover::rational::frac;

#[test]
fn grid_geometry_counts() {
    let (points, standard, candidates) = grid_geometry::run();
    assert_eq!((points, standard), (10, 12));
    assert!(candidates >= 9);
}

#[test]
fn fractional_optimum_table() {
    let table = fractional_optimum::run();
    assert!(table.contains(&(5, 2, frac(18, 5))));
    assert!(table.contains(&(2, 3, frac(4, 3))));
    let (_, _, v333) = table.last().unwrap();
    assert!(*v333 <= frac(11, 6));
}

#[test]
fn planar_constructions_agree() {
    assert!(planar_constructions::run());
}

#[test]
fn block_covers_verify() {
    assert_eq!(block_covers::run(), 6);
}

#[test]
fn integer_search_values() {
    let rows = integer_search::run();
    assert_eq!(
        rows,
        vec![
            (4, 2, 3, 9),
            (5, 2, 1, 5),
            (3, 2, 2, 5),
            (4, 3, 2, 6),
            (2, 2, 4, 6)
        ]
    );
}

#[test]
fn restricted_program_bounds() {
    assert_eq!(restricted_program::run(), 12);
}

#[test]
fn conjecture_sweep_csv() {
    let text = conjecture_sweep::run();
    assert!(text.starts_with("n,d,k,value,proven,slope,residual\n"));
    assert_eq!(text.lines().count(), 1 + 5 + 3);
}

#[test]
fn artifact_roundtrip_accepts() {
    assert_eq!(artifact_roundtrip::run(), vec![0, 0, 0]);
}
