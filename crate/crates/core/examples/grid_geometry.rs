// Points, canonical hyperplanes and the candidate set of a triangular grid.

use tricover::grid::{
    covered_points, enumerate_candidate_hyperplanes, enumerate_points, normalize_hyperplane,
    standard_hyperplanes, GridShape,
};

pub fn run() -> (usize, usize, usize) {
    let shape = GridShape::new(4, 2).unwrap();
    let points = enumerate_points(shape);
    println!("{shape} has {} points", points.len());

    let h = normalize_hyperplane(&[-2, -2], -6).unwrap();
    let on: Vec<String> = covered_points(&h, shape)
        .unwrap()
        .iter()
        .map(|p| p.to_string())
        .collect();
    println!("{h} meets {}", on.join(" "));

    let standard = standard_hyperplanes(shape);
    let bounding = standard.iter().filter(|s| s.bounding).count();
    println!("{} standard lines, {bounding} bounding", standard.len());

    let candidates = enumerate_candidate_hyperplanes(shape, true);
    println!("{} candidate lines after pruning", candidates.len());
    (points.len(), standard.len(), candidates.len())
}

fn main() {
    run();
}
