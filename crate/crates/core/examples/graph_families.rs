//! Families of random cubic graphs: the diameter theorem, the Alon–Boppana
//! lower bound from the tree, and Serre-type spectral approximation.

use lpexpander::complexes::graph::{alon_boppana_check, serre_check};
use lpexpander::complexes::tree::{simple_walk, TreeBall};
use lpexpander::complexes::{ChamberComplex, Graph, GraphMode};

fn main() -> lpexpander::Result<()> {
    let family = [40, 80, 160]
        .iter()
        .map(|&n| ChamberComplex::from_graph(Graph::random_regular(n, 3, n as u64)?, GraphMode::Regular))
        .collect::<lpexpander::Result<Vec<_>>>()?;

    for x in &family {
        let r = x.distance_theorem_check()?;
        println!(
            "{} edges: gallery diameter {} ≤ {:.2}, mean distance {:.2}, p = {:.3}",
            r.chambers, r.diameter, r.bounds.diameter_upper, r.mean, r.p
        );
    }

    let ball = TreeBall::new(2, 14)?;
    let walk = simple_walk(&ball.group, &ball.params);
    let kesten = ball.kesten_estimate(&walk, 4000, 1e-10)?;
    for row in alon_boppana_check(&family, &walk, &kesten)? {
        println!(
            "{} edges: largest nontrivial |λ| {:.4} ≥ tree bound {:.4} (n = {})",
            row.chambers, row.max_nontrivial, row.lower_bound, row.n
        );
    }

    let (points, rows) = serre_check(&family, &walk, 7, 6)?;
    println!("tree sample points {:?}", points.iter().map(|p| (p * 1e3).round() / 1e3).collect::<Vec<_>>());
    for row in rows {
        println!("{} edges, girth {}: farthest sample point {:.4}", row.chambers, row.injectivity_radius, row.max_distance);
    }
    Ok(())
}
