//! Chamber systems beyond graphs: a thin A2 torus with its Ω̂ action, a
//! chamber-system round trip, and the boundary operators of K_{3,3}.

use lpexpander::complexes::{parse_chamber_system, thin_torus, ChamberComplex, Graph, GraphMode};
use lpexpander::weyl::AffineWeyl;

fn main() -> lpexpander::Result<()> {
    let g = AffineWeyl::load("A2")?;
    let torus = thin_torus(&g, 2)?;
    torus.check_relations()?;
    println!("thin A2 torus: {} chambers, Ω̂ acts: {}", torus.n_chambers, torus.omega.is_some());

    let text = torus.to_json().to_string();
    let back = parse_chamber_system(&text)?;
    println!("round trip through the chamber-system format: {}", back.panels == torus.panels);

    let k33 = ChamberComplex::from_graph(Graph::complete_bipartite(3, 3), GraphMode::Biregular)?;
    let b = k33.boundary_ops()?;
    for i in 0..2 {
        let e2 = b.e[i].mul(&b.e[i]);
        println!(
            "K_{{3,3}} color {i}: {} vertices, e² = (q+1)e: {}",
            b.vertices[i].len(),
            e2.same(&b.e[i].scale(lpexpander::laurent::Rational::from_integer(3)))
        );
    }
    Ok(())
}
