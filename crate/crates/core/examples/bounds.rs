//! Closed-form bounds: `D(q, l)`, the `‖h_w‖_p` bound compared with the tree,
//! the distance bounds, and the uniform `p₀` table.

use lpexpander::bounds::{d_constant, diameter_bounds, norm_bound_hw, oh_p0};
use lpexpander::complexes::tree::TreeBall;
use lpexpander::laurent::Rational;
use lpexpander::weyl::AffineWeyl;

fn main() -> lpexpander::Result<()> {
    let a1 = AffineWeyl::load("A1")?;
    let d = d_constant(Rational::from_integer(2), 3, &a1)?;
    println!("D(2, 3) for A1 = {}", d.bound);

    let tree = TreeBall::new(2, 10)?;
    for word in ["s0", "s0 s1", "s0 s1 s0 s1"] {
        let w = a1.from_word(word)?;
        let r = norm_bound_hw(2.0, &w, &a1, &tree.params)?.with_empirical(tree.basis_norm(&w, 2.0)?);
        println!("‖h_w‖₂ for w = {word:<12} {:.4} ≤ {:.1}", r.empirical.unwrap(), r.bound);
    }

    let b = diameter_bounds(2.0, 2.0, 1024.0, &a1)?;
    println!("N = 1024, q = 2: typical distance in [{:.2}, {:.2}], diameter ≤ {:.2}", b.avg_lower, b.avg_upper, b.diameter_upper);

    for t in ["A3", "C4", "D5", "E8", "F4", "G2"] {
        println!("p₀({t}) = {}", oh_p0(t)?);
    }
    Ok(())
}
