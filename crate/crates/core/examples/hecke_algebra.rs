//! Exact arithmetic in the Iwahori–Hecke algebra of type A1 with an abstract
//! parameter: quadratic relation, the Bernstein relation, and the Poincaré series.

use lpexpander::hecke::bernstein::Variant;
use lpexpander::hecke::Hecke;
use lpexpander::rootsys::{Coweight, RootType};

fn main() -> lpexpander::Result<()> {
    let hk = Hecke::abstract_type(RootType::A1);
    let s0 = hk.h_generator(0);
    println!("h_s0² = {}", hk.display(&hk.multiply(&s0, &s0)));

    let y = hk.y_beta(&Coweight(vec![1]));
    println!("Y_β1 = {}", hk.display(&y));

    let s1 = hk.group.rs.weyl0.simple[0];
    let table = hk.bernstein_coeffs(s1, &Coweight(vec![1]), Variant::Unprimed);
    for ((w0, beta), c) in &table.entries {
        println!("α[w0' = {w0}, β' = {:?}] = {c}", beta.0);
    }
    println!("Bernstein relation holds: {}", hk.bernstein_lhs(&table) == hk.bernstein_rhs(&table));

    for (d, lhs, rhs, equal) in hk.poincare_compare(6)? {
        println!("Poincaré degree {d}: {lhs} terms vs {rhs} terms, equal = {equal}");
    }
    Ok(())
}
