//! One-dimensional and file-defined representations: validation, `p_min`,
//! the eigenvalue criterion and the zeta data.

use lpexpander::reps::{builtin_rep, one_dim_reps, parse_rep};
use lpexpander::weyl::{AffineWeyl, ParamSystem};

const PRINCIPAL: &str = r#"{"type": "A1", "dim": 2, "q": 2,
  "generators": {"s0": [[2, 1], [0, -1]], "s1": [[-1, 0], [1, 2]], "w1": [[0, 1], [1, 0]]}}"#;

fn main() -> lpexpander::Result<()> {
    let g = AffineWeyl::load("A2")?;
    let params = ParamSystem::equal(&g, 3);
    for name in ["trivial", "steinberg"] {
        let r = builtin_rep(name, &g, &params)?;
        println!("A2 q=3 {name}: p_min = {}, unitary = {}", r.p_min()?.to_json(), r.is_unitary());
    }

    let a1 = AffineWeyl::load("A1")?;
    let reps = one_dim_reps(&a1, &ParamSystem::equal(&a1, 2))?;
    println!("A1 has {} one-dimensional representations", reps.len());

    let r = parse_rep(PRINCIPAL)?;
    println!("2-dimensional A1 rep: p_min = {}, unitary = {}", r.p_min()?.to_json(), r.is_unitary());
    for p in [1.5, 2.0] {
        println!("  eigenvalue criterion at p = {p}: {}", r.rh_check(p));
    }
    let z = r.zeta();
    println!("  det(1 − h_β1 t) coefficients: {:?}", z.char_polys[0].iter().map(|c| c.re).collect::<Vec<_>>());
    Ok(())
}
