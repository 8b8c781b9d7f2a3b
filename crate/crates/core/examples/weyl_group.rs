//! Enumerate a ball in the extended affine Weyl group of type A2, print reduced
//! words, and decompose elements as `w₀ · t_β · a`.

use lpexpander::weyl::AffineWeyl;

fn main() -> lpexpander::Result<()> {
    let g = AffineWeyl::load("A2")?;
    let ball = g.enumerate_ball(3)?;
    let mut per_length = [0usize; 4];
    for (_, l) in &ball {
        per_length[*l] += 1;
    }
    println!("A2: {} elements of length ≤ 3, per length {:?}", ball.len(), per_length);
    println!("Ω̂ has {} elements; the box Â₀ has {}", g.omegas.len(), g.fundamental_box().len());

    for word in ["s0 s1 s2", "s1 s2 s1", "s0 s1 w1"] {
        let w = g.from_word(word)?;
        let (w0, beta, a) = g.structure_decompose(&w);
        println!(
            "{word:>10}: length {}, reduced word {:?}, w₀ length {}, β = {:?}, a = {}",
            g.length(&w),
            g.label(&w),
            g.rs.weyl0.lengths[w0],
            beta.0,
            g.label(&a)
        );
    }

    let report = g.structure_check(8)?;
    println!("structure check on the l ≤ 8 ball: {} elements, pass = {}", report.elements, report.pass());
    Ok(())
}
