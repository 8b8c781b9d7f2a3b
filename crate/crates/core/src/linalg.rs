//! Dense eigenvalue helpers and small exact matrix arithmetic.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::Rational;

pub type CMat = DMatrix<Complex64>;

/// Square rational matrix, row-major.
pub type QMat = Vec<Vec<Rational>>;

/// Sorts by real part, then imaginary part, after rounding noise away.
pub fn sort_eigs(v: &mut [Complex64]) {
    for z in v.iter_mut() {
        if z.im.abs() < 1e-12 {
            z.im = 0.0;
        }
    }
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

const SCHUR_MAX_ITER: usize = 20_000;

/// Fixed-seed orthogonal matrix, used to break the symmetry of matrices on which
/// the QR iteration stalls (permutation-like operators).
fn scrambler(n: usize) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let a = DMatrix::from_fn(n, n, |_, _| rng.gen::<f64>() - 0.5);
    a.qr().q()
}

pub fn eigenvalues(m: &CMat) -> Vec<Complex64> {
    let n = m.nrows();
    if n == 0 {
        return vec![];
    }
    let eps = 1e-15 * m.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let t = match Schur::try_new(m.clone(), eps, SCHUR_MAX_ITER) {
        Some(s) => s.unpack().1,
        None => {
            let q = scrambler(n).map(|x| Complex64::new(x, 0.0));
            let conj = q.adjoint() * m * &q;
            Schur::try_new(conj, 1e3 * eps, 10 * SCHUR_MAX_ITER).expect("Schur iteration converges").unpack().1
        }
    };
    let mut v: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    sort_eigs(&mut v);
    v
}

pub fn eigenvalues_real(m: &DMatrix<f64>) -> Vec<Complex64> {
    let n = m.nrows();
    if n == 0 {
        return vec![];
    }
    let scale = m.amax().max(1.0);
    if (m - m.transpose()).amax() <= 1e-13 * scale {
        let sym = (m + m.transpose()) * 0.5;
        let mut v: Vec<Complex64> = sym.symmetric_eigenvalues().iter().map(|x| Complex64::new(*x, 0.0)).collect();
        sort_eigs(&mut v);
        return v;
    }
    let eps = 1e-15 * scale;
    let mut v: Vec<Complex64> = match Schur::try_new(m.clone(), eps, SCHUR_MAX_ITER) {
        Some(s) => s.complex_eigenvalues().iter().copied().collect(),
        None => {
            let q = scrambler(n);
            let conj = q.transpose() * m * &q;
            Schur::try_new(conj, 1e3 * eps, 10 * SCHUR_MAX_ITER)
                .expect("Schur iteration converges")
                .complex_eigenvalues()
                .iter()
                .copied()
                .collect()
        }
    };
    sort_eigs(&mut v);
    v
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn eigenvalues_symmetric(m: &DMatrix<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Coefficients of `∏ (1 − λ t)`, constant term first.
pub fn char_poly_from_eigs(eigs: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &l in eigs {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k] += a;
            next[k + 1] -= a * l;
        }
        c = next;
    }
    c
}

pub fn q_identity(n: usize) -> QMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::from_integer(1) } else { Rational::zero() }).collect()).collect()
}

pub fn q_mul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * bk[j];
            }
        }
    }
    out
}

pub fn q_lin(a: &QMat, ca: Rational, b: &QMat, cb: Rational) -> QMat {
    a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| ca * x + cb * y).collect()).collect()
}

pub fn q_to_c(a: &QMat) -> CMat {
    let n = a.len();
    DMatrix::from_fn(n, n, |i, j| Complex64::new(crate::laurent::ratio_to_f64(&a[i][j]), 0.0))
}
