//! Truncated generalised Poincaré series `Σ_{l(w) ≤ L} h_w u_w` and the
//! product formula `P_{W₀} · ∏_i (1 − h_{β_i} u_{β_i})⁻¹ · P_{Â₀}`.

use std::collections::BTreeMap;

use super::{Hecke, HeckeElement};
use crate::error::Result;
use crate::laurent::Exps;
use crate::rootsys::Coweight;
use crate::weyl::WeylElement;

/// Formal series in the `u_c`, coefficients in the Hecke algebra, keyed by `u`-exponents.
pub type Series = BTreeMap<Exps, HeckeElement>;

fn degree(e: &Exps) -> i32 {
    e.iter().sum()
}

impl Hecke {
    fn series_add_term(&self, s: &mut Series, e: Exps, h: &HeckeElement) {
        let entry = s.entry(e.clone()).or_insert_with(|| self.zero());
        *entry = entry.add(h);
        if entry.is_zero() {
            s.remove(&e);
        }
    }

    fn series_mul(&self, a: &Series, b: &Series, max_deg: usize) -> Series {
        let mut out = Series::new();
        for (ea, ha) in a {
            for (eb, hb) in b {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if degree(&e) as usize <= max_deg {
                    let p = self.multiply(ha, hb);
                    self.series_add_term(&mut out, e, &p);
                }
            }
        }
        out
    }

    fn series_of(&self, elems: impl IntoIterator<Item = WeylElement>, max_deg: usize) -> Series {
        let mut s = Series::new();
        for w in elems {
            let e = self.params.u_exponents(&self.group, &w);
            if degree(&e) as usize <= max_deg {
                self.series_add_term(&mut s, e, &self.basis(&w));
            }
        }
        s
    }

    /// Left side: `Σ_{l(w) ≤ L} h_w u_w`.
    pub fn poincare_truncated(&self, l: usize) -> Result<Series> {
        let ball = self.group.enumerate_ball(l)?;
        Ok(self.series_of(ball.into_iter().map(|(w, _)| w), l))
    }

    /// Right side: the product formula truncated at total degree `L`.
    pub fn poincare_product(&self, l: usize) -> Series {
        let g = &self.group;
        let n = g.rank();
        let mut acc = self.series_of((0..g.rs.weyl0.order()).map(|f| WeylElement::finite(n, f)), l);
        for i in 0..n {
            let t = WeylElement::translation(Coweight::basis(n, i));
            let e = self.params.u_exponents(g, &t);
            let mut geo = Series::new();
            let mut power = self.one();
            let mut k = 0;
            while (degree(&e) * k) as usize <= l {
                let ek: Exps = e.iter().map(|x| x * k).collect();
                self.series_add_term(&mut geo, ek, &power);
                power = self.multiply(&power, &self.basis(&t));
                k += 1;
            }
            acc = self.series_mul(&acc, &geo, l);
        }
        let boxes = self.series_of(g.fundamental_box().iter().cloned(), l);
        self.series_mul(&acc, &boxes, l)
    }

    /// Per-degree comparison of both sides; `(degree, lhs terms, rhs terms, equal)`.
    pub fn poincare_compare(&self, l: usize) -> Result<Vec<(usize, usize, usize, bool)>> {
        let lhs = self.poincare_truncated(l)?;
        let rhs = self.poincare_product(l);
        let mut rows = vec![];
        for d in 0..=l {
            let pick = |s: &Series| -> Vec<(Exps, HeckeElement)> {
                s.iter().filter(|(e, _)| degree(e) as usize == d).map(|(e, h)| (e.clone(), h.clone())).collect()
            };
            let a = pick(&lhs);
            let b = pick(&rhs);
            let count = |v: &Vec<(Exps, HeckeElement)>| v.iter().map(|(_, h)| h.len()).sum();
            rows.push((d, count(&a), count(&b), a == b));
        }
        Ok(rows)
    }

    pub fn poincare_identity_check(&self, l: usize) -> Result<bool> {
        Ok(self.poincare_compare(l)?.iter().all(|r| r.3))
    }
}
