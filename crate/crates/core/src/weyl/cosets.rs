use std::collections::{BTreeSet, HashSet};

use super::{AffineWeyl, ParamSystem, WeylElement};
use crate::error::{Error, Result};
use crate::laurent::{Exps, Laurent};

/// Shortest double-coset representative and the associated counts.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceData {
    pub d_min: WeylElement,
    pub i3: Vec<usize>,
    pub q_d: Laurent,
    pub n_d: Laurent,
}

impl AffineWeyl {
    fn check_spherical(&self, set: &[usize]) -> Result<()> {
        if set.iter().any(|&i| i > self.rank()) {
            return Err(Error::Usage(format!("generator index out of range in {set:?}")));
        }
        let distinct: BTreeSet<usize> = set.iter().copied().collect();
        if distinct.len() == self.num_generators() {
            return Err(Error::Usage("the full generating set is not spherical".into()));
        }
        Ok(())
    }

    /// Elements of the finite parabolic subgroup `W_I`.
    pub fn parabolic_subgroup(&self, set: &[usize]) -> Result<Vec<WeylElement>> {
        self.check_spherical(set)?;
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        let mut head = 0;
        while head < out.len() {
            for &i in set {
                let x = self.multiply(&out[head], self.generator(i));
                if seen.insert(x.clone()) {
                    out.push(x);
                }
            }
            head += 1;
        }
        Ok(out)
    }

    /// `q_{W_I} = Σ_{w ∈ W_I} q_w`.
    pub fn parabolic_weight(&self, set: &[usize], params: &ParamSystem) -> Result<Laurent> {
        let mut total = Laurent::zero(params.nclasses);
        for w in self.parabolic_subgroup(set)? {
            total.add_assign_ref(&params.q_w(self, &w));
        }
        Ok(total)
    }

    /// Shortest element of `W_{I₁} w W_{I₂}` with `q_d` and `n_d`.
    pub fn double_coset_min(
        &self,
        i1: &[usize],
        i2: &[usize],
        w: &WeylElement,
        params: &ParamSystem,
    ) -> Result<DistanceData> {
        let g1 = self.parabolic_subgroup(i1)?;
        let g2 = self.parabolic_subgroup(i2)?;
        let mut best: Option<(usize, Vec<WeylElement>)> = None;
        for x in &g1 {
            let xw = self.multiply(x, w);
            for y in &g2 {
                let e = self.multiply(&xw, y);
                let l = self.length(&e);
                match &mut best {
                    Some((bl, v)) if l == *bl => {
                        if !v.contains(&e) {
                            v.push(e)
                        }
                    }
                    Some((bl, _)) if l > *bl => {}
                    _ => best = Some((l, vec![e])),
                }
            }
        }
        let (_, mins) = best.expect("double coset is non-empty");
        if mins.len() != 1 {
            return Err(Error::Internal(format!("double coset has {} shortest elements", mins.len())));
        }
        let d = mins.into_iter().next().unwrap();
        let dinv = self.inverse(&d);
        let i3: Vec<usize> = i1
            .iter()
            .copied()
            .filter(|&s| {
                let c = self.multiply(&self.multiply(&dinv, self.generator(s)), &d);
                i2.iter().any(|&t| *self.generator(t) == c)
            })
            .collect();
        // Minimal coset representatives of W_{I₁}/W_{I₃}.
        let mut q_rep = Laurent::zero(params.nclasses);
        for x in &g1 {
            if i3.iter().all(|&s| self.right_ascent(x, s)) {
                q_rep.add_assign_ref(&params.q_w(self, x));
            }
        }
        let q_d = &q_rep * &params.q_w(self, &d);
        let n_d = self.parabolic_weight(&i3, params)?;
        Ok(DistanceData { d_min: d, i3, q_d, n_d })
    }

    /// `L(w) = l(w₀) + l(β₂) − l(β₁)` for `w = t_β w₀`, `β = β₁ − β₂`,
    /// and the exponents of `u` in `Q_w = q_{w₀} q_{β₂} q_{β₁}⁻¹`.
    pub fn sector_length(&self, w: &WeylElement, params: &ParamSystem) -> (i64, Exps) {
        let (b1, b2) = w.beta.dominant_split();
        self.sector_length_split(w, &b1, &b2, params)
    }

    /// As [`Self::sector_length`] with an explicit dominant split of the translation part.
    pub fn sector_length_split(
        &self,
        w: &WeylElement,
        b1: &crate::rootsys::Coweight,
        b2: &crate::rootsys::Coweight,
        params: &ParamSystem,
    ) -> (i64, Exps) {
        debug_assert_eq!(b1.sub(b2), w.beta);
        let n = self.rank();
        let fin = WeylElement::finite(n, w.fin);
        let t1 = WeylElement::translation(b1.clone());
        let t2 = WeylElement::translation(b2.clone());
        let l = self.length(&fin) as i64 + self.length(&t2) as i64 - self.length(&t1) as i64;
        let ef = params.u_exponents(self, &fin);
        let e1 = params.u_exponents(self, &t1);
        let e2 = params.u_exponents(self, &t2);
        let e = (0..params.nclasses).map(|c| ef[c] + e2[c] - e1[c]).collect();
        (l, e)
    }
}
