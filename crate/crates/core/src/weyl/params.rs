use std::collections::BTreeMap;

use num_traits::{One, Signed};

use super::{AffineWeyl, WeylElement};
use crate::error::{Error, Result};
use crate::laurent::{ratio_to_f64, Exps, Laurent, Rational};

/// Partition of `S` into parameter classes, with optional numeric values.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSystem {
    /// Class of generator `s_i`.
    pub class_of: Vec<usize>,
    pub nclasses: usize,
    /// Numeric `q_c` per class; `None` in abstract mode.
    pub q: Option<Vec<Rational>>,
}

impl ParamSystem {
    /// Finest partition allowed: generators joined by odd `m` or by `Ω̂`.
    pub fn finest(g: &AffineWeyl) -> ParamSystem {
        let k = g.num_generators();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let union = |a: usize, b: usize, p: &mut Vec<usize>| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for i in 0..k {
            for j in i + 1..k {
                if let Some(m) = g.coxeter_m(i, j) {
                    if m % 2 == 1 {
                        union(i, j, &mut parent);
                    }
                }
            }
        }
        for o in &g.omegas {
            for i in 0..k {
                union(i, o.perm[i], &mut parent);
            }
        }
        let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
        let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
        for &r in &roots {
            let next = ids.len();
            ids.entry(r).or_insert(next);
        }
        ParamSystem { class_of: roots.iter().map(|r| ids[r]).collect(), nclasses: ids.len(), q: None }
    }

    /// Finest partition with one common numeric value.
    pub fn equal(g: &AffineWeyl, q: i64) -> ParamSystem {
        let mut p = Self::finest(g);
        p.q = Some(vec![Rational::from_integer(q as i128); p.nclasses]);
        p
    }

    /// Numeric parameters per class, given as `(generator name, value)` pairs.
    /// Any member of a class may name it; unspecified classes default to `default`.
    pub fn numeric(g: &AffineWeyl, assignments: &[(String, Rational)], default: Option<Rational>) -> Result<ParamSystem> {
        let mut p = Self::finest(g);
        let mut q: Vec<Option<Rational>> = vec![default; p.nclasses];
        for (name, val) in assignments {
            if !val.is_positive() {
                return Err(Error::Config(format!("parameter {name}={val} must be positive")));
            }
            let c = p.class_by_name(name)?;
            if let Some(prev) = q[c] {
                if prev != *val && (default != Some(prev)) {
                    return Err(Error::Config(format!(
                        "inconsistent parameters for class {}: {prev} and {val}",
                        p.class_name(c)
                    )));
                }
            }
            q[c] = Some(*val);
        }
        let vals = q
            .into_iter()
            .enumerate()
            .map(|(c, v)| v.ok_or_else(|| Error::Config(format!("missing parameter for class {}", p.class_name(c)))))
            .collect::<Result<Vec<_>>>()?;
        p.q = Some(vals);
        Ok(p)
    }

    /// Checks `q_s = q_{s'}` for odd `m` and `Ω̂`-invariance of a partition.
    pub fn validate(&self, g: &AffineWeyl) -> Result<()> {
        let finest = Self::finest(g);
        for i in 0..self.class_of.len() {
            for j in 0..self.class_of.len() {
                if finest.class_of[i] == finest.class_of[j] && self.class_of[i] != self.class_of[j] {
                    return Err(Error::Config(format!("s{i} and s{j} must share a parameter class")));
                }
            }
        }
        Ok(())
    }

    /// Name of a class: its lowest generator, e.g. `"s0"`.
    pub fn class_name(&self, c: usize) -> String {
        let i = self.class_of.iter().position(|&x| x == c).unwrap();
        format!("s{i}")
    }

    pub fn class_by_name(&self, name: &str) -> Result<usize> {
        let t = name.trim().to_ascii_lowercase();
        let i: usize = t
            .strip_prefix('s')
            .and_then(|r| r.parse().ok())
            .filter(|i| *i < self.class_of.len())
            .ok_or_else(|| Error::Usage(format!("unknown parameter class {name:?}")))?;
        Ok(self.class_of[i])
    }

    pub fn q_f64(&self) -> Result<Vec<f64>> {
        Ok(self
            .q
            .as_ref()
            .ok_or_else(|| Error::Usage("numeric parameters required".into()))?
            .iter()
            .map(ratio_to_f64)
            .collect())
    }

    /// Integer parameters, if every class has one.
    pub fn q_int(&self) -> Option<Vec<i64>> {
        self.q.as_ref()?.iter().map(|r| r.is_integer().then(|| *r.numer() as i64)).collect()
    }

    pub fn q_max(&self) -> Result<f64> {
        Ok(self.q_f64()?.into_iter().fold(f64::MIN, f64::max))
    }

    pub fn q_of_generator(&self, i: usize) -> Result<f64> {
        Ok(self.q_f64()?[self.class_of[i]])
    }

    /// `u_c = v_c^2` for the class of `s_i`.
    pub fn u_gen(&self, i: usize) -> Laurent {
        Laurent::u(self.nclasses, self.class_of[i])
    }

    /// Exponents of `u_w = ∏ u_c^{k_c}`: class counts along a reduced word.
    pub fn u_exponents(&self, g: &AffineWeyl, w: &WeylElement) -> Exps {
        let mut e = vec![0; self.nclasses];
        for i in g.reduced_word(w).letters {
            e[self.class_of[i]] += 1;
        }
        e
    }

    /// `q_w` as a Laurent monomial in the `v_c`.
    pub fn q_w(&self, g: &AffineWeyl, w: &WeylElement) -> Laurent {
        Laurent::v_pow(self.u_exponents(g, w).iter().map(|k| 2 * k).collect())
    }

    /// `q_w` evaluated at the numeric parameters.
    pub fn q_w_value(&self, g: &AffineWeyl, w: &WeylElement) -> Result<f64> {
        let q = self.q_f64()?;
        Ok(self.u_exponents(g, w).iter().zip(&q).map(|(&k, qc)| qc.powi(k)).product())
    }

    pub fn one(&self) -> Laurent {
        Laurent::one(self.nclasses)
    }

    /// Whether all parameters are numerically equal to one.
    pub fn is_thin(&self) -> bool {
        self.q.as_ref().is_some_and(|q| q.iter().all(|x| x.is_one()))
    }
}
