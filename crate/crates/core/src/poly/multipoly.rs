//! Sparse multivariate integer polynomials over a fixed variable list.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms map exponent vectors (one entry per variable of `vars`, in order) to
/// nonzero coefficients. The map representation is canonical: equal
/// polynomials compare equal regardless of construction order.
///
/// Binary operations panic on mismatched variable lists; a mismatch is a
/// programming error, never data-dependent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigInt) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        MultiPoly::constant(vars, BigInt::one())
    }

    /// The variable at `index` in the list.
    pub fn var(vars: &[&str], index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut p = MultiPoly::zero(vars);
        let mut exp = vec![0; p.vars.len()];
        exp[index] = 1;
        p.terms.insert(exp, BigInt::one());
        p
    }

    /// A single term `c · Π vars[i]^exps[i]`.
    pub fn monomial(vars: &[&str], exps: &[u32], c: BigInt) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn assert_same_vars(&self, other: &MultiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "variable lists differ: {:?} vs {:?}",
            self.vars, other.vars
        );
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, BigInt>, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(other);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                Self::insert_term(&mut terms, exp, ca * cb);
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.var_refs());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Substitutes every variable by the corresponding image polynomial.
    ///
    /// All images must share one variable list, which becomes the list of the
    /// result; powers are cached per variable.
    pub fn substitute(&self, images: &[&MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable required");
        let out_vars = images
            .first()
            .map(|p| p.var_refs())
            .unwrap_or_default();
        for img in images {
            assert_eq!(
                img.vars, images[0].vars,
                "substitution images disagree on variables"
            );
        }
        let mut pow_cache: Vec<Vec<MultiPoly>> =
            images.iter().map(|p| vec![MultiPoly::one(&p.var_refs()), (*p).clone()]).collect();
        let mut acc = MultiPoly::zero(&out_vars);
        for (exp, c) in &self.terms {
            let mut term = MultiPoly::constant(&out_vars, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pow_cache[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(images[i]);
                    cache.push(next);
                }
                term = term.mul(&cache[e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars.len(), "one value per variable required");
        let mut pow_cache: Vec<Vec<BigInt>> =
            point.iter().map(|v| vec![BigInt::one(), v.clone()]).collect();
        let mut acc = BigInt::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pow_cache[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &point[i];
                    cache.push(next);
                }
                term *= &cache[e as usize];
            }
            acc += term;
        }
        acc
    }

    /// Total degree restricted to the given variable indices
    /// (zero for the zero polynomial).
    pub fn degree_in(&self, indices: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|exp| indices.iter().map(|&i| exp[i]).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        let all: Vec<usize> = (0..self.vars.len()).collect();
        self.degree_in(&all)
    }

    /// Maximum exponent of a single variable across all terms.
    pub fn max_exponent(&self, index: usize) -> u32 {
        self.terms.keys().map(|exp| exp[index]).max().unwrap_or(0)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest exponent vectors first reads closer to handwritten form
        for (exp, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                mono.push_str(&self.vars[i]);
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            if first {
                if mono.is_empty() {
                    write!(f, "{c}")?;
                } else if c.is_one() {
                    write!(f, "{mono}")?;
                } else if (-c).is_one() {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{c}{mono}")?;
                }
                first = false;
            } else {
                let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
                if mono.is_empty() {
                    write!(f, " {sign} {mag}")?;
                } else if mag.is_one() {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {mag}{mono}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn x() -> MultiPoly {
        MultiPoly::var(&XYZ, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(&XYZ, 1)
    }

    #[test]
    fn construction_and_eval() {
        let p = x().mul(&y()).add(&MultiPoly::constant(&XYZ, BigInt::from(-3)));
        assert_eq!(p.num_terms(), 2);
        let v = p.eval(&[BigInt::from(2), BigInt::from(5), BigInt::from(9)]);
        assert_eq!(v, BigInt::from(7));
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = x().sub(&x());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    #[should_panic(expected = "variable lists differ")]
    fn mismatched_vars_panic() {
        let p = MultiPoly::var(&["x", "y"], 0);
        let q = MultiPoly::var(&XYZ, 0);
        let _ = p.add(&q);
    }

    #[test]
    fn substitute_swaps_vars() {
        // p(x,y,z) = x - y, substitute x->y, y->x
        let p = x().sub(&y());
        let images = [y(), x(), MultiPoly::var(&XYZ, 2)];
        let refs: Vec<&MultiPoly> = images.iter().collect();
        assert_eq!(p.substitute(&refs), y().sub(&x()));
    }

    #[test]
    fn substitute_into_other_variable_list() {
        // x² + z at x = t+1, y = 0, z = 2t, all in vars [t]
        let t = MultiPoly::var(&["t"], 0);
        let xt = t.add(&MultiPoly::one(&["t"]));
        let zero = MultiPoly::zero(&["t"]);
        let zt = t.scale(&BigInt::from(2));
        let p = x().pow(2).add(&MultiPoly::var(&XYZ, 2));
        let out = p.substitute(&[&xt, &zero, &zt]);
        // (t+1)² + 2t = t² + 4t + 1
        let expected = t
            .pow(2)
            .add(&t.scale(&BigInt::from(4)))
            .add(&MultiPoly::one(&["t"]));
        assert_eq!(out, expected);
    }

    #[test]
    fn degree_bookkeeping() {
        let p = x().pow(3).mul(&y()).add(&MultiPoly::var(&XYZ, 2).pow(5));
        assert_eq!(p.total_degree(), 5);
        assert_eq!(p.degree_in(&[0, 1]), 4);
        assert_eq!(p.max_exponent(2), 5);
    }

    /// Dense oracle on 3 variables for cross-checking the sparse ring ops.
    #[derive(Clone, Debug, PartialEq)]
    struct Dense(Vec<Vec<Vec<i64>>>);

    impl Dense {
        fn new(n: usize) -> Self {
            Dense(vec![vec![vec![0; n]; n]; n])
        }
        fn add(&self, o: &Dense) -> Dense {
            let n = self.0.len().max(o.0.len());
            let mut out = Dense::new(n);
            for (src, _) in [(self, 0), (o, 1)] {
                for (i, pi) in src.0.iter().enumerate() {
                    for (j, pj) in pi.iter().enumerate() {
                        for (k, v) in pj.iter().enumerate() {
                            out.0[i][j][k] += v;
                        }
                    }
                }
            }
            out
        }
        fn mul(&self, o: &Dense) -> Dense {
            let n = self.0.len() + o.0.len();
            let mut out = Dense::new(n);
            for (i1, pi1) in self.0.iter().enumerate() {
                for (j1, pj1) in pi1.iter().enumerate() {
                    for (k1, &v1) in pj1.iter().enumerate() {
                        if v1 == 0 {
                            continue;
                        }
                        for (i2, pi2) in o.0.iter().enumerate() {
                            for (j2, pj2) in pi2.iter().enumerate() {
                                for (k2, &v2) in pj2.iter().enumerate() {
                                    out.0[i1 + i2][j1 + j2][k1 + k2] += v1 * v2;
                                }
                            }
                        }
                    }
                }
            }
            out
        }
        fn to_sparse(&self) -> MultiPoly {
            let mut acc = MultiPoly::zero(&XYZ);
            for (i, pi) in self.0.iter().enumerate() {
                for (j, pj) in pi.iter().enumerate() {
                    for (k, &v) in pj.iter().enumerate() {
                        if v != 0 {
                            acc = acc.add(&MultiPoly::monomial(
                                &XYZ,
                                &[i as u32, j as u32, k as u32],
                                BigInt::from(v),
                            ));
                        }
                    }
                }
            }
            acc
        }
    }

    fn dense_strategy() -> impl Strategy<Value = Dense> {
        proptest::collection::vec((0usize..3, 0usize..3, 0usize..3, -9i64..10), 0..6).prop_map(
            |terms| {
                let mut d = Dense::new(3);
                for (i, j, k, c) in terms {
                    d.0[i][j][k] += c;
                }
                d
            },
        )
    }

    proptest! {
        #[test]
        fn ring_laws_match_dense_oracle(a in dense_strategy(), b in dense_strategy(), c in dense_strategy()) {
            let (sa, sb, sc) = (a.to_sparse(), b.to_sparse(), c.to_sparse());
            // commutativity & associativity & distributivity against the oracle
            prop_assert_eq!(sa.mul(&sb), b.mul(&a).to_sparse());
            prop_assert_eq!(sa.add(&sb), b.add(&a).to_sparse());
            prop_assert_eq!(sa.mul(&sb).mul(&sc), a.mul(&b.mul(&c)).to_sparse());
            prop_assert_eq!(sa.mul(&sb.add(&sc)), a.mul(&b).add(&a.mul(&c)).to_sparse());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in dense_strategy(), b in dense_strategy(), px in -4i64..5, py in -4i64..5, pz in -4i64..5) {
            let point = [BigInt::from(px), BigInt::from(py), BigInt::from(pz)];
            let (sa, sb) = (a.to_sparse(), b.to_sparse());
            prop_assert_eq!(sa.mul(&sb).eval(&point), sa.eval(&point) * sb.eval(&point));
            prop_assert_eq!(sa.add(&sb).eval(&point), sa.eval(&point) + sb.eval(&point));
        }
    }
}
