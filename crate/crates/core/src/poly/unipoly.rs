//! Univariate integer polynomials and the two transforms `a*` and `ā`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// A univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; the representation is trimmed so
/// that the last entry is nonzero (the zero polynomial is stored as `[0]`).
///
/// Values carrying a surface (the `a(t)`, `b(t)` of `S_{a,b}`) additionally
/// satisfy `a(0) != 0` and unit end coefficients; those constraints are
/// checked by [`UniPoly::is_p_class`] and [`UniPoly::is_unit_normalized`]
/// at the surface boundary, not here, because intermediate values such as
/// `a*` legitimately have zero constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    /// Builds a polynomial from coefficients listed constant-term first,
    /// trimming high zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![BigInt::zero()] }
    }

    pub fn constant(c: BigInt) -> Self {
        UniPoly { coeffs: vec![c] }
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        UniPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree, with the convention `deg 0 = 0`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_coeff(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn leading_coeff(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs nonempty")
    }

    /// Membership in `P_n(ℤ)`: nonzero constant and leading coefficients.
    pub fn is_p_class(&self) -> bool {
        !self.is_zero() && !self.constant_coeff().is_zero()
    }

    /// Membership in `P_n^×(ℤ)`: both end coefficients in `{+1, -1}`.
    pub fn is_unit_normalized(&self) -> bool {
        self.constant_coeff().abs().is_one() && self.leading_coeff().abs().is_one()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// The truncation `a*` defined by `a(t) = t·a*(t) + a(0)`.
    ///
    /// Errors on degree-0 input, where the truncation is not defined.
    pub fn star(&self) -> Result<UniPoly> {
        if self.degree() == 0 {
            return Err(Error::invalid("star requires degree >= 1"));
        }
        Ok(UniPoly::new(self.coeffs[1..].to_vec()))
    }

    /// The involution `ā(t) = t^n a(a₀/t) / (a₀^{n-1} a_n)` on unit-normalized
    /// polynomials.
    ///
    /// For unit ends this reduces to `ā_j = a_{n-j} · a₀^{j+1} · a_n`, so the
    /// result stays integral; non-unit ends are rejected rather than
    /// rationalized.
    pub fn bar(&self) -> Result<UniPoly> {
        if !self.is_p_class() || !self.is_unit_normalized() {
            return Err(Error::invalid(
                "bar requires unit leading and constant coefficients",
            ));
        }
        let n = self.degree();
        let a0 = self.constant_coeff().clone();
        let an = self.leading_coeff().clone();
        let mut out = Vec::with_capacity(n + 1);
        let mut a0_pow = a0.clone(); // a₀^{j+1} starting at j = 0
        for j in 0..=n {
            out.push(&self.coeffs[n - j] * &a0_pow * &an);
            a0_pow *= &a0;
        }
        Ok(UniPoly::new(out))
    }

    /// All rational roots, found by the rational root theorem with exact
    /// divisor enumeration.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.is_zero() {
            return Vec::new();
        }
        // Strip powers of t: 0 is a root iff the constant term vanishes.
        let mut low = 0;
        while self.coeffs[low].is_zero() {
            low += 1;
        }
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(BigRational::zero());
        }
        let reduced = UniPoly::new(self.coeffs[low..].to_vec());
        if reduced.degree() == 0 {
            roots.sort();
            return roots;
        }
        let a0 = reduced.constant_coeff().abs();
        let an = reduced.leading_coeff().abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                if num_integer::Integer::gcd(&p, &q) != BigInt::one() {
                    continue;
                }
                for cand in [
                    BigRational::new(p.clone(), q.clone()),
                    BigRational::new(-p.clone(), q.clone()),
                ] {
                    if reduced.eval_rational(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// The degree-2 cofactor `p` with `a(x) = (x - α) · s · p(x)` for a
    /// rational scalar `s`, normalized so that `p(0) = c`.
    pub fn quadratic_cofactor(&self, alpha: &BigRational, c: &BigInt) -> Result<UniPoly> {
        if self.degree() != 3 {
            return Err(Error::invalid("quadratic cofactor requires a cubic"));
        }
        if !self.eval_rational(alpha).is_zero() {
            return Err(Error::invalid(format!("{alpha} is not a root")));
        }
        // Synthetic division by (t - α) over the rationals.
        let mut quot = vec![BigRational::zero(); 3];
        let mut carry = BigRational::zero();
        for i in (1..=3).rev() {
            carry = carry * alpha + BigRational::from_integer(self.coeff(i));
            quot[i - 1] = carry.clone();
        }
        let q0 = &quot[0];
        if q0.is_zero() {
            return Err(Error::invalid("cofactor vanishes at 0; cannot normalize"));
        }
        let scale = BigRational::from_integer(c.clone()) / q0;
        let mut out = Vec::with_capacity(3);
        for q in &quot {
            let v = q * &scale;
            if !v.is_integer() {
                return Err(Error::invalid(
                    "cofactor normalization does not yield integer coefficients",
                ));
            }
            out.push(v.to_integer());
        }
        Ok(UniPoly::new(out))
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Composition `self(other(t))`.
    pub fn compose(&self, other: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Exact division, erroring when the remainder is nonzero or a quotient
    /// coefficient fails to be integral.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        if divisor.is_zero() {
            return Err(Error::invalid("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return Err(Error::internal("exact division with smaller degree"));
        }
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - divisor.degree() + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + divisor.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::internal("exact division failed (leading term)"));
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("exact division left a remainder"));
        }
        Ok(UniPoly::new(quot))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.degree() == 0 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    /// Substitutes `t -> εt` for a sign `ε ∈ {+1, -1}`.
    pub fn flip_argument(&self, eps: i64) -> UniPoly {
        debug_assert!(eps == 1 || eps == -1);
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if eps == -1 && i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

/// Positive divisors of `|n|`, by trial division. Intended for the small
/// end coefficients fed to the rational root theorem.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl fmt::Display for UniPoly {
    /// Comma-separated coefficients from the constant term upward, the text
    /// format shared by the CLI and the surface parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<UniPoly> {
        let coeffs: Vec<BigInt> = s
            .split(',')
            .map(|tok| {
                BigInt::from_str(tok.trim())
                    .map_err(|_| Error::parse(format!("bad coefficient {tok:?}")))
            })
            .collect::<Result<_>>()?;
        if coeffs.is_empty() {
            return Err(Error::parse("empty coefficient list"));
        }
        Ok(UniPoly::new(coeffs))
    }
}
