//! Univariate rational polynomials and Sturm real-root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{AlbertError, Result};

/// Default isolating-interval width, `2^-40`.
pub const DEFAULT_REFINE_BITS: u32 = 40;

/// Coefficients, constant term first. The leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::half()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|x| Rational::from_int(*x)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `X^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        Self { coeffs: c }
    }

    /// `X − a`
    pub fn linear_root(a: &Rational) -> Self {
        Self::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from_int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    /// Euclidean division `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| AlbertError::InvalidInput("division by the zero polynomial".into()))?;
        let lc_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = &r[r.len() - 1] * &lc_inv;
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&f * c);
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd nonzero").0.monic()
    }

    pub fn sturm_chain(&self) -> Vec<PolyQ> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-Rational::one()));
        }
        chain
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.leading().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / &lc).abs())
            .fold(Rational::zero(), |a, b| Rational::max(&a, &b));
        m + Rational::one()
    }

    /// Disjoint isolating intervals of the real roots, in increasing order,
    /// each refined to width at most `2^-bits`. Expects a squarefree input.
    pub fn sturm_isolate(&self, bits: u32) -> Result<Vec<Interval>> {
        if self.is_zero() {
            return Err(AlbertError::InvalidInput("root isolation of the zero polynomial".into()));
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let chain = self.sturm_chain();
        let bound = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![Interval { lo: -&bound, hi: bound }];
        // roots counted in the half-open (lo, hi]
        while let Some(iv) = stack.pop() {
            let n = sign_changes(&chain, &iv.lo) - sign_changes(&chain, &iv.hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(iv);
                continue;
            }
            let mid = iv.midpoint();
            stack.push(Interval { lo: mid.clone(), hi: iv.hi });
            stack.push(Interval { lo: iv.lo, hi: mid });
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        let width = Rational::from_bigs(BigInt::one(), BigInt::one() << bits as usize)?;
        out.into_iter().map(|iv| self.refine(iv, &width)).collect()
    }

    /// Bisect an interval holding exactly one simple root in `(lo, hi]`
    /// until its width is at most `width`.
    pub fn refine(&self, mut iv: Interval, width: &Rational) -> Result<Interval> {
        if self.eval(&iv.hi).is_zero() {
            return Ok(Interval { lo: iv.hi.clone(), hi: iv.hi });
        }
        while iv.width() > *width {
            let mid = iv.midpoint();
            let fm = self.eval(&mid);
            if fm.is_zero() {
                return Ok(Interval { lo: mid.clone(), hi: mid });
            }
            let fhi = self.eval(&iv.hi);
            if fm.signum() == fhi.signum() {
                iv.hi = mid;
            } else {
                iv.lo = mid;
            }
        }
        Ok(iv)
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        let chain = self.sturm_chain();
        let bound = self.root_bound();
        sign_changes(&chain, &-&bound) - sign_changes(&chain, &bound)
    }
}

fn sign_changes(chain: &[PolyQ], x: &Rational) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.eval(x).signum()).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}·X"),
                _ => format!("{c}·X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolation_examples() {
        assert!(PolyQ::from_ints(&[1, 0, 1]).sturm_isolate(10).unwrap().is_empty());
        let one = PolyQ::from_ints(&[-1, 1]).sturm_isolate(10).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].contains(&Rational::one()));
        let two = PolyQ::from_ints(&[-2, 0, 1]).sturm_isolate(20).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two[0].lo >= Rational::from_int(-2) && two[0].hi <= Rational::from_int(-1));
        assert!(two[1].lo >= Rational::from_int(1) && two[1].hi <= Rational::from_int(2));
        assert!(PolyQ::zero().sturm_isolate(10).is_err());
    }

    #[test]
    fn squarefree_and_gcd() {
        // (X-1)^2 (X+2)
        let p = PolyQ::from_ints(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), PolyQ::from_ints(&[-2, 1, 1]));
        assert_eq!(p.count_real_roots(), 2);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = PolyQ::from_ints(&[5, 0, -3, 2, 7]);
        let b = PolyQ::from_ints(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn refined_width() {
        let iv = PolyQ::from_ints(&[-2, 0, 1]).sturm_isolate(40).unwrap();
        let w = Rational::from_bigs(BigInt::one(), BigInt::one() << 40usize).unwrap();
        for i in &iv {
            assert!(i.width() <= w);
        }
        assert!((iv[1].midpoint().to_f64() - 2f64.sqrt()).abs() < 1e-11);
    }
}
