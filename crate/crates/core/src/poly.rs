//! Dense univariate integer polynomials in the variable `t`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficients in ascending degree; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPolynomial {
    coeffs: Vec<i64>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self::new(c)
    }

    /// `∏ (t − r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| acc.mul(&Self::new(vec![-r, 1])))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    /// Exact division by `t − r`; `None` if `r` is not a root.
    pub fn divide_linear(&self, r: i64) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![0i64; n - 1];
        let mut carry = 0i64;
        for k in (1..n).rev() {
            carry = self.coeffs[k] + carry * r;
            q[k - 1] = carry;
        }
        (self.coeffs[0] + carry * r == 0).then(|| Self::new(q))
    }

    /// Integer roots with multiplicity if the polynomial is monic up to sign and
    /// splits into linear factors with roots in `[lo, hi]`.
    pub fn split_roots(&self, lo: i64, hi: i64) -> Option<Vec<i64>> {
        let deg = self.degree()?;
        if self.coeffs[deg].abs() != 1 {
            return None;
        }
        let mut rest = self.clone();
        let mut roots = Vec::with_capacity(deg);
        'outer: while rest.degree()? > 0 {
            for r in lo..=hi {
                if let Some(q) = rest.divide_linear(r) {
                    roots.push(r);
                    rest = q;
                    continue 'outer;
                }
            }
            return None;
        }
        roots.sort_unstable();
        Some(roots)
    }

    /// Human-readable product form, e.g. `t(t - 3)^2`, when the polynomial splits.
    pub fn factored(&self) -> Option<String> {
        let deg = self.degree()? as i64;
        let bound = self.coeffs.iter().map(|c| c.abs()).max().unwrap_or(0).max(deg);
        let roots = self.split_roots(-bound, bound)?;
        let sign = if self.coeffs.last() == Some(&-1) { "-" } else { "" };
        let mut out = String::from(sign);
        let mut i = 0;
        while i < roots.len() {
            let r = roots[i];
            let mult = roots[i..].iter().take_while(|&&x| x == r).count();
            let base = match r {
                0 => "t".to_string(),
                r if r > 0 => format!("(t - {r})"),
                r => format!("(t + {})", -r),
            };
            out.push_str(&base);
            if mult > 1 {
                out.push_str(&format!("^{mult}"));
            }
            i += mult;
        }
        if roots.is_empty() {
            out.push('1');
        }
        Some(out)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = abs != 1 || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
