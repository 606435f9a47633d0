//! Point counting over prime fields and interpolation of `χ`.

use super::{Arrangement, ArrangementError};
use crate::poly::IntegerPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `≥ n`.
pub fn next_prime(n: u64) -> u64 {
    (n.max(2)..).find(|&k| is_prime(k)).expect("primes are unbounded")
}

/// Primes strictly above this bound are used for counting:
/// `ℓ · (1 + max_H (|constant| + Σ|coeffs|))`.
pub fn admissibility_bound(a: &Arrangement) -> u64 {
    let h = a.hyperplanes().iter().map(|h| h.height()).max().unwrap_or(0);
    a.dim() as u64 * (1 + h)
}

struct Kernel {
    p: u64,
    dim: usize,
    coeffs: Vec<Vec<u64>>,
    constants: Vec<u64>,
    /// Hyperplanes whose last nonzero coordinate is the index.
    finishing: Vec<Vec<usize>>,
    /// Hyperplanes with a nonzero coefficient at the index.
    touching: Vec<Vec<usize>>,
    /// Inverse of the last nonzero coefficient of each hyperplane.
    last_inverse: Vec<u64>,
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Kernel {
    fn new(a: &Arrangement, p: u64) -> Self {
        let red = |x: i64| x.rem_euclid(p as i64) as u64;
        let coeffs: Vec<Vec<u64>> = a.hyperplanes().iter().map(|h| h.coeffs().iter().map(|&c| red(c)).collect()).collect();
        let constants = a.hyperplanes().iter().map(|h| red(h.constant())).collect();
        let mut finishing = vec![Vec::new(); a.dim()];
        let mut touching = vec![Vec::new(); a.dim()];
        let mut last_inverse = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            let last = c.iter().rposition(|&x| x != 0).expect("nonzero mod p above the bound");
            finishing[last].push(i);
            for (k, &x) in c.iter().enumerate() {
                if x != 0 {
                    touching[k].push(i);
                }
            }
            last_inverse.push(mod_pow(c[last], p - 2, p));
        }
        Kernel { p, dim: a.dim(), coeffs, constants, finishing, touching, last_inverse }
    }

    fn count_from(&self, depth: usize, partial: &mut [u64], marks: &mut [u64], stamp: &mut u64) -> u64 {
        let p = self.p;
        if depth + 1 == self.dim {
            *stamp += 1;
            let mut forbidden = 0;
            for &h in &self.finishing[depth] {
                let rhs = (self.constants[h] + p - partial[h]) % p;
                let x = rhs * self.last_inverse[h] % p;
                if marks[x as usize] != *stamp {
                    marks[x as usize] = *stamp;
                    forbidden += 1;
                }
            }
            return p - forbidden;
        }
        let saved: Vec<u64> = self.touching[depth].iter().map(|&h| partial[h]).collect();
        let mut total = 0;
        for v in 0..p {
            for (&h, &base) in self.touching[depth].iter().zip(&saved) {
                partial[h] = (base + self.coeffs[h][depth] * v) % p;
            }
            if self.finishing[depth].iter().any(|&h| partial[h] == self.constants[h]) {
                continue;
            }
            total += self.count_from(depth + 1, partial, marks, stamp);
        }
        for (&h, &base) in self.touching[depth].iter().zip(&saved) {
            partial[h] = base;
        }
        total
    }

    fn count(&self) -> u64 {
        if self.dim == 0 {
            return 1;
        }
        let p = self.p;
        let n = self.coeffs.len();
        if self.dim == 1 {
            return self.count_from(0, &mut vec![0; n], &mut vec![0; p as usize], &mut 0);
        }
        (0..p)
            .into_par_iter()
            .map(|v| {
                let mut partial = vec![0u64; n];
                for &h in &self.touching[0] {
                    partial[h] = self.coeffs[h][0] * v % p;
                }
                if self.finishing[0].iter().any(|&h| partial[h] == self.constants[h]) {
                    return 0;
                }
                let mut marks = vec![0u64; p as usize];
                self.count_from(1, &mut partial, &mut marks, &mut 0)
            })
            .sum()
    }
}

/// Errors unless every hyperplane of `a` stays a hyperplane over `𝔽_p`.
pub(crate) fn check_reduction(a: &Arrangement, p: u64) -> Result<(), ArrangementError> {
    if !is_prime(p) {
        return Err(ArrangementError::NotPrime { p });
    }
    let degenerate = a.hyperplanes().iter().any(|h| h.coeffs().iter().all(|&c| c.rem_euclid(p as i64) == 0));
    if degenerate {
        let bound = a.hyperplanes().iter().flat_map(|h| h.coeffs()).map(|c| c.unsigned_abs()).max().unwrap_or(0);
        return Err(ArrangementError::PrimeTooSmall { p, bound });
    }
    Ok(())
}

/// `|𝔽_p^ℓ ∖ ⋃ H_p|`. Any prime that keeps every normal nonzero is accepted;
/// the count equals `χ_A(p)` once `p` exceeds [`admissibility_bound`].
pub fn count_complement(a: &Arrangement, p: u64) -> Result<u64, ArrangementError> {
    check_reduction(a, p)?;
    Ok(Kernel::new(a, p).count())
}

fn interpolate(points: &[(u64, u64)]) -> Option<IntegerPolynomial> {
    // Newton divided differences, then expansion into the monomial basis.
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|&(x, _)| BigRational::from_integer(BigInt::from(x))).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|&(_, y)| BigRational::from_integer(BigInt::from(y))).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (slot, b) in coeffs.iter_mut().zip(&basis) {
            *slot += c * b;
        }
        if k + 1 < n {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &xs[k];
            }
            basis = next;
        }
    }
    let ints = coeffs
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
        .collect::<Option<Vec<i64>>>()?;
    Some(IntegerPolynomial::new(ints))
}

/// `χ_A` by counting at `ℓ + 1` admissible primes, then checking two more.
pub fn char_poly_ff(a: &Arrangement) -> Result<IntegerPolynomial, ArrangementError> {
    char_poly_ff_from(a, admissibility_bound(a) + 1)
}

/// Prime windows tried before giving up on interpolation.
pub const MAX_PRIME_WINDOWS: usize = 12;

/// Like [`char_poly_ff`] but only uses primes `≥ min_prime` (and above the bound).
///
/// The bound is not always enough for the reduction mod `p` to keep the
/// intersection lattice; when the two validation primes disagree with the
/// interpolant, the whole window moves past the primes just used.
pub fn char_poly_ff_from(a: &Arrangement, min_prime: u64) -> Result<IntegerPolynomial, ArrangementError> {
    let mut p = next_prime(min_prime.max(admissibility_bound(a) + 1));
    let mut failure = p;
    for _ in 0..MAX_PRIME_WINDOWS {
        let mut samples = Vec::new();
        for _ in 0..a.dim() + 3 {
            samples.push((p, count_complement(a, p)?));
            p = next_prime(p + 1);
        }
        let (fit, check) = samples.split_at(a.dim() + 1);
        match interpolate(fit) {
            Some(poly) => match check.iter().find(|&&(q, count)| poly.eval(q as i64) != count as i128) {
                None => return Ok(poly),
                Some(&(q, _)) => failure = q,
            },
            None => failure = fit[0].0,
        }
    }
    Err(ArrangementError::InconsistentInterpolation { p: failure })
}
