//! Brute-force freeness over ℚ: graded pieces of the module of logarithmic
//! derivations, minimal generator degrees, and Saito's determinant criterion.

mod poly;
mod sparse;

pub use poly::{poly_determinant, Exponent, MultiPoly};

use crate::arrangement::{Arrangement, ArrangementError, Hyperplane};
use crate::freeness::{exponents_of, FreenessVerdict, Multiarrangement};
use crate::linalg::{self, Echelon};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sparse::{sparse_from_ints, SparseEchelon, SparseRow};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{hyperplanes} hyperplanes in dimension {dim} exceeds the oracle guard ({max_hyperplanes} hyperplanes, dimension {max_dim})")]
    TooLarge { hyperplanes: usize, dim: usize, max_hyperplanes: usize, max_dim: usize },
    #[error("arrangement is not central")]
    NotCentral,
    #[error("candidate degrees sum to {sum}, expected {expected}")]
    DegreeSumMismatch { sum: usize, expected: usize },
    #[error("expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// Size guard and search parameters for the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_hyperplanes: usize,
    pub max_dim: usize,
    /// Seeds the random evaluation points used before symbolic determinants.
    pub seed: u64,
    /// Cap on generator selections tried by the Saito check.
    pub selection_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_hyperplanes: 12, max_dim: 5, seed: 0x5eed_0f_a11, selection_cap: 64 }
    }
}

/// Anything that can be read as a multiarrangement; plain arrangements get
/// multiplicity one everywhere.
pub trait DerivationTarget {
    fn to_multi(&self) -> Result<Multiarrangement, OracleError>;
}

impl DerivationTarget for Arrangement {
    fn to_multi(&self) -> Result<Multiarrangement, OracleError> {
        if !self.is_central() {
            return Err(OracleError::NotCentral);
        }
        Ok(Multiarrangement::simple(self.clone())?)
    }
}

impl DerivationTarget for Multiarrangement {
    fn to_multi(&self) -> Result<Multiarrangement, OracleError> {
        Ok(self.clone())
    }
}

/// Monomials of one degree, in lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    nvars: usize,
    degree: usize,
    monomials: Vec<Exponent>,
    index: HashMap<Exponent, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; nvars];
        fill(&mut monomials, &mut current, 0, degree as u32);
        let index = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialBasis { nvars, degree, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn fill(out: &mut Vec<Exponent>, current: &mut Exponent, var: usize, left: u32) {
    if current.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if var + 1 == current.len() {
        current[var] = left;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for k in (0..=left).rev() {
        current[var] = k;
        fill(out, current, var + 1, left - k);
    }
    current[var] = 0;
}

/// `D(A)_d`: derivations `θ = Σ f_i ∂_i` with every `f_i` homogeneous of
/// degree `d`. A vector stores the coefficient of `x^α ∂_i` at position
/// `i·|monomials| + index(α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDerivationBasis {
    pub degree: usize,
    pub monomials: MonomialBasis,
    pub basis: Vec<Vec<BigInt>>,
}

impl GradedDerivationBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.monomials.nvars()
    }

    /// Components `(f_1, …, f_ℓ)` of a coefficient vector.
    pub fn components(&self, v: &[BigInt]) -> Vec<MultiPoly> {
        let nmon = self.monomials.len();
        (0..self.nvars())
            .map(|i| {
                let mut f = MultiPoly::zero();
                for (k, e) in self.monomials.monomials().iter().enumerate() {
                    f.add_term(e.clone(), v[i * nmon + k].clone());
                }
                f
            })
            .collect()
    }

    pub fn derivation(&self, k: usize) -> Vec<MultiPoly> {
        self.components(&self.basis[k])
    }
}

/// `θ(α_H)` for the linear form with the given coefficients.
pub fn apply_derivation(theta: &[MultiPoly], coeffs: &[i64]) -> MultiPoly {
    theta
        .iter()
        .zip(coeffs)
        .fold(MultiPoly::zero(), |acc, (f, &a)| acc.add(&f.scale(&BigInt::from(a))))
}

/// Whether `α^m` divides `p`, by repeated exact division by the linear form.
pub fn divisible_by_power(p: &MultiPoly, coeffs: &[i64], m: usize) -> bool {
    let mut p = p.clone();
    for _ in 0..m {
        match divide_by_form(&p, coeffs) {
            Some(q) => p = q,
            None => return false,
        }
    }
    true
}

/// Exact quotient `p / α`, treating `p` as a polynomial in the pivot variable.
fn divide_by_form(p: &MultiPoly, coeffs: &[i64]) -> Option<MultiPoly> {
    if p.is_zero() {
        return Some(MultiPoly::zero());
    }
    let pivot = coeffs.iter().position(|&c| c != 0)?;
    let ap = BigInt::from(coeffs[pivot]);
    let mut rest_coeffs = coeffs.to_vec();
    rest_coeffs[pivot] = 0;
    let rest = MultiPoly::linear(&rest_coeffs);
    // Split by degree in the pivot variable.
    let mut slices: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        let k = std::mem::replace(&mut e2[pivot], 0);
        slices.entry(k).or_default().add_term(e2, c.clone());
    }
    let top = *slices.keys().next_back().expect("nonzero");
    let mut quotient = MultiPoly::zero();
    let mut carry = MultiPoly::zero();
    // p_k = a_p q_{k−1} + L q_k, solved from the top degree down.
    for k in (1..=top).rev() {
        let pk = slices.get(&k).cloned().unwrap_or_default();
        let numerator = pk.add(&rest.mul(&carry).scale(&BigInt::from(-1)));
        let mut q = MultiPoly::zero();
        for (e, c) in numerator.terms() {
            if (c % &ap).is_zero() {
                q.add_term(e.clone(), c / &ap);
            } else {
                return None;
            }
        }
        for (e, c) in q.terms() {
            let mut e2 = e.clone();
            e2[pivot] = k - 1;
            quotient.add_term(e2, c.clone());
        }
        carry = q;
    }
    let p0 = slices.get(&0).cloned().unwrap_or_default();
    (p0 == rest.mul(&carry)).then_some(quotient)
}

fn euler(mons: &MonomialBasis) -> Vec<BigInt> {
    let nmon = mons.len();
    let mut v = vec![BigInt::zero(); mons.nvars() * nmon];
    for i in 0..mons.nvars() {
        let mut e = vec![0u32; mons.nvars()];
        e[i] = 1;
        v[i * nmon + mons.index_of(&e).expect("degree one")] = BigInt::one();
    }
    v
}

/// Linear conditions on the coefficients of a degree-`d` derivation. For a
/// form `α = a_p x_p + L`, substitute `a_p x_p = y − L` after scaling by
/// `a_p^d`; `θ(α) ∈ α^m S` iff every coefficient with `y`-degree below `m`
/// vanishes.
fn constraint_rows(m: &Multiarrangement, mons: &MonomialBasis) -> Vec<SparseRow> {
    let l = mons.nvars();
    let d = mons.degree();
    let nmon = mons.len();
    let mut rows = Vec::new();
    for (h, &mult) in m.arrangement().hyperplanes().iter().zip(m.mult()) {
        if mult == 0 {
            continue;
        }
        let a = h.coeffs();
        let p = (0..l).filter(|&i| a[i] != 0).min_by_key(|&i| a[i].abs()).expect("nonzero form");
        let ap = BigInt::from(a[p]);
        let mut rest = a.to_vec();
        rest[p] = 0;
        let neg_l = MultiPoly::linear(&rest.iter().map(|x| -x).collect::<Vec<_>>());
        let powers: Vec<MultiPoly> = (0..=d).map(|k| neg_l.pow(k, l)).collect();
        let ap_powers: Vec<BigInt> = (0..=d).map(|k| num_traits::pow(ap.clone(), k)).collect();
        let mut keyed: BTreeMap<Exponent, SparseRow> = BTreeMap::new();
        for (idx, alpha) in mons.monomials().iter().enumerate() {
            let k = alpha[p] as usize;
            let mut base = alpha.clone();
            base[p] = 0;
            for s in 0..=k.min(mult - 1) {
                let scale = &ap_powers[d - k] * binomial(BigInt::from(k), BigInt::from(s));
                for (beta, c) in powers[k - s].terms() {
                    let mut key: Exponent = base.iter().zip(beta).map(|(x, y)| x + y).collect();
                    key[p] = s as u32;
                    let row = keyed.entry(key).or_default();
                    let value = &scale * c;
                    for (i, &ai) in a.iter().enumerate() {
                        if ai == 0 {
                            continue;
                        }
                        let col = i * nmon + idx;
                        let slot = row.entry(col).or_insert_with(BigRational::zero);
                        *slot += BigRational::from_integer(&value * BigInt::from(ai));
                        if slot.is_zero() {
                            row.remove(&col);
                        }
                    }
                }
            }
        }
        rows.extend(keyed.into_values().filter(|r| !r.is_empty()));
    }
    rows
}

fn space_of(m: &Multiarrangement, d: usize) -> GradedDerivationBasis {
    let mons = MonomialBasis::new(m.dim(), d);
    let rows = constraint_rows(m, &mons);
    let mut e = SparseEchelon::new(m.dim() * mons.len());
    if d == 1 && m.is_simple() {
        let eu = sparse_from_ints(&euler(&mons));
        for r in &rows {
            let dot: BigRational = r.iter().filter_map(|(k, x)| eu.get(k).map(|y| x * y)).sum();
            assert!(dot.is_zero(), "Euler derivation violates a constraint");
        }
    }
    for r in rows {
        e.insert(r);
    }
    GradedDerivationBasis { degree: d, monomials: mons, basis: e.nullspace() }
}

/// The degree-`d` piece of `D(A)` (or `D(A, m)`), as a canonical basis.
pub fn derivation_space<T: DerivationTarget + ?Sized>(a: &T, d: usize) -> Result<GradedDerivationBasis, OracleError> {
    Ok(space_of(&a.to_multi()?, d))
}

/// Graded pieces up to some degree together with, for each degree, the span
/// of `S_1` times the previous piece.
struct GradedData {
    spaces: Vec<GradedDerivationBasis>,
    lower: Vec<SparseEchelon>,
}

impl GradedData {
    fn compute(m: &Multiarrangement, dmax: usize) -> Self {
        let spaces: Vec<GradedDerivationBasis> = (0..=dmax).into_par_iter().map(|d| space_of(m, d)).collect();
        let lower = (0..=dmax)
            .into_par_iter()
            .map(|d| {
                let here = &spaces[d];
                let mut e = SparseEchelon::new(m.dim() * here.monomials.len());
                if d > 0 {
                    for v in &spaces[d - 1].basis {
                        for k in 0..m.dim() {
                            e.insert(shift(v, &spaces[d - 1].monomials, &here.monomials, k));
                        }
                    }
                }
                e
            })
            .collect();
        GradedData { spaces, lower }
    }

    fn defect(&self, d: usize) -> usize {
        self.spaces[d].dim() - self.lower[d].rank()
    }

    fn degrees(&self) -> Vec<usize> {
        (0..self.spaces.len()).flat_map(|d| std::iter::repeat_n(d, self.defect(d))).collect()
    }

    /// Basis indices in degree `d` that complement the lower span, greedily.
    fn canonical(&self, d: usize) -> Vec<usize> {
        let mut e = self.lower[d].clone();
        (0..self.spaces[d].dim())
            .filter(|&i| e.insert(sparse_from_ints(&self.spaces[d].basis[i])))
            .collect()
    }

    /// All complementing subsets of basis indices in degree `d`, canonical first.
    fn choices(&self, d: usize, cap: usize) -> Vec<Vec<usize>> {
        let k = self.defect(d);
        let mut out = vec![self.canonical(d)];
        for subset in (0..self.spaces[d].dim()).combinations(k) {
            if out.len() >= cap {
                break;
            }
            if subset == out[0] {
                continue;
            }
            let mut e = self.lower[d].clone();
            if subset.iter().all(|&i| e.insert(sparse_from_ints(&self.spaces[d].basis[i]))) {
                out.push(subset);
            }
        }
        out
    }

    fn derivation(&self, d: usize, i: usize) -> Vec<MultiPoly> {
        self.spaces[d].derivation(i)
    }
}

fn shift(v: &[BigInt], from: &MonomialBasis, to: &MonomialBasis, var: usize) -> SparseRow {
    let (nf, nt) = (from.len(), to.len());
    let mut out = SparseRow::new();
    for (pos, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, k) = (pos / nf, pos % nf);
        let mut e = from.monomials()[k].clone();
        e[var] += 1;
        let col = i * nt + to.index_of(&e).expect("degree shifts by one");
        out.insert(col, BigRational::from_integer(x.clone()));
    }
    out
}

/// Degrees of a minimal homogeneous generating set of the submodule of
/// `D(A)` generated in degrees `≤ dmax`, with multiplicity.
pub fn minimal_generator_degrees<T: DerivationTarget + ?Sized>(a: &T, dmax: usize) -> Result<Vec<usize>, OracleError> {
    Ok(GradedData::compute(&a.to_multi()?, dmax).degrees())
}

/// `Q(A, m) = ∏ α_H^{m(H)}`.
pub fn defining_polynomial(m: &Multiarrangement) -> MultiPoly {
    let l = m.dim();
    m.arrangement()
        .hyperplanes()
        .iter()
        .zip(m.mult())
        .fold(MultiPoly::constant(l, BigInt::one()), |acc, (h, &k)| acc.mul(&MultiPoly::linear(h.coeffs()).pow(k, l)))
}

/// `det = c·q` for some nonzero rational `c`.
fn proportional(det: &MultiPoly, q: &MultiPoly) -> bool {
    let Some((e0, q0)) = q.terms().iter().next() else { return false };
    let d0 = det.coeff(e0);
    !d0.is_zero() && det.scale(q0) == q.scale(&d0)
}

fn saito_matrix(data: &GradedData, picks: &[(usize, usize)]) -> Vec<Vec<MultiPoly>> {
    picks.iter().map(|&(d, i)| data.derivation(d, i)).collect()
}

/// Necessary condition at random integer points: `det(p)·Q(p′) = det(p′)·Q(p)`
/// and `det` does not vanish where `Q` does not.
fn random_precheck(matrix: &[Vec<MultiPoly>], q: &MultiPoly, seed: u64) -> bool {
    let l = matrix.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<(BigInt, BigInt)> = Vec::new();
    for _ in 0..3 {
        let point: Vec<BigInt> = (0..l).map(|_| BigInt::from(rng.random_range(-1000i64..=1000))).collect();
        let numeric: Vec<Vec<BigInt>> = matrix.iter().map(|row| row.iter().map(|f| f.eval(&point)).collect()).collect();
        samples.push((linalg::determinant(&numeric), q.eval(&point)));
    }
    let nonzero: Vec<&(BigInt, BigInt)> = samples.iter().filter(|(_, qv)| !qv.is_zero()).collect();
    if nonzero.iter().any(|(dv, _)| dv.is_zero()) {
        return false;
    }
    nonzero.windows(2).all(|w| &w[0].0 * &w[1].1 == &w[1].0 * &w[0].1)
}

fn determinant_matches(matrix: &[Vec<MultiPoly>], q: &MultiPoly, nvars: usize, seed: u64) -> bool {
    if nvars >= 5 && !random_precheck(matrix, q, seed) {
        return false;
    }
    proportional(&poly_determinant(matrix, nvars), q)
}

/// Tries generator selections of the given degrees, canonical first.
fn saito_search(m: &Multiarrangement, data: &GradedData, degrees: &[usize], limits: &OracleLimits) -> bool {
    let q = defining_polynomial(m);
    let mut distinct: Vec<usize> = degrees.to_vec();
    distinct.dedup();
    let per_degree: Vec<Vec<Vec<usize>>> = distinct.iter().map(|&d| data.choices(d, limits.selection_cap)).collect();
    for combo in per_degree.iter().multi_cartesian_product().take(limits.selection_cap.max(1)) {
        let picks: Vec<(usize, usize)> =
            distinct.iter().zip(&combo).flat_map(|(&d, idx)| idx.iter().map(move |&i| (d, i))).collect();
        if determinant_matches(&saito_matrix(data, &picks), &q, m.dim(), limits.seed) {
            return true;
        }
    }
    // No degrees at all: the empty determinant is 1 and Q is 1.
    distinct.is_empty() && proportional(&MultiPoly::constant(m.dim(), BigInt::one()), &q)
}

/// Saito's criterion for candidate degrees summing to `Σ m(H)`: true iff
/// minimal generators of exactly these degrees exist and some selection of
/// echelon representatives has determinant `c·Q`, `c ≠ 0`.
pub fn saito_check<T: DerivationTarget + ?Sized>(a: &T, candidate: &[usize]) -> Result<bool, OracleError> {
    saito_check_with(a, candidate, &OracleLimits::default())
}

pub fn saito_check_with<T: DerivationTarget + ?Sized>(
    a: &T,
    candidate: &[usize],
    limits: &OracleLimits,
) -> Result<bool, OracleError> {
    let m = a.to_multi()?;
    let sum: usize = candidate.iter().sum();
    if sum != m.total() {
        return Err(OracleError::DegreeSumMismatch { sum, expected: m.total() });
    }
    if candidate.len() != m.dim() {
        return Ok(false);
    }
    let mut want = candidate.to_vec();
    want.sort_unstable();
    let data = GradedData::compute(&m, want.last().copied().unwrap_or(0));
    if data.degrees() != want {
        return Ok(false);
    }
    Ok(saito_search(&m, &data, &want, limits))
}

/// Restricts every form to the pivot columns of the form matrix, giving an
/// isomorphic essential multiarrangement in `rank` variables.
pub fn essentialize(m: &Multiarrangement) -> Result<Multiarrangement, OracleError> {
    let rows: Vec<Vec<i64>> = m.arrangement().hyperplanes().iter().map(|h| h.coeffs().to_vec()).collect();
    let pivots = Echelon::from_i64(&rows, m.dim()).pivots().to_vec();
    let hs = rows
        .iter()
        .map(|r| Hyperplane::new(pivots.iter().map(|&c| r[c]).collect(), 0))
        .collect::<Result<Vec<_>, _>>()?;
    let arrangement = Arrangement::new(pivots.len(), hs)?;
    // Reordering by Arrangement::new must carry the multiplicities along.
    let mut mult = vec![0; arrangement.len()];
    for (r, &k) in rows.iter().zip(m.mult()) {
        let h = Hyperplane::new(pivots.iter().map(|&c| r[c]).collect(), 0)?;
        let i = arrangement.index_of(&h).expect("restricted form present");
        mult[i] += k;
    }
    Ok(Multiarrangement::new(arrangement, mult)?)
}

pub fn oracle_freeness(a: &Arrangement) -> Result<FreenessVerdict, OracleError> {
    oracle_freeness_with(a, &OracleLimits::default())
}

/// Freeness of a central arrangement by direct computation. Exponents must be
/// the roots of `χ`; generators are searched up to the largest root, so a
/// mismatch in degrees or a failed determinant is a proof of non-freeness.
pub fn oracle_freeness_with(a: &Arrangement, limits: &OracleLimits) -> Result<FreenessVerdict, OracleError> {
    if !a.is_central() {
        return Err(OracleError::NotCentral);
    }
    if a.len() > limits.max_hyperplanes || a.dim() > limits.max_dim {
        return Err(OracleError::TooLarge {
            hyperplanes: a.len(),
            dim: a.dim(),
            max_hyperplanes: limits.max_hyperplanes,
            max_dim: limits.max_dim,
        });
    }
    let chi = a.char_poly()?;
    let Some(exponents) = exponents_of(&chi, a.len()) else {
        return Ok(FreenessVerdict::not_free(vec![format!("χ = {chi} does not split over the integers")]));
    };
    let m = essentialize(&Multiarrangement::simple(a.clone())?)?;
    let r = m.dim();
    let mut roots = exponents.clone();
    for _ in r..a.dim() {
        let z = roots.iter().position(|&e| e == 0).expect("χ is divisible by t^(ℓ − rank)");
        roots.remove(z);
    }
    let dmax = roots.last().copied().unwrap_or(0);
    let data = GradedData::compute(&m, dmax);
    let degrees = data.degrees();
    let mut evidence = vec![
        format!("χ = {chi}, roots {exponents:?}"),
        format!("essential rank {r}; minimal generator degrees up to {dmax}: {degrees:?}"),
    ];
    if degrees.len() > r {
        evidence.push(format!("{} minimal generators exceed the rank {r}", degrees.len()));
        return Ok(FreenessVerdict::not_free(evidence));
    }
    if degrees != roots {
        evidence.push(format!("generator degrees {degrees:?} differ from the roots {roots:?}"));
        return Ok(FreenessVerdict::not_free(evidence));
    }
    if saito_search(&m, &data, &roots, limits) {
        evidence.push("Saito determinant is a nonzero multiple of Q".to_string());
        Ok(FreenessVerdict::free(exponents, evidence))
    } else {
        evidence.push("Saito determinant of the minimal generators is not a multiple of Q".to_string());
        Ok(FreenessVerdict::not_free(evidence))
    }
}

/// Exponents of a multiarrangement in the plane, read off from graded
/// dimensions up to `Σ m(H)`.
pub fn rank2_multi_exponents(m: &Multiarrangement) -> Result<[usize; 2], OracleError> {
    if m.dim() != 2 {
        return Err(OracleError::DimensionMismatch { expected: 2, got: m.dim() });
    }
    let data = GradedData::compute(m, m.total());
    let d = data.degrees();
    if d.len() != 2 {
        return Err(OracleError::DimensionMismatch { expected: 2, got: d.len() });
    }
    Ok([d[0], d[1]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{catalan, coxeter, empty, shi};
    use crate::freeness::Status;

    fn lines(forms: &[[i64; 2]], mult: &[usize]) -> Multiarrangement {
        let hs = forms.iter().map(|f| Hyperplane::new(f.to_vec(), 0).unwrap());
        Multiarrangement::new(Arrangement::new(2, hs).unwrap(), mult.to_vec()).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(MonomialBasis::new(3, 2).len(), 6);
        assert_eq!(MonomialBasis::new(2, 0).monomials(), &[vec![0, 0]]);
        assert_eq!(MonomialBasis::new(2, 2).monomials(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn braid_plane_dimensions() {
        assert_eq!(derivation_space(&coxeter(2), 0).unwrap().dim(), 1);
        assert_eq!(derivation_space(&coxeter(2), 1).unwrap().dim(), 3);
        let m = lines(&[[1, 0], [0, 1], [1, -1]], &[1, 1, 1]);
        // Exponents (1, 2): only the Euler derivation in degree one.
        assert_eq!(derivation_space(&m, 1).unwrap().dim(), 1);
        assert_eq!(derivation_space(&m, 2).unwrap().dim(), 3);
    }

    #[test]
    fn basis_elements_are_logarithmic() {
        let m = lines(&[[1, 0], [0, 1], [1, -1], [1, 2]], &[2, 1, 3, 1]);
        for d in 0..6 {
            let space = derivation_space(&m, d).unwrap();
            for k in 0..space.dim() {
                let theta = space.derivation(k);
                for (h, &mult) in m.arrangement().hyperplanes().iter().zip(m.mult()) {
                    assert!(divisible_by_power(&apply_derivation(&theta, h.coeffs()), h.coeffs(), mult));
                }
            }
        }
    }

    #[test]
    fn division_by_linear_forms() {
        let x = MultiPoly::linear(&[1, -2]);
        let y = MultiPoly::linear(&[3, 1]);
        let p = x.mul(&x).mul(&y);
        assert!(divisible_by_power(&p, &[1, -2], 2));
        assert!(!divisible_by_power(&p, &[1, -2], 3));
        assert!(divisible_by_power(&p, &[3, 1], 1));
        assert!(!divisible_by_power(&p, &[1, 1], 1));
    }

    #[test]
    fn generator_degrees() {
        assert_eq!(minimal_generator_degrees(&coxeter(3), 3).unwrap(), vec![0, 1, 2]);
        assert_eq!(minimal_generator_degrees(&catalan(2).cone(), 4).unwrap(), vec![0, 1, 3]);
        assert_eq!(minimal_generator_degrees(&empty(2), 3).unwrap(), vec![0, 0]);
    }

    #[test]
    fn saito_examples() {
        assert!(saito_check(&coxeter(3), &[0, 1, 2]).unwrap());
        assert!(saito_check(&empty(3), &[0, 0, 0]).unwrap());
        assert_eq!(
            saito_check(&coxeter(3), &[0, 1, 1]),
            Err(OracleError::DegreeSumMismatch { sum: 2, expected: 3 })
        );
        assert!(!saito_check(&coxeter(3), &[1, 1, 1]).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let v = oracle_freeness(&shi(2).cone()).unwrap();
        assert_eq!((v.status, v.exponents), (Status::Free, Some(vec![0, 1, 2])));
        let v = oracle_freeness(&catalan(2).cone()).unwrap();
        assert_eq!((v.status, v.exponents), (Status::Free, Some(vec![0, 1, 3])));
    }

    #[test]
    fn rank_two_exponents() {
        assert_eq!(rank2_multi_exponents(&lines(&[[1, 0], [0, 1], [1, -1]], &[1, 1, 1])).unwrap(), [1, 2]);
        assert_eq!(rank2_multi_exponents(&lines(&[[1, 0], [0, 1], [1, -1]], &[2, 2, 2])).unwrap(), [3, 3]);
        assert_eq!(rank2_multi_exponents(&lines(&[[1, 0]], &[5])).unwrap(), [0, 5]);
    }
}
