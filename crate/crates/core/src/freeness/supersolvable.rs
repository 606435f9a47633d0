//! Modular coatoms, M-chains and exponents read off `χ`.

use super::FreenessError;
use crate::arrangement::{Arrangement, Flat, HyperplaneSet, IntersectionPoset};
use serde::Serialize;
use std::collections::HashMap;

/// A maximal chain of modular elements `X_0 < X_1 < ⋯ < X_r`, with
/// `d_i = |A_{X_i}| − |A_{X_{i−1}}|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MChain {
    /// Hyperplane indices of each `A_{X_i}`, from `X_0` (empty) to the center.
    pub localizations: Vec<Vec<usize>>,
    /// Exponents in ascending order, padded with zeros up to the ambient dimension.
    pub exponents: Vec<usize>,
}

struct Lattice<'a> {
    poset: &'a IntersectionPoset,
    /// Rank-2 flat spanned by a pair of hyperplanes.
    pair_flat: HashMap<(usize, usize), usize>,
    /// Rank-1 flat of each hyperplane.
    atom: Vec<usize>,
    memo: HashMap<usize, Option<Vec<usize>>>,
}

impl<'a> Lattice<'a> {
    fn new(poset: &'a IntersectionPoset) -> Self {
        let mut pair_flat = HashMap::new();
        for &x in poset.level(2) {
            let m = poset.members(x).to_vec();
            for (a, &i) in m.iter().enumerate() {
                for &j in &m[a + 1..] {
                    pair_flat.insert((i, j), x);
                }
            }
        }
        let mut atom = vec![0; poset.hyperplane_count()];
        for &x in poset.level(1) {
            for i in poset.members(x).iter() {
                atom[i] = x;
            }
        }
        Lattice { poset, pair_flat, atom, memo: HashMap::new() }
    }

    fn meet_members(&self, i: usize, j: usize) -> HyperplaneSet {
        let key = if i < j { (i, j) } else { (j, i) };
        self.poset.members(self.pair_flat[&key])
    }

    /// `y` is a modular coatom of the localization at `x`.
    fn modular_in(&self, x: usize, y: usize) -> bool {
        let my = self.poset.members(y);
        let outside = self.poset.members(x).difference(&my).to_vec();
        outside.iter().enumerate().all(|(a, &i)| {
            outside[a + 1..].iter().all(|&j| self.meet_members(i, j).intersects(&my))
        })
    }

    fn coatoms_below(&self, x: usize) -> Vec<usize> {
        let r = self.poset.flat_rank(x);
        let mx = self.poset.members(x);
        self.poset.level(r - 1).iter().copied().filter(|&y| self.poset.members(y).is_subset(&mx)).collect()
    }

    /// An M-chain of flat ids ending at `x`, if the localization at `x` is supersolvable.
    fn chain(&mut self, x: usize) -> Option<Vec<usize>> {
        if let Some(c) = self.memo.get(&x) {
            return c.clone();
        }
        let rank = self.poset.flat_rank(x);
        let result = if rank <= 2 {
            let mut c = vec![0];
            if rank >= 1 {
                let first = self.poset.members(x).iter().next().expect("nonempty");
                if rank == 2 {
                    c.push(self.atom[first]);
                }
                c.push(x);
            }
            Some(c)
        } else {
            let mut found = None;
            for y in self.coatoms_below(x) {
                if self.modular_in(x, y) {
                    if let Some(mut c) = self.chain(y) {
                        c.push(x);
                        found = Some(c);
                        break;
                    }
                }
            }
            found
        };
        self.memo.insert(x, result.clone());
        result
    }
}

fn central_poset(a: &Arrangement) -> Result<IntersectionPoset, FreenessError> {
    if !a.is_central() {
        return Err(FreenessError::NotCentral);
    }
    Ok(a.intersection_poset()?)
}

/// Whether `x` is a modular coatom of the central arrangement `a`.
pub fn is_modular_coatom(a: &Arrangement, x: &Flat) -> Result<bool, FreenessError> {
    let poset = central_poset(a)?;
    let id = poset.id_of(x).ok_or(crate::ArrangementError::FlatNotInPoset)?;
    if poset.flat_rank(id) + 1 != poset.rank() {
        return Err(FreenessError::NotACoatom { rank: poset.flat_rank(id), arrangement_rank: poset.rank() });
    }
    let top = poset.level(poset.rank())[0];
    Ok(Lattice::new(&poset).modular_in(top, id))
}

/// Searches for an M-chain; `None` when the arrangement is not supersolvable.
pub fn supersolvable(a: &Arrangement) -> Result<Option<MChain>, FreenessError> {
    let poset = central_poset(a)?;
    let top = poset.level(poset.rank())[0];
    let mut lattice = Lattice::new(&poset);
    let Some(ids) = lattice.chain(top) else { return Ok(None) };
    let localizations: Vec<Vec<usize>> = ids.iter().map(|&x| poset.members(x).to_vec()).collect();
    let mut exponents: Vec<usize> = localizations.windows(2).map(|w| w[1].len() - w[0].len()).collect();
    exponents.resize(a.dim(), 0);
    exponents.sort_unstable();
    Ok(Some(MChain { localizations, exponents }))
}

/// Roots of `χ_A` with multiplicity when it splits over `ℤ` with roots in `[0, |A|]`.
pub fn exponents_from_chi(a: &Arrangement) -> Result<Option<Vec<usize>>, FreenessError> {
    let chi = a.char_poly()?;
    Ok(exponents_of(&chi, a.len()))
}

pub(crate) fn exponents_of(chi: &crate::IntegerPolynomial, len: usize) -> Option<Vec<usize>> {
    chi.split_roots(0, len as i64).map(|r| r.into_iter().map(|x| x as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{coxeter, ish, shi, Hyperplane};

    #[test]
    fn braid_coatom_is_modular() {
        let a = coxeter(3);
        let x = Flat::from_hyperplanes(3, [&Hyperplane::difference(3, 1, 2, 0)]).unwrap();
        assert!(is_modular_coatom(&a, &x).unwrap());
        let origin = Flat::from_hyperplanes(3, a.hyperplanes()).unwrap();
        assert!(matches!(is_modular_coatom(&a, &origin), Err(FreenessError::NotACoatom { .. })));
    }

    #[test]
    fn ish_yes_shi_no() {
        let c = supersolvable(&ish(3).cone()).unwrap().unwrap();
        assert_eq!(c.exponents, vec![0, 1, 3, 3]);
        assert!(supersolvable(&shi(3).cone()).unwrap().is_none());
        assert!(matches!(supersolvable(&shi(3)), Err(FreenessError::NotCentral)));
    }

    #[test]
    fn chi_exponents() {
        assert_eq!(exponents_from_chi(&shi(4).cone()).unwrap(), Some(vec![0, 1, 4, 4, 4]));
        assert_eq!(exponents_from_chi(&crate::arrangement::catalan(3).cone()).unwrap(), Some(vec![0, 1, 4, 5]));
    }
}
