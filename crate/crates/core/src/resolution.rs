//! Minimal graded free resolutions, Betti tables and the homological
//! invariants (projective dimension, depth) derived from them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::ideal::{Ideal, DEFAULT_ORDER};
use crate::module::{module_member, module_syzygies, FreeModuleElement};
use crate::{Error, MonomialOrder, PolyRing, Polynomial, Result};

/// Graded Betti numbers: (homological step i, internal degree j) -> rank.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti number at step i.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((s, _), _)| *s == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// Totals (beta_0, beta_1, ..., beta_pd).
    pub fn totals(&self) -> Vec<usize> {
        let pd = self
            .entries
            .keys()
            .map(|(i, _)| *i)
            .max()
            .unwrap_or(0);
        (0..=pd).map(|i| self.total(i)).collect()
    }

    /// Castelnuovo-Mumford regularity: max over entries of j - i.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, j)| j - *i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Flat listing for serialization: (i, j, rank).
    pub fn rows(&self) -> Vec<(usize, i64, usize)> {
        self.entries
            .iter()
            .map(|(&(i, j), &r)| (i, j, r))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Tabular display with one column per homological step and one
    /// row per regularity stratum j - i.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(empty)");
        }
        let pd = self.entries.keys().map(|(i, _)| *i).max().unwrap();
        let rmin = self.entries.keys().map(|(i, j)| j - *i as i64).min().unwrap();
        let rmax = self.regularity();
        let width = self
            .entries
            .values()
            .map(|r| r.to_string().len())
            .max()
            .unwrap()
            .max(2);
        write!(f, "{:>8}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>8}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for row in rmin..=rmax {
            write!(f, "{:>7}:", row)?;
            for i in 0..=pd {
                let v = self.get(i, row + i as i64);
                if v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A minimal graded free resolution of R/I:
///
///   0 -> F_pd -> ... -> F_1 -> F_0 = R -> R/I -> 0
///
/// `shifts[i]` lists the generator degrees of F_i (so `shifts[0]` is
/// `[0]`), and `matrices[i]` holds the columns of the map
/// F_{i+1} -> F_i as elements of F_i.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub ring: Arc<PolyRing>,
    pub shifts: Vec<Vec<i64>>,
    pub matrices: Vec<Vec<FreeModuleElement>>,
}

impl FreeResolution {
    /// Projective dimension of R/I: the index of the last nonzero F_i.
    pub fn pd(&self) -> usize {
        self.shifts.len() - 1
    }

    /// depth R/I = (number of variables) - pd, valid for graded
    /// modules over a polynomial ring.
    pub fn depth(&self) -> usize {
        self.ring.num_vars() - self.pd()
    }

    /// Cokernel type: the rank of the last free module.
    pub fn last_rank(&self) -> usize {
        self.shifts.last().unwrap().len()
    }

    pub fn betti(&self) -> BettiTable {
        let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
        for (i, degs) in self.shifts.iter().enumerate() {
            for &d in degs {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// Consecutive maps compose to zero.
    pub fn verify_complex(&self) -> bool {
        for i in 1..self.matrices.len() {
            let prev = &self.matrices[i - 1];
            for col in &self.matrices[i] {
                // image of a generator of F_{i+1}: combine columns of d_i
                let mut acc =
                    FreeModuleElement::zero(&self.ring, prev[0].rank());
                for (t, coef) in col.components.iter().enumerate() {
                    if !coef.is_zero() {
                        acc = acc.add(&prev[t].mul_poly(coef));
                    }
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Minimality: every matrix entry lies in the irrelevant maximal
    /// ideal, i.e. has zero constant term.
    pub fn is_minimal(&self) -> bool {
        use num_traits::Zero;
        self.matrices.iter().flatten().all(|col| {
            col.components
                .iter()
                .all(|p| p.constant_term().is_zero())
        })
    }
}

/// A minimal homogeneous generating set, selected greedily in degree
/// order: an element is kept iff it does not lie in the submodule
/// generated by the elements already kept (graded Nakayama).
pub fn minimal_generators(
    elems: &[FreeModuleElement],
    shifts: &[i64],
    order: &MonomialOrder,
) -> Result<Vec<FreeModuleElement>> {
    let mut graded: Vec<(i64, FreeModuleElement)> = Vec::new();
    for v in elems {
        if v.is_zero() {
            continue;
        }
        match v.shifted_degree(shifts) {
            Some(d) => graded.push((d, v.clone())),
            None => {
                return Err(Error::NotHomogeneous(
                    "minimal generators require a homogeneous input".into(),
                ))
            }
        }
    }
    graded.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<FreeModuleElement> = Vec::new();
    for (_, v) in graded {
        if kept.is_empty() || !module_member(&v, &kept, order) {
            kept.push(v);
        }
    }
    Ok(kept)
}

/// Minimal generators of a homogeneous ideal.
pub fn minimal_ideal_generators(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    let wrapped: Vec<FreeModuleElement> = ideal
        .generators()
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    let min = minimal_generators(&wrapped, &[0], &DEFAULT_ORDER)?;
    Ok(min.into_iter().map(|v| v.components.into_iter().next().unwrap()).collect())
}

/// Minimal graded free resolution of R/I by iterated syzygies with
/// per-step minimal generating sets. Keeping each step minimal makes
/// the whole resolution minimal, so the process stops after at most
/// (number of variables) steps.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    let ring = ideal.ring().clone();
    let order = DEFAULT_ORDER;
    if ideal.is_zero_ideal() {
        return Ok(FreeResolution {
            ring,
            shifts: vec![vec![0]],
            matrices: vec![],
        });
    }
    for g in ideal.generators() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!(
                "resolution requires homogeneous generators, got {g}"
            )));
        }
    }
    if ideal.is_trivial() {
        return Err(Error::Invalid("unit ideal has no graded resolution".into()));
    }

    let wrapped: Vec<FreeModuleElement> = ideal
        .generators()
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    let mut current = minimal_generators(&wrapped, &[0], &order)?;
    let mut current_shifts: Vec<i64> = current
        .iter()
        .map(|v| v.shifted_degree(&[0]).unwrap())
        .collect();
    let mut shifts: Vec<Vec<i64>> = vec![vec![0], current_shifts.clone()];
    let mut matrices: Vec<Vec<FreeModuleElement>> = vec![current.clone()];

    let bound = ring.num_vars() + 1;
    for _step in 0..bound {
        let syz = module_syzygies(&current, &order);
        let min = minimal_generators(&syz, &current_shifts, &order)?;
        if min.is_empty() {
            return Ok(FreeResolution {
                ring,
                shifts,
                matrices,
            });
        }
        current_shifts = min
            .iter()
            .map(|v| v.shifted_degree(&current_shifts).unwrap())
            .collect();
        shifts.push(current_shifts.clone());
        matrices.push(min.clone());
        current = min;
    }
    Err(Error::Unsupported(
        "resolution did not terminate within the variable-count bound".into(),
    ))
}

/// pd, depth and Betti table of R/I in one call.
pub fn homological_invariants(ideal: &Ideal) -> Result<(usize, usize, BettiTable)> {
    let res = free_resolution(ideal)?;
    debug_assert!(res.verify_complex());
    debug_assert!(res.is_minimal());
    Ok((res.pd(), res.depth(), res.betti()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> Arc<PolyRing> {
        PolyRing::standard(vec!["x", "y"])
    }

    #[test]
    fn koszul_two_variables() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![x, y]);
        let res = free_resolution(&i).unwrap();
        assert_eq!(res.pd(), 2);
        assert_eq!(res.depth(), 0);
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
        assert_eq!(res.shifts, vec![vec![0], vec![1, 1], vec![2]]);
        assert!(res.verify_complex());
        assert!(res.is_minimal());
    }

    #[test]
    fn koszul_three_variables() {
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let gens: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let i = Ideal::new(&r, gens);
        let (pd, depth, betti) = homological_invariants(&i).unwrap();
        assert_eq!(pd, 3);
        assert_eq!(depth, 0);
        assert_eq!(betti.totals(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn square_of_maximal_ideal() {
        // (x^2, xy, y^2): Hilbert-Burch, betti (1, 3, 2)
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        let res = free_resolution(&i).unwrap();
        assert_eq!(res.betti().totals(), vec![1, 3, 2]);
        assert_eq!(res.shifts, vec![vec![0], vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(res.pd(), 2);
        assert_eq!(res.betti().regularity(), 1);
        assert!(res.verify_complex());
        assert!(res.is_minimal());
    }

    #[test]
    fn hypersurface() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &y)]);
        let res = free_resolution(&i).unwrap();
        assert_eq!(res.pd(), 1);
        assert_eq!(res.depth(), 1);
        assert_eq!(res.betti().totals(), vec![1, 1]);
    }

    #[test]
    fn redundant_generators_are_pruned() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // x, y, and the redundant x^2 + xy
        let i = Ideal::new(&r, vec![x.clone(), y.clone(), &(&x * &x) + &(&x * &y)]);
        let min = minimal_ideal_generators(&i).unwrap();
        assert_eq!(min.len(), 2);
        let res = free_resolution(&i).unwrap();
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
    }

    #[test]
    fn zero_ideal_resolution() {
        let r = r2();
        let res = free_resolution(&Ideal::zero(&r)).unwrap();
        assert_eq!(res.pd(), 0);
        assert_eq!(res.depth(), 2);
        assert_eq!(res.betti().totals(), vec![1]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let i = Ideal::new(&r, vec![&(&x * &x) - &x]);
        assert!(matches!(
            free_resolution(&i),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn betti_display_shape() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        let res = free_resolution(&i).unwrap();
        let shown = res.betti().to_string();
        assert!(shown.contains("total:"));
        assert!(shown.contains('.'));
    }
}
