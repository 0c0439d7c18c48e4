//! Submodules of free modules: position-over-term Groebner bases and
//! syzygy computation by position elimination.

use std::cmp::Ordering;
use std::sync::Arc;


use crate::poly::Coeff;
use crate::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// An element of a free module R^r, stored as one polynomial per
/// component. All components share one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModuleElement {
    pub components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "rank-0 module element");
        let ring = components[0].ring().clone();
        for c in &components {
            assert!(
                PolyRing::same_ring(c.ring(), &ring),
                "components from different rings"
            );
        }
        FreeModuleElement { components }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeModuleElement {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.components[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        FreeModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        FreeModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        FreeModuleElement {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        FreeModuleElement {
            components: self.components.iter().map(|p| p.mul_monomial(m)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        FreeModuleElement {
            components: self.components.iter().map(|c| c * p).collect(),
        }
    }

    /// Leading term under position-over-term: the smallest component
    /// index with a nonzero entry wins; within a component the base
    /// order decides. Returns (position, monomial, coefficient).
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(usize, Monomial, Coeff)> {
        for (pos, comp) in self.components.iter().enumerate() {
            if let Some((m, c)) = comp.leading_term(order) {
                return Some((pos, m.clone(), c.clone()));
            }
        }
        None
    }

    /// Weighted degree of a homogeneous element under component shifts
    /// (the degree of component k is its polynomial degree plus
    /// `shifts[k]`). Returns None when inhomogeneous or zero.
    pub fn shifted_degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (k, comp) in self.components.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            let (homog, d) = comp.weighted_degree();
            if !homog {
                return None;
            }
            let total = d.unwrap() as i64 + shifts[k];
            match deg {
                None => deg = Some(total),
                Some(d0) if d0 != total => return None,
                _ => {}
            }
        }
        deg
    }
}

fn modterm_cmp(
    order: &MonomialOrder,
    weights: &[u32],
    a: (usize, &Monomial),
    b: (usize, &Monomial),
) -> Ordering {
    // position-over-term, position 0 greatest
    match b.0.cmp(&a.0) {
        Ordering::Equal => order.cmp(weights, a.1, b.1),
        ord => ord,
    }
}

/// Full reduction of `v` against `basis` under position-over-term.
pub fn module_normal_form(
    v: &FreeModuleElement,
    basis: &[FreeModuleElement],
    order: &MonomialOrder,
) -> FreeModuleElement {
    let ring = v.ring().clone();
    let rank = v.rank();
    let leads: Vec<Option<(usize, Monomial, Coeff)>> =
        basis.iter().map(|g| g.leading_term(order)).collect();
    let mut rem = FreeModuleElement::zero(&ring, rank);
    let mut p = v.clone();
    while let Some((pos, lm, lc)) = p.leading_term(order) {
        let mut reduced = false;
        for (i, lead) in leads.iter().enumerate() {
            if let Some((gpos, gm, gc)) = lead {
                if *gpos == pos && gm.divides(&lm) {
                    let shift = gm.quotient_into(&lm);
                    let factor = &lc / gc;
                    p = p.sub(&basis[i].mul_monomial(&shift).scale(&factor));
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            let t = Polynomial::monomial(&ring, lm.clone(), lc.clone());
            let mut tv = FreeModuleElement::zero(&ring, rank);
            tv.components[pos] = t;
            rem = rem.add(&tv);
            p = p.sub(&tv);
        }
    }
    rem
}

fn module_spoly(
    f: &FreeModuleElement,
    g: &FreeModuleElement,
    order: &MonomialOrder,
) -> Option<FreeModuleElement> {
    let (fp, fm, fc) = f.leading_term(order)?;
    let (gp, gm, gc) = g.leading_term(order)?;
    if fp != gp {
        return None;
    }
    let l = fm.lcm(&gm);
    let a = f.mul_monomial(&fm.quotient_into(&l)).scale(&fc.recip());
    let b = g.mul_monomial(&gm.quotient_into(&l)).scale(&gc.recip());
    Some(a.sub(&b))
}

/// Buchberger for submodules of a free module under position-over-term
/// with base `order`. The output is inter-reduced and monic.
pub fn module_groebner(
    gens: &[FreeModuleElement],
    order: &MonomialOrder,
) -> Vec<FreeModuleElement> {
    let mut basis: Vec<FreeModuleElement> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let (_, _, lc) = g.leading_term(order).unwrap();
        let m = g.scale(&lc.recip());
        if !basis.contains(&m) {
            basis.push(m);
        }
    }
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    let weights = ring.weights().to_vec();

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection on the pair's lcm degree
        let key = |&(i, j): &(usize, usize)| {
            let (pi, mi, _) = basis[i].leading_term(order).unwrap();
            let (pj, mj, _) = basis[j].leading_term(order).unwrap();
            if pi != pj {
                return None;
            }
            let l = mi.lcm(&mj);
            Some((l.weighted_degree(&weights), l, i, j))
        };
        let best = pairs
            .iter()
            .enumerate()
            .filter_map(|(k, p)| key(p).map(|v| (k, v)))
            .min_by(|(_, a), (_, b)| {
                a.0.cmp(&b.0)
                    .then_with(|| order.cmp(&weights, &a.1, &b.1))
                    .then_with(|| (a.2, a.3).cmp(&(b.2, b.3)))
            })
            .map(|(k, _)| k);
        let k = match best {
            Some(k) => k,
            None => break, // only cross-position pairs remain
        };
        // drop the selected pair plus any cross-position pairs
        let (i, j) = pairs.swap_remove(k);
        pairs.retain(|p| key(p).is_some());
        if let Some(s) = module_spoly(&basis[i], &basis[j], order) {
            let h = module_normal_form(&s, &basis, order);
            if !h.is_zero() {
                let (_, _, lc) = h.leading_term(order).unwrap();
                basis.push(h.scale(&lc.recip()));
                let t = basis.len() - 1;
                for i in 0..t {
                    pairs.push((i, t));
                }
            }
        }
    }
    interreduce(basis, order)
}

fn interreduce(
    basis: Vec<FreeModuleElement>,
    order: &MonomialOrder,
) -> Vec<FreeModuleElement> {
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    let weights = ring.weights().to_vec();
    let mut sorted = basis;
    sorted.sort_by(|a, b| {
        let (pa, ma, _) = a.leading_term(order).unwrap();
        let (pb, mb, _) = b.leading_term(order).unwrap();
        modterm_cmp(order, &weights, (pa, &ma), (pb, &mb))
    });
    let mut minimal: Vec<FreeModuleElement> = Vec::new();
    for g in sorted {
        let (p, m, _) = g.leading_term(order).unwrap();
        let dominated = minimal.iter().any(|h| {
            let (hp, hm, _) = h.leading_term(order).unwrap();
            hp == p && hm.divides(&m)
        });
        if !dominated {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<FreeModuleElement> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = module_normal_form(&minimal[i], &others, order);
        if !r.is_zero() {
            let (_, _, lc) = r.leading_term(order).unwrap();
            reduced.push(r.scale(&lc.recip()));
        }
    }
    reduced.sort_by(|a, b| {
        let (pa, ma, _) = a.leading_term(order).unwrap();
        let (pb, mb, _) = b.leading_term(order).unwrap();
        modterm_cmp(order, &weights, (pb, &mb), (pa, &ma))
    });
    reduced
}

/// Membership in the submodule generated by `gens`.
pub fn module_member(
    v: &FreeModuleElement,
    gens: &[FreeModuleElement],
    order: &MonomialOrder,
) -> bool {
    if v.is_zero() {
        return true;
    }
    let gb = module_groebner(gens, order);
    module_normal_form(v, &gb, order).is_zero()
}

/// Generators of the syzygy module of vectors `vs` in R^r: all
/// (s_1..s_m) with sum s_i vs[i] = 0. Computed by a Groebner basis of
/// the graph module in R^{r+m} under position elimination: elements
/// whose first r components vanish are exactly the syzygies.
pub fn module_syzygies(vs: &[FreeModuleElement], order: &MonomialOrder) -> Vec<FreeModuleElement> {
    if vs.is_empty() {
        return vec![];
    }
    let r = vs[0].rank();
    let m = vs.len();
    let ring = vs[0].ring().clone();
    let mut graph: Vec<FreeModuleElement> = Vec::with_capacity(m);
    for (i, v) in vs.iter().enumerate() {
        assert_eq!(v.rank(), r, "rank mismatch");
        let mut comps = v.components.clone();
        comps.extend(vec![Polynomial::zero(&ring); m]);
        comps[r + i] = crate::groebner::one_poly(&ring);
        graph.push(FreeModuleElement::new(comps));
    }
    let gb = module_groebner(&graph, order);
    let mut syz = Vec::new();
    for g in gb {
        if g.components[..r].iter().all(|c| c.is_zero()) {
            let tail = g.components[r..].to_vec();
            let v = FreeModuleElement::new(tail);
            if !v.is_zero() {
                syz.push(v);
            }
        }
    }
    syz
}

/// Syzygies of a list of polynomials (the rank-1 case).
pub fn syzygies(gens: &[Polynomial], order: &MonomialOrder) -> Vec<FreeModuleElement> {
    if gens.is_empty() {
        return vec![];
    }
    let wrapped: Vec<FreeModuleElement> = gens
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    module_syzygies(&wrapped, order)
}
