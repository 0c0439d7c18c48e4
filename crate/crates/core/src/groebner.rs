//! Buchberger's algorithm with Gebauer-Moeller pair elimination, the
//! multivariate division algorithm, and reduced Groebner bases.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::One;

use crate::poly::Coeff;
use crate::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A reduced Groebner basis: every element monic and fully reduced
/// against the others, leading monomials pairwise non-divisible, and
/// the list sorted by leading monomial descending. For a fixed order
/// this is a canonical representative of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn contains_one(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).expect("nonzero").0.clone())
            .collect()
    }
}

/// Remainder of `f` on division by the list `G` under `order`. The
/// result has no term divisible by any leading monomial of `G`, and
/// `f - result` lies in the ideal generated by `G`. The reducer is
/// always the first element of `G` (in list order) whose leading
/// monomial divides the current term, so the result is deterministic.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let (_, r) = divide(f, basis, order);
    r
}

/// Division with quotient tracking: returns `(q, r)` with
/// `f = sum_i q[i] * basis[i] + r` and no term of `r` divisible by any
/// leading monomial of `basis`.
pub fn divide(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring();
    let mut quots = vec![Polynomial::zero(ring); basis.len()];
    let mut rem = Polynomial::zero(ring);
    let mut p = f.clone();
    let leads: Vec<Option<(Monomial, Coeff)>> = basis
        .iter()
        .map(|g| {
            g.leading_term(order)
                .map(|(m, c)| (m.clone(), c.clone()))
        })
        .collect();
    while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (i, lead) in leads.iter().enumerate() {
            if let Some((gm, gc)) = lead {
                if gm.divides(&lm) {
                    let shift = gm.quotient_into(&lm);
                    let factor = &lc / gc;
                    p = p.sub_scaled_shifted(&factor, &shift, &basis[i]);
                    quots[i] = &quots[i]
                        + &Polynomial::monomial(ring, shift, factor);
                    reduced = true;
                    break;
                }
            }
        }
        if !reduced {
            // move the leading term to the remainder
            rem = &rem + &Polynomial::monomial(ring, lm.clone(), lc.clone());
            p = &p - &Polynomial::monomial(ring, lm, lc);
        }
    }
    (quots, rem)
}

fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f
        .mul_monomial(&fm.quotient_into(&l))
        .scale(&fc.recip());
    let b = g
        .mul_monomial(&gm.quotient_into(&l))
        .scale(&gc.recip());
    &a - &b
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u64,
}

fn pair_cmp(a: &Pair, b: &Pair, weights: &[u32], order: &MonomialOrder) -> Ordering {
    a.deg
        .cmp(&b.deg)
        .then_with(|| order.cmp(weights, &a.lcm, &b.lcm))
        .then_with(|| a.i.cmp(&b.i))
        .then_with(|| a.j.cmp(&b.j))
}

/// Gebauer-Moeller update: fold the new element `t` into the pair set,
/// applying the product and chain criteria.
fn gm_update(
    pairs: &mut Vec<Pair>,
    lms: &[Monomial],
    t: usize,
    weights: &[u32],
    order: &MonomialOrder,
) {
    let lm_t = &lms[t];
    let mut candidates: Vec<Pair> = (0..t)
        .map(|i| {
            let l = lms[i].lcm(lm_t);
            let deg = l.weighted_degree(weights);
            Pair { i, j: t, lcm: l, deg }
        })
        .collect();
    candidates.sort_by(|a, b| pair_cmp(a, b, weights, order));

    // First pass: discard (i,t) when another candidate's lcm divides it.
    let mut kept: Vec<Pair> = Vec::new();
    let mut alive: Vec<bool> = vec![true; candidates.len()];
    for idx in 0..candidates.len() {
        if !alive[idx] {
            continue;
        }
        let coprime = lms[candidates[idx].i].coprime(lm_t);
        let dominated = candidates.iter().enumerate().any(|(k, other)| {
            k != idx
                && alive[k]
                && other.lcm.divides(&candidates[idx].lcm)
                && other.lcm != candidates[idx].lcm
        }) || kept
            .iter()
            .any(|other| other.lcm.divides(&candidates[idx].lcm));
        if coprime || !dominated {
            kept.push(candidates[idx].clone());
        }
        alive[idx] = false;
    }
    // Equal-lcm duplicates: keep the first only.
    let mut dedup: Vec<Pair> = Vec::new();
    for p in kept {
        if !dedup.iter().any(|q| q.lcm == p.lcm) {
            dedup.push(p);
        }
    }
    // Second pass: the product criterion removes coprime pairs.
    dedup.retain(|p| !lms[p.i].coprime(lm_t));

    // Chain criterion on old pairs: drop (i,j) when LM(t) divides
    // lcm(i,j) strictly through both new lcms.
    pairs.retain(|p| {
        let lcm_ij = &p.lcm;
        if !lm_t.divides(lcm_ij) {
            return true;
        }
        let lcm_it = lms[p.i].lcm(lm_t);
        let lcm_jt = lms[p.j].lcm(lm_t);
        lcm_it == *lcm_ij || lcm_jt == *lcm_ij
    });
    pairs.extend(dedup);
}

/// Buchberger's algorithm. Zero and duplicate generators are dropped;
/// the output is the reduced Groebner basis of the ideal generated by
/// `gens` in `ring` under `order`.
pub fn buchberger(
    gens: &[Polynomial],
    ring: &Arc<PolyRing>,
    order: &MonomialOrder,
) -> GroebnerBasis {
    let weights = ring.weights().to_vec();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Polynomial> = Vec::new();
    for g in gens {
        assert!(
            PolyRing::same_ring(g.ring(), ring),
            "generator from a different ring"
        );
        if g.is_zero() {
            continue;
        }
        let m = g.monic(order);
        if !inputs.contains(&m) {
            inputs.push(m);
        }
    }

    for f in inputs {
        let t = basis.len();
        basis.push(f);
        let lms: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_term(order).unwrap().0.clone())
            .collect();
        gm_update(&mut pairs, &lms, t, &weights, order);
    }

    while !pairs.is_empty() {
        // normal selection: minimal lcm degree first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| pair_cmp(a, b, &weights, order))
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let h = normal_form(&s, &basis, order);
        if !h.is_zero() {
            let t = basis.len();
            basis.push(h.monic(order));
            let lms: Vec<Monomial> = basis
                .iter()
                .map(|g| g.leading_term(order).unwrap().0.clone())
                .collect();
            gm_update(&mut pairs, &lms, t, &weights, order);
        }
    }

    reduce_basis(basis, ring, order)
}

/// Inter-reduce a Groebner basis into reduced form.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    ring: &Arc<PolyRing>,
    order: &MonomialOrder,
) -> GroebnerBasis {
    let weights = ring.weights();
    if basis.is_empty() {
        return GroebnerBasis {
            order: order.clone(),
            elements: vec![],
        };
    }
    // minimal basis: drop elements whose LM is divisible by another's
    basis.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(weights, la, lb)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_term(order).unwrap().0.clone();
        if !minimal
            .iter()
            .any(|h| h.leading_term(order).unwrap().0.divides(&lm))
        {
            minimal.push(g);
        }
    }
    // tail-reduce each element against the rest
    let mut reduced: Vec<Polynomial> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order).monic(order);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(weights, lb, la)
    });
    GroebnerBasis {
        order: order.clone(),
        elements: reduced,
    }
}

/// Ideal membership: `f` lies in the ideal generated by `gens` iff its
/// normal form against a Groebner basis vanishes.
pub fn ideal_member(
    f: &Polynomial,
    gens: &[Polynomial],
    ring: &Arc<PolyRing>,
    order: &MonomialOrder,
) -> bool {
    let gb = buchberger(gens, ring, order);
    normal_form(f, &gb.elements, order).is_zero()
}

pub(crate) fn one_poly(ring: &Arc<PolyRing>) -> Polynomial {
    Polynomial::constant(ring, Coeff::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn vars(r: &Arc<PolyRing>) -> Vec<Polynomial> {
        (0..r.num_vars()).map(|i| Polynomial::var(r, i)).collect()
    }

    #[test]
    fn single_generator() {
        let r = PolyRing::standard(vec!["x"]);
        let x = Polynomial::var(&r, 0);
        let gb = buchberger(&[x.clone()], &r, &MonomialOrder::Lex);
        assert_eq!(gb.elements, vec![x]);
    }

    #[test]
    fn lex_textbook_example() {
        // {x^2 - y, x y - 1} under lex x > y gives {x - y^2, y^3 - 1}
        let r = PolyRing::standard(vec!["x", "y"]);
        let v = vars(&r);
        let (x, y) = (&v[0], &v[1]);
        let g1 = &(x * x) - y;
        let g2 = &(x * y) - &Polynomial::one(&r);
        let gb = buchberger(&[g1, g2], &r, &MonomialOrder::Lex);
        let e1 = x - &(y * y);
        let e2 = &(&(y * y) * y) - &Polynomial::one(&r);
        assert_eq!(gb.elements, vec![e1, e2]);
    }

    #[test]
    fn normal_form_multiple_of_generator() {
        let r = PolyRing::standard(vec!["x1", "x2", "u0", "u1"]);
        let x1 = Polynomial::var_named(&r, "x1");
        let x2 = Polynomial::var_named(&r, "x2");
        let u0 = Polynomial::var_named(&r, "u0");
        let u1 = Polynomial::var_named(&r, "u1");
        let g = &(&x1 * &u1) - &(&x2 * &u0);
        let f = &x1 * &g;
        let order = MonomialOrder::WeightedGrevLex;
        assert!(normal_form(&f, &[g], &order).is_zero());
    }

    #[test]
    fn empty_basis_returns_input() {
        let r = PolyRing::standard(vec!["x"]);
        let x = Polynomial::var(&r, 0);
        assert_eq!(normal_form(&x, &[], &MonomialOrder::Lex), x);
    }

    #[test]
    fn membership_trivial() {
        let r = PolyRing::standard(vec!["x", "y"]);
        let v = vars(&r);
        assert!(ideal_member(
            &v[0],
            &[v[0].clone(), v[1].clone()],
            &r,
            &MonomialOrder::WeightedGrevLex
        ));
    }

    #[test]
    fn division_tracks_quotients() {
        let r = PolyRing::standard(vec!["x", "y"]);
        let v = vars(&r);
        let (x, y) = (&v[0], &v[1]);
        let f = &(&(x * x) * y) + &(x * &(y * y)).scale(&coeff_int(3));
        let basis = [x * y - &Polynomial::one(&r), y * y - &Polynomial::one(&r)];
        let order = MonomialOrder::Lex;
        let (q, rem) = divide(&f, &basis, &order);
        let mut recomposed = rem.clone();
        for (qi, bi) in q.iter().zip(&basis) {
            recomposed = &recomposed + &(qi * bi);
        }
        assert_eq!(recomposed, f);
        // remainder has no term divisible by the leading monomials
        for (m, _) in rem.terms() {
            for b in &basis {
                assert!(!b.leading_term(&order).unwrap().0.divides(m));
            }
        }
    }

    #[test]
    fn duplicates_and_zeros_dropped() {
        let r = PolyRing::standard(vec!["x"]);
        let x = Polynomial::var(&r, 0);
        let gb = buchberger(
            &[Polynomial::zero(&r), x.clone(), x.clone()],
            &r,
            &MonomialOrder::Lex,
        );
        assert_eq!(gb.elements, vec![x]);
    }
}
