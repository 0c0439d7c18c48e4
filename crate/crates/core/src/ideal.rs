//! Ideals and the derived operations built on Groebner bases:
//! elimination, intersection, colon, saturation, radical membership,
//! Krull dimension and minor ideals.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use crate::groebner::{buchberger, divide, normal_form};
use crate::{Error, GroebnerBasis, Monomial, MonomialOrder, PolyRing, Polynomial, Result};

/// Default order for canonical certificates: grevlex refined by the
/// ring's weights.
pub const DEFAULT_ORDER: MonomialOrder = MonomialOrder::WeightedGrevLex;

/// An ideal of a polynomial ring, carried by a generator list. Ideal
/// equality is always decided through reduced Groebner bases, never by
/// comparing generator lists. Computed bases are memoized per order.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        let mut clean: Vec<Polynomial> = Vec::new();
        for g in gens {
            assert!(
                PolyRing::same_ring(g.ring(), ring),
                "generator from a different ring"
            );
            if !g.is_zero() && !clean.contains(&g) {
                clean.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: clean,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis, memoized per order.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.get(order) {
                return gb.clone();
            }
        }
        let gb = Arc::new(buchberger(&self.gens, &self.ring, order));
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), gb.clone());
        gb
    }

    pub fn contains(&self, f: &Polynomial, order: &MonomialOrder) -> bool {
        let gb = self.groebner(order);
        normal_form(f, &gb.elements, order).is_zero()
    }

    /// The whole ring: 1 lies in the ideal.
    pub fn is_trivial(&self) -> bool {
        self.groebner(&DEFAULT_ORDER).contains_one()
    }

    /// Canonical equality through reduced Groebner bases.
    pub fn eq_ideal(&self, other: &Ideal) -> bool {
        PolyRing::same_ring(&self.ring, &other.ring)
            && self.groebner(&DEFAULT_ORDER).elements == other.groebner(&DEFAULT_ORDER).elements
    }

    pub fn contains_ideal(&self, other: &Ideal, order: &MonomialOrder) -> bool {
        other.gens.iter().all(|g| self.contains(g, order))
    }

    /// Intersection with the subring on the complement of `drop`:
    /// generators of I intersected with k[remaining vars], computed via
    /// a block order with the dropped variables in the leading block.
    /// The result lives in the smaller ring.
    pub fn eliminate(&self, drop: &BTreeSet<usize>) -> Ideal {
        let n = self.ring.num_vars();
        assert!(drop.iter().all(|&i| i < n), "drop set out of range");
        if drop.is_empty() {
            let kept = Ideal::new(&self.ring, self.gens.clone());
            return kept;
        }
        let dropped: Vec<usize> = drop.iter().copied().collect();
        let kept: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let mut perm_names: Vec<String> = Vec::with_capacity(n);
        let mut perm_weights: Vec<u32> = Vec::with_capacity(n);
        for &i in dropped.iter().chain(kept.iter()) {
            perm_names.push(self.ring.var_name(i).to_string());
            perm_weights.push(self.ring.weights()[i]);
        }
        let perm_ring = PolyRing::new(perm_names, perm_weights).expect("permuted ring");
        let mapped: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_to_ring(&perm_ring).expect("same variables"))
            .collect();
        let order = MonomialOrder::elimination(dropped.len());
        let gb = buchberger(&mapped, &perm_ring, &order);
        let result_ring = PolyRing::new(
            kept.iter()
                .map(|&i| self.ring.var_name(i).to_string())
                .collect(),
            kept.iter().map(|&i| self.ring.weights()[i]).collect(),
        )
        .expect("result ring");
        let k = dropped.len();
        let mut out = Vec::new();
        for g in &gb.elements {
            let in_subring = g
                .terms()
                .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0));
            if in_subring {
                out.push(g.map_to_ring(&result_ring).expect("subring element"));
            }
        }
        Ideal::new(&result_ring, out)
    }

    pub fn eliminate_names(&self, names: &[&str]) -> Ideal {
        let drop: BTreeSet<usize> = names
            .iter()
            .map(|n| self.ring.var_index(n).expect("unknown variable"))
            .collect();
        self.eliminate(&drop)
    }

    /// I cap J via the one-new-variable construction: eliminate t from
    /// t*I + (1-t)*J.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !PolyRing::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("intersection operands".into()));
        }
        let t_name = fresh_name(&self.ring, "t");
        let n = self.ring.num_vars();
        let mut names = vec![t_name.clone()];
        let mut weights = vec![1u32];
        for i in 0..n {
            names.push(self.ring.var_name(i).to_string());
            weights.push(self.ring.weights()[i]);
        }
        let ext = PolyRing::new(names, weights).expect("extended ring");
        let t = Polynomial::var(&ext, 0);
        let one = Polynomial::one(&ext);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.map_to_ring(&ext)?);
        }
        for g in &other.gens {
            gens.push(&(&one - &t) * &g.map_to_ring(&ext)?);
        }
        let big = Ideal::new(&ext, gens);
        let mut drop = BTreeSet::new();
        drop.insert(0);
        let elim = big.eliminate(&drop);
        // transport back into the original ring value
        let back: Vec<Polynomial> = elim
            .gens
            .iter()
            .map(|g| g.map_to_ring(&self.ring).expect("original variables"))
            .collect();
        Ok(Ideal::new(&self.ring, back))
    }

    /// Colon ideal I : (g) for a single nonzero g, via (I cap (g))/g.
    fn colon_single(&self, g: &Polynomial) -> Result<Ideal> {
        assert!(!g.is_zero());
        let principal = Ideal::new(&self.ring, vec![g.clone()]);
        let meet = self.intersect(&principal)?;
        let mut quots = Vec::new();
        for f in meet.generators() {
            let (q, r) = divide(f, std::slice::from_ref(g), &DEFAULT_ORDER);
            assert!(
                r.is_zero(),
                "element of I cap (g) must be divisible by g"
            );
            quots.push(q.into_iter().next().unwrap());
        }
        Ok(Ideal::new(&self.ring, quots))
    }

    /// Colon ideal I : J = { f : f*J subset I }.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        if !PolyRing::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("colon operands".into()));
        }
        let nonzero: Vec<&Polynomial> = other.gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for g in nonzero {
            let q = self.colon_single(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation I : J^infinity by iterated colon, stopping on
    /// Groebner-basis equality. Returns the stable ideal and the number
    /// of colon steps that changed the ideal.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let mut current = Ideal::new(&self.ring, self.gens.clone());
        let mut index = 0usize;
        loop {
            let next = current.quotient(other)?;
            if next.eq_ideal(&current) {
                return Ok((current, index));
            }
            current = next;
            index += 1;
        }
    }

    /// Radical membership by the Rabinowitsch trick: f lies in the
    /// radical of I iff 1 lies in I + (1 - t*f) in the ring extended
    /// by a fresh variable t.
    pub fn radical_member(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let t_name = fresh_name(&self.ring, "t");
        let n = self.ring.num_vars();
        let mut names: Vec<String> = (0..n)
            .map(|i| self.ring.var_name(i).to_string())
            .collect();
        let mut weights = self.ring.weights().to_vec();
        names.push(t_name);
        weights.push(1);
        let ext = PolyRing::new(names, weights).expect("extended ring");
        let t = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_to_ring(&ext).expect("same vars"))
            .collect();
        let fe = f.map_to_ring(&ext).expect("same vars");
        gens.push(&Polynomial::one(&ext) - &(&t * &fe));
        buchberger(&gens, &ext, &DEFAULT_ORDER).contains_one()
    }

    /// Every generator of `other` lies in the radical of `self`.
    pub fn radical_contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.radical_member(g))
    }

    /// Krull dimension of R/I: the largest subset S of the variables
    /// with in(I) cap k[S] = 0, computed on the leading monomials of a
    /// reduced Groebner basis. Returns None for the unit ideal.
    pub fn krull_dim(&self) -> Option<usize> {
        let gb = self.groebner(&DEFAULT_ORDER);
        if gb.contains_one() {
            return None;
        }
        let n = self.ring.num_vars();
        assert!(n <= 24, "dimension search limited to 24 variables");
        let masks: Vec<u32> = gb
            .leading_monomials()
            .iter()
            .map(|m| {
                let mut mask = 0u32;
                for i in m.support() {
                    mask |= 1 << i;
                }
                mask
            })
            .collect();
        let mut best = 0usize;
        for s in 0u32..(1u32 << n) {
            let size = s.count_ones() as usize;
            if size <= best {
                continue;
            }
            // independent iff no leading monomial has support inside S
            if masks.iter().all(|&g| g & !s != 0) {
                best = size;
            }
        }
        Some(best)
    }
}

/// The ideal of all c x c minors of a polynomial matrix, by exact
/// cofactor expansion. c = 0 yields the unit ideal.
pub fn minors_ideal(matrix: &[Vec<Polynomial>], c: usize, ring: &Arc<PolyRing>) -> Ideal {
    if c == 0 {
        return Ideal::new(ring, vec![Polynomial::one(ring)]);
    }
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    assert!(
        c <= rows.min(cols),
        "minor size exceeds matrix dimensions"
    );
    let row_sets = combinations(rows, c);
    let col_sets = combinations(cols, c);
    let mut gens = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&cc| matrix[r][cc].clone()).collect())
                .collect();
            let d = determinant(&sub, ring);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::new(ring, gens)
}

pub fn determinant(m: &[Vec<Polynomial>], ring: &Arc<PolyRing>) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = &determinant(&minor, ring) * entry;
        if j % 2 == 0 {
            acc = &acc + &cof;
        } else {
            acc = &acc - &cof;
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A variable name not already used by the ring.
pub fn fresh_name(ring: &Arc<PolyRing>, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// Exponent vectors of the leading monomials of the reduced basis,
/// i.e. the minimal generators of the initial ideal.
pub fn initial_monomials(ideal: &Ideal, order: &MonomialOrder) -> Vec<Monomial> {
    ideal.groebner(order).leading_monomials()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> Arc<PolyRing> {
        PolyRing::standard(vec!["x", "y"])
    }

    fn v(r: &Arc<PolyRing>, name: &str) -> Polynomial {
        Polynomial::var_named(r, name)
    }

    #[test]
    fn eliminate_parabola() {
        // I = (x - t, y - t^2), drop t -> (y - x^2)
        let r = PolyRing::standard(vec!["t", "x", "y"]);
        let (t, x, y) = (v(&r, "t"), v(&r, "x"), v(&r, "y"));
        let i = Ideal::new(&r, vec![&x - &t, &y - &(&t * &t)]);
        let e = i.eliminate_names(&["t"]);
        let small = e.ring().clone();
        let expect = Ideal::new(
            &small,
            vec![&v(&small, "y") - &(&v(&small, "x") * &v(&small, "x"))],
        );
        assert!(e.eq_ideal(&expect));
    }

    #[test]
    fn eliminate_unused_variable() {
        let r = r2();
        let i = Ideal::new(&r, vec![v(&r, "x")]);
        let e = i.eliminate_names(&["y"]);
        assert_eq!(e.ring().num_vars(), 1);
        assert_eq!(e.generators().len(), 1);
        assert_eq!(e.generators()[0].to_string(), "x");
    }

    #[test]
    fn eliminate_veronese_relation() {
        // I = (u0 - t x1^2, u1 - t x1 x2, u2 - t x2^2), drop t:
        // the result contains u0 u2 - u1^2
        let r = PolyRing::standard(vec!["t", "x1", "x2", "u0", "u1", "u2"]);
        let t = v(&r, "t");
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let (u0, u1, u2) = (v(&r, "u0"), v(&r, "u1"), v(&r, "u2"));
        let i = Ideal::new(
            &r,
            vec![
                &u0 - &(&t * &(&x1 * &x1)),
                &u1 - &(&t * &(&x1 * &x2)),
                &u2 - &(&t * &(&x2 * &x2)),
            ],
        );
        let e = i.eliminate_names(&["t"]);
        let small = e.ring().clone();
        let quad = &(&v(&small, "u0") * &v(&small, "u2"))
            - &(&v(&small, "u1") * &v(&small, "u1"));
        assert!(e.contains(&quad, &DEFAULT_ORDER));
    }

    #[test]
    fn eliminate_empty_is_identity() {
        let r = r2();
        let i = Ideal::new(&r, vec![v(&r, "x")]);
        let e = i.eliminate(&BTreeSet::new());
        assert!(e.eq_ideal(&i));
    }

    #[test]
    fn intersections() {
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let (x, y, z) = (v(&r, "x"), v(&r, "y"), v(&r, "z"));
        // (x) cap (y) = (xy)
        let a = Ideal::new(&r, vec![x.clone()]);
        let b = Ideal::new(&r, vec![y.clone()]);
        let m = a.intersect(&b).unwrap();
        assert!(m.eq_ideal(&Ideal::new(&r, vec![&x * &y])));
        // (x, y) cap (x, z) = (x, yz)
        let c = Ideal::new(&r, vec![x.clone(), y.clone()]);
        let d = Ideal::new(&r, vec![x.clone(), z.clone()]);
        let m2 = c.intersect(&d).unwrap();
        assert!(m2.eq_ideal(&Ideal::new(&r, vec![x.clone(), &y * &z])));
    }

    #[test]
    fn colon_ideals() {
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        // (x^2) : (x) = (x)
        let q1 = Ideal::new(&r, vec![&x * &x])
            .quotient(&Ideal::new(&r, vec![x.clone()]))
            .unwrap();
        assert!(q1.eq_ideal(&Ideal::new(&r, vec![x.clone()])));
        // (x^2, xy) : (x) = (x, y)
        let q2 = Ideal::new(&r, vec![&x * &x, &x * &y])
            .quotient(&Ideal::new(&r, vec![x.clone()]))
            .unwrap();
        assert!(q2.eq_ideal(&Ideal::new(&r, vec![x.clone(), y.clone()])));
        // (xy) : (x, y) = (xy) -- intersection of (y) and (x)
        let q3 = Ideal::new(&r, vec![&x * &y])
            .quotient(&Ideal::new(&r, vec![x.clone(), y.clone()]))
            .unwrap();
        assert!(q3.eq_ideal(&Ideal::new(&r, vec![&x * &y])));
        // colon by zero ideal is an error
        assert_eq!(
            Ideal::new(&r, vec![x.clone()])
                .quotient(&Ideal::zero(&r))
                .unwrap_err(),
            Error::ZeroIdeal
        );
    }

    #[test]
    fn saturations() {
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let (s1, i1) = Ideal::new(&r, vec![x.clone()])
            .saturate(&Ideal::new(&r, vec![x.clone()]))
            .unwrap();
        assert!(s1.is_trivial());
        assert_eq!(i1, 1);
        let (s2, i2) = Ideal::new(&r, vec![&x * &x, &x * &y])
            .saturate(&Ideal::new(&r, vec![x.clone(), y.clone()]))
            .unwrap();
        assert!(s2.eq_ideal(&Ideal::new(&r, vec![x.clone()])));
        assert!(i2 <= 2);
        // stability: quotient(sat, J) = sat
        let again = s2.quotient(&Ideal::new(&r, vec![x, y])).unwrap();
        assert!(again.eq_ideal(&s2));
    }

    #[test]
    fn radical_membership() {
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let i = Ideal::new(&r, vec![&x * &x]);
        assert!(i.radical_member(&x));
        assert!(!i.radical_member(&y));
    }

    #[test]
    fn krull_dimensions() {
        let r3 = PolyRing::standard(vec!["x", "y", "z"]);
        assert_eq!(Ideal::zero(&r3).krull_dim(), Some(3));
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        assert_eq!(Ideal::new(&r, vec![&x * &y]).krull_dim(), Some(1));
        assert_eq!(
            Ideal::new(&r, vec![Polynomial::one(&r)]).krull_dim(),
            None
        );
    }

    #[test]
    fn complete_intersection_dimension() {
        // regular sequence of length 2 in 3 variables: dim 1
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let (x, y, z) = (v(&r, "x"), v(&r, "y"), v(&r, "z"));
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &z), y.clone()]);
        assert_eq!(i.krull_dim(), Some(1));
    }

    #[test]
    fn minors() {
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let m1 = minors_ideal(&[vec![x.clone()]], 1, &r);
        assert!(m1.eq_ideal(&Ideal::new(&r, vec![x.clone()])));
        let zero = Polynomial::zero(&r);
        let m2 = minors_ideal(
            &[vec![x.clone(), zero.clone()], vec![zero, y.clone()]],
            2,
            &r,
        );
        assert!(m2.eq_ideal(&Ideal::new(&r, vec![&x * &y])));
        let m0 = minors_ideal(&[vec![x]], 0, &r);
        assert!(m0.is_trivial());
    }

    #[test]
    fn gb_idempotence() {
        let r = r2();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let i = Ideal::new(&r, vec![&(&x * &x) - &y, &(&x * &y) - &Polynomial::one(&r)]);
        let gb = i.groebner(&MonomialOrder::Lex);
        let again = buchberger(&gb.elements, &r, &MonomialOrder::Lex);
        assert_eq!(gb.elements, again.elements);
    }
}
