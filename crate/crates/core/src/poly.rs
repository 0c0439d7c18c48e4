use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Monomial, MonomialOrder, PolyRing, Result};

/// Exact rational coefficient. `BigRational` keeps the fraction
/// reduced with a positive denominator, which is exactly the canonical
/// form we need.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_frac(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A multivariate polynomial over the rationals in canonical term-map
/// form: no stored term has a zero coefficient, so two polynomials are
/// equal iff their term maps are equal. Values are immutable; every
/// operation returns a new polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(ring.num_vars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Arc<PolyRing>, idx: usize) -> Self {
        assert!(idx < ring.num_vars(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.num_vars(), idx), Coeff::one());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Self {
        let idx = ring
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable {name} in ring"));
        Self::var(ring, idx)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.exponents().len(), ring.num_vars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Arc<PolyRing>, it: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in it {
            assert_eq!(m.exponents().len(), ring.num_vars());
            let entry = terms.entry(m).or_insert_with(Coeff::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff_of(&Monomial::unit(self.ring.num_vars()))
    }

    /// Leading term under `order` (largest monomial). None for zero.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        let w = self.ring.weights();
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(w, a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let w = self.ring.weights();
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.cmp(w, b, a));
        ts
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// `self - c * x^m * g`, the basic reduction step.
    pub fn sub_scaled_shifted(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        assert_ring(self, g);
        let mut terms = self.terms.clone();
        for (k, a) in &g.terms {
            let key = k.mul(m);
            let entry = terms.entry(key).or_insert_with(Coeff::zero);
            *entry -= c * a;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Weighted-homogeneity test. Returns `(true, None)` for the zero
    /// polynomial, `(true, Some(d))` when every term has weighted
    /// degree d, `(false, None)` otherwise.
    pub fn weighted_degree(&self) -> (bool, Option<u64>) {
        let w = self.ring.weights();
        let mut deg = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(w);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return (false, None),
                _ => {}
            }
        }
        (true, deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree().0
    }

    /// Maximum weighted degree over all terms (0 for the zero polynomial).
    pub fn max_degree(&self) -> u64 {
        let w = self.ring.weights();
        self.terms
            .keys()
            .map(|m| m.weighted_degree(w))
            .max()
            .unwrap_or(0)
    }

    /// Apply the ring homomorphism determined by `assignment` (by
    /// variable name) into `target`. Unassigned variables must exist in
    /// the target ring and map to themselves.
    pub fn substitute(
        &self,
        target: &Arc<PolyRing>,
        assignment: &BTreeMap<String, Polynomial>,
    ) -> Result<Polynomial> {
        for (name, img) in assignment {
            if !PolyRing::same_ring(img.ring(), target) {
                return Err(Error::RingMismatch(format!(
                    "image of {name} is not in the target ring"
                )));
            }
        }
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.ring.num_vars());
        for i in 0..self.ring.num_vars() {
            let name = self.ring.var_name(i);
            if let Some(img) = assignment.get(name) {
                images.push(img.clone());
            } else {
                match target.var_index(name) {
                    Some(j) => images.push(Polynomial::var(target, j)),
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "variable {name} is neither assigned nor present in the target ring"
                        )))
                    }
                }
            }
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.num_vars());
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e > 0 {
                let mut exps = m.exponents().to_vec();
                exps[var] = e - 1;
                let coeff = c * Coeff::from_integer(BigInt::from(e));
                let entry = terms.entry(Monomial(exps)).or_insert_with(Coeff::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c: &mut Coeff| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Variables actually occurring in the polynomial.
    pub fn used_vars(&self) -> Vec<usize> {
        let n = self.ring.num_vars();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    /// Transport into another ring by matching variable names. Fails
    /// if a used variable is missing from the target ring.
    pub fn map_to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if PolyRing::same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let n = self.ring.num_vars();
        let mut index_map: Vec<Option<usize>> = Vec::with_capacity(n);
        for i in 0..n {
            index_map.push(target.var_index(self.ring.var_name(i)));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.num_vars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    match index_map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(Error::RingMismatch(format!(
                                "variable {} not present in target ring",
                                self.ring.var_name(i)
                            )))
                        }
                    }
                }
            }
            terms.insert(Monomial(exps), c.clone());
        }
        Ok(Polynomial {
            ring: target.clone(),
            terms,
        })
    }
}

fn assert_ring(a: &Polynomial, b: &Polynomial) {
    assert!(
        PolyRing::same_ring(&a.ring, &b.ring),
        "polynomials from different rings"
    );
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_ring(self, rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Coeff::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_ring(self, rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Coeff::zero);
            *entry -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_ring(self, rhs);
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let key = m1.mul(m2);
                let entry = terms.entry(key).or_insert_with(Coeff::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ts = self.sorted_terms(&MonomialOrder::WeightedGrevLex);
        for (i, (m, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                if abs.is_integer() {
                    factors.push(abs.numer().to_string());
                } else {
                    factors.push(format!("{}/{}", abs.numer(), abs.denom()));
                }
            }
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(j).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(j), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::standard(vec!["x", "y"])
    }

    #[test]
    fn add_cancels() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // (x+y) + (x-y) = 2x
        let s = &(&x + &y) + &(&x - &y);
        assert_eq!(s, x.scale(&coeff_int(2)));
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x - &y) * &(&x + &y);
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expect);
    }

    #[test]
    fn distributes_over_generator() {
        // (x1 u1 - x2 u0) * x1 = x1^2 u1 - x1 x2 u0
        let r = PolyRing::standard(vec!["x1", "x2", "u0", "u1"]);
        let x1 = Polynomial::var_named(&r, "x1");
        let x2 = Polynomial::var_named(&r, "x2");
        let u0 = Polynomial::var_named(&r, "u0");
        let u1 = Polynomial::var_named(&r, "u1");
        let g = &(&x1 * &u1) - &(&x2 * &u0);
        let p = &g * &x1;
        let expect = &(&(&x1 * &x1) * &u1) - &(&(&x1 * &x2) * &u0);
        assert_eq!(p, expect);
    }

    #[test]
    fn weighted_degree_cases() {
        // x1 u1 - x2 u0 in all-1 weights: homogeneous of degree 2
        let r = PolyRing::standard(vec!["x1", "x2", "u0", "u1"]);
        let f = &(&Polynomial::var_named(&r, "x1") * &Polynomial::var_named(&r, "u1"))
            - &(&Polynomial::var_named(&r, "x2") * &Polynomial::var_named(&r, "u0"));
        assert_eq!(f.weighted_degree(), (true, Some(2)));

        // x1 u1 - x2 with weights x1=1, x2=2, u1=1, u2=2: degree 2
        let rw = PolyRing::new(vec!["x1", "x2", "u1", "u2"], vec![1, 2, 1, 2]).unwrap();
        let g = &(&Polynomial::var_named(&rw, "x1") * &Polynomial::var_named(&rw, "u1"))
            - &Polynomial::var_named(&rw, "x2");
        assert_eq!(g.weighted_degree(), (true, Some(2)));

        // same polynomial, all weights 1: inhomogeneous
        let r1 = PolyRing::standard(vec!["x1", "x2", "u1", "u2"]);
        let h = &(&Polynomial::var_named(&r1, "x1") * &Polynomial::var_named(&r1, "u1"))
            - &Polynomial::var_named(&r1, "x2");
        assert_eq!(h.weighted_degree(), (false, None));

        // zero polynomial: homogeneous, no degree
        assert_eq!(Polynomial::zero(&r1).weighted_degree(), (true, None));
    }

    #[test]
    fn substitute_chart_passage() {
        // f = x1 u1 - x2 u0, u0 -> 1 gives x1 u1 - x2
        let r = PolyRing::standard(vec!["x1", "x2", "u0", "u1"]);
        let target = PolyRing::standard(vec!["x1", "x2", "u1"]);
        let f = &(&Polynomial::var_named(&r, "x1") * &Polynomial::var_named(&r, "u1"))
            - &(&Polynomial::var_named(&r, "x2") * &Polynomial::var_named(&r, "u0"));
        let mut map = BTreeMap::new();
        map.insert("u0".to_string(), Polynomial::one(&target));
        let g = f.substitute(&target, &map).unwrap();
        let expect = &(&Polynomial::var_named(&target, "x1")
            * &Polynomial::var_named(&target, "u1"))
            - &Polynomial::var_named(&target, "x2");
        assert_eq!(g, expect);
    }

    #[test]
    fn substitute_identity() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), x.clone());
        assert_eq!(x.substitute(&r, &map).unwrap(), x);
    }

    #[test]
    fn substitute_blowup_chart() {
        // f = x1^2 - x2 x3 with x1 -> x2 v1, x3 -> x2 v3
        // expands to x2^2 (v1^2 - v3)
        let r = PolyRing::standard(vec!["x1", "x2", "x3"]);
        let t = PolyRing::standard(vec!["x2", "v1", "v3"]);
        let x1 = Polynomial::var_named(&r, "x1");
        let x2 = Polynomial::var_named(&r, "x2");
        let x3 = Polynomial::var_named(&r, "x3");
        let f = &(&x1 * &x1) - &(&x2 * &x3);
        let tx2 = Polynomial::var_named(&t, "x2");
        let v1 = Polynomial::var_named(&t, "v1");
        let v3 = Polynomial::var_named(&t, "v3");
        let mut map = BTreeMap::new();
        map.insert("x1".to_string(), &tx2 * &v1);
        map.insert("x3".to_string(), &tx2 * &v3);
        let g = f.substitute(&t, &map).unwrap();
        let expect = &(&tx2 * &tx2) * &(&(&v1 * &v1) - &v3);
        assert_eq!(g, expect);
    }

    #[test]
    fn substitute_undeclared_target_errors() {
        let r = ring2();
        let t = PolyRing::standard(vec!["z"]);
        let x = Polynomial::var(&r, 0);
        let map = BTreeMap::new();
        assert!(x.substitute(&t, &map).is_err());
    }

    #[test]
    fn display_round_shape() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x * &x) - &y.scale(&coeff_frac(3, 2));
        assert_eq!(p.to_string(), "x^2 - 3/2*y");
    }
}
