//! Hilbert series of graded quotients, colengths by staircase
//! enumeration, colength profiles of ideal powers, and the binomial
//! identities they satisfy.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::ideal::{Ideal, DEFAULT_ORDER};
use crate::resolution::BettiTable;
use crate::{Error, Monomial, MonomialOrder, PolyRing, Polynomial, Result};

/// Hilbert series of a graded quotient R/I as N(t) / prod (1 - t^w)
/// over the variable weights w. The numerator is stored by ascending
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub denominator_weights: Vec<u32>,
}

impl HilbertSeries {
    /// Cancel the full denominator. `Some` exactly when the series is a
    /// polynomial, i.e. the quotient is artinian; the result is then
    /// the Hilbert function by degree.
    pub fn reduced(&self) -> Option<Vec<BigInt>> {
        let mut num = self.numerator.clone();
        for &w in &self.denominator_weights {
            num = up_div_one_minus(&num, w as usize)?;
        }
        Some(num)
    }

    /// dim_k R/I when finite: the reduced numerator evaluated at 1.
    pub fn colength(&self) -> Option<BigUint> {
        let reduced = self.reduced()?;
        let total: BigInt = reduced.iter().sum();
        total.to_biguint()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (", up_display(&self.numerator))?;
        for (i, w) in self.denominator_weights.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *w == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{w})")?;
            }
        }
        write!(f, ")")
    }
}

// ---- univariate integer polynomials (coefficients by degree) ----

fn up_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
    a
}

fn up_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    up_trim(out)
}

fn up_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    up_trim(out)
}

fn up_shift(a: &[BigInt], d: usize) -> Vec<BigInt> {
    if a.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); d];
    out.extend_from_slice(a);
    out
}

/// 1 - t^w.
fn up_one_minus(w: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); w + 1];
    v[0] = BigInt::one();
    v[w] = -BigInt::one();
    v
}

/// Exact division by (1 - t^w); None when the division leaves a
/// remainder.
fn up_div_one_minus(a: &[BigInt], w: usize) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(vec![]);
    }
    // a_i = q_i - q_{i-w}  =>  q_i = a_i + q_{i-w}
    let mut q = vec![BigInt::zero(); a.len()];
    for i in 0..a.len() {
        q[i] = a[i].clone();
        if i >= w {
            let prev = q[i - w].clone();
            q[i] += prev;
        }
    }
    // exact iff the top w partial sums vanish
    let cut = a.len().saturating_sub(w);
    if q[cut..].iter().all(|c| c.is_zero()) {
        q.truncate(cut);
        Some(up_trim(q))
    } else {
        None
    }
}

fn up_display(a: &[BigInt]) -> String {
    if a.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (d, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let abs = if neg { -c } else { c.clone() };
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !abs.is_one() || d == 0;
        if show_coeff {
            out.push_str(&abs.to_string());
        }
        if d == 1 {
            if show_coeff {
                out.push('*');
            }
            out.push('t');
        } else if d > 1 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(&format!("t^{d}"));
        }
    }
    out
}

// ---- monomial-ideal machinery ----

/// Drop generators divisible by another generator; sort and dedupe.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| (m.total_degree(), m.clone()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Numerator of the Hilbert series of R/(gens) by pivot recursion on
/// the exact sequence 0 -> R/(I:p)(-deg p) -> R/I -> R/(I+p) -> 0 with
/// pivot p a pure variable power. Base cases: no generators, a unit
/// generator, and generators with pairwise disjoint supports.
fn numerator_monomial(gens: &[Monomial], weights: &[u32]) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.iter().any(|m| m.is_unit()) {
        return vec![];
    }
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let n = weights.len();
    let mut occ = vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            occ[v] += 1;
        }
    }
    let (pivot_var, &max_occ) = occ
        .iter()
        .enumerate()
        .max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i)))
        .unwrap();
    if max_occ <= 1 {
        // pairwise disjoint supports: the quotient is a tensor product
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            acc = up_mul(&acc, &up_one_minus(g.weighted_degree(weights) as usize));
        }
        return acc;
    }
    // highest pivot-variable exponent among generators that are not a
    // pure power of it; after minimalization this power is not in the
    // ideal, and both branches strictly shrink
    let e = gens
        .iter()
        .filter(|g| g.support().any(|v| v != pivot_var))
        .map(|g| g.exponents()[pivot_var])
        .max()
        .unwrap();
    debug_assert!(e >= 1);
    let pivot = Monomial::var(n, pivot_var).pow(e);
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps[pivot_var] = exps[pivot_var].saturating_sub(e);
            Monomial(exps)
        })
        .collect();
    let sum_part = numerator_monomial(&with_pivot, weights);
    let colon_part = numerator_monomial(&colon, weights);
    let shift = pivot.weighted_degree(weights) as usize;
    up_add(&sum_part, &up_shift(&colon_part, shift))
}

/// The generators of an ideal when all of them are single terms.
pub fn monomial_generators(ideal: &Ideal) -> Option<Vec<Monomial>> {
    let mut out = Vec::new();
    for g in ideal.generators() {
        if g.num_terms() != 1 {
            return None;
        }
        out.push(g.terms().next().unwrap().0.clone());
    }
    Some(out)
}

/// Hilbert series of R/M for a monomial ideal M.
pub fn hilbert_series_monomial(ideal: &Ideal) -> Result<HilbertSeries> {
    let gens = monomial_generators(ideal).ok_or_else(|| {
        Error::Invalid("generators must all be monomials".into())
    })?;
    let weights = ideal.ring().weights().to_vec();
    Ok(HilbertSeries {
        numerator: numerator_monomial(&gens, &weights),
        denominator_weights: weights,
    })
}

/// Hilbert series of R/I for weighted-homogeneous I: the series of the
/// initial ideal under any global order.
pub fn hilbert_series(ideal: &Ideal, order: &MonomialOrder) -> Result<HilbertSeries> {
    for g in ideal.generators() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(format!(
                "series requires homogeneous generators, got {g}"
            )));
        }
    }
    let weights = ideal.ring().weights().to_vec();
    let lms = ideal.groebner(order).leading_monomials();
    Ok(HilbertSeries {
        numerator: numerator_monomial(&lms, &weights),
        denominator_weights: weights,
    })
}

/// dim_k R/(gens) for a monomial ideal by staircase enumeration:
/// recurse on the exponent of the last variable, projecting away
/// generators, with memoization on the projected generator sets.
/// None means infinite colength.
pub fn colength_monomial(gens: &[Monomial], nvars: usize) -> Option<BigUint> {
    let mut memo: HashMap<Vec<Monomial>, Option<BigUint>> = HashMap::new();
    let mut key: Vec<Monomial> = gens.to_vec();
    key.sort();
    key.dedup();
    colength_rec(&key, nvars, &mut memo)
}

fn colength_rec(
    gens: &[Monomial],
    nvars: usize,
    memo: &mut HashMap<Vec<Monomial>, Option<BigUint>>,
) -> Option<BigUint> {
    if gens.iter().any(|m| m.is_unit()) {
        return Some(BigUint::zero());
    }
    if nvars == 0 {
        return Some(BigUint::one());
    }
    if gens.is_empty() {
        return None;
    }
    if let Some(hit) = memo.get(gens) {
        return hit.clone();
    }
    let v = nvars - 1;
    // a pure power of every variable must be present for finiteness
    let bound = gens
        .iter()
        .filter(|g| g.support().all(|i| i == v) && g.exponents()[v] > 0)
        .map(|g| g.exponents()[v])
        .min();
    let result = match bound {
        None => None,
        Some(b) => {
            let mut total = BigUint::zero();
            let mut ok = true;
            for e in 0..b {
                // standard monomials with last exponent exactly e
                let mut child: Vec<Monomial> = gens
                    .iter()
                    .filter(|g| g.exponents()[v] <= e)
                    .map(|g| Monomial(g.exponents()[..v].to_vec()))
                    .collect();
                child.sort();
                child.dedup();
                match colength_rec(&child, v, memo) {
                    Some(c) => total += c,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                Some(total)
            } else {
                None
            }
        }
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

/// dim_k R/I, or None when infinite. Monomial ideals are counted
/// directly; otherwise the staircase of the initial ideal is used.
pub fn colength(ideal: &Ideal) -> Option<BigUint> {
    let n = ideal.ring().num_vars();
    if let Some(gens) = monomial_generators(ideal) {
        return colength_monomial(&minimalize(&gens), n);
    }
    let lms = ideal.groebner(&DEFAULT_ORDER).leading_monomials();
    colength_monomial(&lms, n)
}

/// Monomial generators of the l-th power of a monomial ideal:
/// all products of l generators, deduplicated.
pub fn monomial_power(gens: &[Monomial], l: u32) -> Vec<Monomial> {
    let base = minimalize(gens);
    if base.is_empty() {
        return vec![];
    }
    if l == 0 {
        return vec![Monomial::unit(base[0].exponents().len())];
    }
    let mut products: BTreeSet<Monomial> = BTreeSet::new();
    fn rec(
        base: &[Monomial],
        start: usize,
        left: u32,
        acc: &Monomial,
        out: &mut BTreeSet<Monomial>,
    ) {
        if left == 0 {
            out.insert(acc.clone());
            return;
        }
        for i in start..base.len() {
            rec(base, i, left - 1, &acc.mul(&base[i]), out);
        }
    }
    let unit = Monomial::unit(base[0].exponents().len());
    rec(&base, 0, l, &unit, &mut products);
    products.into_iter().collect()
}

/// The l-th power of an ideal (generators: all products of l
/// generators). Intended for small l on non-monomial input.
pub fn ideal_power(ideal: &Ideal, l: u32) -> Ideal {
    let ring = ideal.ring().clone();
    if l == 0 {
        return Ideal::new(&ring, vec![Polynomial::one(&ring)]);
    }
    let base = ideal.generators();
    if base.is_empty() {
        return Ideal::zero(&ring);
    }
    let mut out: Vec<Polynomial> = Vec::new();
    fn rec(
        base: &[Polynomial],
        start: usize,
        left: u32,
        acc: &Polynomial,
        out: &mut Vec<Polynomial>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..base.len() {
            rec(base, i, left - 1, &(acc * &base[i]), out);
        }
    }
    rec(base, 0, l, &Polynomial::one(&ring), &mut out);
    Ideal::new(&ring, out)
}

/// len R/J^l for l = 1..lmax. Errors with the first l whose power has
/// infinite colength.
pub fn power_colength_profile(ideal: &Ideal, lmax: u32) -> Result<Vec<BigUint>> {
    let n = ideal.ring().num_vars();
    let mut out = Vec::with_capacity(lmax as usize);
    if let Some(gens) = monomial_generators(ideal) {
        let base = minimalize(&gens);
        for l in 1..=lmax {
            let power = monomial_power(&base, l);
            match colength_monomial(&power, n) {
                Some(c) => out.push(c),
                None => return Err(Error::InfiniteColength(l as usize)),
            }
        }
    } else {
        for l in 1..=lmax {
            let power = ideal_power(ideal, l);
            match colength(&power) {
                Some(c) => out.push(c),
                None => return Err(Error::InfiniteColength(l as usize)),
            }
        }
    }
    Ok(out)
}

// ---- binomial arithmetic ----

/// C(n, k) as an exact big integer; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// 3*C(n+l-1, n) + C(n+l-2, n): the closed form for the colength of
/// the l-th power of the length-3 thickened-point ideal in n
/// variables.
pub fn thickened_point_closed_form(n: u64, l: u64) -> BigUint {
    assert!(n >= 2 && l >= 1);
    BigUint::from(3u32) * binomial(n + l - 1, n) + binomial(n + l - 2, n)
}

/// Global-section defect of a smooth quadric inside projective
/// n-space: h0(P^n, O(l)) - h0(Q, O(l)) = C(n+l-2, n). For l < 2 the
/// twist in the defining sequence is negative and the defect is 0.
pub fn quadric_h0_defect(n: u64, l: u64) -> BigUint {
    if l < 2 {
        return BigUint::zero();
    }
    binomial(n + l - 2, n)
}

/// J = (x3, ..., xn) + (x1, x2)^2: the ideal of the length-3 first
/// infinitesimal neighbourhood of a point on a smooth surface
/// direction inside affine n-space.
pub fn thickened_point_ideal(n: usize) -> Ideal {
    assert!(n >= 2);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(names, vec![1; n]).expect("ring");
    let x1 = Polynomial::var(&ring, 0);
    let x2 = Polynomial::var(&ring, 1);
    let mut gens = vec![&x1 * &x1, &x1 * &x2, &x2 * &x2];
    for i in 2..n {
        gens.push(Polynomial::var(&ring, i));
    }
    Ideal::new(&ring, gens)
}

/// One row of the section-count identity report at a fixed twist l.
#[derive(Debug, Clone)]
pub struct IdentityLine {
    pub l: u64,
    /// closed form 3*C(n+l-1,n) + C(n+l-2,n)
    pub closed_form: BigUint,
    /// len R/J^l by staircase enumeration
    pub colength: BigUint,
    /// hockey stick: sum_{i<l} C(n-1+i, n-1) vs C(n+l-1, n)
    pub hockey_lhs: BigUint,
    pub hockey_rhs: BigUint,
    /// section-count balance with the common ambient term cancelled:
    /// 3 * C(n+l-1, n) vs closed_form - C(n+l-2, n)
    pub cancel_lhs: BigUint,
    pub cancel_rhs: BigUint,
    pub pass: bool,
}

/// Verify, for each l in range, that the two section counts of the
/// exceptional-divisor bundle agree once the common ambient term is
/// cancelled, that the hockey-stick identity holds, and that the
/// closed form matches an independent colength computation on powers
/// of the thickened-point ideal.
pub fn fiber_hilbert_identity(n: u64, lmin: u64, lmax: u64) -> Result<Vec<IdentityLine>> {
    assert!(n >= 2 && lmin >= 1 && lmin <= lmax);
    let ideal = thickened_point_ideal(n as usize);
    let profile = power_colength_profile(&ideal, lmax as u32)?;
    let mut out = Vec::new();
    for l in lmin..=lmax {
        let closed_form = thickened_point_closed_form(n, l);
        let colength = profile[(l - 1) as usize].clone();
        let hockey_lhs: BigUint = (0..l).map(|i| binomial(n - 1 + i, n - 1)).sum();
        let hockey_rhs = binomial(n + l - 1, n);
        let cancel_lhs = BigUint::from(3u32) * &hockey_rhs;
        let cancel_rhs = &closed_form - binomial(n + l - 2, n);
        let pass =
            closed_form == colength && hockey_lhs == hockey_rhs && cancel_lhs == cancel_rhs;
        out.push(IdentityLine {
            l,
            closed_form,
            colength,
            hockey_lhs,
            hockey_rhs,
            cancel_lhs,
            cancel_rhs,
            pass,
        });
    }
    Ok(out)
}

/// Alternating sum of the graded Betti numbers: sum (-1)^i b_{i,j} t^j.
/// For a minimal resolution this equals the Hilbert series numerator.
pub fn euler_numerator(betti: &BettiTable) -> Vec<BigInt> {
    let deg = betti
        .entries
        .keys()
        .map(|&(_, j)| j.max(0) as usize)
        .max()
        .unwrap_or(0);
    let mut out = vec![BigInt::zero(); deg + 1];
    for (&(i, j), &r) in &betti.entries {
        assert!(j >= 0, "negative internal degree");
        let term = BigInt::from(r);
        if i % 2 == 0 {
            out[j as usize] += term;
        } else {
            out[j as usize] -= term;
        }
    }
    up_trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::free_resolution;
    use std::sync::Arc;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn r2() -> Arc<PolyRing> {
        PolyRing::standard(vec!["x", "y"])
    }

    #[test]
    fn series_of_zero_ideal() {
        let r = r2();
        let s = hilbert_series_monomial(&Ideal::zero(&r)).unwrap();
        assert_eq!(s.numerator, vec![int(1)]);
        assert_eq!(s.reduced(), None); // not artinian
    }

    #[test]
    fn series_of_square_of_maximal_ideal() {
        // (x^2, xy, y^2): N = 1 - 3t^2 + 2t^3, function 1 + 2t
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        let s = hilbert_series_monomial(&i).unwrap();
        assert_eq!(s.numerator, vec![int(1), int(0), int(-3), int(2)]);
        assert_eq!(s.reduced(), Some(vec![int(1), int(2)]));
        assert_eq!(s.colength(), Some(big(3)));
    }

    #[test]
    fn noncurvilinear_length_three() {
        // (x3, x1^2, x1 x2, x2^2) in 3 variables has colength 3
        let i = thickened_point_ideal(3);
        let s = hilbert_series(&i, &DEFAULT_ORDER).unwrap();
        assert_eq!(s.colength(), Some(big(3)));
        assert_eq!(colength(&i), Some(big(3)));
    }

    #[test]
    fn hypersurface_series() {
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &z)]);
        let s = hilbert_series(&i, &DEFAULT_ORDER).unwrap();
        assert_eq!(s.numerator, vec![int(1), int(0), int(-1)]);
    }

    #[test]
    fn inhomogeneous_series_rejected() {
        let rw = PolyRing::new(vec!["x", "y"], vec![1, 2]).unwrap();
        let f = &Polynomial::var(&rw, 0) - &Polynomial::var(&rw, 1);
        let i = Ideal::new(&rw, vec![f]);
        assert!(matches!(
            hilbert_series(&i, &DEFAULT_ORDER),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn colengths() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert_eq!(
            colength(&Ideal::new(&r, vec![x.clone(), y.clone()])),
            Some(big(1))
        );
        // complete intersection (x^3, y^2): product of degrees
        assert_eq!(
            colength(&Ideal::new(&r, vec![x.pow(3), y.pow(2)])),
            Some(big(6))
        );
        // (x) alone is not artinian
        assert_eq!(colength(&Ideal::new(&r, vec![x.clone()])), None);
        // non-monomial input goes through the initial ideal
        let i = Ideal::new(&r, vec![&(&x * &x) - &y, y.pow(2)]);
        assert_eq!(colength(&i), Some(big(4)));
    }

    #[test]
    fn series_vs_staircase_agree() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![x.pow(3), &x * &y, y.pow(2)]);
        let s = hilbert_series_monomial(&i).unwrap();
        assert_eq!(s.colength(), colength(&i));
        assert_eq!(colength(&i), Some(big(4))); // 1, x, x^2, y
    }

    #[test]
    fn power_profiles() {
        // m = (x, y): profile C(l+1, 2)
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let m = Ideal::new(&r, vec![x.clone(), y.clone()]);
        assert_eq!(
            power_colength_profile(&m, 3).unwrap(),
            vec![big(1), big(3), big(6)]
        );
        // m^2 in 2 vars: [3, 10]
        let m2 = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        assert_eq!(power_colength_profile(&m2, 2).unwrap(), vec![big(3), big(10)]);
        // thickened point in 3 vars: [3, 13]
        let j = thickened_point_ideal(3);
        assert_eq!(power_colength_profile(&j, 2).unwrap(), vec![big(3), big(13)]);
        // infinite colength reports the offending power
        let p = Ideal::new(&r, vec![x.clone()]);
        assert_eq!(
            power_colength_profile(&p, 2).unwrap_err(),
            Error::InfiniteColength(1)
        );
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(thickened_point_closed_form(2, 1), big(3));
        assert_eq!(thickened_point_closed_form(3, 1), big(3));
        assert_eq!(thickened_point_closed_form(3, 2), big(13));
        assert_eq!(thickened_point_closed_form(5, 1), big(3));
    }

    #[test]
    fn quadric_defects() {
        assert_eq!(quadric_h0_defect(3, 2), big(1));
        assert_eq!(quadric_h0_defect(3, 5), big(20));
        assert_eq!(quadric_h0_defect(2, 2), big(1));
        assert_eq!(quadric_h0_defect(4, 1), big(0));
    }

    #[test]
    fn identity_small_cases() {
        for line in fiber_hilbert_identity(2, 1, 5).unwrap() {
            assert!(line.pass, "failed at l = {}", line.l);
        }
        let n3 = fiber_hilbert_identity(3, 2, 2).unwrap();
        assert_eq!(n3[0].closed_form, big(13));
        assert_eq!(n3[0].colength, big(13));
        assert!(n3[0].pass);
    }

    #[test]
    fn euler_matches_series_numerator() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        let res = free_resolution(&i).unwrap();
        let s = hilbert_series(&i, &DEFAULT_ORDER).unwrap();
        assert_eq!(euler_numerator(&res.betti()), s.numerator);
    }

    #[test]
    fn series_order_independent() {
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &z), &(&x * &y) - &(&z * &z)]);
        let lex = hilbert_series(&i, &MonomialOrder::Lex).unwrap();
        let grv = hilbert_series(&i, &MonomialOrder::GrevLex).unwrap();
        assert_eq!(lex.numerator, grv.numerator);
    }

    #[test]
    fn display_forms() {
        let r = r2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &x * &y, &y * &y]);
        let s = hilbert_series_monomial(&i).unwrap();
        assert_eq!(s.to_string(), "(1 - 3*t^2 + 2*t^3) / ((1 - t) * (1 - t))");
    }
}
