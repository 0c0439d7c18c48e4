//! Blow-up presentations: symmetric-algebra and Rees ideals of a
//! center, affine charts with presentation simplification, strict
//! transforms of hypersurfaces under the origin blow-up, and a
//! positive-weight search that makes chart ideals graded when
//! possible.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::ideal::{Ideal, DEFAULT_ORDER};
use crate::module::syzygies;
use crate::{Error, PolyRing, Polynomial, Result};

/// Presentation of the blow-up of Spec(base) along a center with m+1
/// chosen generators: a subscheme of base x P^m cut out inside
/// k[x-vars, u_0..u_m]. The u-variable weights equal the degrees of
/// the matching center generators, which keeps the symmetric-algebra
/// ideal weighted-homogeneous for a homogeneous center.
#[derive(Debug, Clone)]
pub struct BlowupPresentation {
    pub base_ring: Arc<PolyRing>,
    pub total_ring: Arc<PolyRing>,
    /// Center generators; their order fixes the u-indexing.
    pub center: Vec<Polynomial>,
    pub sym_ideal: Ideal,
}

/// One affine chart u_j = 1, kept in two equivalent presentations:
/// the raw substitution and the result of variable elimination.
#[derive(Debug, Clone)]
pub struct ChartPresentation {
    pub ring: Arc<PolyRing>,
    pub raw: Ideal,
    pub simplified_ring: Arc<PolyRing>,
    pub simplified: Ideal,
}

fn u_name(base: &Arc<PolyRing>, j: usize) -> String {
    let name = format!("u{j}");
    assert!(
        base.var_index(&name).is_none(),
        "base ring already uses variable {name}"
    );
    name
}

/// The ambient ring k[x-vars, u_0..u_m] for a center with m+1
/// generators.
pub fn total_ring(base: &Arc<PolyRing>, center: &[Polynomial]) -> Arc<PolyRing> {
    let mut names: Vec<String> = (0..base.num_vars())
        .map(|i| base.var_name(i).to_string())
        .collect();
    let mut weights = base.weights().to_vec();
    for (j, f) in center.iter().enumerate() {
        names.push(u_name(base, j));
        let w = match f.weighted_degree() {
            (true, Some(d)) if d > 0 => d as u32,
            _ => 1,
        };
        weights.push(w);
    }
    PolyRing::new(names, weights).expect("total ring")
}

/// Defining ideal of Proj Sym of the center: one generator
/// sum_j s_j u_j per syzygy generator (s_0..s_m) of the center, all
/// linear in the u-variables.
pub fn symmetric_algebra_ideal(center: &Ideal) -> BlowupPresentation {
    let base = center.ring().clone();
    let gens = center.generators().to_vec();
    assert!(
        gens.iter().all(|g| !g.is_zero()),
        "center generators must be nonzero"
    );
    let total = total_ring(&base, &gens);
    let n = base.num_vars();
    let syz = syzygies(&gens, &DEFAULT_ORDER);
    let mut out = Vec::new();
    for s in &syz {
        let mut g = Polynomial::zero(&total);
        for (j, comp) in s.components.iter().enumerate() {
            let u = Polynomial::var(&total, n + j);
            g = &g + &(&comp.map_to_ring(&total).expect("x-variables") * &u);
        }
        if !g.is_zero() {
            out.push(g);
        }
    }
    BlowupPresentation {
        base_ring: base,
        total_ring: total.clone(),
        center: gens,
        sym_ideal: Ideal::new(&total, out),
    }
}

/// Defining ideal of the Rees algebra: the kernel of u_j -> t f_j,
/// computed by eliminating t from (u_0 - t f_0, ..., u_m - t f_m). It
/// always contains the symmetric-algebra ideal.
pub fn rees_ideal(center: &Ideal) -> Ideal {
    let base = center.ring().clone();
    let gens = center.generators().to_vec();
    let total = total_ring(&base, &gens);
    let mut names = vec!["t".to_string()];
    let mut weights = vec![1u32];
    assert!(
        total.var_index("t").is_none(),
        "variable t clashes with the ambient ring"
    );
    for i in 0..total.num_vars() {
        names.push(total.var_name(i).to_string());
        weights.push(total.weights()[i]);
    }
    let ext = PolyRing::new(names, weights).expect("extended ring");
    let t = Polynomial::var(&ext, 0);
    let n = base.num_vars();
    let mut work = Vec::new();
    for (j, f) in gens.iter().enumerate() {
        let u = Polynomial::var(&ext, 1 + n + j);
        work.push(&u - &(&t * &f.map_to_ring(&ext).expect("x-variables")));
    }
    let big = Ideal::new(&ext, work);
    let elim = big.eliminate(&BTreeSet::from([0]));
    let back: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| g.map_to_ring(&total).expect("ambient variables"))
        .collect();
    Ideal::new(&total, back)
}

/// Substitute u_j = 1 in an ideal of the total ring, landing in the
/// ring without u_j, then simplify the presentation. Returns both the
/// raw and the simplified presentation.
pub fn chart(b: &BlowupPresentation, ideal: &Ideal, j: usize) -> Result<ChartPresentation> {
    let total = &b.total_ring;
    let n = b.base_ring.num_vars();
    assert!(j < b.center.len(), "chart index out of range");
    let drop = n + j;
    let names: Vec<String> = (0..total.num_vars())
        .filter(|&i| i != drop)
        .map(|i| total.var_name(i).to_string())
        .collect();
    let weights: Vec<u32> = (0..total.num_vars())
        .filter(|&i| i != drop)
        .map(|i| total.weights()[i])
        .collect();
    let ring = PolyRing::new(names, weights)?;
    let mut assignment = BTreeMap::new();
    assignment.insert(total.var_name(drop).to_string(), Polynomial::one(&ring));
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.substitute(&ring, &assignment)?);
    }
    let raw = Ideal::new(&ring, gens);
    let (simplified_ring, simplified) = simplify_presentation(&raw);
    Ok(ChartPresentation {
        ring,
        raw,
        simplified_ring,
        simplified,
    })
}

/// Find a generator of the shape c*v + g with c a nonzero constant, v
/// a variable, and v absent from g. Scans variables in ring order,
/// then generators in order.
fn eliminable(ideal: &Ideal) -> Option<(usize, usize)> {
    let ring = ideal.ring();
    for v in 0..ring.num_vars() {
        let var_mon = crate::Monomial::var(ring.num_vars(), v);
        for (k, g) in ideal.generators().iter().enumerate() {
            let linear = !g.coeff_of(&var_mon).eq(&crate::poly::coeff_int(0));
            if !linear {
                continue;
            }
            let only_linear = g
                .terms()
                .all(|(m, _)| m.exponents()[v] == 0 || *m == var_mon);
            if only_linear {
                return Some((v, k));
            }
        }
    }
    None
}

/// Repeatedly eliminate variables through generators v - g with v
/// absent from g (an isomorphism of quotient rings), until no such
/// generator remains. Deterministic: first eligible variable in ring
/// order wins each round.
pub fn simplify_presentation(ideal: &Ideal) -> (Arc<PolyRing>, Ideal) {
    let mut ring = ideal.ring().clone();
    let mut gens = ideal.generators().to_vec();
    loop {
        let current = Ideal::new(&ring, gens.clone());
        let Some((v, k)) = eliminable(&current) else {
            return (ring, prune_redundant(&current));
        };
        gens = current.generators().to_vec();
        let g = gens.remove(k);
        let var_mon = crate::Monomial::var(ring.num_vars(), v);
        let c = g.coeff_of(&var_mon);
        // v = -(g - c v)/c
        let names: Vec<String> = (0..ring.num_vars())
            .filter(|&i| i != v)
            .map(|i| ring.var_name(i).to_string())
            .collect();
        let weights: Vec<u32> = (0..ring.num_vars())
            .filter(|&i| i != v)
            .map(|i| ring.weights()[i])
            .collect();
        let smaller = PolyRing::new(names, weights).expect("smaller ring");
        let rest = &g - &Polynomial::monomial(&ring, var_mon, c.clone());
        let image = rest
            .map_to_ring(&smaller)
            .expect("v is absent from the rest")
            .scale(&(-c.recip()));
        let mut assignment = BTreeMap::new();
        assignment.insert(ring.var_name(v).to_string(), image);
        gens = gens
            .iter()
            .map(|f| f.substitute(&smaller, &assignment).expect("substitution"))
            .collect();
        ring = smaller;
    }
}

/// Drop generators that already lie in the ideal of the remaining
/// ones, scanning in order. The result generates the same ideal.
fn prune_redundant(ideal: &Ideal) -> Ideal {
    let ring = ideal.ring();
    let mut kept = ideal.generators().to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut rest = kept.clone();
        let g = rest.remove(i);
        if Ideal::new(ring, rest).contains(&g, &crate::ideal::DEFAULT_ORDER) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ideal::new(ring, kept)
}

/// Strict transform of a hypersurface under the blow-up of the origin,
/// in the chart where the j-th coordinate generates the exceptional
/// divisor: substitute x_i = x_j v_i for i != j and divide out the
/// largest power of x_j.
#[derive(Debug, Clone)]
pub struct StrictTransform {
    pub chart_ring: Arc<PolyRing>,
    pub transform: Polynomial,
    /// Multiplicity of the exceptional divisor in the total transform.
    pub exceptional_multiplicity: u32,
    /// Set when the hypersurface does not pass through the origin, in
    /// which case the total transform is returned unfactored.
    pub total_only: bool,
}

pub fn strict_transform(hyp: &Polynomial, j: usize) -> Result<StrictTransform> {
    use num_traits::Zero;
    let ring = hyp.ring().clone();
    let n = ring.num_vars();
    if j >= n {
        return Err(Error::Invalid("chart index out of range".into()));
    }
    if hyp.is_zero() {
        return Err(Error::Invalid("zero hypersurface".into()));
    }
    let names: Vec<String> = (0..n)
        .map(|i| {
            if i == j {
                ring.var_name(i).to_string()
            } else {
                format!("v{}", i + 1)
            }
        })
        .collect();
    let chart_ring = PolyRing::new(names, vec![1; n])?;
    let xj = Polynomial::var(&chart_ring, j);
    let mut assignment = BTreeMap::new();
    for i in 0..n {
        if i != j {
            assignment.insert(
                ring.var_name(i).to_string(),
                &xj * &Polynomial::var(&chart_ring, i),
            );
        }
    }
    // x_j maps to itself: its name is shared between the rings
    let total = hyp.substitute(&chart_ring, &assignment)?;
    if !hyp.constant_term().is_zero() {
        return Ok(StrictTransform {
            chart_ring,
            transform: total,
            exceptional_multiplicity: 0,
            total_only: true,
        });
    }
    let k = total
        .terms()
        .map(|(m, _)| m.exponents()[j])
        .min()
        .unwrap_or(0);
    let divisor = crate::Monomial::var(n, j).pow(k);
    let transform = Polynomial::from_terms(
        &chart_ring,
        total
            .terms()
            .map(|(m, c)| (divisor.quotient_into(m), c.clone())),
    );
    Ok(StrictTransform {
        chart_ring,
        transform,
        exceptional_multiplicity: k,
        total_only: false,
    })
}

/// Search for positive variable weights (bounded by `max_weight`) that
/// make every generator weighted-homogeneous; on success the ideal is
/// transported into the re-weighted ring. Deterministic: first hit in
/// lexicographic weight order.
pub fn find_positive_weights(ideal: &Ideal, max_weight: u32) -> Option<Ideal> {
    let ring = ideal.ring().clone();
    let n = ring.num_vars();
    let mut used = vec![false; n];
    for g in ideal.generators() {
        for v in g.used_vars() {
            used[v] = true;
        }
    }
    let mut weights = vec![1u32; n];
    fn homogeneous_under(gens: &[Polynomial], weights: &[u32]) -> bool {
        gens.iter().all(|g| {
            let mut deg = None;
            g.terms().all(|(m, _)| {
                let d = m.weighted_degree(weights);
                match deg {
                    None => {
                        deg = Some(d);
                        true
                    }
                    Some(d0) => d0 == d,
                }
            })
        })
    }
    fn rec(
        pos: usize,
        used: &[bool],
        weights: &mut Vec<u32>,
        max_weight: u32,
        gens: &[Polynomial],
    ) -> bool {
        if pos == weights.len() {
            return homogeneous_under(gens, weights);
        }
        if !used[pos] {
            weights[pos] = 1;
            return rec(pos + 1, used, weights, max_weight, gens);
        }
        for w in 1..=max_weight {
            weights[pos] = w;
            if rec(pos + 1, used, weights, max_weight, gens) {
                return true;
            }
        }
        weights[pos] = 1;
        false
    }
    let gens = ideal.generators().to_vec();
    if !rec(0, &used, &mut weights, max_weight, &gens) {
        return None;
    }
    let names: Vec<String> = (0..n).map(|i| ring.var_name(i).to_string()).collect();
    let reweighted = PolyRing::new(names, weights).ok()?;
    let moved: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.map_to_ring(&reweighted).expect("same names"))
        .collect();
    Some(Ideal::new(&reweighted, moved))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: &Arc<PolyRing>, name: &str) -> Polynomial {
        Polynomial::var_named(r, name)
    }

    #[test]
    fn principal_center_has_no_relations() {
        let r = PolyRing::standard(vec!["x", "y"]);
        let f = &(&v(&r, "x") * &v(&r, "x")) - &v(&r, "y");
        let b = symmetric_algebra_ideal(&Ideal::new(&r, vec![f]));
        assert!(b.sym_ideal.is_zero_ideal());
        let c = chart(&b, &b.sym_ideal, 0).unwrap();
        assert!(c.simplified.is_zero_ideal());
    }

    #[test]
    fn plane_origin_blowup() {
        // center (x, y): one Koszul relation x u1 - y u0, and the
        // Rees ideal adds nothing (linear type)
        let r = PolyRing::standard(vec!["x", "y"]);
        let center = Ideal::new(&r, vec![v(&r, "x"), v(&r, "y")]);
        let b = symmetric_algebra_ideal(&center);
        let t = &b.total_ring;
        let expect = Ideal::new(
            t,
            vec![&(&v(t, "x") * &v(t, "u1")) - &(&v(t, "y") * &v(t, "u0"))],
        );
        assert!(b.sym_ideal.eq_ideal(&expect));
        let rees = rees_ideal(&center);
        assert!(rees.eq_ideal(&b.sym_ideal));
    }

    #[test]
    fn veronese_center_rees_gap() {
        // center (x1^2, x1 x2, x2^2): the Rees ideal strictly contains
        // the symmetric-algebra ideal, with witness u0 u2 - u1^2
        let r = PolyRing::standard(vec!["x1", "x2"]);
        let x1 = v(&r, "x1");
        let x2 = v(&r, "x2");
        let center = Ideal::new(&r, vec![&x1 * &x1, &x1 * &x2, &x2 * &x2]);
        let b = symmetric_algebra_ideal(&center);
        let rees = rees_ideal(&center);
        let t = &b.total_ring;
        let quad = &(&v(t, "u0") * &v(t, "u2")) - &(&v(t, "u1") * &v(t, "u1"));
        assert!(rees.contains(&quad, &DEFAULT_ORDER));
        assert!(rees.contains_ideal(&b.sym_ideal, &DEFAULT_ORDER));
        // here sym + (quad) = rees
        let mut gens = b.sym_ideal.generators().to_vec();
        gens.push(quad.clone());
        assert!(rees.eq_ideal(&Ideal::new(t, gens)));
        assert!(!b.sym_ideal.contains(&quad, &DEFAULT_ORDER));
    }

    #[test]
    fn simplify_chain_of_substitutions() {
        // (y - x^2, z - y) collapses to k[x] with no relations
        let r = PolyRing::standard(vec!["x", "y", "z"]);
        let g1 = &v(&r, "y") - &(&v(&r, "x") * &v(&r, "x"));
        let g2 = &v(&r, "z") - &v(&r, "y");
        let (ring, ideal) = simplify_presentation(&Ideal::new(&r, vec![g1, g2]));
        assert_eq!(ring.num_vars(), 1);
        assert_eq!(ring.var_name(0), "x");
        assert!(ideal.is_zero_ideal());
    }

    #[test]
    fn simplify_keeps_non_variable_relations() {
        // (x1 u1 - x2, x1 u2 - x2 u1): x2 is eliminable, giving
        // k[x1, u1, u2] / (x1 u2 - x1 u1^2)
        let r = PolyRing::standard(vec!["x1", "x2", "u1", "u2"]);
        let g1 = &(&v(&r, "x1") * &v(&r, "u1")) - &v(&r, "x2");
        let g2 = &(&v(&r, "x1") * &v(&r, "u2")) - &(&v(&r, "x2") * &v(&r, "u1"));
        let (ring, ideal) = simplify_presentation(&Ideal::new(&r, vec![g1, g2]));
        assert_eq!(ring.num_vars(), 3);
        let expect = &(&v(&ring, "x1") * &v(&ring, "u2"))
            - &(&v(&ring, "x1") * &(&v(&ring, "u1") * &v(&ring, "u1")));
        assert!(ideal.eq_ideal(&Ideal::new(&ring, vec![expect])));
    }

    #[test]
    fn simplify_drops_zero_generators() {
        let r = PolyRing::standard(vec!["x"]);
        let zero = &v(&r, "x") - &v(&r, "x");
        let (ring, ideal) = simplify_presentation(&Ideal::new(&r, vec![zero]));
        assert_eq!(ring.num_vars(), 1);
        assert!(ideal.is_zero_ideal());
    }

    #[test]
    fn cusp_strict_transform() {
        // y^2 - x^3 in the x-chart: y = x v2 gives x^2 (v2^2 - x)
        let r = PolyRing::standard(vec!["x", "y"]);
        let f = &(&v(&r, "y") * &v(&r, "y")) - &v(&r, "x").pow(3);
        let st = strict_transform(&f, 0).unwrap();
        assert!(!st.total_only);
        assert_eq!(st.exceptional_multiplicity, 2);
        let cr = &st.chart_ring;
        let expect = &(&v(cr, "v2") * &v(cr, "v2")) - &v(cr, "x");
        assert_eq!(st.transform, expect);
    }

    #[test]
    fn rank_three_quadric_transforms() {
        let r = PolyRing::standard(vec!["x1", "x2", "x3", "x4", "x5"]);
        let f = &(&v(&r, "x1") * &v(&r, "x1")) - &(&v(&r, "x2") * &v(&r, "x3"));
        // chart x2: v1^2 - v3
        let st2 = strict_transform(&f, 1).unwrap();
        let c2 = &st2.chart_ring;
        assert_eq!(
            st2.transform,
            &(&v(c2, "v1") * &v(c2, "v1")) - &v(c2, "v3")
        );
        // chart x4: v1^2 - v2 v3
        let st4 = strict_transform(&f, 3).unwrap();
        let c4 = &st4.chart_ring;
        assert_eq!(
            st4.transform,
            &(&v(c4, "v1") * &v(c4, "v1")) - &(&v(c4, "v2") * &v(c4, "v3"))
        );
        assert_eq!(st4.exceptional_multiplicity, 2);
    }

    #[test]
    fn missing_origin_is_flagged() {
        let r = PolyRing::standard(vec!["x", "y"]);
        let f = &(&v(&r, "x") * &v(&r, "y")) - &Polynomial::one(&r);
        let st = strict_transform(&f, 0).unwrap();
        assert!(st.total_only);
        assert_eq!(st.exceptional_multiplicity, 0);
    }

    #[test]
    fn weight_search() {
        // x1 u1 - x2 becomes homogeneous with weights (1, 2, 1)
        let r = PolyRing::standard(vec!["x1", "x2", "u1"]);
        let g = &(&v(&r, "x1") * &v(&r, "u1")) - &v(&r, "x2");
        let i = Ideal::new(&r, vec![g]);
        let w = find_positive_weights(&i, 4).expect("weights exist");
        assert!(w.generators()[0].is_homogeneous());
        assert_eq!(w.ring().weights(), &[1, 2, 1]);
        // x + x^2 can never be weighted-homogeneous
        let bad = Ideal::new(&r, vec![&v(&r, "x1") + &(&v(&r, "x1") * &v(&r, "x1"))]);
        assert!(find_positive_weights(&bad, 4).is_none());
    }
}
