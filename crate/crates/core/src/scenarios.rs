//! Seven scripted, self-checking computations around the blow-up of a
//! thickened point: fiber equations, Gorenstein charts,
//! component decomposition, curvilinear charts, colength identities,
//! normality of the blow-up component, and quadric-cone blow-up
//! charts. Each run returns a deterministic ScenarioReport.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::sync::Arc;

use serde::Serialize;

use crate::blowup::{
    chart, find_positive_weights, rees_ideal, simplify_presentation, strict_transform,
    symmetric_algebra_ideal,
};
use crate::hilbert::{
    binomial, fiber_hilbert_identity, quadric_h0_defect, thickened_point_closed_form,
};
use crate::ideal::{Ideal, DEFAULT_ORDER};
use crate::poly::{coeff_int, Coeff};
use crate::props::classify;
use crate::{PolyRing, Polynomial, Result};

/// One verified statement: an expected and an actual value rendered as
/// strings, a pass flag, and the source quote (or "derived-oracle")
/// the statement is anchored to.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Deterministic report for one scenario run. `timing_s` is filled
/// only for human-readable output and stays null in machine output so
/// repeated runs are byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub assumptions: Vec<String>,
    pub timing_s: Option<f64>,
    pub pass: bool,
}

impl ScenarioReport {
    fn new(scenario: &str, params: &[(&str, String)]) -> Self {
        ScenarioReport {
            scenario: scenario.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            checks: vec![],
            assumptions: vec![],
            timing_s: None,
            pass: true,
        }
    }

    fn check(&mut self, name: &str, anchor: &str, expected: impl Display, actual: impl Display) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.pass &= pass;
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            expected,
            actual,
            pass,
        });
    }

    fn assume(&mut self, note: &str) {
        self.assumptions.push(note.to_string());
    }
}

const ORACLE: &str = "derived-oracle";

fn var(r: &Arc<PolyRing>, name: &str) -> Polynomial {
    Polynomial::var_named(r, name)
}

/// The center (x1^2, x1 x2, x2^2, x3, ..., xn) in k[x1..xn]: the
/// length-3 non-curvilinear subscheme sitting inside a length-4 family.
pub fn noncurvilinear_center(n: usize) -> Ideal {
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

/// The published fiber equations over the non-curvilinear point, built
/// literally in the ambient ring k[x1..xn, u0..un]:
///
///   x1 u1 - x2 u0, x1 u2 - x2 u1,
///   x1^2 u_i - x_i u0, x1 x2 u_i - x_i u1, x2^2 u_i - x_i u2  (i >= 3)
///   x_i u_j - x_j u_i                                          (3 <= i < j)
pub fn fiber_equations_ideal(ring: &Arc<PolyRing>, n: usize) -> Ideal {
    let x = |i: usize| var(ring, &format!("x{i}"));
    let u = |j: usize| var(ring, &format!("u{j}"));
    let mut gens = vec![
        &(&x(1) * &u(1)) - &(&x(2) * &u(0)),
        &(&x(1) * &u(2)) - &(&x(2) * &u(1)),
    ];
    for i in 3..=n {
        gens.push(&(&(&x(1) * &x(1)) * &u(i)) - &(&x(i) * &u(0)));
        gens.push(&(&(&x(1) * &x(2)) * &u(i)) - &(&x(i) * &u(1)));
        gens.push(&(&(&x(2) * &x(2)) * &u(i)) - &(&x(i) * &u(2)));
    }
    for i in 3..=n {
        for j in (i + 1)..=n {
            gens.push(&(&x(i) * &u(j)) - &(&x(j) * &u(i)));
        }
    }
    Ideal::new(ring, gens)
}

/// S1: the published fiber equations coincide with the relation ideal
/// of Proj Sym of the center, by reduced-Groebner-basis equality.
pub fn s1_fiber_equations(n: usize) -> Result<ScenarioReport> {
    let mut report = ScenarioReport::new("s1_fiber_equations", &[("n", n.to_string())]);
    let center = noncurvilinear_center(n);
    let b = symmetric_algebra_ideal(&center);
    let published = fiber_equations_ideal(&b.total_ring, n);
    report.check(
        "published equations = Proj Sym relation ideal",
        "x_1u_1-x_2u_0, x_1u_2-x_2u_1, x_1^2u_i-x_iu_0, x_1x_2u_i-x_iu_1, \
         x_2^2u_i-x_iu_2, x_iu_j - x_ju_i",
        true,
        published.eq_ideal(&b.sym_ideal),
    );
    report.check(
        "relations are linear in the section variables",
        ORACLE,
        true,
        b.sym_ideal
            .generators()
            .iter()
            .all(|g| g.terms().all(|(m, _)| {
                m.exponents()[n..].iter().map(|&e| e as u64).sum::<u64>() <= 1
            })),
    );
    Ok(report)
}

/// The 6-variable 5-quadric presentation of the u_n-chart:
/// A = k[x1, x2, xn, u0, u1, u2] / (x1u1 - x2u0, x1u2 - x2u1,
/// x1^2 - xn u0, x1 x2 - xn u1, x2^2 - xn u2).
pub fn chart_ring_a() -> Ideal {
    let ring = PolyRing::standard(vec!["x1", "x2", "xn", "u0", "u1", "u2"]);
    let (x1, x2, xn) = (var(&ring, "x1"), var(&ring, "x2"), var(&ring, "xn"));
    let (u0, u1, u2) = (var(&ring, "u0"), var(&ring, "u1"), var(&ring, "u2"));
    Ideal::new(
        &ring,
        vec![
            &(&x1 * &u1) - &(&x2 * &u0),
            &(&x1 * &u2) - &(&x2 * &u1),
            &(&x1 * &x1) - &(&xn * &u0),
            &(&x1 * &x2) - &(&xn * &u1),
            &(&x2 * &x2) - &(&xn * &u2),
        ],
    )
}

/// S2: Gorenstein verdicts chart by chart: the u_n-chart ring A is
/// Gorenstein of dimension 3 with 5 quadrics in codimension 3, and the
/// u_0 / u_1 charts are complete intersections.
pub fn s2_gorenstein_charts(n: usize) -> Result<ScenarioReport> {
    assert!(n >= 3, "the u_n chart needs n >= 3");
    let mut report = ScenarioReport::new("s2_gorenstein_charts", &[("n", n.to_string())]);

    // the literal 6-variable chart presentation
    let a = chart_ring_a();
    let pa = classify(&a)?;
    report.check(
        "ring A is Gorenstein",
        "The ring A is Gorenstein by Macaulay2",
        true,
        pa.is_gorenstein == Some(true),
    );
    report.check("ring A dimension", ORACLE, 3, pa.dim);
    report.check("ring A codimension", ORACLE, 3, pa.codim);
    report.check("ring A type", ORACLE, 1, pa.cm_type.unwrap_or(0));
    report.check(
        "ring A is not a complete intersection (5 quadrics, codim 3)",
        ORACLE,
        false,
        pa.is_ci_presentation,
    );

    // the same chart reached through the blow-up presentation
    let center = noncurvilinear_center(n);
    let b = symmetric_algebra_ideal(&center);
    let cn = chart(&b, &b.sym_ideal, n)?;
    let a_in_chart: Vec<Polynomial> = {
        let r = &cn.simplified_ring;
        let (x1, x2, xn) = (var(r, "x1"), var(r, "x2"), var(r, &format!("x{n}")));
        let (u0, u1, u2) = (var(r, "u0"), var(r, "u1"), var(r, "u2"));
        vec![
            &(&x1 * &u1) - &(&x2 * &u0),
            &(&x1 * &u2) - &(&x2 * &u1),
            &(&x1 * &x1) - &(&xn * &u0),
            &(&x1 * &x2) - &(&xn * &u1),
            &(&x2 * &x2) - &(&xn * &u2),
        ]
    };
    report.check(
        "u_n chart = ring A times an affine cell",
        "isomorphic to the product of A^{n-3} with the spectrum of A",
        true,
        cn.simplified
            .eq_ideal(&Ideal::new(&cn.simplified_ring, a_in_chart)),
    );

    // chart u_0: after dropping the affine-cell directions the
    // presentation is the published pair of relations
    let u0_ring = PolyRing::new(vec!["x1", "x2", "u1", "u2"], vec![1, 2, 1, 2])?;
    let u0_ideal = Ideal::new(
        &u0_ring,
        vec![
            &(&var(&u0_ring, "x1") * &var(&u0_ring, "u1")) - &var(&u0_ring, "x2"),
            &(&var(&u0_ring, "x1") * &var(&u0_ring, "u2"))
                - &(&var(&u0_ring, "x2") * &var(&u0_ring, "u1")),
        ],
    );
    let p0 = classify(&u0_ideal)?;
    report.check(
        "u_0 chart is a complete intersection",
        "x_1u_1-x_2, x_1u_2-x_2u_1",
        true,
        p0.is_ci_presentation && p0.codim == 2,
    );
    report.check(
        "u_0 chart is Gorenstein",
        ORACLE,
        true,
        p0.is_gorenstein == Some(true),
    );

    // chart u_1: the published pair (not weightable, handled through
    // the complete-intersection shortcut)
    let u1_ring = PolyRing::standard(vec!["x1", "x2", "u0", "u2"]);
    let u1_ideal = Ideal::new(
        &u1_ring,
        vec![
            &var(&u1_ring, "x1") - &(&var(&u1_ring, "x2") * &var(&u1_ring, "u0")),
            &(&var(&u1_ring, "x1") * &var(&u1_ring, "u2")) - &var(&u1_ring, "x2"),
        ],
    );
    let p1 = classify(&u1_ideal)?;
    report.check(
        "u_1 chart is a complete intersection",
        "x_1-x_2u_0, x_1u_2-x_2",
        true,
        p1.is_ci_presentation && p1.codim == 2,
    );
    report.check(
        "u_1 chart is Gorenstein",
        ORACLE,
        true,
        p1.is_gorenstein == Some(true),
    );

    // Gorenstein verdicts on the charts reached through the blow-up,
    // after presentation simplification
    for j in [0usize, 1] {
        let c = chart(&b, &b.sym_ideal, j)?;
        let graded = find_positive_weights(&c.simplified, 4);
        let target = graded.as_ref().unwrap_or(&c.simplified);
        let p = classify(target)?;
        report.check(
            &format!("full u_{j} chart is Gorenstein"),
            ORACLE,
            true,
            p.is_gorenstein == Some(true),
        );
    }

    report.assume(
        "charts u_2 and u_3..u_{n-1} follow by the symmetry x1 <-> x2 and \
         permutation of the tail coordinates (symmetry-representative)",
    );
    Ok(report)
}

/// Evaluate a polynomial at a point given by (variable name, value)
/// pairs; unnamed variables are set to zero.
fn eval_at(g: &Polynomial, point: &BTreeMap<&str, i64>) -> Coeff {
    let ring = g.ring();
    let coords: Vec<Coeff> = (0..ring.num_vars())
        .map(|i| coeff_int(*point.get(ring.var_name(i)).unwrap_or(&0)))
        .collect();
    g.eval(&coords)
}

/// S3: decomposition of the fiber into the blow-up component (the
/// saturation of the fiber equations by the coordinate ideal) and the
/// section-space component, with dimension, radical-decomposition,
/// exceptional-quadric and inclusion checks.
pub fn s3_components(n: usize) -> Result<ScenarioReport> {
    assert!(n >= 2);
    let mut report = ScenarioReport::new("s3_components", &[("n", n.to_string())]);
    let center = noncurvilinear_center(n);
    let b = symmetric_algebra_ideal(&center);
    let ring = b.total_ring.clone();
    let fiber = fiber_equations_ideal(&ring, n);
    let x_all: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
    let coord = Ideal::new(&ring, x_all.clone());
    let (blowup_comp, _steps) = fiber.saturate(&coord)?;
    let section_comp = coord.clone();

    let u = |j: usize| var(&ring, &format!("u{j}"));
    let quad = &(&u(0) * &u(2)) - &(&u(1) * &u(1));

    report.check(
        "u0u2 - u1^2 vanishes on the blow-up component",
        "the relation u_0u_2-u_1^2 is satisfied",
        true,
        blowup_comp.contains(&quad, &DEFAULT_ORDER),
    );

    // affine cones over the two projective components: each has cone
    // dimension n+1, i.e. projective dimension n
    let dim_b = blowup_comp.krull_dim().unwrap_or(0);
    let dim_p = section_comp.krull_dim().unwrap_or(0);
    report.check(
        "blow-up component has dimension n (as a projective family)",
        "two components of the same dimension",
        n,
        dim_b.saturating_sub(1),
    );
    report.check(
        "section-space component has dimension n",
        "isomorphic to P^n",
        n,
        dim_p.saturating_sub(1),
    );

    // radical-level decomposition: V(fiber) = V(B) union V(P)
    let meet = blowup_comp.intersect(&section_comp)?;
    let fwd = meet
        .generators()
        .iter()
        .all(|g| fiber.radical_member(g));
    let bwd = fiber
        .generators()
        .iter()
        .all(|g| meet.radical_member(g));
    report.check(
        "fiber = blow-up component union section component (radical level)",
        "indeed has two components of the same dimension",
        true,
        fwd && bwd,
    );

    // the two components meet along the (possibly singular) quadric
    let mut sum_gens = blowup_comp.generators().to_vec();
    sum_gens.extend(section_comp.generators().iter().cloned());
    let sum = Ideal::new(&ring, sum_gens);
    let mut quad_gens = x_all.clone();
    quad_gens.push(quad.clone());
    let quad_ideal = Ideal::new(&ring, quad_gens);
    let same_locus = sum
        .generators()
        .iter()
        .all(|g| quad_ideal.radical_member(g))
        && quad_ideal
            .generators()
            .iter()
            .all(|g| sum.radical_member(g));
    report.check(
        "components meet along the quadric u0u2 = u1^2",
        "regarded as a (possibly singular) quadric Q",
        true,
        same_locus,
    );

    if n > 2 {
        // inclusions under the embedding x_{>=3} = u_{>=3} = 0
        let small_center = noncurvilinear_center(2);
        let small = symmetric_algebra_ideal(&small_center);
        let sring = small.total_ring.clone();
        let fiber2 = fiber_equations_ideal(&sring, 2);
        let coord2 = Ideal::new(
            &sring,
            vec![Polynomial::var(&sring, 0), Polynomial::var(&sring, 1)],
        );
        let (b2, _) = fiber2.saturate(&coord2)?;
        // restriction: set the tail coordinates to zero
        let mut zero_tail = BTreeMap::new();
        for i in 3..=n {
            zero_tail.insert(format!("x{i}"), Polynomial::zero(&sring));
            zero_tail.insert(format!("u{i}"), Polynomial::zero(&sring));
        }
        let restricted: Vec<Polynomial> = blowup_comp
            .generators()
            .iter()
            .map(|g| g.substitute(&sring, &zero_tail))
            .collect::<Result<_>>()?;
        let b2_contains = restricted.iter().all(|g| b2.radical_member(g));
        report.check(
            "small blow-up component embeds into the large one",
            "the inclusions B_2 \\subset B_n and P_2 \\subset P_n",
            true,
            b2_contains,
        );
        let restricted_p: Vec<Polynomial> = section_comp
            .generators()
            .iter()
            .map(|g| g.substitute(&sring, &zero_tail))
            .collect::<Result<_>>()?;
        let p2_contains = restricted_p
            .iter()
            .all(|g| coord2.radical_member(g));
        report.check(
            "small section component embeds into the large one",
            "the inclusions B_2 \\subset B_n and P_2 \\subset P_n",
            true,
            p2_contains,
        );
    }

    // witness points for the two non-inclusions
    let small_center = noncurvilinear_center(2);
    let small = symmetric_algebra_ideal(&small_center);
    let sring = small.total_ring.clone();
    let fiber2 = fiber_equations_ideal(&sring, 2);
    let coord2 = Ideal::new(
        &sring,
        vec![Polynomial::var(&sring, 0), Polynomial::var(&sring, 1)],
    );
    let (b2, _) = fiber2.saturate(&coord2)?;

    // (x1, u0) = (1, 1): on the small blow-up component, but x1 != 0
    let w1: BTreeMap<&str, i64> = BTreeMap::from([("x1", 1), ("u0", 1)]);
    let on_b2 = b2.generators().iter().all(|g| {
        use num_traits::Zero;
        eval_at(g, &w1).is_zero()
    });
    let off_p = {
        use num_traits::Zero;
        !eval_at(&Polynomial::var(&ring, 0), &w1).is_zero()
    };
    report.check(
        "witness point on B_2 but off the section component",
        "B_2 \\not\\subset P_n",
        true,
        on_b2 && off_p,
    );

    // (u0, u2) = (1, 1), all x zero: on the section component, but
    // u0u2 - u1^2 = 1 there, so off the blow-up component
    let w2: BTreeMap<&str, i64> = BTreeMap::from([("u0", 1), ("u2", 1)]);
    let on_p = true; // all coordinates x_i vanish by construction
    let off_b = {
        use num_traits::One;
        eval_at(&quad, &w2).is_one()
    };
    report.check(
        "witness point on P_2 but off the blow-up component",
        "P_2 \\not\\subset B_n",
        true,
        on_p && off_b,
    );

    report.assume(
        "component decomposition is certified at radical level; exact ideal \
         equality of the intersection with the fiber ideal is reported by the \
         radical checks above, not assumed",
    );
    report.assume("projective dimensions are reported as cone dimension minus one");
    Ok(report)
}

/// The fiber equations over a curvilinear point of length l, in
/// k[x1..xn, u1..un]: x1^l u_j - x_j u_1 (j >= 2) and
/// x_i u_j - x_j u_i (2 <= i < j).
pub fn curvilinear_fiber_ideal(n: usize, l: u32) -> Ideal {
    assert!(n >= 2 && l >= 1);
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|j| format!("u{j}")));
    let ring = PolyRing::new(names, vec![1; 2 * n]).expect("ring");
    let x = |i: usize| var(&ring, &format!("x{i}"));
    let u = |j: usize| var(&ring, &format!("u{j}"));
    let mut gens = Vec::new();
    for j in 2..=n {
        gens.push(&(&x(1).pow(l) * &u(j)) - &(&x(j) * &u(1)));
    }
    for i in 2..=n {
        for j in (i + 1)..=n {
            gens.push(&(&x(i) * &u(j)) - &(&x(j) * &u(i)));
        }
    }
    Ideal::new(&ring, gens)
}

/// Substitute u_j = 1 in an ideal living in k[x1..xn, u1..un] and
/// simplify the resulting presentation.
fn curvilinear_chart(ideal: &Ideal, n: usize, j: usize) -> Result<(Arc<PolyRing>, Ideal)> {
    let ring = ideal.ring();
    let uname = format!("u{j}");
    let names: Vec<String> = (0..ring.num_vars())
        .map(|i| ring.var_name(i).to_string())
        .filter(|nm| *nm != uname)
        .collect();
    let weights = vec![1; 2 * n - 1];
    let target = PolyRing::new(names, weights)?;
    let mut assignment = BTreeMap::new();
    assignment.insert(uname, Polynomial::one(&target));
    let gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&target, &assignment))
        .collect::<Result<_>>()?;
    let raw = Ideal::new(&target, gens);
    Ok(simplify_presentation(&raw))
}

/// S4: the fiber over a curvilinear point. Chart u_1 is a smooth
/// affine cell; chart u_2 simplifies to the hypersurface
/// x1^l - x2 u1, which is Gorenstein and normal.
pub fn s4_curvilinear(n: usize, l: u32) -> Result<ScenarioReport> {
    assert!(n >= 2 && l >= 2);
    let mut report = ScenarioReport::new(
        "s4_curvilinear",
        &[("n", n.to_string()), ("l", l.to_string())],
    );
    let fiber = curvilinear_fiber_ideal(n, l);

    let (r1, c1) = curvilinear_chart(&fiber, n, 1)?;
    report.check(
        "chart u_1 simplifies to an affine cell",
        "This locus is nonsingular",
        true,
        c1.is_zero_ideal(),
    );
    let p1 = classify(&c1)?;
    report.check(
        "chart u_1 is smooth",
        "This locus is nonsingular",
        true,
        p1.smooth.is_smooth(),
    );
    report.check("chart u_1 dimension", ORACLE, n, p1.dim);
    drop(r1);

    let (r2, c2) = curvilinear_chart(&fiber, n, 2)?;
    let hyp = &var(&r2, "x1").pow(l) - &(&var(&r2, "x2") * &var(&r2, "u1"));
    report.check(
        "chart u_2 simplifies to the hypersurface x1^l - x2 u1",
        "Spec C[x_1, x_2, u_1]/(x_1^{l} -x_2u_1)",
        true,
        c2.eq_ideal(&Ideal::new(&r2, vec![hyp])),
    );
    let graded = find_positive_weights(&c2, 4).expect("x1^l - x2 u1 is weightable");
    let p2 = classify(&graded)?;
    report.check(
        "chart u_2 is Gorenstein (hypersurface)",
        ORACLE,
        true,
        p2.is_gorenstein == Some(true),
    );
    report.check(
        "chart u_2 is normal",
        ORACLE,
        "normal",
        p2.normal.label(),
    );
    if l >= 2 {
        report.check(
            "chart u_2 singular locus has codimension 2",
            ORACLE,
            true,
            match &p2.smooth {
                crate::props::SmoothVerdict::Singular(locus) => {
                    let locus_dim = locus.krull_dim().unwrap_or(0);
                    p2.dim == locus_dim + 2
                }
                crate::props::SmoothVerdict::Smooth => l == 1,
                crate::props::SmoothVerdict::Unknown => false,
            },
        );
    }
    report.assume(
        "charts u_j for j > 2 follow from the u_2 case by permuting the \
         coordinates x_2..x_n (symmetry-representative)",
    );
    Ok(report)
}

/// S5: colengths of powers of the thickened-point ideal match the
/// closed form 3 C(n+l-1, n) + C(n+l-2, n), the hockey-stick identity,
/// the quadric section defect, and the cancelled section-count
/// identity, for every l in range.
pub fn s5_hilbert_identity(n: u64, lmax: u64) -> Result<ScenarioReport> {
    assert!(n >= 2 && lmax >= 1);
    let mut report = ScenarioReport::new(
        "s5_hilbert_identity",
        &[("n", n.to_string()), ("l_max", lmax.to_string())],
    );
    let lines = fiber_hilbert_identity(n, 1, lmax)?;
    for line in &lines {
        report.check(
            &format!("len R/J^{} equals the closed form", line.l),
            "3{n+\\ell - 1 \\choose n} + {n + \\ell-2 \\choose n}",
            &line.closed_form,
            &line.colength,
        );
    }
    let hockey_ok = lines.iter().all(|l| l.hockey_lhs == l.hockey_rhs);
    report.check(
        "hockey-stick identity for all l",
        ORACLE,
        true,
        hockey_ok,
    );
    let cancel_ok = lines.iter().all(|l| l.cancel_lhs == l.cancel_rhs);
    report.check(
        "section counts agree after cancelling the common ambient term",
        "the two expressions for the section count coincide",
        true,
        cancel_ok,
    );
    let defect_ok = (2..=lmax).all(|l| {
        // h0(P^n, O(l)) - h0(Q, O(l)) with h0(Q) from the twisted
        // structure sequence of the quadric
        let h0_pn = binomial(n + l, n);
        let h0_q = &h0_pn - binomial(n + l - 2, n);
        h0_pn - h0_q == quadric_h0_defect(n, l)
    });
    report.check(
        "quadric section defect equals C(n+l-2, n)",
        "{n+\\ell-2 \\choose \\ell - 2}",
        true,
        defect_ok,
    );
    // telescoping consistency on the smallest case in range
    report.check(
        "closed form at l = 1 is the length of the thickened point",
        ORACLE,
        3,
        thickened_point_closed_form(n, 1),
    );
    Ok(report)
}

/// S6: the blow-up component for n = 3: its defining ideal (the Rees
/// ideal of the center) is Cohen-Macaulay with depth = dim = 3 as a
/// projective variety, normal by Serre's criterion, and satisfies
/// u0u2 = u1^2.
pub fn s6_blowup_component_normal(n: usize) -> Result<ScenarioReport> {
    let mut report =
        ScenarioReport::new("s6_blowup_component_normal", &[("n", n.to_string())]);
    let center = noncurvilinear_center(n);
    let rees = rees_ideal(&center);
    let ring = rees.ring().clone();
    let u = |j: usize| var(&ring, &format!("u{j}"));
    let quad = &(&u(0) * &u(2)) - &(&u(1) * &u(1));
    report.check(
        "u0u2 - u1^2 lies in the component ideal",
        "the relation u_0u_2-u_1^2 is satisfied",
        true,
        rees.contains(&quad, &DEFAULT_ORDER),
    );
    let p = classify(&rees)?;
    report.check(
        "component dimension (projective)",
        ORACLE,
        n,
        p.dim.saturating_sub(1),
    );
    report.check(
        "depth equals dimension (Cohen-Macaulay)",
        "we compute the depth of blow-up component B_n",
        n,
        p.depth.map(|d| d.saturating_sub(1)).unwrap_or(0),
    );
    report.check(
        "component is Cohen-Macaulay",
        ORACLE,
        true,
        p.is_cm == Some(true),
    );
    report.check(
        "component is normal",
        "check that it is normal",
        "normal",
        p.normal.label(),
    );
    if let Some(b) = &p.betti {
        report.check(
            "resolution starts from one generator column block",
            ORACLE,
            1,
            b.total(0),
        );
    }
    report.assume(
        "the component ideal is weighted-homogeneous, so depth and normality \
         of the affine cone descend to the projective component; projective \
         numbers are cone numbers minus one",
    );
    Ok(report)
}

/// S7: blow-up of the rank-3 quadric cone x1^2 = x2 x3 at the origin
/// in n-space: for n = 3 every chart is smooth; for n >= 4 every chart
/// is a hypersurface, Gorenstein and normal with singular locus of
/// codimension at least 2.
pub fn s7_quadric_cone_blowup(n: usize) -> Result<ScenarioReport> {
    assert!(n >= 3);
    let mut report =
        ScenarioReport::new("s7_quadric_cone_blowup", &[("n", n.to_string())]);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(names, vec![1; n])?;
    let f = &(&Polynomial::var(&ring, 0) * &Polynomial::var(&ring, 0))
        - &(&Polynomial::var(&ring, 1) * &Polynomial::var(&ring, 2));
    for j in 0..n {
        let st = strict_transform(&f, j)?;
        report.check(
            &format!("chart x{} total transform factors exactly", j + 1),
            ORACLE,
            true,
            !st.total_only && st.exceptional_multiplicity == 2,
        );
        let chart_ideal = Ideal::new(&st.chart_ring, vec![st.transform.clone()]);
        let graded = find_positive_weights(&chart_ideal, 4);
        let target = graded.as_ref().unwrap_or(&chart_ideal);
        let p = classify(target)?;
        if n == 3 {
            report.check(
                &format!("chart x{} is smooth", j + 1),
                "Bl_o V(f) is isomorphic to the total space of O(-1)",
                "smooth",
                p.smooth.label(),
            );
        } else {
            report.check(
                &format!("chart x{} is a Gorenstein hypersurface", j + 1),
                "at worst canonical Gorenstein singularities",
                true,
                p.codim == 1 && p.is_gorenstein == Some(true),
            );
            report.check(
                &format!("chart x{} is normal", j + 1),
                ORACLE,
                "normal",
                p.normal.label(),
            );
            let codim_ok = match &p.smooth {
                crate::props::SmoothVerdict::Smooth => true,
                crate::props::SmoothVerdict::Singular(locus) => {
                    let ld = locus.krull_dim().unwrap_or(0);
                    p.dim >= ld + 2
                }
                crate::props::SmoothVerdict::Unknown => false,
            };
            report.check(
                &format!("chart x{} singular locus has codimension >= 2", j + 1),
                ORACLE,
                true,
                codim_ok,
            );
        }
    }
    report.assume(
        "the canonicity of the singularities is a cited vanishing statement; \
         this scenario certifies its computational inputs (Gorenstein, normal, \
         small singular locus) only",
    );
    Ok(report)
}
