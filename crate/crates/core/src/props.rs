//! One-call classification of a quotient ring R/I: dimension,
//! codimension, depth, Cohen-Macaulay type, Gorenstein and
//! complete-intersection flags, Jacobian smoothness, and normality via
//! Serre's criterion.

use std::collections::BTreeMap;

use crate::ideal::{minors_ideal, Ideal};
use crate::resolution::{free_resolution, minimal_ideal_generators, BettiTable};
use crate::{Error, Polynomial, Result};

#[derive(Debug, Clone)]
pub enum SmoothVerdict {
    Smooth,
    /// Witness: the singular-locus ideal (not the unit ideal).
    Singular(Ideal),
    Unknown,
}

impl SmoothVerdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothVerdict::Smooth)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SmoothVerdict::Smooth => "smooth",
            SmoothVerdict::Singular(_) => "singular",
            SmoothVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalVerdict {
    Normal,
    NotNormal(String),
    Unknown,
}

impl NormalVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, NormalVerdict::Normal)
    }

    pub fn label(&self) -> &'static str {
        match self {
            NormalVerdict::Normal => "normal",
            NormalVerdict::NotNormal(_) => "not normal",
            NormalVerdict::Unknown => "unknown",
        }
    }
}

/// Classification bundle for R/I. Homological fields are None when
/// the input is inhomogeneous and no structural shortcut (complete
/// intersection) applies.
#[derive(Debug, Clone)]
pub struct RingProps {
    pub dim: usize,
    pub codim: usize,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub is_cm: Option<bool>,
    pub cm_type: Option<usize>,
    pub is_gorenstein: Option<bool>,
    pub is_ci_presentation: bool,
    pub smooth: SmoothVerdict,
    pub normal: NormalVerdict,
    pub betti: Option<BettiTable>,
}

/// Jacobian matrix of the generators: one row per generator, one
/// column per variable.
pub fn jacobian(ideal: &Ideal) -> Vec<Vec<Polynomial>> {
    let n = ideal.ring().num_vars();
    ideal
        .generators()
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v)).collect())
        .collect()
}

/// I plus all c x c minors of the Jacobian of its generators, where c
/// is the (caller-supplied) codimension. On an equidimensional V(I)
/// this cuts out the singular locus.
pub fn singular_locus(ideal: &Ideal, c: usize) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    if c == 0 {
        // codimension 0: nothing to impose, the locus is empty
        return Ok(Ideal::new(&ring, vec![Polynomial::one(&ring)]));
    }
    let gens = ideal.generators().len();
    let n = ring.num_vars();
    if c > gens.min(n) {
        return Err(Error::Invalid(format!(
            "codimension {c} exceeds the {gens}x{n} Jacobian"
        )));
    }
    let jac = jacobian(ideal);
    let minors = minors_ideal(&jac, c, &ring);
    let mut all = ideal.generators().to_vec();
    all.extend(minors.generators().iter().cloned());
    Ok(Ideal::new(&ring, all))
}

/// Jacobian smoothness of V(I), assuming equidimensionality of the
/// supplied codimension.
pub fn is_smooth(ideal: &Ideal, codim: usize) -> SmoothVerdict {
    match singular_locus(ideal, codim) {
        Err(_) => SmoothVerdict::Unknown,
        Ok(locus) => {
            if locus.is_trivial() {
                SmoothVerdict::Smooth
            } else {
                SmoothVerdict::Singular(locus)
            }
        }
    }
}

/// Graded Betti table of the Koszul complex on a regular sequence with
/// the given generator degrees: step i collects all i-subset degree
/// sums.
fn koszul_betti(degrees: &[i64]) -> BettiTable {
    let c = degrees.len();
    let mut entries: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for mask in 0u64..(1u64 << c) {
        let i = mask.count_ones() as usize;
        let d: i64 = (0..c).filter(|&k| mask >> k & 1 == 1).map(|k| degrees[k]).sum();
        *entries.entry((i, d)).or_insert(0) += 1;
    }
    BettiTable { entries }
}

/// Full classification. The unit ideal is rejected; inhomogeneous
/// input gets dimension, smoothness and the complete-intersection
/// shortcut only, with the homological fields left unknown.
pub fn classify(ideal: &Ideal) -> Result<RingProps> {
    if ideal.is_trivial() {
        return Err(Error::EmptyScheme);
    }
    let n = ideal.ring().num_vars();
    let dim = ideal.krull_dim().expect("proper ideal has a dimension");
    let codim = n - dim;
    let homogeneous = ideal.generators().iter().all(|g| g.is_homogeneous());

    let min_gen_count = if homogeneous {
        minimal_ideal_generators(ideal)?.len()
    } else {
        ideal.generators().len()
    };
    let is_ci = min_gen_count == codim;

    let smooth = is_smooth(ideal, codim);

    let (pd, depth, is_cm, cm_type, is_gorenstein, betti);
    if is_ci && homogeneous {
        // Koszul resolution of a regular sequence: everything in
        // closed form, no syzygy computation needed
        let degrees: Vec<i64> = minimal_ideal_generators(ideal)?
            .iter()
            .map(|g| g.weighted_degree().1.unwrap() as i64)
            .collect();
        let table = koszul_betti(&degrees);
        pd = Some(codim);
        depth = Some(dim);
        is_cm = Some(true);
        cm_type = Some(1);
        is_gorenstein = Some(true);
        betti = Some(table);
    } else if is_ci {
        // inhomogeneous complete intersection: Cohen-Macaulay and
        // Gorenstein hold locally, but no graded resolution exists
        pd = None;
        depth = None;
        is_cm = Some(true);
        cm_type = Some(1);
        is_gorenstein = Some(true);
        betti = None;
    } else if homogeneous {
        let res = free_resolution(ideal)?;
        let table = res.betti();
        let t = table.total(res.pd());
        pd = Some(res.pd());
        depth = Some(res.depth());
        is_cm = Some(res.depth() == dim);
        cm_type = Some(t);
        is_gorenstein = Some(res.depth() == dim && t == 1);
        betti = Some(table);
    } else {
        pd = None;
        depth = None;
        is_cm = None;
        cm_type = None;
        is_gorenstein = None;
        betti = None;
    }

    let normal = normal_verdict(dim, &smooth, is_cm, is_ci, min_gen_count);

    Ok(RingProps {
        dim,
        codim,
        pd,
        depth,
        is_cm,
        cm_type,
        is_gorenstein,
        is_ci_presentation: is_ci,
        smooth,
        normal,
        betti,
    })
}

/// Serre's criterion: normal iff S2 and R1. S2 is certified by
/// Cohen-Macaulayness, a complete-intersection presentation, or a
/// hypersurface; R1 by the singular locus having codimension >= 2
/// inside V(I). Without an S2 certificate the verdict is unknown.
fn normal_verdict(
    dim: usize,
    smooth: &SmoothVerdict,
    is_cm: Option<bool>,
    is_ci: bool,
    gen_count: usize,
) -> NormalVerdict {
    if smooth.is_smooth() {
        return NormalVerdict::Normal;
    }
    let s2 = is_cm == Some(true) || is_ci || gen_count == 1;
    if !s2 {
        return NormalVerdict::Unknown;
    }
    let locus = match smooth {
        SmoothVerdict::Singular(l) => l.clone(),
        _ => return NormalVerdict::Unknown,
    };
    match locus.krull_dim() {
        None => NormalVerdict::Normal, // empty locus
        Some(locus_dim) => {
            if dim >= locus_dim + 2 {
                NormalVerdict::Normal
            } else {
                NormalVerdict::NotNormal(format!(
                    "singular locus has dimension {locus_dim} inside a \
                     variety of dimension {dim} (codimension {})",
                    dim - locus_dim
                ))
            }
        }
    }
}

/// Check that the normal verdict for R/I says "normal".
pub fn is_normal_serre(ideal: &Ideal) -> Result<NormalVerdict> {
    Ok(classify(ideal)?.normal)
}
