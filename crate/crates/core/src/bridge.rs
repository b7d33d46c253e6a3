//! From codes to designs and back: support designs, the perfect-code design
//! criteria, Assmus-Mattson, projective-plane codes, and Todd's lemma.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::code::{LinearCode, WordSet};
use crate::combinatorics::{binomial, for_each_combination};
use crate::constructions::catalog_design;
use crate::design::{incidence_matrix, verify_t_design, Design, DesignParams, VerificationResult, DEFAULT_SUBSET_BUDGET};
use crate::enumerators::{macwilliams, weight_distribution, WeightDistribution};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub use crate::code::support;

/// Cap on `b * C(k, t)` block-side work when confirming a certified design.
pub const VERIFY_WORK: u128 = 1_000_000_000;

/// Distinct supports of the weight-`w` codewords, as a design on `n` points.
pub fn design_from_code(c: &LinearCode, w: usize, budget: u128) -> Result<Design> {
    if w == 0 {
        return Err(Error::InvalidDesign("the zero word has empty support".into()));
    }
    if w > c.n() {
        return Err(Error::OutOfRange { pos: w, n: c.n() });
    }
    let supports = c.supports_of_weight(w, budget)?;
    if supports.is_empty() {
        return Err(Error::EmptyWeightClass(w));
    }
    Design::new(c.n(), supports)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectDesignReport {
    pub d: usize,
    pub e: usize,
    pub perfect: bool,
    /// `(e+1)-(n, d, (q-1)^e)`.
    pub expected: DesignParams,
    pub found: VerificationResult,
    /// The minimum-weight supports form exactly the expected design.
    pub holds: bool,
    /// For perfect binary codes: the expected `(e+2)-(n+1, d+1, 1)` design of the
    /// extended code and its verification.
    pub extension: Option<(DesignParams, VerificationResult)>,
}

impl PerfectDesignReport {
    /// Perfect exactly when the supports form the expected design.
    pub fn consistent(&self) -> bool {
        self.perfect == self.holds && self.extension.as_ref().is_none_or(|(_, v)| v.is_design && v.lambda == Some(1))
    }

    pub fn lambdas(&self) -> Vec<u64> {
        let ext = self.extension.as_ref().and_then(|(_, v)| v.lambda);
        self.found.lambda.into_iter().chain(ext).collect()
    }
}

pub fn perfect_design_check(c: &LinearCode, budget: u128) -> Result<PerfectDesignReport> {
    let wd = weight_distribution(c, budget)?;
    let d = wd.min_weight().ok_or(Error::ZeroCode)?;
    if d % 2 == 0 {
        return Err(Error::NotOddDistance(d));
    }
    let (n, q) = (c.n(), c.q());
    let e = (d - 1) / 2;
    let perfect = crate::enumerators::perfectness_from(n, c.k(), q, d).perfect;
    let lambda = ((q - 1) as u64).pow(e as u32);
    let expected = DesignParams { t: e + 1, v: n, k: d, lambda };
    let design = design_from_code(c, d, budget)?;
    let found = verify_t_design(&design, e + 1, DEFAULT_SUBSET_BUDGET)?;
    let holds = found.lambda == Some(lambda);
    let extension = if perfect && q == 2 {
        let ext = design_from_code(&c.extend(), d + 1, budget)?;
        let params = DesignParams { t: e + 2, v: n + 1, k: d + 1, lambda: 1 };
        Some((params, verify_t_design(&ext, e + 2, DEFAULT_SUBSET_BUDGET)?))
    } else {
        None
    };
    Ok(PerfectDesignReport { d, e, perfect, expected, found, holds, extension })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmCheck {
    Verified { blocks: usize, lambda: u64 },
    Failed { blocks: usize, witness: Option<(Vec<u32>, u64)> },
    /// Too large to confirm by counting.
    TheoremOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmWeight {
    pub weight: usize,
    pub check: AmCheck,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmReport {
    pub t: usize,
    pub d: usize,
    pub e: usize,
    pub n0: usize,
    pub m0: usize,
    /// Nonzero dual weights at most `n - t`.
    pub dual_weight_count: usize,
    pub code_weights: Vec<AmWeight>,
    pub dual_weights: Vec<AmWeight>,
}

impl AmReport {
    pub fn all_confirmed(&self) -> bool {
        self.code_weights.iter().chain(&self.dual_weights).all(|w| !matches!(w.check, AmCheck::Failed { .. }))
    }

    pub fn weights(&self) -> Vec<usize> {
        self.code_weights.iter().map(|w| w.weight).collect()
    }
}

/// Largest `x` with `x - floor((x + q - 2)/(q - 1)) < d`; `n` when `q = 2`.
pub fn weight_cap(n: usize, q: usize, d: usize) -> usize {
    if q == 2 {
        return n;
    }
    let f = |x: usize| x - (x + q - 2) / (q - 1);
    let mut x = 0;
    while f(x + 1) < d {
        x += 1;
    }
    x
}

fn dual_count(dual: &WeightDistribution, n: usize, t: usize) -> usize {
    (1..=n - t).filter(|&w| dual.get(w) > 0).count()
}

/// The largest `t < d` meeting the hypothesis, from the two distributions.
pub fn largest_am_strength(wd: &WeightDistribution, dual: &WeightDistribution) -> Option<usize> {
    let n = wd.n();
    let d = wd.min_weight()?;
    (1..d).rev().find(|&t| dual_count(dual, n, t) <= d - t)
}

fn confirm(c: &LinearCode, w: usize, count: u128, t: usize, budget: u128) -> Result<AmCheck> {
    let supports = count / (c.q() as u128 - 1);
    let work = supports.saturating_mul(binomial(w, t));
    if binomial(c.n(), t) > DEFAULT_SUBSET_BUDGET || work > VERIFY_WORK || c.size() > budget {
        return Ok(AmCheck::TheoremOnly);
    }
    let design = design_from_code(c, w, budget)?;
    let r = verify_t_design(&design, t, DEFAULT_SUBSET_BUDGET)?;
    Ok(match r.lambda {
        Some(lambda) => AmCheck::Verified { blocks: design.b(), lambda },
        None => AmCheck::Failed { blocks: design.b(), witness: r.witness },
    })
}

/// Certifies t-designs from the weight distributions of `c` and its dual, then
/// confirms each by counting when it fits the budgets. The full-length weight `n`
/// (a single block equal to the point set) is left out.
pub fn assmus_mattson(c: &LinearCode, t: usize, budget: u128) -> Result<AmReport> {
    let (n, q, k) = (c.n(), c.q(), c.k());
    if k == n {
        return Err(Error::ZeroDual);
    }
    let wd = weight_distribution(c, budget)?;
    let dual_wd = macwilliams(&wd, n, k, q)?;
    let d = wd.min_weight().ok_or(Error::ZeroCode)?;
    let e = dual_wd.min_weight().ok_or(Error::ZeroDual)?;
    if t == 0 || t >= d {
        return Err(Error::BadStrength { t, d });
    }
    let count = dual_count(&dual_wd, n, t);
    if count > d - t {
        return Err(Error::HypothesisFails { count, allowed: d - t });
    }
    let (n0, m0) = (weight_cap(n, q, d), weight_cap(n, q, e));
    let code_weights = (d..=n0.min(n - 1))
        .filter(|&v| wd.get(v) > 0)
        .map(|v| Ok(AmWeight { weight: v, check: confirm(c, v, wd.get(v), t, budget)? }))
        .collect::<Result<Vec<_>>>()?;
    let dual_list: Vec<usize> = (e..=m0.min(n - t)).filter(|&w| dual_wd.get(w) > 0).collect();
    let dual_weights = if dual_list.is_empty() {
        Vec::new()
    } else {
        let dual = c.dual()?;
        dual_list
            .into_iter()
            .map(|w| Ok(AmWeight { weight: w, check: confirm(&dual, w, dual_wd.get(w), t, budget)? }))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(AmReport { t, d, e, n0, m0, dual_weight_count: count, code_weights, dual_weights })
}

/// Row space of the incidence matrix over `field`.
pub fn code_from_design(d: &Design, field: &Field) -> Result<LinearCode> {
    LinearCode::from_rows(&incidence_matrix(d, field))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCodeReport {
    pub n: usize,
    pub dim: usize,
    /// `(n^2 + n + 2)/2` when `n = 2 (mod 4)`.
    pub expected_dim: Option<usize>,
    pub min_wt: usize,
    pub lines_as_min_words: bool,
    /// Exhaustive count of `(n+2)`-sets with no three points collinear, for even `n <= 4`.
    pub hyperoval_count: Option<u64>,
    pub weight_np2_count: u128,
    pub extended_self_dual: bool,
    /// Odd order: the code is just the even-weight code.
    pub odd_fallback: bool,
}

impl PlaneCodeReport {
    /// Every claim that applies to this order holds.
    pub fn consistent(&self) -> bool {
        if self.odd_fallback {
            return self.expected_dim.is_none_or(|d| d == self.dim);
        }
        let dim_ok = self.expected_dim.is_none_or(|d| d == self.dim);
        let ovals_ok = match (self.n % 4, self.hyperoval_count) {
            (2, Some(h)) => h as u128 == self.weight_np2_count,
            _ => true,
        };
        dim_ok && ovals_ok && self.lines_as_min_words && self.min_wt == self.n + 1
    }
}

fn hyperovals(plane: &Design, n: usize) -> u64 {
    let v = plane.v();
    let mut line_of = vec![vec![usize::MAX; v]; v];
    for (i, b) in plane.blocks().iter().enumerate() {
        for &x in b {
            for &y in b {
                line_of[x as usize][y as usize] = i;
            }
        }
    }
    let mut count = 0;
    for_each_combination(v, n + 2, |set| {
        let mut seen = HashSet::new();
        let ok = (0..set.len()).all(|i| (i + 1..set.len()).all(|j| seen.insert(line_of[set[i]][set[j]])));
        // no line meets the set in three points iff all C(n+2, 2) pairs lie on distinct lines
        if ok {
            count += 1;
        }
    });
    count
}

pub fn plane_code_analysis(n: usize, plane: &Design, budget: u128) -> Result<PlaneCodeReport> {
    let v = n * n + n + 1;
    if n < 2 || plane.v() != v || plane.k() != n + 1 {
        return Err(Error::NotAPlane(format!("expected 2-({v},{},1), got v = {}, k = {}", n + 1, plane.v(), plane.k())));
    }
    if verify_t_design(plane, 2, DEFAULT_SUBSET_BUDGET)?.lambda != Some(1) {
        return Err(Error::NotAPlane("some pair of points is not on exactly one line".into()));
    }
    let f2 = Field::new(2).unwrap();
    let code = code_from_design(plane, &f2)?;
    let dim = code.k();
    let expected_dim = (n % 4 == 2).then_some((n * n + n + 2) / 2);
    if n % 2 == 1 {
        let even = code.rows().iter().all(|r| r.iter().filter(|&&x| x == 1).count() % 2 == 0);
        return Ok(PlaneCodeReport {
            n,
            dim,
            expected_dim: Some(v - 1),
            min_wt: if even && dim == v - 1 { 2 } else { weight_distribution(&code, budget)?.min_weight().unwrap_or(0) },
            lines_as_min_words: false,
            hyperoval_count: None,
            weight_np2_count: 0,
            extended_self_dual: false,
            odd_fallback: true,
        });
    }
    let wd = weight_distribution(&code, budget)?;
    let min_wt = wd.min_weight().unwrap_or(0);
    let lines = design_from_code(&code, n + 1, budget)?;
    let lines_as_min_words = min_wt == n + 1 && lines.blocks() == plane.blocks();
    let hyperoval_count = (n <= 4).then(|| hyperovals(plane, n));
    let extended_self_dual = code.extend().duality_relation() == crate::code::DualityRelation::SelfDual;
    Ok(PlaneCodeReport {
        n,
        dim,
        expected_dim,
        min_wt,
        lines_as_min_words,
        hyperoval_count,
        weight_np2_count: wd.get(n + 2),
        extended_self_dual,
        odd_fallback: false,
    })
}

/// The 11 incidence rows of the 2-(11,5,2) biplane plus the all-one word.
pub fn hadamard_code_12() -> WordSet {
    let d = catalog_design("paley_biplane_11").unwrap();
    let f2 = Field::new(2).unwrap();
    let m = incidence_matrix(&d, &f2);
    let mut words: Vec<Vec<Elem>> = m.row_vecs();
    words.push(vec![1; 11]);
    WordSet::new(&f2, 11, words).unwrap()
}

/// [`hadamard_code_12`] with coordinate 0 deleted: 12 words of length 10.
pub fn hadamard_code_11() -> WordSet {
    hadamard_code_12().puncture(0).unwrap()
}

/// For every pair of blocks meeting in exactly four points, whether their symmetric
/// difference is again a block.
pub fn todd_check(octads: &Design) -> Result<bool> {
    if octads.v() != 24 || octads.k() != 8 || octads.b() != 759 {
        return Err(Error::WrongDesign(format!("v = {}, k = {}, b = {}", octads.v(), octads.k(), octads.b())));
    }
    let masks: Vec<u32> = octads.blocks().iter().map(|b| b.iter().fold(0u32, |m, &x| m | 1 << x)).collect();
    let set: HashSet<u32> = masks.iter().copied().collect();
    Ok((0..masks.len())
        .into_par_iter()
        .all(|i| masks[i + 1..].iter().all(|&b| (masks[i] & b).count_ones() != 4 || set.contains(&(masks[i] ^ b)))))
}
