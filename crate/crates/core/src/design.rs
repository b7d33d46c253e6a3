//! Block designs: verification, parameter arithmetic, derivation, complements.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::combinatorics::{binomial, binomial_table, colex_rank, for_each_combination};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Default cap on the number of t-subset counters a verification may allocate.
pub const DEFAULT_SUBSET_BUDGET: u128 = 100_000_000;

/// Points `0..v` and a duplicate-free list of `k`-element blocks, each block
/// sorted ascending and the list sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<Vec<u32>>,
}

impl Design {
    pub fn new(v: usize, blocks: impl IntoIterator<Item = Vec<u32>>) -> Result<Design> {
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        let k = blocks.first().map(Vec::len).ok_or_else(|| Error::InvalidDesign("no blocks".into()))?;
        if k == 0 || k > v {
            return Err(Error::InvalidDesign(format!("block size {k} with {v} points")));
        }
        for b in &blocks {
            if b.len() != k {
                return Err(Error::InvalidDesign(format!("blocks of sizes {k} and {}", b.len())));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDesign(format!("repeated point in block {b:?}")));
            }
            if b.iter().any(|&x| x as usize >= v) {
                return Err(Error::InvalidDesign(format!("block {b:?} has a point >= {v}")));
            }
        }
        blocks.sort_unstable();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDesign("repeated block".into()));
        }
        Ok(Design { v, k, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Number of blocks through each point.
    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.v];
        for b in &self.blocks {
            for &x in b {
                r[x as usize] += 1;
            }
        }
        r
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "design on {} points, {} blocks of size {}", self.v, self.b(), self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignParams {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: u64,
}

impl DesignParams {
    pub fn new(t: usize, v: usize, k: usize, lambda: u64) -> Result<Self> {
        if t == 0 || t > k || k > v || lambda == 0 {
            return Err(Error::InvalidDesign(format!("{t}-({v},{k},{lambda}) violates 0 < t <= k <= v")));
        }
        Ok(DesignParams { t, v, k, lambda })
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-({},{},{})", self.t, self.v, self.k, self.lambda)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub t: usize,
    pub is_design: bool,
    pub lambda: Option<u64>,
    /// A t-subset whose count differs from the most common count, with its count.
    pub witness: Option<(Vec<u32>, u64)>,
}

/// Counts, for every t-subset, the blocks containing it. Each block bumps the
/// colex-ranked counters of its `C(k,t)` sub-subsets.
pub fn t_subset_counts(d: &Design, t: usize, budget: u128) -> Result<Vec<u32>> {
    if t == 0 || t > d.k {
        return Err(Error::InvalidDesign(format!("t = {t} outside 1..={}", d.k)));
    }
    let cells = binomial(d.v, t);
    if cells > budget {
        return Err(Error::BudgetExceeded { required: cells, budget });
    }
    let table = binomial_table(d.v, t);
    let counters: Vec<AtomicU32> = (0..cells).map(|_| AtomicU32::new(0)).collect();
    d.blocks.par_iter().for_each_init(
        || vec![0u32; t],
        |sub, block| {
            for_each_combination(block.len(), t, |idx| {
                for (s, &i) in sub.iter_mut().zip(idx) {
                    *s = block[i];
                }
                counters[colex_rank(sub, &table) as usize].fetch_add(1, Ordering::Relaxed);
            });
        },
    );
    Ok(counters.into_iter().map(AtomicU32::into_inner).collect())
}

fn unrank_colex(mut rank: u64, t: usize, table: &[Vec<u64>]) -> Vec<u32> {
    let mut out = vec![0u32; t];
    for i in (1..=t).rev() {
        let mut c = i - 1;
        while c + 1 < table.len() && table[c + 1][i] <= rank {
            c += 1;
        }
        rank -= table[c][i];
        out[i - 1] = c as u32;
    }
    out
}

pub fn verify_t_design(d: &Design, t: usize, budget: u128) -> Result<VerificationResult> {
    let counts = t_subset_counts(d, t, budget)?;
    let mut freq: std::collections::BTreeMap<u32, usize> = Default::default();
    for &c in &counts {
        *freq.entry(c).or_default() += 1;
    }
    if freq.len() == 1 {
        let lambda = *freq.keys().next().unwrap() as u64;
        // a count of zero everywhere is not a design
        let ok = lambda > 0;
        return Ok(VerificationResult { t, is_design: ok, lambda: ok.then_some(lambda), witness: None });
    }
    let modal = freq.iter().max_by_key(|(c, n)| (**n, std::cmp::Reverse(**c))).map(|(c, _)| *c).unwrap();
    let pos = counts.iter().position(|&c| c != modal).unwrap();
    let table = binomial_table(d.v, t);
    let witness = unrank_colex(pos as u64, t, &table);
    Ok(VerificationResult { t, is_design: false, lambda: None, witness: Some((witness, counts[pos] as u64)) })
}

/// Parameters of `d` as a t-design, if it is one.
pub fn design_params(d: &Design, t: usize, budget: u128) -> Result<Option<DesignParams>> {
    let r = verify_t_design(d, t, budget)?;
    Ok(r.lambda.map(|lambda| DesignParams { t, v: d.v, k: d.k, lambda }))
}

/// Largest `t <= t_max` for which `d` verifies, with its lambda.
pub fn max_strength(d: &Design, t_max: usize, budget: u128) -> Result<Option<DesignParams>> {
    let mut best = None;
    for t in 1..=t_max.min(d.k) {
        match design_params(d, t, budget)? {
            Some(p) => best = Some(p),
            None => break,
        }
    }
    Ok(best)
}

/// `lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s)`, exact.
pub fn lambda_s(p: &DesignParams, s: usize) -> Ratio<u128> {
    assert!(s <= p.t, "s = {s} exceeds t = {}", p.t);
    let num = p.lambda as u128 * binomial(p.v - s, p.t - s);
    Ratio::new(num, binomial(p.k - s, p.t - s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    /// The first `s` at which `lambda_s` is not an integer.
    Inadmissible { s: usize, lambda_s: Ratio<u128> },
}

/// Integrality of every `lambda_s`, `0 <= s <= t`.
pub fn is_admissible(p: &DesignParams) -> Admissibility {
    for s in (0..=p.t).rev() {
        let l = lambda_s(p, s);
        if !l.is_integer() {
            return Admissibility::Inadmissible { s, lambda_s: l };
        }
    }
    Admissibility::Admissible
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingIdentities {
    pub b: u64,
    pub r: u64,
    /// The strongest verified t and its lambda, when t >= 1.
    pub params: DesignParams,
    /// `(description, holds)` for bk = vr, C(v,t) lambda = b C(k,t) at each verified t,
    /// and r(k-1) = lambda_2 (v-1) when t >= 2.
    pub checks: Vec<(String, bool)>,
}

impl CountingIdentities {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Checks the block-count identities at every strength `d` verifies for (up to `k - 1`).
pub fn counting_identities(d: &Design, budget: u128) -> Result<CountingIdentities> {
    let reps = d.replication();
    if reps.iter().any(|&r| r != reps[0]) || reps[0] == 0 {
        return Err(Error::NotOneDesign);
    }
    let (b, r) = (d.b() as u64, reps[0] as u64);
    let (v, k) = (d.v as u64, d.k as u64);
    let mut checks = vec![(format!("bk = vr: {}*{} = {}*{}", b, k, v, r), b * k == v * r)];
    let mut params = DesignParams { t: 1, v: d.v, k: d.k, lambda: r };
    let mut lambda2 = None;
    for t in 1..d.k.max(2) {
        let Some(p) = design_params(d, t, budget)? else { break };
        let lhs = binomial(d.v, t) * p.lambda as u128;
        let rhs = b as u128 * binomial(d.k, t);
        checks.push((format!("C({},{})*{} = {}*C({},{})", d.v, t, p.lambda, b, d.k, t), lhs == rhs));
        if t == 2 {
            lambda2 = Some(p.lambda);
        }
        params = p;
    }
    if let Some(l2) = lambda2 {
        checks.push((format!("r(k-1) = lambda_2(v-1): {}*{} = {}*{}", r, k - 1, l2, v - 1), r * (k - 1) == l2 * (v - 1)));
    }
    Ok(CountingIdentities { b, r, params, checks })
}

/// Fisher's inequality `b >= v` for a non-trivial t-design with `t >= 2`.
/// A violation means the input is corrupt and is reported as an integrity error.
pub fn fisher_check(d: &Design, t: usize, budget: u128) -> Result<bool> {
    if t < 2 || !(t < d.k && d.k < d.v) {
        return Err(Error::TrivialDesign);
    }
    if !verify_t_design(d, t, budget)?.is_design {
        return Err(Error::InvalidDesign(format!("not a {t}-design")));
    }
    if d.b() < d.v {
        return Err(Error::Integrity(format!("{t}-design with b = {} < v = {}", d.b(), d.v)));
    }
    Ok(true)
}

/// Blocks through `x` with `x` removed; the remaining points are relabeled
/// `0..v-1` preserving order.
pub fn derived(d: &Design, x: usize) -> Result<Design> {
    let x = x as u32;
    let blocks: Vec<Vec<u32>> = d
        .blocks
        .iter()
        .filter(|b| b.binary_search(&x).is_ok())
        .map(|b| b.iter().filter(|&&p| p != x).map(|&p| if p > x { p - 1 } else { p }).collect())
        .collect();
    if blocks.is_empty() || d.k == 1 {
        return Err(Error::PointNotCovered(x as usize));
    }
    Design::new(d.v - 1, blocks)
}

pub fn complement(d: &Design) -> Result<Design> {
    if d.k == d.v {
        return Err(Error::FullBlocks);
    }
    let blocks = d.blocks.iter().map(|b| (0..d.v as u32).filter(|p| b.binary_search(p).is_err()).collect());
    Design::new(d.v, blocks)
}

/// The `b x v` 0/1 incidence matrix, rows in block order.
pub fn incidence_matrix(d: &Design, field: &Field) -> Matrix {
    let mut m = Matrix::zeros(field, d.b(), d.v);
    for (i, b) in d.blocks.iter().enumerate() {
        for &p in b {
            m.set(i, p as usize, 1);
        }
    }
    m
}

/// Whether the Bruck-Ryser condition rules out a projective plane of order `n`:
/// `n = 1 or 2 (mod 4)` and `n` is not a sum of two squares.
pub fn bruck_ryser_excludes(n: u64) -> bool {
    if n % 4 != 1 && n % 4 != 2 {
        return false;
    }
    let sum_of_two_squares = (0..).take_while(|a| a * a <= n).any(|a| {
        let rest = n - a * a;
        let b = (rest as f64).sqrt() as u64;
        (b.saturating_sub(1)..=b + 1).any(|b| b * b == rest)
    });
    !sum_of_two_squares
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Design {
        let blocks = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [1, 5, 6], [2, 6, 7], [1, 3, 7]];
        Design::new(7, blocks.iter().map(|b| b.iter().map(|&x| x - 1).collect())).unwrap()
    }

    #[test]
    fn fano_verifies() {
        let r = verify_t_design(&fano(), 2, DEFAULT_SUBSET_BUDGET).unwrap();
        assert!(r.is_design);
        assert_eq!(r.lambda, Some(1));
        assert!(!verify_t_design(&fano(), 3, DEFAULT_SUBSET_BUDGET).unwrap().is_design);
    }

    #[test]
    fn deleted_block_witness() {
        let f = fano();
        let removed = f.blocks()[3].clone();
        let broken = Design::new(7, f.blocks().iter().filter(|b| **b != removed).cloned()).unwrap();
        let r = verify_t_design(&broken, 2, DEFAULT_SUBSET_BUDGET).unwrap();
        assert!(!r.is_design);
        let (pair, count) = r.witness.unwrap();
        assert_eq!(count, 0);
        assert!(pair.iter().all(|p| removed.contains(p)));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Design::new(3, [vec![0, 1], vec![1, 0]]).is_err());
        assert!(Design::new(3, [vec![0, 1], vec![1]]).is_err());
        assert!(Design::new(3, [vec![0, 3]]).is_err());
        assert!(Design::new(3, Vec::<Vec<u32>>::new()).is_err());
    }

    #[test]
    fn lambda_s_values() {
        let w = DesignParams::new(5, 24, 8, 1).unwrap();
        assert_eq!(lambda_s(&w, 0), Ratio::from_integer(759));
        assert_eq!(lambda_s(&w, 1), Ratio::from_integer(253));
        assert_eq!(lambda_s(&w, 5), Ratio::from_integer(1));
    }

    #[test]
    fn admissibility() {
        assert_eq!(is_admissible(&DesignParams::new(2, 7, 3, 1).unwrap()), Admissibility::Admissible);
        assert_eq!(
            is_admissible(&DesignParams::new(2, 8, 3, 1).unwrap()),
            Admissibility::Inadmissible { s: 1, lambda_s: Ratio::new(7, 2) }
        );
        assert_eq!(is_admissible(&DesignParams::new(3, 9, 9, 1).unwrap()), Admissibility::Admissible);
    }

    #[test]
    fn counting_on_fano() {
        let c = counting_identities(&fano(), DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!((c.b, c.r), (7, 3));
        assert_eq!(c.params.t, 2);
        assert!(c.all_hold());
        let lopsided = Design::new(4, [vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(counting_identities(&lopsided, 100).unwrap_err(), Error::NotOneDesign);
    }

    #[test]
    fn fisher_and_trivial() {
        assert!(fisher_check(&fano(), 2, DEFAULT_SUBSET_BUDGET).unwrap());
        let mut all = Vec::new();
        for_each_combination(5, 2, |c| all.push(c.iter().map(|&x| x as u32).collect()));
        let trivial = Design::new(5, all).unwrap();
        assert_eq!(fisher_check(&trivial, 2, DEFAULT_SUBSET_BUDGET), Err(Error::TrivialDesign));
    }

    #[test]
    fn complement_of_fano_is_biplane() {
        let c = complement(&fano()).unwrap();
        assert_eq!(design_params(&c, 2, 1000).unwrap(), Some(DesignParams { t: 2, v: 7, k: 4, lambda: 2 }));
        assert_eq!(complement(&c).unwrap(), fano());
        let full = Design::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(complement(&full), Err(Error::FullBlocks));
    }

    #[test]
    fn derived_and_uncovered() {
        let d = derived(&fano(), 0).unwrap();
        assert_eq!((d.v(), d.k(), d.b()), (6, 2, 3));
        assert!(verify_t_design(&d, 1, 100).unwrap().is_design);
        let sparse = Design::new(4, [vec![0, 1]]).unwrap();
        assert_eq!(derived(&sparse, 3), Err(Error::PointNotCovered(3)));
    }

    #[test]
    fn incidence_sums() {
        let m = incidence_matrix(&fano(), &Field::new(2).unwrap());
        for r in 0..7 {
            assert_eq!(m.row(r).iter().filter(|&&x| x == 1).count(), 3);
        }
        let single = Design::new(6, [vec![0, 1, 2]]).unwrap();
        assert_eq!(incidence_matrix(&single, &Field::new(3).unwrap()).row(0), &[1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn bruck_ryser() {
        assert!(bruck_ryser_excludes(6));
        assert!(!bruck_ryser_excludes(10));
        assert!(bruck_ryser_excludes(14));
        assert!(bruck_ryser_excludes(21));
        assert!(!bruck_ryser_excludes(12));
        assert!(!bruck_ryser_excludes(9));
    }

    #[test]
    fn colex_unrank_inverts_rank() {
        let t = binomial_table(10, 3);
        for_each_combination(10, 3, |c| {
            let s: Vec<u32> = c.iter().map(|&x| x as u32).collect();
            assert_eq!(unrank_colex(colex_rank(&s, &t), 3, &t), s);
        });
    }
}
