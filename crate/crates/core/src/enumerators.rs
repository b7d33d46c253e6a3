//! Weight distributions, the MacWilliams transform, and the sphere-packing test.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::code::{code_size, kernel, LinearCode};
use crate::combinatorics::binomial_big;
use crate::error::{Error, Result};

/// Exact counts `A_0..A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u128>) -> Self {
        WeightDistribution { counts }
    }

    /// From `(weight, count)` pairs, zero elsewhere.
    pub fn from_pairs(n: usize, pairs: &[(usize, u128)]) -> Self {
        let mut counts = vec![0; n + 1];
        for &(w, c) in pairs {
            counts[w] += c;
        }
        WeightDistribution { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn get(&self, w: usize) -> u128 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().map(|&c| BigUint::from(c)).sum()
    }

    /// Weights with a nonzero count, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&w| self.counts[w] > 0).collect()
    }

    /// Least nonzero weight present.
    pub fn min_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn pairs(&self) -> Vec<(usize, u128)> {
        self.support().into_iter().map(|w| (w, self.counts[w])).collect()
    }
}

/// `w:count` pairs for the nonzero entries, ascending weight, space separated.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(w, c)| format!("{w}:{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl WeightDistribution {
    /// Parses the `w:count` form; `n` fixes the length since trailing zeros are omitted.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (w, c) = tok.split_once(':').ok_or_else(|| Error::Parse(format!("bad pair {tok:?}")))?;
            let w = usize::from_str(w).map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            let c = u128::from_str(c).map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            if w > n {
                return Err(Error::Parse(format!("weight {w} exceeds length {n}")));
            }
            pairs.push((w, c));
        }
        Ok(WeightDistribution::from_pairs(n, &pairs))
    }
}

/// Weight census by walking every codeword of `c` itself.
pub fn weight_distribution_exhaustive(c: &LinearCode, budget: u128) -> Result<WeightDistribution> {
    c.enumerate(budget)?;
    Ok(WeightDistribution::new(kernel::weight_census(c.field(), &c.rows(), c.n())))
}

/// Weight census of `c`, walking whichever of `C` and `C^⊥` is smaller and
/// transforming when the dual was walked.
pub fn weight_distribution(c: &LinearCode, budget: u128) -> Result<WeightDistribution> {
    let (q, n, k) = (c.q(), c.n(), c.k());
    if k == n || k <= n - k {
        return weight_distribution_exhaustive(c, budget);
    }
    let dual_size = code_size(q, n - k);
    if dual_size > budget {
        return Err(Error::BudgetExceeded { required: dual_size, budget });
    }
    let dual = c.dual()?;
    let a = weight_distribution_exhaustive(&dual, budget)?;
    macwilliams(&a, n, n - k, q)
}

/// Minimum distance, i.e. least nonzero weight.
pub fn min_distance(c: &LinearCode, budget: u128) -> Result<usize> {
    let wd = weight_distribution(c, budget)?;
    Ok(wd.min_weight().unwrap_or(0))
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn powers(base: &[BigInt], n: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::one()]];
    for i in 0..n {
        let next = poly_mul(&out[i], base);
        out.push(next);
    }
    out
}

/// Weight distribution of the dual of an `[n, k]` code over GF(q) with distribution `a`:
/// the coefficients of `q^-k (1+(q-1)x)^n A((1-x)/(1+(q-1)x))`, in exact integers.
pub fn macwilliams(a: &WeightDistribution, n: usize, k: usize, q: usize) -> Result<WeightDistribution> {
    if q < 2 || k > n {
        return Err(Error::InconsistentInput(format!("need q >= 2 and k <= n, got q = {q}, k = {k}, n = {n}")));
    }
    if a.n() != n {
        return Err(Error::InconsistentInput(format!("distribution has length {}, expected {n}", a.n())));
    }
    let size = BigUint::from(q).pow(k as u32);
    if a.total() != size {
        return Err(Error::InconsistentInput(format!("counts sum to {}, not {q}^{k}", a.total())));
    }
    let one_minus = powers(&[BigInt::one(), -BigInt::one()], n);
    let one_plus = powers(&[BigInt::one(), BigInt::from(q - 1)], n);
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, &ai) in a.counts().iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let term = poly_mul(&one_minus[i], &one_plus[n - i]);
        let ai = BigInt::from(ai);
        for (s, t) in acc.iter_mut().zip(term) {
            *s += &ai * t;
        }
    }
    let size = BigInt::from(size);
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(w, c)| {
            let (quot, rem) = c.div_rem(&size);
            if !rem.is_zero() || quot.is_negative() {
                return Err(Error::InconsistentInput(format!("coefficient {w} is not a nonnegative integer")));
            }
            quot.to_u128().ok_or_else(|| Error::InconsistentInput(format!("A_{w} overflows")))
        })
        .collect::<Result<Vec<u128>>>()?;
    Ok(WeightDistribution::new(counts))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectnessReport {
    pub d: usize,
    /// Error-correcting radius `floor((d-1)/2)`.
    pub e: usize,
    pub sphere_size: BigUint,
    /// `|C| * sphere_size`
    pub lhs: BigUint,
    /// `q^n`
    pub rhs: BigUint,
    pub perfect: bool,
}

/// Sphere volume `sum_{i<=e} C(n,i) (q-1)^i`.
pub fn sphere_size(n: usize, q: usize, e: usize) -> BigUint {
    (0..=e.min(n)).map(|i| binomial_big(n, i) * BigUint::from(q - 1).pow(i as u32)).sum()
}

pub fn perfectness(c: &LinearCode, budget: u128) -> Result<PerfectnessReport> {
    let d = min_distance(c, budget)?;
    Ok(perfectness_from(c.n(), c.k(), c.q(), d))
}

/// Sphere-packing check from parameters alone.
pub fn perfectness_from(n: usize, k: usize, q: usize, d: usize) -> PerfectnessReport {
    let e = d.saturating_sub(1) / 2;
    let sphere_size = sphere_size(n, q, e);
    let lhs = BigUint::from(q).pow(k as u32) * &sphere_size;
    let rhs = BigUint::from(q).pow(n as u32);
    let perfect = d % 2 == 1 && lhs == rhs;
    PerfectnessReport { d, e, sphere_size, lhs, rhs, perfect }
}

/// The radius `e` with `V(n, e) = q^(n-k)`, if any. Without one no `[n, k]` code
/// over GF(q) can be perfect, whatever its minimum distance.
pub fn perfect_radius(n: usize, k: usize, q: usize) -> Option<usize> {
    let target = BigUint::from(q).pow((n - k) as u32);
    (0..=n).map(|e| (e, sphere_size(n, q, e))).take_while(|(_, v)| *v <= target).find(|(_, v)| *v == target).map(|(e, _)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn hamming7() -> LinearCode {
        let f = Field::new(2).unwrap();
        LinearCode::from_vecs(
            &f,
            &[
                vec![1, 1, 0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 1, 0, 0],
                vec![0, 0, 1, 1, 0, 1, 0],
                vec![0, 0, 0, 1, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn hamming7_distribution_and_transform() {
        let wd = weight_distribution(&hamming7(), 1 << 20).unwrap();
        assert_eq!(wd.counts(), &[1, 0, 0, 7, 7, 0, 0, 1]);
        let dual = macwilliams(&wd, 7, 4, 2).unwrap();
        assert_eq!(dual.counts(), &[1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(min_distance(&hamming7(), 1 << 20).unwrap(), 3);
    }

    #[test]
    fn full_space_transforms_to_zero_code() {
        // binomial distribution of GF(3)^4
        let wd = WeightDistribution::new(vec![1, 8, 24, 32, 16]);
        let dual = macwilliams(&wd, 4, 4, 3).unwrap();
        assert_eq!(dual.counts(), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn rejects_inconsistent_sums() {
        let wd = WeightDistribution::new(vec![1, 0, 0, 7, 6, 0, 0, 1]);
        assert!(matches!(macwilliams(&wd, 7, 4, 2), Err(Error::InconsistentInput(_))));
    }

    #[test]
    fn display_round_trip() {
        let wd = WeightDistribution::new(vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(wd.to_string(), "0:1 3:7 4:7 7:1");
        assert_eq!(WeightDistribution::parse(&wd.to_string(), 7).unwrap(), wd);
    }

    #[test]
    fn repetition_min_distance() {
        let f = Field::new(5).unwrap();
        let rep = LinearCode::from_vecs(&f, &[vec![1; 9]]).unwrap();
        assert_eq!(min_distance(&rep, 1 << 20).unwrap(), 9);
    }

    #[test]
    fn sphere_packing_examples() {
        let g23 = perfectness_from(23, 12, 2, 7);
        assert_eq!(g23.sphere_size, BigUint::from(2048u32));
        assert!(g23.perfect);
        let g11 = perfectness_from(11, 6, 3, 5);
        assert_eq!(g11.sphere_size, BigUint::from(243u32));
        assert!(g11.perfect);
        let h8 = perfectness_from(8, 4, 2, 4);
        assert!(!h8.perfect);
        assert_eq!(perfect_radius(23, 12, 2), Some(3));
        assert_eq!(perfect_radius(31, 28, 5), Some(1));
        assert_eq!(perfect_radius(24, 12, 3), None);
    }
}
