//! Binomials and k-subset ranking.

use num_bigint::BigUint;

/// `C(n, k)` in `u128`, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Pascal table `table[n][k] = C(n, k)` for `n <= max_n`, `k <= max_k`.
pub fn binomial_table(max_n: usize, max_k: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; max_k + 1]; max_n + 1];
    for n in 0..=max_n {
        t[n][0] = 1;
        for k in 1..=max_k.min(n) {
            t[n][k] = t[n - 1][k - 1].saturating_add(if k < n { t[n - 1][k] } else { 0 });
        }
    }
    t
}

/// Colex rank of a sorted subset: `sum_i C(s_i, i + 1)`.
pub fn colex_rank(subset: &[u32], table: &[Vec<u64>]) -> u64 {
    subset.iter().enumerate().map(|(i, &s)| table[s as usize][i + 1]).sum()
}

/// Calls `f` with every `k`-subset of `0..n` as a sorted index slice, lexicographically.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 5), 42504);
        assert_eq!(binomial(48, 5), 1_712_304);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_big(60, 30).to_string(), "118264581564861424");
        let t = binomial_table(30, 6);
        assert_eq!(t[24][5], 42504);
    }

    #[test]
    fn colex_ranks_are_a_bijection() {
        let t = binomial_table(9, 4);
        let mut seen = vec![false; binomial(9, 4) as usize];
        for_each_combination(9, 4, |c| {
            let s: Vec<u32> = c.iter().map(|&x| x as u32).collect();
            let r = colex_rank(&s, &t) as usize;
            assert!(!seen[r]);
            seen[r] = true;
        });
        assert!(seen.iter().all(|&x| x));
    }
}
