//! Symmetric association schemes: brute-force axiom checks and intersection
//! numbers, with the Hamming and Johnson schemes as constructors.

use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{binomial, for_each_combination};
use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 4096;

/// A point set `0..size` with a symmetric relation index for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    size: usize,
    d: usize,
    relation: Vec<u8>,
}

impl AssociationScheme {
    /// Tabulates `classify` and checks that it is total, symmetric, at most `d`,
    /// zero exactly on the diagonal, and uses every class.
    pub fn new(size: usize, d: usize, classify: impl Fn(usize, usize) -> usize + Sync) -> Result<Self> {
        if size == 0 || size > MAX_POINTS {
            return Err(Error::LimitExceeded(format!("scheme size {size} outside 1..={MAX_POINTS}")));
        }
        if d > u8::MAX as usize {
            return Err(Error::LimitExceeded(format!("{d} classes")));
        }
        let relation: Vec<u8> =
            (0..size * size).into_par_iter().map(|i| classify(i / size, i % size).min(d + 1) as u8).collect();
        let mut used = vec![false; d + 1];
        for x in 0..size {
            for y in 0..size {
                let r = relation[x * size + y] as usize;
                if r > d {
                    return Err(Error::NotAScheme(format!("pair ({x},{y}) has class above {d}")));
                }
                if (r == 0) != (x == y) {
                    return Err(Error::NotAScheme(format!("pair ({x},{y}) violates the identity relation")));
                }
                if relation[y * size + x] as usize != r {
                    return Err(Error::NotAScheme(format!("pair ({x},{y}) is not symmetric")));
                }
                used[r] = true;
            }
        }
        if let Some(i) = used.iter().position(|&u| !u) {
            return Err(Error::NotAScheme(format!("class {i} is empty")));
        }
        Ok(AssociationScheme { size, d, relation })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn classes(&self) -> usize {
        self.d
    }

    pub fn classify(&self, x: usize, y: usize) -> usize {
        self.relation[x * self.size + y] as usize
    }
}

/// The tensor `p[i][j][k]`, `0 <= i, j, k <= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumbers {
    d: usize,
    p: Vec<u64>,
}

impl IntersectionNumbers {
    pub fn classes(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        let m = self.d + 1;
        self.p[(i * m + j) * m + k]
    }

    /// Number of points in relation `i` to a fixed point.
    pub fn valency(&self, i: usize) -> u64 {
        self.get(i, i, 0)
    }
}

/// One `i j k p` line per entry, `i`, `j`, `k` ascending.
impl fmt::Display for IntersectionNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.d {
            for j in 0..=self.d {
                for k in 0..=self.d {
                    writeln!(f, "{i} {j} {k} {}", self.get(i, j, k))?;
                }
            }
        }
        Ok(())
    }
}

const UNSET: u64 = u64::MAX;

/// Checks that the number of `z` with `(x,z)` in `R_i` and `(z,y)` in `R_j` depends
/// only on `i`, `j` and the class `k` of `(x,y)`.
pub fn verify_scheme(s: &AssociationScheme) -> Result<IntersectionNumbers> {
    let m = s.d + 1;
    let n = s.size;
    let per_x: Vec<std::result::Result<Vec<u64>, String>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut table = vec![UNSET; m * m * m];
            let mut hist = vec![0u64; m * m];
            let rx = &s.relation[x * n..(x + 1) * n];
            for y in 0..n {
                hist.iter_mut().for_each(|h| *h = 0);
                for (z, &i) in rx.iter().enumerate() {
                    hist[i as usize * m + s.relation[z * n + y] as usize] += 1;
                }
                let k = rx[y] as usize;
                for ij in 0..m * m {
                    let slot = &mut table[ij * m + k];
                    if *slot == UNSET {
                        *slot = hist[ij];
                    } else if *slot != hist[ij] {
                        let (i, j) = (ij / m, ij % m);
                        return Err(format!("p_{i}{j}^{k} is {} at pair ({x},{y}) but {} elsewhere", hist[ij], slot));
                    }
                }
            }
            Ok(table)
        })
        .collect();
    let mut p = vec![UNSET; m * m * m];
    for (x, t) in per_x.into_iter().enumerate() {
        let t = t.map_err(Error::NotAScheme)?;
        for (idx, (slot, v)) in p.iter_mut().zip(t).enumerate() {
            if v == UNSET {
                continue;
            }
            if *slot == UNSET {
                *slot = v;
            } else if *slot != v {
                let (i, j, k) = (idx / (m * m), idx / m % m, idx % m);
                return Err(Error::NotAScheme(format!("p_{i}{j}^{k} is {v} from point {x} but {slot} elsewhere")));
            }
        }
    }
    Ok(IntersectionNumbers { d: s.d, p })
}

/// `H(n, q)`: q-ary n-tuples, classified by Hamming distance.
pub fn hamming_scheme(n: usize, q: usize) -> Result<AssociationScheme> {
    let size = match (q as u64).checked_pow(n as u32) {
        Some(s) if q >= 2 && n >= 1 && s <= MAX_POINTS as u64 => s as usize,
        _ => return Err(Error::LimitExceeded(format!("H({n},{q}) needs q >= 2, n >= 1 and q^n <= {MAX_POINTS}"))),
    };
    let digits: Vec<Vec<usize>> = (0..size)
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let r = x % q;
                    x /= q;
                    r
                })
                .collect()
        })
        .collect();
    AssociationScheme::new(size, n, |x, y| digits[x].iter().zip(&digits[y]).filter(|(a, b)| a != b).count())
}

/// `J(v, k)`: k-subsets of a v-set, class `k - |S1 ∩ S2|`.
pub fn johnson_scheme(v: usize, k: usize) -> Result<AssociationScheme> {
    if k == 0 || 2 * k > v {
        return Err(Error::BadK { v, k });
    }
    if binomial(v, k) > MAX_POINTS as u128 {
        return Err(Error::LimitExceeded(format!("J({v},{k}) has more than {MAX_POINTS} points")));
    }
    let mut sets = Vec::new();
    for_each_combination(v, k, |c| sets.push(c.iter().fold(0u64, |m, &x| m | 1 << x)));
    AssociationScheme::new(sets.len(), k, |x, y| k - (sets[x] & sets[y]).count_ones() as usize)
}
