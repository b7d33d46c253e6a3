use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

use super::distance;

/// A finite, duplicate-free set of words of a common length (possibly nonlinear).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    field: Field,
    n: usize,
    words: BTreeSet<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSetProps {
    pub size: usize,
    pub min_distance: Option<usize>,
    /// `B_i = |{(x, y) : d(x, y) = i}| / |S|`, kept as the raw pair count and the divisor.
    pub distance_pairs: Vec<u64>,
    pub is_linear: bool,
}

impl WordSetProps {
    /// The distance distribution `B_i` as exact `(numerator, denominator)` pairs.
    pub fn distance_distribution(&self) -> Vec<(u64, u64)> {
        self.distance_pairs.iter().map(|&c| (c, self.size as u64)).collect()
    }
}

impl WordSet {
    pub fn new(field: &Field, n: usize, words: impl IntoIterator<Item = Vec<Elem>>) -> Result<WordSet> {
        let mut set = BTreeSet::new();
        for w in words {
            if w.len() != n {
                return Err(Error::Shape(format!("word of length {} in a length-{n} set", w.len())));
            }
            for &x in &w {
                field.check(x as u32)?;
            }
            if !set.insert(w) {
                return Err(Error::Shape("duplicate word".into()));
            }
        }
        Ok(WordSet { field: field.clone(), n, words: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Vec<Elem>> {
        self.words.iter()
    }

    pub fn contains(&self, w: &[Elem]) -> bool {
        self.words.contains(w)
    }

    /// Deletes coordinate `pos` from every word; colliding words are an error.
    pub fn puncture(&self, pos: usize) -> Result<WordSet> {
        if pos >= self.n {
            return Err(Error::OutOfRange { pos, n: self.n });
        }
        let punctured = self.words.iter().map(|w| {
            let mut w = w.clone();
            w.remove(pos);
            w
        });
        WordSet::new(&self.field, self.n - 1, punctured)
    }

    pub fn props(&self) -> WordSetProps {
        let words: Vec<&Vec<Elem>> = self.words.iter().collect();
        let mut census: BTreeMap<usize, u64> = BTreeMap::new();
        for (i, x) in words.iter().enumerate() {
            for y in &words[i..] {
                let d = distance(x, y);
                *census.entry(d).or_default() += if d == 0 { 1 } else { 2 };
            }
        }
        let mut distance_pairs = vec![0; self.n + 1];
        for (d, c) in &census {
            distance_pairs[*d] = *c;
        }
        let min_distance = census.keys().copied().find(|&d| d > 0);
        let f = &self.field;
        let has_zero = self.words.contains(&vec![0; self.n]);
        let closed = || {
            let lookup: HashSet<&[Elem]> = words.iter().map(|w| w.as_slice()).collect();
            let mut sum = vec![0; self.n];
            words.iter().enumerate().all(|(i, x)| {
                words[i..].iter().all(|y| {
                    for ((s, &a), &b) in sum.iter_mut().zip(x.iter()).zip(y.iter()) {
                        *s = f.add(a, b);
                    }
                    lookup.contains(sum.as_slice())
                })
            })
        };
        WordSetProps { size: words.len(), min_distance, distance_pairs, is_linear: has_zero && closed() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_word_plus_zero() {
        let f = Field::new(2).unwrap();
        let s = WordSet::new(&f, 5, [vec![0; 5], vec![1, 1, 0, 1, 0]]).unwrap();
        let p = s.props();
        assert_eq!(p.min_distance, Some(3));
        assert_eq!(p.distance_pairs[0], 2);
        assert_eq!(p.distance_pairs[3], 2);
        assert!(p.is_linear);
    }

    #[test]
    fn nonlinear_without_closure() {
        let f = Field::new(2).unwrap();
        let s = WordSet::new(&f, 3, [vec![0, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert!(!s.props().is_linear);
        assert!(WordSet::new(&f, 2, [vec![0, 0], vec![0, 0]]).is_err());
    }
}
