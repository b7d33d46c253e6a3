//! Linear codes as row spaces of a generator matrix kept in reduced
//! row-echelon form, plus arbitrary word sets for nonlinear codes.

pub(crate) mod kernel;
mod wordset;

pub use wordset::{WordSet, WordSetProps};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::Matrix;

/// Default cap on the number of codewords an exhaustive walk may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

/// Number of nonzero coordinates.
pub fn weight(w: &[Elem]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

pub fn distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Nonzero coordinate positions, 0-based.
pub fn support(w: &[Elem]) -> Vec<usize> {
    w.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
}

/// `q^k`, saturating.
pub fn code_size(q: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

/// Column permutation: position `j` of the permuted word holds coordinate `perm[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, w: &[Elem]) -> Vec<Elem> {
        self.0.iter().map(|&i| w[i]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityRelation {
    SelfDual,
    SelfOrthogonal,
    Neither,
}

/// An `[n, k]` code over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The row space of `rows`; dependent rows are absorbed.
    pub fn from_rows(rows: &Matrix) -> Result<LinearCode> {
        let (gen, pivots) = rows.rref();
        if pivots.is_empty() {
            return Err(Error::ZeroCode);
        }
        Ok(LinearCode { field: rows.field().clone(), n: rows.cols(), gen, pivots })
    }

    pub fn from_vecs(field: &Field, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        LinearCode::from_rows(&Matrix::from_rows(field, rows)?)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// The generator in reduced row-echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn size(&self) -> u128 {
        code_size(self.q(), self.k())
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut w = vec![0; self.n];
        for (r, &m) in message.iter().enumerate() {
            if m != 0 {
                for (x, &g) in w.iter_mut().zip(self.gen.row(r)) {
                    *x = f.add(*x, f.mul(m, g));
                }
            }
        }
        w
    }

    pub fn contains(&self, w: &[Elem]) -> bool {
        if w.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut v = w.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c != 0 {
                let s = f.neg(c);
                for (x, &g) in v.iter_mut().zip(self.gen.row(r)) {
                    *x = f.add(*x, f.mul(s, g));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Equivalent code with generator `(I_k | P)` and the column permutation that produced it.
    pub fn standard_form(&self) -> (LinearCode, Permutation) {
        let mut order = self.pivots.clone();
        order.extend((0..self.n).filter(|c| !self.pivots.contains(c)));
        let perm = Permutation(order);
        let gen = self.gen.select_columns(&perm.0);
        let pivots = (0..self.k()).collect();
        (LinearCode { field: self.field.clone(), n: self.n, gen, pivots }, perm)
    }

    /// The dual code, built from `H = (-P^T | I_{n-k})` with the standard-form permutation undone.
    pub fn dual(&self) -> Result<LinearCode> {
        let (k, n) = (self.k(), self.n);
        if k == n {
            return Err(Error::ZeroDual);
        }
        let f = &self.field;
        let (std, perm) = self.standard_form();
        let mut h = Matrix::zeros(f, n - k, n);
        for i in 0..n - k {
            for j in 0..k {
                h.set(i, perm.0[j], f.neg(std.gen.get(j, k + i)));
            }
            h.set(i, perm.0[k + i], 1);
        }
        LinearCode::from_rows(&h)
    }

    /// Dual-containment test via `G G^T = 0`.
    pub fn duality_relation(&self) -> DualityRelation {
        let gram = self.gen.mul(&self.gen.transpose()).expect("square product");
        match (gram.is_zero(), 2 * self.k() == self.n) {
            (true, true) => DualityRelation::SelfDual,
            (true, false) => DualityRelation::SelfOrthogonal,
            _ => DualityRelation::Neither,
        }
    }

    /// Appends the overall parity symbol `-sum(c_i)`.
    pub fn extend(&self) -> LinearCode {
        let f = &self.field;
        let rows: Vec<Vec<Elem>> = (0..self.k())
            .map(|r| {
                let row = self.gen.row(r);
                let s = row.iter().fold(0, |acc, &x| f.add(acc, x));
                row.iter().copied().chain([f.neg(s)]).collect()
            })
            .collect();
        LinearCode::from_vecs(f, &rows).expect("extension keeps rank")
    }

    /// Deletes coordinate `pos`.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.n {
            return Err(Error::OutOfRange { pos, n: self.n });
        }
        let cols: Vec<usize> = (0..self.n).filter(|&c| c != pos).collect();
        if cols.is_empty() {
            return Err(Error::DimensionCollapse(pos));
        }
        LinearCode::from_rows(&self.gen.select_columns(&cols)).map_err(|e| match e {
            Error::ZeroCode => Error::DimensionCollapse(pos),
            e => e,
        })
    }

    /// Whether the code is invariant under `(c_0..c_{n-1}) -> (c_{n-1}, c_0, ..)`.
    pub fn is_cyclic(&self) -> bool {
        (0..self.k()).all(|r| {
            let row = self.gen.row(r);
            let mut shifted = Vec::with_capacity(self.n);
            shifted.push(row[self.n - 1]);
            shifted.extend_from_slice(&row[..self.n - 1]);
            self.contains(&shifted)
        })
    }

    /// All `q^k` codewords, messages in lexicographic order (first message digit
    /// most significant). Fails when `q^k` exceeds `budget`.
    pub fn enumerate(&self, budget: u128) -> Result<Codewords<'_>> {
        self.check_budget(budget)?;
        Ok(Codewords { code: self, next: 0, total: self.size() })
    }

    pub(crate) fn check_budget(&self, budget: u128) -> Result<()> {
        let required = self.size();
        if required > budget {
            Err(Error::BudgetExceeded { required, budget })
        } else {
            Ok(())
        }
    }

    pub(crate) fn rows(&self) -> Vec<Vec<Elem>> {
        self.gen.row_vecs()
    }

    /// Distinct supports of weight-`w` codewords, sorted. Walks the code when it
    /// fits the budget; otherwise tests every `w`-subset against the parity checks,
    /// provided there are at most `budget` of them.
    pub fn supports_of_weight(&self, w: usize, budget: u128) -> Result<Vec<Vec<u32>>> {
        if self.size() <= budget {
            return Ok(kernel::supports_of_weight(&self.field, &self.rows(), self.n, w));
        }
        if crate::combinatorics::binomial(self.n, w) > budget {
            return Err(Error::BudgetExceeded { required: self.size(), budget });
        }
        let h = self.dual()?.generator().clone();
        let mut out = Vec::new();
        crate::combinatorics::for_each_combination(self.n, w, |cols| {
            if self.has_full_support_word(&h.select_columns(cols)) {
                out.push(cols.iter().map(|&c| c as u32).collect());
            }
        });
        Ok(out)
    }

    /// Whether some kernel vector of `hs` has no zero entry.
    fn has_full_support_word(&self, hs: &Matrix) -> bool {
        let basis = hs.kernel();
        if basis.is_empty() {
            return false;
        }
        let q = self.q();
        let mut coeffs = vec![0usize; basis.len()];
        let mut v = vec![0; hs.cols()];
        loop {
            let Some(pos) = coeffs.iter().rposition(|&x| x + 1 < q) else { return false };
            coeffs[pos] += 1;
            coeffs[pos + 1..].iter_mut().for_each(|x| *x = 0);
            v.iter_mut().for_each(|x| *x = 0);
            for (&c, b) in coeffs.iter().zip(&basis) {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = self.field.add(*x, self.field.mul(c as Elem, y));
                }
            }
            if v.iter().all(|&x| x != 0) {
                return true;
            }
        }
    }
}

/// Iterator over every codeword; see [`LinearCode::enumerate`].
pub struct Codewords<'a> {
    code: &'a LinearCode,
    next: u128,
    total: u128,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.next == self.total {
            return None;
        }
        let (q, k) = (self.code.q() as u128, self.code.k());
        let mut idx = self.next;
        let mut msg = vec![0; k];
        for d in msg.iter_mut().rev() {
            *d = (idx % q) as Elem;
            idx /= q;
        }
        self.next += 1;
        Some(self.code.encode(&msg))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.next).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}
