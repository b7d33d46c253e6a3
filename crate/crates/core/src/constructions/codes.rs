use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power, Elem, Field};
use crate::matrix::Matrix;

/// Cap on `k^2 n` for the Reed-Muller generator reduction.
const RM_WORK: u128 = 1 << 34;

/// All vectors of GF(q)^m in lexicographic order, first coordinate most significant.
pub(crate) fn all_vectors(q: usize, m: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = q.pow(m as u32);
    (0..total).map(move |mut x| {
        let mut v = vec![0; m];
        for slot in v.iter_mut().rev() {
            *slot = (x % q) as Elem;
            x /= q;
        }
        v
    })
}

/// One representative per 1-dimensional subspace (first nonzero entry 1), lexicographic.
pub(crate) fn projective_points(q: usize, m: usize) -> Vec<Vec<Elem>> {
    all_vectors(q, m).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1)).collect()
}

/// The `[n, n-m, 3]` Hamming code over GF(q), `n = (q^m - 1)/(q - 1)`.
pub fn hamming(q: u64, m: usize) -> Result<LinearCode> {
    let field = Field::new(q)?;
    if m < 2 {
        return Err(Error::LimitExceeded(format!("Hamming codes need m >= 2, got {m}")));
    }
    let n = (q as u128).checked_pow(m as u32).map(|p| (p - 1) / (q as u128 - 1));
    match n {
        Some(n) if n <= 256 => {}
        _ => return Err(Error::LimitExceeded(format!("Hamming length for q = {q}, m = {m} exceeds 256"))),
    }
    let cols = projective_points(field.q(), m);
    let mut h = Matrix::zeros(&field, m, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            h.set(i, j, x);
        }
    }
    LinearCode::from_vecs(&field, &h.kernel())
}

/// The `[8,4,4]` code generated by `(I_4 | J_4 - I_4)`.
pub fn extended_hamming8() -> LinearCode {
    let f = Field::new(2).unwrap();
    let rows: Vec<Vec<Elem>> = (0..4)
        .map(|i| (0..8).map(|j| if j < 4 { (i == j) as Elem } else { (i != j - 4) as Elem }).collect())
        .collect();
    LinearCode::from_vecs(&f, &rows).unwrap()
}

/// `RM(r, m)`: evaluation vectors of all monomials of degree at most `r` at the
/// points of GF(2)^m in lexicographic order.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    if r > m || m > 16 {
        return Err(Error::LimitExceeded(format!("RM({r},{m}) needs r <= m <= 16")));
    }
    let n = 1usize << m;
    let k: usize = (0..=r).map(|i| crate::combinatorics::binomial(m, i) as usize).sum();
    let work = (k as u128).pow(2) * n as u128;
    if work > RM_WORK {
        return Err(Error::BudgetExceeded { required: work, budget: RM_WORK });
    }
    let f = Field::new(2).unwrap();
    let mut rows = Vec::with_capacity(k);
    for deg in 0..=r {
        crate::combinatorics::for_each_combination(m, deg, |vars| {
            // variable x_i is coordinate i of the point, x_1 most significant
            let mask = vars.iter().fold(0usize, |acc, &v| acc | 1 << (m - 1 - v));
            rows.push((0..n).map(|p| (p & mask == mask) as Elem).collect::<Vec<_>>());
        });
    }
    LinearCode::from_vecs(&f, &rows)
}

/// The bordered `(q+1) x (q+1)` matrix over {-1, 0, 1} built from the Legendre character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaleyMatrix {
    pub q: u64,
    pub entries: Vec<Vec<i8>>,
}

impl PaleyMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// The inner `q x q` block `Q`.
    pub fn q_part(&self) -> Vec<Vec<i8>> {
        self.entries[1..].iter().map(|r| r[1..].to_vec()).collect()
    }

    /// `C C^T` over the integers.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let c = &self.entries;
        c.iter()
            .map(|a| c.iter().map(|b| a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()).collect())
            .collect()
    }

    /// Entries reduced into GF(3), `-1` as 2.
    pub fn over_gf3(&self) -> Matrix {
        let f = Field::new(3).unwrap();
        let rows: Vec<Vec<i64>> = self.entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        Matrix::from_ints(&f, &rows).unwrap()
    }
}

pub fn paley_matrix(q: u64) -> Result<PaleyMatrix> {
    let field = Field::new(q)?;
    if q.is_multiple_of(2) {
        return Err(Error::EvenQ(q));
    }
    let chi = |x: Elem| field.chi(x).unwrap();
    let n = field.q();
    let minus_one = chi(field.neg(1));
    let mut entries = vec![vec![0i8; n + 1]; n + 1];
    for j in 1..=n {
        entries[0][j] = 1;
        entries[j][0] = minus_one;
    }
    for i in 0..n {
        for j in 0..n {
            entries[i + 1][j + 1] = chi(field.sub(j as Elem, i as Elem));
        }
    }
    let p = PaleyMatrix { q, entries };
    if q % 3 == 2 {
        let c = p.over_gf3();
        let prod = c.mul(&c.transpose())?;
        let f3 = c.field().clone();
        let minus_i = Matrix::from_ints(&f3, &(0..=n).map(|i| (0..=n).map(|j| -((i == j) as i64)).collect()).collect::<Vec<_>>())?;
        if prod != minus_i {
            return Err(Error::ConstructionFailed(format!("C C^T != -I over GF(3) for q = {q}")));
        }
    }
    Ok(p)
}

/// Euler's criterion `q^((n-1)/2) = 1 (mod n)`.
fn is_residue(q: u64, n: u64) -> bool {
    let (mut acc, mut base, mut e) = (1u64, q % n, (n - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        e >>= 1;
    }
    acc == 1
}

/// Row space of the circulant whose top row marks the nonzero squares mod `n`.
pub fn qr_code(n: u64, q: u64) -> Result<LinearCode> {
    let field = Field::new(q)?;
    if n < 3 || n.is_multiple_of(2) || !is_prime(n) {
        return Err(Error::LimitExceeded(format!("QR length must be an odd prime, got {n}")));
    }
    if n > 97 {
        return Err(Error::LimitExceeded(format!("QR length {n} exceeds 97")));
    }
    if !is_residue(q, n) {
        return Err(Error::NotResidue { n, q });
    }
    let n = n as usize;
    let mut top = vec![0 as Elem; n];
    for x in 1..n {
        top[x * x % n] = 1;
    }
    let rows: Vec<Vec<Elem>> = (0..n).map(|i| (0..n).map(|j| top[(j + n - i) % n]).collect()).collect();
    let code = LinearCode::from_vecs(&field, &rows)?;
    let expected = n.div_ceil(2);
    if code.k() != expected {
        return Err(Error::DimensionMismatch { rank: code.k(), expected });
    }
    Ok(code)
}

/// QR code together with a check of `d^2 >= n`.
pub fn qr_code_checked(n: u64, q: u64, budget: u128) -> Result<(LinearCode, usize)> {
    let code = qr_code(n, q)?;
    let d = crate::enumerators::min_distance(&code, budget)?;
    if (d * d) < n as usize {
        return Err(Error::ConstructionFailed(format!("QR({n},{q}) has d = {d} below the square root bound")));
    }
    Ok((code, d))
}

/// The ternary `[2(q+1), q+1]` code generated by `(I | C)` with `C` the Paley matrix.
pub fn pless_symmetry(q: u64) -> Result<LinearCode> {
    if q > 23 || q % 6 != 5 || prime_power(q).is_none() {
        return Err(Error::BadQ(q));
    }
    let c = paley_matrix(q)?.over_gf3();
    let g = Matrix::identity(c.field(), c.rows()).hconcat(&c)?;
    LinearCode::from_rows(&g)
}

/// The `[6,3,4]` hexacode over GF(4), generator `(I_3 | P)`.
pub fn hexacode() -> LinearCode {
    let f = Field::new(4).unwrap();
    // labels: 2 = w, 3 = w^2
    let p = [[1, 3, 2], [1, 2, 3], [1, 1, 1]];
    let rows: Vec<Vec<Elem>> = (0..3)
        .map(|i| {
            let mut r = vec![0; 6];
            r[i] = 1;
            r[3..].copy_from_slice(&p[i]);
            r
        })
        .collect();
    LinearCode::from_vecs(&f, &rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerators::{min_distance, weight_distribution};

    const B: u128 = 1 << 24;

    #[test]
    fn hamming_parameters() {
        let h = hamming(2, 3).unwrap();
        assert_eq!((h.n(), h.k()), (7, 4));
        assert_eq!(min_distance(&h, B).unwrap(), 3);
        let h = hamming(3, 2).unwrap();
        assert_eq!((h.n(), h.k()), (4, 2));
        assert_eq!(min_distance(&h, B).unwrap(), 3);
        assert!(matches!(hamming(2, 9), Err(Error::LimitExceeded(_))));
    }

    #[test]
    fn extended_hamming_is_self_dual() {
        let h = extended_hamming8();
        assert_eq!(weight_distribution(&h, B).unwrap().counts(), &[1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(h.duality_relation(), crate::code::DualityRelation::SelfDual);
        let ext = hamming(2, 3).unwrap().extend();
        assert_eq!(weight_distribution(&ext, B).unwrap(), weight_distribution(&h, B).unwrap());
    }

    #[test]
    fn reed_muller_codes() {
        let rm13 = reed_muller(1, 3).unwrap();
        assert_eq!(weight_distribution(&rm13, B).unwrap(), weight_distribution(&extended_hamming8(), B).unwrap());
        let rm0 = reed_muller(0, 5).unwrap();
        assert_eq!((rm0.n(), rm0.k()), (32, 1));
        assert_eq!(min_distance(&rm0, B).unwrap(), 32);
        let d = reed_muller(1, 4).unwrap().dual().unwrap();
        let rm24 = reed_muller(2, 4).unwrap();
        assert_eq!(d.k(), 11);
        assert_eq!(d, rm24);
    }

    #[test]
    fn paley_rows_and_identity() {
        let p = paley_matrix(5).unwrap();
        assert_eq!(p.q_part()[0], vec![0, 1, -1, -1, 1]);
        assert!(p.q_part().iter().enumerate().all(|(i, r)| r[i] == 0));
        for q in [3u64, 5, 7, 9, 11, 13] {
            let p = paley_matrix(q).unwrap();
            let g = p.gram();
            for (i, row) in g.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, if i == j { q as i64 } else { 0 }, "q = {q}");
                }
            }
        }
        assert_eq!(paley_matrix(4), Err(Error::EvenQ(4)));
    }

    #[test]
    fn qr_codes() {
        let c = qr_code(7, 2).unwrap();
        assert_eq!(weight_distribution(&c, B).unwrap(), weight_distribution(&hamming(2, 3).unwrap(), B).unwrap());
        assert!(c.is_cyclic());
        let (c, d) = qr_code_checked(23, 2, B).unwrap();
        assert_eq!((c.k(), d), (12, 7));
        let (c, d) = qr_code_checked(11, 3, B).unwrap();
        assert_eq!((c.k(), d), (6, 5));
        assert_eq!(qr_code(5, 2), Err(Error::NotResidue { n: 5, q: 2 }));
        assert!(matches!(qr_code(17, 2), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn pless_sym12() {
        let s = pless_symmetry(5).unwrap();
        assert_eq!((s.n(), s.k()), (12, 6));
        assert_eq!(s.duality_relation(), crate::code::DualityRelation::SelfDual);
        let wd = weight_distribution(&s, B).unwrap();
        assert_eq!(wd.pairs(), vec![(0, 1), (6, 264), (9, 440), (12, 24)]);
        assert_eq!(pless_symmetry(7), Err(Error::BadQ(7)));
    }

    #[test]
    fn hexacode_distribution() {
        let h = hexacode();
        assert_eq!(weight_distribution(&h, B).unwrap().pairs(), vec![(0, 1), (4, 45), (6, 18)]);
    }
}
