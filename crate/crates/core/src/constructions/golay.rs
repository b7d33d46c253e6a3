use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::Matrix;

use super::catalog::catalog_design;
use super::codes::{hexacode, paley_matrix, qr_code};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GolayVariant {
    B23Qr,
    B24Lexicode,
    B24Bordered,
    B24Icosahedron,
    B24Hexacode,
    B24Extend,
    T11Qr,
    T11Circulant,
    T12Extend,
}

impl GolayVariant {
    pub const ALL: [GolayVariant; 9] = [
        GolayVariant::B23Qr,
        GolayVariant::B24Lexicode,
        GolayVariant::B24Bordered,
        GolayVariant::B24Icosahedron,
        GolayVariant::B24Hexacode,
        GolayVariant::B24Extend,
        GolayVariant::T11Qr,
        GolayVariant::T11Circulant,
        GolayVariant::T12Extend,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GolayVariant::B23Qr => "b23_qr",
            GolayVariant::B24Lexicode => "b24_lexicode",
            GolayVariant::B24Bordered => "b24_bordered",
            GolayVariant::B24Icosahedron => "b24_icosahedron",
            GolayVariant::B24Hexacode => "b24_hexacode",
            GolayVariant::B24Extend => "b24_extend",
            GolayVariant::T11Qr => "t11_qr",
            GolayVariant::T11Circulant => "t11_circulant",
            GolayVariant::T12Extend => "t12_extend",
        }
    }

    /// Expected `(q, n, k, d)`.
    pub fn params(self) -> (usize, usize, usize, usize) {
        match self {
            GolayVariant::B23Qr => (2, 23, 12, 7),
            GolayVariant::T11Qr | GolayVariant::T11Circulant => (3, 11, 6, 5),
            GolayVariant::T12Extend => (3, 12, 6, 6),
            _ => (2, 24, 12, 8),
        }
    }
}

impl fmt::Display for GolayVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GolayVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GolayVariant::ALL.into_iter().find(|v| v.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Builds the requested variant and checks its length, dimension and minimum distance.
pub fn golay(variant: GolayVariant) -> Result<LinearCode> {
    let code = match variant {
        GolayVariant::B23Qr => qr_code(23, 2)?,
        GolayVariant::B24Lexicode => lexicode(24, 8)?,
        GolayVariant::B24Bordered => bordered()?,
        GolayVariant::B24Icosahedron => icosahedron()?,
        GolayVariant::B24Hexacode => mog()?,
        GolayVariant::B24Extend => qr_code(23, 2)?.extend(),
        GolayVariant::T11Qr => qr_code(11, 3)?,
        GolayVariant::T11Circulant => ternary_circulant()?,
        GolayVariant::T12Extend => qr_code(11, 3)?.extend(),
    };
    let (q, n, k, d) = variant.params();
    let fail = |what: &str, got: usize, want: usize| {
        Err(Error::ConstructionFailed(format!("{variant}: {what} = {got}, expected {want}")))
    };
    if code.q() != q {
        return fail("q", code.q(), q);
    }
    if code.n() != n {
        return fail("n", code.n(), n);
    }
    if code.k() != k {
        return fail("k", code.k(), k);
    }
    let got = crate::enumerators::min_distance(&code, crate::code::DEFAULT_BUDGET)?;
    if got != d {
        return fail("d", got, d);
    }
    Ok(code)
}

fn systematic(field: &Field, p: &[Vec<i64>]) -> Result<LinearCode> {
    let p = Matrix::from_ints(field, p)?;
    LinearCode::from_rows(&Matrix::identity(field, p.rows()).hconcat(&p)?)
}

/// Greedy code of length `n` and minimum distance `d`: each new word is the
/// lexicographically least word (coordinate 0 most significant) at distance at
/// least `d` from everything chosen. Because the result is linear, accepting `x`
/// also accepts `x + C`, and the covered region grows by its own translate.
pub fn lexicode(n: usize, d: usize) -> Result<LinearCode> {
    if n == 0 || n > 28 || d == 0 {
        return Err(Error::LimitExceeded(format!("lexicode needs 1 <= n <= 28 and d >= 1, got n = {n}, d = {d}")));
    }
    let size = 1usize << n;
    let mut covered = vec![false; size];
    covered[0] = true;
    for r in 1..d.min(n + 1) {
        crate::combinatorics::for_each_combination(n, r, |pos| {
            covered[pos.iter().fold(0, |acc, &p| acc | 1 << p)] = true;
        });
    }
    let mut basis = Vec::new();
    let mut next = 0;
    while let Some(off) = covered[next..].iter().position(|&c| !c) {
        let x = next + off;
        basis.push(x);
        for i in 0..size {
            let j = i ^ x;
            if i < j && covered[i] != covered[j] {
                covered[i] = true;
                covered[j] = true;
            }
        }
        next = x + 1;
    }
    let f = Field::new(2).unwrap();
    if basis.is_empty() {
        return Err(Error::ZeroCode);
    }
    let rows: Vec<Vec<Elem>> = basis.iter().map(|&x| (0..n).map(|j| ((x >> (n - 1 - j)) & 1) as Elem).collect()).collect();
    LinearCode::from_vecs(&f, &rows)
}

/// `(I_12 | P)` with `P` the 2-(11,6,3) incidence matrix bordered by a zero corner and ones.
fn bordered() -> Result<LinearCode> {
    let d = catalog_design("design_11_6_3")?;
    let mut p = vec![vec![0i64; 12]; 12];
    for j in 1..12 {
        p[0][j] = 1;
        p[j][0] = 1;
    }
    for (i, b) in d.blocks().iter().enumerate() {
        for &x in b {
            p[i + 1][x as usize + 1] = 1;
        }
    }
    systematic(&Field::new(2).unwrap(), &p)
}

/// Icosahedron adjacency with vertices `t, b, u0..u4, l0..l4`.
pub fn icosahedron_adjacency() -> Vec<Vec<u8>> {
    let (t, b) = (0, 1);
    let u = |i: usize| 2 + i % 5;
    let l = |i: usize| 7 + i % 5;
    let mut a = vec![vec![0u8; 12]; 12];
    let mut edge = |x: usize, y: usize| {
        a[x][y] = 1;
        a[y][x] = 1;
    };
    for i in 0..5 {
        edge(t, u(i));
        edge(b, l(i));
        edge(u(i), u(i + 1));
        edge(l(i), l(i + 1));
        edge(u(i), l(i));
        edge(u(i), l(i + 1));
    }
    a
}

fn icosahedron() -> Result<LinearCode> {
    let a = icosahedron_adjacency();
    let edges: usize = a.iter().flatten().map(|&x| x as usize).sum::<usize>() / 2;
    if edges != 30 || a.iter().any(|r| r.iter().filter(|&&x| x == 1).count() != 5) {
        return Err(Error::ConstructionFailed("icosahedron is not 5-regular with 30 edges".into()));
    }
    let p: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|&x| 1 - x as i64).collect()).collect();
    systematic(&Field::new(2).unwrap(), &p)
}

/// Membership in the MOG description: coordinate `4c + r` is cell (row r, column c)
/// of a 4x6 array; every column has the parity of row 0, and
/// `m1 + w m2 + w^2 m3` is a hexacode word.
pub fn mog_member(word: u32, in_hexacode: &[bool]) -> bool {
    let row0_parity = (0..6).map(|c| word >> (4 * c) & 1).sum::<u32>() & 1;
    let mut key = 0usize;
    for c in 0..6 {
        let col = (word >> (4 * c)) & 0xf;
        if col.count_ones() & 1 != row0_parity {
            return false;
        }
        // labels 1, w = 2, w^2 = 3 add as XOR
        let (m1, m2, m3) = (col >> 1 & 1, col >> 2 & 1, col >> 3 & 1);
        let x = m1 ^ (m2 * 2) ^ (m3 * 3);
        key = key * 4 + x as usize;
    }
    in_hexacode[key]
}

/// Hexacode membership indexed by `sum x_i 4^(5-i)`.
pub fn hexacode_table() -> Vec<bool> {
    let h = hexacode();
    let mut table = vec![false; 4096];
    for w in h.enumerate(64).unwrap() {
        table[w.iter().fold(0usize, |acc, &x| acc * 4 + x as usize)] = true;
    }
    table
}

fn mog() -> Result<LinearCode> {
    let table = hexacode_table();
    let words: Vec<u32> = (0u32..1 << 24).into_par_iter().filter(|&w| mog_member(w, &table)).collect();
    if words.len() != 4096 {
        return Err(Error::ConstructionFailed(format!("{} arrays satisfy the MOG rules, expected 4096", words.len())));
    }
    let rows: Vec<Vec<Elem>> = words.iter().map(|&w| (0..24).map(|j| (w >> j & 1) as Elem).collect()).collect();
    let code = LinearCode::from_vecs(&Field::new(2).unwrap(), &rows)?;
    if code.k() != 12 {
        return Err(Error::ConstructionFailed(format!("MOG words span dimension {}", code.k())));
    }
    Ok(code)
}

/// `(I_6 | P)` over GF(3), `P` the order-5 character matrix under a row of ones.
fn ternary_circulant() -> Result<LinearCode> {
    let q = paley_matrix(5)?.q_part();
    let mut p = vec![vec![1i64; 5]];
    p.extend(q.iter().map(|r| r.iter().map(|&x| x as i64).collect::<Vec<_>>()));
    systematic(&Field::new(3).unwrap(), &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::distance;
    use crate::enumerators::weight_distribution;

    fn naive_lexicode(n: usize, d: usize) -> Vec<Vec<Elem>> {
        let mut chosen: Vec<Vec<Elem>> = Vec::new();
        for x in 0..1usize << n {
            let w: Vec<Elem> = (0..n).map(|j| ((x >> (n - 1 - j)) & 1) as Elem).collect();
            if chosen.iter().all(|c| distance(c, &w) >= d) {
                chosen.push(w);
            }
        }
        chosen
    }

    #[test]
    fn lexicode_matches_greedy_scan() {
        for (n, d) in [(7, 3), (8, 4), (12, 4), (13, 5), (14, 6)] {
            let code = lexicode(n, d).unwrap();
            let mut fast: Vec<Vec<Elem>> = code.enumerate(1 << 20).unwrap().collect();
            let mut slow = naive_lexicode(n, d);
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "n = {n}, d = {d}");
        }
    }

    #[test]
    fn variant_names_round_trip() {
        for v in GolayVariant::ALL {
            assert_eq!(v.name().parse::<GolayVariant>().unwrap(), v);
        }
        assert!("b25".parse::<GolayVariant>().is_err());
    }

    #[test]
    fn icosahedron_is_regular() {
        let a = icosahedron_adjacency();
        assert!(a.iter().all(|r| r.iter().filter(|&&x| x == 1).count() == 5));
        assert!((0..12).all(|i| a[i][i] == 0));
    }

    #[test]
    fn small_binary_variants() {
        for v in [GolayVariant::B24Bordered, GolayVariant::B24Icosahedron, GolayVariant::B24Extend] {
            let c = golay(v).unwrap();
            let wd = weight_distribution(&c, 1 << 24).unwrap();
            assert_eq!(wd.pairs(), vec![(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)], "{v}");
        }
    }

    #[test]
    fn ternary_variants_agree() {
        let a = weight_distribution(&golay(GolayVariant::T11Qr).unwrap(), 1 << 20).unwrap();
        let b = weight_distribution(&golay(GolayVariant::T11Circulant).unwrap(), 1 << 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pairs(), vec![(0, 1), (5, 132), (6, 132), (8, 330), (9, 110), (11, 24)]);
    }

    #[test]
    fn mog_rejects_single_bits() {
        let table = hexacode_table();
        assert!(mog_member(0, &table));
        assert!((0..24).all(|j| !mog_member(1 << j, &table)));
    }
}
