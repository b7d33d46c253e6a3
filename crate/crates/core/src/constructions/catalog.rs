use crate::design::Design;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

use super::codes::{all_vectors, projective_points};

pub const CATALOG_DESIGNS: [&str; 5] = ["fano", "sts9", "sqs8", "paley_biplane_11", "design_11_6_3"];

const FANO: [[u32; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [1, 5, 6], [2, 6, 7], [1, 3, 7]];

const STS9: [[u32; 3]; 12] = [
    [1, 2, 3],
    [4, 5, 6],
    [7, 8, 9],
    [1, 4, 7],
    [2, 5, 8],
    [3, 6, 9],
    [1, 5, 9],
    [2, 6, 7],
    [3, 4, 8],
    [1, 6, 8],
    [2, 4, 9],
    [3, 5, 7],
];

fn one_based<const K: usize>(blocks: &[[u32; K]]) -> Vec<Vec<u32>> {
    blocks.iter().map(|b| b.iter().map(|&x| x - 1).collect()).collect()
}

/// Cube vertices `(x, y, z)` labeled `4x + 2y + z`; blocks are the six faces,
/// the six planes through two opposite edges, and the two inscribed tetrahedra.
fn sqs8() -> Vec<Vec<u32>> {
    let coord = |p: u32, i: u32| (p >> (2 - i)) & 1;
    let mut blocks = Vec::new();
    for i in 0..3 {
        for val in 0..2 {
            blocks.push((0..8).filter(|&p| coord(p, i) == val).collect());
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        for same in [true, false] {
            blocks.push((0..8).filter(|&p| (coord(p, i) == coord(p, j)) == same).collect());
        }
    }
    for parity in 0..2 {
        blocks.push((0..8u32).filter(|&p| p.count_ones() % 2 == parity).collect());
    }
    blocks
}

fn paley_biplane_11() -> Vec<Vec<u32>> {
    const QR: [u32; 5] = [1, 3, 4, 5, 9];
    (0..11).map(|i| QR.iter().map(|&r| (r + i) % 11).collect()).collect()
}

pub fn catalog_design(name: &str) -> Result<Design> {
    let (v, blocks) = match name {
        "fano" => (7, one_based(&FANO)),
        "sts9" => (9, one_based(&STS9)),
        "sqs8" => (8, sqs8()),
        "paley_biplane_11" => (11, paley_biplane_11()),
        "design_11_6_3" => return crate::design::complement(&catalog_design("paley_biplane_11")?),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Design::new(v, blocks)
}

/// Calls `f` with an RREF basis of every `s`-dimensional subspace of GF(q)^d.
fn for_each_subspace(field: &Field, d: usize, s: usize, mut f: impl FnMut(&[Vec<Elem>], &[usize])) {
    let q = field.q();
    crate::combinatorics::for_each_combination(d, s, |pivots| {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (p + 1..d).filter(|j| !pivots.contains(j)).map(move |j| (r, j)))
            .collect();
        let mut rows: Vec<Vec<Elem>> = pivots
            .iter()
            .map(|&p| {
                let mut r = vec![0; d];
                r[p] = 1;
                r
            })
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            for (&(r, j), &x) in free.iter().zip(&digits) {
                rows[r][j] = x as Elem;
            }
            f(&rows, pivots);
            let Some(pos) = digits.iter().rposition(|&x| x + 1 < q) else { break };
            digits[pos] += 1;
            digits[pos + 1..].iter_mut().for_each(|x| *x = 0);
        }
    });
}

fn combine(field: &Field, coeffs: &[Elem], rows: &[Vec<Elem>], out: &mut [Elem]) {
    out.iter_mut().for_each(|x| *x = 0);
    for (&c, row) in coeffs.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
}

fn index(q: usize, v: &[Elem]) -> usize {
    v.iter().fold(0, |acc, &x| acc * q + x as usize)
}

/// Points and `i`-dimensional projective subspaces of PG(d-1, q).
pub fn pg_design(d: usize, q: u64, i: usize) -> Result<Design> {
    let field = Field::new(q)?;
    if d < 3 || i < 1 || i > d - 2 {
        return Err(Error::LimitExceeded(format!("pg_design needs d >= 3 and 1 <= i <= d-2, got d = {d}, i = {i}")));
    }
    let qn = field.q();
    let too_big = || Error::LimitExceeded(format!("PG({}, {q}) has more than 4096 points", d - 1));
    let total = (qn as u64).checked_pow(d as u32).ok_or_else(too_big)?;
    if (total - 1) / (q - 1) > 4096 {
        return Err(too_big());
    }
    let points = projective_points(qn, d);
    let mut label = vec![u32::MAX; total as usize];
    for (idx, p) in points.iter().enumerate() {
        label[index(qn, p)] = idx as u32;
    }
    let coeffs = projective_points(qn, i + 1);
    let mut blocks = Vec::new();
    let mut buf = vec![0; d];
    for_each_subspace(&field, d, i + 1, |rows, _| {
        // leading coefficient 1 on an RREF basis gives a normalized vector
        let block = coeffs
            .iter()
            .map(|c| {
                combine(&field, c, rows, &mut buf);
                label[index(qn, &buf)]
            })
            .collect();
        blocks.push(block);
    });
    Design::new(points.len(), blocks)
}

/// Points and cosets of `i`-dimensional subspaces of AG(d, q).
pub fn ag_design(d: usize, q: u64, i: usize) -> Result<Design> {
    let field = Field::new(q)?;
    if d < 2 || i < 1 || i > d - 1 {
        return Err(Error::LimitExceeded(format!("ag_design needs d >= 2 and 1 <= i <= d-1, got d = {d}, i = {i}")));
    }
    let qn = field.q();
    match (qn as u64).checked_pow(d as u32) {
        Some(total) if total <= 4096 => {}
        _ => return Err(Error::LimitExceeded(format!("AG({d}, {q}) has more than 4096 points"))),
    }
    let coeffs: Vec<Vec<Elem>> = all_vectors(qn, i).collect();
    let shifts: Vec<Vec<Elem>> = all_vectors(qn, d - i).collect();
    let mut blocks = Vec::new();
    let mut buf = vec![0; d];
    let mut rep = vec![0; d];
    for_each_subspace(&field, d, i, |rows, pivots| {
        let span: Vec<Vec<Elem>> = coeffs
            .iter()
            .map(|c| {
                combine(&field, c, rows, &mut buf);
                buf.clone()
            })
            .collect();
        let others: Vec<usize> = (0..d).filter(|j| !pivots.contains(j)).collect();
        for s in &shifts {
            rep.iter_mut().for_each(|x| *x = 0);
            for (&j, &x) in others.iter().zip(s) {
                rep[j] = x;
            }
            let block = span
                .iter()
                .map(|u| {
                    let v: Vec<Elem> = u.iter().zip(&rep).map(|(&a, &b)| field.add(a, b)).collect();
                    index(qn, &v) as u32
                })
                .collect();
            blocks.push(block);
        }
    });
    Design::new(qn.pow(d as u32), blocks)
}
