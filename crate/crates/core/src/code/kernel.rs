//! Exhaustive codeword walks over packed word representations.
//!
//! Binary words pack into a `u128`; GF(3) and GF(4) words use two 64-bit
//! planes; every other field falls back to a byte vector driven by the field
//! tables. The message space is split on its leading digits into chunks that
//! rayon walks independently; results are merged in chunk order, so every
//! reduction is independent of the thread count.

use rayon::prelude::*;

use crate::field::{Elem, Field};

pub(crate) trait Word: Clone + Send + Sync {
    type Ctx: Sync;
    fn pack(v: &[Elem], ctx: &Self::Ctx) -> Self;
    fn add_assign(&mut self, o: &Self, ctx: &Self::Ctx);
    fn weight(&self) -> u32;
    fn support_into(&self, out: &mut Vec<u32>);
}

#[derive(Clone, Copy, Default)]
pub(crate) struct Bin(u128);

impl Word for Bin {
    type Ctx = ();
    fn pack(v: &[Elem], _: &()) -> Self {
        Bin(v.iter().enumerate().fold(0, |acc, (i, &x)| acc | ((x as u128 & 1) << i)))
    }
    #[inline(always)]
    fn add_assign(&mut self, o: &Self, _: &()) {
        self.0 ^= o.0;
    }
    #[inline(always)]
    fn weight(&self) -> u32 {
        self.0.count_ones()
    }
    fn support_into(&self, out: &mut Vec<u32>) {
        bits_into(self.0, out)
    }
}

/// GF(3) bit-sliced: `one` marks coordinates equal to 1, `two` those equal to 2.
#[derive(Clone, Copy, Default)]
pub(crate) struct Ter {
    one: u64,
    two: u64,
}

impl Word for Ter {
    type Ctx = ();
    fn pack(v: &[Elem], _: &()) -> Self {
        let mut w = Ter::default();
        for (i, &x) in v.iter().enumerate() {
            match x {
                1 => w.one |= 1 << i,
                2 => w.two |= 1 << i,
                _ => {}
            }
        }
        w
    }
    #[inline(always)]
    fn add_assign(&mut self, o: &Self, _: &()) {
        let (a1, a2, b1, b2) = (self.one, self.two, o.one, o.two);
        let t = (a1 | b2) ^ (a2 | b1);
        self.one = (a2 | b2) ^ t;
        self.two = (a1 | b1) ^ t;
    }
    #[inline(always)]
    fn weight(&self) -> u32 {
        (self.one | self.two).count_ones()
    }
    fn support_into(&self, out: &mut Vec<u32>) {
        bits_into((self.one | self.two) as u128, out)
    }
}

/// GF(4) as two planes of polynomial coefficients; addition is plane-wise XOR.
#[derive(Clone, Copy, Default)]
pub(crate) struct Quat {
    lo: u64,
    hi: u64,
}

impl Word for Quat {
    type Ctx = ();
    fn pack(v: &[Elem], _: &()) -> Self {
        let mut w = Quat::default();
        for (i, &x) in v.iter().enumerate() {
            w.lo |= (x as u64 & 1) << i;
            w.hi |= ((x as u64 >> 1) & 1) << i;
        }
        w
    }
    #[inline(always)]
    fn add_assign(&mut self, o: &Self, _: &()) {
        self.lo ^= o.lo;
        self.hi ^= o.hi;
    }
    #[inline(always)]
    fn weight(&self) -> u32 {
        (self.lo | self.hi).count_ones()
    }
    fn support_into(&self, out: &mut Vec<u32>) {
        bits_into((self.lo | self.hi) as u128, out)
    }
}

#[derive(Clone)]
pub(crate) struct Generic(Vec<Elem>);

impl Word for Generic {
    type Ctx = Field;
    fn pack(v: &[Elem], _: &Field) -> Self {
        Generic(v.to_vec())
    }
    fn add_assign(&mut self, o: &Self, f: &Field) {
        for (x, &y) in self.0.iter_mut().zip(&o.0) {
            *x = f.add(*x, y);
        }
    }
    fn weight(&self) -> u32 {
        self.0.iter().filter(|&&x| x != 0).count() as u32
    }
    fn support_into(&self, out: &mut Vec<u32>) {
        out.clear();
        out.extend(self.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i as u32));
    }
}

fn bits_into(mut m: u128, out: &mut Vec<u32>) {
    out.clear();
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
}

/// Generator rows with precomputed odometer steps: `steps[i][a]` is
/// `(succ(a) - a) * row_i`, where `succ` cycles through element indices.
struct Walk<W: Word> {
    q: usize,
    rows: Vec<Vec<Elem>>,
    steps: Vec<Vec<W>>,
    binary_rows: Vec<W>,
}

impl<W: Word> Walk<W> {
    fn new(field: &Field, rows: &[Vec<Elem>], ctx: &W::Ctx) -> Self {
        let q = field.q();
        let steps = rows
            .iter()
            .map(|row| {
                (0..q)
                    .map(|a| {
                        let next = ((a + 1) % q) as Elem;
                        let s = field.sub(next, a as Elem);
                        let v: Vec<Elem> = row.iter().map(|&x| field.mul(s, x)).collect();
                        W::pack(&v, ctx)
                    })
                    .collect()
            })
            .collect();
        let binary_rows = rows.iter().map(|r| W::pack(r, ctx)).collect();
        Walk { q, rows: rows.to_vec(), steps, binary_rows }
    }

    /// Visits every codeword whose leading `split` message digits spell `chunk`
    /// (base q, first digit most significant).
    fn walk_chunk(&self, field: &Field, ctx: &W::Ctx, split: usize, chunk: usize, visit: &mut impl FnMut(&W)) {
        let k = self.rows.len();
        let n = self.rows.first().map_or(0, |r| r.len());
        let mut start = vec![0 as Elem; n];
        let mut c = chunk;
        for i in (0..split).rev() {
            let d = (c % self.q) as Elem;
            c /= self.q;
            if d != 0 {
                for (x, &g) in start.iter_mut().zip(&self.rows[i]) {
                    *x = field.add(*x, field.mul(d, g));
                }
            }
        }
        let mut w = W::pack(&start, ctx);
        let free = k - split;
        visit(&w);
        if free == 0 {
            return;
        }
        if self.q == 2 {
            // Gray code: step i flips the row indexed by the trailing zeros of i.
            let total = 1u64 << free;
            for i in 1..total {
                let r = split + i.trailing_zeros() as usize;
                w.add_assign(&self.binary_rows[r], ctx);
                visit(&w);
            }
            return;
        }
        let mut digits = vec![0usize; free];
        loop {
            let mut i = 0;
            loop {
                if i == free {
                    return;
                }
                let a = digits[i];
                w.add_assign(&self.steps[split + i][a], ctx);
                digits[i] = if a + 1 == self.q { 0 } else { a + 1 };
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            visit(&w);
        }
    }
}

fn split_for(q: usize, k: usize) -> usize {
    let mut s = 0;
    let mut chunks = 1usize;
    while s < k && chunks < 256 {
        chunks *= q;
        s += 1;
    }
    s
}

fn run<W: Word, T: Send>(
    field: &Field,
    rows: &[Vec<Elem>],
    ctx: &W::Ctx,
    init: impl Fn() -> T + Sync,
    visit: impl Fn(&mut T, &W) + Sync,
) -> Vec<T> {
    let walk = Walk::<W>::new(field, rows, ctx);
    let split = split_for(field.q(), rows.len());
    let chunks = field.q().pow(split as u32);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut acc = init();
            walk.walk_chunk(field, ctx, split, chunk, &mut |w: &W| visit(&mut acc, w));
            acc
        })
        .collect()
}

fn census_with<W: Word>(field: &Field, rows: &[Vec<Elem>], n: usize, ctx: &W::Ctx) -> Vec<u128> {
    let parts = run::<W, Vec<u64>>(field, rows, ctx, || vec![0; n + 1], |h, w| h[w.weight() as usize] += 1);
    let mut total = vec![0u128; n + 1];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c as u128;
        }
    }
    total
}

fn supports_with<W: Word>(field: &Field, rows: &[Vec<Elem>], ctx: &W::Ctx, weight: u32) -> Vec<Vec<u32>> {
    let parts = run::<W, (Vec<Vec<u32>>, Vec<u32>)>(
        field,
        rows,
        ctx,
        || (Vec::new(), Vec::new()),
        |(found, scratch), w| {
            if w.weight() == weight {
                w.support_into(scratch);
                found.push(scratch.clone());
            }
        },
    );
    let mut all: Vec<Vec<u32>> = parts.into_iter().flat_map(|(f, _)| f).collect();
    all.sort_unstable();
    all.dedup();
    all
}

enum Repr {
    Bin,
    Ter,
    Quat,
    Generic,
}

fn repr(field: &Field, n: usize) -> Repr {
    match field.q() {
        2 if n <= 128 => Repr::Bin,
        3 if n <= 64 => Repr::Ter,
        4 if n <= 64 => Repr::Quat,
        _ => Repr::Generic,
    }
}

/// Weight census `A_0..A_n` of the row space of `rows` (assumed independent).
pub(crate) fn weight_census(field: &Field, rows: &[Vec<Elem>], n: usize) -> Vec<u128> {
    match repr(field, n) {
        Repr::Bin => census_with::<Bin>(field, rows, n, &()),
        Repr::Ter => census_with::<Ter>(field, rows, n, &()),
        Repr::Quat => census_with::<Quat>(field, rows, n, &()),
        Repr::Generic => census_with::<Generic>(field, rows, n, field),
    }
}

/// Distinct supports of the codewords of the given weight, sorted.
pub(crate) fn supports_of_weight(field: &Field, rows: &[Vec<Elem>], n: usize, weight: usize) -> Vec<Vec<u32>> {
    let w = weight as u32;
    match repr(field, n) {
        Repr::Bin => supports_with::<Bin>(field, rows, &(), w),
        Repr::Ter => supports_with::<Ter>(field, rows, &(), w),
        Repr::Quat => supports_with::<Quat>(field, rows, &(), w),
        Repr::Generic => supports_with::<Generic>(field, rows, field, w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unpack_ter(w: Ter) -> Vec<Elem> {
        (0..4).map(|i| ((w.one >> i) & 1) as Elem + 2 * ((w.two >> i) & 1) as Elem).collect()
    }

    #[test]
    fn ternary_bitslice_matches_tables() {
        let f = Field::new(3).unwrap();
        for a in 0..81usize {
            for b in 0..81usize {
                let va: Vec<Elem> = (0..4).map(|i| (a / 3usize.pow(i) % 3) as Elem).collect();
                let vb: Vec<Elem> = (0..4).map(|i| (b / 3usize.pow(i) % 3) as Elem).collect();
                let mut w = Ter::pack(&va, &());
                w.add_assign(&Ter::pack(&vb, &()), &());
                let expect: Vec<Elem> = va.iter().zip(&vb).map(|(&x, &y)| f.add(x, y)).collect();
                assert_eq!(unpack_ter(w), expect);
            }
        }
    }

    #[test]
    fn quaternary_planes_match_tables() {
        let f = Field::new(4).unwrap();
        for a in 0..4u8 {
            for b in 0..4u8 {
                let mut w = Quat::pack(&[a], &());
                w.add_assign(&Quat::pack(&[b], &()), &());
                assert_eq!((w.lo | (w.hi << 1)) as u8, f.add(a, b));
            }
        }
    }

    #[test]
    fn representations_agree() {
        // same GF(3) code through the bit-sliced and the table-driven walkers
        let f = Field::new(3).unwrap();
        let rows = vec![
            vec![1, 0, 0, 1, 2, 1, 1],
            vec![0, 1, 0, 2, 2, 0, 1],
            vec![0, 0, 1, 1, 1, 2, 0],
        ];
        let a = census_with::<Ter>(&f, &rows, 7, &());
        let b = census_with::<Generic>(&f, &rows, 7, &f);
        assert_eq!(a, b);
        assert_eq!(a.iter().sum::<u128>(), 27);
        let sa = supports_with::<Ter>(&f, &rows, &(), 4);
        let sb = supports_with::<Generic>(&f, &rows, &f, 4);
        assert_eq!(sa, sb);
    }
}
