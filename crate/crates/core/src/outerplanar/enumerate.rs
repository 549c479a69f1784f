//! Triangulations of the fixed convex n-gon.
//!
//! The root triangle on the base side `{0, n-1}` has apex `k`; the two
//! sub-polygons `0..=k` and `k..=n-1` are triangulated independently. The
//! stream visits apexes in increasing order and, for each apex, the left
//! sub-polygon's triangulations in the outer loop. Each item is produced by
//! unranking its index in that order, so the stream is lazy, stack depth is
//! bounded by `n`, and uniform sampling reuses the same decoder.

use rand::Rng;

use super::Triangulation;

/// Catalan number `C_k`. Panics on overflow (`k > 130`).
pub fn catalan(k: usize) -> u128 {
    catalan_table(k)[k]
}

fn catalan_table(k: usize) -> Vec<u128> {
    let mut table = vec![1u128; k + 1];
    for m in 1..=k {
        table[m] = (0..m)
            .map(|i| table[i].checked_mul(table[m - 1 - i]).expect("Catalan overflow"))
            .fold(0u128, |acc, x| acc.checked_add(x).expect("Catalan overflow"));
    }
    table
}

/// Number of triangulations of the convex `n`-gon, `C_{n-2}`.
pub fn triangulation_count(n: usize) -> u128 {
    if n < 3 {
        0
    } else {
        catalan(n - 2)
    }
}

/// Lazy stream over triangulations of the `n`-gon.
#[derive(Debug, Clone)]
pub struct Triangulations {
    n: usize,
    next: u128,
    total: u128,
    dedupe: bool,
    table: Vec<u128>,
}

impl Triangulations {
    fn new(n: usize, dedupe: bool) -> Self {
        let total = triangulation_count(n);
        Self {
            n,
            next: 0,
            total,
            dedupe,
            table: catalan_table(n.saturating_sub(2)),
        }
    }

    /// Decodes the triangulation with the given index in stream order.
    pub fn unrank(&self, index: u128) -> Triangulation {
        assert!(index < self.total, "index {index} out of range");
        let mut diagonals = Vec::with_capacity(self.n - 3);
        self.unrank_into(0, self.n - 1, index, &mut diagonals);
        diagonals.sort_unstable();
        Triangulation::from_sorted_unchecked(self.n, diagonals)
    }

    fn unrank_into(&self, lo: usize, hi: usize, mut index: u128, out: &mut Vec<(usize, usize)>) {
        if hi - lo < 2 {
            return;
        }
        for apex in lo + 1..hi {
            let left = self.table[apex - lo - 1];
            let right = self.table[hi - apex - 1];
            let block = left * right;
            if index >= block {
                index -= block;
                continue;
            }
            if apex - lo >= 2 {
                out.push((lo, apex));
            }
            if hi - apex >= 2 {
                out.push((apex, hi));
            }
            self.unrank_into(lo, apex, index / right, out);
            self.unrank_into(apex, hi, index % right, out);
            return;
        }
        unreachable!("index within the sub-polygon count");
    }

    /// Total raw count, regardless of deduplication.
    pub fn raw_count(&self) -> u128 {
        self.total
    }
}

impl Iterator for Triangulations {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        while self.next < self.total {
            let t = self.unrank(self.next);
            self.next += 1;
            if !self.dedupe || t.is_canonical() {
                return Some(t);
            }
        }
        None
    }
}

/// Every triangulation of the `n`-gon, or one per dihedral class when
/// `dedupe` is set. Empty for `n < 3`.
pub fn enumerate_triangulations(n: usize, dedupe: bool) -> Triangulations {
    Triangulations::new(n, dedupe)
}

/// Uniformly random triangulation of the `n`-gon (`n >= 3`).
pub fn random_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Triangulation {
    let stream = Triangulations::new(n, false);
    let index = rng.gen_range(0..stream.raw_count());
    stream.unrank(index)
}
