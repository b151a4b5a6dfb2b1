//! Fraction-free sparse linear algebra over the integers.
//!
//! Vectors are sorted `(column, value)` lists without zeros. Rows stored in an
//! [`Echelon`] are primitive with a positive leading entry, so entries stay
//! small and no rational arithmetic is needed during elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::Rational;

pub type SparseVec = Vec<(usize, BigInt)>;

/// C(n, k), zero outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// `a*x - b*y`, dropping zeros.
pub fn combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Divides by the content and makes the leading entry positive.
pub fn make_primitive(v: &mut SparseVec) {
    let Some(first) = v.first() else { return };
    let negative = first.1.is_negative();
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if negative {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Clears denominators of a rational sparse vector.
pub fn integer_row(v: &[(usize, Rational)]) -> SparseVec {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    let mut out: SparseVec = v
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, x.numer() * (&l / x.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    make_primitive(&mut out);
    out
}

/// Row echelon form built incrementally. The pivot of a row is its first
/// (smallest) column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Eliminates leading entries until the leading column is not a pivot.
    pub fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        make_primitive(&mut v);
        while let Some((lead, coef)) = v.first() {
            let Some(r) = self.pivot_row[*lead] else { break };
            let row = &self.rows[r];
            let (a, b) = (row[0].1.clone(), coef.clone());
            v = combine(&a, &v, &b, row);
            make_primitive(&mut v);
        }
        v
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce_full(&self, mut v: SparseVec) -> SparseVec {
        make_primitive(&mut v);
        let mut k = 0;
        while k < v.len() {
            let col = v[k].0;
            if let Some(r) = self.pivot_row[col] {
                let row = &self.rows[r];
                let (a, b) = (row[0].1.clone(), v[k].1.clone());
                v = combine(&a, &v, &b, row);
                make_primitive(&mut v);
                // entries before position k are unchanged in column, so resume there
            } else {
                k += 1;
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_leading(v).is_empty()
    }

    /// Adds `v` to the row space. Returns the new pivot column, or `None` if
    /// `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let v = self.reduce_leading(v);
        let lead = v.first()?.0;
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(v);
        Some(lead)
    }

    pub fn insert_rational(&mut self, v: &[(usize, Rational)]) -> Option<usize> {
        self.insert(integer_row(v))
    }

    /// Reduced row echelon form: one row per pivot, pivot entry 1 and zeros in
    /// all other pivot columns. Sorted by pivot column.
    pub fn reduced_rows(&self) -> Vec<(usize, Vec<(usize, Rational)>)> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        let mut done: Vec<Option<SparseVec>> = vec![None; self.rows.len()];
        let mut done_pivot: Vec<Option<usize>> = vec![None; self.ncols];
        for &r in &order {
            let mut v = self.rows[r].clone();
            let mut k = 1;
            while k < v.len() {
                let col = v[k].0;
                if let Some(s) = done_pivot[col] {
                    let row = done[s].as_ref().unwrap();
                    let (a, b) = (row[0].1.clone(), v[k].1.clone());
                    v = combine(&a, &v, &b, row);
                    make_primitive(&mut v);
                } else {
                    k += 1;
                }
            }
            done_pivot[v[0].0] = Some(r);
            done[r] = Some(v);
        }
        let mut out: Vec<(usize, Vec<(usize, Rational)>)> = done
            .into_iter()
            .flatten()
            .map(|v| {
                let p = v[0].1.clone();
                let row = v
                    .iter()
                    .map(|(c, x)| (*c, Rational::new(x.clone(), p.clone())))
                    .collect();
                (v[0].0, row)
            })
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

/// Rank of a list of sparse rows with `ncols` columns.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of the kernel of the map sending the k-th basis vector to
/// `images[k]` (a vector with `target_dim` columns). Kernel vectors are
/// returned as sparse vectors over the source basis.
pub fn kernel(images: &[SparseVec], target_dim: usize) -> Vec<SparseVec> {
    kernel_and_image(images, target_dim).1
}

/// Kernel basis as in [`kernel`] together with an echelon basis of the image,
/// from a single elimination.
pub fn kernel_and_image(images: &[SparseVec], target_dim: usize) -> (Echelon, Vec<SparseVec>) {
    let k = images.len();
    let mut e = Echelon::new(target_dim + k);
    let mut image = Echelon::new(target_dim);
    let mut out = Vec::new();
    for (idx, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.push((target_dim + idx, BigInt::one()));
        if let Some(p) = e.insert(row) {
            let r = e.rows.last().unwrap();
            if p >= target_dim {
                out.push(r.iter().map(|(c, x)| (c - target_dim, x.clone())).collect());
            } else {
                // already reduced against earlier image rows, so it is a new pivot
                let mut v: SparseVec = r.iter().take_while(|(c, _)| *c < target_dim).cloned().collect();
                make_primitive(&mut v);
                image.pivot_row[p] = Some(image.rows.len());
                image.rows.push(v);
            }
        }
    }
    (image, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(v: &[i64]) -> SparseVec {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, BigInt::from(x)))
            .collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(4, -1), 0);
    }

    #[test]
    fn echelon_rank_and_rref() {
        let mut e = Echelon::new(3);
        assert_eq!(e.insert(sv(&[2, 4, 6])), Some(0));
        assert_eq!(e.insert(sv(&[1, 2, 4])), Some(2));
        assert_eq!(e.insert(sv(&[3, 6, 11])), None);
        let rr = e.reduced_rows();
        assert_eq!(rr.len(), 2);
        assert_eq!(rr[0].1, vec![(0, Rational::one()), (1, Rational::from_integer(2.into()))]);
        assert_eq!(rr[1].1, vec![(2, Rational::one())]);
    }

    #[test]
    fn kernel_of_small_map() {
        // map e0 -> (1,1), e1 -> (2,2), e2 -> (0,1)
        let ims = vec![sv(&[1, 1]), sv(&[2, 2]), sv(&[0, 1])];
        let ker = kernel(&ims, 2);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        let mut img = [BigInt::zero(), BigInt::zero()];
        for (c, x) in v {
            for (t, y) in &ims[*c] {
                img[*t] += x * y;
            }
        }
        assert!(img.iter().all(|x| x.is_zero()));
    }

    fn dense_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<Rational>> = m
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let cols = a.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for j in 0..cols {
                        let v = &f * &a[rank][j];
                        a[r][j] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn rank_matches_dense_elimination(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            let r = rank(m.iter().map(|row| sv(row)), 5);
            prop_assert_eq!(r, dense_rank(&m));
        }

        #[test]
        fn kernel_dimension_is_nullity(m in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..6)) {
            let ims: Vec<SparseVec> = m.iter().map(|row| sv(row)).collect();
            let (img, ker) = kernel_and_image(&ims, 4);
            prop_assert_eq!(ker.len(), m.len() - dense_rank(&m));
            prop_assert_eq!(img.rank(), dense_rank(&m));
            for row in &ims {
                prop_assert!(img.contains(row.clone()));
            }
        }
    }
}
