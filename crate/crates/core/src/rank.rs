//! Exact matrix rank over the rationals (fraction-free elimination) and over
//! prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product; `None` on overflow or shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out
                        .get(r, c)
                        .checked_add(a.checked_mul(other.get(k, c))?)?;
                    out.set(r, c, v);
                }
            }
        }
        Some(out)
    }
}

/// Rank over the rationals.
///
/// Runs fraction-free (Bareiss) elimination in `i128`, restarting with
/// arbitrary-precision integers if an intermediate minor overflows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut small: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(rank) = bareiss_rank(&mut small) {
        return rank;
    }
    let mut big: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(&mut big).expect("arbitrary-precision elimination cannot overflow")
}

trait ExactInt: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a * b - c * d) / e`, exact; `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?.checked_div(*e)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

/// Row-echelon Bareiss elimination; every stored entry is a minor of the
/// input, so each division is exact.
fn bareiss_rank<T: ExactInt>(a: &mut [Vec<T>]) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = T::cross_div(&a[rank][c], &a[r][k], &a[r][c], &a[rank][k], &prev)?;
            }
            a[r][c] = T::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over `GF(p)`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let p128 = i128::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .map(|&x| (i128::from(x).rem_euclid(p128)) as u64)
                .collect()
        })
        .collect();
    let mul = |x: u64, y: u64| ((u128::from(x) * u128::from(y)) % u128::from(p)) as u64;
    let inv = |x: u64| pow_mod(x, p - 2, p);
    let mut rank = 0;
    for c in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(pr) = (rank..m.rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let pivot_inv = inv(a[rank][c]);
        for r in rank + 1..m.rows {
            if a[r][c] == 0 {
                continue;
            }
            let factor = mul(a[r][c], pivot_inv);
            for k in c..m.cols {
                let sub = mul(factor, a[rank][k]);
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((u128::from(acc) * u128::from(base)) % u128::from(p)) as u64;
        }
        base = ((u128::from(base) * u128::from(base)) % u128::from(p)) as u64;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 7), 2);
        assert_eq!(rank_rational(&IntMatrix::zeros(3, 4)), 0);
        assert_eq!(rank_rational(&IntMatrix::zeros(0, 4)), 0);
        assert_eq!(rank_rational(&IntMatrix::zeros(4, 0)), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: full rank over Q, rank 1 over GF(2).
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Rows of powers make the minors grow past i128.
        let rows: Vec<Vec<i64>> = (0..12)
            .map(|r| (0..12).map(|c| ((r + 2) as i64).pow(c as u32)).collect())
            .collect();
        let m = IntMatrix::from_rows(&rows);
        let mut small: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        assert!(bareiss_rank(&mut small).is_none());
        assert_eq!(rank_rational(&m), 12);
    }

    #[test]
    fn primes() {
        assert!(is_prime(32003));
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
