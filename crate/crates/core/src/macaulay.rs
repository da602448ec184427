//! Binomial coefficients, Macaulay expansions and pseudopowers, and the
//! numerical conditions on h-vectors of Cohen–Macaulay complexes.

use std::fmt;

use crate::error::{Error, Result};

/// `C(a, b)` for `a >= 0`: zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Result<i128> {
    if a < 0 {
        return Err(Error::NegativeBinomial(a));
    }
    if b < 0 || b > a {
        return Ok(0);
    }
    falling_ratio(a as i128, b.min(a - b))
}

/// The polynomial binomial `a (a-1) ... (a-b+1) / b!`, defined for every
/// integer `a`; zero when `b < 0`.
///
/// For `a < 0` this is `(-1)^b C(b - a - 1, b)`, which is what the
/// alternating binomial sums need once their upper argument goes negative.
pub fn binomial_signed(a: i64, b: i64) -> Result<i128> {
    if b < 0 {
        return Ok(0);
    }
    if a >= 0 {
        return binomial(a, b);
    }
    let magnitude = binomial(b - a - 1, b)?;
    Ok(if b % 2 == 0 { magnitude } else { -magnitude })
}

/// `a (a-1) ... (a-b+1) / b!` for `0 <= b <= a`, exact at every step.
fn falling_ratio(a: i128, b: i64) -> Result<i128> {
    let mut acc: i128 = 1;
    for i in 0..b as i128 {
        acc = acc
            .checked_mul(a - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    Ok(acc)
}

/// `C(a, b)` with `a, b >= 0` as unsigned values; `None` on overflow.
fn binom_u(a: u128, b: u32) -> Option<u128> {
    if u128::from(b) > a {
        return Some(0);
    }
    let b = u128::from(b).min(a - u128::from(b));
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc.checked_mul(a - i)? / (i + 1);
    }
    Some(acc)
}

/// The greedy expansion
/// `ℓ = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_j, j)` with
/// `n_k > n_{k-1} > ... > n_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayExpansion {
    level: u32,
    /// `(n_i, i)` pairs, `i` strictly descending from `level`.
    terms: Vec<(u128, u32)>,
}

impl MacaulayExpansion {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn terms(&self) -> &[(u128, u32)] {
        &self.terms
    }

    /// Re-sums the binomials.
    pub fn value(&self) -> Result<u128> {
        self.terms.iter().try_fold(0u128, |acc, &(top, i)| {
            binom_u(top, i)
                .and_then(|c| acc.checked_add(c))
                .ok_or(Error::Overflow("Macaulay expansion"))
        })
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (top, i)) in self.terms.iter().enumerate() {
            if pos > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({top},{i})")?;
        }
        Ok(())
    }
}

/// Largest `m` with `C(m, k) <= value`, for `value >= 1`, `k >= 1`.
fn largest_top(value: u128, k: u32) -> u128 {
    if k == 1 {
        return value;
    }
    // C(m, k) is increasing for m >= k, and C(k, k) = 1 <= value.
    let fits = |m: u128| binom_u(m, k).is_some_and(|c| c <= value);
    let mut lo = u128::from(k);
    let mut hi = lo + 1;
    while fits(hi) {
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The `k`-th Macaulay expansion of `ℓ`, built greedily. `0` expands to the
/// empty sum.
pub fn expand(value: u128, k: u32) -> Result<MacaulayExpansion> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "Macaulay expansion needs level k >= 1".into(),
        ));
    }
    let mut terms = Vec::new();
    let mut rest = value;
    let mut i = k;
    while rest > 0 {
        // Reaching i = 0 with a remainder cannot happen: C(m, 1) = m.
        let top = largest_top(rest, i);
        rest -= binom_u(top, i).ok_or(Error::Overflow("Macaulay expansion"))?;
        terms.push((top, i));
        i -= 1;
    }
    Ok(MacaulayExpansion { level: k, terms })
}

/// `ℓ^{(k)} = C(n_k, k+1) + ... + C(n_j, j+1)`; `0^{(k)} = 0`.
pub fn pseudopower(value: u128, k: u32) -> Result<u128> {
    let expansion = expand(value, k)?;
    expansion.terms.iter().try_fold(0u128, |acc, &(top, i)| {
        binom_u(top, i + 1)
            .and_then(|c| acc.checked_add(c))
            .ok_or(Error::Overflow("pseudopower"))
    })
}

/// The Macaulay upper shift `ℓ^{<k>} = C(n_k + 1, k+1) + ... + C(n_j + 1, j+1)`,
/// the sharp bound on `h_{k+1}` for h-vectors of Cohen–Macaulay complexes.
/// It dominates [`pseudopower`]; the two differ already at `1^{<1>} = 1`
/// versus `1^{(1)} = 0`, and the hollow triangle `h = (1, 1, 1)` needs the
/// larger one.
pub fn macaulay_shift(value: u128, k: u32) -> Result<u128> {
    let expansion = expand(value, k)?;
    expansion.terms.iter().try_fold(0u128, |acc, &(top, i)| {
        binom_u(top + 1, i + 1)
            .and_then(|c| acc.checked_add(c))
            .ok_or(Error::Overflow("Macaulay shift"))
    })
}

/// Which of the two Cohen–Macaulay h-vector conditions failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmCondition {
    /// `0 <= h_k <= C(n - d + k - 1, k)`.
    Bounds,
    /// `0 <= h_{k+1} <= h_k^{<k>}` (see [`macaulay_shift`]).
    Growth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmViolation {
    pub condition: CmCondition,
    pub k: usize,
}

impl fmt::Display for CmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.condition {
            CmCondition::Bounds => write!(f, "condition (1) fails at k = {}", self.k),
            CmCondition::Growth => write!(f, "condition (2) fails at k = {}", self.k),
        }
    }
}

/// Checks the h-vector `h = (h_0, ..., h_d)` of a `(d-1)`-dimensional complex
/// on `n` vertices against the Cohen–Macaulay conditions. Returns the first
/// violation, scanning condition (1) over all `k` before condition (2).
pub fn cm_admissible(h: &[i128], n: usize, d: usize) -> Result<Option<CmViolation>> {
    if h.len() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "h-vector has {} entries, expected d + 1 = {}",
            h.len(),
            d + 1
        )));
    }
    for (k, &hk) in h.iter().enumerate() {
        let bound = binomial_signed(n as i64 - d as i64 + k as i64 - 1, k as i64)?;
        if hk < 0 || hk > bound {
            return Ok(Some(CmViolation {
                condition: CmCondition::Bounds,
                k,
            }));
        }
    }
    for k in 1..d {
        // h_k >= 0 holds here, so the conversion is lossless.
        let cap = macaulay_shift(h[k] as u128, k as u32)?;
        let next = h[k + 1];
        if next < 0 || next as u128 > cap {
            return Ok(Some(CmViolation {
                condition: CmCondition::Growth,
                k,
            }));
        }
    }
    Ok(None)
}

/// Both sides of
/// `Σ_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) C(n, j) = C(n-d+k-1, k)`.
pub fn chu_vandermonde_sides(n: usize, d: usize, k: usize) -> Result<(i128, i128)> {
    if k > d {
        return Err(Error::InvalidArgument(format!("need k <= d, got k = {k}, d = {d}")));
    }
    let mut lhs: i128 = 0;
    for j in 0..=k {
        let term = binomial((d - j) as i64, (k - j) as i64)?
            .checked_mul(binomial(n as i64, j as i64)?)
            .ok_or(Error::Overflow("Chu–Vandermonde sum"))?;
        lhs = if (k - j) % 2 == 0 {
            lhs.checked_add(term)
        } else {
            lhs.checked_sub(term)
        }
        .ok_or(Error::Overflow("Chu–Vandermonde sum"))?;
    }
    let rhs = binomial_signed(n as i64 - d as i64 + k as i64 - 1, k as i64)?;
    Ok((lhs, rhs))
}

pub fn chu_vandermonde_check(n: usize, d: usize, k: usize) -> Result<bool> {
    let (lhs, rhs) = chu_vandermonde_sides(n, d, k)?;
    Ok(lhs == rhs)
}
