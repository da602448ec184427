//! α-vectors of `J/I`, the level-`q` β transforms and their inverse, Hilbert
//! depth, h-vectors and the dimension of `J/I`.
//!
//! For a pair `I ⊊ J` of squarefree monomial ideals, `α_j` counts the subsets
//! `A ⊆ [n]` with `|A| = j` and `x_A ∈ J \ I`, and
//!
//! ```text
//! β_k^q = Σ_{j=0}^{k} (-1)^{k-j} C(q-j, k-j) α_j,    0 <= k <= q.
//! ```
//!
//! The Hilbert depth of `J/I` is the largest `q` for which every `β_k^q` is
//! nonnegative.

use rayon::prelude::*;

use crate::complex::{stanley_reisner_complex, Face, FVector, RelativeComplex};
use crate::error::{Error, Result};
use crate::macaulay::{binomial, binomial_signed};
use crate::monomial::{IdealPair, Limits, Monomial};

/// `(α_0, ..., α_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVector {
    entries: Vec<u64>,
}

impl AlphaVector {
    pub fn new(entries: Vec<u64>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> u64 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    /// `min{k : α_k > 0}`.
    pub fn min_support(&self) -> Option<usize> {
        self.entries.iter().position(|&a| a > 0)
    }

    /// `max{k : α_k > 0}`.
    pub fn max_support(&self) -> Option<usize> {
        self.entries.iter().rposition(|&a| a > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&a| a == 0)
    }

    /// Zero-padded (or truncated) to `len` entries.
    pub fn resized(&self, len: usize) -> AlphaVector {
        let mut entries = self.entries.clone();
        entries.resize(len, 0);
        AlphaVector { entries }
    }
}

/// `(β_0^q, ..., β_q^q)`. Also used for h-vectors, which are β-vectors at
/// level `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaVector {
    level: usize,
    entries: Vec<i128>,
}

impl BetaVector {
    pub fn new(level: usize, entries: Vec<i128>) -> Result<Self> {
        if entries.len() != level + 1 {
            return Err(Error::InvalidArgument(format!(
                "β-vector at level {level} needs {} entries, got {}",
                level + 1,
                entries.len()
            )));
        }
        Ok(Self { level, entries })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    /// First `k` with `β_k^q < 0`.
    pub fn first_negative(&self) -> Option<usize> {
        self.entries.iter().position(|&b| b < 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }
}

/// Counts `x_A ∈ J \ I` by `|A|`, in one pass over all `2^n` subsets.
pub fn alpha(pair: &IdealPair, limits: &Limits) -> Result<AlphaVector> {
    let n = pair.n();
    limits.check_n(n)?;
    const BLOCK: u64 = 1 << 12;
    let total = 1u64 << n;
    let blocks = total.div_ceil(BLOCK);
    let counts = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut local = vec![0u64; n + 1];
            for mask in b * BLOCK..((b + 1) * BLOCK).min(total) {
                let m = Monomial::from_mask(mask);
                if pair.in_module(m) {
                    local[m.degree()] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut acc, local| {
                acc.iter_mut().zip(local).for_each(|(a, l)| *a += l);
                acc
            },
        );
    Ok(AlphaVector::new(counts))
}

/// `β_k^q` for every `0 <= k <= q`, with no bound of `q` against `n`.
pub(crate) fn beta_unchecked(alpha: &AlphaVector, q: usize) -> Result<BetaVector> {
    let mut entries = Vec::with_capacity(q + 1);
    for k in 0..=q {
        let mut sum: i128 = 0;
        for j in 0..=k {
            let a = i128::from(alpha.get(j));
            if a == 0 {
                continue;
            }
            let term = binomial((q - j) as i64, (k - j) as i64)?
                .checked_mul(a)
                .ok_or(Error::Overflow("β transform"))?;
            sum = if (k - j) % 2 == 0 {
                sum.checked_add(term)
            } else {
                sum.checked_sub(term)
            }
            .ok_or(Error::Overflow("β transform"))?;
        }
        entries.push(sum);
    }
    BetaVector::new(q, entries)
}

/// The level-`q` transform `β^q` of `α`, for `0 <= q <= n`.
pub fn beta(alpha: &AlphaVector, q: usize) -> Result<BetaVector> {
    if q > alpha.n() {
        return Err(Error::InvalidArgument(format!(
            "level q = {q} exceeds n = {}",
            alpha.n()
        )));
    }
    beta_unchecked(alpha, q)
}

/// Inverts the transform at level `d`: `α_k = Σ_{j<=k} C(d-j, k-j) β_j^d`.
///
/// The result has `d + 1` entries; `α_k = 0` for `k > d` is implied.
pub fn alpha_from_beta(beta: &BetaVector, d: usize) -> Result<AlphaVector> {
    if beta.level() != d {
        return Err(Error::InvalidArgument(format!(
            "β-vector has level {}, not {d}",
            beta.level()
        )));
    }
    let mut entries = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut sum: i128 = 0;
        for j in 0..=k {
            let term = binomial((d - j) as i64, (k - j) as i64)?
                .checked_mul(beta.entries()[j])
                .ok_or(Error::Overflow("inverse β transform"))?;
            sum = sum
                .checked_add(term)
                .ok_or(Error::Overflow("inverse β transform"))?;
        }
        let value = u64::try_from(sum).map_err(|_| {
            Error::InvalidArgument(format!("inverse transform gives α_{k} = {sum}, not a count"))
        })?;
        entries.push(value);
    }
    Ok(AlphaVector::new(entries))
}

/// One row of the β table: the level, the vector and where it first fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaRow {
    pub beta: BetaVector,
    pub first_negative: Option<usize>,
}

/// The Hilbert depth together with the β table over the bound range
/// `min{k : α_k > 0} <= q <= max{k : α_k > 0}`, highest level first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HdepthScan {
    pub hdepth: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub table: Vec<BetaRow>,
}

/// Hilbert depth from the α-vector, scanning `q` downward from
/// `max{k : α_k > 0}`.
pub fn hdepth_of_alpha(alpha: &AlphaVector) -> Result<HdepthScan> {
    let (lower, upper) = match (alpha.min_support(), alpha.max_support()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => {
            return Err(Error::InvalidPair(
                "α-vector vanishes identically (I = J)".into(),
            ))
        }
    };
    let mut table = Vec::with_capacity(upper - lower + 1);
    let mut hdepth = None;
    for q in (lower..=upper).rev() {
        let beta = beta(alpha, q)?;
        let first_negative = beta.first_negative();
        if first_negative.is_none() && hdepth.is_none() {
            hdepth = Some(q);
        }
        table.push(BetaRow {
            beta,
            first_negative,
        });
    }
    let hdepth = match hdepth {
        Some(h) => h,
        // Below the bound range; β^q ≥ 0 always holds at q = 0.
        None => (0..lower)
            .rev()
            .find(|&q| beta_unchecked(alpha, q).is_ok_and(|b| b.is_nonnegative()))
            .unwrap_or(0),
    };
    Ok(HdepthScan {
        hdepth,
        lower_bound: lower,
        upper_bound: upper,
        table,
    })
}

/// `max{q <= n : β^q >= 0}` by trying every level; no bounds assumed.
pub fn hdepth_exhaustive(alpha: &AlphaVector) -> Result<usize> {
    for q in (0..=alpha.n()).rev() {
        if beta(alpha, q)?.is_nonnegative() {
            return Ok(q);
        }
    }
    Ok(0)
}

pub fn hdepth(pair: &IdealPair, limits: &Limits) -> Result<usize> {
    Ok(hdepth_of_alpha(&alpha(pair, limits)?)?.hdepth)
}

/// `h_k = Σ_{j<=k} (-1)^{k-j} C(d-j, k-j) f_{j-1}` with `d` the number of
/// entries of `f` minus one.
pub fn h_vector_from_f(f: &FVector) -> Result<BetaVector> {
    let counts = AlphaVector::new(f.entries().to_vec());
    beta_unchecked(&counts, f.d())
}

/// `h(Ψ) = β^d(J/I)` with `d = dim(J/I)`.
pub fn h_vector(pair: &IdealPair, limits: &Limits) -> Result<BetaVector> {
    let alpha = alpha(pair, limits)?;
    let d = alpha.max_support().ok_or_else(|| {
        Error::InvalidPair("α-vector vanishes identically (I = J)".into())
    })?;
    beta(&alpha, d)
}

/// `dim(J/I) = max{k : α_k > 0}`.
pub fn dim_module(pair: &IdealPair, limits: &Limits) -> Result<usize> {
    alpha(pair, limits)?
        .max_support()
        .ok_or_else(|| Error::InvalidPair("α-vector vanishes identically (I = J)".into()))
}

/// Both routes to `dim(J/I)` and the facet comparison between `Ψ` and
/// `Δ(I : J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCheck {
    /// `max{k : α_k > 0}`.
    pub by_alpha: usize,
    /// `dim Δ(I : J) + 1`.
    pub by_colon: usize,
    /// `dim Ψ + 1`.
    pub by_relative_complex: usize,
    pub relative_facets: Vec<Face>,
    pub colon_facets: Vec<Face>,
}

impl DimensionCheck {
    pub fn consistent(&self) -> bool {
        self.by_alpha == self.by_colon
            && self.by_colon == self.by_relative_complex
            && self.relative_facets == self.colon_facets
    }
}

pub fn dimension_check(pair: &IdealPair, limits: &Limits) -> Result<DimensionCheck> {
    let by_alpha = dim_module(pair, limits)?;
    let colon = pair.lower().colon(pair.upper())?;
    let colon_complex = stanley_reisner_complex(&colon, limits)?;
    if colon_complex.is_void() {
        return Err(Error::InvalidPair("(I : J) is the unit ideal".into()));
    }
    let psi = RelativeComplex::of_pair(pair, limits)?;
    Ok(DimensionCheck {
        by_alpha,
        by_colon: colon_complex.max_face_size(),
        by_relative_complex: psi.max_face_size(),
        relative_facets: psi.facets(),
        colon_facets: colon_complex.facets().to_vec(),
    })
}

/// A falsified instance of one of the β recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceFailure {
    /// `β_k^{d+1} != β_k^d - β_{k-1}^d`.
    Pascal { d: usize, k: usize, lhs: i128, rhs: i128 },
    /// `β_k^d(I) != C(n-d+k-1, k) - β_k^d(S/I)`.
    Complement { d: usize, k: usize, lhs: i128, rhs: i128 },
}

/// Checks, at level `d`,
///
/// * `β_k^{d+1} = β_k^d - β_{k-1}^d` on `quotient` for `1 <= k <= d`, and
/// * when `ideal` (the α-vector of `I` as a module) is given,
///   `β_k^d(I) = C(n-d+k-1, k) - β_k^d(S/I)` for `0 <= k <= d`.
pub fn beta_recurrence_check(
    quotient: &AlphaVector,
    ideal: Option<&AlphaVector>,
    d: usize,
) -> Result<Option<RecurrenceFailure>> {
    let n = quotient.n();
    if d > n {
        return Err(Error::InvalidArgument(format!("level d = {d} exceeds n = {n}")));
    }
    let at_d = beta_unchecked(quotient, d)?;
    let above = beta_unchecked(quotient, d + 1)?;
    for k in 1..=d {
        let lhs = above.entries()[k];
        let rhs = at_d.entries()[k] - at_d.entries()[k - 1];
        if lhs != rhs {
            return Ok(Some(RecurrenceFailure::Pascal { d, k, lhs, rhs }));
        }
    }
    if let Some(ideal) = ideal {
        let of_ideal = beta_unchecked(ideal, d)?;
        for k in 0..=d {
            let lhs = of_ideal.entries()[k];
            let rhs = binomial_signed(n as i64 - d as i64 + k as i64 - 1, k as i64)?
                - at_d.entries()[k];
            if lhs != rhs {
                return Ok(Some(RecurrenceFailure::Complement { d, k, lhs, rhs }));
            }
        }
    }
    Ok(None)
}
