//! One pass that computes every invariant of a pair and checks the known
//! relations between them. All relations are theorems, so a failing check
//! means a computation is wrong.

use crate::complex::{FVector, RelativeComplex};
use crate::error::{Error, Result};
use crate::hdepth::{
    alpha, alpha_from_beta, beta, beta_recurrence_check, dimension_check, h_vector_from_f,
    hdepth_exhaustive, hdepth_of_alpha, AlphaVector,
};
use crate::homology::{self, CoefficientField, DepthReport};
use crate::macaulay::{chu_vandermonde_sides, cm_admissible};
use crate::monomial::{IdealPair, Limits};
use crate::report::{Check, InvariantReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub field: CoefficientField,
    pub limits: Limits,
    pub skip_depth: bool,
    pub include_h_vector: bool,
}

fn show<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

/// `α`, the β table and `hdepth`, `dim`, and the h-vector when requested.
pub fn invariants(pair: &IdealPair, options: &Options) -> Result<InvariantReport> {
    let mut report = InvariantReport::new(pair.n(), options.field);
    let alpha = alpha(pair, &options.limits)?;
    let scan = hdepth_of_alpha(&alpha)?;
    let dim = scan.upper_bound;
    if options.include_h_vector {
        report.h_vector = Some(beta(&alpha, dim)?);
    }
    report.alpha = Some(alpha);
    report.scan = Some(scan);
    report.dim = Some(dim);
    Ok(report)
}

/// Depth of `J/I` with the Cohen–Macaulay verdict.
pub fn depth(pair: &IdealPair, options: &Options) -> Result<InvariantReport> {
    let mut report = InvariantReport::new(pair.n(), options.field);
    let d = homology::depth(pair, options.field, &options.limits)?;
    report.dim = Some(d.dim);
    report.depth = Some(d);
    Ok(report)
}

/// Depth, or `None` when it exceeds the configured budget.
fn depth_within_budget(pair: &IdealPair, options: &Options) -> Result<Option<DepthReport>> {
    if options.skip_depth {
        return Ok(None);
    }
    match homology::depth(pair, options.field, &options.limits) {
        Ok(d) => Ok(Some(d)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn padded_f(f: &FVector, len: usize) -> FVector {
    let mut entries = f.entries().to_vec();
    entries.resize(len, 0);
    FVector::new(entries)
}

/// Computes everything and checks every applicable relation.
pub fn verify(pair: &IdealPair, options: &Options) -> Result<InvariantReport> {
    let limits = &options.limits;
    let n = pair.n();
    let mut report = invariants(pair, &Options {
        include_h_vector: true,
        ..*options
    })?;
    let alpha_v = report.alpha.clone().expect("invariants fill alpha");
    let scan = report.scan.clone().expect("invariants fill the scan");
    let hd = scan.hdepth;
    let dim = scan.upper_bound;
    let mut checks = Vec::new();

    // Bounds on hdepth, and the bounded scan against the exhaustive one.
    let exhaustive = hdepth_exhaustive(&alpha_v)?;
    checks.push(Check::new(
        "hdepth_bounds",
        scan.lower_bound <= hd && hd <= scan.upper_bound && exhaustive == hd,
        format!(
            "{} <= hdepth = {hd} <= {}; unbounded scan gives {exhaustive}",
            scan.lower_bound, scan.upper_bound
        ),
    ));

    let h = report.h_vector.clone().expect("requested above");
    let back = alpha_from_beta(&h, dim)?.resized(n + 1);
    checks.push(Check::new(
        "transform_round_trip",
        back == alpha_v,
        format!("β^{dim} = {} inverts to {}", show(h.entries()), show(back.entries())),
    ));

    let psi = RelativeComplex::of_pair(pair, limits)?;
    let f = psi.f_vector();
    let f_matches = (0..=n).all(|j| alpha_v.get(j) == f.get(j as isize - 1));
    checks.push(Check::new(
        "alpha_equals_f_vector",
        f_matches,
        format!("α = {}, f(Ψ) = {}", show(alpha_v.entries()), show(f.entries())),
    ));

    let h_from_f = h_vector_from_f(&padded_f(&f, dim + 1))?;
    checks.push(Check::new(
        "h_vector_routes",
        h_from_f == h,
        format!("β^d(J/I) = {}, h(Ψ) = {}", show(h.entries()), show(h_from_f.entries())),
    ));

    let mut skeleton_failure = None;
    for d_prime in 0..=dim {
        let b = beta(&alpha_v, d_prime)?;
        let sk = psi.skeleton(d_prime).f_vector();
        let hs = h_vector_from_f(&padded_f(&sk, d_prime + 1))?;
        if hs != b {
            skeleton_failure = Some(format!(
                "d' = {d_prime}: β = {}, h(skeleton) = {}",
                show(b.entries()),
                show(hs.entries())
            ));
            break;
        }
    }
    checks.push(Check::new(
        "skeleton_h_vectors",
        skeleton_failure.is_none(),
        skeleton_failure.unwrap_or_else(|| format!("β^{{d'}} = h(Ψ_{{<=d'-1}}) for 0 <= d' <= {dim}")),
    ));

    let dc = dimension_check(pair, limits)?;
    checks.push(Check::new(
        "dimension_routes",
        dc.consistent(),
        format!(
            "α gives {}, Δ(I:J) gives {}, Ψ gives {}; facets {}",
            dc.by_alpha,
            dc.by_colon,
            dc.by_relative_complex,
            if dc.relative_facets == dc.colon_facets { "agree" } else { "differ" }
        ),
    ));

    let mut pascal = None;
    for d in 1..=n {
        if let Some(fail) = beta_recurrence_check(&alpha_v, None, d)? {
            pascal = Some(format!("{fail:?}"));
            break;
        }
    }
    checks.push(Check::new(
        "beta_level_recurrence",
        pascal.is_none(),
        pascal.unwrap_or_else(|| format!("β_k^{{d+1}} = β_k^d - β_{{k-1}}^d for 1 <= k <= d <= {n}")),
    ));

    let companion_alpha = match pair.companion() {
        Some(c) => Some(alpha(&c, limits)?),
        None => None,
    };
    match (&companion_alpha, pair.is_quotient()) {
        (Some(other), is_quotient) => {
            let (quot, ideal): (&AlphaVector, &AlphaVector) = if is_quotient {
                (&alpha_v, other)
            } else {
                (other, &alpha_v)
            };
            let mut failure = None;
            for d in 0..=n {
                if let Some(fail) = beta_recurrence_check(quot, Some(ideal), d)? {
                    failure = Some(format!("{fail:?}"));
                    break;
                }
            }
            checks.push(Check::new(
                "complement_identity",
                failure.is_none(),
                failure.unwrap_or_else(|| {
                    format!("β_k^d(I) = C(n-d+k-1,k) - β_k^d(S/I) for 0 <= k <= d <= {n}")
                }),
            ));
        }
        (None, _) => checks.push(Check::skipped(
            "complement_identity",
            "needs J = S or I = 0",
        )),
    }

    let mut magic = None;
    for k in 0..=dim {
        let (lhs, rhs) = chu_vandermonde_sides(n, dim, k)?;
        if lhs != rhs {
            magic = Some(format!("k = {k}: {lhs} != {rhs}"));
            break;
        }
    }
    checks.push(Check::new(
        "chu_vandermonde",
        magic.is_none(),
        magic.unwrap_or_else(|| format!("n = {n}, d = {dim}, 0 <= k <= d")),
    ));

    checks.push(Check::new(
        "hdepth_at_most_dim",
        hd <= dim,
        format!("hdepth = {hd}, dim = {dim}"),
    ));
    if pair.is_quotient() && !pair.lower().is_zero() {
        checks.push(Check::new(
            "quotient_dim_bound",
            dim < n,
            format!("dim(S/I) = {dim}, n - 1 = {}", n - 1),
        ));
    }

    let depth_report = depth_within_budget(pair, options)?;
    match &depth_report {
        Some(d) => {
            checks.push(Check::new(
                "depth_at_most_hdepth",
                d.depth <= hd && d.dim == dim,
                format!("depth = {} <= hdepth = {hd}; homology dim = {}", d.depth, d.dim),
            ));
            if d.cm.cohen_macaulay {
                checks.push(Check::new(
                    "cohen_macaulay_equality",
                    hd == dim && d.depth == dim,
                    format!("hdepth = {hd}, dim = {dim}, depth = {}", d.depth),
                ));
            } else {
                checks.push(Check::skipped("cohen_macaulay_equality", "module is not Cohen–Macaulay"));
            }
            if pair.is_quotient() && d.cm.cohen_macaulay {
                let violation = cm_admissible(h.entries(), n, dim)?;
                checks.push(Check::new(
                    "cm_h_vector_conditions",
                    violation.is_none(),
                    match violation {
                        None => format!("h = {} satisfies both conditions", show(h.entries())),
                        Some(v) => format!("h = {}: {v}", show(h.entries())),
                    },
                ));
            } else {
                checks.push(Check::skipped(
                    "cm_h_vector_conditions",
                    "needs a Cohen–Macaulay quotient S/I",
                ));
            }
        }
        None => {
            let why = if options.skip_depth {
                "depth not computed (--skip-depth)"
            } else {
                "depth exceeds the face budget"
            };
            for name in [
                "depth_at_most_hdepth",
                "cohen_macaulay_equality",
                "cm_h_vector_conditions",
            ] {
                checks.push(Check::skipped(name, why));
            }
        }
    }

    checks.push(ideal_vs_quotient_check(
        pair,
        options,
        depth_report.as_ref(),
        hd,
        companion_alpha.as_ref(),
    )?);
    checks.push(complete_intersection_check(pair, hd, dim, depth_report.as_ref()));

    report.depth = depth_report;
    if !options.include_h_vector {
        report.h_vector = None;
    }
    report.checks = checks;
    Ok(report)
}

/// `hdepth(I) >= hdepth(S/I) + 1` when `S/I` is Cohen–Macaulay.
fn ideal_vs_quotient_check(
    pair: &IdealPair,
    options: &Options,
    depth_report: Option<&DepthReport>,
    hd: usize,
    companion_alpha: Option<&AlphaVector>,
) -> Result<Check> {
    const NAME: &str = "ideal_hdepth_exceeds_quotient";
    let (Some(companion), Some(other_alpha)) = (pair.companion(), companion_alpha) else {
        return Ok(Check::skipped(NAME, "needs J = S or I = 0"));
    };
    let other_hd = hdepth_of_alpha(other_alpha)?.hdepth;
    let (quotient_hd, ideal_hd, quotient) = if pair.is_quotient() {
        (hd, other_hd, pair)
    } else {
        (other_hd, hd, &companion)
    };
    let quotient_cm = if pair.is_quotient() {
        depth_report.map(|d| d.cm.cohen_macaulay)
    } else {
        depth_within_budget(quotient, options)?.map(|d| d.cm.cohen_macaulay)
    };
    Ok(match quotient_cm {
        None => Check::skipped(NAME, "Cohen–Macaulayness of S/I not computed"),
        Some(false) => Check::skipped(NAME, "S/I is not Cohen–Macaulay"),
        Some(true) => Check::new(
            NAME,
            ideal_hd > quotient_hd,
            format!(
                "hdepth(I) = {ideal_hd} >= hdepth(S/I) + 1 = {}",
                quotient_hd + 1
            ),
        ),
    })
}

/// `hdepth(S/I) = dim(S/I) = depth(S/I) = n - m` for a complete
/// intersection on `m` generators.
fn complete_intersection_check(
    pair: &IdealPair,
    hd: usize,
    dim: usize,
    depth_report: Option<&DepthReport>,
) -> Check {
    const NAME: &str = "complete_intersection";
    let gens = pair.lower().generators();
    let disjoint = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(*b)));
    if !pair.is_quotient() || !disjoint {
        return Check::skipped(NAME, "I is not a complete intersection quotient");
    }
    let expected = pair.n() - gens.len();
    let depth_ok = depth_report.is_none_or(|d| d.depth == expected);
    Check::new(
        NAME,
        hd == expected && dim == expected && depth_ok,
        format!(
            "n - m = {expected}; hdepth = {hd}, dim = {dim}, depth = {}",
            depth_report.map_or("not computed".to_string(), |d| d.depth.to_string())
        ),
    )
}
