//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's combinatorics or linear algebra; inputs and outputs are raw
//! bitmasks and integers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hdepth::{IdealPair, Monomial, MonomialIdeal, RingContext, SimplicialComplex};

pub fn ring(n: usize) -> RingContext {
    RingContext::new(n).unwrap()
}

/// Every down-closed family of subsets of `[n]`, each as a bitset over the
/// `2^n` masks (bit `m` set iff the face `m` is present). Includes the void
/// family and `{∅}`. Built from the split by whether `n` is a vertex.
pub fn down_sets(n: usize) -> Vec<u64> {
    assert!(n <= 6, "2^n masks must fit in a u64");
    let mut families = vec![0u64, 1u64];
    for k in 1..=n {
        let half = 1usize << (k - 1);
        let mut next = Vec::new();
        for &without in &families {
            for &with in &families {
                if with & !without == 0 {
                    next.push(without | with << half);
                }
            }
        }
        families = next;
    }
    families
}

pub fn family_masks(family: u64, n: usize) -> Vec<u64> {
    (0..1u64 << n).filter(|&m| family >> m & 1 == 1).collect()
}

/// Facets (maximal members) of a down-closed family.
pub fn family_facets(family: u64, n: usize) -> Vec<Monomial> {
    let masks = family_masks(family, n);
    masks
        .iter()
        .filter(|&&m| !masks.iter().any(|&o| o != m && m & !o == 0))
        .map(|&m| Monomial::from_mask(m))
        .collect()
}

pub fn complex_of_family(family: u64, n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(ring(n), family_facets(family, n))
}

/// Masks of `J \ I` by brute-force divisibility.
pub fn module_masks(pair: &IdealPair) -> Vec<u64> {
    let divisible = |ideal: &MonomialIdeal, m: u64| {
        ideal.generators().iter().any(|g| g.mask() & !m == 0)
    };
    (0..1u64 << pair.n())
        .filter(|&m| divisible(pair.upper(), m) && !divisible(pair.lower(), m))
        .collect()
}

pub fn alpha_oracle(pair: &IdealPair) -> Vec<u64> {
    let mut a = vec![0u64; pair.n() + 1];
    for m in module_masks(pair) {
        a[m.count_ones() as usize] += 1;
    }
    a
}

/// `β^q_k` as the coefficient of `t^k` in `Σ_j α_j t^j (1-t)^{q-j}`,
/// expanded by repeated polynomial multiplication. Only `j <= q` contributes
/// to coefficients `k <= q`.
pub fn beta_oracle(alpha: &[u64], q: usize) -> Vec<i128> {
    let mut out = vec![0i128; q + 1];
    for (j, &a) in alpha.iter().enumerate().take(q + 1) {
        let mut poly = vec![0i128; q + 1];
        poly[j] = a as i128;
        for _ in 0..q - j {
            for k in (1..=q).rev() {
                poly[k] -= poly[k - 1];
            }
        }
        for k in 0..=q {
            out[k] += poly[k];
        }
    }
    out
}

/// Largest `q <= n` whose β-vector is nonnegative.
pub fn hdepth_oracle(alpha: &[u64]) -> usize {
    let n = alpha.len() - 1;
    (0..=n)
        .rev()
        .find(|&q| beta_oracle(alpha, q).iter().all(|&b| b >= 0))
        .unwrap_or(0)
}

pub fn rank_oracle(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone() * inv.clone();
                for cc in c..cols {
                    let delta = factor.clone() * m[rank][cc].clone();
                    m[r][cc] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced (relative) Betti numbers of the pair of face families
/// `(delta, gamma)`, given as mask lists; index `i + 1` holds degree `i`.
/// Both families include `∅` when nonvoid, so an absolute complex is passed
/// with an empty `gamma`.
pub fn betti_oracle(delta: &[u64], gamma: &[u64]) -> Vec<usize> {
    let faces: Vec<u64> = delta.iter().copied().filter(|f| !gamma.contains(f)).collect();
    let top = faces.iter().map(|f| f.count_ones() as usize + 1).max().unwrap_or(0);
    let by_size: Vec<Vec<u64>> = (0..top)
        .map(|s| faces.iter().copied().filter(|f| f.count_ones() as usize == s).collect())
        .collect();
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s >= top {
            return 0;
        }
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        let matrix: Vec<Vec<i64>> = rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| {
                        if r & !c != 0 || (c & !r).count_ones() != 1 {
                            return 0;
                        }
                        let removed = c & !r;
                        let below = (c & (removed - 1)).count_ones();
                        if below % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        rank_oracle(&matrix)
    };
    let ranks: Vec<usize> = (0..=top).map(boundary_rank).collect();
    (0..top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

fn link_masks(family: &[u64], face: u64) -> Vec<u64> {
    family
        .iter()
        .filter(|&&g| g & face == 0 && family.contains(&(g | face)))
        .copied()
        .collect()
}

/// Depth of `J/I` by the local-cohomology formula: the minimum of
/// `j + |F| + 1` over faces `F ∈ Δ(I)` and degrees `j` with
/// `H̃_j(lk_Δ F, lk_Γ F) != 0`.
pub fn depth_oracle(pair: &IdealPair) -> usize {
    let n = pair.n();
    let non_members = |ideal: &MonomialIdeal| -> Vec<u64> {
        (0..1u64 << n)
            .filter(|&m| !ideal.generators().iter().any(|g| g.mask() & !m == 0))
            .collect()
    };
    let delta = non_members(pair.lower());
    let gamma = non_members(pair.upper());
    let mut best = usize::MAX;
    for &face in &delta {
        let ld = link_masks(&delta, face);
        let lg = link_masks(&gamma, face);
        for (s, &b) in betti_oracle(&ld, &lg).iter().enumerate() {
            if b != 0 {
                // degree j = s - 1
                best = best.min(s + face.count_ones() as usize);
            }
        }
    }
    best
}

/// Dimension of `J/I` as the largest degree of a squarefree monomial in
/// `J \ I`.
pub fn dim_oracle(pair: &IdealPair) -> usize {
    module_masks(pair)
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn binomial_table(rows: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; rows + 1]; rows + 1];
    for a in 0..=rows {
        t[a][0] = 1;
        for b in 1..=a {
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
        }
    }
    t
}

/// Pairs `I ⊊ J` on at most `max_n` variables. `J` is the unit ideal when its
/// generator list contains `1`; `I` is generated by multiples of generators
/// of `J`, or is zero when that list is empty.
pub fn pair_strategy(max_n: usize) -> impl proptest::strategy::Strategy<Value = IdealPair> {
    use proptest::prelude::*;
    (1..=max_n)
        .prop_flat_map(|n| {
            let full = (1u64 << n) - 1;
            (
                Just(n),
                prop::collection::vec(0..=full, 1..=n + 1),
                prop::collection::vec((any::<prop::sample::Index>(), 0..=full), 0..=n + 2),
            )
        })
        .prop_filter_map("need I ⊊ J", |(n, upper_masks, lower_picks)| {
            let r = ring(n);
            let upper = MonomialIdeal::minimalize(r, upper_masks.iter().map(|&m| Monomial::from_mask(m)));
            let lower = MonomialIdeal::minimalize(
                r,
                lower_picks.iter().map(|(idx, extra)| {
                    let g = *idx.get(upper.generators());
                    g.lcm(Monomial::from_mask(*extra))
                }),
            );
            IdealPair::new(lower, upper).ok()
        })
}

/// Quotients `S/I` by proper ideals on at most `max_n` variables.
pub fn quotient_strategy(max_n: usize) -> impl proptest::strategy::Strategy<Value = IdealPair> {
    use proptest::prelude::*;
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1..=(1u64 << n) - 1, 0..=n + 2)))
        .prop_map(|(n, masks)| {
            let ideal = MonomialIdeal::minimalize(ring(n), masks.into_iter().map(Monomial::from_mask));
            IdealPair::quotient(ideal).unwrap()
        })
}
