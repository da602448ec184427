//! Seeded random instances for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::monomial::{IdealPair, Monomial, MonomialIdeal, RingContext};

/// A random nonempty support of degree at most `max_degree`.
fn random_support<R: Rng + ?Sized>(ring: RingContext, max_degree: usize, rng: &mut R) -> Monomial {
    let n = ring.n();
    let degree = rng.gen_range(1..=max_degree.clamp(1, n));
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    Monomial::from_vars(&vars[..degree])
}

/// A proper, nonzero squarefree ideal with at most `max_gens` generators.
pub fn random_proper_ideal<R: Rng + ?Sized>(
    ring: RingContext,
    max_gens: usize,
    rng: &mut R,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens.max(1));
    let max_degree = ring.n().min(4);
    MonomialIdeal::minimalize(
        ring,
        (0..count).map(|_| random_support(ring, max_degree, rng)),
    )
}

/// A random `S/I` pair.
pub fn random_quotient<R: Rng + ?Sized>(ring: RingContext, rng: &mut R) -> IdealPair {
    let ideal = random_proper_ideal(ring, ring.n() + 2, rng);
    IdealPair::quotient(ideal).expect("a proper ideal gives a valid quotient")
}

/// A random pair `I ⊊ J`; `J` is the unit ideal about a quarter of the time
/// and `I` is the zero ideal about a tenth of the time.
pub fn random_pair<R: Rng + ?Sized>(ring: RingContext, rng: &mut R) -> IdealPair {
    loop {
        let upper = if rng.gen_bool(0.25) {
            MonomialIdeal::unit(ring)
        } else {
            random_proper_ideal(ring, ring.n(), rng)
        };
        let lower = if rng.gen_bool(0.1) {
            MonomialIdeal::zero(ring)
        } else {
            let count = rng.gen_range(1..=ring.n() + 1);
            let gens = (0..count).map(|_| {
                let g = *upper
                    .generators()
                    .choose(rng)
                    .expect("upper ideal is nonzero");
                let extra = if rng.gen_bool(0.2) {
                    Monomial::one()
                } else {
                    random_support(ring, 2, rng)
                };
                g.lcm(extra)
            });
            MonomialIdeal::minimalize(ring, gens)
        };
        if let Ok(pair) = IdealPair::new(lower, upper) {
            return pair;
        }
    }
}

/// A complete intersection: `m >= 1` generators with pairwise disjoint
/// supports.
pub fn random_complete_intersection<R: Rng + ?Sized>(
    ring: RingContext,
    rng: &mut R,
) -> MonomialIdeal {
    let n = ring.n();
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    let m = rng.gen_range(1..=n.div_ceil(2).max(1));
    let mut gens = Vec::with_capacity(m);
    let mut rest = &vars[..];
    for i in 0..m {
        // Leave at least one variable for each generator still to come.
        let room = rest.len() - (m - i - 1);
        let size = rng.gen_range(1..=room.min(3));
        gens.push(Monomial::from_vars(&rest[..size]));
        rest = &rest[size..];
    }
    MonomialIdeal::minimalize(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            let ring = RingContext::new(n).unwrap();
            for _ in 0..50 {
                let p = random_pair(ring, &mut rng);
                assert!(p.upper().contains_ideal(p.lower()));
                let q = random_quotient(ring, &mut rng);
                assert!(q.is_quotient() && !q.lower().is_unit());
                let ci = random_complete_intersection(ring, &mut rng);
                let gens = ci.generators();
                assert!(!gens.is_empty());
                for (i, a) in gens.iter().enumerate() {
                    assert!(gens[i + 1..].iter().all(|b| a.is_coprime(*b)));
                }
            }
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let ring = RingContext::new(6).unwrap();
        let a = random_pair(ring, &mut ChaCha8Rng::seed_from_u64(11));
        let b = random_pair(ring, &mut ChaCha8Rng::seed_from_u64(11));
        assert_eq!(a, b);
    }
}
