mod common;

use proptest::prelude::*;

use common::{
    betti_oracle, complex_of_family, depth_oracle, dim_oracle, down_sets, family_masks,
    pair_strategy, quotient_strategy, rank_oracle, ring,
};
use hdepth::homology::{
    depth_absolute, depth_relative, is_cohen_macaulay, is_cm_relative, reduced_homology,
    relative_homology, ChainComplex, CoefficientField,
};
use hdepth::rank::{rank_mod_p, rank_rational, IntMatrix};
use hdepth::{IdealPair, Limits, Monomial, MonomialIdeal, RelativeComplex, SimplicialComplex};

const QQ: CoefficientField = CoefficientField::Rationals;

fn limits() -> Limits {
    Limits::default()
}

fn m(vars: &[usize]) -> Monomial {
    Monomial::from_vars(vars)
}

fn bettis(complex: &SimplicialComplex) -> Vec<usize> {
    let ranks = reduced_homology(complex, QQ, &limits()).unwrap();
    (-1..=complex.dim().unwrap()).map(|i| ranks.betti(i)).collect()
}

#[test]
fn named_complexes() {
    let r = ring(4);
    let hollow = SimplicialComplex::from_facets(r, [m(&[1, 2]), m(&[1, 3]), m(&[2, 3])]);
    assert_eq!(bettis(&hollow), vec![0, 0, 1]);
    let simplex = SimplicialComplex::simplex(r, m(&[1, 2, 3, 4]));
    assert_eq!(bettis(&simplex), vec![0, 0, 0, 0, 0]);
    let two_points = SimplicialComplex::from_facets(r, [m(&[1]), m(&[2])]);
    assert_eq!(bettis(&two_points), vec![0, 1]);
    let boundary = SimplicialComplex::from_facets(
        r,
        [m(&[1, 2, 3]), m(&[1, 2, 4]), m(&[1, 3, 4]), m(&[2, 3, 4])],
    );
    assert_eq!(bettis(&boundary), vec![0, 0, 0, 1]);
    let empty = SimplicialComplex::from_facets(r, [Monomial::one()]);
    assert_eq!(bettis(&empty), vec![1]);
    // (simplex, its boundary) has the homology of a 3-sphere shifted down.
    let pair = RelativeComplex::new(simplex, boundary).unwrap();
    let ranks = relative_homology(&pair, QQ, &limits()).unwrap();
    assert_eq!((-1..=3).map(|i| ranks.betti(i)).collect::<Vec<_>>(), vec![0, 0, 0, 0, 1]);
}

#[test]
fn betti_numbers_match_oracle_exhaustive() {
    for n in 1..=5 {
        for family in down_sets(n).into_iter().filter(|&f| f != 0) {
            let complex = complex_of_family(family, n);
            let expected = betti_oracle(&family_masks(family, n), &[]);
            assert_eq!(bettis(&complex), expected, "facets {:?}", complex.facets());
        }
    }
}

#[test]
fn boundary_squares_to_zero_and_euler_poincare() {
    for n in 1..=5 {
        for family in down_sets(n).into_iter().filter(|&f| f != 0) {
            let complex = complex_of_family(family, n);
            let chain = ChainComplex::of_complex(&complex);
            for s in 2..chain.levels() {
                let product = chain.boundary_matrix(s - 1).mul(&chain.boundary_matrix(s)).unwrap();
                assert!(product.is_zero(), "facets {:?}, size {s}", complex.facets());
            }
            // Σ (-1)^i f_i over i >= -1 equals Σ (-1)^i β̃_i.
            let f = complex.f_vector();
            let euler: i64 = f
                .entries()
                .iter()
                .enumerate()
                .map(|(s, &c)| if s % 2 == 1 { c as i64 } else { -(c as i64) })
                .sum();
            let betti: i64 = bettis(&complex)
                .iter()
                .enumerate()
                .map(|(s, &b)| if s % 2 == 1 { b as i64 } else { -(b as i64) })
                .sum();
            assert_eq!(euler, betti, "facets {:?}", complex.facets());
        }
    }
}

proptest! {
    #[test]
    fn rank_matches_rational_elimination(
        rows in 1usize..7,
        cols in 1usize..7,
        seed in prop::collection::vec(-4i64..=4, 49),
    ) {
        let data: Vec<Vec<i64>> = (0..rows).map(|r| seed[r * 7..r * 7 + cols].to_vec()).collect();
        let matrix = IntMatrix::from_rows(&data);
        prop_assert_eq!(rank_rational(&matrix), rank_oracle(&data));
        prop_assert!(rank_mod_p(&matrix, 32003) <= rank_rational(&matrix));
    }

    #[test]
    fn large_entries_rank(seed in prop::collection::vec(-1_000_000_000i64..=1_000_000_000, 64)) {
        let data: Vec<Vec<i64>> = seed.chunks(8).map(<[i64]>::to_vec).collect();
        prop_assert_eq!(rank_rational(&IntMatrix::from_rows(&data)), rank_oracle(&data));
    }

    #[test]
    fn depth_matches_local_cohomology(pair in pair_strategy(6)) {
        let report = hdepth::depth(&pair, QQ, &limits()).unwrap();
        prop_assert_eq!(report.depth, depth_oracle(&pair), "J = ({}), I = ({})", pair.upper(), pair.lower());
        prop_assert_eq!(report.dim, dim_oracle(&pair));
        prop_assert_eq!(report.cm.cohen_macaulay, report.depth == report.dim);
    }

    #[test]
    fn quotient_depth_routes_agree(pair in quotient_strategy(6)) {
        let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
        let absolute = depth_absolute(psi.delta(), QQ, &limits()).unwrap();
        let relative = depth_relative(&psi, QQ, &limits()).unwrap();
        prop_assert_eq!(absolute.depth, relative.depth);
        prop_assert_eq!(absolute.cm.cohen_macaulay, relative.cm.cohen_macaulay);
        prop_assert_eq!(absolute.depth, depth_oracle(&pair));
    }

    /// Removing a top-dimensional face `F` gives the exact sequence
    /// `0 -> K[Δ, Δ \ {F}] -> K[Ψ] -> K[Δ \ {F}, Γ] -> 0` whose kernel is
    /// Cohen–Macaulay of dimension `d`. The depth lemma then forces
    /// `depth(Δ \ {F}, Γ) = depth Ψ` when `depth Ψ < d`, and
    /// `depth(Δ \ {F}, Γ) >= d - 1` otherwise.
    #[test]
    fn removing_a_top_face(pair in pair_strategy(6)) {
        let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
        let d = psi.max_face_size();
        let top = psi.facets().into_iter().find(|f| f.degree() == d).unwrap();
        let rest = psi.without_facet(top).unwrap();
        let whole = depth_relative(&psi, QQ, &limits()).unwrap().depth;
        if rest.is_empty() {
            prop_assert_eq!(whole, d);
        } else {
            let part = depth_relative(&rest, QQ, &limits()).unwrap().depth;
            if whole < d {
                prop_assert_eq!(part, whole);
            } else {
                prop_assert!(part + 1 >= d, "part = {}, d = {}", part, d);
            }
        }
    }

    /// If the `(d'-1)`-skeleton is Cohen–Macaulay, so is every lower one.
    #[test]
    fn skeleton_cm_is_downward_closed(pair in quotient_strategy(6)) {
        let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
        let delta = psi.delta();
        let dim = delta.max_face_size();
        let verdicts: Vec<bool> = (1..=dim)
            .map(|d_prime| {
                is_cohen_macaulay(&delta.skeleton(d_prime), QQ, &limits())
                    .unwrap()
                    .cohen_macaulay
            })
            .collect();
        for w in verdicts.windows(2) {
            prop_assert!(w[0] || !w[1], "verdicts {:?}", verdicts);
        }
    }

    #[test]
    fn relative_criterion_agrees_with_reisner(pair in quotient_strategy(6)) {
        let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
        let absolute = is_cohen_macaulay(psi.delta(), QQ, &limits()).unwrap();
        let relative = is_cm_relative(&psi, QQ, &limits()).unwrap();
        prop_assert_eq!(absolute.cohen_macaulay, relative.cohen_macaulay);
    }
}

#[test]
fn depth_can_drop_after_removing_a_top_face_of_a_cm_module() {
    // K[x1] has depth 1; removing the facet {1} leaves K[x1]/(x1) = K.
    let pair = IdealPair::quotient(MonomialIdeal::zero(ring(1))).unwrap();
    let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
    let rest = psi.without_facet(Monomial::from_vars(&[1])).unwrap();
    assert_eq!(depth_relative(&psi, QQ, &limits()).unwrap().depth, 1);
    assert_eq!(depth_relative(&rest, QQ, &limits()).unwrap().depth, 0);
}

#[test]
fn reisner_witness() {
    let r = ring(3);
    let complex = SimplicialComplex::from_facets(r, [m(&[1]), m(&[2, 3])]);
    let verdict = is_cohen_macaulay(&complex, QQ, &limits()).unwrap();
    assert!(!verdict.cohen_macaulay);
    let w = verdict.witness.unwrap();
    assert_eq!((w.face, w.degree), (Monomial::one(), 0));
    let pair = IdealPair::quotient(MonomialIdeal::parse("x1*x2, x1*x3", r).unwrap()).unwrap();
    let report = hdepth::depth(&pair, QQ, &limits()).unwrap();
    assert_eq!((report.depth, report.dim), (1, 2));
}

/// The real projective plane: Cohen–Macaulay over QQ but not over GF(2).
#[test]
fn characteristic_matters() {
    let r = ring(6);
    let facets = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ];
    let rp2 = SimplicialComplex::from_facets(r, facets.iter().map(|f| m(f)));
    let over_q = is_cohen_macaulay(&rp2, QQ, &limits()).unwrap();
    let gf2 = CoefficientField::from_characteristic(2).unwrap();
    let over_2 = is_cohen_macaulay(&rp2, gf2, &limits()).unwrap();
    assert!(over_q.cohen_macaulay);
    assert!(!over_2.cohen_macaulay);
    let ranks = reduced_homology(&rp2, gf2, &limits()).unwrap();
    assert_eq!((ranks.betti(1), ranks.betti(2)), (1, 1));
}

#[test]
fn face_budget_is_enforced() {
    let r = ring(16);
    let simplex = SimplicialComplex::simplex(r, Monomial::from_mask((1 << 16) - 1));
    assert!(matches!(
        is_cohen_macaulay(&simplex, QQ, &limits()),
        Err(hdepth::Error::CapExceeded { .. })
    ));
}

#[test]
fn relative_homology_conventions() {
    let r = ring(4);
    let complex = SimplicialComplex::from_facets(r, [m(&[1, 2]), m(&[2, 3]), m(&[4])]);
    let reduced = reduced_homology(&complex, QQ, &limits()).unwrap();
    assert_eq!((reduced.betti(0), reduced.betti(1)), (1, 0));

    // (Δ, Δ) has no chains.
    let same = RelativeComplex::new(complex.clone(), complex.clone()).unwrap();
    assert!(relative_homology(&same, QQ, &limits()).unwrap().is_acyclic());

    // Relative to the void complex: the augmented (reduced) homology.
    let over_void = RelativeComplex::absolute(complex.clone());
    let ranks = relative_homology(&over_void, QQ, &limits()).unwrap();
    assert_eq!(ranks.betti, reduced.betti);

    // Relative to {∅}: the empty chain is divided out, leaving ordinary
    // homology, so H_0 counts components.
    let empty = SimplicialComplex::from_facets(r, [Monomial::one()]);
    let over_empty = RelativeComplex::new(complex, empty).unwrap();
    let ranks = relative_homology(&over_empty, QQ, &limits()).unwrap();
    assert_eq!((ranks.betti(-1), ranks.betti(0), ranks.betti(1)), (0, 2, 0));
}

#[test]
fn single_face_modules_are_cohen_macaulay() {
    let r = ring(4);
    let top = m(&[1, 2, 3, 4]);
    let simplex = SimplicialComplex::simplex(r, top);
    let psi = RelativeComplex::new(simplex.clone(), simplex.without_facet(top).unwrap()).unwrap();
    let verdict = is_cm_relative(&psi, QQ, &limits()).unwrap();
    assert!(verdict.cohen_macaulay);
    assert_eq!(verdict.dimension, 4);
    let ranks = relative_homology(&psi, QQ, &limits()).unwrap();
    assert_eq!((-1..=3).map(|i| ranks.betti(i)).collect::<Vec<_>>(), vec![0, 0, 0, 0, 1]);

    // J/I = (x1, x2)/(x1*x2): two principal summands of depth 1.
    let pair = IdealPair::new(
        MonomialIdeal::parse("x1*x2", ring(2)).unwrap(),
        MonomialIdeal::parse("x1, x2", ring(2)).unwrap(),
    )
    .unwrap();
    let psi = RelativeComplex::of_pair(&pair, &limits()).unwrap();
    assert_eq!(psi.f_vector().entries(), &[0, 2]);
    assert!(is_cm_relative(&psi, QQ, &limits()).unwrap().cohen_macaulay);
}
