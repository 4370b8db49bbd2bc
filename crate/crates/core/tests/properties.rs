mod common;

use arank_core::betti::{hochster_betti, ideal_betti, Field};
use arank_core::constructions::{bt_plan, bt_step1_normalize, construct_h2cm};
use arank_core::monomial::{minimal_transversals, MonomialIdeal, SquarefreeMonomial, VarSet};
use arank_core::poly::{membership, radical_membership, MonomialOrder, Polynomial};
use arank_core::simplicial::{
    alexander_dual, complex_of_ideal, leaf_vertices, peel, remove_leaf, stanley_reisner_ideal, SimplicialComplex,
};
use arank_core::verifier::{fast_negative_check, verify_up_to_radical, verify_up_to_radical_with, VerifyOptions};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn arb_supports(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..(1 << n), 1..8)
}

fn ideal_of(n: usize, masks: &[u64]) -> MonomialIdeal {
    MonomialIdeal::from_supports(n, masks.iter().map(|&m| VarSet::from_mask(m).to_vec())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(masks in arb_supports(6), seed in any::<u64>()) {
        let i = ideal_of(6, &masks);
        prop_assert_eq!(&MonomialIdeal::new(6, i.generators()).unwrap(), &i);
        let mut shuffled = masks.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in (1..shuffled.len()).rev() {
            shuffled.swap(k, rng.gen_range(0..=k));
        }
        prop_assert_eq!(ideal_of(6, &shuffled), i);
    }

    #[test]
    fn height_equals_indeg_of_dual(masks in arb_supports(6)) {
        let i = ideal_of(6, &masks);
        prop_assert_eq!(i.height().unwrap(), i.alexander_dual().unwrap().indeg().unwrap());
    }

    #[test]
    fn decomposition_is_an_antichain_that_intersects_back(masks in arb_supports(6)) {
        let i = ideal_of(6, &masks);
        let primes = i.prime_decomposition().unwrap();
        for (a, p) in primes.iter().enumerate() {
            for q in &primes[a + 1..] {
                prop_assert!(!p.variables.is_subset(q.variables) && !q.variables.is_subset(p.variables));
            }
        }
        let back = primes
            .iter()
            .map(|p| MonomialIdeal::new(6, &p.variables.iter().map(|v| SquarefreeMonomial::from_indices([v])).collect::<Vec<_>>()).unwrap())
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn transversals_match_brute_force(masks in arb_supports(6)) {
        let edges: Vec<VarSet> = masks.iter().map(|&m| VarSet::from_mask(m)).collect();
        let fast = minimal_transversals(&edges).unwrap();
        let hits = |s: VarSet| edges.iter().all(|e| !e.is_disjoint(s));
        let mut brute: Vec<VarSet> = VarSet::full(6)
            .subsets()
            .filter(|&s| hits(s) && s.iter().all(|v| !hits(s.without(v))))
            .collect();
        let mut fast_sorted = fast.clone();
        brute.sort_by_key(|s| s.mask());
        fast_sorted.sort_by_key(|s| s.mask());
        prop_assert_eq!(fast_sorted, brute);
    }

    #[test]
    fn stanley_reisner_correspondence(masks in arb_supports(6)) {
        let i = ideal_of(6, &masks);
        prop_assume!(i.indeg().unwrap() >= 2);
        prop_assert_eq!(stanley_reisner_ideal(&complex_of_ideal(&i).unwrap()), i);
    }

    #[test]
    fn alexander_duality_is_an_involution(seed in any::<u64>(), n in 3usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = common::random_low_dim_complex(&mut rng, n);
        let dual = alexander_dual(&delta).unwrap();
        prop_assert_eq!(alexander_dual(&dual).unwrap(), delta);
    }

    #[test]
    fn peel_sequences_replay(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = common::random_complex(&mut rng, n);
        if let Ok(seq) = peel(&delta) {
            prop_assert_eq!(seq.replay().unwrap(), delta);
        }
    }
}

/// Any peel order, found by exhaustive search.
fn peels_somehow(c: &SimplicialComplex) -> bool {
    c.is_simplex() || leaf_vertices(c).into_iter().any(|(v, h)| peels_somehow(&remove_leaf(c, v, h)))
}

#[test]
fn greedy_peel_is_complete_up_to_five_vertices() {
    for n in 1..=5 {
        for c in common::all_complexes(n) {
            assert_eq!(peel(&c).is_ok(), peels_somehow(&c), "{:?}", c.facets());
        }
    }
}

#[test]
fn hochster_tables_agree_across_fields() {
    let mut mismatches = Vec::new();
    for n in 1..=5 {
        for c in common::all_complexes(n) {
            let q = hochster_betti(&c, Field::Rationals).unwrap().entries;
            for p in [2, 3] {
                if hochster_betti(&c, Field::Prime(p)).unwrap().entries != q {
                    mismatches.push((p, c.facets().to_vec()));
                }
            }
        }
    }
    assert!(mismatches.is_empty(), "field-dependent tables: {mismatches:?}");
}

#[test]
fn cone_extension_keeps_pd_over_two_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let n = rng.gen_range(3..=5);
        let delta = common::random_low_dim_complex(&mut rng, n);
        let i = stanley_reisner_ideal(&delta);
        let gamma = SimplicialComplex::with_vertex_set(
            n,
            VarSet::full(n),
            &i.supports().into_iter().map(|s| VarSet::full(n).difference(s)).collect::<Vec<_>>(),
        )
        .unwrap();
        let face = common::random_face(&mut rng, &gamma);
        let i_prime = common::dual_ideal(&gamma.cone_extension(face, n + 1).unwrap());
        for field in [Field::Rationals, Field::Prime(2)] {
            assert_eq!(
                hochster_betti(&delta, field).unwrap().pd(),
                ideal_betti(&i_prime, field).unwrap().pd(),
                "{i} F = {{{face}}} over {field:?}"
            );
        }
    }
}

#[test]
fn step_one_preserves_the_radical() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(3..=5);
        let delta = common::random_low_dim_complex(&mut rng, n);
        let i = stanley_reisner_ideal(&delta);
        let Ok(w) = construct_h2cm(&i) else { continue };
        let facet = delta.facets()[rng.gen_range(0..delta.facets().len())];
        let s1 = bt_step1_normalize(&w.elements, facet, delta.vertex_set()).unwrap();
        for (q, qbar) in w.elements.iter().zip(&s1.qbar) {
            assert!(radical_membership(q, &s1.qbar).unwrap());
            assert!(membership(qbar, &w.elements, &MonomialOrder::degrevlex()).unwrap().is_member());
        }
        for (row, q) in s1.abar.iter().zip(&w.elements) {
            let sum = row
                .iter()
                .zip(&s1.pg_vars)
                .fold(Polynomial::zero(n), |acc, (a, &v)| &acc + &(a * &Polynomial::var(n, v)));
            assert_eq!(sum, q * q);
        }
        checked += 1;
    }
}

#[test]
fn relabeling_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let n = rng.gen_range(3..=5);
        let delta = common::random_low_dim_complex(&mut rng, n);
        let i = stanley_reisner_ideal(&delta);
        let qs: Vec<Polynomial> = i.generators().iter().map(|&m| Polynomial::from_monomial(n, m)).collect();
        let faces: Vec<VarSet> = delta.faces();
        let face = faces[rng.gen_range(0..faces.len())];
        let data = bt_plan(&delta, face, &qs).unwrap();
        let mut forward = vec![0; n + 1];
        for (p, &v) in data.relabel.iter().enumerate() {
            forward[v - 1] = p + 1;
        }
        forward[n] = n + 1;
        let mut backward = data.relabel.clone();
        backward.push(n + 1);
        for (e, r) in data.elements.iter().zip(&data.relabeled_elements) {
            assert_eq!(&e.rename(&forward, n + 1).unwrap(), r);
            assert_eq!(&r.rename(&backward, n + 1).unwrap(), e);
        }
    }
}

#[test]
fn sampling_never_refutes_a_true_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for trial in 0..60 {
        let n = rng.gen_range(3..=5);
        let delta = common::random_low_dim_complex(&mut rng, n);
        let i = stanley_reisner_ideal(&delta);
        let mut elements: Vec<Polynomial> = match construct_h2cm(&i) {
            Ok(w) => w.elements,
            Err(_) => i.generators().iter().map(|&m| Polynomial::from_monomial(n, m)).collect(),
        };
        if trial % 2 == 1 {
            elements.pop();
        }
        let opts = VerifyOptions { prefilter: false, ..VerifyOptions::default() };
        let exact = verify_up_to_radical_with(&elements, &i, &opts).unwrap();
        if let Some(cx) = fast_negative_check(&elements, &i, trial) {
            assert!(!exact.verdict, "{i}: sampled counterexample against a true verdict");
            assert!(elements.iter().all(|e| e.evaluate(&cx.point) == arank_core::poly::integer(0)));
        }
    }
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let i = MonomialIdeal::from_supports(5, [vec![1, 2, 3], vec![1, 2, 5], vec![1, 4, 5], vec![3, 4, 5]]).unwrap();
    let w = construct_h2cm(&i).unwrap();
    for elements in [w.elements.clone(), w.elements[..1].to_vec()] {
        let a = verify_up_to_radical(&elements, &i).unwrap();
        let b = verify_up_to_radical(&elements, &i).unwrap();
        let strip = |r: &arank_core::RadicalReport| {
            r.coverage.iter().map(|c| (c.generator.clone(), c.in_radical, c.evidence)).collect::<Vec<_>>()
        };
        assert_eq!((a.verdict, a.containment_ok, strip(&a)), (b.verdict, b.containment_ok, strip(&b)));
    }
}
