//! Property tests for the algebraic invariants: family constructions always
//! verify, eigenvalue sums and products match trace and determinant, swap
//! classes share spectra, scaling preserves everything, and sharded searches
//! are schedule-independent.

use proptest::prelude::*;

use eigenperm_core::eigen::{
    self, eigenvalues_2x2, verify_all_permutations, EigenPair, Matrix2, Verdict,
};
use eigenperm_core::families::{
    alt_canonical, canonical, general_solution, AltCanParams, CoefficientQuad, FactorPair,
};
use eigenperm_core::search::{partition_work, scan_units_2x2, search_2x2, Dim, SearchRange};
use eigenperm_core::triples::{self, EuclidParams, PythTriple};

fn euclid_params() -> impl Strategy<Value = EuclidParams> {
    (2i64..=9, 1i64..=8, 1i64..=3).prop_filter_map("needs f > g", |(f, g, h)| {
        (f > g).then(|| EuclidParams::new(f, g, h).unwrap())
    })
}

fn normalized_triple() -> impl Strategy<Value = PythTriple> {
    euclid_params().prop_map(|p| triples::normalize(triples::from_params(p).unwrap()).triple)
}

/// All integer factor pairs (k, l) with k*l = rs/2 and an integral
/// quadruple, including the negated pair.
fn valid_factor_pairs(triple: &PythTriple) -> Vec<(i64, i64)> {
    let half_rs = triple.r() * triple.s() / 2;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= half_rs {
        if half_rs % d == 0 {
            for (k, l) in [(d, half_rs / d), (half_rs / d, d)] {
                if (triple.t() + k + l) % 2 == 0 {
                    out.push((k, l));
                    out.push((-k, -l));
                }
            }
        }
        d += 1;
    }
    out
}

fn triple_with_factors() -> impl Strategy<Value = (PythTriple, FactorPair)> {
    (normalized_triple(), any::<prop::sample::Index>()).prop_map(|(triple, idx)| {
        let pairs = valid_factor_pairs(&triple);
        let (k, l) = pairs[idx.index(pairs.len())];
        (triple, FactorPair::from_integers(k, l))
    })
}

fn small_quad() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-20i64..=20)
}

proptest! {
    #[test]
    fn from_params_always_yields_valid_triples(params in euclid_params()) {
        let t = triples::from_params(params).unwrap();
        prop_assert!(triples::is_valid(t.r(), t.s(), t.t()));
    }

    #[test]
    fn normalize_establishes_the_parity_layout(params in euclid_params(), extra in 1i64..=4) {
        // Scale by an arbitrary factor to exercise the halving path too.
        let base = triples::from_params(params).unwrap();
        let scaled = PythTriple::new(base.r() * extra, base.s() * extra, base.t() * extra).unwrap();
        let normalized = triples::normalize(scaled);
        let t = normalized.triple;
        prop_assert!(t.is_normalized());
        prop_assert_eq!(t.s() % 4, 0);
        prop_assert_eq!((t.r() - t.t()) % 2, 0);
        // The halved-out factor is genuine: scaling back recovers the legs.
        let factor = 1i64 << normalized.removed_pow2;
        let mut original = [scaled.r(), scaled.s()];
        let mut recovered = [t.r() * factor, t.s() * factor];
        original.sort_unstable();
        recovered.sort_unstable();
        prop_assert_eq!(original, recovered);
        prop_assert_eq!(t.t() * factor, scaled.t());
    }

    #[test]
    fn every_ansatz_family_quad_verifies((triple, factors) in triple_with_factors()) {
        let quad = general_solution(&triple, &factors).unwrap();
        prop_assert_eq!(quad.ansatz_sum(), Some(triple.t()));
        let report = verify_all_permutations(&quad).unwrap();
        prop_assert!(report.all_pass);
    }

    #[test]
    fn derivation_identities_hold((triple, factors) in triple_with_factors()) {
        // For the ordered ansatz quadruple: the first two raw discriminants
        // satisfy u² - v² = 8(a-b)(b-d) and u² + v² = 2t².
        let quad = general_solution(&triple, &factors).unwrap();
        let [a, b, _, d] = quad.entries();
        let reps = eigen::perm_representatives(&quad);
        let u2 = reps[0].discriminant().unwrap() as i128;
        let v2 = reps[1].discriminant().unwrap() as i128;
        let t = triple.t() as i128;
        prop_assert_eq!(u2 - v2, 8 * (a as i128 - b as i128) * (b as i128 - d as i128));
        prop_assert_eq!(u2 + v2, 2 * t * t);
    }

    #[test]
    fn eigenvalues_match_trace_and_determinant((triple, factors) in triple_with_factors()) {
        let quad = general_solution(&triple, &factors).unwrap();
        let report = verify_all_permutations(&quad).unwrap();
        for arrangement in &report.arrangements {
            let Verdict::Integer(pair) = arrangement.verdict else {
                prop_assert!(false, "arrangement failed: {}", arrangement.matrix);
                unreachable!()
            };
            prop_assert_eq!(pair.plus() + pair.minus(), arrangement.matrix.trace().unwrap());
            prop_assert_eq!(pair.plus() * pair.minus(), arrangement.matrix.determinant().unwrap());
        }
    }

    #[test]
    fn predicted_classes_match_direct_computation((triple, factors) in triple_with_factors()) {
        let quad = general_solution(&triple, &factors).unwrap();
        let predicted = eigen::predicted_eigenvalues(&triple, &factors).unwrap();
        let reps = eigen::perm_representatives(&quad);
        for (expected, rep) in predicted.iter().zip(reps.iter()) {
            let direct = eigenvalues_2x2(rep).unwrap();
            prop_assert_eq!(direct, Some(*expected), "arrangement {}", rep);
        }
    }

    #[test]
    fn swap_mates_share_eigenvalues(entries in small_quad()) {
        let m = Matrix2::from_row_major(entries);
        let base = eigenvalues_2x2(&m).unwrap();
        prop_assert_eq!(eigenvalues_2x2(&m.swap_diagonal()).unwrap(), base);
        prop_assert_eq!(eigenvalues_2x2(&m.swap_off_diagonal()).unwrap(), base);
        prop_assert_eq!(
            eigenvalues_2x2(&m.swap_diagonal().swap_off_diagonal()).unwrap(),
            base
        );
    }

    #[test]
    fn verify_has_multiset_semantics(entries in small_quad(), shuffle in any::<prop::sample::Index>()) {
        let permutations: Vec<Vec<i64>> = {
            // A few fixed reorderings are enough to catch order dependence.
            let e = entries;
            vec![
                vec![e[0], e[1], e[2], e[3]],
                vec![e[3], e[2], e[1], e[0]],
                vec![e[1], e[3], e[0], e[2]],
                vec![e[2], e[0], e[3], e[1]],
            ]
        };
        let picked = &permutations[shuffle.index(permutations.len())];
        let a = verify_all_permutations(&CoefficientQuad::from_entries(entries)).unwrap();
        let b = verify_all_permutations(&CoefficientQuad::new(
            picked[0], picked[1], picked[2], picked[3],
        ))
        .unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scaling_preserves_the_property(entries in small_quad(), n in -5i64..=5) {
        prop_assume!(n != 0);
        let quad = CoefficientQuad::from_entries(entries);
        let scaled = quad.scaled(n).unwrap();
        let before = verify_all_permutations(&quad).unwrap();
        let after = verify_all_permutations(&scaled).unwrap();
        prop_assert_eq!(before.all_pass, after.all_pass);
        if before.all_pass {
            // Each eigenvalue scales by n (classes may be discovered in a
            // different order, so compare as sorted multisets).
            let mut expected: Vec<EigenPair> = before
                .classes
                .iter()
                .map(|c| {
                    let p = c.eigenvalues.unwrap();
                    EigenPair::new(p.plus() * n, p.minus() * n)
                })
                .collect();
            let mut got: Vec<EigenPair> = after
                .classes
                .iter()
                .map(|c| c.eigenvalues.unwrap())
                .collect();
            expected.sort_unstable();
            got.sort_unstable();
            prop_assert_eq!(expected, got);
        }
    }

    #[test]
    fn alt_canonical_agrees_with_canonical_of_the_euclid_triple(
        m in 1i64..=10,
        n in (1i64..=19).prop_filter("odd", |n| n % 2 == 1),
        sm in prop::bool::ANY,
        sn in prop::bool::ANY,
    ) {
        let gcd = {
            let (mut a, mut b) = (m, n);
            while b != 0 {
                let r = a % b;
                a = b;
                b = r;
            }
            a
        };
        prop_assume!(gcd == 1);
        let signed_m = if sm { m } else { -m };
        let signed_n = if sn { n } else { -n };
        let params = AltCanParams::new(signed_m, signed_n).unwrap();
        let alt = alt_canonical(&params).unwrap();

        // Corresponding Euclid triple: f = 2|m|, g = |n| (swapped if needed).
        let (f, g) = if 2 * m > n { (2 * m, n) } else { (n, 2 * m) };
        let triple = triples::from_params(EuclidParams::new(f, g, 1).unwrap()).unwrap();
        let normalized = triples::normalize(triple).triple;
        let can = canonical(&normalized).unwrap();

        prop_assert_eq!(alt.multiset(), can.multiset());
    }

    #[test]
    fn is_perfect_square_agrees_with_scan(n in -2000i64..=2000) {
        let expected = (0..)
            .take_while(|k| k * k <= n)
            .find(|k| k * k == n);
        prop_assert_eq!(eigen::is_perfect_square(n), expected);
    }

    #[test]
    fn degenerate_family_verifies_but_breaks_the_pairing(
        g in prop::sample::select(vec![-9i64, -2, -1, 1, 2, 9]),
        e1 in 1i64..=9,
        e2 in 1i64..=9,
    ) {
        let quad = eigenperm_core::families::degenerate_family(g, e1, e2).unwrap();
        let report = verify_all_permutations(&quad).unwrap();
        prop_assert!(report.all_pass, "{quad}");
        if e1 != e2 {
            prop_assert_eq!(quad.ansatz_sum(), None);
            let m = quad.multiset();
            let pairings = [
                (m[0] + m[1], m[2] + m[3]),
                (m[0] + m[2], m[1] + m[3]),
                (m[0] + m[3], m[1] + m[2]),
            ];
            prop_assert!(pairings.iter().all(|(x, y)| x != y), "{quad}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sharded_search_matches_whole_search(
        lo in -3i64..=1,
        width in 0i64..=3,
        shards in 1u32..=7,
    ) {
        let range = SearchRange::new(lo, lo + width).unwrap();
        let whole = search_2x2(range, u64::MAX).unwrap();
        let plan = partition_work(range, Dim::Two, 1, shards).unwrap();
        let mut merged = Vec::new();
        for shard in &plan.shards {
            merged.extend(scan_units_2x2(range, shard.start_unit, shard.end_unit).unwrap());
        }
        merged.sort_unstable_by_key(|r| r.coefficients);
        prop_assert_eq!(merged, whole);
    }

    #[test]
    fn search_records_reverify_independently(lo in -3i64..=0, width in 0i64..=3) {
        let range = SearchRange::new(lo, lo + width).unwrap();
        for record in search_2x2(range, u64::MAX).unwrap() {
            let report =
                verify_all_permutations(&CoefficientQuad::from_entries(record.coefficients))
                    .unwrap();
            prop_assert!(report.all_pass, "{:?}", record.coefficients);
        }
    }
}
