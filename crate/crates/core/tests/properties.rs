mod support;

use neutromagma::classify::{
    cauchy_classify, detect_s_kind, lagrange_classify, s_identity_class, SKind, Strength, Verdict3,
};
use neutromagma::constructors::{ln, ln_multipliers, zn_star};
use neutromagma::laws::IdentityLaw;
use neutromagma::neutro::{extend_tagged, zn_full_neutro, NeutroResidue};
use neutromagma::nstruct::NStructure;
use neutromagma::ops::{classify_basic, is_isomorphic, latin_square_check, principal_isotope};
use neutromagma::search::{generated_closure, is_closed};
use neutromagma::species::SubsetPredicate;
use neutromagma::{FiniteMagma, Subset};
use proptest::prelude::*;

use support::Table;

fn table(seed: u64) -> Table {
    support::random_table(&mut support::rng(seed), 6)
}

fn ln_params() -> impl Strategy<Value = (u64, u64)> {
    (2u64..12)
        .prop_map(|k| 2 * k + 1)
        .prop_flat_map(|n| {
            let ms = ln_multipliers(n);
            (Just(n), proptest::sample::select(ms))
        })
}

fn relabel(m: &FiniteMagma, perm: &[usize]) -> FiniteMagma {
    let k = m.order();
    let mut inv = vec![0; k];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let labels = (0..k).map(|i| m.label(inv[i]).to_string()).collect();
    FiniteMagma::from_fn("relabelled", labels, |x, y| perm[m.op(inv[x], inv[y])]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let m = table(seed).magma();
        let back = FiniteMagma::from_json(&m.to_json()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn closure_is_least_closed_superset(seed in any::<u64>(), picks in proptest::collection::vec(0usize..6, 1..3)) {
        let t = table(seed);
        let m = t.magma();
        let gens: Vec<usize> = picks.into_iter().map(|g| g % t.n).collect();
        let c = generated_closure(&m, &gens).unwrap();
        prop_assert!(is_closed(&m, &c));
        prop_assert!(gens.iter().all(|g| c.contains(*g)));
        for mask in 1u32..1 << t.n {
            let s = support::members(mask, t.n);
            if support::closed(&t, &s) && gens.iter().all(|g| s.contains(g)) {
                prop_assert!(c.members().iter().all(|x| s.contains(x)));
            }
        }
    }

    #[test]
    fn ln_is_a_loop_with_involutions((n, m) in ln_params()) {
        let g = ln(n, m).unwrap();
        prop_assert_eq!(g.order() as u64, n + 1);
        prop_assert!(latin_square_check(&g));
        prop_assert_eq!(g.effective_identity(), Some(0));
        prop_assert!(g.elements().all(|x| g.op(x, x) == 0));
    }

    #[test]
    fn principal_isotopes_are_loops((n, m) in ln_params(), a in 0usize..32, b in 0usize..32) {
        let g = ln(n, m).unwrap();
        let k = g.order();
        let iso = principal_isotope(&g, a % k, b % k).unwrap();
        prop_assert!(latin_square_check(&iso));
        prop_assert!(iso.effective_identity().is_some());
    }

    #[test]
    fn relabelling_is_an_isomorphism((n, m) in ln_params(), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = ln(n, m).unwrap();
        prop_assume!(g.order() == 6);
        let h = relabel(&g, &perm);
        let f = is_isomorphic(&g, &h, 16).unwrap();
        prop_assert!(f.is_some());
        let f = f.unwrap();
        prop_assert!(g.elements().all(|x| g.elements().all(|y| f[g.op(x, y)] == h.op(f[x], f[y]))));
    }

    #[test]
    fn lagrange_witness_flags_match_divisibility(seed in any::<u64>()) {
        let m = table(seed).magma();
        let r = lagrange_classify(&m, &SubsetPredicate::IsSubgroupoid).unwrap();
        for w in &r.witnesses {
            prop_assert!(w.order <= m.order());
            prop_assert_eq!(w.qualifies, m.order() % w.order == 0);
        }
        if r.verdict == Verdict3::Full {
            prop_assert!(!r.witnesses.is_empty());
        }
        prop_assert_eq!(r.verdict == Verdict3::Vacuous, r.witnesses.is_empty());
    }

    #[test]
    fn cauchy_relative_to_whole_is_absolute(seed in any::<u64>()) {
        let m = table(seed).magma();
        let whole = Subset::full(m.order());
        let a = cauchy_classify(&m, None);
        let b = cauchy_classify(&m, Some(&whole));
        prop_assert_eq!(a.map(|r| (r.verdict, r.witnesses)).ok(), b.map(|r| (r.verdict, r.witnesses)).ok());
    }

    #[test]
    fn strong_full_excludes_weak_free(seed in any::<u64>(), law in proptest::sample::select(IdentityLaw::ALL.to_vec())) {
        let m = table(seed).magma();
        let sp = SubsetPredicate::IsSubgroupoid;
        let strong = s_identity_class(&m, law, &sp, Strength::Strong).unwrap();
        let weak = s_identity_class(&m, law, &sp, Strength::Weak).unwrap();
        if strong == Verdict3::Full {
            prop_assert_ne!(weak, Verdict3::Free);
        }
    }

    #[test]
    fn s_semigroup_detection_implies_semigroup(n in 3u64..10, t in 1u64..10, u in 1u64..10) {
        prop_assume!(t < n && u < n && t != u);
        let g = zn_star(n, t, u).unwrap();
        let d = detect_s_kind(&g, SKind::SSemigroup).unwrap();
        if d.holds {
            prop_assert!(classify_basic(&g).is_semigroup);
            prop_assert!(SubsetPredicate::IsGroup.eval(&g, d.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn full_neutro_product_rule(n in 2u64..9, a in 0u64..9, b in 0u64..9, c in 0u64..9, d in 0u64..9) {
        let (a, b, c, d) = (a % n, b % n, c % n, d % n);
        let g = zn_full_neutro(n).unwrap();
        let x = NeutroResidue::new(a, b, n);
        let y = NeutroResidue::new(c, d, n);
        let z = NeutroResidue::new(a * c % n, (a * d + b * c + b * d) % n, n);
        prop_assert_eq!(g.op(x.index(n), y.index(n)), z.index(n));
    }

    #[test]
    fn tagged_extension_doubles((n, m) in ln_params()) {
        let base = ln(n, m).unwrap();
        let g = extend_tagged(&base).unwrap();
        prop_assert_eq!(g.order(), 2 * base.order());
        let real: Subset = base.elements().collect();
        prop_assert!(is_closed(&g, &real));
        let r = g.restrict(&real).unwrap();
        prop_assert_eq!(r.labels(), base.labels());
    }

    #[test]
    fn nstructure_json_round_trip((n, m) in ln_params(), k in 3u64..8) {
        let ns = NStructure::build_named(
            "B",
            vec![ln(n, m).unwrap(), zn_star(k, 1, 2).unwrap()],
            &["loop", "groupoid"],
        ).unwrap();
        let back = NStructure::from_json(&ns.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), ns.to_json());
        prop_assert_eq!(back.order(), ns.order());
    }
}

#[test]
fn every_table_has_an_oracle_copy() {
    for seed in 0..20 {
        let t = table(seed);
        let back = Table::of(&t.magma());
        assert_eq!(back.cells, t.cells);
    }
}
