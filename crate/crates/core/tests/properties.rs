use hocat_core::elements::{elements, weighted_colim_set, SetValuedFunctor, Variance};
use hocat_core::fincat::{coproduct_cat, enumerate_functors, is_isomorphic, product_cat};
use hocat_core::localize::{is_groupoid, localize_total, mark_isos};
use hocat_core::nerve::{categorify, nerve, nerve_map};
use hocat_core::realize::hcat;
use hocat_core::samples::{self, random_category, random_functor, random_path, random_presentation};
use hocat_core::sset::{check_iep, from_nondeg, pi0_sset, sk, to_nondeg};
use hocat_core::words::{materialize, replay, word_equal, WordVerdict};
use hocat_core::{Budget, FinCat, PresCat, WordBudget};
use proptest::prelude::*;
use rand::Rng;

fn seeded(seed: u64) -> FinCat {
    random_category(&mut samples::rng(seed), 3, 9)
}

fn iso(a: &FinCat, b: &FinCat) -> bool {
    is_isomorphic(a, b, Budget::default()).unwrap().is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nerves_have_spine_extensions(seed in any::<u64>()) {
        let c = seeded(seed);
        let x = nerve(&c, 4).sset;
        for n in 2..=4 {
            prop_assert!(check_iep(&x, n).unwrap().holds());
        }
    }

    #[test]
    fn categorify_inverts_nerve(seed in any::<u64>()) {
        let c = seeded(seed);
        let back = categorify(&nerve(&c, 3).sset).unwrap();
        prop_assert!(iso(&back.cat, &c));
    }

    #[test]
    fn hcat_inverts_nerve(seed in any::<u64>()) {
        let c = seeded(seed);
        let q = hcat(&nerve(&c, 3).sset).unwrap().materialize(WordBudget::default()).unwrap().finite().unwrap();
        prop_assert!(iso(&q.cat, &c));
    }

    #[test]
    fn presentation_round_trip(seed in any::<u64>()) {
        let c = seeded(seed);
        let q = materialize(&PresCat::of_fincat(&c), WordBudget::default()).unwrap().finite().unwrap();
        prop_assert!(iso(&q.cat, &c));
    }

    #[test]
    fn nerve_is_functorial(seed in any::<u64>()) {
        let mut rng = samples::rng(seed);
        let (a, b, c) = (seeded(seed), random_category(&mut rng, 3, 6), random_category(&mut rng, 2, 4));
        if let (Some(f), Some(g)) = (random_functor(&mut rng, &a, &b), random_functor(&mut rng, &b, &c)) {
            let (na, nb, nc) = (nerve(&a, 3), nerve(&b, 3), nerve(&c, 3));
            prop_assert_eq!(nerve_map(&f.then(&g), &na, &nc), nerve_map(&f, &na, &nb).then(&nerve_map(&g, &nb, &nc)));
        }
    }

    #[test]
    fn functor_composition_is_associative(seed in any::<u64>()) {
        let mut rng = samples::rng(seed);
        let cats: Vec<FinCat> = (0..4).map(|_| random_category(&mut rng, 2, 5)).collect();
        let fs: Option<Vec<_>> = (0..3).map(|i| random_functor(&mut rng, &cats[i], &cats[i + 1])).collect();
        if let Some(fs) = fs {
            prop_assert_eq!(fs[0].then(&fs[1]).then(&fs[2]), fs[0].then(&fs[1].then(&fs[2])));
        }
    }

    #[test]
    fn components_of_nerve_and_skeleton_agree(seed in any::<u64>()) {
        let x = nerve(&seeded(seed), 3).sset;
        prop_assert_eq!(pi0_sset(&x), pi0_sset(&sk(&x, 1).unwrap().sset));
    }

    #[test]
    fn nondegenerate_round_trip(seed in any::<u64>()) {
        let x = nerve(&seeded(seed), 3).sset;
        let y = from_nondeg(&to_nondeg(&x)).unwrap();
        prop_assert_eq!(x.level_sizes(), y.level_sizes());
    }

    #[test]
    fn product_and_coproduct_sizes(seed in any::<u64>()) {
        let mut rng = samples::rng(seed);
        let (a, b) = (random_category(&mut rng, 2, 5), random_category(&mut rng, 2, 5));
        let p = product_cat(&a, &b);
        prop_assert_eq!(p.cat.num_morphisms(), a.num_morphisms() * b.num_morphisms());
        let s = coproduct_cat(&[a.clone(), b.clone()]);
        prop_assert_eq!(s.cat.num_morphisms(), a.num_morphisms() + b.num_morphisms());
        let t = samples::terminal();
        let out = enumerate_functors(&s.cat, &t, Budget::default()).unwrap();
        prop_assert_eq!(out.len(), 1);
    }

    #[test]
    fn total_localization_is_groupoid(seed in any::<u64>()) {
        let c = random_category(&mut samples::rng(seed), 2, 4);
        if let Ok(q) = localize_total(&c).unwrap().materialize(WordBudget::default()) {
            prop_assert!(is_groupoid(&q.cat));
        }
        if is_groupoid(&c) {
            prop_assert_eq!(mark_isos(&c).marking().len(), c.num_morphisms());
        }
    }

    #[test]
    fn elements_of_singleton_has_base_size(seed in any::<u64>()) {
        let c = seeded(seed);
        let el = elements(&c, &SetValuedFunctor::singleton(&c, Variance::Covariant)).unwrap();
        prop_assert_eq!(el.cat.num_morphisms(), c.num_morphisms());
    }

    #[test]
    fn weighted_yoneda(seed in any::<u64>()) {
        let mut rng = samples::rng(seed);
        let c = seeded(seed);
        let f = SetValuedFunctor::random(&mut rng, &c, Variance::Covariant);
        for x in 0..c.num_objects() {
            let r = weighted_colim_set(&c, &SetValuedFunctor::hom_into(&c, x), &f).unwrap();
            prop_assert_eq!(r.size(), f.size(x));
        }
    }

    #[test]
    fn equal_verdicts_replay(seed in any::<u64>()) {
        let mut rng = samples::rng(seed);
        let p = random_presentation(&mut rng);
        let q = p.quiver();
        let start = rng.gen_range(0..q.num_vertices());
        let l1 = rng.gen_range(0..4);
        let l2 = rng.gen_range(0..4);
        if let (Some(a), Some(b)) = (random_path(&mut rng, q, start, l1), random_path(&mut rng, q, start, l2)) {
            let budget = WordBudget { max_len: None, max_classes: 5_000 };
            match word_equal(&p, &a, &b, budget) {
                WordVerdict::Equal(steps) => prop_assert_eq!(replay(&p, &a, &steps), Some(b.normalized(q))),
                WordVerdict::NotEqual(_) if a.tgt == b.tgt => {
                    let back = word_equal(&p, &b, &a, budget);
                    prop_assert!(!matches!(back, WordVerdict::Equal(_)));
                }
                _ => {}
            }
        }
    }
}
