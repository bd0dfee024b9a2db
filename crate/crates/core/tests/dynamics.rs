mod common;

use lecactus::cactus::{qi_word, qjk_word};
use lecactus::dynamics::apply_bk_sequence;
use lecactus::{apply_word, bk, evacuation, promotion, LinearExtension, Poset};
use proptest::prelude::*;
use proptest::sample::Index;

use common::{bk_oracle, extensions};

/// A naturally labelled poset on `1..=max` elements from random upper-triangle bits.
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in (a + 1)..n {
                    if it.next().unwrap() {
                        pairs.push((a, b));
                    }
                }
            }
            Poset::from_relation(n, pairs).unwrap()
        })
    })
}

fn poset_and_extension(max: usize) -> impl Strategy<Value = (Poset, LinearExtension)> {
    (poset_strategy(max), any::<Index>()).prop_map(|(p, ix)| {
        let all = extensions(&p);
        let f = ix.get(&all).clone();
        (p, f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bk_matches_definition((p, f) in poset_and_extension(8)) {
        for i in 1..p.size() {
            let g = bk(&p, &f, i).unwrap();
            prop_assert_eq!(g.labels(), &bk_oracle(&p, f.labels(), i)[..]);
            prop_assert_eq!(bk(&p, &g, i).unwrap(), f.clone());
        }
    }

    #[test]
    fn far_moves_commute((p, f) in poset_and_extension(8)) {
        let n = p.size();
        for i in 1..n {
            for j in (i + 2)..n {
                let a = apply_bk_sequence(&p, &f, &[i, j]).unwrap();
                let b = apply_bk_sequence(&p, &f, &[j, i]).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn sliding_promotion_is_a_bk_chain((p, f) in poset_and_extension(8)) {
        for i in 1..=p.size() {
            // t_{i-1} … t_1, with t_1 applied first
            let chain: Vec<usize> = (1..i).rev().collect();
            prop_assert_eq!(
                promotion(&p, &f, i).unwrap(),
                apply_bk_sequence(&p, &f, &chain).unwrap()
            );
        }
    }

    #[test]
    fn evacuations_are_involutions((p, f) in poset_and_extension(8)) {
        let n = p.size();
        for i in 1..n {
            let g = evacuation(&p, &f, i).unwrap();
            prop_assert_eq!(evacuation(&p, &g, i).unwrap(), f.clone());
            prop_assert_eq!(&apply_word(&p, &f, &qi_word(i)).unwrap(), &g);
        }
        for k in 2..=n {
            for j in 1..k {
                let w = qjk_word(j, k).unwrap();
                let g = apply_word(&p, &f, &w).unwrap();
                prop_assert_eq!(apply_word(&p, &g, &w).unwrap(), f.clone());
            }
        }
    }

    #[test]
    fn moves_stay_inside_the_extension_set((p, f) in poset_and_extension(8)) {
        for i in 1..=p.size() {
            let g = promotion(&p, &f, i).unwrap();
            prop_assert!(lecactus::is_linear_extension(&p, g.labels()));
        }
    }
}

#[test]
fn promotion_on_a_chain_is_trivial() {
    let p = Poset::chain(6);
    let f = extensions(&p).pop().unwrap();
    for i in 1..=6 {
        assert_eq!(promotion(&p, &f, i).unwrap(), f);
    }
    for i in 1..6 {
        assert_eq!(evacuation(&p, &f, i).unwrap(), f);
    }
}

#[test]
fn full_promotion_has_order_dividing_n_on_antichain_orbits() {
    // on an antichain, ∂_n rotates the labels
    let p = Poset::antichain(5);
    for f in extensions(&p) {
        let mut g = f.clone();
        for _ in 0..5 {
            g = promotion(&p, &g, 5).unwrap();
        }
        assert_eq!(g, f);
    }
}

#[test]
fn index_errors() {
    let p = Poset::antichain(3);
    let f = extensions(&p).remove(0);
    assert!(bk(&p, &f, 0).is_err());
    assert!(bk(&p, &f, 3).is_err());
    assert!(promotion(&p, &f, 4).is_err());
    assert!(evacuation(&p, &f, 3).is_err());
    assert!(apply_word(&p, &f, &qi_word(3)).is_err());
}
