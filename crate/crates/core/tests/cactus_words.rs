use lecactus::cactus::{qi_word, qjk_word, to_symmetric, verify_presentation};
use lecactus::{CactusWord, Error, Generator, Permutation};
use proptest::prelude::*;

const RANK: usize = 8;

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        (1..RANK).prop_map(Generator::T),
        (1..RANK).prop_flat_map(|i| ((i + 1)..=RANK).prop_map(move |j| Generator::Q(i, j))),
    ]
}

fn word() -> impl Strategy<Value = CactusWord> {
    prop::collection::vec(generator(), 0..8).prop_map(CactusWord::new)
}

/// Product of the images in displayed order, built by hand.
fn image_by_hand(w: &CactusWord) -> Permutation {
    let mut acc = Permutation::identity(RANK);
    for g in w.generators() {
        let image = match *g {
            Generator::T(i) => Permutation::transposition(RANK, i, i + 1),
            Generator::Q(i, j) => {
                let mut images: Vec<usize> = (1..=RANK).collect();
                for v in i..=j {
                    images[v - 1] = i + j - v;
                }
                Permutation::from_images(images).unwrap()
            }
        };
        acc = acc.compose(&image);
    }
    acc
}

proptest! {
    #[test]
    fn to_symmetric_is_a_homomorphism(a in word(), b in word()) {
        let sa = to_symmetric(&a, RANK).unwrap();
        let sb = to_symmetric(&b, RANK).unwrap();
        prop_assert_eq!(to_symmetric(&a.concat(&b), RANK).unwrap(), sa.compose(&sb));
        prop_assert_eq!(to_symmetric(&a, RANK).unwrap(), image_by_hand(&a));
    }

    #[test]
    fn expansion_preserves_the_image(a in word()) {
        prop_assert_eq!(
            to_symmetric(&a.expand(), RANK).unwrap(),
            to_symmetric(&a, RANK).unwrap()
        );
    }

    #[test]
    fn display_round_trips(a in word()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<CactusWord>().unwrap(), a);
    }
}

#[test]
fn qi_maps_to_the_initial_reversal() {
    for i in 1..RANK {
        assert_eq!(
            to_symmetric(&qi_word(i), RANK).unwrap(),
            Permutation::interval_reversal(RANK, 1, i + 1)
        );
    }
}

#[test]
fn qjk_maps_to_an_interval_reversal() {
    for k in 2..=RANK {
        for j in 1..k {
            assert_eq!(
                to_symmetric(&qjk_word(j, k).unwrap(), RANK).unwrap(),
                Permutation::interval_reversal(RANK, j, k)
            );
        }
    }
}

#[test]
fn conjugation_example() {
    let outer: CactusWord = "q[2,7]".parse().unwrap();
    let inner: CactusWord = "q[3,5]".parse().unwrap();
    let start: Vec<u8> = b"12345678".to_vec();
    let show = |w: &CactusWord| {
        String::from_utf8(to_symmetric(w, 8).unwrap().act_on_sequence(&start)).unwrap()
    };
    let step2 = inner.concat(&outer);
    let step3 = outer.concat(&step2);
    assert_eq!(show(&outer), "17654328");
    assert_eq!(show(&step2), "17456328");
    assert_eq!(show(&step3), "12365478");
    let target: CactusWord = "q[4,6]".parse().unwrap();
    assert_eq!(
        to_symmetric(&step3, 8).unwrap(),
        to_symmetric(&target, 8).unwrap()
    );
}

#[test]
fn presentations_hold_up_to_rank_eight() {
    for n in 1..=8 {
        let report = verify_presentation(n);
        assert!(
            report.violations.is_empty(),
            "rank {n}: {:?}",
            report.violations
        );
        if n >= 2 {
            assert!(report.instances_checked > 0);
        }
    }
}

#[test]
fn parse_forms() {
    let w: CactusWord = "t3 qi2 qjk(2,5) q[1,4]".parse().unwrap();
    assert_eq!(
        w.generators(),
        &[
            Generator::T(3),
            Generator::Q(1, 3),
            Generator::Q(2, 5),
            Generator::Q(1, 4)
        ]
    );
    assert!("t0".parse::<CactusWord>().is_err());
    assert!("q[3,3]".parse::<CactusWord>().is_err());
    assert!("x1".parse::<CactusWord>().is_err());
    assert!(matches!(
        to_symmetric(&w, 4),
        Err(Error::InvalidRank { needed: 5, rank: 4 })
    ));
}
