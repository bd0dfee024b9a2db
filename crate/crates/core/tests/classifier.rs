mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;

use lecactus::census::block_sequences;
use lecactus::classify::{regime, Regime};
use lecactus::{
    amod, cactus_compatible, classify_chain_union_sum, classify_with_tail, is_le_cactus_bruteforce,
    necessary_condition_disconnected, BlockSequence, BruteForceOptions, Error, LeCactusTail,
    Method, Partition, Poset,
};

use common::random_posets;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn seq(blocks: &[&[usize]]) -> BlockSequence {
    BlockSequence::new(blocks.iter().map(|b| part(b)).collect()).unwrap()
}

fn brute(p: &Poset) -> bool {
    is_le_cactus_bruteforce(p, &BruteForceOptions::default())
        .unwrap()
        .is_le_cactus
}

#[test]
fn documented_examples() {
    assert!(
        classify_chain_union_sum(&seq(&[&[2, 2]]))
            .unwrap()
            .is_le_cactus
    );
    assert!(
        !classify_chain_union_sum(&seq(&[&[1, 1, 1], &[1]]))
            .unwrap()
            .is_le_cactus
    );
    assert!(
        classify_chain_union_sum(&seq(&[&[1], &[1, 1]]))
            .unwrap()
            .is_le_cactus
    );
    assert!(!cactus_compatible(5, 4, 5));
    for n in 1..=12 {
        assert!(cactus_compatible(0, n, 0));
    }
    assert_eq!(amod(0, 4), 4);

    let v =
        is_le_cactus_bruteforce(&seq(&[&[1, 1, 1], &[1]]).poset(), &Default::default()).unwrap();
    assert!(!v.is_le_cactus);
    assert_eq!(v.method, Method::BruteForce);
    let w = v.witness.unwrap();
    assert_eq!((w.i, w.j, w.k), (1, 3, 4));
}

#[test]
fn boundary_example_agrees_with_brute_force() {
    // (5,4,5): every λ ⊢ 4 with at least two parts between two 5-chains
    for lambda in Partition::admissible(4) {
        let r = Poset::chain(5)
            .ordinal_sum(&Poset::chain_union(&lambda).unwrap())
            .ordinal_sum(&Poset::chain(5));
        assert!(!brute(&r), "C5 > D{lambda} > C5");
    }
}

#[test]
fn closed_form_matches_brute_force_up_to_seven() {
    for n in 1..=7 {
        for s in block_sequences(n) {
            let closed = classify_chain_union_sum(&s).unwrap();
            let exhaustive = is_le_cactus_bruteforce(&s.poset(), &Default::default()).unwrap();
            assert_eq!(closed.is_le_cactus, exhaustive.is_le_cactus, "{s}");
            assert!(closed.witness.is_none());
            match exhaustive.witness {
                Some(w) => assert!(w.is_valid_for(&s.poset())),
                None => assert!(exhaustive.is_le_cactus),
            }
        }
    }
}

#[test]
fn chains_inside_blocks_are_normalized() {
    let s = seq(&[&[3], &[1, 1]]);
    assert_eq!(s.sizes(), vec![1, 1, 1, 2]);
    assert_eq!(
        classify_chain_union_sum(&s).unwrap().is_le_cactus,
        brute(&s.poset())
    );
    assert!(matches!(
        BlockSequence::new(vec![]).and_then(|s| classify_chain_union_sum(&s)),
        Err(Error::InadmissibleBlock { .. })
    ));
}

#[test]
fn disconnected_middle_blocks() {
    // every disconnected 4-element D with one element above it
    let mut seen = 0;
    for d in all_posets(4) {
        if d.components().len() < 2 {
            continue;
        }
        seen += 1;
        let r = d.ordinal_sum(&Poset::chain(1));
        assert!(!necessary_condition_disconnected(0, 4, 1));
        assert!(!brute(&r), "{}", d.to_text());
    }
    assert!(seen > 5);
    assert!(necessary_condition_disconnected(9, 5, 2));
    assert!(necessary_condition_disconnected(0, 2, 7));
}

#[test]
fn le_cactus_tail() {
    let tails: Vec<Poset> = (1..=4)
        .map(Poset::chain)
        .chain((2..=4).flat_map(|n| {
            Partition::admissible(n)
                .into_iter()
                .map(|l| Poset::chain_union(&l).unwrap())
        }))
        .collect();
    for tail in &tails {
        let certified = LeCactusTail::certify(tail, &Default::default())
            .unwrap()
            .unwrap();
        for n in 1..=4 {
            for s in block_sequences(n) {
                let r = s.poset().ordinal_sum(tail);
                let v = classify_with_tail(&s, certified);
                assert_eq!(
                    v.is_le_cactus,
                    brute(&r),
                    "{s} > tail of size {}",
                    tail.size()
                );
            }
        }
    }
    let v = classify_with_tail(&seq(&[&[1, 1]]), LeCactusTail::assume(3));
    assert!(v.is_le_cactus);
    assert!(brute(&Poset::antichain(2).ordinal_sum(&Poset::chain(3))));
    assert!(!classify_with_tail(&seq(&[&[1, 1, 1, 1]]), LeCactusTail::assume(1)).is_le_cactus);
    assert!(!brute(&Poset::antichain(4).ordinal_sum(&Poset::chain(1))));
}

#[test]
fn small_antichains_below_anything_le_cactus() {
    for n in 1..=4 {
        for p in random_posets(23, n, 10) {
            if !brute(&p) {
                continue;
            }
            for m in 1..=2 {
                assert!(brute(&Poset::antichain(m).ordinal_sum(&p)));
            }
        }
    }
}

#[test]
fn three_element_antichain_below_nonempty_tail_fails() {
    // the n = 3 rule already rejects (0, 3, q) for q ≥ 1
    for q in 1..=4 {
        assert!(!cactus_compatible(0, 3, q));
        assert!(!brute(&Poset::antichain(3).ordinal_sum(&Poset::chain(q))));
        assert!(!brute(
            &Poset::antichain(3).ordinal_sum(&Poset::antichain(q))
        ));
    }
}

#[test]
fn regime_sweep() {
    for p in 0..=30 {
        for q in 0..=30 {
            for n in 3..=12 {
                if p + 1 < q || (p + 1 == q && (n > 3 || amod(q as i64, 3) != 2)) {
                    assert!(!cactus_compatible(p, n, q), "({p},{n},{q})");
                }
                if p >= q + n {
                    assert!(cactus_compatible(p, n, q), "({p},{n},{q})");
                }
                if n > 3 && p + 4 > q + n {
                    assert!(cactus_compatible(p, n, q));
                    assert_eq!(regime(p, n, q), Regime::Above);
                }
            }
        }
    }
}

#[test]
fn three_element_block_one_below_the_tail() {
    // p = q - 1 with q ≡ 2 (mod 3) is compatible, not excluded
    for p in [1, 4, 7] {
        assert!(cactus_compatible(p, 3, p + 1));
        for lambda in Partition::admissible(3) {
            let r = Poset::chain(p)
                .ordinal_sum(&Poset::chain_union(&lambda).unwrap())
                .ordinal_sum(&Poset::chain(p + 1));
            assert!(brute(&r), "C{p} > D{lambda} > C{}", p + 1);
        }
    }
}

#[test]
fn budget_is_refused_not_guessed() {
    let opts = BruteForceOptions {
        max_extensions: 100,
        threads: 1,
    };
    assert!(matches!(
        is_le_cactus_bruteforce(&Poset::antichain(6), &opts),
        Err(Error::BudgetExceeded { cap: 100 })
    ));
}

#[test]
fn witness_does_not_depend_on_thread_count() {
    for s in block_sequences(7).into_iter().step_by(5) {
        let p = s.poset();
        let one = is_le_cactus_bruteforce(
            &p,
            &BruteForceOptions {
                threads: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let four = is_le_cactus_bruteforce(
            &p,
            &BruteForceOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, four, "{s}");
    }
}

/// One representative of each isomorphism class of posets on `n` elements.
fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let rel = pairs
            .iter()
            .enumerate()
            .filter(|(x, _)| mask >> x & 1 == 1)
            .map(|(_, &pr)| pr);
        let p = Poset::from_relation(n, rel).unwrap();
        let key = canonical_covers(&p);
        if seen.insert(key.clone()) {
            out.push(Poset::from_covers(n, &key).unwrap());
        }
    }
    out
}

/// Lexicographically least sorted cover list over all naturally labelled relabellings.
fn canonical_covers(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut covers: Vec<(usize, usize)> = p
            .covers()
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        if covers.iter().all(|&(a, b)| a < b) {
            covers.sort_unstable();
            if best.as_ref().is_none_or(|b| covers < *b) {
                best = Some(covers);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("identity relabelling of a natural labelling")
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

#[test]
fn poset_counts_up_to_isomorphism() {
    let counts: Vec<usize> = (1..=5).map(|n| all_posets(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63]);
}

#[test]
fn minimal_non_le_cactus_posets() {
    for n in 1..=3 {
        assert!(all_posets(n).iter().all(brute));
    }
    let mut report =
        String::from("# non-LE-cactus posets on 4 elements, one per isomorphism class\n");
    for p in all_posets(4) {
        let v = is_le_cactus_bruteforce(&p, &Default::default()).unwrap();
        if let Some(w) = v.witness {
            report.push('\n');
            report.push_str(&p.to_text());
            report.push_str(&format!(
                "# witness: labels {:?}, (i, j, k) = ({}, {}, {})\n",
                w.extension.labels(),
                w.i,
                w.j,
                w.k
            ));
        }
    }
    let path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/minimal_non_le_cactus.txt");
    if std::env::var_os("LECACTUS_BLESS").is_some() {
        std::fs::write(&path, &report).unwrap();
    }
    let golden = std::fs::read_to_string(&path).expect("golden file; rerun with LECACTUS_BLESS=1");
    assert_eq!(report, golden);
}
