#![allow(dead_code)]

use lecactus::census::block_sequences;
use lecactus::{linear_extensions, LinearExtension, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random naturally labelled poset: each pair `a < b` is related with
/// probability `density` before closing transitively.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen_bool(density) {
                pairs.push((a, b));
            }
        }
    }
    Poset::from_relation(n, pairs).unwrap()
}

pub fn random_posets(seed: u64, n: usize, count: usize) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
    (0..count)
        .map(|_| {
            let density = rng.gen_range(0.1..0.6);
            random_poset(&mut rng, n, density)
        })
        .collect()
}

/// Every chain-union ordinal sum of each size up to `max`, plus `random`
/// random posets per size.
pub fn corpus(max: usize, random: usize) -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for n in 1..=max {
        for s in block_sequences(n) {
            out.push((s.to_string(), s.poset()));
        }
        for (x, p) in random_posets(0x5eed, n, random).into_iter().enumerate() {
            out.push((format!("random-{n}-{x}"), p));
        }
    }
    out
}

pub fn extensions(p: &Poset) -> Vec<LinearExtension> {
    linear_extensions(p).collect()
}

/// Linear extensions by filtering all permutations of the labels; slow but
/// shares nothing with the backtracking enumerator.
pub fn extensions_by_filter(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.size();
    let mut out = Vec::new();
    let mut labels: Vec<usize> = (1..=n).collect();
    permute(&mut labels, 0, &mut |ls| {
        let ok = (0..n).all(|a| (0..n).all(|b| !p.lt(a, b) || ls[a] < ls[b]));
        if ok {
            out.push(ls.to_vec());
        }
    });
    out.sort();
    out
}

fn permute(xs: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

/// Labels of `f` after swapping `i` and `i + 1` when they sit on
/// incomparable elements; written from the definition.
pub fn bk_oracle(p: &Poset, f: &[usize], i: usize) -> Vec<usize> {
    let a = f.iter().position(|&l| l == i).unwrap();
    let b = f.iter().position(|&l| l == i + 1).unwrap();
    let mut g = f.to_vec();
    if !p.comparable(a, b) {
        g.swap(a, b);
    }
    g
}
