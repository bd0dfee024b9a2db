//! Bender-Knuth involutions, promotion and evacuation on linear extensions.
//!
//! Labels are 1-based. `bk(i)` acts on labels `i, i+1`; `promotion(i)` moves
//! labels `1..=i` and fixes the rest; `evacuation(i)` moves labels `1..=i+1`.

use crate::cactus::{CactusWord, Generator};
use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset};

fn check_range(index: usize, min: usize, max: usize) -> Result<()> {
    if index < min || index > max {
        Err(Error::IndexOutOfRange { index, min, max })
    } else {
        Ok(())
    }
}

/// The Bender-Knuth move `t_i`: swap labels `i` and `i+1` when they sit on
/// incomparable elements.
pub fn bk(poset: &Poset, f: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_range(i, 1, poset.size().saturating_sub(1))?;
    let mut g = f.clone();
    bk_in_place(poset, &mut g, i);
    Ok(g)
}

pub(crate) fn bk_in_place(poset: &Poset, f: &mut LinearExtension, i: usize) {
    if !poset.comparable(f.element(i), f.element(i + 1)) {
        f.swap_adjacent(i);
    }
}

/// Promotion `∂_i` by sliding along the promotion chain.
pub fn promotion(poset: &Poset, f: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_range(i, 1, poset.size())?;
    Ok(promotion_unchecked(poset, f, i))
}

fn promotion_unchecked(poset: &Poset, f: &LinearExtension, i: usize) -> LinearExtension {
    let mut labels = f.labels().to_vec();
    let mut hole = f.element(1);
    loop {
        // smallest label among covers of the hole; labels are distinct
        let next = poset
            .upper_covers(hole)
            .iter()
            .copied()
            .filter(|&u| labels[u] <= i)
            .min_by_key(|&u| labels[u]);
        match next {
            Some(u) => {
                labels[hole] = labels[u];
                hole = u;
            }
            None => break,
        }
    }
    // The hole receives i+1, then labels 2..=i+1 drop by one. A pre-existing
    // i+1 elsewhere keeps its label.
    for (e, l) in labels.iter_mut().enumerate() {
        if e == hole {
            *l = i;
        } else if (2..=i).contains(l) {
            *l -= 1;
        }
    }
    let mut word = vec![0; labels.len()];
    for (e, &l) in labels.iter().enumerate() {
        word[l - 1] = e;
    }
    LinearExtension::from_word_unchecked(word)
}

/// Evacuation `q_i`: promotions `∂_{i+1}, ∂_i, …, ∂_1` in that order.
pub fn evacuation(poset: &Poset, f: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_range(i, 1, poset.size().saturating_sub(1))?;
    Ok(evacuation_unchecked(poset, f, i))
}

fn evacuation_unchecked(poset: &Poset, f: &LinearExtension, i: usize) -> LinearExtension {
    (1..=i + 1)
        .rev()
        .fold(f.clone(), |g, round| promotion_unchecked(poset, &g, round))
}

/// Applies a cactus word, rightmost generator first. `Q(i, j)` is applied
/// through its expansion into Bender-Knuth moves.
pub fn apply_word(poset: &Poset, f: &LinearExtension, w: &CactusWord) -> Result<LinearExtension> {
    let n = poset.size();
    for g in w.generators() {
        g.check_rank(n)?;
    }
    let mut out = f.clone();
    for g in w.generators().iter().rev() {
        match *g {
            Generator::T(i) => bk_in_place(poset, &mut out, i),
            Generator::Q(..) => {
                for t in g.expand().iter().rev() {
                    bk_in_place(poset, &mut out, *t);
                }
            }
        }
    }
    Ok(out)
}

/// Applies a sequence of Bender-Knuth indices, last entry first.
pub fn apply_bk_sequence(
    poset: &Poset,
    f: &LinearExtension,
    indices: &[usize],
) -> Result<LinearExtension> {
    let max = poset.size().saturating_sub(1);
    for &i in indices {
        check_range(i, 1, max)?;
    }
    let mut out = f.clone();
    for &i in indices.iter().rev() {
        bk_in_place(poset, &mut out, i);
    }
    Ok(out)
}
