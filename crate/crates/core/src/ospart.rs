//! Linear extensions of a disjoint union of chains, encoded as ordered set
//! partitions, and the permutations through which promotion, evacuation,
//! `q_{k-1}`, `q_{jk}` and `t_i` act on them inside `P ⊕ D_λ ⊕ Q`.
//!
//! A permutation `w` acts on an ordered set partition by moving every number
//! `v` into the block that held `w^{-1}(v)`: the block that contained `v`
//! afterwards contains `w(v)`. Promotion `∂_k` is then the cycle
//! `v ↦ v - 1` on `{1..k}` (with `1 ↦ k`), and `q_{k-1}` is the reversal of
//! `{1..k}`. Composition of actions is composition of permutations, right
//! factor first.

use serde::{Deserialize, Serialize};

use crate::classify::amod;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::{LinearExtension, Poset};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedSetPartition {
    /// `block_of[v - 1]` is the 1-based block holding `v`.
    block_of: Vec<usize>,
    ell: usize,
}

impl OrderedSetPartition {
    pub fn new(block_of: Vec<usize>, ell: usize) -> Result<Self> {
        if let Some(&b) = block_of.iter().find(|&&b| b == 0 || b > ell) {
            return Err(Error::InvalidIndices(format!(
                "block {b} outside 1..={ell}"
            )));
        }
        Ok(OrderedSetPartition { block_of, ell })
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v - 1]
    }

    /// Blocks `L_1, …, L_ℓ`, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.ell];
        for (i, &b) in self.block_of.iter().enumerate() {
            out[b - 1].push(i + 1);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().iter().map(Vec::len).collect()
    }

    /// The block holding `v` afterwards holds `w(v)`.
    pub fn act(&self, w: &Permutation) -> OrderedSetPartition {
        assert_eq!(w.rank(), self.n(), "permutation rank must match");
        let mut block_of = vec![0; self.n()];
        for v in 1..=self.n() {
            block_of[w.apply(v) - 1] = self.block_of[v - 1];
        }
        OrderedSetPartition {
            block_of,
            ell: self.ell,
        }
    }
}

/// Reads off the blocks `L_m = g^{-1}(C_m)` of a linear extension of a
/// disjoint union of chains. Chains are ordered by smallest element index.
pub fn from_linear_extension(d: &Poset, g: &LinearExtension) -> Result<OrderedSetPartition> {
    let chains = d.chain_components()?;
    let mut block_of = vec![0; d.size()];
    for (m, chain) in chains.iter().enumerate() {
        for &e in chain {
            block_of[g.label(e) - 1] = m + 1;
        }
    }
    Ok(OrderedSetPartition {
        block_of,
        ell: chains.len(),
    })
}

/// Inverse of [`from_linear_extension`]: each chain receives its block's
/// numbers in increasing order from the bottom.
pub fn to_linear_extension(d: &Poset, osp: &OrderedSetPartition) -> Result<LinearExtension> {
    let chains = d.chain_components()?;
    let blocks = osp.blocks();
    if chains.len() != blocks.len() || chains.iter().zip(&blocks).any(|(c, b)| c.len() != b.len()) {
        return Err(Error::InvalidLabels(format!(
            "block sizes {:?} do not match the chains",
            osp.block_sizes()
        )));
    }
    let mut labels = vec![0; d.size()];
    for (chain, block) in chains.iter().zip(&blocks) {
        for (&e, &v) in chain.iter().zip(block) {
            labels[e] = v;
        }
    }
    LinearExtension::new(d, labels)
}

/// Block sizes `(p, n, q)` of `P ⊕ D ⊕ Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub p: usize,
    pub n: usize,
    pub q: usize,
}

impl Triple {
    pub fn new(p: usize, n: usize, q: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndices(
                "middle block must be non-empty".into(),
            ));
        }
        Ok(Triple { p, n, q })
    }

    pub fn total(&self) -> usize {
        self.p + self.n + self.q
    }
}

/// A poset together with cut points splitting it as `P ⊕ D ⊕ Q`.
#[derive(Debug, Clone)]
pub struct Sandwich {
    poset: Poset,
    middle: Poset,
    triple: Triple,
}

impl Sandwich {
    pub fn new(lower: &Poset, middle: &Poset, upper: &Poset) -> Result<Self> {
        let poset = lower.ordinal_sum(middle).ordinal_sum(upper);
        Self::from_cuts(poset, lower.size(), middle.size())
    }

    /// Uses elements `p..p+n` as the middle block; both cuts must be
    /// ordinal-sum cuts.
    pub fn from_cuts(poset: Poset, p: usize, n: usize) -> Result<Self> {
        if n == 0
            || p + n > poset.size()
            || !poset.is_ordinal_cut(p)
            || !poset.is_ordinal_cut(p + n)
        {
            return Err(Error::NotAnOrdinalSum {
                lower: p,
                upper: p + n,
            });
        }
        let triple = Triple::new(p, n, poset.size() - p - n)?;
        let middle = poset.restrict(p, p + n);
        Ok(Sandwich {
            poset,
            middle,
            triple,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn middle(&self) -> &Poset {
        &self.middle
    }

    pub fn triple(&self) -> Triple {
        self.triple
    }

    /// The induced map `I`: `g(x) = f(x) - p` on the middle block.
    pub fn induced_extension(&self, f: &LinearExtension) -> LinearExtension {
        let Triple { p, n, .. } = self.triple;
        let labels = (p..p + n).map(|e| f.label(e) - p).collect();
        LinearExtension::new(&self.middle, labels)
            .expect("labels of an ordinal-sum block form a linear extension")
    }

    /// `I(f)` read as an ordered set partition.
    pub fn induced_partition(&self, f: &LinearExtension) -> Result<OrderedSetPartition> {
        from_linear_extension(&self.middle, &self.induced_extension(f))
    }
}

fn check_range(index: usize, min: usize, max: usize) -> Result<()> {
    if index < min || index > max {
        Err(Error::IndexOutOfRange { index, min, max })
    } else {
        Ok(())
    }
}

/// `∂_k` on ordered set partitions of `{1..n}`: the cycle `(k … 2 1)`.
pub fn promotion_perm(k: usize, n: usize) -> Result<Permutation> {
    check_range(k, 1, n)?;
    Ok(Permutation::descending_cycle(n, k))
}

/// `q_{k-1}` on ordered set partitions of `{1..n}`: reversal of `{1..k}`.
pub fn evacuation_perm(k: usize, n: usize) -> Result<Permutation> {
    check_range(k, 1, n)?;
    Ok(Permutation::interval_reversal(n, 1, k))
}

/// Effect of `q_{k-1}` on the middle block of `P ⊕ D ⊕ Q`.
pub fn q_restriction(t: Triple, k: usize) -> Result<Permutation> {
    check_range(k, 1, t.total())?;
    let Triple { p, n, .. } = t;
    Ok(if k - 1 <= p {
        Permutation::identity(n)
    } else if k - 1 < p + n {
        evacuation_perm(k - p, n)?
    } else {
        evacuation_perm(n, n)?.compose(&promotion_perm(n, n)?.pow(k - p - n))
    })
}

/// Reversal of the cyclic interval `m-ℓ, …, m` with every point reduced into
/// `{1..n}`: sends `m-ℓ+s` to `m-s`.
pub fn cyclic_interval_reversal(n: usize, m: usize, ell: usize) -> Result<Permutation> {
    if ell >= n {
        return Err(Error::InvalidIndices(format!(
            "interval of {} points does not fit in 1..={n}",
            ell + 1
        )));
    }
    let mut images: Vec<usize> = (1..=n).collect();
    for s in 0..=ell {
        let from = amod(m as i64 - ell as i64 + s as i64, n);
        let to = amod(m as i64 - s as i64, n);
        images[from - 1] = to;
    }
    Permutation::from_images(images)
}

/// Whether `(j, k)` falls in the closed-form regime `k = p+n+r`, `r ≥ 0`,
/// `p < k-j < p+n`.
pub fn qjk_closed_form_applies(t: Triple, j: usize, k: usize) -> bool {
    j < k && k >= t.p + t.n && t.p < k - j && k - j < t.p + t.n
}

/// Effect of `q_{jk}` on the middle block. In the closed-form regime this is
/// the cyclic interval reversal with `m = r mod n`, `ℓ = k-j-p`; otherwise
/// `q_{k-1} q_{k-j} q_{k-1}` is composed from [`q_restriction`].
pub fn qjk_restriction(t: Triple, j: usize, k: usize) -> Result<Permutation> {
    if j == 0 || j >= k {
        return Err(Error::InvalidIndices(format!(
            "q_{{{j},{k}}} needs 1 <= j < k"
        )));
    }
    check_range(k, 2, t.total())?;
    if qjk_closed_form_applies(t, j, k) {
        let r = k - t.p - t.n;
        let m = amod(r as i64, t.n);
        cyclic_interval_reversal(t.n, m, k - j - t.p)
    } else {
        qjk_by_evacuations(t, j, k)
    }
}

/// `q_{k-1} q_{k-j} q_{k-1}` from the three evacuation restrictions.
pub fn qjk_by_evacuations(t: Triple, j: usize, k: usize) -> Result<Permutation> {
    let outer = q_restriction(t, k)?;
    let inner = q_restriction(t, k - j + 1)?;
    Ok(outer.compose(&inner).compose(&outer))
}

/// Effect of `t_i` on the middle block.
pub fn bk_restriction(t: Triple, i: usize) -> Result<Permutation> {
    check_range(i, 1, t.total().saturating_sub(1))?;
    let Triple { p, n, .. } = t;
    Ok(if i > p && i < p + n {
        Permutation::transposition(n, i - p, i - p + 1)
    } else {
        Permutation::identity(n)
    })
}

/// Effect of `(t_i q_{jk})^2` on the middle block.
pub fn relation_restriction(t: Triple, i: usize, j: usize, k: usize) -> Result<Permutation> {
    if i == 0 || i + 1 >= j || j >= k || k > t.total() {
        return Err(Error::InvalidIndices(format!(
            "need 1 <= i, i+1 < j < k <= {}; got ({i}, {j}, {k})",
            t.total()
        )));
    }
    let ti = bk_restriction(t, i)?;
    let q = qjk_restriction(t, j, k)?;
    let once = ti.compose(&q);
    Ok(once.compose(&once))
}
