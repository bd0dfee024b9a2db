//! Deciding the LE-cactus property: the arithmetic cactus-compatibility test,
//! the closed-form classification of ordinal sums of chain unions, and an
//! exhaustive checker for arbitrary posets.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cactus::{qjk_word, CactusWord, Generator};
use crate::dynamics::apply_word;
use crate::error::{Error, Result};
use crate::ospart::Triple;
use crate::poset::{LinearExtension, Partition, Poset};
use crate::table::ActionTable;

/// `x mod n` with the result taken in `{1..n}`.
pub fn amod(x: i64, n: usize) -> usize {
    assert!(n >= 1, "modulus must be positive");
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

/// Which clause of the compatibility test decides a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `n ∈ {1, 2}`: always compatible.
    SmallBlock,
    /// `p > q + n - 4`: no relation reaches the middle block.
    Above,
    /// `p = q + n - 4`: compatible iff `q mod n ∉ {1, 3}`.
    Boundary,
    /// `p = q + n - r` with `r > 4`: compatible iff `q mod n > r - 1`.
    Deficit { r: usize },
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::SmallBlock => f.write_str("small-block"),
            Regime::Above => f.write_str("above"),
            Regime::Boundary => f.write_str("boundary"),
            Regime::Deficit { r } => write!(f, "deficit(r={r})"),
        }
    }
}

pub fn regime(p: usize, n: usize, q: usize) -> Regime {
    if n <= 2 {
        return Regime::SmallBlock;
    }
    // r = q + n - p
    let r = (q + n) as i64 - p as i64;
    match r {
        r if r < 4 => Regime::Above,
        4 => Regime::Boundary,
        r => Regime::Deficit { r: r as usize },
    }
}

/// Whether `(t_i q_{jk})^2` fixes the middle-block labels of every linear
/// extension of every `P ⊕ D ⊕ Q` with `|P| = p`, `D ∈ 𝔇_n`, `|Q| = q`.
pub fn cactus_compatible(p: usize, n: usize, q: usize) -> bool {
    assert!(n >= 1, "middle block must be non-empty");
    let m = || amod(q as i64, n);
    if n <= 2 {
        return true;
    }
    if n == 3 {
        return p + 1 > q || (p + 1 == q && !matches!(m(), 1 | 3));
    }
    match regime(p, n, q) {
        Regime::Above => true,
        Regime::Boundary => !matches!(m(), 1 | 3),
        Regime::Deficit { r } => m() > r - 1,
        Regime::SmallBlock => unreachable!(),
    }
}

/// Necessary condition for `P ⊕ D ⊕ Q` with disconnected `|D| = n` to be
/// LE-cactus.
pub fn necessary_condition_disconnected(p: usize, n: usize, q: usize) -> bool {
    cactus_compatible(p, n, q)
}

/// An ordinal sum `D_{μ_1} ⊕ … ⊕ D_{μ_ℓ}`, bottom block first. A block that
/// is a single chain `C_m` is read as `m` consecutive one-element blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSequence {
    blocks: Vec<Partition>,
}

impl BlockSequence {
    pub fn new(blocks: Vec<Partition>) -> Result<Self> {
        if let Some(index) = blocks.iter().position(|b| b.n() == 0) {
            return Err(Error::InadmissibleBlock {
                index,
                reason: "empty block".into(),
            });
        }
        Ok(BlockSequence { blocks })
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().map(Partition::n).sum()
    }

    /// Block sizes `a_1, …, a_ℓ` after splitting single chains.
    pub fn sizes(&self) -> Vec<usize> {
        self.normalized().iter().map(Partition::n).collect()
    }

    /// Blocks with every single chain `C_m` split into `m` copies of `D_(1)`.
    pub fn normalized(&self) -> Vec<Partition> {
        let one = Partition::new(vec![1]).expect("(1) is a partition");
        self.blocks
            .iter()
            .flat_map(|b| {
                if b.ell() == 1 {
                    vec![one.clone(); b.n()]
                } else {
                    vec![b.clone()]
                }
            })
            .collect()
    }

    pub fn poset(&self) -> Poset {
        self.normalized().iter().fold(Poset::empty(), |acc, b| {
            acc.ordinal_sum(&Poset::chain_union(b).expect("normalized blocks are admissible"))
        })
    }

    /// `(Σ_{r<i} a_r, a_i, Σ_{r>i} a_r + tail)` for each block.
    pub fn triples(&self, tail: usize) -> Vec<Triple> {
        let sizes = self.sizes();
        let total: usize = sizes.iter().sum();
        let mut below = 0;
        sizes
            .iter()
            .map(|&a| {
                let t = Triple {
                    p: below,
                    n: a,
                    q: total - below - a + tail,
                };
                below += a;
                t
            })
            .collect()
    }
}

impl fmt::Display for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.parts().iter().map(|p| p.to_string()).collect();
                format!("D[{}]", inner.join(","))
            })
            .collect();
        f.write_str(&parts.join(" > "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    ClosedForm,
    CrossValidated,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute-force",
            Method::ClosedForm => "closed-form",
            Method::CrossValidated => "cross-validated",
        })
    }
}

/// A linear extension `f` with `(t_i q_{jk})^2 f ≠ f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub extension: LinearExtension,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Witness {
    /// The word `(t_i q_{jk})^2`.
    pub fn word(&self) -> CactusWord {
        relation_word(self.i, self.j, self.k)
    }

    /// Replays the relation through Bender-Knuth moves.
    pub fn replay(&self, poset: &Poset) -> Result<LinearExtension> {
        apply_word(poset, &self.extension, &self.word())
    }

    pub fn is_valid_for(&self, poset: &Poset) -> bool {
        self.replay(poset).is_ok_and(|g| g != self.extension)
    }
}

pub fn relation_word(i: usize, j: usize, k: usize) -> CactusWord {
    let once = CactusWord::new(vec![Generator::T(i)])
        .concat(&qjk_word(j, k).expect("relation indices satisfy j < k"));
    once.pow(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub size: usize,
    pub linear_extensions: usize,
    pub relation_triples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_le_cactus: bool,
    pub witness: Option<Witness>,
    pub method: Method,
    pub stats: Option<SearchStats>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceOptions {
    /// Refuse posets with more linear extensions than this.
    pub max_extensions: usize,
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            max_extensions: 1_000_000,
            threads: 1,
        }
    }
}

/// All `(i, j, k)` with `i + 1 < j < k ≤ n`, in lexicographic order.
pub fn relation_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 2)..=n {
            for k in (j + 1)..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn with_threads<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return job();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(job)
}

/// Checks every cactus relation on every linear extension. The witness is
/// the first failing extension (enumeration order) of the lexicographically
/// first failing triple.
pub fn is_le_cactus_bruteforce(poset: &Poset, opts: &BruteForceOptions) -> Result<Verdict> {
    with_threads(opts.threads, || {
        let table = ActionTable::build(poset, opts.max_extensions)?;
        let triples = relation_triples(poset.size());
        let failure = triples
            .par_iter()
            .find_map_first(|&(i, j, k)| table.relation_failure(i, j, k).map(|x| (i, j, k, x)));
        let stats = SearchStats {
            size: poset.size(),
            linear_extensions: table.len(),
            relation_triples: triples.len(),
        };
        Ok(Verdict {
            is_le_cactus: failure.is_none(),
            witness: failure.map(|(i, j, k, x)| Witness {
                extension: table.extensions()[x].clone(),
                i,
                j,
                k,
            }),
            method: Method::BruteForce,
            stats: Some(stats),
        })
    })
}

/// Per-block breakdown of the closed-form test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCheck {
    pub triple: Triple,
    pub regime: Regime,
    pub compatible: bool,
}

pub fn block_checks(seq: &BlockSequence, tail: usize) -> Vec<BlockCheck> {
    seq.triples(tail)
        .into_iter()
        .map(|t| BlockCheck {
            triple: t,
            regime: regime(t.p, t.n, t.q),
            compatible: cactus_compatible(t.p, t.n, t.q),
        })
        .collect()
}

/// Closed-form verdict for `D_{μ_1} ⊕ … ⊕ D_{μ_ℓ}`: LE-cactus iff every
/// block triple is cactus-compatible.
pub fn classify_chain_union_sum(seq: &BlockSequence) -> Result<Verdict> {
    if seq.total() == 0 {
        return Err(Error::InadmissibleBlock {
            index: 0,
            reason: "empty sequence".into(),
        });
    }
    Ok(closed_form_verdict(seq, 0))
}

fn closed_form_verdict(seq: &BlockSequence, tail: usize) -> Verdict {
    Verdict {
        is_le_cactus: block_checks(seq, tail).iter().all(|c| c.compatible),
        witness: None,
        method: Method::ClosedForm,
        stats: None,
    }
}

/// A tail poset known to be LE-cactus, carried by size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeCactusTail {
    size: usize,
}

impl LeCactusTail {
    /// Trusts the caller that a tail of this size is LE-cactus.
    pub fn assume(size: usize) -> Self {
        LeCactusTail { size }
    }

    /// Certifies by brute force; `None` if the poset is not LE-cactus.
    pub fn certify(poset: &Poset, opts: &BruteForceOptions) -> Result<Option<Self>> {
        let v = is_le_cactus_bruteforce(poset, opts)?;
        Ok(v.is_le_cactus
            .then_some(LeCactusTail { size: poset.size() }))
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Closed-form verdict for `D_{μ_1} ⊕ … ⊕ D_{μ_ℓ} ⊕ P` with `P` LE-cactus.
pub fn classify_with_tail(seq: &BlockSequence, tail: LeCactusTail) -> Verdict {
    closed_form_verdict(seq, tail.size())
}

/// Runs both routes; the verdict carries the brute-force witness. Returns the
/// closed-form verdict alongside so callers can report disagreement.
pub fn cross_validate(seq: &BlockSequence, opts: &BruteForceOptions) -> Result<(Verdict, Verdict)> {
    let closed = classify_chain_union_sum(seq)?;
    let brute = is_le_cactus_bruteforce(&seq.poset(), opts)?;
    let combined = Verdict {
        method: Method::CrossValidated,
        ..brute
    };
    Ok((combined, closed))
}
