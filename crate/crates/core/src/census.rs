//! Exhaustive sweeps over ordinal sums of chain unions: the census behind the
//! `enumerate` command and the cross-validation behind `xval`.

use serde::Serialize;

use crate::classify::{
    block_checks, classify_chain_union_sum, is_le_cactus_bruteforce, BlockCheck, BlockSequence,
    BruteForceOptions,
};
use crate::dynamics::{evacuation, promotion};
use crate::error::Result;
use crate::ospart::{evacuation_perm, from_linear_extension, promotion_perm};
use crate::poset::{linear_extensions, Partition, Poset};

/// Compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every ordinal sum of admissible chain-union blocks with the given total
/// size, each exactly once: compositions in lexicographic order, then blocks
/// in the order of [`Partition::admissible`].
pub fn block_sequences(total: usize) -> Vec<BlockSequence> {
    let mut out = Vec::new();
    for comp in compositions(total) {
        let choices: Vec<Vec<Partition>> = comp.iter().map(|&c| Partition::admissible(c)).collect();
        let mut idx = vec![0; comp.len()];
        // odometer over block choices, last block fastest
        'choices: loop {
            let blocks = idx
                .iter()
                .zip(&choices)
                .map(|(&i, c)| c[i].clone())
                .collect();
            out.push(BlockSequence::new(blocks).expect("admissible blocks are non-empty"));
            let mut pos = comp.len();
            loop {
                if pos == 0 {
                    break 'choices;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    continue 'choices;
                }
                idx[pos] = 0;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub poset: String,
    pub blocks: Vec<BlockCheck>,
    pub closed_form: bool,
    /// Present when brute force was run.
    pub brute_force: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub size: usize,
    pub posets: usize,
    pub le_cactus: usize,
    pub not_le_cactus: usize,
    pub disagreements: usize,
    pub entries: Vec<CensusEntry>,
}

/// Classifies every chain-union ordinal sum of the given size; with
/// `brute_force` set, each verdict is also checked exhaustively.
pub fn census(size: usize, brute_force: Option<&BruteForceOptions>) -> Result<Census> {
    let mut entries = Vec::new();
    for seq in block_sequences(size) {
        let closed = classify_chain_union_sum(&seq)?.is_le_cactus;
        let brute = match brute_force {
            Some(opts) => Some(is_le_cactus_bruteforce(&seq.poset(), opts)?.is_le_cactus),
            None => None,
        };
        entries.push(CensusEntry {
            poset: seq.to_string(),
            blocks: block_checks(&seq, 0),
            closed_form: closed,
            brute_force: brute,
        });
    }
    let le_cactus = entries.iter().filter(|e| e.closed_form).count();
    let disagreements = entries
        .iter()
        .filter(|e| e.brute_force.is_some_and(|b| b != e.closed_form))
        .count();
    Ok(Census {
        size,
        posets: entries.len(),
        le_cactus,
        not_le_cactus: entries.len() - le_cactus,
        disagreements,
        entries,
    })
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClassifierRow {
    pub size: usize,
    pub posets: usize,
    pub le_cactus: usize,
    pub linear_extensions: usize,
    pub relation_instances: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CommutationRow {
    pub size: usize,
    pub partitions: usize,
    pub linear_extensions: usize,
    pub checks: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub kind: String,
    pub poset: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct XvalReport {
    pub max_size: usize,
    pub classifier: Vec<ClassifierRow>,
    pub commutation: Vec<CommutationRow>,
    pub total_disagreements: usize,
    /// Smallest disagreement found, if any.
    pub counterexample: Option<Counterexample>,
}

impl XvalReport {
    pub fn passed(&self) -> bool {
        self.total_disagreements == 0
    }
}

/// Closed form against brute force on every chain-union ordinal sum up to
/// `max_size`, and the ordered-set-partition model against sliding
/// promotion and evacuation on every `D_λ` up to `max_size`.
pub fn cross_validate_all(max_size: usize, opts: &BruteForceOptions) -> Result<XvalReport> {
    let mut classifier = Vec::new();
    let mut commutation = Vec::new();
    let mut counterexample = None;
    for size in 1..=max_size {
        let mut row = ClassifierRow {
            size,
            ..Default::default()
        };
        for seq in block_sequences(size) {
            let closed = classify_chain_union_sum(&seq)?;
            let brute = is_le_cactus_bruteforce(&seq.poset(), opts)?;
            let stats = brute.stats.unwrap_or_default();
            row.posets += 1;
            row.le_cactus += usize::from(brute.is_le_cactus);
            row.linear_extensions += stats.linear_extensions;
            row.relation_instances += stats.linear_extensions * stats.relation_triples;
            if closed.is_le_cactus != brute.is_le_cactus {
                row.disagreements += 1;
                counterexample.get_or_insert_with(|| Counterexample {
                    kind: "classifier".into(),
                    poset: seq.to_string(),
                    detail: format!(
                        "closed form says {}, brute force says {}",
                        closed.is_le_cactus, brute.is_le_cactus
                    ),
                });
            }
        }
        classifier.push(row);

        let mut crow = CommutationRow {
            size,
            ..Default::default()
        };
        for lambda in Partition::admissible(size) {
            crow.partitions += 1;
            let d = Poset::chain_union(&lambda)?;
            for g in linear_extensions(&d) {
                crow.linear_extensions += 1;
                let osp = from_linear_extension(&d, &g)?;
                for k in 1..=size {
                    let by_slide = from_linear_extension(&d, &promotion(&d, &g, k)?)?;
                    let mut ok = by_slide == osp.act(&promotion_perm(k, size)?);
                    crow.checks += 1;
                    if k >= 2 {
                        let by_evac = from_linear_extension(&d, &evacuation(&d, &g, k - 1)?)?;
                        ok &= by_evac == osp.act(&evacuation_perm(k, size)?);
                        crow.checks += 1;
                    }
                    if !ok {
                        crow.disagreements += 1;
                        counterexample.get_or_insert_with(|| Counterexample {
                            kind: "commutation".into(),
                            poset: format!("D{lambda}"),
                            detail: format!("extension {:?}, k = {k}", g.labels()),
                        });
                    }
                }
            }
        }
        commutation.push(crow);
    }
    let total_disagreements = classifier.iter().map(|r| r.disagreements).sum::<usize>()
        + commutation.iter().map(|r| r.disagreements).sum::<usize>();
    Ok(XvalReport {
        max_size,
        classifier,
        commutation,
        total_disagreements,
        counterexample,
    })
}
