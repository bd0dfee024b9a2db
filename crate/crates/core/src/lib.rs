//! Bender-Knuth involutions, promotion, evacuation and cactus-group words
//! acting on linear extensions of finite posets, and the LE-cactus property:
//! decided exhaustively for any poset and in closed form for ordinal sums of
//! disjoint unions of chains.

pub mod cactus;
pub mod census;
pub mod classify;
pub mod dynamics;
pub mod error;
pub mod expr;
pub mod ospart;
pub mod perm;
pub mod poset;
pub mod table;

pub use cactus::{qi_word, qjk_word, to_symmetric, verify_presentation, CactusWord, Generator};
pub use classify::{
    amod, cactus_compatible, classify_chain_union_sum, classify_with_tail, is_le_cactus_bruteforce,
    necessary_condition_disconnected, BlockSequence, BruteForceOptions, LeCactusTail, Method,
    Verdict, Witness,
};
pub use dynamics::{apply_word, bk, evacuation, promotion};
pub use error::{Error, Result};
pub use expr::Expr;
pub use ospart::{OrderedSetPartition, Sandwich, Triple};
pub use perm::Permutation;
pub use poset::{is_linear_extension, linear_extensions, LinearExtension, Partition, Poset};
