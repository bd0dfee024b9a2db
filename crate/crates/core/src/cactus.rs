//! Cactus-group words in the interval-reversal generators `q_{[i,j]}` and the
//! Bender-Knuth generators `t_i`, and their images in the symmetric group.
//!
//! A displayed product `g_1 g_2 … g_m` acts with `g_m` first. Words are flat
//! generator sequences stored in displayed order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Bender-Knuth move `t_i`, `i ≥ 1`.
    T(usize),
    /// Interval reversal `q_{[i,j]}`, `1 ≤ i < j`.
    Q(usize, usize),
}

impl Generator {
    /// Smallest rank at which the generator exists.
    pub fn min_rank(&self) -> usize {
        match *self {
            Generator::T(i) => i + 1,
            Generator::Q(_, j) => j,
        }
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        match *self {
            Generator::T(i) if i == 0 || i + 1 > n => Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: n.saturating_sub(1),
            }),
            Generator::Q(i, j) if i == 0 || i >= j => Err(Error::InvalidIndices(format!(
                "q[{i},{j}] needs 1 <= i < j"
            ))),
            Generator::Q(_, j) if j > n => Err(Error::IndexOutOfRange {
                index: j,
                min: 2,
                max: n,
            }),
            _ => Ok(()),
        }
    }

    /// The generator written in `t`-generators, in displayed order:
    /// `q_{[1,j]} = q_{j-1}` and `q_{[j,k]} = q_{k-1} q_{k-j} q_{k-1}`.
    pub fn expand(&self) -> Vec<usize> {
        match *self {
            Generator::T(i) => vec![i],
            Generator::Q(1, j) => qi_indices(j - 1),
            Generator::Q(i, j) => {
                let outer = qi_indices(j - 1);
                let mut out = outer.clone();
                out.extend(qi_indices(j - i));
                out.extend(outer);
                out
            }
        }
    }

    fn image(&self, n: usize) -> Permutation {
        match *self {
            Generator::T(i) => Permutation::transposition(n, i, i + 1),
            Generator::Q(i, j) => Permutation::interval_reversal(n, i, j),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::T(i) => write!(f, "t{i}"),
            Generator::Q(i, j) => write!(f, "q[{i},{j}]"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CactusWord {
    generators: Vec<Generator>,
}

impl CactusWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(generators: Vec<Generator>) -> Self {
        CactusWord { generators }
    }

    pub fn from_t_indices(indices: &[usize]) -> Self {
        CactusWord {
            generators: indices.iter().map(|&i| Generator::T(i)).collect(),
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn min_rank(&self) -> usize {
        self.generators
            .iter()
            .map(Generator::min_rank)
            .max()
            .unwrap_or(0)
    }

    /// Displayed product `self · other`.
    pub fn concat(&self, other: &CactusWord) -> CactusWord {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        CactusWord { generators }
    }

    pub fn pow(&self, e: usize) -> CactusWord {
        (0..e).fold(CactusWord::empty(), |acc, _| acc.concat(self))
    }

    /// Rewrites every `q_{[i,j]}` in `t`-generators.
    pub fn expand(&self) -> CactusWord {
        let indices: Vec<usize> = self.generators.iter().flat_map(|g| g.expand()).collect();
        Self::from_t_indices(&indices)
    }

    /// Indices of the `t`-expansion in displayed order.
    pub fn t_indices(&self) -> Vec<usize> {
        self.generators.iter().flat_map(|g| g.expand()).collect()
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses `t3`, `q[2,7]`, `qi5` (= `q_5`, i.e. `q[1,6]`) and `qjk(3,7)`
/// (= `q[3,7]`), separated by whitespace, in displayed order.
impl FromStr for CactusWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut offset = 0;
        for token in s.split_whitespace() {
            let at = s[offset..].find(token).map_or(offset, |p| p + offset);
            offset = at + token.len();
            let err = |message: &str| Error::Parse {
                offset: at,
                message: format!("{message} in {token:?}"),
            };
            let num = |t: &str| t.trim().parse::<usize>().map_err(|_| err("bad number"));
            let pair = |t: &str| -> Result<(usize, usize)> {
                let (a, b) = t
                    .split_once(',')
                    .ok_or_else(|| err("expected two indices"))?;
                Ok((num(a)?, num(b)?))
            };
            let g = if let Some(rest) = token.strip_prefix("qjk(") {
                let (j, k) = pair(rest.strip_suffix(')').ok_or_else(|| err("missing ')'"))?)?;
                Generator::Q(j, k)
            } else if let Some(rest) = token.strip_prefix("qi") {
                let i = num(rest)?;
                if i == 0 {
                    return Err(err("q_i needs i >= 1"));
                }
                Generator::Q(1, i + 1)
            } else if let Some(rest) = token.strip_prefix("q[") {
                let (i, j) = pair(rest.strip_suffix(']').ok_or_else(|| err("missing ']'"))?)?;
                Generator::Q(i, j)
            } else if let Some(rest) = token.strip_prefix('t') {
                Generator::T(num(rest)?)
            } else {
                return Err(err("unknown generator"));
            };
            if let Generator::Q(i, j) = g {
                if i == 0 || i >= j {
                    return Err(err("interval needs 1 <= i < j"));
                }
            }
            if g == Generator::T(0) {
                return Err(err("t_i needs i >= 1"));
            }
            generators.push(g);
        }
        Ok(CactusWord { generators })
    }
}

fn qi_indices(i: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(i * (i + 1) / 2);
    for top in 1..=i {
        out.extend((1..=top).rev());
    }
    out
}

/// `q_i = t_1 (t_2 t_1) … (t_i t_{i-1} … t_1)`.
pub fn qi_word(i: usize) -> CactusWord {
    CactusWord::from_t_indices(&qi_indices(i))
}

/// `q_{jk} = q_{k-1} q_{k-j} q_{k-1}`.
pub fn qjk_word(j: usize, k: usize) -> Result<CactusWord> {
    if j == 0 || j >= k {
        return Err(Error::InvalidIndices(format!(
            "q_{{{j},{k}}} needs 1 <= j < k"
        )));
    }
    let outer = qi_word(k - 1);
    Ok(outer.concat(&qi_word(k - j)).concat(&outer))
}

/// Image of `w` under `𝒞_n → S_n`.
pub fn to_symmetric(w: &CactusWord, n: usize) -> Result<Permutation> {
    let needed = w.min_rank();
    if needed > n {
        return Err(Error::InvalidRank { needed, rank: n });
    }
    for g in w.generators() {
        g.check_rank(n)
            .map_err(|_| Error::InvalidRank { needed, rank: n })?;
    }
    Ok(w.generators()
        .iter()
        .fold(Permutation::identity(n), |acc, g| acc.compose(&g.image(n))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: &'static str,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    pub rank: usize,
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
}

/// Checks both presentations of `𝒞_n` on their symmetric-group images, plus
/// agreement of `q_{[i,j]}` with its `t`-expansion.
pub fn verify_presentation(n: usize) -> PresentationReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    let sym = |w: &CactusWord| to_symmetric(w, n).expect("indices within rank");
    let q = |i, j| CactusWord::new(vec![Generator::Q(i, j)]);
    let t = |i| CactusWord::new(vec![Generator::T(i)]);
    let mut record = |ok: bool, relation, indices: Vec<usize>| {
        checked += 1;
        if !ok {
            violations.push(Violation { relation, indices });
        }
    };

    let intervals: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect();
    for &(i, j) in &intervals {
        record(
            sym(&q(i, j).pow(2)).is_identity(),
            "q[i,j]^2 = 1",
            vec![i, j],
        );
        record(
            sym(&q(i, j)) == sym(&q(i, j).expand()),
            "q[i,j] = t-expansion",
            vec![i, j],
        );
        for &(k, l) in &intervals {
            if j < k {
                let lhs = sym(&q(i, j).concat(&q(k, l)));
                let rhs = sym(&q(k, l).concat(&q(i, j)));
                record(
                    lhs == rhs,
                    "q[i,j] q[k,l] = q[k,l] q[i,j]",
                    vec![i, j, k, l],
                );
            }
            if i <= k && k < l && l <= j {
                let lhs = sym(&q(i, j).concat(&q(k, l)).concat(&q(i, j)));
                let rhs = sym(&q(i + j - l, i + j - k));
                record(
                    lhs == rhs,
                    "q[i,j] q[k,l] q[i,j] = q[i+j-l,i+j-k]",
                    vec![i, j, k, l],
                );
            }
        }
    }
    for i in 1..n {
        record(sym(&t(i).pow(2)).is_identity(), "t_i^2 = 1", vec![i]);
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                record(
                    sym(&t(i).concat(&t(j)).pow(2)).is_identity(),
                    "(t_i t_j)^2 = 1",
                    vec![i, j],
                );
            }
        }
        for j in (i + 2)..=n {
            for k in (j + 1)..=n {
                let w = t(i).concat(&qjk_word(j, k).expect("j < k")).pow(2);
                record(sym(&w).is_identity(), "(t_i q_jk)^2 = 1", vec![i, j, k]);
            }
        }
    }
    PresentationReport {
        rank: n,
        instances_checked: checked,
        violations,
    }
}
