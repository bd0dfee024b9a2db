//! Finite posets on dense element indices `0..size`, their standard
//! constructions, and linear extensions.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset stored as its Hasse diagram plus a precomputed
/// comparability matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    /// Sorted cover pairs `(a, b)`: `b` covers `a`.
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    /// `below[b]` holds every `a` with `a <= b` (reflexive).
    below: Vec<FixedBitSet>,
}

impl Poset {
    pub fn empty() -> Self {
        Self::from_closure(0, Vec::new())
    }

    /// Builds a poset from an arbitrary generating relation: `(a, b)` means
    /// `a < b`. The transitive closure is taken and reduced to covers.
    pub fn from_relation<I>(size: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut below: Vec<FixedBitSet> = (0..size)
            .map(|b| {
                let mut row = FixedBitSet::with_capacity(size);
                row.insert(b);
                row
            })
            .collect();
        for (a, b) in pairs {
            if a >= size || b >= size {
                return Err(Error::InvalidPoset(format!(
                    "relation ({a}, {b}) mentions an element outside 0..{size}"
                )));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("reflexive pair ({a}, {a})")));
            }
            below[b].insert(a);
        }
        // Warshall over bitset rows.
        for k in 0..size {
            let row_k = below[k].clone();
            for row in below.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for a in 0..size {
            for b in (a + 1)..size {
                if below[b].contains(a) && below[a].contains(b) {
                    return Err(Error::InvalidPoset(format!(
                        "relation has a cycle through {a} and {b}"
                    )));
                }
            }
        }
        Ok(Self::from_closure(size, below))
    }

    /// Builds a poset from its cover relation, rejecting cycles and covers
    /// implied transitively by others.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let poset = Self::from_relation(size, covers.iter().copied())?;
        let mut given: Vec<(usize, usize)> = covers.to_vec();
        given.sort_unstable();
        given.dedup();
        if given.len() != covers.len() {
            return Err(Error::InvalidPoset("duplicate cover pair".into()));
        }
        if given != poset.covers {
            let redundant: Vec<_> = given.iter().filter(|c| !poset.covers.contains(c)).collect();
            return Err(Error::InvalidPoset(format!(
                "covers {redundant:?} are implied transitively by other covers"
            )));
        }
        Ok(poset)
    }

    fn from_closure(size: usize, below: Vec<FixedBitSet>) -> Self {
        let mut covers = Vec::new();
        for b in 0..size {
            for a in below[b].ones() {
                if a == b {
                    continue;
                }
                let intermediate = below[b]
                    .ones()
                    .any(|c| c != a && c != b && below[c].contains(a));
                if !intermediate {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        Poset {
            size,
            covers,
            upper,
            lower,
            below,
        }
    }

    /// The chain `C_n`: `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, (1..n).map(|b| (b - 1, b))).expect("chain is acyclic")
    }

    /// The antichain `A_m`.
    pub fn antichain(m: usize) -> Self {
        Self::from_closure(m, Self::identity_rows(m))
    }

    fn identity_rows(n: usize) -> Vec<FixedBitSet> {
        (0..n)
            .map(|b| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(b);
                row
            })
            .collect()
    }

    /// `P + Q`; `P`'s elements keep their indices and `Q`'s are shifted by `|P|`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        self.combine(other, false)
    }

    /// `P ⊕ Q`: every element of `Q` lies above every element of `P`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        self.combine(other, true)
    }

    fn combine(&self, other: &Poset, stacked: bool) -> Poset {
        let off = self.size;
        let size = off + other.size;
        let mut below = Vec::with_capacity(size);
        for row in &self.below {
            let mut r = FixedBitSet::with_capacity(size);
            r.extend(row.ones());
            below.push(r);
        }
        for row in &other.below {
            let mut r = FixedBitSet::with_capacity(size);
            if stacked {
                r.insert_range(0..off);
            }
            r.extend(row.ones().map(|a| a + off));
            below.push(r);
        }
        Poset::from_closure(size, below)
    }

    /// `D_λ = C_{λ_1} + … + C_{λ_ℓ}`; chain `m` occupies a contiguous index range.
    pub fn chain_union(lambda: &Partition) -> Result<Poset> {
        if !lambda.is_admissible() {
            return Err(Error::InadmissiblePartition(lambda.parts().to_vec()));
        }
        Ok(lambda.parts().iter().fold(Poset::empty(), |acc, &c| {
            acc.disjoint_union(&Poset::chain(c))
        }))
    }

    /// The Ferrers poset of `λ`: cells `(row, col)` ordered by
    /// `(r, c) < (r, c+1)` and `(r, c) < (r+1, c)`. Cells are indexed row by row.
    pub fn ferrers(lambda: &Partition) -> Poset {
        let mut index = Vec::new();
        let mut next = 0;
        for &len in lambda.parts() {
            index.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        let mut rel = Vec::new();
        for (r, row) in index.iter().enumerate() {
            for (c, &cell) in row.iter().enumerate() {
                if c + 1 < row.len() {
                    rel.push((cell, row[c + 1]));
                }
                if let Some(&below_cell) = index.get(r + 1).and_then(|nr| nr.get(c)) {
                    rel.push((cell, below_cell));
                }
            }
        }
        Poset::from_relation(next, rel).expect("Ferrers relation is acyclic")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.upper[a]
    }

    pub fn lower_covers(&self, b: usize) -> &[usize] {
        &self.lower[b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&e| self.lower[e].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&e| self.upper[e].is_empty())
            .collect()
    }

    /// True if every element below index `k` is strictly below every element
    /// at or above `k`, i.e. the poset splits there as an ordinal sum.
    pub fn is_ordinal_cut(&self, k: usize) -> bool {
        k <= self.size && (k..self.size).all(|b| (0..k).all(|a| self.leq(a, b)))
    }

    /// The induced subposet on the contiguous index range `[start, end)`,
    /// re-indexed from 0.
    pub fn restrict(&self, start: usize, end: usize) -> Poset {
        assert!(start <= end && end <= self.size);
        let rel = (start..end).flat_map(|b| {
            self.below[b]
                .ones()
                .filter(move |&a| a != b && a >= start && a < end)
                .map(move |a| (a - start, b - start))
        });
        Poset::from_relation(end - start, rel).expect("restriction of a poset is a poset")
    }

    /// Connected components of the comparability graph, each sorted
    /// ascending, listed by smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.size];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.size {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(e) = stack.pop() {
                members.push(e);
                for &nb in self.upper[e].iter().chain(self.lower[e].iter()) {
                    if comp[nb] == usize::MAX {
                        comp[nb] = id;
                        stack.push(nb);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// For a disjoint union of chains, the chains with elements listed
    /// bottom to top, in order of their smallest element index.
    pub fn chain_components(&self) -> Result<Vec<Vec<usize>>> {
        let mut chains = self.components();
        for chain in chains.iter_mut() {
            chain.sort_by_key(|&e| self.below[e].count_ones(..));
            if chain.windows(2).any(|w| !self.lt(w[0], w[1])) {
                return Err(Error::NotAChainUnion);
            }
        }
        Ok(chains)
    }

    /// Text format: `n <size>` then one `cover <a> <b>` line per cover.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.size);
        for (a, b) in &self.covers {
            s.push_str(&format!("cover {a} {b}\n"));
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Poset> {
        let mut size = None;
        let mut covers = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let at = offset;
            offset += line.len() + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    offset: at,
                    message: format!("expected a non-negative integer, found {s:?}"),
                })
            };
            match fields.as_slice() {
                ["n", v] if size.is_none() => size = Some(parse(v)?),
                ["cover", a, b] if size.is_some() => covers.push((parse(a)?, parse(b)?)),
                _ => {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!("unexpected line {line:?}"),
                    })
                }
            }
        }
        let size = size.ok_or(Error::Parse {
            offset: 0,
            message: "missing `n <size>` header".into(),
        })?;
        Poset::from_covers(size, &covers)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers)
            .finish()
    }
}

/// An integer partition `λ_1 ≥ … ≥ λ_ℓ ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidIndices(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIndices(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    /// A union of at least two chains, or the single point.
    pub fn is_admissible(&self) -> bool {
        self.ell() > 1 || (self.n() == 1 && self.ell() == 1)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                go(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The partitions `λ ⊢ n` with `D_λ ∈ 𝔇_n`.
    pub fn admissible(n: usize) -> Vec<Partition> {
        Self::all(n)
            .into_iter()
            .filter(|p| n > 0 && p.is_admissible())
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A bijective order-preserving labeling `f: P → {1..|P|}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    /// `labels[e]` is the label of element `e`.
    labels: Vec<usize>,
    /// `word[l - 1]` is the element carrying label `l`.
    word: Vec<usize>,
}

impl LinearExtension {
    /// Validates `labels` (indexed by element) against `poset`.
    pub fn new(poset: &Poset, labels: Vec<usize>) -> Result<Self> {
        let n = poset.size();
        if labels.len() != n {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        let mut word = vec![usize::MAX; n];
        for (e, &l) in labels.iter().enumerate() {
            if l == 0 || l > n || word[l - 1] != usize::MAX {
                return Err(Error::InvalidLabels(format!(
                    "{labels:?} is not a bijection onto 1..={n}"
                )));
            }
            word[l - 1] = e;
        }
        if let Some(&(a, b)) = poset.covers().iter().find(|&&(a, b)| labels[a] > labels[b]) {
            return Err(Error::InvalidLabels(format!(
                "element {a} < {b} but label {} > {}",
                labels[a], labels[b]
            )));
        }
        Ok(LinearExtension { labels, word })
    }

    /// Builds from the elements listed in increasing label order.
    pub fn from_word(poset: &Poset, word: &[usize]) -> Result<Self> {
        let mut labels = vec![0; word.len()];
        for (i, &e) in word.iter().enumerate() {
            if e >= labels.len() {
                return Err(Error::InvalidLabels(format!("element {e} out of range")));
            }
            labels[e] = i + 1;
        }
        Self::new(poset, labels)
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        let mut labels = vec![0; word.len()];
        for (i, &e) in word.iter().enumerate() {
            labels[e] = i + 1;
        }
        LinearExtension { labels, word }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Elements in increasing label order.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn label(&self, element: usize) -> usize {
        self.labels[element]
    }

    pub fn element(&self, label: usize) -> usize {
        self.word[label - 1]
    }

    /// Exchanges labels `i` and `i + 1` without checking comparability.
    pub(crate) fn swap_adjacent(&mut self, i: usize) {
        let a = self.word[i - 1];
        let b = self.word[i];
        self.word.swap(i - 1, i);
        self.labels[a] = i + 1;
        self.labels[b] = i;
    }
}

pub fn is_linear_extension(poset: &Poset, labels: &[usize]) -> bool {
    LinearExtension::new(poset, labels.to_vec()).is_ok()
}

/// Streams every linear extension of `poset` once, ordered
/// lexicographically by [`LinearExtension::word`].
pub fn linear_extensions(poset: &Poset) -> LinearExtensions<'_> {
    let n = poset.size();
    LinearExtensions {
        poset,
        word: Vec::with_capacity(n),
        cursor: vec![0; n + 1],
        placed: vec![false; n],
        pending: (0..n).map(|e| poset.lower_covers(e).len()).collect(),
        done: false,
    }
}

pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    word: Vec<usize>,
    /// `cursor[d]`: smallest element index still to try at depth `d`.
    cursor: Vec<usize>,
    placed: Vec<bool>,
    /// Number of unplaced lower covers per element.
    pending: Vec<usize>,
    done: bool,
}

impl LinearExtensions<'_> {
    fn place(&mut self, e: usize) {
        self.placed[e] = true;
        for &u in self.poset.upper_covers(e) {
            self.pending[u] -= 1;
        }
        self.word.push(e);
        self.cursor[self.word.len()] = 0;
    }

    fn unplace(&mut self) {
        let e = self.word.pop().expect("unplace on empty word");
        self.placed[e] = false;
        for &u in self.poset.upper_covers(e) {
            self.pending[u] += 1;
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        let n = self.poset.size();
        if self.done {
            return None;
        }
        loop {
            let depth = self.word.len();
            if depth == n {
                let out = LinearExtension::from_word_unchecked(self.word.clone());
                if n == 0 {
                    self.done = true;
                } else {
                    self.unplace();
                }
                return Some(out);
            }
            let start = self.cursor[depth];
            let next = (start..n).find(|&e| !self.placed[e] && self.pending[e] == 0);
            match next {
                Some(e) => {
                    self.cursor[depth] = e + 1;
                    self.place(e);
                }
                None if depth == 0 => {
                    self.done = true;
                    return None;
                }
                None => self.unplace(),
            }
        }
    }
}
