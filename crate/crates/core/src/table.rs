//! Precomputed action of `t_i` and `q_m` on the full set of linear
//! extensions of a poset, as index permutations.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::dynamics::bk_in_place;
use crate::error::{Error, Result};
use crate::poset::{linear_extensions, LinearExtension, Poset};

pub struct ActionTable {
    extensions: Vec<LinearExtension>,
    /// `bk[i - 1][x]`: index of `t_i` applied to extension `x`.
    bk: Vec<Vec<u32>>,
    /// `evac[m][x]`: index of `q_m` applied to extension `x`; `q_0` is the identity.
    evac: Vec<Vec<u32>>,
}

impl ActionTable {
    /// Enumerates the extensions of `poset` (refusing more than `cap`) and
    /// tabulates every Bender-Knuth move and evacuation.
    pub fn build(poset: &Poset, cap: usize) -> Result<Self> {
        assert!(
            poset.size() <= u8::MAX as usize,
            "poset too large to tabulate"
        );
        let mut extensions = Vec::new();
        for f in linear_extensions(poset) {
            if extensions.len() == cap {
                return Err(Error::BudgetExceeded { cap });
            }
            extensions.push(f);
        }
        if extensions.len() > u32::MAX as usize {
            return Err(Error::BudgetExceeded {
                cap: u32::MAX as usize,
            });
        }
        let key =
            |f: &LinearExtension| -> Box<[u8]> { f.word().iter().map(|&e| e as u8).collect() };
        let index: HashMap<Box<[u8]>, u32> = extensions
            .iter()
            .enumerate()
            .map(|(x, f)| (key(f), x as u32))
            .collect();

        let n = poset.size();
        let bk: Vec<Vec<u32>> = (1..n)
            .map(|i| {
                extensions
                    .par_iter()
                    .map(|f| {
                        let mut g = f.clone();
                        bk_in_place(poset, &mut g, i);
                        index[&key(&g)]
                    })
                    .collect()
            })
            .collect();

        let count = extensions.len();
        let identity: Vec<u32> = (0..count as u32).collect();
        let mut evac = vec![identity.clone()];
        // ∂_{m+1} = t_m ∘ ∂_m and q_m = q_{m-1} ∘ ∂_{m+1}
        let mut promo = identity;
        for m in 1..n {
            promo = promo.iter().map(|&x| bk[m - 1][x as usize]).collect();
            let prev = &evac[m - 1];
            let next = promo.iter().map(|&x| prev[x as usize]).collect();
            evac.push(next);
        }
        Ok(ActionTable {
            extensions,
            bk,
            evac,
        })
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn bk(&self, i: usize, x: usize) -> usize {
        self.bk[i - 1][x] as usize
    }

    pub fn evacuation(&self, m: usize, x: usize) -> usize {
        self.evac[m][x] as usize
    }

    /// `q_{jk} = q_{k-1} q_{k-j} q_{k-1}`.
    pub fn qjk(&self, j: usize, k: usize, x: usize) -> usize {
        let x = self.evacuation(k - 1, x);
        let x = self.evacuation(k - j, x);
        self.evacuation(k - 1, x)
    }

    /// `(t_i q_{jk})^2` applied to extension `x`.
    pub fn relation_image(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        let mut y = x;
        for _ in 0..2 {
            y = self.qjk(j, k, y);
            y = self.bk(i, y);
        }
        y
    }

    /// First extension index (in enumeration order) not fixed by `(t_i q_{jk})^2`.
    pub fn relation_failure(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        (0..self.len()).find(|&x| self.relation_image(i, j, k, x) != x)
    }
}
