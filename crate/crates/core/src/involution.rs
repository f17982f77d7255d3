//! Group involutions: anti-automorphisms of order at most two, together with
//! their exhaustive enumeration.
//!
//! Enumeration backtracks over images of a small generating set, propagating
//! the antihomomorphism law across the Cayley table and pruning on the first
//! contradiction. A raw permutation filter stays feasible up to order 8 and is
//! kept as a test oracle, not as the production path.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{ElementSet, Group};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("map has length {got}, group has order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("map is not a bijection")]
    NotBijection,
    #[error("antihomomorphism law fails at ({x}, {y})")]
    NotAntihomomorphism { x: usize, y: usize },
    #[error("map squared is not the identity at {x}")]
    NotOrderTwo { x: usize },
    #[error("identity map is an anti-automorphism only on abelian groups")]
    IdentityOnNonabelian,
}

/// An involution `*` on a group: `(xy)* = y* x*` and `x** = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvolution {
    group: Arc<Group>,
    map: Vec<usize>,
    is_identity: bool,
}

/// True iff `map` is a bijection satisfying both involution laws.
pub fn is_involution(group: &Group, map: &[usize]) -> bool {
    let n = group.order();
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for x in 0..n {
        if map[map[x]] != x {
            return false;
        }
        for y in 0..n {
            if map[group.mul(x, y)] != group.mul(map[y], map[x]) {
                return false;
            }
        }
    }
    true
}

impl GroupInvolution {
    pub fn new(group: Arc<Group>, map: Vec<usize>) -> Result<Self, InvolutionError> {
        let n = group.order();
        if map.len() != n {
            return Err(InvolutionError::WrongLength {
                expected: n,
                got: map.len(),
            });
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(InvolutionError::NotBijection);
            }
            seen[v] = true;
        }
        for x in 0..n {
            if map[map[x]] != x {
                return Err(InvolutionError::NotOrderTwo { x });
            }
            for y in 0..n {
                if map[group.mul(x, y)] != group.mul(map[y], map[x]) {
                    return Err(InvolutionError::NotAntihomomorphism { x, y });
                }
            }
        }
        let is_identity = map.iter().enumerate().all(|(i, &v)| i == v);
        Ok(GroupInvolution {
            group,
            map,
            is_identity,
        })
    }

    /// The classical involution `x -> x^{-1}`.
    pub fn inversion(group: Arc<Group>) -> Self {
        let map = (0..group.order()).map(|x| group.inv(x)).collect();
        GroupInvolution {
            group,
            map,
            is_identity: false, // corrected below for exponent-2 groups
        }
        .fix_identity_flag()
    }

    /// The identity map, valid only on abelian groups.
    pub fn identity(group: Arc<Group>) -> Result<Self, InvolutionError> {
        if !group.is_abelian() {
            return Err(InvolutionError::IdentityOnNonabelian);
        }
        let map = (0..group.order()).collect();
        Ok(GroupInvolution {
            group,
            map,
            is_identity: true,
        })
    }

    fn fix_identity_flag(mut self) -> Self {
        self.is_identity = self.map.iter().enumerate().all(|(i, &v)| i == v);
        self
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.is_identity
    }

    /// The symmetric set `G_* = {x : x* = x}`.
    pub fn symmetric_set(&self) -> ElementSet {
        ElementSet::new(
            (0..self.group.order())
                .filter(|&x| self.map[x] == x)
                .collect(),
        )
    }
}

/// All involutions of `group`, complete and duplicate-free, sorted by image
/// vector. Always contains inversion; contains the identity iff the group is
/// abelian.
pub fn enumerate_involutions(group: &Arc<Group>) -> Vec<GroupInvolution> {
    let g = group.as_ref();
    let n = g.order();
    let gens = g.generating_set();
    let mut results: Vec<Vec<usize>> = Vec::new();

    if gens.is_empty() {
        // trivial group
        results.push(vec![g.identity()]);
    } else {
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&gen| {
                let ord = g.element_order(gen);
                (0..n).filter(|&h| g.element_order(h) == ord).collect()
            })
            .collect();
        let mut images = vec![0usize; gens.len()];
        backtrack(g, &gens, &candidates, 0, &mut images, &mut |map| {
            results.push(map.to_vec());
        });
    }

    results.sort();
    results
        .into_iter()
        .map(|map| {
            debug_assert!(is_involution(g, &map));
            let is_identity = map.iter().enumerate().all(|(i, &v)| i == v);
            GroupInvolution {
                group: Arc::clone(group),
                map,
                is_identity,
            }
        })
        .collect()
}

fn backtrack(
    g: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    level: usize,
    images: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if level == gens.len() {
        if let Some(map) = propagate(g, &gens[..level], images) {
            if (0..g.order()).all(|x| map[map[x]] == x) {
                emit(&map);
            }
        }
        return;
    }
    for &img in &candidates[level] {
        images[level] = img;
        // prune: partial propagation over the subgroup generated so far
        if propagate(g, &gens[..=level], &images[..=level]).is_some() {
            backtrack(g, gens, candidates, level + 1, images, emit);
        }
    }
}

/// Extends generator images to a map on the subgroup they generate via
/// `tau(x g) = tau(g) tau(x)`, checking every edge; `None` on contradiction.
fn propagate(g: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.identity()] = g.identity();
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let val = g.mul(images[i], map[x]);
            if map[y] == usize::MAX {
                map[y] = val;
                queue.push(y);
            } else if map[y] != val {
                return None;
            }
        }
    }
    Some(map)
}
