//! Orientations: group homomorphisms `sigma : G -> U(R)`, their exhaustive
//! enumeration, and compatibility with a group involution.
//!
//! Because `U(R)` is abelian every such homomorphism factors through the
//! abelianization, so backtracking over generator images with unit-order
//! pruning is exact. Compatibility is the condition `x x* in ker(sigma)` for
//! all `x`, which is what makes the induced map on the group ring an
//! involution.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{ElementSet, Group};
use crate::involution::GroupInvolution;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("value list has length {got}, group has order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("sigma({x}) = {value} is not a unit")]
    NotAUnit { x: usize, value: usize },
    #[error("homomorphism law fails at ({x}, {y})")]
    NotHomomorphism { x: usize, y: usize },
}

/// A homomorphism `sigma : G -> U(R)` with its kernel `N` and the subgroup
/// `C = {x : sigma(x) = +-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    group: Arc<Group>,
    ring: Arc<FiniteRing>,
    values: Vec<usize>,
    kernel: ElementSet,
    subgroup_c: ElementSet,
    trivial: bool,
}

impl Orientation {
    pub fn new(
        group: Arc<Group>,
        ring: Arc<FiniteRing>,
        values: Vec<usize>,
    ) -> Result<Self, OrientationError> {
        let n = group.order();
        if values.len() != n {
            return Err(OrientationError::WrongLength {
                expected: n,
                got: values.len(),
            });
        }
        for (x, &v) in values.iter().enumerate() {
            if v >= ring.size() || !ring.is_unit(v) {
                return Err(OrientationError::NotAUnit { x, value: v });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if values[group.mul(x, y)] != ring.mul(values[x], values[y]) {
                    return Err(OrientationError::NotHomomorphism { x, y });
                }
            }
        }
        Ok(Self::from_checked(group, ring, values))
    }

    fn from_checked(group: Arc<Group>, ring: Arc<FiniteRing>, values: Vec<usize>) -> Self {
        let one = ring.one();
        let minus_one = ring.minus_one();
        let kernel = ElementSet::new(
            (0..group.order()).filter(|&x| values[x] == one).collect(),
        );
        let subgroup_c = ElementSet::new(
            (0..group.order())
                .filter(|&x| values[x] == one || values[x] == minus_one)
                .collect(),
        );
        let trivial = kernel.len() == group.order();
        Orientation {
            group,
            ring,
            values,
            kernel,
            subgroup_c,
            trivial,
        }
    }

    /// The trivial orientation. Excluded from sweeps; available for negative
    /// tests behind an explicit call.
    pub fn trivial(group: Arc<Group>, ring: Arc<FiniteRing>) -> Self {
        let values = vec![ring.one(); group.order()];
        Self::from_checked(group, ring, values)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    /// `sigma(x)` as a ring element index.
    #[inline]
    pub fn sigma_of(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `N = ker(sigma)`.
    pub fn kernel(&self) -> &ElementSet {
        &self.kernel
    }

    /// `C = {x : sigma(x) = +-1}`.
    pub fn subgroup_c(&self) -> &ElementSet {
        &self.subgroup_c
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }
}

/// `x x* in N` for every `x`: the condition for `sigma*` to be an involution
/// on the group ring.
pub fn is_compatible(tau: &GroupInvolution, sigma: &Orientation) -> bool {
    debug_assert!(tau.group().same_structure(sigma.group()));
    let g = sigma.group();
    g.elements()
        .all(|x| sigma.kernel().contains(g.mul(x, tau.apply(x))))
}

/// All nontrivial homomorphisms `G -> U(R)`, duplicate-free, sorted by value
/// vector.
pub fn enumerate_orientations(group: &Arc<Group>, ring: &Arc<FiniteRing>) -> Vec<Orientation> {
    let g = group.as_ref();
    let r = ring.as_ref();
    let gens = g.generating_set();
    let mut results: Vec<Vec<usize>> = Vec::new();

    if gens.is_empty() {
        // trivial group: only the trivial homomorphism, which is excluded
    } else {
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&gen| {
                let ord = g.element_order(gen);
                r.units()
                    .iter()
                    .copied()
                    .filter(|&u| ord % r.unit_order(u) == 0)
                    .collect()
            })
            .collect();
        let mut images = vec![0usize; gens.len()];
        hom_backtrack(g, r, &gens, &candidates, 0, &mut images, &mut |values| {
            if values.iter().any(|&v| v != r.one()) {
                results.push(values.to_vec());
            }
        });
    }

    results.sort();
    results
        .into_iter()
        .map(|values| Orientation::from_checked(Arc::clone(group), Arc::clone(ring), values))
        .collect()
}

fn hom_backtrack(
    g: &Group,
    r: &FiniteRing,
    gens: &[usize],
    candidates: &[Vec<usize>],
    level: usize,
    images: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if level == gens.len() {
        if let Some(values) = hom_propagate(g, r, &gens[..level], images) {
            emit(&values);
        }
        return;
    }
    for &img in &candidates[level] {
        images[level] = img;
        if hom_propagate(g, r, &gens[..=level], &images[..=level]).is_some() {
            hom_backtrack(g, r, gens, candidates, level + 1, images, emit);
        }
    }
}

/// Extends generator images via `sigma(x g) = sigma(x) sigma(g)` over the
/// subgroup they generate; `None` on contradiction.
fn hom_propagate(g: &Group, r: &FiniteRing, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let unset = usize::MAX;
    let mut values = vec![unset; n];
    values[g.identity()] = r.one();
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let val = r.mul(values[x], images[i]);
            if values[y] == unset {
                values[y] = val;
                queue.push(y);
            } else if values[y] != val {
                return None;
            }
        }
    }
    Some(values)
}
