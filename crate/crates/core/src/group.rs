//! Finite groups given by multiplication tables.
//!
//! Elements are dense indices `0..order`; the table is validated exhaustively
//! at construction (Latin square, associativity, identity, inverses), so every
//! query downstream can assume it is working on an actual group.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Why a candidate multiplication table is not a group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not {order}x{order}: row {row} has length {len}")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a latin square: duplicate value in {axis} {index}")]
    NotLatinSquare { axis: Axis, index: usize },
    #[error("not associative at (x, y, z) = ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("expected {expected} names, got {got}")]
    BadNames { expected: usize, got: usize },
}

/// Row/column discriminator for Latin-square violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

/// A finite group as a validated Cayley table.
#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    /// Flattened `order x order` table; `table[i * order + j]` is the index of `g_i * g_j`.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
    label: String,
}

impl PartialEq for Group {
    /// Structural equality: same order and same table. Names and labels are
    /// presentation details and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a square multiplication table and builds the group.
    ///
    /// The identity is located by scan; it is not required to be index 0.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::BadShape {
                order: 0,
                row: 0,
                len: 0,
            });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::BadShape {
                    order,
                    row,
                    len: r.len(),
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
        }

        // Latin square: every row and column hits each index exactly once.
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        axis: Axis::Row,
                        index: i,
                    });
                }
                seen[v] = true;
            }
        }
        for j in 0..order {
            let mut seen = vec![false; order];
            for row in &table {
                let v = row[j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        axis: Axis::Column,
                        index: j,
                    });
                }
                seen[v] = true;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or(GroupError::NoIdentity)?;

        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(GroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }

        let mut inverse = vec![usize::MAX; order];
        for x in 0..order {
            match (0..order).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverse[x] = y,
                None => return Err(GroupError::NoInverse { element: x }),
            }
        }

        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Ok(Group {
            order,
            table: flat,
            identity,
            inverse,
            names: (0..order).map(|i| format!("g{i}")).collect(),
            label: format!("order{order}"),
        })
    }

    /// Attaches display names (one per element).
    pub fn with_names<S: Into<String>>(mut self, names: Vec<S>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::BadNames {
                expected: self.order,
                got: names.len(),
            });
        }
        self.names = names.into_iter().map(Into::into).collect();
        Ok(self)
    }

    pub fn with_label<S: Into<String>>(mut self, label: S) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// The multiplicative commutator `x^{-1} y^{-1} x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    /// Conjugation `y^{-1} x y`.
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut p = x;
        let mut n = 1;
        while p != self.identity {
            p = self.mul(p, x);
            n += 1;
        }
        n
    }

    /// The center `{z : zg = gz for all g}`.
    pub fn center(&self) -> ElementSet {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        ElementSet::from_sorted(members)
    }

    /// The subgroup generated by all commutators, computed by fixed-point closure.
    pub fn derived_subgroup(&self) -> ElementSet {
        let mut seed: Vec<usize> = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                seed.push(self.commutator(x, y));
            }
        }
        self.closure(&seed)
    }

    /// The subgroup generated by `seed`. Closure under the product alone
    /// suffices in a finite group (powers reach inverses).
    pub fn closure(&self, seed: &[usize]) -> ElementSet {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut worklist = vec![self.identity];
        for &s in seed {
            if !member[s] {
                member[s] = true;
                worklist.push(s);
            }
        }
        let mut i = 0;
        while i < worklist.len() {
            let a = worklist[i];
            i += 1;
            for j in 0..worklist.len() {
                for prod in [self.mul(a, worklist[j]), self.mul(worklist[j], a)] {
                    if !member[prod] {
                        member[prod] = true;
                        worklist.push(prod);
                    }
                }
            }
        }
        ElementSet::from_sorted(
            (0..self.order).filter(|&x| member[x]).collect::<Vec<_>>(),
        )
    }

    /// A small generating set, chosen greedily: repeatedly adjoin the element
    /// of largest order not yet generated (ties to the smallest index).
    /// Deterministic; minimality is not guaranteed and not needed.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = self.closure(&gens);
        while generated.len() < self.order {
            let next = (0..self.order)
                .filter(|&x| !generated.contains(x))
                .max_by_key(|&x| (self.element_order(x), usize::MAX - x))
                .expect("some element lies outside a proper subgroup");
            gens.push(next);
            generated = self.closure(&gens);
        }
        gens
    }

    /// Structural identity check used by ambient-mismatch guards.
    pub fn same_structure(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A sorted, duplicate-free set of element indices of some ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl ElementSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        ElementSet { members }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet::from_sorted(self.iter().filter(|&x| other.contains(x)).collect::<Vec<_>>())
    }

    /// True when the set is a subgroup of `g`: contains the identity and is
    /// closed under product and inverse.
    pub fn verify_subgroup(&self, g: &Group) -> bool {
        self.contains(g.identity())
            && self
                .iter()
                .all(|a| self.contains(g.inv(a)) && self.iter().all(|b| self.contains(g.mul(a, b))))
    }

    /// True when the set is closed under conjugation by every group element.
    pub fn is_normal_in(&self, g: &Group) -> bool {
        self.iter()
            .all(|a| g.elements().all(|y| self.contains(g.conjugate(a, y))))
    }
}
