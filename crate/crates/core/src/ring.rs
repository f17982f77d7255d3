//! Finite commutative rings with unity, given by addition/multiplication
//! tables and validated exhaustively at construction.
//!
//! Constructors cover Z/n, binary products, and dual numbers `A[u]/(u^2)`;
//! arbitrary rings can be supplied as raw tables. The ring also answers the
//! coefficient queries the symmetric-span machinery needs: units, two-torsion,
//! doubles `2R`, and annihilators with a designated generating subset.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("table is not {size}x{size}: {which} row {row} has length {len}")]
    BadShape {
        size: usize,
        which: &'static str,
        row: usize,
        len: usize,
    },
    #[error("{which} entry [{row}][{col}] = {value} out of range for size {size}")]
    EntryOutOfRange {
        which: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("additive structure is not an abelian group: {reason}")]
    BadAddition { reason: String },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    MulNotAssociative { a: usize, b: usize, c: usize },
    #[error("multiplication is not commutative at ({a}, {b})")]
    MulNotCommutative { a: usize, b: usize },
    #[error("no multiplicative identity")]
    NoOne,
    #[error("distributivity fails at ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),
    #[error("unknown ring token {0:?}")]
    UnknownToken(String),
    #[error("expected {expected} names, got {got}")]
    BadNames { expected: usize, got: usize },
}

/// A finite commutative ring with unity.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    characteristic: usize,
    minus_one: usize,
    units: Vec<usize>,
    two_torsion: Vec<usize>,
    doubles: Vec<usize>,
    names: Vec<String>,
    token: String,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.add == other.add && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

/// Full annihilator of a ring element, plus a generating subset for it as an
/// R-module. The generators are chosen greedily in index order, which for Z/n
/// reproduces the single generator `n / gcd(n, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub full: Vec<usize>,
    pub generators: Vec<usize>,
}

impl FiniteRing {
    /// Validates raw tables: `(add, zero, neg)` an abelian group, `mul`
    /// associative/commutative with identity, distributive over `add`.
    pub fn from_tables(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        token: impl Into<String>,
    ) -> Result<Self, RingError> {
        let size = add.len();
        if size == 0 {
            return Err(RingError::BadShape {
                size: 0,
                which: "add",
                row: 0,
                len: 0,
            });
        }
        for (which, t) in [("add", &add), ("mul", &mul)] {
            if t.len() != size {
                return Err(RingError::BadShape {
                    size,
                    which,
                    row: t.len(),
                    len: 0,
                });
            }
            for (row, r) in t.iter().enumerate() {
                if r.len() != size {
                    return Err(RingError::BadShape {
                        size,
                        which,
                        row,
                        len: r.len(),
                    });
                }
                for (col, &value) in r.iter().enumerate() {
                    if value >= size {
                        return Err(RingError::EntryOutOfRange {
                            which,
                            row,
                            col,
                            value,
                            size,
                        });
                    }
                }
            }
        }

        // Additive abelian group.
        let bad_add = |reason: String| RingError::BadAddition { reason };
        for a in 0..size {
            for b in 0..size {
                if add[a][b] != add[b][a] {
                    return Err(bad_add(format!("not commutative at ({a}, {b})")));
                }
                for c in 0..size {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(bad_add(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let zero = (0..size)
            .find(|&z| (0..size).all(|a| add[z][a] == a))
            .ok_or_else(|| bad_add("no additive identity".to_string()))?;
        let mut neg = vec![usize::MAX; size];
        for a in 0..size {
            neg[a] = (0..size)
                .find(|&b| add[a][b] == zero)
                .ok_or_else(|| bad_add(format!("element {a} has no negation")))?;
        }

        // Multiplicative monoid, commutative, with identity.
        for a in 0..size {
            for b in 0..size {
                if mul[a][b] != mul[b][a] {
                    return Err(RingError::MulNotCommutative { a, b });
                }
                for c in 0..size {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(RingError::MulNotAssociative { a, b, c });
                    }
                }
            }
        }
        let one = (0..size)
            .find(|&o| (0..size).all(|a| mul[o][a] == a))
            .ok_or(RingError::NoOne)?;

        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(RingError::NotDistributive { a, b, c });
                    }
                }
            }
        }

        let add_flat: Vec<usize> = add.into_iter().flatten().collect();
        let mul_flat: Vec<usize> = mul.into_iter().flatten().collect();
        let at = |t: &[usize], a: usize, b: usize| t[a * size + b];

        // characteristic = additive order of one
        let mut characteristic = 1;
        let mut acc = one;
        while acc != zero {
            acc = at(&add_flat, acc, one);
            characteristic += 1;
        }

        let units: Vec<usize> = (0..size)
            .filter(|&r| (0..size).any(|s| at(&mul_flat, r, s) == one))
            .collect();
        let two_torsion: Vec<usize> = (0..size).filter(|&r| at(&add_flat, r, r) == zero).collect();
        let mut doubles: Vec<usize> = (0..size).map(|r| at(&add_flat, r, r)).collect();
        doubles.sort_unstable();
        doubles.dedup();

        Ok(FiniteRing {
            size,
            add: add_flat,
            mul: mul_flat,
            zero,
            one,
            minus_one: neg[one],
            neg,
            characteristic,
            units,
            two_torsion,
            doubles,
            names: (0..size).map(|i| format!("r{i}")).collect(),
            token: token.into(),
        })
    }

    pub fn with_names<S: Into<String>>(mut self, names: Vec<S>) -> Result<Self, RingError> {
        if names.len() != self.size {
            return Err(RingError::BadNames {
                expected: self.size,
                got: names.len(),
            });
        }
        self.names = names.into_iter().map(Into::into).collect();
        Ok(self)
    }

    /// The ring Z/n; element i is the residue i.
    pub fn zmod(n: usize) -> Result<Self, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n));
        }
        let add = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let mul = (0..n).map(|i| (0..n).map(|j| (i * j) % n).collect()).collect();
        FiniteRing::from_tables(add, mul, format!("z{n}"))?
            .with_names((0..n).map(|i| i.to_string()).collect())
    }

    /// Componentwise product ring; `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<Self, RingError> {
        let size = a.size * b.size;
        let nb = b.size;
        let idx = |x: usize, y: usize| x * nb + y;
        let mut add = vec![vec![0usize; size]; size];
        let mut mul = vec![vec![0usize; size]; size];
        let mut names = vec![String::new(); size];
        for xa in 0..a.size {
            for xb in 0..nb {
                names[idx(xa, xb)] = format!("({},{})", a.name(xa), b.name(xb));
                for ya in 0..a.size {
                    for yb in 0..nb {
                        add[idx(xa, xb)][idx(ya, yb)] = idx(a.add(xa, ya), b.add(xb, yb));
                        mul[idx(xa, xb)][idx(ya, yb)] = idx(a.mul(xa, ya), b.mul(xb, yb));
                    }
                }
            }
        }
        FiniteRing::from_tables(add, mul, format!("{}x{}", a.token, b.token))?.with_names(names)
    }

    /// Dual numbers `A[u]/(u^2)`: pairs `(a, b)` meaning `a + b u`,
    /// `(a,b)(c,d) = (ac, ad + bc)`. Index is `a * |A| + b`.
    pub fn dual_numbers(a: &FiniteRing) -> Result<Self, RingError> {
        let n = a.size;
        let size = n * n;
        let idx = |x: usize, y: usize| x * n + y;
        let mut add = vec![vec![0usize; size]; size];
        let mut mul = vec![vec![0usize; size]; size];
        let mut names = vec![String::new(); size];
        for xa in 0..n {
            for xb in 0..n {
                names[idx(xa, xb)] = match (xa == a.zero, xb == a.zero, xb == a.one) {
                    (_, true, _) => a.name(xa).to_string(),
                    (true, false, true) => "u".to_string(),
                    (true, false, false) => format!("{}u", a.name(xb)),
                    (false, false, true) => format!("{}+u", a.name(xa)),
                    (false, false, false) => format!("{}+{}u", a.name(xa), a.name(xb)),
                };
                for ya in 0..n {
                    for yb in 0..n {
                        add[idx(xa, xb)][idx(ya, yb)] = idx(a.add(xa, ya), a.add(xb, yb));
                        mul[idx(xa, xb)][idx(ya, yb)] =
                            idx(a.mul(xa, ya), a.add(a.mul(xa, yb), a.mul(xb, ya)));
                    }
                }
            }
        }
        FiniteRing::from_tables(add, mul, format!("dual-{}", a.token))?.with_names(names)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// `neg(one)`; the comparison target for every "sigma(x) = -1" predicate.
    pub fn minus_one(&self) -> usize {
        self.minus_one
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn token(&self) -> &str {
        &self.token
    }

    pub fn name(&self, r: usize) -> &str {
        &self.names[r]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn double(&self, a: usize) -> usize {
        self.add(a, a)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    /// The unit set `{r : exists s, rs = 1}`, sorted.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn is_unit(&self, r: usize) -> bool {
        self.units.binary_search(&r).is_ok()
    }

    pub fn unit_inverse(&self, r: usize) -> Option<usize> {
        (0..self.size).find(|&s| self.mul(r, s) == self.one)
    }

    /// Two-torsion `R_2 = {r : 2r = 0}`, sorted.
    pub fn two_torsion(&self) -> &[usize] {
        &self.two_torsion
    }

    /// The set `2R = {2r : r in R}`, sorted. These are exactly the admissible
    /// coefficients of kernel-symmetric group elements after the doubling
    /// substitution.
    pub fn doubles(&self) -> &[usize] {
        &self.doubles
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, r: usize) -> usize {
        debug_assert!(self.is_unit(r));
        let mut p = r;
        let mut n = 1;
        while p != self.one {
            p = self.mul(p, r);
            n += 1;
        }
        n
    }

    /// The R-module spanned by `gens`: all sums of ring multiples.
    pub fn module_span(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.size];
        member[self.zero] = true;
        for &g in gens {
            let reachable: Vec<usize> = (0..self.size).filter(|&x| member[x]).collect();
            for s in reachable {
                for r in 0..self.size {
                    member[self.add(s, self.mul(r, g))] = true;
                }
            }
        }
        (0..self.size).filter(|&x| member[x]).collect()
    }

    /// Annihilator `{a : a v = 0}` as a full set plus greedy module generators.
    pub fn annihilator(&self, v: usize) -> Annihilator {
        let full: Vec<usize> = (0..self.size).filter(|&a| self.mul(a, v) == self.zero).collect();
        let mut generators: Vec<usize> = Vec::new();
        let mut span = self.module_span(&generators);
        for &a in &full {
            if span.binary_search(&a).is_err() {
                generators.push(a);
                span = self.module_span(&generators);
            }
        }
        debug_assert_eq!(span, full);
        Annihilator { full, generators }
    }
}

fn parse_atom(atom: &str) -> Result<FiniteRing, RingError> {
    if let Some(rest) = atom.strip_prefix("dual-") {
        return FiniteRing::dual_numbers(&parse_atom(rest)?);
    }
    if let Some(n) = atom.strip_prefix('z').and_then(|s| s.parse::<usize>().ok()) {
        return FiniteRing::zmod(n);
    }
    Err(RingError::UnknownToken(atom.to_string()))
}

/// Parses a ring token: `z4`, `z8`, `dual-z4`, `z4xz4`, `z8xz4`, ...
/// Products associate left; factors are atoms (`zN` or `dual-zN`).
pub fn parse_ring_token(token: &str) -> Result<FiniteRing, RingError> {
    let mut parts = token.split('x');
    let first = parts
        .next()
        .ok_or_else(|| RingError::UnknownToken(token.to_string()))?;
    let mut ring = parse_atom(first)?;
    for part in parts {
        ring = FiniteRing::product(&ring, &parse_atom(part)?)?;
    }
    // keep the user's spelling so reports echo the config token exactly
    ring.token = token.to_string();
    Ok(ring)
}
