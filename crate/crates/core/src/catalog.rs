//! Hand-constructed group catalog.
//!
//! Every group here is built from a presentation formula and then passed
//! through the same table validation as user input, so the catalog doubles as
//! a self-check. The catalog order is fixed: cyclic groups appear at their
//! order, followed by abelian products, followed by the nonabelian groups of
//! that order.

use std::sync::Arc;

use crate::group::Group;

/// The cyclic group of order `n`, elements `a^i` indexed by `i`.
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    Group::from_table(table)
        .expect("cyclic table is a group")
        .with_names(names)
        .unwrap()
        .with_label(format!("C{n}"))
}

/// The dihedral group of order `2n` (n >= 2): `r^n = s^2 = 1`, `s r s = r^{-1}`.
/// Element `r^a s^b` has index `a + n*b`.
pub fn dihedral(n: usize) -> Group {
    assert!(n >= 2);
    let order = 2 * n;
    let idx = |a: usize, b: usize| (a % n) + n * (b % 2);
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..n {
        for b in 0..2 {
            for c in 0..n {
                for d in 0..2 {
                    // (r^a s^b)(r^c s^d): s r^c = r^{-c} s
                    let (ea, eb) = if b == 0 {
                        ((a + c) % n, d)
                    } else {
                        ((a + n - c) % n, (1 + d) % 2)
                    };
                    table[idx(a, b)][idx(c, d)] = idx(ea, eb);
                }
            }
        }
    }
    let mut names = vec![String::new(); order];
    for a in 0..n {
        for b in 0..2 {
            names[idx(a, b)] = match (a, b) {
                (0, 0) => "1".to_string(),
                (1, 0) => "r".to_string(),
                (_, 0) => format!("r{a}"),
                (0, _) => "s".to_string(),
                (1, _) => "rs".to_string(),
                (_, _) => format!("r{a}s"),
            };
        }
    }
    Group::from_table(table)
        .expect("dihedral table is a group")
        .with_names(names)
        .unwrap()
        .with_label(format!("D{n}"))
}

/// The quaternion group of order 8: `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> Group {
    // Element = (sign, letter) with letter 0=1, 1=i, 2=j, 3=k; index = 2*letter + neg.
    let letter_mul = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) => (false, x),
            (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for la in 0..4 {
        for na in 0..2 {
            for lb in 0..4 {
                for nb in 0..2 {
                    let (flip, lc) = letter_mul(la, lb);
                    let nc = (na + nb + flip as usize) % 2;
                    table[2 * la + na][2 * lb + nb] = 2 * lc + nc;
                }
            }
        }
    }
    let names = vec!["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    Group::from_table(table)
        .expect("quaternion table is a group")
        .with_names(names)
        .unwrap()
        .with_label("Q8")
}

/// Direct product with row-major indexing: `(x, y)` has index `x * |B| + y`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let order = a.order() * b.order();
    let nb = b.order();
    let mut table = vec![vec![0usize; order]; order];
    for xa in 0..a.order() {
        for xb in 0..nb {
            for ya in 0..a.order() {
                for yb in 0..nb {
                    table[xa * nb + xb][ya * nb + yb] = a.mul(xa, ya) * nb + b.mul(xb, yb);
                }
            }
        }
    }
    let mut names = vec![String::new(); order];
    for xa in 0..a.order() {
        for xb in 0..nb {
            names[xa * nb + xb] = format!("({},{})", a.name(xa), b.name(xb));
        }
    }
    Group::from_table(table)
        .expect("product table is a group")
        .with_names(names)
        .unwrap()
        .with_label(format!("{}x{}", a.label(), b.label()))
}

fn build(name: &str) -> Group {
    match name {
        "D4" => dihedral(4),
        "D8" => dihedral(8),
        "Q8" => quaternion(),
        "C2xC2" => direct_product(&cyclic(2), &cyclic(2)).with_label("C2xC2"),
        "C2xC4" => direct_product(&cyclic(2), &cyclic(4)).with_label("C2xC4"),
        "C2xC2xC2" => direct_product(&cyclic(2), &direct_product(&cyclic(2), &cyclic(2)))
            .with_label("C2xC2xC2"),
        "C2xC8" => direct_product(&cyclic(2), &cyclic(8)).with_label("C2xC8"),
        "C4xC4" => direct_product(&cyclic(4), &cyclic(4)).with_label("C4xC4"),
        "C2xD4" => direct_product(&cyclic(2), &dihedral(4)).with_label("C2xD4"),
        "C2xQ8" => direct_product(&cyclic(2), &quaternion()).with_label("C2xQ8"),
        _ => {
            let n: usize = name
                .strip_prefix('C')
                .and_then(|s| s.parse().ok())
                .unwrap_or_else(|| panic!("unknown catalog name {name}"));
            cyclic(n)
        }
    }
}

/// Names in catalog order, paired with group order.
const CATALOG: &[(&str, usize)] = &[
    ("C1", 1),
    ("C2", 2),
    ("C3", 3),
    ("C4", 4),
    ("C2xC2", 4),
    ("C5", 5),
    ("C6", 6),
    ("C7", 7),
    ("C8", 8),
    ("C2xC4", 8),
    ("C2xC2xC2", 8),
    ("D4", 8),
    ("Q8", 8),
    ("C9", 9),
    ("C10", 10),
    ("C11", 11),
    ("C12", 12),
    ("C13", 13),
    ("C14", 14),
    ("C15", 15),
    ("C16", 16),
    ("C2xC8", 16),
    ("C4xC4", 16),
    ("D8", 16),
    ("C2xD4", 16),
    ("C2xQ8", 16),
];

/// All catalog names, in sweep order.
pub fn catalog_names(max_order: usize) -> Vec<&'static str> {
    assert!(
        (1..=16).contains(&max_order),
        "catalog covers orders 1..=16"
    );
    CATALOG
        .iter()
        .filter(|(_, order)| *order <= max_order)
        .map(|(name, _)| *name)
        .collect()
}

/// The built-in catalog up to `max_order` (at most 16), deterministic order.
pub fn builtin_catalog(max_order: usize) -> Vec<Arc<Group>> {
    catalog_names(max_order)
        .into_iter()
        .map(|name| Arc::new(build(name)))
        .collect()
}

/// Looks a single catalog group up by name.
pub fn catalog_group(name: &str) -> Option<Arc<Group>> {
    CATALOG
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, _)| Arc::new(build(n)))
}
