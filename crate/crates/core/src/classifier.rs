//! Structural classification of instances, evaluated without a single
//! group-ring multiplication.
//!
//! The predicate combines a characteristic gate, the central-shift structure
//! of the involution, pairwise span conditions, and three coefficient
//! conditions quantified over group elements and admissible coefficients.
//! The named cases IA/IB1/IB2/IB3 are computed as descriptive tags; the
//! predicate itself is derived from the Jordan expansion under the shift
//! substitution, which is strictly more complete than the case list (see
//! `outside_case_list`). The sweep harness cross-checks this predicate
//! against the direct pairwise Jordan test on every instance; the two must
//! agree everywhere.

use thiserror::Error;

use crate::group::ElementSet;
use crate::group_ring::admissible_coefficients;
use crate::involution::GroupInvolution;
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("characteristic 2 coefficient rings are outside the engine's hypotheses")]
    CharTwoRejected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StructureTag {
    IA,
    IB1,
    IB2,
    IB3,
    None,
}

impl StructureTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            StructureTag::IA => "IA",
            StructureTag::IB1 => "IB1",
            StructureTag::IB2 => "IB2",
            StructureTag::IB3 => "IB3",
            StructureTag::None => "NONE",
        }
    }
}

/// Which membership the central shift element(s) must satisfy. The predicate
/// places them in the symmetric kernel; the weaker symmetric-only placement is
/// tracked separately so sweeps can record whether the distinction ever
/// matters on an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SPlacement {
    /// `s, t` central, symmetric, and in the kernel: the predicate's gate.
    NStar,
    /// `s, t` central and symmetric only.
    GStar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCase {
    pub tag: StructureTag,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

impl StructureCase {
    fn none() -> Self {
        StructureCase {
            tag: StructureTag::None,
            s: None,
            t: None,
        }
    }
}

/// The three coefficient conditions, quantified exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingConditions {
    /// Pairs of non-symmetric elements.
    pub ii: bool,
    /// Mixed pairs: non-symmetric against symmetric with admissible coefficients.
    pub iii: bool,
    /// Pairs of symmetric elements with admissible coefficient pairs.
    pub iv: bool,
}

impl RingConditions {
    pub fn all(&self) -> bool {
        self.ii && self.iii && self.iv
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gp14Tag {
    A,
    B,
    C,
    None,
}

impl Gp14Tag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Gp14Tag::A => "GP14-A",
            Gp14Tag::B => "GP14-B",
            Gp14Tag::C => "GP14-C",
            Gp14Tag::None => "NONE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub structure: StructureCase,
    pub ring_conditions: RingConditions,
    pub predicate: bool,
    pub gp14: Gp14Tag,
    /// True when classifying with the weaker symmetric-only placement of the
    /// shift elements changes the structure tag.
    pub placement_sensitive: bool,
    /// True when the predicate holds but no named structure case matches:
    /// the instance anticommutes via a shift pattern outside the case list
    /// (two central shift values of which only one is a commutator).
    pub outside_case_list: bool,
}

fn in_placement(
    tau: &GroupInvolution,
    kernel: &ElementSet,
    placement: SPlacement,
    x: usize,
) -> bool {
    tau.apply(x) == x
        && match placement {
            SPlacement::NStar => kernel.contains(x),
            SPlacement::GStar => true,
        }
}

/// Structural case of `(G, tau, sigma)`. The characteristic gate is applied by
/// the predicate, not here.
pub fn classify_structure(tau: &GroupInvolution, sigma: &Orientation) -> StructureCase {
    classify_structure_with(tau, sigma, SPlacement::NStar)
}

pub fn classify_structure_with(
    tau: &GroupInvolution,
    sigma: &Orientation,
    placement: SPlacement,
) -> StructureCase {
    let g = sigma.group();
    let kernel = sigma.kernel();
    let z = g.center();
    let e = g.identity();

    if g.is_abelian() {
        if tau.is_identity() {
            return StructureCase {
                tag: StructureTag::IA,
                s: None,
                t: None,
            };
        }
        // abelian, tau != Id: a single central shift element
        for s in g.elements() {
            if !in_placement(tau, kernel, placement, s) {
                continue;
            }
            if g
                .elements()
                .all(|x| tau.apply(x) == x || tau.apply(x) == g.mul(x, s))
            {
                return StructureCase {
                    tag: StructureTag::IB1,
                    s: Some(s),
                    t: None,
                };
            }
        }
        return StructureCase::none();
    }

    // nonabelian: derived subgroup of order two, or the two-commutator case
    let derived = g.derived_subgroup();
    if derived.len() == 2 {
        let s = derived.iter().find(|&x| x != e).unwrap();
        if in_placement(tau, kernel, placement, s)
            && z.contains(s)
            && g.mul(s, s) == e
            && g
                .elements()
                .all(|x| tau.apply(x) == x || tau.apply(x) == g.mul(x, s))
        {
            return StructureCase {
                tag: StructureTag::IB2,
                s: Some(s),
                t: None,
            };
        }
        return StructureCase::none();
    }

    match ib3_check(tau, sigma, placement) {
        Ok((s, t)) => StructureCase {
            tag: StructureTag::IB3,
            s: Some(s),
            t: Some(t),
        },
        Err(_) => StructureCase::none(),
    }
}

/// Ordered names of the structural conditions of the two-commutator case,
/// used both by the predicate and by the exhaustive search documentation.
pub const IB3_CONDITIONS: [&str; 11] = [
    "tau-restricted-to-C-is-not-the-identity",
    "tau-is-the-identity-on-N",
    "exactly-two-nontrivial-commutators",
    "derived-subgroup-inside-central-symmetric-kernel",
    "s-and-t-square-to-identity",
    "C-derived-subgroup-is-trivial-or-{1,s}",
    "involution-shift-on-C-is-s",
    "involution-shift-off-C-is-t",
    "off-C-commutators-lie-in-{1,t}",
    "C-minus-symmetric-commutators-with-G-lie-in-{1,s}",
    "commutator-set-(C-minus-symmetric,off-C)-equals-{s}",
];

/// Checks the two-commutator structural case. On success returns the `(s, t)`
/// assignment (lexicographically least when both orders work); on failure
/// returns the first failing condition of the assignment that got furthest.
fn ib3_check(
    tau: &GroupInvolution,
    sigma: &Orientation,
    placement: SPlacement,
) -> Result<(usize, usize), &'static str> {
    let g = sigma.group();
    let kernel = sigma.kernel();
    let c_set = sigma.subgroup_c();
    let z = g.center();
    let e = g.identity();

    if c_set.iter().all(|x| tau.apply(x) == x) {
        return Err(IB3_CONDITIONS[0]);
    }
    if kernel.iter().any(|x| tau.apply(x) != x) {
        return Err(IB3_CONDITIONS[1]);
    }
    let mut commutators: Vec<usize> = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            let c = g.commutator(x, y);
            if c != e {
                commutators.push(c);
            }
        }
    }
    commutators.sort_unstable();
    commutators.dedup();
    if commutators.len() != 2 {
        return Err(IB3_CONDITIONS[2]);
    }

    let c_minus_gstar: Vec<usize> = c_set.iter().filter(|&x| tau.apply(x) != x).collect();
    let off_c_all: Vec<usize> = g.elements().filter(|&x| !c_set.contains(x)).collect();

    let assignments = [
        (commutators[0], commutators[1]),
        (commutators[1], commutators[0]),
    ];
    let mut best_failure: (usize, &'static str) = (3, IB3_CONDITIONS[3]);
    for (s, t) in assignments {
        match ib3_assignment(tau, placement, s, t, &c_minus_gstar, &off_c_all, g, kernel, c_set, &z) {
            Ok(()) => return Ok((s, t)),
            Err(at) => {
                if at > best_failure.0 {
                    best_failure = (at, IB3_CONDITIONS[at]);
                }
            }
        }
    }
    Err(best_failure.1)
}

#[allow(clippy::too_many_arguments)]
fn ib3_assignment(
    tau: &GroupInvolution,
    placement: SPlacement,
    s: usize,
    t: usize,
    c_minus_gstar: &[usize],
    off_c_all: &[usize],
    g: &crate::group::Group,
    kernel: &ElementSet,
    c_set: &ElementSet,
    z: &ElementSet,
) -> Result<(), usize> {
    let e = g.identity();
    let derived = g.derived_subgroup();
    if !derived
        .iter()
        .all(|x| x == e || (in_placement(tau, kernel, placement, x) && z.contains(x)))
    {
        return Err(3);
    }
    if g.mul(s, s) != e || g.mul(t, t) != e {
        return Err(4);
    }
    // derived subgroup of C
    let mut c_comms: Vec<usize> = Vec::new();
    for a in c_set.iter() {
        for b in c_set.iter() {
            c_comms.push(g.commutator(a, b));
        }
    }
    let c_derived = g.closure(&c_comms);
    let c_derived_ok = c_derived.members() == [e]
        || c_derived.members() == {
            let mut v = vec![e, s];
            v.sort_unstable();
            v
        };
    if !c_derived_ok {
        return Err(5);
    }
    if !c_set
        .iter()
        .all(|x| tau.apply(x) == x || tau.apply(x) == g.mul(x, s))
    {
        return Err(6);
    }
    if !off_c_all
        .iter()
        .all(|&x| tau.apply(x) == x || tau.apply(x) == g.mul(x, t))
    {
        return Err(7);
    }
    // G \ (C u G_*)
    let outside: Vec<usize> = off_c_all
        .iter()
        .copied()
        .filter(|&x| tau.apply(x) != x)
        .collect();
    for &a in &outside {
        for &b in &outside {
            let c = g.commutator(a, b);
            if c != e && c != t {
                return Err(8);
            }
        }
    }
    for &a in c_minus_gstar {
        for b in g.elements() {
            let c = g.commutator(a, b);
            if c != e && c != s {
                return Err(9);
            }
        }
    }
    let mut cross: Vec<usize> = Vec::new();
    for &a in c_minus_gstar {
        for &b in &outside {
            cross.push(g.commutator(a, b));
        }
    }
    cross.sort_unstable();
    cross.dedup();
    if cross != [s] {
        return Err(10);
    }
    Ok(())
}

/// For the exhaustive-search documentation: why this instance is not the
/// two-commutator case, as the first failing structural condition. `None`
/// when the case matches.
pub fn ib3_first_failure(tau: &GroupInvolution, sigma: &Orientation) -> Option<&'static str> {
    ib3_check(tau, sigma, SPlacement::NStar).err()
}

/// The shift table `c_x = x* x^{-1}` when every shift is central of order at
/// most two; `None` as soon as one element violates that. The shifts being
/// symmetric comes for free: `(c_x)* = c_x^{-1} = c_x` once they are central
/// involutions.
fn central_shifts(tau: &GroupInvolution, sigma: &Orientation) -> Option<Vec<usize>> {
    let g = sigma.group();
    let e = g.identity();
    let mut shifts = Vec::with_capacity(g.order());
    for x in g.elements() {
        let c = g.mul(tau.apply(x), g.inv(x));
        if g.mul(c, c) != e {
            return None;
        }
        if !g.elements().all(|y| g.mul(c, y) == g.mul(y, c)) {
            return None;
        }
        shifts.push(c);
    }
    Some(shifts)
}

/// Pairwise span conditions obtained by substituting `x* = c_x x` into the
/// Jordan expansion of the paired generators and collecting like terms in the
/// central subgroup generated by the shifts. Together with the coefficient
/// conditions this is exactly equivalent to anticommutativity of the span;
/// the named structure cases are sufficient but not exhaustive for it.
fn span_pair_conditions(tau: &GroupInvolution, sigma: &Orientation, shifts: &[usize]) -> bool {
    let g = sigma.group();
    let r = sigma.ring();
    let e = g.identity();
    let zero = r.zero();
    let one = r.one();
    let minus_one = r.minus_one();
    let (symmetric, non_symmetric): (Vec<usize>, Vec<usize>) =
        g.elements().partition(|&x| tau.apply(x) == x);

    for &x in &non_symmetric {
        let cx = shifts[x];
        let sx = sigma.sigma_of(x);
        for &y in &non_symmetric {
            let cy = shifts[y];
            let sy = sigma.sigma_of(y);
            let xy = g.mul(x, y);
            let sxy = sigma.sigma_of(xy);
            // swap factor: yx = u * xy
            let u = g.mul(g.mul(y, x), g.inv(xy));
            if u == e {
                let ring_ok = r.double(r.add(one, sxy)) == zero
                    && r.double(r.add(sx, sy)) == zero;
                if cx != cy || !ring_ok {
                    return false;
                }
            } else {
                let d1 = u == cx && sx == minus_one;
                let d2 = u == cy && sy == minus_one;
                let d3 = u == cx
                    && cx == cy
                    && r.add(r.add(one, sx), r.add(sy, sxy)) == zero;
                let d4 = (cx == cy || g.mul(cx, cy) == u)
                    && sxy == minus_one
                    && sx == r.neg(sy);
                if !(d1 || d2 || d3 || d4) {
                    return false;
                }
            }
        }
        // mixed pairs: a noncommuting symmetric partner with a nonzero
        // admissible coefficient forces the swap factor to be the shift
        for &y in &symmetric {
            let xy = g.mul(x, y);
            let u = g.mul(g.mul(y, x), g.inv(xy));
            if u == e || u == cx {
                continue;
            }
            let adm = admissible_coefficients(tau, sigma, y);
            if adm.iter().any(|&a| a != zero) {
                return false;
            }
        }
    }
    true
}

/// Evaluates the three coefficient conditions by exhaustive quantification.
pub fn check_ring_conditions(tau: &GroupInvolution, sigma: &Orientation) -> RingConditions {
    let g = sigma.group();
    let r = sigma.ring();
    let zero = r.zero();
    let one = r.one();
    let minus_one = r.minus_one();
    let (symmetric, non_symmetric): (Vec<usize>, Vec<usize>) =
        g.elements().partition(|&x| tau.apply(x) == x);
    let adm: Vec<Option<Vec<usize>>> = g
        .elements()
        .map(|y| {
            if tau.apply(y) == y {
                Some(admissible_coefficients(tau, sigma, y))
            } else {
                None
            }
        })
        .collect();

    let mut ii = true;
    'ii: for &x in &non_symmetric {
        for &y in &non_symmetric {
            let xy = g.mul(x, y);
            let sx = sigma.sigma_of(x);
            let sy = sigma.sigma_of(y);
            let sxy = sigma.sigma_of(xy);
            if g.mul(x, y) == g.mul(y, x) {
                if r.double(r.add(one, sxy)) != zero || r.double(r.add(sx, sy)) != zero {
                    ii = false;
                    break 'ii;
                }
            } else if sx != minus_one && sy != minus_one {
                let sum = r.add(r.add(one, sx), r.add(sy, sxy));
                if sum != zero {
                    ii = false;
                    break 'ii;
                }
            }
        }
    }

    let mut iii = true;
    'iii: for &x in &non_symmetric {
        let guard = r.add(one, sigma.sigma_of(x));
        for &y in &symmetric {
            let commute = g.mul(x, y) == g.mul(y, x);
            for &alpha in adm[y].as_ref().unwrap() {
                let ok = if commute {
                    r.double(alpha) == zero
                } else {
                    r.mul(alpha, guard) == zero
                };
                if !ok {
                    iii = false;
                    break 'iii;
                }
            }
        }
    }

    let mut iv = true;
    'iv: for &x in &symmetric {
        for &y in &symmetric {
            let commute = g.mul(x, y) == g.mul(y, x);
            for &alpha in adm[x].as_ref().unwrap() {
                for &beta in adm[y].as_ref().unwrap() {
                    let prod = r.mul(alpha, beta);
                    let ok = if commute {
                        r.double(prod) == zero
                    } else {
                        prod == zero
                    };
                    if !ok {
                        iv = false;
                        break 'iv;
                    }
                }
            }
        }
    }

    RingConditions { ii, iii, iv }
}

/// The full classification predicate, evaluated without any group-ring
/// multiplication: a characteristic gate, the central-shift structure
/// (`x* = c_x x` with every shift central of order at most two), the pairwise
/// span conditions, and the three coefficient conditions.
///
/// The named structure cases are reported alongside as tags. They are
/// sufficient for the predicate but demonstrably not exhaustive: direct
/// products such as C2 x D4 admit involutions whose shift function takes two
/// central kernel values of which only one is a commutator, and these
/// anticommute while matching no listed case. `outside_case_list` flags
/// exactly those instances.
pub fn theorem_predicate(
    tau: &GroupInvolution,
    sigma: &Orientation,
) -> Result<ClassificationResult, ClassifierError> {
    let r = sigma.ring();
    if r.characteristic() == 2 {
        return Err(ClassifierError::CharTwoRejected);
    }
    debug_assert!(!sigma.is_trivial(), "the predicate requires a nontrivial orientation");

    let structure = classify_structure_with(tau, sigma, SPlacement::NStar);
    let weaker = classify_structure_with(tau, sigma, SPlacement::GStar);
    let ring_conditions = check_ring_conditions(tau, sigma);
    let ch = r.characteristic();
    let char_gate = (ch == 4 || ch == 8) && (tau.is_identity() || ch == 4);
    let span_gate = match central_shifts(tau, sigma) {
        Some(shifts) => span_pair_conditions(tau, sigma, &shifts),
        None => false,
    };
    let predicate = char_gate && span_gate && ring_conditions.all();
    Ok(ClassificationResult {
        predicate,
        gp14: gp14_predicate(tau, sigma),
        placement_sensitive: structure.tag != weaker.tag,
        outside_case_list: predicate && structure.tag == StructureTag::None,
        structure,
        ring_conditions,
    })
}

/// Evaluates the plus-minus-one classification on the restriction to
/// `C = {x : sigma(x) = +-1}`, where the orientation is the induced map to
/// `{1, -1}` with kernel `N`. On C the two compatibility phrasings coincide:
/// `x x* in N` says `sigma(x*) = sigma(x)^{-1}`, and a value of `+-1` is its
/// own inverse.
pub fn gp14_predicate(tau: &GroupInvolution, sigma: &Orientation) -> Gp14Tag {
    let g = sigma.group();
    let r = sigma.ring();
    let kernel = sigma.kernel();
    let c_set = sigma.subgroup_c();
    debug_assert!(
        c_set.iter().all(|x| c_set.contains(tau.apply(x))),
        "C is tau-invariant under compatibility"
    );
    let ch = r.characteristic();
    let c_abelian = c_set
        .iter()
        .all(|a| c_set.iter().all(|b| g.mul(a, b) == g.mul(b, a)));
    let tau_id_on_c = c_set.iter().all(|x| tau.apply(x) == x);
    if (ch == 4 || ch == 8) && c_abelian && tau_id_on_c {
        return Gp14Tag::A;
    }
    let tau_id_on_n = kernel.iter().all(|x| tau.apply(x) == x);
    if ch == 4 && c_abelian && tau_id_on_n {
        return Gp14Tag::B;
    }
    if ch == 4 {
        let e = g.identity();
        let mut c_comms: Vec<usize> = Vec::new();
        for a in c_set.iter() {
            for b in c_set.iter() {
                c_comms.push(g.commutator(a, b));
            }
        }
        let c_derived = g.closure(&c_comms);
        if c_derived.len() == 2 {
            let s = c_derived.iter().find(|&x| x != e).unwrap();
            let shift_ok = c_set
                .iter()
                .all(|x| tau.apply(x) == x || tau.apply(x) == g.mul(s, x));
            if shift_ok {
                let witnesses: Vec<usize> = c_set
                    .iter()
                    .filter(|&x| tau.apply(x) == x && !kernel.contains(x))
                    .collect();
                let symmetric_commute = witnesses
                    .iter()
                    .all(|&a| witnesses.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
                let r2 = r.two_torsion();
                let r2_squares_to_zero = r2
                    .iter()
                    .all(|&a| r2.iter().all(|&b| r.mul(a, b) == r.zero()));
                if symmetric_commute || r2_squares_to_zero {
                    return Gp14Tag::C;
                }
            }
        }
    }
    Gp14Tag::None
}
