//! The ground-truth side of verification.
//!
//! `check_anticommutative` decides whether the symmetric span anticommutes by
//! testing every generator pair, including self-pairs: the Jordan product is
//! R-bilinear over a commutative coefficient ring, so the span anticommutes
//! exactly when the generators do. Self-pairs matter because `a o a = 2 a^2`
//! need not vanish in characteristic 4 or 8; the doubled first family exists
//! precisely because of them.
//!
//! `check_lemma_suite` asserts the structural conclusions that must follow
//! once the span anticommutes. A failing entry on a holding instance is a bug
//! or a genuine discrepancy and the sweep harness treats it as fatal.

use thiserror::Error;

use crate::group_ring::{
    admissible_coefficients, GroupRingElement, SymmetricGenerators,
};
use crate::involution::GroupInvolution;
use crate::orientation::Orientation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckerError {
    #[error("lemma suite requires an anticommuting span (verdict does not hold)")]
    HypothesisNotMet,
}

/// Outcome of the direct pairwise check. `holds` is true exactly when no
/// witness exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// First failing pair in deterministic generator order, with its nonzero
/// Jordan product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub left_index: usize,
    pub right_index: usize,
    pub left: GroupRingElement,
    pub right: GroupRingElement,
    pub product: GroupRingElement,
}

/// Pairwise Jordan test over an explicit generator list, self-pairs included.
pub fn pairwise_anticommute(items: &[GroupRingElement]) -> Verdict {
    for i in 0..items.len() {
        for j in i..items.len() {
            let product = items[i]
                .jordan(&items[j])
                .expect("generators share one ambient group ring");
            if !product.is_zero() {
                return Verdict {
                    holds: false,
                    witness: Some(Witness {
                        left_index: i,
                        right_index: j,
                        left: items[i].clone(),
                        right: items[j].clone(),
                        product,
                    }),
                };
            }
        }
    }
    Verdict {
        holds: true,
        witness: None,
    }
}

/// Does the symmetric span anticommute under the Jordan product?
pub fn check_anticommutative(gens: &SymmetricGenerators) -> Verdict {
    let items: Vec<GroupRingElement> = gens.iter_all().cloned().collect();
    pairwise_anticommute(&items)
}

/// Per-lemma status for an instance whose direct verdict holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub id: &'static str,
    pub holds: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub entries: Vec<LemmaEntry>,
}

impl LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failing(&self) -> Vec<&LemmaEntry> {
        self.entries.iter().filter(|e| !e.holds).collect()
    }
}

struct Ctx<'a> {
    tau: &'a GroupInvolution,
    sigma: &'a Orientation,
    non_symmetric: Vec<usize>,
    symmetric: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(tau: &'a GroupInvolution, sigma: &'a Orientation) -> Self {
        let g_star = tau.symmetric_set();
        let g = sigma.group();
        let (symmetric, non_symmetric) =
            g.elements().partition(|&x| g_star.contains(x));
        Ctx {
            tau,
            sigma,
            non_symmetric,
            symmetric,
        }
    }

    fn g(&self) -> &crate::group::Group {
        self.sigma.group()
    }

    fn r(&self) -> &crate::ring::FiniteRing {
        self.sigma.ring()
    }

    fn star(&self, x: usize) -> usize {
        self.tau.apply(x)
    }

    fn sg(&self, x: usize) -> usize {
        self.sigma.sigma_of(x)
    }

    /// `c_x = x* x^{-1}`.
    fn c(&self, x: usize) -> usize {
        let g = self.g();
        g.mul(self.star(x), g.inv(x))
    }

    fn is_symmetric(&self, x: usize) -> bool {
        self.star(x) == x
    }

    fn commute(&self, x: usize, y: usize) -> bool {
        self.g().mul(x, y) == self.g().mul(y, x)
    }

    fn name(&self, x: usize) -> &str {
        self.g().name(x)
    }

    fn adm(&self, y: usize) -> Vec<usize> {
        admissible_coefficients(self.tau, self.sigma, y)
    }
}

fn lemma_3_2(ctx: &Ctx) -> Option<String> {
    let ch = ctx.r().characteristic();
    if ch == 4 || ch == 8 {
        None
    } else {
        Some(format!("char(R) = {ch}"))
    }
}

fn lemma_3_3(ctx: &Ctx) -> Option<String> {
    if ctx.tau.is_identity() {
        return None;
    }
    let ch = ctx.r().characteristic();
    if ch != 4 {
        return Some(format!("tau != Id but char(R) = {ch}"));
    }
    let g = ctx.g();
    for &x in &ctx.non_symmetric {
        let xs = ctx.star(x);
        if g.mul(x, xs) != g.mul(xs, x) {
            return Some(format!("x = {}: x x* != x* x", ctx.name(x)));
        }
        let sq = g.mul(x, x);
        if !ctx.is_symmetric(sq) {
            return Some(format!("x = {}: x^2 not symmetric", ctx.name(x)));
        }
    }
    None
}

fn lemma_3_4(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    let r = ctx.r();
    for x in g.elements() {
        for y in g.elements() {
            let lhs = ctx.commute(x, y);
            let rhs = g.mul(ctx.star(x), y) == g.mul(y, ctx.star(x));
            if lhs != rhs {
                return Some(format!(
                    "({}, {}): xy = yx <=> x*y = yx* fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
        }
    }
    for &x in &ctx.non_symmetric {
        for &y in &ctx.non_symmetric {
            if !ctx.commute(x, y) {
                continue;
            }
            let xy = g.mul(x, y);
            let xs = ctx.star(x);
            let ys = ctx.star(y);
            if g.mul(xs, ys) != xy || g.mul(ys, xs) != xy {
                return Some(format!(
                    "commuting ({}, {}): xy != x*y*",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            let a = g.mul(x, ys);
            if g.mul(ys, x) != a || g.mul(xs, y) != a || g.mul(y, xs) != a {
                return Some(format!(
                    "commuting ({}, {}): xy* = y*x = x*y = yx* fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            let one = r.one();
            if r.double(r.add(one, ctx.sg(xy))) != r.zero()
                || r.double(r.add(ctx.sg(x), ctx.sg(y))) != r.zero()
            {
                return Some(format!(
                    "commuting ({}, {}): 2(1 + sigma(xy)) = 0 = 2(sigma(x) + sigma(y)) fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
        }
    }
    None
}

fn lemma_3_7(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    for &x in &ctx.non_symmetric {
        for &y in &ctx.non_symmetric {
            let xy = g.mul(x, y);
            let xs = ctx.star(x);
            let ys = ctx.star(y);
            let allowed = [g.mul(y, x), g.mul(y, xs), g.mul(ys, x), g.mul(xs, ys)];
            if !allowed.contains(&xy) {
                return Some(format!(
                    "({}, {}): xy outside {{yx, yx*, y*x, x*y*}}",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            if ctx.commute(x, y) != ctx.is_symmetric(xy) {
                return Some(format!(
                    "({}, {}): xy = yx <=> xy symmetric fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            if (xy == g.mul(y, xs)) != (g.mul(xs, y) == g.mul(y, x)) {
                return Some(format!(
                    "({}, {}): xy = yx* <=> x*y = yx fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
        }
    }
    None
}

fn lemma_3_8(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    for &x in &ctx.non_symmetric {
        let sq = g.mul(x, x);
        for &y in &ctx.non_symmetric {
            if !ctx.commute(sq, y) {
                return Some(format!("({}, {}): (x^2, y) != 1", ctx.name(x), ctx.name(y)));
            }
        }
    }
    None
}

fn lemma_3_9(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    let r = ctx.r();
    for &x in &ctx.non_symmetric {
        let xs = ctx.star(x);
        for &y in &ctx.symmetric {
            let conj = g.conjugate(x, y);
            if conj != x && conj != xs {
                return Some(format!(
                    "({}, {}): x^y outside {{x, x*}}",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            let xy = g.mul(x, y);
            if ctx.is_symmetric(xy) != !ctx.commute(x, y) {
                return Some(format!(
                    "({}, {}): xy symmetric <=> xy != yx fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            let noncommute = !ctx.commute(x, y);
            let guard = r.add(r.one(), ctx.sg(x));
            for alpha in ctx.adm(y) {
                let ok = if noncommute {
                    r.mul(alpha, guard) == r.zero()
                } else {
                    r.double(alpha) == r.zero()
                };
                if !ok {
                    return Some(format!(
                        "({}, {}), alpha = {}: coefficient condition fails",
                        ctx.name(x),
                        ctx.name(y),
                        r.name(alpha)
                    ));
                }
            }
            let ysq = g.mul(y, y);
            let xsq = g.mul(x, x);
            let xxs = g.mul(x, xs);
            if !ctx.commute(x, ysq) || !ctx.commute(xsq, y) || !ctx.commute(xxs, y) {
                return Some(format!(
                    "({}, {}): (x, y^2) = (x^2, y) = (xx*, y) = 1 fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
        }
    }
    None
}

fn lemma_3_10(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    let r = ctx.r();
    for &x in &ctx.symmetric {
        let adm_x = ctx.adm(x);
        for &y in &ctx.symmetric {
            let xy = g.mul(x, y);
            if ctx.commute(x, y) != ctx.is_symmetric(xy) {
                return Some(format!(
                    "({}, {}): xy = yx <=> xy symmetric fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            let commute = ctx.commute(x, y);
            for &alpha in &adm_x {
                for beta in ctx.adm(y) {
                    let prod = r.mul(alpha, beta);
                    let ok = if commute {
                        r.double(prod) == r.zero()
                    } else {
                        prod == r.zero()
                    };
                    if !ok {
                        return Some(format!(
                            "({}, {}), alpha = {}, beta = {}: coefficient condition fails",
                            ctx.name(x),
                            ctx.name(y),
                            r.name(alpha),
                            r.name(beta)
                        ));
                    }
                }
            }
            if !ctx.commute(x, g.mul(y, y)) || !ctx.commute(g.mul(x, x), y) {
                return Some(format!(
                    "({}, {}): (x, y^2) = (x^2, y) = 1 fails",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
        }
    }
    None
}

fn lemma_3_11(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    for x in g.elements() {
        let cx = ctx.c(x);
        if !g.elements().all(|y| ctx.commute(cx, y)) {
            return Some(format!("c_{} = {} not central", ctx.name(x), ctx.name(cx)));
        }
    }
    None
}

fn lemma_3_12(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    let e = g.identity();
    for x in g.elements() {
        let cx = ctx.c(x);
        if !ctx.is_symmetric(cx) {
            return Some(format!("c_{} not symmetric", ctx.name(x)));
        }
        if g.mul(cx, cx) != e {
            return Some(format!("c_{}^2 != 1", ctx.name(x)));
        }
        if g.mul(cx, x) != ctx.star(x) {
            return Some(format!("x* != c_x x at x = {}", ctx.name(x)));
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            let cxy = ctx.c(g.mul(x, y));
            let expect = g.mul(g.mul(ctx.c(x), ctx.c(y)), g.commutator(x, y));
            if cxy != expect {
                return Some(format!(
                    "({}, {}): c_xy != c_x c_y (x, y)",
                    ctx.name(x),
                    ctx.name(y)
                ));
            }
            if g.commutator(x, y) != e {
                let com = g.commutator(x, y);
                if ![ctx.c(x), ctx.c(y), com].contains(&cxy) {
                    return Some(format!(
                        "({}, {}): c_xy outside {{c_x, c_y, (x, y)}}",
                        ctx.name(x),
                        ctx.name(y)
                    ));
                }
            }
        }
    }
    None
}

fn lemma_3_13(ctx: &Ctx) -> Option<String> {
    let g = ctx.g();
    let r = ctx.r();
    let zero = r.zero();
    let one = r.one();
    let minus_one = r.minus_one();
    for &x in &ctx.non_symmetric {
        for &y in &ctx.non_symmetric {
            let cx = ctx.c(x);
            let cy = ctx.c(y);
            let xy = g.mul(x, y);
            let cxy = ctx.c(xy);
            let com = g.commutator(x, y);
            let sx = ctx.sg(x);
            let sy = ctx.sg(y);
            let sxy = ctx.sg(xy);
            if com == g.identity() {
                let ring_ok = r.double(r.add(one, sxy)) == zero
                    && r.double(r.add(sx, sy)) == zero;
                if cx != cy || !ring_ok {
                    return Some(format!(
                        "commuting ({}, {}): case (i) fails",
                        ctx.name(x),
                        ctx.name(y)
                    ));
                }
            } else {
                let sum4 = r.add(r.add(one, sx), r.add(sy, sxy));
                let case_a = com == cx && cx == cy && cy == cxy && sum4 == zero;
                let case_b = com == cx && cx != cy && cy == cxy && sx == minus_one;
                let case_c = com == cy && cy != cx && cx == cxy && sy == minus_one;
                let case_d = com == cxy
                    && cxy != cx
                    && cx == cy
                    && sxy == minus_one
                    && sx == r.neg(sy);
                if !(case_a || case_b || case_c || case_d) {
                    return Some(format!(
                        "noncommuting ({}, {}): no case of (ii) applies",
                        ctx.name(x),
                        ctx.name(y)
                    ));
                }
            }
        }
    }
    None
}

/// Runs the per-lemma conclusion checks. Only meaningful when the direct
/// verdict holds; lemma hypotheses assume the span anticommutes.
pub fn check_lemma_suite(
    tau: &GroupInvolution,
    sigma: &Orientation,
    verdict: &Verdict,
) -> Result<LemmaReport, CheckerError> {
    if !verdict.holds {
        return Err(CheckerError::HypothesisNotMet);
    }
    type LemmaCheck = for<'a, 'b> fn(&'a Ctx<'b>) -> Option<String>;
    let ctx = Ctx::new(tau, sigma);
    let checks: [(&'static str, LemmaCheck); 10] = [
        ("3.2", lemma_3_2),
        ("3.3", lemma_3_3),
        ("3.4", lemma_3_4),
        ("3.7", lemma_3_7),
        ("3.8", lemma_3_8),
        ("3.9", lemma_3_9),
        ("3.10", lemma_3_10),
        ("3.11", lemma_3_11),
        ("3.12", lemma_3_12),
        ("3.13", lemma_3_13),
    ];
    let entries = checks
        .into_iter()
        .map(|(id, check)| {
            let counterexample = check(&ctx);
            LemmaEntry {
                id,
                holds: counterexample.is_none(),
                counterexample,
            }
        })
        .collect();
    Ok(LemmaReport { entries })
}
