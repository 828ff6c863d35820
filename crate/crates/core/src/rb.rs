//! The signature-based engine: regular s-reduction, rewrite orders, the
//! rewritability checks (with and without the product criterion), syzygy-set
//! updates, and the main pair loop.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::Arc;

use crate::event::{Decision, Event};
use crate::field::PrimeField;
use crate::monomial::{cmp_grevlex, Monomial};
use crate::polynomial::{Polynomial, Term};
use crate::ring::Ring;
use crate::signature::{sig_divides, sig_mul, ModuleOrderContext, OrderKind, Signature};
use crate::stats::RunStats;
use crate::syzygy::SyzygySigSet;

/// A basis element: a sig-poly pair plus its insertion ordinal.
///
/// The polynomial is monic and regular-s-reduced at insertion time; no two
/// basis members ever share a signature.
#[derive(Debug, Clone)]
pub struct LabeledPoly {
    pub sig: Signature,
    pub poly: Polynomial,
    pub ordinal: usize,
}

impl LabeledPoly {
    /// Seed elements carry the module generator signature e_k itself.
    pub fn is_seed(&self) -> bool {
        self.sig.mono.is_one()
    }
}

/// A scheduled regular S-pair. `left` is the side realizing the pair
/// signature; a singular pair (equal multiplied signatures) is never built.
#[derive(Debug, Clone)]
pub struct SPair {
    pub sig: Signature,
    pub left: (Monomial, usize),
    pub right: (Monomial, usize),
    pub lcm: Monomial,
}

impl SPair {
    /// Generating ordinals, smaller first.
    pub fn gens(&self) -> (usize, usize) {
        let (a, b) = (self.left.1, self.right.1);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteOrder {
    Add,
    Rat,
}

impl RewriteOrder {
    pub fn label(&self) -> &'static str {
        match self {
            RewriteOrder::Add => "add",
            RewriteOrder::Rat => "rat",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RbConfig {
    pub order: OrderKind,
    pub rewrite: RewriteOrder,
    pub update_syz: bool,
    pub product_criterion: bool,
    /// Also run the rewritability check when a pair is generated, not only
    /// when it is popped.
    pub prefilter: bool,
    /// Test mode: disable all criteria except the signature-minimal pair
    /// ordering (duplicate signatures are still skipped so that the basis
    /// invariant holds).
    pub criteria_off: bool,
}

impl Default for RbConfig {
    fn default() -> Self {
        RbConfig {
            order: OrderKind::Pot,
            rewrite: RewriteOrder::Rat,
            update_syz: false,
            product_criterion: false,
            prefilter: false,
            criteria_off: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RbError {
    EmptyInput,
    ZeroGenerator(usize),
}

impl fmt::Display for RbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RbError::EmptyInput => write!(f, "input system is empty"),
            RbError::ZeroGenerator(i) => write!(f, "generator {} is zero", i + 1),
        }
    }
}

impl std::error::Error for RbError {}

#[derive(Debug)]
pub struct RbRun {
    pub basis: Vec<LabeledPoly>,
    pub syzygies: SyzygySigSet,
    pub stats: RunStats,
    pub events: Vec<Event>,
}

impl RbRun {
    pub fn projected_basis(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|g| g.poly.clone()).collect()
    }
}

/// Builds the regular S-pair of two basis members, or `None` when the two
/// multiplied signatures coincide (singular pair).
pub fn make_spair(ctx: &ModuleOrderContext, a: &LabeledPoly, b: &LabeledPoly) -> Option<SPair> {
    let la = a.poly.lead_mono().expect("basis polynomials are nonzero");
    let lb = b.poly.lead_mono().expect("basis polynomials are nonzero");
    let lcm = la.lcm(lb);
    let ma = lcm.div(la).unwrap();
    let mb = lcm.div(lb).unwrap();
    let sa = sig_mul(&a.sig, &ma);
    let sb = sig_mul(&b.sig, &mb);
    match ctx.sig_cmp(&sa, &sb) {
        Ordering::Equal => None,
        Ordering::Greater => Some(SPair {
            sig: sa,
            left: (ma, a.ordinal),
            right: (mb, b.ordinal),
            lcm,
        }),
        Ordering::Less => Some(SPair {
            sig: sb,
            left: (mb, b.ordinal),
            right: (ma, a.ordinal),
            lcm,
        }),
    }
}

/// Regular s-reduction of `f` carrying the fixed signature `start`: a term
/// may be eliminated by `b * basis[j]` only when the multiplied signature is
/// strictly below `start`. Reducer choice mirrors `normal_form`:
/// grevlex-smallest eligible lead, first-inserted on ties.
pub fn s_reduce_regular(
    field: &PrimeField,
    ctx: &ModuleOrderContext,
    start: &Signature,
    f: &Polynomial,
    basis: &[LabeledPoly],
) -> Polynomial {
    let mut cur = f.clone();
    let mut i = 0;
    while i < cur.terms().len() {
        let target_mono = cur.terms()[i].mono.clone();
        let mut best: Option<usize> = None;
        for (pos, g) in basis.iter().enumerate() {
            let lm = g.poly.lead_mono().unwrap();
            if !lm.divides(&target_mono) {
                continue;
            }
            // signature of the step is sig(g) * target/lm; regular only
            if ctx.sig_cmp_scaled(&g.sig, &target_mono, lm, start) != Ordering::Less {
                continue;
            }
            match best {
                None => best = Some(pos),
                Some(cand) => {
                    if cmp_grevlex(lm, basis[cand].poly.lead_mono().unwrap()) == Ordering::Less {
                        best = Some(pos);
                    }
                }
            }
        }
        match best {
            Some(pos) => {
                let g = &basis[pos];
                let t = &cur.terms()[i];
                let b = Term {
                    coeff: field.div(t.coeff, g.poly.lead_coeff().unwrap()).unwrap(),
                    mono: t.mono.div(g.poly.lead_mono().unwrap()).unwrap(),
                };
                cur = cur.sub_mul_term(field, &b, &g.poly);
            }
            None => i += 1,
        }
    }
    cur
}

/// Rewrite-order comparison between two basis members. Syzygy-set members
/// outrank every basis member; that case is handled by the callers.
pub fn rewrite_cmp(
    ctx: &ModuleOrderContext,
    rw: RewriteOrder,
    a: &LabeledPoly,
    b: &LabeledPoly,
) -> Ordering {
    match rw {
        RewriteOrder::Add => a.ordinal.cmp(&b.ordinal),
        RewriteOrder::Rat => ctx
            .sig_cmp_mul(
                &a.sig,
                b.poly.lead_mono().unwrap(),
                &b.sig,
                a.poly.lead_mono().unwrap(),
            )
            .then_with(|| ctx.sig_cmp(&a.sig, &b.sig)),
    }
}

/// The canonical rewriter among basis members whose signature divides `t`:
/// the rewrite-order maximum. Returns its ordinal.
fn g_canonical(
    ctx: &ModuleOrderContext,
    rw: RewriteOrder,
    basis: &[LabeledPoly],
    t: &Signature,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for g in basis {
        if !sig_divides(&g.sig, t) {
            continue;
        }
        match best {
            None => best = Some(g.ordinal),
            Some(b) => {
                if rewrite_cmp(ctx, rw, &basis[b], g) == Ordering::Less {
                    best = Some(g.ordinal);
                }
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteScope {
    HOnly,
    GOnly,
    Both,
}

/// Is the multiplied element `mult * basis[ordinal]` rewritable in its own
/// signature? Returns the canonical rewriter `(multiplier, ordinal)` when the
/// verdict came from the basis.
pub fn is_rewritable(
    ctx: &ModuleOrderContext,
    rw: RewriteOrder,
    basis: &[LabeledPoly],
    h: &SyzygySigSet,
    scope: RewriteScope,
    mult: &Monomial,
    ordinal: usize,
) -> (bool, Option<(Monomial, usize)>) {
    let t = sig_mul(&basis[ordinal].sig, mult);
    if matches!(scope, RewriteScope::HOnly | RewriteScope::Both) && h.divides(&t) {
        return (true, None);
    }
    if matches!(scope, RewriteScope::GOnly | RewriteScope::Both) {
        let canonical = g_canonical(ctx, rw, basis, &t).expect("the element itself divides");
        if canonical != ordinal {
            let m = t.mono.div(&basis[canonical].sig.mono).unwrap();
            return (true, Some((m, canonical)));
        }
    }
    (false, None)
}

/// Outcome of a rewritability check on a popped pair.
struct Skip {
    decision: Decision,
    stage: u8,
    rewriter: Option<(Monomial, usize)>,
}

enum QueueItem {
    Seed(usize),
    Pair(SPair),
}

struct QueueEntry {
    sig: Signature,
    lcm: Monomial,
    seq: u64,
    pair_id: u64,
    item: QueueItem,
    ctx: Arc<ModuleOrderContext>,
}

impl PartialEq for QueueEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QueueEntry {}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QueueEntry {
    // Reversed so that BinaryHeap pops the signature-minimal entry; ties go
    // to the smaller lcm, then generation order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .sig_cmp(&self.sig, &other.sig)
            .then_with(|| cmp_grevlex(&self.lcm, &other.lcm))
            .then_with(|| self.seq.cmp(&other.seq))
            .reverse()
    }
}

struct Engine {
    field: PrimeField,
    ctx: Arc<ModuleOrderContext>,
    config: RbConfig,
    basis: Vec<LabeledPoly>,
    h: SyzygySigSet,
    stats: RunStats,
    events: Vec<Event>,
    queue: BinaryHeap<QueueEntry>,
    next_id: u64,
}

impl Engine {
    fn fresh_id(&mut self) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    fn check_pair(&mut self, pair: &SPair) -> Option<Skip> {
        if self.config.criteria_off {
            return self.check_duplicate_signature(pair);
        }
        if self.config.product_criterion {
            self.check_rewritable_pc(pair)
        } else {
            self.check_rewritable(pair)
        }
    }

    /// Algorithm-2 check: either side rewritable w.r.t. the union of H and G,
    /// H outranking. The signature-realizing side is checked first.
    fn check_rewritable(&mut self, pair: &SPair) -> Option<Skip> {
        for (mult, ord) in [&pair.left, &pair.right] {
            let (hit, rewriter) = is_rewritable(
                &self.ctx,
                self.config.rewrite,
                &self.basis,
                &self.h,
                RewriteScope::Both,
                mult,
                *ord,
            );
            if hit {
                return Some(match rewriter {
                    None => Skip {
                        decision: Decision::RewrittenH,
                        stage: 1,
                        rewriter: None,
                    },
                    Some(r) => Skip {
                        decision: Decision::RewrittenG,
                        stage: 3,
                        rewriter: Some(r),
                    },
                });
            }
        }
        None
    }

    /// Algorithm-3 check: syzygy set first, then the product criterion (which
    /// records the new syzygy signature), then the basis.
    fn check_rewritable_pc(&mut self, pair: &SPair) -> Option<Skip> {
        let lead_left = self.basis[pair.left.1].poly.lead_mono().unwrap();
        let lead_right = self.basis[pair.right.1].poly.lead_mono().unwrap();
        let is_pc = lead_left.coprime(lead_right);

        // stage 1: rewritable w.r.t. H
        for (mult, ord) in [&pair.left, &pair.right] {
            let (hit, _) = is_rewritable(
                &self.ctx,
                self.config.rewrite,
                &self.basis,
                &self.h,
                RewriteScope::HOnly,
                mult,
                *ord,
            );
            if hit {
                if is_pc {
                    self.stats.pc_fulfilled += 1;
                }
                return Some(Skip {
                    decision: Decision::RewrittenH,
                    stage: 1,
                    rewriter: None,
                });
            }
        }

        // stage 2: product criterion; the pair signature is the lead
        // signature of the principal syzygy of the two generators.
        if is_pc {
            self.stats.pc_fulfilled += 1;
            self.stats.pc_not_rewritable_h += 1;
            let mut g_hit = false;
            for (mult, ord) in [&pair.left, &pair.right] {
                if is_rewritable(
                    &self.ctx,
                    self.config.rewrite,
                    &self.basis,
                    &self.h,
                    RewriteScope::GOnly,
                    mult,
                    *ord,
                )
                .0
                {
                    g_hit = true;
                    break;
                }
            }
            if !g_hit {
                self.stats.pc_not_rewritable_h_or_g += 1;
            }
            if self.ctx.kind == OrderKind::Pot {
                let left = &self.basis[pair.left.1];
                let right = &self.basis[pair.right.1];
                if left.sig.index != right.sig.index || left.is_seed() || right.is_seed() {
                    self.stats.pot_lemma_violations += 1;
                }
            }
            let inserted = self.h.insert_minimal(pair.sig.clone());
            debug_assert!(inserted, "stage-2 syzygy must be fresh after stage 1");
            self.stats.spairs_removed_pc += 1;
            return Some(Skip {
                decision: Decision::PcRemoved,
                stage: 2,
                rewriter: None,
            });
        }

        // stage 3: rewritable w.r.t. G
        for (mult, ord) in [&pair.left, &pair.right] {
            let (hit, rewriter) = is_rewritable(
                &self.ctx,
                self.config.rewrite,
                &self.basis,
                &self.h,
                RewriteScope::GOnly,
                mult,
                *ord,
            );
            if hit {
                return Some(Skip {
                    decision: Decision::RewrittenG,
                    stage: 3,
                    rewriter,
                });
            }
        }
        None
    }

    /// criteria-off mode: only exact duplicate signatures are skipped, which
    /// keeps the one-element-per-signature invariant without any criterion.
    fn check_duplicate_signature(&mut self, pair: &SPair) -> Option<Skip> {
        if self.basis.iter().any(|g| g.sig == pair.sig) {
            return Some(Skip {
                decision: Decision::RewrittenG,
                stage: 0,
                rewriter: None,
            });
        }
        if self.h.contains(&pair.sig) {
            return Some(Skip {
                decision: Decision::RewrittenH,
                stage: 0,
                rewriter: None,
            });
        }
        None
    }

    fn push_pair(&mut self, pair_id: u64, pair: SPair) {
        let seq = self.next_id;
        self.next_id += 1;
        self.queue.push(QueueEntry {
            sig: pair.sig.clone(),
            lcm: pair.lcm.clone(),
            seq,
            pair_id,
            item: QueueItem::Pair(pair),
            ctx: Arc::clone(&self.ctx),
        });
    }

    /// Inserts a fresh, already-monic element, schedules its S-pairs against
    /// all existing members, then refreshes the syzygy set.
    fn insert_element(&mut self, sig: Signature, poly: Polynomial) {
        assert!(
            self.basis.iter().all(|g| g.sig != sig),
            "two basis members may not share a signature"
        );
        let gamma = LabeledPoly {
            sig,
            poly,
            ordinal: self.basis.len(),
        };
        let mut generated: Vec<(u64, SPair)> = Vec::new();
        for alpha in 0..self.basis.len() {
            let pair_id = self.fresh_id();
            match make_spair(&self.ctx, &self.basis[alpha], &gamma) {
                None => {
                    self.stats.spairs_singular += 1;
                    self.events.push(Event {
                        pair_id,
                        gens: Some((alpha, gamma.ordinal)),
                        sig: Some(sig_mul(
                            &gamma.sig,
                            &self.basis[alpha]
                                .poly
                                .lead_mono()
                                .unwrap()
                                .lcm(gamma.poly.lead_mono().unwrap())
                                .div(gamma.poly.lead_mono().unwrap())
                                .unwrap(),
                        )),
                        lcm: Some(
                            self.basis[alpha]
                                .poly
                                .lead_mono()
                                .unwrap()
                                .lcm(gamma.poly.lead_mono().unwrap()),
                        ),
                        decision: Decision::Singular,
                        stage: 0,
                        rewriter: None,
                        born_zero: false,
                    });
                }
                Some(pair) => {
                    self.stats.spairs_generated += 1;
                    generated.push((pair_id, pair));
                }
            }
        }
        let ordinal = gamma.ordinal;
        self.basis.push(gamma);
        for (id, pair) in generated {
            if self.config.prefilter {
                if let Some(skip) = self.check_pair(&pair) {
                    self.log_skip(id, &pair, skip);
                    continue;
                }
            }
            self.push_pair(id, pair);
        }
        if self.config.update_syz {
            self.update_syz(ordinal);
        }
    }

    /// Syzygy-set refresh: the principal syzygy of two basis members has the
    /// lead signature max(lt(pi(alpha))*sig(gamma), lt(pi(gamma))*sig(alpha)),
    /// computable from the stored sig-poly pairs.
    ///
    /// Under pot and pot-rev new principal-syzygy information only appears
    /// when a fresh module generator enters (the index jump); the same seed
    /// trigger reproduces the lt-pot reference behavior, where per-insertion
    /// updates would already swallow every later product-criterion syzygy.
    /// Under d-pot the update runs on every insertion, which is what keeps
    /// its zero-reduction counts aligned with pot on homogeneous input.
    fn update_syz(&mut self, gamma_ordinal: usize) {
        let gamma = &self.basis[gamma_ordinal];
        let every_insertion = self.ctx.kind == OrderKind::DPot;
        if !every_insertion && !gamma.is_seed() {
            return;
        }
        let sig_gamma = gamma.sig.clone();
        let lead_gamma = gamma.poly.lead_mono().unwrap().clone();
        let mut candidates = Vec::new();
        for alpha in &self.basis[..gamma_ordinal] {
            let side_gamma = sig_mul(&sig_gamma, alpha.poly.lead_mono().unwrap());
            let side_alpha = sig_mul(&alpha.sig, &lead_gamma);
            match self.ctx.sig_cmp(&side_gamma, &side_alpha) {
                // equal lead module terms cancel; the true lead is unknown
                Ordering::Equal => continue,
                Ordering::Greater => candidates.push(side_gamma),
                Ordering::Less => candidates.push(side_alpha),
            }
        }
        for c in candidates {
            self.h.insert_minimal(c);
        }
    }

    fn log_skip(&mut self, pair_id: u64, pair: &SPair, skip: Skip) {
        match skip.decision {
            Decision::RewrittenH => self.stats.spairs_rewritten_h += 1,
            Decision::RewrittenG => self.stats.spairs_rewritten_g += 1,
            _ => {}
        }
        self.events.push(Event {
            pair_id,
            gens: Some(pair.gens()),
            sig: Some(pair.sig.clone()),
            lcm: Some(pair.lcm.clone()),
            decision: skip.decision,
            stage: skip.stage,
            rewriter: skip.rewriter,
            born_zero: false,
        });
    }
}

/// Runs the signature-based computation on the input system.
///
/// The projection of the returned basis is a Groebner basis of the input
/// ideal; the syzygy set holds the lead signatures of all syzygies the run
/// discovered or predicted.
pub fn rb_run(ring: &Ring, inputs: &[Polynomial], config: RbConfig) -> Result<RbRun, RbError> {
    if inputs.is_empty() {
        return Err(RbError::EmptyInput);
    }
    if let Some(i) = inputs.iter().position(|f| f.is_zero()) {
        return Err(RbError::ZeroGenerator(i));
    }
    let ctx = Arc::new(ModuleOrderContext::new(config.order, inputs));
    let mut engine = Engine {
        field: ring.field.clone(),
        ctx: Arc::clone(&ctx),
        config,
        basis: Vec::new(),
        h: SyzygySigSet::new(),
        stats: RunStats::default(),
        events: Vec::new(),
        queue: BinaryHeap::new(),
        next_id: 0,
    };
    let nvars = ring.nvars();
    for (i, f) in inputs.iter().enumerate() {
        let pair_id = engine.fresh_id();
        let seq = engine.fresh_id();
        engine.queue.push(QueueEntry {
            sig: Signature::unit(i, nvars),
            lcm: f.lead_mono().unwrap().clone(),
            seq,
            pair_id,
            item: QueueItem::Seed(i),
            ctx: Arc::clone(&ctx),
        });
    }

    let mut last_sig: Option<Signature> = None;
    while let Some(entry) = engine.queue.pop() {
        if let Some(prev) = &last_sig {
            assert_ne!(
                ctx.sig_cmp(&entry.sig, prev),
                Ordering::Less,
                "pair signatures must be processed in non-decreasing order"
            );
        }
        last_sig = Some(entry.sig.clone());
        let pair_id = entry.pair_id;

        match entry.item {
            QueueItem::Seed(k) => {
                let start = Signature::unit(k, nvars);
                let reduced =
                    s_reduce_regular(&engine.field, &ctx, &start, &inputs[k], &engine.basis);
                if reduced.is_zero() {
                    engine.h.insert_minimal(start.clone());
                    engine.stats.zero_reductions += 1;
                    engine.events.push(Event {
                        pair_id,
                        gens: None,
                        sig: Some(start),
                        lcm: None,
                        decision: Decision::Zero,
                        stage: 0,
                        rewriter: None,
                        born_zero: false,
                    });
                } else {
                    engine.events.push(Event {
                        pair_id,
                        gens: None,
                        sig: Some(start.clone()),
                        lcm: None,
                        decision: Decision::Reduced,
                        stage: 0,
                        rewriter: None,
                        born_zero: false,
                    });
                    let monic = reduced.monic(&engine.field);
                    engine.insert_element(start, monic);
                }
            }
            QueueItem::Pair(pair) => {
                if let Some(skip) = engine.check_pair(&pair) {
                    engine.log_skip(pair_id, &pair, skip);
                    continue;
                }
                let tl = Term {
                    coeff: 1,
                    mono: pair.left.0.clone(),
                };
                let tr = Term {
                    coeff: 1,
                    mono: pair.right.0.clone(),
                };
                let spol = engine.basis[pair.left.1]
                    .poly
                    .mul_term(&engine.field, &tl)
                    .sub_mul_term(&engine.field, &tr, &engine.basis[pair.right.1].poly);
                if spol.is_zero() {
                    // the pair itself is a syzygy; record its signature but
                    // count no reduction, none happened
                    let fresh = engine.h.insert_minimal(pair.sig.clone());
                    debug_assert!(engine.config.criteria_off || fresh);
                    engine.stats.spairs_born_zero += 1;
                    engine.events.push(Event {
                        pair_id,
                        gens: Some(pair.gens()),
                        sig: Some(pair.sig.clone()),
                        lcm: Some(pair.lcm.clone()),
                        decision: Decision::Zero,
                        stage: 0,
                        rewriter: None,
                        born_zero: true,
                    });
                    continue;
                }
                let reduced =
                    s_reduce_regular(&engine.field, &ctx, &pair.sig, &spol, &engine.basis);
                if reduced.is_zero() {
                    let fresh = engine.h.insert_minimal(pair.sig.clone());
                    assert!(
                        engine.config.criteria_off || fresh,
                        "zero-reduction signature must not be divisible by H"
                    );
                    engine.stats.zero_reductions += 1;
                    engine.events.push(Event {
                        pair_id,
                        gens: Some(pair.gens()),
                        sig: Some(pair.sig.clone()),
                        lcm: Some(pair.lcm.clone()),
                        decision: Decision::Zero,
                        stage: 0,
                        rewriter: None,
                        born_zero: false,
                    });
                } else {
                    engine.events.push(Event {
                        pair_id,
                        gens: Some(pair.gens()),
                        sig: Some(pair.sig.clone()),
                        lcm: Some(pair.lcm.clone()),
                        decision: Decision::Reduced,
                        stage: 0,
                        rewriter: None,
                        born_zero: false,
                    });
                    let monic = reduced.monic(&engine.field);
                    engine.insert_element(pair.sig.clone(), monic);
                }
            }
        }
    }

    engine.stats.check_invariants();
    Ok(RbRun {
        basis: engine.basis,
        syzygies: engine.h,
        stats: engine.stats,
        events: engine.events,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_poly;

    fn f7_ring() -> Ring {
        Ring::new(
            PrimeField::new(7).unwrap(),
            ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect(),
        )
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    fn labeled(r: &Ring, src: &[(&str, &str, usize)]) -> Vec<LabeledPoly> {
        // (poly, sig mono, sig index 1-based)
        src.iter()
            .enumerate()
            .map(|(i, (p, sm, si))| LabeledPoly {
                sig: Signature {
                    mono: if *sm == "1" {
                        Monomial::one(r.nvars())
                    } else {
                        parse_poly(r, sm).unwrap().lead_mono().unwrap().clone()
                    },
                    index: si - 1,
                },
                poly: parse_poly(r, p).unwrap(),
                ordinal: i,
            })
            .collect()
    }

    fn mono(r: &Ring, s: &str) -> Monomial {
        parse_poly(r, s).unwrap().lead_mono().unwrap().clone()
    }

    #[test]
    fn make_spair_example_one() {
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - z^2", "y^2 - x*t", "x*y - x*z", "x^2 - x*y"]);
        let ctx = ModuleOrderContext::new(OrderKind::Pot, &inputs);
        let basis = labeled(&r, &[("y*z - z^2", "1", 1), ("y^2 - x*t", "1", 2)]);
        let pair = make_spair(&ctx, &basis[1], &basis[0]).unwrap();
        assert_eq!(pair.lcm, mono(&r, "y^2*z"));
        assert_eq!(
            pair.sig,
            Signature {
                mono: mono(&r, "z"),
                index: 1
            }
        );
    }

    #[test]
    fn make_spair_rejects_identical_elements() {
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - z^2"]);
        let ctx = ModuleOrderContext::new(OrderKind::Pot, &inputs);
        let basis = labeled(&r, &[("y*z - z^2", "1", 1)]);
        assert!(make_spair(&ctx, &basis[0], &basis[0]).is_none());
    }

    #[test]
    fn make_spair_example_two_pair_sig() {
        // generators g4 = (e3, lead x^2*z) and g3 = (z*e2, lead x*t^2):
        // the pair signature is t^2*e3
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - 2*t^2", "x*y + t^2", "x^2*z + 3*x*t^2 - 2*y*t^2"]);
        let ctx = ModuleOrderContext::new(OrderKind::Pot, &inputs);
        let g3 = LabeledPoly {
            sig: Signature {
                mono: mono(&r, "z"),
                index: 1,
            },
            poly: parse_poly(&r, "x*t^2 + 4*z*t^2").unwrap(),
            ordinal: 0,
        };
        let g4 = LabeledPoly {
            sig: Signature {
                mono: Monomial::one(4),
                index: 2,
            },
            poly: parse_poly(&r, "x^2*z - 2*y*t^2 + 2*z*t^2").unwrap(),
            ordinal: 1,
        };
        let pair = make_spair(&ctx, &g3, &g4).unwrap();
        assert_eq!(
            pair.sig,
            Signature {
                mono: mono(&r, "t^2"),
                index: 2
            }
        );
    }

    #[test]
    fn s_reduce_regular_example_one_row_g5() {
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - z^2", "y^2 - x*t", "x*y - x*z", "x^2 - x*y"]);
        let ctx = ModuleOrderContext::new(OrderKind::LtPot, &inputs);
        let basis = labeled(
            &r,
            &[
                ("y*z - z^2", "1", 1),
                ("y^2 - x*t", "1", 2),
                ("x*y - x*z", "1", 3),
                ("x^2 - x*z", "1", 4),
            ],
        );
        let start = Signature {
            mono: mono(&r, "z"),
            index: 1,
        };
        let f = parse_poly(&r, "y*z^2 - x*z*t").unwrap();
        let out = s_reduce_regular(&r.field, &ctx, &start, &f, &basis);
        assert_eq!(out, parse_poly(&r, "z^3 - x*z*t").unwrap());

        // an irreducible polynomial passes through unchanged
        let g = parse_poly(&r, "t^4 + 3*z*t^3").unwrap();
        assert_eq!(s_reduce_regular(&r.field, &ctx, &start, &g, &basis), g);
    }

    #[test]
    fn rewrite_cmp_rat_example_two() {
        // g6 is outranked by g5 because y*z^3*t^2 > y^2*t^4
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - 2*t^2", "x*y + t^2", "x^2*z + 3*x*t^2 - 2*y*t^2"]);
        let ctx = ModuleOrderContext::new(OrderKind::Pot, &inputs);
        let g5 = LabeledPoly {
            sig: Signature {
                mono: mono(&r, "y"),
                index: 2,
            },
            poly: parse_poly(&r, "y^2*t^2 + 4*x*z*t^2 + 5*t^4").unwrap(),
            ordinal: 4,
        };
        let g6 = LabeledPoly {
            sig: Signature {
                mono: mono(&r, "t^2"),
                index: 2,
            },
            poly: parse_poly(&r, "z^3*t^2 + 6*y*t^4 + z*t^4").unwrap(),
            ordinal: 5,
        };
        assert_eq!(rewrite_cmp(&ctx, RewriteOrder::Rat, &g6, &g5), Ordering::Less);
        // add-order: first-inserted is smaller
        assert_eq!(rewrite_cmp(&ctx, RewriteOrder::Add, &g5, &g6), Ordering::Less);
    }

    #[test]
    fn is_rewritable_basics() {
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - 2*t^2", "x*y + t^2", "x^2*z + 3*x*t^2 - 2*y*t^2"]);
        let ctx = ModuleOrderContext::new(OrderKind::Pot, &inputs);
        let basis = vec![
            LabeledPoly {
                sig: Signature {
                    mono: mono(&r, "y"),
                    index: 2,
                },
                poly: parse_poly(&r, "y^2*t^2 + 4*x*z*t^2 + 5*t^4").unwrap(),
                ordinal: 0,
            },
            LabeledPoly {
                sig: Signature {
                    mono: mono(&r, "t^2"),
                    index: 2,
                },
                poly: parse_poly(&r, "z^3*t^2 + 6*y*t^4 + z*t^4").unwrap(),
                ordinal: 1,
            },
        ];
        let h = SyzygySigSet::new();
        // y*g6 is rewritable w.r.t. G: the canonical rewriter is t^2*g5
        let (hit, rewriter) = is_rewritable(
            &ctx,
            RewriteOrder::Rat,
            &basis,
            &h,
            RewriteScope::Both,
            &mono(&r, "y"),
            1,
        );
        assert!(hit);
        assert_eq!(rewriter, Some((mono(&r, "t^2"), 0)));
        // a fresh element at its own signature is its own canonical rewriter
        let (hit, _) = is_rewritable(
            &ctx,
            RewriteOrder::Rat,
            &basis,
            &h,
            RewriteScope::Both,
            &Monomial::one(4),
            0,
        );
        assert!(!hit);
        // H-divisibility alone suffices
        let mut h = SyzygySigSet::new();
        h.insert_minimal(Signature {
            mono: mono(&r, "y"),
            index: 2,
        });
        let (hit, rw) = is_rewritable(
            &ctx,
            RewriteOrder::Rat,
            &basis,
            &h,
            RewriteScope::HOnly,
            &mono(&r, "y*t^2"),
            0,
        );
        assert!(hit);
        assert!(rw.is_none());
    }

    #[test]
    fn single_generator_run() {
        let r = f7_ring();
        let inputs = polys(&r, &["3*y*z - z^2"]);
        let run = rb_run(&r, &inputs, RbConfig::default()).unwrap();
        assert_eq!(run.basis.len(), 1);
        // stored monic
        assert_eq!(run.basis[0].poly, parse_poly(&r, "y*z + 2*z^2").unwrap());
        assert!(run.syzygies.is_empty());
        assert_eq!(run.stats.zero_reductions, 0);
    }

    #[test]
    fn duplicate_input_reduces_to_zero_at_seed() {
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - z^2", "y*z - z^2"]);
        let run = rb_run(&r, &inputs, RbConfig::default()).unwrap();
        assert_eq!(run.basis.len(), 1);
        assert_eq!(run.stats.zero_reductions, 1);
        assert_eq!(run.syzygies.len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        let r = f7_ring();
        assert!(matches!(
            rb_run(&r, &[], RbConfig::default()),
            Err(RbError::EmptyInput)
        ));
        let zero = vec![Polynomial::zero()];
        assert!(matches!(
            rb_run(&r, &zero, RbConfig::default()),
            Err(RbError::ZeroGenerator(0))
        ));
    }

    #[test]
    fn update_syz_records_index_jump() {
        // first index-2 insertion on the the first worked example system adds yz*e2
        let r = f7_ring();
        let inputs = polys(&r, &["y*z - z^2", "y^2 - x*t", "x*y - x*z", "x^2 - x*y"]);
        let cfg = RbConfig {
            order: OrderKind::Pot,
            update_syz: true,
            ..RbConfig::default()
        };
        let run = rb_run(&r, &inputs, cfg).unwrap();
        // yz*e2 must have been recorded (possibly later absorbed by a divisor
        // with the same index; on this input it survives)
        assert!(run.syzygies.divides(&Signature {
            mono: mono(&r, "y*z"),
            index: 1
        }));
    }
}
