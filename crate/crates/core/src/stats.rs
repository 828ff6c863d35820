//! Per-run counters backing the zero-reduction reports.

use serde::Serialize;

/// A "zero reduction" is a pair whose nonzero S-polynomial was reduced all
/// the way to zero. Pairs whose S-polynomial is already the zero polynomial
/// are tallied separately in `spairs_born_zero`: their syzygy signature is
/// still recorded, but no reduction work happened.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub zero_reductions: u64,
    pub spairs_born_zero: u64,
    pub spairs_generated: u64,
    pub spairs_singular: u64,
    pub spairs_rewritten_h: u64,
    pub spairs_rewritten_g: u64,
    pub spairs_removed_pc: u64,
    /// Product-criterion pairs seen at the rewritability check (PC mode only).
    pub pc_fulfilled: u64,
    /// PC pairs the syzygy-set check missed (stage 2 firings).
    pub pc_not_rewritable_h: u64,
    /// Of those, the ones the basis check would also have missed.
    pub pc_not_rewritable_h_or_g: u64,
    /// Under pot: stage-2 PC firings with mixed generator indices or a seed
    /// generator. These contradict the proven lemmas and fail the suite.
    pub pot_lemma_violations: u64,
    /// Classic engine: pairs discarded per Gebauer-Moeller rule.
    pub gm_discarded_b: u64,
    pub gm_discarded_m: u64,
    pub gm_discarded_f: u64,
    pub gm_discarded_pc: u64,
}

impl RunStats {
    pub fn check_invariants(&self) {
        assert!(
            self.spairs_removed_pc <= self.pc_not_rewritable_h,
            "pc removals exceed stage-2 firings"
        );
        assert!(self.pc_not_rewritable_h_or_g <= self.pc_not_rewritable_h);
        assert!(self.pc_not_rewritable_h <= self.pc_fulfilled);
    }
}
