//! Append-only decision log shared by both engines.
//!
//! Serialized line format:
//! `pair=<id> sig=<sig> decision=<reduced|zero|rewritten-H|rewritten-G|pc-removed|singular|B|M|F|PC> stage=<n>`
//!
//! For the signature engine `sig` is the pair signature rendered as
//! `y*z*e_2`; for the classic engine it is the pair lcm monomial. Stage is 0
//! when not applicable, otherwise the stage of the check that fired
//! (1 = syzygy set H, 2 = product criterion, 3 = basis G).

use serde::Serialize;

use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Decision {
    Reduced,
    Zero,
    RewrittenH,
    RewrittenG,
    PcRemoved,
    Singular,
    GmB,
    GmM,
    GmF,
    GmPc,
}

impl Decision {
    pub fn label(&self) -> &'static str {
        match self {
            Decision::Reduced => "reduced",
            Decision::Zero => "zero",
            Decision::RewrittenH => "rewritten-H",
            Decision::RewrittenG => "rewritten-G",
            Decision::PcRemoved => "pc-removed",
            Decision::Singular => "singular",
            Decision::GmB => "B",
            Decision::GmM => "M",
            Decision::GmF => "F",
            Decision::GmPc => "PC",
        }
    }

    /// Did the engine run a regular s-reduction (or classic reduction) on
    /// this pair? Pairs whose S-polynomial is identically zero count as
    /// processed, not removed.
    pub fn was_reduced(&self) -> bool {
        matches!(self, Decision::Reduced | Decision::Zero)
    }
}

#[derive(Debug, Clone)]
pub struct Event {
    pub pair_id: u64,
    /// Generating basis ordinals (absent for seed elements).
    pub gens: Option<(usize, usize)>,
    /// Pair signature (signature engine only).
    pub sig: Option<Signature>,
    pub lcm: Option<Monomial>,
    pub decision: Decision,
    pub stage: u8,
    /// Canonical rewriter `(multiplier, basis ordinal)` for rewritten-G.
    pub rewriter: Option<(Monomial, usize)>,
    /// S-polynomial was identically zero (no reduction step happened).
    pub born_zero: bool,
}

impl Event {
    pub fn render_line(&self, ring: &Ring) -> String {
        let sig = match (&self.sig, &self.lcm) {
            (Some(s), _) => s.render(&ring.vars),
            (None, Some(l)) => l.render(&ring.vars),
            (None, None) => "-".to_string(),
        };
        format!(
            "pair={} sig={} decision={} stage={}",
            self.pair_id,
            sig,
            self.decision.label(),
            self.stage
        )
    }
}

pub fn render_log(ring: &Ring, events: &[Event]) -> String {
    let mut out = String::new();
    for e in events {
        out.push_str(&e.render_line(ring));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn line_format() {
        let ring = Ring::new(
            PrimeField::new(7).unwrap(),
            ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect(),
        );
        let e = Event {
            pair_id: 4,
            gens: Some((0, 2)),
            sig: Some(Signature {
                mono: Monomial::new(vec![0, 1, 1, 0]),
                index: 1,
            }),
            lcm: None,
            decision: Decision::RewrittenH,
            stage: 1,
            rewriter: None,
            born_zero: false,
        };
        assert_eq!(
            e.render_line(&ring),
            "pair=4 sig=y*z*e_2 decision=rewritten-H stage=1"
        );
    }
}
