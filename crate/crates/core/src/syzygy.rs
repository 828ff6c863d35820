//! The set H of known syzygy lead signatures, kept divisibility-minimal.
//!
//! Lookups are the hottest check in the engine, so members are bucketed by
//! module index and guarded by a divisibility bitmask.

use crate::monomial::divmask;
use crate::signature::{sig_divides, Signature};

#[derive(Debug, Clone, Default)]
pub struct SyzygySigSet {
    buckets: Vec<Vec<(u64, Signature)>>,
    len: usize,
}

impl SyzygySigSet {
    pub fn new() -> Self {
        SyzygySigSet::default()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Signature> {
        self.buckets.iter().flatten().map(|(_, s)| s)
    }

    pub fn sigs(&self) -> Vec<&Signature> {
        self.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, t: &Signature) -> bool {
        self.buckets
            .get(t.index)
            .is_some_and(|b| b.iter().any(|(_, s)| s == t))
    }

    /// Any member dividing `t`?
    pub fn divides(&self, t: &Signature) -> bool {
        let Some(bucket) = self.buckets.get(t.index) else {
            return false;
        };
        let tmask = divmask(&t.mono);
        bucket
            .iter()
            .any(|(m, s)| m & !tmask == 0 && s.mono.divides(&t.mono))
    }

    /// Inserts keeping the set minimal: no-op when a member already divides
    /// `s`; members that `s` divides are dropped. Returns whether `s` entered.
    pub fn insert_minimal(&mut self, s: Signature) -> bool {
        if self.divides(&s) {
            return false;
        }
        if self.buckets.len() <= s.index {
            self.buckets.resize(s.index + 1, Vec::new());
        }
        let bucket = &mut self.buckets[s.index];
        let smask = divmask(&s.mono);
        let before = bucket.len();
        bucket.retain(|(m, t)| !(smask & !m == 0 && sig_divides(&s, t)));
        self.len -= before - bucket.len();
        bucket.push((smask, s));
        self.len += 1;
        debug_assert!(self.is_minimal());
        true
    }

    pub fn is_minimal(&self) -> bool {
        let all: Vec<&Signature> = self.iter().collect();
        for (i, s) in all.iter().enumerate() {
            for (j, t) in all.iter().enumerate() {
                if i != j && sig_divides(s, t) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn s(exps: &[u32], index: usize) -> Signature {
        Signature {
            mono: Monomial::new(exps.to_vec()),
            index,
        }
    }

    #[test]
    fn insert_keeps_minimality() {
        let mut h = SyzygySigSet::new();
        assert!(h.insert_minimal(s(&[0, 1, 1], 1)));
        // dominated by yz*e2
        assert!(!h.insert_minimal(s(&[0, 2, 1], 1)));
        assert_eq!(h.len(), 1);
        // different index coexists
        assert!(h.insert_minimal(s(&[0, 1, 1], 2)));
        // z*e2 absorbs yz*e2
        assert!(h.insert_minimal(s(&[0, 0, 1], 2)));
        assert_eq!(h.len(), 2);
        assert!(h.divides(&s(&[1, 1, 3], 2)));
        assert!(!h.divides(&s(&[1, 1, 0], 2)));
        assert!(h.is_minimal());
        assert!(h.contains(&s(&[0, 0, 1], 2)));
        assert!(!h.contains(&s(&[0, 0, 2], 2)));
    }

    #[test]
    fn divmask_never_rejects_a_true_divisor() {
        let mut state = 5u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as u32
        };
        for _ in 0..2000 {
            let a = Monomial::new(vec![next() % 7, next() % 7, next() % 7, next() % 7]);
            let b = Monomial::new(vec![next() % 7, next() % 7, next() % 7, next() % 7]);
            if a.divides(&b) {
                assert_eq!(divmask(&a) & !divmask(&b), 0);
            }
        }
    }
}
