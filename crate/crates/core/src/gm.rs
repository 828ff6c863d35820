//! Classic Buchberger loop with the Gebauer-Moeller pair update: the
//! baseline the signature engine is measured against.

use std::cmp::Ordering;

use crate::event::{Decision, Event};
use crate::monomial::{cmp_grevlex, Monomial};
use crate::polynomial::{normal_form, spoly, Polynomial};
use crate::rb::RbError;
use crate::ring::Ring;
use crate::stats::RunStats;

/// A scheduled classic critical pair between basis ordinals i < j.
#[derive(Debug, Clone)]
pub struct ClassicPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub seq: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GmConfig {
    /// Reduce S-polynomials only at the top instead of fully. Tails of new
    /// basis elements then stay raw, which can shift which later
    /// S-polynomials reach zero.
    pub top_only_reduction: bool,
}

#[derive(Debug)]
pub struct GmRun {
    pub basis: Vec<Polynomial>,
    pub stats: RunStats,
    pub events: Vec<Event>,
}

/// Coprime lead monomials: the S-polynomial reduces to zero on its own.
pub fn product_criterion(f: &Polynomial, g: &Polynomial) -> bool {
    match (f.lead_mono(), g.lead_mono()) {
        (Some(a), Some(b)) => a.coprime(b),
        _ => false,
    }
}

struct Gm {
    basis: Vec<Polynomial>,
    pairs: Vec<ClassicPair>,
    stats: RunStats,
    events: Vec<Event>,
    next_id: u64,
}

impl Gm {
    fn fresh_id(&mut self) -> u64 {
        let id = self.next_id;
        self.next_id += 1;
        id
    }

    fn log(&mut self, gens: (usize, usize), lcm: Monomial, decision: Decision, born_zero: bool) {
        let pair_id = self.fresh_id();
        self.events.push(Event {
            pair_id,
            gens: Some(gens),
            sig: None,
            lcm: Some(lcm),
            decision,
            stage: 0,
            rewriter: None,
            born_zero,
        });
    }

    /// The Gebauer-Moeller update for a new element `h` (not yet in basis):
    /// build candidates (g, h) for all current g, drop a candidate whose lcm
    /// is properly divisible by another candidate's lcm (M), keep one
    /// representative per equal lcm preferring a coprime pair (F), drop old
    /// pairs whose lcm is properly divisible through lt(h) (B), and last
    /// drop new candidates with coprime leads (PC).
    fn update(&mut self, h: &Polynomial) {
        let t = self.basis.len();
        let lt_h = h.lead_mono().unwrap().clone();
        let cand_lcms: Vec<Monomial> = self
            .basis
            .iter()
            .map(|g| g.lead_mono().unwrap().lcm(&lt_h))
            .collect();

        // M: proper divisibility among candidate lcms
        let mut keep = vec![true; t];
        for i in 0..t {
            for j in 0..t {
                if i != j
                    && cand_lcms[j].divides(&cand_lcms[i])
                    && cand_lcms[j] != cand_lcms[i]
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        for i in 0..t {
            if !keep[i] {
                self.stats.gm_discarded_m += 1;
                self.log((i, t), cand_lcms[i].clone(), Decision::GmM, false);
            }
        }

        // F: one representative per equal-lcm class; a coprime representative
        // lets the product criterion clear the whole class afterwards
        for i in 0..t {
            if !keep[i] {
                continue;
            }
            let mut class: Vec<usize> = (0..t)
                .filter(|&j| keep[j] && cand_lcms[j] == cand_lcms[i])
                .collect();
            if class.len() > 1 {
                let rep = class
                    .iter()
                    .copied()
                    .find(|&j| product_criterion(&self.basis[j], h))
                    .unwrap_or(class[0]);
                class.retain(|&j| j != rep);
                for j in class {
                    keep[j] = false;
                    self.stats.gm_discarded_f += 1;
                    self.log((j, t), cand_lcms[j].clone(), Decision::GmF, false);
                }
            }
        }

        // B: old pairs superseded through the newcomer
        let mut retained = Vec::with_capacity(self.pairs.len());
        for pair in std::mem::take(&mut self.pairs) {
            let li = self.basis[pair.i].lead_mono().unwrap().lcm(&lt_h);
            let lj = self.basis[pair.j].lead_mono().unwrap().lcm(&lt_h);
            if lt_h.divides(&pair.lcm) && li != pair.lcm && lj != pair.lcm {
                self.stats.gm_discarded_b += 1;
                self.log((pair.i, pair.j), pair.lcm.clone(), Decision::GmB, false);
            } else {
                retained.push(pair);
            }
        }
        self.pairs = retained;

        // PC last, to clear as much as possible
        for i in 0..t {
            if !keep[i] {
                continue;
            }
            if product_criterion(&self.basis[i], h) {
                self.stats.gm_discarded_pc += 1;
                self.log((i, t), cand_lcms[i].clone(), Decision::GmPc, false);
                continue;
            }
            let seq = self.fresh_id();
            self.stats.spairs_generated += 1;
            self.pairs.push(ClassicPair {
                i,
                j: t,
                lcm: cand_lcms[i].clone(),
                seq,
            });
        }
    }

    /// Normal strategy: smallest lcm degree, then grevlex-smallest lcm, then
    /// generation order.
    fn pop_pair(&mut self) -> Option<ClassicPair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let a = &self.pairs[k];
            let b = &self.pairs[best];
            let ord = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| cmp_grevlex(&a.lcm, &b.lcm))
                .then_with(|| a.seq.cmp(&b.seq));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria.
pub fn buchberger_run(ring: &Ring, inputs: &[Polynomial], config: GmConfig) -> Result<GmRun, RbError> {
    if inputs.is_empty() {
        return Err(RbError::EmptyInput);
    }
    if let Some(i) = inputs.iter().position(|f| f.is_zero()) {
        return Err(RbError::ZeroGenerator(i));
    }
    let field = &ring.field;
    let mut gm = Gm {
        basis: Vec::new(),
        pairs: Vec::new(),
        stats: RunStats::default(),
        events: Vec::new(),
        next_id: 0,
    };
    for f in inputs {
        let monic = f.monic(field);
        gm.update(&monic);
        gm.basis.push(monic);
    }
    while let Some(pair) = gm.pop_pair() {
        let spol = spoly(field, &gm.basis[pair.i], &gm.basis[pair.j]).unwrap();
        if spol.is_zero() {
            gm.stats.spairs_born_zero += 1;
            gm.log((pair.i, pair.j), pair.lcm.clone(), Decision::Zero, true);
            continue;
        }
        let nf = normal_form(field, &spol, &gm.basis, config.top_only_reduction);
        if nf.is_zero() {
            gm.stats.zero_reductions += 1;
            gm.log((pair.i, pair.j), pair.lcm.clone(), Decision::Zero, false);
        } else {
            gm.log((pair.i, pair.j), pair.lcm.clone(), Decision::Reduced, false);
            let monic = nf.monic(field);
            gm.update(&monic);
            gm.basis.push(monic);
        }
    }
    Ok(GmRun {
        basis: gm.basis,
        stats: gm.stats,
        events: gm.events,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
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

    #[test]
    fn product_criterion_examples() {
        let r = f7_ring();
        let f = parse_poly(&r, "z^3 - x*z*t").unwrap();
        let g = parse_poly(&r, "x^2 - x*y").unwrap();
        assert!(product_criterion(&f, &g));
        let f = parse_poly(&r, "y*z - z^2").unwrap();
        let g = parse_poly(&r, "y^2 - x*t").unwrap();
        assert!(!product_criterion(&f, &g));
        // f = g shares its own lead
        assert!(!product_criterion(&f, &f));
    }

    #[test]
    fn update_discards_coprime_candidates() {
        // leads {yz, y^2} plus newcomer with lead x: both candidates survive
        // M and F, then the product criterion clears them
        let r = f7_ring();
        let mut gm = Gm {
            basis: polys(&r, &["y*z - t^2", "y^2 - t^2"]),
            pairs: vec![ClassicPair {
                i: 0,
                j: 1,
                lcm: parse_poly(&r, "y^2*z").unwrap().lead_mono().unwrap().clone(),
                seq: 0,
            }],
            stats: RunStats::default(),
            events: Vec::new(),
            next_id: 1,
        };
        let h = parse_poly(&r, "x - t").unwrap();
        gm.update(&h);
        assert!(gm.pairs.iter().all(|p| p.j != 2), "no pair with the newcomer");
        assert_eq!(gm.stats.gm_discarded_pc, 2);
    }

    #[test]
    fn update_on_empty_basis_makes_no_pairs() {
        let r = f7_ring();
        let mut gm = Gm {
            basis: Vec::new(),
            pairs: Vec::new(),
            stats: RunStats::default(),
            events: Vec::new(),
            next_id: 0,
        };
        gm.update(&parse_poly(&r, "x^2 - y").unwrap());
        assert!(gm.pairs.is_empty());
    }

    #[test]
    fn single_generator_runs_clean() {
        let r = f7_ring();
        let run = buchberger_run(&r, &polys(&r, &["x^2 - y*t"]), GmConfig::default()).unwrap();
        assert_eq!(run.basis.len(), 1);
        assert_eq!(run.stats.zero_reductions, 0);
        assert_eq!(run.stats.spairs_generated, 0);
    }
}
