//! Independent oracles: the brute-force Buchberger check, reduced bases,
//! cross-engine equality. None of this touches the engines' criteria code.

use crate::monomial::cmp_grevlex;
use crate::polynomial::{normal_form, spoly, Polynomial};
use crate::ring::Ring;

/// Brute force: every S-polynomial of `basis` must reduce to zero w.r.t.
/// `basis`. No criteria of any kind.
pub fn verify_gb(ring: &Ring, basis: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|f| !f.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in (i + 1)..nonzero.len() {
            let s = spoly(&ring.field, nonzero[i], nonzero[j]).unwrap();
            if !normal_form(&ring.field, &s, basis, false).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Minimal then tail-reduced, monic, sorted by decreasing lead. For a
/// Groebner basis input this is the unique reduced basis of the ideal.
pub fn reduce_basis(ring: &Ring, basis: &[Polynomial]) -> Vec<Polynomial> {
    let field = &ring.field;
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut candidates: Vec<Polynomial> = basis
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.monic(field))
        .collect();
    // smaller leads first so a kept element is never divisible by a later one
    candidates.sort_by(|a, b| cmp_grevlex(a.lead_mono().unwrap(), b.lead_mono().unwrap()));
    for f in candidates {
        let lm = f.lead_mono().unwrap();
        if !kept
            .iter()
            .any(|g| g.lead_mono().unwrap().divides(lm))
        {
            kept.push(f);
        }
    }
    // tail reduction against the other kept elements
    let reduced: Vec<Polynomial> = (0..kept.len())
        .map(|i| {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            normal_form(field, &kept[i], &others, false).monic(field)
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| cmp_grevlex(b.lead_mono().unwrap(), a.lead_mono().unwrap()));
    reduced
}

/// Equality of the ideals' reduced bases.
pub fn bases_equal(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    reduce_basis(ring, a) == reduce_basis(ring, b)
}

/// Checks a claimed Groebner basis against the input system without running
/// any engine: the basis must pass the Buchberger criterion and must reduce
/// every input generator to zero (so the basis ideal contains the input
/// ideal). The reverse inclusion needs a computed basis; see the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimedBasisReport {
    pub buchberger_ok: bool,
    pub inputs_reduce_to_zero: bool,
}

pub fn check_claimed_basis(
    ring: &Ring,
    inputs: &[Polynomial],
    basis: &[Polynomial],
) -> ClaimedBasisReport {
    let buchberger_ok = verify_gb(ring, basis);
    let inputs_reduce_to_zero = inputs
        .iter()
        .all(|f| normal_form(&ring.field, f, basis, false).is_zero());
    ClaimedBasisReport {
        buchberger_ok,
        inputs_reduce_to_zero,
    }
}
