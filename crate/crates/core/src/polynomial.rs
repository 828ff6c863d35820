//! Polynomials as strictly ordered term lists; reduction and S-polynomials.

use std::cmp::Ordering;

use crate::field::{FieldScalar, PrimeField};
use crate::monomial::{cmp_grevlex, Monomial};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldScalar,
    pub mono: Monomial,
}

/// Terms strictly decreasing under grevlex, no zero coefficients; an empty
/// term list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroInput;

impl std::fmt::Display for ZeroInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "operation requires nonzero polynomials")
    }
}

impl std::error::Error for ZeroInput {}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Builds from arbitrary (coeff, mono) pairs, merging and dropping zeros.
    pub fn from_terms(field: &PrimeField, terms: Vec<Term>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| cmp_grevlex(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        out.pop();
                    }
                }
                _ => {
                    if t.coeff != 0 {
                        out.push(t);
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_mono(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lead_coeff(&self) -> Option<FieldScalar> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    /// Merge-add of two canonical term lists.
    pub fn add(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grevlex(&self.terms[i].mono, &other.terms[j].mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].coeff, other.terms[j].coeff);
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: self.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn scale(&self, field: &PrimeField, k: FieldScalar) -> Polynomial {
        if k == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(t.coeff, k),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplication by a single term keeps the ordering intact.
    pub fn mul_term(&self, field: &PrimeField, t: &Term) -> Polynomial {
        if t.coeff == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|s| Term {
                    coeff: field.mul(s.coeff, t.coeff),
                    mono: s.mono.mul(&t.mono),
                })
                .collect(),
        }
    }

    /// self - t * g, the basic reduction step combination.
    pub fn sub_mul_term(&self, field: &PrimeField, t: &Term, g: &Polynomial) -> Polynomial {
        let neg = Term {
            coeff: field.neg(t.coeff),
            mono: t.mono.clone(),
        };
        self.add(field, &g.mul_term(field, &neg))
    }

    pub fn monic(&self, field: &PrimeField) -> Polynomial {
        match self.lead_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(field, field.inv(c).expect("nonzero lead")),
        }
    }

    pub fn render(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if t.mono.is_one() {
                out.push_str(&t.coeff.to_string());
            } else if t.coeff == 1 {
                out.push_str(&t.mono.render(&ring.vars));
            } else {
                out.push_str(&format!("{}*{}", t.coeff, t.mono.render(&ring.vars)));
            }
        }
        out
    }
}

/// S-polynomial: (lcm/lt f)·f − (lcm/lt g)·g with the monic lcm of the leads.
pub fn spoly(field: &PrimeField, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, ZeroInput> {
    let (ltf, ltg) = match (f.lead_term(), g.lead_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ZeroInput),
    };
    let lambda = ltf.mono.lcm(&ltg.mono);
    let tf = Term {
        coeff: field.inv(ltf.coeff).expect("nonzero lead"),
        mono: lambda.div(&ltf.mono).expect("lcm divisible by lead"),
    };
    let tg = Term {
        coeff: field.inv(ltg.coeff).expect("nonzero lead"),
        mono: lambda.div(&ltg.mono).expect("lcm divisible by lead"),
    };
    Ok(f.mul_term(field, &tf).sub_mul_term(field, &tg, g))
}

/// One reduction step: eliminates the term of `f` at `term_idx` using `g`.
///
/// Pre: lt(g) divides that term's monomial.
pub fn reduce_step(field: &PrimeField, f: &Polynomial, term_idx: usize, g: &Polynomial) -> Polynomial {
    let t = &f.terms()[term_idx];
    let ltg = g.lead_term().expect("reducer must be nonzero");
    let b = Term {
        coeff: field
            .div(t.coeff, ltg.coeff)
            .expect("reducer lead coefficient nonzero"),
        mono: t.mono.div(&ltg.mono).expect("lead must divide target term"),
    };
    f.sub_mul_term(field, &b, g)
}

/// Picks the reducer for `target` among `basis`: grevlex-smallest eligible
/// lead monomial, first-inserted on ties. Returns the basis position.
fn pick_reducer(basis: &[Polynomial], target: &Monomial) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, g) in basis.iter().enumerate() {
        if let Some(lm) = g.lead_mono() {
            if lm.divides(target) {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if cmp_grevlex(lm, basis[b].lead_mono().unwrap()) == Ordering::Less {
                            best = Some(i);
                        }
                    }
                }
            }
        }
    }
    best
}

/// Full (or top-only) normal form of `f` w.r.t. `basis`.
pub fn normal_form(
    field: &PrimeField,
    f: &Polynomial,
    basis: &[Polynomial],
    top_only: bool,
) -> Polynomial {
    normal_form_with_trace(field, f, basis, top_only).0
}

/// Normal form together with the quotient record: returns `(nf, quotients)`
/// with `f = nf + sum b_i * basis[idx_i]` over the recorded `(b_i, idx_i)`.
pub fn normal_form_with_trace(
    field: &PrimeField,
    f: &Polynomial,
    basis: &[Polynomial],
    top_only: bool,
) -> (Polynomial, Vec<(Term, usize)>) {
    let mut cur = f.clone();
    let mut trace = Vec::new();
    let mut i = 0;
    while i < cur.terms().len() {
        match pick_reducer(basis, &cur.terms()[i].mono) {
            Some(gi) => {
                let t = &cur.terms()[i];
                let ltg = basis[gi].lead_term().unwrap();
                let b = Term {
                    coeff: field.div(t.coeff, ltg.coeff).unwrap(),
                    mono: t.mono.div(&ltg.mono).unwrap(),
                };
                cur = cur.sub_mul_term(field, &b, &basis[gi]);
                trace.push((b, gi));
                // terms above position i are untouched by this step
            }
            None => {
                if top_only {
                    break;
                }
                i += 1;
            }
        }
        if top_only && i > 0 {
            break;
        }
    }
    (cur, trace)
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

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_poly(ring, s).unwrap()
    }

    #[test]
    fn padd_cancels() {
        let r = f7_ring();
        let f = p(&r, "y*z - z^2");
        let g = p(&r, "z^2");
        assert_eq!(f.add(&r.field, &g), p(&r, "y*z"));
    }

    #[test]
    fn pscale_identity_and_mul_term() {
        let r = f7_ring();
        let f = p(&r, "y^2 - x*t");
        assert_eq!(f.scale(&r.field, 1), f);
        let zt = Term {
            coeff: 1,
            mono: Monomial::new(vec![0, 0, 1, 0]),
        };
        assert_eq!(f.mul_term(&r.field, &zt), p(&r, "y^2*z - x*z*t"));
    }

    #[test]
    fn spoly_example_one_pair() {
        let r = f7_ring();
        // z*(y^2 - x*t) - y*(y*z - z^2) = y*z^2 - x*z*t
        let s = spoly(&r.field, &p(&r, "y^2 - x*t"), &p(&r, "y*z - z^2")).unwrap();
        assert_eq!(s, p(&r, "y*z^2 - x*z*t"));
    }

    #[test]
    fn spoly_of_equal_inputs_is_zero() {
        let r = f7_ring();
        let f = p(&r, "y^2 - x*t");
        assert!(spoly(&r.field, &f, &f).unwrap().is_zero());
        assert!(spoly(&r.field, &f, &Polynomial::zero()).is_err());
    }

    #[test]
    fn spoly_example_two_pair() {
        let r = f7_ring();
        // lcm(xy, yz) = xyz; z*(x*y + t^2) - x*(y*z - 2*t^2) = z*t^2 + 2*x*t^2
        let s = spoly(&r.field, &p(&r, "x*y + t^2"), &p(&r, "y*z - 2*t^2")).unwrap();
        assert_eq!(s, p(&r, "2*x*t^2 + z*t^2"));
        // lead is x*t^2 after normalization
        assert_eq!(
            s.monic(&r.field).lead_mono().unwrap(),
            &Monomial::new(vec![1, 0, 0, 2])
        );
    }

    #[test]
    fn spoly_antisymmetric_up_to_scalar() {
        let r = f7_ring();
        let cases = [
            ("y^2 - x*t", "y*z - z^2"),
            ("x*y + t^2", "y*z - 2*t^2"),
            ("x^2*z + 3*x*t^2 - 2*y*t^2", "x*y - x*z"),
        ];
        for (a, b) in cases {
            let fg = spoly(&r.field, &p(&r, a), &p(&r, b)).unwrap();
            let gf = spoly(&r.field, &p(&r, b), &p(&r, a)).unwrap();
            assert_eq!(fg, gf.neg(&r.field));
        }
    }

    #[test]
    fn reduce_step_eliminates_target() {
        let r = f7_ring();
        let f = p(&r, "x^2 - x*y");
        let g = p(&r, "x*y - x*z");
        // reduce the tail term -x*y
        let out = reduce_step(&r.field, &f, 1, &g);
        assert_eq!(out, p(&r, "x^2 - x*z"));
    }

    #[test]
    fn normal_form_example_one_rows() {
        let r = f7_ring();
        let g1 = p(&r, "y*z - z^2");
        assert_eq!(
            normal_form(&r.field, &p(&r, "y*z^2 - x*z*t"), std::slice::from_ref(&g1), false),
            p(&r, "z^3 - x*z*t")
        );
        assert_eq!(
            normal_form(&r.field, &Polynomial::zero(), &[g1], false),
            Polynomial::zero()
        );
        let g3 = p(&r, "x*y - x*z");
        assert_eq!(
            normal_form(&r.field, &p(&r, "x^2 - x*y"), &[g3], false),
            p(&r, "x^2 - x*z")
        );
    }

    #[test]
    fn normal_form_trace_recombines() {
        let r = f7_ring();
        let basis = [
            p(&r, "y*z - z^2"),
            p(&r, "y^2 - x*t"),
            p(&r, "x*y - x*z"),
        ];
        let f = p(&r, "x*y^2*z + 3*y*z^2 - t^4 + 2*x*y");
        let (nf, trace) = normal_form_with_trace(&r.field, &f, &basis, false);
        // f - nf = sum b_i * g_i
        let mut acc = nf.clone();
        for (b, gi) in &trace {
            acc = acc.add(&r.field, &basis[*gi].mul_term(&r.field, b));
        }
        assert_eq!(acc, f);
        // nf has no term divisible by any basis lead
        for t in nf.terms() {
            for g in &basis {
                assert!(!g.lead_mono().unwrap().divides(&t.mono));
            }
        }
    }

    #[test]
    fn top_only_stops_at_irreducible_lead() {
        let r = f7_ring();
        let basis = [p(&r, "y*z - z^2")];
        // lead x^2 is irreducible; the reducible tail y*z stays under top-only
        let f = p(&r, "x^2 + y*z");
        assert_eq!(normal_form(&r.field, &f, &basis, true), f);
        // reducible lead keeps reducing until the lead is irreducible:
        // y^2*z -> y*z^2 -> z^3
        let g = p(&r, "y^2*z + x*t");
        let nf = normal_form(&r.field, &g, &basis, true);
        assert_eq!(nf, p(&r, "z^3 + x*t"));
    }

    #[test]
    fn reducer_choice_is_grevlex_smallest_lead() {
        let r = f7_ring();
        // both leads divide x*y*z; y*z < x*y so g2 must be chosen
        let g1 = p(&r, "x*y + t^2");
        let g2 = p(&r, "y*z + t^2");
        let f = p(&r, "x*y*z");
        let (_, trace) = normal_form_with_trace(&r.field, &f, &[g1, g2], false);
        assert_eq!(trace[0].1, 1);
    }
}
