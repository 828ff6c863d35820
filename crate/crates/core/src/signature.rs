//! Module monomials in R^m and the compatible module monomial orders.
//!
//! Signatures are coefficient-free: a monomial plus a generator index.
//! Indices are 0-based internally and rendered 1-based (`y*z*e_2`).

use std::cmp::Ordering;

use crate::monomial::{cmp_grevlex, Monomial};
use crate::polynomial::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub mono: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn unit(index: usize, nvars: usize) -> Self {
        Signature {
            mono: Monomial::one(nvars),
            index,
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.mono.is_one() {
            format!("e_{}", self.index + 1)
        } else {
            format!("{}*e_{}", self.mono.render(vars), self.index + 1)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Pot,
    PotRev,
    DPot,
    LtPot,
}

impl OrderKind {
    pub fn label(&self) -> &'static str {
        match self {
            OrderKind::Pot => "pot",
            OrderKind::PotRev => "pot-rev",
            OrderKind::DPot => "d-pot",
            OrderKind::LtPot => "lt-pot",
        }
    }
}

/// Frozen per-run data the module orders need: the input generators' lead
/// monomials (lt-pot) and total degrees (d-pot).
#[derive(Debug, Clone)]
pub struct ModuleOrderContext {
    pub kind: OrderKind,
    pub input_lead_monos: Vec<Monomial>,
    pub input_degrees: Vec<u32>,
}

impl ModuleOrderContext {
    /// Pre: all inputs nonzero.
    pub fn new(kind: OrderKind, inputs: &[Polynomial]) -> Self {
        ModuleOrderContext {
            kind,
            input_lead_monos: inputs
                .iter()
                .map(|f| f.lead_mono().expect("nonzero input").clone())
                .collect(),
            input_degrees: inputs
                .iter()
                .map(|f| f.degree().expect("nonzero input"))
                .collect(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.input_lead_monos.len()
    }

    fn cmp_pot(s: &Signature, t: &Signature) -> Ordering {
        s.index
            .cmp(&t.index)
            .then_with(|| cmp_grevlex(&s.mono, &t.mono))
    }

    pub fn sig_cmp(&self, s: &Signature, t: &Signature) -> Ordering {
        match self.kind {
            OrderKind::Pot => Self::cmp_pot(s, t),
            OrderKind::PotRev => t
                .index
                .cmp(&s.index)
                .then_with(|| cmp_grevlex(&s.mono, &t.mono)),
            OrderKind::DPot => {
                let ds = s.mono.degree() + self.input_degrees[s.index];
                let dt = t.mono.degree() + self.input_degrees[t.index];
                ds.cmp(&dt).then_with(|| Self::cmp_pot(s, t))
            }
            OrderKind::LtPot => {
                let ls = &self.input_lead_monos[s.index];
                let lt = &self.input_lead_monos[t.index];
                let key = match (s.mono.degree() + ls.degree()).cmp(&(t.mono.degree() + lt.degree()))
                {
                    Ordering::Equal => {
                        let mut out = Ordering::Equal;
                        for i in (0..s.mono.exps().len()).rev() {
                            let a = s.mono.exps()[i] + ls.exps()[i];
                            let b = t.mono.exps()[i] + lt.exps()[i];
                            if a != b {
                                out = b.cmp(&a);
                                break;
                            }
                        }
                        out
                    }
                    o => o,
                };
                key.then_with(|| Self::cmp_pot(s, t))
            }
        }
    }

    /// Compares `sig_mul(s, sm)` with `sig_mul(t, tm)` without building the
    /// products.
    pub fn sig_cmp_mul(
        &self,
        s: &Signature,
        sm: &Monomial,
        t: &Signature,
        tm: &Monomial,
    ) -> Ordering {
        let sd = s.mono.degree() + sm.degree();
        let td = t.mono.degree() + tm.degree();
        let sexp = |i: usize| s.mono.exps()[i] + sm.exps()[i];
        let texp = |i: usize| t.mono.exps()[i] + tm.exps()[i];
        let grevlex = || -> Ordering {
            match sd.cmp(&td) {
                Ordering::Equal => {
                    for i in (0..s.mono.exps().len()).rev() {
                        let (a, b) = (sexp(i), texp(i));
                        if a != b {
                            return b.cmp(&a);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            }
        };
        match self.kind {
            OrderKind::Pot => s.index.cmp(&t.index).then_with(grevlex),
            OrderKind::PotRev => t.index.cmp(&s.index).then_with(grevlex),
            OrderKind::DPot => {
                let ds = sd + self.input_degrees[s.index];
                let dt = td + self.input_degrees[t.index];
                ds.cmp(&dt)
                    .then_with(|| s.index.cmp(&t.index))
                    .then_with(grevlex)
            }
            OrderKind::LtPot => {
                let ls = &self.input_lead_monos[s.index];
                let lt = &self.input_lead_monos[t.index];
                let key = match (sd + ls.degree()).cmp(&(td + lt.degree())) {
                    Ordering::Equal => {
                        let mut out = Ordering::Equal;
                        for i in (0..s.mono.exps().len()).rev() {
                            let a = sexp(i) + ls.exps()[i];
                            let b = texp(i) + lt.exps()[i];
                            if a != b {
                                out = b.cmp(&a);
                                break;
                            }
                        }
                        out
                    }
                    o => o,
                };
                key.then_with(|| s.index.cmp(&t.index)).then_with(grevlex)
            }
        }
    }

    pub fn sig_max<'a>(&self, s: &'a Signature, t: &'a Signature) -> &'a Signature {
        if self.sig_cmp(s, t) == Ordering::Less {
            t
        } else {
            s
        }
    }

    /// Compares `sig_mul(s, num/den)` with `t` without building the scaled
    /// monomial; pre: `den` divides `s.mono * num` componentwise (which holds
    /// whenever `den` divides `num`, the reduction-step case).
    pub fn sig_cmp_scaled(
        &self,
        s: &Signature,
        num: &Monomial,
        den: &Monomial,
        t: &Signature,
    ) -> Ordering {
        let sd = s.mono.degree() + num.degree() - den.degree();
        let scaled_exp = |i: usize| -> i64 {
            s.mono.exps()[i] as i64 + num.exps()[i] as i64 - den.exps()[i] as i64
        };
        // grevlex of the scaled monomial against t.mono
        let grevlex_scaled = |t_mono: &Monomial| -> Ordering {
            match sd.cmp(&t_mono.degree()) {
                Ordering::Equal => {
                    for i in (0..t_mono.exps().len()).rev() {
                        let a = scaled_exp(i);
                        let b = t_mono.exps()[i] as i64;
                        if a != b {
                            return b.cmp(&a);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            }
        };
        let pot_part = |grevlex: Ordering| -> Ordering {
            s.index.cmp(&t.index).then(grevlex)
        };
        match self.kind {
            OrderKind::Pot => pot_part(grevlex_scaled(&t.mono)),
            OrderKind::PotRev => t.index.cmp(&s.index).then(grevlex_scaled(&t.mono)),
            OrderKind::DPot => {
                let ds = sd + self.input_degrees[s.index];
                let dt = t.mono.degree() + self.input_degrees[t.index];
                ds.cmp(&dt).then_with(|| pot_part(grevlex_scaled(&t.mono)))
            }
            OrderKind::LtPot => {
                let ls = &self.input_lead_monos[s.index];
                let lt = &self.input_lead_monos[t.index];
                let kd_s = sd + ls.degree();
                let kd_t = t.mono.degree() + lt.degree();
                let key = match kd_s.cmp(&kd_t) {
                    Ordering::Equal => {
                        let mut out = Ordering::Equal;
                        for i in (0..t.mono.exps().len()).rev() {
                            let a = scaled_exp(i) + ls.exps()[i] as i64;
                            let b = (t.mono.exps()[i] + lt.exps()[i]) as i64;
                            if a != b {
                                out = b.cmp(&a);
                                break;
                            }
                        }
                        out
                    }
                    o => o,
                };
                key.then_with(|| pot_part(grevlex_scaled(&t.mono)))
            }
        }
    }

    /// Lead signature of the Koszul syzygy f_i e_j - f_j e_i (0-based i < j):
    /// the larger of lt(f_i)·e_j and lt(f_j)·e_i under this order.
    pub fn koszul_signature(&self, i: usize, j: usize) -> Signature {
        assert!(i < j, "koszul_signature requires i < j");
        let a = Signature {
            mono: self.input_lead_monos[i].clone(),
            index: j,
        };
        let b = Signature {
            mono: self.input_lead_monos[j].clone(),
            index: i,
        };
        self.sig_max(&a, &b).clone()
    }
}

pub fn sig_mul(s: &Signature, a: &Monomial) -> Signature {
    Signature {
        mono: s.mono.mul(a),
        index: s.index,
    }
}

/// S | T: same index and the monomial divides.
pub fn sig_divides(s: &Signature, t: &Signature) -> bool {
    s.index == t.index && s.mono.divides(&t.mono)
}

/// The monomial quotient T / S; pre: sig_divides(S, T).
pub fn sig_div(t: &Signature, s: &Signature) -> Monomial {
    debug_assert!(sig_divides(s, t));
    t.mono.div(&s.mono).expect("sig_div requires divisibility")
}

pub fn render_sig(ring: &Ring, s: &Signature) -> String {
    s.render(&ring.vars)
}
