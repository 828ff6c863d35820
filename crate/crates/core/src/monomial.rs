//! Exponent vectors with the graded reverse lexicographic order.

use std::cmp::Ordering;

/// A monomial as an exponent vector over a fixed variable list.
///
/// The total degree is cached and kept in sync by every operation. Variable 0
/// is the most significant under grevlex; declaration order of the ring is
/// descending significance.
#[derive(Debug, Clone)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
    mask: u64,
}

// mask and degree are derived from the exponents
impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl std::hash::Hash for Monomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InexactDivision;

impl std::fmt::Display for InexactDivision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "inexact monomial division")
    }
}

impl std::error::Error for InexactDivision {}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        let mask = mask_of(&exps);
        Monomial { exps, degree, mask }
    }

    /// The constant monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mask = mask_of(&exps);
        Monomial { exps, degree: 1, mask }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        let mask = mask_of(&exps);
        Monomial {
            exps,
            degree: self.degree + other.degree,
            mask,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact division `self / other`; errors when `other` does not divide.
    pub fn div(&self, other: &Monomial) -> Result<Monomial, InexactDivision> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        if !other.divides(self) {
            return Err(InexactDivision);
        }
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        let mask = mask_of(&exps);
        Ok(Monomial {
            exps,
            degree: self.degree - other.degree,
            mask,
        })
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders as `x^2*y*z` against the given variable names; `1` when constant.
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        parts.join("*")
    }
}

/// A coarse divisibility filter cached on every monomial: 4 threshold bits
/// per variable for the first 16 variables. If `a` divides `b` then
/// `divmask(a) & !divmask(b) == 0`, so a single u64 test rejects most
/// non-divisors before the exact exponent check.
pub fn divmask(m: &Monomial) -> u64 {
    m.mask
}

fn mask_of(exps: &[u32]) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in exps.iter().take(16).enumerate() {
        let bits = match e {
            0 => 0u64,
            1 => 0b0001,
            2 => 0b0011,
            3..=4 => 0b0111,
            _ => 0b1111,
        };
        mask |= bits << (i * 4);
    }
    mask
}

/// Graded reverse lexicographic comparison.
///
/// Total degree first; on ties the monomial whose exponent difference `a - b`
/// has its last nonzero entry negative is the greater.
pub fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {
            for i in (0..a.exps.len()).rev() {
                if a.exps[i] != b.exps[i] {
                    return b.exps[i].cmp(&a.exps[i]);
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}
