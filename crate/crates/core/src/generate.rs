//! Seeded benchmark families: binomial-n-d, cyclic-n, katsura-n, plus
//! homogenization.

use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Term};
use crate::problem::{ProblemSpec, DEFAULT_CHARACTERISTIC};
use crate::ring::Ring;

/// splitmix64; fixed algorithm so seeds reproduce across platforms.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

fn var_names(prefix: &str, from: usize, to_inclusive: usize) -> Vec<String> {
    (from..=to_inclusive).map(|i| format!("{prefix}{i}")).collect()
}

/// `count` homogeneous binomials x^a - x^b of degree `d` in `n` variables,
/// pairwise distinct, coefficients 1 and -1.
pub fn gen_binomial(n: usize, d: u32, count: usize, seed: u64) -> ProblemSpec {
    assert!(n >= 2 && d >= 1 && count >= 1);
    let vars = var_names("x", 1, n);
    let mut rng = SplitMix64::new(seed);
    let sample_mono = |rng: &mut SplitMix64| {
        let mut exps = vec![0u32; n];
        for _ in 0..d {
            exps[rng.below(n as u64) as usize] += 1;
        }
        Monomial::new(exps)
    };
    let render = |m: &Monomial| m.render(&vars);
    let mut gens: Vec<String> = Vec::new();
    let mut seen: Vec<(Monomial, Monomial)> = Vec::new();
    while gens.len() < count {
        let mut a = sample_mono(&mut rng);
        let mut b = sample_mono(&mut rng);
        if a == b {
            continue;
        }
        if crate::monomial::cmp_grevlex(&a, &b) == std::cmp::Ordering::Less {
            std::mem::swap(&mut a, &mut b);
        }
        if seen.iter().any(|(x, y)| (x, y) == (&a, &b)) {
            continue;
        }
        gens.push(format!("{} - {}", render(&a), render(&b)));
        seen.push((a, b));
    }
    ProblemSpec::from_parts(DEFAULT_CHARACTERISTIC, vars, gens).expect("generated system parses")
}

fn poly_text(ring: &Ring, p: &Polynomial) -> String {
    p.render(ring)
}

/// The cyclic-n system: the elementary "cyclic" sums of degree 1..n-1 and
/// the full product minus one.
pub fn gen_cyclic(n: usize, homogenize: bool) -> ProblemSpec {
    assert!(n >= 2);
    let vars = var_names("x", 1, n);
    let ring = Ring::new(
        crate::field::PrimeField::new(DEFAULT_CHARACTERISTIC).unwrap(),
        vars.clone(),
    );
    let field = &ring.field;
    let mut gens = Vec::new();
    for k in 1..n {
        let mut terms = Vec::new();
        for i in 0..n {
            let mut exps = vec![0u32; n];
            for j in 0..k {
                exps[(i + j) % n] += 1;
            }
            terms.push(Term {
                coeff: 1,
                mono: Monomial::new(exps),
            });
        }
        gens.push(Polynomial::from_terms(field, terms));
    }
    let mut product = vec![Term {
        coeff: 1,
        mono: Monomial::new(vec![1; n]),
    }];
    product.push(Term {
        coeff: field.neg(1),
        mono: Monomial::one(n),
    });
    gens.push(Polynomial::from_terms(field, product));
    finish(ring, gens, homogenize)
}

/// The katsura-n system: n+1 variables u0..un, the linear normalization
/// u0 + 2*u1 + ... + 2*un - 1, and the convolution equations
/// sum_l u_|l| * u_|m-l| - u_m for m = 0..n-1.
pub fn gen_katsura(n: usize, homogenize: bool) -> ProblemSpec {
    assert!(n >= 1);
    let nv = n + 1;
    let vars = var_names("u", 0, n);
    let ring = Ring::new(
        crate::field::PrimeField::new(DEFAULT_CHARACTERISTIC).unwrap(),
        vars.clone(),
    );
    let field = &ring.field;
    let mut gens = Vec::new();
    let mut linear = vec![Term {
        coeff: 1,
        mono: Monomial::var(0, nv),
    }];
    for i in 1..=n {
        linear.push(Term {
            coeff: 2,
            mono: Monomial::var(i, nv),
        });
    }
    linear.push(Term {
        coeff: field.neg(1),
        mono: Monomial::one(nv),
    });
    gens.push(Polynomial::from_terms(field, linear));
    for m in 0..n {
        let mut terms = Vec::new();
        for l in -(n as i64)..=(n as i64) {
            let a = l.unsigned_abs() as usize;
            let b = (m as i64 - l).unsigned_abs() as usize;
            if a > n || b > n {
                continue;
            }
            let mut exps = vec![0u32; nv];
            exps[a] += 1;
            exps[b] += 1;
            terms.push(Term {
                coeff: 1,
                mono: Monomial::new(exps),
            });
        }
        terms.push(Term {
            coeff: field.neg(1),
            mono: Monomial::var(m, nv),
        });
        gens.push(Polynomial::from_terms(field, terms));
    }
    finish(ring, gens, homogenize)
}

/// Homogenizes each generator to its own top degree with a fresh last
/// variable.
pub fn homogenize(spec: &ProblemSpec) -> ProblemSpec {
    let ring = spec.ring();
    let mut vars = spec.vars.clone();
    vars.push("h".to_string());
    let hring = Ring::new(ring.field.clone(), vars.clone());
    let n = ring.nvars();
    let texts: Vec<String> = spec
        .generators
        .iter()
        .map(|g| {
            let d = g.degree().unwrap();
            let terms = g
                .terms()
                .iter()
                .map(|t| {
                    let mut exps = t.mono.exps().to_vec();
                    exps.push(d - t.mono.degree());
                    debug_assert_eq!(exps.len(), n + 1);
                    Term {
                        coeff: t.coeff,
                        mono: Monomial::new(exps),
                    }
                })
                .collect();
            poly_text(&hring, &Polynomial::from_terms(&hring.field, terms))
        })
        .collect();
    ProblemSpec::from_parts(spec.characteristic, vars, texts).expect("homogenization parses")
}

fn finish(ring: Ring, gens: Vec<Polynomial>, want_homogeneous: bool) -> ProblemSpec {
    let texts: Vec<String> = gens.iter().map(|g| poly_text(&ring, g)).collect();
    let spec = ProblemSpec::from_parts(
        ring.field.modulus(),
        ring.vars.clone(),
        texts,
    )
    .expect("generated system parses");
    if want_homogeneous {
        homogenize(&spec)
    } else {
        spec
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_is_seed_deterministic_and_homogeneous() {
        let a = gen_binomial(6, 3, 6, 42);
        let b = gen_binomial(6, 3, 6, 42);
        assert_eq!(a, b);
        assert!(a.homogeneous);
        assert_eq!(a.generators.len(), 6);
        for g in &a.generators {
            assert_eq!(g.terms().len(), 2);
            assert_eq!(g.degree(), Some(3));
            assert_eq!(g.terms()[0].coeff, 1);
            assert_eq!(g.terms()[1].coeff, 32002);
        }
        let c = gen_binomial(6, 3, 6, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn cyclic_shape() {
        let spec = gen_cyclic(4, false);
        assert_eq!(spec.vars.len(), 4);
        assert_eq!(spec.generators.len(), 4);
        assert!(!spec.homogeneous);
        // degrees 1, 2, 3, 4
        let degs: Vec<u32> = spec.generators.iter().map(|g| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 2, 3, 4]);
        let h = gen_cyclic(4, true);
        assert!(h.homogeneous);
        assert_eq!(h.vars.len(), 5);
    }

    #[test]
    fn katsura_shape() {
        let spec = gen_katsura(3, false);
        assert_eq!(spec.vars, ["u0", "u1", "u2", "u3"]);
        assert_eq!(spec.generators.len(), 4);
        // one linear equation, three quadratic convolutions
        assert_eq!(spec.generators[0].degree(), Some(1));
        for g in &spec.generators[1..] {
            assert_eq!(g.degree(), Some(2));
        }
        // u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 - u0 is the m = 0 equation
        let ring = spec.ring();
        let expected = crate::problem::parse_poly(
            &ring,
            "u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 - u0",
        )
        .unwrap();
        assert_eq!(spec.generators[1], expected);
    }
}
