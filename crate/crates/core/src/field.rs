//! Arithmetic in the prime field Z/p for a word-sized prime p.
//!
//! Scalars are bare canonical residues in `[0, p)`; the modulus lives in a
//! shared [`PrimeField`] context so that elements carry no per-value storage.
//! Mixing scalars from different fields is a programming error caught by the
//! canonical-form debug assertions below.

use std::fmt;

/// A scalar of the prime field, stored as its canonical residue in `[0, p)`.
pub type FieldScalar = u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not a prime modulus"),
            FieldError::DivisionByZero => write!(f, "division by zero in prime field"),
        }
    }
}

impl std::error::Error for FieldError {}

/// The field context K = Z/p. All operations keep results canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds the field, validating primality of `p`.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of a (possibly negative) integer.
    pub fn from_i64(&self, n: i64) -> FieldScalar {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn from_u64(&self, n: u64) -> FieldScalar {
        n % self.p
    }

    pub fn add(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        debug_assert!(a < self.p && b < self.p, "non-canonical scalar");
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        debug_assert!(a < self.p && b < self.p, "non-canonical scalar");
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: FieldScalar) -> FieldScalar {
        debug_assert!(a < self.p, "non-canonical scalar");
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: FieldScalar, b: FieldScalar) -> FieldScalar {
        debug_assert!(a < self.p && b < self.p, "non-canonical scalar");
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldScalar) -> Result<FieldScalar, FieldError> {
        debug_assert!(a < self.p, "non-canonical scalar");
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 for prime p");
        Ok(t0.rem_euclid(self.p as i128) as u64)
    }

    pub fn div(&self, a: FieldScalar, b: FieldScalar) -> Result<FieldScalar, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let pow = |mut b: u128, mut e: u64, m: u128| -> u128 {
        let mut acc = 1u128;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a as u128, d, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.inv(2).unwrap(), 4);
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.add(32002, 5), 4);
    }

    #[test]
    fn inv_of_zero_fails() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn from_i64_wraps_negatives() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.from_i64(-1), 6);
        assert_eq!(f7.from_i64(-14), 0);
    }

    #[test]
    fn field_axioms_randomized() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for p in [7u64, 32003, 2147483647] {
            let f = PrimeField::new(p).unwrap();
            for _ in 0..200 {
                let (a, b, c) = (next() % p, next() % p, next() % p);
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }
}
