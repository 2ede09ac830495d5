//! Coefficient fields: exact rationals and prime fields `F_p` with `p > 3`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a polynomial ring.
///
/// Prime fields of characteristic 2 or 3 are rejected: the constructions
/// built on top of this crate need 2 (and occasionally 3) invertible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

/// A field element. The `Fp` payload is the canonical representative in
/// `0..p`; the modulus lives in the enclosing [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp(u64),
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    /// Characteristic-p field; `p` must be prime and different from 2 and 3.
    pub fn prime_field(p: u64) -> Result<FieldSpec, String> {
        if !is_prime_u64(p) {
            return Err(format!("{p} is not prime"));
        }
        if p == 2 || p == 3 {
            return Err(format!("characteristic {p} is not supported (2 and 3 must be invertible)"));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Q(BigRational::zero()),
            FieldSpec::PrimeField { .. } => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Q(BigRational::one()),
            FieldSpec::PrimeField { .. } => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Q(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField { p } => {
                let m = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp(m % p)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Q(BigRational::from(n.clone())),
            FieldSpec::PrimeField { p } => {
                let m = n % BigInt::from(*p);
                let m = if m.is_negative() { m + BigInt::from(*p) } else { m };
                let digits = m.to_u64_digits().1;
                Coeff::Fp(*digits.first().unwrap_or(&0))
            }
        }
    }

    /// Maps a rational number into the field. Fails over `F_p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, x: &BigRational) -> Result<Coeff, String> {
        match self {
            FieldSpec::Rationals => Ok(Coeff::Q(x.clone())),
            FieldSpec::PrimeField { p } => {
                let num = self.from_bigint(x.numer());
                let den = self.from_bigint(x.denom());
                let Coeff::Fp(d) = den else { unreachable!() };
                if d == 0 {
                    return Err(format!("denominator of {x} vanishes mod {p}"));
                }
                Ok(self.mul(&num, &self.inv(&den)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(x) => x.is_zero(),
            Coeff::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (FieldSpec::PrimeField { p }, Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % p),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x - y),
            (FieldSpec::PrimeField { p }, Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp((x + p - y) % p)
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Q(x)) => Coeff::Q(-x),
            (FieldSpec::PrimeField { p }, Coeff::Fp(x)) => Coeff::Fp((p - x) % p),
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (FieldSpec::PrimeField { p }, Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(mul_mod(*x, *y, *p))
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Q(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Coeff::Q(x.recip())
            }
            (FieldSpec::PrimeField { p }, Coeff::Fp(x)) => {
                assert!(*x != 0, "division by zero");
                Coeff::Fp(pow_mod(*x, p - 2, *p))
            }
            _ => panic!("coefficient kind does not match field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Renders a coefficient in the document grammar: integers, or `a/b`
    /// reduced fractions with positive denominator.
    pub fn coeff_to_string(&self, a: &Coeff) -> String {
        match a {
            Coeff::Q(x) => {
                if x.denom().is_one() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(x) => format!("{x}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(5));
        assert!(is_prime_u64(13));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(25));
        assert!(!is_prime_u64(561)); // Carmichael
    }

    #[test]
    fn small_characteristics_rejected() {
        assert!(FieldSpec::prime_field(2).is_err());
        assert!(FieldSpec::prime_field(3).is_err());
        assert!(FieldSpec::prime_field(4).is_err());
        assert!(FieldSpec::prime_field(5).is_ok());
    }

    #[test]
    fn fp_arithmetic_canonical() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coeff::Fp(4));
        assert_eq!(f.mul(&a, &a), Coeff::Fp(1));
        assert_eq!(f.inv(&Coeff::Fp(2)), Coeff::Fp(3));
        assert_eq!(f.sub(&Coeff::Fp(1), &Coeff::Fp(3)), Coeff::Fp(3));
    }

    #[test]
    fn rational_exactness() {
        let f = FieldSpec::Rationals;
        let third = f.div(&f.one(), &f.from_i64(3));
        let sum = f.add(&f.add(&third, &third), &third);
        assert!(f.is_one(&sum));
        assert_eq!(f.coeff_to_string(&third), "1/3");
    }

    #[test]
    fn rational_into_fp() {
        let f = FieldSpec::prime_field(7).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_rational(&half).unwrap(), Coeff::Fp(4)); // 2*4 = 8 = 1
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f.from_rational(&bad).is_err());
    }
}
