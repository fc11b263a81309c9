//! Exact integer arithmetic on small numbers: factorization, prime-power
//! tests, and the three-shape classification of element orders.
//!
//! Inputs are bounded by catalog group orders (a few thousand), so plain
//! trial division is used throughout. Primes are always listed in ascending
//! order, which keeps every downstream report byte-stable.

use thiserror::Error;

pub const FACTOR_BOUND: u64 = 1 << 31;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumthError {
    #[error("cannot factor zero")]
    Zero,
    #[error("{0} exceeds the factorization bound 2^31")]
    TooLarge(u64),
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// The empty sequence represents 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Distinct prime divisors, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn num_primes(&self) -> usize {
        self.pairs.len()
    }

    /// Exponent of `p` (0 when `p` does not divide the number).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of `prime^exponent`; the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }
}

/// Classification of an integer as one of the three legal element-order
/// shapes, or `Nonconforming` with its factorization.
///
/// `PrimePower` covers 1 (as `2^0`). For `PrimePowerTimesPrime`, the prime
/// carrying the exponent is `p` and the single-exponent prime is `q`; when
/// both exponents are 1 the smaller prime is taken as `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementOrderForm {
    PrimePower { p: u64, m: u32 },
    PrimePowerTimesPrime { p: u64, m: u32, q: u64 },
    ThreeDistinctPrimes { p: u64, q: u64, r: u64 },
    Nonconforming(Factorization),
}

/// Trial-division factorization. Deterministic; primes ascend.
pub fn factorize(n: u64) -> Result<Factorization, NumthError> {
    if n == 0 {
        return Err(NumthError::Zero);
    }
    if n > FACTOR_BOUND {
        return Err(NumthError::TooLarge(n));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

/// True iff `n` is 1 or a power of a single prime.
///
/// 1 counts as a prime power by convention: a trivial cyclic intersection
/// admits no two elements of distinct prime orders, so the four-cycle
/// criterion needs it on the "prime power" side.
pub fn is_prime_power(n: u64) -> bool {
    factorize(n).is_ok_and(|f| f.num_primes() <= 1)
}

pub fn is_prime(n: u64) -> bool {
    factorize(n).is_ok_and(|f| f.pairs() == [(n, 1)])
}

/// Classify `n` into the three legal order shapes.
pub fn order_form(n: u64) -> ElementOrderForm {
    let f = factorize(n).expect("order_form requires n >= 1");
    match f.pairs() {
        [] => ElementOrderForm::PrimePower { p: 2, m: 0 },
        &[(p, m)] => ElementOrderForm::PrimePower { p, m },
        &[(a, ea), (b, eb)] => match (ea, eb) {
            (_, 1) => ElementOrderForm::PrimePowerTimesPrime { p: a, m: ea, q: b },
            (1, _) => ElementOrderForm::PrimePowerTimesPrime { p: b, m: eb, q: a },
            _ => ElementOrderForm::Nonconforming(f),
        },
        &[(p, 1), (q, 1), (r, 1)] => ElementOrderForm::ThreeDistinctPrimes { p, q, r },
        _ => ElementOrderForm::Nonconforming(f),
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `base^exp mod m` for small moduli.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 0 && m < (1 << 32));
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}
