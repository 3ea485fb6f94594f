//! Integer helpers for group orders.

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        part *= p;
    }
    part
}

/// `Some(p)` when `n` is a power of the prime `p` (n > 1).
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// True when every prime divisor of `n` lies in `primes`.
pub fn is_pi_number(n: u64, primes: &[u64]) -> bool {
    prime_divisors(n).iter().all(|q| primes.contains(q))
}

pub use crate::perm::gcd;
