//! Primality for arbitrary-precision inputs and a small sieve for sweeps.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The first twelve primes as Miller-Rabin bases: deterministic below 3.3·10²⁴.
const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Strong-pseudoprime test to the bases in [`BASES`].
///
/// Exact for every `n < 3.3·10²⁴` (so for all 64-bit inputs); above that a
/// composite passing all twelve bases would be needed to fool it.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 64 {
            return matches!(
                small,
                2 | 3 | 5 | 7 | 11 | 13 | 17 | 19 | 23 | 29 | 31 | 37 | 41 | 43 | 47 | 53 | 59 | 61
            );
        }
    }
    if BASES.iter().any(|&b| (n % b).is_zero()) {
        return false;
    }
    let n_minus_one = n - 1u32;
    let twos = n_minus_one.trailing_zeros().unwrap_or(0);
    let odd = &n_minus_one >> twos;
    'bases: for &base in &BASES {
        let mut x = BigInt::from(base).modpow(&odd, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..twos {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub(crate) fn ensure_odd_prime(p: &BigInt) -> Result<(), crate::Error> {
    if p.is_positive() && p.is_odd() && is_prime(p) {
        Ok(())
    } else {
        Err(crate::Error::NotOddPrime(p.clone()))
    }
}

/// All primes `≤ limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}
