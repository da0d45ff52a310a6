//! Exhaustive searches used as independent oracles for the solver.

use alloc::collections::BTreeSet;

use num_integer::Roots;

/// `⌈√n⌉`.
fn ceil_sqrt(n: u128) -> u128 {
    let r = n.sqrt();
    if r * r < n {
        r + 1
    } else {
        r
    }
}

/// All `(a, b)` with `a² - ab + b² = n`.
///
/// Searches `|a|, |b| ≤ ⌈2√n⌉`. The form is at least `max(a², b²)/4` on
/// integers (in fact at least `3/4` of it), so nothing outside is missed.
pub fn brute_force_eisenstein(n: u64) -> BTreeSet<(i64, i64)> {
    let bound = ceil_sqrt(4 * n as u128) as i64;
    let target = n as i128;
    let mut out = BTreeSet::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let (x, y) = (a as i128, b as i128);
            if x * x - x * y + y * y == target {
                out.insert((a, b));
            }
        }
    }
    out
}

/// All `(c, d)` with `c² + d² = n`, searching `|c|, |d| ≤ ⌊√n⌋`.
pub fn brute_force_gaussian(n: u64) -> BTreeSet<(i64, i64)> {
    let bound = (n as u128).sqrt() as i64;
    let target = n as i128;
    let mut out = BTreeSet::new();
    for c in -bound..=bound {
        for d in -bound..=bound {
            let (x, y) = (c as i128, d as i128);
            if x * x + y * y == target {
                out.insert((c, d));
            }
        }
    }
    out
}
