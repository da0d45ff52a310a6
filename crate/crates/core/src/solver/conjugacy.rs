//! Conjugating one elliptic element of `PSL(2,Z)` onto another.
//!
//! The integer matrices `g` with `m·g = g·model` form a rank-2 lattice. On it
//! `det` is a binary quadratic form; it is positive definite exactly when the
//! two elements rotate in the same direction, and the conjugators in
//! `PSL(2,Z)` are its representations of 1.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::modular::{extended_gcd, UnimodularMatrix};
use crate::Error;

type Entries = [BigInt; 4];

/// Returns `g` with `g · model · g⁻¹ = m` in `PSL(2,Z)`.
///
/// Both arguments must be elliptic of the same order. Among all solutions the
/// first one found by the search over the reduced lattice basis is returned.
pub fn conjugate_to_model(m: &UnimodularMatrix, model: &UnimodularMatrix) -> Result<UnimodularMatrix, Error> {
    let order = m.elliptic_order().ok_or(Error::NotElliptic)?;
    if model.elliptic_order() != Some(order) {
        return Err(Error::NotElliptic);
    }
    // choose the SL(2,Z) lift of m whose trace matches the model's
    let target: Entries =
        if m.trace() == model.trace() { m.entries().map(Clone::clone) } else { m.entries().map(|x| -x) };
    let model_entries: Entries = model.entries().map(Clone::clone);

    let basis = integer_kernel(&commutation_system(&target, &model_entries));
    let [v1, v2]: [Entries; 2] = basis
        .try_into()
        .map_err(|_| Error::Invariant("solution lattice of an elliptic pair is not of rank 2"))?;
    let mut form = DetForm::new(v1, v2);
    if !form.a.is_positive() {
        // det is negative definite: only orientation-reversing solutions exist
        return Err(Error::NotConjugate);
    }
    form.reduce();
    let g = form.find_unit().ok_or(Error::NotConjugate)?;
    let [a, b, c, d] = g;
    let g = UnimodularMatrix::normalized(a, b, c, d);
    if g.conjugate(model) != *m {
        return Err(Error::Invariant("conjugator does not conjugate"));
    }
    Ok(g)
}

/// Rows of the linear system `target·g - g·model = 0` in the unknowns `(g₀₀, g₀₁, g₁₀, g₁₁)`.
fn commutation_system(target: &Entries, model: &Entries) -> Vec<Entries> {
    let at = |m: &Entries, i: usize, j: usize| m[2 * i + j].clone();
    let mut rows = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            let mut row: Entries = Default::default();
            for l in 0..2 {
                row[2 * l + j] += at(target, i, l);
                row[2 * i + l] -= at(model, l, j);
            }
            rows.push(row);
        }
    }
    rows
}

/// A basis of `{v ∈ Z⁴ : rows · v = 0}`.
///
/// Unimodular column operations bring the system to column echelon form; the
/// transformation columns that end up over zero columns span the kernel.
fn integer_kernel(rows: &[Entries]) -> Vec<Entries> {
    const N: usize = 4;
    let mut a: Vec<Entries> = rows.to_vec();
    let mut u: Vec<Entries> = (0..N)
        .map(|i| core::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() }))
        .collect();
    let mut pivot = 0;
    for i in 0..a.len() {
        if pivot == N {
            break;
        }
        for j in pivot + 1..N {
            if a[i][j].is_zero() {
                continue;
            }
            let (x, y) = (a[i][pivot].clone(), a[i][j].clone());
            let (g, s, t) = extended_gcd(&x, &y);
            let (xg, yg) = (&x / &g, &y / &g);
            for row in a.iter_mut().chain(u.iter_mut()) {
                let (cp, cj) = (row[pivot].clone(), row[j].clone());
                row[pivot] = &s * &cp + &t * &cj;
                row[j] = &xg * &cj - &yg * &cp;
            }
        }
        if !a[i][pivot].is_zero() {
            pivot += 1;
        }
    }
    (pivot..N).map(|col| core::array::from_fn(|r| u[r][col].clone())).collect()
}

fn det(m: &Entries) -> BigInt {
    &m[0] * &m[3] - &m[1] * &m[2]
}

fn combine(x: &BigInt, v: &Entries, y: &BigInt, w: &Entries) -> Entries {
    core::array::from_fn(|i| x * &v[i] + y * &w[i])
}

/// `det(x·v1 + y·v2) = a x² + b xy + c y²` together with its basis.
struct DetForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    v1: Entries,
    v2: Entries,
}

impl DetForm {
    fn new(v1: Entries, v2: Entries) -> Self {
        let b = &v1[0] * &v2[3] + &v2[0] * &v1[3] - &v1[1] * &v2[2] - &v2[1] * &v1[2];
        Self { a: det(&v1), b, c: det(&v2), v1, v2 }
    }

    fn value(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// Lagrange-Gauss reduction to `|b| ≤ a ≤ c`, carrying the basis along.
    fn reduce(&mut self) {
        loop {
            if self.a > self.c {
                core::mem::swap(&mut self.a, &mut self.c);
                core::mem::swap(&mut self.v1, &mut self.v2);
            }
            if self.b.magnitude() <= self.a.magnitude() {
                return;
            }
            // v2 ← v2 - t·v1 with t = round(b / 2a)
            let two_a = &self.a * 2;
            let t = (&self.b + &self.a).div_floor(&two_a);
            let c = &self.a * &t * &t - &self.b * &t + &self.c;
            self.b -= &two_a * &t;
            self.c = c;
            self.v2 = combine(&BigInt::one(), &self.v2, &-t, &self.v1);
        }
    }

    /// First `(x, y)` with form value 1, scanning rings of increasing max-norm
    /// in lexicographic order. From `4a·Q = (2ax + by)² + |D|y²` any solution
    /// has `|D|y² ≤ 4a` and symmetrically `|D|x² ≤ 4c`.
    fn find_unit(&self) -> Option<Entries> {
        let disc: BigInt = &self.b * &self.b - &self.a * &self.c * 4;
        let disc = disc.abs();
        if disc.is_zero() {
            return None;
        }
        let bound_x: BigInt = &self.c * 4 / &disc;
        let bound_y: BigInt = &self.a * 4 / &disc;
        let (bound_x, bound_y) = (bound_x.sqrt(), bound_y.sqrt());
        let max_ring = (&bound_x).max(&bound_y).clone();
        let mut ring = BigInt::zero();
        while ring <= max_ring {
            let mut x = -ring.clone();
            while x <= ring {
                let mut y = -ring.clone();
                while y <= ring {
                    let on_ring = x.magnitude().max(y.magnitude()) == ring.magnitude();
                    if on_ring
                        && x.magnitude() <= bound_x.magnitude()
                        && y.magnitude() <= bound_y.magnitude()
                        && self.value(&x, &y).is_one()
                    {
                        return Some(combine(&x, &self.v1, &y, &self.v2));
                    }
                    y += 1u32;
                }
                x += 1u32;
            }
            ring += 1u32;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn recovers_the_worked_conjugator() {
        let psi = UnimodularMatrix::psi();
        let g = conjugate_to_model(&m(-1, 1, -3, 2), &psi).unwrap();
        assert_eq!(g.conjugate(&psi), m(-1, 1, -3, 2));
        // g = f·ψʲ for f = z/(2z+1)
        let f = m(1, 0, 2, 1);
        assert!((0..3).any(|j| f.compose(&psi.pow(j)) == g));
    }

    #[test]
    fn self_conjugacy_lands_in_the_centralizer() {
        let psi = UnimodularMatrix::psi();
        let g = conjugate_to_model(&psi, &psi).unwrap();
        assert!((0..3).any(|j| psi.pow(j) == g));
        let s = UnimodularMatrix::inversion();
        let g = conjugate_to_model(&s, &s).unwrap();
        assert!(g.is_identity() || g == s);
    }

    #[test]
    fn conjugator_bottom_row_has_norm_seven() {
        let psi = UnimodularMatrix::psi();
        let target = m(2, -1, 7, -3);
        let g = conjugate_to_model(&target, &psi).unwrap();
        assert_eq!(g.conjugate(&psi), target);
        let [_, _, c, d] = g.entries();
        assert_eq!(c * c - c * d + d * d, 7.into());
    }

    #[test]
    fn opposite_rotation_is_rejected() {
        let psi = UnimodularMatrix::psi();
        assert_eq!(conjugate_to_model(&psi.pow(2), &psi), Err(Error::NotConjugate));
        assert_eq!(conjugate_to_model(&m(2, -1, 7, -3).pow(2), &psi), Err(Error::NotConjugate));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let psi = UnimodularMatrix::psi();
        assert_eq!(conjugate_to_model(&UnimodularMatrix::inversion(), &psi), Err(Error::NotElliptic));
        assert_eq!(conjugate_to_model(&UnimodularMatrix::translation(1), &psi), Err(Error::NotElliptic));
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 3z + 4w = 0 has a rank-3 kernel
        let rows = [[1, 2, 3, 4].map(BigInt::from)];
        let basis = integer_kernel(&rows);
        assert_eq!(basis.len(), 3);
        for v in &basis {
            let dot: BigInt = rows[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        // basis vectors of a saturated kernel are primitive
        let rows = [[2, 4, 0, 0].map(BigInt::from), [0, 0, 3, 3].map(BigInt::from)];
        let basis = integer_kernel(&rows);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            assert!(g.is_one());
        }
    }
}
