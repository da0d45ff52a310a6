//! `PSL(2,Z)`, its Möbius action and the level-2 congruence subgroup `Γ(2)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::{CuspClass, ExtendedRational, FieldElement, QuadraticPoint, Radicand};
use crate::Error;

/// An element of `PSL(2,Z)`.
///
/// The matrix `(a b; c d)` has determinant 1 and is stored with `c > 0`, or
/// `c = 0` and `d > 0`, so that a group element has exactly one stored form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::NotUnimodular);
        }
        Ok(Self::normalized(a, b, c, d))
    }

    /// Caller guarantees `ad - bc = 1`.
    pub(crate) fn normalized(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!(&a * &d - &b * &c == BigInt::one());
        if c.is_negative() || (c.is_zero() && d.is_negative()) {
            Self { a: -a, b: -b, c: -c, d: -d }
        } else {
            Self { a, b, c, d }
        }
    }

    pub fn identity() -> Self {
        Self::normalized(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `ψ: z ↦ (z+1)/(-z)`, of order 3, fixing `ω`.
    pub fn psi() -> Self {
        Self::normalized(BigInt::one(), BigInt::one(), -BigInt::one(), BigInt::zero())
    }

    /// `z ↦ -1/z`, of order 2, fixing `i`.
    pub fn inversion() -> Self {
        Self::normalized(BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// `z ↦ z + n`.
    pub fn translation(n: impl Into<BigInt>) -> Self {
        Self::normalized(BigInt::one(), n.into(), BigInt::zero(), BigInt::one())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Trace of the stored (sign-normalized) representative.
    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::normalized(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> Self {
        Self::normalized(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Self) -> Self {
        self.compose(other).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Image of a cusp; a unimodular matrix maps coprime pairs to coprime pairs.
    pub fn apply_to_cusp(&self, r: &ExtendedRational) -> ExtendedRational {
        let (n, d) = (r.num(), r.den());
        let num = &self.a * n + &self.b * d;
        let den = &self.c * n + &self.d * d;
        ExtendedRational::from_coprime(num, den)
    }

    /// Image of `z` under `(az + b)/(cz + d)`, computed in `Q(√-D)`.
    pub fn apply_to_point(&self, z: &QuadraticPoint) -> QuadraticPoint {
        let radicand = z.radicand();
        let lift = |n: &BigInt| FieldElement::rational(BigRational::from_integer(n.clone()), radicand);
        let w = z.to_element();
        let numerator = lift(&self.a) * w.clone() + lift(&self.b);
        let denominator = lift(&self.c) * w + lift(&self.d);
        let image = numerator.checked_div(&denominator).expect("cz + d vanishes only for real z");
        QuadraticPoint::new(image.re, image.im, radicand).expect("PSL(2,Z) preserves the upper half-plane")
    }

    /// Membership in `Γ(2)`: congruent to the identity mod 2 (sign is irrelevant mod 2).
    pub fn in_gamma2(&self) -> bool {
        self.a.is_odd() && self.b.is_even() && self.c.is_even() && self.d.is_odd()
    }

    /// The permutation of cusp classes induced by this element, indexed by [`CuspClass::index`].
    pub fn cusp_permutation(&self) -> [CuspClass; 3] {
        CuspClass::ALL.map(|class| self.apply_to_cusp(&class.representative()).cusp_class())
    }

    /// Order in `PSL(2,Z)` if the element is elliptic (trace 0 or ±1).
    pub fn elliptic_order(&self) -> Option<u32> {
        let t = self.trace();
        if t.is_zero() {
            Some(2)
        } else if t.abs().is_one() {
            Some(3)
        } else {
            None
        }
    }

    /// The unique fixed point in `H` of an elliptic element.
    ///
    /// Solves `cz² + (d - a)z - b = 0`; the discriminant `t² - 4` is `-4` or `-3`.
    pub fn elliptic_fixed_point(&self) -> Option<QuadraticPoint> {
        let order = self.elliptic_order()?;
        // c = 0 forces |t| = 2, so c > 0 here
        let two_c = BigInt::from(2) * &self.c;
        let x = BigRational::new(&self.a - &self.d, two_c.clone());
        let (s, radicand) = match order {
            2 => (BigInt::from(2), Radicand::One),
            _ => (BigInt::one(), Radicand::Three),
        };
        QuadraticPoint::new(x, BigRational::new(s, two_c), radicand).ok()
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// Bezout coefficients `(g, x, y)` with `ax + by = g = gcd(a, b) ≥ 0`.
pub(crate) fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// An element `γ ∈ Γ(2)` with `γ·r = 1/0`.
///
/// For `r = a/c` take Bezout coefficients `ua + vc = 1` and form
/// `(u, v; -c, a)`. Since `c` is even, `u` is odd; if `v` is odd the shift
/// `(u, v) ← (u + c, v - a)` makes it even, which puts `γ` in `Γ(2)`.
pub fn reduce_cusp_to_infinity(r: &ExtendedRational) -> Result<UnimodularMatrix, Error> {
    if r.cusp_class() != CuspClass::Infinity {
        return Err(Error::NotInfinityClass);
    }
    let (a, c) = (r.num(), r.den());
    let (g, mut u, mut v) = extended_gcd(a, c);
    debug_assert!(g.is_one());
    if v.is_odd() {
        u += c;
        v -= a;
    }
    let gamma = UnimodularMatrix::normalized(u, v, -c.clone(), a.clone());
    debug_assert!(gamma.in_gamma2());
    Ok(gamma)
}

/// Representatives of the six cosets of `Γ(2)` in `PSL(2,Z)`, i.e. of
/// `SL(2, F₂) ≅ S₃`: identity, `z+1`, `ψ`, `ψ²`, `-1/z` and `z/(z+1)`.
pub fn coset_representatives() -> Vec<UnimodularMatrix> {
    let psi = UnimodularMatrix::psi();
    alloc::vec![
        UnimodularMatrix::identity(),
        UnimodularMatrix::translation(1),
        psi.clone(),
        psi.pow(2),
        UnimodularMatrix::inversion(),
        UnimodularMatrix::normalized(BigInt::one(), BigInt::zero(), BigInt::one(), BigInt::one()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::new(a, b, c, d).unwrap()
    }

    fn er(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_normalization() {
        assert_eq!(m(1, 1, -1, 0), m(-1, -1, 1, 0));
        assert_eq!(m(-1, 0, 0, -1), UnimodularMatrix::identity());
        assert_eq!(UnimodularMatrix::new(2, 0, 0, 1), Err(Error::NotUnimodular));
    }

    #[test]
    fn compose_examples() {
        let psi = UnimodularMatrix::psi();
        let f = m(1, 0, 2, 1);
        assert_eq!(UnimodularMatrix::identity().compose(&f), f);
        assert!(psi.compose(&psi).compose(&psi).is_identity());
        assert!(!psi.compose(&psi).is_identity());
        assert_eq!(f.conjugate(&psi), m(-1, 1, -3, 2));
    }

    #[test]
    fn apply_to_cusp_examples() {
        let g = m(-1, 1, -3, 2);
        assert_eq!(g.apply_to_cusp(&ExtendedRational::infinity()), er(1, 3));
        assert_eq!(g.apply_to_cusp(&er(1, 3)), er(2, 3));
        assert_eq!(g.apply_to_cusp(&er(2, 3)), ExtendedRational::infinity());
        assert_eq!(UnimodularMatrix::identity().apply_to_cusp(&er(5, 7)), er(5, 7));
    }

    #[test]
    fn apply_to_point_examples() {
        let f = m(1, 0, 2, 1);
        let image = f.apply_to_point(&QuadraticPoint::omega());
        assert_eq!(image, QuadraticPoint::new(q(1, 2), q(1, 6), Radicand::Three).unwrap());
        let i = QuadraticPoint::i();
        assert_eq!(UnimodularMatrix::identity().apply_to_point(&i), i);
        assert_eq!(m(0, -1, 1, 0).apply_to_point(&i), i);
        // the conjugate of ψ fixes f(ω)
        assert_eq!(m(-1, 1, -3, 2).apply_to_point(&image), image);
    }

    #[test]
    fn gamma2_membership() {
        assert!(m(1, 0, 2, 1).in_gamma2());
        assert!(!m(1, 1, -1, 0).in_gamma2());
        assert!(m(1, 2, 0, 1).in_gamma2());
        assert!(m(-1, 2, 0, -1).in_gamma2());
    }

    #[test]
    fn reduce_to_infinity_examples() {
        assert!(reduce_cusp_to_infinity(&ExtendedRational::infinity()).unwrap().is_identity());
        assert_eq!(reduce_cusp_to_infinity(&er(1, 2)).unwrap(), m(1, 0, -2, 1));
        let gamma = reduce_cusp_to_infinity(&er(3, 2)).unwrap();
        assert!(gamma.in_gamma2());
        assert_eq!(gamma.apply_to_cusp(&er(3, 2)), ExtendedRational::infinity());
        let gamma = reduce_cusp_to_infinity(&er(-5, 2)).unwrap();
        assert!(gamma.in_gamma2());
        assert_eq!(gamma.apply_to_cusp(&er(-5, 2)), ExtendedRational::infinity());
        assert_eq!(reduce_cusp_to_infinity(&er(1, 3)), Err(Error::NotInfinityClass));
        assert_eq!(reduce_cusp_to_infinity(&er(0, 1)), Err(Error::NotInfinityClass));
    }

    #[test]
    fn cosets_cover_s3() {
        let reps = coset_representatives();
        assert_eq!(reps.len(), 6);
        assert!(reps.contains(&UnimodularMatrix::identity()));
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i + 1..] {
                assert!(!x.inverse().compose(y).in_gamma2(), "{x} and {y} share a coset");
            }
        }
        let mut perms: Vec<_> = reps.iter().map(|r| r.cusp_permutation()).collect();
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 6);
    }

    #[test]
    fn psi_cycles_cusp_classes() {
        let perm = UnimodularMatrix::psi().cusp_permutation();
        assert_eq!(perm[CuspClass::Zero.index()], CuspClass::Infinity);
        assert_eq!(perm[CuspClass::Infinity.index()], CuspClass::One);
        assert_eq!(perm[CuspClass::One.index()], CuspClass::Zero);
    }

    #[test]
    fn elliptic_fixed_points() {
        assert_eq!(UnimodularMatrix::psi().elliptic_fixed_point(), Some(QuadraticPoint::omega()));
        assert_eq!(UnimodularMatrix::inversion().elliptic_fixed_point(), Some(QuadraticPoint::i()));
        assert_eq!(UnimodularMatrix::translation(1).elliptic_fixed_point(), None);
        let stab = m(2, -1, 7, -3);
        let z = stab.elliptic_fixed_point().unwrap();
        assert_eq!(z, QuadraticPoint::new(q(5, 14), q(1, 14), Radicand::Three).unwrap());
        assert_eq!(stab.apply_to_point(&z), z);
    }

    #[test]
    fn extended_gcd_signs() {
        for (a, b) in [(-5i64, 2i64), (5, -2), (0, 7), (7, 0), (-7, 0), (12, 18)] {
            let (g, x, y) = extended_gcd(&a.into(), &b.into());
            assert!(!g.is_negative());
            assert_eq!(BigInt::from(a) * x + BigInt::from(b) * y, g);
        }
    }
}
