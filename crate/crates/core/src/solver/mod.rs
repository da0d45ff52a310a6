//! Representations `p = a² - ab + b²` and `p = c² + d²` read off from
//! elliptic elements of `PSL(2,Z)`.
//!
//! A ψ-fixed triangle of λ-length `p` has an order-3 stabilizer `M` in
//! `PSL(2,Z)`. Conjugating `M` back to `ψ` by some `g = (·, ·; c, d)` moves
//! `ω` to the barycenter, whose imaginary part `(√3/2)/(c² - cd + d²)` must
//! be `(√3/2)/p`. The Gaussian pipeline is the same with `z ↦ -1/z`, `i`,
//! and the midpoint `(k + i)/p` of a vertical arc.

mod conjugacy;
mod oracle;
mod verify;

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{EisensteinInt, GaussianInt, QuadraticPoint};
use crate::lambda::Arc;
use crate::modular::UnimodularMatrix;
use crate::primes::is_prime;
use crate::triangles::{orbit_decomposition, CanonicalTriangle, OrbitDecomposition};
use crate::{Error, ExtendedRational};

pub use conjugacy::conjugate_to_model;
pub use oracle::{brute_force_eisenstein, brute_force_gaussian};
pub use verify::{verify_prime, verify_theorems, PrimeReport, RingCheck, TriangleChecks, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Eisenstein,
    Gaussian,
}

impl Ring {
    /// The model elliptic element: `ψ` for `Z[ω]`, `z ↦ -1/z` for `Z[i]`.
    pub fn model(self) -> UnimodularMatrix {
        match self {
            Ring::Eisenstein => UnimodularMatrix::psi(),
            Ring::Gaussian => UnimodularMatrix::inversion(),
        }
    }

    /// `ω` or `i`.
    pub fn model_point(self) -> QuadraticPoint {
        match self {
            Ring::Eisenstein => QuadraticPoint::omega(),
            Ring::Gaussian => QuadraticPoint::i(),
        }
    }

    /// The binary form whose values are norms: `c² - cd + d²` or `c² + d²`.
    pub fn form(self, c: &BigInt, d: &BigInt) -> BigInt {
        match self {
            Ring::Eisenstein => c * c - c * d + d * d,
            Ring::Gaussian => c * c + d * d,
        }
    }

    /// Whether a prime is a norm in this ring: `p = 3` or `p ≡ 1 (mod 3)`,
    /// respectively `p = 2` or `p ≡ 1 (mod 4)`.
    pub fn congruence_admits(self, p: &BigInt) -> bool {
        match self {
            Ring::Eisenstein => *p == BigInt::from(3) || (p % 3u32).is_one(),
            Ring::Gaussian => *p == BigInt::from(2) || (p % 4u32).is_one(),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Eisenstein => "eisenstein",
            Ring::Gaussian => "gaussian",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormValue {
    Eisenstein(EisensteinInt),
    Gaussian(GaussianInt),
}

impl NormValue {
    pub fn norm(&self) -> BigInt {
        match self {
            NormValue::Eisenstein(e) => e.norm(),
            NormValue::Gaussian(g) => g.norm(),
        }
    }

    pub fn pair(&self) -> (BigInt, BigInt) {
        match self {
            NormValue::Eisenstein(e) => (e.a.clone(), e.b.clone()),
            NormValue::Gaussian(g) => (g.c.clone(), g.d.clone()),
        }
    }

    /// One name per class of associates: `0 < b ≤ a` for `Z[ω]`, `0 < c ≤ d` for `Z[i]`.
    pub fn canonical(&self) -> NormValue {
        match self {
            NormValue::Eisenstein(e) => NormValue::Eisenstein(e.canonical()),
            NormValue::Gaussian(g) => NormValue::Gaussian(g.canonical()),
        }
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Eisenstein(e) => e.fmt(f),
            NormValue::Gaussian(g) => g.fmt(f),
        }
    }
}

/// A representation of `p` together with the geometry that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormWitness {
    pub p: BigInt,
    pub value: NormValue,
    /// Index of the fixed triangle `(∞, k/p, (k+1)/p)` or of the arc `(∞, k/p)`.
    pub k: BigInt,
    /// The elliptic element certifying the representation.
    pub elliptic: UnimodularMatrix,
    /// Its fixed point: the triangle's barycenter or the arc's midpoint.
    pub fixed_point: QuadraticPoint,
    /// `g` with `g · model · g⁻¹ = elliptic`; its bottom row gives the value.
    pub conjugator: UnimodularMatrix,
}

impl NormWitness {
    pub fn ring(&self) -> Ring {
        match self.value {
            NormValue::Eisenstein(_) => Ring::Eisenstein,
            NormValue::Gaussian(_) => Ring::Gaussian,
        }
    }

    /// The fixed triangle behind an Eisenstein witness.
    pub fn triangle(&self) -> Option<CanonicalTriangle> {
        match self.ring() {
            Ring::Eisenstein => CanonicalTriangle::new(self.p.clone(), self.k.clone()).ok(),
            Ring::Gaussian => None,
        }
    }

    /// Re-checks every claim of the certificate in exact arithmetic.
    pub fn audit(&self) -> bool {
        let ring = self.ring();
        let model = ring.model();
        let model_point = ring.model_point();
        let [_, _, c, d] = self.conjugator.entries();
        self.value.norm() == self.p
            && ring.form(c, d) == self.p
            && self.conjugator.conjugate(&model) == self.elliptic
            && self.elliptic.apply_to_point(&self.fixed_point) == self.fixed_point
            && self.conjugator.apply_to_point(&model_point) == self.fixed_point
            && self.fixed_point.y().clone() * self.p.clone() == *model_point.y()
    }
}

/// Right-multiplies `g` by the power of the model whose bottom row `(c, d)` is
/// positive, with `c > d` for `Z[ω]`. The rows of `g·modelʲ` run through the
/// associates of `d + cω` (resp. `c + di`) up to sign, and exactly one passes.
fn choose_conjugator(ring: Ring, g: UnimodularMatrix) -> UnimodularMatrix {
    let model = ring.model();
    let order = match ring {
        Ring::Eisenstein => 3,
        Ring::Gaussian => 2,
    };
    (0..order)
        .map(|j| g.compose(&model.pow(j)))
        .find(|h| {
            let [_, _, c, d] = h.entries();
            d.is_positive() && (ring == Ring::Gaussian || c > d)
        })
        .unwrap_or(g)
}

fn ensure_prime(p: &BigInt) -> Result<(), Error> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.clone()))
    }
}

/// `p = a² - ab + b²` from the least ψ-fixed triangle of λ-length `p`, or
/// `None` when no triangle is fixed.
pub fn represent_eisenstein(p: &BigInt) -> Result<Option<NormWitness>, Error> {
    ensure_prime(p)?;
    if *p == BigInt::from(2) {
        // no equilateral triangles of λ-length 2
        return Ok(None);
    }
    eisenstein_from_orbits(&orbit_decomposition(p)?)
}

pub(crate) fn eisenstein_from_orbits(orbits: &OrbitDecomposition) -> Result<Option<NormWitness>, Error> {
    let Some(triangle) = orbits.fixed().first() else {
        return Ok(None);
    };
    let model = Ring::Eisenstein.model();
    let mut elliptic = triangle
        .stabilizer_matrix()
        .ok_or(Error::Invariant("ψ-fixed triangle without an integral stabilizer"))?;
    if elliptic.trace() != model.trace() {
        elliptic = elliptic.pow(2);
    }
    let fixed_point =
        elliptic.elliptic_fixed_point().ok_or(Error::Invariant("stabilizer is not elliptic"))?;
    let conjugator = choose_conjugator(Ring::Eisenstein, conjugate_to_model(&elliptic, &model)?);
    let [_, _, c, d] = conjugator.entries();
    let value = NormValue::Eisenstein(EisensteinInt::new(d.clone(), c.clone()));
    if value.norm() != *orbits.p() {
        return Err(Error::Invariant("conjugator bottom row does not have norm p"));
    }
    Ok(Some(NormWitness {
        p: orbits.p().clone(),
        value,
        k: triangle.k().clone(),
        elliptic,
        fixed_point,
        conjugator,
    }))
}

/// `p = c² + d²` from the least `k` for which the midpoint `(k + i)/p` of the
/// arc `(∞, k/p)` is fixed by an order-2 element of `PSL(2,Z)`, i.e. `p | k² + 1`.
pub fn represent_gaussian(p: &BigInt) -> Result<Option<NormWitness>, Error> {
    ensure_prime(p)?;
    let k = if *p < BigInt::from(SCAN_LIMIT) { scan_root_of_minus_one(p) } else { root_of_minus_one(p) };
    match k {
        Some(k) => {
            let b = (&k * &k + 1u32) / p;
            gaussian_at(p, &k, b).map(Some)
        }
        None => Ok(None),
    }
}

/// Below this the roots of `k² + 1` are found by trying every `k`.
const SCAN_LIMIT: u64 = 1 << 20;

fn scan_root_of_minus_one(p: &BigInt) -> Option<BigInt> {
    let mut k = BigInt::one();
    while k < *p {
        if ((&k * &k + 1u32) % p).is_zero() {
            return Some(k);
        }
        k += 1u32;
    }
    None
}

/// Least `k` in `1..p` with `p | k² + 1`, for an odd prime too large to scan.
/// The two roots are `±k`, so the smaller of `a^((p-1)/4)` and its negative is
/// the least one whenever `a` is a non-residue.
fn root_of_minus_one(p: &BigInt) -> Option<BigInt> {
    let (quarter, r) = (p - 1u32).div_rem(&BigInt::from(4));
    if !r.is_zero() {
        return None;
    }
    let minus_one = p - 1u32;
    let half = &quarter * 2u32;
    let mut a = BigInt::from(2);
    while a.modpow(&half, p) != minus_one {
        a += 1u32;
    }
    let k = a.modpow(&quarter, p);
    let other = p - &k;
    Some(k.min(other))
}

fn gaussian_at(p: &BigInt, k: &BigInt, b: BigInt) -> Result<NormWitness, Error> {
    let elliptic = UnimodularMatrix::new(k.clone(), -b, p.clone(), -k.clone())?;
    let arc = Arc::vertical(ExtendedRational::new(k.clone(), p.clone())?)?;
    let fixed_point = arc.vertical_midpoint()?;
    if elliptic.apply_to_point(&fixed_point) != fixed_point {
        return Err(Error::Invariant("order-2 element does not fix the arc midpoint"));
    }
    let conjugator =
        choose_conjugator(Ring::Gaussian, conjugate_to_model(&elliptic, &Ring::Gaussian.model())?);
    let [_, _, c, d] = conjugator.entries();
    let value = NormValue::Gaussian(GaussianInt::new(c.clone(), d.clone()));
    if value.norm() != *p {
        return Err(Error::Invariant("conjugator bottom row does not have norm p"));
    }
    Ok(NormWitness { p: p.clone(), value, k: k.clone(), elliptic, fixed_point, conjugator })
}
