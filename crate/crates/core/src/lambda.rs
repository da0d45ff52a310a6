//! Ford circles, arcs between cusps and their λ-lengths.
//!
//! The λ-length of the arc joining `a/c` and `b/d` is `|ad - bc|`; it is used
//! here as the definition rather than via the truncated hyperbolic length.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::exact::{ExtendedRational, QuadraticPoint, Radicand};
use crate::modular::UnimodularMatrix;
use crate::primes::ensure_odd_prime;
use crate::Error;

/// A geodesic between two distinct cusps, stored with `∞` first, otherwise the smaller endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    e1: ExtendedRational,
    e2: ExtendedRational,
}

impl Arc {
    pub fn new(x: ExtendedRational, y: ExtendedRational) -> Result<Self, Error> {
        if x == y {
            return Err(Error::DegenerateArc);
        }
        let swap = match (x.to_rational(), y.to_rational()) {
            (Some(_), None) => true,
            (Some(p), Some(q)) => q < p,
            _ => false,
        };
        Ok(if swap { Self { e1: y, e2: x } } else { Self { e1: x, e2: y } })
    }

    /// The arc `(∞, k/p)`.
    pub fn vertical(x: ExtendedRational) -> Result<Self, Error> {
        Self::new(ExtendedRational::infinity(), x)
    }

    pub fn endpoints(&self) -> (&ExtendedRational, &ExtendedRational) {
        (&self.e1, &self.e2)
    }

    pub fn is_vertical(&self) -> bool {
        self.e1.is_infinity()
    }

    /// `|ad - bc|` for endpoints `a/c` and `b/d`.
    pub fn lambda_length(&self) -> BigInt {
        lambda_length_between(&self.e1, &self.e2)
    }

    pub fn image(&self, m: &UnimodularMatrix) -> Arc {
        Arc::new(m.apply_to_cusp(&self.e1), m.apply_to_cusp(&self.e2))
            .expect("Möbius maps are injective on cusps")
    }

    /// Midpoint of a vertical arc `(∞, b/d)`: the point `b/d + i/|d|`.
    pub fn vertical_midpoint(&self) -> Result<QuadraticPoint, Error> {
        if !self.is_vertical() {
            return Err(Error::NotVertical);
        }
        let d = self.e2.den().clone();
        let x = self.e2.to_rational().expect("second endpoint is finite");
        QuadraticPoint::new(x, BigRational::new(BigInt::one(), d), Radicand::One)
    }
}

pub(crate) fn lambda_length_between(x: &ExtendedRational, y: &ExtendedRational) -> BigInt {
    (x.num() * y.den() - y.num() * x.den()).abs()
}

/// The horoball tangent to the real line at a cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FordCircle {
    tangent_point: ExtendedRational,
    /// `None` for the horoball `{Im z > 1}` at `∞`.
    diameter: Option<BigRational>,
}

impl FordCircle {
    /// The circle at `m/n` has diameter `1/n²`.
    pub fn at(r: &ExtendedRational) -> Self {
        let diameter = (!r.is_infinity()).then(|| BigRational::new(BigInt::one(), r.den() * r.den()));
        Self { tangent_point: r.clone(), diameter }
    }

    pub fn tangent_point(&self) -> &ExtendedRational {
        &self.tangent_point
    }

    pub fn diameter(&self) -> Option<&BigRational> {
        self.diameter.as_ref()
    }

    pub fn is_horoball_at_infinity(&self) -> bool {
        self.diameter.is_none()
    }

    pub fn radius(&self) -> Option<BigRational> {
        self.diameter.as_ref().map(|d| d / BigInt::from(2))
    }

    /// Euclidean center `(m/n, 1/(2n²))`.
    pub fn center(&self) -> Option<(BigRational, BigRational)> {
        Some((self.tangent_point.to_rational()?, self.radius()?))
    }

    /// External tangency, decided exactly on squared distances.
    pub fn is_tangent_to(&self, other: &FordCircle) -> bool {
        match (self.center(), other.center()) {
            (Some((x1, y1)), Some((x2, y2))) => {
                let (dx, dy) = (&x1 - &x2, &y1 - &y2);
                let sum = &y1 + &y2;
                &dx * &dx + &dy * &dy == &sum * &sum
            }
            // the horoball's boundary is the line Im z = 1
            (Some((_, r)), None) | (None, Some((_, r))) => r * BigInt::from(2) == BigRational::one(),
            (None, None) => false,
        }
    }
}

/// `k ∈ {1, …, 2p-1}` with `gcd(k, p) = 1`, without checking `p`.
pub(crate) fn incident_indices(p: &BigInt) -> Vec<BigInt> {
    let upper = p * 2;
    let mut k = BigInt::one();
    let mut out = Vec::new();
    while k < upper {
        if k.gcd(p).is_one() {
            out.push(k.clone());
        }
        k += 1;
    }
    out
}

/// Indices `k` of the arcs `(∞, k/p)` of λ-length `p` with finite endpoint in `(0, 2)`.
///
/// These are the lifts, one per arc, of the `2(p-1)` arcs of λ-length `p`
/// incident to the cusp `∞` on `H/Γ(2)`.
pub fn enumerate_incident_arcs(p: &BigInt) -> Result<Vec<BigInt>, Error> {
    ensure_odd_prime(p)?;
    Ok(incident_indices(p))
}
