use core::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong in the core crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `(0, 0)` is not a point of the projective line.
    DegenerateCusp,
    /// A point of the upper half-plane needs a strictly positive imaginary part.
    NotInUpperHalfPlane,
    /// Matrix entries with `ad - bc != 1`.
    NotUnimodular,
    /// Only cusps with odd numerator and even denominator are `Γ(2)`-equivalent to `1/0`.
    NotInfinityClass,
    /// An arc needs two distinct endpoints.
    DegenerateArc,
    /// The operation needs an arc with one endpoint at `1/0`.
    NotVertical,
    /// The operation is only defined for odd primes.
    NotOddPrime(BigInt),
    /// The operation is only defined for primes.
    NotPrime(BigInt),
    /// The index does not describe an equilateral triangle of λ-length `p`.
    InvalidTriangle { p: BigInt, k: BigInt },
    /// The triangle is not fixed by the order-3 automorphism.
    NotFixed { p: BigInt, k: BigInt },
    /// The matrix is not elliptic of order 2 or 3.
    NotElliptic,
    /// The two elliptic elements are not conjugate in `PSL(2,Z)`.
    NotConjugate,
    /// An internal consistency check failed; this is a bug.
    Invariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateCusp => f.write_str("0/0 is not a point of the boundary"),
            Error::NotInUpperHalfPlane => f.write_str("point is not in the upper half-plane"),
            Error::NotUnimodular => f.write_str("matrix does not have determinant 1"),
            Error::NotInfinityClass => {
                f.write_str("cusp is not in the Γ(2)-orbit of 1/0 (needs odd numerator, even denominator)")
            }
            Error::DegenerateArc => f.write_str("arc endpoints coincide"),
            Error::NotVertical => f.write_str("arc does not end at 1/0"),
            Error::NotOddPrime(n) => write!(f, "{n} is not an odd prime"),
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::InvalidTriangle { p, k } => {
                write!(f, "k = {k} does not index an equilateral triangle of λ-length {p}")
            }
            Error::NotFixed { p, k } => write!(f, "triangle (p = {p}, k = {k}) is not ψ-fixed"),
            Error::NotElliptic => f.write_str("matrix is not elliptic of order 2 or 3"),
            Error::NotConjugate => f.write_str("matrices are not conjugate in PSL(2,Z)"),
            Error::Invariant(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
