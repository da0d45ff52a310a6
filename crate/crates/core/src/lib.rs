//! Exact arithmetic on the three-punctured sphere `H/Γ(2)`.
//!
//! Cusps are extended rationals, group elements are normalized integer
//! matrices of `PSL(2,Z)`, and λ-lengths of arcs between cusps are integer
//! determinants. On top of that the crate enumerates the equilateral ideal
//! triangles of prime λ-length `p` incident to the cusp at infinity, lets the
//! order-3 automorphism induced by `z ↦ (z+1)/(-z)` act on them, and turns a
//! fixed triangle into a representation `p = a² - ab + b²`. The Gaussian
//! analogue `p = c² + d²` runs through order-2 elements and arc midpoints.
//!
//! Everything is exact: integers are arbitrary precision and there is no
//! floating point anywhere in the crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod lambda;
pub mod modular;
pub mod primes;
pub mod solver;
pub mod triangles;

pub use error::Error;
pub use exact::{CuspClass, EisensteinInt, ExtendedRational, GaussianInt, QuadraticPoint, Radicand};
pub use lambda::{enumerate_incident_arcs, Arc, FordCircle};
pub use modular::{coset_representatives, reduce_cusp_to_infinity, UnimodularMatrix};
pub use solver::{
    brute_force_eisenstein, brute_force_gaussian, conjugate_to_model, represent_eisenstein,
    represent_gaussian, verify_prime, verify_theorems, NormValue, NormWitness, PrimeReport, Ring, RingCheck,
    TriangleChecks, VerificationReport,
};
pub use triangles::{
    enumerate_triangles, incidence_census, orbit_decomposition, CanonicalTriangle, IncidenceCensus,
    OrbitDecomposition,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
