//! Equilateral ideal triangles of prime λ-length on `H/Γ(2)` and the order-3
//! automorphism acting on them.
//!
//! Every such triangle has exactly one spike at the cusp `∞`. Lifting that
//! spike to `1/0` and translating by `z ↦ z + 2` (which generates the
//! stabilizer of `∞` in `Γ(2)`) puts the finite vertices at `k/p` and
//! `(k+1)/p` with `0 < k/p < (k+1)/p < 2`. The index `k` is the canonical
//! name of the triangle on the quotient surface.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{CuspClass, ExtendedRational, QuadraticPoint};
use crate::lambda::lambda_length_between;
use crate::modular::{coset_representatives, reduce_cusp_to_infinity, UnimodularMatrix};
use crate::primes::ensure_odd_prime;
use crate::Error;

/// The triangle with vertices `∞, k/p, (k+1)/p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTriangle {
    p: BigInt,
    k: BigInt,
}

impl CanonicalTriangle {
    pub fn new(p: impl Into<BigInt>, k: impl Into<BigInt>) -> Result<Self, Error> {
        let (p, k) = (p.into(), k.into());
        ensure_odd_prime(&p)?;
        if !is_valid_index(&p, &k) {
            return Err(Error::InvalidTriangle { p, k });
        }
        Ok(Self { p, k })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn vertices(&self) -> [ExtendedRational; 3] {
        [
            ExtendedRational::infinity(),
            ExtendedRational::from_coprime(self.k.clone(), self.p.clone()),
            ExtendedRational::from_coprime(&self.k + 1u32, self.p.clone()),
        ]
    }

    /// λ-lengths of the edges `(∞, k/p)`, `(k/p, (k+1)/p)` and `((k+1)/p, ∞)`.
    pub fn edge_lambda_lengths(&self) -> [BigInt; 3] {
        let [x, y, z] = self.vertices();
        [lambda_length_between(&x, &y), lambda_length_between(&y, &z), lambda_length_between(&z, &x)]
    }

    pub fn is_equilateral(&self) -> bool {
        self.edge_lambda_lengths().iter().all(|l| *l == self.p)
    }

    pub fn cusp_classes(&self) -> [CuspClass; 3] {
        self.vertices().map(|v| v.cusp_class())
    }

    /// Each spike ends at a different cusp of `H/Γ(2)`.
    pub fn is_properly_immersed(&self) -> bool {
        let [x, y, z] = self.cusp_classes();
        x != y && y != z && z != x
    }

    /// Image of this triangle under the automorphism of `H/Γ(2)` induced by `m`.
    ///
    /// The lifted vertices are mapped by `m`, the image vertex in the cusp
    /// class of `∞` is sent back to `1/0` by an element of `Γ(2)`, and the
    /// result is translated into the strip.
    pub fn transport(&self, m: &UnimodularMatrix) -> Result<CanonicalTriangle, Error> {
        canonicalize(&self.p, self.vertices().map(|v| m.apply_to_cusp(&v)))
    }

    /// Image under the order-3 automorphism induced by `ψ: z ↦ (z+1)/(-z)`.
    pub fn psi_image(&self) -> CanonicalTriangle {
        self.transport(&UnimodularMatrix::psi())
            .expect("ψ maps properly immersed triangles to properly immersed triangles")
    }

    /// `p | k² + k + 1`, the arithmetic form of `psi_image(t) == t`.
    pub fn satisfies_fixed_congruence(&self) -> bool {
        ((&self.k * &self.k + &self.k + 1u32) % &self.p).is_zero()
    }

    /// The order-3 element `(k, -(k²+k+1)/p; p, -(k+1))` cycling
    /// `∞ → k/p → (k+1)/p → ∞`, when its entries are integers.
    pub fn stabilizer_matrix(&self) -> Option<UnimodularMatrix> {
        let q = &self.k * &self.k + &self.k + 1u32;
        let (b, rem) = q.div_rem(&self.p);
        if !rem.is_zero() {
            return None;
        }
        Some(UnimodularMatrix::normalized(self.k.clone(), -b, self.p.clone(), -(&self.k + 1u32)))
    }

    /// Fixed point in `H` of the stabilizer, `((2k+1) + i√3)/(2p)`.
    pub fn barycenter(&self) -> Result<QuadraticPoint, Error> {
        let not_fixed = || Error::NotFixed { p: self.p.clone(), k: self.k.clone() };
        self.stabilizer_matrix()
            .ok_or_else(not_fixed)?
            .elliptic_fixed_point()
            .ok_or(Error::Invariant("stabilizer is not elliptic"))
    }
}

impl fmt::Display for CanonicalTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.vertices();
        write!(f, "({x}, {y}, {z})")
    }
}

fn is_valid_index(p: &BigInt, k: &BigInt) -> bool {
    let p_minus_one = p - 1u32;
    *k >= BigInt::one() && *k <= &p_minus_one * 2 && *k != p_minus_one && k != p
}

/// `k ∈ {1, …, 2p-2} \ {p-1, p}`, without checking `p`.
pub(crate) fn triangle_indices(p: &BigInt) -> Vec<BigInt> {
    let last = (p - 1u32) * 2;
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while k <= last {
        if is_valid_index(p, &k) {
            out.push(k.clone());
        }
        k += 1u32;
    }
    out
}

/// Canonical name of the quotient triangle with the given lifted vertices.
fn canonicalize(p: &BigInt, vertices: [ExtendedRational; 3]) -> Result<CanonicalTriangle, Error> {
    let mut at_infinity = vertices.iter().enumerate().filter(|(_, v)| v.cusp_class() == CuspClass::Infinity);
    let (spike, _) = at_infinity.next().ok_or(Error::Invariant("no spike at the cusp ∞"))?;
    if at_infinity.next().is_some() {
        return Err(Error::Invariant("two spikes at the cusp ∞"));
    }
    let gamma = reduce_cusp_to_infinity(&vertices[spike])?;
    let mut finite =
        vertices.iter().enumerate().filter(|&(i, _)| i != spike).map(|(_, v)| gamma.apply_to_cusp(v));
    let (u, w) = (finite.next().unwrap(), finite.next().unwrap());
    if u.den() != p || w.den() != p {
        return Err(Error::Invariant("lifted edge at ∞ does not have λ-length p"));
    }
    if (u.num() - w.num()).magnitude() != &One::one() {
        return Err(Error::Invariant("opposite edge does not have λ-length p"));
    }
    let low = u.num().min(w.num());
    let k = low.mod_floor(&(p * 2));
    if !is_valid_index(p, &k) {
        return Err(Error::Invariant("translated triangle left the strip"));
    }
    Ok(CanonicalTriangle { p: p.clone(), k })
}

/// The `2(p-2)` equilateral triangles of λ-length `p`, ascending in `k`.
pub fn enumerate_triangles(p: &BigInt) -> Result<Vec<CanonicalTriangle>, Error> {
    ensure_odd_prime(p)?;
    Ok(triangle_indices(p).into_iter().map(|k| CanonicalTriangle { p: p.clone(), k }).collect())
}

/// The triangles split into orbits of the order-3 automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    p: BigInt,
    fixed: Vec<CanonicalTriangle>,
    three_cycles: Vec<[CanonicalTriangle; 3]>,
}

impl OrbitDecomposition {
    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// Triangles left invariant, ascending in `k`.
    pub fn fixed(&self) -> &[CanonicalTriangle] {
        &self.fixed
    }

    /// Orbits `[t, ψt, ψ²t]` of length 3, sorted by their least element `t`.
    pub fn three_cycles(&self) -> &[[CanonicalTriangle; 3]] {
        &self.three_cycles
    }

    pub fn triangle_count(&self) -> usize {
        self.fixed.len() + 3 * self.three_cycles.len()
    }
}

pub fn orbit_decomposition(p: &BigInt) -> Result<OrbitDecomposition, Error> {
    let triangles = enumerate_triangles(p)?;
    let mut seen = BTreeSet::new();
    let mut fixed = Vec::new();
    let mut three_cycles = Vec::new();
    for t in triangles {
        if seen.contains(t.k()) {
            continue;
        }
        let t1 = t.psi_image();
        if t1 == t {
            seen.insert(t.k.clone());
            fixed.push(t);
            continue;
        }
        let t2 = t1.psi_image();
        if t2 == t || t2 == t1 || t2.psi_image() != t {
            return Err(Error::Invariant("ψ-orbit is not of length 1 or 3"));
        }
        for x in [&t, &t1, &t2] {
            if !seen.insert(x.k.clone()) {
                return Err(Error::Invariant("ψ-orbits overlap"));
            }
        }
        three_cycles.push([t, t1, t2]);
    }
    Ok(OrbitDecomposition { p: p.clone(), fixed, three_cycles })
}

/// Spike incidences between the triangles of λ-length `p` and the three cusps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceCensus {
    pub p: BigInt,
    /// Number of triangles `F`.
    pub triangle_count: usize,
    /// Distinct triangles obtained by transporting the `∞`-incident family
    /// to each cusp with a coset representative, indexed by [`CuspClass::index`].
    pub transported: [usize; 3],
    /// Spikes of the canonical triangles counted per cusp class.
    pub direct: [usize; 3],
}

impl IncidenceCensus {
    pub fn spike_incidences(&self) -> usize {
        self.transported.iter().sum()
    }

    /// Every cusp sees `2(p-2)` triangles and the total is `3F`.
    pub fn holds(&self) -> bool {
        let expected = triangle_indices(&self.p).len();
        self.triangle_count == expected
            && self.transported.iter().all(|&n| n == expected)
            && self.direct == self.transported
            && self.spike_incidences() == 3 * self.triangle_count
    }
}

pub fn incidence_census(p: &BigInt) -> Result<IncidenceCensus, Error> {
    let triangles = enumerate_triangles(p)?;
    let mut direct = [0usize; 3];
    for t in &triangles {
        for class in t.cusp_classes() {
            direct[class.index()] += 1;
        }
    }
    let reps = coset_representatives();
    let mut transported = [0usize; 3];
    for class in CuspClass::ALL {
        let sigma = reps
            .iter()
            .find(|r| r.cusp_permutation()[CuspClass::Infinity.index()] == class)
            .expect("coset representatives realize all of S₃");
        let mut images = BTreeSet::new();
        for t in &triangles {
            let moved = t.vertices().map(|v| sigma.apply_to_cusp(&v));
            if moved[0].cusp_class() != class {
                return Err(Error::Invariant("transported spike missed its cusp"));
            }
            images.insert(canonicalize(p, moved)?.k);
        }
        transported[class.index()] = images.len();
    }
    Ok(IncidenceCensus { p: p.clone(), triangle_count: triangles.len(), transported, direct })
}
