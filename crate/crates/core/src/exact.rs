//! Cusps, points of the upper half-plane and the two norm forms.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A point of `Q ∪ {∞}` in lowest terms.
///
/// The denominator is never negative and `∞` is stored as `1/0`, so two
/// values are equal exactly when their fields are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

impl ExtendedRational {
    /// Reduces `num/den` to its unique representative.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::DegenerateCusp);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    /// Caller guarantees `gcd(num, den) = 1`; only the sign is normalized.
    pub(crate) fn from_coprime(num: BigInt, den: BigInt) -> Self {
        if den.is_zero() {
            Self::infinity()
        } else if den.is_negative() {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self { num: n.into(), den: BigInt::one() }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    /// The finite value, or `None` at `∞`.
    pub fn to_rational(&self) -> Option<BigRational> {
        (!self.is_infinity()).then(|| BigRational::new_raw(self.num.clone(), self.den.clone()))
    }

    /// The `Γ(2)`-orbit of this cusp, read off from the parities of numerator and denominator.
    pub fn cusp_class(&self) -> CuspClass {
        match (self.num.is_odd(), self.den.is_odd()) {
            (false, true) => CuspClass::Zero,
            (true, true) => CuspClass::One,
            (true, false) => CuspClass::Infinity,
            (false, false) => unreachable!("reduced fraction with both terms even"),
        }
    }
}

impl From<BigRational> for ExtendedRational {
    fn from(q: BigRational) -> Self {
        let (num, den) = q.into();
        Self { num, den }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("∞")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The three cusps of `H/Γ(2)`, labelled by the `Γ(2)`-orbit of `0`, `1` and `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CuspClass {
    Zero,
    One,
    Infinity,
}

impl CuspClass {
    pub const ALL: [CuspClass; 3] = [CuspClass::Zero, CuspClass::One, CuspClass::Infinity];

    /// A cusp of this class.
    pub fn representative(self) -> ExtendedRational {
        match self {
            CuspClass::Zero => ExtendedRational::integer(0),
            CuspClass::One => ExtendedRational::integer(1),
            CuspClass::Infinity => ExtendedRational::infinity(),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CuspClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CuspClass::Zero => "ZERO",
            CuspClass::One => "ONE",
            CuspClass::Infinity => "INFINITY",
        })
    }
}

/// The square-free radicand `D` of the imaginary quadratic field `Q(√-D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Radicand {
    /// `Q(i)`.
    One,
    /// `Q(√-3)`, which contains `ω`.
    Three,
}

impl Radicand {
    pub fn value(self) -> u32 {
        match self {
            Radicand::One => 1,
            Radicand::Three => 3,
        }
    }

    fn as_rational(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.value()))
    }
}

/// The point `x + y·√D·i` with `y > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticPoint {
    x: BigRational,
    y: BigRational,
    radicand: Radicand,
}

impl QuadraticPoint {
    pub fn new(x: BigRational, y: BigRational, radicand: Radicand) -> Result<Self, Error> {
        if !y.is_positive() {
            return Err(Error::NotInUpperHalfPlane);
        }
        Ok(Self { x, y, radicand })
    }

    /// `i`, the fixed point of `z ↦ -1/z`.
    pub fn i() -> Self {
        Self { x: BigRational::zero(), y: BigRational::one(), radicand: Radicand::One }
    }

    /// `ω = exp(2πi/3) = -1/2 + (1/2)·√3·i`.
    pub fn omega() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Self { x: -half.clone(), y: half, radicand: Radicand::Three }
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    /// Coefficient of `√D·i`; the imaginary part is `y·√D`.
    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub(crate) fn to_element(&self) -> FieldElement {
        FieldElement { re: self.x.clone(), im: self.y.clone(), radicand: self.radicand }
    }
}

impl fmt::Display for QuadraticPoint {
    /// Written over a common denominator, e.g. `(3 + i√3)/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.x.denom().lcm(self.y.denom());
        let re = (&self.x * BigRational::from_integer(den.clone())).to_integer();
        let im = (&self.y * BigRational::from_integer(den.clone())).to_integer();
        let unit = match self.radicand {
            Radicand::One => "i",
            Radicand::Three => "i√3",
        };
        let im_term = if im.is_one() { unit.into() } else { alloc::format!("{im}{unit}") };
        let body = if re.is_zero() {
            im_term
        } else if re.is_negative() {
            alloc::format!("-{} + {im_term}", -re)
        } else {
            alloc::format!("{re} + {im_term}")
        };
        if den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

/// An element `re + im·√D·i` of `Q(√-D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FieldElement {
    pub re: BigRational,
    pub im: BigRational,
    pub radicand: Radicand,
}

impl FieldElement {
    pub fn rational(q: BigRational, radicand: Radicand) -> Self {
        Self { re: q, im: BigRational::zero(), radicand }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone(), radicand: self.radicand }
    }

    /// `|z|² = re² + D·im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + self.radicand.as_rational() * &self.im * &self.im
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { re: &self.re * q, im: &self.im * q, radicand: self.radicand }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        Some((self.clone() * rhs.conj()).scale(&n.recip()))
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.radicand, rhs.radicand);
        Self { re: self.re + rhs.re, im: self.im + rhs.im, radicand: self.radicand }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im, radicand: self.radicand }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.radicand, rhs.radicand);
        let d = self.radicand.as_rational();
        Self {
            re: &self.re * &rhs.re - d * &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
            radicand: self.radicand,
        }
    }
}

/// The Eisenstein integer `a + bω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into() }
    }

    /// `a² - ab + b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// The twelve images of `a + bω` under units (`±1, ±ω, ±ω²`) and complex conjugation.
    pub fn associates(&self) -> alloc::vec::Vec<EisensteinInt> {
        let mut out = alloc::vec::Vec::with_capacity(12);
        let mut z = self.clone();
        for _ in 0..6 {
            // multiplication by -ω²= 1 + ω: (a + bω)(1 + ω) = (a - b) + aω
            z = EisensteinInt { a: &z.a - &z.b, b: z.a.clone() };
            // conjugate: a + bω̄ = (a - b) - bω
            let bar = EisensteinInt { a: &z.a - &z.b, b: -z.b.clone() };
            out.push(z.clone());
            out.push(bar);
        }
        out
    }

    /// The associate with `0 < b ≤ a` and the smallest `(b, a)`.
    pub fn canonical(&self) -> EisensteinInt {
        self.associates()
            .into_iter()
            .filter(|e| e.b.is_positive() && e.b <= e.a)
            .min_by(|x, y| (&x.b, &x.a).cmp(&(&y.b, &y.a)))
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, _) => write!(f, "{}ω", self.b),
            (false, false) => write!(f, "{} + {}ω", self.a, self.b),
            (false, true) => write!(f, "{} - {}ω", self.a, -&self.b),
        }
    }
}

/// The Gaussian integer `c + di`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInt {
    pub c: BigInt,
    pub d: BigInt,
}

impl GaussianInt {
    pub fn new(c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self { c: c.into(), d: d.into() }
    }

    /// `c² + d²`.
    pub fn norm(&self) -> BigInt {
        &self.c * &self.c + &self.d * &self.d
    }

    /// The eight images under units (`±1, ±i`) and conjugation.
    pub fn associates(&self) -> alloc::vec::Vec<GaussianInt> {
        let mut out = alloc::vec::Vec::with_capacity(8);
        let mut z = self.clone();
        for _ in 0..4 {
            z = GaussianInt { c: -z.d.clone(), d: z.c.clone() };
            out.push(z.clone());
            out.push(GaussianInt { c: z.c.clone(), d: -z.d.clone() });
        }
        out
    }

    /// The associate with `0 < c ≤ d`.
    pub fn canonical(&self) -> GaussianInt {
        self.associates()
            .into_iter()
            .filter(|g| g.c.is_positive() && g.c <= g.d)
            .min()
            .unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c.is_zero(), self.d.is_negative()) {
            (true, _) => write!(f, "{}i", self.d),
            (false, false) => write!(f, "{} + {}i", self.c, self.d),
            (false, true) => write!(f, "{} - {}i", self.c, -&self.d),
        }
    }
}
