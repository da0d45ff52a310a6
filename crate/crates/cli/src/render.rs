//! Deterministic SVG of Ford circles, the lifts of the arcs at `∞` and the
//! triangles of λ-length `p`.
//!
//! Geometry is exact up to the moment a coordinate is written: every number is
//! an exact rational (or a rational multiple of `√3` for barycenters) that is
//! truncated to 40 decimals and then rounded to 12 significant digits.

use std::fmt::Write as _;

use anyhow::bail;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use trinorm_core::{enumerate_triangles, orbit_decomposition, ExtendedRational, FordCircle};

/// Pixels per unit of real-axis length.
pub const SCALE: u32 = 512;
const SIGNIFICANT: usize = 12;
const GUARD: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub window: (BigRational, BigRational),
    pub den_limit: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { window: (BigRational::zero(), BigRational::from_integer(2.into())), den_limit: 32 }
    }
}

impl Options {
    pub fn new(window: Option<Vec<BigRational>>, den_limit: Option<u64>) -> anyhow::Result<Self> {
        let mut opts = Self::default();
        if let Some(w) = window {
            let [a, b]: [BigRational; 2] =
                w.try_into().map_err(|_| anyhow::anyhow!("--window takes two values"))?;
            if a >= b {
                bail!("degenerate window [{a}, {b}]: the left end must be smaller than the right");
            }
            opts.window = (a, b);
        }
        if let Some(n) = den_limit {
            if n == 0 {
                bail!("--den-limit must be at least 1");
            }
            opts.den_limit = n;
        }
        Ok(opts)
    }
}

/// Value scaled by `10^GUARD`, truncated toward zero.
fn fixed(q: &BigRational) -> BigInt {
    q.numer() * BigInt::from(10u32).pow(GUARD) / q.denom()
}

/// `c·√3` scaled by `10^GUARD`, truncated, for `c ≥ 0`.
fn fixed_sqrt3(c: &BigRational) -> BigInt {
    let ten = BigInt::from(10u32).pow(2 * GUARD);
    (BigInt::from(3u32) * c.numer() * c.numer() * ten / (c.denom() * c.denom())).sqrt()
}

/// A fixed-point value rounded half away from zero to 12 significant digits,
/// written without an exponent and without trailing zeros.
fn decimal(v: &BigInt) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut m = v.abs();
    let mut shift = 0u32;
    let len = m.to_string().len();
    if len > SIGNIFICANT {
        let drop = (len - SIGNIFICANT) as u32;
        let unit = BigInt::from(10u32).pow(drop);
        let (q, r) = m.div_rem(&unit);
        m = if r * 2u32 >= unit { q + 1u32 } else { q };
        shift = drop;
        if m.to_string().len() > SIGNIFICANT {
            m /= 10u32;
            shift += 1;
        }
    }
    let digits = m.to_string();
    let mut out = String::new();
    if v.is_negative() {
        out.push('-');
    }
    let exponent = shift as i64 - GUARD as i64;
    if exponent >= 0 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', exponent as usize));
        return out;
    }
    let frac = (-exponent) as usize;
    let padded = if digits.len() <= frac {
        format!("{}{digits}", "0".repeat(frac - digits.len() + 1))
    } else {
        digits
    };
    let (int, fraction) = padded.split_at(padded.len() - frac);
    let fraction = fraction.trim_end_matches('0');
    out.push_str(int);
    if !fraction.is_empty() {
        out.push('.');
        out.push_str(fraction);
    }
    out
}

fn num(q: &BigRational) -> String {
    decimal(&fixed(q))
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

struct Frame {
    left: BigRational,
    top: BigRational,
    scale: BigRational,
}

impl Frame {
    fn x(&self, x: &BigRational) -> BigRational {
        (x - &self.left) * &self.scale
    }

    fn y(&self, y: &BigRational) -> BigRational {
        (&self.top - y) * &self.scale
    }
}

/// Renders the picture for the odd prime `p`.
pub fn render(p: &BigInt, opts: &Options) -> anyhow::Result<String> {
    let triangles = enumerate_triangles(p)?;
    let orbits = orbit_decomposition(p)?;
    let (a, b) = &opts.window;
    let top = rat(5, 4);
    let frame = Frame { left: a.clone(), top: top.clone(), scale: BigRational::from_integer(SCALE.into()) };
    let zero = BigRational::zero();
    let width = num(&((b - a) * &frame.scale));
    let height = num(&(&top * &frame.scale));
    let ground = num(&frame.y(&zero));

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )?;
    writeln!(w, "<title>Triangles of λ-length {p} on H/Γ(2), window [{a}, {b}]</title>")?;
    writeln!(
        w,
        "<style>.horoball{{fill:#e8eef7}}.axis{{stroke:#000;stroke-width:1}}\
         .ford circle{{fill:none;stroke:#7a7a7a;stroke-width:0.5}}.lift{{stroke:#3465a4;stroke-width:0.75}}\
         .triangle{{fill:#fce94f;fill-opacity:0.25;stroke:#c4a000;stroke-width:1}}\
         .triangle.fixed{{fill:#ef2929;fill-opacity:0.45;stroke:#a40000;stroke-width:1.5}}\
         .barycenter{{fill:#000}}</style>"
    )?;
    writeln!(
        w,
        r#"<rect class="horoball" x="0" y="0" width="{width}" height="{}"/>"#,
        num(&frame.y(&BigRational::one()))
    )?;

    writeln!(w, r#"<g class="ford">"#)?;
    for q in 1..=opts.den_limit {
        let r = rat(1, 2 * BigInt::from(q) * BigInt::from(q));
        let lo = ((a - &r) * BigInt::from(q)).ceil().to_integer();
        let hi = ((b + &r) * BigInt::from(q)).floor().to_integer();
        let mut n = lo;
        while n <= hi {
            if n.gcd(&BigInt::from(q)).is_one() {
                let circle = FordCircle::at(&ExtendedRational::new(n.clone(), q)?);
                let (cx, cy) = circle.center().expect("finite tangency point");
                let radius = circle.radius().expect("finite tangency point");
                writeln!(
                    w,
                    r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                    num(&frame.x(&cx)),
                    num(&frame.y(&cy)),
                    num(&(radius * &frame.scale))
                )?;
            }
            n += 1u32;
        }
    }
    writeln!(w, "</g>")?;

    writeln!(w, r#"<g class="lifts">"#)?;
    let two_p = p * 2u32;
    let mut j = (a * p).ceil().to_integer();
    let last = (b * p).floor().to_integer();
    while j <= last {
        let residue = j.mod_floor(&two_p);
        if !residue.is_zero() && residue != *p {
            let x = num(&frame.x(&BigRational::new(j.clone(), p.clone())));
            writeln!(w, r#"<line class="lift" x1="{x}" y1="{ground}" x2="{x}" y2="0"/>"#)?;
        }
        j += 1u32;
    }
    writeln!(w, "</g>")?;

    let radius = num(&(rat(1, p * 2u32) * &frame.scale));
    let mut marks = Vec::new();
    writeln!(w, r#"<g class="triangles">"#)?;
    for t in &triangles {
        let is_fixed = orbits.fixed().contains(t);
        let class = if is_fixed { "triangle fixed" } else { "triangle" };
        let left = BigRational::new(t.k().clone(), p.clone());
        let right = BigRational::new(t.k() + 1u32, p.clone());
        let two = BigRational::from_integer(2.into());
        let mut m = ((a - &right) / &two).floor().to_integer();
        let m_last = ((b - &left) / &two).ceil().to_integer();
        while m <= m_last {
            let shift = BigRational::from_integer(&m * 2u32);
            let (l, r) = (&left + &shift, &right + &shift);
            if &r > a && &l < b {
                let (xl, xr) = (num(&frame.x(&l)), num(&frame.x(&r)));
                writeln!(
                    w,
                    r#"<path class="{class}" d="M {xl} 0 L {xl} {ground} A {radius} {radius} 0 0 1 {xr} {ground} L {xr} 0 Z"><title>k = {}</title></path>"#,
                    t.k()
                )?;
                if is_fixed {
                    let centre = t.barycenter()?;
                    let cx = num(&frame.x(&(centre.x() + &shift)));
                    let cy =
                        decimal(&(fixed(&(&top * &frame.scale)) - fixed_sqrt3(&(centre.y() * &frame.scale))));
                    marks.push(format!(
                        r#"<circle class="barycenter" cx="{cx}" cy="{cy}" r="2.5"><title>{centre}</title></circle>"#
                    ));
                }
            }
            m += 1u32;
        }
    }
    writeln!(w, "</g>")?;
    writeln!(w, r#"<g class="barycenters">"#)?;
    for mark in marks {
        writeln!(w, "{mark}")?;
    }
    writeln!(w, "</g>")?;
    writeln!(w, r#"<line class="axis" x1="0" y1="{ground}" x2="{width}" y2="{ground}"/>"#)?;
    writeln!(w, "</svg>")?;
    Ok(svg)
}
