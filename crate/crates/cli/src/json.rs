//! JSON shapes for `represent --json`, `triangles --json` and `summary.json`.
//!
//! Integers are emitted as JSON numbers of arbitrary size. Maps are sorted by
//! key, so output is byte-stable.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use trinorm_core::{CanonicalTriangle, NormWitness, OrbitDecomposition, Ring, UnimodularMatrix};
use trinorm_core::{Error, VerificationReport};

pub fn number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn matrix(m: &UnimodularMatrix) -> Value {
    Value::Array(m.entries().into_iter().map(number).collect())
}

fn pair((a, b): (BigInt, BigInt)) -> Value {
    json!([number(&a), number(&b)])
}

/// `{p, ring, witness, canonical, certificate: {k, stabilizer, conjugator}, norm_check}`.
///
/// An absent representation has `witness`, `canonical` and `certificate` null
/// and `norm_check` false.
pub fn witness(p: &BigInt, ring: Ring, w: Option<&NormWitness>) -> Value {
    match w {
        Some(w) => json!({
            "p": number(p),
            "ring": ring.to_string(),
            "witness": pair(w.value.pair()),
            "canonical": pair(w.value.canonical().pair()),
            "certificate": {
                "k": number(&w.k),
                "stabilizer": matrix(&w.elliptic),
                "conjugator": matrix(&w.conjugator),
            },
            "norm_check": w.value.norm() == *p && w.audit(),
        }),
        None => json!({
            "p": number(p),
            "ring": ring.to_string(),
            "witness": null,
            "canonical": null,
            "certificate": null,
            "norm_check": false,
        }),
    }
}

pub fn triangles(
    p: &BigInt,
    triangles: &[CanonicalTriangle],
    orbits: Option<&OrbitDecomposition>,
) -> Result<Value, Error> {
    let mut rows = Vec::with_capacity(triangles.len());
    for t in triangles {
        let mut row = json!({
            "k": number(t.k()),
            "vertices": t.vertices().map(|v| v.to_string()),
            "lambda_lengths": t.edge_lambda_lengths().iter().map(number).collect::<Vec<_>>(),
            "cusp_classes": t.cusp_classes().map(|c| c.to_string()),
        });
        if let Some(d) = orbits {
            let fixed = d.fixed().contains(t);
            let orbit: Vec<Value> = match d.three_cycles().iter().find(|c| c.contains(t)) {
                Some(cycle) => cycle.iter().map(|c| number(c.k())).collect(),
                None => vec![number(t.k())],
            };
            row["fixed"] = fixed.into();
            row["orbit"] = orbit.into();
            row["barycenter"] = if fixed { t.barycenter()?.to_string().into() } else { Value::Null };
        }
        rows.push(row);
    }
    Ok(json!({ "p": number(p), "triangles": rows }))
}

/// Aggregate view of a sweep. Contains nothing that depends on scheduling or time.
pub fn summary(report: &VerificationReport) -> Value {
    let ring_summary = |ring: Ring| {
        let witnesses: Vec<Value> = report
            .rows
            .iter()
            .filter_map(|r| {
                let w = r.ring(ring).witness.as_ref()?;
                Some(json!({
                    "p": r.p,
                    "witness": pair(w.value.pair()),
                    "canonical": pair(w.value.canonical().pair()),
                }))
            })
            .collect();
        json!({
            "represented": witnesses.len(),
            "not_represented": report.rows.len() - witnesses.len(),
            "checks_failed": report.rows.iter().filter(|r| !r.ring(ring).passed()).count(),
            "witnesses": witnesses,
        })
    };
    json!({
        "p_max": report.p_max,
        "primes": report.rows.len(),
        "passed": report.passed(),
        "failures": report.failures().map(|r| r.p).collect::<Vec<_>>(),
        "triangles": report.rows.iter().map(|r| r.triangle_count).sum::<usize>(),
        "fixed_triangles": report.rows.iter().map(|r| r.fixed_count).sum::<usize>(),
        "eisenstein": ring_summary(Ring::Eisenstein),
        "gaussian": ring_summary(Ring::Gaussian),
    })
}
