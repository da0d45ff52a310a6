//! One CSV row per prime per ring.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use trinorm_core::{PrimeReport, Ring, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RingName {
    Eisenstein,
    Gaussian,
}

impl From<Ring> for RingName {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Eisenstein => RingName::Eisenstein,
            Ring::Gaussian => RingName::Gaussian,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Represented,
    NoRepresentation,
}

/// Sweeps stay far below `2^63`, so machine integers are enough here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub p: u64,
    pub ring: RingName,
    pub status: Status,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub fixed_count: u64,
    pub triangle_count: u64,
    pub arc_count: u64,
    pub checks_passed: bool,
}

impl ReportRow {
    pub fn new(report: &PrimeReport, ring: Ring) -> Self {
        let check = report.ring(ring);
        let (a, b) = match &check.witness {
            Some(w) => {
                let (a, b) = w.value.pair();
                (a.to_i64(), b.to_i64())
            }
            None => (None, None),
        };
        Self {
            p: report.p,
            ring: ring.into(),
            status: if check.witness.is_some() { Status::Represented } else { Status::NoRepresentation },
            a,
            b,
            fixed_count: report.fixed_count as u64,
            triangle_count: report.triangle_count as u64,
            arc_count: report.arc_count as u64,
            checks_passed: report.triangles.all() && check.passed(),
        }
    }
}

/// Eisenstein then Gaussian for each prime, primes ascending.
pub fn rows(report: &VerificationReport) -> Vec<ReportRow> {
    report
        .rows
        .iter()
        .flat_map(|r| [ReportRow::new(r, Ring::Eisenstein), ReportRow::new(r, Ring::Gaussian)])
        .collect()
}

pub fn write_csv_to(out: impl Write, rows: &[ReportRow]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv(path: &Path, rows: &[ReportRow]) -> anyhow::Result<()> {
    let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    write_csv_to(std::io::BufWriter::new(file), rows).with_context(|| format!("writing {}", path.display()))
}

pub fn read_csv(path: &Path) -> anyhow::Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_path(path).with_context(|| format!("opening {}", path.display()))?;
    r.deserialize().collect::<Result<_, _>>().with_context(|| format!("reading {}", path.display()))
}
