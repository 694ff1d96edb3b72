//! Claim registry and runner.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::claims;

pub const DEFAULT_SEED: u64 = 0x5eed_b2a1d;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    RecordedDiscrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::RecordedDiscrepancy => "recorded-discrepancy",
        })
    }
}

/// What a check reports before timing and bookkeeping are attached.
pub struct Outcome {
    pub status: Status,
    pub details: String,
}

impl Outcome {
    pub fn pass(details: impl Into<String>) -> Self {
        Outcome { status: Status::Pass, details: details.into() }
    }

    pub fn fail(details: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, details: details.into() }
    }

    pub fn discrepancy(details: impl Into<String>) -> Self {
        Outcome { status: Status::RecordedDiscrepancy, details: details.into() }
    }

    /// Pass when `ok`, otherwise fail, with the same details either way.
    pub fn check(ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(details)
        }
    }
}

pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn(&mut ChaCha8Rng) -> crystbraid_core::Result<Outcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub status: Status,
    pub details: String,
    /// Wall-clock milliseconds; left out of reports unless asked for, so
    /// that a run's output stays a function of its seed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub records: Vec<ClaimRecord>,
}

impl SuiteReport {
    pub fn required_failures(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{:<26} {:<20} {}", r.claim, r.status.to_string(), r.details));
            if let Some(ms) = r.runtime_ms {
                out.push_str(&format!(" [{ms} ms]"));
            }
            out.push('\n');
        }
        let count = |s| self.records.iter().filter(|r| r.status == s).count();
        out.push_str(&format!(
            "{} claims: {} pass, {} fail, {} recorded-discrepancy\n",
            self.records.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::RecordedDiscrepancy)
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

// FNV-1a, so each claim draws from its own stream whatever the filter.
fn claim_seed(seed: u64, id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

pub fn matching(filter: Option<&str>) -> Result<Vec<&'static Claim>, SuiteError> {
    let all = claims::registry();
    let picked: Vec<_> = all.iter().filter(|c| filter.map_or(true, |p| c.id.starts_with(p))).collect();
    if picked.is_empty() {
        return Err(SuiteError::UnknownClaim(filter.unwrap_or_default().to_string()));
    }
    Ok(picked)
}

/// Runs every claim whose id starts with `filter`, in parallel, and reports
/// them in registry order.
pub fn run_suite(filter: Option<&str>, seed: u64, timings: bool) -> Result<SuiteReport, SuiteError> {
    let picked = matching(filter)?;
    let records = std::thread::scope(|s| {
        let handles: Vec<_> = picked
            .iter()
            .map(|c| {
                s.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(claim_seed(seed, c.id));
                    let start = Instant::now();
                    let out = (c.run)(&mut rng).unwrap_or_else(|e| Outcome::fail(format!("error: {e}")));
                    ClaimRecord {
                        claim: c.id.to_string(),
                        status: out.status,
                        details: out.details,
                        runtime_ms: timings.then(|| start.elapsed().as_millis()),
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("claim panicked")).collect()
    });
    Ok(SuiteReport { records })
}
