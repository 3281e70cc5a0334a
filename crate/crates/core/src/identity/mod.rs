//! Registry of the displayed q-series identities and their verifier.

mod cases;
mod report;

pub use cases::{registry, IdentityCase, MarkerSet, RingKind};
pub use report::{Mismatch, Outcome, VerificationReport};

use crate::error::{Error, Result};

/// Orders above this are rejected as usage errors; expansions this deep
/// are outside the desk scale the crate is built for.
pub const ORDER_CEILING: i64 = 500;

/// Ids of every registered identity, in registry order.
pub fn list_identities() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

/// Verify one identity by truncated expansion at `order` (its default
/// order when `None`). Ids match case-insensitively.
pub fn verify(id: &str, order: Option<i64>) -> Result<VerificationReport> {
    let case = registry()
        .into_iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::Usage(format!("unknown identity id {id:?}")))?;
    case.verify(order)
}

/// Verify every registered identity at `scale` times its default order,
/// spreading the cases over `jobs` worker threads. Reports come back in
/// registry order regardless of scheduling.
pub fn verify_all(scale: f64, jobs: usize) -> Result<Vec<VerificationReport>> {
    if !(scale > 0.0 && scale <= 1.0) {
        return Err(Error::Usage(format!(
            "scale must lie in (0, 1], got {scale}"
        )));
    }
    let cases = registry();
    let jobs = jobs.max(1).min(cases.len().max(1));
    let mut reports: Vec<Option<VerificationReport>> = Vec::new();
    reports.resize_with(cases.len(), || None);

    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut reports);
    let result: Result<()> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..jobs {
            let next = &next;
            let slots = &slots;
            let cases = &cases;
            handles.push(scope.spawn(move || -> Result<()> {
                loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= cases.len() {
                        return Ok(());
                    }
                    let order = scaled_order(cases[i].default_order, scale);
                    let report = cases[i].verify(Some(order))?;
                    slots.lock().expect("report lock")[i] = Some(report);
                }
            }));
        }
        for h in handles {
            h.join().expect("verification worker panicked")?;
        }
        Ok(())
    });
    result?;
    Ok(reports.into_iter().map(|r| r.expect("all slots filled")).collect())
}

fn scaled_order(default_order: i64, scale: f64) -> i64 {
    (((default_order as f64) * scale).ceil() as i64).max(1)
}
