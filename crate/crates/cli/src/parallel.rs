use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use motzkin_row::verify::{audit_unit, audit_units, AuditReport, Check};
use motzkin_row::{Limits, Result};

/// Runs the units of an audit on `workers` threads. The merged report does not
/// depend on the number of workers or on scheduling.
pub fn audit(check: Check, max_scope: usize, limits: &Limits, workers: usize) -> Result<AuditReport> {
    let units = audit_units(check, max_scope);
    if workers <= 1 || units.len() <= 1 {
        return motzkin_row::verify::audit(check, max_scope, limits);
    }
    let next = AtomicUsize::new(0);
    let results = Mutex::new(Vec::with_capacity(units.len()));
    thread::scope(|scope| {
        for _ in 0..workers.min(units.len()) {
            scope.spawn(|| loop {
                // largest ranges first so the long units do not start last
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&unit) = units.iter().rev().nth(i) else { break };
                let part = audit_unit(check, unit, max_scope, limits);
                results.lock().expect("worker panicked").push(part);
            });
        }
    });
    let parts = results.into_inner().expect("worker panicked").into_iter().collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::merge(check, max_scope, parts))
}
