//! Cross-checks between the counting formulas, the polygon model and quiver
//! mutation.
//!
//! The same number — mutation classes of rank-n coloured quivers — is
//! computed three independent ways (closed formula, angulations up to
//! rotation, breadth-first search over the mutation graph), and the
//! structural facts tying the models together (mutation commutes with
//! taking the quiver of an angulation, mutation has period m+1, factoring
//! out a border cell deletes a quiver vertex) are checked exhaustively on
//! small polygons. [`VerifyOptions::corrupt_colour_convention`] deliberately
//! breaks the colour convention to demonstrate the checks are not vacuous.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use num::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{count_coloured_quivers, num_indecomposables, Count};
use crate::geometry::{
    all_m_diagonals, border_edges, count_rotation_classes, for_each_angulation, Angulation,
    PolygonParams,
};
use crate::quiver::{ColouredQuiver, QuiverError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("mutation class exceeded the limit of {limit} quivers ({found} found)")]
    LimitExceeded { limit: u64, found: u64 },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// The rank-n quiver of the fan angulation: a linear chain
/// `0 -> 1 -> ... -> n-1` of colour-0 arrows.
pub fn seed_quiver(n: usize, m: u32) -> ColouredQuiver {
    let mut q = ColouredQuiver::new(m, n);
    for i in 1..n {
        q.set_arrow_pair(i - 1, i, 0, 1);
    }
    q
}

/// A mutation class, one representative quiver per isomorphism class.
#[derive(Debug)]
pub struct MutationClass {
    pub members: Vec<ColouredQuiver>,
}

/// Explores the mutation graph breadth-first from `start`, deduplicating by
/// canonical key. `limit` aborts runaway explorations (a mutation class of
/// this theory is always finite, so hitting the limit signals a bug).
pub fn bfs_mutation_class(
    start: &ColouredQuiver,
    limit: Option<u64>,
) -> Result<MutationClass, VerifyError> {
    let mut seen = HashSet::new();
    seen.insert(start.canonical_key()?);
    let mut queue = VecDeque::from([start.clone()]);
    let mut members = Vec::new();
    while let Some(q) = queue.pop_front() {
        for j in 0..q.vertex_count() {
            let next = q.mutate(j)?;
            let key = next.canonical_key()?;
            if seen.insert(key) {
                if let Some(limit) = limit {
                    if seen.len() as u64 > limit {
                        return Err(VerifyError::LimitExceeded {
                            limit,
                            found: seen.len() as u64,
                        });
                    }
                }
                queue.push_back(next);
            }
        }
        members.push(q);
    }
    Ok(MutationClass { members })
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub n: u64,
    pub m: u64,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl CheckResult {
    fn finish(
        name: &str,
        n: u64,
        m: u64,
        expected: String,
        observed: String,
        passed: bool,
        started: Instant,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            n,
            m,
            expected,
            observed,
            passed,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {} n={} m={}: expected {}, observed {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.n,
            self.m,
            self.expected,
            self.observed,
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        write!(
            f,
            "{} of {} checks passed",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        )
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Replace every quiver read off an angulation by its colour mirror.
    /// This must make the commutation check fail (first at n=2, m=2),
    /// demonstrating the check distinguishes the two possible conventions.
    pub corrupt_colour_convention: bool,
    /// The breadth-first search aborts after `factor * expected` quivers.
    pub bfs_limit_factor: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            corrupt_colour_convention: false,
            bfs_limit_factor: 10,
        }
    }
}

/// Runs every check on every rank/colour pair in `1..=n_max` × `1..=m_max`.
pub fn verify_all(n_max: u64, m_max: u64, options: &VerifyOptions) -> VerificationReport {
    let mut checks = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            verify_pair(n, m, options, &mut checks);
        }
    }
    VerificationReport { checks }
}

/// Tracks pass/fail over many exhaustively enumerated cases, remembering
/// the first failure for the report.
struct CaseTally {
    checked: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl CaseTally {
    fn new() -> Self {
        CaseTally {
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn observed(&self) -> String {
        if self.failures == 0 {
            format!("ok ({} cases)", self.checked)
        } else {
            format!(
                "{} of {} cases failed, first: {}",
                self.failures,
                self.checked,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }

    fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn verify_pair(n: u64, m: u64, options: &VerifyOptions, out: &mut Vec<CheckResult>) {
    let params = PolygonParams::new((n + 1) as u32, m as u32)
        .expect("verification grid parameters are valid");
    let assign = |a: &Angulation| {
        let q = a.quiver_of();
        if options.corrupt_colour_convention {
            q.mirror_colours()
        } else {
            q
        }
    };
    let period = (m + 1) as usize;

    // the same count three ways
    let started = Instant::now();
    let expected = count_coloured_quivers(n, m);
    let geometric = count_rotation_classes(&params);
    let limit = expected
        .to_u64()
        .map(|e| e.saturating_mul(options.bfs_limit_factor));
    let (bfs_text, class) = match bfs_mutation_class(&seed_quiver(n as usize, m as u32), limit) {
        Ok(class) => (class.members.len().to_string(), Some(class)),
        Err(e) => (format!("error: {e}"), None),
    };
    let passed = Count::from(geometric) == expected
        && class
            .as_ref()
            .is_some_and(|c| Count::from(c.members.len() as u64) == expected);
    out.push(CheckResult::finish(
        "count-agreement",
        n,
        m,
        expected.to_string(),
        format!("geometry={geometric}, bfs={bfs_text}"),
        passed,
        started,
    ));

    // quiver mutation followed m+1 times returns the original quiver,
    // on every member of the mutation class
    let started = Instant::now();
    let mut tally = CaseTally::new();
    for (index, member) in class.iter().flat_map(|c| c.members.iter().enumerate()) {
        for j in 0..member.vertex_count() {
            let mut cur = member.clone();
            let mut failed = None;
            for step in 0..period {
                match cur.mutate(j) {
                    Ok(next) => cur = next,
                    Err(e) => {
                        failed = Some(format!("step {step} errored: {e}"));
                        break;
                    }
                }
            }
            let ok = failed.is_none() && cur == *member;
            tally.record(ok, || {
                failed.unwrap_or_else(|| format!("class member {index}, vertex {j}"))
            });
        }
    }
    out.push(CheckResult::finish(
        "quiver-mutation-periodicity",
        n,
        m,
        format!("identity after {period} mutations"),
        tally.observed(),
        tally.passed() && class.is_some(),
        started,
    ));

    // same periodicity on the polygon side, tracking the moving diagonal
    let started = Instant::now();
    let mut tally = CaseTally::new();
    for_each_angulation(&params, |a| {
        for &d in a.diagonals() {
            let mut cur = a.clone();
            let mut cd = d;
            let mut failed = None;
            for step in 0..period {
                match cur.mutate_at(cd) {
                    Ok((next, nd)) => {
                        cur = next;
                        cd = nd;
                    }
                    Err(e) => {
                        failed = Some(format!("step {step} errored: {e}"));
                        break;
                    }
                }
            }
            let ok = failed.is_none() && cur == *a && cd == d;
            tally.record(ok, || {
                failed.unwrap_or_else(|| format!("angulation {}, diagonal {d}", a.to_compact()))
            });
        }
    });
    out.push(CheckResult::finish(
        "diagonal-mutation-periodicity",
        n,
        m,
        format!("identity after {period} mutations"),
        tally.observed(),
        tally.passed(),
        started,
    ));

    // rotating a diagonal clockwise and mutating the quiver commute
    let started = Instant::now();
    let mut tally = CaseTally::new();
    for_each_angulation(&params, |a| {
        for (idx, &d) in a.diagonals().iter().enumerate() {
            let (a2, d2) = a.mutate_at(d).expect("present diagonals mutate");
            let perm: Vec<usize> = a
                .diagonals()
                .iter()
                .enumerate()
                .map(|(i, &di)| {
                    let image = if i == idx { d2 } else { di };
                    a2.diagonal_index(image).expect("image diagonal present")
                })
                .collect();
            let ok = match assign(a).mutate(idx) {
                Ok(mutated) => mutated.relabel(&perm) == assign(&a2),
                Err(_) => false,
            };
            tally.record(ok, || {
                format!("angulation {}, diagonal {d}", a.to_compact())
            });
        }
    });
    out.push(CheckResult::finish(
        "mutation-commutation",
        n,
        m,
        "quiver of mutated angulation equals mutated quiver".to_string(),
        tally.observed(),
        tally.passed(),
        started,
    ));

    // quivers read off angulations are valid and colour-symmetric
    let started = Instant::now();
    let mut tally = CaseTally::new();
    for_each_angulation(&params, |a| {
        let q = assign(a);
        let mut ok = q.validate().is_ok();
        for (from, to, arrow) in q.arrows() {
            let back = q.arrow(to, from);
            ok = ok && back.is_some_and(|b| b.colour + arrow.colour == m as u32);
        }
        tally.record(ok, || format!("angulation {}", a.to_compact()));
    });
    out.push(CheckResult::finish(
        "colour-sum-validity",
        n,
        m,
        format!("valid quivers, opposite colours summing to {m}"),
        tally.observed(),
        tally.passed(),
        started,
    ));

    // factoring out a border cell = deleting the corresponding quiver
    // vertex, and extension/factoring round-trip at every border edge
    let started = Instant::now();
    let mut tally = CaseTally::new();
    let v = params.vertex_count();
    for_each_angulation(&params, |a| {
        for (idx, &d) in a.diagonals().iter().enumerate() {
            let (da, db) = d.endpoints();
            let gap = db - da;
            if gap != m as u32 + 1 && v - gap != m as u32 + 1 {
                continue;
            }
            let factored = a.factor_out(d).expect("close-to-border factors out");
            let ok = assign(&factored) == assign(a).remove_vertex(idx);
            tally.record(ok, || {
                format!("angulation {}, diagonal {d}", a.to_compact())
            });
        }
        for edge in border_edges(&params) {
            let (extended, nd) = a.extend_at(edge).expect("border edges extend");
            let ok = extended.factor_out(nd).expect("new cell factors out") == *a;
            tally.record(ok, || {
                format!("angulation {}, edge ({}, {})", a.to_compact(), edge.0, edge.1)
            });
        }
    });
    out.push(CheckResult::finish(
        "border-cell-factoring",
        n,
        m,
        "factoring matches vertex deletion and inverts extension".to_string(),
        tally.observed(),
        tally.passed(),
        started,
    ));

    // the diagonal count formula against the actual list of diagonals
    let started = Instant::now();
    let formula = num_indecomposables(n, m);
    let listed = all_m_diagonals(&params).len() as u64;
    let passed =
        formula == Count::from(listed) && params.count_m_diagonals() == Count::from(listed);
    out.push(CheckResult::finish(
        "indecomposable-count",
        n,
        m,
        formula.to_string(),
        listed.to_string(),
        passed,
        started,
    ));
}
