//! Verification suites producing [`VerificationReport`]s.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::autgrp::{self, automorphism_group, DEFAULT_MAX_NODES};
use crate::catalog::{self, ClassicalKind};
use crate::error::{Error, Result};
use crate::group::DEFAULT_CLOSURE_LIMIT;
use crate::par;
use crate::rational::{ratio, to_string};
use crate::report::{Status, Stopwatch, VerificationReport};
use crate::stypes::{class_type_table, simple_with_aut};
use crate::wreath::{WreathElement, WreathGroup};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Items whose largest group exceeds this order are skipped.
    pub max_order: usize,
    pub max_nodes: u64,
    /// Items starting after this much wall time are skipped.
    pub time_limit: Option<Duration>,
    /// Record `runtimeMs` per item (makes reports run-dependent).
    pub timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: DEFAULT_CLOSURE_LIMIT,
            max_nodes: DEFAULT_MAX_NODES,
            time_limit: None,
            timing: false,
        }
    }
}

struct Runner<'a> {
    report: VerificationReport,
    opts: &'a SuiteOptions,
    started: Instant,
}

impl<'a> Runner<'a> {
    fn new(suite: &str, opts: &'a SuiteOptions) -> Self {
        Runner {
            report: VerificationReport::new(suite),
            opts,
            started: Instant::now(),
        }
    }

    /// Run one item; `size` is the order of the largest group it builds.
    fn item(&mut self, id: &str, expected: &str, size: usize, f: impl FnOnce() -> Result<(String, bool)>) {
        if size > self.opts.max_order {
            self.report
                .skip(id, expected, format!("needs a group of order {size} > max order {}", self.opts.max_order));
            return;
        }
        if self.opts.time_limit.is_some_and(|t| self.started.elapsed() > t) {
            self.report.skip(id, expected, "time limit reached");
            return;
        }
        let watch = Stopwatch::start(self.opts.timing);
        let item = match f() {
            Ok((computed, ok)) => self.report.assert(id, expected, computed, ok),
            Err(e) if e.is_resource_limit() => self.report.skip(id, expected, e),
            Err(e) => self.report.assert(id, expected, format!("error: {e}"), false),
        };
        item.runtime_ms = watch.elapsed_ms();
    }

    fn equal(&mut self, id: &str, expected: &str, size: usize, f: impl FnOnce() -> Result<String>) {
        let exp = expected.to_string();
        self.item(id, expected, size, move || f().map(|c| (c.clone(), c == exp)));
    }
}

fn mcs_of(kind: ClassicalKind, d: usize, q: u64) -> Result<String> {
    Ok(catalog::projective_group(kind, d, q)?.mcs().to_string())
}

fn maol_of(id: &str, max_nodes: u64) -> Result<String> {
    let g = catalog::by_name(id)?;
    let a = automorphism_group(&g, max_nodes)?;
    Ok(to_string(&autgrp::maol(id, &g, &a)?.maol))
}

/// Recompute the numeric checkpoints quoted for small groups.
pub fn reference_table(opts: &SuiteOptions) -> VerificationReport {
    let mut r = Runner::new("paper-table", opts);
    let nodes = opts.max_nodes;
    r.equal("mcs-sym5", "4", 120, || Ok(catalog::sym(5)?.mcs().to_string()));
    r.equal("mcs-aut-alt6", "6", 1440, || Ok(simple_with_aut("alt6")?.aut.mcs().to_string()));
    r.equal("h-alt5", "1/2", 120, || {
        let d = simple_with_aut("alt5")?;
        Ok(to_string(&class_type_table(&d.aut, &d.s)?.h))
    });
    r.equal("h-alt6", "3/4", 1440, || {
        let d = simple_with_aut("alt6")?;
        Ok(to_string(&class_type_table(&d.aut, &d.s)?.h))
    });
    r.equal("mcs-pgl2-3", "3", 24, || mcs_of(ClassicalKind::GL, 2, 3));
    r.equal("mcs-pgl3-2", "3", 168, || mcs_of(ClassicalKind::GL, 3, 2));
    r.equal("mcs-pgu3-2", "4", 216, || mcs_of(ClassicalKind::GU, 3, 2));
    // which of PGU_3(2), PGU_3(4) has minimum centralizer size 4
    r.equal("mcs-4-attained-by", "pgu(3,2)", 62_400, || {
        let mut hits = Vec::new();
        for (name, q) in [("pgu(3,2)", 2), ("pgu(3,4)", 4)] {
            if catalog::projective_group(ClassicalKind::GU, 3, q)?.mcs() == 4 {
                hits.push(name);
            }
        }
        Ok(if hits.is_empty() { "none".to_string() } else { hits.join(",") })
    });
    r.equal("mcs-pgl3-4", "12", 60_480, || mcs_of(ClassicalKind::GL, 3, 4));
    r.equal("mcs-pgu3-4", "13", 62_400, || mcs_of(ClassicalKind::GU, 3, 4));
    r.equal("mcs-pgl4-2", "6", 20_160, || mcs_of(ClassicalKind::GL, 4, 2));
    r.equal("mcs-pgu4-2", "5", 25_920, || mcs_of(ClassicalKind::GU, 4, 2));
    r.equal("maol-psl2-8", "3/7", 1512, || maol_of("psl(2,8)", nodes));
    r.equal("aut-psl34-largest-class", "24192", 241_920, || {
        let a = catalog::extended_aut_psl34()?;
        Ok(a.group.classes().max_class_size().to_string())
    });
    r.equal("maol-extraspecial-27", "2/3", 432, || maol_of("extraspecial(3)", nodes));
    r.report
}

/// Catalog groups checked against the `3/7` bound.
pub const NONSOLVABLE_LIST: [&str; 7] = ["alt5", "psl(3,2)", "alt6", "psl(2,8)", "sym5", "sym6", "pgl(2,7)"];

/// `maol(G) ≤ 3/7` (and so `≤ 18/19`) for each nonsolvable group in the list.
pub fn nonsolvable_bound(opts: &SuiteOptions) -> VerificationReport {
    let mut r = Runner::new("nonsolvable-bound", opts);
    for id in NONSOLVABLE_LIST {
        r.item(&format!("maol-{id}"), "<= 3/7", 1440, || {
            let g = catalog::by_name(id)?;
            if g.is_solvable() {
                return Ok(("solvable".into(), false));
            }
            let a = automorphism_group(&g, opts.max_nodes)?;
            let m = autgrp::maol(id, &g, &a)?.maol;
            let ok = m <= ratio(3, 7) && m <= ratio(18, 19);
            Ok((to_string(&m), ok))
        });
    }
    r.report
}

#[derive(Clone, Copy, Debug)]
pub enum WreathMode {
    /// Every ordered pair of elements.
    Exhaustive,
    /// Seeded pairs: even samples are independent pairs, odd samples pair an
    /// element with a random conjugate of itself.
    Samples { count: u64, seed: u64 },
}

/// Agreement of [`WreathGroup::conj_test`] with [`WreathGroup::brute_force_conj`].
pub fn wreath_suite(base_id: &str, n: usize, mode: WreathMode) -> Result<VerificationReport> {
    let base = catalog::by_name(base_id)?;
    let wr = WreathGroup::full(&base, n)?;
    let mut report = VerificationReport::new("wreath");
    let id = format!("conj-test-vs-brute-force-{base_id}-wr-sym{n}");
    // (pairs checked, disagreements, first few counterexamples)
    let (pairs, count, bad): (u64, u64, Vec<(WreathElement, WreathElement, bool)>) = match mode {
        WreathMode::Exhaustive => {
            let els = wr.elements()?;
            let per_v: Vec<Result<(u64, Vec<(WreathElement, WreathElement, bool)>)>> = par::map_slice(&els, |v| {
                let mut count = 0;
                let mut bad = Vec::new();
                for w in &els {
                    let fast = wr.conj_test(v, w)?;
                    if fast != wr.brute_force_conj(v, w)? {
                        count += 1;
                        if bad.len() < 3 {
                            bad.push((v.clone(), w.clone(), fast));
                        }
                    }
                }
                Ok((count, bad))
            });
            let (mut count, mut bad) = (0, Vec::new());
            for r in per_v {
                let (c, b) = r?;
                count += c;
                bad.extend(b);
            }
            ((els.len() * els.len()) as u64, count, bad)
        }
        WreathMode::Samples { count, seed } => {
            report.seed = Some(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut bad = Vec::new();
            for i in 0..count {
                let v = wr.random_element(&mut rng);
                let w = if i % 2 == 0 {
                    wr.random_element(&mut rng)
                } else {
                    let k = wr.random_element(&mut rng);
                    wr.w_conj(&v, &k)?
                };
                let fast = wr.conj_test(&v, &w)?;
                if fast != wr.brute_force_conj(&v, &w)? {
                    bad.push((v, w, fast));
                }
            }
            (count, bad.len() as u64, bad)
        }
    };
    let item = report.assert(
        &id,
        "0 disagreements",
        format!("{count} disagreements in {pairs} pairs"),
        count == 0,
    );
    if let Some((v, w, fast)) = bad.first() {
        item.note = Some(format!(
            "counterexample: v = {}, w = {}, conj_test = {fast}",
            serde_json::to_string(v).unwrap_or_default(),
            serde_json::to_string(w).unwrap_or_default()
        ));
    }
    Ok(report)
}

/// Count of failing items, for exit codes.
pub fn failures(report: &VerificationReport) -> usize {
    report.items.iter().filter(|i| i.status == Status::Fail).count()
}

/// Build a suite error for bad CLI input.
pub fn unknown_suite(name: &str) -> Error {
    Error::BadParameter(format!("unknown suite {name}"))
}
