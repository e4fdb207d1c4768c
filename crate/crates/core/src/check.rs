//! Exhaustive cross-validation over every ordered quadruple up to a bound.
//!
//! Each instance runs a fixed list of checks, each comparing two
//! independently computed quantities. Instances are evaluated on a worker
//! pool and merged in enumeration order, so the summary is deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::lyapunov;
use crate::origami::{predicted_horizontal_cylinders, Direction, Origami};
use crate::params::CoverParams;
use crate::report::{self, CoverReport, DescribeOptions};
use crate::spin::{self, SpinParity};
use crate::strata;
use crate::veech::{self, CaseLabel};

/// Names of the checks, in the order they run and are reported.
pub const CHECKS: [&str; 9] = [
    "origami_verify",
    "cylinder_identities",
    "closed_form_equals_general_formula",
    "veech_index_and_orbit",
    "sums_constant_on_orbit",
    "sum_bounds",
    "sum_plus_vanishing",
    "spin_orbit_invariance",
    "report_round_trip",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckCount {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub params: CoverParams,
    pub check: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub bound: u32,
    pub instances: u64,
    pub counts: Vec<CheckCount>,
    pub first_failure: Option<CheckFailure>,
}

impl CheckSummary {
    pub fn all_passed(&self) -> bool {
        self.counts.iter().all(|c| c.failed == 0)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check bound {} instances {}", self.bound, self.instances);
        for c in &self.counts {
            let _ = writeln!(out, "{:<36} passed {:>8} failed {:>8}", c.name, c.passed, c.failed);
        }
        match &self.first_failure {
            None => {
                let _ = writeln!(out, "all checks passed");
            }
            Some(f) => {
                let _ = writeln!(out, "first failure: {} in {}: {}", f.params, f.check, f.message);
                let n = f.params.n() as i64;
                let a = f.params.a().map(i64::from);
                match catch_unwind(|| report::describe(n, a, DescribeOptions::default())) {
                    Ok(Ok(r)) => {
                        let _ = writeln!(out, "{}", r.to_json());
                    }
                    Ok(Err(e)) => {
                        let _ = writeln!(out, "report unavailable: {e}");
                    }
                    Err(_) => {
                        let _ = writeln!(out, "report unavailable: panic while describing");
                    }
                }
            }
        }
        out
    }
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_string());
        Err(format!("panicked: {msg}"))
    })
}

fn run_instance(p: &CoverParams, spins: &HashMap<CoverParams, SpinParity>) -> [Outcome; 9] {
    let origami = Origami::build(p);
    let closed = lyapunov::sum_closed(p);
    [
        guarded(|| origami.verify(p).map(|_| ()).map_err(|e| e.to_string())),
        guarded(|| cylinder_identities(p, &origami)),
        guarded(|| {
            let general = lyapunov::sum_generic_ekz(p);
            ensure(general == closed, || format!("closed {closed:?} general {general:?}"))
        }),
        guarded(|| veech_checks(p)),
        guarded(|| {
            veech::orbit(p).iter().try_for_each(|q| {
                let other = lyapunov::sum_closed(q);
                ensure(other == closed, || format!("{q} has different sums"))
            })
        }),
        guarded(|| {
            let one = lyapunov::Rational::one();
            let zero = lyapunov::Rational::zero();
            ensure(closed.sum_abelian.is_none_or(|s| s >= one), || "sum_abelian < 1".into())?;
            ensure(closed.sum_minus.is_none_or(|s| s >= one), || "sum_minus < 1".into())?;
            ensure(closed.sum_plus.is_none_or(|s| s >= zero), || "sum_plus < 0".into())
        }),
        guarded(|| match closed.sum_plus {
            None => Ok(()),
            Some(s) => {
                let pole = p.a().contains(&p.n());
                ensure(s.is_zero() == pole, || format!("sum_plus {s} with pole = {pole}"))
            }
        }),
        guarded(|| spin_invariance(p, spins)),
        guarded(|| {
            let spin = spins.get(p).copied().unwrap_or(SpinParity::Undefined);
            let r = report::describe_with_spin(p, DescribeOptions::default(), spin).map_err(|e| e.to_string())?;
            let back: CoverReport = serde_json::from_str(&r.to_json()).map_err(|e| e.to_string())?;
            ensure(back == r, || "report changed after a JSON round trip".into())
        }),
    ]
}

fn cylinder_identities(p: &CoverParams, origami: &Origami) -> Outcome {
    let (width, total) = predicted_horizontal_cylinders(p);
    let h = origami.cylinder_decomposition(Direction::Horizontal);
    ensure(h.cylinders.iter().all(|c| c.width == width), || {
        format!("horizontal widths {:?}, expected {width}", h.cylinders)
    })?;
    ensure(h.total_height() == total, || format!("total height {}, expected {total}", h.total_height()))?;
    let area = 2 * p.n();
    ensure(h.area() == area, || format!("horizontal area {}", h.area()))?;
    let v = origami.cylinder_decomposition(Direction::Vertical);
    ensure(v.area() == area, || format!("vertical area {}", v.area()))?;
    // vertical data is governed by the pairing {1,2} | {3,4} in the same way
    let [a1, a2, _, _] = p.a();
    let g = (a1 + a2).gcd(&p.n());
    ensure(v.total_height() == g && v.cylinders.iter().all(|c| c.width == 2 * p.n() / g), || {
        format!("vertical cylinders {:?}", v.cylinders)
    })
}

fn veech_checks(p: &CoverParams) -> Outcome {
    let d = veech::veech_index(p).map_err(|e| e.to_string())?;
    ensure([1, 2, 3, 6].contains(&d.index), || format!("index {}", d.index))?;
    ensure(d.orbit.len() == d.index as usize, || "orbit size differs from index".into())?;
    // odd symmetries and coincidences both exclude index 1
    let odd = p.symmetry_group().iter().any(|s| s.pi.is_odd());
    let pair = d.case_label == CaseLabel::PairEqual;
    ensure(!(odd || pair) || d.index != 1 || d.case_label == CaseLabel::TripleEqual, || {
        "index 1 despite an odd symmetry".into()
    })
}

fn spin_invariance(p: &CoverParams, spins: &HashMap<CoverParams, SpinParity>) -> Outcome {
    if !strata::differential_kind(p).is_abelian() {
        return Ok(());
    }
    let own = spins[p];
    let dual = spins[&p.dual()];
    ensure(own == dual, || format!("parity {own:?} but dual has {dual:?}"))?;
    veech::orbit(p).iter().try_for_each(|q| {
        let other = spins[q];
        ensure(other == own, || format!("parity {own:?} but orbit element {q} has {other:?}"))
    })
}

/// Every ordered quadruple with `2 <= N <= n_max`, by `N` then lexicographically.
pub fn instances(n_max: u32) -> Vec<CoverParams> {
    (2..=n_max).flat_map(CoverParams::all_of_degree).collect()
}

pub fn run_check(n_max: u32, jobs: usize) -> CheckSummary {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let all = instances(n_max);
        let spins: HashMap<CoverParams, SpinParity> = all
            .par_iter()
            .filter(|p| strata::differential_kind(p).is_abelian())
            .map(|p| (*p, spin::spin_parity(p)))
            .collect();
        let results: Vec<[Outcome; 9]> = all.par_iter().map(|p| run_instance(p, &spins)).collect();

        let mut counts: Vec<CheckCount> = CHECKS
            .iter()
            .map(|&name| CheckCount {
                name,
                passed: 0,
                failed: 0,
            })
            .collect();
        let mut first_failure = None;
        for (p, outcomes) in all.iter().zip(results) {
            for (i, outcome) in outcomes.into_iter().enumerate() {
                match outcome {
                    Ok(()) => counts[i].passed += 1,
                    Err(message) => {
                        counts[i].failed += 1;
                        first_failure.get_or_insert(CheckFailure {
                            params: *p,
                            check: CHECKS[i],
                            message,
                        });
                    }
                }
            }
        }
        CheckSummary {
            bound: n_max,
            instances: all.len() as u64,
            counts,
            first_failure,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_bound() {
        let s = run_check(2, 1);
        assert_eq!(s.instances, 7);
        assert!(s.all_passed(), "{}", s.render());
    }

    #[test]
    fn small_bound_passes() {
        let s = run_check(10, 2);
        assert!(s.all_passed(), "{}", s.render());
    }
}
