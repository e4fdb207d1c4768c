//! Everything known about one cover, gathered into a serializable report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lyapunov::{self, opt_rational_string, DegeneracyFlags, Rational};
use crate::origami::{Cylinder, Direction, Origami};
use crate::params::{CoverParams, ParamsError};
use crate::perm::SquarePerm;
use crate::spin::{self, SpinParity};
use crate::strata::{self, DifferentialKind};
use crate::veech::{self, VeechDescriptor, VeechError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderReport {
    pub horizontal: Vec<Cylinder>,
    pub vertical: Vec<Cylinder>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub params: CoverParams,
    pub kind: DifferentialKind,
    pub stratum: String,
    pub degrees: Vec<i32>,
    pub marked_points: u32,
    pub genus: u32,
    pub g_hat: Option<u32>,
    pub g_eff: Option<u32>,
    pub pi_h: String,
    pub pi_v: String,
    pub pi_h_array: SquarePerm,
    pub pi_v_array: SquarePerm,
    pub cylinders: CylinderReport,
    pub veech: VeechDescriptor,
    #[serde(with = "opt_rational_string")]
    pub sum_abelian: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_plus: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_minus: Option<Rational>,
    pub degenerate_abelian: bool,
    pub degenerate_minus: bool,
    pub degenerate_plus: bool,
    pub degeneracy: DegeneracyFlags,
    pub spin: SpinParity,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DescribeOptions {
    /// List regular marked points as degree-0 entries of the stratum.
    pub include_marked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DescribeError {
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Veech(#[from] VeechError),
}

impl DescribeError {
    pub fn code(&self) -> &'static str {
        match self {
            DescribeError::Params(e) => e.code(),
            DescribeError::Veech(VeechError::ClassificationMismatch { .. }) => "ClassificationMismatch",
            DescribeError::Veech(_) => "VeechInconsistency",
        }
    }

    pub fn is_input_error(&self) -> bool {
        matches!(self, DescribeError::Params(_))
    }
}

/// Validates raw integers and builds the full report.
pub fn describe(n: i64, a: [i64; 4], opts: DescribeOptions) -> Result<CoverReport, DescribeError> {
    let p = CoverParams::validate(n, a)?;
    describe_params(&p, opts)
}

pub fn describe_params(p: &CoverParams, opts: DescribeOptions) -> Result<CoverReport, DescribeError> {
    describe_with_spin(p, opts, spin::spin_parity(p))
}

/// Like [`describe_params`] with the spin parity supplied by the caller.
pub(crate) fn describe_with_spin(
    p: &CoverParams,
    opts: DescribeOptions,
    spin: SpinParity,
) -> Result<CoverReport, DescribeError> {
    let origami = Origami::build(p);
    let stratum = strata::singularity_pattern(p);
    let gd = strata::genus(p);
    let mut degrees = stratum.degrees.clone();
    if opts.include_marked {
        degrees.extend(std::iter::repeat(0).take(stratum.marked_points as usize));
        degrees.sort_unstable_by(|x, y| y.cmp(x));
    }
    let lyap = lyapunov::sum_closed(p);
    let degeneracy = lyapunov::classify_report(&lyap);
    let decomposition = |d| origami.cylinder_decomposition(d).cylinders;
    Ok(CoverReport {
        params: *p,
        kind: stratum.kind,
        stratum: stratum.render(opts.include_marked),
        degrees,
        marked_points: stratum.marked_points,
        genus: gd.g,
        g_hat: gd.g_hat,
        g_eff: gd.g_eff,
        pi_h: origami.cycle_string(Direction::Horizontal),
        pi_v: origami.cycle_string(Direction::Vertical),
        pi_h_array: origami.pi_h().clone(),
        pi_v_array: origami.pi_v().clone(),
        cylinders: CylinderReport {
            horizontal: decomposition(Direction::Horizontal),
            vertical: decomposition(Direction::Vertical),
        },
        veech: veech::veech_index(p)?,
        sum_abelian: lyap.sum_abelian,
        sum_plus: lyap.sum_plus,
        sum_minus: lyap.sum_minus,
        degenerate_abelian: lyap.degenerate_abelian,
        degenerate_minus: lyap.degenerate_minus,
        degenerate_plus: lyap.degenerate_plus,
        degeneracy,
        spin,
    })
}

fn cylinders_text(cs: &[Cylinder]) -> String {
    cs.iter()
        .map(|c| format!("{}x{}", c.width, c.height))
        .collect::<Vec<_>>()
        .join(" ")
}

impl CoverReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    /// Human-readable summary with permutations in cycle notation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |r: &Option<Rational>| r.map(|x| lyapunov::format_rational(&x));
        let _ = writeln!(out, "{}  {}  genus {}", self.params, self.stratum, self.genus);
        if let Some(e) = self.g_eff {
            let _ = writeln!(out, "effective genus {e}");
        }
        let _ = writeln!(out, "pi_h {}", self.pi_h);
        let _ = writeln!(out, "pi_v {}", self.pi_v);
        let _ = writeln!(out, "horizontal cylinders {}", cylinders_text(&self.cylinders.horizontal));
        let _ = writeln!(out, "vertical cylinders {}", cylinders_text(&self.cylinders.vertical));
        let orbit: Vec<String> = self.veech.orbit.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            out,
            "veech index {} ({:?}), orbit {}",
            self.veech.index,
            self.veech.case_label,
            orbit.join(" ")
        );
        for (name, value) in [
            ("sum_abelian", opt(&self.sum_abelian)),
            ("sum_plus", opt(&self.sum_plus)),
            ("sum_minus", opt(&self.sum_minus)),
        ] {
            if let Some(v) = value {
                let _ = writeln!(out, "{name} {v}");
            }
        }
        let _ = writeln!(out, "spin {}", self.spin.as_str().unwrap_or("undefined"));
        out
    }
}

/// The orbit listing of [`veech::veech_index`] together with its input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub params: CoverParams,
    #[serde(flatten)]
    pub veech: VeechDescriptor,
}

pub fn orbit_report(n: i64, a: [i64; 4]) -> Result<OrbitReport, DescribeError> {
    let params = CoverParams::validate(n, a)?;
    Ok(OrbitReport {
        params,
        veech: veech::veech_index(&params)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for (n, a) in [(6, [1, 1, 1, 3]), (4, [1, 3, 2, 2]), (3, [3, 1, 1, 1])] {
            let r = describe(n, a, DescribeOptions::default()).unwrap();
            let back: CoverReport = serde_json::from_str(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn json_field_shapes() {
        let r = describe(6, [1, 1, 1, 3], DescribeOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["stratum"], "H(2,2,2)+3pts");
        assert_eq!(v["genus"], 4);
        assert_eq!(v["sum_abelian"], "1");
        assert_eq!(v["spin"], "even");
        assert_eq!(v["sum_plus"], serde_json::Value::Null);
        assert_eq!(v["params"]["N"], 6);
        let r = describe(4, [1, 1, 1, 1], DescribeOptions { include_marked: true }).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["spin"], serde_json::Value::Null);
        let r = describe(6, [1, 1, 1, 3], DescribeOptions { include_marked: true }).unwrap();
        assert_eq!(r.stratum, "H(2,2,2,0,0,0)");
        assert_eq!(r.degrees, vec![2, 2, 2, 0, 0, 0]);
    }

    #[test]
    fn errors_carry_codes() {
        let e = describe(5, [1, 1, 1, 1], DescribeOptions::default()).unwrap_err();
        assert_eq!(e.code(), "SumNotDivisible");
        assert!(e.is_input_error());
    }
}
