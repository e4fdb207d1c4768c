//! Sums of Lyapunov exponents of the Hodge bundle over the Teichmüller
//! curve of a cyclic cover.
//!
//! Two independent evaluations are provided. [`sum_closed`] uses the gcd
//! closed forms specific to cyclic covers. [`sum_generic_ekz`] uses the
//! general formula valid for any square-tiled surface, `κ + c_area`, where
//! `κ` depends only on the cone angles and `c_area` is the average over
//! the `SL(2,Z)`-orbit of `Σ h/w` over horizontal cylinders. Both are
//! computed in exact rational arithmetic.
//!
//! Only the sums are computed; individual exponents are not.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::origami::{Direction, Origami};
use crate::params::CoverParams;
use crate::strata::{self, DifferentialKind, Stratum};
use crate::veech;

pub type Rational = Ratio<i64>;

/// `"p/q"`, or `"n"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

/// Serde adapter writing an optional rational as a `"p/q"` string or `null`.
pub mod opt_rational_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|s| parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .transpose()
    }
}

/// Serde adapter writing a rational as a `"p/q"` string.
pub mod rational_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).ok_or_else(|| D::Error::custom(format!("bad rational {raw:?}")))
    }
}

/// Which sums are defined depends on the kind: `sum_abelian = 1 + λ2 + … + λg`
/// for squares of Abelian differentials; `sum_plus = λ⁺1 + … + λ⁺g` and
/// `sum_minus = 1 + λ⁻2 + … + λ⁻g_eff` for quadratic differentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyapunovReport {
    pub kind: DifferentialKind,
    pub g: u32,
    pub g_eff: Option<u32>,
    #[serde(with = "opt_rational_string")]
    pub sum_abelian: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_plus: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_minus: Option<Rational>,
    pub degenerate_abelian: bool,
    pub degenerate_minus: bool,
    pub degenerate_plus: bool,
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn gcd_sq(n: u32, x: u32) -> i64 {
    let g = n.gcd(&x) as i64;
    g * g
}

/// `[gcd²(N,a1+a2) + gcd²(N,a1+a3) + gcd²(N,a1+a4)] / 6N`.
fn pairing_term(p: &CoverParams) -> Rational {
    let n = p.n();
    let [a1, a2, a3, a4] = p.a();
    r(gcd_sq(n, a1 + a2) + gcd_sq(n, a1 + a3) + gcd_sq(n, a1 + a4), 6 * n as i64)
}

fn report(p: &CoverParams, abelian: Option<Rational>, plus: Option<Rational>, minus: Option<Rational>) -> LyapunovReport {
    let kind = strata::differential_kind(p);
    let gd = strata::genus(p);
    let one = Rational::one();
    LyapunovReport {
        kind,
        g: gd.g,
        g_eff: gd.g_eff,
        sum_abelian: abelian,
        sum_plus: plus,
        sum_minus: minus,
        degenerate_abelian: gd.g >= 2 && abelian == Some(one),
        degenerate_minus: gd.g_eff.is_some_and(|e| e >= 2) && minus == Some(one),
        degenerate_plus: plus.is_some_and(|s| s.is_zero()),
    }
}

/// Closed forms in terms of `gcd(N, a_i)` and `gcd(N, a_i + a_j)`.
pub fn sum_closed(p: &CoverParams) -> LyapunovReport {
    let n = p.n() as i64;
    let gcds = p.gcds();
    let pairing = pairing_term(p);
    let base = r(n, 6) - r(gcds.iter().map(|&g| (g as i64).pow(2)).sum(), 6 * n) + pairing;
    if strata::differential_kind(p).is_abelian() {
        return report(p, Some(base), None, None);
    }
    let (odd, even): (Vec<i64>, Vec<i64>) = gcds
        .iter()
        .map(|&g| g as i64)
        .partition(|&g| (n / g) % 2 == 1);
    let minus = r(n, 6) + r(odd.iter().map(|g| g * g).sum(), 12 * n)
        - r(even.iter().map(|g| g * g).sum(), 6 * n)
        + pairing;
    report(p, None, Some(base), Some(minus))
}

/// The three ingredients of the general formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EkzInputs {
    /// `(1/12) Σ m(m+2)/(m+1)` for Abelian, `(1/24) Σ d(d+4)/(d+2)` for
    /// quadratic differentials. Negative when poles dominate.
    #[serde(with = "rational_string")]
    pub kappa_term: Rational,
    /// Orbit average of `Σ h/w` over horizontal cylinders.
    #[serde(with = "rational_string")]
    pub orbit_cyl_term: Rational,
    /// `(1/4) Σ 1/(d+2)` over odd `d`; zero for Abelian differentials.
    #[serde(with = "rational_string")]
    pub odd_pole_term: Rational,
}

pub fn kappa_term(stratum: &Stratum) -> Rational {
    let mut sum = Rational::zero();
    for &d in &stratum.degrees {
        let d = d as i64;
        sum += if stratum.kind.is_abelian() {
            r(d * (d + 2), 12 * (d + 1))
        } else {
            r(d * (d + 4), 24 * (d + 2))
        };
    }
    sum
}

pub fn odd_pole_term(stratum: &Stratum) -> Rational {
    stratum
        .degrees
        .iter()
        .filter(|d| *d % 2 != 0)
        .map(|&d| r(1, 4 * (d as i64 + 2)))
        .sum()
}

/// Builds every orbit element as an origami and reads cone angles and
/// horizontal cylinders off the gluings.
pub fn ekz_inputs(p: &CoverParams) -> EkzInputs {
    let origami = Origami::build(p);
    let stratum = origami.cone_stratum();
    let orbit = veech::orbit(p);
    let total: Rational = orbit
        .iter()
        .map(|q| {
            Origami::build(q)
                .cylinder_decomposition(Direction::Horizontal)
                .modulus_sum()
        })
        .sum();
    EkzInputs {
        kappa_term: kappa_term(&stratum),
        orbit_cyl_term: total / orbit.len() as i64,
        odd_pole_term: odd_pole_term(&stratum),
    }
}

/// The general formula evaluated from [`ekz_inputs`].
pub fn sum_generic_ekz(p: &CoverParams) -> LyapunovReport {
    let inputs = ekz_inputs(p);
    let plus = inputs.kappa_term + inputs.orbit_cyl_term;
    if strata::differential_kind(p).is_abelian() {
        report(p, Some(plus), None, None)
    } else {
        report(p, None, Some(plus), Some(plus + inputs.odd_pole_term))
    }
}

/// Per-bundle classification. `Trivial` covers bundles whose only exponent
/// is the forced one (`g = 1`, `g_eff = 1`) or that have none (`g = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degeneracy {
    NotApplicable,
    TriviallyDegenerate,
    Degenerate,
    NotDegenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyFlags {
    pub abelian: Degeneracy,
    pub minus: Degeneracy,
    pub plus: Degeneracy,
}

pub fn classify_degeneracy(p: &CoverParams) -> DegeneracyFlags {
    classify_report(&sum_closed(p))
}

pub fn classify_report(rep: &LyapunovReport) -> DegeneracyFlags {
    use Degeneracy::*;
    let pick = |defined: bool, trivial: bool, degenerate: bool| match (defined, trivial, degenerate) {
        (false, _, _) => NotApplicable,
        (true, true, _) => TriviallyDegenerate,
        (true, false, true) => Degenerate,
        (true, false, false) => NotDegenerate,
    };
    let abelian = rep.kind.is_abelian();
    let g_eff = rep.g_eff.unwrap_or(0);
    DegeneracyFlags {
        abelian: pick(abelian, rep.g <= 1, rep.degenerate_abelian),
        minus: pick(!abelian, g_eff <= 1, rep.degenerate_minus),
        plus: pick(!abelian, rep.g == 0, rep.degenerate_plus),
    }
}
