//! Searches of parameter space for degenerate Lyapunov spectra.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::lyapunov::{self, opt_rational_string, Rational};
use crate::params::CoverParams;
use crate::strata::{self, DifferentialKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchFilter {
    /// `sum_abelian = 1` with genus at least the bound (default 2).
    DegenerateAbelian,
    /// `sum_minus = 1` with effective genus at least the bound (default 2).
    DegenerateMinus,
    /// `sum_plus = 0`.
    DegeneratePlus,
    All,
}

impl SearchFilter {
    pub fn name(self) -> &'static str {
        match self {
            SearchFilter::DegenerateAbelian => "degenerate-abelian",
            SearchFilter::DegenerateMinus => "degenerate-minus",
            SearchFilter::DegeneratePlus => "degenerate-plus",
            SearchFilter::All => "all",
        }
    }
}

impl fmt::Display for SearchFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            SearchFilter::DegenerateAbelian,
            SearchFilter::DegenerateMinus,
            SearchFilter::DegeneratePlus,
            SearchFilter::All,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| format!("unknown filter {s:?}"))
    }
}

/// Restriction on simple poles. Squares of Abelian differentials count as
/// holomorphic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleFilter {
    #[default]
    Any,
    Holomorphic,
    Meromorphic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub n_max: u32,
    pub filter: SearchFilter,
    pub poles: PoleFilter,
    /// Lower bound on `g` (Abelian filter) or `g_eff` (minus filter).
    pub geff_min: Option<u32>,
}

impl SearchOptions {
    pub fn new(n_max: u32, filter: SearchFilter) -> Self {
        SearchOptions {
            n_max,
            filter,
            poles: PoleFilter::Any,
            geff_min: None,
        }
    }

    fn genus_bound(&self) -> u32 {
        self.geff_min.unwrap_or(2)
    }
}

/// One isomorphism class, represented by its canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub params: CoverParams,
    pub kind: DifferentialKind,
    pub stratum: String,
    pub genus: u32,
    pub g_eff: Option<u32>,
    #[serde(with = "opt_rational_string")]
    pub sum_abelian: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_plus: Option<Rational>,
    #[serde(with = "opt_rational_string")]
    pub sum_minus: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHeader {
    pub bound: u32,
    pub filter: SearchFilter,
    pub poles: PoleFilter,
    pub genus_min: Option<u32>,
    pub hits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub header: SearchHeader,
    pub hits: Vec<SearchHit>,
}

impl SearchResult {
    /// Header line followed by one line per hit.
    pub fn to_json_lines(&self) -> String {
        let mut out = serde_json::to_string(&self.header).expect("header serializes");
        out.push('\n');
        for hit in &self.hits {
            out.push_str(&serde_json::to_string(hit).expect("hit serializes"));
            out.push('\n');
        }
        out
    }
}

/// Canonical representatives of every surface with `2 <= N <= n_max`,
/// ordered by `N` and then lexicographically.
pub fn canonical_classes(n_max: u32) -> Vec<CoverParams> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let classes: BTreeSet<CoverParams> = CoverParams::all_of_degree(n)
            .iter()
            .map(CoverParams::canonical_surface_form)
            .collect();
        out.extend(classes);
    }
    out
}

fn matches(opts: &SearchOptions, kind: DifferentialKind, rep: &lyapunov::LyapunovReport) -> bool {
    let poles_ok = match opts.poles {
        PoleFilter::Any => true,
        PoleFilter::Holomorphic => kind != DifferentialKind::QuadraticMeromorphic,
        PoleFilter::Meromorphic => kind == DifferentialKind::QuadraticMeromorphic,
    };
    let one = Rational::one();
    poles_ok
        && match opts.filter {
            SearchFilter::All => true,
            SearchFilter::DegenerateAbelian => {
                kind.is_abelian() && rep.g >= opts.genus_bound() && rep.sum_abelian == Some(one)
            }
            SearchFilter::DegenerateMinus => {
                !kind.is_abelian()
                    && rep.g_eff.is_some_and(|e| e >= opts.genus_bound())
                    && rep.sum_minus == Some(one)
            }
            SearchFilter::DegeneratePlus => rep.sum_plus.is_some_and(|s| s.is_zero()),
        }
}

pub fn search(opts: &SearchOptions) -> SearchResult {
    let hits: Vec<SearchHit> = canonical_classes(opts.n_max)
        .into_iter()
        .filter_map(|p| {
            let kind = strata::differential_kind(&p);
            let rep = lyapunov::sum_closed(&p);
            matches(opts, kind, &rep).then(|| SearchHit {
                params: p,
                kind,
                stratum: strata::singularity_pattern(&p).to_string(),
                genus: rep.g,
                g_eff: rep.g_eff,
                sum_abelian: rep.sum_abelian,
                sum_plus: rep.sum_plus,
                sum_minus: rep.sum_minus,
            })
        })
        .collect();
    let genus_min = match opts.filter {
        SearchFilter::DegenerateAbelian | SearchFilter::DegenerateMinus => Some(opts.genus_bound()),
        _ => None,
    };
    SearchResult {
        header: SearchHeader {
            bound: opts.n_max,
            filter: opts.filter,
            poles: opts.poles,
            genus_min,
            hits: hits.len(),
        },
        hits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::validate(n, a).unwrap()
    }

    fn hits(opts: SearchOptions) -> Vec<CoverParams> {
        search(&opts).hits.into_iter().map(|h| h.params).collect()
    }

    #[test]
    fn degenerate_abelian_to_twelve() {
        assert_eq!(
            hits(SearchOptions::new(12, SearchFilter::DegenerateAbelian)),
            vec![m(4, [1, 1, 1, 1]), m(6, [1, 1, 1, 3])]
        );
    }

    #[test]
    fn degenerate_minus_holomorphic_to_ten() {
        let mut opts = SearchOptions::new(10, SearchFilter::DegenerateMinus);
        opts.poles = PoleFilter::Holomorphic;
        let expected: Vec<CoverParams> = [m(5, [2, 1, 1, 1]), m(6, [5, 3, 2, 2]), m(8, [4, 2, 1, 1]), m(8, [7, 4, 3, 2])]
            .iter()
            .map(CoverParams::canonical_surface_form)
            .collect();
        assert_eq!(hits(opts), expected);
    }

    #[test]
    fn filter_names_parse() {
        for f in ["degenerate-abelian", "degenerate-minus", "degenerate-plus", "all"] {
            assert_eq!(f.parse::<SearchFilter>().unwrap().name(), f);
        }
        assert!("nope".parse::<SearchFilter>().is_err());
    }

    #[test]
    fn header_line_comes_first() {
        let text = search(&SearchOptions::new(6, SearchFilter::DegenerateAbelian)).to_json_lines();
        let first = text.lines().next().unwrap();
        assert!(first.contains("\"bound\":6"));
        assert_eq!(text.lines().count(), 3);
    }
}
