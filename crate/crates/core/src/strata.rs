//! Differential kind, singularity pattern and genus of a cyclic cover.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::params::CoverParams;

/// Whether the pulled-back pillow differential is the square of an Abelian
/// differential, and if not whether it has simple poles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DifferentialKind {
    AbelianSquare,
    QuadraticHolomorphic,
    QuadraticMeromorphic,
}

impl DifferentialKind {
    pub fn is_abelian(self) -> bool {
        self == DifferentialKind::AbelianSquare
    }
}

pub fn differential_kind(p: &CoverParams) -> DifferentialKind {
    let n = p.n();
    let a = p.a();
    if n % 2 == 0 && a.iter().all(|x| x % 2 == 1) {
        DifferentialKind::AbelianSquare
    } else if a.contains(&n) {
        DifferentialKind::QuadraticMeromorphic
    } else {
        DifferentialKind::QuadraticHolomorphic
    }
}

/// Singularity degrees of a stratum `H(m_1..)` or `Q(d_1..)`. Degree-0 points
/// are regular points of the metric and are counted in `marked_points` only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stratum {
    pub kind: DifferentialKind,
    /// Sorted descending; `-1` entries are simple poles.
    pub degrees: Vec<i32>,
    pub marked_points: u32,
}

impl Stratum {
    /// Collects `(degree, multiplicity)` contributions into a stratum,
    /// diverting degree-0 points into `marked_points`.
    pub fn from_points(kind: DifferentialKind, points: impl IntoIterator<Item = i32>) -> Self {
        let mut degrees = Vec::new();
        let mut marked_points = 0;
        for d in points {
            if d == 0 {
                marked_points += 1;
            } else {
                degrees.push(d);
            }
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Stratum {
            kind,
            degrees,
            marked_points,
        }
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).sum()
    }

    /// Genus recovered from `Σ m = 2g - 2` or `Σ d = 4g - 4`.
    pub fn genus_from_degrees(&self) -> i64 {
        if self.kind.is_abelian() {
            (self.degree_sum() + 2) / 2
        } else {
            (self.degree_sum() + 4) / 4
        }
    }

    /// Number of odd-degree singularities, simple poles included.
    pub fn odd_count(&self) -> u32 {
        self.degrees.iter().filter(|d| *d % 2 != 0).count() as u32
    }

    /// Renders `H(2,2,2)+3pts`, `Q(6,6,2,2)+4pts` or `Q(1^3,-1^3)`.
    ///
    /// Repeated degrees collapse to `d^k` only in meromorphic strata, which
    /// is the customary way of writing those. With `include_marked` the
    /// degree-0 points are listed as entries instead of the `+Kpts` suffix.
    pub fn render(&self, include_marked: bool) -> String {
        let letter = if self.kind.is_abelian() { 'H' } else { 'Q' };
        let mut entries = self.degrees.clone();
        if include_marked {
            entries.extend(std::iter::repeat(0).take(self.marked_points as usize));
            entries.sort_unstable_by(|a, b| b.cmp(a));
        }
        let body = if self.kind == DifferentialKind::QuadraticMeromorphic {
            let mut parts: Vec<String> = Vec::new();
            let mut i = 0;
            while i < entries.len() {
                let mut j = i;
                while j < entries.len() && entries[j] == entries[i] {
                    j += 1;
                }
                if j - i > 1 {
                    parts.push(format!("{}^{}", entries[i], j - i));
                } else {
                    parts.push(entries[i].to_string());
                }
                i = j;
            }
            parts.join(",")
        } else {
            entries
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if include_marked || self.marked_points == 0 {
            format!("{letter}({body})")
        } else {
            format!("{letter}({body})+{}pts", self.marked_points)
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Each branch point `z_i` has `gcd(N, a_i)` preimages of ramification order
/// `N / gcd(N, a_i)`; this yields the zero (or pole) degrees.
pub fn singularity_pattern(p: &CoverParams) -> Stratum {
    let kind = differential_kind(p);
    let n = p.n() as i32;
    let points = p.gcds().into_iter().flat_map(|g| {
        let g = g as i32;
        let degree = if kind.is_abelian() {
            n / (2 * g) - 1
        } else {
            n / g - 2
        };
        std::iter::repeat(degree).take(g as usize)
    });
    Stratum::from_points(kind, points)
}

/// Genus of the cover and, for quadratic kinds, of its orientation double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusData {
    pub g: u32,
    pub g_hat: Option<u32>,
    pub g_eff: Option<u32>,
}

pub fn genus(p: &CoverParams) -> GenusData {
    let gcd_sum: u32 = p.gcds().iter().sum();
    let twice = 2 * (p.n() + 1) - gcd_sum;
    debug_assert!(twice % 2 == 0);
    let g = twice / 2;
    if differential_kind(p).is_abelian() {
        return GenusData {
            g,
            g_hat: None,
            g_eff: None,
        };
    }
    // the orientation double cover branches exactly over odd-degree points
    let r = singularity_pattern(p).odd_count();
    debug_assert!(r % 2 == 0);
    let g_hat = 2 * g + r / 2 - 1;
    GenusData {
        g,
        g_hat: Some(g_hat),
        g_eff: Some(g_hat - g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use DifferentialKind::*;

    fn m(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::validate(n, a).unwrap()
    }

    #[test]
    fn kinds() {
        assert_eq!(differential_kind(&m(6, [1, 1, 1, 3])), AbelianSquare);
        assert_eq!(differential_kind(&m(4, [1, 3, 2, 2])), QuadraticHolomorphic);
        assert_eq!(differential_kind(&m(3, [3, 1, 1, 1])), QuadraticMeromorphic);
        assert_eq!(differential_kind(&m(5, [2, 1, 1, 1])), QuadraticHolomorphic);
    }

    #[test]
    fn rendered_strata() {
        let r = |n, a| singularity_pattern(&m(n, a)).to_string();
        assert_eq!(r(6, [1, 1, 1, 3]), "H(2,2,2)+3pts");
        assert_eq!(r(4, [1, 1, 1, 1]), "H(1,1,1,1)");
        assert_eq!(r(4, [1, 3, 2, 2]), "Q(2,2)+4pts");
        assert_eq!(r(8, [4, 2, 1, 1]), "Q(6,6,2,2)+4pts");
        // the two unramified preimages over z3, z4 are regular marked points
        assert_eq!(r(2, [2, 2, 1, 1]), "Q(-1^4)+2pts");
        assert_eq!(r(3, [3, 1, 1, 1]), "Q(1^3,-1^3)");
        assert_eq!(r(4, [4, 2, 1, 1]), "Q(2^2,-1^4)+2pts");
        assert_eq!(r(6, [5, 3, 2, 2]), "Q(4,1,1,1,1)+3pts");
        assert_eq!(r(5, [2, 1, 1, 1]), "Q(3,3,3,3)");
        assert_eq!(r(2, [1, 1, 1, 1]), "H()+4pts");
        assert_eq!(
            singularity_pattern(&m(6, [1, 1, 1, 3])).render(true),
            "H(2,2,2,0,0,0)"
        );
    }

    #[test]
    fn genera() {
        assert_eq!(genus(&m(6, [1, 1, 1, 3])).g, 4);
        assert_eq!(genus(&m(4, [1, 1, 1, 1])).g, 3);
        let q = genus(&m(4, [3, 2, 2, 1]));
        assert_eq!((q.g, q.g_eff), (2, Some(1)));
        let q = genus(&m(5, [2, 1, 1, 1]));
        assert_eq!((q.g, q.g_hat, q.g_eff), (4, Some(9), Some(5)));
        let q = genus(&m(2, [2, 2, 1, 1]));
        assert_eq!((q.g, q.g_eff), (0, Some(1)));
    }

    #[test]
    fn degree_sums_agree_with_riemann_hurwitz() {
        for n in 2..=24 {
            for p in CoverParams::all_of_degree(n) {
                let s = singularity_pattern(&p);
                let gd = genus(&p);
                assert_eq!(s.genus_from_degrees(), gd.g as i64, "{p}");
                let expected_sum = if s.kind.is_abelian() {
                    2 * gd.g as i64 - 2
                } else {
                    4 * gd.g as i64 - 4
                };
                assert_eq!(s.degree_sum(), expected_sum, "{p}");
                assert_eq!(s.odd_count() % 2, 0, "{p}");
                assert!(s.degrees.iter().all(|&d| d >= -1));
                assert_eq!(s.degrees.contains(&-1), p.a().contains(&p.n()), "{p}");
                if s.kind.is_abelian() {
                    assert!(!p.a().contains(&p.n()));
                }
            }
        }
    }
}
