//! Veech group index and `SL(2,Z)`-orbit of a square-tiled cyclic cover.
//!
//! `SL(2,Z)` acts on the marked pillow through `S3 ≅ S4/K`, where `K` is
//! the Klein group of pillow symmetries. The stabilizer of the cover is
//! the image of its symmetry group in `S3`, so the index is
//! `6 / |image|` and the orbit is the set of relabellings by coset
//! representatives of `K`, up to isomorphism.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::CoverParams;
use crate::perm::Perm4;

/// Which branch of the case analysis by coincidences among the `a_i`
/// and cycle types of symmetries applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    /// Three of the `a_i` coincide.
    TripleEqual,
    /// Some `a_i = a_j`, but no three coincide.
    PairEqual,
    /// Pairwise distinct; every symmetry is a pillow symmetry.
    DistinctPillowOnly,
    /// Pairwise distinct; some symmetry is a 4-cycle or a transposition.
    DistinctOddSymmetry,
    /// Pairwise distinct; some symmetry is a 3-cycle.
    DistinctThreeCycle,
}

impl CaseLabel {
    pub fn predicted_index(self) -> u32 {
        match self {
            CaseLabel::TripleEqual => 1,
            CaseLabel::PairEqual | CaseLabel::DistinctOddSymmetry => 3,
            CaseLabel::DistinctPillowOnly => 6,
            CaseLabel::DistinctThreeCycle => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeechDescriptor {
    pub index: u32,
    pub s3_image_order: u32,
    pub case_label: CaseLabel,
    pub orbit: Vec<CoverParams>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VeechError {
    #[error("{params}: case {case:?} predicts index {predicted}, symmetry group gives {computed}")]
    ClassificationMismatch {
        params: CoverParams,
        case: CaseLabel,
        predicted: u32,
        computed: u32,
    },
    #[error("{params}: distinct exponents with both an odd symmetry and a 3-cycle")]
    AmbiguousCase { params: CoverParams },
    #[error("{params}: orbit has {orbit} elements but the index is {index}")]
    OrbitSize {
        params: CoverParams,
        orbit: usize,
        index: u32,
    },
}

/// Order of the image of the symmetry group under `S4 -> S3`.
pub fn s3_image_order(p: &CoverParams) -> u32 {
    let image: BTreeSet<[u8; 3]> = p
        .symmetry_group()
        .iter()
        .map(|s| s.pi.project_to_s3())
        .collect();
    image.len() as u32
}

/// Branch of the case analysis, decided from the exponents and the cycle
/// types of symmetries only.
pub fn case_label(p: &CoverParams) -> Result<CaseLabel, VeechError> {
    let a = p.a();
    let max_equal = a
        .iter()
        .map(|x| a.iter().filter(|y| *y == x).count())
        .max()
        .unwrap_or(1);
    if max_equal >= 3 {
        return Ok(CaseLabel::TripleEqual);
    }
    if max_equal == 2 {
        return Ok(CaseLabel::PairEqual);
    }
    let symmetries = p.symmetry_group();
    let odd = symmetries.iter().any(|s| s.pi.is_odd());
    let three = symmetries.iter().any(|s| s.pi.cycle_type() == [3]);
    match (odd, three) {
        (true, true) => Err(VeechError::AmbiguousCase { params: *p }),
        (true, false) => Ok(CaseLabel::DistinctOddSymmetry),
        (false, true) => Ok(CaseLabel::DistinctThreeCycle),
        (false, false) => Ok(CaseLabel::DistinctPillowOnly),
    }
}

/// Relabellings by the coset representatives of the Klein group, keeping
/// the first of each isomorphism class of flat surfaces.
pub fn orbit(p: &CoverParams) -> Vec<CoverParams> {
    let mut out: Vec<CoverParams> = Vec::new();
    for pi in Perm4::klein_coset_representatives() {
        let q = p.permuted(&pi);
        let new = out
            .iter()
            .all(|r| !r.surfaces_isomorphic(&q).expect("same degree"));
        if new {
            out.push(q);
        }
    }
    out
}

/// Index from the symmetry group, cross-checked against the case analysis
/// and the orbit size.
pub fn veech_index(p: &CoverParams) -> Result<VeechDescriptor, VeechError> {
    let order = s3_image_order(p);
    let index = 6 / order;
    let case = case_label(p)?;
    if case.predicted_index() != index {
        return Err(VeechError::ClassificationMismatch {
            params: *p,
            case,
            predicted: case.predicted_index(),
            computed: index,
        });
    }
    let orbit = orbit(p);
    if orbit.len() != index as usize {
        return Err(VeechError::OrbitSize {
            params: *p,
            orbit: orbit.len(),
            index,
        });
    }
    Ok(VeechDescriptor {
        index,
        s3_image_order: order,
        case_label: case,
        orbit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::validate(n, a).unwrap()
    }

    #[test]
    fn indices_of_worked_examples() {
        let idx = |n, a| veech_index(&m(n, a)).unwrap();
        assert_eq!(idx(4, [1, 1, 1, 1]).index, 1);
        assert_eq!(idx(6, [3, 1, 1, 1]).index, 1);
        assert_eq!(idx(10, [1, 1, 3, 5]).index, 3);
        assert_eq!(idx(6, [1, 1, 5, 5]).index, 3);
        let d = idx(8, [1, 3, 5, 7]);
        assert_eq!((d.index, d.case_label), (6, CaseLabel::DistinctPillowOnly));
        let d = idx(10, [1, 3, 9, 7]);
        assert_eq!((d.index, d.case_label), (3, CaseLabel::DistinctOddSymmetry));
        let d = idx(40, [1, 9, 5, 25]);
        assert_eq!((d.index, d.case_label), (3, CaseLabel::DistinctOddSymmetry));
        let d = idx(14, [1, 9, 11, 7]);
        assert_eq!((d.index, d.case_label), (2, CaseLabel::DistinctThreeCycle));
    }

    #[test]
    fn orbit_elements_are_pairwise_distinct_surfaces() {
        let o = orbit(&m(8, [1, 3, 5, 7]));
        assert_eq!(o.len(), 6);
        for (i, x) in o.iter().enumerate() {
            for y in &o[i + 1..] {
                assert!(!x.surfaces_isomorphic(y).unwrap());
            }
        }
        assert_eq!(orbit(&m(4, [1, 1, 1, 1])), vec![m(4, [1, 1, 1, 1])]);
    }

    #[test]
    fn sweep_small_degrees() {
        for n in 2..=16 {
            for p in CoverParams::all_of_degree(n) {
                let d = veech_index(&p).unwrap_or_else(|e| panic!("{e}"));
                assert!([1, 2, 3, 6].contains(&d.index));
                assert_eq!(d.index * d.s3_image_order, 6);
            }
        }
    }
}
