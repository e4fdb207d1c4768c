//! Permutations: the symmetric group on the four branch labels, its Klein
//! subgroup and quotient, and permutations of the squares of an origami.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of the four branch labels, stored 0-based as `images[i] = pi(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

/// The three ways of splitting `{0,1,2,3}` into two pairs. `S4` permutes them,
/// and this action is the projection `S4 -> S3` with kernel the Klein group.
const PAIRINGS: [[[u8; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its 0-based image array. Returns `None` if
    /// the array is not a bijection of `{0,1,2,3}`.
    pub fn new(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm4(images))
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[other.0[i] as usize];
        }
        Perm4(out)
    }

    pub fn inverse(&self) -> Perm4 {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm4(out)
    }

    /// All 24 elements in lexicographic order of image arrays.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(p) = Perm4::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// The pillow symmetries `{id, (12)(34), (13)(24), (14)(23)}`.
    pub fn klein() -> [Perm4; 4] {
        [
            Perm4::IDENTITY,
            Perm4([1, 0, 3, 2]),
            Perm4([2, 3, 0, 1]),
            Perm4([3, 2, 1, 0]),
        ]
    }

    pub fn is_klein(&self) -> bool {
        Perm4::klein().contains(self)
    }

    /// Coset representatives of the Klein group fixing the first label:
    /// `id, (34), (23), (234), (243), (24)`.
    pub fn klein_coset_representatives() -> [Perm4; 6] {
        [
            Perm4::IDENTITY,
            Perm4([0, 1, 3, 2]),
            Perm4([0, 2, 1, 3]),
            Perm4([0, 2, 3, 1]),
            Perm4([0, 3, 1, 2]),
            Perm4([0, 3, 2, 1]),
        ]
    }

    /// Image in `S3 ≅ S4/K`, as a permutation of the three pairings.
    pub fn project_to_s3(&self) -> [u8; 3] {
        let mut out = [0u8; 3];
        for (idx, pairing) in PAIRINGS.iter().enumerate() {
            let first = pairing[0];
            let mut image = [self.0[first[0] as usize], self.0[first[1] as usize]];
            image.sort_unstable();
            out[idx] = PAIRINGS
                .iter()
                .position(|q| q[0] == image || q[1] == image)
                .expect("a pair always lies in exactly one pairing") as u8;
        }
        out
    }

    /// Lengths of the nontrivial cycles, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 4];
        let mut lens = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_odd(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 1
    }
}

impl fmt::Display for Perm4 {
    /// 1-based cycle notation, e.g. `(1,2)(3,4)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 4];
        let mut wrote = false;
        for start in 0..4 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut items = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                items.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", items.join(","))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation of the squares `0..n` of an origami, 0-based one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SquarePerm(Vec<usize>);

impl SquarePerm {
    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(SquarePerm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> SquarePerm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x] = i;
        }
        SquarePerm(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SquarePerm) -> SquarePerm {
        SquarePerm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    /// Cycles in order of their smallest element, each starting from it.
    /// Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle string in the style `(0,1,6,7,4,5,2,3)`: cycles ordered by their
    /// smallest element, each written from that element.
    pub fn to_cycle_string(&self) -> String {
        self.to_cycle_string_by(|cycle| cycle[0])
    }

    /// Like [`SquarePerm::to_cycle_string`], but `start` picks the element each
    /// cycle is written from. It receives the cycle beginning at its smallest
    /// element and must return a member of it.
    pub fn to_cycle_string_by(&self, start: impl Fn(&[usize]) -> usize) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            let first = start(&cycle);
            let offset = cycle
                .iter()
                .position(|&x| x == first)
                .expect("cycle start must belong to the cycle");
            let items: Vec<String> = cycle
                .iter()
                .cycle()
                .skip(offset)
                .take(cycle.len())
                .map(|x| x.to_string())
                .collect();
            out.push('(');
            out.push_str(&items.join(","));
            out.push(')');
        }
        out
    }
}
