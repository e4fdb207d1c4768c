//! Parameter quadruples `(N; a1, a2, a3, a4)` of cyclic covers
//! `w^N = (z-z1)^a1 (z-z2)^a2 (z-z3)^a3 (z-z4)^a4`, their validation, and the
//! isomorphisms and symmetries that act on them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::Perm4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("cover degree N must be greater than 1, got {0}")]
    DegreeTooSmall(i64),
    #[error("gcd(N, a1, a2, a3, a4) = {gcd}, the cover would be disconnected")]
    NotConnected { gcd: u32 },
    #[error("a1 + a2 + a3 + a4 = {sum} is not divisible by N = {n}, the cover would branch at infinity")]
    SumNotDivisible { n: u32, sum: u64 },
    #[error("covers have different degrees N = {0} and N = {1}")]
    DegreeMismatch(u32, u32),
}

impl ParamsError {
    /// Stable machine-readable name of the error variant.
    pub fn code(&self) -> &'static str {
        match self {
            ParamsError::DegreeTooSmall(_) => "DegreeTooSmall",
            ParamsError::NotConnected { .. } => "NotConnected",
            ParamsError::SumNotDivisible { .. } => "SumNotDivisible",
            ParamsError::DegreeMismatch(..) => "DegreeMismatch",
        }
    }

    /// The input field the error refers to.
    pub fn field(&self) -> &'static str {
        match self {
            ParamsError::DegreeTooSmall(_) | ParamsError::DegreeMismatch(..) => "N",
            ParamsError::NotConnected { .. } | ParamsError::SumNotDivisible { .. } => "a",
        }
    }
}

/// A validated quadruple: `N > 1`, every `a_i` in `(0, N]`,
/// `gcd(N, a1..a4) = 1` and `a1 + a2 + a3 + a4 ≡ 0 (mod N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct CoverParams {
    n: u32,
    a: [u32; 4],
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    #[serde(rename = "N")]
    n: i64,
    a: [i64; 4],
}

impl TryFrom<RawParams> for CoverParams {
    type Error = ParamsError;

    fn try_from(raw: RawParams) -> Result<Self, Self::Error> {
        CoverParams::validate(raw.n, raw.a)
    }
}

impl From<CoverParams> for RawParams {
    fn from(p: CoverParams) -> Self {
        RawParams {
            n: p.n as i64,
            a: p.a.map(|x| x as i64),
        }
    }
}

/// Multiplier `k` together with the label permutation it induces:
/// `k * a_i ≡ a_{pi(i)} (mod N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub k: u32,
    pub pi: Perm4,
}

impl Symmetry {
    /// `(k, pi) · (k', pi') = (k k' mod N, pi ∘ pi')`.
    pub fn compose(&self, other: &Symmetry, n: u32) -> Symmetry {
        Symmetry {
            k: ((self.k as u64 * other.k as u64) % n as u64) as u32,
            pi: self.pi.compose(&other.pi),
        }
    }
}

/// Representative of `x mod n` in `(0, n]`.
pub(crate) fn reduce(x: i64, n: u32) -> u32 {
    let r = x.rem_euclid(n as i64) as u32;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Units of `Z/nZ`, ascending in `1..n`.
pub fn units(n: u32) -> impl Iterator<Item = u32> {
    (1..n.max(2)).filter(move |k| k.gcd(&n) == 1)
}

impl CoverParams {
    /// Reduces every `raw_i` into `(0, N]` and checks the connectivity and
    /// no-branching-at-infinity conditions.
    pub fn validate(n: i64, raw: [i64; 4]) -> Result<Self, ParamsError> {
        if n <= 1 {
            return Err(ParamsError::DegreeTooSmall(n));
        }
        let n = u32::try_from(n).map_err(|_| ParamsError::DegreeTooSmall(n))?;
        let a = raw.map(|x| reduce(x, n));
        let gcd = a.iter().fold(n, |g, &x| g.gcd(&x));
        if gcd != 1 {
            return Err(ParamsError::NotConnected { gcd });
        }
        let sum: u64 = a.iter().map(|&x| x as u64).sum();
        if sum % n as u64 != 0 {
            return Err(ParamsError::SumNotDivisible { n, sum });
        }
        Ok(CoverParams { n, a })
    }

    /// Builds parameters without checking the gcd and sum conditions.
    /// Entries are still reduced into `(0, n]`. Only for negative tests.
    #[cfg(test)]
    pub(crate) fn unchecked(n: u32, a: [i64; 4]) -> Self {
        CoverParams {
            n,
            a: a.map(|x| reduce(x, n)),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> [u32; 4] {
        self.a
    }

    /// `gcd(N, a_i)` for each label.
    pub fn gcds(&self) -> [u32; 4] {
        self.a.map(|x| x.gcd(&self.n))
    }

    /// `M_N(a_{pi(1)}, ..., a_{pi(4)})`.
    pub fn permuted(&self, pi: &Perm4) -> CoverParams {
        let mut a = [0; 4];
        for (i, slot) in a.iter_mut().enumerate() {
            *slot = self.a[pi.apply(i)];
        }
        CoverParams { n: self.n, a }
    }

    /// Multiplies every exponent by `k` and reduces into `(0, N]`.
    pub fn scaled(&self, k: u32) -> CoverParams {
        let n = self.n as u64;
        let a = self.a.map(|x| {
            let r = (x as u64 * k as u64 % n) as u32;
            if r == 0 {
                self.n
            } else {
                r
            }
        });
        CoverParams { n: self.n, a }
    }

    /// `M_N(N - a1, ..., N - a4)`, isomorphic to `self` through `k = N - 1`.
    pub fn dual(&self) -> CoverParams {
        self.scaled(self.n - 1)
    }

    fn same_degree(&self, other: &CoverParams) -> Result<(), ParamsError> {
        if self.n != other.n {
            Err(ParamsError::DegreeMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// Isomorphism over the labeled base sphere: some unit `k` has
    /// `k a_i ≡ b_i` for every `i`.
    pub fn covers_isomorphic(&self, other: &CoverParams) -> Result<bool, ParamsError> {
        self.same_degree(other)?;
        Ok(units(self.n).any(|k| self.scaled(k) == *other))
    }

    /// Same point of the stratum as square-tiled surfaces: isomorphic as
    /// covers after relabeling `other` by a pillow symmetry.
    pub fn surfaces_isomorphic(&self, other: &CoverParams) -> Result<bool, ParamsError> {
        self.same_degree(other)?;
        let klein_images: Vec<CoverParams> =
            Perm4::klein().iter().map(|kappa| other.permuted(kappa)).collect();
        Ok(units(self.n).any(|k| {
            let scaled = self.scaled(k);
            klein_images.contains(&scaled)
        }))
    }

    /// Every `(k, pi)` with `k` a unit and `k a_i ≡ a_{pi(i)}`, sorted.
    pub fn symmetry_group(&self) -> Vec<Symmetry> {
        let perms = Perm4::all();
        let mut out = Vec::new();
        for k in units(self.n) {
            let scaled = self.scaled(k);
            for pi in &perms {
                if self.permuted(pi) == scaled {
                    out.push(Symmetry { k, pi: *pi });
                }
            }
        }
        out
    }

    /// Lexicographically least `(a1..a4)` over all units and all of `S4`.
    /// A search key: coarser than [`CoverParams::surfaces_isomorphic`].
    pub fn canonical_surface_form(&self) -> CoverParams {
        let mut best = self.a;
        for k in units(self.n) {
            let mut a = self.scaled(k).a;
            a.sort_unstable();
            if a < best {
                best = a;
            }
        }
        let mut sorted = self.a;
        sorted.sort_unstable();
        if sorted < best {
            best = sorted;
        }
        CoverParams { n: self.n, a: best }
    }

    /// Every valid quadruple of degree `n`, in lexicographic order of `a`.
    pub fn all_of_degree(n: u32) -> Vec<CoverParams> {
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        for a1 in 1..=n {
            for a2 in 1..=n {
                for a3 in 1..=n {
                    let a4 = reduce(-((a1 + a2 + a3) as i64), n);
                    if let Ok(p) = CoverParams::validate(n as i64, [a1, a2, a3, a4].map(i64::from)) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CoverParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4] = self.a;
        write!(f, "M_{}({},{},{},{})", self.n, a1, a2, a3, a4)
    }
}
