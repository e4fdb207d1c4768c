//! The square-tiled surface of a cyclic cover as an explicit gluing of `2N`
//! unit squares.
//!
//! The base pillow is glued from a white and a black unit square. In the
//! white square's frame the corners are `A` (top left), `B` (bottom left),
//! `C` (bottom right) and `D` (top right); the black square is drawn as
//! unfolded across `[CD]`, so its frame has `D, C, B, A` in the same
//! positions. Square `2k` is the white square of deck copy `k`, square
//! `2k + 1` the black one.
//!
//! Crossing from white copy `k` into black copy `k + d` across a pillow
//! side uses the increments `d = 0` across `[CD]`, `a3` across `[BC]`,
//! `a2 + a3` across `[AB]` and `a1 + a2 + a3` across `[DA]`. Walking once
//! counterclockwise around the corner over `z_i` then shifts the deck index
//! by `a_i`.
//!
//! Every square carries a chart frame. For the Abelian kind the frame of a
//! square with odd deck index is the pillow frame turned by a half-turn, so
//! that all gluings become translations; otherwise it is the pillow frame.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::CoverParams;
use crate::perm::SquarePerm;
use crate::strata::{self, DifferentialKind, Stratum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Bottom,
    Right,
    Top,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Bottom, Side::Right, Side::Top];

    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Bottom => Side::Top,
            Side::Top => Side::Bottom,
        }
    }

    /// The two corners on this side.
    pub fn corners(self) -> [Corner; 2] {
        match self {
            Side::Left => [Corner::BottomLeft, Corner::TopLeft],
            Side::Right => [Corner::BottomRight, Corner::TopRight],
            Side::Bottom => [Corner::BottomLeft, Corner::BottomRight],
            Side::Top => [Corner::TopLeft, Corner::TopRight],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Corner {
    BottomLeft,
    BottomRight,
    TopRight,
    TopLeft,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::BottomLeft,
        Corner::BottomRight,
        Corner::TopRight,
        Corner::TopLeft,
    ];

    #[inline]
    fn index(self) -> usize {
        self as usize
    }

    fn xy(self) -> (u8, u8) {
        match self {
            Corner::BottomLeft => (0, 0),
            Corner::BottomRight => (1, 0),
            Corner::TopRight => (1, 1),
            Corner::TopLeft => (0, 1),
        }
    }

    fn from_xy(x: u8, y: u8) -> Corner {
        match (x, y) {
            (0, 0) => Corner::BottomLeft,
            (1, 0) => Corner::BottomRight,
            (1, 1) => Corner::TopRight,
            _ => Corner::TopLeft,
        }
    }

    fn half_turn(self) -> Corner {
        let (x, y) = self.xy();
        Corner::from_xy(1 - x, 1 - y)
    }

    /// Turning counterclockwise about this corner, the square is left
    /// through this side.
    pub fn ccw_exit(self) -> Side {
        match self {
            Corner::BottomLeft => Side::Left,
            Corner::BottomRight => Side::Bottom,
            Corner::TopRight => Side::Right,
            Corner::TopLeft => Side::Top,
        }
    }
}

/// Corner label, i.e. the branch point `z1..z4` the corner lies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    A,
    B,
    C,
    D,
}

impl Label {
    /// 0-based index of the branch point.
    pub fn branch_index(self) -> usize {
        self as usize
    }
}

/// Where a side of a square is glued: the target square, the target side in
/// the target's chart frame, and whether the transition is a half-turn
/// rather than a translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Glue {
    pub square: usize,
    pub side: Side,
    pub rotated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cylinder {
    pub width: u32,
    pub height: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CylinderDecomposition {
    pub direction: Direction,
    pub cylinders: Vec<Cylinder>,
}

impl CylinderDecomposition {
    pub fn area(&self) -> u32 {
        self.cylinders.iter().map(|c| c.width * c.height).sum()
    }

    pub fn total_height(&self) -> u32 {
        self.cylinders.iter().map(|c| c.height).sum()
    }

    /// `Σ h_i / w_i` as a reduced fraction `(numerator, denominator)`.
    pub fn modulus_sum(&self) -> num_rational::Ratio<i64> {
        self.cylinders
            .iter()
            .map(|c| num_rational::Ratio::new(c.height as i64, c.width as i64))
            .sum()
    }
}

/// A cone point found by walking counterclockwise around a corner class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: Label,
    /// Corner slots in walk order; the cone angle is `slots.len() · π/2`.
    pub slots: Vec<(usize, Corner)>,
}

impl Vertex {
    pub fn quarter_turns(&self) -> usize {
        self.slots.len()
    }

    pub fn is_regular(&self) -> bool {
        self.slots.len() == 4
    }
}

#[derive(Clone, Debug)]
pub struct Origami {
    params: CoverParams,
    kind: DifferentialKind,
    gluing: Vec<[Glue; 4]>,
    upright: Vec<bool>,
    corner_labels: Vec<[Label; 4]>,
    pi_h: SquarePerm,
    pi_v: SquarePerm,
    vertices: Vec<Vertex>,
    vertex_of: Vec<[usize; 4]>,
}

const WHITE_LABELS: [Label; 4] = [Label::B, Label::C, Label::D, Label::A];
const BLACK_LABELS: [Label; 4] = [Label::C, Label::B, Label::A, Label::D];

/// Side of the white square, the matching side of the black square in its
/// pillow frame, and whether the pillow glues them by a half-turn.
fn pillow_side(side: Side) -> (Side, bool) {
    match side {
        Side::Left | Side::Right => (side.opposite(), false),
        Side::Bottom | Side::Top => (side, true),
    }
}

/// Deck increment when crossing from a white square into a black one.
fn white_to_black_shift(side: Side, a: [u32; 4]) -> u64 {
    let [a1, a2, a3, _] = a.map(u64::from);
    match side {
        Side::Right => 0,
        Side::Bottom => a3,
        Side::Left => a2 + a3,
        Side::Top => a1 + a2 + a3,
    }
}

/// Gluing in pillow frames: a white square is always glued to a black one.
fn pillow_gluing(n: u32, a: [u32; 4]) -> Vec<[Glue; 4]> {
    let n64 = n as u64;
    let squares = 2 * n as usize;
    let filler = Glue {
        square: 0,
        side: Side::Left,
        rotated: false,
    };
    let mut gluing = vec![[filler; 4]; squares];
    for k in 0..n as u64 {
        for side in Side::ALL {
            let (black_side, rotated) = pillow_side(side);
            let j = (k + white_to_black_shift(side, a)) % n64;
            let white = 2 * k as usize;
            let black = 2 * j as usize + 1;
            gluing[white][side.index()] = Glue {
                square: black,
                side: black_side,
                rotated,
            };
            gluing[black][black_side.index()] = Glue {
                square: white,
                side,
                rotated,
            };
        }
    }
    gluing
}

impl Origami {
    pub fn build(p: &CoverParams) -> Origami {
        Self::from_params(*p)
    }

    fn from_params(p: CoverParams) -> Origami {
        let kind = strata::differential_kind(&p);
        let n = p.n();
        let squares = 2 * n as usize;
        let pillow = pillow_gluing(n, p.a());
        let upright: Vec<bool> = (0..squares)
            .map(|s| !kind.is_abelian() || (s / 2) % 2 == 0)
            .collect();

        // chart side X of square s is pillow side X, or its opposite after a half-turn
        let to_pillow = |s: usize, side: Side| if upright[s] { side } else { side.opposite() };
        let mut gluing = pillow.clone();
        for s in 0..squares {
            for side in Side::ALL {
                let g = pillow[s][to_pillow(s, side).index()];
                gluing[s][side.index()] = Glue {
                    square: g.square,
                    side: to_pillow(g.square, g.side),
                    rotated: g.rotated ^ !upright[s] ^ !upright[g.square],
                };
            }
        }

        let corner_labels: Vec<[Label; 4]> = (0..squares)
            .map(|s| {
                let base = if s % 2 == 0 { WHITE_LABELS } else { BLACK_LABELS };
                Corner::ALL.map(|c| {
                    let c = if upright[s] { c } else { c.half_turn() };
                    base[c.index()]
                })
            })
            .collect();

        let right: Vec<usize> = (0..squares).map(|s| gluing[s][Side::Right.index()].square).collect();
        let up: Vec<usize> = (0..squares)
            .map(|s| {
                // for quadratic kinds the black square continues a column through [BC]
                let side = if !kind.is_abelian() && s % 2 == 1 {
                    Side::Bottom
                } else {
                    Side::Top
                };
                gluing[s][side.index()].square
            })
            .collect();
        let pi_h = SquarePerm::new(right).expect("right neighbours form a permutation");
        let pi_v = SquarePerm::new(up).expect("top neighbours form a permutation");

        let mut origami = Origami {
            params: p,
            kind,
            gluing,
            upright,
            corner_labels,
            pi_h,
            pi_v,
            vertices: Vec::new(),
            vertex_of: Vec::new(),
        };
        origami.walk_vertices();
        origami
    }

    pub fn params(&self) -> &CoverParams {
        &self.params
    }

    pub fn kind(&self) -> DifferentialKind {
        self.kind
    }

    pub fn square_count(&self) -> usize {
        self.gluing.len()
    }

    pub fn glue(&self, square: usize, side: Side) -> Glue {
        self.gluing[square][side.index()]
    }

    pub fn is_upright(&self, square: usize) -> bool {
        self.upright[square]
    }

    pub fn corner_label(&self, square: usize, corner: Corner) -> Label {
        self.corner_labels[square][corner.index()]
    }

    pub fn pi_h(&self) -> &SquarePerm {
        &self.pi_h
    }

    pub fn pi_v(&self) -> &SquarePerm {
        &self.pi_v
    }

    /// Cycle string of `pi_h` or `pi_v` in the customary layout: cycles by
    /// smallest element, each written from that element when its square is
    /// upright and from its largest element otherwise.
    pub fn cycle_string(&self, direction: Direction) -> String {
        let perm = match direction {
            Direction::Horizontal => &self.pi_h,
            Direction::Vertical => &self.pi_v,
        };
        perm.to_cycle_string_by(|cycle| {
            if self.upright[cycle[0]] {
                cycle[0]
            } else {
                *cycle.iter().max().expect("cycles are nonempty")
            }
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_at(&self, square: usize, corner: Corner) -> &Vertex {
        &self.vertices[self.vertex_of[square][corner.index()]]
    }

    /// Steps from `(square, corner)` across the side met when turning
    /// counterclockwise, landing on the same point seen from the neighbour.
    fn rotate_ccw(&self, square: usize, corner: Corner) -> (usize, Corner) {
        let exit = corner.ccw_exit();
        let g = self.glue(square, exit);
        let (x, y) = corner.xy();
        let (x, y) = match exit {
            Side::Left | Side::Right => (1 - x, y),
            Side::Bottom | Side::Top => (x, 1 - y),
        };
        let landed = Corner::from_xy(x, y);
        (g.square, if g.rotated { landed.half_turn() } else { landed })
    }

    fn walk_vertices(&mut self) {
        let squares = self.square_count();
        let mut vertex_of = vec![[usize::MAX; 4]; squares];
        let mut vertices = Vec::new();
        for s in 0..squares {
            for c in Corner::ALL {
                if vertex_of[s][c.index()] != usize::MAX {
                    continue;
                }
                let id = vertices.len();
                let mut slots = Vec::new();
                let (mut cur_s, mut cur_c) = (s, c);
                while vertex_of[cur_s][cur_c.index()] == usize::MAX {
                    vertex_of[cur_s][cur_c.index()] = id;
                    slots.push((cur_s, cur_c));
                    (cur_s, cur_c) = self.rotate_ccw(cur_s, cur_c);
                }
                vertices.push(Vertex {
                    label: self.corner_label(s, c),
                    slots,
                });
            }
        }
        self.vertices = vertices;
        self.vertex_of = vertex_of;
    }

    /// Stratum read off the cone angles of the vertex walk.
    pub fn cone_stratum(&self) -> Stratum {
        let abelian = self.kind.is_abelian();
        let degrees = self.vertices.iter().map(|v| {
            let q = v.quarter_turns() as i32;
            if abelian {
                q / 4 - 1
            } else {
                q / 2 - 2
            }
        });
        Stratum::from_points(self.kind, degrees)
    }

    /// Genus from `V - E + F` with `F = 2N` squares and `E = 4N` edges.
    pub fn euler_genus(&self) -> i64 {
        let f = self.square_count() as i64;
        let e = 2 * f;
        let chi = self.vertices.len() as i64 - e + f;
        (2 - chi) / 2
    }

    /// Walks one band of squares crossing `start` in `direction`, returning
    /// `(square, exit side)` pairs in order.
    fn band(&self, start: usize, exit: Side) -> Vec<(usize, Side)> {
        let mut out = vec![(start, exit)];
        let (mut s, mut e) = (start, exit);
        loop {
            let g = self.glue(s, e);
            (s, e) = (g.square, g.side.opposite());
            if (s, e) == (start, exit) {
                return out;
            }
            assert!(
                out.len() <= self.square_count(),
                "band through square {start} does not close"
            );
            out.push((s, e));
        }
    }

    fn bands(&self, direction: Direction) -> Vec<Vec<(usize, Side)>> {
        let exit = match direction {
            Direction::Horizontal => Side::Right,
            Direction::Vertical => Side::Top,
        };
        let mut seen = vec![false; self.square_count()];
        let mut out = Vec::new();
        for s in 0..self.square_count() {
            if seen[s] {
                continue;
            }
            let band = self.band(s, exit);
            for &(t, _) in &band {
                assert!(!seen[t], "square {t} lies on two bands");
                seen[t] = true;
            }
            out.push(band);
        }
        out
    }

    /// Maximal cylinders in the given direction. Bands of squares are merged
    /// across a boundary line unless the line carries a cone point.
    pub fn cylinder_decomposition(&self, direction: Direction) -> CylinderDecomposition {
        let bands = self.bands(direction);
        let mut band_of = vec![0usize; self.square_count()];
        for (i, band) in bands.iter().enumerate() {
            for &(s, _) in band {
                band_of[s] = i;
            }
        }
        // left-hand side of the direction of travel
        let boundary = |exit: Side| match exit {
            Side::Right => Side::Top,
            Side::Left => Side::Bottom,
            Side::Top => Side::Left,
            Side::Bottom => Side::Right,
        };
        let mut parent: Vec<usize> = (0..bands.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, band) in bands.iter().enumerate() {
            let sides = [boundary(band[0].1), boundary(band[0].1).opposite()];
            for (which, _) in sides.iter().enumerate() {
                let regular = band.iter().all(|&(s, exit)| {
                    let side = if which == 0 {
                        boundary(exit)
                    } else {
                        boundary(exit).opposite()
                    };
                    side.corners().iter().all(|&c| self.vertex_at(s, c).is_regular())
                });
                if regular {
                    let (s, exit) = band[0];
                    let side = if which == 0 {
                        boundary(exit)
                    } else {
                        boundary(exit).opposite()
                    };
                    let neighbour = band_of[self.glue(s, side).square];
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, neighbour));
                    parent[ri] = rj;
                }
            }
        }
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for i in 0..bands.len() {
            let root = find(&mut parent, i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, members)) => members.push(i),
                None => groups.push((root, vec![i])),
            }
        }
        let cylinders = groups
            .into_iter()
            .map(|(_, members)| {
                let width = bands[members[0]].len();
                assert!(
                    members.iter().all(|&m| bands[m].len() == width),
                    "bands of one cylinder have different lengths"
                );
                Cylinder {
                    width: width as u32,
                    height: members.len() as u32,
                }
            })
            .collect();
        CylinderDecomposition {
            direction,
            cylinders,
        }
    }

    /// Checks the construction against invariants computed independently of
    /// it: connectivity, cone angles, genus, deck equivariance and holonomy.
    pub fn verify(&self, p: &CoverParams) -> Result<VerificationReport, VerificationFailure> {
        if *p != self.params {
            return Err(VerificationFailure::Gluing(format!(
                "origami was built for {} but is checked against {p}",
                self.params
            )));
        }
        self.check_gluing()?;
        if !self.is_transitive() {
            return Err(VerificationFailure::Transitivity);
        }

        let predicted = strata::singularity_pattern(p);
        let observed = self.cone_stratum();
        if observed != predicted {
            return Err(VerificationFailure::ConeAngles {
                expected: predicted.render(true),
                found: observed.render(true),
            });
        }
        let gcds = p.gcds();
        for (i, &g) in gcds.iter().enumerate() {
            let over: Vec<&Vertex> = self
                .vertices
                .iter()
                .filter(|v| v.label.branch_index() == i)
                .collect();
            let turns = 2 * p.n() as usize / g as usize;
            if over.len() != g as usize || over.iter().any(|v| v.quarter_turns() != turns) {
                return Err(VerificationFailure::ConeAngles {
                    expected: format!("{g} points of {turns} quarter-turns over z{}", i + 1),
                    found: format!(
                        "{:?}",
                        over.iter().map(|v| v.quarter_turns()).collect::<Vec<_>>()
                    ),
                });
            }
        }
        let total: usize = self.vertices.iter().map(Vertex::quarter_turns).sum();
        debug_assert_eq!(total, 4 * self.square_count());

        let expected_genus = strata::genus(p).g as i64;
        let euler = self.euler_genus();
        if euler != expected_genus {
            return Err(VerificationFailure::Genus {
                expected: expected_genus,
                found: euler,
            });
        }

        self.check_deck_equivariance()?;

        let trivial = self.holonomy_is_trivial();
        if trivial != self.kind.is_abelian() {
            return Err(VerificationFailure::Holonomy(format!(
                "holonomy trivial = {trivial} but kind is {:?}",
                self.kind
            )));
        }
        if self.kind.is_abelian() {
            if let Some((s, side)) = self.first_rotated_gluing() {
                return Err(VerificationFailure::Holonomy(format!(
                    "square {s} side {side:?} is glued by a half-turn in translation charts"
                )));
            }
        }

        Ok(VerificationReport {
            vertex_count: self.vertices.len(),
            quarter_turns: {
                let mut q: Vec<usize> = self.vertices.iter().map(Vertex::quarter_turns).collect();
                q.sort_unstable_by(|a, b| b.cmp(a));
                q
            },
            genus: euler,
            holonomy_trivial: trivial,
        })
    }

    /// Involution, side compatibility and corner labels on both sides of
    /// every glued edge.
    fn check_gluing(&self) -> Result<(), VerificationFailure> {
        for s in 0..self.square_count() {
            for side in Side::ALL {
                let g = self.glue(s, side);
                let back = self.glue(g.square, g.side);
                if back.square != s || back.side != side || back.rotated != g.rotated {
                    return Err(VerificationFailure::Gluing(format!(
                        "gluing of square {s} side {side:?} is not an involution"
                    )));
                }
                let expected_side = if g.rotated { side } else { side.opposite() };
                if g.side != expected_side {
                    return Err(VerificationFailure::Gluing(format!(
                        "square {s} side {side:?} meets side {:?}, which is not a translate or half-turn",
                        g.side
                    )));
                }
                for c in side.corners() {
                    let (t, d) = self.rotate_ccw_through(s, c, side);
                    if self.corner_label(s, c) != self.corner_label(t, d) {
                        return Err(VerificationFailure::Gluing(format!(
                            "corner labels disagree across square {s} side {side:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn rotate_ccw_through(&self, square: usize, corner: Corner, side: Side) -> (usize, Corner) {
        let g = self.glue(square, side);
        let (x, y) = corner.xy();
        let (x, y) = match side {
            Side::Left | Side::Right => (1 - x, y),
            Side::Bottom | Side::Top => (x, 1 - y),
        };
        let landed = Corner::from_xy(x, y);
        (g.square, if g.rotated { landed.half_turn() } else { landed })
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.square_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let inv_h = self.pi_h.inverse();
        let inv_v = self.pi_v.inverse();
        while let Some(s) = stack.pop() {
            for t in [
                self.pi_h.apply(s),
                self.pi_v.apply(s),
                inv_h.apply(s),
                inv_v.apply(s),
            ] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// With `R(j) = j + 2`, quadratic kinds commute with `R`; the Abelian
    /// kind is conjugated to the inverse permutations, since the deck
    /// generator acts as a half-turn on the translation charts.
    fn check_deck_equivariance(&self) -> Result<(), VerificationFailure> {
        let n = self.square_count();
        let shift = SquarePerm::new((0..n).map(|j| (j + 2) % n).collect()).expect("shift");
        let unshift = shift.inverse();
        for (name, perm) in [("pi_h", &self.pi_h), ("pi_v", &self.pi_v)] {
            let conjugated = shift.compose(perm).compose(&unshift);
            let expected = if self.kind.is_abelian() {
                perm.inverse()
            } else {
                perm.clone()
            };
            if conjugated != expected {
                return Err(VerificationFailure::Equivariance(format!(
                    "R {name} R^-1 is not {}",
                    if self.kind.is_abelian() { "the inverse" } else { "equal" }
                )));
            }
        }
        Ok(())
    }

    fn first_rotated_gluing(&self) -> Option<(usize, Side)> {
        (0..self.square_count())
            .flat_map(|s| Side::ALL.map(|side| (s, side)))
            .find(|&(s, side)| self.glue(s, side).rotated)
    }

    /// Tries to re-choose every chart by a half-turn so that all gluings are
    /// translations. This succeeds exactly when the linear holonomy is trivial.
    pub fn holonomy_is_trivial(&self) -> bool {
        let n = self.square_count();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut stack = vec![root];
            while let Some(s) = stack.pop() {
                let fs = flip[s].expect("visited");
                for side in Side::ALL {
                    let g = self.glue(s, side);
                    let want = fs ^ g.rotated;
                    match flip[g.square] {
                        None => {
                            flip[g.square] = Some(want);
                            stack.push(g.square);
                        }
                        Some(ft) if ft != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub vertex_count: usize,
    /// Cone angles in units of `π/2`, descending.
    pub quarter_turns: Vec<usize>,
    pub genus: i64,
    pub holonomy_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerificationFailure {
    #[error("gluing inconsistency: {0}")]
    Gluing(String),
    #[error("pi_h and pi_v do not act transitively on the squares")]
    Transitivity,
    #[error("cone angles disagree: expected {expected}, found {found}")]
    ConeAngles { expected: String, found: String },
    #[error("Euler characteristic gives genus {found}, expected {expected}")]
    Genus { expected: i64, found: i64 },
    #[error("deck equivariance fails: {0}")]
    Equivariance(String),
    #[error("holonomy mismatch: {0}")]
    Holonomy(String),
}

/// Width and total height of horizontal cylinders predicted from `gcd(N, a1 + a4)`.
pub fn predicted_horizontal_cylinders(p: &CoverParams) -> (u32, u32) {
    let [a1, _, _, a4] = p.a();
    let g = (a1 + a4).gcd(&p.n());
    (2 * p.n() / g, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::validate(n, a).unwrap()
    }

    /// Closed-form neighbour tables, written out independently of the gluing.
    fn formula_permutations(p: &CoverParams) -> (Vec<usize>, Vec<usize>) {
        let n = p.n() as i64;
        let [a1, a2, a3, a4] = p.a().map(i64::from);
        let w = |k: i64| 2 * k.rem_euclid(n) as usize;
        let b = |k: i64| 2 * k.rem_euclid(n) as usize + 1;
        let mut h = vec![0; 2 * n as usize];
        let mut v = vec![0; 2 * n as usize];
        let abelian = strata::differential_kind(p).is_abelian();
        for k in 0..n {
            let (wk, bk) = (w(k), b(k));
            if !abelian {
                h[wk] = b(k);
                h[bk] = w(k + a1 + a4);
                v[wk] = b(k - a4);
                v[bk] = w(k - a3);
            } else if k % 2 == 0 {
                h[wk] = b(k);
                h[bk] = w(k + a1 + a4);
                v[wk] = b(k - a4);
                v[bk] = w(k + a4);
            } else {
                h[wk] = b(k + a2 + a3);
                h[bk] = w(k);
                v[wk] = b(k + a3);
                v[bk] = w(k - a3);
            }
        }
        (h, v)
    }

    #[test]
    fn printed_permutations() {
        let o = Origami::build(&m(6, [1, 1, 1, 3]));
        assert_eq!(o.cycle_string(Direction::Horizontal), "(0,1,8,9,4,5)(11,10,3,2,7,6)");
        assert_eq!(o.cycle_string(Direction::Vertical), "(0,7,4,11,8,3)(1,6,9,2,5,10)");
        let o = Origami::build(&m(4, [1, 3, 2, 2]));
        assert_eq!(o.cycle_string(Direction::Horizontal), "(0,1,6,7,4,5,2,3)");
        assert_eq!(o.cycle_string(Direction::Vertical), "(0,5)(1,4)(2,7)(3,6)");
        let o = Origami::build(&m(2, [1, 1, 1, 1]));
        assert_eq!(o.pi_h().to_cycle_string(), "(0,1)(2,3)");
        assert_eq!(o.pi_v().to_cycle_string(), "(0,3)(1,2)");
        assert_eq!(o.euler_genus(), 1);
    }

    #[test]
    fn gluing_matches_closed_form_tables() {
        for n in 2..=16 {
            for p in CoverParams::all_of_degree(n) {
                let o = Origami::build(&p);
                let (h, v) = formula_permutations(&p);
                assert_eq!(o.pi_h().as_slice(), &h[..], "{p}");
                assert_eq!(o.pi_v().as_slice(), &v[..], "{p}");
            }
        }
    }

    #[test]
    fn corner_walk_shifts_deck_index_by_exponent() {
        let p = m(7, [1, 2, 3, 1]);
        let o = Origami::build(&p);
        // white square 2k: corners BL, BR, TR, TL lie over z2, z3, z4, z1
        let corner_for = [Corner::TopLeft, Corner::BottomLeft, Corner::BottomRight, Corner::TopRight];
        for k in 0..7usize {
            for (i, &c) in corner_for.iter().enumerate() {
                let (t, d) = o.rotate_ccw(2 * k, c);
                let (u, e) = o.rotate_ccw(t, d);
                assert_eq!(o.corner_label(u, e).branch_index(), i);
                assert_eq!(u, 2 * ((k + p.a()[i] as usize) % 7), "z{} from {k}", i + 1);
            }
        }
    }

    #[test]
    fn verification_examples() {
        let p = m(6, [1, 1, 1, 3]);
        let r = Origami::build(&p).verify(&p).unwrap();
        assert_eq!(r.quarter_turns, vec![12, 12, 12, 4, 4, 4]);
        assert!(r.holonomy_trivial);
        assert_eq!(r.genus, 4);

        let p = m(4, [1, 3, 2, 2]);
        let o = Origami::build(&p);
        let r = o.verify(&p).unwrap();
        assert!(!r.holonomy_trivial);
        assert_eq!(o.cone_stratum().to_string(), "Q(2,2)+4pts");

        let p = m(2, [1, 1, 1, 1]);
        let r = Origami::build(&p).verify(&p).unwrap();
        assert_eq!(r.genus, 1);
        assert!(r.quarter_turns.iter().all(|&q| q == 4));
    }

    #[test]
    fn cylinder_examples() {
        let h = |n, a| Origami::build(&m(n, a)).cylinder_decomposition(Direction::Horizontal).cylinders;
        assert_eq!(h(6, [1, 1, 1, 3]), vec![Cylinder { width: 6, height: 1 }; 2]);
        assert_eq!(h(4, [1, 3, 2, 2]), vec![Cylinder { width: 8, height: 1 }]);
        assert_eq!(h(2, [1, 1, 1, 1]), vec![Cylinder { width: 2, height: 2 }]);
    }

    #[test]
    fn bands_are_cycles_of_the_permutations() {
        for n in 2..=12 {
            for p in CoverParams::all_of_degree(n) {
                let o = Origami::build(&p);
                for (dir, perm) in [(Direction::Horizontal, o.pi_h()), (Direction::Vertical, o.pi_v())] {
                    let mut from_bands: Vec<Vec<usize>> = o
                        .bands(dir)
                        .into_iter()
                        .map(|b| {
                            let mut s: Vec<usize> = b.into_iter().map(|x| x.0).collect();
                            s.sort_unstable();
                            s
                        })
                        .collect();
                    let mut from_perm: Vec<Vec<usize>> = perm
                        .cycles()
                        .into_iter()
                        .map(|mut c| {
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    from_bands.sort();
                    from_perm.sort();
                    assert_eq!(from_bands, from_perm, "{p} {dir:?}");
                }
            }
        }
    }

    #[test]
    fn dropping_gcd_condition_breaks_transitivity() {
        // gcd(4, 2, 2, 2, 2) = 2: two disjoint copies
        let o = Origami::from_params(CoverParams::unchecked(4, [2, 2, 2, 2]));
        assert!(!o.is_transitive());
        let o = Origami::from_params(CoverParams::unchecked(6, [3, 3, 3, 3]));
        assert!(!o.is_transitive());
        let o = Origami::from_params(CoverParams::unchecked(6, [2, 4, 2, 4]));
        assert!(!o.is_transitive());
    }
}
