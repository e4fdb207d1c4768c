//! Parity of the spin structure of a square-tiled translation surface.
//!
//! Closed curves are routed through square centres and edge midpoints, so
//! they never meet a cone point. Such a curve is a cycle in the dual graph
//! whose vertices are squares and whose edges `H(s) = {s, pi_h(s)}` and
//! `V(s) = {s, pi_v(s)}` cross the right and top side of `s`. For a simple
//! closed curve the quadratic form is `q = ind + 1 (mod 2)`, with `ind` the
//! turning number counted in quarter-turns of the chart direction. The parity
//! is the Arf invariant of `q` on `H1(S; Z/2)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::origami::{Origami, Side};
use crate::params::CoverParams;

/// Serializes as `"even"`, `"odd"` or `null`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpinParity {
    Even,
    Odd,
    /// Not a translation surface, or some zero has odd degree.
    Undefined,
}

impl SpinParity {
    /// `"even"`, `"odd"`, or `None`.
    pub fn as_str(self) -> Option<&'static str> {
        match self {
            SpinParity::Even => Some("even"),
            SpinParity::Odd => Some("odd"),
            SpinParity::Undefined => None,
        }
    }
}

impl Serialize for SpinParity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_str().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpinParity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Option::<String>::deserialize(d)?.as_deref() {
            None => Ok(SpinParity::Undefined),
            Some("even") => Ok(SpinParity::Even),
            Some("odd") => Ok(SpinParity::Odd),
            Some(other) => Err(serde::de::Error::custom(format!("unknown parity {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("surface is not a translation surface")]
    NotTranslation,
    #[error("quadratic form does not vanish on the radical of the intersection form")]
    RadicalNotIsotropic,
    #[error("symplectic basis has {found} pairs, expected genus {expected}")]
    RankMismatch { expected: usize, found: usize },
}

/// A vector over `Z/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Vec {
    len: usize,
    words: Vec<u64>,
}

impl Z2Vec {
    pub fn zeros(len: usize) -> Self {
        Z2Vec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.flip(i);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &Z2Vec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Z2Vec) -> Z2Vec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Parity of the support of `self & other`.
    pub fn dot(&self, other: &Z2Vec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Edge-space bookkeeping for the dual graph of a translation origami.
/// Edge `s` is `H(s)`, edge `n + s` is `V(s)`, with `n` squares.
pub struct DualGraph<'a> {
    origami: &'a Origami,
    inv_h: Vec<usize>,
    inv_v: Vec<usize>,
}

impl<'a> DualGraph<'a> {
    pub fn new(origami: &'a Origami) -> Result<Self, SpinError> {
        if !origami.kind().is_abelian() {
            return Err(SpinError::NotTranslation);
        }
        Ok(DualGraph {
            origami,
            inv_h: origami.pi_h().inverse().as_slice().to_vec(),
            inv_v: origami.pi_v().inverse().as_slice().to_vec(),
        })
    }

    pub fn squares(&self) -> usize {
        self.origami.square_count()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.squares()
    }

    /// Endpoints of an edge, from the square it leaves to the one it enters.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let n = self.squares();
        if e < n {
            (e, self.origami.pi_h().apply(e))
        } else {
            (e - n, self.origami.pi_v().apply(e - n))
        }
    }

    /// The edge crossing `side` of `square`.
    pub fn edge_at(&self, square: usize, side: Side) -> usize {
        let n = self.squares();
        match side {
            Side::Right => square,
            Side::Left => self.inv_h[square],
            Side::Top => n + square,
            Side::Bottom => n + self.inv_v[square],
        }
    }

    /// Whether every square meets an even number of edges of `x`.
    pub fn is_cycle(&self, x: &Z2Vec) -> bool {
        (0..self.squares()).all(|s| {
            Side::ALL
                .iter()
                .filter(|&&side| x.get(self.edge_at(s, side)))
                .count()
                % 2
                == 0
        })
    }

    /// `y` pushed by `(-1/2, -1/2)` onto the sides of the squares, recorded
    /// as the dual edges it crosses there: the pushed `H(s)` is the bottom
    /// side of `s`, the pushed `V(s)` its left side.
    pub fn pushed(&self, y: &Z2Vec) -> Z2Vec {
        let n = self.squares();
        let mut out = Z2Vec::zeros(self.edge_count());
        for s in 0..n {
            if y.get(s) {
                out.flip(n + self.inv_v[s]);
            }
            if y.get(n + s) {
                out.flip(self.inv_h[s]);
            }
        }
        out
    }

    /// Mod-2 intersection number, counted between `x` and the pushed `y`,
    /// which meet transversally at edge midpoints.
    pub fn intersection(&self, x: &Z2Vec, y: &Z2Vec) -> bool {
        x.dot(&self.pushed(y))
    }

    /// `q` of any cycle, traced directly: squares met by four edges are
    /// resolved straight through, each contributing a crossing, and every
    /// resulting closed curve contributes `ind + 1`.
    pub fn q_direct(&self, x: &Z2Vec) -> bool {
        debug_assert!(self.is_cycle(x));
        let n = self.squares();
        let used = |s: usize, side: Side| x.get(self.edge_at(s, side));
        let mut crossings = 0usize;
        let mut partner = vec![[None::<Side>; 4]; n];
        for s in 0..n {
            let sides: Vec<Side> = Side::ALL.into_iter().filter(|&d| used(s, d)).collect();
            match sides.len() {
                0 => {}
                2 => {
                    partner[s][side_index(sides[0])] = Some(sides[1]);
                    partner[s][side_index(sides[1])] = Some(sides[0]);
                }
                4 => {
                    crossings += 1;
                    for d in Side::ALL {
                        partner[s][side_index(d)] = Some(d.opposite());
                    }
                }
                _ => unreachable!("not a cycle"),
            }
        }
        let mut visited = vec![[false; 4]; n];
        let mut total = crossings;
        for s in 0..n {
            for d in Side::ALL {
                if partner[s][side_index(d)].is_none() || visited[s][side_index(d)] {
                    continue;
                }
                // leave s through d, then keep following partners
                let (mut cur, mut exit) = (s, d);
                let mut quarter_turns: i64 = 0;
                loop {
                    visited[cur][side_index(exit)] = true;
                    let g = self.origami.glue(cur, exit);
                    let entry = g.side;
                    visited[g.square][side_index(entry)] = true;
                    let next_exit = partner[g.square][side_index(entry)].expect("cycle continues");
                    quarter_turns += turn(exit, next_exit);
                    cur = g.square;
                    exit = next_exit;
                    if (cur, exit) == (s, d) {
                        break;
                    }
                }
                debug_assert_eq!(quarter_turns % 4, 0);
                total += (quarter_turns / 4 + 1).rem_euclid(2) as usize;
            }
        }
        total % 2 == 1
    }

    /// Spanning forest by scanning edges in `order`, then one cycle per
    /// edge outside the tree.
    pub fn fundamental_cycles(&self, order: &[usize]) -> Vec<Z2Vec> {
        let n = self.squares();
        let m = self.edge_count();
        assert_eq!(order.len(), m, "edge order must list every edge");
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut extra = Vec::new();
        for &e in order {
            let (u, v) = self.endpoints(e);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                extra.push(e);
            } else {
                parent[ru] = rv;
                tree_adj[u].push((v, e));
                tree_adj[v].push((u, e));
            }
        }
        // root the tree at the first endpoint in scan order
        let root = self.endpoints(order[0]).0;
        let mut up: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &tree_adj[u] {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    up[v] = Some((u, e));
                    queue.push_back(v);
                }
            }
        }
        assert!(depth.iter().all(|&d| d != usize::MAX), "dual graph is connected");
        extra
            .into_iter()
            .map(|e| {
                let mut cycle = Z2Vec::unit(m, e);
                let (mut u, mut v) = self.endpoints(e);
                while u != v {
                    if depth[u] < depth[v] {
                        std::mem::swap(&mut u, &mut v);
                    }
                    let (pu, pe) = up[u].expect("non-root has a parent");
                    cycle.flip(pe);
                    u = pu;
                }
                cycle
            })
            .collect()
    }
}

fn side_index(side: Side) -> usize {
    Side::ALL.iter().position(|&d| d == side).expect("side")
}

/// Heading when leaving through `side`, in quarter-turns from east.
fn heading(side: Side) -> i64 {
    match side {
        Side::Right => 0,
        Side::Top => 1,
        Side::Left => 2,
        Side::Bottom => 3,
    }
}

/// Signed quarter-turns between leaving through `from` and leaving the
/// next square through `to`.
fn turn(from: Side, to: Side) -> i64 {
    match (heading(to) - heading(from)).rem_euclid(4) {
        0 => 0,
        1 => 1,
        3 => -1,
        _ => unreachable!("a curve never reverses inside a square"),
    }
}

/// Homology data behind one Arf computation.
#[derive(Clone, Debug)]
pub struct ArfData {
    /// Fundamental cycles as edge vectors.
    pub cycles: Vec<Z2Vec>,
    /// `q` of each fundamental cycle.
    pub q: Vec<bool>,
    /// Symplectic pairs, as coefficient vectors over `cycles`.
    pub pairs: Vec<(Z2Vec, Z2Vec)>,
    /// Radical of the intersection form, spanned by loops around vertices.
    pub radical: Vec<Z2Vec>,
    pub arf: bool,
}

struct Form {
    q: Vec<bool>,
    gram: Vec<Z2Vec>,
}

impl Form {
    fn pair(&self, x: &Z2Vec, y: &Z2Vec) -> bool {
        x.ones().fold(false, |acc, i| acc ^ self.gram[i].dot(y))
    }

    fn q(&self, x: &Z2Vec) -> bool {
        let idx: Vec<usize> = x.ones().collect();
        let mut acc = false;
        for (k, &i) in idx.iter().enumerate() {
            acc ^= self.q[i];
            for &j in &idx[k + 1..] {
                acc ^= self.gram[i].get(j);
            }
        }
        acc
    }
}

/// Arf invariant with the spanning tree chosen by scanning edges in `order`.
pub fn arf_data(origami: &Origami, order: &[usize]) -> Result<ArfData, SpinError> {
    let graph = DualGraph::new(origami)?;
    let cycles = graph.fundamental_cycles(order);
    let k = cycles.len();
    let q: Vec<bool> = cycles.iter().map(|c| graph.q_direct(c)).collect();
    let pushed: Vec<Z2Vec> = cycles.iter().map(|y| graph.pushed(y)).collect();
    let gram: Vec<Z2Vec> = cycles
        .iter()
        .map(|x| {
            let mut row = Z2Vec::zeros(k);
            for (j, py) in pushed.iter().enumerate() {
                if x.dot(py) {
                    row.flip(j);
                }
            }
            row
        })
        .collect();
    let form = Form { q: q.clone(), gram };

    let mut remaining: std::collections::VecDeque<Z2Vec> = (0..k).map(|i| Z2Vec::unit(k, i)).collect();
    let mut pairs = Vec::new();
    let mut radical = Vec::new();
    while let Some(x) = remaining.pop_front() {
        let Some(pos) = remaining.iter().position(|y| form.pair(&x, y)) else {
            radical.push(x);
            continue;
        };
        let y = remaining.remove(pos).expect("position is valid");
        for z in remaining.iter_mut() {
            let (zy, zx) = (form.pair(z, &y), form.pair(z, &x));
            if zy {
                z.xor_assign(&x);
            }
            if zx {
                z.xor_assign(&y);
            }
        }
        pairs.push((x, y));
    }

    let genus = crate::strata::genus(origami.params()).g as usize;
    if pairs.len() != genus {
        return Err(SpinError::RankMismatch {
            expected: genus,
            found: pairs.len(),
        });
    }
    if radical.iter().any(|r| form.q(r)) {
        return Err(SpinError::RadicalNotIsotropic);
    }
    let arf = pairs
        .iter()
        .fold(false, |acc, (a, b)| acc ^ (form.q(a) & form.q(b)));
    Ok(ArfData {
        cycles,
        q,
        pairs,
        radical,
        arf,
    })
}

/// Spin parity with the spanning tree from the given edge scan order.
pub fn spin_parity_with_order(origami: &Origami, order: &[usize]) -> SpinParity {
    if !origami.kind().is_abelian() {
        return SpinParity::Undefined;
    }
    if origami.cone_stratum().degrees.iter().any(|m| m % 2 != 0) {
        return SpinParity::Undefined;
    }
    match arf_data(origami, order) {
        Ok(d) if d.arf => SpinParity::Odd,
        Ok(_) => SpinParity::Even,
        Err(e) => panic!("{}: {e}", origami.params()),
    }
}

pub fn spin_parity(p: &CoverParams) -> SpinParity {
    let o = Origami::build(p);
    let order: Vec<usize> = (0..2 * o.square_count()).collect();
    spin_parity_with_order(&o, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: i64, a: [i64; 4]) -> CoverParams {
        CoverParams::validate(n, a).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(spin_parity(&m(6, [1, 1, 1, 3])), SpinParity::Even);
        assert_eq!(spin_parity(&m(2, [1, 1, 1, 1])), SpinParity::Odd);
        assert_eq!(spin_parity(&m(4, [1, 1, 1, 1])), SpinParity::Undefined);
        assert_eq!(spin_parity(&m(4, [1, 3, 2, 2])), SpinParity::Undefined);
    }

    #[test]
    fn torus_core_curves() {
        let o = Origami::build(&m(2, [1, 1, 1, 1]));
        let g = DualGraph::new(&o).unwrap();
        // horizontal core curve through squares 0 and 1
        let mut h = Z2Vec::zeros(g.edge_count());
        h.flip(0);
        h.flip(1);
        assert!(g.is_cycle(&h));
        assert!(g.q_direct(&h));
    }

    #[test]
    fn intersection_form_is_symmetric_and_alternating() {
        for n in [4u32, 6, 8, 10] {
            for p in CoverParams::all_of_degree(n) {
                let o = Origami::build(&p);
                let Ok(g) = DualGraph::new(&o) else { continue };
                let order: Vec<usize> = (0..g.edge_count()).collect();
                let cycles = g.fundamental_cycles(&order);
                assert_eq!(cycles.len(), g.squares() + 1);
                for x in &cycles {
                    assert!(g.is_cycle(x));
                    assert!(!g.intersection(x, x));
                    for y in &cycles {
                        assert_eq!(g.intersection(x, y), g.intersection(y, x));
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_law_on_fundamental_cycles() {
        let o = Origami::build(&m(6, [1, 1, 1, 3]));
        let g = DualGraph::new(&o).unwrap();
        let order: Vec<usize> = (0..g.edge_count()).collect();
        let cycles = g.fundamental_cycles(&order);
        for x in &cycles {
            for y in &cycles {
                let lhs = g.q_direct(&x.xor(y));
                let rhs = g.q_direct(x) ^ g.q_direct(y) ^ g.intersection(x, y);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parity_does_not_depend_on_spanning_tree() {
        let o = Origami::build(&m(6, [1, 1, 1, 3]));
        let m = 2 * o.square_count();
        let forward: Vec<usize> = (0..m).collect();
        let backward: Vec<usize> = (0..m).rev().collect();
        let strided: Vec<usize> = (0..m).map(|i| (i * 7) % m).collect();
        let a = spin_parity_with_order(&o, &forward);
        assert_eq!(a, spin_parity_with_order(&o, &backward));
        assert_eq!(a, spin_parity_with_order(&o, &strided));
    }
}
