//! Medial graph strands of an embedded circular network.
//!
//! The medial graph has one 4-valent vertex at the midpoint of every
//! positive edge, plus `2n` endpoints on the boundary circle: endpoints
//! `2i-1` and `2i` sit just before and just after boundary vertex `i` in
//! clockwise order. Two edge midpoints are joined whenever the edges are
//! consecutive around a vertex. A strand runs straight through every
//! midpoint it meets, so it is traced purely from the rotation system.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::network::{CircularNetwork, EdgeId, VertexRole};

/// A fixed-point-free involution on `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    n: usize,
    pairing: Vec<usize>,
}

impl StrandPermutation {
    /// `pairing[k - 1]` is the image of `k`.
    pub fn new(pairing: Vec<usize>) -> Result<Self> {
        let len = pairing.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::NotInvolution(format!(
                "needs an even, nonzero number of points, got {len}"
            )));
        }
        for (k, &t) in pairing.iter().enumerate() {
            let i = k + 1;
            if t == 0 || t > len {
                return Err(Error::NotInvolution(format!("{i} maps outside 1..={len}")));
            }
            if t == i {
                return Err(Error::NotInvolution(format!("{i} is a fixed point")));
            }
            if pairing[t - 1] != i {
                return Err(Error::NotInvolution(format!(
                    "{i} -> {t} but {t} -> {}",
                    pairing[t - 1]
                )));
            }
        }
        Ok(StrandPermutation {
            n: len / 2,
            pairing,
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut pairing = vec![0; 2 * n];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > 2 * n || b > 2 * n {
                return Err(Error::NotInvolution(format!("pair ({a} {b}) out of range")));
            }
            pairing[a - 1] = b;
            pairing[b - 1] = a;
        }
        StrandPermutation::new(pairing)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, i: usize) -> usize {
        self.pairing[i - 1]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// Pairs `(a, τ(a))` with `a < τ(a)`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=2 * self.n)
            .filter(|&a| a < self.apply(a))
            .map(|a| (a, self.apply(a)))
            .collect()
    }

    /// Every fixed-point-free involution on `1..=2n`, in lexicographic
    /// order of their pair lists.
    pub fn all(n: usize) -> Vec<StrandPermutation> {
        fn rec(open: &mut Vec<usize>, pairing: &mut Vec<usize>, out: &mut Vec<StrandPermutation>) {
            if open.is_empty() {
                out.push(StrandPermutation::new(pairing.clone()).expect("valid by construction"));
                return;
            }
            let a = open.remove(0);
            for k in 0..open.len() {
                let b = open.remove(k);
                pairing[a - 1] = b;
                pairing[b - 1] = a;
                rec(open, pairing, out);
                open.insert(k, b);
            }
            open.insert(0, a);
        }
        let mut out = Vec::new();
        let mut open: Vec<usize> = (1..=2 * n).collect();
        let mut pairing = vec![0; 2 * n];
        rec(&mut open, &mut pairing, &mut out);
        out
    }
}

impl fmt::Display for StrandPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

impl FromStr for StrandPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut max = 0;
        for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = chunk
                .strip_prefix('(')
                .ok_or_else(|| Error::NotInvolution(format!("malformed cycle '{chunk})'")))?;
            let items: Vec<usize> = body
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::NotInvolution(format!("bad point '{t}'")))
                })
                .collect::<Result<_>>()?;
            if items.len() != 2 {
                return Err(Error::NotInvolution(format!(
                    "cycle ({body}) is not a transposition"
                )));
            }
            max = max.max(items[0]).max(items[1]);
            pairs.push((items[0], items[1]));
        }
        if max % 2 != 0 || 2 * pairs.len() != max {
            return Err(Error::NotInvolution(format!(
                "'{s}' does not pair up 1..={max}"
            )));
        }
        StrandPermutation::from_pairs(max / 2, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    /// Boundary endpoints `(start, end)` with `start < end`; `None` for a
    /// strand that never reaches the boundary.
    pub endpoints: Option<(usize, usize)>,
    /// Network edges crossed, in order from `start`.
    pub crossings: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialTrace {
    pub n: usize,
    /// Boundary strands ordered by their smaller endpoint, then closed ones.
    pub strands: Vec<Strand>,
    /// For every positive edge, the strands using its two passages.
    pub passages: BTreeMap<EdgeId, [usize; 2]>,
    /// `(strand, edge)` where the strand leaves a crossing and comes
    /// straight back to it through a single corner.
    pub monogons: Vec<(usize, EdgeId)>,
}

impl MedialTrace {
    pub fn permutation(&self) -> Result<StrandPermutation> {
        let mut pairing = vec![0; 2 * self.n];
        for s in &self.strands {
            if let Some((a, b)) = s.endpoints {
                pairing[a - 1] = b;
                pairing[b - 1] = a;
            }
        }
        StrandPermutation::new(pairing)
    }

    /// Crossings grouped by strand pair `(a, b)` with `a <= b`.
    pub fn crossings_between(&self) -> BTreeMap<(usize, usize), Vec<EdgeId>> {
        let mut out: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
        for (&edge, &[s, t]) in &self.passages {
            out.entry((s.min(t), s.max(t))).or_default().push(edge);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    End {
        edge: usize,
        end: usize,
    },
    /// Boundary endpoint `2i` (clockwise after vertex `i`).
    After(usize),
    /// Boundary endpoint `2i-1`.
    Before(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Pred,
    Succ,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Pred => Side::Succ,
            Side::Succ => Side::Pred,
        }
    }

    fn index(self) -> usize {
        match self {
            Side::Pred => 0,
            Side::Succ => 1,
        }
    }
}

/// The strand sits at the midpoint of `edge`, having arrived through the
/// corner on `side` of edge-end `end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Arrival {
    edge: usize,
    end: usize,
    side: Side,
}

enum Step {
    Next(Arrival),
    Exit(usize),
}

struct Tracer<'a> {
    net: &'a CircularNetwork,
    edge_ids: Vec<EdgeId>,
    slots: Vec<Vec<Slot>>,
    // position[edge][end] = (vertex index, slot index)
    position: Vec<[(usize, usize); 2]>,
}

impl<'a> Tracer<'a> {
    fn new(net: &'a CircularNetwork) -> Result<Self> {
        let rotation = net.rotation().ok_or(Error::MissingRotation)?;
        let active: Vec<EdgeId> = net.active_edges().map(|e| e.id).collect();
        let index_of = |id: EdgeId| active.binary_search(&id).ok();
        let mut position = vec![[(usize::MAX, usize::MAX); 2]; active.len()];
        let mut slots = Vec::with_capacity(net.vertex_count());
        for (vi, list) in rotation.iter().enumerate() {
            let v = vi + 1;
            let boundary = net.role(v) == VertexRole::Boundary;
            let mut row = Vec::with_capacity(list.len() + 2);
            if boundary {
                row.push(Slot::After(2 * v));
            }
            let mut seen = vec![0usize; active.len()];
            for &id in list {
                let Some(k) = index_of(id) else { continue };
                let e = net.edge(id).expect("rotation references existing edges");
                let end = if e.is_loop() {
                    seen[k]
                } else if e.u == v {
                    0
                } else {
                    1
                };
                seen[k] += 1;
                position[k][end] = (vi, row.len());
                row.push(Slot::End { edge: k, end });
            }
            if boundary {
                row.push(Slot::Before(2 * v - 1));
            }
            slots.push(row);
        }
        Ok(Tracer {
            net,
            edge_ids: active,
            slots,
            position,
        })
    }

    fn enter(&self, slot: Slot, side: Side) -> Step {
        match slot {
            Slot::After(t) | Slot::Before(t) => Step::Exit(t),
            Slot::End { edge, end } => Step::Next(Arrival { edge, end, side }),
        }
    }

    fn start(&self, endpoint: usize) -> Step {
        let v = endpoint.div_ceil(2);
        let row = &self.slots[v - 1];
        if endpoint.is_multiple_of(2) {
            self.enter(row[1], Side::Pred)
        } else {
            self.enter(row[row.len() - 2], Side::Succ)
        }
    }

    /// Crosses the current edge and turns into the adjacent corner.
    fn step(&self, at: Arrival) -> Step {
        let (vi, idx) = self.position[at.edge][1 - at.end];
        let row = &self.slots[vi];
        let len = row.len();
        let boundary = self.net.role(vi + 1) == VertexRole::Boundary;
        let next = match (at.side, boundary) {
            (Side::Pred, true) => idx - 1,
            (Side::Succ, true) => idx + 1,
            (Side::Pred, false) => (idx + len - 1) % len,
            (Side::Succ, false) => (idx + 1) % len,
        };
        self.enter(row[next], at.side.flip())
    }

    fn trace(&self) -> MedialTrace {
        let n = self.net.n();
        let mut owner: Vec<[Option<usize>; 2]> = vec![[None, None]; self.edge_ids.len()];
        let mut strands = Vec::new();
        let mut monogons = Vec::new();
        let mut done = vec![false; 2 * n + 1];

        for start in 1..=2 * n {
            if done[start] {
                continue;
            }
            let id = strands.len();
            let mut crossings = Vec::new();
            let mut step = self.start(start);
            let finish = loop {
                match step {
                    Step::Exit(t) => break t,
                    Step::Next(at) => {
                        let slot = &mut owner[at.edge][at.side.index()];
                        assert!(slot.is_none(), "boundary strand revisited a passage");
                        *slot = Some(id);
                        crossings.push(self.edge_ids[at.edge]);
                        step = self.step(at);
                        if let Step::Next(nx) = step {
                            if nx.edge == at.edge {
                                monogons.push((id, self.edge_ids[at.edge]));
                            }
                        }
                    }
                }
            };
            done[start] = true;
            done[finish] = true;
            strands.push(Strand {
                endpoints: Some((start, finish)),
                crossings,
            });
        }

        for k in 0..self.edge_ids.len() {
            for side in [Side::Pred, Side::Succ] {
                if owner[k][side.index()].is_some() {
                    continue;
                }
                let id = strands.len();
                let mut crossings = Vec::new();
                let mut at = Arrival {
                    edge: k,
                    end: 0,
                    side,
                };
                while owner[at.edge][at.side.index()].is_none() {
                    owner[at.edge][at.side.index()] = Some(id);
                    crossings.push(self.edge_ids[at.edge]);
                    match self.step(at) {
                        Step::Next(nx) => {
                            if nx.edge == at.edge {
                                monogons.push((id, self.edge_ids[at.edge]));
                            }
                            at = nx;
                        }
                        Step::Exit(_) => unreachable!("closed strand reached the boundary"),
                    }
                }
                strands.push(Strand {
                    endpoints: None,
                    crossings,
                });
            }
        }

        let passages = owner
            .iter()
            .enumerate()
            .map(|(k, o)| {
                (
                    self.edge_ids[k],
                    [
                        o[0].expect("all passages traced"),
                        o[1].expect("all passages traced"),
                    ],
                )
            })
            .collect();
        MedialTrace {
            n,
            strands,
            passages,
            monogons,
        }
    }
}

/// Traces strands without requiring connectivity; only the rotation system
/// is needed.
pub(crate) fn trace_embedded(net: &CircularNetwork) -> Result<MedialTrace> {
    Ok(Tracer::new(net)?.trace())
}

pub fn medial_trace(net: &CircularNetwork) -> Result<MedialTrace> {
    if net.rotation().is_none() {
        return Err(Error::MissingRotation);
    }
    if !net.is_connected() {
        return Err(Error::DisconnectedNetwork);
    }
    trace_embedded(net)
}

pub fn strand_permutation(net: &CircularNetwork) -> Result<StrandPermutation> {
    medial_trace(net)?.permutation()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    SelfIntersection {
        strand: usize,
    },
    /// Two strands crossing more than once (a lens).
    DoubleCrossing {
        strands: (usize, usize),
        crossings: usize,
    },
    /// A strand closing on itself: a closed curve away from the boundary
    /// (`edge` is `None`) or a monogon through the crossing at `edge`.
    ClosedLoop {
        strand: usize,
        edge: Option<EdgeId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub defects: Vec<Defect>,
}

pub fn minimality(trace: &MedialTrace) -> MinimalityReport {
    let mut defects = Vec::new();
    for ((a, b), edges) in trace.crossings_between() {
        if a == b {
            defects.push(Defect::SelfIntersection { strand: a });
        } else if edges.len() >= 2 {
            defects.push(Defect::DoubleCrossing {
                strands: (a, b),
                crossings: edges.len(),
            });
        }
    }
    for (k, s) in trace.strands.iter().enumerate() {
        if s.endpoints.is_none() {
            defects.push(Defect::ClosedLoop {
                strand: k,
                edge: None,
            });
        }
    }
    for &(strand, edge) in &trace.monogons {
        defects.push(Defect::ClosedLoop {
            strand,
            edge: Some(edge),
        });
    }
    MinimalityReport {
        minimal: defects.is_empty(),
        defects,
    }
}

pub fn is_minimal(net: &CircularNetwork) -> Result<MinimalityReport> {
    Ok(minimality(&medial_trace(net)?))
}

impl fmt::Display for Defect {
    // Strands are numbered from 1 in text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::SelfIntersection { strand } => {
                write!(f, "strand {} crosses itself", strand + 1)
            }
            Defect::DoubleCrossing { strands, crossings } => write!(
                f,
                "strands {} and {} cross {crossings} times",
                strands.0 + 1,
                strands.1 + 1
            ),
            Defect::ClosedLoop { strand, edge: None } => {
                write!(f, "strand {} is a closed loop", strand + 1)
            }
            Defect::ClosedLoop {
                strand,
                edge: Some(e),
            } => write!(f, "strand {} loops back through edge {e}", strand + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::network::{star_triangle, Edge};

    fn unit(
        n: usize,
        v: usize,
        edges: &[(usize, usize)],
        rot: Vec<Vec<EdgeId>>,
    ) -> CircularNetwork {
        let e: Vec<_> = edges.iter().map(|&(a, b)| (a, b, int(1))).collect();
        CircularNetwork::from_edges(n, v, &e)
            .unwrap()
            .with_rotation(rot)
            .unwrap()
    }

    pub(crate) fn star() -> CircularNetwork {
        unit(
            3,
            4,
            &[(1, 4), (2, 4), (3, 4)],
            vec![vec![1], vec![2], vec![3], vec![1, 2, 3]],
        )
    }

    fn single_edge() -> CircularNetwork {
        unit(2, 2, &[(1, 2)], vec![vec![1], vec![1]])
    }

    fn path() -> CircularNetwork {
        unit(2, 3, &[(1, 3), (3, 2)], vec![vec![1], vec![2], vec![1, 2]])
    }

    fn perm(s: &str) -> StrandPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn star_trace() {
        let trace = medial_trace(&star()).unwrap();
        assert_eq!(trace.strands.len(), 3);
        assert!(trace.strands.iter().all(|s| s.crossings.len() == 2));
        assert_eq!(trace.permutation().unwrap(), perm("(1 4)(2 5)(3 6)"));
        // Each spoke is crossed by exactly two passages of distinct strands.
        assert_eq!(trace.passages.len(), 3);
        assert!(trace.passages.values().all(|[a, b]| a != b));
        assert!(is_minimal(&star()).unwrap().minimal);
    }

    #[test]
    fn single_edge_trace() {
        let trace = medial_trace(&single_edge()).unwrap();
        assert_eq!(trace.strands.len(), 2);
        assert_eq!(trace.crossings_between().len(), 1);
        assert_eq!(
            strand_permutation(&single_edge()).unwrap(),
            perm("(1 3)(2 4)")
        );
    }

    #[test]
    fn path_has_a_lens() {
        let trace = medial_trace(&path()).unwrap();
        let between = trace.crossings_between();
        assert_eq!(between.len(), 1);
        assert_eq!(between.values().next().unwrap().len(), 2);
        // Two strands crossing twice cannot interleave their endpoints.
        assert_eq!(trace.permutation().unwrap(), perm("(1 4)(2 3)"));
        let report = is_minimal(&path()).unwrap();
        assert!(!report.minimal);
        assert!(matches!(
            report.defects[0],
            Defect::DoubleCrossing { crossings: 2, .. }
        ));
    }

    #[test]
    fn self_loop_is_reported() {
        let net = CircularNetwork::new(
            2,
            3,
            vec![
                Edge::new(1, 1, 3, int(1)),
                Edge::new(2, 3, 2, int(1)),
                Edge::new(3, 3, 3, int(1)),
            ],
            Some(vec![vec![1], vec![2], vec![1, 3, 3, 2]]),
        )
        .unwrap();
        let report = is_minimal(&net).unwrap();
        assert!(!report.minimal);
        assert!(report
            .defects
            .iter()
            .any(|d| matches!(d, Defect::ClosedLoop { edge: Some(3), .. })));
    }

    #[test]
    fn star_triangle_keeps_tau() {
        let tri = star_triangle(&star(), 4).unwrap();
        assert_eq!(strand_permutation(&tri).unwrap(), perm("(1 4)(2 5)(3 6)"));
        assert!(is_minimal(&tri).unwrap().minimal);
    }

    #[test]
    fn four_cycle() {
        let net = unit(
            4,
            4,
            &[(1, 2), (2, 3), (3, 4), (4, 1)],
            vec![vec![1, 4], vec![2, 1], vec![3, 2], vec![4, 3]],
        );
        assert_eq!(
            strand_permutation(&net).unwrap(),
            perm("(1 6)(2 5)(3 8)(4 7)")
        );
        assert!(is_minimal(&net).unwrap().minimal);
    }

    #[test]
    fn errors() {
        let bare = CircularNetwork::from_edges(2, 2, &[(1, 2, int(1))]).unwrap();
        assert!(matches!(medial_trace(&bare), Err(Error::MissingRotation)));
        let split = unit(2, 2, &[], vec![vec![], vec![]]);
        assert!(matches!(
            medial_trace(&split),
            Err(Error::DisconnectedNetwork)
        ));
        // Traced anyway when connectivity is not enforced.
        let t = trace_embedded(&split).unwrap().permutation().unwrap();
        assert_eq!(t, perm("(1 2)(3 4)"));
    }

    #[test]
    fn permutation_parsing() {
        let p = perm("(1 4)(3 6)(2 5)");
        assert_eq!(p.to_string(), "(1 4)(2 5)(3 6)");
        assert!("(1 2 3)".parse::<StrandPermutation>().is_err());
        assert!("(1 1)".parse::<StrandPermutation>().is_err());
        assert!(StrandPermutation::new(vec![2, 1, 3, 3]).is_err());
        assert_eq!(StrandPermutation::all(3).len(), 15);
    }
}
