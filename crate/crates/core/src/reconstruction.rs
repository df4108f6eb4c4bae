//! Recovering a network topology from effective resistances.
//!
//! The columns `A_1, ..., A_2n` of Ω determine a rank pattern `g`:
//! `g(i)` is the first `j` after `i` (cyclically) such that `A_i` lies in
//! the span of `A_{i+1}, ..., A_j`. Shifting by one gives the strand
//! permutation, and a network with that strand permutation is read off a
//! lens-free chord diagram.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arrangement::{ChordDiagram, NodeKind, PlanarMap};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::grassmann::{omega_matrix, row_space_rank, OmegaMatrix, DEFAULT_PLUECKER_CAP};
use crate::kalmanson::{characterize_capped, CharacterizationReport};
use crate::linalg::{Matrix, Rational};
use crate::medial::{trace_embedded, StrandPermutation};
use crate::network::{CircularNetwork, Edge, EdgeId};

/// `g[i - 1]` is `g(i)`, reported in `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankPattern {
    n: usize,
    g: Vec<usize>,
}

impl RankPattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> usize {
        self.g[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.g
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.g.len()];
        for &j in &self.g {
            if seen[j - 1] {
                return false;
            }
            seen[j - 1] = true;
        }
        true
    }

    /// `i -> g(i) + 1`, wrapped into `1..=2n`.
    pub fn shifted(&self) -> Vec<usize> {
        let m = 2 * self.n;
        self.g.iter().map(|&j| j % m + 1).collect()
    }
}

impl fmt::Display for RankPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, j) in self.g.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", k + 1, j)?;
        }
        Ok(())
    }
}

fn rank_of(columns: &[&Vec<Rational>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    Matrix::from_rows(columns.iter().map(|c| c.to_vec()).collect()).rank()
}

pub fn column_rank_pattern(omega: &OmegaMatrix) -> Result<RankPattern> {
    let n = omega.n();
    let m = 2 * n;
    let rank = row_space_rank(omega);
    if rank != n - 1 {
        return Err(Error::RankMismatch {
            expected: n - 1,
            found: rank,
        });
    }
    let columns: Vec<Vec<Rational>> = (1..=m).map(|c| omega.column(c)).collect();
    if let Some(c) = columns.iter().position(|col| col.iter().all(Zero::is_zero)) {
        return Err(Error::ZeroColumn { column: c + 1 });
    }
    let mut g = Vec::with_capacity(m);
    for i in 0..m {
        let mut span: Vec<&Vec<Rational>> = Vec::new();
        let mut found = None;
        for t in 1..m {
            span.push(&columns[(i + t) % m]);
            let base = rank_of(&span);
            span.push(&columns[i]);
            let with = rank_of(&span);
            span.pop();
            if with == base {
                found = Some((i + t) % m + 1);
                break;
            }
        }
        match found {
            Some(j) => g.push(j),
            None => return Err(Error::Unspanned { column: i + 1 }),
        }
    }
    Ok(RankPattern { n, g })
}

pub fn tau_from_pattern(pattern: &RankPattern) -> Result<StrandPermutation> {
    StrandPermutation::new(pattern.shifted())
}

pub fn tau_from_resistance(r: &DistanceMatrix) -> Result<StrandPermutation> {
    tau_from_pattern(&column_rank_pattern(&omega_matrix(r))?)
}

/// Network realizing `tau` as its strand permutation, with unit
/// conductances. The result may be disconnected; the strand permutation is
/// checked against `tau` before returning.
pub fn network_from_tau(tau: &StrandPermutation) -> Result<CircularNetwork> {
    let diagram = ChordDiagram::new(tau);
    let map = diagram.planar_map();
    let net = network_from_map(tau.n(), &map)?;
    let traced = trace_embedded(&net)?.permutation()?;
    if &traced != tau {
        return Err(Error::RoundTripFailure {
            expected: tau.to_string(),
            found: traced.to_string(),
        });
    }
    Ok(net)
}

fn network_from_map(n: usize, map: &PlanarMap) -> Result<CircularNetwork> {
    // The outer face lies across the boundary polygon.
    let outer = map.face_of[1];
    let mut color: Vec<Option<bool>> = vec![None; map.face_count()];
    let start = map.arc_face(1);
    color[start] = Some(true);
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        let c = color[f].expect("colored before push");
        for &h in &map.faces[f] {
            if !map.on_chord[h / 2] {
                continue;
            }
            let g = map.face_of[h ^ 1];
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    stack.push(g);
                }
                Some(cg) => debug_assert_ne!(cg, c, "faces across a chord share a color"),
            }
        }
    }

    let mut vertex_of_face: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 1..=n {
        let f = map.arc_face(2 * i - 1);
        if let Some(&first) = vertex_of_face.get(&f) {
            return Err(Error::MergedBoundary { first, second: i });
        }
        vertex_of_face.insert(f, i);
    }
    let mut next_id = n;
    for (f, c) in color.iter().enumerate() {
        if f != outer && *c == Some(true) && !vertex_of_face.contains_key(&f) {
            next_id += 1;
            vertex_of_face.insert(f, next_id);
        }
    }
    let vertex_count = next_id;

    // Corners of vertex faces at crossings, in clockwise walk order.
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); vertex_count];
    let mut ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&f, &v) in &vertex_of_face {
        let walk = &map.faces[f];
        let offset = if v <= n {
            // Start right after the boundary arc from 2v - 1 to 2v.
            let arc = map.arc_half_edge(2 * v - 1);
            walk.iter()
                .position(|&h| h == arc)
                .expect("arc lies on its face")
                + 1
        } else {
            0
        };
        for k in 0..walk.len() {
            let h = walk[(offset + k) % walk.len()];
            if let NodeKind::Crossing(x) = map.nodes[map.head(h)] {
                rotation[v - 1].push(x + 1);
                ends.entry(x + 1).or_default().push(v);
            }
        }
    }
    let edges = ends
        .into_iter()
        .map(|(id, vs)| {
            debug_assert_eq!(vs.len(), 2);
            Edge::new(id, vs[0].min(vs[1]), vs[0].max(vs[1]), Rational::one())
        })
        .collect();
    CircularNetwork::new(n, vertex_count, edges, Some(rotation))
}

/// Outcome of the full reconstruction pipeline.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub network: CircularNetwork,
    pub report: CharacterizationReport,
    pub pattern: RankPattern,
    pub tau: StrandPermutation,
    pub connected: bool,
}

pub fn reconstruct_topology(r: &DistanceMatrix) -> Result<Reconstruction> {
    reconstruct_topology_capped(r, DEFAULT_PLUECKER_CAP)
}

pub fn reconstruct_topology_capped(r: &DistanceMatrix, max_n: usize) -> Result<Reconstruction> {
    let report = characterize_capped(r, max_n)?;
    if !report.electrical {
        return Err(Error::NotElectrical(Box::new(report)));
    }
    let pattern = column_rank_pattern(&omega_matrix(r))?;
    let tau = tau_from_pattern(&pattern)?;
    let network = network_from_tau(&tau)?;
    let connected = network.is_connected();
    Ok(Reconstruction {
        network,
        report,
        pattern,
        tau,
        connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::medial::strand_permutation;
    use crate::network::effective_resistance_matrix;

    fn perm(s: &str) -> StrandPermutation {
        s.parse().unwrap()
    }

    fn star_r() -> DistanceMatrix {
        DistanceMatrix::new(Matrix::from_i64_rows(&[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]])).unwrap()
    }

    fn edge_r() -> DistanceMatrix {
        DistanceMatrix::new(Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap()
    }

    #[test]
    fn star_pattern() {
        let g = column_rank_pattern(&omega_matrix(&star_r())).unwrap();
        assert_eq!(g.as_slice(), &[3, 4, 5, 6, 1, 2]);
        assert!(g.is_bijection());
        assert_eq!(
            tau_from_resistance(&star_r()).unwrap(),
            perm("(1 4)(2 5)(3 6)")
        );
    }

    #[test]
    fn single_edge_pattern() {
        let g = column_rank_pattern(&omega_matrix(&edge_r())).unwrap();
        assert_eq!(g.as_slice(), &[2, 3, 4, 1]);
        assert_eq!(tau_from_resistance(&edge_r()).unwrap(), perm("(1 3)(2 4)"));
    }

    #[test]
    fn scaling_keeps_pattern() {
        let g = column_rank_pattern(&omega_matrix(&star_r())).unwrap();
        let scaled = star_r().scale(&int(7));
        assert_eq!(column_rank_pattern(&omega_matrix(&scaled)).unwrap(), g);
    }

    #[test]
    fn single_edge_from_tau() {
        let net = network_from_tau(&perm("(1 3)(2 4)")).unwrap();
        assert_eq!(net.vertex_count(), 2);
        assert_eq!(net.edges().len(), 1);
        assert_eq!((net.edges()[0].u, net.edges()[0].v), (1, 2));
    }

    #[test]
    fn star_from_tau() {
        let net = network_from_tau(&perm("(1 4)(2 5)(3 6)")).unwrap();
        assert_eq!(net.edges().len(), 3);
        assert!(net.is_connected());
        // Either a star with one inner vertex or a triangle.
        assert!(net.vertex_count() == 4 || net.vertex_count() == 3);
        let r = effective_resistance_matrix(&net).unwrap();
        let expected = if net.vertex_count() == 4 {
            int(2)
        } else {
            crate::linalg::ratio(2, 3)
        };
        assert_eq!(r.get(1, 2), &expected);
    }

    #[test]
    fn uncrossed_chords_give_isolated_vertices() {
        let net = network_from_tau(&perm("(1 2)(3 4)")).unwrap();
        assert_eq!(net.vertex_count(), 2);
        assert!(net.edges().is_empty());
        assert!(!net.is_connected());
    }

    #[test]
    fn merged_boundary_is_an_error() {
        assert!(matches!(
            network_from_tau(&perm("(1 4)(2 3)")),
            Err(Error::MergedBoundary { .. })
        ));
    }

    #[test]
    fn round_trip_all_small_involutions() {
        for n in 2..=5 {
            for tau in StrandPermutation::all(n) {
                match network_from_tau(&tau) {
                    Ok(net) => assert_eq!(strand_permutation_any(&net), tau),
                    Err(Error::MergedBoundary { .. }) => {}
                    Err(e) => panic!("{tau}: {e}"),
                }
            }
        }
    }

    fn strand_permutation_any(net: &CircularNetwork) -> StrandPermutation {
        if net.is_connected() {
            strand_permutation(net).unwrap()
        } else {
            trace_embedded(net).unwrap().permutation().unwrap()
        }
    }

    #[test]
    fn four_cycle_pipeline() {
        let rot = vec![vec![1, 4], vec![2, 1], vec![3, 2], vec![4, 3]];
        let e: Vec<_> = [(1, 2), (2, 3), (3, 4), (4, 1)]
            .iter()
            .map(|&(a, b)| (a, b, int(1)))
            .collect();
        let net = CircularNetwork::from_edges(4, 4, &e)
            .unwrap()
            .with_rotation(rot)
            .unwrap();
        let r: DistanceMatrix = effective_resistance_matrix(&net).unwrap().into();
        let rec = reconstruct_topology(&r).unwrap();
        assert_eq!(rec.tau, strand_permutation(&net).unwrap());
        assert_eq!(strand_permutation(&rec.network).unwrap(), rec.tau);
    }

    #[test]
    fn non_kalmanson_is_not_electrical() {
        let d = DistanceMatrix::new(Matrix::from_i64_rows(&[
            &[0, 3, 1, 3],
            &[3, 0, 3, 1],
            &[1, 3, 0, 3],
            &[3, 1, 3, 0],
        ]))
        .unwrap();
        match reconstruct_topology(&d) {
            Err(Error::NotElectrical(report)) => assert!(report.kalmanson.is_some()),
            other => panic!("expected NotElectrical, got {other:?}"),
        }
    }
}
