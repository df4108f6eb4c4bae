//! Circular electrical networks and their boundary data.
//!
//! Vertex ids are 1-based: boundary vertices are `1..=n` in clockwise order,
//! inner vertices are `n+1..=|V|`. All boundary data is computed over exact
//! rationals; edges of conductance zero are kept in the data model but are
//! dropped before any solve.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Boundary,
    Inner,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    /// Siemens.
    pub conductance: Rational,
}

impl Edge {
    pub fn new(id: EdgeId, u: VertexId, v: VertexId, conductance: Rational) -> Self {
        Edge {
            id,
            u,
            v,
            conductance,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn is_active(&self) -> bool {
        self.conductance.is_positive()
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// A planar graph in a disk with `n` boundary vertices on the circle.
///
/// The optional rotation system lists, for every vertex, its incident edge
/// ids in clockwise order; a loop appears twice. For a boundary vertex the
/// list is read linearly: it starts with the edge just clockwise of the
/// exterior of the disk (the side facing boundary vertex `i+1`) and ends with
/// the edge just before the exterior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularNetwork {
    n: usize,
    vertex_count: usize,
    edges: Vec<Edge>,
    rotation: Option<Vec<Vec<EdgeId>>>,
    connected: bool,
}

impl CircularNetwork {
    pub fn new(
        n: usize,
        vertex_count: usize,
        mut edges: Vec<Edge>,
        rotation: Option<Vec<Vec<EdgeId>>>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidNetwork(format!(
                "need at least 2 boundary vertices, got {n}"
            )));
        }
        if vertex_count < n {
            return Err(Error::InvalidNetwork(format!(
                "{vertex_count} vertices cannot hold {n} boundary vertices"
            )));
        }
        edges.sort_by_key(|e| e.id);
        for pair in edges.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::InvalidNetwork(format!(
                    "duplicate edge id {}",
                    pair[0].id
                )));
            }
        }
        for e in &edges {
            for x in [e.u, e.v] {
                if x == 0 || x > vertex_count {
                    return Err(Error::InvalidNetwork(format!(
                        "edge {} references unknown vertex {x}",
                        e.id
                    )));
                }
            }
            if e.conductance.is_negative() {
                return Err(Error::InvalidNetwork(format!(
                    "edge {} has negative conductance {}",
                    e.id, e.conductance
                )));
            }
        }
        let mut net = CircularNetwork {
            n,
            vertex_count,
            edges,
            rotation: None,
            connected: false,
        };
        if let Some(rot) = rotation {
            net.validate_rotation(&rot)?;
            net.rotation = Some(rot);
        }
        net.connected = net.compute_connected();
        Ok(net)
    }

    /// Network with edge ids assigned `1, 2, …` in the given order.
    pub fn from_edges(
        n: usize,
        vertex_count: usize,
        edges: &[(VertexId, VertexId, Rational)],
    ) -> Result<Self> {
        let edges = edges
            .iter()
            .enumerate()
            .map(|(k, (u, v, w))| Edge::new(k + 1, *u, *v, w.clone()))
            .collect();
        CircularNetwork::new(n, vertex_count, edges, None)
    }

    pub fn with_rotation(self, rotation: Vec<Vec<EdgeId>>) -> Result<Self> {
        CircularNetwork::new(self.n, self.vertex_count, self.edges, Some(rotation))
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    fn validate_rotation(&self, rot: &[Vec<EdgeId>]) -> Result<()> {
        if rot.len() != self.vertex_count {
            return Err(Error::InvalidNetwork(format!(
                "rotation covers {} vertices, network has {}",
                rot.len(),
                self.vertex_count
            )));
        }
        for (idx, list) in rot.iter().enumerate() {
            let v = idx + 1;
            let mut expected: Vec<EdgeId> = Vec::new();
            for e in &self.edges {
                if e.u == v {
                    expected.push(e.id);
                }
                if e.v == v {
                    expected.push(e.id);
                }
            }
            let mut got = list.clone();
            got.sort_unstable();
            expected.sort_unstable();
            if got != expected {
                return Err(Error::InvalidNetwork(format!(
                    "rotation at vertex {v} must list each incident edge-end exactly once"
                )));
            }
        }
        Ok(())
    }

    fn compute_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count + 1);
        for e in self.active_edges() {
            uf.union(e.u, e.v);
        }
        let root = uf.find(1);
        (2..=self.vertex_count).all(|v| uf.find(v) == root)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn inner_count(&self) -> usize {
        self.vertex_count - self.n
    }

    pub fn role(&self, v: VertexId) -> VertexRole {
        if v <= self.n {
            VertexRole::Boundary
        } else {
            VertexRole::Inner
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|k| &self.edges[k])
    }

    /// Edges with positive conductance.
    pub fn active_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.is_active())
    }

    pub fn rotation(&self) -> Option<&[Vec<EdgeId>]> {
        self.rotation.as_deref()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Number of incident edge-ends (a loop counts twice).
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Full weighted Laplacian over positive edges, indexed by `id - 1`.
    pub fn laplacian(&self) -> Matrix {
        let mut l = Matrix::zeros(self.vertex_count, self.vertex_count);
        for e in self.active_edges().filter(|e| !e.is_loop()) {
            let (a, b) = (e.u - 1, e.v - 1);
            let w = &e.conductance;
            l[(a, a)] += w;
            l[(b, b)] += w;
            l[(a, b)] -= w;
            l[(b, a)] -= w;
        }
        l
    }

    fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::DisconnectedNetwork)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    BoundaryOnly,
    AllVertices,
}

/// Volts, indexed by `vertex id - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageVector {
    pub values: Vec<Rational>,
    pub scope: Scope,
}

impl VoltageVector {
    pub fn boundary(values: Vec<Rational>) -> Self {
        VoltageVector {
            values,
            scope: Scope::BoundaryOnly,
        }
    }

    pub fn get(&self, v: VertexId) -> &Rational {
        &self.values[v - 1]
    }
}

/// Amperes leaving each boundary node, indexed by `boundary id - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentVector(pub Vec<Rational>);

impl CurrentVector {
    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |a, b| a + b)
    }
}

/// Boundary-to-boundary map `M_R` with `M_R U = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResponseMatrix(Matrix);

impl ResponseMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

/// Effective resistances between boundary nodes, in ohms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResistanceMatrix(Matrix);

impl ResistanceMatrix {
    pub(crate) fn from_matrix(m: Matrix) -> Self {
        ResistanceMatrix(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn get(&self, i: VertexId, j: VertexId) -> &Rational {
        &self.0[(i - 1, j - 1)]
    }
}

struct Blocks {
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

fn laplacian_blocks(net: &CircularNetwork) -> Blocks {
    let l = net.laplacian();
    let boundary: Vec<usize> = (0..net.n).collect();
    let inner: Vec<usize> = (net.n..net.vertex_count).collect();
    Blocks {
        a: l.submatrix(&boundary, &boundary),
        b: l.submatrix(&boundary, &inner),
        c: l.submatrix(&inner, &inner),
    }
}

/// Extends boundary voltages to all vertices so that Kirchhoff's current law
/// holds at every inner node.
pub fn harmonic_extension(net: &CircularNetwork, u: &VoltageVector) -> Result<VoltageVector> {
    net.require_connected()?;
    if u.values.len() != net.n {
        return Err(Error::BoundarySize {
            expected: net.n,
            found: u.values.len(),
        });
    }
    let mut values = u.values.clone();
    if net.inner_count() > 0 {
        let blocks = laplacian_blocks(net);
        let ub = Matrix::from_rows(u.values.iter().map(|x| vec![x.clone()]).collect());
        let rhs = blocks.b.transpose().mul(&ub).neg();
        let x = blocks
            .c
            .solve(&rhs)
            .expect("inner Laplacian block of a connected network is nonsingular");
        values.extend((0..x.rows()).map(|i| x[(i, 0)].clone()));
    }
    Ok(VoltageVector {
        values,
        scope: Scope::AllVertices,
    })
}

/// Schur complement of the weighted Laplacian onto the boundary block.
pub fn response_matrix(net: &CircularNetwork) -> Result<ResponseMatrix> {
    net.require_connected()?;
    let blocks = laplacian_blocks(net);
    if net.inner_count() == 0 {
        return Ok(ResponseMatrix(blocks.a));
    }
    let x = blocks
        .c
        .solve(&blocks.b.transpose())
        .expect("inner Laplacian block of a connected network is nonsingular");
    Ok(ResponseMatrix(blocks.a.sub(&blocks.b.mul(&x))))
}

/// Currents `I_k = Σ_j w_kj (U(k) - U(j))` at the boundary nodes for the
/// harmonic extension of `u`.
pub fn boundary_currents(net: &CircularNetwork, u: &VoltageVector) -> Result<CurrentVector> {
    let full = harmonic_extension(net, u)?;
    let mut currents = vec![Rational::zero(); net.n];
    for e in net.active_edges().filter(|e| !e.is_loop()) {
        let drop = full.get(e.u) - full.get(e.v);
        if e.u <= net.n {
            currents[e.u - 1] += &e.conductance * &drop;
        }
        if e.v <= net.n {
            currents[e.v - 1] -= &e.conductance * &drop;
        }
    }
    Ok(CurrentVector(currents))
}

/// Effective resistances from the response matrix.
///
/// `M_R U = e_j - e_i` is singular along the all-ones vector; it is solved
/// together with the gauge `Σ U_k = 0`, which is the same as solving
/// `(M_R + J) U = e_j - e_i` because the right-hand side sums to zero.
pub fn effective_resistance_matrix(net: &CircularNetwork) -> Result<ResistanceMatrix> {
    let m = response_matrix(net)?.into_matrix();
    let n = net.n;
    let mut gauged = m;
    for i in 0..n {
        for j in 0..n {
            gauged[(i, j)] += Rational::one();
        }
    }
    let g = gauged
        .inverse()
        .expect("response matrix of a connected network has a one-dimensional kernel");
    let mut r = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut rhs = vec![Rational::zero(); n];
            rhs[i] = -Rational::one();
            rhs[j] = Rational::one();
            let u = g.mul_vec(&rhs);
            let value = (&u[i] - &u[j]).abs();
            r[(i, j)] = value.clone();
            r[(j, i)] = value;
        }
    }
    Ok(ResistanceMatrix(r))
}

/// Replaces an inner degree-3 vertex by a triangle with conductances
/// `w_i w_j / (w_1 + w_2 + w_3)`. Inner vertices above `center` are
/// renumbered down by one.
pub fn star_triangle(net: &CircularNetwork, center: VertexId) -> Result<CircularNetwork> {
    let not_eligible = |reason: &str| Error::NotEligible {
        vertex: center,
        reason: reason.to_string(),
    };
    if center == 0 || center > net.vertex_count {
        return Err(not_eligible("no such vertex"));
    }
    if net.role(center) == VertexRole::Boundary {
        return Err(not_eligible("boundary vertices cannot be eliminated"));
    }
    if net.degree(center) != 3 {
        return Err(not_eligible("degree is not 3"));
    }
    let legs: Vec<&Edge> = match net.rotation() {
        Some(rot) => rot[center - 1]
            .iter()
            .map(|&id| net.edge(id).expect("rotation references existing edges"))
            .collect(),
        None => net
            .edges
            .iter()
            .filter(|e| e.u == center || e.v == center)
            .collect(),
    };
    if legs.iter().any(|e| e.is_loop()) {
        return Err(not_eligible("has a loop"));
    }
    let ends: Vec<VertexId> = legs.iter().map(|e| e.other(center)).collect();
    if ends.iter().collect::<BTreeSet<_>>().len() != 3 {
        return Err(not_eligible("legs do not reach three distinct neighbors"));
    }
    let total = legs
        .iter()
        .fold(Rational::zero(), |acc, e| acc + &e.conductance);
    if total.is_zero() {
        return Err(not_eligible("all legs have zero conductance"));
    }

    let renumber = |v: VertexId| if v > center { v - 1 } else { v };
    let leg_ids: Vec<EdgeId> = legs.iter().map(|e| e.id).collect();
    let first_id = net.edges.last().map_or(0, |e| e.id) + 1;
    let mut edges: Vec<Edge> = net
        .edges
        .iter()
        .filter(|e| !leg_ids.contains(&e.id))
        .map(|e| Edge::new(e.id, renumber(e.u), renumber(e.v), e.conductance.clone()))
        .collect();

    // side[k] is the triangle edge joining ends[k] and ends[k + 1].
    let side: [EdgeId; 3] = std::array::from_fn(|k| first_id + k);
    for k in 0..3 {
        let l = (k + 1) % 3;
        let w = &legs[k].conductance * &legs[l].conductance / &total;
        edges.push(Edge::new(side[k], renumber(ends[k]), renumber(ends[l]), w));
    }

    let rotation = net.rotation().map(|rot| {
        let mut out: Vec<Vec<EdgeId>> = Vec::with_capacity(rot.len() - 1);
        for (idx, list) in rot.iter().enumerate() {
            if idx + 1 == center {
                continue;
            }
            let mut new_list = Vec::with_capacity(list.len() + 1);
            for &id in list {
                match leg_ids.iter().position(|&l| l == id) {
                    // Clockwise at the neighbor: first toward the next leg of
                    // the star, then toward the previous one.
                    Some(k) => {
                        new_list.push(side[k]);
                        new_list.push(side[(k + 2) % 3]);
                    }
                    None => new_list.push(id),
                }
            }
            out.push(new_list);
        }
        out
    });

    CircularNetwork::new(net.n, net.vertex_count - 1, edges, rotation)
}

/// Small union-find over `0..len`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn unit(n: usize, v: usize, edges: &[(usize, usize)]) -> CircularNetwork {
        let e: Vec<_> = edges.iter().map(|&(a, b)| (a, b, int(1))).collect();
        CircularNetwork::from_edges(n, v, &e).unwrap()
    }

    fn star() -> CircularNetwork {
        unit(3, 4, &[(1, 4), (2, 4), (3, 4)])
    }

    fn path() -> CircularNetwork {
        unit(2, 3, &[(1, 3), (3, 2)])
    }

    fn single_edge() -> CircularNetwork {
        CircularNetwork::from_edges(2, 2, &[(1, 2, int(2))]).unwrap()
    }

    fn four_cycle() -> CircularNetwork {
        unit(4, 4, &[(1, 2), (2, 3), (3, 4), (4, 1)])
    }

    #[test]
    fn harmonic_extension_examples() {
        let u = VoltageVector::boundary(vec![int(1), int(0)]);
        let ext = harmonic_extension(&path(), &u).unwrap();
        assert_eq!(ext.get(3), &ratio(1, 2));
        assert_eq!(ext.scope, Scope::AllVertices);

        let ext = harmonic_extension(&single_edge(), &u).unwrap();
        assert_eq!(ext.values, u.values);

        let u3 = VoltageVector::boundary(vec![int(1), int(0), int(0)]);
        let ext = harmonic_extension(&star(), &u3).unwrap();
        assert_eq!(ext.get(4), &ratio(1, 3));
    }

    #[test]
    fn harmonic_extension_satisfies_kirchhoff() {
        let net = unit(3, 6, &[(1, 4), (4, 5), (5, 2), (4, 6), (6, 3), (5, 6)]);
        let u = VoltageVector::boundary(vec![int(3), ratio(-1, 2), int(7)]);
        let ext = harmonic_extension(&net, &u).unwrap();
        for v in 4..=6 {
            let mut flow = Rational::zero();
            for e in net.edges().iter().filter(|e| e.u == v || e.v == v) {
                flow += &e.conductance * (ext.get(v) - ext.get(e.other(v)));
            }
            assert!(flow.is_zero(), "KCL violated at {v}");
        }
    }

    #[test]
    fn harmonic_extension_rejects_bad_input() {
        let disconnected = unit(2, 3, &[(1, 3)]);
        let u = VoltageVector::boundary(vec![int(1), int(0)]);
        assert!(matches!(
            harmonic_extension(&disconnected, &u),
            Err(Error::DisconnectedNetwork)
        ));
        let short = VoltageVector::boundary(vec![int(1)]);
        assert!(matches!(
            harmonic_extension(&path(), &short),
            Err(Error::BoundarySize { .. })
        ));
    }

    #[test]
    fn response_matrix_examples() {
        let m = response_matrix(&single_edge()).unwrap();
        assert_eq!(m.matrix(), &Matrix::from_i64_rows(&[&[2, -2], &[-2, 2]]));

        let m = response_matrix(&star()).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratio(2, 3), ratio(-1, 3), ratio(-1, 3)],
            vec![ratio(-1, 3), ratio(2, 3), ratio(-1, 3)],
            vec![ratio(-1, 3), ratio(-1, 3), ratio(2, 3)],
        ]);
        assert_eq!(m.matrix(), &expected);

        let m = response_matrix(&path()).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(-1, 2)],
            vec![ratio(-1, 2), ratio(1, 2)],
        ]);
        assert_eq!(m.matrix(), &expected);
    }

    #[test]
    fn effective_resistance_examples() {
        let r = effective_resistance_matrix(&single_edge()).unwrap();
        assert_eq!(r.get(1, 2), &ratio(1, 2));

        let r = effective_resistance_matrix(&star()).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let expected = if i == j { int(0) } else { int(2) };
                assert_eq!(r.get(i, j), &expected);
            }
        }

        let r = effective_resistance_matrix(&four_cycle()).unwrap();
        assert_eq!(r.get(1, 2), &ratio(3, 4));
        assert_eq!(r.get(1, 3), &int(1));
        assert_eq!(r.get(2, 4), &int(1));
    }

    #[test]
    fn boundary_current_examples() {
        let i = boundary_currents(
            &single_edge(),
            &VoltageVector::boundary(vec![int(1), int(0)]),
        )
        .unwrap();
        assert_eq!(i.0, vec![int(2), int(-2)]);

        let i = boundary_currents(&star(), &VoltageVector::boundary(vec![int(5); 3])).unwrap();
        assert!(i.0.iter().all(Zero::is_zero));

        let i = boundary_currents(
            &star(),
            &VoltageVector::boundary(vec![int(1), int(0), int(0)]),
        )
        .unwrap();
        assert_eq!(i.0, vec![ratio(2, 3), ratio(-1, 3), ratio(-1, 3)]);
        assert!(i.total().is_zero());
    }

    #[test]
    fn star_triangle_examples() {
        let tri = star_triangle(&star(), 4).unwrap();
        assert_eq!(tri.vertex_count(), 3);
        assert!(tri.edges().iter().all(|e| e.conductance == ratio(1, 3)));
        assert_eq!(
            response_matrix(&tri).unwrap(),
            response_matrix(&star()).unwrap()
        );

        let heavy =
            CircularNetwork::from_edges(3, 4, &[(1, 4, int(3)), (2, 4, int(3)), (3, 4, int(3))])
                .unwrap();
        let tri = star_triangle(&heavy, 4).unwrap();
        assert!(tri.edges().iter().all(|e| e.conductance == int(1)));

        let degenerate =
            CircularNetwork::from_edges(3, 4, &[(1, 4, int(1)), (2, 4, int(1)), (3, 4, int(0))])
                .unwrap();
        let tri = star_triangle(&degenerate, 4).unwrap();
        let mut ws: Vec<Rational> = tri.edges().iter().map(|e| e.conductance.clone()).collect();
        ws.sort();
        assert_eq!(ws, vec![int(0), int(0), ratio(1, 2)]);
    }

    #[test]
    fn star_triangle_rejects_ineligible() {
        assert!(matches!(
            star_triangle(&star(), 1),
            Err(Error::NotEligible { .. })
        ));
        assert!(matches!(
            star_triangle(&path(), 3),
            Err(Error::NotEligible { .. })
        ));
    }

    #[test]
    fn series_reduction_preserves_response() {
        let chain = CircularNetwork::from_edges(2, 3, &[(1, 3, int(2)), (3, 2, int(3))]).unwrap();
        let reduced = CircularNetwork::from_edges(2, 2, &[(1, 2, ratio(6, 5))]).unwrap();
        assert_eq!(
            response_matrix(&chain).unwrap(),
            response_matrix(&reduced).unwrap()
        );
    }

    #[test]
    fn zero_conductance_edges_are_invisible() {
        let net =
            CircularNetwork::from_edges(2, 3, &[(1, 3, int(1)), (3, 2, int(1)), (1, 2, int(0))])
                .unwrap();
        assert_eq!(
            response_matrix(&net).unwrap(),
            response_matrix(&path()).unwrap()
        );
        let only_zero = CircularNetwork::from_edges(2, 2, &[(1, 2, int(0))]).unwrap();
        assert!(!only_zero.is_connected());
    }

    #[test]
    fn construction_validates() {
        assert!(CircularNetwork::from_edges(1, 1, &[]).is_err());
        assert!(CircularNetwork::from_edges(2, 2, &[(1, 3, int(1))]).is_err());
        assert!(CircularNetwork::from_edges(2, 2, &[(1, 2, int(-1))]).is_err());
        let net = CircularNetwork::from_edges(2, 2, &[(1, 2, int(1))]).unwrap();
        assert!(net.clone().with_rotation(vec![vec![1], vec![]]).is_err());
        assert!(net.with_rotation(vec![vec![1], vec![1]]).is_ok());
    }
}
