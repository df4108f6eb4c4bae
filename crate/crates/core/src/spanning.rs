//! Effective resistances by spanning tree and spanning 2-forest enumeration.
//!
//! `R_ij = F_ij / T`, where `T` sums edge-weight products over spanning
//! trees and `F_ij` over spanning forests with two components separating
//! `i` from `j`. This shares no code with the Schur complement route in
//! [`crate::network`] and is used to cross-check it.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::network::{CircularNetwork, Edge, ResistanceMatrix, UnionFind};

pub const DEFAULT_VERTEX_CAP: usize = 12;

/// Weighted spanning tree and 2-forest sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestSums {
    /// Σ over spanning trees of the product of conductances.
    pub trees: Rational,
    /// `separating[(i, j)]`: Σ over 2-forests with boundary nodes `i+1` and
    /// `j+1` in different components.
    pub separating: Matrix,
}

struct Enumeration<'a> {
    vertices: usize,
    n: usize,
    edges: Vec<&'a Edge>,
    trees: Rational,
    separating: Matrix,
}

impl Enumeration<'_> {
    fn walk(&mut self, start: usize, chosen: usize, uf: &UnionFind, weight: &Rational) {
        let need_tree = self.vertices - 1;
        if chosen + 2 == self.vertices {
            self.record_forest(uf, weight);
        }
        if chosen == need_tree {
            self.trees += weight;
            return;
        }
        // Not enough edges left to reach a 2-forest.
        if self.edges.len() - start + chosen + 2 < self.vertices {
            return;
        }
        for k in start..self.edges.len() {
            let e = self.edges[k];
            let mut next = uf.clone();
            if next.union(e.u, e.v) {
                let w = weight * &e.conductance;
                self.walk(k + 1, chosen + 1, &next, &w);
            }
        }
    }

    fn record_forest(&mut self, uf: &UnionFind, weight: &Rational) {
        let mut uf = uf.clone();
        let roots: Vec<usize> = (1..=self.n).map(|v| uf.find(v)).collect();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if roots[i] != roots[j] {
                    self.separating[(i, j)] += weight;
                    self.separating[(j, i)] += weight;
                }
            }
        }
    }
}

/// Enumerates spanning trees and 2-forests of the positive-conductance
/// subgraph. Exponential; refuses networks above `vertex_cap` vertices.
pub fn forest_sums(net: &CircularNetwork, vertex_cap: usize) -> Result<ForestSums> {
    if !net.is_connected() {
        return Err(Error::DisconnectedNetwork);
    }
    if net.vertex_count() > vertex_cap {
        return Err(Error::SizeLimitExceeded {
            what: "vertex count",
            actual: net.vertex_count(),
            limit: vertex_cap,
        });
    }
    let mut en = Enumeration {
        vertices: net.vertex_count(),
        n: net.n(),
        edges: net.active_edges().filter(|e| !e.is_loop()).collect(),
        trees: Rational::zero(),
        separating: Matrix::zeros(net.n(), net.n()),
    };
    let uf = UnionFind::new(net.vertex_count() + 1);
    en.walk(0, 0, &uf, &Rational::one());
    Ok(ForestSums {
        trees: en.trees,
        separating: en.separating,
    })
}

pub fn resistance_via_matrix_tree(net: &CircularNetwork) -> Result<ResistanceMatrix> {
    resistance_via_matrix_tree_capped(net, DEFAULT_VERTEX_CAP)
}

pub fn resistance_via_matrix_tree_capped(
    net: &CircularNetwork,
    vertex_cap: usize,
) -> Result<ResistanceMatrix> {
    let sums = forest_sums(net, vertex_cap)?;
    let r = sums.separating.scale(&sums.trees.recip());
    Ok(ResistanceMatrix::from_matrix(r))
}
