//! Seeded random instances: planar circular networks drawn in a disk,
//! arbitrary connected networks, and circular split metrics.

use std::cmp::Ordering;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::distance::DistanceMatrix;
use crate::linalg::{Matrix, Rational};
use crate::network::{CircularNetwork, EdgeId, UnionFind};

/// Conductance `p/q` with `1 <= p, q <= 10`.
pub fn random_conductance<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(1..=10)),
        BigInt::from(rng.gen_range(1..=10)),
    )
}

type P = (i64, i64);

const RADIUS: f64 = 1_000_000.0;

fn cross(o: P, a: P, b: P) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

fn on_segment(p: P, a: P, b: P) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

fn properly_cross(a: P, b: P, c: P, d: P) -> bool {
    let d1 = cross(a, b, c).signum();
    let d2 = cross(a, b, d).signum();
    let d3 = cross(c, d, a).signum();
    let d4 = cross(c, d, b).signum();
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Clockwise order of direction vectors starting from `reference`.
fn clockwise_from(reference: P, a: P, b: P) -> Ordering {
    // Clockwise angle is the counterclockwise angle of the mirror image.
    let half = |d: P| -> u8 {
        let m = (d.0 as i128, -d.1 as i128);
        let r = (reference.0 as i128, -reference.1 as i128);
        // Rotate so that the reference lies on the positive x axis.
        let x = m.0 * r.0 + m.1 * r.1;
        let y = r.0 * m.1 - r.1 * m.0;
        u8::from(!(y > 0 || (y == 0 && x > 0)))
    };
    // Within a half, `a` comes first when turning from `a` to `b` is clockwise.
    half(a)
        .cmp(&half(b))
        .then_with(|| cross((0, 0), a, b).cmp(&0))
}

/// Options for [`random_planar_network`].
#[derive(Clone, Debug)]
pub struct PlanarOptions {
    pub n: usize,
    pub inner: usize,
    /// Probability of trying to drop each edge of the triangulation.
    pub sparsity: f64,
}

/// A connected circular planar network with the given number of boundary
/// and inner vertices. Vertices are placed in a disk, a maximal set of
/// non-crossing straight edges is chosen in random order, and edges are then
/// removed while connectivity is kept. The rotation system is read off the
/// drawing.
pub fn random_planar_network<R: Rng>(rng: &mut R, opts: &PlanarOptions) -> CircularNetwork {
    let n = opts.n;
    let total = n + opts.inner;
    let mut pts: Vec<P> = (0..n)
        .map(|k| {
            let theta =
                std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (
                (RADIUS * theta.cos()).round() as i64,
                (RADIUS * theta.sin()).round() as i64,
            )
        })
        .collect();
    while pts.len() < total {
        let r = 0.9 * RADIUS * rng.gen::<f64>().sqrt();
        let theta = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
        let p = (
            (r * theta.cos()).round() as i64,
            (r * theta.sin()).round() as i64,
        );
        if !pts.contains(&p) {
            pts.push(p);
        }
    }

    let mut candidates: Vec<(usize, usize)> = (0..total)
        .flat_map(|a| (a + 1..total).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            (0..total).all(|c| c == a || c == b || !on_segment(pts[c], pts[a], pts[b]))
        })
        .collect();
    candidates.shuffle(rng);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (a, b) in candidates {
        let clear = chosen.iter().all(|&(c, d)| {
            a == c || a == d || b == c || b == d || !properly_cross(pts[a], pts[b], pts[c], pts[d])
        });
        if clear {
            chosen.push((a, b));
        }
    }

    chosen.shuffle(rng);
    let mut kept = chosen.clone();
    for e in chosen {
        if !rng.gen_bool(opts.sparsity) {
            continue;
        }
        let trial: Vec<_> = kept.iter().copied().filter(|&f| f != e).collect();
        let mut uf = UnionFind::new(total);
        for &(a, b) in &trial {
            uf.union(a, b);
        }
        let root = uf.find(0);
        if (1..total).all(|v| uf.find(v) == root) {
            kept = trial;
        }
    }
    kept.sort_unstable();

    let edges: Vec<(usize, usize, Rational)> = kept
        .iter()
        .map(|&(a, b)| (a + 1, b + 1, random_conductance(rng)))
        .collect();
    let mut incident: Vec<Vec<(EdgeId, P)>> = vec![Vec::new(); total];
    for (k, &(a, b)) in kept.iter().enumerate() {
        let id = k + 1;
        let (pa, pb) = (pts[a], pts[b]);
        incident[a].push((id, (pb.0 - pa.0, pb.1 - pa.1)));
        incident[b].push((id, (pa.0 - pb.0, pa.1 - pb.1)));
    }
    let rotation = incident
        .into_iter()
        .enumerate()
        .map(|(v, mut list)| {
            let p = pts[v];
            // Clockwise tangent for boundary vertices; any fixed start inside.
            let reference = if v < n { (p.1, -p.0) } else { (1, 0) };
            list.sort_by(|x, y| clockwise_from(reference, x.1, y.1));
            list.into_iter().map(|(id, _)| id).collect()
        })
        .collect();
    CircularNetwork::from_edges(n, total, &edges)
        .expect("generated edges are valid")
        .with_rotation(rotation)
        .expect("generated rotation is valid")
}

/// Planar network with `n` in `2..=max_n` and up to `max_inner` inner vertices.
pub fn random_planar_network_sized<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_inner: usize,
) -> CircularNetwork {
    let n = rng.gen_range(2..=max_n);
    let inner = rng.gen_range(0..=max_inner);
    let sparsity = rng.gen_range(0.2..0.8);
    random_planar_network(rng, &PlanarOptions { n, inner, sparsity })
}

/// A connected network on `vertex_count` vertices, not necessarily planar,
/// without a rotation system.
pub fn random_connected_network<R: Rng>(
    rng: &mut R,
    n: usize,
    vertex_count: usize,
    extra_edges: usize,
) -> CircularNetwork {
    let mut order: Vec<usize> = (1..=vertex_count).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..vertex_count {
        let parent = order[rng.gen_range(0..k)];
        edges.push((parent, order[k], random_conductance(rng)));
    }
    for _ in 0..extra_edges {
        let a = rng.gen_range(1..=vertex_count);
        let b = rng.gen_range(1..=vertex_count);
        if a != b {
            edges.push((a, b, random_conductance(rng)));
        }
    }
    CircularNetwork::from_edges(n, vertex_count, &edges).expect("generated edges are valid")
}

/// Split metric of the circular split `{i, ..., j-1} | rest` (0-based, `i < j`).
fn split_metric(n: usize, i: usize, j: usize) -> Matrix {
    let side = |k: usize| i <= k && k < j;
    let mut m = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            if side(a) != side(b) {
                m[(a, b)] = Rational::from_integer(BigInt::from(1));
            }
        }
    }
    m
}

/// Nonnegative integer combination of circular split metrics. Such metrics
/// are always Kalmanson for the identity order. About half the splits get
/// weight zero.
pub fn random_circular_split_metric<R: Rng>(rng: &mut R, n: usize) -> DistanceMatrix {
    let mut d = Matrix::zeros(n, n);
    for i in 1..n {
        for j in i + 1..=n {
            if rng.gen_bool(0.5) {
                continue;
            }
            let w = Rational::from_integer(BigInt::from(rng.gen_range(1..=5)));
            d = d.add(&split_metric(n, i, j).scale(&w));
        }
    }
    DistanceMatrix::new(d).expect("split metrics are symmetric with zero diagonal")
}

/// Symmetric zero-diagonal matrix with integer entries in `lo..=hi`.
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> DistanceMatrix {
    let mut m = Matrix::zeros(n, n);
    for a in 0..n {
        for b in a + 1..n {
            let v = Rational::from_integer(BigInt::from(rng.gen_range(lo..=hi)));
            m[(a, b)] = v.clone();
            m[(b, a)] = v;
        }
    }
    DistanceMatrix::new(m).expect("symmetric with zero diagonal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kalmanson::is_kalmanson;
    use crate::medial::medial_trace;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn planar_networks_are_connected_and_traceable() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let net = random_planar_network_sized(&mut rng, 6, 4);
            assert!(net.is_connected());
            let trace = medial_trace(&net).unwrap();
            assert!(trace.permutation().is_ok());
        }
    }

    #[test]
    fn generation_is_seeded() {
        let a = random_planar_network_sized(&mut ChaCha8Rng::seed_from_u64(9), 6, 4);
        let b = random_planar_network_sized(&mut ChaCha8Rng::seed_from_u64(9), 6, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn split_metrics_are_kalmanson() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=7 {
            assert!(is_kalmanson(&random_circular_split_metric(&mut rng, n)).is_none());
        }
    }

    #[test]
    fn clockwise_order() {
        // Up, right, down, left is clockwise.
        let mut dirs = vec![(0, -1), (-1, 0), (1, 0), (0, 1)];
        dirs.sort_by(|a, b| clockwise_from((0, 1), *a, *b));
        assert_eq!(dirs, vec![(0, 1), (1, 0), (0, -1), (-1, 0)]);
    }
}
