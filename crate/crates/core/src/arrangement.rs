//! Lens-free chord diagrams realized as straight chords between points in
//! convex position.
//!
//! Endpoints `1..=2n` are placed on the concave arc `y = -x^2` with
//! increasing `x`, which lists them clockwise. Chords between points in
//! convex position cross exactly when their endpoints interleave, and they
//! cross at most once, so the arrangement has no lenses. Coordinates are
//! exact rationals; the x positions are perturbed until no three chords
//! meet at a point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Rational;
use crate::medial::StrandPermutation;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Point {
    x: Rational,
    y: Rational,
}

/// A crossing between chords `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub chords: (usize, usize),
    point: Point,
}

#[derive(Clone, Debug)]
pub struct ChordDiagram {
    n: usize,
    /// Chord `c` joins `chords[c].0 < chords[c].1`, ordered by first endpoint.
    chords: Vec<(usize, usize)>,
    endpoints: Vec<Point>,
    crossings: Vec<Crossing>,
    /// Crossing indices along each chord from its smaller endpoint.
    along: Vec<Vec<usize>>,
}

fn interleave((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Intersection of the chords through `(x1, -x1^2), (x2, -x2^2)` and
/// `(x3, -x3^2), (x4, -x4^2)`. Such a chord is `y = -(x1 + x2) x + x1 x2`.
fn intersect(x1: &Rational, x2: &Rational, x3: &Rational, x4: &Rational) -> Point {
    let (s1, p1) = (x1 + x2, x1 * x2);
    let (s2, p2) = (x3 + x4, x3 * x4);
    let x = (&p1 - &p2) / (&s1 - &s2);
    let y = -(&s1 * &x) + &p1;
    Point { x, y }
}

impl ChordDiagram {
    pub fn new(tau: &StrandPermutation) -> Self {
        let n = tau.n();
        let chords = tau.pairs();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut xs: Vec<Rational> = (1..=2 * n as i64)
            .map(|k| Rational::from_integer(BigInt::from(k)))
            .collect();
        loop {
            if let Some(diagram) = Self::realize(n, &chords, &xs) {
                return diagram;
            }
            // Three chords were concurrent: jitter every position inside
            // its unit slot, keeping the order.
            xs = (1..=2 * n as i64)
                .map(|k| {
                    let jitter: i64 = rng.gen_range(1..1000);
                    Rational::from_integer(BigInt::from(k))
                        + Rational::new(BigInt::from(jitter), BigInt::from(2000))
                })
                .collect();
        }
    }

    fn realize(n: usize, chords: &[(usize, usize)], xs: &[Rational]) -> Option<Self> {
        let endpoints: Vec<Point> = xs
            .iter()
            .map(|x| Point {
                x: x.clone(),
                y: -(x * x),
            })
            .collect();
        let mut crossings = Vec::new();
        let mut along = vec![Vec::new(); chords.len()];
        for a in 0..chords.len() {
            for b in a + 1..chords.len() {
                if interleave(chords[a], chords[b]) {
                    let (p, q) = chords[a];
                    let (r, s) = chords[b];
                    let point = intersect(&xs[p - 1], &xs[q - 1], &xs[r - 1], &xs[s - 1]);
                    along[a].push(crossings.len());
                    along[b].push(crossings.len());
                    crossings.push(Crossing {
                        chords: (a, b),
                        point,
                    });
                }
            }
        }
        for list in &mut along {
            list.sort_by(|&i, &j| crossings[i].point.x.cmp(&crossings[j].point.x));
            if list
                .windows(2)
                .any(|w| crossings[w[0]].point.x == crossings[w[1]].point.x)
            {
                return None;
            }
        }
        Some(ChordDiagram {
            n,
            chords: chords.to_vec(),
            endpoints,
            crossings,
            along,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Chords crossed by `chord`, in order from its smaller endpoint.
    pub fn crossing_order(&self, chord: usize) -> Vec<usize> {
        self.along[chord]
            .iter()
            .map(|&x| {
                let (a, b) = self.crossings[x].chords;
                if a == chord {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        interleave(self.chords[a], self.chords[b])
    }

    /// Planar map of the arrangement inside the disk.
    pub fn planar_map(&self) -> PlanarMap {
        PlanarMap::build(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Endpoint(usize),
    Crossing(usize),
    /// Point on the boundary between endpoints `k` and `k + 1`.
    Arc(usize),
}

/// Straight-line plane graph: endpoints, crossings, chord segments, and the
/// boundary polygon. Each boundary arc is bent outward through its own node
/// so that it never overlaps a chord between adjacent endpoints. Faces are half-edge cycles with the face on the right,
/// so bounded faces are walked clockwise.
#[derive(Clone, Debug)]
pub struct PlanarMap {
    pub nodes: Vec<NodeKind>,
    /// Half-edge `h` runs `tail[h] -> tail[h ^ 1]`.
    pub tail: Vec<usize>,
    /// Whether the undirected edge `h / 2` lies on a chord.
    pub on_chord: Vec<bool>,
    pub next: Vec<usize>,
    /// Face index of each half-edge.
    pub face_of: Vec<usize>,
    /// Half-edges of each face in walk order.
    pub faces: Vec<Vec<usize>>,
}

impl PlanarMap {
    fn build(d: &ChordDiagram) -> Self {
        let m = 2 * d.n;
        let mut nodes: Vec<NodeKind> = (1..=m).map(NodeKind::Endpoint).collect();
        nodes.extend((0..d.crossings.len()).map(NodeKind::Crossing));
        nodes.extend((1..=m).map(NodeKind::Arc));
        let arc_base = m + d.crossings.len();
        let two = Rational::from_integer(BigInt::from(2));
        let arcs: Vec<Point> = (0..m)
            .map(|k| {
                let (a, b) = (&d.endpoints[k].x, &d.endpoints[(k + 1) % m].x);
                let x = (a + b) / &two;
                if k + 1 < m {
                    Point { y: -(&x * &x), x }
                } else {
                    // Below the closing chord from the last endpoint to the first.
                    let y = -((a + b) * &x) + a * b - Rational::one();
                    Point { x, y }
                }
            })
            .collect();
        let point = |node: usize| -> &Point {
            if node < m {
                &d.endpoints[node]
            } else if node < arc_base {
                &d.crossings[node - m].point
            } else {
                &arcs[node - arc_base]
            }
        };

        let mut tail = Vec::new();
        let mut on_chord = Vec::new();
        let mut add = |a: usize, b: usize, chord: bool| {
            tail.push(a);
            tail.push(b);
            on_chord.push(chord);
        };
        for k in 0..m {
            add(k, arc_base + k, false);
            add(arc_base + k, (k + 1) % m, false);
        }
        for (c, &(a, b)) in d.chords.iter().enumerate() {
            let mut chain = vec![a - 1];
            chain.extend(d.along[c].iter().map(|&x| m + x));
            chain.push(b - 1);
            for w in chain.windows(2) {
                add(w[0], w[1], true);
            }
        }

        // Outgoing half-edges per node, sorted counterclockwise by angle.
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for h in 0..tail.len() {
            out[tail[h]].push(h);
        }
        for (v, list) in out.iter_mut().enumerate() {
            let origin = point(v);
            list.sort_by(|&h1, &h2| {
                let p1 = point(tail[h1 ^ 1]);
                let p2 = point(tail[h2 ^ 1]);
                ccw_cmp(
                    (&p1.x - &origin.x, &p1.y - &origin.y),
                    (&p2.x - &origin.x, &p2.y - &origin.y),
                )
            });
        }
        let mut rank = vec![0; tail.len()];
        for list in &out {
            for (i, &h) in list.iter().enumerate() {
                rank[h] = i;
            }
        }
        // Arriving along u -> v, continue with the first edge counterclockwise
        // after v -> u.
        let next: Vec<usize> = (0..tail.len())
            .map(|h| {
                let back = h ^ 1;
                let v = tail[back];
                let list = &out[v];
                list[(rank[back] + 1) % list.len()]
            })
            .collect();

        let mut face_of = vec![usize::MAX; tail.len()];
        let mut faces = Vec::new();
        for h in 0..tail.len() {
            if face_of[h] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut cur = h;
            while face_of[cur] == usize::MAX {
                face_of[cur] = f;
                walk.push(cur);
                cur = next[cur];
            }
            faces.push(walk);
        }
        PlanarMap {
            nodes,
            tail,
            on_chord,
            next,
            face_of,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `V - E + F`; 2 for a connected plane graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Last half-edge of the boundary arc from endpoint `k` to `k + 1`.
    pub fn arc_half_edge(&self, k: usize) -> usize {
        4 * (k - 1) + 2
    }

    /// Face to the right of the boundary arc from endpoint `k` to `k + 1`.
    pub fn arc_face(&self, k: usize) -> usize {
        self.face_of[self.arc_half_edge(k)]
    }

    pub fn head(&self, h: usize) -> usize {
        self.tail[h ^ 1]
    }
}

fn half(dx: &Rational, dy: &Rational) -> u8 {
    if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
        0
    } else {
        1
    }
}

/// Orders direction vectors by angle in `[0, 2π)`.
fn ccw_cmp(a: (Rational, Rational), b: (Rational, Rational)) -> Ordering {
    let (ha, hb) = (half(&a.0, &a.1), half(&b.0, &b.1));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let cross = &a.0 * &b.1 - &a.1 * &b.0;
    if cross.is_positive() {
        Ordering::Less
    } else if cross.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}
