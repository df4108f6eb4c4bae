//! Metric-side checks: triangle and Kalmanson inequalities, circular split
//! coefficients, circular-planar response matrices, and the combined
//! characterization of resistance metrics of circular networks.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::distance::DistanceMatrix;
use crate::error::Error;
use crate::error::Result;
use crate::grassmann::{
    self, classify, omega_matrix, pluecker_coordinates_capped, TnnVerdict, DEFAULT_PLUECKER_CAP,
};
use crate::linalg::{Matrix, Rational};

/// A triple `i < j < k` where the side `long` exceeds the sum of the other
/// two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleViolation {
    pub triple: [usize; 3],
    pub long: (usize, usize),
}

/// The first triangle inequality violation, scanning `i < j < k`
/// lexicographically. `None` means `d` is a (pseudo)metric.
pub fn is_metric(d: &DistanceMatrix) -> Option<TriangleViolation> {
    let n = d.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let sides = [((i, j), k), ((i, k), j), ((j, k), i)];
                for ((a, b), c) in sides {
                    if d.get(a, b) > &(d.get(a, c) + d.get(c, b)) {
                        return Some(TriangleViolation {
                            triple: [i, j, k],
                            long: (a, b),
                        });
                    }
                }
            }
        }
    }
    None
}

/// A quadruple `i1 < i2 < i3 < i4` where `d(i1,i3) + d(i2,i4)` falls below
/// the sum over `pairs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalmansonViolation {
    pub quadruple: [usize; 4],
    pub pairs: [(usize, usize); 2],
}

/// The first Kalmanson violation in the given circular order.
pub fn is_kalmanson(d: &DistanceMatrix) -> Option<KalmansonViolation> {
    let n = d.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for e in c + 1..=n {
                    let diagonal = d.get(a, c) + d.get(b, e);
                    for pairs in [[(b, c), (a, e)], [(a, b), (c, e)]] {
                        let side = d.get(pairs[0].0, pairs[0].1) + d.get(pairs[1].0, pairs[1].1);
                        if diagonal < side {
                            return Some(KalmansonViolation {
                                quadruple: [a, b, c, e],
                                pairs,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Coefficients `(1/2)(d_ij + d_{i+1,j+1} - d_{i,j+1} - d_{i+1,j})` of the
/// circular split decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCoefficients(Matrix);

impl SplitCoefficients {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    /// `-M(D)`, the candidate response matrix of the dual network.
    pub fn dual_response(&self) -> Matrix {
        self.0.neg()
    }
}

pub fn split_decomposition(d: &DistanceMatrix) -> SplitCoefficients {
    SplitCoefficients(grassmann::second_differences(d).into_matrix().neg())
}

/// Why a matrix fails to be the response matrix of a circular planar
/// network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResponseDefect {
    NotSquare,
    NotSymmetric {
        i: usize,
        j: usize,
    },
    NonzeroRowSum {
        row: usize,
    },
    PositiveOffDiagonal {
        i: usize,
        j: usize,
    },
    /// `(-1)^k det M(P;Q) < 0` for this circular pair.
    NegativeCircularMinor {
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
}

/// All circular pairs `(P; Q)` of size `k`: `p_1, …, p_k, q_k, …, q_1` in
/// circular order on `1..=n`.
pub fn circular_pairs(n: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    if k == 0 || 2 * k > n {
        return out;
    }
    for s in grassmann::colex_subsets(n, 2 * k) {
        for r in 0..2 * k {
            let t: Vec<usize> = (0..2 * k).map(|x| s[(r + x) % (2 * k)]).collect();
            let p = t[..k].to_vec();
            let q: Vec<usize> = t[k..].iter().rev().copied().collect();
            out.push((p, q));
        }
    }
    out
}

/// Symmetric, zero row sums, non-positive off-diagonal, and every circular
/// minor of size up to `n/2` has sign `(-1)^k` or vanishes.
pub fn is_circular_response_matrix(m: &Matrix) -> Option<ResponseDefect> {
    if !m.is_square() {
        return Some(ResponseDefect::NotSquare);
    }
    let n = m.rows();
    if let Some((i, j)) = m.first_asymmetry() {
        return Some(ResponseDefect::NotSymmetric { i: i + 1, j: j + 1 });
    }
    if let Some(row) = m.row_sums().iter().position(|s| !s.is_zero()) {
        return Some(ResponseDefect::NonzeroRowSum { row: row + 1 });
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && m[(i, j)].is_positive() {
                return Some(ResponseDefect::PositiveOffDiagonal { i: i + 1, j: j + 1 });
            }
        }
    }
    for k in 1..=n / 2 {
        for (p, q) in circular_pairs(n, k) {
            let rows: Vec<usize> = p.iter().map(|x| x - 1).collect();
            let cols: Vec<usize> = q.iter().map(|x| x - 1).collect();
            let det = m.submatrix(&rows, &cols).determinant();
            let signed = if k % 2 == 0 { det } else { -det };
            if signed.is_negative() {
                return Some(ResponseDefect::NegativeCircularMinor { rows: p, cols: q });
            }
        }
    }
    None
}

/// Every sub-verdict of the planar-electrical test; nothing short-circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub n: usize,
    pub triangle: Option<TriangleViolation>,
    pub kalmanson: Option<KalmansonViolation>,
    pub tnn: TnnVerdict,
    /// `Δ_{2,4,…,2n-2}` after the global sign normalization of `tnn`; zero
    /// when the rank is deficient.
    pub delta_even: Rational,
    pub split: SplitCoefficients,
    /// Result of the circular-planar response test on `-M(D)`.
    pub dual_defect: Option<ResponseDefect>,
    /// Rank of `-M(D)`; `n - 1` exactly when the dual network is connected.
    pub dual_rank: usize,
    /// Kalmanson, totally non-negative, and `Δ_{2,4,…,2n-2} ≠ 0`.
    pub electrical: bool,
}

impl CharacterizationReport {
    pub fn is_metric(&self) -> bool {
        self.triangle.is_none()
    }

    pub fn is_kalmanson(&self) -> bool {
        self.kalmanson.is_none()
    }

    pub fn tnn_holds(&self) -> bool {
        self.tnn.holds()
    }

    /// `-M(D)` is the response matrix of a connected circular network.
    pub fn dual_response_valid(&self) -> bool {
        self.dual_defect.is_none() && self.dual_rank + 1 == self.n
    }

    /// Verdict of the split-decomposition route.
    pub fn dual_route_electrical(&self) -> bool {
        self.is_kalmanson() && self.dual_response_valid()
    }

    /// The Plücker route and the dual-response route agree.
    pub fn routes_agree(&self) -> bool {
        self.electrical == self.dual_route_electrical()
    }
}

pub fn characterize(d: &DistanceMatrix) -> Result<CharacterizationReport> {
    characterize_capped(d, DEFAULT_PLUECKER_CAP)
}

pub fn characterize_capped(d: &DistanceMatrix, max_n: usize) -> Result<CharacterizationReport> {
    let n = d.n();
    let triangle = is_metric(d);
    let kalmanson = is_kalmanson(d);

    let omega = omega_matrix(d);
    let (tnn, delta_even) = match pluecker_coordinates_capped(&omega, max_n) {
        Ok(point) => {
            let verdict = classify(&point);
            let delta = point.delta_even().clone();
            let delta = if verdict.sign() < 0 { -delta } else { delta };
            (verdict, delta)
        }
        Err(Error::RankMismatch { expected, found }) => (
            TnnVerdict::RankDeficient { expected, found },
            Rational::zero(),
        ),
        Err(e) => return Err(e),
    };

    let split = split_decomposition(d);
    let dual = split.dual_response();
    let dual_defect = is_circular_response_matrix(&dual);
    let dual_rank = dual.rank();

    let electrical = kalmanson.is_none() && tnn.holds() && !delta_even.is_zero();
    Ok(CharacterizationReport {
        n,
        triangle,
        kalmanson,
        tnn,
        delta_even,
        split,
        dual_defect,
        dual_rank,
        electrical,
    })
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for TriangleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triple ({}) long side {}-{}",
            join(&self.triple),
            self.long.0,
            self.long.1
        )
    }
}

impl fmt::Display for KalmansonViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = self.quadruple;
        write!(
            f,
            "quadruple ({}) d{a}{c}+d{b}{e} < d{}{}+d{}{}",
            join(&self.quadruple),
            self.pairs[0].0,
            self.pairs[0].1,
            self.pairs[1].0,
            self.pairs[1].1
        )
    }
}

impl fmt::Display for ResponseDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResponseDefect::NotSquare => write!(f, "not square"),
            ResponseDefect::NotSymmetric { i, j } => write!(f, "not symmetric at ({i},{j})"),
            ResponseDefect::NonzeroRowSum { row } => write!(f, "row {row} does not sum to 0"),
            ResponseDefect::PositiveOffDiagonal { i, j } => {
                write!(f, "positive off-diagonal entry at ({i},{j})")
            }
            ResponseDefect::NegativeCircularMinor { rows, cols } => write!(
                f,
                "circular minor ({};{}) has the wrong sign",
                join(rows),
                join(cols)
            ),
        }
    }
}

impl fmt::Display for CharacterizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        match &self.triangle {
            None => writeln!(f, "metric: true")?,
            Some(v) => writeln!(f, "metric: false ({v})")?,
        }
        match &self.kalmanson {
            None => writeln!(f, "kalmanson: true")?,
            Some(v) => writeln!(f, "kalmanson: false ({v})")?,
        }
        writeln!(f, "tnn: {} ({})", self.tnn.holds(), self.tnn)?;
        writeln!(f, "delta_even: {}", self.delta_even)?;
        match &self.dual_defect {
            None => writeln!(f, "dual_response: true")?,
            Some(d) => writeln!(f, "dual_response: false ({d})")?,
        }
        writeln!(f, "dual_rank: {}", self.dual_rank)?;
        writeln!(f, "electrical_dual: {}", self.dual_route_electrical())?;
        write!(f, "electrical: {}", self.electrical)
    }
}

impl fmt::Display for TnnVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TnnVerdict::NonNegative { sign } => write!(f, "non-negative (sign {sign:+})"),
            TnnVerdict::RankDeficient { expected, found } => {
                write!(f, "rank {found}, expected {expected}")
            }
            TnnVerdict::MixedSigns { positive, negative } => write!(
                f,
                "mixed signs: Δ{{{}}} > 0 and Δ{{{}}} < 0",
                join(positive),
                join(negative)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn dm(rows: Vec<Vec<Rational>>) -> DistanceMatrix {
        DistanceMatrix::new(Matrix::from_rows(rows)).unwrap()
    }

    fn star_r() -> DistanceMatrix {
        let (z, t) = (int(0), int(2));
        dm(vec![
            vec![z.clone(), t.clone(), t.clone()],
            vec![t.clone(), z.clone(), t.clone()],
            vec![t.clone(), t, z],
        ])
    }

    fn four_cycle_r() -> DistanceMatrix {
        let (z, a, o) = (int(0), ratio(3, 4), int(1));
        dm(vec![
            vec![z.clone(), a.clone(), o.clone(), a.clone()],
            vec![a.clone(), z.clone(), a.clone(), o.clone()],
            vec![o.clone(), a.clone(), z.clone(), a.clone()],
            vec![a.clone(), o, a, z],
        ])
    }

    #[test]
    fn metric_examples() {
        assert!(is_metric(&star_r()).is_none());
        let bad = dm(vec![
            vec![int(0), int(1), int(5)],
            vec![int(1), int(0), int(1)],
            vec![int(5), int(1), int(0)],
        ]);
        let w = is_metric(&bad).unwrap();
        assert_eq!(w.triple, [1, 2, 3]);
        assert_eq!(w.long, (1, 3));
        assert!(is_metric(&DistanceMatrix::new(Matrix::zeros(3, 3)).unwrap()).is_none());
    }

    #[test]
    fn kalmanson_examples() {
        assert!(is_kalmanson(&four_cycle_r()).is_none());
        let swapped = four_cycle_r().relabel(&[1, 3, 2, 4]);
        let w = is_kalmanson(&swapped).unwrap();
        assert_eq!(w.quadruple, [1, 2, 3, 4]);
        let odd = dm(vec![
            vec![int(0), int(1), int(9)],
            vec![int(1), int(0), int(1)],
            vec![int(9), int(1), int(0)],
        ]);
        assert!(is_kalmanson(&odd).is_none());
    }

    #[test]
    fn split_examples() {
        let s = split_decomposition(&star_r());
        assert_eq!(
            s.matrix(),
            &Matrix::from_i64_rows(&[&[-2, 1, 1], &[1, -2, 1], &[1, 1, -2]])
        );
        assert!(
            split_decomposition(&DistanceMatrix::new(Matrix::zeros(4, 4)).unwrap())
                .matrix()
                .is_zero()
        );
        let s = split_decomposition(&four_cycle_r());
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { ratio(-3, 4) } else { ratio(1, 4) };
                assert_eq!(s.matrix()[(i, j)], expected);
            }
        }
    }

    #[test]
    fn circular_response_examples() {
        let tri = Matrix::from_i64_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]);
        assert!(is_circular_response_matrix(&tri).is_none());
        let positive = Matrix::from_i64_rows(&[&[0, 1, -1], &[1, -2, 1], &[-1, 1, 0]]);
        assert!(matches!(
            is_circular_response_matrix(&positive),
            Some(ResponseDefect::PositiveOffDiagonal { .. })
        ));
        let rowsum = Matrix::from_i64_rows(&[&[2, -1], &[-1, 2]]);
        assert!(matches!(
            is_circular_response_matrix(&rowsum),
            Some(ResponseDefect::NonzeroRowSum { row: 1 })
        ));
    }

    #[test]
    fn circular_pairs_shape() {
        // 4 points, k = 2: one 4-subset with 4 rotations.
        let pairs = circular_pairs(4, 2);
        assert_eq!(pairs.len(), 4);
        assert!(pairs.contains(&(vec![1, 2], vec![4, 3])));
        assert_eq!(circular_pairs(5, 1).len(), 20);
        assert!(circular_pairs(3, 2).is_empty());
    }

    #[test]
    fn characterize_star() {
        let report = characterize(&star_r()).unwrap();
        assert!(report.electrical);
        assert_eq!(report.delta_even, int(3));
        assert_eq!(
            report.split.dual_response(),
            Matrix::from_i64_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
        );
        assert!(report.dual_response_valid());
        assert!(report.routes_agree());
    }

    #[test]
    fn characterize_four_cycle() {
        let report = characterize(&four_cycle_r()).unwrap();
        assert!(report.electrical);
        assert!(report.dual_defect.is_none());
        assert!(report.routes_agree());
    }

    #[test]
    fn single_split_metric_has_zero_delta() {
        // d = 1 across the split {1,2}|{3,4}, 0 inside.
        let (z, o) = (int(0), int(1));
        let d = dm(vec![
            vec![z.clone(), z.clone(), o.clone(), o.clone()],
            vec![z.clone(), z.clone(), o.clone(), o.clone()],
            vec![o.clone(), o.clone(), z.clone(), z.clone()],
            vec![o.clone(), o, z.clone(), z],
        ]);
        let report = characterize(&d).unwrap();
        assert!(report.is_kalmanson());
        assert!(!report.electrical);
        assert!(report.delta_even.is_zero());
        assert!(report.routes_agree());
    }
}
