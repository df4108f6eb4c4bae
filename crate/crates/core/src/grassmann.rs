//! Embedding of resistance data into the totally non-negative Grassmannian
//! `Gr≥0(n-1, 2n)`.
//!
//! From a symmetric zero-diagonal matrix `D` we form the cyclic second
//! differences `m_ij` and the `n x 2n` matrix `Ω` whose even columns carry
//! `(-1)^(i+j) m_ij` and whose odd columns carry the cyclic incidence
//! pattern. Plücker coordinates are the maximal minors of `Ω` with its last
//! row deleted.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, signum, Matrix, Rational};

/// Largest `n` for which all `C(2n, n-1)` coordinates are enumerated by
/// default.
pub const DEFAULT_PLUECKER_CAP: usize = 9;

/// `m_ij = -(1/2)(D_ij + D_{i+1,j+1} - D_{i,j+1} - D_{i+1,j})`, indices mod n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondDifferences(Matrix);

impl SecondDifferences {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// Entry for 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[(i - 1, j - 1)]
    }
}

pub fn second_differences(d: &DistanceMatrix) -> SecondDifferences {
    let n = d.n();
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            let s = d.get(i, j) + d.get(i + 1, j + 1) - d.get(i, j + 1) - d.get(i + 1, j);
            m[(i - 1, j - 1)] = -(&half * s);
        }
    }
    SecondDifferences(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatrix {
    matrix: Matrix,
    source: DistanceMatrix,
}

impl OmegaMatrix {
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source(&self) -> &DistanceMatrix {
        &self.source
    }

    /// Column `A_c` for 1-based `c` in `1..=2n`.
    pub fn column(&self, c: usize) -> Vec<Rational> {
        self.matrix.column(c - 1)
    }

    /// `Σ_i (-1)^i row_i`, which vanishes identically.
    pub fn alternating_row_sum(&self) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.matrix.cols()];
        for i in 0..self.n() {
            let odd = (i + 1) % 2 == 1;
            for (a, x) in acc.iter_mut().zip(self.matrix.row(i)) {
                if odd {
                    *a -= x;
                } else {
                    *a += x;
                }
            }
        }
        acc
    }

    /// The `(n-1) x 2n` matrix with the last row deleted.
    pub fn truncated(&self) -> Matrix {
        let rows: Vec<usize> = (0..self.n() - 1).collect();
        let cols: Vec<usize> = (0..self.matrix.cols()).collect();
        self.matrix.submatrix(&rows, &cols)
    }
}

fn alternating(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn omega_matrix(d: &DistanceMatrix) -> OmegaMatrix {
    let n = d.n();
    let m = second_differences(d);
    let mut omega = Matrix::zeros(n, 2 * n);
    for i in 1..=n {
        for j in 1..=n {
            omega[(i - 1, 2 * j - 1)] = alternating(i + j) * m.get(i, j);
        }
        omega[(i - 1, 2 * i - 2)] = Rational::one();
        if i < n {
            omega[(i - 1, 2 * i)] = Rational::one();
        } else {
            omega[(n - 1, 0)] = alternating(n);
        }
    }
    OmegaMatrix {
        matrix: omega,
        source: d.clone(),
    }
}

pub fn row_space_rank(omega: &OmegaMatrix) -> usize {
    omega.matrix.rank()
}

/// All `k`-subsets of `1..=m` in colexicographic order.
pub fn colex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (1..=k).collect();
    loop {
        out.push(c.clone());
        // Find the lowest position that can advance.
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { c[i + 1] } else { m + 1 };
            if c[i] + 1 < limit {
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
        c[i] += 1;
        for (p, slot) in c.iter_mut().enumerate().take(i) {
            *slot = p + 1;
        }
    }
    out
}

/// Plücker coordinates `Δ_I` for every `(n-1)`-subset `I` of `1..=2n`,
/// stored unnormalized in colex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannPoint {
    n: usize,
    coords: Vec<(Vec<usize>, Rational)>,
}

impl GrassmannPoint {
    pub fn k(&self) -> usize {
        self.n - 1
    }

    pub fn ambient(&self) -> usize {
        2 * self.n
    }

    pub fn coordinates(&self) -> &[(Vec<usize>, Rational)] {
        &self.coords
    }

    /// Looks up `Δ_I` for a sorted index set.
    pub fn get(&self, subset: &[usize]) -> Option<&Rational> {
        self.coords
            .iter()
            .find(|(s, _)| s.as_slice() == subset)
            .map(|(_, v)| v)
    }

    /// `Δ_{2,4,…,2n-2}`.
    pub fn delta_even(&self) -> &Rational {
        let idx: Vec<usize> = (1..self.n).map(|k| 2 * k).collect();
        self.get(&idx).expect("every (n-1)-subset is present")
    }
}

pub fn pluecker_coordinates(omega: &OmegaMatrix) -> Result<GrassmannPoint> {
    pluecker_coordinates_capped(omega, DEFAULT_PLUECKER_CAP)
}

pub fn pluecker_coordinates_capped(omega: &OmegaMatrix, max_n: usize) -> Result<GrassmannPoint> {
    let n = omega.n();
    if n > max_n {
        return Err(Error::SizeLimitExceeded {
            what: "boundary count for Plücker enumeration",
            actual: n,
            limit: max_n,
        });
    }
    let rank = row_space_rank(omega);
    if rank != n - 1 {
        return Err(Error::RankMismatch {
            expected: n - 1,
            found: rank,
        });
    }
    let (rows, scales) = omega.truncated().integer_rows();
    let denom = scales.iter().fold(BigInt::one(), |a, b| a * b);
    let subsets = colex_subsets(2 * n, n - 1);
    let values: Vec<Rational> = subsets
        .par_iter()
        .map(|s| {
            let sub: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| s.iter().map(|&c| r[c - 1].clone()).collect())
                .collect();
            Rational::new(bareiss_determinant(sub), denom.clone())
        })
        .collect();
    Ok(GrassmannPoint {
        n,
        coords: subsets.into_iter().zip(values).collect(),
    })
}

/// Outcome of the total non-negativity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TnnVerdict {
    /// Rank is `n-1` and all coordinates share one sign; `sign` is the
    /// global factor (+1 or -1) that makes them non-negative.
    NonNegative {
        sign: i8,
    },
    RankDeficient {
        expected: usize,
        found: usize,
    },
    /// Two coordinates of opposite strict sign.
    MixedSigns {
        positive: Vec<usize>,
        negative: Vec<usize>,
    },
}

impl TnnVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TnnVerdict::NonNegative { .. })
    }

    pub fn sign(&self) -> i8 {
        match self {
            TnnVerdict::NonNegative { sign } => *sign,
            _ => 1,
        }
    }
}

pub fn classify(point: &GrassmannPoint) -> TnnVerdict {
    let pos = point.coords.iter().find(|(_, v)| signum(v) > 0);
    let neg = point.coords.iter().find(|(_, v)| signum(v) < 0);
    match (pos, neg) {
        (Some((p, _)), Some((q, _))) => TnnVerdict::MixedSigns {
            positive: p.clone(),
            negative: q.clone(),
        },
        (None, Some(_)) => TnnVerdict::NonNegative { sign: -1 },
        _ => TnnVerdict::NonNegative { sign: 1 },
    }
}

pub fn is_tnn_point(omega: &OmegaMatrix) -> Result<TnnVerdict> {
    is_tnn_point_capped(omega, DEFAULT_PLUECKER_CAP)
}

pub fn is_tnn_point_capped(omega: &OmegaMatrix, max_n: usize) -> Result<TnnVerdict> {
    match pluecker_coordinates_capped(omega, max_n) {
        Ok(point) => Ok(classify(&point)),
        Err(Error::RankMismatch { expected, found }) => {
            Ok(TnnVerdict::RankDeficient { expected, found })
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn uniform(n: usize, value: Rational) -> DistanceMatrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[(i, j)] = value.clone();
                }
            }
        }
        DistanceMatrix::new(m).unwrap()
    }

    fn four_cycle_r() -> DistanceMatrix {
        let a = ratio(3, 4);
        let one = int(1);
        let z = int(0);
        DistanceMatrix::new(Matrix::from_rows(vec![
            vec![z.clone(), a.clone(), one.clone(), a.clone()],
            vec![a.clone(), z.clone(), a.clone(), one.clone()],
            vec![one.clone(), a.clone(), z.clone(), a.clone()],
            vec![a.clone(), one, a, z],
        ]))
        .unwrap()
    }

    #[test]
    fn second_differences_examples() {
        let zero = DistanceMatrix::new(Matrix::zeros(3, 3)).unwrap();
        assert!(second_differences(&zero).matrix().is_zero());

        let m = second_differences(&uniform(3, int(2)));
        assert_eq!(
            m.matrix(),
            &Matrix::from_i64_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])
        );

        let m = second_differences(&four_cycle_r());
        for i in 1..=4 {
            for j in 1..=4 {
                let expected = if i == j { ratio(3, 4) } else { ratio(-1, 4) };
                assert_eq!(m.get(i, j), &expected, "m[{i}][{j}]");
            }
        }
    }

    #[test]
    fn omega_examples() {
        let omega = omega_matrix(&uniform(3, int(2)));
        assert_eq!(
            omega.matrix(),
            &Matrix::from_i64_rows(&[
                &[1, 2, 1, 1, 0, -1],
                &[0, 1, 1, 2, 1, 1],
                &[-1, -1, 0, 1, 1, 2]
            ])
        );
        assert!(omega.alternating_row_sum().iter().all(Zero::is_zero));

        let omega = omega_matrix(&uniform(2, ratio(1, 2)));
        let row = vec![int(1), ratio(1, 2), int(1), ratio(1, 2)];
        assert_eq!(omega.matrix(), &Matrix::from_rows(vec![row.clone(), row]));

        let omega = omega_matrix(&DistanceMatrix::new(Matrix::zeros(4, 4)).unwrap());
        for c in 1..=8 {
            let col = omega.column(c);
            if c % 2 == 0 {
                assert!(col.iter().all(Zero::is_zero));
            } else {
                assert_eq!(col.iter().filter(|x| !x.is_zero()).count(), 2);
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(row_space_rank(&omega_matrix(&uniform(3, int(2)))), 2);
        assert_eq!(row_space_rank(&omega_matrix(&uniform(2, ratio(1, 2)))), 1);
    }

    #[test]
    fn pluecker_examples() {
        let point = pluecker_coordinates(&omega_matrix(&uniform(3, int(2)))).unwrap();
        assert_eq!(point.coordinates().len(), 15);
        assert_eq!(point.get(&[1, 2]), Some(&int(1)));
        assert_eq!(point.get(&[2, 4]), Some(&int(3)));
        assert_eq!(point.get(&[2, 6]), Some(&int(3)));
        assert_eq!(point.get(&[5, 6]), Some(&int(1)));
        assert!(point.coordinates().iter().all(|(_, v)| *v >= int(1)));
        assert_eq!(point.delta_even(), &int(3));

        let point = pluecker_coordinates(&omega_matrix(&uniform(2, ratio(1, 2)))).unwrap();
        let values: Vec<Rational> = point.coordinates().iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(values, vec![int(1), ratio(1, 2), int(1), ratio(1, 2)]);
        assert_eq!(point.delta_even(), &ratio(1, 2));
    }

    #[test]
    fn rank_deficient_pluecker_is_an_error() {
        let zero = DistanceMatrix::new(Matrix::zeros(3, 3)).unwrap();
        assert_eq!(row_space_rank(&omega_matrix(&zero)), 2);
        let broken = OmegaMatrix {
            matrix: Matrix::zeros(3, 6),
            source: zero,
        };
        assert!(matches!(
            pluecker_coordinates(&broken),
            Err(Error::RankMismatch {
                expected: 2,
                found: 0
            })
        ));
        assert_eq!(
            is_tnn_point(&broken).unwrap(),
            TnnVerdict::RankDeficient {
                expected: 2,
                found: 0
            }
        );
    }

    #[test]
    fn star_is_tnn() {
        let verdict = is_tnn_point(&omega_matrix(&uniform(3, int(2)))).unwrap();
        assert_eq!(verdict, TnnVerdict::NonNegative { sign: 1 });
    }

    #[test]
    fn colex_order() {
        let s = colex_subsets(4, 2);
        assert_eq!(
            s,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(colex_subsets(18, 8).len(), 43758);
        assert_eq!(colex_subsets(4, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn size_cap_is_enforced() {
        let omega = omega_matrix(&uniform(4, int(1)));
        assert!(matches!(
            pluecker_coordinates_capped(&omega, 3),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
