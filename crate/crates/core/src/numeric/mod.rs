//! Exact scalar and matrix arithmetic.

mod matrix;
mod rational;

pub use matrix::{
    determinant, integer_determinant, solve_linear_system, solve_many, RationalMatrix,
};
pub use rational::Rational;

use num_bigint::BigInt;

use crate::graph::Graph;

/// Graph Laplacian `L = D - A`.
pub fn laplacian(g: &Graph) -> RationalMatrix {
    let n = g.n();
    let mut l = RationalMatrix::zeros(n, n);
    for x in 0..n {
        l[(x, x)] = Rational::from(g.degree(x));
        for &y in g.neighbors(x) {
            l[(x, y)] = Rational::from(-1i64);
        }
    }
    l
}

/// Integer Laplacian with row and column `ground` deleted.
pub(crate) fn reduced_laplacian_int(g: &Graph, ground: usize) -> Vec<Vec<BigInt>> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != ground).collect();
    keep.iter()
        .map(|&x| {
            keep.iter()
                .map(|&y| {
                    if x == y {
                        BigInt::from(g.degree(x))
                    } else if g.has_edge(x, y) {
                        BigInt::from(-1)
                    } else {
                        BigInt::from(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// Number of spanning trees, as the determinant of a principal
/// `(n-1) x (n-1)` minor of the Laplacian.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    if g.n() == 1 {
        return BigInt::from(1);
    }
    integer_determinant(reduced_laplacian_int(g, g.n() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn laplacian_small_cases() {
        let p2 = families::path(2).unwrap();
        assert_eq!(
            laplacian(&p2),
            RationalMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap()
        );
        let c3 = families::cycle(3).unwrap();
        let l = laplacian(&c3);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2 } else { -1 };
                assert_eq!(l[(i, j)], Rational::from(want as i64));
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = families::cycle_with_pendants(6, 4).unwrap();
        let l = laplacian(&g);
        assert!(l.is_symmetric());
        for i in 0..6 {
            assert!(l.row(i).iter().sum::<Rational>().is_zero());
            assert_eq!(l[(i, i)], Rational::from(g.degree(i)));
        }
    }

    #[test]
    fn reduced_c3_potential_difference() {
        // ground vertex 2; unit current in at 0, out at 1
        let c3 = families::cycle(3).unwrap();
        let reduced = laplacian(&c3).without_row_col(2);
        let phi =
            solve_linear_system(&reduced, &[Rational::from(1i64), Rational::from(-1i64)]).unwrap();
        assert_eq!(&phi[0] - &phi[1], Rational::frac(2, 3));
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(
            spanning_tree_count(&families::path(5).unwrap()),
            BigInt::from(1)
        );
        assert_eq!(
            spanning_tree_count(&families::star(6).unwrap()),
            BigInt::from(1)
        );
        assert_eq!(
            spanning_tree_count(&families::cycle(5).unwrap()),
            BigInt::from(5)
        );
        assert_eq!(
            spanning_tree_count(&families::cycle_with_pendants(6, 4).unwrap()),
            BigInt::from(4)
        );
        assert_eq!(
            spanning_tree_count(&families::complete(4).unwrap()),
            BigInt::from(16)
        );
        assert_eq!(
            spanning_tree_count(&families::path(1).unwrap()),
            BigInt::from(1)
        );
    }
}
