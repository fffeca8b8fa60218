//! Effective resistance and the resistance-based indices.
//!
//! Two independent routes are provided. The general route grounds one vertex,
//! solves the reduced Laplacian for a unit current injected at every other
//! vertex, and reads `r(x, y)` off potential differences by superposition.
//! The unicyclic route adds branch depths to the cycle resistance
//! `k (l - k) / l` across the cut vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, UnicyclicDecomposition};
use crate::numeric::{laplacian, solve_many, Rational, RationalMatrix};

/// Symmetric matrix of effective resistances `r(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResistanceMatrix {
    matrix: RationalMatrix,
}

impl ResistanceMatrix {
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        &self.matrix[(x, y)]
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// `R(x) = sum_y r(x, y)`.
    pub fn centrality(&self, x: usize) -> Rational {
        self.matrix.row(x).iter().sum()
    }

    /// `R^w(x) = sum_y d(y) r(x, y)`.
    pub fn weighted_centrality(&self, g: &Graph, x: usize) -> Rational {
        self.matrix
            .row(x)
            .iter()
            .enumerate()
            .map(|(y, r)| r * Rational::from(g.degree(y)))
            .sum()
    }

    fn pair_sum(&self, weight: impl Fn(usize, usize) -> Rational) -> Rational {
        let n = self.n();
        let mut total = Rational::zero();
        for x in 0..n {
            for y in (x + 1)..n {
                total += weight(x, y) * self.get(x, y);
            }
        }
        total
    }

    /// `Kf = sum over unordered pairs of r(x, y)`.
    pub fn kirchhoff_index(&self) -> Rational {
        self.pair_sum(|_, _| Rational::one())
    }

    /// `Kf+ = sum over pairs of (d(x) + d(y)) r(x, y)`.
    pub fn additive_degree_kirchhoff(&self, g: &Graph) -> Rational {
        self.pair_sum(|x, y| Rational::from(g.degree(x) + g.degree(y)))
    }

    /// `Kf* = sum over pairs of d(x) d(y) r(x, y)`.
    pub fn multiplicative_degree_kirchhoff(&self, g: &Graph) -> Rational {
        self.pair_sum(|x, y| Rational::from(g.degree(x) * g.degree(y)))
    }
}

/// Laplacian route with vertex 0 as ground.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    resistance_matrix_grounded(g, 0)
}

pub fn resistance_matrix_grounded(g: &Graph, ground: usize) -> Result<ResistanceMatrix> {
    g.check_vertex(ground)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let reduced = laplacian(g).without_row_col(ground);
    let others: Vec<usize> = (0..n).filter(|&v| v != ground).collect();
    // potentials[i][j]: potential at others[j] for unit injection at others[i]
    let injections: Vec<Vec<Rational>> = (0..n - 1)
        .map(|i| {
            let mut e = vec![Rational::zero(); n - 1];
            e[i] = Rational::one();
            e
        })
        .collect();
    let potentials = solve_many(&reduced, &injections)?;

    let mut green = RationalMatrix::zeros(n, n);
    for (i, &x) in others.iter().enumerate() {
        for (j, &y) in others.iter().enumerate() {
            green[(x, y)] = potentials[i][j].clone();
        }
    }
    let mut matrix = RationalMatrix::zeros(n, n);
    for x in 0..n {
        for y in (x + 1)..n {
            let r = &green[(x, x)] + &green[(y, y)] - &green[(x, y)] - &green[(y, x)];
            matrix[(x, y)] = r.clone();
            matrix[(y, x)] = r;
        }
    }
    Ok(ResistanceMatrix { matrix })
}

/// Resistance between cycle positions `i` and `j`: `k (l - k) / l`.
pub fn cycle_resistance(dec: &UnicyclicDecomposition, i: usize, j: usize) -> Rational {
    let l = dec.l();
    let k = dec.cycle_gap(i, j);
    Rational::frac((k * (l - k)) as i64, l as i64)
}

/// Unicyclic route for a single pair.
pub fn resistance_unicyclic(dec: &UnicyclicDecomposition, x: usize, y: usize) -> Rational {
    let (i, j) = (dec.branch_index(x), dec.branch_index(y));
    if i == j {
        Rational::from(dec.distance(x, y))
    } else {
        Rational::from(dec.branch_distance(x) + dec.branch_distance(y))
            + cycle_resistance(dec, i, j)
    }
}

pub fn unicyclic_resistance_matrix(dec: &UnicyclicDecomposition) -> ResistanceMatrix {
    let n = dec.n();
    let mut matrix = RationalMatrix::zeros(n, n);
    for x in 0..n {
        for y in (x + 1)..n {
            let r = resistance_unicyclic(dec, x, y);
            matrix[(x, y)] = r.clone();
            matrix[(y, x)] = r;
        }
    }
    ResistanceMatrix { matrix }
}

pub fn resistance_centrality(g: &Graph, x: usize) -> Result<Rational> {
    g.check_vertex(x)?;
    Ok(resistance_matrix(g)?.centrality(x))
}

pub fn weighted_resistance_centrality(g: &Graph, x: usize) -> Result<Rational> {
    g.check_vertex(x)?;
    Ok(resistance_matrix(g)?.weighted_centrality(g, x))
}

pub fn kirchhoff_index(g: &Graph) -> Result<Rational> {
    Ok(resistance_matrix(g)?.kirchhoff_index())
}

pub fn additive_degree_kirchhoff(g: &Graph) -> Result<Rational> {
    Ok(resistance_matrix(g)?.additive_degree_kirchhoff(g))
}

pub fn multiplicative_degree_kirchhoff(g: &Graph) -> Result<Rational> {
    Ok(resistance_matrix(g)?.multiplicative_degree_kirchhoff(g))
}

/// Kirchhoff index assembled from branch Wiener indices, branch
/// transmissions and cycle resistances between branch roots.
pub fn kf_branch_decomposition(dec: &UnicyclicDecomposition) -> Rational {
    let l = dec.l();
    let mut total: Rational = (0..l).map(|i| Rational::from(dec.branch_wiener(i))).sum();
    for i in 0..l {
        for j in (i + 1)..l {
            total += Rational::from(
                dec.branch_size(j) * dec.branch_transmission(i)
                    + dec.branch_size(i) * dec.branch_transmission(j),
            );
        }
    }
    let mut cross = Rational::zero();
    for i in 0..l {
        for j in 0..l {
            cross += Rational::from(dec.branch_size(i) * dec.branch_size(j))
                * cycle_resistance(dec, i, j);
        }
    }
    total + cross * Rational::frac(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, cycle_with_pendants, cycle_with_tail, path, star};
    use crate::graph::{distance_matrix, transmission, unicyclic_decompose, wiener_index};

    #[test]
    fn trees_have_resistance_equal_to_distance() {
        for g in [path(6).unwrap(), star(5).unwrap()] {
            let r = resistance_matrix(&g).unwrap();
            let d = distance_matrix(&g);
            for x in 0..g.n() {
                for y in 0..g.n() {
                    assert_eq!(r.get(x, y), &Rational::from(d.get(x, y)));
                }
                assert_eq!(r.centrality(x), Rational::from(transmission(&g, x)));
            }
            assert_eq!(r.kirchhoff_index(), Rational::from(wiener_index(&g)));
        }
    }

    #[test]
    fn small_cycles() {
        let c3 = resistance_matrix(&cycle(3).unwrap()).unwrap();
        assert_eq!(c3.get(0, 1), &Rational::frac(2, 3));
        assert_eq!(c3.centrality(0), Rational::frac(4, 3));
        assert_eq!(c3.kirchhoff_index(), Rational::from(2i64));
        let c4 = resistance_matrix(&cycle(4).unwrap()).unwrap();
        assert_eq!(c4.get(0, 2), &Rational::one());
        assert_eq!(c4.kirchhoff_index(), Rational::from(5i64));
        let c5 = resistance_matrix(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.centrality(3), Rational::from(4i64));
    }

    #[test]
    fn unicyclic_route_examples() {
        let s = unicyclic_decompose(&cycle_with_pendants(6, 4).unwrap()).unwrap();
        assert_eq!(resistance_unicyclic(&s, 4, 5), Rational::from(2i64));
        let p = unicyclic_decompose(&cycle_with_tail(5, 3).unwrap()).unwrap();
        assert_eq!(resistance_unicyclic(&p, 4, 1), Rational::frac(8, 3));
        for n in 3..=10 {
            let dec = unicyclic_decompose(&cycle(n).unwrap()).unwrap();
            let want = Rational::frac(n as i64 - 1, n as i64);
            assert_eq!(resistance_unicyclic(&dec, 0, 1), want);
            assert_eq!(
                resistance_matrix(&cycle(n).unwrap()).unwrap().get(0, 1),
                &want
            );
        }
    }

    #[test]
    fn ground_choice_does_not_matter() {
        let g = cycle_with_tail(7, 4).unwrap();
        assert_eq!(
            resistance_matrix(&g).unwrap(),
            resistance_matrix_grounded(&g, 6).unwrap()
        );
    }

    #[test]
    fn weighted_centrality_on_cycle_vertices() {
        let g = cycle_with_pendants(6, 4).unwrap();
        let r = resistance_matrix(&g).unwrap();
        let two = Rational::from(2i64);
        // hub on the cycle: R^w = 2R - (n - l)
        assert_eq!(
            r.weighted_centrality(&g, 0),
            &two * r.centrality(0) - two.clone()
        );
        // pendant at depth one: R^w = 2R + 2 - (n - l)
        assert_eq!(r.weighted_centrality(&g, 5), &two * r.centrality(5));
        let c = cycle(7).unwrap();
        let rc = resistance_matrix(&c).unwrap();
        assert_eq!(rc.weighted_centrality(&c, 2), &two * rc.centrality(2));
    }

    #[test]
    fn degree_kirchhoff_indices() {
        let c3 = cycle(3).unwrap();
        assert_eq!(
            additive_degree_kirchhoff(&c3).unwrap(),
            Rational::from(8i64)
        );
        let c4 = cycle(4).unwrap();
        assert_eq!(
            multiplicative_degree_kirchhoff(&c4).unwrap(),
            Rational::from(20i64)
        );
        for n in 3..9 {
            let g = cycle(n).unwrap();
            let kf = kirchhoff_index(&g).unwrap();
            let four = Rational::from(4i64);
            assert_eq!(additive_degree_kirchhoff(&g).unwrap(), &four * &kf);
            assert_eq!(multiplicative_degree_kirchhoff(&g).unwrap(), &four * &kf);
        }
    }

    #[test]
    fn branch_decomposition_matches() {
        for g in [
            cycle(6).unwrap(),
            cycle_with_pendants(6, 4).unwrap(),
            cycle_with_tail(6, 3).unwrap(),
        ] {
            let dec = unicyclic_decompose(&g).unwrap();
            assert_eq!(kf_branch_decomposition(&dec), kirchhoff_index(&g).unwrap());
        }
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::build(4, &[(0, 1), (2, 3)], false).unwrap();
        assert_eq!(resistance_matrix(&g), Err(Error::Disconnected));
    }
}
