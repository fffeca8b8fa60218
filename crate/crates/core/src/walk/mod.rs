//! Hitting times, cover cost and reverse cover cost.
//!
//! The first-step linear system is the ground truth here. The resistance
//! formula `H_xy = m r(x, y) + (R^w(y) - R^w(x)) / 2` and the unicyclic
//! formula in [`crate::closed`] are checked against it.

pub mod simulate;

pub use simulate::{
    simulate_hitting_time, simulate_hitting_time_with_cap, WalkStats, DEFAULT_STEP_CAP,
};

use rayon::prelude::*;

use crate::closed::ClosedForms;
use crate::error::{Error, Result};
use crate::graph::{Graph, UnicyclicDecomposition};
use crate::numeric::{solve_linear_system, Rational, RationalMatrix};
use crate::resistance::ResistanceMatrix;

/// Expected hitting times `H_xy` for every vertex `x` and a fixed `target`,
/// from `H_target = 0` and `H_x = 1 + (1 / d(x)) sum_{z ~ x} H_z`.
pub fn hitting_times_exact(g: &Graph, target: usize) -> Result<Vec<Rational>> {
    g.check_vertex(target)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let others: Vec<usize> = (0..n).filter(|&v| v != target).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in others.iter().enumerate() {
        index[v] = i;
    }
    // row for x, scaled by d(x): d(x) H_x - sum_{z ~ x, z != target} H_z = d(x)
    let mut a = RationalMatrix::zeros(n - 1, n - 1);
    let mut b = Vec::with_capacity(n - 1);
    for (i, &x) in others.iter().enumerate() {
        a[(i, i)] = Rational::from(g.degree(x));
        for &z in g.neighbors(x) {
            if z != target {
                a[(i, index[z])] = Rational::from(-1i64);
            }
        }
        b.push(Rational::from(g.degree(x)));
    }
    let h = solve_linear_system(&a, &b).map_err(|e| match e {
        Error::SingularMatrix => {
            Error::Internal("hitting-time system singular on a connected graph".into())
        }
        other => other,
    })?;
    let mut out = vec![Rational::zero(); n];
    for (i, &x) in others.iter().enumerate() {
        out[x] = h[i].clone();
    }
    Ok(out)
}

/// `H_xy` for all ordered pairs; diagonal is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingTimeMatrix {
    matrix: RationalMatrix,
}

impl HittingTimeMatrix {
    /// One linear solve per target vertex.
    pub fn compute(g: &Graph) -> Result<Self> {
        let n = g.n();
        let columns: Vec<Vec<Rational>> = (0..n)
            .into_par_iter()
            .map(|y| hitting_times_exact(g, y))
            .collect::<Result<_>>()?;
        let mut matrix = RationalMatrix::zeros(n, n);
        for (y, col) in columns.into_iter().enumerate() {
            for (x, h) in col.into_iter().enumerate() {
                matrix[(x, y)] = h;
            }
        }
        Ok(HittingTimeMatrix { matrix })
    }

    /// All pairs through the resistance formula.
    pub fn from_resistance(g: &Graph, r: &ResistanceMatrix) -> Self {
        let n = g.n();
        let weighted: Vec<Rational> = (0..n).map(|x| r.weighted_centrality(g, x)).collect();
        let m = Rational::from(g.m());
        let half = Rational::frac(1, 2);
        let mut matrix = RationalMatrix::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    matrix[(x, y)] = &m * r.get(x, y) + (&weighted[y] - &weighted[x]) * &half;
                }
            }
        }
        HittingTimeMatrix { matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, x: usize, y: usize) -> &Rational {
        &self.matrix[(x, y)]
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// `CC(x) = sum_y H_xy`.
    pub fn cover_cost(&self, x: usize) -> Rational {
        self.matrix.row(x).iter().sum()
    }

    /// `RC(x) = sum_y H_yx`.
    pub fn reverse_cover_cost(&self, x: usize) -> Rational {
        (0..self.n()).map(|y| self.get(y, x)).sum()
    }
}

/// `H_xy = m r(x, y) + (R^w(y) - R^w(x)) / 2`.
pub fn hitting_time_formula_general(
    g: &Graph,
    r: &ResistanceMatrix,
    x: usize,
    y: usize,
) -> Rational {
    Rational::from(g.m()) * r.get(x, y)
        + (r.weighted_centrality(g, y) - r.weighted_centrality(g, x)) * Rational::frac(1, 2)
}

/// `H_xy = n r(x, y) + R(y) - R(x) + d(y, v_j) - d(x, v_i)`.
pub fn hitting_time_formula_unicyclic(
    dec: &UnicyclicDecomposition,
    x: usize,
    y: usize,
) -> Rational {
    ClosedForms::new(dec).hitting_time(x, y)
}

pub fn cover_cost(g: &Graph, x: usize) -> Result<Rational> {
    g.check_vertex(x)?;
    Ok(HittingTimeMatrix::compute(g)?.cover_cost(x))
}

pub fn reverse_cover_cost(g: &Graph, x: usize) -> Result<Rational> {
    g.check_vertex(x)?;
    Ok(HittingTimeMatrix::compute(g)?.reverse_cover_cost(x))
}

/// Cover cost through the unicyclic closed form.
pub fn cover_cost_closed(dec: &UnicyclicDecomposition, x: usize) -> Rational {
    ClosedForms::new(dec).cover_cost(x)
}

/// Reverse cover cost through the unicyclic closed form.
pub fn reverse_cover_cost_closed(dec: &UnicyclicDecomposition, x: usize) -> Rational {
    ClosedForms::new(dec).reverse_cover_cost(x)
}
