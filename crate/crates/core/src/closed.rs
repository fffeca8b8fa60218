//! Closed-form invariants of a unicyclic graph `U(C_l; T_1, ..., T_l)`.
//!
//! With `n` vertices, cycle length `l`, `x` in branch `T_k` and
//! `S = sum_i D_{T_i}(v_i)`:
//!
//! ```text
//! R^w(x) = 2 R(x) + 2 d(x, v_k) - (n - l)
//! H_xy   = n r(x, y) + R(y) - R(x) + d(y, v_j) - d(x, v_i)
//! CC(x)  = 2 Kf + S - n d(x, v_k)
//! RC(x)  = 2 n R(x) - 2 Kf - S + n d(x, v_k)
//! Kf+    = 4 Kf + 2 S - n (n - l)
//! Kf*    = 4 Kf + 4 S - (2n + 1)(n - l)
//! ```
//!
//! Resistances come from the unicyclic route, never from a Laplacian solve.

use crate::graph::UnicyclicDecomposition;
use crate::numeric::Rational;
use crate::resistance::{unicyclic_resistance_matrix, ResistanceMatrix};

#[derive(Clone, Debug)]
pub struct ClosedForms<'a> {
    dec: &'a UnicyclicDecomposition,
    resistance: ResistanceMatrix,
    centrality: Vec<Rational>,
    kirchhoff: Rational,
}

impl<'a> ClosedForms<'a> {
    pub fn new(dec: &'a UnicyclicDecomposition) -> Self {
        let resistance = unicyclic_resistance_matrix(dec);
        let centrality: Vec<Rational> = (0..dec.n()).map(|x| resistance.centrality(x)).collect();
        let kirchhoff = resistance.kirchhoff_index();
        ClosedForms {
            dec,
            resistance,
            centrality,
            kirchhoff,
        }
    }

    pub fn decomposition(&self) -> &UnicyclicDecomposition {
        self.dec
    }

    pub fn resistance(&self) -> &ResistanceMatrix {
        &self.resistance
    }

    pub fn centrality(&self, x: usize) -> &Rational {
        &self.centrality[x]
    }

    pub fn kirchhoff_index(&self) -> &Rational {
        &self.kirchhoff
    }

    fn n(&self) -> Rational {
        Rational::from(self.dec.n())
    }

    fn pendant_count(&self) -> Rational {
        Rational::from(self.dec.n() - self.dec.l())
    }

    fn branch_sum(&self) -> Rational {
        Rational::from(self.dec.total_branch_transmission())
    }

    fn depth(&self, x: usize) -> Rational {
        Rational::from(self.dec.branch_distance(x))
    }

    pub fn weighted_centrality(&self, x: usize) -> Rational {
        Rational::from(2i64) * &self.centrality[x] + Rational::from(2i64) * self.depth(x)
            - self.pendant_count()
    }

    pub fn hitting_time(&self, x: usize, y: usize) -> Rational {
        self.n() * self.resistance.get(x, y) + &self.centrality[y] - &self.centrality[x]
            + self.depth(y)
            - self.depth(x)
    }

    pub fn cover_cost(&self, x: usize) -> Rational {
        Rational::from(2i64) * &self.kirchhoff + self.branch_sum() - self.n() * self.depth(x)
    }

    pub fn reverse_cover_cost(&self, x: usize) -> Rational {
        Rational::from(2i64) * self.n() * &self.centrality[x]
            - Rational::from(2i64) * &self.kirchhoff
            - self.branch_sum()
            + self.n() * self.depth(x)
    }

    pub fn additive_degree_kirchhoff(&self) -> Rational {
        Rational::from(4i64) * &self.kirchhoff + Rational::from(2i64) * self.branch_sum()
            - self.n() * self.pendant_count()
    }

    pub fn multiplicative_degree_kirchhoff(&self) -> Rational {
        let n = self.dec.n();
        Rational::from(4i64) * &self.kirchhoff + Rational::from(4i64) * self.branch_sum()
            - Rational::from(2 * n + 1) * self.pendant_count()
    }
}
