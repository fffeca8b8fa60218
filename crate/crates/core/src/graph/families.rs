//! Named graph families.
//!
//! `cycle_with_pendants(n, l)` is the cycle `C_l` on vertices `0..l` with
//! `n - l` pendant vertices `l..n` all attached to vertex 0 (`S_n^l`).
//! `cycle_with_tail(n, l)` is `C_l` with the path `0 - l - (l+1) - ... - (n-1)`
//! hanging from vertex 0 (`P_n^l`). Both coincide with `C_n` when `l = n`.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

fn check_cycle_params(n: usize, l: usize) -> Result<()> {
    if l < 3 || l > n {
        return Err(Error::InvalidParameter(format!(
            "cycle length must satisfy 3 <= l <= n, got n={n}, l={l}"
        )));
    }
    Ok(())
}

fn cycle_edges(l: usize) -> Vec<(usize, usize)> {
    (0..l).map(|i| (i, (i + 1) % l)).collect()
}

pub fn cycle(n: usize) -> Result<Graph> {
    check_cycle_params(n, n)?;
    Graph::new(n, &cycle_edges(n))
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// Star with center 0.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

/// `S_n^l`: `n - l` pendant vertices at cycle vertex 0.
pub fn cycle_with_pendants(n: usize, l: usize) -> Result<Graph> {
    check_cycle_params(n, l)?;
    let mut edges = cycle_edges(l);
    edges.extend((l..n).map(|v| (0, v)));
    Graph::new(n, &edges)
}

/// `P_n^l`: a path of length `n - l` hanging from cycle vertex 0, ending at
/// vertex `n - 1`.
pub fn cycle_with_tail(n: usize, l: usize) -> Result<Graph> {
    check_cycle_params(n, l)?;
    let mut edges = cycle_edges(l);
    edges.extend((l..n).map(|v| (if v == l { 0 } else { v - 1 }, v)));
    Graph::new(n, &edges)
}

/// Family spec as accepted on the command line: `C:n`, `S:n,l`, `P:n,l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Pendants { n: usize, l: usize },
    Tail { n: usize, l: usize },
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Cycle(n) => cycle(n),
            Family::Pendants { n, l } => cycle_with_pendants(n, l),
            Family::Tail { n, l } => cycle_with_tail(n, l),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad =
            || Error::InvalidParameter(format!("bad family spec {s:?}; use C:n, S:n,l or P:n,l"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind.trim(), nums.as_slice()) {
            ("C", [n]) => Ok(Family::Cycle(*n)),
            ("S", [n, l]) => Ok(Family::Pendants { n: *n, l: *l }),
            ("P", [n, l]) => Ok(Family::Tail { n: *n, l: *l }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "C:{n}"),
            Family::Pendants { n, l } => write!(f, "S:{n},{l}"),
            Family::Tail { n, l } => write!(f, "P:{n},{l}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_certificate, eccentricity};

    #[test]
    fn pendant_family_shapes() {
        let g = cycle_with_pendants(6, 4).unwrap();
        let mut deg = g.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(deg, vec![4, 2, 2, 2, 1, 1]);
        assert!(g.is_unicyclic());
        let h1 = cycle_with_pendants(4, 3).unwrap();
        assert_eq!(h1.m(), 4);
        assert_eq!(h1.degree(0), 3);
    }

    #[test]
    fn full_cycle_coincides() {
        for n in 3..9 {
            let c = canonical_certificate(&cycle(n).unwrap()).unwrap();
            assert_eq!(
                canonical_certificate(&cycle_with_pendants(n, n).unwrap()).unwrap(),
                c
            );
            assert_eq!(
                canonical_certificate(&cycle_with_tail(n, n).unwrap()).unwrap(),
                c
            );
        }
    }

    #[test]
    fn tail_family_shapes() {
        let g = cycle_with_tail(5, 3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)]);
        assert_eq!(eccentricity(&cycle_with_tail(6, 3).unwrap(), 5), 4);
    }

    #[test]
    fn invalid_parameters() {
        assert!(cycle_with_pendants(5, 2).is_err());
        assert!(cycle_with_tail(4, 5).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn family_specs_parse() {
        assert_eq!("C:4".parse::<Family>().unwrap(), Family::Cycle(4));
        assert_eq!(
            "S:5,3".parse::<Family>().unwrap(),
            Family::Pendants { n: 5, l: 3 }
        );
        assert_eq!(
            "P:6,4".parse::<Family>().unwrap(),
            Family::Tail { n: 6, l: 4 }
        );
        assert!("Q:4".parse::<Family>().is_err());
        assert!("S:5".parse::<Family>().is_err());
        assert_eq!(Family::Tail { n: 6, l: 4 }.to_string(), "P:6,4");
    }
}
