//! Exhaustive generation of trees and unicyclic graphs up to isomorphism.
//!
//! Labeled trees come from Prüfer sequences. Each new isomorphism class of
//! tree is extended by every non-edge, and the resulting unicyclic graphs are
//! deduplicated by canonical certificate as they stream out.

use std::collections::{HashSet, VecDeque};

use super::{canonical_certificate, Certificate, Graph, DEFAULT_CANON_LIMIT};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 9;

/// Largest order accepted by the enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimit(pub usize);

impl Default for EnumerationLimit {
    fn default() -> Self {
        EnumerationLimit(DEFAULT_ENUMERATION_LIMIT)
    }
}

impl EnumerationLimit {
    /// Reads `WALKGAUGE_MAX_N`, falling back to the default. Values beyond
    /// the certificate limit are clamped.
    pub fn from_env() -> Self {
        std::env::var("WALKGAUGE_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| EnumerationLimit(v.min(DEFAULT_CANON_LIMIT)))
            .unwrap_or_default()
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::SizeLimitExceeded { n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Decodes a Prüfer sequence over `0..n` into the edge list of its tree.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labeled tree on `n` vertices, in Prüfer-sequence order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let mut seq = if n >= 2 {
        Some(vec![0usize; n - 2])
    } else {
        None
    };
    let mut single = n == 1;
    std::iter::from_fn(move || {
        if single {
            single = false;
            return Some(Graph::new(1, &[]).expect("single vertex"));
        }
        let current = seq.take()?;
        let tree = Graph::new(n, &prufer_edges(&current, n)).expect("Prüfer trees are valid");
        // advance the odometer
        let mut next = current;
        let mut i = next.len();
        let mut done = true;
        while i > 0 {
            i -= 1;
            next[i] += 1;
            if next[i] < n {
                done = false;
                break;
            }
            next[i] = 0;
        }
        if !done {
            seq = Some(next);
        }
        Some(tree)
    })
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize, limit: EnumerationLimit) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    limit.check(n)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in labeled_trees(n) {
        if seen.insert(canonical_certificate(&t)?) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Streams one representative per isomorphism class of unicyclic graphs on
/// `n` vertices, using the default limit.
pub fn enumerate_unicyclic(n: usize) -> Result<UnicyclicStream> {
    enumerate_unicyclic_with_limit(n, EnumerationLimit::default())
}

pub fn enumerate_unicyclic_with_limit(
    n: usize,
    limit: EnumerationLimit,
) -> Result<UnicyclicStream> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "unicyclic graphs need at least 3 vertices, got {n}"
        )));
    }
    limit.check(n)?;
    Ok(UnicyclicStream {
        n,
        trees: Box::new(labeled_trees(n)),
        seen_trees: HashSet::new(),
        seen: HashSet::new(),
        pending: VecDeque::new(),
    })
}

pub struct UnicyclicStream {
    n: usize,
    trees: Box<dyn Iterator<Item = Graph> + Send>,
    seen_trees: HashSet<Certificate>,
    seen: HashSet<Certificate>,
    pending: VecDeque<Graph>,
}

impl Iterator for UnicyclicStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.pending.pop_front() {
                return Some(g);
            }
            let tree = self.trees.next()?;
            let cert = canonical_certificate(&tree).expect("n within certificate limit");
            if !self.seen_trees.insert(cert) {
                continue;
            }
            for u in 0..self.n {
                for v in (u + 1)..self.n {
                    if tree.has_edge(u, v) {
                        continue;
                    }
                    let g = tree
                        .with_edge(u, v)
                        .expect("non-edge keeps the graph simple");
                    let cert = canonical_certificate(&g).expect("n within certificate limit");
                    if self.seen.insert(cert) {
                        self.pending.push_back(g);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_counts_labeled_trees() {
        assert_eq!(labeled_trees(1).count(), 1);
        assert_eq!(labeled_trees(2).count(), 1);
        assert_eq!(labeled_trees(4).count(), 16);
        assert_eq!(labeled_trees(5).count(), 125);
        assert!(labeled_trees(5).all(|t| t.is_tree()));
    }

    #[test]
    fn unlabeled_tree_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|n| {
                enumerate_trees(n, EnumerationLimit::default())
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn small_unicyclic_counts() {
        assert_eq!(enumerate_unicyclic(3).unwrap().count(), 1);
        assert_eq!(enumerate_unicyclic(4).unwrap().count(), 2);
        assert_eq!(enumerate_unicyclic(5).unwrap().count(), 5);
        assert!(enumerate_unicyclic(5).unwrap().all(|g| g.is_unicyclic()));
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            enumerate_unicyclic(20),
            Err(Error::SizeLimitExceeded { n: 20, limit: 9 })
        ));
        assert!(enumerate_unicyclic(2).is_err());
        assert!(enumerate_trees(10, EnumerationLimit::default()).is_err());
    }
}
