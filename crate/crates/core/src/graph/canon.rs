//! Canonical certificates for small graphs.
//!
//! Vertices are first partitioned by (color, degree, distance profile), the
//! partition is refined to an equitable one, and the remaining ties are
//! broken by individualization with backtracking. The certificate is the
//! lexicographically smallest upper-triangle adjacency code over all leaves
//! of the search tree. Automorphisms discovered at equal leaves prune
//! sibling branches that lie in the same orbit.

use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CANON_LIMIT: usize = 12;
/// Upper-triangle codes are packed into a `u128`.
pub const MAX_CANON_LIMIT: usize = 16;

/// Byte string identifying a graph (optionally with colored vertices) up to
/// isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({self})")
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    canonical_certificate_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_certificate_with_limit(g: &Graph, limit: usize) -> Result<Certificate> {
    certify(g, &vec![0; g.n()], limit)
}

/// Certificate of `g` with vertex `x` distinguished: two (graph, vertex)
/// pairs share it iff some isomorphism maps one vertex onto the other.
pub fn marked_certificate(g: &Graph, x: usize) -> Result<Certificate> {
    g.check_vertex(x)?;
    let mut colors = vec![0; g.n()];
    colors[x] = 1;
    certify(g, &colors, DEFAULT_CANON_LIMIT)
}

fn certify(g: &Graph, colors: &[u8], limit: usize) -> Result<Certificate> {
    if limit > MAX_CANON_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "certificate limit {limit} exceeds the supported maximum {MAX_CANON_LIMIT}"
        )));
    }
    let n = g.n();
    if n > limit {
        return Err(Error::SizeLimitExceeded { n, limit });
    }
    let mut search = Search {
        n,
        adj: g.adjacency_masks(),
        best: None,
        automorphisms: Vec::new(),
    };
    let start = refine(&search.adj, initial_partition(g, colors));
    search.descend(start, &mut Vec::new());
    let (code, order) = search.best.expect("search visits at least one leaf");

    let mut bytes = Vec::with_capacity(1 + n + 16);
    bytes.push(n as u8);
    bytes.extend(order.iter().map(|&v| colors[v]));
    bytes.extend(code.to_be_bytes());
    Ok(Certificate(bytes))
}

/// Ranks vertices by an isomorphism-invariant key.
fn initial_partition(g: &Graph, colors: &[u8]) -> Vec<usize> {
    let n = g.n();
    let keys: Vec<(u8, usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut profile = vec![0usize; n + 1];
            for d in g.bfs(v) {
                profile[d.unwrap_or(n)] += 1;
            }
            (colors[v], g.degree(v), profile)
        })
        .collect();
    rank(&keys)
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn cell_count(part: &[usize]) -> usize {
    part.iter().max().map_or(0, |&c| c + 1)
}

/// Equitable refinement: split cells by neighbor counts into every cell until
/// stable. Cell order stays compatible with the input order.
fn refine(adj: &[u64], mut part: Vec<usize>) -> Vec<usize> {
    let n = part.len();
    loop {
        let k = cell_count(&part);
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; k];
                let mut bits = adj[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    counts[part[w]] += 1;
                    bits &= bits - 1;
                }
                (part[v], counts)
            })
            .collect();
        let next = rank(&keys);
        if cell_count(&next) == k {
            return next;
        }
        part = next;
    }
}

fn individualize(part: &[usize], v: usize) -> Vec<usize> {
    let c = part[v];
    part.iter()
        .enumerate()
        .map(|(u, &p)| {
            if p > c || (p == c && u != v) {
                p + 1
            } else {
                p
            }
        })
        .collect()
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    /// Best code so far with its vertex order (position -> vertex).
    best: Option<(u128, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                code <<= 1;
                if self.adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1;
                }
            }
        }
        code
    }

    fn descend(&mut self, part: Vec<usize>, path: &mut Vec<usize>) {
        let n = self.n;
        let k = cell_count(&part);
        if k == n {
            let mut order = vec![0; n];
            for (v, &p) in part.iter().enumerate() {
                order[p] = v;
            }
            let code = self.code(&order);
            match &self.best {
                Some((best, best_order)) if code == *best => {
                    // v -> best_order[position of v]
                    let gamma = (0..n).map(|v| best_order[part[v]]).collect();
                    self.automorphisms.push(gamma);
                }
                Some((best, _)) if code > *best => {}
                _ => self.best = Some((code, order)),
            }
            return;
        }

        let mut sizes = vec![0usize; k];
        for &p in &part {
            sizes[p] += 1;
        }
        let target = (0..k)
            .find(|&c| sizes[c] > 1)
            .expect("non-discrete partition");
        let cell: Vec<usize> = (0..n).filter(|&v| part[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() && self.same_orbit(path, v, &tried) {
                continue;
            }
            tried.push(v);
            path.push(v);
            let next = refine(&self.adj, individualize(&part, v));
            self.descend(next, path);
            path.pop();
        }
    }

    /// Whether `v` shares an orbit with a tried vertex under the automorphisms
    /// found so far that fix every vertex of `path`.
    fn same_orbit(&self, path: &[usize], v: usize, tried: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}
