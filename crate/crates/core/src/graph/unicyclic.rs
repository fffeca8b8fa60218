use std::collections::VecDeque;

use super::{distance_matrix, DistanceMatrix, Graph};
use crate::error::{Error, Result};

/// A unicyclic graph split into its cycle `v_1 ... v_l` and the branch trees
/// `T_1 ... T_l` rooted at the cycle vertices.
///
/// Cycle order is normalized: it starts at the smallest-label cycle vertex
/// and proceeds toward that vertex's smaller-label cycle neighbor.
#[derive(Clone, Debug)]
pub struct UnicyclicDecomposition {
    graph: Graph,
    distances: DistanceMatrix,
    cycle: Vec<usize>,
    cycle_position: Vec<Option<usize>>,
    branch_index: Vec<usize>,
    branch_distance: Vec<usize>,
    branch_size: Vec<usize>,
    branch_transmission: Vec<usize>,
    branch_wiener: Vec<usize>,
}

/// Vertices left after repeatedly stripping degree-one vertices.
fn cycle_core(g: &Graph) -> Vec<bool> {
    let mut deg = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    alive
}

pub fn unicyclic_decompose(g: &Graph) -> Result<UnicyclicDecomposition> {
    UnicyclicDecomposition::new(g)
}

impl UnicyclicDecomposition {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_unicyclic() {
            return Err(Error::NotUnicyclic { n: g.n(), m: g.m() });
        }
        let n = g.n();
        let on_cycle = cycle_core(g);

        let start = (0..n)
            .find(|&v| on_cycle[v])
            .expect("unicyclic graph has a cycle");
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = *g
            .neighbors(start)
            .iter()
            .find(|&&w| on_cycle[w])
            .expect("cycle vertex has cycle neighbors");
        while cur != start {
            cycle.push(cur);
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| on_cycle[w] && w != prev)
                .expect("cycle continues");
            prev = cur;
            cur = next;
        }
        if cycle.iter().filter(|&&v| on_cycle[v]).count() != on_cycle.iter().filter(|&&b| b).count()
        {
            return Err(Error::Internal("cycle core is not a single cycle".into()));
        }

        let mut cycle_position = vec![None; n];
        for (i, &v) in cycle.iter().enumerate() {
            cycle_position[v] = Some(i);
        }

        let mut branch_index = vec![usize::MAX; n];
        let mut branch_distance = vec![0; n];
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); cycle.len()];
        for (i, &root) in cycle.iter().enumerate() {
            branch_index[root] = i;
            members[i].push(root);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if !on_cycle[w] && branch_index[w] == usize::MAX {
                        branch_index[w] = i;
                        branch_distance[w] = branch_distance[u] + 1;
                        members[i].push(w);
                        queue.push_back(w);
                    }
                }
            }
        }

        let distances = distance_matrix(g);
        let branch_size: Vec<usize> = members.iter().map(Vec::len).collect();
        let branch_transmission: Vec<usize> = members
            .iter()
            .map(|m| m.iter().map(|&x| branch_distance[x]).sum())
            .collect();
        // distances inside a branch never leave it: the root is a cut vertex
        let branch_wiener: Vec<usize> = members
            .iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .flat_map(|(a, &x)| m[a + 1..].iter().map(move |&y| (x, y)))
                    .map(|(x, y)| distances.get(x, y))
                    .sum()
            })
            .collect();

        Ok(UnicyclicDecomposition {
            graph: g.clone(),
            distances,
            cycle,
            cycle_position,
            branch_index,
            branch_distance,
            branch_size,
            branch_transmission,
            branch_wiener,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Cycle length `l`.
    pub fn l(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.distances.get(x, y)
    }

    pub fn is_on_cycle(&self, x: usize) -> bool {
        self.cycle_position[x].is_some()
    }

    /// Index `k` of the branch tree `T_k` containing `x`.
    pub fn branch_index(&self, x: usize) -> usize {
        self.branch_index[x]
    }

    /// The cycle vertex `v_k` rooting the branch that contains `x`.
    pub fn branch_root(&self, x: usize) -> usize {
        self.cycle[self.branch_index[x]]
    }

    /// `d(x, v_k)` for the root `v_k` of the branch containing `x`.
    pub fn branch_distance(&self, x: usize) -> usize {
        self.branch_distance[x]
    }

    /// `n_i = |V(T_i)|`.
    pub fn branch_size(&self, i: usize) -> usize {
        self.branch_size[i]
    }

    pub fn branch_sizes(&self) -> &[usize] {
        &self.branch_size
    }

    /// `D_{T_i}(v_i)`.
    pub fn branch_transmission(&self, i: usize) -> usize {
        self.branch_transmission[i]
    }

    pub fn branch_transmissions(&self) -> &[usize] {
        &self.branch_transmission
    }

    /// `sum_i D_{T_i}(v_i)`.
    pub fn total_branch_transmission(&self) -> usize {
        self.branch_transmission.iter().sum()
    }

    /// `W(T_i)`.
    pub fn branch_wiener(&self, i: usize) -> usize {
        self.branch_wiener[i]
    }

    /// Number of steps between cycle positions `i` and `j` along the cycle.
    pub fn cycle_gap(&self, i: usize, j: usize) -> usize {
        let l = self.l();
        let k = i.abs_diff(j);
        k.min(l - k)
    }

    /// Largest branch depth below `v_i`, i.e. `max_{x in T_i} d(x, v_i)`.
    pub fn branch_depth(&self, i: usize) -> usize {
        (0..self.n())
            .filter(|&x| self.branch_index[x] == i)
            .map(|x| self.branch_distance[x])
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, cycle_with_pendants, cycle_with_tail, path};

    #[test]
    fn plain_cycle_has_trivial_branches() {
        for n in 3..10 {
            let dec = unicyclic_decompose(&cycle(n).unwrap()).unwrap();
            assert_eq!(dec.l(), n);
            assert!(dec.branch_sizes().iter().all(|&s| s == 1));
            assert!(dec.branch_transmissions().iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn pendant_family_branch() {
        let dec = unicyclic_decompose(&cycle_with_pendants(6, 4).unwrap()).unwrap();
        assert_eq!(dec.l(), 4);
        assert_eq!(dec.cycle(), &[0, 1, 2, 3]);
        assert_eq!(dec.branch_sizes(), &[3, 1, 1, 1]);
        assert_eq!(dec.branch_transmissions(), &[2, 0, 0, 0]);
        assert_eq!(dec.branch_root(5), 0);
        assert_eq!(dec.branch_distance(5), 1);
    }

    #[test]
    fn trees_are_rejected() {
        assert_eq!(
            unicyclic_decompose(&path(5).unwrap()).unwrap_err(),
            Error::NotUnicyclic { n: 5, m: 4 }
        );
    }

    #[test]
    fn family_closed_forms() {
        for n in 3..12 {
            for l in 3..=n {
                let s = unicyclic_decompose(&cycle_with_pendants(n, l).unwrap()).unwrap();
                let p = unicyclic_decompose(&cycle_with_tail(n, l).unwrap()).unwrap();
                assert_eq!((s.l(), p.l()), (l, l));
                assert_eq!(s.total_branch_transmission(), n - l);
                assert_eq!(p.total_branch_transmission(), (n - l) * (n - l + 1) / 2);
                assert_eq!(s.branch_size(0), n - l + 1);
                assert_eq!(p.branch_size(0), n - l + 1);
            }
        }
    }

    #[test]
    fn orientation_is_normalized() {
        // cycle 5-3-1-4-2-5 plus pendant 0 on 4
        let g = Graph::new(6, &[(5, 3), (3, 1), (1, 4), (4, 2), (2, 5), (0, 4)]).unwrap();
        let dec = unicyclic_decompose(&g).unwrap();
        assert_eq!(dec.cycle(), &[1, 3, 5, 2, 4]);
        assert_eq!(dec.branch_root(0), 4);
        assert_eq!(dec.branch_sizes().iter().sum::<usize>(), 6);
    }
}
