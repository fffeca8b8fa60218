use super::Graph;

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    pub fn transmission(&self, x: usize) -> usize {
        self.row(x).iter().sum()
    }

    pub fn eccentricity(&self, x: usize) -> usize {
        self.row(x).iter().copied().max().unwrap_or(0)
    }

    pub fn wiener_index(&self) -> usize {
        (0..self.n).map(|x| self.transmission(x)).sum::<usize>() / 2
    }
}

fn distances_from(g: &Graph, x: usize) -> Vec<usize> {
    g.bfs(x)
        .into_iter()
        .map(|d| d.expect("graph is connected"))
        .collect()
}

/// Breadth-first search from every vertex.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for x in 0..n {
        d.extend(distances_from(g, x));
    }
    DistanceMatrix { n, d }
}

/// `D(x)`, the sum of distances from `x`.
pub fn transmission(g: &Graph, x: usize) -> usize {
    distances_from(g, x).iter().sum()
}

/// `D^w(x)`, distances from `x` weighted by the far endpoint's degree.
pub fn weighted_transmission(g: &Graph, x: usize) -> usize {
    distances_from(g, x)
        .iter()
        .enumerate()
        .map(|(y, d)| g.degree(y) * d)
        .sum()
}

pub fn wiener_index(g: &Graph) -> usize {
    distance_matrix(g).wiener_index()
}

pub fn eccentricity(g: &Graph, x: usize) -> usize {
    distances_from(g, x).into_iter().max().unwrap_or(0)
}
