//! Height-balanced CF-tree whose leaf entries are the COIN clusters.

use super::{CandidateIndex, Cluster, ClusterFeature};
use crate::distance::squared_euclidean;

#[derive(Debug, Clone)]
struct Node {
    cf: ClusterFeature,
    /// Cluster ids when `holds_clusters`, node indices otherwise.
    children: Vec<usize>,
    holds_clusters: bool,
    parent: Option<usize>,
}

impl Node {
    fn empty(dim: usize, holds_clusters: bool, parent: Option<usize>) -> Self {
        Self {
            cf: ClusterFeature::empty(dim),
            children: Vec::new(),
            holds_clusters,
            parent,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CfTree {
    branching: usize,
    dim: usize,
    nodes: Vec<Node>,
    root: usize,
    parent_of_cluster: Vec<usize>,
    created: usize,
}

impl CfTree {
    pub fn new(dim: usize, branching: usize) -> Self {
        assert!(branching >= 2, "branching factor must be at least 2");
        Self {
            branching,
            dim,
            nodes: vec![Node::empty(dim, true, None)],
            root: 0,
            parent_of_cluster: Vec::new(),
            created: 0,
        }
    }

    /// Two-level tree: one node per group under the root, each holding the
    /// listed clusters. Used to set up descent scenarios directly.
    pub fn with_groups(branching: usize, clusters: &[Cluster], groups: &[Vec<usize>]) -> Self {
        let dim = clusters.first().map_or(0, |c| c.cf.dim());
        let mut tree = Self {
            branching,
            dim,
            nodes: vec![Node::empty(dim, false, None)],
            root: 0,
            parent_of_cluster: vec![usize::MAX; clusters.len()],
            created: 0,
        };
        for group in groups {
            let idx = tree.nodes.len();
            let mut node = Node::empty(dim, true, Some(0));
            for &c in group {
                node.cf.merge_in(&clusters[c].cf);
                node.children.push(c);
                tree.parent_of_cluster[c] = idx;
            }
            tree.nodes[0].cf.merge_in(&node.cf);
            tree.nodes[0].children.push(idx);
            tree.nodes.push(node);
        }
        tree
    }

    pub fn branching(&self) -> usize {
        self.branching
    }

    pub fn is_empty(&self) -> bool {
        self.nodes[self.root].cf.count == 0
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Levels from the root down to the nodes holding clusters, inclusive.
    pub fn height(&self) -> usize {
        let mut h = 1;
        let mut node = self.root;
        while !self.nodes[node].holds_clusters {
            node = self.nodes[node].children[0];
            h += 1;
        }
        h
    }

    fn descend(&self, point: &[f64]) -> usize {
        let mut node = self.root;
        while !self.nodes[node].holds_clusters {
            let children = &self.nodes[node].children;
            let mut best = children[0];
            let mut best_d = f64::INFINITY;
            for &c in children {
                let d = self.nodes[c].cf.squared_distance_to_centroid(point);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            node = best;
        }
        node
    }

    /// The cluster reached by greedy nearest-child descent from the root.
    ///
    /// Descent compares against node summaries, so the result is not
    /// always the globally nearest cluster.
    pub fn candidate(&self, point: &[f64], clusters: &[Cluster]) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let leaf = self.descend(point);
        let mut best = None;
        let mut best_d = f64::INFINITY;
        for &c in &self.nodes[leaf].children {
            let d = squared_euclidean(point, &clusters[c].centroid);
            if d < best_d {
                best_d = d;
                best = Some(c);
            }
        }
        best
    }

    fn add_along_path(&mut self, mut node: usize, point: &[f64]) {
        loop {
            self.nodes[node].cf.add_point(point);
            match self.nodes[node].parent {
                Some(p) => node = p,
                None => break,
            }
        }
    }

    fn child_cf<'a>(&'a self, holds_clusters: bool, child: usize, clusters: &'a [Cluster]) -> &'a ClusterFeature {
        if holds_clusters {
            &clusters[child].cf
        } else {
            &self.nodes[child].cf
        }
    }

    fn set_parent(&mut self, holds_clusters: bool, child: usize, parent: usize) {
        if holds_clusters {
            self.parent_of_cluster[child] = parent;
        } else {
            self.nodes[child].parent = Some(parent);
        }
    }

    /// Splits an over-full node around its two most distant children.
    fn split(&mut self, node: usize, clusters: &[Cluster]) {
        let holds = self.nodes[node].holds_clusters;
        let children = std::mem::take(&mut self.nodes[node].children);
        let centroids: Vec<Vec<f64>> = children
            .iter()
            .map(|&c| self.child_cf(holds, c, clusters).centroid())
            .collect();

        let (mut seed_a, mut seed_b, mut far) = (0, 1, -1.0);
        for i in 0..centroids.len() {
            for j in i + 1..centroids.len() {
                let d = squared_euclidean(&centroids[i], &centroids[j]);
                if d > far {
                    (seed_a, seed_b, far) = (i, j, d);
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (k, &c) in children.iter().enumerate() {
            let to_left = k == seed_a
                || (k != seed_b
                    && squared_euclidean(&centroids[k], &centroids[seed_a])
                        <= squared_euclidean(&centroids[k], &centroids[seed_b]));
            if to_left {
                left.push(c);
            } else {
                right.push(c);
            }
        }

        let sum = |tree: &Self, members: &[usize]| {
            let mut cf = ClusterFeature::empty(tree.dim);
            for &c in members {
                cf.merge_in(tree.child_cf(holds, c, clusters));
            }
            cf
        };
        let left_cf = sum(self, &left);
        let right_cf = sum(self, &right);
        let parent = self.nodes[node].parent;
        let sibling = self.nodes.len();
        self.nodes.push(Node {
            cf: right_cf,
            children: right.clone(),
            holds_clusters: holds,
            parent,
        });
        for &c in &right {
            self.set_parent(holds, c, sibling);
        }
        self.nodes[node].cf = left_cf;
        self.nodes[node].children = left;

        match parent {
            None => {
                let root = self.nodes.len();
                let cf = self.nodes[node].cf.merge(&self.nodes[sibling].cf);
                self.nodes.push(Node {
                    cf,
                    children: vec![node, sibling],
                    holds_clusters: false,
                    parent: None,
                });
                self.nodes[node].parent = Some(root);
                self.nodes[sibling].parent = Some(root);
                self.root = root;
            }
            Some(p) => {
                let pos = self.nodes[p].children.iter().position(|&c| c == node).unwrap();
                self.nodes[p].children.insert(pos + 1, sibling);
                if self.nodes[p].children.len() > self.branching {
                    self.split(p, clusters);
                }
            }
        }
    }

    /// Checks CF additivity (within `rel_tol`), fan-out, balance and that
    /// every cluster sits under exactly one node.
    pub fn check_invariants(&self, clusters: &[Cluster], rel_tol: f64) -> Result<(), String> {
        let close = |a: f64, b: f64| (a - b).abs() <= rel_tol * (1.0 + a.abs().max(b.abs()));
        let mut seen = vec![0usize; clusters.len()];
        let mut leaf_depth = None;
        let mut stack = vec![(self.root, 1usize)];
        while let Some((n, depth)) = stack.pop() {
            let node = &self.nodes[n];
            if node.children.len() > self.branching {
                return Err(format!("node {n} has {} children", node.children.len()));
            }
            let mut sum = ClusterFeature::empty(self.dim);
            for &c in &node.children {
                sum.merge_in(self.child_cf(node.holds_clusters, c, clusters));
                if node.holds_clusters {
                    seen[c] += 1;
                    if self.parent_of_cluster[c] != n {
                        return Err(format!("cluster {c} has stale parent"));
                    }
                } else {
                    if self.nodes[c].parent != Some(n) {
                        return Err(format!("node {c} has stale parent"));
                    }
                    stack.push((c, depth + 1));
                }
            }
            if node.holds_clusters && *leaf_depth.get_or_insert(depth) != depth {
                return Err("tree is not height-balanced".into());
            }
            if sum.count != node.cf.count
                || !close(sum.squared_sum, node.cf.squared_sum)
                || sum.linear_sum.iter().zip(&node.cf.linear_sum).any(|(a, b)| !close(*a, *b))
            {
                return Err(format!("node {n} CF differs from the sum of its children"));
            }
        }
        if let Some(c) = seen.iter().position(|&k| k != 1) {
            return Err(format!("cluster {c} appears {} times", seen[c]));
        }
        Ok(())
    }
}

impl CandidateIndex for CfTree {
    fn candidates(&mut self, point: &[f64], clusters: &[Cluster], out: &mut Vec<usize>) {
        out.extend(self.candidate(point, clusters));
    }

    fn cluster_created(&mut self, id: usize, clusters: &[Cluster]) {
        let point = clusters[id].centroid.as_slice();
        let leaf = self.descend(point);
        if self.parent_of_cluster.len() <= id {
            self.parent_of_cluster.resize(id + 1, usize::MAX);
        }
        self.parent_of_cluster[id] = leaf;
        self.nodes[leaf].children.push(id);
        self.add_along_path(leaf, point);
        if self.nodes[leaf].children.len() > self.branching {
            self.split(leaf, clusters);
        }
        self.created += 1;
        #[cfg(debug_assertions)]
        if self.created.is_multiple_of(4096) {
            if let Err(e) = self.check_invariants(clusters, 1e-6) {
                panic!("CF-tree invariant broken: {e}");
            }
        }
    }

    fn cluster_grew(&mut self, id: usize, point: &[f64], _clusters: &[Cluster]) {
        self.add_along_path(self.parent_of_cluster[id], point);
    }
}
