//! Homotopy of closed walks in graphs via spanning-tree words.
//!
//! Fixing a spanning tree turns every non-tree edge into a free generator.
//! A closed walk is read as the sequence of non-tree edges it traverses,
//! with a sign for direction. Two cycles are homotopic iff their words are
//! conjugate; two based cycles are based homotopic iff their words are equal
//! in the free group.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::words::{conjugacy_equal, CyclicWord, Letter, Word};

/// One step of a walk: edge `edge` traversed from its first endpoint to its
/// second (`forward`) or the other way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Traversal {
    pub edge: usize,
    pub forward: bool,
}

impl Traversal {
    pub fn fwd(edge: usize) -> Self {
        Traversal {
            edge,
            forward: true,
        }
    }

    pub fn back(edge: usize) -> Self {
        Traversal {
            edge,
            forward: false,
        }
    }

    pub fn reversed(self) -> Self {
        Traversal {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    basepoint: usize,
    in_tree: Vec<bool>,
    generator: Vec<Option<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Graph {
    /// Validates the graph and spanning tree. With `tree = None` a
    /// breadth-first tree from the basepoint is chosen, scanning edges in
    /// index order. Non-tree edges become generators in index order.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        basepoint: usize,
        tree: Option<Vec<usize>>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if basepoint >= vertex_count {
            return Err(Error::InvalidGraph(format!(
                "basepoint {basepoint} out of range"
            )));
        }
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= vertex_count || v >= vertex_count)
        {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) has an unknown endpoint"
            )));
        }
        let tree = match tree {
            Some(t) => t,
            None => bfs_tree(vertex_count, &edges, basepoint),
        };
        let mut in_tree = vec![false; edges.len()];
        for &e in &tree {
            if e >= edges.len() {
                return Err(Error::InvalidGraph(format!("tree edge {e} out of range")));
            }
            if in_tree[e] {
                return Err(Error::InvalidGraph(format!("tree edge {e} listed twice")));
            }
            in_tree[e] = true;
        }
        if tree.len() + 1 != vertex_count {
            return Err(Error::InvalidGraph(format!(
                "a spanning tree on {vertex_count} vertices has {} edges, got {} (or the graph is disconnected)",
                vertex_count - 1,
                tree.len()
            )));
        }
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        for &e in &tree {
            let (u, v) = edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Err(Error::InvalidGraph(format!(
                    "tree edges contain a cycle at edge {e}"
                )));
            }
            parent[ru] = rv;
        }
        let mut next = 0;
        let generator = in_tree
            .iter()
            .map(|&t| {
                if t {
                    None
                } else {
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        Ok(Graph {
            vertex_count,
            edges,
            basepoint,
            in_tree,
            generator,
        })
    }

    /// One central basepoint with `n` loops, each loop two edges through its
    /// own auxiliary vertex. Loop `i` is edge `2i` (centre to vertex `i + 1`,
    /// in the tree) followed by edge `2i + 1` (back, generator `i`).
    pub fn wedge_of_cycles(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a wedge needs at least one cycle".into(),
            ));
        }
        let mut edges = Vec::with_capacity(2 * n);
        for i in 0..n {
            edges.push((0, i + 1));
            edges.push((i + 1, 0));
        }
        let tree = (0..n).map(|i| 2 * i).collect();
        Graph::new(n + 1, edges, 0, Some(tree))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.in_tree[e]).collect()
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.in_tree.get(e).copied().unwrap_or(false)
    }

    /// Number of free generators (non-tree edges).
    pub fn rank(&self) -> usize {
        self.generator.iter().flatten().count()
    }

    pub fn tail(&self, t: Traversal) -> usize {
        let (u, v) = self.edges[t.edge];
        if t.forward {
            u
        } else {
            v
        }
    }

    pub fn head(&self, t: Traversal) -> usize {
        let (u, v) = self.edges[t.edge];
        if t.forward {
            v
        } else {
            u
        }
    }

    fn check_walk(&self, steps: &[Traversal]) -> Result<()> {
        if let Some(t) = steps.iter().find(|t| t.edge >= self.edges.len()) {
            return Err(Error::InvalidWalk(format!("unknown edge {}", t.edge)));
        }
        for (i, w) in steps.windows(2).enumerate() {
            if self.head(w[0]) != self.tail(w[1]) {
                return Err(Error::InvalidWalk(format!(
                    "step {} ends at {} but step {} starts at {}",
                    i,
                    self.head(w[0]),
                    i + 1,
                    self.tail(w[1])
                )));
            }
        }
        Ok(())
    }

    fn letters(&self, steps: &[Traversal]) -> Vec<Letter> {
        steps
            .iter()
            .filter_map(|t| {
                self.generator[t.edge].map(|g| {
                    if t.forward {
                        Letter::pos(g)
                    } else {
                        Letter::neg(g)
                    }
                })
            })
            .collect()
    }

    /// Tree path from the basepoint to `v`.
    fn tree_path(&self, v: usize) -> Vec<Traversal> {
        let mut back: Vec<Option<Traversal>> = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[self.basepoint] = true;
        let mut queue = VecDeque::from([self.basepoint]);
        while let Some(x) = queue.pop_front() {
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                if !self.in_tree[e] {
                    continue;
                }
                let step = if a == x {
                    Traversal::fwd(e)
                } else if b == x {
                    Traversal::back(e)
                } else {
                    continue;
                };
                let y = self.head(step);
                if !seen[y] {
                    seen[y] = true;
                    back[y] = Some(step);
                    queue.push_back(y);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(step) = back[cur] {
            path.push(step);
            cur = self.tail(step);
        }
        path.reverse();
        path
    }

    /// A based cycle spelling `word`: for each letter, the tree path to the
    /// generator edge, the edge itself, and the tree path back.
    pub fn based_cycle_for_word(&self, word: &Word) -> Result<BasedCycle> {
        if word.rank() != self.rank() {
            return Err(Error::AlphabetMismatch(word.rank(), self.rank()));
        }
        let mut steps = Vec::new();
        for l in word.letters() {
            let e = self
                .generator
                .iter()
                .position(|g| *g == Some(l.generator))
                .expect("rank checked");
            let t = Traversal {
                edge: e,
                forward: !l.inverse,
            };
            let to = self.tree_path(self.tail(t));
            let from: Vec<Traversal> = self
                .tree_path(self.head(t))
                .iter()
                .rev()
                .map(|s| s.reversed())
                .collect();
            steps.extend(to);
            steps.push(t);
            steps.extend(from);
        }
        BasedCycle::new(self, steps)
    }
}

fn bfs_tree(vertex_count: usize, edges: &[(usize, usize)], root: usize) -> Vec<usize> {
    let mut seen = vec![false; vertex_count];
    seen[root] = true;
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for (e, &(a, b)) in edges.iter().enumerate() {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                tree.push(e);
                queue.push_back(y);
            }
        }
    }
    tree
}

/// Closed walk up to rotation. The empty walk is the trivial cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    steps: Vec<Traversal>,
}

impl OrientedCycle {
    pub fn new(graph: &Graph, steps: Vec<Traversal>) -> Result<Self> {
        graph.check_walk(&steps)?;
        if let (Some(&first), Some(&last)) = (steps.first(), steps.last()) {
            if graph.head(last) != graph.tail(first) {
                return Err(Error::InvalidWalk("walk does not close up".into()));
            }
        }
        Ok(OrientedCycle { steps })
    }

    pub fn steps(&self) -> &[Traversal] {
        &self.steps
    }

    pub fn reversed(&self) -> Self {
        OrientedCycle {
            steps: self.steps.iter().rev().map(|t| t.reversed()).collect(),
        }
    }
}

/// Closed walk starting and ending at the graph's basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedCycle {
    steps: Vec<Traversal>,
}

impl BasedCycle {
    pub fn new(graph: &Graph, steps: Vec<Traversal>) -> Result<Self> {
        graph.check_walk(&steps)?;
        if let (Some(&first), Some(&last)) = (steps.first(), steps.last()) {
            if graph.tail(first) != graph.basepoint() || graph.head(last) != graph.basepoint() {
                return Err(Error::InvalidWalk(format!(
                    "based walk must start and end at vertex {}",
                    graph.basepoint()
                )));
            }
        }
        Ok(BasedCycle { steps })
    }

    pub fn steps(&self) -> &[Traversal] {
        &self.steps
    }

    pub fn concat(&self, other: &BasedCycle) -> BasedCycle {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        BasedCycle { steps }
    }

    pub fn to_cycle(&self) -> OrientedCycle {
        OrientedCycle {
            steps: self.steps.clone(),
        }
    }
}

pub fn cycle_word(c: &OrientedCycle, g: &Graph) -> Result<CyclicWord> {
    g.check_walk(&c.steps)?;
    CyclicWord::new(g.letters(&c.steps), g.rank())
}

pub fn based_cycle_word(c: &BasedCycle, g: &Graph) -> Result<Word> {
    g.check_walk(&c.steps)?;
    Word::new(g.letters(&c.steps), g.rank())
}

pub fn graph_homotopic(c1: &OrientedCycle, c2: &OrientedCycle, g: &Graph) -> Result<bool> {
    let w1 = cycle_word(c1, g)?.to_word();
    let w2 = cycle_word(c2, g)?.to_word();
    conjugacy_equal(&w1, &w2)
}

pub fn graph_based_homotopic(c1: &BasedCycle, c2: &BasedCycle, g: &Graph) -> Result<bool> {
    Ok(based_cycle_word(c1, g)?.reduce() == based_cycle_word(c2, g)?.reduce())
}
