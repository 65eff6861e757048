//! Coxeter diagram restricted to a generator subset: connected components
//! and the shape data (degrees, paths, arms) used by type recognition.

use crate::matrix::{CoxLabel, CoxeterMatrix};
use crate::subset::GeneratorSet;

/// Connected components of the diagram on `subset`, ordered by least element.
pub(crate) fn components(m: &CoxeterMatrix, subset: GeneratorSet) -> Vec<GeneratorSet> {
    let mut remaining = subset;
    let mut out = Vec::new();
    while let Some(start) = remaining.iter().next() {
        let mut comp = GeneratorSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in remaining.iter() {
                if !comp.contains(w) && m.get(v, w).is_diagram_edge() {
                    comp = comp.with(w);
                    stack.push(w);
                }
            }
        }
        remaining = GeneratorSet::from_bits(remaining.bits() & !comp.bits());
        out.push(comp);
    }
    out
}

/// Induced diagram on one connected vertex set, with local indices.
pub(crate) struct LocalDiagram {
    pub vertices: Vec<usize>,
    pub adj: Vec<Vec<(usize, CoxLabel)>>,
    pub edges: usize,
}

impl LocalDiagram {
    pub fn new(m: &CoxeterMatrix, subset: GeneratorSet) -> Self {
        let vertices: Vec<usize> = subset.iter().collect();
        let n = vertices.len();
        let mut adj = vec![Vec::new(); n];
        let mut edges = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                let l = m.get(vertices[a], vertices[b]);
                if l.is_diagram_edge() {
                    adj[a].push((b, l));
                    adj[b].push((a, l));
                    edges += 1;
                }
            }
        }
        LocalDiagram {
            vertices,
            adj,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn labels(&self) -> impl Iterator<Item = CoxLabel> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |(b, _)| *b > a).map(|&(_, l)| l))
    }

    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices_of_degree(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) == d).collect()
    }

    /// Edge labels read along the diagram when it is a path (tree, all
    /// degrees ≤ 2). Orientation starts at the endpoint with the smaller
    /// local index.
    pub fn path_labels(&self) -> Option<Vec<CoxLabel>> {
        if !self.is_tree() || self.max_degree() > 2 {
            return None;
        }
        if self.len() == 1 {
            return Some(Vec::new());
        }
        let start = (0..self.len()).find(|&v| self.degree(v) == 1)?;
        let mut labels = Vec::with_capacity(self.len() - 1);
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            let next = self.adj[cur].iter().find(|(w, _)| *w != prev);
            match next {
                Some(&(w, l)) => {
                    labels.push(l);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        Some(labels)
    }

    /// For a branch vertex, the label sequences of each arm walking away
    /// from it; `None` if some arm branches again.
    pub fn arms(&self, center: usize) -> Option<Vec<Vec<CoxLabel>>> {
        let mut arms = Vec::new();
        for &(first, l) in &self.adj[center] {
            let mut labels = vec![l];
            let (mut prev, mut cur) = (center, first);
            loop {
                let rest: Vec<_> = self.adj[cur].iter().filter(|(w, _)| *w != prev).collect();
                match rest.as_slice() {
                    [] => break,
                    [&(w, l)] => {
                        labels.push(l);
                        prev = cur;
                        cur = w;
                    }
                    _ => return None,
                }
            }
            arms.push(labels);
        }
        Some(arms)
    }
}
