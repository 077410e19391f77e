//! Deficiency (non-collinearity) graphs and their classification.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::format::{self, Header};

/// A simple undirected graph on `0..n` with sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, w) in edges {
            if u >= n || w >= n {
                return Err(Error::invalid("graph", format!("edge ({u}, {w}) out of range 0..{n}")));
            }
            if u == w {
                return Err(Error::invalid("graph", format!("loop at {u}")));
            }
            adj[u].push(w);
            adj[w].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::invalid("graph", format!("repeated edge ({u}, {})", w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid edges")
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    pub fn petersen() -> Self {
        let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
        Graph::new(10, edges).expect("valid edges")
    }

    /// Vertices of the `i`-th graph are shifted by the sizes of the graphs before it.
    pub fn disjoint_union(parts: &[Graph]) -> Self {
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            edges.extend(g.edges().into_iter().map(|(u, w)| (u + offset, w + offset)));
            offset += g.n();
        }
        Graph::new(offset, edges).expect("union of simple graphs is simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.adj[u].binary_search(&w).is_ok()
    }

    /// Sorted edge list with `u < w`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
            .collect()
    }

    /// The common degree, if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }
}

/// Edge `(x, y)` iff no line contains both `x` and `y`.
pub fn build_deficiency(d: &Design) -> Graph {
    let cov = d.pair_coverage();
    let n = d.v();
    let edges = (1..n).flat_map(|y| (0..y).map(move |x| (x, y))).filter(|&(x, y)| cov.get(x, y) == 0);
    Graph::new(n, edges).expect("pairs are distinct and in range")
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A shortest cycle as a vertex sequence, found by BFS from every vertex.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    shortest_cycle_among(g, 0..g.n())
}

fn shortest_cycle_among(g: &Graph, roots: impl IntoIterator<Item = usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize, Vec<Option<usize>>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![None; n];
    let mut touched = Vec::new();
    for root in roots {
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = None;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        let mut queue = VecDeque::from([root]);
        let mut found: Option<(usize, usize, usize)> = None;
        while let Some(u) = queue.pop_front() {
            let bound = found.map_or(best.as_ref().map_or(usize::MAX, |b| b.0), |f| f.0);
            // any cycle closed from here has length >= 2*dist[u] + 1
            if 2 * dist[u] + 1 >= bound {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = Some(u);
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != Some(w) {
                    let len = dist[u] + dist[w] + 1;
                    if found.is_none_or(|f| len < f.0) {
                        found = Some((len, u, w));
                    }
                }
            }
        }
        if let Some((len, u, w)) = found {
            if best.as_ref().is_none_or(|b| len < b.0) {
                best = Some((len, u, w, parent.clone()));
            }
        }
    }
    let (_, u, w, parent) = best?;
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    let mut cycle = path_to_root(u);
    cycle.reverse(); // root .. u
    let back = path_to_root(w); // w .. root
    cycle.extend(&back[..back.len() - 1]);
    Some(cycle)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentTag {
    /// A complete bipartite `K_{k,k}`; the two sides are the lines of an opposite line pair.
    CompleteBipartite { left: Vec<usize>, right: Vec<usize> },
    /// No cycle shorter than 5; `None` for acyclic components.
    GirthAtLeastFive(Option<usize>),
    /// Anything else, with a short cycle as witness.
    Other { cycle: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub tag: ComponentTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentClassification {
    pub components: Vec<Component>,
}

impl ComponentClassification {
    pub fn complete_bipartite_count(&self) -> usize {
        self.count(|t| matches!(t, ComponentTag::CompleteBipartite { .. }))
    }

    pub fn girth_five_count(&self) -> usize {
        self.count(|t| matches!(t, ComponentTag::GirthAtLeastFive(_)))
    }

    pub fn other_count(&self) -> usize {
        self.count(|t| matches!(t, ComponentTag::Other { .. }))
    }

    fn count(&self, pred: impl Fn(&ComponentTag) -> bool) -> usize {
        self.components.iter().filter(|c| pred(&c.tag)).count()
    }

    /// Vertices of the girth >= 5 part (the residual graph once the K_{k,k} are removed).
    pub fn residual_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .components
            .iter()
            .filter(|c| matches!(c.tag, ComponentTag::GirthAtLeastFive(_)))
            .flat_map(|c| c.vertices.iter().copied())
            .collect();
        v.sort_unstable();
        v
    }
}

pub fn classify(g: &Graph, k: usize) -> ComponentClassification {
    let components = components(g)
        .into_iter()
        .map(|vertices| {
            let tag = match complete_bipartite_sides(g, &vertices, k) {
                Some((left, right)) => ComponentTag::CompleteBipartite { left, right },
                None => match shortest_cycle_among(g, vertices.iter().copied()) {
                    Some(cycle) if cycle.len() < 5 => ComponentTag::Other { cycle },
                    cycle => ComponentTag::GirthAtLeastFive(cycle.map(|c| c.len())),
                },
            };
            Component { vertices, tag }
        })
        .collect();
    ComponentClassification { components }
}

/// Recognizes `K_{k,k}` structurally: a proper 2-colouring with sides of size `k`
/// and every vertex adjacent to the whole opposite side.
fn complete_bipartite_sides(g: &Graph, comp: &[usize], k: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if comp.len() != 2 * k || comp.iter().any(|&x| g.degree(x) != k) {
        return None;
    }
    let first = comp[0];
    let right: Vec<usize> = g.neighbors(first).to_vec();
    let left: Vec<usize> = comp.iter().copied().filter(|x| right.binary_search(x).is_err()).collect();
    if left.len() != k {
        return None;
    }
    let ok = left.iter().all(|&x| g.neighbors(x) == right.as_slice())
        && right.iter().all(|&y| g.neighbors(y) == left.as_slice());
    ok.then_some((left, right))
}

/// Ten vertices, 3-regular, girth 5: the Petersen graph is the only such graph.
pub fn is_petersen(g: &Graph) -> bool {
    g.n() == 10 && g.regular_degree() == Some(3) && girth(g) == Some(5)
}

/// The pentagonal geometry whose lines are the vertex neighbourhoods of a Moore graph
/// of girth 5 (k-regular on k^2 + 1 vertices).
pub fn moore_pent(g: &Graph, k: usize) -> Result<Design> {
    if k < 2 {
        return Err(Error::precondition(format!("degree {k} < 2")));
    }
    if g.n() != k * k + 1 {
        return Err(Error::precondition(format!("Moore graph needs {} vertices, got {}", k * k + 1, g.n())));
    }
    if g.regular_degree() != Some(k) {
        return Err(Error::precondition(format!("Moore graph must be {k}-regular")));
    }
    match girth(g) {
        Some(5) => {}
        other => {
            let shown = other.map_or("infinite".to_string(), |x| x.to_string());
            return Err(Error::precondition(format!("Moore graph must have girth 5, got {shown}")));
        }
    }
    let lines = (0..g.n()).map(|x| g.neighbors(x).to_vec()).collect();
    Ok(Design::new(g.n(), k, lines)?.with_claimed_r(Some(k)))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header = Header::default();
    let mut edges = Vec::new();
    for rec in format::records(text)? {
        match rec.key {
            "edge" => {
                let pts = rec.usizes()?;
                match pts[..] {
                    [u, w] => edges.push((rec.line, u, w)),
                    _ => return Err(rec.error("edge needs exactly two vertices")),
                }
            }
            "kind" | "v" => header.set(rec)?,
            other => return Err(rec.error(format!("unknown key `{other}` in graph file"))),
        }
    }
    header.expect_kind(&["graph"])?;
    let n = header.required_usize("v")?;
    for &(line, u, w) in &edges {
        if u >= n || w >= n || u == w {
            return Err(Error::parse(line, format!("bad edge {u} {w} for {n} vertices")));
        }
    }
    Graph::new(n, edges.into_iter().map(|(_, u, w)| (u, w))).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("kind: graph\nv: {}\n", g.n());
    for (u, w) in g.edges() {
        writeln!(out, "edge: {u} {w}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_simple_cycle(g: &Graph, c: &[usize]) -> bool {
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == c.len() && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::cycle(7)), Some(7));
        assert_eq!(girth(&Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap()), None);
        assert_eq!(girth(&Graph::empty(0)), None);
    }

    #[test]
    fn witness_cycles_are_simple() {
        for g in [Graph::petersen(), Graph::complete_bipartite(3, 3), Graph::cycle(9), Graph::complete_bipartite(2, 5)] {
            let c = shortest_cycle(&g).unwrap();
            assert!(is_simple_cycle(&g, &c), "{c:?}");
            assert_eq!(Some(c.len()), girth(&g));
        }
    }

    #[test]
    fn petersen_recognized() {
        let p = Graph::petersen();
        assert!(is_petersen(&p));
        assert_eq!(p.edge_count(), 15);
        assert!(!is_petersen(&Graph::cycle(10)));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::empty(1)));
        assert!(is_connected(&Graph::petersen()));
        let two = Graph::disjoint_union(&[Graph::complete_bipartite(3, 3), Graph::complete_bipartite(3, 3)]);
        assert!(!is_connected(&two));
        assert_eq!(components(&two), vec![vec![0, 1, 2, 3, 4, 5], vec![6, 7, 8, 9, 10, 11]]);
    }

    #[test]
    fn classify_mixed_union() {
        let g = Graph::disjoint_union(&[Graph::complete_bipartite(3, 3), Graph::petersen(), Graph::cycle(4)]);
        let cls = classify(&g, 3);
        assert_eq!(cls.complete_bipartite_count(), 1);
        assert_eq!(cls.girth_five_count(), 1);
        assert_eq!(cls.other_count(), 1);
        match &cls.components[0].tag {
            ComponentTag::CompleteBipartite { left, right } => {
                assert_eq!(left, &vec![0, 1, 2]);
                assert_eq!(right, &vec![3, 4, 5]);
            }
            t => panic!("unexpected {t:?}"),
        }
        assert_eq!(cls.components[1].tag, ComponentTag::GirthAtLeastFive(Some(5)));
        assert_eq!(cls.residual_vertices(), (6..16).collect::<Vec<_>>());
        // the 4-cycle is K_{2,2}, not K_{3,3}
        assert!(matches!(&cls.components[2].tag, ComponentTag::Other { cycle } if cycle.len() == 4));
        assert_eq!(classify(&Graph::cycle(4), 2).complete_bipartite_count(), 1);
    }

    #[test]
    fn girth_four_alone_is_not_k33() {
        // the 3-cube is 3-regular with girth 4 but is not K_{3,3}
        let cube = Graph::new(8, (0..8).flat_map(|x| [1, 2, 4].map(|b| (x, x ^ b))).filter(|&(x, y)| x < y)).unwrap();
        assert_eq!(girth(&cube), Some(4));
        let cls = classify(&cube, 3);
        assert_eq!(cls.complete_bipartite_count(), 0);
        assert_eq!(cls.other_count(), 1);
    }

    #[test]
    fn empty_graph_has_no_components() {
        let cls = classify(&Graph::empty(0), 3);
        assert!(cls.components.is_empty());
    }

    #[test]
    fn moore_examples() {
        let desargues = moore_pent(&Graph::petersen(), 3).unwrap();
        assert_eq!((desargues.v(), desargues.b()), (10, 10));
        let pentagon = moore_pent(&Graph::cycle(5), 2).unwrap();
        assert_eq!((pentagon.v(), pentagon.b()), (5, 5));
        let err = moore_pent(&Graph::complete_bipartite(3, 3), 3).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err = moore_pent(&Graph::cycle(10), 3).unwrap_err();
        assert!(err.to_string().contains("3-regular"), "{err}");
    }

    #[test]
    fn moore_lines_cover_exactly_the_non_adjacent_pairs() {
        let g = Graph::petersen();
        let d = moore_pent(&g, 3).unwrap();
        let cov = d.pair_coverage();
        for x in 0..10 {
            for y in x + 1..10 {
                let expected = if g.has_edge(x, y) { 0 } else { 1 };
                assert_eq!(cov.get(x, y), expected, "pair {x} {y}");
            }
        }
        assert_eq!(build_deficiency(&d), g);
    }

    #[test]
    fn graph_file_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
        assert!(parse_graph("kind: graph\nv: 3\nedge: 0 3\n").is_err());
        assert!(parse_graph("kind: graph\nv: 3\nedge: 0 1\nedge: 1 0\n").is_err());
        assert!(parse_graph("kind: design\nv: 3\n").is_err());
    }

    #[test]
    fn bad_graphs_rejected() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (0, 1)]).is_err());
        assert!(Graph::new(3, [(0, 5)]).is_err());
    }
}
