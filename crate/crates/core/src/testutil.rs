use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).expect("valid test instance")
}

fn graph_hypergraph(g: &Graph, n: usize) -> Hypergraph {
    Hypergraph::new(n, g.edges().iter().map(|&(u, v)| vec![u, v]).collect()).expect("valid graph")
}

pub fn cycle(n: usize) -> Hypergraph {
    graph_hypergraph(&Graph::cycle(n), n)
}

pub fn path(n: usize) -> Hypergraph {
    graph_hypergraph(&Graph::path(n), n)
}
