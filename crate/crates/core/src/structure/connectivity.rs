use crate::graph::{Edge, Graph};

/// Articulation vertices, ascending.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let dfs = Dfs::run(g);
    let mut cut: Vec<usize> = dfs
        .articulation
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(v, _)| v)
        .collect();
    cut.sort_unstable();
    cut
}

/// Biconnected components as edge lists. Bridges form single-edge blocks;
/// isolated vertices belong to no block.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Edge>> {
    Dfs::run(g).blocks
}

struct Dfs {
    articulation: Vec<bool>,
    blocks: Vec<Vec<Edge>>,
}

impl Dfs {
    fn run(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut articulation = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(frame) = stack.last_mut() {
                let (u, parent, idx) = *frame;
                if idx < g.degree(u) {
                    frame.2 += 1;
                    let w = g.neighbors(u)[idx];
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(Edge::new(u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if disc[w] < disc[u] {
                        edge_stack.push(Edge::new(u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            if parent != root {
                                articulation[parent] = true;
                            }
                            let stop = Edge::new(parent, u);
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == stop {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                articulation[root] = true;
            }
        }
        Dfs { articulation, blocks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, pattern, PatternName};

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&generate("path", &[3]).unwrap()), vec![1]);
        assert!(cut_vertices(&generate("cycle", &[5]).unwrap()).is_empty());
        assert_eq!(cut_vertices(&pattern(PatternName::Butterfly)), vec![0]);
        assert_eq!(cut_vertices(&pattern(PatternName::Net)), vec![0, 1, 2]);
    }

    #[test]
    fn blocks_of_butterfly_and_path() {
        let b = biconnected_components(&pattern(PatternName::Butterfly));
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|blk| blk.len() == 3));
        let p = biconnected_components(&generate("path", &[4]).unwrap());
        assert_eq!(p.len(), 3);
        let total: usize = biconnected_components(&pattern(PatternName::Net))
            .iter()
            .map(Vec::len)
            .sum();
        assert_eq!(total, 6);
    }
}
