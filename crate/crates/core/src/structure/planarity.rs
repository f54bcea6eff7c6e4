//! Planarity testing with certificates.
//!
//! Each biconnected component is embedded by path addition
//! (Demoucron–Malgrange–Pertuiset): start from a cycle, then repeatedly
//! route a path of some fragment through a face that contains all of the
//! fragment's attachment vertices. A fragment with no such face proves the
//! block non-planar.
//!
//! Planar inputs yield a rotation system that passes an Euler-formula check
//! per component. Non-planar inputs are shrunk to a minimal non-planar
//! subgraph, which is a subdivision of K5 or K3,3.

use super::connectivity::biconnected_components;
use crate::graph::{Edge, Graph};
use std::collections::{HashMap, HashSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Cyclic order of neighbors around each vertex.
    pub rotation: Vec<Vec<usize>>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    /// Paths between branch vertices, endpoints included.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub enum PlanarityWitness {
    Embedding(Embedding),
    Kuratowski(KuratowskiWitness),
}

#[derive(Clone, Debug)]
pub struct PlanarityReport {
    pub planar: bool,
    pub witness: PlanarityWitness,
}

impl PlanarityReport {
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.witness {
            PlanarityWitness::Embedding(e) => self.planar && e.verify(g),
            PlanarityWitness::Kuratowski(k) => !self.planar && k.verify(g),
        }
    }
}

pub fn is_planar(g: &Graph) -> PlanarityReport {
    match embed(g) {
        Some(embedding) => PlanarityReport {
            planar: true,
            witness: PlanarityWitness::Embedding(embedding),
        },
        None => PlanarityReport {
            planar: false,
            witness: PlanarityWitness::Kuratowski(kuratowski_subgraph(g)),
        },
    }
}

/// Planarity verdict without a certificate.
pub fn planar_verdict(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_components(g)
        .iter()
        .all(|block| block.len() == 1 || embed_block(block).is_some())
}

fn embed(g: &Graph) -> Option<Embedding> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut per_vertex: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for block in biconnected_components(g) {
        if block.len() == 1 {
            let (u, v) = block[0].ends();
            per_vertex[u].push(vec![v]);
            per_vertex[v].push(vec![u]);
            continue;
        }
        let faces = embed_block(&block)?;
        let mut succ: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
        for face in &faces {
            let k = face.len();
            for i in 0..k {
                let (u, v, w) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
                succ.entry(v).or_default().insert(u, w);
            }
        }
        let mut verts: Vec<usize> = succ.keys().copied().collect();
        verts.sort_unstable();
        for v in verts {
            let m = &succ[&v];
            let start = *m.keys().min().unwrap();
            let mut order = vec![start];
            let mut cur = m[&start];
            while cur != start && order.len() <= m.len() {
                order.push(cur);
                cur = m[&cur];
            }
            per_vertex[v].push(order);
        }
    }
    let rotation = per_vertex.into_iter().map(|parts| parts.concat()).collect();
    Some(Embedding { rotation })
}

impl Embedding {
    /// Faces traced from the rotation system, or `None` if the rotation is
    /// not a permutation of each neighborhood.
    pub fn faces(&self, g: &Graph) -> Option<Vec<Vec<usize>>> {
        if self.rotation.len() != g.vertex_count() {
            return None;
        }
        let mut pos: Vec<HashMap<usize, usize>> = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let mut sorted = self.rotation[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return None;
            }
            pos.push(self.rotation[v].iter().enumerate().map(|(i, &w)| (w, i)).collect());
        }
        let mut used: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                if used.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b)) {
                    face.push(a);
                    let rot = &self.rotation[b];
                    let next = rot[(pos[b][&a] + 1) % rot.len()];
                    a = b;
                    b = next;
                }
                faces.push(face);
            }
        }
        Some(faces)
    }

    /// Euler check `n - m + f = 2` on every connected component.
    pub fn verify(&self, g: &Graph) -> bool {
        let Some(faces) = self.faces(g) else {
            return false;
        };
        let comps = g.components();
        let mut comp_of = vec![0; g.vertex_count()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in &faces {
            face_count[comp_of[f[0]]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let n = c.len() as i64;
            let m = c.iter().map(|&v| g.degree(v)).sum::<usize>() as i64 / 2;
            let f = if m == 0 { 1 } else { face_count[i] as i64 };
            n - m + f == 2
        })
    }
}

impl KuratowskiWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        let branch: HashSet<usize> = self.branch.iter().copied().collect();
        let expected = match self.kind {
            KuratowskiKind::K5 => (5, 10),
            KuratowskiKind::K33 => (6, 9),
        };
        if branch.len() != expected.0 || self.branch.len() != expected.0 || self.paths.len() != expected.1 {
            return false;
        }
        let mut interior_seen = HashSet::new();
        let mut pairs = HashSet::new();
        for p in &self.paths {
            if p.len() < 2 || !branch.contains(&p[0]) || !branch.contains(p.last().unwrap()) {
                return false;
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if branch.contains(&x) || !interior_seen.insert(x) {
                    return false;
                }
            }
            let (a, b) = (p[0], *p.last().unwrap());
            if a == b || !pairs.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
        match self.kind {
            KuratowskiKind::K5 => true,
            KuratowskiKind::K33 => {
                // pair graph must be bipartite with sides of three
                let b = &self.branch;
                let side: Vec<usize> = b
                    .iter()
                    .copied()
                    .filter(|&x| x != b[0] && !pairs.contains(&(b[0].min(x), b[0].max(x))))
                    .collect();
                if side.len() != 2 {
                    return false;
                }
                let left: HashSet<usize> = std::iter::once(b[0]).chain(side).collect();
                pairs.iter().all(|&(x, y)| left.contains(&x) != left.contains(&y))
            }
        }
    }
}

/// Shrinks a non-planar graph to a minimal non-planar subgraph and reads
/// off its branch vertices and paths.
fn kuratowski_subgraph(g: &Graph) -> KuratowskiWitness {
    let mut h = g.clone();
    h.clear_annotations();
    // drop whole vertices first (cheap shrink), then single edges
    for v in g.vertices() {
        if h.degree(v) == 0 {
            continue;
        }
        let nbrs = h.neighbors(v).to_vec();
        for &w in &nbrs {
            h.remove_edge(v, w).unwrap();
        }
        if planar_verdict(&h) {
            for &w in &nbrs {
                h.add_edge(v, w).unwrap();
            }
        }
    }
    for e in h.edges() {
        let (u, v) = e.ends();
        h.remove_edge(u, v).unwrap();
        if planar_verdict(&h) {
            h.add_edge(u, v).unwrap();
        }
    }
    let branch: Vec<usize> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    let is_branch: HashSet<usize> = branch.iter().copied().collect();
    let mut paths = Vec::new();
    let mut used_edges = HashSet::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            if used_edges.contains(&Edge::new(b, first)) {
                continue;
            }
            let mut path = vec![b];
            let (mut prev, mut cur) = (b, first);
            used_edges.insert(Edge::new(prev, cur));
            while !is_branch.contains(&cur) {
                path.push(cur);
                let next = *h
                    .neighbors(cur)
                    .iter()
                    .find(|&&x| x != prev)
                    .expect("degree-2 interior");
                prev = cur;
                cur = next;
                used_edges.insert(Edge::new(prev, cur));
            }
            path.push(cur);
            paths.push(path);
        }
    }
    KuratowskiWitness { kind, branch, paths }
}

/// Faces of a planar embedding of a 2-connected block, or `None`.
fn embed_block(block: &[Edge]) -> Option<Vec<Vec<usize>>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|e| [e.ends().0, e.ends().1]).collect();
    verts.sort_unstable();
    verts.dedup();
    let k = verts.len();
    if block.len() > 3 * k - 6 {
        return None;
    }
    let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); k];
    for e in block {
        let (u, v) = e.ends();
        adj[local[&u]].push(local[&v]);
        adj[local[&v]].push(local[&u]);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let faces = Dmp::new(&adj).run()?;
    Some(
        faces
            .into_iter()
            .map(|f| f.into_iter().map(|i| verts[i]).collect())
            .collect(),
    )
}

struct Dmp<'a> {
    adj: &'a [Vec<usize>],
    in_h: Vec<bool>,
    embedded: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
    face_sets: Vec<HashSet<usize>>,
}

struct Fragment {
    attachments: Vec<usize>,
    /// Either a single chord between two embedded vertices, or the
    /// non-embedded vertices of a bridge component.
    chord: Option<(usize, usize)>,
    inner: Vec<usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<'a> Dmp<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        Dmp {
            adj,
            in_h: vec![false; adj.len()],
            embedded: HashSet::new(),
            faces: Vec::new(),
            face_sets: Vec::new(),
        }
    }

    fn total_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn initial_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[0] = 0;
        let mut stack = vec![(0usize, 0usize)];
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx >= self.adj[u].len() {
                stack.pop();
                continue;
            }
            let w = self.adj[u][*idx];
            *idx += 1;
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, 0));
            } else if w != parent[u] && depth[w] < depth[u] {
                let mut cycle = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
        }
        unreachable!("2-connected block without a cycle")
    }

    fn add_face(&mut self, face: Vec<usize>) {
        self.face_sets.push(face.iter().copied().collect());
        self.faces.push(face);
    }

    fn run(mut self) -> Option<Vec<Vec<usize>>> {
        let cycle = self.initial_cycle();
        for i in 0..cycle.len() {
            self.in_h[cycle[i]] = true;
            self.embedded.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
        let mut rev = cycle.clone();
        rev.reverse();
        self.add_face(cycle);
        self.add_face(rev);

        let total = self.total_edges();
        while self.embedded.len() < total {
            let fragments = self.fragments();
            let mut choice: Option<(usize, usize)> = None;
            for (fi, frag) in fragments.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| frag.attachments.iter().all(|a| self.face_sets[f].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return None,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("at least one fragment");
            let path = self.fragment_path(&fragments[fi]);
            self.embed_path(face, &path);
        }
        Some(self.faces)
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for u in 0..n {
            if !self.in_h[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.in_h[v] && !self.embedded.contains(&key(u, v)) {
                    out.push(Fragment {
                        attachments: vec![u, v],
                        chord: Some((u, v)),
                        inner: Vec::new(),
                    });
                }
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.in_h[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut inner = vec![s];
            let mut attachments = HashSet::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if self.in_h[w] {
                        attachments.insert(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        inner.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let mut attachments: Vec<usize> = attachments.into_iter().collect();
            attachments.sort_unstable();
            out.push(Fragment {
                attachments,
                chord: None,
                inner,
            });
        }
        out
    }

    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        if let Some((u, v)) = frag.chord {
            return vec![u, v];
        }
        let inner: HashSet<usize> = frag.inner.iter().copied().collect();
        let a = frag.attachments[0];
        let mut parent: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for &w in &self.adj[a] {
            if inner.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, a);
                queue.push_back(w);
            }
        }
        while let Some(u) = queue.pop_front() {
            if let Some(&b) = self.adj[u].iter().find(|&&b| b != a && self.in_h[b]) {
                let mut path = vec![b, u];
                let mut x = u;
                while parent[&x] != a {
                    x = parent[&x];
                    path.push(x);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            for &w in &self.adj[u] {
                if inner.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, u);
                    queue.push_back(w);
                }
            }
        }
        unreachable!("fragment of a 2-connected block has two attachments")
    }

    fn embed_path(&mut self, face_idx: usize, path: &[usize]) {
        let face = self.faces[face_idx].clone();
        let (a, b) = (path[0], *path.last().unwrap());
        let len = face.len();
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut x = i;
        while x != j {
            f1.push(face[x]);
            x = (x + 1) % len;
        }
        f1.push(b);
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut x = j;
        while x != i {
            f2.push(face[x]);
            x = (x + 1) % len;
        }
        f2.push(a);
        f2.extend(interior.iter());

        self.face_sets[face_idx] = f1.iter().copied().collect();
        self.faces[face_idx] = f1;
        self.add_face(f2);
        for w in path.windows(2) {
            self.embedded.insert(key(w[0], w[1]));
        }
        for &v in interior {
            self.in_h[v] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn check(name: &str, params: &[u64], planar: bool) {
        let g = generate(name, params).unwrap();
        let r = is_planar(&g);
        assert_eq!(r.planar, planar, "{name} {params:?}");
        assert!(r.verify(&g), "witness for {name} {params:?}");
    }

    #[test]
    fn base_cases() {
        check("complete", &[4], true);
        check("complete", &[5], false);
        check("complete_multipartite", &[3, 3], false);
        check("petersen", &[], false);
        check("cycle", &[6], true);
        check("path", &[1], true);
        check("complete_multipartite", &[2, 2, 2], true);
        check("complete_multipartite", &[1, 1, 2, 2], false);
        check("complete_multipartite", &[1, 1, 1, 2], true);
        check("complete", &[6], false);
    }

    #[test]
    fn witness_kinds() {
        let k5 = generate("complete", &[5]).unwrap();
        match is_planar(&k5).witness {
            PlanarityWitness::Kuratowski(k) => assert_eq!(k.kind, KuratowskiKind::K5),
            _ => panic!(),
        }
        let k33 = generate("complete_multipartite", &[3, 3]).unwrap();
        match is_planar(&k33).witness {
            PlanarityWitness::Kuratowski(k) => assert_eq!(k.kind, KuratowskiKind::K33),
            _ => panic!(),
        }
    }

    #[test]
    fn subdivided_k5_still_non_planar() {
        let g = generate("complete", &[5]).unwrap().subdivide_all();
        let r = is_planar(&g);
        assert!(!r.planar);
        assert!(r.verify(&g));
    }

    #[test]
    fn disconnected_and_cut_vertex_embeddings() {
        let butterfly = crate::graph::pattern(crate::graph::PatternName::Butterfly);
        let (g, _) = butterfly.disjoint_union(&generate("complete", &[4]).unwrap());
        let (g, _) = g.disjoint_union(&Graph::new(1));
        let r = is_planar(&g);
        assert!(r.planar && r.verify(&g));
    }

    #[test]
    fn bad_rotation_fails_euler() {
        let k4 = generate("complete", &[4]).unwrap();
        // a valid rotation system of K4 on the torus-like side: reversing a
        // single vertex's rotation breaks planarity of the face structure
        let PlanarityWitness::Embedding(mut e) = is_planar(&k4).witness else {
            panic!()
        };
        e.rotation[0].reverse();
        assert!(!e.verify(&k4));
    }
}
