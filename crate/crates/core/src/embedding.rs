//! Injective vertex maps between complexes: subcomplex embeddings and isomorphisms.

use std::collections::HashSet;

use crate::complex::{FaceIndex, SimplicialComplex};
use crate::simplex::{Simplex, CAPACITY};

/// Pattern-to-host vertex assignments, sorted by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap(pub Vec<(usize, usize)>);

impl VertexMap {
    pub fn apply(&self, face: Simplex) -> Option<Simplex> {
        face.map(|v| {
            self.0
                .iter()
                .find(|(p, _)| *p == v)
                .map_or(CAPACITY, |(_, h)| *h)
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.0.iter().all(|(_, h)| seen.insert(*h))
    }
}

/// Per-vertex count of faces of each dimension.
fn face_degrees(k: &SimplicialComplex) -> Vec<Vec<usize>> {
    let width = (k.dim().max(0) + 1) as usize;
    let mut deg = vec![vec![0; width]; CAPACITY];
    for f in k.all_faces() {
        for v in f.vertices() {
            deg[v][f.dim() as usize] += 1;
        }
    }
    deg
}

struct Search<'a> {
    order: Vec<usize>,
    /// pattern facets touching each pattern vertex
    incident: Vec<Vec<Simplex>>,
    candidates: Vec<Vec<usize>>,
    accept: &'a dyn Fn(Simplex, bool) -> bool,
    image: [usize; CAPACITY],
    used: u64,
    assigned: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for ci in 0..self.candidates[p].len() {
            let h = self.candidates[p][ci];
            if self.used & (1 << h) != 0 {
                continue;
            }
            self.image[p] = h;
            self.assigned |= 1 << p;
            let ok = self.incident[p].iter().all(|f| {
                let part = Simplex::from_bits(f.bits() & self.assigned);
                let img = part.map(|v| self.image[v]).expect("injective");
                (self.accept)(img, part == *f)
            });
            if ok {
                self.used |= 1 << h;
                if self.run(depth + 1) {
                    return true;
                }
                self.used &= !(1 << h);
            }
            self.assigned &= !(1 << p);
        }
        false
    }
}

/// Orders pattern vertices so that each one shares facets with already placed vertices.
fn search_order(pattern: &SimplicialComplex) -> Vec<usize> {
    let vs = pattern.vertex_set().to_vec();
    let weight = |v: usize| -> usize {
        pattern
            .facets()
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.len())
            .sum()
    };
    let mut order = Vec::with_capacity(vs.len());
    let mut placed = Simplex::EMPTY;
    while order.len() < vs.len() {
        let best = vs
            .iter()
            .copied()
            .filter(|v| !placed.contains(*v))
            .max_by_key(|&v| {
                let links: usize = pattern
                    .facets()
                    .iter()
                    .filter(|f| f.contains(v))
                    .map(|f| f.intersection(placed).len())
                    .sum();
                (links, weight(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed = placed.with(best);
        order.push(best);
    }
    order
}

fn run_search(
    pattern: &SimplicialComplex,
    candidates: Vec<Vec<usize>>,
    accept: &dyn Fn(Simplex, bool) -> bool,
) -> Option<VertexMap> {
    let order = search_order(pattern);
    let mut incident = vec![Vec::new(); CAPACITY];
    for f in pattern.facets() {
        for v in f.vertices() {
            incident[v].push(*f);
        }
    }
    let mut search = Search {
        order,
        incident,
        candidates,
        accept,
        image: [0; CAPACITY],
        used: 0,
        assigned: 0,
    };
    if search.run(0) {
        let mut pairs: Vec<(usize, usize)> = pattern
            .vertex_set()
            .vertices()
            .map(|v| (v, search.image[v]))
            .collect();
        pairs.sort_unstable();
        Some(VertexMap(pairs))
    } else {
        None
    }
}

/// Finds an injective `φ: V(pattern) → V(host)` with `φ(F) ∈ host` for every face `F`
/// of `pattern`, or returns `None` when no such map exists.
pub fn find_subcomplex_embedding(
    pattern: &SimplicialComplex,
    host: &SimplicialComplex,
) -> Option<VertexMap> {
    if pattern.num_vertices() > host.num_vertices() || pattern.dim() > host.dim() {
        return None;
    }
    let pdeg = face_degrees(pattern);
    let hdeg = face_degrees(host);
    let hosts = host.vertex_set().to_vec();
    let mut candidates = vec![Vec::new(); CAPACITY];
    for p in pattern.vertex_set().vertices() {
        candidates[p] = hosts
            .iter()
            .copied()
            .filter(|&h| pdeg[p].iter().zip(&hdeg[h]).all(|(a, b)| a <= b))
            .collect();
    }
    let index = FaceIndex::new(host);
    run_search(pattern, candidates, &|img, _| index.contains(img))
}

/// A vertex bijection carrying the facets of `a` onto the facets of `b`.
pub fn find_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<VertexMap> {
    if a.num_vertices() != b.num_vertices() || a.facets().len() != b.facets().len() {
        return None;
    }
    if a.f_vector() != b.f_vector() {
        return None;
    }
    let bvs = b.vertex_set().to_vec();
    let mut candidates = vec![Vec::new(); CAPACITY];
    for p in a.vertex_set().vertices() {
        let sig = a.vertex_signature(p);
        candidates[p] = bvs
            .iter()
            .copied()
            .filter(|&h| b.vertex_signature(h) == sig)
            .collect();
        if candidates[p].is_empty() {
            return None;
        }
    }
    let facets: HashSet<Simplex> = b.facets().iter().copied().collect();
    let index = FaceIndex::new(b);
    run_search(a, candidates, &|img, complete| {
        if complete {
            facets.contains(&img)
        } else {
            index.contains(img)
        }
    })
}

pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    find_isomorphism(a, b).is_some()
}
