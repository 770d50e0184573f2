//! Abstract simplicial complexes stored by their maximal faces.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::simplex::{binomial, Simplex, CAPACITY};

/// Face counts `(f_0, .., f_d)`. The complex `{∅}` has the empty f-vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f_i <= C(f_0, i+1)` for every entry.
    pub fn is_consistent(&self) -> bool {
        let f0 = self.get(0);
        self.0
            .iter()
            .enumerate()
            .all(|(i, &f)| (f as u128) <= binomial(f0, i as u64 + 1))
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A hereditary set family, kept as the antichain of its maximal faces.
///
/// Isolated vertices are maximal 0-faces. The complex `{∅}` has no maximal
/// faces listed and dimension -1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    vertex_set: Simplex,
    dim: isize,
}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            facets: Vec::new(),
            vertex_set: Simplex::EMPTY,
            dim: -1,
        }
    }

    /// Hereditary closure of `faces`; the stored facets are the inclusion-maximal inputs.
    pub fn close_downward<I: IntoIterator<Item = Simplex>>(faces: I) -> Self {
        let mut input: Vec<Simplex> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        input.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        input.dedup();
        let mut kept: Vec<Simplex> = Vec::with_capacity(input.len());
        let mut start_of_size = 0;
        let mut current_size = usize::MAX;
        for f in input {
            if f.len() != current_size {
                current_size = f.len();
                start_of_size = kept.len();
            }
            // only strictly larger faces can absorb f
            if kept[..start_of_size].iter().any(|g| f.is_subset_of(*g)) {
                continue;
            }
            kept.push(f);
        }
        Self::from_antichain(kept)
    }

    fn from_antichain(mut facets: Vec<Simplex>) -> Self {
        facets.sort_unstable();
        let vertex_set = facets.iter().fold(Simplex::EMPTY, |a, f| a.union(*f));
        let dim = facets.iter().map(|f| f.dim()).max().unwrap_or(-1);
        SimplicialComplex {
            facets,
            vertex_set,
            dim,
        }
    }

    /// The full simplex on the given vertex set.
    pub fn simplex(face: Simplex) -> Self {
        Self::close_downward([face])
    }

    /// The complete `k`-skeleton on `n` vertices, `(Δ_{n-1})^{≤k}`.
    pub fn complete_skeleton(n: usize, k: isize) -> Self {
        Self::simplex(Simplex::range(n)).skeleton(k)
    }

    /// Maximal faces in lexicographic order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertex_set(&self) -> Simplex {
        self.vertex_set
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set.len()
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.dim() == self.dim)
    }

    pub fn contains(&self, face: Simplex) -> bool {
        face.is_empty() || self.facets.iter().any(|g| face.is_subset_of(*g))
    }

    /// All faces of dimension `k`, sorted lexicographically.
    pub fn faces(&self, k: isize) -> Vec<Simplex> {
        if k < -1 || k > self.dim {
            return Vec::new();
        }
        if k == -1 {
            return vec![Simplex::EMPTY];
        }
        let size = (k + 1) as u64;
        let per_facet: u128 = self
            .facets
            .iter()
            .map(|f| binomial(f.len() as u64, size))
            .sum();
        let by_candidates =
            binomial(self.vertex_set.len() as u64, size).saturating_mul(self.facets.len() as u128);
        let mut out: Vec<Simplex> = if by_candidates < per_facet {
            self.vertex_set
                .subsets(size as usize)
                .filter(|s| self.contains(*s))
                .collect()
        } else {
            let mut seen = HashSet::new();
            for f in &self.facets {
                for s in f.subsets(size as usize) {
                    seen.insert(s);
                }
            }
            seen.into_iter().collect()
        };
        out.sort_unstable();
        out
    }

    /// Every non-empty face, grouped by increasing dimension.
    pub fn all_faces(&self) -> Vec<Simplex> {
        (0..=self.dim).flat_map(|k| self.faces(k)).collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector((0..=self.dim).map(|k| self.faces(k).len() as u64).collect())
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Self {
        if k >= self.dim {
            return self.clone();
        }
        if k < 0 {
            return Self::empty();
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(*f);
            } else {
                faces.extend(f.subsets(size));
            }
        }
        Self::close_downward(faces)
    }

    /// Join with `other`, whose labels are shifted past this complex's largest label.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let offset = self.vertex_set.max().map_or(0, |m| m + 1);
        if let Some(m) = other.vertex_set.max() {
            if m + offset >= CAPACITY {
                return Err(Error::Capacity(m + offset));
            }
        }
        let shifted: Vec<Simplex> = other
            .facets
            .iter()
            .map(|f| Simplex::from_bits(f.bits() << offset))
            .collect();
        if self.facets.is_empty() {
            return Ok(Self::from_antichain(shifted));
        }
        if shifted.is_empty() {
            return Ok(self.clone());
        }
        let mut facets = Vec::with_capacity(self.facets.len() * shifted.len());
        for a in &self.facets {
            for b in &shifted {
                facets.push(a.union(*b));
            }
        }
        Ok(Self::from_antichain(facets))
    }

    /// Adds `face` and its subsets.
    pub fn with_face(&self, face: Simplex) -> Self {
        if self.contains(face) {
            return self.clone();
        }
        Self::close_downward(self.facets.iter().copied().chain([face]))
    }

    /// Removes each listed face together with every face containing it.
    pub fn delete_faces(&self, removed: &[Simplex]) -> Self {
        let mut faces = Vec::new();
        let mut stack: Vec<Simplex> = self.facets.clone();
        let mut seen = HashSet::new();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            if removed.iter().any(|r| r.is_subset_of(f)) {
                // replace by its codimension-one faces
                for v in f.vertices() {
                    let g = f.without(v);
                    if !g.is_empty() {
                        stack.push(g);
                    }
                }
            } else {
                faces.push(f);
            }
        }
        Self::close_downward(faces)
    }

    /// Relabels vertices; fails when the map is not injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        let mut image = Simplex::EMPTY;
        for v in self.vertex_set.vertices() {
            let w = f(v);
            if w >= CAPACITY {
                return Err(Error::Capacity(w));
            }
            if image.contains(w) {
                return Err(Error::DuplicateVertex(w));
            }
            image = image.with(w);
        }
        let facets = self.facets.iter().map(|s| s.map(&f).unwrap()).collect();
        Ok(Self::from_antichain(facets))
    }

    /// Order-preserving relabeling onto `0..num_vertices()`.
    pub fn compacted(&self) -> Self {
        let order = self.vertex_set.to_vec();
        let mut pos = [usize::MAX; CAPACITY];
        for (i, v) in order.iter().enumerate() {
            pos[*v] = i;
        }
        self.relabel(|v| pos[v]).expect("compaction is injective")
    }

    /// Number of maximal faces of each size containing `v`, indexed by dimension.
    pub fn vertex_signature(&self, v: usize) -> Vec<usize> {
        let mut sig = vec![0; (self.dim.max(0) + 1) as usize];
        for f in &self.facets {
            if f.contains(v) {
                sig[f.dim() as usize] += 1;
            }
        }
        sig
    }

    pub fn face_index(&self) -> FaceIndex {
        FaceIndex::new(self)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[")?;
        for (i, s) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s.one_based().replace(' ', ""))?;
        }
        write!(f, "]")
    }
}

/// Hash set of every face, for repeated membership queries.
pub struct FaceIndex {
    faces: HashSet<u64>,
}

impl FaceIndex {
    pub fn new(k: &SimplicialComplex) -> Self {
        let mut faces = HashSet::new();
        faces.insert(0);
        for f in k.facets() {
            // enumerate submasks
            let m = f.bits();
            let mut s = m;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
        }
        FaceIndex { faces }
    }

    pub fn contains(&self, face: Simplex) -> bool {
        self.faces.contains(&face.bits())
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_one_based(v.iter().copied()).unwrap()
    }

    #[test]
    fn closure_of_triangle() {
        let k = SimplicialComplex::close_downward([s(&[1, 2, 3])]);
        assert_eq!(k.f_vector(), FVector(vec![3, 3, 1]));
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn boundary_of_triangle() {
        let k = SimplicialComplex::close_downward([s(&[1, 2]), s(&[2, 3]), s(&[1, 3])]);
        assert_eq!(k.f_vector(), FVector(vec![3, 3]));
        assert!(!k.contains(s(&[1, 2, 3])));
    }

    #[test]
    fn absorption() {
        let k = SimplicialComplex::close_downward([s(&[1, 2]), s(&[1, 2, 3])]);
        assert_eq!(k.facets(), &[s(&[1, 2, 3])]);
    }

    #[test]
    fn empty_input_is_empty_complex() {
        let k = SimplicialComplex::close_downward(Vec::new());
        assert_eq!(k, SimplicialComplex::empty());
        assert_eq!(k.dim(), -1);
        assert!(k.f_vector().is_empty());
        assert!(k.contains(Simplex::EMPTY));
    }

    #[test]
    fn bipyramid_with_equator() {
        // apexes 1 and 5 over the triangle 234, plus the triangle 234 itself
        let mut faces = vec![s(&[2, 3, 4])];
        for e in [[2, 3], [3, 4], [2, 4]] {
            faces.push(s(&[1, e[0], e[1]]));
            faces.push(s(&[5, e[0], e[1]]));
        }
        let k = SimplicialComplex::close_downward(faces);
        assert_eq!(k.f_vector(), FVector(vec![5, 9, 7]));
    }

    #[test]
    fn complete_skeletons() {
        assert_eq!(
            SimplicialComplex::complete_skeleton(7, 2).f_vector(),
            FVector(vec![7, 21, 35])
        );
        assert_eq!(
            SimplicialComplex::complete_skeleton(5, 1).f_vector(),
            FVector(vec![5, 10])
        );
        let full = SimplicialComplex::simplex(Simplex::range(7));
        assert_eq!(full.skeleton(2).f_vector(), FVector(vec![7, 21, 35]));
        assert_eq!(full.skeleton(full.dim()), full);
        assert_eq!(full.skeleton(-1), SimplicialComplex::empty());
    }

    #[test]
    fn joins() {
        let three_points = SimplicialComplex::complete_skeleton(3, 0);
        let k33 = three_points.join(&three_points).unwrap();
        assert_eq!(k33.f_vector(), FVector(vec![6, 9]));
        assert_eq!(k33.dim(), 1);
        let k333 = k33.join(&three_points).unwrap();
        assert_eq!(k333.f_vector(), FVector(vec![9, 27, 27]));
        assert_eq!(k333.dim(), 2);
        let tri = SimplicialComplex::simplex(s(&[1, 2, 3]));
        assert_eq!(tri.join(&SimplicialComplex::empty()).unwrap(), tri);
        assert_eq!(SimplicialComplex::empty().join(&tri).unwrap(), tri);
    }

    #[test]
    fn isolated_vertices_count_in_f0() {
        let k = SimplicialComplex::close_downward([s(&[1, 2]), s(&[4])]);
        assert_eq!(k.f_vector(), FVector(vec![3, 1]));
        assert!(!k.is_pure());
    }

    #[test]
    fn delete_face_removes_cofaces() {
        let full = SimplicialComplex::simplex(s(&[1, 2, 3]));
        let k = full.delete_faces(&[s(&[1, 2])]);
        assert_eq!(k.facets(), &[s(&[1, 3]), s(&[2, 3])]);
    }

    #[test]
    fn face_index_matches_contains() {
        let k = SimplicialComplex::close_downward([s(&[1, 2, 3]), s(&[3, 4]), s(&[5])]);
        let idx = k.face_index();
        for sub in Simplex::range(6).subsets(2).chain(Simplex::range(6).subsets(3)) {
            assert_eq!(idx.contains(sub), k.contains(sub), "{sub}");
        }
        assert_eq!(idx.len() as u64, 1 + k.f_vector().0.iter().sum::<u64>());
    }
}
