//! Minors of simplicial complexes: deletions and contractions that identify two vertices
//! sharing no missing face, recorded as replayable traces.

use std::collections::HashSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::cyclic::{self, CyclicSpec};
use crate::embedding::are_isomorphic;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// All missing `k`-faces of `K`: (k+1)-subsets of the vertex set outside `K` whose proper
/// subsets all lie in `K`. Sorted lexicographically.
pub fn missing_faces(k_complex: &SimplicialComplex, k: usize) -> Vec<Simplex> {
    if k == 0 {
        // the boundary of a vertex is {∅}, and every vertex of V(K) is present
        return Vec::new();
    }
    let index = k_complex.face_index();
    let vertices = k_complex.vertex_set();
    let mut out = Vec::new();
    for g in k_complex.faces(k as isize - 1) {
        let above = g.max().map_or(0, |m| m + 1);
        for w in vertices.vertices().filter(|w| *w >= above) {
            let m = g.with(w);
            if !index.contains(m) && m.vertices().all(|x| index.contains(m.without(x))) {
                out.push(m);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Missing faces of dimension at most `dim K` that contain both `u` and `v`.
fn missing_faces_through(k_complex: &SimplicialComplex, u: usize, v: usize) -> Vec<Simplex> {
    let index = k_complex.face_index();
    let max_size = (k_complex.dim() + 1).max(0) as usize;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if max_size < 2 {
        return out;
    }
    // A missing face M through u and v has M \ {u} a face through v.
    for f in k_complex.facets().iter().filter(|f| f.contains(v) && !f.contains(u)) {
        let rest = f.without(v);
        // |M| = |t| + 2 <= dim K + 1
        for size in 0..=max_size.saturating_sub(2).min(rest.len()) {
            for t in rest.subsets(size) {
                let m = t.with(u).with(v);
                if seen.insert(m)
                    && !index.contains(m)
                    && m.vertices().all(|x| index.contains(m.without(x)))
                {
                    out.push(m);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn check_vertex(k_complex: &SimplicialComplex, v: usize) -> Result<()> {
    if k_complex.vertex_set().contains(v) {
        Ok(())
    } else {
        Err(Error::UnknownVertex(v))
    }
}

/// Whether identifying `u` and `v` is allowed: no missing face of dimension at most `dim K`
/// contains both.
pub fn is_admissible_contraction(k_complex: &SimplicialComplex, u: usize, v: usize) -> Result<bool> {
    check_vertex(k_complex, u)?;
    check_vertex(k_complex, v)?;
    if u == v {
        return Err(Error::PreconditionViolated("contraction of a vertex with itself".into()));
    }
    Ok(missing_faces_through(k_complex, u, v).is_empty())
}

/// `{F ∈ K : u ∉ F} ∪ {F ∪ {v} : F ∪ {u} ∈ K}` without checking admissibility.
pub fn contract_unchecked(k_complex: &SimplicialComplex, u: usize, v: usize) -> SimplicialComplex {
    SimplicialComplex::close_downward(k_complex.facets().iter().map(|f| {
        if f.contains(u) {
            f.without(u).with(v)
        } else {
            *f
        }
    }))
}

/// Identifies `u` into `v`.
pub fn contract(k_complex: &SimplicialComplex, u: usize, v: usize) -> Result<SimplicialComplex> {
    if !is_admissible_contraction(k_complex, u, v)? {
        return Err(Error::NotAdmissible { u, v });
    }
    Ok(contract_unchecked(k_complex, u, v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorStep {
    /// Remove these faces and everything containing them.
    Delete(Vec<Simplex>),
    /// Identify `u` into `v`.
    Contract { u: usize, v: usize },
}

impl fmt::Display for MinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorStep::Delete(faces) => {
                write!(f, "delete")?;
                for s in faces {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            MinorStep::Contract { u, v } => write!(f, "contract {} -> {}", u + 1, v + 1),
        }
    }
}

/// FNV-1a over the sorted facet bitmasks.
pub fn fingerprint(k_complex: &SimplicialComplex) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for f in k_complex.facets() {
        for byte in f.bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTrace {
    pub steps: Vec<MinorStep>,
    pub source: u64,
    pub target: u64,
}

impl MinorTrace {
    pub fn empty(source: &SimplicialComplex) -> Self {
        let fp = fingerprint(source);
        MinorTrace {
            steps: Vec::new(),
            source: fp,
            target: fp,
        }
    }
}

/// Outcome of replaying a trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceVerdict {
    Accepted,
    /// The step at this index could not be applied.
    IllegalStep { index: usize, reason: String },
    /// Every step applied, but the end result is wrong.
    Mismatch(String),
}

impl TraceVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, TraceVerdict::Accepted)
    }
}

/// Applies one step, checking legality.
pub fn apply_step(k_complex: &SimplicialComplex, step: &MinorStep) -> Result<SimplicialComplex> {
    match step {
        MinorStep::Delete(faces) => Ok(k_complex.delete_faces(faces)),
        MinorStep::Contract { u, v } => contract(k_complex, *u, *v),
    }
}

/// Replays `trace` from `source` and checks that the result is isomorphic to `target`.
pub fn verify_trace(
    source: &SimplicialComplex,
    trace: &MinorTrace,
    target: &SimplicialComplex,
) -> TraceVerdict {
    if fingerprint(source) != trace.source {
        return TraceVerdict::Mismatch("source fingerprint differs".into());
    }
    let mut current = source.clone();
    for (index, step) in trace.steps.iter().enumerate() {
        match apply_step(&current, step) {
            Ok(next) => current = next,
            Err(e) => {
                return TraceVerdict::IllegalStep {
                    index,
                    reason: e.to_string(),
                }
            }
        }
    }
    if fingerprint(&current) != trace.target {
        return TraceVerdict::Mismatch("target fingerprint differs".into());
    }
    if !are_isomorphic(&current, target) {
        return TraceVerdict::Mismatch("result is not isomorphic to the target".into());
    }
    TraceVerdict::Accepted
}

/// `(Δ_{2d+2})^{≤d}`: the complete d-skeleton on `2d+3` vertices.
pub fn vkflores_complex(d: usize) -> SimplicialComplex {
    SimplicialComplex::complete_skeleton(2 * d + 3, d as isize)
}

/// `∂C_{2d+1}(n)^{≤d} ∪ {M}`, after checking that `M` is a missing d-face.
pub fn reduction_source(spec: &CyclicSpec, m: Simplex) -> Result<SimplicialComplex> {
    if spec.d().is_multiple_of(2) {
        return Err(Error::DimensionMismatch {
            polytope: spec.d(),
            complex: spec.d() / 2,
        });
    }
    let d = spec.d() / 2;
    if !cyclic::missing_d_faces(spec, d)?.contains(&m) {
        return Err(Error::PreconditionViolated(format!("{m} is not a missing {d}-face")));
    }
    Ok(cyclic::boundary_skeleton(spec, d)?.with_face(m))
}

/// Index `j` of the first consecutive pair `(v_j, v_{j+1})` outside `M`, preferring pairs that
/// avoid both ends of the vertex order.
fn next_pair(vertices: &[usize], m: Simplex) -> Option<usize> {
    let free = |j: usize| !m.contains(vertices[j]) && !m.contains(vertices[j + 1]);
    let last = vertices.len() - 1;
    (1..last.saturating_sub(1))
        .find(|&j| free(j))
        .or_else(|| (0..last).find(|&j| free(j)))
}

/// Contracts consecutive vertices outside `M` of `∂C_{2d+1}(n)^{≤d} ∪ {M}` until `2d+3` remain,
/// which leaves `(Δ_{2d+2})^{≤d}`.
///
/// Each step identifies `v_j` into `v_{j+1}`. Pairs touching the first or last vertex are used
/// only when no interior pair is left; `M = {2,4}` in `C_3(6)` needs one.
pub fn reduce_to_vkflores(spec: &CyclicSpec, m: Simplex) -> Result<MinorTrace> {
    let source = reduction_source(spec, m)?;
    let d = spec.d() / 2;
    let goal = 2 * d + 3;
    let mut current = source.clone();
    let mut steps = Vec::new();
    while current.num_vertices() > goal {
        let vertices = current.vertex_set().to_vec();
        let j = next_pair(&vertices, m).ok_or(Error::NoContractionAvailable {
            remaining: vertices.len(),
        })?;
        let (u, v) = (vertices[j], vertices[j + 1]);
        current = contract(&current, u, v)?;
        steps.push(MinorStep::Contract { u, v });
    }
    if !are_isomorphic(&current, &vkflores_complex(d)) {
        return Err(Error::PreconditionViolated(
            "reduction did not reach the complete skeleton".into(),
        ));
    }
    Ok(MinorTrace {
        steps,
        source: fingerprint(&source),
        target: fingerprint(&current),
    })
}
