//! Shifted complexes, the shifted cyclic model `Δ(d,n)`, and f-vector probes for the
//! embeddability conjectures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::cyclic::{f_vector_closed_form, CyclicSpec, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::simplex::{binomial, Simplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedWitness {
    pub verdict: bool,
    /// `(F, i, j)` with `F ∈ K`, `i ∈ F`, `j < i` and `(F \ {i}) ∪ {j} ∉ K`.
    pub counterexample: Option<(Simplex, usize, usize)>,
}

/// Exhaustive shiftedness test. Checking maximal faces is enough: a failing exchange on a
/// face fails on any facet containing it. Facets are scanned by decreasing size, then
/// lexicographically; `i` ascending and `j` descending.
pub fn is_shifted(k: &SimplicialComplex) -> Result<ShiftedWitness> {
    let n = k.num_vertices();
    if k.vertex_set() != Simplex::range(n) {
        let gap = (0..).find(|v| !k.vertex_set().contains(*v)).unwrap();
        return Err(Error::NotInitialSegment(gap));
    }
    let mut facets = k.facets().to_vec();
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    for f in facets {
        for i in f.vertices() {
            for j in (0..i).rev().filter(|j| !f.contains(*j)) {
                if !k.contains(f.without(i).with(j)) {
                    return Ok(ShiftedWitness {
                        verdict: false,
                        counterexample: Some((f, i, j)),
                    });
                }
            }
        }
    }
    Ok(ShiftedWitness {
        verdict: true,
        counterexample: None,
    })
}

/// `Δ(d,n)`: the d-sets `S ⊆ [n]` with `k ∉ S ⇒ [k+1, d−k+2] ⊆ S` (1-based) as facets.
pub fn delta_dn(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d == 0 || n < d {
        return Err(Error::PreconditionViolated(format!("Δ(d,n) needs n >= d >= 1, got d = {d}, n = {n}")));
    }
    let required = binomial(n as u64, d as u64);
    if required > DEFAULT_BUDGET {
        return Err(Error::BudgetExceeded {
            required,
            budget: DEFAULT_BUDGET,
        });
    }
    let ground = Simplex::range(n);
    // 1-based: k ∉ S forces every label in [k+1, d-k+2]
    let ok = |s: Simplex| {
        (1..=n as i64).all(|k| {
            s.contains(k as usize - 1)
                || (k + 1..=d as i64 - k + 2).all(|v| v <= n as i64 && s.contains(v as usize - 1))
        })
    };
    Ok(SimplicialComplex::close_downward(ground.subsets(d).filter(|s| ok(*s))))
}

/// Result of the `Δ(5,n)` triangle count bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta5Report {
    pub f1: u64,
    pub f2: u64,
    /// `4 f_1 − 8`
    pub bound: i64,
    pub holds: bool,
    /// largest number of triangles `mab` sent to one edge `ab`
    pub max_preimages: usize,
    /// triangles sent to the edges `12` and `13`
    pub preimages_of_12_13: usize,
}

fn check_delta5_premises(k: &SimplicialComplex) -> Result<()> {
    if k.dim() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "complex has dimension {}, not 2",
            k.dim()
        )));
    }
    if !is_shifted(k)?.verdict {
        return Err(Error::PreconditionViolated("complex is not shifted".into()));
    }
    let n = k.num_vertices().max(5);
    let host = delta_dn(5, n)?;
    if let Some(f) = k.facets().iter().find(|f| !host.contains(**f)) {
        return Err(Error::PreconditionViolated(format!("{f} is not a face of Δ(5,{n})")));
    }
    Ok(())
}

/// `f_2(K) ≤ 4 f_1(K) − 8` for a 2-dimensional shifted `K ⊆ Δ(5,n)`, together with the counts
/// behind it: each triangle `mab` (`m` its minimum) maps to the edge `ab`.
pub fn delta5_inequality(k: &SimplicialComplex) -> Result<Delta5Report> {
    check_delta5_premises(k)?;
    let f = k.f_vector();
    let (f1, f2) = (f.get(1), f.get(2));
    let mut preimages = std::collections::HashMap::new();
    for t in k.faces(2) {
        let m = t.min().unwrap();
        let ab = t.without(m);
        debug_assert!(k.contains(ab));
        *preimages.entry(ab).or_insert(0usize) += 1;
    }
    let max_preimages = preimages.values().copied().max().unwrap_or(0);
    let e12 = Simplex::from_bits(0b011);
    let e13 = Simplex::from_bits(0b101);
    let preimages_of_12_13 =
        preimages.get(&e12).copied().unwrap_or(0) + preimages.get(&e13).copied().unwrap_or(0);
    let bound = 4 * f1 as i64 - 8;
    Ok(Delta5Report {
        f1,
        f2,
        bound,
        holds: (f2 as i64) <= bound && max_preimages <= 4 && preimages_of_12_13 == 0,
        max_preimages,
        preimages_of_12_13,
    })
}

/// The chain `f_2(K) = f_2(Δ(5,n)) + 1 ≤ 4 f_1(Δ(5,n)) − 7 < 4 f_1(K)` for
/// `K = Δ(5,n)^{≤2} ∪ {567}`, which is shifted but not inside `Δ(5,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub n: usize,
    pub shifted: bool,
    pub f1: u64,
    pub f2: u64,
    pub f1_unchanged: bool,
    pub holds: bool,
}

pub fn delta5_extension_check(n: usize) -> Result<ExtensionReport> {
    if n < 7 {
        return Err(Error::PreconditionViolated(format!("{{567}} needs n >= 7, got {n}")));
    }
    let base = delta_dn(5, n)?.skeleton(2);
    let k = base.with_face(Simplex::from_vertices([4, 5, 6])?);
    let (fb, fk) = (base.f_vector(), k.f_vector());
    let f1_unchanged = fk.get(1) == fb.get(1);
    let holds = fk.get(2) == fb.get(2) + 1
        && (fk.get(2) as i64) <= 4 * fb.get(1) as i64 - 7
        && fk.get(2) < 4 * fk.get(1);
    Ok(ExtensionReport {
        n,
        shifted: is_shifted(&k)?.verdict,
        f1: fk.get(1),
        f2: fk.get(2),
        f1_unchanged,
        holds,
    })
}

/// A maximal face whose removal leaves a shifted complex: nothing in `K` shifts down onto it.
fn removable(k: &SimplicialComplex, f: Simplex, n: usize) -> bool {
    f.vertices().all(|j| {
        (j + 1..n)
            .filter(|i| !f.contains(*i))
            .all(|i| !k.contains(f.without(j).with(i)))
    })
}

/// Shifted 2-dimensional subcomplexes of `Δ(5,n)^{≤2}`, each obtained by deleting a random
/// number of removable maximal faces. Every sample is re-checked with [`is_shifted`].
pub fn sample_shifted_subcomplexes(n: usize, count: usize, seed: u64) -> Result<Vec<SimplicialComplex>> {
    let start = delta_dn(5, n)?.skeleton(2);
    let total_faces = start.all_faces().len();
    let mut out = Vec::with_capacity(count);
    for stream in 0..count as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let steps = rng.gen_range(0..total_faces);
        let mut k = start.clone();
        for _ in 0..steps {
            let nv = k.num_vertices();
            let candidates: Vec<Simplex> = k
                .facets()
                .iter()
                .copied()
                .filter(|f| removable(&k, *f, nv))
                .collect();
            let Some(&f) = candidates.choose(&mut rng) else { break };
            let next = k.delete_faces(&[f]);
            if next.dim() < 2 {
                break;
            }
            k = next;
        }
        if !is_shifted(&k)?.verdict {
            return Err(Error::PreconditionViolated(format!("sample {stream} lost shiftedness")));
        }
        out.push(k);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub k: usize,
    pub f_k: u64,
    pub bound: u64,
    pub pass: bool,
}

/// Compares `f_k(K)` with `f_k(C_{r+1}(n))`, `n = |V(K)|`, for every `k ≤ dim K`. When
/// `n ≤ r + 1` the cyclic polytope does not exist and the bound is `C(n, k+1)`.
pub fn conjecture_bound_check(k: &SimplicialComplex, r: usize) -> Result<Vec<BoundRow>> {
    let d = k.dim();
    if d < 1 || (r as isize) < d || (r as isize) > 2 * d {
        return Err(Error::PreconditionViolated(format!(
            "need dim K <= r <= 2 dim K, got dim K = {d}, r = {r}"
        )));
    }
    let n = k.num_vertices();
    let f = k.f_vector();
    let closed = if n > r + 1 {
        Some(f_vector_closed_form(&CyclicSpec::new(r + 1, n)?))
    } else {
        None
    };
    Ok((0..=d as usize)
        .map(|i| {
            let bound = match &closed {
                Some(c) => c.get(i),
                None => binomial(n as u64, i as u64 + 1) as u64,
            };
            BoundRow {
                k: i,
                f_k: f.get(i),
                bound,
                pass: f.get(i) <= bound,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalaiProbe {
    pub f0: u64,
    pub f1: u64,
    pub f2: u64,
    pub four_f1: u64,
    /// `f_2 ≥ 4 f_1`
    pub hypothesis: bool,
    /// `4 f_1 − 10 f_0 + 20`
    pub strengthened_rhs: i64,
    pub strengthened: bool,
}

pub fn kalai_f12_probe(k: &SimplicialComplex) -> Result<KalaiProbe> {
    if k.dim() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "complex has dimension {}, not 2",
            k.dim()
        )));
    }
    let f = k.f_vector();
    let (f0, f1, f2) = (f.get(0), f.get(1), f.get(2));
    let strengthened_rhs = 4 * f1 as i64 - 10 * f0 as i64 + 20;
    Ok(KalaiProbe {
        f0,
        f1,
        f2,
        four_f1: 4 * f1,
        hypothesis: f2 >= 4 * f1,
        strengthened_rhs,
        strengthened: f2 as i64 >= strengthened_rhs,
    })
}

/// Boundary of the bipyramid over the triangle `123` with apexes `4`, `5`, plus the triangle
/// `123` itself.
pub fn bipyramid_with_equator() -> SimplicialComplex {
    let t = |a: usize, b: usize, c: usize| Simplex::from_one_based([a, b, c]).unwrap();
    SimplicialComplex::close_downward([
        t(1, 2, 3),
        t(1, 2, 4),
        t(2, 3, 4),
        t(1, 3, 4),
        t(1, 2, 5),
        t(2, 3, 5),
        t(1, 3, 5),
    ])
}
