//! Cyclic polytopes `C_d(n)`: Gale's evenness condition, faces, and the neighborly f-vector.
//!
//! Vertices are `0..n` internally; `0` and `n-1` play the role of the endpoints `1` and `n`
//! of the moment curve ordering.

use num_rational::Ratio;

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::simplex::{binomial, Simplex, CAPACITY};

/// Default cap on the number of candidate subsets an enumeration may inspect.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSpec {
    d: usize,
    n: usize,
}

impl CyclicSpec {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d < 2 || n <= d || n > CAPACITY {
            return Err(Error::InvalidCyclicSpec { d, n });
        }
        Ok(CyclicSpec { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_subset(&self, s: Simplex) -> Result<()> {
        match s.max() {
            Some(m) if m >= self.n => Err(Error::UnknownVertex(m)),
            _ => Ok(()),
        }
    }
}

/// Maximal runs of consecutive vertices as `(first, length)`.
fn runs(s: Simplex) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut bits = s.bits();
    while bits != 0 {
        let start = bits.trailing_zeros() as usize;
        let len = (!(bits >> start)).trailing_zeros() as usize;
        out.push((start, len));
        bits &= !(((1u128 << (start + len)) - 1) as u64);
    }
    out
}

fn is_interior(spec: &CyclicSpec, (start, len): (usize, usize)) -> bool {
    start != 0 && start + len != spec.n
}

fn gale_valid(spec: &CyclicSpec, s: Simplex) -> bool {
    runs(s)
        .into_iter()
        .all(|r| !is_interior(spec, r) || r.1 % 2 == 0)
}

/// Gale's evenness condition: every maximal run of `S` that avoids both endpoints has even length.
pub fn gale_is_facet(spec: &CyclicSpec, s: Simplex) -> Result<bool> {
    if s.len() != spec.d {
        return Err(Error::BadCardinality {
            expected: spec.d,
            actual: s.len(),
        });
    }
    spec.check_subset(s)?;
    Ok(gale_valid(spec, s))
}

fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// All Gale-valid d-subsets in lexicographic order.
pub fn enumerate_facets(spec: &CyclicSpec, budget: u128) -> Result<Vec<Simplex>> {
    check_budget(binomial(spec.n as u64, spec.d as u64), budget)?;
    let mut out = Vec::new();
    // Depth-first over positions, including before excluding, which yields lexicographic
    // order. `run` is the length of the run ending at the previous position.
    fn rec(
        spec: &CyclicSpec,
        pos: usize,
        chosen: Simplex,
        run: usize,
        run_start: usize,
        out: &mut Vec<Simplex>,
    ) {
        let need = spec.d - chosen.len();
        if pos == spec.n {
            if need == 0 {
                out.push(chosen);
            }
            return;
        }
        if need > spec.n - pos {
            return;
        }
        if need > 0 {
            let start = if run == 0 { pos } else { run_start };
            rec(spec, pos + 1, chosen.with(pos), run + 1, start, out);
        }
        // closing an interior run of odd length is fatal
        if run > 0 && run_start != 0 && run % 2 == 1 {
            return;
        }
        rec(spec, pos + 1, chosen, 0, 0, out);
    }
    rec(spec, 0, Simplex::EMPTY, 0, 0, &mut out);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceMethod {
    /// Witness built by pairing isolated runs with a neighbor, then padding from the top.
    Constructive,
    /// Decided by trying every extension.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceQuery {
    pub subset: Simplex,
    pub is_face: bool,
    /// A Gale facet containing `subset`, when it is a face.
    pub witness: Option<Simplex>,
    pub method: FaceMethod,
}

fn constructive_extension(spec: &CyclicSpec, s: Simplex) -> Option<Simplex> {
    let mut t = s;
    loop {
        let odd = runs(t)
            .into_iter()
            .find(|&r| is_interior(spec, r) && r.1 % 2 == 1);
        match odd {
            None => break,
            Some((start, len)) => {
                t = t.with(start + len);
                if t.len() > spec.d {
                    return None;
                }
            }
        }
    }
    // Adding the largest free vertex only ever grows the run that touches n.
    let mut top = spec.n;
    while t.len() < spec.d {
        top -= 1;
        if !t.contains(top) {
            t = t.with(top);
        }
    }
    Some(t)
}

/// Decides whether `S` is a face of `C_d(n)`: it is iff some Gale facet contains it.
pub fn is_face(spec: &CyclicSpec, s: Simplex) -> Result<FaceQuery> {
    spec.check_subset(s)?;
    if s.len() > spec.d {
        return Ok(FaceQuery {
            subset: s,
            is_face: false,
            witness: None,
            method: FaceMethod::Exhaustive,
        });
    }
    if let Some(w) = constructive_extension(spec, s) {
        debug_assert!(gale_valid(spec, w) && s.is_subset_of(w));
        return Ok(FaceQuery {
            subset: s,
            is_face: true,
            witness: Some(w),
            method: FaceMethod::Constructive,
        });
    }
    Ok(exhaustive_face_query(spec, s))
}

/// The oracle path: every d-superset of `S` is tried.
pub fn exhaustive_face_query(spec: &CyclicSpec, s: Simplex) -> FaceQuery {
    let free = Simplex::range(spec.n).difference(s);
    let witness = if s.len() > spec.d {
        None
    } else {
        free.subsets(spec.d - s.len())
            .map(|extra| s.union(extra))
            .filter(|t| gale_valid(spec, *t))
            .min()
    };
    FaceQuery {
        subset: s,
        is_face: witness.is_some(),
        witness,
        method: FaceMethod::Exhaustive,
    }
}

/// All k-faces, as (k+1)-subsets in lexicographic order.
pub fn k_faces(spec: &CyclicSpec, k: usize, budget: u128) -> Result<Vec<Simplex>> {
    if k >= spec.d {
        return Err(Error::PreconditionViolated(format!(
            "face dimension {k} must be below {}",
            spec.d
        )));
    }
    check_budget(binomial(spec.n as u64, k as u64 + 1), budget)?;
    let mut out = Vec::new();
    for s in Simplex::range(spec.n).subsets(k + 1) {
        if is_face(spec, s)?.is_face {
            out.push(s);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn signed_binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64) as i128
    }
}

/// Face numbers of a simplicial neighborly d-polytope on n vertices (`f_0 .. f_{d-1}`),
/// from the starred sum with the half-weighted middle term for even `d`.
pub fn f_vector_closed_form(spec: &CyclicSpec) -> FVector {
    let d = spec.d as i64;
    let n = spec.n as i64;
    let half = d / 2;
    let mut f = Vec::with_capacity(spec.d);
    for k in 0..d {
        let mut acc = Ratio::from_integer(0i128);
        for i in 0..=half {
            let term = (signed_binomial(d - i, k + 1 - i) + signed_binomial(i, k + 1 - d + i))
                * signed_binomial(n - d - 1 + i, i);
            let weight = if d % 2 == 0 && i == half {
                Ratio::new(1, 2)
            } else {
                Ratio::from_integer(1)
            };
            acc += weight * Ratio::from_integer(term);
        }
        assert!(acc.is_integer(), "starred sum is not integral: {acc}");
        f.push(acc.to_integer() as u64);
    }
    FVector(f)
}

/// Missing d-faces of `C_{2d+1}(n)`: (d+1)-sets of pairwise non-adjacent vertices that avoid
/// both endpoints. Each returned set is checked to be a non-face with all boundary faces present.
pub fn missing_d_faces(spec: &CyclicSpec, d: usize) -> Result<Vec<Simplex>> {
    if spec.d != 2 * d + 1 {
        return Err(Error::DimensionMismatch {
            polytope: spec.d,
            complex: d,
        });
    }
    if spec.n < 2 * d + 3 {
        return Err(Error::PreconditionViolated(format!(
            "need n >= {}, got {}",
            2 * d + 3,
            spec.n
        )));
    }
    let mut out = Vec::new();
    fn rec(n: usize, size: usize, next: usize, chosen: Simplex, out: &mut Vec<Simplex>) {
        if chosen.len() == size {
            out.push(chosen);
            return;
        }
        // interior vertices 1..=n-2 only
        for v in next..n - 1 {
            rec(n, size, v + 2, chosen.with(v), out);
        }
    }
    rec(spec.n, d + 1, 1, Simplex::EMPTY, &mut out);
    for m in &out {
        if is_face(spec, *m)?.is_face {
            return Err(Error::PreconditionViolated(format!("{m} is a face")));
        }
        for b in m.subsets(d) {
            if !is_face(spec, b)?.is_face {
                return Err(Error::PreconditionViolated(format!(
                    "boundary face {b} of {m} missing"
                )));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The boundary complex `∂C_d(n)`, generated by its Gale facets.
pub fn boundary_complex(spec: &CyclicSpec) -> Result<SimplicialComplex> {
    Ok(SimplicialComplex::close_downward(enumerate_facets(
        spec,
        DEFAULT_BUDGET,
    )?))
}

/// `∂C_d(n)^{≤k}`.
pub fn boundary_skeleton(spec: &CyclicSpec, k: usize) -> Result<SimplicialComplex> {
    Ok(boundary_complex(spec)?.skeleton(k as isize))
}
