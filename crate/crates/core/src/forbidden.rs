//! Nice complexes and the forbidden family `F_d` of joins of complete skeleta.

use crate::combinatorics::partitions;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::minor::vkflores_complex;
use crate::simplex::{binomial, Simplex};

/// Largest ambient size the exhaustive niceness scan accepts.
pub const NICE_MAX_N: usize = 25;

/// A complex judged against the ground set `[ambient_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceSpec {
    pub complex: SimplicialComplex,
    pub ambient_n: usize,
}

impl NiceSpec {
    pub fn new(complex: SimplicialComplex, ambient_n: usize) -> Result<Self> {
        if let Some(m) = complex.vertex_set().max() {
            if m >= ambient_n {
                return Err(Error::UnknownVertex(m));
            }
        }
        Ok(NiceSpec { complex, ambient_n })
    }
}

/// Whether exactly one of `F` and `[n] \ F` is a face, for every `F ⊆ [n]`.
pub fn is_nice(spec: &NiceSpec) -> Result<bool> {
    let n = spec.ambient_n;
    if n > NICE_MAX_N {
        return Err(Error::BudgetExceeded {
            required: 1u128 << n,
            budget: 1u128 << NICE_MAX_N,
        });
    }
    if n == 0 {
        // ∅ is its own complement
        return Ok(false);
    }
    let ground = Simplex::range(n);
    let k = &spec.complex;
    // each pair once: F ranges over subsets missing the top vertex
    for bits in 0..(1u64 << (n - 1)) {
        let f = Simplex::from_bits(bits);
        if k.contains(f) == k.contains(ground.difference(f)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(dim K, n)` for a nice complex, after checking `d + 2 ≤ n ≤ 2d + 3`.
pub fn nice_dimension_bounds(spec: &NiceSpec) -> Result<(isize, usize)> {
    if !is_nice(spec)? {
        return Err(Error::PreconditionViolated("complex is not nice".into()));
    }
    let d = spec.complex.dim();
    let n = spec.ambient_n as isize;
    if d + 2 > n || n > 2 * d + 3 {
        return Err(Error::PreconditionViolated(format!(
            "nice complex of dimension {d} on {n} vertices"
        )));
    }
    Ok((d, spec.ambient_n))
}

/// Every nice complex on `[n]`, for `n ≤ 6`, in no particular order.
///
/// Choosing a face from each complementary pair and propagating down-closure keeps the search
/// to the 2646 solutions at `n = 6`.
pub fn enumerate_nice_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n == 0 || n > 6 {
        return Err(Error::PreconditionViolated(format!(
            "nice complex enumeration needs 1 <= n <= 6, got {n}"
        )));
    }
    #[derive(Clone, Copy, PartialEq, Eq)]
    enum State {
        Open,
        Face,
        NonFace,
    }
    let full = (1u64 << n) - 1;
    let size = 1usize << n;

    // Marks `mask` with `want` and everything forced by it; false on conflict.
    fn assign(state: &mut [State], full: u64, mask: u64, want: State) -> bool {
        let mut work = vec![(mask, want)];
        while let Some((m, w)) = work.pop() {
            match state[m as usize] {
                s if s == w => continue,
                State::Open => state[m as usize] = w,
                _ => return false,
            }
            let partner = if w == State::Face { State::NonFace } else { State::Face };
            work.push((full & !m, partner));
            if w == State::Face {
                for v in 0..64 {
                    if m & (1 << v) != 0 {
                        work.push((m & !(1 << v), State::Face));
                    }
                }
            } else {
                for v in 0..64 {
                    if full & !m & (1 << v) != 0 {
                        work.push((m | (1 << v), State::NonFace));
                    }
                }
            }
        }
        true
    }

    fn rec(state: Vec<State>, full: u64, order: &[u64], out: &mut Vec<SimplicialComplex>) {
        let Some(pos) = order.iter().position(|&m| state[m as usize] == State::Open) else {
            let faces = (0..=full)
                .filter(|&m| state[m as usize] == State::Face)
                .map(Simplex::from_bits);
            out.push(SimplicialComplex::close_downward(faces));
            return;
        };
        let m = order[pos];
        for want in [State::Face, State::NonFace] {
            let mut next = state.clone();
            if assign(&mut next, full, m, want) {
                rec(next, full, &order[pos..], out);
            }
        }
    }

    let mut state = vec![State::Open; size];
    let mut out = Vec::new();
    if assign(&mut state, full, 0, State::Face) {
        let mut order: Vec<u64> = (0..=full).collect();
        order.sort_by_key(|m| m.count_ones());
        rec(state, full, &order, &mut out);
    }
    Ok(out)
}

/// A member of `F_d`: the d-dimensional join of complete skeleta `(Δ_{2d_i+2})^{≤d_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdMember {
    /// The `d_i`, weakly decreasing; factor `i` occupies the `i`-th block of labels.
    pub parts: Vec<usize>,
    pub complex: SimplicialComplex,
    pub hypergraph: UniformHypergraph,
}

impl FdMember {
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut complex = SimplicialComplex::empty();
        for &p in parts {
            complex = complex.join(&vkflores_complex(p))?;
        }
        let hypergraph = UniformHypergraph::from_complex(&complex)?;
        Ok(FdMember {
            parts: parts.to_vec(),
            complex,
            hypergraph,
        })
    }

    pub fn d(&self) -> usize {
        self.parts.iter().sum::<usize>() + self.parts.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.hypergraph.num_edges()
    }

    /// `Π C(2d_i + 3, d_i + 1)`.
    pub fn expected_edges(&self) -> u128 {
        self.parts
            .iter()
            .map(|&p| binomial(2 * p as u64 + 3, p as u64 + 1))
            .product()
    }

    pub fn is_complete_partite(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// `K_5`, `K_{3,3}`, `K^{(3)}_{3,3,3}` and so on.
    pub fn name(&self) -> String {
        if self.is_complete_partite() {
            let threes = vec!["3"; self.parts.len()].join(",");
            if self.parts.len() == 2 {
                "K_{3,3}".into()
            } else {
                format!("K^({})_{{{threes}}}", self.parts.len())
            }
        } else if self.parts.len() == 1 && self.parts[0] == 1 {
            "K_5".into()
        } else {
            self.parts
                .iter()
                .map(|&p| format!("(D_{})^<={p}", 2 * p + 2))
                .collect::<Vec<_>>()
                .join(" * ")
        }
    }
}

/// One member per partition of `d + 1`, a part `p` contributing the factor with `d_i = p - 1`.
pub fn generate_fd(d: usize) -> Result<Vec<FdMember>> {
    if d == 0 {
        return Err(Error::PreconditionViolated("F_d needs d >= 1".into()));
    }
    partitions(d + 1)
        .into_iter()
        .map(|parts| {
            let dims: Vec<usize> = parts.iter().map(|p| p - 1).collect();
            FdMember::from_parts(&dims)
        })
        .collect()
}

/// A proper `k`-colouring of the vertices such that every edge meets each class at most once,
/// or `None`. Vertices are tried in order of decreasing co-degree.
pub fn is_k_partite(h: &UniformHypergraph, k: usize) -> Option<Vec<usize>> {
    let adj = h.co_neighbors();
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
    let mut colour = vec![usize::MAX; h.n()];

    fn rec(
        i: usize,
        order: &[usize],
        adj: &[Vec<u32>],
        k: usize,
        colour: &mut [usize],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // a fresh colour beyond the used ones is interchangeable with any other fresh one
        let used = colour.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            if adj[v].iter().all(|&w| colour[w as usize] != c) {
                colour[v] = c;
                if rec(i + 1, order, adj, k, colour) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }

    if k == 0 {
        return if h.n() == 0 { Some(Vec::new()) } else { None };
    }
    rec(0, &order, &adj, k, &mut colour).then_some(colour)
}

/// Largest vertex count and smallest edge count over `F_d`, both attained by the complete
/// `(d+1)`-partite member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyExtremes {
    pub max_vertices: usize,
    pub min_edges: usize,
    pub witness: FdMember,
}

pub fn family_extremes(d: usize) -> Result<FamilyExtremes> {
    let members = generate_fd(d)?;
    let max_vertices = members.iter().map(|m| m.num_vertices()).max().unwrap();
    let min_edges = members.iter().map(|m| m.num_edges()).min().unwrap();
    let witness = members
        .iter()
        .find(|m| m.is_complete_partite())
        .cloned()
        .expect("the all-zero partition is always present");
    for m in &members {
        if !m.is_complete_partite()
            && (m.num_vertices() >= max_vertices || m.num_edges() <= min_edges)
        {
            return Err(Error::PreconditionViolated(format!(
                "{} ties or beats the complete partite member",
                m.name()
            )));
        }
    }
    if witness.num_vertices() != max_vertices || witness.num_edges() != min_edges {
        return Err(Error::PreconditionViolated(
            "complete partite member is not extremal".into(),
        ));
    }
    Ok(FamilyExtremes {
        max_vertices,
        min_edges,
        witness,
    })
}
