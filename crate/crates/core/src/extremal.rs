//! Extremal machinery for uniform hypergraphs: copy search, exact `ex(n, F)` on tiny instances,
//! and the random deletion construction of dense `F`-free hypergraphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{combinations, permutations};
use crate::error::{Error, Result};
use crate::forbidden::generate_fd;
use crate::hypergraph::UniformHypergraph;
use crate::simplex::binomial;

/// Upper limit on distinct copies collected by [`enumerate_copies`] during a construction.
pub const COPY_CAP: usize = 10_000_000;
/// Largest number of candidate edges [`exact_ex`] searches over.
pub const EXACT_MAX_EDGES: usize = 30;

const MAX_UNIFORMITY: usize = 8;
const MAX_VERTICES: usize = 1 << 16;

/// Sorted edge packed into 16-bit lanes.
fn edge_key(e: &[u32]) -> u128 {
    e.iter().fold(0u128, |acc, &v| (acc << 16) | v as u128)
}

fn key_to_edge(key: u128, k: usize) -> Vec<u32> {
    (0..k)
        .rev()
        .map(|i| ((key >> (16 * i)) & 0xffff) as u32)
        .collect()
}

fn check_packable(h: &UniformHypergraph) -> Result<()> {
    if h.k() > MAX_UNIFORMITY || h.n() > MAX_VERTICES {
        return Err(Error::PreconditionViolated(format!(
            "copy search supports k <= {MAX_UNIFORMITY} and n <= {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Backtracking search for injections carrying pattern edges onto host edges.
struct Matcher<'a> {
    host_keys: HashSet<u128>,
    host_adj: Vec<Vec<u32>>,
    host_deg: Vec<usize>,
    pattern: &'a UniformHypergraph,
    pat_deg: Vec<usize>,
    /// non-isolated pattern vertices in search order
    order: Vec<usize>,
    /// an earlier neighbour of each position, used to draw candidates
    anchor: Vec<Option<usize>>,
    /// pattern edges whose last vertex in `order` sits at each position
    closing: Vec<Vec<usize>>,
    host_n: usize,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a UniformHypergraph, host: &UniformHypergraph) -> Result<Self> {
        if pattern.k() != host.k() {
            return Err(Error::UniformityMismatch(pattern.k(), host.k()));
        }
        check_packable(pattern)?;
        check_packable(host)?;
        let pat_adj = pattern.co_neighbors();
        let pat_deg = pattern.degrees();
        let support: Vec<usize> = (0..pattern.n()).filter(|&v| pat_deg[v] > 0).collect();
        let mut order: Vec<usize> = Vec::with_capacity(support.len());
        let mut pos = vec![usize::MAX; pattern.n()];
        while order.len() < support.len() {
            let next = support
                .iter()
                .copied()
                .filter(|&v| pos[v] == usize::MAX)
                .max_by_key(|&v| {
                    let links = pat_adj[v]
                        .iter()
                        .filter(|&&w| pos[w as usize] != usize::MAX)
                        .count();
                    (links, pat_deg[v], std::cmp::Reverse(v))
                })
                .unwrap();
            pos[next] = order.len();
            order.push(next);
        }
        let anchor = order
            .iter()
            .map(|&v| {
                pat_adj[v]
                    .iter()
                    .map(|&w| w as usize)
                    .filter(|&w| pos[w] < pos[v])
                    .min_by_key(|&w| pos[w])
            })
            .collect();
        let mut closing = vec![Vec::new(); order.len()];
        for (i, e) in pattern.edges().iter().enumerate() {
            let last = e.iter().map(|&v| pos[v as usize]).max().unwrap();
            closing[last].push(i);
        }
        Ok(Matcher {
            host_keys: host.edges().iter().map(|e| edge_key(e)).collect(),
            host_adj: host.co_neighbors(),
            host_deg: host.degrees(),
            pattern,
            pat_deg,
            order,
            anchor,
            closing,
            host_n: host.n(),
        })
    }

    fn isolated(&self) -> usize {
        self.pattern.n() - self.order.len()
    }

    /// Calls `visit` with each complete image (indexed by pattern vertex, unset entries for
    /// isolated vertices) until it returns false. `forced[i]` pins position `i`.
    fn search(&self, forced: &[Option<usize>], visit: &mut dyn FnMut(&[usize]) -> bool) {
        if self.pattern.num_edges() > self.host_keys.len() || self.pattern.n() > self.host_n {
            return;
        }
        let mut image = vec![usize::MAX; self.pattern.n()];
        let mut used = vec![false; self.host_n];
        self.rec(0, forced, &mut image, &mut used, visit);
    }

    fn rec(
        &self,
        i: usize,
        forced: &[Option<usize>],
        image: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == self.order.len() {
            return visit(image);
        }
        let p = self.order[i];
        let all: Vec<u32>;
        let candidates: &[u32] = match (forced.get(i).copied().flatten(), self.anchor[i]) {
            (Some(h), _) => {
                all = vec![h as u32];
                &all
            }
            (None, Some(a)) => &self.host_adj[image[a]],
            (None, None) => {
                all = (0..self.host_n as u32).collect();
                &all
            }
        };
        let mut buf = Vec::with_capacity(self.pattern.k());
        for &h in candidates {
            let h = h as usize;
            if used[h] || self.host_deg[h] < self.pat_deg[p] {
                continue;
            }
            image[p] = h;
            let ok = self.closing[i].iter().all(|&ei| {
                buf.clear();
                buf.extend(self.pattern.edges()[ei].iter().map(|&v| image[v as usize] as u32));
                buf.sort_unstable();
                self.host_keys.contains(&edge_key(&buf))
            });
            if ok {
                used[h] = true;
                let go_on = self.rec(i + 1, forced, image, used, visit);
                used[h] = false;
                if !go_on {
                    image[p] = usize::MAX;
                    return false;
                }
            }
            image[p] = usize::MAX;
        }
        true
    }

    fn image_edges(&self, image: &[usize]) -> Vec<u128> {
        let mut keys: Vec<u128> = self
            .pattern
            .edges()
            .iter()
            .map(|e| {
                let mut img: Vec<u32> = e.iter().map(|&v| image[v as usize] as u32).collect();
                img.sort_unstable();
                edge_key(&img)
            })
            .collect();
        keys.sort_unstable();
        keys
    }
}

/// An injective map `V(pattern) → V(host)` sending edges to edges, indexed by pattern vertex.
pub fn contains_copy(
    host: &UniformHypergraph,
    pattern: &UniformHypergraph,
) -> Result<Option<Vec<usize>>> {
    let m = Matcher::new(pattern, host)?;
    let mut found = None;
    m.search(&[], &mut |image| {
        found = Some(image.to_vec());
        false
    });
    Ok(found.map(|mut image| {
        // isolated pattern vertices take the smallest unused host vertices
        let mut used = vec![false; host.n()];
        for &h in image.iter().filter(|&&h| h != usize::MAX) {
            used[h] = true;
        }
        let mut free = (0..host.n()).filter(|&h| !used[h]);
        for slot in image.iter_mut().filter(|h| **h == usize::MAX) {
            *slot = free.next().expect("host has at least as many vertices");
        }
        image
    }))
}

/// Every distinct copy of `pattern` in `host` as its sorted image edge list, in sorted order.
/// Fails once more than `cap` copies turn up.
pub fn enumerate_copies(
    host: &UniformHypergraph,
    pattern: &UniformHypergraph,
    cap: usize,
) -> Result<Vec<Vec<Vec<u32>>>> {
    let m = Matcher::new(pattern, host)?;
    let keys = copy_keys(&m, cap)?;
    let k = pattern.k();
    Ok(keys
        .into_iter()
        .map(|c| c.into_iter().map(|key| key_to_edge(key, k)).collect())
        .collect())
}

fn copy_keys(m: &Matcher<'_>, cap: usize) -> Result<Vec<Vec<u128>>> {
    let mut seen: HashSet<Vec<u128>> = HashSet::new();
    let mut overflow = false;
    m.search(&[], &mut |image| {
        seen.insert(m.image_edges(image));
        if seen.len() > cap {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        return Err(Error::BudgetExceeded {
            required: cap as u128 + 1,
            budget: cap as u128,
        });
    }
    let mut out: Vec<Vec<u128>> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Number of distinct subhypergraphs of `host` isomorphic to `pattern`.
pub fn count_copies(host: &UniformHypergraph, pattern: &UniformHypergraph, cap: usize) -> Result<usize> {
    let m = Matcher::new(pattern, host)?;
    Ok(copy_keys(&m, cap)?.len())
}

/// `|Aut H|`, by counting orbits along a stabiliser chain.
pub fn automorphism_count(h: &UniformHypergraph) -> Result<u128> {
    let m = Matcher::new(h, h)?;
    let mut forced: Vec<Option<usize>> = Vec::new();
    let mut total: u128 = 1;
    for &v in &m.order {
        let mut orbit = 0u128;
        for w in 0..h.n() {
            forced.push(Some(w));
            let mut exists = false;
            m.search(&forced, &mut |_| {
                exists = true;
                false
            });
            forced.pop();
            orbit += exists as u128;
        }
        total *= orbit;
        forced.push(Some(v));
    }
    // isolated vertices permute freely
    total *= (1..=m.isolated() as u128).product::<u128>();
    Ok(total)
}

/// A finite family of k-graphs with the size parameters the deletion method needs.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub k: usize,
    pub members: Vec<UniformHypergraph>,
    pub names: Vec<String>,
    /// largest member vertex count
    pub n0: usize,
    /// smallest member edge count
    pub m0: usize,
    automorphisms: Vec<u128>,
}

impl FamilySpec {
    pub fn new(members: Vec<UniformHypergraph>) -> Result<Self> {
        let names = (1..=members.len()).map(|i| format!("F{i}")).collect();
        Self::named(members, names)
    }

    pub fn named(members: Vec<UniformHypergraph>, names: Vec<String>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::PreconditionViolated("empty family".into()))?;
        let k = first.k();
        if let Some(bad) = members.iter().find(|m| m.k() != k) {
            return Err(Error::UniformityMismatch(k, bad.k()));
        }
        let automorphisms = members
            .iter()
            .map(automorphism_count)
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec {
            k,
            n0: members.iter().map(|m| m.n()).max().unwrap(),
            m0: members.iter().map(|m| m.num_edges()).min().unwrap(),
            members,
            names,
            automorphisms,
        })
    }

    /// `F_d` as (d+1)-graphs.
    pub fn forbidden(d: usize) -> Result<Self> {
        let fd = generate_fd(d)?;
        let names = fd.iter().map(|m| m.name()).collect();
        Self::named(fd.into_iter().map(|m| m.hypergraph).collect(), names)
    }

    pub fn automorphisms(&self) -> &[u128] {
        &self.automorphisms
    }

    /// `C_F = 1 / |Aut F|`: labeled copies of `F` on `n(F)` vertices divided by `n(F)!`.
    pub fn copy_constant(&self, i: usize) -> f64 {
        1.0 / self.automorphisms[i] as f64
    }

    pub fn max_copy_constant(&self) -> f64 {
        (0..self.members.len())
            .map(|i| self.copy_constant(i))
            .fold(0.0, f64::max)
    }
}

/// Whether `host` contains no copy of any member.
pub fn is_family_free(host: &UniformHypergraph, family: &FamilySpec) -> Result<bool> {
    for m in &family.members {
        if contains_copy(host, m)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n^(k − 1/l^(k−1))`.
pub fn erdos_bound(n: f64, k: u32, l: u32) -> f64 {
    n.powf(k as f64 - 1.0 / (l as f64).powi(k as i32 - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactEx {
    pub value: usize,
    pub witness: UniformHypergraph,
    /// canonical search nodes visited
    pub nodes: u64,
}

/// `ex(n, F)` by orderly generation over edge subsets of `K^(k)_n`.
///
/// Only graphs whose edge mask is lexicographically largest among its relabelings are expanded,
/// and only by edges after their last one; dropping the last edge of such a mask leaves another
/// one, so every isomorphism class is reached exactly once.
pub fn exact_ex(n: usize, family: &FamilySpec, budget: u64) -> Result<ExactEx> {
    let k = family.k;
    let all: Vec<Vec<u32>> = combinations(n, k)
        .map(|e| e.into_iter().map(|v| v as u32).collect())
        .collect();
    let total = all.len();
    if total > EXACT_MAX_EDGES {
        return Err(Error::BudgetExceeded {
            required: total as u128,
            budget: EXACT_MAX_EDGES as u128,
        });
    }
    let index_of = |e: &[u32]| all.binary_search_by(|x| x.as_slice().cmp(e)).unwrap();
    let edge_perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|pi| {
            all.iter()
                .map(|e| {
                    let mut img: Vec<u32> = e.iter().map(|&v| pi[v as usize] as u32).collect();
                    img.sort_unstable();
                    index_of(&img)
                })
                .collect()
        })
        .collect();
    // edge 0 is the most significant position
    let weight = |mask: u32| mask.reverse_bits() >> (32 - total.max(1));
    let is_canonical = |mask: u32| {
        let w = weight(mask);
        edge_perms.iter().all(|p| {
            let mut img = 0u32;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                img |= 1 << p[i];
                m &= m - 1;
            }
            weight(img) <= w
        })
    };
    let to_graph = |mask: u32| {
        UniformHypergraph::new(
            n,
            k,
            (0..total).filter(|i| mask & (1 << i) != 0).map(|i| all[i].clone()),
        )
        .expect("edges come from K_n")
    };

    struct State {
        best: u32,
        best_len: u32,
        nodes: u64,
        exhausted: bool,
    }
    fn rec(
        mask: u32,
        next: usize,
        total: usize,
        st: &mut State,
        budget: u64,
        accept: &dyn Fn(u32) -> bool,
    ) {
        for e in next..total {
            if st.exhausted {
                return;
            }
            // even taking every remaining edge cannot beat the incumbent
            if mask.count_ones() as usize + (total - e) <= st.best_len as usize {
                return;
            }
            let child = mask | (1 << e);
            st.nodes += 1;
            if st.nodes > budget {
                st.exhausted = true;
                return;
            }
            if accept(child) {
                if child.count_ones() > st.best_len {
                    st.best_len = child.count_ones();
                    st.best = child;
                }
                rec(child, e + 1, total, st, budget, accept);
            }
        }
    }

    let accept = |mask: u32| -> bool {
        if !is_canonical(mask) {
            return false;
        }
        is_family_free(&to_graph(mask), family).expect("uniformity checked")
    };
    let mut st = State {
        best: 0,
        best_len: 0,
        nodes: 0,
        exhausted: false,
    };
    rec(0, 0, total, &mut st, budget, &accept);
    if st.exhausted {
        return Err(Error::BudgetExceeded {
            required: st.nodes as u128,
            budget: budget as u128,
        });
    }
    Ok(ExactEx {
        value: st.best_len as usize,
        witness: to_graph(st.best),
        nodes: st.nodes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeletionParameters {
    pub c1: f64,
    pub c2: f64,
    /// `8 · k! · l(l−1) · max C_F` with `l = |F| + 1`
    pub c_star: f64,
}

/// `c2 = (n0 − k)/(m0 − 1)`, and `c1` at half of `(1/C*)^(1/(m0−1))`.
pub fn deletion_parameters(family: &FamilySpec) -> Result<DeletionParameters> {
    let (k, n0, m0) = (family.k, family.n0, family.m0);
    if m0 <= 1 {
        return Err(Error::PreconditionViolated(format!("m0 = {m0} must exceed 1")));
    }
    if n0 >= k * m0 {
        return Err(Error::PreconditionViolated(format!(
            "n0 = {n0} must be below k*m0 = {}",
            k * m0
        )));
    }
    let l = (family.members.len() + 1) as f64;
    let k_fact: f64 = (1..=k).map(|i| i as f64).product();
    let c_star = 8.0 * k_fact * l * (l - 1.0) * family.max_copy_constant();
    let c2 = (n0 - k) as f64 / (m0 - 1) as f64;
    let c1 = 0.5 * (1.0 / c_star).powf(1.0 / (m0 - 1) as f64);
    Ok(DeletionParameters { c1, c2, c_star })
}

/// `G^(k)(n, p)`: each k-subset independently with probability `p`. The generator is
/// ChaCha8 seeded by `seed` on stream `stream`, so draws are reproducible in any order.
pub fn sample_random_hypergraph(n: usize, k: usize, p: f64, seed: u64, stream: u64) -> UniformHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let edges: Vec<Vec<u32>> = combinations(n, k)
        .filter(|_| rng.gen::<f64>() < p)
        .map(|e| e.into_iter().map(|v| v as u32).collect())
        .collect();
    UniformHypergraph::new(n, k, edges).expect("k-subsets of [n]")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub c1: f64,
    pub c2: f64,
    pub expected_edges: f64,
    pub edges_before: usize,
    pub copies_found: usize,
    pub copies_destroyed: usize,
    pub edges_after: usize,
    pub seed: u64,
    /// generator stream of the accepted draw
    pub stream: u64,
    pub verified_free: bool,
}

/// Draws rejected for landing outside `(E/2, 3E/2)` before one is kept anyway.
const MAX_REDRAWS: u64 = 64;

/// Samples `G^(k)(n, c1·n^(−c2))`, removes one edge from every copy of every member that is
/// still intact, and re-verifies freeness.
pub fn random_free_construction(
    n: usize,
    family: &FamilySpec,
    seed: u64,
) -> Result<(UniformHypergraph, ConstructionReport)> {
    let params = deletion_parameters(family)?;
    let k = family.k;
    let p = (params.c1 * (n as f64).powf(-params.c2)).min(1.0);
    let expected_edges = binomial(n as u64, k as u64) as f64 * p;

    let mut stream = 0;
    let sample = loop {
        let g = sample_random_hypergraph(n, k, p, seed, stream);
        let e = g.num_edges() as f64;
        let typical = e > expected_edges / 2.0 && e < 1.5 * expected_edges;
        // tiny expectations are allowed to be atypical
        if typical || expected_edges < 8.0 || stream + 1 >= MAX_REDRAWS {
            break g;
        }
        stream += 1;
    };

    let mut copies = Vec::new();
    for m in &family.members {
        let matcher = Matcher::new(m, &sample)?;
        copies.extend(copy_keys(&matcher, COPY_CAP)?);
    }
    let mut present: HashSet<u128> = sample.edges().iter().map(|e| edge_key(e)).collect();
    let mut destroyed = 0;
    for c in &copies {
        if c.iter().all(|key| present.contains(key)) {
            present.remove(&c[0]);
            destroyed += 1;
        }
    }
    let mut kept: Vec<u128> = present.into_iter().collect();
    kept.sort_unstable();
    let result = UniformHypergraph::new(n, k, kept.into_iter().map(|key| key_to_edge(key, k)))?;
    let verified_free = is_family_free(&result, family)?;
    let report = ConstructionReport {
        n,
        k,
        p,
        c1: params.c1,
        c2: params.c2,
        expected_edges,
        edges_before: sample.num_edges(),
        copies_found: copies.len(),
        copies_destroyed: destroyed,
        edges_after: result.num_edges(),
        seed,
        stream,
        verified_free,
    };
    Ok((result, report))
}

/// Independent constructions for each seed, computed in parallel.
pub fn random_free_constructions(
    n: usize,
    family: &FamilySpec,
    seeds: &[u64],
) -> Result<Vec<ConstructionReport>> {
    seeds
        .par_iter()
        .map(|&s| random_free_construction(n, family, s).map(|(_, r)| r))
        .collect()
}

/// Markov: `P(X ≥ a) ≤ E(X)/a` for non-negative `X`.
pub fn markov_bound(mean: f64, a: f64) -> f64 {
    (mean / a).min(1.0)
}

/// Chernoff for binomial `X`: `P(|X − E(X)| ≥ b·E(X)) ≤ 2·exp(−b²·E(X)/3)` for `0 < b ≤ 1`.
pub fn chernoff_bound(b: f64, mean: f64) -> f64 {
    (2.0 * (-b * b * mean / 3.0).exp()).min(1.0)
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// The polarity graph of `PG(2, q)` for prime `q`: projective points, adjacent when
/// orthogonal under the standard form. Absolute points carry no loops.
pub fn polarity_graph(q: u64) -> Result<UniformHypergraph> {
    if !is_prime(q) || q * q + q + 1 > MAX_VERTICES as u64 {
        return Err(Error::UnsupportedField(q));
    }
    // normalised: first non-zero coordinate is 1
    let mut points: Vec<[u64; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            points.push([1, a, b]);
        }
    }
    for b in 0..q {
        points.push([0, 1, b]);
    }
    points.push([0, 0, 1]);
    points.sort_unstable();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let dot: u64 = (0..3).map(|c| points[i][c] * points[j][c]).sum();
            if dot.is_multiple_of(q) {
                edges.push([i as u32, j as u32]);
            }
        }
    }
    UniformHypergraph::new(points.len(), 2, edges)
}
