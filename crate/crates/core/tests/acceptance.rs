//! The eleven acceptance criteria. Each test compares the library against an oracle written
//! here from first principles, prints one PASS/FAIL line, and checks its time limit.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use simplexbound::commands::{table1, Table1Value};
use simplexbound::cyclic::{self, CyclicSpec};
use simplexbound::embedding::find_subcomplex_embedding;
use simplexbound::extremal::{
    exact_ex, random_free_construction, sample_random_hypergraph, FamilySpec,
};
use simplexbound::forbidden::{family_extremes, generate_fd};
use simplexbound::minor::{self, MinorStep};
use simplexbound::shifted;
use simplexbound::verify::{self, standard_gale};
use simplexbound::{Simplex, SimplicialComplex, UniformHypergraph};

fn finish(id: u32, name: &str, failures: &[String], started: Instant, limit_secs: u64) {
    let elapsed = started.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit_secs);
    let verdict = if failures.is_empty() && in_time { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {verdict} {name} ({:.2}s, limit {limit_secs}s)", elapsed.as_secs_f64());
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:?}");
    assert!(in_time, "criterion {id} took {elapsed:?}");
}

// ---- bitmask oracles -------------------------------------------------------------------

fn mask(one_based: &[usize]) -> u64 {
    one_based.iter().map(|v| 1u64 << (v - 1)).sum()
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

/// Gale's condition read literally: between any two non-members, an even number of members.
fn gale_literal(n: usize, s: u64) -> bool {
    let outside: Vec<usize> = (0..n).filter(|i| s & (1 << i) == 0).collect();
    outside.iter().enumerate().all(|(a, &i)| {
        outside[a + 1..]
            .iter()
            .all(|&j| (i + 1..j).filter(|x| s & (1 << x) != 0).count() % 2 == 0)
    })
}

fn gale_facets(d: usize, n: usize) -> Vec<u64> {
    subsets_of_size(n, d).filter(|&s| gale_literal(n, s)).collect()
}

/// f-vector of the complex generated by `facets`, counting every subset of `[n]` once.
fn f_vector_of(n: usize, facets: &[u64]) -> Vec<u64> {
    let mut f = vec![0u64; n + 1];
    for s in 1u64..1 << n {
        if facets.iter().any(|&t| s & !t == 0) {
            f[s.count_ones() as usize - 1] += 1;
        }
    }
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn closed_form(d: usize, n: usize) -> Vec<u64> {
    cyclic::f_vector_closed_form(&CyclicSpec::new(d, n).unwrap()).0
}

fn complex_of(faces: &[u64]) -> SimplicialComplex {
    SimplicialComplex::close_downward(faces.iter().map(|&m| Simplex::from_bits(m)))
}

fn all_faces(k: &SimplicialComplex) -> HashSet<u64> {
    k.all_faces().iter().map(|s| s.bits()).collect()
}

// ---- graph oracles on adjacency bitsets (n ≤ 256) ---------------------------------------

#[derive(Clone)]
struct Graph {
    adj: Vec<[u64; 4]>,
}

impl Graph {
    fn from(h: &UniformHypergraph) -> Self {
        assert_eq!(h.k(), 2);
        let mut adj = vec![[0u64; 4]; h.n()];
        for e in h.edges() {
            let (a, b) = (e[0] as usize, e[1] as usize);
            adj[a][b / 64] |= 1 << (b % 64);
            adj[b][a / 64] |= 1 << (a % 64);
        }
        Graph { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn common(&self, vs: &[usize]) -> [u64; 4] {
        let mut out = [u64::MAX; 4];
        for &v in vs {
            for (o, a) in out.iter_mut().zip(self.adj[v]) {
                *o &= a;
            }
        }
        out
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.adj[a][b / 64] & (1 << (b % 64)) != 0
    }

    fn edges(&self) -> usize {
        self.adj.iter().map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>()).sum::<usize>() / 2
    }

    /// Copies of C4: every pair with `c` common neighbours spans `C(c,2)` of them, each copy
    /// seen from both diagonals.
    fn c4_count(&self) -> u64 {
        let mut twice = 0u64;
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                let c: u64 = self.common(&[a, b]).iter().map(|w| w.count_ones() as u64).sum();
                twice += c * c.saturating_sub(1) / 2;
            }
        }
        twice / 2
    }

    fn k5_count(&self) -> u64 {
        fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize, count: &mut u64) {
            if clique.len() == 5 {
                *count += 1;
                return;
            }
            for v in from..g.n() {
                if clique.iter().all(|&u| g.has(u, v)) {
                    clique.push(v);
                    grow(g, clique, v + 1, count);
                    clique.pop();
                }
            }
        }
        let mut count = 0;
        grow(self, &mut Vec::new(), 0, &mut count);
        count
    }

    /// Copies of K_{3,3}: a side `A` with `c` common neighbours gives `C(c,3)` copies, and
    /// each copy has two sides.
    fn k33_count(&self) -> u64 {
        let n = self.n();
        let mut twice = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                let ab = self.common(&[a, b]);
                if ab.iter().map(|w| w.count_ones()).sum::<u32>() < 3 {
                    continue;
                }
                for c in b + 1..n {
                    let k: u64 = (0..4).map(|w| (ab[w] & self.adj[c][w]).count_ones() as u64).sum();
                    twice += k * k.saturating_sub(1) * k.saturating_sub(2) / 6;
                }
            }
        }
        twice / 2
    }
}

// ---- 1 ----------------------------------------------------------------------------------

#[test]
fn criterion_01_gale_enumeration_matches_closed_form() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for d in 2..=8 {
        for n in d + 1..=14 {
            let oracle = gale_facets(d, n);
            let spec = CyclicSpec::new(d, n).unwrap();
            let enumerated: Vec<u64> = cyclic::enumerate_facets(&spec, u128::MAX)
                .unwrap()
                .iter()
                .map(|s| s.bits())
                .collect();
            let mut sorted = oracle.clone();
            sorted.sort_unstable();
            let mut lib = enumerated.clone();
            lib.sort_unstable();
            if sorted != lib {
                failures.push(format!("facets of C_{d}({n}) differ from the literal condition"));
            }
            let f = f_vector_of(n, &enumerated);
            if f != closed_form(d, n) {
                failures.push(format!("C_{d}({n}): enumerated {f:?} vs closed form {:?}", closed_form(d, n)));
            }
        }
    }
    finish(1, "gale enumeration vs closed form", &failures, started, 60);
}

#[test]
fn criterion_01_mutation_is_detected() {
    // also accepts every d-set that contains n but not 1
    let broken = |spec: &CyclicSpec, s: Simplex| {
        standard_gale(spec, s) || (s.contains(spec.n() - 1) && !s.contains(0) && s.len() == spec.d())
    };
    let rows = verify::gale_vs_closed_form(&broken);
    assert!(rows.iter().any(|r| r.failed()));
    let opts = simplexbound::commands::Options::default();
    let outcome = verify::cmd_verify_all(&opts, &broken).unwrap();
    assert_ne!(outcome.code, 0);
}

// ---- 2 ----------------------------------------------------------------------------------

#[test]
fn criterion_02_missing_triples_of_c59() {
    let started = Instant::now();
    let facets = gale_facets(5, 9);
    let face = |s: u64| facets.iter().any(|&t| s & !t == 0);
    let mut oracle: Vec<u64> = subsets_of_size(9, 3).filter(|&s| !face(s)).collect();
    oracle.sort_unstable_by_key(|&s| Simplex::from_bits(s));
    let listed: Vec<u64> = [
        [2, 4, 6], [2, 4, 7], [2, 4, 8], [2, 5, 7], [2, 5, 8],
        [2, 6, 8], [3, 5, 7], [3, 5, 8], [3, 6, 8], [4, 6, 8],
    ]
    .iter()
    .map(|t| mask(t))
    .collect();
    let got: Vec<u64> = cyclic::missing_d_faces(&CyclicSpec::new(5, 9).unwrap(), 2)
        .unwrap()
        .iter()
        .map(|s| s.bits())
        .collect();
    let mut failures = Vec::new();
    if got != listed {
        failures.push(format!("library {got:?} vs listed {listed:?}"));
    }
    if oracle.iter().collect::<BTreeSet<_>>() != listed.iter().collect::<BTreeSet<_>>() {
        failures.push("brute-force non-faces disagree with the listed triples".into());
    }
    if subsets_of_size(9, 2).any(|e| !face(e)) {
        failures.push("an edge is missing".into());
    }
    finish(2, "missing faces of C_5(9)", &failures, started, 1);
}

// ---- 3 ----------------------------------------------------------------------------------

/// Whether some injection of the pattern's vertices into `[n]` sends every facet into `host`.
fn embeds_brute(pattern: &SimplicialComplex, host: &HashSet<u64>, n: usize) -> bool {
    fn extend(
        verts: &[usize],
        image: &mut Vec<usize>,
        used: u64,
        n: usize,
        facets: &[Vec<usize>],
        host: &HashSet<u64>,
    ) -> bool {
        if image.len() == verts.len() {
            return facets
                .iter()
                .all(|f| host.contains(&f.iter().map(|&i| 1u64 << image[i]).sum::<u64>()));
        }
        (0..n).filter(|x| used & (1 << x) == 0).any(|x| {
            image.push(x);
            let found = extend(verts, image, used | 1 << x, n, facets, host);
            image.pop();
            found
        })
    }
    let verts = pattern.vertex_set().to_vec();
    let facets: Vec<Vec<usize>> = pattern
        .facets()
        .iter()
        .map(|f| f.vertices().map(|v| verts.iter().position(|&w| w == v).unwrap()).collect())
        .collect();
    extend(&verts, &mut Vec::new(), 0, n, &facets, host)
}

#[test]
fn criterion_03_f2_not_in_cyclic_skeleton_plus_248() {
    let started = Instant::now();
    let facets = gale_facets(5, 9);
    let mut host_faces: Vec<u64> = (1u64..1 << 9)
        .filter(|&s| s.count_ones() <= 3 && facets.iter().any(|&t| s & !t == 0))
        .collect();
    host_faces.push(mask(&[2, 4, 8]));
    let host_set: HashSet<u64> = host_faces.iter().copied().collect();
    let host = complex_of(&host_faces);
    let full = SimplicialComplex::complete_skeleton(9, 2);
    let full_set = all_faces(&full);
    let mut failures = Vec::new();
    for m in generate_fd(2).unwrap() {
        let lib_host = find_subcomplex_embedding(&m.complex, &host);
        let lib_full = find_subcomplex_embedding(&m.complex, &full);
        if lib_host.is_some() || embeds_brute(&m.complex, &host_set, 9) {
            failures.push(format!("{} embeds into the cyclic skeleton", m.name()));
        }
        if lib_full.is_none() || !embeds_brute(&m.complex, &full_set, 9) {
            failures.push(format!("{} not found in the complete 2-skeleton", m.name()));
        }
    }
    finish(3, "F_2 against the C_5(9) skeleton plus 248", &failures, started, 30);
}

// ---- 4 ----------------------------------------------------------------------------------

/// Non-faces all of whose proper subsets are faces, among subsets of the vertex set.
fn missing_brute(faces: &HashSet<u64>, vertices: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = vertices;
    loop {
        if s != 0
            && !faces.contains(&s)
            && (0..64).filter(|v| s & (1 << v) != 0).all(|v| faces.contains(&(s & !(1 << v))) || s.count_ones() == 1)
        {
            out.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & vertices;
    }
    out
}

/// Replays a trace by the definitions and checks that it ends at the complete d-skeleton on
/// 2d+3 vertices.
fn replay_brute(source: &SimplicialComplex, steps: &[MinorStep], d: usize) -> Result<(), String> {
    let mut faces = all_faces(source);
    for (i, step) in steps.iter().enumerate() {
        match step {
            MinorStep::Delete(removed) => {
                faces.retain(|&f| removed.iter().all(|r| r.bits() & !f != 0));
            }
            MinorStep::Contract { u, v } => {
                let (bu, bv) = (1u64 << u, 1u64 << v);
                if !faces.contains(&(bu | bv)) {
                    return Err(format!("step {i}: {u}{v} is not an edge"));
                }
                let dim = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize - 1;
                let vertices = faces.iter().fold(0, |a, f| a | f);
                let blocked = missing_brute(&faces, vertices)
                    .into_iter()
                    .any(|m| m & bu != 0 && m & bv != 0 && m.count_ones() as usize <= dim + 1);
                if blocked {
                    return Err(format!("step {i}: contraction of {u}{v} not admissible"));
                }
                faces = faces
                    .iter()
                    .map(|&f| if f & bu != 0 { (f & !bu) | bv } else { f })
                    .collect();
            }
        }
    }
    let vertices = faces.iter().fold(0u64, |a, f| a | f);
    let verts = vertices.count_ones() as usize;
    let expected: HashSet<u64> = {
        let mut e = HashSet::new();
        let mut s = vertices;
        while s != 0 {
            if s.count_ones() as usize <= d + 1 {
                e.insert(s);
            }
            s = (s - 1) & vertices;
        }
        e
    };
    if verts != 2 * d + 3 || faces.iter().filter(|&&f| f != 0).copied().collect::<HashSet<_>>() != expected {
        return Err(format!("final complex on {verts} vertices is not the complete {d}-skeleton"));
    }
    Ok(())
}

#[test]
fn criterion_04_reductions_to_the_complete_skeleton() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut traces = 0;
    for d in 1..=2usize {
        for n in 2 * d + 3..=2 * d + 6 {
            let spec = CyclicSpec::new(2 * d + 1, n).unwrap();
            let facets = gale_facets(2 * d + 1, n);
            let oracle_missing: Vec<u64> = subsets_of_size(n, d + 1)
                .filter(|&s| !facets.iter().any(|&t| s & !t == 0))
                .collect();
            let missing = cyclic::missing_d_faces(&spec, d).unwrap();
            if missing.len() != oracle_missing.len() {
                failures.push(format!("d={d} n={n}: {} missing faces, oracle {}", missing.len(), oracle_missing.len()));
            }
            for m in missing {
                let trace = minor::reduce_to_vkflores(&spec, m).unwrap();
                let source = minor::reduction_source(&spec, m).unwrap();
                let verdict = minor::verify_trace(&source, &trace, &minor::vkflores_complex(d));
                if !verdict.is_accepted() {
                    failures.push(format!("d={d} n={n} M={}: {verdict:?}", m.one_based()));
                }
                if let Err(e) = replay_brute(&source, &trace.steps, d) {
                    failures.push(format!("d={d} n={n} M={}: {e}", m.one_based()));
                }
                traces += 1;
            }
        }
    }
    assert_eq!(traces, 1 + 3 + 6 + 10 + 1 + 4 + 10 + 20);
    finish(4, "minor reductions for d in {1,2}", &failures, started, 60);
}

// ---- 5 ----------------------------------------------------------------------------------

fn partitions(n: usize, max: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|p| partitions(n - p, p)).sum()
}

/// Proper colouring of the vertices with k colours so that every edge is rainbow.
fn k_colourable(h: &UniformHypergraph, k: usize) -> bool {
    fn go(h: &UniformHypergraph, k: usize, colour: &mut Vec<usize>) -> bool {
        let v = colour.len();
        if v == h.n() {
            return true;
        }
        // symmetry: vertex v uses at most one new colour
        let next = colour.iter().max().map_or(0, |m| m + 1).min(k - 1);
        for c in 0..=next {
            colour.push(c);
            let ok = h.edges().iter().all(|e| {
                let coloured: Vec<usize> =
                    e.iter().filter(|&&x| (x as usize) <= v).map(|&x| colour[x as usize]).collect();
                coloured.iter().collect::<BTreeSet<_>>().len() == coloured.len()
            });
            if ok && go(h, k, colour) {
                return true;
            }
            colour.pop();
        }
        false
    }
    go(h, k, &mut Vec::new())
}

#[test]
fn criterion_05_fd_structure() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let f1 = generate_fd(1).unwrap();
    let shapes: BTreeSet<(usize, usize, Vec<usize>)> = f1
        .iter()
        .map(|m| {
            let mut deg = m.hypergraph.degrees();
            deg.sort_unstable();
            (m.num_vertices(), m.num_edges(), deg)
        })
        .collect();
    let expected: BTreeSet<_> = [(5, 10, vec![4; 5]), (6, 9, vec![3; 6])].into_iter().collect();
    if shapes != expected {
        failures.push(format!("F_1 shapes {shapes:?}"));
    }
    for m in &f1 {
        // 6 vertices, 9 edges, 3-regular and bipartite is K_{3,3}; 5 vertices, 10 edges is K_5
        if m.num_vertices() == 6 && !k_colourable(&m.hypergraph, 2) {
            failures.push("the 6-vertex member of F_1 is not bipartite".into());
        }
    }

    for d in 1..=4usize {
        let members = generate_fd(d).unwrap();
        if members.len() != partitions(d + 1, d + 1) {
            failures.push(format!("|F_{d}| = {}, partitions {}", members.len(), partitions(d + 1, d + 1)));
        }
        if d == 2 && members.len() != 3 {
            failures.push("|F_2| != 3".into());
        }
        let partite: Vec<_> = members.iter().filter(|m| k_colourable(&m.hypergraph, d + 1)).collect();
        if partite.len() != 1 {
            failures.push(format!("d={d}: {} partite members", partite.len()));
        } else if partite[0].num_vertices() != 3 * (d + 1)
            || partite[0].num_edges() != 3usize.pow(d as u32 + 1)
        {
            failures.push(format!("d={d}: partite member has {} vertices, {} edges", partite[0].num_vertices(), partite[0].num_edges()));
        }
        let max_v = members.iter().map(|m| m.hypergraph.n()).max().unwrap();
        let min_e = members.iter().map(|m| m.hypergraph.num_edges()).min().unwrap();
        let ext = family_extremes(d).unwrap();
        if (ext.max_vertices, ext.min_edges) != (max_v, min_e)
            || (max_v, min_e) != (3 * (d + 1), 3usize.pow(d as u32 + 1))
        {
            failures.push(format!("d={d}: extremes ({}, {}) vs members ({max_v}, {min_e})", ext.max_vertices, ext.min_edges));
        }
    }
    finish(5, "F_d structure", &failures, started, 30);
}

// ---- 6 ----------------------------------------------------------------------------------

/// Δ(d,n) read off its definition over 1-based labels.
fn delta_literal(d: usize, n: usize) -> Vec<u64> {
    subsets_of_size(n, d)
        .filter(|&s| {
            (1..=n).all(|k| {
                s & (1 << (k - 1)) != 0
                    || (k + 1..=(d + 2).saturating_sub(k)).all(|v| v <= n && s & (1 << (v - 1)) != 0)
            })
        })
        .collect()
}

fn shifted_brute(faces: &HashSet<u64>, n: usize) -> bool {
    faces.iter().all(|&f| {
        (0..n).filter(|i| f & (1 << i) != 0).all(|i| {
            (0..i).filter(|j| f & (1 << j) == 0).all(|j| faces.contains(&((f & !(1 << i)) | 1 << j)))
        })
    })
}

#[test]
fn criterion_06_shifted_suite() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for n in 7..=10 {
        let mut classes = vec![mask(&[2, 3, 4, 5, 6])];
        classes.extend((6..=n).map(|x| mask(&[1, 3, 4, 5, x])));
        for x in 4..=n {
            for y in x + 1..=n {
                classes.push(mask(&[1, 2, 3, x, y]));
                if x >= 5 {
                    classes.push(mask(&[1, 2, 4, x, y]));
                }
            }
        }
        let lib: BTreeSet<u64> = shifted::delta_dn(5, n).unwrap().facets().iter().map(|s| s.bits()).collect();
        let literal = complex_of(&delta_literal(5, n));
        let literal: BTreeSet<u64> = literal.facets().iter().map(|s| s.bits()).collect();
        let classes: BTreeSet<u64> = classes.into_iter().collect();
        if lib != classes || literal != classes {
            failures.push(format!("Δ(5,{n}) facets differ from the four classes"));
        }
    }

    for d in 3..=5 {
        for n in d + 1..=12 {
            let delta = delta_literal(d, n);
            let fd = f_vector_of(n, &delta);
            let fc = f_vector_of(n, &gale_facets(d, n));
            let lib = shifted::delta_dn(d, n).unwrap().f_vector().0;
            if fd != fc || lib != fc {
                failures.push(format!("d={d} n={n}: f(Δ)={fd:?}, library {lib:?}, f(∂C)={fc:?}"));
            }
        }
    }

    let samples = shifted::sample_shifted_subcomplexes(9, 200, 0).unwrap();
    let mut distinct = HashSet::new();
    for (i, k) in samples.iter().enumerate() {
        let faces = all_faces(k);
        let f1 = faces.iter().filter(|f| f.count_ones() == 2).count();
        let f2 = faces.iter().filter(|f| f.count_ones() == 3).count();
        let inside = faces.iter().all(|&f| {
            f.count_ones() <= 3 && delta_literal(5, 9).iter().any(|&t| f & !t == 0)
        });
        if !shifted_brute(&faces, 9) || !inside || f2 > 4 * f1 - 8 {
            failures.push(format!("sample {i}: f1={f1} f2={f2} inside={inside}"));
        }
        let lib = shifted::delta5_inequality(k);
        if !lib.as_ref().is_ok_and(|r| r.holds) {
            failures.push(format!("sample {i}: library verdict {lib:?}"));
        }
        distinct.insert(k.facets().to_vec());
    }
    if distinct.len() < 20 {
        failures.push(format!("only {} distinct samples", distinct.len()));
    }

    // the two fixtures: Δ(5,9)^{≤2}, then the same with 567 added
    let skeleton: Vec<u64> = delta_literal(5, 9)
        .iter()
        .flat_map(|&t| subsets_of_size(9, 3).filter(move |&s| s & !t == 0))
        .collect();
    let base = complex_of(&skeleton);
    let f = base.f_vector();
    if (f.get(1), f.get(2)) != (36, 74) || !shifted::delta5_inequality(&base).unwrap().holds {
        failures.push(format!("Δ(5,9)^<=2 has f={:?}", f.0));
    }
    let extended = base.with_face(Simplex::from_bits(mask(&[5, 6, 7])));
    let fe = extended.f_vector();
    if !(fe.get(2) < 4 * fe.get(1)) || !shifted_brute(&all_faces(&extended), 9) {
        failures.push(format!("Δ(5,9)^<=2 + 567 has f={:?}", fe.0));
    }
    let ext = shifted::delta5_extension_check(9).unwrap();
    if (ext.f1, ext.f2) != (fe.get(1), fe.get(2)) || !ext.holds {
        failures.push(format!("extension report {ext:?}"));
    }
    finish(6, "shifted suite", &failures, started, 60);
}

// ---- 7 ----------------------------------------------------------------------------------

#[test]
fn criterion_07_bipyramid() {
    let started = Instant::now();
    let k = shifted::bipyramid_with_equator();
    let faces = all_faces(&k);
    let f: Vec<i64> = (1..=3).map(|s| faces.iter().filter(|x| x.count_ones() == s).count() as i64).collect();
    let probe = shifted::kalai_f12_probe(&k).unwrap();
    let mut failures = Vec::new();
    if f != [5, 9, 7] {
        failures.push(format!("f = {f:?}"));
    }
    if !(f[2] >= 4 * f[1] - 10 * f[0] + 20 && f[2] < 4 * f[1]) {
        failures.push("inequalities".into());
    }
    if !probe.strengthened || probe.hypothesis || probe.strengthened_rhs != 6 {
        failures.push(format!("probe {probe:?}"));
    }
    finish(7, "bipyramid", &failures, started, 1);
}

type EdgePredicate<'a> = &'a dyn Fn(&[(usize, usize)]) -> bool;

// ---- 8 ----------------------------------------------------------------------------------

/// Largest number of edges on `n` vertices avoiding every pattern, over all edge subsets.
fn ex_brute(n: usize, patterns: &[EdgePredicate]) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut best = 0;
    for m in 0u32..1 << pairs.len() {
        let es: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| m & (1 << i) != 0).map(|i| pairs[i]).collect();
        if es.len() > best && patterns.iter().all(|p| !p(&es)) {
            best = es.len();
        }
    }
    best
}

fn has_triangle(es: &[(usize, usize)]) -> bool {
    let set: HashSet<_> = es.iter().copied().collect();
    es.iter().any(|&(a, b)| es.iter().any(|&(c, x)| c == b && set.contains(&(a, x))))
}

fn has_path3(es: &[(usize, usize)]) -> bool {
    es.iter().enumerate().any(|(i, e)| es[i + 1..].iter().any(|f| e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1))
}

fn has_matching2(es: &[(usize, usize)]) -> bool {
    es.iter().enumerate().any(|(i, e)| es[i + 1..].iter().any(|f| e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1))
}

fn graph(n: usize, edges: &[[u32; 2]]) -> UniformHypergraph {
    UniformHypergraph::new(n, 2, edges.iter().map(|e| e.to_vec())).unwrap()
}

#[test]
fn criterion_08_exact_extremal_numbers() {
    let started = Instant::now();
    let triangle = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2], [0, 2]])]).unwrap();
    let path = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2]])]).unwrap();
    let matching = FamilySpec::new(vec![graph(4, &[[0, 1], [2, 3]])]).unwrap();
    let pair = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2]]), graph(4, &[[0, 1], [2, 3]])]).unwrap();
    let mut failures = Vec::new();
    let mut check = |name: &str, fam: &FamilySpec, n: usize, formula: usize, patterns: &[EdgePredicate]| {
        let lib = exact_ex(n, fam, 10_000_000).unwrap().value;
        let brute = ex_brute(n, patterns);
        if lib != formula || brute != formula {
            failures.push(format!("{name} n={n}: library {lib}, brute force {brute}, formula {formula}"));
        }
    };
    for n in 4..=6 {
        check("K3", &triangle, n, n * n / 4, &[&has_triangle]);
        check("P3", &path, n, n / 2, &[&has_path3]);
        check("2K2", &matching, n, n - 1, &[&has_matching2]);
    }
    for n in 4..=5 {
        check("{P3, 2K2}", &pair, n, 1, &[&has_path3, &has_matching2]);
    }
    finish(8, "exact extremal numbers", &failures, started, 120);
}

// ---- 9 ----------------------------------------------------------------------------------

fn median(mut v: Vec<usize>) -> f64 {
    v.sort_unstable();
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) as f64 / 2.0
    } else {
        v[m] as f64
    }
}

fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[test]
fn criterion_09_deletion_method() {
    let started = Instant::now();
    let family = FamilySpec::forbidden(1).unwrap();
    let mut failures = Vec::new();
    let mut medians = Vec::new();
    for n in [64usize, 128, 256] {
        let mut edges = Vec::new();
        for seed in 0..20 {
            let (g, report) = random_free_construction(n, &family, seed).unwrap();
            let oracle = Graph::from(&g);
            if oracle.k5_count() != 0 || oracle.k33_count() != 0 || !report.verified_free {
                failures.push(format!("n={n} seed={seed}: output is not free"));
            }
            if report.edges_after != oracle.edges() || report.edges_after * 2 < report.edges_before {
                failures.push(format!("n={n} seed={seed}: {report:?}"));
            }
            edges.push(report.edges_after);
        }
        medians.push(median(edges));
    }
    for w in medians.windows(2) {
        if !(w[1] > w[0] && w[1] / w[0] >= 2.4) {
            failures.push(format!("medians {medians:?}"));
        }
    }
    println!("    medians at n = 64, 128, 256: {medians:?}");

    // 1000 samples of G(40, p) with the construction's p
    let n = 40usize;
    let params = simplexbound::extremal::deletion_parameters(&family).unwrap();
    let p = params.c1 * (n as f64).powf(-params.c2);
    let graphs: Vec<Graph> = (0..1000).map(|t| Graph::from(&sample_random_hypergraph(n, 2, p, 7, t))).collect();
    let nf = n as f64;
    type Stat = Box<dyn Fn(&Graph) -> u64>;
    let stats: [(&str, Stat, f64); 4] = [
        ("edges", Box::new(|g: &Graph| g.edges() as u64), nf * (nf - 1.0) / 2.0 * p),
        ("C4", Box::new(|g: &Graph| g.c4_count()), nf.powi(4) * p.powi(4) / 8.0),
        ("K5", Box::new(|g: &Graph| g.k5_count()), nf.powi(5) * p.powi(10) / 120.0),
        ("K33", Box::new(|g: &Graph| g.k33_count()), nf.powi(6) * p.powi(9) / 72.0),
    ];
    for (name, stat, bound) in &stats {
        let xs: Vec<f64> = graphs.iter().map(|g| stat(g) as f64).collect();
        let (mean, se) = mean_se(&xs);
        let ok = if *name == "edges" {
            (mean - bound).abs() <= 3.0 * se
        } else {
            mean <= bound + 3.0 * se
        };
        println!("    n=40 {name}: mean {mean:.4} se {se:.4} bound {bound:.4}");
        if !ok {
            failures.push(format!("{name}: mean {mean} se {se} bound {bound}"));
        }
    }
    finish(9, "deletion method", &failures, started, 180);
}

// ---- 10 ---------------------------------------------------------------------------------

#[test]
fn criterion_10_polarity_graphs() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for q in [2u64, 3, 5] {
        let h = simplexbound::extremal::polarity_graph(q).unwrap();
        let g = Graph::from(&h);
        let c4_free = (0..g.n()).all(|a| {
            (a + 1..g.n()).all(|b| g.common(&[a, b]).iter().map(|w| w.count_ones()).sum::<u32>() <= 1)
        });
        let edges = g.edges() as u64;
        if !c4_free || 2 * edges < q * q * (q + 1) || g.k5_count() != 0 || g.k33_count() != 0 {
            failures.push(format!("q={q}: edges={edges} c4_free={c4_free}"));
        }
        if g.n() as u64 != q * q + q + 1 {
            failures.push(format!("q={q}: {} vertices", g.n()));
        }
    }
    finish(10, "polarity graphs", &failures, started, 10);
}

// ---- 11 ---------------------------------------------------------------------------------

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn criterion_11_table1() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for n in 5..=12usize {
        let m = n as u128;
        // rows r = 1..=7, columns d = 1..=4; None marks an open cell
        let printed: [[Option<u128>; 4]; 7] = [
            [Some(m - 1), Some(0), Some(0), Some(0)],
            [Some(3 * m - 6), Some(2 * m - 5), Some(0), Some(0)],
            [Some(binom(m, 2)), Some(m * (m - 3)), Some(m * (m - 3) / 2 - 1), Some(0)],
            [Some(binom(m, 2)), None, None, None],
            [Some(binom(m, 2)), Some(binom(m, 3)), None, None],
            [Some(binom(m, 2)), Some(binom(m, 3)), None, None],
            [Some(binom(m, 2)), Some(binom(m, 3)), Some(binom(m, 4)), None],
        ];
        let cells = table1(n).unwrap();
        if cells.len() != 28 {
            failures.push(format!("n={n}: {} cells", cells.len()));
        }
        for cell in cells {
            match (printed[cell.r - 1][cell.d - 1], &cell.value) {
                (Some(v), Table1Value::Exact { expected, measured, .. }) if *expected == v && *measured == v => {}
                (None, Table1Value::Interval { lower, upper, .. }) if lower <= upper => {}
                (want, got) => failures.push(format!("n={n} r={} d={}: table {want:?}, got {got:?}", cell.r, cell.d)),
            }
        }
    }
    finish(11, "table of exact values", &failures, started, 1);
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let opts = simplexbound::commands::Options {
        format: simplexbound::report::Format::Csv,
        seed: Some(0),
        budget: None,
    };
    let a = verify::cmd_verify_all(&opts, &standard_gale).unwrap();
    let b = verify::cmd_verify_all(&opts, &standard_gale).unwrap();
    assert_eq!(a.code, 0, "{}", a.output);
    assert_eq!(a.output, b.output);
}
