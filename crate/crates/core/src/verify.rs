//! The end-to-end check list run by `verify-all`, one group of report rows per criterion.
//!
//! The Gale predicate is a parameter so a broken one can be shown to fail the run.

use crate::commands::{table1_rows, Options, Outcome, EXIT_OK, EXIT_VERIFICATION};
use crate::complex::SimplicialComplex;
use crate::cyclic::{self, CyclicSpec};
use crate::embedding::{are_isomorphic, find_subcomplex_embedding};
use crate::error::Result;
use crate::extremal::{
    self, count_copies, exact_ex, is_family_free, polarity_graph, random_free_constructions,
    sample_random_hypergraph, FamilySpec, COPY_CAP,
};
use crate::forbidden::{family_extremes, generate_fd, is_k_partite};
use crate::hypergraph::UniformHypergraph;
use crate::minor::{self, verify_trace};
use crate::report::{render, ReportRow};
use crate::shifted;
use crate::simplex::{binomial, Simplex};

pub type GalePredicate = dyn Fn(&CyclicSpec, Simplex) -> bool + Sync;

/// The predicate the library uses.
pub fn standard_gale(spec: &CyclicSpec, s: Simplex) -> bool {
    cyclic::gale_is_facet(spec, s).unwrap_or(false)
}

fn s1(v: &[usize]) -> Simplex {
    Simplex::from_one_based(v.iter().copied()).expect("valid labels")
}

/// Face numbers of the complex generated by the d-sets `gale` accepts, against the closed form,
/// for `2 ≤ d ≤ 8`, `d < n ≤ 14`.
pub fn gale_vs_closed_form(gale: &GalePredicate) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for d in 2..=8 {
        let mut bad = Vec::new();
        for n in d + 1..=14 {
            let spec = CyclicSpec::new(d, n).expect("valid range");
            let k = SimplicialComplex::close_downward(
                Simplex::range(n).subsets(d).filter(|s| gale(&spec, *s)),
            );
            let mut f = k.f_vector().0;
            f.resize(d, 0);
            if f != cyclic::f_vector_closed_form(&spec).0 {
                bad.push(n);
            }
        }
        rows.push(ReportRow::check(
            "1-gale-vs-closed-form",
            format!("d={d} n={}..=14", d + 1),
            if bad.is_empty() { "all equal".into() } else { format!("mismatch at n={bad:?}") },
            "all equal",
            "closed-form",
            bad.is_empty(),
        ));
    }
    rows
}

pub fn missing_faces_c59() -> Result<Vec<ReportRow>> {
    let got = cyclic::missing_d_faces(&CyclicSpec::new(5, 9)?, 2)?;
    let expected: Vec<Simplex> = [
        [2, 4, 6], [2, 4, 7], [2, 4, 8], [2, 5, 7], [2, 5, 8],
        [2, 6, 8], [3, 5, 7], [3, 5, 8], [3, 6, 8], [4, 6, 8],
    ]
    .iter()
    .map(|t| s1(t))
    .collect();
    let show = |v: &[Simplex]| v.iter().map(|s| s.one_based().replace(' ', "")).collect::<Vec<_>>().join(" ");
    Ok(vec![ReportRow::check(
        "2-missing-faces-c59",
        "d=2 n=9",
        show(&got),
        show(&expected),
        "known",
        got == expected,
    )])
}

pub fn subcomplexes_of_cyclic_skeleton() -> Result<Vec<ReportRow>> {
    let spec = CyclicSpec::new(5, 9)?;
    let host = cyclic::boundary_skeleton(&spec, 2)?.with_face(s1(&[2, 4, 8]));
    let full = SimplicialComplex::complete_skeleton(9, 2);
    let mut rows = Vec::new();
    for m in generate_fd(2)? {
        let absent = find_subcomplex_embedding(&m.complex, &host).is_none();
        let control = find_subcomplex_embedding(&m.complex, &full).is_some();
        rows.push(ReportRow::check(
            "3-subcomplexes",
            format!("member={}", m.name()),
            format!("in C_5(9)+248: {}, in (D_8)^<=2: {}", !absent, control),
            "in C_5(9)+248: false, in (D_8)^<=2: true",
            "known",
            absent && control,
        ));
    }
    Ok(rows)
}

pub fn minor_reductions() -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for d in 1..=2 {
        for n in 2 * d + 3..=2 * d + 6 {
            let spec = CyclicSpec::new(2 * d + 1, n)?;
            let faces = cyclic::missing_d_faces(&spec, d)?;
            let mut failed = Vec::new();
            for m in &faces {
                let ok = minor::reduce_to_vkflores(&spec, *m).is_ok_and(|trace| {
                    minor::reduction_source(&spec, *m).is_ok_and(|src| {
                        verify_trace(&src, &trace, &minor::vkflores_complex(d)).is_accepted()
                    })
                });
                if !ok {
                    failed.push(m.one_based());
                }
            }
            rows.push(ReportRow::check(
                "4-minor-reduction",
                format!("d={d} n={n}"),
                format!("{} of {} traces accepted", faces.len() - failed.len(), faces.len()),
                format!("{0} of {0} traces accepted", faces.len()),
                "known",
                failed.is_empty(),
            ));
        }
    }
    Ok(rows)
}

pub fn fd_structure() -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    let f1 = generate_fd(1)?;
    let k5 = SimplicialComplex::complete_skeleton(5, 1);
    let k33 = UniformHypergraph::complete_partite(&[3, 3]).to_complex()?;
    let shapes = f1.len() == 2
        && f1.iter().any(|m| are_isomorphic(&m.complex, &k5))
        && f1.iter().any(|m| are_isomorphic(&m.complex, &k33));
    rows.push(ReportRow::check("5-fd-structure", "d=1", format!("{} members", f1.len()), "K_5 and K_{3,3}", "known", shapes));
    let f2 = generate_fd(2)?.len();
    rows.push(ReportRow::check("5-fd-structure", "d=2", format!("{f2} members"), "3 members", "known", f2 == 3));
    for d in 1..=4 {
        let members = generate_fd(d)?;
        let partite: Vec<_> = members
            .iter()
            .filter(|m| is_k_partite(&m.hypergraph, d + 1).is_some())
            .collect();
        let ok = partite.len() == 1
            && partite[0].num_vertices() == 3 * (d + 1)
            && partite[0].num_edges() == 3usize.pow(d as u32 + 1);
        let ext = family_extremes(d);
        let ext_ok = ext.as_ref().is_ok_and(|e| {
            e.max_vertices == 3 * (d + 1) && e.min_edges == 3usize.pow(d as u32 + 1)
        });
        rows.push(ReportRow::check(
            "5-fd-structure",
            format!("d={d}"),
            format!(
                "{} partite member(s); extremes {}",
                partite.len(),
                ext.map_or("error".into(), |e| format!("({}, {})", e.max_vertices, e.min_edges))
            ),
            format!("1 partite member; extremes ({}, {})", 3 * (d + 1), 3usize.pow(d as u32 + 1)),
            "known",
            ok && ext_ok,
        ));
    }
    Ok(rows)
}

/// The four facet classes of `Δ(5,n)`.
pub fn delta5_facet_classes(n: usize) -> Vec<Simplex> {
    let mut out = vec![s1(&[2, 3, 4, 5, 6])];
    for x in 6..=n {
        out.push(s1(&[1, 3, 4, 5, x]));
    }
    for x in 5..=n {
        for y in x + 1..=n {
            out.push(s1(&[1, 2, 4, x, y]));
        }
    }
    for x in 4..=n {
        for y in x + 1..=n {
            out.push(s1(&[1, 2, 3, x, y]));
        }
    }
    out.sort_unstable();
    out
}

pub fn shifted_suite(seed: u64) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for n in 7..=10 {
        let ok = shifted::delta_dn(5, n)?.facets() == &delta5_facet_classes(n)[..];
        rows.push(ReportRow::check("6-shifted", format!("Δ(5,{n}) facets"), ok.to_string(), "true", "known", ok));
    }
    let mut bad = Vec::new();
    for d in 3..=5 {
        for n in d + 1..=12 {
            let cyc = cyclic::boundary_complex(&CyclicSpec::new(d, n)?)?.f_vector();
            if shifted::delta_dn(d, n)?.f_vector() != cyc {
                bad.push((d, n));
            }
        }
    }
    rows.push(ReportRow::check(
        "6-shifted",
        "f(Δ(d,n)) = f(∂C_d(n)), d in 3..=5, n <= 12",
        format!("{} mismatches", bad.len()),
        "0 mismatches",
        "known",
        bad.is_empty(),
    ));
    let samples = shifted::sample_shifted_subcomplexes(9, 200, seed)?;
    let holding = samples
        .iter()
        .filter(|k| shifted::delta5_inequality(k).is_ok_and(|r| r.holds))
        .count();
    rows.push(ReportRow::check(
        "6-shifted",
        format!("200 samples of Δ(5,9), seed={seed}"),
        format!("{holding} hold"),
        "200 hold",
        "known",
        holding == 200,
    ));
    let full = shifted::delta5_inequality(&shifted::delta_dn(5, 9)?.skeleton(2))?;
    rows.push(ReportRow::check(
        "6-shifted",
        "Δ(5,9)^<=2",
        format!("f2={} f1={}", full.f2, full.f1),
        "f2=74 <= 4*36-8",
        "known",
        full.holds && full.f2 == 74 && full.f1 == 36,
    ));
    let ext = shifted::delta5_extension_check(9)?;
    rows.push(ReportRow::check(
        "6-shifted",
        "Δ(5,9)^<=2 + 567",
        format!("f2={} f1={} shifted={}", ext.f2, ext.f1, ext.shifted),
        "f2 < 4 f1, f1 unchanged, shifted",
        "known",
        ext.holds && ext.shifted && ext.f1_unchanged,
    ));
    Ok(rows)
}

pub fn bipyramid() -> Result<Vec<ReportRow>> {
    let p = shifted::kalai_f12_probe(&shifted::bipyramid_with_equator())?;
    let ok = (p.f0, p.f1, p.f2) == (5, 9, 7) && p.strengthened && !p.hypothesis;
    Ok(vec![ReportRow::check(
        "7-bipyramid",
        "boundary of bipyramid + 123",
        format!("f=({}, {}, {}); 7 >= {}; 7 < {}", p.f0, p.f1, p.f2, p.strengthened_rhs, p.four_f1),
        "f=(5, 9, 7); 7 >= 6; 7 < 36",
        "known",
        ok,
    )])
}

fn graph(n: usize, edges: &[[u32; 2]]) -> UniformHypergraph {
    UniformHypergraph::new(n, 2, edges.iter().map(|e| e.to_vec())).expect("valid edges")
}

pub fn exact_extremal() -> Result<Vec<ReportRow>> {
    let triangle = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2], [0, 2]])])?;
    let path = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2]])])?;
    let matching = FamilySpec::new(vec![graph(4, &[[0, 1], [2, 3]])])?;
    let pair = FamilySpec::new(vec![graph(3, &[[0, 1], [1, 2]]), graph(4, &[[0, 1], [2, 3]])])?;
    let mut rows = Vec::new();
    let mut push = |name: &str, fam: &FamilySpec, n: usize, expected: usize| -> Result<()> {
        let got = exact_ex(n, fam, 10_000_000)?.value;
        rows.push(ReportRow::check(
            "8-exact-ex",
            format!("{name} n={n}"),
            got.to_string(),
            expected.to_string(),
            "known",
            got == expected,
        ));
        Ok(())
    };
    for n in 4..=6 {
        push("K3", &triangle, n, n * n / 4)?;
        push("P3", &path, n, n / 2)?;
        push("2K2", &matching, n, n - 1)?;
    }
    for n in 4..=5 {
        push("{P3, 2K2}", &pair, n, 1)?;
    }
    Ok(rows)
}

fn median(mut v: Vec<usize>) -> f64 {
    v.sort_unstable();
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) as f64 / 2.0
    } else {
        v[m] as f64
    }
}

fn mean_and_se(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn deletion_method(seed: u64) -> Result<Vec<ReportRow>> {
    let family = FamilySpec::forbidden(1)?;
    let seeds: Vec<u64> = (0..20).map(|t| seed.wrapping_add(t)).collect();
    let mut rows = Vec::new();
    let mut medians = Vec::new();
    for n in [64usize, 128, 256] {
        let reports = random_free_constructions(n, &family, &seeds)?;
        let free = reports.iter().all(|r| r.verified_free);
        let med = median(reports.iter().map(|r| r.edges_after).collect());
        medians.push(med);
        rows.push(ReportRow::check(
            "9-deletion",
            format!("d=1 n={n} seeds={seed}..+20"),
            format!("all free: {free}; median edges {med}"),
            "all free",
            "oracle",
            free,
        ));
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1] / w[0]).collect();
    rows.push(ReportRow::check(
        "9-deletion",
        "median ratio per doubling",
        ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(" "),
        ">= 2.4",
        "derived",
        ratios.iter().all(|&r| r >= 2.4),
    ));

    // Monte-Carlo at n = 40
    let n = 40;
    let params = extremal::deletion_parameters(&family)?;
    let p = params.c1 * (n as f64).powf(-params.c2);
    let c4 = graph(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]);
    let patterns: Vec<(String, UniformHypergraph, f64)> = std::iter::once(("C4".to_string(), c4, 1.0 / 8.0))
        .chain(
            family
                .members
                .iter()
                .enumerate()
                .map(|(i, m)| (family.names[i].clone(), m.clone(), family.copy_constant(i))),
        )
        .collect();
    let samples: Vec<UniformHypergraph> = (0..1000)
        .map(|t| sample_random_hypergraph(n, 2, p, seed, t))
        .collect();
    let edges: Vec<f64> = samples.iter().map(|g| g.num_edges() as f64).collect();
    let (mean, se) = mean_and_se(&edges);
    let expected = binomial(n as u64, 2) as f64 * p;
    rows.push(ReportRow::check(
        "9-deletion",
        format!("n={n} 1000 samples edge mean"),
        format!("{mean:.3} (se {se:.3})"),
        format!("{expected:.3}"),
        "known",
        (mean - expected).abs() <= 3.0 * se,
    ));
    for (name, h, c_h) in patterns {
        let counts = samples
            .iter()
            .map(|g| count_copies(g, &h, COPY_CAP).map(|c| c as f64))
            .collect::<Result<Vec<_>>>()?;
        let (mean, se) = mean_and_se(&counts);
        let bound = c_h * (n as f64).powi(h.n() as i32) * p.powi(h.num_edges() as i32);
        rows.push(ReportRow::check(
            "9-deletion",
            format!("n={n} 1000 samples copies of {name}"),
            format!("{mean:.4} (se {se:.4})"),
            format!("<= {bound:.4}"),
            "known",
            mean <= bound + 3.0 * se,
        ));
    }
    Ok(rows)
}

pub fn polarity_graphs() -> Result<Vec<ReportRow>> {
    let c4 = graph(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]);
    let f1 = FamilySpec::forbidden(1)?;
    let mut rows = Vec::new();
    for q in [2u64, 3, 5] {
        let g = polarity_graph(q)?;
        let c4_free = extremal::contains_copy(&g, &c4)?.is_none();
        let dense = 2 * g.num_edges() as u64 >= q * q * (q + 1);
        let f1_free = is_family_free(&g, &f1)?;
        rows.push(ReportRow::check(
            "10-polarity",
            format!("q={q}"),
            format!("edges={} C4-free={c4_free} F_1-free={f1_free}", g.num_edges()),
            format!("edges>={} C4-free=true F_1-free=true", q * q * (q + 1) / 2),
            "known",
            c4_free && dense && f1_free,
        ));
    }
    Ok(rows)
}

pub fn table1_check() -> Result<Vec<ReportRow>> {
    let ns: Vec<usize> = (5..=12).collect();
    let rows = table1_rows(&ns)?;
    let failed = rows.iter().filter(|r| r.failed()).count();
    Ok(vec![ReportRow::check(
        "11-table1",
        "n=5..=12",
        format!("{} cells, {failed} failed", rows.len()),
        "0 failed",
        "known",
        failed == 0,
    )])
}

/// Every criterion in order. Errors inside a criterion become a failing row.
pub fn verify_all(gale: &GalePredicate, seed: u64) -> Vec<ReportRow> {
    let mut rows = gale_vs_closed_form(gale);
    let groups: Vec<(&str, Result<Vec<ReportRow>>)> = vec![
        ("2-missing-faces-c59", missing_faces_c59()),
        ("3-subcomplexes", subcomplexes_of_cyclic_skeleton()),
        ("4-minor-reduction", minor_reductions()),
        ("5-fd-structure", fd_structure()),
        ("6-shifted", shifted_suite(seed)),
        ("7-bipyramid", bipyramid()),
        ("8-exact-ex", exact_extremal()),
        ("9-deletion", deletion_method(seed)),
        ("10-polarity", polarity_graphs()),
        ("11-table1", table1_check()),
    ];
    for (name, group) in groups {
        match group {
            Ok(r) => rows.extend(r),
            Err(e) => rows.push(ReportRow::check(name, "", format!("error: {e}"), "no error", "oracle", false)),
        }
    }
    rows
}

/// `verify-all`: exits 1 when any row fails. The seed defaults to 0.
pub fn cmd_verify_all(opts: &Options, gale: &GalePredicate) -> Result<Outcome> {
    let rows = verify_all(gale, opts.seed.unwrap_or(0));
    let code = if rows.iter().any(|r| r.failed()) { EXIT_VERIFICATION } else { EXIT_OK };
    Ok(Outcome {
        output: render(&rows, opts.format)?,
        code,
    })
}
