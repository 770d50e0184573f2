//! Command implementations behind the `simplexbound` binary. Each returns the text to print
//! and an exit code, so they can be driven and tested without a process boundary.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::cyclic::{self, CyclicSpec, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::extremal::{
    self, contains_copy, erdos_bound, polarity_graph, FamilySpec,
};
use crate::forbidden::{family_extremes, generate_fd, is_k_partite};
use crate::hypergraph::UniformHypergraph;
use crate::minor::{self, verify_trace};
use crate::report::{records_to_csv, render, Format, ReportRow};
use crate::scx;
use crate::shifted::{conjecture_bound_check, delta_dn, is_shifted, kalai_f12_probe};
use crate::simplex::{binomial, Simplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: EXIT_OK }
    }

    fn from_rows(rows: &[ReportRow], format: Format) -> Result<Self> {
        let code = if rows.iter().any(|r| r.failed()) {
            EXIT_VERIFICATION
        } else {
            EXIT_OK
        };
        Ok(Outcome {
            output: render(rows, format)?,
            code,
        })
    }
}

/// Exit code for a failed command: 3 for exhausted budgets, 1 for broken internal invariants,
/// 2 for bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NoContractionAvailable { .. } => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

/// Runs a command body, turning errors into a message and an exit code.
pub fn run(body: impl FnOnce() -> Result<Outcome>) -> Outcome {
    body().unwrap_or_else(|e| Outcome {
        output: format!("error: {e}\n"),
        code: exit_code(&e),
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub format: Format,
    pub seed: Option<u64>,
    pub budget: Option<u128>,
}

impl Options {
    fn budget(&self) -> u128 {
        self.budget.unwrap_or(DEFAULT_BUDGET)
    }

    fn seed(&self) -> Result<u64> {
        self.seed
            .ok_or_else(|| Error::PreconditionViolated("randomized commands need --seed".into()))
    }
}

fn render_faces(faces: &[Simplex], format: Format) -> String {
    let mut out = match format {
        Format::Plain => String::new(),
        Format::Csv => "face\n".to_string(),
        Format::Md => "| face |\n|---|\n".to_string(),
    };
    for f in faces {
        match format {
            Format::Plain | Format::Csv => out.push_str(&f.one_based()),
            Format::Md => out.push_str(&format!("| {} |", f.one_based())),
        }
        out.push('\n');
    }
    out
}

fn one_based_set(labels: &[usize]) -> Result<Simplex> {
    Simplex::from_one_based(labels.iter().copied())
}

/// `facets d n`: the Gale facets of `C_d(n)`.
pub fn facets(d: usize, n: usize, opts: &Options) -> Result<Outcome> {
    let spec = CyclicSpec::new(d, n)?;
    let faces = cyclic::enumerate_facets(&spec, opts.budget())?;
    Ok(Outcome::ok(render_faces(&faces, opts.format)))
}

/// `fvector d n`: enumerated face numbers of `∂C_d(n)` against the neighborly closed form.
pub fn fvector(d: usize, n: usize, opts: &Options) -> Result<Outcome> {
    let spec = CyclicSpec::new(d, n)?;
    let closed = cyclic::f_vector_closed_form(&spec);
    let rows: Vec<ReportRow> = (0..d)
        .map(|k| {
            let counted = cyclic::k_faces(&spec, k, opts.budget()).map(|f| f.len() as u64);
            counted.map(|c| {
                ReportRow::check(
                    "fvector",
                    format!("d={d} n={n} k={k}"),
                    c.to_string(),
                    closed.get(k).to_string(),
                    "closed-form",
                    c == closed.get(k),
                )
            })
        })
        .collect::<Result<_>>()?;
    Outcome::from_rows(&rows, opts.format)
}

/// `missing-faces d n`: missing d-faces of `C_{2d+1}(n)`; `d` is the complex dimension.
pub fn missing_faces(d: usize, n: usize, opts: &Options) -> Result<Outcome> {
    let spec = CyclicSpec::new(2 * d + 1, n)?;
    let faces = cyclic::missing_d_faces(&spec, d)?;
    Ok(Outcome::ok(render_faces(&faces, opts.format)))
}

#[derive(Serialize)]
struct MemberRow {
    name: String,
    parts: String,
    n: usize,
    edges: usize,
    partite: bool,
}

/// `forbidden-family d`: each member of `F_d` as `.scx`, then a summary.
pub fn forbidden_family(d: usize, opts: &Options) -> Result<Outcome> {
    let members = generate_fd(d)?;
    let rows: Vec<MemberRow> = members
        .iter()
        .map(|m| MemberRow {
            name: m.name(),
            parts: m
                .parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            n: m.num_vertices(),
            edges: m.num_edges(),
            partite: is_k_partite(&m.hypergraph, d + 1).is_some(),
        })
        .collect();
    let output = match opts.format {
        Format::Csv => records_to_csv(&rows)?,
        Format::Md => {
            let mut s = "| member | parts | n | edges | partite |\n|---|---|---|---|---|\n".to_string();
            for r in &rows {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    r.name, r.parts, r.n, r.edges, r.partite
                ));
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for (m, r) in members.iter().zip(&rows) {
                s.push_str(&format!(
                    "# {} parts=[{}] n={} edges={} partite={}\n",
                    r.name, r.parts, r.n, r.edges, r.partite
                ));
                s.push_str(&scx::write(&m.complex));
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

/// The d-faces of `k` as a (d+1)-graph on `[max label + 1]`.
fn d_face_hypergraph(k: &SimplicialComplex, d: usize) -> Result<UniformHypergraph> {
    let n = k.vertex_set().max().map_or(0, |m| m + 1);
    UniformHypergraph::new(
        n,
        d + 1,
        k.faces(d as isize)
            .into_iter()
            .map(|f| f.vertices().map(|v| v as u32).collect::<Vec<_>>()),
    )
}

/// `check-free host.scx --family d`: whether the host's d-faces avoid every member of `F_d`.
/// Exits 1 when a copy is found.
pub fn check_free(host: &SimplicialComplex, d: usize, opts: &Options) -> Result<Outcome> {
    let h = d_face_hypergraph(host, d)?;
    let mut rows = Vec::new();
    for m in generate_fd(d)? {
        let copy = contains_copy(&h, &m.hypergraph)?;
        let measured = match &copy {
            Some(img) => format!(
                "copy on {}",
                Simplex::from_vertices(img.iter().copied())?.one_based()
            ),
            None => "no copy".into(),
        };
        rows.push(ReportRow::check(
            "check-free",
            format!("member={}", m.name()),
            measured,
            "no copy",
            "oracle",
            copy.is_none(),
        ));
    }
    Outcome::from_rows(&rows, opts.format)
}

/// `minor-trace d n M...`: reduces `∂C_{2d+1}(n)^{≤d} ∪ {M}` to `(Δ_{2d+2})^{≤d}`, replays the
/// trace, and prints it with the final complex.
pub fn minor_trace(d: usize, n: usize, m: &[usize], opts: &Options) -> Result<Outcome> {
    let spec = CyclicSpec::new(2 * d + 1, n)?;
    let m = one_based_set(m)?;
    let trace = minor::reduce_to_vkflores(&spec, m)?;
    let source = minor::reduction_source(&spec, m)?;
    let mut current = source.clone();
    for step in &trace.steps {
        current = minor::apply_step(&current, step)?;
    }
    let verdict = verify_trace(&source, &trace, &minor::vkflores_complex(d));
    let accepted = verdict.is_accepted();
    let code = if accepted { EXIT_OK } else { EXIT_VERIFICATION };
    let output = match opts.format {
        Format::Plain => {
            let mut s: String = trace.steps.iter().map(|st| format!("{st}\n")).collect();
            s.push_str(&format!("# replay: {verdict:?}\n"));
            s.push_str(&scx::write(&current));
            s
        }
        format => {
            let mut rows: Vec<ReportRow> = trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, st)| {
                    ReportRow::info("minor-trace", format!("step={i}"), st.to_string(), "", "derived")
                })
                .collect();
            rows.push(ReportRow::check(
                "minor-trace",
                format!("d={d} n={n} M={}", m.one_based()),
                format!("{verdict:?}"),
                "Accepted",
                "oracle",
                accepted,
            ));
            render(&rows, format)?
        }
    };
    Ok(Outcome { output, code })
}

/// `exact-ex n --family-file f.scx...`: exact `ex(n, F)` for the facet hypergraphs of the files.
pub fn exact_ex(n: usize, family: &[SimplicialComplex], opts: &Options) -> Result<Outcome> {
    let members = family
        .iter()
        .map(UniformHypergraph::from_complex)
        .collect::<Result<Vec<_>>>()?;
    let spec = FamilySpec::new(members)?;
    let budget = opts.budget.map_or(DEFAULT_BUDGET as u64, |b| b.min(u64::MAX as u128) as u64);
    let r = extremal::exact_ex(n, &spec, budget)?;
    let rows = vec![ReportRow::info(
        "exact-ex",
        format!("n={n} k={} members={}", spec.k, spec.members.len()),
        r.value.to_string(),
        format!("nodes={}", r.nodes),
        "oracle",
    )];
    Outcome::from_rows(&rows, opts.format)
}

/// `random-construct n d --seed S --trials T`: deletion-method constructions avoiding `F_d`,
/// trial `t` seeded with `S + t`.
pub fn random_construct(n: usize, d: usize, trials: usize, opts: &Options) -> Result<Outcome> {
    let seed = opts.seed()?;
    let family = FamilySpec::forbidden(d)?;
    let seeds: Vec<u64> = (0..trials as u64).map(|t| seed.wrapping_add(t)).collect();
    let reports = extremal::random_free_constructions(n, &family, &seeds)?;
    let code = if reports.iter().all(|r| r.verified_free) {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    };
    let output = match opts.format {
        Format::Csv => records_to_csv(&reports)?,
        format => {
            let rows: Vec<ReportRow> = reports
                .iter()
                .map(|r| {
                    ReportRow::check(
                        "random-construct",
                        format!("n={} d={d} seed={} p={:.6}", r.n, r.seed, r.p),
                        format!(
                            "edges {} -> {} ({} copies, {} deleted)",
                            r.edges_before, r.edges_after, r.copies_found, r.copies_destroyed
                        ),
                        format!("free, E = {:.1}", r.expected_edges),
                        "oracle",
                        r.verified_free,
                    )
                })
                .collect();
            render(&rows, format)?
        }
    };
    Ok(Outcome { output, code })
}

fn cycle(len: usize) -> UniformHypergraph {
    UniformHypergraph::new(
        len,
        2,
        (0..len as u32).map(|i| [i, (i + 1) % len as u32]),
    )
    .expect("cycle edges are valid")
}

/// `polarity q`: the `PG(2,q)` polarity graph with its quadrilateral and edge-count checks.
pub fn polarity(q: u64, opts: &Options) -> Result<Outcome> {
    let g = polarity_graph(q)?;
    let c4_free = contains_copy(&g, &cycle(4))?.is_none();
    let floor = q * q * (q + 1);
    let f1 = FamilySpec::forbidden(1)?;
    let rows = vec![
        ReportRow::check(
            "polarity",
            format!("q={q}"),
            format!("{} vertices", g.n()),
            (q * q + q + 1).to_string(),
            "known",
            g.n() as u64 == q * q + q + 1,
        ),
        ReportRow::check(
            "polarity",
            format!("q={q}"),
            format!("{} edges", g.num_edges()),
            format!(">= {}", floor as f64 / 2.0),
            "known",
            2 * g.num_edges() as u64 >= floor,
        ),
        ReportRow::check("polarity", format!("q={q}"), format!("C4-free={c4_free}"), "true", "oracle", c4_free),
        ReportRow::check(
            "polarity",
            format!("q={q}"),
            format!("F_1-free={}", extremal::is_family_free(&g, &f1)?),
            "true",
            "known",
            extremal::is_family_free(&g, &f1)?,
        ),
    ];
    Outcome::from_rows(&rows, opts.format)
}

/// `shifted check file.scx`. Exits 1 when the complex is not shifted.
pub fn shifted_check(k: &SimplicialComplex, opts: &Options) -> Result<Outcome> {
    let w = is_shifted(k)?;
    let measured = match w.counterexample {
        None => "shifted".to_string(),
        Some((f, i, j)) => format!("({}, {}, {})", f.one_based(), i + 1, j + 1),
    };
    let rows = vec![ReportRow::check(
        "shifted",
        format!("n={}", k.num_vertices()),
        measured,
        "shifted",
        "oracle",
        w.verdict,
    )];
    Outcome::from_rows(&rows, opts.format)
}

/// `delta-dn d n`: the facets of `Δ(d,n)`.
pub fn delta_dn_cmd(d: usize, n: usize, opts: &Options) -> Result<Outcome> {
    let k = delta_dn(d, n)?;
    Ok(Outcome::ok(render_faces(k.facets(), opts.format)))
}

/// `probe-conjecture file.scx --r R`: `f_k(K) ≤ f_k(C_{R+1}(n))` for every k, and for 2-complexes
/// the `f_2` versus `4 f_1` probe. A failed bound exits 1.
pub fn probe_conjecture(k: &SimplicialComplex, r: usize, opts: &Options) -> Result<Outcome> {
    let mut rows: Vec<ReportRow> = conjecture_bound_check(k, r)?
        .into_iter()
        .map(|b| {
            ReportRow::check(
                "probe-conjecture",
                format!("r={r} k={}", b.k),
                b.f_k.to_string(),
                format!("<= {}", b.bound),
                "closed-form",
                b.pass,
            )
        })
        .collect();
    if k.dim() == 2 {
        let p = kalai_f12_probe(k)?;
        rows.push(ReportRow::info(
            "kalai-f12",
            format!("f=({}, {}, {})", p.f0, p.f1, p.f2),
            format!("f2 >= 4f1: {}", p.hypothesis),
            format!("4f1 = {}", p.four_f1),
            "known",
        ));
        rows.push(ReportRow::info(
            "kalai-f12-strengthened",
            format!("f=({}, {}, {})", p.f0, p.f1, p.f2),
            format!("f2 >= 4f1-10f0+20: {}", p.strengthened),
            format!("4f1-10f0+20 = {}", p.strengthened_rhs),
            "known",
        ));
    }
    Outcome::from_rows(&rows, opts.format)
}

/// A cell of the table of maximal `f_d` for d-complexes on `n` vertices embeddable in `R^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table1Cell {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub value: Table1Value,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Table1Value {
    /// `expected` from the table's formula, `measured` from an independent count
    Exact {
        formula: &'static str,
        expected: u128,
        measured: u128,
    },
    /// Open cell: the cyclic lower bound, the trivial upper bound, and the `F_d`-free exponent
    /// bound `n^(d+1−1/3^d)`, which only holds for large `n`.
    Interval {
        lower: u128,
        upper: u128,
        asymptotic_upper: f64,
    },
}

/// The closed-form entries, or `None` for open cells.
pub fn table1_formula(n: usize, r: usize, d: usize) -> Option<(&'static str, u128)> {
    let n128 = n as u128;
    let c = |k: usize| binomial(n as u64, k as u64);
    match (r, d) {
        (_, d) if d > r => Some(("0", 0)),
        (1, 1) => Some(("n-1", n128 - 1)),
        (2, 1) => Some(("3n-6", 3 * n128 - 6)),
        (2, 2) => Some(("2n-5", 2 * n128 - 5)),
        (3, 1) | (4, 1) | (5, 1) | (6, 1) | (7, 1) => Some(("C(n,2)", c(2))),
        (3, 2) => Some(("n(n-3)", n128 * (n128 - 3))),
        (3, 3) => Some(("n(n-3)/2-1", n128 * (n128 - 3) / 2 - 1)),
        (5, 2) | (6, 2) | (7, 2) => Some(("C(n,3)", c(3))),
        (7, 3) => Some(("C(n,4)", c(4))),
        _ => None,
    }
}

fn facet_count(d: usize, n: usize, k: usize) -> Result<u128> {
    let spec = CyclicSpec::new(d, n)?;
    Ok(cyclic::boundary_complex(&spec)?.f_vector().get(k) as u128)
}

/// Independent value for a closed-form cell: cyclic boundary spheres (one facet removed for
/// `r = d`), complete skeleta when `r ≥ 2d + 1`, a path for graphs on a line.
fn table1_measure(n: usize, r: usize, d: usize) -> Result<u128> {
    Ok(match (r, d) {
        (_, d) if d > r => 0,
        (1, 1) => {
            let path = SimplicialComplex::close_downward(
                (1..n).map(|i| Simplex::from_vertices([i - 1, i]).unwrap()),
            );
            path.f_vector().get(1) as u128
        }
        (2, 1) => facet_count(3, n, 1)?,
        (2, 2) => facet_count(3, n, 2)? - 1,
        (3, 2) => facet_count(4, n, 2)?,
        (3, 3) => facet_count(4, n, 3)? - 1,
        _ => SimplicialComplex::complete_skeleton(n, d as isize)
            .f_vector()
            .get(d) as u128,
    })
}

/// All 28 cells (`r ≤ 7`, `d ≤ 4`) for one `n ≥ 5`.
pub fn table1(n: usize) -> Result<Vec<Table1Cell>> {
    if n < 5 {
        return Err(Error::PreconditionViolated(format!("table needs n >= 5, got {n}")));
    }
    let mut cells = Vec::new();
    for r in 1..=7 {
        for d in 1..=4 {
            let value = match table1_formula(n, r, d) {
                Some((formula, expected)) => Table1Value::Exact {
                    formula,
                    expected,
                    measured: table1_measure(n, r, d)?,
                },
                None => {
                    let upper = binomial(n as u64, d as u64 + 1);
                    let lower = if n > r + 1 {
                        cyclic::f_vector_closed_form(&CyclicSpec::new(r + 1, n)?).get(d) as u128
                    } else {
                        upper
                    };
                    Table1Value::Interval {
                        lower,
                        upper,
                        asymptotic_upper: erdos_bound(n as f64, d as u32 + 1, 3),
                    }
                }
            };
            cells.push(Table1Cell { n, r, d, value });
        }
    }
    Ok(cells)
}

pub fn table1_rows(ns: &[usize]) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for &n in ns {
        for cell in table1(n)? {
            let params = format!("n={} r={} d={}", cell.n, cell.r, cell.d);
            rows.push(match cell.value {
                Table1Value::Exact {
                    formula,
                    expected,
                    measured,
                } => ReportRow::check(
                    "table1",
                    params,
                    measured.to_string(),
                    format!("{formula} = {expected}"),
                    "known",
                    measured == expected,
                ),
                Table1Value::Interval {
                    lower,
                    upper,
                    asymptotic_upper,
                } => ReportRow::check(
                    "table1",
                    params,
                    format!("[{lower}, {upper}]"),
                    format!(
                        "lower f_d(C_(r+1)(n)), upper C(n,d+1); asymptotic n^(d+1-1/3^d) = {asymptotic_upper:.1}"
                    ),
                    "closed-form",
                    lower <= upper,
                ),
            });
        }
    }
    Ok(rows)
}

/// `table1 n...`.
pub fn cmd_table1(ns: &[usize], opts: &Options) -> Result<Outcome> {
    if opts.format == Format::Md {
        return Ok(Outcome::ok(table1_markdown(ns)?));
    }
    Outcome::from_rows(&table1_rows(ns)?, opts.format)
}

/// The table laid out as in print: rows `r`, columns `d`, one block per `n`.
fn table1_markdown(ns: &[usize]) -> Result<String> {
    let mut s = String::new();
    for &n in ns {
        s.push_str(&format!("n = {n}\n\n| | d=1 | d=2 | d=3 | d=4 |\n|---|---|---|---|---|\n"));
        let cells = table1(n)?;
        for r in 1..=7 {
            s.push_str(&format!("| r={r} |"));
            for cell in cells.iter().filter(|c| c.r == r) {
                let text = match &cell.value {
                    Table1Value::Exact { measured, .. } => measured.to_string(),
                    Table1Value::Interval { lower, upper, .. } => format!("[{lower}, {upper}]"),
                };
                s.push_str(&format!(" {text} |"));
            }
            s.push('\n');
        }
        s.push('\n');
    }
    Ok(s)
}

/// Lower, upper and deletion-method bounds on `max f_d` for d-complexes embeddable in `R^{2d}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    pub d: usize,
    pub n: usize,
    /// `f_d(C_{2d+1}(n))`, or `C(n, d+1)` when `n ≤ 2d + 1`
    pub lower: u128,
    /// `d + 1 − 1/3^d`
    pub upper_exponent: f64,
    pub upper: f64,
    /// `c2 = 2(d+1)/(3^{d+1} − 1)` from the extremal members of `F_d`
    pub c2: f64,
    pub deletion_exponent: f64,
    pub deletion_floor: f64,
}

pub fn bounds(d: usize, n: usize) -> Result<Bounds> {
    if d == 0 {
        return Err(Error::PreconditionViolated("bounds need d >= 1".into()));
    }
    let lower = if n > 2 * d + 1 {
        cyclic::f_vector_closed_form(&CyclicSpec::new(2 * d + 1, n)?).get(d) as u128
    } else {
        binomial(n as u64, d as u64 + 1)
    };
    let ext = family_extremes(d)?;
    let (n0, m0, k) = (ext.max_vertices, ext.min_edges, d + 1);
    let c2 = (n0 - k) as f64 / (m0 - 1) as f64;
    let upper_exponent = d as f64 + 1.0 - 1.0 / 3f64.powi(d as i32);
    let deletion_exponent = d as f64 + 1.0 - c2;
    Ok(Bounds {
        d,
        n,
        lower,
        upper_exponent,
        upper: erdos_bound(n as f64, k as u32, 3),
        c2,
        deletion_exponent,
        deletion_floor: (n as f64).powf(deletion_exponent),
    })
}

/// `bounds d n`.
pub fn cmd_bounds(d: usize, n: usize, opts: &Options) -> Result<Outcome> {
    let b = bounds(d, n)?;
    let params = format!("d={d} n={n}");
    let mut rows = vec![ReportRow::info(
        "bounds-lower",
        params.clone(),
        b.lower.to_string(),
        "f_d(C_(2d+1)(n))",
        "closed-form",
    )];
    if d == 1 && n >= 3 {
        let planar = 3 * n as u128 - 6;
        rows.push(ReportRow::check(
            "bounds-lower-planar",
            params.clone(),
            b.lower.to_string(),
            format!("3n-6 = {planar}"),
            "known",
            b.lower == planar,
        ));
    }
    rows.push(ReportRow::info(
        "bounds-upper",
        params.clone(),
        format!("{:.3}", b.upper),
        format!("n^{:.6}", b.upper_exponent),
        "asymptotic",
    ));
    rows.push(ReportRow::info(
        "bounds-deletion",
        params,
        format!("{:.3}", b.deletion_floor),
        format!("n^{:.6} (c2 = {:.6})", b.deletion_exponent, b.c2),
        "asymptotic",
    ));
    Outcome::from_rows(&rows, opts.format)
}
