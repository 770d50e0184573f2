//! The `.scx` plain-text complex format.
//!
//! ```text
//! # optional comments
//! vertices 5
//! 1 2 3
//! 3 4
//! 5
//! ```
//!
//! One maximal face per line with 1-based labels separated by single spaces. With a
//! `vertices N` header, labels must lie in `[N]` and unlisted labels become isolated
//! vertices. The writer emits the header only when the vertex set is exactly `[N]`, so
//! `read(write(K)) == K` for every complex and canonical files round-trip byte for byte.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

pub fn write(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    let n = k.num_vertices();
    if k.vertex_set() == Simplex::range(n) {
        out.push_str(&format!("vertices {n}\n"));
    }
    for f in k.facets() {
        out.push_str(&f.one_based());
        out.push('\n');
    }
    out
}

pub fn read(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Option<usize> = None;
    let mut faces = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices ") {
            if declared.is_some() || !faces.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "header must precede faces and appear once".into(),
                });
            }
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad vertex count {rest:?}"),
            })?;
            declared = Some(n);
            continue;
        }
        let mut labels = Vec::new();
        for tok in line.split(' ') {
            let l: usize = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad label {tok:?}"),
            })?;
            if l == 0 || declared.is_some_and(|n| l > n) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("label {l} out of range"),
                });
            }
            labels.push(l);
        }
        let face = Simplex::from_one_based(labels).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        faces.push(face);
    }
    let mut k = SimplicialComplex::close_downward(faces);
    if let Some(n) = declared {
        let missing = Simplex::range(n).difference(k.vertex_set());
        if !missing.is_empty() {
            k = SimplicialComplex::close_downward(
                k.facets()
                    .iter()
                    .copied()
                    .chain(missing.vertices().map(|v| Simplex::EMPTY.with(v))),
            );
        }
    }
    Ok(k)
}

pub fn read_file(path: &std::path::Path) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    read(&text)
}
