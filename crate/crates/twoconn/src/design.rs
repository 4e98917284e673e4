//! Symmetric balanced incomplete block designs: cyclic difference-set
//! construction, axiom-by-axiom validation, incidence graphs, and the text
//! file format used for importing designs the library cannot build itself.
//!
//! Nothing produced here is trusted until [`validate_design`] has passed:
//! difference sets are candidates, files are claims, and the pair-count
//! oracle is the arbiter in both cases.

use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum DesignError {
    #[error("malformed design file, line {line}: {msg}")]
    MalformedDesignFile { line: usize, msg: String },
    #[error("design failed validation: {0}")]
    InvalidDesign(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// A claimed `(v, k, lambda)` symmetric design: `v` points, a block list,
/// and the declared parameters. Blocks are stored as given (the validator
/// checks set-ness, so raw input survives until then).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// One violated design axiom with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    BlockCountMismatch { expected: usize, found: usize },
    BlockNotSet { block: usize, point: usize },
    PointOutOfRange { block: usize, point: usize },
    BlockSizeMismatch { block: usize, expected: usize, found: usize },
    ReplicationMismatch { point: usize, expected: usize, found: usize },
    PairCountMismatch { p: usize, q: usize, expected: usize, found: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::BlockCountMismatch { expected, found } => {
                write!(f, "expected b = v = {expected} blocks, found {found}")
            }
            Violation::BlockNotSet { block, point } => {
                write!(f, "block {block} repeats point {point}")
            }
            Violation::PointOutOfRange { block, point } => {
                write!(f, "block {block} contains out-of-range point {point}")
            }
            Violation::BlockSizeMismatch { block, expected, found } => {
                write!(f, "block {block} has size {found}, expected k = {expected}")
            }
            Violation::ReplicationMismatch { point, expected, found } => {
                write!(f, "point {point} lies in {found} blocks, expected r = k = {expected}")
            }
            Violation::PairCountMismatch { p, q, expected, found } => {
                write!(f, "pair ({p}, {q}) lies in {found} blocks, expected lambda = {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("({}, {}, {}) design: all axioms hold", self.v, self.k, self.lambda)
        } else {
            format!(
                "({}, {}, {}) candidate: {} violation(s), first: {}",
                self.v,
                self.k,
                self.lambda,
                self.violations.len(),
                self.violations[0]
            )
        }
    }
}

/// Develops the translates of `d` modulo `v` into a candidate design.
///
/// The result is NOT trusted: `k` is inferred from `|d|`, `lambda` from the
/// symmetric-design identity `lambda (v-1) = k (k-1)`, and the caller must
/// run [`validate_design`] before using the blocks for anything.
pub fn design_from_difference_set(v: usize, d: &VertexSet) -> Design {
    let k = d.len();
    let lambda = if v > 1 { (k * k.saturating_sub(1)) / (v - 1) } else { 0 };
    let blocks = (0..v)
        .map(|shift| {
            let mut b: Vec<usize> = d.iter().map(|x| (x + shift) % v).collect();
            b.sort_unstable();
            b
        })
        .collect();
    Design { v, k, lambda, blocks }
}

/// Checks every design axiom and reports all violations with witnesses.
pub fn validate_design(des: &Design) -> ValidationReport {
    let mut violations = Vec::new();
    if des.blocks.len() != des.v {
        violations
            .push(Violation::BlockCountMismatch { expected: des.v, found: des.blocks.len() });
    }
    let mut structurally_sound = true;
    for (bi, block) in des.blocks.iter().enumerate() {
        let mut seen = vec![false; des.v];
        for &p in block {
            if p >= des.v {
                violations.push(Violation::PointOutOfRange { block: bi, point: p });
                structurally_sound = false;
            } else if seen[p] {
                violations.push(Violation::BlockNotSet { block: bi, point: p });
                structurally_sound = false;
            } else {
                seen[p] = true;
            }
        }
        if block.len() != des.k {
            violations.push(Violation::BlockSizeMismatch {
                block: bi,
                expected: des.k,
                found: block.len(),
            });
        }
    }
    if structurally_sound {
        let mut replication = vec![0usize; des.v];
        let mut pair_counts = vec![0usize; des.v * des.v];
        for block in &des.blocks {
            for (i, &p) in block.iter().enumerate() {
                replication[p] += 1;
                for &q in &block[i + 1..] {
                    let (a, b) = (p.min(q), p.max(q));
                    pair_counts[a * des.v + b] += 1;
                }
            }
        }
        for (p, &r) in replication.iter().enumerate() {
            if r != des.k {
                violations.push(Violation::ReplicationMismatch {
                    point: p,
                    expected: des.k,
                    found: r,
                });
            }
        }
        for p in 0..des.v {
            for q in (p + 1)..des.v {
                let found = pair_counts[p * des.v + q];
                if found != des.lambda {
                    violations.push(Violation::PairCountMismatch {
                        p,
                        q,
                        expected: des.lambda,
                        found,
                    });
                }
            }
        }
    }
    ValidationReport { v: des.v, k: des.k, lambda: des.lambda, violations }
}

/// Bipartite incidence graph: points get ids `0..v`, blocks `v..2v`, with an
/// edge whenever the point lies in the block. Requires a validated design.
pub fn incidence_graph(des: &Design) -> Result<Graph, DesignError> {
    let report = validate_design(des);
    if !report.passed() {
        return Err(DesignError::InvalidDesign(report.summary()));
    }
    let mut edges = Vec::with_capacity(des.v * des.k);
    for (bi, block) in des.blocks.iter().enumerate() {
        for &p in block {
            edges.push((p, des.v + bi));
        }
    }
    Ok(Graph::from_edge_list(2 * des.v, &edges).expect("incidence ids are in range"))
}

/// Built-in cyclic difference-set candidates, by block size `k`.
///
/// Candidates exist for `k` in {4, 5, 6, 9}; they are raw inputs for
/// [`design_from_difference_set`] and carry no promise of validity. (The
/// `k = 6` candidate in fact fails validation: `Z_16` admits no such
/// difference set, and the validator is what establishes that.) Designs with
/// `k` in {11, 13} are file-import only.
pub fn builtin_candidate(k: usize) -> Option<(usize, VertexSet)> {
    match k {
        // Complement of {1, 2, 4} in Z_7.
        4 => Some((7, VertexSet::new(vec![0, 3, 5, 6]))),
        // Quadratic residues mod 11.
        5 => Some((11, VertexSet::new((1..11).map(|x| (x * x) % 11).collect()))),
        6 => Some((16, VertexSet::new(vec![0, 1, 2, 4, 5, 8]))),
        // Quartic residues mod 37.
        9 => Some((37, VertexSet::new((1..37u64).map(|x| (x.pow(4) % 37) as usize).collect()))),
        _ => None,
    }
}

/// Develops and validates the built-in candidate for block size `k`.
pub fn builtin_design(k: usize) -> Option<Result<Design, DesignError>> {
    let (v, d) = builtin_candidate(k)?;
    let des = design_from_difference_set(v, &d);
    let report = validate_design(&des);
    Some(if report.passed() {
        Ok(des)
    } else {
        Err(DesignError::InvalidDesign(report.summary()))
    })
}

/// Parses the design text format: line 1 `v k lambda`, then exactly `v`
/// lines of `k` space-separated point ids. `#` starts a comment. The result
/// is a claim; run [`validate_design`] on it.
pub fn parse_design(text: &str) -> Result<Design, DesignError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut nums = Vec::new();
        for tok in line.split_whitespace() {
            let x: usize = tok.parse().map_err(|_| DesignError::MalformedDesignFile {
                line: idx + 1,
                msg: format!("bad integer {tok:?}"),
            })?;
            nums.push(x);
        }
        rows.push((idx + 1, nums));
    }
    let Some((hline, header)) = rows.first().cloned() else {
        return Err(DesignError::MalformedDesignFile { line: 1, msg: "empty file".into() });
    };
    if header.len() != 3 {
        return Err(DesignError::MalformedDesignFile {
            line: hline,
            msg: "expected header `v k lambda`".into(),
        });
    }
    let (v, k, lambda) = (header[0], header[1], header[2]);
    let body = &rows[1..];
    if body.len() != v {
        let line = body.last().map(|r| r.0).unwrap_or(hline);
        return Err(DesignError::MalformedDesignFile {
            line,
            msg: format!("expected {v} block lines, found {}", body.len()),
        });
    }
    let mut blocks = Vec::with_capacity(v);
    for (lineno, nums) in body {
        if nums.len() != k {
            return Err(DesignError::MalformedDesignFile {
                line: *lineno,
                msg: format!("expected {k} points in block, found {}", nums.len()),
            });
        }
        blocks.push(nums.clone());
    }
    Ok(Design { v, k, lambda, blocks })
}

pub fn load_design(path: impl AsRef<Path>) -> Result<Design, DesignError> {
    parse_design(&fs::read_to_string(path)?)
}

/// Bit-exact writer: each block sorted internally, blocks sorted
/// lexicographically.
pub fn design_to_string(des: &Design) -> String {
    let mut blocks: Vec<Vec<usize>> = des
        .blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort();
    let mut out = format!("{} {} {}\n", des.v, des.k, des.lambda);
    for b in blocks {
        let row: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
