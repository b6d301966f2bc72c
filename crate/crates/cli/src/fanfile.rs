//! Canonical fan files.
//!
//! ```toml
//! rank = 2
//! lineality = []
//! rays = [
//!   [-1, 0],
//!   [0, 1],
//! ]
//! maximal_cones = [
//!   [0, 1],
//! ]
//!
//! [meta]
//! which = "chow"
//! ```
//!
//! Rays are the primitive ray generators in lexicographic order and maximal
//! cones are sorted lists of ray indices, themselves sorted. `meta` may carry
//! `which`, `bound`, `stabilized` and `q0` (the cones of `Q0` as ray index
//! lists). Equal fans with equal metadata produce byte-identical files.

use std::fmt::Write;

use num_traits::ToPrimitive;
use quotfan::exactlin::parse_rat;
use quotfan::{Fan, Rat, RatVector};
use serde::Deserialize;

use crate::{CliError, CliResult};

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanMeta {
    pub which: Option<String>,
    pub bound: Option<u64>,
    pub stabilized: Option<bool>,
    pub q0: Option<Vec<Vec<usize>>>,
}

impl FanMeta {
    pub fn which(name: &str) -> FanMeta {
        FanMeta {
            which: Some(name.to_string()),
            ..FanMeta::default()
        }
    }

    fn is_empty(&self) -> bool {
        *self == FanMeta::default()
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_rat(&self) -> CliResult<Rat> {
        match self {
            Entry::Int(v) => Ok(quotfan::exactlin::rat(*v)),
            Entry::Text(t) => parse_rat(t).ok_or_else(|| CliError::Invalid(format!("not a rational: {t:?}"))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanDoc {
    rank: usize,
    lineality: Vec<Vec<Entry>>,
    rays: Vec<Vec<Entry>>,
    maximal_cones: Vec<Vec<usize>>,
    #[serde(default)]
    meta: FanMeta,
}

/// A number as it appears in a TOML document.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        if let Some(v) = r.to_integer().to_i64() {
            return v.to_string();
        }
    }
    format!("\"{r}\"")
}

pub fn format_vector(v: &RatVector) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("[{}]", parts.join(", "))
}

fn format_indices(ix: &[usize]) -> String {
    let parts: Vec<String> = ix.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Writes `key = [...]` with one element per line, or `key = []`.
pub(crate) fn write_list(out: &mut String, key: &str, items: &[String]) {
    if items.is_empty() {
        writeln!(out, "{key} = []").unwrap();
        return;
    }
    writeln!(out, "{key} = [").unwrap();
    for item in items {
        writeln!(out, "  {item},").unwrap();
    }
    writeln!(out, "]").unwrap();
}

/// The fan fields (`rank`, `lineality`, `rays`, `maximal_cones`) of a fan file.
pub(crate) fn write_fan_body(out: &mut String, fan: &Fan) {
    writeln!(out, "rank = {}", fan.ambient_dim()).unwrap();
    let lineality: Vec<String> = fan.lineality().iter().map(format_vector).collect();
    write_list(out, "lineality", &lineality);
    let rays: Vec<String> = fan.rays().iter().map(format_vector).collect();
    write_list(out, "rays", &rays);
    let cones: Vec<String> = fan.maximal_cone_indices().iter().map(|c| format_indices(c)).collect();
    write_list(out, "maximal_cones", &cones);
}

/// Canonical text of a fan file.
pub fn emit_fan(fan: &Fan, meta: &FanMeta) -> String {
    let mut out = String::new();
    write_fan_body(&mut out, fan);
    if !meta.is_empty() {
        out.push_str("\n[meta]\n");
        if let Some(which) = &meta.which {
            writeln!(out, "which = {}", toml_string(which)).unwrap();
        }
        if let Some(bound) = meta.bound {
            writeln!(out, "bound = {bound}").unwrap();
        }
        if let Some(stabilized) = meta.stabilized {
            writeln!(out, "stabilized = {stabilized}").unwrap();
        }
        if let Some(q0) = &meta.q0 {
            let items: Vec<String> = q0.iter().map(|c| format_indices(c)).collect();
            write_list(&mut out, "q0", &items);
        }
    }
    out
}

fn toml_string(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if c.is_control() => write!(out, "\\u{:04X}", c as u32).unwrap(),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn parse_vectors(rank: usize, key: &str, rows: &[Vec<Entry>]) -> CliResult<Vec<RatVector>> {
    rows.iter()
        .map(|row| {
            if row.len() != rank {
                return Err(CliError::Invalid(format!(
                    "{key}: vector of length {} in rank {rank}",
                    row.len()
                )));
            }
            Ok(RatVector::new(row.iter().map(Entry::to_rat).collect::<CliResult<_>>()?))
        })
        .collect()
}

/// Reads a fan file. The fan data must be canonical and well formed.
pub fn parse_fan(text: &str) -> CliResult<(Fan, FanMeta)> {
    let doc: FanDoc = toml::from_str(text)?;
    let lineality = parse_vectors(doc.rank, "lineality", &doc.lineality)?;
    let rays = parse_vectors(doc.rank, "rays", &doc.rays)?;
    let fan = Fan::from_parts(doc.rank, &lineality, &rays, &doc.maximal_cones)?;
    Ok((fan, doc.meta))
}
