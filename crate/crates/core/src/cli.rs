//! Batch command-line frontend. Emits deterministic JSON (default), CSV for
//! tables and DOT for posets; identical invocations produce byte-identical
//! output.

use crate::alcove::{enumerate_perm, is_permissible_oracle, PermDatum, Window};
use crate::bruhat::{bruhat_leq, length_im};
use crate::error::Error;
use crate::prank::{
    newton_vector, prank_sym, prank_uni_inert, prank_uni_ramified, prank_uni_split, StrataConfig,
};
use crate::reports::{hb_report, ordinary_density, prank0_dimension, tuple_power};
use crate::weyl::{ExtAffineElement, FrobeniusTuple, GroupFlavor, Permutation};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Window(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Window(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Window(m) => write!(f, "window: {m}"),
            CliError::Internal(m) => write!(f, "internal: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::WindowExceeded(m) => CliError::Window(m),
            Error::Invariant(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Gsp,
    Gu,
    Gl,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PrankFlavorArg {
    Gsp,
    Gu,
    GlInert,
    GlSplit,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Dot,
}

#[derive(Parser, Debug)]
#[command(
    name = "krstrata",
    version,
    about = "Stratification index combinatorics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate permissible tuples with lengths and the oracle cross-check.
    EnumPerm {
        #[arg(long)]
        flavor: FlavorArg,
        /// Ramification index (e_0 for the gu flavor).
        #[arg(long)]
        e: u32,
        #[arg(long)]
        n: usize,
        /// Signature parameter, gl flavor only.
        #[arg(long)]
        r: Option<u32>,
        /// Frobenius orbit length.
        #[arg(long, default_value_t = 1)]
        f: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// p-rank of every stratum in the product index set.
    PrankTable {
        #[arg(long)]
        flavor: PrankFlavorArg,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        n: usize,
        /// Orbit length (f, or f_0 for the inert and split cases).
        #[arg(long, default_value_t = 1)]
        f: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Covering relations of the permissible poset.
    Poset {
        #[arg(long)]
        flavor: FlavorArg,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = 1)]
        f: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
    },
    /// Density verdict for the ordinary locus.
    Density {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        n: usize,
    },
    /// Dimension of the p-rank 0 locus with a witness.
    Prank0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Structure report for the rank-two totally real tower.
    Hb {
        #[arg(long)]
        g: u32,
    },
    /// Slope vector of an explicit tuple written as `w=[..];l=[..]` pairs.
    Newton {
        #[arg(long)]
        tuple: String,
    },
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    command: String,
    engine_version: String,
    parameters: BTreeMap<String, serde_json::Value>,
    rows: T,
}

fn envelope<T: Serialize>(
    command: &str,
    parameters: BTreeMap<String, serde_json::Value>,
    rows: T,
) -> String {
    let env = Envelope {
        command: command.to_string(),
        engine_version: ENGINE_VERSION.to_string(),
        parameters,
        rows,
    };
    let mut out = serde_json::to_string_pretty(&env).expect("serializable");
    out.push('\n');
    out
}

#[derive(Serialize, Clone)]
struct ElementJson {
    w: Vec<usize>,
    l: Vec<i64>,
}

impl From<&ExtAffineElement> for ElementJson {
    fn from(x: &ExtAffineElement) -> Self {
        ElementJson {
            w: x.w().one_line().to_vec(),
            l: x.lambda().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct PermRow {
    components: Vec<ElementJson>,
    length: Option<u64>,
    oracle_agrees: bool,
}

#[derive(Serialize)]
struct PrankRow {
    components: Vec<ElementJson>,
    length: Option<u64>,
    prank: u64,
}

fn datum_for(flavor: FlavorArg, e: u32, n: usize, r: Option<u32>) -> Result<PermDatum, CliError> {
    match flavor {
        FlavorArg::Gsp => Ok(PermDatum::symplectic(n, e)),
        FlavorArg::Gu => Ok(PermDatum::unitary_ramified(n, e)),
        FlavorArg::Gl => {
            let r = r.ok_or_else(|| CliError::Usage("gl flavor requires --r".into()))?;
            Ok(PermDatum::general_linear(n, e, r))
        }
    }
}

fn tuple_length(t: &FrobeniusTuple, flavor: GroupFlavor) -> Result<Option<u64>, CliError> {
    if matches!(flavor, GroupFlavor::UnitarySimilitudeRamified { .. }) {
        return Ok(None);
    }
    let mut total = 0u64;
    for x in t.components() {
        total += length_im(x, flavor)?;
    }
    Ok(Some(total))
}

fn run_enum_perm(
    flavor: FlavorArg,
    e: u32,
    n: usize,
    r: Option<u32>,
    f: u32,
    format: FormatArg,
) -> Result<String, CliError> {
    if f < 1 {
        return Err(CliError::Usage("f must be at least 1".into()));
    }
    let window = Window::from_env();
    let datum = datum_for(flavor, e, n, r)?;
    let set = enumerate_perm(&datum, &window)?;
    let tuples = tuple_power(&set, f as usize);
    let mut rows = Vec::with_capacity(tuples.len());
    let mut all_agree = true;
    for t in &tuples {
        let oracle_agrees = t
            .components()
            .iter()
            .map(|x| is_permissible_oracle(x, &datum))
            .collect::<Result<Vec<_>, _>>()?
            .iter()
            .all(|&b| b);
        all_agree &= oracle_agrees;
        rows.push(PermRow {
            components: t.components().iter().map(ElementJson::from).collect(),
            length: tuple_length(t, datum.flavor)?,
            oracle_agrees,
        });
    }
    if !all_agree {
        return Err(CliError::Internal(
            "permissibility oracle disagreement".into(),
        ));
    }
    let mut params = BTreeMap::new();
    params.insert("flavor".into(), json!(format!("{flavor:?}").to_lowercase()));
    params.insert("e".into(), json!(e));
    params.insert("n".into(), json!(n));
    params.insert("f".into(), json!(f));
    if let Some(r) = r {
        params.insert("r".into(), json!(r));
    }
    match format {
        FormatArg::Json => Ok(envelope("enum-perm", params, rows)),
        FormatArg::Csv => {
            let mut out = String::from("components,length,oracle_agrees\n");
            for (t, row) in tuples.iter().zip(&rows) {
                out.push_str(&format!(
                    "\"{}\",{},{}\n",
                    t,
                    row.length.map_or(String::new(), |l| l.to_string()),
                    row.oracle_agrees
                ));
            }
            Ok(out)
        }
        FormatArg::Dot => Err(CliError::Usage("enum-perm has no dot format".into())),
    }
}

fn run_prank_table(
    flavor: PrankFlavorArg,
    e: u32,
    n: usize,
    f: u32,
    r: Option<u32>,
    format: FormatArg,
) -> Result<String, CliError> {
    if f < 1 {
        return Err(CliError::Usage("f must be at least 1".into()));
    }
    let window = Window::from_env();
    let (datum, cfg) = match flavor {
        PrankFlavorArg::Gsp => (
            PermDatum::symplectic(n, e),
            StrataConfig::Symplectic { e, f, n },
        ),
        PrankFlavorArg::Gu => (
            PermDatum::unitary_ramified(n, e),
            StrataConfig::UnitaryRamified { e0: e, f, n },
        ),
        PrankFlavorArg::GlInert => {
            let r = r.ok_or_else(|| CliError::Usage("gl-inert requires --r".into()))?;
            (
                PermDatum::general_linear(n, e, r),
                StrataConfig::UnitaryInert { e, f0: f, n },
            )
        }
        PrankFlavorArg::GlSplit => {
            let r = r.ok_or_else(|| CliError::Usage("gl-split requires --r".into()))?;
            (
                PermDatum::general_linear(n, e, r),
                StrataConfig::UnitarySplit { e, f0: f, n, r },
            )
        }
    };
    let set = enumerate_perm(&datum, &window)?;
    let tuples = tuple_power(&set, f as usize);
    let mut rows = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let prank = match cfg {
            StrataConfig::Symplectic { .. } => prank_sym(t, &cfg)?,
            StrataConfig::UnitaryRamified { .. } => prank_uni_ramified(t, &cfg)?,
            StrataConfig::UnitaryInert { .. } => prank_uni_inert(t, &cfg)?,
            StrataConfig::UnitarySplit { .. } => prank_uni_split(t, &cfg)?,
        };
        rows.push(PrankRow {
            components: t.components().iter().map(ElementJson::from).collect(),
            length: tuple_length(t, datum.flavor)?,
            prank,
        });
    }
    let mut params = BTreeMap::new();
    params.insert(
        "flavor".into(),
        json!(match flavor {
            PrankFlavorArg::Gsp => "gsp",
            PrankFlavorArg::Gu => "gu",
            PrankFlavorArg::GlInert => "gl-inert",
            PrankFlavorArg::GlSplit => "gl-split",
        }),
    );
    params.insert("e".into(), json!(e));
    params.insert("n".into(), json!(n));
    params.insert("f".into(), json!(f));
    if let Some(r) = r {
        params.insert("r".into(), json!(r));
    }
    match format {
        FormatArg::Json => Ok(envelope("prank-table", params, rows)),
        FormatArg::Csv => {
            let mut out = String::from("components,length,prank\n");
            for (t, row) in tuples.iter().zip(&rows) {
                out.push_str(&format!(
                    "\"{}\",{},{}\n",
                    t,
                    row.length.map_or(String::new(), |l| l.to_string()),
                    row.prank
                ));
            }
            Ok(out)
        }
        FormatArg::Dot => Err(CliError::Usage("prank-table has no dot format".into())),
    }
}

fn tuple_leq(
    a: &FrobeniusTuple,
    b: &FrobeniusTuple,
    flavor: GroupFlavor,
) -> Result<bool, CliError> {
    for (x, y) in a.components().iter().zip(b.components()) {
        if !bruhat_leq(x, y, flavor)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run_poset(
    flavor: FlavorArg,
    e: u32,
    n: usize,
    r: Option<u32>,
    f: u32,
    format: FormatArg,
) -> Result<String, CliError> {
    if matches!(flavor, FlavorArg::Gu) {
        return Err(CliError::Usage(
            "poset is available for the gsp and gl flavors".into(),
        ));
    }
    if f < 1 {
        return Err(CliError::Usage("f must be at least 1".into()));
    }
    let window = Window::from_env();
    let datum = datum_for(flavor, e, n, r)?;
    let cfg = match flavor {
        FlavorArg::Gsp => StrataConfig::Symplectic { e, f, n },
        FlavorArg::Gl => StrataConfig::UnitarySplit {
            e,
            f0: f,
            n,
            r: r.unwrap_or(0),
        },
        FlavorArg::Gu => unreachable!(),
    };
    let set = enumerate_perm(&datum, &window)?;
    let tuples = tuple_power(&set, f as usize);
    if tuples.len() > 4096 {
        return Err(CliError::Window(format!(
            "{} strata exceed the poset cap 4096",
            tuples.len()
        )));
    }
    let mut labels = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let prank = match cfg {
            StrataConfig::Symplectic { .. } => prank_sym(t, &cfg)?,
            _ => prank_uni_split(t, &cfg)?,
        };
        let length = tuple_length(t, datum.flavor)?.unwrap_or(0);
        labels.push((t.to_string(), length, prank));
    }
    let mut leq = vec![vec![false; tuples.len()]; tuples.len()];
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            leq[i][j] = tuple_leq(a, b, datum.flavor)?;
        }
    }
    let mut edges = Vec::new();
    for i in 0..tuples.len() {
        for j in 0..tuples.len() {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = !(0..tuples.len()).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if covered {
                edges.push((i, j));
            }
        }
    }
    match format {
        FormatArg::Dot => {
            let mut out = String::from("digraph strata {\n  rankdir=BT;\n");
            for (i, (label, length, prank)) in labels.iter().enumerate() {
                out.push_str(&format!(
                    "  n{i} [label=\"{label} | len={length} | prank={prank}\"];\n"
                ));
            }
            for (i, j) in &edges {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
            out.push_str("}\n");
            Ok(out)
        }
        FormatArg::Json => {
            let rows = json!({
                "nodes": labels
                    .iter()
                    .map(|(label, length, prank)| json!({
                        "index": label, "length": length, "prank": prank
                    }))
                    .collect::<Vec<_>>(),
                "cover_edges": edges,
            });
            let mut params = BTreeMap::new();
            params.insert("flavor".into(), json!(format!("{flavor:?}").to_lowercase()));
            params.insert("e".into(), json!(e));
            params.insert("n".into(), json!(n));
            params.insert("f".into(), json!(f));
            if let Some(r) = r {
                params.insert("r".into(), json!(r));
            }
            Ok(envelope("poset", params, rows))
        }
        FormatArg::Csv => Err(CliError::Usage("poset has no csv format".into())),
    }
}

/// Parses `w=[2,1];l=[1,0];w=[1,2];l=[0,1]` into a tuple; consecutive
/// `w`/`l` pairs are the components.
pub fn parse_tuple(input: &str) -> Result<FrobeniusTuple, CliError> {
    fn parse_list(body: &str) -> Result<Vec<i64>, CliError> {
        let trimmed = body.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| CliError::Usage(format!("expected [..], got {trimmed}")))?;
        if inner.trim().is_empty() {
            return Err(CliError::Usage("empty list".into()));
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad integer {tok}")))
            })
            .collect()
    }

    let mut components = Vec::new();
    let mut pending_w: Option<Vec<i64>> = None;
    for field in input.split(';') {
        let field = field.trim();
        if let Some(body) = field.strip_prefix("w=") {
            if pending_w.is_some() {
                return Err(CliError::Usage("w= without matching l=".into()));
            }
            pending_w = Some(parse_list(body)?);
        } else if let Some(body) = field.strip_prefix("l=") {
            let w = pending_w
                .take()
                .ok_or_else(|| CliError::Usage("l= before w=".into()))?;
            let images = w
                .iter()
                .map(|&v| usize::try_from(v).map_err(|_| CliError::Usage("negative image".into())))
                .collect::<Result<Vec<_>, _>>()?;
            let perm = Permutation::new(images)?;
            components.push(ExtAffineElement::new(perm, parse_list(body)?)?);
        } else {
            return Err(CliError::Usage(format!("unrecognized field {field}")));
        }
    }
    if pending_w.is_some() {
        return Err(CliError::Usage("dangling w= field".into()));
    }
    if components.is_empty() {
        return Err(CliError::Usage("empty tuple".into()));
    }
    Ok(FrobeniusTuple::new(components)?)
}

fn run_newton(tuple: &str) -> Result<String, CliError> {
    let t = parse_tuple(tuple)?;
    let nv = newton_vector(&t)?;
    let rows = json!({
        "nu": nv
            .nu
            .iter()
            .map(|comp| comp.iter().map(|q| q.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "zero_multiplicity": nv.zero_multiplicity,
        "n_used": nv.n_used,
    });
    let mut params = BTreeMap::new();
    params.insert("tuple".into(), json!(t.to_string()));
    Ok(envelope("newton", params, rows))
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::EnumPerm {
            flavor,
            e,
            n,
            r,
            f,
            format,
        } => run_enum_perm(flavor, e, n, r, f, format),
        Command::PrankTable {
            flavor,
            e,
            n,
            f,
            r,
            format,
        } => run_prank_table(flavor, e, n, f, r, format),
        Command::Poset {
            flavor,
            e,
            n,
            r,
            f,
            format,
        } => run_poset(flavor, e, n, r, f, format),
        Command::Density { e, f, n } => {
            let rep = ordinary_density(e, f, n)?;
            let mut params = BTreeMap::new();
            params.insert("e".into(), json!(e));
            params.insert("f".into(), json!(f));
            params.insert("n".into(), json!(n));
            let mut out = envelope("density", params, &rep);
            out.push_str(&format!("dense: {}\n", rep.dense));
            Ok(out)
        }
        Command::Prank0 { n, r } => {
            let rep = prank0_dimension(n, r)?;
            let mut params = BTreeMap::new();
            params.insert("n".into(), json!(n));
            params.insert("r".into(), json!(r));
            if !rep.matches_closed_form {
                return Err(CliError::Internal(
                    "brute-force maximum disagrees with the closed form".into(),
                ));
            }
            Ok(envelope("prank0", params, &rep))
        }
        Command::Hb { g } => {
            let rep = hb_report(g)?;
            let mut params = BTreeMap::new();
            params.insert("g".into(), json!(g));
            Ok(envelope("hb", params, &rep))
        }
        Command::Newton { tuple } => run_newton(&tuple),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Result<String, CliError> {
        run(Cli::try_parse_from(args).expect("parse"))
    }

    #[test]
    fn enum_perm_counts() {
        let out = run_args(&[
            "krstrata",
            "enum-perm",
            "--flavor",
            "gsp",
            "--e",
            "1",
            "--n",
            "1",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        let out2 = run_args(&[
            "krstrata",
            "enum-perm",
            "--flavor",
            "gsp",
            "--e",
            "1",
            "--n",
            "1",
            "--f",
            "2",
        ])
        .unwrap();
        let v2: serde_json::Value = serde_json::from_str(&out2).unwrap();
        assert_eq!(v2["rows"].as_array().unwrap().len(), 9);
        let out3 = run_args(&[
            "krstrata",
            "enum-perm",
            "--flavor",
            "gl",
            "--e",
            "1",
            "--n",
            "1",
            "--r",
            "0",
        ])
        .unwrap();
        let v3: serde_json::Value = serde_json::from_str(&out3).unwrap();
        assert_eq!(v3["rows"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn prank_table_rank_two_orbit() {
        let out = run_args(&[
            "krstrata",
            "prank-table",
            "--flavor",
            "gsp",
            "--e",
            "1",
            "--n",
            "1",
            "--f",
            "2",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 9);
        let ordinary = rows
            .iter()
            .filter(|row| row["prank"].as_u64() == Some(2))
            .count();
        assert_eq!(ordinary, 2);
        assert!(rows
            .iter()
            .all(|row| matches!(row["prank"].as_u64(), Some(0) | Some(2))));
    }

    #[test]
    fn density_text_line() {
        let out = run_args(&["krstrata", "density", "--e", "3", "--f", "1", "--n", "1"]).unwrap();
        assert!(out.ends_with("dense: true\n"));
    }

    #[test]
    fn prank0_value() {
        let out = run_args(&["krstrata", "prank0", "--n", "4", "--r", "2"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"]["dimension"].as_u64(), Some(2));
    }

    #[test]
    fn newton_round_trip() {
        let out = run_args(&["krstrata", "newton", "--tuple", "w=[2,1];l=[1,0]"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"]["zero_multiplicity"].as_u64(), Some(0));
        assert_eq!(v["rows"]["nu"][0][0].as_str(), Some("1/2"));
    }

    #[test]
    fn malformed_tuple_is_usage_error() {
        let err = run_args(&["krstrata", "newton", "--tuple", "w=[2,1]"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = run_args(&["krstrata", "newton", "--tuple", "w=[2,2];l=[0,0]"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn poset_dot_shape() {
        let out = run_args(&[
            "krstrata", "poset", "--flavor", "gsp", "--e", "1", "--n", "1",
        ])
        .unwrap();
        assert!(out.starts_with("digraph strata {"));
        // two covers: τ under each translation
        assert_eq!(out.matches("->").count(), 2);
    }

    #[test]
    fn identical_invocations_are_byte_identical() {
        let a = run_args(&[
            "krstrata",
            "prank-table",
            "--flavor",
            "gu",
            "--e",
            "1",
            "--n",
            "2",
        ])
        .unwrap();
        let b = run_args(&[
            "krstrata",
            "prank-table",
            "--flavor",
            "gu",
            "--e",
            "1",
            "--n",
            "2",
        ])
        .unwrap();
        assert_eq!(a, b);
    }
}
