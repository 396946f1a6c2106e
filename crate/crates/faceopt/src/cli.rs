//! The `faceopt` command line.
//!
//! Exit codes: 0 yes or success, 1 negative decision, 2 invalid input,
//! 3 size guard exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::approx::approx_min_max_face;
use crate::embedding::faces;
use crate::enumerate::{enumerate_embeddings, exact_min_max_face, exact_uniform, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::gadgets::{
    gen_minmax5_instance, gen_parallel_edge, gen_random_biconnected, gen_random_bipartite, gen_wheel_edge, CnfFormula,
};
use crate::graph::Multigraph;
use crate::io::{embedding_value, gadget_value, graph_value, read_graph, spqr_value, SCHEMA};
use crate::minmax::decide_minmax;
use crate::spqr::build_spqr;
use crate::uniform::{recognize_uniform, recognize_uniform3, recognize_uniform4, recognize_uniform6};

#[derive(Parser, Debug)]
#[command(name = "faceopt", version, about = "Face-size optimization for planar embeddings")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of embeddings an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT, value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Graph JSON file, or `-` for stdin.
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Is there an embedding with every face of size at most K?
    Decide {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Minimize the largest face.
    Minimize {
        /// Exhaustive search.
        #[arg(long, conflicts_with = "approx")]
        exact: bool,
        /// Polynomial 6-approximation (default).
        #[arg(long)]
        approx: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Look for an embedding where every face has the same size.
    Uniform {
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Count embeddings and their face-size multisets.
    Enumerate {
        #[command(flatten)]
        input: Input,
    },
    /// Print the SPQR-tree.
    Spqr {
        #[command(flatten)]
        input: Input,
    },
    /// Generate instances.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Subcommand, Debug)]
pub enum Gen {
    /// An edge in parallel with a path of length D.
    Parallel {
        #[arg(long)]
        d: usize,
    },
    /// A wheel on D rim vertices with inner faces of size K.
    Wheel {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: u32,
    },
    /// Instance whose largest face can be 5 iff FORMULA is satisfiable,
    /// e.g. "1 2; -1 3".
    Minmax5 {
        #[arg(long)]
        formula: String,
    },
    /// Random biconnected planar multigraph.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge count; ignored with --bipartite.
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Bipartite with 3n/2 - 3 edges.
        #[arg(long)]
        bipartite: bool,
    },
}

enum Outcome {
    Yes(Value),
    No(Value),
}

fn load(input: &Input) -> Result<Multigraph> {
    let mut text = String::new();
    let read = if input.input.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(&input.input).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse(format!("{}: {e}", input.input.display())))?;
    read_graph(&text)
}

fn with(mut v: Value, extra: Value) -> Value {
    if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
        obj.extend(more);
    }
    v
}

fn execute(cfg: &CliConfig) -> Result<Outcome> {
    let limit = cfg.limit;
    Ok(match &cfg.command {
        Command::Decide { k, input } => {
            let g = load(input)?;
            match decide_minmax(&g, *k, limit)? {
                Some(rot) => Outcome::Yes(with(embedding_value(&g, &rot)?, json!({"k": k, "decision": true}))),
                None => Outcome::No(json!({"schema": SCHEMA, "k": k, "decision": false})),
            }
        }
        Command::Minimize { exact, input, .. } => {
            let g = load(input)?;
            let (rot, method) = if *exact {
                (exact_min_max_face(&g, limit)?.1, "exact")
            } else {
                (approx_min_max_face(&g)?.0, "approx")
            };
            Outcome::Yes(with(embedding_value(&g, &rot)?, json!({"method": method})))
        }
        Command::Uniform { k, input } => {
            let g = load(input)?;
            let found = match k {
                None => recognize_uniform(&g, limit)?,
                Some(k) => {
                    build_spqr(&g, 0)?;
                    let rot = if g.euler_uniform_k() != Some(*k as u32) {
                        None
                    } else if g.n() == 2 {
                        Some(exact_min_max_face(&g, limit)?.1)
                    } else {
                        match k {
                            3 => recognize_uniform3(&g)?,
                            4 => recognize_uniform4(&g)?,
                            6 => recognize_uniform6(&g)?,
                            _ => exact_uniform(&g, *k, limit)?,
                        }
                    };
                    rot.map(|r| (*k, r))
                }
            };
            match found {
                Some((k, rot)) => Outcome::Yes(with(embedding_value(&g, &rot)?, json!({"k": k, "uniform": true}))),
                None => {
                    let k = k.or(g.euler_uniform_k().map(|k| k as usize));
                    Outcome::No(json!({"schema": SCHEMA, "k": k, "uniform": false}))
                }
            }
        }
        Command::Enumerate { input } => {
            let g = load(input)?;
            let mut histogram: std::collections::BTreeMap<Vec<usize>, u64> = Default::default();
            let mut count = 0u64;
            for rot in enumerate_embeddings(&g, limit)? {
                *histogram.entry(faces(&g, &rot)?.size_multiset()).or_default() += 1;
                count += 1;
            }
            let hist: Vec<Value> = histogram.into_iter().map(|(s, c)| json!({"sizes": s, "count": c})).collect();
            Outcome::Yes(json!({"schema": SCHEMA, "count": count, "histogram": hist}))
        }
        Command::Spqr { input } => Outcome::Yes(spqr_value(&build_spqr(&load(input)?, 0)?)),
        Command::Gen(gen) => Outcome::Yes(match gen {
            Gen::Parallel { d } => gadget_value(&gen_parallel_edge(*d)?),
            Gen::Wheel { d, k } => gadget_value(&gen_wheel_edge(*d, *k)?),
            Gen::Minmax5 { formula } => gadget_value(&gen_minmax5_instance(&CnfFormula::parse(formula)?)?),
            Gen::Random { n, m, bipartite } => {
                let g = if *bipartite { gen_random_bipartite(*n, cfg.seed)? } else { gen_random_biconnected(*n, *m, cfg.seed)? };
                graph_value(&g)
            }
        }),
    })
}

fn emit(cfg: &CliConfig, v: &Value, out: &mut dyn Write) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(v).expect("serializable") + "\n";
    match &cfg.output {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let (code, value) = match execute(&cfg) {
        Ok(Outcome::Yes(v)) => (0, v),
        Ok(Outcome::No(v)) => (1, v),
        Err(e @ Error::SizeGuardExceeded { .. }) => {
            let _ = writeln!(err, "faceopt: {e}");
            return 3;
        }
        Err(e) => {
            let _ = writeln!(err, "faceopt: {e}");
            return 2;
        }
    };
    if let Err(e) = emit(&cfg, &value, out) {
        let _ = writeln!(err, "faceopt: {e}");
        return 2;
    }
    code
}
