//! Command-line front end.
//!
//! Exit codes: `0` success or consistent, `1` a check or audit failed,
//! `2` invalid input (including unknown commands and unwritable output).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::classify::Analysis;
use crate::golden::golden_suites;
use crate::lipman::lipman_sequence;
use crate::oracle::{survey, SurveyOptions};
use crate::semigroup::NumericalSemigroup;
use crate::classify::arf_closure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "arfkit", version, about = "Classify numerical semigroups: Arf, almost symmetric, generalized Gorenstein")]
pub struct CliInvocation {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Use angle brackets ⟨…⟩ in text output.
    #[arg(long, global = true)]
    pub unicode: bool,

    /// Upper limit on survey depth.
    #[arg(long, env = "ARFKIT_MAX_GENUS", hide = true, global = true)]
    pub genus_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic invariants: Frobenius number, genus, type, Apery set.
    Info { gens: String },
    /// Full classification report with criteria and consistency audit.
    Classify { gens: String },
    /// The chain of blowups down to N.
    Lipman { gens: String },
    /// Smallest Arf semigroup containing the input.
    ArfClosure { gens: String },
    /// Classify and audit every semigroup up to a genus; JSON lines output.
    Survey {
        /// Deepest genus to enumerate.
        #[arg(long)]
        max_genus: usize,
        /// Write records here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the six worked examples and print a PASS/FAIL table.
    VerifyPaper,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliInvocation::try_parse_from(args) {
        Ok(inv) => run(&inv, out, err),
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            code
        }
    }
}

pub fn run(inv: &CliInvocation, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(inv, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID_INPUT
        }
    }
}

fn parse(gens: &str) -> Result<NumericalSemigroup, String> {
    gens.parse().map_err(|e: crate::ArfError| e.to_string())
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), String> {
    let s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(out, "{s}").map_err(|e| e.to_string())
}

fn dispatch(inv: &CliInvocation, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    let uni = inv.unicode;
    match &inv.command {
        Command::Info { gens } => {
            let h = parse(gens)?;
            let pf = h.pseudo_frobenius();
            let apery = h.apery_set(h.multiplicity()).map_err(|e| e.to_string())?;
            let gaps: Vec<i64> = h.gaps().collect();
            if inv.json {
                #[derive(Serialize)]
                struct Info<'a> {
                    semigroup: &'a NumericalSemigroup,
                    conductor: i64,
                    #[serde(rename = "type")]
                    semigroup_type: usize,
                    pseudo_frobenius: &'a [i64],
                    apery: &'a [i64],
                    gaps: &'a [i64],
                }
                json_line(
                    out,
                    &Info {
                        semigroup: &h,
                        conductor: h.conductor(),
                        semigroup_type: pf.len(),
                        pseudo_frobenius: &pf,
                        apery: &apery,
                        gaps: &gaps,
                    },
                )?;
            } else {
                writeln!(out, "semigroup          {}", h.to_text(uni)).map_err(io)?;
                writeln!(out, "multiplicity       {}", h.multiplicity()).map_err(io)?;
                writeln!(out, "embedding dim      {}", h.embedding_dimension()).map_err(io)?;
                writeln!(out, "frobenius          {}", h.frobenius()).map_err(io)?;
                writeln!(out, "conductor          {}", h.conductor()).map_err(io)?;
                writeln!(out, "genus              {}", h.genus()).map_err(io)?;
                writeln!(out, "type               {}", pf.len()).map_err(io)?;
                writeln!(out, "pseudo-frobenius   {pf:?}").map_err(io)?;
                writeln!(out, "apery (mod m)      {apery:?}").map_err(io)?;
                writeln!(out, "gaps               {gaps:?}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify { gens } => {
            let h = parse(gens)?;
            let report = Analysis::new(&h).report();
            if inv.json {
                json_line(out, &report)?;
            } else {
                write!(out, "{}", report.render(uni)).map_err(io)?;
            }
            Ok(if report.consistent { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Lipman { gens } => {
            let h = parse(gens)?;
            let seq = lipman_sequence(&h);
            if inv.json {
                json_line(out, &seq)?;
            } else {
                for (i, step) in seq.steps().iter().enumerate() {
                    writeln!(
                        out,
                        "{i:>3}  {:<24} m={:<3} embdim={:<3} max_embdim={}",
                        step.to_text(uni),
                        step.multiplicity(),
                        step.embedding_dimension(),
                        if step.has_max_embedding_dimension() { "yes" } else { "no" }
                    )
                    .map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ArfClosure { gens } => {
            let h = parse(gens)?;
            let c = arf_closure(&h);
            if inv.json {
                json_line(out, &c)?;
            } else {
                writeln!(out, "{}", c.to_text(uni)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Survey { max_genus, out: path, jobs } => {
            let mut depth = *max_genus;
            if let Some(cap) = inv.genus_cap {
                if depth > cap {
                    writeln!(err, "warning: max genus {depth} capped to {cap} by ARFKIT_MAX_GENUS").map_err(io)?;
                    depth = cap;
                }
            }
            let mut opts = SurveyOptions::new(depth);
            opts.jobs = *jobs;
            let outcome = survey(&opts);
            match path {
                Some(p) => {
                    let f = File::create(p).map_err(|e| format!("{}: {e}", p.display()))?;
                    outcome.write_jsonl(BufWriter::new(f)).map_err(io)?;
                }
                None => outcome.write_jsonl(&mut *out).map_err(io)?,
            }
            write!(err, "{}", outcome.summary_table()).map_err(io)?;
            for r in outcome.records.iter().filter(|r| !r.violations.is_empty()) {
                for v in &r.violations {
                    writeln!(err, "violation {:?}: {v}", r.gens).map_err(io)?;
                }
            }
            for v in &outcome.corpus_violations {
                writeln!(err, "violation: {v}").map_err(io)?;
            }
            Ok(if outcome.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::VerifyPaper => {
            let suites = golden_suites();
            let passed = suites.iter().filter(|s| s.passed()).count();
            for s in &suites {
                writeln!(
                    out,
                    "{:<4} {:<40} {}",
                    if s.passed() { "PASS" } else { "FAIL" },
                    s.name,
                    s.subject
                )
                .map_err(io)?;
                for c in s.checks.iter().filter(|c| !c.passed) {
                    writeln!(out, "       failed: {}", c.description).map_err(io)?;
                }
            }
            writeln!(out, "{passed}/{} PASS", suites.len()).map_err(io)?;
            Ok(if passed == suites.len() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}
