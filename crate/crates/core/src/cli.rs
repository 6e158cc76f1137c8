//! Command-line front end. Everything is JSON in, JSON out.
//!
//! Exit codes: 0 for a positive verdict, 1 for a semantic negative (invalid
//! point, non-conjugate pair, failed replay check, bad size), 2 for usage,
//! I/O and parse errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::automorphism::{word_from_json, AutoWord, GeneratorJson};
use crate::conjugacy::are_conjugate;
use crate::error::CmError;
use crate::point::{nilpotent_points, CmPoint, CmPointJson};
use crate::replay;

#[derive(Parser, Debug)]
#[command(
    name = "cmspace",
    version,
    about = "Exact computations in Calogero-Moser spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the rank-one condition for a point file.
    Validate { point: PathBuf },
    /// Apply an automorphism word to a point.
    Act { word: PathBuf, point: PathBuf },
    /// Decide simultaneous conjugacy of two points.
    Conj { first: PathBuf, second: PathBuf },
    /// List the points (X(a), Y_0) with X nilpotent.
    Nilpotent { n: usize },
    /// Run the replay checks for sizes 2..=N.
    Replay {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
    },
}

/// Exit code plus the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json<T: Serialize>(code: i32, value: &T) -> Self {
        let mut stdout = serde_json::to_string_pretty(value).expect("serializable output");
        stdout.push('\n');
        CommandResult {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Self {
        CommandResult {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

enum Failure {
    Semantic(Value),
    Usage(String),
}

impl From<Failure> for CommandResult {
    fn from(f: Failure) -> Self {
        match f {
            Failure::Semantic(v) => CommandResult::json(1, &v),
            Failure::Usage(msg) => CommandResult::usage(format!("error: {msg}\n")),
        }
    }
}

fn reason_of(e: &CmError) -> &'static str {
    match e {
        CmError::RankConditionViolated { .. } => "RankConditionViolated",
        CmError::DimensionMismatch(_) | CmError::NotSquare { .. } => "DimensionMismatch",
        CmError::DuplicateEigenvalue => "DuplicateEigenvalue",
        CmError::ZeroScale => "ZeroScale",
        CmError::InvalidSize(..) => "InvalidSize",
        CmError::InvariantViolation(_) => "InvariantViolation",
        CmError::IntertwinerAnomaly { .. } => "IntertwinerAnomaly",
        _ => "Error",
    }
}

fn semantic(e: CmError) -> Failure {
    let mut v = json!({ "reason": reason_of(&e), "message": e.to_string() });
    if let CmError::RankConditionViolated { rank } = e {
        v["rank"] = json!(rank);
    }
    Failure::Semantic(v)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn load_point(path: &Path) -> Result<CmPoint, Failure> {
    let raw: CmPointJson = read_json(path)?;
    CmPoint::try_from(raw).map_err(semantic)
}

fn load_word(path: &Path) -> Result<AutoWord, Failure> {
    let raw: Vec<GeneratorJson> = read_json(path)?;
    word_from_json(raw).map_err(semantic)
}

fn cmd_validate(path: &Path) -> Result<CommandResult, Failure> {
    let raw: CmPointJson = read_json(path)?;
    match CmPoint::try_from(raw) {
        Ok(p) => Ok(CommandResult::json(
            0,
            &json!({ "valid": true, "n": p.n() }),
        )),
        Err(e) => {
            let Failure::Semantic(mut v) = semantic(e) else {
                unreachable!()
            };
            v["valid"] = json!(false);
            Err(Failure::Semantic(v))
        }
    }
}

fn cmd_act(word: &Path, point: &Path) -> Result<CommandResult, Failure> {
    let w = load_word(word)?;
    let p = load_point(point)?;
    let image = w.act(&p).map_err(semantic)?;
    Ok(CommandResult::json(0, &image))
}

fn cmd_conj(first: &Path, second: &Path) -> Result<CommandResult, Failure> {
    let p = load_point(first)?;
    let q = load_point(second)?;
    if p.n() != q.n() {
        return Err(Failure::Semantic(json!({
            "conjugate": false,
            "witness": null,
            "reason": "SizeMismatch",
        })));
    }
    let verdict = are_conjugate(&p, &q).map_err(semantic)?;
    let code = if verdict.is_conjugate() { 0 } else { 1 };
    Ok(CommandResult::json(code, &verdict.to_json()))
}

fn cmd_nilpotent(n: usize) -> Result<CommandResult, Failure> {
    let pts = nilpotent_points(n).map_err(semantic)?;
    Ok(CommandResult::json(0, &pts))
}

fn cmd_replay(n_max: usize) -> Result<CommandResult, Failure> {
    let reports = replay::run_all(n_max).map_err(|e| Failure::Usage(e.to_string()))?;
    let code = if replay::all_pass(&reports) { 0 } else { 1 };
    Ok(CommandResult::json(code, &reports))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CommandResult::usage(text)
            };
        }
    };
    let outcome = match &cli.command {
        Command::Validate { point } => cmd_validate(point),
        Command::Act { word, point } => cmd_act(word, point),
        Command::Conj { first, second } => cmd_conj(first, second),
        Command::Nilpotent { n } => cmd_nilpotent(*n),
        Command::Replay { n_max } => cmd_replay(*n_max as usize),
    };
    outcome.unwrap_or_else(CommandResult::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_sizes() {
        let out = run(["cmspace", "nilpotent", "2"]);
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0]["X"], json!([["0", "0"], ["-1", "0"]]));
        assert_eq!(run(["cmspace", "nilpotent", "1"]).code, 1);
        assert_eq!(run(["cmspace", "nilpotent", "-3"]).code, 2);
    }

    #[test]
    fn replay_flag_bounds() {
        assert_eq!(run(["cmspace", "replay", "--n-max", "1"]).code, 2);
        assert_eq!(run(["cmspace", "replay"]).code, 2);
        assert_eq!(run(["cmspace", "bogus"]).code, 2);
    }

    #[test]
    fn missing_file_is_usage_error() {
        let out = run(["cmspace", "validate", "/nonexistent/point.json"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("cannot read"));
    }
}
