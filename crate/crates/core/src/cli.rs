//! Command-line front end. Results go to `out`, one token sequence per line;
//! failures go to `err` as a one-line JSON report.
//!
//! Exit status: 0 on success, 1 when an input is malformed or an operation
//! fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::chance::chance_probability;
use crate::format::{parse_lexicon, parse_profile, parse_structure, serialize_structure, to_dot, FormatError};
use crate::linearize::{capitalize_first, linearize, LinearSentence};
use crate::model::{canonical_form, structural_equal, Synapper, WordOrder};
use crate::profile::LanguageProfile;
use crate::transform::{declarativize, interrogativize, WhToken};
use crate::translate::{apply_morpheme_rules, translate, Lexicon};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "synapper",
    version,
    about = "Linearize, transform and translate closed-loop sentence structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check structure files against every invariant.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Read a structure out under a profile, morpheme rules included.
    Linearize {
        #[arg(long)]
        profile: PathBuf,
        /// Skip the profile's morpheme rules.
        #[arg(long)]
        no_rules: bool,
        #[arg(long)]
        capitalize: bool,
        structure: PathBuf,
    },
    /// Substitute words through a lexicon, then linearize for the profile.
    Translate {
        #[arg(long)]
        profile: PathBuf,
        /// Tab-separated lexicon; words are kept as they are when omitted.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        capitalize: bool,
        structure: PathBuf,
    },
    /// Turn a declarative structure into a question.
    Question {
        #[arg(long)]
        wh: String,
        #[arg(long)]
        profile: PathBuf,
        #[arg(long)]
        capitalize: bool,
        structure: PathBuf,
    },
    /// Recover the declarative structure behind a question.
    Declarativize {
        #[arg(long)]
        profile: PathBuf,
        /// Structure supplying the shape of the answer.
        #[arg(long)]
        skeleton: PathBuf,
        /// Print the declarative reading instead of the structure document.
        #[arg(long)]
        linearize: bool,
        /// File holding the question as space-separated words.
        sentence: PathBuf,
    },
    /// Print SAME or DIFFERENT.
    Compare { a: PathBuf, b: PathBuf },
    /// Print the canonical one-line form.
    Canon { file: PathBuf },
    /// Print a Graphviz digraph.
    Dot { file: PathBuf },
    /// Chance of a random ordering of n words being the right one.
    Prob {
        #[arg(long)]
        n: u32,
    },
    /// Print the structure in all six word orders.
    Orders {
        #[arg(long)]
        capitalize: bool,
        structure: PathBuf,
    },
}

/// Everything that ends a command with status 1.
#[derive(Debug)]
enum Failure {
    Io { path: PathBuf, message: String },
    Format { path: PathBuf, error: FormatError },
    Operation { kind: &'static str, message: String },
}

impl Failure {
    fn op(kind: &'static str, error: impl std::fmt::Display) -> Self {
        Failure::Operation {
            kind,
            message: error.to_string(),
        }
    }

    fn report(&self) -> serde_json::Value {
        match self {
            Failure::Io { path, message } => json!({
                "error": "Io",
                "file": path.display().to_string(),
                "message": message,
            }),
            Failure::Format { path, error } => {
                let mut report = json!({
                    "error": error.kind(),
                    "file": path.display().to_string(),
                    "location": error.location(),
                    "message": error.to_string(),
                });
                if let FormatError::Invalid(v) = error {
                    report["violations"] = v
                        .violations
                        .iter()
                        .map(|v| json!({ "kind": v.kind.name(), "path": v.path, "detail": v.detail }))
                        .collect();
                }
                report
            }
            Failure::Operation { kind, message } => json!({ "error": kind, "message": message }),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.report());
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let mut lines: Vec<String> = Vec::new();
    match command {
        Command::Validate { files } => {
            // Check every file; report the first failure after listing the rest.
            let mut first_failure = None;
            for file in files {
                match load_structure(&file) {
                    Ok(_) => lines.push(format!("OK {}", file.display())),
                    Err(f) => {
                        first_failure.get_or_insert(f);
                    }
                }
            }
            emit(out, &lines)?;
            return first_failure.map_or(Ok(()), Err);
        }
        Command::Linearize {
            profile,
            no_rules,
            capitalize,
            structure,
        } => {
            let p = load_profile(&profile)?;
            let s = load_structure(&structure)?;
            let mut lin = linearize(&s, &p).map_err(|e| Failure::op("DegenerateStructure", e))?;
            if !no_rules {
                lin = apply_morpheme_rules(&lin, &p);
            }
            lines.push(render(&lin, capitalize));
        }
        Command::Translate {
            profile,
            lexicon,
            capitalize,
            structure,
        } => {
            let p = load_profile(&profile)?;
            let lex = match lexicon {
                Some(path) => {
                    let name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    parse_lexicon(&read(&path)?, &name).map_err(|error| Failure::Format { path, error })?
                }
                None => Lexicon::identity(),
            };
            let s = load_structure(&structure)?;
            let result = translate(&s, &lex, &p).map_err(|e| Failure::op(translate_kind(&e), e))?;
            lines.push(render(&result, capitalize));
        }
        Command::Question {
            wh,
            profile,
            capitalize,
            structure,
        } => {
            let p = load_profile(&profile)?;
            let s = load_structure(&structure)?;
            let q = interrogativize(&s, &WhToken::word(&wh), &p).map_err(|e| Failure::op(transform_kind(&e), e))?;
            lines.push(render(&q, capitalize));
        }
        Command::Declarativize {
            profile,
            skeleton,
            linearize: as_text,
            sentence,
        } => {
            let p = load_profile(&profile)?;
            let s = load_structure(&skeleton)?;
            let text = read(&sentence)?;
            let q = LinearSentence::from_text(&text, p.word_order, p.name.clone());
            let d = declarativize(&q, &s, &p).map_err(|e| Failure::op(transform_kind(&e), e))?;
            if as_text {
                let lin = linearize(&d, &p).map_err(|e| Failure::op("DegenerateStructure", e))?;
                lines.push(lin.text());
            } else {
                write_all(out, serialize_structure(&d).as_bytes())?;
            }
        }
        Command::Compare { a, b } => {
            let same = structural_equal(&load_structure(&a)?, &load_structure(&b)?);
            lines.push(if same { "SAME" } else { "DIFFERENT" }.into());
        }
        Command::Canon { file } => lines.push(canonical_form(&load_structure(&file)?)),
        Command::Dot { file } => write_all(out, to_dot(&load_structure(&file)?).as_bytes())?,
        Command::Prob { n } => {
            let c = chance_probability(n).map_err(|e| Failure::op("Chance", e))?;
            lines.push(c.to_string());
        }
        Command::Orders { capitalize, structure } => {
            let s = load_structure(&structure)?;
            for order in WordOrder::ALL {
                let lin =
                    linearize(&s, &LanguageProfile::gloss(order)).map_err(|e| Failure::op("DegenerateStructure", e))?;
                lines.push(format!("{order}\t{}", render(&lin, capitalize)));
            }
        }
    }
    emit(out, &lines)
}

fn render(sentence: &LinearSentence, capitalize: bool) -> String {
    if capitalize {
        capitalize_first(&sentence.text())
    } else {
        sentence.text()
    }
}

fn translate_kind(e: &crate::translate::TranslateError) -> &'static str {
    use crate::translate::TranslateError::*;
    match e {
        MissingLexeme(_) => "MissingLexeme",
        Linearize(_) => "DegenerateStructure",
        Invalid(_) => "Invalid",
    }
}

fn transform_kind(e: &crate::transform::TransformError) -> &'static str {
    use crate::transform::TransformError::*;
    match e {
        WhAlreadyPresent(_) => "WhAlreadyPresent",
        NotWh { .. } => "NotWh",
        NoWhFound => "NoWhFound",
        MultipleWh(_) => "MultipleWh",
        InversionMismatch(_) => "InversionMismatch",
        Linearize(_) => "DegenerateStructure",
        Invalid(_) => "Invalid",
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn load_structure(path: &Path) -> Result<Synapper, Failure> {
    parse_structure(&read(path)?).map_err(|error| Failure::Format {
        path: path.to_path_buf(),
        error,
    })
}

fn load_profile(path: &Path) -> Result<LanguageProfile, Failure> {
    parse_profile(&read(path)?).map_err(|error| Failure::Format {
        path: path.to_path_buf(),
        error,
    })
}

fn emit(out: &mut dyn Write, lines: &[String]) -> Result<(), Failure> {
    for line in lines {
        write_all(out, line.as_bytes())?;
        write_all(out, b"\n")?;
    }
    Ok(())
}

fn write_all(out: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    out.write_all(bytes).map_err(|e| Failure::Io {
        path: PathBuf::from("<stdout>"),
        message: e.to_string(),
    })
}
