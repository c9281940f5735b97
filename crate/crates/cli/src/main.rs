//! `picdag` command-line tool.
//!
//! Exit status is 0 on success or agreement, 1 on rejection or a
//! counterexample, and 2 on usage, input or format errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use picdag::automaton::{accepts, accepts_driven, find_driven_run, find_run};
use picdag::dot::to_dot;
use picdag::equiv::{check_equiv, Domain, EncodingRecipe, PictureMachine};
use picdag::format::{
    parse_automaton, parse_dag, parse_nfa, parse_ota, render_automaton, render_dag, render_nfa, render_ota,
};
use picdag::gallery;
use picdag::picture::parse_picture;
use picdag::scan::{serialize, squeeze, Strategy};
use picdag::translate::{dag_to_nfa, nda_to_ota, nfa_to_dag, ota_to_nda, BoundaryNormalForm, Construction};
use picdag::{encode, DagAutomaton, EncodingKind, Symbol};

#[derive(Parser)]
#[command(name = "picdag", version, about = "Pictures as DAGs: encodings, DAG automata and translations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a picture file as a DAG.
    Encode {
        picture: PathBuf,
        #[arg(long, short = 'e')]
        encoding: EncodingKind,
        /// Frame the picture with # before encoding.
        #[arg(long)]
        boundary: bool,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
    },
    /// Decide whether a DAG automaton accepts a DAG.
    Accept {
        #[arg(long, short = 'a')]
        automaton: PathBuf,
        dag: PathBuf,
        /// Reject DAGs that are not connected.
        #[arg(long)]
        connected: bool,
    },
    /// Translate between automaton models.
    Translate {
        direction: Direction,
        input: PathBuf,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
        /// Use the plain constructions without the frame-state fixes.
        #[arg(long)]
        literal: bool,
        /// Frame states for nda-to-ota; inferred when omitted.
        #[arg(long, requires = "qf")]
        qz: Option<String>,
        #[arg(long, requires = "qz")]
        qf: Option<String>,
    },
    /// Print the framed picture in scanning order.
    Serialize {
        picture: PathBuf,
        #[arg(long, short = 's', default_value = "rfa")]
        strategy: Strategy,
        /// Collapse runs of consecutive # into one.
        #[arg(long)]
        squeeze: bool,
    },
    /// Compare a DAG automaton with a picture automaton on all small pictures.
    Equiv {
        #[arg(long, short = 'a')]
        automaton: PathBuf,
        /// Tessellation automaton to compare with.
        #[arg(long, conflicts_with = "nfa", required_unless_present = "nfa")]
        ota: Option<PathBuf>,
        /// Finite automaton scanning the framed picture.
        #[arg(long)]
        nfa: Option<PathBuf>,
        #[arg(long, default_value = "rfa")]
        strategy: Strategy,
        #[arg(long, short = 'e', default_value = "coo")]
        encoding: EncodingKind,
        #[arg(long)]
        boundary: bool,
        #[arg(long)]
        connected: bool,
        /// Picture alphabet, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "a,b")]
        alphabet: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_cols: usize,
        /// Check this many random pictures instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0, requires = "sample")]
        seed: u64,
        /// Also print the elapsed time.
        #[arg(long)]
        timing: bool,
    },
    /// Show or check a built-in example automaton.
    Gallery {
        /// One of anbn, anbncn, dia, balance, balance-coo; `list` prints them.
        name: String,
        /// Compare with the oracle instead of printing the automaton.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 3)]
        max_rows: usize,
        #[arg(long, default_value_t = 3)]
        max_cols: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Export a DAG in Graphviz format.
    Dot {
        dag: PathBuf,
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
        /// Label edges with the states of a run of this automaton.
        #[arg(long, short = 'a')]
        automaton: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    NfaToDag,
    DagToNfa,
    OtaToNda,
    NdaToOta,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

fn load<T, E: std::fmt::Display>(path: &Path, parse: impl Fn(&str) -> Result<T, E>) -> Result<T> {
    let text = read(path)?;
    parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("{}: cannot write", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construction(literal: bool) -> Construction {
    if literal {
        Construction::Literal
    } else {
        Construction::Complete
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Encode {
            picture,
            encoding,
            boundary,
            output,
        } => {
            let p = load(&picture, parse_picture)?;
            let d = if boundary {
                encode(&p.boundary(), encoding)
            } else {
                encode(&p, encoding)
            };
            emit(output.as_deref(), &render_dag(&d))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Accept {
            automaton,
            dag,
            connected,
        } => {
            let a = load(&automaton, parse_automaton)?;
            let d = load(&dag, parse_dag)?;
            let ok = if a.has_ranks() {
                (!connected || d.is_connected()) && accepts_driven(&a, &d, a.ranks())
            } else {
                accepts(&a, &d, connected)
            };
            println!("{}", if ok { "accepted" } else { "rejected" });
            Ok(verdict(ok))
        }
        Command::Translate {
            direction,
            input,
            output,
            literal,
            qz,
            qf,
        } => {
            let c = construction(literal);
            let text = match direction {
                Direction::NfaToDag => render_automaton(&nfa_to_dag(&load(&input, parse_nfa)?, c)),
                Direction::DagToNfa => render_nfa(&dag_to_nfa(&load(&input, parse_automaton)?, c)),
                Direction::OtaToNda => render_automaton(&ota_to_nda(&load(&input, parse_ota)?, c)),
                Direction::NdaToOta => {
                    let a = load(&input, parse_automaton)?;
                    let nf = match (qz, qf) {
                        (Some(qz), Some(qf)) => BoundaryNormalForm::new(qz, qf),
                        _ => BoundaryNormalForm::infer(&a).map_err(|e| anyhow!("{}: {e}", input.display()))?,
                    };
                    let m = nda_to_ota(&a, &nf, c).map_err(|e| anyhow!("{}: {e}", input.display()))?;
                    render_ota(&m)
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Serialize {
            picture,
            strategy,
            squeeze: squeezed,
        } => {
            let p = load(&picture, parse_picture)?;
            let mut w = serialize(&p.boundary(), strategy);
            if squeezed {
                w = squeeze(&w);
            }
            let words: Vec<&str> = w.iter().map(Symbol::as_str).collect();
            println!("{}", words.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv {
            automaton,
            ota,
            nfa,
            strategy,
            encoding,
            boundary,
            connected,
            alphabet,
            max_rows,
            max_cols,
            sample,
            seed,
            timing,
        } => {
            let a = load(&automaton, parse_automaton)?;
            let other = match (ota, nfa) {
                (Some(path), _) => PictureMachine::Ota(load(&path, parse_ota)?),
                (None, Some(path)) => PictureMachine::Scanner(load(&path, parse_nfa)?, strategy),
                (None, None) => unreachable!("clap requires one of --ota and --nfa"),
            };
            let domain = Domain {
                alphabet: alphabet.into_iter().map(Symbol::from).collect(),
                max_rows,
                max_cols,
                sample: sample.map(|n| (n, seed)),
            };
            let recipe = EncodingRecipe {
                kind: encoding,
                boundary,
                connected,
            };
            let report = check_equiv(&a, &other, recipe, &domain)?;
            println!("{report}");
            if timing {
                println!("elapsed {:.3}s", report.elapsed.as_secs_f64());
            }
            Ok(verdict(report.is_equivalent()))
        }
        Command::Gallery {
            name,
            check,
            max_rows,
            max_cols,
            max_len,
        } => {
            if name == "list" {
                for n in gallery::NAMES {
                    println!("{n}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let e = gallery::gallery(&name)?;
            if !check {
                print!("{}", render_automaton(&e.automaton));
                return Ok(ExitCode::SUCCESS);
            }
            let report = e.check(&e.domain(max_rows, max_cols, max_len));
            println!("{}: {report}", e.name);
            Ok(verdict(report.is_equivalent()))
        }
        Command::Dot {
            dag,
            output,
            automaton,
        } => {
            let d = load(&dag, parse_dag)?;
            let text = match automaton {
                None => to_dot(&d, None),
                Some(path) => {
                    let a: DagAutomaton = load(&path, parse_automaton)?;
                    let found = if a.has_ranks() {
                        find_driven_run(&a, &d, a.ranks())
                    } else {
                        find_run(&a, &d).map(|r| (d.clone(), r))
                    };
                    match found {
                        Some((g, r)) => to_dot(&g, Some(&r)),
                        None => {
                            eprintln!("no run of {} on {}", path.display(), dag.display());
                            emit(output.as_deref(), &to_dot(&d, None))?;
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
