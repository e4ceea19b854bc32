use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcn_core::diagram::{self, RenderOptions};
use pcn_core::monk::{monk_terms, monk_terms_in};
use pcn_core::poset::{
    insertion_with_witness, is_insertable, is_removable, removing_with_witness, DEFAULT_MAX_DEGREE,
};
use pcn_core::verify::{verify_with_cap, VerifyMode, DEFAULT_SAMPLES, DEFAULT_SEED};
use pcn_core::words::{cover_index, move_schedule, row_grouped, row_reading};
use pcn_core::{
    hat_j, leq_a, lower_covers, tilde_j, upper_covers, Composition, Error, HasseDiagram,
    Permutation,
};
use serde_json::json;

/// Staircase compositions, their covering relation and the Bruhat order.
///
/// Permutations are written in one-line notation (`5,7,6,2,1,8,3,4`) and
/// compositions with their degree (`4,5,4,1,0,2,0@8`).
#[derive(Parser)]
#[command(name = "pcn", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lehmer code of a permutation.
    Code { permutation: String },
    /// Permutation with the given code.
    Decode { composition: String },
    /// The (n-1) x (n+1) c-matrix.
    Cmatrix { composition: String },
    /// Upper or lower covers with their positions.
    Covers {
        composition: String,
        #[arg(long, conflicts_with = "down", required_unless_present = "down")]
        up: bool,
        #[arg(long)]
        down: bool,
    },
    /// Is the composition (i,z)-removable?
    Removable(Step),
    /// Is the composition (i,z)-insertable?
    Insertable(Step),
    /// The (i,z)-removing.
    Remove(Step),
    /// The (i,z)-insertion.
    Insert(Step),
    /// Row-reading reduced word.
    Word { composition: String },
    /// Letter deletion and Coxeter moves for the (i,z)-removing.
    Schedule(Step),
    /// Box diagram, optionally with a c-path or a ladder-move sequence.
    Diagram {
        composition: String,
        /// Overlay the c-path starting in row I.
        #[arg(long, value_name = "I")]
        path: Option<usize>,
        /// Show each diagram of the ladder moves for the (I,Z)-removing.
        #[arg(long, num_args = 2, value_names = ["I", "Z"], conflicts_with = "path")]
        ladder: Option<Vec<usize>>,
        /// Print row 1 first.
        #[arg(long)]
        top_down: bool,
        #[arg(long, default_value_t = '□')]
        glyph: char,
    },
    /// Whole Hasse diagram: JSON Lines by default, DOT with --dot.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dot: bool,
        /// Allow n above the default cap.
        #[arg(long)]
        force: bool,
    },
    /// Monk's rule index set {(i,j) : i <= r < j, w·(i,j) covers w}.
    Monk {
        #[arg(long)]
        code: String,
        #[arg(long)]
        r: usize,
        /// Stay inside the degree of CODE instead of embedding.
        #[arg(long)]
        fixed_degree: bool,
    },
    /// Order comparison: is A below B?
    Leq { a: String, b: String },
    /// Exhaustive or sampled cross-check against the permutation side.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Step {
    composition: String,
    i: usize,
    z: usize,
}

#[derive(Args)]
#[group(id = "mode", multiple = false)]
struct ModeFlags {
    /// Bruhat covers versus composition covers (default).
    #[arg(long)]
    theorem: bool,
    /// Monk index sets versus brute force.
    #[arg(long)]
    monk: bool,
    /// Ladder moves versus algebraic removal.
    #[arg(long)]
    geometric: bool,
    /// Random componentwise-comparable pairs.
    #[arg(long)]
    product: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    mode: ModeFlags,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    force: bool,
}

fn comp(s: &str) -> Result<Composition, Error> {
    s.parse()
}

fn cap(force: bool) -> usize {
    if force {
        usize::MAX
    } else {
        DEFAULT_MAX_DEGREE
    }
}

fn line(out: &mut String, value: serde_json::Value) {
    writeln!(out, "{value}").unwrap();
}

/// Output text and whether the run counts as a success.
fn run(cli: Cli) -> Result<(String, bool), Error> {
    let json = cli.json;
    let mut out = String::new();
    let mut ok = true;
    match cli.command {
        Command::Code { permutation } => {
            let a = permutation.parse::<Permutation>()?.encode();
            if json {
                line(&mut out, json!(a));
            } else {
                writeln!(out, "{a}").unwrap();
            }
        }
        Command::Decode { composition } => {
            let w = comp(&composition)?.decode();
            if json {
                line(&mut out, json!(w));
            } else {
                writeln!(out, "{w}").unwrap();
            }
        }
        Command::Cmatrix { composition } => {
            let m = comp(&composition)?.c_matrix();
            if json {
                line(&mut out, json!(m.to_rows()));
            } else {
                write!(out, "{m}").unwrap();
            }
        }
        Command::Covers {
            composition, up, ..
        } => {
            let a = comp(&composition)?;
            let covers = if up {
                upper_covers(&a)
            } else {
                lower_covers(&a)
            };
            for (c, w) in covers {
                if json {
                    line(
                        &mut out,
                        json!({"composition": c, "i": w.i, "j": w.j, "z": w.z}),
                    );
                } else {
                    writeln!(out, "{c}\t({},{})\tz={}", w.i, w.j, w.z).unwrap();
                }
            }
        }
        Command::Removable(Step { composition, i, z }) => {
            let a = comp(&composition)?;
            let (answer, j) = (is_removable(&a, i, z)?, tilde_j(&a, i, z)?);
            if json {
                line(&mut out, json!({"removable": answer, "j": j}));
            } else {
                writeln!(out, "{answer}\tJ~={j}").unwrap();
            }
        }
        Command::Insertable(Step { composition, i, z }) => {
            let a = comp(&composition)?;
            let (answer, j) = (is_insertable(&a, i, z)?, hat_j(&a, i, z)?);
            if json {
                line(&mut out, json!({"insertable": answer, "j": j}));
            } else {
                writeln!(out, "{answer}\tJ^={j}").unwrap();
            }
        }
        Command::Remove(Step { composition, i, z }) => {
            let (c, w) = removing_with_witness(&comp(&composition)?, i, z)?;
            write_step(&mut out, json, &c, w.i, w.j, w.z);
        }
        Command::Insert(Step { composition, i, z }) => {
            let (c, w) = insertion_with_witness(&comp(&composition)?, i, z)?;
            write_step(&mut out, json, &c, w.i, w.j, w.z);
        }
        Command::Word { composition } => {
            let a = comp(&composition)?;
            if json {
                line(&mut out, json!(row_reading(&a).letters()));
            } else {
                writeln!(out, "{}", row_grouped(&a)).unwrap();
            }
        }
        Command::Schedule(Step { composition, i, z }) => {
            let a = comp(&composition)?;
            let (lower, w) = removing_with_witness(&a, i, z)?;
            let index = cover_index(&a, &w)?;
            let moves = move_schedule(&a, &w)?;
            let mut word = row_reading(&a).delete_letter(index)?;
            if json {
                line(
                    &mut out,
                    json!({"lower": lower, "i": w.i, "j": w.j, "z": w.z, "index": index, "moves": moves}),
                );
            } else {
                writeln!(out, "{a} -> {lower} at ({},{})", w.i, w.j).unwrap();
                writeln!(out, "delete letter {index}: {word}").unwrap();
                for m in moves {
                    word = word.apply_move(m.position, m.kind)?;
                    writeln!(out, "{m}: {word}").unwrap();
                }
            }
        }
        Command::Diagram {
            composition,
            path,
            ladder,
            top_down,
            glyph,
        } => {
            let a = comp(&composition)?;
            let opts = RenderOptions { glyph, top_down };
            match (path, ladder) {
                (Some(i), _) => {
                    if json {
                        line(&mut out, json!(diagram::c_path(&a, i)?));
                    } else {
                        out.push_str(&diagram::render_with_path(&a, i, &opts)?);
                    }
                }
                (None, Some(iz)) => {
                    let (i, z) = (iz[0], iz[1]);
                    match diagram::ladder_sequence(&a, i, z)? {
                        Some(steps) => {
                            for (k, d) in steps.iter().enumerate() {
                                writeln!(out, "step {k}").unwrap();
                                out.push_str(&d.render(&opts));
                            }
                            let end = steps.last().and_then(|d| d.to_composition());
                            writeln!(
                                out,
                                "result {}",
                                end.expect("sequence ends on a composition")
                            )
                            .unwrap();
                        }
                        None => {
                            writeln!(out, "blocked: not ({i},{z})-removable").unwrap();
                            ok = false;
                        }
                    }
                }
                (None, None) => out.push_str(&diagram::render(&a, &opts)),
            }
        }
        Command::Hasse { n, dot, force } => {
            let h = HasseDiagram::build_with_cap(n, cap(force))?;
            if dot {
                out.push_str(&h.to_dot());
            } else {
                let mut buf = Vec::new();
                h.write_jsonl(&mut buf).expect("writing to memory");
                out.push_str(&String::from_utf8(buf).expect("JSON is UTF-8"));
            }
        }
        Command::Monk {
            code,
            r,
            fixed_degree,
        } => {
            let a = comp(&code)?;
            let (n, terms) = if fixed_degree {
                (a.degree(), monk_terms_in(&a, r)?)
            } else {
                monk_terms(&a, r)?
            };
            if !json {
                writeln!(out, "n={n}").unwrap();
            }
            for t in terms {
                if json {
                    line(&mut out, json!(t));
                } else {
                    writeln!(out, "({},{})\t{}", t.i, t.j, t.target).unwrap();
                }
            }
        }
        Command::Leq { a, b } => {
            let answer = leq_a(&comp(&a)?, &comp(&b)?)?;
            if json {
                line(&mut out, json!(answer));
            } else {
                writeln!(out, "{answer}").unwrap();
            }
        }
        Command::Verify(args) => {
            let mode = match args.mode {
                ModeFlags { monk: true, .. } => VerifyMode::Monk,
                ModeFlags {
                    geometric: true, ..
                } => VerifyMode::Geometric,
                ModeFlags { product: true, .. } => VerifyMode::Product {
                    seed: args.seed,
                    samples: args.samples,
                },
                _ => VerifyMode::Theorem,
            };
            let report = verify_with_cap(args.n, mode, cap(args.force))?;
            ok = report.passed();
            if json {
                line(&mut out, json!(report));
            } else {
                writeln!(
                    out,
                    "{} n={}: {} checked, {} mismatches ({:.1} ms)",
                    report.mode,
                    report.n,
                    report.pairs_checked,
                    report.mismatches.len(),
                    report.elapsed.as_secs_f64() * 1e3
                )
                .unwrap();
                for m in &report.mismatches {
                    writeln!(
                        out,
                        "  {} | {}: expected {}, got {}",
                        m.left, m.right, m.oracle, m.poset
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok((out, ok))
}

fn write_step(out: &mut String, json: bool, c: &Composition, i: usize, j: usize, z: usize) {
    if json {
        line(out, json!({"composition": c, "i": i, "j": j, "z": z}));
    } else {
        writeln!(out, "{c}\t({i},{j})\tz={z}").unwrap();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::FAILURE
        }
    }
}
