//! `deltaft`: braid words, delta moves, marked braids and knot invariants
//! from the command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 when the input is well formed but the operation does not apply to it,
//! and 2 for unparsable arguments or files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use deltaft_core::braid::{
    braid_connected_sum, conjugate_shift, pure_gen, shift_braid, BraidWord, PureGenSpec,
};
use deltaft_core::combing::comb;
use deltaft_core::delta::{
    alt_sum, delta_n_witness, delta_trivialize, AltInvariant, DeltaScript, MarkedBraid,
};
use deltaft_core::invariants::{
    alexander, closure_components, conway_a2, is_knot, jones, jones_series, kauffman_bracket,
    linking_matrix,
};
use deltaft_core::lab::{
    connected_sum_normalize, sample_derived, sample_gamma, sample_p_prime, slide_step,
    verify_theorem_2_1_AC, GammaCertificate, IdealProduct, SlideState,
};
use deltaft_core::poly::PolyJson;
use deltaft_core::word_problem::{braid_eq, handle_reduce};

#[derive(Parser)]
#[command(
    name = "deltaft",
    version,
    about = "Delta moves, marked braids and knot invariants"
)]
struct Cli {
    /// Emit JSON instead of plain text for scalar results.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid words, permutations and pure generators.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Knot and link invariants of braid closures.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// Delta moves, trivialization scripts and marked braids.
    #[command(subcommand)]
    Delta(DeltaCmd),
    /// Certified samples, ideal expansions, slides and the theorem check.
    #[command(subcommand)]
    Lab(LabCmd),
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Decide whether two words are the same braid.
    Eq {
        #[arg(value_parser = parse_word)]
        a: BraidWord,
        #[arg(value_parser = parse_word)]
        b: BraidWord,
    },
    /// Combed normal form of a pure braid.
    Comb {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Underlying permutation in cycle notation.
    Perm {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Components, linking matrix and writhe of the closure.
    ClosureInfo {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// The pure generator p_{i,j}.
    Puregen {
        i: usize,
        j: usize,
        #[arg(long)]
        strands: usize,
    },
    /// The shift braid t_k.
    Shift { strands: usize },
    /// t_k^{-m} p t_k^m for a pure braid p.
    Conjshift {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
        #[arg(long, short, allow_hyphen_values = true)]
        m: i64,
    },
    /// Pure braid in B_{2k} whose product with t_{2k} closes to the connected
    /// sum of the closures of p t_k and q t_k.
    Consum {
        #[arg(value_parser = parse_word)]
        p: BraidWord,
        #[arg(value_parser = parse_word)]
        q: BraidWord,
    },
}

#[derive(Subcommand)]
enum InvariantCmd {
    /// Jones polynomial.
    Jones {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Kauffman bracket in A.
    Bracket {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Coefficients u_0..u_D of V(e^x) for a knot.
    Series {
        #[arg(long, default_value_t = 3)]
        dmax: usize,
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Alexander polynomial of a knot, normalized by symmetry and Δ(1) = 1.
    Alexander {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Second Conway coefficient of a knot.
    A2 {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
}

#[derive(Subcommand)]
enum DeltaCmd {
    /// Delta moves turning a trivial word into the given P′ element.
    Trivialize {
        #[arg(value_parser = parse_word)]
        word: BraidWord,
    },
    /// Marked braid with n site sets for a sampled (or given) γ_n certificate.
    Witness {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// Factors per certificate leaf.
        #[arg(long, default_value_t = 1)]
        size: usize,
        /// Use this certificate instead of sampling one.
        #[arg(long, conflicts_with = "n")]
        cert: Option<PathBuf>,
    },
    /// Alternating sum of an invariant over all subsets of site sets.
    Altsum {
        file: PathBuf,
        /// series:D or a2
        #[arg(long = "inv", value_parser = parse_invariant)]
        invariant: AltInvariant,
    },
    /// Apply a delta script, or chosen site sets of a marked braid.
    Apply {
        file: PathBuf,
        /// Comma-separated 1-based site sets (marked braids only; default all).
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum LabCmd {
    /// Sample a certified element.
    Sample {
        /// pprime, gamma:N or derived:N
        #[arg(long, value_parser = parse_class)]
        class: SampleClass,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Factors per certificate leaf.
        #[arg(long, default_value_t = 1)]
        size: usize,
    },
    /// Expand (x_1 - 1)...(x_n - 1) y t_k into signed terms.
    Expand { file: PathBuf },
    /// Slide steps on a slide state (an ideal product is normalized first).
    Slide {
        file: PathBuf,
        /// Number of steps; defaults to running until m = 0.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Desk checks of the main theorem.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// (A) implies (C): Jones series below order 2n do not see γ_n(P′).
    Thm21(Thm21Args),
}

#[derive(Args)]
struct Thm21Args {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 25)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    strands: usize,
}

#[derive(Clone, Copy)]
enum SampleClass {
    PPrime,
    Gamma(usize),
    Derived(usize),
}

fn parse_word(s: &str) -> Result<BraidWord, String> {
    s.parse().map_err(|e: deltaft_core::Error| e.to_string())
}

fn parse_invariant(s: &str) -> Result<AltInvariant, String> {
    s.parse().map_err(|e: deltaft_core::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<SampleClass, String> {
    let level = |rest: &str| {
        rest.parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("bad level in {s:?}"))
    };
    if s == "pprime" {
        Ok(SampleClass::PPrime)
    } else if let Some(rest) = s.strip_prefix("gamma:") {
        Ok(SampleClass::Gamma(level(rest)?))
    } else if let Some(rest) = s.strip_prefix("derived:") {
        Ok(SampleClass::Derived(level(rest)?))
    } else {
        Err(format!(
            "unknown class {s:?} (use pprime, gamma:N or derived:N)"
        ))
    }
}

enum Failure {
    /// Malformed input: exit 2.
    Usage(String),
    /// Well-formed input the operation rejects: exit 1.
    Domain(String),
}

impl From<deltaft_core::Error> for Failure {
    fn from(e: deltaft_core::Error) -> Self {
        match e {
            deltaft_core::Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn pretty<T: serde::Serialize>(value: &T) -> Outcome {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Domain(e.to_string()))
}

/// Plain text, or the JSON value when `--json` is set.
fn scalar(as_json: bool, text: String, value: Value) -> Outcome {
    if as_json {
        pretty(&value)
    } else {
        Ok(text)
    }
}

fn run(cli: Cli) -> Outcome {
    let j = cli.json;
    match cli.command {
        Command::Braid(c) => braid(j, c),
        Command::Invariant(c) => invariant(j, c),
        Command::Delta(c) => delta(j, c),
        Command::Lab(c) => lab(c),
    }
}

fn braid(j: bool, cmd: BraidCmd) -> Outcome {
    match cmd {
        BraidCmd::Eq { a, b } => {
            let eq = braid_eq(&a, &b)?;
            scalar(j, eq.to_string(), json!(eq))
        }
        BraidCmd::Comb { word } => pretty(&comb(&word)?),
        BraidCmd::Perm { word } => {
            let p = word.permutation();
            scalar(
                j,
                p.to_string(),
                json!({ "images": p.images(), "cycles": p.to_string() }),
            )
        }
        BraidCmd::ClosureInfo { word } => {
            let comps = closure_components(&word);
            let linking = linking_matrix(&word);
            let writhe = word.writhe();
            let rows: Vec<String> = linking.0.iter().map(|r| format!("{r:?}")).collect();
            let text = format!(
                "components: {}\nknot: {}\nlinking: [{}]\nwrithe: {writhe}",
                comps.count,
                is_knot(&word),
                rows.join(", ")
            );
            scalar(
                j,
                text,
                json!({
                    "components": comps.count,
                    "component_of": comps.component_of,
                    "linking": linking.0,
                    "writhe": writhe,
                }),
            )
        }
        BraidCmd::Puregen { i, j: jj, strands } => {
            let w = pure_gen(PureGenSpec::new(i, jj), strands)?;
            scalar(j, w.to_string(), json!(w.to_string()))
        }
        BraidCmd::Shift { strands } => {
            if strands == 0 {
                return Err(Failure::Usage("strand count must be positive".into()));
            }
            let w = shift_braid(strands);
            scalar(j, w.to_string(), json!(w.to_string()))
        }
        BraidCmd::Conjshift { word, m } => {
            let w = conjugate_shift(&word, m)?;
            scalar(j, w.to_string(), json!(w.to_string()))
        }
        BraidCmd::Consum { p, q } => {
            let w = braid_connected_sum(&p, &q)?;
            scalar(j, w.to_string(), json!(w.to_string()))
        }
    }
}

fn invariant(j: bool, cmd: InvariantCmd) -> Outcome {
    match cmd {
        InvariantCmd::Jones { word } => {
            let v = jones(&word)?;
            scalar(j, v.to_string(), json!(v.to_json()))
        }
        InvariantCmd::Bracket { word } => {
            let b = kauffman_bracket(&word)?;
            scalar(j, b.format("A"), json!(PolyJson::new("A", false, &b)))
        }
        InvariantCmd::Series { dmax, word } => {
            let s = jones_series(&word, dmax)?;
            scalar(
                j,
                s.to_string(),
                serde_json::to_value(&s).map_err(|e| Failure::Domain(e.to_string()))?,
            )
        }
        InvariantCmd::Alexander { word } => {
            let a = alexander(&word)?;
            scalar(j, a.format("t"), json!(PolyJson::new("t", false, &a)))
        }
        InvariantCmd::A2 { word } => {
            let a2 = conway_a2(&word)?.to_string();
            scalar(j, a2.clone(), json!({ "a2": a2 }))
        }
    }
}

fn delta(j: bool, cmd: DeltaCmd) -> Outcome {
    match cmd {
        DeltaCmd::Trivialize { word } => pretty(&delta_trivialize(&word)?),
        DeltaCmd::Witness {
            n,
            seed,
            strands,
            size,
            cert,
        } => {
            let cert: GammaCertificate = match (cert, n) {
                (Some(path), _) => read_json(&path)?,
                (None, Some(n)) => sample_gamma(n, strands, seed, size)?,
                (None, None) => return Err(Failure::Usage("give --n or --cert".into())),
            };
            pretty(&delta_n_witness(&cert)?)
        }
        DeltaCmd::Altsum { file, invariant } => {
            let marked: MarkedBraid = read_json(&file)?;
            marked.validate()?;
            pretty(&alt_sum(&marked, invariant)?)
        }
        DeltaCmd::Apply { file, subset } => {
            let value: Value = read_json(&file)?;
            let word = if value.get("moves").is_some() {
                if subset.is_some() {
                    return Err(Failure::Usage(
                        "--subset applies to marked braids only".into(),
                    ));
                }
                let script: DeltaScript = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                script.apply()?
            } else {
                let marked: MarkedBraid = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                marked.validate()?;
                let n = marked.order();
                let chosen = subset.unwrap_or_else(|| (1..=n).collect());
                let mut mask = 0u64;
                for s in chosen {
                    if s == 0 || s > n {
                        return Err(Failure::Domain(format!(
                            "no site set {s} (marked braid has {n})"
                        )));
                    }
                    mask |= 1 << (s - 1);
                }
                marked.word_for(mask)?
            };
            let reduced = handle_reduce(&word);
            scalar(
                j,
                reduced.to_string(),
                json!({
                    "word": word.to_string(),
                    "reduced": reduced.to_string(),
                    "trivial": reduced.is_empty(),
                }),
            )
        }
    }
}

fn lab(cmd: LabCmd) -> Outcome {
    match cmd {
        LabCmd::Sample {
            class,
            strands,
            seed,
            size,
        } => match class {
            SampleClass::PPrime => {
                let (_, root) = sample_p_prime(strands, seed, size)?;
                let cert = GammaCertificate {
                    strands,
                    level: 1,
                    root,
                };
                cert.validate()?;
                pretty(&cert)
            }
            SampleClass::Gamma(n) => pretty(&sample_gamma(n, strands, seed, size)?),
            SampleClass::Derived(n) => pretty(&sample_derived(n, strands, seed, size)?),
        },
        LabCmd::Expand { file } => {
            let ip: IdealProduct = read_json(&file)?;
            pretty(&ip.expand()?)
        }
        LabCmd::Slide { file, steps } => {
            let value: Value = read_json(&file)?;
            let mut state: SlideState = if value.get("m").is_some() {
                serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?
            } else {
                let ip: IdealProduct = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
                connected_sum_normalize(&ip)?
            };
            for _ in 0..steps.unwrap_or(state.m) {
                state = slide_step(&state)?;
            }
            pretty(&state)
        }
        LabCmd::Verify(VerifyCmd::Thm21(a)) => {
            pretty(&verify_theorem_2_1_AC(a.n, a.strands, a.seed, a.trials)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // a closed pipe (`deltaft ... | head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
