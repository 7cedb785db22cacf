use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use g2_crystal::verify::{map_element, verify};
use g2_crystal::xalgebra::normal_form_traced;
use g2_crystal::{weyl_dim, CrystalConfig, Error, Realization, Weight, XWord, DEFAULT_VERTEX_CAP};

#[derive(Parser)]
#[command(name = "g2crystal", version, about = "Crystal bases of irreducible G2 modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Highest weight `m,n` (m copies of the first fundamental weight, n of the second)
    #[arg(long, allow_hyphen_values = true)]
    weight: Weight,

    /// c12 in A_i(n); c21 = 1 - c12
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    c12: i32,

    /// Abort when a component grows past this many vertices
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a component and write it as JSON (and optionally DOT)
    Gen {
        #[command(flatten)]
        common: Common,
        /// monomial, monomial-neg, tableau-s or tableau-t
        #[arg(long, default_value = "monomial")]
        real: Realization,
        /// JSON output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cross-check all realizations of one highest weight
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Send an element of one realization to the corresponding element of another
    Map {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        from: Realization,
        #[arg(long)]
        to: Realization,
        /// A monomial such as `Y1(2)^3 Y2(3)^-1`, or a tableau such as
        /// `kind=S; shape=0,1; top=1; bottom=2`
        input: String,
    },
    /// Dimension of the irreducible module of the given highest weight
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Canonical factorization of a product of X-letters
    NormalForm {
        /// Word such as `X2(2) X1(2)^2 X1b(1) X2b(1) X3b(1) X0(1)`
        word: String,
        /// Maximum number of rewrites
        #[arg(long, default_value_t = g2_crystal::xalgebra::DEFAULT_REWRITE_CAP)]
        cap: usize,
        /// Print every rewrite
        #[arg(long)]
        trace: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VertexCapExceeded { .. } | Error::RewriteCapExceeded { .. } => 2,
            Error::NotInComponent(_) | Error::NonCanonical(_) | Error::Transport { .. } => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn config(c12: i32) -> Result<CrystalConfig, Failure> {
    Ok(CrystalConfig::new(c12, 1 - c12)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { common, real, out, dot } => {
            let doc = real.generate_doc(common.weight, config(common.c12)?, common.cap)?;
            let json = doc.to_json();
            match out {
                Some(p) => write_atomic(&p, &json)?,
                None => print!("{json}"),
            }
            if let Some(p) = dot {
                write_atomic(&p, &doc.to_dot())?;
            }
        }
        Command::Verify { common } => {
            let report = verify(common.weight, config(common.c12)?, common.cap)?;
            print!("{report}");
            if let Some(row) = report.first_failure() {
                let json = serde_json::to_string(row).expect("report rows serialize");
                return Err(Failure { code: 3, message: json });
            }
            println!("all checks passed ({} vertices)", weyl_dim(report_weight(&report))?);
        }
        Command::Map { common, from, to, input } => {
            let out = map_element(&input, from, to, common.weight, config(common.c12)?, common.cap)?;
            println!("{out}");
        }
        Command::Dim { weight } => println!("{}", weyl_dim(weight)?),
        Command::NormalForm { word, cap, trace } => {
            let w: XWord = word.parse()?;
            let nf = normal_form_traced(&w, cap)?;
            if trace {
                for step in &nf.steps {
                    println!("{}: {} -> {}", step.rule, step.before, step.after);
                }
            }
            println!("{}", nf.word);
            println!("{}", g2_crystal::xalgebra::xword_monomial(&nf.word));
        }
    }
    Ok(())
}

fn report_weight(r: &g2_crystal::verify::Report) -> Weight {
    Weight::new(r.lambda[0], r.lambda[1])
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
