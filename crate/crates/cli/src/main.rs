use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use codesign::constructions::GolayVariant;
use codesign::DEFAULT_BUDGET;

mod commands;

use commands::{Failure, Reply};

const MIN_BUDGET: u128 = 1 << 16;

#[derive(Parser)]
#[command(name = "codesign", version, about = "Linear codes, weight enumerators and the t-designs they carry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Most codewords a single enumeration may visit (at least 65536).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
    budget: u128,
    /// Worker threads for the enumeration kernels.
    #[arg(long, global = true, value_parser = parse_threads)]
    threads: Option<usize>,
    /// Overwrite the output file if it exists.
    #[arg(long, global = true)]
    force: bool,
    /// Write the result here instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    /// Text lines, or a JSON report object. Code and design artifacts are always
    /// written in their file formats.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Report,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog code or design.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Parameters, duality, cyclicity, perfection, weights and Assmus-Mattson strength.
    Analyze { code: PathBuf },
    /// The dual code.
    Dual { code: PathBuf },
    /// Append an overall check coordinate.
    Extend { code: PathBuf },
    /// Delete a coordinate (0-based).
    Puncture {
        code: PathBuf,
        #[arg(long)]
        pos: usize,
    },
    /// Weight distribution.
    Weights { code: PathBuf },
    /// Dual weight distribution by the MacWilliams transform, from a code file
    /// or from `--dist` with `--n`, `--k` and `--q`.
    Macwilliams {
        code: Option<PathBuf>,
        /// Distribution as `w:count` pairs, e.g. "0:1 3:7 4:7 7:1".
        #[arg(long, conflicts_with = "code", requires_all = ["n", "k", "q"])]
        dist: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Sphere-packing test, and for odd minimum distance the minimum-weight design check.
    Perfect { code: PathBuf },
    /// Supports of the weight-`w` codewords as a design.
    ExtractDesign {
        code: PathBuf,
        #[arg(long)]
        w: usize,
    },
    /// Check that a design is a t-design and report lambda.
    VerifyDesign {
        design: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Block count, replication number and admissibility of t-(v,k,lambda).
    DesignParams {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: u64,
    },
    /// Derived design at a point (0-based).
    Derive {
        design: PathBuf,
        #[arg(long)]
        point: usize,
    },
    /// Complementary design.
    Complement { design: PathBuf },
    /// Designs certified by the Assmus-Mattson theorem, confirmed by counting where feasible.
    AssmusMattson {
        code: PathBuf,
        /// Strength to certify; defaults to the largest that meets the hypothesis.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Binary code of a projective plane: dimension, minimum words, hyperovals.
    PlaneAnalysis { design: PathBuf },
    /// Intersection numbers of a Hamming or Johnson scheme.
    Scheme {
        #[command(subcommand)]
        kind: Scheme,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Run one criterion by id.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
pub enum Construct {
    /// Hamming code over GF(q) with redundancy m.
    Hamming {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
    /// The extended binary Hamming [8,4,4] code.
    ExtHamming8,
    /// Binary Reed-Muller code RM(r, m).
    ReedMuller {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Quadratic residue code of prime length n over GF(q).
    Qr {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// Pless symmetry code Sym(2q+2) over GF(3).
    Pless {
        #[arg(long)]
        q: u64,
    },
    /// A Golay code: b23_qr, b24_lexicode, b24_bordered, b24_icosahedron,
    /// b24_hexacode, b24_extend, t11_qr, t11_circulant, t12_extend.
    Golay {
        #[arg(value_parser = parse_variant)]
        variant: GolayVariant,
    },
    /// The [6,3,4] hexacode over GF(4).
    Hexacode,
    /// Binary lexicode of length n and minimum distance d.
    Lexicode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// A named design: fano, sts9, sqs8, paley_biplane_11, design_11_6_3, witt24.
    Design { name: String },
    /// Points and i-dimensional subspaces of PG(d-1, q).
    Pg {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        i: usize,
    },
    /// Points and i-flats of AG(d, q).
    Ag {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Subcommand)]
pub enum Scheme {
    /// H(n, q).
    Hamming {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// J(v, k).
    Johnson {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
    },
}

fn parse_budget(s: &str) -> Result<u128, String> {
    let b: u128 = s.parse().map_err(|e| format!("{e}"))?;
    if b < MIN_BUDGET {
        return Err(format!("budget must be at least {MIN_BUDGET}"));
    }
    Ok(b)
}

fn parse_threads(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("threads must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_variant(s: &str) -> Result<GolayVariant, String> {
    s.parse().map_err(|e: codesign::Error| e.to_string())
}

pub struct Ctx {
    pub budget: u128,
    pub format: Format,
}

fn dispatch(cmd: Command, ctx: &Ctx) -> Result<Reply, Failure> {
    use commands as c;
    match cmd {
        Command::Construct { what } => c::construct(what, ctx),
        Command::Analyze { code } => c::analyze(&code, ctx),
        Command::Dual { code } => c::dual(&code),
        Command::Extend { code } => c::extend(&code),
        Command::Puncture { code, pos } => c::puncture(&code, pos),
        Command::Weights { code } => c::weights(&code, ctx),
        Command::Macwilliams { code, dist, n, k, q } => c::macwilliams(code.as_deref(), dist, n, k, q, ctx),
        Command::Perfect { code } => c::perfect(&code, ctx),
        Command::ExtractDesign { code, w } => c::extract_design(&code, w, ctx),
        Command::VerifyDesign { design, t } => c::verify_design(&design, t, ctx),
        Command::DesignParams { t, v, k, lambda } => c::design_params(t, v, k, lambda, ctx),
        Command::Derive { design, point } => c::derive(&design, point),
        Command::Complement { design } => c::complement(&design),
        Command::AssmusMattson { code, t } => c::assmus_mattson(&code, t, ctx),
        Command::PlaneAnalysis { design } => c::plane_analysis(&design, ctx),
        Command::Scheme { kind } => c::scheme(kind, ctx),
        Command::Selftest { only } => c::selftest(only.as_deref(), ctx),
    }
}

fn emit(body: &str, output: Option<&PathBuf>, force: bool) -> Result<(), Failure> {
    match output {
        Some(path) => {
            if path.exists() && !force {
                return Err(Failure::Input(format!("{} exists; pass --force to overwrite", path.display())));
            }
            fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Input(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx { budget: cli.budget, format: cli.format };
    let result = dispatch(cli.command, &ctx).and_then(|reply| {
        emit(&reply.body, cli.output.as_ref(), cli.force)?;
        match reply.failed {
            Some(why) => Err(Failure::Claim(why)),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
