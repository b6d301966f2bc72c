//! The `quotfan` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use quotfan::exactlin::parse_rat;
use quotfan::gitfan::{git_fan, weight_cone};
use quotfan::pdivisor::{default_section, downgrade_divisor, section_count_check, PolyhedralDivisor};
use quotfan::quotients::{
    ah_fan, chow_quotient_fan, git_quotient_fan, hilbert_main_fan, hilbert_main_fan_auto, lift_to_sigma,
    verify_diagram, HilbertFan,
};
use quotfan::{Error, Fan, RatVector, TorusDowngrade};

use crate::fanfile::{emit_fan, format_vector, parse_fan, write_fan_body, write_list, FanMeta};
use crate::scenario::parse_scenario;
use crate::svg::svg_slice;
use crate::{CliError, CliResult, EXIT_INPUT, EXIT_OK, EXIT_VERIFY};

#[derive(Debug, Parser)]
#[command(
    name = "quotfan",
    version,
    about = "Quotient fans of subtorus actions on affine toric varieties"
)]
pub struct Cli {
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// More log output (repeat for debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The GIT fan of the weight cone, with the cones of Q0 listed in `meta.q0`.
    Gitfan { scenario: PathBuf },
    /// One of the quotient fans as a fan file.
    QuotientFan {
        scenario: PathBuf,
        /// git:<index into Q0> | chow | ah | hilbert | universal
        #[arg(long, value_parser = parse_which)]
        which: Which,
        /// Enumeration bound for hilbert and universal (default: doubling).
        #[arg(long)]
        bound: Option<u64>,
        /// Largest bound tried when doubling.
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// The polyhedral divisor over the Chow quotient fan.
    Pdivisor {
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = SectionChoice::Auto)]
        section: SectionChoice,
        /// Compare section counts for lattice characters up to this max-norm.
        #[arg(long)]
        check: Option<u64>,
    },
    /// Verifies the fan-level diagram; exits with 2 if a check fails.
    CheckDiagram {
        scenario: PathBuf,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// Draws the slice of a fan file by the hyperplane <normal, x> = level.
    Slice {
        fan: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        normal: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Which {
    Git(usize),
    Chow,
    Ah,
    Hilbert,
    Universal,
}

impl Which {
    fn name(&self) -> String {
        match self {
            Which::Git(i) => format!("git:{i}"),
            Which::Chow => "chow".into(),
            Which::Ah => "ah".into(),
            Which::Hilbert => "hilbert".into(),
            Which::Universal => "universal".into(),
        }
    }
}

fn parse_which(s: &str) -> Result<Which, String> {
    match s {
        "chow" => Ok(Which::Chow),
        "ah" => Ok(Which::Ah),
        "hilbert" => Ok(Which::Hilbert),
        "universal" => Ok(Which::Universal),
        _ => s
            .strip_prefix("git:")
            .and_then(|i| i.parse().ok())
            .map(Which::Git)
            .ok_or_else(|| format!("expected git:<index>, chow, ah, hilbert or universal, got {s:?}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SectionChoice {
    /// The integer section computed from the Hermite normal form.
    Auto,
}

/// Output of one command: the artifact and whether its checks passed.
struct Outcome {
    text: String,
    verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, verified: true }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> CliResult<TorusDowngrade> {
    Ok(parse_scenario(&read(path)?)?.downgrade)
}

fn check_bound(bound: Option<u64>) -> CliResult<()> {
    match bound {
        Some(0) => Err(Error::InvalidBound(0).into()),
        _ => Ok(()),
    }
}

fn hilbert(d: &TorusDowngrade, bound: Option<u64>, cap: u64) -> CliResult<HilbertFan> {
    Ok(match bound {
        Some(b) => hilbert_main_fan(d, b)?,
        None => hilbert_main_fan_auto(d, 1, cap)?,
    })
}

fn hilbert_meta(which: &str, h: &HilbertFan) -> FanMeta {
    FanMeta {
        which: Some(which.into()),
        bound: Some(h.bound),
        stabilized: Some(h.stabilized),
        q0: None,
    }
}

fn cmd_gitfan(scenario: &Path) -> CliResult<Outcome> {
    let d = load(scenario)?;
    let g = git_fan(&d)?;
    let q0 =
        g.q0.iter()
            .map(|lambda| {
                lambda
                    .rays()
                    .iter()
                    .map(|r| {
                        g.fan
                            .rays()
                            .iter()
                            .position(|x| x == r)
                            .expect("Q0 cones are cones of the fan")
                    })
                    .collect()
            })
            .collect();
    let meta = FanMeta {
        which: Some("gitfan".into()),
        q0: Some(q0),
        ..FanMeta::default()
    };
    Ok(Outcome::ok(emit_fan(&g.fan, &meta)))
}

fn cmd_quotient_fan(scenario: &Path, which: &Which, bound: Option<u64>, cap: u64) -> CliResult<Outcome> {
    check_bound(bound)?;
    let d = load(scenario)?;
    let (fan, meta) = match which {
        Which::Git(i) => {
            let g = git_fan(&d)?;
            let lambda =
                g.q0.get(*i)
                    .ok_or_else(|| CliError::Invalid(format!("Q0 has {} cones, no cone with index {i}", g.q0.len())))?;
            (git_quotient_fan(&d, lambda)?, FanMeta::which(&which.name()))
        }
        Which::Chow => (chow_quotient_fan(&d)?, FanMeta::which("chow")),
        Which::Ah => (ah_fan(&d)?, FanMeta::which("ah")),
        Which::Hilbert => {
            let h = hilbert(&d, bound, cap)?;
            let meta = hilbert_meta("hilbert", &h);
            (h.fan, meta)
        }
        Which::Universal => {
            let h = hilbert(&d, bound, cap)?;
            let meta = hilbert_meta("universal", &h);
            (lift_to_sigma(&d, &h.fan)?, meta)
        }
    };
    Ok(Outcome::ok(emit_fan(&fan, &meta)))
}

fn write_divisor(out: &mut String, pd: &PolyhedralDivisor) {
    let section: Vec<String> = pd.section().row_vectors().iter().map(format_vector).collect();
    write_list(out, "section", &section);
    let tail_rays: Vec<String> = pd.tail().rays().iter().map(format_vector).collect();
    write_list(out, "tail_rays", &tail_rays);
    let tail_lin: Vec<String> = pd.tail().lineality().iter().map(format_vector).collect();
    write_list(out, "tail_lineality", &tail_lin);
    out.push_str("\n[base]\n");
    write_fan_body(out, pd.base());
    for (ray, delta) in pd.base().rays().iter().zip(pd.coefficients()) {
        out.push_str("\n[[coefficients]]\n");
        writeln!(out, "ray = {}", format_vector(ray)).unwrap();
        let vertices: Vec<String> = delta.vertices().iter().map(format_vector).collect();
        write_list(out, "vertices", &vertices);
    }
}

/// Lattice characters of the weight cone with max-norm at most `bound` and a
/// bounded fiber.
fn check_characters(d: &TorusDowngrade, bound: u64) -> CliResult<Vec<RatVector>> {
    let omega = weight_cone(d)?;
    let k = d.subtorus_rank();
    let b = bound as i64;
    let mut out = Vec::new();
    let mut x = vec![-b; k];
    loop {
        let chi = RatVector::from_ints(&x);
        if omega.contains_vector(&chi) {
            let fiber = d.fiber(&chi)?;
            if !fiber.is_empty() && fiber.polyhedron().is_bounded() {
                out.push(chi);
            }
        }
        match (0..k).rev().find(|&i| x[i] < b) {
            Some(i) => {
                x[i] += 1;
                x[i + 1..].iter_mut().for_each(|v| *v = -b);
            }
            None => return Ok(out),
        }
    }
}

fn cmd_pdivisor(scenario: &Path, check: Option<u64>) -> CliResult<Outcome> {
    let d = load(scenario)?;
    let pd = downgrade_divisor(&d, &default_section(&d))?;
    let mut out = String::new();
    write_divisor(&mut out, &pd);
    let mut verified = true;
    if let Some(bound) = check {
        for chi in check_characters(&d, bound)? {
            let c = section_count_check(&d, &pd, &chi)?;
            verified &= c.equal;
            out.push_str("\n[[counts]]\n");
            writeln!(out, "chi = {}", format_vector(&chi)).unwrap();
            writeln!(out, "sections = {}", c.lhs).unwrap();
            writeln!(out, "fiber_points = {}", c.rhs).unwrap();
            writeln!(out, "equal = {}", c.equal).unwrap();
        }
    }
    Ok(Outcome { text: out, verified })
}

fn cmd_check_diagram(scenario: &Path, bound: Option<u64>, cap: u64) -> CliResult<Outcome> {
    check_bound(bound)?;
    let d = load(scenario)?;
    let bound = match bound {
        Some(b) => b,
        None => hilbert_main_fan_auto(&d, 1, cap)?.bound,
    };
    let report = verify_diagram(&d, bound)?;
    let mut out = String::new();
    for c in &report.checks {
        writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name).unwrap();
    }
    writeln!(out, "bound = {bound}").unwrap();
    writeln!(out, "stabilized = {}", report.hilbert_stabilized).unwrap();
    writeln!(out, "hilbert_equals_chow = {}", report.hilbert_equals_chow).unwrap();
    let maximal = |f: &Fan| f.n_maximal();
    writeln!(
        out,
        "maximal cones: chow {}, hilbert {}, ah {}, universal {}",
        maximal(&report.bundle.chow_fan),
        maximal(&report.bundle.hilbert.fan),
        maximal(&report.bundle.ah_fan),
        maximal(&report.bundle.universal_fan)
    )
    .unwrap();
    Ok(Outcome {
        text: out,
        verified: report.all_passed(),
    })
}

fn cmd_slice(fan: &Path, normal: &[i64], level: &str) -> CliResult<Outcome> {
    let level = parse_rat(level).ok_or_else(|| CliError::Invalid(format!("not a rational: {level:?}")))?;
    let (fan, _) = parse_fan(&read(fan)?)?;
    Ok(Outcome::ok(svg_slice(&fan, normal, &level)?))
}

fn execute(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Gitfan { scenario } => cmd_gitfan(scenario),
        Command::QuotientFan {
            scenario,
            which,
            bound,
            cap,
        } => cmd_quotient_fan(scenario, which, *bound, *cap),
        Command::Pdivisor { scenario, check, .. } => cmd_pdivisor(scenario, *check),
        Command::CheckDiagram { scenario, bound, cap } => cmd_check_diagram(scenario, *bound, *cap),
        Command::Slice { fan, normal, level } => cmd_slice(fan, normal, level),
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .try_init();
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    init_logging(cli.verbose);
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(outcome.text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "stdout".into(),
                source,
            }),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INPUT;
    }
    if outcome.verified {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "verification failed");
        EXIT_VERIFY
    }
}
