//! Command-line driver: one subcommand per engine operation, each emitting a
//! JSON [`RunReport`] on stdout and a one-line summary on stderr.

pub mod hopf_cmd;
pub mod input;
pub mod inventory;
pub mod lie_cmd;
pub mod report;
pub mod validate;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use input::CliError;
pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "cotwist", version, about = "Exact checks for Hopf 2-cocycle twists")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Truncation order of h-series.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Substitution value for h, as an integer or p/q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Representation file; repeat for a second representation.
    #[arg(long, global = true)]
    pub rep: Vec<PathBuf>,
    /// Twist series file.
    #[arg(long, global = true)]
    pub series: Option<PathBuf>,
    /// Lie algebra file (defaults to the series' own, then to [X, Y] = Y).
    #[arg(long, global = true)]
    pub lie: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record wall time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hopf algebra axioms.
    VerifyHopf { hopf: PathBuf },
    /// Cotriangular axioms of an R-form.
    VerifyCotriangular { hopf: PathBuf, rform: PathBuf },
    /// Hopf 2-cocycle conditions of a form.
    CocycleCheck { hopf: PathBuf, form: PathBuf },
    /// Twisted Hopf algebra `H^J`, with the convolution inverse of `J`.
    Twist { hopf: PathBuf, form: PathBuf },
    /// Twisted R-form `R^J` on `H^J`.
    TwistRform { hopf: PathBuf, rform: PathBuf, form: PathBuf },
    /// Drinfeld element: of `(H, R)` given two files, or of a twist series
    /// on `--rep` given `--series`.
    Drinfeld { files: Vec<PathBuf> },
    /// `S² = u∗I∗u⁻¹`.
    S2Check { hopf: PathBuf, rform: PathBuf },
    /// `R_c` from a central grouplike `c`.
    RcBuild { hopf: PathBuf, grouplike: PathBuf },
    /// `tr(S²|_C) = dim C` on basis-aligned subcoalgebras (default: all of H).
    Pseudoinvolutivity { hopf: PathBuf, subcoalgebras: Option<PathBuf> },
    /// Rank of an R-form.
    RformRank { rform: PathBuf },
    /// Comodule axioms and coefficient coalgebra.
    ComoduleCheck { hopf: PathBuf, comodule: PathBuf },
    /// Categorical dimension, as a trace and as a braided loop.
    Catdim { hopf: PathBuf, rform: PathBuf, comodule: PathBuf },
    /// Splitting `V = V₊ ⊕ V₋` by the Drinfeld element.
    SignSplit { hopf: PathBuf, rform: PathBuf, comodule: PathBuf },
    /// Central grouplike from per-comodule signs, optionally applied to an
    /// R-form.
    CentralGrouplike { hopf: PathBuf, splits: PathBuf, rform: Option<PathBuf> },
    /// Braiding `c_{V,W}` and its symmetry.
    Braiding { hopf: PathBuf, rform: PathBuf, v: PathBuf, w: PathBuf },
    /// Cocycle on `B*` against twist equations in `B⊗B`.
    Transport { hopf: PathBuf, element: PathBuf },
    /// Group algebra from a multiplication table.
    GroupAlgebra { table: PathBuf },
    /// Dual Hopf algebra.
    Dualize { hopf: PathBuf },
    /// Lie algebra axioms, plus representation axioms with `--rep`.
    LieCheck { lie: PathBuf },
    /// PBW normal form of an element of `U(g)^{⊗k}`.
    Pbw { expr: PathBuf },
    /// Classical Yang–Baxter residual of `r`.
    Cybe { r: PathBuf },
    /// Per-degree twist equation residual of `--series`.
    TwistResidual,
    /// `e^{hr/2}` over an abelian algebra.
    ExpTwist { r: PathBuf },
    /// Jordanian series over `[X, Y] = Y`.
    Jordanian,
    /// `J_f` series from a coefficient table.
    JfTwist { table: PathBuf, r: PathBuf },
    /// `J` on `V⊗W` as a polynomial in h.
    EvalPair,
    /// `R = J₂₁⁻¹J`.
    RFromTwist,
    /// Unipotency of the Drinfeld element at `h = --h`.
    Unipotency,
    /// Gauge transform `J^g`.
    Gauge { gauge: PathBuf },
    /// Span of the components of `r` and whether it is an abelian
    /// subalgebra.
    SpanAbelian { r: PathBuf },
    /// Schema and invariant check of any input file.
    Validate {
        file: PathBuf,
        /// Force the file kind instead of detecting it.
        #[arg(long)]
        kind: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyHopf { .. } => "verify-hopf",
            Command::VerifyCotriangular { .. } => "verify-cotriangular",
            Command::CocycleCheck { .. } => "cocycle-check",
            Command::Twist { .. } => "twist",
            Command::TwistRform { .. } => "twist-rform",
            Command::Drinfeld { .. } => "drinfeld",
            Command::S2Check { .. } => "s2-check",
            Command::RcBuild { .. } => "rc-build",
            Command::Pseudoinvolutivity { .. } => "pseudoinvolutivity",
            Command::RformRank { .. } => "rform-rank",
            Command::ComoduleCheck { .. } => "comodule-check",
            Command::Catdim { .. } => "catdim",
            Command::SignSplit { .. } => "sign-split",
            Command::CentralGrouplike { .. } => "central-grouplike",
            Command::Braiding { .. } => "braiding",
            Command::Transport { .. } => "transport",
            Command::GroupAlgebra { .. } => "group-algebra",
            Command::Dualize { .. } => "dualize",
            Command::LieCheck { .. } => "lie-check",
            Command::Pbw { .. } => "pbw",
            Command::Cybe { .. } => "cybe",
            Command::TwistResidual => "twist-residual",
            Command::ExpTwist { .. } => "exp-twist",
            Command::Jordanian => "jordanian",
            Command::JfTwist { .. } => "jf-twist",
            Command::EvalPair => "eval-pair",
            Command::RFromTwist => "r-from-twist",
            Command::Unipotency => "unipotency",
            Command::Gauge { .. } => "gauge",
            Command::SpanAbelian { .. } => "span-abelian",
            Command::Validate { .. } => "validate",
        }
    }
}

pub fn dispatch(cmd: &Command, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    use Command as C;
    match cmd {
        C::VerifyHopf { hopf } => hopf_cmd::verify_hopf(hopf, report),
        C::VerifyCotriangular { hopf, rform } => hopf_cmd::verify_cotriangular(hopf, rform, report),
        C::CocycleCheck { hopf, form } => hopf_cmd::cocycle_check(hopf, form, report),
        C::Twist { hopf, form } => hopf_cmd::twist(hopf, form, report),
        C::TwistRform { hopf, rform, form } => hopf_cmd::twist_rform(hopf, rform, form, report),
        C::Drinfeld { files } if flags.series.is_some() => {
            if !files.is_empty() {
                return Err(CliError::Usage("drinfeld takes either --series or HOPF RFORM, not both".into()));
            }
            lie_cmd::drinfeld(flags, report)
        }
        C::Drinfeld { files } => match files.as_slice() {
            [hopf, rform] => hopf_cmd::drinfeld(hopf, rform, report),
            _ => Err(CliError::Usage("drinfeld needs HOPF RFORM, or --series with --rep".into())),
        },
        C::S2Check { hopf, rform } => hopf_cmd::s2_check(hopf, rform, report),
        C::RcBuild { hopf, grouplike } => hopf_cmd::rc_build(hopf, grouplike, report),
        C::Pseudoinvolutivity { hopf, subcoalgebras } => {
            hopf_cmd::pseudoinvolutivity(hopf, subcoalgebras.as_deref(), report)
        }
        C::RformRank { rform } => hopf_cmd::rform_rank(rform, report),
        C::ComoduleCheck { hopf, comodule } => hopf_cmd::comodule_check(hopf, comodule, report),
        C::Catdim { hopf, rform, comodule } => hopf_cmd::catdim(hopf, rform, comodule, report),
        C::SignSplit { hopf, rform, comodule } => hopf_cmd::sign_split(hopf, rform, comodule, report),
        C::CentralGrouplike { hopf, splits, rform } => {
            hopf_cmd::central_grouplike(hopf, splits, rform.as_deref(), report)
        }
        C::Braiding { hopf, rform, v, w } => hopf_cmd::braiding(hopf, rform, v, w, report),
        C::Transport { hopf, element } => hopf_cmd::transport(hopf, element, report),
        C::GroupAlgebra { table } => hopf_cmd::group_algebra(table, report),
        C::Dualize { hopf } => hopf_cmd::dualize(hopf, report),
        C::LieCheck { lie } => lie_cmd::lie_check(lie, flags, report),
        C::Pbw { expr } => lie_cmd::pbw(expr, flags, report),
        C::Cybe { r } => lie_cmd::cybe(r, flags, report),
        C::TwistResidual => lie_cmd::twist_residual(flags, report),
        C::ExpTwist { r } => lie_cmd::exp_twist(r, flags, report),
        C::Jordanian => lie_cmd::jordanian(flags, report),
        C::JfTwist { table, r } => lie_cmd::jf_twist(table, r, flags, report),
        C::EvalPair => lie_cmd::eval_pair(flags, report),
        C::RFromTwist => lie_cmd::r_from_twist(flags, report),
        C::Unipotency => lie_cmd::unipotency(flags, report),
        C::Gauge { gauge } => lie_cmd::gauge(gauge, flags, report),
        C::SpanAbelian { r } => lie_cmd::span_abelian(r, flags, report),
        C::Validate { file, kind } => validate::validate(file, kind.as_deref(), flags, report),
    }
}

/// Run one command. Returns the report, or an input error (exit status 2).
pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut report = RunReport::new(cli.command.name());
    dispatch(&cli.command, &cli.flags, &mut report)?;
    if cli.flags.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}
