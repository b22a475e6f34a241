//! Command-line surface. Every command is a pure function from arguments to
//! an [`Outcome`]; the binary only prints it and exits.
//!
//! Failing commands end their stderr with a line of the form
//! `error[<tag>]: <message>`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{classify_order, DEFAULT_ORDER_GUARD, FORCED_ORDER_GUARD};
use crate::constructions::{self, automorphisms_of, inner_automorphism, twist, GroupSpec};
use crate::document::{self, DocumentError, HomGroupDocument};
use crate::error::Error;
use crate::group::{FiniteGroup, HomGroup, Side};
use crate::hopf::{build_group_hopf, sub_hopf_dims, verify_hom_hopf};
use crate::perm::Permutation;
use crate::subgroups::{
    cauchy_search, center, centralizer, closure_failure, coset, coset_partition,
    enumerate_hom_subgroups, lagrange_check, Subset,
};

/// Longest list of violations printed before truncating.
const MAX_LISTED: usize = 32;

#[derive(Debug, Parser)]
#[command(
    name = "homgroups",
    version,
    about = "Exact computations on finite Hom-groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every Hom-group axiom on a document.
    Verify { path: PathBuf },
    /// Enumerate all Hom-groups of a given order with unit 0.
    Classify(ClassifyArgs),
    /// List every Hom-subgroup.
    Subgroups { path: PathBuf },
    /// Print one coset, or the whole coset partition when no element is given.
    Cosets(CosetArgs),
    /// Check that every Hom-subgroup order divides the group order.
    Lagrange { path: PathBuf },
    /// Search for Hom-subgroups of every prime order dividing |G|.
    Cauchy { path: PathBuf },
    /// Print the center and every centralizer.
    Center { path: PathBuf },
    /// Twist a group by an automorphism, or list its automorphisms.
    Twist(TwistArgs),
    /// Hom-group Hopf algebra checks.
    Hopf(HopfArgs),
    /// Render the Cayley table.
    Cayley {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a built-in fixture as a document.
    Fixture { name: String },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub order: usize,
    /// Also count ordinary groups (α = Id).
    #[arg(long)]
    pub include_groups: bool,
    /// Print one canonical representative per isomorphism class.
    #[arg(long)]
    pub up_to_iso: bool,
    /// Allow orders above the default guard.
    #[arg(long)]
    pub force: bool,
    /// Write every printed structure as a document into this directory.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CosetArgs {
    pub path: PathBuf,
    /// Comma-separated member indices, e.g. `0,3`.
    #[arg(long)]
    pub subgroup: String,
    #[arg(long)]
    pub element: Option<usize>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["auto", "conjugate", "list_autos"]))]
pub struct TwistArgs {
    /// `zn:K`, `dn:K`, or a path to a group document (α = Id).
    #[arg(long)]
    pub group: String,
    /// Automorphism as a comma-separated image list, e.g. `0,5,4,3,2,1`.
    #[arg(long)]
    pub auto: Option<String>,
    /// Twist by conjugation with this element (label or index).
    #[arg(long)]
    pub conjugate: Option<String>,
    #[arg(long)]
    pub list_autos: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["check", "dims"]))]
pub struct HopfArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub dims: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Exit status for a check that ran and failed.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for unreadable input or bad arguments.
pub const EXIT_ERROR: i32 = 2;

struct Failure {
    tag: &'static str,
    message: String,
    code: i32,
}

impl Failure {
    fn new(tag: &'static str, message: impl Into<String>, code: i32) -> Self {
        Failure {
            tag,
            message: message.into(),
            code,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let tag = match &e {
            Error::Rejected(_) => "invalid",
            Error::NotAnAutomorphism { .. } | Error::UnitNotFixed => "not-automorphism",
            Error::OrderGuard { .. } => "guard",
            Error::NotHomSubgroup(_) => "not-subgroup",
            Error::UnknownFixture(_) => "unknown-fixture",
            _ => "domain",
        };
        Failure::new(tag, e.to_string(), EXIT_ERROR)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::new(e.tag(), e.to_string(), EXIT_ERROR)
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new("io", format!("{}: {e}", path.display()), EXIT_ERROR))
}

fn load(path: &Path) -> Result<HomGroup, Failure> {
    Ok(document::load(&read(path)?)?)
}

pub fn run(cli: Cli) -> Outcome {
    let mut out = String::new();
    let mut err = String::new();
    let result = dispatch(cli.command, &mut out);
    let code = match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.tag, f.message.replace('\n', " "));
            f.code
        }
    };
    Outcome {
        stdout: out,
        stderr: err,
        code,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if !e.use_stderr() {
                return Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                };
            }
            let first = rendered
                .lines()
                .next()
                .unwrap_or("usage error")
                .trim_start_matches("error: ");
            Outcome {
                stdout: String::new(),
                stderr: format!("{rendered}error[usage]: {first}\n"),
                code: EXIT_ERROR,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> CmdResult {
    match command {
        Command::Verify { path } => cmd_verify(&path, out),
        Command::Classify(args) => cmd_classify(&args, out),
        Command::Subgroups { path } => cmd_subgroups(&path, out),
        Command::Cosets(args) => cmd_cosets(&args, out),
        Command::Lagrange { path } => cmd_lagrange(&path, out),
        Command::Cauchy { path } => cmd_cauchy(&path, out),
        Command::Center { path } => cmd_center(&path, out),
        Command::Twist(args) => cmd_twist(&args, out),
        Command::Hopf(args) => cmd_hopf(&args, out),
        Command::Cayley { path, format } => cmd_cayley(&path, format, out),
        Command::Fixture { name } => cmd_fixture(&name, out),
    }
}

fn cmd_verify(path: &Path, out: &mut String) -> CmdResult {
    let parts = HomGroupDocument::parse(&read(path)?)?.parts()?;
    let report = parts.verify();
    if report.is_valid() {
        let _ = writeln!(out, "valid: Hom-group of order {}", parts.table.order());
        return Ok(());
    }
    let violations = report.violations();
    let _ = writeln!(out, "invalid: {} violation(s)", violations.len());
    for v in violations.iter().take(MAX_LISTED) {
        let _ = writeln!(out, "  {v}");
    }
    if violations.len() > MAX_LISTED {
        let _ = writeln!(out, "  ... and {} more", violations.len() - MAX_LISTED);
    }
    Err(Failure::new(
        "invalid",
        format!("first violation {}", violations[0]),
        EXIT_FAILED,
    ))
}

fn plural(count: usize, word: &str, plural: &str) -> String {
    if count == 1 {
        format!("{count} {word}")
    } else {
        format!("{count} {plural}")
    }
}

fn cmd_classify(args: &ClassifyArgs, out: &mut String) -> CmdResult {
    let guard = if args.force {
        FORCED_ORDER_GUARD
    } else {
        DEFAULT_ORDER_GUARD
    };
    let report = classify_order(args.order, args.include_groups, guard)?;
    let _ = writeln!(
        out,
        "{} of order {} ({}), {}",
        plural(report.raw_count, "Hom-group", "Hom-groups"),
        report.order,
        if report.include_groups {
            "groups included"
        } else {
            "groups excluded"
        },
        plural(
            report.class_count(),
            "isomorphism class",
            "isomorphism classes"
        ),
    );
    let shown: Vec<HomGroup> = if args.up_to_iso {
        report
            .classes
            .iter()
            .map(|c| c.representative.clone())
            .collect()
    } else {
        let cfg = crate::classify::SearchConfig::new(args.order)
            .include_groups(args.include_groups)
            .guard(guard);
        crate::classify::enumerate_hom_groups(&cfg)?
    };
    for (k, g) in shown.iter().enumerate() {
        let _ = writeln!(out);
        if args.up_to_iso {
            let _ = writeln!(
                out,
                "class {} ({}):",
                k + 1,
                plural(
                    report.classes[k].labeled_count,
                    "labeled table",
                    "labeled tables"
                )
            );
        } else {
            let _ = writeln!(out, "structure {}:", k + 1);
        }
        out.push_str(&document::render_hom_group(g));
    }
    if let Some(dir) = &args.emit {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::new("io", format!("{}: {e}", dir.display()), EXIT_ERROR))?;
        for (k, g) in shown.iter().enumerate() {
            let path = dir.join(format!("order{}_{:03}.json", args.order, k + 1));
            fs::write(&path, document::save(g))
                .map_err(|e| Failure::new("io", format!("{}: {e}", path.display()), EXIT_ERROR))?;
        }
    }
    Ok(())
}

fn cmd_subgroups(path: &Path, out: &mut String) -> CmdResult {
    let g = load(path)?;
    for h in enumerate_hom_subgroups(&g) {
        let _ = writeln!(out, "{h}");
    }
    Ok(())
}

fn cmd_cosets(args: &CosetArgs, out: &mut String) -> CmdResult {
    let g = load(&args.path)?;
    let h = Subset::parse_csv(g.order(), &args.subgroup)?;
    let side = Side::from(args.side);
    match args.element {
        Some(x) => {
            let c = coset(&g, &h, x, side)?;
            let _ = writeln!(out, "{}", c.members);
        }
        None => {
            for c in coset_partition(&g, &h, side)? {
                let _ = writeln!(out, "{}: {}", c.representative, c.members);
            }
        }
    }
    Ok(())
}

fn cmd_lagrange(path: &Path, out: &mut String) -> CmdResult {
    let g = load(path)?;
    let report = lagrange_check(&g);
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    let _ = writeln!(out, "|G| = {}", report.group_order);
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{}: order {}, index {}, divides {}, left partition {}, right partition {}",
            e.subgroup,
            e.order,
            e.index,
            ok(e.divides),
            ok(e.left_partition),
            ok(e.right_partition)
        );
    }
    let orders: Vec<String> = report.orders().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "orders: {}", orders.join(", "));
    if report.holds() {
        Ok(())
    } else {
        Err(Failure::new(
            "lagrange",
            "Lagrange property violated",
            EXIT_FAILED,
        ))
    }
}

fn cmd_cauchy(path: &Path, out: &mut String) -> CmdResult {
    let g = load(path)?;
    let report = cauchy_search(&g);
    let _ = writeln!(out, "|G| = {}", report.group_order);
    for e in &report.entries {
        match &e.witness {
            Some(h) => {
                let _ = writeln!(out, "p = {}: {}", e.prime, h);
            }
            None => {
                let _ = writeln!(out, "p = {}: none", e.prime);
            }
        }
    }
    Ok(())
}

fn cmd_center(path: &Path, out: &mut String) -> CmdResult {
    let g = load(path)?;
    let _ = writeln!(out, "center: {}", center(&g));
    for x in 0..g.order() {
        let c = centralizer(&g, x)?;
        let _ = match closure_failure(&g, &c) {
            None => writeln!(out, "centralizer of {}: {c}", g.label(x)),
            Some(why) => writeln!(
                out,
                "centralizer of {}: {c} (not a Hom-subgroup: {why})",
                g.label(x)
            ),
        };
    }
    Ok(())
}

fn load_group(spec: &str) -> Result<FiniteGroup, Failure> {
    if let Ok(spec) = spec.parse::<GroupSpec>() {
        return Ok(spec.build()?);
    }
    let parts = HomGroupDocument::parse(&read(Path::new(spec))?)?.parts()?;
    let group = FiniteGroup::new(parts.table, parts.unit)?;
    Ok(match parts.labels {
        Some(labels) => group.with_labels(labels)?,
        None => group,
    })
}

fn cmd_twist(args: &TwistArgs, out: &mut String) -> CmdResult {
    let group = load_group(&args.group)?;
    if args.list_autos {
        for f in automorphisms_of(&group) {
            let images: Vec<String> = f.images().iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", images.join(","));
        }
        return Ok(());
    }
    let alpha = match (&args.auto, &args.conjugate) {
        (Some(csv), _) => {
            let images = csv
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::new("usage", format!("--auto: {e}"), EXIT_ERROR))?;
            if images.len() != group.order() {
                return Err(Failure::new(
                    "usage",
                    format!(
                        "--auto has {} images, group has order {}",
                        images.len(),
                        group.order()
                    ),
                    EXIT_ERROR,
                ));
            }
            Permutation::new(images)?
        }
        (None, Some(s)) => inner_automorphism(&group, group.element(s)?)?,
        (None, None) => unreachable!("clap requires a mode"),
    };
    let g = twist(&group, &alpha)?;
    out.push_str(&document::save(&g));
    Ok(())
}

fn cmd_hopf(args: &HopfArgs, out: &mut String) -> CmdResult {
    let g = load(&args.path)?;
    if args.check {
        let report = verify_hom_hopf(&build_group_hopf(&g));
        if report.is_valid() {
            let _ = writeln!(
                out,
                "valid: KG is an (alpha, Id)-Hom-Hopf algebra of dimension {}",
                g.order()
            );
        } else {
            let _ = writeln!(out, "invalid: {} violation(s)", report.violations().len());
            for v in report.violations().iter().take(MAX_LISTED) {
                let _ = writeln!(out, "  {v}");
            }
            return Err(Failure::new(
                "hopf",
                "Hom-Hopf axioms violated",
                EXIT_FAILED,
            ));
        }
    }
    if args.dims {
        let n = g.order();
        for d in sub_hopf_dims(&g) {
            let verdict = if n % d == 0 {
                "divides"
            } else {
                "does NOT divide"
            };
            let _ = writeln!(out, "{d} {verdict} {n}");
        }
    }
    Ok(())
}

fn cmd_cayley(path: &Path, format: Format, out: &mut String) -> CmdResult {
    let g = load(path)?;
    out.push_str(&match format {
        Format::Text => document::render_hom_group(&g),
        Format::Csv => document::render_csv(g.table()),
        Format::Json => document::save(&g),
    });
    Ok(())
}

fn cmd_fixture(name: &str, out: &mut String) -> CmdResult {
    let g = constructions::fixture(name)?.into_hom_group();
    out.push_str(&document::save(&g));
    Ok(())
}
