//! The `framix` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use framix::braid::{builtin_catalog, load_catalog, parse_braid};
use framix::esystem::all_solutions;
use framix::invariants::compare_pair;
use framix::ring::Coeff;
use framix::verify::DEFAULT_SEED;
use framix::{
    invariant, run_suite, Error, FramedBraidWord, InvariantKind, InvariantPolynomial,
    InvariantSpec, LinkRecord, Suite, VerifyConfig,
};

/// Environment variable naming the default catalog file.
pub const CATALOG_ENV: &str = "FRAMIX_CATALOG";

#[derive(Parser, Debug)]
#[command(
    name = "framix",
    version,
    about = "Exact framed and tied link invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute an invariant of a braid closure.
    Invariant(InvariantArgs),
    /// List the E-system solutions for a modulus.
    Esystem(EsystemArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Difference of an invariant on two catalog links.
    Compare(CompareArgs),
    /// List the catalog.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Latex,
}

#[derive(Args, Debug)]
pub struct CatalogOpt {
    /// Catalog file; the bundled catalog when unset.
    #[arg(long, env = CATALOG_ENV)]
    pub catalog: Option<PathBuf>,
}

impl CatalogOpt {
    fn load(&self) -> Result<Vec<LinkRecord>, Error> {
        match &self.catalog {
            Some(p) => load_catalog(p),
            None => Ok(builtin_catalog()),
        }
    }
}

#[derive(Args, Debug)]
pub struct SpecOpt {
    /// homflypt, jones, theta_d, theta_small_d, phi_dD, theta_general or
    /// theta_small_general.
    #[arg(long, default_value = "homflypt")]
    pub kind: String,
    /// The modulus d (defaults to the modulus given in the braid text, or 1).
    #[arg(long)]
    pub d: Option<u32>,
    /// The subset D of Z/dZ, comma separated (defaults to all of Z/dZ).
    #[arg(long = "subset", value_delimiter = ',')]
    pub subset: Option<Vec<u32>>,
}

impl SpecOpt {
    fn spec(&self, fallback_d: u32) -> Result<InvariantSpec, Error> {
        let kind: InvariantKind = self.kind.parse()?;
        let mut spec = InvariantSpec::new(kind, self.d.unwrap_or(fallback_d));
        if let Some(s) = &self.subset {
            spec = spec.with_subset(s.clone());
        }
        spec.subset()?;
        Ok(spec)
    }
}

#[derive(Args, Debug)]
pub struct InvariantArgs {
    #[command(flatten)]
    pub spec: SpecOpt,
    /// Braid text, e.g. "B3 d=2 t1^1 s1 s2^-1".
    #[arg(long, conflicts_with = "link", required_unless_present = "link")]
    pub braid: Option<String>,
    /// Name of a catalog link.
    #[arg(long)]
    pub link: Option<String>,
    #[command(flatten)]
    pub catalog: CatalogOpt,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct EsystemArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Largest modulus checked.
    #[arg(long, default_value_t = 3)]
    pub d: u32,
    /// Largest strand count of random braids.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random samples per randomized check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Node budget of the skein-resolution oracle.
    #[arg(long, default_value_t = framix::invariants::DEFAULT_BUDGET)]
    pub budget: usize,
    #[command(flatten)]
    pub catalog: CatalogOpt,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    pub first: String,
    pub second: String,
    #[command(flatten)]
    pub spec: SpecOpt,
    /// Also print the difference after q -> 1/q, s -> 1/s.
    #[arg(long)]
    pub mirror: bool,
    #[command(flatten)]
    pub catalog: CatalogOpt,
    #[arg(long, value_enum, default_value = "text")]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    #[command(flatten)]
    pub catalog: CatalogOpt,
}

fn render(p: &InvariantPolynomial, output: Output) -> String {
    match output {
        Output::Text => p.to_string(),
        Output::Latex => p.latex(),
    }
}

fn find<'a>(catalog: &'a [LinkRecord], name: &str) -> Result<&'a LinkRecord, Error> {
    catalog
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownLink(name.to_string()))
}

fn run_invariant(a: &InvariantArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let braid: FramedBraidWord = match (&a.braid, &a.link) {
        (Some(text), _) => parse_braid(text)?,
        (None, Some(name)) => {
            let catalog = a.catalog.load()?;
            find(&catalog, name)?.framed(a.spec.d.unwrap_or(1))?
        }
        (None, None) => unreachable!("clap requires an input"),
    };
    let spec = a.spec.spec(braid.modulus())?;
    let value = invariant(&spec, &braid)?;
    writeln!(out, "{}", render(&value, a.output)).ok();
    Ok(0)
}

fn run_esystem(a: &EsystemArgs, out: &mut dyn Write) -> Result<i32, Error> {
    if a.d == 0 || a.d > 16 {
        return Err(Error::IndexOutOfRange {
            what: "modulus",
            index: a.d as i64,
        });
    }
    for sol in all_solutions(a.d) {
        let line = match a.output {
            Output::Text => sol.to_string(),
            Output::Latex => {
                let dset: Vec<String> = sol.subset.iter().map(|m| m.to_string()).collect();
                let xs: Vec<String> = sol.x.iter().map(|v| v.latex()).collect();
                format!(
                    "D=\\{{{}\\}} x=({}) E={}",
                    dset.join(","),
                    xs.join(", "),
                    sol.e.latex()
                )
            }
        };
        writeln!(out, "{line}").ok();
    }
    Ok(0)
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let suite: Suite = a.suite.parse()?;
    let cfg = VerifyConfig {
        d: a.d,
        n: a.n,
        seed: a.seed,
        samples: a.samples,
        budget: a.budget,
        catalog: a.catalog.load()?,
        ..VerifyConfig::default()
    };
    let results = run_suite(suite, &cfg);
    for r in &results {
        writeln!(out, "{r}").ok();
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    writeln!(out, "SUMMARY {} checks, {failed} failed", results.len()).ok();
    Ok(if failed == 0 { 0 } else { 1 })
}

fn run_compare(a: &CompareArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let catalog = a.catalog.load()?;
    let (x, y) = (find(&catalog, &a.first)?, find(&catalog, &a.second)?);
    let spec = a.spec.spec(1)?;
    let diff = compare_pair(x, y, &spec)?;
    writeln!(out, "{}", render(&diff, a.output)).ok();
    if a.mirror {
        writeln!(out, "{}", render(&diff.mirror(), a.output)).ok();
    }
    Ok(0)
}

fn run_catalog(a: &CatalogArgs, out: &mut dyn Write) -> Result<i32, Error> {
    for r in a.catalog.load()? {
        let framed = r.framed(1)?;
        writeln!(out, "{} components={} {}", r.name, r.components(), framed).ok();
    }
    Ok(0)
}

/// Runs the command line, writing the report to `out` and errors to
/// `err`. Returns the exit code: 0 on success, 1 when a check fails and 2
/// on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Invariant(a) => run_invariant(a, out),
        Command::Esystem(a) => run_esystem(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::Compare(a) => run_compare(a, out),
        Command::Catalog(a) => run_catalog(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            2
        }
    }
}
