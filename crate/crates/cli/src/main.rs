mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dioph_core::heights::{Place, PlaceSet, ProjectivePoint};
use dioph_core::rational::{parse_q, Q};
use dioph_core::surface::PicardClass;

use render::Format;

/// Exact computations for approximation to subschemes of projective space.
#[derive(Parser, Debug)]
#[command(name = "dioph", version, about)]
struct Cli {
    /// Output format; tables default to CSV, everything else to text.
    #[arg(long, value_enum, global = true)]
    output: Option<Format>,
    /// Seed for commands that sample at random.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// JSON configuration file (used by `scan`).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// Subschemes given either inline or through a catalog file.
#[derive(Args, Debug, Clone)]
pub struct Ideals {
    /// Ambient space, `P1`, `P2` or `P3`.
    #[arg(long, value_parser = parse_space)]
    pub space: usize,
    /// Generators of one subscheme, comma separated; repeat per subscheme.
    #[arg(long = "ideal")]
    pub ideals: Vec<String>,
    /// JSON catalog: `[{"label": ..., "generators": [...]}, ...]`.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Truncated β_N(O(d), Y) on Pⁿ.
    Beta {
        #[arg(long, value_parser = parse_space)]
        space: usize,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[arg(long = "N")]
        level: u32,
        /// Print β_1 ..= β_N with the running minimum.
        #[arg(long)]
        history: bool,
    },
    /// β of a divisor on the blow-up of P² in up to three points.
    BetaSurface {
        #[arg(long = "A", value_parser = parse_class)]
        a: PicardClass,
        #[arg(long = "D", value_parser = parse_class)]
        d: PicardClass,
        /// Also compute the truncation at this level.
        #[arg(long = "N")]
        level: Option<u32>,
    },
    /// Seshadri constant with nef and failure certificates.
    Seshadri {
        #[arg(long = "A", value_parser = parse_class)]
        a: PicardClass,
        #[arg(long = "D", value_parser = parse_class)]
        d: PicardClass,
        /// Where to probe for failure; defaults to ε + 1/100.
        #[arg(long, value_parser = parse_rational)]
        gamma: Option<Q>,
        /// Compare β with (r/(n+1))·ε for this codimension r.
        #[arg(long)]
        codim: Option<u32>,
        /// Dimension n for the comparison.
        #[arg(long, default_value_t = 2)]
        dim: u32,
        /// Truncation level used when β has no closed form.
        #[arg(long = "N", default_value_t = 8)]
        level: u32,
    },
    /// Jumps of the filtration by weighted vanishing order and its F-value.
    Filtration {
        #[command(flatten)]
        ideals: Ideals,
        #[arg(long, value_parser = parse_rationals)]
        weights: Rationals,
        #[arg(long = "N")]
        level: u32,
        /// Also report μ of this form.
        #[arg(long)]
        form: Option<String>,
    },
    /// A basis adapted to the filtrations of two weight vectors.
    AdaptedBasis {
        #[command(flatten)]
        ideals: Ideals,
        #[arg(long, value_parser = parse_rationals)]
        weights: Rationals,
        #[arg(long, value_parser = parse_rationals)]
        weights2: Rationals,
        #[arg(long = "N")]
        level: u32,
    },
    /// Weil function of a subscheme at one place, or proximity over a set.
    Weil {
        /// Generators, comma separated.
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        points: Points,
        #[arg(long, default_value = "inf", value_parser = parse_place)]
        place: Place,
        /// Sum over these places instead of a single one.
        #[arg(long, value_parser = parse_places)]
        places: Option<PlaceSet>,
    },
    /// Absolute logarithmic height.
    Height {
        #[command(flatten)]
        points: Points,
        /// Also report the part of the height coming from these places.
        #[arg(long, value_parser = parse_places)]
        places: Option<PlaceSet>,
    },
    /// Check the main inequality on all points up to a height bound.
    Scan {
        #[arg(long, default_value_t = 50)]
        bound: u32,
        /// Read points from a file instead of enumerating them.
        #[arg(long)]
        points: Option<PathBuf>,
        /// Evaluate a random subset of this size (uses --seed).
        #[arg(long)]
        sample: Option<usize>,
        /// Report every evaluated point, not only violations.
        #[arg(long)]
        rows: bool,
    },
    /// The table for A(ℓ) = (3ℓ+1)H − ℓ(E1+E2+E3), D = H − E1.
    Example5 {
        #[arg(long, default_value_t = 10)]
        l_max: i64,
        /// Add the truncated β at this level.
        #[arg(long = "N")]
        level: Option<u32>,
    },
    /// Whether the supports meet properly; names a failing subset if not.
    CheckPosition {
        #[command(flatten)]
        ideals: Ideals,
    },
    /// F(t) against the β-weighted bound, explicit or on random instances.
    ConcavityTest {
        #[arg(long, value_parser = parse_space)]
        space: Option<usize>,
        #[arg(long = "ideal")]
        ideals: Vec<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_parser = parse_rationals)]
        betas: Option<Rationals>,
        /// Weights; rescaled so that Σ β_i t_i = 1.
        #[arg(long, value_parser = parse_rationals)]
        weights: Option<Rationals>,
        #[arg(long = "N", default_value_t = 4)]
        level: u32,
        /// Run this many random coordinate instances instead (uses --seed).
        #[arg(long)]
        random: Option<usize>,
    },
}

/// A single point or a file with one `x0:x1:...` per line.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Points {
    #[arg(long, value_parser = parse_point)]
    pub point: Option<ProjectivePoint>,
    #[arg(long = "points")]
    pub points_file: Option<PathBuf>,
}

fn parse_space(s: &str) -> Result<usize, String> {
    let n: usize = s
        .strip_prefix(['P', 'p'])
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| format!("expected P1, P2 or P3, got {s:?}"))?;
    if !(1..=3).contains(&n) {
        return Err(format!("only P1, P2 and P3 are supported, got {s:?}"));
    }
    Ok(n + 1)
}

fn parse_rational(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

/// Comma-separated list of rationals, kept as one flag value.
#[derive(Clone, Debug)]
pub struct Rationals(pub Vec<Q>);

fn parse_rationals(s: &str) -> Result<Rationals, String> {
    s.split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()
        .map(Rationals)
}

fn parse_class(s: &str) -> Result<PicardClass, String> {
    PicardClass::parse(s, None).map_err(|e| e.to_string())
}

fn parse_place(s: &str) -> Result<Place, String> {
    s.parse().map_err(|e: dioph_core::Error| e.to_string())
}

fn parse_places(s: &str) -> Result<PlaceSet, String> {
    s.parse().map_err(|e: dioph_core::Error| e.to_string())
}

fn parse_point(s: &str) -> Result<ProjectivePoint, String> {
    s.parse().map_err(|e: dioph_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, default_format) = match &cli.command {
        Command::Beta { .. } => ("beta", Format::Text),
        Command::BetaSurface { .. } => ("beta-surface", Format::Text),
        Command::Seshadri { .. } => ("seshadri", Format::Text),
        Command::Filtration { .. } => ("filtration", Format::Text),
        Command::AdaptedBasis { .. } => ("adapted-basis", Format::Text),
        Command::Weil { .. } => ("weil", Format::Text),
        Command::Height { .. } => ("height", Format::Text),
        Command::Scan { .. } => ("scan", Format::Text),
        Command::Example5 { .. } => ("example5", Format::Csv),
        Command::CheckPosition { .. } => ("check-position", Format::Text),
        Command::ConcavityTest { .. } => ("concavity-test", Format::Text),
    };
    let format = cli.output.unwrap_or(default_format);
    let result = run(&cli).and_then(|report| {
        let mut stdout = std::io::stdout().lock();
        render::write(&mut stdout, format, name, cli.seed, &report)?;
        Ok(report.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<render::Report> {
    use commands::*;
    match &cli.command {
        Command::Beta {
            space,
            ideal,
            degree,
            level,
            history,
        } => beta(*space, ideal, *degree, *level, *history),
        Command::BetaSurface { a, d, level } => beta_surface(a, d, *level),
        Command::Seshadri {
            a,
            d,
            gamma,
            codim,
            dim,
            level,
        } => seshadri(a, d, gamma.as_ref(), codim.map(|r| (r, *dim, *level))),
        Command::Filtration {
            ideals,
            weights,
            level,
            form,
        } => filtration(ideals, &weights.0, *level, form.as_deref()),
        Command::AdaptedBasis {
            ideals,
            weights,
            weights2,
            level,
        } => adapted_basis(ideals, &weights.0, &weights2.0, *level),
        Command::Weil {
            ideal,
            points,
            place,
            places,
        } => weil(ideal, points, *place, places.as_ref()),
        Command::Height { points, places } => height(points, places.as_ref()),
        Command::Scan {
            bound,
            points,
            sample,
            rows,
        } => scan(
            cli.config.as_deref(),
            *bound,
            points.as_deref(),
            sample.map(|k| (k, cli.seed)),
            *rows,
        ),
        Command::Example5 { l_max, level } => example5(*l_max, *level),
        Command::CheckPosition { ideals } => check_position(ideals),
        Command::ConcavityTest {
            space,
            ideals,
            catalog,
            betas,
            weights,
            level,
            random,
        } => match random {
            Some(k) => concavity_random(*k, cli.seed, *level),
            None => {
                let space =
                    space.ok_or_else(|| anyhow::anyhow!("--space is required without --random"))?;
                let ideals = Ideals {
                    space,
                    ideals: ideals.clone(),
                    catalog: catalog.clone(),
                };
                let betas = betas
                    .as_ref()
                    .ok_or_else(|| anyhow::anyhow!("--betas is required"))?;
                let weights = weights
                    .as_ref()
                    .ok_or_else(|| anyhow::anyhow!("--weights is required"))?;
                concavity_explicit(&ideals, &betas.0, &weights.0, *level)
            }
        },
    }
}
