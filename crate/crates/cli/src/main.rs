//! `shapeinv`: evaluate, verify and classify shape-invariant central
//! superpotentials, and write the reference figures as CSV data.

mod classify;
mod csv;
mod eval;
mod failure;
mod figure;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shapeinv_core::{Family, RadialGrid, Settings, Spacing};

use crate::failure::Failure;

#[derive(Parser)]
#[command(name = "shapeinv", version, about = "Shape-invariant central potentials in SUSY quantum mechanics")]
struct Cli {
    /// key = value file with hbar, mass and tolerance overrides
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate w, W and the partner potentials on a grid and write CSV
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        ell: f64,
        /// spatial dimension
        #[arg(long = "D", default_value_t = 3)]
        d: u32,
        #[command(flatten)]
        grid: GridArgs,
        /// output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the data behind one of the four reference figures
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        #[command(flatten)]
        grid: GridArgs,
        /// output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the invariant checks; exit status 1 when any check fails
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// a single l or an inclusive range such as 0..6
        #[arg(long, default_value = "0..6")]
        ell: String,
        /// CSV report path
        #[arg(long)]
        out: Option<PathBuf>,
        /// write the published-vs-constructed erratum report (JSON) here
        #[arg(long)]
        errata: Option<PathBuf>,
    },
    /// Classify SUSY as broken or unbroken from the ground-state asymptotics
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        ell: f64,
        #[arg(long = "D", default_value_t = 3)]
        d: u32,
    },
    /// List the available families and their parameters
    Families,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyId {
    Harmonic,
    Updown,
    Cpt,
    Coulomb,
    General,
    All,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "harmonic")]
    family: FamilyId,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    k0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    kappa: f64,
    /// shift ratio G(l) of the general family
    #[arg(long = "G", default_value_t = 3.0, allow_negative_numbers = true)]
    g: f64,
    /// remainder R_l of the general family
    #[arg(long = "R", default_value_t = 1.0, allow_negative_numbers = true)]
    r: f64,
    /// integration constant (harmonic, cpt, general)
    #[arg(long = "C", default_value_t = 0.0, allow_negative_numbers = true)]
    c: f64,
}

impl FamilyArgs {
    fn build(&self, id: FamilyId) -> Result<Family, Failure> {
        let fam = match id {
            FamilyId::Harmonic => Family::HarmonicG1 {
                omega: self.omega,
                c: self.c,
            },
            FamilyId::Updown => Family::upside_down(self.omega),
            FamilyId::Cpt => Family::CentralPoschlTeller {
                k0: shapeinv_core::EllMap::Constant(self.k0),
                c: self.c,
            },
            FamilyId::Coulomb => Family::coulomb(self.kappa),
            FamilyId::General => Family::general(self.g, self.r, self.c),
            FamilyId::All => return Err(Failure::Usage("--family all is only accepted by verify".into())),
        };
        fam.validate()?;
        Ok(fam)
    }

    fn single(&self) -> Result<Family, Failure> {
        self.build(self.family)
    }

    fn selected(&self) -> Result<Vec<Family>, Failure> {
        if self.family != FamilyId::All {
            return Ok(vec![self.single()?]);
        }
        [
            FamilyId::Harmonic,
            FamilyId::Updown,
            FamilyId::Cpt,
            FamilyId::Coulomb,
            FamilyId::General,
        ]
        .into_iter()
        .map(|id| self.build(id))
        .collect()
    }
}

#[derive(Args, Clone)]
struct GridArgs {
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    rmin: f64,
    #[arg(long, default_value_t = 20.0, allow_negative_numbers = true)]
    rmax: f64,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    spacing: SpacingArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpacingArg {
    Uniform,
    Logarithmic,
}

impl GridArgs {
    fn build(&self) -> Result<RadialGrid, Failure> {
        let spacing = match self.spacing {
            SpacingArg::Uniform => Spacing::Uniform,
            SpacingArg::Logarithmic => Spacing::Logarithmic,
        };
        Ok(RadialGrid::new(self.rmin, self.rmax, self.n, spacing)?)
    }
}

const FAMILY_TABLE: &str = "\
id        G(l)             remainder R_l                           parameters
harmonic  1                2 hbar omega                            --omega, --C
updown    -1               -(-1)^l (2l+3) hbar omega               --omega
cpt       (l+1)/(l+2)      (hbar^2/2m) k0^2 (2l+3)                 --k0, --C
coulomb   (l+1)/(l+2)      (m kappa^2/2hbar^2)(2l+3)/((l+1)(l+2))^2  --kappa
general   G > 1            R > 0 (Bessel solution)                 --G, --R, --C";

fn run(cli: Cli) -> Result<(), Failure> {
    let settings = match &cli.config {
        Some(path) => Settings::from_file(path)?,
        None => Settings::default(),
    };
    match cli.command {
        Command::Eval {
            family,
            ell,
            d,
            grid,
            out,
        } => eval::run(&family.single()?, ell, d, &grid.build()?, out.as_deref(), &settings),
        Command::Figure { id, grid, out } => figure::run(id, &grid.build()?, &out, &settings),
        Command::Verify {
            family,
            ell,
            out,
            errata,
        } => {
            let ells = verify::parse_ell_range(&ell)?;
            verify::run(&family.selected()?, &ells, out.as_deref(), errata.as_deref(), &settings)
        }
        Command::Classify { family, ell, d } => classify::run(&family.single()?, ell, d, &settings),
        Command::Families => {
            println!("{FAMILY_TABLE}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("shapeinv: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
