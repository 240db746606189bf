//! `fundpoly`: verification suites, inverse maps, seam studies and mesh
//! export from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, a point is not on the
//! surface or a file cannot be written, 2 on usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fundpoly::mesh::{build_mesh, write_obj, write_point_cloud_4d, MeshSurface};
use fundpoly::sampling::GridSpec;
use fundpoly::verify::{
    ratios_in_band, rows_to_csv, run_suite, seam_rows, SeamSurface, SurfaceKind, VerifyConfig,
};
use fundpoly::{mobius, projective, torus, Error, Point3, Point4, Tolerances, TorusGeometry};

#[derive(Parser)]
#[command(name = "fundpoly", version, about = "Fundamental-polygon surfaces and their embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite of a surface and print its report.
    Verify(VerifyArgs),
    /// Map a point of an embedded surface back to its canonical class.
    Invert(InvertArgs),
    /// Print seam gaps at parameters 10^-k as CSV.
    Seam(SeamArgs),
    /// Write a welded OBJ mesh or a 4D point cloud.
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Surface {
    Mobius,
    Torus,
    Projective,
    Hemisphere,
    Rp2,
}

impl Surface {
    fn kind(self) -> SurfaceKind {
        match self {
            Surface::Mobius => SurfaceKind::Mobius,
            Surface::Torus => SurfaceKind::Torus,
            Surface::Projective => SurfaceKind::Projective,
            Surface::Hemisphere => SurfaceKind::Hemisphere,
            Surface::Rp2 => SurfaceKind::Rp2,
        }
    }
}

#[derive(Args)]
struct Geometry {
    /// Torus major radius.
    #[arg(long = "R", default_value_t = 3.0)]
    major: f64,
    /// Torus minor radius.
    #[arg(long = "r", default_value_t = 1.0)]
    minor: f64,
}

impl Geometry {
    fn torus(&self) -> Result<TorusGeometry, Failure> {
        TorusGeometry::new(self.major, self.minor).map_err(Failure::from)
    }
}

#[derive(Args)]
struct Tols {
    #[arg(long = "tol-eq", default_value_t = fundpoly::tolerance::TOL_EQ)]
    eq: f64,
    #[arg(long = "tol-rt", default_value_t = fundpoly::tolerance::TOL_RT)]
    rt: f64,
    #[arg(long = "tol-res", default_value_t = fundpoly::tolerance::TOL_RES)]
    res: f64,
}

impl Tols {
    fn resolve(&self) -> Result<Tolerances, Failure> {
        for (name, v) in [("tol-eq", self.eq), ("tol-rt", self.rt), ("tol-res", self.res)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Failure::Usage(format!("--{name} must be a finite nonnegative number")));
            }
        }
        Ok(Tolerances {
            eq: self.eq,
            rt: self.rt,
            res: self.res,
            ..Tolerances::default()
        })
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// Grid points per axis of the square suites.
    #[arg(long, default_value_t = 41)]
    grid: usize,
    /// Fibonacci sphere points of the sphere suites.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Seed of the extra random sphere points.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[command(flatten)]
    geometry: Geometry,
    #[command(flatten)]
    tols: Tols,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct InvertArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// Comma-separated coordinates: 3 for mobius and torus, 4 for projective.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[command(flatten)]
    geometry: Geometry,
    #[command(flatten)]
    tols: Tols,
}

#[derive(Args)]
struct SeamArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// Comma-separated increasing exponents k ≥ 2.
    #[arg(long, default_value = "2,3,4")]
    decades: String,
    #[command(flatten)]
    geometry: Geometry,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, value_enum)]
    surface: Surface,
    /// Cells per axis of the mesh.
    #[arg(long, default_value_t = 32)]
    grid: usize,
    /// Points of the 4D point cloud.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Defaults to obj for mobius and torus, csv4d for projective.
    #[arg(long, value_enum)]
    format: Option<ExportFormat>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    geometry: Geometry,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Obj,
    Csv4d,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGeometry { .. } | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Invert(a) => invert(a),
        Command::Seam(a) => seam(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("fundpoly: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fundpoly: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verify(a: VerifyArgs) -> Result<bool, Failure> {
    let config = VerifyConfig {
        grid: GridSpec::new(a.grid, true)?,
        samples: a.samples,
        seed: a.seed,
        geom: a.geometry.torus()?,
        tol: a.tols.resolve()?,
        ..VerifyConfig::default()
    };
    if a.samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let report = run_suite(a.surface.kind(), &config);
    let text = match a.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Csv => report.to_csv(),
    };
    print!("{text}");
    Ok(report.passed())
}

fn parse_point<const N: usize>(text: &str) -> Result<[f64; N], Failure> {
    let values = text
        .split(',')
        .map(|c| c.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("cannot parse point {text:?}: {e}")))?;
    values.try_into().map_err(|v: Vec<f64>| {
        Failure::Usage(format!("expected {N} coordinates, got {}", v.len()))
    })
}

fn invert(a: InvertArgs) -> Result<bool, Failure> {
    let tol = a.tols.resolve()?;
    let line = match a.surface {
        Surface::Mobius => {
            let [x, y, z] = parse_point(&a.point)?;
            mobius::inverse_class(&Point3::new(x, y, z), &tol)?.to_string()
        }
        Surface::Torus => {
            let geom = a.geometry.torus()?;
            let [x, y, z] = parse_point(&a.point)?;
            torus::inverse_class(&Point3::new(x, y, z), &geom, &tol)?.to_string()
        }
        Surface::Projective => {
            let [u, v, w, t] = parse_point(&a.point)?;
            projective::inverse_with(&Point4::new(u, v, w, t), &tol)?.to_string()
        }
        Surface::Hemisphere | Surface::Rp2 => {
            return Err(Failure::Usage(
                "invert supports mobius, torus and projective".into(),
            ))
        }
    };
    println!("{line}");
    Ok(true)
}

fn seam(a: SeamArgs) -> Result<bool, Failure> {
    let surface = match a.surface {
        Surface::Mobius => SeamSurface::Mobius { t: 0.5 },
        Surface::Torus => SeamSurface::Torus {
            geom: a.geometry.torus()?,
            v: 0.0,
        },
        _ => return Err(Failure::Usage("seam supports mobius and torus".into())),
    };
    let decades = a
        .decades
        .split(',')
        .map(|k| k.trim().parse::<i32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("cannot parse decades {:?}: {e}", a.decades)))?;
    let rows = seam_rows(surface, &decades)?;
    print!("{}", rows_to_csv(&rows));
    Ok(ratios_in_band(&rows))
}

fn export(a: ExportArgs) -> Result<bool, Failure> {
    let format = a.format.unwrap_or(match a.surface {
        Surface::Projective => ExportFormat::Csv4d,
        _ => ExportFormat::Obj,
    });
    let mesh = match (a.surface, format) {
        (Surface::Mobius, ExportFormat::Obj) => Some(build_mesh(MeshSurface::Mobius, a.grid)?),
        (Surface::Torus, ExportFormat::Obj) => {
            Some(build_mesh(MeshSurface::Torus(a.geometry.torus()?), a.grid)?)
        }
        (Surface::Projective, ExportFormat::Csv4d) => None,
        _ => {
            return Err(Failure::Usage(
                "obj export supports mobius and torus; csv4d supports projective".into(),
            ))
        }
    };
    let out: Box<dyn Write> = match &a.out {
        Some(path) => Box::new(File::create(path).map_err(|e| {
            Failure::Domain(format!("cannot create {}: {e}", path.display()))
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let out = BufWriter::new(out);
    match mesh {
        Some(mesh) => write_obj(&mesh, out)?,
        None => write_point_cloud_4d(a.samples, out)?,
    }
    Ok(true)
}
