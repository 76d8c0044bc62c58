//! Command-line surface: `generate`, `analyze`, `compare`, `verdict`.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation/domain error,
//! 3 I/O error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::constructors::{build, SolidName};
use crate::error::Error;
use crate::io::{decode, encode_with_metadata, to_obj, write_atomic};
use crate::polymodel::{face_census, validate, Polyhedron, ValidationReport};
use crate::symmetry::{
    are_isomorphic, canonical_code, classify, congruent_up_to_scale, symmetry_group, SolidKind,
    SymmetrySummary,
};
use crate::variants::{skeleton, star, FrameParams, StarParams, TriangleMesh};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "polyexact", version, about = "Exact polyhedron toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a solid or one of its variants and write JSON or OBJ.
    Generate(GenerateArgs),
    /// Report counts, census, symmetry and classification of a JSON solid.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Test two JSON solids for isomorphism and similarity.
    Compare {
        file1: PathBuf,
        file2: PathBuf,
        /// Print the vertex correspondence.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build both final polyhedra and print the RCO / pseudo-RCO contrast table.
    Verdict {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Solid,
    Star,
    Skeleton,
    StarSkeleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Obj,
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    /// tetrahedron, cube, octahedron, dodecahedron, icosahedron, rco, pseudo-rco
    #[arg(long, value_parser = parse_solid)]
    pub solid: SolidName,
    #[arg(long, value_enum, default_value = "solid")]
    pub variant: Variant,
    /// Pyramid height `n=t` for n-gon faces (repeatable). Without any,
    /// near-equilateral defaults are used.
    #[arg(long = "height", value_parser = parse_height)]
    pub heights: Vec<(usize, BigRational)>,
    /// Inner frame ring inset, in (0, 1/2).
    #[arg(long, value_parser = parse_rational_arg, default_value = "1/4")]
    pub inset: BigRational,
    /// Strut depth along the inward face normal.
    #[arg(long, default_value_t = 0.1)]
    pub thickness: f64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to json for exact solids, obj for skeletons.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Significant digits for OBJ coordinates (6..=17).
    #[arg(long, default_value_t = 15)]
    pub precision: usize,
}

fn parse_solid(s: &str) -> Result<SolidName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_height(s: &str) -> Result<(usize, BigRational), String> {
    StarParams::parse_entry(s).map_err(|e| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<BigRational, String> {
    crate::variants::parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Io(..) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Domain(e) => write!(f, "error: {e}"),
            Failure::Io(p, e) => write!(f, "i/o error: {}: {e}", p.display()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to `out` / `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Generate(args) => generate(&args, out),
        Command::Analyze { file, json } => analyze(&file, json, out),
        Command::Compare {
            file1,
            file2,
            witness,
            json,
        } => compare(&file1, &file2, witness, json, out),
        Command::Verdict { json } => verdict(json, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            f.code()
        }
    }
}

fn emit(out: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    out.write_all(bytes)
        .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

fn read_solid(path: &Path) -> Result<Polyhedron, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    decode(&bytes).map_err(|e| match e {
        Error::Decode { location, message } => Failure::Domain(Error::Decode {
            location: format!("{}: {location}", path.display()),
            message,
        }),
        other => Failure::Domain(other),
    })
}

fn generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mesh_variant = matches!(args.variant, Variant::Skeleton | Variant::StarSkeleton);
    let format = args
        .format
        .unwrap_or(if mesh_variant { Format::Obj } else { Format::Json });
    if mesh_variant && format == Format::Json {
        return Err(Failure::Usage(
            "skeleton variants are float meshes; use --format obj".into(),
        ));
    }
    if !matches!(args.variant, Variant::Star | Variant::StarSkeleton) && !args.heights.is_empty() {
        return Err(Failure::Usage("--height only applies to star variants".into()));
    }

    let base = build(args.solid)?;
    let star_params = |p: &Polyhedron| {
        if args.heights.is_empty() {
            StarParams::equilateral(p)
        } else {
            StarParams::new(args.heights.iter().cloned().collect())
        }
    };
    let frame = || FrameParams::new(args.inset.clone(), args.thickness);

    let mut params = Map::new();
    params.insert("variant".into(), json!(format!("{:?}", args.variant).to_lowercase()));
    let bytes = match args.variant {
        Variant::Solid | Variant::Star => {
            let p = if args.variant == Variant::Star {
                let sp = star_params(&base);
                params.insert("heights".into(), heights_json(&sp));
                star(&base, &sp)?
            } else {
                base
            };
            match format {
                Format::Json => {
                    let mut meta = Map::new();
                    meta.insert("name".into(), json!(label(args)));
                    meta.insert("provenance".into(), json!("polyexact generate"));
                    meta.insert("parameters".into(), Value::Object(params));
                    encode_with_metadata(&p, meta)?
                }
                Format::Obj => obj_with_header(&p, &label(args), args.precision)?,
            }
        }
        Variant::Skeleton | Variant::StarSkeleton => {
            let p = if args.variant == Variant::StarSkeleton {
                star(&base, &star_params(&base))?
            } else {
                base
            };
            let mut mesh = skeleton(&p, &frame()?)?;
            mesh.label = label(args);
            obj_with_header(&mesh, &mesh.label.clone(), args.precision)?
        }
    };
    match &args.out {
        Some(path) => write_atomic(path, &bytes).map_err(|e| Failure::Io(path.clone(), e))?,
        None => emit(out, &bytes)?,
    }
    Ok(EXIT_OK)
}

fn label(args: &GenerateArgs) -> String {
    let s = args.solid.as_str();
    match args.variant {
        Variant::Solid => s.to_string(),
        Variant::Star => format!("star({s})"),
        Variant::Skeleton => format!("skeleton({s})"),
        Variant::StarSkeleton => format!("skeleton(star({s}))"),
    }
}

fn heights_json(sp: &StarParams) -> Value {
    let m: Map<String, Value> = sp
        .heights
        .iter()
        .map(|(n, t)| (n.to_string(), json!(t.to_string())))
        .collect();
    Value::Object(m)
}

fn obj_with_header<T: crate::io::ToObj + ?Sized>(
    item: &T,
    name: &str,
    precision: usize,
) -> Result<Vec<u8>, Failure> {
    let body = to_obj(item, precision)?;
    let mut bytes = format!("# {name}\n").into_bytes();
    bytes.extend(body);
    Ok(bytes)
}

/// Everything `analyze` reports about one solid.
#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub validation: ValidationReport,
    pub census: BTreeMap<usize, usize>,
    pub regular: BTreeMap<usize, bool>,
    pub all_faces_regular: bool,
    pub symmetry: SymmetrySummary,
    pub classification: SolidKind,
}

pub fn analysis(p: &Polyhedron) -> crate::Result<Analysis> {
    let validation = validate(p);
    let census = face_census(p)?;
    let symmetry = symmetry_group(p)?.summary();
    let tag = classify(p)?;
    Ok(Analysis {
        validation,
        all_faces_regular: census.all_regular(),
        census: census.counts,
        regular: census.regular,
        symmetry,
        classification: tag.kind,
    })
}

fn census_string(c: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = c.iter().map(|(n, k)| format!("{n}:{k}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn analyze(path: &Path, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = read_solid(path)?;
    let a = analysis(&p)?;
    let text = if as_json {
        serde_json::to_string_pretty(&a).expect("serializable") + "\n"
    } else {
        let v = &a.validation;
        let s = &a.symmetry;
        let mut t = String::new();
        let _ = writeln!(t, "V={} E={} F={} euler={}", v.v_count, v.e_count, v.f_count, v.euler);
        let _ = writeln!(t, "manifold: {}", v.manifold);
        let _ = writeln!(t, "census: {}", census_string(&a.census));
        let _ = writeln!(t, "all faces regular: {}", a.all_faces_regular);
        let _ = writeln!(t, "symmetry order: {}", s.order);
        let _ = writeln!(t, "rotation order: {}", s.rotation_order);
        let _ = writeln!(t, "vertex orbits: {:?}", s.vertex_orbit_sizes);
        let _ = writeln!(t, "vertex-transitive: {}", s.vertex_transitive);
        let _ = writeln!(t, "classification: {}", a.classification);
        t
    };
    emit(out, text.as_bytes())?;
    Ok(EXIT_OK)
}

fn compare(
    p1: &Path,
    p2: &Path,
    witness: bool,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let a = read_solid(p1)?;
    let b = read_solid(p2)?;
    let iso = are_isomorphic(&a, &b)?;
    let sim = congruent_up_to_scale(&a, &b)?;
    let text = if as_json {
        let mut v = json!({
            "isomorphic": iso.is_some(),
            "congruent_up_to_scale": sim.is_some(),
            "scale_squared": sim.as_ref().map(|m| m.scale2.to_string()),
        });
        if witness {
            v["witness"] = json!(iso.as_ref().map(|w| &w.vertex_map));
        }
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    } else {
        let mut t = String::new();
        let _ = writeln!(t, "isomorphic: {}", iso.is_some());
        match &sim {
            Some(m) => {
                let _ = writeln!(t, "congruent up to isometry and scale: true (scale² = {})", m.scale2);
            }
            None => {
                let _ = writeln!(t, "congruent up to isometry and scale: false");
            }
        }
        if witness {
            match &iso {
                Some(w) => {
                    let _ = writeln!(t, "witness (vertex of first -> vertex of second):");
                    for (i, j) in w.vertex_map.iter().enumerate() {
                        let _ = writeln!(t, "  {i} -> {j}");
                    }
                }
                None => {
                    let _ = writeln!(t, "witness: none");
                }
            }
        }
        t
    };
    emit(out, text.as_bytes())?;
    Ok(EXIT_OK)
}

/// One line of the contrast table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictRow {
    pub quantity: String,
    pub rco: String,
    pub pseudo_rco: String,
}

/// The RCO / pseudo-RCO contrast, built from scratch.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictTable {
    pub rows: Vec<VerdictRow>,
    pub isomorphic: bool,
    pub canonical_codes_differ: bool,
    /// Whether every row matches the expected values.
    pub consistent: bool,
}

struct Side {
    base: Analysis,
    star_counts: (usize, usize, usize, i64),
    star_order: usize,
    final_components: usize,
    final_ok: bool,
}

fn side(p: &Polyhedron) -> crate::Result<Side> {
    let base = analysis(p)?;
    let s = star(p, &StarParams::equilateral(p))?;
    let sv = validate(&s);
    let star_order = symmetry_group(&s)?.order;
    let mesh: TriangleMesh = skeleton(&s, &FrameParams::default())?;
    let final_ok = mesh
        .components
        .iter()
        .all(|c| c.euler_characteristic() == 0 && c.is_closed_oriented());
    Ok(Side {
        base,
        star_counts: (sv.v_count, sv.e_count, sv.f_count, sv.euler),
        star_order,
        final_components: mesh.components.len(),
        final_ok,
    })
}

pub fn verdict_table() -> crate::Result<VerdictTable> {
    let rco = build(SolidName::Rco)?;
    let pseudo = build(SolidName::PseudoRco)?;
    let r = side(&rco)?;
    let q = side(&pseudo)?;
    let isomorphic = are_isomorphic(&rco, &pseudo)?.is_some();
    let canonical_codes_differ = canonical_code(&rco)? != canonical_code(&pseudo)?;

    let mut rows = Vec::new();
    let mut row = |quantity: &str, f: &dyn Fn(&Side) -> String| {
        rows.push(VerdictRow {
            quantity: quantity.into(),
            rco: f(&r),
            pseudo_rco: f(&q),
        })
    };
    row("face census", &|s| census_string(&s.base.census));
    row("all faces regular", &|s| s.base.all_faces_regular.to_string());
    row("V / E / F", &|s| {
        let v = &s.base.validation;
        format!("{} / {} / {}", v.v_count, v.e_count, v.f_count)
    });
    row("euler / manifold", &|s| {
        format!("{} / {}", s.base.validation.euler, s.base.validation.manifold)
    });
    row("star V / E / F / euler", &|s| {
        let (v, e, f, x) = s.star_counts;
        format!("{v} / {e} / {f} / {x}")
    });
    row("final polyhedron components", &|s| s.final_components.to_string());
    row("components closed, chi = 0", &|s| s.final_ok.to_string());
    row("symmetry order", &|s| s.base.symmetry.order.to_string());
    row("rotation order", &|s| s.base.symmetry.rotation_order.to_string());
    row("vertex orbit sizes", &|s| format!("{:?}", s.base.symmetry.vertex_orbit_sizes));
    row("vertex-transitive", &|s| s.base.symmetry.vertex_transitive.to_string());
    row("star symmetry order", &|s| s.star_order.to_string());
    row("classification", &|s| s.base.classification.to_string());

    let expected = [
        ("{3:8, 4:18}", "{3:8, 4:18}"),
        ("true", "true"),
        ("24 / 48 / 26", "24 / 48 / 26"),
        ("2 / true", "2 / true"),
        ("50 / 144 / 96 / 2", "50 / 144 / 96 / 2"),
        ("96", "96"),
        ("true", "true"),
        ("48", "16"),
        ("24", "8"),
        ("[24]", "[8, 16]"),
        ("true", "false"),
        ("48", "16"),
        ("RCO", "PseudoRCO"),
    ];
    let consistent = !isomorphic
        && canonical_codes_differ
        && rows
            .iter()
            .zip(expected)
            .all(|(r, (a, b))| r.rco == a && r.pseudo_rco == b);
    Ok(VerdictTable {
        rows,
        isomorphic,
        canonical_codes_differ,
        consistent,
    })
}

fn verdict(as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let start = Instant::now();
    let table = verdict_table()?;
    let elapsed = start.elapsed().as_secs_f64();
    let text = if as_json {
        serde_json::to_string_pretty(&table).expect("serializable") + "\n"
    } else {
        let w0 = table.rows.iter().map(|r| r.quantity.len()).max().unwrap_or(0).max(8);
        let w1 = table.rows.iter().map(|r| r.rco.len()).max().unwrap_or(0).max(3);
        let mut t = String::new();
        let _ = writeln!(t, "{:<w0$}  {:<w1$}  Pseudo-RCO", "quantity", "RCO");
        let _ = writeln!(t, "{}", "-".repeat(w0 + w1 + 14));
        for r in &table.rows {
            let _ = writeln!(t, "{:<w0$}  {:<w1$}  {}", r.quantity, r.rco, r.pseudo_rco);
        }
        let _ = writeln!(t);
        let _ = writeln!(t, "isomorphic: {}", table.isomorphic);
        let _ = writeln!(t, "canonical codes differ: {}", table.canonical_codes_differ);
        let _ = writeln!(
            t,
            "verdict: {}",
            if table.consistent {
                "same faces and counts, different symmetry: the solids are distinct"
            } else {
                "UNEXPECTED VALUES"
            }
        );
        let _ = writeln!(t, "elapsed: {elapsed:.2}s");
        t
    };
    emit(out, text.as_bytes())?;
    Ok(if table.consistent { EXIT_OK } else { EXIT_DOMAIN })
}
