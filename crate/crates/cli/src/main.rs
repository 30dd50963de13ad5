//! coxkit: audits for Coxeter systems with codimension-1 Euclidean flats.
//!
//! Every subcommand prints one deterministic JSON report to stdout.  Exit
//! codes: 0 when all checks pass, 1 when at least one audit fails (the
//! report carries the witnesses), 2 on input or format errors.

mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use coxkit_core::classify::{classify, is_quasi_lanner};
use coxkit_core::diagram::{parse_diagram, CoxeterMatrix};
use coxkit_core::homology::is_ghs;
use coxkit_core::nerve::{
    build_nerve, enumerate_affine_flats, flat_boundary_position, maximal_flats, DEFAULT_CAP,
};
use coxkit_core::polytope::{nikulin_bound, rightangled_dimension_bound, PolytopeModel};
use coxkit_core::presets;
use coxkit_core::report::AuditReport;
use coxkit_core::surgery::{cut_along_flat, find_flat, glue_along_flat};
use coxkit_core::weights;

use report::{digest, RunReport};

#[derive(Parser)]
#[command(
    name = "coxkit",
    version,
    about = "Coxeter system audits: classification, nerves, flats, homology spheres, surgery, and dimension bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the diagram of a .cox file as elliptic, parabolic, or
    /// indefinite, with its irreducible families.
    Classify {
        file: PathBuf,
        /// Also test the quasi-Lanner property (connected diagrams only).
        #[arg(long)]
        quasi_lanner: bool,
    },
    /// Build the nerve and export it as a JSON document.
    Nerve {
        file: PathBuf,
        /// Write the nerve document here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Ceiling on enumerated subsets (also settable via COXKIT_CAP).
        #[arg(long)]
        cap: Option<usize>,
        /// Generators to mark as flat cone points (comma separated).
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
    /// Enumerate the affine flats of the group.
    Flats {
        file: PathBuf,
        /// Ambient dimension; annotates which flats have codimension 1.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Standing-hypothesis pipeline: homology sphere, codimension-1 flats,
    /// flat isolation, and flat boundary positions.
    CheckHm {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Cut the nerve along an interior flat, emitting two .cox pieces.
    Cut {
        file: PathBuf,
        /// Generators of the flat, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        flat: Vec<String>,
        /// Prefix for the emitted piece files (defaults to the input path).
        #[arg(long)]
        out_prefix: Option<String>,
        /// Cone-point marks of the input nerve; the pieces inherit the ones
        /// they keep, plus their fresh cone vertex.
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
    /// Glue two nerves along boundary flats matched by `--match a=x,...`.
    Glue {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long = "match", value_delimiter = ',', required = true)]
        pairing: Vec<String>,
        /// Write the glued matrix as a .cox file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cone-point marks of the first input nerve.
        #[arg(long, value_delimiter = ',')]
        cones1: Vec<String>,
        /// Cone-point marks of the second input nerve.
        #[arg(long, value_delimiter = ',')]
        cones2: Vec<String>,
    },
    /// Inequality audits on the polytope model.
    Audit {
        #[command(subcommand)]
        which: AuditCommand,
    },
    /// Print a dimension bound.
    Bound {
        /// The right-angled bound (14).
        #[arg(long)]
        right_angled: bool,
        /// The general bound 96 C + 68.
        #[arg(long)]
        general: bool,
        /// Edge-weight constant for the general bound, e.g. 29/3.
        #[arg(long = "C")]
        c: Option<String>,
    },
    /// Emit a built-in example matrix.
    Example {
        #[command(subcommand)]
        which: ExampleCommand,
    },
}

#[derive(Subcommand)]
enum AuditCommand {
    /// Face-count inequalities plus the facet-intersection checks.
    Rightangled {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Generators to treat as flat cone points (comma separated);
        /// cone points never carry faces of the model.
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
    /// Average-face-count bound at the given parameters.
    Nikulin {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
    /// Dihedral-angle weight report: per-3-face sums, per-edge sums, bad
    /// faces, and the good-face lower bounds.
    Weights {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
    /// Facet-intersection statements for right-angled models.
    Prop4 {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',')]
        cones: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// Right-angled group with k commuting infinite dihedral pairs.
    Cube {
        #[arg(long, default_value_t = 3)]
        pairs: usize,
    },
    /// The 16-generator example with flats of dimensions 2 and 6.
    Pv {
        /// Number of pairs in the underlying cube (at least 8).
        #[arg(long, default_value_t = 8)]
        pairs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line: Vec<String> = std::env::args().skip(1).collect();
    match run(cli, command_line.join(" ")) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("coxkit: {message}");
            ExitCode::from(2)
        }
    }
}

fn enumeration_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("COXKIT_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    })
    .unwrap_or(DEFAULT_CAP)
}

struct Input {
    matrix: CoxeterMatrix,
    digest: String,
}

fn read_matrix(path: &Path) -> Result<Input, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text =
        String::from_utf8(bytes).map_err(|_| format!("{}: not valid UTF-8", path.display()))?;
    let matrix = parse_diagram(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Input {
        matrix,
        digest: digest(text.as_bytes()),
    })
}

fn parse_rational(text: &str) -> Result<num_rational::BigRational, String> {
    let parse_int = |s: &str| {
        s.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| format!("`{s}` is not an integer"))
    };
    match text.split_once('/') {
        Some((p, q)) => Ok(num_rational::BigRational::new(parse_int(p)?, parse_int(q)?)),
        None => Ok(num_rational::BigRational::from(parse_int(text)?)),
    }
}

fn rational_json(r: &num_rational::BigRational) -> Value {
    if r.is_integer() {
        match r.numer().to_string().parse::<i64>() {
            Ok(v) => json!(v),
            Err(_) => json!(r.to_string()),
        }
    } else {
        json!(r.to_string())
    }
}

fn audit_value(report: &AuditReport) -> Value {
    serde_json::to_value(report).expect("audit reports serialize")
}

fn run(cli: Cli, command_line: String) -> Result<bool, String> {
    match cli.command {
        Command::Classify { file, quasi_lanner } => {
            let input = read_matrix(&file)?;
            let d = input.matrix.to_diagram();
            let t = classify(&d);
            let mut results = json!({
                "kind": t.kind.to_string(),
                "families": t.families.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "rank": input.matrix.rank(),
            });
            if quasi_lanner {
                let ql = is_quasi_lanner(&d).map_err(|e| e.to_string())?;
                results["quasi_lanner"] = json!(ql);
            }
            let mut report = RunReport::new(command_line, true, results);
            report.input_digests.push(input.digest);
            report.print();
            Ok(true)
        }

        Command::Nerve {
            file,
            out,
            cap,
            cones,
        } => {
            let input = read_matrix(&file)?;
            let cap = enumeration_cap(cap);
            let mut nerve = build_nerve(&input.matrix, cap).map_err(|e| e.to_string())?;
            mark_cones(&mut nerve, &cones)?;
            let doc = nerve.to_json().map_err(|e| e.to_string())?;
            let doc_value = serde_json::to_value(&doc).expect("nerve document serializes");
            let summary = json!({
                "vertices": doc.vertices.len(),
                "facets": doc.facets.len(),
                "dimension": nerve.complex.dim(),
                "flag": nerve.complex.is_flag(),
            });
            let results = if let Some(out_path) = out {
                std::fs::write(&out_path, serde_json::to_string_pretty(&doc_value).unwrap())
                    .map_err(|e| format!("{}: {e}", out_path.display()))?;
                json!({ "summary": summary, "written": out_path.display().to_string() })
            } else {
                json!({ "summary": summary, "nerve": doc_value })
            };
            let mut report = RunReport::new(command_line, true, results);
            report.input_digests.push(input.digest);
            report.print();
            Ok(true)
        }

        Command::Flats { file, dim } => {
            let input = read_matrix(&file)?;
            let flats = enumerate_affine_flats(&input.matrix, enumeration_cap(None))
                .map_err(|e| e.to_string())?;
            let list: Vec<Value> = flats
                .iter()
                .map(|f| {
                    let mut v = json!({
                        "generators": f.names(&input.matrix),
                        "flat_dim": f.flat_dim,
                        "maximal": f.maximal,
                    });
                    if let Some(n) = dim {
                        v["codimension_1"] = json!(f.flat_dim + 1 == n);
                    }
                    v
                })
                .collect();
            let maximal_dims: Vec<usize> = flats
                .iter()
                .filter(|f| f.maximal)
                .map(|f| f.flat_dim)
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let results = json!({
                "count": list.len(),
                "maximal_flat_dims": maximal_dims,
                "flats": list,
            });
            let mut report = RunReport::new(command_line, true, results);
            report.input_digests.push(input.digest);
            report.print();
            Ok(true)
        }

        Command::CheckHm { file, dim } => {
            let input = read_matrix(&file)?;
            let cap = enumeration_cap(None);
            let nerve = build_nerve(&input.matrix, cap).map_err(|e| e.to_string())?;
            if dim == 0 {
                return Err("--dim must be at least 1".to_string());
            }
            let ghs = is_ghs(&nerve.complex, dim - 1);
            let codim1 =
                coxkit_core::nerve::check_codim1_flats(&nerve, dim).map_err(|e| e.to_string())?;
            let isolation =
                coxkit_core::nerve::check_flat_isolation(&nerve).map_err(|e| e.to_string())?;
            let positions: Vec<Value> = maximal_flats(&input.matrix, cap)
                .map_err(|e| e.to_string())?
                .iter()
                .filter(|f| f.flat_dim + 1 == dim)
                .map(|f| {
                    json!({
                        "flat": f.names(&input.matrix),
                        "position": match flat_boundary_position(&nerve, f) {
                            coxkit_core::nerve::FlatPosition::Boundary { cone_vertex } =>
                                format!("boundary (cone vertex {cone_vertex})"),
                            coxkit_core::nerve::FlatPosition::Interior => "interior".to_string(),
                            coxkit_core::nerve::FlatPosition::NonSeparating { components } =>
                                format!("non-separating ({components} complement components)"),
                        },
                    })
                })
                .collect();
            let pass = ghs.pass && codim1.pass && isolation.pass;
            let results = json!({
                "ghs": audit_value(&ghs),
                "codimension_1": audit_value(&codim1),
                "isolation": audit_value(&isolation),
                "flat_positions": positions,
            });
            let mut report = RunReport::new(command_line, pass, results);
            report.input_digests.push(input.digest);
            report.print();
            Ok(pass)
        }

        Command::Cut {
            file,
            flat,
            out_prefix,
            cones,
        } => {
            let input = read_matrix(&file)?;
            let mut nerve =
                build_nerve(&input.matrix, enumeration_cap(None)).map_err(|e| e.to_string())?;
            mark_cones(&mut nerve, &cones)?;
            let indices: Result<Vec<usize>, String> = flat
                .iter()
                .map(|name| {
                    input
                        .matrix
                        .index_of(name)
                        .ok_or_else(|| format!("unknown vertex `{name}`"))
                })
                .collect();
            let flat = find_flat(&nerve, &indices?).map_err(|e| e.to_string())?;
            let cut = cut_along_flat(&nerve, &flat).map_err(|e| e.to_string())?;
            let prefix = out_prefix.unwrap_or_else(|| file.display().to_string());
            let mut pieces = Vec::new();
            for (k, piece) in cut.pieces.iter().enumerate() {
                let path = format!("{prefix}.piece{}.cox", k + 1);
                let text = piece.matrix.to_cox_string();
                std::fs::write(&path, &text).map_err(|e| format!("{path}: {e}"))?;
                pieces.push(json!({
                    "file": path,
                    "generators": piece.matrix.rank(),
                    "cone_vertex": cut.cone_vertex_names[k],
                    "cone_vertices": piece.cone_vertices.iter().cloned().collect::<Vec<_>>(),
                    "digest": digest(text.as_bytes()),
                }));
            }
            let results = json!({
                "flat": cut.flat_generators,
                "pieces": pieces,
            });
            let mut report = RunReport::new(command_line, true, results);
            report.input_digests.push(input.digest);
            report.print();
            Ok(true)
        }

        Command::Glue {
            file1,
            file2,
            pairing,
            out,
            cones1,
            cones2,
        } => {
            let input1 = read_matrix(&file1)?;
            let input2 = read_matrix(&file2)?;
            let cap = enumeration_cap(None);
            let mut n1 = build_nerve(&input1.matrix, cap).map_err(|e| e.to_string())?;
            mark_cones(&mut n1, &cones1)?;
            let mut n2 = build_nerve(&input2.matrix, cap).map_err(|e| e.to_string())?;
            mark_cones(&mut n2, &cones2)?;
            let mut pairs = Vec::new();
            for item in &pairing {
                let (a, b) = item
                    .split_once('=')
                    .ok_or_else(|| format!("`{item}` is not of the form a=b"))?;
                pairs.push((a.to_string(), b.to_string()));
            }
            let idx1: Result<Vec<usize>, String> = pairs
                .iter()
                .map(|(a, _)| {
                    input1
                        .matrix
                        .index_of(a)
                        .ok_or_else(|| format!("unknown vertex `{a}`"))
                })
                .collect();
            let idx2: Result<Vec<usize>, String> = pairs
                .iter()
                .map(|(_, b)| {
                    input2
                        .matrix
                        .index_of(b)
                        .ok_or_else(|| format!("unknown vertex `{b}`"))
                })
                .collect();
            let f1 = find_flat(&n1, &idx1?).map_err(|e| e.to_string())?;
            let f2 = find_flat(&n2, &idx2?).map_err(|e| e.to_string())?;
            let glued = glue_along_flat(&n1, &f1, &n2, &f2, &pairs).map_err(|e| e.to_string())?;
            let text = glued.matrix.to_cox_string();
            if let Some(out_path) = &out {
                std::fs::write(out_path, &text)
                    .map_err(|e| format!("{}: {e}", out_path.display()))?;
            }
            let results = json!({
                "generators": glued.matrix.rank(),
                "cone_vertices": glued.cone_vertices.iter().cloned().collect::<Vec<_>>(),
                "cox": text,
                "digest": digest(text.as_bytes()),
                "written": out.map(|p| p.display().to_string()),
            });
            let mut report = RunReport::new(command_line, true, results);
            report.input_digests.push(input1.digest);
            report.input_digests.push(input2.digest);
            report.print();
            Ok(true)
        }

        Command::Audit { which } => run_audit(which, command_line),

        Command::Bound {
            right_angled,
            general,
            c,
        } => {
            if right_angled == general {
                return Err("choose exactly one of --right-angled or --general".to_string());
            }
            let results = if right_angled {
                let value = rightangled_dimension_bound();
                json!({
                    "bound": "right-angled",
                    "value": value,
                    "average_bound_at_value": rational_json(&nikulin_bound(value, 4, 5).expect("valid")),
                    "average_bound_above_value": rational_json(&nikulin_bound(value + 1, 4, 5).expect("valid")),
                })
            } else {
                let c = match &c {
                    Some(text) => parse_rational(text)?,
                    None => parse_rational("29/3").expect("constant parses"),
                };
                let value = weights::general_bound(&c);
                json!({
                    "bound": "general",
                    "C": c.to_string(),
                    "value": rational_json(&value),
                })
            };
            let mut report = RunReport::new(command_line, true, results);
            if general {
                report.notes.push(
                    "general bound formula: 96 * C + 68; with C = 29/3 the value is exactly 996"
                        .to_string(),
                );
            }
            report.print();
            Ok(true)
        }

        Command::Example { which } => {
            let (matrix, label, mut notes) = match which {
                ExampleCommand::Cube { pairs } => {
                    if pairs == 0 {
                        return Err("--pairs must be at least 1".to_string());
                    }
                    (
                        presets::rac_cube(pairs),
                        format!("cube --pairs {pairs}"),
                        Vec::new(),
                    )
                }
                ExampleCommand::Pv { pairs } => {
                    if pairs < 8 {
                        return Err("--pairs must be at least 8".to_string());
                    }
                    (
                        presets::pv_example_with_pairs(pairs),
                        format!("pv --pairs {pairs}"),
                        vec!["designated sub-cube flats have dimensions 2 and 6".to_string()],
                    )
                }
            };
            let text = matrix.to_cox_string();
            let results = json!({
                "example": label,
                "generators": matrix.rank(),
                "cox": text,
                "digest": digest(text.as_bytes()),
            });
            let mut report = RunReport::new(command_line, true, results);
            report.notes.append(&mut notes);
            report.print();
            Ok(true)
        }
    }
}

fn mark_cones(nerve: &mut coxkit_core::nerve::Nerve, cones: &[String]) -> Result<(), String> {
    for name in cones {
        if nerve.matrix.index_of(name).is_none() {
            return Err(format!("unknown cone vertex `{name}`"));
        }
        nerve.cone_vertices.insert(name.clone());
    }
    Ok(())
}

fn build_model(
    file: &Path,
    dim: usize,
    cones: &[String],
) -> Result<(Input, PolytopeModel, Vec<String>), String> {
    let input = read_matrix(file)?;
    let mut nerve = build_nerve(&input.matrix, enumeration_cap(None)).map_err(|e| e.to_string())?;
    mark_cones(&mut nerve, cones)?;
    let mut notes = Vec::new();
    let model = match PolytopeModel::build(&nerve, dim) {
        Ok(model) => model,
        Err(coxkit_core::polytope::PolytopeError::WrongFlatDimension(flat, got, want)) => {
            notes.push(format!(
                "maximal flat {{{flat}}} has dimension {got}, not {want}: \
                 building the model anyway; the audits judge the result"
            ));
            PolytopeModel::build_unchecked(&nerve, dim).map_err(|e| e.to_string())?
        }
        Err(e) => return Err(e.to_string()),
    };
    Ok((input, model, notes))
}

fn run_audit(which: AuditCommand, command_line: String) -> Result<bool, String> {
    match which {
        AuditCommand::Rightangled { file, dim, cones } => {
            let (input, model, mut notes) = build_model(&file, dim, &cones)?;
            let section4 = model.audit_section4();
            let mut results = BTreeMap::new();
            results.insert("face_counts", audit_value(&section4));
            let mut pass = section4.pass;
            if model.nerve().matrix.to_diagram().is_right_angled() {
                let prop = model.check_proposition4().map_err(|e| e.to_string())?;
                pass &= prop.pass;
                results.insert("facet_intersections", audit_value(&prop));
            } else {
                notes.push(
                    "matrix is not right-angled: facet-intersection checks skipped".to_string(),
                );
            }
            let mut report = RunReport::new(command_line, pass, results);
            report.input_digests.push(input.digest);
            report.notes = notes;
            report.print();
            Ok(pass)
        }
        AuditCommand::Nikulin {
            file,
            dim,
            i,
            k,
            cones,
        } => {
            let (input, model, notes) = build_model(&file, dim, &cones)?;
            let audit = model.audit_nikulin(i, k).map_err(|e| e.to_string())?;
            let average = model.average_count(i, k).map_err(|e| e.to_string())?;
            let bound = nikulin_bound(dim, i, k).map_err(|e| e.to_string())?;
            let results = json!({
                "i": i,
                "k": k,
                "average": rational_json(&average),
                "bound": rational_json(&bound),
                "audit": audit_value(&audit),
            });
            let mut report = RunReport::new(command_line, audit.pass, results);
            report.input_digests.push(input.digest);
            report.notes = notes;
            report.print();
            Ok(audit.pass)
        }
        AuditCommand::Weights { file, dim, cones } => {
            let (input, model, mut notes) = build_model(&file, dim, &cones)?;
            let weight_report = weights::weight_report(&model).map_err(|e| e.to_string())?;
            let mut pass = weight_report.all_edges_ok;

            let good = weights::good_face_audit(&model).map_err(|e| e.to_string())?;
            pass &= good.pass;

            let bad_ratio = if dim >= 8 {
                let audit = weights::bad_ratio_audit(&model).map_err(|e| e.to_string())?;
                pass &= audit.pass;
                audit_value(&audit)
            } else {
                notes.push("dimension below 8: bad-face ratio bound not applicable".to_string());
                Value::Null
            };

            let results = json!({
                "three_faces": weight_report.faces,
                "edges": weight_report.edges,
                "good_faces": audit_value(&good),
                "bad_ratio": bad_ratio,
            });
            let mut report = RunReport::new(command_line, pass, results);
            report.input_digests.push(input.digest);
            report.notes = notes;
            report.print();
            Ok(pass)
        }
        AuditCommand::Prop4 { file, dim, cones } => {
            let (input, model, notes) = build_model(&file, dim, &cones)?;
            let prop = model.check_proposition4().map_err(|e| e.to_string())?;
            let mut report = RunReport::new(command_line, prop.pass, audit_value(&prop));
            report.input_digests.push(input.digest);
            report.notes = notes;
            report.print();
            Ok(prop.pass)
        }
    }
}
