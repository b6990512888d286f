//! Command-line interface for the nonassociative algebra toolkit.
//!
//! Exit codes: 0 = computed (and any asserted property holds), 1 = computed
//! but an asserted property fails (witness in the report), 2 = input or
//! usage error. `--json` emits the machine-readable report; identical
//! (input, seed, tol) produce byte-identical reports. The `NONASSOC_TOL`
//! environment variable overrides the default tolerance; the `--tol` flag
//! wins over both.

use clap::{Parser, Subcommand};
use nonassoc::algebra::{Algebra, Side};
use nonassoc::classify::{classify, verify_isomorphism, IsoCheck};
use nonassoc::construct;
use nonassoc::element::Element;
use nonassoc::identities::{self, Check, SamplerConfig};
use nonassoc::io::{algebra_to_file, canonical_json, parse_algebra_file, FileError};
use nonassoc::matrix::Matrix;
use nonassoc::quadratic::{self, Extraction};
use nonassoc::report::{Report, EXIT_USAGE};
use nonassoc::scalar::{Mode, Scalar};
use nonassoc::spectrum::{one_sided_spectrum, product_spectrum_probe, spectrum_real, SpectrumResult};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nonassoc", version, about = "Exact computation in finite-dimensional nonassociative algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Zero tolerance for real-mode computations (beats NONASSOC_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity taxonomy (commutative/associative/alternative/...).
    Check {
        file: PathBuf,
        /// Fail (exit 1) unless the named identity holds: commutative,
        /// associative, flexible, left-alternative, right-alternative,
        /// alternative, moufang, skornyakov-left, skornyakov-right.
        #[arg(long)]
        assert: Option<String>,
        /// Largest power-associativity degree to probe.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Samples per degree beyond the exactly decided range.
        #[arg(long, default_value_t = 8)]
        samples: u32,
    },
    /// Extract the bilinear form and its property flags.
    Qform { file: PathBuf },
    /// Classify onto R/C/H/O or their generalized rational forms.
    Classify { file: PathBuf },
    /// Spectrum of an element through its multiplication operator.
    Spectrum {
        file: PathBuf,
        /// Element coordinates, comma separated.
        #[arg(long)]
        element: String,
        /// two | left | right.
        #[arg(long, default_value = "two")]
        side: String,
    },
    /// Build an algebra by iterated Cayley-Dickson doubling.
    Cd {
        /// Doubling parameters, comma separated (e.g. -1,-1,-1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        levels: Vec<String>,
        /// rational | real.
        #[arg(long, default_value = "rational")]
        scalar: String,
        #[arg(long)]
        name: Option<String>,
        /// Write the algebra file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Zero-divisor kernels of an element, or a signed-pair witness search.
    Zerodiv {
        file: PathBuf,
        #[arg(long)]
        element: Option<String>,
        /// Search products of signed basis pairs for a joint zero divisor.
        #[arg(long)]
        search: bool,
    },
    /// Orthogonalize vectors against the algebra's bilinear form.
    GramSchmidt {
        file: PathBuf,
        /// Vectors separated by ';', coordinates by ','.
        #[arg(long)]
        vectors: String,
        /// Normalize to unit norm (real mode, positive-definite form).
        #[arg(long)]
        normalize: bool,
    },
    /// Adjoint of an operator and/or a Riesz representative.
    Adjoint {
        file: PathBuf,
        /// Operator matrix: rows separated by ';', entries by ','.
        #[arg(long)]
        matrix: Option<String>,
        /// Use the left multiplication operator of this element.
        #[arg(long)]
        left: Option<String>,
        /// Use the right multiplication operator of this element.
        #[arg(long)]
        right: Option<String>,
        /// Functional coordinates for the Riesz representation.
        #[arg(long)]
        riesz: Option<String>,
    },
    /// Verify an explicit isomorphism matrix between two algebra files.
    IsoVerify {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Matrix columns = images of the first algebra's basis.
        #[arg(long)]
        matrix: String,
    },
    /// Probe sigma(ab) u {0} = sigma(ba) u {0} on seeded random samples.
    ProbeOpenQuestion {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: u32,
    },
}

struct Ctx {
    json: bool,
    seed: u64,
    tol: f64,
}

/// A command failure that maps onto the exit-code contract.
enum Failure {
    Usage(String),
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<nonassoc::Error> for Failure {
    fn from(e: nonassoc::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli
        .tol
        .or_else(|| {
            std::env::var("NONASSOC_TOL")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(nonassoc::DEFAULT_TOL);
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        tol,
    };
    match run(&cli.command, &ctx) {
        Ok((report, human)) => {
            if ctx.json {
                println!("{}", report.to_json());
            } else {
                print!("{human}");
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

fn load(path: &Path, ctx: &Ctx) -> Result<(Algebra, Vec<u8>), Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::Usage(format!("{} is not UTF-8", path.display())))?;
    let (alg, _) = parse_algebra_file(&text)?;
    Ok((alg.with_tolerance(ctx.tol), bytes))
}

fn parse_element(alg: &Algebra, text: &str) -> Result<Element, Failure> {
    let coords: Result<Vec<Scalar>, Failure> = text
        .split(',')
        .map(|c| Scalar::parse(c, alg.mode()).map_err(Failure::Usage))
        .collect();
    let coords = coords?;
    if coords.len() != alg.dim() {
        return Err(Failure::Usage(format!(
            "element has {} coordinates for dimension {}",
            coords.len(),
            alg.dim()
        )));
    }
    Ok(Element::new(coords))
}

fn parse_matrix(alg: &Algebra, text: &str) -> Result<Matrix, Failure> {
    let rows: Result<Vec<Vec<Scalar>>, Failure> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|c| Scalar::parse(c, alg.mode()).map_err(Failure::Usage))
                .collect()
        })
        .collect();
    let rows = rows?;
    let n = alg.dim();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Failure::Usage(format!("matrix must be {n}x{n}")));
    }
    Ok(Matrix::from_rows(&rows, alg.mode()))
}

fn check_line(name: &str, check: &Check) -> String {
    match check {
        Check::Holds => format!("{name}: holds\n"),
        Check::Fails { witness } => {
            let ws: Vec<String> = witness.iter().map(Element::to_string).collect();
            format!("{name}: fails at ({})\n", ws.join(", "))
        }
    }
}

fn spectrum_text(res: &SpectrumResult) -> String {
    let mut out = String::new();
    if let Some(coeffs) = &res.char_poly {
        let cs: Vec<String> = coeffs.iter().map(Scalar::to_string).collect();
        out.push_str(&format!("charpoly (ascending): [{}]\n", cs.join(", ")));
    }
    if let Some(roots) = &res.roots {
        for r in roots {
            out.push_str(&format!(
                "root: {:?} + {:?}i (multiplicity {})\n",
                r.re, r.im, r.multiplicity
            ));
        }
    }
    out
}

fn run(cmd: &Command, ctx: &Ctx) -> Result<(Report, String), Failure> {
    match cmd {
        Command::Check {
            file,
            assert,
            max_degree,
            samples,
        } => {
            let (alg, bytes) = load(file, ctx)?;
            let sampler = SamplerConfig {
                seed: ctx.seed,
                samples: *samples,
            };
            let rep = identities::report(&alg, *max_degree, sampler)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut report = Report::new(format!("check --max-degree {max_degree}"), ctx.tol)
                .with_digest(&bytes);
            report.seed = Some(ctx.seed);
            let mut human = String::new();
            let named: [(&str, &Check); 9] = [
                ("commutative", &rep.commutative),
                ("associative", &rep.associative),
                ("flexible", &rep.flexible),
                ("left-alternative", &rep.left_alternative),
                ("right-alternative", &rep.right_alternative),
                ("alternative", &rep.alternative),
                ("moufang", &rep.moufang),
                ("skornyakov-left", &rep.skornyakov_left),
                ("skornyakov-right", &rep.skornyakov_right),
            ];
            for (name, check) in &named {
                human.push_str(&check_line(name, check));
            }
            human.push_str(&format!(
                "power-associative up to degree {} ({:?})\n",
                rep.power.verified_up_to, rep.power.method
            ));
            report.results = serde_json::to_value(&rep).expect("report serializes");
            if let Some(prop) = assert {
                let target = named
                    .iter()
                    .find(|(name, _)| name == prop)
                    .map(|(_, check)| *check)
                    .ok_or_else(|| Failure::Usage(format!("unknown identity {prop:?}")))?;
                if !target.holds() {
                    report.fail_assertion();
                    human.push_str(&format!("assertion failed: {prop}\n"));
                }
            }
            Ok((report, human))
        }

        Command::Qform { file } => {
            let (alg, bytes) = load(file, ctx)?;
            let mut report = Report::new("qform".into(), ctx.tol).with_digest(&bytes);
            match quadratic::extract(&alg).map_err(|e| Failure::Usage(e.to_string()))? {
                Extraction::Quadratic(q) => {
                    let flags = quadratic::form_property_checks(&alg, &q)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    let mut human = String::from("quadratic: yes\n");
                    human.push_str(&format!(
                        "trace vector: [{}]\n",
                        q.trace_vector()
                            .iter()
                            .map(Scalar::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                    human.push_str(&format!("gram matrix:\n{}", q.gram()));
                    human.push_str(&check_line("proper", &flags.proper));
                    human.push_str(&check_line("permits-composition", &flags.permits_composition));
                    human.push_str(&check_line(
                        "locally-field-extension",
                        &flags.locally_field_extension,
                    ));
                    human.push_str(&check_line(
                        "positive-definite-on-unit-perp",
                        &flags.positive_definite_on_unit_perp,
                    ));
                    report.results = serde_json::json!({
                        "quadratic": true,
                        "trace": q.trace_vector(),
                        "gram": q.gram(),
                        "proper": flags.proper,
                        "permits_composition": flags.permits_composition,
                        "locally_field_extension": flags.locally_field_extension,
                        "positive_definite_on_unit_perp": flags.positive_definite_on_unit_perp,
                    });
                    Ok((report, human))
                }
                Extraction::NotQuadratic { witness } => {
                    report.results = serde_json::json!({
                        "quadratic": false,
                        "witness": witness,
                    });
                    report.fail_assertion();
                    Ok((report, format!("quadratic: no (witness {witness})\n")))
                }
            }
        }

        Command::Classify { file } => {
            let (alg, bytes) = load(file, ctx)?;
            let outcome = classify(&alg).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut report = Report::new("classify".into(), ctx.tol).with_digest(&bytes);
            report.results = serde_json::to_value(&outcome).expect("outcome serializes");
            let mut human = format!("verdict: {}\n", outcome.verdict);
            if let Some(iso) = &outcome.iso {
                human.push_str(&format!("isomorphism (columns = model basis images):\n{iso}"));
            }
            for line in &outcome.certificate {
                human.push_str(&format!("certified: {line}\n"));
            }
            Ok((report, human))
        }

        Command::Spectrum {
            file,
            element,
            side,
        } => {
            let (alg, bytes) = load(file, ctx)?;
            let a = parse_element(&alg, element)?;
            let res = match side.as_str() {
                "two" => spectrum_real(&alg, &a).map_err(|e| {
                    Failure::Usage(format!("{e}; try --side left or --side right"))
                })?,
                "left" => one_sided_spectrum(&alg, &a, Side::Left)
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                "right" => one_sided_spectrum(&alg, &a, Side::Right)
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                other => return Err(Failure::Usage(format!("unknown side {other:?}"))),
            };
            let mut report =
                Report::new(format!("spectrum --side {side}"), ctx.tol).with_digest(&bytes);
            report.results = serde_json::to_value(&res).expect("spectrum serializes");
            Ok((report, spectrum_text(&res)))
        }

        Command::Cd {
            levels,
            scalar,
            name,
            output,
        } => {
            let mode = match scalar.as_str() {
                "rational" => Mode::Rational,
                "real" => Mode::Real,
                other => return Err(Failure::Usage(format!("unknown scalar mode {other:?}"))),
            };
            let parsed: Result<Vec<Scalar>, Failure> = levels
                .iter()
                .map(|l| Scalar::parse(l, mode).map_err(Failure::Usage))
                .collect();
            let parsed = parsed?;
            let (alg, _) =
                construct::cayley_dickson(&parsed, mode).map_err(|e| Failure::Usage(e.to_string()))?;
            let default_name = format!("cd({})", levels.join(","));
            let file_repr = algebra_to_file(name.as_deref().unwrap_or(&default_name), &alg);
            let text = canonical_json(&file_repr);
            let mut report = Report::new(format!("cd --levels {}", levels.join(",")), ctx.tol);
            report.results = serde_json::to_value(&file_repr).expect("file serializes");
            let human = match output {
                Some(path) => {
                    std::fs::write(path, format!("{text}\n"))
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    format!("wrote dimension-{} algebra to {}\n", alg.dim(), path.display())
                }
                None => format!("{text}\n"),
            };
            Ok((report, human))
        }

        Command::Zerodiv {
            file,
            element,
            search,
        } => {
            let (alg, bytes) = load(file, ctx)?;
            let mut report = Report::new("zerodiv".into(), ctx.tol).with_digest(&bytes);
            let mut human = String::new();
            match (element, search) {
                (Some(coords), _) => {
                    let a = parse_element(&alg, coords)?;
                    let kernels = alg
                        .zero_divisor_kernels(&a)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    human.push_str(&format!(
                        "left kernel dim {}, right kernel dim {}, joint kernel dim {}\n",
                        kernels.left.len(),
                        kernels.right.len(),
                        kernels.joint.len()
                    ));
                    for b in &kernels.joint {
                        human.push_str(&format!("joint: {b}\n"));
                    }
                    report.results = serde_json::json!({
                        "left": kernels.left,
                        "right": kernels.right,
                        "joint": kernels.joint,
                    });
                }
                (None, true) => {
                    match nonassoc::sample::sedenion_zero_divisor_witness(&alg) {
                        Some(witness) => {
                            let kernels = alg
                                .zero_divisor_kernels(&witness)
                                .map_err(|e| Failure::Usage(e.to_string()))?;
                            human.push_str(&format!("witness: {witness}\n"));
                            human.push_str(&format!("joint kernel dim {}\n", kernels.joint.len()));
                            report.results = serde_json::json!({
                                "witness": witness,
                                "joint": kernels.joint,
                            });
                        }
                        None => {
                            human.push_str("no joint zero divisor among signed basis pairs\n");
                            report.results = serde_json::json!({ "witness": null });
                        }
                    }
                }
                (None, false) => {
                    return Err(Failure::Usage(
                        "zerodiv needs --element COORDS or --search".into(),
                    ))
                }
            }
            Ok((report, human))
        }

        Command::GramSchmidt {
            file,
            vectors,
            normalize,
        } => {
            let (alg, bytes) = load(file, ctx)?;
            let q = match quadratic::extract(&alg).map_err(|e| Failure::Usage(e.to_string()))? {
                Extraction::Quadratic(q) => q,
                Extraction::NotQuadratic { witness } => {
                    return Err(Failure::Usage(format!(
                        "algebra is not quadratic (witness {witness})"
                    )))
                }
            };
            let parsed: Result<Vec<Element>, Failure> =
                vectors.split(';').map(|v| parse_element(&alg, v)).collect();
            let parsed = parsed?;
            let mut report = Report::new("gram-schmidt".into(), ctx.tol).with_digest(&bytes);
            match quadratic::gram_schmidt(&q, &parsed, *normalize, ctx.tol) {
                Ok(out) => {
                    let mut human = String::new();
                    for v in &out {
                        human.push_str(&format!("{v}\n"));
                    }
                    report.results = serde_json::json!({ "vectors": out });
                    Ok((report, human))
                }
                Err(e @ (nonassoc::Error::DependentInput(_) | nonassoc::Error::IsotropicStep(_))) => {
                    report.results = serde_json::json!({ "error": e.to_string() });
                    report.fail_assertion();
                    Ok((report, format!("{e}\n")))
                }
                Err(e) => Err(Failure::Usage(e.to_string())),
            }
        }

        Command::Adjoint {
            file,
            matrix,
            left,
            right,
            riesz,
        } => {
            let (alg, bytes) = load(file, ctx)?;
            let q = match quadratic::extract(&alg).map_err(|e| Failure::Usage(e.to_string()))? {
                Extraction::Quadratic(q) => q,
                Extraction::NotQuadratic { witness } => {
                    return Err(Failure::Usage(format!(
                        "algebra is not quadratic (witness {witness})"
                    )))
                }
            };
            let op = match (matrix, left, right) {
                (Some(m), None, None) => Some(parse_matrix(&alg, m)?),
                (None, Some(elem), None) => Some(
                    alg.mult_operator(&parse_element(&alg, elem)?, Side::Left)
                        .map_err(|e| Failure::Usage(e.to_string()))?,
                ),
                (None, None, Some(elem)) => Some(
                    alg.mult_operator(&parse_element(&alg, elem)?, Side::Right)
                        .map_err(|e| Failure::Usage(e.to_string()))?,
                ),
                (None, None, None) => None,
                _ => {
                    return Err(Failure::Usage(
                        "give at most one of --matrix, --left, --right".into(),
                    ))
                }
            };
            let functional = match riesz {
                Some(text) => Some(parse_element(&alg, text)?.into_coords()),
                None => None,
            };
            if op.is_none() && functional.is_none() {
                return Err(Failure::Usage(
                    "adjoint needs --matrix/--left/--right and/or --riesz".into(),
                ));
            }
            let mut report = Report::new("adjoint".into(), ctx.tol).with_digest(&bytes);
            match quadratic::riesz_and_adjoint(&q, functional.as_deref(), op.as_ref(), ctx.tol) {
                Ok((riesz_vec, adjoint)) => {
                    let mut human = String::new();
                    if let Some(r) = &riesz_vec {
                        human.push_str(&format!("riesz representative: {r}\n"));
                    }
                    if let Some(t) = &adjoint {
                        human.push_str(&format!("adjoint:\n{t}"));
                    }
                    report.results = serde_json::json!({
                        "riesz": riesz_vec,
                        "adjoint": adjoint,
                    });
                    Ok((report, human))
                }
                Err(e @ nonassoc::Error::DegenerateForm) => {
                    report.results = serde_json::json!({ "error": e.to_string() });
                    report.fail_assertion();
                    Ok((report, format!("{e}\n")))
                }
                Err(e) => Err(Failure::Usage(e.to_string())),
            }
        }

        Command::IsoVerify {
            file_a,
            file_b,
            matrix,
        } => {
            let (alg_a, bytes_a) = load(file_a, ctx)?;
            let (alg_b, _) = load(file_b, ctx)?;
            let m = parse_matrix(&alg_b, matrix)?;
            let mut report = Report::new("iso-verify".into(), ctx.tol).with_digest(&bytes_a);
            match verify_isomorphism(&alg_a, &alg_b, &m).map_err(|e| Failure::Usage(e.to_string()))? {
                IsoCheck::Pass => {
                    report.results = serde_json::json!({ "pass": true });
                    Ok((report, "pass\n".into()))
                }
                IsoCheck::Fail { witness, reason } => {
                    report.results = serde_json::json!({
                        "pass": false,
                        "reason": reason,
                        "witness": witness,
                    });
                    report.fail_assertion();
                    Ok((report, format!("fail: {reason}\n")))
                }
            }
        }

        Command::ProbeOpenQuestion { file, samples } => {
            let (alg, bytes) = load(file, ctx)?;
            let probe = product_spectrum_probe(&alg, ctx.seed, *samples)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let mut report =
                Report::new(format!("probe-open-question --samples {samples}"), ctx.tol)
                    .with_digest(&bytes);
            report.seed = Some(ctx.seed);
            report.results = serde_json::to_value(&probe).expect("probe serializes");
            let human = format!(
                "sigma(ab) u {{0}} = sigma(ba) u {{0}}: agreed on {}/{} samples ({} disagreements); experimental observation only\n",
                probe.agreements, probe.samples, probe.disagreements
            );
            Ok((report, human))
        }
    }
}
