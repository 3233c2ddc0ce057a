//! Subcommands. Each job produces one JSON document and a pass/fail flag.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use anomalab_core::abelian_gauging::{anomaly_transport_demo, campaign, CampaignInstance, SHAPES};
use anomalab_core::azumaya::{
    anomaly_cocycle, examples, galois_twist_check, gauge_algebra, graded_commutant, regauging_search, AlgebraAction,
};
use anomalab_core::cohomology::{
    cohomology_group, galois_fixed_exponent, kill_search, slant2, slant3, CohomologyClass, CohomologyGroup,
};
use anomalab_core::twisted_double::{
    build_double, conjugate_modular_data, find_label_equivalence, galois_squared_check, modular_data,
};
use anomalab_core::{Caps, FiniteGroup};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::json::{self, ActionJson, CochainJson, CohomologyReport, CycloJson, EquivalenceJson, GroupJson, ModularDataJson};

#[derive(Debug, Parser)]
#[command(name = "anomalab", version, about = "Exact finite-group anomaly computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed recorded in the output and used by randomized campaigns.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ClassArgs {
    /// Catalog name (Z/n, Z/axZ/b, (Z/a)^k, S3, S4, D4, Q8, A4) or a group JSON file.
    #[arg(long)]
    pub group: String,
    /// Coordinates of the class in the μ-part of H^k, comma separated; `0` is the zero class.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// A cochain JSON file instead of `--alpha`.
    #[arg(long)]
    pub cocycle: Option<PathBuf>,
    /// Coefficient modulus m (default |G|).
    #[arg(long)]
    pub modulus: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// H^k(G; Z/m) with its μ-part.
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        modulus: u64,
    },
    /// Slant product ι_g of a 2- or 3-cocycle.
    Slant {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long)]
        element: usize,
    },
    /// Modular data of the twisted double, optionally Galois-conjugated by n.
    Double {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Compare MD(n²α) with σ_{n²}(MD(α)).
    GaloisCheck {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Exponent of the part of H³(G; μ) fixed by x ↦ n²x for all units n.
    Torsion24 {
        #[command(flatten)]
        class: ClassArgs,
        /// With `--alpha`, also report n²α and the modular-data comparison.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Anomaly, commutant, gauging and Galois law of a matrix-algebra action.
    Azumaya {
        /// Built-in action: pauli, heisenberg3, heisenberg4, diagonal-z2, sign-z2, clock3, clock4.
        #[arg(long)]
        example: Option<String>,
        /// Action JSON file.
        #[arg(long)]
        action: Option<PathBuf>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        n: i64,
        /// Root-of-unity order for the exhaustive re-gauging search.
        #[arg(long, default_value_t = 4)]
        search: u64,
    },
    /// Randomized reindexing and slant-linearity campaign.
    GaugeAbelian {
        /// Abelian group; all built-in shapes when omitted.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 50)]
        instances: usize,
    },
    /// Search central extensions by Z/k killing α on inflation.
    KillSearch {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 4)]
        max_kernel: u64,
        #[arg(long, default_value_t = 64)]
        max_extensions: usize,
    },
    /// Run a JSON list of argument vectors, in parallel.
    Batch {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Top-level argument vector of one job.
#[derive(Debug, Parser)]
#[command(name = "anomalab")]
struct Job {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

/// Result of a job: the JSON text and whether its mathematical checks passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: String,
    /// 0 when every check passed, 1 otherwise; a batch reports its worst job.
    pub exit: u8,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, passed: bool) -> Outcome {
        Outcome { json: json::to_string(value), exit: u8::from(!passed) }
    }

    pub fn passed(&self) -> bool {
        self.exit == 0
    }
}

/// Default caps with `ANOMALAB_CAPS` overrides applied.
pub fn caps_from_env() -> Result<Caps, CliError> {
    match std::env::var("ANOMALAB_CAPS") {
        Ok(spec) => Ok(Caps::default().with_overrides(&spec)?),
        Err(_) => Ok(Caps::default()),
    }
}

fn parse_coords(text: &str, factors: &[u64]) -> Result<Vec<u64>, CliError> {
    if text.trim() == "0" {
        return Ok(vec![0; factors.len()]);
    }
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::Input(format!("bad coordinate {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != factors.len() {
        return Err(CliError::Input(format!(
            "expected {} coordinates for μ-factors {factors:?}, got {}",
            factors.len(),
            coords.len()
        )));
    }
    Ok(coords)
}

struct Resolved {
    group: FiniteGroup,
    h: Arc<CohomologyGroup>,
    class: CohomologyClass,
    mu_coords: Vec<u64>,
}

fn resolve_class(args: &ClassArgs, degree: usize, caps: &Caps) -> Result<Resolved, CliError> {
    let group = json::parse_group(&args.group, caps.max_group_order)?;
    if let Some(path) = &args.cocycle {
        let c: CochainJson = json::read_json(path)?;
        let c = c.to_cochain(caps.max_group_order)?;
        if c.group().table() != group.table() {
            return Err(CliError::Input("cocycle file is over a different group".into()));
        }
        let group = c.group().clone();
        if c.degree() != degree {
            return Err(CliError::Input(format!("cocycle has degree {}, expected {degree}", c.degree())));
        }
        let h = Arc::new(cohomology_group(&group, degree, c.modulus(), caps)?);
        let class = CohomologyClass::of(&h, c)?;
        let mu_coords = class.mu_coordinates();
        return Ok(Resolved { group, h, class, mu_coords });
    }
    let m = args.modulus.unwrap_or(group.order() as u64);
    let h = Arc::new(cohomology_group(&group, degree, m, caps)?);
    let text = args.alpha.as_deref().unwrap_or("0");
    let mu_coords = parse_coords(text, h.mu_factors())?;
    let rep = h.mu_cocycle(&mu_coords)?;
    let class = CohomologyClass::of(&h, rep)?;
    Ok(Resolved { group, h, class, mu_coords })
}

fn example_action(name: &str) -> Result<AlgebraAction, CliError> {
    Ok(match name {
        "pauli" => examples::pauli_action()?,
        "heisenberg3" => examples::heisenberg_action(3)?,
        "heisenberg4" => examples::heisenberg_action(4)?,
        "diagonal-z2" => examples::diagonal_z2_action()?,
        "sign-z2" => examples::sign_z2_action()?,
        "clock3" => examples::clock_action(3)?,
        "clock4" => examples::clock_action(4)?,
        other => return Err(CliError::Input(format!("unknown example action {other:?}"))),
    })
}

fn campaign_json(items: &[CampaignInstance]) -> Value {
    Value::Array(
        items
            .iter()
            .map(|c| {
                json!({
                    "shape": c.shape,
                    "seed": c.seed,
                    "n": c.n,
                    "reindex": c.reindex.holds,
                    "first_mismatch": c.reindex.mismatch,
                    "slant_linear": c.slant_linear,
                })
            })
            .collect(),
    )
}

/// Run one parsed command.
pub fn run(command: &Command, seed: u64, caps: &Caps) -> Result<Outcome, CliError> {
    match command {
        Command::Cohomology { group, degree, modulus } => {
            let g = json::parse_group(group, caps.max_group_order)?;
            let h = cohomology_group(&g, *degree, *modulus, caps)?;
            Ok(Outcome::new(&CohomologyReport::of(&h), true))
        }
        Command::Slant { class, degree, element } => {
            let r = resolve_class(class, *degree, caps)?;
            r.group.check_element(*element)?;
            let rep = r.class.representative();
            let slant = match degree {
                2 => slant2(rep, *element)?,
                3 => slant3(rep, *element)?,
                d => return Err(CliError::Input(format!("slant is defined for degrees 2 and 3, got {d}"))),
            };
            let centralizer = anomalab_core::group::centralizer(&r.group, *element)?;
            let out = json!({
                "group": GroupJson::of(&r.group),
                "class": r.mu_coords,
                "element": element,
                "centralizer": centralizer.elements(),
                "slant": CochainJson::of(&slant),
            });
            Ok(Outcome::new(&out, true))
        }
        Command::Double { class, n } => {
            let r = resolve_class(class, 3, caps)?;
            let md = modular_data(&build_double(&r.group, r.class.representative(), caps)?)?;
            let md = match n {
                Some(n) => conjugate_modular_data(&md, *n)?,
                None => md,
            };
            let mut out = serde_json::to_value(ModularDataJson::of(&r.group, &r.mu_coords, r.h.modulus(), &md))
                .expect("serializable");
            out["job_seed"] = json!(seed);
            if let Some(n) = n {
                out["n"] = json!(n);
            }
            Ok(Outcome::new(&out, true))
        }
        Command::GaloisCheck { class, n } => {
            let r = resolve_class(class, 3, caps)?;
            let report = galois_squared_check(&r.class, *n, caps)?;
            let md = modular_data(&build_double(&r.group, r.class.representative(), caps)?)?;
            let nn = n.rem_euclid(md.level as i64);
            let conj = conjugate_modular_data(&md, nn * nn % md.level as i64)?;
            let coste_gannon = find_label_equivalence(&md, &conj);
            let passed = report.equivalence.is_some() && coste_gannon.is_some() && report.conjugate_identities;
            let out = json!({
                "group": GroupJson::of(&r.group),
                "modulus": r.h.modulus(),
                "n": n,
                "factor": report.factor,
                "class": report.class,
                "twisted_class": report.twisted_class,
                "forced": report.forced,
                "equivalence": report.equivalence.as_ref().map(EquivalenceJson::of),
                "conjugate_identities": report.conjugate_identities,
                "galois_symmetry": coste_gannon.as_ref().map(EquivalenceJson::of),
            });
            Ok(Outcome::new(&out, passed))
        }
        Command::Torsion24 { class, n } => {
            let r = resolve_class(class, 3, caps)?;
            let fixed = galois_fixed_exponent(&r.h, 2);
            let squares_one = [1u64, 5, 7, 11, 13, 17, 19, 23].iter().all(|n| n * n % 24 == 1);
            let divides = 24 % fixed.exponent == 0;
            let transport = match n {
                Some(n) if class.alpha.is_some() || class.cocycle.is_some() => {
                    let t = anomaly_transport_demo(&r.class, *n, caps)?;
                    Some(json!({
                        "n": t.n,
                        "class": t.class,
                        "twisted_class": t.twisted_class,
                        "galois_squared_equivalence": t.galois_squared.as_ref().map(|g| g.equivalence.is_some()),
                    }))
                }
                _ => None,
            };
            let out = json!({
                "group": GroupJson::of(&r.group),
                "modulus": r.h.modulus(),
                "mu_factors": r.h.mu_factors(),
                "fixed_invariant_factors": fixed.invariant_factors,
                "fixed_exponent": fixed.exponent,
                "divides_24": divides,
                "units_square_to_one_mod_24": squares_one,
                "transport": transport,
            });
            Ok(Outcome::new(&out, divides && squares_one))
        }
        Command::Azumaya { example, action, n, search } => {
            let act = match (example, action) {
                (Some(name), None) => example_action(name)?,
                (None, Some(path)) => {
                    let a: ActionJson = json::read_json(path)?;
                    a.to_action(caps.max_group_order, caps.max_phi)?
                }
                _ => return Err(CliError::Input("give exactly one of --example and --action".into())),
            };
            let anomaly = anomaly_cocycle(&act.without_lift())?;
            let commutant = graded_commutant(&act)?;
            let pairing: Vec<Value> = anomaly
                .commutator_pairing()
                .iter()
                .filter(|(_, _, v)| !v.is_one())
                .map(|(g, h, v)| json!([g, h, CycloJson::of(v)]))
                .collect();
            let lift = regauging_search(&anomaly, *search, caps)?;
            let gauged = match act.lift() {
                Some(_) => {
                    let g = gauge_algebra(&act)?;
                    Some(json!({"rank": g.rank, "zero": g.corner.is_none()}))
                }
                None => None,
            };
            let twist = galois_twist_check(&act, *n, caps)?;
            let out = json!({
                "action": ActionJson::of(&act),
                "anomaly": anomaly.values.iter().map(CycloJson::of).collect::<Vec<_>>(),
                "anomaly_mu": anomaly.mu.as_ref().map(|t| t.iter().map(|x| [x.numerator(), x.denominator()]).collect::<Vec<_>>()),
                "commutator_pairing": pairing,
                "commutant_dimensions": commutant.dimensions(),
                "fixed_dimension": commutant.fixed.len(),
                "regauging": lift.map(|l| l.iter().map(|x| [x.numerator(), x.denominator()]).collect::<Vec<_>>()),
                "regauging_order": search,
                "gauged": gauged,
                "galois": {
                    "n": twist.n,
                    "modulus": twist.modulus,
                    "invariant_factors": twist.invariant_factors,
                    "before": twist.before,
                    "after": twist.after,
                    "expected": twist.expected,
                    "holds": twist.holds,
                },
            });
            Ok(Outcome::new(&out, twist.holds))
        }
        Command::GaugeAbelian { group, instances } => {
            let shapes: Vec<String> = match group {
                Some(g) => vec![g.clone()],
                None => SHAPES.iter().map(|s| s.to_string()).collect(),
            };
            let mut all = Vec::new();
            for (i, s) in shapes.iter().enumerate() {
                let g = json::parse_group(s, caps.max_group_order)?;
                all.extend(campaign(s, &g, *instances, seed.wrapping_add((i as u64) << 32), caps)?);
            }
            let passed = all.iter().all(|c| c.reindex.holds && c.slant_linear);
            let out = json!({
                "seed": seed,
                "instances": all.len(),
                "passed": all.iter().filter(|c| c.reindex.holds && c.slant_linear).count(),
                "results": campaign_json(&all),
            });
            Ok(Outcome::new(&out, passed))
        }
        Command::KillSearch { class, max_kernel, max_extensions } => {
            let r = resolve_class(class, 3, caps)?;
            let found = kill_search(r.class.representative(), *max_kernel, *max_extensions, caps)?;
            let result = found.found.as_ref().map(|(ext, k, coords, report)| {
                json!({
                    "kernel_order": k,
                    "extension_class": coords,
                    "total_order": ext.total.order(),
                    "total_group": GroupJson::of(&ext.total),
                    "witness": report.witness.as_ref().map(CochainJson::of),
                })
            });
            let out = json!({
                "group": GroupJson::of(&r.group),
                "class": r.mu_coords,
                "examined": found.examined,
                "killer": result,
            });
            Ok(Outcome::new(&out, true))
        }
        Command::Batch { file, jobs } => run_batch(file, *jobs),
    }
}

/// Parse and run a full argument vector (without the program name). Writes
/// the JSON to `--out` when given and returns it either way.
pub fn run_args(args: &[String]) -> Result<Outcome, CliError> {
    let argv = std::iter::once("anomalab".to_string()).chain(args.iter().cloned());
    let job = Job::try_parse_from(argv).map_err(|e| CliError::Input(e.to_string()))?;
    let caps = caps_from_env()?;
    let outcome = run(&job.command, job.common.seed, &caps)?;
    if let Some(path) = &job.common.out {
        std::fs::write(path, &outcome.json)?;
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct BatchEntry {
    args: Vec<String>,
    exit: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn run_batch(file: &std::path::Path, jobs: usize) -> Result<Outcome, CliError> {
    let list: Vec<Vec<String>> = json::read_json(file)?;
    if list.iter().any(|a| a.first().map(String::as_str) == Some("batch")) {
        return Err(CliError::Input("batch files cannot nest batch jobs".into()));
    }
    let results: Mutex<Vec<Option<BatchEntry>>> = Mutex::new((0..list.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, list.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(args) = list.get(i) else { break };
                let entry = match run_args(args) {
                    Ok(o) => BatchEntry { args: args.clone(), exit: o.exit, error: None },
                    Err(e) => BatchEntry { args: args.clone(), exit: e.exit_code(), error: Some(e.to_string()) },
                };
                results.lock().expect("no panics while holding the lock")[i] = Some(entry);
            });
        }
    });
    let entries: Vec<BatchEntry> = results.into_inner().expect("threads joined").into_iter().flatten().collect();
    let exit = entries.iter().map(|e| e.exit).max().unwrap_or(0);
    Ok(Outcome { json: json::to_string(&entries), exit })
}
