use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::json;

use elliptic_kahler::exponents;
use elliptic_kahler::fourfold::{self, ClassificationRecord, Status};
use elliptic_kahler::parse::parse_document;
use elliptic_kahler::poly::Rational;
use elliptic_kahler::sullivan::minimal_model_from_ring;
use elliptic_kahler::{ci, groebner};

#[derive(Parser)]
#[command(
    name = "elliptic-kahler",
    version,
    about = "Exact workbench for elliptic homotopy types of compact Kähler manifolds"
)]
struct Cli {
    /// Emit structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sample-parameter selection ordering
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for scans (defaults to the rayon heuristic)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate exponent tuples at a formal dimension
    Exponents {
        /// Formal dimension (even)
        #[arg(long)]
        dim: u32,
        /// Restrict to tuples with equally many even and odd generators
        #[arg(long)]
        equal_ranks: bool,
    },
    /// Reproduce the dimension-4 Hodge diamond classification
    Classify4,
    /// Betti numbers of a Sullivan algebra file
    Cohomology {
        file: PathBuf,
        /// Top degree (defaults to twice the sum of generator degrees)
        #[arg(long)]
        up_to: Option<u32>,
    },
    /// Print the associated pure model of a Sullivan algebra file
    Pure { file: PathBuf },
    /// Gröbner basis, finiteness and Hilbert function of an ideal file
    Groebner { file: PathBuf },
    /// Build the minimal model of the quotient ring in a file
    MinimalModel {
        file: PathBuf,
        /// Construction cutoff (defaults to twice the formal dimension)
        #[arg(long)]
        up_to: Option<u32>,
    },
    /// Scan complete intersections for elliptic homotopy type
    CiScan {
        #[arg(long)]
        max_dim: u32,
        /// Bound on the sum of the hypersurface degrees
        #[arg(long)]
        max_degree: u32,
    },
    /// Check the parameterized fourfold models and exclusions
    CheckModel {
        which: ModelKind,
        /// Samples: rationals like `0,1,-5/2` for model c, pairs like
        /// `2,0;0,-2` for model d and the shape-(i) exclusion
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    C,
    D,
    I,
}

fn parse_rational(s: &str) -> anyhow::Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = num.parse().with_context(|| format!("bad rational `{s}`"))?;
    let d: num_bigint::BigInt = den.parse().with_context(|| format!("bad rational `{s}`"))?;
    if d == 0.into() {
        return Err(anyhow!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(n, d))
}

fn parse_rational_list(s: &str) -> anyhow::Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

fn parse_pair_list(s: &str) -> anyhow::Result<Vec<(Rational, Rational)>> {
    s.split(';')
        .map(|pair| {
            let items = parse_rational_list(pair)?;
            if items.len() != 2 {
                return Err(anyhow!("expected `a,b` pairs separated by `;`, got `{pair}`"));
            }
            Ok((items[0].clone(), items[1].clone()))
        })
        .collect()
}

fn shuffle_with_seed<T>(items: &mut [T], seed: Option<u64>) {
    if let Some(seed) = seed {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        items.shuffle(&mut rng);
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Admitted => "admitted",
        Status::Excluded => "excluded",
        Status::AdmittedUnrealized => "admitted-unrealized",
    }
}

fn print_record(r: &ClassificationRecord) {
    let label = r
        .label
        .map(|c| format!(" diamond ({c})"))
        .unwrap_or_default();
    println!("{} [{}{label}]", r.source, status_name(r.status));
    if let Some(d) = &r.diamond {
        for line in d.render().lines() {
            println!("    {line}");
        }
    }
    for f in &r.filters {
        println!(
            "    {}: {} ({})",
            f.filter,
            if f.verdict { "pass" } else { "fail" },
            f.witness
        );
    }
    if let Some(real) = &r.realization {
        println!("    realized by {real}");
    }
    println!();
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match cli.command {
        Command::Exponents { dim, equal_ranks } => {
            if dim % 2 != 0 || dim == 0 {
                return Err(anyhow!("--dim must be a positive even integer"));
            }
            let tuples = exponents::enumerate(dim, equal_ranks);
            if cli.json {
                let items: Vec<serde_json::Value> = tuples
                    .iter()
                    .map(|t| {
                        let mut v = json!({
                            "a": t.a_ascending(),
                            "b": t.b_ascending(),
                            "m": dim,
                        });
                        if t.q() == t.r() {
                            v["total"] = json!(t.total_dimension().unwrap());
                        }
                        v
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&items)?);
            } else {
                for t in &tuples {
                    if t.q() == t.r() {
                        println!("{t} m={dim} total={}", t.total_dimension().unwrap());
                    } else {
                        println!("{t} m={dim}");
                    }
                }
            }
            Ok(0)
        }
        Command::Classify4 => {
            let records = fourfold::classify()?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&records)?);
            } else {
                for r in &records {
                    print_record(r);
                }
                let admitted: Vec<String> = records
                    .iter()
                    .filter(|r| r.status != Status::Excluded)
                    .map(|r| {
                        let tag = r.label.map(|c| c.to_string()).unwrap_or_default();
                        if r.status == Status::AdmittedUnrealized {
                            format!("({tag}, unrealized)")
                        } else {
                            format!("({tag})")
                        }
                    })
                    .collect();
                println!("admitted diamonds: {}", admitted.join(" "));
            }
            Ok(0)
        }
        Command::Cohomology { file, up_to } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let alg = elliptic_kahler::parse::parse_cdga(&text)?;
            let bound = up_to.unwrap_or_else(|| {
                2 * alg.generators().iter().map(|g| g.degree).sum::<u32>()
            });
            let betti = alg.cohomology(bound)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "betti": betti.entries() }))?
                );
            } else {
                for (k, b) in betti.entries().iter().enumerate() {
                    println!("b_{k} = {b}");
                }
            }
            Ok(0)
        }
        Command::Pure { file } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let alg = elliptic_kahler::parse::parse_cdga(&text)?;
            let pure = alg.associated_pure();
            print!("{}", pure.to_cdga_string());
            Ok(0)
        }
        Command::Groebner { file } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let doc = parse_document(&text)?;
            let ideal = doc.ideal()?;
            let gb = groebner::buchberger(&ideal)?;
            let finite = gb.is_finite_quotient();
            let top = if finite { gb.socle_degree()? } else { 2 * ideal.iter().filter_map(|p| p.degree()).max().unwrap_or(2) };
            let hilbert: Vec<u64> = (0..=top as i64).map(|d| gb.hilbert_function(d)).collect();
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "basis": gb.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                        "finite": finite,
                        "hilbert": hilbert,
                    }))?
                );
            } else {
                println!("reduced basis:");
                for g in gb.generators() {
                    println!("  {g}");
                }
                println!("finite quotient: {}", if finite { "yes" } else { "no" });
                let values: Vec<String> = hilbert
                    .iter()
                    .enumerate()
                    .filter(|(d, _)| d % 2 == 0)
                    .map(|(d, v)| format!("{d}:{v}"))
                    .collect();
                println!(
                    "hilbert function{}: {}",
                    if finite { "" } else { " (truncated)" },
                    values.join(" ")
                );
            }
            Ok(0)
        }
        Command::MinimalModel { file, up_to } => {
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("cannot read {}", file.display()))?;
            let doc = parse_document(&text)?;
            let pres = doc.presentation()?;
            let bound = match up_to {
                Some(b) => b,
                None => 2 * pres.formal_dimension()?,
            };
            let model = minimal_model_from_ring(&pres, bound)?;
            print!("{}", model.to_cdga_string());
            Ok(0)
        }
        Command::CiScan { max_dim, max_degree } => {
            let entries = ci::scan(max_dim, max_degree)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&entries)?);
            } else {
                for e in &entries {
                    let row: Vec<String> =
                        e.middle_row.iter().map(|h| h.to_string()).collect();
                    let level = e
                        .level
                        .map(|l| l.to_string())
                        .unwrap_or_else(|| "-inf".into());
                    println!(
                        "{:<18} middle=({}) level={} {} ({})",
                        e.config.label(),
                        row.join(","),
                        level,
                        if e.elliptic { "elliptic-candidate" } else { "rejected" },
                        e.reason
                    );
                }
            }
            Ok(0)
        }
        Command::CheckModel { which, params } => {
            let mut failures = 0usize;
            let mut reports = Vec::new();
            match which {
                ModelKind::C => {
                    let mut samples = match &params {
                        Some(p) => parse_rational_list(p)?,
                        None => fourfold::default_model_c_samples(),
                    };
                    shuffle_with_seed(&mut samples, cli.seed);
                    for beta in &samples {
                        match fourfold::check_model_c(beta) {
                            Ok(check) => reports.push(json!({
                                "beta": beta.to_string(),
                                "elliptic": check.elliptic,
                                "betti": check.betti.entries(),
                                "generator_degrees": check.generator_degrees,
                                "radical_power_contained": check.radical_power_contained,
                            })),
                            Err(e) => {
                                failures += 1;
                                reports.push(json!({"beta": beta.to_string(), "error": e.to_string()}));
                            }
                        }
                    }
                }
                ModelKind::D => {
                    let mut samples = match &params {
                        Some(p) => parse_pair_list(p)?,
                        None => fourfold::default_model_d_samples(),
                    };
                    shuffle_with_seed(&mut samples, cli.seed);
                    for (alpha, beta) in &samples {
                        match fourfold::check_model_d(alpha, beta) {
                            Ok(check) => reports.push(json!({
                                "alpha": alpha.to_string(),
                                "beta": beta.to_string(),
                                "elliptic": check.elliptic,
                                "betti": check.betti.entries(),
                                "generator_degrees": check.generator_degrees,
                                "hr_valid": check.hr_valid,
                            })),
                            Err(e) => {
                                failures += 1;
                                reports.push(json!({
                                    "alpha": alpha.to_string(),
                                    "beta": beta.to_string(),
                                    "error": e.to_string(),
                                }));
                            }
                        }
                    }
                }
                ModelKind::I => {
                    let mut samples = match &params {
                        Some(p) => parse_pair_list(p)?,
                        None => fourfold::default_shape_i_samples(),
                    };
                    shuffle_with_seed(&mut samples, cli.seed);
                    match fourfold::exclusion_b2_4_shape_i(&samples) {
                        Ok(record) => reports.push(serde_json::to_value(&record)?),
                        Err(e) => {
                            failures += 1;
                            reports.push(json!({"error": e.to_string()}));
                        }
                    }
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    println!("{r}");
                }
                println!(
                    "{}",
                    if failures == 0 {
                        "all checks passed".to_string()
                    } else {
                        format!("{failures} check(s) failed")
                    }
                );
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
