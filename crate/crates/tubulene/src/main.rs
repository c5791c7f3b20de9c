use std::io::Write;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tubulene::armchair::TubuleneParams;
use tubulene::closed_form;
use tubulene::gp;
use tubulene::serialize::{edge_list_text, GraphJson};
use tubulene::symmetry::{
    automorphism_group, brute_force_automorphisms, group_structure, orbits_from_action,
    theorem_orbits, DEFAULT_BRUTE_CAP,
};
use tubulene::verify::{run_sweep, SweepRange, VerificationRecord, VerifyOptions};

/// Armchair nanotube graphs: construction, automorphisms, orbits, and
/// exact Wiener / Graovac-Pisanski indices.
#[derive(Parser)]
#[command(name = "tubulene", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build AT(n, p) and print it to stdout.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = BuildFormat::Json)]
        format: BuildFormat,
    },
    /// Compute the Graovac-Pisanski index by the chosen method(s).
    Gp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = GpMethod::All)]
        method: GpMethod,
    },
    /// Compute the Wiener index of AT(n, p) by BFS.
    Wiener {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
    /// Print the vertex orbits, one sorted id list per line.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value_t = OrbitMethod::Theorem)]
        method: OrbitMethod,
    },
    /// Print the automorphism group, one permutation per line in cycle
    /// notation.
    Auts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Append the dihedral-times-Z2 structure report.
        #[arg(long)]
        check_structure: bool,
        /// Enumerate by backtracking search instead of rim extension.
        /// Subject to the AT_MAX_BRUTE_VERTICES cap (default 700).
        #[arg(long)]
        brute_force: bool,
    },
    /// Sweep (n, p) ranges and emit one verification record per point.
    /// Exits nonzero iff any record fails.
    Verify {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        p_min: usize,
        #[arg(long)]
        p_max: usize,
        /// Worker threads; records are emitted in (n, p) order regardless.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Skip BFS-oracle checks for graphs larger than this.
        #[arg(long, default_value_t = 5000)]
        max_oracle_vertices: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Json,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GpMethod {
    Oracle,
    Summation,
    Table5,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitMethod {
    Theorem,
    Action,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build { n, p, format } => cmd_build(n, p, format),
        Command::Gp { n, p, method } => cmd_gp(n, p, method),
        Command::Wiener { n, p } => cmd_wiener(n, p),
        Command::Orbits { n, p, method } => cmd_orbits(n, p, method),
        Command::Auts {
            n,
            p,
            check_structure,
            brute_force,
        } => cmd_auts(n, p, check_structure, brute_force),
        Command::Verify {
            n_min,
            n_max,
            p_min,
            p_max,
            jobs,
            format,
            max_oracle_vertices,
        } => cmd_verify(
            n_min,
            n_max,
            p_min,
            p_max,
            jobs,
            format,
            max_oracle_vertices,
        ),
    }
}

fn params(n: usize, p: usize) -> Result<TubuleneParams> {
    TubuleneParams::new(n, p).context("invalid tubulene parameters")
}

fn cmd_build(n: usize, p: usize, format: BuildFormat) -> Result<i32> {
    let params = params(n, p)?;
    let graph = params.build();
    match format {
        BuildFormat::Edges => print!("{}", edge_list_text(&graph)),
        BuildFormat::Json => {
            let doc = GraphJson::from_graph(&params, &graph);
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(0)
}

fn cmd_gp(n: usize, p: usize, method: GpMethod) -> Result<i32> {
    let params = params(n, p)?;
    let mut fields: Vec<String> = vec![format!("\"n\":{n}"), format!("\"p\":{p}")];
    let mut values: Vec<String> = Vec::new();

    if matches!(method, GpMethod::Oracle | GpMethod::All) {
        let graph = params.build();
        let auts = automorphism_group(&graph, &params).context("automorphism enumeration")?;
        let value = gp::gp_by_definition(&graph, &auts)?;
        if !value.is_integer() {
            bail!("index of AT({n},{p}) evaluated to the non-integer {value}");
        }
        let value = value.to_integer();
        fields.push(format!("\"oracle\":{value}"));
        values.push(value.to_string());
    }
    if matches!(method, GpMethod::Summation | GpMethod::All) {
        let value = closed_form::gp_orbit_summation(n, p)?;
        fields.push(format!("\"summation\":{value}"));
        values.push(value.to_string());
    }
    if matches!(method, GpMethod::Table5 | GpMethod::All) {
        match closed_form::gp_table5(n, p)? {
            Some(result) => {
                fields.push(format!("\"table5\":{}", result.value));
                values.push(result.value.to_string());
            }
            None => fields.push("\"table5\":\"not_covered\"".to_string()),
        }
    }
    if method == GpMethod::All {
        let agreement = values.windows(2).all(|w| w[0] == w[1]);
        fields.push(format!("\"agreement\":{agreement}"));
    }
    println!("{{{}}}", fields.join(","));
    Ok(0)
}

fn cmd_wiener(n: usize, p: usize) -> Result<i32> {
    let params = params(n, p)?;
    let graph = params.build();
    println!(
        "{{\"n\":{n},\"p\":{p},\"vertex_count\":{},\"wiener\":{}}}",
        graph.vertex_count(),
        graph.wiener_index()
    );
    Ok(0)
}

fn cmd_orbits(n: usize, p: usize, method: OrbitMethod) -> Result<i32> {
    let params = params(n, p)?;
    let partition = match method {
        OrbitMethod::Theorem => theorem_orbits(&params),
        OrbitMethod::Action => {
            let graph = params.build();
            let auts = automorphism_group(&graph, &params).context("automorphism enumeration")?;
            orbits_from_action(&auts)
        }
    };
    for orbit in partition.orbits() {
        let ids: Vec<String> = orbit.iter().map(|id| id.to_string()).collect();
        println!("{}", ids.join(" "));
    }
    Ok(0)
}

fn brute_cap_from_env() -> Result<usize> {
    match std::env::var("AT_MAX_BRUTE_VERTICES") {
        Ok(text) => text
            .parse::<usize>()
            .with_context(|| format!("AT_MAX_BRUTE_VERTICES is not an integer: {text:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_BRUTE_CAP),
        Err(e) => Err(e).context("AT_MAX_BRUTE_VERTICES"),
    }
}

fn cmd_auts(n: usize, p: usize, check_structure: bool, brute_force: bool) -> Result<i32> {
    let params = params(n, p)?;
    let graph = params.build();
    let auts = if brute_force {
        let cap = brute_cap_from_env()?;
        brute_force_automorphisms(&graph, cap).context("brute-force enumeration")?
    } else {
        automorphism_group(&graph, &params).context("automorphism enumeration")?
    };
    for a in &auts {
        println!("{}", a.cycle_notation());
    }
    if check_structure {
        let report = group_structure(&auts, &params);
        println!("order: {}", report.order);
        println!(
            "dihedral_times_z2: {}",
            report.satisfies_dihedral_times_z2
        );
        if let Some(w) = report.witnesses {
            println!("rotation: {}", w.rotation.cycle_notation());
            println!("reflection: {}", w.reflection.cycle_notation());
            println!("central: {}", w.central.cycle_notation());
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    n_min: usize,
    n_max: usize,
    p_min: usize,
    p_max: usize,
    jobs: usize,
    format: ReportFormat,
    max_oracle_vertices: usize,
) -> Result<i32> {
    let range = SweepRange::new(n_min, n_max, p_min, p_max)?;
    let opts = VerifyOptions {
        max_oracle_vertices,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if matches!(format, ReportFormat::Csv) {
        writeln!(out, "{}", VerificationRecord::csv_header())?;
    }
    let summary = run_sweep(&range, jobs, &opts, |record| {
        let line = match format {
            ReportFormat::Csv => record.to_csv_row(),
            ReportFormat::Json => record.to_json_line(),
        };
        let _ = writeln!(out, "{line}");
        let _ = out.flush();
    })?;
    eprintln!(
        "verify: {} pass, {} fail, {} skipped",
        summary.pass, summary.fail, summary.skipped
    );
    Ok(if summary.all_passed() { 0 } else { 1 })
}
