//! Command-line front end: catalog listing, single-group forbidden-subgraph
//! checks, exhaustive audits with JSON reports, power-graph export, and
//! Cayley-table ingestion.
//!
//! Exit codes: 0 success / nothing found, 1 pattern found or audit
//! disagreement, 2 usage or construction error.

use clap::{Parser, Subcommand, ValueEnum};
use powergraph::catalog::{self, CatalogSpec, Family, GroupDescriptor};
use powergraph::classify::{self, AuditReport};
use powergraph::forbidden;
use powergraph::groups::{self, FiniteGroup};
use powergraph::pgraph::{power_graph, PowerGraph};
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "powergraph",
    version,
    about = "Power graphs of small finite groups: forbidden-subgraph checks and classification audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the generated group catalog
    Catalog {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        /// Comma-separated families (cyclic, abelian, dihedral, quaternion,
        /// semidihedral, modular, elementary, semidirect_pq,
        /// permutation_named) or "all"
        #[arg(long, default_value = "all")]
        families: String,
    },
    /// Search one group's power graph for forbidden induced subgraphs
    Check {
        /// Group descriptor: Z12, Z2xZ2xZ3, D8, Q16, SD16, M27, E8,
        /// Z7:Z3(2), S4, A5, or `file:<path>`
        descriptor: String,
        /// Comma-separated patterns: claw (K1,3), k14 (K1,4), c4, triangle (K3)
        #[arg(long, default_value = "claw,k14,c4,triangle")]
        patterns: String,
    },
    /// Audit the catalog: every structural predicate against brute force
    Audit {
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        #[arg(long, default_value = "all")]
        families: String,
        /// Output path for the JSON report
        #[arg(long)]
        out: std::path::PathBuf,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Export a group's power graph
    Export {
        descriptor: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Output path ("-" for stdout)
        #[arg(long)]
        out: String,
    },
    /// Validate a Cayley-table file and print group facts
    Ingest { path: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog { max_order, families } => cmd_catalog(max_order, &families),
        Command::Check { descriptor, patterns } => cmd_check(&descriptor, &patterns),
        Command::Audit {
            max_order,
            families,
            out,
            jobs,
        } => cmd_audit(max_order, &families, &out, jobs),
        Command::Export {
            descriptor,
            format,
            out,
        } => cmd_export(&descriptor, format, &out),
        Command::Ingest { path } => cmd_ingest(&path),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_families(text: &str) -> Result<CatalogSpec, String> {
    let families = if text == "all" {
        Family::ALL.into_iter().collect()
    } else {
        text.split(',')
            .map(|tok| tok.trim().parse::<Family>())
            .collect::<Result<_, _>>()?
    };
    Ok(CatalogSpec {
        max_order: 0,
        families,
    })
}

fn build_catalog(max_order: usize, families: &str) -> Result<(CatalogSpec, Vec<FiniteGroup>), String> {
    if max_order > groups::DEFAULT_ORDER_BOUND {
        return Err(format!(
            "max order {max_order} exceeds the construction bound {}",
            groups::DEFAULT_ORDER_BOUND
        ));
    }
    let mut spec = parse_families(families)?;
    spec.max_order = max_order;
    let cat = catalog::generate(&spec).map_err(|e| e.to_string())?;
    Ok((spec, cat))
}

fn cmd_catalog(max_order: usize, families: &str) -> Result<ExitCode, String> {
    let (_, cat) = build_catalog(max_order, families)?;
    for g in cat {
        println!("{:>5}  {}", g.order(), g.label());
    }
    Ok(ExitCode::SUCCESS)
}

/// Requested patterns as (display name, detector kind).
enum PatternKind {
    Star(usize),
    FourCycle,
    Triangle,
}

fn parse_patterns(text: &str) -> Result<Vec<(String, PatternKind)>, String> {
    let mut out = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token.to_ascii_lowercase().as_str() {
            "claw" | "k13" | "k1.3" => out.push(("K1,3".to_string(), PatternKind::Star(3))),
            "k14" | "k1.4" => out.push(("K1,4".to_string(), PatternKind::Star(4))),
            "c4" => out.push(("C4".to_string(), PatternKind::FourCycle)),
            "triangle" | "k3" => out.push(("K3".to_string(), PatternKind::Triangle)),
            other => {
                return Err(format!(
                    "unknown pattern {other:?} (use claw, k14, c4, triangle)"
                ))
            }
        }
    }
    if out.is_empty() {
        return Err("no patterns requested".to_string());
    }
    Ok(out)
}

fn describe_witness(g: &FiniteGroup, vertices: &[usize]) -> String {
    let tuples: Vec<String> = vertices
        .iter()
        .map(|&v| format!("({v}, {})", g.element_order(v)))
        .collect();
    format!("[{}]", tuples.join(", "))
}

fn cmd_check(descriptor: &str, patterns: &str) -> Result<ExitCode, String> {
    let wanted = parse_patterns(patterns)?;
    let desc = GroupDescriptor::parse(descriptor).map_err(|e| e.to_string())?;
    let g = desc.build().map_err(|e| e.to_string())?;
    let graph = power_graph(&g);
    println!("{} (order {})", g.label(), g.order());
    let mut any_found = false;
    for (name, kind) in wanted {
        let witness = match kind {
            PatternKind::Star(r) => forbidden::is_k1r_free(&graph, r),
            PatternKind::FourCycle => forbidden::has_induced_c4(&graph),
            PatternKind::Triangle => forbidden::is_triangle_free(&graph),
        };
        match witness {
            Some(w) => {
                any_found = true;
                println!("{name}: found {}", describe_witness(&g, &w.vertices));
            }
            None => println!("{name}: free"),
        }
    }
    Ok(if any_found {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct Disagreement {
    group: String,
    claim: String,
}

#[derive(Serialize)]
struct AuditSummary {
    groups_audited: usize,
    claims_checked: usize,
    disagreements: Vec<Disagreement>,
}

#[derive(Serialize)]
struct AuditFile {
    schema: u32,
    max_order: usize,
    families: Vec<String>,
    groups: Vec<AuditReport>,
    summary: AuditSummary,
}

/// Hard cap for audits: the brute-force four-cycle scan is O(n^4) in the
/// worst case, so audited groups stay well below the construction bound.
const AUDIT_MAX_ORDER: usize = 500;

fn cmd_audit(
    max_order: usize,
    families: &str,
    out: &std::path::Path,
    jobs: usize,
) -> Result<ExitCode, String> {
    let start = Instant::now();
    if max_order > AUDIT_MAX_ORDER {
        return Err(format!(
            "audit max order {max_order} exceeds the audit cap {AUDIT_MAX_ORDER}"
        ));
    }
    let (spec, catalog) = build_catalog(max_order, families)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let reports: Vec<AuditReport> = pool.install(|| {
        use rayon::prelude::*;
        catalog.par_iter().map(classify::audit_group).collect()
    });

    let mut disagreements = Vec::new();
    let mut claims = 0usize;
    for report in &reports {
        claims += report.verdicts.len();
        let bad: Vec<&str> = report.disagreements().map(|v| v.claim.as_str()).collect();
        if bad.is_empty() {
            println!(
                "{} (order {}): ok — {} claims",
                report.group_label,
                report.group_order,
                report.verdicts.len()
            );
        } else {
            println!(
                "{} (order {}): DISAGREE [{}]",
                report.group_label,
                report.group_order,
                bad.join(", ")
            );
            for claim in bad {
                disagreements.push(Disagreement {
                    group: report.group_label.clone(),
                    claim: claim.to_string(),
                });
            }
        }
    }

    let file = AuditFile {
        schema: 1,
        max_order,
        families: spec.families.iter().map(|f| f.name().to_string()).collect(),
        groups: reports,
        summary: AuditSummary {
            groups_audited: catalog.len(),
            claims_checked: claims,
            disagreements,
        },
    };
    let mut text = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())?;
    text.push('\n');
    std::fs::write(out, text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;

    let n_bad = file.summary.disagreements.len();
    println!(
        "groups audited: {}, claims checked: {}, disagreements: {} ({:.1?})",
        file.summary.groups_audited,
        claims,
        n_bad,
        start.elapsed()
    );
    println!("report written to {}", out.display());
    Ok(if n_bad == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render_export(g: &FiniteGroup, graph: &PowerGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => {
            let orders: Vec<u64> = g.elements().map(|i| g.element_order(i)).collect();
            graph.to_dot(&orders)
        }
        ExportFormat::Json => graph.to_json(),
    }
}

fn cmd_export(descriptor: &str, format: ExportFormat, out: &str) -> Result<ExitCode, String> {
    let desc = GroupDescriptor::parse(descriptor).map_err(|e| e.to_string())?;
    let g = desc.build().map_err(|e| e.to_string())?;
    let graph = power_graph(&g);
    let text = render_export(&g, &graph, format);
    if out == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string())?;
    } else {
        std::fs::write(out, text).map_err(|e| format!("cannot write {out}: {e}"))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ingest(path: &str) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let g = FiniteGroup::from_cayley_text(&text, &format!("file:{path}"))
        .map_err(|e| e.to_string())?;
    let spectrum: Vec<String> = groups::order_spectrum(&g)
        .into_iter()
        .map(|o| o.to_string())
        .collect();
    println!("label: {}", g.label());
    println!("order: {}", g.order());
    println!("exponent: {}", groups::exponent(&g));
    println!("cyclic: {}", groups::is_cyclic(&g));
    println!("nilpotent: {}", groups::is_nilpotent(&g));
    println!("order spectrum: {{{}}}", spectrum.join(", "));
    println!("center order: {}", groups::center(&g).count());
    println!(
        "maximal cyclic subgroups: {}",
        groups::maximal_cyclic_subgroups(&g).len()
    );
    Ok(ExitCode::SUCCESS)
}
