use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use btchow::chow::{
    base_change_cokernel, base_change_kernel, check_h1, chow_group, ideal_i, ideal_i_exhaustive, ComputeOptions,
    ValidatedProblem,
};
use btchow::groups::Subgroup;
use btchow::lattice::AbelianGroupStructure;
use btchow::symalg::invariants_by_kernel;
use btchow::weil::{lemma12_check, strata};
use btchow::Error;
use clap::{Parser, ValueEnum};
use rayon::prelude::*;

use crate::error::{CliError, EXIT_OK};
use crate::problem::{parse_problem, parse_tasks, DegreeRange, ProblemFile, Task, TaskList};
use crate::report::{DegreeRecord, GroupRecord, H1Record, OracleRecord, ReportFile, StrataRecord, StratumRecord, WitnessRecord};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Structured,
}

/// Chow groups of classifying spaces of tori, computed degree by degree.
#[derive(Clone, Debug, Parser)]
#[command(name = "btchow", version)]
pub struct Args {
    /// Problem file (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Inclusive degree range such as `1..3`; overrides the file.
    #[arg(long, value_parser = |s: &str| s.parse::<DegreeRange>())]
    pub degrees: Option<DegreeRange>,
    /// Comma-separated tasks (chow, kernel, cokernel, h1-check, strata) or `all`.
    #[arg(long, value_parser = parse_tasks)]
    pub tasks: Option<TaskList>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Re-derive the ideal from every subgroup and the invariants by the
    /// kernel method, and fail unless both agree with the fast path.
    #[arg(long)]
    pub oracle: bool,
    /// Refuse groups with more elements than this (default 256).
    #[arg(long)]
    pub max_group_order: Option<usize>,
    /// Refuse degrees above this (default 6).
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Settings after merging the file with command-line overrides.
#[derive(Clone, Debug)]
pub struct Settings {
    pub degrees: DegreeRange,
    pub tasks: Vec<Task>,
    pub oracle: bool,
    pub options: ComputeOptions,
}

impl Settings {
    pub fn from_file(file: &ProblemFile) -> Self {
        let mut tasks = file.tasks.clone();
        tasks.sort();
        tasks.dedup();
        Settings { degrees: file.degrees, tasks, oracle: file.options.oracle, options: file.compute_options() }
    }

    pub fn merged(file: &ProblemFile, args: &Args) -> Self {
        let mut s = Settings::from_file(file);
        if let Some(d) = args.degrees {
            s.degrees = d;
        }
        if let Some(t) = &args.tasks {
            s.tasks = t.0.clone();
        }
        s.oracle |= args.oracle;
        if let Some(m) = args.max_group_order {
            s.options.max_group_order = m;
        }
        if let Some(m) = args.max_degree {
            s.options.max_degree = m;
        }
        s
    }

    fn wants(&self, t: Task) -> bool {
        self.tasks.contains(&t)
    }
}

/// Runs the requested tasks and assembles the report.
pub fn execute(file: &ProblemFile, settings: &Settings) -> Result<ReportFile, CliError> {
    let group = file.build_group(settings.options)?;
    let mut report = ReportFile {
        problem: file.name.clone(),
        group_order: group.order(),
        q_rank: group.degree(),
        p_rank: None,
        t_rank: None,
        tasks: settings.tasks.iter().map(|t| t.name().to_string()).collect(),
        degrees: Vec::new(),
        strata: Vec::new(),
        oracle: Vec::new(),
    };
    let algebraic = [Task::Chow, Task::Kernel, Task::Cokernel, Task::H1Check].iter().any(|&t| settings.wants(t));
    if algebraic || settings.oracle {
        let vp = file.resolution(group.clone()).validate(settings.options)?;
        report.p_rank = Some(vp.p_rank());
        report.t_rank = Some(vp.t_rank());
        let labels = file.labels();
        let degrees: Vec<usize> = settings.degrees.iter().collect();
        if let Some(&d) = degrees.iter().find(|&&d| d > settings.options.max_degree) {
            return Err(Error::DegreeTooLarge { degree: d, cap: settings.options.max_degree }.into());
        }
        if algebraic {
            report.degrees =
                degrees.par_iter().map(|&d| degree_record(&vp, d, settings, &labels)).collect::<Result<_, _>>()?;
        }
        if settings.oracle {
            report.oracle = degrees.iter().map(|&d| oracle_record(&vp, d)).collect::<Result<_, _>>()?;
        }
    }
    if settings.wants(Task::Strata) {
        let gs = file.gamma_set(group)?;
        for p in 0..=gs.points() {
            let mut records = Vec::new();
            for s in strata(&gs, p)? {
                let check = lemma12_check(&gs, &s.subset)?;
                if !check.passed {
                    return Err(Error::InvariantViolation(format!("complement check failed: {}", check.details)).into());
                }
                records.push(StratumRecord::new(&s, &check));
            }
            report.strata.push(StrataRecord { p, strata: records });
        }
    }
    Ok(report)
}

fn degree_record(vp: &ValidatedProblem, d: usize, settings: &Settings, labels: &[String]) -> Result<DegreeRecord, CliError> {
    let start = Instant::now();
    let mut record = DegreeRecord {
        degree: d,
        chow_group: None,
        kernel: None,
        cokernel: None,
        h1: None,
        witnesses: Vec::new(),
        timing_ms: 0.0,
    };
    if settings.wants(Task::Chow) {
        record.chow_group = Some((&chow_group(vp, d)?).into());
    }
    if settings.wants(Task::Kernel) {
        let k = base_change_kernel(vp, d)?;
        let piece = vp.q().piece(d)?;
        record.kernel = Some((&k.structure).into());
        record.witnesses = k.witnesses.iter().map(|w| WitnessRecord::new(w, piece, labels)).collect();
    }
    let mut cokernel: Option<AbelianGroupStructure> = None;
    if settings.wants(Task::Cokernel) || settings.wants(Task::H1Check) {
        cokernel = Some(base_change_cokernel(vp, d)?);
    }
    if settings.wants(Task::Cokernel) {
        record.cokernel = cokernel.as_ref().map(GroupRecord::from);
    }
    if settings.wants(Task::H1Check) {
        let h = check_h1(vp, d, cokernel.as_ref().expect("computed above"))?;
        record.h1 = Some(H1Record { h1: (&h.h1).into(), ambient: h.ambient.as_ref().map(Into::into), compared: h.compared });
    }
    record.timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(record)
}

fn oracle_record(vp: &ValidatedProblem, d: usize) -> Result<OracleRecord, CliError> {
    let ideal_matches_exhaustive = ideal_i(vp, d)? == ideal_i_exhaustive(vp, d)?;
    let whole = Subgroup::whole(vp.group());
    let q_kernel = invariants_by_kernel(vp.q().piece(d)?, vp.q().action(d)?, vp.group(), &whole);
    let t_kernel = invariants_by_kernel(vp.t().piece(d)?, vp.t().action(d)?, vp.group(), &whole);
    let invariants_match_kernel_method = q_kernel == vp.q_invariants(d)? && t_kernel == vp.t_invariants(d)?;
    if !ideal_matches_exhaustive || !invariants_match_kernel_method {
        return Err(Error::InvariantViolation(format!(
            "oracle disagreement in degree {d}: ideal {ideal_matches_exhaustive}, invariants {invariants_match_kernel_method}"
        ))
        .into());
    }
    Ok(OracleRecord { degree: d, ideal_matches_exhaustive, invariants_match_kernel_method })
}

fn cell(g: &Option<GroupRecord>) -> String {
    g.as_ref().map_or_else(|| "-".to_string(), |g| g.text.clone())
}

/// Human-readable rendering of a report.
pub fn render_table(r: &ReportFile) -> String {
    let mut out = String::new();
    let name = if r.problem.is_empty() { "problem" } else { r.problem.as_str() };
    let _ = write!(out, "{name}: group order {}, rank Q {}", r.group_order, r.q_rank);
    if let (Some(p), Some(t)) = (r.p_rank, r.t_rank) {
        let _ = write!(out, ", rank P {p}, rank T {t}");
    }
    out.push('\n');
    if !r.degrees.is_empty() {
        let rows: Vec<[String; 5]> = r
            .degrees
            .iter()
            .map(|d| {
                let h1 = d.h1.as_ref().map_or_else(|| "-".to_string(), |h| h.h1.text.clone());
                [d.degree.to_string(), cell(&d.chow_group), cell(&d.kernel), cell(&d.cokernel), h1]
            })
            .collect();
        let header = ["degree", "chow", "kernel", "cokernel", "h1(J)"].map(String::from);
        let widths: Vec<usize> =
            (0..5).map(|i| rows.iter().chain([&header]).map(|row| row[i].chars().count()).max().unwrap_or(0)).collect();
        for row in [&header].into_iter().chain(&rows) {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        for d in &r.degrees {
            for w in &d.witnesses {
                let _ = writeln!(out, "degree {} kernel class of order {}: {}", d.degree, w.order, w.text);
            }
        }
    }
    for s in &r.strata {
        let _ = writeln!(out, "p = {}: {} strata", s.p, s.strata.len());
        for st in &s.strata {
            let blocks: Vec<String> = st
                .blocks
                .iter()
                .map(|b| format!("{:?}/{}", b.points, b.stabilizer_order))
                .collect();
            let _ = writeln!(
                out,
                "  J = {:?}  orbit {}  stabilizer order {}  blocks [{}]  complement check {}",
                st.subset,
                st.orbit_size,
                st.stabilizer_order,
                blocks.join(", "),
                if st.complement_check { "ok" } else { "FAILED" }
            );
        }
    }
    for o in &r.oracle {
        let _ = writeln!(out, "oracle degree {}: exhaustive ideal and kernel-method invariants agree", o.degree);
    }
    out
}

/// Full command: parse, compute, emit. Returns the process exit code.
pub fn run(args: &Args) -> i32 {
    match run_inner(args) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error [{}]: {e}", e.category());
            e.exit_code()
        }
    }
}

fn run_inner(args: &Args) -> Result<(), CliError> {
    let file = parse_problem(&args.input)?;
    let settings = Settings::merged(&file, args);
    let report = execute(&file, &settings)?;
    let text = match args.format {
        Format::Table => render_table(&report),
        Format::Structured => report.to_json() + "\n",
    };
    match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Output(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Output(e.to_string())),
    }
}
