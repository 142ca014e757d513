//! Implementations of the CLI subcommands.

use std::f64::consts::PI;
use std::path::Path;
use std::sync::Mutex;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hypin::domain_enum::{enumerate_tree_types, GroupSpec, TreeTypeSolution};
use hypin::hyp_trig::solve_circumscribed_radius;
use hypin::incircle::{optimal_radius_closed_form, solve_incircle, IncircleResult};
use hypin::lagrange::{
    build_system, bordered_hessian_check, find_stationary, LagrangeSystem, StationaryReport,
    Verdict,
};
use hypin::render::{layout_polygon, render_svg, RenderOptions};

use crate::output::{emit, round_sig, to_json_bytes, Format};
use crate::CliError;

fn group(l: u32) -> Result<GroupSpec, CliError> {
    GroupSpec::new(l).map_err(|e| CliError::usage(e.to_string()))
}

// ---------------------------------------------------------------------------
// enumerate

#[derive(Serialize)]
struct CensusRow {
    index: usize,
    descriptor: String,
    w: u32,
    n: u32,
    rotational_counts: Vec<u32>,
    additional_counts: Vec<u32>,
}

#[derive(Serialize)]
struct EnumerateReport {
    l: u32,
    count: usize,
    censuses: Vec<CensusRow>,
}

pub fn cmd_enumerate(l: u32, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let g = group(l)?;
    let censuses = enumerate_tree_types(g);
    let bytes = match format {
        Format::Json => {
            let report = EnumerateReport {
                l,
                count: censuses.len(),
                censuses: censuses
                    .iter()
                    .enumerate()
                    .map(|(i, t)| CensusRow {
                        index: i + 1,
                        descriptor: t.descriptor(),
                        w: t.w(),
                        n: t.n(),
                        rotational_counts: t.rotational_counts().to_vec(),
                        additional_counts: t.additional_counts().to_vec(),
                    })
                    .collect(),
            };
            to_json_bytes(&report)?
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["w".to_string()];
            header.extend((1..l).map(|i| format!("A{i}")));
            header.extend((3..=l).map(|j| format!("B{j}")));
            header.push("n".to_string());
            writer.write_record(&header).map_err(csv_err)?;
            for t in &censuses {
                let mut record = vec![t.w().to_string()];
                record.extend(t.rotational_counts().iter().map(u32::to_string));
                record.extend(t.additional_counts().iter().map(u32::to_string));
                record.push(t.n().to_string());
                writer.write_record(&record).map_err(csv_err)?;
            }
            writer.into_inner().map_err(|e| CliError::usage(e.to_string()))?
        }
    };
    emit(out, &bytes, Some(l), None)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::usage(format!("csv serialization failed: {e}"))
}

// ---------------------------------------------------------------------------
// solve

#[derive(Serialize)]
struct SolveRow {
    index: usize,
    census: String,
    w: u32,
    n: u32,
    beta1: f64,
    x: f64,
    cosh_x: f64,
    polygon_area: f64,
    circle_area: f64,
    density: f64,
}

#[derive(Serialize)]
struct BestBlock {
    index: usize,
    census: String,
    x: f64,
    closed_form_x: f64,
    abs_diff: f64,
}

#[derive(Serialize)]
struct SolveReport {
    l: u32,
    tol: f64,
    rows: Vec<SolveRow>,
    best: BestBlock,
}

/// Solves every census, optionally across `threads` workers. Results are
/// reassembled by census index, so the output is independent of scheduling.
pub fn solve_all(
    g: GroupSpec,
    tol: f64,
    threads: usize,
) -> Result<Vec<(TreeTypeSolution, IncircleResult)>, CliError> {
    let censuses = enumerate_tree_types(g);
    let n = censuses.len();
    let slots: Mutex<Vec<Option<Result<IncircleResult, hypin::Error>>>> =
        Mutex::new((0..n).map(|_| None).collect());
    if threads <= 1 {
        let mut slots = slots.into_inner().unwrap();
        for (i, sol) in censuses.iter().enumerate() {
            slots[i] = Some(solve_incircle(sol, g, tol));
        }
        return collect_solutions(censuses, slots);
    }
    std::thread::scope(|scope| {
        for worker in 0..threads.min(n) {
            let censuses = &censuses;
            let slots = &slots;
            scope.spawn(move || {
                for i in (worker..n).step_by(threads) {
                    let result = solve_incircle(&censuses[i], g, tol);
                    slots.lock().unwrap()[i] = Some(result);
                }
            });
        }
    });
    let slots = slots.into_inner().unwrap();
    collect_solutions(censuses, slots)
}

fn collect_solutions(
    censuses: Vec<TreeTypeSolution>,
    slots: Vec<Option<Result<IncircleResult, hypin::Error>>>,
) -> Result<Vec<(TreeTypeSolution, IncircleResult)>, CliError> {
    censuses
        .into_iter()
        .zip(slots)
        .map(|(sol, slot)| {
            let descriptor = sol.descriptor();
            slot.expect("every census solved")
                .map(|res| (sol, res))
                .map_err(|e| CliError::solver(format!("census {descriptor}: {e}")))
        })
        .collect()
}

pub fn cmd_solve(
    l: u32,
    tol: f64,
    threads: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = group(l)?;
    let solved = solve_all(g, tol, threads)?;
    let rows: Vec<SolveRow> = solved
        .iter()
        .enumerate()
        .map(|(i, (sol, res))| SolveRow {
            index: i + 1,
            census: sol.descriptor(),
            w: sol.w(),
            n: sol.n(),
            beta1: round_sig(res.beta1.radians()),
            x: round_sig(res.radius.x()),
            cosh_x: round_sig(res.radius.cosh_x()),
            polygon_area: round_sig(res.polygon_area),
            circle_area: round_sig(res.circle_area),
            density: round_sig(res.density),
        })
        .collect();
    let best_idx = solved
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.radius.x().total_cmp(&b.1 .1.radius.x()))
        .map(|(i, _)| i)
        .expect("at least one census");
    let closed = optimal_radius_closed_form(g);
    let best = BestBlock {
        index: best_idx + 1,
        census: solved[best_idx].0.descriptor(),
        x: round_sig(solved[best_idx].1.radius.x()),
        closed_form_x: round_sig(closed.x()),
        abs_diff: round_sig((solved[best_idx].1.radius.x() - closed.x()).abs()),
    };

    let bytes = match format {
        Format::Json => to_json_bytes(&SolveReport { l, tol, rows, best })?,
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record([
                    "index",
                    "census",
                    "w",
                    "n",
                    "beta1",
                    "x",
                    "cosh_x",
                    "polygon_area",
                    "circle_area",
                    "density",
                ])
                .map_err(csv_err)?;
            for r in &rows {
                writer
                    .write_record([
                        r.index.to_string(),
                        r.census.clone(),
                        r.w.to_string(),
                        r.n.to_string(),
                        r.beta1.to_string(),
                        r.x.to_string(),
                        r.cosh_x.to_string(),
                        r.polygon_area.to_string(),
                        r.circle_area.to_string(),
                        r.density.to_string(),
                    ])
                    .map_err(csv_err)?;
            }
            // The maximizer summary goes to stderr so the CSV body stays a
            // clean table.
            eprintln!(
                "best: census {} (index {}), x = {}, closed form {}, |diff| = {:.3e}",
                best.census, best.index, best.x, best.closed_form_x, best.abs_diff
            );
            writer.into_inner().map_err(|e| CliError::usage(e.to_string()))?
        }
    };
    emit(out, &bytes, Some(l), Some(tol))
}

// ---------------------------------------------------------------------------
// render

pub fn cmd_render(l: u32, type_index: usize, out: &Path) -> Result<(), CliError> {
    let g = group(l)?;
    let censuses = enumerate_tree_types(g);
    if type_index == 0 || type_index > censuses.len() {
        return Err(CliError::usage(format!(
            "type index {type_index} outside 1..={} for l = {l}",
            censuses.len()
        )));
    }
    let sol = &censuses[type_index - 1];
    let res = solve_incircle(sol, g, hypin::incircle::DEFAULT_TOL)
        .map_err(|e| CliError::solver(e.to_string()))?;
    let layout = layout_polygon(sol, &res).map_err(|e| CliError::solver(e.to_string()))?;
    let svg = render_svg(&layout, &RenderOptions::default())
        .map_err(|e| CliError::solver(e.to_string()))?;
    crate::output::write_with_manifest(out, &svg, Some(l), None)
}

// ---------------------------------------------------------------------------
// optimize

#[derive(Serialize)]
struct StartReport {
    start: usize,
    objective: f64,
    gradient_norm: f64,
    residual_norm: f64,
    verdict: Verdict,
    theta: f64,
    alphas: Vec<f64>,
}

#[derive(Serialize)]
struct OptimizeReport {
    type_id: u8,
    seed: u64,
    starts: Vec<StartReport>,
    best_objective: f64,
    best_verdict: Verdict,
}

/// Zero-sum jitter of one additional point's angles, kept inside (0, pi).
fn jittered_group(rng: &mut ChaCha8Rng, size: usize, spread: f64) -> Vec<f64> {
    let base = 2.0 * PI / size as f64;
    loop {
        let mut deltas: Vec<f64> = (0..size - 1)
            .map(|_| rng.gen_range(-spread..spread))
            .collect();
        deltas.push(-deltas.iter().sum::<f64>());
        let angles: Vec<f64> = deltas.iter().map(|d| base + d).collect();
        if angles.iter().all(|&a| a > 0.2 && a < PI - 0.2) {
            return angles;
        }
    }
}

fn seeded_starts(
    system: &LagrangeSystem,
    seed: u64,
    count: usize,
) -> Result<Vec<hypin::lagrange::ConfigurationVector>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![system.regular_point()];
    let group_sizes: Vec<usize> = match system.type_id() {
        3 => vec![4],
        4 => vec![3],
        5 => vec![3, 3],
        _ => unreachable!("validated by build_system"),
    };
    while starts.len() < count {
        let mut alphas = Vec::new();
        for &size in &group_sizes {
            alphas.extend(jittered_group(&mut rng, size, 0.4));
        }
        // The system's group layout for type 5 interleaves the second group,
        // so map group-major samples onto the variable order.
        let arranged = match system.type_id() {
            5 => vec![alphas[0], alphas[1], alphas[3], alphas[4], alphas[5], alphas[2]],
            _ => alphas,
        };
        starts.push(
            system
                .feasible_from_alphas(&arranged)
                .map_err(|e| CliError::optimizer(e.to_string()))?,
        );
    }
    Ok(starts)
}

pub fn cmd_optimize(type_id: u8, seed: u64, out: Option<&Path>) -> Result<(), CliError> {
    let system = build_system(type_id).map_err(|e| CliError::usage(e.to_string()))?;
    let starts = seeded_starts(&system, seed, 8)?;
    let mut reports: Vec<StationaryReport> = Vec::new();
    for initial in &starts {
        match find_stationary(&system, initial) {
            Ok(report) => {
                let report = if report.lagrangian_gradient_norm < 1e-8 {
                    bordered_hessian_check(&system, &report)
                        .map_err(|e| CliError::optimizer(e.to_string()))?
                } else {
                    report
                };
                reports.push(report);
            }
            Err(hypin::Error::SingularSystem(_)) | Err(hypin::Error::NonConvergence(_)) => continue,
            Err(e) => return Err(CliError::optimizer(e.to_string())),
        }
    }
    let converged = reports
        .iter()
        .filter(|r| r.lagrangian_gradient_norm < 1e-8)
        .count();
    if converged == 0 {
        return Err(CliError::optimizer(format!(
            "no start converged for type {type_id} (seed {seed})"
        )));
    }

    // Deterministic merge: best objective first, ties by lexicographic point.
    let mut indexed: Vec<(usize, f64)> = reports
        .iter()
        .enumerate()
        .map(|(i, r)| (i, system.objective(&r.point.to_vector())))
        .collect();
    indexed.sort_by(|a, b| {
        b.1.total_cmp(&a.1).then_with(|| {
            let pa = reports[a.0].point.to_vector();
            let pb = reports[b.0].point.to_vector();
            pa.partial_cmp(&pb).unwrap_or(std::cmp::Ordering::Equal)
        })
    });

    let starts_out: Vec<StartReport> = indexed
        .iter()
        .map(|&(i, f)| StartReport {
            start: i,
            objective: round_sig(f),
            gradient_norm: round_sig(reports[i].lagrangian_gradient_norm),
            residual_norm: round_sig(reports[i].constraint_residual_norm),
            verdict: reports[i].bordered_hessian_verdict,
            theta: round_sig(reports[i].point.theta.radians()),
            alphas: reports[i]
                .point
                .alphas
                .iter()
                .map(|a| round_sig(a.radians()))
                .collect(),
        })
        .collect();
    let report = OptimizeReport {
        type_id,
        seed,
        best_objective: starts_out[0].objective,
        best_verdict: starts_out[0].verdict,
        starts: starts_out,
    };
    emit(out, &to_json_bytes(&report)?, None, None)
}

// ---------------------------------------------------------------------------
// shared sampling used by verify

/// Random feasible type-5 configuration and an in-group pair index.
pub fn random_type5_config(
    system: &LagrangeSystem,
    rng: &mut ChaCha8Rng,
) -> Result<(hypin::lagrange::ConfigurationVector, usize, usize), CliError> {
    let g1 = jittered_group(rng, 3, 0.5);
    let g2 = jittered_group(rng, 3, 0.5);
    let alphas = [g1[0], g1[1], g2[0], g2[1], g2[2], g1[2]];
    let config = system
        .feasible_from_alphas(&alphas)
        .map_err(|e| CliError::optimizer(e.to_string()))?;
    let (i, j) = if rng.gen_bool(0.5) { (0, 1) } else { (2, 3) };
    Ok((config, i, j))
}

/// Radius of a configuration's circumscribed circle.
pub fn config_radius(config: &hypin::lagrange::ConfigurationVector) -> Result<f64, CliError> {
    let list = config
        .full_angle_list()
        .map_err(|e| CliError::optimizer(e.to_string()))?;
    solve_circumscribed_radius(&list)
        .map(|r| r.x())
        .map_err(|e| CliError::optimizer(e.to_string()))
}
