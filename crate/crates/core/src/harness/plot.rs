//! Long-format plot data: one `panel,series,x,y` row per point.
//!
//! An empty `y` marks a gap (a missing cell or an undefined average).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::{dist_rank, group_by_cell, Cell, SummaryRow};
use crate::boolfn::FunctionClass;
use crate::engine::{Regime, TrialResult};
use crate::error::{Error, Result};
use crate::sampling::DistributionSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Panels per metric, one series per class, x = n.
    SummaryGrid,
    /// Panels per class, one series per n, x = generation, y = mean validation perf.
    FitnessGrid,
    /// Panels per class, one series per distribution, x = n, y = success rate.
    PerClassDistGrid,
}

impl Layout {
    pub const ALL: [Layout; 3] = [
        Layout::SummaryGrid,
        Layout::FitnessGrid,
        Layout::PerClassDistGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layout::SummaryGrid => "SummaryGrid",
            Layout::FitnessGrid => "FitnessGrid",
            Layout::PerClassDistGrid => "PerClassDistGrid",
        }
    }

    fn snake_name(self) -> &'static str {
        match self {
            Layout::SummaryGrid => "summary_grid",
            Layout::FitnessGrid => "fitness_grid",
            Layout::PerClassDistGrid => "per_class_dist_grid",
        }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Layout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Layout::ALL
            .into_iter()
            .find(|l| l.name() == s || l.snake_name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown layout '{s}' (valid: summary_grid, fitness_grid, per_class_dist_grid)"
                ))
            })
    }
}

/// Which slice of the sweep a layout draws. `PerClassDistGrid` ignores `dist`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotSelection {
    pub regime: Regime,
    pub dist: DistributionSpec,
}

impl Default for PlotSelection {
    fn default() -> Self {
        PlotSelection {
            regime: Regime::Standard,
            dist: DistributionSpec::Uniform,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotPoint {
    pub panel: String,
    pub series: String,
    pub x: usize,
    pub y: Option<f64>,
}

const SUMMARY_PANELS: [&str; 4] = [
    "success_rate",
    "avg_generations_success",
    "avg_bene_per_gen",
    "avg_neut_per_gen",
];

fn summary_metric(row: &SummaryRow, panel: &str) -> Option<f64> {
    match panel {
        "success_rate" => Some(row.success_rate),
        "avg_generations_success" => row.avg_generations_success,
        "avg_bene_per_gen" => Some(row.avg_bene_per_gen),
        "avg_neut_per_gen" => Some(row.avg_neut_per_gen),
        _ => unreachable!("unknown panel {panel}"),
    }
}

fn summary_grid(rows: &[SummaryRow], sel: PlotSelection) -> Vec<PlotPoint> {
    let picked: BTreeMap<(FunctionClass, usize), &SummaryRow> = rows
        .iter()
        .filter(|r| r.regime == sel.regime && r.dist == sel.dist)
        .map(|r| ((r.class, r.n), r))
        .collect();
    let classes: BTreeSet<FunctionClass> = picked.keys().map(|k| k.0).collect();
    let dims: BTreeSet<usize> = picked.keys().map(|k| k.1).collect();
    let mut points = Vec::new();
    for panel in SUMMARY_PANELS {
        for &class in &classes {
            for &n in &dims {
                points.push(PlotPoint {
                    panel: panel.to_string(),
                    series: class.name().to_string(),
                    x: n,
                    y: picked
                        .get(&(class, n))
                        .and_then(|r| summary_metric(r, panel)),
                });
            }
        }
    }
    points
}

fn per_class_dist_grid(rows: &[SummaryRow], regime: Regime) -> Vec<PlotPoint> {
    let picked: Vec<&SummaryRow> = rows.iter().filter(|r| r.regime == regime).collect();
    let classes: BTreeSet<FunctionClass> = picked.iter().map(|r| r.class).collect();
    let dims: BTreeSet<usize> = picked.iter().map(|r| r.n).collect();
    let mut dists: Vec<DistributionSpec> = Vec::new();
    for r in &picked {
        if !dists.contains(&r.dist) {
            dists.push(r.dist);
        }
    }
    dists.sort_by_key(|d| (dist_rank(d), d.slug()));
    let mut points = Vec::new();
    for &class in &classes {
        for dist in &dists {
            for &n in &dims {
                let y = picked
                    .iter()
                    .find(|r| r.class == class && r.n == n && r.dist == *dist)
                    .map(|r| r.success_rate);
                points.push(PlotPoint {
                    panel: class.name().to_string(),
                    series: dist.slug(),
                    x: n,
                    y,
                });
            }
        }
    }
    points
}

/// Mean validation curve; shorter trials are padded with their final value.
fn mean_curve(results: &[TrialResult]) -> Vec<f64> {
    let len = results.iter().map(|r| r.records.len()).max().unwrap_or(0);
    (0..len)
        .map(|g| {
            let total: f64 = results
                .iter()
                .filter_map(|r| r.records.get(g).or(r.records.last()))
                .map(|rec| rec.validation_perf)
                .sum();
            total / results.len() as f64
        })
        .collect()
}

fn fitness_grid(results: &[TrialResult], sel: PlotSelection) -> Vec<PlotPoint> {
    let groups: BTreeMap<Cell, Vec<TrialResult>> = group_by_cell(results)
        .into_iter()
        .filter(|(c, _)| c.regime == sel.regime && c.dist == sel.dist)
        .collect();
    let classes: BTreeSet<FunctionClass> = groups.keys().map(|c| c.class).collect();
    let dims: BTreeSet<usize> = groups.keys().map(|c| c.n).collect();
    let mut points = Vec::new();
    for &class in &classes {
        for &n in &dims {
            let cell = Cell {
                regime: sel.regime,
                class,
                n,
                dist: sel.dist,
            };
            let series = format!("n={n}");
            let curve = groups.get(&cell).map(|g| mean_curve(g)).unwrap_or_default();
            if curve.is_empty() {
                points.push(PlotPoint {
                    panel: class.name().to_string(),
                    series,
                    x: 0,
                    y: None,
                });
                continue;
            }
            for (g, y) in curve.into_iter().enumerate() {
                points.push(PlotPoint {
                    panel: class.name().to_string(),
                    series: series.clone(),
                    x: g + 1,
                    y: Some(y),
                });
            }
        }
    }
    points
}

/// Points for `layout`; errors when the selection matches nothing.
pub fn plot_points(
    summaries: &[SummaryRow],
    results: &[TrialResult],
    layout: Layout,
    sel: PlotSelection,
) -> Result<Vec<PlotPoint>> {
    let points = match layout {
        Layout::SummaryGrid => summary_grid(summaries, sel),
        Layout::FitnessGrid => fitness_grid(results, sel),
        Layout::PerClassDistGrid => per_class_dist_grid(summaries, sel.regime),
    };
    if points.is_empty() {
        return Err(Error::Empty("no data for the requested plot"));
    }
    Ok(points)
}

pub fn write_plot_csv(path: &Path, points: &[PlotPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["panel", "series", "x", "y"])?;
    for p in points {
        let y = p.y.map(|v| v.to_string()).unwrap_or_default();
        w.write_record([p.panel.as_str(), p.series.as_str(), &p.x.to_string(), &y])?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::io(path, e.into_error()))?;
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Writes `<out>/plots/<Layout>.csv` and returns its path.
pub fn emit_plot_data(
    summaries: &[SummaryRow],
    results: &[TrialResult],
    layout: Layout,
    sel: PlotSelection,
    out: &Path,
) -> Result<PathBuf> {
    let points = plot_points(summaries, results, layout, sel)?;
    let dir = out.join("plots");
    fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    let path = dir.join(format!("{}.csv", layout.name()));
    write_plot_csv(&path, &points)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{GenerationRecord, Outcome, StepKind, TrialConfig};

    fn row(class: FunctionClass, n: usize, rate: f64) -> SummaryRow {
        SummaryRow {
            regime: Regime::Standard,
            class,
            n,
            dist: DistributionSpec::Uniform,
            trials: 5,
            successes: (rate * 5.0) as usize,
            success_rate: rate,
            avg_generations_success: (rate > 0.0).then_some(3.0),
            avg_bene_per_gen: 1.0,
            avg_neut_per_gen: 2.0,
            evolvable: rate >= 0.6,
        }
    }

    fn trial(n: usize, vals: &[f64]) -> TrialResult {
        TrialResult {
            config: TrialConfig::new(FunctionClass::Parity, n),
            trial: 0,
            outcome: Outcome::Failure,
            generations_used: vals.len(),
            final_validation_perf: *vals.last().unwrap(),
            target: String::new(),
            initial_hypothesis: String::new(),
            final_hypothesis: String::new(),
            records: vals
                .iter()
                .enumerate()
                .map(|(i, &v)| GenerationRecord {
                    generation: i + 1,
                    train_perf: v,
                    validation_perf: v,
                    bene_count: 0,
                    neut_count: 0,
                    kind: StepKind::Neutral,
                    base_perf: 0.0,
                })
                .collect(),
        }
    }

    #[test]
    fn layout_names() {
        for l in Layout::ALL {
            assert_eq!(l.name().parse::<Layout>().unwrap(), l);
            assert_eq!(l.snake_name().parse::<Layout>().unwrap(), l);
        }
        assert!("grid".parse::<Layout>().is_err());
    }

    #[test]
    fn missing_cells_become_gaps() {
        let rows = [
            row(FunctionClass::Parity, 5, 1.0),
            row(FunctionClass::Majority, 10, 0.0),
        ];
        let points =
            plot_points(&rows, &[], Layout::SummaryGrid, PlotSelection::default()).unwrap();
        assert_eq!(points.len(), 4 * 2 * 2);
        let gap = points
            .iter()
            .find(|p| p.panel == "success_rate" && p.series == "parity" && p.x == 10)
            .unwrap();
        assert_eq!(gap.y, None);
        let undefined = points
            .iter()
            .find(|p| p.panel == "avg_generations_success" && p.series == "majority" && p.x == 10)
            .unwrap();
        assert_eq!(undefined.y, None);
    }

    #[test]
    fn fitness_curves_pad_with_final_value() {
        let results = [trial(5, &[0.0, 1.0]), trial(5, &[0.5, 0.5, 0.5, 0.5])];
        let points =
            plot_points(&[], &results, Layout::FitnessGrid, PlotSelection::default()).unwrap();
        let ys: Vec<f64> = points.iter().map(|p| p.y.unwrap()).collect();
        assert_eq!(ys, vec![0.25, 0.75, 0.75, 0.75]);
        assert_eq!(points[0].series, "n=5");
    }

    #[test]
    fn empty_input_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        for layout in Layout::ALL {
            assert!(
                emit_plot_data(&[], &[], layout, PlotSelection::default(), dir.path()).is_err()
            );
        }
        assert!(!dir.path().join("plots").exists());
    }

    #[test]
    fn writes_long_format_csv() {
        let dir = tempfile::tempdir().unwrap();
        let rows = [row(FunctionClass::Parity, 5, 0.0)];
        let path = emit_plot_data(
            &rows,
            &[],
            Layout::PerClassDistGrid,
            PlotSelection::default(),
            dir.path(),
        )
        .unwrap();
        let text = fs::read_to_string(path).unwrap();
        assert_eq!(text, "panel,series,x,y\nparity,uniform,5,0\n");
    }
}
