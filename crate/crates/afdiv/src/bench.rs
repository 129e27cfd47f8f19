//! Corpus runner: per-instance, per-semantics minimum and maximum
//! diversity with timeouts, summary statistics, and distribution plot
//! artifacts.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::af::ArgumentationFramework;
use crate::cancel::CancelToken;
use crate::diversity::{self, DiversityError};
use crate::io::{self, AfFormat};
use crate::semantics::{EngineError, SearchLimits, Semantics, SizeGuard};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("corpus directory contains no instances")]
    EmptyCorpus,
    #[error("cannot read instance `{name}`: {cause}")]
    UnreadableFile { name: String, cause: String },
    #[error("no records for the requested semantics")]
    NoData,
    #[error("malformed records CSV at line {0}")]
    MalformedCsv(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Variant {
    Max,
    Min,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Max => "max",
            Variant::Min => "min",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Optimal,
    Timeout,
    NoPair,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Timeout => "timeout",
            Status::NoPair => "no_pair",
            Status::Skipped => "skipped",
        }
    }
}

/// One benchmark measurement: an instance, a semantics, and the min or
/// max diversity variant. `k` is present exactly when the run was
/// optimal.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub semantics: Semantics,
    pub variant: Variant,
    pub status: Status,
    pub k: Option<usize>,
    pub runtime_seconds: f64,
}

/// Records plus the per-instance diversity level sets that completed
/// within the timeout (used for the distribution plot's median series).
#[derive(Debug, Default)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    pub levels: BTreeMap<(String, Semantics), Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub semantics: Vec<Semantics>,
    pub timeout: Duration,
    pub size_cap: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            semantics: vec![Semantics::Admissible, Semantics::Complete, Semantics::Stable],
            timeout: Duration::from_secs(300),
            size_cap: 1000,
        }
    }
}

fn list_corpus(dir: &Path) -> Result<Vec<PathBuf>, BenchError> {
    let entries = std::fs::read_dir(dir).map_err(|e| BenchError::UnreadableFile {
        name: dir.display().to_string(),
        cause: e.to_string(),
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_file())
        .filter(|p| {
            matches!(
                p.extension().and_then(|e| e.to_str()),
                Some("af") | Some("apx") | Some("iccma") | Some("txt")
            )
        })
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(BenchError::EmptyCorpus);
    }
    Ok(files)
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_instance(path: &Path) -> Result<ArgumentationFramework, BenchError> {
    let name = instance_name(path);
    let text = std::fs::read_to_string(path).map_err(|e| BenchError::UnreadableFile {
        name: name.clone(),
        cause: e.to_string(),
    })?;
    io::parse(&text, AfFormat::from_path(path)).map_err(|e| BenchError::UnreadableFile {
        name,
        cause: e.to_string(),
    })
}

/// Runs every `(instance, semantics, variant)` combination of the corpus.
/// Instances above the size cap get skip records; searches are cancelled
/// cooperatively at the timeout. Records come back in deterministic
/// `(instance, semantics, variant)` order regardless of scheduling.
pub fn run_corpus(dir: &Path, config: &BenchConfig) -> Result<BenchOutcome, BenchError> {
    let files = list_corpus(dir)?;
    let mut loaded = Vec::with_capacity(files.len());
    for path in &files {
        loaded.push((instance_name(path), load_instance(path)?));
    }
    let tasks: Vec<(String, ArgumentationFramework)> = loaded;
    let run_one = |(name, af): &(String, ArgumentationFramework)| -> BenchOutcome {
        bench_instance(name, af, config)
    };
    let partials: Vec<BenchOutcome> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            tasks.par_iter().map(run_one).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            tasks.iter().map(run_one).collect()
        }
    };
    let mut outcome = BenchOutcome::default();
    for mut p in partials {
        outcome.records.append(&mut p.records);
        outcome.levels.append(&mut p.levels);
    }
    outcome
        .records
        .sort_by(|a, b| (&a.instance, a.semantics, a.variant).cmp(&(&b.instance, b.semantics, b.variant)));
    Ok(outcome)
}

fn bench_instance(name: &str, af: &ArgumentationFramework, config: &BenchConfig) -> BenchOutcome {
    let mut out = BenchOutcome::default();
    for &sem in &config.semantics {
        if af.n_args() > config.size_cap {
            for variant in [Variant::Max, Variant::Min] {
                out.records.push(BenchRecord {
                    instance: name.to_string(),
                    semantics: sem,
                    variant,
                    status: Status::Skipped,
                    k: None,
                    runtime_seconds: 0.0,
                });
            }
            continue;
        }
        for variant in [Variant::Max, Variant::Min] {
            let limits = instance_limits(af, config);
            let start = Instant::now();
            let empty = af.empty_extension();
            let result = match variant {
                Variant::Max => diversity::max_diversity(af, sem, &empty, &empty, &limits),
                Variant::Min => diversity::min_diversity(af, sem, &empty, &empty, &limits),
            };
            let runtime_seconds = start.elapsed().as_secs_f64();
            let (status, k) = match result {
                Ok(Some((k, _))) => (Status::Optimal, Some(k)),
                Ok(None) => (Status::NoPair, None),
                Err(DiversityError::Engine(EngineError::Cancelled)) => (Status::Timeout, None),
                Err(_) => (Status::Timeout, None),
            };
            out.records.push(BenchRecord {
                instance: name.to_string(),
                semantics: sem,
                variant,
                status,
                k,
                runtime_seconds,
            });
        }
        let limits = instance_limits(af, config);
        if let Ok(levels) = diversity::diversity_levels(af, sem, &limits) {
            out.levels
                .insert((name.to_string(), sem), levels.into_iter().collect());
        }
    }
    out
}

fn instance_limits(af: &ArgumentationFramework, config: &BenchConfig) -> SearchLimits {
    SearchLimits {
        guard: SizeGuard {
            max_args: config.size_cap.max(af.n_args()),
            ..SizeGuard::default()
        },
        cancel: CancelToken::with_timeout(config.timeout),
        // Instances already run on the worker pool; nested parallel pair
        // scans would only fight over the same cores.
        parallel: false,
    }
}

/// Aggregated statistics per `(semantics, variant)`. Averages and the
/// lower median are computed over optimal records only; the counters
/// cover every status.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub semantics: Semantics,
    pub variant: Variant,
    pub avg_k: Option<f64>,
    pub med_k: Option<usize>,
    pub avg_runtime: Option<f64>,
    pub optimal: usize,
    pub timeout: usize,
    pub no_pair: usize,
    pub skipped: usize,
}

pub fn summarize(records: &[BenchRecord]) -> Vec<SummaryRow> {
    let mut groups: BTreeMap<(Semantics, Variant), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        groups.entry((r.semantics, r.variant)).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((semantics, variant), rs)| {
            let mut ks: Vec<usize> = rs
                .iter()
                .filter(|r| r.status == Status::Optimal)
                .filter_map(|r| r.k)
                .collect();
            ks.sort_unstable();
            let times: Vec<f64> = rs
                .iter()
                .filter(|r| r.status == Status::Optimal)
                .map(|r| r.runtime_seconds)
                .collect();
            let count = |s: Status| rs.iter().filter(|r| r.status == s).count();
            SummaryRow {
                semantics,
                variant,
                avg_k: (!ks.is_empty())
                    .then(|| ks.iter().sum::<usize>() as f64 / ks.len() as f64),
                med_k: lower_median(&ks),
                avg_runtime: (!times.is_empty())
                    .then(|| times.iter().sum::<f64>() / times.len() as f64),
                optimal: count(Status::Optimal),
                timeout: count(Status::Timeout),
                no_pair: count(Status::NoPair),
                skipped: count(Status::Skipped),
            }
        })
        .collect()
}

/// Lower median of a sorted slice.
fn lower_median(sorted: &[usize]) -> Option<usize> {
    if sorted.is_empty() {
        None
    } else {
        Some(sorted[(sorted.len() - 1) / 2])
    }
}

pub const RECORDS_CSV_HEADER: &str = "instance,semantics,variant,status,k,runtime_seconds";
pub const SUMMARY_CSV_HEADER: &str =
    "semantics,variant,avg_k,med_k,avg_t,optimal,timeout,no_pair,skipped";
pub const DISTRIBUTION_CSV_HEADER: &str = "instance,min_k,med_k,max_k";

pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(RECORDS_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.instance,
            r.semantics,
            r.variant.as_str(),
            r.status.as_str(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            r.runtime_seconds,
        ));
    }
    out
}

pub fn records_from_csv(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == RECORDS_CSV_HEADER => {}
        _ => return Err(BenchError::MalformedCsv(1)),
    }
    let mut records = Vec::new();
    for (idx, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(BenchError::MalformedCsv(idx + 1));
        }
        let semantics: Semantics = fields[1].parse().map_err(|_| BenchError::MalformedCsv(idx + 1))?;
        let variant = match fields[2] {
            "max" => Variant::Max,
            "min" => Variant::Min,
            _ => return Err(BenchError::MalformedCsv(idx + 1)),
        };
        let status = match fields[3] {
            "optimal" => Status::Optimal,
            "timeout" => Status::Timeout,
            "no_pair" => Status::NoPair,
            "skipped" => Status::Skipped,
            _ => return Err(BenchError::MalformedCsv(idx + 1)),
        };
        let k = if fields[4].is_empty() {
            None
        } else {
            Some(fields[4].parse().map_err(|_| BenchError::MalformedCsv(idx + 1))?)
        };
        let runtime_seconds = fields[5]
            .parse()
            .map_err(|_| BenchError::MalformedCsv(idx + 1))?;
        records.push(BenchRecord {
            instance: fields[0].to_string(),
            semantics,
            variant,
            status,
            k,
            runtime_seconds,
        });
    }
    Ok(records)
}

pub fn summary_to_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from(SUMMARY_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.semantics,
            r.variant.as_str(),
            r.avg_k.map(|v| v.to_string()).unwrap_or_default(),
            r.med_k.map(|v| v.to_string()).unwrap_or_default(),
            r.avg_runtime.map(|v| v.to_string()).unwrap_or_default(),
            r.optimal,
            r.timeout,
            r.no_pair,
            r.skipped,
        ));
    }
    out
}

/// One distribution row: an instance's minimum, median, and maximum
/// attained diversity. The median is the lower median of the instance's
/// diversity level set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionRow {
    pub instance: String,
    pub min_k: usize,
    pub med_k: usize,
    pub max_k: usize,
}

/// Builds the per-instance distribution for one semantics, sorted by
/// median diversity. Instances enter when both their min and max runs
/// were optimal and their level set completed.
pub fn distribution(
    outcome: &BenchOutcome,
    sem: Semantics,
) -> Result<Vec<DistributionRow>, BenchError> {
    let mut per_instance: BTreeMap<&str, (Option<usize>, Option<usize>)> = BTreeMap::new();
    for r in &outcome.records {
        if r.semantics != sem || r.status != Status::Optimal {
            continue;
        }
        let entry = per_instance.entry(&r.instance).or_default();
        match r.variant {
            Variant::Min => entry.0 = r.k,
            Variant::Max => entry.1 = r.k,
        }
    }
    let mut rows: Vec<DistributionRow> = per_instance
        .into_iter()
        .filter_map(|(name, (min_k, max_k))| {
            let min_k = min_k?;
            let max_k = max_k?;
            let levels = outcome.levels.get(&(name.to_string(), sem))?;
            let med_k = lower_median(levels)?;
            Some(DistributionRow {
                instance: name.to_string(),
                min_k,
                med_k,
                max_k,
            })
        })
        .collect();
    if rows.is_empty() {
        return Err(BenchError::NoData);
    }
    rows.sort_by(|a, b| (a.med_k, &a.instance).cmp(&(b.med_k, &b.instance)));
    Ok(rows)
}

pub fn distribution_to_csv(rows: &[DistributionRow]) -> String {
    let mut out = String::from(DISTRIBUTION_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.instance, r.min_k, r.med_k, r.max_k));
    }
    out
}

/// Renders the distribution as a standalone SVG: minimum in orange,
/// maximum in blue, median as a dashed green line, instances on the
/// x-axis sorted by median.
pub fn distribution_to_svg(rows: &[DistributionRow]) -> String {
    let width = 800.0;
    let height = 400.0;
    let margin = 45.0;
    let max_k = rows.iter().map(|r| r.max_k).max().unwrap_or(1).max(1) as f64;
    let n = rows.len().max(1) as f64;
    let x = |i: usize| margin + (width - 2.0 * margin) * (i as f64 + 0.5) / n;
    let y = |k: usize| height - margin - (height - 2.0 * margin) * (k as f64 / max_k);
    let polyline = |pick: &dyn Fn(&DistributionRow) -> usize| -> String {
        rows.iter()
            .enumerate()
            .map(|(i, r)| format!("{:.1},{:.1}", x(i), y(pick(r))))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = margin,
        b = height - margin,
        r = width - margin
    ));
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = margin,
        t = margin,
        b = height - margin
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\">instances (sorted by median)</text>\n",
        width / 2.0 - 70.0,
        height - 10.0
    ));
    svg.push_str(&format!(
        "<text x=\"12\" y=\"{}\" font-size=\"12\" transform=\"rotate(-90 12 {})\">diversity k</text>\n",
        height / 2.0,
        height / 2.0
    ));
    svg.push_str(&format!(
        "<text x=\"{m}\" y=\"{t}\" font-size=\"11\">{max_k}</text>\n",
        m = 8.0,
        t = margin + 4.0
    ));
    svg.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"orange\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        polyline(&|r| r.min_k)
    ));
    svg.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        polyline(&|r| r.max_k)
    ));
    svg.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"green\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" points=\"{}\"/>\n",
        polyline(&|r| r.med_k)
    ));
    for (i, r) in rows.iter().enumerate() {
        svg.push_str(&format!(
            "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"2.2\" fill=\"orange\"/>\n",
            x(i),
            y(r.min_k)
        ));
        svg.push_str(&format!(
            "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"2.2\" fill=\"blue\"/>\n",
            x(i),
            y(r.max_k)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_corpus(dir: &Path, files: &[(&str, &str)]) {
        for (name, content) in files {
            let mut f = std::fs::File::create(dir.join(name)).unwrap();
            f.write_all(content.as_bytes()).unwrap();
        }
    }

    #[test]
    fn attack_free_corpus_stable() {
        let dir = tempfile::tempdir().unwrap();
        write_corpus(
            dir.path(),
            &[
                ("one.af", "p af 2\n"),
                ("two.af", "p af 3\n"),
                ("three.af", "p af 1\n"),
            ],
        );
        let config = BenchConfig {
            semantics: vec![Semantics::Stable],
            timeout: Duration::from_secs(10),
            size_cap: 1000,
        };
        let outcome = run_corpus(dir.path(), &config).unwrap();
        assert_eq!(outcome.records.len(), 6);
        for r in &outcome.records {
            match r.variant {
                Variant::Max => {
                    assert_eq!(r.status, Status::Optimal);
                    assert_eq!(r.k, Some(0));
                }
                Variant::Min => {
                    assert_eq!(r.status, Status::NoPair);
                    assert_eq!(r.k, None);
                }
            }
        }
        // Deterministic order: instances sorted by name.
        let names: Vec<&str> = outcome.records.iter().map(|r| r.instance.as_str()).collect();
        assert_eq!(names, vec!["one", "one", "three", "three", "two", "two"]);
    }

    #[test]
    fn zero_timeout_means_all_timeout() {
        let dir = tempfile::tempdir().unwrap();
        write_corpus(dir.path(), &[("x.af", "p af 2\n1 2\n")]);
        let config = BenchConfig {
            semantics: vec![Semantics::Stable],
            timeout: Duration::ZERO,
            size_cap: 1000,
        };
        let outcome = run_corpus(dir.path(), &config).unwrap();
        assert!(outcome.records.iter().all(|r| r.status == Status::Timeout));
    }

    #[test]
    fn size_cap_produces_skip_records() {
        let dir = tempfile::tempdir().unwrap();
        write_corpus(dir.path(), &[("big.af", "p af 5\n"), ("small.af", "p af 2\n")]);
        let config = BenchConfig {
            semantics: vec![Semantics::Stable],
            timeout: Duration::from_secs(5),
            size_cap: 3,
        };
        let outcome = run_corpus(dir.path(), &config).unwrap();
        let big: Vec<_> = outcome
            .records
            .iter()
            .filter(|r| r.instance == "big")
            .collect();
        assert_eq!(big.len(), 2);
        assert!(big.iter().all(|r| r.status == Status::Skipped));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            run_corpus(dir.path(), &BenchConfig::default()),
            Err(BenchError::EmptyCorpus)
        ));
    }

    #[test]
    fn summary_statistics() {
        let rec = |k: Option<usize>, t: f64| BenchRecord {
            instance: "i".into(),
            semantics: Semantics::Stable,
            variant: Variant::Max,
            status: if k.is_some() { Status::Optimal } else { Status::Timeout },
            k,
            runtime_seconds: t,
        };
        let rows = summarize(&[rec(Some(5), 1.0)]);
        assert_eq!(rows[0].avg_k, Some(5.0));
        assert_eq!(rows[0].med_k, Some(5));
        assert_eq!(rows[0].avg_runtime, Some(1.0));
        let rows = summarize(&[rec(Some(1), 0.0), rec(Some(2), 0.0), rec(Some(100), 0.0)]);
        assert_eq!(rows[0].med_k, Some(2));
        assert_eq!(rows[0].optimal, 3);
        // Even count: lower median.
        let rows = summarize(&[rec(Some(1), 0.0), rec(Some(2), 0.0), rec(Some(3), 0.0), rec(Some(4), 0.0)]);
        assert_eq!(rows[0].med_k, Some(2));
    }

    #[test]
    fn records_csv_roundtrip() {
        let records = vec![
            BenchRecord {
                instance: "a".into(),
                semantics: Semantics::Admissible,
                variant: Variant::Max,
                status: Status::Optimal,
                k: Some(4),
                runtime_seconds: 0.125,
            },
            BenchRecord {
                instance: "a".into(),
                semantics: Semantics::Admissible,
                variant: Variant::Min,
                status: Status::NoPair,
                k: None,
                runtime_seconds: 0.5,
            },
        ];
        let csv = records_to_csv(&records);
        assert!(csv.starts_with(RECORDS_CSV_HEADER));
        let parsed = records_from_csv(&csv).unwrap();
        assert_eq!(parsed, records);
        assert_eq!(summarize(&parsed), summarize(&records));
    }

    #[test]
    fn distribution_rows_sorted_by_median() {
        let mut outcome = BenchOutcome::default();
        for (name, min_k, max_k, levels) in [
            ("p", 4, 6, vec![4, 6]),
            ("q", 1, 9, vec![1, 2, 9]),
        ] {
            for (variant, k) in [(Variant::Min, min_k), (Variant::Max, max_k)] {
                outcome.records.push(BenchRecord {
                    instance: name.into(),
                    semantics: Semantics::Stable,
                    variant,
                    status: Status::Optimal,
                    k: Some(k),
                    runtime_seconds: 0.0,
                });
            }
            outcome
                .levels
                .insert((name.into(), Semantics::Stable), levels);
        }
        let rows = distribution(&outcome, Semantics::Stable).unwrap();
        // Lower medians: p -> 4, q -> 2; sorted ascending by median.
        assert_eq!(rows[0].instance, "q");
        assert_eq!(rows[0].med_k, 2);
        assert_eq!(rows[1].instance, "p");
        assert_eq!(rows[1].med_k, 4);
        let csv = distribution_to_csv(&rows);
        assert!(csv.starts_with(DISTRIBUTION_CSV_HEADER));
        let svg = distribution_to_svg(&rows);
        assert!(svg.contains("orange") && svg.contains("blue") && svg.contains("green"));
        assert!(matches!(
            distribution(&outcome, Semantics::Preferred),
            Err(BenchError::NoData)
        ));
    }
}
