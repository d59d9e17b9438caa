use std::collections::HashSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::classify::{classify_finding, Finding, FindingClass, Provenance};
use super::enumerate::{HeightTable, RationalsByHeight};
use super::extension::{extension_search, Extension};
use super::genus1::genus_one_search;
use super::pairs::{generate_pairs, PairCandidate};
use super::partition::partition_window;
use super::SearchError;
use crate::exactnum::Rational;
use crate::tuples::{quadruple_from_roots, verify_tuple, RootSystem, SignChoice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Height bound `B` on both elements of a pair.
    pub height_bound: u64,
    /// Height bound on the candidate fourth roots in the extension step.
    pub ext_bound: u64,
    /// Height bound on `v` in the genus one step.
    pub genus1_bound: u64,
    /// Inclusive 1-based index window over the enumeration of `a`. `None`
    /// means every `a` of height at most `height_bound`.
    pub window: Option<(u64, u64)>,
    pub partitions: u64,
    /// Run only this partition (0-based); `None` runs all of them.
    pub partition_index: Option<u64>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub resume: bool,
    /// Keep triples contained in a larger finding.
    pub keep_sub_triples: bool,
    /// Also process `-a` for each enumerated `a`.
    pub allow_negative_a: bool,
    /// Write a checkpoint after this many completed `a` indices.
    #[serde(skip)]
    pub checkpoint_every: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            height_bound: 100,
            ext_bound: 100,
            genus1_bound: 50,
            window: None,
            partitions: 1,
            partition_index: None,
            out: None,
            resume: false,
            keep_sub_triples: false,
            allow_negative_a: false,
            checkpoint_every: 256,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        if self.height_bound == 0 || self.ext_bound == 0 || self.genus1_bound == 0 {
            return bad("bounds must be at least 1");
        }
        if self.partitions == 0 {
            return bad("need at least one partition");
        }
        if let Some(i) = self.partition_index {
            if i >= self.partitions {
                return bad("partition index out of range");
            }
        }
        if let Some((lo, hi)) = self.window {
            if lo == 0 || lo > hi {
                return bad("window must satisfy 1 <= lo <= hi");
            }
        }
        if self.resume && self.out.is_none() {
            return bad("--resume needs an output path");
        }
        Ok(())
    }

    /// The fields that determine the findings; checkpoints must match on these.
    fn fingerprint(&self) -> SearchConfig {
        SearchConfig {
            partition_index: None,
            out: None,
            resume: false,
            checkpoint_every: SearchConfig::default().checkpoint_every,
            ..self.clone()
        }
    }

    fn table(&self) -> HeightTable {
        HeightTable::new(self.height_bound)
    }

    /// The effective index window, clipped to values of height at most `B`.
    pub fn effective_window(&self) -> (u64, u64) {
        let total = self.table().count_up_to(self.height_bound);
        match self.window {
            Some((lo, hi)) => (lo, hi.min(total)),
            None => (1, total),
        }
    }

    pub fn partition_ranges(&self) -> Vec<(u64, u64)> {
        let (lo, hi) = self.effective_window();
        partition_window(lo, hi, self.partitions)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub a_values: u64,
    pub pairs_examined: u64,
    pub extensions: u64,
    pub triples: u64,
    pub almost_quadruples: u64,
    pub quadruples: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SearchStats {
    fn count(&mut self, class: FindingClass) {
        match class {
            FindingClass::Triple => self.triples += 1,
            FindingClass::AlmostQuadruple => self.almost_quadruples += 1,
            FindingClass::Quadruple => self.quadruples += 1,
        }
    }

    fn recount(&mut self, findings: &[Finding]) {
        self.triples = 0;
        self.almost_quadruples = 0;
        self.quadruples = 0;
        for f in findings {
            self.count(f.class);
        }
    }
}

/// One line of a findings file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingRecord {
    #[serde(flatten)]
    pub finding: Finding,
    pub partition: u64,
    pub seq: u64,
}

impl FindingRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize infallibly")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOutput {
    pub partition: u64,
    pub range: (u64, u64),
    pub records: Vec<FindingRecord>,
    pub stats: SearchStats,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub findings: Vec<FindingRecord>,
    pub stats: SearchStats,
    pub partitions: Vec<PartitionOutput>,
    /// False when only some partitions have finished (single-partition runs).
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Checkpoint {
    config: SearchConfig,
    partition: u64,
    range: (u64, u64),
    last_completed: Option<u64>,
    records_flushed: u64,
    stats: SearchStats,
    complete: bool,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> SearchError + '_ {
    move |source| SearchError::IoFailure {
        path: path.display().to_string(),
        source,
    }
}

fn partition_file(out: &Path, partition: u64) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".part-{partition}.jsonl"));
    PathBuf::from(s)
}

fn checkpoint_file(out: &Path, partition: u64) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".part-{partition}.checkpoint.json"));
    PathBuf::from(s)
}

pub fn stats_file(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".stats.json");
    PathBuf::from(s)
}

/// Streams findings of one partition, deduplicating within the partition.
struct PartitionSink {
    partition: u64,
    seen: HashSet<Vec<Rational>>,
    records: Vec<FindingRecord>,
    writer: Option<(PathBuf, BufWriter<File>)>,
    stats: SearchStats,
}

impl PartitionSink {
    fn emit(&mut self, finding: Finding) -> Result<bool, SearchError> {
        if !self.seen.insert(finding.elements.clone()) {
            return Ok(false);
        }
        self.stats.count(finding.class);
        let record = FindingRecord {
            finding,
            partition: self.partition,
            seq: self.records.len() as u64,
        };
        if let Some((path, w)) = &mut self.writer {
            writeln!(w, "{}", record.to_line()).map_err(io_err(path))?;
        }
        self.records.push(record);
        Ok(true)
    }

    fn flush(&mut self) -> Result<(), SearchError> {
        if let Some((path, w)) = &mut self.writer {
            w.flush().map_err(io_err(path))?;
        }
        Ok(())
    }
}

fn provenance(pair: &PairCandidate, a_index: u64, via: &str) -> Provenance {
    Provenance {
        a: pair.a.clone(),
        b: pair.b.clone(),
        pair_root: pair.root.clone(),
        a_index,
        via: via.to_string(),
    }
}

/// The frame `(r, t, u, w)` of an almost quadruple, with `b, d` the pair whose
/// product plus one is only a square.
fn almost_quadruple_frame(f: &Finding) -> Option<[Rational; 4]> {
    let missing = f.roots.iter().find(|e| e.fourth_root.is_none())?.pair;
    let (bi, di) = missing;
    let mut rest = (0..4).filter(|&i| i != bi && i != di);
    let (ai, ci) = (rest.next()?, rest.next()?);
    let e = &f.elements;
    let root = |i: usize, j: usize| f.fourth_root_of(&e[i], &e[j]).cloned();
    Some([root(ai, bi)?, root(bi, ci)?, root(ai, di)?, root(ci, di)?])
}

/// Quadruples sharing the frame of an almost quadruple, from rational points
/// on its genus one curve.
fn genus_one_completions(f: &Finding, bound: u64) -> Vec<Finding> {
    let Some([r, t, u, w]) = almost_quadruple_frame(f) else {
        return Vec::new();
    };
    let Ok(points) = genus_one_search(&r, &t, &u, &w, bound) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for pt in points {
        let Some(s) = pt.implied_s else { continue };
        let rs = RootSystem::new(4, [r.clone(), s, t.clone(), u.clone(), pt.v.clone(), w.clone()]);
        for sign in [SignChoice::Positive, SignChoice::Negative] {
            let Ok(Some(quad)) = quadruple_from_roots(&rs, sign) else { continue };
            if !verify_tuple(&quad, 4).valid {
                continue;
            }
            if let Ok(found) = classify_finding(&quad) {
                if found.class == FindingClass::Quadruple {
                    out.push(found);
                }
            }
        }
    }
    out
}

/// A quadruple or almost quadruple on exactly this 4-set.
fn larger_finding(set: &[Rational; 4]) -> Option<Finding> {
    classify_finding(set).ok().filter(|f| f.class != FindingClass::Triple)
}

/// Extends the pair `(a, b)` to triples, then extends every edge of each
/// triple `{a, b, x}` other than `(a, b)`. A 4-set with five fourth-power
/// products containing `{a, b, x}` misses one of the edges `ay`, `by`, `xy`,
/// and each case is reached from one of `(a, b)`, `(a, x)`, `(b, x)`.
fn process_pair(
    pair: &PairCandidate,
    a_index: u64,
    cfg: &SearchConfig,
    sink: &mut PartitionSink,
) -> Result<(), SearchError> {
    let (a, b) = (&pair.a, &pair.b);
    let exts: Vec<Extension> = extension_search(a, b, cfg.ext_bound);
    sink.stats.extensions += exts.len() as u64;
    let mut found = Vec::new();
    for (i, x) in exts.iter().enumerate() {
        for y in &exts[i + 1..] {
            let set = [a.clone(), b.clone(), x.x.clone(), y.x.clone()];
            found.extend(larger_finding(&set).map(|f| (f, "extension")));
        }
    }
    for x in &exts {
        let Ok(triple) = classify_finding(&[a.clone(), b.clone(), x.x.clone()]) else {
            continue;
        };
        found.push((triple, "extension"));
        for edge in [a, b] {
            let more = extension_search(edge, &x.x, cfg.ext_bound);
            sink.stats.extensions += more.len() as u64;
            for y in more {
                if &y.x != a && &y.x != b {
                    let set = [a.clone(), b.clone(), x.x.clone(), y.x];
                    found.extend(larger_finding(&set).map(|f| (f, "triple-extension")));
                }
            }
        }
    }
    for (mut f, via) in found {
        f.source = Some(provenance(pair, a_index, via));
        let almost = f.class == FindingClass::AlmostQuadruple;
        let completions = if almost { genus_one_completions(&f, cfg.genus1_bound) } else { Vec::new() };
        sink.emit(f)?;
        for mut q in completions {
            q.source = Some(provenance(pair, a_index, "genus1"));
            sink.emit(q)?;
        }
    }
    Ok(())
}

fn read_records(path: &Path, limit: u64) -> Result<Vec<FindingRecord>, SearchError> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines().take(limit as usize) {
        let line = line.map_err(io_err(path))?;
        let rec: FindingRecord = serde_json::from_str(&line).map_err(|e| SearchError::CorruptOutput {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        out.push(rec);
    }
    if (out.len() as u64) < limit {
        return Err(SearchError::CorruptOutput {
            path: path.display().to_string(),
            reason: format!("expected {limit} records, found {}", out.len()),
        });
    }
    Ok(out)
}

fn write_checkpoint(path: &Path, ckpt: &Checkpoint) -> Result<(), SearchError> {
    let tmp = path.with_extension("tmp");
    let body = serde_json::to_string_pretty(ckpt).expect("checkpoint serializes");
    fs::write(&tmp, body + "\n").map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

fn load_checkpoint(path: &Path) -> Result<Option<Checkpoint>, SearchError> {
    if !path.exists() {
        return Ok(None);
    }
    let body = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&body)
        .map(Some)
        .map_err(|e| SearchError::CorruptOutput {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
}

/// Runs one partition over `range` sequentially. With an output path the
/// findings stream to `<out>.part-<i>.jsonl` and progress is checkpointed to
/// `<out>.part-<i>.checkpoint.json`; with `resume`, already-flushed records
/// are kept and never re-emitted.
pub fn run_partition(cfg: &SearchConfig, partition: u64, range: (u64, u64)) -> Result<PartitionOutput, SearchError> {
    let started = Instant::now();
    let mut sink = PartitionSink {
        partition,
        seen: HashSet::new(),
        records: Vec::new(),
        writer: None,
        stats: SearchStats::default(),
    };
    let mut start = range.0;
    let ckpt_path = cfg.out.as_deref().map(|o| checkpoint_file(o, partition));

    if let Some(out) = cfg.out.as_deref() {
        let part_path = partition_file(out, partition);
        let ckpt = if cfg.resume { load_checkpoint(ckpt_path.as_deref().unwrap())? } else { None };
        match ckpt {
            Some(ckpt) => {
                if ckpt.config.fingerprint() != cfg.fingerprint() || ckpt.range != range {
                    return Err(SearchError::CheckpointMismatch {
                        path: ckpt_path.unwrap().display().to_string(),
                    });
                }
                let kept = read_records(&part_path, ckpt.records_flushed)?;
                // Rewrite so that anything after the last checkpoint is dropped.
                let mut w = BufWriter::new(File::create(&part_path).map_err(io_err(&part_path))?);
                for rec in &kept {
                    writeln!(w, "{}", rec.to_line()).map_err(io_err(&part_path))?;
                    sink.seen.insert(rec.finding.elements.clone());
                }
                w.flush().map_err(io_err(&part_path))?;
                sink.records = kept;
                sink.stats = ckpt.stats.clone();
                start = ckpt.last_completed.map_or(range.0, |i| i + 1);
                if ckpt.complete {
                    start = range.1.saturating_add(1);
                }
                let file = OpenOptions::new().append(true).open(&part_path).map_err(io_err(&part_path))?;
                sink.writer = Some((part_path, BufWriter::new(file)));
            }
            None => {
                let file = File::create(&part_path).map_err(io_err(&part_path))?;
                sink.writer = Some((part_path, BufWriter::new(file)));
            }
        }
    }

    let save = |sink: &mut PartitionSink, last: Option<u64>, complete: bool| -> Result<(), SearchError> {
        let Some(path) = ckpt_path.as_deref() else { return Ok(()) };
        sink.flush()?;
        write_checkpoint(
            path,
            &Checkpoint {
                config: cfg.fingerprint(),
                partition,
                range,
                last_completed: last,
                records_flushed: sink.records.len() as u64,
                stats: sink.stats.clone(),
                complete,
            },
        )
    };

    if start <= range.1 {
        let table = cfg.table();
        let values = RationalsByHeight::starting_at(start, &table);
        let mut since_checkpoint = 0;
        for (index, (p, q)) in (start..=range.1).zip(values) {
            let a = Rational::new(p, q).expect("q > 0");
            let signs: &[bool] = if cfg.allow_negative_a { &[false, true] } else { &[false] };
            for &neg in signs {
                let a = if neg { -&a } else { a.clone() };
                sink.stats.a_values += 1;
                for pair in generate_pairs(&a, cfg.height_bound) {
                    sink.stats.pairs_examined += 1;
                    process_pair(&pair, index, cfg, &mut sink)?;
                }
            }
            since_checkpoint += 1;
            if since_checkpoint >= cfg.checkpoint_every.max(1) && index < range.1 {
                save(&mut sink, Some(index), false)?;
                since_checkpoint = 0;
            }
        }
    }
    let last = if range.1 >= range.0 { Some(range.1) } else { None };
    save(&mut sink, last, true)?;
    sink.stats.wall_time = started.elapsed();
    Ok(PartitionOutput {
        partition,
        range,
        records: sink.records,
        stats: sink.stats,
        complete: true,
    })
}

/// Deterministic merge: records in (partition, seq) order, first occurrence
/// of each element set wins, and unless `keep_sub_triples` is set, triples
/// contained in a larger finding are dropped.
pub fn merge_partitions(parts: &[PartitionOutput], keep_sub_triples: bool) -> (Vec<FindingRecord>, SearchStats) {
    let mut ordered: Vec<&PartitionOutput> = parts.iter().collect();
    ordered.sort_by_key(|p| p.partition);
    let mut seen = HashSet::new();
    let mut merged: Vec<FindingRecord> = Vec::new();
    let mut stats = SearchStats::default();
    for part in ordered {
        stats.a_values += part.stats.a_values;
        stats.pairs_examined += part.stats.pairs_examined;
        stats.extensions += part.stats.extensions;
        stats.wall_time = stats.wall_time.max(part.stats.wall_time);
        let mut recs: Vec<&FindingRecord> = part.records.iter().collect();
        recs.sort_by_key(|r| r.seq);
        for rec in recs {
            if seen.insert(rec.finding.elements.clone()) {
                merged.push(rec.clone());
            }
        }
    }
    if !keep_sub_triples {
        let larger: Vec<&Finding> = merged
            .iter()
            .map(|r| &r.finding)
            .filter(|f| f.elements.len() == 4)
            .collect();
        let subsumed: HashSet<Vec<Rational>> = merged
            .iter()
            .filter(|r| r.finding.class == FindingClass::Triple)
            .filter(|r| larger.iter().any(|f| f.contains_all(&r.finding.elements)))
            .map(|r| r.finding.elements.clone())
            .collect();
        merged.retain(|r| !subsumed.contains(&r.finding.elements));
    }
    let findings: Vec<Finding> = merged.iter().map(|r| r.finding.clone()).collect();
    stats.recount(&findings);
    (merged, stats)
}

fn load_finished_partition(cfg: &SearchConfig, out: &Path, partition: u64, range: (u64, u64)) -> Result<Option<PartitionOutput>, SearchError> {
    let Some(ckpt) = load_checkpoint(&checkpoint_file(out, partition))? else {
        return Ok(None);
    };
    if !ckpt.complete || ckpt.config.fingerprint() != cfg.fingerprint() || ckpt.range != range {
        return Ok(None);
    }
    let records = read_records(&partition_file(out, partition), ckpt.records_flushed)?;
    Ok(Some(PartitionOutput {
        partition,
        range,
        records,
        stats: ckpt.stats,
        complete: true,
    }))
}

fn write_merged(out: &Path, findings: &[FindingRecord], stats: &SearchStats) -> Result<(), SearchError> {
    let mut w = BufWriter::new(File::create(out).map_err(io_err(out))?);
    for rec in findings {
        writeln!(w, "{}", rec.to_line()).map_err(io_err(out))?;
    }
    w.flush().map_err(io_err(out))?;
    let stats_path = stats_file(out);
    let body = serde_json::to_string(stats).expect("stats serialize");
    fs::write(&stats_path, body + "\n").map_err(io_err(&stats_path))
}

/// Runs the configured partitions (concurrently when there are several),
/// then merges. When an output path is set and every partition has a
/// complete checkpoint, the merged findings go to `out` and the stats to
/// `<out>.stats.json`.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.validate()?;
    let cfg_for_ckpt = SearchConfig { partition_index: None, ..cfg.clone() };
    let ranges = cfg.partition_ranges();
    let selected: Vec<u64> = match cfg.partition_index {
        Some(i) => vec![i],
        None => (0..cfg.partitions).collect(),
    };
    let started = Instant::now();
    let results: Vec<Result<PartitionOutput, SearchError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&i| {
                let cfg = &cfg_for_ckpt;
                let range = ranges[i as usize];
                scope.spawn(move || run_partition(cfg, i, range))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("partition worker panicked"))
            .collect()
    });
    let mut parts = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let mut complete = parts.len() as u64 == cfg.partitions;
    if !complete {
        if let Some(out) = cfg.out.as_deref() {
            let mut all = Vec::new();
            for (i, &range) in ranges.iter().enumerate() {
                let i = i as u64;
                if let Some(p) = parts.iter().find(|p| p.partition == i) {
                    all.push(p.clone());
                } else if let Some(p) = load_finished_partition(&cfg_for_ckpt, out, i, range)? {
                    all.push(p);
                }
            }
            if all.len() as u64 == cfg.partitions {
                parts = all;
                complete = true;
            }
        }
    }

    let (findings, mut stats) = merge_partitions(&parts, cfg.keep_sub_triples);
    stats.wall_time = started.elapsed();
    if complete {
        if let Some(out) = cfg.out.as_deref() {
            write_merged(out, &findings, &stats)?;
        }
    }
    Ok(SearchOutcome {
        findings,
        stats,
        partitions: parts,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(b: u64) -> SearchConfig {
        SearchConfig { height_bound: b, ext_bound: 20, genus1_bound: 10, ..SearchConfig::default() }
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig { height_bound: 0, ..small(10) }.validate().is_err());
        assert!(SearchConfig { partitions: 2, partition_index: Some(2), ..small(10) }.validate().is_err());
        assert!(SearchConfig { window: Some((5, 4)), ..small(10) }.validate().is_err());
        assert!(SearchConfig { resume: true, ..small(10) }.validate().is_err());
        assert!(small(10).validate().is_ok());
    }

    #[test]
    fn window_is_clipped_to_height_bound() {
        assert_eq!(small(10).effective_window(), (1, 63));
        let cfg = SearchConfig { window: Some((5, 1000)), ..small(10) };
        assert_eq!(cfg.effective_window(), (5, 63));
    }

    #[test]
    fn frame_of_first_almost_quadruple() {
        let elems: Vec<Rational> = ["64/9", "-2295/16384", "145/36", "-317135/2359296"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let f = classify_finding(&elems).unwrap();
        let frame = almost_quadruple_frame(&f).unwrap().map(|x| x.to_string());
        // b, d carry the square-only pair; a, c are the others in canonical order.
        assert_eq!(frame, ["1/4", "13/16", "11/24", "79/96"]);
    }

    #[test]
    fn merge_drops_subsumed_triples() {
        let elems: Vec<Rational> = ["64/9", "-2295/16384", "145/36", "-317135/2359296"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let almost = classify_finding(&elems).unwrap();
        let triple = classify_finding(&elems[..3]).unwrap();
        let rec = |f: &Finding, partition, seq| FindingRecord { finding: f.clone(), partition, seq };
        let parts = vec![
            PartitionOutput {
                partition: 1,
                range: (3, 4),
                records: vec![rec(&almost, 1, 0), rec(&triple, 1, 1)],
                stats: SearchStats::default(),
                complete: true,
            },
            PartitionOutput {
                partition: 0,
                range: (1, 2),
                records: vec![rec(&triple, 0, 0)],
                stats: SearchStats::default(),
                complete: true,
            },
        ];
        let (merged, stats) = merge_partitions(&parts, false);
        assert_eq!(merged.len(), 1);
        assert_eq!(stats.almost_quadruples, 1);
        let (merged, _) = merge_partitions(&parts, true);
        assert_eq!(merged.len(), 2);
        assert_eq!((merged[0].partition, merged[0].finding.class), (0, FindingClass::Triple));
    }
}
