use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use pstw_core::Algorithm;

use crate::config::Family;
use crate::experiment::ResultRecord;

pub const CSV_HEADER: [&str; 10] = [
    "family",
    "n",
    "n_prime",
    "seed",
    "algorithm",
    "wall_seconds",
    "access_count",
    "alpha",
    "waits",
    "verified",
];

/// `x` with six significant digits in fixed notation (`6` -> `6.00000`).
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.5}", x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_csv<W: Write>(records: &[ResultRecord], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.family.name().to_string(),
            r.n.to_string(),
            r.n_prime.map(|k| k.to_string()).unwrap_or_default(),
            r.seed.to_string(),
            r.algorithm.name().to_string(),
            sig6(r.wall_seconds),
            r.access_count.to_string(),
            r.alpha.map(sig6).unwrap_or_default(),
            r.waits.to_string(),
            r.verified.to_string(),
        ])?;
    }
    w.flush()
}

pub fn emit_csv(records: &[ResultRecord], dest: &Path) -> io::Result<()> {
    write_csv(records, BufWriter::new(File::create(dest)?))
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn cell(x: Option<f64>, prec: usize) -> String {
    x.map_or_else(|| "-".to_string(), |x| format!("{x:.prec$}"))
}

fn mean_cell(xs: &[Option<f64>], prec: usize) -> String {
    let vals: Vec<f64> = xs.iter().flatten().copied().collect();
    if vals.is_empty() {
        return "-".to_string();
    }
    let (m, sd) = mean_sd(&vals);
    format!("{m:.prec$}±{sd:.prec$}")
}

type GroupKey = (Family, usize, Option<usize>);

/// Markdown tables, one per `(family, n)`, with a row per seed.
///
/// Columns are α and wall time for each algorithm. When PSTw is among the
/// records, each other algorithm also gets `X/PSTw` ratio columns (X's value
/// divided by PSTw's on the same seed). With more than one seed a final row
/// holds mean±stddev for the raw columns and the mean of the per-seed ratios.
pub fn write_markdown<W: Write>(records: &[ResultRecord], mut out: W) -> io::Result<()> {
    // preserve first-seen order of groups, seeds and algorithms
    let mut groups: Vec<GroupKey> = Vec::new();
    let mut by_group: BTreeMap<usize, Vec<&ResultRecord>> = BTreeMap::new();
    for r in records {
        let key = (r.family, r.n, r.n_prime);
        let idx = groups.iter().position(|k| *k == key).unwrap_or_else(|| {
            groups.push(key);
            groups.len() - 1
        });
        by_group.entry(idx).or_default().push(r);
    }
    for (idx, recs) in by_group {
        let (family, n, n_prime) = groups[idx];
        if idx > 0 {
            writeln!(out)?;
        }
        match n_prime {
            Some(k) => writeln!(out, "### {family} n={n} n'={k}")?,
            None => writeln!(out, "### {family} n={n}")?,
        }
        writeln!(out)?;
        write_table(&recs, &mut out)?;
    }
    Ok(())
}

fn write_table<W: Write>(recs: &[&ResultRecord], out: &mut W) -> io::Result<()> {
    let mut algs: Vec<Algorithm> = Vec::new();
    let mut seeds: Vec<u64> = Vec::new();
    for r in recs {
        if !algs.contains(&r.algorithm) {
            algs.push(r.algorithm);
        }
        if !seeds.contains(&r.seed) {
            seeds.push(r.seed);
        }
    }
    let has_pstw = algs.contains(&Algorithm::Pstw);
    let others: Vec<Algorithm> = if has_pstw {
        algs.iter()
            .copied()
            .filter(|&a| a != Algorithm::Pstw)
            .collect()
    } else {
        Vec::new()
    };
    let find =
        |seed: u64, alg: Algorithm| recs.iter().find(|r| r.seed == seed && r.algorithm == alg);

    let mut header = vec!["seed".to_string()];
    for a in &algs {
        header.push(format!("{} α", a.label()));
        header.push(format!("{} time (s)", a.label()));
    }
    for a in &others {
        header.push(format!("{}/PSTw α", a.label()));
        header.push(format!("{}/PSTw time", a.label()));
    }
    writeln!(out, "| {} |", header.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(header.len()))?;

    // per column values across seeds, for the mean row
    let mut columns: Vec<Vec<Option<f64>>> = vec![Vec::new(); header.len() - 1];
    for &seed in &seeds {
        let mut vals: Vec<Option<f64>> = Vec::new();
        for &a in &algs {
            let r = find(seed, a);
            vals.push(r.and_then(|r| r.alpha));
            vals.push(r.map(|r| r.wall_seconds));
        }
        let base = find(seed, Algorithm::Pstw);
        for &a in &others {
            let r = find(seed, a);
            let ratio = |x: Option<f64>, b: Option<f64>| match (x, b) {
                (Some(x), Some(b)) if b != 0.0 => Some(x / b),
                _ => None,
            };
            vals.push(ratio(r.and_then(|r| r.alpha), base.and_then(|b| b.alpha)));
            vals.push(ratio(
                r.map(|r| r.wall_seconds),
                base.map(|b| b.wall_seconds),
            ));
        }
        let mut row = vec![seed.to_string()];
        for (i, v) in vals.into_iter().enumerate() {
            row.push(cell(v, if is_time(i, algs.len()) { 4 } else { 2 }));
            columns[i].push(v);
        }
        writeln!(out, "| {} |", row.join(" | "))?;
    }
    if seeds.len() > 1 {
        let mut row = vec!["mean".to_string()];
        for (i, col) in columns.iter().enumerate() {
            let prec = if is_time(i, algs.len()) { 4 } else { 2 };
            if i < 2 * algs.len() {
                row.push(mean_cell(col, prec));
            } else {
                let vals: Vec<f64> = col.iter().flatten().copied().collect();
                row.push(cell((!vals.is_empty()).then(|| mean_sd(&vals).0), prec));
            }
        }
        writeln!(out, "| {} |", row.join(" | "))?;
    }
    Ok(())
}

// raw time columns sit at odd offsets within the first 2*algs columns
fn is_time(col: usize, algs: usize) -> bool {
    col < 2 * algs && col % 2 == 1
}

pub fn emit_markdown(records: &[ResultRecord], dest: &Path) -> io::Result<()> {
    write_markdown(records, BufWriter::new(File::create(dest)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(6.0), "6.00000");
        assert_eq!(sig6(2.0875), "2.08750");
        assert_eq!(sig6(0.125), "0.125000");
        assert_eq!(sig6(62.96875), "62.9688");
        assert_eq!(sig6(0.0), "0.00000");
        assert_eq!(sig6(123456.0), "123456");
    }

    #[test]
    fn mean_and_sample_sd() {
        let (m, sd) = mean_sd(&[1.0, 3.0]);
        assert_eq!(m, 2.0);
        assert!((sd - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(mean_sd(&[5.0]), (5.0, 0.0));
    }
}
