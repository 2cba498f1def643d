//! Grid scans and profile sampling, emitted as CSV. Scan rows may fan out to
//! worker threads (`TWISTROPY_WORKERS`, default 1); row order is always the
//! lexicographic grid order.

use crate::ProfileParams;
use std::path::Path;
use twistropy::hypersurface::build_kt_example;
use twistropy::ktheory::{kt_verdict, Verdict};
use twistropy::value::format_sig;
use twistropy::Error;

pub const SCAN_HEADER: [&str; 10] = [
    "n", "m", "d", "N", "dimV", "lambda", "verdict", "h0", "log_rho", "error",
];

type Row = Vec<String>;

/// Inclusive integer range in `lo..hi` or single-value form.
fn parse_range(label: &str, text: &str) -> Result<Vec<i64>, Error> {
    let bad = |t: &str| {
        Error::InvalidParameter(format!(
            "range for --{label} must look like \"2..4\" or \"3\", got \"{t}\""
        ))
    };
    let parse_int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad(text));
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_int(lo)?;
            let hi = parse_int(hi)?;
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![parse_int(text)?]),
    }
}

fn worker_count() -> usize {
    std::env::var("TWISTROPY_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Applies `f` to every item, optionally striped over worker threads, and
/// returns results in input order.
fn ordered_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = worker_count().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks: Vec<_> = slots.chunks_mut(items.len().div_ceil(workers)).collect();
        for (w, chunk) in chunks.into_iter().enumerate() {
            let f = &f;
            let offset = w * items.len().div_ceil(workers);
            scope.spawn(move || {
                for (k, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(f(&items[offset + k]));
                }
            });
        }
    });
    slots.into_iter().map(|r| r.expect("filled")).collect()
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Equal => "Equal",
        Verdict::StrictGap => "StrictGap",
        Verdict::HypothesisViolated => "HypothesisViolated",
    }
}

fn nm_row(n: i64, m: i64) -> Row {
    match build_kt_example(n, m) {
        Ok(r) => vec![
            n.to_string(),
            m.to_string(),
            r.d.to_string(),
            r.big_n.to_string(),
            r.dim_v.to_string(),
            r.lambda.to_string(),
            verdict_str(r.kt.verdict).to_string(),
            format_sig(r.kt.h0.approx(), 12),
            format_sig(r.kt.log_rho.approx(), 12),
            String::new(),
        ],
        Err(e) => vec![
            n.to_string(),
            m.to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            e.to_string(),
        ],
    }
}

fn kt_row(dimv: i64, lambda: i64, d: i64) -> Row {
    let mut row = vec![
        String::new(),
        String::new(),
        d.to_string(),
        String::new(),
        dimv.to_string(),
        lambda.to_string(),
    ];
    if dimv < 0 || d < 1 {
        row.extend([
            String::new(),
            String::new(),
            String::new(),
            format!("requires dim V >= 0 and d >= 1, got dim V = {dimv}, d = {d}"),
        ]);
        return row;
    }
    let r = kt_verdict(dimv, lambda, d, true);
    row.extend([
        verdict_str(r.verdict).to_string(),
        format_sig(r.h0.approx(), 12),
        format_sig(r.log_rho.approx(), 12),
        String::new(),
    ]);
    row
}

fn write_csv(rows: Vec<Row>, output: Option<&Path>) -> Result<(), Error> {
    let io_err = |e: csv::Error| Error::InvalidParameter(format!("cannot write CSV: {e}"));
    let mut writer: csv::Writer<Box<dyn std::io::Write>> = match output {
        Some(path) => csv::Writer::from_writer(Box::new(std::fs::File::create(path).map_err(
            |e| Error::InvalidParameter(format!("cannot create {}: {e}", path.display())),
        )?)),
        None => csv::Writer::from_writer(Box::new(std::io::stdout())),
    };
    writer.write_record(SCAN_HEADER).map_err(io_err)?;
    for row in rows {
        writer.write_record(&row).map_err(io_err)?;
    }
    writer.flush().map_err(|e| {
        Error::InvalidParameter(format!("cannot flush CSV: {e}"))
    })
}

pub fn run(
    n: Option<String>,
    m: Option<String>,
    dimv: Option<String>,
    lambda: Option<String>,
    d: Option<String>,
    output: Option<&Path>,
) -> Result<u8, Error> {
    let rows = match (&n, &m, &dimv, &lambda, &d) {
        (Some(n), Some(m), None, None, None) => {
            let ns = parse_range("n", n)?;
            let ms = parse_range("m", m)?;
            let points: Vec<(i64, i64)> = ns
                .iter()
                .flat_map(|&a| ms.iter().map(move |&b| (a, b)))
                .collect();
            ordered_map(&points, |&(a, b)| nm_row(a, b))
        }
        (None, None, Some(dimv), Some(lambda), Some(d)) => {
            let dims = parse_range("dimv", dimv)?;
            let lambdas = parse_range("lambda", lambda)?;
            let ds = parse_range("d", d)?;
            let mut points = Vec::new();
            for &v in &dims {
                for &l in &lambdas {
                    for &dd in &ds {
                        points.push((v, l, dd));
                    }
                }
            }
            ordered_map(&points, |&(v, l, dd)| kt_row(v, l, dd))
        }
        _ => {
            return Err(Error::InvalidParameter(
                "scan takes either --n and --m, or --dimv, --lambda and --d".into(),
            ))
        }
    };
    write_csv(rows, output)?;
    Ok(0)
}

fn bound_str(b: Option<f64>, positive: bool) -> String {
    match b {
        Some(v) => format_sig(v, 12),
        None if positive => "+inf".into(),
        None => "-inf".into(),
    }
}

pub fn profile_csv(
    params: &ProfileParams,
    t_min: f64,
    t_max: f64,
    step: f64,
    output: Option<&Path>,
) -> Result<u8, Error> {
    if t_min.partial_cmp(&t_max) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidParameter(format!(
            "need t_min < t_max, got {t_min} and {t_max}"
        )));
    }
    if step.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidParameter(format!(
            "need step > 0, got {step}"
        )));
    }
    let profile = crate::render::build_profile(params)?;
    let io_err = |e: csv::Error| Error::InvalidParameter(format!("cannot write CSV: {e}"));
    let mut writer: csv::Writer<Box<dyn std::io::Write>> = match output {
        Some(path) => csv::Writer::from_writer(Box::new(std::fs::File::create(path).map_err(
            |e| Error::InvalidParameter(format!("cannot create {}: {e}", path.display())),
        )?)),
        None => csv::Writer::from_writer(Box::new(std::io::stdout())),
    };
    writer
        .write_record(["t", "lower", "upper", "exact"])
        .map_err(io_err)?;
    let mut k = 0u64;
    loop {
        let t = t_min + k as f64 * step;
        if t > t_max + step * 1e-9 {
            break;
        }
        let (lower, upper, exact) = profile.bounds_at(t);
        if let (Some(lo), Some(hi)) = (lower, upper) {
            debug_assert!(lo <= hi + 1e-12);
        }
        writer
            .write_record([
                format_sig(t, 12),
                bound_str(lower, false),
                bound_str(upper, true),
                exact.to_string(),
            ])
            .map_err(io_err)?;
        k += 1;
    }
    writer
        .flush()
        .map_err(|e| Error::InvalidParameter(format!("cannot flush CSV: {e}")))?;
    Ok(0)
}
