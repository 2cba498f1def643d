//! Human and JSON rendering for the single-computation subcommands.

use crate::{Format, OutputArgs, ProfileParams};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::fs;
use twistropy::braid::{reachable_pair_report, BraidWord};
use twistropy::hypersurface::build_kt_example;
use twistropy::ktheory::{kt_verdict, KTReport, Verdict};
use twistropy::profile::{
    entropy_profile, slope_str, spherical_twist_profile, EntropyProfile, SlopeBound, SlopeStatus,
};
use twistropy::serre::{h0_serre, recurrence_dims, RecurrenceSolution};
use twistropy::value::format_sig;
use twistropy::Error;

const SCHEMA_VERSION: u32 = 1;

fn emit(out: &OutputArgs, text: String) -> Result<(), Error> {
    match &out.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn envelope(command: &str, report: Value) -> String {
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "report": report,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn verdict_exit(verdict: Verdict) -> u8 {
    if verdict == Verdict::HypothesisViolated {
        2
    } else {
        0
    }
}

fn slope_bound_str(b: &SlopeBound) -> String {
    match b.status {
        SlopeStatus::Exact => format!("{} (exact)", slope_str(&b.value.unwrap())),
        SlopeStatus::LowerBoundZero => ">= 0".into(),
        SlopeStatus::UpperBoundZero => "<= 0".into(),
        SlopeStatus::Unknown => "unknown".into(),
    }
}

fn kt_human(r: &KTReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "dim V   = {}", r.dim_v);
    let _ = writeln!(s, "lambda  = {}", r.lambda);
    let _ = writeln!(s, "d       = {}", r.d);
    let _ = writeln!(s, "h0      = {}", r.h0);
    let _ = writeln!(s, "log rho = {}", r.log_rho);
    let _ = writeln!(s, "verdict = {:?}", r.verdict);
    if !r.violated_hypotheses.is_empty() {
        let _ = writeln!(s, "violated: {}", r.violated_hypotheses.join(", "));
    }
    s
}

pub fn kt(
    dimv: i64,
    lambda: i64,
    d: i64,
    classes_independent: bool,
    out: &OutputArgs,
) -> Result<u8, Error> {
    if dimv < 0 {
        return Err(Error::InvalidParameter(format!(
            "dim V must be >= 0, got {dimv}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParameter(format!(
            "spherical dimension d must be >= 1, got {d}"
        )));
    }
    let report = kt_verdict(dimv, lambda, d, classes_independent);
    let text = match out.format {
        Format::Human => kt_human(&report),
        Format::Json => envelope("kt", serde_json::to_value(&report).expect("serializable")),
    };
    emit(out, text)?;
    Ok(verdict_exit(report.verdict))
}

pub fn serre(n: i64, dims: Option<i64>, out: &OutputArgs) -> Result<u8, Error> {
    let h0 = h0_serre(n)?;
    let solution = if n >= 3 {
        Some(RecurrenceSolution::new(n)?)
    } else {
        None
    };
    let dim_list = match dims {
        Some(m) => Some(recurrence_dims(n, m)?),
        None => None,
    };
    let text = match out.format {
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "N  = {n}");
            let _ = writeln!(s, "h0 = {h0}");
            if let Some(sol) = &solution {
                let _ = writeln!(
                    s,
                    "sigma+ = {}, sigma- = {}, alpha = {}, beta = {}",
                    format_sig(sol.sigma_plus, 12),
                    format_sig(sol.sigma_minus, 12),
                    format_sig(sol.alpha, 12),
                    format_sig(sol.beta, 12),
                );
            }
            if let Some(list) = &dim_list {
                let joined: Vec<String> = list.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(s, "d_-1.. = {}", joined.join(", "));
            }
            s
        }
        Format::Json => {
            let roots = solution.map(|sol| {
                json!({
                    "sigma_plus": format_sig(sol.sigma_plus, 12),
                    "sigma_minus": format_sig(sol.sigma_minus, 12),
                    "alpha": format_sig(sol.alpha, 12),
                    "beta": format_sig(sol.beta, 12),
                })
            });
            let dims_json = dim_list
                .map(|list| Value::from(list.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
            envelope(
                "serre",
                json!({
                    "n": n,
                    "h0": serde_json::to_value(&h0).expect("serializable"),
                    "roots": roots,
                    "dims": dims_json,
                }),
            )
        }
    };
    emit(out, text)?;
    Ok(0)
}

pub fn build_profile(params: &ProfileParams) -> Result<EntropyProfile, Error> {
    if params.single {
        if params.w != 0 {
            return Err(Error::InconsistentInput(
                "--single describes one twist; --w does not apply".into(),
            ));
        }
        spherical_twist_profile(params.d, params.orthogonal)
    } else {
        let dimv = params.dimv.expect("clap enforces --dimv without --single");
        entropy_profile(dimv, params.d, params.w, params.orthogonal, params.ambient)
    }
}

fn profile_json(params: &ProfileParams, profile: &EntropyProfile) -> Value {
    json!({
        "single": params.single,
        "dim_v": params.dimv,
        "d": params.d,
        "w": params.w,
        "orthogonal_nonempty": params.orthogonal,
        "ambient_smooth_proper": params.ambient,
        "profile": serde_json::to_value(profile).expect("serializable"),
    })
}

pub fn entropy(params: &ProfileParams, out: &OutputArgs) -> Result<u8, Error> {
    let profile = build_profile(params)?;
    let text = match out.format {
        Format::Human => {
            let mut s = String::new();
            if params.single {
                let _ = writeln!(s, "single twist, d = {}:", params.d);
            } else {
                let _ = writeln!(
                    s,
                    "composition, dim V = {}, d = {}, w = {}:",
                    params.dimv.unwrap(),
                    params.d,
                    params.w
                );
            }
            let _ = write!(s, "{profile}");
            let _ = writeln!(
                s,
                "  tau- = {}, tau+ = {}",
                slope_bound_str(&profile.tau_minus),
                slope_bound_str(&profile.tau_plus)
            );
            s
        }
        Format::Json => envelope("entropy", profile_json(params, &profile)),
    };
    emit(out, text)?;
    Ok(0)
}

pub fn cy(n: i64, m: i64, out: &OutputArgs) -> Result<u8, Error> {
    let report = build_kt_example(n, m)?;
    let text = match out.format {
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "X in P^{n} x P^{m}: dimension d = {}", report.d);
            let _ = writeln!(s, "N      = {}", report.big_n);
            let _ = writeln!(s, "V      = {}", report.v);
            let _ = writeln!(s, "dim V  = {}", report.dim_v);
            let _ = writeln!(s, "w      = {}", report.w);
            let _ = writeln!(s, "lambda = {}", report.lambda);
            let _ = writeln!(s, "gap ok = {}", report.gap_ok);
            let _ = writeln!(s, "case   = {:?}", report.case_label);
            s.push_str(&kt_human(&report.kt));
            s
        }
        Format::Json => envelope("cy", serde_json::to_value(&report).expect("serializable")),
    };
    emit(out, text)?;
    Ok(verdict_exit(report.kt.verdict))
}

pub fn braid(
    word: &str,
    i: u8,
    word2: &str,
    j: u8,
    d: i64,
    out: &OutputArgs,
) -> Result<u8, Error> {
    let w1: BraidWord = word.parse()?;
    let w2: BraidWord = word2.parse()?;
    let report = reachable_pair_report(&w1, i, &w2, j, d)?;
    let text = match out.format {
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "d = {d}, E2 = \"{w1}\"·S{i}, E1 = \"{w2}\"·S{j}");
            let _ = writeln!(s, "p       = {}", report.p);
            let _ = writeln!(s, "V       = {}", report.v);
            let _ = writeln!(s, "dim V   = {}", report.dim_v);
            let _ = writeln!(
                s,
                "chi     = {} (K-theory route: {}, cross-check {})",
                report.chi,
                report.chi_ktheory,
                if report.ktheory_cross_check { "ok" } else { "FAILED" }
            );
            let _ = writeln!(s, "degree lattice ok = {}", report.degree_lattice_ok);
            let _ = writeln!(s, "gap ok  = {}", report.gap_ok);
            let _ = writeln!(s, "h0      = {}", report.kt.h0);
            let _ = writeln!(s, "log rho = {}", report.kt.log_rho);
            let _ = writeln!(s, "verdict = {:?}", report.kt.verdict);
            s
        }
        Format::Json => envelope("braid", serde_json::to_value(&report).expect("serializable")),
    };
    emit(out, text)?;
    Ok(verdict_exit(report.kt.verdict))
}
