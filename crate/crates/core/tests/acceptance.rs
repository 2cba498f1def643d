//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. Run with `cargo test --test acceptance -- --nocapture`.

use num::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

use twistropy::braid::{
    hom_poincare, reachable_pair_report, BraidLetter, BraidWord, CyAlgebra, TwistedComplex,
};
use twistropy::graded::GradedDim;
use twistropy::hypersurface::{build_kt_example, hypersurface_section_cohom, section_rank};
use twistropy::ktheory::{
    composition_matrix, hypothesis, kt_verdict, log_spectral_radius, torelli_check, Verdict,
};
use twistropy::laurent::Laurent1;
use twistropy::profile::{
    entropy_profile, h0_composition, spherical_twist_profile, PieceKind, Slope, SlopeStatus,
};
use twistropy::serre::{closed_form_dim, h0_serre, log_dim, recurrence_dims};
use twistropy::Error;

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_recurrence_and_closed_form_agree() {
    let start = Instant::now();
    for n in 3..=10 {
        let dims = recurrence_dims(n, 50).unwrap();
        for w in dims.windows(3) {
            assert_eq!(&w[2] + &w[0], BigInt::from(n) * &w[1]);
        }
        for m in 0..=50i64 {
            let exact = dims[(m + 1) as usize].to_f64().unwrap();
            let closed = closed_form_dim(n, m).unwrap();
            assert!(
                (closed - exact).abs() <= 1e-6 * exact.abs(),
                "N={n} m={m}: closed {closed} vs exact {exact}"
            );
        }
    }
    finish("01 recurrence/closed-form agreement", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_serre_entropy_limit() {
    let start = Instant::now();
    for n in [3, 4, 5] {
        let m = 5000i64;
        let estimate = log_dim(n, 2 * m - 2).unwrap() / m as f64;
        let target = h0_serre(n).unwrap().approx();
        assert!(
            (estimate - target).abs() < 1e-3,
            "N={n}: estimate {estimate} vs h0 {target}"
        );
    }
    // N = 2: d_m = m + 1, so the estimate is log(2m - 1) / m
    let m = 10_000f64;
    assert!(((2.0 * m - 1.0).ln() / m).abs() < 1e-3);
    finish("02 Serre entropy limit", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_closed_form_cross_identity() {
    let start = Instant::now();
    for k in 2..=20i64 {
        assert_eq!(h0_composition(k), h0_serre(k).unwrap(), "k={k}");
    }
    for k in 3..=20i64 {
        assert_eq!(h0_composition(k), log_spectral_radius(k), "k={k}");
    }
    finish("03 closed-form cross-identity", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_kt_dichotomy_table() {
    let start = Instant::now();
    for d in [2i64, 3] {
        for dim_v in 0..=12i64 {
            for lambda in -12..=12i64 {
                let r = kt_verdict(dim_v, lambda, d, true);
                let nondegenerate_fails =
                    (d % 2 == 0 && lambda.abs() == 2) || (d % 2 == 1 && lambda == 0);
                let consistent = lambda.abs() <= dim_v;

                assert_eq!(
                    r.violated_hypotheses.contains(&hypothesis::PAIRING_PM2_WITH_EVEN_D),
                    d % 2 == 0 && lambda.abs() == 2,
                    "pm2 label at dimV={dim_v} λ={lambda} d={d}"
                );
                assert_eq!(
                    r.violated_hypotheses.contains(&hypothesis::PAIRING_ZERO_WITH_ODD_D),
                    d % 2 == 1 && lambda == 0,
                    "zero label at dimV={dim_v} λ={lambda} d={d}"
                );

                if nondegenerate_fails || !consistent {
                    assert_eq!(r.verdict, Verdict::HypothesisViolated);
                    continue;
                }
                let expected = if dim_v <= 2 || lambda.abs() == dim_v {
                    Verdict::Equal
                } else {
                    Verdict::StrictGap
                };
                assert_eq!(r.verdict, expected, "dimV={dim_v} λ={lambda} d={d}");
                if expected == Verdict::StrictGap {
                    assert!(r.h0.approx() > r.log_rho.approx());
                }
            }
        }
    }
    finish("04 KT dichotomy table", start, Duration::from_secs(1));
}

#[test]
fn criterion_05_hypersurface_counterexamples() {
    let start = Instant::now();
    let r = build_kt_example(2, 2).unwrap();
    assert_eq!(r.d, 3);
    assert_eq!(r.big_n, BigInt::from(10));
    assert_eq!(r.dim_v, BigInt::from(11));
    assert_eq!(r.lambda, BigInt::from(9));
    assert_eq!(r.kt.verdict, Verdict::StrictGap);
    assert!((r.kt.h0.approx() - 4.77901).abs() < 1e-4);
    assert!((r.kt.log_rho.approx() - 4.36932).abs() < 1e-4);

    let r = build_kt_example(3, 2).unwrap();
    assert_eq!(r.big_n, BigInt::from(35));
    assert_eq!(r.d, 4);
    assert_eq!(r.lambda, BigInt::from(34));
    assert_eq!(r.kt.verdict, Verdict::StrictGap);
    finish("05 hypersurface counterexamples", start, Duration::from_millis(100));
}

fn exact_slopes(profile: &twistropy::profile::EntropyProfile) -> Vec<(bool, Option<Slope>)> {
    profile
        .pieces
        .iter()
        .map(|p| match &p.kind {
            PieceKind::Exact { slope } => (true, Some(*slope)),
            PieceKind::ExactZero => (true, Some(Slope::zero())),
            _ => (false, None),
        })
        .collect()
}

#[test]
fn criterion_06_profile_conformance() {
    let start = Instant::now();
    for d in 1..=6i64 {
        // dim V = 0: exact slope 1 - d on t <= 0
        let p = entropy_profile(0, d, 0, false, true).unwrap();
        assert_eq!(
            exact_slopes(&p),
            vec![
                (true, Some(Slope::from_integer(1 - d))),
                (false, None)
            ]
        );

        // dim V = 1: exact slope 4/3 - d where (4/3 - d) t >= 0
        let p = entropy_profile(1, d, 0, false, true).unwrap();
        let s = Slope::new(4 - 3 * d, 3);
        if d == 1 {
            assert_eq!(exact_slopes(&p), vec![(false, None), (true, Some(s))]);
        } else {
            assert_eq!(exact_slopes(&p), vec![(true, Some(s)), (false, None)]);
        }

        // dim V = 2, w = 0: exact slope 2 - d where (2 - d) t >= 0
        let p = entropy_profile(2, d, 0, false, true).unwrap();
        let s = Slope::from_integer(2 - d);
        match d {
            1 => assert_eq!(exact_slopes(&p), vec![(false, None), (true, Some(s))]),
            2 => assert_eq!(exact_slopes(&p), vec![(true, Some(s))]),
            _ => assert_eq!(exact_slopes(&p), vec![(true, Some(s)), (false, None)]),
        }

        // dim V = 2, w > 0 under the ambient hypothesis
        for w in 1..=4i64 {
            let p = entropy_profile(2, d, w, false, true).unwrap();
            let left = Slope::from_integer(2 - (d + w));
            let right = Slope::from_integer(2 - (d - w));
            let mut expect = Vec::new();
            expect.push(if d + w >= 2 {
                (true, Some(left))
            } else {
                (false, None)
            });
            expect.push(if d - w <= 2 {
                (true, Some(right))
            } else {
                (false, None)
            });
            assert_eq!(exact_slopes(&p), expect, "d={d} w={w}");
        }
    }

    // every profile: exact pieces respect the band of an exact tau, and the
    // bounds meet continuously at zero
    let mut cases = Vec::new();
    for dimv in 0..=2i64 {
        for d in 1..=6i64 {
            let ws: &[i64] = if dimv == 2 { &[0, 1, 2, 3, 4] } else { &[0] };
            for &w in ws {
                for orth in [false, true] {
                    if let Ok(p) = entropy_profile(dimv, d, w, orth, true) {
                        cases.push(p);
                    }
                }
            }
        }
    }
    for d in 1..=6i64 {
        for orth in [false, true] {
            cases.push(spherical_twist_profile(d, orth).unwrap());
        }
    }
    for p in &cases {
        let (lo, hi, _) = p.bounds_at(0.0);
        if let Some(lo) = lo {
            assert!(lo.abs() < 1e-12);
        }
        if let Some(hi) = hi {
            assert!(hi >= -1e-12);
        }
        for t in [-3.0f64, -1.0, -0.25, 0.25, 1.0, 3.0] {
            let (lo, hi, exact) = p.bounds_at(t);
            if let (Some(lo), Some(hi)) = (lo, hi) {
                assert!(lo <= hi + 1e-12);
            }
            if exact {
                let v = lo.unwrap();
                let tau = if t < 0.0 { p.tau_minus } else { p.tau_plus };
                if tau.status == SlopeStatus::Exact {
                    let line =
                        (*tau.value.unwrap().numer() as f64) / (*tau.value.unwrap().denom() as f64) * t;
                    assert!(line <= v + 1e-12);
                    assert!(v <= p.h0.approx() + line + 1e-12);
                }
            }
        }
    }
    finish("06 profile conformance", start, Duration::from_secs(1));
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::new(
        (0..len)
            .map(|_| BraidLetter {
                gen: rng.gen_range(1..=2),
                inverse: rng.gen_bool(0.5),
            })
            .collect(),
    )
}

#[test]
fn criterion_07_braid_engine_calibration() {
    let start = Instant::now();
    let braid_left: BraidWord = "121".parse().unwrap();
    let braid_right: BraidWord = "212".parse().unwrap();
    for d in [2i64, 3, 4, 5] {
        let alg = CyAlgebra::new(d).unwrap();
        let s1 = TwistedComplex::simple(&alg, 1);
        let s2 = TwistedComplex::simple(&alg, 2);

        // spherical shape and the inter-simple Hom
        for s in [&s1, &s2] {
            assert_eq!(
                hom_poincare(&alg, s, s),
                Laurent1::from_terms([(0, 1), (d, 1)])
            );
        }
        assert_eq!(hom_poincare(&alg, &s2, &s1), Laurent1::monomial(d - 1, 1));

        // T_i S_i = S_i[1 - d]
        for (v, s) in [(1u8, &s1), (2u8, &s2)] {
            let t = s.apply_word(&alg, &BraidWord::single(v, false));
            assert_eq!(t.generators().len(), 1);
            assert_eq!(t.generators()[0].vertex, v);
            assert_eq!(t.generators()[0].shift, 1 - d);
            assert_eq!(
                hom_poincare(&alg, s, &t),
                Laurent1::from_terms([(d - 1, 1), (2 * d - 1, 1)])
            );
        }

        let mut rng = ChaCha8Rng::seed_from_u64(7000 + d as u64);
        for _ in 0..50 {
            let w = random_word(&mut rng, 4);
            let x = TwistedComplex::simple(&alg, rng.gen_range(1..=2)).apply_word(&alg, &w);

            // inverse cancellation through both probes
            let round = x.apply_word(&alg, &w.inverse()).apply_word(&alg, &w);
            for probe in [&s1, &s2] {
                assert_eq!(
                    hom_poincare(&alg, probe, &round),
                    hom_poincare(&alg, probe, &x),
                    "inverse cancellation failed for {w} (d={d})"
                );
            }

            // braid relation through both probes
            let lx = x.apply_word(&alg, &braid_left);
            let rx = x.apply_word(&alg, &braid_right);
            for probe in [&s1, &s2] {
                assert_eq!(
                    hom_poincare(&alg, probe, &lx),
                    hom_poincare(&alg, probe, &rx),
                    "braid relation failed for {w} (d={d})"
                );
            }
        }
    }
    finish("07 braid engine calibration", start, Duration::from_secs(30));
}

#[test]
fn criterion_08_reachable_pair_invariants() {
    let start = Instant::now();
    for d in [2i64, 3] {
        let mut rng = ChaCha8Rng::seed_from_u64(8000 + d as u64);
        let mut checked = 0;
        while checked < 50 {
            let w1 = random_word(&mut rng, 6);
            let w2 = random_word(&mut rng, 6);
            let i = rng.gen_range(1..=2);
            let j = rng.gen_range(1..=2);
            let report = match reachable_pair_report(&w1, i, &w2, j, d) {
                Ok(r) => r,
                Err(Error::PossiblyIsomorphicPair { .. }) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            assert!(
                report.degree_lattice_ok,
                "degree lattice failed: d={d} {w1}·S{i} vs {w2}·S{j}"
            );
            if d % 2 == 1 {
                assert_eq!(
                    report.chi.abs(),
                    report.dim_v,
                    "odd-d pairing: d={d} {w1}·S{i} vs {w2}·S{j}"
                );
            } else {
                let a = report.chi.abs();
                assert!(
                    a.is_one() || a == BigInt::from(2),
                    "even-d pairing |χ| = {a}: {w1}·S{i} vs {w2}·S{j}"
                );
            }
            assert!(
                report.ktheory_cross_check,
                "K-theory mismatch: χ = {} vs {}: d={d} {w1}·S{i} vs {w2}·S{j}",
                report.chi, report.chi_ktheory
            );
            checked += 1;
        }
    }
    finish("08 reachable-pair invariants", start, Duration::from_secs(120));
}

#[test]
fn criterion_09_torelli_identity() {
    let start = Instant::now();
    for d in [2i64, 4, 6] {
        assert!(torelli_check(1, d));
        assert!(torelli_check(-1, d));
    }
    for lambda in 2i64..=10 {
        for sign in [1i64, -1] {
            for d in [2i64, 3, 4] {
                let cube = composition_matrix(sign * lambda, d).pow(3);
                assert!(!cube.is_identity(), "λ={} d={d}", sign * lambda);
            }
        }
    }
    finish("09 Torelli identity", start, Duration::from_millis(100));
}

#[test]
fn criterion_10_hypersurface_cohomology() {
    let start = Instant::now();
    for n in 1..=8i64 {
        for m in 1..=8i64 {
            let got = hypersurface_section_cohom(n, m, 0, 0).unwrap();
            assert_eq!(
                got,
                GradedDim::from_pairs([(0, 1u64), (m + n - 1, 1u64)]),
                "structure sheaf at n={n} m={m}"
            );
            if m >= 2 {
                let v = hypersurface_section_cohom(n, m, n + 1, 0).unwrap();
                let expect = GradedDim::from_pairs([
                    (0, section_rank(n).to_biguint().unwrap()),
                    (m - 1, 1u64.into()),
                ]);
                assert_eq!(v, expect, "section bundle at n={n} m={m}");
            }
        }
    }
    finish("10 hypersurface cohomology", start, Duration::from_millis(100));
}
