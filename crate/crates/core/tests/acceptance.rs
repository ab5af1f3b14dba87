//! Acceptance criteria 1-10. Runs without the libtest harness and prints
//! one PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use packcert::arith::{big, int, rat, Surd};
use packcert::bounds::{
    best_known, dgs_antipodal, gerzon_check, levenstein_sq, nozaki_suda, welch_sq, xxy_bound,
};
use packcert::cli::{pointset_to_file, read_pointset, run, verify_report, Claim, Cli};
use packcert::constructions::{cross_polytope, derived_code, e8_roots, icosahedron, simplex_etf};
use packcert::etf::{coro1_classify, coro1_window, etf_report, etf_srg, Coro1Class};
use packcert::gegenbauer::{gegenbauer_eval, harm_dim};
use packcert::leven::{
    embedding_angles, enumerate_sizes, leven_report, leven_srg, two_distance_bound_check,
};
use packcert::pointset::{
    classify, design_strength, dim_identity, gegenbauer_moment, half, verify_annihilator_identity,
    verify_orthogonality, ExtremalKind, PointSet,
};
use packcert::report::{Status, Verdict, WitnessValue};
use packcert::srg::{krein, spectrum, SrgParams};

use clap::Parser;

const TOL: f64 = 1e-9;

type Criterion = (&'static str, fn() -> String);

fn ints(p: &SrgParams) -> Vec<BigRational> {
    p.as_array()
        .iter()
        .map(|s| s.as_rational().expect("rational"))
        .collect()
}

fn c1_gegenbauer_normalization() -> String {
    let one = int(1);
    for d in 2..=10u64 {
        for k in 0..=12usize {
            let h = harm_dim(d, k as u64).unwrap();
            assert_eq!(h, common::harm_dim_oracle(d, k as u64), "h_{k} in R^{d}");
            assert_eq!(
                gegenbauer_eval(d, k, &one).unwrap(),
                BigRational::from_integer(h),
                "G_{k}^({d})(1)"
            );
        }
    }
    "99 exact identities".into()
}

fn c2_krein_gerzon() -> String {
    let start = Instant::now();
    let mut checked = 0usize;
    for d in 3..=60u64 {
        for n in d + 2..=d * (d + 1) / 2 + 50 {
            let (k1, k2) = krein(&etf_srg(d, n).unwrap()).unwrap();
            let krein_ok = k1.signum() != Ordering::Less && k2.signum() != Ordering::Less;
            assert_eq!(
                krein_ok,
                gerzon_check(d, n).unwrap().inside(),
                "d={d} n={n}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    format!(
        "{checked} pairs, 0 mismatches, {:.2} s",
        elapsed.as_secs_f64()
    )
}

fn c3_etf_6_16() -> String {
    let r = etf_report(6, 16).unwrap();
    let aw = r.condition("aw_integrality").unwrap();
    assert_eq!(
        aw.get("sqrt(d(n-1)/(n-d))"),
        Some(&WitnessValue::from(int(3)))
    );
    assert_eq!(
        aw.get("sqrt((n-d)(n-1)/d)"),
        Some(&WitnessValue::from(int(5)))
    );
    let p = etf_srg(6, 16).unwrap();
    assert_eq!(ints(&p), [int(15), int(6), int(1), int(3)]);
    let s = spectrum(&p).unwrap();
    assert_eq!((s.r1, s.r2), (Surd::from(int(1)), Surd::from(int(-3))));
    assert_eq!((s.n1, s.n2), (Surd::from(int(9)), Surd::from(int(5))));
    let (k1, k2) = krein(&p).unwrap();
    assert_eq!((k1, k2), (Surd::from(int(26)), Surd::from(int(6))));
    assert_eq!(coro1_classify(6, 16).unwrap(), Coro1Class::Window);
    assert_eq!(coro1_window(6), (11, 16));
    assert_eq!(r.verdict, Verdict::Feasible);
    "witnesses (3,5), SRG (15,6,1,3), spectrum 1^9 (-3)^5, Krein (26,6), window [11,16]".into()
}

fn c4_leven_d7() -> String {
    let sizes: Vec<u64> = enumerate_sizes(7, false)
        .unwrap()
        .iter()
        .map(|e| e.n)
        .collect();
    assert_eq!(sizes, [35, 39, 42, 63, 84]);
    let kept: Vec<u64> = enumerate_sizes(7, true)
        .unwrap()
        .iter()
        .map(|e| e.n)
        .collect();
    assert_eq!(kept, [63]);
    let (p, s) = leven_srg(7, 63).unwrap();
    assert_eq!(ints(&p), [int(63), int(32), int(16), int(16)]);
    assert_eq!((s.r1, s.r2), (Surd::from(int(4)), Surd::from(int(-4))));
    assert_eq!((s.n1, s.n2), (Surd::from(int(27)), Surd::from(int(35))));
    assert_eq!(embedding_angles(7, 63).unwrap(), (rat(-1, 8), rat(1, 10)));
    let two = two_distance_bound_check(7, 63).unwrap();
    assert_eq!(two.status, Status::Pass);
    assert_eq!(
        two.get("m(m+3)/2"),
        Some(&WitnessValue::from(BigInt::from(665)))
    );
    assert_eq!(leven_report(7, 63).unwrap().verdict, Verdict::Feasible);
    "sizes {35,39,42,63,84} -> {63}; (63,32,16,16); r=(4,-4) x (27,35); angles (-1/8,1/10); 63 <= 665".into()
}

fn c5_icosahedron() -> String {
    let x = icosahedron();
    let h = half(&x).unwrap();
    let r = 1.0 / 5f64.sqrt();
    let coh = classify(&h).unwrap().profile.coherence;
    let welch = welch_sq(3, 6).unwrap();
    assert_eq!(welch, rat(1, 5));
    assert!((coh * coh - 0.2).abs() < TOL, "coherence^2 = {}", coh * coh);
    let s = design_strength(&x, None).unwrap();
    assert_eq!(s.t, 5);
    let s6 = gegenbauer_moment(&x, 6).unwrap();
    assert!((s6 - 823.68).abs() < 1e-6, "S_6 = {s6}");
    assert_eq!(dgs_antipodal(3, 3).unwrap().value, Some(big(12)));
    let angles = [0.0, -r, r];
    let a = verify_annihilator_identity(&h, Some(&angles)).unwrap();
    assert!(a.residual < TOL, "annihilator residual {}", a.residual);
    let nonzero: Vec<f64> = a
        .coeffs
        .iter()
        .copied()
        .filter(|c| c.abs() > 1e-12)
        .collect();
    assert_eq!(nonzero.len(), 2);
    assert!(
        (nonzero[0] - 1.0 / 6.0).abs() < TOL && (nonzero[1] - 1.0 / 14.0).abs() < TOL,
        "{:?}",
        a.coeffs
    );
    let mut worst: f64 = 0.0;
    for (k, l) in [(1, 1), (1, 3), (2, 2)] {
        let res = verify_orthogonality(&h, k, l).unwrap();
        assert!(res < TOL, "D_{k} D_{l} residual {res}");
        worst = worst.max(res);
    }
    assert_eq!(dim_identity(&h, Some(&angles)).unwrap().dimension, 6);
    format!(
        "coherence^2 = 1/5, t = 5, S_6 = {s6:.6}, |X| = 12, expansion (1/6, 1/14) residual {:.1e}, orthogonality {worst:.1e}, dim 6",
        a.residual
    )
}

fn c6_e8() -> String {
    let start = Instant::now();
    let e8 = e8_roots();
    assert_eq!(e8.len(), 240);
    assert_eq!(design_strength(&e8, None).unwrap().t, 7);
    let z = derived_code(&e8, 0).unwrap();
    assert_eq!(z.len(), 126);
    let c = classify(&z).unwrap();
    let angles: Vec<BigRational> = c
        .profile
        .angle_set
        .iter()
        .map(|a| a.exact.clone().unwrap())
        .collect();
    assert_eq!(angles, [int(-1), rat(-1, 2), int(0), rat(1, 2)]);
    let h = half(&z).unwrap();
    assert_eq!((h.len(), h.dim()), (63, 7));
    let hc = classify(&h).unwrap();
    assert_eq!(hc.kind, ExtremalKind::LevensteinEquality);
    let coh_sq = hc.profile.coherence_sq_exact.clone().unwrap();
    assert_eq!(coh_sq, rat(1, 4));
    assert_eq!(coh_sq, levenstein_sq(7, 63).unwrap());
    let (d, n) = (h.dim() as u64, h.len() as u64);
    assert_eq!(9 * n, d * (d + 2) * (d + 2));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    format!(
        "240 roots, t = 7, derived 126 points, half 63 lines with coherence exactly 1/2, {:.2} s",
        elapsed.as_secs_f64()
    )
}

fn c7_bound_relations() -> String {
    let mut applicable = 0usize;
    for d in 4..=50u64 {
        let dq = big(d);
        let first = best_known(d, 4, 5).unwrap().value.unwrap();
        assert_eq!(
            first,
            big(2) * &dq * (&dq + big(2)) * (&dq + big(2)) / big(9)
        );
        let middle = &dq * (&dq + big(1)) * (&dq + big(2)) / big(3);
        let last = nozaki_suda(d, 4, 5).unwrap().value.unwrap();
        assert!(first < middle && middle < last, "d = {d}");
        for t in (1..=13u64).step_by(2) {
            for s in 1..=t + 2 {
                let b = xxy_bound(d, s, t).unwrap();
                if !b.applicable {
                    continue;
                }
                let dgs = dgs_antipodal(d, s).unwrap().value.unwrap();
                let h = BigRational::from_integer(common::harm_dim_oracle(d, t + 2 - s));
                assert_eq!(b.value.unwrap(), dgs - big(2) * h, "d={d} s={s} t={t}");
                applicable += 1;
            }
        }
    }
    format!("chain strict for d in [4,50]; xxy identity on {applicable} applicable (d,s,t)")
}

fn c8_strength_oracle() -> String {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut sets: Vec<(String, PointSet)> = vec![
        ("simplex(3)".into(), simplex_etf(3).unwrap()),
        ("cross(4)".into(), cross_polytope(4).unwrap()),
        ("icosahedron".into(), icosahedron()),
        ("e8".into(), e8_roots()),
        ("e8-derived".into(), derived_code(&e8_roots(), 0).unwrap()),
    ];
    for i in 0..10 {
        let d = rng.gen_range(2..=4);
        let n = rng.gen_range(d + 1..=12);
        sets.push((
            format!("random {i}"),
            PointSet::from_f64(common::random_set(&mut rng, d, n), TOL).unwrap(),
        ));
    }
    for i in 0..10 {
        let d = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=6);
        let pts = common::random_antipodal_set(&mut rng, d, m);
        sets.push((
            format!("antipodal {i}"),
            PointSet::from_f64(pts, TOL).unwrap(),
        ));
    }
    let rotated: Vec<(String, PointSet)> = sets[..5]
        .iter()
        .map(|(name, x)| {
            let q = common::random_rotation(&mut rng, x.dim());
            (
                format!("rotated {name}"),
                PointSet::from_f64(common::rotate(x.coords(), &q), TOL).unwrap(),
            )
        })
        .collect();
    sets.extend(rotated);
    let mut summary = Vec::new();
    for (name, x) in &sets {
        let ours = design_strength(x, Some(8)).unwrap().t;
        let oracle = common::monomial_strength(x.coords(), 8, 1e-8);
        assert_eq!(ours, oracle, "{name}");
        summary.push(ours.to_string());
    }
    format!(
        "{} sets agree; strengths [{}]",
        sets.len(),
        summary.join(",")
    )
}

fn c9_nozaki_suda() -> String {
    for d in 4..=20u64 {
        let dq = big(d);
        let want = (&dq + big(2)) * (&dq * &dq * &dq + big(4) * &dq * &dq - big(9) * &dq + big(12))
            / big(12);
        assert_eq!(nozaki_suda(d, 4, 5).unwrap().value, Some(want), "d = {d}");
    }
    "17 exact equalities".into()
}

fn cli_exit(args: &[&str]) -> i32 {
    let cli = Cli::try_parse_from(std::iter::once("packcert").chain(args.iter().copied())).unwrap();
    run(&cli, &mut Vec::new()).unwrap()
}

fn c10_negative_controls() -> String {
    assert_eq!(etf_report(6, 18).unwrap().verdict, Verdict::Infeasible);
    assert_eq!(cli_exit(&["etf", "--d", "6", "--n", "18"]), 1);
    let r = leven_report(7, 42).unwrap();
    assert_eq!(r.verdict, Verdict::Infeasible);
    assert_eq!(r.condition("al_integrality").unwrap().status, Status::Fail);
    assert_eq!(cli_exit(&["leven", "--d", "7", "--n", "42"]), 1);

    let mut rng = StdRng::seed_from_u64(7);
    let rows: Vec<Vec<f64>> = icosahedron()
        .coords()
        .iter()
        .map(|p| {
            let q: Vec<f64> = p.iter().map(|x| x + rng.gen_range(-1e-3..1e-3)).collect();
            let r = q.iter().map(|x| x * x).sum::<f64>().sqrt();
            q.into_iter().map(|x| x / r).collect()
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perturbed.json");
    std::fs::write(
        &path,
        serde_json::to_string(&pointset_to_file(&PointSet::from_f64(rows, TOL).unwrap())).unwrap(),
    )
    .unwrap();
    let x = read_pointset(&path, None).unwrap();
    let t = design_strength(&x, None).unwrap().t;
    assert!(t < 5, "strength {t}");
    let rep = verify_report(&x, Some(&Claim::Etf), "perturbed.json").unwrap();
    assert_eq!(rep.exit_code(), 1);
    assert_eq!(
        cli_exit(&[
            "verify",
            "--input",
            path.to_str().unwrap(),
            "--claim",
            "etf"
        ]),
        1
    );
    format!("etf(6,18) infeasible, leven(7,42) infeasible, perturbed icosahedron strength {t} and ETF claim fails")
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Gegenbauer normalization", c1_gegenbauer_normalization),
        ("Krein <=> Gerzon exhaustive", c2_krein_gerzon),
        ("ETF pipeline (6,16)", c3_etf_6_16),
        ("Levenstein pipeline d=7", c4_leven_d7),
        ("icosahedron end-to-end", c5_icosahedron),
        ("E8 -> (7,63)", c6_e8),
        ("bound relations", c7_bound_relations),
        ("strength oracle equivalence", c8_strength_oracle),
        ("Nozaki-Suda closed form", c9_nozaki_suda),
        ("negative controls", c10_negative_controls),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    let _ = std::panic::take_hook();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
