//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
//! the process exits nonzero if any fails.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use semiinv::boxpartitions::{count_partitions_in_box, delta};
use semiinv::cache::{KernelCache, Lookup};
use semiinv::cayley::{apply_d, kernel_basis, semiinvariant_dim, shear_check};
use semiinv::differences::{
    f_difference, g_difference, stanley_zanello, verify_gaussian_strictness, verify_nr8_base,
    verify_sylvester, verify_theorem_f, verify_theorem_g,
};
use semiinv::monomials::{antilex_compare, Monomial, SIPoly};
use semiinv::qpoly::{gauss, QPoly};
use semiinv::semiinv::{independence_check, rank, strict_witnesses};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn coeffs_i64(p: &QPoly, range: std::ops::RangeInclusive<usize>) -> Vec<i64> {
    range.map(|i| i64::try_from(p.coeff(i)).unwrap()).collect()
}

fn g_golden() -> Outcome {
    let start = Instant::now();
    let g = ok(g_difference(8, 14, 10))?;
    let elapsed = start.elapsed();
    ensure(g.degree() == Some(112), || {
        format!("degree {:?}", g.degree())
    })?;
    ensure(g.is_symmetric(), || "not symmetric".into())?;
    let head = coeffs_i64(&g, 0..=7);
    ensure(head == [1, 1, 2, 3, 5, 7, 11, 15], || {
        format!("q^0..q^7 = {head:?}")
    })?;
    let middle = coeffs_i64(&g, 53..=59);
    ensure(middle == [8310, 8408, 8450, 8479, 8450, 8408, 8310], || {
        format!("q^53..q^59 = {middle:?}")
    })?;
    let tail = coeffs_i64(&g, 106..=112);
    ensure(tail == [11, 7, 5, 3, 2, 1, 1], || {
        format!("q^106..q^112 = {tail:?}")
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "head, middle and tail match; computed in {elapsed:?}"
    ))
}

fn kernel_dimension() -> Outcome {
    let cells = ok(verify_sylvester(6, 6))?;
    Ok(format!(
        "kernel dimension equals delta on {cells} cells with n, k <= 6"
    ))
}

fn quartic_basis() -> Outcome {
    ensure(delta(4, 4, 6) == BigInt::from(2), || {
        "delta(4, 4, 6) != 2".into()
    })?;
    let kb = ok(kernel_basis(4, 4, 6))?;
    let lead: Vec<String> = kb.leading_terms().iter().map(|m| m.to_string()).collect();
    ensure(lead == ["a_1^2 a_2^2", "a_0 a_2^3"], || {
        format!("leading terms {lead:?}")
    })?;
    let i1 = ok(SIPoly::parse(
        4,
        "3a_1^2a_2^2 - 4a_1^3a_3 - 2a_0a_1a_2a_3 + 3a_0^2a_3^2 + 4a_0a_1^2a_4 - 4a_0^2a_2a_4",
    ))?;
    let i2 = ok(SIPoly::parse(
        4,
        "a_0a_2^3 - 2a_0a_1a_2a_3 + a_0^2a_3^2 + a_0a_1^2a_4 - a_0^2a_2a_4",
    ))?;
    for (name, p) in [("I_1", &i1), ("I_2", &i2)] {
        ensure(apply_d(p).is_zero(), || format!("D does not kill {name}"))?;
        let mut span = kb.vectors.clone();
        span.push(p.clone());
        ensure(rank(&span) == 2, || {
            format!("{name} is outside the kernel span")
        })?;
    }
    ensure(rank(&[i1, i2]) == 2, || "I_1, I_2 dependent".into())?;
    Ok("leading terms a_1^2 a_2^2 > a_0 a_2^3; both explicit invariants lie in the span".into())
}

fn random_rational(rng: &mut StdRng) -> BigRational {
    BigRational::new(
        rng.gen_range(-20i64..=20).into(),
        rng.gen_range(1i64..=9).into(),
    )
}

fn classical_invariants() -> Outcome {
    let cases = [
        (2, "a_0a_2 - a_1^2"),
        (2, "a_0^2a_2 - a_0a_1^2"),
        (4, "3a_2^2 - 4a_1a_3 + a_0a_4"),
    ];
    let mut rng = StdRng::seed_from_u64(20);
    for (n, src) in cases {
        let p = ok(SIPoly::parse(n, src))?;
        ensure(apply_d(&p).is_zero(), || format!("D does not kill {src}"))?;
        for _ in 0..20 {
            let h = random_rational(&mut rng);
            let a: Vec<BigRational> = (0..=n).map(|_| random_rational(&mut rng)).collect();
            ensure(shear_check(&p, &h, &a), || {
                format!("{src} changes under the shear h = {h}, a = {a:?}")
            })?;
        }
    }
    Ok("three invariants annihilated by D and fixed by 20 random shears each".into())
}

fn nr8_base() -> Outcome {
    let start = Instant::now();
    let cells = ok(verify_nr8_base())?;
    let counting = start.elapsed();
    ensure(counting < Duration::from_secs(10), || {
        format!("counting took {counting:?}")
    })?;
    let start = Instant::now();
    let nullity = ok(semiinvariant_dim(8, 8, 32))?;
    ensure(nullity >= 2, || format!("nullity {nullity} at (8, 8, 32)"))?;
    Ok(format!(
        "delta >= 2 on {cells} cells ({counting:?}); nullity {nullity} at (8, 8, 32) over {} monomials ({:?})",
        count_partitions_in_box(8, 8, 32),
        start.elapsed()
    ))
}

fn gaussian_strictness() -> Outcome {
    let cells = ok(verify_gaussian_strictness(12, 12))?;
    Ok(format!("delta >= 1 on {cells} cells with 8 <= n, k <= 12"))
}

fn theorem_f() -> Outcome {
    let reports = ok(verify_theorem_f(12, 12))?;
    ensure(reports.len() == 6 * 11, || {
        format!("{} cells", reports.len())
    })?;
    let bridged = reports
        .iter()
        .all(|r| r.checks["delta_bridge"] && r.checks["coefficient_identity"]);
    ensure(bridged, || "difference bridge failed".into())?;
    Ok(format!(
        "{} cells symmetric, unimodal, with matching delta differences",
        reports.len()
    ))
}

fn theorem_g() -> Outcome {
    let reports = ok(verify_theorem_g(10, 14, 10))?;
    let expected = [
        (8u64, 8u64),
        (8, 9),
        (8, 10),
        (9, 8),
        (9, 10),
        (10, 8),
        (10, 9),
        (10, 10),
    ]
    .iter()
    .map(|&(_, r)| 14 - r as usize + 1)
    .sum::<usize>();
    ensure(reports.len() == expected, || {
        format!("{} cells, expected {expected}", reports.len())
    })?;
    Ok(format!(
        "{} cells symmetric and strictly unimodal except the end pairs",
        reports.len()
    ))
}

fn strictness_counterexamples() -> Outcome {
    for (n, k) in [(5, 9), (14, 5)] {
        let f = ok(f_difference(n, k))?;
        ensure(!ok(f.is_strictly_unimodal_except_ends())?, || {
            format!("F({n}, {k}) is strict")
        })?;
    }
    let f = ok(f_difference(8, 15))?;
    ensure(ok(f.is_strictly_unimodal_except_ends())?, || {
        "F(8, 15) is not strict".into()
    })?;
    Ok("F(5, 9) and F(14, 5) not strict; F(8, 15) strict".into())
}

fn constructive_witnesses() -> Outcome {
    let mut details = Vec::new();
    for (n, k, r, m) in [(8u32, 10u32, 8u32, 40u64), (8, 9, 8, 36)] {
        let start = Instant::now();
        let t = delta(k - r, n, (m - (n * r / 2) as u64) as i64);
        let ws = ok(strict_witnesses(n, k, r, m))?;
        ensure(BigInt::from(ws.len()) == &t + 1, || {
            format!("{} witnesses at {:?}, t = {t}", ws.len(), (n, k, r, m))
        })?;
        for w in &ws {
            ensure(w.homogeneity() == Some((k as u64, m)), || {
                "wrong degree or weight".into()
            })?;
            ensure(apply_d(w).is_zero(), || "D does not kill a witness".into())?;
        }
        ensure(independence_check(&ws), || "witnesses are dependent".into())?;
        details.push(format!(
            "{:?}: {} vectors ({:?})",
            (n, k, r, m),
            ws.len(),
            start.elapsed()
        ));
    }
    Ok(details.join("; "))
}

fn reduction_identity() -> Outcome {
    let mut cells = 0;
    for n in (2..=10).step_by(2) {
        for k in 2..=10 {
            let lhs = ok(stanley_zanello(k, n + k, n + k - 2))?;
            ensure(lhs == ok(f_difference(n, k))?, || {
                format!("differs at (n, k) = ({n}, {k})")
            })?;
            cells += 1;
        }
    }
    Ok(format!("identity holds on {cells} cells"))
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, n + 1).prop_map(Monomial::new)
}

fn reversed_tuple_order(a: &Monomial, b: &Monomial) -> Ordering {
    let ra: Vec<_> = a.exponents().iter().rev().collect();
    let rb: Vec<_> = b.exponents().iter().rev().collect();
    rb.cmp(&ra)
}

fn property_suites() -> Outcome {
    run_property(
        "order totality",
        256,
        (monomial(4), monomial(4)),
        |(a, b)| {
            let c = antilex_compare(&a, &b).unwrap();
            prop_assert_eq!(c, reversed_tuple_order(&a, &b));
            prop_assert_eq!(c, antilex_compare(&b, &a).unwrap().reverse());
            prop_assert_eq!(c == Ordering::Equal, a == b);
            Ok(())
        },
    )?;
    run_property(
        "order multiplicativity",
        256,
        (monomial(4), monomial(4), monomial(4)),
        |(a, b, c)| {
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
            Ok(())
        },
    )?;
    run_property(
        "q-Pascal recurrence",
        128,
        (1u32..30, 0u32..30),
        |(a, b)| {
            let b = b % (a + 1);
            let g = gauss(a, b).unwrap();
            if b == 0 || b == a {
                prop_assert_eq!(g, QPoly::one());
            } else {
                let lhs =
                    &gauss(a - 1, b - 1).unwrap() + &gauss(a - 1, b).unwrap().shift(b as usize);
                let rhs = &gauss(a - 1, b).unwrap()
                    + &gauss(a - 1, b - 1).unwrap().shift((a - b) as usize);
                prop_assert_eq!(&g, &lhs);
                prop_assert_eq!(&g, &rhs);
            }
            Ok(())
        },
    )?;
    run_property(
        "box-count symmetry and conjugation",
        256,
        (0u32..12, 0u32..12, 0i64..150),
        |(k, n, m)| {
            let top = k as i64 * n as i64;
            let p = count_partitions_in_box(k, n, m);
            prop_assert_eq!(&p, &count_partitions_in_box(k, n, top - m));
            prop_assert_eq!(&p, &count_partitions_in_box(n, k, m));
            Ok(())
        },
    )?;
    let cells = (
        2u32..5,
        1u32..4,
        1u32..4,
        0.0f64..=1.0,
        0.0f64..=1.0,
        0usize..4,
        0usize..4,
    );
    run_property(
        "kernel ring closure",
        48,
        cells,
        |(n, k1, k2, f1, f2, i, j)| {
            let m1 = ((n * k1) as f64 * f1) as u64;
            let m2 = ((n * k2) as f64 * f2) as u64;
            let b1 = kernel_basis(n, k1, m1).unwrap();
            let b2 = kernel_basis(n, k2, m2).unwrap();
            if let (Some(u), Some(v)) = (
                b1.vectors.get(i % b1.dim().max(1)),
                b2.vectors.get(j % b2.dim().max(1)),
            ) {
                let w = u * v;
                prop_assert!(apply_d(&w).is_zero());
                prop_assert_eq!(w.homogeneity(), Some(((k1 + k2) as u64, m1 + m2)));
            }
            Ok(())
        },
    )?;
    run_property(
        "cache byte-stability",
        24,
        (1u32..5, 1u32..5, 0.0f64..=1.0),
        |(n, k, f)| {
            let m = ((n * k) as f64 * f) as u64;
            let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
            let (c1, c2) = (KernelCache::new(d1.path()), KernelCache::new(d2.path()));
            let (a, how) = c1.get(n, k, m).unwrap();
            prop_assert_eq!(how, Lookup::Computed);
            let first = std::fs::read(c1.path(n, k, m)).unwrap();
            let (b, how) = c1.get(n, k, m).unwrap();
            prop_assert_eq!(how, Lookup::Hit);
            prop_assert_eq!(a, b);
            prop_assert_eq!(&std::fs::read(c1.path(n, k, m)).unwrap(), &first);
            c2.get(n, k, m).unwrap();
            prop_assert_eq!(&std::fs::read(c2.path(n, k, m)).unwrap(), &first);
            Ok(())
        },
    )?;
    Ok("order, q-Pascal, box counts, ring closure and cache properties hold".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("G(8, 14, 10) golden coefficients", g_golden),
        ("kernel dimension equals delta for n, k <= 6", kernel_dimension),
        ("quartic basis at (4, 4, 6)", quartic_basis),
        ("classical semi-invariants and shears", classical_invariants),
        ("delta(r, n, nr/2) >= 2 base grid", nr8_base),
        ("delta >= 1 desk check", gaussian_strictness),
        ("F symmetric and unimodal", theorem_f),
        ("G strictly unimodal except the ends", theorem_g),
        (
            "strictness counterexamples for F",
            strictness_counterexamples,
        ),
        ("constructive strict witnesses", constructive_witnesses),
        ("reduction to F", reduction_identity),
        ("property suites", property_suites),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} [{secs:.2}s]: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
