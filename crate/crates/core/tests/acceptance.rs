//! Exit criteria. Every check is exact equality; wall-clock limits are
//! asserted where one is stated. Run with `--nocapture` to see the
//! per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pascal_det::det_arrays::{pd_algorithm, pd_direct, PdTables};
use pascal_det::exact_det::{contiguous_minor, det_condensation, det_laplace, Matrix, MinorSpec};
use pascal_det::report::{sweep, Bounds, Identity};
use pascal_det::{BigInt, Error, GridIndex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pascal-det"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

/// Runs a `check` subcommand and requires exit 0, no failures and `checked == expected`.
fn cli_check(args: &[&str], expected: u64, limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let (code, stdout) = run_cli(args)?;
    let elapsed = start.elapsed();
    let v: serde_json::Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    let checked = v["checked"].as_u64().unwrap_or(0);
    let failures = v["failures"].as_array().map_or(usize::MAX, Vec::len);
    if code != 0 || failures != 0 {
        return Err(format!(
            "exit {code}, {failures} failures: {}",
            v["failures"]
        ));
    }
    if checked != expected {
        return Err(format!("checked {checked}, expected {expected}"));
    }
    match limit {
        Some(limit) => within(limit, elapsed, format!("{checked} cases")),
        None => Ok(format!("{checked} cases in {} ms", elapsed.as_millis())),
    }
}

fn within(limit: Duration, elapsed: Duration, what: String) -> Outcome {
    if elapsed > limit {
        Err(format!("{what} took {elapsed:?}, limit {limit:?}"))
    } else {
        Ok(format!("{what} in {} ms", elapsed.as_millis()))
    }
}

fn ac1_generalized() -> Outcome {
    cli_check(
        &[
            "check", "general", "--max-i", "8", "--max-j", "8", "--max-k", "6",
        ],
        9 * 9 * 6,
        Some(Duration::from_secs(10)),
    )
}

fn ac2_rahimpour() -> Outcome {
    cli_check(
        &["check", "rahimpour", "--max-i", "12", "--max-j", "8"],
        13 * 9,
        Some(Duration::from_secs(5)),
    )
}

fn ac3_route_equivalence() -> Outcome {
    let start = Instant::now();
    let b = Bounds {
        max_i: 10,
        max_j: 10,
        max_k: 6,
        ..Bounds::default()
    };
    let rep = sweep(Identity::Routes, b).map_err(|e| e.to_string())?;
    if !rep.passed() {
        return Err(format!(
            "{} disagreements, first {:?}",
            rep.failures.len(),
            rep.failures[0]
        ));
    }
    if rep.checked != 7 * 11 * 11 {
        return Err(format!("checked {}", rep.checked));
    }
    within(
        Duration::from_secs(30),
        start.elapsed(),
        format!("{} positions x 5 routes", rep.checked),
    )
}

fn ac4_condensation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_d0d9);
    let mut compared = 0;
    let mut skipped = 0;
    while compared < 500 {
        let n = rng.gen_range(1..=6);
        let m = Matrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-9..=9)));
        let want = det_laplace(&m).map_err(|e| e.to_string())?;
        match det_condensation(&m) {
            Ok(v) if v == want => compared += 1,
            Ok(v) => return Err(format!("condensation {v} != laplace {want} on\n{m}")),
            Err(Error::ZeroInterior { .. }) => skipped += 1,
            Err(e) => return Err(e.to_string()),
        }
    }

    let mut five = 0;
    while five < 500 {
        let a = Matrix::from_fn(4, 4, |_, _| BigInt::from(rng.gen_range(-9..=9)));
        let d = |s: MinorSpec| det_laplace(&contiguous_minor(&a, s).unwrap()).unwrap();
        let center = d(MinorSpec::new(2, 2, 2));
        if center.is_zero() {
            continue;
        }
        let lhs = center * det_laplace(&a).unwrap();
        let rhs = d(MinorSpec::new(3, 1, 1)) * d(MinorSpec::new(3, 2, 2))
            - d(MinorSpec::new(3, 1, 2)) * d(MinorSpec::new(3, 2, 1));
        if lhs != rhs {
            return Err(format!("five-minor identity fails on\n{a}"));
        }
        five += 1;
    }
    Ok(format!(
        "{compared} agreements, {skipped} zero-interior fallbacks, {five} five-minor identities"
    ))
}

fn ac5_star_and_cross() -> Outcome {
    let star = sweep(
        Identity::Star,
        Bounds {
            max_k: 4,
            max_sum: 10,
            max_size: 4,
            ..Bounds::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let cross = sweep(
        Identity::Cross,
        Bounds {
            max_k: 4,
            max_sum: 10,
            max_size: 5,
            ..Bounds::default()
        },
    )
    .map_err(|e| e.to_string())?;
    for rep in [&star, &cross] {
        if !rep.passed() {
            return Err(format!(
                "{}: first failure {:?}",
                rep.identity, rep.failures[0]
            ));
        }
    }
    Ok(format!(
        "{} rectangle slides, {} cross slides",
        star.checked, cross.checked
    ))
}

fn ac6_product() -> Outcome {
    cli_check(
        &["check", "product", "--max-k", "8", "--max-j", "10"],
        8 * 11,
        None,
    )
}

fn ac7_double_stick() -> Outcome {
    let b = Bounds {
        max_i: 8,
        max_j: 8,
        max_k: 5,
        ..Bounds::default()
    };
    let rep = sweep(Identity::Stick, b).map_err(|e| e.to_string())?;
    if !rep.passed() {
        return Err(format!("first failure {:?}", rep.failures[0]));
    }
    Ok(format!("{} sticks", rep.checked))
}

fn ac8_narayana() -> Outcome {
    // N(n, r) = C(n, r) C(n, r - 1) / n from a plain u128 binomial
    fn c(n: u128, r: u128) -> u128 {
        (0..r).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }
    let mut n_checked = 0;
    for i in 0..=10usize {
        for j in 0..=10usize {
            if i + j < 1 {
                continue;
            }
            let (n, r) = ((i + j + 1) as u128, (j + 1) as u128);
            let want = BigInt::from(c(n, r) * c(n, r - 1) / n);
            let got = pd_direct(2, GridIndex::new(i, j)).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("P^(2)_({i},{j}) = {got}, Narayana {want}"));
            }
            n_checked += 1;
        }
    }
    Ok(format!("{n_checked} entries"))
}

fn ac9_integrality() -> Outcome {
    let mut errors = Vec::new();
    let mut evaluated = 0;
    let mut tables = PdTables::new();
    for k in 0..=6 {
        if let Err(e) = pd_algorithm(k, 11, 11) {
            errors.push(format!("algorithm k={k}: {e}"));
        }
        for i in 0..=10 {
            for j in 0..=10 {
                let idx = GridIndex::new(i, j);
                for r in [
                    tables.recursive(k, idx),
                    tables.condensation(k, idx),
                    tables.closed_form(k, idx),
                ] {
                    evaluated += 1;
                    if let Err(e) = r {
                        errors.push(e.to_string());
                    }
                }
            }
        }
    }
    if errors.is_empty() {
        Ok(format!(
            "{evaluated} entries + 7 algorithm grids, no integrality errors"
        ))
    } else {
        Err(format!("{} errors, first: {}", errors.len(), errors[0]))
    }
}

fn ac10_golden() -> Outcome {
    let cases = [
        (
            vec![
                "gen", "--order", "1", "--rows", "5", "--cols", "5", "--format", "csv",
            ],
            "gen_order1_5x5.csv",
        ),
        (
            vec![
                "gen", "--order", "2", "--rows", "4", "--cols", "4", "--format", "json",
            ],
            "gen_order2_4x4.json",
        ),
    ];
    for (args, file) in cases {
        let (code, stdout) = run_cli(&args)?;
        let want = std::fs::read(format!("{FIXTURES}/{file}")).map_err(|e| e.to_string())?;
        if code != 0 || stdout != want {
            return Err(format!("{file}: exit {code}, output differs"));
        }
    }
    Ok("2 fixtures byte-identical".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (
            "AC1 generalized identity P^(k)_{i,j} = P^(j)_{i,k}",
            ac1_generalized,
        ),
        (
            "AC2 Rahimpour identity P_{i,j} = P^(j)_{i,1}",
            ac2_rahimpour,
        ),
        ("AC3 five-route equivalence", ac3_route_equivalence),
        ("AC4 Dodgson condensation", ac4_condensation),
        (
            "AC5 star-of-David and sliding-cross rules",
            ac5_star_and_cross,
        ),
        ("AC6 product identity", ac6_product),
        (
            "AC7 double-stick weight equals determinant",
            ac7_double_stick,
        ),
        ("AC8 Narayana cross-check", ac8_narayana),
        ("AC9 integrality assertions never fire", ac9_integrality),
        ("AC10 CLI golden files", ac10_golden),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
