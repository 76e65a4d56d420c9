//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so results print even when captured output is hidden.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bentspectra::djsim::{
    amplitudes_direct, amplitudes_from_walsh, sample_measurements, simulate_circuit,
    simulate_with_ancilla,
};
use bentspectra::walsh::{fwht, walsh_naive};
use bentspectra::{Amplitudes, BitVector, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

const ROUTE_TOL: f64 = 1e-12;
const RANDOM_PER_ARITY_WALSH: usize = 1_000;
const RANDOM_PER_ARITY_ROUTES: usize = 100;
const CHI2_15_999: f64 = 37.7;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_tables(n: u32) -> impl Iterator<Item = TruthTable> {
    (0u64..1 << (1u64 << n))
        .map(move |code| TruthTable::from_fn(n, |x| (code >> x) & 1 == 1).unwrap())
}

fn random_tables(n: u32, count: usize, seed: u64) -> Vec<TruthTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| TruthTable::random(n, &mut rng).unwrap())
        .collect()
}

/// Every table touched by criteria 5 to 7.
fn criterion_tables() -> Vec<TruthTable> {
    let mut out: Vec<TruthTable> = (1..=3).flat_map(all_tables).collect();
    for n in 4..=10 {
        out.extend(random_tables(n, RANDOM_PER_ARITY_WALSH, 500 + u64::from(n)));
        out.extend(random_tables(
            n,
            RANDOM_PER_ARITY_ROUTES,
            600 + u64::from(n),
        ));
    }
    out.extend(all_tables(4));
    out
}

fn all_routes(t: &TruthTable) -> [Amplitudes; 4] {
    [
        amplitudes_direct(t),
        amplitudes_from_walsh(&fwht(t)),
        simulate_circuit(t).unwrap(),
        simulate_with_ancilla(t).unwrap(),
    ]
}

fn within_budget(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

fn c1_flat_spectrum() -> Check {
    let start = Instant::now();
    let t = TruthTable::inner_product_bent(4).unwrap();
    let spectrum = fwht(&t);
    let exact = spectrum
        .coeffs()
        .iter()
        .all(|&c| i64::from(c) * i64::from(c) * 16 == 256);
    let circuit = simulate_circuit(&t).unwrap().probabilities();
    let ancilla = simulate_with_ancilla(&t).unwrap().probabilities();
    let elapsed = start.elapsed();

    ensure(exact, || "integer route: W^2 / 4^n != 1/16".into())?;
    let worst = circuit
        .iter()
        .chain(&ancilla)
        .map(|p| (p - 1.0 / 16.0).abs())
        .fold(0.0, f64::max);
    ensure(worst <= ROUTE_TOL, || {
        format!("circuit deviation {worst:e}")
    })?;
    within_budget(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "16 x 1/16, circuit deviation {worst:e}, {elapsed:?}"
    ))
}

fn c2_linear_k9() -> Check {
    let start = Instant::now();
    let t = TruthTable::affine(4, BitVector::new(4, 9).unwrap(), false).unwrap();
    let routes = all_routes(&t);
    let elapsed = start.elapsed();
    for (i, r) in routes.iter().enumerate() {
        for (p, prob) in r.probabilities().into_iter().enumerate() {
            let want = if p == 9 { 1.0 } else { 0.0 };
            ensure((prob - want).abs() <= ROUTE_TOL, || {
                format!("route {i}: P({p}) = {prob}")
            })?;
        }
    }
    within_budget(elapsed, Duration::from_millis(1))?;
    Ok(format!("P(9) = 1 on 4 routes, {elapsed:?}"))
}

fn c3_constants() -> Check {
    for n in [2, 4, 6] {
        for (c, sign) in [(false, 1.0), (true, -1.0)] {
            let t = TruthTable::constant(n, c).unwrap();
            for (i, r) in all_routes(&t).iter().enumerate() {
                let a = r.amps();
                ensure((a[0] - sign).abs() <= ROUTE_TOL, || {
                    format!("n={n} c={c} route {i}: amp[0] = {}", a[0])
                })?;
                ensure(a[1..].iter().all(|v| v.abs() <= ROUTE_TOL), || {
                    format!("n={n} c={c} route {i}: mass off |0>")
                })?;
            }
        }
    }
    Ok("n in {2,4,6}: amp[0] = +1 / -1".into())
}

fn c4_two_bit_anchor() -> Check {
    let t = TruthTable::inner_product_bent(2).unwrap();
    let w = fwht(&t);
    ensure(w.coeffs() == [2, 2, 2, -2], || format!("{:?}", w.coeffs()))?;
    ensure(walsh_naive(&t) == w, || "naive differs".into())?;
    Ok("[2, 2, 2, -2]".into())
}

fn c5_oracle_equivalence() -> Check {
    let mut checked = 0usize;
    for n in 1..=3 {
        for t in all_tables(n) {
            ensure(fwht(&t) == walsh_naive(&t), || {
                format!("n={n} mismatch at {t:?}")
            })?;
            checked += 1;
        }
    }
    for n in 4..=10 {
        for t in random_tables(n, RANDOM_PER_ARITY_WALSH, 500 + u64::from(n)) {
            ensure(fwht(&t) == walsh_naive(&t), || format!("n={n} mismatch"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} tables, 0 mismatches"))
}

fn c6_route_equivalence() -> Check {
    let start = Instant::now();
    let mut tables: Vec<TruthTable> = (1..=3).flat_map(all_tables).collect();
    for n in 4..=10 {
        tables.extend(random_tables(
            n,
            RANDOM_PER_ARITY_ROUTES,
            600 + u64::from(n),
        ));
    }
    let mut worst = 0.0f64;
    for t in &tables {
        let [direct, from_walsh, circuit, ancilla] = all_routes(t);
        for r in [&from_walsh, &circuit, &ancilla] {
            worst = worst.max(direct.max_abs_diff(r));
        }
    }
    let elapsed = start.elapsed();
    ensure(worst <= ROUTE_TOL, || format!("max deviation {worst:e}"))?;
    within_budget(elapsed, Duration::from_secs(30))?;
    Ok(format!(
        "{} tables, max deviation {worst:e}, {elapsed:?}",
        tables.len()
    ))
}

fn c7_census() -> Check {
    let start = Instant::now();
    let mut bent = 0usize;
    for t in all_tables(4) {
        let c = fwht(&t).classify();
        if c.is_bent {
            bent += 1;
            let w = t.weight();
            ensure(w == 6 || w == 10, || format!("bent table of weight {w}"))?;
            ensure(!c.is_balanced && !c.is_affine, || {
                "bent but balanced/affine".into()
            })?;
        }
    }
    let odd_bent = all_tables(3).filter(TruthTable::is_bent).count()
        + all_tables(1).filter(TruthTable::is_bent).count();
    let elapsed = start.elapsed();
    ensure(bent == 896, || format!("{bent} bent functions at n=4"))?;
    ensure(odd_bent == 0, || {
        format!("{odd_bent} bent functions at odd n")
    })?;
    within_budget(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "896 bent at n=4 (weights 6/10), 0 at n=3, {elapsed:?}"
    ))
}

fn c8_normalization(tables: &[TruthTable]) -> Check {
    let mut worst = 0.0f64;
    for t in tables {
        worst = worst.max((amplitudes_from_walsh(&fwht(t)).norm_sqr() - 1.0).abs());
        worst = worst.max((simulate_circuit(t).unwrap().norm_sqr() - 1.0).abs());
        if t.arity() <= 3 {
            worst = worst.max((amplitudes_direct(t).norm_sqr() - 1.0).abs());
            worst = worst.max((simulate_with_ancilla(t).unwrap().norm_sqr() - 1.0).abs());
        }
    }
    ensure(worst <= ROUTE_TOL, || {
        format!("|sum psi^2 - 1| = {worst:e}")
    })?;
    Ok(format!("{} tables, worst {worst:e}", tables.len()))
}

fn c9_parseval(tables: &[TruthTable]) -> Check {
    for t in tables {
        let energy = fwht(t).energy();
        ensure(energy == 1u64 << (2 * t.arity()), || {
            format!("n={}: energy {energy}", t.arity())
        })?;
    }
    Ok(format!("{} tables, sum W^2 = 4^n exactly", tables.len()))
}

fn c10_generators() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for half in [2, 3, 4] {
        for i in 0..100 {
            let f = TruthTable::random_maiorana_mcfarland(half, &mut rng).unwrap();
            ensure(f.is_bent(), || {
                format!("MM instance {i} at n={} not bent", 2 * half)
            })?;
        }
    }
    let successes = (0..100u64)
        .filter(|&seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            TruthTable::shuffle_search_bent(4, &mut rng, 100_000)
                .unwrap()
                .table()
                .is_some_and(|t| t.is_bent())
        })
        .count();
    ensure(successes >= 99, || {
        format!("shuffle search succeeded for {successes}/100 seeds")
    })?;
    Ok(format!(
        "300 MM instances bent; shuffle search {successes}/100"
    ))
}

fn c11_sampler() -> Check {
    let q = ChiSquared::new(15.0).unwrap().inverse_cdf(0.999);
    ensure((q - CHI2_15_999).abs() < 0.01, || {
        format!("chi2(15) 0.999 quantile is {q}")
    })?;

    let amps = amplitudes_from_walsh(&fwht(&TruthTable::inner_product_bent(4).unwrap()));
    let probs = amps.probabilities();
    let below = (0..100u64)
        .filter(|&seed| {
            let h = sample_measurements(&amps, 1_000_000, &mut ChaCha8Rng::seed_from_u64(seed));
            h.chi_square(&probs) < CHI2_15_999
        })
        .count();
    ensure(below >= 97, || {
        format!("{below}/100 seeds below {CHI2_15_999}")
    })?;
    Ok(format!("{below}/100 seeds below {CHI2_15_999}"))
}

fn c12_performance() -> Check {
    let t = TruthTable::random(20, &mut ChaCha8Rng::seed_from_u64(12)).unwrap();
    let start = Instant::now();
    let w = fwht(&t);
    let walsh_time = start.elapsed();
    let start = Instant::now();
    let a = simulate_circuit(&t).unwrap();
    let circuit_time = start.elapsed();
    ensure(
        w.coeffs().len() == 1 << 20 && a.amps().len() == 1 << 20,
        || "wrong size".into(),
    )?;
    within_budget(walsh_time, Duration::from_millis(200))?;
    within_budget(circuit_time, Duration::from_secs(2))?;
    Ok(format!(
        "fwht {walsh_time:?}, circuit {circuit_time:?} at n=20"
    ))
}

fn main() -> ExitCode {
    let tables = criterion_tables();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "1 flat spectrum for ip-bent n=4",
            Box::new(c1_flat_spectrum),
        ),
        ("2 monochromatic linear k=9", Box::new(c2_linear_k9)),
        ("3 constant functions", Box::new(c3_constants)),
        ("4 n=2 bent anchor", Box::new(c4_two_bit_anchor)),
        ("5 fwht = naive Walsh", Box::new(c5_oracle_equivalence)),
        (
            "6 amplitude route equivalence",
            Box::new(c6_route_equivalence),
        ),
        ("7 exhaustive n=4 census", Box::new(c7_census)),
        ("8 normalization", Box::new(|| c8_normalization(&tables))),
        ("9 Parseval", Box::new(|| c9_parseval(&tables))),
        ("10 generator soundness", Box::new(c10_generators)),
        ("11 sampler chi-square", Box::new(c11_sampler)),
        ("12 performance at n=20", Box::new(c12_performance)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
