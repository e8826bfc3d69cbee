//! End-to-end acceptance checks. Prints one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use tugames::analysis::{
    construct_core_element_3p, core_nonempty, core_nonempty_3p, encourages_on, in_core, induced_scheme,
    is_convex_3p_closed_form, is_pmas, ConstructionCase,
};
use tugames::generators::{generate, GeneratorConfig, GeneratorMode};
use tugames::permutation::permutations;
use tugames::predicates::{is_convex, is_convex_3p_inequalities, is_superadditive};
use tugames::solutions::{marginal_vector, shapley_by_permutations, shapley_by_subsets, solve, SolutionMethod};
use tugames::{fixtures, Coalition, Game, PermutationOrder, PlayerId, Rational, Scalar};

type Check = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name)
}

struct Run {
    code: i32,
    stdout: String,
}

fn tug(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tug")).args(args).output().expect("spawn tug");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8(out.stdout).expect("utf-8 output") }
}

fn tug_on(args: &[&str], file: &str) -> Run {
    let path = fixture(file);
    let mut all = args.to_vec();
    all.push(path.to_str().unwrap());
    tug(&all)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d)
}

fn c(ids: &[usize]) -> Coalition {
    Coalition::from_ids(ids.iter().copied()).unwrap()
}

fn gen(mode: GeneratorMode, n: usize, seed: u64) -> Game {
    generate(&GeneratorConfig::new(mode, n, seed)).unwrap()
}

fn convex(n: usize, seed: u64) -> Game {
    if n <= 4 && seed % 2 == 1 {
        gen(GeneratorMode::Rejection, n, seed)
    } else {
        gen(GeneratorMode::Dividends, n, seed)
    }
}

fn ac01() -> Check {
    let run = tug_on(&["check"], "fixture_table1.tug");
    ensure!(run.code == 0 && run.stdout.starts_with("convex: yes"), "check: {:?}", run.stdout);
    let run = tug_on(&["solve", "--method", "tau"], "fixture_table1.tug");
    ensure!(run.stdout.lines().next() == Some("1=18/11 2=18/11 3=18/11 4=12/11"), "tau: {:?}", run.stdout);
    let run = tug_on(&["solve", "--method", "tau", "--subgame", "1,2,3"], "fixture_table1.tug");
    ensure!(run.stdout.lines().next() == Some("1=12/7 2=8/7 3=8/7"), "tau on {{1,2,3}}: {:?}", run.stdout);
    let g = fixtures::table1::<Rational>();
    let x = solve(&g, SolutionMethod::Tau).map_err(|e| e.to_string())?;
    ensure!(x.values() == [r(18, 11), r(18, 11), r(18, 11), r(12, 11)], "library tau {x}");
    let sub = g.subgame(c(&[1, 2, 3])).unwrap();
    let y = solve(&sub, SolutionMethod::Tau).map_err(|e| e.to_string())?;
    ensure!(y.values() == [r(12, 7), r(8, 7), r(8, 7)], "library tau on {{1,2,3}} {y}");
    Ok(())
}

fn ac02() -> Check {
    let run = tug_on(&["encourage", "--method", "tau"], "fixture_table1.tug");
    ensure!(run.code == 1, "exit code {}", run.code);
    ensure!(run.stdout == "player 1 prefers {1,2,3}: 18/11 < 12/7\n", "output {:?}", run.stdout);
    Ok(())
}

fn ac03() -> Check {
    let run = tug_on(&["encourage", "--method", "shapley"], "fixture_table1.tug");
    ensure!(run.code == 0 && run.stdout == "encourages: yes\n", "fixture: {:?}", run.stdout);
    for seed in 0..1000u64 {
        let n = 2 + (seed % 5) as usize;
        let g = gen(GeneratorMode::Dividends, n, seed);
        let report = encourages_on(&g, SolutionMethod::Shapley).map_err(|e| e.to_string())?;
        ensure!(report.violations.is_empty(), "seed {seed} n={n}: {:?}", report.violations);
    }
    Ok(())
}

fn ac04() -> Check {
    for seed in 0..1000u64 {
        let g = convex(3, seed);
        let report = encourages_on(&g, SolutionMethod::Tau).map_err(|e| e.to_string())?;
        ensure!(report.violations.is_empty(), "seed {seed}: {:?}", report.violations);
    }
    Ok(())
}

fn ac05() -> Check {
    let run = tug_on(&["solve", "--method", "mma"], "fixture_table1_sub123.tug");
    ensure!(run.stdout == "1=3 2=1/2 3=1/2\nmaximizers: 231 321\n", "{{1,2,3}}: {:?}", run.stdout);
    let run = tug_on(&["solve", "--method", "mma"], "fixture_table1_sub12.tug");
    ensure!(run.stdout.lines().next() == Some("1=1 2=1"), "{{1,2}}: {:?}", run.stdout);
    let run = tug_on(&["encourage", "--method", "mma"], "fixture_table1_sub123.tug");
    ensure!(run.code == 1, "exit code {}", run.code);
    ensure!(run.stdout.lines().any(|l| l == "player 2 prefers {1,2}: 1/2 < 1"), "encourage: {:?}", run.stdout);
    Ok(())
}

fn ac06() -> Check {
    for seed in 0..200u64 {
        let n = 1 + (seed % 7) as usize;
        let g = if n == 1 {
            Game::from_values(1, vec![r(0, 1), r(seed as i64, 3)]).unwrap()
        } else if seed % 2 == 0 {
            gen(GeneratorMode::Uniform, n, seed)
        } else {
            gen(GeneratorMode::Dividends, n, seed)
        };
        let by_perm = shapley_by_permutations(&g).map_err(|e| e.to_string())?;
        ensure!(by_perm == shapley_by_subsets(&g), "seed {seed} n={n}");
    }
    Ok(())
}

fn ac07() -> Check {
    let mut encouraging = 0usize;
    for seed in 0..500u64 {
        let n = 2 + (seed % 4) as usize;
        let g = convex(n, seed);
        let shapley = solve(&g, SolutionMethod::Shapley).unwrap();
        ensure!(in_core(&g, &shapley).unwrap().member, "shapley outside core, seed {seed}");
        let orders: Vec<PermutationOrder> = permutations(g.carrier()).collect();
        for k in 0..3u64 {
            let order = &orders[((seed * 7919 + k * 104_729) as usize) % orders.len()];
            let x = marginal_vector(&g, order).unwrap();
            ensure!(in_core(&g, &x).unwrap().member, "marginal vector {order} outside core, seed {seed}");
        }
        for method in SolutionMethod::ALL {
            if encourages_on(&g, method).unwrap().encourages {
                encouraging += 1;
                let x = solve(&g, method).unwrap();
                ensure!(in_core(&g, &x).unwrap().member, "{method} encourages but leaves core, seed {seed}");
            }
        }
    }
    ensure!(encouraging >= 500, "only {encouraging} encouraging cases");
    Ok(())
}

/// Half convex-looking games nudged at one coalition, half uniform draws.
fn arbitrary3(seed: u64) -> Game {
    if seed.is_multiple_of(2) {
        return gen(GeneratorMode::Uniform, 3, seed);
    }
    let g = gen(GeneratorMode::Rejection, 3, seed);
    let target = Coalition::from_mask(1 + (seed / 2 % 7) as u32);
    let delta = if seed % 4 == 1 { r(1, 1) } else { r(-1, 1) };
    let mut values: Vec<Rational> = Coalition::grand(3).subsets().map(|a| g.value(a).unwrap().clone()).collect();
    values[target.mask() as usize] = values[target.mask() as usize].clone() + delta;
    Game::from_values(3, values).unwrap()
}

fn ac08() -> Check {
    let (mut nonempty, mut convex_count) = (0, 0);
    for seed in 0..500u64 {
        let g = gen(GeneratorMode::Superadditive3p, 3, seed);
        let closed = core_nonempty_3p(&g).map_err(|e| e.to_string())?;
        let exact = core_nonempty(&g).map_err(|e| e.to_string())?.nonempty;
        ensure!(closed == exact, "core verdicts differ, seed {seed}");
        let cvx = is_convex_3p_closed_form(&g).map_err(|e| e.to_string())?;
        ensure!(cvx == is_convex(&g).passed(), "convexity verdicts differ, seed {seed}");
        nonempty += usize::from(exact);
        convex_count += usize::from(cvx);
    }
    ensure!(nonempty > 0 && nonempty < 500, "core verdicts not mixed: {nonempty}");
    ensure!(convex_count > 0 && convex_count < 500, "convexity verdicts not mixed: {convex_count}");
    let mut arbitrary_convex = 0;
    for seed in 0..500u64 {
        let g = arbitrary3(seed);
        let ineq = is_convex_3p_inequalities(&g).map_err(|e| e.to_string())?;
        ensure!(ineq == is_convex(&g).passed(), "inequalities disagree, seed {seed}");
        arbitrary_convex += usize::from(ineq);
    }
    ensure!(arbitrary_convex > 0 && arbitrary_convex < 500, "arbitrary verdicts not mixed: {arbitrary_convex}");
    Ok(())
}

fn ac09() -> Check {
    let (mut triangle, mut broken) = (0, 0);
    for seed in 0..500u64 {
        let g = gen(GeneratorMode::Superadditive3p, 3, seed);
        if !core_nonempty_3p(&g).unwrap() {
            continue;
        }
        let built = construct_core_element_3p(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(in_core(&g, &built.allocation).unwrap().member, "seed {seed}: {} not in core", built.allocation);
        match built.case {
            ConstructionCase::Triangle { .. } => triangle += 1,
            ConstructionCase::BrokenTriangle { .. } => broken += 1,
        }
    }
    ensure!(triangle > 0 && broken > 0, "branch coverage: triangle {triangle}, broken {broken}");
    let run = tug_on(&["construct-core3"], "fixture_broken_triangle.tug");
    ensure!(run.code == 0 && run.stdout.starts_with("case: broken-triangle"), "fixture: {:?}", run.stdout);
    Ok(())
}

fn ac10() -> Check {
    let run = tug_on(&["stats3"], "fixture_superadditive_nonconvex.tug");
    for line in ["superadditive: yes", "core nonempty: yes", "convex: no"] {
        ensure!(run.stdout.lines().any(|l| l == line), "stats3 lacks {line:?}: {:?}", run.stdout);
    }
    let g = fixtures::superadditive_nonconvex::<Rational>();
    ensure!(is_superadditive(&g).passed(), "not superadditive");
    ensure!(!is_convex(&g).passed(), "convex");
    let report = core_nonempty(&g).map_err(|e| e.to_string())?;
    let cert = report.certificate.ok_or("no certificate")?;
    ensure!(report.nonempty && in_core(&g, &cert).unwrap().member, "certificate {cert} not in core");
    let run = tug_on(&["core", "--nonempty"], "fixture_superadditive_nonconvex.tug");
    ensure!(run.code == 0 && run.stdout.starts_with("core: nonempty"), "cli: {:?}", run.stdout);
    Ok(())
}

fn ac11() -> Check {
    let g = fixtures::table1::<Rational>();
    let shapley = induced_scheme(&g, SolutionMethod::Shapley).unwrap();
    ensure!(is_pmas(&shapley).unwrap().monotone, "shapley scheme not monotone");
    let report = is_pmas(&induced_scheme(&g, SolutionMethod::Tau).unwrap()).unwrap();
    let v = report.violation.ok_or("tau scheme monotone")?;
    ensure!(
        v.player == PlayerId::new(1).unwrap() && v.smaller == c(&[1, 2, 3]) && v.larger == g.carrier(),
        "witness {:?}",
        v
    );
    let run = tug_on(&["pmas", "--method", "tau"], "fixture_table1.tug");
    ensure!(run.code == 1 && run.stdout.contains("player 1: {1,2,3} -> {1,2,3,4}"), "cli: {:?}", run.stdout);
    Ok(())
}

fn ac12() -> Check {
    for n in 1..=6usize {
        let factorial = |k: usize| (1..=k).product::<usize>();
        for m in 1..=n {
            let mut counts: BTreeMap<PermutationOrder, usize> = BTreeMap::new();
            for order in permutations(Coalition::grand(n)) {
                *counts.entry(order.flatten(Coalition::grand(m)).unwrap()).or_default() += 1;
            }
            ensure!(counts.len() == factorial(m), "n={n} m={m}: {} images", counts.len());
            let expected = factorial(n) / factorial(m);
            ensure!(counts.values().all(|&k| k == expected), "n={n} m={m}: uneven preimages");
        }
    }
    let order: PermutationOrder = "153462".parse().map_err(|e| format!("{e:?}"))?;
    let flat = order.flatten(c(&[1, 2, 3, 4])).unwrap();
    ensure!(flat.to_string() == "1342", "flattened to {flat}");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("AC-01", "table-1 convexity and exact tau values", ac01),
        ("AC-02", "tau encouragement violation on table-1", ac02),
        ("AC-03", "shapley encourages on 1000 dividend games", ac03),
        ("AC-04", "tau encourages on 1000 convex 3-player games", ac04),
        ("AC-05", "max-marginal-average worked example", ac05),
        ("AC-06", "shapley formulations agree on 200 games", ac06),
        ("AC-07", "core membership on 500 convex games", ac07),
        ("AC-08", "3-player closed forms on 500+500 games", ac08),
        ("AC-09", "constructive 3-player core element", ac09),
        ("AC-10", "superadditive non-convex game with nonempty core", ac10),
        ("AC-11", "induced scheme monotonicity on table-1", ac11),
        ("AC-12", "flattening preimage counts", ac12),
    ];
    let mut failed = Vec::new();
    for (id, label, check) in criteria {
        match check() {
            Ok(()) => println!("[PASS] {id} {label}"),
            Err(why) => {
                println!("[FAIL] {id} {label}: {why}");
                failed.push(id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
