//! Acceptance suite. Prints one PASS/FAIL line per criterion, with details
//! for failures, and exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coopetition::oracles::generate::random_monotone_game;
use coopetition::oracles::harness::quoted_banzhaf_null_scaling;
use coopetition::oracles::{proposition_harness, so_coopetition_by_sequences};
use coopetition::tables::{shapley_owen_apex_decisiveness, split_games, triplet_games};
use coopetition::{
    generalized_shapley, model_bundle, model_coopetition, paper_table, parse_rational,
    profitability, render, shapley_interaction, shapley_owen_coopetition, Coalition, Model,
    PlayerId, Rational, SimpleGame, TableId,
};

const SEED: u64 = 20_240_601;

type Outcome = Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn c(ids: &[usize]) -> Coalition {
    Coalition::from_ids(ids.iter().copied()).unwrap()
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn expect(failures: &mut Vec<String>, label: impl Into<String>, got: &Rational, want: &Rational) {
    if got != want {
        failures.push(format!(
            "{}: got {}, expected {}",
            label.into(),
            render(got),
            render(want)
        ));
    }
}

fn done(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn within(failures: &mut Vec<String>, elapsed: Duration, limit: Duration) {
    if elapsed > limit {
        failures.push(format!("runtime {elapsed:.2?} exceeds {limit:?}"));
    }
}

fn profitability_paradox() -> Outcome {
    let mut f = Vec::new();
    let game = SimpleGame::weighted(vec![50, 50, 50, 24, 23, 1], 102).unwrap();
    expect(
        &mut f,
        "Phi(456)",
        &generalized_shapley(&game, c(&[4, 5, 6])).unwrap(),
        &q(1, 4),
    );
    expect(
        &mut f,
        "Phi(4)",
        &generalized_shapley(&game, c(&[4])).unwrap(),
        &q(1, 10),
    );
    expect(
        &mut f,
        "Phi(5)",
        &generalized_shapley(&game, c(&[5])).unwrap(),
        &q(1, 10),
    );
    expect(
        &mut f,
        "Phi(6)",
        &generalized_shapley(&game, c(&[6])).unwrap(),
        &q(0, 1),
    );
    expect(
        &mut f,
        "P(456)",
        &profitability(&game, c(&[4, 5, 6])).unwrap(),
        &q(1, 20),
    );
    for sets in [&[&[1usize, 2][..]][..], &[&[1][..], &[2][..]][..]] {
        let g = SimpleGame::from_mwc_ids(3, sets).unwrap();
        expect(
            &mut f,
            format!("{sets:?} Phi(12)"),
            &generalized_shapley(&g, c(&[1, 2])).unwrap(),
            &q(1, 1),
        );
        expect(
            &mut f,
            format!("{sets:?} P(12)"),
            &profitability(&g, c(&[1, 2])).unwrap(),
            &q(0, 1),
        );
    }
    done(f, "weighted and three-player values exact".into())
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Interaction index straight from its definition, over player lists.
fn interaction_by_definition(game: &SimpleGame, members: &[usize]) -> Rational {
    let n = game.n();
    let outside: Vec<usize> = (1..=n).filter(|i| !members.contains(i)).collect();
    let s = members.len();
    let mut total = Rational::zero();
    for tmask in 0..(1usize << outside.len()) {
        let t: Vec<usize> = outside
            .iter()
            .enumerate()
            .filter(|(i, _)| tmask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let weight = Rational::new(
            factorial(n - s - t.len()) * factorial(t.len()),
            factorial(n - s + 1),
        );
        let mut sum = 0i64;
        for lmask in 0..(1usize << s) {
            let mut ids: Vec<usize> = t.clone();
            ids.extend(
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| lmask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            );
            let win = game.wins(Coalition::from_ids(ids).unwrap()) as i64;
            let sign = if (s - lmask.count_ones() as usize).is_multiple_of(2) {
                1
            } else {
                -1
            };
            sum += sign * win;
        }
        total += weight * BigInt::from(sum);
    }
    total
}

fn interaction_index() -> Outcome {
    let mut f = Vec::new();
    let games = split_games();
    // Published values: 12345 exact; 1234 and the triplets up to sign.
    let exact = [("v", -1), ("w", 0), ("u", 1)];
    let up_to_sign = [("v", q(-1, 2)), ("w", q(1, 1)), ("u", q(1, 2))];
    for ((name, game), (_, want)) in games.iter().zip(exact) {
        let got = shapley_interaction(game, c(&[1, 2, 3, 4, 5])).unwrap();
        expect(&mut f, format!("{name} 12345"), &got, &q(want, 1));
        expect(
            &mut f,
            format!("{name} 12345 vs definition"),
            &got,
            &interaction_by_definition(game, &[1, 2, 3, 4, 5]),
        );
    }
    let mut flipped = 0;
    let mut check_sign = |f: &mut Vec<String>,
                          label: String,
                          got: Rational,
                          printed: &Rational,
                          oracle: Rational| {
        if got.abs() != printed.abs() {
            f.push(format!(
                "{label}: |{}| differs from published |{}|",
                render(&got),
                render(printed)
            ));
        }
        expect(f, format!("{label} sign vs definition"), &got, &oracle);
        if got != *printed {
            flipped += 1;
        }
    };
    for ((name, game), (_, printed)) in games.iter().zip(&up_to_sign) {
        let got = shapley_interaction(game, c(&[1, 2, 3, 4])).unwrap();
        let oracle = interaction_by_definition(game, &[1, 2, 3, 4]);
        check_sign(&mut f, format!("{name} 1234"), got, printed, oracle);
    }
    for (name, game, _, printed) in triplet_games() {
        let got = shapley_interaction(&game, c(&[1, 2, 3])).unwrap();
        let oracle = interaction_by_definition(&game, &[1, 2, 3]);
        check_sign(&mut f, format!("triplet {name}"), got, &printed, oracle);
    }
    done(f, format!("12345 rows exact; {flipped} of 6 published 1234/triplet values carry the opposite sign of the definition"))
}

fn table(id: TableId, limit: Duration) -> Outcome {
    let start = Instant::now();
    let report = paper_table(id).unwrap();
    let mut f: Vec<String> = report
        .cells
        .iter()
        .filter(|cell| !cell.status.is_ok())
        .map(|cell| {
            format!(
                "table {} {} {}: computed {}, expected {}",
                id, cell.row, cell.column, cell.computed, cell.expected
            )
        })
        .collect();
    within(&mut f, start.elapsed(), limit);
    done(f, format!("table {id}: {} cells exact", report.cells.len()))
}

fn coopetition_table() -> Outcome {
    let mut f = match table(TableId::Coopetition, Duration::from_secs(1)) {
        Ok(_) => Vec::new(),
        Err(f) => f,
    };
    let games = split_games();
    expect(
        &mut f,
        "SO v 1234",
        &model_coopetition(&games[0].1, c(&[1, 2, 3, 4]), Model::ShapleyOwen).unwrap(),
        &q(7, 9),
    );
    expect(
        &mut f,
        "Bz u 12345",
        &model_coopetition(&games[2].1, c(&[1, 2, 3, 4, 5]), Model::Banzhaf).unwrap(),
        &q(1, 15),
    );
    done(f, "12 cells exact".into())
}

fn majority_tables() -> Outcome {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut cells = 0;
    for id in [TableId::MajorityEight, TableId::MajorityNine] {
        let report = paper_table(id).unwrap();
        cells += report.cells.len();
        for cell in report.cells.iter().filter(|cell| !cell.status.is_ok()) {
            f.push(format!(
                "table {id} {} {}: computed {}, expected {}",
                cell.row, cell.column, cell.computed, cell.expected
            ));
        }
    }
    // The all-zero coopetition column at n = 9, quota 5.
    let g = SimpleGame::majority(9, 5).unwrap();
    for s in 2..=9 {
        let b = model_bundle(&g, Coalition::full(s), Model::ShapleyOwen).unwrap();
        expect(
            &mut f,
            format!("n=9 q=5 s={s} C"),
            &b.coopetition,
            &Rational::zero(),
        );
    }
    within(&mut f, start.elapsed(), Duration::from_secs(30));
    done(f, format!("{cells} cells exact"))
}

fn apex_closed_forms() -> Outcome {
    let start = Instant::now();
    let mut f = match table(TableId::Apex, Duration::from_secs(30)) {
        Ok(_) => Vec::new(),
        Err(f) => f,
    };
    // The published Shapley-Owen case constants, read literally and with the
    // cases swapped (the apex-member value re-indexed to |S| - 1).
    let printed_outside = |n: usize, s: usize| q(4, (s * (s + 1) * (n - s)) as i64);
    let printed_member = |n: usize, s: usize| q(2, ((n - s + 1) * (n - s)) as i64);
    let (mut literal, mut swapped, mut classes) = (0, 0, 0);
    let a = PlayerId::new(1).unwrap();
    for n in 3..=10 {
        for s in 2..n {
            for member in [true, false] {
                if !member && s == n {
                    continue;
                }
                let derived = shapley_owen_apex_decisiveness(n, s, member);
                let sample = if member {
                    Coalition::full(s)
                } else {
                    Coalition::full(s + 1).without(a)
                };
                let enumerated =
                    model_bundle(&SimpleGame::apex(n, a).unwrap(), sample, Model::ShapleyOwen)
                        .unwrap();
                expect(
                    &mut f,
                    format!("n={n} s={s} member={member} SO D"),
                    &enumerated.decisiveness,
                    &derived,
                );
                classes += 1;
                let literal_value = if member {
                    printed_member(n, s)
                } else {
                    printed_outside(n, s)
                };
                let swapped_value = if member {
                    printed_outside(n, s - 1)
                } else {
                    printed_member(n, s)
                };
                literal += (literal_value == derived) as usize;
                swapped += (swapped_value == derived) as usize;
            }
        }
    }
    if swapped != classes {
        f.push(format!(
            "swapped reading of the published constants holds on {swapped}/{classes} classes only"
        ));
    }
    within(&mut f, start.elapsed(), Duration::from_secs(30));
    done(
        f,
        format!(
            "C=0 and Banzhaf D exact for n=3..10; SO D equals the general formula; published SO constants: literal reading holds on {literal}/{classes} size classes, swapped reading on {swapped}/{classes}"
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut compared = 0;
    let mut check = |f: &mut Vec<String>, game: &SimpleGame, label: &str| {
        for s in game.grand_coalition().subsets().filter(|s| s.len() >= 2) {
            let closed = shapley_owen_coopetition(game, s).unwrap();
            let seq = so_coopetition_by_sequences(game, s).unwrap();
            compared += 1;
            expect(f, format!("{label} S={s}"), &closed, &seq);
        }
    };
    for i in 0..500 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=5);
        let game = random_monotone_game(&mut rng, n, k);
        check(
            &mut f,
            &game,
            &format!("random #{i} mwc={:?}", game.minimal_winning_coalitions()),
        );
    }
    for n in 2..=7 {
        for apex in [1, n] {
            check(
                &mut f,
                &SimpleGame::apex(n, PlayerId::new(apex).unwrap()).unwrap(),
                &format!("apex n={n} a={apex}"),
            );
        }
        for k in n / 2 + 1..=n {
            check(
                &mut f,
                &SimpleGame::majority(n, k).unwrap(),
                &format!("majority n={n} k={k}"),
            );
        }
    }
    within(&mut f, start.elapsed(), Duration::from_secs(30));
    done(f, format!("{compared} coalitions agree"))
}

fn property_suite() -> Outcome {
    let mut f = Vec::new();
    let report = proposition_harness(SEED, 1000);
    let quoted = quoted_banzhaf_null_scaling(SEED, 1000);
    let mut lines = Vec::new();
    for check in report.checks.iter().chain(std::iter::once(&quoted)) {
        if check.trials < 1000 {
            f.push(format!("{}: only {} trials", check.name, check.trials));
        }
        if check.violations > 0 {
            f.push(check.to_string());
        }
        lines.push(format!(
            "{}={}/{}",
            check.name, check.violations, check.trials
        ));
    }
    done(f, format!("violations/trials: {}", lines.join(" ")))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coopetition"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn cli_contract() -> Outcome {
    let mut f = Vec::new();
    let mut values = 0;
    for which in ["2", "3", "4"] {
        let (code, first) = run_cli(&["paper-tables", which]);
        let (_, second) = run_cli(&["paper-tables", which]);
        if code != 0 {
            f.push(format!("paper-tables {which} exited {code}"));
        }
        if first != second {
            f.push(format!("paper-tables {which} output differs between runs"));
        }
        let (_, json) = run_cli(&["paper-tables", which, "--format", "json"]);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        for cell in parsed["cells"].as_array().unwrap() {
            for key in ["expected", "computed"] {
                let text = cell[key].as_str().unwrap();
                values += 1;
                match parse_rational(text) {
                    Ok(r) if render(&r) == text => {}
                    _ => f.push(format!(
                        "paper-tables {which}: `{text}` does not round-trip"
                    )),
                }
            }
        }
    }
    done(
        f,
        format!("exit 0, byte-identical reruns, {values} emitted fractions round-trip"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "profitability paradox",
            profitability_paradox,
            Duration::from_secs(1),
        ),
        (
            "interaction index",
            interaction_index,
            Duration::from_secs(1),
        ),
        (
            "coopetition table",
            coopetition_table,
            Duration::from_secs(1),
        ),
        (
            "majority tables n=8 and n=9",
            majority_tables,
            Duration::from_secs(30),
        ),
        (
            "apex closed forms",
            apex_closed_forms,
            Duration::from_secs(30),
        ),
        (
            "sequence oracle equivalence",
            oracle_equivalence,
            Duration::from_secs(30),
        ),
        ("property suite", property_suite, Duration::from_secs(120)),
        ("cli contract", cli_contract, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            let message = format!("runtime {elapsed:.2?} exceeds {limit:?}");
            outcome = match outcome {
                Ok(_) => Err(vec![message]),
                Err(mut f) => {
                    f.push(message);
                    Err(f)
                }
            };
        }
        match outcome {
            Ok(summary) => println!(
                "criterion {}: PASS {name} ({elapsed:.2?}): {summary}",
                i + 1
            ),
            Err(failures) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {name} ({elapsed:.2?}): {} problem(s)",
                    i + 1,
                    failures.len()
                );
                for line in failures {
                    println!("    {line}");
                }
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
