//! Acceptance suite: every criterion runs at its full range and time budget
//! and prints one PASS/FAIL line. The test fails if any criterion fails.

use std::time::{Duration, Instant};

use bary::identities::{RecurrenceCase, VerificationReport, Verifier};
use bary::triangle::{build_direct, build_tensor, render_csv, render_pbm, render_text};

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport]) -> Outcome {
    let failures: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(ToString::to_string)
        .collect();
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let ran_something = reports.iter().all(|r| r.checked > 0);
    Outcome {
        passed: failures.is_empty() && ran_something,
        detail: if failures.is_empty() {
            format!("{} sweeps, {checked} instances", reports.len())
        } else {
            failures.join(" | ")
        },
    }
}

fn fixture_csv(text: &str) -> String {
    text.lines()
        .map(|l| l.split_whitespace().map(|c| if c == "." { "0" } else { c }).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

fn normalized(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect()
}

fn golden(b: u64, fixture: &str) -> Outcome {
    let t = build_direct(b, 2).unwrap();
    let csv_ok = render_csv(&t) == fixture_csv(fixture);
    let text_ok = normalized(&render_text(&t)) == normalized(fixture);
    Outcome {
        passed: csv_ok && text_ok && t.row_count() == (b * b) as usize,
        detail: format!("csv byte-exact={csv_ok} text value-exact={text_ok}"),
    }
}

/// Depth-d Sierpinski mask built by block recursion: [[S, 0], [S, S]].
fn sierpinski(depth: u32) -> Vec<Vec<bool>> {
    let mut mask = vec![vec![true]];
    for _ in 0..depth {
        let size = mask.len();
        let mut next = vec![vec![false; 2 * size]; 2 * size];
        for (r, row) in mask.iter().enumerate() {
            for (c, &bit) in row.iter().enumerate() {
                next[r][c] = bit;
                next[r + size][c] = bit;
                next[r + size][c + size] = bit;
            }
        }
        mask = next;
    }
    mask
}

fn pbm_bytes(mask: &[Vec<bool>]) -> Vec<u8> {
    let mut out = format!("P1\n{} {}\n", mask[0].len(), mask.len());
    for row in mask {
        let line: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out += &line.join(" ");
        out += "\n";
    }
    out.into_bytes()
}

fn criteria() -> Vec<(&'static str, Duration, Box<dyn Fn() -> Outcome>)> {
    let v = Verifier::new(1);
    let secs = Duration::from_secs;
    vec![
        (
            "1 golden T_2 base 3",
            secs(1),
            Box::new(|| golden(3, include_str!("fixtures/t2_base3.txt"))),
        ),
        (
            "2 golden T_2 base 4",
            secs(1),
            Box::new(|| golden(4, include_str!("fixtures/t2_base4.txt"))),
        ),
        (
            "3 tensor equivalence",
            secs(10),
            Box::new(|| {
                let cases = [(2, 6), (3, 4), (4, 3), (5, 3)];
                let bad: Vec<String> = cases
                    .iter()
                    .filter(|&&(b, m)| build_tensor(b, m).unwrap() != build_direct(b, m).unwrap())
                    .map(|(b, m)| format!("(b={b},m={m})"))
                    .collect();
                Outcome {
                    passed: bad.is_empty(),
                    detail: if bad.is_empty() { "4 cases".into() } else { bad.join(" ") },
                }
            }),
        ),
        (
            "4 binomial identity",
            secs(60),
            Box::new(move || {
                from_reports(&[2, 3, 4, 5, 10].map(|b| v.binomial_identity(b, 2000).unwrap()))
            }),
        ),
        (
            "5 generating function",
            secs(30),
            Box::new(move || from_reports(&[2, 3, 4, 5, 10].map(|b| v.genfun(b, 1000).unwrap()))),
        ),
        (
            "6 orthogonality",
            secs(60),
            Box::new(move || from_reports(&[2, 3, 5].map(|b| v.orthogonality(b, 500).unwrap()))),
        ),
        (
            "7 lucas and kummer",
            secs(60),
            Box::new(move || {
                let mut reports = Vec::new();
                for p in [2, 3, 5, 7, 11] {
                    reports.push(v.lucas(p, 600).unwrap());
                    reports.push(v.kummer(p, 600).unwrap());
                }
                from_reports(&reports)
            }),
        ),
        (
            "8a symmetry",
            secs(30),
            Box::new(move || {
                from_reports(&[2, 3, 4, 5, 7, 10].map(|b| v.symmetry(b, 3000).unwrap()))
            }),
        ),
        (
            "8b recurrence (stated hypothesis and degenerate digits)",
            secs(30),
            Box::new(move || {
                let mut reports = Vec::new();
                for b in [2, 3, 4, 5, 7, 10] {
                    reports.push(v.recurrence(b, 3000, RecurrenceCase::LowDigitsNonzero).unwrap());
                    reports.push(v.recurrence(b, 3000, RecurrenceCase::LowDigitZero).unwrap());
                }
                from_reports(&reports)
            }),
        ),
        (
            "9 base-3 weighted form",
            secs(10),
            Box::new(move || from_reports(&[v.base3_weighted(2000).unwrap()])),
        ),
        (
            "10 pochhammer and chu-vandermonde",
            secs(60),
            Box::new(move || {
                let mut reports: Vec<_> =
                    [2, 3, 4].map(|b| v.pochhammer_identity(b, 500).unwrap()).into();
                reports.push(v.chu_vandermonde(30).unwrap());
                from_reports(&reports)
            }),
        ),
        (
            "11 convolution lift and inverse relations",
            secs(30),
            Box::new(move || {
                let mut reports = Vec::new();
                for seed in 0..20 {
                    for b in [2, 3, 4] {
                        reports.push(v.convolution_lift(b, 300, 1, seed).unwrap());
                        reports.push(v.inverse_relations(b, 300, 1, seed).unwrap());
                    }
                }
                from_reports(&reports)
            }),
        ),
        (
            "12 multinomial",
            secs(60),
            Box::new(move || from_reports(&[2, 3].map(|b| v.multinomial(b, 3, 100).unwrap()))),
        ),
        (
            "13 sierpinski bitmap",
            secs(1),
            Box::new(|| {
                let t = build_direct(2, 5).unwrap();
                let ok = render_pbm(&t, 2).unwrap() == pbm_bytes(&sierpinski(5));
                Outcome {
                    passed: ok,
                    detail: "32x32 P1 byte-exact".into(),
                }
            }),
        ),
    ]
}

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (name, budget, check) in criteria() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < budget;
        let ok = outcome.passed && in_time;
        println!(
            "[{}] {name} ({:.2}s of {}s): {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            outcome.detail
        );
        if !ok {
            failed.push(name);
        }
    }
    // Not a criterion: the same recurrence restricted to pairs whose second
    // digits are nonzero, which is where subtracting b acts.
    let shifted: Vec<_> = [2, 3, 4, 5, 7, 10]
        .map(|b| {
            Verifier::new(1)
                .recurrence(b, 3000, RecurrenceCase::SecondDigitsNonzero)
                .unwrap()
        })
        .into();
    println!("[INFO] recurrence with n_1 > 0, k_1 > 0: {}", from_reports(&shifted).detail);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
