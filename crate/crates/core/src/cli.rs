//! The `bary` command line.
//!
//! Exit codes: 0 on success or a passing verification, 1 when a verification
//! fails, 2 on usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coefficients::{bary_binom, BaryBinomials};
use crate::digits::{carry_free_partners, expand};
use crate::error::Result;
use crate::identities::{default_suite, Identity, SweepParams, Verifier};
use crate::triangle::{build_direct, reduce_mod, render_csv, render_pbm, render_pbm_nonzero, render_text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bary", version, about = "Digital (b-ary) binomial coefficients")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Pbm,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Base-b expansion (most significant digit first), digit sum and digit counts.
    Digits {
        n: u64,
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// The b-ary binomial coefficient of n and k with its digit factorization.
    Binom {
        n: u64,
        k: u64,
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// Row n of the b-ary Pascal triangle as CSV.
    Row {
        n: u64,
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// All k whose addition with n - k is carry-free in base b.
    Carryfree {
        n: u64,
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// Render the triangle with base^levels rows.
    Triangle {
        #[arg(long, default_value_t = 2)]
        base: u64,
        #[arg(long)]
        levels: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Reduce entries mod p (text/csv) or mark entries nonzero mod p (pbm).
        #[arg(long = "mod")]
        mod_p: Option<u64>,
    },
    /// Sweep an identity and print its report; `all` runs the default suite.
    Verify {
        identity: String,
        #[arg(long, default_value_t = 2)]
        base: u64,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Random trials for `inverse` and `convolution`.
        #[arg(long, default_value_t = 1)]
        trials: u64,
        /// Number of variables for `multinomial`.
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(config.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut text = String::new();
    let mut bytes = Vec::new();
    let mut code = EXIT_OK;
    match command {
        Command::Digits { n, base } => {
            let e = expand(n, base)?;
            text.push_str(&format!("digits: {}\n", e.to_msf_string()));
            text.push_str(&format!("sum: {}\n", e.digit_sum()));
            let mut present: Vec<u32> = e.digits().to_vec();
            present.sort_unstable();
            present.dedup();
            for d in present {
                text.push_str(&format!("count[{d}]: {}\n", e.count(d)));
            }
        }
        Command::Binom { n, k, base } => {
            let c = bary_binom(n, k, base)?;
            text.push_str(&format!("{}\n{}\n", c.value, c.factorization()));
        }
        Command::Row { n, base } => {
            let row = BaryBinomials::new(base)?.row(n);
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            text.push_str(&cells.join(","));
            text.push('\n');
        }
        Command::Carryfree { n, base } => {
            let cells: Vec<String> = carry_free_partners(n, base)?
                .iter()
                .map(ToString::to_string)
                .collect();
            text.push_str(&cells.join(","));
            text.push('\n');
        }
        Command::Triangle {
            base,
            levels,
            format,
            mod_p,
        } => {
            let t = build_direct(base, levels)?;
            match format {
                Format::Pbm => {
                    bytes = match mod_p {
                        Some(p) => render_pbm(&t, p)?,
                        None => render_pbm_nonzero(&t),
                    }
                }
                Format::Text | Format::Csv => {
                    let t = match mod_p {
                        Some(p) => reduce_mod(&t, p)?,
                        None => t,
                    };
                    text = if format == Format::Text {
                        render_text(&t)
                    } else {
                        render_csv(&t)
                    };
                }
            }
        }
        Command::Verify {
            identity,
            base,
            n_max,
            seed,
            jobs,
            trials,
            vars,
        } => {
            let verifier = Verifier::new(jobs);
            let runs: Vec<(Identity, SweepParams)> = if identity == "all" {
                default_suite()
                    .into_iter()
                    .map(|(id, p)| (id, SweepParams { seed, ..p }))
                    .collect()
            } else {
                let params = SweepParams {
                    base,
                    n_max,
                    vars,
                    trials,
                    seed,
                };
                vec![(identity.parse()?, params)]
            };
            for (id, params) in runs {
                let report = verifier.run(id, &params)?;
                if !report.passed() {
                    code = EXIT_FAIL;
                }
                // Stream suite lines as they finish.
                let _ = writeln!(out, "{report}");
            }
        }
    }
    let _ = out.write_all(text.as_bytes());
    let _ = out.write_all(&bytes);
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bary").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn binom_command() {
        let (code, out, _) = run_capture(&["binom", "8", "4", "--base", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "4\n(2 choose 1)·(2 choose 1)\n");
        let (code, out, _) = run_capture(&["binom", "7", "3", "--base", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("1"));
    }

    #[test]
    fn digits_row_carryfree() {
        let (_, out, _) = run_capture(&["digits", "8", "--base", "3"]);
        assert_eq!(out, "digits: 2 2\nsum: 4\ncount[2]: 2\n");
        let (_, out, _) = run_capture(&["row", "8", "--base", "3"]);
        assert_eq!(out, "1,2,1,2,4,2,1,2,1\n");
        let (_, out, _) = run_capture(&["carryfree", "6", "--base", "3"]);
        assert_eq!(out, "0,3,6\n");
    }

    #[test]
    fn triangle_formats() {
        let (code, out, _) = run_capture(&["triangle", "--base", "3", "--levels", "1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n1,1\n1,2,1\n");
        let (_, out, _) = run_capture(&["triangle", "--base", "3", "--levels", "2", "--format", "csv", "--mod", "3"]);
        assert_eq!(out.lines().last(), Some("1,2,1,2,1,2,1,2,1"));
        let (_, out, _) = run_capture(&["triangle", "--base", "2", "--levels", "1", "--format", "pbm"]);
        assert_eq!(out, "P1\n2 2\n1 0\n1 1\n");
    }

    #[test]
    fn verify_command() {
        let (code, out, _) = run_capture(&["verify", "lucas", "--base", "5", "--n-max", "100"]);
        assert_eq!(code, 0);
        assert_eq!(out, "IDENTITY lucas base=5 range=0..100 checked=5151 result=PASS\n");
        let (code, out, _) = run_capture(&["verify", "recurrence", "--base", "2", "--n-max", "10"]);
        assert_eq!(code, 1);
        assert!(out.contains("result=FAIL counterexample=(n=5,k=3)"));
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["frobnicate"][..],
            &["binom", "8"],
            &["binom", "8", "x"],
            &["binom", "8", "4", "--base", "1"],
            &["digits", "-3"],
            &["triangle", "--levels", "0"],
            &["triangle", "--base", "2", "--levels", "30"],
            &["verify", "nonsense"],
            &["verify", "lucas", "--base", "4"],
            &["row", "3", "--bogus"],
        ] {
            let (code, out, err) = run_capture(args);
            assert_eq!(code, 2, "{args:?}");
            assert!(out.is_empty());
            assert!(!err.is_empty());
        }
    }
}
