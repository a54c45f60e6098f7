//! Exhaustive checkers for the identities satisfied by b-ary binomial
//! coefficients.
//!
//! Every checker sweeps a parameter range, compares exact objects (big
//! integers or canonical polynomials) and returns a [`VerificationReport`]
//! carrying the first counterexample, if any. Identities with rational
//! coefficients are checked in their factorial-cleared integer form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coefficients::{
    bary_multinomial, classical_binom, classical_row, is_prime, valuation,
    BaryBinomials,
};
use crate::digits::{
    carry_count_unchecked, carry_free_partners, check_base, digit_count, digit_sum_unchecked,
    digits_dominated, expand,
};
use crate::error::{Error, Result};
use crate::polynomial::{pochhammer_poly, SparsePoly};
use crate::sweep::{self, UnitOutcome};

/// The witness of a failed identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Parameter tuple, e.g. `(n=10,k=4)`.
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    fn new(params: String, lhs: impl ToString, rhs: impl ToString) -> Self {
        Counterexample {
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    /// `None` for identities that do not depend on a base.
    pub base: Option<u64>,
    pub n_max: u64,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `IDENTITY <name> base=<b> range=0..<n_max> checked=<c> result=PASS|FAIL [counterexample=<tuple> lhs="…" rhs="…"]`
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IDENTITY {} base=", self.identity)?;
        match self.base {
            Some(b) => write!(f, "{b}")?,
            None => write!(f, "-")?,
        }
        write!(f, " range=0..{} checked={} result=", self.n_max, self.checked)?;
        match &self.counterexample {
            None => write!(f, "PASS"),
            Some(c) => write!(
                f,
                "FAIL counterexample={} lhs=\"{}\" rhs=\"{}\"",
                c.params, c.lhs, c.rhs
            ),
        }
    }
}

/// Which `(n, k)` pairs the recurrence `C_b(n,k) = C_b(n-b,k-b) + C_b(n-b,k)`
/// is swept over; all variants require `b <= k <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceCase {
    /// `n_0 > 0` and `k_0 > 0`.
    LowDigitsNonzero,
    /// `n_0 = 0` or `k_0 = 0`.
    LowDigitZero,
    /// `n_1 > 0` and `k_1 > 0`: the digit that subtracting `b` decrements.
    SecondDigitsNonzero,
}

impl RecurrenceCase {
    fn name(self) -> &'static str {
        match self {
            RecurrenceCase::LowDigitsNonzero => "recurrence",
            RecurrenceCase::LowDigitZero => "recurrence-degenerate",
            RecurrenceCase::SecondDigitsNonzero => "recurrence-shifted",
        }
    }

    fn applies(self, n: u64, k: u64, b: u64) -> bool {
        match self {
            RecurrenceCase::LowDigitsNonzero => n % b > 0 && k % b > 0,
            RecurrenceCase::LowDigitZero => n % b == 0 || k % b == 0,
            RecurrenceCase::SecondDigitsNonzero => (n / b) % b > 0 && (k / b) % b > 0,
        }
    }
}

/// Identity names accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Binomial,
    Genfun,
    Multinomial,
    Symmetry,
    Recurrence(RecurrenceCase),
    Lucas,
    Kummer,
    Orthogonality,
    InverseRelations,
    ConvolutionLift,
    ChuVandermonde,
    Pochhammer,
    Base3Weighted,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::Binomial,
        Identity::Genfun,
        Identity::Multinomial,
        Identity::Symmetry,
        Identity::Recurrence(RecurrenceCase::LowDigitsNonzero),
        Identity::Recurrence(RecurrenceCase::LowDigitZero),
        Identity::Recurrence(RecurrenceCase::SecondDigitsNonzero),
        Identity::Lucas,
        Identity::Kummer,
        Identity::Orthogonality,
        Identity::InverseRelations,
        Identity::ConvolutionLift,
        Identity::ChuVandermonde,
        Identity::Pochhammer,
        Identity::Base3Weighted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Binomial => "binomial",
            Identity::Genfun => "genfun",
            Identity::Multinomial => "multinomial",
            Identity::Symmetry => "symmetry",
            Identity::Recurrence(case) => case.name(),
            Identity::Lucas => "lucas",
            Identity::Kummer => "kummer",
            Identity::Orthogonality => "orthogonality",
            Identity::InverseRelations => "inverse",
            Identity::ConvolutionLift => "convolution",
            Identity::ChuVandermonde => "chu-vandermonde",
            Identity::Pochhammer => "pochhammer",
            Identity::Base3Weighted => "base3-weighted",
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown identity '{s}'")))
    }
}

/// Parameters of a single checker run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    pub base: u64,
    pub n_max: u64,
    /// Number of variables for the multinomial checker.
    pub vars: usize,
    /// Random trials for the sequence-based checkers.
    pub trials: u64,
    pub seed: u64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            base: 2,
            n_max: 100,
            vars: 3,
            trials: 1,
            seed: 0,
        }
    }
}

/// Runs identity checkers on a configurable number of worker threads.
///
/// Reports do not depend on the worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    jobs: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { jobs: 1 }
    }
}

fn report(
    identity: &str,
    base: Option<u64>,
    n_max: u64,
    (checked, counterexample): (u64, Option<Counterexample>),
) -> VerificationReport {
    VerificationReport {
        identity: identity.to_string(),
        base,
        n_max,
        checked,
        counterexample,
    }
}

/// Units are numbered from zero, so a sweep over `0..=n_max` has `n_max + 1`.
fn unit_count(n_max: u64) -> Result<u64> {
    n_max
        .checked_add(1)
        .ok_or_else(|| Error::Domain("n_max is too large".into()))
}

/// Polynomial degrees are `u32` exponents.
fn check_degree_bound(n_max: u64) -> Result<()> {
    if n_max > u64::from(u32::MAX) {
        return Err(Error::Domain(format!("n_max {n_max} exceeds {}", u32::MAX)));
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<()> {
    check_base(p)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn sign(exponent: u64) -> BigInt {
    if exponent % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// All compositions of `n` into `parts` nonnegative parts, in lexicographic order.
fn for_each_composition(n: u64, parts: usize, f: &mut impl FnMut(&[u64])) {
    fn go(rest: u64, slot: usize, buf: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if slot + 1 == buf.len() {
            buf[slot] = rest;
            f(buf);
            return;
        }
        for v in 0..=rest {
            buf[slot] = v;
            go(rest - v, slot + 1, buf, f);
        }
    }
    let mut buf = vec![0; parts];
    go(n, 0, &mut buf, f);
}

impl Verifier {
    pub fn new(jobs: usize) -> Self {
        Verifier { jobs: jobs.max(1) }
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn run(&self, identity: Identity, p: &SweepParams) -> Result<VerificationReport> {
        match identity {
            Identity::Binomial => self.binomial_identity(p.base, p.n_max),
            Identity::Genfun => self.genfun(p.base, p.n_max),
            Identity::Multinomial => self.multinomial(p.base, p.vars, p.n_max),
            Identity::Symmetry => self.symmetry(p.base, p.n_max),
            Identity::Recurrence(case) => self.recurrence(p.base, p.n_max, case),
            Identity::Lucas => self.lucas(p.base, p.n_max),
            Identity::Kummer => self.kummer(p.base, p.n_max),
            Identity::Orthogonality => self.orthogonality(p.base, p.n_max),
            Identity::InverseRelations => {
                self.inverse_relations(p.base, p.n_max, p.trials, p.seed)
            }
            Identity::ConvolutionLift => self.convolution_lift(p.base, p.n_max, p.trials, p.seed),
            Identity::ChuVandermonde => self.chu_vandermonde(p.n_max),
            Identity::Pochhammer => self.pochhammer_identity(p.base, p.n_max),
            Identity::Base3Weighted => self.base3_weighted(p.n_max),
        }
    }

    /// `(X+Y)^{S_b(n)} = sum_{k=0}^{n} C_b(n,k) X^{S_b(k)} Y^{S_b(n-k)}` as
    /// bivariate polynomials.
    pub fn binomial_identity(&self, b: u64, n_max: u64) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        check_degree_bound(n_max)?;
        let sum = SparsePoly::linear(2, &[0, 1], BigInt::zero())?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let lhs = sum.pow(digit_sum_unchecked(n, b));
            let rhs = binomial_rhs(&coeffs, n);
            if lhs.equal(&rhs) {
                UnitOutcome::pass(1)
            } else {
                UnitOutcome::fail(1, Counterexample::new(format!("(n={n})"), lhs, rhs))
            }
        });
        Ok(report("binomial", Some(b), n_max, outcome))
    }

    /// The coefficient of `x^k` in `prod_l (1 + x^{b^l})^{n_l}` equals `C_b(n, k)`
    /// for every `k`, and the product has degree exactly `n`.
    pub fn genfun(&self, b: u64, n_max: u64) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        check_degree_bound(n_max)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let p = generating_product(n, b);
            if p.degree() != Some(n) {
                let deg = p.degree().map_or("none".to_string(), |d| d.to_string());
                return UnitOutcome::fail(
                    1,
                    Counterexample::new(format!("(n={n})"), format!("deg={deg}"), format!("deg={n}")),
                );
            }
            for k in 0..=n {
                let lhs = p.coefficient(&[k as u32]);
                let rhs = coeffs.value(n, k);
                if lhs != rhs {
                    return UnitOutcome::fail(
                        k + 2,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n + 2)
        });
        Ok(report("genfun", Some(b), n_max, outcome))
    }

    /// `(X_1+...+X_m)^{S_b(n)} = sum over compositions k_1+...+k_m = n of
    /// C_b(n; k_1..k_m) prod_i X_i^{S_b(k_i)}`.
    pub fn multinomial(&self, b: u64, m: usize, n_max: u64) -> Result<VerificationReport> {
        check_base(b)?;
        if !(2..=4).contains(&m) {
            return Err(Error::Domain(format!(
                "multinomial checker supports 2..=4 variables, got {m}"
            )));
        }
        check_degree_bound(n_max)?;
        let vars: Vec<usize> = (0..m).collect();
        let sum = SparsePoly::linear(m, &vars, BigInt::zero())?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let lhs = sum.pow(digit_sum_unchecked(n, b));
            let mut rhs = SparsePoly::zero(m).expect("valid arity");
            let mut exps = vec![0u32; m];
            for_each_composition(n, m, &mut |parts| {
                let c = bary_multinomial(n, parts, b).expect("validated base");
                for (e, &k) in exps.iter_mut().zip(parts) {
                    *e = digit_sum_unchecked(k, b) as u32;
                }
                rhs.add_term(&exps, c).expect("valid arity");
            });
            if lhs.equal(&rhs) {
                UnitOutcome::pass(1)
            } else {
                UnitOutcome::fail(1, Counterexample::new(format!("(n={n})"), lhs, rhs))
            }
        });
        Ok(report("multinomial", Some(b), n_max, outcome))
    }

    /// `C_b(n, k) = C_b(n, n - k)` for all `k <= n <= n_max`.
    pub fn symmetry(&self, b: u64, n_max: u64) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            for k in 0..=n {
                let lhs = coeffs.value(n, k);
                let rhs = coeffs.value(n, n - k);
                if lhs != rhs {
                    return UnitOutcome::fail(
                        k + 1,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n + 1)
        });
        Ok(report("symmetry", Some(b), n_max, outcome))
    }

    /// `C_b(n,k) = C_b(n-b,k-b) + C_b(n-b,k)` over the pairs `b <= k <= n <= n_max`
    /// selected by `case`.
    pub fn recurrence(
        &self,
        b: u64,
        n_max: u64,
        case: RecurrenceCase,
    ) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let mut checked = 0;
            for k in b..=n {
                if !case.applies(n, k, b) {
                    continue;
                }
                checked += 1;
                let lhs = coeffs.value(n, k);
                let rhs = coeffs.value(n - b, k - b) + coeffs.value(n - b, k);
                if lhs != rhs {
                    return UnitOutcome::fail(
                        checked,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(checked)
        });
        Ok(report(case.name(), Some(b), n_max, outcome))
    }

    /// `C(n, k) = C_p(n, k) (mod p)` for all `k <= n <= n_max`.
    pub fn lucas(&self, p: u64, n_max: u64) -> Result<VerificationReport> {
        check_prime(p)?;
        check_sweep_bound(n_max)?;
        let coeffs = BaryBinomials::new(p)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let row = classical_row(n);
            for (k, c) in (0..=n).zip(&row) {
                let lhs = c % p;
                let rhs = coeffs.value(n, k) % p;
                if lhs != rhs {
                    return UnitOutcome::fail(
                        k + 1,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n + 1)
        });
        Ok(report("lucas", Some(p), n_max, outcome))
    }

    /// `v_p(C(n, k))` equals the number of carries adding `k` and `n - k` in base `p`.
    pub fn kummer(&self, p: u64, n_max: u64) -> Result<VerificationReport> {
        check_prime(p)?;
        check_sweep_bound(n_max)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let row = classical_row(n);
            for (k, c) in (0..=n).zip(&row) {
                let lhs = valuation(c, p).expect("binomial is positive and p is prime");
                let rhs = carry_count_unchecked(k, n - k, p);
                if lhs != rhs {
                    return UnitOutcome::fail(
                        k + 1,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n + 1)
        });
        Ok(report("kummer", Some(p), n_max, outcome))
    }

    /// `sum_{k=j}^{n} C_b(n,k) C_b(k,j) (-1)^{S_b(k)+S_b(j)} = [n == j]`.
    pub fn orthogonality(&self, b: u64, n_max: u64) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        let rows = bary_rows(&coeffs, n_max)?;
        let sums: Vec<u64> = (0..=n_max).map(|n| digit_sum_unchecked(n, b)).collect();
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let row_n = &rows[n as usize];
            for j in 0..=n {
                let mut total = BigInt::zero();
                for k in j..=n {
                    let outer = &row_n[k as usize];
                    if outer.is_zero() {
                        continue;
                    }
                    let inner = &rows[k as usize][j as usize];
                    if inner.is_zero() {
                        continue;
                    }
                    let term = outer * inner;
                    if (sums[k as usize] + sums[j as usize]) % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
                let expected = if n == j { BigInt::one() } else { BigInt::zero() };
                if total != expected {
                    return UnitOutcome::fail(
                        j + 1,
                        Counterexample::new(format!("(n={n},j={j})"), total, expected),
                    );
                }
            }
            UnitOutcome::pass(n + 1)
        });
        Ok(report("orthogonality", Some(b), n_max, outcome))
    }

    /// For random `c` with entries in `[-100, 100]`, the transform
    /// `a_n = sum_k (-1)^{S_b(k)} C_b(n,k) c_k` applied twice recovers `c`.
    pub fn inverse_relations(
        &self,
        b: u64,
        n_max: u64,
        trials: u64,
        seed: u64,
    ) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(b)?;
        check_trials(trials)?;
        let rows = bary_rows(&coeffs, n_max)?;
        let signs: Vec<BigInt> = (0..=n_max).map(|k| sign(digit_sum_unchecked(k, b))).collect();
        let transform = |seq: &[BigInt]| -> Vec<BigInt> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .zip(seq)
                        .zip(&signs)
                        .filter(|((c, _), _)| !c.is_zero())
                        .map(|((c, x), s)| c * x * s)
                        .sum()
                })
                .collect()
        };
        let outcome = sweep::run(trials, self.jobs, |t| {
            let mut rng = trial_rng(seed, t);
            let c: Vec<BigInt> = (0..=n_max)
                .map(|_| BigInt::from(rng.gen_range(-100i64..=100)))
                .collect();
            let a = transform(&c);
            let recovered = transform(&a);
            for (n, (lhs, rhs)) in recovered.iter().zip(&c).enumerate() {
                if lhs != rhs {
                    return UnitOutcome::fail(
                        n as u64 + 1,
                        Counterexample::new(format!("(trial={t},n={n})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n_max + 1)
        });
        Ok(report("inverse", Some(b), n_max, outcome))
    }

    /// With `c_m = sum_{k<=m} C(m,k) a_k d_{m-k}` for random digit-indexed
    /// sequences `a`, `d` over `[-10, 10]`:
    /// `prod_l c_{n_l} = sum_{carry-free k} prod_l C(n_l,k_l) a_{k_l} d_{n_l-k_l}`.
    pub fn convolution_lift(
        &self,
        b: u64,
        n_max: u64,
        trials: u64,
        seed: u64,
    ) -> Result<VerificationReport> {
        check_base(b)?;
        check_trials(trials)?;
        let digits = b.min(n_max + 1) as usize;
        let outcome = sweep::run(trials, self.jobs, |t| {
            let mut rng = trial_rng(seed, t);
            let a: Vec<BigInt> = (0..digits).map(|_| BigInt::from(rng.gen_range(-10i64..=10))).collect();
            let d: Vec<BigInt> = (0..digits).map(|_| BigInt::from(rng.gen_range(-10i64..=10))).collect();
            let c: Vec<BigInt> = (0..digits as u64)
                .map(|m| {
                    (0..=m)
                        .map(|k| classical_binom(m, k as i64) * &a[k as usize] * &d[(m - k) as usize])
                        .sum()
                })
                .collect();
            for n in 0..=n_max {
                let en = expand(n, b).expect("validated base");
                let lhs: BigInt = en.digits().iter().map(|&nl| &c[nl as usize]).product();
                let mut rhs = BigInt::zero();
                for k in carry_free_partners(n, b).expect("validated base") {
                    let ek = expand(k, b).expect("validated base");
                    let mut term = BigInt::one();
                    for (l, &nl) in en.digits().iter().enumerate() {
                        let kl = ek.digit(l);
                        term *= classical_binom(u64::from(nl), i64::from(kl))
                            * &a[kl as usize]
                            * &d[(nl - kl) as usize];
                    }
                    rhs += term;
                }
                if lhs != rhs {
                    return UnitOutcome::fail(
                        n + 1,
                        Counterexample::new(format!("(trial={t},n={n})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(n_max + 1)
        });
        Ok(report("convolution", Some(b), n_max, outcome))
    }

    /// `(x+y)_m = sum_{k=0}^{m} C(m,k) (x)_k (y)_{m-k}` as bivariate polynomials.
    pub fn chu_vandermonde(&self, n_max: u64) -> Result<VerificationReport> {
        check_degree_bound(n_max)?;
        let px = rising_table(&[0], n_max)?;
        let py = rising_table(&[1], n_max)?;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |m| {
            let lhs = pochhammer_poly(2, &[0, 1], m).expect("valid indices");
            let mut rhs = SparsePoly::zero(2).expect("valid arity");
            for k in 0..=m {
                let term = px[k as usize]
                    .mul(&py[(m - k) as usize])
                    .expect("same arity")
                    .scale(&classical_binom(m, k as i64));
                rhs = rhs.add(&term).expect("same arity");
            }
            if lhs.equal(&rhs) {
                UnitOutcome::pass(1)
            } else {
                UnitOutcome::fail(1, Counterexample::new(format!("(m={m})"), lhs, rhs))
            }
        });
        Ok(report("chu-vandermonde", None, n_max, outcome))
    }

    /// `prod_l (x+y)_{n_l} = sum_{carry-free k} prod_l C(n_l,k_l) (x)_{k_l} (y)_{n_l-k_l}`.
    pub fn pochhammer_identity(&self, b: u64, n_max: u64) -> Result<VerificationReport> {
        check_base(b)?;
        check_degree_bound(n_max)?;
        // Rising factorials for every digit value that can occur.
        let top = b.min(n_max + 1);
        let table = |vars: &[usize]| -> Result<Vec<SparsePoly>> {
            (0..top).map(|d| pochhammer_poly(2, vars, d)).collect()
        };
        let (px, py, pxy) = (table(&[0])?, table(&[1])?, table(&[0, 1])?);
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let en = expand(n, b).expect("validated base");
            let mut lhs = SparsePoly::one(2).expect("valid arity");
            for &nl in en.digits() {
                lhs = lhs.mul(&pxy[nl as usize]).expect("same arity");
            }
            let mut rhs = SparsePoly::zero(2).expect("valid arity");
            for k in carry_free_partners(n, b).expect("validated base") {
                let ek = expand(k, b).expect("validated base");
                let mut term = SparsePoly::one(2).expect("valid arity");
                let mut scale = BigInt::one();
                for (l, &nl) in en.digits().iter().enumerate() {
                    let kl = ek.digit(l);
                    scale *= classical_binom(u64::from(nl), i64::from(kl));
                    term = term
                        .mul(&px[kl as usize])
                        .and_then(|t| t.mul(&py[(nl - kl) as usize]))
                        .expect("same arity");
                }
                rhs = rhs.add(&term.scale(&scale)).expect("same arity");
            }
            if lhs.equal(&rhs) {
                UnitOutcome::pass(1)
            } else {
                UnitOutcome::fail(1, Counterexample::new(format!("(n={n})"), lhs, rhs))
            }
        });
        Ok(report("pochhammer", Some(b), n_max, outcome))
    }

    /// For carry-free `(k, n-k)` in base 3:
    /// `C_3(n,k) = 2^{S_3^(2)(n) - S_3^(2)(k) - S_3^(2)(n-k)}`.
    pub fn base3_weighted(&self, n_max: u64) -> Result<VerificationReport> {
        let coeffs = BaryBinomials::new(3)?;
        let twos = |x: u64| digit_count(x, 3, 2).expect("base 3") as i64;
        let outcome = sweep::run(unit_count(n_max)?, self.jobs, |n| {
            let mut checked = 0;
            let twos_n = twos(n);
            for k in 0..=n {
                if !digits_dominated(k, n, 3) {
                    continue;
                }
                checked += 1;
                let exponent = twos_n - twos(k) - twos(n - k);
                let lhs = coeffs.value(n, k);
                let rhs = if exponent >= 0 {
                    (BigInt::one() << exponent as u64).to_string()
                } else {
                    format!("2^{exponent}")
                };
                if lhs.to_string() != rhs {
                    return UnitOutcome::fail(
                        checked,
                        Counterexample::new(format!("(n={n},k={k})"), lhs, rhs),
                    );
                }
            }
            UnitOutcome::pass(checked)
        });
        Ok(report("base3-weighted", Some(3), n_max, outcome))
    }
}

fn check_sweep_bound(n_max: u64) -> Result<()> {
    if n_max > 2000 {
        return Err(Error::Domain(format!(
            "n_max {n_max} exceeds 2000 for classical-binomial sweeps"
        )));
    }
    Ok(())
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    Ok(())
}

/// `(v)_0, ..., (v)_top` for `v` the sum of `vars`, built by successive factors.
fn rising_table(vars: &[usize], top: u64) -> Result<Vec<SparsePoly>> {
    let mut table = vec![SparsePoly::one(2)?];
    for i in 0..top {
        let next = table[i as usize].mul(&SparsePoly::linear(2, vars, BigInt::from(i))?)?;
        table.push(next);
    }
    Ok(table)
}

/// Rows `0..=n_max` of b-ary binomials, materialized for the double sums.
fn bary_rows(coeffs: &BaryBinomials, n_max: u64) -> Result<Vec<Vec<BigInt>>> {
    if n_max > 20_000 {
        return Err(Error::Domain(format!(
            "n_max {n_max} exceeds 20000 for dense coefficient rows"
        )));
    }
    Ok((0..=n_max).map(|n| coeffs.row(n)).collect())
}

/// Independent stream per trial, so trials can run on any worker.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn binomial_rhs(coeffs: &BaryBinomials, n: u64) -> SparsePoly {
    let b = coeffs.base();
    let mut rhs = SparsePoly::zero(2).expect("valid arity");
    for k in 0..=n {
        let c = coeffs.value(n, k);
        let e = [digit_sum_unchecked(k, b) as u32, digit_sum_unchecked(n - k, b) as u32];
        rhs.add_term(&e, c).expect("valid arity");
    }
    rhs
}

/// `prod_{l=0}^{N-1} (1 + x^{b^l})^{n_l}` over the canonical digits of `n`.
pub fn generating_product(n: u64, b: u64) -> SparsePoly {
    let en = expand(n, b).expect("validated base");
    let mut acc = SparsePoly::one(1).expect("valid arity");
    let mut place = 1u64;
    for (l, &nl) in en.digits().iter().enumerate() {
        if nl > 0 {
            let mut factor = SparsePoly::one(1).expect("valid arity");
            factor
                .add_term(&[place as u32], BigInt::one())
                .expect("valid arity");
            acc = acc.mul(&factor.pow(u64::from(nl))).expect("same arity");
        }
        if l + 1 < en.len() {
            place *= b;
        }
    }
    acc
}

/// `verify_*` entry points running on the calling thread.
pub fn verify_binomial_identity(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().binomial_identity(b, n_max)
}

pub fn verify_genfun(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().genfun(b, n_max)
}

pub fn verify_multinomial(b: u64, m: usize, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().multinomial(b, m, n_max)
}

pub fn verify_symmetry(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().symmetry(b, n_max)
}

pub fn verify_recurrence(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().recurrence(b, n_max, RecurrenceCase::LowDigitsNonzero)
}

pub fn verify_lucas(p: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().lucas(p, n_max)
}

pub fn verify_kummer(p: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().kummer(p, n_max)
}

pub fn verify_orthogonality(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().orthogonality(b, n_max)
}

pub fn verify_inverse_relations(b: u64, n_max: u64, trials: u64, seed: u64) -> Result<VerificationReport> {
    Verifier::default().inverse_relations(b, n_max, trials, seed)
}

pub fn verify_convolution_lift(b: u64, n_max: u64, trials: u64, seed: u64) -> Result<VerificationReport> {
    Verifier::default().convolution_lift(b, n_max, trials, seed)
}

pub fn verify_chu_vandermonde(n_max: u64) -> Result<VerificationReport> {
    Verifier::default().chu_vandermonde(n_max)
}

pub fn verify_pochhammer_identity(b: u64, n_max: u64) -> Result<VerificationReport> {
    Verifier::default().pochhammer_identity(b, n_max)
}

pub fn verify_base3_weighted(n_max: u64) -> Result<VerificationReport> {
    Verifier::default().base3_weighted(n_max)
}

/// The full default suite run by `bary verify all`, one report per
/// (identity, base) combination.
pub fn default_suite() -> Vec<(Identity, SweepParams)> {
    let p = |base, n_max| SweepParams {
        base,
        n_max,
        ..SweepParams::default()
    };
    let mut suite = Vec::new();
    for b in [2, 3, 4, 5, 10] {
        suite.push((Identity::Binomial, p(b, 2000)));
    }
    for b in [2, 3, 4, 5, 10] {
        suite.push((Identity::Genfun, p(b, 1000)));
    }
    for b in [2, 3] {
        suite.push((Identity::Multinomial, p(b, 100)));
    }
    for b in [2, 3, 4, 5, 7, 10] {
        suite.push((Identity::Symmetry, p(b, 3000)));
        for case in [
            RecurrenceCase::LowDigitsNonzero,
            RecurrenceCase::LowDigitZero,
            RecurrenceCase::SecondDigitsNonzero,
        ] {
            suite.push((Identity::Recurrence(case), p(b, 3000)));
        }
    }
    for q in [2, 3, 5, 7, 11] {
        suite.push((Identity::Lucas, p(q, 600)));
        suite.push((Identity::Kummer, p(q, 600)));
    }
    for b in [2, 3, 5] {
        suite.push((Identity::Orthogonality, p(b, 500)));
    }
    for b in [2, 3, 4] {
        suite.push((Identity::InverseRelations, SweepParams { trials: 20, ..p(b, 300) }));
        suite.push((Identity::ConvolutionLift, SweepParams { trials: 20, ..p(b, 300) }));
        suite.push((Identity::Pochhammer, p(b, 500)));
    }
    suite.push((Identity::ChuVandermonde, p(2, 30)));
    suite.push((Identity::Base3Weighted, p(3, 2000)));
    suite
}
