//! Exact b-ary binomial and multinomial coefficients, classical binomials and
//! p-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::digits::{check_base, expand};
use crate::error::{Error, Result};

/// Classical binomial coefficient `C(m, j)`; zero when `j < 0` or `j > m`.
pub fn classical_binom(m: u64, j: i64) -> BigInt {
    if j < 0 || j as u64 > m {
        return BigInt::zero();
    }
    let j = (j as u64).min(m - j as u64);
    let mut acc = BigInt::one();
    for i in 0..j {
        // acc = C(m, i) here, so the division is exact.
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of the classical Pascal triangle.
pub fn classical_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for i in 0..n {
        acc *= n - i;
        acc /= i + 1;
        row.push(acc.clone());
    }
    row
}

/// One digit position of a b-ary binomial coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitFactor {
    pub n_digit: u32,
    pub k_digit: u32,
    pub value: BigInt,
}

/// A b-ary binomial coefficient together with its per-digit factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaryBinomial {
    pub n: u64,
    pub k: u64,
    pub base: u64,
    pub value: BigInt,
    /// One factor per position `l = 0..N`, least significant first.
    pub digit_factors: Vec<DigitFactor>,
}

impl BaryBinomial {
    /// `(n_l choose k_l)` factors joined by `·`, most significant first.
    pub fn factorization(&self) -> String {
        self.digit_factors
            .iter()
            .rev()
            .map(|f| format!("({} choose {})", f.n_digit, f.k_digit))
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// The b-ary binomial coefficient `prod_l C(n_l, k_l)`, with both expansions
/// zero-padded to `N = max(N_n, N_k)` digits. `k > n` is allowed and gives 0.
pub fn bary_binom(n: u64, k: u64, b: u64) -> Result<BaryBinomial> {
    let en = expand(n, b)?;
    let ek = expand(k, b)?;
    let len = en.len().max(ek.len());
    let digit_factors: Vec<DigitFactor> = en
        .padded(len)
        .into_iter()
        .zip(ek.padded(len))
        .map(|(nd, kd)| DigitFactor {
            n_digit: nd,
            k_digit: kd,
            value: classical_binom(u64::from(nd), i64::from(kd)),
        })
        .collect();
    let value = digit_factors
        .iter()
        .fold(BigInt::one(), |acc, f| acc * &f.value);
    Ok(BaryBinomial {
        n,
        k,
        base: b,
        value,
        digit_factors,
    })
}

/// Fast evaluator for `C_b(n, k)` used by the sweeps.
///
/// Digit binomials for bases up to 64 are tabulated (they fit in `u64`);
/// larger bases fall back to [`classical_binom`].
#[derive(Debug, Clone)]
pub struct BaryBinomials {
    base: u64,
    table: Vec<Vec<u64>>,
}

const TABLE_LIMIT: u64 = 64;

impl BaryBinomials {
    pub fn new(base: u64) -> Result<Self> {
        check_base(base)?;
        let mut table: Vec<Vec<u64>> = Vec::new();
        if base <= TABLE_LIMIT {
            for m in 0..base as usize {
                let mut row = vec![1u64; m + 1];
                for j in 1..m {
                    row[j] = table[m - 1][j - 1] + table[m - 1][j];
                }
                table.push(row);
            }
        }
        Ok(BaryBinomials { base, table })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// `C_b(n, k)`; zero whenever some digit of `k` exceeds that of `n`.
    pub fn value(&self, mut n: u64, mut k: u64) -> BigInt {
        let b = self.base;
        let mut small: u128 = 1;
        let mut big: Option<BigInt> = None;
        while k > 0 {
            let (nd, kd) = (n % b, k % b);
            if kd > nd {
                return BigInt::zero();
            }
            if self.table.is_empty() {
                let f = classical_binom(nd, kd as i64);
                big = Some(big.unwrap_or_else(|| BigInt::from(small)) * f);
            } else {
                let f = u128::from(self.table[nd as usize][kd as usize]);
                match (&mut big, small.checked_mul(f)) {
                    (None, Some(v)) => small = v,
                    (None, None) => big = Some(BigInt::from(small) * f),
                    (Some(acc), _) => *acc *= f,
                }
            }
            n /= b;
            k /= b;
        }
        big.unwrap_or_else(|| BigInt::from(small))
    }

    /// Digit binomial `C(nd, kd)` for digits of this base.
    pub fn digit(&self, nd: u32, kd: u32) -> BigInt {
        if kd > nd {
            BigInt::zero()
        } else if self.table.is_empty() {
            classical_binom(u64::from(nd), i64::from(kd))
        } else {
            BigInt::from(self.table[nd as usize][kd as usize])
        }
    }

    /// Row `n`: `[C_b(n, 0), ..., C_b(n, n)]`.
    pub fn row(&self, n: u64) -> Vec<BigInt> {
        (0..=n).map(|k| self.value(n, k)).collect()
    }
}

/// Classical multinomial `m! / (j_1! ... j_r!)`, or zero when the parts do
/// not sum to `m`.
fn digit_multinomial(m: u32, parts: &[u32]) -> BigInt {
    if parts.iter().map(|&p| u64::from(p)).sum::<u64>() != u64::from(m) {
        return BigInt::zero();
    }
    let fact = |x: u32| (1..=u64::from(x)).fold(BigInt::one(), |acc, i| acc * i);
    let denom = parts.iter().fold(BigInt::one(), |acc, &p| acc * fact(p));
    let (q, r) = fact(m).div_rem(&denom);
    debug_assert!(r.is_zero());
    q
}

/// The b-ary multinomial coefficient `prod_l multinomial(n_l; (k_1)_l, ..., (k_m)_l)`.
///
/// Returns 0 when the parts do not sum to `n`.
pub fn bary_multinomial(n: u64, parts: &[u64], b: u64) -> Result<BigInt> {
    check_base(b)?;
    if parts.is_empty() {
        return Err(Error::EmptyParts);
    }
    let total = parts
        .iter()
        .try_fold(0u64, |acc, &p| acc.checked_add(p));
    if total != Some(n) {
        return Ok(BigInt::zero());
    }
    let en = expand(n, b)?;
    let eparts = parts
        .iter()
        .map(|&p| expand(p, b))
        .collect::<Result<Vec<_>>>()?;
    let len = eparts.iter().map(|e| e.len()).fold(en.len(), usize::max);
    let mut acc = BigInt::one();
    let mut column = Vec::with_capacity(parts.len());
    for l in 0..len {
        column.clear();
        column.extend(eparts.iter().map(|e| e.digit(l)));
        let f = digit_multinomial(en.digit(l), &column);
        if f.is_zero() {
            return Ok(f);
        }
        acc *= f;
    }
    Ok(acc)
}

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Inputs up to this bound are checked for primality before use.
const PRIMALITY_GUARD: u64 = 1 << 40;

/// The `p`-adic valuation of a positive integer: the largest `e` with `p^e | x`.
pub fn valuation(x: &BigInt, p: u64) -> Result<u64> {
    if p < 2 || (p <= PRIMALITY_GUARD && !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    if x.sign() != num_bigint::Sign::Plus {
        return Err(Error::NonPositiveValuation(x.to_string()));
    }
    let p = BigInt::from(p);
    let mut rest = x.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}
