//! Base-b positional arithmetic: expansions, digit sums, digit counts and
//! carry analysis.
//!
//! Digits are stored little-endian throughout, so `digits[l]` is the
//! coefficient of `b^l`.

use crate::error::{Error, Result};

/// Largest base accepted anywhere in the crate.
pub const MAX_BASE: u64 = 65536;

pub(crate) fn check_base(base: u64) -> Result<()> {
    if (2..=MAX_BASE).contains(&base) {
        Ok(())
    } else {
        Err(Error::InvalidBase(base))
    }
}

/// Little-endian base-b digit vector of a nonnegative integer.
///
/// The expansion is canonical: it has no high-order zero digits, except for
/// zero itself which is the single digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitExpansion {
    base: u64,
    digits: Vec<u32>,
    value: u64,
}

impl DigitExpansion {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of digits `N` in the canonical expansion.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `l`, zero beyond the canonical length.
    pub fn digit(&self, l: usize) -> u32 {
        self.digits.get(l).copied().unwrap_or(0)
    }

    /// Digits padded with high-order zeros to `len` positions.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut out = self.digits.clone();
        if out.len() < len {
            out.resize(len, 0);
        }
        out
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }

    /// Number of positions holding the digit `d`.
    pub fn count(&self, d: u32) -> u64 {
        self.digits.iter().filter(|&&x| x == d).count() as u64
    }

    /// Re-evaluates `sum_l digits[l] * base^l`; wide enough for any `u64` input.
    pub fn evaluate(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * u128::from(self.base) + u128::from(d))
    }

    /// Most-significant-first rendering, space separated.
    pub fn to_msf_string(&self) -> String {
        self.digits
            .iter()
            .rev()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Expands `n` in base `b`.
pub fn expand(n: u64, b: u64) -> Result<DigitExpansion> {
    check_base(b)?;
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push((rest % b) as u32);
        rest /= b;
    }
    if digits.is_empty() {
        digits.push(0);
    }
    Ok(DigitExpansion {
        base: b,
        digits,
        value: n,
    })
}

/// The digit sum `S_b(n)`.
pub fn digit_sum(n: u64, b: u64) -> Result<u64> {
    check_base(b)?;
    Ok(digit_sum_unchecked(n, b))
}

pub(crate) fn digit_sum_unchecked(mut n: u64, b: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % b;
        n /= b;
    }
    s
}

/// The number of digits of `n` equal to `d`, counted over the canonical
/// expansion (so `digit_count(0, b, 0) == 1`).
pub fn digit_count(n: u64, b: u64, d: u64) -> Result<u64> {
    check_base(b)?;
    if d >= b {
        return Err(Error::DigitOutOfRange { digit: d, base: b });
    }
    Ok(expand(n, b)?.count(d as u32))
}

/// Number of carries produced by schoolbook addition of `a` and `c` in base `b`.
pub fn carry_count(a: u64, c: u64, b: u64) -> Result<u64> {
    check_base(b)?;
    Ok(carry_count_unchecked(a, c, b))
}

pub(crate) fn carry_count_unchecked(mut a: u64, mut c: u64, b: u64) -> u64 {
    let mut carry = 0;
    let mut carries = 0;
    while a > 0 || c > 0 || carry > 0 {
        let column = a % b + c % b + carry;
        carry = u64::from(column >= b);
        carries += carry;
        a /= b;
        c /= b;
    }
    carries
}

/// Whether adding `k` and `n - k` in base `b` is carry-free, i.e. every
/// digit of `k` is at most the matching digit of `n`.
pub fn is_carry_free(k: u64, n: u64, b: u64) -> Result<bool> {
    check_base(b)?;
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    Ok(digits_dominated(k, n, b))
}

/// `k_l <= n_l` at every position.
pub(crate) fn digits_dominated(mut k: u64, mut n: u64, b: u64) -> bool {
    while k > 0 {
        if k % b > n % b {
            return false;
        }
        k /= b;
        n /= b;
    }
    true
}

/// All `k` in `0..=n` for which `(k, n - k)` is carry-free, ascending.
///
/// The list has `prod_l (n_l + 1)` entries.
pub fn carry_free_partners(n: u64, b: u64) -> Result<Vec<u64>> {
    let exp = expand(n, b)?;
    let mut places = Vec::with_capacity(exp.len());
    let mut place = 1u64;
    for (l, _) in exp.digits().iter().enumerate() {
        places.push(place);
        if l + 1 < exp.len() {
            place *= b;
        }
    }
    let total: usize = exp.digits().iter().map(|&d| d as usize + 1).product();
    let mut out = Vec::with_capacity(total);
    // Mixed-radix counter over the digit boxes, lowest digit fastest, which
    // visits the partners in increasing order.
    let mut counter = vec![0u32; exp.len()];
    let mut k = 0u64;
    loop {
        out.push(k);
        let mut l = 0;
        loop {
            if l == counter.len() {
                return Ok(out);
            }
            if counter[l] < exp.digit(l) {
                counter[l] += 1;
                k += places[l];
                break;
            }
            k -= u64::from(counter[l]) * places[l];
            counter[l] = 0;
            l += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schoolbook_carries(a: u64, c: u64, b: u64) -> u64 {
        // Pad both operands to a common length and add column by column.
        let da = expand(a, b).unwrap();
        let dc = expand(c, b).unwrap();
        let len = da.len().max(dc.len());
        let (pa, pc) = (da.padded(len), dc.padded(len));
        let mut carry = 0;
        let mut count = 0;
        for l in 0..len {
            let col = u64::from(pa[l]) + u64::from(pc[l]) + carry;
            carry = col / b;
            count += carry;
        }
        count
    }

    #[test]
    fn expand_examples() {
        let e = expand(8, 3).unwrap();
        assert_eq!(e.digits(), &[2, 2]);
        assert_eq!(e.evaluate(), 8);
        assert_eq!(expand(0, 7).unwrap().digits(), &[0]);
        let e = expand(15, 4).unwrap();
        assert_eq!(e.digits(), &[3, 3]);
        assert_eq!(e.evaluate(), 15);
        assert_eq!(e.to_msf_string(), "3 3");
        assert_eq!(expand(u64::MAX, 2).unwrap().len(), 64);
        assert_eq!(expand(u64::MAX, 65536).unwrap().evaluate(), u128::from(u64::MAX));
    }

    #[test]
    fn invalid_bases() {
        assert_eq!(expand(3, 1), Err(Error::InvalidBase(1)));
        assert_eq!(expand(3, 0), Err(Error::InvalidBase(0)));
        assert_eq!(digit_sum(3, 65537), Err(Error::InvalidBase(65537)));
        assert!(carry_count(1, 1, 1).is_err());
        assert!(carry_free_partners(1, 1).is_err());
    }

    #[test]
    fn digit_sum_examples() {
        for b in 2..20 {
            assert_eq!(digit_sum(0, b).unwrap(), 0);
            for n in 0..b {
                assert_eq!(digit_sum(n, b).unwrap(), n);
            }
        }
        assert_eq!(digit_sum(8, 3).unwrap(), 4);
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(digit_count(8, 3, 2).unwrap(), 2);
        assert_eq!(digit_count(8, 3, 1).unwrap(), 0);
        assert_eq!(digit_count(0, 5, 0).unwrap(), 1);
        assert_eq!(digit_count(9, 3, 0).unwrap(), 2);
        assert_eq!(
            digit_count(8, 3, 3),
            Err(Error::DigitOutOfRange { digit: 3, base: 3 })
        );
    }

    #[test]
    fn carry_count_examples() {
        for b in 2..6 {
            for a in 0..50 {
                assert_eq!(carry_count(a, 0, b).unwrap(), 0);
            }
        }
        assert_eq!(schoolbook_carries(1, 1, 2), 1);
        assert_eq!(carry_count(1, 1, 2).unwrap(), 1);
        // 4 = 11 in base 3; 11 + 11 = 22 with no carries.
        assert_eq!(schoolbook_carries(4, 4, 3), 0);
        assert_eq!(carry_count(4, 4, 3).unwrap(), 0);
        assert_eq!(carry_count(u64::MAX, 1, 2).unwrap(), 64);
    }

    #[test]
    fn carry_count_matches_schoolbook() {
        for b in [2, 3, 4, 7, 10] {
            for a in 0..120 {
                for c in 0..120 {
                    assert_eq!(carry_count(a, c, b).unwrap(), schoolbook_carries(a, c, b));
                }
            }
        }
    }

    #[test]
    fn carry_free_examples() {
        for n in 0..30 {
            assert!(is_carry_free(0, n, 3).unwrap());
        }
        assert!(!is_carry_free(1, 2, 2).unwrap());
        assert!(is_carry_free(4, 8, 3).unwrap());
        assert_eq!(is_carry_free(5, 4, 3), Err(Error::KExceedsN { k: 5, n: 4 }));
    }

    #[test]
    fn partner_examples() {
        for b in 2..8 {
            assert_eq!(carry_free_partners(0, b).unwrap(), vec![0]);
        }
        assert_eq!(carry_free_partners(6, 3).unwrap(), vec![0, 3, 6]);
        for n in 0..300u64 {
            let brute: Vec<u64> = (0..=n).filter(|&k| (k & !n) == 0).collect();
            let partners = carry_free_partners(n, 2).unwrap();
            assert_eq!(partners, brute);
            assert_eq!(partners.len() as u64, 1 << n.count_ones());
        }
    }

    #[test]
    fn carry_free_three_way() {
        for b in [2, 3, 4, 5, 10] {
            for n in 0..=5000u64 {
                let en = expand(n, b).unwrap();
                let sn = en.digit_sum();
                for k in 0..=n {
                    let ek = expand(k, b).unwrap();
                    let positional = (0..en.len().max(ek.len())).all(|l| ek.digit(l) <= en.digit(l));
                    let carries = carry_count(k, n - k, b).unwrap() == 0;
                    let sums = digit_sum(k, b).unwrap() + digit_sum(n - k, b).unwrap() == sn;
                    assert_eq!(positional, carries, "b={b} n={n} k={k}");
                    assert_eq!(positional, sums, "b={b} n={n} k={k}");
                    assert_eq!(positional, is_carry_free(k, n, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn partners_length_is_digit_box_volume() {
        for b in [3, 4, 5, 10] {
            for n in 0..2000u64 {
                let e = expand(n, b).unwrap();
                let p = carry_free_partners(n, b).unwrap();
                let vol: usize = e.digits().iter().map(|&d| d as usize + 1).product();
                assert_eq!(p.len(), vol);
                assert!(p.windows(2).all(|w| w[0] < w[1]));
                assert!(p.iter().all(|&k| is_carry_free(k, n, b).unwrap()));
            }
        }
    }
}
