//! b-ary Pascal triangles `T_m`, built either directly from the coefficient
//! formula or by repeated tensor composition of the first `b` rows, plus
//! mod-p reduction and text/CSV/PBM renderers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::coefficients::BaryBinomials;
use crate::digits::check_base;
use crate::error::{Error, Result};

/// Row-count guard for dense triangles.
pub const MAX_ROWS: u128 = 1 << 20;

/// Dense triangular array: `rows[n]` holds `n + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    base: u64,
    levels: u32,
    rows: Vec<Vec<BigInt>>,
}

fn row_count(b: u64, m: u32) -> Result<u64> {
    check_base(b)?;
    if m == 0 {
        return Err(Error::InvalidLevels);
    }
    let rows = u128::from(b)
        .checked_pow(m)
        .filter(|&r| r <= MAX_ROWS)
        .ok_or(Error::TooLarge {
            rows: u128::from(b).saturating_pow(m),
            limit: MAX_ROWS,
        })?;
    Ok(rows as u64)
}

impl Triangle {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(n, k)`, zero outside the triangle (`k > n`).
    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_default()
    }

    fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n).and_then(|row| row.get(k))
    }
}

/// `T_m` for base `b`: rows `0..b^m` with `rows[n][k] = C_b(n, k)`.
pub fn build_direct(b: u64, m: u32) -> Result<Triangle> {
    let rows = row_count(b, m)?;
    let coeffs = BaryBinomials::new(b)?;
    Ok(Triangle {
        base: b,
        levels: m,
        rows: (0..rows).map(|n| coeffs.row(n)).collect(),
    })
}

/// Block composition `low ⊗ high`: with `R` the row count of `low`,
/// entry `(n, k)` is `high(n / R, k / R) * low(n mod R, k mod R)`, where
/// `low` entries above its diagonal are the zero fillers.
pub fn tensor_compose(low: &Triangle, high: &Triangle) -> Result<Triangle> {
    if low.base != high.base {
        return Err(Error::BaseMismatch(low.base, high.base));
    }
    let r = low.rows.len();
    let total = r as u128 * high.rows.len() as u128;
    if total > MAX_ROWS {
        return Err(Error::TooLarge {
            rows: total,
            limit: MAX_ROWS,
        });
    }
    let zero = BigInt::zero();
    let rows = (0..total as usize)
        .map(|n| {
            let (i, n_low) = n.div_rem(&r);
            (0..=n)
                .map(|k| {
                    let (j, k_low) = k.div_rem(&r);
                    let block = high.get(i, j).unwrap_or(&zero);
                    match low.get(n_low, k_low) {
                        Some(v) if !block.is_zero() => block * v,
                        _ => BigInt::zero(),
                    }
                })
                .collect()
        })
        .collect();
    Ok(Triangle {
        base: low.base,
        levels: low.levels + high.levels,
        rows,
    })
}

/// `T_1^{⊗m}`: `m - 1` compositions starting from the first `b` rows.
pub fn build_tensor(b: u64, m: u32) -> Result<Triangle> {
    row_count(b, m)?;
    let first = build_direct(b, 1)?;
    let mut acc = first.clone();
    for _ in 1..m {
        acc = tensor_compose(&acc, &first)?;
    }
    Ok(acc)
}

/// Reduces every entry into `[0, p - 1]`.
pub fn reduce_mod(t: &Triangle, p: u64) -> Result<Triangle> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    let p = BigInt::from(p);
    Ok(Triangle {
        base: t.base,
        levels: t.levels,
        rows: t
            .rows
            .iter()
            .map(|row| row.iter().map(|v| v.mod_floor(&p)).collect())
            .collect(),
    })
}

/// Centered pyramid. Zeros print as `.`; entries are right-aligned in a cell
/// as wide as the widest entry and separated by two spaces.
pub fn render_text(t: &Triangle) -> String {
    let cell = |v: &BigInt| {
        if v.is_zero() {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let width = t
        .rows
        .iter()
        .flatten()
        .map(|v| cell(v).len())
        .max()
        .unwrap_or(1);
    let line_width = |entries: usize| entries * width + entries.saturating_sub(1) * 2;
    let full = line_width(t.rows.len());
    let mut out = String::new();
    for row in &t.rows {
        let pad = (full - line_width(row.len())) / 2;
        out.push_str(&" ".repeat(pad));
        let cells: Vec<String> = row.iter().map(|v| format!("{:>width$}", cell(v))).collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

/// One row per line, comma-separated decimal values.
pub fn render_csv(t: &Triangle) -> String {
    let mut out = String::new();
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Plain (P1) bitmap with one pixel per cell of the square `R x R` grid,
/// triangle left-aligned; a pixel is 1 iff the entry is nonzero mod `p`.
/// Pixels on a row are separated by single spaces.
pub fn render_pbm(t: &Triangle, p: u64) -> Result<Vec<u8>> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    let modulus = BigInt::from(p);
    Ok(pbm(t, |v| !v.mod_floor(&modulus).is_zero()))
}

/// As [`render_pbm`], marking every nonzero entry.
pub fn render_pbm_nonzero(t: &Triangle) -> Vec<u8> {
    pbm(t, |v| !v.is_zero())
}

fn pbm(t: &Triangle, set: impl Fn(&BigInt) -> bool) -> Vec<u8> {
    let size = t.rows.len();
    let mut out = format!("P1\n{size} {size}\n");
    for row in &t.rows {
        let bits: Vec<&str> = (0..size)
            .map(|k| match row.get(k) {
                Some(v) if set(v) => "1",
                _ => "0",
            })
            .collect();
        out.push_str(&bits.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::classical_binom;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn first_level_is_pascal() {
        let t = build_direct(3, 1).unwrap();
        assert_eq!(t.rows(), &[ints(&[1]), ints(&[1, 1]), ints(&[1, 2, 1])]);
        assert_eq!(render_csv(&t), "1\n1,1\n1,2,1\n");
    }

    #[test]
    fn printed_bottom_rows() {
        let t = build_direct(3, 2).unwrap();
        assert_eq!(t.row_count(), 9);
        assert_eq!(t.rows()[8], ints(&[1, 2, 1, 2, 4, 2, 1, 2, 1]));
        let t = build_direct(4, 2).unwrap();
        assert_eq!(t.row_count(), 16);
        assert_eq!(
            t.rows()[15],
            ints(&[1, 3, 3, 1, 3, 9, 9, 3, 3, 9, 9, 3, 1, 3, 3, 1])
        );
        assert_eq!(build_tensor(3, 2).unwrap().rows()[8], ints(&[1, 2, 1, 2, 4, 2, 1, 2, 1]));
    }

    #[test]
    fn guards() {
        assert_eq!(build_direct(3, 0), Err(Error::InvalidLevels));
        assert_eq!(build_direct(1, 2), Err(Error::InvalidBase(1)));
        assert!(matches!(build_direct(2, 21), Err(Error::TooLarge { .. })));
        assert!(matches!(build_tensor(1024, 3), Err(Error::TooLarge { .. })));
        let a = build_direct(2, 1).unwrap();
        let b = build_direct(3, 1).unwrap();
        assert_eq!(tensor_compose(&a, &b), Err(Error::BaseMismatch(2, 3)));
        assert_eq!(reduce_mod(&a, 1), Err(Error::InvalidModulus(1)));
        assert_eq!(render_pbm(&a, 0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn tensor_matches_direct() {
        for (b, m) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 2), (7, 2)] {
            assert_eq!(build_tensor(b, m).unwrap(), build_direct(b, m).unwrap(), "b={b} m={m}");
        }
    }

    #[test]
    fn tensor_is_associative() {
        for b in [2, 3] {
            let t1 = build_direct(b, 1).unwrap();
            let t2 = tensor_compose(&t1, &t1).unwrap();
            let left = tensor_compose(&t2, &t1).unwrap();
            let right = tensor_compose(&t1, &t2).unwrap();
            assert_eq!(left, right);
            assert_eq!(left, build_direct(b, 3).unwrap());
            // Mixed levels.
            let t3 = build_direct(b, 2).unwrap();
            assert_eq!(tensor_compose(&t3, &t2).unwrap(), build_direct(b, 4).unwrap());
        }
    }

    #[test]
    fn reduce_examples() {
        let t = reduce_mod(&build_direct(2, 3).unwrap(), 2).unwrap();
        for n in 0..8u64 {
            for k in 0..=n {
                let parity = classical_binom(n, k as i64) % 2u64;
                assert_eq!(t.entry(n as usize, k as usize), parity);
            }
        }
        let t = build_direct(3, 2).unwrap();
        assert_eq!(reduce_mod(&t, 5).unwrap(), t);
        assert_eq!(reduce_mod(&t, 3).unwrap().entry(8, 4), BigInt::from(1));
        assert_eq!(t.entry(2, 5), BigInt::from(0));
    }

    #[test]
    fn text_rendering() {
        let t = build_direct(3, 2).unwrap();
        let text = render_text(&t);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 9);
        let normalized: Vec<String> = lines
            .iter()
            .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
            .collect();
        assert_eq!(normalized[6], "1 . . 2 . . 1");
        assert_eq!(normalized[0], "1");
        assert_eq!(lines[8], "1  2  1  2  4  2  1  2  1");
        assert_eq!(lines[0].len(), 13);
        // Wide entries are right-aligned.
        let t = build_direct(13, 1).unwrap();
        let last = render_text(&t).lines().last().unwrap().to_string();
        assert!(last.starts_with("  1   12   66  220"));
    }

    #[test]
    fn pbm_small() {
        let t = build_direct(2, 1).unwrap();
        assert_eq!(
            String::from_utf8(render_pbm(&t, 2).unwrap()).unwrap(),
            "P1\n2 2\n1 0\n1 1\n"
        );
        let t = build_direct(3, 1).unwrap();
        assert_eq!(
            String::from_utf8(render_pbm(&t, 2).unwrap()).unwrap(),
            "P1\n3 3\n1 0 0\n1 1 0\n1 0 1\n"
        );
    }
}
