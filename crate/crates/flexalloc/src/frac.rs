//! Exact rational parameters (epsilon, beta) and the few products the
//! algorithms need from them. Everything stays in integer arithmetic; no
//! floating point is involved in any decision.

use num_rational::Ratio;

/// A non-negative parameter fraction, kept reduced by `Ratio`.
pub type Frac = Ratio<u64>;

/// Parses "p/q" or a bare integer "p".
pub fn parse_frac(text: &str) -> Result<Frac, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: u64 = num.parse().map_err(|_| format!("bad numerator in '{text}'"))?;
    let d: u64 = den.parse().map_err(|_| format!("bad denominator in '{text}'"))?;
    if d == 0 {
        return Err(format!("zero denominator in '{text}'"));
    }
    Ok(Frac::new(n, d))
}

/// True when `0 < f < 1`.
pub fn strictly_between_zero_and_one(f: Frac) -> bool {
    *f.numer() > 0 && f.numer() < f.denom()
}

/// `floor(f * w)` without overflow for any u64 inputs.
pub fn floor_mul(f: Frac, w: u64) -> u64 {
    ((*f.numer() as u128 * w as u128) / *f.denom() as u128) as u64
}

/// `ceil(f * w)`.
pub fn ceil_mul(f: Frac, w: u64) -> u64 {
    let num = *f.numer() as u128 * w as u128;
    let den = *f.denom() as u128;
    num.div_ceil(den) as u64
}

/// `floor(f^2 * w)`, used for grid sizes.
pub fn floor_mul_sq(f: Frac, w: u64) -> u64 {
    let num = *f.numer() as u128 * *f.numer() as u128 * w as u128;
    let den = *f.denom() as u128 * *f.denom() as u128;
    (num / den) as u64
}

/// `k <= 1/f`, i.e. `k * num <= den`.
pub fn le_inverse(k: u64, f: Frac) -> bool {
    (k as u128) * (*f.numer() as u128) <= *f.denom() as u128
}

/// `value >= f * w`, i.e. `value * den >= num * w`.
pub fn ge_mul(value: u64, f: Frac, w: u64) -> bool {
    (value as u128) * (*f.denom() as u128) >= (*f.numer() as u128) * (w as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_frac("1/4").unwrap(), Frac::new(1, 4));
        assert_eq!(parse_frac("2/8").unwrap(), Frac::new(1, 4));
        assert_eq!(parse_frac("3").unwrap(), Frac::new(3, 1));
        assert!(parse_frac("1/0").is_err());
        assert!(parse_frac("x/2").is_err());
    }

    #[test]
    fn rounded_products() {
        let third = Frac::new(1, 3);
        assert_eq!(floor_mul(third, 10), 3);
        assert_eq!(ceil_mul(third, 10), 4);
        assert_eq!(floor_mul(third, 9), 3);
        assert_eq!(ceil_mul(third, 9), 3);
        assert_eq!(floor_mul_sq(Frac::new(1, 4), 16), 1);
        assert_eq!(floor_mul_sq(Frac::new(1, 4), 33), 2);
    }

    #[test]
    fn comparisons() {
        let half = Frac::new(1, 2);
        assert!(le_inverse(2, half));
        assert!(!le_inverse(3, half));
        assert!(ge_mul(5, half, 10));
        assert!(ge_mul(6, half, 10));
        assert!(!ge_mul(4, half, 10));
        assert!(strictly_between_zero_and_one(half));
        assert!(!strictly_between_zero_and_one(Frac::new(0, 1)));
        assert!(!strictly_between_zero_and_one(Frac::new(1, 1)));
        assert!(!strictly_between_zero_and_one(Frac::new(5, 4)));
    }
}
