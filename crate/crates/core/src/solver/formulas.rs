use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Lower bounds on χ_sp and χ_s for the class of `K_n`-minor-free graphs:
/// `(2^{n+1} - 5)/3` and `(2^n - 1)/3` for even `n`, `(2^{n+1} - 4)/3` and
/// `(2^n - 2)/3` for odd `n`.
pub fn kn_lower_bound_formulas(n: usize) -> Result<(BigUint, BigUint)> {
    if n < 2 {
        return Err(Error::Precondition { what: "kn_lower_bound_formulas", requirement: format!("n >= 2, got {n}") });
    }
    let pow = |e: usize| BigUint::from(1u8) << e;
    let three = BigUint::from(3u8);
    let (a, b) = if n % 2 == 0 { (5u8, 1u8) } else { (4, 2) };
    Ok(((pow(n + 1) - a) / &three, (pow(n) - b) / three))
}

/// Bounds on χ_s for connected signed graphs of maximum degree Δ.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeBounds {
    /// `2^{Δ/2 - 1}` as a real number.
    pub lower: f64,
    /// `floor(2^{Δ/2 - 1})`, exact.
    pub lower_floor: BigUint,
    /// `(Δ - 3)(Δ - 1) 2^{Δ - 1} + 2`.
    pub upper: BigUint,
}

pub const DEGREE_BOUND_MIN_DELTA: usize = 29;

pub fn max_degree_bound_formulas(delta: usize) -> Result<DegreeBounds> {
    if delta < DEGREE_BOUND_MIN_DELTA {
        return Err(Error::Precondition {
            what: "max_degree_bound_formulas",
            requirement: format!("delta >= {DEGREE_BOUND_MIN_DELTA} (outside the theorem's validity), got {delta}"),
        });
    }
    let lower = 2f64.powf(delta as f64 / 2.0 - 1.0);
    // floor(2^{Δ/2-1}) = floor(sqrt(2^{Δ-2}))
    let lower_floor = (BigUint::from(1u8) << (delta - 2)).sqrt();
    let upper = BigUint::from((delta - 3) * (delta - 1)) * (BigUint::from(1u8) << (delta - 1)) + 2u8;
    Ok(DegreeBounds { lower, lower_floor, upper })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(n: usize) -> (u64, u64) {
        let (a, b) = kn_lower_bound_formulas(n).unwrap();
        (a.try_into().unwrap(), b.try_into().unwrap())
    }

    #[test]
    fn small_cliques() {
        assert_eq!(pair(2), (1, 1));
        assert_eq!(pair(3), (4, 2));
        assert_eq!(pair(4), (9, 5));
        assert_eq!(pair(5), (20, 10));
        assert_eq!(pair(6), (41, 21));
        assert!(kn_lower_bound_formulas(1).is_err());
    }

    #[test]
    fn degree_bounds() {
        let b = max_degree_bound_formulas(30).unwrap();
        assert_eq!(b.lower, 16384.0);
        assert_eq!(b.lower_floor, BigUint::from(16384u32));
        assert_eq!(b.upper, BigUint::from(27u64 * 29 * (1 << 29) + 2));
        let b = max_degree_bound_formulas(29).unwrap();
        assert!((b.lower - 2f64.powf(13.5)).abs() < 1e-9);
        assert_eq!(b.lower_floor, BigUint::from(11585u32));
        assert_eq!(b.upper, BigUint::from(26u64 * 28 * (1 << 28) + 2));
        assert!(max_degree_bound_formulas(28).is_err());
    }
}
