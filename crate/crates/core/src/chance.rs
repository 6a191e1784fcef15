//! Chance of an unrelated word order placing every word correctly:
//! `P = (1/n) (1/(n-1)) ... (1/2) = 1/n!`.

use std::fmt;

/// Largest `n` whose factorial fits in a `u64`.
pub const EXACT_LIMIT: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChanceProbability {
    pub n: u32,
    pub p: f64,
    /// `(1, n!)` for `n <= 20`.
    pub exact: Option<(u64, u64)>,
}

impl fmt::Display for ChanceProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6e}", self.p)?;
        if let Some((num, den)) = self.exact {
            write!(f, " ({num}/{den})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ChanceError {
    #[error("n must be at least 2, got {0}")]
    NTooSmall(u32),
    #[error("1/{0}! is below the smallest representable double; use log10_chance")]
    Underflow(u32),
}

pub fn chance_probability(n: u32) -> Result<ChanceProbability, ChanceError> {
    if n < 2 {
        return Err(ChanceError::NTooSmall(n));
    }
    let p = (2..=n).fold(1.0_f64, |acc, k| acc / f64::from(k));
    if p == 0.0 {
        return Err(ChanceError::Underflow(n));
    }
    let exact = (n <= EXACT_LIMIT).then(|| (1, (2..=u64::from(n)).product()));
    Ok(ChanceProbability { n, p, exact })
}

/// `log10(1/n!)`, usable far past the point where the probability itself
/// underflows.
pub fn log10_chance(n: u32) -> Result<f64, ChanceError> {
    if n < 2 {
        return Err(ChanceError::NTooSmall(n));
    }
    Ok(-(2..=n).map(|k| f64::from(k).log10()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(chance_probability(2).unwrap().p, 0.5);
        assert_eq!(chance_probability(4).unwrap().exact, Some((1, 24)));
        assert_eq!(chance_probability(1), Err(ChanceError::NTooSmall(1)));
        assert_eq!(chance_probability(0), Err(ChanceError::NTooSmall(0)));
    }

    #[test]
    fn ten_words() {
        let c = chance_probability(10).unwrap();
        assert_eq!(c.to_string(), "2.755732e-7 (1/3628800)");
        assert!(c.p > 2.7e-7 && c.p < 2.8e-7);
    }

    #[test]
    fn exact_stops_at_twenty() {
        assert_eq!(
            chance_probability(20).unwrap().exact,
            Some((1, 2_432_902_008_176_640_000))
        );
        assert_eq!(chance_probability(21).unwrap().exact, None);
    }

    #[test]
    fn large_n_underflows_but_log_does_not() {
        assert!(chance_probability(170).is_ok());
        assert_eq!(chance_probability(200), Err(ChanceError::Underflow(200)));
        let l = log10_chance(200).unwrap();
        assert!((-375.0..-374.0).contains(&l), "{l}");
    }

    #[test]
    fn log_agrees_with_value() {
        for n in 2..=30 {
            let p = chance_probability(n).unwrap().p;
            assert!((p.log10() - log10_chance(n).unwrap()).abs() < 1e-9);
        }
    }
}
