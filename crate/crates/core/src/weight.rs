//! Scalar abstraction for edge lengths and path distances.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Bounded, Num, NumCast, ToPrimitive};

/// Numeric type usable as an edge length.
///
/// All algorithms in this crate only add and compare weights, so any ordered
/// numeric type works: `f64` and `f32` for real lengths, and unsigned integers
/// when exact arithmetic is wanted (e.g. to construct tie-heavy fixtures).
/// `Display` must round-trip through `FromStr`, which holds for the primitive
/// types: Rust prints floats with the shortest representation that parses back
/// bit-exactly.
pub trait Weight:
    Num
    + NumCast
    + ToPrimitive
    + Bounded
    + Copy
    + PartialOrd
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
{
    /// Lossy view used by tolerance checks and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Whether this is a usable edge length (finite and strictly positive).
    fn is_valid_length(self) -> bool {
        let x = self.as_f64();
        x.is_finite() && self > Self::zero()
    }
}

impl<T> Weight for T where
    T: Num
        + NumCast
        + ToPrimitive
        + Bounded
        + Copy
        + PartialOrd
        + Debug
        + Display
        + FromStr
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positivity() {
        assert!(0.1f64.is_valid_length());
        assert!(!0.0f64.is_valid_length());
        assert!(!(-1.0f32).is_valid_length());
        assert!(!f64::NAN.is_valid_length());
        assert!(!f64::INFINITY.is_valid_length());
        assert!(3u32.is_valid_length());
        assert!(!0u64.is_valid_length());
    }
}
