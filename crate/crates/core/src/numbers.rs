use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Towers whose value would need more bits than this are reported as
/// [`Tower::TooLarge`].
pub const TOWER_MAX_BITS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tower {
    Exact(BigUint),
    /// The value has more than [`TOWER_MAX_BITS`] bits.
    TooLarge,
}

/// `t_1(x) = x`, `t_{i+1}(x) = 2^{t_i(x)}`.
pub fn tower(i: u32, x: u64) -> Result<Tower> {
    if i == 0 {
        return Err(Error::InvalidParams(
            "tower height must be at least 1".into(),
        ));
    }
    let mut value = BigUint::from(x);
    for _ in 1..i {
        // 2^value has value+1 bits.
        let exponent = match u64::try_from(&value) {
            Ok(e) if e < TOWER_MAX_BITS => e,
            _ => return Ok(Tower::TooLarge),
        };
        value = BigUint::from(1u8) << exponent;
    }
    Ok(Tower::Exact(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(i: u32, x: u64) -> BigUint {
        match tower(i, x).unwrap() {
            Tower::Exact(v) => v,
            Tower::TooLarge => panic!("too large"),
        }
    }

    #[test]
    fn small_towers() {
        assert_eq!(exact(1, 7), BigUint::from(7u32));
        assert_eq!(exact(2, 3), BigUint::from(8u32));
        assert_eq!(exact(3, 2), BigUint::from(16u32));
        assert_eq!(exact(4, 2), BigUint::from(65536u32));
        assert_eq!(exact(4, 3).bits(), 257);
        assert_eq!(exact(2, 0), BigUint::from(1u32));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(tower(5, 3).unwrap(), Tower::TooLarge);
        assert_eq!(tower(3, 100).unwrap(), Tower::TooLarge);
        assert!(tower(0, 3).is_err());
    }
}
