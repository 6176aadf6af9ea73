//! Classical ternary digits.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// A classical ternary digit: 0, 1, or 2. All arithmetic is modulo 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// All three digits in order.
    pub const ALL: [Trit; 3] = [Trit(0), Trit(1), Trit(2)];

    pub fn new(value: u8) -> Result<Trit> {
        if value < 3 {
            Ok(Trit(value))
        } else {
            Err(Error::BadTrit(value))
        }
    }

    /// Reduces an arbitrary integer modulo 3.
    pub fn from_mod3(value: u64) -> Trit {
        Trit((value % 3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Parses a digit string such as "2202" into trits.
    pub fn parse_digits(text: &str) -> Result<Vec<Trit>> {
        text.chars()
            .map(|c| {
                let d = c.to_digit(10).ok_or(Error::BadTrit(255))?;
                Trit::new(d as u8)
            })
            .collect()
    }
}

impl Add for Trit {
    type Output = Trit;

    fn add(self, rhs: Trit) -> Trit {
        Trit((self.0 + rhs.0) % 3)
    }
}

impl Mul for Trit {
    type Output = Trit;

    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Trit> for u8 {
    fn from(t: Trit) -> u8 {
        t.0
    }
}

impl From<Trit> for usize {
    fn from(t: Trit) -> usize {
        t.0 as usize
    }
}

/// Renders a digit tuple as a compact string, e.g. `[2,0]` -> "20".
pub fn digits_to_string(digits: &[Trit]) -> String {
    digits.iter().map(|d| char::from(b'0' + d.value())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_wraps_mod_3() {
        assert_eq!(Trit::TWO + Trit::TWO, Trit::ONE);
        assert_eq!(Trit::TWO + Trit::ONE, Trit::ZERO);
        assert_eq!(Trit::TWO * Trit::TWO, Trit::ONE);
        assert_eq!(Trit::from_mod3(7), Trit::ONE);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Trit::new(3).is_err());
        assert!(Trit::parse_digits("2x0").is_err());
        assert_eq!(
            Trit::parse_digits("2202").unwrap(),
            vec![Trit::TWO, Trit::TWO, Trit::ZERO, Trit::TWO]
        );
    }
}
