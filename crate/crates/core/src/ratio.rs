//! A minimal exact rational on `i64`, implementing only the operations the
//! solution families need. Always stored in lowest terms with a positive
//! denominator; every operation uses checked arithmetic.

use crate::arith::gcd;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    numer: i64,
    denom: i64,
}

impl Ratio {
    /// Build `numer/denom` in lowest terms. Fails on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Ratio> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(numer, denom);
        let (mut n, mut d) = (numer / g, denom / g);
        if d < 0 {
            n = n.checked_neg().ok_or(Error::overflow("ratio sign"))?;
            d = d.checked_neg().ok_or(Error::overflow("ratio sign"))?;
        }
        Ok(Ratio { numer: n, denom: d })
    }

    pub const fn from_int(n: i64) -> Ratio {
        Ratio { numer: n, denom: 1 }
    }

    pub fn numer(self) -> i64 {
        self.numer
    }

    pub fn denom(self) -> i64 {
        self.denom
    }

    pub fn is_zero(self) -> bool {
        self.numer == 0
    }

    pub fn is_integer(self) -> bool {
        self.denom == 1
    }

    pub fn to_integer(self) -> Option<i64> {
        (self.denom == 1).then_some(self.numer)
    }

    pub fn checked_add(self, other: Ratio) -> Result<Ratio> {
        let op = "ratio addition";
        let lhs = self
            .numer
            .checked_mul(other.denom)
            .ok_or(Error::overflow(op))?;
        let rhs = other
            .numer
            .checked_mul(self.denom)
            .ok_or(Error::overflow(op))?;
        let numer = lhs.checked_add(rhs).ok_or(Error::overflow(op))?;
        let denom = self
            .denom
            .checked_mul(other.denom)
            .ok_or(Error::overflow(op))?;
        Ratio::new(numer, denom)
    }

    pub fn checked_sub(self, other: Ratio) -> Result<Ratio> {
        self.checked_add(other.checked_neg()?)
    }

    pub fn checked_mul(self, other: Ratio) -> Result<Ratio> {
        let op = "ratio multiplication";
        // Cross-reduce first so intermediate products stay small.
        let g1 = gcd(self.numer, other.denom).max(1);
        let g2 = gcd(other.numer, self.denom).max(1);
        let numer = (self.numer / g1)
            .checked_mul(other.numer / g2)
            .ok_or(Error::overflow(op))?;
        let denom = (self.denom / g2)
            .checked_mul(other.denom / g1)
            .ok_or(Error::overflow(op))?;
        Ratio::new(numer, denom)
    }

    pub fn checked_div(self, other: Ratio) -> Result<Ratio> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        self.checked_mul(Ratio {
            numer: other.denom,
            denom: other.numer,
        })
    }

    pub fn checked_neg(self) -> Result<Ratio> {
        Ok(Ratio {
            numer: self
                .numer
                .checked_neg()
                .ok_or(Error::overflow("ratio negation"))?,
            denom: self.denom,
        })
    }
}

impl From<i64> for Ratio {
    fn from(n: i64) -> Ratio {
        Ratio::from_int(n)
    }
}

impl core::fmt::Display for Ratio {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.denom {
            1 => write!(f, "{}", self.numer),
            _ => write!(f, "{}/{}", self.numer, self.denom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio {
        Ratio::new(n, d).unwrap()
    }

    #[test]
    fn normalizes_sign_and_terms() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(-3, -6), r(1, 2));
        assert_eq!(r(0, 7), Ratio::from_int(0));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2).checked_add(r(1, 3)).unwrap(), r(5, 6));
        assert_eq!(r(9, 2).checked_mul(r(4, 3)).unwrap(), r(6, 1));
        assert_eq!(r(1, 2).checked_sub(r(1, 2)).unwrap(), r(0, 1));
        assert_eq!(r(3, 4).checked_div(r(3, 2)).unwrap(), r(1, 2));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(r(6, 3).to_integer(), Some(2));
        assert_eq!(r(5, 2).to_integer(), None);
        assert!(r(-4, 2).is_integer());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Ratio::new(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(
            r(1, 2).checked_div(Ratio::from_int(0)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn overflow_reported() {
        let big = Ratio::from_int(i64::MAX);
        assert!(matches!(
            big.checked_mul(Ratio::from_int(2)),
            Err(Error::Overflow { .. })
        ));
    }
}
