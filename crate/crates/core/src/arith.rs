//! Small checked-arithmetic helpers shared across the crate.

use crate::{Error, Result};

/// Greatest common divisor of the absolute values; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let mut a = a.unsigned_abs();
    let mut b = b.unsigned_abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

pub(crate) fn checked_add(a: i64, b: i64, op: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow { op })
}

pub(crate) fn checked_sub(a: i64, b: i64, op: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow { op })
}

pub(crate) fn checked_mul(a: i64, b: i64, op: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow { op })
}

/// 64-bit FNV-1a, used for checkpoint content digests.
pub(crate) struct Fnv1a(u64);

impl Fnv1a {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;

    pub(crate) fn new() -> Self {
        Fnv1a(Self::OFFSET)
    }

    pub(crate) fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(Self::PRIME);
        }
    }

    pub(crate) fn write_i64(&mut self, v: i64) {
        self.write(&v.to_le_bytes());
    }

    pub(crate) fn write_u64(&mut self, v: u64) {
        self.write(&v.to_le_bytes());
    }

    pub(crate) fn finish(&self) -> u64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(7, 13), 1);
    }

    #[test]
    fn fnv_distinguishes_order() {
        let mut a = Fnv1a::new();
        a.write_i64(1);
        a.write_i64(2);
        let mut b = Fnv1a::new();
        b.write_i64(2);
        b.write_i64(1);
        assert_ne!(a.finish(), b.finish());
    }
}
