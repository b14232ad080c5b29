//! Pythagorean triples: validation, generation from the Euclid
//! parameterization, enumeration by hypotenuse bound, and parity
//! normalization.
//!
//! The normalized layout keeps the leg `s` divisible by 4 and the leg `r` of
//! the same parity as the hypotenuse `t`. Every triple admits this layout
//! after removing common factors of 2: an all-even triple is halved until
//! exactly one leg is even, and that leg is then divisible by 4 (two odd
//! legs would force `t^2 = 2 mod 4`, which no square satisfies).

use alloc::vec::Vec;

use crate::arith::{checked_mul, gcd};
use crate::{Error, Result};

/// An integer right-triangle triple `(r, s, t)` with `r^2 + s^2 = t^2` and
/// every side positive. Leg order is whatever the producer chose; see
/// [`normalize`] for the parity layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple {
    r: i64,
    s: i64,
    t: i64,
}

impl PythTriple {
    /// Validates positivity and the Pythagorean identity (exactly, widening
    /// to 128 bits so no representable input can wrap).
    pub fn new(r: i64, s: i64, t: i64) -> Result<PythTriple> {
        if is_valid(r, s, t) {
            Ok(PythTriple { r, s, t })
        } else {
            Err(Error::InvalidTriple { r, s, t })
        }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// The hypotenuse.
    pub fn t(&self) -> i64 {
        self.t
    }

    /// True when `s` is divisible by 4 and `r` has the parity of `t`.
    pub fn is_normalized(&self) -> bool {
        self.s % 4 == 0 && (self.r - self.t) % 2 == 0
    }

    pub fn is_primitive(&self) -> bool {
        gcd(gcd(self.r, self.s), self.t) == 1
    }
}

impl core::fmt::Display for PythTriple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.s, self.t)
    }
}

/// True iff all of `r`, `s`, `t` are positive and `r^2 + s^2 = t^2`.
pub fn is_valid(r: i64, s: i64, t: i64) -> bool {
    if r <= 0 || s <= 0 || t <= 0 {
        return false;
    }
    let (r, s, t) = (r as i128, s as i128, t as i128);
    r * r + s * s == t * t
}

/// Euclid parameters `(f, g, h)`: `f > g >= 1` and a common factor `h >= 1`.
/// Coprime `(f, g)` of opposite parity with `h = 1` generate exactly the
/// primitive triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EuclidParams {
    f: i64,
    g: i64,
    h: i64,
}

impl EuclidParams {
    pub fn new(f: i64, g: i64, h: i64) -> Result<EuclidParams> {
        if f > g && g >= 1 && h >= 1 {
            Ok(EuclidParams { f, g, h })
        } else {
            Err(Error::InvalidEuclidParams { f, g, h })
        }
    }

    pub fn f(&self) -> i64 {
        self.f
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    /// Would these parameters produce a primitive triple?
    pub fn generates_primitive(&self) -> bool {
        self.h == 1 && gcd(self.f, self.g) == 1 && (self.f - self.g) % 2 != 0
    }
}

/// `(r, s, t) = ((f^2 - g^2) h, 2 f g h, (f^2 + g^2) h)`.
pub fn from_params(params: EuclidParams) -> Result<PythTriple> {
    let EuclidParams { f, g, h } = params;
    let op = "triple from Euclid parameters";
    let f2 = checked_mul(f, f, op)?;
    let g2 = checked_mul(g, g, op)?;
    let r = checked_mul(f2 - g2, h, op)?;
    let s = checked_mul(checked_mul(2, f, op)?, checked_mul(g, h, op)?, op)?;
    let t = checked_mul(f2.checked_add(g2).ok_or(Error::Overflow { op })?, h, op)?;
    PythTriple::new(r, s, t)
}

/// Every triple with hypotenuse `t <= max_t`, exactly once up to leg order,
/// sorted by ascending `t` then ascending shorter leg. Legs are stored in
/// the normalized layout. With `primitive_only`, only `h = 1` triples from
/// coprime opposite-parity parameters are kept.
///
/// Bounds below the smallest hypotenuse (5) yield an empty list.
pub fn enumerate(max_t: i64, primitive_only: bool) -> Result<Vec<PythTriple>> {
    let mut out = Vec::new();
    if max_t < 5 {
        return Ok(out);
    }
    let mut f: i64 = 2;
    loop {
        match f.checked_mul(f) {
            Some(f2) if f2 < max_t => {}
            _ => break,
        }
        for g in 1..f {
            let base_t = match (f * f).checked_add(g * g) {
                Some(v) if v <= max_t => v,
                _ => break,
            };
            if gcd(f, g) != 1 || (f - g) % 2 == 0 {
                continue;
            }
            let max_h = if primitive_only { 1 } else { max_t / base_t };
            for h in 1..=max_h {
                out.push(from_params(EuclidParams { f, g, h })?);
            }
        }
        f += 1;
    }
    out.sort_unstable_by_key(|tr| (tr.t(), tr.r().min(tr.s())));
    Ok(out)
}

/// A parity-normalized triple together with the power of two removed from
/// an all-even input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normalized {
    pub triple: PythTriple,
    /// The input was `2^removed_pow2` times the reported triple.
    pub removed_pow2: u32,
}

/// Reorder (and, for all-even triples, halve) so that `s` is divisible by 4
/// and `r` has the parity of `t`. Halving repeats while all three sides are
/// even and is reported through [`Normalized::removed_pow2`]; the hypotenuse
/// is unchanged whenever no halving occurs.
pub fn normalize(triple: PythTriple) -> Normalized {
    let (mut r, mut s, mut t) = (triple.r, triple.s, triple.t);
    let mut removed = 0u32;
    while r % 2 == 0 && s % 2 == 0 && t % 2 == 0 {
        r /= 2;
        s /= 2;
        t /= 2;
        removed += 1;
    }
    // Exactly one leg is even now, and it is divisible by 4.
    if s % 2 != 0 {
        core::mem::swap(&mut r, &mut s);
    }
    debug_assert!(s % 4 == 0 && (r - t) % 2 == 0);
    Normalized {
        triple: PythTriple { r, s, t },
        removed_pow2: removed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(r: i64, s: i64, t: i64) -> PythTriple {
        PythTriple::new(r, s, t).unwrap()
    }

    #[test]
    fn from_params_known_triples() {
        let cases = [
            ((2, 1, 1), (3, 4, 5)),
            ((3, 2, 1), (5, 12, 13)),
            ((2, 1, 3), (9, 12, 15)),
        ];
        for ((f, g, h), (r, s, t)) in cases {
            let made = from_params(EuclidParams::new(f, g, h).unwrap()).unwrap();
            assert_eq!((made.r(), made.s(), made.t()), (r, s, t));
            assert!(is_valid(made.r(), made.s(), made.t()));
        }
    }

    #[test]
    fn from_params_rejects_bad_parameters() {
        assert!(EuclidParams::new(1, 1, 1).is_err());
        assert!(EuclidParams::new(2, 0, 1).is_err());
        assert!(EuclidParams::new(3, 1, 0).is_err());
    }

    #[test]
    fn from_params_overflow_is_reported() {
        let params = EuclidParams::new(i64::MAX / 2, 2, 1).unwrap();
        assert!(matches!(from_params(params), Err(Error::Overflow { .. })));
    }

    #[test]
    fn validity_checks() {
        assert!(is_valid(3, 4, 5));
        assert!(!is_valid(1, 1, 2));
        assert!(is_valid(20, 21, 29)); // 400 + 441 = 841
        assert!(!is_valid(0, 4, 4));
        assert!(!is_valid(-3, 4, 5));
    }

    #[test]
    fn validity_is_exact_at_the_word_boundary() {
        // i64 squares would wrap; the i128 widening must stay exact.
        let big = 3_000_000_000i64;
        assert!(!is_valid(big, big, big));
    }

    #[test]
    fn enumerate_smallest() {
        let prim = enumerate(5, true).unwrap();
        assert_eq!(prim.len(), 1);
        assert_eq!((prim[0].r(), prim[0].s(), prim[0].t()), (3, 4, 5));
    }

    #[test]
    fn enumerate_primitive_up_to_13() {
        let prim = enumerate(13, true).unwrap();
        let got: Vec<(i64, i64, i64)> = prim.iter().map(|t| (t.r(), t.s(), t.t())).collect();
        assert_eq!(got, vec![(3, 4, 5), (5, 12, 13)]);
    }

    #[test]
    fn enumerate_all_includes_multiples() {
        let all = enumerate(15, false).unwrap();
        let as_tuples: Vec<(i64, i64, i64)> = all.iter().map(|t| (t.r(), t.s(), t.t())).collect();
        assert!(as_tuples.contains(&(9, 12, 15)));
        assert!(as_tuples.contains(&(6, 8, 10)));
        assert!(as_tuples.contains(&(3, 4, 5)));
    }

    #[test]
    fn enumerate_below_five_is_empty() {
        assert!(enumerate(4, false).unwrap().is_empty());
        assert!(enumerate(0, true).unwrap().is_empty());
    }

    #[test]
    fn enumerate_output_is_normalized_valid_and_ordered() {
        let all = enumerate(100, false).unwrap();
        for t in &all {
            assert!(t.is_normalized(), "{t}");
            assert!(is_valid(t.r(), t.s(), t.t()));
        }
        let keys: Vec<(i64, i64)> = all.iter().map(|t| (t.t(), t.r().min(t.s()))).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "not sorted: {keys:?}");
    }

    #[test]
    fn normalize_reorders_legs() {
        let n = normalize(triple(4, 3, 5));
        assert_eq!(n.triple, triple(3, 4, 5));
        assert_eq!(n.removed_pow2, 0);
    }

    #[test]
    fn normalize_keeps_normalized_input() {
        let n = normalize(triple(5, 12, 13));
        assert_eq!(n.triple, triple(5, 12, 13));
        assert_eq!(n.removed_pow2, 0);
    }

    #[test]
    fn normalize_halves_all_even_triples() {
        let n = normalize(triple(6, 8, 10));
        assert_eq!(n.triple, triple(3, 4, 5));
        assert_eq!(n.removed_pow2, 1);

        let n = normalize(triple(12, 16, 20));
        assert_eq!(n.triple, triple(3, 4, 5));
        assert_eq!(n.removed_pow2, 2);
    }

    #[test]
    fn primitive_flag() {
        assert!(triple(3, 4, 5).is_primitive());
        assert!(!triple(6, 8, 10).is_primitive());
        assert!(EuclidParams::new(2, 1, 1).unwrap().generates_primitive());
        assert!(!EuclidParams::new(2, 1, 3).unwrap().generates_primitive());
        assert!(!EuclidParams::new(3, 1, 1).unwrap().generates_primitive());
    }
}
