//! Exact integer-eigenvalue computations: perfect-square detection, 2×2
//! eigenvalues, the six permutation discriminants, predicted eigenvalue
//! classes for ansatz solutions, the all-permutations verifier, and the 3×3
//! analogue via integer root-finding on the characteristic cubic.
//!
//! Everything is exact checked integer arithmetic; there is no floating
//! point on any decision path.

use alloc::vec::Vec;

use crate::arith::{checked_add, checked_mul, checked_sub};
use crate::families::{CoefficientQuad, FactorPair};
use crate::multiset::{distinct_permutation_count, DistinctPermutations};
use crate::triples::PythTriple;
use crate::{Error, Result};

/// The integer root of `n` when `n` is a perfect square, `None` otherwise
/// (negative inputs are never squares).
pub fn is_perfect_square(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as u64).isqrt();
    (r * r == n as u64).then_some(r as i64)
}

/// A 2×2 integer matrix `(a b; c d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Matrix2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Matrix2 {
        Matrix2 { a, b, c, d }
    }

    /// Row-major `[a, b, c, d]`.
    pub fn from_row_major(e: [i64; 4]) -> Matrix2 {
        Matrix2::new(e[0], e[1], e[2], e[3])
    }

    pub fn row_major(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> Result<i64> {
        checked_add(self.a, self.d, "matrix trace")
    }

    pub fn determinant(&self) -> Result<i64> {
        let op = "matrix determinant";
        checked_sub(
            checked_mul(self.a, self.d, op)?,
            checked_mul(self.b, self.c, op)?,
            op,
        )
    }

    /// `(a-d)^2 + 4bc`, the quantity under the square root of the
    /// eigenvalue formula.
    pub fn discriminant(&self) -> Result<i64> {
        let op = "eigenvalue discriminant";
        let diff = checked_sub(self.a, self.d, op)?;
        let sq = checked_mul(diff, diff, op)?;
        let cross = checked_mul(4, checked_mul(self.b, self.c, op)?, op)?;
        checked_add(sq, cross, op)
    }

    /// Swap the diagonal entries (`a` and `d`); leaves eigenvalues unchanged.
    pub fn swap_diagonal(&self) -> Matrix2 {
        Matrix2::new(self.d, self.b, self.c, self.a)
    }

    /// Swap the off-diagonal entries (`b` and `c`); leaves eigenvalues
    /// unchanged.
    pub fn swap_off_diagonal(&self) -> Matrix2 {
        Matrix2::new(self.a, self.c, self.b, self.d)
    }
}

impl core::fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// An integer eigenvalue pair, ordered so `plus >= minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenPair {
    plus: i64,
    minus: i64,
}

impl EigenPair {
    pub fn new(x: i64, y: i64) -> EigenPair {
        EigenPair {
            plus: x.max(y),
            minus: x.min(y),
        }
    }

    pub fn plus(&self) -> i64 {
        self.plus
    }

    pub fn minus(&self) -> i64 {
        self.minus
    }
}

impl core::fmt::Display for EigenPair {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

/// Both eigenvalues of `m` when they are integers, i.e. when the
/// discriminant is a perfect square. A square discriminant already forces
/// integrality: the root has the parity of the trace, so `trace ± root` is
/// even. Rational non-integer eigenvalues cannot occur for a monic integer
/// characteristic polynomial.
pub fn eigenvalues_2x2(m: &Matrix2) -> Result<Option<EigenPair>> {
    let disc = m.discriminant()?;
    let Some(root) = is_perfect_square(disc) else {
        return Ok(None);
    };
    let trace = m.trace()?;
    debug_assert_eq!((root - trace).rem_euclid(2), 0);
    let plus = checked_add(trace, root, "eigenvalue")? / 2;
    let minus = checked_sub(trace, root, "eigenvalue")? / 2;
    Ok(Some(EigenPair::new(plus, minus)))
}

/// The six square conditions on an ordered quadruple `(a, b, c, d)`:
/// each field holds the integer root when the corresponding expression is a
/// perfect square, and is absent otherwise.
///
/// * `u^2 = (a-d)^2 + 4bc`
/// * `v^2 = (b-c)^2 + 4ad`
/// * `w^2 = (a-b)^2 + 4cd`
/// * `x^2 = (c-d)^2 + 4ab`
/// * `y^2 = (a-c)^2 + 4bd`
/// * `z^2 = (b-d)^2 + 4ac`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminantSet {
    pub u: Option<i64>,
    pub v: Option<i64>,
    pub w: Option<i64>,
    pub x: Option<i64>,
    pub y: Option<i64>,
    pub z: Option<i64>,
}

impl DiscriminantSet {
    pub fn all_present(&self) -> bool {
        self.u.is_some()
            && self.v.is_some()
            && self.w.is_some()
            && self.x.is_some()
            && self.y.is_some()
            && self.z.is_some()
    }
}

fn square_condition(p: i64, q: i64, m: i64, n: i64) -> Result<Option<i64>> {
    // (p - q)^2 + 4 m n
    let op = "square condition";
    let diff = checked_sub(p, q, op)?;
    let sq = checked_mul(diff, diff, op)?;
    let cross = checked_mul(4, checked_mul(m, n, op)?, op)?;
    Ok(is_perfect_square(checked_add(sq, cross, op)?))
}

/// Evaluate all six square conditions for the quadruple in its stored
/// `(a, b, c, d)` order.
pub fn discriminants(quad: &CoefficientQuad) -> Result<DiscriminantSet> {
    let [a, b, c, d] = quad.entries();
    Ok(DiscriminantSet {
        u: square_condition(a, d, b, c)?,
        v: square_condition(b, c, a, d)?,
        w: square_condition(a, b, c, d)?,
        x: square_condition(c, d, a, b)?,
        y: square_condition(a, c, b, d)?,
        z: square_condition(b, d, a, c)?,
    })
}

/// The six representative arrangements whose square-root terms are,
/// in order, the `u, v, w, x, y, z` conditions of [`discriminants`]:
/// `(a b; c d)`, `(b a; d c)`, `(a d; c b)`, `(d a; b c)`, `(a b; d c)`,
/// `(b a; c d)`. Every other arrangement is one of these with the diagonal
/// and/or off-diagonal swapped, which leaves eigenvalues unchanged.
pub fn perm_representatives(quad: &CoefficientQuad) -> [Matrix2; 6] {
    let [a, b, c, d] = quad.entries();
    [
        Matrix2::new(a, b, c, d),
        Matrix2::new(b, a, d, c),
        Matrix2::new(a, d, c, b),
        Matrix2::new(d, a, b, c),
        Matrix2::new(a, b, d, c),
        Matrix2::new(b, a, c, d),
    ]
}

/// Eigenvalues of the six representative arrangements, in the order of
/// [`perm_representatives`].
pub fn representative_eigenvalues(quad: &CoefficientQuad) -> Result<[Option<EigenPair>; 6]> {
    let reps = perm_representatives(quad);
    let mut out = [None; 6];
    for (slot, rep) in out.iter_mut().zip(reps.iter()) {
        *slot = eigenvalues_2x2(rep)?;
    }
    Ok(out)
}

fn half_even(n: i64) -> i64 {
    // The ansatz guarantees evenness: the square roots r+s and r-s have the
    // parity of t.
    debug_assert_eq!(n % 2, 0);
    n / 2
}

/// Predicted eigenvalue classes for the ansatz solution built from
/// `triple = (r, s, t)` with integer factors `(k, l)`, in the arrangement
/// order of [`perm_representatives`]:
/// `{(t±(r+s))/2}`, `{(t±(r-s))/2}`, `{t, k}`, `{t, -k}`, `{t, l}`, `{t, -l}`.
///
/// Requires the integral solution to exist (same checks as
/// `families::general_solution`).
pub fn predicted_eigenvalues(triple: &PythTriple, factors: &FactorPair) -> Result<[EigenPair; 6]> {
    // Validates k*l = rs/2 and integrality; k and l are then recovered from
    // the integral quadruple itself (k = b - d, l = a - b).
    let quad = crate::families::general_solution(triple, factors)?;
    let [a, b, _, d] = quad.entries();
    let op = "predicted eigenvalues";
    let k = checked_sub(b, d, op)?;
    let l = checked_sub(a, b, op)?;
    let (r, s, t) = (triple.r(), triple.s(), triple.t());
    let leg_sum = checked_add(r, s, op)?;
    let leg_diff = checked_sub(r, s, op)?;
    Ok([
        EigenPair::new(
            half_even(checked_add(t, leg_sum, op)?),
            half_even(checked_sub(t, leg_sum, op)?),
        ),
        EigenPair::new(
            half_even(checked_add(t, leg_diff, op)?),
            half_even(checked_sub(t, leg_diff, op)?),
        ),
        EigenPair::new(t, k),
        EigenPair::new(t, k.checked_neg().ok_or(Error::Overflow { op })?),
        EigenPair::new(t, l),
        EigenPair::new(t, l.checked_neg().ok_or(Error::Overflow { op })?),
    ])
}

/// Verdict for a single arrangement.
///
/// There is no "rational but not integer" case: for integer matrices a
/// rational square root of the discriminant is already an integer, and its
/// parity matches the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The discriminant is a perfect square; eigenvalues attached.
    Integer(EigenPair),
    /// The discriminant is not a perfect square (possibly negative), so the
    /// eigenvalues are irrational or complex.
    Irrational,
}

/// One distinct arrangement of the coefficient multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrangementReport {
    pub matrix: Matrix2,
    /// Raw discriminant value `(a-d)^2 + 4bc` for this arrangement.
    pub discriminant: i64,
    pub verdict: Verdict,
    /// Index into [`EigenReport::classes`] of the swap class this
    /// arrangement belongs to.
    pub swap_class: usize,
}

/// A group of arrangements related by diagonal and/or off-diagonal swaps;
/// all members share trace, determinant, and therefore eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapClass {
    /// Lexicographically smallest member of the class.
    pub representative: Matrix2,
    pub eigenvalues: Option<EigenPair>,
    /// Number of distinct arrangements in the class (1, 2, or 4).
    pub members: usize,
}

/// Full verdict over every distinct arrangement of a coefficient multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    /// The multiset, sorted ascending.
    pub coefficients: [i64; 4],
    /// Every distinct arrangement, in lexicographic row-major order.
    pub arrangements: Vec<ArrangementReport>,
    /// Swap classes in order of first appearance.
    pub classes: Vec<SwapClass>,
    /// True iff every arrangement has integer eigenvalues.
    pub all_pass: bool,
}

impl EigenReport {
    /// First arrangement without integer eigenvalues, if any.
    pub fn first_failure(&self) -> Option<&ArrangementReport> {
        self.arrangements
            .iter()
            .find(|a| matches!(a.verdict, Verdict::Irrational))
    }
}

fn swap_class_key(m: &Matrix2) -> [i64; 4] {
    let variants = [
        *m,
        m.swap_diagonal(),
        m.swap_off_diagonal(),
        m.swap_diagonal().swap_off_diagonal(),
    ];
    variants
        .iter()
        .map(|v| v.row_major())
        .min()
        .expect("four variants")
}

/// Arrange the multiset into every distinct `(a b; c d)` matrix, compute
/// eigenvalues for each, and group the arrangements into swap classes.
/// The input order of the quadruple is irrelevant.
pub fn verify_all_permutations(quad: &CoefficientQuad) -> Result<EigenReport> {
    let mut coefficients = quad.entries();
    coefficients.sort_unstable();

    let mut arrangements = Vec::new();
    let mut classes: Vec<SwapClass> = Vec::new();
    let mut class_keys: Vec<[i64; 4]> = Vec::new();
    let mut all_pass = true;

    for arrangement in DistinctPermutations::new(coefficients) {
        let matrix = Matrix2::from_row_major(arrangement);
        let discriminant = matrix.discriminant()?;
        let verdict = match eigenvalues_2x2(&matrix)? {
            Some(pair) => Verdict::Integer(pair),
            None => {
                all_pass = false;
                Verdict::Irrational
            }
        };
        let key = swap_class_key(&matrix);
        let swap_class = match class_keys.iter().position(|k| *k == key) {
            Some(i) => {
                classes[i].members += 1;
                i
            }
            None => {
                class_keys.push(key);
                classes.push(SwapClass {
                    representative: Matrix2::from_row_major(key),
                    eigenvalues: match verdict {
                        Verdict::Integer(pair) => Some(pair),
                        Verdict::Irrational => None,
                    },
                    members: 1,
                });
                classes.len() - 1
            }
        };
        arrangements.push(ArrangementReport {
            matrix,
            discriminant,
            verdict,
            swap_class,
        });
    }

    debug_assert_eq!(
        arrangements.len() as u64,
        distinct_permutation_count(&coefficients)
    );

    Ok(EigenReport {
        coefficients,
        arrangements,
        classes,
        all_pass,
    })
}

/// Integer roots of `x^2 - sum*x + product`, i.e. the integer pair with the
/// given sum and product, when it exists.
pub fn integer_roots_quadratic(sum: i64, product: i64) -> Result<Option<(i64, i64)>> {
    let op = "quadratic roots";
    let disc = checked_sub(checked_mul(sum, sum, op)?, checked_mul(4, product, op)?, op)?;
    let Some(root) = is_perfect_square(disc) else {
        return Ok(None);
    };
    let hi = checked_add(sum, root, op)? / 2;
    let lo = checked_sub(sum, root, op)? / 2;
    Ok(Some((hi, lo)))
}

fn icbrt_u64(n: u64) -> u64 {
    // Binary search for the largest x with x^3 <= n; the root of a u64 fits
    // in 22 bits.
    let mut lo: u64 = 0;
    let mut hi: u64 = 1 << 22;
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if (mid as u128) * (mid as u128) * (mid as u128) <= n as u128 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// All roots of the cubic lie within twice the largest of `|c2|`,
/// `sqrt(|c1|)`, `cbrt(|c0|)` (Fujiwara's bound for a monic cubic).
fn cubic_root_bound(trace: i64, second_sym: i64, det: i64) -> u64 {
    let b1 = trace.unsigned_abs();
    let b2 = second_sym.unsigned_abs().isqrt() + 1;
    let b3 = icbrt_u64(det.unsigned_abs()) + 1;
    2 * b1.max(b2).max(b3).max(1)
}

fn eval_cubic(trace: i64, second_sym: i64, det: i64, x: i64) -> Result<i128> {
    // x^3 - trace x^2 + second_sym x - det, by Horner in i128.
    let op = "cubic evaluation";
    let x = x as i128;
    let mut acc = x - trace as i128;
    acc = acc.checked_mul(x).ok_or(Error::Overflow { op })?;
    acc = acc
        .checked_add(second_sym as i128)
        .ok_or(Error::Overflow { op })?;
    acc = acc.checked_mul(x).ok_or(Error::Overflow { op })?;
    acc.checked_sub(det as i128).ok_or(Error::Overflow { op })
}

/// Integer roots `(x1, x2, x3)`, sorted descending, of
/// `x^3 - trace*x^2 + second_sym*x - det`, when the cubic splits completely
/// over the integers; `None` otherwise.
///
/// A zero constant term factors out a root at 0 and reduces to the
/// quadratic; otherwise candidate roots are scanned among the divisors of
/// `det` inside the root bound, and the cofactor quadratic is solved
/// exactly.
pub fn integer_roots_cubic(
    trace: i64,
    second_sym: i64,
    det: i64,
) -> Result<Option<(i64, i64, i64)>> {
    let deflate = |root: i64| -> Result<Option<(i64, i64, i64)>> {
        let op = "cubic deflation";
        // (x^3 - T x^2 + S x - D) / (x - root) has root sum T - root and
        // root product root^2 - T*root + S.
        let sum = checked_sub(trace, root, op)?;
        let product = checked_add(
            checked_mul(root, checked_sub(root, trace, op)?, op)?,
            second_sym,
            op,
        )?;
        match integer_roots_quadratic(sum, product)? {
            Some((r1, r2)) => {
                let mut roots = [root, r1, r2];
                roots.sort_unstable();
                Ok(Some((roots[2], roots[1], roots[0])))
            }
            None => Ok(None),
        }
    };

    if det == 0 {
        return deflate(0);
    }
    if det == i64::MIN {
        return Err(Error::Overflow { op: "cubic roots" });
    }

    // Any root divides det and lies within the bound. Trial division up to
    // min(bound, sqrt|det|) finds every such divisor: small divisors
    // directly, large ones as cofactors.
    let bound = cubic_root_bound(trace, second_sym, det);
    let magnitude = det.unsigned_abs();
    let limit = bound.min(magnitude.isqrt());
    let mut small = 1u64;
    while small <= limit {
        if magnitude.is_multiple_of(small) {
            for divisor in [small, magnitude / small] {
                if divisor > bound || divisor > i64::MAX as u64 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let root = sign * divisor as i64;
                    if eval_cubic(trace, second_sym, det, root)? == 0 {
                        return deflate(root);
                    }
                }
            }
        }
        small += 1;
    }
    Ok(None)
}

/// A 3×3 integer matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix3(pub [[i64; 3]; 3]);

impl Matrix3 {
    pub fn from_row_major(e: [i64; 9]) -> Matrix3 {
        Matrix3([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    pub fn row_major(&self) -> [i64; 9] {
        let m = &self.0;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    /// Coefficients (trace, second symmetric function, determinant) of the
    /// characteristic polynomial `x^3 - trace x^2 + second x - det`.
    pub fn char_poly(&self) -> Result<(i64, i64, i64)> {
        let op = "3x3 characteristic polynomial";
        let m = &self.0;
        let to = |v: i128| -> Result<i64> { i64::try_from(v).map_err(|_| Error::Overflow { op }) };
        let e = |i: usize, j: usize| m[i][j] as i128;
        let add = |a: i128, b: i128| a.checked_add(b).ok_or(Error::Overflow { op });
        let mul3 = |a: i128, b: i128, c: i128| -> Result<i128> {
            a.checked_mul(b)
                .and_then(|ab| ab.checked_mul(c))
                .ok_or(Error::Overflow { op })
        };

        let trace = add(add(e(0, 0), e(1, 1))?, e(2, 2))?;
        // Sum of the three principal 2x2 minors; pairwise i64 products
        // cannot overflow i128, only the running sum is checked.
        let minor = |p: i128, q: i128, r: i128, s: i128| add(p * q, -(r * s));
        let second = add(
            add(
                minor(e(0, 0), e(1, 1), e(0, 1), e(1, 0))?,
                minor(e(0, 0), e(2, 2), e(0, 2), e(2, 0))?,
            )?,
            minor(e(1, 1), e(2, 2), e(1, 2), e(2, 1))?,
        )?;
        let det = add(
            add(
                add(
                    add(
                        add(
                            mul3(e(0, 0), e(1, 1), e(2, 2))?,
                            mul3(e(0, 1), e(1, 2), e(2, 0))?,
                        )?,
                        mul3(e(0, 2), e(1, 0), e(2, 1))?,
                    )?,
                    -mul3(e(0, 2), e(1, 1), e(2, 0))?,
                )?,
                -mul3(e(0, 0), e(1, 2), e(2, 1))?,
            )?,
            -mul3(e(0, 1), e(1, 0), e(2, 2))?,
        )?;
        Ok((to(trace)?, to(second)?, to(det)?))
    }

    /// Integer spectrum, when the characteristic cubic splits over the
    /// integers.
    pub fn integer_spectrum(&self) -> Result<Option<(i64, i64, i64)>> {
        let (trace, second, det) = self.char_poly()?;
        integer_roots_cubic(trace, second, det)
    }
}

impl core::fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let m = &self.0;
        write!(
            f,
            "({} {} {}; {} {} {}; {} {} {})",
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]
        )
    }
}

/// Verdict over every distinct arrangement of nine integers into a 3×3
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report3x3 {
    /// The multiset, sorted ascending.
    pub coefficients: [i64; 9],
    /// Number of distinct arrangements (enumerated or counted).
    pub arrangement_count: u64,
    pub all_pass: bool,
    /// First arrangement, in lexicographic order, whose characteristic
    /// cubic does not split over the integers.
    pub first_failure: Option<Matrix3>,
    /// Spectrum of the lexicographically first arrangement, when integral;
    /// sorted descending.
    pub sample_spectrum: Option<(i64, i64, i64)>,
}

/// True iff every distinct arrangement of the nonuple has an
/// integer-splitting characteristic cubic. Stops at the first failure.
pub fn verify_all_permutations_3x3(nonuple: &[i64; 9]) -> Result<Report3x3> {
    let mut coefficients = *nonuple;
    coefficients.sort_unstable();
    let arrangement_count = distinct_permutation_count(&coefficients);

    let mut sample_spectrum = None;
    let mut first = true;
    for arrangement in DistinctPermutations::new(coefficients) {
        let matrix = Matrix3::from_row_major(arrangement);
        let spectrum = matrix.integer_spectrum()?;
        if first {
            sample_spectrum = spectrum;
            first = false;
        }
        if spectrum.is_none() {
            return Ok(Report3x3 {
                coefficients,
                arrangement_count,
                all_pass: false,
                first_failure: Some(matrix),
                sample_spectrum,
            });
        }
    }

    Ok(Report3x3 {
        coefficients,
        arrangement_count,
        all_pass: true,
        first_failure: None,
        sample_spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::CoefficientQuad;

    #[test]
    fn perfect_squares() {
        assert_eq!(is_perfect_square(289), Some(17));
        assert_eq!(is_perfect_square(0), Some(0));
        assert_eq!(is_perfect_square(33), None);
        assert_eq!(is_perfect_square(-4), None);
        assert_eq!(is_perfect_square(1), Some(1));
        assert_eq!(is_perfect_square(i64::MAX), None);
        let big = 3_037_000_499i64; // isqrt(i64::MAX)
        assert_eq!(is_perfect_square(big * big), Some(big));
    }

    #[test]
    fn eigenvalues_of_known_matrices() {
        let m = Matrix2::new(12, 6, 7, 1);
        assert_eq!(eigenvalues_2x2(&m).unwrap(), Some(EigenPair::new(15, -2)));

        let m = Matrix2::new(5, 3, 2, 0);
        assert_eq!(eigenvalues_2x2(&m).unwrap(), Some(EigenPair::new(6, -1)));

        let identity = Matrix2::new(1, 0, 0, 1);
        assert_eq!(
            eigenvalues_2x2(&identity).unwrap(),
            Some(EigenPair::new(1, 1))
        );

        let m = Matrix2::new(1, 2, 3, 4); // discriminant 33
        assert_eq!(eigenvalues_2x2(&m).unwrap(), None);
    }

    #[test]
    fn eigenvalue_sum_and_product_match_trace_and_determinant() {
        let m = Matrix2::new(12, 6, 7, 1);
        let pair = eigenvalues_2x2(&m).unwrap().unwrap();
        assert_eq!(pair.plus() + pair.minus(), m.trace().unwrap());
        assert_eq!(pair.plus() * pair.minus(), m.determinant().unwrap());
    }

    #[test]
    fn discriminant_set_of_canonical_quad() {
        let quad = CoefficientQuad::from_entries([5, 3, 2, 0]);
        let set = discriminants(&quad).unwrap();
        assert_eq!(set.u, Some(7));
        assert_eq!(set.v, Some(1));
        assert_eq!(set.w, Some(2));
        assert_eq!(set.x, Some(8));
        assert_eq!(set.y, Some(3));
        assert_eq!(set.z, Some(7));
        assert!(set.all_present());
    }

    #[test]
    fn discriminant_set_detects_failure() {
        let quad = CoefficientQuad::from_entries([1, 2, 3, 4]);
        let set = discriminants(&quad).unwrap();
        assert_eq!(set.u, None); // (1-4)^2 + 4*2*3 = 33
        assert!(!set.all_present());
    }

    #[test]
    fn discriminant_set_all_zero() {
        let quad = CoefficientQuad::from_entries([0, 0, 0, 0]);
        let set = discriminants(&quad).unwrap();
        assert_eq!(set.u, Some(0));
        assert_eq!(set.v, Some(0));
        assert_eq!(set.w, Some(0));
        assert_eq!(set.x, Some(0));
        assert_eq!(set.y, Some(0));
        assert_eq!(set.z, Some(0));
    }

    #[test]
    fn verify_canonical_example() {
        let quad = CoefficientQuad::from_entries([12, 6, 7, 1]);
        let report = verify_all_permutations(&quad).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.arrangements.len(), 24);
        assert_eq!(report.classes.len(), 6);
        assert!(report
            .classes
            .iter()
            .all(|c| c.members == 4 && c.eigenvalues.is_some()));
    }

    #[test]
    fn verify_rejects_non_solution() {
        let quad = CoefficientQuad::from_entries([1, 2, 3, 4]);
        let report = verify_all_permutations(&quad).unwrap();
        assert!(!report.all_pass);
        assert!(report.first_failure().is_some());
    }

    #[test]
    fn verify_constant_quad() {
        let quad = CoefficientQuad::from_entries([9, 9, 9, 9]);
        let report = verify_all_permutations(&quad).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.arrangements.len(), 1);
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].eigenvalues, Some(EigenPair::new(18, 0)));
    }

    #[test]
    fn verify_is_order_insensitive() {
        let a = verify_all_permutations(&CoefficientQuad::from_entries([5, 3, 2, 0])).unwrap();
        let b = verify_all_permutations(&CoefficientQuad::from_entries([0, 2, 3, 5])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quadratic_roots() {
        assert_eq!(integer_roots_quadratic(5, 6).unwrap(), Some((3, 2)));
        assert_eq!(integer_roots_quadratic(0, -1).unwrap(), Some((1, -1)));
        assert_eq!(integer_roots_quadratic(1, 1).unwrap(), None);
        assert_eq!(integer_roots_quadratic(0, 1).unwrap(), None); // complex
    }

    #[test]
    fn cubic_roots_trivial_cases() {
        assert_eq!(integer_roots_cubic(3, 0, 0).unwrap(), Some((3, 0, 0)));
        assert_eq!(integer_roots_cubic(0, 0, 0).unwrap(), Some((0, 0, 0)));
        // x^3 - x^2 + x - 1 = (x - 1)(x^2 + 1)
        assert_eq!(integer_roots_cubic(1, 1, 1).unwrap(), None);
    }

    #[test]
    fn cubic_roots_generic() {
        // roots 2, -3, 5: trace 4, second -11, det -30
        assert_eq!(integer_roots_cubic(4, -11, -30).unwrap(), Some((5, 2, -3)));
        // (x - 1)^3
        assert_eq!(integer_roots_cubic(3, 3, 1).unwrap(), Some((1, 1, 1)));
        // x^3 - 2 has no rational root
        assert_eq!(integer_roots_cubic(0, 0, 2).unwrap(), None);
    }

    #[test]
    fn cubic_roots_large_coefficients_terminate() {
        // roots 1000003 (prime), 2, 2
        let p = 1_000_003i64;
        assert_eq!(
            integer_roots_cubic(p + 4, 4 * p + 4, 4 * p).unwrap(),
            Some((p, 2, 2))
        );
        // A lone integer root with an irreducible cofactor: (x - 10^6)(x^2 + 2).
        assert_eq!(integer_roots_cubic(1_000_000, 2, 2_000_000).unwrap(), None);
        // Extreme coefficients must terminate quickly, not scan the bound.
        assert_eq!(integer_roots_cubic(i64::MAX, 0, 1).unwrap(), None);
        assert!(integer_roots_cubic(0, 0, i64::MIN).is_err());
    }

    #[test]
    fn matrix3_char_poly() {
        let m = Matrix3::from_row_major([1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(m.char_poly().unwrap(), (3, 0, 0));
        assert_eq!(m.integer_spectrum().unwrap(), Some((3, 0, 0)));
    }

    #[test]
    fn verify_3x3_constant_passes() {
        let report = verify_all_permutations_3x3(&[2; 9]).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.arrangement_count, 1);
        assert_eq!(report.sample_spectrum, Some((6, 0, 0)));
    }

    #[test]
    fn verify_3x3_single_one_passes() {
        // Every placement of a lone 1 yields a nilpotent or rank-1 matrix,
        // so the cubic is x^3 or x^2(x - 1), both of which split.
        let report = verify_all_permutations_3x3(&[1, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.arrangement_count, 9);
    }

    #[test]
    fn verify_3x3_three_ones_fail() {
        // Three 1s admit the cyclic arrangement (0 1 0; 0 0 1; 1 0 0) with
        // characteristic polynomial x^3 - 1, which has complex roots.
        let report = verify_all_permutations_3x3(&[1, 1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(!report.all_pass);
        assert!(report.first_failure.is_some());
    }

    #[test]
    fn verify_3x3_near_constant_fails() {
        // Scan-decided verdict, frozen: a single 4 among 2s already breaks
        // the property (the lex-first arrangement has determinant 0 and the
        // cofactor quadratic x^2 - 8x + 8 has discriminant 32, not a square).
        let report = verify_all_permutations_3x3(&[2, 2, 2, 2, 2, 2, 2, 2, 4]).unwrap();
        assert!(!report.all_pass);
        assert_eq!(report.arrangement_count, 9);
        assert_eq!(
            report.first_failure,
            Some(Matrix3::from_row_major([2, 2, 2, 2, 2, 2, 2, 2, 4]))
        );
    }

    #[test]
    fn first_two_predicted_classes_are_factor_independent() {
        // For a fixed triple, classes 1 and 2 depend only on (r, s, t).
        let triple = PythTriple::new(3, 4, 5).unwrap();
        let a = predicted_eigenvalues(&triple, &FactorPair::from_integers(3, 2)).unwrap();
        let b = predicted_eigenvalues(&triple, &FactorPair::from_integers(6, 1)).unwrap();
        assert_eq!(a[0], b[0]);
        assert_eq!(a[1], b[1]);
        assert_eq!(a[0], EigenPair::new(6, -1));
    }

    #[test]
    fn swap_invariance() {
        let m = Matrix2::new(12, 6, 7, 1);
        let base = eigenvalues_2x2(&m).unwrap();
        assert_eq!(eigenvalues_2x2(&m.swap_diagonal()).unwrap(), base);
        assert_eq!(eigenvalues_2x2(&m.swap_off_diagonal()).unwrap(), base);
        assert_eq!(
            eigenvalues_2x2(&m.swap_diagonal().swap_off_diagonal()).unwrap(),
            base
        );
    }
}
