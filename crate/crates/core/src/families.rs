//! Construction of coefficient quadruples `{a, b, c, d}` whose every
//! arrangement has integer eigenvalues.
//!
//! Most families come from the ansatz `a + d = b + c = t`: given a
//! Pythagorean triple `(r, s, t)` and a factor pair with `k*l = rs/2`, the
//! coefficients are `{(t ± k ± l)/2}`. The degenerate family lies outside
//! the ansatz: two entries zero and the product of the other two a perfect
//! square.

use alloc::vec::Vec;

use crate::arith::{checked_add, checked_mul, checked_sub, gcd};
use crate::ratio::Ratio;
use crate::triples::PythTriple;
use crate::{Error, Result};

/// Where a quadruple came from: the family and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Canonical {
        triple: PythTriple,
    },
    AltCanonical {
        m: i64,
        n: i64,
    },
    OddT {
        triple: PythTriple,
    },
    RationalPrinted {
        triple: PythTriple,
        p: i64,
        q: i64,
    },
    RationalReduced {
        triple: PythTriple,
        p: i64,
        q: i64,
        divided_by: i64,
    },
    Degenerate {
        g: i64,
        e1: i64,
        e2: i64,
    },
    General {
        triple: PythTriple,
        k: Ratio,
        l: Ratio,
    },
}

impl core::fmt::Display for Provenance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Provenance::Canonical { triple } => write!(f, "canonical(triple={triple})"),
            Provenance::AltCanonical { m, n } => write!(f, "alt-canonical(m={m}, n={n})"),
            Provenance::OddT { triple } => write!(f, "odd-t(triple={triple})"),
            Provenance::RationalPrinted { triple, p, q } => {
                write!(f, "rational(triple={triple}, p={p}, q={q})")
            }
            Provenance::RationalReduced {
                triple,
                p,
                q,
                divided_by,
            } => write!(
                f,
                "rational-reduced(triple={triple}, p={p}, q={q}, divided_by={divided_by})"
            ),
            Provenance::Degenerate { g, e1, e2 } => {
                write!(f, "degenerate(g={g}, e1={e1}, e2={e2})")
            }
            Provenance::General { triple, k, l } => {
                write!(f, "general(triple={triple}, k={k}, l={l})")
            }
        }
    }
}

/// An ordered quadruple of matrix coefficients `(a, b, c, d)`, kept in
/// construction order, with an optional record of the family that built it.
/// Comparisons across families should use [`CoefficientQuad::multiset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientQuad {
    entries: [i64; 4],
    provenance: Option<Provenance>,
}

impl CoefficientQuad {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> CoefficientQuad {
        CoefficientQuad {
            entries: [a, b, c, d],
            provenance: None,
        }
    }

    pub fn from_entries(entries: [i64; 4]) -> CoefficientQuad {
        CoefficientQuad {
            entries,
            provenance: None,
        }
    }

    fn with_provenance(entries: [i64; 4], provenance: Provenance) -> CoefficientQuad {
        CoefficientQuad {
            entries,
            provenance: Some(provenance),
        }
    }

    /// Construction order `(a, b, c, d)`.
    pub fn entries(&self) -> [i64; 4] {
        self.entries
    }

    pub fn a(&self) -> i64 {
        self.entries[0]
    }

    pub fn b(&self) -> i64 {
        self.entries[1]
    }

    pub fn c(&self) -> i64 {
        self.entries[2]
    }

    pub fn d(&self) -> i64 {
        self.entries[3]
    }

    /// The multiset key: entries sorted ascending.
    pub fn multiset(&self) -> [i64; 4] {
        let mut m = self.entries;
        m.sort_unstable();
        m
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// `Some(t)` when the stored pairing satisfies `a + d = b + c = t`.
    pub fn ansatz_sum(&self) -> Option<i64> {
        let [a, b, c, d] = self.entries;
        let lhs = a as i128 + d as i128;
        let rhs = b as i128 + c as i128;
        (lhs == rhs).then(|| i64::try_from(lhs).ok()).flatten()
    }

    /// Multiply every entry by `n` (a solution stays a solution).
    pub fn scaled(&self, n: i64) -> Result<CoefficientQuad> {
        let op = "quadruple scaling";
        Ok(CoefficientQuad {
            entries: [
                checked_mul(self.entries[0], n, op)?,
                checked_mul(self.entries[1], n, op)?,
                checked_mul(self.entries[2], n, op)?,
                checked_mul(self.entries[3], n, op)?,
            ],
            provenance: None,
        })
    }
}

impl core::fmt::Display for CoefficientQuad {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "{{{a}, {b}, {c}, {d}}}")
    }
}

/// The pair `(k, l)` of (possibly rational, possibly negative) factors of
/// `rs/2`. Validity against a given triple is checked by
/// [`general_solution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorPair {
    k: Ratio,
    l: Ratio,
}

impl FactorPair {
    pub fn new(k: Ratio, l: Ratio) -> FactorPair {
        FactorPair { k, l }
    }

    pub fn from_integers(k: i64, l: i64) -> FactorPair {
        FactorPair {
            k: Ratio::from_int(k),
            l: Ratio::from_int(l),
        }
    }

    pub fn k(&self) -> Ratio {
        self.k
    }

    pub fn l(&self) -> Ratio {
        self.l
    }
}

/// A reduced rational `p/q` with `p` nonzero and `q` positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalParam {
    p: i64,
    q: i64,
}

impl RationalParam {
    pub fn new(p: i64, q: i64) -> Result<RationalParam> {
        if p == 0 {
            return Err(Error::BadParameter {
                name: "p",
                value: p,
                requirement: "nonzero",
            });
        }
        if q < 1 {
            return Err(Error::BadParameter {
                name: "q",
                value: q,
                requirement: "positive",
            });
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { a: p, b: q });
        }
        Ok(RationalParam { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// Parameters of the alternative canonical form: `m` nonzero, `n` odd, and
/// `gcd(|2m|, |n|) = 1` (for odd `n` this is just `gcd(|m|, |n|) = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltCanParams {
    m: i64,
    n: i64,
}

impl AltCanParams {
    pub fn new(m: i64, n: i64) -> Result<AltCanParams> {
        if m == 0 {
            return Err(Error::BadParameter {
                name: "m",
                value: m,
                requirement: "nonzero",
            });
        }
        if n % 2 == 0 {
            return Err(Error::EvenN { n });
        }
        if gcd(m, n) != 1 {
            return Err(Error::NotCoprime { a: m, b: n });
        }
        Ok(AltCanParams { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

/// The ansatz quadruple as exact rationals, before any integrality demand:
/// `((t+k+l)/2, (t+k-l)/2, (t-k+l)/2, (t-k-l)/2)`.
pub fn ansatz_quad_rational(t: i64, k: Ratio, l: Ratio) -> Result<[Ratio; 4]> {
    let t = Ratio::from_int(t);
    let half = Ratio::new(1, 2)?;
    let mut out = [Ratio::from_int(0); 4];
    for (i, (sk, sl)) in [(1, 1), (1, -1), (-1, 1), (-1, -1)].iter().enumerate() {
        let k_term = if *sk > 0 { k } else { k.checked_neg()? };
        let l_term = if *sl > 0 { l } else { l.checked_neg()? };
        out[i] = t
            .checked_add(k_term)?
            .checked_add(l_term)?
            .checked_mul(half)?;
    }
    Ok(out)
}

/// General ansatz solution: `{(t ± k ± l)/2}` for factors with
/// `k*l = rs/2`. Fails if the factor constraint is violated or any entry is
/// not an integer (naming the offending entry).
pub fn general_solution(triple: &PythTriple, factors: &FactorPair) -> Result<CoefficientQuad> {
    let half_rs = Ratio::from_int(triple.r())
        .checked_mul(Ratio::from_int(triple.s()))?
        .checked_mul(Ratio::new(1, 2)?)?;
    let product = factors.k().checked_mul(factors.l())?;
    if product != half_rs {
        return Err(Error::FactorConstraint {
            found: product,
            expected: half_rs,
        });
    }
    let rational = ansatz_quad_rational(triple.t(), factors.k(), factors.l())?;
    let mut entries = [0i64; 4];
    for (i, (value, name)) in rational.iter().zip(['a', 'b', 'c', 'd']).enumerate() {
        entries[i] = value.to_integer().ok_or(Error::NonIntegerEntry {
            entry: name,
            numer: value.numer(),
            denom: value.denom(),
        })?;
    }
    Ok(CoefficientQuad::with_provenance(
        entries,
        Provenance::General {
            triple: *triple,
            k: factors.k(),
            l: factors.l(),
        },
    ))
}

/// Canonical solution `{(t ± r ± s/2)/2}` of a normalized triple
/// (`s` divisible by 4, `r` of the parity of `t`); always integral there.
pub fn canonical(triple: &PythTriple) -> Result<CoefficientQuad> {
    if !triple.is_normalized() {
        return Err(Error::NotNormalized {
            r: triple.r(),
            s: triple.s(),
            t: triple.t(),
        });
    }
    let factors = FactorPair::from_integers(triple.r(), triple.s() / 2);
    let quad = general_solution(triple, &factors)?;
    Ok(CoefficientQuad::with_provenance(
        quad.entries(),
        Provenance::Canonical { triple: *triple },
    ))
}

/// Alternative canonical form `{4m² ± mn, n² ± mn}`, the canonical solution
/// of the triple generated by `f = 2m, g = n`, free of the common factor.
pub fn alt_canonical(params: &AltCanParams) -> Result<CoefficientQuad> {
    let (m, n) = (params.m(), params.n());
    let op = "alternative canonical form";
    let m2x4 = checked_mul(4, checked_mul(m, m, op)?, op)?;
    let n2 = checked_mul(n, n, op)?;
    let mn = checked_mul(m, n, op)?;
    let entries = [
        checked_add(m2x4, mn, op)?,
        checked_sub(m2x4, mn, op)?,
        checked_add(n2, mn, op)?,
        checked_sub(n2, mn, op)?,
    ];
    Ok(CoefficientQuad::with_provenance(
        entries,
        Provenance::AltCanonical { m, n },
    ))
}

/// `4|m| > |n| > |m|`: exactly when every entry of the alternative
/// canonical form is strictly positive.
pub fn positive_predicate(params: &AltCanParams) -> bool {
    let m = (params.m() as i128).abs();
    let n = (params.n() as i128).abs();
    4 * m > n && n > m
}

/// Noncanonical solution `{(t ± rs/2 ± 1)/2}` for odd hypotenuse:
/// `k = rs/2`, `l = 1`.
pub fn odd_t_solution(triple: &PythTriple) -> Result<CoefficientQuad> {
    if triple.t() % 2 == 0 {
        return Err(Error::EvenHypotenuse { t: triple.t() });
    }
    let half_rs = Ratio::from_int(triple.r())
        .checked_mul(Ratio::from_int(triple.s()))?
        .checked_mul(Ratio::new(1, 2)?)?;
    let factors = FactorPair::new(half_rs, Ratio::from_int(1));
    let quad = general_solution(triple, &factors)?;
    Ok(CoefficientQuad::with_provenance(
        quad.entries(),
        Provenance::OddT { triple: *triple },
    ))
}

/// Output of [`rational_family`]: the formula value and its gcd-reduced
/// form. Both are solutions; the reduced one is the primitive
/// representative of the ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalQuads {
    pub printed: CoefficientQuad,
    pub reduced: CoefficientQuad,
}

/// The scaled rational-factor solution `{pqt ± p² ± q²rs/2}` (the rational
/// choice `k = p/q`, `l = qrs/2p` cleared of denominators), together with
/// its gcd-reduced quadruple.
pub fn rational_family(triple: &PythTriple, param: &RationalParam) -> Result<RationalQuads> {
    if triple.s() % 2 != 0 {
        return Err(Error::BadParameter {
            name: "s",
            value: triple.s(),
            requirement: "even (normalize the triple first)",
        });
    }
    let (p, q) = (param.p(), param.q());
    let (r, s, t) = (triple.r(), triple.s(), triple.t());
    let op = "rational family";
    let pqt = checked_mul(checked_mul(p, q, op)?, t, op)?;
    let p2 = checked_mul(p, p, op)?;
    let q2_half_rs = checked_mul(checked_mul(q, q, op)?, checked_mul(r, s / 2, op)?, op)?;
    let mut entries = [0i64; 4];
    for (i, (sp, sq)) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)]
        .iter()
        .enumerate()
    {
        entries[i] = checked_add(
            pqt,
            checked_add(
                checked_mul(*sp, p2, op)?,
                checked_mul(*sq, q2_half_rs, op)?,
                op,
            )?,
            op,
        )?;
    }
    let printed = CoefficientQuad::with_provenance(
        entries,
        Provenance::RationalPrinted {
            triple: *triple,
            p,
            q,
        },
    );
    let common = entries.iter().fold(0i64, |acc, &e| gcd(acc, e)).max(1);
    let reduced_entries = [
        entries[0] / common,
        entries[1] / common,
        entries[2] / common,
        entries[3] / common,
    ];
    let reduced = CoefficientQuad::with_provenance(
        reduced_entries,
        Provenance::RationalReduced {
            triple: *triple,
            p,
            q,
            divided_by: common,
        },
    );
    Ok(RationalQuads { printed, reduced })
}

/// The family outside the ansatz: `{g·e1², g·e2², 0, 0}`. The product of
/// the two nonzero entries is `(g·e1·e2)²`, a perfect square, which is
/// exactly what every arrangement needs.
pub fn degenerate_family(g: i64, e1: i64, e2: i64) -> Result<CoefficientQuad> {
    if g == 0 {
        return Err(Error::BadParameter {
            name: "g",
            value: g,
            requirement: "nonzero",
        });
    }
    for (name, value) in [("e1", e1), ("e2", e2)] {
        if value < 1 {
            return Err(Error::BadParameter {
                name,
                value,
                requirement: "positive",
            });
        }
    }
    let op = "degenerate family";
    let entries = [
        checked_mul(g, checked_mul(e1, e1, op)?, op)?,
        checked_mul(g, checked_mul(e2, e2, op)?, op)?,
        0,
        0,
    ];
    Ok(CoefficientQuad::with_provenance(
        entries,
        Provenance::Degenerate { g, e1, e2 },
    ))
}

/// Every family quadruple generator applied over a small parameter sweep;
/// used by searches and tests to cross-check completeness.
pub fn sample_family_quads(max_triple_t: i64, max_param: i64) -> Result<Vec<CoefficientQuad>> {
    let mut out = Vec::new();
    for triple in crate::triples::enumerate(max_triple_t, false)? {
        let normalized = crate::triples::normalize(triple).triple;
        out.push(canonical(&normalized)?);
        if normalized.t() % 2 != 0 {
            out.push(odd_t_solution(&normalized)?);
        }
        for p in 1..=max_param {
            for q in 1..=max_param {
                if gcd(p, q) != 1 {
                    continue;
                }
                let quads = rational_family(&normalized, &RationalParam::new(p, q)?)?;
                out.push(quads.printed);
                out.push(quads.reduced);
            }
        }
    }
    for m in 1..=max_param {
        for n in (1..=max_param).step_by(2) {
            if gcd(m, n) != 1 {
                continue;
            }
            for (sm, sn) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(alt_canonical(&AltCanParams::new(sm * m, sn * n)?)?);
            }
        }
    }
    for g in [-max_param, -1, 1, max_param] {
        if g == 0 {
            continue;
        }
        for e1 in 1..=max_param {
            for e2 in e1..=max_param {
                out.push(degenerate_family(g, e1, e2)?);
            }
        }
    }
    Ok(out)
}
