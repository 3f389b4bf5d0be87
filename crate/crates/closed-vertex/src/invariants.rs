//! Exact local invariants of the triple-point curve configuration.
//!
//! For a genus `g` and component degrees `(d_1, d_2, d_3)` the invariant is
//! computed by the reduction pipeline: sort the degrees, build the curve
//! class
//!
//! ```text
//! beta = (d_1+d_2+d_3) h - d_1 (e_1+e_2) - d_2 (e_3+e_4) - d_3 (e_5+e_6)
//! ```
//!
//! on the six-point blowup, apply the Cremona involution, and read off the
//! answer: a negative multiplicity in the image forces the invariant to
//! vanish, while in the remaining case the image is `d (h - e_5 - e_6)`,
//! a degree-`d` multiple cover of a single (-1,-1) rational curve, whose
//! contribution is the closed form
//!
//! ```text
//! |B_{2g} (2g-1)| / (2g)! * d^(2g-3).
//! ```
//!
//! The two configurations with a zero degree (one curve, or two equal
//! curves forming a contractable pair) short-circuit to the same closed
//! form: the Cremona symmetry requires a nonzero multiplicity at the fifth
//! or sixth point and does not apply to them.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cremona::cremona_on_x;
use crate::error::InvariantError;
use crate::lattice::CurveClassX;

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Bernoulli numbers `B_0, ..., B_n` under the convention `B_1 = -1/2`,
/// computed by the defining recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0`
/// with `B_0 = 1`. Only even indices reach the invariant formulas, so the
/// `B_1` convention never influences a result.
pub fn bernoulli_sequence(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let sum: Rational = (0..m)
            .map(|j| Rational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * &b[j])
            .sum();
        b.push(-sum / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// The single Bernoulli number `B_n`; see [`bernoulli_sequence`].
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_sequence(n).pop().unwrap()
}

/// Local invariant of a single smooth rational curve with normal bundle
/// O(-1) + O(-1), covered with degree `d >= 1` at genus `g`:
/// `|B_{2g} (2g-1)| / (2g)! * d^(2g-3)`.
pub fn fp_invariant(g: u32, d: u64) -> Result<Rational, InvariantError> {
    if d == 0 {
        return Err(InvariantError::ZeroDegree);
    }
    let prefactor = (bernoulli(2 * g as usize) * Rational::from_integer(BigInt::from(2 * g as i64 - 1)))
        .abs()
        / Rational::from_integer(factorial(2 * g));
    let exponent = 2 * g as i64 - 3;
    let power = BigInt::from(d).pow(exponent.unsigned_abs() as u32);
    let degree_factor = if exponent >= 0 {
        Rational::from_integer(power)
    } else {
        Rational::new(BigInt::one(), power)
    };
    Ok(prefactor * degree_factor)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// A genus together with the three component degrees, at least one of
/// which must be nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexDegrees {
    pub g: u32,
    pub degrees: [u64; 3],
}

impl VertexDegrees {
    pub fn new(g: u32, d1: u64, d2: u64, d3: u64) -> Result<Self, InvariantError> {
        if d1 == 0 && d2 == 0 && d3 == 0 {
            return Err(InvariantError::AllDegreesZero);
        }
        Ok(VertexDegrees {
            g,
            degrees: [d1, d2, d3],
        })
    }

    /// Degrees in descending order; the pipeline is invariant under
    /// permutations because the three components are interchangeable.
    fn sorted(self) -> [u64; 3] {
        let mut d = self.degrees;
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Curve class of the three-component configuration with the given degrees
/// on the six-point blowup. The result is always balanced.
pub fn build_vertex_class(d1: u64, d2: u64, d3: u64) -> Result<CurveClassX, InvariantError> {
    if d1 == 0 && d2 == 0 && d3 == 0 {
        return Err(InvariantError::AllDegreesZero);
    }
    let (d1, d2, d3) = (d1 as i64, d2 as i64, d3 as i64);
    Ok(CurveClassX::new(
        d1 + d2 + d3,
        [-d1, -d1, -d2, -d2, -d3, -d3],
    ))
}

/// Smallest 1-based `i` with multiplicity `a_i < 0`, if any. A negative
/// multiplicity forces every zero-insertion invariant of the class to
/// vanish.
pub fn vanishing_witness(c: &CurveClassX) -> Option<usize> {
    (1..=6).find(|&i| c.a(i).is_negative())
}

/// How an invariant value was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionTrace {
    /// A zero degree made the configuration a single curve or a
    /// contractable pair; the closed form was applied at this degree.
    Direct { degree: u64 },
    /// The full reduction: `transformed = cremona(initial)`, and exactly
    /// one of the two outcomes.
    Cremona {
        initial: CurveClassX,
        transformed: CurveClassX,
        #[serde(flatten)]
        outcome: ReductionOutcome,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReductionOutcome {
    /// 1-based index of the first negative multiplicity in the transformed
    /// class; the invariant is zero.
    Witness { witness: usize },
    /// The transformed class is `degree * (h - e_5 - e_6)`.
    Reduced { reduced_degree: u64 },
}

/// An exact invariant value together with the reduction trace behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: Rational,
    pub trace: ReductionTrace,
}

/// The invariant `N^g_{d_1,d_2,d_3}` of the triple-point configuration,
/// computed through the reduction pipeline.
pub fn closed_vertex_invariant(v: &VertexDegrees) -> InvariantResult {
    let [d1, d2, d3] = v.sorted();

    // One curve, or two equal curves forming a contractable pair: the
    // closed form applies directly and the Cremona step is not available
    // (it needs a nonzero multiplicity at the fifth or sixth point).
    if d2 == 0 || (d3 == 0 && d1 == d2) {
        return InvariantResult {
            value: fp_invariant(v.g, d1).expect("d1 > 0 by construction"),
            trace: ReductionTrace::Direct { degree: d1 },
        };
    }

    let initial = build_vertex_class(d1, d2, d3).expect("not all degrees zero");
    let transformed = cremona_on_x(&initial);
    let (value, outcome) = match vanishing_witness(&transformed) {
        Some(witness) => (Rational::zero(), ReductionOutcome::Witness { witness }),
        None => {
            // No negative multiplicity only happens for equal degrees, and
            // then the image is d (h - e_5 - e_6).
            let d = BigInt::from(d3);
            debug_assert_eq!(
                transformed,
                CurveClassX::h()
                    .add(&CurveClassX::e(5).scale(-1))
                    .add(&CurveClassX::e(6).scale(-1))
                    .scale(d.clone())
            );
            let _ = d;
            (
                fp_invariant(v.g, d3).expect("d3 > 0 when no witness exists"),
                ReductionOutcome::Reduced { reduced_degree: d3 },
            )
        }
    };
    InvariantResult {
        value,
        trace: ReductionTrace::Cremona {
            initial,
            transformed,
            outcome,
        },
    }
}

/// One table entry: genus, descending degrees, and the invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub g: u32,
    pub degrees: [u64; 3],
    pub result: InvariantResult,
}

/// All invariants with `g <= g_max` and `d_max >= d_1 >= d_2 >= d_3 >= 0`
/// (not all degrees zero), in lexicographic order of `(g, d_1, d_2, d_3)`.
///
/// There are no hard bounds; the Bernoulli numerators grow roughly
/// exponentially in digit count with `g`, so expect cost to be dominated
/// by the genus bound.
pub fn invariant_table(g_max: u32, d_max: u64) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for g in 0..=g_max {
        for d1 in 0..=d_max {
            for d2 in 0..=d1 {
                for d3 in 0..=d2 {
                    let Ok(v) = VertexDegrees::new(g, d1, d2, d3) else {
                        continue;
                    };
                    rows.push(TableRow {
                        g,
                        degrees: [d1, d2, d3],
                        result: closed_vertex_invariant(&v),
                    });
                }
            }
        }
    }
    rows
}
