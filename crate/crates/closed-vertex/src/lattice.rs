//! Integer homology lattices of the two blowups and their intersection
//! pairings.
//!
//! `X` is the blowup of P^3 at six points; its curve lattice is spanned by
//! the line class `h` and the exceptional line classes `e_1, ..., e_6`, and
//! its divisor lattice by the hyperplane `H` and the exceptional planes
//! `E_1, ..., E_6`. `Xhat` is the further blowup of `X` along the six lines
//! `l_jk` (1 <= j < k <= 4) through pairs of the first four points; it gains
//! the ruled exceptional divisors `F_jk` with fiber classes `f_jk`.
//!
//! All classes are stored with **signed** coefficients: a curve class is
//! `d*h + sum_i c_i e_i (+ sum_jk phi_jk f_jk)`. The multiplicity
//! convention `a_i = -c_i` is exposed through [`CurveClassX::a`].
//!
//! The pairing sends a divisor and a curve to the coefficient of the point
//! class:
//!
//! ```text
//! H.h = 1,  E_i.e_i = -1,  F_jk.f_jk = -1,   all other products zero,
//! ```
//!
//! and two divisors to a curve via
//!
//! ```text
//! H.H = h,  E_i.E_i = -e_i,  F_jk.F_jk = -s_jk - f_jk,
//! H.F_jk = f_jk,  E_j.F_jk = E_k.F_jk = f_jk,
//! ```
//!
//! where `s_jk = h - e_j - e_k + f_jk` is the section class of the trivial
//! ruling `F_jk -> l_jk`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LatticeError;

/// An unordered pair {j, k} with 1 <= j < k <= 4, indexing the six blown-up
/// lines `l_jk` and everything that lives over them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairIndex {
    j: u8,
    k: u8,
}

impl PairIndex {
    /// All six pairs in the canonical order 12, 13, 14, 23, 24, 34.
    pub const ALL: [PairIndex; 6] = [
        PairIndex { j: 1, k: 2 },
        PairIndex { j: 1, k: 3 },
        PairIndex { j: 1, k: 4 },
        PairIndex { j: 2, k: 3 },
        PairIndex { j: 2, k: 4 },
        PairIndex { j: 3, k: 4 },
    ];

    pub fn new(j: u8, k: u8) -> Result<Self, LatticeError> {
        if (1..=4).contains(&j) && (1..=4).contains(&k) && j < k {
            Ok(PairIndex { j, k })
        } else {
            Err(LatticeError::InvalidPair { j, k })
        }
    }

    pub fn j(self) -> u8 {
        self.j
    }

    pub fn k(self) -> u8 {
        self.k
    }

    /// Position of this pair in [`PairIndex::ALL`]; also the slot used for
    /// `f`/`q` coefficient arrays.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|p| *p == self).unwrap()
    }

    /// True when `i` (1-based) is one of the two members.
    pub fn contains(self, i: u8) -> bool {
        self.j == i || self.k == i
    }

    /// The unique pair {j', k'} with {j, k} ∪ {j', k'} = {1, 2, 3, 4}.
    pub fn complement(self) -> PairIndex {
        let mut rest = (1..=4u8).filter(|i| !self.contains(*i));
        let j = rest.next().unwrap();
        let k = rest.next().unwrap();
        PairIndex { j, k }
    }

    /// Two-digit key such as "12" used in the JSON encoding of `f`/`q` maps.
    pub fn key(self) -> String {
        format!("{}{}", self.j, self.k)
    }

    pub fn from_key(key: &str) -> Result<Self, LatticeError> {
        let bytes = key.as_bytes();
        if bytes.len() == 2 && bytes[0].is_ascii_digit() && bytes[1].is_ascii_digit() {
            Self::new(bytes[0] - b'0', bytes[1] - b'0')
        } else {
            Err(LatticeError::InvalidPairKey(key.to_owned()))
        }
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.j, self.k)
    }
}

fn zeros() -> [BigInt; 6] {
    Default::default()
}

/// Curve class `d*h + sum_i c_i e_i` on the six-point blowup `X`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurveClassX {
    pub d: BigInt,
    pub c: [BigInt; 6],
}

impl CurveClassX {
    pub fn new(d: impl Into<BigInt>, c: [i64; 6]) -> Self {
        CurveClassX {
            d: d.into(),
            c: c.map(BigInt::from),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The line class `h`.
    pub fn h() -> Self {
        Self::new(1, [0; 6])
    }

    /// The exceptional line class `e_i`, `i` 1-based.
    pub fn e(i: usize) -> Self {
        assert!((1..=6).contains(&i), "e index out of range: {i}");
        let mut c = zeros();
        c[i - 1] = BigInt::from(1);
        CurveClassX { d: BigInt::zero(), c }
    }

    /// Multiplicity `a_i = -c_i` (1-based), the sign convention under which
    /// effective classes through the i-th point have positive entries.
    pub fn a(&self, i: usize) -> BigInt {
        assert!((1..=6).contains(&i), "a index out of range: {i}");
        -&self.c[i - 1]
    }

    /// Balanced means `2d = sum_i a_i`, equivalently `2d + sum_i c_i = 0`;
    /// exactly the classes of anticanonical degree zero.
    pub fn is_balanced(&self) -> bool {
        (&self.d * 2i64 + self.c.iter().sum::<BigInt>()).is_zero()
    }

    /// Inclusion into the curve lattice of `Xhat` with zero fiber
    /// coefficients.
    pub fn lift_to_xhat(&self) -> CurveClassXhat {
        CurveClassXhat {
            d: self.d.clone(),
            c: self.c.clone(),
            f: zeros(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        CurveClassX {
            d: &self.d * &k,
            c: self.c.each_ref().map(|x| x * &k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CurveClassX {
            d: &self.d + &other.d,
            c: std::array::from_fn(|i| &self.c[i] + &other.c[i]),
        }
    }
}

/// Divisor class `m*H + sum_i n_i E_i` on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorClassX {
    pub m: BigInt,
    pub n: [BigInt; 6],
}

impl DivisorClassX {
    pub fn new(m: impl Into<BigInt>, n: [i64; 6]) -> Self {
        DivisorClassX {
            m: m.into(),
            n: n.map(BigInt::from),
        }
    }

    /// The hyperplane class `H`.
    pub fn hyperplane() -> Self {
        Self::new(1, [0; 6])
    }

    /// The exceptional divisor class `E_i`, `i` 1-based.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=6).contains(&i), "E index out of range: {i}");
        let mut n = zeros();
        n[i - 1] = BigInt::from(1);
        DivisorClassX { m: BigInt::zero(), n }
    }

    /// The anticanonical class `4H - 2(E_1 + ... + E_6)`.
    pub fn anticanonical() -> Self {
        Self::new(4, [-2; 6])
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        DivisorClassX {
            m: &self.m * &k,
            n: self.n.each_ref().map(|x| x * &k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DivisorClassX {
            m: &self.m + &other.m,
            n: std::array::from_fn(|i| &self.n[i] + &other.n[i]),
        }
    }
}

/// Curve class `d*h + sum_i c_i e_i + sum_jk phi_jk f_jk` on `Xhat`.
/// The `f` array is indexed by [`PairIndex::index`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurveClassXhat {
    pub d: BigInt,
    pub c: [BigInt; 6],
    pub f: [BigInt; 6],
}

impl CurveClassXhat {
    pub fn new(d: impl Into<BigInt>, c: [i64; 6], f: [i64; 6]) -> Self {
        CurveClassXhat {
            d: d.into(),
            c: c.map(BigInt::from),
            f: f.map(BigInt::from),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn h() -> Self {
        Self::new(1, [0; 6], [0; 6])
    }

    pub fn e(i: usize) -> Self {
        CurveClassX::e(i).lift_to_xhat()
    }

    /// Fiber class `f_jk` of the ruled divisor over the line `l_jk`.
    pub fn f(p: PairIndex) -> Self {
        let mut f = zeros();
        f[p.index()] = BigInt::from(1);
        CurveClassXhat {
            d: BigInt::zero(),
            c: zeros(),
            f,
        }
    }

    /// Fiber coefficient for a pair.
    pub fn phi(&self, p: PairIndex) -> &BigInt {
        &self.f[p.index()]
    }

    /// Blowdown to `X`: forgets the fiber coefficients.
    pub fn pushforward_to_x(&self) -> CurveClassX {
        CurveClassX {
            d: self.d.clone(),
            c: self.c.clone(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        CurveClassXhat {
            d: &self.d * &k,
            c: self.c.each_ref().map(|x| x * &k),
            f: self.f.each_ref().map(|x| x * &k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CurveClassXhat {
            d: &self.d + &other.d,
            c: std::array::from_fn(|i| &self.c[i] + &other.c[i]),
            f: std::array::from_fn(|i| &self.f[i] + &other.f[i]),
        }
    }
}

/// Divisor class `m*H + sum_i n_i E_i + sum_jk q_jk F_jk` on `Xhat`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorClassXhat {
    pub m: BigInt,
    pub n: [BigInt; 6],
    pub q: [BigInt; 6],
}

impl DivisorClassXhat {
    pub fn new(m: impl Into<BigInt>, n: [i64; 6], q: [i64; 6]) -> Self {
        DivisorClassXhat {
            m: m.into(),
            n: n.map(BigInt::from),
            q: q.map(BigInt::from),
        }
    }

    pub fn hyperplane() -> Self {
        Self::new(1, [0; 6], [0; 6])
    }

    pub fn exceptional(i: usize) -> Self {
        assert!((1..=6).contains(&i), "E index out of range: {i}");
        let mut n = zeros();
        n[i - 1] = BigInt::from(1);
        DivisorClassXhat {
            m: BigInt::zero(),
            n,
            q: zeros(),
        }
    }

    /// The ruled exceptional divisor `F_jk` over the line `l_jk`.
    pub fn line_exceptional(p: PairIndex) -> Self {
        let mut q = zeros();
        q[p.index()] = BigInt::from(1);
        DivisorClassXhat {
            m: BigInt::zero(),
            n: zeros(),
            q,
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        DivisorClassXhat {
            m: &self.m * &k,
            n: self.n.each_ref().map(|x| x * &k),
            q: self.q.each_ref().map(|x| x * &k),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        DivisorClassXhat {
            m: &self.m + &other.m,
            n: std::array::from_fn(|i| &self.n[i] + &other.n[i]),
            q: std::array::from_fn(|i| &self.q[i] + &other.q[i]),
        }
    }
}

/// Section class `s_jk = h - e_j - e_k + f_jk` of the trivial ruling
/// `F_jk -> l_jk`.
pub fn section_class(p: PairIndex) -> CurveClassXhat {
    let mut c = zeros();
    c[p.j() as usize - 1] = BigInt::from(-1);
    c[p.k() as usize - 1] = BigInt::from(-1);
    let mut f = zeros();
    f[p.index()] = BigInt::from(1);
    CurveClassXhat {
        d: BigInt::from(1),
        c,
        f,
    }
}

/// Product of two divisors on `X` as a curve class:
/// `H.H = h`, `E_i.E_i = -e_i`, cross terms zero.
pub fn intersect_div_div_x(d1: &DivisorClassX, d2: &DivisorClassX) -> CurveClassX {
    CurveClassX {
        d: &d1.m * &d2.m,
        c: std::array::from_fn(|i| -(&d1.n[i] * &d2.n[i])),
    }
}

/// Pairing of a divisor against a curve on `X`: the coefficient of the
/// point class, `m*d - sum_i n_i c_i`.
pub fn intersect_div_curve_x(div: &DivisorClassX, c: &CurveClassX) -> BigInt {
    &div.m * &c.d - div.n.iter().zip(&c.c).map(|(n, c)| n * c).sum::<BigInt>()
}

/// Product of two divisors on `Xhat` as a curve class, by bilinear
/// expansion of the table in the module docs. `E_i.F_jk` is `f_jk` for
/// i in {j, k} and zero otherwise (the blown-up lines avoid the fifth and
/// sixth points).
pub fn intersect_div_div_xhat(d1: &DivisorClassXhat, d2: &DivisorClassXhat) -> CurveClassXhat {
    let mut out = CurveClassXhat::zero();
    out.d = &d1.m * &d2.m;
    for i in 0..6 {
        out.c[i] -= &d1.n[i] * &d2.n[i];
    }
    for p in PairIndex::ALL {
        let idx = p.index();
        let (j, k) = (p.j() as usize - 1, p.k() as usize - 1);

        // F_jk.F_jk = -s_jk - f_jk = -h + e_j + e_k - 2 f_jk
        let qq = &d1.q[idx] * &d2.q[idx];
        out.d -= &qq;
        out.c[j] += &qq;
        out.c[k] += &qq;
        out.f[idx] -= &qq * 2i64;

        // H.F_jk = f_jk and E_j.F_jk = E_k.F_jk = f_jk, in both orders.
        out.f[idx] += &d1.m * &d2.q[idx] + &d1.q[idx] * &d2.m;
        out.f[idx] += &d1.n[j] * &d2.q[idx] + &d1.q[idx] * &d2.n[j];
        out.f[idx] += &d1.n[k] * &d2.q[idx] + &d1.q[idx] * &d2.n[k];
    }
    out
}

/// Pairing of a divisor against a curve on `Xhat`:
/// `m*d - sum_i n_i c_i - sum_jk q_jk phi_jk`.
pub fn intersect_div_curve_xhat(div: &DivisorClassXhat, c: &CurveClassXhat) -> BigInt {
    &div.m * &c.d
        - div.n.iter().zip(&c.c).map(|(n, c)| n * c).sum::<BigInt>()
        - div.q.iter().zip(&c.f).map(|(q, f)| q * f).sum::<BigInt>()
}

// ---------------------------------------------------------------------------
// Display
// ---------------------------------------------------------------------------

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coef, name) in terms {
        if coef.is_zero() {
            continue;
        }
        let mag = coef.magnitude();
        let sign = coef.sign() == num_bigint::Sign::Minus;
        if first {
            if sign {
                write!(f, "-")?;
            }
        } else if sign {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag == &num_bigint::BigUint::from(1u8) {
            write!(f, "{name}")?;
        } else {
            write!(f, "{mag}{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CurveClassX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(self.d.clone(), "h".to_owned())];
        terms.extend((0..6).map(|i| (self.c[i].clone(), format!("e{}", i + 1))));
        write_terms(f, terms)
    }
}

impl fmt::Display for DivisorClassX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(self.m.clone(), "H".to_owned())];
        terms.extend((0..6).map(|i| (self.n[i].clone(), format!("E{}", i + 1))));
        write_terms(f, terms)
    }
}

impl fmt::Display for CurveClassXhat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(self.d.clone(), "h".to_owned())];
        terms.extend((0..6).map(|i| (self.c[i].clone(), format!("e{}", i + 1))));
        terms.extend(
            PairIndex::ALL
                .iter()
                .map(|p| (self.f[p.index()].clone(), format!("f{p}"))),
        );
        write_terms(f, terms)
    }
}

impl fmt::Display for DivisorClassXhat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(self.m.clone(), "H".to_owned())];
        terms.extend((0..6).map(|i| (self.n[i].clone(), format!("E{}", i + 1))));
        terms.extend(
            PairIndex::ALL
                .iter()
                .map(|p| (self.q[p.index()].clone(), format!("F{p}"))),
        );
        write_terms(f, terms)
    }
}

// ---------------------------------------------------------------------------
// JSON encoding
//
// Curve classes serialize as {"d": int, "c": [6 ints]} with an "f" object
// keyed "12".."34" on Xhat; divisor classes use keys "m", "n", "q". All
// coefficients are emitted as exact JSON integers of any size.
// ---------------------------------------------------------------------------

fn bigint_to_number(x: &BigInt) -> serde_json::Number {
    // Any integer literal is a valid JSON number; arbitrary_precision keeps
    // it exact.
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

fn number_to_bigint(n: &serde_json::Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|_| format!("not an integer: {n}"))
}

fn coeffs_to_numbers(xs: &[BigInt; 6]) -> Vec<serde_json::Number> {
    xs.iter().map(bigint_to_number).collect()
}

fn numbers_to_coeffs(ns: &[serde_json::Number]) -> Result<[BigInt; 6], String> {
    if ns.len() != 6 {
        return Err(format!("expected 6 coefficients, got {}", ns.len()));
    }
    let mut out = zeros();
    for (slot, n) in out.iter_mut().zip(ns) {
        *slot = number_to_bigint(n)?;
    }
    Ok(out)
}

type PairMap = std::collections::BTreeMap<String, serde_json::Number>;

fn pairs_to_map(xs: &[BigInt; 6]) -> PairMap {
    PairIndex::ALL
        .iter()
        .map(|p| (p.key(), bigint_to_number(&xs[p.index()])))
        .collect()
}

fn map_to_pairs(m: &PairMap) -> Result<[BigInt; 6], String> {
    let mut out = zeros();
    let mut seen = [false; 6];
    for (key, n) in m {
        let p = PairIndex::from_key(key).map_err(|e| e.to_string())?;
        out[p.index()] = number_to_bigint(n)?;
        seen[p.index()] = true;
    }
    if let Some(missing) = PairIndex::ALL.iter().find(|p| !seen[p.index()]) {
        return Err(format!("missing pair key \"{}\"", missing.key()));
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct CurveXRepr {
    d: serde_json::Number,
    c: Vec<serde_json::Number>,
}

#[derive(Serialize, Deserialize)]
struct CurveXhatRepr {
    d: serde_json::Number,
    c: Vec<serde_json::Number>,
    f: PairMap,
}

#[derive(Serialize, Deserialize)]
struct DivisorXRepr {
    m: serde_json::Number,
    n: Vec<serde_json::Number>,
}

#[derive(Serialize, Deserialize)]
struct DivisorXhatRepr {
    m: serde_json::Number,
    n: Vec<serde_json::Number>,
    q: PairMap,
}

impl Serialize for CurveClassX {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CurveXRepr {
            d: bigint_to_number(&self.d),
            c: coeffs_to_numbers(&self.c),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveClassX {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CurveXRepr::deserialize(d)?;
        Ok(CurveClassX {
            d: number_to_bigint(&repr.d).map_err(D::Error::custom)?,
            c: numbers_to_coeffs(&repr.c).map_err(D::Error::custom)?,
        })
    }
}

impl Serialize for CurveClassXhat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CurveXhatRepr {
            d: bigint_to_number(&self.d),
            c: coeffs_to_numbers(&self.c),
            f: pairs_to_map(&self.f),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveClassXhat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CurveXhatRepr::deserialize(d)?;
        Ok(CurveClassXhat {
            d: number_to_bigint(&repr.d).map_err(D::Error::custom)?,
            c: numbers_to_coeffs(&repr.c).map_err(D::Error::custom)?,
            f: map_to_pairs(&repr.f).map_err(D::Error::custom)?,
        })
    }
}

impl Serialize for DivisorClassX {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DivisorXRepr {
            m: bigint_to_number(&self.m),
            n: coeffs_to_numbers(&self.n),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorClassX {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = DivisorXRepr::deserialize(d)?;
        Ok(DivisorClassX {
            m: number_to_bigint(&repr.m).map_err(D::Error::custom)?,
            n: numbers_to_coeffs(&repr.n).map_err(D::Error::custom)?,
        })
    }
}

impl Serialize for DivisorClassXhat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DivisorXhatRepr {
            m: bigint_to_number(&self.m),
            n: coeffs_to_numbers(&self.n),
            q: pairs_to_map(&self.q),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorClassXhat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = DivisorXhatRepr::deserialize(d)?;
        Ok(DivisorClassXhat {
            m: number_to_bigint(&repr.m).map_err(D::Error::custom)?,
            n: numbers_to_coeffs(&repr.n).map_err(D::Error::custom)?,
            q: map_to_pairs(&repr.q).map_err(D::Error::custom)?,
        })
    }
}
