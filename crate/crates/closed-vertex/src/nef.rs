//! Surface-level nef certificates.
//!
//! Two divisors have to pair non-negatively with every effective curve for
//! the reduction to work: the anticanonical divisor `4H - 2 sum E_i` on the
//! six-point blowup, and the divisors
//! `D_jk = 2H - (E_1 + ... + E_6) - F_jk - F_j'k'` on the line blowup. Both
//! certificates reduce to intersection numbers on a plane blown up at three
//! points (a degree-6 del Pezzo surface): writing the divisor as a sum of
//! two proper transforms of planes `D' + D''` and restricting an effective
//! curve to `D'`, the pairing becomes an explicit surface computation whose
//! non-negativity follows from pairing against nef surface classes.
//!
//! Surface classes are stored with signed coefficients
//! `d*h + sum_i a_i e_i` under the form `h.h = 1`, `e_i.e_i = -1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::NefError;
use crate::lattice::{DivisorClassX, DivisorClassXhat, PairIndex};

/// Class `d*h + sum_i a_i e_i` on a plane blown up at up to three points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub d: i64,
    pub a: Vec<i64>,
}

impl SurfaceClass {
    pub fn new(d: i64, a: impl Into<Vec<i64>>) -> Self {
        let a = a.into();
        assert!(a.len() <= 3, "at most three exceptional coordinates");
        SurfaceClass { d, a }
    }
}

impl std::fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        let mut term = |f: &mut std::fmt::Formatter<'_>, coef: i64, name: String| -> std::fmt::Result {
            if coef == 0 {
                return Ok(());
            }
            if first {
                if coef < 0 {
                    write!(f, "-")?;
                }
            } else if coef < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if coef.abs() != 1 {
                write!(f, "{}", coef.abs())?;
            }
            write!(f, "{name}")?;
            first = false;
            Ok(())
        };
        term(f, self.d, "h".into())?;
        for (i, &a) in self.a.iter().enumerate() {
            term(f, a, format!("e{}", i + 1))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Intersection number `d1*d2 - sum_i a_i*b_i` of two surface classes with
/// the same number of exceptional coordinates.
pub fn surface_intersect(c1: &SurfaceClass, c2: &SurfaceClass) -> Result<i64, NefError> {
    if c1.a.len() != c2.a.len() {
        return Err(NefError::DimensionMismatch(c1.a.len(), c2.a.len()));
    }
    Ok(c1.d * c2.d - c1.a.iter().zip(&c2.a).map(|(a, b)| a * b).sum::<i64>())
}

/// The six (-1)-curve classes generating the effective cone of the plane
/// blown up at three general points: `e_1, e_2, e_3` and the line proper
/// transforms `h - e_i - e_j`.
pub fn dp6_effective_generators() -> Vec<SurfaceClass> {
    vec![
        SurfaceClass::new(0, [1, 0, 0]),
        SurfaceClass::new(0, [0, 1, 0]),
        SurfaceClass::new(0, [0, 0, 1]),
        SurfaceClass::new(1, [-1, -1, 0]),
        SurfaceClass::new(1, [-1, 0, -1]),
        SurfaceClass::new(1, [0, -1, -1]),
    ]
}

/// Nefness on the three-point blowup of the plane, decided by pairing
/// against the finite effective-cone generator list.
pub fn is_nef_on_dp6(divisor: &SurfaceClass) -> Result<bool, NefError> {
    if divisor.a.len() != 3 {
        return Err(NefError::WrongDimension {
            expected: 3,
            got: divisor.a.len(),
        });
    }
    for generator in dp6_effective_generators() {
        if surface_intersect(divisor, &generator)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairing of the anticanonical divisor of the six-point blowup with a
/// curve living on the plane through the first three centers.
///
/// With the curve written as `d*h + sum a_i e_i` on that surface the value
/// is `2d + a_1 + a_2 + a_3`; it equals the curve's pairing against the
/// nef surface class `2h - e_1 - e_2 - e_3`, so classes violating
/// `2d + sum a_i >= 0` lie outside the effective cone and are rejected.
pub fn minus_k_dot_curve(c: &SurfaceClass) -> Result<i64, NefError> {
    if c.a.len() != 3 {
        return Err(NefError::WrongDimension {
            expected: 3,
            got: c.a.len(),
        });
    }
    let value = 2 * c.d + c.a.iter().sum::<i64>();
    if value < 0 {
        return Err(NefError::OutsideEffectiveCone(format!(
            "{c} pairs negatively with 2h - e1 - e2 - e3"
        )));
    }
    Ok(value)
}

/// Pairing of a pair divisor `D_jk` with a curve on the blown-up plane
/// through `x_j`, `x_k` and the fifth center, written as
/// `d*h' + a_j e_j' + a_k e_k' + a_5 e_5'` (signed, third coordinate is
/// the `e_5'` one).
///
/// The value is `d + a_5`; the surface class `h' - e_5'` is nef there, so
/// effective curves satisfy `d + a_5 >= 0` and others are rejected.
pub fn djk_dot_curve(c: &SurfaceClass) -> Result<i64, NefError> {
    if c.a.len() != 3 {
        return Err(NefError::WrongDimension {
            expected: 3,
            got: c.a.len(),
        });
    }
    let value = c.d + c.a[2];
    if value < 0 {
        return Err(NefError::OutsideEffectiveCone(format!(
            "{c} pairs negatively with h - e3"
        )));
    }
    Ok(value)
}

/// The divisor `D_jk = 2H - (E_1 + ... + E_6) - F_jk - F_j'k'` on the line
/// blowup.
pub fn djk_divisor(p: PairIndex) -> DivisorClassXhat {
    let mut q = [0i64; 6];
    q[p.index()] = -1;
    q[p.complement().index()] = -1;
    DivisorClassXhat::new(2, [-1; 6], q)
}

/// The two plane proper transforms summing to [`djk_divisor`]:
/// `D' = H - E_j - E_k - E_5 - F_jk` through `x_j, x_k, x_5`, and
/// `D'' = H - E_j' - E_k' - E_6 - F_j'k'` through the complementary points
/// and `x_6`.
pub fn djk_summands(p: PairIndex) -> (DivisorClassXhat, DivisorClassXhat) {
    let part = |pair: PairIndex, extra: usize| {
        let mut n = [0i64; 6];
        n[pair.j() as usize - 1] = -1;
        n[pair.k() as usize - 1] = -1;
        n[extra - 1] = -1;
        let mut q = [0i64; 6];
        q[pair.index()] = -1;
        DivisorClassXhat::new(1, n, q)
    };
    (part(p, 5), part(p.complement(), 6))
}

/// The two plane proper transforms summing to the anticanonical divisor
/// up to a factor of two: `H - E_1 - E_2 - E_3` and `H - E_4 - E_5 - E_6`.
pub fn anticanonical_summands() -> (DivisorClassX, DivisorClassX) {
    (
        DivisorClassX::new(1, [-1, -1, -1, 0, 0, 0]),
        DivisorClassX::new(1, [0, 0, 0, -1, -1, -1]),
    )
}

/// Which blown-up plane a curve lives on, for the normal-bundle pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlownPlane {
    /// Plane through three of the blown-up points; normal class
    /// `h - e_1 - e_2 - e_3`.
    ThreePoints,
    /// Plane through two points and the fifth center, blown up along the
    /// line between the two; normal class `-e_5'` (third coordinate).
    TwoPointsOneLine,
}

/// Degree of the normal bundle of the given blown-up plane restricted to a
/// curve class on it.
pub fn normal_bundle_degree(plane: BlownPlane, c: &SurfaceClass) -> Result<i64, NefError> {
    let normal = match plane {
        BlownPlane::ThreePoints => SurfaceClass::new(1, [-1, -1, -1]),
        BlownPlane::TwoPointsOneLine => SurfaceClass::new(0, [0, 0, -1]),
    };
    surface_intersect(&normal, c)
}

/// One sampled inequality of a certification run.
#[derive(Debug, Clone, Serialize)]
pub struct CertCheck {
    pub curve: SurfaceClass,
    pub value: i64,
}

/// Outcome of a seeded randomized certification of one of the two nef
/// statements.
#[derive(Debug, Clone, Serialize)]
pub struct CertificationReport {
    pub divisor: serde_json::Value,
    pub seed: u64,
    pub samples: u64,
    pub boundary: Vec<CertCheck>,
    pub checks: Vec<CertCheck>,
    pub min_value: i64,
    pub failures: u64,
    pub nef_certified: bool,
}

/// Certifies the anticanonical inequality on `samples` random non-negative
/// combinations of the effective-cone generators (coefficients up to 20).
pub fn certify_anticanonical(samples: u64, seed: u64) -> CertificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generators = dp6_effective_generators();
    let nef_class = SurfaceClass::new(2, [-1, -1, -1]);

    let boundary = vec![
        CertCheck {
            curve: nef_class.clone(),
            value: surface_intersect(&nef_class, &nef_class).unwrap(),
        },
        CertCheck {
            curve: SurfaceClass::new(1, [-1, -1, 0]),
            value: minus_k_dot_curve(&SurfaceClass::new(1, [-1, -1, 0])).unwrap(),
        },
    ];

    let mut checks = Vec::with_capacity(samples as usize);
    let mut failures = 0;
    let mut min_value = i64::MAX;
    for _ in 0..samples {
        let mut curve = SurfaceClass::new(0, [0, 0, 0]);
        for g in &generators {
            let lambda = rng.gen_range(0i64..=20);
            curve.d += lambda * g.d;
            for (slot, a) in curve.a.iter_mut().zip(&g.a) {
                *slot += lambda * a;
            }
        }
        let cone_pairing = surface_intersect(&nef_class, &curve).unwrap();
        let value = match minus_k_dot_curve(&curve) {
            Ok(v) => v,
            Err(_) => {
                failures += 1;
                -1
            }
        };
        if cone_pairing < 0 {
            failures += 1;
        }
        min_value = min_value.min(value);
        checks.push(CertCheck { curve, value });
    }

    let nef_certified = failures == 0 && boundary.iter().all(|c| c.value >= 0);
    CertificationReport {
        divisor: serde_json::to_value(DivisorClassX::anticanonical()).unwrap(),
        seed,
        samples,
        boundary,
        checks,
        min_value,
        failures,
        nef_certified,
    }
}

/// Certifies the pair-divisor inequality on `samples` random surface
/// classes satisfying the effective constraint `d >= -a_5`, plus the
/// structural identities `D_jk = D' + D''` and `(D')^2 = -e_5` for all six
/// pairs.
pub fn certify_pair_divisors(samples: u64, seed: u64) -> CertificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let boundary = vec![
        CertCheck {
            curve: SurfaceClass::new(1, [0, 0, -1]),
            value: djk_dot_curve(&SurfaceClass::new(1, [0, 0, -1])).unwrap(),
        },
        CertCheck {
            curve: SurfaceClass::new(3, [-1, -1, -2]),
            value: djk_dot_curve(&SurfaceClass::new(3, [-1, -1, -2])).unwrap(),
        },
    ];

    let mut structural_ok = true;
    for p in PairIndex::ALL {
        let (dp, dpp) = djk_summands(p);
        structural_ok &= dp.add(&dpp) == djk_divisor(p);
        let square = crate::lattice::intersect_div_div_xhat(&dp, &dp);
        structural_ok &= square == crate::lattice::CurveClassXhat::e(5).scale(-1);
    }

    let mut checks = Vec::with_capacity(samples as usize);
    let mut failures = 0;
    let mut min_value = i64::MAX;
    for _ in 0..samples {
        let d = rng.gen_range(0i64..=20);
        let aj = rng.gen_range(-20i64..=20);
        let ak = rng.gen_range(-20i64..=20);
        // Multiplicity at the fifth point at most d, i.e. signed
        // coefficient a_5 >= -d.
        let a5 = -rng.gen_range(-20i64..=d);
        let curve = SurfaceClass::new(d, [aj, ak, a5]);
        let value = match djk_dot_curve(&curve) {
            Ok(v) => v,
            Err(_) => {
                failures += 1;
                -1
            }
        };
        min_value = min_value.min(value);
        checks.push(CertCheck { curve, value });
    }

    let nef_certified =
        structural_ok && failures == 0 && boundary.iter().all(|c| c.value >= 0);
    CertificationReport {
        divisor: serde_json::to_value(djk_divisor(PairIndex::new(1, 2).unwrap())).unwrap(),
        seed,
        samples,
        boundary,
        checks,
        min_value,
        failures,
        nef_certified,
    }
}
