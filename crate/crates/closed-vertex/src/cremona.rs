//! The Cremona involution on curve classes.
//!
//! The standard Cremona transformation of P^3 inverts all four coordinates.
//! Blowing up the four coordinate points and the six lines between them
//! resolves it to an automorphism of `Xhat`; two extra fixed points are
//! blown up as the fifth and sixth centers and are simply carried along.
//! On the curve lattice of the six-point blowup `X` the induced involution
//! acts, in multiplicities `beta = d*h - sum a_i e_i`, by
//!
//! ```text
//! d'   = 3d - 2(a_1 + a_2 + a_3 + a_4)
//! a_i' = d - (sum of the other three of a_1..a_4)    for i = 1..4
//! a_5' = a_5,  a_6' = a_6.
//! ```
//!
//! It preserves balance (`2d = sum a_i`) and the anticanonical degree.

use num_bigint::BigInt;

use crate::lattice::{section_class, CurveClassX, CurveClassXhat, PairIndex};

/// Image of a curve class on `X` under the Cremona involution. Defined on
/// the whole lattice; no balance condition is assumed or enforced.
pub fn cremona_on_x(c: &CurveClassX) -> CurveClassX {
    // In signed coefficients c_i = -a_i the equations read
    //   d'   = 3d + 2(c_1 + c_2 + c_3 + c_4)
    //   c_i' = -d - (sum of the other three of c_1..c_4)   for i = 1..4.
    let front: BigInt = c.c[..4].iter().sum();
    let mut out = c.clone();
    out.d = &c.d * 3i64 + &front * 2i64;
    for i in 0..4 {
        out.c[i] = -&c.d - (&front - &c.c[i]);
    }
    out
}

/// Lift of the involution to the curve lattice of `Xhat`.
///
/// On classes with zero fiber part it agrees with [`cremona_on_x`] through
/// lift and pushforward. The resolved map carries the ruled divisor over
/// the line `l_jk` onto the one over the complementary line `l_j'k'`,
/// exchanging rulings, so the fiber class `f_jk` maps to the *section*
/// class `s_j'k'` (and `s_jk` back to `f_j'k'`), which makes the lift an
/// involution on the whole lattice.
pub fn tau_star_xhat(c: &CurveClassXhat) -> CurveClassXhat {
    let mut out = cremona_on_x(&c.pushforward_to_x()).lift_to_xhat();
    for p in PairIndex::ALL {
        let phi = c.phi(p);
        if !num_traits::Zero::is_zero(phi) {
            out = out.add(&section_class(p.complement()).scale(phi.clone()));
        }
    }
    out
}

/// Degree of a curve class against the anticanonical divisor
/// `4H - 2(E_1 + ... + E_6)`: equals `4d + 2 sum_i c_i`, and vanishes
/// exactly on balanced classes.
pub fn anticanonical_degree(c: &CurveClassX) -> BigInt {
    &c.d * 4i64 + c.c.iter().sum::<BigInt>() * 2i64
}
