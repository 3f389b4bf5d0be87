//! Intersection pairings on the two blowups.
//!
//! ```bash
//! cargo run --example lattice_pairings
//! ```

use closed_vertex::lattice::{
    intersect_div_curve_x, intersect_div_curve_xhat, intersect_div_div_x, intersect_div_div_xhat,
    section_class, CurveClassX, CurveClassXhat, DivisorClassX, DivisorClassXhat, PairIndex,
};

fn main() {
    println!("Divisor products on the six-point blowup X:");
    let h = DivisorClassX::hyperplane();
    let e1 = DivisorClassX::exceptional(1);
    let k = DivisorClassX::anticanonical();
    println!("  H.H        = {}", intersect_div_div_x(&h, &h));
    println!("  E1.E1      = {}", intersect_div_div_x(&e1, &e1));
    println!("  (-K).(-K)  = {}", intersect_div_div_x(&k, &k));
    println!("  H.h        = {}", intersect_div_curve_x(&h, &CurveClassX::h()));
    println!("  E1.e1      = {}", intersect_div_curve_x(&e1, &CurveClassX::e(1)));

    let beta = CurveClassX::new(3, [-1; 6]);
    println!("\nThe configuration class beta = {beta} is balanced: {}", beta.is_balanced());
    println!("  (-K).beta  = {}", intersect_div_curve_x(&k, &beta));

    println!("\nDivisor products on the line blowup Xhat:");
    let p12 = PairIndex::new(1, 2).unwrap();
    let hh = DivisorClassXhat::hyperplane();
    let f12 = DivisorClassXhat::line_exceptional(p12);
    println!("  H.F12      = {}", intersect_div_div_xhat(&hh, &f12));
    println!("  E1.F12     = {}", intersect_div_div_xhat(&DivisorClassXhat::exceptional(1), &f12));
    println!("  E3.F12     = {}", intersect_div_div_xhat(&DivisorClassXhat::exceptional(3), &f12));
    println!("  F12.F12    = {}", intersect_div_div_xhat(&f12, &f12));

    let s12 = section_class(p12);
    println!("\nSection class over the line through the first two points:");
    println!("  s12        = {s12}");
    println!("  pushforward to X: {}", s12.pushforward_to_x());
    println!("  F12.f12    = {}", intersect_div_curve_xhat(&f12, &CurveClassXhat::f(p12)));
    println!("  F12.s12    = {}", intersect_div_curve_xhat(&f12, &s12));

    println!("\nJSON encodings:");
    println!("  {}", serde_json::to_string(&beta).unwrap());
    println!("  {}", serde_json::to_string(&s12).unwrap());
}
