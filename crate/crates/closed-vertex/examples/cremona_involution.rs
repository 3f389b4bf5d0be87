//! The Cremona involution on curve classes and its lift to the line
//! blowup.
//!
//! ```bash
//! cargo run --example cremona_involution
//! ```

use closed_vertex::cremona::{anticanonical_degree, cremona_on_x, tau_star_xhat};
use closed_vertex::invariants::build_vertex_class;
use closed_vertex::lattice::{CurveClassX, CurveClassXhat, PairIndex};

fn main() {
    println!("Basis images on X:");
    let mut basis = vec![CurveClassX::h()];
    basis.extend((1..=6).map(CurveClassX::e));
    for b in &basis {
        println!("  {b:<12} ->  {}", cremona_on_x(b));
    }

    println!("\nConfiguration classes reduce:");
    for (d1, d2, d3) in [(1, 1, 1), (2, 2, 2), (2, 1, 1), (3, 2, 1)] {
        let beta = build_vertex_class(d1, d2, d3).unwrap();
        let image = cremona_on_x(&beta);
        println!("  ({d1},{d2},{d3}): {beta}  ->  {image}");
        assert_eq!(cremona_on_x(&image), beta);
        assert_eq!(anticanonical_degree(&beta), anticanonical_degree(&image));
    }

    println!("\nOn Xhat the involution exchanges the ruling of the divisor");
    println!("over each line with the one over the complementary line:");
    for p in PairIndex::ALL {
        let image = tau_star_xhat(&CurveClassXhat::f(p));
        println!("  f{p}  ->  {image}");
    }
    let f12 = CurveClassXhat::f(PairIndex::new(1, 2).unwrap());
    assert_eq!(tau_star_xhat(&tau_star_xhat(&f12)), f12);
    println!("\nApplying the lift twice returns every class unchanged.");
}
