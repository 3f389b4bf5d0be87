//! Seeded nef certifications for the two divisors the reduction relies on.
//!
//! ```bash
//! cargo run --example nef_certificates
//! ```

use closed_vertex::nef::{
    certify_anticanonical, certify_pair_divisors, dp6_effective_generators, is_nef_on_dp6,
    SurfaceClass,
};

fn main() {
    println!("Effective-cone generators of the three-point plane blowup:");
    for g in dp6_effective_generators() {
        println!("  {g}");
    }

    println!("\nNef tests on that surface:");
    for class in [
        SurfaceClass::new(2, [-1, -1, -1]),
        SurfaceClass::new(1, [-1, 0, 0]),
        SurfaceClass::new(0, [1, 0, 0]),
    ] {
        println!("  {:<18} nef = {}", class.to_string(), is_nef_on_dp6(&class).unwrap());
    }

    let samples = 10_000;
    let seed = 7;

    let report = certify_anticanonical(samples, seed);
    println!("\nAnticanonical divisor on the six-point blowup:");
    println!("  divisor   {}", report.divisor);
    println!("  samples   {} (seed {})", report.samples, report.seed);
    println!("  failures  {}", report.failures);
    println!("  min value {}", report.min_value);
    println!("  certified {}", report.nef_certified);

    let report = certify_pair_divisors(samples, seed);
    println!("\nPair divisors on the line blowup:");
    println!("  divisor   {}", report.divisor);
    println!("  samples   {} (seed {})", report.samples, report.seed);
    println!("  failures  {}", report.failures);
    println!("  min value {}", report.min_value);
    println!("  certified {}", report.nef_certified);
}
