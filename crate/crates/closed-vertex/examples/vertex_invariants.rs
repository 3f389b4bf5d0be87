//! Local invariants of the triple-point configuration, with reduction
//! traces.
//!
//! ```bash
//! cargo run --example vertex_invariants
//! ```

use closed_vertex::invariants::{
    closed_vertex_invariant, fp_invariant, ReductionOutcome, ReductionTrace, VertexDegrees,
};

fn main() {
    let cases = [
        (0, 1, 1, 1),
        (0, 2, 1, 1),
        (1, 2, 2, 2),
        (2, 1, 1, 0),
        (3, 4, 0, 0),
        (2, 3, 3, 3),
    ];
    for (g, d1, d2, d3) in cases {
        let v = VertexDegrees::new(g, d1, d2, d3).unwrap();
        let result = closed_vertex_invariant(&v);
        println!(
            "N^{g}_({d1},{d2},{d3}) = {}/{}",
            result.value.numer(),
            result.value.denom()
        );
        match &result.trace {
            ReductionTrace::Direct { degree } => {
                println!("    closed form applied directly at degree {degree}");
            }
            ReductionTrace::Cremona {
                initial,
                transformed,
                outcome,
            } => {
                println!("    class      {initial}");
                println!("    transform  {transformed}");
                match outcome {
                    ReductionOutcome::Witness { witness } => {
                        println!("    vanishes: multiplicity a_{witness} is negative");
                    }
                    ReductionOutcome::Reduced { reduced_degree } => {
                        println!(
                            "    reduces to a degree-{reduced_degree} cover of a single (-1,-1) curve"
                        );
                    }
                }
            }
        }
    }

    println!("\nSingle-curve contributions |B_2g (2g-1)| / (2g)! d^(2g-3):");
    for g in 0..=6u32 {
        let v = fp_invariant(g, 2).unwrap();
        println!("  g={g}, d=2: {}/{}", v.numer(), v.denom());
    }
}
