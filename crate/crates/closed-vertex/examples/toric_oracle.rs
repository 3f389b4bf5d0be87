//! The torus-invariant curve graph and the exhaustive decomposition
//! oracle.
//!
//! ```bash
//! cargo run --example toric_oracle
//! ```

use closed_vertex::toric::{
    enumerate_decompositions, invariant_curve_graph, verify_vertex_support, ToricCurveClass,
};

fn main() {
    let graph = invariant_curve_graph();
    println!(
        "Invariant curve graph: {} fixed points, {} invariant curves",
        graph.vertices().len(),
        graph.edges().len()
    );
    for (i, edge) in graph.edges().iter().enumerate() {
        println!(
            "  edge {i:>2}: {:<10} -- {:<10}  {}",
            graph.vertex_name(edge.ends[0]),
            graph.vertex_name(edge.ends[1]),
            edge.class
        );
    }

    println!("\nDecompositions of small classes (all / connected):");
    for target in [
        ToricCurveClass::central_component(1),
        ToricCurveClass::new(0, [1, 0, 0], [0; 3]),
        ToricCurveClass::new(0, [0; 3], [1, 0, 0]),
        ToricCurveClass::vertex_target(1, 1, 1),
    ] {
        let all = enumerate_decompositions(graph, &target, false).unwrap();
        let connected = enumerate_decompositions(graph, &target, true).unwrap();
        println!("  {:<24} {:>3} / {}", target.to_string(), all.len(), connected.len());
    }

    println!("\nSupport certificates:");
    for (d1, d2, d3) in [(1, 1, 1), (2, 1, 1), (3, 3, 3)] {
        let cert = verify_vertex_support(d1, d2, d3).unwrap();
        println!(
            "  degrees ({d1},{d2},{d3}): verified = {}, {} connected decomposition(s)",
            cert.verified,
            cert.decompositions.len()
        );
        for dec in &cert.decompositions {
            for edge in dec.support() {
                println!(
                    "      {} x ({})",
                    dec.multiplicity(edge),
                    graph.edges()[edge].class
                );
            }
        }
    }
}
