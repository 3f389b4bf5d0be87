//! Tabulate invariants for all genus and degree bounds.
//!
//! ```bash
//! cargo run --example invariant_table
//! ```

use closed_vertex::invariants::invariant_table;

fn main() {
    let (g_max, d_max) = (2, 3);
    println!("g,d1,d2,d3,num,den");
    for row in invariant_table(g_max, d_max) {
        println!(
            "{},{},{},{},{},{}",
            row.g,
            row.degrees[0],
            row.degrees[1],
            row.degrees[2],
            row.result.value.numer(),
            row.result.value.denom()
        );
    }
}
