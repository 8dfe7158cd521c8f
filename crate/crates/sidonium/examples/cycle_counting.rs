//! Exact cycle counting: Hamilton cycles of the layered digraphs against
//! their closed form, Eulerian circuits through the arborescence
//! determinant, and the transition vectors tying the two together.
//!
//! Run with: cargo run --example cycle_counting

use sidonium::digraph::counting::{
    best_eulerian_count, bidirected_complete_bipartite, count_hamilton_cycles,
};
use sidonium::digraph::glm::{
    glm, glm_hamilton_formula, transition_vector_count, transition_vectors,
};

fn main() -> sidonium::Result<()> {
    println!("Hamilton cycles of G(r,m), counted vs closed form:");
    for (r, m) in [(2usize, 2usize), (3, 2), (2, 3)] {
        let counted = count_hamilton_cycles(&glm(r, m)?, 20)?;
        let formula = glm_hamilton_formula(r as u64, m as u64)?;
        println!("  G({r},{m}): counted {counted}, formula {formula}");
        assert_eq!(counted, formula);
    }

    println!("\nEulerian circuits (fixed starting arc) of bidirected K_mm:");
    for m in [2usize, 3, 4] {
        let count = best_eulerian_count(&bidirected_complete_bipartite(m, m))?;
        let formula = transition_vector_count(m as u64);
        println!("  m = {m}: {count} (transition-vector formula {formula})");
        assert_eq!(count, formula);
    }

    println!("\nthe four transition vectors at m = 2:");
    for t in transition_vectors(2)? {
        let word: String =
            t.f.iter()
                .zip(&t.g)
                .map(|(x, y)| format!("X{x}Y{y}"))
                .collect();
        println!("  {word}");
    }
    Ok(())
}
