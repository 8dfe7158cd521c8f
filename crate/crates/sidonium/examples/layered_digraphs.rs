//! The layered digraph family: every semidegree equals m on (2l-2)m²
//! vertices, yet no two internally disjoint directed l-paths share both
//! endpoints.
//!
//! Run with: cargo run --example layered_digraphs

use sidonium::digraph::glm::{glm, glm_vertex, GlmSide};
use sidonium::digraph::patterns::find_cll;
use sidonium::digraph::random::{layered_subgraph, random_induced_subgraph, Eps};
use sidonium::digraph::{degree_profile, find_unbalanced_closed_walk, Digraph};

fn main() -> sidonium::Result<()> {
    for (l, m) in [(2usize, 2usize), (3, 2), (3, 3), (4, 2)] {
        let d = glm(l, m)?;
        let p = degree_profile(&d);
        let free = find_cll(&d, l, 1 << 24)?.is_none();
        println!(
            "G({l},{m}): {:>2} vertices, semidegrees {}..{}, {l}-path-pair free: {free}",
            d.n(),
            p.min_semidegree(),
            p.max_out.max(p.max_in),
        );
    }

    // one adversarial arc destroys the freeness
    let d = glm(3, 2)?;
    let d2 = d.with_arc(
        glm_vertex(3, 2, GlmSide::W, 0, 1, 1),
        glm_vertex(3, 2, GlmSide::W, 1, 2, 1),
    )?;
    let witness = find_cll(&d2, 3, 1 << 24)?.expect("extra arc closes a pair");
    println!(
        "\nG(3,2) plus one arc: disjoint 3-paths {:?} and {:?}",
        witness.paths[0], witness.paths[1]
    );

    // random layering kills every short unbalanced closed walk
    let mut arcs = Vec::new();
    for u in 0..8 {
        for v in 0..8 {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    let k8 = Digraph::new(8, arcs)?;
    let layered = layered_subgraph(&k8, 2, Eps::new(1, 2)?, 11, 500)?;
    println!(
        "\nlayered bidirected K8: kept {} arcs in {} tries, degree target met: {}",
        layered.digraph.arc_count(),
        layered.tries,
        layered.met
    );
    println!(
        "  unbalanced closed walk of length <= 3: {:?}",
        find_unbalanced_closed_walk(&layered.digraph, 3).map(|w| w.vertices)
    );

    // random induced subgraphs keep proportional minimum degrees
    let d = glm(2, 4)?;
    let induced = random_induced_subgraph(&d, 24, Eps::new(1, 2)?, 5, 20_000)?;
    let p = degree_profile(&induced.digraph);
    println!(
        "\nG(2,4) induced on 24 of 32 vertices ({} tries): min degrees {} out, {} in",
        induced.tries, p.min_out, p.min_in
    );
    Ok(())
}
