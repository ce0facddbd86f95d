//! Optimizes the amplitude for all five solids at the fabrication edge length
//! and prints a summary line per solid.

use std::time::Instant;

use spheretopo::metrics::{MetricsOptions, DEFAULT_ALPHA};
use spheretopo::optimize::{optimize_all, DEFAULT_EDGE_LENGTH, DEFAULT_RESOLUTION};

fn main() -> spheretopo::Result<()> {
    let start = Instant::now();
    let results = optimize_all(
        DEFAULT_EDGE_LENGTH,
        DEFAULT_ALPHA,
        DEFAULT_RESOLUTION,
        &MetricsOptions::default(),
    )?;
    for r in &results {
        let dip = r
            .trace
            .iter()
            .filter(|t| t.feasible)
            .min_by(|a, b| a.eps_inter.total_cmp(&b.eps_inter))
            .map_or(f64::NAN, |t| t.amplitude);
        println!(
            "{:<13} A*={:.4} J*={:.5} feasible=[{:.3}, {:.3}] eps_inter minimum at A={:.3}",
            r.solid.name(),
            r.a_star,
            r.j_star,
            r.feasible_range[0],
            r.feasible_range[1],
            dip
        );
    }
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
