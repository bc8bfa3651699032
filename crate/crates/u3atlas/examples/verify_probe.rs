//! Timing probe: run the full per-entry verification for the spec strings
//! given on the command line, printing a timing breakdown.

use std::time::Instant;

fn main() {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    for s in specs {
        let spec: u3atlas::catalog::SeriesSpec = s.parse().expect("spec");
        let t0 = Instant::now();
        let g = u3atlas::catalog::build(&spec).expect("build");
        let t1 = Instant::now();
        let classes = g.conjugacy_classes();
        let t2 = Instant::now();
        let profile = u3atlas::chardeg::character_degrees(&g);
        let t3 = Instant::now();
        let monomial = g.monomial_class();
        let t4 = Instant::now();
        let cyclic = g.has_cyclic_direct_factor();
        let t5 = Instant::now();
        println!(
            "{s}: order={} classes={} profile={:?} {monomial:?} cyclic={cyclic:?}",
            g.order(),
            classes.count(),
            profile.map(|p| p.to_string()),
        );
        println!(
            "  build={:.2}s classes={:.2}s degrees={:.2}s monomial={:.2}s cyclic={:.2}s",
            (t1 - t0).as_secs_f64(),
            (t2 - t1).as_secs_f64(),
            (t3 - t2).as_secs_f64(),
            (t4 - t3).as_secs_f64(),
            (t5 - t4).as_secs_f64(),
        );
    }
}
