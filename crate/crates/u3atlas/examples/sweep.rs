//! Timing probe: build every catalog entry sequentially and print the
//! closure time and order, slowest last summary included.

use std::time::Instant;

fn main() {
    let entries = u3atlas::catalog::enumerate(2000);
    let mut timings: Vec<(String, f64)> = Vec::new();
    for e in &entries {
        let t = Instant::now();
        let g = u3atlas::catalog::build(&e.spec).expect("build");
        let dt = t.elapsed().as_secs_f64();
        let ok = g.order() as u64 == e.expected_order;
        println!(
            "{:9.3}s order={:5} expected={:5} {} {}",
            dt,
            g.order(),
            e.expected_order,
            if ok { "ok" } else { "MISMATCH" },
            e.spec
        );
        timings.push((e.spec.to_string(), dt));
    }
    timings.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    println!("slowest:");
    for (spec, dt) in timings.iter().take(15) {
        println!("  {dt:9.3}s {spec}");
    }
}
