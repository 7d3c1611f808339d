use std::time::Instant;
use zetaweil::variety::{count_series, parse_variety, CountOptions};

fn main() {
    let spec = parse_variety("p=5 e=1 projective n=2\nf: x0*x2^2 - x1^3 - x1*x0^2 - x0^3\n")
        .unwrap();
    let t = Instant::now();
    let s = count_series(&spec, 8, &CountOptions::default(), None).unwrap();
    println!("counts: {:?}", s.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("elapsed: {:?}", t.elapsed());
}
