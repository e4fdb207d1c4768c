//! Full JSON report of one cover.
//!
//!     cargo run --example describe_cover -- 6 1 1 1 3

use cyclic_covers::report::{describe, DescribeOptions};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("integer argument"))
        .collect();
    let (n, a) = match args.as_slice() {
        [n, a1, a2, a3, a4] => (*n, [*a1, *a2, *a3, *a4]),
        [] => (6, [1, 1, 1, 3]),
        _ => panic!("usage: describe_cover N a1 a2 a3 a4"),
    };
    match describe(n, a, DescribeOptions::default()) {
        Ok(report) => {
            print!("{}", report.to_text());
            println!("{}", report.to_json());
        }
        Err(e) => eprintln!("{}: {e}", e.code()),
    }
}
