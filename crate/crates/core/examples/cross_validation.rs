//! Every cross-check on all quadruples up to a bound (default 12).
//!
//!     cargo run --release --example cross_validation -- 20

use cyclic_covers::check::run_check;

fn main() {
    let bound = std::env::args().nth(1).map_or(12, |s| s.parse().expect("bound"));
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let summary = run_check(bound, jobs);
    print!("{}", summary.render());
    std::process::exit(if summary.all_passed() { 0 } else { 1 });
}
