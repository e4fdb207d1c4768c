//! Spin parity as an Arf invariant, with the homology data behind it.

use cyclic_covers::origami::Origami;
use cyclic_covers::spin::{arf_data, spin_parity};
use cyclic_covers::strata::singularity_pattern;
use cyclic_covers::CoverParams;

fn main() {
    for (n, a) in [(2, [1, 1, 1, 1]), (6, [1, 1, 1, 3]), (4, [1, 1, 1, 1]), (12, [1, 1, 3, 7]), (10, [1, 1, 3, 5])] {
        let p = CoverParams::validate(n, a).unwrap();
        let parity = spin_parity(&p);
        println!("{p} {}: {parity:?}", singularity_pattern(&p));
        let o = Origami::build(&p);
        let order: Vec<usize> = (0..2 * o.square_count()).collect();
        if let Ok(d) = arf_data(&o, &order) {
            println!(
                "  {} fundamental cycles, {} symplectic pairs, radical of dimension {}",
                d.cycles.len(),
                d.pairs.len(),
                d.radical.len()
            );
        }
    }
}
