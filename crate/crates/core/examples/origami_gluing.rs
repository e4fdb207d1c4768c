//! The square-tiled surface behind a cover: neighbour permutations, cone
//! points found by walking around corners, and the verification report.

use cyclic_covers::origami::{Direction, Origami};
use cyclic_covers::CoverParams;

fn main() {
    for (n, a) in [(6, [1, 1, 1, 3]), (4, [1, 3, 2, 2]), (5, [2, 1, 1, 1])] {
        let p = CoverParams::validate(n, a).unwrap();
        let o = Origami::build(&p);
        println!("{p}: {} squares, {:?}", o.square_count(), o.kind());
        println!("  pi_h = {}", o.cycle_string(Direction::Horizontal));
        println!("  pi_v = {}", o.cycle_string(Direction::Vertical));
        for v in o.vertices().iter().filter(|v| !v.is_regular()) {
            println!(
                "  cone point over {:?}: angle {}π/2 through {} corners",
                v.label,
                v.quarter_turns(),
                v.slots.len()
            );
        }
        let r = o.verify(&p).expect("construction is consistent");
        println!(
            "  stratum {} genus {} trivial holonomy {}",
            o.cone_stratum(),
            r.genus,
            r.holonomy_trivial
        );
    }
}
