//! Horizontal and vertical cylinder decompositions. Horizontal cylinders
//! all have width 2N/gcd(N, a1+a4) and total height gcd(N, a1+a4).

use cyclic_covers::origami::{predicted_horizontal_cylinders, Direction, Origami};
use cyclic_covers::CoverParams;

fn main() {
    for (n, a) in [(6, [1, 1, 1, 3]), (8, [1, 3, 5, 7]), (10, [1, 1, 3, 5]), (12, [1, 5, 7, 11])] {
        let p = CoverParams::validate(n, a).unwrap();
        let o = Origami::build(&p);
        let (w, h) = predicted_horizontal_cylinders(&p);
        println!("{p}  predicted: width {w}, total height {h}");
        for d in [Direction::Horizontal, Direction::Vertical] {
            let dec = o.cylinder_decomposition(d);
            let cyl: Vec<String> = dec.cylinders.iter().map(|c| format!("{}x{}", c.width, c.height)).collect();
            println!("  {d:?}: {}  (area {}, sum h/w = {})", cyl.join(" "), dec.area(), dec.modulus_sum());
        }
    }
}
