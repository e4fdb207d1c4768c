//! Veech group index from the symmetry group, the case it falls in, and
//! the SL(2,Z)-orbit of the surface.

use cyclic_covers::veech::veech_index;
use cyclic_covers::CoverParams;

fn main() {
    let examples = [
        (4, [1, 1, 1, 1]),
        (10, [1, 1, 3, 5]),
        (8, [1, 3, 5, 7]),
        (10, [1, 3, 9, 7]),
        (40, [1, 9, 5, 25]),
        (14, [1, 9, 11, 7]),
    ];
    for (n, a) in examples {
        let p = CoverParams::validate(n, a).unwrap();
        let d = veech_index(&p).expect("classification is consistent");
        let symmetries: Vec<String> = p
            .symmetry_group()
            .iter()
            .filter(|s| s.k != 1)
            .map(|s| format!("k={} {}", s.k, s.pi))
            .collect();
        let orbit: Vec<String> = d.orbit.iter().map(|q| q.to_string()).collect();
        println!("{p}: index {} ({:?})", d.index, d.case_label);
        println!("  symmetries: {}", symmetries.join(", "));
        println!("  orbit: {}", orbit.join(" "));
    }
}
