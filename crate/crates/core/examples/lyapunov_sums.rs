//! Sums of Lyapunov exponents two ways: the gcd closed forms, and the
//! general formula evaluated from cone angles and orbit cylinders.

use cyclic_covers::lyapunov::{ekz_inputs, format_rational, sum_closed, sum_generic_ekz, Rational};
use cyclic_covers::CoverParams;

fn show(r: Option<Rational>) -> String {
    r.map(|x| format_rational(&x)).unwrap_or_else(|| "-".into())
}

fn main() {
    println!("{:<16} {:>8} {:>8} {:>8}   {:>8} {:>8} {:>8}", "cover", "abelian", "plus", "minus", "kappa", "cyl", "odd");
    for (n, a) in [
        (4, [1, 1, 1, 1]),
        (6, [1, 1, 1, 3]),
        (8, [1, 3, 5, 7]),
        (3, [3, 1, 1, 1]),
        (5, [2, 1, 1, 1]),
        (8, [7, 4, 3, 2]),
        (12, [1, 2, 4, 5]),
    ] {
        let p = CoverParams::validate(n, a).unwrap();
        let closed = sum_closed(&p);
        assert_eq!(closed, sum_generic_ekz(&p));
        let i = ekz_inputs(&p);
        println!(
            "{:<16} {:>8} {:>8} {:>8}   {:>8} {:>8} {:>8}",
            p.to_string(),
            show(closed.sum_abelian),
            show(closed.sum_plus),
            show(closed.sum_minus),
            format_rational(&i.kappa_term),
            format_rational(&i.orbit_cyl_term),
            format_rational(&i.odd_pole_term),
        );
    }
}
