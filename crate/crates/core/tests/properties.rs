use cyclic_covers::lyapunov;
use cyclic_covers::origami::{Direction, Origami};
use cyclic_covers::params::{units, CoverParams};
use cyclic_covers::perm::{Perm4, SquarePerm};
use cyclic_covers::spin::{self, DualGraph, Z2Vec};
use cyclic_covers::strata;
use cyclic_covers::veech;
use proptest::prelude::*;

fn cover(max_n: u32) -> impl Strategy<Value = CoverParams> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..=n, 1..=n, 1..=n))
        .prop_filter_map("invalid quadruple", |(n, a1, a2, a3)| {
            let a4 = -((a1 + a2 + a3) as i64);
            CoverParams::validate(n as i64, [a1 as i64, a2 as i64, a3 as i64, a4]).ok()
        })
}

fn abelian_cover(max_half: u32) -> impl Strategy<Value = CoverParams> {
    (1..=max_half)
        .prop_flat_map(|h| (Just(2 * h), 0..h, 0..h, 0..h))
        .prop_filter_map("invalid quadruple", |(n, b1, b2, b3)| {
            let a = [2 * b1 + 1, 2 * b2 + 1, 2 * b3 + 1].map(i64::from);
            CoverParams::validate(n as i64, [a[0], a[1], a[2], -(a[0] + a[1] + a[2])]).ok()
        })
}

fn perm4() -> impl Strategy<Value = Perm4> {
    (0..24usize).prop_map(|i| Perm4::all()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validation_ignores_multiples_of_n(p in cover(40), shifts in prop::array::uniform4(-3i64..3)) {
        let n = p.n() as i64;
        let mut raw = p.a().map(i64::from);
        for (x, s) in raw.iter_mut().zip(shifts) {
            *x += s * n;
        }
        prop_assert_eq!(CoverParams::validate(n, raw), Ok(p));
    }

    #[test]
    fn scaling_by_units_gives_isomorphic_covers(p in cover(40), pick in any::<prop::sample::Index>()) {
        let us: Vec<u32> = units(p.n()).collect();
        let k = us[pick.index(us.len())];
        let q = p.scaled(k);
        prop_assert!(p.covers_isomorphic(&q).unwrap());
        prop_assert_eq!(strata::singularity_pattern(&p), strata::singularity_pattern(&q));
        prop_assert_eq!(lyapunov::sum_closed(&p), lyapunov::sum_closed(&q));
        prop_assert_eq!(p.canonical_surface_form(), q.canonical_surface_form());
    }

    #[test]
    fn dual_is_the_same_surface(p in cover(40)) {
        let d = p.dual();
        prop_assert!(p.surfaces_isomorphic(&d).unwrap());
        prop_assert_eq!(d.dual(), p);
        prop_assert_eq!(strata::singularity_pattern(&p), strata::singularity_pattern(&d));
    }

    #[test]
    fn pillow_symmetries_preserve_the_surface(p in cover(40), i in 0..4usize) {
        let q = p.permuted(&Perm4::klein()[i]);
        prop_assert!(p.surfaces_isomorphic(&q).unwrap());
        prop_assert_eq!(lyapunov::sum_closed(&p), lyapunov::sum_closed(&q));
        prop_assert_eq!(veech::veech_index(&p).unwrap().index, veech::veech_index(&q).unwrap().index);
    }

    #[test]
    fn canonical_form_is_invariant(p in cover(40), pi in perm4()) {
        let c = p.canonical_surface_form();
        prop_assert_eq!(c.canonical_surface_form(), c);
        prop_assert_eq!(p.permuted(&pi).canonical_surface_form(), c);
        prop_assert!(c.a().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn symmetries_form_a_group(p in cover(40)) {
        let group = p.symmetry_group();
        prop_assert!(group.iter().any(|s| s.k == 1 && s.pi == Perm4::IDENTITY));
        for s in &group {
            for t in &group {
                prop_assert!(group.contains(&s.compose(t, p.n())));
            }
        }
    }

    #[test]
    fn origami_passes_verification(p in cover(40)) {
        let o = Origami::build(&p);
        let r = o.verify(&p);
        prop_assert!(r.is_ok(), "{}: {:?}", p, r);
        prop_assert_eq!(o.cone_stratum(), strata::singularity_pattern(&p));
        prop_assert_eq!(o.square_count(), 2 * p.n() as usize);
        for d in [Direction::Horizontal, Direction::Vertical] {
            prop_assert_eq!(o.cylinder_decomposition(d).area(), 2 * p.n());
        }
    }

    #[test]
    fn orbit_matches_index(p in cover(40)) {
        let d = veech::veech_index(&p).unwrap();
        prop_assert_eq!(d.orbit.len() as u32, d.index);
        prop_assert_eq!(d.index * d.s3_image_order, 6);
        prop_assert_eq!(d.orbit[0], p);
        for q in &d.orbit {
            prop_assert_eq!(lyapunov::sum_closed(q), lyapunov::sum_closed(&p));
        }
    }

    #[test]
    fn general_formula_matches_closed_form(p in cover(40)) {
        prop_assert_eq!(lyapunov::sum_generic_ekz(&p), lyapunov::sum_closed(&p));
    }

    #[test]
    fn orbit_average_of_pairing_term(p in cover(40)) {
        // horizontal data of each orbit element is governed by one pairing
        let orbit = veech::orbit(&p);
        let n = p.n() as i64;
        let avg: lyapunov::Rational = orbit
            .iter()
            .map(|q| {
                let g = num_integer::gcd(q.n(), q.a()[0] + q.a()[3]) as i64;
                lyapunov::Rational::new(g * g, 2 * n)
            })
            .sum::<lyapunov::Rational>()
            / orbit.len() as i64;
        let [a1, a2, a3, a4] = p.a();
        let sq = |x: u32| (num_integer::gcd(p.n(), x) as i64).pow(2);
        let expected = lyapunov::Rational::new(sq(a1 + a2) + sq(a1 + a3) + sq(a1 + a4), 6 * n);
        prop_assert_eq!(avg, expected);
    }

    #[test]
    fn quadratic_law_on_random_classes(p in abelian_cover(12), seeds in prop::collection::vec(any::<u64>(), 2)) {
        let o = Origami::build(&p);
        let g = DualGraph::new(&o).unwrap();
        let order: Vec<usize> = (0..g.edge_count()).collect();
        let cycles = g.fundamental_cycles(&order);
        let combo = |seed: u64| {
            let mut v = Z2Vec::zeros(g.edge_count());
            for (i, c) in cycles.iter().enumerate() {
                if seed >> (i % 64) & 1 == 1 {
                    v.xor_assign(c);
                }
            }
            v
        };
        let (x, y) = (combo(seeds[0]), combo(seeds[1]));
        prop_assert!(g.is_cycle(&x) && g.is_cycle(&y));
        prop_assert_eq!(g.intersection(&x, &y), g.intersection(&y, &x));
        prop_assert_eq!(g.q_direct(&x.xor(&y)), g.q_direct(&x) ^ g.q_direct(&y) ^ g.intersection(&x, &y));
    }

    #[test]
    fn spin_is_independent_of_spanning_tree(p in abelian_cover(10), stride in 1usize..50) {
        let o = Origami::build(&p);
        let m = 2 * o.square_count();
        let stride = (stride..).find(|s| num_integer::gcd(*s, m) == 1).unwrap();
        let permuted: Vec<usize> = (0..m).map(|i| (i * stride + 3) % m).collect();
        let base: Vec<usize> = (0..m).collect();
        prop_assert_eq!(spin::spin_parity_with_order(&o, &permuted), spin::spin_parity_with_order(&o, &base));
        prop_assert_eq!(spin::spin_parity(&p), spin::spin_parity(&p.dual()));
    }

    #[test]
    fn square_perm_laws(images in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = SquarePerm::new(images).unwrap();
        let id = SquarePerm::new((0..12).collect()).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()), id.clone());
        prop_assert_eq!(p.inverse().compose(&p), id);
        let total: usize = p.cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(total, 12);
    }
}
