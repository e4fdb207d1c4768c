//! Classes with maximally degenerate spectra up to N = 20.

use cyclic_covers::search::{search, PoleFilter, SearchFilter, SearchOptions};

fn main() {
    let abelian = SearchOptions::new(20, SearchFilter::DegenerateAbelian);
    let mut holomorphic = SearchOptions::new(20, SearchFilter::DegenerateMinus);
    holomorphic.poles = PoleFilter::Holomorphic;
    let mut meromorphic = SearchOptions::new(20, SearchFilter::DegenerateMinus);
    meromorphic.poles = PoleFilter::Meromorphic;
    meromorphic.geff_min = Some(1);
    let plus = SearchOptions::new(8, SearchFilter::DegeneratePlus);

    for (title, opts) in [
        ("sum_abelian = 1, g >= 2", abelian),
        ("sum_minus = 1, holomorphic, g_eff >= 2", holomorphic),
        ("sum_minus = 1, meromorphic, g_eff >= 1", meromorphic),
        ("sum_plus = 0, N <= 8", plus),
    ] {
        let res = search(&opts);
        println!("{title}: {} classes", res.hits.len());
        for h in &res.hits {
            println!("  {:<16} {:<20} g={} g_eff={:?}", h.params.to_string(), h.stratum, h.genus, h.g_eff);
        }
    }
}
