use std::sync::Arc;

use compaut::aut::{compute_aut, Strategy};
use compaut::expr::{elaborate, parse_group_expr};
use compaut::group::{GroupTable, DEFAULT_ORDER_CAP};
use compaut::structure::{derived_series, reduce, socle, solvable_radical};

fn group(name: &str) -> Arc<GroupTable> {
    elaborate(&parse_group_expr(name).unwrap(), DEFAULT_ORDER_CAP).unwrap()
}

fn sorted_images(g: &Arc<GroupTable>, s: Strategy) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = compute_aut(g, s)
        .unwrap()
        .all()
        .iter()
        .map(|a| a.images().to_vec())
        .collect();
    v.sort();
    v
}

#[test]
fn psl2_4_and_a5_have_isomorphic_automorphism_counts() {
    let a5 = compute_aut(&group("A5"), Strategy::Brute).unwrap();
    let p = compute_aut(&group("PSL2(4)"), Strategy::Brute).unwrap();
    assert_eq!(a5.len(), 120);
    assert_eq!(p.len(), 120);
    assert_eq!(a5.inner_count(), 60);
    assert_eq!(p.inner_count(), 60);
}

#[test]
fn structured_automorphisms_match_brute_force() {
    for q in [4, 5, 7, 8, 9] {
        let g = group(&format!("PSL2({q})"));
        assert_eq!(
            sorted_images(&g, Strategy::Brute),
            sorted_images(&g, Strategy::Psl2Structured),
            "PSL2({q})"
        );
    }
}

#[test]
fn product_strategy_matches_brute_force() {
    let g = group("A5 x C7");
    assert_eq!(
        sorted_images(&g, Strategy::Brute),
        sorted_images(&g, Strategy::Product)
    );
}

#[test]
fn inner_count_is_index_of_center() {
    for name in ["S4", "Q8", "D6", "SL2(5)", "A5 x C2", "C2 x C4", "SL2(7)"] {
        let g = group(name);
        let aut = compute_aut(&g, Strategy::Auto).unwrap();
        let z = (0..g.order())
            .filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x)))
            .count();
        assert_eq!(aut.inner_count(), g.order() / z, "{name}");
        assert_eq!(aut.len() % aut.inner_count(), 0, "{name}");
        assert_eq!(
            aut.coset_reps().len(),
            aut.len() / aut.inner_count(),
            "{name}"
        );
    }
}

#[test]
fn every_automorphism_is_multiplicative() {
    for name in ["A5", "S4", "Q8", "A5 x C2", "C3 x C3", "PSL2(7)"] {
        let g = group(name);
        for alpha in compute_aut(&g, Strategy::Auto).unwrap().all() {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(
                        alpha.apply(g.mul(a, b)),
                        g.mul(alpha.apply(a), alpha.apply(b)),
                        "{name}"
                    );
                }
            }
        }
    }
}

#[test]
fn known_automorphism_orders() {
    for (name, n) in [
        ("C12", 4),
        ("Q8", 24),
        ("C2 x C2", 6),
        ("C3 x C3", 48),
        ("D4", 8),
        ("S4", 24),
        ("A4", 24),
    ] {
        assert_eq!(
            compute_aut(&group(name), Strategy::Auto).unwrap().len(),
            n,
            "{name}"
        );
    }
}

#[test]
fn radical_and_socle() {
    let g = group("A5 x C6");
    let r = solvable_radical(&g).unwrap();
    assert_eq!(r.order(), 6);
    // C6 is central: exactly the elements commuting with everything
    assert!(r
        .members()
        .iter()
        .all(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))));
    let red = reduce(&g).unwrap();
    assert_eq!(red.to_quotient.target().order(), 60);
    assert_eq!(red.socle.order(), 60);
    let sp = red.simple_power.unwrap();
    assert_eq!((sp.factor_order, sp.exponent), (60, 1));

    assert_eq!(socle(&group("S5")).unwrap().order(), 60);
    assert_eq!(socle(&group("S4")).unwrap().order(), 4);
    assert_eq!(solvable_radical(&group("SL2(5)")).unwrap().order(), 2);
    let orders: Vec<usize> = derived_series(&group("S4"))
        .iter()
        .map(|s| s.order())
        .collect();
    assert_eq!(orders, vec![24, 12, 4, 1]);
}

#[test]
fn lattice_limit_is_reported() {
    let g = group("A5 x A5");
    assert!(matches!(
        reduce(&g),
        Err(compaut::structure::StructureError::LatticeTooLarge { order: 3600, .. })
    ));
}
