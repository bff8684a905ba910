mod common;

use hypercover::search::{enumerate_hk, random_hypergraph, random_linear_two_regular};
use hypercover::solve::{ec_t, gamma_t, tau, tau_t};
use hypercover::transform::{dual, family_fk, family_fk_star, onh, two_section};

#[test]
fn total_domination_three_ways() {
    for seed in 0..120 {
        let h = common::mixed(3 + seed as usize % 8, 2 + seed as usize % 7, 2..=4, seed);
        let direct = gamma_t(&h).unwrap().value;
        assert_eq!(tau(&onh(&h).unwrap()).unwrap().value, direct, "seed {seed}");
        assert_eq!(gamma_t(&two_section(&h).to_hypergraph()).unwrap().value, direct, "seed {seed}");
    }
}

#[test]
fn dual_edge_cover_equals_total_transversal() {
    for seed in 0..60 {
        let k = 3 + seed as usize % 2;
        let m = if k == 3 { 4 + 2 * (seed as usize % 3) } else { 5 + seed as usize % 4 };
        let h = random_linear_two_regular(k, m, seed).unwrap();
        assert_eq!(tau_t(&h).unwrap().value, ec_t(&dual(&h).unwrap()).unwrap().value, "seed {seed}");
    }
}

#[test]
fn families_are_tight() {
    for k in 2..=4 {
        let bases: Vec<_> = enumerate_hk(k, k + 2, 3).unwrap().map(Result::unwrap).take(4).collect();
        assert!(!bases.is_empty());
        for base in bases {
            let f = family_fk(&base, k).unwrap();
            let h = &f.hypergraph;
            assert!(h.class_check().in_class(k));
            assert_eq!(gamma_t(h).unwrap().value, f.expected_gamma_t());
            assert_eq!(f.expected_gamma_t() * (k + 1), 2 * h.n());
        }
    }
    for k in 3..=4 {
        let mut found = 0;
        for seed in 0..200 {
            let Ok(base) = random_hypergraph(k, k + 3, 3, seed, true) else { continue };
            let Ok(f) = family_fk_star(&base, k) else { continue };
            let h = &f.hypergraph;
            assert!(h.class_check().in_hk_star);
            assert_eq!(gamma_t(h).unwrap().value, f.expected_gamma_t());
            assert_eq!(f.expected_gamma_t() * (k + 2), 2 * h.n());
            found += 1;
            if found == 3 {
                break;
            }
        }
        assert_eq!(found, 3, "k = {k}");
    }
}
