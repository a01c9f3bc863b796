use std::sync::{Arc, OnceLock};

use ads_core::ads::ads;
use ads_core::bitset::ElemSet;
use ads_core::catalog::{Catalog, Entry};
use ads_core::format;
use ads_core::iso::are_isomorphic;
use ads_core::module::{quotient_module, submodule_module, ModRef};
use ads_core::structure::is_completely_ads;
use ads_core::submodule::{
    complements_of, is_closed, is_essential, is_small, is_summand, radical, socle,
    submodule_lattice, Submodule,
};
use ads_core::Guards;
use proptest::prelude::*;

fn entries() -> &'static [Entry] {
    static E: OnceLock<Vec<Entry>> = OnceLock::new();
    E.get_or_init(|| Catalog::load("default").unwrap().entries(32).unwrap())
}

fn lattice(m: &ModRef) -> Arc<Vec<Submodule>> {
    submodule_lattice(m, &Guards::default()).unwrap()
}

fn pick(m: &ModRef, k: usize) -> Submodule {
    let lat = lattice(m);
    lat[k % lat.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_is_closed_under_sum_and_meet(i in 0usize..1000, a in 0usize..1000, b in 0usize..1000) {
        let m = &entries()[i % entries().len()].module;
        let lat = lattice(m);
        let (x, y) = (pick(m, a), pick(m, b));
        prop_assert!(lat.contains(&x.sum(m, &y)));
        prop_assert!(lat.contains(&x.intersection(m, &y)));
        prop_assert_eq!(x.sum(m, &y).size() * x.intersection(m, &y).size(), x.size() * y.size());
    }

    #[test]
    fn predicates_match_definitions(i in 0usize..1000, a in 0usize..1000) {
        let m = &entries()[i % entries().len()].module;
        let lat = lattice(m);
        let n = pick(m, a);
        let whole = m.size();
        let essential = lat.iter().all(|k| k.is_zero() || !k.is_independent_of(&n));
        prop_assert_eq!(is_essential(m, &n).unwrap(), essential);
        let small = lat.iter().all(|p| p.size() == whole || n.sum(m, p).size() != whole);
        prop_assert_eq!(is_small(m, &n).unwrap(), small);
        let summand = lat.iter().any(|t| n.is_complementary(m, t));
        prop_assert_eq!(is_summand(m, &n).unwrap(), summand);
        let closed = !lat.iter().any(|k| {
            k.size() > n.size() && n.is_subset(k) && lat.iter().all(|x| !x.is_subset(k) || x.is_zero() || !x.is_independent_of(&n))
        });
        prop_assert_eq!(is_closed(m, &n).unwrap(), closed);
    }

    #[test]
    fn complements_are_maximal_independent(i in 0usize..1000, a in 0usize..1000) {
        let m = &entries()[i % entries().len()].module;
        let lat = lattice(m);
        let n = pick(m, a);
        let cs = complements_of(m, &n, &Guards::default()).unwrap();
        prop_assert!(!cs.is_empty());
        for c in &cs {
            prop_assert!(c.is_independent_of(&n));
            prop_assert!(!lat.iter().any(|d| d.size() > c.size() && c.is_subset(d) && d.is_independent_of(&n)));
            // A complement of n is essential over its sum with n.
            prop_assert!(is_essential(m, &c.sum(m, &n)).unwrap());
        }
    }

    #[test]
    fn completely_ads_passes_to_subfactors(i in 0usize..1000, a in 0usize..1000, b in 0usize..1000) {
        let g = Guards::default();
        let m = &entries()[i % entries().len()].module;
        prop_assume!(m.size() <= 16 && is_completely_ads(m, &g).unwrap());
        let (x, y) = (pick(m, a), pick(m, b));
        let (big, small) = (x.sum(m, &y), x.intersection(m, &y));
        let emb = submodule_module(m, &big);
        let inner = ElemSet::from_indices(emb.module.size(), small.members().iter().filter_map(|e| emb.pull(e)));
        let inner = Submodule::from_members(&emb.module, inner).unwrap();
        let (q, _) = quotient_module(&emb.module, &inner);
        prop_assert!(ads(&q, &g).unwrap());
    }

    #[test]
    fn format_round_trip_and_generator_order(i in 0usize..1000, rot in 0usize..8) {
        let g = Guards::default();
        let m = &entries()[i % entries().len()].module;
        let parsed = format::parse(&format::write(m)).unwrap();
        prop_assert_eq!(parsed.module.orders(), m.orders());
        prop_assert_eq!(parsed.module.action(), m.action());
        let k = m.generator_count();
        let perm: Vec<usize> = (0..k).map(|j| (j + rot) % k).collect();
        let p: ModRef = Arc::new(m.permute_generators(&perm).unwrap());
        prop_assert!(are_isomorphic(m, &p));
        prop_assert_eq!(ads(m, &g).unwrap(), ads(&p, &g).unwrap());
        prop_assert_eq!(socle(&p).size(), socle(m).size());
        prop_assert_eq!(radical(&p).size(), radical(m).size());
    }
}
