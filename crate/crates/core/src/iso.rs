//! Isomorphism testing.

use std::collections::BTreeMap;

use crate::module::{submodule_module, ModRef};
use crate::morphism::{hom_set, Morphism};
use crate::snf::Subgroup;
use crate::submodule::{radical, socle};

/// Number of elements of each additive order.
fn order_profile(m: &ModRef) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for x in 0..m.size() {
        *out.entry(m.radix().element_order(x)).or_insert(0) += 1;
    }
    out
}

/// An injective map `m → n`, if one exists.
///
/// A map is injective iff it is injective on the socle, so the search runs over
/// the restrictions of `Hom(m, n)` to `soc(m)`.
pub fn find_embedding(m: &ModRef, n: &ModRef) -> Option<Morphism> {
    if **m.ring() != **n.ring() || m.size() > n.size() {
        return None;
    }
    let hom = hom_set(m, n).ok()?;
    let soc = submodule_module(m, &socle(m));
    let s = &soc.module;
    let nord = n.orders();
    let moduli: Vec<u32> = (0..s.generator_count())
        .flat_map(|_| nord.iter().copied())
        .collect();
    let basis = hom.basis();
    let restricted: Vec<Vec<u32>> = basis.iter().map(|f| f.restrict(&soc).key()).collect();
    let group = Subgroup::generated(&moduli, &restricted);
    let k = n.generator_count();
    let nonzero: Vec<Vec<u32>> = (1..s.size()).map(|x| s.coords(x)).collect();
    for v in group.elements() {
        let images: Vec<Vec<u32>> = v
            .chunks(k.max(1))
            .map(|c| c.to_vec())
            .take(s.generator_count())
            .collect();
        let psi = Morphism::from_images_unchecked(s.clone(), n.clone(), images);
        if nonzero
            .iter()
            .all(|x| psi.apply_coords(x).iter().any(|&c| c != 0))
        {
            return Some(lift(&hom, &basis, &soc, &v));
        }
    }
    None
}

/// Some map in `hom` whose restriction along `soc` has key `target`.
fn lift(
    hom: &crate::morphism::HomSet,
    basis: &[Morphism],
    soc: &crate::module::Embedded,
    target: &[u32],
) -> Morphism {
    let mut sys = crate::snf::Congruences::new(hom.orders().iter().map(|&o| o as u32).collect());
    let n = hom.target();
    let k = n.generator_count();
    let rows: Vec<Vec<u32>> = basis.iter().map(|f| f.restrict(soc).key()).collect();
    for (pos, &t) in target.iter().enumerate() {
        let modulus = n.orders()[pos % k.max(1)];
        sys.push(
            rows.iter().map(|r| r[pos] as i64).collect(),
            modulus,
            t as i64,
        );
    }
    let sol = sys.solve().expect("restriction lies in the image");
    hom.combine(&sol.particular.iter().map(|&c| c as u64).collect::<Vec<_>>())
}

/// `m ≅ n`, pruned by cheap invariants first.
pub fn are_isomorphic(m: &ModRef, n: &ModRef) -> bool {
    find_isomorphism(m, n).is_some()
}

pub fn find_isomorphism(m: &ModRef, n: &ModRef) -> Option<Morphism> {
    if **m.ring() != **n.ring() || m.size() != n.size() {
        return None;
    }
    if order_profile(m) != order_profile(n)
        || radical(m).size() != radical(n).size()
        || socle(m).size() != socle(n).size()
    {
        return None;
    }
    find_embedding(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::direct_sum;
    use crate::module::{quotient_module, regular_module};
    use crate::rings::builtin_ring;
    use crate::submodule::Submodule;
    use std::sync::Arc;

    #[test]
    fn basic_isomorphisms() {
        let r4 = Arc::new(builtin_ring("zmod", &[4]).unwrap());
        let z4 = regular_module(&r4);
        assert!(are_isomorphic(&z4, &z4));
        let (z2, _) = quotient_module(&z4, &Submodule::span(&z4, &[2]));
        let (z2z2, _) = direct_sum(&[z2.clone(), z2]).unwrap();
        assert!(!are_isomorphic(&z2z2, &z4));
        let f = find_isomorphism(&z4, &z4).unwrap();
        assert!(f.is_injective() && f.is_surjective());
    }

    #[test]
    fn column_modules_of_matrix_ring() {
        let m2 = Arc::new(builtin_ring("matrix", &[2, 2]).unwrap());
        let reg = regular_module(&m2);
        let d = crate::decomposition::indecomposable_decomposition(&reg, &crate::Guards::default())
            .unwrap();
        assert_eq!(d.len(), 2);
        let f = find_isomorphism(d.part_module(0), d.part_module(1)).unwrap();
        assert!(f.is_injective() && f.is_surjective());
    }

    #[test]
    fn permuted_generators_are_isomorphic() {
        let r = Arc::new(builtin_ring("upper-triangular", &[2, 2]).unwrap());
        let reg = regular_module(&r);
        let p = Arc::new(reg.permute_generators(&[2, 0, 1]).unwrap());
        assert!(are_isomorphic(&reg, &p));
    }
}
