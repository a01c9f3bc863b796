//! Submodules, the submodule lattice and lattice-level predicates.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Guards, Result};
use crate::module::{submodule_module, ModRef, Module};
use crate::morphism::{extend_hom, Morphism};

/// A submodule stored as its member bitset plus a generating list.
///
/// Equality and ordering look at members only. Ordering is by size, then by
/// bit pattern from element 0 upward.
#[derive(Clone, Debug)]
pub struct Submodule {
    members: ElemSet,
    generators: Vec<usize>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Submodule {}

impl std::hash::Hash for Submodule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

/// `cur + xR`, assuming `cur` is a submodule.
fn add_cyclic(m: &Module, cur: &ElemSet, x: usize) -> ElemSet {
    if cur.contains(x) {
        return cur.clone();
    }
    let cyc = m.cyclic(x);
    sumset(m, cur, &cyc)
}

fn sumset(m: &Module, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = a.clone();
    let bs: Vec<usize> = b.iter().collect();
    for x in a.iter() {
        for &y in &bs {
            out.insert(m.add(x, y));
        }
    }
    out
}

impl Submodule {
    pub fn zero(m: &Module) -> Submodule {
        Submodule {
            members: ElemSet::from_indices(m.size(), [0]),
            generators: Vec::new(),
        }
    }

    pub fn whole(m: &Module) -> Submodule {
        let gens = (0..m.generator_count())
            .map(|j| m.index(&m.generator(j)))
            .collect::<Vec<_>>();
        Submodule::span(m, &gens)
    }

    /// Submodule generated by `gens`; redundant generators are dropped.
    pub fn span(m: &Module, gens: &[usize]) -> Submodule {
        let mut members = ElemSet::from_indices(m.size(), [0]);
        let mut generators = Vec::new();
        for &g in gens {
            if !members.contains(g) {
                members = add_cyclic(m, &members, g);
                generators.push(g);
            }
        }
        Submodule {
            members,
            generators,
        }
    }

    /// Build from a member set already known to be a submodule.
    pub(crate) fn from_closed_set(m: &Module, members: ElemSet) -> Submodule {
        let mut cur = ElemSet::from_indices(m.size(), [0]);
        let mut generators = Vec::new();
        let target = members.count();
        for x in members.iter() {
            if cur.count() == target {
                break;
            }
            if !cur.contains(x) {
                cur = add_cyclic(m, &cur, x);
                generators.push(x);
            }
        }
        debug_assert_eq!(cur, members);
        Submodule {
            members,
            generators,
        }
    }

    /// Validate an arbitrary element set as a submodule of `m`.
    pub fn from_members(m: &Module, members: ElemSet) -> Result<Submodule> {
        if members.universe() != m.size() || !members.contains(0) {
            return Err(Error::NotASubmodule);
        }
        let k = m.ring().generator_count();
        let xs: Vec<usize> = members.iter().collect();
        for &x in &xs {
            for &y in &xs {
                if !members.contains(m.add(x, y)) {
                    return Err(Error::NotASubmodule);
                }
            }
            let xc = m.coords(x);
            for a in 0..k {
                if !members.contains(m.index(&m.act_generator_coords(&xc, a))) {
                    return Err(Error::NotASubmodule);
                }
            }
        }
        Ok(Submodule::from_closed_set(m, members))
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn sum(&self, m: &Module, other: &Submodule) -> Submodule {
        let mut members = self.members.clone();
        let mut generators = self.generators.clone();
        for &g in &other.generators {
            if !members.contains(g) {
                members = add_cyclic(m, &members, g);
                generators.push(g);
            }
        }
        Submodule {
            members,
            generators,
        }
    }

    pub fn intersection(&self, m: &Module, other: &Submodule) -> Submodule {
        Submodule::from_closed_set(m, self.members.intersection(&other.members))
    }

    /// `self ∩ other = 0`.
    pub fn is_independent_of(&self, other: &Submodule) -> bool {
        self.members.meets_only_in_zero(&other.members)
    }

    /// `self ⊕ other = m`.
    pub fn is_complementary(&self, m: &Module, other: &Submodule) -> bool {
        self.is_independent_of(other) && self.size() * other.size() == m.size()
    }

    fn check_parent(&self, m: &Module) -> Result<()> {
        if self.members.universe() != m.size() || !self.members.contains(0) {
            return Err(Error::NotASubmodule);
        }
        Ok(())
    }
}

/// All submodules, in canonical order.
pub fn submodule_lattice(m: &Module, guards: &Guards) -> Result<Arc<Vec<Submodule>>> {
    if let Some(l) = m.lattice_cache.get() {
        return Ok(l.clone());
    }
    guards.check_lattice("submodule lattice", m.size())?;
    let mut cyclics: Vec<Submodule> = Vec::new();
    let mut seen: HashMap<ElemSet, ()> = HashMap::new();
    for x in 0..m.size() {
        let s = Submodule::span(m, &[x]);
        if seen.insert(s.members.clone(), ()).is_none() {
            cyclics.push(s);
        }
    }
    let mut all: HashMap<ElemSet, Submodule> = HashMap::new();
    let mut queue: Vec<Submodule> = cyclics.clone();
    for c in &cyclics {
        all.insert(c.members.clone(), c.clone());
    }
    while let Some(s) = queue.pop() {
        for c in &cyclics {
            if c.is_subset(&s) {
                continue;
            }
            let t = s.sum(m, c);
            if !all.contains_key(&t.members) {
                all.insert(t.members.clone(), t.clone());
                queue.push(t);
            }
        }
    }
    let mut list: Vec<Submodule> = all.into_values().collect();
    list.sort();
    let list = Arc::new(list);
    Ok(m.lattice_cache.get_or_init(|| list).clone())
}

/// `soc(m) ⊆ n`, which for finite modules is equivalent to `n ≤e m`.
pub fn is_essential(m: &Module, n: &Submodule) -> Result<bool> {
    n.check_parent(m)?;
    Ok(m.socle_set().is_subset(n.members()))
}

/// `n ≤e k` for submodules `n ⊆ k` of `m`.
pub fn is_essential_in(m: &Module, n: &Submodule, k: &Submodule) -> bool {
    n.is_subset(k)
        && k.members()
            .intersection(m.socle_set())
            .is_subset(n.members())
}

/// No proper essential extension of `n` inside `m`.
pub fn is_closed(m: &Module, n: &Submodule) -> Result<bool> {
    n.check_parent(m)?;
    Ok(proper_essential_extension(m, n).is_none())
}

/// Some `x ∉ n` with `n ≤e n + xR`, if one exists.
pub(crate) fn proper_essential_extension(m: &Module, n: &Submodule) -> Option<usize> {
    let j = m.ring().jacobson_radical();
    let soc = m.socle_set();
    (0..m.size()).find(|&x| {
        if n.contains(x) || !j.iter().all(|&r| n.contains(m.act(x, r))) {
            return false;
        }
        add_cyclic(m, n.members(), x)
            .intersection(soc)
            .is_subset(n.members())
    })
}

/// `n + p ≠ m` for every proper `p`; for finite modules this is `n ⊆ rad(m)`.
pub fn is_small(m: &Module, n: &Submodule) -> Result<bool> {
    n.check_parent(m)?;
    Ok(n.is_subset(&radical(m)))
}

/// `n` has a direct complement in `m`, decided by splitting the inclusion.
pub fn is_summand(m: &ModRef, n: &Submodule) -> Result<bool> {
    n.check_parent(m)?;
    Ok(summand_retraction(m, n).is_some())
}

/// A retraction `m → n` restricting to the identity on `n`, if `n` is a summand.
pub fn summand_retraction(m: &ModRef, n: &Submodule) -> Option<Morphism> {
    let emb = submodule_module(m, n);
    let id = Morphism::identity(&emb.module);
    extend_hom(&id, &emb.inclusion)
}

/// A direct complement of a summand: the kernel of a retraction.
pub fn direct_complement(m: &ModRef, n: &Submodule) -> Option<Submodule> {
    let p = summand_retraction(m, n)?;
    Some(Submodule::from_closed_set(m, p.kernel()))
}

/// `θ(n) ⊆ n` for every endomorphism θ.
pub fn is_fully_invariant(m: &ModRef, n: &Submodule) -> Result<bool> {
    n.check_parent(m)?;
    let end = crate::morphism::end_basis(m);
    Ok(end
        .iter()
        .all(|t| n.generators().iter().all(|&g| n.contains(t.apply(g)))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Essential,
    Closed,
    Small,
    Summand,
    FullyInvariant,
}

pub fn submodule_predicate(m: &ModRef, n: &Submodule, which: Predicate) -> Result<bool> {
    match which {
        Predicate::Essential => is_essential(m, n),
        Predicate::Closed => is_closed(m, n),
        Predicate::Small => is_small(m, n),
        Predicate::Summand => is_summand(m, n),
        Predicate::FullyInvariant => is_fully_invariant(m, n),
    }
}

/// Submodules maximal with respect to meeting `a` trivially.
pub fn complements_of(m: &Module, a: &Submodule, guards: &Guards) -> Result<Vec<Submodule>> {
    a.check_parent(m)?;
    let lat = submodule_lattice(m, guards)?;
    let indep: Vec<&Submodule> = lat.iter().filter(|c| c.is_independent_of(a)).collect();
    Ok(indep
        .iter()
        .filter(|c| !indep.iter().any(|d| d.size() > c.size() && c.is_subset(d)))
        .map(|c| (*c).clone())
        .collect())
}

/// The least closed submodule containing `n` essentially.
pub fn closure_of(m: &Module, n: &Submodule, guards: &Guards) -> Result<Submodule> {
    n.check_parent(m)?;
    let lat = submodule_lattice(m, guards)?;
    for k in lat.iter() {
        if is_essential_in(m, n, k) && proper_essential_extension(m, k).is_none() {
            return Ok(k.clone());
        }
    }
    unreachable!("a maximal essential extension always exists")
}

/// The least `p` in canonical order with `a + p = m`; such a `p` is minimal.
pub fn supplement_of(m: &Module, a: &Submodule, guards: &Guards) -> Result<Submodule> {
    a.check_parent(m)?;
    let lat = submodule_lattice(m, guards)?;
    let total = m.size();
    Ok(lat
        .iter()
        .find(|p| a.sum(m, p).size() == total)
        .expect("m itself supplements")
        .clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Radical,
    Socle,
    Singular,
}

pub fn part(m: &Module, which: Part) -> Submodule {
    match which {
        Part::Radical => radical(m),
        Part::Socle => socle(m),
        Part::Singular => singular(m),
    }
}

/// `mJ`, the intersection of the maximal submodules.
pub fn radical(m: &Module) -> Submodule {
    let j = m.ring().jacobson_radical();
    let gens: Vec<usize> = (0..m.generator_count())
        .flat_map(|g| {
            let x = m.index(&m.generator(g));
            j.iter().map(move |&r| (x, r))
        })
        .map(|(x, r)| m.act(x, r))
        .collect();
    Submodule::span(m, &gens)
}

/// Elements killed by `J`, the sum of the simple submodules.
pub fn socle(m: &Module) -> Submodule {
    Submodule::from_closed_set(m, m.socle_set().clone())
}

/// Elements whose annihilator is an essential right ideal, i.e. contains `soc(R_R)`.
pub fn singular(m: &Module) -> Submodule {
    let ring = m.ring();
    let j = ring.jacobson_radical();
    let soc_r: Vec<usize> = (0..ring.size())
        .filter(|&r| j.iter().all(|&t| ring.mul(r, t) == 0))
        .collect();
    let members = ElemSet::from_indices(
        m.size(),
        (0..m.size()).filter(|&x| soc_r.iter().all(|&s| m.act(x, s) == 0)),
    );
    Submodule::from_closed_set(m, members)
}

/// A submodule is simple iff it is nonzero and every nonzero element generates it.
pub fn is_simple(m: &Module, n: &Submodule) -> bool {
    !n.is_zero()
        && n.members()
            .iter()
            .all(|x| x == 0 || m.cyclic(x) == *n.members())
}

/// Unique maximal submodule, i.e. `n / rad n` simple and `n ≠ 0`.
pub fn is_local_module(m: &ModRef) -> bool {
    if m.is_zero() {
        return false;
    }
    let r = radical(m);
    let (top, _) = crate::module::quotient_module(m, &r);
    let top_whole = Submodule::whole(&top);
    is_simple(&top, &top_whole)
}

pub fn is_semisimple(m: &Module) -> bool {
    radical(m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{external_sum, regular_module};
    use crate::rings::builtin_ring;

    fn ring(name: &str, p: &[u32]) -> Arc<crate::ring::Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn definitional_essential(m: &Module, n: &Submodule) -> bool {
        (1..m.size()).all(|x| !m.cyclic(x).meets_only_in_zero(n.members()))
    }

    fn lattice_radical(m: &Module, lat: &[Submodule]) -> ElemSet {
        let whole = Submodule::whole(m);
        let maximal: Vec<&Submodule> = lat
            .iter()
            .filter(|s| {
                **s != whole
                    && !lat
                        .iter()
                        .any(|t| *t != whole && t.size() > s.size() && s.is_subset(t))
            })
            .collect();
        maximal.iter().fold(ElemSet::full(m.size()), |acc, s| {
            acc.intersection(s.members())
        })
    }

    fn lattice_socle(m: &Module, lat: &[Submodule]) -> ElemSet {
        lat.iter()
            .filter(|s| is_simple(m, s))
            .fold(ElemSet::from_indices(m.size(), [0]), |acc, s| {
                sumset(m, &acc, s.members())
            })
    }

    #[test]
    fn lattice_sizes() {
        let z4 = regular_module(&ring("zmod", &[4]));
        assert_eq!(submodule_lattice(&z4, &Guards::default()).unwrap().len(), 3);
        let f2 = ring("zmod", &[2]);
        let r = regular_module(&f2);
        let (v, _) = external_sum(&[r.clone(), r.clone()]).unwrap();
        assert_eq!(submodule_lattice(&v, &Guards::default()).unwrap().len(), 5);
        let (v3, _) = external_sum(&[v.clone(), r]).unwrap();
        assert_eq!(
            submodule_lattice(&v3, &Guards::default()).unwrap().len(),
            16
        );
        let big = regular_module(&ring("zmod", &[128]));
        assert!(matches!(
            submodule_lattice(&big, &Guards::default()),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn lattice_is_sorted_and_closed() {
        let r = ring("zmod", &[4]);
        let z4 = regular_module(&r);
        let (m, _) = external_sum(&[z4.clone(), z4]).unwrap();
        let lat = submodule_lattice(&m, &Guards::default()).unwrap();
        assert!(lat.windows(2).all(|w| w[0] < w[1]));
        for a in lat.iter() {
            for b in lat.iter() {
                assert!(lat.contains(&a.sum(&m, b)));
                assert!(lat.contains(&a.intersection(&m, b)));
            }
        }
    }

    #[test]
    fn z4_predicates() {
        let z4 = regular_module(&ring("zmod", &[4]));
        let two = Submodule::span(&z4, &[2]);
        assert!(is_essential(&z4, &two).unwrap());
        assert!(!is_summand(&z4, &two).unwrap());
        assert!(is_small(&z4, &two).unwrap());
        assert!(is_closed(&z4, &Submodule::zero(&z4)).unwrap());
        assert!(!is_closed(&z4, &two).unwrap());
        let g = Guards::default();
        assert_eq!(closure_of(&z4, &two, &g).unwrap(), Submodule::whole(&z4));
        assert_eq!(supplement_of(&z4, &two, &g).unwrap(), Submodule::whole(&z4));
        assert_eq!(radical(&z4), two);
        assert_eq!(socle(&z4), two);
    }

    #[test]
    fn complements_in_plane() {
        let f2 = ring("zmod", &[2]);
        let r = regular_module(&f2);
        let (v, _) = external_sum(&[r.clone(), r]).unwrap();
        let e1 = Submodule::span(&v, &[1]);
        let c = complements_of(&v, &e1, &Guards::default()).unwrap();
        assert_eq!(
            c,
            vec![Submodule::span(&v, &[3]), Submodule::span(&v, &[2])]
        );
        let g = Guards::default();
        assert_eq!(
            complements_of(&v, &Submodule::zero(&v), &g).unwrap(),
            vec![Submodule::whole(&v)]
        );
        assert_eq!(
            complements_of(&v, &Submodule::whole(&v), &g).unwrap(),
            vec![Submodule::zero(&v)]
        );
    }

    #[test]
    fn fast_predicates_match_definitions() {
        let g = Guards::default();
        let mods: Vec<ModRef> = vec![
            regular_module(&ring("zmod", &[12])),
            regular_module(&ring("local-f2xy", &[])),
            regular_module(&ring("upper-triangular", &[2, 2])),
            {
                let r = ring("zmod", &[8]);
                let z8 = regular_module(&r);
                let (z2, _) = crate::module::quotient_module(&z8, &Submodule::span(&z8, &[2]));
                external_sum(&[z2, z8]).unwrap().0
            },
        ];
        for m in &mods {
            let lat = submodule_lattice(m, &g).unwrap();
            let whole = Submodule::whole(m);
            for n in lat.iter() {
                assert_eq!(is_essential(m, n).unwrap(), definitional_essential(m, n));
                let small_def = lat.iter().all(|p| *p == whole || n.sum(m, p) != whole);
                assert_eq!(is_small(m, n).unwrap(), small_def);
                let summand_def = lat.iter().any(|k| n.is_complementary(m, k));
                assert_eq!(is_summand(m, n).unwrap(), summand_def);
                let closed_def = !lat.iter().any(|k| {
                    k.size() > n.size() && n.is_subset(k) && {
                        (1..m.size())
                            .filter(|&x| k.contains(x))
                            .all(|x| !m.cyclic(x).meets_only_in_zero(n.members()))
                    }
                });
                assert_eq!(is_closed(m, n).unwrap(), closed_def);
                let c = closure_of(m, n, &g).unwrap();
                assert!(is_closed(m, &c).unwrap() && is_essential_in(m, n, &c));
                assert_eq!(closure_of(m, &c, &g).unwrap(), c);
                for comp in complements_of(m, n, &g).unwrap() {
                    assert!(is_closed(m, &comp).unwrap());
                    assert!(is_essential(m, &n.sum(m, &comp)).unwrap());
                }
            }
            assert_eq!(*radical(m).members(), lattice_radical(m, &lat));
            assert_eq!(*socle(m).members(), lattice_socle(m, &lat));
            assert!(is_small(m, &radical(m)).unwrap());
        }
    }

    #[test]
    fn singular_parts() {
        let m2 = ring("matrix", &[2, 2]);
        assert!(singular(&regular_module(&m2)).is_zero());
        let z4 = regular_module(&ring("zmod", &[4]));
        // ann(2) = 2Z/4 is essential in Z/4.
        assert_eq!(singular(&z4), Submodule::span(&z4, &[2]));
        let r = ring("local-f2xy", &[]);
        let reg = regular_module(&r);
        let reg_lat = submodule_lattice(&reg, &Guards::default()).unwrap();
        // Definitional: ann(x) meets every nonzero right ideal.
        let s = singular(&reg);
        for x in 0..reg.size() {
            let ann = ElemSet::from_indices(reg.size(), reg.annihilator(x));
            let ess = reg_lat
                .iter()
                .filter(|i| !i.is_zero())
                .all(|i| !i.members().meets_only_in_zero(&ann));
            assert_eq!(s.contains(x), ess);
        }
    }

    #[test]
    fn not_a_submodule() {
        let z4 = regular_module(&ring("zmod", &[4]));
        assert_eq!(
            Submodule::from_members(&z4, ElemSet::from_indices(4, [0, 1])),
            Err(Error::NotASubmodule)
        );
        let z8 = regular_module(&ring("zmod", &[8]));
        let wrong = Submodule::whole(&z8);
        assert_eq!(is_essential(&z4, &wrong), Err(Error::NotASubmodule));
    }
}
