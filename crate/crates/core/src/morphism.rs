//! Module homomorphisms and hom-set solving.

use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Guards, Result};
use crate::module::{Embedded, ModRef, Module};
use crate::snf::{Congruences, Subgroup};
use crate::submodule::Submodule;

/// A homomorphism stored as the images of the source generators.
#[derive(Clone)]
pub struct Morphism {
    source: ModRef,
    target: ModRef,
    images: Vec<Vec<u32>>,
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism{:?}", self.images)
    }
}

fn same(a: &ModRef, b: &ModRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
            && same(&self.source, &other.source)
            && same(&self.target, &other.target)
    }
}

impl Eq for Morphism {}

impl Morphism {
    /// Validate generator images against orders and the action.
    pub fn new(source: ModRef, target: ModRef, images: Vec<Vec<i64>>) -> Result<Morphism> {
        if **source.ring() != **target.ring() {
            return Err(Error::RingMismatch);
        }
        let n = target.generator_count();
        if images.len() != source.generator_count() || images.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidMorphism(
                "image matrix has the wrong shape".into(),
            ));
        }
        let images: Vec<Vec<u32>> = images.iter().map(|v| target.radix().reduce(v)).collect();
        let f = Morphism::from_images_unchecked(source, target, images);
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn from_images_unchecked(
        source: ModRef,
        target: ModRef,
        images: Vec<Vec<u32>>,
    ) -> Morphism {
        Morphism {
            source,
            target,
            images,
        }
    }

    fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for (j, img) in self.images.iter().enumerate() {
            let mut v = vec![0u32; t.generator_count()];
            t.radix()
                .add_scaled_coords(&mut v, img, s.orders()[j] as u64);
            if v.iter().any(|&c| c != 0) {
                return Err(Error::InvalidMorphism(format!(
                    "image of generator {j} ignores its order"
                )));
            }
            for a in 0..s.ring().generator_count() {
                let lhs = self.apply_coords(&s.act_generator_coords(&s.generator(j), a));
                let rhs = t.act_generator_coords(img, a);
                if lhs != rhs {
                    return Err(Error::InvalidMorphism(format!(
                        "does not commute with ring generator {a} on generator {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &ModRef {
        &self.source
    }

    pub fn target(&self) -> &ModRef {
        &self.target
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }

    pub fn identity(m: &ModRef) -> Morphism {
        let images = (0..m.generator_count()).map(|j| m.generator(j)).collect();
        Morphism::from_images_unchecked(m.clone(), m.clone(), images)
    }

    pub fn zero(source: &ModRef, target: &ModRef) -> Morphism {
        let images = vec![vec![0u32; target.generator_count()]; source.generator_count()];
        Morphism::from_images_unchecked(source.clone(), target.clone(), images)
    }

    pub fn apply_coords(&self, x: &[u32]) -> Vec<u32> {
        let t = &self.target;
        let mut out = vec![0u32; t.generator_count()];
        for (img, &c) in self.images.iter().zip(x) {
            if c != 0 {
                t.radix().add_scaled_coords(&mut out, img, c as u64);
            }
        }
        out
    }

    pub fn apply(&self, x: usize) -> usize {
        self.target
            .index(&self.apply_coords(&self.source.coords(x)))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Morphism) -> Morphism {
        debug_assert!(same(&inner.target, &self.source));
        let images = inner.images.iter().map(|v| self.apply_coords(v)).collect();
        Morphism::from_images_unchecked(inner.source.clone(), self.target.clone(), images)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let r = self.target.radix();
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| {
                let mut v = a.clone();
                r.add_coords(&mut v, b);
                v
            })
            .collect();
        Morphism::from_images_unchecked(self.source.clone(), self.target.clone(), images)
    }

    pub fn neg(&self) -> Morphism {
        let r = self.target.radix();
        let images = self
            .images
            .iter()
            .map(|a| {
                let mut v = vec![0u32; a.len()];
                r.add_scaled_coords(&mut v, a, r.exponent() - 1);
                v
            })
            .collect();
        Morphism::from_images_unchecked(self.source.clone(), self.target.clone(), images)
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| v.iter().all(|&c| c == 0))
    }

    pub fn kernel(&self) -> ElemSet {
        ElemSet::from_indices(
            self.source.size(),
            (0..self.source.size()).filter(|&x| self.apply(x) == 0),
        )
    }

    pub fn kernel_submodule(&self) -> Submodule {
        Submodule::from_closed_set(&self.source, self.kernel())
    }

    pub fn image(&self) -> ElemSet {
        self.image_submodule().members().clone()
    }

    pub fn image_submodule(&self) -> Submodule {
        let gens: Vec<usize> = self.images.iter().map(|v| self.target.index(v)).collect();
        Submodule::span(&self.target, &gens)
    }

    /// `f(n)` for a submodule `n` of the source.
    pub fn image_of(&self, n: &Submodule) -> Submodule {
        let gens: Vec<usize> = n.generators().iter().map(|&g| self.apply(g)).collect();
        Submodule::span(&self.target, &gens)
    }

    /// `f⁻¹(n)` for a submodule `n` of the target.
    pub fn preimage_of(&self, n: &Submodule) -> Submodule {
        Submodule::from_closed_set(
            &self.source,
            ElemSet::from_indices(
                self.source.size(),
                (0..self.source.size()).filter(|&x| n.contains(self.apply(x))),
            ),
        )
    }

    /// Injective iff no nonzero socle element is killed.
    pub fn is_injective(&self) -> bool {
        self.source
            .socle_set()
            .iter()
            .all(|x| x == 0 || self.apply(x) != 0)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_submodule().size() == self.target.size()
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    /// `self` restricted along the inclusion of a submodule.
    pub fn restrict(&self, sub: &Embedded) -> Morphism {
        self.compose(&sub.inclusion)
    }

    /// Row-major image coordinates, the key for the canonical order on maps.
    pub fn key(&self) -> Vec<u32> {
        self.images.concat()
    }
}

/// Unknowns are the coordinates of each source generator's image, flattened.
fn hom_system(source: &Module, target: &Module) -> Congruences {
    let m = source.generator_count();
    let n = target.generator_count();
    let tord = target.orders();
    let var = |j: usize, t: usize| j * n + t;
    let mut sys = Congruences::new((0..m).flat_map(|_| tord.iter().copied()).collect());
    for j in 0..m {
        for t in 0..n {
            let mut row = vec![0i64; m * n];
            row[var(j, t)] = source.orders()[j] as i64;
            sys.push(row, tord[t], 0);
        }
    }
    for a in 0..source.ring().generator_count() {
        let sa = &source.action()[a];
        let ta = &target.action()[a];
        for j in 0..m {
            for t in 0..n {
                let mut row = vec![0i64; m * n];
                for l in 0..m {
                    row[var(l, t)] += sa[j][l] as i64;
                }
                for s in 0..n {
                    row[var(j, s)] -= ta[s][t] as i64;
                }
                sys.push(row, tord[t], 0);
            }
        }
    }
    sys
}

fn unflatten(v: &[u32], m: usize, n: usize) -> Vec<Vec<u32>> {
    (0..m).map(|j| v[j * n..(j + 1) * n].to_vec()).collect()
}

/// All homomorphisms `source → target` as a finite abelian group.
#[derive(Clone, Debug)]
pub struct HomSet {
    source: ModRef,
    target: ModRef,
    group: Subgroup,
}

impl HomSet {
    pub fn source(&self) -> &ModRef {
        &self.source
    }

    pub fn target(&self) -> &ModRef {
        &self.target
    }

    /// Independent generators: every map is a unique combination with
    /// coefficients below the matching entry of `orders`.
    pub fn basis(&self) -> Vec<Morphism> {
        self.group.basis().iter().map(|v| self.wrap(v)).collect()
    }

    pub fn orders(&self) -> &[u64] {
        self.group.orders()
    }

    /// Number of maps, saturating.
    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    pub fn combine(&self, coeffs: &[u64]) -> Morphism {
        self.wrap(&self.group.combine(coeffs))
    }

    fn wrap(&self, v: &[u32]) -> Morphism {
        Morphism::from_images_unchecked(
            self.source.clone(),
            self.target.clone(),
            unflatten(
                v,
                self.source.generator_count(),
                self.target.generator_count(),
            ),
        )
    }

    /// Every map, once each.
    pub fn iter(&self) -> impl Iterator<Item = Morphism> + '_ {
        self.group.elements().map(|v| self.wrap(&v))
    }

    /// Every map, guarded.
    pub fn all(&self, guards: &Guards) -> Result<Vec<Morphism>> {
        guards.check_enumeration("hom set", self.order())?;
        Ok(self.iter().collect())
    }
}

pub fn hom_set(source: &ModRef, target: &ModRef) -> Result<HomSet> {
    if **source.ring() != **target.ring() {
        return Err(Error::RingMismatch);
    }
    let sol = hom_system(source, target)
        .solve()
        .expect("the zero map solves the homogeneous system");
    Ok(HomSet {
        source: source.clone(),
        target: target.clone(),
        group: sol.kernel,
    })
}

/// `End(m)`, cached on the module.
pub fn end_set(m: &ModRef) -> HomSet {
    let group = m
        .end_cache
        .get_or_init(|| hom_set(m, m).expect("same ring").group)
        .clone();
    HomSet {
        source: m.clone(),
        target: m.clone(),
        group,
    }
}

pub fn end_basis(m: &ModRef) -> Vec<Morphism> {
    end_set(m).basis()
}

/// All idempotent endomorphisms in canonical matrix order.
pub fn end_idempotents(m: &ModRef, guards: &Guards) -> Result<Vec<Morphism>> {
    let end = end_set(m);
    guards.check_enumeration("endomorphism ring", end.order())?;
    let mut out: Vec<Morphism> = end.iter().filter(|f| f.is_idempotent()).collect();
    out.sort_by_key(|f| f.key());
    Ok(out)
}

/// All extensions of `f: C → A` along `incl: C → B`, as one particular
/// extension plus the group of maps `B → A` vanishing on `C`.
pub fn extensions(f: &Morphism, incl: &Morphism) -> Option<(Morphism, HomSet)> {
    let b = incl.target();
    let a = f.target();
    let c = f.source();
    debug_assert!(same(c, incl.source()));
    let mut sys = hom_system(b, a);
    let n = a.generator_count();
    let nb = b.generator_count();
    for k in 0..c.generator_count() {
        let src = &incl.images()[k];
        let dst = &f.images()[k];
        for t in 0..n {
            let mut row = vec![0i64; nb * n];
            for (j, &s) in src.iter().enumerate() {
                row[j * n + t] = s as i64;
            }
            sys.push(row, a.orders()[t], dst[t] as i64);
        }
    }
    let sol = sys.solve()?;
    let particular =
        Morphism::from_images_unchecked(b.clone(), a.clone(), unflatten(&sol.particular, nb, n));
    Some((
        particular,
        HomSet {
            source: b.clone(),
            target: a.clone(),
            group: sol.kernel,
        },
    ))
}

/// Some `g: B → A` with `g ∘ incl = f`, if one exists.
pub fn extend_hom(f: &Morphism, incl: &Morphism) -> Option<Morphism> {
    extensions(f, incl).map(|(g, _)| g)
}

/// Exhaustive hom search over all generator images. Only for small targets.
pub fn hom_brute_force(source: &ModRef, target: &ModRef, guards: &Guards) -> Result<Vec<Morphism>> {
    let m = source.generator_count();
    let total = (target.size() as u64).saturating_pow(m as u32);
    guards.check_enumeration("brute-force hom search", total)?;
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let images: Vec<Vec<u32>> = (0..m)
            .map(|_| {
                let x = (c % target.size() as u64) as usize;
                c /= target.size() as u64;
                target.coords(x)
            })
            .collect();
        let f = Morphism::from_images_unchecked(source.clone(), target.clone(), images);
        if f.validate().is_ok() {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{external_sum, quotient_module, regular_module, submodule_module};
    use crate::rings::builtin_ring;

    fn ring(name: &str, p: &[u32]) -> Arc<crate::ring::Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn z2_over_z8() -> (ModRef, ModRef) {
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        (z2, z8)
    }

    #[test]
    fn hom_z2_z8() {
        let (z2, z8) = z2_over_z8();
        let h = hom_set(&z2, &z8).unwrap();
        assert_eq!(h.order(), 2);
        let nonzero: Vec<Morphism> = h.iter().filter(|f| !f.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].apply(1), 4);
        let zero = crate::module::zero_module(z8.ring());
        assert_eq!(hom_set(&z8, &zero).unwrap().order(), 1);
        let f2 = regular_module(&ring("zmod", &[2]));
        assert_eq!(hom_set(&f2, &f2).unwrap().order(), 2);
    }

    #[test]
    fn extension_failure_and_success() {
        let (z2, z8) = z2_over_z8();
        let c = Submodule::span(&z8, &[2]);
        let emb = submodule_module(&z8, &c);
        let hs = hom_set(&emb.module, &z2).unwrap();
        let f = hs.iter().find(|f| !f.is_zero()).unwrap();
        assert_eq!(f.apply(emb.pull(2).unwrap()), 1);
        assert!(extend_hom(&f, &emb.inclusion).is_none());
        let g = extend_hom(&emb.inclusion, &emb.inclusion).unwrap();
        assert_eq!(g.compose(&emb.inclusion), emb.inclusion);
        let id = Morphism::identity(&z8);
        assert_eq!(extend_hom(&id, &id), Some(id.clone()));
    }

    #[test]
    fn solver_matches_brute_force() {
        let g = Guards::default();
        let rings = [
            ring("zmod", &[4]),
            ring("upper-triangular", &[2, 2]),
            ring("local-f2xy", &[]),
        ];
        for r in &rings {
            let reg = regular_module(r);
            let lat = crate::submodule::submodule_lattice(&reg, &g).unwrap();
            let mut mods: Vec<ModRef> = lat.iter().map(|i| quotient_module(&reg, i).0).collect();
            mods.retain(|m| m.size() <= 8);
            for a in &mods {
                for b in &mods {
                    let solved = hom_set(a, b).unwrap();
                    let mut keys: Vec<Vec<u32>> = solved.iter().map(|f| f.key()).collect();
                    keys.sort();
                    let mut brute: Vec<Vec<u32>> = hom_brute_force(a, b, &g)
                        .unwrap()
                        .iter()
                        .map(|f| f.key())
                        .collect();
                    brute.sort();
                    assert_eq!(keys, brute);
                }
            }
        }
    }

    #[test]
    fn idempotents_of_plane_and_split() {
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v, _) = external_sum(&[f2.clone(), f2]).unwrap();
        assert_eq!(end_idempotents(&v, &Guards::default()).unwrap().len(), 8);
        let (z2, z8) = z2_over_z8();
        let (m, inj) = external_sum(&[z2, z8]).unwrap();
        let ids = end_idempotents(&m, &Guards::default()).unwrap();
        let p0 = inj[0].image_submodule();
        assert!(ids.iter().any(
            |e| e.image_submodule() == p0 && e.kernel() == *inj[1].image_submodule().members()
        ));
    }

    #[test]
    fn invalid_morphisms() {
        let (z2, z8) = z2_over_z8();
        assert!(Morphism::new(z2.clone(), z8.clone(), vec![vec![1]]).is_err());
        assert!(Morphism::new(z2, z8, vec![vec![4]]).is_ok());
    }
}
