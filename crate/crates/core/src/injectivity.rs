//! Relative injectivity, character duality, projective covers and injective hulls.

use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::decomposition::indecomposable_decomposition;
use crate::error::{Error, Guards, Result};
use crate::module::{
    external_sum, quotient_module, regular_module, submodule_module, ModRef, Module,
};
use crate::morphism::{extend_hom, hom_set, Morphism};
use crate::ring::Ring;
use crate::submodule::{radical, submodule_lattice, Submodule};

/// A map `C → A` from a submodule `C ≤ B` that admits no extension to `B`.
#[derive(Clone, Debug)]
pub struct ExtensionFailure {
    pub sub: Submodule,
    pub map: Morphism,
    pub inclusion: Morphism,
}

impl ExtensionFailure {
    /// Re-run the extension problem; true iff it still has no solution.
    pub fn replay(&self) -> bool {
        extend_hom(&self.map, &self.inclusion).is_none()
    }
}

/// First non-extendable map over the submodules of `b`, scanned in canonical order.
fn injectivity_failure_over(
    a: &ModRef,
    b: &ModRef,
    subs: &[Submodule],
) -> Result<Option<ExtensionFailure>> {
    for c in subs {
        if c.size() == b.size() {
            continue;
        }
        let emb = submodule_module(b, c);
        let hom = hom_set(&emb.module, a)?;
        // Extendable maps form a subgroup, so checking a basis is enough.
        for f in hom.basis() {
            if extend_hom(&f, &emb.inclusion).is_none() {
                return Ok(Some(ExtensionFailure {
                    sub: c.clone(),
                    map: f,
                    inclusion: emb.inclusion.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// `a` is `b`-injective, with a failing extension problem otherwise.
pub fn relative_injectivity_witness(
    a: &ModRef,
    b: &ModRef,
    guards: &Guards,
) -> Result<Option<ExtensionFailure>> {
    if **a.ring() != **b.ring() {
        return Err(Error::RingMismatch);
    }
    let lat = submodule_lattice(b, guards)?;
    injectivity_failure_over(a, b, &lat)
}

pub fn is_relatively_injective(a: &ModRef, b: &ModRef, guards: &Guards) -> Result<bool> {
    Ok(relative_injectivity_witness(a, b, guards)?.is_none())
}

/// Baer's criterion: extension along every right ideal.
pub fn baer_failure(m: &ModRef, guards: &Guards) -> Result<Option<ExtensionFailure>> {
    let reg = regular_module(m.ring());
    let ideals = submodule_lattice(&reg, guards)?;
    injectivity_failure_over(m, &reg, &ideals)
}

pub fn is_injective(m: &ModRef, guards: &Guards) -> Result<bool> {
    Ok(baer_failure(m, guards)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InjectivityProperty {
    Injective,
    QuasiInjective,
}

pub fn module_property(m: &ModRef, p: InjectivityProperty, guards: &Guards) -> Result<bool> {
    match p {
        InjectivityProperty::Injective => is_injective(m, guards),
        InjectivityProperty::QuasiInjective => is_relatively_injective(m, m, guards),
    }
}

/// Character dual over a given copy of the opposite ring.
fn dual_over(m: &Module, ring: Arc<Ring>) -> Module {
    let e = m.orders();
    let action = m
        .action()
        .iter()
        .map(|a| {
            (0..e.len())
                .map(|i| {
                    (0..e.len())
                        .map(|j| {
                            let num = a[j][i] as u64 * e[j] as u64;
                            debug_assert_eq!(num % e[i] as u64, 0);
                            ((num / e[i] as u64) % e[j] as u64) as i64
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Module::new(ring, e.to_vec(), action).expect("character dual is a module")
}

/// `Hom_Z(m, Q/Z)` as a right module over the opposite ring.
pub fn character_dual(m: &ModRef) -> ModRef {
    Arc::new(dual_over(m, Arc::new(m.ring().opposite())))
}

/// The injective cogenerator `D(R)` rebuilt over `ring` itself.
fn cogenerator(ring: &Arc<Ring>) -> ModRef {
    let op = Arc::new(ring.opposite());
    let reg_op = regular_module(&op);
    Arc::new(dual_over(&reg_op, ring.clone()))
}

/// The map `m → D(R)` induced by the character `psi` of `m`.
///
/// `psi` is given by coefficients on the coordinate characters of `m`.
fn character_map(m: &ModRef, c0: &ModRef, psi: &[u32]) -> Morphism {
    let ring = m.ring();
    let l = m.radix().exponent();
    let e = m.orders();
    let d = ring.orders();
    // psi(x) * l, an integer mod l.
    let value = |x: &[u32]| -> u64 {
        x.iter()
            .zip(psi)
            .zip(e)
            .map(|((&xj, &a), &ej)| xj as u64 * a as u64 % l * (l / ej as u64) % l)
            .sum::<u64>()
            % l
    };
    let images = (0..m.generator_count())
        .map(|j| {
            let u = m.generator(j);
            (0..ring.generator_count())
                .map(|i| {
                    let v = value(&m.act_generator_coords(&u, i));
                    let num = v * d[i] as u64;
                    debug_assert_eq!(num % l, 0);
                    ((num / l) % d[i] as u64) as u32
                })
                .collect()
        })
        .collect();
    Morphism::from_images_unchecked(m.clone(), c0.clone(), images)
}

#[derive(Clone, Debug)]
pub struct BaerRecord {
    pub right_ideals_checked: usize,
    pub failure: Option<ExtensionFailure>,
}

#[derive(Clone, Debug)]
pub struct EssentialityRecord {
    pub hull_socle_size: usize,
    pub socle_inside_image: bool,
}

#[derive(Clone, Debug)]
pub struct HullCertificate {
    pub hull: ModRef,
    pub embedding: Morphism,
    pub injectivity_witness: BaerRecord,
    pub essentiality_witness: EssentialityRecord,
}

impl HullCertificate {
    pub fn is_valid(&self) -> bool {
        self.embedding.is_injective()
            && self.injectivity_witness.failure.is_none()
            && self.essentiality_witness.socle_inside_image
    }
}

fn certify(hull: ModRef, embedding: Morphism, guards: &Guards) -> Result<HullCertificate> {
    let reg = regular_module(hull.ring());
    let ideals = submodule_lattice(&reg, guards)?;
    let failure = injectivity_failure_over(&hull, &reg, &ideals)?;
    let image = embedding.image_submodule();
    let soc = hull.socle_set();
    Ok(HullCertificate {
        essentiality_witness: EssentialityRecord {
            hull_socle_size: soc.count(),
            socle_inside_image: soc.is_subset(image.members()),
        },
        injectivity_witness: BaerRecord {
            right_ideals_checked: ideals.len(),
            failure,
        },
        hull,
        embedding,
    })
}

/// Injective hull via a socle-separating embedding into a power of `D(R)`,
/// followed by a maximal essential extension of the image.
pub fn injective_hull(m: &ModRef, guards: &Guards) -> Result<HullCertificate> {
    guards.check_elements("module", m.size())?;
    if is_injective(m, guards)? {
        return certify(m.clone(), Morphism::identity(m), guards);
    }
    let ring = m.ring();
    let c0 = cogenerator(ring);
    let soc: Vec<usize> = m.socle_set().iter().filter(|&x| x != 0).collect();
    let mut unseparated: Vec<usize> = soc.clone();
    let mut chosen: Vec<Morphism> = Vec::new();
    while !unseparated.is_empty() {
        let mut best: Option<(usize, Morphism)> = None;
        for psi in 1..m.size() {
            let f = character_map(m, &c0, &m.coords(psi));
            let hits = unseparated.iter().filter(|&&x| f.apply(x) != 0).count();
            if best.as_ref().is_none_or(|(h, _)| hits > *h) {
                best = Some((hits, f));
            }
        }
        let (hits, f) = best.expect("nonzero module has a nonzero character");
        debug_assert!(hits > 0);
        unseparated.retain(|&x| f.apply(x) == 0);
        chosen.push(f);
    }
    let n = chosen.len();
    let total = (c0.size() as u64).saturating_pow(n as u32);
    guards.check_elements("cogenerator power", total.min(usize::MAX as u64) as usize)?;
    let copies: Vec<ModRef> = (0..n).map(|_| c0.clone()).collect();
    let (c, _) = external_sum(&copies)?;
    let k = c0.generator_count();
    let images = (0..m.generator_count())
        .map(|j| {
            let mut v = Vec::with_capacity(n * k);
            for f in &chosen {
                v.extend_from_slice(&f.images()[j]);
            }
            v
        })
        .collect();
    let into_c = Morphism::from_images_unchecked(m.clone(), c.clone(), images);
    let image = into_c.image_submodule();
    let hull_sub = maximal_essential_extension(&c, &image);
    let emb = submodule_module(&c, &hull_sub);
    let hull_images = (0..m.generator_count())
        .map(|j| {
            let x = c.index(&into_c.images()[j]);
            emb.module
                .coords(emb.pull(x).expect("image lies in the hull"))
        })
        .collect();
    let embedding = Morphism::from_images_unchecked(m.clone(), emb.module.clone(), hull_images);
    certify(emb.module.clone(), embedding, guards)
}

/// Grow `n` inside `c` one cyclic at a time while it stays essential over `n`.
pub fn maximal_essential_extension(c: &ModRef, n: &Submodule) -> Submodule {
    let j = c.ring().jacobson_radical();
    let soc = c.socle_set();
    let mut k = n.clone();
    let mut failed = ElemSet::empty(c.size());
    loop {
        let mut grown = false;
        for x in 0..c.size() {
            if k.contains(x) || failed.contains(x) || !j.iter().all(|&r| k.contains(c.act(x, r))) {
                continue;
            }
            let bigger = k.sum(c, &Submodule::span(c, &[x]));
            if bigger.members().intersection(soc).is_subset(n.members()) {
                k = bigger;
                grown = true;
            } else {
                failed.insert(x);
            }
        }
        if !grown {
            return k;
        }
    }
}

/// Projective cover `P → m` with `P` a sum of `eR` for primitive idempotents `e`.
pub fn projective_cover(m: &ModRef, guards: &Guards) -> Result<(ModRef, Morphism)> {
    guards.check_elements("module", m.size())?;
    let ring = m.ring();
    let reg = regular_module(ring);
    if m.is_zero() {
        let z = crate::module::zero_module(ring);
        return Ok((z.clone(), Morphism::zero(&z, m)));
    }
    let (top, pi) = quotient_module(m, &radical(m));
    let simples = indecomposable_decomposition(&top, guards)?;
    let prims = ring.primitive_idempotents();
    let mut parts: Vec<ModRef> = Vec::new();
    let mut lifts: Vec<(usize, crate::module::Embedded)> = Vec::new();
    for s in simples.parts() {
        let (e, y) = prims
            .iter()
            .find_map(|&e| {
                s.members()
                    .iter()
                    .find(|&y| top.act(y, e) != 0)
                    .map(|y| (e, y))
            })
            .expect("some primitive idempotent acts nontrivially on a simple module");
        let x = (0..m.size())
            .find(|&x| pi.apply(x) == y)
            .expect("epimorphism");
        let mk = m.act(x, e);
        let er = submodule_module(&reg, &Submodule::span(&reg, &[e]));
        parts.push(er.module.clone());
        lifts.push((mk, er));
    }
    let (p, _) = external_sum(&parts)?;
    let mut images = Vec::with_capacity(p.generator_count());
    for (mk, er) in &lifts {
        for b in 0..er.module.generator_count() {
            let r = er.inclusion.apply(er.module.index(&er.module.generator(b)));
            images.push(m.coords(m.act(*mk, r)));
        }
    }
    let epi = Morphism::from_images_unchecked(p.clone(), m.clone(), images);
    Ok((p, epi))
}

/// Hull via `D(P(D(m)))`, used as an independent cross-check.
pub fn dual_cover_hull(m: &ModRef, guards: &Guards) -> Result<ModRef> {
    let d = character_dual(m);
    let (p, _) = projective_cover(&d, guards)?;
    let dd = dual_over(&p, m.ring().clone());
    Ok(Arc::new(dd))
}

/// Every `σ: E(n) → E(m)` maps `n` into `m`; requires `m` to be `n`-injective.
pub fn azumaya_check(m: &ModRef, n: &ModRef, guards: &Guards) -> Result<bool> {
    if !is_relatively_injective(m, n, guards)? {
        return Err(Error::PreconditionFailed(
            "first module is not injective relative to the second".into(),
        ));
    }
    let em = injective_hull(m, guards)?;
    let en = injective_hull(n, guards)?;
    hulls_respect_embedding(&em, &en)
}

/// Every `σ: E(N) → E(M)` carries the image of `N` into the image of `M`.
pub fn hulls_respect_embedding(em: &HullCertificate, en: &HullCertificate) -> Result<bool> {
    let image_m = em.embedding.image_submodule();
    let hom = hom_set(&en.hull, &em.hull)?;
    // The maps with this property form a subgroup; a basis decides it.
    Ok(hom.basis().iter().all(|s| {
        en.embedding
            .images()
            .iter()
            .all(|v| image_m.contains(s.apply(en.hull.index(v))))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::direct_sum;
    use crate::iso::are_isomorphic;
    use crate::rings::builtin_ring;
    use crate::submodule::is_small;

    fn ring(name: &str, p: &[u32]) -> Arc<Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn z2_z8() -> (ModRef, ModRef) {
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        (z2, z8)
    }

    #[test]
    fn relative_injectivity_over_z8() {
        let g = Guards::default();
        let (z2, z8) = z2_z8();
        let w = relative_injectivity_witness(&z2, &z8, &g).unwrap().unwrap();
        assert!(w.replay());
        assert!(is_relatively_injective(&z8, &z2, &g).unwrap());
        assert!(is_injective(&z8, &g).unwrap());
        assert!(!is_injective(&z2, &g).unwrap());
        let f2 = ring("zmod", &[2]);
        let s = regular_module(&f2);
        assert!(is_relatively_injective(&s, &s, &g).unwrap());
    }

    #[test]
    fn duals() {
        let (z2, z8) = z2_z8();
        let (m, _) = direct_sum(&[z2, z8]).unwrap();
        let d = character_dual(&m);
        assert_eq!(d.size(), m.size());
        let dd = character_dual(&d);
        assert!(are_isomorphic(&dd, &m));
        let t = regular_module(&ring("upper-triangular", &[2, 2]));
        assert!(are_isomorphic(&character_dual(&character_dual(&t)), &t));
    }

    #[test]
    fn hulls() {
        let g = Guards::default();
        let (z2, z8) = z2_z8();
        let h = injective_hull(&z2, &g).unwrap();
        assert!(h.is_valid());
        assert!(are_isomorphic(&h.hull, &z8));
        let f2 = regular_module(&ring("zmod", &[2]));
        assert_eq!(injective_hull(&f2, &g).unwrap().hull.size(), 2);
        let local = regular_module(&ring("local-f2xy", &[]));
        let hl = injective_hull(&local, &g).unwrap();
        assert!(hl.is_valid());
        assert!(are_isomorphic(
            &hl.hull,
            &dual_cover_hull(&local, &g).unwrap()
        ));
    }

    #[test]
    fn covers() {
        let g = Guards::default();
        let (z2, z8) = z2_z8();
        let (p, epi) = projective_cover(&z2, &g).unwrap();
        assert!(are_isomorphic(&p, &z8));
        assert!(epi.is_surjective());
        assert_eq!(epi.kernel().count(), 4);
        assert!(is_small(&p, &epi.kernel_submodule()).unwrap());
        let m2 = ring("matrix", &[2, 2]);
        let reg = regular_module(&m2);
        let d = indecomposable_decomposition(&reg, &g).unwrap();
        let s = d.part_module(0).clone();
        let (ps, e) = projective_cover(&s, &g).unwrap();
        assert_eq!(ps.size(), 4);
        assert!(e.is_surjective() && e.is_injective());
    }

    #[test]
    fn azumaya_on_z8() {
        let g = Guards::default();
        let (z2, z8) = z2_z8();
        assert!(azumaya_check(&z8, &z2, &g).unwrap());
        assert!(matches!(
            azumaya_check(&z2, &z8, &g),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
