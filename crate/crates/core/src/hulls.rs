//! The nonsingular summand criterion and ADS hulls inside `E(M)`.

use crate::ads::ads;
use crate::error::{Error, Guards, Result};
use crate::injectivity::{injective_hull, HullCertificate};
use crate::module::{submodule_module, ModRef};
use crate::morphism::{end_idempotents, extensions, Morphism};
use crate::submodule::{is_summand, singular, submodule_lattice, Submodule};

#[derive(Clone, Debug)]
pub struct SummandCriterion {
    /// For every `E = E1 ⊕ E2` with `E1 ∩ M` a summand, `M = (E1∩M) ⊕ (E2∩M)`.
    pub statement: bool,
    pub ads: bool,
    /// `(E1 ∩ M, E2 ∩ M)` for the first decomposition where the statement fails.
    pub witness: Option<(Submodule, Submodule)>,
}

impl SummandCriterion {
    pub fn agreement(&self) -> bool {
        self.statement == self.ads
    }
}

/// Compare the hull-decomposition statement with the ADS verdict for nonsingular `m`.
pub fn nonsingular_summand_criterion(m: &ModRef, guards: &Guards) -> Result<SummandCriterion> {
    if !singular(m).is_zero() {
        return Err(Error::PreconditionFailed("module is singular".into()));
    }
    let cert = injective_hull(m, guards)?;
    let iota = &cert.embedding;
    let e_mod = &cert.hull;
    let id = Morphism::identity(e_mod);
    let mut witness = None;
    for e in end_idempotents(e_mod, guards)? {
        let a1 = iota.preimage_of(&e.image_submodule());
        let a2 = iota.preimage_of(&id.sub(&e).image_submodule());
        if is_summand(m, &a1)? && !a1.is_complementary(m, &a2) {
            witness = Some((a1, a2));
            break;
        }
    }
    Ok(SummandCriterion {
        statement: witness.is_none(),
        ads: ads(m, guards)?,
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct AdsInterval {
    pub hull: HullCertificate,
    /// Image of the base module in `E(M)`.
    pub image: Submodule,
    /// Every ADS submodule `N` with `image ⊆ N ⊆ E(M)`, in canonical order.
    pub members: Vec<Submodule>,
}

pub fn ads_interval(m: &ModRef, guards: &Guards) -> Result<AdsInterval> {
    let hull = injective_hull(m, guards)?;
    let e_mod = &hull.hull;
    let image = hull.embedding.image_submodule();
    let lat = submodule_lattice(e_mod, guards)?;
    let mut members = Vec::new();
    for n in lat.iter().filter(|n| image.is_subset(n)) {
        if ads(&submodule_module(e_mod, n).module, guards)? {
            members.push(n.clone());
        }
    }
    Ok(AdsInterval {
        hull,
        image,
        members,
    })
}

#[derive(Clone, Debug)]
pub struct HullReport {
    pub base: ModRef,
    pub interval: AdsInterval,
    /// Intersection of the interval members, a submodule of `E(M)`.
    pub hull: Submodule,
    pub hull_module: ModRef,
    pub hypothesis_holds: bool,
    /// An idempotent extension `e*` and a member `N` with `e*(N) ⊄ N`.
    pub hypothesis_failure: Option<(Morphism, Submodule)>,
    pub hull_is_ads: bool,
}

impl HullReport {
    pub fn omega(&self) -> &[Submodule] {
        &self.interval.members
    }

    /// Stabilization forces the hull to be ADS.
    pub fn theorem_holds(&self) -> bool {
        !self.hypothesis_holds || self.hull_is_ads
    }
}

pub fn ads_hull(m: &ModRef, guards: &Guards) -> Result<HullReport> {
    let interval = ads_interval(m, guards)?;
    let e_mod = interval.hull.hull.clone();
    let omega = &interval.members;
    let hull = omega
        .iter()
        .skip(1)
        .fold(omega[0].clone(), |acc, n| acc.intersection(&e_mod, n));
    let emb = submodule_module(&e_mod, &hull);
    let mut failure = None;
    'outer: for e in end_idempotents(&emb.module, guards)? {
        let (p, kernel) =
            extensions(&emb.inclusion.compose(&e), &emb.inclusion).expect("E(M) is injective");
        guards.check_enumeration("idempotent extension coset", kernel.order())?;
        for k in kernel.iter() {
            let star = p.add(&k);
            if !star.is_idempotent() {
                continue;
            }
            if let Some(n) = omega
                .iter()
                .find(|n| n.generators().iter().any(|&g| !n.contains(star.apply(g))))
            {
                failure = Some((star, n.clone()));
                break 'outer;
            }
        }
    }
    Ok(HullReport {
        base: m.clone(),
        hull_is_ads: ads(&emb.module, guards)?,
        hull_module: emb.module,
        hypothesis_holds: failure.is_none(),
        hypothesis_failure: failure,
        hull,
        interval,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::direct_sum;
    use crate::iso::are_isomorphic;
    use crate::module::{quotient_module, regular_module};
    use crate::rings::builtin_ring;
    use std::sync::Arc;

    fn ring(name: &str, p: &[u32]) -> Arc<crate::ring::Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    #[test]
    fn interval_of_z2_over_z8() {
        let g = Guards::default();
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        let iv = ads_interval(&z2, &g).unwrap();
        let sizes: Vec<usize> = iv.members.iter().map(|n| n.size()).collect();
        assert_eq!(sizes, vec![2, 4, 8]);
        let rep = ads_hull(&z2, &g).unwrap();
        assert_eq!(rep.hull.size(), 2);
        assert!(rep.hull_is_ads && rep.theorem_holds());
    }

    #[test]
    fn hull_of_z2_plus_z8() {
        let g = Guards::default();
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        let (m, _) = direct_sum(&[z2, z8.clone()]).unwrap();
        let rep = ads_hull(&m, &g).unwrap();
        assert_eq!(rep.interval.hull.hull.size(), 64);
        assert!(rep.interval.image.is_subset(&rep.hull));
        assert!(rep.omega().iter().all(|n| rep.hull.is_subset(n)));
        assert!(rep.theorem_holds());
        // Every ADS module between M and Z8 ⊕ Z8 contains a copy of Z8 ⊕ Z8 here.
        let (z8z8, _) = direct_sum(&[z8.clone(), z8]).unwrap();
        assert!(rep.hull_is_ads);
        assert!(are_isomorphic(&rep.hull_module, &z8z8));
    }

    #[test]
    fn ads_module_is_its_own_hull() {
        let g = Guards::default();
        let local = regular_module(&ring("local-f2xy", &[]));
        let rep = ads_hull(&local, &g).unwrap();
        assert_eq!(rep.hull, rep.interval.image);
        assert!(rep.hull_is_ads && rep.hypothesis_holds);
    }

    #[test]
    fn summand_criterion() {
        let g = Guards::default();
        let ut = regular_module(&ring("upper-triangular", &[2, 2]));
        let c = nonsingular_summand_criterion(&ut, &g).unwrap();
        assert!(c.agreement());
        let m2 = regular_module(&ring("matrix", &[2, 2]));
        let c = nonsingular_summand_criterion(&m2, &g).unwrap();
        assert!(c.agreement() && c.statement);
        let z4 = regular_module(&ring("zmod", &[4]));
        assert!(matches!(
            nonsingular_summand_criterion(&z4, &g),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
