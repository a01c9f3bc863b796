//! Theorem-verification harness over a catalog.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::ads::{
    annihilator_lifting_check, closed_sum_check, complement_parametrization, cs_family,
    fully_invariant_intersection_check, is_ads, replay_digest, simple_ring_dichotomy_check,
    AdsMethod, CsProperty,
};
use crate::catalog::{Catalog, Entry};
use crate::census::Mutant;
use crate::decomposition::Decomposition;
use crate::error::{Error, Guards, Result};
use crate::hulls::{ads_hull, nonsingular_summand_criterion};
use crate::injectivity::{
    dual_cover_hull, hulls_respect_embedding, injective_hull, is_injective,
    is_relatively_injective, module_property, HullCertificate, InjectivityProperty,
};
use crate::iso::are_isomorphic;
use crate::module::{quotient_module, regular_module, ModRef};
use crate::par;
use crate::structure::{
    discreteness, is_completely_ads, pi_c_check, verify_general_decomposition,
    verify_quasi_discrete_split, verify_semiperfect_split, BlockKind, Discreteness,
};
use crate::submodule::{is_essential, singular, submodule_lattice, Submodule};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub bound: usize,
    pub jobs: usize,
    pub guards: Guards,
    pub mutant: Mutant,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bound: 64,
            jobs: 0,
            guards: Guards::default(),
            mutant: Mutant::default(),
        }
    }
}

pub const SECTIONS: [&str; 13] = [
    "cross-method-agreement",
    "implication-lattice",
    "strictness-witness",
    "non-ads-witness",
    "hull-correctness",
    "complement-parametrization",
    "fully-invariant-intersection",
    "azumaya",
    "structure-theorems",
    "annihilator-lifting",
    "closed-sums",
    "nonsingular-criterion",
    "ads-hull",
];

#[derive(Clone, Debug, Default)]
pub struct Section {
    pub name: String,
    pub checked: usize,
    /// Checks stopped by a size guard.
    pub skipped: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Section {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "section {} {} checked={} skipped={}\n",
            self.name,
            if self.passed() { "pass" } else { "fail" },
            self.checked,
            self.skipped
        );
        for n in &self.notes {
            writeln!(s, "  note {n}").unwrap();
        }
        for f in &self.failures {
            writeln!(s, "  fail {f}").unwrap();
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub catalog: String,
    pub sections: Vec<Section>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("catalog {}\n", self.catalog);
        for sec in &self.sections {
            s += &sec.to_text();
        }
        writeln!(s, "overall {}", if self.passed() { "pass" } else { "fail" }).unwrap();
        s
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

impl Outcome {
    fn from(id: &str, r: Result<Option<String>>) -> Outcome {
        match r {
            Ok(None) => Outcome::Pass,
            Ok(Some(msg)) => Outcome::Fail(format!("{id}: {msg}")),
            Err(Error::SizeGuardExceeded { .. }) => Outcome::Skip,
            Err(e) => Outcome::Fail(format!("{id}: {e}")),
        }
    }
}

fn tally(name: &str, outcomes: impl IntoIterator<Item = Outcome>) -> Section {
    let mut s = Section {
        name: name.to_string(),
        ..Section::default()
    };
    for o in outcomes {
        match o {
            Outcome::Pass => s.checked += 1,
            Outcome::Fail(msg) => {
                s.checked += 1;
                s.failures.push(msg);
            }
            Outcome::Skip => s.skipped += 1,
        }
    }
    s
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

struct Ctx<'a> {
    catalog: &'a Catalog,
    entries: Vec<Entry>,
    opts: VerifyOptions,
}

impl Ctx<'_> {
    fn per_entry<F>(&self, f: F) -> Vec<Outcome>
    where
        F: Fn(&Entry) -> Vec<Outcome> + Sync + Send,
    {
        par::map(&self.entries, self.opts.jobs, f)
            .into_iter()
            .flatten()
            .collect()
    }

    fn has_ring(&self, id: &str) -> bool {
        self.catalog.rings.iter().any(|r| r.id == id)
    }
}

/// Nontrivial ordered decompositions `(B, C)` of `m`.
fn decompositions(m: &ModRef, guards: &Guards) -> Result<Vec<(Submodule, Submodule)>> {
    let lat = submodule_lattice(m, guards)?;
    let mut out = Vec::new();
    for b in lat.iter().filter(|b| !b.is_zero() && b.size() < m.size()) {
        for c in lat.iter() {
            if b.is_complementary(m, c) {
                out.push((b.clone(), c.clone()));
            }
        }
    }
    Ok(out)
}

fn cross_method(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let mutant = ctx.opts.mutant;
    let outs = ctx.per_entry(|e| {
        let id = e.qualified_id();
        let mut decided: Vec<(AdsMethod, bool)> = Vec::new();
        let mut outs = Vec::new();
        for method in AdsMethod::ALL {
            match is_ads(&e.module, method, &g) {
                Ok(v) => {
                    if !v.verdict {
                        let w = v
                            .witness
                            .as_ref()
                            .expect("negative verdicts carry witnesses");
                        let replay = w.replay(&e.module, &g).and_then(|ok| {
                            let d = w.digest(&e.module, &g)?;
                            Ok(ok && replay_digest(&e.module, &d, &g)?)
                        });
                        outs.push(Outcome::from(
                            &id,
                            replay.map(|ok| {
                                fail_if(!ok, || format!("{method} witness does not replay"))
                            }),
                        ));
                    }
                    let flip = mutant.0 == Some(method);
                    decided.push((method, v.verdict != flip));
                }
                Err(Error::SizeGuardExceeded { .. }) => outs.push(Outcome::Skip),
                Err(err) => outs.push(Outcome::Fail(format!("{id}: {method}: {err}"))),
            }
        }
        let agree = decided.windows(2).all(|w| w[0].1 == w[1].1);
        outs.push(if agree {
            Outcome::Pass
        } else {
            let detail: Vec<String> = decided.iter().map(|(m, v)| format!("{m}={v}")).collect();
            Outcome::Fail(format!("{id}: methods disagree: {}", detail.join(" ")))
        });
        outs
    });
    tally("cross-method-agreement", outs)
}

fn implication_lattice(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| {
        let m = &e.module;
        let r = (|| -> Result<Option<String>> {
            let ads = is_ads(m, AdsMethod::Definition, &g)?.verdict;
            let c1 = cs_family(m, CsProperty::C1, &g)?;
            let qc = cs_family(m, CsProperty::QuasiContinuous, &g)?;
            let cont = cs_family(m, CsProperty::Continuous, &g)?;
            let qi = module_property(m, InjectivityProperty::QuasiInjective, &g)?;
            let inj = module_property(m, InjectivityProperty::Injective, &g)?;
            let chain = [
                (qc, ads, "quasi-continuous but not ADS"),
                (ads && c1, qc, "ADS and C1 but not quasi-continuous"),
                (inj, qi, "injective but not quasi-injective"),
                (qi, cont, "quasi-injective but not continuous"),
                (cont, qc, "continuous but not quasi-continuous"),
                (qc, c1, "quasi-continuous but not C1"),
            ];
            Ok(chain
                .iter()
                .find(|(p, q, _)| *p && !*q)
                .map(|(_, _, msg)| msg.to_string()))
        })();
        vec![Outcome::from(&e.qualified_id(), r)]
    });
    tally("implication-lattice", outs)
}

fn strictness(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let found: Vec<Option<String>> = par::map(&ctx.entries, ctx.opts.jobs, |e| {
        let ads = is_ads(&e.module, AdsMethod::Definition, &g).ok()?.verdict;
        let qc = cs_family(&e.module, CsProperty::QuasiContinuous, &g).ok()?;
        (ads && !qc).then(|| e.qualified_id())
    });
    let found: Vec<String> = found.into_iter().flatten().collect();
    let mut s = tally("strictness-witness", std::iter::empty());
    s.notes
        .push(format!("ADS but not quasi-continuous: {}", found.join(" ")));
    if ctx.has_ring("local-f2xy") {
        s.checked = 1;
        if !found.iter().any(|id| id == "local-f2xy:regular") {
            s.failures
                .push("local-f2xy:regular is not a strictness witness".into());
        }
    } else if !found.is_empty() {
        s.checked = 1;
    }
    s
}

fn non_ads_witness(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let mut s = tally("non-ads-witness", std::iter::empty());
    if !ctx.has_ring("zmod8") {
        s.notes.push("zmod8 not in catalog".into());
        return s;
    }
    let e = match ctx.catalog.find("zmod8:Z2+Z8") {
        Ok(e) => e,
        Err(err) => {
            s.failures.push(err.to_string());
            return s;
        }
    };
    for method in AdsMethod::ALL {
        s.checked += 1;
        match is_ads(&e.module, method, &g) {
            Ok(v) if !v.verdict => {
                let w = v.witness.unwrap();
                if !w.replay(&e.module, &g).unwrap_or(false) {
                    s.failures.push(format!("{method} witness does not replay"));
                }
                if let Ok(d) = w.digest(&e.module, &g) {
                    s.notes.push(format!("{method} {d}"));
                }
            }
            Ok(_) => s.failures.push(format!("{method} reports ADS")),
            Err(err) => s.failures.push(format!("{method}: {err}")),
        }
    }
    s
}

fn hull_correctness(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let mut outs = ctx.per_entry(|e| {
        let m = &e.module;
        let id = e.qualified_id();
        let r = (|| -> Result<Option<String>> {
            let cert = injective_hull(m, &g)?;
            if !cert.is_valid() {
                return Ok(Some("certificate invalid".into()));
            }
            // Re-derive both certificate claims independently.
            if !is_injective(&cert.hull, &g)? {
                return Ok(Some("hull fails the Baer test".into()));
            }
            if !is_essential(&cert.hull, &cert.embedding.image_submodule())? {
                return Ok(Some("image is not essential".into()));
            }
            let perm: Vec<usize> = (0..m.generator_count()).rev().collect();
            let other = Arc::new(m.permute_generators(&perm)?);
            let cert2 = injective_hull(&other, &g)?;
            if !are_isomorphic(&cert.hull, &cert2.hull) {
                return Ok(Some("hulls under two generator orderings differ".into()));
            }
            if m.size() <= 16 && !are_isomorphic(&cert.hull, &dual_cover_hull(m, &g)?) {
                return Ok(Some("dual-of-cover oracle disagrees".into()));
            }
            Ok(None)
        })();
        vec![Outcome::from(&id, r)]
    });
    if ctx.has_ring("zmod8") {
        let r = (|| -> Result<Option<String>> {
            let z8 = ctx.catalog.find("zmod8:Z8")?.module;
            let z2 = ctx.catalog.find("zmod8:Z2")?.module;
            let cert = injective_hull(&z2, &g)?;
            Ok(fail_if(!are_isomorphic(&cert.hull, &z8), || {
                "E(Z2) is not Z8".into()
            }))
        })();
        outs.push(Outcome::from("zmod8:Z2", r));
    }
    tally("hull-correctness", outs)
}

fn complement_param(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| {
        let m = &e.module;
        let id = e.qualified_id();
        let r = (|| -> Result<Vec<Outcome>> {
            let decs = decompositions(m, &g)?;
            let mut outs = Vec::new();
            let mut any_mismatch = false;
            let ads = is_ads(m, AdsMethod::Definition, &g)?.verdict;
            for (b, c) in &decs {
                let dec = Decomposition::new(m, vec![b.clone(), c.clone()])?;
                let cp = complement_parametrization(&dec, &g)?;
                any_mismatch |= !cp.matches_all;
                let msg = if !cp.members_split || !cp.matches_direct {
                    Some(format!(
                        "theta family differs from direct complements of {:?}",
                        b.generators()
                    ))
                } else if ads && !cp.matches_all {
                    Some(format!(
                        "ADS but theta family misses complements of {:?}",
                        b.generators()
                    ))
                } else {
                    None
                };
                outs.push(Outcome::from(&id, Ok(msg)));
            }
            if !decs.is_empty() && !ads {
                outs.push(Outcome::from(
                    &id,
                    Ok(fail_if(!any_mismatch, || {
                        "not ADS yet every theta family is complete".into()
                    })),
                ));
            }
            Ok(outs)
        })();
        r.unwrap_or_else(|err| vec![Outcome::from(&id, Err(err))])
    });
    tally("complement-parametrization", outs)
}

fn fully_invariant(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| {
        let m = &e.module;
        let id = e.qualified_id();
        let r = (|| -> Result<Vec<Outcome>> {
            if !is_ads(m, AdsMethod::Definition, &g)?.verdict {
                return Ok(Vec::new());
            }
            let mut outs = Vec::new();
            for (b, c) in decompositions(m, &g)? {
                let dec = Decomposition::new(m, vec![b.clone(), c])?;
                let rep = fully_invariant_intersection_check(&dec, &g)?;
                outs.push(Outcome::from(
                    &id,
                    Ok(fail_if(!rep.equal || !rep.x_star_admissible, || {
                        format!("D != X* for B = {:?}", b.generators())
                    })),
                ));
            }
            Ok(outs)
        })();
        r.unwrap_or_else(|err| vec![Outcome::from(&id, Err(err))])
    });
    tally("fully-invariant-intersection", outs)
}

fn azumaya(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let certs: Vec<Option<HullCertificate>> = par::map(&ctx.entries, ctx.opts.jobs, |e| {
        injective_hull(&e.module, &g).ok()
    });
    let n = ctx.entries.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| ctx.entries[i].ring_id == ctx.entries[j].ring_id)
        .collect();
    let outs: Vec<Outcome> = par::map(&pairs, ctx.opts.jobs, |&(i, j)| {
        let (m, nn) = (&ctx.entries[i], &ctx.entries[j]);
        let id = format!("{} / {}", m.qualified_id(), nn.module_id);
        let (Some(em), Some(en)) = (&certs[i], &certs[j]) else {
            return None;
        };
        match is_relatively_injective(&m.module, &nn.module, &g) {
            Ok(false) => None,
            Ok(true) => Some(Outcome::from(
                &id,
                hulls_respect_embedding(em, en)
                    .map(|ok| fail_if(!ok, || "some map E(N) → E(M) moves N outside M".into())),
            )),
            Err(err) => Some(Outcome::from(&id, Err(err))),
        }
    })
    .into_iter()
    .flatten()
    .collect();
    let mut s = tally("azumaya", outs);
    s.skipped += certs.iter().filter(|c| c.is_none()).count();
    s
}

fn structure_theorems(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let mut outs = ctx.per_entry(|e| {
        let m = &e.module;
        let id = e.qualified_id();
        let mut outs = Vec::new();
        match is_completely_ads(m, &g) {
            Ok(true) => {
                outs.push(Outcome::from(
                    &format!("{id} general"),
                    verify_general_decomposition(m, &g)
                        .map(|r| fail_if(!r.passed(), || r.to_text())),
                ));
                match discreteness(m, Discreteness::QuasiDiscrete, &g) {
                    Ok(true) => outs.push(Outcome::from(
                        &format!("{id} quasi-discrete"),
                        verify_quasi_discrete_split(m, &g)
                            .map(|r| fail_if(!r.passed(), || r.to_text())),
                    )),
                    Ok(false) => {}
                    Err(err) => outs.push(Outcome::from(&id, Err(err))),
                }
            }
            Ok(false) => {}
            Err(err) => outs.push(Outcome::from(&id, Err(err))),
        }
        match verify_semiperfect_split(m, &g) {
            Ok(r) => outs.push(Outcome::from(
                &format!("{id} semiperfect"),
                Ok(fail_if(!r.passed(), || r.to_text())),
            )),
            Err(Error::PreconditionFailed(_)) => {}
            Err(err) => outs.push(Outcome::from(&id, Err(err))),
        }
        outs
    });
    let mut notes = Vec::new();
    for cr in &ctx.catalog.rings {
        let expected = ["zmod4", "zmod8", "mat2-f2", "z2xz4"].contains(&cr.id.as_str());
        let r = pi_c_check(&cr.ring, &g).map(|rep| {
            let kinds: Vec<String> = rep.blocks.iter().map(|b| format!("{:?}", b.kind)).collect();
            notes.push(format!(
                "{} pi-c={} blocks=[{}]",
                cr.id,
                rep.pi_c,
                kinds.join(",")
            ));
            if expected && !rep.pi_c {
                Some("expected every cyclic to be quasi-continuous".to_string())
            } else if rep.pi_c
                && (!rep.passed() || rep.blocks.iter().any(|b| b.kind == BlockKind::Neither))
            {
                Some(format!("block structure fails: {:?}", rep.clauses))
            } else {
                None
            }
        });
        outs.push(Outcome::from(&format!("{} pi-c", cr.id), r));
        if cr.ring.is_simple() {
            let r = simple_ring_dichotomy_check(&cr.ring, &g).map(|d| {
                fail_if(!d.holds(), || {
                    "neither indecomposable nor self-injective".into()
                })
            });
            match r {
                Err(Error::PreconditionFailed(_)) => {}
                r => outs.push(Outcome::from(&format!("{} dichotomy", cr.id), r)),
            }
        }
    }
    let mut s = tally("structure-theorems", outs);
    s.notes = notes;
    s
}

fn ads_only<F>(ctx: &Ctx, name: &str, check: F) -> Section
where
    F: Fn(&ModRef, &Guards) -> Result<Option<String>> + Sync + Send,
{
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| match is_ads(&e.module, AdsMethod::Definition, &g) {
        Ok(v) if v.verdict => vec![Outcome::from(&e.qualified_id(), check(&e.module, &g))],
        Ok(_) => Vec::new(),
        Err(err) => vec![Outcome::from(&e.qualified_id(), Err(err))],
    });
    tally(name, outs)
}

fn nonsingular(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| {
        if !singular(&e.module).is_zero() {
            return Vec::new();
        }
        let r = nonsingular_summand_criterion(&e.module, &g).map(|c| {
            fail_if(!c.agreement(), || {
                format!(
                    "statement={} ads={} witness={:?}",
                    c.statement,
                    c.ads,
                    c.witness
                        .map(|(a, b)| (a.generators().to_vec(), b.generators().to_vec()))
                )
            })
        });
        vec![Outcome::from(&e.qualified_id(), r)]
    });
    tally("nonsingular-criterion", outs)
}

fn ads_hull_section(ctx: &Ctx) -> Section {
    let g = ctx.opts.guards;
    let outs = ctx.per_entry(|e| {
        let r = ads_hull(&e.module, &g).map(|rep| {
            let e_whole = Submodule::whole(&rep.interval.hull.hull);
            let invariants = rep.interval.image.is_subset(&rep.hull)
                && rep.omega().iter().all(|n| rep.hull.is_subset(n))
                && rep.omega().contains(&e_whole);
            // A cyclic module as large as the ring is the regular module.
            let regular = e.module.size() == e.module.ring().size() && !e.module_id.contains('+');
            if !invariants {
                Some("hull is not squeezed between M and every member".to_string())
            } else if !rep.theorem_holds() {
                Some("stabilization holds but the hull is not ADS".to_string())
            } else if regular && !rep.hypothesis_holds {
                Some("stabilization fails for a regular module".to_string())
            } else {
                None
            }
        });
        vec![Outcome::from(&e.qualified_id(), r)]
    });
    tally("ads-hull", outs)
}

pub fn run_section(name: &str, catalog: &Catalog, opts: &VerifyOptions) -> Result<Section> {
    let ctx = Ctx {
        catalog,
        entries: catalog.entries(opts.bound)?,
        opts: *opts,
    };
    Ok(match name {
        "cross-method-agreement" => cross_method(&ctx),
        "implication-lattice" => implication_lattice(&ctx),
        "strictness-witness" => strictness(&ctx),
        "non-ads-witness" => non_ads_witness(&ctx),
        "hull-correctness" => hull_correctness(&ctx),
        "complement-parametrization" => complement_param(&ctx),
        "fully-invariant-intersection" => fully_invariant(&ctx),
        "azumaya" => azumaya(&ctx),
        "structure-theorems" => structure_theorems(&ctx),
        "annihilator-lifting" => ads_only(&ctx, name, |m, g| {
            Ok(annihilator_lifting_check(m, g)?.map(|f| f.description))
        }),
        "closed-sums" => ads_only(&ctx, name, |m, g| {
            Ok(closed_sum_check(m, g)?.map(|f| f.description))
        }),
        "nonsingular-criterion" => nonsingular(&ctx),
        "ads-hull" => ads_hull_section(&ctx),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

pub fn verify(catalog: &Catalog, opts: &VerifyOptions) -> Result<VerifyReport> {
    let sections = SECTIONS
        .iter()
        .map(|name| run_section(name, catalog, opts))
        .collect::<Result<_>>()?;
    Ok(VerifyReport {
        catalog: catalog.id.clone(),
        sections,
    })
}

/// `E(Z/2) ≅ Z/8` over `Z/8`, independent of any catalog.
pub fn z2_hull_is_z8(guards: &Guards) -> Result<bool> {
    let z8 = regular_module(&crate::catalog::catalog_ring("zmod8")?);
    let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
    Ok(are_isomorphic(&injective_hull(&z2, guards)?.hull, &z8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semisimple_catalog_passes() {
        let c = Catalog::load("semisimple").unwrap();
        let rep = verify(&c, &VerifyOptions::default()).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }

    #[test]
    fn mutant_breaks_agreement() {
        let c = Catalog::load("semisimple").unwrap();
        let opts = VerifyOptions {
            mutant: Mutant(Some(AdsMethod::Idempotent)),
            ..VerifyOptions::default()
        };
        let s = run_section("cross-method-agreement", &c, &opts).unwrap();
        assert!(!s.passed());
        assert!(run_section("no-such-section", &c, &opts).is_err());
    }

    #[test]
    fn z2_hull() {
        assert!(z2_hull_is_z8(&Guards::default()).unwrap());
    }
}
