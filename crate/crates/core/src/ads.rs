//! ADS deciders, the CS family and structural checks on complements.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::decomposition::{indecomposable_decomposition, Decomposition};
use crate::error::{Error, Guards, Result};
use crate::injectivity::{
    injective_hull, is_injective, relative_injectivity_witness, ExtensionFailure,
};
use crate::iso::are_isomorphic;
use crate::module::{regular_module, submodule_module, Embedded, ModRef};
use crate::morphism::{end_basis, end_set, extend_hom, extensions, Morphism};
use crate::ring::Ring;
use crate::submodule::{
    complements_of, is_closed, is_fully_invariant, submodule_lattice, Submodule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdsMethod {
    Definition,
    MutualInjectivity,
    ProjectionExtension,
    ComplementIso,
    Cyclic,
    Idempotent,
}

impl AdsMethod {
    pub const ALL: [AdsMethod; 6] = [
        AdsMethod::Definition,
        AdsMethod::MutualInjectivity,
        AdsMethod::ProjectionExtension,
        AdsMethod::ComplementIso,
        AdsMethod::Cyclic,
        AdsMethod::Idempotent,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            AdsMethod::Definition => "definition",
            AdsMethod::MutualInjectivity => "mutual-injectivity",
            AdsMethod::ProjectionExtension => "projection-extension",
            AdsMethod::ComplementIso => "complement-iso",
            AdsMethod::Cyclic => "cyclic",
            AdsMethod::Idempotent => "idempotent",
        }
    }

    pub fn from_tag(s: &str) -> Option<AdsMethod> {
        AdsMethod::ALL.into_iter().find(|m| m.tag() == s)
    }
}

impl fmt::Display for AdsMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Evidence that a module is not ADS.
#[derive(Clone, Debug)]
pub enum AdsWitness {
    /// `M = s ⊕ t`, `c` a complement of `s`, and `M ≠ s ⊕ c`.
    Complement {
        s: Submodule,
        t: Submodule,
        c: Submodule,
    },
    /// `a` is a summand, `source ∩ a = 0`, and some map into `a` from a
    /// submodule of `source` does not extend to `source`.
    Extension {
        a: Submodule,
        source: Submodule,
        failure: ExtensionFailure,
        a_inclusion: Morphism,
        source_inclusion: Morphism,
    },
    /// The projection of `s1 ⊕ s2` onto part `index` has no extension to `M`.
    Projection {
        s1: Submodule,
        s2: Submodule,
        index: usize,
    },
    /// Idempotents `e`, `f` of `End(E(M))` with `eM ⊆ M`, `fE = eE` and
    /// `f(generator) ∉ M`.
    Idempotent {
        e: Morphism,
        f: Morphism,
        embedding: Morphism,
        generator: usize,
    },
}

fn first_complement_containing(
    m: &ModRef,
    a: &Submodule,
    x: &Submodule,
    guards: &Guards,
) -> Result<Submodule> {
    Ok(complements_of(m, a, guards)?
        .into_iter()
        .find(|c| x.is_subset(c))
        .expect("every independent submodule lies in a complement"))
}

fn some_direct_complement(m: &ModRef, s: &Submodule, guards: &Guards) -> Result<Submodule> {
    let lat = submodule_lattice(m, guards)?;
    lat.iter()
        .find(|t| s.is_complementary(m, t))
        .cloned()
        .ok_or_else(|| Error::PreconditionFailed("witness part is not a summand".into()))
}

/// Check that `(s, t, c)` falsifies the definition.
pub fn replay_triple(
    m: &ModRef,
    s: &Submodule,
    t: &Submodule,
    c: &Submodule,
    guards: &Guards,
) -> Result<bool> {
    if !s.is_complementary(m, t) {
        return Ok(false);
    }
    let comps = complements_of(m, s, guards)?;
    Ok(comps.contains(c) && !s.is_complementary(m, c))
}

impl AdsWitness {
    /// A definitional counterexample `(S, T, T')` derived from this witness.
    pub fn definitional(
        &self,
        m: &ModRef,
        guards: &Guards,
    ) -> Result<(Submodule, Submodule, Submodule)> {
        match self {
            AdsWitness::Complement { s, t, c } => Ok((s.clone(), t.clone(), c.clone())),
            AdsWitness::Extension {
                a,
                source,
                failure,
                a_inclusion,
                source_inclusion,
            } => {
                // The graph {x + f(x)} avoids `a`; a complement containing it cannot split off `a`.
                let cm = failure.map.source();
                let graph: Vec<usize> = (0..cm.generator_count())
                    .map(|j| {
                        let g = cm.index(&cm.generator(j));
                        let x = source_inclusion.apply(failure.inclusion.apply(g));
                        let y = a_inclusion.apply(failure.map.apply(g));
                        m.add(x, y)
                    })
                    .collect();
                let x = Submodule::span(m, &graph);
                let k = first_complement_containing(m, a, &x, guards)?;
                let t = if a.is_complementary(m, source) {
                    source.clone()
                } else {
                    some_direct_complement(m, a, guards)?
                };
                Ok((a.clone(), t, k))
            }
            AdsWitness::Projection { s1, s2, .. } => {
                let k = first_complement_containing(m, s1, s2, guards)?;
                let t = some_direct_complement(m, s1, guards)?;
                Ok((s1.clone(), t, k))
            }
            AdsWitness::Idempotent {
                e, f, embedding, ..
            } => {
                let pre = |y: usize| (0..m.size()).find(|&x| embedding.apply(x) == y);
                let gens: Vec<usize> = (0..m.generator_count())
                    .map(|j| m.index(&m.generator(j)))
                    .collect();
                let s_gens: Vec<usize> = gens
                    .iter()
                    .map(|&g| pre(e.apply(embedding.apply(g))).expect("eM lies in M"))
                    .collect();
                let t_gens: Vec<usize> = gens
                    .iter()
                    .zip(&s_gens)
                    .map(|(&g, &s)| m.sub(g, s))
                    .collect();
                let s = Submodule::span(m, &s_gens);
                let t = Submodule::span(m, &t_gens);
                let kernel = ElemSet::from_indices(
                    m.size(),
                    (0..m.size()).filter(|&x| f.apply(embedding.apply(x)) == 0),
                );
                let c = Submodule::from_members(m, kernel)?;
                let k = first_complement_containing(m, &s, &c, guards)?;
                Ok((s, t, k))
            }
        }
    }

    /// Re-check the method-specific failure and the derived definitional failure.
    pub fn replay(&self, m: &ModRef, guards: &Guards) -> Result<bool> {
        let specific = match self {
            AdsWitness::Complement { .. } => true,
            AdsWitness::Extension {
                a, source, failure, ..
            } => {
                failure.replay()
                    && a.is_independent_of(source)
                    && some_direct_complement(m, a, guards).is_ok()
            }
            AdsWitness::Projection { s1, s2, index } => {
                s1.is_independent_of(s2) && projection_extension(m, s1, s2, *index).is_none()
            }
            AdsWitness::Idempotent {
                e,
                f,
                embedding,
                generator,
            } => {
                let image = embedding.image_submodule();
                e.is_idempotent()
                    && f.is_idempotent()
                    && e.image_submodule() == f.image_submodule()
                    && image
                        .generators()
                        .iter()
                        .all(|&g| image.contains(e.apply(g)))
                    && !image.contains(f.apply(embedding.apply(m.index(&m.generator(*generator)))))
            }
        };
        if !specific {
            return Ok(false);
        }
        let (s, t, c) = self.definitional(m, guards)?;
        replay_triple(m, &s, &t, &c, guards)
    }

    /// Compact replayable form: `s=<gens>;t=<gens>;c=<gens>` with element indices.
    pub fn digest(&self, m: &ModRef, guards: &Guards) -> Result<String> {
        let (s, t, c) = self.definitional(m, guards)?;
        Ok(triple_digest(&s, &t, &c))
    }
}

fn join(gens: &[usize]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn triple_digest(s: &Submodule, t: &Submodule, c: &Submodule) -> String {
    format!(
        "s={};t={};c={}",
        join(s.generators()),
        join(t.generators()),
        join(c.generators())
    )
}

/// Parse a digest back into submodules of `m`.
pub fn parse_digest(m: &ModRef, digest: &str) -> Result<(Submodule, Submodule, Submodule)> {
    let mut parts: HashMap<&str, Submodule> = HashMap::new();
    for field in digest.trim().split(';') {
        let (key, val) = field
            .split_once('=')
            .ok_or_else(|| Error::BadParams(format!("malformed digest field `{field}`")))?;
        let mut gens = Vec::new();
        for tok in val.split('.').filter(|t| !t.is_empty()) {
            let g: usize = tok
                .parse()
                .map_err(|_| Error::BadParams(format!("bad element index `{tok}`")))?;
            if g >= m.size() {
                return Err(Error::BadParams(format!("element index {g} out of range")));
            }
            gens.push(g);
        }
        parts.insert(key, Submodule::span(m, &gens));
    }
    let get = |k: &str| {
        parts
            .get(k)
            .cloned()
            .ok_or_else(|| Error::BadParams(format!("digest lacks `{k}`")))
    };
    Ok((get("s")?, get("t")?, get("c")?))
}

pub fn replay_digest(m: &ModRef, digest: &str, guards: &Guards) -> Result<bool> {
    let (s, t, c) = parse_digest(m, digest)?;
    replay_triple(m, &s, &t, &c, guards)
}

#[derive(Clone, Debug)]
pub struct AdsVerdict {
    pub module_id: String,
    pub method: AdsMethod,
    pub verdict: bool,
    pub witness: Option<AdsWitness>,
}

impl AdsVerdict {
    pub fn labelled(mut self, id: &str) -> AdsVerdict {
        self.module_id = id.to_string();
        self
    }
}

/// Lattice, decompositions and extracted parts shared by the sweeps.
struct Sweep<'a> {
    m: &'a ModRef,
    guards: &'a Guards,
    lat: Arc<Vec<Submodule>>,
    decomps: Vec<(Submodule, Submodule)>,
    embedded: HashMap<ElemSet, Embedded>,
}

impl<'a> Sweep<'a> {
    fn new(m: &'a ModRef, guards: &'a Guards) -> Result<Sweep<'a>> {
        let lat = submodule_lattice(m, guards)?;
        let mut decomps = Vec::new();
        for a in lat.iter() {
            for b in lat.iter() {
                if a.size() * b.size() == m.size() && a.is_independent_of(b) {
                    decomps.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(Sweep {
            m,
            guards,
            lat,
            decomps,
            embedded: HashMap::new(),
        })
    }

    /// Each summand once, with its first complement.
    fn summands(&self) -> Vec<(Submodule, Submodule)> {
        let mut seen = HashSet::new();
        self.decomps
            .iter()
            .filter(|(a, _)| seen.insert(a.members().clone()))
            .cloned()
            .collect()
    }

    fn embed(&mut self, s: &Submodule) -> Embedded {
        self.embedded
            .entry(s.members().clone())
            .or_insert_with(|| submodule_module(self.m, s))
            .clone()
    }

    fn definition(&mut self) -> Result<Option<AdsWitness>> {
        for (s, t) in self.summands() {
            for c in complements_of(self.m, &s, self.guards)? {
                if !s.is_complementary(self.m, &c) {
                    return Ok(Some(AdsWitness::Complement { s, t, c }));
                }
            }
        }
        Ok(None)
    }

    fn injectivity_failure(
        &mut self,
        a: &Submodule,
        source: &Submodule,
    ) -> Result<Option<AdsWitness>> {
        let ea = self.embed(a);
        let eb = self.embed(source);
        Ok(
            relative_injectivity_witness(&ea.module, &eb.module, self.guards)?.map(|failure| {
                AdsWitness::Extension {
                    a: a.clone(),
                    source: source.clone(),
                    failure,
                    a_inclusion: ea.inclusion.clone(),
                    source_inclusion: eb.inclusion.clone(),
                }
            }),
        )
    }

    fn mutual_injectivity(&mut self) -> Result<Option<AdsWitness>> {
        for (a, b) in self.decomps.clone() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            if let Some(w) = self.injectivity_failure(&a, &b)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn projection_extension(&mut self) -> Result<Option<AdsWitness>> {
        let lat = self.lat.clone();
        for (s1, _) in self.summands() {
            if s1.is_zero() {
                continue;
            }
            for s2 in lat
                .iter()
                .filter(|s2| !s2.is_zero() && s2.is_independent_of(&s1))
            {
                for index in 0..2 {
                    if projection_extension(self.m, &s1, s2, index).is_none() {
                        return Ok(Some(AdsWitness::Projection {
                            s1: s1.clone(),
                            s2: s2.clone(),
                            index,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    fn complement_iso(&mut self) -> Result<Option<AdsWitness>> {
        for (a, b) in self.decomps.clone() {
            let dec = Decomposition::new(self.m, vec![a.clone(), b.clone()])?;
            let pb = dec.projection(1);
            for c in complements_of(self.m, &a, self.guards)? {
                if pb.image_of(&c).size() != b.size() {
                    return Ok(Some(AdsWitness::Complement { s: a, t: b, c }));
                }
            }
        }
        Ok(None)
    }

    fn cyclic(&mut self) -> Result<Option<AdsWitness>> {
        let mut cyclics: Vec<Submodule> = Vec::new();
        let mut seen = HashSet::new();
        for x in 1..self.m.size() {
            let c = Submodule::span(self.m, &[x]);
            if seen.insert(c.members().clone()) {
                cyclics.push(c);
            }
        }
        cyclics.sort();
        for (a, _) in self.summands() {
            if a.is_zero() {
                continue;
            }
            for c in cyclics.iter().filter(|c| c.is_independent_of(&a)) {
                if let Some(w) = self.injectivity_failure(&a, c)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }
}

/// Extension of the projection `s1 ⊕ s2 → s_{index+1}` to an endomorphism of `m`.
fn projection_extension(
    m: &ModRef,
    s1: &Submodule,
    s2: &Submodule,
    index: usize,
) -> Option<Morphism> {
    let w = s1.sum(m, s2);
    let emb = submodule_module(m, &w);
    let wm = &emb.module;
    let images = (0..wm.generator_count())
        .map(|j| {
            let x = emb.inclusion.apply(wm.index(&wm.generator(j)));
            let a = s1
                .members()
                .iter()
                .find(|&a| s2.contains(m.sub(x, a)))
                .expect("s1 ⊕ s2 contains x");
            let part = if index == 0 { a } else { m.sub(x, a) };
            m.coords(part)
        })
        .collect();
    let pi = Morphism::from_images_unchecked(wm.clone(), m.clone(), images);
    extend_hom(&pi, &emb.inclusion)
}

/// Idempotent criterion on the injective hull.
fn idempotent_method(m: &ModRef, guards: &Guards) -> Result<Option<AdsWitness>> {
    let cert = injective_hull(m, guards)?;
    let e_mod = cert.hull.clone();
    let iota = cert.embedding.clone();
    let image = iota.image_submodule();
    let end_m = end_set(m);
    guards.check_enumeration("endomorphism ring", end_m.order())?;
    let mut eps: Vec<Morphism> = end_m.iter().filter(|f| f.is_idempotent()).collect();
    eps.sort_by_key(|f| f.key());
    let basis = end_basis(&e_mod);
    let id = Morphism::identity(&e_mod);
    let gens: Vec<Vec<u32>> = iota.images().to_vec();
    for eps in eps {
        let (p, kernel) = extensions(&iota.compose(&eps), &iota).expect("E(M) is injective");
        guards.check_enumeration("idempotent extension coset", kernel.order())?;
        for k in kernel.iter() {
            let e = p.add(&k);
            if !e.is_idempotent() {
                continue;
            }
            let one_minus = id.sub(&e);
            for b in &basis {
                let x = e.compose(&b.compose(&one_minus));
                if let Some(j) = gens
                    .iter()
                    .position(|g| !image.contains(e_mod.index(&x.apply_coords(g))))
                {
                    return Ok(Some(AdsWitness::Idempotent {
                        f: e.add(&x),
                        e,
                        embedding: iota,
                        generator: j,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Decide ADS by the chosen method.
pub fn is_ads(m: &ModRef, method: AdsMethod, guards: &Guards) -> Result<AdsVerdict> {
    guards.check_lattice("ADS decider", m.size())?;
    let witness = match method {
        AdsMethod::Idempotent => idempotent_method(m, guards)?,
        _ => {
            let mut sw = Sweep::new(m, guards)?;
            match method {
                AdsMethod::Definition => sw.definition()?,
                AdsMethod::MutualInjectivity => sw.mutual_injectivity()?,
                AdsMethod::ProjectionExtension => sw.projection_extension()?,
                AdsMethod::ComplementIso => sw.complement_iso()?,
                AdsMethod::Cyclic => sw.cyclic()?,
                AdsMethod::Idempotent => unreachable!(),
            }
        }
    };
    Ok(AdsVerdict {
        module_id: String::new(),
        method,
        verdict: witness.is_none(),
        witness,
    })
}

pub fn ads(m: &ModRef, guards: &Guards) -> Result<bool> {
    Ok(is_ads(m, AdsMethod::Definition, guards)?.verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsProperty {
    C1,
    C2,
    C3,
    QuasiContinuous,
    Continuous,
}

fn summand_flags(m: &ModRef, lat: &[Submodule]) -> Vec<bool> {
    lat.iter()
        .map(|a| lat.iter().any(|b| a.is_complementary(m, b)))
        .collect()
}

fn c1(m: &ModRef, lat: &[Submodule], summand: &[bool]) -> Result<bool> {
    for (n, &s) in lat.iter().zip(summand) {
        if !s && is_closed(m, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c2(m: &ModRef, lat: &[Submodule], summand: &[bool]) -> bool {
    let mut embedded: HashMap<usize, ModRef> = HashMap::new();
    let mut get = |i: usize| {
        embedded
            .entry(i)
            .or_insert_with(|| submodule_module(m, &lat[i]).module)
            .clone()
    };
    for (i, a) in lat.iter().enumerate() {
        if summand[i] {
            continue;
        }
        for (j, b) in lat.iter().enumerate() {
            if summand[j] && b.size() == a.size() && !a.is_zero() {
                let (ma, mb) = (get(i), get(j));
                if are_isomorphic(&ma, &mb) {
                    return false;
                }
            }
        }
    }
    true
}

fn c3(m: &ModRef, lat: &[Submodule], summand: &[bool]) -> bool {
    let idx: HashMap<&ElemSet, usize> = lat
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members(), i))
        .collect();
    for (i, a) in lat.iter().enumerate() {
        for (j, b) in lat.iter().enumerate() {
            if summand[i] && summand[j] && a.is_independent_of(b) {
                let s = a.sum(m, b);
                if !summand[idx[s.members()]] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn cs_family(m: &ModRef, p: CsProperty, guards: &Guards) -> Result<bool> {
    let lat = submodule_lattice(m, guards)?;
    let summand = summand_flags(m, &lat);
    Ok(match p {
        CsProperty::C1 => c1(m, &lat, &summand)?,
        CsProperty::C2 => c2(m, &lat, &summand),
        CsProperty::C3 => c3(m, &lat, &summand),
        CsProperty::QuasiContinuous => c1(m, &lat, &summand)? && c3(m, &lat, &summand),
        CsProperty::Continuous => c1(m, &lat, &summand)? && c2(m, &lat, &summand),
    })
}

fn require_ads(m: &ModRef, guards: &Guards) -> Result<()> {
    if ads(m, guards)? {
        Ok(())
    } else {
        Err(Error::PreconditionFailed("module is not ADS".into()))
    }
}

/// A violated instance of a structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub description: String,
}

/// For summands `A` and `(a, c, r)` with `cR ∩ A = 0` and `ann(cr) ⊆ ann(a)`, `a ∈ A r`.
pub fn annihilator_lifting_check(m: &ModRef, guards: &Guards) -> Result<Option<CheckFailure>> {
    require_ads(m, guards)?;
    let sw = Sweep::new(m, guards)?;
    let rs = m.ring().size();
    let ann: Vec<ElemSet> = (0..m.size())
        .map(|x| ElemSet::from_indices(rs, m.annihilator(x)))
        .collect();
    let cyc: Vec<ElemSet> = (0..m.size()).map(|x| m.cyclic(x)).collect();
    for (a_sub, _) in sw.summands() {
        for c in 0..m.size() {
            if !cyc[c].meets_only_in_zero(a_sub.members()) {
                continue;
            }
            for r in 0..rs {
                let cr = m.act(c, r);
                let ar: HashSet<usize> = a_sub.members().iter().map(|a2| m.act(a2, r)).collect();
                for a in a_sub.members().iter() {
                    if ann[cr].is_subset(&ann[a]) && !ar.contains(&a) {
                        return Ok(Some(CheckFailure {
                            description: format!("a={a} c={c} r={r}"),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Closed `A` (summand) and closed `B` with `A ∩ B = 0` give closed `A ⊕ B`;
/// and `A + B` is closed whenever `A ∩ B` is a summand.
pub fn closed_sum_check(m: &ModRef, guards: &Guards) -> Result<Option<CheckFailure>> {
    require_ads(m, guards)?;
    let lat = submodule_lattice(m, guards)?;
    let summand = summand_flags(m, &lat);
    let idx: HashMap<&ElemSet, usize> = lat
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members(), i))
        .collect();
    let closed: Vec<bool> = lat.iter().map(|n| is_closed(m, n)).collect::<Result<_>>()?;
    for (i, a) in lat.iter().enumerate() {
        if !(summand[i] && closed[i]) {
            continue;
        }
        for (j, b) in lat.iter().enumerate() {
            if !closed[j] {
                continue;
            }
            let meet = a.intersection(m, b);
            let direct = meet.is_zero();
            if direct || summand[idx[meet.members()]] {
                let s = a.sum(m, b);
                if !closed[idx[s.members()]] {
                    return Ok(Some(CheckFailure {
                        description: format!(
                            "{} sum of closed {:?} and {:?} is not closed",
                            if direct { "direct" } else { "summand-meet" },
                            a.generators(),
                            b.generators()
                        ),
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct ComplementParametrization {
    /// `{(γ − βθγ)(M) : θ ∈ End(M)}` in canonical order.
    pub family: Vec<Submodule>,
    /// Every member satisfies `M = B ⊕ member`.
    pub members_split: bool,
    pub direct_complements: Vec<Submodule>,
    pub complements: Vec<Submodule>,
    pub matches_direct: bool,
    pub matches_all: bool,
    pub is_ads: bool,
}

/// Sweep all endomorphisms for a decomposition `M = B ⊕ C` given as parts `[B, C]`.
pub fn complement_parametrization(
    dec: &Decomposition,
    guards: &Guards,
) -> Result<ComplementParametrization> {
    if dec.len() != 2 {
        return Err(Error::BadParams(
            "expected a decomposition into two parts".into(),
        ));
    }
    let m = dec.parent();
    let b = &dec.parts()[0];
    let beta = dec.projection(0);
    let gamma = dec.projection(1);
    let end = end_set(m);
    guards.check_enumeration("endomorphism ring", end.order())?;
    let mut family: Vec<Submodule> = Vec::new();
    let mut seen = HashSet::new();
    for theta in end.iter() {
        let map = gamma.sub(&beta.compose(&theta.compose(gamma)));
        let img = map.image_submodule();
        if seen.insert(img.members().clone()) {
            family.push(img);
        }
    }
    family.sort();
    let members_split = family.iter().all(|c| b.is_complementary(m, c));
    let lat = submodule_lattice(m, guards)?;
    let direct_complements: Vec<Submodule> = lat
        .iter()
        .filter(|c| b.is_complementary(m, c))
        .cloned()
        .collect();
    let complements = complements_of(m, b, guards)?;
    Ok(ComplementParametrization {
        matches_direct: family == direct_complements,
        matches_all: family == complements,
        is_ads: ads(m, guards)?,
        family,
        members_split,
        direct_complements,
        complements,
    })
}

#[derive(Clone, Debug)]
pub struct FullyInvariantReport {
    /// Intersection of all complements of `B`.
    pub d: Submodule,
    /// Sum of all fully invariant submodules meeting `B` trivially.
    pub x_star: Submodule,
    /// `x_star` itself meets `B` trivially and is fully invariant.
    pub x_star_admissible: bool,
    pub equal: bool,
}

pub fn fully_invariant_intersection_check(
    dec: &Decomposition,
    guards: &Guards,
) -> Result<FullyInvariantReport> {
    if dec.len() != 2 {
        return Err(Error::BadParams(
            "expected a decomposition into two parts".into(),
        ));
    }
    let m = dec.parent();
    require_ads(m, guards)?;
    let b = &dec.parts()[0];
    let comps = complements_of(m, b, guards)?;
    let d = comps
        .iter()
        .skip(1)
        .fold(comps[0].clone(), |acc, c| acc.intersection(m, c));
    let lat = submodule_lattice(m, guards)?;
    let mut x_star = Submodule::zero(m);
    for x in lat.iter() {
        if x.is_independent_of(b) && is_fully_invariant(m, x)? {
            x_star = x_star.sum(m, x);
        }
    }
    Ok(FullyInvariantReport {
        x_star_admissible: x_star.is_independent_of(b) && is_fully_invariant(m, &x_star)?,
        equal: d == x_star,
        d,
        x_star,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub indecomposable: bool,
    pub self_injective: bool,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        self.indecomposable || self.self_injective
    }
}

/// For a simple ring with `R_R` ADS: `R_R` is indecomposable or self-injective.
pub fn simple_ring_dichotomy_check(r: &Arc<Ring>, guards: &Guards) -> Result<DichotomyReport> {
    if !r.is_simple() {
        return Err(Error::PreconditionFailed("ring is not simple".into()));
    }
    let reg = regular_module(r);
    require_ads(&reg, guards)?;
    Ok(DichotomyReport {
        indecomposable: indecomposable_decomposition(&reg, guards)?.len() == 1,
        self_injective: is_injective(&reg, guards)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::direct_sum;
    use crate::module::quotient_module;
    use crate::rings::builtin_ring;

    fn ring(name: &str, p: &[u32]) -> Arc<Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn z2_plus_z8() -> ModRef {
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        direct_sum(&[z2, z8]).unwrap().0
    }

    #[test]
    fn all_methods_on_small_examples() {
        let g = Guards::default();
        let z12 = regular_module(&ring("zmod", &[12]));
        let z4 = regular_module(&ring("zmod", &[4]));
        let bad = z2_plus_z8();
        for method in AdsMethod::ALL {
            assert!(is_ads(&z12, method, &g).unwrap().verdict, "{method}");
            assert!(is_ads(&z4, method, &g).unwrap().verdict, "{method}");
            let v = is_ads(&bad, method, &g).unwrap();
            assert!(!v.verdict, "{method}");
            let w = v.witness.unwrap();
            assert!(w.replay(&bad, &g).unwrap(), "{method}");
            let d = w.digest(&bad, &g).unwrap();
            assert!(replay_digest(&bad, &d, &g).unwrap());
        }
    }

    #[test]
    fn digest_of_a_split_triple_does_not_replay() {
        let g = Guards::default();
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v, _) = direct_sum(&[f2.clone(), f2]).unwrap();
        assert!(!replay_digest(&v, "s=1;t=2;c=3", &g).unwrap());
        assert!(parse_digest(&v, "s=9;t=;c=").is_err());
    }

    #[test]
    fn cs_examples() {
        let g = Guards::default();
        let local = regular_module(&ring("local-f2xy", &[]));
        assert!(!cs_family(&local, CsProperty::C1, &g).unwrap());
        assert!(ads(&local, &g).unwrap());
        let z8 = regular_module(&ring("zmod", &[8]));
        assert!(cs_family(&z8, CsProperty::QuasiContinuous, &g).unwrap());
        let m2 = regular_module(&ring("matrix", &[2, 2]));
        for p in [
            CsProperty::C1,
            CsProperty::C2,
            CsProperty::C3,
            CsProperty::QuasiContinuous,
            CsProperty::Continuous,
        ] {
            assert!(cs_family(&m2, p, &g).unwrap());
        }
    }

    #[test]
    fn structural_checks() {
        let g = Guards::default();
        let z12 = regular_module(&ring("zmod", &[12]));
        assert!(annihilator_lifting_check(&z12, &g).unwrap().is_none());
        assert!(closed_sum_check(&z12, &g).unwrap().is_none());
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z8z8, _) = direct_sum(&[z8.clone(), z8]).unwrap();
        assert!(closed_sum_check(&z8z8, &g).unwrap().is_none());
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v, dec) = direct_sum(&[f2.clone(), f2]).unwrap();
        let cp = complement_parametrization(&dec, &g).unwrap();
        assert_eq!(
            cp.family,
            vec![Submodule::span(&v, &[3]), Submodule::span(&v, &[2])]
        );
        assert!(cp.matches_direct && cp.matches_all && cp.is_ads && cp.members_split);
        let fi = fully_invariant_intersection_check(&dec, &g).unwrap();
        assert!(fi.d.is_zero() && fi.x_star.is_zero() && fi.equal);
        let bad = z2_plus_z8();
        let lat = submodule_lattice(&bad, &g).unwrap();
        let b = Submodule::span(&bad, &[1]);
        let c = lat
            .iter()
            .find(|c| b.is_complementary(&bad, c))
            .unwrap()
            .clone();
        let dec = Decomposition::new(&bad, vec![b, c]).unwrap();
        let cp = complement_parametrization(&dec, &g).unwrap();
        assert!(cp.matches_direct && !cp.matches_all && !cp.is_ads);
        assert!(matches!(
            fully_invariant_intersection_check(&dec, &g),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn dichotomy() {
        let g = Guards::default();
        for (name, p) in [("matrix", vec![2, 2]), ("zmod", vec![2]), ("gf", vec![4])] {
            assert!(simple_ring_dichotomy_check(&ring(name, &p), &g)
                .unwrap()
                .holds());
        }
        assert!(simple_ring_dichotomy_check(&ring("zmod", &[4]), &g).is_err());
    }
}
