//! Completely ADS modules, discreteness, and the splitting theorems.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::ads::ads;
use crate::ads::{cs_family, CsProperty};
use crate::bitset::ElemSet;
use crate::decomposition::indecomposable_decomposition;
use crate::error::{Error, Guards, Result};
use crate::injectivity::{is_relatively_injective, projective_cover};
use crate::iso::are_isomorphic;
use crate::module::{quotient_module, regular_module, submodule_module, ModRef, Module};
use crate::morphism::{end_set, hom_set};
use crate::ring::Ring;
use crate::submodule::{is_local_module, is_semisimple, submodule_lattice, Submodule};

/// `N·J`, the radical of `n` viewed as a module.
pub fn radical_of(m: &Module, n: &Submodule) -> Submodule {
    let j = m.ring().jacobson_radical();
    let gens: Vec<usize> = n
        .generators()
        .iter()
        .flat_map(|&g| j.iter().map(move |&r| (g, r)))
        .map(|(g, r)| m.act(g, r))
        .collect();
    Submodule::span(m, &gens)
}

/// The first subfactor `B/A` that is not ADS, sweeping by `(|B|, |A|)`.
pub fn completely_ads_failure(
    m: &ModRef,
    guards: &Guards,
) -> Result<Option<(Submodule, Submodule)>> {
    let lat = submodule_lattice(m, guards)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (bi, b) in lat.iter().enumerate() {
        for (ai, a) in lat.iter().enumerate() {
            if a.is_subset(b) && a.size() < b.size() {
                pairs.push((bi, ai));
            }
        }
    }
    pairs.sort_by_key(|&(b, a)| (lat[b].size(), lat[a].size(), b, a));
    let mut embedded: HashMap<usize, crate::module::Embedded> = HashMap::new();
    for (bi, ai) in pairs {
        let emb = embedded
            .entry(bi)
            .or_insert_with(|| submodule_module(m, &lat[bi]));
        let a_in_b = emb.inclusion.preimage_of(&lat[ai]);
        let (q, _) = quotient_module(&emb.module, &a_in_b);
        if !ads(&q, guards)? {
            return Ok(Some((lat[bi].clone(), lat[ai].clone())));
        }
    }
    Ok(None)
}

pub fn is_completely_ads(m: &ModRef, guards: &Guards) -> Result<bool> {
    Ok(completely_ads_failure(m, guards)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discreteness {
    D1,
    D2,
    D3,
    QuasiDiscrete,
    Discrete,
}

struct Summands {
    lat: Arc<Vec<Submodule>>,
    pairs: Vec<(usize, usize)>,
    summand: Vec<bool>,
}

fn summands(m: &ModRef, guards: &Guards) -> Result<Summands> {
    let lat = submodule_lattice(m, guards)?;
    let mut pairs = Vec::new();
    let mut summand = vec![false; lat.len()];
    for (i, a) in lat.iter().enumerate() {
        for (j, b) in lat.iter().enumerate() {
            if a.is_complementary(m, b) {
                pairs.push((i, j));
                summand[i] = true;
            }
        }
    }
    Ok(Summands {
        lat,
        pairs,
        summand,
    })
}

fn d1(m: &ModRef, s: &Summands) -> bool {
    s.lat.iter().all(|a| {
        s.pairs.iter().any(|&(i, j)| {
            let (m1, m2) = (&s.lat[i], &s.lat[j]);
            m1.is_subset(a) && a.intersection(m, m2).is_subset(&radical_of(m, m2))
        })
    })
}

fn d2(m: &ModRef, s: &Summands) -> bool {
    let parts: Vec<ModRef> = s
        .lat
        .iter()
        .zip(&s.summand)
        .map(|(n, &is)| {
            if is {
                submodule_module(m, n).module
            } else {
                m.clone()
            }
        })
        .collect();
    for (a, &is) in s.lat.iter().zip(&s.summand) {
        if is {
            continue;
        }
        let (q, _) = quotient_module(m, a);
        let hit =
            s.lat.iter().enumerate().any(|(k, b)| {
                s.summand[k] && b.size() == q.size() && are_isomorphic(&q, &parts[k])
            });
        if hit {
            return false;
        }
    }
    true
}

fn d3(m: &ModRef, s: &Summands) -> bool {
    let idx: HashMap<&ElemSet, usize> = s
        .lat
        .iter()
        .enumerate()
        .map(|(i, n)| (n.members(), i))
        .collect();
    for (i, a) in s.lat.iter().enumerate() {
        for (j, b) in s.lat.iter().enumerate() {
            if s.summand[i]
                && s.summand[j]
                && a.sum(m, b).size() == m.size()
                && !s.summand[idx[a.intersection(m, b).members()]]
            {
                return false;
            }
        }
    }
    true
}

pub fn discreteness(m: &ModRef, p: Discreteness, guards: &Guards) -> Result<bool> {
    let s = summands(m, guards)?;
    Ok(match p {
        Discreteness::D1 => d1(m, &s),
        Discreteness::D2 => d2(m, &s),
        Discreteness::D3 => d3(m, &s),
        Discreteness::QuasiDiscrete => d1(m, &s) && d3(m, &s),
        Discreteness::Discrete => d1(m, &s) && d2(m, &s),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartTag {
    Local,
    Indecomposable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub id: String,
    pub ok: bool,
    pub witness: Option<String>,
}

impl Clause {
    fn new(id: &str, ok: bool, witness: impl FnOnce() -> String) -> Clause {
        Clause {
            id: id.to_string(),
            ok,
            witness: (!ok).then(witness),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitReport {
    pub module: ModRef,
    pub theorem: &'static str,
    pub semisimple_part: Submodule,
    pub parts: Vec<(Submodule, PartTag)>,
    pub clauses: Vec<Clause>,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.ok)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "theorem {}", self.theorem).unwrap();
        writeln!(
            s,
            "semisimple {:?} size {}",
            self.semisimple_part.generators(),
            self.semisimple_part.size()
        )
        .unwrap();
        for (p, tag) in &self.parts {
            writeln!(s, "part {:?} size {} {:?}", p.generators(), p.size(), tag).unwrap();
        }
        for c in &self.clauses {
            let status = if c.ok { "pass" } else { "fail" };
            match &c.witness {
                Some(w) => writeln!(s, "clause {} {status} {w}", c.id).unwrap(),
                None => writeln!(s, "clause {} {status}", c.id).unwrap(),
            }
        }
        s
    }
}

fn tag(m: &ModRef, p: &Submodule) -> PartTag {
    if is_local_module(&submodule_module(m, p).module) {
        PartTag::Local
    } else {
        PartTag::Indecomposable
    }
}

fn sum_all(m: &ModRef, parts: impl IntoIterator<Item = Submodule>) -> Submodule {
    parts
        .into_iter()
        .fold(Submodule::zero(m), |acc, p| acc.sum(m, &p))
}

fn direct_clause(m: &ModRef, parts: &[Submodule]) -> Clause {
    let product: usize = parts.iter().map(|p| p.size()).product();
    let total = sum_all(m, parts.iter().cloned());
    Clause::new(
        "direct-sum",
        product == m.size() && total.size() == m.size(),
        || {
            format!(
                "sizes multiply to {product}, sum has {} of {}",
                total.size(),
                m.size()
            )
        },
    )
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(what.to_string()))
    }
}

pub fn verify_general_decomposition(m: &ModRef, guards: &Guards) -> Result<SplitReport> {
    require(
        is_completely_ads(m, guards)?,
        "module is not completely ADS",
    )?;
    let dec = indecomposable_decomposition(m, guards)?;
    let k = if m.is_zero() { 0 } else { dec.len() };
    let mut clauses = Vec::new();

    let mut inj_fail = None;
    let mut hom_nonzero = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let (mi, mj) = (dec.part_module(i), dec.part_module(j));
            if inj_fail.is_none() && !is_relatively_injective(mi, mj, guards)? {
                inj_fail = Some((i, j));
            }
            hom_nonzero[i][j] = !hom_set(mi, mj)?.is_trivial();
        }
    }
    clauses.push(Clause::new(
        "relative-injectivity",
        inj_fail.is_none(),
        || {
            format!(
                "part {} is not part {}-injective",
                inj_fail.unwrap().0,
                inj_fail.unwrap().1
            )
        },
    ));
    let simple_part: Vec<bool> = (0..k)
        .map(|j| {
            let p = dec.part_module(j);
            submodule_lattice(p, guards).map(|l| l.len() == 2)
        })
        .collect::<Result<_>>()?;
    let bad_hom = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| hom_nonzero[i][j] && !simple_part[j]);
    clauses.push(Clause::new("homs-into-simple", bad_hom.is_none(), || {
        let (i, j) = bad_hom.unwrap();
        format!("nonzero map from part {i} into non-simple part {j}")
    }));

    // I1: parts receiving a nonzero map from another part.
    let in_s: Vec<bool> = (0..k)
        .map(|i| (0..k).any(|j| j != i && hom_nonzero[j][i]))
        .collect();
    let s = sum_all(
        m,
        (0..k).filter(|&i| in_s[i]).map(|i| dec.parts()[i].clone()),
    );
    let t_parts: Vec<Submodule> = (0..k)
        .filter(|&i| !in_s[i])
        .map(|i| dec.parts()[i].clone())
        .collect();
    clauses.push(Clause::new(
        "semisimple-part",
        is_semisimple(&submodule_module(m, &s).module),
        || format!("S of size {} has nonzero radical", s.size()),
    ));

    let end = end_set(m);
    guards.check_enumeration("endomorphism ring", end.order())?;
    let mut unstable = None;
    for theta in end.iter() {
        if !theta.image_of(&s).is_subset(&s) {
            unstable = Some("theta(S) leaves S".to_string());
            break;
        }
        if let Some(t) = t_parts
            .iter()
            .find(|t| !theta.image_of(t).is_subset(&t.sum(m, &s)))
        {
            unstable = Some(format!(
                "theta moves part {:?} outside part + S",
                t.generators()
            ));
            break;
        }
    }
    clauses.push(Clause::new("theta-stable", unstable.is_none(), || {
        unstable.clone().unwrap()
    }));
    let mut all = vec![s.clone()];
    all.extend(t_parts.iter().cloned());
    clauses.push(direct_clause(m, &all));
    Ok(SplitReport {
        module: m.clone(),
        theorem: "general-decomposition",
        parts: t_parts.iter().map(|p| (p.clone(), tag(m, p))).collect(),
        semisimple_part: s,
        clauses,
    })
}

pub fn verify_quasi_discrete_split(m: &ModRef, guards: &Guards) -> Result<SplitReport> {
    require(
        is_completely_ads(m, guards)?,
        "module is not completely ADS",
    )?;
    require(
        discreteness(m, Discreteness::QuasiDiscrete, guards)?,
        "module is not quasi-discrete",
    )?;
    let mut rep = verify_general_decomposition(m, guards)?;
    rep.theorem = "quasi-discrete-split";
    let nonlocal = rep
        .parts
        .iter()
        .find(|(_, t)| *t != PartTag::Local)
        .map(|(p, _)| p.clone());
    rep.clauses
        .push(Clause::new("parts-local", nonlocal.is_none(), || {
            format!("part {:?} is not local", nonlocal.unwrap().generators())
        }));
    // The remaining part equals its radical; finitely generated forces it to vanish.
    let m2 = Submodule::zero(m);
    rep.clauses.push(Clause::new(
        "radical-part-zero",
        radical_of(m, &m2) == m2 && m2.is_zero(),
        String::new,
    ));
    Ok(rep)
}

/// Least `P ⊆ within` with `y + P = M`; it is a supplement of `y`.
fn supplement_within(
    m: &ModRef,
    y: &Submodule,
    within: &Submodule,
    guards: &Guards,
) -> Result<Option<Submodule>> {
    let lat = submodule_lattice(m, guards)?;
    Ok(lat
        .iter()
        .find(|p| p.is_subset(within) && y.sum(m, p).size() == m.size())
        .cloned())
}

fn is_supplement(m: &ModRef, y: &Submodule, p: &Submodule, guards: &Guards) -> Result<bool> {
    let lat = submodule_lattice(m, guards)?;
    Ok(y.sum(m, p).size() == m.size()
        && !lat
            .iter()
            .any(|q| q.is_subset(p) && q.size() < p.size() && y.sum(m, q).size() == m.size()))
}

pub fn verify_semiperfect_split(m: &ModRef, guards: &Guards) -> Result<SplitReport> {
    let (p, sigma) = projective_cover(m, guards)?;
    require(
        is_completely_ads(&p, guards)?,
        "projective cover is not completely ADS",
    )?;
    let cover = verify_general_decomposition(&p, guards)?;
    let mut clauses = vec![Clause::new("cover-split", cover.passed(), || {
        cover.to_text()
    })];
    let s = sigma.image_of(&cover.semisimple_part);
    let pushed: Vec<Submodule> = cover
        .parts
        .iter()
        .map(|(t, _)| sigma.image_of(t))
        .filter(|t| !t.is_zero())
        .collect();
    let s_parts: Vec<Submodule> = if s.is_zero() {
        Vec::new()
    } else {
        let emb = submodule_module(m, &s);
        indecomposable_decomposition(&emb.module, guards)?
            .parts()
            .iter()
            .map(|q| emb.inclusion.image_of(q))
            .collect()
    };
    clauses.push(Clause::new(
        "semisimple-part",
        is_semisimple(&submodule_module(m, &s).module),
        || format!("S of size {} has nonzero radical", s.size()),
    ));
    let nonlocal = pushed
        .iter()
        .find(|t| !is_local_module(&submodule_module(m, t).module));
    clauses.push(Clause::new("parts-local", nonlocal.is_none(), || {
        format!("part {:?} is not local", nonlocal.unwrap().generators())
    }));
    let mut terms = s_parts.clone();
    terms.extend(pushed.iter().cloned());
    clauses.push(direct_clause(m, &terms));
    let mut missing = None;
    if clauses.last().unwrap().ok {
        for mask in 1u32..(1u32 << terms.len()) {
            let x = sum_all(
                m,
                (0..terms.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| terms[i].clone()),
            );
            let y = sum_all(
                m,
                (0..terms.len())
                    .filter(|i| mask >> i & 1 == 0)
                    .map(|i| terms[i].clone()),
            );
            let found = supplement_within(m, &y, &x, guards)?;
            let ok = match &found {
                Some(p) => is_supplement(m, &y, p, guards)?,
                None => false,
            };
            if !ok {
                missing = Some(mask);
                break;
            }
        }
    }
    clauses.push(Clause::new(
        "partial-sum-supplements",
        missing.is_none(),
        || {
            format!(
                "partial sum {:b} holds no supplement of the rest",
                missing.unwrap()
            )
        },
    ));
    Ok(SplitReport {
        module: m.clone(),
        theorem: "semiperfect-split",
        parts: pushed.iter().map(|t| (t.clone(), tag(m, t))).collect(),
        semisimple_part: s,
        clauses,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    SimpleArtinian,
    Chain,
    Neither,
}

#[derive(Clone, Debug)]
pub struct Block {
    /// Central idempotent cutting out the block.
    pub idempotent: usize,
    pub size: usize,
    pub kind: BlockKind,
    pub commutative: bool,
}

impl Block {
    /// A chain block that is not commutative.
    pub fn flagged(&self) -> bool {
        self.kind == BlockKind::Chain && !self.commutative
    }
}

#[derive(Clone, Debug)]
pub struct PiCReport {
    pub pi_c: bool,
    pub blocks: Vec<Block>,
    pub clauses: Vec<Clause>,
}

impl PiCReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.ok)
    }
}

/// Every cyclic right module is quasi-continuous; if so, check the block structure.
pub fn pi_c_check(r: &Arc<Ring>, guards: &Guards) -> Result<PiCReport> {
    let reg = regular_module(r);
    let ideals = submodule_lattice(&reg, guards)?;
    let mut pi_c = true;
    for i in ideals.iter().filter(|i| i.size() < reg.size()) {
        let (q, _) = quotient_module(&reg, i);
        if !cs_family(&q, CsProperty::QuasiContinuous, guards)? {
            pi_c = false;
            break;
        }
    }
    if !pi_c {
        return Ok(PiCReport {
            pi_c,
            blocks: Vec::new(),
            clauses: Vec::new(),
        });
    }
    let prims = r.primitive_idempotents();
    let modules: Vec<ModRef> = prims
        .iter()
        .map(|&e| submodule_module(&reg, &Submodule::span(&reg, &[e])).module)
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..prims.len() {
        match classes
            .iter_mut()
            .find(|c| are_isomorphic(&modules[c[0]], &modules[i]))
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    let jac = ElemSet::from_indices(r.size(), r.jacobson_radical());
    let mut blocks = Vec::new();
    for class in &classes {
        let c = class.iter().fold(0, |acc, &i| r.add(acc, prims[i]));
        let ideal = Submodule::span(&reg, &[c]);
        let inside: Vec<&Submodule> = ideals.iter().filter(|i| i.is_subset(&ideal)).collect();
        let chain = inside
            .iter()
            .all(|a| inside.iter().all(|b| a.is_subset(b) || b.is_subset(a)));
        let semisimple = ideal.members().meets_only_in_zero(&jac);
        let simple = (1..r.size())
            .filter(|&x| ideal.contains(x))
            .all(|x| r.two_sided_ideal(&[x]).len() == ideal.size());
        let kind = if semisimple && simple {
            BlockKind::SimpleArtinian
        } else if chain {
            BlockKind::Chain
        } else {
            BlockKind::Neither
        };
        let elems: Vec<usize> = ideal.members().iter().collect();
        let commutative = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| r.mul(a, b) == r.mul(b, a)));
        blocks.push(Block {
            idempotent: c,
            size: ideal.size(),
            kind,
            commutative,
        });
    }
    let mut clauses = Vec::new();
    let central = blocks
        .iter()
        .find(|b| !r.is_central(b.idempotent))
        .map(|b| b.idempotent);
    clauses.push(Clause::new("central", central.is_none(), || {
        format!("idempotent {} is not central", central.unwrap())
    }));
    let orth = blocks.iter().enumerate().all(|(i, a)| {
        blocks
            .iter()
            .skip(i + 1)
            .all(|b| r.mul(a.idempotent, b.idempotent) == 0)
    });
    let total = blocks.iter().fold(0, |acc, b| r.add(acc, b.idempotent));
    clauses.push(Clause::new("orthogonal", orth, String::new));
    clauses.push(Clause::new("sum-to-one", total == r.one(), || {
        format!("sum is element {total}")
    }));
    let product: usize = blocks.iter().map(|b| b.size).product();
    clauses.push(Clause::new("multiplies-back", product == r.size(), || {
        format!("block sizes multiply to {product}")
    }));
    let bad = blocks
        .iter()
        .find(|b| b.kind == BlockKind::Neither)
        .map(|b| b.idempotent);
    clauses.push(Clause::new("block-kinds", bad.is_none(), || {
        format!("block {} is neither", bad.unwrap())
    }));
    Ok(PiCReport {
        pi_c,
        blocks,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::direct_sum;
    use crate::rings::builtin_ring;

    fn ring(name: &str, p: &[u32]) -> Arc<Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn z2_over_z8() -> (ModRef, ModRef) {
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        (z2, z8)
    }

    #[test]
    fn completely_ads_examples() {
        let g = Guards::default();
        let (z2, z8) = z2_over_z8();
        assert!(is_completely_ads(&z8, &g).unwrap());
        let (bad, _) = direct_sum(&[z2.clone(), z8]).unwrap();
        let (b, a) = completely_ads_failure(&bad, &g).unwrap().unwrap();
        // Least failing subfactor is Z2 ⊕ Z4 of size 8.
        assert_eq!((b.size(), a.size()), (8, 1));
        let (v, _) = direct_sum(&[z2.clone(), z2]).unwrap();
        assert!(is_completely_ads(&v, &g).unwrap());
    }

    #[test]
    fn discreteness_examples() {
        let g = Guards::default();
        let z4 = regular_module(&ring("zmod", &[4]));
        assert!(discreteness(&z4, Discreteness::D1, &g).unwrap());
        let local = regular_module(&ring("local-f2xy", &[]));
        assert!(discreteness(&local, Discreteness::QuasiDiscrete, &g).unwrap());
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v, _) = direct_sum(&[f2.clone(), f2]).unwrap();
        for p in [
            Discreteness::D1,
            Discreteness::D2,
            Discreteness::D3,
            Discreteness::QuasiDiscrete,
            Discreteness::Discrete,
        ] {
            assert!(discreteness(&v, p, &g).unwrap());
        }
        // (Z/4 ⊕ Z/2)/(2Z/4 ⊕ Z/2) is Z/2, a summand, but that kernel is not.
        let (z2, _) = quotient_module(&z4, &Submodule::span(&z4, &[2]));
        let (w, _) = direct_sum(&[z4, z2]).unwrap();
        assert!(!discreteness(&w, Discreteness::D2, &g).unwrap());
    }

    #[test]
    fn general_decomposition_examples() {
        let g = Guards::default();
        let (_, z8) = z2_over_z8();
        let rep = verify_general_decomposition(&z8, &g).unwrap();
        assert!(rep.passed() && rep.semisimple_part.is_zero());
        assert_eq!(rep.parts.len(), 1);
        assert_eq!(rep.parts[0].1, PartTag::Local);
        let m2 = regular_module(&ring("matrix", &[2, 2]));
        let rep = verify_general_decomposition(&m2, &g).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.semisimple_part.size(), 16);
        assert!(rep.parts.is_empty());
    }

    #[test]
    fn quasi_discrete_split_of_local() {
        let g = Guards::default();
        let local = regular_module(&ring("local-f2xy", &[]));
        let rep = verify_quasi_discrete_split(&local, &g).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(rep.semisimple_part.is_zero());
        assert_eq!(rep.parts.len(), 1);
    }

    #[test]
    fn semiperfect_split_examples() {
        let g = Guards::default();
        let (z2, _) = z2_over_z8();
        let rep = verify_semiperfect_split(&z2, &g).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(rep.semisimple_part.is_zero());
        assert_eq!(rep.parts.len(), 1);
        let m2 = ring("matrix", &[2, 2]);
        let reg = regular_module(&m2);
        let rep = verify_semiperfect_split(&reg, &g).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.semisimple_part.size(), 16);
    }

    #[test]
    fn pi_c_examples() {
        let g = Guards::default();
        let z4 = pi_c_check(&ring("zmod", &[4]), &g).unwrap();
        assert!(z4.pi_c && z4.passed());
        assert_eq!(z4.blocks.len(), 1);
        assert_eq!(z4.blocks[0].kind, BlockKind::Chain);
        let m2 = pi_c_check(&ring("matrix", &[2, 2]), &g).unwrap();
        assert!(m2.pi_c && m2.passed());
        assert_eq!(m2.blocks.len(), 1);
        assert_eq!(m2.blocks[0].kind, BlockKind::SimpleArtinian);
        let p = pi_c_check(&ring("product", &[4, 2]), &g).unwrap();
        assert!(p.pi_c && p.passed());
        let mut kinds: Vec<BlockKind> = p.blocks.iter().map(|b| b.kind).collect();
        kinds.sort_by_key(|k| *k as u8);
        assert_eq!(kinds, vec![BlockKind::SimpleArtinian, BlockKind::Chain]);
        assert!(!pi_c_check(&ring("local-f2xy", &[]), &g).unwrap().pi_c);
        assert!(
            !pi_c_check(&ring("upper-triangular", &[2, 2]), &g)
                .unwrap()
                .pi_c
        );
    }
}
