//! Finite right modules over a finite ring.
//!
//! A module is an additive group `Z/e_0 x ... x Z/e_{m-1}` together with one
//! `m x m` action matrix per additive generator of the ring: row `j` of
//! matrix `a` holds the coordinates of `u_j * g_a`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::arith::Radix;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::ring::Ring;
use crate::snf::{smith, Subgroup};
use crate::submodule::Submodule;

pub type ModRef = Arc<Module>;

const ACT_TABLE_LIMIT: usize = 1 << 22;

pub struct Module {
    ring: Arc<Ring>,
    radix: Radix,
    action: Vec<Vec<Vec<u32>>>,
    act_table: OnceLock<Option<Vec<u32>>>,
    pub(crate) lattice_cache: OnceLock<Arc<Vec<Submodule>>>,
    pub(crate) end_cache: OnceLock<Subgroup>,
    socle_cache: OnceLock<ElemSet>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module")
            .field("orders", &self.radix.orders())
            .field("action", &self.action)
            .finish()
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.radix == other.radix && self.action == other.action
    }
}

impl Eq for Module {}

impl Module {
    /// Validate and build a module.
    pub fn new(ring: Arc<Ring>, orders: Vec<u32>, action: Vec<Vec<Vec<i64>>>) -> Result<Module> {
        let m = orders.len();
        let k = ring.generator_count();
        if orders.contains(&0) {
            return Err(Error::InvalidModule(
                "generator orders must be positive".into(),
            ));
        }
        if action.len() != k
            || action
                .iter()
                .any(|a| a.len() != m || a.iter().any(|r| r.len() != m))
        {
            return Err(Error::InvalidModule(format!(
                "expected {k} action matrices of size {m}x{m}"
            )));
        }
        let radix = Radix::new(&orders);
        let action: Vec<Vec<Vec<u32>>> = action
            .iter()
            .map(|a| a.iter().map(|row| radix.reduce(row)).collect())
            .collect();
        for (a, mat) in action.iter().enumerate() {
            for (j, row) in mat.iter().enumerate() {
                for (t, &c) in row.iter().enumerate() {
                    let et = orders[t] as u64;
                    if !(orders[j] as u64 * c as u64).is_multiple_of(et) {
                        return Err(Error::InvalidModule(format!(
                            "row {j} of action matrix {a} ignores the order of generator {j}"
                        )));
                    }
                    if !(ring.orders()[a] as u64 * c as u64).is_multiple_of(et) {
                        return Err(Error::InvalidModule(format!(
                            "action matrix {a} ignores the order of ring generator {a}"
                        )));
                    }
                }
            }
        }
        let module = Module {
            ring,
            radix,
            action,
            act_table: OnceLock::new(),
            lattice_cache: OnceLock::new(),
            end_cache: OnceLock::new(),
            socle_cache: OnceLock::new(),
        };
        let ring = &module.ring;
        for j in 0..m {
            let mut u = vec![0u32; m];
            u[j] = 1 % orders[j];
            if module.act_coords(&u, ring.unity_coords()) != u {
                return Err(Error::InvalidModule(format!(
                    "unity does not act as identity on generator {j}"
                )));
            }
            for a in 0..k {
                for b in 0..k {
                    let ga = ring.generator(a);
                    let gb = ring.generator(b);
                    let lhs = module.act_coords(&module.act_coords(&u, &ga), &gb);
                    let rhs = module.act_coords(&u, &ring.mul_coords(&ga, &gb));
                    if lhs != rhs {
                        return Err(Error::InvalidModule(format!(
                            "action is not associative on generator {j} with ring generators ({a}, {b})"
                        )));
                    }
                }
            }
        }
        Ok(module)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn radix(&self) -> &Radix {
        &self.radix
    }

    pub fn orders(&self) -> &[u32] {
        self.radix.orders()
    }

    pub fn generator_count(&self) -> usize {
        self.radix.rank()
    }

    pub fn size(&self) -> usize {
        self.radix.size()
    }

    pub fn action(&self) -> &[Vec<Vec<u32>>] {
        &self.action
    }

    pub fn generator(&self, j: usize) -> Vec<u32> {
        let mut u = vec![0u32; self.generator_count()];
        u[j] = 1 % self.orders()[j];
        u
    }

    pub fn coords(&self, x: usize) -> Vec<u32> {
        self.radix.decode(x)
    }

    pub fn index(&self, coords: &[u32]) -> usize {
        self.radix.encode(coords)
    }

    /// `x * g_a` for a ring generator `g_a`.
    pub fn act_generator_coords(&self, x: &[u32], a: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.generator_count()];
        for (j, &xj) in x.iter().enumerate() {
            if xj != 0 {
                self.radix
                    .add_scaled_coords(&mut out, &self.action[a][j], xj as u64);
            }
        }
        out
    }

    /// `x * r` with `r` given in ring coordinates.
    pub fn act_coords(&self, x: &[u32], r: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.generator_count()];
        for (a, &ra) in r.iter().enumerate() {
            if ra != 0 {
                let xa = self.act_generator_coords(x, a);
                self.radix.add_scaled_coords(&mut out, &xa, ra as u64);
            }
        }
        out
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.act_table
            .get_or_init(|| {
                let n = self.size();
                let rn = self.ring.size();
                if n.saturating_mul(rn) > ACT_TABLE_LIMIT {
                    return None;
                }
                let k = self.ring.generator_count();
                let rcoords: Vec<Vec<u32>> = (0..rn).map(|r| self.ring.coords(r)).collect();
                let mut t = vec![0u32; n * rn];
                let mut x = vec![0u32; self.generator_count()];
                for xi in 0..n {
                    self.radix.decode_into(xi, &mut x);
                    let per_gen: Vec<Vec<u32>> =
                        (0..k).map(|a| self.act_generator_coords(&x, a)).collect();
                    for (r, rc) in rcoords.iter().enumerate() {
                        let mut out = vec![0u32; self.generator_count()];
                        for (a, &ra) in rc.iter().enumerate() {
                            if ra != 0 {
                                self.radix
                                    .add_scaled_coords(&mut out, &per_gen[a], ra as u64);
                            }
                        }
                        t[xi * rn + r] = self.radix.encode(&out) as u32;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// `x * r` on element and ring indices.
    #[inline]
    pub fn act(&self, x: usize, r: usize) -> usize {
        match self.table() {
            Some(t) => t[x * self.ring.size() + r] as usize,
            None => self
                .radix
                .encode(&self.act_coords(&self.radix.decode(x), &self.ring.coords(r))),
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.radix.add(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.radix.neg(a)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.radix.sub(a, b)
    }

    /// `xR` as an element set.
    pub fn cyclic(&self, x: usize) -> ElemSet {
        let mut s = ElemSet::empty(self.size());
        for r in 0..self.ring.size() {
            s.insert(self.act(x, r));
        }
        s
    }

    /// Right annihilator of `x` as ring element indices.
    pub fn annihilator(&self, x: usize) -> Vec<usize> {
        (0..self.ring.size())
            .filter(|&r| self.act(x, r) == 0)
            .collect()
    }

    /// Same module with additive generators listed in the order `perm`.
    pub fn permute_generators(&self, perm: &[usize]) -> Result<Module> {
        let m = self.generator_count();
        let mut seen = vec![false; m];
        if perm.len() != m
            || perm
                .iter()
                .any(|&p| p >= m || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::BadParams(
                "not a permutation of the generators".into(),
            ));
        }
        let orders: Vec<u32> = perm.iter().map(|&p| self.orders()[p]).collect();
        let action = self
            .action
            .iter()
            .map(|mat| {
                perm.iter()
                    .map(|&p| perm.iter().map(|&q| mat[p][q] as i64).collect())
                    .collect()
            })
            .collect();
        Module::new(self.ring.clone(), orders, action)
    }

    /// Elements killed by the Jacobson radical, i.e. the socle.
    pub fn socle_set(&self) -> &ElemSet {
        self.socle_cache.get_or_init(|| {
            let j = self.ring.jacobson_radical();
            ElemSet::from_indices(
                self.size(),
                (0..self.size()).filter(|&x| j.iter().all(|&r| self.act(x, r) == 0)),
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }
}

/// The right regular module `R_R`.
pub fn regular_module(ring: &Arc<Ring>) -> ModRef {
    let k = ring.generator_count();
    let action = (0..k)
        .map(|a| {
            (0..k)
                .map(|j| ring.structure()[j][a].iter().map(|&c| c as i64).collect())
                .collect()
        })
        .collect();
    Arc::new(
        Module::new(ring.clone(), ring.orders().to_vec(), action).expect("regular module is valid"),
    )
}

pub fn zero_module(ring: &Arc<Ring>) -> ModRef {
    let k = ring.generator_count();
    Arc::new(
        Module::new(ring.clone(), Vec::new(), vec![Vec::new(); k]).expect("zero module is valid"),
    )
}

/// External direct sum, with the injections of the summands.
pub fn external_sum(parts: &[ModRef]) -> Result<(ModRef, Vec<Morphism>)> {
    let Some(first) = parts.first() else {
        return Err(Error::BadParams("direct sum of no modules".into()));
    };
    let ring = first.ring().clone();
    if parts.iter().any(|p| **p.ring() != *ring) {
        return Err(Error::RingMismatch);
    }
    let m: usize = parts.iter().map(|p| p.generator_count()).sum();
    let mut orders = Vec::with_capacity(m);
    for p in parts {
        orders.extend_from_slice(p.orders());
    }
    let k = ring.generator_count();
    let mut action = vec![vec![vec![0i64; m]; m]; k];
    let mut offset = 0;
    for p in parts {
        for (a, mat) in p.action().iter().enumerate() {
            for (j, row) in mat.iter().enumerate() {
                for (t, &c) in row.iter().enumerate() {
                    action[a][offset + j][offset + t] = c as i64;
                }
            }
        }
        offset += p.generator_count();
    }
    let sum = Arc::new(Module::new(ring, orders, action)?);
    let mut injections = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for p in parts {
        let images = (0..p.generator_count())
            .map(|j| {
                let mut v = vec![0u32; m];
                v[offset + j] = 1 % sum.orders()[offset + j];
                v
            })
            .collect();
        injections.push(Morphism::from_images_unchecked(
            p.clone(),
            sum.clone(),
            images,
        ));
        offset += p.generator_count();
    }
    Ok((sum, injections))
}

/// A submodule presented as a module in its own right.
#[derive(Debug, Clone)]
pub struct Embedded {
    pub module: ModRef,
    pub inclusion: Morphism,
    lookup: HashMap<usize, usize>,
}

impl Embedded {
    /// Index in the extracted module of an ambient element of the submodule.
    pub fn pull(&self, ambient: usize) -> Option<usize> {
        self.lookup.get(&ambient).copied()
    }
}

/// Extract `n` as a standalone module with its inclusion into `m`.
pub fn submodule_module(m: &ModRef, n: &Submodule) -> Embedded {
    let k = m.ring().generator_count();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for &x in n.generators() {
        let xc = m.coords(x);
        gens.push(xc.clone());
        for a in 0..k {
            gens.push(m.act_generator_coords(&xc, a));
        }
    }
    let group = Subgroup::generated(m.orders(), &gens);
    let orders: Vec<u32> = group.orders().iter().map(|&o| o as u32).collect();
    let basis = group.basis().to_vec();
    let sub_radix = Radix::new(&orders);
    let mut lookup = HashMap::with_capacity(n.size());
    for (idx, v) in group.elements().enumerate() {
        // `elements()` walks coefficients in mixed-radix order, matching `sub_radix`.
        lookup.insert(m.index(&v), idx);
    }
    debug_assert_eq!(lookup.len(), n.size());
    let action = (0..k)
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let img = m.index(&m.act_generator_coords(b, a));
                    let idx = lookup[&img];
                    sub_radix.decode(idx).iter().map(|&c| c as i64).collect()
                })
                .collect()
        })
        .collect();
    let module =
        Arc::new(Module::new(m.ring().clone(), orders, action).expect("submodule is a module"));
    let inclusion = Morphism::from_images_unchecked(module.clone(), m.clone(), basis);
    Embedded {
        module,
        inclusion,
        lookup,
    }
}

/// `m / n` with its canonical epimorphism.
pub fn quotient_module(m: &ModRef, n: &Submodule) -> (ModRef, Morphism) {
    let gens = m.generator_count();
    let l = m.radix().exponent();
    let mut rel: Vec<Vec<u64>> = Vec::new();
    for j in 0..gens {
        let mut row = vec![0u64; gens];
        row[j] = m.orders()[j] as u64 % l;
        rel.push(row);
    }
    let k = m.ring().generator_count();
    for &x in n.generators() {
        let xc = m.coords(x);
        rel.push(xc.iter().map(|&c| c as u64).collect());
        for a in 0..k {
            rel.push(
                m.act_generator_coords(&xc, a)
                    .iter()
                    .map(|&c| c as u64)
                    .collect(),
            );
        }
    }
    let sf = smith(&rel, gens, l);
    let kept: Vec<(usize, u64)> = (0..gens)
        .filter_map(|i| {
            let d = sf.diag.get(i).copied().unwrap_or(0);
            let q = if d == 0 { l } else { crate::arith::gcd(d, l) };
            (q > 1).then_some((i, q))
        })
        .collect();
    let orders: Vec<u32> = kept.iter().map(|&(_, q)| q as u32).collect();
    let project = |x: &[u32]| -> Vec<u32> {
        kept.iter()
            .map(|&(i, q)| {
                let s: u64 = x
                    .iter()
                    .enumerate()
                    .map(|(r, &c)| c as u64 * sf.v[r][i] % l)
                    .sum::<u64>();
                (s % q) as u32
            })
            .collect()
    };
    let action = (0..k)
        .map(|a| {
            kept.iter()
                .map(|&(i, _)| {
                    let pre: Vec<u32> = sf.v_inv[i]
                        .iter()
                        .zip(m.orders())
                        .map(|(&c, &e)| (c % e as u64) as u32)
                        .collect();
                    project(&m.act_generator_coords(&pre, a))
                        .iter()
                        .map(|&c| c as i64)
                        .collect()
                })
                .collect()
        })
        .collect();
    let q = Arc::new(Module::new(m.ring().clone(), orders, action).expect("quotient is a module"));
    let images = (0..gens).map(|j| project(&m.generator(j))).collect();
    let epi = Morphism::from_images_unchecked(m.clone(), q.clone(), images);
    (q, epi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::builtin_ring;

    fn zmod(n: u32) -> Arc<Ring> {
        Arc::new(builtin_ring("zmod", &[n]).unwrap())
    }

    #[test]
    fn regular_and_sum_sizes() {
        let r = zmod(4);
        assert_eq!(regular_module(&r).size(), 4);
        let r8 = zmod(8);
        let z8 = regular_module(&r8);
        let (sum, inj) = external_sum(&[z8.clone(), z8.clone()]).unwrap();
        assert_eq!(sum.size(), 64);
        assert!(inj[1].is_injective());
        let m2 = Arc::new(builtin_ring("matrix", &[2, 2]).unwrap());
        assert!(matches!(
            external_sum(&[z8, regular_module(&m2)]),
            Err(Error::RingMismatch)
        ));
    }

    #[test]
    fn invalid_action_is_rejected() {
        let r = zmod(4);
        // Z/2 with generator acting as 1 is fine; acting as 0 breaks the unity axiom.
        assert!(Module::new(r.clone(), vec![2], vec![vec![vec![1]]]).is_ok());
        assert!(Module::new(r.clone(), vec![2], vec![vec![vec![0]]]).is_err());
        // Z/4 over Z/2 violates the ring order.
        let r2 = zmod(2);
        assert!(Module::new(r2, vec![4], vec![vec![vec![1]]]).is_err());
    }

    #[test]
    fn quotient_of_z4_by_2z4() {
        let r = zmod(4);
        let m = regular_module(&r);
        let n = Submodule::span(&m, &[2]);
        let (q, epi) = quotient_module(&m, &n);
        assert_eq!(q.size(), 2);
        assert!(epi.is_surjective());
        assert_eq!(epi.kernel(), *n.members());
        let (whole, _) = quotient_module(&m, &Submodule::whole(&m));
        assert_eq!(whole.size(), 1);
        let (same, epi0) = quotient_module(&m, &Submodule::zero(&m));
        assert_eq!(same.size(), 4);
        assert!(epi0.is_injective());
    }

    #[test]
    fn extraction_roundtrip() {
        let r = zmod(8);
        let z8 = regular_module(&r);
        let (sum, _) = external_sum(&[z8.clone(), z8]).unwrap();
        let x = sum.index(&[2, 4]);
        let n = Submodule::span(&sum, &[x]);
        let e = submodule_module(&sum, &n);
        assert_eq!(e.module.size(), n.size());
        assert!(e.inclusion.is_injective());
        assert_eq!(e.inclusion.image(), *n.members());
        assert_eq!(e.pull(x).map(|i| e.inclusion.apply(i)), Some(x));
    }
}
