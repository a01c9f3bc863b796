//! Named catalogs of small rings and their modules.
//!
//! Modules are the cyclic modules `R/I` up to isomorphism (the zero module is
//! left out) together with pairwise direct sums of them of total size at most 64.

use std::sync::Arc;

use crate::decomposition::direct_sum;
use crate::error::{Error, Result};
use crate::iso::are_isomorphic;
use crate::module::{quotient_module, regular_module, ModRef};
use crate::ring::Ring;
use crate::rings::builtin_ring;
use crate::submodule::submodule_lattice;
use crate::Guards;

pub const SUM_LIMIT: usize = 64;

const DEFAULT_RINGS: [(&str, &str, &[u32]); 12] = [
    ("zmod2", "zmod", &[2]),
    ("zmod3", "zmod", &[3]),
    ("zmod4", "zmod", &[4]),
    ("zmod6", "zmod", &[6]),
    ("zmod8", "zmod", &[8]),
    ("zmod12", "zmod", &[12]),
    ("gf4", "gf", &[4]),
    ("dual-f2", "truncated", &[2, 2]),
    ("local-f2xy", "local-f2xy", &[]),
    ("ut2-f2", "upper-triangular", &[2, 2]),
    ("mat2-f2", "matrix", &[2, 2]),
    ("z2xz4", "product", &[2, 4]),
];

const SEMISIMPLE_RINGS: [&str; 5] = ["zmod2", "zmod3", "zmod6", "gf4", "mat2-f2"];

pub const CATALOGS: [&str; 2] = ["default", "semisimple"];

#[derive(Clone, Debug)]
pub struct Entry {
    pub ring_id: String,
    pub module_id: String,
    pub module: ModRef,
}

impl Entry {
    /// `ring:module`, as accepted by [`Catalog::find`].
    pub fn qualified_id(&self) -> String {
        format!("{}:{}", self.ring_id, self.module_id)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogRing {
    pub id: String,
    pub ring: Arc<Ring>,
    /// Cyclic modules with their names, by size.
    pub cyclics: Vec<(String, ModRef)>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub id: String,
    pub rings: Vec<CatalogRing>,
}

pub fn catalog_ring(id: &str) -> Result<Arc<Ring>> {
    let (_, name, params) = DEFAULT_RINGS
        .iter()
        .find(|(rid, _, _)| *rid == id)
        .ok_or_else(|| Error::UnknownName(id.to_string()))?;
    Ok(Arc::new(builtin_ring(name, params)?))
}

fn cyclics(id: &str, ring: &Arc<Ring>) -> Result<Vec<(String, ModRef)>> {
    let reg = regular_module(ring);
    let ideals = submodule_lattice(&reg, &Guards::default())?;
    let mut found: Vec<ModRef> = Vec::new();
    // Largest ideals first, so quotients come out by increasing size.
    for i in ideals.iter().rev() {
        if i.size() == reg.size() {
            continue;
        }
        let q = if i.is_zero() {
            reg.clone()
        } else {
            quotient_module(&reg, i).0
        };
        if !found.iter().any(|f| are_isomorphic(f, &q)) {
            found.push(q);
        }
    }
    found.sort_by_key(|q| q.size());
    let zmod = id.starts_with("zmod");
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(k, q)| {
            let name = if zmod {
                format!("Z{}", q.size())
            } else if q.size() == reg.size() && are_isomorphic(&q, &reg) {
                "regular".to_string()
            } else {
                format!("q{k}")
            };
            (name, q)
        })
        .collect())
}

impl Catalog {
    pub fn load(id: &str) -> Result<Catalog> {
        let ids: Vec<&str> = match id {
            "default" => DEFAULT_RINGS.iter().map(|(r, _, _)| *r).collect(),
            "semisimple" => SEMISIMPLE_RINGS.to_vec(),
            _ => return Err(Error::UnknownCatalog(id.to_string())),
        };
        let rings = ids
            .into_iter()
            .map(|rid| {
                let ring = catalog_ring(rid)?;
                Ok(CatalogRing {
                    id: rid.to_string(),
                    cyclics: cyclics(rid, &ring)?,
                    ring,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Catalog {
            id: id.to_string(),
            rings,
        })
    }

    /// Every module of size at most `bound`, ordered by (ring id, size, module id).
    pub fn entries(&self, bound: usize) -> Result<Vec<Entry>> {
        let mut out = Vec::new();
        for cr in &self.rings {
            let c = &cr.cyclics;
            for (name, m) in c {
                out.push(Entry {
                    ring_id: cr.id.clone(),
                    module_id: name.clone(),
                    module: m.clone(),
                });
            }
            for i in 0..c.len() {
                for j in i..c.len() {
                    let size = c[i].1.size() * c[j].1.size();
                    if size <= SUM_LIMIT && size <= bound {
                        let (m, _) = direct_sum(&[c[i].1.clone(), c[j].1.clone()])?;
                        out.push(Entry {
                            ring_id: cr.id.clone(),
                            module_id: format!("{}+{}", c[i].0, c[j].0),
                            module: m,
                        });
                    }
                }
            }
        }
        out.retain(|e| e.module.size() <= bound);
        out.sort_by(|a, b| {
            (&a.ring_id, a.module.size(), &a.module_id).cmp(&(
                &b.ring_id,
                b.module.size(),
                &b.module_id,
            ))
        });
        Ok(out)
    }

    /// Look up `ring:module`; `ring:regular` always names the regular module.
    pub fn find(&self, target: &str) -> Result<Entry> {
        let (rid, mid) = target
            .split_once(':')
            .ok_or_else(|| Error::UnknownName(target.to_string()))?;
        let cr = self
            .rings
            .iter()
            .find(|r| r.id == rid)
            .ok_or_else(|| Error::UnknownName(rid.to_string()))?;
        if mid == "regular" {
            return Ok(Entry {
                ring_id: rid.to_string(),
                module_id: mid.to_string(),
                module: regular_module(&cr.ring),
            });
        }
        self.entries(SUM_LIMIT)?
            .into_iter()
            .find(|e| e.ring_id == rid && e.module_id == mid)
            .ok_or_else(|| Error::UnknownName(target.to_string()))
    }
}
