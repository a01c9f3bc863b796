//! Internal direct sum decompositions.

use std::collections::HashMap;

use crate::error::{Error, Guards, Result};
use crate::module::{external_sum, submodule_module, Embedded, ModRef};
use crate::morphism::{end_idempotents, end_set, Morphism};
use crate::submodule::{direct_complement, submodule_lattice, Submodule};

/// `parent = parts[0] ⊕ ... ⊕ parts[k-1]` with projections and injections.
#[derive(Clone, Debug)]
pub struct Decomposition {
    parent: ModRef,
    parts: Vec<Submodule>,
    embedded: Vec<Embedded>,
    projections: Vec<Morphism>,
}

impl Decomposition {
    pub fn new(parent: &ModRef, parts: Vec<Submodule>) -> Result<Decomposition> {
        let total: usize = parts.iter().map(|p| p.size()).product();
        if total != parent.size() {
            return Err(Error::PreconditionFailed(
                "parts do not form a direct sum".into(),
            ));
        }
        // Coordinates of every element along the parts, built one part at a time.
        let mut table: HashMap<usize, Vec<usize>> = HashMap::from([(0, vec![0; parts.len()])]);
        for (i, p) in parts.iter().enumerate() {
            let mut next = HashMap::with_capacity(table.len() * p.size());
            for (&x, tuple) in &table {
                for y in p.members().iter() {
                    let mut t = tuple.clone();
                    t[i] = y;
                    next.insert(parent.add(x, y), t);
                }
            }
            table = next;
        }
        if table.len() != parent.size() {
            return Err(Error::PreconditionFailed(
                "parts do not form a direct sum".into(),
            ));
        }
        let projections = (0..parts.len())
            .map(|i| {
                let images = (0..parent.generator_count())
                    .map(|j| parent.coords(table[&parent.index(&parent.generator(j))][i]))
                    .collect();
                Morphism::from_images_unchecked(parent.clone(), parent.clone(), images)
            })
            .collect();
        let embedded = parts.iter().map(|p| submodule_module(parent, p)).collect();
        Ok(Decomposition {
            parent: parent.clone(),
            parts,
            embedded,
            projections,
        })
    }

    pub fn parent(&self) -> &ModRef {
        &self.parent
    }

    pub fn parts(&self) -> &[Submodule] {
        &self.parts
    }

    /// Each part as a standalone module with its inclusion.
    pub fn embedded(&self) -> &[Embedded] {
        &self.embedded
    }

    pub fn part_module(&self, i: usize) -> &ModRef {
        &self.embedded[i].module
    }

    pub fn injection(&self, i: usize) -> &Morphism {
        &self.embedded[i].inclusion
    }

    /// Idempotent endomorphism of the parent onto part `i` along the others.
    pub fn projection(&self, i: usize) -> &Morphism {
        &self.projections[i]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// External direct sum with its decomposition into the images of the summands.
pub fn direct_sum(parts: &[ModRef]) -> Result<(ModRef, Decomposition)> {
    let (sum, inj) = external_sum(parts)?;
    let subs = inj.iter().map(|f| f.image_submodule()).collect();
    let dec = Decomposition::new(&sum, subs)?;
    Ok((sum, dec))
}

/// A nontrivial splitting `(image, kernel)` of `m`, if one exists.
fn split_once(m: &ModRef, guards: &Guards) -> Result<Option<(Submodule, Submodule)>> {
    if m.is_zero() {
        return Ok(None);
    }
    let end = end_set(m);
    if guards
        .check_enumeration("endomorphism ring", end.order())
        .is_ok()
    {
        let id = Morphism::identity(m);
        let found = end_idempotents(m, guards)?
            .into_iter()
            .find(|e| !e.is_zero() && *e != id);
        return Ok(found.map(|e| {
            let ker = e.kernel_submodule();
            (e.image_submodule(), ker)
        }));
    }
    // Endomorphism ring too large: split along the least proper summand.
    let lat = submodule_lattice(m, guards)?;
    for n in lat.iter().filter(|n| !n.is_zero() && n.size() < m.size()) {
        if let Some(c) = direct_complement(m, n) {
            return Ok(Some((n.clone(), c)));
        }
    }
    Ok(None)
}

/// Split recursively until every part is indecomposable.
pub fn indecomposable_decomposition(m: &ModRef, guards: &Guards) -> Result<Decomposition> {
    guards.check_elements("module", m.size())?;
    let mut done: Vec<Submodule> = Vec::new();
    let mut todo = vec![Submodule::whole(m)];
    while let Some(p) = todo.pop() {
        let emb = submodule_module(m, &p);
        match split_once(&emb.module, guards)? {
            None => done.push(p),
            Some((a, b)) => {
                todo.push(emb.inclusion.image_of(&b));
                todo.push(emb.inclusion.image_of(&a));
            }
        }
    }
    done.retain(|p| !p.is_zero() || m.is_zero());
    if done.is_empty() {
        done.push(Submodule::zero(m));
    }
    Decomposition::new(m, done)
}

pub fn is_indecomposable(m: &ModRef, guards: &Guards) -> Result<bool> {
    Ok(!m.is_zero() && split_once(m, guards)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{quotient_module, regular_module};
    use crate::rings::builtin_ring;
    use std::sync::Arc;

    fn ring(name: &str, p: &[u32]) -> Arc<crate::ring::Ring> {
        Arc::new(builtin_ring(name, p).unwrap())
    }

    fn check_projections(d: &Decomposition) {
        let m = d.parent();
        let mut total = Morphism::zero(m, m);
        for i in 0..d.len() {
            let p = d.projection(i);
            assert!(Morphism::new(
                m.clone(),
                m.clone(),
                p.images()
                    .iter()
                    .map(|v| v.iter().map(|&c| c as i64).collect())
                    .collect()
            )
            .is_ok());
            assert!(p.is_idempotent());
            for j in 0..d.len() {
                if i != j {
                    assert!(p.compose(d.projection(j)).is_zero());
                }
            }
            total = total.add(p);
        }
        assert_eq!(total, Morphism::identity(m));
    }

    #[test]
    fn z2_plus_z8() {
        let z8 = regular_module(&ring("zmod", &[8]));
        let (z2, _) = quotient_module(&z8, &Submodule::span(&z8, &[2]));
        let (m, d) = direct_sum(&[z2, z8]).unwrap();
        check_projections(&d);
        let ind = indecomposable_decomposition(&m, &Guards::default()).unwrap();
        let mut sizes: Vec<usize> = ind.parts().iter().map(|p| p.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 8]);
        check_projections(&ind);
    }

    #[test]
    fn counts_of_parts() {
        let g = Guards::default();
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v3, _) = direct_sum(&[f2.clone(), f2.clone(), f2]).unwrap();
        assert_eq!(indecomposable_decomposition(&v3, &g).unwrap().len(), 3);
        let m2 = regular_module(&ring("matrix", &[2, 2]));
        let d = indecomposable_decomposition(&m2, &g).unwrap();
        assert_eq!(d.len(), 2);
        check_projections(&d);
        let local = regular_module(&ring("local-f2xy", &[]));
        assert_eq!(indecomposable_decomposition(&local, &g).unwrap().len(), 1);
        assert!(is_indecomposable(&local, &g).unwrap());
        assert_eq!(end_idempotents(&local, &g).unwrap().len(), 2);
    }

    #[test]
    fn lattice_fallback_agrees() {
        let g = Guards {
            enumeration: 4,
            ..Guards::default()
        };
        let f2 = regular_module(&ring("zmod", &[2]));
        let (v3, _) = direct_sum(&[f2.clone(), f2.clone(), f2]).unwrap();
        let d = indecomposable_decomposition(&v3, &g).unwrap();
        assert_eq!(d.len(), 3);
        check_projections(&d);
    }
}
