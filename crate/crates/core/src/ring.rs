//! Finite unital rings given by structure constants on an additive basis.

use std::sync::Arc;

use crate::arith::Radix;
use crate::error::{Error, Result};

/// Unvalidated ring description: additive generator orders, products of
/// generator pairs as coordinate vectors, and the coordinates of `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub orders: Vec<u32>,
    /// `structure[i][j]` holds the coordinates of `g_i * g_j`.
    pub structure: Vec<Vec<Vec<i64>>>,
    pub unity: Vec<i64>,
}

impl RingSpec {
    /// A spec with all products zero, to be filled in.
    pub fn zeroed(orders: Vec<u32>) -> Self {
        let k = orders.len();
        RingSpec {
            structure: vec![vec![vec![0; k]; k]; k],
            unity: vec![0; k],
            orders,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Ring {
    radix: Radix,
    structure: Vec<Vec<Vec<u32>>>,
    unity: Vec<u32>,
    unity_index: usize,
    table: Option<Vec<u32>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.radix == other.radix && self.structure == other.structure && self.unity == other.unity
    }
}

impl Eq for Ring {}

const TABLE_LIMIT: usize = 1024;
const RING_LIMIT: usize = 1 << 16;

/// Validate a ring description.
pub fn build_ring(spec: &RingSpec) -> Result<Ring> {
    let k = spec.orders.len();
    if spec.orders.contains(&0) {
        return Err(Error::OrderMismatch(
            "generator orders must be positive".into(),
        ));
    }
    if spec.structure.len() != k
        || spec
            .structure
            .iter()
            .any(|r| r.len() != k || r.iter().any(|c| c.len() != k))
        || spec.unity.len() != k
    {
        return Err(Error::OrderMismatch(format!(
            "structure table and unity must be indexed by {k} generators"
        )));
    }
    let radix = Radix::new(&spec.orders);
    if radix.size() > RING_LIMIT {
        return Err(Error::BadParams(format!(
            "ring of size {} is too large",
            radix.size()
        )));
    }
    let structure: Vec<Vec<Vec<u32>>> = spec
        .structure
        .iter()
        .map(|row| row.iter().map(|c| radix.reduce(c)).collect())
        .collect();
    // g_i has order d_i, so d_i * (g_i g_j) and d_j * (g_i g_j) must vanish.
    for i in 0..k {
        for j in 0..k {
            let c = &structure[i][j];
            for (t, &ct) in c.iter().enumerate() {
                let dt = spec.orders[t] as u64;
                if !(spec.orders[i] as u64 * ct as u64).is_multiple_of(dt)
                    || !(spec.orders[j] as u64 * ct as u64).is_multiple_of(dt)
                {
                    return Err(Error::OrderMismatch(format!(
                        "product of generators {i} and {j} is incompatible with their orders"
                    )));
                }
            }
        }
    }
    let unity = radix.reduce(&spec.unity);
    let mut ring = Ring {
        unity_index: radix.encode(&unity),
        radix,
        structure,
        unity,
        table: None,
    };
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let gi = ring.generator(i);
                let gj = ring.generator(j);
                let gl = ring.generator(l);
                let left = ring.mul_coords(&ring.mul_coords(&gi, &gj), &gl);
                let right = ring.mul_coords(&gi, &ring.mul_coords(&gj, &gl));
                if left != right {
                    return Err(Error::NonAssociative(i, j, l));
                }
            }
        }
    }
    for i in 0..k {
        let gi = ring.generator(i);
        if ring.mul_coords(&ring.unity, &gi) != gi || ring.mul_coords(&gi, &ring.unity) != gi {
            return Err(Error::BadUnity(i));
        }
    }
    let n = ring.size();
    if n <= TABLE_LIMIT {
        let coords: Vec<Vec<u32>> = (0..n).map(|x| ring.radix.decode(x)).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] =
                    ring.radix.encode(&ring.mul_coords(&coords[a], &coords[b])) as u32;
            }
        }
        ring.table = Some(table);
    }
    Ok(ring)
}

impl Ring {
    pub fn size(&self) -> usize {
        self.radix.size()
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

    pub fn structure(&self) -> &[Vec<Vec<u32>>] {
        &self.structure
    }

    pub fn unity_coords(&self) -> &[u32] {
        &self.unity
    }

    pub fn one(&self) -> usize {
        self.unity_index
    }

    pub fn generator(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.generator_count()];
        v[i] = 1 % self.orders()[i];
        v
    }

    pub fn generator_index(&self, i: usize) -> usize {
        self.radix.encode(&self.generator(i))
    }

    pub fn coords(&self, x: usize) -> Vec<u32> {
        self.radix.decode(x)
    }

    pub fn mul_coords(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.generator_count();
        let mut out = vec![0u32; k];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                if b[j] == 0 {
                    continue;
                }
                let s = a[i] as u64 * b[j] as u64;
                self.radix
                    .add_scaled_coords(&mut out, &self.structure[i][j], s);
            }
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.size() + b] as usize,
            None => self
                .radix
                .encode(&self.mul_coords(&self.radix.decode(a), &self.radix.decode(b))),
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.radix.add(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.radix.neg(a)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.radix.sub(a, b)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.generator_count();
        (0..k).all(|i| (0..k).all(|j| self.structure[i][j] == self.structure[j][i]))
    }

    /// All `e` with `e * e = e`, in index order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&e| self.mul(e, e) == e).collect()
    }

    pub fn is_central(&self, x: usize) -> bool {
        (0..self.generator_count()).all(|i| {
            let g = self.generator_index(i);
            self.mul(x, g) == self.mul(g, x)
        })
    }

    pub fn units(&self) -> Vec<usize> {
        let one = self.one();
        (0..self.size())
            .filter(|&u| (0..self.size()).any(|v| self.mul(u, v) == one))
            .collect()
    }

    /// The Jacobson radical: `x` with `1 - x r` a unit for every `r`.
    pub fn jacobson_radical(&self) -> Vec<usize> {
        let n = self.size();
        let mut is_unit = vec![false; n];
        for u in self.units() {
            is_unit[u] = true;
        }
        let one = self.one();
        (0..n)
            .filter(|&x| (0..n).all(|r| is_unit[self.sub(one, self.mul(x, r))]))
            .collect()
    }

    /// The ring with multiplication reversed.
    pub fn opposite(&self) -> Ring {
        let k = self.generator_count();
        let spec = RingSpec {
            orders: self.orders().to_vec(),
            structure: (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| self.structure[j][i].iter().map(|&x| x as i64).collect())
                        .collect()
                })
                .collect(),
            unity: self.unity.iter().map(|&x| x as i64).collect(),
        };
        build_ring(&spec).expect("opposite of a valid ring is valid")
    }

    /// Smallest additive set containing `gens` and closed under left and right multiplication.
    pub fn two_sided_ideal(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.size();
        let ring_gens: Vec<usize> = (0..self.generator_count())
            .map(|i| self.generator_index(i))
            .collect();
        let mut member = vec![false; n];
        let mut list: Vec<usize> = Vec::new();
        let mut queue = vec![0usize];
        queue.extend_from_slice(gens);
        while let Some(x) = queue.pop() {
            if member[x] {
                continue;
            }
            member[x] = true;
            for &g in &ring_gens {
                queue.push(self.mul(x, g));
                queue.push(self.mul(g, x));
            }
            list.push(x);
            for &y in &list {
                queue.push(self.add(x, y));
            }
        }
        list.sort_unstable();
        list
    }

    /// No two-sided ideals other than `0` and `R` (and `R` nonzero).
    pub fn is_simple(&self) -> bool {
        if self.size() == 1 {
            return false;
        }
        (1..self.size()).all(|x| self.two_sided_ideal(&[x]).len() == self.size())
    }

    /// A complete set of orthogonal primitive idempotents summing to `1`.
    ///
    /// Starts from `{1}` and repeatedly splits an idempotent `e` as
    /// `f + (e - f)` using the least-index idempotent `f` of `eRe` other than
    /// `0` and `e`.
    pub fn primitive_idempotents(&self) -> Vec<usize> {
        if self.size() == 1 {
            return Vec::new();
        }
        let idem = self.idempotents();
        let mut done = Vec::new();
        let mut pending = vec![self.one()];
        while let Some(e) = pending.pop() {
            let split = idem
                .iter()
                .copied()
                .find(|&f| f != 0 && f != e && self.mul(e, f) == f && self.mul(f, e) == f);
            match split {
                Some(f) => {
                    pending.push(self.sub(e, f));
                    pending.push(f);
                }
                None => done.push(e),
            }
        }
        done.sort_unstable();
        done
    }
}

pub type RingRef = Arc<Ring>;
