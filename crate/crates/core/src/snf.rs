//! Smith normal form over `Z/L` and the congruence solver built on it.
//!
//! Every finite abelian group here is a product `Z/d_0 x ... x Z/d_{k-1}`.
//! Linear conditions on such groups are lifted to `(Z/L)^n` with `L` the
//! least common multiple of all moduli, diagonalized by unimodular row and
//! column operations, and read back.

use crate::arith::{gcd, lcm, mod_inv};

/// `u * a * v = diag` over `Z/L`, with `v_inv` the inverse of `v`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub modulus: u64,
    pub rows: usize,
    pub cols: usize,
    pub diag: Vec<u64>,
    pub u: Vec<Vec<u64>>,
    pub v: Vec<Vec<u64>>,
    pub v_inv: Vec<Vec<u64>>,
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn row_sub(m: &mut [Vec<u64>], target: usize, source: usize, q: u64, l: u64) {
    if q == 0 {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = m.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, &y) in t.iter_mut().zip(s.iter()) {
        *x = (*x + l - (q * y) % l) % l;
    }
}

fn row_add(m: &mut [Vec<u64>], target: usize, source: usize, q: u64, l: u64) {
    if q == 0 {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = m.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, &y) in t.iter_mut().zip(s.iter()) {
        *x = (*x + (q * y) % l) % l;
    }
}

fn col_sub(m: &mut [Vec<u64>], target: usize, source: usize, q: u64, l: u64) {
    if q == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[target] = (row[target] + l - (q * row[source]) % l) % l;
    }
}

fn swap_cols(m: &mut [Vec<u64>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Diagonalize `a` (a `rows x cols` matrix) over `Z/l`.
pub fn smith(a: &[Vec<u64>], cols: usize, l: u64) -> SmithForm {
    assert!(l >= 1);
    let rows = a.len();
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), cols);
            r.iter().map(|&x| x % l).collect()
        })
        .collect();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let steps = rows.min(cols);
    let mut diag = vec![0u64; steps];

    'outer: for k in 0..steps {
        loop {
            let mut best: Option<(usize, usize, u64)> = None;
            for (i, row) in m.iter().enumerate().skip(k) {
                for (j, &x) in row.iter().enumerate().skip(k) {
                    if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                        best = Some((i, j, x));
                    }
                }
            }
            let Some((pi, pj, p)) = best else {
                break 'outer;
            };
            m.swap(k, pi);
            u.swap(k, pi);
            swap_cols(&mut m, k, pj);
            swap_cols(&mut v, k, pj);
            v_inv.swap(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                let x = m[i][k];
                if x != 0 {
                    let q = x / p;
                    row_sub(&mut m, i, k, q, l);
                    row_sub(&mut u, i, k, q, l);
                    dirty |= m[i][k] != 0;
                }
            }
            for j in k + 1..cols {
                let x = m[k][j];
                if x != 0 {
                    let q = x / p;
                    col_sub(&mut m, j, k, q, l);
                    col_sub(&mut v, j, k, q, l);
                    row_add(&mut v_inv, k, j, q, l);
                    dirty |= m[k][j] != 0;
                }
            }
            if !dirty {
                diag[k] = p;
                break;
            }
        }
    }

    SmithForm {
        modulus: l,
        rows,
        cols,
        diag,
        u,
        v,
        v_inv,
    }
}

impl SmithForm {
    fn pivot_gcd(&self, i: usize) -> u64 {
        let d = self.diag.get(i).copied().unwrap_or(0);
        if d == 0 {
            self.modulus
        } else {
            gcd(d, self.modulus)
        }
    }

    /// Generators of `{x : a x = 0}` (column vectors over `Z/L`).
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let l = self.modulus;
        let mut out = Vec::new();
        for i in 0..self.cols {
            let factor = if i < self.diag.len() {
                l / self.pivot_gcd(i)
            } else {
                1
            };
            if factor % l == 0 {
                continue;
            }
            out.push((0..self.cols).map(|r| self.v[r][i] * factor % l).collect());
        }
        out
    }

    /// One solution of `a x = b`, if any.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let l = self.modulus;
        let ub: Vec<u64> = self
            .u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .map(|(&x, &y)| x * (y % l) % l)
                    .sum::<u64>()
                    % l
            })
            .collect();
        let mut y = vec![0u64; self.cols];
        for (i, &c) in ub.iter().enumerate() {
            if i < self.diag.len() {
                let g = self.pivot_gcd(i);
                if c % g != 0 {
                    return None;
                }
                if g == l {
                    continue;
                }
                let reduced = l / g;
                let unit = mod_inv((self.diag[i] / g) % reduced, reduced)?;
                y[i] = (c / g) % reduced * unit % reduced;
            } else if c != 0 {
                return None;
            }
        }
        Some(
            (0..self.cols)
                .map(|r| (0..self.cols).map(|k| self.v[r][k] * y[k] % l).sum::<u64>() % l)
                .collect(),
        )
    }
}

/// A subgroup of `Z/d_0 x ... x Z/d_{n-1}` with an independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    moduli: Vec<u32>,
    basis: Vec<Vec<u32>>,
    orders: Vec<u64>,
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(moduli: &[u32], gens: &[Vec<u32>]) -> Subgroup {
        let l = moduli.iter().fold(1u64, |a, &d| lcm(a, d as u64));
        let scale: Vec<u64> = moduli.iter().map(|&d| l / d as u64).collect();
        let scaled: Vec<Vec<u64>> = gens
            .iter()
            .map(|g| {
                g.iter()
                    .zip(&scale)
                    .map(|(&x, &s)| x as u64 * s % l)
                    .collect()
            })
            .collect();
        let sf = smith(&scaled, moduli.len(), l);
        let mut basis = Vec::new();
        let mut orders = Vec::new();
        for (i, &d) in sf.diag.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let order = l / gcd(d, l);
            if order == 1 {
                continue;
            }
            let v: Vec<u32> = sf.v_inv[i]
                .iter()
                .zip(&scale)
                .map(|(&x, &s)| {
                    let y = x * d % l;
                    debug_assert_eq!(y % s, 0);
                    (y / s) as u32
                })
                .collect();
            basis.push(v);
            orders.push(order);
        }
        Subgroup {
            moduli: moduli.to_vec(),
            basis,
            orders,
        }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Group order, saturating at `u64::MAX`.
    pub fn order(&self) -> u64 {
        self.orders.iter().fold(1u64, |a, &o| a.saturating_mul(o))
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// The element `sum k_i b_i`.
    pub fn combine(&self, coeffs: &[u64]) -> Vec<u32> {
        let mut out = vec![0u32; self.moduli.len()];
        for (b, &k) in self.basis.iter().zip(coeffs) {
            for ((x, &y), &d) in out.iter_mut().zip(b).zip(&self.moduli) {
                let d = d as u64;
                *x = ((*x as u64 + k % d * y as u64) % d) as u32;
            }
        }
        out
    }

    /// Every element exactly once, in mixed-radix order of the basis coefficients.
    pub fn elements(&self) -> SubgroupIter<'_> {
        SubgroupIter {
            group: self,
            coeffs: vec![0; self.basis.len()],
            current: vec![0; self.moduli.len()],
            done: false,
        }
    }
}

pub struct SubgroupIter<'a> {
    group: &'a Subgroup,
    coeffs: Vec<u64>,
    current: Vec<u32>,
    done: bool,
}

impl Iterator for SubgroupIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // Increment the odometer, updating the running sum incrementally.
        let g = self.group;
        let mut i = 0;
        loop {
            if i == g.basis.len() {
                self.done = true;
                break;
            }
            self.coeffs[i] += 1;
            for ((x, &y), &d) in self.current.iter_mut().zip(&g.basis[i]).zip(&g.moduli) {
                *x = ((*x as u64 + y as u64) % d as u64) as u32;
            }
            if self.coeffs[i] < g.orders[i] {
                break;
            }
            // Wrapped: the running sum is back where it started for this digit.
            self.coeffs[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// A system of linear congruences in unknowns `x_k in Z/m_k`.
///
/// Each row reads `sum c_k x_k = rhs (mod modulus)`. Rows must be well defined
/// on the unknowns' residue classes.
#[derive(Debug, Clone, Default)]
pub struct Congruences {
    unknown_moduli: Vec<u32>,
    rows: Vec<(Vec<i64>, u32, i64)>,
}

/// Solutions of a congruence system: a particular solution and the homogeneous subgroup.
#[derive(Debug, Clone)]
pub struct Solution {
    pub particular: Vec<u32>,
    pub kernel: Subgroup,
}

impl Congruences {
    pub fn new(unknown_moduli: Vec<u32>) -> Self {
        Congruences {
            unknown_moduli,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknown_moduli.len()
    }

    pub fn push(&mut self, coeffs: Vec<i64>, modulus: u32, rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.unknown_moduli.len());
        if modulus > 1 {
            self.rows.push((coeffs, modulus, rhs));
        }
    }

    pub fn solve(&self) -> Option<Solution> {
        let n = self.unknown_moduli.len();
        let mut l = self
            .unknown_moduli
            .iter()
            .fold(1u64, |a, &d| lcm(a, d as u64));
        for (_, m, _) in &self.rows {
            l = lcm(l, *m as u64);
        }
        let li = l as i64;
        let mut a = Vec::with_capacity(self.rows.len());
        let mut b = Vec::with_capacity(self.rows.len());
        for (coeffs, m, rhs) in &self.rows {
            let s = li / *m as i64;
            a.push(
                coeffs
                    .iter()
                    .map(|&c| (c.rem_euclid(li) * s).rem_euclid(li) as u64)
                    .collect::<Vec<_>>(),
            );
            b.push((rhs.rem_euclid(li) * s).rem_euclid(li) as u64);
        }
        let sf = smith(&a, n, l);
        let x = sf.solve(&b)?;
        let reduce = |v: &[u64]| -> Vec<u32> {
            v.iter()
                .zip(&self.unknown_moduli)
                .map(|(&x, &d)| (x % d as u64) as u32)
                .collect()
        };
        let gens: Vec<Vec<u32>> = sf.kernel().iter().map(|k| reduce(k)).collect();
        Some(Solution {
            particular: reduce(&x),
            kernel: Subgroup::generated(&self.unknown_moduli, &gens),
        })
    }
}
