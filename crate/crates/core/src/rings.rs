//! Built-in ring constructors.

use crate::error::{Error, Result};
use crate::ring::{build_ring, Ring, RingSpec};

pub fn zmod(n: u32) -> Result<Ring> {
    if n < 2 {
        return Err(Error::BadParams("zmod needs n >= 2".into()));
    }
    let mut spec = RingSpec::zeroed(vec![n]);
    spec.structure[0][0] = vec![1];
    spec.unity = vec![1];
    build_ring(&spec)
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Polynomials over F_p, coefficients low degree first, no trailing zeros.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = crate::arith::mod_inv(b[db], p).expect("monic divisor");
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % p;
            let shift = a.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * bi % p) % p;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn monic_polys(degree: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(degree as u32);
    (0..count).map(move |mut c| {
        let mut v = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            v.push(c % p);
            c /= p;
        }
        v.push(1);
        v
    })
}

fn irreducible(p: u64, k: usize) -> Vec<u64> {
    monic_polys(k, p)
        .find(|f| (1..=k / 2).all(|d| monic_polys(d, p).all(|g| !poly_rem(f, &g, p).is_empty())))
        .expect("irreducible polynomials exist in every degree")
}

/// The field with `q` elements, as `F_p[x]/(f)` for the least irreducible monic `f`.
pub fn gf(q: u32) -> Result<Ring> {
    let (p, k) =
        prime_power(q).ok_or_else(|| Error::BadParams(format!("{q} is not a prime power")))?;
    let k = k as usize;
    let f = irreducible(p as u64, k);
    let mut spec = RingSpec::zeroed(vec![p; k]);
    for i in 0..k {
        for j in 0..k {
            let mut prod = vec![0u64; i + j + 1];
            prod[i + j] = 1;
            let r = poly_rem(&prod, &f, p as u64);
            let mut c = vec![0i64; k];
            for (t, &x) in r.iter().enumerate() {
                c[t] = x as i64;
            }
            spec.structure[i][j] = c;
        }
    }
    spec.unity[0] = 1;
    build_ring(&spec)
}

/// `F_p[x]/(x^k)`.
pub fn truncated_polynomial(p: u32, k: u32) -> Result<Ring> {
    if prime_power(p).is_none_or(|(_, e)| e != 1) || k == 0 {
        return Err(Error::BadParams(
            "truncated polynomial needs prime p and k >= 1".into(),
        ));
    }
    let k = k as usize;
    let mut spec = RingSpec::zeroed(vec![p; k]);
    for i in 0..k {
        for j in 0..k {
            if i + j < k {
                spec.structure[i][j][i + j] = 1;
            }
        }
    }
    spec.unity[0] = 1;
    build_ring(&spec)
}

/// `F_2[x, y]/(x, y)^2`: local of order 8 with a two-dimensional socle.
pub fn local_f2xy() -> Result<Ring> {
    let mut spec = RingSpec::zeroed(vec![2, 2, 2]);
    for t in 0..3 {
        spec.structure[0][t][t] = 1;
        spec.structure[t][0][t] = 1;
    }
    spec.unity[0] = 1;
    build_ring(&spec)
}

fn matrix_like(k: usize, base: &Ring, keep: impl Fn(usize, usize) -> bool) -> Result<Ring> {
    if k == 0 {
        return Err(Error::BadParams("matrix size must be positive".into()));
    }
    let s = base.generator_count();
    let cells: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| keep(i, j))
        .collect();
    let cell_index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let n = cells.len() * s;
    let mut orders = Vec::with_capacity(n);
    for _ in &cells {
        orders.extend_from_slice(base.orders());
    }
    let mut spec = RingSpec::zeroed(orders);
    for (a, &(i, j)) in cells.iter().enumerate() {
        for (b, &(p, q)) in cells.iter().enumerate() {
            if j != p {
                continue;
            }
            let target = cell_index(i, q).expect("product cell present");
            for l in 0..s {
                for m in 0..s {
                    let prod = &base.structure()[l][m];
                    for (t, &c) in prod.iter().enumerate() {
                        spec.structure[a * s + l][b * s + m][target * s + t] = c as i64;
                    }
                }
            }
        }
    }
    for i in 0..k {
        let c = cell_index(i, i).expect("diagonal present");
        for (t, &u) in base.unity_coords().iter().enumerate() {
            spec.unity[c * s + t] = u as i64;
        }
    }
    build_ring(&spec)
}

/// Full `k x k` matrices over `base`.
pub fn matrix(k: usize, base: &Ring) -> Result<Ring> {
    matrix_like(k, base, |_, _| true)
}

/// Upper triangular `k x k` matrices over `base`.
pub fn upper_triangular(k: usize, base: &Ring) -> Result<Ring> {
    matrix_like(k, base, |i, j| i <= j)
}

/// The direct product `a x b`.
pub fn product(a: &Ring, b: &Ring) -> Result<Ring> {
    let ka = a.generator_count();
    let kb = b.generator_count();
    let mut orders = a.orders().to_vec();
    orders.extend_from_slice(b.orders());
    let mut spec = RingSpec::zeroed(orders);
    for i in 0..ka {
        for j in 0..ka {
            for (t, &c) in a.structure()[i][j].iter().enumerate() {
                spec.structure[i][j][t] = c as i64;
            }
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            for (t, &c) in b.structure()[i][j].iter().enumerate() {
                spec.structure[ka + i][ka + j][ka + t] = c as i64;
            }
        }
    }
    for (t, &u) in a.unity_coords().iter().enumerate() {
        spec.unity[t] = u as i64;
    }
    for (t, &u) in b.unity_coords().iter().enumerate() {
        spec.unity[ka + t] = u as i64;
    }
    build_ring(&spec)
}

/// Catalog lookup by constructor name.
///
/// | name | params |
/// |---|---|
/// | `zmod` | `n` |
/// | `gf` | `q` (prime power) |
/// | `matrix` | `k, q`: `M_k(GF(q))` |
/// | `upper-triangular` | `k, q` |
/// | `product` | `n_1, n_2, ...`: `Z/n_1 x Z/n_2 x ...` |
/// | `truncated` | `p, k`: `F_p[x]/(x^k)` |
/// | `local-f2xy` | none |
pub fn builtin_ring(name: &str, params: &[u32]) -> Result<Ring> {
    let want = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::BadParams(format!(
                "`{name}` takes {n} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    match name {
        "zmod" => {
            want(1)?;
            zmod(params[0])
        }
        "gf" => {
            want(1)?;
            gf(params[0])
        }
        "matrix" => {
            want(2)?;
            matrix(params[0] as usize, &gf(params[1])?)
        }
        "upper-triangular" => {
            want(2)?;
            upper_triangular(params[0] as usize, &gf(params[1])?)
        }
        "product" => {
            if params.len() < 2 {
                return Err(Error::BadParams(
                    "product needs at least two factors".into(),
                ));
            }
            let mut r = zmod(params[0])?;
            for &n in &params[1..] {
                r = product(&r, &zmod(n)?)?;
            }
            Ok(r)
        }
        "truncated" => {
            want(2)?;
            truncated_polynomial(params[0], params[1])
        }
        "local-f2xy" => {
            want(0)?;
            local_f2xy()
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_commutativity() {
        let z12 = builtin_ring("zmod", &[12]).unwrap();
        assert_eq!(z12.size(), 12);
        assert!(z12.is_commutative());
        let m2 = builtin_ring("matrix", &[2, 2]).unwrap();
        assert_eq!(m2.size(), 16);
        assert!(!m2.is_commutative());
        let t2 = builtin_ring("upper-triangular", &[2, 2]).unwrap();
        assert_eq!(t2.size(), 8);
        assert!(!t2.is_commutative());
        let f4 = builtin_ring("gf", &[4]).unwrap();
        assert_eq!(f4.units().len(), 3);
        assert_eq!(builtin_ring("gf", &[9]).unwrap().units().len(), 8);
        let loc = builtin_ring("local-f2xy", &[]).unwrap();
        assert_eq!(loc.size(), 8);
        assert_eq!(loc.jacobson_radical().len(), 4);
        assert!(matches!(
            builtin_ring("nope", &[]),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(builtin_ring("gf", &[6]), Err(Error::BadParams(_))));
    }

    #[test]
    fn matrix_commutativity_by_exhaustive_scan() {
        let m2 = builtin_ring("matrix", &[2, 2]).unwrap();
        let noncommuting = (0..16)
            .flat_map(|a| (0..16).map(move |b| (a, b)))
            .filter(|&(a, b)| m2.mul(a, b) != m2.mul(b, a))
            .count();
        assert!(noncommuting > 0);
    }
}
