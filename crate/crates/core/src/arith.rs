//! Small-integer helpers and the mixed-radix element encoding.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended Euclid on signed integers: returns (g, x, y) with a*x + b*y = g.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % m) as i64, m as i64);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i64) as u64)
}

/// Mixed-radix coordinates for a finite abelian group `Z/d_0 x ... x Z/d_{k-1}`.
///
/// Element index is `sum c_i * stride_i` with coordinate 0 least significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Radix {
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl Radix {
    pub fn new(orders: &[u32]) -> Self {
        let mut strides = Vec::with_capacity(orders.len());
        let mut size: usize = 1;
        for &d in orders {
            strides.push(size);
            size = size.saturating_mul(d as usize);
        }
        Radix {
            orders: orders.to_vec(),
            strides,
            size,
        }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Least common multiple of the orders (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &d| lcm(acc, d as u64))
    }

    pub fn encode(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .zip(&self.orders)
            .map(|((&c, &s), &d)| (c % d) as usize * s)
            .sum()
    }

    pub fn decode(&self, mut index: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.orders.len());
        for &d in &self.orders {
            out.push((index % d as usize) as u32);
            index /= d as usize;
        }
        out
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [u32]) {
        for (slot, &d) in out.iter_mut().zip(&self.orders) {
            *slot = (index % d as usize) as u32;
            index /= d as usize;
        }
    }

    /// Reduce an integer vector into canonical coordinates.
    pub fn reduce(&self, v: &[i64]) -> Vec<u32> {
        v.iter()
            .zip(&self.orders)
            .map(|(&x, &d)| x.rem_euclid(d as i64) as u32)
            .collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut a = a;
        let mut b = b;
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let x = a % d + b % d;
            out += if x >= d { x - d } else { x } * s;
            a /= d;
            b /= d;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let x = a % d;
            out += if x == 0 { 0 } else { d - x } * s;
            a /= d;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, a: usize, k: u64) -> usize {
        let mut a = a;
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as u64;
            let x = (a as u64 % d) * (k % d) % d;
            out += x as usize * s;
            a /= d as usize;
        }
        out
    }

    pub fn add_coords(&self, a: &mut [u32], b: &[u32]) {
        for ((x, &y), &d) in a.iter_mut().zip(b).zip(&self.orders) {
            *x = ((*x as u64 + y as u64) % d as u64) as u32;
        }
    }

    /// `a += k * b` on coordinate vectors.
    pub fn add_scaled_coords(&self, a: &mut [u32], b: &[u32], k: u64) {
        for ((x, &y), &d) in a.iter_mut().zip(b).zip(&self.orders) {
            let d = d as u64;
            *x = ((*x as u64 + (k % d) * y as u64) % d) as u32;
        }
    }

    /// Additive order of an element.
    pub fn element_order(&self, index: usize) -> u64 {
        self.decode(index)
            .iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&c, &d)| {
                let d = d as u64;
                lcm(acc, d / gcd(c as u64, d))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix_roundtrip_and_arithmetic() {
        let r = Radix::new(&[2, 8]);
        assert_eq!(r.size(), 16);
        for i in 0..16 {
            assert_eq!(r.encode(&r.decode(i)), i);
            assert_eq!(r.add(i, r.neg(i)), 0);
        }
        let a = r.encode(&[1, 7]);
        let b = r.encode(&[1, 3]);
        assert_eq!(r.decode(r.add(a, b)), vec![0, 2]);
        assert_eq!(r.element_order(r.encode(&[1, 2])), 4);
        assert_eq!(r.exponent(), 8);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inv(3, 8), Some(3));
        assert_eq!(mod_inv(2, 8), None);
        assert_eq!(mod_inv(5, 12), Some(5));
        assert_eq!(gcd(0, 12), 12);
        assert_eq!(lcm(4, 6), 12);
    }
}
