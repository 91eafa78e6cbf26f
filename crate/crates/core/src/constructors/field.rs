use alloc::vec;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::{Error, Result};

/// Largest field order supported by [`FiniteField`].
pub const MAX_FIELD_ORDER: u32 = 64;

/// Fixed defining polynomials `(p, t, [c_0, …, c_{t-1}])` for the monic
/// polynomial `x^t + c_{t-1}x^{t-1} + … + c_0`. Each is primitive, so `x` is
/// a generator of the multiplicative group.
pub const DEFINING_POLYNOMIALS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (5, 2, &[2, 4]),
    (7, 2, &[3, 6]),
];

/// `GF(q)` for `q = p^t ≤ 64`, with full operation tables.
///
/// Elements are encoded as integers `0..q` whose base-`p` digits are the
/// polynomial coefficients (lowest degree first). `0` and `1` are the
/// field's zero and one.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    t: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u32>,
}

fn digits(mut a: u32, p: u32, t: u32) -> Vec<u32> {
    let mut d = vec![0; t as usize];
    for x in d.iter_mut() {
        *x = a % p;
        a /= p;
    }
    d
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn poly_mul(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let t = a.len();
    let mut prod = vec![0u32; 2 * t];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^t ≡ -(c_0 + … + c_{t-1}x^{t-1})
    for k in (t..2 * t).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (j, &m) in modulus.iter().enumerate() {
            prod[k - t + j] = (prod[k - t + j] + (p - m) * c) % p;
        }
    }
    prod.truncate(t);
    prod
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::InvalidParameter(alloc::format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let (p, t) = prime_power(q as u64)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("{q} is not a prime power")))?;
        let (p, t) = (p as u32, t);
        let modulus: Vec<u32> = if t == 1 {
            vec![0]
        } else {
            DEFINING_POLYNOMIALS
                .iter()
                .find(|(pp, tt, _)| *pp == p && *tt == t)
                .map(|(_, _, c)| c.to_vec())
                .ok_or_else(|| Error::Unsupported(alloc::format!("no defining polynomial for {q}")))?
        };
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let mut neg = vec![0u8; n];
        for a in 0..q {
            let da = digits(a, p, t);
            neg[a as usize] = encode(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>(), p) as u8;
            for b in 0..q {
                let db = digits(b, p, t);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * n + b as usize] = encode(&s, p) as u8;
                let m = if t == 1 {
                    vec![(a * b) % p]
                } else {
                    poly_mul(&da, &db, &modulus, p)
                };
                mul[a as usize * n + b as usize] = encode(&m, p) as u8;
            }
        }
        let mut field = FiniteField {
            p,
            t,
            q,
            add,
            mul,
            neg,
            inv: vec![0; n],
            exp: Vec::new(),
            log: vec![u32::MAX; n],
        };
        let gen = if t == 1 {
            (1..q.max(2))
                .find(|&g| field.multiplicative_order(g) == q - 1)
                .ok_or_else(|| Error::Inconsistent("no primitive root".into()))?
        } else {
            p
        };
        if field.multiplicative_order(gen) != q - 1 {
            return Err(Error::Inconsistent(alloc::format!(
                "defining polynomial for {q} is not primitive"
            )));
        }
        let mut x = 1u32;
        for j in 0..q - 1 {
            field.exp.push(x as u8);
            field.log[x as usize] = j;
            x = field.mul(x, gen);
        }
        for a in 1..q {
            let l = field.log[a as usize];
            field.inv[a as usize] = field.exp[((q - 1 - l) % (q - 1)) as usize];
        }
        Ok(field)
    }

    fn multiplicative_order(&self, g: u32) -> u32 {
        if g == 0 {
            return 0;
        }
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize] as u32)
    }

    /// The fixed primitive element.
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()] as u32
    }

    /// `g^j` for the fixed primitive element `g`.
    pub fn power_of_generator(&self, j: u64) -> u32 {
        self.exp[(j % (self.q as u64 - 1)) as usize] as u32
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        match self.log(a) {
            None => 0,
            Some(l) => self.power_of_generator(l as u64 * e),
        }
    }

    /// The Frobenius map `a ↦ a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force irreducibility: no monic factor of degree ≤ t/2 divides.
    fn irreducible(p: u32, coeffs: &[u32]) -> bool {
        let t = coeffs.len();
        let mut full: Vec<u32> = coeffs.to_vec();
        full.push(1);
        for d in 1..=t / 2 {
            let count = (p as usize).pow(d as u32);
            for code in 0..count {
                let mut f: Vec<u32> = digits(code as u32, p, d as u32);
                f.push(1);
                // polynomial long division of `full` by monic f
                let mut r = full.clone();
                for k in (d..r.len()).rev() {
                    let c = r[k];
                    if c == 0 {
                        continue;
                    }
                    for (j, &fj) in f.iter().enumerate() {
                        r[k - d + j] = (r[k - d + j] + (p - fj) * c) % p;
                    }
                }
                if r[..d].iter().all(|&x| x == 0) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn defining_polynomials_irreducible_and_primitive() {
        for &(p, t, c) in DEFINING_POLYNOMIALS {
            assert!(irreducible(p, c), "p={p} t={t}");
            let f = FiniteField::new(p.pow(t)).unwrap();
            // x itself has full multiplicative order
            assert_eq!(f.multiplicative_order(p), p.pow(t) - 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in (0..q).step_by(((q / 8) as usize).max(1)) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
            let g = f.generator();
            assert_eq!(f.multiplicative_order(g), q - 1);
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(81).is_err());
        assert!(FiniteField::new(1).is_err());
    }
}
