use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::arith::lcm;
use crate::{Error, Result};

/// A bijection of the points `0..degree`.
///
/// Permutations act on the right: `i^(pq) = (i^p)^q`, so `p * q` first
/// applies `p` and then `q`. Points are 0-based in the API; cycle notation
/// (`Display`, [`Permutation::from_cycles`]) is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotAPermutation(alloc::format!(
                    "image {} outside 0..{}",
                    x,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::NotAPermutation(alloc::format!(
                    "image {} repeated",
                    x
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of `degree` points from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt as usize > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if used[pt as usize - 1] {
                    return Err(Error::NonDisjointCycles(pt));
                }
                used[pt as usize - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt as usize - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        // i ↦ other(self(other⁻¹(i)))
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[other.images[i] as usize] = other.images[x as usize];
        }
        Permutation { images: out }
    }

    /// Commutator `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }

    fn cycle_lengths(&self) -> Vec<u64> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Nontrivial cycles with 0-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Extends to `offset + degree + tail` points, acting on `offset..offset+degree`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Restriction to the invariant block `offset..offset+len`, relabelled to `0..len`.
    ///
    /// Returns `None` when the block is not invariant.
    pub fn restricted(&self, offset: usize, len: usize) -> Option<Permutation> {
        let mut images = Vec::with_capacity(len);
        for i in offset..offset + len {
            let x = self.images[i] as usize;
            if x < offset || x >= offset + len {
                return None;
            }
            images.push((x - offset) as u32);
        }
        Some(Permutation { images })
    }

    /// Cycle notation with 1-based points; the identity renders as `()`.
    pub fn to_cycle_string(&self) -> String {
        use core::fmt::Write;
        let cycles = self.cycles();
        let mut s = String::new();
        if cycles.is_empty() {
            s.push_str("()");
        }
        for c in cycles {
            s.push('(');
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}", x + 1);
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self.to_cycle_string())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics when the degrees differ; see [`Permutation::compose`].
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}
