use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use rand::Rng;

use super::bsgs::{self, Level};
use super::Permutation;
use crate::{Error, Result};

/// A permutation group given by generators, with a stabilizer chain.
///
/// The base is chosen deterministically: every new base point is the
/// smallest point moved by the residue that required it. Values are
/// immutable once built.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u64,
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    Ok(())
}

fn chain_order(levels: &[Level]) -> Result<u64> {
    levels.iter().try_fold(1u64, |acc, l| {
        acc.checked_mul(l.len() as u64).ok_or(Error::OrderOverflow)
    })
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// As [`PermGroup::new`], but the base starts with `prefix` (points may
    /// be fixed by the whole group, giving trivial levels).
    pub fn with_base_prefix(degree: usize, gens: Vec<Permutation>, prefix: &[u32]) -> Result<Self> {
        check_degrees(degree, &gens)?;
        for &pt in prefix {
            if pt as usize >= degree {
                return Err(Error::PointOutOfRange {
                    point: pt + 1,
                    degree,
                });
            }
        }
        let mut base: Vec<u32> = prefix.to_vec();
        let strong: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &strong {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let lg: Vec<Permutation> = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.image(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(b, lg, degree));
        }
        let start = levels.len().saturating_sub(1);
        bsgs::complete(&mut levels, degree, start);
        let order = chain_order(&levels)?;
        Ok(PermGroup {
            degree,
            generators: gens,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: 1,
        }
    }

    /// The group generated by `self` and `g`, reusing the existing chain.
    pub fn extended(&self, g: &Permutation) -> Result<Self> {
        check_degrees(self.degree, core::slice::from_ref(g))?;
        let mut out = self.clone();
        out.generators.push(g.clone());
        if bsgs::add_generator(&mut out.levels, self.degree, g) {
            out.order = chain_order(&out.levels)?;
        }
        Ok(out)
    }

    /// The group generated by `self` and all of `gens`.
    pub fn extended_by(&self, gens: &[Permutation]) -> Result<Self> {
        let mut out = self.clone();
        for g in gens {
            if !out.contains(g) {
                out = out.extended(g)?;
            } else {
                out.generators.push(g.clone());
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Lengths of the fundamental orbits; their product is the order.
    pub fn fundamental_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub(crate) fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Pointwise stabilizer of the first `k` base points, read off the chain.
    pub fn chain_stabilizer(&self, k: usize) -> PermGroup {
        if k >= self.levels.len() {
            return PermGroup::trivial(self.degree);
        }
        let levels = self.levels[k..].to_vec();
        let order = levels.iter().map(|l| l.len() as u64).product();
        PermGroup {
            degree: self.degree,
            generators: levels[0].gens.clone(),
            levels,
            order,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Membership by sifting; `false` on degree mismatch.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, j) = bsgs::sift(&self.levels, g, 0);
        j == self.levels.len() && res.is_identity()
    }

    /// Membership test that reports degree mismatches as errors.
    pub fn membership(&self, g: &Permutation) -> Result<bool> {
        check_degrees(self.degree, core::slice::from_ref(g))?;
        Ok(self.contains(g))
    }

    /// Position of `g` in the canonical enumeration of the group, or `None`
    /// if `g` is not a member.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        if g.degree() != self.degree {
            return None;
        }
        let mut h = g.clone();
        let mut rank = 0u64;
        let mut radix = 1u64;
        for level in &self.levels {
            let k = level.index_of(h.image(level.point))?;
            if k != 0 {
                h = level.strip_by(&h, k);
            }
            rank += k as u64 * radix;
            radix *= level.len() as u64;
        }
        h.is_identity().then_some(rank)
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn unrank(&self, mut rank: u64) -> Permutation {
        let mut idx = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            idx.push((rank % level.len() as u64) as usize);
            rank /= level.len() as u64;
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &k) in self.levels.iter().zip(&idx).rev() {
            if k != 0 {
                g = g.then(&level.rep_cow(k));
            }
        }
        g
    }

    /// Calls `f` on every element; stops early on `ControlFlow::Break`.
    pub fn visit_elements<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        bsgs::visit(&self.levels, self.degree, &mut f)
    }

    /// All elements, or an error if the order exceeds `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Permutation>> {
        if self.order > bound {
            return Err(Error::BoundExceeded {
                what: "element list",
                size: self.order,
                bound,
            });
        }
        let mut out = Vec::with_capacity(self.order as usize);
        let _ = self.visit_elements(|g| {
            out.push(g.clone());
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Uniformly random element, built from random transversal entries.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let r = rng.random_range(0..self.order);
        self.unrank(r)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Orbits on all points, each sorted, in order of least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let mut o = self.orbit(p);
            for &x in &o {
                seen[x as usize] = true;
            }
            o.sort_unstable();
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].then(&g[j]) == g[j].then(&g[i])))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && other.order.is_multiple_of(self.order)
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// Subgroup equality: equal orders and generator containment.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    /// `self` is normalized by every generator of `by`.
    pub fn is_normalized_by(&self, by: &PermGroup) -> bool {
        by.generators
            .iter()
            .all(|x| self.generators.iter().all(|h| self.contains(&h.conjugate_by(x))))
    }

    /// The conjugate group `self^x`.
    pub fn conjugate(&self, x: &Permutation) -> Result<PermGroup> {
        let gens = self.generators.iter().map(|g| g.conjugate_by(x)).collect();
        PermGroup::new(self.degree, gens)
    }

    /// Group generated by `self` and `other` (same degree).
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        if other.order > self.order {
            return other.join(self);
        }
        self.extended_by(&other.generators)
    }

    /// Pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Result<PermGroup> {
        let g = PermGroup::with_base_prefix(self.degree, self.generators.clone(), points)?;
        Ok(g.chain_stabilizer(points.len()))
    }

    /// Histogram of element orders as ascending `(order, count)` pairs.
    pub fn element_order_histogram(&self, bound: u64) -> Result<Vec<(u64, u64)>> {
        if self.order > bound {
            return Err(Error::TooLargeForScan {
                what: "group",
                order: self.order,
                bound,
            });
        }
        let mut hist: alloc::collections::BTreeMap<u64, u64> = Default::default();
        let _ = self.visit_elements(|g| {
            *hist.entry(g.order()).or_default() += 1;
            ControlFlow::Continue(())
        });
        Ok(hist.into_iter().collect())
    }
}
