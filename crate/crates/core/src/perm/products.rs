use alloc::vec::Vec;

use super::{Homomorphism, PermGroup, Permutation};
use crate::Result;

/// `A × B` acting on `deg A + deg B` points, `A` on the first block.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    factors: [PermGroup; 2],
    group: PermGroup,
}

impl DirectProduct {
    pub fn new(a: &PermGroup, b: &PermGroup) -> Result<Self> {
        let total = a.degree() + b.degree();
        let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, total)).collect();
        gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), total)));
        Ok(DirectProduct {
            factors: [a.clone(), b.clone()],
            group: PermGroup::new(total, gens)?,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    fn offset(&self, which: usize) -> usize {
        if which == 0 {
            0
        } else {
            self.factors[0].degree()
        }
    }

    /// Component of `g` in factor `which` (0 or 1).
    pub fn projection(&self, which: usize, g: &Permutation) -> Option<Permutation> {
        g.restricted(self.offset(which), self.factors[which].degree())
    }

    pub fn injection(&self, which: usize, g: &Permutation) -> Permutation {
        g.shifted(self.offset(which), self.group.degree())
    }

    pub fn projection_hom(&self, which: usize) -> Result<Homomorphism> {
        let images = self
            .group
            .generators()
            .iter()
            .map(|g| self.projection(which, g).expect("blocks are invariant"))
            .collect();
        Homomorphism::new(&self.group, self.factors[which].degree(), images)
    }
}

/// Permutation wreath product `L ≀ K` with `K` acting on `{0..k}`.
///
/// Point `(i, x)` is stored as `i·m + x` where `m = deg L`. The element
/// `(g_1, …, g_k)σ` maps `(i, x)` to `(iσ, x^{g_i})`; hence `σ` acts on the
/// base group by `(g_1, …, g_k) ↦ (g_{1σ⁻¹}, …, g_{kσ⁻¹})`.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    base: PermGroup,
    top: PermGroup,
    group: PermGroup,
}

impl WreathProduct {
    pub fn new(base: &PermGroup, top: &PermGroup) -> Result<Self> {
        let m = base.degree();
        let k = top.degree();
        let id_l = Permutation::identity(m);
        let id_k = Permutation::identity(k);
        let mut gens = Vec::new();
        for orbit in top.orbits() {
            let i = orbit[0] as usize;
            for g in base.generators() {
                let mut coords = alloc::vec![id_l.clone(); k];
                coords[i] = g.clone();
                gens.push(Self::assemble_raw(m, &coords, &id_k));
            }
        }
        for s in top.generators() {
            gens.push(Self::assemble_raw(m, &alloc::vec![id_l.clone(); k], s));
        }
        Ok(WreathProduct {
            base: base.clone(),
            top: top.clone(),
            group: PermGroup::new(m * k, gens)?,
        })
    }

    fn assemble_raw(m: usize, coords: &[Permutation], sigma: &Permutation) -> Permutation {
        let mut images = Vec::with_capacity(m * coords.len());
        for (i, gi) in coords.iter().enumerate() {
            let target = sigma.image(i as u32) as usize * m;
            images.extend(gi.images().iter().map(|&x| (target + x as usize) as u32));
        }
        Permutation::from_images_unchecked(images)
    }

    /// The element `(g_1, …, g_k)σ`.
    pub fn assemble(&self, coords: &[Permutation], sigma: &Permutation) -> Permutation {
        assert_eq!(coords.len(), self.top.degree());
        Self::assemble_raw(self.base.degree(), coords, sigma)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn base_factor(&self) -> &PermGroup {
        &self.base
    }

    pub fn top_group(&self) -> &PermGroup {
        &self.top
    }

    pub fn num_coordinates(&self) -> usize {
        self.top.degree()
    }

    /// `ρ(g)`, the permutation of coordinates.
    pub fn rho(&self, g: &Permutation) -> Permutation {
        let m = self.base.degree() as u32;
        let images = (0..self.top.degree() as u32).map(|i| g.image(i * m) / m).collect();
        Permutation::from_images_unchecked(images)
    }

    /// `π_i(g) = g_i` in the decomposition `g = (g_1, …, g_k)ρ(g)`.
    pub fn pi(&self, i: usize, g: &Permutation) -> Permutation {
        let m = self.base.degree();
        let target = (g.image((i * m) as u32) as usize / m) * m;
        let images = (0..m).map(|x| g.image((i * m + x) as u32) - target as u32).collect();
        Permutation::from_images_unchecked(images)
    }

    pub fn decompose(&self, g: &Permutation) -> (Vec<Permutation>, Permutation) {
        let coords = (0..self.top.degree()).map(|i| self.pi(i, g)).collect();
        (coords, self.rho(g))
    }

    pub fn rho_hom(&self) -> Result<Homomorphism> {
        let images = self.group.generators().iter().map(|g| self.rho(g)).collect();
        Homomorphism::new(&self.group, self.top.degree(), images)
    }

    /// `sub` placed in coordinate `i`.
    pub fn coordinate_subgroup(&self, i: usize, sub: &PermGroup) -> Result<PermGroup> {
        let k = self.top.degree();
        let id_l = Permutation::identity(self.base.degree());
        let id_k = Permutation::identity(k);
        let gens = sub
            .generators()
            .iter()
            .map(|g| {
                let mut coords = alloc::vec![id_l.clone(); k];
                coords[i] = g.clone();
                self.assemble(&coords, &id_k)
            })
            .collect();
        PermGroup::new(self.group.degree(), gens)
    }

    /// `sub × ⋯ × sub`, one copy per coordinate.
    pub fn power_of(&self, sub: &PermGroup) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for i in 0..self.top.degree() {
            gens.extend_from_slice(self.coordinate_subgroup(i, sub)?.generators());
        }
        PermGroup::new(self.group.degree(), gens)
    }

    /// The base group `L^k`.
    pub fn base_group(&self) -> Result<PermGroup> {
        self.power_of(&self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};
    use crate::perm::ops;

    #[test]
    fn orders() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let c2 = make(&GroupFamilySpec::Cyclic(2)).unwrap();
        let d = DirectProduct::new(&a5, &a5).unwrap();
        assert_eq!((d.group().order(), d.group().degree()), (3600, 10));
        let w = WreathProduct::new(&a5, &c2).unwrap();
        assert_eq!((w.group().order(), w.group().degree()), (7200, 10));
        let one = PermGroup::trivial(1);
        let w1 = WreathProduct::new(&a5, &one).unwrap();
        assert_eq!(w1.group().order(), 60);
    }

    #[test]
    fn c2_wreath_c2_is_dihedral() {
        let c2 = make(&GroupFamilySpec::Cyclic(2)).unwrap();
        let w = WreathProduct::new(&c2, &c2).unwrap();
        let g = w.group();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // An element r of order 4 and an involution s outside ⟨r⟩ with s r s = r⁻¹.
        let elems = g.elements(8).unwrap();
        let r = elems.iter().find(|x| x.order() == 4).unwrap();
        let cyc = PermGroup::new(4, alloc::vec![r.clone()]).unwrap();
        let s = elems.iter().find(|x| x.order() == 2 && !cyc.contains(x)).unwrap();
        assert_eq!(r.conjugate_by(s), r.inverse());
        assert_eq!(ops::center(g).unwrap().order(), 2);
    }

    #[test]
    fn coordinate_convention() {
        let s3 = make(&GroupFamilySpec::Sym(3)).unwrap();
        let c3 = make(&GroupFamilySpec::Cyclic(3)).unwrap();
        let w = WreathProduct::new(&s3, &c3).unwrap();
        let a = s3.generators()[0].clone();
        let b = s3.generators()[1].clone();
        let id = Permutation::identity(3);
        let sigma = c3.generators()[0].clone();
        let base = w.assemble(&[a.clone(), b.clone(), id.clone()], &Permutation::identity(3));
        // σ⁻¹ (g_1, g_2, g_3) σ = (g_{1σ⁻¹}, g_{2σ⁻¹}, g_{3σ⁻¹})
        let s = w.assemble(&[id.clone(), id.clone(), id.clone()], &sigma);
        let conj = base.conjugate_by(&s);
        let inv = sigma.inverse();
        for i in 0..3 {
            let j = inv.image(i as u32) as usize;
            assert_eq!(w.pi(i, &conj), w.pi(j, &base));
        }
        assert!(w.rho(&conj).is_identity());
        let (coords, r) = w.decompose(&s.then(&base));
        assert_eq!(w.assemble(&coords, &r), s.then(&base));
        let hom = w.rho_hom().unwrap();
        assert_eq!(hom.kernel().unwrap().order(), 216);
    }
}
