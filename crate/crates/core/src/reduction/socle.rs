use alloc::vec::Vec;

use crate::perm::ops;
use crate::series::{induced_aut, minimal_normal_subgroups, InducedAutGroup, Section};
use crate::{Error, Homomorphism, PermGroup, Permutation, Result};

/// `G` with a unique, nonabelian minimal normal subgroup
/// `T = S_1 × … × S_k`.
#[derive(Clone, Debug)]
pub struct SocleDecomposition {
    pub group: PermGroup,
    pub socle: PermGroup,
    pub factors: Vec<PermGroup>,
    /// The conjugation action of `G` on the factors.
    pub rho: Homomorphism,
    /// `Aut_G(S_i)`, realized on the points of `S_i`.
    pub induced: Vec<InducedAutGroup>,
}

impl SocleDecomposition {
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// Index `j` with `S_i^x = S_j`.
    pub fn factor_image(&self, i: usize, x: &Permutation) -> Option<usize> {
        factor_image(&self.factors, i, x)
    }
}

fn factor_image(factors: &[PermGroup], i: usize, x: &Permutation) -> Option<usize> {
    let moved: Vec<Permutation> = factors[i].generators().iter().map(|s| s.conjugate_by(x)).collect();
    factors
        .iter()
        .position(|f| moved.iter().all(|s| f.contains(s)))
}

/// Decomposes the socle. Fails with [`Error::Inapplicable`] unless `G` has
/// exactly one minimal normal subgroup and it is nonabelian.
pub fn socle_analysis(g: &PermGroup) -> Result<SocleDecomposition> {
    if g.is_trivial() {
        return Err(Error::Inapplicable("trivial group".into()));
    }
    let minimal = minimal_normal_subgroups(g)?;
    if minimal.len() != 1 {
        return Err(Error::Inapplicable(alloc::format!(
            "{} minimal normal subgroups",
            minimal.len()
        )));
    }
    let socle = minimal.into_iter().next().expect("one subgroup");
    if socle.is_abelian() {
        return Err(Error::Inapplicable("the minimal normal subgroup is abelian".into()));
    }
    let mut factors = minimal_normal_subgroups(&socle)?;
    factors.sort_by_key(|f| f.base());
    let k = factors.len();
    let images = g
        .generators()
        .iter()
        .map(|x| {
            let img: Option<Vec<u32>> = (0..k).map(|i| factor_image(&factors, i, x).map(|j| j as u32)).collect();
            let img = img.ok_or_else(|| Error::Inconsistent("a factor is not mapped to a factor".into()))?;
            Permutation::from_images(img)
        })
        .collect::<Result<Vec<_>>>()?;
    let rho = Homomorphism::new(g, k, images)?;
    let trivial = PermGroup::trivial(g.degree());
    let induced = factors
        .iter()
        .map(|s| induced_aut(g, &Section::new(s, &trivial)?))
        .collect::<Result<Vec<_>>>()?;
    let product: u64 = factors.iter().map(|f| f.order()).product();
    if product != socle.order() {
        return Err(Error::Inconsistent("socle factors do not multiply to the socle".into()));
    }
    debug_assert!(ops::is_normal(g, &socle));
    Ok(SocleDecomposition {
        group: g.clone(),
        socle,
        factors,
        rho,
        induced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};
    use crate::perm::WreathProduct;

    #[test]
    fn examples() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let d = socle_analysis(&a5).unwrap();
        assert_eq!((d.k(), d.induced[0].order()), (1, 60));
        let s5 = make(&GroupFamilySpec::Sym(5)).unwrap();
        let d = socle_analysis(&s5).unwrap();
        assert_eq!((d.k(), d.socle.order(), d.induced[0].order()), (1, 60, 120));
        let w = WreathProduct::new(&a5, &make(&GroupFamilySpec::Cyclic(2)).unwrap()).unwrap();
        let d = socle_analysis(w.group()).unwrap();
        assert_eq!((d.k(), d.socle.order()), (2, 3600));
        assert_eq!(d.rho.image_group().order(), 2);
        assert!(d.induced.iter().all(|l| l.order() == 60));
        let s4 = make(&GroupFamilySpec::Sym(4)).unwrap();
        assert!(matches!(socle_analysis(&s4), Err(Error::Inapplicable(_))));
    }
}
