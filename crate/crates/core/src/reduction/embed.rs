use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::socle::SocleDecomposition;
use crate::perm::{ops, WreathProduct};
use crate::{Error, Homomorphism, Outcome, PermGroup, Permutation, Result};

/// Results of the checks run by [`wreath_embed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingChecks {
    /// `r_i g = n_i(g) r_{iρ(g)}` with `n_i(g) ∈ N_G(S_1)`, for every
    /// generator `g` and every `i`.
    pub relation: bool,
    pub injective: bool,
    /// `φ(T)` is the base socle `S_1 × … × S_k` of the wreath product.
    pub socle_onto: bool,
    /// `φ(X) ≤ Aut_X(S_1) ≀ ρ(X)` for `X = H` and `X = G`.
    pub covariance: Vec<(String, bool)>,
}

impl EmbeddingChecks {
    pub fn outcome(&self) -> Outcome {
        let mut bad = Vec::new();
        if !self.relation {
            bad.push(String::from("cocycle relation"));
        }
        if !self.injective {
            bad.push(String::from("injectivity"));
        }
        if !self.socle_onto {
            bad.push(String::from("image of the socle"));
        }
        for (name, ok) in &self.covariance {
            if !ok {
                bad.push(alloc::format!("covariance for {name}"));
            }
        }
        Outcome::from_check(bad.is_empty(), || bad.join(", "))
    }
}

/// The embedding `φ: G → Aut_G(S_1) ≀ ρ(G)` built from coset
/// representatives `r_i` of `N_G(S_1)` chosen inside `H`.
#[derive(Clone, Debug)]
pub struct WreathEmbedding {
    pub decomposition: SocleDecomposition,
    pub complement: PermGroup,
    /// `r_i ∈ H` with `S_1^{r_i} = S_i`; `r_1 = 1`.
    pub reps: Vec<Permutation>,
    pub normalizer: PermGroup,
    pub wreath: WreathProduct,
    pub phi: Homomorphism,
    /// `S_1 × … × S_k` inside the wreath product.
    pub base_socle: PermGroup,
    pub checks: EmbeddingChecks,
}

impl WreathEmbedding {
    /// `ρ(g)` as a permutation of factor indices.
    pub fn rho(&self, g: &Permutation) -> Result<Permutation> {
        rho_of(&self.decomposition, g)
    }

    /// `(n_1(g), …, n_k(g))` with `n_i(g) = r_i g r_{iρ(g)}⁻¹`.
    pub fn cocycle(&self, g: &Permutation) -> Result<Vec<Permutation>> {
        cocycle(&self.reps, &self.rho(g)?, g)
    }

    /// `φ(g)`.
    pub fn apply(&self, g: &Permutation) -> Result<Permutation> {
        phi_of(&self.decomposition, &self.wreath, &self.reps, g)
    }
}

fn rho_of(d: &SocleDecomposition, g: &Permutation) -> Result<Permutation> {
    let images = (0..d.k())
        .map(|i| d.factor_image(i, g).map(|j| j as u32))
        .collect::<Option<Vec<u32>>>()
        .ok_or(Error::NotAMember)?;
    Permutation::from_images(images)
}

fn cocycle(reps: &[Permutation], rho: &Permutation, g: &Permutation) -> Result<Vec<Permutation>> {
    reps.iter()
        .enumerate()
        .map(|(i, r)| {
            let j = rho.image(i as u32) as usize;
            r.compose(g)?.compose(&reps[j].inverse())
        })
        .collect()
}

fn phi_of(d: &SocleDecomposition, w: &WreathProduct, reps: &[Permutation], g: &Permutation) -> Result<Permutation> {
    let rho = rho_of(d, g)?;
    let coords: Vec<Permutation> = cocycle(reps, &rho, g)?
        .iter()
        .map(|n| d.induced[0].induced(n))
        .collect();
    Ok(w.assemble(&coords, &rho))
}

/// Builds `φ` and checks the defining relation, injectivity, `φ(T) = 𝐒`
/// and covariance for `H` and `G`. Requires `HT = G`.
pub fn wreath_embed(d: &SocleDecomposition, h: &PermGroup) -> Result<WreathEmbedding> {
    let g = &d.group;
    if !h.is_subgroup_of(g) {
        return Err(Error::NotAMember);
    }
    if h.join(&d.socle)?.order() != g.order() {
        return Err(Error::Inapplicable("HT is a proper subgroup of G".into()));
    }
    let k = d.k();
    let mut reps: Vec<Option<Permutation>> = vec![None; k];
    reps[0] = Some(Permutation::identity(g.degree()));
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for x in h.generators() {
            let j = d.factor_image(i, x).ok_or(Error::NotAMember)?;
            if reps[j].is_none() {
                reps[j] = Some(reps[i].as_ref().expect("visited").compose(x)?);
                queue.push(j);
            }
        }
    }
    let reps: Vec<Permutation> = reps
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Inapplicable("H is not transitive on the socle factors".into()))?;

    let l1 = &d.induced[0];
    let wreath = WreathProduct::new(&l1.image, d.rho.image_group())?;
    let images = g
        .generators()
        .iter()
        .map(|x| phi_of(d, &wreath, &reps, x))
        .collect::<Result<Vec<_>>>()?;
    let phi = Homomorphism::new(g, wreath.group().degree(), images)?;
    let normalizer = l1.normalizer.clone();

    let mut relation = true;
    for x in g.generators() {
        let rho = rho_of(d, x)?;
        for (i, n) in cocycle(&reps, &rho, x)?.iter().enumerate() {
            let j = rho.image(i as u32) as usize;
            relation &= normalizer.contains(n) && reps[i].compose(x)? == n.compose(&reps[j])?;
        }
    }
    let injective = phi.image_group().order() == g.order();
    let base_socle = wreath.power_of(&l1.inner_image)?;
    let socle_image = PermGroup::new(
        wreath.group().degree(),
        d.socle
            .generators()
            .iter()
            .map(|t| phi_of(d, &wreath, &reps, t))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let socle_onto = socle_image.same_group(&base_socle);

    let mut covariance = Vec::new();
    for (name, x) in [("H", h), ("G", g)] {
        let n_x = ops::normalizer(x, &d.factors[0])?;
        let aut_x = PermGroup::new(
            l1.image.degree(),
            n_x.generators().iter().map(|n| l1.induced(n)).collect(),
        )?;
        let rho_x = PermGroup::new(k, x.generators().iter().map(|y| rho_of(d, y)).collect::<Result<_>>()?)?;
        let mut ok = true;
        for y in x.generators() {
            let rho = rho_of(d, y)?;
            ok &= rho_x.contains(&rho);
            for n in cocycle(&reps, &rho, y)? {
                ok &= aut_x.contains(&l1.induced(&n));
            }
        }
        covariance.push((String::from(name), ok));
    }

    Ok(WreathEmbedding {
        decomposition: d.clone(),
        complement: h.clone(),
        reps,
        normalizer,
        wreath,
        phi,
        base_socle,
        checks: EmbeddingChecks {
            relation,
            injective,
            socle_onto,
            covariance,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};
    use crate::reduction::socle_analysis;
    use crate::sylow::sylow_subgroup;

    #[test]
    fn a5_wreath_c2() {
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let w = WreathProduct::new(&a5, &make(&GroupFamilySpec::Cyclic(2)).unwrap()).unwrap();
        let d = socle_analysis(w.group()).unwrap();
        let p = sylow_subgroup(w.group(), 2).unwrap();
        let e = wreath_embed(&d, &p).unwrap();
        assert_eq!(e.checks.outcome(), Outcome::Holds);
        assert_eq!(e.phi.image_group().order(), 7200);
        let e = wreath_embed(&d, w.group()).unwrap();
        assert_eq!(e.checks.outcome(), Outcome::Holds);
    }

    #[test]
    fn almost_simple() {
        let s5 = make(&GroupFamilySpec::Sym(5)).unwrap();
        let d = socle_analysis(&s5).unwrap();
        let e = wreath_embed(&d, &s5).unwrap();
        assert_eq!(e.checks.outcome(), Outcome::Holds);
        assert_eq!(e.phi.image_group().order(), 120);
        let a5 = make(&GroupFamilySpec::Alt(5)).unwrap();
        let d = socle_analysis(&a5).unwrap();
        let e = wreath_embed(&d, &PermGroup::trivial(5)).unwrap();
        assert_eq!(e.checks.outcome(), Outcome::Holds);
    }
}
