use alloc::vec::Vec;
use core::cell::OnceCell;

use super::{bsgs, PermGroup, Permutation};
use crate::{Error, Result};

/// A homomorphism of permutation groups, given by generator images.
///
/// Evaluation, kernels and preimages use the graph subgroup
/// `{(g, φ(g))}` acting on the disjoint union of both point sets.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: PermGroup,
    target: PermGroup,
    gen_images: Vec<Permutation>,
    graph: PermGroup,
    graph_target_first: OnceCell<PermGroup>,
}

fn pair(g: &Permutation, y: &Permutation) -> Permutation {
    let ds = g.degree();
    let mut images: Vec<u32> = g.images().to_vec();
    images.extend(y.images().iter().map(|&x| x + ds as u32));
    Permutation::from_images_unchecked(images)
}

impl Homomorphism {
    /// Fails with [`Error::NotAHomomorphism`] when the images do not extend
    /// to a homomorphism.
    pub fn new(source: &PermGroup, target_degree: usize, gen_images: Vec<Permutation>) -> Result<Self> {
        if gen_images.len() != source.generators().len() {
            return Err(Error::InvalidParameter(
                "one image per source generator is required".into(),
            ));
        }
        for y in &gen_images {
            if y.degree() != target_degree {
                return Err(Error::DegreeMismatch {
                    expected: target_degree,
                    found: y.degree(),
                });
            }
        }
        let ds = source.degree();
        let gens: Vec<Permutation> = source
            .generators()
            .iter()
            .zip(&gen_images)
            .map(|(g, y)| pair(g, y))
            .collect();
        let graph = PermGroup::with_base_prefix(ds + target_degree, gens, &source.base())?;
        if graph.order() != source.order() {
            return Err(Error::NotAHomomorphism);
        }
        let target = PermGroup::new(target_degree, gen_images.clone())?;
        Ok(Homomorphism {
            source: source.clone(),
            target,
            gen_images,
            graph,
            graph_target_first: OnceCell::new(),
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    /// The image group `φ(source)`.
    pub fn image_group(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    pub fn target_degree(&self) -> usize {
        self.target.degree()
    }

    /// `φ(g)`; errors if `g` is not in the source group.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        let ds = self.source.degree();
        let dt = self.target.degree();
        if g.degree() != ds {
            return Err(Error::DegreeMismatch {
                expected: ds,
                found: g.degree(),
            });
        }
        let h = pair(g, &Permutation::identity(dt));
        let (res, j) = bsgs::sift(self.graph.levels(), &h, 0);
        if j < self.graph.levels().len() || res.restricted(0, ds).is_none_or(|r| !r.is_identity()) {
            return Err(Error::NotAMember);
        }
        let y = res.restricted(ds, dt).expect("blocks are invariant");
        Ok(y.inverse())
    }

    fn target_first(&self) -> Result<&PermGroup> {
        if let Some(g) = self.graph_target_first.get() {
            return Ok(g);
        }
        let ds = self.source.degree();
        let dt = self.target.degree();
        let prefix: Vec<u32> = (ds as u32..(ds + dt) as u32).collect();
        let g = PermGroup::with_base_prefix(ds + dt, self.graph.generators().to_vec(), &prefix)?;
        Ok(self.graph_target_first.get_or_init(|| g))
    }

    pub fn kernel(&self) -> Result<PermGroup> {
        let ds = self.source.degree();
        let dt = self.target.degree();
        let tail = self.target_first()?.chain_stabilizer(dt);
        let gens = tail
            .strong_generators()
            .iter()
            .map(|g| g.restricted(0, ds).expect("blocks are invariant"))
            .collect();
        PermGroup::new(ds, gens)
    }

    /// Some `g` with `φ(g) = y`, or `None` if `y` is not in the image.
    pub fn lift(&self, y: &Permutation) -> Option<Permutation> {
        let ds = self.source.degree();
        let dt = self.target.degree();
        if y.degree() != dt {
            return None;
        }
        let graph = self.target_first().ok()?;
        let mut h = pair(&Permutation::identity(ds), y);
        for level in graph.levels().iter().take(dt) {
            let k = level.index_of(h.image(level.point))?;
            if k != 0 {
                h = level.strip_by(&h, k);
            }
        }
        if !h.restricted(ds, dt)?.is_identity() {
            return None;
        }
        Some(h.restricted(0, ds)?.inverse())
    }

    /// Image of a subgroup of the source.
    pub fn image_of_subgroup(&self, sub: &PermGroup) -> Result<PermGroup> {
        let gens = sub.generators().iter().map(|x| self.image(x)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.target.degree(), gens)
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage(&self, sub: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.kernel()?.generators().to_vec();
        for y in sub.generators() {
            gens.push(self.lift(y).ok_or(Error::NotAMember)?);
        }
        PermGroup::new(self.source.degree(), gens)
    }
}
