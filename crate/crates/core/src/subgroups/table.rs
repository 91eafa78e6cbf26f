use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use hashbrown::HashMap;

use crate::{Error, PermGroup, Permutation, Result};

/// The elements of a small group, indexed by rank, with fast products.
pub(crate) struct ElementTable {
    pub(crate) group: PermGroup,
    n: usize,
    deg: usize,
    images: Vec<u16>,
    index: HashMap<Box<[u16]>, u32>,
    pub(crate) inv: Vec<u32>,
    pub(crate) orders: Vec<u32>,
    /// `gen_conj[j][e]` is the index of `e^{g_j}` for the group generators.
    pub(crate) gen_conj: Vec<Vec<u32>>,
}

impl ElementTable {
    pub(crate) fn new(group: &PermGroup, bound: u64) -> Result<Self> {
        if group.order() > bound {
            return Err(Error::BoundExceeded {
                what: "element table",
                size: group.order(),
                bound,
            });
        }
        if group.degree() > u16::MAX as usize {
            return Err(Error::Unsupported("degree too large for an element table".into()));
        }
        let n = group.order() as usize;
        let deg = group.degree();
        let mut images = Vec::with_capacity(n * deg);
        let mut index = HashMap::with_capacity(n);
        for r in 0..n {
            let p = group.unrank(r as u64);
            let img: Box<[u16]> = p.images().iter().map(|&x| x as u16).collect();
            images.extend_from_slice(&img);
            index.insert(img, r as u32);
        }
        let mut t = ElementTable {
            group: group.clone(),
            n,
            deg,
            images,
            index,
            inv: Vec::new(),
            orders: Vec::new(),
            gen_conj: Vec::new(),
        };
        t.inv = (0..n as u32)
            .map(|e| {
                let mut buf = vec![0u16; deg];
                for (i, &x) in t.perm(e).iter().enumerate() {
                    buf[x as usize] = i as u16;
                }
                t.lookup(&buf)
            })
            .collect();
        t.orders = (0..n as u32).map(|e| t.permutation(e).order() as u32).collect();
        let gens: Vec<u32> = group
            .generators()
            .iter()
            .map(|g| t.index_of(g).expect("generator is a member"))
            .collect();
        t.gen_conj = gens
            .iter()
            .map(|&g| (0..n as u32).map(|e| t.conj(e, g)).collect())
            .collect();
        Ok(t)
    }

    pub(crate) fn len(&self) -> usize {
        self.n
    }

    fn perm(&self, e: u32) -> &[u16] {
        let s = e as usize * self.deg;
        &self.images[s..s + self.deg]
    }

    fn lookup(&self, buf: &[u16]) -> u32 {
        *self.index.get(buf).expect("product of members is a member")
    }

    pub(crate) fn permutation(&self, e: u32) -> Permutation {
        Permutation::from_images_unchecked(self.perm(e).iter().map(|&x| x as u32).collect())
    }

    pub(crate) fn index_of(&self, p: &Permutation) -> Option<u32> {
        if p.degree() != self.deg {
            return None;
        }
        let buf: Vec<u16> = p.images().iter().map(|&x| x as u16).collect();
        self.index.get(&buf[..]).copied()
    }

    /// Index of `a·b` (apply `a` first).
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        let pa = self.perm(a);
        let pb = self.perm(b);
        let mut buf = [0u16; 32];
        if self.deg <= 32 {
            for (i, &x) in pa.iter().enumerate() {
                buf[i] = pb[x as usize];
            }
            self.lookup(&buf[..self.deg])
        } else {
            let v: Vec<u16> = pa.iter().map(|&x| pb[x as usize]).collect();
            self.lookup(&v)
        }
    }

    /// Index of `g⁻¹ a g`.
    pub(crate) fn conj(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv[g as usize], a), g)
    }

    pub(crate) fn identity(&self) -> u32 {
        0
    }
}

/// A subgroup of an [`ElementTable`] group: member set, element list and
/// generators (all as element indices).
#[derive(Clone, Debug)]
pub(crate) struct TableSubgroup {
    pub(crate) set: FixedBitSet,
    pub(crate) elems: Vec<u32>,
    pub(crate) gens: Vec<u32>,
}

impl TableSubgroup {
    pub(crate) fn trivial(t: &ElementTable) -> Self {
        let mut set = FixedBitSet::with_capacity(t.len());
        set.insert(t.identity() as usize);
        TableSubgroup {
            set,
            elems: vec![t.identity()],
            gens: Vec::new(),
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.elems.len()
    }

    pub(crate) fn contains(&self, e: u32) -> bool {
        self.set.contains(e as usize)
    }

    /// `⟨self, x⟩` by coset enumeration; `None` if the order would exceed
    /// `limit`.
    pub(crate) fn join_element(&self, t: &ElementTable, x: u32, limit: usize) -> Option<Self> {
        if self.contains(x) {
            return Some(self.clone());
        }
        let mut out = self.clone();
        out.gens.push(x);
        // `out` is kept a union of right cosets `self·w`.
        let mut reps = vec![t.identity()];
        let mut i = 0;
        while i < reps.len() {
            let w = reps[i];
            for k in 0..out.gens.len() {
                let y = t.mul(w, out.gens[k]);
                if out.set.contains(y as usize) {
                    continue;
                }
                if out.elems.len() + self.elems.len() > limit {
                    return None;
                }
                for &r in &self.elems {
                    let e = t.mul(r, y);
                    out.set.insert(e as usize);
                    out.elems.push(e);
                }
                reps.push(y);
            }
            i += 1;
        }
        Some(out)
    }

    /// The image under the conjugation table `map`.
    pub(crate) fn mapped(&self, map: &[u32]) -> Self {
        let mut set = FixedBitSet::with_capacity(self.set.len());
        let elems: Vec<u32> = self.elems.iter().map(|&e| map[e as usize]).collect();
        for &e in &elems {
            set.insert(e as usize);
        }
        TableSubgroup {
            set,
            elems,
            gens: self.gens.iter().map(|&e| map[e as usize]).collect(),
        }
    }

    pub(crate) fn sorted_elems(&self) -> Vec<u32> {
        self.set.ones().map(|e| e as u32).collect()
    }

    pub(crate) fn to_group(&self, t: &ElementTable) -> Result<PermGroup> {
        PermGroup::new(
            t.group.degree(),
            self.gens.iter().map(|&e| t.permutation(e)).collect(),
        )
    }
}
