use alloc::borrow::Cow;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::Permutation;

const NONE: u32 = u32::MAX;

/// Orbits times degree above this use Schreier trees instead of stored
/// transversal elements.
const EXPLICIT_LIMIT: usize = 1 << 22;

#[derive(Clone, Debug)]
enum Transversal {
    /// `reps[k]` maps the base point to `orbit[k]`; `inv[k]` is its inverse.
    Explicit {
        reps: Vec<Permutation>,
        inv: Vec<Permutation>,
    },
    /// `orbit[k] = orbit[parent[k]]^gens[label[k]]`.
    Tree {
        parent: Vec<u32>,
        label: Vec<u32>,
        gens_inv: Vec<Permutation>,
    },
}

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) point: u32,
    pub(crate) gens: Vec<Permutation>,
    pub(crate) orbit: Vec<u32>,
    pos: Vec<u32>,
    trans: Transversal,
}

impl Level {
    pub(crate) fn new(point: u32, gens: Vec<Permutation>, degree: usize) -> Level {
        let mut orbit = vec![point];
        let mut pos = vec![NONE; degree];
        pos[point as usize] = 0;
        let mut parent = vec![NONE];
        let mut label = vec![NONE];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for (j, g) in gens.iter().enumerate() {
                let y = g.image(x);
                if pos[y as usize] == NONE {
                    pos[y as usize] = orbit.len() as u32;
                    orbit.push(y);
                    parent.push(i as u32);
                    label.push(j as u32);
                }
            }
            i += 1;
        }
        let trans = if orbit.len().saturating_mul(degree) <= EXPLICIT_LIMIT {
            let mut reps: Vec<Permutation> = Vec::with_capacity(orbit.len());
            reps.push(Permutation::identity(degree));
            for k in 1..orbit.len() {
                let r = reps[parent[k] as usize].then(&gens[label[k] as usize]);
                reps.push(r);
            }
            let inv = reps.iter().map(|r| r.inverse()).collect();
            Transversal::Explicit { reps, inv }
        } else {
            let gens_inv = gens.iter().map(|g| g.inverse()).collect();
            Transversal::Tree {
                parent,
                label,
                gens_inv,
            }
        };
        Level {
            point,
            gens,
            orbit,
            pos,
            trans,
        }
    }

    #[inline]
    pub(crate) fn index_of(&self, point: u32) -> Option<usize> {
        match self.pos[point as usize] {
            NONE => None,
            k => Some(k as usize),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.orbit.len()
    }

    pub(crate) fn rep_cow(&self, k: usize) -> Cow<'_, Permutation> {
        match &self.trans {
            Transversal::Explicit { reps, .. } => Cow::Borrowed(&reps[k]),
            Transversal::Tree { parent, label, .. } => {
                let mut path = Vec::new();
                let mut cur = k;
                while cur != 0 {
                    path.push(label[cur]);
                    cur = parent[cur] as usize;
                }
                let degree = self.pos.len();
                let mut acc = Permutation::identity(degree);
                for &l in path.iter().rev() {
                    acc = acc.then(&self.gens[l as usize]);
                }
                Cow::Owned(acc)
            }
        }
    }

    /// `h · rep(k)⁻¹`.
    pub(crate) fn strip_by(&self, h: &Permutation, k: usize) -> Permutation {
        match &self.trans {
            Transversal::Explicit { inv, .. } => h.then(&inv[k]),
            Transversal::Tree {
                parent,
                label,
                gens_inv,
            } => {
                let mut acc = h.clone();
                let mut cur = k;
                while cur != 0 {
                    acc = acc.then(&gens_inv[label[cur] as usize]);
                    cur = parent[cur] as usize;
                }
                acc
            }
        }
    }
}

/// Result of sifting: the residue and the level where sifting stopped
/// (`levels.len()` when every level was passed).
pub(crate) fn sift(levels: &[Level], g: &Permutation, from: usize) -> (Permutation, usize) {
    let mut h = g.clone();
    for (m, level) in levels.iter().enumerate().skip(from) {
        let delta = h.image(level.point);
        match level.index_of(delta) {
            Some(k) => {
                if k != 0 {
                    h = level.strip_by(&h, k);
                }
            }
            None => return (h, m),
        }
    }
    (h, levels.len())
}

/// Deterministic Schreier–Sims. `levels` must already be complete for the
/// levels above `start`; new strong generators are appended to the chain.
pub(crate) fn complete(levels: &mut Vec<Level>, degree: usize, start: usize) {
    if levels.is_empty() {
        return;
    }
    let mut i = start.min(levels.len() - 1) as isize;
    while i >= 0 {
        let iu = i as usize;
        match find_failing_schreier(levels, iu) {
            None => i -= 1,
            Some((residue, j)) => {
                if j == levels.len() {
                    let pt = residue
                        .smallest_moved_point()
                        .expect("nontrivial residue moves a point");
                    levels.push(Level::new(pt, Vec::new(), degree));
                }
                for l in iu + 1..=j {
                    let mut gens = core::mem::take(&mut levels[l].gens);
                    gens.push(residue.clone());
                    let point = levels[l].point;
                    levels[l] = Level::new(point, gens, degree);
                }
                i = j as isize;
            }
        }
    }
}

fn find_failing_schreier(levels: &[Level], i: usize) -> Option<(Permutation, usize)> {
    let level = &levels[i];
    for k in 0..level.len() {
        let u = level.rep_cow(k);
        for x in &level.gens {
            let ux = u.then(x);
            let gamma = ux.image(level.point);
            let target = level.index_of(gamma).expect("orbit is closed");
            let h = level.strip_by(&ux, target);
            if h.is_identity() {
                continue;
            }
            let (res, j) = sift(levels, &h, i + 1);
            if j < levels.len() || !res.is_identity() {
                return Some((res, j));
            }
        }
    }
    None
}

/// Adds a strong generator `g` to an already complete chain and re-completes it.
pub(crate) fn add_generator(levels: &mut Vec<Level>, degree: usize, g: &Permutation) -> bool {
    let (res, j) = sift(levels, g, 0);
    if j == levels.len() && res.is_identity() {
        return false;
    }
    if j == levels.len() {
        let pt = res.smallest_moved_point().expect("nontrivial residue");
        levels.push(Level::new(pt, Vec::new(), degree));
    }
    for l in 0..=j {
        let mut gens = core::mem::take(&mut levels[l].gens);
        gens.push(res.clone());
        let point = levels[l].point;
        levels[l] = Level::new(point, gens, degree);
    }
    complete(levels, degree, j);
    true
}

/// Visits every element `u_k ⋯ u_1 u_0` of the chain exactly once.
pub(crate) fn visit<F>(levels: &[Level], degree: usize, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Permutation) -> ControlFlow<()>,
{
    rec(levels, &Permutation::identity(degree), f)
}

fn rec<F>(levels: &[Level], prefix: &Permutation, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Permutation) -> ControlFlow<()>,
{
    match levels.split_last() {
        None => f(prefix),
        Some((last, rest)) => {
            for k in 0..last.len() {
                let next = prefix.then(&last.rep_cow(k));
                rec(rest, &next, f)?;
            }
            ControlFlow::Continue(())
        }
    }
}
