use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::field::FiniteField;
use crate::arith::{gcd, prime_power};
use crate::{Error, PermGroup, Permutation, Result};

/// Largest `n` for the symmetric and alternating families (`20!` fits in
/// a `u64`).
pub const MAX_SYM_DEGREE: usize = 20;

/// Largest `n` for the cyclic and dihedral families.
pub const MAX_CYCLIC: usize = 4096;

/// A named group family with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamilySpec {
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Sl2(u32),
    Psl2(u32),
    Pgl2(u32),
    Pgammal2(u32),
}

impl GroupFamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupFamilySpec::Sym(_) => "sym",
            GroupFamilySpec::Alt(_) => "alt",
            GroupFamilySpec::Cyclic(_) => "cyclic",
            GroupFamilySpec::Dihedral(_) => "dihedral",
            GroupFamilySpec::Sl2(_) => "sl2",
            GroupFamilySpec::Psl2(_) => "psl2",
            GroupFamilySpec::Pgl2(_) => "pgl2",
            GroupFamilySpec::Pgammal2(_) => "pgammal2",
        }
    }

    pub fn parameter(&self) -> u64 {
        match *self {
            GroupFamilySpec::Sym(n)
            | GroupFamilySpec::Alt(n)
            | GroupFamilySpec::Cyclic(n)
            | GroupFamilySpec::Dihedral(n) => n as u64,
            GroupFamilySpec::Sl2(q)
            | GroupFamilySpec::Psl2(q)
            | GroupFamilySpec::Pgl2(q)
            | GroupFamilySpec::Pgammal2(q) => q as u64,
        }
    }

    /// The classical order formula.
    pub fn expected_order(&self) -> Option<u64> {
        let fact = |n: usize| (1..=n as u64).try_fold(1u64, |a, b| a.checked_mul(b));
        match *self {
            GroupFamilySpec::Sym(n) => fact(n),
            GroupFamilySpec::Alt(n) => fact(n).map(|f| if n >= 2 { f / 2 } else { f }),
            GroupFamilySpec::Cyclic(n) => Some(n as u64),
            GroupFamilySpec::Dihedral(n) => Some(2 * n as u64),
            GroupFamilySpec::Sl2(q) | GroupFamilySpec::Pgl2(q) => {
                let q = q as u64;
                Some(q * (q * q - 1))
            }
            GroupFamilySpec::Psl2(q) => {
                let q = q as u64;
                Some(q * (q * q - 1) / gcd(2, q - 1))
            }
            GroupFamilySpec::Pgammal2(q) => {
                let (_, t) = prime_power(q as u64)?;
                let q = q as u64;
                Some(t as u64 * q * (q * q - 1))
            }
        }
    }
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family_name(), self.parameter())
    }
}

impl FromStr for GroupFamilySpec {
    type Err = Error;

    /// Accepts `name(n)`, `name:n` and `name n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(alloc::format!("cannot parse family spec {s:?}"));
        let s = s.trim();
        let (name, rest) = match s.find(|c: char| c == '(' || c == ':' || c.is_whitespace()) {
            Some(i) => (&s[..i], &s[i + 1..]),
            None => return Err(bad()),
        };
        let arg = rest.trim().trim_end_matches(')').trim();
        let n: u64 = arg.parse().map_err(|_| bad())?;
        let small = |n: u64| usize::try_from(n).map_err(|_| bad());
        let field = |n: u64| u32::try_from(n).map_err(|_| bad());
        Ok(match name.to_ascii_lowercase().as_str() {
            "sym" => GroupFamilySpec::Sym(small(n)?),
            "alt" => GroupFamilySpec::Alt(small(n)?),
            "cyclic" => GroupFamilySpec::Cyclic(small(n)?),
            "dihedral" => GroupFamilySpec::Dihedral(small(n)?),
            "sl2" => GroupFamilySpec::Sl2(field(n)?),
            "psl2" => GroupFamilySpec::Psl2(field(n)?),
            "pgl2" => GroupFamilySpec::Pgl2(field(n)?),
            "pgammal2" => GroupFamilySpec::Pgammal2(field(n)?),
            _ => return Err(bad()),
        })
    }
}

fn cycle(degree: usize, pts: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[pts.to_vec()]).expect("valid cycle")
}

fn check_range(what: &str, n: usize, lo: usize, hi: usize) -> Result<()> {
    if n < lo || n > hi {
        return Err(Error::InvalidParameter(alloc::format!(
            "{what} parameter {n} outside {lo}..={hi}"
        )));
    }
    Ok(())
}

/// Point index on the projective line: `∞ ↦ 0`, `0 ↦ 1`, `g^j ↦ j + 2`.
fn pl_index(f: &FiniteField, z: Option<u32>) -> u32 {
    match z {
        None => 0,
        Some(0) => 1,
        Some(z) => f.log(z).expect("nonzero") + 2,
    }
}

fn pl_point(f: &FiniteField, i: u32) -> Option<u32> {
    match i {
        0 => None,
        1 => Some(0),
        j => Some(f.power_of_generator((j - 2) as u64)),
    }
}

/// The map `z ↦ (az + b)/(cz + d)` composed with `z ↦ z^{p^e}` applied
/// first, as a permutation of the projective line.
fn mobius(f: &FiniteField, [a, b, c, d]: [u32; 4], frob: bool) -> Permutation {
    let n = f.order() + 1;
    let images = (0..n)
        .map(|i| {
            let z = pl_point(f, i).map(|z| if frob { f.frobenius(z) } else { z });
            let w = match z {
                None => {
                    if c == 0 {
                        None
                    } else {
                        Some(f.mul(a, f.inv(c).expect("nonzero")))
                    }
                }
                Some(z) => {
                    let num = f.add(f.mul(a, z), b);
                    let den = f.add(f.mul(c, z), d);
                    f.inv(den).map(|inv| f.mul(num, inv))
                }
            };
            pl_index(f, w)
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrix")
}

fn linear_field(q: u32) -> Result<FiniteField> {
    if q < 2 {
        return Err(Error::InvalidParameter(alloc::format!("{q} is not a prime power")));
    }
    FiniteField::new(q)
}

fn projective_generators(f: &FiniteField, kind: GroupFamilySpec) -> Vec<Permutation> {
    let one = 1;
    let g = f.generator();
    let g2 = f.mul(g, g);
    let mut gens = vec![
        mobius(f, [one, one, 0, one], false),
        mobius(f, [g2, 0, 0, one], false),
        mobius(f, [0, f.neg(one), one, 0], false),
    ];
    if matches!(kind, GroupFamilySpec::Pgl2(_) | GroupFamilySpec::Pgammal2(_)) {
        gens.push(mobius(f, [g, 0, 0, one], false));
    }
    if matches!(kind, GroupFamilySpec::Pgammal2(_)) {
        gens.push(mobius(f, [one, 0, 0, one], true));
    }
    gens.retain(|x| !x.is_identity());
    gens
}

fn sl2_generators(f: &FiniteField) -> Vec<Permutation> {
    let q = f.order();
    let idx = |x: u32, y: u32| x * q + y - 1;
    let apply = |m: [u32; 4]| {
        let mut images = vec![0u32; (q * q - 1) as usize];
        for x in 0..q {
            for y in 0..q {
                if x == 0 && y == 0 {
                    continue;
                }
                // row vector (x, y) times [[a, b], [c, d]]
                let nx = f.add(f.mul(x, m[0]), f.mul(y, m[2]));
                let ny = f.add(f.mul(x, m[1]), f.mul(y, m[3]));
                images[idx(x, y) as usize] = idx(nx, ny);
            }
        }
        Permutation::from_images(images).expect("invertible matrix")
    };
    let g = f.generator();
    let gi = f.inv(g).expect("nonzero");
    let mut gens = vec![
        apply([1, 1, 0, 1]),
        apply([g, 0, 0, gi]),
        apply([0, f.neg(1), 1, 0]),
    ];
    gens.retain(|x| !x.is_identity());
    gens
}

/// Builds the group named by `spec`.
pub fn make(spec: &GroupFamilySpec) -> Result<PermGroup> {
    match *spec {
        GroupFamilySpec::Sym(n) => {
            check_range("sym", n, 1, MAX_SYM_DEGREE)?;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle(n, &[1, 2]));
            }
            if n >= 3 {
                gens.push(cycle(n, &(1..=n as u32).collect::<Vec<_>>()));
            }
            PermGroup::new(n, gens)
        }
        GroupFamilySpec::Alt(n) => {
            check_range("alt", n, 1, MAX_SYM_DEGREE)?;
            let mut gens = Vec::new();
            if n >= 3 {
                gens.push(cycle(n, &[1, 2, 3]));
            }
            if n >= 4 {
                let start = if n % 2 == 1 { 1 } else { 2 };
                gens.push(cycle(n, &(start..=n as u32).collect::<Vec<_>>()));
            }
            PermGroup::new(n, gens)
        }
        GroupFamilySpec::Cyclic(n) => {
            check_range("cyclic", n, 1, MAX_CYCLIC)?;
            let gens = if n >= 2 {
                vec![cycle(n, &(1..=n as u32).collect::<Vec<_>>())]
            } else {
                Vec::new()
            };
            PermGroup::new(n, gens)
        }
        GroupFamilySpec::Dihedral(n) => {
            check_range("dihedral", n, 1, MAX_CYCLIC)?;
            match n {
                1 => PermGroup::new(2, vec![cycle(2, &[1, 2])]),
                2 => {
                    let a = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]])?;
                    let b = Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]])?;
                    PermGroup::new(4, vec![a, b])
                }
                _ => {
                    let r = cycle(n, &(1..=n as u32).collect::<Vec<_>>());
                    // i ↦ 2 - i (mod n), on 1-based points
                    let images = (0..n).map(|i| ((n - i) % n) as u32).collect();
                    let s = Permutation::from_images(images)?;
                    PermGroup::new(n, vec![r, s])
                }
            }
        }
        GroupFamilySpec::Sl2(q) => {
            let f = linear_field(q)?;
            PermGroup::new((q * q - 1) as usize, sl2_generators(&f))
        }
        GroupFamilySpec::Psl2(q) | GroupFamilySpec::Pgl2(q) | GroupFamilySpec::Pgammal2(q) => {
            let f = linear_field(q)?;
            PermGroup::new(q as usize + 1, projective_generators(&f, *spec))
        }
    }
}

/// The natural automorphism overgroup `Aut(S)` of a simple family member:
/// `sym(n)` for `alt(n)` and `pgammal2(q)` for `psl2(q)`.
pub fn aut_overgroup(spec: &GroupFamilySpec) -> Result<(GroupFamilySpec, PermGroup)> {
    let over = match *spec {
        GroupFamilySpec::Alt(6) => {
            return Err(Error::Unsupported(
                "alt(6) has an exceptional outer automorphism group".to_string(),
            ))
        }
        GroupFamilySpec::Alt(n) if n >= 5 => GroupFamilySpec::Sym(n),
        GroupFamilySpec::Psl2(q) if q >= 4 => GroupFamilySpec::Pgammal2(q),
        other => {
            return Err(Error::Unsupported(alloc::format!(
                "no automorphism overgroup for {other}"
            )))
        }
    };
    Ok((over, make(&over)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::ops;

    #[test]
    fn orders_match_formulas() {
        let mut specs = Vec::new();
        for n in 1..=7 {
            specs.push(GroupFamilySpec::Sym(n));
            specs.push(GroupFamilySpec::Alt(n));
            specs.push(GroupFamilySpec::Cyclic(n));
            specs.push(GroupFamilySpec::Dihedral(n));
        }
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32] {
            specs.push(GroupFamilySpec::Psl2(q));
            specs.push(GroupFamilySpec::Pgl2(q));
            specs.push(GroupFamilySpec::Pgammal2(q));
        }
        for q in [2u32, 3, 4, 5, 7] {
            specs.push(GroupFamilySpec::Sl2(q));
        }
        for s in specs {
            let g = make(&s).unwrap();
            assert_eq!(Some(g.order()), s.expected_order(), "{s}");
        }
    }

    #[test]
    fn spec_examples() {
        let g = make(&GroupFamilySpec::Psl2(5)).unwrap();
        assert_eq!((g.order(), g.degree()), (60, 6));
        assert_eq!(make(&GroupFamilySpec::Psl2(7)).unwrap().order(), 168);
        assert_eq!(make(&GroupFamilySpec::Sym(1)).unwrap().order(), 1);
        assert_eq!(make(&GroupFamilySpec::Pgammal2(32)).unwrap().order(), 163_680);
    }

    #[test]
    fn overgroups() {
        for (s, idx) in [
            (GroupFamilySpec::Alt(5), 2),
            (GroupFamilySpec::Psl2(8), 3),
            (GroupFamilySpec::Psl2(4), 2),
            (GroupFamilySpec::Psl2(7), 2),
            (GroupFamilySpec::Psl2(9), 4),
        ] {
            let g = make(&s).unwrap();
            let (_, a) = aut_overgroup(&s).unwrap();
            assert!(g.is_subgroup_of(&a));
            assert!(ops::is_normal(&a, &g));
            assert_eq!(a.order() / g.order(), idx, "{s}");
        }
        assert!(aut_overgroup(&GroupFamilySpec::Alt(6)).is_err());
    }

    #[test]
    fn simple_members_are_simple() {
        for s in [
            GroupFamilySpec::Alt(5),
            GroupFamilySpec::Alt(6),
            GroupFamilySpec::Psl2(7),
            GroupFamilySpec::Psl2(8),
            GroupFamilySpec::Psl2(11),
        ] {
            let g = make(&s).unwrap();
            for c in ops::conjugacy_classes(&g).unwrap().iter().skip(1) {
                let n = ops::normal_closure(&g, core::slice::from_ref(&c.representative)).unwrap();
                assert_eq!(n.order(), g.order(), "{s}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        for s in ["psl2(7)", "psl2:7", "PSL2 7"] {
            assert_eq!(s.parse::<GroupFamilySpec>().unwrap(), GroupFamilySpec::Psl2(7));
        }
        assert_eq!(GroupFamilySpec::Dihedral(8).to_string(), "dihedral(8)");
        assert!("foo(3)".parse::<GroupFamilySpec>().is_err());
        assert!(make(&GroupFamilySpec::Psl2(6)).is_err());
    }
}
