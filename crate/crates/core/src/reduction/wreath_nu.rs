use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{checked_pow, is_p_power, is_prime, p_prime_part};
use crate::perm::{ops, WreathProduct};
use crate::sylow::{sylow_number, sylow_orbit, sylow_subgroup};
use crate::{Error, Outcome, PermGroup, Permutation, Result};

/// Largest number of Sylow conjugates searched for one satisfying the
/// coordinate condition on `Q`.
pub const SYLOW_SEARCH_CAP: usize = 10_000;

/// Both sides of `ν_p(G) = |S|_{p'}^{k-1} · ν_p(L)` for `G ≤ L ≀ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathNuRecord {
    pub prime: u64,
    pub k: usize,
    /// The hypotheses in order, each with its truth value.
    pub clauses: Vec<(String, bool)>,
    /// `ν_p(G)` by conjugation-orbit count.
    pub nu_g: Option<u64>,
    /// `|S|_{p'}^{k-1} · ν_p(L)`.
    pub predicted: Option<u64>,
}

impl WreathNuRecord {
    pub fn outcome(&self) -> Outcome {
        if let Some((c, _)) = self.clauses.iter().find(|(_, ok)| !ok) {
            return Outcome::inapplicable(c.clone());
        }
        Outcome::from_check(self.nu_g == self.predicted, || {
            alloc::format!(
                "nu_p(G) = {:?} but the formula gives {:?}",
                self.nu_g, self.predicted
            )
        })
    }
}

fn pis_in(w: &WreathProduct, q: &Permutation, parts: &[PermGroup]) -> bool {
    (0..parts.len()).all(|i| parts[i].contains(&w.pi(i, q))) && w.top_group().contains(&w.rho(q))
}

/// Checks hypotheses (a)–(d) for `G ≤ L ≀ K` with `S ⊴ L` and then both
/// sides of the formula. The first failed hypothesis makes the record
/// inapplicable.
pub fn numpwreath_check(w: &WreathProduct, s: &PermGroup, g: &PermGroup, p: u64) -> Result<WreathNuRecord> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let l = w.base_factor();
    let k_grp = w.top_group();
    let k = w.num_coordinates();
    let mut rec = WreathNuRecord {
        prime: p,
        k,
        clauses: Vec::new(),
        nu_g: None,
        predicted: None,
    };
    let push = |rec: &mut WreathNuRecord, name: &str, ok: bool| -> bool {
        rec.clauses.push((String::from(name), ok));
        ok
    };
    if !push(&mut rec, "S is normal in L", s.is_subgroup_of(l) && ops::is_normal(l, s))
        || !push(&mut rec, "L/S is a p-group", is_p_power(l.order() / s.order(), p))
        || !push(&mut rec, "K is a p-group", is_p_power(k_grp.order(), p))
        || !push(&mut rec, "K is transitive", k_grp.is_transitive())
        || !push(&mut rec, "G lies in L wr K", g.is_subgroup_of(w.group()))
    {
        return Ok(rec);
    }
    let bold_s = w.power_of(s)?;
    if !push(&mut rec, "(a) S^k is contained in G", bold_s.is_subgroup_of(g)) {
        return Ok(rec);
    }
    let gl = g.join(&w.base_group()?)?;
    if !push(&mut rec, "(b) G L^k = L wr K", gl.order() == w.group().order()) {
        return Ok(rec);
    }
    let mut c_ok = true;
    for i in 0..k {
        let s_i = w.coordinate_subgroup(i, s)?;
        let n = ops::normalizer(g, &s_i)?;
        let proj = PermGroup::new(l.degree(), n.generators().iter().map(|x| w.pi(i, x)).collect())?;
        c_ok &= proj.same_group(l);
    }
    if !push(&mut rec, "(c) pi_i(N_G(S_i)) = L", c_ok) {
        return Ok(rec);
    }
    // (d) for some Sylow Q: search the conjugacy class of one Sylow subgroup.
    let q0 = sylow_subgroup(g, p)?;
    let conjugators = sylow_orbit(g, &q0)?;
    let mut d_ok = false;
    for t in conjugators.iter().take(SYLOW_SEARCH_CAP) {
        let q = q0.conjugate(t)?;
        let parts = (0..k)
            .map(|i| {
                let n = ops::normalizer(&q, &w.coordinate_subgroup(i, s)?)?;
                PermGroup::new(l.degree(), n.generators().iter().map(|x| w.pi(i, x)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        if q.generators().iter().all(|x| pis_in(w, x, &parts)) {
            d_ok = true;
            break;
        }
    }
    if !push(&mut rec, "(d) some Sylow Q lies in (P_1 x ... x P_k) K", d_ok) {
        return Ok(rec);
    }
    rec.nu_g = Some(conjugators.len() as u64);
    let s_pp = p_prime_part(s.order(), p);
    let nu_l = sylow_number(l, p)?;
    rec.predicted = Some(
        checked_pow(s_pp, (k - 1) as u32)?
            .checked_mul(nu_l)
            .ok_or(Error::OrderOverflow)?,
    );
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make, GroupFamilySpec};

    fn fam(s: GroupFamilySpec) -> PermGroup {
        make(&s).unwrap()
    }

    #[test]
    fn a5_wreath_c2() {
        let a5 = fam(GroupFamilySpec::Alt(5));
        let w = WreathProduct::new(&a5, &fam(GroupFamilySpec::Cyclic(2))).unwrap();
        let r = numpwreath_check(&w, &a5, w.group(), 2).unwrap();
        assert_eq!(r.outcome(), Outcome::Holds);
        assert_eq!((r.nu_g, r.predicted), (Some(75), Some(75)));
        let r = numpwreath_check(&w, &a5, w.group(), 3).unwrap();
        assert!(matches!(r.outcome(), Outcome::Inapplicable { .. }));
    }

    #[test]
    fn one_coordinate() {
        let s5 = fam(GroupFamilySpec::Sym(5));
        let a5 = fam(GroupFamilySpec::Alt(5));
        let w = WreathProduct::new(&s5, &PermGroup::trivial(1)).unwrap();
        let r = numpwreath_check(&w, &a5, w.group(), 2).unwrap();
        assert_eq!(r.outcome(), Outcome::Holds);
        assert_eq!(r.nu_g, Some(15));
    }
}
