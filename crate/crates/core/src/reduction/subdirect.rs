use alloc::format;
use alloc::vec::Vec;

use crate::arith::{checked_pow, is_p_power, p_prime_part};
use crate::perm::{ops, WreathProduct};
use crate::series::{induced_aut, minimal_normal_subgroups, Section};
use crate::subgroups::subgroup_classes;
use crate::sylow::sylow_number;
use crate::{Error, Outcome, PermGroup, Result};

/// `H ≤ G` together with a normal `T = G_1 × … × G_k` of `G` and the
/// orders of the projections `H_i = π_i(H ∩ T)`.
#[derive(Clone, Debug)]
pub struct SubdirectWitness {
    pub group: PermGroup,
    pub factors: Vec<PermGroup>,
    pub product: PermGroup,
    pub subgroup: PermGroup,
    pub intersection: PermGroup,
    pub projection_orders: Vec<u64>,
}

impl SubdirectWitness {
    /// Computes `|π_i(H ∩ T)|` as `|(H ∩ T)M_i : M_i|` with `M_i` the product
    /// of the other factors.
    pub fn new(g: &PermGroup, factors: &[PermGroup], h: &PermGroup) -> Result<Self> {
        let mut product = PermGroup::trivial(g.degree());
        for f in factors {
            product = product.join(f)?;
        }
        let expected: u64 = factors.iter().map(|f| f.order()).product();
        if product.order() != expected {
            return Err(Error::InvalidParameter("factors do not form a direct product".into()));
        }
        let intersection = ops::intersection(h, &product)?;
        let mut projection_orders = Vec::new();
        for i in 0..factors.len() {
            let mut others = PermGroup::trivial(g.degree());
            for (j, f) in factors.iter().enumerate() {
                if j != i {
                    others = others.join(f)?;
                }
            }
            projection_orders.push(intersection.join(&others)?.order() / others.order());
        }
        Ok(SubdirectWitness {
            group: g.clone(),
            factors: factors.to_vec(),
            product,
            subgroup: h.clone(),
            intersection,
            projection_orders,
        })
    }

    /// Each projection is the whole factor or trivial.
    pub fn projections_full_or_trivial(&self) -> bool {
        self.projection_orders
            .iter()
            .zip(&self.factors)
            .all(|(&o, f)| o == 1 || o == f.order())
    }

    /// `H ∩ T = H_1 × … × H_k`.
    pub fn is_direct(&self) -> bool {
        self.projection_orders.iter().product::<u64>() == self.intersection.order()
    }

    pub fn supplements(&self) -> Result<bool> {
        Ok(self.subgroup.join(&self.product)?.order() == self.group.order())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdirectRecord {
    pub prime: u64,
    pub nu_h: u64,
    pub nu_g: u64,
    /// `ν_p(Aut_H(S_1)) · |H_1|_{p'}^{k-1}`, when the product formula applies.
    pub step6_formula: Option<u64>,
    pub outcome: Outcome,
}

fn is_nonabelian_simple(s: &PermGroup) -> Result<bool> {
    if s.is_abelian() {
        return Ok(false);
    }
    let m = minimal_normal_subgroups(s)?;
    Ok(m.len() == 1 && m[0].order() == s.order())
}

/// Asserts `ν_p(H) | ν_p(G)`; when `HT = G`, `H ∩ T` is the direct product
/// of its projections and the factors are nonabelian simple, also asserts
/// `ν_p(H) = ν_p(Aut_H(S_1)) · |H_1|_{p'}^{k-1}`.
pub fn subdirect_check(w: &SubdirectWitness, p: u64) -> Result<SubdirectRecord> {
    let g = &w.group;
    let clauses = [
        (ops::is_normal(g, &w.product), "T is normal in G"),
        (is_p_power(g.order() / w.product.order(), p), "G/T is a p-group"),
        (permutes_factors(g, &w.factors), "G permutes the factors"),
        (w.projections_full_or_trivial(), "every projection is full or trivial"),
    ];
    if let Some((_, c)) = clauses.iter().find(|(ok, _)| !ok) {
        return Ok(SubdirectRecord {
            prime: p,
            nu_h: 0,
            nu_g: 0,
            step6_formula: None,
            outcome: Outcome::inapplicable(*c),
        });
    }
    let nu_h = sylow_number(&w.subgroup, p)?;
    let nu_g = sylow_number(g, p)?;
    let mut problems = Vec::new();
    if nu_g % nu_h != 0 {
        problems.push(format!("nu_p(H) = {nu_h} does not divide nu_p(G) = {nu_g}"));
    }
    let mut step6_formula = None;
    if w.supplements()? && w.is_direct() && is_nonabelian_simple(&w.factors[0])? {
        let aut = induced_aut(&w.subgroup, &Section::new(&w.factors[0], &PermGroup::trivial(g.degree()))?)?;
        let h1 = p_prime_part(w.projection_orders[0], p);
        let k = w.factors.len() as u32;
        let value = checked_pow(h1, k - 1)?
            .checked_mul(sylow_number(&aut.image, p)?)
            .ok_or(Error::OrderOverflow)?;
        if value != nu_h {
            problems.push(format!("nu_p(H) = {nu_h} but the product formula gives {value}"));
        }
        step6_formula = Some(value);
    }
    Ok(SubdirectRecord {
        prime: p,
        nu_h,
        nu_g,
        step6_formula,
        outcome: Outcome::from_check(problems.is_empty(), || problems.join("; ")),
    })
}

fn permutes_factors(g: &PermGroup, factors: &[PermGroup]) -> bool {
    g.generators().iter().all(|x| {
        factors.iter().all(|f| {
            let moved: Vec<_> = f.generators().iter().map(|s| s.conjugate_by(x)).collect();
            factors.iter().any(|e| moved.iter().all(|s| e.contains(s)))
        })
    })
}

/// For `G ≤ L ≀ K` containing the base socle `T`: `|H_1| = … = |H_k|` and
/// `H` normalizes `H_1 × … × H_k`, where `H_i = π_i(H ∩ T)`. Requires
/// `HT = G`.
pub fn step5_check(w: &WreathProduct, g: &PermGroup, t: &PermGroup, h: &PermGroup) -> Result<Outcome> {
    if h.join(t)?.order() != g.order() {
        return Ok(Outcome::inapplicable("HT is a proper subgroup of G"));
    }
    let ht = ops::intersection(h, t)?;
    let k = w.num_coordinates();
    let mut product = PermGroup::trivial(g.degree());
    let mut orders = Vec::new();
    for i in 0..k {
        let proj = PermGroup::new(
            w.base_factor().degree(),
            ht.generators().iter().map(|x| w.pi(i, x)).collect(),
        )?;
        orders.push(proj.order());
        product = product.join(&w.coordinate_subgroup(i, &proj)?)?;
    }
    let equal = orders.windows(2).all(|o| o[0] == o[1]);
    let normalizes = product.is_normalized_by(h);
    Ok(Outcome::from_check(equal && normalizes, || {
        format!("projection orders {orders:?}, normalized: {normalizes}")
    }))
}

/// For `T ⊴ G` with `G/T` a `p`-group: `ν_p(H) | ν_p(G)` for every
/// `T ≤ H ≤ G`, enumerated up to conjugacy through the subgroups of `G/T`.
pub fn step4_check(g: &PermGroup, t: &PermGroup, p: u64) -> Result<Outcome> {
    if !ops::is_normal(g, t) {
        return Err(Error::NotNormal);
    }
    if !is_p_power(g.order() / t.order(), p) {
        return Ok(Outcome::inapplicable("G/T is not a p-group"));
    }
    let nu_g = sylow_number(g, p)?;
    let (quotient, hom) = ops::quotient_group(g, t)?;
    let mut bad = Vec::new();
    for c in &subgroup_classes(&quotient)?.classes {
        let h = hom.preimage(&c.representative)?;
        let nu_h = sylow_number(&h, p)?;
        if nu_g % nu_h != 0 {
            bad.push(format!("|H| = {}: nu_p(H) = {nu_h}", h.order()));
        }
    }
    Ok(Outcome::from_check(bad.is_empty(), || {
        format!("nu_p(G) = {nu_g} not divisible: {}", bad.join(", "))
    }))
}
