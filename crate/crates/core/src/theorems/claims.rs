//! The claim registry: one exhaustive checker per statement.
//!
//! Claims at [`Level::Support`] are the forms the structure actually
//! satisfies (quotients and cosets governed by supports). Claims at
//! [`Level::Literal`] are checked exactly as stated, including set-level
//! equalities that need `H = F·D′`, and are expected to fail on some inputs.

use serde::{Deserialize, Serialize};

use crate::elemset::{Elem, ElemSet};
use crate::ensure;
use crate::group_kernel::{
    check_group_hom, check_normal, find_isomorphism, subgroup_table, subgroups_of, SubgroupSet,
    DEFAULT_ORDER_CAP,
};
use crate::morphisms::{check_inverse_hom, check_mm3_properties, hom_anatomy, PartialHom};
use crate::partial_core::{check_unique_factorization, Freeness, PartialGroup};
use crate::substructures::{
    coset, coset_related, coset_relation_classes, congruence_mod, conjugate_set_with, intersect_subgroups,
    is_normal_partial, is_partial_subgroup, normal_test, partial_quotient, product_subgroups, totality_flags,
    PartialSubgroup, Side,
};
use crate::witness::{Check, Counterexample};

use super::iso::{first_iso_check, second_iso_check, third_iso_check, InducedMap, KernelChoice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Support,
    Literal,
}

/// What a claim quantifies over inside one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Instance,
    /// Every candidate subset of the carrier.
    Subsets,
    PartialSubgroups,
    NormalSubgroups,
    /// Every partial subgroup, when the instance is abelian.
    AbelianSubgroups,
    /// Every ordered pair of partial subgroups.
    SubgroupPairs,
    /// `(H, K)` with `K` normal.
    NormalPairs,
    /// `(K, N)` both normal with `N ⊆ K`.
    NormalChains,
    Homs,
    /// Homs that are bijective with `f⁻¹(E₂) ⊆ E₁` and `f⁻¹(D₂) ⊆ D₁`.
    InvertibleHoms,
}

#[derive(Clone, Copy)]
pub enum Checker {
    Instance(fn(&PartialGroup) -> Check),
    Subset(fn(&PartialGroup, ElemSet) -> Check),
    Subgroup(fn(&PartialSubgroup<'_>) -> Check),
    Pair(fn(&PartialSubgroup<'_>, &PartialSubgroup<'_>) -> Check),
    Hom(fn(&PartialHom<'_>) -> Check),
}

pub struct ClaimId {
    pub id: &'static str,
    pub statement: &'static str,
    /// The statement as a formula.
    pub anchor: &'static str,
    pub level: Level,
    pub domain: Domain,
    pub checker: Checker,
}

impl std::fmt::Debug for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimId").field("id", &self.id).field("level", &self.level).finish()
    }
}

impl PartialEq for ClaimId {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

macro_rules! claim {
    ($id:literal, $level:ident, $domain:ident, $kind:ident($f:path), $statement:literal, $anchor:literal) => {
        ClaimId {
            id: $id,
            statement: $statement,
            anchor: $anchor,
            level: Level::$level,
            domain: Domain::$domain,
            checker: Checker::$kind($f),
        }
    };
}

pub static REGISTRY: &[ClaimId] = &[
    claim!("P2.1-unique-factorization", Support, Instance, Instance(unique_factorization),
        "each carrier element has exactly one factorization over E x D", "a = xd, x ∈ E, d ∈ D unique"),
    claim!("P2.1-free-relation", Support, Instance, Instance(free_relation),
        "sharing a support translate into D is an equivalence with classes xD", "a ∼ b ⟺ ∃x ∈ E: x⁻¹a, x⁻¹b ∈ D"),
    claim!("P3.2-closure", Support, Instance, Instance(closure),
        "every partial product lies in the support", "a.b ∈ E"),
    claim!("P3.2-dot-identity", Support, Instance, Instance(dot_identity),
        "multiplying by e extracts the support part", "a.e = x, a = (a.e)d"),
    claim!("P3.2-defect-product", Support, Instance, Instance(defect_product),
        "the product of two defect elements is e", "d.d′ = e"),
    claim!("P3.2-assoc", Support, Instance, Instance(assoc),
        "the partial law is associative", "(a.b).c = a.(b.c)"),
    claim!("P3.2-sandwich", Support, Instance, Instance(sandwich),
        "defect factors vanish around a support element", "x.d.d′ = d.x.d′ = d.d′.x = x"),
    claim!("P3.2-support-fixed", Support, Instance, Instance(support_fixed),
        "a is fixed by .e exactly on the support", "a.e = a ⟺ a ∈ E"),
    claim!("P3.2-case-table", Support, Instance, Instance(case_table),
        "the branchwise description of the law agrees with x_a x_b", "a.b ∈ {ab, a, b, e, xy} by case"),
    claim!("P3.3-inverse-criterion", Support, Instance, Instance(inverse_criterion),
        "a product is e exactly when the support parts are inverse", "a.b = e ⟺ y = x⁻¹"),
    claim!("P3.3-inv-set", Support, Instance, Instance(inv_set),
        "the partial inverses of xd are the x⁻¹d′", "Inv(a) = {x⁻¹d′ : d′ ∈ D}"),
    claim!("P3.3-power", Support, Instance, Instance(power),
        "iterated partial products are powers of the support part", "a.….a = xⁿ"),
    claim!("P3.5-melted", Support, Instance, Instance(melted),
        "subgroup pairs with a free second factor give melted partial groups", "K.L partial with support K, {e}.K with defect K"),
    claim!("P3.6-free-quotient", Support, Instance, Instance(free_quotient),
        "the classes of the free relation form a group isomorphic to E", "(E.D)/∼ ≅ E"),
    claim!("R4.2-plain-subgroups", Support, Instance, Instance(plain_subgroups),
        "subgroups of the support are partial subgroups with defect {e}", "S ≤ E ⟹ S partial subgroup, S ∩ D = {e}"),
    claim!("P4.3-support-subgroup", Support, PartialSubgroups, Subgroup(support_subgroup),
        "the support of a partial subgroup is a subgroup of E", "F = E ∩ H ≤ E, D′ ⊆ D"),
    claim!("P4.3-decomposition", Literal, PartialSubgroups, Subgroup(decomposition),
        "a partial subgroup is the product of its support and defect", "H = F.D′"),
    claim!("C4.4-support-defect", Support, PartialSubgroups, Subgroup(support_defect),
        "support and defect of H are its traces on E and D", "F = E ∩ H, D′ = Inv(e) ∩ H = D ∩ H"),
    claim!("C4.5-restricted-partial-group", Literal, PartialSubgroups, Subgroup(restricted_partial_group),
        "a partial subgroup is a partial group with support F and defect D′", "H = F.D′ as partial group"),
    claim!("P4.6-total-defect", Literal, PartialSubgroups, Subgroup(total_defect),
        "full defect is equivalent to containing all partial inverses", "D′ = D ⟺ ∀h: Inv(h) ⊆ H"),
    claim!("P4.6-total-support", Support, PartialSubgroups, Subgroup(total_support),
        "full support is equivalent to every x having a translate in H", "F = E ⟺ ∀x ∈ E ∃d ∈ D′: xd ∈ H"),
    claim!("S5-right-relation", Support, PartialSubgroups, Subgroup(right_relation),
        "right coset relation is an equivalence matching Ha", "a ∼ᵣ b ⟺ b.a* ∈ F ⟺ b.e ∈ Ha"),
    claim!("S5-left-relation", Support, PartialSubgroups, Subgroup(left_relation),
        "left coset relation is an equivalence matching aH", "a ∼ₗ b ⟺ a*.b ∈ F ⟺ b.e ∈ aH"),
    claim!("S5-support-partition", Support, PartialSubgroups, Subgroup(support_partition),
        "cosets partition E and the carrier classes are their D-translates", "E = ⊔ Fx, [a] = (F x_a)D"),
    claim!("S5-abelian-cosets", Support, AbelianSubgroups, Subgroup(abelian_cosets),
        "left and right cosets agree in an abelian partial group", "G abelian ⟹ aH = Ha"),
    claim!("P6.1-normality-equiv", Support, PartialSubgroups, Subgroup(normality_equiv),
        "the four normality criteria agree", "Ha = aH ⟺ a*Ha = F ⟺ a*.h.a ∈ F ⟺ x⁻¹Fx = F"),
    claim!("P6.2-abelian-normal", Support, AbelianSubgroups, Subgroup(abelian_normal),
        "in an abelian partial group every partial subgroup is normal", "G abelian ⟹ H normal"),
    claim!("P6.3-normal-test", Support, Subsets, Subset(normal_test_sound),
        "a subset passing the two-clause test is a normal partial subgroup", "h.k* ∈ F ∧ a*.h.a ∈ F ⟹ H normal"),
    claim!("S6-conjugate-formula", Support, PartialSubgroups, Subgroup(conjugate_formula),
        "conjugating H by a gives the conjugate of F by the support part", "a*Ha = x⁻¹Fx"),
    claim!("S7-congruence-equiv", Support, PartialSubgroups, Subgroup(congruence_equiv),
        "congruence mod H has six equivalent forms and its classes are the left cosets", "a ∼_H b ⟺ a*.b ∈ F ⟺ … ⟺ bH = aH"),
    claim!("P7.4-quotient-group", Support, NormalSubgroups, Subgroup(quotient_group),
        "coset multiplication mod a normal partial subgroup is a well defined group law", "(Na)(Nb) = N(a.b), π hom with ker π|E = F"),
    claim!("P7.4-kernel-literal", Literal, NormalSubgroups, Subgroup(quotient_kernel_literal),
        "the projection to the quotient has kernel exactly N", "π⁻¹(N) = N"),
    claim!("L8.2-hom-basics", Support, Homs, Hom(hom_basics),
        "homs fix e, carry partial inverses to partial inverses and respect a.b*", "f(e) = e, f(a*) ∈ Inv(f(a)), f(a.b*).e = f(a).f(b)*"),
    claim!("L8.3-mm3", Support, Homs, Hom(mm3),
        "restriction to E is a group hom and images keep their support translate", "f|E hom, f(e) = e, f(a*) ∈ Inv f(a), f(xd) = f(x)d″"),
    claim!("P8.4-anatomy", Support, Homs, Hom(anatomy),
        "default kernel is normal, image is a partial subgroup, kernel inside default kernel", "Ker ⊆ K̃ ⊴ G₁, Im ≤ G₂"),
    claim!("P8.4-support-identities", Support, Homs, Hom(support_identities),
        "default kernel and image meet the supports in the kernel and image of f|E", "K̃ ∩ E₁ = ker f|E₁, Im ∩ E₂ = f(E₁)"),
    claim!("L9.1-inverse-hom", Support, InvertibleHoms, Hom(inverse_hom),
        "the inverse of a bijective hom with preimage conditions is a hom", "f⁻¹(E₂) ⊆ E₁, f⁻¹(D₂) ⊆ D₁ ⟹ f⁻¹ hom"),
    claim!("PLad-i-product", Support, SubgroupPairs, Pair(lad_product),
        "the product of two partial subgroups is the product of their supports", "H.K = FF′"),
    claim!("PLad-ii-coset-formula", Support, PartialSubgroups, Subgroup(lad_cosets),
        "cosets of H are cosets of F through the support part", "aH = xF, Ha = Fx"),
    claim!("PLad-iii-normal-support", Support, PartialSubgroups, Subgroup(lad_normal_support),
        "H is normal exactly when F is normal in E", "H ⊴ G ⟺ F ⊴ E"),
    claim!("PLad-iv-quotient", Support, NormalSubgroups, Subgroup(lad_quotient),
        "the quotient by a normal partial subgroup is E/F", "G/H = E/F"),
    claim!("PLad-v-intersection", Literal, SubgroupPairs, Pair(lad_intersection),
        "intersections decompose componentwise", "H ∩ K = (F ∩ F′).(D′ ∩ D″)"),
    claim!("PLad-vi-absorb", Support, PartialSubgroups, Subgroup(lad_absorb),
        "elements of H absorb into H on both sides", "a ∈ H ⟹ aH = e.H = Ha"),
    claim!("T1-first-iso", Support, Homs, Hom(first_iso),
        "G₁ modulo the default kernel is isomorphic to the image through aK ↦ f(a).e", "G₁/K̃ ≅ f(E₁), aK̃ ↦ f(a).e"),
    claim!("T1-first-iso-ker", Support, Homs, Hom(first_iso_ker),
        "the same isomorphism with the ordinary kernel", "G₁/Ker ≅ f(E₁), a Ker ↦ f(a).e"),
    claim!("T1-first-iso-raw", Literal, Homs, Hom(first_iso_raw),
        "aK ↦ f(a) is a well defined isomorphism onto the image", "G₁/K̃ ≅ Im(f), aK̃ ↦ f(a)"),
    claim!("T2-second-iso", Support, NormalPairs, Pair(second_iso),
        "HK/K is isomorphic to H/(H ∩ K)", "FF′/F′ ≅ F/(F ∩ F′)"),
    claim!("T2-default-kernel", Support, NormalPairs, Pair(second_default_kernel),
        "for h ↦ hK the default kernel equals the kernel", "K̃(φ) = Ker(φ), D₂ = {e}"),
    claim!("T2-kernel-literal", Literal, NormalPairs, Pair(second_kernel_literal),
        "the kernel of h ↦ hK is H ∩ K", "Ker(h ↦ hK) = H ∩ K"),
    claim!("T3-third-iso", Support, NormalChains, Pair(third_iso),
        "(G/N)/(K/N) is isomorphic to G/K", "(E/F′)/(F/F′) ≅ E/F"),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown claim id: {0}")]
pub struct UnknownClaim(pub String);

pub fn claim_by_id(id: &str) -> Result<&'static ClaimId, UnknownClaim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| UnknownClaim(id.to_string()))
}

/// Resolves a list of ids; `"all"` selects the whole registry. Order follows the registry.
pub fn resolve_claims<S: AsRef<str>>(ids: &[S]) -> Result<Vec<&'static ClaimId>, UnknownClaim> {
    if ids.iter().any(|s| s.as_ref() == "all") {
        return Ok(REGISTRY.iter().collect());
    }
    let mut picked = Vec::new();
    for id in ids {
        picked.push(claim_by_id(id.as_ref())?);
    }
    let mut out: Vec<&'static ClaimId> = REGISTRY.iter().filter(|c| picked.contains(c)).collect();
    out.dedup();
    Ok(out)
}

// --- brute-force helpers, independent of the stored factorization maps ---

fn brute_factor(g: &PartialGroup, a: Elem) -> (Elem, Elem) {
    let gamma = g.parent();
    g.support()
        .iter()
        .find_map(|x| g.defect().iter().find(|&d| gamma.mul(x, d) == a).map(|d| (x, d)))
        .expect("carrier elements factor")
}

fn each_pair(s: ElemSet, mut f: impl FnMut(Elem, Elem) -> Check) -> Check {
    for a in s {
        for b in s {
            f(a, b)?;
        }
    }
    Ok(())
}

// --- instance claims ---

fn unique_factorization(g: &PartialGroup) -> Check {
    check_unique_factorization(g)
}

fn free_relation(g: &PartialGroup) -> Check {
    let gamma = g.parent();
    let carrier = g.carrier();
    let related = |a: Elem, b: Elem| {
        g.support().iter().any(|x| {
            let xi = gamma.inv(x);
            g.defect().contains(gamma.mul(xi, a)) && g.defect().contains(gamma.mul(xi, b))
        })
    };
    let classes = g.free_classes();
    for a in carrier {
        ensure!(related(a, a), [a], "not reflexive");
        let class: ElemSet = carrier.iter().filter(|&b| related(a, b)).collect();
        for b in class {
            ensure!(related(b, a), [a, b], "not symmetric");
            for c in carrier {
                ensure!(!related(b, c) || related(a, c), [a, b, c], "not transitive");
            }
        }
        let stored = classes.class_of(a).map(|i| classes.blocks()[i]);
        ensure!(stored == Some(class), [a], "class differs from x_a D");
    }
    ensure!(classes.blocks().len() == g.support().len(), [], "number of classes differs from |E|");
    Ok(())
}

fn closure(g: &PartialGroup) -> Check {
    each_pair(g.carrier(), |a, b| {
        let p = g.partial_mul(a, b).map_err(|e| Counterexample::new(e.to_string(), [a, b]))?;
        ensure!(g.support().contains(p), [a, b], "product outside E");
        Ok(())
    })
}

fn dot_identity(g: &PartialGroup) -> Check {
    let e = g.identity();
    for a in g.carrier() {
        let (x, d) = brute_factor(g, a);
        ensure!(g.dot(a, e) == x, [a], "a.e differs from x");
        ensure!(g.dot(e, a) == x, [a], "e.a differs from x");
        ensure!(g.parent().mul(g.dot(a, e), d) == a, [a], "a differs from (a.e)d");
    }
    Ok(())
}

fn defect_product(g: &PartialGroup) -> Check {
    each_pair(g.defect(), |d, d2| {
        ensure!(g.dot(d, d2) == g.identity(), [d, d2], "d.d' is not e");
        Ok(())
    })
}

fn assoc(g: &PartialGroup) -> Check {
    let c = g.carrier();
    for a in c {
        for b in c {
            let ab = g.dot(a, b);
            for z in c {
                ensure!(g.dot(ab, z) == g.dot(a, g.dot(b, z)), [a, b, z], "not associative");
            }
        }
    }
    Ok(())
}

fn sandwich(g: &PartialGroup) -> Check {
    for x in g.support() {
        each_pair(g.defect(), |d, d2| {
            ensure!(g.dot(g.dot(x, d), d2) == x, [x, d, d2], "x.d.d' differs from x");
            ensure!(g.dot(g.dot(d, x), d2) == x, [x, d, d2], "d.x.d' differs from x");
            ensure!(g.dot(g.dot(d, d2), x) == x, [x, d, d2], "d.d'.x differs from x");
            Ok(())
        })?;
    }
    Ok(())
}

fn support_fixed(g: &PartialGroup) -> Check {
    for a in g.carrier() {
        ensure!(
            (g.dot(a, g.identity()) == a) == g.support().contains(a),
            [a],
            "a.e = a does not match membership in E"
        );
    }
    Ok(())
}

fn case_table(g: &PartialGroup) -> Check {
    each_pair(g.carrier(), |a, b| {
        ensure!(g.case_table_mul(a, b) == g.partial_mul(a, b), [a, b], "case table disagrees");
        Ok(())
    })
}

fn inverse_criterion(g: &PartialGroup) -> Check {
    let gamma = g.parent();
    each_pair(g.carrier(), |a, b| {
        let (x, _) = brute_factor(g, a);
        let (y, _) = brute_factor(g, b);
        ensure!(
            (g.dot(a, b) == g.identity()) == (y == gamma.inv(x)),
            [a, b],
            "a.b = e does not match y = x^-1"
        );
        Ok(())
    })
}

fn inv_set(g: &PartialGroup) -> Check {
    let gamma = g.parent();
    for a in g.carrier() {
        let stored = g.inv_set(a).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        let by_law: ElemSet = g.carrier().iter().filter(|&b| g.dot(a, b) == g.identity()).collect();
        let (x, _) = brute_factor(g, a);
        let formula: ElemSet = g.defect().iter().map(|d| gamma.mul(gamma.inv(x), d)).collect();
        ensure!(stored == by_law, [a], "Inv(a) differs from the solutions of a.b = e");
        ensure!(stored == formula, [a], "Inv(a) differs from x^-1 D");
    }
    Ok(())
}

fn power(g: &PartialGroup) -> Check {
    let gamma = g.parent();
    let top = 2 * gamma.order() as u64;
    for a in g.carrier() {
        let x = g.dot(a, g.identity());
        let mut iterated = a;
        for n in 1..=top {
            if n > 1 {
                iterated = g.dot(iterated, a);
                ensure!(iterated == gamma.pow(x, n), [a, n as Elem], "iterated product differs from x^n");
            }
            let p = g.partial_power(a, n).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
            ensure!(p == gamma.pow(x, n), [a, n as Elem], "partial power differs from x^n");
        }
    }
    Ok(())
}

fn melted(g: &PartialGroup) -> Check {
    let parent = g.parent_arc().clone();
    let e = g.support_subgroup();
    let total = PartialGroup::totally_melted(parent.clone(), e, DEFAULT_ORDER_CAP)
        .map_err(|err| Counterexample::new(format!("E is not totally melted: {err}"), []))?;
    ensure!(total.carrier() == e.set(), [], "totally melted carrier differs from E");
    ensure!(total.support().len() == 1, [], "totally melted support is not trivial");
    each_pair(total.carrier(), |a, b| {
        ensure!(total.dot(a, b) == g.identity(), [a, b], "totally melted product is not e");
        Ok(())
    })?;
    if let Ok(l) = SubgroupSet::new(&parent, g.defect()) {
        let m = PartialGroup::melted(parent, e, l, DEFAULT_ORDER_CAP)
            .map_err(|err| Counterexample::new(format!("E.D is not melted: {err}"), []))?;
        ensure!(m.carrier() == g.carrier(), [], "melted carrier differs");
        each_pair(g.carrier(), |a, b| {
            ensure!(m.dot(a, b) == g.dot(a, b), [a, b], "melted law differs");
            Ok(())
        })?;
    }
    Ok(())
}

fn free_quotient(g: &PartialGroup) -> Check {
    let q = g.quotient_by_free_relation()?;
    let gamma = g.parent();
    ensure!(q.table.order() == g.support().len(), [], "class group order differs from |E|");
    if let Err((x, y)) = check_group_hom(gamma, &q.table, &q.pi) {
        return Err(Counterexample::new("projection is not a homomorphism", [x, y]));
    }
    ensure!(q.pi.is_injective(), [], "projection is not injective");
    ensure!(q.pi.image_set() == q.table.elements(), [], "projection is not surjective");
    let (e_table, _) = subgroup_table(gamma, g.support());
    let iso = find_isomorphism(&q.table, &e_table, DEFAULT_ORDER_CAP)
        .map_err(|err| Counterexample::new(err.to_string(), []))?;
    ensure!(iso.is_some(), [], "class group is not isomorphic to E");
    Ok(())
}

fn plain_subgroups(g: &PartialGroup) -> Check {
    let subs = subgroups_of(g.parent(), g.support()).map_err(|e| Counterexample::new(e.to_string(), []))?;
    for s in subs {
        let set = s.set();
        if let Err(v) = is_partial_subgroup(g, set) {
            return Err(Counterexample::new(format!("subgroup of E is not a partial subgroup: {v:?}"), set.iter()));
        }
        ensure!(
            set.intersection(g.defect()) == ElemSet::singleton(g.identity()),
            set.iter(),
            "subgroup of E has nontrivial defect"
        );
    }
    Ok(())
}

// --- partial subgroup claims ---

fn support_subgroup(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let gamma = g.parent();
    ensure!(
        SubgroupSet::new(gamma, h.support()).is_ok(),
        h.support().iter(),
        "F is not a subgroup"
    );
    ensure!(h.support().is_subset(g.support()), [], "F is not inside E");
    ensure!(h.defect().is_subset(g.defect()), [], "D' is not inside D");
    let translates: ElemSet = g
        .support()
        .iter()
        .filter(|&x| g.defect().iter().any(|d| h.contains(gamma.mul(x, d))))
        .collect();
    ensure!(translates == h.support(), translates.iter(), "{{x : xd ∈ H}} differs from E ∩ H");
    Ok(())
}

fn decomposition(h: &PartialSubgroup<'_>) -> Check {
    let form = h.product_form();
    if let Some(a) = h.elements().symmetric_difference(form).min() {
        return Err(Counterexample::new("H differs from (E∩H)(D∩H)", [a]));
    }
    Ok(())
}

fn support_defect(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let gamma = g.parent();
    let f: ElemSet = g
        .support()
        .iter()
        .filter(|&x| g.defect().iter().any(|d| h.contains(gamma.mul(x, d))))
        .collect();
    ensure!(f == g.support().intersection(h.elements()), f.iter(), "F differs from E ∩ H");
    let inv_e = g.inv_set_of(g.identity()).intersection(h.elements());
    ensure!(inv_e == h.defect(), inv_e.iter(), "Inv(e) ∩ H differs from D ∩ H");
    Ok(())
}

fn restricted_partial_group(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let f = SubgroupSet::new(g.parent(), h.support())
        .map_err(|_| Counterexample::new("F is not a subgroup", h.support().iter()))?;
    let sub = PartialGroup::build(g.parent_arc().clone(), f, h.defect(), Freeness::Weak, DEFAULT_ORDER_CAP)
        .map_err(|e| Counterexample::new(format!("F.D' is not a partial group: {e}"), []))?;
    if let Some(a) = sub.carrier().symmetric_difference(h.elements()).min() {
        return Err(Counterexample::new("H is not the carrier of F.D'", [a]));
    }
    each_pair(h.elements(), |a, b| {
        ensure!(sub.dot(a, b) == g.dot(a, b), [a, b], "restricted law differs");
        Ok(())
    })
}

fn total_defect(h: &PartialSubgroup<'_>) -> Check {
    let flags = totality_flags(h);
    if flags.total_defect == flags.defect_criterion {
        return Ok(());
    }
    let g = h.ambient();
    let witness = h
        .elements()
        .iter()
        .find(|&a| !g.inv_set_of(a).is_subset(h.elements()))
        .or_else(|| g.defect().difference(h.elements()).min());
    Err(Counterexample::new(
        format!(
            "D' = D is {} but Inv(h) ⊆ H for all h is {}",
            flags.total_defect, flags.defect_criterion
        ),
        witness,
    ))
}

fn total_support(h: &PartialSubgroup<'_>) -> Check {
    let flags = totality_flags(h);
    ensure!(
        flags.total_support == flags.support_criterion,
        [],
        "F = E is {} but the translate criterion is {}",
        flags.total_support,
        flags.support_criterion
    );
    Ok(())
}

fn relation_matches_cosets(h: &PartialSubgroup<'_>, side: Side) -> Check {
    coset_relation_classes(h, side)?;
    let g = h.ambient();
    let f = h.support();
    for a in g.carrier() {
        let c = coset(h, a, side).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        let stars = g.inv_set_of(a);
        for b in g.carrier() {
            let related = coset_related(h, a, b, side);
            ensure!(related == c.contains(g.support_part(b)), [a, b], "relation differs from coset membership of b.e");
            for s in stars {
                let p = match side {
                    Side::Right => g.dot(b, s),
                    Side::Left => g.dot(s, b),
                };
                ensure!(f.contains(p) == related, [a, b, s], "relation depends on the choice of a*");
            }
        }
    }
    Ok(())
}

fn right_relation(h: &PartialSubgroup<'_>) -> Check {
    relation_matches_cosets(h, Side::Right)
}

fn left_relation(h: &PartialSubgroup<'_>) -> Check {
    relation_matches_cosets(h, Side::Left)
}

fn support_partition(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    for side in [Side::Right, Side::Left] {
        let fam = coset_relation_classes(h, side)?;
        for class in &fam.carrier_classes {
            let a = class.min().expect("classes are nonempty");
            let block = coset(h, a, side).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
            ensure!(fam.support_blocks.contains(&block), [a], "class coset is not a block");
            let translate: ElemSet = g.carrier().iter().filter(|&b| block.contains(g.support_part(b))).collect();
            ensure!(translate == *class, [a], "carrier class differs from its block times D");
        }
        ensure!(
            fam.carrier_classes.len() == fam.support_blocks.len(),
            [],
            "classes and blocks differ in number"
        );
    }
    Ok(())
}

fn abelian_cosets(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    for a in g.carrier() {
        let l = coset(h, a, Side::Left).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        let r = coset(h, a, Side::Right).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        ensure!(l == r, [a], "aH differs from Ha");
    }
    Ok(())
}

fn normality_equiv(h: &PartialSubgroup<'_>) -> Check {
    let r = is_normal_partial(h);
    if r.criteria_agree() {
        return Ok(());
    }
    let w: Vec<Elem> = [
        r.cosets_agree.err(),
        r.conjugate_is_support.err(),
        r.conjugates_in_support.err().map(|p| p.0),
        r.support_normal.err(),
    ]
    .into_iter()
    .flatten()
    .collect();
    Err(Counterexample::new(format!("criteria disagree: {:?}", r.verdicts()), w))
}

fn abelian_normal(h: &PartialSubgroup<'_>) -> Check {
    match is_normal_partial(h).cosets_agree {
        Ok(()) => Ok(()),
        Err(a) => Err(Counterexample::new("partial subgroup of an abelian partial group is not normal", [a])),
    }
}

fn normal_test_sound(g: &PartialGroup, h: ElemSet) -> Check {
    if normal_test(g, h).is_err() {
        return Ok(());
    }
    if let Err(v) = is_partial_subgroup(g, h) {
        return Err(Counterexample::new(format!("passes the test but is not a partial subgroup: {v:?}"), h.iter()));
    }
    let sub = PartialSubgroup::new(g, h).expect("checked above");
    match is_normal_partial(&sub).cosets_agree {
        Ok(()) => Ok(()),
        Err(a) => Err(Counterexample::new("passes the test but is not normal", [a])),
    }
}

fn conjugate_formula(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    for a in g.carrier() {
        let expected = g.parent().conjugate_set(h.support(), g.support_part(a));
        for s in g.inv_set_of(a) {
            ensure!(conjugate_set_with(h, a, s) == expected, [a, s], "a*Ha differs from x^-1 F x");
        }
    }
    Ok(())
}

fn congruence_equiv(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let f = h.support();
    let part = congruence_mod(h)?;
    let left = |a: Elem| coset(h, a, Side::Left).expect("carrier element");
    for a in g.carrier() {
        let a_h = left(a);
        for b in g.carrier() {
            let b_h = left(b);
            let be = g.support_part(b);
            let forms = [
                h.elements().iter().any(|k| g.dot(b, k) == g.support_part(a)),
                g.inv_set_of(a).iter().all(|s| f.contains(g.dot(s, b))),
                h.elements().iter().any(|k| g.dot(a, k) == be),
                a_h.contains(be),
                b_h.is_subset(a_h),
                b_h == a_h,
            ];
            ensure!(forms.iter().all(|&v| v == forms[0]), [a, b], "congruence forms disagree: {forms:?}");
            ensure!(a_h == b_h || a_h.is_disjoint(b_h), [a, b], "left cosets overlap without being equal");
            ensure!(
                (part.class_of(a) == part.class_of(b)) == forms[0],
                [a, b],
                "congruence classes differ from the relation"
            );
        }
    }
    Ok(())
}

fn quotient_group(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let gamma = g.parent();
    let q = partial_quotient(h).map_err(|e| Counterexample::new(e.to_string(), []))?;
    q.check_well_defined()?;
    let pi = q.group.projection_map();
    if let Err((x, y)) = check_group_hom(gamma, q.group.table(), &pi) {
        return Err(Counterexample::new("projection is not a homomorphism on E", [x, y]));
    }
    let ker = pi.kernel(q.group.table());
    ensure!(ker == h.support(), ker.iter(), "kernel of the projection on E differs from F");
    for a in g.carrier() {
        ensure!(q.project(a) == q.project(g.dot(a, g.identity())), [a], "projection does not factor through a.e");
    }
    ensure!(
        h.elements().is_subset(q.carrier_kernel()),
        q.carrier_kernel().iter(),
        "N is not inside the preimage of the identity class"
    );
    Ok(())
}

fn quotient_kernel_literal(h: &PartialSubgroup<'_>) -> Check {
    let q = partial_quotient(h).map_err(|e| Counterexample::new(e.to_string(), []))?;
    let kernel = q.carrier_kernel();
    if let Some(a) = kernel.symmetric_difference(h.elements()).min() {
        return Err(Counterexample::new("preimage of the identity class differs from N", [a]));
    }
    Ok(())
}

fn lad_cosets(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let gamma = g.parent();
    for a in g.carrier() {
        let x = g.support_part(a);
        let l = coset(h, a, Side::Left).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        let r = coset(h, a, Side::Right).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        ensure!(l == gamma.left_coset(x, h.support()), [a], "aH differs from xF");
        ensure!(r == gamma.right_coset(h.support(), x), [a], "Ha differs from Fx");
    }
    Ok(())
}

fn lad_normal_support(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let normal = is_normal_partial(h).is_normal();
    let support_normal = check_normal(g.parent(), g.support(), h.support());
    ensure!(
        normal == support_normal.is_ok(),
        support_normal.err(),
        "normality of H ({normal}) differs from normality of F in E"
    );
    Ok(())
}

fn lad_quotient(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let q = partial_quotient(h).map_err(|e| Counterexample::new(e.to_string(), []))?;
    let part = congruence_mod(h)?;
    ensure!(part.classes.len() == q.group.order(), [], "class count differs from |E/F|");
    let mut used = vec![false; q.group.order()];
    for class in &part.classes {
        let xs: ElemSet = class.iter().map(|a| g.support_part(a)).collect();
        let i = q.group.coset_index(xs);
        let a = class.min().expect("classes are nonempty");
        ensure!(i.is_some(), [a], "support parts of a class are not a coset of F");
        let i = i.expect("checked");
        ensure!(!used[i], [a], "two classes share a coset");
        used[i] = true;
        let l = coset(h, a, Side::Left).map_err(|e| Counterexample::new(e.to_string(), [a]))?;
        ensure!(q.group.cosets()[i] == l, [a], "class coset differs from aH");
    }
    Ok(())
}

fn lad_absorb(h: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let e_h = coset(h, g.identity(), Side::Left).expect("identity is in the carrier");
    for a in h.elements() {
        let l = coset(h, a, Side::Left).expect("H lies in the carrier");
        let r = coset(h, a, Side::Right).expect("H lies in the carrier");
        ensure!(l == e_h && r == e_h, [a], "aH, e.H and Ha differ");
        ensure!(l == h.support(), [a], "aH differs from F");
    }
    Ok(())
}

// --- pair claims ---

fn lad_product(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    let gamma = h.ambient().parent();
    let hk = product_subgroups(h, k).map_err(|e| Counterexample::new(e.to_string(), []))?;
    let ff = gamma.product_set(h.support(), k.support());
    if let Some(a) = hk.symmetric_difference(ff).min() {
        return Err(Counterexample::new("H.K differs from FF'", [a]));
    }
    if is_normal_partial(k).is_normal() {
        ensure!(SubgroupSet::new(gamma, ff).is_ok(), ff.iter(), "FF' is not a subgroup although K is normal");
    }
    Ok(())
}

fn lad_intersection(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    let gamma = h.ambient().parent();
    let meet = h.elements().intersection(k.elements());
    let form = gamma.product_set(
        h.support().intersection(k.support()),
        h.defect().intersection(k.defect()),
    );
    if let Some(a) = meet.symmetric_difference(form).min() {
        return Err(Counterexample::new("H ∩ K differs from (F∩F')(D'∩D'')", [a]));
    }
    intersect_subgroups(h, k).map_err(|e| Counterexample::new(e.to_string(), meet.iter()))?;
    Ok(())
}

fn theorem_outcome(r: Result<Check, super::iso::TheoremError>) -> Check {
    r.map_err(|e| Counterexample::new(format!("hypothesis unmet: {e}"), []))?
}

fn second_iso(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    theorem_outcome(second_iso_check(h, k))
}

/// `h ↦ x_h F′` into `FF′/F′`, as class indices.
fn second_map(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Result<(crate::group_kernel::GroupQuotient, Vec<(Elem, usize)>), Counterexample> {
    let g = h.ambient();
    let gamma = g.parent();
    let ff = gamma.product_set(h.support(), k.support());
    let top = crate::group_kernel::group_quotient(gamma, ff, k.support())
        .map_err(|e| Counterexample::new(format!("FF'/F' is not a quotient group: {e}"), []))?;
    let images = h
        .elements()
        .iter()
        .map(|a| (a, top.project(g.support_part(a)).expect("x_h lies in F")))
        .collect();
    Ok((top, images))
}

fn second_default_kernel(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    let (top, images) = second_map(h, k)?;
    let plain = PartialGroup::plain(std::sync::Arc::new(top.table().clone()));
    let kernel: ElemSet = images.iter().filter(|(_, c)| *c == plain.identity()).map(|(a, _)| *a).collect();
    let default: ElemSet = images.iter().filter(|(_, c)| plain.defect().contains(*c)).map(|(a, _)| *a).collect();
    if let Some(a) = kernel.symmetric_difference(default).min() {
        return Err(Counterexample::new("default kernel differs from kernel", [a]));
    }
    Ok(())
}

fn second_kernel_literal(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    let (top, images) = second_map(h, k)?;
    let id = top.table().identity();
    let kernel: ElemSet = images.iter().filter(|(_, c)| *c == id).map(|(a, _)| *a).collect();
    let meet = h.elements().intersection(k.elements());
    if let Some(a) = kernel.symmetric_difference(meet).min() {
        return Err(Counterexample::new("kernel of h -> hK differs from H ∩ K", [a]));
    }
    Ok(())
}

fn third_iso(k: &PartialSubgroup<'_>, n: &PartialSubgroup<'_>) -> Check {
    theorem_outcome(third_iso_check(k, n))
}

// --- hom claims ---

fn hom_basics(f: &PartialHom<'_>) -> Check {
    let (g1, g2) = (f.source(), f.target());
    ensure!(f.image(g1.identity()) == g2.identity(), [g1.identity()], "f(e) is not e");
    for a in g1.carrier() {
        let inv_fa = g2.inv_set_of(f.image(a));
        for s in g1.inv_set_of(a) {
            ensure!(inv_fa.contains(f.image(s)), [a, s], "f(a*) is not in Inv(f(a))");
        }
    }
    each_pair(g1.carrier(), |a, b| {
        let fa = f.image(a);
        for s in g1.inv_set_of(b) {
            let lhs = g2.support_part(f.image(g1.dot(a, s)));
            for t in g2.inv_set_of(f.image(b)) {
                ensure!(lhs == g2.dot(fa, t), [a, b, s, t], "f(a.b*).e differs from f(a).f(b)*");
            }
        }
        Ok(())
    })
}

fn mm3(f: &PartialHom<'_>) -> Check {
    match check_mm3_properties(f).first_failure() {
        None => Ok(()),
        Some((name, w)) => Err(Counterexample::new(format!("{name}: {}", w.detail), w.elements.clone())),
    }
}

fn anatomy(f: &PartialHom<'_>) -> Check {
    hom_anatomy(f).verify(f)
}

fn support_identities(f: &PartialHom<'_>) -> Check {
    let (g1, g2) = (f.source(), f.target());
    let an = hom_anatomy(f);
    let support_kernel: ElemSet = g1.support().iter().filter(|&x| f.image(x) == g2.identity()).collect();
    ensure!(
        an.default_kernel.intersection(g1.support()) == support_kernel,
        support_kernel.iter(),
        "default kernel meets E1 outside ker f|E1"
    );
    ensure!(
        an.image.intersection(g2.support()) == f.image_of(g1.support()),
        [],
        "Im(f) ∩ E2 differs from f(E1)"
    );
    let ker = PartialSubgroup::new(g1, an.kernel)
        .map_err(|e| Counterexample::new(format!("Ker(f) is not a partial subgroup: {e}"), an.kernel.iter()))?;
    if let Err(a) = is_normal_partial(&ker).cosets_agree {
        return Err(Counterexample::new("Ker(f) is not normal", [a]));
    }
    Ok(())
}

fn inverse_hom(f: &PartialHom<'_>) -> Check {
    match check_inverse_hom(f) {
        Ok(Ok(_)) => Ok(()),
        Ok(Err(v)) => Err(Counterexample::new(format!("inverse is not a homomorphism: {v:?}"), [])),
        Err(e) => Err(Counterexample::new(format!("hypothesis unmet: {e}"), [])),
    }
}

fn first_iso(f: &PartialHom<'_>) -> Check {
    first_iso_check(f, KernelChoice::Default, InducedMap::SupportPart)
}

fn first_iso_ker(f: &PartialHom<'_>) -> Check {
    first_iso_check(f, KernelChoice::Ordinary, InducedMap::SupportPart)
}

fn first_iso_raw(f: &PartialHom<'_>) -> Check {
    first_iso_check(f, KernelChoice::Default, InducedMap::Raw)
}
