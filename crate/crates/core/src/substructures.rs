//! Partial subgroups, partial cosets, normality and quotients.
//!
//! A partial subgroup `H` of `G = E·D` contains `e`, is closed under the
//! partial law and meets `Inv(h)` for each of its elements. Its support is
//! `F = E ∩ H` and its defect `D′ = D ∩ H`. Because every partial product
//! lands in `E`, cosets, normality and quotients are all governed by `F`:
//! `aH = x_a F`, `Ha = F x_a`, and `G/H` is `E/F`.
//!
//! `H = F·D′` is *not* enforced here. It fails for sets such as
//! `{e} ∪ F ∪ {x d}` with `d ∉ H`; [`decompose_partial_subgroup`] reports it.

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::ensure;
use crate::group_kernel::{check_normal, group_quotient, GroupQuotient, SubgroupSet};
use crate::partial_core::{PartialError, PartialGroup};
use crate::witness::{Check, Counterexample};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupViolation {
    NotInCarrier(Elem),
    MissingIdentity,
    /// `a.b ∉ H`.
    NotClosed(Elem, Elem),
    /// `Inv(h) ∩ H = ∅`.
    NoInverseInside(Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstructureError {
    #[error(transparent)]
    Partial(#[from] PartialError),
    #[error("not a partial subgroup: {0:?}")]
    NotPartialSubgroup(SubgroupViolation),
    #[error("{element} is in H but not in (E∩H)·(D∩H)")]
    NotDecomposable { element: Elem },
    #[error("support of the subgroup is not a subgroup of E")]
    SupportNotSubgroup,
    #[error("not normal: left and right cosets of {witness} differ")]
    NotNormal { witness: Elem },
    #[error("partial subgroups live in different partial groups")]
    DifferentAmbient,
}

/// Checks the three defining clauses, in order.
pub fn is_partial_subgroup(g: &PartialGroup, h: ElemSet) -> Result<(), SubgroupViolation> {
    if let Some(a) = h.difference(g.carrier()).min() {
        return Err(SubgroupViolation::NotInCarrier(a));
    }
    if !h.contains(g.identity()) {
        return Err(SubgroupViolation::MissingIdentity);
    }
    for a in h {
        for b in h {
            if !h.contains(g.dot(a, b)) {
                return Err(SubgroupViolation::NotClosed(a, b));
            }
        }
    }
    for a in h {
        if g.inv_set_of(a).is_disjoint(h) {
            return Err(SubgroupViolation::NoInverseInside(a));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub struct PartialSubgroup<'a> {
    ambient: &'a PartialGroup,
    elements: ElemSet,
    support: ElemSet,
    defect: ElemSet,
}

impl<'a> PartialSubgroup<'a> {
    /// Validates the defining clauses and records `F = E ∩ H`, `D′ = D ∩ H`.
    pub fn new(g: &'a PartialGroup, h: ElemSet) -> Result<Self, SubstructureError> {
        is_partial_subgroup(g, h).map_err(SubstructureError::NotPartialSubgroup)?;
        Ok(PartialSubgroup {
            ambient: g,
            elements: h,
            support: g.support().intersection(h),
            defect: g.defect().intersection(h),
        })
    }

    pub fn ambient(&self) -> &'a PartialGroup {
        self.ambient
    }

    pub fn elements(&self) -> ElemSet {
        self.elements
    }

    /// `F = E ∩ H`.
    pub fn support(&self) -> ElemSet {
        self.support
    }

    /// `D′ = D ∩ H`.
    pub fn defect(&self) -> ElemSet {
        self.defect
    }

    /// `F·D′` computed in the ambient group.
    pub fn product_form(&self) -> ElemSet {
        self.ambient.parent().product_set(self.support, self.defect)
    }

    pub fn is_decomposable(&self) -> bool {
        self.product_form() == self.elements
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.elements.contains(a)
    }

    fn same_ambient(&self, other: &PartialSubgroup<'_>) -> Result<(), SubstructureError> {
        if std::ptr::eq(self.ambient, other.ambient) {
            Ok(())
        } else {
            Err(SubstructureError::DifferentAmbient)
        }
    }
}

/// Partial subgroup together with a verified decomposition `H = F·D′`.
pub fn decompose_partial_subgroup(
    g: &PartialGroup,
    h: ElemSet,
) -> Result<PartialSubgroup<'_>, SubstructureError> {
    let sub = PartialSubgroup::new(g, h)?;
    SubgroupSet::new(g.parent(), sub.support).map_err(|_| SubstructureError::SupportNotSubgroup)?;
    if let Some(element) = h.difference(sub.product_form()).min() {
        return Err(SubstructureError::NotDecomposable { element });
    }
    Ok(sub)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TotalityFlags {
    /// `F = E`.
    pub total_support: bool,
    /// `D′ = D`.
    pub total_defect: bool,
    /// Every `x ∈ E` has some `d ∈ D′` with `x∘d ∈ H`.
    pub support_criterion: bool,
    /// `Inv(h) ⊆ H` for every `h ∈ H`.
    pub defect_criterion: bool,
}

pub fn totality_flags(h: &PartialSubgroup<'_>) -> TotalityFlags {
    let g = h.ambient;
    let gamma = g.parent();
    TotalityFlags {
        total_support: h.support == g.support(),
        total_defect: h.defect == g.defect(),
        support_criterion: g
            .support()
            .iter()
            .all(|x| h.defect.iter().any(|d| h.contains(gamma.mul(x, d)))),
        defect_criterion: h.elements.iter().all(|a| g.inv_set_of(a).is_subset(h.elements)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `aH = {a.h}`.
    Left,
    /// `Ha = {h.a}`.
    Right,
}

/// `aH` or `Ha`, computed from the partial law.
pub fn coset(h: &PartialSubgroup<'_>, a: Elem, side: Side) -> Result<ElemSet, SubstructureError> {
    let g = h.ambient;
    if !g.contains(a) {
        return Err(PartialError::NotInCarrier(a).into());
    }
    Ok(coset_of(h, a, side))
}

fn coset_of(h: &PartialSubgroup<'_>, a: Elem, side: Side) -> ElemSet {
    let g = h.ambient;
    h.elements
        .iter()
        .map(|k| match side {
            Side::Left => g.dot(a, k),
            Side::Right => g.dot(k, a),
        })
        .collect()
}

/// `a ∼ᵣ b ⟺ b.a* ∈ F` and `a ∼ₗ b ⟺ a*.b ∈ F`, for some `a* ∈ Inv(a)`.
pub fn coset_related(h: &PartialSubgroup<'_>, a: Elem, b: Elem, side: Side) -> bool {
    let g = h.ambient;
    g.inv_set_of(a).iter().any(|a_star| {
        let p = match side {
            Side::Right => g.dot(b, a_star),
            Side::Left => g.dot(a_star, b),
        };
        h.support.contains(p)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFamily {
    pub side: Side,
    /// Equivalence classes of the coset relation on the carrier, ordered by minimum.
    pub carrier_classes: Vec<ElemSet>,
    /// Distinct cosets `Ha` (or `aH`) for `a` in the carrier; these lie in `E`.
    pub support_blocks: Vec<ElemSet>,
}

/// Classes of `∼ᵣ`/`∼ₗ` on the carrier and the coset partition of `E`.
///
/// The relation is checked to be an equivalence and the coset blocks to
/// partition `E`; either failure is returned as a counterexample.
pub fn coset_relation_classes(h: &PartialSubgroup<'_>, side: Side) -> Result<CosetFamily, Counterexample> {
    let g = h.ambient;
    let carrier = g.carrier();
    let related = |a, b| coset_related(h, a, b, side);
    for a in carrier {
        ensure!(related(a, a), [a], "relation is not reflexive");
        for b in carrier {
            if related(a, b) {
                ensure!(related(b, a), [a, b], "relation is not symmetric");
                for c in carrier {
                    ensure!(!related(b, c) || related(a, c), [a, b, c], "relation is not transitive");
                }
            }
        }
    }
    let carrier_classes = classes_of(carrier, related);

    let mut support_blocks: Vec<ElemSet> = Vec::new();
    for a in carrier {
        let block = coset_of(h, a, side);
        if !support_blocks.contains(&block) {
            support_blocks.push(block);
        }
    }
    support_blocks.sort_by_key(|b| b.min());
    let mut union = ElemSet::EMPTY;
    for b in &support_blocks {
        ensure!(union.is_disjoint(*b), b.iter(), "coset blocks overlap");
        union = union.union(*b);
    }
    ensure!(union == g.support(), union.iter(), "coset blocks do not cover E");
    Ok(CosetFamily {
        side,
        carrier_classes,
        support_blocks,
    })
}

fn classes_of(universe: ElemSet, related: impl Fn(Elem, Elem) -> bool) -> Vec<ElemSet> {
    let mut out = Vec::new();
    let mut seen = ElemSet::EMPTY;
    for a in universe {
        if seen.contains(a) {
            continue;
        }
        let class: ElemSet = universe.iter().filter(|&b| related(a, b)).collect();
        seen = seen.union(class);
        out.push(class);
    }
    out
}

/// `a*Ha = {(a*.h).a : h ∈ H}` for a chosen `a* ∈ Inv(a)`.
pub fn conjugate_set_with(h: &PartialSubgroup<'_>, a: Elem, a_star: Elem) -> ElemSet {
    let g = h.ambient;
    h.elements
        .iter()
        .map(|k| g.dot(g.dot(a_star, k), a))
        .collect()
}

/// `a*Ha` with the canonical partial inverse `a* = x_a⁻¹`.
pub fn conjugate_set(h: &PartialSubgroup<'_>, a: Elem) -> Result<ElemSet, SubstructureError> {
    let g = h.ambient;
    if !g.contains(a) {
        return Err(PartialError::NotInCarrier(a).into());
    }
    Ok(conjugate_set_with(h, a, g.canonical_inverse(a)))
}

/// Verdicts of the four normality criteria, each with its first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    /// `Ha = aH` for all `a`.
    pub cosets_agree: Result<(), Elem>,
    /// `a*Ha = F` for all `a` and all `a* ∈ Inv(a)`.
    pub conjugate_is_support: Result<(), Elem>,
    /// `a*.h.a ∈ F` for all `a`, `h`, `a*`.
    pub conjugates_in_support: Result<(), (Elem, Elem)>,
    /// `x⁻¹Fx = F` for all `x ∈ E`.
    pub support_normal: Result<(), Elem>,
}

impl NormalityReport {
    pub fn verdicts(&self) -> [bool; 4] {
        [
            self.cosets_agree.is_ok(),
            self.conjugate_is_support.is_ok(),
            self.conjugates_in_support.is_ok(),
            self.support_normal.is_ok(),
        ]
    }

    /// Normality in the defining sense (`Ha = aH`).
    pub fn is_normal(&self) -> bool {
        self.cosets_agree.is_ok()
    }

    pub fn criteria_agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn is_normal_partial(h: &PartialSubgroup<'_>) -> NormalityReport {
    let g = h.ambient;
    let carrier = g.carrier();
    let first = |bad: &dyn Fn(Elem) -> bool| match carrier.iter().find(|&a| bad(a)) {
        Some(a) => Err(a),
        None => Ok(()),
    };
    let cosets_agree = first(&|a| coset_of(h, a, Side::Left) != coset_of(h, a, Side::Right));
    let conjugate_is_support = first(&|a| {
        g.inv_set_of(a)
            .iter()
            .any(|s| conjugate_set_with(h, a, s) != h.support)
    });
    let mut conjugates_in_support = Ok(());
    'outer: for a in carrier {
        for s in g.inv_set_of(a) {
            for k in h.elements {
                if !h.support.contains(g.dot(g.dot(s, k), a)) {
                    conjugates_in_support = Err((a, k));
                    break 'outer;
                }
            }
        }
    }
    let support_normal = check_normal(g.parent(), g.support(), h.support);
    NormalityReport {
        cosets_agree,
        conjugate_is_support,
        conjugates_in_support,
        support_normal,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalTestFailure {
    Empty,
    NotInCarrier(Elem),
    /// `h.k* ∉ F`.
    ProductClause(Elem, Elem),
    /// `a*.h.a ∉ F`.
    ConjugateClause(Elem, Elem),
}

/// Two-clause normal subgroup test on an arbitrary subset, with `F = E ∩ H`.
pub fn normal_test(g: &PartialGroup, h: ElemSet) -> Result<(), NormalTestFailure> {
    if h.is_empty() {
        return Err(NormalTestFailure::Empty);
    }
    if let Some(a) = h.difference(g.carrier()).min() {
        return Err(NormalTestFailure::NotInCarrier(a));
    }
    let f = g.support().intersection(h);
    for a in h {
        for k in h {
            for k_star in g.inv_set_of(k) {
                if !f.contains(g.dot(a, k_star)) {
                    return Err(NormalTestFailure::ProductClause(a, k));
                }
            }
        }
    }
    for a in g.carrier() {
        for a_star in g.inv_set_of(a) {
            for k in h {
                if !f.contains(g.dot(g.dot(a_star, k), a)) {
                    return Err(NormalTestFailure::ConjugateClause(a, k));
                }
            }
        }
    }
    Ok(())
}

/// `a ∼_H b ⟺ ∃ h ∈ H : a.e = b.h`.
pub fn congruent(h: &PartialSubgroup<'_>, a: Elem, b: Elem) -> bool {
    let g = h.ambient;
    let lhs = g.support_part(a);
    h.elements.iter().any(|k| g.dot(b, k) == lhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePartition {
    pub classes: Vec<ElemSet>,
}

impl CongruencePartition {
    pub fn class_of(&self, a: Elem) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(a))
    }
}

/// Classes of congruence mod `H`, after checking it is an equivalence relation.
pub fn congruence_mod(h: &PartialSubgroup<'_>) -> Result<CongruencePartition, Counterexample> {
    let carrier = h.ambient.carrier();
    for a in carrier {
        ensure!(congruent(h, a, a), [a], "congruence is not reflexive");
        for b in carrier {
            if congruent(h, a, b) {
                ensure!(congruent(h, b, a), [a, b], "congruence is not symmetric");
                for c in carrier {
                    ensure!(
                        !congruent(h, b, c) || congruent(h, a, c),
                        [a, b, c],
                        "congruence is not transitive"
                    );
                }
            }
        }
    }
    Ok(CongruencePartition {
        classes: classes_of(carrier, |a, b| congruent(h, a, b)),
    })
}

/// `G/N`, realized as `E/F` with `π(a) = x_a F`.
#[derive(Debug, Clone)]
pub struct PartialQuotient<'a> {
    pub normal: PartialSubgroup<'a>,
    pub group: GroupQuotient,
}

impl PartialQuotient<'_> {
    /// `π(a)`: the coset of `F` containing the support part of `a`.
    pub fn project(&self, a: Elem) -> Elem {
        let g = self.normal.ambient;
        self.group
            .project(g.support_part(a))
            .expect("support parts lie in E")
    }

    /// `{a ∈ G : π(a) = identity class}`, which is `F·D`.
    pub fn carrier_kernel(&self) -> ElemSet {
        let g = self.normal.ambient;
        let id = self.project(g.identity());
        g.carrier().iter().filter(|&a| self.project(a) == id).collect()
    }

    /// Checks that the class of `a.b` depends only on the classes of `a` and `b`,
    /// over every choice of representatives.
    pub fn check_well_defined(&self) -> Check {
        let g = self.normal.ambient;
        let k = self.group.order();
        let mut table = vec![None; k * k];
        for a in g.carrier() {
            for b in g.carrier() {
                let slot = &mut table[self.project(a) * k + self.project(b)];
                let c = self.project(g.dot(a, b));
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) => ensure!(prev == c, [a, b], "coset product depends on representatives"),
                }
                ensure!(
                    c == self.group.table().mul(self.project(a), self.project(b)),
                    [a, b],
                    "coset product disagrees with E/F"
                );
            }
        }
        Ok(())
    }
}

pub fn partial_quotient<'a>(n: &PartialSubgroup<'a>) -> Result<PartialQuotient<'a>, SubstructureError> {
    let report = is_normal_partial(n);
    if let Err(witness) = report.cosets_agree {
        return Err(SubstructureError::NotNormal { witness });
    }
    let g = n.ambient;
    let group = group_quotient(g.parent(), g.support(), n.support)
        .map_err(|_| SubstructureError::SupportNotSubgroup)?;
    Ok(PartialQuotient { normal: *n, group })
}

/// `H.K = {a.b : a ∈ H, b ∈ K}`.
pub fn product_subgroups(
    h: &PartialSubgroup<'_>,
    k: &PartialSubgroup<'_>,
) -> Result<ElemSet, SubstructureError> {
    h.same_ambient(k)?;
    let g = h.ambient;
    let mut out = ElemSet::EMPTY;
    for a in h.elements {
        for b in k.elements {
            out.insert(g.dot(a, b));
        }
    }
    Ok(out)
}

/// `H ∩ K`, itself a partial subgroup.
pub fn intersect_subgroups<'a>(
    h: &PartialSubgroup<'a>,
    k: &PartialSubgroup<'a>,
) -> Result<PartialSubgroup<'a>, SubstructureError> {
    h.same_ambient(k)?;
    PartialSubgroup::new(h.ambient, h.elements.intersection(k.elements))
}

/// Subsets to sweep: every subset of the carrier when it has at most
/// `subset_cap` elements, otherwise every set generated by at most two
/// carrier elements. Canonically ordered.
pub fn candidate_subsets(g: &PartialGroup, subset_cap: usize) -> Vec<ElemSet> {
    let carrier = g.carrier();
    let mut out = Vec::new();
    if carrier.len() <= subset_cap {
        let mask = carrier.bits();
        let mut sub = mask;
        loop {
            out.push(ElemSet::from_bits(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    } else {
        let elems = carrier.to_vec();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                let s = g.generated_partial_subgroup(ElemSet::from_iter([a, b]));
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        let s = g.generated_partial_subgroup(ElemSet::EMPTY);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by(ElemSet::canonical_cmp);
    out
}

/// Candidate subsets that satisfy the partial subgroup definition.
pub fn partial_subgroups(g: &PartialGroup, subset_cap: usize) -> Vec<ElemSet> {
    candidate_subsets(g, subset_cap)
        .into_iter()
        .filter(|&h| is_partial_subgroup(g, h).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cli_io::catalog;
    use crate::group_kernel::{subgroup_closure, GroupTable, DEFAULT_ORDER_CAP as CAP};
    use crate::partial_core::Freeness;

    fn set(v: &[Elem]) -> ElemSet {
        v.iter().copied().collect()
    }

    fn z6_instance() -> PartialGroup {
        let z6 = Arc::new(catalog::cyclic(6));
        let e = SubgroupSet::new(&z6, set(&[0, 3])).unwrap();
        PartialGroup::build(z6, e, set(&[0, 2]), Freeness::Strict, CAP).unwrap()
    }

    fn s3_melted() -> (PartialGroup, Elem, Elem) {
        let s3 = Arc::new(catalog::symmetric(3));
        let t = s3.lookup_name("(12)").unwrap();
        let c = s3.lookup_name("(123)").unwrap();
        (PartialGroup::plain(s3), t, c)
    }

    fn s3_transposition_subgroup(g: &PartialGroup, t: Elem) -> ElemSet {
        subgroup_closure(g.parent(), ElemSet::singleton(t)).set()
    }

    #[test]
    fn partial_subgroup_examples() {
        let g = z6_instance();
        assert_eq!(is_partial_subgroup(&g, set(&[0, 2])), Ok(()));
        assert_eq!(is_partial_subgroup(&g, set(&[0, 5])), Err(SubgroupViolation::NotClosed(0, 5)));
        assert_eq!(is_partial_subgroup(&g, set(&[0])), Ok(()));
        assert_eq!(is_partial_subgroup(&g, set(&[2])), Err(SubgroupViolation::MissingIdentity));
        assert_eq!(is_partial_subgroup(&g, set(&[0, 1])), Err(SubgroupViolation::NotInCarrier(1)));
    }

    #[test]
    fn decomposition_examples() {
        let g = z6_instance();
        let h = decompose_partial_subgroup(&g, set(&[0, 2])).unwrap();
        assert_eq!((h.support(), h.defect()), (set(&[0]), set(&[0, 2])));
        let h = decompose_partial_subgroup(&g, g.support()).unwrap();
        assert_eq!((h.support(), h.defect()), (g.support(), set(&[0])));
        let h = decompose_partial_subgroup(&g, g.carrier()).unwrap();
        assert_eq!((h.support(), h.defect()), (g.support(), g.defect()));
    }

    #[test]
    fn decomposition_can_fail() {
        // {0,3,5}: closed (all products in {0,3}), Inv(5) = {3,5} meets it,
        // but E∩H = {0,3} and D∩H = {0} only produce {0,3}
        let g = z6_instance();
        assert_eq!(is_partial_subgroup(&g, set(&[0, 3, 5])), Ok(()));
        assert_eq!(
            decompose_partial_subgroup(&g, set(&[0, 3, 5])).unwrap_err(),
            SubstructureError::NotDecomposable { element: 5 }
        );
    }

    #[test]
    fn totality_examples() {
        let g = z6_instance();
        let flags = |h: &[Elem]| totality_flags(&PartialSubgroup::new(&g, set(h)).unwrap());
        let f = flags(&[0, 2]);
        assert_eq!((f.total_support, f.total_defect), (false, true));
        let f = flags(&[0, 2, 3, 5]);
        assert_eq!((f.total_support, f.total_defect), (true, true));
        let f = flags(&[0, 3]);
        assert_eq!((f.total_support, f.total_defect), (true, false));
        assert_eq!(f.support_criterion, f.total_support);
        assert_eq!(f.defect_criterion, f.total_defect);
        // the defect characterization breaks on the non-decomposable {0,2,3}
        let f = flags(&[0, 2, 3]);
        assert!(f.total_defect);
        assert!(!f.defect_criterion);
    }

    #[test]
    fn coset_examples() {
        let g = z6_instance();
        let e = PartialSubgroup::new(&g, g.support()).unwrap();
        assert_eq!(coset(&e, 5, Side::Right), Ok(set(&[0, 3])));
        let h = PartialSubgroup::new(&g, set(&[0, 2])).unwrap();
        for a in h.elements() {
            assert_eq!(coset(&h, a, Side::Left).unwrap(), h.support());
            assert_eq!(coset(&h, a, Side::Right).unwrap(), h.support());
        }
        let triv = PartialSubgroup::new(&g, set(&[0])).unwrap();
        for a in g.carrier() {
            assert_eq!(coset(&triv, a, Side::Left).unwrap(), set(&[g.dot_identity(a).unwrap()]));
        }
        assert!(coset(&triv, 1, Side::Left).is_err());
    }

    #[test]
    fn coset_class_examples() {
        let g = z6_instance();
        let h = PartialSubgroup::new(&g, set(&[0, 2])).unwrap();
        let fam = coset_relation_classes(&h, Side::Right).unwrap();
        assert_eq!(fam.carrier_classes, vec![set(&[0, 2]), set(&[3, 5])]);
        assert_eq!(fam.support_blocks, vec![set(&[0]), set(&[3])]);
        let full = PartialSubgroup::new(&g, g.carrier()).unwrap();
        let fam = coset_relation_classes(&full, Side::Left).unwrap();
        assert_eq!(fam.carrier_classes, vec![g.carrier()]);

        let s3 = Arc::new(catalog::symmetric(3));
        let squares: ElemSet = (0..6).map(|x| s3.mul(x, x)).collect();
        let a3 = subgroup_closure(&s3, squares);
        let t = s3.lookup_name("(12)").unwrap();
        let g = PartialGroup::build(s3, a3, set(&[0, t]), Freeness::Strict, CAP).unwrap();
        let h = PartialSubgroup::new(&g, a3.set()).unwrap();
        let fam = coset_relation_classes(&h, Side::Right).unwrap();
        assert_eq!(fam.support_blocks, vec![a3.set()]);
        assert_eq!(fam.carrier_classes, vec![g.carrier()]);
    }

    #[test]
    fn conjugate_examples() {
        let g = z6_instance();
        for h in partial_subgroups(&g, 8) {
            let h = PartialSubgroup::new(&g, h).unwrap();
            for a in g.carrier() {
                assert_eq!(conjugate_set(&h, a).unwrap(), h.support());
            }
        }
        let (g, t, c) = s3_melted();
        let h = PartialSubgroup::new(&g, s3_transposition_subgroup(&g, t)).unwrap();
        assert_eq!(conjugate_set(&h, g.identity()).unwrap(), h.support());
        let moved = conjugate_set(&h, c).unwrap();
        assert_eq!(moved.len(), 2);
        assert_ne!(moved, h.support());
        let gamma: &GroupTable = g.parent();
        assert_eq!(moved, gamma.conjugate_set(h.support(), c));
    }

    #[test]
    fn normality_examples() {
        let g = z6_instance();
        for h in partial_subgroups(&g, 8) {
            let r = is_normal_partial(&PartialSubgroup::new(&g, h).unwrap());
            assert_eq!(r.verdicts(), [true; 4]);
        }
        let (g, t, _) = s3_melted();
        let r = is_normal_partial(&PartialSubgroup::new(&g, s3_transposition_subgroup(&g, t)).unwrap());
        assert_eq!(r.verdicts(), [false; 4]);
        let triv = PartialSubgroup::new(&g, set(&[0])).unwrap();
        assert_eq!(is_normal_partial(&triv).verdicts(), [true; 4]);
    }

    #[test]
    fn normal_test_examples() {
        let g = z6_instance();
        assert_eq!(normal_test(&g, set(&[0, 2])), Ok(()));
        assert_eq!(normal_test(&g, set(&[2])), Err(NormalTestFailure::ProductClause(2, 2)));
        assert_eq!(normal_test(&g, g.carrier()), Ok(()));
        assert_eq!(normal_test(&g, ElemSet::EMPTY), Err(NormalTestFailure::Empty));
    }

    #[test]
    fn congruence_examples() {
        let g = z6_instance();
        let h = PartialSubgroup::new(&g, set(&[0, 2])).unwrap();
        assert_eq!(congruence_mod(&h).unwrap().classes, vec![set(&[0, 2]), set(&[3, 5])]);
        let e = PartialSubgroup::new(&g, g.support()).unwrap();
        assert_eq!(congruence_mod(&e).unwrap().classes, vec![g.carrier()]);
    }

    #[test]
    fn quotient_examples() {
        let g = z6_instance();
        let n = PartialSubgroup::new(&g, set(&[0, 2])).unwrap();
        let q = partial_quotient(&n).unwrap();
        assert_eq!(q.group.cosets(), &[set(&[0]), set(&[3])]);
        assert_eq!(q.check_well_defined(), Ok(()));
        assert_eq!(q.carrier_kernel(), set(&[0, 2]));
        let full = PartialSubgroup::new(&g, g.carrier()).unwrap();
        assert_eq!(partial_quotient(&full).unwrap().group.order(), 1);

        let (g, t, _) = s3_melted();
        let squares: ElemSet = (0..6).map(|x| g.parent().mul(x, x)).collect();
        let a3 = subgroup_closure(g.parent(), squares).set();
        let q = partial_quotient(&PartialSubgroup::new(&g, a3).unwrap()).unwrap();
        assert_eq!(q.group.order(), 2);
        let h = PartialSubgroup::new(&g, s3_transposition_subgroup(&g, t)).unwrap();
        assert!(matches!(partial_quotient(&h), Err(SubstructureError::NotNormal { .. })));
    }

    #[test]
    fn product_and_intersection_examples() {
        let g = z6_instance();
        let h = PartialSubgroup::new(&g, set(&[0, 2])).unwrap();
        let e = PartialSubgroup::new(&g, g.support()).unwrap();
        assert_eq!(product_subgroups(&h, &e), Ok(set(&[0, 3])));
        assert_eq!(product_subgroups(&h, &h), Ok(set(&[0])));
        assert_eq!(intersect_subgroups(&h, &e).unwrap().elements(), set(&[0]));
        assert_eq!(intersect_subgroups(&h, &h).unwrap().elements(), h.elements());
        let full = PartialSubgroup::new(&g, g.carrier()).unwrap();
        assert_eq!(intersect_subgroups(&full, &e).unwrap().elements(), e.elements());

        let other = z6_instance();
        let h2 = PartialSubgroup::new(&other, set(&[0])).unwrap();
        assert_eq!(product_subgroups(&h, &h2), Err(SubstructureError::DifferentAmbient));

        let (g, t, _) = s3_melted();
        let squares: ElemSet = (0..6).map(|x| g.parent().mul(x, x)).collect();
        let a3 = PartialSubgroup::new(&g, subgroup_closure(g.parent(), squares).set()).unwrap();
        let tw = PartialSubgroup::new(&g, s3_transposition_subgroup(&g, t)).unwrap();
        assert_eq!(product_subgroups(&a3, &tw), Ok(g.carrier()));
    }

    #[test]
    fn candidate_subsets_follow_the_cap() {
        let g = z6_instance();
        assert_eq!(candidate_subsets(&g, 8).len(), 16);
        let subs = partial_subgroups(&g, 8);
        assert!(subs.contains(&set(&[0, 3, 5])));
        let big = PartialGroup::plain(Arc::new(catalog::cyclic(12)));
        let gen = candidate_subsets(&big, 8);
        // plain group: generated sets are the subgroups generated by ≤ 2 elements
        assert_eq!(gen.len(), 6);
    }
}
