//! Homomorphisms of partial groups.
//!
//! A map `f: G₁ → G₂` on carriers is a homomorphism when `f(E₁) ⊆ E₂`,
//! `f(D₁) ⊆ D₂` and `f(g.h).e = f(g).f(h)` for all `g, h ∈ G₁`.

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::ensure;
use crate::group_kernel::{check_group_hom, subgroup_table, GroupMap};
use crate::partial_core::PartialGroup;
use crate::substructures::{is_normal_partial, is_partial_subgroup, PartialSubgroup};
use crate::witness::{Check, Counterexample};

const OUTSIDE: Elem = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomViolation {
    /// The image tuple does not have one entry per source carrier element.
    WrongArity { expected: usize, got: usize },
    /// An image outside the target carrier.
    ImageOutside(Elem),
    /// `x ∈ E₁` with `f(x) ∉ E₂`.
    SupportNotPreserved(Elem),
    /// `d ∈ D₁` with `f(d) ∉ D₂`.
    DefectNotPreserved(Elem),
    /// `f(g.h).e ≠ f(g).f(h)`.
    LawNotPreserved(Elem, Elem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseHypothesis {
    Bijective,
    /// `f⁻¹(E₂) ⊆ E₁`.
    SupportPreimage,
    /// `f⁻¹(D₂) ⊆ D₁`.
    DefectPreimage,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("not a homomorphism: {0:?}")]
    NotHom(HomViolation),
    #[error("hypothesis not met: {0:?}")]
    HypothesisUnmet(InverseHypothesis),
    #[error("search budget exceeded: carriers of size {source_size} and {target_size}, limit {limit}")]
    BudgetExceeded {
        source_size: usize,
        target_size: usize,
        limit: usize,
    },
}

/// Which conditions were validated when the hom was built. All three are
/// `true` for any value handed out by this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomFlags {
    pub support_preserving: bool,
    pub defect_preserving: bool,
    pub law_preserving: bool,
}

#[derive(Debug, Clone)]
pub struct PartialHom<'a> {
    source: &'a PartialGroup,
    target: &'a PartialGroup,
    images: Vec<Elem>,
    flags: HomFlags,
}

impl<'a> PartialHom<'a> {
    pub fn source(&self) -> &'a PartialGroup {
        self.source
    }

    pub fn target(&self) -> &'a PartialGroup {
        self.target
    }

    pub fn flags(&self) -> HomFlags {
        self.flags
    }

    #[inline]
    pub fn image(&self, a: Elem) -> Elem {
        let b = self.images[a];
        assert!(b != OUTSIDE, "{a} is not in the source carrier");
        b
    }

    /// Images in ascending source-carrier order.
    pub fn image_tuple(&self) -> Vec<Elem> {
        self.source.carrier().iter().map(|a| self.images[a]).collect()
    }

    pub fn image_of(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|a| self.image(a)).collect()
    }

    pub fn preimage(&self, s: ElemSet) -> ElemSet {
        self.source
            .carrier()
            .iter()
            .filter(|&a| s.contains(self.images[a]))
            .collect()
    }

    pub fn is_bijective(&self) -> bool {
        self.image_of(self.source.carrier()) == self.target.carrier()
            && self.source.carrier().len() == self.target.carrier().len()
    }

    /// `f|E₁` as a group map `E₁ → E₂`.
    pub fn support_restriction(&self) -> GroupMap {
        let mut images = vec![OUTSIDE; self.source.parent().order()];
        for x in self.source.support() {
            images[x] = self.images[x];
        }
        GroupMap::new(self.source.support(), images)
    }
}

fn law_holds(source: &PartialGroup, target: &PartialGroup, images: &[Elem], a: Elem, b: Elem) -> bool {
    let ab = source.dot(a, b);
    target.support_part(images[ab]) == target.dot(images[a], images[b])
}

/// Validates a raw image tuple (ascending source-carrier order).
pub fn is_partial_hom<'a>(
    source: &'a PartialGroup,
    target: &'a PartialGroup,
    tuple: &[Elem],
) -> Result<PartialHom<'a>, HomViolation> {
    let carrier = source.carrier();
    if tuple.len() != carrier.len() {
        return Err(HomViolation::WrongArity {
            expected: carrier.len(),
            got: tuple.len(),
        });
    }
    let mut images = vec![OUTSIDE; source.parent().order()];
    for (a, &b) in carrier.iter().zip(tuple) {
        if !target.contains(b) {
            return Err(HomViolation::ImageOutside(a));
        }
        images[a] = b;
    }
    if let Some(x) = source.support().iter().find(|&x| !target.support().contains(images[x])) {
        return Err(HomViolation::SupportNotPreserved(x));
    }
    if let Some(d) = source.defect().iter().find(|&d| !target.defect().contains(images[d])) {
        return Err(HomViolation::DefectNotPreserved(d));
    }
    for a in carrier {
        for b in carrier {
            if !law_holds(source, target, &images, a, b) {
                return Err(HomViolation::LawNotPreserved(a, b));
            }
        }
    }
    Ok(PartialHom {
        source,
        target,
        images,
        flags: HomFlags {
            support_preserving: true,
            defect_preserving: true,
            law_preserving: true,
        },
    })
}

/// Builds and validates a hom from a function on source elements.
pub fn hom_from_fn<'a>(
    source: &'a PartialGroup,
    target: &'a PartialGroup,
    f: impl Fn(Elem) -> Elem,
) -> Result<PartialHom<'a>, HomViolation> {
    let tuple: Vec<Elem> = source.carrier().iter().map(f).collect();
    is_partial_hom(source, target, &tuple)
}

pub fn identity_hom(g: &PartialGroup) -> PartialHom<'_> {
    hom_from_fn(g, g, |a| a).expect("identity is a homomorphism")
}

/// `a ↦ a.e`, a hom from `G` to itself.
pub fn support_projection(g: &PartialGroup) -> PartialHom<'_> {
    hom_from_fn(g, g, |a| g.support_part(a)).expect("support projection is a homomorphism")
}

/// `g ∘ f`.
pub fn compose<'a>(f: &PartialHom<'a>, g: &PartialHom<'a>) -> Result<PartialHom<'a>, HomViolation> {
    assert!(std::ptr::eq(f.target, g.source), "maps are not composable");
    hom_from_fn(f.source, g.target, |a| g.image(f.image(a)))
}

/// `Ker(f)`, default kernel `K̃ = f⁻¹(D₂)` and `Im(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAnatomy {
    pub kernel: ElemSet,
    pub default_kernel: ElemSet,
    pub image: ElemSet,
}

pub fn hom_anatomy(f: &PartialHom<'_>) -> HomAnatomy {
    HomAnatomy {
        kernel: f.preimage(ElemSet::singleton(f.target.identity())),
        default_kernel: f.preimage(f.target.defect()),
        image: f.image_of(f.source.carrier()),
    }
}

impl HomAnatomy {
    /// `Ker ⊆ K̃`, `K̃` a normal partial subgroup of the source and `Im` a
    /// partial subgroup of the target.
    pub fn verify(&self, f: &PartialHom<'_>) -> Check {
        ensure!(
            self.kernel.is_subset(self.default_kernel),
            self.kernel.difference(self.default_kernel).iter(),
            "kernel is not inside the default kernel"
        );
        if let Err(v) = is_partial_subgroup(f.source, self.default_kernel) {
            return Err(Counterexample::new(
                format!("default kernel is not a partial subgroup: {v:?}"),
                self.default_kernel.iter(),
            ));
        }
        let k = PartialSubgroup::new(f.source, self.default_kernel).expect("checked above");
        let report = is_normal_partial(&k);
        if let Err(a) = report.cosets_agree {
            return Err(Counterexample::new("default kernel is not normal", [a]));
        }
        if let Err(v) = is_partial_subgroup(f.target, self.image) {
            return Err(Counterexample::new(
                format!("image is not a partial subgroup: {v:?}"),
                self.image.iter(),
            ));
        }
        Ok(())
    }
}

/// Outcomes of the four structural properties every hom should have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mm3Report {
    /// `f|E₁: E₁ → E₂` is a group homomorphism.
    pub support_hom: Check,
    /// `f(e₁) = e₂`.
    pub identity: Check,
    /// `f(a*) ∈ Inv(f(a))` for every `a* ∈ Inv(a)`.
    pub inverses: Check,
    /// `a = x∘d` implies `f(a) = f(x)∘d″` for some `d″ ∈ D₂`.
    pub defect_factor: Check,
}

impl Mm3Report {
    pub fn all_hold(&self) -> bool {
        self.support_hom.is_ok() && self.identity.is_ok() && self.inverses.is_ok() && self.defect_factor.is_ok()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        [
            ("support_hom", &self.support_hom),
            ("identity", &self.identity),
            ("inverses", &self.inverses),
            ("defect_factor", &self.defect_factor),
        ]
        .into_iter()
        .find_map(|(name, c)| c.as_ref().err().map(|w| (name, w)))
    }
}

pub fn check_mm3_properties(f: &PartialHom<'_>) -> Mm3Report {
    let (g1, g2) = (f.source, f.target);
    let support_hom = (|| {
        let (e1, back) = subgroup_table(g1.parent(), g1.support());
        let (e2, back2) = subgroup_table(g2.parent(), g2.support());
        let mut fwd2 = vec![OUTSIDE; g2.parent().order()];
        for (i, &a) in back2.iter().enumerate() {
            fwd2[a] = i;
        }
        let images = back.iter().map(|&x| fwd2[f.image(x)]).collect();
        ensure!(
            back.iter().all(|&x| fwd2[f.image(x)] != OUTSIDE),
            [],
            "support not mapped into support"
        );
        check_group_hom(&e1, &e2, &GroupMap::new(e1.elements(), images))
            .map_err(|(x, y)| Counterexample::new("f(xy) != f(x)f(y)", [back[x], back[y]]))
    })();
    let identity = (|| {
        let e = g1.identity();
        ensure!(f.image(e) == g2.identity(), [e, f.image(e)], "f(e) is not the identity");
        Ok(())
    })();
    let inverses = (|| {
        for a in g1.carrier() {
            let target_inv = g2.inv_set_of(f.image(a));
            for a_star in g1.inv_set_of(a) {
                ensure!(
                    target_inv.contains(f.image(a_star)),
                    [a, a_star],
                    "f(a*) is not a partial inverse of f(a)"
                );
            }
        }
        Ok(())
    })();
    let defect_factor = (|| {
        let gamma2 = g2.parent();
        for a in g1.carrier() {
            let fx = f.image(g1.support_part(a));
            let found = g2.defect().iter().any(|d| gamma2.mul(fx, d) == f.image(a));
            ensure!(found, [a], "f(a) is not f(x) times a defect element");
        }
        Ok(())
    })();
    Mm3Report {
        support_hom,
        identity,
        inverses,
        defect_factor,
    }
}

/// The inverse map of a bijective hom, once the preimage hypotheses hold;
/// the inner result says whether that inverse is itself a homomorphism.
pub fn check_inverse_hom<'a>(
    f: &PartialHom<'a>,
) -> Result<Result<PartialHom<'a>, HomViolation>, MorphismError> {
    let (g1, g2) = (f.source, f.target);
    if !f.is_bijective() {
        return Err(MorphismError::HypothesisUnmet(InverseHypothesis::Bijective));
    }
    if !f.preimage(g2.support()).is_subset(g1.support()) {
        return Err(MorphismError::HypothesisUnmet(InverseHypothesis::SupportPreimage));
    }
    if !f.preimage(g2.defect()).is_subset(g1.defect()) {
        return Err(MorphismError::HypothesisUnmet(InverseHypothesis::DefectPreimage));
    }
    let mut back = vec![OUTSIDE; g2.parent().order()];
    for a in g1.carrier() {
        back[f.image(a)] = a;
    }
    Ok(hom_from_fn(g2, g1, |b| back[b]))
}

/// Search limits for [`enumerate_partial_homs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomBudget {
    pub max_carrier: usize,
}

impl Default for HomBudget {
    fn default() -> Self {
        HomBudget { max_carrier: 8 }
    }
}

/// Every homomorphism `g1 → g2`, ordered by image tuple.
///
/// Backtracks over carrier elements (support first), with candidate images
/// restricted by `f(E₁) ⊆ E₂` and `f(D₁) ⊆ D₂`, pruning on the law as soon
/// as a pair and its product are both assigned.
pub fn enumerate_partial_homs<'a>(
    g1: &'a PartialGroup,
    g2: &'a PartialGroup,
    budget: HomBudget,
) -> Result<Vec<PartialHom<'a>>, MorphismError> {
    let (n1, n2) = (g1.carrier().len(), g2.carrier().len());
    if n1 > budget.max_carrier || n2 > budget.max_carrier {
        return Err(MorphismError::BudgetExceeded {
            source_size: n1,
            target_size: n2,
            limit: budget.max_carrier,
        });
    }
    let order: Vec<Elem> = g1
        .support()
        .iter()
        .chain(g1.carrier().difference(g1.support()).iter())
        .collect();
    let domains: Vec<Vec<Elem>> = order
        .iter()
        .map(|&a| {
            let mut allowed = g2.carrier();
            if g1.support().contains(a) {
                allowed = allowed.intersection(g2.support());
            }
            if g1.defect().contains(a) {
                allowed = allowed.intersection(g2.defect());
            }
            allowed.to_vec()
        })
        .collect();
    let mut search = HomSearch {
        g1,
        g2,
        order: &order,
        domains: &domains,
        images: vec![OUTSIDE; g1.parent().order()],
        assigned: ElemSet::EMPTY,
        found: Vec::new(),
    };
    search.run(0);
    let mut tuples = search.found;
    tuples.sort();
    Ok(tuples
        .into_iter()
        .map(|t| is_partial_hom(g1, g2, &t).expect("search only yields homomorphisms"))
        .collect())
}

struct HomSearch<'s> {
    g1: &'s PartialGroup,
    g2: &'s PartialGroup,
    order: &'s [Elem],
    domains: &'s [Vec<Elem>],
    images: Vec<Elem>,
    assigned: ElemSet,
    found: Vec<Vec<Elem>>,
}

impl HomSearch<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.order.len() {
            let tuple = self.g1.carrier().iter().map(|a| self.images[a]).collect();
            self.found.push(tuple);
            return;
        }
        let a = self.order[depth];
        for i in 0..self.domains[depth].len() {
            self.images[a] = self.domains[depth][i];
            self.assigned.insert(a);
            if self.consistent(a) {
                self.run(depth + 1);
            }
            self.assigned.remove(a);
        }
        self.images[a] = OUTSIDE;
    }

    /// Law check on every assigned pair whose product is assigned and that involves `a`.
    fn consistent(&self, a: Elem) -> bool {
        for b in self.assigned {
            for c in self.assigned {
                let bc = self.g1.dot(b, c);
                if (b == a || c == a || bc == a)
                    && self.assigned.contains(bc)
                    && !law_holds(self.g1, self.g2, &self.images, b, c)
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cli_io::catalog;
    use crate::group_kernel::{SubgroupSet, DEFAULT_ORDER_CAP as CAP};
    use crate::partial_core::Freeness;

    fn set(v: &[Elem]) -> ElemSet {
        v.iter().copied().collect()
    }

    fn z6_instance() -> PartialGroup {
        let z6 = Arc::new(catalog::cyclic(6));
        let e = SubgroupSet::new(&z6, set(&[0, 3])).unwrap();
        PartialGroup::build(z6, e, set(&[0, 2]), Freeness::Strict, CAP).unwrap()
    }

    fn trivial_instance() -> PartialGroup {
        PartialGroup::plain(Arc::new(catalog::cyclic(1)))
    }

    /// Oracle: every map in the product of constrained domains, filtered by the law.
    fn brute_force_count(g1: &PartialGroup, g2: &PartialGroup) -> usize {
        let elems = g1.carrier().to_vec();
        let domains: Vec<Vec<Elem>> = elems
            .iter()
            .map(|&a| {
                g2.carrier()
                    .iter()
                    .filter(|&b| !g1.support().contains(a) || g2.support().contains(b))
                    .filter(|&b| !g1.defect().contains(a) || g2.defect().contains(b))
                    .collect()
            })
            .collect();
        let mut count = 0;
        let mut idx = vec![0usize; elems.len()];
        loop {
            let tuple: Vec<Elem> = idx.iter().zip(&domains).map(|(&i, d)| d[i]).collect();
            let ok = elems.iter().all(|&a| {
                elems.iter().all(|&b| {
                    let ab = g1.dot(a, b);
                    let fab = tuple[elems.iter().position(|&z| z == ab).unwrap()];
                    let fa = tuple[elems.iter().position(|&z| z == a).unwrap()];
                    let fb = tuple[elems.iter().position(|&z| z == b).unwrap()];
                    g2.support_part(fab) == g2.dot(fa, fb)
                })
            });
            count += usize::from(ok);
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < domains[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn hom_validation_examples() {
        let g = z6_instance();
        assert!(hom_from_fn(&g, &g, |a| g.support_part(a)).is_ok());
        assert!(hom_from_fn(&g, &g, |a| a).is_ok());
        // carrier {0,2,3,5}: a ↦ a+3 sends 0 ∈ D₁ to 3 ∉ D₂
        assert_eq!(
            hom_from_fn(&g, &g, |a| (a + 3) % 6).unwrap_err(),
            HomViolation::DefectNotPreserved(0)
        );
        assert_eq!(
            is_partial_hom(&g, &g, &[0, 2]).unwrap_err(),
            HomViolation::WrongArity { expected: 4, got: 2 }
        );
        assert_eq!(
            is_partial_hom(&g, &g, &[0, 2, 3, 1]).unwrap_err(),
            HomViolation::ImageOutside(5)
        );
        // respects E and D but not the law: 3 ↦ 0, 5 ↦ 5 gives f(5.0).e = 0 but f(5).f(0) = 3
        assert_eq!(
            is_partial_hom(&g, &g, &[0, 2, 0, 5]).unwrap_err(),
            HomViolation::LawNotPreserved(0, 5)
        );
    }

    #[test]
    fn anatomy_examples() {
        let g = z6_instance();
        let p = support_projection(&g);
        let an = hom_anatomy(&p);
        assert_eq!(an.default_kernel, set(&[0, 2]));
        assert_eq!(an.kernel, set(&[0, 2]));
        assert_eq!(an.image, set(&[0, 3]));
        assert_eq!(an.verify(&p), Ok(()));

        let id = identity_hom(&g);
        let an = hom_anatomy(&id);
        assert_eq!(an.default_kernel, g.defect());
        assert_eq!(an.kernel, set(&[0]));
        assert_eq!(an.image, g.carrier());

        let t = trivial_instance();
        let to_trivial = hom_from_fn(&g, &t, |_| 0).unwrap();
        assert_eq!(hom_anatomy(&to_trivial).kernel, g.carrier());
    }

    #[test]
    fn mm3_examples() {
        let g = z6_instance();
        assert!(check_mm3_properties(&support_projection(&g)).all_hold());
        assert!(check_mm3_properties(&identity_hom(&g)).all_hold());
    }

    #[test]
    fn inverse_hom_examples() {
        let g = z6_instance();
        let inv = check_inverse_hom(&identity_hom(&g)).unwrap().unwrap();
        assert_eq!(inv.image_tuple(), g.carrier().to_vec());
        assert_eq!(
            check_inverse_hom(&support_projection(&g)).unwrap_err(),
            MorphismError::HypothesisUnmet(InverseHypothesis::Bijective)
        );
        let bijections: Vec<_> = enumerate_partial_homs(&g, &g, HomBudget::default())
            .unwrap()
            .into_iter()
            .filter(PartialHom::is_bijective)
            .collect();
        assert!(!bijections.is_empty());
        for f in &bijections {
            if let Ok(inner) = check_inverse_hom(f) {
                assert!(inner.is_ok());
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = z6_instance();
        let homs = enumerate_partial_homs(&g, &g, HomBudget::default()).unwrap();
        assert_eq!(homs.len(), brute_force_count(&g, &g));
        assert_eq!(homs.len(), 8);
        let tuples: Vec<Vec<Elem>> = homs.iter().map(PartialHom::image_tuple).collect();
        assert!(tuples.contains(&vec![0, 2, 3, 5]));
        assert!(tuples.contains(&vec![0, 0, 3, 3]));
        assert!(tuples.windows(2).all(|w| w[0] < w[1]));

        let s3 = Arc::new(catalog::symmetric(3));
        let s3g = PartialGroup::plain(s3);
        let z2 = PartialGroup::plain(Arc::new(catalog::cyclic(2)));
        for (a, b) in [(&g, &z2), (&z2, &g), (&s3g, &z2), (&z2, &s3g), (&s3g, &g)] {
            let n = enumerate_partial_homs(a, b, HomBudget::default()).unwrap().len();
            assert_eq!(n, brute_force_count(a, b));
        }
    }

    #[test]
    fn trivial_ends() {
        let g = z6_instance();
        let t = trivial_instance();
        assert_eq!(enumerate_partial_homs(&g, &t, HomBudget::default()).unwrap().len(), 1);
        assert_eq!(enumerate_partial_homs(&t, &g, HomBudget::default()).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let big = PartialGroup::plain(Arc::new(catalog::cyclic(9)));
        assert!(matches!(
            enumerate_partial_homs(&big, &big, HomBudget::default()),
            Err(MorphismError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn composites_are_homs() {
        let g = z6_instance();
        let homs = enumerate_partial_homs(&g, &g, HomBudget::default()).unwrap();
        for f in &homs {
            for h in &homs {
                assert!(compose(f, h).is_ok());
            }
        }
    }
}
