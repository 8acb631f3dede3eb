//! Supplements, free subsets and the partial group `G = E·D`.
//!
//! Given a finite group `Γ`, a subgroup `E` and a subset `D ∋ e` lying inside
//! some supplement `D̃` of `E` (`E ∩ D̃ = {e}`, `E·D̃ = Γ`), every `a ∈ E·D`
//! factors uniquely as `a = x∘d`. The partial law keeps only the support
//! parts: `a.b = x_a ∘ x_b`, so every product lands in `E`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::ensure;
use crate::group_kernel::{all_subgroups, subgroup_closure, GroupError, GroupMap, GroupTable, SubgroupSet};
use crate::witness::{Check, Counterexample};

const OUTSIDE: Elem = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the defect set must contain the identity")]
    IdentityMissing,
    #[error("the defect set is not free with the support: no supplement contains it")]
    NotFree,
    #[error("factorization over support x defect is not unique for element {0}")]
    NotUniquelyFactorizable(Elem),
    #[error("defect element {0} lies in the support")]
    DefectMeetsSupport(Elem),
    #[error("element {0} is not in the carrier")]
    NotInCarrier(Elem),
    #[error("exponent must be at least 1")]
    ZeroExponent,
}

/// Why two subgroups fail to be supplements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupplementViolation {
    /// A non-identity element of `E ∩ D̃`.
    Intersection(Elem),
    /// An element of `Γ` outside `E·D̃`.
    Uncovered(Elem),
}

/// Subgroups `E`, `D̃` of `Γ` with `E ∩ D̃ = {e}` and `E·D̃ = Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupplementPair {
    pub left: SubgroupSet,
    pub right: SubgroupSet,
}

pub fn check_supplement(
    g: &GroupTable,
    left: &SubgroupSet,
    right: &SubgroupSet,
) -> Result<SupplementPair, SupplementViolation> {
    if let Some(x) = left
        .set()
        .intersection(right.set())
        .iter()
        .find(|&x| x != g.identity())
    {
        return Err(SupplementViolation::Intersection(x));
    }
    let covered = g.product_set(left.set(), right.set());
    if let Some(a) = g.elements().difference(covered).min() {
        return Err(SupplementViolation::Uncovered(a));
    }
    Ok(SupplementPair {
        left: *left,
        right: *right,
    })
}

/// All supplements of `e` in `g`, in canonical order.
pub fn find_supplements(
    g: &GroupTable,
    e: &SubgroupSet,
    cap: usize,
) -> Result<Vec<SubgroupSet>, GroupError> {
    let subs = all_subgroups(g, cap)?;
    Ok(supplements_among(g, e, &subs))
}

pub(crate) fn supplements_among(
    g: &GroupTable,
    e: &SubgroupSet,
    subgroups: &[SubgroupSet],
) -> Vec<SubgroupSet> {
    subgroups
        .iter()
        .filter(|d| d.order() * e.order() == g.order() && check_supplement(g, e, d).is_ok())
        .copied()
        .collect()
}

/// First supplement of `e` (canonical order) containing `d`, if any.
pub fn check_free(
    g: &GroupTable,
    e: &SubgroupSet,
    d: ElemSet,
    cap: usize,
) -> Result<Option<SubgroupSet>, PartialError> {
    if !d.contains(g.identity()) {
        return Err(PartialError::IdentityMissing);
    }
    Ok(find_supplements(g, e, cap)?
        .into_iter()
        .find(|s| d.is_subset(s.set())))
}

/// How freeness of the defect is established when building a partial group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Freeness {
    /// A supplement subgroup containing the defect must exist.
    #[default]
    Strict,
    /// Only unique factorization over `E × D` is required.
    Weak,
}

/// A partial group `G = E·D` inside an ambient group `Γ`.
///
/// Elements of the carrier keep their `Γ` indices.
#[derive(Debug, Clone)]
pub struct PartialGroup {
    parent: Arc<GroupTable>,
    support: SubgroupSet,
    defect: ElemSet,
    supplement: Option<SubgroupSet>,
    carrier: ElemSet,
    support_part: Vec<Elem>,
    defect_part: Vec<Elem>,
}

impl PartialGroup {
    /// Builds `E·D`, checking that `D` is free with `E` under `mode`.
    pub fn build(
        parent: Arc<GroupTable>,
        support: SubgroupSet,
        defect: ElemSet,
        mode: Freeness,
        cap: usize,
    ) -> Result<Self, PartialError> {
        let g = &*parent;
        if !defect.contains(g.identity()) {
            return Err(PartialError::IdentityMissing);
        }
        if let Some(bad) = defect.difference(g.elements()).min() {
            return Err(GroupError::NotAnElement(bad).into());
        }
        if let Some(d) = defect
            .intersection(support.set())
            .iter()
            .find(|&d| d != g.identity())
        {
            return Err(PartialError::DefectMeetsSupport(d));
        }
        let supplement = match check_free(g, &support, defect, cap) {
            Ok(Some(s)) => Some(s),
            Ok(None) if mode == Freeness::Weak => None,
            Ok(None) => return Err(PartialError::NotFree),
            Err(PartialError::Group(GroupError::OrderCapExceeded { .. })) if mode == Freeness::Weak => None,
            Err(e) => return Err(e),
        };

        let mut support_part = vec![OUTSIDE; g.order()];
        let mut defect_part = vec![OUTSIDE; g.order()];
        let mut carrier = ElemSet::EMPTY;
        for x in support.set() {
            for d in defect {
                let a = g.mul(x, d);
                if !carrier.insert(a) {
                    // only reachable in weak mode: a supplement forces uniqueness
                    return Err(PartialError::NotUniquelyFactorizable(a));
                }
                support_part[a] = x;
                defect_part[a] = d;
            }
        }
        Ok(PartialGroup {
            parent,
            support,
            defect,
            supplement,
            carrier,
            support_part,
            defect_part,
        })
    }

    /// A group as a partial group with defect `{e}`.
    pub fn plain(parent: Arc<GroupTable>) -> Self {
        let whole = SubgroupSet::whole(&parent);
        let d = ElemSet::singleton(parent.identity());
        PartialGroup::build(parent, whole, d, Freeness::Strict, usize::MAX)
            .expect("a group is free with the trivial defect")
    }

    /// `K·L` for subgroups `K`, `L` with `L` free with `K`: melted in `K`.
    pub fn melted(
        parent: Arc<GroupTable>,
        k: SubgroupSet,
        l: SubgroupSet,
        cap: usize,
    ) -> Result<Self, PartialError> {
        PartialGroup::build(parent, k, l.set(), Freeness::Strict, cap)
    }

    /// `{e}·K`: support trivial, defect the subgroup `K`.
    pub fn totally_melted(
        parent: Arc<GroupTable>,
        k: SubgroupSet,
        cap: usize,
    ) -> Result<Self, PartialError> {
        let trivial = SubgroupSet::trivial(&parent);
        PartialGroup::build(parent, trivial, k.set(), Freeness::Strict, cap)
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn parent_arc(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    /// The support `E`.
    pub fn support(&self) -> ElemSet {
        self.support.set()
    }

    pub fn support_subgroup(&self) -> SubgroupSet {
        self.support
    }

    /// The defect `D`.
    pub fn defect(&self) -> ElemSet {
        self.defect
    }

    /// The supplement `D̃ ⊇ D` witnessing freeness (absent only in weak mode).
    pub fn supplement(&self) -> Option<SubgroupSet> {
        self.supplement
    }

    pub fn carrier(&self) -> ElemSet {
        self.carrier
    }

    pub fn identity(&self) -> Elem {
        self.parent.identity()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.carrier.contains(a)
    }

    fn require(&self, a: Elem) -> Result<(), PartialError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(PartialError::NotInCarrier(a))
        }
    }

    /// `x` in `a = x∘d`. Panics outside the carrier.
    #[inline]
    pub fn support_part(&self, a: Elem) -> Elem {
        let x = self.support_part[a];
        assert!(x != OUTSIDE, "element {a} is not in the carrier");
        x
    }

    /// `d` in `a = x∘d`. Panics outside the carrier.
    #[inline]
    pub fn defect_part(&self, a: Elem) -> Elem {
        let d = self.defect_part[a];
        assert!(d != OUTSIDE, "element {a} is not in the carrier");
        d
    }

    /// The unique `(x, d) ∈ E × D` with `a = x∘d`.
    pub fn factorize(&self, a: Elem) -> Result<(Elem, Elem), PartialError> {
        self.require(a)?;
        Ok((self.support_part[a], self.defect_part[a]))
    }

    /// The partial law on carrier elements. Panics outside the carrier.
    #[inline]
    pub fn dot(&self, a: Elem, b: Elem) -> Elem {
        self.parent.mul(self.support_part(a), self.support_part(b))
    }

    /// `a.b = x_a ∘ x_b`.
    pub fn partial_mul(&self, a: Elem, b: Elem) -> Result<Elem, PartialError> {
        self.require(a)?;
        self.require(b)?;
        Ok(self.dot(a, b))
    }

    /// Which branch of the explicit case definition a pair falls under.
    pub fn law_case(&self, a: Elem, b: Elem) -> LawCase {
        let e = self.support();
        let d = self.defect;
        let outside = |z: Elem| !e.contains(z) && !d.contains(z);
        if e.contains(a) && e.contains(b) {
            LawCase::BothSupport
        } else if e.contains(a) && d.contains(b) {
            LawCase::SupportDefect
        } else if d.contains(a) && e.contains(b) {
            LawCase::DefectSupport
        } else if d.contains(a) && d.contains(b) {
            LawCase::BothDefect
        } else if outside(a) && outside(b) {
            LawCase::BothOutside
        } else {
            LawCase::Mixed
        }
    }

    /// The partial law evaluated branch by branch: the `Γ` product on `E × E`,
    /// `a` on `E × D`, `b` on `D × E`, `e` on `D × D`, and `x_a x_b` otherwise.
    pub fn case_table_mul(&self, a: Elem, b: Elem) -> Result<Elem, PartialError> {
        self.require(a)?;
        self.require(b)?;
        Ok(match self.law_case(a, b) {
            LawCase::BothSupport => self.parent.mul(a, b),
            LawCase::SupportDefect => a,
            LawCase::DefectSupport => b,
            LawCase::BothDefect => self.identity(),
            // the explicit list has no branch for a pair with exactly one
            // factor outside E ∪ D; fall back to the defining formula
            LawCase::BothOutside | LawCase::Mixed => {
                self.parent.mul(self.support_part[a], self.support_part[b])
            }
        })
    }

    /// `a.e`, which is the support part of `a`.
    pub fn dot_identity(&self, a: Elem) -> Result<Elem, PartialError> {
        self.partial_mul(a, self.identity())
    }

    /// `Inv(a) = { x⁻¹∘d′ : d′ ∈ D }` where `a = x∘d`.
    pub fn inv_set(&self, a: Elem) -> Result<ElemSet, PartialError> {
        self.require(a)?;
        Ok(self.inv_set_of(a))
    }

    pub(crate) fn inv_set_of(&self, a: Elem) -> ElemSet {
        let xi = self.parent.inv(self.support_part(a));
        self.defect.iter().map(|d| self.parent.mul(xi, d)).collect()
    }

    /// A canonical partial inverse: `x⁻¹`, the member of `Inv(a)` with trivial defect part.
    pub fn canonical_inverse(&self, a: Elem) -> Elem {
        self.parent.inv(self.support_part(a))
    }

    /// `a.a.….a` (`n` factors) `= x^n`. For `n = 1` this is `x`, not `a`.
    pub fn partial_power(&self, a: Elem, n: u64) -> Result<Elem, PartialError> {
        self.require(a)?;
        if n == 0 {
            return Err(PartialError::ZeroExponent);
        }
        Ok(self.parent.pow(self.support_part(a), n))
    }

    /// `true` when the partial law is commutative on the carrier.
    pub fn is_abelian(&self) -> bool {
        let e = self.support();
        e.iter()
            .all(|x| e.iter().all(|y| self.parent.mul(x, y) == self.parent.mul(y, x)))
    }

    /// Classes of `a ∼ b ⟺ x_a = x_b`, i.e. the sets `x·D`.
    pub fn free_classes(&self) -> FreeClassPartition {
        let mut blocks = Vec::new();
        let mut class_of = vec![OUTSIDE; self.parent.order()];
        for x in self.support() {
            let block: ElemSet = self.defect.iter().map(|d| self.parent.mul(x, d)).collect();
            for a in block {
                class_of[a] = blocks.len();
            }
            blocks.push(block);
        }
        FreeClassPartition { blocks, class_of }
    }

    /// The class group `G/∼` with `ā * b̄ = (a.b)‾`, and `π: E → G/∼`.
    ///
    /// Well-definedness is checked over every pair of representatives; a
    /// failure comes back as a counterexample instead of a panic.
    pub fn quotient_by_free_relation(&self) -> Result<FreeQuotient, Counterexample> {
        let classes = self.free_classes();
        let k = classes.blocks.len();
        let mut rows = vec![vec![OUTSIDE; k]; k];
        for a in self.carrier {
            for b in self.carrier {
                let (i, j) = (classes.class_of[a], classes.class_of[b]);
                let c = classes.class_of[self.dot(a, b)];
                ensure!(c != OUTSIDE, [a, b], "product leaves the carrier");
                if rows[i][j] == OUTSIDE {
                    rows[i][j] = c;
                } else {
                    ensure!(rows[i][j] == c, [a, b], "class product depends on representatives");
                }
            }
        }
        let table = GroupTable::from_rows(&rows)
            .map_err(|e| Counterexample::new(format!("class law is not a group: {e}"), []))?;
        let mut images = vec![OUTSIDE; self.parent.order()];
        for x in self.support() {
            images[x] = classes.class_of[x];
        }
        let pi = GroupMap::new(self.support(), images);
        Ok(FreeQuotient { table, classes, pi })
    }

    /// `⟨S⟩` for the partial law: the smallest partial subgroup containing `s`.
    pub fn generated_partial_subgroup(&self, s: ElemSet) -> ElemSet {
        let supports: ElemSet = s
            .intersection(self.carrier)
            .iter()
            .map(|a| self.support_part(a))
            .collect();
        let span = subgroup_closure(&self.parent, supports).set();
        s.intersection(self.carrier)
            .union(span)
            .union(ElemSet::singleton(self.identity()))
    }

    /// Indices as displayed by the parent's names.
    pub fn names_of(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|a| self.parent.name(a)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawCase {
    BothOutside,
    BothSupport,
    SupportDefect,
    DefectSupport,
    BothDefect,
    /// Exactly one factor outside `E ∪ D`.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeClassPartition {
    blocks: Vec<ElemSet>,
    class_of: Vec<usize>,
}

impl FreeClassPartition {
    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn class_of(&self, a: Elem) -> Option<usize> {
        self.class_of.get(a).copied().filter(|&c| c != OUTSIDE)
    }
}

#[derive(Debug, Clone)]
pub struct FreeQuotient {
    pub table: GroupTable,
    pub classes: FreeClassPartition,
    pub pi: GroupMap,
}

/// Brute-force factorization count: the number of `(x, d) ∈ E × D` with `a = x∘d`.
pub fn factorization_count(g: &PartialGroup, a: Elem) -> usize {
    let gamma = g.parent();
    g.support()
        .iter()
        .flat_map(|x| g.defect().iter().map(move |d| (x, d)))
        .filter(|&(x, d)| gamma.mul(x, d) == a)
        .count()
}

/// Checks unique factorization against the stored maps by scanning `E × D`.
pub fn check_unique_factorization(g: &PartialGroup) -> Check {
    for a in g.carrier() {
        let n = factorization_count(g, a);
        ensure!(n == 1, [a], "{n} factorizations");
        let (x, d) = (g.support_part(a), g.defect_part(a));
        ensure!(
            g.support().contains(x) && g.defect().contains(d) && g.parent().mul(x, d) == a,
            [a, x, d],
            "stored factorization is wrong"
        );
    }
    Ok(())
}
