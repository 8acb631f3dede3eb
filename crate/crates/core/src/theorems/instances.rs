//! Bounded enumeration of partial groups over a catalog of finite groups.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elemset::{Elem, ElemSet};
use crate::group_kernel::{all_subgroups, GroupError, GroupTable, SubgroupSet, DEFAULT_ORDER_CAP};
use crate::partial_core::{supplements_among, Freeness, PartialError, PartialGroup};

/// A partial group by name: ambient group spec, support elements, defect elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub group: String,
    pub support: Vec<Elem>,
    pub defect: Vec<Elem>,
}

impl InstanceSpec {
    pub fn new(group: impl Into<String>, support: ElemSet, defect: ElemSet) -> Self {
        InstanceSpec {
            group: group.into(),
            support: support.to_vec(),
            defect: defect.to_vec(),
        }
    }

    /// Builds the partial group inside an already resolved ambient table.
    pub fn build_in(&self, table: Arc<GroupTable>, mode: Freeness) -> Result<PartialGroup, PartialError> {
        let n = table.order();
        if let Some(&bad) = self.support.iter().chain(&self.defect).find(|&&a| a >= n) {
            return Err(GroupError::NotAnElement(bad).into());
        }
        let support = SubgroupSet::new(&table, self.support.iter().copied().collect())?;
        let defect = self.defect.iter().copied().collect();
        PartialGroup::build(table, support, defect, mode, DEFAULT_ORDER_CAP)
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Elem]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}:{}:{}", self.group, join(&self.support), join(&self.defect))
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub group: PartialGroup,
}

/// Subsets of `within` containing `e` with at most `max_size` elements, canonically ordered.
fn defect_candidates(within: ElemSet, e: Elem, max_size: usize) -> Vec<ElemSet> {
    let rest = within.difference(ElemSet::singleton(e)).bits();
    let mut out = Vec::new();
    let mut sub = rest;
    loop {
        if (sub.count_ones() as usize) < max_size {
            let mut d = ElemSet::from_bits(sub);
            d.insert(e);
            out.push(d);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    out.sort_by(ElemSet::canonical_cmp);
    out
}

/// Every `(Γ, E, D)` with `|Γ| ≤ max_order` from `catalog`, `E` a subgroup and
/// `D ∋ e` of size at most `max_defect` inside a supplement of `E` (strict
/// mode) or merely uniquely factorizing with `E` (weak mode).
///
/// Order: catalog order, then `E` canonically, then `D` canonically;
/// repeated triples are dropped.
pub fn enumerate_instances(
    catalog: &[(String, Arc<GroupTable>)],
    max_order: usize,
    max_defect: usize,
    mode: Freeness,
) -> Result<Vec<Instance>, GroupError> {
    if max_order > DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderCapExceeded {
            order: max_order,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (name, table) in catalog {
        if table.order() > max_order {
            continue;
        }
        let subs = all_subgroups(table, DEFAULT_ORDER_CAP)?;
        let id = table.identity();
        for e in &subs {
            let mut defects = Vec::new();
            match mode {
                Freeness::Strict => {
                    for sup in supplements_among(table, e, &subs) {
                        defects.extend(defect_candidates(sup.set(), id, max_defect));
                    }
                }
                Freeness::Weak => {
                    let outside = table.elements().difference(e.set());
                    defects.extend(defect_candidates(outside.union(ElemSet::singleton(id)), id, max_defect));
                }
            }
            defects.sort_by(ElemSet::canonical_cmp);
            for d in defects {
                if !seen.insert((name.clone(), e.set(), d)) {
                    continue;
                }
                match PartialGroup::build(table.clone(), *e, d, mode, DEFAULT_ORDER_CAP) {
                    Ok(group) => out.push(Instance {
                        spec: InstanceSpec::new(name.clone(), e.set(), d),
                        group,
                    }),
                    Err(PartialError::NotUniquelyFactorizable(_)) if mode == Freeness::Weak => {}
                    Err(PartialError::Group(g)) => return Err(g),
                    Err(other) => unreachable!("supplement subsets always build: {other}"),
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli_io::catalog;

    fn named(names: &[&str]) -> Vec<(String, Arc<GroupTable>)> {
        names
            .iter()
            .map(|n| (n.to_string(), Arc::new(catalog::parse_catalog(n).unwrap())))
            .collect()
    }

    #[test]
    fn order_two_gives_three_instances() {
        let cat = catalog::default_catalog()
            .into_iter()
            .map(|(n, t)| (n, Arc::new(t)))
            .collect::<Vec<_>>();
        let inst = enumerate_instances(&cat, 2, 4, Freeness::Strict).unwrap();
        let specs: Vec<String> = inst.iter().map(|i| i.spec.to_string()).collect();
        assert_eq!(specs, ["Z2:0:0", "Z2:0:0,1", "Z2:0,1:0"]);
    }

    #[test]
    fn running_instances_are_enumerated() {
        let inst = enumerate_instances(&named(&["Z6", "S3"]), 6, 4, Freeness::Strict).unwrap();
        let has = |g: &str, e: &[Elem], d: &[Elem]| {
            inst.iter()
                .any(|i| i.spec.group == g && i.spec.support == e && i.spec.defect == d)
        };
        assert!(has("Z6", &[0, 3], &[0, 2]));
        assert!(has("S3", &[0, 3, 4], &[0, 1]));
        assert!(has("S3", &[0, 1, 2, 3, 4, 5], &[0]));
        let unique: HashSet<_> = inst.iter().map(|i| i.spec.clone()).collect();
        assert_eq!(unique.len(), inst.len());
    }

    #[test]
    fn defect_one_is_plain() {
        let inst = enumerate_instances(&named(&["Z6", "S3", "Z2xZ2"]), 6, 1, Freeness::Strict).unwrap();
        assert!(inst.iter().all(|i| i.spec.defect == [0]));
        // one instance per subgroup: 4 + 6 + 5
        assert_eq!(inst.len(), 15);
    }

    #[test]
    fn weak_mode_is_a_superset() {
        let cat = named(&["Z4", "S3"]);
        let strict = enumerate_instances(&cat, 6, 3, Freeness::Strict).unwrap();
        let weak = enumerate_instances(&cat, 6, 3, Freeness::Weak).unwrap();
        let weak_specs: HashSet<_> = weak.iter().map(|i| i.spec.clone()).collect();
        assert!(strict.iter().all(|i| weak_specs.contains(&i.spec)));
        assert!(weak.len() > strict.len());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_instances(&[], 40, 2, Freeness::Strict),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn spec_round_trip() {
        let spec = InstanceSpec::new("Z6", [0, 3].into_iter().collect(), [0, 2].into_iter().collect());
        let g = spec.build_in(Arc::new(catalog::cyclic(6)), Freeness::Strict).unwrap();
        assert_eq!(g.carrier().to_vec(), vec![0, 2, 3, 5]);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<InstanceSpec>(&json).unwrap(), spec);
    }
}
