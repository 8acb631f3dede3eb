//! Finite groups given by Cayley tables.
//!
//! Elements are dense indices `0..n`. `table[i][j]` is the product `i∘j`
//! (row = left factor). Everything above this module works on index sets and
//! never on element values.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::elemset::{Elem, ElemSet, MAX_ORDER};

/// Default bound on the order of groups that are fed to exhaustive searches.
pub const DEFAULT_ORDER_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("not closed: entry ({row}, {col}) = {value} is outside [0, {order})")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("expected {expected} element names, got {got}")]
    NamesLength { expected: usize, got: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("element name {0:?} is empty or contains whitespace, ',' or ':'")]
    BadName(String),
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("element {0} is outside the group")]
    NotAnElement(Elem),
    #[error("{0} is not a subgroup")]
    NotSubgroup(ElemSet),
    #[error("not normal: conjugating by {witness} moves the subgroup")]
    NotNormal { witness: Elem },
}

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Validates a raw Cayley table and locates identity and inverses.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotClosed {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
                table.push(v);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse.push(inv);
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        Ok(GroupTable {
            order: n,
            table,
            identity,
            inverse,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GroupError> {
        if names.len() != self.order {
            return Err(GroupError::NamesLength {
                expected: self.order,
                got: names.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(|c: char| c.is_whitespace() || c == ',' || c == ':') {
                return Err(GroupError::BadName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(GroupError::DuplicateName(n.clone()));
            }
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element; the index itself when the table is unnamed.
    pub fn name(&self, a: Elem) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn lookup_name(&self, name: &str) -> Option<Elem> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elementwise product `A∘B`.
    pub fn product_set(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `x⁻¹ S x`.
    pub fn conjugate_set(&self, s: ElemSet, x: Elem) -> ElemSet {
        let xi = self.inv(x);
        s.iter().map(|h| self.mul(self.mul(xi, h), x)).collect()
    }

    pub fn left_coset(&self, x: Elem, s: ElemSet) -> ElemSet {
        s.iter().map(|h| self.mul(x, h)).collect()
    }

    pub fn right_coset(&self, s: ElemSet, x: Elem) -> ElemSet {
        s.iter().map(|h| self.mul(h, x)).collect()
    }

    fn check_cap(&self, cap: usize) -> Result<(), GroupError> {
        if self.order > cap {
            Err(GroupError::OrderCapExceeded {
                order: self.order,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

/// A subgroup, stored as its element set in the parent's indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgroupSet(ElemSet);

impl SubgroupSet {
    /// Checks identity, closure and inverses.
    pub fn new(g: &GroupTable, set: ElemSet) -> Result<Self, GroupError> {
        if !set.is_subset(g.elements()) || !set.contains(g.identity()) {
            return Err(GroupError::NotSubgroup(set));
        }
        for a in set {
            if !set.contains(g.inv(a)) || set.iter().any(|b| !set.contains(g.mul(a, b))) {
                return Err(GroupError::NotSubgroup(set));
            }
        }
        Ok(SubgroupSet(set))
    }

    pub fn trivial(g: &GroupTable) -> Self {
        SubgroupSet(ElemSet::singleton(g.identity()))
    }

    pub fn whole(g: &GroupTable) -> Self {
        SubgroupSet(g.elements())
    }

    pub fn set(&self) -> ElemSet {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.0.contains(a)
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure(g: &GroupTable, gens: ElemSet) -> SubgroupSet {
    let gens = gens.intersection(g.elements());
    let mut set = ElemSet::singleton(g.identity());
    let mut queue: VecDeque<Elem> = VecDeque::from([g.identity()]);
    while let Some(a) = queue.pop_front() {
        for s in gens {
            let b = g.mul(a, s);
            if set.insert(b) {
                queue.push_back(b);
            }
        }
    }
    // finite: closure under right multiplication by generators already
    // contains all inverses
    SubgroupSet(set)
}

/// All subgroups in canonical order (size, then lexicographic).
pub fn all_subgroups(g: &GroupTable, cap: usize) -> Result<Vec<SubgroupSet>, GroupError> {
    g.check_cap(cap)?;
    subgroups_of(g, g.elements())
}

/// All subgroups of `g` contained in the subgroup `within`.
pub fn subgroups_of(g: &GroupTable, within: ElemSet) -> Result<Vec<SubgroupSet>, GroupError> {
    let mut cyclic: Vec<ElemSet> = Vec::new();
    for a in within {
        let c = subgroup_closure(g, ElemSet::singleton(a)).set();
        if !cyclic.contains(&c) {
            cyclic.push(c);
        }
    }
    let mut found: Vec<ElemSet> = cyclic.clone();
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                if c.is_subset(*s) {
                    continue;
                }
                let j = subgroup_closure(g, s.union(*c)).set();
                if !found.contains(&j) {
                    found.push(j);
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(ElemSet::canonical_cmp);
    Ok(found.into_iter().map(SubgroupSet).collect())
}

/// `Ok(())` when `f` is normal in `ambient`; otherwise the first `x` with `x⁻¹Fx ≠ F`.
pub fn check_normal(g: &GroupTable, ambient: ElemSet, f: ElemSet) -> Result<(), Elem> {
    match ambient.iter().find(|&x| g.conjugate_set(f, x) != f) {
        Some(x) => Err(x),
        None => Ok(()),
    }
}

/// The quotient `E/F` of a subgroup `E` of `parent` by a normal subgroup `F ≤ E`.
#[derive(Debug, Clone)]
pub struct GroupQuotient {
    ambient: ElemSet,
    normal: ElemSet,
    cosets: Vec<ElemSet>,
    table: GroupTable,
    projection: Vec<Option<usize>>,
}

impl GroupQuotient {
    pub fn ambient(&self) -> ElemSet {
        self.ambient
    }

    pub fn normal(&self) -> ElemSet {
        self.normal
    }

    /// Coset blocks, indexed by quotient element; ordered by minimal representative.
    pub fn cosets(&self) -> &[ElemSet] {
        &self.cosets
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    /// Coset index of an element of the ambient subgroup.
    pub fn project(&self, a: Elem) -> Option<usize> {
        self.projection.get(a).copied().flatten()
    }

    /// Index of the coset equal to `block`, if any.
    pub fn coset_index(&self, block: ElemSet) -> Option<usize> {
        self.cosets.iter().position(|&c| c == block)
    }

    /// Projection as a map on the ambient subgroup.
    pub fn projection_map(&self) -> GroupMap {
        let images = self
            .projection
            .iter()
            .map(|p| p.unwrap_or(usize::MAX))
            .collect();
        GroupMap::new(self.ambient, images)
    }
}

pub fn group_quotient(
    g: &GroupTable,
    ambient: ElemSet,
    normal: ElemSet,
) -> Result<GroupQuotient, GroupError> {
    let e_sub = SubgroupSet::new(g, ambient)?;
    let f_sub = SubgroupSet::new(g, normal)?;
    if !f_sub.set().is_subset(e_sub.set()) {
        return Err(GroupError::NotSubgroup(normal));
    }
    check_normal(g, ambient, normal).map_err(|witness| GroupError::NotNormal { witness })?;

    let mut cosets = Vec::new();
    let mut projection = vec![None; g.order()];
    for x in ambient {
        if projection[x].is_none() {
            let block = g.left_coset(x, normal);
            for y in block {
                projection[y] = Some(cosets.len());
            }
            cosets.push(block);
        }
    }
    let k = cosets.len();
    let mut rows = vec![vec![0usize; k]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let prod = g.mul(cosets[i].min().unwrap(), cosets[j].min().unwrap());
            *cell = projection[prod].expect("product stays in the ambient subgroup");
        }
    }
    let names = cosets.iter().map(|c| format!("[{}]", g.name(c.min().unwrap()))).collect();
    let table = GroupTable::from_rows(&rows)
        .and_then(|t| t.with_names(names))
        .expect("quotient by a normal subgroup is a group");
    Ok(GroupQuotient {
        ambient,
        normal,
        cosets,
        table,
        projection,
    })
}

/// A map defined on a subgroup `domain` of some source table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    domain: ElemSet,
    images: Vec<Elem>,
}

impl GroupMap {
    /// `images` is indexed by source element; only entries on `domain` are read.
    pub fn new(domain: ElemSet, images: Vec<Elem>) -> Self {
        GroupMap { domain, images }
    }

    pub fn identity(g: &GroupTable) -> Self {
        GroupMap::new(g.elements(), (0..g.order()).collect())
    }

    pub fn domain(&self) -> ElemSet {
        self.domain
    }

    pub fn image(&self, a: Elem) -> Elem {
        debug_assert!(self.domain.contains(a));
        self.images[a]
    }

    pub fn image_set(&self) -> ElemSet {
        self.domain.iter().map(|a| self.images[a]).collect()
    }

    pub fn kernel(&self, target: &GroupTable) -> ElemSet {
        self.domain
            .iter()
            .filter(|&a| self.images[a] == target.identity())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.domain.len()
    }

    /// Images listed in ascending domain order.
    pub fn image_tuple(&self) -> Vec<Elem> {
        self.domain.iter().map(|a| self.images[a]).collect()
    }
}

/// Checks `f(xy) = f(x)f(y)` on every pair of the domain; returns the first failing pair.
pub fn check_group_hom(
    source: &GroupTable,
    target: &GroupTable,
    f: &GroupMap,
) -> Result<(), (Elem, Elem)> {
    for x in f.domain() {
        if f.images[x] >= target.order() {
            return Err((x, x));
        }
    }
    for x in f.domain() {
        for y in f.domain() {
            let xy = source.mul(x, y);
            if !f.domain().contains(xy)
                || f.image(xy) != target.mul(f.image(x), f.image(y))
            {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

/// Greedy generating set of a subgroup: repeatedly add the element of
/// largest order outside the current span.
pub fn generators(g: &GroupTable, within: ElemSet) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = ElemSet::singleton(g.identity());
    while span != within {
        let next = within
            .difference(span)
            .iter()
            .max_by_key(|&a| (g.element_order(a), std::cmp::Reverse(a)))
            .expect("within is a subgroup strictly larger than span");
        gens.push(next);
        span = subgroup_closure(g, span.union(ElemSet::singleton(next))).set();
    }
    gens
}

/// Extends generator images to a map on `⟨gens⟩` along a breadth-first
/// spanning tree; `None` when two words for the same element disagree.
fn extend_from_generators(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[Elem],
    imgs: &[Elem],
) -> Option<Vec<Elem>> {
    let mut map = vec![usize::MAX; a.order()];
    map[a.identity()] = b.identity();
    let mut queue = VecDeque::from([a.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = a.mul(x, s);
            let fy = b.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// All homomorphisms `domain → b`, where `domain` is a subgroup of `a`.
pub fn group_homs(a: &GroupTable, domain: ElemSet, b: &GroupTable) -> Vec<GroupMap> {
    let gens = generators(a, domain);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let k = a.element_order(s);
            (0..b.order())
                .filter(|&t| k.is_multiple_of(b.element_order(t)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs = vec![0; gens.len()];
    homs_rec(a, b, domain, &gens, &candidates, 0, &mut imgs, &mut out);
    out.sort_by_key(GroupMap::image_tuple);
    out
}

#[allow(clippy::too_many_arguments)]
fn homs_rec(
    a: &GroupTable,
    b: &GroupTable,
    domain: ElemSet,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    depth: usize,
    imgs: &mut Vec<Elem>,
    out: &mut Vec<GroupMap>,
) {
    if depth == gens.len() {
        if let Some(map) = extend_from_generators(a, b, gens, imgs) {
            let f = GroupMap::new(domain, map);
            if check_group_hom(a, b, &f).is_ok() {
                out.push(f);
            }
        }
        return;
    }
    for &t in &candidates[depth] {
        imgs[depth] = t;
        homs_rec(a, b, domain, gens, candidates, depth + 1, imgs, out);
    }
}

/// A bijective homomorphism `a → b`, if one exists.
pub fn find_isomorphism(
    a: &GroupTable,
    b: &GroupTable,
    cap: usize,
) -> Result<Option<GroupMap>, GroupError> {
    a.check_cap(cap)?;
    b.check_cap(cap)?;
    if a.order() != b.order() {
        return Ok(None);
    }
    let mut order_profile_a: Vec<usize> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let mut order_profile_b: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    order_profile_a.sort_unstable();
    order_profile_b.sort_unstable();
    if order_profile_a != order_profile_b {
        return Ok(None);
    }
    let gens = generators(a, a.elements());
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let k = a.element_order(s);
            (0..b.order()).filter(|&t| b.element_order(t) == k).collect()
        })
        .collect();
    let mut imgs = vec![0; gens.len()];
    Ok(iso_rec(a, b, &gens, &candidates, 0, &mut imgs))
}

fn iso_rec(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    depth: usize,
    imgs: &mut Vec<Elem>,
) -> Option<GroupMap> {
    if depth == gens.len() {
        let map = extend_from_generators(a, b, gens, imgs)?;
        let f = GroupMap::new(a.elements(), map);
        return (f.is_injective() && check_group_hom(a, b, &f).is_ok()).then_some(f);
    }
    for &t in &candidates[depth] {
        imgs[depth] = t;
        if let Some(f) = iso_rec(a, b, gens, candidates, depth + 1, imgs) {
            return Some(f);
        }
    }
    None
}

/// The subgroup `h` as a standalone table, with the map from new indices
/// back to parent indices.
pub fn subgroup_table(g: &GroupTable, h: ElemSet) -> (GroupTable, Vec<Elem>) {
    let back: Vec<Elem> = h.to_vec();
    let mut fwd = vec![usize::MAX; g.order()];
    for (i, &a) in back.iter().enumerate() {
        fwd[a] = i;
    }
    let rows: Vec<Vec<Elem>> = back
        .iter()
        .map(|&a| back.iter().map(|&b| fwd[g.mul(a, b)]).collect())
        .collect();
    let names = back.iter().map(|&a| g.name(a)).collect();
    let t = GroupTable::from_rows(&rows)
        .and_then(|t| t.with_names(names))
        .expect("subgroup of a group is a group");
    (t, back)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli_io::catalog;

    fn set(v: &[Elem]) -> ElemSet {
        v.iter().copied().collect()
    }

    fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn validates_cyclic_tables() {
        let z6 = GroupTable::from_rows(&cyclic_rows(6)).unwrap();
        assert_eq!(z6.identity(), 0);
        assert_eq!(z6.inv(2), 4);
        let z2 = GroupTable::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn rejects_duplicate_in_row() {
        // any table with the row [0,1,1] has no identity: e∘x = x forces e's row to be 0,1,2
        let err = GroupTable::from_rows(&[vec![0, 1, 2], vec![1, 2, 0], vec![0, 1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);
        let err = GroupTable::from_rows(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse(1));
    }

    #[test]
    fn rejects_out_of_range_and_ragged() {
        assert!(matches!(
            GroupTable::from_rows(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::NotClosed { row: 0, col: 1, value: 2, .. })
        ));
        assert!(matches!(
            GroupTable::from_rows(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // a loop of order 5 with identity and inverses, but not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupTable::from_rows(&rows),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let z6 = catalog::cyclic(6);
        assert_eq!(subgroup_closure(&z6, set(&[2])).set(), set(&[0, 2, 4]));
        assert_eq!(subgroup_closure(&z6, ElemSet::EMPTY).set(), set(&[0]));
        let s3 = catalog::symmetric(3);
        let t = s3.lookup_name("(12)").unwrap();
        assert_eq!(subgroup_closure(&s3, ElemSet::singleton(t)).order(), 2);
    }

    #[test]
    fn subgroup_counts() {
        let z6 = catalog::cyclic(6);
        let subs: Vec<Vec<Elem>> = all_subgroups(&z6, 32)
            .unwrap()
            .iter()
            .map(|s| s.set().to_vec())
            .collect();
        assert_eq!(
            subs,
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
        assert_eq!(all_subgroups(&catalog::cyclic(2), 32).unwrap().len(), 2);
        let s3 = all_subgroups(&catalog::symmetric(3), 32).unwrap();
        let sizes: Vec<usize> = s3.iter().map(SubgroupSet::order).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        // oracle: test every subset of the group for closure
        for g in [catalog::cyclic(6), catalog::symmetric(3), catalog::klein(), catalog::quaternion()] {
            let n = g.order();
            let mut brute: Vec<ElemSet> = (0u64..(1 << n))
                .map(ElemSet::from_bits)
                .filter(|&s| SubgroupSet::new(&g, s).is_ok())
                .collect();
            brute.sort_by(ElemSet::canonical_cmp);
            let fast: Vec<ElemSet> = all_subgroups(&g, 32).unwrap().iter().map(|s| s.set()).collect();
            assert_eq!(fast, brute);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let z12 = catalog::cyclic(12);
        assert_eq!(
            all_subgroups(&z12, 8),
            Err(GroupError::OrderCapExceeded { order: 12, cap: 8 })
        );
    }

    #[test]
    fn quotient_examples() {
        let z6 = catalog::cyclic(6);
        let q = group_quotient(&z6, z6.elements(), set(&[0, 3])).unwrap();
        assert_eq!(q.cosets(), &[set(&[0, 3]), set(&[1, 4]), set(&[2, 5])]);
        let z3 = catalog::cyclic(3);
        assert!(find_isomorphism(q.table(), &z3, 32).unwrap().is_some());
        assert_eq!(check_group_hom(&z6, q.table(), &q.projection_map()), Ok(()));
        assert_eq!(q.projection_map().kernel(q.table()), set(&[0, 3]));

        let trivial = group_quotient(&z6, z6.elements(), set(&[0])).unwrap();
        assert!(find_isomorphism(trivial.table(), &z6, 32).unwrap().is_some());

        let s3 = catalog::symmetric(3);
        let t = s3.lookup_name("(12)").unwrap();
        let h = subgroup_closure(&s3, ElemSet::singleton(t)).set();
        assert!(matches!(
            group_quotient(&s3, s3.elements(), h),
            Err(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn hom_examples() {
        let z6 = catalog::cyclic(6);
        let z2 = catalog::cyclic(2);
        assert_eq!(check_group_hom(&z6, &z6, &GroupMap::identity(&z6)), Ok(()));
        let mod2 = GroupMap::new(z6.elements(), (0..6).map(|x| x % 2).collect());
        assert_eq!(check_group_hom(&z6, &z2, &mod2), Ok(()));
        let shift = GroupMap::new(z6.elements(), (0..6).map(|x| (x + 1) % 6).collect());
        assert_eq!(check_group_hom(&z6, &z6, &shift), Err((0, 0)));
    }

    #[test]
    fn isomorphism_examples() {
        let z6 = catalog::cyclic(6);
        let z2z3 = catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(3));
        let f = find_isomorphism(&z6, &z2z3, 32).unwrap().unwrap();
        assert!(f.is_injective());
        assert_eq!(check_group_hom(&z6, &z2z3, &f), Ok(()));
        assert!(find_isomorphism(&catalog::cyclic(4), &catalog::klein(), 32)
            .unwrap()
            .is_none());
        let z1 = catalog::cyclic(1);
        assert_eq!(
            find_isomorphism(&z1, &z1, 32).unwrap(),
            Some(GroupMap::identity(&z1))
        );
        // same order profile, not isomorphic: Z4xZ2... vs D4 differ; Q8 vs D4 differ in profile too.
        // Z3xZ3 against Z9 fails on profile; S3 against Z6 on profile as well.
        assert!(find_isomorphism(&catalog::symmetric(3), &z6, 32).unwrap().is_none());
    }

    #[test]
    fn hom_count_matches_brute_force() {
        // oracle: all maps Z4 -> Z2xZ2 filtered by the hom property
        let a = catalog::cyclic(4);
        let b = catalog::klein();
        let mut brute = 0;
        for code in 0..4usize.pow(4) {
            let images: Vec<Elem> = (0..4).map(|i| (code / 4usize.pow(i)) % 4).collect();
            if check_group_hom(&a, &b, &GroupMap::new(a.elements(), images)).is_ok() {
                brute += 1;
            }
        }
        assert_eq!(brute, 4);
        assert_eq!(group_homs(&a, a.elements(), &b).len(), brute);
    }

    #[test]
    fn quotient_order_identity_over_catalog() {
        for (_, g) in catalog::default_catalog() {
            for e in all_subgroups(&g, 32).unwrap() {
                for f in subgroups_of(&g, e.set()).unwrap() {
                    if check_normal(&g, e.set(), f.set()).is_err() {
                        continue;
                    }
                    let q = group_quotient(&g, e.set(), f.set()).unwrap();
                    assert_eq!(e.order(), f.order() * q.order());
                    assert_eq!(check_group_hom(&g, q.table(), &q.projection_map()), Ok(()));
                    assert_eq!(q.projection_map().kernel(q.table()), f.set());
                }
            }
        }
    }
}
