//! Constructive checks of the three isomorphism theorems.
//!
//! Quotients `G/K` are realized as `E/F` with `F = E ∩ K`, so every map
//! below is a map between [`GroupQuotient`]s and the checks are ordinary
//! group-isomorphism checks, done over every representative.

use thiserror::Error;

use crate::elemset::{Elem, ElemSet};
use crate::ensure;
use crate::group_kernel::{check_normal, group_quotient, GroupQuotient};
use crate::morphisms::{hom_anatomy, PartialHom};
use crate::substructures::{is_normal_partial, partial_quotient, product_subgroups, PartialSubgroup};
use crate::witness::{Check, Counterexample};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("not a normal partial subgroup: cosets of {witness} differ")]
    NotNormal { witness: Elem },
    #[error("N is not contained in K: {0} is missing")]
    NotNested(Elem),
    #[error("partial subgroups live in different partial groups")]
    DifferentAmbient,
}

/// Which subgroup of the source the first theorem quotients by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelChoice {
    /// `K̃ = f⁻¹(D₂)`.
    Default,
    /// `Ker(f) = f⁻¹(e₂)`.
    Ordinary,
}

/// How the induced map on classes is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducedMap {
    /// `aK ↦ f(a).e`, landing in the support of the image.
    SupportPart,
    /// `aK ↦ f(a)`, landing in the image itself.
    Raw,
}

fn group_err(what: &str, e: impl std::fmt::Display) -> Counterexample {
    Counterexample::new(format!("{what}: {e}"), [])
}

/// Representative (minimal element) of each quotient class, for witnesses.
fn rep(q: &GroupQuotient, i: usize) -> Elem {
    q.cosets()[i].min().expect("cosets are nonempty")
}

/// Collects the value of a class map over all representatives, failing on the
/// first class that receives two values.
fn class_values(
    classes: usize,
    reps: impl IntoIterator<Item = (Elem, usize, Elem)>,
) -> Result<Vec<Elem>, Counterexample> {
    let mut values: Vec<Option<(Elem, Elem)>> = vec![None; classes];
    for (a, class, value) in reps {
        match values[class] {
            None => values[class] = Some((a, value)),
            Some((b, prev)) => ensure!(prev == value, [b, a], "induced map is not well defined"),
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.map(|(_, x)| x).ok_or_else(|| Counterexample::new(format!("class {i} has no representative"), [])))
        .collect()
}

/// Checks that `phi` (class index ↦ class index) is a bijective group hom.
fn check_class_iso(src: &GroupQuotient, tgt: &GroupQuotient, phi: &[usize]) -> Check {
    let (s, t) = (src.table(), tgt.table());
    for i in 0..s.order() {
        for j in 0..s.order() {
            ensure!(
                phi[s.mul(i, j)] == t.mul(phi[i], phi[j]),
                [rep(src, i), rep(src, j)],
                "induced map is not a homomorphism"
            );
        }
    }
    check_bijective(phi.iter().copied(), tgt.order(), |i| rep(src, i))
}

fn check_bijective(values: impl Iterator<Item = usize>, target_size: usize, rep: impl Fn(usize) -> Elem) -> Check {
    let mut seen = vec![None; target_size];
    let mut count = 0;
    for (i, v) in values.enumerate() {
        if let Some(j) = seen[v] {
            return Err(Counterexample::new("induced map is not injective", [rep(j), rep(i)]));
        }
        seen[v] = Some(i);
        count += 1;
    }
    ensure!(count == target_size, [], "induced map is not surjective");
    Ok(())
}

/// First isomorphism theorem for `f: G₁ → G₂`: `G₁/K ≅ Im(f)`.
///
/// With [`InducedMap::SupportPart`] the target is the support `f(E₁)` of
/// the image and the map is `aK ↦ f(a).e`; with [`InducedMap::Raw`] the
/// target is the whole image and the map is `aK ↦ f(a)`.
pub fn first_iso_check(f: &PartialHom<'_>, kernel: KernelChoice, map: InducedMap) -> Check {
    let (g1, g2) = (f.source(), f.target());
    let gamma2 = g2.parent();
    let anatomy = hom_anatomy(f);
    let kset = match kernel {
        KernelChoice::Default => anatomy.default_kernel,
        KernelChoice::Ordinary => anatomy.kernel,
    };
    let k = PartialSubgroup::new(g1, kset).map_err(|e| group_err("kernel is not a partial subgroup", e))?;
    let q = partial_quotient(&k).map_err(|e| group_err("kernel is not normal", e))?;

    let image_support = g2.support().intersection(anatomy.image);
    ensure!(
        f.image_of(g1.support()) == image_support,
        image_support.iter(),
        "support of the image is not f(E1)"
    );

    let value = |a: Elem| match map {
        InducedMap::SupportPart => g2.support_part(f.image(a)),
        InducedMap::Raw => f.image(a),
    };
    let values = class_values(q.group.order(), g1.carrier().iter().map(|a| (a, q.project(a), value(a))))?;

    let qt = q.group.table();
    for i in 0..qt.order() {
        for j in 0..qt.order() {
            let lhs = g2.support_part(values[qt.mul(i, j)]);
            let rhs = g2.dot(values[i], values[j]);
            ensure!(lhs == rhs, [rep(&q.group, i), rep(&q.group, j)], "induced map is not a homomorphism");
        }
    }
    let target = match map {
        InducedMap::SupportPart => image_support,
        InducedMap::Raw => anatomy.image,
    };
    let mut index = vec![usize::MAX; gamma2.order()];
    for (i, t) in target.iter().enumerate() {
        index[t] = i;
    }
    if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| index[v] == usize::MAX) {
        return Err(Counterexample::new("induced map leaves the target", [rep(&q.group, i), v]));
    }
    check_bijective(values.iter().map(|&v| index[v]), target.len(), |i| rep(&q.group, i))
}

fn require_normal(k: &PartialSubgroup<'_>) -> Result<(), TheoremError> {
    is_normal_partial(k)
        .cosets_agree
        .map_err(|witness| TheoremError::NotNormal { witness })
}

/// Second isomorphism theorem: `HK/K ≅ H/(H∩K)`, checked as
/// `FF′/F′ ≅ F/(F∩F′)` via `x(F∩F′) ↦ xF′` over every `h ∈ H`.
pub fn second_iso_check(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Result<Check, TheoremError> {
    if !std::ptr::eq(h.ambient(), k.ambient()) {
        return Err(TheoremError::DifferentAmbient);
    }
    require_normal(k)?;
    Ok(second_iso_inner(h, k))
}

fn second_iso_inner(h: &PartialSubgroup<'_>, k: &PartialSubgroup<'_>) -> Check {
    let g = h.ambient();
    let gamma = g.parent();
    let (f, f2) = (h.support(), k.support());
    let hk = product_subgroups(h, k).map_err(|e| group_err("product", e))?;
    let ff = gamma.product_set(f, f2);
    ensure!(hk == ff, hk.symmetric_difference(ff).iter(), "H.K differs from FF'");
    let top = group_quotient(gamma, ff, f2).map_err(|e| group_err("FF'/F' is not a quotient group", e))?;
    let bottom =
        group_quotient(gamma, f, f.intersection(f2)).map_err(|e| group_err("F/(F∩F') is not a quotient group", e))?;
    let phi = class_values(
        bottom.order(),
        h.elements().iter().map(|a| {
            let x = g.support_part(a);
            (a, bottom.project(x).expect("x_h lies in F"), top.project(x).expect("F ⊆ FF'"))
        }),
    )?;
    check_class_iso(&bottom, &top, &phi)
}

/// Third isomorphism theorem: `(G/N)/(K/N) ≅ G/K`, checked as
/// `(E/F′)/(F/F′) ≅ E/F` via `aN·(K/N) ↦ aK` over every carrier element.
pub fn third_iso_check(k: &PartialSubgroup<'_>, n: &PartialSubgroup<'_>) -> Result<Check, TheoremError> {
    if !std::ptr::eq(k.ambient(), n.ambient()) {
        return Err(TheoremError::DifferentAmbient);
    }
    require_normal(k)?;
    require_normal(n)?;
    if let Some(a) = n.elements().difference(k.elements()).min() {
        return Err(TheoremError::NotNested(a));
    }
    Ok(third_iso_inner(k, n))
}

fn third_iso_inner(k: &PartialSubgroup<'_>, n: &PartialSubgroup<'_>) -> Check {
    let g = k.ambient();
    let gamma = g.parent();
    let e = g.support();
    let g_mod_n = group_quotient(gamma, e, n.support()).map_err(|e| group_err("G/N", e))?;
    let k_mod_n: ElemSet = k
        .support()
        .iter()
        .map(|x| g_mod_n.project(x).expect("F ⊆ E"))
        .collect();
    let gn = g_mod_n.table();
    if let Err(w) = check_normal(gn, gn.elements(), k_mod_n) {
        return Err(Counterexample::new("K/N is not normal in G/N", [rep(&g_mod_n, w)]));
    }
    let outer = group_quotient(gn, gn.elements(), k_mod_n).map_err(|e| group_err("(G/N)/(K/N)", e))?;
    let g_mod_k = group_quotient(gamma, e, k.support()).map_err(|e| group_err("G/K", e))?;
    let phi = class_values(
        outer.order(),
        g.carrier().iter().map(|a| {
            let x = g.support_part(a);
            let inner = g_mod_n.project(x).expect("x_a lies in E");
            (a, outer.project(inner).expect("classes of G/N"), g_mod_k.project(x).expect("x_a lies in E"))
        }),
    )?;
    let gk = g_mod_k.table();
    let ot = outer.table();
    let orep = |i: usize| rep(&g_mod_n, rep(&outer, i));
    for i in 0..ot.order() {
        for j in 0..ot.order() {
            ensure!(
                phi[ot.mul(i, j)] == gk.mul(phi[i], phi[j]),
                [orep(i), orep(j)],
                "induced map is not a homomorphism"
            );
        }
    }
    check_bijective(phi.iter().copied(), g_mod_k.order(), orep)
}
