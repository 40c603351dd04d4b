//! Centralizer-like subsets, each computed by exhaustive application of its
//! own defining condition. Equalities between these sets are the subject of
//! the `verify` module's checks, so nothing here is allowed to shortcut one
//! set through another.

use crate::group::{FiniteGroup, GroupElement};
use crate::structure::normal_closure;
use crate::subset::{ElementSubset, Subgroup};

/// `C_G(g) = { a : [a, g] = 1 }`, by full scan.
pub fn centralizer(e: &GroupElement) -> Subgroup {
    let g = e.group();
    let set = ElementSubset::collect(g, |a| g.comm_idx(a, e.index()) == 0);
    Subgroup::new(set).expect("a centralizer is a subgroup")
}

/// Right n-Engel set relative to an element:
/// `R_n(G, g) = { a : [a,_n g] = 1 }`. At `n = 1` this is the centralizer
/// condition verbatim.
pub fn right_engel_set_at(e: &GroupElement, n: u32) -> ElementSubset {
    assert!(n >= 1, "Engel depth must be at least 1");
    let g = e.group();
    ElementSubset::collect(g, |a| g.engel_idx(a, e.index(), n) == 0)
}

/// Universal right n-Engel set: `R_n(G) = { a : [a,_n g] = 1 for every g }`.
pub fn right_engel_set(g: &FiniteGroup, n: u32) -> ElementSubset {
    assert!(n >= 1, "Engel depth must be at least 1");
    ElementSubset::collect(g, |a| (0..g.order()).all(|x| g.engel_idx(a, x, n) == 0))
}

/// Left absorption set `*E₁(G, g) = { a : [a·x, g] = [x, g] for all x }`,
/// by full double scan.
pub fn left_e1(e: &GroupElement) -> ElementSubset {
    let g = e.group();
    let base = commutator_profile(g, e.index());
    ElementSubset::collect(g, |a| {
        (0..g.order()).all(|x| g.comm_idx(g.mul_idx(a, x), e.index()) == base[x])
    })
}

/// Right absorption set `E₁*(G, g) = { a : [x·a, g] = [x, g] for all x }`,
/// by full double scan.
pub fn right_e1star(e: &GroupElement) -> ElementSubset {
    let g = e.group();
    let base = commutator_profile(g, e.index());
    ElementSubset::collect(g, |a| {
        (0..g.order()).all(|x| g.comm_idx(g.mul_idx(x, a), e.index()) == base[x])
    })
}

fn commutator_profile(g: &FiniteGroup, e: usize) -> Vec<usize> {
    (0..g.order()).map(|x| g.comm_idx(x, e)).collect()
}

/// `C_G(g^G) = { a : [a, m] = 1 for every m in the normal closure of g }`.
pub fn centralizer_of_normal_closure(e: &GroupElement) -> Subgroup {
    let g = e.group();
    let closure = normal_closure(e);
    let set = ElementSubset::collect(g, |a| {
        closure.members().iter().all(|&m| g.comm_idx(a, m) == 0)
    });
    Subgroup::new(set).expect("a centralizer of a set is a subgroup")
}

/// `⋂_x R₁(G, g^x)`: the intersection over all conjugates of `g` of their
/// right 1-Engel sets, each computed by its own scan.
pub fn intersect_conjugate_r1(e: &GroupElement) -> ElementSubset {
    let g = e.group();
    let mut conjugates: Vec<usize> = (0..g.order()).map(|x| g.conj_idx(e.index(), x)).collect();
    conjugates.sort_unstable();
    conjugates.dedup();
    let mut keep = vec![true; g.order()];
    for c in conjugates {
        let r1 = right_engel_set_at(&g.element(c), 1);
        let mask = r1.mask();
        for (slot, in_r1) in keep.iter_mut().zip(mask) {
            *slot &= in_r1;
        }
    }
    ElementSubset::collect(g, |a| keep[a])
}
