//! Subgroup machinery and structural predicates: generation, normality,
//! normal closures, quotient groups, derived series, solvability, subgroup
//! enumeration, and subnormal-chain verification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Structure};
use crate::subset::{ElementSubset, Subgroup};

/// Largest order accepted by [`enumerate_subgroups`]; subgroup counts grow
/// much faster than orders do.
pub const SUBGROUP_ENUMERATION_CAP: usize = 200;

/// Closure of `seeds ∪ {identity}` under products and inverses.
pub fn generated_subgroup(g: &FiniteGroup, seeds: &[GroupElement]) -> Result<Subgroup> {
    for seed in seeds {
        if !seed.group().same_group(g) {
            return Err(Error::GroupMismatch);
        }
    }
    let idx: Vec<usize> = seeds.iter().map(|e| e.index()).collect();
    let members = generated_members(g, &idx);
    Ok(Subgroup::new(ElementSubset::from_sorted(g, members))
        .expect("closure under products and inverses is a subgroup"))
}

/// Index-level closure; returns sorted members.
pub(crate) fn generated_members(g: &FiniteGroup, seeds: &[usize]) -> Vec<usize> {
    let mut atoms: Vec<usize> = Vec::with_capacity(seeds.len() * 2);
    for &s in seeds {
        atoms.push(s);
        atoms.push(g.inv_idx(s));
    }
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut frontier = vec![0usize];
    let mut discovered = vec![0usize];
    while let Some(current) = frontier.pop() {
        for &a in &atoms {
            let next = g.mul_idx(current, a);
            if !mask[next] {
                mask[next] = true;
                frontier.push(next);
                discovered.push(next);
            }
        }
    }
    discovered.sort_unstable();
    discovered
}

/// Whether `s` is closed under conjugation by every element of its parent.
pub fn is_normal(s: &Subgroup) -> bool {
    is_normal_among(s.group(), s.members(), 0..s.group().order())
}

/// Whether `s` is normal in `t`, both subgroups of the same parent.
/// Requires `s ⊆ t`.
pub fn is_normal_in(s: &Subgroup, t: &Subgroup) -> Result<bool> {
    if !s.group().same_group(t.group()) {
        return Err(Error::GroupMismatch);
    }
    if !s.as_subset().is_subset_of(t.as_subset()) {
        return Err(Error::NotASubgroup(
            "the smaller link is not contained in the larger".into(),
        ));
    }
    Ok(is_normal_among(
        s.group(),
        s.members(),
        t.members().iter().copied(),
    ))
}

/// Conjugation-closure scan over an arbitrary member list (no subgroup
/// axioms assumed) with the given conjugators.
pub(crate) fn is_normal_among(
    g: &FiniteGroup,
    members: &[usize],
    conjugators: impl IntoIterator<Item = usize>,
) -> bool {
    let mut mask = vec![false; g.order()];
    for &m in members {
        mask[m] = true;
    }
    for x in conjugators {
        for &m in members {
            if !mask[g.conj_idx(m, x)] {
                return false;
            }
        }
    }
    true
}

/// Smallest normal subgroup containing `e`: the subgroup generated by the
/// full conjugate set of `e`.
pub fn normal_closure(e: &GroupElement) -> Subgroup {
    let g = e.group();
    let mut conjugates: Vec<usize> = (0..g.order()).map(|x| g.conj_idx(e.index(), x)).collect();
    conjugates.sort_unstable();
    conjugates.dedup();
    let members = generated_members(g, &conjugates);
    let closure =
        Subgroup::new(ElementSubset::from_sorted(g, members)).expect("closure is a subgroup");
    assert!(
        is_normal(&closure),
        "subgroup generated by a full conjugate set is normal"
    );
    closure
}

/// A quotient group: cosets of a normal subgroup with a coset-level
/// multiplication table. Coset 0 is the kernel; cosets are ordered by least
/// member, and each coset's representative is its least member.
pub struct QuotientGroup {
    parent: FiniteGroup,
    kernel: Subgroup,
    cosets: Vec<ElementSubset>,
    representatives: Vec<usize>,
    coset_of: Vec<u32>,
    table: Vec<u32>,
}

/// Left-coset partition of `g` by a normal subgroup.
pub fn quotient(g: &FiniteGroup, kernel: &Subgroup) -> Result<QuotientGroup> {
    if !kernel.group().same_group(g) {
        return Err(Error::GroupMismatch);
    }
    if !is_normal(kernel) {
        return Err(Error::NotNormal);
    }
    let n = g.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut cosets = Vec::new();
    let mut representatives = Vec::new();
    for a in 0..n {
        if coset_of[a] != u32::MAX {
            continue;
        }
        let index = cosets.len() as u32;
        let mut members: Vec<usize> = kernel.members().iter().map(|&m| g.mul_idx(a, m)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = index;
        }
        representatives.push(a);
        cosets.push(ElementSubset::from_sorted(g, members));
    }
    let count = cosets.len();
    let mut table = vec![0u32; count * count];
    for i in 0..count {
        for j in 0..count {
            table[i * count + j] = coset_of[g.mul_idx(representatives[i], representatives[j])];
        }
    }
    Ok(QuotientGroup {
        parent: g.clone(),
        kernel: kernel.clone(),
        cosets,
        representatives,
        coset_of,
        table,
    })
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn cosets(&self) -> &[ElementSubset] {
        &self.cosets
    }

    /// Least member of each coset, in coset order.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.coset_of(self.parent.inv_idx(self.representatives[a]))
    }

    /// Coset commutator `[aK, bK] = [a, b]K`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.coset_of(
            self.parent
                .comm_idx(self.representatives[a], self.representatives[b]),
        )
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Materializes the quotient as a standalone group. Cosets are labeled
    /// `"<representative label>K"`, and the table goes through the validated
    /// constructor.
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let n = self.order();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| self.mul(i, j)).collect())
            .collect();
        let labels = self
            .representatives
            .iter()
            .map(|&r| format!("{}K", self.parent.label(r)))
            .collect();
        FiniteGroup::from_table(&rows, Some(labels))
    }
}

/// Subgroup generated by all commutators `[x, y]`.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let members = derived_members(g, ElementSubset::full(g).members());
    Subgroup::new(ElementSubset::from_sorted(g, members)).expect("derived subgroup is a subgroup")
}

/// Derived subgroup of the sub-table spanned by `members`.
fn derived_members(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut commutators: Vec<usize> = Vec::new();
    let mut seen = vec![false; g.order()];
    for &x in members {
        for &y in members {
            let c = g.comm_idx(x, y);
            if !seen[c] {
                seen[c] = true;
                commutators.push(c);
            }
        }
    }
    generated_members(g, &commutators)
}

/// `[G, G′, G″, …]` iterated until it stabilizes. The final entry is the
/// trivial subgroup exactly when the group is solvable.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::full(g)];
    loop {
        let current = series.last().expect("series is nonempty");
        let next = derived_members(g, current.members());
        if next.len() == current.order() {
            break;
        }
        series.push(
            Subgroup::new(ElementSubset::from_sorted(g, next))
                .expect("derived subgroup is a subgroup"),
        );
    }
    series
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|i| (i..n).all(|j| g.mul_idx(i, j) == g.mul_idx(j, i)))
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g)
        .last()
        .expect("series is nonempty")
        .order()
        == 1
}

/// Standard sense: the derived subgroup is abelian (equivalently, the
/// second derived subgroup is trivial).
pub fn is_metabelian(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    let members = derived.members();
    members
        .iter()
        .all(|&x| members.iter().all(|&y| g.comm_idx(x, y) == 0))
}

/// Elements commuting with everything: `{a : [a, x] = 1 ∀x}`.
pub fn center(g: &FiniteGroup) -> Subgroup {
    let set = ElementSubset::collect(g, |a| (0..g.order()).all(|x| g.comm_idx(a, x) == 0));
    Subgroup::new(set).expect("the center is a subgroup")
}

/// All subgroups, by join closure: every subgroup is a join of cyclic
/// subgroups, so closing the cyclic ones under pairwise joins reaches the
/// whole lattice. Sorted by (order, member list).
pub fn enumerate_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_with_cap(g, SUBGROUP_ENUMERATION_CAP)
}

pub fn enumerate_subgroups_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let mut cyclics: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.order() {
        let members = generated_members(g, &[a]);
        if !cyclics.contains(&members) {
            cyclics.push(members);
        }
    }
    let mut all: std::collections::BTreeSet<Vec<usize>> = cyclics.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = cyclics.clone();
    while !frontier.is_empty() {
        let mut additions = Vec::new();
        for s in &frontier {
            for c in &cyclics {
                let mut seeds = s.clone();
                seeds.extend_from_slice(c);
                let join = generated_members(g, &seeds);
                if !all.contains(&join) {
                    all.insert(join.clone());
                    additions.push(join);
                }
            }
        }
        frontier = additions;
    }
    let mut subgroups: Vec<Subgroup> = all
        .into_iter()
        .map(|members| {
            Subgroup::new(ElementSubset::from_sorted(g, members))
                .expect("joins of subgroups are subgroups")
        })
        .collect();
    subgroups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    Ok(subgroups)
}

pub fn enumerate_normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    Ok(enumerate_subgroups(g)?
        .into_iter()
        .filter(is_normal)
        .collect())
}

/// Ascending chain of subgroups from the trivial subgroup to the whole
/// group, each contained in the next.
pub struct SubnormalChain {
    links: Vec<Subgroup>,
}

impl SubnormalChain {
    pub fn new(g: &FiniteGroup, links: Vec<Subgroup>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::InvalidChain("chain has no links".into()));
        }
        for link in &links {
            if !link.group().same_group(g) {
                return Err(Error::GroupMismatch);
            }
        }
        if links[0].order() != 1 {
            return Err(Error::InvalidChain(
                "first link must be the trivial subgroup".into(),
            ));
        }
        if links.last().expect("nonempty").order() != g.order() {
            return Err(Error::InvalidChain(
                "last link must be the whole group".into(),
            ));
        }
        for pair in links.windows(2) {
            if !pair[0].as_subset().is_subset_of(pair[1].as_subset()) {
                return Err(Error::InvalidChain(format!(
                    "link of order {} is not contained in the next link of order {}",
                    pair[0].order(),
                    pair[1].order()
                )));
            }
        }
        Ok(SubnormalChain { links })
    }

    pub fn links(&self) -> &[Subgroup] {
        &self.links
    }
}

/// Verdict for one adjacent pair of chain links.
#[derive(Clone, Debug, Serialize)]
pub struct ChainLinkReport {
    pub lower_order: usize,
    pub upper_order: usize,
    pub normal: bool,
    pub quotient_order: usize,
    pub quotient_abelian: bool,
}

/// Outcome of [`verify_chain`]: the chain witnesses solvability exactly
/// when every link is normal in the next with abelian quotient.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub links: Vec<ChainLinkReport>,
    pub witnesses_solvability: bool,
}

/// Checks each adjacent pair for normality and abelian quotient. The
/// quotient test is commutator containment: `T/S` is abelian iff
/// `[t1, t2] ∈ S` for all `t1, t2 ∈ T`.
pub fn verify_chain(g: &FiniteGroup, chain: &SubnormalChain) -> Result<ChainReport> {
    for link in chain.links() {
        if !link.group().same_group(g) {
            return Err(Error::GroupMismatch);
        }
    }
    let mut links = Vec::new();
    let mut all_good = true;
    for pair in chain.links().windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        let normal = is_normal_in(lower, upper)?;
        let lower_mask = lower.mask();
        let quotient_abelian = upper.members().iter().all(|&a| {
            upper
                .members()
                .iter()
                .all(|&b| lower_mask[g.comm_idx(a, b)])
        });
        all_good &= normal && quotient_abelian;
        links.push(ChainLinkReport {
            lower_order: lower.order(),
            upper_order: upper.order(),
            normal,
            quotient_order: upper.order() / lower.order(),
            quotient_abelian,
        });
    }
    Ok(ChainReport {
        links,
        witnesses_solvability: all_good,
    })
}

/// Derived subgroup of a product decomposes across the factors; used by
/// callers that want factor-level flags without building the product.
pub fn product_flags(g: &FiniteGroup) -> (bool, bool) {
    match g.structure() {
        Structure::Atomic => (is_solvable(g), is_metabelian(g)),
        Structure::Product { left, right } => {
            let (ls, lm) = product_flags(left);
            let (rs, rm) = product_flags(right);
            (ls && rs, lm && rm)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::group::FiniteGroup;

    fn k4xs3() -> FiniteGroup {
        FiniteGroup::direct_product(&catalog("K4").unwrap(), &catalog("S3").unwrap()).unwrap()
    }

    #[test]
    fn generated_subgroup_examples() {
        let s3 = catalog("S3").unwrap();
        assert_eq!(generated_subgroup(&s3, &[]).unwrap().order(), 1);
        let gens = [
            s3.by_label("(1 2)").unwrap(),
            s3.by_label("(1 2 3)").unwrap(),
        ];
        assert_eq!(generated_subgroup(&s3, &gens).unwrap().order(), 6);

        let p = k4xs3();
        let seed = p.by_label("(a,(1 3 2))").unwrap();
        assert_eq!(generated_subgroup(&p, &[seed]).unwrap().order(), 6);
    }

    #[test]
    fn normality_checks() {
        let s3 = catalog("S3").unwrap();
        assert!(is_normal(&Subgroup::full(&s3)));

        let t = s3.by_label("(1 2)").unwrap();
        let pair = generated_subgroup(&s3, &[t]).unwrap();
        assert!(!is_normal(&pair));

        let p = k4xs3();
        let kernel = generated_subgroup(
            &p,
            &[p.by_label("(a,e)").unwrap(), p.by_label("(b,e)").unwrap()],
        )
        .unwrap();
        assert_eq!(kernel.order(), 4);
        assert!(is_normal(&kernel));
    }

    #[test]
    fn normal_closure_examples() {
        let c6 = catalog("C6").unwrap();
        let e = c6.by_label("g^2").unwrap();
        assert_eq!(normal_closure(&e).members(), &[0, 2, 4]);

        let s3 = catalog("S3").unwrap();
        let rot = s3.by_label("(1 2 3)").unwrap();
        assert_eq!(normal_closure(&rot).order(), 3);
        let swap = s3.by_label("(1 2)").unwrap();
        assert_eq!(normal_closure(&swap).order(), 6);
    }

    #[test]
    fn normal_closure_is_minimal() {
        // The closure sits inside every enumerated normal subgroup that
        // contains the element.
        for name in ["S3", "D8", "Q8", "A4", "D12"] {
            let g = catalog(name).unwrap();
            let normals = enumerate_normal_subgroups(&g).unwrap();
            for e in g.elements() {
                let closure = normal_closure(&e);
                for n in &normals {
                    if n.contains(e.index()) {
                        assert!(closure.as_subset().is_subset_of(n.as_subset()));
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let s3 = catalog("S3").unwrap();
        let by_trivial = quotient(&s3, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(by_trivial.order(), 6);

        let a3 = normal_closure(&s3.by_label("(1 2 3)").unwrap());
        let q = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_abelian());
        // Lagrange consistency.
        assert_eq!(q.order() * a3.order(), s3.order());
        q.to_group().unwrap().check_invariants().unwrap();

        let pair = generated_subgroup(&s3, &[s3.by_label("(1 2)").unwrap()]).unwrap();
        assert!(matches!(quotient(&s3, &pair), Err(Error::NotNormal)));
    }

    #[test]
    fn quotient_cosets_partition_and_reproduce() {
        let p = k4xs3();
        let a3_part = generated_subgroup(&p, &[p.by_label("(e,(1 2 3))").unwrap()]).unwrap();
        let q = quotient(&p, &a3_part).unwrap();

        // Cosets partition the parent, the kernel is coset 0, and each
        // coset is its representative times the kernel.
        let mut seen = vec![false; p.order()];
        for (i, coset) in q.cosets().iter().enumerate() {
            for &m in coset.members() {
                assert!(!seen[m]);
                seen[m] = true;
            }
            let rep = q.representatives()[i];
            let mut rebuilt: Vec<usize> = a3_part
                .members()
                .iter()
                .map(|&k| p.mul_idx(rep, k))
                .collect();
            rebuilt.sort_unstable();
            assert_eq!(coset.members(), rebuilt.as_slice());
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(q.coset_of(0), 0);
        assert_eq!(q.cosets()[0].members(), a3_part.members());
    }

    #[test]
    fn quotient_of_product_by_left_factor() {
        let p = k4xs3();
        let kernel = generated_subgroup(
            &p,
            &[p.by_label("(a,e)").unwrap(), p.by_label("(b,e)").unwrap()],
        )
        .unwrap();
        let q = quotient(&p, &kernel).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());

        // [(e,(1 2))K, (e,(1 3 2))K] = (e,(1 2 3))K ≠ K.
        let a = q.coset_of(p.by_label("(e,(1 2))").unwrap().index());
        let b = q.coset_of(p.by_label("(e,(1 3 2))").unwrap().index());
        let c = q.commutator(a, b);
        assert_eq!(c, q.coset_of(p.by_label("(e,(1 2 3))").unwrap().index()));
        assert_ne!(c, 0);
    }

    #[test]
    fn derived_series_examples() {
        let k4 = catalog("K4").unwrap();
        assert_eq!(derived_subgroup(&k4).order(), 1);

        let s3 = catalog("S3").unwrap();
        let series = derived_series(&s3);
        let orders: Vec<usize> = series.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![6, 3, 1]);

        let p = k4xs3();
        let derived = derived_subgroup(&p);
        assert_eq!(derived.order(), 3);
        let expected: Vec<usize> = ["(e,e)", "(e,(1 2 3))", "(e,(1 3 2))"]
            .iter()
            .map(|l| p.by_label(l).unwrap().index())
            .collect();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(derived.members(), expected.as_slice());
    }

    #[test]
    fn derived_subgroup_of_product_decomposes() {
        for (a, b) in [("K4", "S3"), ("S3", "D8"), ("Q8", "C3")] {
            let g = catalog(a).unwrap();
            let h = catalog(b).unwrap();
            let p = FiniteGroup::direct_product(&g, &h).unwrap();
            assert!(p.order() <= 100);
            let dg = derived_subgroup(&g);
            let dh = derived_subgroup(&h);
            let mut expected = Vec::new();
            for &i in dg.members() {
                for &j in dh.members() {
                    expected.push(p.encode_pair(i, j).unwrap());
                }
            }
            expected.sort_unstable();
            assert_eq!(derived_subgroup(&p).members(), expected.as_slice());
        }
    }

    #[test]
    fn predicate_examples() {
        assert!(is_abelian(&catalog("K4").unwrap()));
        assert!(is_solvable(&k4xs3()));
        assert!(is_metabelian(&k4xs3()));

        let s4 = catalog("S4").unwrap();
        assert!(is_solvable(&s4));
        assert!(!is_metabelian(&s4));
        let orders: Vec<usize> = derived_series(&s4).iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);

        let a5 = catalog("A5").unwrap();
        assert!(!is_solvable(&a5));
        assert_eq!(derived_series(&a5).len(), 1);
    }

    #[test]
    fn derived_series_strictly_decreases() {
        for name in ["C8", "S3", "D8", "D12", "Q8", "A4", "S4", "A5"] {
            let g = catalog(name).unwrap();
            let series = derived_series(&g);
            for pair in series.windows(2) {
                assert!(pair[1].order() < pair[0].order());
                assert!(pair[1].as_subset().is_subset_of(pair[0].as_subset()));
            }
        }
    }

    #[test]
    fn subgroup_enumeration_counts() {
        let c2 = catalog("C2").unwrap();
        assert_eq!(enumerate_subgroups(&c2).unwrap().len(), 2);

        // S3: trivial, three ⟨transposition⟩, A3, S3.
        let s3 = catalog("S3").unwrap();
        assert_eq!(enumerate_subgroups(&s3).unwrap().len(), 6);
        let normals = enumerate_normal_subgroups(&s3).unwrap();
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn solvability_agrees_with_chain_search() {
        // A solvable group of modest order admits a verify_chain-true chain
        // assembled from enumerated normal subgroups by greedy refinement.
        for name in ["C12", "S3", "D8", "D12", "Q8", "A4", "S4"] {
            let g = catalog(name).unwrap();
            assert!(g.order() <= 48);
            let normals = enumerate_normal_subgroups(&g).unwrap();
            let mut links = vec![Subgroup::trivial(&g)];
            loop {
                let current = links.last().unwrap();
                if current.order() == g.order() {
                    break;
                }
                // Smallest normal subgroup strictly above the current link
                // with abelian quotient.
                let lower_mask = current.mask();
                let next = normals.iter().find(|n| {
                    n.order() > current.order()
                        && current.as_subset().is_subset_of(n.as_subset())
                        && n.members()
                            .iter()
                            .all(|&a| n.members().iter().all(|&b| lower_mask[g.comm_idx(a, b)]))
                });
                match next {
                    Some(n) => links.push(n.clone()),
                    None => break,
                }
            }
            let found_chain = links.last().unwrap().order() == g.order() && {
                let chain = SubnormalChain::new(&g, links).unwrap();
                verify_chain(&g, &chain).unwrap().witnesses_solvability
            };
            assert_eq!(
                found_chain,
                is_solvable(&g),
                "chain search vs series on {name}"
            );
        }
    }

    #[test]
    fn chain_validation_and_reports() {
        let s3 = catalog("S3").unwrap();
        let a3 = normal_closure(&s3.by_label("(1 2 3)").unwrap());
        let chain = SubnormalChain::new(
            &s3,
            vec![Subgroup::trivial(&s3), a3.clone(), Subgroup::full(&s3)],
        )
        .unwrap();
        let report = verify_chain(&s3, &chain).unwrap();
        assert!(report.witnesses_solvability);
        let orders: Vec<usize> = report.links.iter().map(|l| l.quotient_order).collect();
        assert_eq!(orders, vec![3, 2]);

        // Nonabelian top quotient: {e} ◁ A4 fails.
        let a4 = catalog("A4").unwrap();
        let blunt =
            SubnormalChain::new(&a4, vec![Subgroup::trivial(&a4), Subgroup::full(&a4)]).unwrap();
        let report = verify_chain(&a4, &blunt).unwrap();
        assert!(report.links[0].normal);
        assert!(!report.links[0].quotient_abelian);
        assert!(!report.witnesses_solvability);

        // Chain invariants.
        assert!(SubnormalChain::new(&s3, vec![Subgroup::full(&s3)]).is_err());
        assert!(SubnormalChain::new(&s3, vec![Subgroup::trivial(&s3)]).is_err());
        assert!(SubnormalChain::new(
            &s3,
            vec![
                Subgroup::trivial(&s3),
                a3,
                generated_subgroup(&s3, &[s3.by_label("(1 2)").unwrap()]).unwrap(),
                Subgroup::full(&s3)
            ]
        )
        .is_err());
    }

    #[test]
    fn center_examples() {
        let d8 = catalog("D8").unwrap();
        let z = center(&d8);
        assert_eq!(z.labels(), vec!["1", "r^2"]);
        assert_eq!(center(&catalog("S3").unwrap()).order(), 1);
    }
}
