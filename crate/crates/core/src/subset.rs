//! Sorted element-index sets over a parent group, and the subgroup
//! refinement. All set-producing operations in this crate return canonical
//! (strictly increasing) member lists so results compare bit-exactly.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};

/// A subset of a group's elements, stored as strictly increasing indices.
#[derive(Clone)]
pub struct ElementSubset {
    group: FiniteGroup,
    members: Vec<usize>,
}

impl ElementSubset {
    /// Canonicalizes (sorts, dedups) and validates the index range.
    pub fn new(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            if last >= group.order() {
                return Err(Error::NotASubgroup(format!(
                    "index {last} out of range for order {}",
                    group.order()
                )));
            }
        }
        Ok(ElementSubset {
            group: group.clone(),
            members,
        })
    }

    pub(crate) fn from_sorted(group: &FiniteGroup, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&m| m < group.order()));
        ElementSubset {
            group: group.clone(),
            members,
        }
    }

    /// Collects every index satisfying the predicate, in index order.
    pub fn collect(group: &FiniteGroup, mut pred: impl FnMut(usize) -> bool) -> Self {
        let members = (0..group.order()).filter(|&i| pred(i)).collect();
        ElementSubset::from_sorted(group, members)
    }

    pub fn full(group: &FiniteGroup) -> Self {
        ElementSubset::from_sorted(group, (0..group.order()).collect())
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        ElementSubset::from_sorted(group, vec![0])
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&i| self.group.label(i)).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.members.iter().map(move |&i| self.group.element(i))
    }

    /// Membership mask indexed by element, for O(1) lookups in scans.
    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.group.order()];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }

    pub fn intersect(&self, other: &ElementSubset) -> Result<ElementSubset> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        Ok(ElementSubset::from_sorted(&self.group, members))
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.group.same_group(&other.group) && self.members.iter().all(|&m| other.contains(m))
    }
}

impl PartialEq for ElementSubset {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.members == other.members
    }
}

impl Eq for ElementSubset {}

impl std::fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// An [`ElementSubset`] that has been verified to contain the identity and
/// be closed under products and inverses.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    set: ElementSubset,
}

impl Subgroup {
    /// Checks the subgroup axioms on the given subset.
    pub fn new(set: ElementSubset) -> Result<Self> {
        let group = set.group();
        if !set.contains(0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        let mask = set.mask();
        for &a in set.members() {
            if !mask[group.inv_idx(a)] {
                return Err(Error::NotASubgroup(format!(
                    "inverse of `{}` is outside the set",
                    group.label(a)
                )));
            }
            for &b in set.members() {
                if !mask[group.mul_idx(a, b)] {
                    return Err(Error::NotASubgroup(format!(
                        "product `{}`·`{}` is outside the set",
                        group.label(a),
                        group.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup { set })
    }

    pub fn from_members(group: &FiniteGroup, members: Vec<usize>) -> Result<Self> {
        Subgroup::new(ElementSubset::new(group, members)?)
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup {
            set: ElementSubset::trivial(group),
        }
    }

    pub fn full(group: &FiniteGroup) -> Self {
        Subgroup {
            set: ElementSubset::full(group),
        }
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn as_subset(&self) -> &ElementSubset {
        &self.set
    }

    pub fn into_subset(self) -> ElementSubset {
        self.set
    }
}

impl std::ops::Deref for Subgroup {
    type Target = ElementSubset;

    fn deref(&self) -> &ElementSubset {
        &self.set
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn canonicalizes_and_validates() {
        let s3 = catalog("S3").unwrap();
        let set = ElementSubset::new(&s3, vec![5, 0, 2, 2]).unwrap();
        assert_eq!(set.members(), &[0, 2, 5]);
        assert!(ElementSubset::new(&s3, vec![6]).is_err());
    }

    #[test]
    fn subgroup_axioms_are_checked() {
        let s3 = catalog("S3").unwrap();
        let rot = s3.by_label("(1 2 3)").unwrap().index();
        let rot2 = s3.by_label("(1 3 2)").unwrap().index();
        assert!(Subgroup::from_members(&s3, vec![0, rot, rot2]).is_ok());

        // Missing identity.
        assert!(Subgroup::from_members(&s3, vec![rot, rot2]).is_err());
        // Not closed: two transpositions generate a 3-cycle.
        let t1 = s3.by_label("(1 2)").unwrap().index();
        let t2 = s3.by_label("(1 3)").unwrap().index();
        assert!(Subgroup::from_members(&s3, vec![0, t1, t2]).is_err());
    }

    #[test]
    fn subset_algebra() {
        let s3 = catalog("S3").unwrap();
        let a = ElementSubset::new(&s3, vec![0, 1, 2]).unwrap();
        let b = ElementSubset::new(&s3, vec![0, 2, 4]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().members(), &[0, 2]);
        assert!(ElementSubset::trivial(&s3).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));

        let other = catalog("S3").unwrap();
        let foreign = ElementSubset::full(&other);
        assert!(a.intersect(&foreign).is_err());
        assert!(!a.is_subset_of(&foreign));
    }
}
