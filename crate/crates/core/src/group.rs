//! Concrete finite groups as dense Cayley tables.
//!
//! A [`FiniteGroup`] is a cheap-to-clone handle to an immutable table with
//! inverses, display labels, and an optional direct-product structure. The
//! identity always sits at index 0 (constructors relabel if necessary), and
//! every public constructor either validates the group axioms or builds a
//! table that satisfies them by construction.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest group order accepted by the constructors. Keeps the O(n²)–O(n³)
/// scans elsewhere in the crate within interactive runtimes.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// Orders up to this bound get a full O(n³) associativity scan; larger
/// tables are sampled.
const FULL_ASSOC_SCAN_MAX: usize = 512;

/// Number of random triples checked when the associativity scan is sampled.
const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;

/// How a group was assembled.
#[derive(Clone)]
pub enum Structure {
    Atomic,
    Product {
        left: FiniteGroup,
        right: FiniteGroup,
    },
}

struct GroupInner {
    order: usize,
    /// Row-major `order × order` multiplication table.
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    structure: Structure,
}

/// Handle to an immutable finite group. Clones share the same table, so
/// element operations can compare group identity by pointer.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.inner.structure {
            Structure::Atomic => "atomic",
            Structure::Product { .. } => "product",
        };
        write!(f, "FiniteGroup(order={}, {kind})", self.inner.order)
    }
}

/// An element of a specific group: the universal currency of every
/// operation in this crate.
#[derive(Clone)]
pub struct GroupElement {
    group: FiniteGroup,
    index: usize,
}

impl FiniteGroup {
    /// Builds a group from an explicit multiplication table, validating all
    /// four group axioms. The identity is located by scanning and relabeled
    /// to index 0. Default labels are the (relabeled) element indices.
    pub fn from_table(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        Self::from_table_with_cap(table, labels, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotAGroup("table is empty".into()));
        }
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &entry) in row.iter().enumerate() {
                if entry >= order {
                    return Err(Error::NotAGroup(format!(
                        "entry at ({i},{j}) is {entry}, not a valid index"
                    )));
                }
            }
        }

        let identity = (0..order)
            .find(|&i| (0..order).all(|j| table[i][j] == j) && (0..order).all(|j| table[j][i] == j))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity element".into()))?;

        // Relabel so the identity lands at index 0, preserving the relative
        // order of the remaining elements.
        let mut position = vec![0usize; order];
        for (new, old) in std::iter::once(identity)
            .chain((0..order).filter(|&i| i != identity))
            .enumerate()
        {
            position[old] = new;
        }
        let old_of = {
            let mut old_of = vec![0usize; order];
            for (old, &new) in position.iter().enumerate() {
                old_of[new] = old;
            }
            old_of
        };

        let mut flat = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                flat[i * order + j] = position[table[old_of[i]][old_of[j]]] as u32;
            }
        }

        let labels = match labels {
            Some(given) => {
                if given.len() != order {
                    return Err(Error::NotAGroup(format!(
                        "{} labels for {order} elements",
                        given.len()
                    )));
                }
                old_of.iter().map(|&old| given[old].clone()).collect()
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };

        Self::finish(order, flat, labels, Structure::Atomic)
    }

    /// Closes a list of permutation generators under composition. Element 0
    /// is the identity; the remaining order is breadth-first discovery order
    /// with generators applied in list order, so the same generator list
    /// always produces the same table. Labels are cycle notation.
    pub fn from_permutation_generators(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::from_permutation_generators_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutation_generators_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator degree {} does not match {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index_of: HashMap<Permutation, usize> = HashMap::new();
        index_of.insert(elements[0].clone(), 0);
        let mut next = 0;
        while next < elements.len() {
            let current = elements[next].clone();
            next += 1;
            for g in generators {
                let product = current.compose(g)?;
                if !index_of.contains_key(&product) {
                    if elements.len() == cap {
                        return Err(Error::OrderCapExceeded {
                            order: cap + 1,
                            cap,
                        });
                    }
                    index_of.insert(product.clone(), elements.len());
                    elements.push(product);
                }
            }
        }

        let order = elements.len();
        let mut flat = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                let product = elements[i].compose(&elements[j])?;
                flat[i * order + j] = index_of[&product] as u32;
            }
        }
        let labels = elements.iter().map(|p| p.cycle_notation()).collect();
        Self::finish(order, flat, labels, Structure::Atomic)
    }

    /// Componentwise direct product. Element `(i, j)` lives at flat index
    /// `i * h.order() + j` and is labeled `"(iLabel,jLabel)"`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::direct_product_with_cap(g, h, DEFAULT_ORDER_CAP)
    }

    pub fn direct_product_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<Self> {
        let order = g.order() * h.order();
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        let ho = h.order();
        let mut flat = vec![0u32; order * order];
        for i1 in 0..g.order() {
            for j1 in 0..ho {
                let a = i1 * ho + j1;
                for i2 in 0..g.order() {
                    for j2 in 0..ho {
                        let b = i2 * ho + j2;
                        flat[a * order + b] = (g.mul_idx(i1, i2) * ho + h.mul_idx(j1, j2)) as u32;
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for i in 0..g.order() {
            for j in 0..ho {
                labels.push(format!("({},{})", g.label(i), h.label(j)));
            }
        }
        Self::finish(
            order,
            flat,
            labels,
            Structure::Product {
                left: g.clone(),
                right: h.clone(),
            },
        )
    }

    /// Shared tail of the constructors: computes inverses, builds the label
    /// index, and packages the handle. Expects the identity at index 0 and a
    /// table that already satisfies the group axioms (`from_table` has
    /// validated them; the other constructors produce them structurally).
    fn finish(
        order: usize,
        table: Vec<u32>,
        labels: Vec<String>,
        structure: Structure,
    ) -> Result<Self> {
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| table[i * order + j] == 0 && table[j * order + i] == 0)
                .ok_or_else(|| {
                    Error::NotAGroup(format!("element `{}` has no inverse", labels[i]))
                })?;
            inverses[i] = inv as u32;
        }

        let mut label_index = HashMap::with_capacity(order);
        for (i, label) in labels.iter().enumerate() {
            if label_index.insert(label.clone(), i).is_some() {
                return Err(Error::NotAGroup(format!("duplicate label `{label}`")));
            }
        }

        let group = FiniteGroup {
            inner: Arc::new(GroupInner {
                order,
                table,
                inverses,
                labels,
                label_index,
                structure,
            }),
        };
        // Product tables are componentwise products of validated factors;
        // everything else gets the associativity scan here.
        if matches!(group.inner.structure, Structure::Atomic) {
            group.check_associativity()?;
        }
        Ok(group)
    }

    /// Re-verifies every representation invariant: closure, two-sided
    /// identity at index 0, two-sided inverses, associativity (full scan up
    /// to order 512, sampled above), and product-structure consistency.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.order();
        for i in 0..n {
            for j in 0..n {
                if self.mul_idx(i, j) >= n {
                    return Err(Error::NotAGroup(format!("entry ({i},{j}) out of range")));
                }
            }
        }
        for j in 0..n {
            if self.mul_idx(0, j) != j || self.mul_idx(j, 0) != j {
                return Err(Error::NotAGroup("index 0 is not the identity".into()));
            }
        }
        for i in 0..n {
            let inv = self.inv_idx(i);
            if self.mul_idx(i, inv) != 0 || self.mul_idx(inv, i) != 0 {
                return Err(Error::NotAGroup(format!("bad inverse for index {i}")));
            }
        }
        self.check_associativity()?;
        if let Structure::Product { left, right } = &self.inner.structure {
            if left.order() * right.order() != n {
                return Err(Error::NotAGroup("product order mismatch".into()));
            }
            for i in 0..left.order() {
                for j in 0..right.order() {
                    let expected = format!("({},{})", left.label(i), right.label(j));
                    if self.label(i * right.order() + j) != expected {
                        return Err(Error::NotAGroup(format!(
                            "product label mismatch at ({i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order();
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            if self.mul_idx(self.mul_idx(i, j), k) != self.mul_idx(i, self.mul_idx(j, k)) {
                return Err(Error::NotAGroup(format!(
                    "associativity fails at ({i},{j},{k})"
                )));
            }
            Ok(())
        };
        if n <= FULL_ASSOC_SCAN_MAX {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1ab1e);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn structure(&self) -> &Structure {
        &self.inner.structure
    }

    /// The two factors when this group was built as a direct product.
    pub fn factors(&self) -> Option<(&FiniteGroup, &FiniteGroup)> {
        match &self.inner.structure {
            Structure::Atomic => None,
            Structure::Product { left, right } => Some((left, right)),
        }
    }

    /// Flat index of the pair `(i, j)` in a product group.
    pub fn encode_pair(&self, i: usize, j: usize) -> Option<usize> {
        self.factors().map(|(_, right)| i * right.order() + j)
    }

    /// Splits a flat index back into its factor pair.
    pub fn decode_pair(&self, flat: usize) -> Option<(usize, usize)> {
        self.factors()
            .map(|(_, right)| (flat / right.order(), flat % right.order()))
    }

    /// True when both handles point at the same underlying table.
    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn identity(&self) -> GroupElement {
        self.element(0)
    }

    pub fn element(&self, index: usize) -> GroupElement {
        assert!(index < self.order(), "element index out of range");
        GroupElement {
            group: self.clone(),
            index,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// Looks an element up by its display label.
    pub fn by_label(&self, label: &str) -> Result<GroupElement> {
        self.inner
            .label_index
            .get(label)
            .map(|&i| self.element(i))
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv_idx(&self, a: usize) -> usize {
        self.inner.inverses[a] as usize
    }

    /// Conjugate `a^x = x⁻¹ a x`.
    #[inline]
    pub fn conj_idx(&self, a: usize, x: usize) -> usize {
        self.mul_idx(self.mul_idx(self.inv_idx(x), a), x)
    }

    /// Commutator `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm_idx(&self, a: usize, b: usize) -> usize {
        let ab = self.mul_idx(a, b);
        self.mul_idx(self.mul_idx(self.inv_idx(a), self.inv_idx(b)), ab)
    }

    /// Iterated commutator `[x,_n g]`; depth 0 returns `x` unchanged.
    #[inline]
    pub fn engel_idx(&self, x: usize, g: usize, n: u32) -> usize {
        let mut acc = x;
        for _ in 0..n {
            acc = self.comm_idx(acc, g);
        }
        acc
    }

    /// Least `k ≥ 1` with `a^k` equal to the identity.
    pub fn order_of_idx(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul_idx(acc, a);
            k += 1;
        }
        k
    }
}

impl GroupElement {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn label(&self) -> &str {
        self.group.label(self.index)
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }

    fn require_same_group(&self, other: &GroupElement) -> Result<()> {
        if self.group.same_group(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        self.require_same_group(other)?;
        Ok(self
            .group
            .element(self.group.mul_idx(self.index, other.index)))
    }

    pub fn inverse(&self) -> GroupElement {
        self.group.element(self.group.inv_idx(self.index))
    }

    /// `self` conjugated by `x`, i.e. `x⁻¹ · self · x`.
    pub fn conjugate_by(&self, x: &GroupElement) -> Result<GroupElement> {
        self.require_same_group(x)?;
        Ok(self.group.element(self.group.conj_idx(self.index, x.index)))
    }

    pub fn commutator(&self, other: &GroupElement) -> Result<GroupElement> {
        self.require_same_group(other)?;
        Ok(self
            .group
            .element(self.group.comm_idx(self.index, other.index)))
    }

    /// Least `k ≥ 1` with `self^k` equal to the identity.
    pub fn order(&self) -> usize {
        self.group.order_of_idx(self.index)
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.index == other.index
    }
}

impl Eq for GroupElement {}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupElement({} @ {})", self.label(), self.index)
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}
