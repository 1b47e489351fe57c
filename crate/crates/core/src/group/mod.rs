//! Finite groups given by multiplication tables, their subgroups, and
//! right actions on finite spin sets.

mod action;
mod perm;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

pub(crate) use action::FixTable;
pub use action::{
    disjoint_union_action, fixed_set, point_action, regular_action, standard_colors, subset_action,
    trivial_action, zero_free_colors, SpinAction,
};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// An element of a [`FiniteGroup`], identified by its row in the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub usize);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite group as an explicit multiplication table. The identity is
/// always element 0.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    /// One-line notation of each element, when the group was built as a
    /// permutation group. `perms[g][x]` is the image of point `x` under `g`.
    perms: Option<Vec<Vec<usize>>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a square multiplication table, relabelling so the
    /// identity sits at index 0, and rejects tables that are not groups.
    pub fn from_table(table: &[Vec<usize>], limits: &Limits) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        check_order(n, limits)?;
        check_shape(table)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let swap = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let relabelled: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| swap(table[swap(a)][swap(b)])).collect())
            .collect();
        if !verify_group(&relabelled) {
            return Err(Error::InvalidGroup(
                "table is not associative or lacks inverses".into(),
            ));
        }
        Ok(Self::from_verified(&relabelled, None))
    }

    fn from_verified(table: &[Vec<usize>], perms: Option<Vec<Vec<usize>>>) -> FiniteGroup {
        let n = table.len();
        let mul: Vec<usize> = table.iter().flatten().copied().collect();
        let inv = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&x| mul[g * n + x] == 0)
                    .expect("verified group")
            })
            .collect();
        FiniteGroup {
            order: n,
            mul,
            inv,
            perms,
        }
    }

    /// A permutation group given by its elements in one-line notation. The
    /// first permutation must be the identity and the set must be closed
    /// under composition. The product `gh` means "apply `g`, then `h`", so
    /// that points are acted on from the right.
    pub fn from_permutations(perms: Vec<Vec<usize>>, limits: &Limits) -> Result<FiniteGroup> {
        let n = perms.len();
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        check_order(n, limits)?;
        let degree = perms[0].len();
        if perms[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidGroup(
                "first permutation is not the identity".into(),
            ));
        }
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        if index.len() != n {
            return Err(Error::InvalidGroup("repeated permutation".into()));
        }
        let mut table = vec![vec![0; n]; n];
        let mut buf = vec![0; degree];
        for (a, pa) in perms.iter().enumerate() {
            if pa.len() != degree {
                return Err(Error::InvalidGroup(
                    "permutations of different degrees".into(),
                ));
            }
            for (b, pb) in perms.iter().enumerate() {
                for x in 0..degree {
                    buf[x] = pb[pa[x]];
                }
                table[a][b] = *index
                    .get(buf.as_slice())
                    .ok_or_else(|| Error::InvalidGroup("not closed under composition".into()))?;
            }
        }
        Ok(Self::from_verified(&table, Some(perms)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order).map(GroupElement)
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.0 < self.order
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.mul[a.0 * self.order + b.0])
    }

    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inv[a.0])
    }

    /// `a⁻¹ g a`.
    pub fn conjugate(&self, g: GroupElement, a: GroupElement) -> GroupElement {
        self.mul(self.mul(self.inv(a), g), a)
    }

    /// Row-major copy of the multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn permutations(&self) -> Option<&[Vec<usize>]> {
        self.perms.as_deref()
    }

    pub fn verify(&self) -> bool {
        verify_group(&self.table())
    }
}

fn check_order(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_group_order {
        return Err(Error::bound(
            "group order",
            n as u128,
            limits.max_group_order as u128,
        ));
    }
    Ok(())
}

fn check_shape(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidGroup(format!(
                "row {i} has length {}, expected {n}",
                row.len()
            )));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidGroup(format!(
                "row {i} has out-of-range entry {x}"
            )));
        }
    }
    Ok(())
}

/// Checks every group axiom on a raw table with the identity at index 0:
/// shape and range, identity row and column, two-sided inverses, and
/// associativity on all triples.
pub fn verify_group(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    if n == 0 || check_shape(table).is_err() {
        return false;
    }
    let m = |a: usize, b: usize| table[a][b];
    if (0..n).any(|x| m(0, x) != x || m(x, 0) != x) {
        return false;
    }
    for g in 0..n {
        if !(0..n).any(|x| m(g, x) == 0 && m(x, g) == 0) {
            return false;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The cyclic group ℤ_n.
pub fn build_cyclic(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::EmptyGroup);
    }
    check_order(n, limits)?;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    Ok(FiniteGroup::from_verified(&table, None))
}

/// The symmetric group on `d` points, elements in lexicographic order of
/// one-line notation (identity first).
pub fn build_symmetric(d: usize, limits: &Limits) -> Result<FiniteGroup> {
    if d == 0 {
        return Err(Error::EmptyGroup);
    }
    let order = perm::factorial(d).filter(|&f| f <= limits.max_group_order as u128);
    match order {
        Some(_) => FiniteGroup::from_permutations(perm::lexicographic(d), limits),
        None => Err(Error::bound(
            "symmetric group order",
            perm::factorial(d).unwrap_or(u128::MAX),
            limits.max_group_order as u128,
        )),
    }
}

/// The group of permutations of `Σ blocks` points that map each block
/// (consecutive runs of the given sizes) onto itself, i.e. the direct
/// product of the blocks' symmetric groups. Lexicographic element order.
pub fn build_block_symmetric(blocks: &[usize], limits: &Limits) -> Result<FiniteGroup> {
    let mut order: u128 = 1;
    for &b in blocks {
        if b == 0 {
            return Err(Error::InvalidGroup("empty block".into()));
        }
        order = order.saturating_mul(perm::factorial(b).unwrap_or(u128::MAX));
    }
    if order > limits.max_group_order as u128 {
        return Err(Error::bound(
            "block group order",
            order,
            limits.max_group_order as u128,
        ));
    }
    let degree: usize = blocks.iter().sum();
    let mut block_of = Vec::with_capacity(degree);
    for (i, &b) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(i, b));
    }
    let perms = perm::lexicographic(degree)
        .into_iter()
        .filter(|p| {
            p.iter()
                .enumerate()
                .all(|(x, &y)| block_of[x] == block_of[y])
        })
        .collect();
    FiniteGroup::from_permutations(perms, limits)
}

/// A subgroup, as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn trivial() -> Subgroup {
        Subgroup {
            elements: vec![GroupElement::IDENTITY],
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// `a⁻¹ H a`.
    pub fn conjugate(&self, group: &FiniteGroup, a: GroupElement) -> Subgroup {
        let mut elements: Vec<_> = self
            .elements
            .iter()
            .map(|&h| group.conjugate(h, a))
            .collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Whether the element list is a subgroup of `group`.
    pub fn is_valid(&self, group: &FiniteGroup) -> bool {
        self.contains(GroupElement::IDENTITY)
            && self.elements.iter().all(|&g| group.contains(g))
            && self.elements.iter().all(|&a| {
                self.contains(group.inv(a))
                    && self
                        .elements
                        .iter()
                        .all(|&b| self.contains(group.mul(a, b)))
            })
    }
}

/// The smallest subgroup containing `gens`, by closing `{1}` under right
/// multiplication by the generators.
pub fn generate_subgroup(group: &FiniteGroup, gens: &[GroupElement]) -> Subgroup {
    let mut seen = BTreeSet::from([GroupElement::IDENTITY]);
    let gens: Vec<_> = gens.iter().copied().filter(|g| !g.is_identity()).collect();
    let mut queue = VecDeque::from([GroupElement::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = group.mul(x, s);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Subgroup {
        elements: seen.into_iter().collect(),
    }
}
