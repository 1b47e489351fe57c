use std::sync::Arc;

use super::{build_symmetric, FiniteGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite spin set with a right action of a group: spin `q` moved by `g`
/// is `act(q, g)`, and `act(act(q, g), h) = act(q, gh)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SpinAction {
    group: Arc<FiniteGroup>,
    size: usize,
    act: Vec<usize>,
}

impl std::fmt::Debug for SpinAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpinAction")
            .field("group_order", &self.group.order())
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

impl SpinAction {
    /// Builds an action from `table[q][g]`, checking that the identity acts
    /// trivially and that the right-action law holds for every triple.
    pub fn from_table(
        group: Arc<FiniteGroup>,
        table: &[Vec<usize>],
        limits: &Limits,
    ) -> Result<SpinAction> {
        check_spins(table.len() as u128, limits)?;
        let n = group.order();
        let m = table.len();
        for (q, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAction(format!(
                    "row {q} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row.iter().any(|&x| x >= m) {
                return Err(Error::InvalidAction(format!(
                    "row {q} has an out-of-range spin"
                )));
            }
        }
        let action = SpinAction {
            group,
            size: m,
            act: table.iter().flatten().copied().collect(),
        };
        if !action.satisfies_action_law() {
            return Err(Error::InvalidAction("not a right action".into()));
        }
        Ok(action)
    }

    fn from_fn(
        group: Arc<FiniteGroup>,
        size: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> SpinAction {
        let n = group.order();
        let mut act = Vec::with_capacity(size * n);
        for q in 0..size {
            for g in 0..n {
                act.push(f(q, g));
            }
        }
        SpinAction { group, size, act }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, q: usize, g: GroupElement) -> usize {
        self.act[q * self.group.order() + g.0]
    }

    /// Row-major copy of the action table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        if self.group.order() == 0 {
            return vec![];
        }
        self.act
            .chunks(self.group.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn fixed_by(&self, g: GroupElement) -> Vec<usize> {
        (0..self.size).filter(|&q| self.act(q, g) == q).collect()
    }

    /// Exhaustive check of `act(q, 1) = q` and `act(act(q,g),h) = act(q,gh)`.
    pub fn satisfies_action_law(&self) -> bool {
        let grp = &self.group;
        (0..self.size).all(|q| {
            self.act(q, GroupElement::IDENTITY) == q
                && grp.elements().all(|g| {
                    let qg = self.act(q, g);
                    grp.elements()
                        .all(|h| self.act(qg, h) == self.act(q, grp.mul(g, h)))
                })
        })
    }

    pub fn same_group(&self, group: &FiniteGroup) -> bool {
        std::ptr::eq(self.group.as_ref(), group) || *self.group == *group
    }
}

fn check_spins(m: u128, limits: &Limits) -> Result<()> {
    if m > limits.max_spins as u128 {
        return Err(Error::bound("spin count", m, limits.max_spins as u128));
    }
    Ok(())
}

/// The group acting on itself by right multiplication.
pub fn regular_action(group: Arc<FiniteGroup>) -> SpinAction {
    let n = group.order();
    let g2 = group.clone();
    SpinAction::from_fn(group, n, move |q, x| {
        g2.mul(GroupElement(q), GroupElement(x)).0
    })
}

/// `m` spins, each fixed by every element.
pub fn trivial_action(group: Arc<FiniteGroup>, m: usize, limits: &Limits) -> Result<SpinAction> {
    check_spins(m as u128, limits)?;
    Ok(SpinAction::from_fn(group, m, |q, _| q))
}

/// The color set `𝔊×[k] ∪ {0}`: `k` regular copies of the group (spin
/// `c·|𝔊| + x` is element `x` in copy `c`) followed by one spin fixed by
/// everything, at index `k·|𝔊|`.
pub fn standard_colors(group: Arc<FiniteGroup>, k: usize, limits: &Limits) -> Result<SpinAction> {
    let regular = regular_action(group.clone());
    let zero = trivial_action(group, 1, limits)?;
    disjoint_union_action(&[regular, zero], &[k, 1], limits)
}

/// The zero-free color set `𝔊×[k]`.
pub fn zero_free_colors(group: Arc<FiniteGroup>, k: usize, limits: &Limits) -> Result<SpinAction> {
    let regular = regular_action(group);
    disjoint_union_action(&[regular], &[k], limits)
}

/// All `2^d` subsets of `[d]` (as bitmasks) under the symmetric group
/// `build_symmetric(d)`, which permutes them elementwise.
pub fn subset_action(d: usize, limits: &Limits) -> Result<SpinAction> {
    if d >= 64 {
        return Err(Error::bound(
            "subset count",
            u128::MAX,
            limits.max_spins as u128,
        ));
    }
    check_spins(1u128 << d, limits)?;
    let group = Arc::new(build_symmetric(d, limits)?);
    let perms = group
        .permutations()
        .expect("symmetric group carries permutations")
        .to_vec();
    Ok(SpinAction::from_fn(group, 1 << d, |set, g| {
        let p = &perms[g];
        (0..d)
            .filter(|&x| set >> x & 1 == 1)
            .fold(0usize, |acc, x| acc | 1 << p[x])
    }))
}

/// The natural action of a permutation group on its points.
pub fn point_action(group: Arc<FiniteGroup>) -> Result<SpinAction> {
    let perms = group
        .permutations()
        .ok_or_else(|| Error::InvalidAction("group has no permutation representation".into()))?
        .to_vec();
    let degree = perms[0].len();
    Ok(SpinAction::from_fn(group, degree, |q, g| perms[g][q]))
}

/// `Q₁×[k₁] ∪ ⋯ ∪ Q_p×[k_p]`, acting on the first coordinate. Spins are
/// numbered part-major, copy-minor: part `i`, copy `c`, spin `q` is
/// `offset_i + c·|Qᵢ| + q`.
pub fn disjoint_union_action(
    parts: &[SpinAction],
    mults: &[usize],
    limits: &Limits,
) -> Result<SpinAction> {
    if parts.len() != mults.len() {
        return Err(Error::LengthMismatch {
            expected: parts.len(),
            found: mults.len(),
        });
    }
    let Some(first) = parts.first() else {
        return Err(Error::LengthMismatch {
            expected: 1,
            found: 0,
        });
    };
    if parts.iter().any(|p| !p.same_group(&first.group)) {
        return Err(Error::GroupMismatch);
    }
    let total: u128 = parts
        .iter()
        .zip(mults)
        .map(|(p, &k)| p.size as u128 * k as u128)
        .sum();
    check_spins(total, limits)?;
    let group = first.group.clone();
    let n = group.order();
    let mut act = Vec::with_capacity(total as usize * n);
    let mut offset = 0;
    for (part, &k) in parts.iter().zip(mults) {
        for c in 0..k {
            let base = offset + c * part.size;
            for q in 0..part.size {
                for g in 0..n {
                    act.push(base + part.act(q, GroupElement(g)));
                }
            }
        }
        offset += k * part.size;
    }
    Ok(SpinAction {
        group,
        size: total as usize,
        act,
    })
}

/// Spins fixed by every element of `sub`.
pub fn fixed_set(action: &SpinAction, sub: &Subgroup) -> Vec<usize> {
    (0..action.size)
        .filter(|&q| sub.elements().iter().all(|&g| action.act(q, g) == q))
        .collect()
}

/// Per-element fixed sets as bitsets, for fast `|Fix⟨gens⟩|` queries: the
/// fixed set of a generated subgroup is the intersection of the generators'
/// fixed sets.
#[derive(Debug, Clone)]
pub(crate) struct FixTable {
    words: usize,
    size: usize,
    bits: Vec<Vec<u64>>,
    counts: Vec<usize>,
}

impl FixTable {
    pub(crate) fn new(action: &SpinAction) -> FixTable {
        let words = action.size.div_ceil(64);
        let bits: Vec<Vec<u64>> = action
            .group
            .elements()
            .map(|g| {
                let mut b = vec![0u64; words];
                for q in 0..action.size {
                    if action.act(q, g) == q {
                        b[q / 64] |= 1 << (q % 64);
                    }
                }
                b
            })
            .collect();
        let counts = bits
            .iter()
            .map(|b| b.iter().map(|w| w.count_ones() as usize).sum())
            .collect();
        FixTable {
            words,
            size: action.size,
            bits,
            counts,
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    /// `|Fix⟨gens⟩|`.
    pub(crate) fn fixed_count(&self, gens: &[GroupElement]) -> usize {
        match gens {
            [] => self.size,
            [g] => self.counts[g.0],
            _ => (0..self.words)
                .map(|w| {
                    gens.iter()
                        .fold(u64::MAX, |acc, g| acc & self.bits[g.0][w])
                        .count_ones() as usize
                })
                .sum(),
        }
    }

    /// Spins fixed by at least one of `gens`.
    pub(crate) fn union_count(&self, gens: &[GroupElement]) -> usize {
        (0..self.words)
            .map(|w| {
                gens.iter()
                    .fold(0u64, |acc, g| acc | self.bits[g.0][w])
                    .count_ones() as usize
            })
            .sum()
    }
}
