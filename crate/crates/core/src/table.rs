//! Cayley-table semigroups and the basic predicates on them.
//!
//! Elements are 0-based indices. `x·y` is `table[x][y]` (row times column).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of an element inside its parent semigroup, `0..order`.
pub type ElementId = usize;

/// Orders above this use Light's associativity test instead of the direct triple loop.
pub const DIRECT_ASSOCIATIVITY_LIMIT: usize = 16;

/// A finite semigroup given by its Cayley table, validated associative on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<ElementId>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table of `n * n` entries.
    pub fn new(n: usize, table: Vec<ElementId>) -> Result<Self> {
        check_shape(n, &table)?;
        let violation = if n <= DIRECT_ASSOCIATIVITY_LIMIT {
            first_associativity_violation(n, &table)
        } else if light_associativity_test(n, &table) {
            None
        } else {
            first_associativity_violation(n, &table)
        };
        if let Some((x, y, z)) = violation {
            return Err(Error::NotAssociative { x, y, z });
        }
        Ok(FiniteSemigroup {
            order: n,
            table,
            labels: None,
        })
    }

    pub fn from_rows(rows: &[Vec<ElementId>]) -> Result<Self> {
        let n = rows.len();
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::WrongShape {
                expected: n * n,
                found: r * n + row.len(),
            });
        }
        Self::new(n, rows.concat())
    }

    /// Builds from a closure `x, y -> x·y`.
    pub fn from_fn(n: usize, mul: impl Fn(ElementId, ElementId) -> ElementId) -> Result<Self> {
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| mul(x, y))
            .collect();
        Self::new(n, table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x * self.order + y]
    }

    /// Product of a non-empty sequence, evaluated left to right.
    pub fn product(&self, xs: &[ElementId]) -> ElementId {
        let (&first, rest) = xs.split_first().expect("empty product");
        rest.iter().fold(first, |acc, &y| self.mul(acc, y))
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn row(&self, x: ElementId) -> &[ElementId] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    /// The semigroup with elements renamed by `perm` (old element `x` becomes `perm[x]`).
    pub fn relabel(&self, perm: &[ElementId]) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            labels: None,
        }
    }

    /// The semigroup on `elements` (which must be closed), renumbered `0..k` in the given order.
    pub fn restrict(&self, elements: &[ElementId]) -> Result<FiniteSemigroup> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            pos[x] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in elements {
            for &y in elements {
                let p = pos[self.mul(x, y)];
                if p == usize::MAX {
                    return Err(Error::IndexOutOfRange {
                        row: x,
                        col: y,
                        value: self.mul(x, y),
                        order: k,
                    });
                }
                table.push(p);
            }
        }
        FiniteSemigroup::new(k, table)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|x| (x + 1..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    #[inline]
    pub fn is_idempotent(&self, x: ElementId) -> bool {
        self.mul(x, x) == x
    }

    /// E(S), in increasing order.
    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|x| self.is_idempotent(x))
    }

    /// Two-sided identity, if any.
    pub fn identity(&self) -> Option<ElementId> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: ElementId, k: usize) -> ElementId {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Index and period of the monogenic subsemigroup generated by `x`:
    /// the least `i, p >= 1` with `x^(i+p) = x^i`.
    pub fn index_period(&self, x: ElementId) -> (usize, usize) {
        let mut seen = vec![0usize; self.order];
        let mut cur = x;
        let mut k = 1;
        loop {
            if seen[cur] != 0 {
                return (seen[cur], k - seen[cur]);
            }
            seen[cur] = k;
            cur = self.mul(cur, x);
            k += 1;
        }
    }

    /// Some `y` with `x·y·x = x` and `y·x·y = y`, if `x` is regular.
    pub fn an_inverse_of(&self, x: ElementId) -> Option<ElementId> {
        self.elements()
            .find(|&y| self.product(&[x, y, x]) == x && self.product(&[y, x, y]) == y)
    }

    pub fn is_regular(&self) -> bool {
        self.elements()
            .all(|x| self.elements().any(|y| self.product(&[x, y, x]) == x))
    }

    pub fn idempotents_commute(&self) -> bool {
        let e = self.idempotents();
        e.iter()
            .all(|&a| e.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Regular with commuting idempotents.
    pub fn is_inverse_semigroup(&self) -> bool {
        self.is_regular() && self.idempotents_commute()
    }

    /// Every element lies in a subgroup, i.e. every monogenic subsemigroup is a cyclic group.
    pub fn all_elements_in_subgroups(&self) -> bool {
        self.elements().all(|x| self.index_period(x).0 == 1)
    }

    /// `x ↦ x⁻¹`: the unique inverse in an inverse semigroup, otherwise the group
    /// inverse inside `H_x` when every element lies in a subgroup.
    pub fn inversion_map(&self) -> Result<UnaryMap> {
        if self.is_inverse_semigroup() {
            let images = self
                .elements()
                .map(|x| {
                    self.an_inverse_of(x)
                        .expect("inverse semigroups are regular")
                })
                .collect();
            return Ok(UnaryMap::new(images));
        }
        self.group_inverse_map()
            .ok_or(Error::NotInverseOrCompletelyRegular)
    }

    /// `x ↦ x^(2p-1)` where `p` is the period of `x`: the inverse of `x` in the
    /// cyclic group it generates. `None` unless every element has index 1.
    pub fn group_inverse_map(&self) -> Option<UnaryMap> {
        let mut images = Vec::with_capacity(self.order);
        for x in self.elements() {
            let (index, period) = self.index_period(x);
            if index != 1 {
                return None;
            }
            images.push(self.power(x, 2 * period - 1));
        }
        Some(UnaryMap::new(images))
    }

    /// `b ≤ a` iff `b = ea` for some idempotent `e`, i.e. `b = bb⁻¹a`.
    pub fn natural_partial_order(&self) -> Result<NaturalOrder> {
        if !self.is_inverse_semigroup() {
            return Err(Error::NotInverse);
        }
        let inv = self.inversion_map()?;
        let n = self.order;
        let mut leq = vec![false; n * n];
        for b in 0..n {
            for a in 0..n {
                leq[b * n + a] = self.product(&[b, inv.apply(b), a]) == b;
            }
        }
        Ok(NaturalOrder { order: n, leq })
    }

    pub fn is_left_cancellative(&self) -> bool {
        self.elements().all(|x| is_injective(self.row(x)))
    }

    pub fn is_right_cancellative(&self) -> bool {
        self.elements().all(|x| {
            let col: Vec<_> = self.elements().map(|y| self.mul(y, x)).collect();
            is_injective(&col)
        })
    }

    pub fn is_cancellative(&self) -> bool {
        self.is_left_cancellative() && self.is_right_cancellative()
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

fn is_injective(images: &[ElementId]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&y| !std::mem::replace(&mut seen[y], true))
}

fn check_shape(n: usize, table: &[ElementId]) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if table.len() != n * n {
        return Err(Error::WrongShape {
            expected: n * n,
            found: table.len(),
        });
    }
    if let Some(i) = table.iter().position(|&v| v >= n) {
        return Err(Error::IndexOutOfRange {
            row: i / n,
            col: i % n,
            value: table[i],
            order: n,
        });
    }
    Ok(())
}

/// First triple `(x, y, z)` in lexicographic order with `(xy)z ≠ x(yz)`.
pub fn first_associativity_violation(
    n: usize,
    table: &[ElementId],
) -> Option<(ElementId, ElementId, ElementId)> {
    for x in 0..n {
        for y in 0..n {
            let xy = table[x * n + y];
            for z in 0..n {
                if table[xy * n + z] != table[x * n + table[y * n + z]] {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Light's test: associativity holds iff `(x·a)·y = x·(a·y)` for every `a` in a
/// generating set. The generating set is built greedily.
pub fn light_associativity_test(n: usize, table: &[ElementId]) -> bool {
    generating_set(n, table).into_iter().all(|a| {
        (0..n).all(|x| {
            let xa = table[x * n + a];
            (0..n).all(|y| table[xa * n + y] == table[x * n + table[a * n + y]])
        })
    })
}

/// Greedy generating set of the magma: scan elements in order, adding any not
/// already generated.
pub fn generating_set(n: usize, table: &[ElementId]) -> Vec<ElementId> {
    let mut inside = vec![false; n];
    let mut members: Vec<ElementId> = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if inside[x] {
            continue;
        }
        gens.push(x);
        inside[x] = true;
        members.push(x);
        // close under products with everything generated so far
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for p in [table[a * n + b], table[b * n + a]] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
    gens
}

/// A total map from a semigroup to itself, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct UnaryMap {
    images: Vec<ElementId>,
}

impl UnaryMap {
    pub fn new(images: Vec<ElementId>) -> Self {
        UnaryMap { images }
    }

    pub fn identity(n: usize) -> Self {
        UnaryMap::new((0..n).collect())
    }

    /// Checks the image count and range against `s`.
    pub fn for_semigroup(s: &FiniteSemigroup, images: Vec<ElementId>) -> Result<Self> {
        if images.len() != s.order() {
            return Err(Error::MapLength {
                expected: s.order(),
                found: images.len(),
            });
        }
        if let Some(i) = images.iter().position(|&v| v >= s.order()) {
            return Err(Error::IndexOutOfRange {
                row: i,
                col: 0,
                value: images[i],
                order: s.order(),
            });
        }
        Ok(UnaryMap::new(images))
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.images[x]
    }

    pub fn images(&self) -> &[ElementId] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.images)
    }

    /// On a finite set injective and bijective coincide.
    pub fn is_bijective(&self) -> bool {
        self.is_injective()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Apply `self`, then `other` (right action: `x(αβ) = (xα)β`).
    pub fn then(&self, other: &UnaryMap) -> UnaryMap {
        UnaryMap::new(self.images.iter().map(|&x| other.apply(x)).collect())
    }

    pub fn inverse(&self) -> Option<UnaryMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(UnaryMap::new(inv))
    }

    /// Smallest `k >= 1` with `self^k = id`. Panics on non-bijections.
    pub fn permutation_order(&self) -> usize {
        assert!(self.is_bijective(), "order of a non-bijection");
        let mut seen = vec![false; self.len()];
        let mut order = 1;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn fixed_points(&self) -> Vec<ElementId> {
        (0..self.len()).filter(|&x| self.images[x] == x).collect()
    }
}

impl fmt::Debug for UnaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.images).finish()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The natural partial order `b ≤ a ⇔ b = b·a⁻¹·a` on an inverse semigroup.
#[derive(Clone, PartialEq, Eq)]
pub struct NaturalOrder {
    order: usize,
    leq: Vec<bool>,
}

impl NaturalOrder {
    pub fn leq(&self, b: ElementId, a: ElementId) -> bool {
        self.leq[b * self.order + a]
    }

    /// All `(b, a)` with `b ≤ a`, including the diagonal.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        (0..self.order)
            .flat_map(|b| (0..self.order).map(move |a| (b, a)))
            .filter(|&(b, a)| self.leq(b, a))
            .collect()
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.order;
        let reflexive = (0..n).all(|a| self.leq(a, a));
        let antisymmetric =
            (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))));
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !self.leq(a, b) || (0..n).all(|c| !self.leq(b, c) || self.leq(a, c)))
        });
        reflexive && antisymmetric && transitive
    }
}

impl fmt::Debug for NaturalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}
