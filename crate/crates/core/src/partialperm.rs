//! Partial permutations of `{1..n}`: the symmetric inverse monoid `I_n`.
//!
//! Maps act on the right and compose left to right: `i(f·g) = (if)g`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::enumerate::canonical_form;
use crate::error::{Error, Result};
use crate::table::FiniteSemigroup;

/// Sentinel image for points outside the domain.
pub const UNDEFINED: usize = usize::MAX;

/// Largest degree for which `I_n` is tabulated.
pub const MAX_MONOID_DEGREE: usize = 4;
/// Largest degree searched for inverse subsemigroups.
pub const MAX_SUBSEMIGROUP_DEGREE: usize = 3;
pub const MAX_SUBSEMIGROUP_SIZE: usize = 8;

/// A partial injection on `0..degree`; `images[i] == UNDEFINED` outside the domain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    images: Vec<usize>,
}

impl PartialPerm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &y) in images.iter().enumerate() {
            if y == UNDEFINED {
                continue;
            }
            if y >= n {
                return Err(Error::IndexOutOfRange {
                    row: i,
                    col: 0,
                    value: y,
                    order: n,
                });
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::NotInjective);
            }
        }
        Ok(PartialPerm { images })
    }

    /// From 1-based images with 0 for undefined, as in the text form.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        Self::new(
            images
                .iter()
                .map(|&v| if v == 0 { UNDEFINED } else { v - 1 })
                .collect(),
        )
    }

    pub fn empty(degree: usize) -> Self {
        PartialPerm {
            images: vec![UNDEFINED; degree],
        }
    }

    pub fn identity(degree: usize) -> Self {
        PartialPerm {
            images: (0..degree).collect(),
        }
    }

    /// The identity on `domain` (0-based points).
    pub fn partial_identity(degree: usize, domain: &[usize]) -> Self {
        let mut images = vec![UNDEFINED; degree];
        for &i in domain {
            images[i] = i;
        }
        PartialPerm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> Option<usize> {
        match self.images[i] {
            UNDEFINED => None,
            y => Some(y),
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.image(i).is_some())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&y| y != UNDEFINED).count()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images
            .iter()
            .map(|&y| if y == UNDEFINED { 0 } else { y + 1 })
            .collect()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &PartialPerm) -> Result<PartialPerm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &PartialPerm) -> PartialPerm {
        PartialPerm {
            images: self
                .images
                .iter()
                .map(|&y| {
                    if y == UNDEFINED {
                        UNDEFINED
                    } else {
                        other.images[y]
                    }
                })
                .collect(),
        }
    }

    pub fn invert(&self) -> PartialPerm {
        let mut images = vec![UNDEFINED; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            if y != UNDEFINED {
                images[y] = i;
            }
        }
        PartialPerm { images }
    }

    pub fn is_partial_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| y == UNDEFINED || y == i)
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialPerm({self})")
    }
}

/// `n; i1 i2 … in`, 1-based, 0 for undefined.
impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.degree())?;
        for v in self.to_one_based() {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl FromStr for PartialPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |message: String| Error::Parse { line: 1, message };
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| parse_err("expected `n; images`".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| parse_err(format!("bad degree `{}`", head.trim())))?;
        let images = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(format!("bad image `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(parse_err(format!(
                "expected {n} images, found {}",
                images.len()
            )));
        }
        PartialPerm::from_one_based(&images)
    }
}

/// All partial permutations of degree `n`, sorted by their 1-based image arrays
/// (so the empty map comes first).
pub fn all_partial_perms(n: usize) -> Vec<PartialPerm> {
    fn extend(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<PartialPerm>) {
        if prefix.len() == n {
            out.push(PartialPerm {
                images: prefix.clone(),
            });
            return;
        }
        prefix.push(UNDEFINED);
        extend(n, prefix, used, out);
        prefix.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                prefix.push(y);
                extend(n, prefix, used, out);
                prefix.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The Cayley table of `I_n`.
pub fn monoid_in(n: usize) -> Result<FiniteSemigroup> {
    monoid_in_with_elements(n).map(|(s, _)| s)
}

/// `I_n` together with the partial permutation behind each element index.
pub fn monoid_in_with_elements(n: usize) -> Result<(FiniteSemigroup, Vec<PartialPerm>)> {
    if n == 0 || n > MAX_MONOID_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: MAX_MONOID_DEGREE,
        });
    }
    let elements = all_partial_perms(n);
    let s = table_of(&elements);
    Ok((s, elements))
}

fn table_of(elements: &[PartialPerm]) -> FiniteSemigroup {
    let index: std::collections::HashMap<&PartialPerm, usize> =
        elements.iter().enumerate().map(|(i, f)| (f, i)).collect();
    FiniteSemigroup::from_fn(elements.len(), |x, y| {
        index[&elements[x].compose_unchecked(&elements[y])]
    })
    .expect("composition of partial maps is associative")
}

fn check_subsemigroup_bounds(n: usize, k: usize) -> Result<()> {
    if n == 0 || n > MAX_SUBSEMIGROUP_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            max: MAX_SUBSEMIGROUP_DEGREE,
        });
    }
    if k > MAX_SUBSEMIGROUP_SIZE {
        return Err(Error::OrderTooLarge {
            requested: k,
            cap: MAX_SUBSEMIGROUP_SIZE,
            filter: "partial-permutation subsemigroups".into(),
        });
    }
    Ok(())
}

/// Every non-empty inverse subsemigroup of `I_n` with at most `k` elements, as
/// element sets (not deduplicated up to isomorphism). Sorted by element list.
pub fn inverse_subsemigroup_sets(n: usize, k: usize) -> Result<Vec<Vec<PartialPerm>>> {
    check_subsemigroup_bounds(n, k)?;
    let (s, elements) = monoid_in_with_elements(n)?;
    let inv: Vec<usize> = elements
        .iter()
        .map(|f| elements.iter().position(|g| *g == f.invert()).unwrap())
        .collect();
    debug_assert!(s.order() <= 64);

    let close = |mut mask: u64| -> u64 {
        loop {
            let mut next = mask;
            for x in bits(mask) {
                next |= 1 << inv[x];
                for y in bits(mask) {
                    next |= 1 << s.mul(x, y);
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    };

    // Every inverse subsemigroup is reached by adding its elements one at a time.
    let mut seen: HashSet<u64> = HashSet::new();
    let mut frontier = vec![0u64];
    while let Some(mask) = frontier.pop() {
        for x in 0..s.order() {
            if mask & (1 << x) != 0 {
                continue;
            }
            let c = close(mask | (1 << x));
            if c.count_ones() as usize <= k && seen.insert(c) {
                frontier.push(c);
            }
        }
    }
    let sets: BTreeSet<Vec<usize>> = seen.into_iter().map(|m| bits(m).collect()).collect();
    Ok(sets
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| elements[i].clone()).collect())
        .collect())
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// Inverse subsemigroups of `I_n` with at most `k` elements, one per isomorphism
/// class, as canonical tables sorted by (order, table).
pub fn subsemigroups_up_to_order(n: usize, k: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut classes = BTreeSet::new();
    for set in inverse_subsemigroup_sets(n, k)? {
        classes.insert(canonical_form(&table_of(&set)));
    }
    Ok(classes.into_iter().map(|c| c.to_semigroup()).collect())
}
