//! Standard small semigroups used as examples, gallery entries and test fixtures.

use std::collections::{BTreeSet, HashMap};

use crate::table::{ElementId, FiniteSemigroup};

/// The 4-element band `1·2 = 3`, `2·1 = 4` (1-based), read row times column.
pub const BAND_B4_ROWS: [[usize; 4]; 4] = [[1, 3, 3, 1], [4, 2, 2, 4], [1, 3, 3, 1], [4, 2, 2, 4]];

pub fn band_b4() -> FiniteSemigroup {
    let rows: Vec<Vec<usize>> = BAND_B4_ROWS
        .iter()
        .map(|r| r.iter().map(|v| v - 1).collect())
        .collect();
    FiniteSemigroup::from_rows(&rows).expect("B4 is a band")
}

pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::new(1, vec![0]).unwrap()
}

/// `Z/n` under addition.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, y| (x + y) % n).expect("cyclic group")
}

/// The chain `0 < 1 < … < n-1` with `x·y = min(x, y)`.
pub fn chain_semilattice(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, y| x.min(y)).expect("chain")
}

/// `x·y = x`.
pub fn left_zero_band(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |x, _| x).expect("left zero band")
}

/// `x·y = y`.
pub fn right_zero_band(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |_, y| y).expect("right zero band")
}

/// `{a, 0}` with every product equal to `0`; `a` is element 0, the zero is element 1.
pub fn nilpotent_semigroup_two() -> FiniteSemigroup {
    FiniteSemigroup::new(2, vec![1, 1, 1, 1]).unwrap()
}

/// Index of the matrix unit `(i, j)`, `i, j ∈ {1, 2}`, in [`brandt_b2`]. The zero is 0.
pub fn brandt_index(i: usize, j: usize) -> ElementId {
    assert!((1..=2).contains(&i) && (1..=2).contains(&j));
    1 + 2 * (i - 1) + (j - 1)
}

/// The Brandt semigroup B2: `{0} ∪ {(i, j)}` with `(i,j)(k,l) = (i,l)` if `j = k`, else `0`.
pub fn brandt_b2() -> FiniteSemigroup {
    let coords = |x: usize| ((x - 1) / 2 + 1, (x - 1) % 2 + 1);
    FiniteSemigroup::from_fn(5, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let (i, j) = coords(x);
        let (k, l) = coords(y);
        if j == k {
            brandt_index(i, l)
        } else {
            0
        }
    })
    .expect("B2")
}

/// `S ∪ {0}`; the new zero is the last element.
pub fn adjoin_zero(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    FiniteSemigroup::from_fn(n + 1, |x, y| if x == n || y == n { n } else { s.mul(x, y) })
        .expect("adjoining a zero preserves associativity")
}

/// `S ∪ {1}`; the new identity is the last element.
pub fn adjoin_identity(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    FiniteSemigroup::from_fn(n + 1, |x, y| match (x == n, y == n) {
        (true, _) => y,
        (false, true) => x,
        _ => s.mul(x, y),
    })
    .expect("adjoining an identity preserves associativity")
}

/// `S × T`; the pair `(s, t)` is element `s * |T| + t`.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
    let m = t.order();
    FiniteSemigroup::from_fn(s.order() * m, |x, y| {
        s.mul(x / m, y / m) * m + t.mul(x % m, y % m)
    })
    .expect("direct product")
}

/// The group generated by permutations of `0..degree` (images arrays), acting on
/// the right. Elements are sorted lexicographically, so the identity is element 0.
pub fn permutation_group(degree: usize, generators: &[Vec<usize>]) -> FiniteSemigroup {
    let identity: Vec<usize> = (0..degree).collect();
    let compose = |a: &[usize], b: &[usize]| a.iter().map(|&x| b[x]).collect::<Vec<_>>();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
    elements.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for h in generators {
            let gh = compose(&g, h);
            if elements.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    let elements: Vec<Vec<usize>> = elements.into_iter().collect();
    let index: HashMap<&[usize], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    FiniteSemigroup::from_fn(elements.len(), |x, y| {
        index[compose(&elements[x], &elements[y]).as_slice()]
    })
    .expect("permutation groups are associative")
}

pub fn symmetric_group(n: usize) -> FiniteSemigroup {
    let mut transposition: Vec<usize> = (0..n).collect();
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    if n >= 2 {
        transposition.swap(0, 1);
    }
    permutation_group(n, &[transposition, cycle])
}

pub fn alternating_group(n: usize) -> FiniteSemigroup {
    // 3-cycles (0 1 k) generate A_n
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    permutation_group(n, &gens)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral_group(n: usize) -> FiniteSemigroup {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    permutation_group(n, &[rotation, reflection])
}

/// Q8 as a permutation group on 8 points.
pub fn quaternion_group() -> FiniteSemigroup {
    // i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6), shifted to 0-based
    let i = vec![1, 2, 3, 0, 5, 6, 7, 4];
    let j = vec![4, 7, 6, 5, 2, 1, 0, 3];
    permutation_group(8, &[i, j])
}
