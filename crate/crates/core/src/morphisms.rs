//! Automorphisms, fixed points, the map `x ↦ x⁻¹·(xα)` and involutions.
//!
//! Maps act on the right: `xα`. Composition `αβ` applies `α` first.

use crate::error::Result;
use crate::structure::green_relations;
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

/// Per-element isomorphism invariant used to prune automorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub idempotent: bool,
    pub h_class_size: usize,
    pub index: usize,
    pub period: usize,
}

pub fn fingerprints(s: &FiniteSemigroup) -> Vec<Fingerprint> {
    let green = green_relations(s);
    s.elements()
        .map(|x| {
            let (index, period) = s.index_period(x);
            Fingerprint {
                idempotent: s.is_idempotent(x),
                h_class_size: green.h.class_containing(x).len(),
                index,
                period,
            }
        })
        .collect()
}

/// A multiplicative bijection together with its order and fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub perm: UnaryMap,
    pub order: usize,
    pub fixed: Vec<ElementId>,
}

impl Automorphism {
    /// `None` unless `perm` is an automorphism of `s`.
    pub fn new(s: &FiniteSemigroup, perm: UnaryMap) -> Option<Self> {
        if !is_automorphism(s, &perm) {
            return None;
        }
        Some(Self::from_perm_unchecked(perm))
    }

    fn from_perm_unchecked(perm: UnaryMap) -> Self {
        Automorphism {
            order: perm.permutation_order(),
            fixed: perm.fixed_points(),
            perm,
        }
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.perm.apply(x)
    }

    pub fn is_involutory(&self) -> bool {
        self.order <= 2
    }
}

pub fn is_automorphism(s: &FiniteSemigroup, perm: &UnaryMap) -> bool {
    perm.len() == s.order()
        && perm.is_bijective()
        && s.elements().all(|x| {
            s.elements()
                .all(|y| perm.apply(s.mul(x, y)) == s.mul(perm.apply(x), perm.apply(y)))
        })
}

/// `(xy)φ = (yφ)(xφ)` with `φ` bijective.
pub fn is_antiautomorphism(s: &FiniteSemigroup, map: &UnaryMap) -> bool {
    map.len() == s.order()
        && map.is_bijective()
        && s.elements().all(|x| {
            s.elements()
                .all(|y| map.apply(s.mul(x, y)) == s.mul(map.apply(y), map.apply(x)))
        })
}

const UNSET: usize = usize::MAX;

struct AutSearch<'a> {
    s: &'a FiniteSemigroup,
    fp: Vec<Fingerprint>,
    img: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    found: Vec<UnaryMap>,
}

impl AutSearch<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.img[x] != UNSET {
            return self.img[x] == y;
        }
        if self.used[y] || self.fp[x] != self.fp[y] {
            return false;
        }
        self.img[x] = y;
        self.used[y] = true;
        self.trail.push(x);
        true
    }

    /// Forces images of products until closure or contradiction.
    fn propagate(&mut self, from: usize) -> bool {
        let mut next = from;
        while next < self.trail.len() {
            let a = self.trail[next];
            next += 1;
            let assigned: Vec<usize> = self.trail.clone();
            for &b in &assigned {
                let (ia, ib) = (self.img[a], self.img[b]);
                if !self.assign(self.s.mul(a, b), self.s.mul(ia, ib))
                    || !self.assign(self.s.mul(b, a), self.s.mul(ib, ia))
                {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.img[x]] = false;
            self.img[x] = UNSET;
        }
    }

    fn search(&mut self) {
        let Some(x) = self.img.iter().position(|&v| v == UNSET) else {
            self.found.push(UnaryMap::new(self.img.clone()));
            return;
        };
        for y in 0..self.s.order() {
            let mark = self.trail.len();
            if self.assign(x, y) && self.propagate(mark) {
                self.search();
            }
            self.undo(mark);
        }
    }
}

/// All automorphisms of `s`, sorted lexicographically by image array (identity first).
pub fn automorphism_group(s: &FiniteSemigroup) -> Vec<Automorphism> {
    let n = s.order();
    let mut search = AutSearch {
        s,
        fp: fingerprints(s),
        img: vec![UNSET; n],
        used: vec![false; n],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.search();
    let mut found = search.found;
    found.sort();
    debug_assert!(found.iter().all(|p| is_automorphism(s, p)));
    found
        .into_iter()
        .map(Automorphism::from_perm_unchecked)
        .collect()
}

/// `Fix(α) = E(S)`.
pub fn is_idempotent_fixing(s: &FiniteSemigroup, alpha: &UnaryMap) -> bool {
    s.elements()
        .all(|x| (alpha.apply(x) == x) == s.is_idempotent(x))
}

/// The map `xψ = x⁻¹·(xα)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiMap {
    pub map: UnaryMap,
}

impl PsiMap {
    /// Builds ψ from an already computed inversion map.
    pub fn with_inversion(s: &FiniteSemigroup, inversion: &UnaryMap, alpha: &UnaryMap) -> Self {
        PsiMap {
            map: UnaryMap::new(
                s.elements()
                    .map(|x| s.mul(inversion.apply(x), alpha.apply(x)))
                    .collect(),
            ),
        }
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map.apply(x)
    }

    pub fn is_injective(&self) -> bool {
        self.map.is_injective()
    }
}

/// ψ for inverse semigroups, or for completely regular ones with the group inverse in `H_x`.
pub fn psi_map(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<PsiMap> {
    let inv = s.inversion_map()?;
    Ok(PsiMap::with_inversion(s, &inv, alpha))
}

pub fn is_psi_injective(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<bool> {
    psi_map(s, alpha).map(|p| p.is_injective())
}

/// A unary operation `x ↦ x'` with `(xy)' = y'x'`, `x'' = x`, `x = xx'x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub map: UnaryMap,
}

/// Which of the three regular-involution identities fails first, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionFailure {
    AntiMultiplicative(ElementId, ElementId),
    NotInvolutive(ElementId),
    NotRegular(ElementId),
}

pub fn check_involution(
    s: &FiniteSemigroup,
    map: &UnaryMap,
) -> std::result::Result<(), InvolutionFailure> {
    let p = |x| map.apply(x);
    if let Some(x) = s.elements().find(|&x| p(p(x)) != x) {
        return Err(InvolutionFailure::NotInvolutive(x));
    }
    if let Some(x) = s.elements().find(|&x| s.product(&[x, p(x), x]) != x) {
        return Err(InvolutionFailure::NotRegular(x));
    }
    for x in s.elements() {
        for y in s.elements() {
            if p(s.mul(x, y)) != s.mul(p(y), p(x)) {
                return Err(InvolutionFailure::AntiMultiplicative(x, y));
            }
        }
    }
    Ok(())
}

/// Every regular involution of `s`, sorted by image array.
pub fn find_involutions(s: &FiniteSemigroup) -> Vec<Involution> {
    fn consistent(s: &FiniteSemigroup, img: &[usize], x: usize) -> bool {
        let y = img[x];
        if s.product(&[x, y, x]) != x || s.product(&[y, x, y]) != y {
            return false;
        }
        // (ab)' = b'a' wherever all of a', b', (ab)' are known and one of a, b is new
        for &a in &[x, y] {
            for b in s.elements().filter(|&b| img[b] != UNSET) {
                for (u, v) in [(a, b), (b, a)] {
                    let uv = s.mul(u, v);
                    if img[uv] != UNSET && img[uv] != s.mul(img[v], img[u]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(s: &FiniteSemigroup, img: &mut Vec<usize>, out: &mut Vec<Involution>) {
        let Some(x) = img.iter().position(|&v| v == UNSET) else {
            out.push(Involution {
                map: UnaryMap::new(img.clone()),
            });
            return;
        };
        let free: Vec<usize> = s.elements().filter(|&y| img[y] == UNSET).collect();
        for y in free {
            img[x] = y;
            img[y] = x;
            if consistent(s, img, x) {
                search(s, img, out);
            }
            img[x] = UNSET;
            img[y] = UNSET;
        }
    }

    let mut out = Vec::new();
    search(s, &mut vec![UNSET; s.order()], &mut out);
    out.sort_by(|a, b| a.map.cmp(&b.map));
    debug_assert!(out.iter().all(|i| check_involution(s, &i.map).is_ok()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn map(v: &[usize]) -> UnaryMap {
        UnaryMap::new(v.to_vec())
    }

    #[test]
    fn b4_swap_is_an_automorphism() {
        // (1 2)(3 4), 1-based
        let b4 = families::band_b4();
        assert!(is_automorphism(&b4, &map(&[1, 0, 3, 2])));
        assert!(is_automorphism(&b4, &UnaryMap::identity(4)));
    }

    #[test]
    fn c3_inversion_is_an_automorphism() {
        let c3 = families::cyclic_group(3);
        assert!(is_automorphism(&c3, &map(&[0, 2, 1])));
        assert!(!is_automorphism(&c3, &map(&[1, 0, 2])));
    }

    #[test]
    fn automorphism_group_sizes() {
        let sizes = |s: &FiniteSemigroup| automorphism_group(s).len();
        assert_eq!(sizes(&families::cyclic_group(3)), 2);
        assert_eq!(sizes(&families::chain_semilattice(2)), 1);
        assert_eq!(sizes(&families::trivial()), 1);
        assert_eq!(sizes(&families::symmetric_group(3)), 6);
        assert_eq!(sizes(&families::dihedral_group(4)), 8);
        assert_eq!(sizes(&families::quaternion_group()), 24);
        assert_eq!(sizes(&families::left_zero_band(3)), 6);
        assert_eq!(sizes(&families::brandt_b2()), 2);
    }

    #[test]
    fn automorphisms_are_sorted_with_identity_first() {
        let auts = automorphism_group(&families::cyclic_group(5));
        assert!(auts[0].perm.is_identity());
        assert_eq!(auts[0].order, 1);
        assert!(auts.windows(2).all(|w| w[0].perm < w[1].perm));
    }

    #[test]
    fn psi_examples() {
        let c3 = families::cyclic_group(3);
        let inv = map(&[0, 2, 1]);
        assert!(psi_map(&c3, &inv).unwrap().map.is_identity());
        assert!(is_psi_injective(&c3, &inv).unwrap());
        let id = UnaryMap::identity(3);
        assert_eq!(psi_map(&c3, &id).unwrap().map.images(), &[0, 0, 0]);
        assert!(!is_psi_injective(&c3, &id).unwrap());

        let b2 = families::brandt_b2();
        let swap = brandt_swap();
        assert!(is_automorphism(&b2, &swap));
        let psi = psi_map(&b2, &swap).unwrap();
        assert_eq!(psi.apply(families::brandt_index(1, 1)), 0);
        assert_eq!(psi.apply(0), 0);
        assert!(!psi.is_injective());
    }

    #[test]
    fn psi_requires_inverses() {
        let nil = families::nilpotent_semigroup_two();
        assert!(psi_map(&nil, &UnaryMap::identity(2)).is_err());
    }

    /// Swaps the coordinates 1 ↔ 2 of the matrix units of B2.
    fn brandt_swap() -> UnaryMap {
        let mut images = vec![0; 5];
        for i in 1..=2 {
            for j in 1..=2 {
                images[families::brandt_index(i, j)] = families::brandt_index(3 - i, 3 - j);
            }
        }
        UnaryMap::new(images)
    }

    #[test]
    fn idempotent_fixing_examples() {
        let c3 = families::cyclic_group(3);
        assert!(is_idempotent_fixing(&c3, &map(&[0, 2, 1])));
        assert!(!is_idempotent_fixing(&c3, &UnaryMap::identity(3)));
        let b4 = families::band_b4();
        assert!(is_idempotent_fixing(&b4, &UnaryMap::identity(4)));
        let b2 = families::brandt_b2();
        assert!(!is_idempotent_fixing(&b2, &brandt_swap()));
        assert_eq!(brandt_swap().fixed_points(), vec![0]);
    }

    #[test]
    fn b4_involution_is_found() {
        let b4 = families::band_b4();
        let found = find_involutions(&b4);
        assert!(found.iter().any(|i| i.map.images() == [1, 0, 2, 3]));
        assert!(found.iter().all(|i| check_involution(&b4, &i.map).is_ok()));
    }

    #[test]
    fn inversion_is_an_involution_on_inverse_semigroups() {
        for s in [
            families::brandt_b2(),
            crate::partialperm::monoid_in(2).unwrap(),
        ] {
            let inv = s.inversion_map().unwrap();
            assert!(find_involutions(&s).iter().any(|i| i.map == inv));
            assert!(is_antiautomorphism(&s, &inv));
        }
    }

    #[test]
    fn left_zero_band_has_no_involution() {
        // x' = x gives x'' = x and x·x'·x = x, but (uv)' = u while v'u' = v
        let l2 = families::left_zero_band(2);
        assert_eq!(
            check_involution(&l2, &UnaryMap::identity(2)),
            Err(InvolutionFailure::AntiMultiplicative(0, 1))
        );
        assert!(find_involutions(&l2).is_empty());
    }

    #[test]
    fn antiautomorphism_examples() {
        assert!(!is_antiautomorphism(
            &families::band_b4(),
            &UnaryMap::identity(4)
        ));
        assert!(is_antiautomorphism(
            &families::cyclic_group(4),
            &UnaryMap::identity(4)
        ));
    }
}
