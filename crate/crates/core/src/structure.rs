//! Green's relations, maximal subgroups and the Clifford (strong semilattice of
//! groups) decomposition.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

/// An equivalence relation on the elements, as a class index per element.
/// Classes are numbered in order of their smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<ElementId>>,
}

impl Partition {
    /// Groups elements by key; elements with equal keys share a class.
    fn by_key<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Partition {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let mut class_of = Vec::new();
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for (x, key) in keys.into_iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(key).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(x);
            class_of.push(id);
        }
        Partition { class_of, classes }
    }

    pub fn class_of(&self, x: ElementId) -> usize {
        self.class_of[x]
    }

    pub fn class_containing(&self, x: ElementId) -> &[ElementId] {
        &self.classes[self.class_of[x]]
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn related(&self, x: ElementId, y: ElementId) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Green's R, L, H and D relations.
#[derive(Clone, Debug)]
pub struct GreenPartition {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
}

fn ideal_key(n: usize, x: ElementId, products: impl Iterator<Item = ElementId>) -> Vec<u64> {
    let mut bits = vec![0u64; n.div_ceil(64)];
    bits[x / 64] |= 1 << (x % 64);
    for p in products {
        bits[p / 64] |= 1 << (p % 64);
    }
    bits
}

pub fn green_relations(s: &FiniteSemigroup) -> GreenPartition {
    let n = s.order();
    let right: Vec<Vec<u64>> = s
        .elements()
        .map(|x| ideal_key(n, x, s.row(x).iter().copied()))
        .collect();
    let left: Vec<Vec<u64>> = s
        .elements()
        .map(|x| ideal_key(n, x, s.elements().map(|y| s.mul(y, x))))
        .collect();
    let r = Partition::by_key(right.iter().cloned());
    let l = Partition::by_key(left.iter().cloned());
    let h = Partition::by_key(s.elements().map(|x| (r.class_of(x), l.class_of(x))));

    // D = R ∨ L by union-find over both partitions
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in [&r, &l] {
        for class in p.classes() {
            for w in class.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let d = Partition::by_key((0..n).map(|x| find(&mut parent, x)));
    GreenPartition { r, l, h, d }
}

/// Every H-class contains an idempotent.
pub fn is_completely_regular(s: &FiniteSemigroup) -> bool {
    let green = green_relations(s);
    green
        .h
        .classes()
        .iter()
        .all(|class| class.iter().any(|&x| s.is_idempotent(x)))
}

/// Inverse with `x·x⁻¹ = x⁻¹·x` for every `x`.
pub fn is_clifford(s: &FiniteSemigroup) -> bool {
    if !s.is_inverse_semigroup() {
        return false;
    }
    let inv = s.inversion_map().expect("inverse semigroup");
    s.elements()
        .all(|x| s.mul(x, inv.apply(x)) == s.mul(inv.apply(x), x))
}

/// The H-class of an idempotent, with its group table.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub identity: ElementId,
    /// Elements of the parent, increasing.
    pub elements: Vec<ElementId>,
    /// The restricted table; element `i` here is `elements[i]` in the parent.
    pub group: FiniteSemigroup,
}

impl MaximalSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Local index of a parent element.
    pub fn position(&self, x: ElementId) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }
}

pub fn maximal_subgroup(
    s: &FiniteSemigroup,
    green: &GreenPartition,
    e: ElementId,
) -> MaximalSubgroup {
    assert!(s.is_idempotent(e), "maximal subgroups sit at idempotents");
    let elements = green.h.class_containing(e).to_vec();
    let group = s
        .restrict(&elements)
        .expect("H-classes of idempotents are subgroups");
    MaximalSubgroup {
        identity: e,
        elements,
        group,
    }
}

/// `φ_{β,γ}: G_β → G_γ`, `g ↦ e_γ·g`, for `e_γ ≤ e_β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMap {
    pub from: ElementId,
    pub to: ElementId,
    /// Image of `groups[from].elements[i]`, as a parent element.
    pub images: Vec<ElementId>,
}

/// A Clifford semigroup as a strong semilattice of groups. Indices `β` are the
/// idempotents themselves.
#[derive(Clone, Debug)]
pub struct CliffordDecomposition {
    pub idempotents: Vec<ElementId>,
    /// One group per idempotent, in the order of `idempotents`.
    pub groups: Vec<MaximalSubgroup>,
    /// Element → position of its group in `groups`.
    pub group_of: Vec<usize>,
    /// One map per comparable pair `e_γ ≤ e_β`, including `β = γ`.
    pub linking: Vec<LinkingMap>,
}

impl CliffordDecomposition {
    /// `e ≤ f` in the semilattice of idempotents.
    pub fn below(s: &FiniteSemigroup, e: ElementId, f: ElementId) -> bool {
        s.mul(e, f) == e
    }

    pub fn group_containing(&self, x: ElementId) -> &MaximalSubgroup {
        &self.groups[self.group_of[x]]
    }

    pub fn linking_map(&self, from: ElementId, to: ElementId) -> Option<&LinkingMap> {
        self.linking.iter().find(|m| m.from == from && m.to == to)
    }

    fn link(&self, x: ElementId, to: ElementId) -> ElementId {
        let g = self.group_containing(x);
        let map = self
            .linking_map(g.identity, to)
            .expect("target idempotent lies below");
        map.images[g.position(x).unwrap()]
    }

    /// `g·h = (g φ_{β,βγ})·(h φ_{γ,βγ})`, computed inside the group `G_{βγ}`.
    pub fn product_via_links(&self, s: &FiniteSemigroup, g: ElementId, h: ElementId) -> ElementId {
        let beta = self.group_containing(g).identity;
        let gamma = self.group_containing(h).identity;
        let meet = s.mul(beta, gamma);
        let target = self.group_containing(meet);
        let a = target.position(self.link(g, meet)).unwrap();
        let b = target.position(self.link(h, meet)).unwrap();
        target.elements[target.group.mul(a, b)]
    }

    /// Checks every structural invariant against `s`; returns the first failure.
    pub fn check(&self, s: &FiniteSemigroup) -> std::result::Result<(), String> {
        let mut covered = vec![0usize; s.order()];
        for g in &self.groups {
            for &x in &g.elements {
                covered[x] += 1;
            }
        }
        if covered.iter().any(|&c| c != 1) {
            return Err("groups do not partition S".into());
        }
        for m in &self.linking {
            let g = &self.groups[self.group_of[m.from]];
            if m.from == m.to && m.images != g.elements {
                return Err(format!("φ_({0},{0}) is not the identity", m.from + 1));
            }
            for (i, &x) in g.elements.iter().enumerate() {
                for (j, &y) in g.elements.iter().enumerate() {
                    let xy = g.elements[g.group.mul(i, j)];
                    let lhs = m.images[g.position(xy).unwrap()];
                    if lhs != s.mul(m.images[i], m.images[j]) {
                        return Err(format!(
                            "φ_({},{}) is not a homomorphism at ({}, {})",
                            m.from + 1,
                            m.to + 1,
                            x + 1,
                            y + 1
                        ));
                    }
                }
            }
        }
        for a in &self.linking {
            for b in self.linking.iter().filter(|b| b.from == a.to) {
                let c = self
                    .linking_map(a.from, b.to)
                    .ok_or("semilattice order is not transitive")?;
                let gb = self.group_containing(a.to);
                let composed: Vec<_> = a
                    .images
                    .iter()
                    .map(|&x| b.images[gb.position(x).unwrap()])
                    .collect();
                if composed != c.images {
                    return Err(format!(
                        "φ_({},{})∘φ_({},{}) ≠ φ_({},{})",
                        a.from + 1,
                        a.to + 1,
                        b.from + 1,
                        b.to + 1,
                        a.from + 1,
                        b.to + 1
                    ));
                }
            }
        }
        for g in s.elements() {
            for h in s.elements() {
                if self.product_via_links(s, g, h) != s.mul(g, h) {
                    return Err(format!("reconstruction fails at ({}, {})", g + 1, h + 1));
                }
            }
        }
        Ok(())
    }
}

pub fn clifford_decomposition(s: &FiniteSemigroup) -> Result<CliffordDecomposition> {
    if !is_clifford(s) {
        return Err(Error::NotClifford);
    }
    let green = green_relations(s);
    let idempotents = s.idempotents();
    let groups: Vec<MaximalSubgroup> = idempotents
        .iter()
        .map(|&e| maximal_subgroup(s, &green, e))
        .collect();
    let mut group_of = vec![usize::MAX; s.order()];
    for (i, g) in groups.iter().enumerate() {
        for &x in &g.elements {
            group_of[x] = i;
        }
    }
    let mut linking = Vec::new();
    for g in &groups {
        for &f in &idempotents {
            if CliffordDecomposition::below(s, f, g.identity) {
                linking.push(LinkingMap {
                    from: g.identity,
                    to: f,
                    images: g.elements.iter().map(|&x| s.mul(f, x)).collect(),
                });
            }
        }
    }
    Ok(CliffordDecomposition {
        idempotents,
        groups,
        group_of,
        linking,
    })
}

/// Does `map` send every class of `p` onto a class of `p`?
pub fn permutes_classes(p: &Partition, map: &UnaryMap) -> bool {
    p.classes().iter().all(|class| {
        let target = p.class_of(map.apply(class[0]));
        let image_class = &p.classes()[target];
        class.len() == image_class.len()
            && class.iter().all(|&x| p.class_of(map.apply(x)) == target)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn group_is_one_h_class() {
        let g = green_relations(&families::symmetric_group(3));
        assert_eq!(g.h.classes().len(), 1);
        assert_eq!(g.d.classes().len(), 1);
    }

    #[test]
    fn chain_has_singleton_classes() {
        let g = green_relations(&families::chain_semilattice(2));
        assert_eq!(g.h.sizes(), vec![1, 1]);
    }

    #[test]
    fn brandt_green_structure() {
        let b2 = families::brandt_b2();
        let g = green_relations(&b2);
        assert_eq!(g.h.classes().len(), 5);
        assert!(g.h.sizes().iter().all(|&k| k == 1));
        // the four matrix units form one D-class, the zero another
        let mut d = g.d.sizes();
        d.sort();
        assert_eq!(d, vec![1, 4]);
        let (e11, e12) = (families::brandt_index(1, 1), families::brandt_index(1, 2));
        assert!(g.r.related(e11, e12));
        assert!(!g.l.related(e11, e12));
    }

    #[test]
    fn clifford_recognition() {
        let c3z = families::adjoin_zero(&families::cyclic_group(3));
        assert!(is_clifford(&c3z));
        assert!(!is_clifford(&families::brandt_b2()));
        let l2 = families::left_zero_band(2);
        assert!(is_completely_regular(&l2));
        assert!(!is_clifford(&l2));
        assert!(!is_completely_regular(&families::nilpotent_semigroup_two()));
    }

    #[test]
    fn decomposition_of_c3_with_zero() {
        let c3z = families::adjoin_zero(&families::cyclic_group(3));
        let d = clifford_decomposition(&c3z).unwrap();
        assert_eq!(d.idempotents, vec![0, 3]);
        assert_eq!(d.groups[0].elements, vec![0, 1, 2]);
        assert_eq!(d.groups[1].elements, vec![3]);
        assert_eq!(d.linking_map(0, 3).unwrap().images, vec![3, 3, 3]);
        assert!(d.linking_map(3, 0).is_none());
        d.check(&c3z).unwrap();
    }

    #[test]
    fn decomposition_of_group_and_semilattice() {
        let s3 = families::symmetric_group(3);
        let d = clifford_decomposition(&s3).unwrap();
        assert_eq!(d.groups.len(), 1);
        assert_eq!(d.linking.len(), 1);
        d.check(&s3).unwrap();

        let chain = families::chain_semilattice(2);
        let d = clifford_decomposition(&chain).unwrap();
        assert_eq!(
            d.groups.iter().map(|g| g.order()).collect::<Vec<_>>(),
            vec![1, 1]
        );
        d.check(&chain).unwrap();
        assert_eq!(
            clifford_decomposition(&families::brandt_b2()).unwrap_err(),
            Error::NotClifford
        );
    }

    #[test]
    fn subgroup_test_matches_index_one() {
        for s in [
            families::band_b4(),
            families::brandt_b2(),
            families::nilpotent_semigroup_two(),
            families::adjoin_identity(&families::nilpotent_semigroup_two()),
            crate::partialperm::monoid_in(2).unwrap(),
        ] {
            assert_eq!(is_completely_regular(&s), s.all_elements_in_subgroups());
        }
    }
}
