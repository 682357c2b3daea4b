//! Nilpotence of finite groups (lower central series) and of finite Clifford
//! semigroups (all maximal subgroups nilpotent).

use crate::error::{Error, Result};
use crate::structure::clifford_decomposition;
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

/// A semigroup table known to be a group.
#[derive(Clone, Debug)]
pub struct GroupTable<'a> {
    pub table: &'a FiniteSemigroup,
    pub identity: ElementId,
    pub inverse: UnaryMap,
}

impl<'a> GroupTable<'a> {
    pub fn new(table: &'a FiniteSemigroup) -> Result<Self> {
        let identity = table.identity().ok_or(Error::NotAGroup)?;
        let inverse = table
            .elements()
            .map(|x| {
                table
                    .elements()
                    .find(|&y| table.mul(x, y) == identity && table.mul(y, x) == identity)
                    .ok_or(Error::NotAGroup)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            table,
            identity,
            inverse: UnaryMap::new(inverse),
        })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// `[g, h] = g⁻¹h⁻¹gh`.
    pub fn commutator(&self, g: ElementId, h: ElementId) -> ElementId {
        self.table
            .product(&[self.inverse.apply(g), self.inverse.apply(h), g, h])
    }

    /// The subgroup generated by `gens` (always contains the identity).
    pub fn generated(&self, gens: impl IntoIterator<Item = ElementId>) -> Vec<ElementId> {
        let n = self.order();
        let mut inside = vec![false; n];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        for g in gens {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            for j in 0..=i {
                for p in [
                    self.table.mul(members[i], members[j]),
                    self.table.mul(members[j], members[i]),
                ] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }
}

/// Identity exists and every element is invertible.
pub fn is_group(s: &FiniteSemigroup) -> bool {
    GroupTable::new(s).is_ok()
}

/// `γ_1 = G`, `γ_{i+1} = ⟨[G, γ_i]⟩`, computed until it stabilises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    pub terms: Vec<Vec<ElementId>>,
    /// Reached the trivial subgroup.
    pub terminates: bool,
    /// Nilpotency class: the least `c` with `γ_{c+1} = {e}`.
    pub class: Option<usize>,
}

pub fn lower_central_series(g: &GroupTable<'_>) -> CentralSeries {
    let mut terms = vec![g.table.elements().collect::<Vec<_>>()];
    loop {
        let last = terms.last().unwrap();
        if last.len() == 1 {
            let class = terms.len() - 1;
            return CentralSeries {
                terms,
                terminates: true,
                class: Some(class),
            };
        }
        let commutators: Vec<ElementId> = g
            .table
            .elements()
            .flat_map(|x| last.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.commutator(x, y))
            .collect();
        let next = g.generated(commutators);
        if next == *last {
            return CentralSeries {
                terms,
                terminates: false,
                class: None,
            };
        }
        terms.push(next);
    }
}

pub fn is_nilpotent_group(s: &FiniteSemigroup) -> Result<bool> {
    let g = GroupTable::new(s)?;
    Ok(lower_central_series(&g).terminates)
}

/// A finite Clifford semigroup is nilpotent iff each maximal subgroup is.
pub fn is_nilpotent_clifford(s: &FiniteSemigroup) -> Result<bool> {
    let decomposition = clifford_decomposition(s)?;
    Ok(decomposition
        .groups
        .iter()
        .all(|g| is_nilpotent_group(&g.group).expect("maximal subgroups are groups")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn group_recognition() {
        assert!(is_group(&families::cyclic_group(3)));
        assert!(!is_group(&families::chain_semilattice(2)));
        assert!(!is_group(&families::band_b4()));
        assert!(matches!(
            is_nilpotent_group(&families::band_b4()),
            Err(Error::NotAGroup)
        ));
    }

    #[test]
    fn s3_is_not_nilpotent() {
        let s3 = families::symmetric_group(3);
        let series = lower_central_series(&GroupTable::new(&s3).unwrap());
        assert!(!series.terminates);
        assert_eq!(series.terms.len(), 2);
        assert_eq!(series.terms[1].len(), 3);
        assert_eq!(series.class, None);
    }

    #[test]
    fn abelian_class_is_at_most_one() {
        for n in 1..8 {
            let c = families::cyclic_group(n);
            let series = lower_central_series(&GroupTable::new(&c).unwrap());
            assert_eq!(series.class, Some(usize::from(n > 1)));
        }
    }

    #[test]
    fn dihedral_eight_has_class_two() {
        let d8 = families::dihedral_group(4);
        let series = lower_central_series(&GroupTable::new(&d8).unwrap());
        assert_eq!(series.class, Some(2));
        assert_eq!(
            series.terms.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![8, 2, 1]
        );
    }

    #[test]
    fn clifford_nilpotence() {
        let c3z = families::adjoin_zero(&families::cyclic_group(3));
        assert!(is_nilpotent_clifford(&c3z).unwrap());
        assert!(is_nilpotent_clifford(&families::chain_semilattice(4)).unwrap());
        let s3z = families::adjoin_zero(&families::symmetric_group(3));
        assert!(!is_nilpotent_clifford(&s3z).unwrap());
        assert_eq!(
            is_nilpotent_clifford(&families::brandt_b2()),
            Err(Error::NotClifford)
        );
    }
}
