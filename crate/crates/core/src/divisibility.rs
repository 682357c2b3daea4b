//! The squaring map and unique square roots.

use crate::error::{Error, Result};
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

/// `x ↦ x²` and, when it is a bijection, the root table `x ↦ x^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquaringAnalysis {
    pub squares: UnaryMap,
    pub bijective: bool,
    pub roots: Option<UnaryMap>,
}

impl SquaringAnalysis {
    pub fn sqrt(&self, x: ElementId) -> Result<ElementId> {
        self.roots
            .as_ref()
            .map(|r| r.apply(x))
            .ok_or(Error::NotUniquely2Divisible)
    }
}

pub fn analyze_squaring(s: &FiniteSemigroup) -> SquaringAnalysis {
    let squares = UnaryMap::new(s.elements().map(|x| s.mul(x, x)).collect());
    let roots = squares.inverse();
    SquaringAnalysis {
        bijective: roots.is_some(),
        squares,
        roots,
    }
}

/// The unique `r` with `r² = x`.
pub fn sqrt(s: &FiniteSemigroup, x: ElementId) -> Result<ElementId> {
    analyze_squaring(s).sqrt(x)
}

/// `x^{-1/2}`: computed both as `(x^{1/2})⁻¹` and `(x⁻¹)^{1/2}`, which must agree.
pub fn inv_sqrt(s: &FiniteSemigroup, x: ElementId) -> Result<ElementId> {
    let analysis = analyze_squaring(s);
    let inv = s.inversion_map()?;
    inv_sqrt_with(&analysis, &inv, x)
}

pub fn inv_sqrt_with(
    analysis: &SquaringAnalysis,
    inv: &UnaryMap,
    x: ElementId,
) -> Result<ElementId> {
    let a = inv.apply(analysis.sqrt(x)?);
    let b = analysis.sqrt(inv.apply(x))?;
    if a != b {
        return Err(Error::InverseRootMismatch { x });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn c3_roots() {
        let c3 = families::cyclic_group(3);
        let a = analyze_squaring(&c3);
        assert!(a.bijective);
        assert_eq!(a.sqrt(1).unwrap(), 2);
        assert_eq!(sqrt(&c3, 1).unwrap(), 2);
    }

    #[test]
    fn c2_is_not_uniquely_divisible() {
        let c2 = families::cyclic_group(2);
        assert!(!analyze_squaring(&c2).bijective);
        assert_eq!(sqrt(&c2, 0), Err(Error::NotUniquely2Divisible));
    }

    #[test]
    fn band_roots_are_trivial() {
        let b4 = families::band_b4();
        let a = analyze_squaring(&b4);
        assert!(a.roots.unwrap().is_identity());
        let chain = families::chain_semilattice(3);
        assert_eq!(inv_sqrt(&chain, 1).unwrap(), 1);
    }

    #[test]
    fn c3_with_zero_inverse_root() {
        let c3z = families::adjoin_zero(&families::cyclic_group(3));
        // a = 1, a⁻¹ = 2, (a²)^{1/2} = a
        assert_eq!(inv_sqrt(&c3z, 1).unwrap(), 1);
        assert_eq!(inv_sqrt(&c3z, 3).unwrap(), 3);
    }

    #[test]
    fn roots_invert_squares() {
        let s =
            families::direct_product(&families::cyclic_group(5), &families::chain_semilattice(2));
        let a = analyze_squaring(&s);
        let roots = a.roots.clone().unwrap();
        assert!(a.squares.then(&roots).is_identity());
        assert!(roots.then(&a.squares).is_identity());
    }
}
