//! Per-pair checks. Each check looks at one `(S, α)` and reports whether its
//! hypotheses hold and, if they do, which conclusions fail and where.

use serde::{Deserialize, Serialize};

use crate::divisibility::{analyze_squaring, inv_sqrt_with, SquaringAnalysis};
use crate::error::{Error, Result};
use crate::morphisms::{Automorphism, PsiMap};
use crate::nilpotence::{is_group, is_nilpotent_group};
use crate::structure::{clifford_decomposition, is_completely_regular, CliffordDecomposition};
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

/// A failed conclusion with the elements that witness it (0-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub clause: String,
    pub witnesses: Vec<ElementId>,
}

impl Violation {
    fn new(clause: &str, witnesses: Vec<ElementId>) -> Self {
        Violation {
            clause: clause.to_string(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses not met; the statement says nothing about this pair.
    Skipped,
    Passed,
    Failed(Vec<Violation>),
}

impl Outcome {
    fn from_violations(v: Vec<Violation>) -> Self {
        if v.is_empty() {
            Outcome::Passed
        } else {
            Outcome::Failed(v)
        }
    }

    pub fn is_skip(&self) -> bool {
        matches!(self, Outcome::Skipped)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Outcome::Failed(v) => v,
            _ => &[],
        }
    }
}

/// Everything about one semigroup that the checks need, computed once.
#[derive(Clone, Debug)]
pub struct Instance {
    pub semigroup: FiniteSemigroup,
    pub inverse: bool,
    pub completely_regular: bool,
    pub group: bool,
    pub commutative: bool,
    pub cancellative: bool,
    pub idempotent: Vec<bool>,
    /// Unique inverse (inverse semigroups) or group inverse in `H_x` (completely regular).
    pub inversion: Option<UnaryMap>,
    pub squaring: SquaringAnalysis,
    pub clifford: Option<CliffordDecomposition>,
}

impl Instance {
    pub fn new(s: FiniteSemigroup) -> Self {
        let inverse = s.is_inverse_semigroup();
        let completely_regular = is_completely_regular(&s);
        let inversion = s.inversion_map().ok();
        Instance {
            inverse,
            completely_regular,
            group: is_group(&s),
            commutative: s.is_commutative(),
            cancellative: s.is_cancellative(),
            idempotent: s.elements().map(|x| s.is_idempotent(x)).collect(),
            inversion,
            squaring: analyze_squaring(&s),
            clifford: clifford_decomposition(&s).ok(),
            semigroup: s,
        }
    }

    fn inv(&self, x: ElementId) -> ElementId {
        self.inversion
            .as_ref()
            .expect("checked before use")
            .apply(x)
    }

    fn psi(&self, alpha: &UnaryMap) -> PsiMap {
        PsiMap::with_inversion(&self.semigroup, self.inversion.as_ref().unwrap(), alpha)
    }

    /// `Fix(α) = E(S)`.
    fn fixes_exactly_idempotents(&self, alpha: &UnaryMap) -> bool {
        self.first_fix_mismatch(alpha).is_none()
    }

    fn first_fix_mismatch(&self, alpha: &UnaryMap) -> Option<ElementId> {
        self.semigroup
            .elements()
            .find(|&x| (alpha.apply(x) == x) != self.idempotent[x])
    }

    fn fixes_all_idempotents(&self, alpha: &UnaryMap) -> bool {
        self.semigroup
            .elements()
            .all(|x| !self.idempotent[x] || alpha.apply(x) == x)
    }

    fn first_non_commuting(&self) -> Option<(ElementId, ElementId)> {
        let s = &self.semigroup;
        s.elements()
            .flat_map(|x| (x + 1..s.order()).map(move |y| (x, y)))
            .find(|&(x, y)| s.mul(x, y) != s.mul(y, x))
    }

    /// First `x` with `xα ≠ x⁻¹`.
    fn first_not_inverted(&self, alpha: &UnaryMap) -> Option<ElementId> {
        self.semigroup
            .elements()
            .find(|&x| alpha.apply(x) != self.inv(x))
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn first_collision(map: &UnaryMap) -> Option<(ElementId, ElementId)> {
    let mut first = vec![usize::MAX; map.len()];
    for x in 0..map.len() {
        let y = map.apply(x);
        if first[y] != usize::MAX {
            return Some((first[y], x));
        }
        first[y] = x;
    }
    None
}

/// If `Fix(α) = E(S)` then ψ is injective.
pub fn lemma21_forward(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse || !inst.fixes_exactly_idempotents(&alpha.perm) {
        return Outcome::Skipped;
    }
    let psi = inst.psi(&alpha.perm);
    Outcome::from_violations(
        first_collision(&psi.map)
            .map(|(a, b)| Violation::new("psi-injective", vec![a, b]))
            .into_iter()
            .collect(),
    )
}

/// If ψ is injective then `Fix(α) ⊆ E(S)`.
pub fn lemma21_backward(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse || !inst.psi(&alpha.perm).is_injective() {
        return Outcome::Skipped;
    }
    Outcome::from_violations(
        alpha
            .fixed
            .iter()
            .find(|&&x| !inst.idempotent[x])
            .map(|&x| Violation::new("fix-in-idempotents", vec![x]))
            .into_iter()
            .collect(),
    )
}

/// Prime order and `Fix(α) = E(S)` force a nilpotent Clifford semigroup.
pub fn thm_main1(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse || !is_prime(alpha.order) || !inst.fixes_exactly_idempotents(&alpha.perm) {
        return Outcome::Skipped;
    }
    let s = &inst.semigroup;
    let mut v = Vec::new();
    if let Some(x) = s.elements().find(|&x| {
        let xi = inst.inv(x);
        s.mul(xi, x) != s.mul(x, xi)
    }) {
        v.push(Violation::new("waypoint", vec![x]));
    }
    match &inst.clifford {
        None => v.push(Violation::new("clifford", vec![])),
        Some(d) => {
            for g in &d.groups {
                if let Some(&x) = g
                    .elements
                    .iter()
                    .find(|&&x| g.position(alpha.apply(x)).is_none())
                {
                    v.push(Violation::new("alpha-preserves-groups", vec![x]));
                    break;
                }
            }
            if let Some(g) = d
                .groups
                .iter()
                .find(|g| !is_nilpotent_group(&g.group).expect("maximal subgroup"))
            {
                v.push(Violation::new("nilpotent", vec![g.identity]));
            }
        }
    }
    Outcome::from_violations(v)
}

fn involutory_conclusion(inst: &Instance, alpha: &Automorphism, commutative: bool) -> Outcome {
    let mut v = Vec::new();
    if let Some(x) = inst.first_not_inverted(&alpha.perm) {
        v.push(Violation::new("alpha-is-inversion", vec![x]));
    }
    if commutative {
        if let Some((x, y)) = inst.first_non_commuting() {
            v.push(Violation::new("commutative", vec![x, y]));
        }
    }
    Outcome::from_violations(v)
}

/// Uniquely 2-divisible inverse `S`, `α² = 1`, `Fix(α) = E(S)`: `xα = x⁻¹` and `S` commutative.
pub fn thm_main2(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse
        || !inst.squaring.bijective
        || !alpha.is_involutory()
        || !inst.fixes_exactly_idempotents(&alpha.perm)
    {
        return Outcome::Skipped;
    }
    involutory_conclusion(inst, alpha, true)
}

/// The group case: uniquely 2-divisible `G`, `α² = 1`, `Fix(α) = {e}`.
pub fn thm_neumann(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.group
        || !inst.squaring.bijective
        || !alpha.is_involutory()
        || !inst.fixes_exactly_idempotents(&alpha.perm)
    {
        return Outcome::Skipped;
    }
    involutory_conclusion(inst, alpha, true)
}

/// `α² = 1` gives `(xψ)α = (xψ)⁻¹`.
fn psi_alpha_clause(inst: &Instance, alpha: &Automorphism, psi: &PsiMap) -> Option<Violation> {
    inst.semigroup
        .elements()
        .find(|&x| alpha.apply(psi.apply(x)) != inst.inv(psi.apply(x)))
        .map(|x| Violation::new("psi-alpha", vec![x]))
}

/// `(xψ)^{-1/2} = x`.
fn inv_sqrt_clause(inst: &Instance, psi: &PsiMap) -> Option<Violation> {
    let inv = inst.inversion.as_ref().unwrap();
    for x in inst.semigroup.elements() {
        match inv_sqrt_with(&inst.squaring, inv, psi.apply(x)) {
            Ok(r) if r == x => {}
            Ok(_) => return Some(Violation::new("psi-inv-sqrt", vec![x])),
            Err(Error::InverseRootMismatch { x: y }) => {
                return Some(Violation::new("inverse-root-mismatch", vec![y]))
            }
            Err(e) => unreachable!("squaring is bijective here: {e}"),
        }
    }
    None
}

pub fn eq_psialpha(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse || !alpha.is_involutory() {
        return Outcome::Skipped;
    }
    let psi = inst.psi(&alpha.perm);
    Outcome::from_violations(psi_alpha_clause(inst, alpha, &psi).into_iter().collect())
}

pub fn eq_almost(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse
        || !alpha.is_involutory()
        || !inst.squaring.bijective
        || !inst.fixes_exactly_idempotents(&alpha.perm)
    {
        return Outcome::Skipped;
    }
    let psi = inst.psi(&alpha.perm);
    Outcome::from_violations(inv_sqrt_clause(inst, &psi).into_iter().collect())
}

/// The identities used along the way in the two main proofs.
///
/// (a) when α fixes every idempotent: `(yψ)(yψ)⁻¹ = y⁻¹y`, `(yψ)⁻¹(yψ) = (y⁻¹y)α = y⁻¹y`;
/// (b) when `α² = 1`: `(xψ)α = (xψ)⁻¹`;
/// (c) when also uniquely 2-divisible with `Fix(α) = E(S)`: `(xψ)^{-1/2} = x`.
pub fn proof_identities(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse {
        return Outcome::Skipped;
    }
    let s = &inst.semigroup;
    let psi = inst.psi(&alpha.perm);
    let a_holds = inst.fixes_all_idempotents(&alpha.perm);
    let b_holds = alpha.is_involutory();
    let c_holds = b_holds && inst.squaring.bijective && inst.fixes_exactly_idempotents(&alpha.perm);
    if !(a_holds || b_holds) {
        return Outcome::Skipped;
    }
    let mut v = Vec::new();
    if a_holds {
        for y in s.elements() {
            let p = psi.apply(y);
            let pi = inst.inv(p);
            let yiy = s.mul(inst.inv(y), y);
            if s.mul(p, pi) != yiy {
                v.push(Violation::new("psi-r-chain", vec![y]));
                break;
            }
            if s.mul(pi, p) != alpha.apply(yiy) {
                v.push(Violation::new("psi-l-chain-alpha", vec![y]));
                break;
            }
            if s.mul(pi, p) != yiy {
                v.push(Violation::new("psi-l-chain", vec![y]));
                break;
            }
        }
    }
    if b_holds {
        v.extend(psi_alpha_clause(inst, alpha, &psi));
    }
    if c_holds {
        v.extend(inv_sqrt_clause(inst, &psi));
    }
    Outcome::from_violations(v)
}

/// Open: ψ injective (finite order is automatic) forces `Fix(α) = E(S)`.
pub fn conjecture32(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.inverse || !inst.psi(&alpha.perm).is_injective() {
        return Outcome::Skipped;
    }
    Outcome::from_violations(
        inst.first_fix_mismatch(&alpha.perm)
            .map(|x| Violation::new("fix-equals-idempotents", vec![x]))
            .into_iter()
            .collect(),
    )
}

/// Open: completely regular, uniquely 2-divisible, `α² = 1`, `Fix(α) = E(S)`
/// give `xα = x⁻¹`. Commutativity is deliberately not asserted.
pub fn conjecture33(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.completely_regular
        || !inst.squaring.bijective
        || !alpha.is_involutory()
        || !inst.fixes_exactly_idempotents(&alpha.perm)
    {
        return Outcome::Skipped;
    }
    involutory_conclusion(inst, alpha, false)
}

/// Finite cancellative semigroups: confirm each is a group, then apply the group check.
pub fn problem_cancellative(inst: &Instance, alpha: &Automorphism) -> Outcome {
    if !inst.cancellative {
        return Outcome::Skipped;
    }
    if !inst.group {
        return Outcome::Failed(vec![Violation::new("cancellative-not-group", vec![])]);
    }
    thm_neumann(inst, alpha)
}

/// Result of the two directions of the injectivity lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma21Result {
    pub forward: Outcome,
    pub backward: Outcome,
}

fn instance_and_automorphism(
    s: &FiniteSemigroup,
    alpha: &UnaryMap,
) -> Result<(Instance, Automorphism)> {
    if alpha.len() != s.order() {
        return Err(Error::MapLength {
            expected: s.order(),
            found: alpha.len(),
        });
    }
    let a = Automorphism::new(s, alpha.clone()).ok_or(Error::NotAnAutomorphism)?;
    Ok((Instance::new(s.clone()), a))
}

pub fn check_lemma21(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<Lemma21Result> {
    if !s.is_inverse_semigroup() {
        return Err(Error::NotInverse);
    }
    let (inst, a) = instance_and_automorphism(s, alpha)?;
    Ok(Lemma21Result {
        forward: lemma21_forward(&inst, &a),
        backward: lemma21_backward(&inst, &a),
    })
}

pub fn check_thm_main1(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<Outcome> {
    if !s.is_inverse_semigroup() {
        return Err(Error::NotInverse);
    }
    let (inst, a) = instance_and_automorphism(s, alpha)?;
    Ok(thm_main1(&inst, &a))
}

pub fn check_thm_main2(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<Outcome> {
    if !s.is_inverse_semigroup() {
        return Err(Error::NotInverse);
    }
    let (inst, a) = instance_and_automorphism(s, alpha)?;
    Ok(thm_main2(&inst, &a))
}

pub fn check_thm_neumann(g: &FiniteSemigroup, alpha: &UnaryMap) -> Result<Outcome> {
    if !is_group(g) {
        return Err(Error::NotAGroup);
    }
    let (inst, a) = instance_and_automorphism(g, alpha)?;
    Ok(thm_neumann(&inst, &a))
}

pub fn check_proof_identities(s: &FiniteSemigroup, alpha: &UnaryMap) -> Result<Outcome> {
    if !s.is_inverse_semigroup() {
        return Err(Error::NotInverse);
    }
    let (inst, a) = instance_and_automorphism(s, alpha)?;
    Ok(proof_identities(&inst, &a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn map(v: &[usize]) -> UnaryMap {
        UnaryMap::new(v.to_vec())
    }

    fn c3_with_zero() -> (FiniteSemigroup, UnaryMap) {
        // C3 = {0, 1, 2}, zero = 3; inversion fixes 0 and 3
        (
            families::adjoin_zero(&families::cyclic_group(3)),
            map(&[0, 2, 1, 3]),
        )
    }

    #[test]
    fn lemma_examples() {
        let c3 = families::cyclic_group(3);
        let r = check_lemma21(&c3, &map(&[0, 2, 1])).unwrap();
        assert_eq!(r.forward, Outcome::Passed);
        assert_eq!(r.backward, Outcome::Passed);
        let r = check_lemma21(&c3, &UnaryMap::identity(3)).unwrap();
        assert_eq!(r.forward, Outcome::Skipped);
        assert_eq!(r.backward, Outcome::Skipped);

        let b2 = families::brandt_b2();
        let swap = map(&[0, 4, 3, 2, 1]);
        let r = check_lemma21(&b2, &swap).unwrap();
        assert_eq!(
            (r.forward, r.backward),
            (Outcome::Skipped, Outcome::Skipped)
        );
        assert_eq!(
            check_lemma21(&families::band_b4(), &UnaryMap::identity(4)),
            Err(Error::NotInverse)
        );
    }

    #[test]
    fn main1_examples() {
        let (s, alpha) = c3_with_zero();
        assert_eq!(check_thm_main1(&s, &alpha).unwrap(), Outcome::Passed);
        let c3 = families::cyclic_group(3);
        assert_eq!(
            check_thm_main1(&c3, &map(&[0, 2, 1])).unwrap(),
            Outcome::Passed
        );
        assert_eq!(
            check_thm_main1(&s, &UnaryMap::identity(4)).unwrap(),
            Outcome::Skipped
        );
    }

    #[test]
    fn main2_examples() {
        let c3 = families::cyclic_group(3);
        assert_eq!(
            check_thm_main2(&c3, &map(&[0, 2, 1])).unwrap(),
            Outcome::Passed
        );
        let (s, alpha) = c3_with_zero();
        assert_eq!(check_thm_main2(&s, &alpha).unwrap(), Outcome::Passed);
        let c2 = families::cyclic_group(2);
        assert_eq!(
            check_thm_main2(&c2, &UnaryMap::identity(2)).unwrap(),
            Outcome::Skipped
        );
    }

    #[test]
    fn neumann_examples() {
        let c3 = families::cyclic_group(3);
        assert_eq!(
            check_thm_neumann(&c3, &map(&[0, 2, 1])).unwrap(),
            Outcome::Passed
        );
        let c5 = families::cyclic_group(5);
        assert_eq!(
            check_thm_neumann(&c5, &map(&[0, 4, 3, 2, 1])).unwrap(),
            Outcome::Passed
        );
        assert_eq!(
            check_thm_neumann(&c3, &UnaryMap::identity(3)).unwrap(),
            Outcome::Skipped
        );
        assert_eq!(
            check_thm_neumann(&families::chain_semilattice(2), &UnaryMap::identity(2)),
            Err(Error::NotAGroup)
        );
    }

    #[test]
    fn proof_identity_examples() {
        let c3 = families::cyclic_group(3);
        assert_eq!(
            check_proof_identities(&c3, &map(&[0, 2, 1])).unwrap(),
            Outcome::Passed
        );
        let s3 = families::symmetric_group(3);
        assert_eq!(
            check_proof_identities(&s3, &UnaryMap::identity(6)).unwrap(),
            Outcome::Passed
        );
        let (s, alpha) = c3_with_zero();
        assert_eq!(check_proof_identities(&s, &alpha).unwrap(), Outcome::Passed);
    }

    #[test]
    fn chains_fail_without_fixed_idempotents() {
        // the coordinate swap on B2 moves idempotents, so (a) is not asserted,
        // but it is involutory so (b) is
        let b2 = families::brandt_b2();
        let swap = map(&[0, 4, 3, 2, 1]);
        let inst = Instance::new(b2.clone());
        let a = Automorphism::new(&b2, swap).unwrap();
        assert_eq!(proof_identities(&inst, &a), Outcome::Passed);
    }

    #[test]
    fn conjecture33_on_left_zero_band() {
        let l2 = families::left_zero_band(2);
        let inst = Instance::new(l2.clone());
        let id = Automorphism::new(&l2, UnaryMap::identity(2)).unwrap();
        assert_eq!(conjecture33(&inst, &id), Outcome::Passed);
        assert!(!inst.commutative);
        // the strengthened conclusion would fail
        assert_eq!(
            involutory_conclusion(&inst, &id, true),
            Outcome::Failed(vec![Violation::new("commutative", vec![0, 1])])
        );
    }

    #[test]
    fn violations_carry_witnesses() {
        // swap of the two non-zero elements of the 3-element null semigroup is
        // not available, so fabricate an inconsistent pair directly
        let c3 = families::cyclic_group(3);
        let inst = Instance::new(c3.clone());
        let id = Automorphism::new(&c3, UnaryMap::identity(3)).unwrap();
        assert_eq!(
            involutory_conclusion(&inst, &id, false),
            Outcome::Failed(vec![Violation::new("alpha-is-inversion", vec![1])])
        );
    }

    #[test]
    fn primes() {
        let p: Vec<usize> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
