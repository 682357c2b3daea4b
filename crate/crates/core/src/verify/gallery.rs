//! The fixed examples: the four-element band with an involution that is not
//! the identity automorphism, and left-zero bands.

use super::checks::{conjecture33, Instance, Outcome, Violation};
use super::{CounterexampleRecord, TheoremReport};
use crate::families;
use crate::morphisms::{
    check_involution, is_automorphism, Automorphism, Involution, InvolutionFailure,
};
use crate::table::{FiniteSemigroup, UnaryMap};

pub const GALLERY_STATEMENT: &str = "gallery";

/// `B4` with `1' = 2, 2' = 1, 3' = 3, 4' = 4`.
pub fn gallery_band_b4() -> (FiniteSemigroup, Involution) {
    let s = families::band_b4();
    let map = UnaryMap::new(vec![1, 0, 2, 3]);
    debug_assert!(check_involution(&s, &map).is_ok());
    (s, Involution { map })
}

fn involution_witnesses(f: InvolutionFailure) -> Vec<usize> {
    match f {
        InvolutionFailure::AntiMultiplicative(x, y) => vec![x, y],
        InvolutionFailure::NotInvolutive(x) | InvolutionFailure::NotRegular(x) => vec![x],
    }
}

fn first_non_commuting(s: &FiniteSemigroup) -> Option<(usize, usize)> {
    s.elements()
        .flat_map(|x| s.elements().map(move |y| (x, y)))
        .find(|&(x, y)| s.mul(x, y) != s.mul(y, x))
}

struct Tally {
    report: TheoremReport,
}

impl Tally {
    fn assert(
        &mut self,
        s: &FiniteSemigroup,
        alpha: &UnaryMap,
        clause: &str,
        failure: Option<Vec<usize>>,
    ) {
        self.report.checked += 1;
        self.report.satisfied_hypotheses += 1;
        if let Some(witnesses) = failure {
            self.report.violations.push(CounterexampleRecord::new(
                s,
                alpha,
                &Violation {
                    clause: clause.to_string(),
                    witnesses,
                },
            ));
        }
    }
}

/// Every assertion about the gallery examples, one count per assertion.
pub fn gallery_checks() -> TheoremReport {
    let mut t = Tally {
        report: TheoremReport::empty(GALLERY_STATEMENT),
    };
    let (b4, inv) = gallery_band_b4();
    let id = UnaryMap::identity(4);

    t.assert(
        &b4,
        &inv.map,
        "involution-axioms",
        check_involution(&b4, &inv.map)
            .err()
            .map(involution_witnesses),
    );
    t.assert(&b4, &id, "band", (!b4.is_band()).then(Vec::new));
    t.assert(
        &b4,
        &id,
        "identity-is-automorphism",
        (!is_automorphism(&b4, &id)).then(Vec::new),
    );
    // α = id differs from the involution, first at element 1
    let differs = b4.elements().find(|&x| id.apply(x) != inv.map.apply(x));
    t.assert(
        &b4,
        &id,
        "alpha-differs-from-involution",
        (differs != Some(0)).then(|| differs.into_iter().collect()),
    );
    // 1·2 = 3 ≠ 4 = 2·1
    let ok = b4.mul(0, 1) == 2 && b4.mul(1, 0) == 3 && first_non_commuting(&b4) == Some((0, 1));
    t.assert(&b4, &id, "non-commutative", (!ok).then(|| vec![0, 1]));

    for n in 2..=4 {
        let l = families::left_zero_band(n);
        let id = UnaryMap::identity(n);
        let inst = Instance::new(l.clone());
        let alpha = Automorphism::new(&l, id.clone()).expect("identity");
        let outcome = conjecture33(&inst, &alpha);
        t.assert(
            &l,
            &id,
            "left-zero-hypotheses",
            outcome.is_skip().then(Vec::new),
        );
        t.assert(
            &l,
            &id,
            "left-zero-conclusion",
            match outcome {
                Outcome::Failed(v) => Some(v.into_iter().flat_map(|v| v.witnesses).collect()),
                _ => None,
            },
        );
        t.assert(
            &l,
            &id,
            "left-zero-non-commutative",
            first_non_commuting(&l).is_none().then(Vec::new),
        );
    }
    t.report.finish()
}
