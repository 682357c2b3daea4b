mod common;

use isemlab::enumerate::{enumerate_semigroups, EnumerateOptions, Filter};
use isemlab::families;
use isemlab::nilpotence::{is_nilpotent_clifford, is_nilpotent_group};
use isemlab::structure::clifford_decomposition;
use isemlab::FiniteSemigroup;

fn named_groups() -> Vec<(String, FiniteSemigroup)> {
    let mut out = vec![
        ("S3".to_string(), families::symmetric_group(3)),
        ("S4".to_string(), families::symmetric_group(4)),
        ("A4".to_string(), families::alternating_group(4)),
        ("Q8".to_string(), families::quaternion_group()),
    ];
    for n in 2..=12 {
        out.push((format!("D{}", 2 * n), families::dihedral_group(n)));
    }
    for n in 1..=24 {
        out.push((format!("C{n}"), families::cyclic_group(n)));
    }
    out.push((
        "C2xS3".into(),
        families::direct_product(&families::cyclic_group(2), &families::symmetric_group(3)),
    ));
    out.push((
        "C3xQ8".into(),
        families::direct_product(&families::cyclic_group(3), &families::quaternion_group()),
    ));
    out
}

#[test]
fn series_agrees_with_sylow_on_named_groups() {
    for (name, g) in named_groups() {
        assert!(g.order() <= 24);
        assert_eq!(
            is_nilpotent_group(&g).unwrap(),
            common::sylow_nilpotent(&g),
            "{name}"
        );
    }
}

#[test]
fn series_agrees_with_sylow_on_enumerated_groups() {
    let opts = EnumerateOptions {
        workers: 0,
        force_large: true,
    };
    let groups = enumerate_semigroups(16, Filter::Group, opts).unwrap();
    let mut non_nilpotent = Vec::new();
    for g in groups.semigroups() {
        let series = is_nilpotent_group(&g).unwrap();
        assert_eq!(series, common::sylow_nilpotent(&g), "{g:?}");
        if !series {
            non_nilpotent.push(g.order());
        }
    }
    // S3, D10, then A4, D12 and Dic12, then D14
    assert_eq!(non_nilpotent, vec![6, 10, 12, 12, 12, 14]);
}

#[test]
fn named_verdicts() {
    assert!(!is_nilpotent_group(&families::symmetric_group(3)).unwrap());
    assert!(is_nilpotent_group(&families::dihedral_group(4)).unwrap());
    assert!(is_nilpotent_group(&families::quaternion_group()).unwrap());
    assert!(!is_nilpotent_group(&families::alternating_group(4)).unwrap());
}

#[test]
fn clifford_nilpotence_is_groupwise() {
    let c = enumerate_semigroups(5, Filter::Clifford, EnumerateOptions::default()).unwrap();
    for s in c.semigroups() {
        let d = clifford_decomposition(&s).unwrap();
        let expected = d.groups.iter().all(|g| common::sylow_nilpotent(&g.group));
        assert_eq!(is_nilpotent_clifford(&s).unwrap(), expected);
    }
    let s3z = families::adjoin_zero(&families::symmetric_group(3));
    assert!(!is_nilpotent_clifford(&s3z).unwrap());
}
