mod common;

use std::collections::BTreeSet;

use isemlab::enumerate::{canonical_form, enumerate_semigroups, EnumerateOptions, Filter};
use isemlab::io::{emit_corpus, parse_corpus};

fn generated_classes(n: usize, filter: Filter) -> (usize, BTreeSet<Vec<usize>>) {
    let corpus = enumerate_semigroups(n, filter, EnumerateOptions::default()).unwrap();
    let of_order: Vec<_> = corpus.entries.iter().filter(|e| e.order() == n).collect();
    let classes = of_order
        .iter()
        .map(|e| {
            let s = e.to_semigroup();
            common::naive_canonical(n, s.table())
        })
        .collect();
    (of_order.len(), classes)
}

#[test]
fn naive_backtracking_matches_literal_enumeration() {
    for n in 1..=3 {
        let mut literal = common::all_tables_literally(n);
        let mut pruned = common::all_associative_tables(n);
        literal.sort();
        pruned.sort();
        assert_eq!(literal, pruned, "order {n}");
    }
    // labelled associative tables of order 3
    assert_eq!(common::all_associative_tables(3).len(), 113);
}

#[test]
fn generator_matches_naive_oracle_for_every_filter() {
    for filter in Filter::ALL {
        for n in 1..=4 {
            let oracle = common::naive_classes(n, |s| filter.accepts(s));
            let (count, classes) = generated_classes(n, filter);
            assert_eq!(
                count,
                classes.len(),
                "{filter} order {n}: duplicate classes"
            );
            assert_eq!(classes, oracle, "{filter} order {n}");
        }
    }
}

#[test]
fn census_sanity() {
    let all = enumerate_semigroups(5, Filter::All, EnumerateOptions::default()).unwrap();
    assert_eq!(all.counts_by_order(), vec![1, 5, 24, 188, 1915]);
    let bands = enumerate_semigroups(5, Filter::Band, EnumerateOptions::default()).unwrap();
    assert_eq!(bands.counts_by_order(), vec![1, 3, 10, 46, 251]);
    let opts = EnumerateOptions {
        workers: 0,
        force_large: true,
    };
    let groups = enumerate_semigroups(16, Filter::Group, opts).unwrap();
    assert_eq!(
        groups.counts_by_order(),
        vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]
    );
}

#[test]
fn canonical_forms_are_fixed_points() {
    let c = enumerate_semigroups(4, Filter::All, EnumerateOptions::default()).unwrap();
    for e in &c.entries {
        assert_eq!(&canonical_form(&e.to_semigroup()), e);
    }
}

#[test]
fn corpus_files_do_not_depend_on_workers() {
    let files: Vec<String> = [1, 3]
        .into_iter()
        .map(|workers| {
            let opts = EnumerateOptions {
                workers,
                force_large: false,
            };
            emit_corpus(&enumerate_semigroups(5, Filter::Inverse, opts).unwrap())
        })
        .collect();
    assert_eq!(files[0], files[1]);
    assert_eq!(emit_corpus(&parse_corpus(&files[0]).unwrap()), files[0]);
}

#[test]
fn hashes_are_stable_and_distinct() {
    let c = enumerate_semigroups(4, Filter::All, EnumerateOptions::default()).unwrap();
    let hashes: BTreeSet<String> = c.entries.iter().map(|e| e.hash()).collect();
    assert_eq!(hashes.len(), c.len());
    assert!(hashes.iter().all(|h| h.len() == 16));
}
