//! Exhaustive generation of small semigroups up to isomorphism.

mod canon;
mod orderly;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::morphisms::{automorphism_group, Automorphism};
use crate::nilpotence::is_group;
use crate::structure::{is_clifford, is_completely_regular};
use crate::table::FiniteSemigroup;

pub use canon::MAX_CANONICAL_ORDER;
use orderly::Constraints;

/// Which semigroups a corpus keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    All,
    Inverse,
    #[serde(rename = "cr")]
    CompletelyRegular,
    Clifford,
    Band,
    Group,
    Cancellative,
}

impl Filter {
    pub const ALL: [Filter; 7] = [
        Filter::All,
        Filter::Inverse,
        Filter::CompletelyRegular,
        Filter::Clifford,
        Filter::Band,
        Filter::Group,
        Filter::Cancellative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Inverse => "inverse",
            Filter::CompletelyRegular => "cr",
            Filter::Clifford => "clifford",
            Filter::Band => "band",
            Filter::Group => "group",
            Filter::Cancellative => "cancellative",
        }
    }

    pub fn accepts(self, s: &FiniteSemigroup) -> bool {
        match self {
            Filter::All => true,
            Filter::Inverse => s.is_inverse_semigroup(),
            Filter::CompletelyRegular => is_completely_regular(s),
            Filter::Clifford => is_clifford(s),
            Filter::Band => s.is_band(),
            Filter::Group => is_group(s),
            Filter::Cancellative => s.is_cancellative(),
        }
    }

    /// Default largest order; larger orders need an explicit override.
    pub fn default_cap(self) -> usize {
        match self {
            Filter::All | Filter::Inverse => 6,
            _ => 5,
        }
    }

    fn constraints(self) -> Constraints {
        match self {
            Filter::Band => Constraints {
                idempotent_diagonal: true,
                ..Default::default()
            },
            Filter::Group => Constraints {
                latin: true,
                identity_first: true,
                ..Default::default()
            },
            Filter::Cancellative => Constraints {
                latin: true,
                ..Default::default()
            },
            _ => Constraints::default(),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFilter(s.to_string()))
    }
}

/// The canonical representative of an isomorphism class: the relabelled table
/// that is lexicographically least in shell order. Stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTable {
    order: usize,
    table: Vec<u8>,
}

impl CanonicalTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Row-major 0-based entries.
    pub fn bytes(&self) -> &[u8] {
        &self.table
    }

    /// First 16 hex digits of the SHA-256 of `order` followed by the table bytes.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order as u32).to_le_bytes());
        h.update(&self.table);
        h.finalize()[..8]
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn to_semigroup(&self) -> FiniteSemigroup {
        FiniteSemigroup::new(self.order, self.table.iter().map(|&v| v as usize).collect())
            .expect("canonical tables are associative")
    }

    fn from_generated(order: usize, table: Vec<u8>) -> Self {
        CanonicalTable { order, table }
    }
}

impl fmt::Debug for CanonicalTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalTable({}, {:?})", self.order, self.table)
    }
}

fn bytes_of(s: &FiniteSemigroup) -> Vec<u8> {
    assert!(
        s.order() <= MAX_CANONICAL_ORDER,
        "canonical forms support order ≤ {MAX_CANONICAL_ORDER}"
    );
    s.table().iter().map(|&v| v as u8).collect()
}

pub fn canonical_form(s: &FiniteSemigroup) -> CanonicalTable {
    let (table, _) = canon::canonize(s.order(), &bytes_of(s));
    CanonicalTable {
        order: s.order(),
        table,
    }
}

/// The canonical form together with the relabelling: `perm[x]` is the
/// canonical label of element `x`, so `s.relabel(&perm)` is the canonical table.
pub fn canonical_labelling(s: &FiniteSemigroup) -> (CanonicalTable, Vec<usize>) {
    let (table, elem) = canon::canonize(s.order(), &bytes_of(s));
    let mut perm = vec![0; s.order()];
    for (label, &x) in elem.iter().enumerate() {
        perm[x as usize] = label;
    }
    (
        CanonicalTable {
            order: s.order(),
            table,
        },
        perm,
    )
}

pub fn is_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    s.order() == t.order() && canonical_form(s) == canonical_form(t)
}

/// Provenance recorded with a corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub generator: String,
    /// Set when any order exceeded the filter's default cap.
    pub overridden_cap: bool,
}

impl Default for Provenance {
    fn default() -> Self {
        Provenance {
            generator: concat!("isemlab ", env!("CARGO_PKG_VERSION")).to_string(),
            overridden_cap: false,
        }
    }
}

/// Duplicate-free semigroups of orders `1..=max_order` satisfying `filter`,
/// sorted by `(order, table)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub filter: Filter,
    pub max_order: usize,
    pub entries: Vec<CanonicalTable>,
    pub provenance: Provenance,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn semigroups(&self) -> impl Iterator<Item = FiniteSemigroup> + '_ {
        self.entries.iter().map(CanonicalTable::to_semigroup)
    }

    /// Number of entries of each order `1..=max_order`.
    pub fn counts_by_order(&self) -> Vec<usize> {
        (1..=self.max_order)
            .map(|n| self.entries.iter().filter(|e| e.order == n).count())
            .collect()
    }

    /// Builds a corpus from arbitrary tables: canonicalises, filters and deduplicates.
    pub fn from_semigroups(
        filter: Filter,
        max_order: usize,
        semigroups: impl IntoIterator<Item = FiniteSemigroup>,
    ) -> Corpus {
        let mut entries: Vec<CanonicalTable> = semigroups
            .into_iter()
            .filter(|s| s.order() <= max_order && filter.accepts(s))
            .map(|s| canonical_form(&s))
            .collect();
        entries.sort();
        entries.dedup();
        Corpus {
            filter,
            max_order,
            entries,
            provenance: Provenance::default(),
        }
    }
}

/// Generation options.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Worker threads; `0` uses the global rayon pool.
    pub workers: usize,
    /// Allow orders above the filter's default cap.
    pub force_large: bool,
}

pub fn check_order_cap(max_order: usize, filter: Filter, force_large: bool) -> Result<()> {
    let cap = filter.default_cap();
    if (max_order > cap && !force_large) || max_order > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            requested: max_order,
            cap: if force_large {
                MAX_CANONICAL_ORDER
            } else {
                cap
            },
            filter: filter.name().to_string(),
        });
    }
    Ok(())
}

/// Runs `f` on a pool with the requested number of workers.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Every semigroup of order `1..=max_order` satisfying `filter`, one per
/// isomorphism class.
pub fn enumerate_semigroups(
    max_order: usize,
    filter: Filter,
    options: EnumerateOptions,
) -> Result<Corpus> {
    check_order_cap(max_order, filter, options.force_large)?;
    let constraints = filter.constraints();
    let entries = with_workers(options.workers, || {
        let mut entries = Vec::new();
        for n in 1..=max_order {
            for table in orderly::generate(n, constraints) {
                let entry = CanonicalTable::from_generated(n, table);
                if filter.accepts(&entry.to_semigroup()) {
                    entries.push(entry);
                }
            }
        }
        entries
    });
    let mut entries = entries;
    entries.sort();
    Ok(Corpus {
        filter,
        max_order,
        entries,
        provenance: Provenance {
            overridden_cap: max_order > filter.default_cap(),
            ..Provenance::default()
        },
    })
}

/// Every `(S, α)` with `S` in the corpus and `α ∈ Aut(S)`, in corpus order and
/// then automorphism order.
pub fn corpus_pairs(corpus: &Corpus) -> impl Iterator<Item = (FiniteSemigroup, Automorphism)> + '_ {
    corpus.semigroups().flat_map(|s| {
        automorphism_group(&s)
            .into_iter()
            .map(move |a| (s.clone(), a))
    })
}
