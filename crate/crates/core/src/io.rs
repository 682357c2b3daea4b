//! Text formats (1-based) and the property and automorphism reports.
//!
//! Table format: the order `n` on the first line, then `n` rows of `n`
//! space-separated entries, row `i` holding `i·1 … i·n`. An optional
//! `labels: a b …` line may follow. Lines starting with `#` are comments.

use std::fmt::Write as _;

use serde::Serialize;

use crate::divisibility::analyze_squaring;
use crate::enumerate::{canonical_form, Corpus, Filter, Provenance};
use crate::error::{Error, Result};
use crate::morphisms::{automorphism_group, is_idempotent_fixing, PsiMap};
use crate::nilpotence::{is_group, is_nilpotent_clifford};
use crate::structure::{
    clifford_decomposition, green_relations, is_clifford, is_completely_regular,
};
use crate::table::{ElementId, FiniteSemigroup, UnaryMap};

const CORPUS_MAGIC: &str = "isemlab-corpus";
const CORPUS_VERSION: &str = "v1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses one table. Line numbers in errors count from 1 and include comments.
pub fn parse_table(text: &str) -> Result<FiniteSemigroup> {
    parse_table_at(text, 0)
}

fn parse_table_at(text: &str, first_line: usize) -> Result<FiniteSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (first_line + i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, head) = lines
        .next()
        .ok_or_else(|| parse_error(first_line + 1, "missing order line"))?;
    let n: usize = head
        .parse()
        .map_err(|_| parse_error(line, format!("expected the order, found `{head}`")))?;
    if n == 0 {
        return Err(parse_error(line, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = line;
    for r in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_error(last + 1, format!("missing row {}", r + 1)))?;
        last = line;
        let row = text
            .split_whitespace()
            .map(|tok| match tok.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(parse_error(
                    line,
                    format!("entry `{tok}` is not an element 1..{n}"),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_error(
                line,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    let mut labels = None;
    if let Some((line, text)) = lines.next() {
        let rest = text
            .strip_prefix("labels:")
            .ok_or_else(|| parse_error(line, format!("unexpected line `{text}`")))?;
        let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if names.len() != n {
            return Err(parse_error(
                line,
                format!("expected {n} labels, found {}", names.len()),
            ));
        }
        labels = Some(names);
        if let Some((line, text)) = lines.next() {
            return Err(parse_error(line, format!("unexpected line `{text}`")));
        }
    }
    let s = FiniteSemigroup::from_rows(&rows)?;
    Ok(match labels {
        Some(l) => s.with_labels(l),
        None => s,
    })
}

pub fn emit_table(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for x in s.elements() {
        out.push_str(&one_based(s.row(x)));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    out
}

fn one_based(xs: &[ElementId]) -> String {
    xs.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// One line of `n` space-separated 1-based images.
pub fn parse_automorphism(line: &str, n: usize) -> Result<UnaryMap> {
    let images = line
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(parse_error(
                1,
                format!("image `{tok}` is not an element 1..{n}"),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    if images.len() != n {
        return Err(Error::MapLength {
            expected: n,
            found: images.len(),
        });
    }
    Ok(UnaryMap::new(images))
}

pub fn emit_automorphism(map: &UnaryMap) -> String {
    one_based(map.images())
}

pub fn emit_corpus(corpus: &Corpus) -> String {
    let mut out = format!(
        "{CORPUS_MAGIC} {CORPUS_VERSION} {} {}\n",
        corpus.filter, corpus.max_order
    );
    let _ = writeln!(out, "# generator {}", corpus.provenance.generator);
    if corpus.provenance.overridden_cap {
        out.push_str("# order cap overridden\n");
    }
    for entry in &corpus.entries {
        out.push('\n');
        out.push_str(&emit_table(&entry.to_semigroup()));
    }
    out
}

/// Reads a corpus file. Entries are re-canonicalised, so hand-edited files
/// with non-canonical tables still load as a valid corpus.
pub fn parse_corpus(text: &str) -> Result<Corpus> {
    let header = text.lines().next().unwrap_or("");
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [magic, version, filter, max_order] = fields[..] else {
        return Err(parse_error(
            1,
            "expected `isemlab-corpus v1 <filter> <max_order>`",
        ));
    };
    if magic != CORPUS_MAGIC || version != CORPUS_VERSION {
        return Err(parse_error(
            1,
            format!("unsupported corpus header `{header}`"),
        ));
    }
    let filter: Filter = filter.parse()?;
    let max_order: usize = max_order
        .parse()
        .map_err(|_| parse_error(1, format!("bad max order `{max_order}`")))?;

    let mut entries = Vec::new();
    let mut block = String::new();
    let mut block_start = 0;
    let body: Vec<&str> = text.lines().skip(1).collect();
    for (i, line) in body.iter().chain(std::iter::once(&"")).enumerate() {
        let line_no = i + 2;
        if line.trim().is_empty() {
            let has_content = block
                .lines()
                .any(|l| !l.trim().is_empty() && !l.trim().starts_with('#'));
            if has_content {
                let s = parse_table_at(&block, block_start - 1)?;
                if s.order() > max_order || !filter.accepts(&s) {
                    return Err(parse_error(
                        block_start,
                        format!(
                            "table does not belong to a `{filter}` corpus of order ≤ {max_order}"
                        ),
                    ));
                }
                entries.push(canonical_form(&s));
            }
            block.clear();
        } else {
            if block.is_empty() {
                block_start = line_no;
            }
            block.push_str(line);
            block.push('\n');
        }
    }
    entries.sort();
    entries.dedup();
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

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenSizes {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquaringReport {
    pub squares: Vec<usize>,
    pub uniquely_2_divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingReport {
    pub from: usize,
    pub to: usize,
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub idempotents: Vec<usize>,
    pub groups: Vec<Vec<usize>>,
    pub linking: Vec<LinkingReport>,
}

/// Structural summary of one table. Element numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: usize,
    pub associative: bool,
    pub commutative: bool,
    pub band: bool,
    pub group: bool,
    pub inverse: bool,
    pub completely_regular: bool,
    pub clifford: bool,
    pub cancellative: bool,
    pub idempotents: Vec<usize>,
    /// Strict pairs `[b, a]` with `b < a`; present for inverse semigroups.
    pub natural_order: Option<Vec<[usize; 2]>>,
    pub green: GreenSizes,
    /// Present for Clifford semigroups.
    pub nilpotent: Option<bool>,
    pub squaring: SquaringReport,
    pub clifford_decomposition: Option<DecompositionReport>,
}

fn plus(xs: &[ElementId]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

impl PropertyReport {
    pub fn of(s: &FiniteSemigroup) -> Self {
        let green = green_relations(s);
        let sizes = |p: &crate::structure::Partition| p.sizes();
        let squaring = analyze_squaring(s);
        let decomposition = clifford_decomposition(s).ok();
        let natural_order = s.natural_partial_order().ok().map(|o| {
            o.pairs()
                .into_iter()
                .filter(|(b, a)| b != a)
                .map(|(b, a)| [b + 1, a + 1])
                .collect()
        });
        PropertyReport {
            order: s.order(),
            associative: true,
            commutative: s.is_commutative(),
            band: s.is_band(),
            group: is_group(s),
            inverse: s.is_inverse_semigroup(),
            completely_regular: is_completely_regular(s),
            clifford: is_clifford(s),
            cancellative: s.is_cancellative(),
            idempotents: plus(&s.idempotents()),
            natural_order,
            green: GreenSizes {
                r: sizes(&green.r),
                l: sizes(&green.l),
                h: sizes(&green.h),
                d: sizes(&green.d),
            },
            nilpotent: decomposition
                .as_ref()
                .map(|_| is_nilpotent_clifford(s).expect("Clifford")),
            squaring: SquaringReport {
                squares: plus(squaring.squares.images()),
                uniquely_2_divisible: squaring.bijective,
            },
            clifford_decomposition: decomposition.map(|d| DecompositionReport {
                idempotents: plus(&d.idempotents),
                groups: d.groups.iter().map(|g| plus(&g.elements)).collect(),
                linking: d
                    .linking
                    .iter()
                    .map(|m| LinkingReport {
                        from: m.from + 1,
                        to: m.to + 1,
                        images: plus(&m.images),
                    })
                    .collect(),
            }),
        }
    }

    /// `key: value` lines for terminal output.
    pub fn to_text(&self) -> String {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", self.order);
        for (k, v) in [
            ("associative", self.associative),
            ("commutative", self.commutative),
            ("band", self.band),
            ("group", self.group),
            ("inverse", self.inverse),
            ("completely-regular", self.completely_regular),
            ("clifford", self.clifford),
            ("cancellative", self.cancellative),
        ] {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "idempotents: {}", list(&self.idempotents));
        if let Some(pairs) = &self.natural_order {
            let shown: Vec<String> = pairs.iter().map(|[b, a]| format!("{b}<{a}")).collect();
            let _ = writeln!(out, "natural-order: {}", shown.join(" "));
        }
        let _ = writeln!(out, "green-r: {}", list(&self.green.r));
        let _ = writeln!(out, "green-l: {}", list(&self.green.l));
        let _ = writeln!(out, "green-h: {}", list(&self.green.h));
        let _ = writeln!(out, "green-d: {}", list(&self.green.d));
        if let Some(n) = self.nilpotent {
            let _ = writeln!(out, "nilpotent: {n}");
        }
        let _ = writeln!(out, "squares: {}", list(&self.squaring.squares));
        let _ = writeln!(
            out,
            "uniquely-2-divisible: {}",
            self.squaring.uniquely_2_divisible
        );
        out
    }
}

/// One automorphism with the flags the statements care about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismRow {
    pub images: Vec<usize>,
    pub order: usize,
    pub fixed: usize,
    pub idempotent_fixing: bool,
    /// Present for inverse and completely regular semigroups.
    pub psi_injective: Option<bool>,
}

pub fn automorphism_rows(s: &FiniteSemigroup) -> Vec<AutomorphismRow> {
    let inversion = s.inversion_map().ok();
    automorphism_group(s)
        .into_iter()
        .map(|a| AutomorphismRow {
            images: plus(a.perm.images()),
            order: a.order,
            fixed: a.fixed.len(),
            idempotent_fixing: is_idempotent_fixing(s, &a.perm),
            psi_injective: inversion
                .as_ref()
                .map(|inv| PsiMap::with_inversion(s, inv, &a.perm).is_injective()),
        })
        .collect()
}

pub fn automorphism_rows_text(rows: &[AutomorphismRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let psi = match r.psi_injective {
            Some(b) => b.to_string(),
            None => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "{}  order={} fixed={} fix=E:{} psi-injective:{}",
            list_line(&r.images),
            r.order,
            r.fixed,
            r.idempotent_fixing,
            psi
        );
    }
    out
}

fn list_line(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
