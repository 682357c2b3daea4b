//! Orderly generation of Cayley tables: cells are filled in shell order, every
//! assignment is propagated through the associativity triples it touches
//! (forcing cells where only one is missing), and a partial table is abandoned
//! as soon as some relabelling beats it on the filled prefix. The complete tables that survive are exactly the canonical
//! representatives.

use rayon::prelude::*;

use super::canon::{has_smaller_relabelling, CellOrder, UNFILLED};

/// Isomorphism-invariant restrictions applied while filling cells.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Constraints {
    /// `x·x = x` (bands).
    pub idempotent_diagonal: bool,
    /// Rows and columns are permutations (cancellative).
    pub latin: bool,
    /// Element 0 is a two-sided identity. Sound for groups: the canonical form
    /// of a group always puts its identity first.
    pub identity_first: bool,
}

struct Generator<'a> {
    n: usize,
    order: &'a CellOrder,
    table: Vec<u8>,
    constraints: Constraints,
    out: Vec<Vec<u8>>,
}

impl Generator<'_> {
    #[inline]
    fn at(&self, x: u8, y: u8) -> u8 {
        self.table[x as usize * self.n + y as usize]
    }

    /// Checks every associativity triple that involves cell `(a, b) = c` and
    /// whose other cells are known. A triple missing only one outer cell forces
    /// that cell; forced assignments are pushed onto `queue`.
    fn propagate(&self, a: u8, b: u8, c: u8, queue: &mut Vec<(u8, u8, u8)>) -> bool {
        let n = self.n as u8;
        const U: u8 = UNFILLED;
        // equal unless one side is unknown, in which case it is forced
        let mut meet = |l: (u8, u8, u8), r: (u8, u8, u8)| -> bool {
            match (l.2 == U, r.2 == U) {
                (false, false) => l.2 == r.2,
                (true, false) => {
                    queue.push((l.0, l.1, r.2));
                    true
                }
                (false, true) => {
                    queue.push((r.0, r.1, l.2));
                    true
                }
                (true, true) => true,
            }
        };
        for z in 0..n {
            // (ab)z = a(bz)
            let bz = self.at(b, z);
            if bz != U && !meet((c, z, self.at(c, z)), (a, bz, self.at(a, bz))) {
                return false;
            }
            // (za)b = z(ab)
            let za = self.at(z, a);
            if za != U && !meet((za, b, self.at(za, b)), (z, c, self.at(z, c))) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.at(x, y);
                // (xy)b = x(yb) with xy = a
                if xy == a {
                    let yb = self.at(y, b);
                    if yb != U && !meet((a, b, c), (x, yb, self.at(x, yb))) {
                        return false;
                    }
                }
                // (ax)y = a(xy) with xy = b
                if xy == b {
                    let ax = self.at(a, x);
                    if ax != U && !meet((ax, y, self.at(ax, y)), (a, b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn latin_ok(&self, a: u8, b: u8, v: u8) -> bool {
        (0..self.n as u8).all(|z| (z == b || self.at(a, z) != v) && (z == a || self.at(z, b) != v))
    }

    /// Sets `(a, b) = v` and everything it forces. Cells written are recorded
    /// in `trail`; returns false on a contradiction.
    fn assign(&mut self, a: u8, b: u8, v: u8, trail: &mut Vec<usize>) -> bool {
        let mut queue = vec![(a, b, v)];
        while let Some((a, b, v)) = queue.pop() {
            let idx = a as usize * self.n + b as usize;
            let cur = self.table[idx];
            if cur != UNFILLED {
                if cur != v {
                    return false;
                }
                continue;
            }
            if self.constraints.latin && !self.latin_ok(a, b, v) {
                return false;
            }
            self.table[idx] = v;
            trail.push(idx);
            if !self.propagate(a, b, v, &mut queue) {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, trail: &mut Vec<usize>) {
        for idx in trail.drain(..) {
            self.table[idx] = UNFILLED;
        }
    }

    /// Largest value allowed at a cell of shell `k`: labels above the current
    /// shell first occur in increasing order.
    fn bound(&self, k: u8, max_seen: u8) -> u8 {
        k.max(max_seen).saturating_add(1).min(self.n as u8 - 1)
    }

    /// Cells fixed by the constraints before the search starts.
    fn prefill(&mut self) -> bool {
        let n = self.n as u8;
        let mut trail = Vec::new();
        if self.constraints.identity_first {
            for x in 0..n {
                if !self.assign(0, x, x, &mut trail) || !self.assign(x, 0, x, &mut trail) {
                    return false;
                }
            }
        }
        if self.constraints.idempotent_diagonal {
            for x in 0..n {
                if !self.assign(x, x, x, &mut trail) {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, pos: usize, stop: usize, max_seen: u8) {
        if pos == stop {
            self.out.push(self.table.clone());
            return;
        }
        let (a, b) = self.order.cells[pos];
        let idx = a as usize * self.n + b as usize;
        let hi = self.bound(a.max(b), max_seen);
        let known = self.table[idx];
        if known != UNFILLED {
            if known <= hi && !has_smaller_relabelling(self.order, &self.table, pos + 1) {
                self.dfs(pos + 1, stop, max_seen.max(known));
            }
            return;
        }
        let mut trail = Vec::new();
        for v in 0..=hi {
            if self.assign(a, b, v, &mut trail)
                && !has_smaller_relabelling(self.order, &self.table, pos + 1)
            {
                self.dfs(pos + 1, stop, max_seen.max(v));
            }
            self.undo(&mut trail);
        }
    }
}

fn prefix_max(order: &CellOrder, table: &[u8], filled: usize) -> u8 {
    order.cells[..filled]
        .iter()
        .map(|&(a, b)| table[a as usize * order.n + b as usize])
        .max()
        .unwrap_or(0)
}

/// All canonical associative tables of order `n` satisfying `constraints`,
/// row-major, in generation order. Subtrees below a fixed split depth run on
/// the current rayon pool; the output order does not depend on the pool size.
pub(crate) fn generate(n: usize, constraints: Constraints) -> Vec<Vec<u8>> {
    assert!(n >= 1);
    let order = CellOrder::get(n);
    let split = (n * n).min(9);
    let mut root = Generator {
        n,
        order,
        table: vec![UNFILLED; n * n],
        constraints,
        out: Vec::new(),
    };
    if !root.prefill() {
        return Vec::new();
    }
    root.dfs(0, split, 0);
    let prefixes = std::mem::take(&mut root.out);
    prefixes
        .into_par_iter()
        .map(|table| {
            let max_seen = prefix_max(order, &table, split);
            let mut g = Generator {
                n,
                order,
                table,
                constraints,
                out: Vec::new(),
            };
            g.dfs(split, n * n, max_seen);
            g.out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
