//! Canonical labelling of Cayley tables.
//!
//! Tables are compared lexicographically in *shell order*: cells sorted by
//! `(max(i, j), i, j)`, so shell `k` (the cells with `max(i, j) = k`) occupies
//! positions `k²..(k+1)²`. A relabelled table is built one label at a time and
//! every cell of shell `k` only mentions labels `≤ k`, which lets the search
//! compare and prune before the whole relabelling is fixed. Whenever a cell
//! evaluates to an element that has no label yet, the smallest free label is
//! the only choice that can be minimal, so only the first label of each shell
//! is ever branched on.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub(crate) const UNFILLED: u8 = u8::MAX;
const NONE: u8 = u8::MAX;

/// Largest order the byte-table machinery supports.
pub const MAX_CANONICAL_ORDER: usize = 254;

/// Cell coordinates of each shell-order position, and the inverse map.
pub(crate) struct CellOrder {
    pub n: usize,
    pub cells: Vec<(u8, u8)>,
    /// `pos_of[a * n + b]` is the position of cell `(a, b)`.
    pub pos_of: Vec<u16>,
}

impl CellOrder {
    pub fn new(n: usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for k in 0..n {
            for i in 0..k {
                cells.push((i as u8, k as u8));
            }
            for j in 0..=k {
                cells.push((k as u8, j as u8));
            }
        }
        let mut pos_of = vec![0u16; n * n];
        for (p, &(a, b)) in cells.iter().enumerate() {
            pos_of[a as usize * n + b as usize] = p as u16;
        }
        CellOrder { n, cells, pos_of }
    }

    /// Shared instance per order.
    pub fn get(n: usize) -> &'static CellOrder {
        static ORDERS: OnceLock<Mutex<HashMap<usize, &'static CellOrder>>> = OnceLock::new();
        let mut orders = ORDERS
            .get_or_init(Default::default)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        orders
            .entry(n)
            .or_insert_with(|| Box::leak(Box::new(CellOrder::new(n))))
    }
}

/// Labelling state shared by the two searches.
struct Labelling {
    /// label → element
    elem: Vec<u8>,
    /// element → label
    label: Vec<u8>,
    assigned: usize,
}

impl Labelling {
    fn new(n: usize) -> Self {
        Labelling {
            elem: vec![NONE; n],
            label: vec![NONE; n],
            assigned: 0,
        }
    }

    #[inline]
    fn push(&mut self, x: u8) {
        self.elem[self.assigned] = x;
        self.label[x as usize] = self.assigned as u8;
        self.assigned += 1;
    }

    #[inline]
    fn pop(&mut self) {
        self.assigned -= 1;
        let x = self.elem[self.assigned];
        self.label[x as usize] = NONE;
        self.elem[self.assigned] = NONE;
    }
}

struct MinSearch<'a> {
    order: &'a CellOrder,
    table: &'a [u8],
    candidates: Vec<u8>,
    lab: Labelling,
    cur: Vec<u8>,
    best: Vec<u8>,
    best_elem: Vec<u8>,
    have_best: bool,
}

impl MinSearch<'_> {
    /// Returns true when `best` was replaced somewhere below this node.
    fn dfs(&mut self, pos: usize, mut less: bool) -> bool {
        let n = self.order.n;
        if pos == n * n {
            if less || !self.have_best {
                self.best.copy_from_slice(&self.cur);
                self.best_elem.copy_from_slice(&self.lab.elem);
                self.have_best = true;
                return true;
            }
            return false;
        }
        let (i, j) = self.order.cells[pos];
        let k = i.max(j) as usize;
        if pos == k * k && self.lab.assigned == k {
            let mut updated = false;
            for c in 0..self.candidates.len() {
                let x = self.candidates[c];
                if self.lab.label[x as usize] != NONE {
                    continue;
                }
                self.lab.push(x);
                if self.dfs(pos, less) {
                    // the new best shares our prefix
                    less = false;
                    updated = true;
                }
                self.lab.pop();
            }
            return updated;
        }
        let a = self.lab.elem[i as usize] as usize;
        let b = self.lab.elem[j as usize] as usize;
        let x = self.table[a * n + b];
        let known = self.lab.label[x as usize];
        let v = if known == NONE {
            self.lab.assigned as u8
        } else {
            known
        };
        if !less && self.have_best {
            let target = self.best[pos];
            if v > target {
                return false;
            }
            if v < target {
                less = true;
            }
        }
        self.cur[pos] = v;
        if known == NONE {
            self.lab.push(x);
        }
        let updated = self.dfs(pos + 1, less || !self.have_best);
        if known == NONE {
            self.lab.pop();
        }
        updated
    }
}

/// Candidate order for the first label of a shell: idempotents first, then by
/// index and period. Only affects speed.
fn candidate_order(n: usize, table: &[u8]) -> Vec<u8> {
    let key = |x: usize| {
        let mut seen = vec![0usize; n];
        let mut cur = x;
        let mut k = 1;
        let (index, period) = loop {
            if seen[cur] != 0 {
                break (seen[cur], k - seen[cur]);
            }
            seen[cur] = k;
            cur = table[cur * n + x] as usize;
            k += 1;
        };
        (table[x * n + x] as usize != x, index, period, x)
    };
    let mut xs: Vec<usize> = (0..n).collect();
    xs.sort_by_key(|&x| key(x));
    xs.into_iter().map(|x| x as u8).collect()
}

/// Minimal relabelling of a complete row-major table. Returns the canonical
/// table (row-major) and `elem`, where canonical label `l` is original element `elem[l]`.
pub(crate) fn canonize(n: usize, table: &[u8]) -> (Vec<u8>, Vec<u8>) {
    assert!((1..=MAX_CANONICAL_ORDER).contains(&n));
    let order = CellOrder::get(n);
    let mut search = MinSearch {
        order,
        table,
        candidates: candidate_order(n, table),
        lab: Labelling::new(n),
        cur: vec![0; n * n],
        best: vec![0; n * n],
        best_elem: vec![0; n],
        have_best: false,
    };
    search.dfs(0, true);
    let mut canonical = vec![0u8; n * n];
    for (p, &(a, b)) in order.cells.iter().enumerate() {
        canonical[a as usize * n + b as usize] = search.best[p];
    }
    (canonical, search.best_elem)
}

struct SmallerSearch<'a> {
    order: &'a CellOrder,
    table: &'a [u8],
    filled: usize,
    lab: Labelling,
}

impl SmallerSearch<'_> {
    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.filled {
            return false;
        }
        let n = self.order.n;
        let (i, j) = self.order.cells[pos];
        let k = i.max(j) as usize;
        if pos == k * k && self.lab.assigned == k {
            for x in 0..n as u8 {
                if self.lab.label[x as usize] != NONE {
                    continue;
                }
                self.lab.push(x);
                let found = self.dfs(pos);
                self.lab.pop();
                if found {
                    return true;
                }
            }
            return false;
        }
        let a = self.lab.elem[i as usize] as usize;
        let b = self.lab.elem[j as usize] as usize;
        if self.order.pos_of[a * n + b] as usize >= self.filled {
            return false;
        }
        let x = self.table[a * n + b];
        let known = self.lab.label[x as usize];
        let v = if known == NONE {
            self.lab.assigned as u8
        } else {
            known
        };
        let target = self.table[i as usize * n + j as usize];
        if v != target {
            return v < target;
        }
        if known == NONE {
            self.lab.push(x);
        }
        let found = self.dfs(pos + 1);
        if known == NONE {
            self.lab.pop();
        }
        found
    }
}

/// Whether some relabelling of the partial table (the first `filled` cells in
/// shell order are set) is strictly smaller on the filled prefix. If so no
/// completion of the table can be canonical.
pub(crate) fn has_smaller_relabelling(order: &CellOrder, table: &[u8], filled: usize) -> bool {
    let n = order.n;
    let mut search = SmallerSearch {
        order,
        table,
        filled,
        lab: Labelling::new(n),
    };
    search.dfs(0)
}
