//! Independent oracles shared by the integration tests and the acceptance run.
//! Nothing here calls the library's canonical form or generator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use isemlab::FiniteSemigroup;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Lexicographically least row-major relabelling over all `n!` permutations.
pub fn naive_canonical(n: usize, table: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for p in permutations(n) {
        // element x becomes p[x]
        let mut t = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                t[p[x] * n + p[y]] = p[table[x * n + y]];
            }
        }
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    }
    best.unwrap()
}

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n)
        .all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

/// Every associative table of order `n`, by row-major backtracking that only
/// rejects a prefix once some triple is fully evaluable and fails.
pub fn all_associative_tables(n: usize) -> Vec<Vec<usize>> {
    const U: usize = usize::MAX;
    fn ok(n: usize, t: &[usize]) -> bool {
        for x in 0..n {
            for y in 0..n {
                let xy = t[x * n + y];
                if xy == U {
                    continue;
                }
                for z in 0..n {
                    let yz = t[y * n + z];
                    if yz == U {
                        continue;
                    }
                    let (l, r) = (t[xy * n + z], t[x * n + yz]);
                    if l != U && r != U && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(n: usize, pos: usize, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == n * n {
            out.push(t.clone());
            return;
        }
        for v in 0..n {
            t[pos] = v;
            if ok(n, t) {
                go(n, pos + 1, t, out);
            }
        }
        t[pos] = U;
    }
    let mut out = Vec::new();
    go(n, 0, &mut vec![U; n * n], &mut out);
    out
}

/// Literal enumeration of all `n^(n²)` tables; only sensible for `n ≤ 3`.
pub fn all_tables_literally(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            (0..cells)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect::<Vec<_>>()
        })
        .filter(|t| associative(n, t))
        .collect()
}

/// Isomorphism classes of associative tables of order `n` accepted by
/// `keep`, as naive canonical forms.
pub fn naive_classes(n: usize, keep: impl Fn(&FiniteSemigroup) -> bool) -> BTreeSet<Vec<usize>> {
    all_associative_tables(n)
        .into_iter()
        .filter(|t| keep(&FiniteSemigroup::new(n, t.clone()).unwrap()))
        .map(|t| naive_canonical(n, &t))
        .collect()
}

/// Element orders in a group given by its table.
fn element_orders(g: &FiniteSemigroup) -> Vec<usize> {
    let e = g.identity().expect("group");
    g.elements()
        .map(|x| {
            let mut k = 1;
            let mut y = x;
            while y != e {
                y = g.mul(y, x);
                k += 1;
            }
            k
        })
        .collect()
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

/// A finite group is nilpotent iff every Sylow subgroup is normal, i.e. for
/// each prime `p` the `p`-elements number exactly the `p`-part of `|G|`.
pub fn sylow_nilpotent(g: &FiniteSemigroup) -> bool {
    let n = g.order();
    let orders = element_orders(g);
    prime_factors(n).into_iter().all(|p| {
        let mut part = 1;
        while n.is_multiple_of(part * p) {
            part *= p;
        }
        orders.iter().filter(|&&k| is_power_of(k, p)).count() == part
    })
}
