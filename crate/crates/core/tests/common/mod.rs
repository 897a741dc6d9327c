//! Brute-force oracles shared by the integration tests. Everything here
//! enumerates subsets or colorings directly and uses none of the library's
//! search code, so agreement is independent evidence.
#![allow(dead_code)]

use upcolor::{Coloring, Graph};

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

pub fn is_proper(g: &Graph, colors: &[u32]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Whether `mask` up-color dominates under `colors`.
pub fn up_dominates(adj: &[u64], colors: &[u32], mask: u64) -> bool {
    (0..adj.len()).all(|v| {
        if mask >> v & 1 == 1 {
            colors[v] > 0
        } else {
            let mut m = adj[v] & mask;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                if colors[u] > colors[v] {
                    return true;
                }
                m &= m - 1;
            }
            false
        }
    })
}

/// `(gamma_uc, omega_uc)` by trying every subset, `None` when no subset works.
pub fn brute_uc(g: &Graph, colors: &[u32]) -> Option<(usize, u64)> {
    let n = g.n();
    assert!(n <= 20, "brute force only for small graphs");
    let adj = adjacency(g);
    let mut best: Option<(usize, u64)> = None;
    for mask in 0u64..1 << n {
        if !up_dominates(&adj, colors, mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        let weight: u64 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| u64::from(colors[v]))
            .sum();
        best = Some(match best {
            None => (size, weight),
            Some((s, w)) => (s.min(size), w.min(weight)),
        });
    }
    best
}

pub fn brute_domination(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0u64..1 << n)
        .filter(|&mask| {
            let covered = (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .fold(mask, |c, v| c | adj[v]);
            covered == full
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Calls `f` on every proper coloring with colors in `0..palette`.
pub fn for_each_proper_coloring(g: &Graph, palette: u32, mut f: impl FnMut(&[u32])) {
    fn go(g: &Graph, palette: u32, colors: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        let v = colors.len();
        if v == g.n() {
            f(colors);
            return;
        }
        for c in 0..palette {
            if g.neighbors(v).iter().all(|&u| u >= v || colors[u] != c) {
                colors.push(c);
                go(g, palette, colors, f);
                colors.pop();
            }
        }
    }
    go(g, palette, &mut Vec::new(), &mut f);
}

pub fn brute_chromatic(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n() as u32)
        .find(|&k| {
            let mut found = false;
            for_each_proper_coloring(g, k, |_| found = true);
            found
        })
        .unwrap() as usize
}

/// Least `k` such that some proper coloring from `0..k` has up-color
/// domination number equal to the domination number.
pub fn brute_chi_uc(g: &Graph) -> usize {
    let gamma = brute_domination(g);
    (1..=g.n() as u32 + 1)
        .find(|&k| {
            let mut hit = false;
            for_each_proper_coloring(g, k, |c| {
                if !hit && brute_uc(g, c).is_some_and(|(s, _)| s == gamma) {
                    hit = true;
                }
            });
            hit
        })
        .unwrap() as usize
}

pub fn coloring(colors: &[u32]) -> Coloring {
    Coloring::new(colors.to_vec())
}
