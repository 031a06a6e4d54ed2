//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::BTreeSet;

use super::Graph;

const MAX_N: usize = 9;

fn bit(n: usize, u: usize, v: usize) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // row-major index of (a, b) in the strict upper triangle
    let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
    1u64 << idx
}

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                code |= bit(n, i, j);
            }
        }
    }
    code
}

fn decode(n: usize, code: u64) -> Graph {
    Graph::from_fn(n, |u, v| code & bit(n, u, v) != 0)
}

/// Colour refinement with isomorphism-invariant colour names.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = vec![0; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

/// Isomorphism-invariant code: the smallest adjacency bitstring over all
/// orderings that list colour classes in colour order.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_N, "canonical forms are limited to {MAX_N} vertices");
    let colors = refined_colors(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for c in 0..=max_color {
        let class: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        if !class.is_empty() {
            classes.push(class);
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    permute_classes(g, &classes, 0, &mut order, &mut best);
    best
}

fn permute_classes(g: &Graph, classes: &[Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == classes.len() {
        *best = (*best).min(encode(g, order));
        return;
    }
    let mut class = classes[ci].clone();
    let k = class.len();
    heap_permutations(&mut class, k, &mut |perm| {
        let mark = order.len();
        order.extend_from_slice(perm);
        permute_classes(g, classes, ci + 1, order, best);
        order.truncate(mark);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        let j = if k % 2 == 0 { i } else { 0 };
        items.swap(j, k - 1);
    }
}

fn all_graphs(n: usize) -> BTreeSet<u64> {
    if n <= 1 {
        return BTreeSet::from([0]);
    }
    let smaller = all_graphs(n - 1);
    let mut out = BTreeSet::new();
    for &code in &smaller {
        let base = decode(n - 1, code);
        for mask in 0u32..(1 << (n - 1)) {
            let g = Graph::from_fn(n, |u, v| {
                if v == n - 1 {
                    mask & (1 << u) != 0
                } else {
                    base.has_edge(u, v)
                }
            });
            out.insert(canonical_form(&g));
        }
    }
    out
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical-code order.
///
/// Counts for `n = 1..=7` are 1, 1, 2, 6, 21, 112, 853.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "exhaustive generation supports 1..=8 vertices");
    all_graphs(n)
        .into_iter()
        .map(|c| decode(n, c))
        .filter(Graph::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let c5 = Graph::from_fn(5, |u, v| v - u == 1 || v - u == 4);
        assert_ne!(canonical_form(&g), canonical_form(&c5));
    }
}
