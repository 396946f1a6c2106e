use std::collections::{BTreeMap, HashSet};

use crate::graph::Multigraph;

/// Canonical edge list of a multigraph on `n` vertices: the lexicographically
/// smallest sorted edge list over all relabelings that respect a color
/// refinement of the vertices.
pub fn canonical_form(n: usize, ends: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in ends {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<usize> = adj.iter().map(Vec::len).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = adj[v].iter().map(|&w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        let done = classes(&next) == classes(&color);
        color = next;
        if done {
            break;
        }
    }
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(color[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut label = vec![0; n];
    let mut best: Option<Vec<(usize, usize)>> = None;
    relabel(&cells, 0, 0, &mut label, ends, &mut best);
    best.unwrap_or_default()
}

fn relabel(
    cells: &[Vec<usize>],
    cell: usize,
    offset: usize,
    label: &mut [usize],
    ends: &[(usize, usize)],
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if cell == cells.len() {
        let mut es: Vec<(usize, usize)> = ends
            .iter()
            .map(|&(a, b)| (label[a].min(label[b]), label[a].max(label[b])))
            .collect();
        es.sort_unstable();
        if best.as_ref().is_none_or(|b| es < *b) {
            *best = Some(es);
        }
        return;
    }
    let mut members = cells[cell].clone();
    permute(&mut members, 0, &mut |perm| {
        for (i, &v) in perm.iter().enumerate() {
            label[v] = offset + i;
        }
        relabel(cells, cell + 1, offset + perm.len(), label, ends, best);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Every biconnected multigraph with at most `max_edges` edges (and at least
/// two), up to isomorphism. Grown from the digon by adding an edge between
/// two vertices or subdividing an edge, which reaches every biconnected
/// multigraph through an ear decomposition.
pub fn small_corpus(max_edges: usize) -> Vec<Multigraph> {
    let mut seen: HashSet<(usize, Vec<(usize, usize)>)> = HashSet::new();
    let start = (2, canonical_form(2, &[(0, 1), (0, 1)]));
    seen.insert(start.clone());
    let mut level = vec![start];
    let mut all = level.clone();
    for _ in 2..max_edges {
        let mut next = Vec::new();
        for (n, ends) in &level {
            let mut grown: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
            for a in 0..*n {
                for b in a + 1..*n {
                    let mut es = ends.clone();
                    es.push((a, b));
                    grown.push((*n, es));
                }
            }
            for e in 0..ends.len() {
                let mut es = ends.clone();
                let (a, b) = es[e];
                es[e] = (a, *n);
                es.push((*n, b));
                grown.push((n + 1, es));
            }
            for (gn, es) in grown {
                let key = (gn, canonical_form(gn, &es));
                if seen.insert(key.clone()) {
                    next.push(key);
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|x, y| (x.1.len(), x.0, &x.1).cmp(&(y.1.len(), y.0, &y.1)));
    all.into_iter().map(|(n, es)| Multigraph::from_edges(n, &es)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ignores_labels() {
        let a = canonical_form(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let b = canonical_form(4, &[(1, 3), (3, 0), (0, 2), (2, 1), (1, 0)]);
        assert_eq!(a, b);
        let c = canonical_form(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]);
        assert_ne!(a, c);
    }

    #[test]
    fn corpus_counts() {
        // 2 edges: digon; 3: triangle, triple bond; 4: square, triangle with a
        // doubled edge, quadruple bond
        let c = small_corpus(4);
        let per_m = |m: usize| c.iter().filter(|g| g.m() == m).count();
        assert_eq!((per_m(2), per_m(3)), (1, 2));
        assert_eq!(per_m(4), 3);
        assert!(c.iter().all(|g| g.is_biconnected()));
    }
}
