use std::collections::VecDeque;

/// Bipartite graph given by left-to-right adjacency. `capacity` is only read
/// by [`super::perfect_b_matching`].
#[derive(Clone, Debug, Default)]
pub struct BipartiteInstance {
    pub left: usize,
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
    pub capacity: Option<Vec<usize>>,
}

impl BipartiteInstance {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteInstance { left, right, adj: vec![Vec::new(); left], capacity: None }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right);
        self.adj[l].push(r);
    }
}

/// Maximum matching (Hopcroft-Karp); entry `l` is the partner of left vertex `l`.
pub fn max_matching(inst: &BipartiteInstance) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let mut mate_l: Vec<Option<usize>> = vec![None; inst.left];
    let mut mate_r: Vec<Option<usize>> = vec![None; inst.right];
    let mut dist = vec![INF; inst.left];
    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for l in 0..inst.left {
            if mate_l[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &inst.adj[l] {
                match mate_r[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == INF => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for l in 0..inst.left {
            if mate_l[l].is_none() {
                augment(inst, l, &mut mate_l, &mut mate_r, &mut dist);
            }
        }
    }
    debug_assert!(check(inst, &mate_l));
    mate_l
}

fn augment(
    inst: &BipartiteInstance,
    l: usize,
    mate_l: &mut [Option<usize>],
    mate_r: &mut [Option<usize>],
    dist: &mut [usize],
) -> bool {
    for &r in &inst.adj[l] {
        let ok = match mate_r[r] {
            None => true,
            Some(l2) => dist[l2] == dist[l].wrapping_add(1) && augment(inst, l2, mate_l, mate_r, dist),
        };
        if ok {
            mate_l[l] = Some(r);
            mate_r[r] = Some(l);
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

fn check(inst: &BipartiteInstance, mate: &[Option<usize>]) -> bool {
    let mut used = vec![false; inst.right];
    for (l, m) in mate.iter().enumerate() {
        if let Some(r) = *m {
            if used[r] || !inst.adj[l].contains(&r) {
                return false;
            }
            used[r] = true;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(m: &[Option<usize>]) -> usize {
        m.iter().flatten().count()
    }

    #[test]
    fn complete_and_star() {
        let mut k33 = BipartiteInstance::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                k33.add_edge(l, r);
            }
        }
        assert_eq!(size(&max_matching(&k33)), 3);
        let mut star = BipartiteInstance::new(1, 5);
        for r in 0..5 {
            star.add_edge(0, r);
        }
        assert_eq!(size(&max_matching(&star)), 1);
    }

    #[test]
    fn needs_augmenting_path() {
        let mut g = BipartiteInstance::new(3, 3);
        g.add_edge(0, 0);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        g.add_edge(2, 1);
        g.add_edge(2, 2);
        assert_eq!(size(&max_matching(&g)), 3);
    }
}
