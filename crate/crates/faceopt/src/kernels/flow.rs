use std::collections::VecDeque;

use super::matching::BipartiteInstance;

/// Integer max-flow by blocking flows on BFS level graphs.
#[derive(Clone, Debug)]
pub struct Dinic {
    n: usize,
    // (to, residual capacity); edge i and i^1 are paired
    arcs: Vec<(usize, i64)>,
    out: Vec<Vec<usize>>,
}

impl Dinic {
    pub fn new(n: usize) -> Self {
        Dinic { n, arcs: Vec::new(), out: vec![Vec::new(); n] }
    }

    /// Adds an arc and returns its id for [`Dinic::flow_on`].
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push((to, cap));
        self.arcs.push((from, 0));
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    pub fn flow_on(&self, arc: usize) -> i64 {
        self.arcs[arc ^ 1].1
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; self.n];
            level[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &a in &self.out[v] {
                    let (w, c) = self.arcs[a];
                    if c > 0 && level[w] == usize::MAX {
                        level[w] = level[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.n];
            loop {
                let f = self.push(s, t, i64::MAX, &level, &mut next);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    fn push(&mut self, v: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if v == t {
            return limit;
        }
        while next[v] < self.out[v].len() {
            let a = self.out[v][next[v]];
            let (w, c) = self.arcs[a];
            if c > 0 && level[w] == level[v] + 1 {
                let f = self.push(w, t, limit.min(c), level, next);
                if f > 0 {
                    self.arcs[a].1 -= f;
                    self.arcs[a ^ 1].1 += f;
                    return f;
                }
            }
            next[v] += 1;
        }
        0
    }
}

/// Assigns every left vertex to one neighbour so that right vertex `r`
/// receives exactly `capacity[r]` left vertices.
pub fn perfect_b_matching(inst: &BipartiteInstance) -> Option<Vec<usize>> {
    let cap = inst.capacity.as_ref().expect("capacities required");
    if cap.iter().sum::<usize>() != inst.left {
        return None;
    }
    let s = inst.left + inst.right;
    let t = s + 1;
    let mut net = Dinic::new(t + 1);
    for l in 0..inst.left {
        net.add_arc(s, l, 1);
    }
    let mut arcs = Vec::new();
    for (l, rs) in inst.adj.iter().enumerate() {
        for &r in rs {
            arcs.push((l, r, net.add_arc(l, inst.left + r, 1)));
        }
    }
    for (r, &c) in cap.iter().enumerate() {
        net.add_arc(inst.left + r, t, c as i64);
    }
    if net.max_flow(s, t) != inst.left as i64 {
        return None;
    }
    let mut assign = vec![usize::MAX; inst.left];
    for (l, r, a) in arcs {
        if net.flow_on(a) == 1 {
            assign[l] = r;
        }
    }
    let mut load = vec![0; inst.right];
    for &r in &assign {
        load[r] += 1;
    }
    assert_eq!(&load, cap);
    Some(assign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_into_one_face() {
        let mut inst = BipartiteInstance::new(2, 1);
        inst.add_edge(0, 0);
        inst.add_edge(1, 0);
        inst.capacity = Some(vec![2]);
        assert_eq!(perfect_b_matching(&inst), Some(vec![0, 0]));
        inst.capacity = Some(vec![1]);
        assert_eq!(perfect_b_matching(&inst), None);
    }

    #[test]
    fn flow_basics() {
        let mut d = Dinic::new(4);
        d.add_arc(0, 1, 3);
        d.add_arc(0, 2, 2);
        d.add_arc(1, 2, 1);
        d.add_arc(1, 3, 2);
        d.add_arc(2, 3, 3);
        assert_eq!(d.max_flow(0, 3), 5);
    }
}
