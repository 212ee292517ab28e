//! Digraph helpers shared by the spectral, structural and Boolean layers.

/// Strongly connected components (Tarjan), each sorted ascending and the
/// list ordered by smallest member.
pub fn strongly_connected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    fn visit(st: &mut State<'_>, v: usize) {
        st.index[v] = Some(st.next);
        st.low[v] = st.next;
        st.next += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for &w in &st.adj[v] {
            match st.index[w] {
                None => {
                    visit(st, w);
                    st.low[v] = st.low[v].min(st.low[w]);
                }
                Some(iw) if st.on_stack[w] => st.low[v] = st.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(st.low[v]) == st.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("tarjan stack");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            st.out.push(comp);
        }
    }

    let n = adj.len();
    let mut st = State {
        adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if st.index[v].is_none() {
            visit(&mut st, v);
        }
    }
    let mut out = st.out;
    out.sort_by_key(|c| c[0]);
    out
}

/// A component carries a cycle iff it has two nodes or a self-loop.
pub fn component_has_cycle(adj: &[Vec<usize>], comp: &[usize]) -> bool {
    comp.len() > 1 || adj[comp[0]].contains(&comp[0])
}

/// Components that carry a cycle.
pub fn nontrivial_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    strongly_connected_components(adj)
        .into_iter()
        .filter(|c| component_has_cycle(adj, c))
        .collect()
}

/// Some cycle of the subgraph induced by `allowed`, as the node sequence
/// `v0, v1, ..., vk` with an edge from `vk` back to `v0`. Deterministic:
/// depth-first in increasing node order.
pub fn find_cycle(adj: &[Vec<usize>], allowed: &[bool]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn dfs(
        v: usize,
        adj: &[Vec<usize>],
        allowed: &[bool],
        mark: &mut [Mark],
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        mark[v] = Mark::Active;
        path.push(v);
        let mut succ: Vec<usize> = adj[v].iter().copied().filter(|&w| allowed[w]).collect();
        succ.sort_unstable();
        for w in succ {
            match mark[w] {
                Mark::Active => {
                    let start = path.iter().position(|&x| x == w).expect("on path");
                    return Some(path[start..].to_vec());
                }
                Mark::New => {
                    if let Some(c) = dfs(w, adj, allowed, mark, path) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        path.pop();
        mark[v] = Mark::Done;
        None
    }

    let n = adj.len();
    let mut mark = vec![Mark::New; n];
    for v in 0..n {
        if allowed[v] && mark[v] == Mark::New {
            let mut path = Vec::new();
            if let Some(c) = dfs(v, adj, allowed, &mut mark, &mut path) {
                return Some(c);
            }
        }
    }
    None
}
