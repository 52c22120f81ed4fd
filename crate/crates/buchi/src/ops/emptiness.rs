//! Emptiness, lasso witnesses, membership, trimming.

use crate::automaton::{BitSet, Buchi, State};
use crate::error::Result;
use crate::ops::boolean::intersect;
use crate::word::UpWord;
use std::collections::VecDeque;

/// Strongly connected components, iterative Tarjan. Returns the component
/// id of every state; ids are in reverse topological order.
fn scc(a: &Buchi) -> (Vec<u32>, u32) {
    const NONE: u32 = u32::MAX;
    let n = a.state_count() as usize;
    let mut index = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;
    // call stack: (state, edge cursor)
    let mut frames: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != NONE {
            continue;
        }
        frames.push((root, 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        while let Some(&mut (v, ref mut cursor)) = frames.last_mut() {
            let out = a.out(v);
            if *cursor < out.len() {
                let w = out[*cursor].dst;
                *cursor += 1;
                if index[w as usize] == NONE {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(&mut (parent, _)) = frames.last_mut() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    (comp, next_comp)
}

fn reachable(a: &Buchi) -> BitSet {
    let mut seen = BitSet::new(a.state_count() as usize);
    let mut queue: VecDeque<State> = VecDeque::new();
    for &s in a.initial() {
        if !seen.contains(s as usize) {
            seen.insert(s as usize);
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        for e in a.out(s) {
            if !seen.contains(e.dst as usize) {
                seen.insert(e.dst as usize);
                queue.push_back(e.dst);
            }
        }
    }
    seen
}

/// Accepting states that lie on a cycle (their component has an internal
/// edge, possibly a self-loop).
fn good_cores(a: &Buchi) -> BitSet {
    let (comp, _) = scc(a);
    let n = a.state_count() as usize;
    let mut has_internal_edge = vec![false; n]; // indexed by component id (<= n)
    for e in a.edges() {
        if comp[e.src as usize] == comp[e.dst as usize] {
            has_internal_edge[comp[e.src as usize] as usize] = true;
        }
    }
    let mut cores = BitSet::new(n);
    for s in 0..n {
        if a.is_accepting(s as State) && has_internal_edge[comp[s] as usize] {
            cores.insert(s);
        }
    }
    cores
}

pub fn is_empty(a: &Buchi) -> bool {
    let reach = reachable(a);
    let cores = good_cores(a);
    let live = cores.iter().any(|s| reach.contains(s));
    !live
}

/// BFS tree from `sources` restricted to edge order; queue and discovery
/// order make the result fully deterministic (lowest ids win ties).
fn bfs_parents(a: &Buchi, sources: &[State]) -> (Vec<u32>, Vec<State>) {
    const NONE: u32 = u32::MAX;
    let n = a.state_count() as usize;
    let mut dist = vec![NONE; n];
    let mut parent = vec![0 as State; n];
    let mut queue: VecDeque<State> = VecDeque::new();
    let mut sorted = sources.to_vec();
    sorted.sort_unstable();
    for &s in &sorted {
        if dist[s as usize] == NONE {
            dist[s as usize] = 0;
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        for e in a.out(s) {
            if dist[e.dst as usize] == NONE {
                dist[e.dst as usize] = dist[s as usize] + 1;
                parent[e.dst as usize] = s;
                queue.push_back(e.dst);
            }
        }
    }
    (dist, parent)
}

fn path_syms(a: &Buchi, parent: &[State], from: State, to: State) -> Vec<crate::sym::Sym> {
    // walk parents back from `to` until `from`
    let mut states = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur as usize];
        states.push(cur);
    }
    states.reverse();
    let arity = a.arity();
    states
        .windows(2)
        .map(|w| {
            let e = a
                .out(w[0])
                .iter()
                .find(|e| e.dst == w[1])
                .expect("parent edge must exist");
            e.label.min_sym(arity).expect("labels are nonempty")
        })
        .collect()
}

/// An accepting lasso, or None when the language is empty. Deterministic:
/// the accepting anchor minimizes (BFS distance from the initial states,
/// state id), stem and cycle are BFS-shortest with lowest-id tie-breaks,
/// and each edge contributes its least symbol.
pub fn find_witness(a: &Buchi) -> Option<UpWord> {
    if a.initial().is_empty() {
        return None;
    }
    let cores = good_cores(a);
    let (dist, parent) = bfs_parents(a, a.initial());
    let anchor = (0..a.state_count())
        .filter(|&s| cores.contains(s as usize) && dist[s as usize] != u32::MAX)
        .min_by_key(|&s| (dist[s as usize], s))?;
    let stem_from = {
        // walk up to the initial state this tree path started from
        let mut cur = anchor;
        while dist[cur as usize] != 0 {
            cur = parent[cur as usize];
        }
        cur
    };
    let stem = path_syms(a, &parent, stem_from, anchor);
    // shortest cycle anchor -> anchor: BFS from anchor, then the best
    // closing edge back into anchor
    let (cdist, cparent) = bfs_parents(a, &[anchor]);
    let closing = a
        .edges()
        .iter()
        .filter(|e| e.dst == anchor && cdist[e.src as usize] != u32::MAX)
        .min_by_key(|e| (cdist[e.src as usize], e.src))?;
    let mut cycle = path_syms(a, &cparent, anchor, closing.src);
    cycle.push(
        closing
            .label
            .min_sym(a.arity())
            .expect("labels are nonempty"),
    );
    Some(UpWord::new(a.arity(), stem, cycle))
}

/// Does the automaton accept this ultimately periodic word?
pub fn accepts(a: &Buchi, w: &UpWord) -> Result<bool> {
    let wa = w.automaton();
    let prod = intersect(a, &wa)?;
    Ok(!is_empty(&prod))
}

/// Drop states that are unreachable or cannot reach an accepting cycle.
pub fn trim(a: &Buchi) -> Buchi {
    let reach = reachable(a);
    let cores = good_cores(a);
    // backward closure from the cores
    let n = a.state_count() as usize;
    let mut live = BitSet::new(n);
    let mut queue: VecDeque<State> = VecDeque::new();
    for s in cores.iter() {
        if reach.contains(s) {
            live.insert(s);
            queue.push_back(s as State);
        }
    }
    // reverse adjacency
    let mut preds: Vec<Vec<State>> = vec![Vec::new(); n];
    for e in a.edges() {
        preds[e.dst as usize].push(e.src);
    }
    while let Some(s) = queue.pop_front() {
        for &p in &preds[s as usize] {
            if reach.contains(p as usize) && !live.contains(p as usize) {
                live.insert(p as usize);
                queue.push_back(p);
            }
        }
    }
    if live.is_empty() {
        return Buchi::empty_lang(a.arity());
    }
    // renumber, preserving order
    let mut remap = vec![u32::MAX; n];
    let mut next = 0u32;
    for s in 0..n {
        if live.contains(s) {
            remap[s] = next;
            next += 1;
        }
    }
    let initial: Vec<State> = a
        .initial()
        .iter()
        .filter(|&&s| live.contains(s as usize))
        .map(|&s| remap[s as usize])
        .collect();
    let acc: Vec<State> = a
        .accepting_states()
        .filter(|&s| live.contains(s as usize))
        .map(|s| remap[s as usize])
        .collect();
    let edges = a
        .edges()
        .iter()
        .filter(|e| live.contains(e.src as usize) && live.contains(e.dst as usize))
        .map(|e| (remap[e.src as usize], remap[e.dst as usize], e.label.clone()))
        .collect();
    Buchi::new(a.arity(), next, initial, acc, edges)
}

/// Same graph with every state accepting. Combined with `trim` this yields
/// the automaton of all words whose runs stay within the useful part.
pub fn all_states_accepting(a: &Buchi) -> Buchi {
    Buchi::new(
        a.arity(),
        a.state_count(),
        a.initial().to_vec(),
        0..a.state_count(),
        a.edges()
            .iter()
            .map(|e| (e.src, e.dst, e.label.clone()))
            .collect(),
    )
}
