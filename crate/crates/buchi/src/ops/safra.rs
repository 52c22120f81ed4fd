//! Safra–Piterman determinization to a parity automaton.
//!
//! States of the deterministic automaton are history trees: ordered trees
//! of nonempty state sets, children disjoint and strictly inside their
//! parent, each node holding at least one state no child has. Nodes carry
//! an age rank (1 = oldest); births append as youngest, removals compact
//! the ranks preserving relative age. A transition reports the smallest
//! rank that died (odd priority 2e−1) or flashed green (even priority 2f)
//! — green meaning the children briefly covered the parent, witnessing
//! accepting visits. The min-parity condition then captures exactly the
//! words some run of the original automaton accepts infinitely often:
//! ranks below a forever-stable green-flashing node belong to older nodes,
//! of which only finitely many ever exist, so the flashes dominate.

use crate::automaton::{Buchi, State};
use crate::error::{BuchiError, Limits, Result};
use crate::ops::reduce::atomize;
use crate::sym::Label;
use std::collections::HashMap;
use std::collections::VecDeque;

type Bits = Vec<u64>;

fn bit_or_into(dst: &mut Bits, src: &Bits) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn bit_and_into(dst: &mut Bits, src: &Bits) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

fn bit_sub_into(dst: &mut Bits, src: &Bits) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

fn bit_empty(b: &Bits) -> bool {
    b.iter().all(|&w| w == 0)
}

/// Deterministic transition-based min-even parity automaton.
pub(crate) struct Parity {
    pub arity: usize,
    pub state_count: u32,
    /// (src, dst, label, priority); deterministic and complete on atoms
    pub edges: Vec<(State, State, Label, u32)>,
    pub neutral: u32,
}

/// One history tree in canonical form: nodes listed by age rank, each with
/// its parent's index (self-index for the root) and its state set.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Tree {
    parent: Vec<u32>,
    label: Vec<Bits>,
}

struct Stepper {
    /// succ[state][atom] as bitsets
    succ: Vec<Vec<Bits>>,
    f_mask: Bits,
    words: usize,
    atom_count: usize,
}

impl Stepper {
    fn delta(&self, set: &Bits, atom: usize) -> Bits {
        let mut out = vec![0u64; self.words];
        for wi in 0..self.words {
            let mut w = set[wi];
            while w != 0 {
                let s = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                bit_or_into(&mut out, &self.succ[s][atom]);
            }
        }
        out
    }

    /// Returns the successor tree and the transition priority.
    fn step(&self, tree: &Tree, atom: usize) -> (Tree, u32) {
        let old_n = tree.label.len();
        // 1. advance every label; 2. spawn a youngest child per node
        let mut parent: Vec<usize> = tree.parent.iter().map(|&p| p as usize).collect();
        let mut label: Vec<Bits> = (0..old_n).map(|v| self.delta(&tree.label[v], atom)).collect();
        let mut alive = vec![true; old_n];
        for v in 0..old_n {
            let mut acc = label[v].clone();
            bit_and_into(&mut acc, &self.f_mask);
            if !bit_empty(&acc) {
                parent.push(v);
                label.push(acc);
                alive.push(true);
            }
        }
        let n = label.len();
        // children listed oldest first: birth order coincides with index order
        let children = |parent: &[usize], v: usize| -> Vec<usize> {
            (0..n).filter(|&c| c != v && parent[c] == v).collect()
        };
        // 3. horizontal merge: older siblings keep contested states
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let mut taken = vec![0u64; self.words];
            let bound = label[v].clone();
            for c in children(&parent, v) {
                bit_and_into(&mut label[c], &bound);
                bit_sub_into(&mut label[c], &taken);
                bit_or_into(&mut taken, &label[c]);
                stack.push(c);
            }
        }
        // 4. deaths
        let mut e = u32::MAX;
        for v in 0..n {
            if bit_empty(&label[v]) {
                alive[v] = false;
                e = e.min(v as u32 + 1);
            }
        }
        // 5. vertical merge: a covered parent flashes green, drops its subtree
        let mut f = u32::MAX;
        let mut order: VecDeque<usize> = VecDeque::from(vec![0]);
        let mut visit: Vec<usize> = Vec::with_capacity(n);
        while let Some(v) = order.pop_front() {
            visit.push(v);
            for c in children(&parent, v) {
                if alive[c] {
                    order.push_back(c);
                }
            }
        }
        for &v in &visit {
            if !alive[v] {
                continue;
            }
            let mut covered = vec![0u64; self.words];
            let mut has_child = false;
            for c in children(&parent, v) {
                if alive[c] {
                    has_child = true;
                    bit_or_into(&mut covered, &label[c]);
                }
            }
            if has_child && covered == label[v] {
                f = f.min(v as u32 + 1);
                // remove all descendants
                let mut sub = vec![v];
                while let Some(u) = sub.pop() {
                    for c in children(&parent, u) {
                        if alive[c] {
                            alive[c] = false;
                            sub.push(c);
                        }
                    }
                }
            }
        }
        // 6. compact, preserving age order
        let mut new_idx = vec![u32::MAX; n];
        let mut out_parent = Vec::new();
        let mut out_label = Vec::new();
        for v in 0..n {
            if alive[v] {
                new_idx[v] = out_parent.len() as u32;
                let p = if v == 0 { 0 } else { new_idx[parent[v]] };
                debug_assert!(v == 0 || p != u32::MAX, "parent outlives child");
                out_parent.push(p);
                out_label.push(std::mem::take(&mut label[v]));
            }
        }
        let pri = if f == u32::MAX && e == u32::MAX {
            u32::MAX
        } else if f <= e {
            2 * f
        } else {
            2 * e - 1
        };
        (
            Tree {
                parent: out_parent,
                label: out_label,
            },
            pri,
        )
    }
}

/// Determinize a trimmed, complete automaton with at least one initial
/// state into a min-even parity automaton.
pub(crate) fn determinize(a: &Buchi, limits: &Limits) -> Result<Parity> {
    let arity = a.arity();
    let atoms = atomize(a).ok_or(BuchiError::AlphabetTooLarge { arity })?;
    let n = a.state_count() as usize;
    let words = n.div_ceil(64);
    let mut succ = vec![vec![vec![0u64; words]; atoms.atoms.len()]; n];
    for (idx, edge) in a.edges().iter().enumerate() {
        let lid = atoms.edge_label[idx] as usize;
        for (aid, row) in atoms.membership.iter().enumerate() {
            if row[lid] {
                succ[edge.src as usize][aid][edge.dst as usize / 64] |=
                    1 << (edge.dst as usize % 64);
            }
        }
    }
    let mut f_mask = vec![0u64; words];
    for s in 0..n {
        if a.is_accepting(s as State) {
            f_mask[s / 64] |= 1 << (s % 64);
        }
    }
    let stepper = Stepper {
        succ,
        f_mask,
        words,
        atom_count: atoms.atoms.len(),
    };

    let mut init_label = vec![0u64; words];
    for &q in a.initial() {
        init_label[q as usize / 64] |= 1 << (q as usize % 64);
    }
    let init = Tree {
        parent: vec![0],
        label: vec![init_label],
    };

    let mut ids: HashMap<Tree, State> = HashMap::new();
    let mut queue: VecDeque<Tree> = VecDeque::new();
    ids.insert(init.clone(), 0);
    queue.push_back(init);
    let mut edges: Vec<(State, State, Label, u32)> = Vec::new();
    let mut max_pri = 0u32;
    while let Some(tree) = queue.pop_front() {
        let sid = ids[&tree];
        for aid in 0..stepper.atom_count {
            let (next, pri) = stepper.step(&tree, aid);
            let tid = match ids.get(&next) {
                Some(&t) => t,
                None => {
                    if ids.len() >= limits.max_states {
                        return Err(BuchiError::StateCap {
                            cap: limits.max_states,
                        });
                    }
                    let t = ids.len() as State;
                    ids.insert(next.clone(), t);
                    queue.push_back(next);
                    t
                }
            };
            if pri != u32::MAX {
                max_pri = max_pri.max(pri);
            }
            edges.push((sid, tid, atoms.atoms[aid].0.clone(), pri));
        }
    }
    let neutral = (max_pri + 2) | 1; // odd, above every reported priority
    for e in &mut edges {
        if e.3 == u32::MAX {
            e.3 = neutral;
        }
    }
    Ok(Parity {
        arity,
        state_count: ids.len() as u32,
        edges,
        neutral,
    })
}

/// Büchi automaton for the words whose least priority occurring infinitely
/// often along the parity run is odd — the complement of the min-even
/// parity language. Guesses the eventual least priority and a point after
/// which nothing smaller occurs, accepting on each visit of that priority.
pub(crate) fn parity_odd_to_buchi(p: &Parity, limits: &Limits) -> Result<Buchi> {
    let mut targets: Vec<u32> = p
        .edges
        .iter()
        .map(|e| e.3)
        .filter(|pri| pri % 2 == 1)
        .collect();
    targets.sort_unstable();
    targets.dedup();
    let d = p.state_count;
    // state layout: waiting copy [0, d), then two flavors per target
    let copies = targets.len() as u64 * 2;
    let total = d as u64 + d as u64 * copies;
    if total > limits.max_states as u64 {
        return Err(BuchiError::StateCap {
            cap: limits.max_states,
        });
    }
    let plain = |q: State, o: usize| d + q * copies as u32 + 2 * o as u32;
    let hot = |q: State, o: usize| plain(q, o) + 1;
    let mut edges: Vec<(State, State, Label)> = Vec::new();
    for (src, dst, label, pri) in &p.edges {
        edges.push((*src, *dst, label.clone()));
        for (o, &target) in targets.iter().enumerate() {
            if *pri < target {
                continue;
            }
            let t = if *pri == target {
                hot(*dst, o)
            } else {
                plain(*dst, o)
            };
            edges.push((*src, t, label.clone()));
            edges.push((plain(*src, o), t, label.clone()));
            edges.push((hot(*src, o), t, label.clone()));
        }
    }
    let accepting: Vec<State> = (0..d)
        .flat_map(|q| (0..targets.len()).map(move |o| hot(q, o)))
        .collect();
    Ok(Buchi::new(
        p.arity,
        total as u32,
        vec![0],
        accepting,
        edges,
    ))
}
