//! The automaton type: explicit states, cube-labeled edges, Büchi acceptance.

use crate::error::{BuchiError, Result};
use crate::sym::{all_syms, Label, Sym, MAX_ARITY};
use std::collections::HashMap;

pub type State = u32;

/// Plain bit set over state ids.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> BitSet {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64)
                .filter(move |b| w & (1 << b) != 0)
                .map(move |b| wi * 64 + b)
        })
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub src: State,
    pub dst: State,
    pub label: Label,
}

/// A nondeterministic Büchi automaton over k-track {0,1,#} symbols.
/// Immutable once built; every operation returns a fresh automaton.
///
/// Invariants: edges are sorted by (src, dst) with at most one edge per
/// pair, labels are nonempty, and `row` is the CSR index by source state.
#[derive(Clone)]
pub struct Buchi {
    arity: usize,
    n: u32,
    initial: Vec<State>,
    accepting: BitSet,
    edges: Vec<Edge>,
    row: Vec<u32>,
}

impl Buchi {
    pub fn new(
        arity: usize,
        n: u32,
        mut initial: Vec<State>,
        accepting_states: impl IntoIterator<Item = State>,
        raw_edges: Vec<(State, State, Label)>,
    ) -> Buchi {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        initial.sort_unstable();
        initial.dedup();
        assert!(initial.iter().all(|&s| s < n), "initial state out of range");
        let mut accepting = BitSet::new(n as usize);
        for s in accepting_states {
            assert!(s < n, "accepting state out of range");
            accepting.insert(s as usize);
        }
        // merge parallel edges
        let mut merged: HashMap<(State, State), Label> = HashMap::new();
        for (src, dst, label) in raw_edges {
            assert!(src < n && dst < n, "edge endpoint out of range");
            if label.is_empty() {
                continue;
            }
            merged
                .entry((src, dst))
                .and_modify(|l| *l = l.union(&label))
                .or_insert(label);
        }
        let mut edges: Vec<Edge> = merged
            .into_iter()
            .map(|((src, dst), label)| Edge { src, dst, label })
            .collect();
        edges.sort_by_key(|e| (e.src, e.dst));
        let mut row = vec![0u32; n as usize + 1];
        for e in &edges {
            row[e.src as usize + 1] += 1;
        }
        for i in 0..n as usize {
            row[i + 1] += row[i];
        }
        Buchi {
            arity,
            n,
            initial,
            accepting,
            edges,
            row,
        }
    }

    /// The automaton with no states: the empty language.
    pub fn empty_lang(arity: usize) -> Buchi {
        Buchi::new(arity, 0, vec![], [], vec![])
    }

    /// One accepting state looping on every symbol: all of (Σ^k)^ω.
    pub fn universal(arity: usize) -> Buchi {
        Buchi::new(arity, 1, vec![0], [0], vec![(0, 0, Label::full(arity))])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn state_count(&self) -> u32 {
        self.n
    }

    pub fn initial(&self) -> &[State] {
        &self.initial
    }

    pub fn is_accepting(&self, s: State) -> bool {
        self.accepting.contains(s as usize)
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = State> + '_ {
        self.accepting.iter().map(|s| s as State)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out(&self, s: State) -> &[Edge] {
        &self.edges[self.row[s as usize] as usize..self.row[s as usize + 1] as usize]
    }

    pub fn successors(&self, s: State, sym: Sym) -> impl Iterator<Item = State> + '_ {
        let arity = self.arity;
        self.out(s)
            .iter()
            .filter(move |e| e.label.contains(sym, arity))
            .map(|e| e.dst)
    }

    /// At most one initial state and pairwise disjoint outgoing labels
    /// (distinct targets) at every state.
    pub fn is_deterministic(&self) -> bool {
        if self.initial.len() > 1 {
            return false;
        }
        for s in 0..self.n {
            let out = self.out(s);
            for i in 0..out.len() {
                for j in (i + 1)..out.len() {
                    if !out[i]
                        .label
                        .intersect(&out[j].label, self.arity)
                        .is_empty()
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn check_same_arity(&self, other: &Buchi) -> Result<()> {
        if self.arity != other.arity {
            return Err(BuchiError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub(crate) fn check_track(&self, track: usize) -> Result<()> {
        if track >= self.arity {
            return Err(BuchiError::TrackOutOfRange {
                track,
                arity: self.arity,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Buchi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Buchi(arity {}, {} states, {} edges, {} accepting)",
            self.arity,
            self.n,
            self.edges.len(),
            self.accepting.count()
        )
    }
}

/// Breadth-first construction of an automaton from a state machine given as
/// code: `step` returns every successor of a state on a symbol (empty = the
/// run dies). States are numbered in discovery order, so the result is
/// deterministic. Only usable for enumerable alphabets (arity <= 8).
pub fn build_machine<S, FS, FA>(
    arity: usize,
    initials: Vec<S>,
    mut step: FS,
    mut accepting: FA,
) -> Buchi
where
    S: Clone + Eq + std::hash::Hash,
    FS: FnMut(&S, Sym) -> Vec<S>,
    FA: FnMut(&S) -> bool,
{
    let syms = all_syms(arity);
    let mut ids: HashMap<S, State> = HashMap::new();
    let mut order: Vec<S> = Vec::new();
    let mut queue: std::collections::VecDeque<S> = Default::default();
    let mut initial_ids = Vec::new();
    for s in initials {
        let next = ids.len() as State;
        let id = *ids.entry(s.clone()).or_insert_with(|| {
            order.push(s.clone());
            queue.push_back(s.clone());
            next
        });
        initial_ids.push(id);
    }
    let mut edges: Vec<(State, State, Vec<Sym>)> = Vec::new();
    while let Some(s) = queue.pop_front() {
        let sid = ids[&s];
        let mut per_target: HashMap<State, Vec<Sym>> = HashMap::new();
        for &sym in &syms {
            for t in step(&s, sym) {
                let next = ids.len() as State;
                let tid = *ids.entry(t.clone()).or_insert_with(|| {
                    order.push(t.clone());
                    queue.push_back(t);
                    next
                });
                let v = per_target.entry(tid).or_default();
                if v.last() != Some(&sym) {
                    v.push(sym);
                }
            }
        }
        let mut targets: Vec<_> = per_target.into_iter().collect();
        targets.sort_by_key(|&(t, _)| t);
        for (tid, syms) in targets {
            edges.push((sid, tid, syms));
        }
    }
    let n = ids.len() as u32;
    let acc: Vec<State> = order
        .iter()
        .enumerate()
        .filter(|(_, s)| accepting(s))
        .map(|(i, _)| i as State)
        .collect();
    let labeled = edges
        .into_iter()
        .map(|(s, t, syms)| (s, t, Label::cover(&syms, arity)))
        .collect();
    Buchi::new(arity, n, initial_ids, acc, labeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::Letter;

    #[test]
    fn bitset_basics() {
        let mut b = BitSet::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert!(b.contains(129) && b.contains(64) && !b.contains(1));
        assert_eq!(b.count(), 3);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        b.remove(64);
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn constructor_merges_parallel_edges() {
        let a = Buchi::new(
            1,
            2,
            vec![0],
            [1],
            vec![
                (0, 1, Label::point(Sym::from_letters(&[Letter::Zero]), 1)),
                (0, 1, Label::point(Sym::from_letters(&[Letter::One]), 1)),
            ],
        );
        assert_eq!(a.edge_count(), 1);
        assert_eq!(a.out(0)[0].label.count(1), 2);
    }

    #[test]
    fn build_machine_mod3_counter() {
        // number of 1s mod 3, on a single track
        let a = build_machine(
            1,
            vec![0u8],
            |&s, sym| {
                let next = if sym.letter(0) == Letter::One {
                    (s + 1) % 3
                } else {
                    s
                };
                vec![next]
            },
            |&s| s == 0,
        );
        assert_eq!(a.state_count(), 3);
        assert!(a.is_deterministic());
    }
}
