//! Intersection and union.

use crate::automaton::{Buchi, State};
use crate::error::Result;
use std::collections::{HashMap, VecDeque};

fn all_accepting(a: &Buchi) -> bool {
    (0..a.state_count()).all(|s| a.is_accepting(s))
}

/// Product construction. When one side accepts everywhere the plain product
/// suffices; otherwise a two-phase flag alternates between waiting for an
/// accepting state of the left and of the right factor.
pub fn intersect(a: &Buchi, b: &Buchi) -> Result<Buchi> {
    a.check_same_arity(b)?;
    let arity = a.arity();
    let (skip_a, skip_b) = (all_accepting(a), all_accepting(b));
    // phase is always 0 when either side is trivially fair
    let phased = !(skip_a || skip_b);

    let mut ids: HashMap<(State, State, u8), State> = HashMap::new();
    let mut order: Vec<(State, State, u8)> = Vec::new();
    let mut queue: VecDeque<(State, State, u8)> = VecDeque::new();
    let mut initial = Vec::new();
    for &p in a.initial() {
        for &q in b.initial() {
            let key = (p, q, 0);
            let next = ids.len() as State;
            let id = *ids.entry(key).or_insert_with(|| {
                order.push(key);
                queue.push_back(key);
                next
            });
            initial.push(id);
        }
    }
    let mut edges = Vec::new();
    while let Some(key) = queue.pop_front() {
        let (p, q, phase) = key;
        let sid = ids[&key];
        let phase_next = if !phased {
            0
        } else if phase == 0 {
            u8::from(a.is_accepting(p))
        } else {
            u8::from(!b.is_accepting(q))
        };
        for ea in a.out(p) {
            for eb in b.out(q) {
                let label = ea.label.intersect(&eb.label, arity);
                if label.is_empty() {
                    continue;
                }
                let tkey = (ea.dst, eb.dst, phase_next);
                let next = ids.len() as State;
                let tid = *ids.entry(tkey).or_insert_with(|| {
                    order.push(tkey);
                    queue.push_back(tkey);
                    next
                });
                edges.push((sid, tid, label));
            }
        }
    }
    let n = ids.len() as u32;
    let acc: Vec<State> = order
        .iter()
        .enumerate()
        .filter(|(_, &(p, q, phase))| {
            if skip_a && skip_b {
                true
            } else if skip_a {
                b.is_accepting(q)
            } else if skip_b {
                a.is_accepting(p)
            } else {
                phase == 0 && a.is_accepting(p)
            }
        })
        .map(|(i, _)| i as State)
        .collect();
    Ok(Buchi::new(arity, n, initial, acc, edges))
}

/// Disjoint union.
pub fn union(a: &Buchi, b: &Buchi) -> Result<Buchi> {
    a.check_same_arity(b)?;
    let off = a.state_count();
    let n = off + b.state_count();
    let mut initial: Vec<State> = a.initial().to_vec();
    initial.extend(b.initial().iter().map(|&s| s + off));
    let mut acc: Vec<State> = a.accepting_states().collect();
    acc.extend(b.accepting_states().map(|s| s + off));
    let mut edges: Vec<_> = a
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, e.label.clone()))
        .collect();
    edges.extend(
        b.edges()
            .iter()
            .map(|e| (e.src + off, e.dst + off, e.label.clone())),
    );
    Ok(Buchi::new(a.arity(), n, initial, acc, edges))
}

pub fn intersect_all(parts: &[Buchi]) -> Result<Buchi> {
    assert!(!parts.is_empty());
    // smallest factors first keeps the intermediate products lean
    let mut idx: Vec<usize> = (0..parts.len()).collect();
    idx.sort_by_key(|&i| parts[i].state_count());
    let mut acc = parts[idx[0]].clone();
    for &i in &idx[1..] {
        acc = intersect(&acc, &parts[i])?;
    }
    Ok(acc)
}
