//! Complementation.
//!
//! Inputs are trimmed, reduced and completed first. When the completed
//! automaton happens to be deterministic a two-copy construction (guess the
//! last visit to an accepting state) is used, which is linear; otherwise the
//! automaton is determinized to a parity automaton à la Safra–Piterman and
//! the dual parity condition is translated back to a Büchi condition.

use crate::automaton::{Buchi, State};
use crate::error::{Limits, Result};
use crate::ops::boolean::intersect;
use crate::ops::emptiness::is_empty;
use crate::ops::reduce::{reduce, ReduceOptions};
use crate::ops::safra::{determinize, parity_odd_to_buchi};
use crate::sym::Label;

/// Make the transition function total. Adds at most one rejecting sink; an
/// automaton with no initial state gets the sink as its initial state.
pub fn complete(a: &Buchi) -> Buchi {
    let arity = a.arity();
    let n = a.state_count();
    let mut missing: Vec<Label> = Vec::with_capacity(n as usize);
    let mut any_missing = false;
    for s in 0..n {
        let mut covered = Label::empty();
        for e in a.out(s) {
            covered = covered.union(&e.label);
        }
        let rest = covered.complement(arity);
        any_missing |= !rest.is_empty();
        missing.push(rest);
    }
    if !any_missing && !a.initial().is_empty() {
        return a.clone();
    }
    let sink = n;
    let mut edges: Vec<(State, State, Label)> = a
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, e.label.clone()))
        .collect();
    for (s, rest) in missing.into_iter().enumerate() {
        if !rest.is_empty() {
            edges.push((s as State, sink, rest));
        }
    }
    edges.push((sink, sink, Label::full(arity)));
    let initial = if a.initial().is_empty() {
        vec![sink]
    } else {
        a.initial().to_vec()
    };
    Buchi::new(arity, n + 1, initial, a.accepting_states(), edges)
}

/// Complement of a complete deterministic automaton: keep a copy of the
/// run, and nondeterministically move into a second copy that never touches
/// an accepting state again. Accepting there = finitely many accepting
/// visits in the unique original run.
fn det_complement(a: &Buchi) -> Buchi {
    let n = a.state_count();
    debug_assert!(a.initial().len() == 1);
    let mut hat = vec![u32::MAX; n as usize];
    let mut next = n;
    for s in 0..n {
        if !a.is_accepting(s) {
            hat[s as usize] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(State, State, Label)> = Vec::new();
    for e in a.edges() {
        edges.push((e.src, e.dst, e.label.clone()));
        if hat[e.dst as usize] != u32::MAX {
            edges.push((e.src, hat[e.dst as usize], e.label.clone()));
            if hat[e.src as usize] != u32::MAX {
                edges.push((hat[e.src as usize], hat[e.dst as usize], e.label.clone()));
            }
        }
    }
    let q0 = a.initial()[0];
    let mut initial = vec![q0];
    if hat[q0 as usize] != u32::MAX {
        initial.push(hat[q0 as usize]);
    }
    let accepting: Vec<State> = hat.iter().copied().filter(|&h| h != u32::MAX).collect();
    Buchi::new(a.arity(), next, initial, accepting, edges)
}

/// L(result) = Σ^ω \ L(a).
pub fn complement(a: &Buchi, limits: &Limits) -> Result<Buchi> {
    let arity = a.arity();
    let small = reduce(a, &ReduceOptions::default());
    if small.state_count() == 0 {
        return Ok(Buchi::universal(arity));
    }
    let total = complete(&small);
    let co = if total.is_deterministic() {
        det_complement(&total)
    } else {
        let parity = determinize(&total, limits)?;
        parity_odd_to_buchi(&parity, limits)?
    };
    Ok(reduce(&co, &ReduceOptions::default()))
}

/// Rebuild the same language through a deterministic form: determinize,
/// shift every priority up by one so the odd-minimum acceptor reads back
/// the original language, and reduce. Ambiguity accumulated by earlier
/// projections collapses, which keeps later determinizations affordable.
/// Best effort: returns the reduced input when the automaton is already
/// deterministic or the determinization does not fit the limits.
pub fn normalize(a: &Buchi, limits: &Limits) -> Buchi {
    let small = reduce(a, &ReduceOptions::default());
    if small.state_count() == 0 || small.is_deterministic() {
        return small;
    }
    let rebuilt = determinize(&small, limits).and_then(|mut parity| {
        for e in &mut parity.edges {
            e.3 += 1;
        }
        parity.neutral += 1;
        parity_odd_to_buchi(&parity, limits)
    });
    match rebuilt {
        Ok(b) => reduce(&b, &ReduceOptions::default()),
        Err(_) => small,
    }
}

/// L(a) ⊆ L(b)?
pub fn included(a: &Buchi, b: &Buchi, limits: &Limits) -> Result<bool> {
    let cb = complement(b, limits)?;
    Ok(is_empty(&intersect(a, &cb)?))
}

/// Language equality by mutual inclusion.
pub fn equivalent(a: &Buchi, b: &Buchi, limits: &Limits) -> Result<bool> {
    Ok(included(a, b, limits)? && included(b, a, limits)?)
}
