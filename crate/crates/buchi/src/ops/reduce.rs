//! State-space reduction: forward and backward bisimulation quotients
//! (any size, alternated to a fixpoint) and direct simulation quotient
//! with little-brother edge pruning (bounded), all language-preserving.

use crate::automaton::{BitSet, Buchi, State};
use crate::ops::emptiness::trim;
use crate::sym::{all_syms, Label, Sym, MAX_ENUM_ARITY};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug)]
pub struct ReduceOptions {
    /// Simulation is quadratic in states; skip it above this size.
    pub sim_threshold: usize,
}

impl Default for ReduceOptions {
    fn default() -> ReduceOptions {
        ReduceOptions {
            sim_threshold: 2500,
        }
    }
}

/// The partition of the alphabet induced by the automaton's distinct edge
/// labels: two symbols in the same atom lie in exactly the same labels, so
/// they are interchangeable everywhere in the automaton.
pub struct Atoms {
    /// (cube cover, representative symbol) per atom
    pub atoms: Vec<(Label, Sym)>,
    /// distinct labels in first-seen order
    pub labels: Vec<Label>,
    /// label id for every edge, parallel to `Buchi::edges()`
    pub edge_label: Vec<u32>,
    /// membership[atom][label] — atom lies inside that label
    pub membership: Vec<Vec<bool>>,
}

pub fn atomize(a: &Buchi) -> Option<Atoms> {
    if a.arity() > MAX_ENUM_ARITY {
        return None;
    }
    let mut labels: Vec<Label> = Vec::new();
    let mut label_ids: HashMap<Label, u32> = HashMap::new();
    let mut edge_label = Vec::with_capacity(a.edge_count());
    for e in a.edges() {
        let next = labels.len() as u32;
        let id = *label_ids.entry(e.label.clone()).or_insert_with(|| {
            labels.push(e.label.clone());
            next
        });
        edge_label.push(id);
    }
    let arity = a.arity();
    let mut groups: HashMap<Vec<u64>, Vec<Sym>> = HashMap::new();
    for sym in all_syms(arity) {
        let mut sig = vec![0u64; labels.len().div_ceil(64)];
        for (i, l) in labels.iter().enumerate() {
            if l.contains(sym, arity) {
                sig[i / 64] |= 1 << (i % 64);
            }
        }
        groups.entry(sig).or_default().push(sym);
    }
    let mut atoms: Vec<(Vec<u64>, Vec<Sym>)> = groups.into_iter().collect();
    atoms.sort_by_key(|(_, syms)| syms[0]);
    let membership = atoms
        .iter()
        .map(|(sig, _)| {
            (0..labels.len())
                .map(|i| sig[i / 64] & (1 << (i % 64)) != 0)
                .collect()
        })
        .collect();
    let atoms = atoms
        .into_iter()
        .map(|(_, syms)| (Label::cover(&syms, arity), syms[0]))
        .collect();
    Some(Atoms {
        atoms,
        labels,
        edge_label,
        membership,
    })
}

// per edge, the list of letter ids the edge carries: alphabet atoms when
// the alphabet is enumerable, otherwise the distinct labels themselves
// (coarser letters only refine partitions further, which merges fewer
// states but stays sound)
fn edge_letters(a: &Buchi) -> Vec<Vec<u32>> {
    match &atomize(a) {
        Some(at) => at
            .edge_label
            .iter()
            .map(|&lid| {
                (0..at.atoms.len() as u32)
                    .filter(|&aid| at.membership[aid as usize][lid as usize])
                    .collect()
            })
            .collect(),
        None => {
            let mut labels: HashMap<Label, u32> = HashMap::new();
            a.edges()
                .iter()
                .map(|e| {
                    let next = labels.len() as u32;
                    vec![*labels.entry(e.label.clone()).or_insert(next)]
                })
                .collect()
        }
    }
}

// partition refinement over (seed class, letter moves into classes); the
// moves run along edges forward or backward
fn refine(a: &Buchi, seed: impl Fn(State) -> u32, backward: bool) -> (Vec<u32>, u32) {
    let n = a.state_count() as usize;
    let letters = edge_letters(a);
    let mut block: Vec<u32> = (0..n).map(|s| seed(s as State)).collect();
    // 0 is unreachable as a block count, so at least one round always runs;
    // each round refines the previous partition (the key includes block[s]),
    // hence equal consecutive counts mean the partition is stable.
    let mut block_count = 0;
    loop {
        let mut moves: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        for (idx, e) in a.edges().iter().enumerate() {
            let (from, to) = if backward {
                (e.dst as usize, block[e.src as usize])
            } else {
                (e.src as usize, block[e.dst as usize])
            };
            for &letter in &letters[idx] {
                moves[from].push((letter, to));
            }
        }
        let mut sigs: HashMap<(u32, Vec<(u32, u32)>), u32> = HashMap::new();
        let mut next_block = vec![0u32; n];
        for s in 0..n {
            let mut mv = std::mem::take(&mut moves[s]);
            mv.sort_unstable();
            mv.dedup();
            let key = (block[s], mv);
            let fresh = sigs.len() as u32;
            next_block[s] = *sigs.entry(key).or_insert(fresh);
        }
        let new_count = sigs.len();
        block = next_block;
        if new_count == block_count {
            break;
        }
        block_count = new_count;
    }
    (block, block_count as u32)
}

/// Forward bisimulation quotient: states with matching successor behavior
/// and acceptance collapse.
pub fn bisim_quotient(a: &Buchi) -> Buchi {
    if a.state_count() == 0 {
        return a.clone();
    }
    let (block, count) = refine(a, |s| u32::from(a.is_accepting(s)), false);
    quotient(a, &block, count)
}

/// Backward bisimulation quotient: states with matching predecessor
/// behavior collapse. Classes stay uniform on the initial and accepting
/// flags, so any run of the quotient lifts prefixwise to a run of the
/// original visiting the same flags.
pub fn back_bisim_quotient(a: &Buchi) -> Buchi {
    if a.state_count() == 0 {
        return a.clone();
    }
    let initial: BitSet = {
        let mut b = BitSet::new(a.state_count() as usize);
        for &s in a.initial() {
            b.insert(s as usize);
        }
        b
    };
    let (block, count) = refine(
        a,
        |s| 2 * u32::from(a.is_accepting(s)) + u32::from(initial.contains(s as usize)),
        true,
    );
    quotient(a, &block, count)
}

fn acceptance_seeded(a: &Buchi) -> Vec<BitSet> {
    let n = a.state_count() as usize;
    (0..n)
        .map(|p| {
            let mut row = BitSet::new(n);
            for q in 0..n {
                if !(a.is_accepting(p as State) && !a.is_accepting(q as State)) {
                    row.insert(q);
                }
            }
            row
        })
        .collect()
}

/// Direct simulation preorder: sim[p] contains every q with p <= q, i.e.
/// q can mimic p step by step while matching acceptance. Runs on the atom
/// alphabet with successor bitsets when the alphabet is enumerable.
pub fn direct_sim(a: &Buchi) -> Vec<BitSet> {
    match atomize(a) {
        Some(at) => direct_sim_atoms(a, &at),
        None => direct_sim_labels(a),
    }
}

fn direct_sim_atoms(a: &Buchi, at: &Atoms) -> Vec<BitSet> {
    let n = a.state_count() as usize;
    // sparse per-state successor sets, keyed by atom id
    let mut succ: Vec<Vec<(u32, BitSet)>> = vec![Vec::new(); n];
    for (idx, e) in a.edges().iter().enumerate() {
        let lid = at.edge_label[idx] as usize;
        for aid in 0..at.atoms.len() {
            if at.membership[aid][lid] {
                let row = &mut succ[e.src as usize];
                match row.binary_search_by_key(&(aid as u32), |&(k, _)| k) {
                    Ok(i) => row[i].1.insert(e.dst as usize),
                    Err(i) => {
                        let mut b = BitSet::new(n);
                        b.insert(e.dst as usize);
                        row.insert(i, (aid as u32, b));
                    }
                }
            }
        }
    }
    let mut sim = acceptance_seeded(a);
    loop {
        let mut changed = false;
        for p in 0..n {
            let mut drops: Vec<usize> = Vec::new();
            for q in sim[p].iter() {
                if p == q {
                    continue;
                }
                // every atom move of p must reach a sim-covering q move
                let ok = succ[p].iter().all(|(aid, ps)| {
                    let qs = match succ[q].binary_search_by_key(aid, |&(k, _)| k) {
                        Ok(i) => &succ[q][i].1,
                        Err(_) => return false,
                    };
                    ps.iter().all(|pd| qs.intersects(&sim[pd]))
                });
                if !ok {
                    drops.push(q);
                }
            }
            for q in drops {
                sim[p].remove(q);
                changed = true;
            }
        }
        if !changed {
            return sim;
        }
    }
}

// label-granular fallback for wide alphabets; coarser but always sound
fn direct_sim_labels(a: &Buchi) -> Vec<BitSet> {
    let n = a.state_count() as usize;
    let arity = a.arity();
    let mut sim = acceptance_seeded(a);
    let mut changed = true;
    while changed {
        changed = false;
        for p in 0..n {
            let candidates: Vec<usize> = sim[p].iter().collect();
            for q in candidates {
                if p == q {
                    continue;
                }
                // every move of p must be coverable by moves of q into
                // simulating successors
                let ok = a.out(p as State).iter().all(|ep| {
                    let mut cover = Label::empty();
                    for eq in a.out(q as State) {
                        if sim[ep.dst as usize].contains(eq.dst as usize) {
                            cover = cover.union(&eq.label);
                        }
                    }
                    ep.label.is_subset_of(&cover, arity)
                });
                if !ok {
                    sim[p].remove(q);
                    changed = true;
                }
            }
        }
    }
    sim
}

/// Quotient by mutual direct simulation, then drop out-edges whose label
/// and target are dominated by sibling edges into simulation-larger
/// states (little brothers) and initial states dominated by other initial
/// states: runs reroute through the dominating side with acceptance
/// matched stepwise, so the language is untouched while nondeterminism
/// shrinks.
pub fn sim_quotient(a: &Buchi) -> Buchi {
    let n = a.state_count() as usize;
    if n == 0 {
        return a.clone();
    }
    let sim = direct_sim(a);
    let mut block = vec![u32::MAX; n];
    let mut count = 0u32;
    for p in 0..n {
        if block[p] != u32::MAX {
            continue;
        }
        block[p] = count;
        for q in (p + 1)..n {
            if block[q] == u32::MAX && sim[p].contains(q) && sim[q].contains(p) {
                block[q] = count;
            }
        }
        count += 1;
    }
    prune_little_brothers(&quotient(a, &block, count))
}

fn prune_little_brothers(a: &Buchi) -> Buchi {
    let n = a.state_count() as usize;
    if n == 0 {
        return a.clone();
    }
    // mutual pairs were just merged, so distinct targets compare strictly
    let sim = direct_sim(a);
    let arity = a.arity();
    let mut edges: Vec<(State, State, Label)> = Vec::new();
    for s in 0..n {
        let out = a.out(s as State);
        for e in out {
            let p = e.dst as usize;
            let mut cover = Label::empty();
            for f in out {
                let q = f.dst as usize;
                if q != p && sim[p].contains(q) && !sim[q].contains(p) {
                    cover = cover.union(&f.label);
                }
            }
            if !e.label.is_subset_of(&cover, arity) {
                edges.push((e.src, e.dst, e.label.clone()));
            }
        }
    }
    let initial: Vec<State> = a
        .initial()
        .iter()
        .filter(|&&p| {
            !a.initial().iter().any(|&q| {
                q != p
                    && sim[p as usize].contains(q as usize)
                    && !sim[q as usize].contains(p as usize)
            })
        })
        .copied()
        .collect();
    if edges.len() == a.edge_count() && initial.len() == a.initial().len() {
        return a.clone();
    }
    Buchi::new(
        arity,
        a.state_count(),
        initial,
        a.accepting_states().collect::<Vec<_>>(),
        edges,
    )
}

fn quotient(a: &Buchi, block: &[u32], count: u32) -> Buchi {
    if count as usize == a.state_count() as usize {
        return a.clone();
    }
    let initial: Vec<State> = a.initial().iter().map(|&s| block[s as usize]).collect();
    let acc: Vec<State> = a.accepting_states().map(|s| block[s as usize]).collect();
    let edges = a
        .edges()
        .iter()
        .map(|e| (block[e.src as usize], block[e.dst as usize], e.label.clone()))
        .collect();
    Buchi::new(a.arity(), count, initial, acc, edges)
}

/// The standard cleanup pass: trim, then forward and backward bisimulation
/// alternated to a joint fixpoint, then simulation when the result is
/// small enough.
pub fn reduce(a: &Buchi, opts: &ReduceOptions) -> Buchi {
    let mut cur = trim(a);
    loop {
        if cur.state_count() == 0 {
            return cur;
        }
        let before = cur.state_count();
        cur = back_bisim_quotient(&bisim_quotient(&cur));
        if cur.state_count() == before {
            break;
        }
    }
    if (cur.state_count() as usize) <= opts.sim_threshold {
        cur = trim(&sim_quotient(&cur));
    }
    cur
}
