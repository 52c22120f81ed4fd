//! Automata over the `#`-separated binary coding of continued fractions.
//!
//! An irrational slope `[0; a₁, a₂, …]` (all terms ≥ 1) is coded as the
//! ω-word `# bin(a₁) # bin(a₂) …`, each term least-significant-bit first
//! with any number of trailing zero bits. The coding language is
//! `(#(0|1)*1(0|1)*)^ω`; a slope corresponds to the set of all paddings of
//! its minimal coding, and [`zero_closure`] saturates a language under
//! exactly that padding equivalence (simultaneously on all tracks).

use crate::error::{Result, SturmError};
use crate::words;
use buchi::ops::{intersect_all, reduce, trim, ReduceOptions};
use buchi::sym::{MASK_BITS, MASK_HASH};
use buchi::{build_machine, Buchi, Cube, Label, Letter, Sym};
use std::collections::{HashMap, HashSet, VecDeque};

/// Coding words of irrational slopes: every block carries at least one 1
/// and blocks recur forever.
pub fn build_r() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        NeedOne,
        Good,
    }
    build_machine(
        1,
        vec![St::Pre],
        |s, sym| match (s, sym.letter(0)) {
            (St::Pre, Letter::Hash) => vec![St::NeedOne],
            (St::NeedOne, Letter::Zero) => vec![St::NeedOne],
            (St::NeedOne, Letter::One) => vec![St::Good],
            (St::Good, Letter::Zero) | (St::Good, Letter::One) => vec![St::Good],
            (St::Good, Letter::Hash) => vec![St::NeedOne],
            _ => vec![],
        },
        // NeedOne recurs iff infinitely many blocks close with a 1 inside
        |s| matches!(s, St::NeedOne),
    )
}

/// All tracks share their `#` positions and those positions recur forever.
pub fn build_aligned(k: usize) -> Buchi {
    let bits = Cube::of_masks(&vec![MASK_BITS; k]);
    let hash = Cube::of_masks(&vec![MASK_HASH; k]);
    Buchi::new(
        k,
        2,
        vec![0],
        [1],
        vec![
            (0, 0, Label::of_cube(bits)),
            (0, 1, Label::of_cube(hash)),
            (1, 0, Label::of_cube(bits)),
            (1, 1, Label::of_cube(hash)),
        ],
    )
}

/// Block-sequence orders on aligned coded pairs. Blocks are compared as
/// binary integers; `Lex2` decides at the first differing block, `Colex2`
/// at the last (meaningful when only finitely many blocks differ), and
/// `Alex2` at the first with the orientation reversed on odd (1-based)
/// block indices — the continued-fraction value order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockOrder {
    Lex2,
    Colex2,
    Alex2,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Cmp {
    Eq,
    Lt,
    Gt,
}

impl Cmp {
    // LSB-first streaming: the highest (latest) differing bit decides
    fn bit(self, a: Letter, b: Letter) -> Cmp {
        match (a, b) {
            (x, y) if x == y => self,
            (Letter::Zero, Letter::One) => Cmp::Lt,
            _ => Cmp::Gt,
        }
    }
}

pub fn build_block_order(kind: BlockOrder) -> Buchi {
    order_machine(kind, true)
}

/// First-differing-block order with the orientation reversed on *even*
/// block indices instead: the value order of the reals `Σ b_{i}β_{i-1}`,
/// where the sign of `β_{i-1}` alternates starting positive.
pub(crate) fn build_alex_flipped() -> Buchi {
    order_machine(BlockOrder::Alex2, false)
}

#[doc(hidden)]
pub fn probe_alexf() -> Buchi {
    build_alex_flipped()
}

fn order_machine(kind: BlockOrder, reverse_at_odd: bool) -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        // odd: parity of the block being read; last: latest block verdict
        Scan { odd: bool, cmp: Cmp, last: Cmp },
        Sink,
    }
    let start = St::Scan {
        odd: true,
        cmp: Cmp::Eq,
        last: Cmp::Eq,
    };
    let machine = build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (a, b) = (sym.letter(0), sym.letter(1));
            let boundary = a == Letter::Hash && b == Letter::Hash;
            if (a == Letter::Hash) != (b == Letter::Hash) {
                return vec![];
            }
            match s {
                St::Pre if boundary => vec![start.clone()],
                St::Pre => vec![],
                St::Sink => vec![St::Sink],
                St::Scan { odd, cmp, last } => {
                    if !boundary {
                        return vec![St::Scan {
                            odd: *odd,
                            cmp: cmp.bit(a, b),
                            last: *last,
                        }];
                    }
                    match kind {
                        BlockOrder::Lex2 => match cmp {
                            Cmp::Eq => vec![start.clone()],
                            Cmp::Lt => vec![St::Sink],
                            Cmp::Gt => vec![],
                        },
                        BlockOrder::Alex2 => match (*odd == reverse_at_odd, *cmp) {
                            (_, Cmp::Eq) => vec![St::Scan {
                                odd: !odd,
                                cmp: Cmp::Eq,
                                last: Cmp::Eq,
                            }],
                            (true, Cmp::Gt) | (false, Cmp::Lt) => vec![St::Sink],
                            _ => vec![],
                        },
                        BlockOrder::Colex2 => {
                            let last = if *cmp == Cmp::Eq { *last } else { *cmp };
                            vec![St::Scan {
                                odd: !odd,
                                cmp: Cmp::Eq,
                                last,
                            }]
                        }
                    }
                }
            }
        },
        |s| match kind {
            // the run settles with all later blocks equal and last diff low
            BlockOrder::Colex2 => {
                matches!(s, St::Scan { cmp: Cmp::Eq, last: Cmp::Lt, .. })
            }
            _ => matches!(s, St::Sink),
        },
    );
    let aligned = build_aligned(2);
    reduce(
        &intersect_all(&[machine, aligned]).expect("arity 2"),
        &ReduceOptions::default(),
    )
}

/// Aligned coded pairs `(u, v)` with `α(u) < α(v)`: the first differing
/// block decides, orientation flipping with block parity (a larger first
/// term means a smaller value, and so on alternately).
pub fn build_cf_less() -> Buchi {
    let r = build_r();
    let parts = [
        build_block_order(BlockOrder::Alex2),
        buchi::ops::rearrange(&r, &[0], 2).expect("cylinder"),
        buchi::ops::rearrange(&r, &[1], 2).expect("cylinder"),
    ];
    reduce(
        &intersect_all(&parts).expect("arity 2"),
        &ReduceOptions::default(),
    )
}

/// Coded slopes with value below 1/2, i.e. first term at least 2: the
/// first block has a 1 somewhere above bit 0.
pub fn build_less_than_half() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Bit0,
        Rest { found: bool },
        Sink,
    }
    let machine = build_machine(
        1,
        vec![St::Pre],
        |s, sym| match (s, sym.letter(0)) {
            (St::Pre, Letter::Hash) => vec![St::Bit0],
            (St::Bit0, Letter::Zero) | (St::Bit0, Letter::One) => {
                vec![St::Rest { found: false }]
            }
            (St::Rest { found }, Letter::Zero) => vec![St::Rest { found: *found }],
            (St::Rest { .. }, Letter::One) => vec![St::Rest { found: true }],
            (St::Rest { found: true }, Letter::Hash) => vec![St::Sink],
            (St::Sink, _) => vec![St::Sink],
            _ => vec![],
        },
        |s| matches!(s, St::Sink),
    );
    reduce(
        &intersect_all(&[machine, build_r()]).expect("arity 1"),
        &ReduceOptions::default(),
    )
}

/// All codings of one quadratic slope `[0; prefix, period^ω]`: the padding
/// closure of the canonical lasso.
pub fn build_quadratic_constant(prefix: &[u64], period: &[u64]) -> Result<Buchi> {
    if period.is_empty() {
        return Err(SturmError::invalid("period must be nonempty"));
    }
    if prefix.iter().chain(period).any(|&t| t == 0) {
        return Err(SturmError::invalid("continued-fraction terms must be ≥ 1"));
    }
    let lasso = words::slope_word(prefix, period);
    Ok(reduce(
        &zero_closure(&lasso.automaton()),
        &ReduceOptions::default(),
    ))
}

/// Saturate a language of aligned words under block padding: membership
/// becomes invariant under adding or removing trailing all-zero columns
/// inside any block. Padding inserts a zero loop before each `#` edge;
/// shrinking shortcuts runs of shape `0ⁿ…0ⁿ#ⁿ` with a fresh state that
/// remembers whether the skipped segment crossed an accepting state.
pub fn zero_closure(a: &Buchi) -> Buchi {
    let k = a.arity();
    let zeros = Sym::zeros(k);
    let hashes = Sym::hashes(k);
    let zl = Label::point(zeros, k);
    let hl = Label::point(hashes, k);
    let n0 = a.state_count();
    let mut edges: Vec<(u32, u32, Label)> = a
        .edges()
        .iter()
        .map(|e| (e.src, e.dst, e.label.clone()))
        .collect();
    let mut accepting: Vec<u32> = a.accepting_states().map(|s| s as u32).collect();
    let mut next = n0;

    // padding: p --0ⁿ--> μ(q) ⟲0ⁿ --#ⁿ--> q for every #ⁿ edge p → q
    let mut mu: HashMap<u32, u32> = HashMap::new();
    let hash_edges: Vec<(u32, u32)> = a
        .edges()
        .iter()
        .filter(|e| e.label.contains(hashes, k))
        .map(|e| (e.src, e.dst))
        .collect();
    for &(src, dst) in &hash_edges {
        let m = *mu.entry(dst).or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        edges.push((src, m, zl.clone()));
    }
    let mut mu_pairs: Vec<(u32, u32)> = mu.iter().map(|(&q, &m)| (q, m)).collect();
    mu_pairs.sort_unstable();
    for &(q, m) in &mu_pairs {
        edges.push((m, m, zl.clone()));
        edges.push((m, q, hl.clone()));
    }

    // shrinking: discover p --0ⁿ·…·0ⁿ--> r --#ⁿ--> q with at least one zero
    // step; ν(q, f) replays q's exits and is final iff the skipped states
    // (or q itself) contained a final one.
    let snapshot = edges.clone();
    let mut entries: HashSet<(u32, u32, bool)> = HashSet::new();
    for p in 0..n0 {
        let mut seen: HashSet<(u32, bool)> = HashSet::new();
        let mut queue: VecDeque<(u32, bool)> = VecDeque::new();
        for e in a.out(p) {
            if e.label.contains(zeros, k) {
                let st = (e.dst, a.is_accepting(e.dst));
                if seen.insert(st) {
                    queue.push_back(st);
                }
            }
        }
        while let Some((r, f)) = queue.pop_front() {
            for e in a.out(r) {
                if e.label.contains(zeros, k) {
                    let st = (e.dst, f || a.is_accepting(e.dst));
                    if seen.insert(st) {
                        queue.push_back(st);
                    }
                }
            }
        }
        for &(r, f) in &seen {
            for e in a.out(r) {
                if e.label.contains(hashes, k) {
                    entries.insert((p, e.dst, f || a.is_accepting(e.dst)));
                }
            }
        }
    }
    let mut entries: Vec<_> = entries.into_iter().collect();
    entries.sort_unstable();
    let mut nu: HashMap<(u32, bool), u32> = HashMap::new();
    for &(p, q, f) in &entries {
        let id = *nu.entry((q, f)).or_insert_with(|| {
            let id = next;
            next += 1;
            if f {
                accepting.push(id);
            }
            id
        });
        edges.push((p, id, hl.clone()));
    }
    let mut nu_pairs: Vec<((u32, bool), u32)> = nu.into_iter().collect();
    nu_pairs.sort_unstable();
    for &((q, _), id) in &nu_pairs {
        for (src, dst, label) in &snapshot {
            if *src == q {
                edges.push((id, *dst, label.clone()));
            }
        }
    }

    trim(&Buchi::new(
        k,
        next,
        a.initial().to_vec(),
        accepting,
        edges,
    ))
}
