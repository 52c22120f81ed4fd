//! Ostrowski numeration, uniformly in the slope.
//!
//! A pair `(v, w)` of aligned coded words assigns digit `w_i` to the slope
//! term `a_i` carried by `v`. The digits name a natural number when the
//! usual legality constraints hold blockwise and only finitely many bits
//! are set (`A^fin`), and a point of the half-open fundamental interval
//! when the finiteness constraint is relaxed to an infinitary parity
//! condition (`A`). Two linear orders matter: digit value order (last
//! differing block) on `A^fin`, and the real order (first differing block
//! with alternating orientation) on `A`.

use crate::encoding::{
    build_aligned, build_alex_flipped, build_block_order, build_r, BlockOrder,
};
use crate::error::Result;
use buchi::ops::{
    all_states_accepting, complement, intersect_all, normalize, project, rearrange, reduce,
    ReduceOptions,
};
use buchi::sym::{MASK_ANY, MASK_HASH, MASK_ONE, MASK_ZERO};
use buchi::{build_machine, Buchi, Cube, Label, Letter, Limits};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Cmp {
    Eq,
    Lt,
    Gt,
}

// digit block (track 1) versus slope block (track 0), LSB-first streaming
fn cmp_bit(cmp: Cmp, w: Letter, v: Letter) -> Cmp {
    match (w, v) {
        (x, y) if x == y => cmp,
        (Letter::Zero, Letter::One) => Cmp::Lt,
        _ => Cmp::Gt,
    }
}

/// Blockwise digit legality: first digit strictly below the first term,
/// later digits at most their term, and a digit equal to its term forces
/// the previous digit to zero. Pure safety; liveness comes from the
/// alignment and coding automata it is intersected with.
fn legality_machine() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Scan {
            first: bool,
            cmp: Cmp,
            wzero: bool,
            prev_wzero: bool,
        },
    }
    build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (v, w) = (sym.letter(0), sym.letter(1));
            let boundary = v == Letter::Hash && w == Letter::Hash;
            if (v == Letter::Hash) != (w == Letter::Hash) {
                return vec![];
            }
            match s {
                St::Pre if boundary => vec![St::Scan {
                    first: true,
                    cmp: Cmp::Eq,
                    wzero: true,
                    prev_wzero: true,
                }],
                St::Pre => vec![],
                St::Scan {
                    first,
                    cmp,
                    wzero,
                    prev_wzero,
                } => {
                    if !boundary {
                        return vec![St::Scan {
                            first: *first,
                            cmp: cmp_bit(*cmp, w, v),
                            wzero: *wzero && w == Letter::Zero,
                            prev_wzero: *prev_wzero,
                        }];
                    }
                    let ok = match cmp {
                        Cmp::Lt => true,
                        Cmp::Gt => false,
                        Cmp::Eq => !*first && *prev_wzero,
                    };
                    if !ok {
                        return vec![];
                    }
                    vec![St::Scan {
                        first: false,
                        cmp: Cmp::Eq,
                        wzero: true,
                        prev_wzero: *wzero,
                    }]
                }
            }
        },
        |_| true,
    )
}

/// Finitely many 1 bits on the given track (of `arity` total).
fn finitely_many_ones(track: usize, arity: usize) -> Buchi {
    let any = vec![MASK_ANY; arity];
    let mut no_one = any.clone();
    no_one[track] = MASK_ZERO | MASK_HASH;
    Buchi::new(
        arity,
        2,
        vec![0],
        [1],
        vec![
            (0, 0, Label::of_cube(Cube::of_masks(&any))),
            (0, 1, Label::of_cube(Cube::of_masks(&no_one))),
            (1, 1, Label::of_cube(Cube::of_masks(&no_one))),
        ],
    )
}

/// Digit block differs from the slope block at infinitely many odd
/// (1-based) positions.
fn infinitely_many_odd_diffs() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Blk { odd: bool, diff: bool, hit: bool },
    }
    build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (v, w) = (sym.letter(0), sym.letter(1));
            let boundary = v == Letter::Hash && w == Letter::Hash;
            if (v == Letter::Hash) != (w == Letter::Hash) {
                return vec![];
            }
            match s {
                St::Pre if boundary => vec![St::Blk {
                    odd: true,
                    diff: false,
                    hit: false,
                }],
                St::Pre => vec![],
                St::Blk { odd, diff, hit } => {
                    if boundary {
                        vec![St::Blk {
                            odd: !odd,
                            diff: false,
                            hit: *odd && *diff,
                        }]
                    } else {
                        vec![St::Blk {
                            odd: *odd,
                            diff: *diff || v != w,
                            hit: *hit,
                        }]
                    }
                }
            }
        },
        |s| matches!(s, St::Blk { hit: true, .. }),
    )
}

fn opts() -> ReduceOptions {
    ReduceOptions::default()
}

/// `A^fin`: pairs `(v, w)` where `w` is the Ostrowski representation of a
/// natural number with respect to the slope coded by `v`.
pub fn build_afin() -> Buchi {
    let parts = [
        legality_machine(),
        finitely_many_ones(1, 2),
        build_aligned(2),
        rearrange(&build_r(), &[0], 2).expect("cylinder"),
    ];
    reduce(&intersect_all(&parts).expect("arity 2"), &opts())
}

/// `A`: digit words for points of the fundamental interval — legality plus
/// the requirement that digits differ from the terms at infinitely many
/// odd positions.
pub fn build_a() -> Buchi {
    let parts = [
        legality_machine(),
        infinitely_many_odd_diffs(),
        build_aligned(2),
        rearrange(&build_r(), &[0], 2).expect("cylinder"),
    ];
    reduce(&intersect_all(&parts).expect("arity 2"), &opts())
}

/// `(v, 0_v)`: the all-zero digit word against any slope.
pub fn build_zero() -> Buchi {
    let zero_digits = Buchi::new(
        2,
        1,
        vec![0],
        [0],
        vec![(
            0,
            0,
            Label::of_cube(Cube::of_masks(&[MASK_ANY, MASK_ZERO | MASK_HASH])),
        )],
    );
    let parts = [
        zero_digits,
        build_aligned(2),
        rearrange(&build_r(), &[0], 2).expect("cylinder"),
    ];
    reduce(&intersect_all(&parts).expect("arity 2"), &opts())
}

/// `(v, rep(1))`: digit 1 sits at position 1 when the first term exceeds
/// 1, otherwise at position 2 (the greedy rule prefers the larger index).
pub fn build_one() -> Buchi {
    // per-block value classification: zero, exactly one, anything more
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    enum Val {
        Zero,
        One,
        Big,
    }
    fn upd(v: Val, bit: Letter, at0: bool) -> Val {
        match (v, bit, at0) {
            (v, Letter::Zero, _) => v,
            (Val::Zero, Letter::One, true) => Val::One,
            _ => Val::Big,
        }
    }
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        B1 { at0: bool, v: Val, w: Val },
        B2 { at0: bool, w: Val },
        Tail,
    }
    let machine = build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (v, w) = (sym.letter(0), sym.letter(1));
            let boundary = v == Letter::Hash && w == Letter::Hash;
            if (v == Letter::Hash) != (w == Letter::Hash) {
                return vec![];
            }
            match s {
                St::Pre if boundary => vec![St::B1 {
                    at0: true,
                    v: Val::Zero,
                    w: Val::Zero,
                }],
                St::Pre => vec![],
                St::B1 { at0, v: va, w: wa } => {
                    if !boundary {
                        return vec![St::B1 {
                            at0: false,
                            v: upd(*va, v, *at0),
                            w: upd(*wa, w, *at0),
                        }];
                    }
                    match (va, wa) {
                        // a₁ = 1 forces digit 0 here and digit 1 next
                        (Val::One, Val::Zero) => vec![St::B2 {
                            at0: true,
                            w: Val::Zero,
                        }],
                        // a₁ ≥ 2 takes digit 1 immediately
                        (Val::Big, Val::One) => vec![St::Tail],
                        _ => vec![],
                    }
                }
                St::B2 { at0, w: wa } => {
                    if !boundary {
                        return vec![St::B2 {
                            at0: false,
                            w: upd(*wa, w, *at0),
                        }];
                    }
                    match wa {
                        Val::One => vec![St::Tail],
                        _ => vec![],
                    }
                }
                St::Tail => {
                    if w == Letter::One {
                        vec![]
                    } else {
                        vec![St::Tail]
                    }
                }
            }
        },
        |_| true,
    );
    let parts = [
        machine,
        build_aligned(2),
        rearrange(&build_r(), &[0], 2).expect("cylinder"),
    ];
    reduce(&intersect_all(&parts).expect("arity 2"), &opts())
}

/// Letterwise equality of two tracks of an aligned pair.
pub fn build_word_eq() -> Buchi {
    let diag = Label::of_cubes(vec![
        Cube::of_masks(&[MASK_ZERO, MASK_ZERO]),
        Cube::of_masks(&[MASK_ONE, MASK_ONE]),
        Cube::of_masks(&[MASK_HASH, MASK_HASH]),
    ]);
    let eq = Buchi::new(2, 1, vec![0], [0], vec![(0, 0, diag)]);
    reduce(
        &intersect_all(&[eq, build_aligned(2)]).expect("arity 2"),
        &opts(),
    )
}

/// `(v, s, t)` with both valid for `v` and `Z_v(s) < Z_v(t)`: value order
/// is the last-differing-block order on digit words.
pub fn build_less_fin() -> Buchi {
    let afin = build_afin();
    let parts = [
        rearrange(&build_block_order(BlockOrder::Colex2), &[1, 2], 3).expect("tracks"),
        rearrange(&afin, &[0, 1], 3).expect("tracks"),
        rearrange(&afin, &[0, 2], 3).expect("tracks"),
    ];
    reduce(&intersect_all(&parts).expect("arity 3"), &opts())
}

/// `(v, s, t)` with `s, t ∈ A_v` and `O_v(s) < O_v(t)`: first differing
/// digit decides, with orientation following the alternating sign of the
/// convergent differences.
pub fn build_less_real() -> Buchi {
    let a = build_a();
    let parts = [
        rearrange(&build_alex_flipped(), &[1, 2], 3).expect("tracks"),
        rearrange(&a, &[0, 1], 3).expect("tracks"),
        rearrange(&a, &[0, 2], 3).expect("tracks"),
    ];
    reduce(&intersect_all(&parts).expect("arity 3"), &opts())
}

/// `(v, x, y)` with `Z_v(y) = Z_v(x) + 1`: order-theoretic successor, one
/// universal quantifier over the value order.
pub fn build_successor(limits: &Limits) -> Result<Buchi> {
    let less = build_less_fin();
    // some valid z strictly between x and y
    let between = intersect_all(&[
        rearrange(&less, &[0, 1, 3], 4)?,
        rearrange(&less, &[0, 3, 2], 4)?,
    ])?;
    let bad = reduce(&project(&between, 3)?, &opts());
    let succ = intersect_all(&[less, complement(&bad, limits)?])?;
    Ok(reduce(&succ, &opts()))
}

/// `(v, m)` with `m` the `≺`-least element of `A_v` — the left end of the
/// fundamental interval, whose digits are 0 at odd and the full term at
/// even positions (every later choice then pulls the value up).
pub fn build_min_real() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Blk { odd: bool },
    }
    let machine = build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (v, w) = (sym.letter(0), sym.letter(1));
            let boundary = v == Letter::Hash && w == Letter::Hash;
            if (v == Letter::Hash) != (w == Letter::Hash) {
                return vec![];
            }
            match s {
                St::Pre if boundary => vec![St::Blk { odd: true }],
                St::Pre => vec![],
                St::Blk { odd } => {
                    if boundary {
                        return vec![St::Blk { odd: !odd }];
                    }
                    let want = if *odd { Letter::Zero } else { v };
                    if w == want {
                        vec![St::Blk { odd: *odd }]
                    } else {
                        vec![]
                    }
                }
            }
        },
        |_| true,
    );
    let parts = [machine, build_a()];
    reduce(&intersect_all(&parts).expect("arity 2"), &opts())
}

/// `(v, t, s)` with `t ≺ s`, or `t = s` letterwise with `t` the least
/// element's digit pattern. Purely syntactic (no validity conjuncts), so
/// it stays a single small machine; callers pin the tracks to `A_v` where
/// it matters. The two disjuncts run as separate modes chosen up front so
/// every accepting region is closed under successors — strict comparisons
/// resolve into the absorbing `Low` and the equal-at-minimum case is a
/// safety check — which keeps later determinizations of products over
/// this machine from shuffling marks.
fn lower_sandwich_machine() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Strict { odd: bool, cmp: Cmp },
        MinDiag { odd: bool },
        Low,
    }
    build_machine(
        3,
        vec![St::Pre],
        |s, sym| {
            let (v, t, w) = (sym.letter(0), sym.letter(1), sym.letter(2));
            let hashes = [v, t, w].iter().filter(|l| **l == Letter::Hash).count();
            if hashes != 0 && hashes != 3 {
                return vec![];
            }
            let boundary = hashes == 3;
            match s {
                St::Pre if boundary => vec![
                    St::Strict {
                        odd: true,
                        cmp: Cmp::Eq,
                    },
                    St::MinDiag { odd: true },
                ],
                St::Pre => vec![],
                St::Low => vec![St::Low],
                St::MinDiag { odd } => {
                    if boundary {
                        return vec![St::MinDiag { odd: !odd }];
                    }
                    let want = if *odd { Letter::Zero } else { v };
                    if t == want && w == want {
                        vec![St::MinDiag { odd: *odd }]
                    } else {
                        vec![]
                    }
                }
                St::Strict { odd, cmp } => {
                    if !boundary {
                        return vec![St::Strict {
                            odd: *odd,
                            cmp: cmp_bit(*cmp, t, w),
                        }];
                    }
                    // value order: normal at odd blocks, reversed at even
                    match (*odd, *cmp) {
                        (_, Cmp::Eq) => vec![St::Strict {
                            odd: !odd,
                            cmp: Cmp::Eq,
                        }],
                        (true, Cmp::Lt) | (false, Cmp::Gt) => vec![St::Low],
                        _ => vec![],
                    }
                }
            }
        },
        |s| matches!(s, St::Low | St::MinDiag { .. }),
    )
}

/// `(v, t)` with `t` eventually locked to the minimizing digit pattern —
/// zero at odd positions, the full term at even ones — from some odd
/// position onward (a lock starting at an odd zero digit never trips the
/// digit-equals-term legality rule). These are the infima of even-depth
/// cylinders, so they are order-dense, and the locked tail differs from
/// the term at every odd block, which discharges the infinitary part of
/// `A`-membership by reachability alone.
fn floor_machine() -> Buchi {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum St {
        Pre,
        Free { odd: bool },
        Locked { odd: bool },
    }
    build_machine(
        2,
        vec![St::Pre],
        |s, sym| {
            let (v, t) = (sym.letter(0), sym.letter(1));
            let boundary = v == Letter::Hash && t == Letter::Hash;
            if (v == Letter::Hash) != (t == Letter::Hash) {
                return vec![];
            }
            let enter = |odd: bool| {
                if odd {
                    vec![St::Free { odd }, St::Locked { odd }]
                } else {
                    vec![St::Free { odd }]
                }
            };
            match s {
                St::Pre if boundary => enter(true),
                St::Pre => vec![],
                St::Free { odd } => {
                    if boundary {
                        enter(!odd)
                    } else {
                        vec![St::Free { odd: *odd }]
                    }
                }
                St::Locked { odd } => {
                    if boundary {
                        return vec![St::Locked { odd: !odd }];
                    }
                    let want = if *odd { Letter::Zero } else { v };
                    if t == want {
                        vec![St::Locked { odd: *odd }]
                    } else {
                        vec![]
                    }
                }
            }
        },
        |s| matches!(s, St::Locked { .. }),
    )
}

#[doc(hidden)]
pub fn probe_lsd() -> Buchi {
    lower_sandwich_machine()
}

/// Topological closure of a set of `A_v`-point tuples `(v, s₁…s_n)` in the
/// product order topology: a tuple is kept iff every open box around it
/// (rays at the attained left endpoint) meets the set.
pub fn topological_closure(x: &Buchi, limits: &Limits) -> Result<Buchi> {
    let n = x.arity() - 1;
    assert!(n >= 1, "closure needs at least one point track");
    let big = 1 + 3 * n; // v, s̄, t̄ (lower bounds), ū (upper bounds)
    // callers usually hand over a projection; rebuilding it deterministic
    // keeps the coming complement of another projection tractable
    let x = normalize(x, limits);
    let a = build_a();
    let lsd = lower_sandwich_machine();
    let alexf = build_alex_flipped();

    // ∃s̄′ ∈ X inside the box, with the s̄′ tracks appended then projected.
    // The bounds are pinned to A_v by the outer box conjuncts and the
    // witness tracks by the input, so bare order machines suffice here.
    // Hulling them (every live state accepting) relaxes the box faces to
    // non-strict: the only runs that survive forever without reaching an
    // accepting verdict sit on the letterwise-equal diagonal, so the hulls
    // recognize ⊑ as pure safety automata and the projected product keeps
    // `x`'s acceptance as its single fairness condition. Closed boxes pick
    // out the same closure — legal bounds are dense in the value interval,
    // so a closed box missing X shrinks to one with fresh endpoints.
    let hull = |m: &Buchi| reduce(&all_states_accepting(m), &opts());
    let (lsd_le, alexf_le) = (hull(&lsd), hull(&alexf));
    let wide = big + n;
    let mut inner = vec![rearrange(
        &x,
        &(0..=n).map(|i| if i == 0 { 0 } else { big + i - 1 }).collect::<Vec<_>>(),
        wide,
    )?];
    for i in 0..n {
        let (sp, t, u) = (big + i, 1 + n + i, 1 + 2 * n + i);
        inner.push(rearrange(&lsd_le, &[0, t, sp], wide)?);
        inner.push(rearrange(&alexf_le, &[sp, u], wide)?);
    }
    let mut hit = reduce(&intersect_all(&inner)?, &opts());
    for track in (big..wide).rev() {
        hit = project(&hit, track)?;
    }
    let hit = reduce(&hit, &opts());
    eprintln!("[cl] hit: {} states", hit.state_count());

    // some box around s̄ missing X entirely. Bounds range over floor words
    // only — they are dense on both sides of every point, so the witnessed
    // boxes are still a neighborhood basis — and that choice, with the
    // legality safety check, replaces the recurring `A`-membership
    // conditions on the projected tracks by reachability ones. A single
    // alignment conjunct carries the only recurring obligation.
    let legal = legality_machine();
    let floor = floor_machine();
    let mut box_parts = vec![
        build_aligned(big),
        rearrange(&build_r(), &[0], big)?,
    ];
    for i in 0..n {
        let (s, t, u) = (1 + i, 1 + n + i, 1 + 2 * n + i);
        box_parts.push(rearrange(&lsd, &[0, t, s], big)?);
        box_parts.push(rearrange(&alexf, &[s, u], big)?);
        for bound in [t, u] {
            box_parts.push(rearrange(&legal, &[0, bound], big)?);
            box_parts.push(rearrange(&floor, &[0, bound], big)?);
        }
    }
    let t0 = std::time::Instant::now();
    let nh = complement(&hit, limits)?;
    eprintln!("[cl] not hit: {} states in {:?}", nh.state_count(), t0.elapsed());
    let bad = intersect_all(&[intersect_all(&box_parts)?, nh])?;
    let mut bad = reduce(&bad, &opts());
    for track in (1 + n..big).rev() {
        bad = project(&bad, track)?;
    }
    let bad = reduce(&bad, &opts());
    eprintln!("[cl] bad: {} states", bad.state_count());

    let t0 = std::time::Instant::now();
    let nb = complement(&bad, limits)?;
    eprintln!("[cl] not bad: {} states in {:?}", nb.state_count(), t0.elapsed());
    let mut dom = vec![nb, build_aligned(1 + n)];
    for i in 0..n {
        dom.push(rearrange(&a, &[0, 1 + i], 1 + n)?);
    }
    Ok(reduce(&intersect_all(&dom)?, &opts()))
}
