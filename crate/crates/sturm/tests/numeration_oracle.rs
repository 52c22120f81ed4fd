//! Numeration-system automata checked against exact arithmetic: greedy
//! representations, the two orders, constants, successor, and closure.

use buchi::ops::{accepts, included};
use buchi::{Buchi, Limits, UpWord};
use exact::ExactSlope;
use num_traits::ToPrimitive;
use std::cmp::Ordering;
use sturm::ostrowski::{
    build_a, build_afin, build_less_fin, build_less_real, build_min_real, build_one,
    build_successor, build_word_eq, build_zero, topological_closure,
};
use sturm::words::{convolve_blocks, BlockSeq};

struct Fixture {
    oracle: ExactSlope,
    v: BlockSeq,
}

fn fixtures() -> Vec<Fixture> {
    [
        (vec![], vec![1]),
        (vec![], vec![2]),
        (vec![], vec![1, 2, 3]),
        (vec![6, 3], vec![1]),
    ]
    .into_iter()
    .map(|(stem, cycle)| Fixture {
        oracle: ExactSlope::periodic(&stem, &cycle),
        v: BlockSeq::new(&stem, &cycle),
    })
    .collect()
}

fn pair(f: &Fixture, digits: &BlockSeq, pad: usize) -> UpWord {
    convolve_blocks(&[f.v.clone(), digits.clone()], pad)
}

fn triple(f: &Fixture, x: &BlockSeq, y: &BlockSeq) -> UpWord {
    convolve_blocks(&[f.v.clone(), x.clone(), y.clone()], 0)
}

fn rep(f: &Fixture, n: u64) -> BlockSeq {
    BlockSeq::finite(&f.oracle.greedy_rep(n).expect("periodic slope"))
}

fn acc(a: &Buchi, w: &UpWord) -> bool {
    accepts(a, w).expect("arity matches")
}

#[test]
fn afin_accepts_exactly_the_greedy_representations() {
    let afin = build_afin();
    for f in fixtures() {
        for n in 0..=200u64 {
            let w = pair(&f, &rep(&f, n), 0);
            assert!(acc(&afin, &w), "rep({n}) rejected");
            let padded = pair(&f, &rep(&f, n), 2);
            assert!(acc(&afin, &padded), "padded rep({n}) rejected");
        }
    }
}

#[test]
fn afin_is_bijective_over_small_digit_space() {
    let afin = build_afin();
    for f in fixtures() {
        let blocks = 6usize;
        let terms: Vec<u64> = (1..=blocks).map(|i| f.oracle.term(i).unwrap()).collect();
        let convs = f.oracle.convergents(blocks).unwrap();
        let mut digits = vec![0u64; blocks];
        loop {
            let value: u64 = digits
                .iter()
                .zip(&convs)
                .map(|(&b, (_, q))| b * q.to_u64().unwrap())
                .sum();
            let expect = f.oracle.greedy_rep(value).unwrap() == trim_zeros(&digits);
            let got = acc(&afin, &pair(&f, &BlockSeq::finite(&digits), 0));
            assert_eq!(got, expect, "digits {digits:?}");
            // odometer over 0..=a_i per position
            let mut i = 0;
            loop {
                if i == blocks {
                    return;
                }
                if digits[i] < terms[i] {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

fn trim_zeros(d: &[u64]) -> Vec<u64> {
    let mut d = d.to_vec();
    while d.last() == Some(&0) {
        d.pop();
    }
    d
}

#[test]
fn a_distinguishes_finite_from_sup_representations() {
    let a = build_a();
    let afin = build_afin();
    let golden = &fixtures()[0];
    // (01)^ω and 0^ω lie in A but not A^fin; (10)^ω is the excluded sup form
    let low = BlockSeq::new(&[], &[0, 1]);
    let sup = BlockSeq::new(&[], &[1, 0]);
    let zero = BlockSeq::new(&[], &[0]);
    assert!(acc(&a, &pair(golden, &low, 0)));
    assert!(acc(&a, &pair(golden, &zero, 0)));
    assert!(!acc(&a, &pair(golden, &sup, 0)));
    assert!(!acc(&afin, &pair(golden, &low, 0)));
    for n in 0..40u64 {
        assert!(acc(&a, &pair(golden, &rep(golden, n), 0)), "A ⊉ A^fin at {n}");
    }
}

#[test]
fn less_fin_agrees_with_integer_order() {
    let less = build_less_fin();
    for f in fixtures() {
        for m in 0..=40u64 {
            for n in 0..=40u64 {
                let w = triple(&f, &rep(&f, m), &rep(&f, n));
                assert_eq!(acc(&less, &w), m < n, "{m} vs {n}");
            }
        }
    }
}

#[test]
fn less_real_agrees_with_exact_beta_sums() {
    let less = build_less_real();
    for f in fixtures() {
        for m in 0..=40u64 {
            for n in 0..=40u64 {
                let xm = f.oracle.beta_sum(&f.oracle.greedy_rep(m).unwrap()).unwrap();
                let xn = f.oracle.beta_sum(&f.oracle.greedy_rep(n).unwrap()).unwrap();
                let w = triple(&f, &rep(&f, m), &rep(&f, n));
                let expect = (&xm - &xn).sign() == Ordering::Less;
                assert_eq!(acc(&less, &w), expect, "O(rep {m}) < O(rep {n})");
            }
        }
    }
}

#[test]
fn constants_zero_and_one() {
    let zero = build_zero();
    let one = build_one();
    for f in fixtures() {
        assert!(acc(&zero, &pair(&f, &rep(&f, 0), 0)));
        assert!(acc(&zero, &pair(&f, &rep(&f, 0), 3)));
        assert!(!acc(&zero, &pair(&f, &rep(&f, 1), 0)));
        assert!(acc(&one, &pair(&f, &rep(&f, 1), 0)), "rep(1) rejected");
        assert!(acc(&one, &pair(&f, &rep(&f, 1), 2)));
        assert!(!acc(&one, &pair(&f, &rep(&f, 0), 0)));
        assert!(!acc(&one, &pair(&f, &rep(&f, 2), 0)));
    }
}

#[test]
fn successor_steps_by_one() {
    let limits = Limits::default();
    let succ = build_successor(&limits).expect("complement fits");
    for f in fixtures() {
        for n in 0..=30u64 {
            assert!(
                acc(&succ, &triple(&f, &rep(&f, n), &rep(&f, n + 1))),
                "succ({n})"
            );
            assert!(!acc(&succ, &triple(&f, &rep(&f, n), &rep(&f, n + 2))));
            assert!(!acc(&succ, &triple(&f, &rep(&f, n + 1), &rep(&f, n))));
        }
    }
}

#[test]
fn min_real_is_the_left_endpoint() {
    let min = build_min_real();
    // minimizing digit word: 0 at odd, full term at even positions — value −α
    let cases: Vec<(Fixture, BlockSeq)> = vec![
        (fixtures().remove(0), BlockSeq::new(&[], &[0, 1])),
        (fixtures().remove(1), BlockSeq::new(&[], &[0, 2])),
        (fixtures().remove(2), BlockSeq::new(&[], &[0, 2, 0, 1, 0, 3])),
    ];
    for (f, m) in cases {
        assert!(acc(&min, &pair(&f, &m, 0)), "min word rejected");
        assert!(!acc(&min, &pair(&f, &rep(&f, 0), 0)), "zero is not least");
        assert!(!acc(&min, &pair(&f, &rep(&f, 1), 0)));
    }
}

#[test]
fn closure_of_a_point_is_the_point() {
    let limits = Limits::default();
    let zero = build_zero();
    let cl = topological_closure(&zero, &limits).expect("closure");
    assert!(
        included(&cl, &zero, &limits).expect("compare"),
        "closure grew a singleton"
    );
    for f in fixtures() {
        assert!(acc(&cl, &pair(&f, &rep(&f, 0), 0)), "lost the point");
        assert!(acc(&cl, &pair(&f, &rep(&f, 0), 2)));
    }
}

#[test]
fn closure_of_open_ray_gains_its_endpoint() {
    let limits = Limits::default();
    // X = {x : 0 ≺ x}, as a caller would assemble it: ∃z. z = 0 ∧ z ≺ x
    let less = build_less_real();
    let zero3 = buchi::ops::rearrange(&build_zero(), &[0, 1], 3).expect("tracks");
    let prod = buchi::ops::intersect_all(&[zero3, less]).expect("arity 3");
    let x = buchi::ops::reduce(
        &buchi::ops::project(&prod, 1).expect("drop witness"),
        &buchi::ops::ReduceOptions::default(),
    );
    let cl = topological_closure(&x, &limits).expect("closure");
    let golden = &fixtures()[0];
    // 0 is the boundary point; the left end −α and negative points stay out
    assert!(acc(&cl, &pair(golden, &rep(golden, 0), 0)), "missing boundary");
    assert!(acc(&cl, &pair(golden, &rep(golden, 1), 0)), "lost interior");
    assert!(!acc(&cl, &pair(golden, &BlockSeq::new(&[], &[0, 1]), 0)));
    assert!(!acc(&cl, &pair(golden, &rep(golden, 3), 0)), "O(rep 3) < 0");
}

#[test]
fn word_eq_is_letterwise() {
    let eq = build_word_eq();
    let f = &fixtures()[2];
    let w = rep(f, 9);
    assert!(acc(&eq, &triple(f, &w, &w)));
    assert!(!acc(&eq, &triple(f, &w, &rep(f, 10))));
}
