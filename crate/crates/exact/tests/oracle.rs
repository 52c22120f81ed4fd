//! Frozen ground-truth values for the three standing test slopes:
//! [0; 1,1,1,...], [0; 2,2,2,...], and [0; (1,2,3) repeating].

use exact::{ExactError, ExactSlope, Surd};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

fn golden() -> ExactSlope {
    ExactSlope::periodic(&[], &[1])
}

fn sqrt2m1() -> ExactSlope {
    ExactSlope::periodic(&[], &[2])
}

fn period123() -> ExactSlope {
    ExactSlope::periodic(&[], &[1, 2, 3])
}

fn slopes() -> Vec<ExactSlope> {
    vec![golden(), sqrt2m1(), period123()]
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn convergents_follow_the_recurrence() {
    let g = golden().convergents(7).unwrap();
    let q: Vec<i64> = g.iter().map(|(_, q)| i64::try_from(q).unwrap()).collect();
    let p: Vec<i64> = g.iter().map(|(p, _)| i64::try_from(p).unwrap()).collect();
    assert_eq!(q, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    assert_eq!(p, vec![0, 1, 1, 2, 3, 5, 8, 13]);

    let s = sqrt2m1().convergents(5).unwrap();
    let q: Vec<i64> = s.iter().map(|(_, q)| i64::try_from(q).unwrap()).collect();
    let p: Vec<i64> = s.iter().map(|(p, _)| i64::try_from(p).unwrap()).collect();
    assert_eq!(q, vec![1, 2, 5, 12, 29, 70]);
    assert_eq!(p, vec![0, 1, 2, 5, 12, 29]);

    for slope in slopes() {
        for (p, q) in slope.convergents(20).unwrap() {
            assert!(num_integer::gcd(p, q).is_one());
        }
    }
}

#[test]
fn alpha_surds_are_the_expected_quadratics() {
    let a = golden().alpha().unwrap();
    assert_eq!(a.rational_part(), &rat(-1, 2));
    assert_eq!(a.surd_part(), &rat(1, 2));
    assert_eq!(a.radicand(), &BigInt::from(5));

    let b = sqrt2m1().alpha().unwrap();
    assert_eq!(b.rational_part(), &rat(-1, 1));
    assert_eq!(b.surd_part(), &rat(1, 1));
    assert_eq!(b.radicand(), &BigInt::from(2));

    let c = period123().alpha().unwrap();
    assert_eq!(c.rational_part(), &rat(-4, 3));
    assert_eq!(c.surd_part(), &rat(1, 3));
    assert_eq!(c.radicand(), &BigInt::from(37));

    // minimal polynomials: α²+α−1 = 0, α²+2α−1 = 0, 3α²+8α−7 = 0
    let zero = |x: Surd| assert_eq!(x.sign(), Ordering::Equal);
    zero(&(&a * &a) + &(&a - &Surd::from_int(1)));
    zero(&(&b * &b) + &(&b.scale(&rat(2, 1)) - &Surd::from_int(1)));
    zero(&(&c * &c).scale(&rat(3, 1)) + &(&c.scale(&rat(8, 1)) - &Surd::from_int(7)));
}

#[test]
fn alpha_lies_between_consecutive_convergents() {
    for slope in slopes() {
        let alpha = slope.alpha().unwrap();
        let convs = slope.convergents(12).unwrap();
        for w in convs.windows(2) {
            let (p0, q0) = &w[0];
            let (p1, q1) = &w[1];
            let lo = Surd::from_rational(BigRational::new(p0.clone(), q0.clone()));
            let hi = Surd::from_rational(BigRational::new(p1.clone(), q1.clone()));
            let between = (&alpha - &lo).sign() != (&alpha - &hi).sign();
            assert!(between, "alpha must lie between consecutive convergents");
        }
    }
}

#[test]
fn greedy_rep_examples() {
    assert_eq!(golden().greedy_rep(0).unwrap(), Vec::<u64>::new());
    assert_eq!(golden().greedy_rep(1).unwrap(), vec![0, 1]);
    assert_eq!(sqrt2m1().greedy_rep(9).unwrap(), vec![0, 2, 1]);
    // Zeckendorf flavor for the golden slope: 11 = 8 + 3 = q5 + q3
    assert_eq!(golden().greedy_rep(11).unwrap(), vec![0, 0, 0, 1, 0, 1]);
}

#[test]
fn greedy_rep_roundtrip_and_digit_constraints() {
    for slope in slopes() {
        for n in 0..=10_000u64 {
            let digits = slope.greedy_rep(n).unwrap();
            let convs = slope.convergents(digits.len()).unwrap();
            let sum: BigInt = digits
                .iter()
                .enumerate()
                .map(|(k, &b)| BigInt::from(b) * &convs[k].1)
                .sum();
            assert_eq!(sum, BigInt::from(n), "digit value mismatch at {n}");
            for (k, &b) in digits.iter().enumerate() {
                let a = slope.term(k + 1).unwrap();
                if k == 0 {
                    assert!(b < a, "b1 must stay below a1 (n={n})");
                } else {
                    assert!(b <= a, "digit above its term (n={n})");
                    if b == a {
                        assert_eq!(digits[k - 1], 0, "carry constraint at {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn distinct_n_have_distinct_digit_words() {
    for slope in slopes() {
        let mut seen = std::collections::HashSet::new();
        for n in 0..=500u64 {
            let mut digits = slope.greedy_rep(n).unwrap();
            while digits.last() == Some(&0) {
                digits.pop();
            }
            assert!(seen.insert(digits), "duplicate representation for {n}");
        }
    }
}

#[test]
fn beta_signs_alternate_and_magnitudes_decrease() {
    let g = golden();
    let beta0 = g.beta(0).unwrap();
    assert_eq!(beta0, g.alpha().unwrap());
    let beta1 = g.beta(1).unwrap();
    assert_eq!(beta1.sign(), Ordering::Less);
    assert_eq!(
        &beta1 - &(&g.alpha().unwrap() - &Surd::from_int(1)),
        Surd::zero()
    );

    for slope in slopes() {
        let mut prev: Option<Surd> = None;
        for k in 0..=10 {
            let beta = slope.beta(k).unwrap();
            let expect = if k % 2 == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            assert_eq!(beta.sign(), expect, "beta_{k} sign");
            let mag = if k % 2 == 0 { beta.clone() } else { -&beta };
            if let Some(p) = prev {
                assert_eq!((&p - &mag).sign(), Ordering::Greater, "|beta| must shrink");
            }
            prev = Some(mag);
        }
    }
}

/// The value of the digit word of n recovers α·n shifted into [−α, 1−α)
/// by an integer.
#[test]
fn beta_sum_bridges_integer_and_real_representations() {
    for slope in slopes() {
        let alpha = slope.alpha().unwrap();
        for n in 0..=200u64 {
            let digits = slope.greedy_rep(n).unwrap();
            let value = slope.beta_sum(&digits).unwrap();
            let diff = &alpha.scale(&rat(n as i64, 1)) - &value;
            assert!(diff.is_integer(), "alpha*n - value must be integral (n={n})");
            let above = &value - &(-&alpha);
            let below = &(&Surd::from_int(1) - &alpha) - &value;
            assert_ne!(above.sign(), Ordering::Less, "value below -alpha (n={n})");
            assert_eq!(below.sign(), Ordering::Greater, "value not below 1-alpha (n={n})");
        }
    }
}

#[test]
fn sturmian_letters_match_known_prefixes() {
    let g = golden();
    let prefix: Vec<u8> = (1..=5).map(|n| g.sturmian_letter(n).unwrap()).collect();
    assert_eq!(prefix, vec![1, 0, 1, 1, 0]);

    // [0; 2,1,1,1,...] generates the Fibonacci word over {0,1}
    let fib_slope = ExactSlope::periodic(&[2], &[1]);
    let prefix: Vec<u8> = (1..=13).map(|n| fib_slope.sturmian_letter(n).unwrap()).collect();
    assert_eq!(prefix, vec![0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1]);
}

#[test]
fn sturmian_letters_are_balanced() {
    for slope in slopes() {
        let letters: Vec<u8> = (1..=150).map(|n| slope.sturmian_letter(n).unwrap()).collect();
        for window in 1..=50usize {
            let counts: Vec<usize> = letters
                .windows(window)
                .map(|w| w.iter().filter(|&&c| c == 1).count())
                .collect();
            let (lo, hi) = (counts.iter().min().unwrap(), counts.iter().max().unwrap());
            assert!(hi - lo <= 1, "window {window} unbalanced");
        }
    }
}

#[test]
fn compare_reals_follows_the_alternating_rule() {
    let s = sqrt2m1();
    // differ at position 0 (even): smaller digit sorts lower
    assert_eq!(s.compare_reals(&[0, 1], &[1, 1]), Some(Ordering::Less));
    // differ at position 1 (odd): larger digit sorts lower
    assert_eq!(s.compare_reals(&[1, 2, 0], &[1, 1, 0]), Some(Ordering::Less));
    // agreement on the overlap leaves the order open
    assert_eq!(s.compare_reals(&[1, 1], &[1, 1, 2]), None);
}

#[test]
fn compare_reals_agrees_with_exact_beta_sums() {
    for slope in slopes() {
        let reps: Vec<Vec<u64>> = (0..=60).map(|n| slope.greedy_rep(n).unwrap()).collect();
        let len = reps.iter().map(Vec::len).max().unwrap();
        for m in 0..reps.len() {
            for n in 0..reps.len() {
                if m == n {
                    continue;
                }
                let mut x = reps[m].clone();
                let mut y = reps[n].clone();
                x.resize(len, 0);
                y.resize(len, 0);
                let by_rule = slope.compare_reals(&x, &y).expect("distinct digits");
                let vx = slope.beta_sum(&x).unwrap();
                let vy = slope.beta_sum(&y).unwrap();
                assert_eq!(by_rule, (&vx - &vy).sign(), "m={m} n={n}");
            }
        }
    }
}

#[test]
fn prefix_only_slopes_refuse_uncertainty() {
    let s = ExactSlope::prefix_only(&[1, 1]);
    assert_eq!(s.alpha(), Err(ExactError::NonPeriodic));
    // α ∈ (1/2, 1): ⌊3α⌋ could be 1 or 2 — must refuse, never guess
    match s.floor_alpha_times(3) {
        Err(ExactError::InsufficientPrecision { .. }) => {}
        other => panic!("expected refusal, got {other:?}"),
    }
    // but n=1 is certain: α < 1 pins ⌊α⌋ = 0
    assert_eq!(s.floor_alpha_times(1).unwrap(), BigInt::zero());
    // and greedy representations beyond the known terms are refused
    let tiny = ExactSlope::prefix_only(&[1, 1]);
    assert!(matches!(
        tiny.greedy_rep(100),
        Err(ExactError::TermsExhausted { .. })
    ));
}

#[test]
fn terms_index_through_prefix_and_period() {
    let s = ExactSlope::periodic(&[2], &[1, 3]);
    let terms: Vec<u64> = (1..=6).map(|i| s.term(i).unwrap()).collect();
    assert_eq!(terms, vec![2, 1, 3, 1, 3, 1]);
    assert_eq!(ExactSlope::prefix_only(&[7]).term(2), None);
}
