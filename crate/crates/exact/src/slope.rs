//! Continued fractions [0; a1, a2, ...] with big-integer convergents, the
//! greedy Ostrowski numeration they induce, and exact values of the
//! differences β_k = q_k·α − p_k for eventually periodic expansions.

use crate::surd::Surd;
use crate::ExactError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Depth at which interval refinement gives up rather than approximate.
pub const MAX_DEPTH: usize = 128;

#[derive(Clone, Debug)]
pub struct ExactSlope {
    prefix: Vec<u64>,
    period: Vec<u64>,
}

/// Verdict of a digit-prefix comparison: `None` when the prefixes agree on
/// their common length, so the order is not yet determined.
pub type PrefixOrdering = Option<Ordering>;

impl ExactSlope {
    pub fn periodic(prefix: &[u64], period: &[u64]) -> ExactSlope {
        assert!(!period.is_empty(), "period must be nonempty");
        let s = ExactSlope {
            prefix: prefix.to_vec(),
            period: period.to_vec(),
        };
        s.check_terms();
        s
    }

    /// Finitely many known terms; operations needing more report an error.
    pub fn prefix_only(terms: &[u64]) -> ExactSlope {
        let s = ExactSlope {
            prefix: terms.to_vec(),
            period: Vec::new(),
        };
        s.check_terms();
        s
    }

    fn check_terms(&self) {
        assert!(
            self.prefix.iter().chain(&self.period).all(|&a| a >= 1),
            "continued fraction terms must be positive"
        );
        assert!(
            !self.prefix.is_empty() || !self.period.is_empty(),
            "slope needs at least one term"
        );
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// a_i for i >= 1, or None past the known terms of a prefix-only slope.
    pub fn term(&self, i: usize) -> Option<u64> {
        assert!(i >= 1, "terms are 1-indexed");
        let idx = i - 1;
        if idx < self.prefix.len() {
            Some(self.prefix[idx])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(idx - self.prefix.len()) % self.period.len()])
        }
    }

    /// (p_k, q_k) for k = 0..=depth via the standard recurrence with seeds
    /// p₋₁=1, q₋₁=0, p₀=0, q₀=1 (a₀ = 0 for slopes in (0,1)).
    pub fn convergents(&self, depth: usize) -> Result<Vec<(BigInt, BigInt)>, ExactError> {
        let mut out = Vec::with_capacity(depth + 1);
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (BigInt::zero(), BigInt::one());
        out.push((p.clone(), q.clone()));
        for k in 1..=depth {
            let a = self.term(k).ok_or(ExactError::TermsExhausted {
                available: self.prefix.len(),
            })?;
            let p_next = BigInt::from(a) * &p + &p_prev;
            let q_next = BigInt::from(a) * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            out.push((p.clone(), q.clone()));
        }
        Ok(out)
    }

    /// Exact value as a quadratic surd; periodic slopes only.
    pub fn alpha(&self) -> Result<Surd, ExactError> {
        if !self.is_periodic() {
            return Err(ExactError::NonPeriodic);
        }
        // value y of the purely periodic tail [c1; c2, ..., cp, c1, ...]:
        // y = (m00·y + m01)/(m10·y + m11) for the product of term matrices,
        // so m10·y² + (m11 − m00)·y − m01 = 0.
        let (mut m00, mut m01, mut m10, mut m11) =
            (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
        for &c in &self.period {
            let c = BigInt::from(c);
            let (n00, n01) = (&m00 * &c + &m01, m00.clone());
            let (n10, n11) = (&m10 * &c + &m11, m10.clone());
            m00 = n00;
            m01 = n01;
            m10 = n10;
            m11 = n11;
        }
        let disc = (&m00 - &m11) * (&m00 - &m11) + BigInt::from(4) * &m10 * &m01;
        let two_m10 = BigRational::from_integer(BigInt::from(2) * &m10);
        let y = Surd::new(
            BigRational::from_integer(&m00 - &m11) / two_m10.clone(),
            BigRational::one() / two_m10,
            disc,
        );
        // feed the tail through the prefix and the leading a0 = 0:
        // α = (n00·y + n01)/(n10·y + n11)
        let (mut n00, mut n01, mut n10, mut n11) =
            (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
        for &a in &self.prefix {
            let a = BigInt::from(a);
            let (t00, t01) = (&n00 * &a + &n01, n00.clone());
            let (t10, t11) = (&n10 * &a + &n11, n10.clone());
            n00 = t00;
            n01 = t01;
            n10 = t10;
            n11 = t11;
        }
        let num = &y.scale(&BigRational::from_integer(n00))
            + &Surd::from_rational(BigRational::from_integer(n01));
        let den = &y.scale(&BigRational::from_integer(n10))
            + &Surd::from_rational(BigRational::from_integer(n11));
        Ok(&num * &den.recip())
    }

    /// β_k = q_k·α − p_k as an exact surd (periodic slopes only).
    pub fn beta(&self, k: usize) -> Result<Surd, ExactError> {
        let alpha = self.alpha()?;
        let (p, q) = self.convergents(k)?.pop().expect("depth k computed");
        Ok(&alpha.scale(&BigRational::from_integer(q))
            - &Surd::from_rational(BigRational::from_integer(p)))
    }

    /// Σ digits[k] · β_k — the value a digit word denotes in I_α.
    pub fn beta_sum(&self, digits: &[u64]) -> Result<Surd, ExactError> {
        let alpha = self.alpha()?;
        let convs = self.convergents(digits.len())?;
        let mut acc = Surd::zero();
        for (k, &b) in digits.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let (p, q) = &convs[k];
            let beta = &alpha.scale(&BigRational::from_integer(q.clone()))
                - &Surd::from_rational(BigRational::from_integer(p.clone()));
            acc = &acc + &beta.scale(&BigRational::from_integer(BigInt::from(b)));
        }
        Ok(acc)
    }

    /// Greedy Ostrowski digits (b1, b2, ...) with Σ b_{k+1}·q_k = n.
    /// Ties among equal denominators resolve to the larger index, which is
    /// what makes b1 < a1 and the carry constraints come out automatically.
    pub fn greedy_rep(&self, n: u64) -> Result<Vec<u64>, ExactError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let target = BigInt::from(n);
        let cap = if self.is_periodic() {
            usize::MAX
        } else {
            self.prefix.len()
        };
        let mut depth = 4.min(cap);
        let convs = loop {
            let convs = self.convergents(depth)?;
            if convs.last().expect("nonempty").1 > target {
                break convs;
            }
            if depth >= cap {
                return Err(ExactError::TermsExhausted { available: cap });
            }
            depth = depth.saturating_mul(2).min(cap);
        };
        let top = convs.iter().rposition(|(_, q)| q <= &target).expect("q0 = 1 <= n");
        let mut digits = vec![0u64; top + 1];
        let mut rem = target;
        for k in (0..=top).rev() {
            let q = &convs[k].1;
            let b = &rem / q;
            rem %= q;
            digits[k] = u64::try_from(&b).expect("digit bounded by a CF term");
        }
        debug_assert!(rem.is_zero());
        Ok(digits)
    }

    /// Letter n of the characteristic Sturmian word:
    /// ⌊α(n+1)⌋ − ⌊αn⌋, decided by nesting convergent intervals.
    pub fn sturmian_letter(&self, n: u64) -> Result<u8, ExactError> {
        assert!(n >= 1, "letters are indexed from 1");
        let lo = self.floor_alpha_times(n)?;
        let hi = self.floor_alpha_times(n + 1)?;
        Ok(u8::try_from(&hi - &lo).expect("letters are 0 or 1"))
    }

    /// ⌊α·m⌋ via the sandwich p_k/q_k, p_{k+1}/q_{k+1} around α; the depth
    /// doubles until both interval ends share a floor, never approximating.
    pub fn floor_alpha_times(&self, m: u64) -> Result<BigInt, ExactError> {
        let m = BigInt::from(m);
        let cap = if self.is_periodic() {
            MAX_DEPTH
        } else {
            self.prefix.len().min(MAX_DEPTH)
        };
        let mut depth = 4.min(cap);
        loop {
            let convs = self.convergents(depth)?;
            let (pk, qk) = &convs[convs.len() - 2];
            let (pk1, qk1) = &convs[convs.len() - 1];
            // α·m lies strictly between these two rationals
            let mut lo = BigRational::new(&m * pk, qk.clone());
            let mut hi = BigRational::new(&m * pk1, qk1.clone());
            if lo > hi {
                std::mem::swap(&mut lo, &mut hi);
            }
            let (flo, fhi) = (lo.floor(), hi.floor());
            if flo == fhi {
                return Ok(flo.to_integer());
            }
            // open interval: an integer upper end is never attained
            if hi.is_integer() && &fhi - &flo == BigRational::one() {
                return Ok(flo.to_integer());
            }
            if depth >= cap {
                return Err(ExactError::InsufficientPrecision { depth: cap });
            }
            depth = (depth * 2).min(cap);
        }
    }

    /// Order of the reals the two digit prefixes begin: first differing
    /// position k decides (smaller digit sorts lower when k is even and
    /// higher when k is odd, tracking the sign of β_k); agreement on the
    /// overlap leaves the order unknown.
    pub fn compare_reals(&self, x: &[u64], y: &[u64]) -> PrefixOrdering {
        for (k, (&bx, &by)) in x.iter().zip(y).enumerate() {
            if bx != by {
                let by_digit = bx.cmp(&by);
                return Some(if k % 2 == 0 { by_digit } else { by_digit.reverse() });
            }
        }
        None
    }
}
