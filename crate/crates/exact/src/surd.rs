//! Quadratic surds r + s·√d with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// r + s·√d. All surds derived from one slope share the same radicand, so
/// arithmetic never needs to mix distinct d (asserted).
#[derive(Clone, PartialEq, Eq)]
pub struct Surd {
    r: BigRational,
    s: BigRational,
    d: BigInt,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Largest square factor out: 12 -> (2, 3) meaning √12 = 2√3. Trial
/// division; radicands come from short continued-fraction periods and
/// are small in practice.
fn extract_square(d: &BigInt) -> (BigInt, BigInt) {
    let mut outside = BigInt::one();
    let mut inside = d.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= inside {
        let sq = &f * &f;
        while (&inside % &sq).is_zero() {
            inside /= &sq;
            outside *= &f;
        }
        f += 1;
    }
    (outside, inside)
}

impl Surd {
    pub fn new(r: BigRational, s: BigRational, d: BigInt) -> Surd {
        assert!(!d.is_negative(), "radicand must be non-negative");
        let (out, inside) = extract_square(&d);
        let s = s * BigRational::from_integer(out);
        if s.is_zero() || inside.is_one() || inside.is_zero() {
            // rational: fold the root into r and keep d = 0 as the marker
            let r = if inside.is_one() { r + s } else { r };
            return Surd {
                r,
                s: BigRational::zero(),
                d: BigInt::zero(),
            };
        }
        Surd { r, s, d: inside }
    }

    pub fn from_rational(r: BigRational) -> Surd {
        Surd {
            r,
            s: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Surd {
        Surd::from_rational(big(n))
    }

    pub fn zero() -> Surd {
        Surd::from_int(0)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.r
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.s
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Some(q) when the value is exactly the rational q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.r)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.r.is_integer()
    }

    fn common_d(&self, other: &Surd) -> BigInt {
        if self.s.is_zero() {
            other.d.clone()
        } else if other.s.is_zero() {
            self.d.clone()
        } else {
            assert_eq!(self.d, other.d, "mixed radicands");
            self.d.clone()
        }
    }

    pub fn scale(&self, by: &BigRational) -> Surd {
        Surd {
            r: &self.r * by,
            s: &self.s * by,
            d: self.d.clone(),
        }
        .normalized()
    }

    pub fn recip(&self) -> Surd {
        // 1/(r + s√d) = (r − s√d)/(r² − s²d)
        let denom = &self.r * &self.r - &self.s * &self.s * BigRational::from_integer(self.d.clone());
        assert!(!denom.is_zero(), "division by zero surd");
        Surd {
            r: &self.r / &denom,
            s: -&self.s / &denom,
            d: self.d.clone(),
        }
        .normalized()
    }

    fn normalized(self) -> Surd {
        if self.s.is_zero() {
            Surd {
                r: self.r,
                s: BigRational::zero(),
                d: BigInt::zero(),
            }
        } else {
            self
        }
    }

    /// Exact sign, no floating point: split by coefficient signs, then
    /// compare r² with s²·d where one term is negative.
    pub fn sign(&self) -> Ordering {
        if self.s.is_zero() {
            return self.r.cmp(&BigRational::zero());
        }
        let rs = self.r.cmp(&BigRational::zero());
        let ss = self.s.cmp(&BigRational::zero());
        match (rs, ss) {
            (Ordering::Equal, s) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            _ => {
                let r2 = &self.r * &self.r;
                let s2d = &self.s * &self.s * BigRational::from_integer(self.d.clone());
                if rs == Ordering::Greater {
                    // positive rational vs negative root part
                    r2.cmp(&s2d)
                } else {
                    s2d.cmp(&r2)
                }
            }
        }
    }

    /// ⌊value⌋: start from a fixed-point estimate of s·√d and walk to the
    /// unique integer m with m <= x < m+1 (a step or two at most).
    pub fn floor(&self) -> BigInt {
        let estimate = if self.s.is_zero() {
            self.r.clone()
        } else {
            let root = (&self.d << 64u32).sqrt(); // ≈ √d · 2³²
            &self.r + &self.s * BigRational::new(root, BigInt::one() << 32u32)
        };
        let mut m = estimate.floor().to_integer();
        loop {
            let lower = self - &Surd::from_rational(BigRational::from_integer(m.clone()));
            if lower.sign() == Ordering::Less {
                m -= 1;
                continue;
            }
            let upper = &Surd::from_rational(BigRational::from_integer(&m + 1)) - self;
            if upper.sign() != Ordering::Greater {
                m += 1;
                continue;
            }
            return m;
        }
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, other: &Surd) -> Surd {
        let d = self.common_d(other);
        Surd {
            r: &self.r + &other.r,
            s: &self.s + &other.s,
            d,
        }
        .normalized()
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, other: &Surd) -> Surd {
        self + &(-other)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            r: -&self.r,
            s: -&self.s,
            d: self.d.clone(),
        }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, other: &Surd) -> Surd {
        let d = self.common_d(other);
        let dr = BigRational::from_integer(d.clone());
        Surd {
            r: &self.r * &other.r + &self.s * &other.s * dr,
            s: &self.r * &other.s + &self.s * &other.r,
            d,
        }
        .normalized()
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Surd) -> Option<Ordering> {
        Some((self - other).sign())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            write!(f, "{}", self.r)
        } else {
            write!(f, "{} + {}*sqrt({})", self.r, self.s, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(d: i64) -> Surd {
        Surd::new(big(0), big(1), BigInt::from(d))
    }

    #[test]
    fn square_factors_come_out() {
        let s = Surd::new(big(0), big(1), BigInt::from(8));
        assert_eq!(s.radicand(), &BigInt::from(2));
        assert_eq!(s.surd_part(), &big(2));
        let r = Surd::new(big(3), big(5), BigInt::from(9));
        assert!(r.is_rational());
        assert_eq!(r.as_rational().unwrap(), &big(18));
    }

    #[test]
    fn signs_are_exact() {
        // √2 − 1.41421356… > 0 and √2 − 1.41421357… < 0 style checks
        let x = &sqrt(2) - &Surd::from_rational(BigRational::new(
            BigInt::from(141_421_356),
            BigInt::from(100_000_000),
        ));
        assert_eq!(x.sign(), Ordering::Greater);
        let y = &sqrt(2) - &Surd::from_rational(BigRational::new(
            BigInt::from(141_421_357),
            BigInt::from(100_000_000),
        ));
        assert_eq!(y.sign(), Ordering::Less);
        assert_eq!(Surd::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn arithmetic_identities() {
        let phi = Surd::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigInt::from(5),
        );
        // φ² = φ + 1
        let sq = &phi * &phi;
        let alt = &phi + &Surd::from_int(1);
        assert_eq!(sq, alt);
        // φ · 1/φ = 1
        let one = &phi * &phi.recip();
        assert_eq!(one, Surd::from_int(1));
    }

    #[test]
    fn floor_of_surds() {
        assert_eq!(sqrt(2).floor(), BigInt::from(1));
        assert_eq!((&sqrt(2) * &Surd::from_int(10)).floor(), BigInt::from(14));
        assert_eq!((-&sqrt(2)).floor(), BigInt::from(-2));
        assert_eq!(Surd::from_int(3).floor(), BigInt::from(3));
    }
}
