//! Exact arithmetic in the field `Q(sqrt2, sqrt3)`.
//!
//! Cosine Gram matrices of diagrams with labels in `{2, 3, 4, 6, inf}` have
//! all entries of the form `a + b*sqrt2 + c*sqrt3 + d*sqrt6` with rational
//! coefficients, so determinants and rank computations on them can be done
//! without floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Element `a + b*sqrt2 + c*sqrt3 + d*sqrt6` of `Q(sqrt2, sqrt3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Surd {
    pub fn zero() -> Self {
        Surd::from_integer(0)
    }

    pub fn from_integer(n: i64) -> Self {
        Surd {
            a: rat(n, 1),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Surd {
            a: rat(n, d),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// `(n/d) * sqrt2`.
    pub fn sqrt2_over(n: i64, d: i64) -> Self {
        Surd {
            a: BigRational::zero(),
            b: rat(n, d),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// `(n/d) * sqrt3`.
    pub fn sqrt3_over(n: i64, d: i64) -> Self {
        Surd {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: rat(n, d),
            d: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the element lies in `Q` (no radical part).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn add(&self, o: &Surd) -> Surd {
        Surd {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        Surd {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }

    pub fn neg(&self) -> Surd {
        Surd {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        let two = rat(2, 1);
        let three = rat(3, 1);
        let six = rat(6, 1);
        Surd {
            a: &self.a * &o.a
                + &two * (&self.b * &o.b)
                + &three * (&self.c * &o.c)
                + &six * (&self.d * &o.d),
            b: &self.a * &o.b + &self.b * &o.a + &three * (&self.c * &o.d + &self.d * &o.c),
            c: &self.a * &o.c + &self.c * &o.a + &two * (&self.b * &o.d + &self.d * &o.b),
            d: &self.a * &o.d + &self.d * &o.a + &self.b * &o.c + &self.c * &o.b,
        }
    }

    /// Galois conjugate sending `sqrt2` to `-sqrt2`.
    fn conj2(&self) -> Surd {
        Surd {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: -&self.d,
        }
    }

    /// Galois conjugate sending `sqrt3` to `-sqrt3`.
    fn conj3(&self) -> Surd {
        Surd {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inverse(&self) -> Option<Surd> {
        if self.is_zero() {
            return None;
        }
        // Product of the three nontrivial conjugates; x * conj = norm in Q.
        let conj_prod = self.conj2().mul(&self.conj3()).mul(&self.conj2().conj3());
        let norm = self.mul(&conj_prod);
        debug_assert!(norm.is_rational(), "field norm must be rational");
        let inv_norm = BigRational::new(
            norm.a.denom().clone() * if norm.a.numer().is_negative() { -1 } else { 1 },
            norm.a.numer().abs(),
        );
        let scale = Surd {
            a: inv_norm,
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        };
        Some(conj_prod.mul(&scale))
    }

    pub fn to_f64(&self) -> f64 {
        fn f(r: &BigRational) -> f64 {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        }
        f(&self.a) + f(&self.b) * 2f64.sqrt() + f(&self.c) * 3f64.sqrt() + f(&self.d) * 6f64.sqrt()
    }
}
