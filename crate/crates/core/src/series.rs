//! Truncated exact power series and the named generating functions of the
//! parking-function world, each cross-checkable against enumeration.

use num::{One, Zero};
use thiserror::Error;

use crate::coeffs::{rat, Rational};
use crate::words::{binomial, parking_count};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("inverse requires a unit constant term")]
    NonUnitConstant,
    #[error("square root requires constant term 1")]
    BadSqrtConstant,
    #[error("unknown series {0:?}")]
    UnknownName(String),
}

/// Default truncation order: coefficients of `t^0 .. t^11` are kept.
pub const DEFAULT_ORDER: usize = 12;

/// A power series truncated at a fixed order; arithmetic stays closed at
/// the smaller of the two operand orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The monomial `t`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..order).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..order).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order];
        for i in 0..order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.coeff(0).is_zero() {
            return Err(SeriesError::NonUnitConstant);
        }
        let order = self.order();
        let mut inv = vec![Rational::zero(); order];
        let c0 = self.coeff(0);
        inv[0] = Rational::one() / &c0;
        for n in 1..order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc / &c0;
        }
        Ok(PowerSeries { coeffs: inv })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Square root with constant term 1, by the coefficient recurrence
    /// `r_n = (a_n - Σ_{k=1..n-1} r_k r_{n-k}) / 2`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0).is_one() {
            return Err(SeriesError::BadSqrtConstant);
        }
        let order = self.order();
        let mut r = vec![Rational::zero(); order];
        r[0] = Rational::one();
        for n in 1..order {
            let mut acc = self.coeff(n);
            for k in 1..n {
                acc -= &r[k] * &r[n - k];
            }
            r[n] = acc / rat(2);
        }
        Ok(PowerSeries { coeffs: r })
    }

    /// Division by `t^k`; the dropped low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.coeffs[..k].iter().all(Rational::is_zero));
        let mut coeffs: Vec<Rational> = self.coeffs[k..].to_vec();
        coeffs.extend(std::iter::repeat_n(Rational::zero(), k));
        PowerSeries { coeffs }
    }

    /// Integer coefficients `[t^lo .. t^hi]` for table output; panics when a
    /// coefficient is not an integer.
    pub fn integer_coeffs(&self, lo: usize, hi: usize) -> Vec<num::BigInt> {
        (lo..=hi.min(self.order().saturating_sub(1)))
            .map(|n| {
                let c = self.coeff(n);
                assert!(c.is_integer(), "coefficient of t^{n} is {c}");
                c.to_integer()
            })
            .collect()
    }
}

/// `(1 - t^n)^c` for a possibly huge integer exponent, by the binomial
/// series `Σ_j (-1)^j C(c, j) t^(nj)`.
fn binomial_power(n: usize, c: &num::BigInt, order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    let mut coeff = Rational::one();
    let mut j = 0usize;
    while n * j < order {
        let sign = if j.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        s.coeffs[n * j] = &coeff * sign;
        // C(c, j+1) = C(c, j) * (c - j) / (j + 1)
        let num = Rational::from_integer(c - num::BigInt::from(j));
        coeff = coeff * num / rat(j as i64 + 1);
        j += 1;
    }
    s
}

/// Solve `f = rhs(f)` by iteration from 0; each pass fixes at least one more
/// coefficient, so `order` passes suffice for contracting equations.
fn fixed_point(order: usize, rhs: impl Fn(&PowerSeries) -> PowerSeries) -> PowerSeries {
    let mut f = PowerSeries::zero(order);
    for _ in 0..=order {
        f = rhs(&f);
    }
    f
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Named {
    /// `PF(t) = 1 + Σ (n+1)^(n-1) t^n`, dimensions of the big algebra.
    ParkingFunctions,
    /// `(PF - 1)/PF^2`, totally primitive elements.
    TotallyPrimitive,
    /// `1 - 1/PF`, connected parking functions / free generators.
    Connected,
    /// `1 - Π (1 - t^n)^(c_n)`, generators of the primitive Lie algebra.
    LieGenerators,
    /// Little Schröder numbers, `F = 1 + t(2F^2 - F)`.
    LittleSchroder,
    /// Large Schröder numbers, `1 - 1/S`.
    LargeSchroder,
    /// Catalan numbers `C = 1 + tC^2`.
    Catalan,
    /// Shifted Catalan generators `1 - 1/C`.
    CatalanGenerators,
    /// `(PF - 1)/(2 PF^2 - PF)`, trialgebra generator count series.
    TrialgebraGenerators,
    /// Lyndon words with balanced two-letter content; primitive Lie algebra
    /// dimensions of the Catalan algebra (A022553).
    CatalanPrimitive,
}

impl Named {
    pub fn parse(name: &str) -> Result<Self, SeriesError> {
        Ok(match name {
            "pf" | "PF" => Named::ParkingFunctions,
            "tp" | "TP" => Named::TotallyPrimitive,
            "connected" => Named::Connected,
            "lie-generators" | "lie_generators" => Named::LieGenerators,
            "schroder" | "little-schroder" => Named::LittleSchroder,
            "large-schroder" => Named::LargeSchroder,
            "catalan" => Named::Catalan,
            "catalan-generators" => Named::CatalanGenerators,
            "trialgebra-generators" | "2gens" => Named::TrialgebraGenerators,
            "catalan-primitive" => Named::CatalanPrimitive,
            other => return Err(SeriesError::UnknownName(other.to_string())),
        })
    }

    pub fn all() -> &'static [(&'static str, Named)] {
        &[
            ("pf", Named::ParkingFunctions),
            ("tp", Named::TotallyPrimitive),
            ("connected", Named::Connected),
            ("lie-generators", Named::LieGenerators),
            ("schroder", Named::LittleSchroder),
            ("large-schroder", Named::LargeSchroder),
            ("catalan", Named::Catalan),
            ("catalan-generators", Named::CatalanGenerators),
            ("trialgebra-generators", Named::TrialgebraGenerators),
            ("catalan-primitive", Named::CatalanPrimitive),
        ]
    }
}

pub fn named_series(which: Named, order: usize) -> PowerSeries {
    match which {
        Named::ParkingFunctions => PowerSeries::from_coeffs(
            (0..order)
                .map(|n| {
                    if n == 0 {
                        Rational::one()
                    } else {
                        Rational::from_integer(parking_count(n as u64).into())
                    }
                })
                .collect(),
        ),
        Named::TotallyPrimitive => {
            let pf = named_series(Named::ParkingFunctions, order);
            let num = pf.sub(&PowerSeries::one(order));
            num.div(&pf.mul(&pf)).expect("PF is a unit")
        }
        Named::Connected => {
            let pf = named_series(Named::ParkingFunctions, order);
            PowerSeries::one(order).sub(&pf.inverse().expect("PF is a unit"))
        }
        Named::LieGenerators => {
            let c = named_series(Named::Connected, order);
            let mut prod = PowerSeries::one(order);
            for n in 1..order {
                let cn = c.coeff(n);
                assert!(cn.is_integer());
                prod = prod.mul(&binomial_power(n, &cn.to_integer(), order));
            }
            PowerSeries::one(order).sub(&prod)
        }
        Named::LittleSchroder => {
            // F - 1 = t (2F^2 - F)
            fixed_point(order, |f| {
                let t = PowerSeries::t(order);
                let rhs = f.mul(f).scale(&rat(2)).sub(f);
                PowerSeries::one(order).add(&t.mul(&rhs))
            })
        }
        Named::LargeSchroder => {
            let s = named_series(Named::LittleSchroder, order);
            PowerSeries::one(order).sub(&s.inverse().expect("S is a unit"))
        }
        Named::Catalan => fixed_point(order, |c| {
            let t = PowerSeries::t(order);
            PowerSeries::one(order).add(&t.mul(&c.mul(c)))
        }),
        Named::CatalanGenerators => {
            let c = named_series(Named::Catalan, order);
            PowerSeries::one(order).sub(&c.inverse().expect("C is a unit"))
        }
        Named::TrialgebraGenerators => {
            let pf = named_series(Named::ParkingFunctions, order);
            let num = pf.sub(&PowerSeries::one(order));
            let den = pf.mul(&pf).scale(&rat(2)).sub(&pf);
            num.div(&den).expect("2PF^2 - PF is a unit")
        }
        Named::CatalanPrimitive => PowerSeries::from_coeffs(
            (0..order)
                .map(|n| {
                    if n == 0 {
                        return Rational::zero();
                    }
                    let n = n as u64;
                    let mut acc: i128 = 0;
                    for d in 1..=n {
                        if n.is_multiple_of(d) {
                            acc += mobius(d) as i128 * binomial(2 * n / d, n / d) as i128;
                        }
                    }
                    let val = acc / (2 * n as i128);
                    assert_eq!(val * 2 * n as i128, acc, "necklace count must divide");
                    Rational::from_integer(val.into())
                })
                .collect(),
        ),
    }
}

/// Narayana polynomial coefficients of `c_n(q) = Σ_k N(n,k) q^(k-1)`,
/// `N(n,k) = C(n,k) C(n,k-1) / n`.
pub fn narayana_coeffs(n: usize) -> Vec<u128> {
    if n == 0 {
        return vec![1];
    }
    (1..=n)
        .map(|k| binomial(n as u64, k as u64) * binomial(n as u64, k as u64 - 1) / n as u128)
        .collect()
}

/// Evaluate `c_n(q)` at an integer point.
pub fn narayana_at(n: usize, q: u128) -> u128 {
    narayana_coeffs(n)
        .iter()
        .enumerate()
        .map(|(i, &c)| c * q.pow(i as u32))
        .sum()
}
