//! Univariate polynomials over `Z` and their quotients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Polynomial `sum_i coeffs[i] t^i` with big-integer coefficients.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `1 - lambda t`.
    pub fn one_minus(lambda: i64) -> Self {
        Self::from_i64s(&[1, -lambda])
    }

    /// `t - root`.
    pub fn linear_monic(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, failing unless all divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                let (q, r) = x.div_rem(c);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::InexactDivision)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self::new(coeffs))
    }

    /// Quotient `self / divisor` in `Z[t]`; fails unless the division is exact.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// True when `divisor` divides `self` in `Z[t]`.
    pub fn divisible_by(&self, divisor: &IntPolynomial) -> bool {
        matches!(self.div_rem_integral(divisor), Ok((_, r)) if r.is_zero())
    }

    // Schoolbook long division; every quotient coefficient must be an integer.
    fn div_rem_integral(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        if self.degree() < divisor.degree() {
            return Ok((Self::zero(), self.clone()));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Quotient `num / den` whose power series at `t = 0` has integer
/// coefficients, because `den(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Builds `num / den`, cancelling common integer content and fixing the
    /// sign so that `den(0) = 1`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.content().gcd(&den.content());
        let (mut num, mut den) = (num.div_scalar_exact(&g)?, den.div_scalar_exact(&g)?);
        let c0 = den.constant_term();
        if c0 == -BigInt::one() {
            num = -&num;
            den = -&den;
        } else if !c0.is_one() {
            return Err(Error::BadDenominator(den.to_string()));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// Power-series coefficients of `t^0 ..= t^max_power`.
    pub fn series_expand(&self, max_power: usize) -> Vec<BigInt> {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(max_power + 1);
        for k in 0..=max_power {
            let mut c = self.num.coeff(k);
            for i in 1..den.len().min(k + 1) {
                c -= &den[i] * &out[k - i];
            }
            out.push(c);
        }
        out
    }

    /// Cancels every factor `1 - lambda t`, for `lambda` in `candidates`,
    /// that divides both numerator and denominator.
    pub fn reduce_linear(&self, candidates: impl IntoIterator<Item = i64>) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for lambda in candidates.into_iter().filter(|&l| l != 0) {
            let f = IntPolynomial::one_minus(lambda);
            while !num.is_zero() && den.degree() > 0 {
                match (num.exact_div(&f), den.exact_div(&f)) {
                    (Ok(n), Ok(d)) => {
                        num = n;
                        den = d;
                    }
                    _ => break,
                }
            }
        }
        if num.is_zero() {
            den = IntPolynomial::one();
        }
        RationalFunction::new(num, den).expect("cancelling 1 - lambda t keeps den(0) = 1")
    }

    /// Multiplicity of `1 - lambda t` in the denominator, for each candidate
    /// `lambda` that divides it. `lambda = 0` is reported with multiplicity 0.
    pub fn den_factors(&self, candidates: impl IntoIterator<Item = i64>) -> Vec<(i64, u32)> {
        let mut den = self.den.clone();
        let mut out = Vec::new();
        for lambda in candidates {
            if lambda == 0 {
                continue;
            }
            let f = IntPolynomial::one_minus(lambda);
            let mut mult = 0;
            while den.degree() > 0 {
                match den.exact_div(&f) {
                    Ok(q) => {
                        den = q;
                        mult += 1;
                    }
                    Err(_) => break,
                }
            }
            if mult > 0 {
                out.push((lambda, mult));
            }
        }
        out
    }

    /// Equality as functions, by cross multiplication.
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
