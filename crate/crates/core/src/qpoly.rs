//! Dense polynomials in one variable `q` with arbitrary-precision integer
//! coefficients, Gaussian coefficients, and symmetry/unimodality predicates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` over the integers.
///
/// Stored canonically: the last coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// First negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    /// First index `i` with `c_i != c_{d-i}`.
    pub fn symmetry_violation(&self) -> Option<usize> {
        let d = self.degree()?;
        (0..=d / 2).find(|&i| self.coeffs[i] != self.coeffs[d - i])
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    fn require_nonnegative(&self) -> Result<()> {
        match self.first_negative() {
            Some(index) => Err(Error::NonnegativityViolation { index }),
            None => Ok(()),
        }
    }

    /// Index at which a weakly-increasing-then-weakly-decreasing shape is
    /// broken (the position of the offending rise), or `None` if unimodal.
    pub fn unimodality_violation(&self) -> Result<Option<usize>> {
        self.require_nonnegative()?;
        let c = &self.coeffs;
        let mut descending = false;
        for i in 1..c.len() {
            if c[i] < c[i - 1] {
                descending = true;
            } else if descending && c[i] > c[i - 1] {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn is_unimodal(&self) -> Result<bool> {
        Ok(self.unimodality_violation()?.is_none())
    }

    /// Checks strict unimodality away from the two end pairs:
    /// `c_0 <= c_1`, `c_{d-1} >= c_d`, and `c_1, ..., c_{d-1}` rises strictly
    /// to its maximum and then falls strictly. The maximum may be attained by
    /// two adjacent coefficients (the unavoidable middle pair of a symmetric
    /// polynomial of odd degree) but not more.
    ///
    /// Returns the index of the first offending coefficient.
    pub fn strictness_violation(&self) -> Result<Option<usize>> {
        self.require_nonnegative()?;
        let d = match self.degree() {
            Some(d) if d >= 4 => d,
            _ => {
                return Err(domain(format!(
                    "strict unimodality needs degree >= 4, got {:?}",
                    self.degree()
                )))
            }
        };
        let c = &self.coeffs;
        if c[0] > c[1] {
            return Ok(Some(1));
        }
        let mut i = 1;
        while i + 1 < d && c[i + 1] > c[i] {
            i += 1;
        }
        // c[i] is the first maximum of the interior
        if i + 1 < d && c[i + 1] == c[i] {
            i += 1;
        }
        while i + 1 < d {
            if c[i + 1] >= c[i] {
                return Ok(Some(i + 1));
            }
            i += 1;
        }
        if c[d - 1] < c[d] {
            return Ok(Some(d));
        }
        Ok(None)
    }

    pub fn is_strictly_unimodal_except_ends(&self) -> Result<bool> {
        Ok(self.strictness_violation()?.is_none())
    }
}

/// The Gaussian coefficient `[a, b]_q`, via the q-Pascal recurrence
/// `[i, j] = [i-1, j-1] + q^j [i-1, j]`.
pub fn gauss(a: u32, b: u32) -> Result<QPoly> {
    if b > a {
        return Err(domain(format!("gauss({a}, {b}): bottom exceeds top")));
    }
    let b = b as usize;
    // row[j] = [i, j] for the current i, j <= min(i, b)
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for i in 1..=a as usize {
        let width = i.min(b);
        let mut next = Vec::with_capacity(width + 1);
        next.push(QPoly::one());
        for j in 1..=width {
            if j == i {
                next.push(QPoly::one());
            } else {
                next.push(&row[j - 1] + &row[j].shift(j));
            }
        }
        row = next;
    }
    Ok(row.swap_remove(b))
}

fn zip_with(p: &QPoly, r: &QPoly, f: impl Fn(&mut BigInt, &BigInt)) -> QPoly {
    let mut coeffs = p.coeffs.clone();
    if coeffs.len() < r.coeffs.len() {
        coeffs.resize(r.coeffs.len(), BigInt::zero());
    }
    for (c, x) in coeffs.iter_mut().zip(&r.coeffs) {
        f(c, x);
    }
    QPoly::from_coeffs(coeffs)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        zip_with(self, rhs, |c, x| *c += x)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        zip_with(self, rhs, |c, x| *c -= x)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPoly {
    /// Renders as `1 + q + 2q^2 - q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyJson {
    coeffs: Vec<String>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyJson {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}
