//! Admissible Hilbert polynomials and their Gotzmann data.
//!
//! A Hilbert polynomial `p(t)` on projective `n`-space admits a unique
//! decomposition
//!
//! ```text
//! p(t) = C(t + a_0, a_0) + C(t + a_1 - 1, a_1) + ... + C(t + a_s - s, a_s)
//! ```
//!
//! with `a_0 >= a_1 >= ... >= a_s >= 0`.  The Gotzmann number is `r = s + 1`,
//! the degree is `d = a_0`, and the volume polynomial is
//! `q(t) = C(n + t, n) - p(t)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Upper bound on the number of binomial terms we are willing to materialize.
const MAX_TERMS: usize = 1_000_000;

/// `C(top, k)` for an arbitrary (possibly negative) integer `top`, i.e. the
/// polynomial extension `top (top-1) ... (top-k+1) / k!`.
pub fn binomial(top: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= top - BigInt::from(j);
        // dividing by j+1 keeps every partial product integral
        acc /= BigInt::from(j + 1);
    }
    acc
}

/// Coefficients (constant term first) of `C(t + shift, k)` as a polynomial
/// in `t` with rational coefficients.
fn binomial_poly(shift: &BigInt, k: u64) -> Vec<BigRational> {
    // product of the linear factors (t + shift - j), then divide by k!
    let mut coeffs: Vec<BigRational> = vec![BigRational::one()];
    for j in 0..k {
        let c = BigRational::from(shift - BigInt::from(j));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, a) in coeffs.iter().enumerate() {
            next[i] += a * &c;
            next[i + 1] += a;
        }
        coeffs = next;
    }
    let mut fact = BigInt::one();
    for j in 1..=k {
        fact *= BigInt::from(j);
    }
    let fact = BigRational::from(fact);
    for a in &mut coeffs {
        *a /= fact.clone();
    }
    coeffs
}

fn trim(coeffs: &mut Vec<BigRational>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn eval(coeffs: &[BigRational], t: &BigInt) -> BigRational {
    let t = BigRational::from(t.clone());
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &t + c;
    }
    acc
}

/// A Hilbert polynomial together with its Gotzmann decomposition and the
/// numeric quantities derived from it.
///
/// All values are immutable after construction and all methods are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomialContext {
    n: u32,
    coeffs: Vec<u32>,
    r: u32,
    d: u32,
}

impl HilbertPolynomialContext {
    /// Decomposes `p` (dense rational coefficients, constant term first) into
    /// its Gotzmann binomial expansion on `P^n`.
    ///
    /// Fails with [`Error::NotAdmissible`] when `p` is not integer-valued,
    /// when the greedy peeling produces an increasing or negative exponent
    /// sequence, or when `p(t) >= C(n+t,n)` for large `t`.
    pub fn gotzmann_decompose(p: &[BigRational], n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAdmissible("ambient dimension n must be >= 1".into()));
        }
        let mut cur: Vec<BigRational> = p.to_vec();
        trim(&mut cur);
        if cur.is_empty() {
            return Err(Error::NotAdmissible("the zero polynomial has no decomposition".into()));
        }
        let deg = cur.len() - 1;
        // a polynomial of degree m is integer valued iff it is integral at
        // m+1 consecutive integers
        for t in 0..=deg as i64 {
            if !eval(&cur, &BigInt::from(t)).is_integer() {
                return Err(Error::NotAdmissible(format!(
                    "p({t}) is not an integer"
                )));
            }
        }
        if deg as u32 > n {
            return Err(Error::NotAdmissible(format!(
                "degree {deg} exceeds the ambient dimension {n}"
            )));
        }

        // Greedy peeling, one degree level at a time.  At the level of degree
        // a the leading coefficient must be k/a! for a positive integer k,
        // and the next k exponents all equal a; the k binomials are removed
        // at once through the hockey-stick identity
        //   sum_{j=i}^{i+k-1} C(t+a-j, a) = C(t+a-i+1, a+1) - C(t+a-i-k+1, a+1).
        let mut coeffs: Vec<u32> = Vec::new();
        loop {
            trim(&mut cur);
            if cur.is_empty() {
                break;
            }
            let a = (cur.len() - 1) as u32;
            let lead = cur.last().unwrap().clone();
            if lead.is_negative() {
                return Err(Error::NotAdmissible(
                    "peeling produced a negative leading coefficient".into(),
                ));
            }
            let mut fact = BigInt::one();
            for j in 1..=a as u64 {
                fact *= BigInt::from(j);
            }
            let count = lead * BigRational::from(fact);
            if !count.is_integer() {
                return Err(Error::NotAdmissible(
                    "leading coefficient is not an integer multiple of 1/a!".into(),
                ));
            }
            let count = count.to_integer();
            let k: usize = count
                .try_into()
                .map_err(|_| Error::NotAdmissible("decomposition too large".into()))?;
            if coeffs.len() + k > MAX_TERMS {
                return Err(Error::NotAdmissible(format!(
                    "decomposition exceeds {MAX_TERMS} terms"
                )));
            }
            let i = coeffs.len() as i64;
            coeffs.extend(std::iter::repeat(a).take(k));
            // subtract C(t+a-i+1, a+1) - C(t+a-i-k+1, a+1)
            let hi = binomial_poly(&BigInt::from(a as i64 - i + 1), a as u64 + 1);
            let lo = binomial_poly(&BigInt::from(a as i64 - i - k as i64 + 1), a as u64 + 1);
            let len = cur.len().max(hi.len()).max(lo.len());
            cur.resize(len, BigRational::zero());
            for (j, c) in hi.iter().enumerate() {
                cur[j] -= c;
            }
            for (j, c) in lo.iter().enumerate() {
                cur[j] += c;
            }
            trim(&mut cur);
            if cur.len() > a as usize {
                return Err(Error::NotAdmissible(
                    "peeling did not reduce the degree".into(),
                ));
            }
        }
        for w in coeffs.windows(2) {
            debug_assert!(w[0] >= w[1]);
        }
        if coeffs.is_empty() {
            return Err(Error::NotAdmissible("empty decomposition".into()));
        }
        let ctx = HilbertPolynomialContext {
            n,
            d: coeffs[0],
            r: coeffs.len() as u32,
            coeffs,
        };
        if ctx.q_of(ctx.r) < BigInt::one() {
            return Err(Error::NotAdmissible(
                "p(t) is not smaller than dim S_t at the Gotzmann number".into(),
            ));
        }
        Ok(ctx)
    }

    /// Ambient projective dimension `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Gotzmann number `r = s + 1`.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Degree `d = a_0` of the Hilbert polynomial.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// The exponents `[a_0, ..., a_s]` of the decomposition.
    pub fn gotzmann_coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// `dim S_t = C(n + t, n)`.
    pub fn dim_s(&self, t: u32) -> BigInt {
        binomial(&BigInt::from(self.n as i64 + t as i64), self.n as u64)
    }

    /// `p(t)`, evaluated through the binomial decomposition.
    pub fn p_value(&self, t: u32) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, &a) in self.coeffs.iter().enumerate() {
            let top = BigInt::from(t as i64 + a as i64 - i as i64);
            acc += binomial(&top, a as u64);
        }
        acc
    }

    /// `q(t) = C(n + t, n) - p(t)`.  Nonnegative for every `t >= r`.
    pub fn q_of(&self, t: u32) -> BigInt {
        self.dim_s(t) - self.p_value(t)
    }

    /// `q'(t) = q(t) - C(n - d - 1 + t, n - d - 1)`, the part of `q(t)` not
    /// accounted for by the small coordinate ring `k[x_{d+1},...,x_n]_t`.
    pub fn qprime_of(&self, t: u32) -> Result<BigInt> {
        if self.d >= self.n {
            return Err(Error::DegenerateDimension { d: self.d, n: self.n });
        }
        let small = self.n - self.d - 1;
        let top = BigInt::from(small as i64 + t as i64);
        Ok(self.q_of(t) - binomial(&top, small as u64))
    }

    fn small_usize(v: BigInt, what: &str) -> Result<usize> {
        v.try_into()
            .map_err(|_| Error::Overflow(format!("{what} does not fit into machine range")))
    }

    /// `q(r)` as a machine integer.
    pub fn q_r(&self) -> Result<usize> {
        Self::small_usize(self.q_of(self.r), "q(r)")
    }

    /// `q(r+1)` as a machine integer.
    pub fn q_r1(&self) -> Result<usize> {
        Self::small_usize(self.q_of(self.r + 1), "q(r+1)")
    }

    /// `p(r)` as a machine integer.
    pub fn p_r(&self) -> Result<usize> {
        Self::small_usize(self.p_value(self.r), "p(r)")
    }

    /// `q'(r+1)` as a machine integer.
    pub fn qprime_r1(&self) -> Result<usize> {
        Self::small_usize(self.qprime_of(self.r + 1)?, "q'(r+1)")
    }

    /// `dim S_r` as a machine integer.
    pub fn dim_s_r(&self) -> Result<usize> {
        Self::small_usize(self.dim_s(self.r), "dim S_r")
    }

    /// `dim S_{r+1}` as a machine integer.
    pub fn dim_s_r1(&self) -> Result<usize> {
        Self::small_usize(self.dim_s(self.r + 1), "dim S_{r+1}")
    }

    #[cfg(test)]
    pub(crate) fn from_parts(n: u32, coeffs: Vec<u32>) -> Self {
        let d = coeffs[0];
        let r = coeffs.len() as u32;
        HilbertPolynomialContext { n, coeffs, r, d }
    }
}

/// Convenience constructor from integer coefficients, constant term first.
pub fn poly_from_ints(coeffs: &[i64]) -> Vec<BigRational> {
    coeffs
        .iter()
        .map(|&c| BigRational::from(BigInt::from(c)))
        .collect()
}
