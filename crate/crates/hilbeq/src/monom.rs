//! Monomial bases of the graded pieces `S_t` of `k[x_0, ..., x_n]`.
//!
//! Variables are ordered `x_n > ... > x_0` throughout.  A basis of `S_t`
//! lists all degree-`t` monomials in strictly descending DegRevLex order,
//! and its positions (1-based) are the indices every multi-index in the
//! crate refers to.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::hilbpoly::HilbertPolynomialContext;
use crate::{Error, Result};

/// A monomial of `k[x_0, ..., x_n]`, stored as its exponent vector;
/// position `i` holds the exponent of `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n + 1` variables.
    pub fn one(n: u32) -> Self {
        Monomial { exps: vec![0; n as usize + 1] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Number of variables minus one (the `n` of the ambient ring).
    pub fn n(&self) -> u32 {
        self.exps.len() as u32 - 1
    }

    /// The product `x_i * self`.
    pub fn mul_var(&self, i: usize) -> Self {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// The quotient `self / x_i`, when `x_i` divides.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// True when every variable occurring in the monomial has index `> d`,
    /// i.e. the monomial lies in `k[x_{d+1}, ..., x_n]`.
    pub fn in_small_ring(&self, d: u32) -> bool {
        self.exps.iter().take(d as usize + 1).all(|&e| e == 0)
    }

    /// Parses the display form, e.g. `x2^2*x0` or `1`.
    pub fn parse(s: &str, n: u32) -> Result<Self> {
        let s = s.trim();
        let mut exps = vec![0u32; n as usize + 1];
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad monomial factor `{factor}`")))?;
            let (var, pow) = match rest.split_once('^') {
                Some((v, p)) => (v, p.trim().parse::<u32>().map_err(|_| {
                    Error::Parse(format!("bad exponent in `{factor}`"))
                })?),
                None => (rest, 1),
            };
            let var: usize = var
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable in `{factor}`")))?;
            if var > n as usize {
                return Err(Error::Parse(format!("variable x{var} out of range")));
            }
            exps[var] += pow;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in (0..self.exps.len()).rev() {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Degree-reverse-lexicographic comparison with `x_n > ... > x_0`: higher
/// total degree wins; at equal degree the monomial with the smaller exponent
/// on the least variable that distinguishes them wins.
pub fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (ea, eb) in a.exps.iter().zip(b.exps.iter()) {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

/// Pure lexicographic comparison with `x_n > ... > x_0`.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for i in (0..a.exps.len()).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// The monomial basis of `S_t`, descending in DegRevLex, with 1-based
/// position lookups in both directions.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    n: u32,
    degree: u32,
    monomials: Vec<Monomial>,
    positions: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    pub fn new(n: u32, t: u32) -> Self {
        let mut monomials = Vec::new();
        let mut exps = vec![0u32; n as usize + 1];
        enumerate(&mut monomials, &mut exps, 0, t);
        monomials.sort_by(|a, b| degrevlex_cmp(b, a));
        let positions = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.exps.clone(), i + 1))
            .collect();
        MonomialBasis { n, degree: t, monomials, positions }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// The monomial at 1-based position `k`.
    pub fn monomial_of(&self, k: usize) -> &Monomial {
        &self.monomials[k - 1]
    }

    /// The 1-based position of `m`, when `m` has the right degree.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.positions.get(m.exps()).copied()
    }

    /// Position of `x_i * self[k]` in the basis one degree up.
    pub fn multiply_index(&self, next: &MonomialBasis, i: usize, k: usize) -> usize {
        debug_assert_eq!(next.degree, self.degree + 1);
        let m = self.monomial_of(k).mul_var(i);
        next.index_of(&m)
            .expect("multiplying a basis monomial stays inside the next basis")
    }
}

fn enumerate(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, pos: usize, left: u32) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        enumerate(out, exps, pos + 1, left - e);
    }
    exps[pos] = 0;
}

/// Borel-fixedness of the monomial ideal generated by `generators`: for every
/// generator `x^a`, every `x_i` dividing it and every `j > i`, the elementary
/// move `(x_j / x_i) x^a` must again lie in the ideal.
pub fn is_borel(generators: &[Monomial]) -> bool {
    let in_ideal =
        |m: &Monomial| generators.iter().any(|g| g.divides(m));
    for g in generators {
        let nv = g.exps.len();
        for i in 0..nv {
            let Some(quot) = g.div_var(i) else { continue };
            for j in (i + 1)..nv {
                if !in_ideal(&quot.mul_var(j)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The `q(r)` lexicographically largest monomials of degree `r`: the degree-`r`
/// piece of the saturated lexsegment ideal attached to the volume polynomial.
pub fn lexsegment_degree(ctx: &HilbertPolynomialContext) -> Result<Vec<Monomial>> {
    let q_r = ctx.q_r()?;
    let basis = MonomialBasis::new(ctx.n(), ctx.r());
    let mut sorted: Vec<Monomial> = basis.monomials().to_vec();
    sorted.sort_by(|a, b| lex_cmp(b, a));
    Ok(sorted.into_iter().take(q_r).collect())
}
