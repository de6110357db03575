//! Formal Plücker variables and the generator families of `∧^m F`.
//!
//! A point of the Grassmannian of `q`-dimensional subspaces `F` of an
//! `N`-dimensional space carries two coordinate systems: `Δ_I` indexed by
//! size-`p` multi-indices (`p = N - q`, the quotient embedding) and `Θ_K`
//! indexed by size-`q` multi-indices (the subspace embedding, computed as
//! maximal minors).  They determine each other through
//! `Θ_K = -ε_{K|I} Δ_I` for complementary `K`, `I`.
//!
//! The elements
//!
//! ```text
//! δ^m_J = Σ_{H ∪ I = J} ε_{H|I} Δ_I e_{h_1} ∧ ... ∧ e_{h_m},   |J| = p + m,
//! θ^m_J = Σ_H ε_{J|H} Θ_{J∪H} e_{h_1} ∧ ... ∧ e_{h_m},         |J| = q - m,
//! ```
//!
//! generate `∧^m F` and are *linear* in the Plücker coordinates; the
//! equation families in [`crate::equations`] are built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exterior::{sign_of_concat, Coeff, ExteriorElement, MultiIndex};
use crate::hilbpoly::HilbertPolynomialContext;
use crate::monom::MonomialBasis;
use crate::{Error, Result};

/// A monomial in formal Plücker variables: a sorted multiset of index
/// tuples.  The empty multiset is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DeltaMonomial {
    vars: Vec<MultiIndex>,
}

impl DeltaMonomial {
    pub fn one() -> Self {
        DeltaMonomial { vars: Vec::new() }
    }

    pub fn variable(index: MultiIndex) -> Self {
        DeltaMonomial { vars: vec![index] }
    }

    pub fn from_vars(mut vars: Vec<MultiIndex>) -> Self {
        vars.sort();
        DeltaMonomial { vars }
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[MultiIndex] {
        &self.vars
    }

    fn mul(&self, other: &DeltaMonomial) -> DeltaMonomial {
        let mut vars: Vec<MultiIndex> =
            self.vars.iter().chain(other.vars.iter()).cloned().collect();
        vars.sort();
        DeltaMonomial { vars }
    }
}

/// A sparse polynomial with arbitrary-precision integer coefficients in the
/// formal Plücker variables `D[i_1,...,i_k]`.
///
/// Equality is syntactic: variables are identified purely by their ordered
/// index tuples.  Unordered tuples must be normalized to `ε_H · Δ_sorted(H)`
/// before entering a polynomial; see [`DeltaPolynomial::variable_unsorted`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DeltaPolynomial {
    terms: BTreeMap<DeltaMonomial, BigInt>,
}

impl DeltaPolynomial {
    pub fn new() -> Self {
        DeltaPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(DeltaMonomial::one(), c);
        }
        DeltaPolynomial { terms }
    }

    /// The single variable `Δ_I` for an ordered multi-index.
    pub fn variable(index: MultiIndex) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(DeltaMonomial::variable(index), BigInt::one());
        DeltaPolynomial { terms }
    }

    /// `Δ_H` for an arbitrary tuple: `ε_H Δ_sorted(H)`, the zero polynomial
    /// when an index repeats.
    pub fn variable_unsorted(seq: &[u32]) -> Self {
        match MultiIndex::from_unsorted(seq) {
            None => DeltaPolynomial::new(),
            Some((sign, index)) => Self::signed_variable(sign, index),
        }
    }

    pub fn signed_variable(sign: i32, index: MultiIndex) -> Self {
        let v = Self::variable(index);
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeltaMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &DeltaMonomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    /// Total degree in the Plücker variables; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(DeltaMonomial::degree).max()
    }

    /// True when all monomials share one degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(DeltaMonomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, monomial: DeltaMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Divides out the integer content and flips the sign so the coefficient
    /// of the greatest monomial is positive.  Idempotent.
    pub fn normalized(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            content = num_integer::gcd(content, c.abs());
        }
        let lead_negative = self
            .terms
            .iter()
            .next_back()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if lead_negative {
            content = -content;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c / &content))
            .collect();
        DeltaPolynomial { terms }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return DeltaPolynomial::new();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * factor))
            .collect();
        DeltaPolynomial { terms }
    }

    /// Canonical text form: terms ascending by monomial, variables printed
    /// as `D[i1,...,ik]`, products with `*`, repeated variables written out.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.vars().is_empty() {
                factors.push(mag.to_string());
            }
            for v in m.vars() {
                let idx: Vec<String> = v.indices().iter().map(|i| i.to_string()).collect();
                factors.push(format!("D[{}]", idx.join(",")));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the textual grammar: integer coefficients, `*` products,
    /// variables `D[i1,...,ik]` with strictly increasing indices, optional
    /// `^k` powers, whitespace insignificant.
    pub fn parse_text(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(DeltaPolynomial::new());
        }
        let mut poly = DeltaPolynomial::new();
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() {
                match bytes[pos] {
                    b'+' | b'-' => break,
                    b'[' => {
                        while pos < bytes.len() && bytes[pos] != b']' {
                            pos += 1;
                        }
                        if pos == bytes.len() {
                            return Err(Error::Parse("unterminated `[`".into()));
                        }
                        pos += 1;
                    }
                    _ => pos += 1,
                }
            }
            let term = &compact[start..pos];
            if term.is_empty() {
                return Err(Error::Parse("term with no factors".into()));
            }
            let mut coeff = sign;
            let mut vars: Vec<MultiIndex> = Vec::new();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{term}`")));
                }
                let (base, power) = match factor.rsplit_once('^') {
                    Some((b, p)) => (
                        b,
                        p.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad power in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                if let Some(body) = base.strip_prefix("D[") {
                    let body = body
                        .strip_suffix(']')
                        .ok_or_else(|| Error::Parse(format!("unterminated `{base}`")))?;
                    let indices: Vec<u32> = body
                        .split(',')
                        .map(|t| {
                            t.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad index `{t}`")))
                        })
                        .collect::<Result<_>>()?;
                    let index = MultiIndex::new(indices)?;
                    for _ in 0..power {
                        vars.push(index.clone());
                    }
                } else {
                    let c: BigInt = base
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{base}`")))?;
                    for _ in 0..power {
                        coeff *= &c;
                    }
                }
            }
            poly.add_term(DeltaMonomial::from_vars(vars), coeff);
        }
        Ok(poly)
    }

    /// JSON-friendly representation: one object per term, big integers as
    /// decimal strings.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                vars: m.vars().iter().map(|v| v.indices().to_vec()).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self> {
        let mut poly = DeltaPolynomial::new();
        for t in terms {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            let vars = t
                .vars
                .iter()
                .map(|v| MultiIndex::new(v.clone()))
                .collect::<Result<Vec<_>>>()?;
            poly.add_term(DeltaMonomial::from_vars(vars), coeff);
        }
        Ok(poly)
    }
}

/// One term of a [`DeltaPolynomial`] in the JSON schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub vars: Vec<Vec<u32>>,
}

impl fmt::Display for DeltaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl PartialOrd for DeltaPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DeltaPolynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl Add for DeltaPolynomial {
    type Output = DeltaPolynomial;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
            *slot += c;
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }
}

impl Sub for DeltaPolynomial {
    type Output = DeltaPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DeltaPolynomial {
    type Output = DeltaPolynomial;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for DeltaPolynomial {
    type Output = DeltaPolynomial;
    fn mul(self, rhs: Self) -> Self {
        let mut terms: BTreeMap<DeltaMonomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let slot = terms.entry(m).or_insert_with(BigInt::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        DeltaPolynomial { terms }
    }
}

impl Zero for DeltaPolynomial {
    fn zero() -> Self {
        DeltaPolynomial::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A projective coordinate vector indexed by multi-indices of one length,
/// generic over the entry domain.  Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateVector<C> {
    index_len: usize,
    dimension: u32,
    entries: BTreeMap<MultiIndex, C>,
}

/// The size-`q` system of a Grassmannian point, as produced by maximal minors.
pub type ThetaCoordinateVector<C> = CoordinateVector<C>;

impl<C: Clone + PartialEq + Zero> CoordinateVector<C> {
    pub fn new(index_len: usize, dimension: u32) -> Self {
        CoordinateVector { index_len, dimension, entries: BTreeMap::new() }
    }

    pub fn from_entries<I>(index_len: usize, dimension: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, C)>,
    {
        let mut map = BTreeMap::new();
        for (key, value) in entries {
            if key.len() != index_len || key.max_index() > dimension {
                return Err(Error::BadMultiIndex(format!(
                    "coordinate index {key} does not fit (len {index_len}, dim {dimension})"
                )));
            }
            if !value.is_zero() {
                map.insert(key, value);
            }
        }
        Ok(CoordinateVector { index_len, dimension, entries: map })
    }

    pub fn index_len(&self) -> usize {
        self.index_len
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.entries.iter()
    }

    pub fn get(&self, key: &MultiIndex) -> C {
        self.entries.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiIndex> {
        self.entries.keys()
    }
}

impl<C: Coeff> CoordinateVector<C> {
    /// Projective equality: one vector is a nonzero multiple of the other,
    /// decided by cross-multiplication against a reference entry.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.index_len != other.index_len || self.dimension != other.dimension {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (ref_key, ref_a) = self.entries.iter().next().unwrap();
        let Some(ref_b) = other.entries.get(ref_key) else {
            return false;
        };
        let keys: std::collections::BTreeSet<&MultiIndex> =
            self.entries.keys().chain(other.entries.keys()).collect();
        for key in keys {
            let a = self.get(key);
            let b = other.get(key);
            if a * ref_b.clone() != b * ref_a.clone() {
                return false;
            }
        }
        true
    }
}

/// `Θ_K = -ε_{K|I} Δ_I` with `K ∪ I = {1,...,N}`, applied entrywise.
pub fn delta_to_theta<C: Coeff>(delta: &CoordinateVector<C>) -> CoordinateVector<C> {
    let n = delta.dimension();
    let out_len = n as usize - delta.index_len();
    let mut entries = BTreeMap::new();
    for (index, value) in delta.entries() {
        let k = index.complement(n);
        let sign = sign_of_concat(k.indices(), index.indices());
        debug_assert!(sign != 0);
        let value = if sign < 0 { value.clone() } else { -value.clone() };
        entries.insert(k, value);
    }
    CoordinateVector { index_len: out_len, dimension: n, entries }
}

/// Inverse of [`delta_to_theta`]: `Δ_I = -ε_{K|I} Θ_K`.
pub fn theta_to_delta<C: Coeff>(theta: &CoordinateVector<C>) -> CoordinateVector<C> {
    let n = theta.dimension();
    let out_len = n as usize - theta.index_len();
    let mut entries = BTreeMap::new();
    for (k, value) in theta.entries() {
        let index = k.complement(n);
        let sign = sign_of_concat(k.indices(), index.indices());
        debug_assert!(sign != 0);
        let value = if sign < 0 { value.clone() } else { -value.clone() };
        entries.insert(index, value);
    }
    CoordinateVector { index_len: out_len, dimension: n, entries }
}

/// All size-`k` subsets of `pool` (sorted, distinct), in lexicographic order.
pub fn combinations(pool: &[u32], k: usize) -> Vec<MultiIndex> {
    let n = pool.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(MultiIndex::empty());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(
            MultiIndex::new(idx.iter().map(|&i| pool[i]).collect())
                .expect("pool is sorted and distinct"),
        );
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// All size-`k` multi-indices inside `{1, ..., n}`, lexicographically.
pub fn all_multi_indices(n: u32, k: usize) -> Vec<MultiIndex> {
    let pool: Vec<u32> = (1..=n).collect();
    combinations(&pool, k)
}

/// `δ^m_J` on the Grassmannian of corank-`p` subspaces of a `big_n`-space:
/// an element of step `m`, linear in the `Δ` variables.
pub fn delta_gen_raw(
    big_n: u32,
    p: usize,
    m: usize,
    j: &MultiIndex,
) -> Result<ExteriorElement<DeltaPolynomial>> {
    let q = big_n as usize - p;
    if m < 1 || m > q {
        return Err(Error::BadMultiIndex(format!("step m = {m} out of range 1..={q}")));
    }
    if j.len() != p + m || j.max_index() > big_n {
        return Err(Error::BadMultiIndex(format!(
            "J = {j} must have size p + m = {} inside 1..={big_n}",
            p + m
        )));
    }
    let mut terms = Vec::new();
    for h in combinations(j.indices(), m) {
        let i = j.minus(&h);
        let sign = sign_of_concat(h.indices(), i.indices());
        debug_assert!(sign != 0);
        terms.push((h, DeltaPolynomial::signed_variable(sign, i)));
    }
    ExteriorElement::from_terms(m, big_n, terms)
}

/// `θ^m_J`: coefficients are single signed `Θ` variables, carried in the same
/// formal polynomial type with size-`q` index tuples.
pub fn theta_gen_raw(
    big_n: u32,
    p: usize,
    m: usize,
    j: &MultiIndex,
) -> Result<ExteriorElement<DeltaPolynomial>> {
    let q = big_n as usize - p;
    if m < 1 || m > q {
        return Err(Error::BadMultiIndex(format!("step m = {m} out of range 1..={q}")));
    }
    if j.len() + m != q || j.max_index() > big_n {
        return Err(Error::BadMultiIndex(format!(
            "J = {j} must have size q - m = {}",
            q - m
        )));
    }
    let pool = j.complement(big_n);
    let mut terms = Vec::new();
    for h in combinations(pool.indices(), m) {
        let sign = sign_of_concat(j.indices(), h.indices());
        debug_assert!(sign != 0);
        let union = j.union_disjoint(&h).expect("disjoint by construction");
        terms.push((h, DeltaPolynomial::signed_variable(sign, union)));
    }
    ExteriorElement::from_terms(m, big_n, terms)
}

/// The straightening quadrics generating the Plücker ideal of the
/// Grassmannian in the `Δ` system: for every `(p-1)`-tuple `α` and every
/// `(p+1)`-tuple `β`, `Σ_k (-1)^k Δ_{α|β_k} Δ_{β \ β_k} = 0`.
/// Normalized, deduplicated, zero polynomials dropped.
pub fn plucker_relations_raw(big_n: u32, p: usize) -> Vec<DeltaPolynomial> {
    let mut seen = std::collections::BTreeSet::new();
    if p == 0 || p + 1 > big_n as usize {
        return Vec::new();
    }
    for alpha in all_multi_indices(big_n, p - 1) {
        for beta in all_multi_indices(big_n, p + 1) {
            let mut poly = DeltaPolynomial::new();
            for (k, &b) in beta.indices().iter().enumerate() {
                let sign = if k % 2 == 0 { -1 } else { 1 };
                let mut first_indices = alpha.indices().to_vec();
                first_indices.push(b);
                let first = DeltaPolynomial::variable_unsorted(&first_indices);
                if first.is_zero() {
                    continue;
                }
                let second =
                    DeltaPolynomial::variable(beta.minus(&MultiIndex::new(vec![b]).unwrap()));
                let term = first * second;
                poly = if sign < 0 { poly - term } else { poly + term };
            }
            let poly = poly.normalized();
            if !poly.is_zero() {
                seen.insert(poly);
            }
        }
    }
    seen.into_iter().collect()
}

/// Which generator family an entry list describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyLabel {
    /// `B_m`
    B(usize),
    /// `x_i B_m`
    XiB(usize, usize),
}

/// A labelled family of generators, one entry per multi-index `J`.  Every
/// coefficient of every entry is a single signed Plücker variable.
#[derive(Debug, Clone)]
pub struct GeneratorFamily {
    pub label: FamilyLabel,
    pub m: usize,
    pub entries: Vec<(MultiIndex, ExteriorElement<DeltaPolynomial>)>,
}

/// The ambient data shared by the equation families: the Hilbert polynomial
/// context plus the monomial bases of `S_r` and `S_{r+1}`.
#[derive(Debug, Clone)]
pub struct PlueckerContext {
    ctx: HilbertPolynomialContext,
    basis_r: MonomialBasis,
    basis_r1: MonomialBasis,
    big_n: u32,
    big_n1: u32,
    p: usize,
    q: usize,
}

impl PlueckerContext {
    pub fn new(ctx: &HilbertPolynomialContext) -> Result<Self> {
        let big_n = ctx.dim_s_r()?;
        let big_n1 = ctx.dim_s_r1()?;
        let p = ctx.p_r()?;
        let q = ctx.q_r()?;
        let basis_r = MonomialBasis::new(ctx.n(), ctx.r());
        let basis_r1 = MonomialBasis::new(ctx.n(), ctx.r() + 1);
        debug_assert_eq!(basis_r.len(), big_n);
        debug_assert_eq!(basis_r1.len(), big_n1);
        Ok(PlueckerContext {
            ctx: ctx.clone(),
            basis_r,
            basis_r1,
            big_n: big_n as u32,
            big_n1: big_n1 as u32,
            p,
            q,
        })
    }

    pub fn hilbert(&self) -> &HilbertPolynomialContext {
        &self.ctx
    }

    pub fn basis_r(&self) -> &MonomialBasis {
        &self.basis_r
    }

    pub fn basis_r1(&self) -> &MonomialBasis {
        &self.basis_r1
    }

    /// `dim S_r`, the ambient dimension of the Grassmannian.
    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    /// `dim S_{r+1}`.
    pub fn big_n1(&self) -> u32 {
        self.big_n1
    }

    /// `p(r)`: the size of the `Δ` index tuples.
    pub fn p(&self) -> usize {
        self.p
    }

    /// `q(r)`: the dimension of the parametrized subspaces.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn delta_gen(&self, m: usize, j: &MultiIndex) -> Result<ExteriorElement<DeltaPolynomial>> {
        delta_gen_raw(self.big_n, self.p, m, j)
    }

    pub fn theta_gen(&self, m: usize, j: &MultiIndex) -> Result<ExteriorElement<DeltaPolynomial>> {
        theta_gen_raw(self.big_n, self.p, m, j)
    }

    /// `x_i δ^m_J`: every wedge factor `x^{α(h)}` of `δ^m_J` is replaced by
    /// `x_i x^{α(h)}`, re-expressed in the degree-`(r+1)` basis.
    /// Multiplication by a variable preserves DegRevLex comparisons, so the
    /// relabeling preserves order and no signs appear.
    pub fn xi_delta(
        &self,
        var: usize,
        m: usize,
        j: &MultiIndex,
    ) -> Result<ExteriorElement<DeltaPolynomial>> {
        if var > self.ctx.n() as usize {
            return Err(Error::BadMultiIndex(format!("variable x{var} out of range")));
        }
        let base = self.delta_gen(m, j)?;
        base.relabel(self.big_n1, |h| {
            self.basis_r.multiply_index(&self.basis_r1, var, h as usize) as u32
        })
    }

    /// The family `B_m = { δ^m_J }` over all `J`, in lexicographic `J` order.
    pub fn b_family(&self, m: usize) -> Result<GeneratorFamily> {
        let entries = all_multi_indices(self.big_n, self.p + m)
            .into_iter()
            .map(|j| {
                let gen = self.delta_gen(m, &j)?;
                Ok((j, gen))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorFamily { label: FamilyLabel::B(m), m, entries })
    }

    /// The family `x_i B_m = { x_i δ^m_J }` over all `J`.
    pub fn xi_b_family(&self, var: usize, m: usize) -> Result<GeneratorFamily> {
        let entries = all_multi_indices(self.big_n, self.p + m)
            .into_iter()
            .map(|j| {
                let gen = self.xi_delta(var, m, &j)?;
                Ok((j, gen))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorFamily { label: FamilyLabel::XiB(var, m), m, entries })
    }

    /// All `Δ` variable indices (size-`p` multi-indices), lexicographically.
    pub fn delta_indices(&self) -> Vec<MultiIndex> {
        all_multi_indices(self.big_n, self.p)
    }

    pub fn plucker_relations(&self) -> Vec<DeltaPolynomial> {
        plucker_relations_raw(self.big_n, self.p)
    }
}
