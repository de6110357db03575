//! Multi-index sign calculus and sparse exterior algebra.
//!
//! Elements of `∧^k V` for `V` of dimension `N` are stored as sparse maps
//! from strictly increasing index tuples to coefficients in a commutative
//! ring.  The same arithmetic serves two coefficient domains: formal
//! integer polynomials in Plücker variables and exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::Zero;

use crate::{Error, Result};

/// A strictly increasing tuple of positive (1-based) indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex {
    indices: Vec<u32>,
}

impl MultiIndex {
    /// Builds a multi-index, rejecting tuples that are not strictly
    /// increasing or contain zeroes.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(Error::BadMultiIndex("indices are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadMultiIndex(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        Ok(MultiIndex { indices })
    }

    pub fn empty() -> Self {
        MultiIndex { indices: Vec::new() }
    }

    /// Sorts an arbitrary tuple, returning the signature of the sorting
    /// permutation alongside; `None` when an index repeats.
    pub fn from_unsorted(seq: &[u32]) -> Option<(i32, Self)> {
        let sign = sign_of_sort(seq);
        if sign == 0 {
            return None;
        }
        let mut indices = seq.to_vec();
        indices.sort_unstable();
        Some((sign, MultiIndex { indices }))
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.indices.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn is_subset_of(&self, other: &MultiIndex) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    /// The ordered complement inside `{1, ..., n}`.
    pub fn complement(&self, n: u32) -> MultiIndex {
        let indices = (1..=n).filter(|&i| !self.contains(i)).collect();
        MultiIndex { indices }
    }

    /// The ordered union, `None` when the two tuples overlap.
    pub fn union_disjoint(&self, other: &MultiIndex) -> Option<MultiIndex> {
        let mut indices: Vec<u32> =
            self.indices.iter().chain(other.indices.iter()).copied().collect();
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(MultiIndex { indices })
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &MultiIndex) -> MultiIndex {
        let indices = self
            .indices
            .iter()
            .copied()
            .filter(|&i| !other.contains(i))
            .collect();
        MultiIndex { indices }
    }

    /// The ordered insertion of a single index; `None` when already present.
    pub fn with_index(&self, idx: u32) -> Option<MultiIndex> {
        match self.indices.binary_search(&idx) {
            Ok(_) => None,
            Err(pos) => {
                let mut indices = self.indices.clone();
                indices.insert(pos, idx);
                Some(MultiIndex { indices })
            }
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}

/// Signature of the permutation sorting the concatenation `K | H`:
/// `0` when an index repeats, otherwise `±1` by inversion parity.
pub fn sign_of_concat(k: &[u32], h: &[u32]) -> i32 {
    let seq: Vec<u32> = k.iter().chain(h.iter()).copied().collect();
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Signature of the permutation sorting `seq` (0 on repeats).
pub fn sign_of_sort(seq: &[u32]) -> i32 {
    sign_of_concat(seq, &[])
}

/// Coefficient rings usable in exterior elements.
pub trait Coeff: Clone + PartialEq + Zero + Neg<Output = Self> + Mul<Output = Self> {}
impl<T> Coeff for T where T: Clone + PartialEq + Zero + Neg<Output = T> + Mul<Output = T> {}

fn signed<C: Coeff>(sign: i32, value: C) -> C {
    debug_assert!(sign == 1 || sign == -1);
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// A sparse element of `∧^step V` with `dim V = dimension`.
///
/// Keys are strictly increasing tuples of length `step`; zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorElement<C: Coeff> {
    step: usize,
    dimension: u32,
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Coeff> ExteriorElement<C> {
    pub fn zero(step: usize, dimension: u32) -> Self {
        ExteriorElement { step, dimension, terms: BTreeMap::new() }
    }

    /// The empty wedge: the multiplicative unit of step 0.
    pub fn one(dimension: u32, unit: C) -> Self {
        let mut terms = BTreeMap::new();
        if !unit.is_zero() {
            terms.insert(MultiIndex::empty(), unit);
        }
        ExteriorElement { step: 0, dimension, terms }
    }

    pub fn from_terms<I>(step: usize, dimension: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, C)>,
    {
        let mut map: BTreeMap<MultiIndex, C> = BTreeMap::new();
        for (key, value) in terms {
            if key.len() != step {
                return Err(Error::BadMultiIndex(format!(
                    "key {key} does not have step {step}"
                )));
            }
            if key.max_index() > dimension {
                return Err(Error::BadMultiIndex(format!(
                    "key {key} exceeds dimension {dimension}"
                )));
            }
            let slot = map.entry(key).or_insert_with(C::zero);
            *slot = std::mem::replace(slot, C::zero()) + value;
        }
        map.retain(|_, v| !v.is_zero());
        Ok(ExteriorElement { step, dimension, terms: map })
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &MultiIndex) -> Option<&C> {
        self.terms.get(key)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.step != other.step || self.dimension != other.dimension {
            return Err(Error::DimensionMismatch(format!(
                "cannot add step {} dim {} to step {} dim {}",
                self.step, self.dimension, other.step, other.dimension
            )));
        }
        let mut terms = self.terms.clone();
        for (key, value) in &other.terms {
            let slot = terms.entry(key.clone()).or_insert_with(C::zero);
            *slot = std::mem::replace(slot, C::zero()) + value.clone();
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(ExteriorElement { step: self.step, dimension: self.dimension, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.clone().negated())
    }

    pub fn negated(self) -> Self {
        let terms = self.terms.into_iter().map(|(k, v)| (k, -v)).collect();
        ExteriorElement { step: self.step, dimension: self.dimension, terms }
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (key, value) in &self.terms {
            let v = value.clone() * factor.clone();
            if !v.is_zero() {
                terms.insert(key.clone(), v);
            }
        }
        ExteriorElement { step: self.step, dimension: self.dimension, terms }
    }

    /// Exterior product.  Signs follow the inversion parity of concatenated
    /// key tuples, so the product is graded-anticommutative and associative.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch(format!(
                "wedge of dimensions {} and {}",
                self.dimension, other.dimension
            )));
        }
        let mut terms: BTreeMap<MultiIndex, C> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let sign = sign_of_concat(ka.indices(), kb.indices());
                if sign == 0 {
                    continue;
                }
                let key = ka.union_disjoint(kb).expect("disjoint by nonzero sign");
                let value = signed(sign, ca.clone() * cb.clone());
                let slot = terms.entry(key).or_insert_with(C::zero);
                *slot = std::mem::replace(slot, C::zero()) + value;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(ExteriorElement {
            step: self.step + other.step,
            dimension: self.dimension,
            terms,
        })
    }

    /// Rewrites every coefficient; used to evaluate symbolic coefficients at
    /// a point.  Zero results are pruned.
    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> ExteriorElement<D> {
        let mut terms = BTreeMap::new();
        for (key, value) in &self.terms {
            let v = f(value);
            if !v.is_zero() {
                terms.insert(key.clone(), v);
            }
        }
        ExteriorElement { step: self.step, dimension: self.dimension, terms }
    }

    /// Applies an order-preserving injective relabeling to every index of
    /// every key, adjusting the ambient dimension; no signs arise.
    pub fn relabel(
        &self,
        new_dimension: u32,
        mut f: impl FnMut(u32) -> u32,
    ) -> Result<ExteriorElement<C>> {
        let mut terms = BTreeMap::new();
        for (key, value) in &self.terms {
            let mapped: Vec<u32> = key.indices().iter().map(|&i| f(i)).collect();
            let key = MultiIndex::new(mapped).map_err(|_| {
                Error::BadMultiIndex("relabeling must be strictly increasing".into())
            })?;
            if key.max_index() > new_dimension {
                return Err(Error::BadMultiIndex(
                    "relabeled index exceeds the new dimension".into(),
                ));
            }
            terms.insert(key, value.clone());
        }
        Ok(ExteriorElement { step: self.step, dimension: new_dimension, terms })
    }
}

/// An alternating `N`-linear bracket, fixed by the ordered basis on which it
/// evaluates to `+1`.  The default is the determinant in `e_1, ..., e_N`.
#[derive(Debug, Clone)]
pub struct NLinearForm {
    /// `order[i]` is the basis index at position `i`; a permutation of `1..=N`
    order: Vec<u32>,
    /// position of each basis index inside `order`
    position: Vec<usize>,
}

impl NLinearForm {
    /// The determinant in the standard ordered basis.
    pub fn standard(n: u32) -> Self {
        let order: Vec<u32> = (1..=n).collect();
        let position = (0..n as usize).collect();
        NLinearForm { order, position }
    }

    /// The determinant in the permuted basis `e_{order[0]}, ..., e_{order[N-1]}`.
    pub fn permuted(order: Vec<u32>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (pos, &idx) in order.iter().enumerate() {
            if idx == 0 || idx as usize > n || position[idx as usize - 1] != usize::MAX {
                return Err(Error::BadMultiIndex(
                    "form order must be a permutation of 1..=N".into(),
                ));
            }
            position[idx as usize - 1] = pos;
        }
        Ok(NLinearForm { order, position })
    }

    pub fn dimension(&self) -> u32 {
        self.order.len() as u32
    }

    /// Value on `e` vectors indexed by the concatenation of the two blocks.
    fn bracket(&self, first: &[u32], second: &[u32]) -> i32 {
        if first.len() + second.len() != self.order.len() {
            return 0;
        }
        let mapped: Vec<u32> = first
            .iter()
            .chain(second.iter())
            .map(|&i| self.position[i as usize - 1] as u32 + 1)
            .collect();
        sign_of_sort(&mapped)
    }
}

fn meet_check<C: Coeff>(
    t: &ExteriorElement<C>,
    u: &ExteriorElement<C>,
    form: &NLinearForm,
) -> Result<(u32, usize)> {
    let n = t.dimension();
    if u.dimension() != n || form.dimension() != n {
        return Err(Error::DimensionMismatch(
            "meet arguments must share one ambient dimension".into(),
        ));
    }
    let (p, q) = (t.step(), u.step());
    if p + q < n as usize {
        return Err(Error::DimensionMismatch(format!(
            "meet needs p + q >= N, got {p} + {q} < {n}"
        )));
    }
    Ok((n, p + q - n as usize))
}

/// The meet `T ∗ U` associated to `form`.  For extensors of subspaces `F`,
/// `G` with `F + G = V`, the result is an extensor of `F ∩ G`.
pub fn meet<C: Coeff>(
    t: &ExteriorElement<C>,
    u: &ExteriorElement<C>,
    form: &NLinearForm,
) -> Result<ExteriorElement<C>> {
    meet_expand_first(t, u, form)
}

/// Meet computed by splitting the keys of the first argument: each splitting
/// `A = H ⊔ K` with `H` complementary to a key `B` of `U` contributes
/// `ε_{H|K} [e_H, e_B] c_A c_B e_K`.
pub fn meet_expand_first<C: Coeff>(
    t: &ExteriorElement<C>,
    u: &ExteriorElement<C>,
    form: &NLinearForm,
) -> Result<ExteriorElement<C>> {
    let (n, out_step) = meet_check(t, u, form)?;
    let mut terms: Vec<(MultiIndex, C)> = Vec::new();
    for (ka, ca) in t.terms() {
        for (kb, cb) in u.terms() {
            let h = kb.complement(n);
            if !h.is_subset_of(ka) {
                continue;
            }
            let k = ka.minus(&h);
            let split_sign = sign_of_concat(h.indices(), k.indices());
            let bracket = form.bracket(h.indices(), kb.indices());
            if split_sign * bracket == 0 {
                continue;
            }
            terms.push((k, signed(split_sign * bracket, ca.clone() * cb.clone())));
        }
    }
    ExteriorElement::from_terms(out_step, n, terms)
}

/// Meet computed by splitting the keys of the second argument.
pub fn meet_expand_second<C: Coeff>(
    t: &ExteriorElement<C>,
    u: &ExteriorElement<C>,
    form: &NLinearForm,
) -> Result<ExteriorElement<C>> {
    let (n, out_step) = meet_check(t, u, form)?;
    let mut terms: Vec<(MultiIndex, C)> = Vec::new();
    for (ka, ca) in t.terms() {
        for (kb, cb) in u.terms() {
            let j = ka.complement(n);
            if !j.is_subset_of(kb) {
                continue;
            }
            let i = kb.minus(&j);
            let split_sign = sign_of_concat(i.indices(), j.indices());
            let bracket = form.bracket(ka.indices(), j.indices());
            if split_sign * bracket == 0 {
                continue;
            }
            terms.push((i, signed(split_sign * bracket, ca.clone() * cb.clone())));
        }
    }
    ExteriorElement::from_terms(out_step, n, terms)
}
