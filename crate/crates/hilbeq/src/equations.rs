//! The equation families cutting the Hilbert scheme out of the Grassmannian.
//!
//! Three constructions are implemented, all expressed through the generator
//! families of [`crate::plucker`]:
//!
//! * minors of order `q(r+1)+1` of the symbolic multiplication matrix
//!   (equations of degree `q(r+1)+1`);
//! * coefficients of wedge products `x_0 δ^{m_0} ∧ ... ∧ x_n δ^{m_n}` with
//!   `Σ m_i = q(r+1)+1` (degree at most `n+1`);
//! * the low-degree local families `T'` and `T''` (degree at most `d+2`)
//!   together with the symbolic PGL action that globalizes them.
//!
//! Emission orders are deterministic everywhere, so equal inputs always
//! produce identical equation lists.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::exterior::{sign_of_concat, ExteriorElement, MultiIndex};
use crate::plucker::{
    all_multi_indices, combinations, DeltaMonomial, DeltaPolynomial, PlueckerContext,
};
use crate::{Error, Result};

/// Which construction an equation set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ik,
    Bayer,
    BlmrT1,
    BlmrT2,
    BlmrFull,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Ik => "ik",
            Family::Bayer => "bayer",
            Family::BlmrT1 => "blmr-t1",
            Family::BlmrT2 => "blmr-t2",
            Family::BlmrFull => "blmr-full",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "ik" => Family::Ik,
            "bayer" => Family::Bayer,
            "blmr-t1" => Family::BlmrT1,
            "blmr-t2" => Family::BlmrT2,
            "blmr-full" => Family::BlmrFull,
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A family tag, the degree bound of the family, and the polynomials, each
/// normalized (content divided out, leading coefficient positive, terms
/// canonically sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSet {
    pub family: Family,
    pub delta_degree: usize,
    pub polynomials: Vec<DeltaPolynomial>,
}

impl EquationSet {
    fn new(family: Family, delta_degree: usize, polynomials: Vec<DeltaPolynomial>) -> Self {
        EquationSet { family, delta_degree, polynomials }
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// The strict view: polynomials sorted canonically with exact duplicates
    /// removed.  Emission lists keep one entry per construction slot (wedge
    /// coefficient or `g`-monomial), which can repeat as polynomials.
    pub fn deduplicated(&self) -> EquationSet {
        let set: BTreeSet<DeltaPolynomial> = self.polynomials.iter().cloned().collect();
        EquationSet {
            family: self.family,
            delta_degree: self.delta_degree,
            polynomials: set.into_iter().collect(),
        }
    }
}

/// A label `x_i δ^1_J` of one row of the symbolic multiplication matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RowLabel {
    pub var: usize,
    pub j: MultiIndex,
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{} d1_{}", self.var, self.j)
    }
}

/// The matrix whose rows span `I_{r+1}`: one row `x_i δ^1_J` per variable
/// and per size-`(p(r)+1)` multi-index, columns indexed by the degree-`(r+1)`
/// monomial basis (1-based).  Every entry is `0` or a single signed Plücker
/// variable.
#[derive(Debug, Clone)]
pub struct SymbolicMatrix {
    rows: Vec<(RowLabel, BTreeMap<usize, DeltaPolynomial>)>,
    cols: usize,
}

impl SymbolicMatrix {
    pub fn rows(&self) -> &[(RowLabel, BTreeMap<usize, DeltaPolynomial>)] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> DeltaPolynomial {
        self.rows[row].1.get(&col).cloned().unwrap_or_default()
    }

    /// Position of a labelled row, if present.
    pub fn find_row(&self, label: &RowLabel) -> Option<usize> {
        self.rows.iter().position(|(l, _)| l == label)
    }

    /// Exact symbolic determinant of the square submatrix on the given rows
    /// and 1-based columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<DeltaPolynomial> {
        if rows.len() != cols.len() {
            return Err(Error::SelectionSizeMismatch(format!(
                "{} rows vs {} columns",
                rows.len(),
                cols.len()
            )));
        }
        for &r in rows {
            if r >= self.rows.len() {
                return Err(Error::SelectionSizeMismatch(format!("row {r} out of range")));
            }
        }
        for &c in cols {
            if c == 0 || c > self.cols {
                return Err(Error::SelectionSizeMismatch(format!("column {c} out of range")));
            }
        }
        // Laplace expansion along rows; entries are sparse (at most one
        // variable per column), so dead branches are skipped early.
        Ok(self.det_rec(rows, cols, &mut vec![false; cols.len()], 0))
    }

    fn det_rec(
        &self,
        rows: &[usize],
        cols: &[usize],
        used: &mut Vec<bool>,
        depth: usize,
    ) -> DeltaPolynomial {
        if depth == rows.len() {
            return DeltaPolynomial::constant(BigInt::one());
        }
        let row = &self.rows[rows[depth]].1;
        let mut acc = DeltaPolynomial::new();
        let mut parity = 0usize;
        for (pos, &col) in cols.iter().enumerate() {
            if used[pos] {
                continue;
            }
            if let Some(entry) = row.get(&col) {
                used[pos] = true;
                let sub = self.det_rec(rows, cols, used, depth + 1);
                used[pos] = false;
                if !sub.is_zero() {
                    let term = entry.clone() * sub;
                    // expansion along the first remaining row: the sign is
                    // the parity of the column among the unused ones
                    acc = if parity % 2 == 0 { acc + term } else { acc - term };
                }
            }
            parity += 1;
        }
        acc
    }
}

/// The full symbolic matrix of the families `x_i B_1`, rows ordered by
/// variable in display order (`x_n` first) and `J` lexicographic.
pub fn ik_matrix(pc: &PlueckerContext) -> Result<SymbolicMatrix> {
    let n = pc.hilbert().n() as usize;
    let mut rows = Vec::new();
    for var in (0..=n).rev() {
        for j in all_multi_indices(pc.big_n(), pc.p() + 1) {
            let gen = pc.xi_delta(var, 1, &j)?;
            let mut row = BTreeMap::new();
            for (key, coeff) in gen.terms() {
                row.insert(key.indices()[0] as usize, coeff.clone());
            }
            rows.push((RowLabel { var, j }, row));
        }
    }
    Ok(SymbolicMatrix { rows, cols: pc.big_n1() as usize })
}

/// Streams the minors of order `q(r+1)+1`, enumerating `(rows, columns)`
/// selections lexicographically.  `budget` caps the number of selections
/// examined; nonzero minors are yielded in order.
pub struct IkStream {
    matrix: SymbolicMatrix,
    order: usize,
    row_sel: Option<Vec<usize>>,
    col_sel: Option<Vec<usize>>,
    budget: usize,
    examined: usize,
    exhausted_budget: bool,
}

impl IkStream {
    pub fn new(pc: &PlueckerContext, budget: usize) -> Result<Self> {
        let matrix = ik_matrix(pc)?;
        let order = pc.hilbert().q_r1()? + 1;
        let row_sel = first_combination(matrix.row_count(), order);
        let col_sel = first_combination(matrix.col_count(), order).map(|mut c| {
            // columns are 1-based
            for v in &mut c {
                *v += 1;
            }
            c
        });
        Ok(IkStream {
            matrix,
            order,
            row_sel,
            col_sel,
            budget,
            examined: 0,
            exhausted_budget: false,
        })
    }

    /// True when iteration stopped because the budget ran out before the
    /// enumeration completed.
    pub fn budget_exhausted(&self) -> bool {
        self.exhausted_budget
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn advance(&mut self) {
        let n_cols = self.matrix.col_count();
        if let Some(cols) = &mut self.col_sel {
            let mut shifted: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
            if next_combination(&mut shifted, n_cols) {
                *cols = shifted.iter().map(|&c| c + 1).collect();
                return;
            }
        }
        // reset columns, advance rows
        self.col_sel = first_combination(n_cols, self.order).map(|mut c| {
            for v in &mut c {
                *v += 1;
            }
            c
        });
        if let Some(rows) = &mut self.row_sel {
            if !next_combination(rows, self.matrix.row_count()) {
                self.row_sel = None;
            }
        }
    }
}

impl Iterator for IkStream {
    type Item = DeltaPolynomial;

    fn next(&mut self) -> Option<DeltaPolynomial> {
        loop {
            let (rows, cols) = match (&self.row_sel, &self.col_sel) {
                (Some(r), Some(c)) => (r.clone(), c.clone()),
                _ => return None,
            };
            if self.examined == self.budget {
                self.exhausted_budget = true;
                return None;
            }
            self.examined += 1;
            let minor = self
                .matrix
                .minor(&rows, &cols)
                .expect("stream selections are well formed");
            self.advance();
            if !minor.is_zero() {
                return Some(minor.normalized());
            }
        }
    }
}

fn first_combination(n: usize, k: usize) -> Option<Vec<usize>> {
    if k > n {
        None
    } else {
        Some((0..k).collect())
    }
}

/// Advances a sorted index combination inside `0..n`; false when done.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in (i + 1)..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Wraps IkStream into an equation set (stops at `budget` selections).
pub fn ik_equations(pc: &PlueckerContext, budget: usize) -> Result<(EquationSet, bool)> {
    let degree = pc.hilbert().q_r1()? + 1;
    let mut stream = IkStream::new(pc, budget)?;
    let polynomials: Vec<DeltaPolynomial> = stream.by_ref().collect();
    let complete = !stream.budget_exhausted();
    Ok((EquationSet::new(Family::Ik, degree, polynomials), complete))
}

/// One wedge factor choice per variable: `(m_i, J_i)`, with `m_i = 0`
/// meaning the factor is omitted (its `J` must then be empty).
pub type BayerTuple = Vec<(usize, MultiIndex)>;

/// Selector for the wedge-coefficient equations: explicit tuples, or full
/// enumeration of all compositions (tiny cases only) with a budget on the
/// number of wedge products expanded.
pub enum BayerSelector {
    Full { budget: usize },
    Tuples(Vec<BayerTuple>),
}

fn validate_bayer_tuple(pc: &PlueckerContext, tuple: &BayerTuple) -> Result<()> {
    let ctx = pc.hilbert();
    let n = ctx.n() as usize;
    if tuple.len() != n + 1 {
        return Err(Error::BadComposition(format!(
            "a tuple needs one (m, J) entry per variable, got {} of {}",
            tuple.len(),
            n + 1
        )));
    }
    let total: usize = tuple.iter().map(|(m, _)| m).sum();
    let expected = ctx.q_r1()? + 1;
    if total != expected {
        return Err(Error::BadComposition(format!(
            "Σ m_i = {total}, expected q(r+1) + 1 = {expected}"
        )));
    }
    let q_r = ctx.q_r()?;
    for (m, j) in tuple {
        if *m > q_r {
            return Err(Error::BadComposition(format!("m = {m} exceeds q(r) = {q_r}")));
        }
        if *m == 0 && !j.is_empty() {
            return Err(Error::BadComposition("omitted factor must have empty J".into()));
        }
    }
    Ok(())
}

/// The wedge product of the lifted factors of one tuple, omitting `m = 0`
/// entries, factors ordered by variable in display order (`x_n` first).
pub fn bayer_wedge(
    pc: &PlueckerContext,
    tuple: &BayerTuple,
) -> Result<ExteriorElement<DeltaPolynomial>> {
    validate_bayer_tuple(pc, tuple)?;
    let mut acc = ExteriorElement::one(pc.big_n1(), DeltaPolynomial::constant(BigInt::one()));
    for (var, (m, j)) in tuple.iter().enumerate().rev() {
        if *m == 0 {
            continue;
        }
        let factor = pc.xi_delta(var, *m, j)?;
        acc = acc.wedge(&factor)?;
    }
    Ok(acc)
}

/// Emits the coefficients of the chosen wedge products as equations of
/// degree at most `n + 1`.  Within one wedge the coefficients come out in
/// ascending key order; tuples are processed in the given (or enumeration)
/// order.  Returns the set and a completeness flag (false when the full
/// enumeration hit its budget).
pub fn bayer_equations(pc: &PlueckerContext, selector: &BayerSelector) -> Result<(EquationSet, bool)> {
    let ctx = pc.hilbert();
    let n = ctx.n() as usize;
    let mut polynomials = Vec::new();
    let mut complete = true;
    let mut emit = |w: &ExteriorElement<DeltaPolynomial>| {
        for (_, coeff) in w.terms() {
            polynomials.push(coeff.normalized());
        }
    };
    match selector {
        BayerSelector::Tuples(tuples) => {
            for tuple in tuples {
                let w = bayer_wedge(pc, tuple)?;
                emit(&w);
            }
        }
        BayerSelector::Full { budget } => {
            let total = ctx.q_r1()? + 1;
            let q_r = ctx.q_r()?;
            let mut expanded = 0usize;
            'outer: for comp in compositions(total, n + 1, q_r) {
                // every J tuple for this composition
                let choices: Vec<Vec<MultiIndex>> = comp
                    .iter()
                    .map(|&m| {
                        if m == 0 {
                            vec![MultiIndex::empty()]
                        } else {
                            all_multi_indices(pc.big_n(), pc.p() + m)
                        }
                    })
                    .collect();
                let mut cursor = vec![0usize; n + 1];
                loop {
                    if expanded == *budget {
                        complete = false;
                        break 'outer;
                    }
                    expanded += 1;
                    let tuple: BayerTuple = comp
                        .iter()
                        .zip(cursor.iter())
                        .enumerate()
                        .map(|(i, (&m, &c))| (m, choices[i][c].clone()))
                        .collect();
                    let w = bayer_wedge(pc, &tuple)?;
                    emit(&w);
                    // advance the mixed-radix cursor
                    let mut pos = n + 1;
                    loop {
                        if pos == 0 {
                            break;
                        }
                        pos -= 1;
                        cursor[pos] += 1;
                        if cursor[pos] < choices[pos].len() {
                            break;
                        }
                        cursor[pos] = 0;
                        if pos == 0 {
                            pos = usize::MAX;
                            break;
                        }
                    }
                    if pos == usize::MAX {
                        break;
                    }
                }
            }
        }
    }
    Ok((EquationSet::new(Family::Bayer, n + 1, polynomials), complete))
}

/// All compositions of `total` into `parts` nonnegative integers bounded by
/// `max_part`, in descending lexicographic order.
pub fn compositions(total: usize, parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; parts];
    fn rec(
        out: &mut Vec<Vec<usize>>,
        current: &mut Vec<usize>,
        pos: usize,
        left: usize,
        max_part: usize,
    ) {
        if pos + 1 == current.len() {
            if left <= max_part {
                current[pos] = left;
                out.push(current.clone());
            }
            return;
        }
        let hi = left.min(max_part);
        for m in (0..=hi).rev() {
            current[pos] = m;
            rec(out, current, pos + 1, left - m, max_part);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut out, &mut current, 0, total, max_part);
    out
}

/// Degree-`r` basis positions whose monomials involve some `x_i`, `i <= d`
/// (the complement of the small coordinate ring), 1-based, ascending.
fn outside_small_ring(pc: &PlueckerContext) -> Vec<u32> {
    let d = pc.hilbert().d();
    pc.basis_r()
        .monomials()
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.in_small_ring(d))
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// The left wedge factors of the local families: for each composition
/// `(m_0..m_d)` of `q'(r+1)` and each choice of `J_i`, the product
/// `∧_{i <= d, m_i > 0} x_i δ^{m_i}_{J_i}` (factors in ascending `i`).
fn left_factors(pc: &PlueckerContext) -> Result<Vec<ExteriorElement<DeltaPolynomial>>> {
    let ctx = pc.hilbert();
    let d = ctx.d() as usize;
    let qprime_r1 = ctx.qprime_r1()?;
    let q_r = ctx.q_r()?;
    let mut out = Vec::new();
    for comp in compositions(qprime_r1, d + 1, q_r) {
        let choices: Vec<Vec<MultiIndex>> = comp
            .iter()
            .map(|&m| {
                if m == 0 {
                    vec![MultiIndex::empty()]
                } else {
                    all_multi_indices(pc.big_n(), pc.p() + m)
                }
            })
            .collect();
        let mut cursor = vec![0usize; d + 1];
        loop {
            let mut acc =
                ExteriorElement::one(pc.big_n1(), DeltaPolynomial::constant(BigInt::one()));
            for i in 0..=d {
                if comp[i] == 0 {
                    continue;
                }
                let factor = pc.xi_delta(i, comp[i], &choices[i][cursor[i]])?;
                acc = acc.wedge(&factor)?;
            }
            if !acc.is_zero() {
                out.push(acc);
            }
            // advance cursor
            let mut pos = d + 1;
            let mut done = false;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                cursor[pos] += 1;
                if cursor[pos] < choices[pos].len() {
                    break;
                }
                cursor[pos] = 0;
            }
            if done && cursor.iter().all(|&c| c == 0) {
                break;
            }
            if done {
                break;
            }
        }
    }
    Ok(out)
}

/// The first local family: coefficients of
/// `(∧_{i<=d} x_i δ^{m_i}_{J_i}) ∧ x_j δ^1_K` over all compositions of
/// `q'(r+1)`, all `J_i`, all `K` whose monomials all lie outside
/// `k[x_{d+1},...,x_n]_r`, and all `j > d` (descending).  Degrees are at
/// most `d + 2`.
pub fn blmr_t1(pc: &PlueckerContext) -> Result<EquationSet> {
    let ctx = pc.hilbert();
    if ctx.d() >= ctx.n() {
        return Err(Error::DegenerateDimension { d: ctx.d(), n: ctx.n() });
    }
    let d = ctx.d() as usize;
    let n = ctx.n() as usize;
    let outside = outside_small_ring(pc);
    let lefts = left_factors(pc)?;
    let mut polynomials = Vec::new();
    for left in &lefts {
        for j in (d + 1..=n).rev() {
            for k in combinations(&outside, pc.p() + 1) {
                let lift = pc.xi_delta(j, 1, &k)?;
                let w = left.wedge(&lift)?;
                for (_, coeff) in w.terms() {
                    polynomials.push(coeff.normalized());
                }
            }
        }
    }
    Ok(EquationSet::new(Family::BlmrT1, ctx.d() as usize + 2, polynomials))
}

/// A labelled difference element of the second local family:
/// `x_{j'} δ^1_{H ∪ {h}} - x_j δ^1_{H ∪ {h'}}` where `x^{α(h)} = x_j x^γ`
/// and `x^{α(h')} = x_{j'} x^γ`.
#[derive(Debug, Clone)]
pub struct DifferenceElement {
    pub h: MultiIndex,
    pub gamma: crate::monom::Monomial,
    pub var_hi: usize,
    pub var_lo: usize,
    pub element: ExteriorElement<DeltaPolynomial>,
}

/// The difference elements feeding the second local family, enumerated by
/// `H` (lexicographic), `γ` (basis order), and unordered variable pairs
/// `{j, j'}` with `j > j'`.  Combinations where `h` or `h'` already lies in
/// `H` are skipped.
pub fn blmr_t2_difference_elements(pc: &PlueckerContext) -> Result<Vec<DifferenceElement>> {
    let ctx = pc.hilbert();
    if ctx.d() >= ctx.n() {
        return Err(Error::DegenerateDimension { d: ctx.d(), n: ctx.n() });
    }
    let d = ctx.d();
    let n = ctx.n() as usize;
    let outside = outside_small_ring(pc);
    let basis_r = pc.basis_r();
    let gammas: Vec<crate::monom::Monomial> = if ctx.r() >= 1 {
        crate::monom::MonomialBasis::new(ctx.n(), ctx.r() - 1)
            .monomials()
            .iter()
            .filter(|m| m.in_small_ring(d))
            .cloned()
            .collect()
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for h_set in combinations(&outside, pc.p()) {
        for gamma in &gammas {
            for var_hi in (d as usize + 1..=n).rev() {
                for var_lo in (d as usize + 1..var_hi).rev() {
                    // h_bar multiplies by the greater variable
                    let m_hi = gamma.mul_var(var_hi);
                    let m_lo = gamma.mul_var(var_lo);
                    let h_bar = basis_r.index_of(&m_hi).expect("degree r") as u32;
                    let h_bar_prime = basis_r.index_of(&m_lo).expect("degree r") as u32;
                    let (Some(h1), Some(h2)) =
                        (h_set.with_index(h_bar), h_set.with_index(h_bar_prime))
                    else {
                        continue;
                    };
                    let first = pc.xi_delta(var_lo, 1, &h1)?;
                    let second = pc.xi_delta(var_hi, 1, &h2)?;
                    let element = first.sub(&second)?;
                    out.push(DifferenceElement {
                        h: h_set.clone(),
                        gamma: gamma.clone(),
                        var_hi,
                        var_lo,
                        element,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The second local family: coefficients of
/// `(∧_{i<=d} x_i δ^{m_i}_{J_i}) ∧ (x_{j'} δ^1_{H∪{h}} - x_j δ^1_{H∪{h'}})`.
pub fn blmr_t2(pc: &PlueckerContext) -> Result<EquationSet> {
    let ctx = pc.hilbert();
    let lefts = left_factors(pc)?;
    let diffs = blmr_t2_difference_elements(pc)?;
    let mut polynomials = Vec::new();
    for left in &lefts {
        for diff in &diffs {
            let w = left.wedge(&diff.element)?;
            for (_, coeff) in w.terms() {
                polynomials.push(coeff.normalized());
            }
        }
    }
    Ok(EquationSet::new(Family::BlmrT2, ctx.d() as usize + 2, polynomials))
}

// ---------------------------------------------------------------------------
// Symbolic PGL action
// ---------------------------------------------------------------------------

/// A sparse polynomial in the entries `g[a,b]` of a generic coordinate
/// change, with arbitrary-precision integer coefficients.  Exponent vectors
/// are flat: index `(a-1)(n+1) + (b-1)` holds the exponent of `g[a,b]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GPolynomial {
    gvars: usize,
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl GPolynomial {
    pub fn zero(gvars: usize) -> Self {
        GPolynomial { gvars, terms: BTreeMap::new() }
    }

    pub fn one(gvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u16; gvars], BigInt::one());
        GPolynomial { gvars, terms }
    }

    /// The single variable `g[a,b]`, 1-based, in an `(n+1) x (n+1)` matrix.
    pub fn variable(n: usize, a: usize, b: usize) -> Self {
        let gvars = (n + 1) * (n + 1);
        let mut exp = vec![0u16; gvars];
        exp[(a - 1) * (n + 1) + (b - 1)] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, BigInt::one());
        GPolynomial { gvars, terms }
    }

    pub fn gvars(&self) -> usize {
        self.gvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&v| v as usize).sum()).max()
    }

    pub fn add_assign(&mut self, other: &GPolynomial) {
        for (e, c) in &other.terms {
            let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *slot += c;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn mul(&self, other: &GPolynomial) -> GPolynomial {
        let mut terms: HashMap<Vec<u16>, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = ea.clone();
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x += y;
                }
                let slot = terms.entry(e).or_insert_with(BigInt::zero);
                *slot += ca * cb;
            }
        }
        let terms: BTreeMap<Vec<u16>, BigInt> =
            terms.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        GPolynomial { gvars: self.gvars, terms }
    }

    pub fn scale(&self, c: &BigInt) -> GPolynomial {
        if c.is_zero() {
            return GPolynomial::zero(self.gvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        GPolynomial { gvars: self.gvars, terms }
    }

    pub fn negated(&self) -> GPolynomial {
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect();
        GPolynomial { gvars: self.gvars, terms }
    }

    /// Human-readable form, e.g. `2*g[1,1]*g[1,2]`; variables in index order.
    pub fn to_text(&self, n: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mut factors = Vec::new();
            let all_zero = e.iter().all(|&v| v == 0);
            if !mag.is_one() || all_zero {
                factors.push(mag.to_string());
            }
            for (idx, &pow) in e.iter().enumerate() {
                if pow == 0 {
                    continue;
                }
                let a = idx / (n + 1) + 1;
                let b = idx % (n + 1) + 1;
                let var = format!("g[{a},{b}]");
                if pow == 1 {
                    factors.push(var);
                } else {
                    factors.push(format!("{var}^{pow}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the textual form produced by [`GPolynomial::to_text`]; also
    /// accepts the compact `g11` style for single-digit indices.
    pub fn parse_text(input: &str, n: usize) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(GPolynomial::zero((n + 1) * (n + 1)));
        }
        let mut poly = GPolynomial::zero((n + 1) * (n + 1));
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
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                if bytes[pos] == b'[' {
                    while pos < bytes.len() && bytes[pos] != b']' {
                        pos += 1;
                    }
                }
                pos += 1;
            }
            let term = &compact[start..pos];
            let mut coeff = sign;
            let mut exp = vec![0u16; (n + 1) * (n + 1)];
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{term}`")));
                }
                let (base, power) = match factor.rsplit_once('^') {
                    Some((b, p)) => (
                        b,
                        p.parse::<u16>()
                            .map_err(|_| Error::Parse(format!("bad power in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let parse_ab = |a: usize, b: usize| -> Result<usize> {
                    if a == 0 || b == 0 || a > n + 1 || b > n + 1 {
                        return Err(Error::Parse(format!("g index out of range in `{base}`")));
                    }
                    Ok((a - 1) * (n + 1) + (b - 1))
                };
                if let Some(body) = base.strip_prefix("g[") {
                    let body = body
                        .strip_suffix(']')
                        .ok_or_else(|| Error::Parse(format!("unterminated `{base}`")))?;
                    let (a, b) = body
                        .split_once(',')
                        .ok_or_else(|| Error::Parse(format!("bad g variable `{base}`")))?;
                    let a: usize =
                        a.parse().map_err(|_| Error::Parse(format!("bad index `{a}`")))?;
                    let b: usize =
                        b.parse().map_err(|_| Error::Parse(format!("bad index `{b}`")))?;
                    exp[parse_ab(a, b)?] += power;
                } else if let Some(body) = base.strip_prefix('g') {
                    let digits: Vec<char> = body.chars().collect();
                    if digits.len() != 2 || !digits.iter().all(|c| c.is_ascii_digit()) {
                        return Err(Error::Parse(format!("bad g variable `{base}`")));
                    }
                    let a = digits[0].to_digit(10).unwrap() as usize;
                    let b = digits[1].to_digit(10).unwrap() as usize;
                    exp[parse_ab(a, b)?] += power;
                } else {
                    let c: BigInt = base
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{base}`")))?;
                    for _ in 0..power {
                        coeff *= &c;
                    }
                }
            }
            let slot = poly.terms.entry(exp).or_insert_with(BigInt::zero);
            *slot += coeff;
        }
        poly.terms.retain(|_, v| !v.is_zero());
        Ok(poly)
    }
}

/// A bihomogeneous polynomial: sparse map from `g`-exponent vectors to
/// `Δ`-polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedPolynomial {
    gvars: usize,
    terms: BTreeMap<Vec<u16>, DeltaPolynomial>,
}

impl BigradedPolynomial {
    pub fn gvars(&self) -> usize {
        self.gvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &DeltaPolynomial)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn g_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&v| v as usize).sum()).max()
    }

    pub fn delta_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(DeltaPolynomial::degree).max()
    }

    pub fn coefficient(&self, gexp: &[u16]) -> DeltaPolynomial {
        self.terms.get(gexp).cloned().unwrap_or_default()
    }
}

/// The matrix of the induced action of a generic `g` on `S_r`: entry
/// `(a, b)` is the `g`-polynomial coefficient of `x^{α(b)}` in `g.x^{α(a)}`.
pub fn induced_action_symbolic(pc: &PlueckerContext) -> Vec<Vec<GPolynomial>> {
    let n = pc.hilbert().n() as usize;
    let basis = pc.basis_r();
    let gvars = (n + 1) * (n + 1);
    // display position of x_i is n + 1 - i (1-based)
    let pos = |i: usize| n + 1 - i;
    let mut rows = Vec::with_capacity(basis.len());
    for mono in basis.monomials() {
        // expand prod_i (Σ_j g[pos(i), pos(j)] x_j)^{e_i}
        let mut acc: HashMap<Vec<u32>, GPolynomial> = HashMap::new();
        acc.insert(vec![0; n + 1], GPolynomial::one(gvars));
        for (i, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                let mut next: HashMap<Vec<u32>, GPolynomial> = HashMap::new();
                for (exps, coeff) in &acc {
                    for j in 0..=n {
                        let gij = GPolynomial::variable(n, pos(i), pos(j));
                        let mut key = exps.clone();
                        key[j] += 1;
                        let prod = coeff.mul(&gij);
                        next.entry(key)
                            .or_insert_with(|| GPolynomial::zero(gvars))
                            .add_assign(&prod);
                    }
                }
                acc = next;
            }
        }
        let mut row = vec![GPolynomial::zero(gvars); basis.len()];
        for (exps, coeff) in acc {
            let b = basis
                .index_of(&crate::monom::Monomial::new(exps))
                .expect("expansion stays in degree r");
            row[b - 1].add_assign(&coeff);
        }
        rows.push(row);
    }
    rows
}

fn gdet(m: &[Vec<GPolynomial>], rows: &[usize], cols: &[usize], gvars: usize) -> GPolynomial {
    fn rec(
        m: &[Vec<GPolynomial>],
        rows: &[usize],
        cols: &[usize],
        used: &mut Vec<bool>,
        depth: usize,
        gvars: usize,
    ) -> GPolynomial {
        if depth == rows.len() {
            return GPolynomial::one(gvars);
        }
        let mut acc = GPolynomial::zero(gvars);
        let mut parity = 0usize;
        for (pos, &col) in cols.iter().enumerate() {
            if used[pos] {
                continue;
            }
            let entry = &m[rows[depth]][col];
            if !entry.is_zero() {
                used[pos] = true;
                let sub = rec(m, rows, cols, used, depth + 1, gvars);
                used[pos] = false;
                if !sub.is_zero() {
                    let term = entry.mul(&sub);
                    if parity % 2 == 0 {
                        acc.add_assign(&term);
                    } else {
                        acc.add_assign(&term.negated());
                    }
                }
            }
            parity += 1;
        }
        acc
    }
    rec(m, rows, cols, &mut vec![false; cols.len()], 0, gvars)
}

/// The symbolic action of a generic coordinate change on the Plücker
/// coordinates: for each `Δ_I`,
///
/// ```text
/// g.Δ_I = ε_{H|I} Σ_K ε_{K|K^c} det(M[K, H]) Δ_{K^c},    H = I^c,
/// ```
///
/// where `M` is the induced matrix on `S_r` and `K` runs over size-`q`
/// multi-indices.  Each `g.Δ_I` is bihomogeneous of degree 1 in `Δ` and
/// `q(r) · r` in the `g` variables, and evaluating at a concrete `g` gives
/// exactly the coordinates of the translated subspace.
pub struct PglAction {
    gvars: usize,
    delta_indices: Vec<MultiIndex>,
    index_of: HashMap<MultiIndex, usize>,
    /// `rows[i][k] = (target index position, g-polynomial)`
    rows: Vec<Vec<(usize, GPolynomial)>>,
}

impl PglAction {
    pub fn gvars(&self) -> usize {
        self.gvars
    }

    pub fn delta_indices(&self) -> &[MultiIndex] {
        &self.delta_indices
    }

    /// `g.Δ_I` as a list of `(target Δ index, g-polynomial)` pairs.
    pub fn image_of(&self, index: &MultiIndex) -> Option<&[(usize, GPolynomial)]> {
        self.index_of.get(index).map(|&i| self.rows[i].as_slice())
    }

    /// `g.Δ_I` as a public bigraded polynomial.
    pub fn image_as_bigraded(&self, index: &MultiIndex) -> Option<BigradedPolynomial> {
        let row = self.image_of(index)?;
        let mut terms: BTreeMap<Vec<u16>, DeltaPolynomial> = BTreeMap::new();
        for (target, gp) in row {
            let var = DeltaPolynomial::variable(self.delta_indices[*target].clone());
            for (e, c) in gp.terms() {
                let slot = terms.entry(e.clone()).or_default();
                *slot = std::mem::take(slot) + var.scale(c);
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Some(BigradedPolynomial { gvars: self.gvars, terms })
    }
}

/// Computes the full symbolic action, one row per `Δ` index.
pub fn pgl_action_on_plucker(pc: &PlueckerContext) -> Result<PglAction> {
    let n = pc.hilbert().n() as usize;
    let gvars = (n + 1) * (n + 1);
    let big_n = pc.big_n();
    let q = pc.q();
    let m = induced_action_symbolic(pc);
    let delta_indices = pc.delta_indices();
    let index_of: HashMap<MultiIndex, usize> =
        delta_indices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    let k_sets = all_multi_indices(big_n, q);
    // precompute the signs ε_{K|K^c} and complements
    let k_data: Vec<(Vec<usize>, i32, usize)> = k_sets
        .iter()
        .map(|k| {
            let comp = k.complement(big_n);
            let sign = sign_of_concat(k.indices(), comp.indices());
            let target = index_of[&comp];
            let rows: Vec<usize> = k.indices().iter().map(|&v| v as usize - 1).collect();
            (rows, sign, target)
        })
        .collect();
    let rows: Vec<Vec<(usize, GPolynomial)>> = delta_indices
        .par_iter()
        .map(|i_set| {
            let h = i_set.complement(big_n);
            let outer_sign = sign_of_concat(h.indices(), i_set.indices());
            let cols: Vec<usize> = h.indices().iter().map(|&v| v as usize - 1).collect();
            let mut row: Vec<(usize, GPolynomial)> = Vec::new();
            for (k_rows, k_sign, target) in &k_data {
                let det = gdet(&m, k_rows, &cols, gvars);
                if det.is_zero() {
                    continue;
                }
                let total_sign = outer_sign * k_sign;
                let det = if total_sign < 0 { det.negated() } else { det };
                row.push((*target, det));
            }
            row.sort_by_key(|(t, _)| *t);
            row
        })
        .collect();
    Ok(PglAction { gvars, delta_indices, index_of, rows })
}

/// Substitutes `g.Δ` into `P` and collects, one per `g`-monomial of the
/// result, the normalized `Δ`-coefficient polynomials: the globalized
/// equations attached to `P`.  Coefficients are emitted in `g`-monomial
/// order; distinct `g`-monomials can carry equal polynomials, so use
/// [`EquationSet::deduplicated`] for the strict set.
pub fn blmr_full(pc: &PlueckerContext, p: &DeltaPolynomial) -> Result<EquationSet> {
    let action = pgl_action_on_plucker(pc)?;
    blmr_full_with_action(pc, p, &action)
}

/// As [`blmr_full`] with a precomputed action (the action only depends on
/// the context, so it can be shared across several `P`).
pub fn blmr_full_with_action(
    _pc: &PlueckerContext,
    p: &DeltaPolynomial,
    action: &PglAction,
) -> Result<EquationSet> {
    if !p.is_homogeneous() {
        return Err(Error::BadComposition(
            "the input polynomial must be homogeneous in the Plücker variables".into(),
        ));
    }
    let degree = p.degree().unwrap_or(0);
    // expand g.P monomial by monomial; partial products are merged by their
    // target Δ-monomial so the symmetric combinations share work
    let mut acc: BTreeMap<Vec<usize>, GPolynomial> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let mut partial: BTreeMap<Vec<usize>, GPolynomial> = BTreeMap::new();
        partial.insert(Vec::new(), GPolynomial::one(action.gvars()));
        for var in mono.vars() {
            let row = action.image_of(var).ok_or_else(|| {
                Error::BadMultiIndex(format!("Δ index {var} does not fit the context"))
            })?;
            let entries: Vec<(Vec<usize>, GPolynomial)> = partial
                .into_iter()
                .collect::<Vec<_>>()
                .par_iter()
                .flat_map(|(dm, gp)| {
                    row.par_iter().map(move |(target, gpoly)| {
                        let mut key = dm.clone();
                        let pos = key.binary_search(target).unwrap_or_else(|e| e);
                        key.insert(pos, *target);
                        (key, gp.mul(gpoly))
                    })
                })
                .collect();
            let mut merged: BTreeMap<Vec<usize>, GPolynomial> = BTreeMap::new();
            for (key, gp) in entries {
                match merged.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(gp);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        e.get_mut().add_assign(&gp);
                    }
                }
            }
            partial = merged;
        }
        for (key, gp) in partial {
            let scaled = gp.scale(c);
            match acc.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !scaled.is_zero() {
                        e.insert(scaled);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    e.get_mut().add_assign(&scaled);
                }
            }
        }
    }
    // transpose: g-exponent -> Δ-polynomial, in g-monomial order
    let mut transpose: BTreeMap<Vec<u16>, Vec<(usize, BigInt)>> = BTreeMap::new();
    let dm_table: Vec<Vec<usize>> = acc.keys().cloned().collect();
    for (dm_id, (_, gp)) in acc.iter().enumerate() {
        for (e, c) in gp.terms() {
            transpose.entry(e.clone()).or_default().push((dm_id, c.clone()));
        }
    }
    let mut polynomials = Vec::new();
    for (_, entries) in transpose {
        let mut poly = DeltaPolynomial::new();
        for (dm_id, c) in entries {
            let vars: Vec<MultiIndex> = dm_table[dm_id]
                .iter()
                .map(|&t| action.delta_indices[t].clone())
                .collect();
            poly.add_term(DeltaMonomial::from_vars(vars), c);
        }
        if !poly.is_zero() {
            polynomials.push(poly.normalized());
        }
    }
    Ok(EquationSet::new(Family::BlmrFull, degree, polynomials))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbpoly::{poly_from_ints, HilbertPolynomialContext};

    fn two_points_pc() -> PlueckerContext {
        let ctx =
            HilbertPolynomialContext::gotzmann_decompose(&poly_from_ints(&[2]), 2).unwrap();
        PlueckerContext::new(&ctx).unwrap()
    }

    fn line_pc() -> PlueckerContext {
        let ctx =
            HilbertPolynomialContext::gotzmann_decompose(&poly_from_ints(&[1]), 1).unwrap();
        PlueckerContext::new(&ctx).unwrap()
    }

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ik_matrix_shape() {
        let pc = two_points_pc();
        let m = ik_matrix(&pc).unwrap();
        assert_eq!(m.row_count(), 3 * 20);
        assert_eq!(m.col_count(), 10);
        // first row block is x2, then x1, then x0
        assert_eq!(m.rows()[0].0.var, 2);
        assert_eq!(m.rows()[20].0.var, 1);
        assert_eq!(m.rows()[40].0.var, 0);
    }

    #[test]
    fn ik_matrix_first_example_row() {
        let pc = two_points_pc();
        let m = ik_matrix(&pc).unwrap();
        let row = m.find_row(&RowLabel { var: 2, j: mi(&[1, 2, 6]) }).unwrap();
        assert_eq!(m.entry(row, 1).to_text(), "D[2,6]");
        assert_eq!(m.entry(row, 2).to_text(), "-D[1,6]");
        assert_eq!(m.entry(row, 8).to_text(), "D[1,2]");
        for col in [3, 4, 5, 6, 7, 9, 10] {
            assert!(m.entry(row, col).is_zero());
        }
    }

    #[test]
    fn toy_minor_matches_cofactor_oracle() {
        // p = 1 on P^1: 2 rows (one J per variable) over 3 columns, entries
        // single variables; check every 2 x 2 minor against the hand
        // expansion
        let pc = line_pc();
        let m = ik_matrix(&pc).unwrap();
        assert_eq!(m.row_count(), 2);
        assert_eq!(m.col_count(), 3);
        let naive = |r0: usize, r1: usize, c0: usize, c1: usize| {
            m.entry(r0, c0) * m.entry(r1, c1) - m.entry(r0, c1) * m.entry(r1, c0)
        };
        for cols in [[1usize, 2], [1, 3], [2, 3]] {
            let fast = m.minor(&[0, 1], &cols).unwrap();
            assert_eq!(fast, naive(0, 1, cols[0], cols[1]));
            assert!(!fast.is_zero());
        }
    }

    #[test]
    fn minor_with_repeated_row_vanishes() {
        let pc = two_points_pc();
        let m = ik_matrix(&pc).unwrap();
        let rows = vec![0, 0, 1, 2, 3, 4, 5, 6, 7];
        let cols: Vec<usize> = (1..=9).collect();
        assert!(m.minor(&rows, &cols).unwrap().is_zero());
    }

    #[test]
    fn minor_selection_mismatch() {
        let pc = line_pc();
        let m = ik_matrix(&pc).unwrap();
        assert!(matches!(
            m.minor(&[0, 1], &[1]),
            Err(Error::SelectionSizeMismatch(_))
        ));
    }

    #[test]
    fn ik_stream_is_deterministic_and_budgeted() {
        // the toy case has fewer rows than the required order, so the
        // stream is empty but complete
        let (set0, complete0) = ik_equations(&line_pc(), 10).unwrap();
        assert!(complete0);
        assert!(set0.is_empty());
        // the two-points case streams order-9 minors out of a 60 x 10 matrix
        let pc = two_points_pc();
        let (set1, complete1) = ik_equations(&pc, 25).unwrap();
        let (set2, complete2) = ik_equations(&pc, 25).unwrap();
        assert!(!complete1 && !complete2);
        assert_eq!(set1, set2);
        assert_eq!(set1.delta_degree, 9);
        for p in &set1.polynomials {
            assert_eq!(p.degree(), Some(9));
        }
    }

    #[test]
    fn bayer_tuple_validation() {
        let pc = two_points_pc();
        // Σ m_i must be 9
        let bad = vec![(4, mi(&[1, 2, 3, 4, 5, 6])), (4, mi(&[1, 3, 4, 6])), (2, mi(&[1, 2, 3, 4]))];
        assert!(matches!(
            bayer_wedge(&pc, &bad),
            Err(Error::BadComposition(_))
        ));
        // m_i > q(r) rejected
        let bad = vec![(5, mi(&[1, 2, 3, 4, 5, 6])), (3, mi(&[1, 2, 4, 5, 6])), (1, mi(&[1, 2, 3]))];
        assert!(bayer_wedge(&pc, &bad).is_err());
    }

    #[test]
    fn bayer_disjoint_slots_vanish() {
        let pc = two_points_pc();
        // x δ^4 and y δ^4 both live in 4 wedge slots; together with z δ^1
        // the count reaches 9 slots out of 10, fine; but forcing the same
        // slots via equal factors kills the product
        let t = vec![
            (4, mi(&[1, 2, 3, 4, 5, 6])),
            (4, mi(&[1, 2, 3, 4, 5, 6])),
            (1, mi(&[1, 2, 3])),
        ];
        let w = bayer_wedge(&pc, &t).unwrap();
        // x-lift and y-lift of the same δ^4 share no slots in general, so
        // this particular product need not vanish; just confirm the shape
        assert_eq!(w.step(), 9);
    }

    #[test]
    fn compositions_are_descending() {
        let c = compositions(9, 3, 4);
        assert_eq!(c.first().unwrap(), &vec![4, 4, 1]);
        assert_eq!(c.last().unwrap(), &vec![1, 4, 4]);
        assert_eq!(c.len(), 10);
        assert!(c.iter().all(|v| v.iter().sum::<usize>() == 9));
    }

    #[test]
    fn blmr_t1_counts_for_two_points() {
        let pc = two_points_pc();
        let set = blmr_t1(&pc).unwrap();
        assert_eq!(set.len(), 12);
        assert_eq!(set.delta_degree, 2);
        for p in &set.polynomials {
            assert!(p.degree().unwrap_or(0) <= 2);
        }
    }

    #[test]
    fn blmr_t2_difference_elements_for_two_points() {
        let pc = two_points_pc();
        let diffs = blmr_t2_difference_elements(&pc).unwrap();
        assert_eq!(diffs.len(), 6);
        // first: H = {4,5}, γ = x2, element y δ^1_{145} - x δ^1_{245}
        assert_eq!(diffs[0].h, mi(&[4, 5]));
        assert_eq!(diffs[0].gamma.to_string(), "x2");
        assert_eq!(diffs[0].var_hi, 2);
        assert_eq!(diffs[0].var_lo, 1);
    }

    #[test]
    fn blmr_t2_counts_for_two_points() {
        let pc = two_points_pc();
        let set = blmr_t2(&pc).unwrap();
        assert_eq!(set.len(), 36);
        assert_eq!(set.delta_degree, 2);
    }

    #[test]
    fn gpolynomial_text_round_trip() {
        let p = GPolynomial::parse_text("2*g[1,1]*g[1,2]-g[2,3]^2", 2).unwrap();
        assert_eq!(p.to_text(2), "-g[2,3]^2+2*g[1,1]*g[1,2]");
        assert_eq!(GPolynomial::parse_text(&p.to_text(2), 2).unwrap(), p);
        let q = GPolynomial::parse_text("g11^2", 2).unwrap();
        assert_eq!(q.to_text(2), "g[1,1]^2");
    }

    #[test]
    fn induced_action_first_row() {
        let pc = two_points_pc();
        let m = induced_action_symbolic(&pc);
        // g.x^2 = g11^2 x^2 + 2 g11 g12 xy + g12^2 y^2 + 2 g11 g13 xz
        //         + 2 g12 g13 yz + g13^2 z^2
        let expected = [
            "g[1,1]^2",
            "2*g[1,1]*g[1,2]",
            "g[1,2]^2",
            "2*g[1,1]*g[1,3]",
            "2*g[1,2]*g[1,3]",
            "g[1,3]^2",
        ];
        for (b, text) in expected.iter().enumerate() {
            assert_eq!(m[0][b], GPolynomial::parse_text(text, 2).unwrap());
        }
    }

    #[test]
    fn pgl_identity_acts_trivially() {
        // evaluating g.Δ_I at g = identity returns Δ_I exactly
        let pc = two_points_pc();
        let action = pgl_action_on_plucker(&pc).unwrap();
        let n = 2usize;
        let id_exp = |e: &Vec<u16>| -> bool {
            // identity: g[a,b] = δ_ab; a monomial survives iff it only uses
            // diagonal variables
            e.iter().enumerate().all(|(idx, &pow)| {
                pow == 0 || (idx / (n + 1)) == (idx % (n + 1))
            })
        };
        for i_set in action.delta_indices() {
            let row = action.image_of(i_set).unwrap();
            let mut value = DeltaPolynomial::new();
            for (target, gp) in row {
                let mut total = BigInt::zero();
                for (e, c) in gp.terms() {
                    if id_exp(e) {
                        total += c;
                    }
                }
                if !total.is_zero() {
                    value = value
                        + DeltaPolynomial::variable(action.delta_indices()[*target].clone())
                            .scale(&total);
                }
            }
            assert_eq!(value, DeltaPolynomial::variable(i_set.clone()), "at {i_set}");
        }
    }
}
