//! Exact rational verification: Plücker coordinates of explicit subspaces,
//! the persistence rank oracle deciding Hilbert scheme membership, the open
//! chart test, point sampling and equation evaluation.
//!
//! All ranks and determinants are computed by fraction-free (Bareiss)
//! elimination on integer matrices obtained by clearing row denominators;
//! no floating point is involved anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hilbpoly::HilbertPolynomialContext;
use crate::monom::{Monomial, MonomialBasis};
use crate::plucker::{
    all_multi_indices, theta_to_delta, CoordinateVector, DeltaPolynomial, PlueckerContext,
};
use crate::{Error, Result};

/// A dense matrix over the exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RationalMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// A new matrix keeping only the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zero(self.rows, cols.len());
        for i in 0..self.rows {
            for (jo, &j) in cols.iter().enumerate() {
                out[(i, jo)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Rows scaled to integers by the lcm of their denominators.  Row scaling
    /// changes neither the rank nor the vanishing of minors.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for v in self.row(i) {
                    lcm = lcm.lcm(v.denom());
                }
                let lcm = BigRational::from(lcm);
                self.row(i).iter().map(|v| (v * &lcm).to_integer()).collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return BigRational::one();
        }
        let mut scale = BigRational::one();
        let mut int_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for v in self.row(i) {
                lcm = lcm.lcm(v.denom());
            }
            let lcm = BigRational::from(lcm);
            scale *= &lcm;
            int_rows.push(self.row(i).iter().map(|v| (v * &lcm).to_integer()).collect::<Vec<_>>());
        }
        BigRational::from(bareiss_det(int_rows)) / scale
    }

    /// A basis of the right kernel `{ v : M v = 0 }`, by reduced row echelon
    /// form over the rationals.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == m.len() {
                break;
            }
            let Some(pr) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].clone();
            for v in &mut m[row] {
                *v /= inv.clone();
            }
            for i in 0..m.len() {
                if i != row && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for j in 0..self.cols {
                        let sub = &m[row][j] * &f;
                        m[i][j] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[pi][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch("matrix product shapes".into()));
        }
        let mut out = RationalMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

/// Fraction-free row echelon; returns the rank.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                let v = (&m[i][j] * &pivot - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Fraction-free determinant; 0 for singular matrices.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// A point of the Grassmannian `Gr^{p(r)}(S_r)`: a full-rank
/// `q(r) × dim S_r` matrix whose rows are the coordinates of a basis of
/// `I_r` in the degree-`r` monomial basis.
#[derive(Debug, Clone)]
pub struct RationalSubspace {
    pc: PlueckerContext,
    matrix: RationalMatrix,
}

impl RationalSubspace {
    pub fn new(ctx: &HilbertPolynomialContext, matrix: RationalMatrix) -> Result<Self> {
        let pc = PlueckerContext::new(ctx)?;
        Self::with_context(pc, matrix)
    }

    pub fn with_context(pc: PlueckerContext, matrix: RationalMatrix) -> Result<Self> {
        let q = pc.q();
        let n = pc.big_n() as usize;
        if matrix.rows() != q || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "subspace matrix must be {q} x {n}, got {} x {}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.rank() != q {
            return Err(Error::RankDeficient(format!(
                "subspace matrix does not have full row rank {q}"
            )));
        }
        Ok(RationalSubspace { pc, matrix })
    }

    /// The subspace spanned by `q(r)` degree-`r` monomials.
    pub fn from_monomials(ctx: &HilbertPolynomialContext, monomials: &[Monomial]) -> Result<Self> {
        let pc = PlueckerContext::new(ctx)?;
        let basis = pc.basis_r();
        let mut rows = Vec::new();
        for m in monomials {
            let k = basis.index_of(m).ok_or_else(|| {
                Error::BadMultiIndex(format!("monomial {m} is not of degree {}", ctx.r()))
            })?;
            let mut row = vec![BigRational::zero(); basis.len()];
            row[k - 1] = BigRational::one();
            rows.push(row);
        }
        Self::with_context(pc, RationalMatrix::from_rows(rows)?)
    }

    /// The canonical verification anchor: the degree-`r` piece of the
    /// lexsegment ideal.
    pub fn lexsegment_point(ctx: &HilbertPolynomialContext) -> Result<Self> {
        let seg = crate::monom::lexsegment_degree(ctx)?;
        Self::from_monomials(ctx, &seg)
    }

    pub fn context(&self) -> &PlueckerContext {
        &self.pc
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Plücker coordinates in the `Θ` system: for each size-`q(r)` column
    /// selection `K`, the `q × q` minor on those columns.
    pub fn theta_from_matrix(&self) -> CoordinateVector<BigRational> {
        let q = self.pc.q();
        let n = self.pc.big_n();
        let mut entries = Vec::new();
        for k in all_multi_indices(n, q) {
            let cols: Vec<usize> = k.indices().iter().map(|&c| c as usize - 1).collect();
            let minor = self.matrix.select_columns(&cols).det();
            if !minor.is_zero() {
                entries.push((k, minor));
            }
        }
        CoordinateVector::from_entries(q, n, entries)
            .expect("minor indices are valid by construction")
    }

    /// Plücker coordinates in the `Δ` system, via the signed complement.
    pub fn delta_coords(&self) -> CoordinateVector<BigRational> {
        theta_to_delta(&self.theta_from_matrix())
    }

    /// The stacked matrix of all `x_i · row` images inside `S_{r+1}`, for
    /// `i` in the given range.
    fn degree_up_matrix(&self, vars: std::ops::RangeInclusive<usize>) -> RationalMatrix {
        let basis_r = self.pc.basis_r();
        let basis_r1 = self.pc.basis_r1();
        let mut rows = Vec::new();
        for i in vars {
            for row in 0..self.matrix.rows() {
                let mut out = vec![BigRational::zero(); basis_r1.len()];
                for (j, v) in self.matrix.row(row).iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let target = basis_r.multiply_index(basis_r1, i, j + 1);
                    out[target - 1] += v;
                }
                rows.push(out);
            }
        }
        RationalMatrix::from_rows(rows).expect("rows share the S_{r+1} length")
    }

    /// `dim (x_0 I_r + ... + x_n I_r)`: the exact rank of the degree-`(r+1)`
    /// multiplication matrix.  Always `>= q(r+1)` by Macaulay growth.
    pub fn persistence_rank(&self) -> usize {
        let n = self.pc.hilbert().n() as usize;
        self.degree_up_matrix(0..=n).rank()
    }

    /// Membership in the Hilbert scheme: the ideal generated by this
    /// subspace has the expected dimension in degree `r + 1`.
    pub fn is_hilb_point(&self) -> Result<bool> {
        Ok(self.persistence_rank() == self.pc.hilbert().q_r1()?)
    }

    /// Rank of the block of rows coming from multiplication by
    /// `x_0, ..., x_d` only.
    pub fn d1_rank(&self) -> usize {
        let d = self.pc.hilbert().d() as usize;
        self.degree_up_matrix(0..=d).rank()
    }

    /// Membership in the open chart: (a) the projection of the row space
    /// onto the `k[x_{d+1},...,x_n]_r` coordinates is surjective, and
    /// (b) the `x_0..x_d` multiplication block has rank at least `q'(r+1)`.
    pub fn in_open_u(&self) -> Result<bool> {
        let ctx = self.pc.hilbert();
        if ctx.d() >= ctx.n() {
            return Err(Error::DegenerateDimension { d: ctx.d(), n: ctx.n() });
        }
        let d = ctx.d();
        let small_cols: Vec<usize> = self
            .pc
            .basis_r()
            .monomials()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.in_small_ring(d))
            .map(|(j, _)| j)
            .collect();
        if self.matrix.select_columns(&small_cols).rank() != small_cols.len() {
            return Ok(false);
        }
        let qprime_r1 = ctx.qprime_r1()?;
        Ok(self.d1_rank() >= qprime_r1)
    }

    /// All the ranks the membership criterion compares, in one report.
    pub fn membership_report(&self) -> Result<MembershipReport> {
        let ctx = self.pc.hilbert();
        let q_r1 = ctx.q_r1()?;
        let persistence = self.persistence_rank();
        let in_u = if ctx.d() < ctx.n() { Some(self.in_open_u()?) } else { None };
        Ok(MembershipReport {
            persistence_rank: persistence,
            expected_rank: q_r1,
            d1_rank: self.d1_rank(),
            qprime_r1: ctx.qprime_r1().ok(),
            is_hilb: persistence == q_r1,
            in_u,
        })
    }

    /// The image of this subspace under a coordinate change `g`: every row
    /// polynomial `f` is replaced by `g.f`.
    pub fn translate(&self, g: &RationalMatrix) -> Result<RationalSubspace> {
        let action = induced_action(g, self.pc.basis_r())?;
        let matrix = self.matrix.mul(&action)?;
        Self::with_context(self.pc.clone(), matrix)
    }
}

/// Rank data underlying the two-sided membership criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    /// `dim I_{r+1}`
    pub persistence_rank: usize,
    /// `q(r+1)`
    pub expected_rank: usize,
    /// rank of the `x_0..x_d` multiplication block
    pub d1_rank: usize,
    /// `q'(r+1)` when `d < n`
    pub qprime_r1: Option<usize>,
    pub is_hilb: bool,
    pub in_u: Option<bool>,
}

/// The matrix of the substitution action of `g` on the degree-`t` monomial
/// basis: row `a` holds the coefficients of `g.x^{α(a)}`.
///
/// `g` acts on variables in display order, `x_n` first: the display position
/// of `x_i` is `n + 1 - i` and `g.x_i = Σ_j g[pos(i)][pos(j)] x_j`.
pub fn induced_action(g: &RationalMatrix, basis: &MonomialBasis) -> Result<RationalMatrix> {
    let n = basis.n() as usize;
    if g.rows() != n + 1 || g.cols() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "coordinate change must be {} x {}",
            n + 1,
            n + 1
        )));
    }
    let pos = |i: usize| n - i; // 0-based display position of x_i
    let mut out = RationalMatrix::zero(basis.len(), basis.len());
    for (a, mono) in basis.monomials().iter().enumerate() {
        let mut acc: std::collections::HashMap<Vec<u32>, BigRational> =
            std::collections::HashMap::new();
        acc.insert(vec![0; n + 1], BigRational::one());
        for (i, &e) in mono.exps().iter().enumerate() {
            for _ in 0..e {
                let mut next: std::collections::HashMap<Vec<u32>, BigRational> =
                    std::collections::HashMap::new();
                for (exps, coeff) in &acc {
                    for j in 0..=n {
                        let gij = &g[(pos(i), pos(j))];
                        if gij.is_zero() {
                            continue;
                        }
                        let mut key = exps.clone();
                        key[j] += 1;
                        let add = coeff * gij;
                        *next.entry(key).or_insert_with(BigRational::zero) += add;
                    }
                }
                acc = next;
            }
        }
        for (exps, coeff) in acc {
            if coeff.is_zero() {
                continue;
            }
            let b = basis
                .index_of(&Monomial::new(exps))
                .expect("expansion stays in degree t");
            out[(a, b - 1)] += coeff;
        }
    }
    Ok(out)
}

/// Exact substitution of a `Δ` coordinate vector into a polynomial.
pub fn evaluate(e: &DeltaPolynomial, coords: &CoordinateVector<BigRational>) -> BigRational {
    let mut acc = BigRational::zero();
    for (mono, c) in e.terms() {
        let mut term = BigRational::from(c.clone());
        for v in mono.vars() {
            if term.is_zero() {
                break;
            }
            term *= coords.get(v);
        }
        acc += term;
    }
    acc
}

/// Evaluates the `Δ`-polynomial coefficients of an exterior element at a
/// coordinate vector.
pub fn evaluate_element(
    e: &crate::exterior::ExteriorElement<DeltaPolynomial>,
    coords: &CoordinateVector<BigRational>,
) -> crate::exterior::ExteriorElement<BigRational> {
    e.map_coeffs(|c| evaluate(c, coords))
}

/// A deterministic pseudo-random invertible coordinate change with integer
/// entries in `[-5, 5]`.
pub fn sample_pgl(n: u32, seed: u64) -> RationalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = n as usize + 1;
    loop {
        let rows: Vec<Vec<i64>> = (0..size)
            .map(|_| (0..size).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let m = RationalMatrix::from_int_rows(&rows).unwrap();
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A deterministic pseudo-random full-rank subspace with integer entries in
/// `[-5, 5]`.
pub fn sample_subspace(ctx: &HilbertPolynomialContext, seed: u64) -> Result<RationalSubspace> {
    let pc = PlueckerContext::new(ctx)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (rows, cols) = (pc.q(), pc.big_n() as usize);
    loop {
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let m = RationalMatrix::from_int_rows(&data).unwrap();
        if m.rank() == rows {
            return RationalSubspace::with_context(pc, m);
        }
    }
}
