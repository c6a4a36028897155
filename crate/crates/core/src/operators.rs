//! Matrix-free linear operators: weighted backward shifts, backward orbits,
//! the Kalish-type operator on circle grids, and adjoints of polynomial
//! multipliers on truncated Hardy-space coefficients.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::Arc;
use thiserror::Error;

use crate::spaces::{GridFunction, SeqVector, Side, SpaceError, SpaceTag, C_ONE, C_ZERO};

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("shift side mismatch: operator is {0:?}, vector is {1:?}")]
    SideMismatch(Side, Side),
    #[error("weight index {0} outside materialized window [{1}, {2})")]
    WeightWindow(i64, i64, i64),
    #[error("zero weight at index {0}")]
    ZeroWeight(i64),
    #[error("grid size mismatch: operator M = {0}, function M = {1}")]
    GridMismatch(usize, usize),
    #[error("kalish operator needs M >= 16, got {0}")]
    GridTooSmall(usize),
    #[error("reproducing kernel needs |z| < 1, got |z| = {0}")]
    KernelOutsideDisk(f64),
    #[error("adjoint multiplier: input support reaches index {0} > truncation {1}")]
    SupportExceedsTruncation(i64, i64),
    #[error("adjoint multiplier needs truncation N >= symbol degree D ({0} < {1})")]
    TruncationBelowDegree(i64, i64),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Which side a weighted shift acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShiftSide {
    Unilateral,
    Bilateral,
}

/// A weighted backward shift with weights materialized over a window.
///
/// Unilateral: `B_w e_0 = 0`, `B_w e_n = w_n e_{n-1}` with weights stored for
/// `n = 1..=len`. Bilateral: `S_w f_n = w_n f_{n-1}` for `lo <= n < lo+len`.
/// Asking for a weight outside the window is an error, never a default.
#[derive(Debug, Clone)]
pub struct WeightedShift {
    pub side: ShiftSide,
    lo: i64,
    weights: Vec<Complex64>,
}

impl WeightedShift {
    pub fn unilateral(weights: Vec<Complex64>) -> Result<Self, OperatorError> {
        for (i, w) in weights.iter().enumerate() {
            if *w == C_ZERO {
                return Err(OperatorError::ZeroWeight(i as i64 + 1));
            }
        }
        Ok(WeightedShift { side: ShiftSide::Unilateral, lo: 1, weights })
    }

    pub fn bilateral(lo: i64, weights: Vec<Complex64>) -> Result<Self, OperatorError> {
        for (i, w) in weights.iter().enumerate() {
            if *w == C_ZERO {
                return Err(OperatorError::ZeroWeight(lo + i as i64));
            }
        }
        Ok(WeightedShift { side: ShiftSide::Bilateral, lo, weights })
    }

    /// `alpha * B` on the half line, materialized for indices `1..=len`.
    pub fn scalar_multiple_unilateral(alpha: Complex64, len: usize) -> Self {
        WeightedShift { side: ShiftSide::Unilateral, lo: 1, weights: vec![alpha; len] }
    }

    /// The bilateral shift with `w_n = 2` for `n >= 1` and `w_n = 1/2` for
    /// `n <= 0`, materialized over `[-len, len]`.
    pub fn two_half_bilateral(len: i64) -> Self {
        let lo = -len;
        let weights = (lo..=len)
            .map(|n| if n >= 1 { Complex64::new(2.0, 0.0) } else { Complex64::new(0.5, 0.0) })
            .collect();
        WeightedShift { side: ShiftSide::Bilateral, lo, weights }
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.weights.len() as i64)
    }

    pub fn weight(&self, n: i64) -> Result<Complex64, OperatorError> {
        let (lo, hi) = self.window();
        if n < lo || n >= hi {
            return Err(OperatorError::WeightWindow(n, lo, hi));
        }
        Ok(self.weights[(n - lo) as usize])
    }

    pub fn sup_weight(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).fold(0.0, f64::max)
    }

    fn expected_side(&self) -> Side {
        match self.side {
            ShiftSide::Unilateral => Side::HalfLine,
            ShiftSide::Bilateral => Side::FullLine,
        }
    }

    /// Apply the shift: `(Sv)_{n-1} = w_n v_n`.
    pub fn apply(&self, v: &SeqVector) -> Result<SeqVector, OperatorError> {
        if v.tag.side != self.expected_side() {
            return Err(OperatorError::SideMismatch(self.expected_side(), v.tag.side));
        }
        let mut out_entries = Vec::with_capacity(v.len());
        let mut out_lo = v.lo - 1;
        let start = match self.side {
            // coordinate -1 is dropped on the half line
            ShiftSide::Unilateral => v.lo.max(1),
            ShiftSide::Bilateral => v.lo,
        };
        if start > v.lo {
            out_lo = start - 1;
        }
        for n in start..v.hi() {
            let c = v.coord(n);
            if c == C_ZERO {
                out_entries.push(C_ZERO);
            } else {
                out_entries.push(self.weight(n)? * c);
            }
        }
        Ok(SeqVector::new(v.tag, out_lo, out_entries)?)
    }

    /// Weight products `p_n = w_1 ... w_n` for `n = 0..=depth`, computed once.
    pub fn forward_products(&self, depth: usize) -> Result<Vec<Complex64>, OperatorError> {
        let mut products = Vec::with_capacity(depth + 1);
        products.push(C_ONE);
        for n in 1..=depth as i64 {
            let prev = products[(n - 1) as usize];
            products.push(prev * self.weight(n)?);
        }
        Ok(products)
    }

    /// The backward orbit `z_0, z_{-1}, ..., z_{-depth}` of `z_0 = e_0` (or
    /// `f_0`), with `z_{-n} = e_n / (w_1 ... w_n)`.
    ///
    /// The coordinates are anchored at the deepest vector and walked upward
    /// through the very same multiplication the shift performs, so
    /// `apply(z_{-n})` reproduces `z_{-(n-1)}` bitwise for every weight
    /// sequence. For weight families whose arithmetic is exact (powers of
    /// two, integers) the top coordinate is exactly 1.
    pub fn backward_orbit_family(&self, depth: usize) -> Result<Vec<SeqVector>, OperatorError> {
        let tag = match self.side {
            ShiftSide::Unilateral => SpaceTag::l2_half(),
            ShiftSide::Bilateral => SpaceTag::l2_full(),
        };
        self.backward_orbit_family_tagged(depth, tag)
    }

    pub fn backward_orbit_family_tagged(
        &self,
        depth: usize,
        tag: SpaceTag,
    ) -> Result<Vec<SeqVector>, OperatorError> {
        if tag.side != self.expected_side() {
            return Err(OperatorError::SideMismatch(self.expected_side(), tag.side));
        }
        let products = self.forward_products(depth)?;
        let mut coeffs = vec![C_ZERO; depth + 1];
        coeffs[depth] = C_ONE / products[depth];
        for n in (1..=depth).rev() {
            // identical op to apply(): one rounded complex multiply
            coeffs[n - 1] = self.weight(n as i64).expect("within window") * coeffs[n];
        }
        Ok(coeffs
            .into_iter()
            .enumerate()
            .map(|(n, c)| SeqVector::scaled_basis(tag, n as i64, c))
            .collect())
    }

    /// `z_{-n}` alone; `z_0 = e_0` exactly.
    pub fn backward_orbit(&self, n: usize) -> Result<SeqVector, OperatorError> {
        if n == 0 {
            let tag = match self.side {
                ShiftSide::Unilateral => SpaceTag::l2_half(),
                ShiftSide::Bilateral => SpaceTag::l2_full(),
            };
            return Ok(SeqVector::basis(tag, 0));
        }
        Ok(self.backward_orbit_family(n)?.pop().expect("non-empty"))
    }

    /// Forward orbit `z_k = S^k f_0` of a bilateral shift:
    /// `z_k = w_0 w_{-1} ... w_{-(k-1)} f_{-k}`.
    pub fn forward_orbit_family(&self, depth: usize) -> Result<Vec<SeqVector>, OperatorError> {
        let tag = SpaceTag::l2_full();
        let mut out = Vec::with_capacity(depth + 1);
        let mut c = C_ONE;
        out.push(SeqVector::basis(tag, 0));
        for k in 1..=depth as i64 {
            c = c * self.weight(-(k - 1))?;
            out.push(SeqVector::scaled_basis(tag, -k, c));
        }
        Ok(out)
    }

    /// Negative-side weight products `q_n = w_0 w_{-1} ... w_{-(n-1)}`.
    pub fn negative_products(&self, depth: usize) -> Result<Vec<Complex64>, OperatorError> {
        let mut out = Vec::with_capacity(depth + 1);
        out.push(C_ONE);
        let mut c = C_ONE;
        for n in 1..=depth as i64 {
            c = c * self.weight(-(n - 1))?;
            out.push(c);
        }
        Ok(out)
    }
}

/// A sequence-space operator given by its action.
pub trait SeqOperator: Send + Sync {
    fn apply(&self, v: &SeqVector) -> Result<SeqVector, OperatorError>;
    /// Declared upper bound for the operator norm, when known.
    fn norm_bound(&self) -> Option<f64> {
        None
    }
}

impl SeqOperator for WeightedShift {
    fn apply(&self, v: &SeqVector) -> Result<SeqVector, OperatorError> {
        WeightedShift::apply(self, v)
    }

    fn norm_bound(&self) -> Option<f64> {
        Some(self.sup_weight())
    }
}

/// Closure-backed operator, for compositions like `alpha B^2`.
pub struct FnOperator {
    pub f: Arc<dyn Fn(&SeqVector) -> Result<SeqVector, OperatorError> + Send + Sync>,
    pub bound: Option<f64>,
}

impl SeqOperator for FnOperator {
    fn apply(&self, v: &SeqVector) -> Result<SeqVector, OperatorError> {
        (self.f)(v)
    }

    fn norm_bound(&self) -> Option<f64> {
        self.bound
    }
}

/// n-fold application.
pub fn apply_power(
    op: &dyn SeqOperator,
    v: &SeqVector,
    n: usize,
) -> Result<SeqVector, OperatorError> {
    let mut cur = v.clone();
    for _ in 0..n {
        cur = op.apply(&cur)?;
    }
    Ok(cur)
}

/// The operator `A f(e^{i theta}) = e^{i theta} f(e^{i theta})
/// - int_0^theta i e^{it} f(e^{it}) dt` discretized with a left-Riemann
/// cumulative sum on the uniform grid. Left endpoints keep the one-sided
/// cell error of indicator eigenfunctions; tolerance budgets downstream
/// assume the resulting O(1/M) rate.
#[derive(Debug, Clone, Copy)]
pub struct KalishOperator {
    pub m: usize,
}

impl KalishOperator {
    pub fn new(m: usize) -> Result<Self, OperatorError> {
        if m < 16 {
            return Err(OperatorError::GridTooSmall(m));
        }
        Ok(KalishOperator { m })
    }

    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction, OperatorError> {
        if f.m() != self.m {
            return Err(OperatorError::GridMismatch(self.m, f.m()));
        }
        let m = self.m;
        let dt = 2.0 * PI / m as f64;
        let mut out = Vec::with_capacity(m);
        let mut cum = C_ZERO;
        for j in 0..m {
            let theta = 2.0 * PI * j as f64 / m as f64;
            let lambda = Complex64::new(theta.cos(), theta.sin());
            out.push(lambda * f.values[j] - cum);
            cum += Complex64::new(0.0, 1.0) * lambda * f.values[j] * dt;
        }
        Ok(GridFunction { values: out })
    }
}

/// Adjoint `M_phi^*` of multiplication by a polynomial symbol
/// `phi(z) = sum_{m=0..D} a_m z^m` on the first `N+1` Hardy-space
/// coefficients: `(Tc)_n = sum_m conj(a_m) c_{n+m}`, coefficients above `N`
/// dropped. Eigen-identities consequently hold on coordinates `0..=N-D` only.
#[derive(Debug, Clone)]
pub struct AdjointMultiplier {
    pub symbol: Vec<Complex64>,
    pub truncation: i64,
}

impl AdjointMultiplier {
    pub fn new(symbol: Vec<Complex64>, truncation: i64) -> Result<Self, OperatorError> {
        let degree = symbol.len() as i64 - 1;
        if truncation < degree.max(0) {
            return Err(OperatorError::TruncationBelowDegree(truncation, degree));
        }
        Ok(AdjointMultiplier { symbol, truncation })
    }

    pub fn degree(&self) -> i64 {
        self.symbol.len() as i64 - 1
    }

    pub fn symbol_at(&self, z: Complex64) -> Complex64 {
        let mut acc = C_ZERO;
        for a in self.symbol.iter().rev() {
            acc = acc * z + a;
        }
        acc
    }

    pub fn apply(&self, c: &SeqVector) -> Result<SeqVector, OperatorError> {
        if c.tag.side != Side::HalfLine {
            return Err(OperatorError::SideMismatch(Side::HalfLine, c.tag.side));
        }
        if c.hi() - 1 > self.truncation {
            return Err(OperatorError::SupportExceedsTruncation(c.hi() - 1, self.truncation));
        }
        let mut out = Vec::with_capacity(self.truncation as usize + 1);
        for n in 0..=self.truncation {
            let mut acc = C_ZERO;
            for (m, a) in self.symbol.iter().enumerate() {
                let idx = n + m as i64;
                if idx <= self.truncation {
                    acc += a.conj() * c.coord(idx);
                }
            }
            out.push(acc);
        }
        Ok(SeqVector::new(c.tag, 0, out)?)
    }
}

impl SeqOperator for AdjointMultiplier {
    fn apply(&self, v: &SeqVector) -> Result<SeqVector, OperatorError> {
        AdjointMultiplier::apply(self, v)
    }

    fn norm_bound(&self) -> Option<f64> {
        Some(self.symbol.iter().map(|a| a.norm()).sum())
    }
}

/// Truncated reproducing kernel of H^2: coordinates `conj(z)^n`, n = 0..=N.
pub fn reproducing_kernel(z: Complex64, n: usize) -> Result<SeqVector, OperatorError> {
    if z.norm() >= 1.0 {
        return Err(OperatorError::KernelOutsideDisk(z.norm()));
    }
    let zc = z.conj();
    let mut coords = Vec::with_capacity(n + 1);
    let mut p = C_ONE;
    for _ in 0..=n {
        coords.push(p);
        p *= zc;
    }
    Ok(SeqVector::new(SpaceTag::l2_half(), 0, coords)?)
}
