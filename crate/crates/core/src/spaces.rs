//! Complex sequence-space vectors and circle-grid functions.
//!
//! A [`SeqVector`] is a finitely supported element of `l_p(N)`, `l_p(Z)` or
//! `c_0`, stored as a dense window over a contiguous index range; everything
//! outside the window is zero. A [`GridFunction`] samples an element of
//! `L^2(T)` at the `M` left endpoints `theta_j = 2*pi*j/M`. All values are
//! immutable after construction and every stored scalar is finite.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Error, PartialEq)]
pub enum SpaceError {
    #[error("space tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("grid size mismatch: {0} vs {1}")]
    GridMismatch(usize, usize),
    #[error("non-finite scalar at index {0}")]
    NonFinite(i64),
    #[error("half-line vector with negative support index {0}")]
    NegativeIndex(i64),
    #[error("invalid norm exponent p = {0}, need p >= 1")]
    BadExponent(f64),
    #[error("grid needs M >= 2, got {0}")]
    GridTooSmall(usize),
}

/// Which index set the sequence lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    HalfLine,
    FullLine,
}

/// Norm carried by the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SpaceNorm {
    Lp(f64),
    C0,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpaceTag {
    pub side: Side,
    pub norm: SpaceNorm,
}

impl SpaceTag {
    pub fn new(side: Side, norm: SpaceNorm) -> Result<Self, SpaceError> {
        if let SpaceNorm::Lp(p) = norm {
            if !(p >= 1.0) || !p.is_finite() {
                return Err(SpaceError::BadExponent(p));
            }
        }
        Ok(SpaceTag { side, norm })
    }

    pub fn l2_half() -> Self {
        SpaceTag { side: Side::HalfLine, norm: SpaceNorm::Lp(2.0) }
    }

    pub fn lp_half(p: f64) -> Self {
        SpaceTag { side: Side::HalfLine, norm: SpaceNorm::Lp(p) }
    }

    pub fn l2_full() -> Self {
        SpaceTag { side: Side::FullLine, norm: SpaceNorm::Lp(2.0) }
    }

    pub fn lp_full(p: f64) -> Self {
        SpaceTag { side: Side::FullLine, norm: SpaceNorm::Lp(p) }
    }

    pub fn c0_half() -> Self {
        SpaceTag { side: Side::HalfLine, norm: SpaceNorm::C0 }
    }

    pub fn c0_full() -> Self {
        SpaceTag { side: Side::FullLine, norm: SpaceNorm::C0 }
    }

    fn describe(&self) -> String {
        format!("{:?}/{:?}", self.side, self.norm)
    }
}

/// Finitely supported vector over a contiguous index window `[lo, lo+len)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeqVector {
    pub tag: SpaceTag,
    pub lo: i64,
    pub entries: Vec<Complex64>,
}

impl SeqVector {
    /// Build from a window, validating finiteness and the half-line constraint.
    pub fn new(tag: SpaceTag, lo: i64, entries: Vec<Complex64>) -> Result<Self, SpaceError> {
        if tag.side == Side::HalfLine && lo < 0 && !entries.is_empty() {
            return Err(SpaceError::NegativeIndex(lo));
        }
        for (i, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(SpaceError::NonFinite(lo + i as i64));
            }
        }
        Ok(SeqVector { tag, lo, entries }.trimmed())
    }

    pub fn zero(tag: SpaceTag) -> Self {
        SeqVector { tag, lo: 0, entries: Vec::new() }
    }

    /// Canonical basis vector `e_n` (or `f_n` on the full line).
    pub fn basis(tag: SpaceTag, n: i64) -> Self {
        debug_assert!(tag.side == Side::FullLine || n >= 0);
        SeqVector { tag, lo: n, entries: vec![C_ONE] }
    }

    /// Basis vector scaled by `c`.
    pub fn scaled_basis(tag: SpaceTag, n: i64, c: Complex64) -> Self {
        SeqVector { tag, lo: n, entries: vec![c] }.trimmed()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.entries.len() as i64
    }

    /// Coordinate `n`, zero outside the window.
    #[inline]
    pub fn coord(&self, n: i64) -> Complex64 {
        if n < self.lo || n >= self.hi() {
            C_ZERO
        } else {
            self.entries[(n - self.lo) as usize]
        }
    }

    /// Drop exactly-zero entries at both ends of the window.
    fn trimmed(mut self) -> Self {
        let mut start = 0usize;
        while start < self.entries.len() && self.entries[start] == C_ZERO {
            start += 1;
        }
        let mut end = self.entries.len();
        while end > start && self.entries[end - 1] == C_ZERO {
            end -= 1;
        }
        if start > 0 || end < self.entries.len() {
            self.lo += start as i64;
            self.entries = self.entries[start..end].to_vec();
            if self.entries.is_empty() {
                self.lo = 0;
            }
        }
        self
    }

    /// The space norm: `(sum |v_k|^p)^(1/p)` for `Lp`, `sup |v_k|` for `C0`.
    pub fn norm(&self) -> f64 {
        match self.tag.norm {
            SpaceNorm::Lp(p) => {
                if p == 2.0 {
                    self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
                } else {
                    self.entries.iter().map(|z| z.norm().powf(p)).sum::<f64>().powf(1.0 / p)
                }
            }
            SpaceNorm::C0 => self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max),
        }
    }

    /// Norm of the restriction to indices `|n| >= k`.
    pub fn tail_norm(&self, k: i64) -> f64 {
        let tail: Vec<Complex64> = (self.lo..self.hi())
            .filter(|n| n.abs() >= k.max(0))
            .map(|n| self.coord(n))
            .collect();
        SeqVector { tag: self.tag, lo: 0, entries: tail }.norm()
    }

    pub fn scale(&self, a: Complex64) -> SeqVector {
        SeqVector {
            tag: self.tag,
            lo: self.lo,
            entries: self.entries.iter().map(|z| a * z).collect(),
        }
        .trimmed()
    }

    /// `a*x + y`, exact coordinatewise arithmetic over the union window.
    pub fn axpy(a: Complex64, x: &SeqVector, y: &SeqVector) -> Result<SeqVector, SpaceError> {
        if x.tag != y.tag {
            return Err(SpaceError::TagMismatch(x.tag.describe(), y.tag.describe()));
        }
        if x.is_empty() {
            return Ok(y.clone());
        }
        if y.is_empty() {
            return Ok(x.scale(a));
        }
        let lo = x.lo.min(y.lo);
        let hi = x.hi().max(y.hi());
        let entries = (lo..hi).map(|n| a * x.coord(n) + y.coord(n)).collect();
        Ok(SeqVector { tag: x.tag, lo, entries }.trimmed())
    }

    pub fn add(x: &SeqVector, y: &SeqVector) -> Result<SeqVector, SpaceError> {
        Self::axpy(C_ONE, x, y)
    }

    pub fn sub(x: &SeqVector, y: &SeqVector) -> Result<SeqVector, SpaceError> {
        if x.tag != y.tag {
            return Err(SpaceError::TagMismatch(x.tag.describe(), y.tag.describe()));
        }
        if x.is_empty() && y.is_empty() {
            return Ok(SeqVector::zero(x.tag));
        }
        let lo = if x.is_empty() { y.lo } else if y.is_empty() { x.lo } else { x.lo.min(y.lo) };
        let hi = x.hi().max(y.hi()).max(lo);
        let entries = (lo..hi).map(|n| x.coord(n) - y.coord(n)).collect();
        Ok(SeqVector { tag: x.tag, lo, entries }.trimmed())
    }

    /// Conj-free bilinear pairing `sum_k f_k v_k`.
    pub fn dual_pair(&self, v: &SeqVector) -> Result<Complex64, SpaceError> {
        if self.tag.side != v.tag.side {
            return Err(SpaceError::TagMismatch(self.tag.describe(), v.tag.describe()));
        }
        let lo = self.lo.max(v.lo);
        let hi = self.hi().min(v.hi());
        let mut acc = C_ZERO;
        for n in lo..hi {
            acc += self.coord(n) * v.coord(n);
        }
        Ok(acc)
    }

    /// Sesquilinear pairing `sum_k v_k conj(w_k)` (second argument conjugated).
    pub fn inner(&self, w: &SeqVector) -> Result<Complex64, SpaceError> {
        if self.tag.side != w.tag.side {
            return Err(SpaceError::TagMismatch(self.tag.describe(), w.tag.describe()));
        }
        let lo = self.lo.max(w.lo);
        let hi = self.hi().min(w.hi());
        let mut acc = C_ZERO;
        for n in lo..hi {
            acc += self.coord(n) * w.coord(n).conj();
        }
        Ok(acc)
    }

    /// Euclidean (l2) norm regardless of tag; the least-squares machinery in
    /// the universality module always works in l2.
    pub fn l2_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Function on the uniform circle grid `theta_j = 2*pi*j/M`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(values: Vec<Complex64>) -> Result<Self, SpaceError> {
        if values.len() < 2 {
            return Err(SpaceError::GridTooSmall(values.len()));
        }
        for (j, z) in values.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(SpaceError::NonFinite(j as i64));
            }
        }
        Ok(GridFunction { values })
    }

    pub fn zero(m: usize) -> Self {
        GridFunction { values: vec![C_ZERO; m] }
    }

    pub fn from_fn(m: usize, f: impl Fn(f64) -> Complex64) -> Self {
        let values = (0..m).map(|j| f(2.0 * std::f64::consts::PI * j as f64 / m as f64)).collect();
        GridFunction { values }
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    /// Grid-L2 norm `sqrt((1/M) sum |f_j|^2)`.
    pub fn norm(&self) -> f64 {
        (self.values.iter().map(|z| z.norm_sqr()).sum::<f64>() / self.m() as f64).sqrt()
    }

    pub fn scale(&self, a: Complex64) -> GridFunction {
        GridFunction { values: self.values.iter().map(|z| a * z).collect() }
    }

    pub fn axpy(a: Complex64, x: &GridFunction, y: &GridFunction) -> Result<GridFunction, SpaceError> {
        if x.m() != y.m() {
            return Err(SpaceError::GridMismatch(x.m(), y.m()));
        }
        Ok(GridFunction {
            values: x.values.iter().zip(&y.values).map(|(xv, yv)| a * xv + yv).collect(),
        })
    }

    pub fn sub(x: &GridFunction, y: &GridFunction) -> Result<GridFunction, SpaceError> {
        if x.m() != y.m() {
            return Err(SpaceError::GridMismatch(x.m(), y.m()));
        }
        Ok(GridFunction {
            values: x.values.iter().zip(&y.values).map(|(xv, yv)| xv - yv).collect(),
        })
    }

    /// Conj-free pairing `(1/M) sum_j f(theta_j) v(theta_j)`.
    pub fn dual_pair(&self, v: &GridFunction) -> Result<Complex64, SpaceError> {
        if self.m() != v.m() {
            return Err(SpaceError::GridMismatch(self.m(), v.m()));
        }
        let s: Complex64 = self.values.iter().zip(&v.values).map(|(f, g)| f * g).sum();
        Ok(s / self.m() as f64)
    }

    /// Normalized inner product `(1/M) sum_j f_j conj(g_j)`.
    pub fn inner(&self, g: &GridFunction) -> Result<Complex64, SpaceError> {
        if self.m() != g.m() {
            return Err(SpaceError::GridMismatch(self.m(), g.m()));
        }
        let s: Complex64 = self.values.iter().zip(&g.values).map(|(f, g)| f * g.conj()).sum();
        Ok(s / self.m() as f64)
    }
}

/// A functional is the same data as a vector; pairing is the conj-free sum.
#[derive(Debug, Clone)]
pub enum Functional {
    Seq(SeqVector),
    Grid(GridFunction),
}

impl Functional {
    pub fn pair_seq(&self, v: &SeqVector) -> Result<Complex64, SpaceError> {
        match self {
            Functional::Seq(f) => f.dual_pair(v),
            Functional::Grid(_) => Err(SpaceError::TagMismatch("grid".into(), "seq".into())),
        }
    }

    pub fn pair_grid(&self, v: &GridFunction) -> Result<Complex64, SpaceError> {
        match self {
            Functional::Grid(f) => f.dual_pair(v),
            Functional::Seq(_) => Err(SpaceError::TagMismatch("seq".into(), "grid".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Stream;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_vector(s: &mut Stream, tag: SpaceTag, span: i64) -> SeqVector {
        let lo = if tag.side == Side::HalfLine { s.below(4) as i64 } else { -(s.below(6) as i64) };
        let len = 1 + s.below(span as u64) as usize;
        let entries = (0..len).map(|_| c(s.uniform_sym(), s.uniform_sym())).collect();
        SeqVector::new(tag, lo, entries).unwrap()
    }

    #[test]
    fn unit_basis_vector_has_norm_one() {
        let e0 = SeqVector::basis(SpaceTag::l2_half(), 0);
        assert_eq!(e0.norm(), 1.0);
    }

    #[test]
    fn geometric_vector_norm_matches_closed_form() {
        // v = sum_{n=0..40} 2^{-n} e_n in l2; |v|^2 = sum 4^{-n} = 4/3 - tail
        let entries: Vec<Complex64> = (0..=40).map(|n| c(0.5f64.powi(n), 0.0)).collect();
        let v = SeqVector::new(SpaceTag::l2_half(), 0, entries).unwrap();
        assert!((v.norm() - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_vector_has_zero_norm() {
        assert_eq!(SeqVector::zero(SpaceTag::l2_half()).norm(), 0.0);
        assert_eq!(SeqVector::zero(SpaceTag::c0_full()).norm(), 0.0);
    }

    #[test]
    fn dual_pair_on_basis_vectors() {
        let tag = SpaceTag::l2_half();
        let e0 = SeqVector::basis(tag, 0);
        assert_eq!(e0.dual_pair(&e0).unwrap(), C_ONE);
        for n in 1..5 {
            let v = SeqVector::scaled_basis(tag, n, c(0.5f64.powi(n as i32), 0.0));
            assert_eq!(e0.dual_pair(&v).unwrap(), C_ZERO);
        }
    }

    #[test]
    fn grid_pairing_of_fourier_mode_with_constant_vanishes() {
        let m = 256;
        let f0 = GridFunction::from_fn(m, |t| Complex64::new(t.cos(), t.sin()));
        let one = GridFunction::from_fn(m, |_| C_ONE);
        let p = f0.dual_pair(&one).unwrap();
        assert!(p.norm() < 1e-14, "|p| = {}", p.norm());
    }

    #[test]
    fn axpy_degenerate_cases() {
        let tag = SpaceTag::l2_half();
        let mut s = Stream::new(11);
        let x = random_vector(&mut s, tag, 8);
        let y = random_vector(&mut s, tag, 8);
        assert_eq!(SeqVector::axpy(C_ZERO, &x, &y).unwrap(), y.clone().trimmed());
        assert_eq!(SeqVector::axpy(C_ONE, &x, &SeqVector::zero(tag)).unwrap(), x.clone().trimmed());
        let z = SeqVector::axpy(c(-1.0, 0.0), &x, &x).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let x = SeqVector::basis(SpaceTag::l2_half(), 0);
        let y = SeqVector::basis(SpaceTag::l2_full(), 0);
        assert!(SeqVector::axpy(C_ONE, &x, &y).is_err());
        assert!(x.dual_pair(&y).is_err());
    }

    #[test]
    fn tail_norm_edges() {
        let e0 = SeqVector::basis(SpaceTag::l2_half(), 0);
        assert_eq!(e0.tail_norm(1), 0.0);
        let entries: Vec<Complex64> = (0..=40).map(|n| c(0.5f64.powi(n), 0.0)).collect();
        let v = SeqVector::new(SpaceTag::l2_half(), 0, entries).unwrap();
        assert_eq!(v.tail_norm(0), v.norm());
        let expected: f64 = (10..=40).map(|n| 0.25f64.powi(n)).sum::<f64>().sqrt();
        assert!((v.tail_norm(10) - expected).abs() < 1e-15);
    }

    #[test]
    fn tail_norm_is_monotone_and_vanishes_past_support() {
        let mut s = Stream::new(3);
        for tag in [SpaceTag::l2_half(), SpaceTag::lp_full(1.5), SpaceTag::c0_full()] {
            for _ in 0..50 {
                let v = random_vector(&mut s, tag, 12);
                let mut prev = f64::INFINITY;
                for k in 0..20 {
                    let t = v.tail_norm(k);
                    assert!(t <= prev + 1e-12);
                    prev = t;
                }
                let beyond = v.lo.abs().max(v.hi().abs()) + 1;
                assert_eq!(v.tail_norm(beyond), 0.0);
            }
        }
    }

    #[test]
    fn triangle_inequality_and_homogeneity_hold() {
        let mut s = Stream::new(17);
        let tags = [
            SpaceTag::lp_half(1.0),
            SpaceTag::l2_half(),
            SpaceTag::lp_full(3.0),
            SpaceTag::c0_half(),
            SpaceTag::c0_full(),
        ];
        for tag in tags {
            for _ in 0..1000 {
                let x = random_vector(&mut s, tag, 10);
                let y = random_vector(&mut s, tag, 10);
                let sum = SeqVector::add(&x, &y).unwrap();
                assert!(sum.norm() <= x.norm() + y.norm() + 1e-12 * (1.0 + x.norm() + y.norm()));
                let a = c(s.uniform_sym(), s.uniform_sym());
                let scaled = x.scale(a);
                let rel = (scaled.norm() - a.norm() * x.norm()).abs();
                assert!(rel <= 1e-12 * (1.0 + scaled.norm()));
            }
        }
    }

    #[test]
    fn l2_inner_product_matches_norm() {
        let mut s = Stream::new(23);
        for _ in 0..200 {
            let v = random_vector(&mut s, SpaceTag::l2_full(), 10);
            let ip = v.inner(&v).unwrap();
            assert!(ip.im.abs() < 1e-14);
            assert!((ip.re - v.norm() * v.norm()).abs() <= 1e-12 * (1.0 + ip.re));
        }
    }

    #[test]
    fn dual_pair_is_bilinear() {
        let mut s = Stream::new(29);
        let tag = SpaceTag::l2_full();
        for _ in 0..200 {
            let f = random_vector(&mut s, tag, 8);
            let x = random_vector(&mut s, tag, 8);
            let y = random_vector(&mut s, tag, 8);
            let a = c(s.uniform_sym(), s.uniform_sym());
            let lhs = f.dual_pair(&SeqVector::axpy(a, &x, &y).unwrap()).unwrap();
            let rhs = a * f.dual_pair(&x).unwrap() + f.dual_pair(&y).unwrap();
            assert!((lhs - rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
        }
    }
}
