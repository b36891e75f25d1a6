//! Exact characteristic polynomials and real-root isolation.
//!
//! The characteristic polynomial is computed with the Faddeev-LeVerrier
//! recurrence in big-integer arithmetic. Real roots come from Yun's
//! square-free decomposition (multiplicities) followed by Sturm-sequence
//! isolation and bisection on each square-free factor, all over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Largest dimension accepted by [`exact_char_poly`].
pub const MAX_EXACT_DIM: usize = 64;

/// Monic integer polynomial `det(xI - M)`, coefficients low to high.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigInt>,
}

impl ExactPolynomial {
    /// Coefficients `c_0, ..., c_d`. Trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `prod (x - r_i)` for integer roots.
    pub fn from_integer_roots(roots: &[i64]) -> Self {
        let mut p = vec![BigInt::one()];
        for &r in roots {
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigInt::from(r);
            }
            p = next;
        }
        Self::new(p)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl fmt::Display for ExactPolynomial {
    /// `x^3 - 15x^2 + 62x - 72`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(k == 0 && first) {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for ExactPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let as_strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        as_strings.serialize(s)
    }
}

/// Faddeev-LeVerrier in exact arithmetic. Works for any square integer
/// matrix, symmetric or not.
pub fn exact_char_poly(m: &DenseMatrix) -> Result<ExactPolynomial> {
    let d = m.dim();
    if d > MAX_EXACT_DIM {
        return Err(Error::SizeCap {
            what: "exact characteristic polynomial",
            order: d,
            cap: MAX_EXACT_DIM,
        });
    }
    let a = m.to_integer_rows()?;
    exact_char_poly_int(&a)
}

pub(crate) fn exact_char_poly_int(a: &[Vec<BigInt>]) -> Result<ExactPolynomial> {
    let d = a.len();
    let mut c = vec![BigInt::zero(); d + 1];
    c[d] = BigInt::one();
    // M_k = A M_{k-1} + c_{d-k+1} I, starting from M_0 = 0
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); d]; d];
    for k in 1..=d {
        let mut next = mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[d - k + 1];
        }
        mk = next;
        let am = mat_mul(a, &mk);
        let trace: BigInt = (0..d).map(|i| am[i][i].clone()).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::PolynomialDomain(format!(
                "Faddeev-LeVerrier trace not divisible by {k}; input is not integral"
            )));
        }
        c[d - k] = -q;
    }
    Ok(ExactPolynomial::new(c))
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = a.len();
    let mut out = vec![vec![BigInt::zero(); d]; d];
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Real roots with multiplicities, descending. `non_real` counts roots
/// (with multiplicity) that are not real.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealRoots {
    pub roots: Vec<(f64, usize)>,
    pub non_real: usize,
}

/// Default bisection width for [`real_roots`].
pub const ROOT_WIDTH: f64 = 1e-10;

pub fn real_roots(p: &ExactPolynomial, width: f64) -> Result<RealRoots> {
    if p.degree() == 0 {
        return Err(Error::PolynomialDomain(
            "real_roots needs degree >= 1".into(),
        ));
    }
    if !(width > 0.0) {
        return Err(Error::PolynomialDomain(
            "bisection width must be positive".into(),
        ));
    }
    let width = BigRational::from_float(width).expect("finite width");
    let poly = RatPoly::from_ints(p.coeffs());
    let mut roots = Vec::new();
    let mut non_real = 0;
    for (factor, multiplicity) in square_free_decomposition(&poly) {
        if factor.degree() == 0 {
            continue;
        }
        let found = isolate_and_refine(factor.clone(), &width);
        non_real += (factor.degree() - found.len()) * multiplicity;
        roots.extend(found.into_iter().map(|r| (r, multiplicity)));
    }
    roots.sort_by(|a, b| b.0.total_cmp(&a.0));
    Ok(RealRoots { roots, non_real })
}

/// Dense univariate polynomial over the rationals, coefficients low to high,
/// no trailing zeros (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_ints(c: &[BigInt]) -> Self {
        Self::trimmed(
            c.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        )
    }

    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("non-zero polynomial")
    }

    fn monic(&self) -> Self {
        let l = self.lead().clone();
        RatPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn derivative(&self) -> Self {
        Self::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Self::trimmed(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (RatPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        let lead = divisor.lead();
        for k in (0..quot.len()).rev() {
            let coef = &rem[k + dd] / lead;
            if !coef.is_zero() {
                for (j, dc) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &coef * dc;
                }
            }
            quot[k] = coef;
        }
        rem.truncate(dd);
        (Self::trimmed(quot), Self::trimmed(rem))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn sign_at(&self, x: &BigRational) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign as x -> +inf (`at_plus`) or x -> -inf.
    fn sign_at_infinity(&self, at_plus: bool) -> i8 {
        let s = sign(self.lead());
        if at_plus || self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Yun's algorithm: `p = prod f_i^i` with square-free, pairwise coprime `f_i`.
fn square_free_decomposition(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let p = p.monic();
    let dp = p.derivative();
    if dp.is_zero() {
        return vec![(p, 1)];
    }
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        let next_b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&next_b.derivative());
        if a.degree() > 0 {
            out.push((a, i));
        }
        b = next_b;
        i += 1;
    }
    out
}

struct Sturm(Vec<RatPoly>);

impl Sturm {
    fn new(p: &RatPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        Sturm(chain)
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn at(&self, x: &BigRational) -> usize {
        Self::variations(self.0.iter().map(|p| p.sign_at(x)))
    }

    fn at_infinity(&self, plus: bool) -> usize {
        Self::variations(self.0.iter().map(|p| p.sign_at_infinity(plus)))
    }
}

/// Isolates and refines every real root of a square-free polynomial.
/// A bisection point that hits a root exactly is recorded and deflated out,
/// after which isolation restarts on the quotient.
fn isolate_and_refine(mut p: RatPoly, width: &BigRational) -> Vec<f64> {
    let mut exact: Vec<BigRational> = Vec::new();
    'restart: loop {
        if p.degree() == 0 {
            break;
        }
        let sturm = Sturm::new(&p);
        let total = sturm.at_infinity(false) - sturm.at_infinity(true);
        if total == 0 {
            break;
        }
        let bound = cauchy_bound(&p);
        let mut stack = vec![(-bound.clone(), bound, total)];
        let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
        while let Some((lo, hi, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 {
                isolated.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            if p.sign_at(&mid) == 0 {
                p = p.div_rem(&linear(&mid)).0;
                exact.push(mid);
                continue 'restart;
            }
            let at_mid = sturm.at(&mid);
            stack.push((lo.clone(), mid.clone(), sturm.at(&lo) - at_mid));
            stack.push((mid, hi.clone(), at_mid - sturm.at(&hi)));
        }
        let mut out: Vec<f64> = exact.iter().map(to_f64).collect();
        for (lo, hi) in isolated {
            out.push(refine(&p, lo, hi, width));
        }
        return out;
    }
    exact.iter().map(to_f64).collect()
}

fn linear(root: &BigRational) -> RatPoly {
    RatPoly(vec![-root.clone(), BigRational::one()])
}

/// Power of two strictly above `1 + max |c_i / c_d|`, so every root lies in
/// the open interval `(-B, B)` and neither endpoint is a root.
fn cauchy_bound(p: &RatPoly) -> BigRational {
    let lead = p.lead().abs();
    let max = p.0[..p.degree()]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, x| if x > m { x } else { m });
    let target = max + BigRational::one();
    let mut b = BigRational::one();
    while b <= target {
        b *= BigRational::from_integer(BigInt::from(2));
    }
    b
}

/// Bisects an isolating interval `(lo, hi)` of a simple root down to `width`.
fn refine(p: &RatPoly, mut lo: BigRational, mut hi: BigRational, width: &BigRational) -> f64 {
    let two = BigRational::from_integer(BigInt::from(2));
    let s_hi = p.sign_at(&hi);
    if s_hi == 0 {
        return to_f64(&hi);
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let s = p.sign_at(&mid);
        if s == 0 {
            return to_f64(&mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    to_f64(&((lo + hi) / two))
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sum of all `r x r` principal minors (exact), used as an independent
/// check of characteristic-polynomial coefficients.
pub fn principal_minor_sum(m: &DenseMatrix, r: usize) -> Result<BigInt> {
    let a = m.to_integer_rows()?;
    let n = a.len();
    let mut total = BigInt::zero();
    let mut idx: Vec<usize> = (0..r).collect();
    if r == 0 {
        return Ok(BigInt::one());
    }
    if r > n {
        return Ok(total);
    }
    loop {
        let sub: Vec<Vec<BigInt>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        total += bareiss_det(sub);
        // next combination in lexicographic order
        let Some(k) = (0..r).rev().find(|&k| idx[k] < k + n - r) else {
            return Ok(total);
        };
        idx[k] += 1;
        for j in k + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Fraction-free Gaussian elimination determinant.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
