//! Univariate polynomials over Q(i), characteristic polynomials and
//! extraction of the roots that lie in Q(i).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::gauss_int::{divisors_up_to_units, GaussInt};
use super::matrix::MatrixGR;
use super::scalar::GaussianRational as GR;
use crate::error::{Error, Result};

/// Coefficients lowest degree first; the leading coefficient is nonzero and
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyGR {
    coefficients: Vec<GR>,
}

impl PolyGR {
    pub fn new(mut coefficients: Vec<GR>) -> Self {
        while coefficients.last().is_some_and(GR::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GR::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(GR::one())
    }

    pub fn constant(c: GR) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear(r: &GR) -> Self {
        Self::new(vec![-r, GR::one()])
    }

    pub fn coefficients(&self) -> &[GR] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GR> {
        self.coefficients.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(GR::is_one)
    }

    pub fn eval(&self, x: &GR) -> GR {
        let mut acc = GR::zero();
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Matrix substitution `p(M)`.
    pub fn eval_matrix(&self, m: &MatrixGR) -> MatrixGR {
        let n = m.rows();
        let mut acc = MatrixGR::zeros(n, n);
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * m) + &MatrixGR::scalar(n, c.clone());
        }
        acc
    }

    pub fn scale(&self, k: &GR) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    pub fn add(&self, o: &PolyGR) -> Self {
        let n = self.coefficients.len().max(o.coefficients.len());
        let zero = GR::zero();
        Self::new(
            (0..n)
                .map(|k| {
                    let a = self.coefficients.get(k).unwrap_or(&zero);
                    let b = o.coefficients.get(k).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &PolyGR) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GR::zero(); self.coefficients.len() + o.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in o.coefficients.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn div_rem(&self, d: &PolyGR) -> (PolyGR, PolyGR) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coefficients.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![GR::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coefficients.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GR::from_int(k as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &PolyGR) -> PolyGR {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for PolyGR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyGR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic characteristic polynomial `det(x Id - M)` by Faddeev–LeVerrier.
pub fn char_poly(m: &MatrixGR) -> Result<PolyGR> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut c = vec![GR::zero(); n + 1];
    c[n] = GR::one();
    // am holds M * M_{k-1}; M_0 = 0
    let mut am = MatrixGR::zeros(n, n);
    for k in 1..=n {
        let mk = &am + &MatrixGR::scalar(n, c[n - k + 1].clone());
        am = m * &mk;
        c[n - k] = -(&am.trace() / &GR::from_int(k as i64));
    }
    Ok(PolyGR::new(c))
}

/// Roots of a polynomial that lie in Q(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRoots {
    /// With multiplicity, sorted by (real, imaginary).
    pub roots: Vec<GR>,
    /// Monic cofactor without roots in Q(i).
    pub residual: PolyGR,
}

impl GaussianRoots {
    /// Distinct roots with their multiplicities, in sorted order.
    pub fn distinct(&self) -> Vec<(GR, usize)> {
        let mut out: Vec<(GR, usize)> = Vec::new();
        for r in &self.roots {
            match out.last_mut() {
                Some((x, m)) if x == r => *m += 1,
                _ => out.push((r.clone(), 1)),
            }
        }
        out
    }
}

fn lcm_of_denominators(p: &PolyGR) -> BigInt {
    p.coefficients().iter().fold(BigInt::one(), |acc, c| {
        num_integer::lcm(acc, c.denominator_lcm())
    })
}

fn to_gauss_int(c: &GR) -> GaussInt {
    debug_assert!(c.re().is_integer() && c.im().is_integer());
    GaussInt {
        re: c.re().to_integer(),
        im: c.im().to_integer(),
    }
}

fn gauss_quotient(num: &GaussInt, den: &GaussInt) -> GR {
    let n = GR::new(
        BigRational::from_integer(num.re.clone()),
        BigRational::from_integer(num.im.clone()),
    );
    let d = GR::new(
        BigRational::from_integer(den.re.clone()),
        BigRational::from_integer(den.im.clone()),
    );
    &n / &d
}

fn sort_key(a: &GR, b: &GR) -> std::cmp::Ordering {
    a.re().cmp(b.re()).then_with(|| a.im().cmp(b.im()))
}

/// Every root of `p` lying in Q(i), with multiplicity, and the cofactor.
///
/// The square-free part of `p` is scaled to a primitive polynomial over
/// Z[i]; any root `u/v` then has `u | a_0` and `v | a_n` in Z[i], so testing
/// all such quotients finds every Gaussian-rational root.
pub fn gaussian_roots(p: &PolyGR) -> Result<GaussianRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.monic();
    let sf = if q.degree() == Some(0) {
        q.clone()
    } else {
        q.div_rem(&q.gcd(&q.derivative())).0
    };

    let mut candidates: Vec<GR> = Vec::new();
    let mut sf_nz = sf.clone();
    if sf_nz.eval(&GR::zero()).is_zero() {
        candidates.push(GR::zero());
        sf_nz = sf_nz.div_rem(&PolyGR::linear(&GR::zero())).0;
    }
    if sf_nz.degree().unwrap_or(0) > 0 {
        let scale = GR::from_rational(BigRational::from_integer(lcm_of_denominators(&sf_nz)));
        let prim = sf_nz.scale(&scale);
        let a0 = to_gauss_int(&prim.coefficients()[0]);
        let an = to_gauss_int(prim.leading().unwrap());
        let nums = divisors_up_to_units(&a0)?;
        let dens = divisors_up_to_units(&an)?;
        for u in &nums {
            for unit in GaussInt::units() {
                let num = u.mul(&unit);
                for v in &dens {
                    let cand = gauss_quotient(&num, v);
                    if sf_nz.eval(&cand).is_zero() {
                        candidates.push(cand);
                    }
                }
            }
        }
    }
    candidates.sort_by(sort_key);
    candidates.dedup();

    let mut residual = q;
    let mut roots = Vec::new();
    for r in candidates {
        let lin = PolyGR::linear(&r);
        loop {
            let (quot, rem) = residual.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            residual = quot;
            roots.push(r.clone());
        }
    }
    Ok(GaussianRoots { roots, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: i64, im: i64) -> GR {
        GR::from_ints(re, im)
    }

    fn diag(entries: &[GR]) -> MatrixGR {
        let mut m = MatrixGR::zeros(entries.len(), entries.len());
        for (k, e) in entries.iter().enumerate() {
            m[(k, k)] = e.clone();
        }
        m
    }

    #[test]
    fn char_poly_examples() {
        let x2p1 = PolyGR::from_ints(&[1, 0, 1]);
        assert_eq!(char_poly(&diag(&[c(0, 1), c(0, -1)])).unwrap(), x2p1);
        assert_eq!(
            char_poly(&MatrixGR::zeros(3, 3)).unwrap(),
            PolyGR::from_ints(&[0, 0, 0, 1])
        );
        assert_eq!(
            char_poly(&MatrixGR::from_int_rows(&[&[0, -1], &[1, 0]])).unwrap(),
            x2p1
        );
        assert!(matches!(
            char_poly(&MatrixGR::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn root_examples() {
        let r = gaussian_roots(&PolyGR::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(r.roots, vec![c(0, -1), c(0, 1)]);
        assert_eq!(r.residual, PolyGR::one());

        let r = gaussian_roots(&PolyGR::from_ints(&[-2, 0, 1])).unwrap();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual, PolyGR::from_ints(&[-2, 0, 1]));

        // x (x - 2i)^2
        let p = PolyGR::linear(&GR::zero())
            .mul(&PolyGR::linear(&c(0, 2)))
            .mul(&PolyGR::linear(&c(0, 2)));
        let r = gaussian_roots(&p).unwrap();
        assert_eq!(r.roots, vec![c(0, 0), c(0, 2), c(0, 2)]);
        assert_eq!(r.residual, PolyGR::one());

        assert!(matches!(
            gaussian_roots(&PolyGR::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn fractional_roots_with_mixed_residual() {
        // 3 (x - 1/2 + i/3)^2 (x^2 - 3)
        let r0 = GR::from_fractions(1, 2, -1, 3);
        let p = PolyGR::linear(&r0)
            .mul(&PolyGR::linear(&r0))
            .mul(&PolyGR::from_ints(&[-3, 0, 1]))
            .scale(&c(3, 0));
        let r = gaussian_roots(&p).unwrap();
        assert_eq!(r.roots, vec![r0.clone(), r0]);
        assert_eq!(r.residual, PolyGR::from_ints(&[-3, 0, 1]));
    }

    #[test]
    fn cayley_hamilton_up_to_sixteen() {
        for n in [1usize, 2, 5, 9, 16] {
            let mut m = MatrixGR::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = c(
                        ((i * 7 + j * 3) % 5) as i64 - 2,
                        ((i + 2 * j) % 3) as i64 - 1,
                    );
                }
            }
            let p = char_poly(&m).unwrap();
            assert_eq!(p.degree(), Some(n));
            assert!(
                p.eval_matrix(&m).is_zero(),
                "Cayley-Hamilton fails at n = {n}"
            );
        }
    }

    fn arb_root() -> impl Strategy<Value = GR> {
        (-6i64..7, 1i64..4, -6i64..7, 1i64..4)
            .prop_map(|(a, b, cc, d)| GR::from_fractions(a, b, cc, d))
    }

    proptest! {
        #[test]
        fn roots_times_residual_reproduce_input(
            roots in proptest::collection::vec(arb_root(), 0..5),
            extra in proptest::sample::select(vec![0i64, 2, 3, 5]),
            lead in (1i64..5, -3i64..4),
        ) {
            let lead = c(lead.0, lead.1);
            let mut p = PolyGR::constant(lead.clone());
            for r in &roots {
                p = p.mul(&PolyGR::linear(r));
            }
            if extra != 0 {
                // x^2 - extra has no roots in Q(i) for these values
                p = p.mul(&PolyGR::from_ints(&[-extra, 0, 1]));
            }
            let found = gaussian_roots(&p).unwrap();
            let mut want = roots.clone();
            want.sort_by(sort_key);
            prop_assert_eq!(&found.roots, &want);
            let mut rebuilt = found.residual.scale(&lead);
            for r in &found.roots {
                rebuilt = rebuilt.mul(&PolyGR::linear(r));
            }
            prop_assert_eq!(rebuilt, p);
        }
    }
}
