//! Gaussian integers and their divisors, for rational-root search in Z[i].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn units() -> [GaussInt; 4] {
        [
            GaussInt::new(1, 0),
            GaussInt::new(0, 1),
            GaussInt::new(-1, 0),
            GaussInt::new(0, -1),
        ]
    }

    /// `self / d` when `d` divides `self` exactly in Z[i].
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        // self * conj(d)
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if let (Some(p), true) = (a.checked_mul(b), m > 0) {
        return p % m;
    }
    let p = BigUint::from(a) * BigUint::from(b) % BigUint::from(m);
    p.to_u128().expect("reduced below modulus")
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller–Rabin with the first 13 prime bases (deterministic below 3.3e24).
fn is_prime(n: u128) -> bool {
    const BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of the odd composite `n` (Pollard rho).
fn pollard_rho(n: u128) -> u128 {
    for c in 1u128.. {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u128);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn factor_into(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    for p in [2u128, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            out.push(p);
            factor_into(n / p, out);
            return;
        }
    }
    let d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

fn rational_prime_factors(n: &BigInt) -> Result<Vec<u128>> {
    let n = n.abs().to_u128().ok_or_else(|| {
        Error::Unsupported("Gaussian root search: coefficient norm exceeds 128 bits".into())
    })?;
    let mut out = Vec::new();
    factor_into(n, &mut out);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn isqrt(n: u128) -> u128 {
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Gaussian primes above the rational prime `p`.
fn primes_over(p: u128) -> Vec<GaussInt> {
    if p == 2 {
        return vec![GaussInt::new(1, 1)];
    }
    if p % 4 == 3 {
        return vec![GaussInt::new(BigInt::from(p), 0)];
    }
    // Hermite–Serret: x^2 = -1 mod p, then Euclid on (p, x) down to sqrt(p)
    let root = (2..p)
        .map(|c| pow_mod(c, (p - 1) / 4, p))
        .find(|&x| mul_mod(x, x, p) == p - 1)
        .expect("p = 1 mod 4 has a square root of -1");
    let limit = isqrt(p);
    let (mut a, mut b) = (p, root);
    while b > limit {
        (a, b) = (b, a % b);
    }
    let c = isqrt(p - b * b);
    debug_assert_eq!(b * b + c * c, p);
    vec![
        GaussInt::new(BigInt::from(b), BigInt::from(c)),
        GaussInt::new(BigInt::from(b), -BigInt::from(c)),
    ]
}

/// Every divisor of `z` up to units (one representative per associate class).
pub(crate) fn divisors_up_to_units(z: &GaussInt) -> Result<Vec<GaussInt>> {
    assert!(!z.is_zero(), "divisors of zero");
    let mut factors: Vec<(GaussInt, u32)> = Vec::new();
    let mut rest = z.clone();
    for p in rational_prime_factors(&z.norm())? {
        for pi in primes_over(p) {
            let mut e = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((pi, e));
            }
        }
    }
    debug_assert!(rest.norm().is_one(), "factorisation leaves a unit");
    let mut divs = vec![GaussInt::one()];
    for (pi, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    Ok(divs)
}
