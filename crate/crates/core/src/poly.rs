//! Univariate polynomials over the rationals and exact rational root finding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `t − root`.
    pub fn linear(root: &Rat) -> Self {
        Poly::new(vec![-root, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Rat::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let delta = &c * dc;
                    rem[k + j] -= delta;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rational roots with multiplicities (ascending), and the cofactor that
    /// has no rational roots.
    pub fn rational_roots(&self) -> (Vec<(Rat, usize)>, Poly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut rest = self.monic();
        let mut roots = Vec::new();
        for r in distinct_rational_roots(&rest) {
            let lin = Poly::linear(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            debug_assert!(mult > 0);
            roots.push((r, mult));
        }
        (roots, rest)
    }
}

/// Distinct rational roots of a nonzero polynomial, ascending.
fn distinct_rational_roots(p: &Poly) -> Vec<Rat> {
    let mut p = p.clone();
    let mut roots = Vec::new();
    // strip the root at zero so the constant term is nonzero
    if p.coeff(0).is_zero() {
        roots.push(Rat::zero());
        let shift = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        p = Poly::new(p.coeffs[shift..].to_vec());
    }
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    // primitive integer form a_n x^n + ... + a_0
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c.to_big() * &lcm).to_integer()).collect();
    let n = ints.len() - 1;
    let lead = ints[n].clone();
    // y = lead·x turns this into a monic integer polynomial whose rational
    // roots are integers: coefficients lead^(n-1-i)·a_i
    let mut monic = Vec::with_capacity(n + 1);
    for (i, a) in ints.iter().enumerate() {
        if i == n {
            monic.push(BigInt::one());
        } else {
            monic.push(a * num_traits::pow(lead.clone(), n - 1 - i));
        }
    }
    let monic = Poly::new(monic.into_iter().map(Rat::from_bigint).collect());
    let sqfree = monic.div_rem(&monic.gcd(&monic.derivative())).0;
    let bound: BigInt = BigInt::one()
        + monic.coeffs.iter().map(|c| c.numer().abs()).max().unwrap_or_else(BigInt::zero);
    let chain = sturm_chain(&sqfree);
    let mut found = Vec::new();
    isolate_integer_roots(&sqfree, &chain, -bound.clone() - 1, bound, &mut found);
    let lead = Rat::from_bigint(lead);
    roots.extend(found.into_iter().map(|y| Rat::from_bigint(y) / &lead));
    roots.sort();
    roots
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
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
        chain.push(-&r);
    }
    chain
}

fn sign_changes(chain: &[Poly], x: &Rat) -> usize {
    let signs: Vec<i32> = chain.iter().map(|p| p.eval(x).signum()).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Collects integer roots of a squarefree `p` lying in `(lo, hi]`.
fn isolate_integer_roots(p: &Poly, chain: &[Poly], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let (lo_r, hi_r) = (Rat::from_bigint(lo.clone()), Rat::from_bigint(hi.clone()));
    let count = sign_changes(chain, &lo_r).saturating_sub(sign_changes(chain, &hi_r));
    if count == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if p.eval(&hi_r).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid = (&lo + &hi).div_floor(&BigInt::from(2));
    isolate_integer_roots(p, chain, lo, mid.clone(), out);
    isolate_integer_roots(p, chain, mid, hi, out);
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    /// Human-readable form in the variable `t`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.signum() < 0;
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
