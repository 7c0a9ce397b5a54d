//! Polynomials over F2 stored as little-endian coefficient bit masks.

mod parse;
pub mod word;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// A polynomial in F2[x]. Bit `i` of the mask is the coefficient of `x^i`.
///
/// The limb vector never carries trailing zero limbs, so structural equality
/// is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    limbs: Vec<u64>,
}

/// Output style for [`format_poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// `x^4+x+1`
    Sum,
    /// `0x13`
    Hex,
    /// `x^3*(x+1)^4*(x^2+x+1)`
    Factored,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::from_mask(1)
    }

    pub fn x() -> Self {
        Poly::from_mask(0b10)
    }

    pub fn x_plus_one() -> Self {
        Poly::from_mask(0b11)
    }

    pub fn from_mask(mask: u64) -> Self {
        Poly::from_limbs(vec![mask])
    }

    pub fn from_limbs(mut limbs: Vec<u64>) -> Self {
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        Poly { limbs }
    }

    /// Sum of the monomials `x^e` for each listed exponent (repeats cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Poly::zero();
        for &e in exps {
            p.flip_bit(e);
        }
        p
    }

    pub fn monomial(n: usize) -> Self {
        let mut p = Poly::zero();
        p.flip_bit(n);
        p
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// The mask as a single word, if the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|limb| (limb >> (i % 64)) & 1 == 1)
    }

    fn flip_bit(&mut self, i: usize) {
        let limb = i / 64;
        if self.limbs.len() <= limb {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << (i % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn eval_at_zero(&self) -> bool {
        self.coeff(0)
    }

    pub fn eval_at_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn shl(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let (words, bits) = (n / 64, n % 64);
        let mut out = vec![0u64; self.limbs.len() + words + 1];
        for (i, &limb) in self.limbs.iter().enumerate() {
            out[i + words] ^= limb << bits;
            if bits != 0 {
                out[i + words + 1] ^= limb >> (64 - bits);
            }
        }
        Poly::from_limbs(out)
    }

    /// `self ^= other << shift`, in place.
    fn xor_shifted(&mut self, other: &Poly, shift: usize) {
        let (words, bits) = (shift / 64, shift % 64);
        let need = other.limbs.len() + words + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &limb) in other.limbs.iter().enumerate() {
            self.limbs[i + words] ^= limb << bits;
            if bits != 0 {
                self.limbs[i + words + 1] ^= limb >> (64 - bits);
            }
        }
        self.normalize();
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + other.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.limbs.iter().enumerate() {
                let prod = word::clmul(a, b);
                out[i + j] ^= prod as u64;
                out[i + j + 1] ^= (prod >> 64) as u64;
            }
        }
        Poly::from_limbs(out)
    }

    pub fn square(&self) -> Poly {
        let mut out = Vec::with_capacity(self.limbs.len() * 2);
        for &limb in &self.limbs {
            out.push(spread_bits(limb as u32));
            out.push(spread_bits((limb >> 32) as u32));
        }
        Poly::from_limbs(out)
    }

    /// Euclidean division: `(q, r)` with `self = q*den + r` and `deg r < deg den`.
    pub fn divrem(&self, den: &Poly) -> Result<(Poly, Poly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            rem.xor_shifted(den, shift);
            quot.flip_bit(shift);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, den: &Poly) -> Result<Poly> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            rem.xor_shifted(den, dr - dd);
        }
        Ok(rem)
    }

    /// Exact quotient; `None` if `den` does not divide `self`.
    pub fn div_exact(&self, den: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(den).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Result<Poly> {
        self.mul(other).rem(m)
    }

    pub fn square_mod(&self, m: &Poly) -> Result<Poly> {
        self.square().rem(m)
    }

    /// Formal derivative. In characteristic 2 only odd-degree terms survive.
    pub fn derivative(&self) -> Poly {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        // odd bits shift down by one and never cross a limb boundary
        Poly::from_limbs(self.limbs.iter().map(|l| (l & ODD) >> 1).collect())
    }

    /// Square root, defined when every odd coefficient is zero.
    pub fn sqrt(&self) -> Option<Poly> {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        if self.limbs.iter().any(|l| l & ODD != 0) {
            return None;
        }
        let mut out = vec![0u64; self.limbs.len().div_ceil(2)];
        for (i, &limb) in self.limbs.iter().enumerate() {
            out[i / 2] |= (compress_even_bits(limb) as u64) << (32 * (i % 2));
        }
        Some(Poly::from_limbs(out))
    }

    /// `p(x+1)`.
    pub fn translate(&self) -> Poly {
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        if let Some(w) = self.to_u64() {
            return Poly::from_mask(word::translate(w));
        }
        // Horner in x+1: acc <- acc*(x+1) + c_i
        let mut acc = Poly::zero();
        for i in (0..=deg).rev() {
            let mut next = acc.shl(1);
            next += &acc;
            if self.coeff(i) {
                next.flip_bit(0);
            }
            acc = next;
        }
        acc
    }

    /// `x^deg(p) * p(1/x)`: the coefficient mask reversed across the degree.
    pub fn reciprocal(&self) -> Result<Poly> {
        if !self.eval_at_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let deg = self.degree().expect("constant term is set");
        let mut out = Poly::zero();
        for i in 0..=deg {
            if self.coeff(i) {
                out.flip_bit(deg - i);
            }
        }
        Ok(out)
    }

    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::from("0x");
        let mut iter = self.limbs.iter().rev();
        if let Some(top) = iter.next() {
            s.push_str(&format!("{top:x}"));
        }
        for limb in iter {
            s.push_str(&format!("{limb:016x}"));
        }
        s
    }

    pub fn to_sum_string(&self) -> String {
        let Some(deg) = self.degree() else {
            return "0".to_string();
        };
        let mut terms = Vec::new();
        for i in (0..=deg).rev() {
            if self.coeff(i) {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                });
            }
        }
        terms.join("+")
    }
}

/// Render a polynomial in the requested style. `Factored` runs a full factorization.
pub fn format_poly(p: &Poly, style: Style) -> String {
    match style {
        Style::Sum => p.to_sum_string(),
        Style::Hex => p.to_hex(),
        Style::Factored => match crate::factor::factorize(p) {
            Ok(f) => f.to_string(),
            Err(_) => "0".to_string(),
        },
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    parse::parse(text, None)
}

/// Like [`parse_poly`], with `@name` atoms looked up through `resolve`.
pub fn parse_poly_with(text: &str, resolve: &dyn Fn(&str) -> Option<Poly>) -> Result<Poly> {
    parse::parse(text, Some(resolve))
}

fn spread_bits(x: u32) -> u64 {
    let mut x = x as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

fn compress_even_bits(x: u64) -> u32 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x >> 16)) & 0x0000_0000_FFFF_FFFF;
    x as u32
}

/// Orders by degree, then by mask; the zero polynomial sorts first.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.limbs.len() < rhs.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| acc.mul(&p))
    }
}

impl<'a> std::iter::Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sum_string())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_sum_string())
    }
}

impl fmt::LowerHex for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        parse::parse(s, None)
    }
}

impl From<u64> for Poly {
    fn from(mask: u64) -> Poly {
        Poly::from_mask(mask)
    }
}
