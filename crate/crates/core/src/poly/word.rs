//! Single-word kernels for polynomials of degree < 64.
//!
//! These back the hot loops (irreducible tables, blind search) where a
//! heap-allocated [`Poly`](super::Poly) would dominate the cost.

/// Carry-less product of two 64-bit coefficient masks.
#[inline]
pub fn clmul(a: u64, b: u64) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the feature was detected at runtime.
            return unsafe { clmul_pclmul(a, b) };
        }
    }
    clmul_portable(a, b)
}

#[inline]
pub fn clmul_portable(a: u64, b: u64) -> u128 {
    let (mut small, big) = if a.count_ones() < b.count_ones() { (a, b) } else { (b, a) };
    let big = big as u128;
    let mut acc = 0u128;
    while small != 0 {
        acc ^= big << small.trailing_zeros();
        small &= small - 1;
    }
    acc
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq,sse2")]
unsafe fn clmul_pclmul(a: u64, b: u64) -> u128 {
    use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_cvtsi64_si128, _mm_extract_epi64};
    let x = _mm_cvtsi64_si128(a as i64);
    let y = _mm_cvtsi64_si128(b as i64);
    let r = _mm_clmulepi64_si128::<0>(x, y);
    let lo = _mm_extract_epi64::<0>(r) as u64 as u128;
    let hi = _mm_extract_epi64::<1>(r) as u64 as u128;
    lo | (hi << 64)
}

#[inline]
pub fn degree(a: u64) -> Option<u32> {
    (a != 0).then(|| 63 - a.leading_zeros())
}

#[inline]
fn degree128(a: u128) -> Option<u32> {
    (a != 0).then(|| 127 - a.leading_zeros())
}

/// Product if it fits in one word.
#[inline]
pub fn mul(a: u64, b: u64) -> Option<u64> {
    u64::try_from(clmul(a, b)).ok()
}

/// `a mod m` for a double-width `a`. `m` must be nonzero.
#[inline]
pub fn rem(mut a: u128, m: u64) -> u64 {
    let dm = degree(m).expect("modulus must be nonzero");
    let m = m as u128;
    while let Some(da) = degree128(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a as u64
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    rem(clmul(a, b), m)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        a = rem(a as u128, b);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin's test for degree < 64.
pub fn is_irreducible(p: u64) -> bool {
    let Some(n) = degree(p) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if p & 1 == 0 {
        return false;
    }
    // x^(2^k) mod p for k = 0..=n
    let mut frob = Vec::with_capacity(n as usize + 1);
    let mut cur = rem(2, p);
    frob.push(cur);
    for _ in 0..n {
        cur = mul_mod(cur, cur, p);
        frob.push(cur);
    }
    if frob[n as usize] != frob[0] {
        return false;
    }
    prime_divisors(n as usize).into_iter().all(|q| gcd(p, frob[n as usize / q] ^ 2) == 1)
}

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `p(x+1)` for a single-word polynomial.
pub fn translate(p: u64) -> u64 {
    let mut acc = 0u64;
    for i in (0..64).rev() {
        acc = (acc << 1) ^ acc ^ ((p >> i) & 1);
    }
    acc
}

/// `1 + t + ... + t^n` if it fits in one word.
pub fn geometric_sum(t: u64, n: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..n {
        acc = mul(acc, t)? ^ 1;
    }
    Some(acc)
}

/// Closed-form bi-unitary divisor sum of `t^e` for irreducible `t`, if it fits in one word.
pub fn sigma_bistar_prime_power(t: u64, e: u32) -> Option<u64> {
    match e {
        0 => Some(1),
        e if e % 2 == 1 => geometric_sum(t, e),
        e => {
            let n = e / 2;
            let a = geometric_sum(t, n)?;
            let b = geometric_sum(t, n - 1)?;
            mul(mul(t ^ 1, a)?, b)
        }
    }
}

pub fn pow(t: u64, e: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = mul(acc, t)?;
    }
    Some(acc)
}
