//! Dense polynomials over `F_p` for `p < 2^31`, coefficients ascending.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::primes::{mul_mod, pow_mod};

pub(crate) type Fp = Vec<u64>;

pub(crate) fn reduce(coeffs: &[BigInt], p: u64) -> Fp {
    let modulus = BigInt::from(p);
    let mut out: Fp = coeffs
        .iter()
        .map(|c| {
            let r = c % &modulus;
            let r = if r.sign() == num_bigint::Sign::Minus { r + &modulus } else { r };
            r.to_u64().unwrap()
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn trim(a: &mut Fp) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub(crate) fn deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = inv(b[db], p);
    let mut r = a.to_vec();
    trim(&mut r);
    let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        q[dr - db] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            r[dr - db + i] = (r[dr - db + i] + p - mul_mod(c, bi, p)) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    div_rem(a, b, p).1
}

pub(crate) fn monic(a: &[u64], p: u64) -> Fp {
    match deg(a) {
        None => Vec::new(),
        Some(d) => {
            let c = inv(a[d], p);
            a[..=d].iter().map(|&x| mul_mod(x, c, p)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub(crate) fn derivative(a: &[u64], p: u64) -> Fp {
    let mut out: Fp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

/// `base^exp mod modulus` by square-and-multiply.
pub(crate) fn pow_mod_poly(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Fp {
    let mut acc: Fp = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of a squarefree `f`, by distinct-degree
/// splitting: at step `d`, `gcd(x^{p^d} − x, f)` collects the factors of
/// degree `d`.
pub(crate) fn distinct_degree_pattern(f: &[u64], p: u64) -> Vec<u32> {
    let mut f = monic(f, p);
    let mut degrees = Vec::new();
    let x: Fp = vec![0, 1];
    let mut h = rem(&x, &f, p);
    let mut d = 1usize;
    while deg(&f).is_some_and(|n| 2 * d <= n) {
        h = pow_mod_poly(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        let gd = deg(&g).unwrap_or(0);
        if gd > 0 {
            degrees.extend(std::iter::repeat(d as u32).take(gd / d));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
        d += 1;
    }
    if let Some(n) = deg(&f) {
        if n > 0 {
            degrees.push(n as u32);
        }
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let p = 7;
        // (x+1)(x+2) = x^2 + 3x + 2
        assert_eq!(mul(&[1, 1], &[2, 1], p), vec![2, 3, 1]);
        let (q, r) = div_rem(&[2, 3, 1], &[1, 1], p);
        assert_eq!((q, r), (vec![2, 1], vec![]));
        assert_eq!(gcd(&[2, 3, 1], &[6, 5, 1], p), vec![2, 1]); // x+2 is shared: (x+2)(x+3)
        assert_eq!(derivative(&[5, 0, 0, 0, 0, 0, 0, 1], p), Vec::<u64>::new());
        assert_eq!(reduce(&[BigInt::from(-1), BigInt::from(15)], p), vec![6, 1]);
    }

    #[test]
    fn patterns_of_x2_plus_1() {
        assert_eq!(distinct_degree_pattern(&[1, 0, 1], 13), vec![1, 1]);
        assert_eq!(distinct_degree_pattern(&[1, 0, 1], 3), vec![2]);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let p = 11;
        let m = vec![3, 0, 5, 1];
        let b = vec![4, 7, 1];
        let mut acc = vec![1];
        for e in 0..20 {
            assert_eq!(pow_mod_poly(&b, e, &m, p), rem(&acc, &m, p));
            acc = rem(&mul(&acc, &b, p), &m, p);
        }
    }
}
