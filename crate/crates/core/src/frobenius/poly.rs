//! Integer polynomials: parsing, derivatives and discriminants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A nonconstant polynomial with integer coefficients, ascending by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(IntPoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// `f(x) = ∏ (x − r)` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Result<Self> {
        let mut c = vec![BigInt::one()];
        for &r in roots {
            let mut next = vec![BigInt::zero(); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            c = next;
        }
        IntPoly::new(c)
    }

    /// `disc(f) = (−1)^{n(n−1)/2} · res(f, f′) / lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree();
        let derivative = derivative(&self.coeffs);
        let res = resultant(&self.coeffs, &derivative);
        let (q, r) = res.div_rem(self.leading());
        debug_assert!(r.is_zero());
        if (n * (n - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }
}

fn derivative(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(i, a)| a * i).collect()
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

fn degree_of(c: &[BigInt]) -> Option<usize> {
    c.iter().rposition(|a| !a.is_zero())
}

fn content(c: &[BigInt]) -> BigInt {
    c.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
}

/// Pseudo-remainder: `lc(b)^{deg a − deg b + 1} · a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree_of(b).unwrap();
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    let mut steps = (r.len() as isize - 1) - db as isize + 1;
    while let Some(dr) = degree_of(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b[..=db].iter().enumerate() {
            r[dr - db + i] -= &lr * bi;
        }
        trim(&mut r);
        steps -= 1;
    }
    // remaining powers of lc(b) make the result the true pseudo-remainder
    while steps > 0 {
        for x in r.iter_mut() {
            *x *= lb;
        }
        steps -= 1;
    }
    r
}

/// Resultant over ℤ by the subresultant algorithm.
pub(crate) fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (Some(mut da), Some(mut db)) = (degree_of(a), degree_of(b)) else {
        return BigInt::zero();
    };
    let mut a = a[..=da].to_vec();
    let mut b = b[..=db].to_vec();
    let ca = content(&a);
    let cb = content(&b);
    for x in a.iter_mut() {
        *x /= &ca;
    }
    for x in b.iter_mut() {
        *x /= &cb;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    loop {
        if db == 0 {
            // a nonzero constant b: res = b^{deg a} (scaled by the chain so far)
            let h_final = num_traits::pow(b[0].clone(), da);
            let denom = num_traits::pow(h.clone(), da.saturating_sub(1));
            let hn = if da == 0 { BigInt::one() } else { h_final / denom };
            return s * t * hn;
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b);
        let Some(dr) = degree_of(&r) else {
            return BigInt::zero();
        };
        a = b;
        da = db;
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r[..=dr].iter().map(|x| x / &divisor).collect();
        db = dr;
        g = a[da].clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Accepts `a0,a1,...,an` or an expression such as `x^4 - x - 1` or
    /// `3x^2+2*x-7`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') || (!s.contains('x') && s.parse::<BigInt>().is_ok()) {
            let coeffs = s
                .split(',')
                .map(|t| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            return IntPoly::new(coeffs);
        }
        parse_expression(s)
    }
}

fn parse_expression(s: &str) -> Result<IntPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bad = |msg: &str| Error::Parse(format!("{msg} in `{s}`"));
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        let after = prev.replace(ch);
        if (ch == '+' || ch == '-') && after != Some('^') {
            if after.is_some() {
                if current.is_empty() {
                    return Err(bad("dangling sign"));
                }
                terms.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((negative, current));

    let mut coeffs: Vec<BigInt> = Vec::new();
    for (negative, term) in terms {
        let (coeff, power) = match term.find('x') {
            None => (term.parse::<BigInt>().map_err(|_| bad("bad constant"))?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coeff = if head.is_empty() {
                    BigInt::one()
                } else {
                    head.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
                };
                let tail = &term[pos + 1..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(|| bad("expected `^` after x"))?
                        .parse::<usize>()
                        .map_err(|_| bad("bad exponent"))?
                };
                (coeff, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        if negative {
            coeffs[power] -= coeff;
        } else {
            coeffs[power] += coeff;
        }
    }
    IntPoly::new(coeffs)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parses_both_notations() {
        assert_eq!(p("x^4-x-1"), IntPoly::from_i64(&[-1, -1, 0, 0, 1]).unwrap());
        assert_eq!(p("-1,-1,0,0,1"), p("x^4 - x - 1"));
        assert_eq!(p("3x^2 + 2*x - 7"), IntPoly::from_i64(&[-7, 2, 3]).unwrap());
        assert_eq!(p("-x^3+x^3+x"), IntPoly::from_i64(&[0, 1]).unwrap());
        assert_eq!(p("x^2+1").to_string(), "x^2 + 1");
        assert_eq!(p("2x^3-x+5").to_string(), "2x^3 - x + 5");
        for bad in ["", "x^", "x^-1", "x+", "3y", "1,a", "5", "x^2-x^2"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(p("x^2+1").discriminant(), BigInt::from(-4));
        assert_eq!(p("x^4-x-1").discriminant(), BigInt::from(-283));
        assert_eq!(p("x^2-2").discriminant(), BigInt::from(8));
        assert_eq!(p("x^3-2").discriminant(), BigInt::from(-108));
        assert_eq!(p("x^2").discriminant(), BigInt::zero());
        // ax^2+bx+c: b^2-4ac
        assert_eq!(p("3x^2+5x+1").discriminant(), BigInt::from(13));
        assert_eq!(p("x+7").discriminant(), BigInt::one());
    }

    #[test]
    fn split_polynomial_discriminant_is_root_product() {
        let roots = [1i64, 2, 4, -3, 7];
        let mut expected = BigInt::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                expected *= BigInt::from(roots[i] - roots[j]).pow(2);
            }
        }
        assert_eq!(IntPoly::from_roots(&roots).unwrap().discriminant(), expected);
    }
}
