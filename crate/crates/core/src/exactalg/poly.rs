use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Largest finite field enumerated when searching for roots.
const MAX_ROOT_SEARCH: u64 = 1 << 20;
/// Largest constant/leading coefficient whose divisors are enumerated over `Q`.
const MAX_DIVISOR_SEARCH: u64 = 1 << 40;

/// Evaluates a polynomial given by coefficients `[c0, c1, ...]`.
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    coeffs.iter().rev().fold(Scalar::zero(field), |acc, c| &(&acc * x) + c)
}

/// Distinct roots in the coefficient field, sorted by serialization.
///
/// Over `Q` this uses the rational root theorem; over finite fields every
/// element is tried.
pub fn poly_roots(field: Field, coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = match field {
        Field::Finite(f) => {
            if f.order() > MAX_ROOT_SEARCH {
                return Err(Error::SizeCap(format!("root search over a field of order {}", f.order())));
            }
            Scalar::all_elements(f).into_iter().filter(|x| eval_poly(&c, x).is_zero()).collect()
        }
        Field::Rational => rational_roots(&c)?,
    };
    roots.sort_by_key(|r| r.to_string());
    roots.dedup();
    Ok(roots)
}

fn rational_roots(c: &[Scalar]) -> Result<Vec<Scalar>> {
    let rats: Vec<&BigRational> = c.iter().map(|s| s.as_rational().expect("rational coefficients")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r.numer() * &lcm) / r.denom()).collect();
    let mut out = Vec::new();
    let shift = ints.iter().take_while(|x| x.is_zero()).count();
    if shift > 0 {
        out.push(Scalar::zero(Field::Rational));
    }
    let ints = &ints[shift..];
    if ints.len() <= 1 {
        return Ok(out);
    }
    let a0 = divisors(&ints[0])?;
    let an = divisors(ints.last().expect("non-empty"))?;
    for p in &a0 {
        for q in &an {
            for sign in [1i64, -1] {
                let x = Scalar::Rational(BigRational::new(BigInt::from(sign * *p as i64), BigInt::from(*q)));
                if eval_poly(c, &x).is_zero() {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<u64>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_DIVISOR_SEARCH)
        .ok_or_else(|| Error::SizeCap(format!("coefficient {n} too large for rational root search")))?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Ok(out)
}

impl Matrix {
    /// Distinct eigenvalues lying in the base field.
    pub fn eigenvalues(&self) -> Result<Vec<Scalar>> {
        poly_roots(self.field(), &self.charpoly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_cubic() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let q = Field::Rational;
        let c = vec![Scalar::zero(q), Scalar::rational(-3, 2), Scalar::rational(5, 2), Scalar::one(q)];
        let r = poly_roots(q, &c).unwrap();
        let mut want = vec![Scalar::zero(q), Scalar::rational(1, 2), Scalar::from_i64(q, -3)];
        want.sort_by_key(|r| r.to_string());
        assert_eq!(r, want);
    }

    #[test]
    fn no_rational_roots_of_x2_minus_2() {
        let q = Field::Rational;
        let c = vec![Scalar::from_i64(q, -2), Scalar::zero(q), Scalar::one(q)];
        assert!(poly_roots(q, &c).unwrap().is_empty());
    }

    #[test]
    fn x2_plus_1_splits_over_f9_not_f3() {
        for (f, n) in [(Field::finite(3, 1).unwrap(), 0), (Field::finite(3, 2).unwrap(), 2)] {
            let c = vec![Scalar::one(f), Scalar::zero(f), Scalar::one(f)];
            assert_eq!(poly_roots(f, &c).unwrap().len(), n);
        }
    }

    #[test]
    fn eigenvalues_of_reflection() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[0, 1], &[1, 0]]);
        let ev = m.eigenvalues().unwrap();
        assert_eq!(ev.len(), 2);
        assert!(ev.contains(&Scalar::one(q)) && ev.contains(&Scalar::from_i64(q, -1)));
    }
}
