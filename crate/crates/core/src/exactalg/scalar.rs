use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::field::{Field, FiniteField};
use crate::error::{Error, Result};

/// An element of `F_{p^m}` stored as polynomial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FfElem {
    field: FiniteField,
    coeffs: [u32; 3],
}

impl FfElem {
    pub fn new(field: FiniteField, coeffs: &[u32]) -> Result<Self> {
        let m = field.degree() as usize;
        if coeffs.len() != m {
            return Err(Error::Parse(format!(
                "expected {m} coefficients for {field}, got {}",
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= field.characteristic()) {
            return Err(Error::Parse(format!("coefficient {c} outside [0, {})", field.characteristic())));
        }
        let mut arr = [0u32; 3];
        arr[..m].copy_from_slice(coeffs);
        Ok(FfElem { field, coeffs: arr })
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.field.degree() as usize]
    }

    fn from_int(field: FiniteField, n: i64) -> Self {
        let p = field.characteristic() as i64;
        let mut coeffs = [0u32; 3];
        coeffs[0] = n.rem_euclid(p) as u32;
        FfElem { field, coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn add(&self, o: &Self) -> Self {
        let p = self.field.characteristic();
        let mut coeffs = [0u32; 3];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = ((self.coeffs[i] as u64 + o.coeffs[i] as u64) % p as u64) as u32;
        }
        FfElem { field: self.field, coeffs }
    }

    fn neg(&self) -> Self {
        let p = self.field.characteristic();
        let mut coeffs = [0u32; 3];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = (p - self.coeffs[i]) % p;
        }
        FfElem { field: self.field, coeffs }
    }

    fn mul(&self, o: &Self) -> Self {
        let m = self.field.degree() as usize;
        let p = self.field.characteristic() as u64;
        let mut raw = [0u64; 5];
        for i in 0..m {
            for j in 0..m {
                raw[i + j] = (raw[i + j] + self.coeffs[i] as u64 * o.coeffs[j] as u64) % p;
            }
        }
        FfElem { field: self.field, coeffs: self.field.reduce(&raw[..2 * m - 1]) }
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = FfElem::from_int(self.field, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            // Multiplicative group has order q - 1.
            Some(self.pow(self.field.order() - 2))
        }
    }
}

/// An exact field element: a rational number or an element of `F_{p^m}`.
///
/// Serialized as `a/b` for rationals and `p^m:[c0,c1,...]` for finite-field
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Finite(FfElem),
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Finite(f) => Scalar::Finite(FfElem::from_int(f, n)),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Finite-field element from its coefficient vector.
    pub fn finite(field: FiniteField, coeffs: &[u32]) -> Result<Self> {
        Ok(Scalar::Finite(FfElem::new(field, coeffs)?))
    }

    /// The polynomial generator `t` of `F_{p^m}`, `m >= 2`.
    pub fn generator(field: FiniteField) -> Self {
        let mut c = vec![0u32; field.degree() as usize];
        if c.len() >= 2 {
            c[1] = 1;
        } else {
            c[0] = 1;
        }
        Scalar::finite(field, &c).expect("valid coefficients")
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Finite(e) => Field::Finite(e.field),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Finite(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Finite(e) => e.inv().map(Scalar::Finite),
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= r;
                }
                Scalar::Rational(acc)
            }
            Scalar::Finite(x) => Scalar::Finite(x.pow(e)),
        }
    }

    /// The `p`-power map `x -> x^p`, computed by repeated multiplication.
    pub fn frobenius(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Err(Error::CharacteristicZero(
                "frobenius needs a field of positive characteristic".into(),
            )),
            Scalar::Finite(x) => {
                let mut acc = FfElem::from_int(x.field, 1);
                for _ in 0..x.field.characteristic() {
                    acc = acc.mul(x);
                }
                Ok(Scalar::Finite(acc))
            }
        }
    }

    /// Inverse of the Frobenius automorphism (`x -> x^{p^{m-1}}`).
    pub fn frobenius_inverse(&self) -> Result<Scalar> {
        let mut x = self.clone();
        match self.field() {
            Field::Rational => return Err(Error::CharacteristicZero("no frobenius on Q".into())),
            Field::Finite(f) => {
                for _ in 1..f.degree() {
                    x = x.frobenius()?;
                }
            }
        }
        Ok(x)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Finite(_) => None,
        }
    }

    /// Uniform element for finite fields; a small fraction `a/b` with
    /// `|a| <= 5`, `1 <= b <= 3` over `Q`.
    pub fn random<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
        match field {
            Field::Rational => Scalar::rational(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
            Field::Finite(f) => {
                let c: Vec<u32> =
                    (0..f.degree()).map(|_| rng.gen_range(0..f.characteristic())).collect();
                Scalar::finite(f, &c).expect("in range")
            }
        }
    }

    /// All elements of a finite field in coefficient-lexicographic order.
    pub fn all_elements(field: FiniteField) -> Vec<Scalar> {
        let p = field.characteristic() as u64;
        let m = field.degree() as usize;
        (0..field.order())
            .map(|mut code| {
                let mut c = vec![0u32; m];
                for x in c.iter_mut() {
                    *x = (code % p) as u32;
                    code /= p;
                }
                Scalar::finite(field, &c).expect("in range")
            })
            .collect()
    }

    /// Human-oriented rendering: integers without denominator, `F_p`
    /// elements as plain residues.
    pub fn pretty(&self) -> String {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.numer().to_string(),
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Finite(e) if e.field.degree() == 1 => e.coeffs[0].to_string(),
            Scalar::Finite(e) => {
                let terms: Vec<String> = e
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match (i, c) {
                        (0, c) => c.to_string(),
                        (1, 1) => "t".to_string(),
                        (1, c) => format!("{c}t"),
                        (i, 1) => format!("t^{i}"),
                        (i, c) => format!("{c}t^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }

    fn check_same(&self, o: &Scalar) {
        assert_eq!(self.field(), o.field(), "scalar field mismatch");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Finite(e) => {
                let cs: Vec<String> = e.coeffs().iter().map(|c| c.to_string()).collect();
                write!(f, "{}:[{}]", e.field, cs.join(","))
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((head, body)) = s.split_once(':') {
            let field = match Field::parse(head)? {
                Field::Finite(f) => f,
                Field::Rational => return Err(Error::Parse(format!("bad field prefix in `{s}`"))),
            };
            let body = body
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [c0,...] in `{s}`")))?;
            let coeffs = body
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coefficient in `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            return Scalar::finite(field, &coeffs);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let den: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.check_same(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a.add(b)),
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.check_same(o);
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a.mul(b)),
            _ => unreachable!(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Finite(a) => Scalar::Finite(a.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &'a Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Sign of a rational scalar; `None` over finite fields.
    pub fn signum(&self) -> Option<i32> {
        self.as_rational().map(|r| {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FiniteField {
        FiniteField::new(2, 2).unwrap()
    }
    fn f9() -> FiniteField {
        FiniteField::new(3, 2).unwrap()
    }

    #[test]
    fn frobenius_prime_field_fixed() {
        let f2 = FiniteField::prime(2).unwrap();
        let one = Scalar::one(Field::Finite(f2));
        assert_eq!(one.frobenius().unwrap(), one);
    }

    #[test]
    fn frobenius_f4_generator() {
        // t^2 = t + 1 modulo t^2 + t + 1.
        let t = Scalar::generator(f4());
        assert_eq!(t.frobenius().unwrap(), Scalar::finite(f4(), &[1, 1]).unwrap());
    }

    #[test]
    fn frobenius_f9_generator() {
        // t^3 = -t = 2t modulo t^2 + 1.
        let t = Scalar::generator(f9());
        assert_eq!(t.frobenius().unwrap(), Scalar::finite(f9(), &[0, 2]).unwrap());
    }

    #[test]
    fn frobenius_rejects_rationals() {
        assert!(matches!(Scalar::rational(1, 2).frobenius(), Err(Error::CharacteristicZero(_))));
    }

    #[test]
    fn frobenius_is_a_ring_map_exhaustive() {
        for f in [f4(), f9()] {
            let els = Scalar::all_elements(f);
            for a in &els {
                for b in &els {
                    let fa = a.frobenius().unwrap();
                    let fb = b.frobenius().unwrap();
                    assert_eq!((a + b).frobenius().unwrap(), &fa + &fb);
                    assert_eq!((a * b).frobenius().unwrap(), &fa * &fb);
                }
            }
        }
    }

    #[test]
    fn frobenius_inverse_roundtrip() {
        for a in Scalar::all_elements(FiniteField::new(2, 3).unwrap()) {
            assert_eq!(a.frobenius().unwrap().frobenius_inverse().unwrap(), a);
        }
    }

    #[test]
    fn inverses_exhaustive() {
        for f in [f4(), f9(), FiniteField::new(2, 3).unwrap(), FiniteField::prime(7).unwrap()] {
            let one = Scalar::one(Field::Finite(f));
            for a in Scalar::all_elements(f) {
                match a.inv() {
                    None => assert!(a.is_zero()),
                    Some(b) => assert_eq!(&a * &b, one),
                }
            }
        }
    }

    #[test]
    fn rationals_lowest_terms() {
        let x: Scalar = "6/-4".parse().unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(Scalar::rational(2, 4).to_string(), "1/2");
    }

    #[test]
    fn serialization_roundtrip() {
        let x = Scalar::finite(f9(), &[2, 1]).unwrap();
        assert_eq!(x.to_string(), "3^2:[2,1]");
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        assert_eq!("5".parse::<Scalar>().unwrap().to_string(), "5/1");
        assert!("2^2:[0,2]".parse::<Scalar>().is_err());
        assert!("2^2:[0]".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn pretty_rendering() {
        assert_eq!(Scalar::rational(3, 1).pretty(), "3");
        assert_eq!(Scalar::finite(f4(), &[1, 1]).unwrap().pretty(), "1+t");
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_fields_panic() {
        let _ = &Scalar::rational(1, 1) + &Scalar::one(Field::Finite(f4()));
    }
}
