use std::fmt;

use crate::error::{Error, Result};

/// A finite field `F_{p^m}` in a polynomial basis, `m <= 3`.
///
/// Elements are coefficient vectors `c0 + c1 t + c2 t^2` reduced modulo a
/// fixed monic irreducible polynomial. The moduli are fixed:
///
/// | field | modulus      |
/// |-------|--------------|
/// | F_4   | t^2 + t + 1  |
/// | F_9   | t^2 + 1      |
/// | F_8   | t^3 + t + 1  |
///
/// Any other `(p, m)` with `m >= 2` uses the lexicographically smallest monic
/// irreducible polynomial of degree `m` over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u32,
    m: u8,
    // Lower coefficients of the monic modulus: t^m = -(modulus[0] + modulus[1] t + ...).
    modulus: [u32; 3],
}

/// Largest characteristic accepted; keeps all products inside `u64`.
pub const MAX_CHARACTERISTIC: u32 = 1 << 20;

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, m: u8) -> Result<Self> {
        if !is_prime(p) || p > MAX_CHARACTERISTIC {
            return Err(Error::UnsupportedField(format!("{p} is not a supported prime")));
        }
        if !(1..=3).contains(&m) {
            return Err(Error::UnsupportedField(format!("degree {m} outside 1..=3")));
        }
        let modulus = match (p, m) {
            (_, 1) => [0, 0, 0],
            (2, 2) => [1, 1, 0],
            (3, 2) => [1, 0, 0],
            (2, 3) => [1, 1, 0],
            _ => smallest_irreducible(p, m),
        };
        Ok(FiniteField { p, m, modulus })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.m
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m as u32)
    }

    /// Lower coefficients of the monic modulus polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus[..self.m as usize]
    }

    pub(crate) fn reduce(&self, raw: &[u64]) -> [u32; 3] {
        let p = self.p as u64;
        let m = self.m as usize;
        let mut c: Vec<u64> = raw.iter().map(|x| x % p).collect();
        // Eliminate from the top degree down.
        let mut deg = c.len();
        while deg > m {
            deg -= 1;
            let top = c[deg] % p;
            if top != 0 {
                for (i, &mc) in self.modulus[..m].iter().enumerate() {
                    let idx = deg - m + i;
                    c[idx] = (c[idx] + (p - top) * (mc as u64 % p)) % p;
                }
            }
            c[deg] = 0;
        }
        let mut out = [0u32; 3];
        for (i, v) in c.iter().take(m).enumerate() {
            out[i] = (*v % p) as u32;
        }
        out
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.m)
    }
}

fn smallest_irreducible(p: u32, m: u8) -> [u32; 3] {
    // Degree <= 3: irreducible iff no root in F_p.
    let p64 = p as u64;
    let m = m as usize;
    let total = p64.pow(m as u32);
    for code in 0..total {
        let mut coeffs = [0u32; 3];
        let mut x = code;
        for c in coeffs.iter_mut().take(m) {
            *c = (x % p64) as u32;
            x /= p64;
        }
        if coeffs[0] == 0 {
            continue;
        }
        let has_root = (0..p64).any(|r| {
            let mut val = 1u64; // leading coefficient
            for i in (0..m).rev() {
                val = (val * r + coeffs[i] as u64) % p64;
            }
            val == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} exists over F_{p}")
}

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Finite(FiniteField),
}

impl Field {
    pub fn finite(p: u32, m: u8) -> Result<Self> {
        Ok(Field::Finite(FiniteField::new(p, m)?))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Finite(f) => f.characteristic(),
        }
    }

    /// Parses `q` or `p^m` (also plain `p`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let (p, m) = match s.split_once('^') {
            Some((p, m)) => (p, m),
            None => (s, "1"),
        };
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in field `{s}`")))?;
        let m: u8 = m
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in field `{s}`")))?;
        Field::finite(p, m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Finite(ff) => write!(f, "{ff}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_moduli() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0]);
    }

    #[test]
    fn searched_modulus_is_irreducible() {
        // F_25: smallest monic irreducible quadratic over F_5 is t^2 + 2.
        assert_eq!(FiniteField::new(5, 2).unwrap().modulus(), &[2, 0]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 4).is_err());
        assert!(FiniteField::new(2, 0).is_err());
    }

    #[test]
    fn parse_field() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("2^2").unwrap(), Field::finite(2, 2).unwrap());
        assert_eq!(Field::parse("7").unwrap(), Field::finite(7, 1).unwrap());
        assert!(Field::parse("x").is_err());
    }
}
