use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Vector};
use crate::limits::Limits;

/// Which group of tensor-factor permutations defines `H^0` and `H_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryChoice {
    /// `Z/p` generated by the cyclic shift.
    Cyclic,
    /// The full symmetric group, generated by all transpositions.
    Symmetric,
}

/// `V^{⊗p}` for `dim V = d`, with basis tensors indexed by tuples in
/// Kronecker order (first factor most significant).
#[derive(Clone, Debug)]
pub struct TensorPowerAction {
    field: Field,
    dim: usize,
    power: usize,
    shift: Matrix,
}

impl TensorPowerAction {
    /// The `p`-th tensor power, `p` the characteristic of `field`.
    pub fn new(field: Field, dim: usize, limits: &Limits) -> Result<Self> {
        let p = field.characteristic() as usize;
        if p == 0 {
            return Err(Error::CharacteristicZero("tensor power action needs a prime characteristic".into()));
        }
        match dim.checked_pow(p as u32) {
            Some(n) if n <= limits.max_tensor_dim => {}
            _ => {
                return Err(Error::SizeCap(format!(
                    "{dim}^{p} exceeds the tensor dimension cap {}",
                    limits.max_tensor_dim
                )))
            }
        }
        let mut t = TensorPowerAction { field, dim, power: p, shift: Matrix::identity(field, 1) };
        t.shift = t.position_action(&(0..p).map(|k| (k + 1) % p).collect::<Vec<_>>());
        Ok(t)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn base_dim(&self) -> usize {
        self.dim
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn tensor_dim(&self) -> usize {
        self.dim.pow(self.power as u32)
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.power];
        for k in (0..self.power).rev() {
            t[k] = index % self.dim;
            index /= self.dim;
        }
        t
    }

    /// Moves the factor in position `k` to position `perm[k]`.
    pub fn position_action(&self, perm: &[usize]) -> Matrix {
        let n = self.tensor_dim();
        let target: Vec<usize> = (0..n)
            .map(|src| {
                let t = self.tuple(src);
                let mut moved = vec![0; self.power];
                for (k, &i) in t.iter().enumerate() {
                    moved[perm[k]] = i;
                }
                self.index(&moved)
            })
            .collect();
        Matrix::from_fn(self.field, n, n, |i, j| Scalar::from_i64(self.field, (target[j] == i) as i64))
    }

    /// `σ = (1 2 .. p)`: `v1 ⊗ .. ⊗ vp ↦ vp ⊗ v1 ⊗ .. ⊗ v_{p-1}`.
    pub fn shift(&self) -> &Matrix {
        &self.shift
    }

    /// Generators of the chosen permutation group acting on `V^{⊗p}`.
    pub fn generators(&self, choice: SymmetryChoice) -> Vec<Matrix> {
        match choice {
            SymmetryChoice::Cyclic => vec![self.shift.clone()],
            SymmetryChoice::Symmetric => {
                let p = self.power;
                let mut out = Vec::new();
                for a in 0..p {
                    for b in a + 1..p {
                        let mut perm: Vec<usize> = (0..p).collect();
                        perm.swap(a, b);
                        out.push(self.position_action(&perm));
                    }
                }
                out
            }
        }
    }

    /// `v ⊗ .. ⊗ v`.
    pub fn pure_power(&self, v: &[Scalar]) -> Vector {
        (0..self.tensor_dim())
            .map(|idx| self.tuple(idx).iter().fold(Scalar::one(self.field), |acc, &i| acc * &v[i]))
            .collect()
    }

    /// `A^{⊗p}`.
    pub fn power_of(&self, a: &Matrix) -> Matrix {
        a.kronecker_power(self.power)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_has_order_p() {
        for (f, d) in [(Field::finite(2, 1).unwrap(), 3), (Field::finite(3, 1).unwrap(), 2), (Field::finite(5, 1).unwrap(), 2)] {
            let t = TensorPowerAction::new(f, d, &Limits::default()).unwrap();
            let s = t.shift();
            assert!(!s.is_identity());
            assert!(s.pow(t.power() as u64).is_identity());
        }
    }

    #[test]
    fn shift_rotates_tuples() {
        let t = TensorPowerAction::new(Field::finite(3, 1).unwrap(), 3, &Limits::default()).unwrap();
        let src = t.index(&[0, 1, 2]);
        let col = t.shift().column(src);
        assert!(col[t.index(&[2, 0, 1])].is_one());
    }

    #[test]
    fn caps_and_characteristic() {
        assert!(matches!(
            TensorPowerAction::new(Field::Rational, 2, &Limits::default()),
            Err(Error::CharacteristicZero(_))
        ));
        assert!(matches!(
            TensorPowerAction::new(Field::finite(3, 1).unwrap(), 7, &Limits::default()),
            Err(Error::SizeCap(_))
        ));
    }

    #[test]
    fn pure_power_is_kronecker() {
        let f = Field::finite(2, 2).unwrap();
        let t = TensorPowerAction::new(f, 2, &Limits::default()).unwrap();
        let Field::Finite(ff) = f else { unreachable!() };
        let v = vec![Scalar::one(f), Scalar::generator(ff)];
        let col = Matrix::from_columns(f, 2, &[v.clone()]);
        assert_eq!(t.pure_power(&v), t.power_of(&col).column(0));
    }
}
