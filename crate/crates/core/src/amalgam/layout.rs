use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{AmalgamPresentation, Factor};
use crate::limits::Limits;

/// Coordinates of truncated elements: one grid per index sequence of
/// length `<= N`, sequences ordered by length and then lexicographically
/// (factor 1 before factor 2), grids row-major over element indices.
///
/// Because of the length-first order, the coordinates of degree `<= k`
/// form a prefix `0..prefix_len(k)`.
#[derive(Clone, Debug)]
pub struct Layout {
    presentation: Arc<AmalgamPresentation>,
    degree: usize,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    pub fn new(presentation: Arc<AmalgamPresentation>, degree: usize) -> Result<Self> {
        Self::with_limits(presentation, degree, &Limits::default())
    }

    pub fn with_limits(presentation: Arc<AmalgamPresentation>, degree: usize, limits: &Limits) -> Result<Self> {
        if degree > limits.max_degree {
            return Err(Error::SizeCap(format!("degree {degree} exceeds cap {}", limits.max_degree)));
        }
        let orders = [presentation.factor(Factor::One).order(), presentation.factor(Factor::Two).order()];
        let mut offsets = Vec::new();
        let mut total = 0usize;
        for n in 0..=degree {
            for code in 0..(1usize << n) {
                offsets.push(total);
                let size = (0..n).try_fold(1usize, |acc, k| acc.checked_mul(orders[(code >> (n - 1 - k)) & 1]));
                total = size
                    .and_then(|s| total.checked_add(s))
                    .filter(|&t| t <= limits.max_coordinates)
                    .ok_or_else(|| {
                        Error::SizeCap(format!(
                            "degree {degree} needs more than {} coordinates",
                            limits.max_coordinates
                        ))
                    })?;
            }
        }
        Ok(Layout { presentation, degree, offsets, total })
    }

    pub fn presentation(&self) -> &Arc<AmalgamPresentation> {
        &self.presentation
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Total number of coordinates.
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn sequence_count(&self) -> usize {
        self.offsets.len()
    }

    /// Number of coordinates of degree `<= k`.
    pub fn prefix_len(&self, k: usize) -> usize {
        if k >= self.degree {
            self.total
        } else {
            self.offsets[(1usize << (k + 1)) - 1]
        }
    }

    pub fn sequence_index(&self, seq: &[Factor]) -> usize {
        let code = seq.iter().fold(0usize, |acc, f| (acc << 1) | (*f as usize));
        (1usize << seq.len()) - 1 + code
    }

    pub fn sequence(&self, index: usize) -> Vec<Factor> {
        let n = (usize::BITS - (index + 1).leading_zeros() - 1) as usize;
        let code = index + 1 - (1usize << n);
        (0..n).map(|k| if (code >> (n - 1 - k)) & 1 == 0 { Factor::One } else { Factor::Two }).collect()
    }

    /// All sequences in layout order.
    pub fn sequences(&self) -> impl Iterator<Item = Vec<Factor>> + '_ {
        (0..self.sequence_count()).map(|i| self.sequence(i))
    }

    pub fn grid_size(&self, index: usize) -> usize {
        let end = self.offsets.get(index + 1).copied().unwrap_or(self.total);
        end - self.offsets[index]
    }

    pub fn offset(&self, index: usize) -> usize {
        self.offsets[index]
    }

    fn orders(&self, seq: &[Factor]) -> Vec<usize> {
        seq.iter().map(|&f| self.presentation.factor(f).order()).collect()
    }

    /// Coordinate of `f_seq(tuple)`.
    pub fn coord(&self, seq: &[Factor], tuple: &[usize]) -> usize {
        debug_assert_eq!(seq.len(), tuple.len());
        let idx = self.sequence_index(seq);
        let local = seq
            .iter()
            .zip(tuple)
            .fold(0usize, |acc, (&f, &g)| acc * self.presentation.factor(f).order() + g);
        self.offsets[idx] + local
    }

    /// Inverse of [`Layout::coord`].
    pub fn decode(&self, coord: usize) -> (Vec<Factor>, Vec<usize>) {
        // Grids are never empty, so offsets increase strictly.
        let idx = match self.offsets.binary_search(&coord) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let seq = self.sequence(idx);
        let tuple = self.tuple(&seq, coord - self.offsets[idx]);
        (seq, tuple)
    }

    /// Row-major decoding of a local grid index.
    pub fn tuple(&self, seq: &[Factor], mut local: usize) -> Vec<usize> {
        let orders = self.orders(seq);
        let mut t = vec![0; seq.len()];
        for k in (0..seq.len()).rev() {
            t[k] = local % orders[k];
            local /= orders[k];
        }
        t
    }

    /// All tuples of a sequence, row-major.
    pub fn tuples(&self, seq: &[Factor]) -> impl Iterator<Item = Vec<usize>> + '_ {
        let seq = seq.to_vec();
        let size: usize = self.orders(&seq).iter().product();
        (0..size).map(move |i| self.tuple(&seq, i))
    }

    pub fn same_shape(&self, o: &Layout) -> bool {
        self.degree == o.degree
            && self.presentation.factor(Factor::One) == o.presentation.factor(Factor::One)
            && self.presentation.factor(Factor::Two) == o.presentation.factor(Factor::Two)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn c2_free_layout() {
        let c2 = Arc::new(FiniteGroup::cyclic(2));
        let p = Arc::new(AmalgamPresentation::free("C2*C2", c2.clone(), c2));
        let l = Layout::new(p, 2).unwrap();
        assert_eq!(l.len(), 1 + 4 + 16);
        assert_eq!(l.prefix_len(0), 1);
        assert_eq!(l.prefix_len(1), 5);
        let seq = vec![Factor::Two, Factor::One];
        assert_eq!(l.sequence(l.sequence_index(&seq)), seq);
        for c in 0..l.len() {
            let (s, t) = l.decode(c);
            assert_eq!(l.coord(&s, &t), c);
        }
    }

    #[test]
    fn size_cap() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let p = Arc::new(AmalgamPresentation::free("S3*S3", s3.clone(), s3));
        let small = Limits { max_coordinates: 1000, ..Limits::default() };
        assert!(matches!(Layout::with_limits(p, 3, &small), Err(Error::SizeCap(_))));
    }
}
