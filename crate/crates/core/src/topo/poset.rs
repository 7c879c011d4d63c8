use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite poset with the Alexandrov topology: open sets are up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    less: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl FinitePoset {
    /// The order generated by `relations` (pairs `x < y`), transitively
    /// closed. Fails on cycles.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut less = vec![vec![false; n]; n];
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation ({x}, {y}) outside {n} points")));
            }
            less[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| less[x][x]) {
            return Err(Error::InvalidPoset(format!("relations contain a cycle through {}", names[x])));
        }
        let covers = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| less[x][y] && !(0..n).any(|z| less[x][z] && less[z][y]))
            .collect();
        Ok(FinitePoset { names, less, covers })
    }

    /// Points named by strings, with relations given by name.
    pub fn from_names(names: &[&str], relations: &[(&str, &str)]) -> Result<Self> {
        let idx = |s: &str| {
            names.iter().position(|n| *n == s).ok_or_else(|| Error::InvalidPoset(format!("unknown point `{s}`")))
        };
        let rel = relations.iter().map(|&(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
        Self::new(names.iter().map(|s| s.to_string()).collect(), &rel)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::InvalidPoset(format!("unknown point `{name}`")))
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.less[x][y]
    }

    /// Covering pairs `x ⋖ y`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_index(&self, x: usize, y: usize) -> Option<usize> {
        self.covers.binary_search(&(x, y)).ok()
    }

    /// All strict relations `x < y`: the edges of the order complex.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| self.less[x][y]).collect()
    }

    /// Chains `x < y < z`: the 2-simplices of the order complex.
    pub fn chains3(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (x, y) in self.relations() {
            for z in 0..self.len() {
                if self.less[y][z] {
                    out.push((x, y, z));
                }
            }
        }
        out
    }

    /// `↑x`, the smallest open neighbourhood of `x`.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.le(x, y)).collect()
    }

    /// Union of `↑x` over the given points.
    pub fn up_closure(&self, points: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&y| points.iter().any(|&x| self.le(x, y))).collect()
    }

    pub fn is_open(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| x < self.len() && (0..self.len()).all(|y| !self.less[x][y] || set.contains(&y)))
    }

    /// Connectedness of a subset in the comparability graph.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else { return false };
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in set {
                if !seen[y] && (self.less[x][y] || self.less[y][x]) {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count == set.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(&(0..self.len()).collect::<Vec<_>>())
    }

    /// The subposet on `set` (sorted), and `set` as the index map.
    pub fn induced(&self, set: &[usize]) -> Result<(FinitePoset, Vec<usize>)> {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.iter().any(|&x| x >= self.len()) {
            return Err(Error::InvalidPoset("subset outside the poset".into()));
        }
        let names = set.iter().map(|&x| self.names[x].clone()).collect();
        let rel: Vec<(usize, usize)> = (0..set.len())
            .flat_map(|i| (0..set.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.less[set[i]][set[j]])
            .collect();
        Ok((FinitePoset::new(names, &rel)?, set))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> FinitePoset {
        FinitePoset::from_names(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap()
    }

    #[test]
    fn order_axioms_exhaustive() {
        let p = FinitePoset::from_names(&["x", "y", "z", "w"], &[("x", "y"), ("y", "z"), ("x", "w")]).unwrap();
        let n = p.len();
        for a in 0..n {
            assert!(!p.lt(a, a));
            for b in 0..n {
                assert!(!(p.lt(a, b) && p.lt(b, a)));
                for c in 0..n {
                    if p.lt(a, b) && p.lt(b, c) {
                        assert!(p.lt(a, c));
                    }
                }
            }
        }
        assert_eq!(p.covers(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(p.chains3(), vec![(0, 1, 2)]);
    }

    #[test]
    fn cycles_rejected() {
        assert!(matches!(
            FinitePoset::from_names(&["x", "y"], &[("x", "y"), ("y", "x")]),
            Err(Error::InvalidPoset(_))
        ));
    }

    #[test]
    fn opens_are_up_sets() {
        let p = circle();
        assert!(p.is_open(&p.up_set(0)));
        assert!(p.is_open(&[2, 3]));
        assert!(!p.is_open(&[0, 2]));
        assert!(p.is_connected());
        assert!(!p.is_connected_subset(&[2, 3]));
    }
}
