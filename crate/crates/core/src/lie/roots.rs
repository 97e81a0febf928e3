//! Root systems of types A, B, D in the ε-coordinates.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    D,
}

impl RootType {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(RootType::A),
            "B" => Some(RootType::B),
            "D" => Some(RootType::D),
            _ => None,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the ε-basis.
    pub eps: Vec<i64>,
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub root_type: RootType,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    /// Ordered by height, then by simple-root coefficients in decreasing lexicographic order.
    pub positive_roots: Vec<Root>,
    pub cartan_matrix: Vec<Vec<i64>>,
}

fn unit(dim: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = sign;
    v
}

fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl RootSystem {
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        let min_rank = match root_type {
            RootType::A => 1,
            RootType::B | RootType::D => 2,
        };
        if rank < min_rank {
            return Err(Error::UnsupportedRank(format!("{root_type}{rank}")));
        }
        let dim = match root_type {
            RootType::A => rank + 1,
            _ => rank,
        };
        let diff = |i: usize, j: usize| plus(&unit(dim, i, 1), &unit(dim, j, -1));
        let sum = |i: usize, j: usize| plus(&unit(dim, i, 1), &unit(dim, j, 1));

        let mut simple: Vec<Vec<i64>> = (0..dim - 1).map(|i| diff(i, i + 1)).collect();
        match root_type {
            RootType::A => {}
            RootType::B => simple.push(unit(dim, dim - 1, 1)),
            RootType::D => simple.push(sum(dim - 2, dim - 1)),
        }

        let mut eps_roots: Vec<Vec<i64>> = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                eps_roots.push(diff(i, j));
                if root_type != RootType::A {
                    eps_roots.push(sum(i, j));
                }
            }
            if root_type == RootType::B {
                eps_roots.push(unit(dim, i, 1));
            }
        }

        // simple-root coefficients by growing from the simple roots one step at a time
        let mut known: Vec<Root> = simple
            .iter()
            .enumerate()
            .map(|(i, s)| Root { eps: s.clone(), coeffs: unit(rank, i, 1) })
            .collect();
        let mut frontier = known.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for (i, s) in simple.iter().enumerate() {
                    let e = plus(&r.eps, s);
                    if eps_roots.contains(&e) && !known.iter().any(|k| k.eps == e) && !next.iter().any(|k: &Root| k.eps == e) {
                        let mut coeffs = r.coeffs.clone();
                        coeffs[i] += 1;
                        next.push(Root { eps: e, coeffs });
                    }
                }
            }
            known.extend(next.iter().cloned());
            frontier = next;
        }
        assert_eq!(known.len(), eps_roots.len(), "positive roots not generated by simple roots");
        known.sort_by_key(|r| (r.height(), Reverse(r.coeffs.clone())));

        let inner = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let cartan_matrix = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * inner(&simple[i], &simple[j]) / inner(&simple[j], &simple[j])).collect())
            .collect();

        Ok(RootSystem { root_type, rank, simple_roots: simple, positive_roots: known, cartan_matrix })
    }

    /// Standard inner product in ε-coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    pub fn simple_inner(&self, i: usize, j: usize) -> i64 {
        self.inner(&self.simple_roots[i], &self.simple_roots[j])
    }

    /// Index of the positive root with the given simple-root coefficients.
    pub fn index_of_coeffs(&self, coeffs: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r.coeffs == coeffs)
    }

    pub fn index_of_eps(&self, eps: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r.eps == eps)
    }

    /// Index of the simple root `α_i` in the positive root list.
    pub fn simple_index(&self, i: usize) -> usize {
        self.index_of_coeffs(&unit(self.rank, i, 1)).expect("simple root present")
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.root_type, self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(RootSystem::new(RootType::A, 2).unwrap().num_positive(), 3);
        assert_eq!(RootSystem::new(RootType::A, 3).unwrap().num_positive(), 6);
        assert_eq!(RootSystem::new(RootType::B, 2).unwrap().num_positive(), 4);
        assert_eq!(RootSystem::new(RootType::D, 4).unwrap().num_positive(), 12);
        assert!(RootSystem::new(RootType::A, 0).is_err());
    }

    #[test]
    fn a2_order_and_cartan() {
        let rs = RootSystem::new(RootType::A, 2).unwrap();
        let c: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(c, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.cartan_matrix, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn d4_last_simple_root() {
        let rs = RootSystem::new(RootType::D, 4).unwrap();
        assert_eq!(rs.simple_roots[3], vec![0, 0, 1, 1]);
        assert_eq!(rs.cartan_matrix[1], vec![-1, 2, -1, -1]);
        let b = RootSystem::new(RootType::B, 3).unwrap();
        assert_eq!(b.cartan_matrix[1][2], -2);
        assert_eq!(b.cartan_matrix[2][1], -1);
    }
}
